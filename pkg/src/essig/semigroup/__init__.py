"""Closed-form essential sets, projections, inequality systems and decompositions."""
