"""Degree sequences, labeled graphs and pattern specifications."""
