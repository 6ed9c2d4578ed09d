"""Sufficient conditions, closed-form thresholds, the extremal construction and the σ oracle."""
