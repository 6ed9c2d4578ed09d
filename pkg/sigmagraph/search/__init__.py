"""Searches over realizations: containment, completion, potential properties, 2-switches."""
