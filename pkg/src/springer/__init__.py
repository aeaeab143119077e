"""Springer fibers described through row-strict tableaux."""
