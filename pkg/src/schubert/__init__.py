"""Schubert points attached to row-strict tableaux."""
