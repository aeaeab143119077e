"""Tests for schubert-points."""
