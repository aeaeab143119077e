"""Theorem-level checks and scans over families of partitions."""
