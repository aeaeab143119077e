"""Deleting a simple reflection from a Schubert point and renormalising."""
