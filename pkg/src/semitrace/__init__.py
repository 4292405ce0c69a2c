"""Canonical trace ideals and residues of numerical semigroups."""

__version__ = "0.1.0"
