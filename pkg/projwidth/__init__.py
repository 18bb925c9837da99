"""Widths and odd cycle transversals of projective-plane quadrangulations."""

__version__ = "0.1.0"
