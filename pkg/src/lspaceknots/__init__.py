"""Combinatorial toolkit for (1,1) L-space knots: exact torus diagrams,
coherence checking, the one-bridge braid normal form, Alexander polynomial
cross-validation, knot group presentations, and positive-cone certificates."""

__version__ = "0.1.0"
