"""Exact rational cones attached to simple root systems.

The central object is the open polyhedral cone of root-coordinate vectors
cut out by the pairwise fundamental-weight-coefficient inequalities, with
its closure, face lattice indexed by Dynkin-edge orientations, extremal
rays, the associated hyperplane arrangements, cross-section polytopes, and
a general feasibility-based membership test. All arithmetic is exact.
"""

from ._backend import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
