"""Exact classification of discretely decomposable restrictions to symmetric pairs.

The engine decides, for a reductive symmetric pair (g, g^sigma), whether some
infinite-dimensional irreducible Harish-Chandra module of g restricts discretely
to g^sigma.  The decision runs entirely in exact rational arithmetic on the
weight lattice of a maximal torus of the maximal compact subalgebra: the verdict
is controlled by whether the involution sends the highest non-compact root to
its negative.
"""

__version__ = "0.1.0"

ENGINE_VERSION = __version__
SCHEMA_VERSION = 1
