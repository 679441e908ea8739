"""Exact calculus for monomial quiver algebras.

ncalc builds the minimal model of a quiver with monomial relations from
its overlap chains, then computes Hochschild cohomology/homology and the
attached operations (Gerstenhaber bracket, cup product, Connes boundary,
cap and Lie actions, cyclic homology) on small exact complexes, with a
bar-resolution oracle for cross-checking.
"""

__version__ = "0.1.0"
