"""Exact computation with signed permutations, conjugation racks,
Yetter-Drinfeld braidings and Nichols-algebra graded dimensions."""

from .groups import Bn, GroupContext, Permutation, SignedPermutation, Sn

__all__ = ["Bn", "Sn", "GroupContext", "Permutation", "SignedPermutation"]
__version__ = "0.1.0"
