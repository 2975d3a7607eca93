"""Bicrossproduct Hopf algebras from exact factorizations of permutation groups."""

from .factorization import ExactFactorization, MatchedPair, matched_pair, verify_exact_factorization
from .hopf import HopfAlgebra, build_bicrossproduct, dual_hopf, verify_hopf_axioms
from .permcore import PermGroup, build_bsgs, compose, inverse

__all__ = [
    "ExactFactorization", "HopfAlgebra", "MatchedPair", "PermGroup", "build_bicrossproduct",
    "build_bsgs", "compose", "dual_hopf", "inverse", "matched_pair", "verify_exact_factorization",
    "verify_hopf_axioms",
]
