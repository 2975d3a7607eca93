"""Exact factorizations G = G1 G2 and their matched-pair actions.

Every element splits uniquely as ``g = a o b`` with ``a`` in G1 and ``b`` in
G2 (G1 part first).  The matched pair is read off from ``b o a``:

    b o a = (b |> a) o (b <| a),   b |> a in G1,  b <| a in G2.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Sequence

from .permcore import (
    DEFAULT_ORBIT_BOUND,
    CosetAction,
    InputError,
    Perm,
    PermGroup,
    ResourceError,
    _mul,
    build_bsgs,
    coset_action,
    inverse,
    orbit,
)

log = logging.getLogger(__name__)

DEFAULT_MATERIALIZATION_BOUND = 10**4


class FactorizationError(Exception):
    """The triple is not an exact factorization."""


@dataclass
class ExactFactorization:
    G: PermGroup
    G1: PermGroup
    G2: PermGroup
    index: int  # |G : G1|, also the size of the G2-orbit on G/G1
    g1_elements: list = field(default_factory=list)
    g2_elements: list = field(default_factory=list)
    decomposition: dict = field(default_factory=dict, repr=False)
    coset_action: CosetAction | None = field(default=None, repr=False)

    @property
    def materialized(self) -> bool:
        return bool(self.decomposition)

    def __post_init__(self):
        self.g1_index = {a: i for i, a in enumerate(self.g1_elements)}
        self.g2_index = {b: j for j, b in enumerate(self.g2_elements)}

    def swapped(self) -> "ExactFactorization":
        """The factorization (G, G2, G1), obtained by inverting elements."""
        return verify_exact_factorization(self.G, self.G2, self.G1, materialize=self.materialized,
                                          materialization_bound=max(self.G.order(), 1))

    def report(self) -> dict:
        return {
            "valid": True,
            "order_G": self.G.order(),
            "order_G1": self.G1.order(),
            "order_G2": self.G2.order(),
            "index_G_G1": self.index,
            "g2_orbit_on_cosets": self.index,
            "materialized": self.materialized,
        }


def verify_exact_factorization(G: PermGroup, G1: PermGroup, G2: PermGroup,
                               materialize: bool | None = None,
                               materialization_bound: int = DEFAULT_MATERIALIZATION_BOUND,
                               coset_bound: int = DEFAULT_ORBIT_BOUND,
                               action: CosetAction | None = None) -> ExactFactorization:
    """Check |G| = |G1||G2| and that G2 is transitive on G/G1.

    ``materialize=None`` builds the decomposition table whenever
    ``|G| <= materialization_bound``.  A precomputed ``coset_action(G, G1)``
    may be passed as ``action``.
    """
    for name, H in (("G1", G1), ("G2", G2)):
        if H.degree != G.degree:
            raise InputError(f"{name} has degree {H.degree}, G has degree {G.degree}")
        if not H.is_subgroup_of(G):
            raise InputError(f"{name} is not a subgroup of G")
    if G.order() != G1.order() * G2.order():
        raise FactorizationError(
            f"not an exact factorization (order): {G.order()} != {G1.order()} * {G2.order()}")
    if action is None:
        action = coset_action(G, G1, coset_bound)
    elif action.G is not G or action.H is not G1:
        raise InputError("action is not the coset action of G on G/G1")
    reached = len(orbit(G2, action, 0, coset_bound))
    if reached != action.domain_size:
        raise FactorizationError(
            f"not an exact factorization (coverage): G2 reaches {reached} of {action.domain_size} cosets")
    if materialize is None:
        materialize = G.order() <= materialization_bound
    elif materialize and G.order() > materialization_bound:
        raise ResourceError(f"|G| = {G.order()} exceeds materialization bound {materialization_bound}")
    f = ExactFactorization(G, G1, G2, action.domain_size, coset_action=action)
    if materialize:
        _materialize(f)
    return f


def _materialize(f: ExactFactorization) -> None:
    g1 = sorted(f.G1.elements())
    g2 = sorted(f.G2.elements())
    table = {}
    for i, a in enumerate(g1):
        for j, b in enumerate(g2):
            table[_mul(a, b)] = (i, j)
    if len(table) != f.G.order():
        raise FactorizationError("decomposition is not a bijection G <-> G1 x G2")
    f.g1_elements = g1
    f.g2_elements = g2
    f.decomposition = table
    f.__post_init__()


def decompose(f: ExactFactorization, g: Perm) -> tuple[Perm, Perm]:
    """The unique ``(a, b)`` with ``a o b = g``."""
    if not f.materialized:
        raise InputError("factorization is not materialized")
    try:
        i, j = f.decomposition[tuple(g)]
    except KeyError:
        raise InputError("element is not in G") from None
    return f.g1_elements[i], f.g2_elements[j]


@dataclass
class MatchedPair:
    """``triangle[b][a]`` is the G1 index of ``b |> a``; ``square[b][a]`` the
    G2 index of ``b <| a`` (all arguments are indices)."""

    triangle: list
    square: list

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.triangle), len(self.triangle[0]) if self.triangle else 0


class MatchedPairError(ArithmeticError):
    pass


def matched_pair(f: ExactFactorization, exhaustive_limit: int = 10**7,
                 samples: int = 10**4, seed: int = 0) -> MatchedPair:
    if not f.materialized:
        raise InputError("factorization is not materialized")
    n1, n2 = len(f.g1_elements), len(f.g2_elements)
    tri = [[0] * n1 for _ in range(n2)]
    sq = [[0] * n1 for _ in range(n2)]
    for j, b in enumerate(f.g2_elements):
        for i, a in enumerate(f.g1_elements):
            ti, sj = f.decomposition[_mul(b, a)]
            tri[j][i] = ti
            sq[j][i] = sj
    mp = MatchedPair(tri, sq)
    _check_matched_pair(f, mp, exhaustive_limit, samples, seed)
    return mp


def _check_matched_pair(f, mp, exhaustive_limit, samples, seed):
    n1, n2 = len(f.g1_elements), len(f.g2_elements)
    m1 = _mult_table(f.g1_elements, f.g1_index)
    m2 = _mult_table(f.g2_elements, f.g2_index)
    tri, sq = mp.triangle, mp.square
    for i in range(n1):
        if tri[0][i] != i or sq[0][i] != 0:
            raise MatchedPairError("identity of G2 does not act trivially")
    for j in range(n2):
        if sq[j][0] != j or tri[j][0] != 0:
            raise MatchedPairError("identity of G1 does not act trivially")

    def check(b, b2, a, a2):
        # b |> (a a2) = (b |> a)((b <| a) |> a2)
        if tri[b][m1[a][a2]] != m1[tri[b][a]][tri[sq[b][a]][a2]]:
            raise MatchedPairError(f"left compatibility fails at b={b}, a={a}, a'={a2}")
        # (b2 b) <| a = (b2 <| (b |> a))(b <| a)
        if sq[m2[b2][b]][a] != m2[sq[b2][tri[b][a]]][sq[b][a]]:
            raise MatchedPairError(f"right compatibility fails at b'={b2}, b={b}, a={a}")

    if n1 * n2 * max(n1, n2) <= exhaustive_limit:
        for b in range(n2):
            for a in range(n1):
                for a2 in range(n1):
                    check(b, b, a, a2)
                for b2 in range(n2):
                    check(b, b2, a, a)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            check(rng.randrange(n2), rng.randrange(n2), rng.randrange(n1), rng.randrange(n1))


def _mult_table(elements, index):
    return [[index[_mul(x, y)] for y in elements] for x in elements]


def find_factorizations(G: PermGroup, candidates: Sequence[tuple[Sequence[Perm], Sequence[Perm]]],
                        errors: list | None = None, **kwargs) -> list[ExactFactorization]:
    """Keep the caller-supplied ``(G1 generators, G2 generators)`` pairs that
    factor ``G`` exactly.  Failures go to ``errors`` when given."""
    hits = []
    for k, (gens1, gens2) in enumerate(candidates):
        try:
            G1 = build_bsgs(gens1, G.degree)
            G2 = build_bsgs(gens2, G.degree)
            hits.append(verify_exact_factorization(G, G1, G2, **kwargs))
        except (FactorizationError, InputError) as exc:
            log.debug("candidate %d rejected: %s", k, exc)
            if errors is not None:
                errors.append((k, str(exc)))
    return hits


def inverse_map(elements: Sequence[Perm], index: dict) -> list[int]:
    return [index[inverse(x)] for x in elements]
