"""Permutation groups: BSGS construction, orbits, stabilizers, coset actions.

Permutations are tuples of 0-based images.  ``compose(p, q)`` is ``p`` after
``q``, i.e. ``x -> p[q[x]]``.  Everything here is deterministic: the same
generator list always yields the same base, transversals and generators.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

Perm = tuple  # tuple[int, ...]

DEFAULT_ORBIT_BOUND = 10**6


class InputError(ValueError):
    """Malformed or inconsistent input (bad permutation, degree mismatch...)."""


class ResourceError(RuntimeError):
    """A configured enumeration bound would be exceeded."""


# --------------------------------------------------------------------------
# permutations

def identity(n: int) -> Perm:
    return tuple(range(n))


def check_perm(images: Sequence[int]) -> Perm:
    p = tuple(int(i) for i in images)
    if sorted(p) != list(range(len(p))):
        raise InputError(f"not a permutation of 0..{len(p) - 1}: {list(images)}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p o q`` (apply ``q`` first)."""
    if len(p) != len(q):
        raise InputError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(map(p.__getitem__, q))


def _mul(p: Perm, q: Perm) -> Perm:
    # unchecked compose for inner loops
    return tuple(map(p.__getitem__, q))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def commutator(p: Perm, q: Perm) -> Perm:
    """``p^-1 q^-1 p q``."""
    return _mul(_mul(inverse(p), inverse(q)), _mul(p, q))


def first_moved_point(p: Perm) -> int | None:
    for i, j in enumerate(p):
        if i != j:
            return i
    return None


def parity(p: Perm) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(p)
    transpositions = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        transpositions += length - 1
    return transpositions % 2


def to_cycles(p: Perm, one_based: bool = True) -> str:
    off = 1 if one_based else 0
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = p[j]
        out.append("(" + " ".join(str(c + off) for c in cycle) + ")")
    return "".join(out) or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None, one_based: bool = True) -> Perm:
    """Parse cycle notation such as ``"(1 2)(3 4 5)"``.

    Cycles are composed right to left, as in ``compose``.
    """
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise InputError(f"cannot parse cycle notation {text!r}")
    off = 1 if one_based else 0
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        items = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            cycle = [int(t) - off for t in items]
        except ValueError:
            raise InputError(f"non-integer point in {text!r}") from None
        if any(c < 0 for c in cycle) or len(set(cycle)) != len(cycle):
            raise InputError(f"invalid cycle ({body}) in {text!r}")
        cycles.append(cycle)
    n = max((max(c) + 1 for c in cycles if c), default=0)
    if degree is None:
        degree = n
    elif n > degree:
        raise InputError(f"cycle notation {text!r} moves points beyond degree {degree}")
    result = identity(degree)
    for cycle in cycles:
        images = list(range(degree))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
        result = _mul(result, tuple(images))
    return result


def parse_perm(obj, degree: int | None = None) -> Perm:
    """Accept a JSON image array or a 1-based cycle string."""
    if isinstance(obj, str):
        return parse_cycles(obj, degree)
    if not isinstance(obj, (list, tuple)):
        raise InputError(f"permutation must be an array or cycle string, got {type(obj).__name__}")
    p = check_perm(obj)
    if degree is not None and len(p) != degree:
        raise InputError(f"permutation has degree {len(p)}, expected {degree}")
    return p


# --------------------------------------------------------------------------
# stabilizer chains

@dataclass(frozen=True)
class Level:
    """One level of a stabilizer chain.

    ``transversal[o]`` maps ``point`` to ``o`` and lies in the stabilizer of
    all earlier base points.  ``orbit`` lists points in discovery order.
    """

    point: int
    generators: tuple
    orbit: tuple
    transversal: dict
    inverses: dict = field(repr=False)


def _orbit_transversal(point: int, gens: Sequence[Perm], n: int) -> tuple[tuple, dict]:
    u = {point: identity(n)}
    orbit = [point]
    for p in orbit:
        up = u[p]
        for s in gens:
            q = s[p]
            if q not in u:
                u[q] = _mul(s, up)
                orbit.append(q)
    return tuple(orbit), u


def _make_level(point: int, gens: Sequence[Perm], n: int) -> Level:
    orbit, u = _orbit_transversal(point, gens, n)
    inv = {o: inverse(t) for o, t in u.items()}
    return Level(point, tuple(gens), orbit, u, inv)


def _sift(levels: Sequence[Level], h: Perm, start: int = 0) -> tuple[Perm, int]:
    for j in range(start, len(levels)):
        lv = levels[j]
        beta = h[lv.point]
        inv = lv.inverses.get(beta)
        if inv is None:
            return h, j
        h = _mul(inv, h)
    return h, len(levels)


def _fixes(p: Perm, points: Iterable[int]) -> bool:
    return all(p[b] == b for b in points)


def _schreier_sims(n: int, gens: list[Perm], base_prefix: Sequence[int]) -> tuple[list, list, list]:
    base = list(base_prefix)
    strong: list[Perm] = []
    for g in gens:
        if is_identity(g) or g in strong:
            continue
        strong.append(g)
        if _fixes(g, base):
            base.append(first_moved_point(g))

    def level_gens(i):
        return [s for s in strong if _fixes(s, base[:i])]

    levels = [_make_level(base[i], level_gens(i), n) for i in range(len(base))]
    i = len(base) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        for beta in lv.orbit:
            u_beta = lv.transversal[beta]
            for s in lv.generators:
                h = _mul(lv.inverses[s[beta]], _mul(s, u_beta))
                if is_identity(h):
                    continue
                residue, j = _sift(levels, h, i + 1)
                if is_identity(residue):
                    continue
                if j == len(levels):
                    base.append(first_moved_point(residue))
                    levels.append(None)
                strong.append(residue)
                for l in range(i + 1, j + 1):
                    old = levels[l].generators if levels[l] is not None else ()
                    levels[l] = _make_level(base[l], list(old) + [residue], n)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    # canonical form: each level generated by every strong generator fixing the prefix
    levels = [_make_level(base[i], level_gens(i), n) for i in range(len(base))]
    return base, strong, levels


class PermGroup:
    """A permutation group stored as a base and strong generating set."""

    def __init__(self, degree: int, generators: Sequence[Perm], base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if len(g) != degree:
                raise InputError(f"generator of degree {len(g)} in a group of degree {degree}")
        for b in base_prefix:
            if not 0 <= b < degree:
                raise InputError(f"base point {b} out of range")
        base, strong, levels = _schreier_sims(degree, list(self.generators), base_prefix)
        self.base = tuple(base)
        self.strong_generators = tuple(strong)
        self.levels = tuple(levels)
        self._order = math.prod(len(lv.orbit) for lv in self.levels)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self._order}, gens={len(self.generators)})"

    def order(self) -> int:
        return self._order

    def identity(self) -> Perm:
        return identity(self.degree)

    def is_trivial(self) -> bool:
        return self._order == 1

    def sift(self, p: Perm) -> tuple[Perm, int]:
        return _sift(self.levels, p)

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            raise InputError(f"degree mismatch: {len(p)} vs group degree {self.degree}")
        residue, _ = _sift(self.levels, tuple(p))
        return is_identity(residue)

    def transversal_sizes(self) -> list[int]:
        return [len(lv.orbit) for lv in self.levels]

    def stabilizer_generators(self, depth: int) -> list[Perm]:
        """Strong generators fixing the first ``depth`` base points."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].generators)

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once (ordered by transversal indices)."""
        if not self.levels:
            yield self.identity()
            return
        choices = [[lv.transversal[o] for o in lv.orbit] for lv in self.levels]
        for combo in itertools.product(*choices):
            g = combo[0]
            for u in combo[1:]:
                g = _mul(g, u)
            yield g

    def random_element(self, rng) -> Perm:
        g = self.identity()
        for lv in self.levels:
            g = _mul(g, lv.transversal[rng.choice(lv.orbit)])
        return g

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(_mul(a, b) == _mul(b, a) for a, b in itertools.combinations(gens, 2))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return self._order == other._order and self.is_subgroup_of(other)

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x in seen:
                continue
            orb, _ = _orbit_transversal(x, self.generators, self.degree)
            seen.update(orb)
            out.append(tuple(sorted(orb)))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators]}


def build_bsgs(generators: Sequence[Perm], degree: int | None = None,
               base_prefix: Sequence[int] = ()) -> PermGroup:
    """Deterministic Schreier-Sims on ``generators``."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise InputError("an empty generator list needs an explicit degree")
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise InputError(f"generator degrees disagree: {len(g)} vs {degree}")
        check_perm(g)
    return PermGroup(degree, gens, base_prefix)


def order(group: PermGroup) -> int:
    return group.order()


def contains(group: PermGroup, p: Perm) -> bool:
    return group.contains(p)


def subgroup_from_candidates(degree: int, candidates: Iterable[Perm],
                             target_order: int | None = None,
                             seed: Sequence[Perm] = ()) -> PermGroup:
    """Group generated by ``seed`` and ``candidates``, keeping only the
    candidates that enlarge it.

    Stops consuming candidates once ``target_order`` is reached; callers pass
    a target only when they know the candidates generate a subgroup of that
    order exactly.
    """
    kept = [tuple(s) for s in seed]
    group = PermGroup(degree, kept)
    for h in candidates:
        if target_order is not None and group.order() >= target_order:
            break
        if not group.contains(h):
            kept.append(h)
            group = PermGroup(degree, kept, group.base)
    if target_order is not None and group.order() != target_order:
        raise ArithmeticError(
            f"generated subgroup has order {group.order()}, expected {target_order}")
    return group


def reduce_generators(group: PermGroup) -> PermGroup:
    """Same group on a non-redundant subset of its strong generators."""
    return subgroup_from_candidates(group.degree, group.strong_generators, group.order())


def pointwise_stabilizer(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """Stabilizer of every point in ``points`` via a rebased stabilizer chain."""
    if not points:
        return group
    rebased = PermGroup(group.degree, group.strong_generators, list(points))
    sub = PermGroup(group.degree, rebased.stabilizer_generators(len(points)))
    return reduce_generators(sub)


def point_stabilizer(group: PermGroup, x: int) -> PermGroup:
    if not 0 <= x < group.degree:
        raise InputError(f"point {x} out of range for degree {group.degree}")
    return pointwise_stabilizer(group, [x])


def derived_subgroup(group: PermGroup) -> PermGroup:
    """Normal closure of the generator commutators."""
    n = group.degree
    gens = group.generators
    seeds = []
    for a, b in itertools.combinations(gens, 2):
        c = commutator(a, b)
        if not is_identity(c):
            seeds.append(c)
    kept: list[Perm] = []
    sub = PermGroup(n, [])
    queue: list[Perm] = []
    for c in seeds:
        if not sub.contains(c):
            kept.append(c)
            sub = PermGroup(n, kept, sub.base)
            queue.append(c)
    target = group.order()
    while queue and sub.order() < target:
        c = queue.pop(0)
        for g in gens:
            conj = _mul(_mul(inverse(g), c), g)
            if not sub.contains(conj):
                kept.append(conj)
                sub = PermGroup(n, kept, sub.base)
                queue.append(conj)
    if sub.order() == target:
        return group
    return sub


def is_perfect(group: PermGroup) -> bool:
    return derived_subgroup(group).order() == group.order()


def abelianization_order(group: PermGroup) -> int:
    return group.order() // derived_subgroup(group).order()


# --------------------------------------------------------------------------
# actions

class GroupAction:
    """A permutation action of a degree-``degree`` group on some objects."""

    degree: int
    domain_size: int

    def act(self, g: Perm, x: Hashable) -> Hashable:
        raise NotImplementedError

    def label(self, x: Hashable):
        return x

    def enumerated(self) -> bool:
        return False

    def objects(self) -> Iterable[Hashable]:
        raise ResourceError(f"{type(self).__name__} does not enumerate its domain")


class NaturalAction(GroupAction):
    def __init__(self, degree: int):
        self.degree = degree
        self.domain_size = degree

    def act(self, g, x):
        return g[x]

    def enumerated(self):
        return True

    def objects(self):
        return range(self.degree)


class SubsetAction(GroupAction):
    """Action on ``k``-subsets, represented as sorted tuples."""

    def __init__(self, degree: int, k: int):
        self.degree = degree
        self.k = k
        self.domain_size = math.comb(degree, k)

    def act(self, g, x):
        return tuple(sorted(g[i] for i in x))


class CosetAction(GroupAction):
    """Left multiplication of ``G`` on the left cosets ``xH``.

    Cosets are numbered by discovery order from the identity coset (index 0)
    and labelled by canonical representatives: the coset element whose
    images of H's base points are lexicographically smallest.
    """

    def __init__(self, G: PermGroup, H: PermGroup, bound: int = DEFAULT_ORBIT_BOUND):
        if G.degree != H.degree:
            raise InputError("coset action needs groups of equal degree")
        for h in H.generators:
            if not G.contains(h):
                raise InputError("H is not a subgroup of G: a generator of H is not in G")
        index = G.order() // H.order()
        if index > bound:
            raise ResourceError(f"index {index} exceeds coset enumeration bound {bound}")
        self.G = G
        self.H = H
        self.degree = G.degree
        self._chain = [(lv.orbit, lv.transversal) for lv in H.levels]
        start = self.canonical(G.identity())
        reps = [start]
        lookup = {start: 0}
        for rep in reps:
            for s in G.generators:
                c = self.canonical(_mul(s, rep))
                if c not in lookup:
                    lookup[c] = len(reps)
                    reps.append(c)
        if len(reps) != index:
            raise ArithmeticError(f"enumerated {len(reps)} cosets, expected index {index}")
        self.representatives = reps
        self.index = lookup
        self.domain_size = len(reps)
        self._tables: OrderedDict = OrderedDict()

    def canonical(self, x: Perm) -> Perm:
        g = x
        for orbit, transversal in self._chain:
            best = min(orbit, key=g.__getitem__)
            g = _mul(g, transversal[best])
        return g

    def table(self, g: Perm) -> tuple:
        """The permutation of coset indices induced by ``g`` (cached)."""
        tab = self._tables.get(g)
        if tab is None:
            canon = self.canonical
            lookup = self.index
            tab = tuple(lookup[canon(_mul(g, r))] for r in self.representatives)
            self._tables[g] = tab
            if len(self._tables) > 64:
                self._tables.popitem(last=False)
        return tab

    def act(self, g, x):
        tab = self._tables.get(g)
        if tab is not None:
            return tab[x]
        return self.index[self.canonical(_mul(g, self.representatives[x]))]

    def label(self, x):
        return self.representatives[x]

    def enumerated(self):
        return True

    def objects(self):
        return range(self.domain_size)


def coset_action(G: PermGroup, H: PermGroup, bound: int = DEFAULT_ORBIT_BOUND) -> CosetAction:
    return CosetAction(G, H, bound)


@dataclass
class Orbit:
    points: list
    transversal: dict  # point -> group element carrying the start point there

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return x in self.transversal


def orbit(G: PermGroup, action: GroupAction, x, bound: int = DEFAULT_ORBIT_BOUND) -> Orbit:
    """Orbit of ``x`` with a transversal, by breadth-first search."""
    if isinstance(action, (NaturalAction, CosetAction)) and not 0 <= x < action.domain_size:
        raise InputError(f"object {x} out of range for domain of size {action.domain_size}")
    gens = G.generators
    tables = [action.table(s) for s in gens] if isinstance(action, CosetAction) else None
    u = {x: G.identity()}
    points = [x]
    for p in points:
        up = u[p]
        for k, s in enumerate(gens):
            q = tables[k][p] if tables is not None else action.act(s, p)
            if q not in u:
                u[q] = _mul(s, up)
                points.append(q)
                if len(points) > bound:
                    raise ResourceError(f"orbit exceeds enumeration bound {bound}")
    return Orbit(points, u)


def _schreier_generators(G: PermGroup, action: GroupAction, orb: Orbit) -> Iterator[Perm]:
    gens = G.generators
    tables = [action.table(s) for s in gens] if isinstance(action, CosetAction) else None
    inv_cache: dict = {}
    for p in orb.points:
        up = orb.transversal[p]
        for k, s in enumerate(gens):
            q = tables[k][p] if tables is not None else action.act(s, p)
            uq_inv = inv_cache.get(q)
            if uq_inv is None:
                uq_inv = inv_cache[q] = inverse(orb.transversal[q])
            h = _mul(uq_inv, _mul(s, up))
            if not is_identity(h):
                yield h


def action_stabilizer(G: PermGroup, action: GroupAction, x, orb: Orbit | None = None,
                      bound: int = DEFAULT_ORBIT_BOUND) -> PermGroup:
    """Stabilizer of ``x`` generated by Schreier generators.

    Generators are sifted in a fixed order and collection stops as soon as the
    subgroup reaches ``|G| / |orbit|``.
    """
    if orb is None:
        orb = orbit(G, action, x, bound)
    target, rem = divmod(G.order(), len(orb))
    if rem:
        raise ArithmeticError("orbit length does not divide the group order")
    return subgroup_from_candidates(G.degree, _schreier_generators(G, action, orb), target)


def fixed_point_count(H: PermGroup, action: GroupAction) -> int:
    """Number of objects fixed by every generator of ``H``."""
    if not action.enumerated():
        raise ResourceError("fixed points need an enumerated action")
    if isinstance(action, CosetAction):
        tables = [action.table(h) for h in H.generators]
        return sum(1 for x in range(action.domain_size) if all(t[x] == x for t in tables))
    return sum(1 for x in action.objects() if all(action.act(h, x) == x for h in H.generators))


def orbit_partition(G: PermGroup, action: GroupAction) -> list[list]:
    """All orbits of ``G`` on an enumerated domain, each listed from its least object."""
    if not action.enumerated():
        raise ResourceError("orbit partition needs an enumerated action")
    seen: set = set()
    out = []
    for x in action.objects():
        if x in seen:
            continue
        orb = orbit(G, action, x)
        seen.update(orb.points)
        out.append(orb.points)
    return out


def conjugacy_class_count(group: PermGroup) -> int:
    """Class number by closing each element under conjugation (small groups)."""
    seen: set = set()
    classes = 0
    gens = group.generators
    invs = [inverse(s) for s in gens]
    for g in group.elements():
        if g in seen:
            continue
        classes += 1
        seen.add(g)
        queue = [g]
        for x in queue:
            for s, si in zip(gens, invs):
                y = _mul(_mul(s, x), si)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return classes


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return build_bsgs([], n)
    gens = [parse_cycles("(1 2)", n), tuple(list(range(1, n)) + [0])]
    return build_bsgs(gens)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return build_bsgs([], n)
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        cycle = list(range(n)) if n % 2 else list(range(1, n))
        images = list(range(n))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
        gens.append(tuple(images))
    return build_bsgs(gens)


def cyclic_group(n: int, degree: int | None = None) -> PermGroup:
    degree = n if degree is None else degree
    images = list(range(degree))
    for i in range(n):
        images[i] = (i + 1) % n
    return build_bsgs([tuple(images)], degree)
