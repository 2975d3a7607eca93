"""M24, PSL(2,23) and the octad-flag subgroup as degree-24 permutation groups,
and the certificate that M24 = PSL(2,23) . (2^4:A7) is an exact factorization
into perfect self-normalizing subgroups.

Points are the projective line over F_23: ``k`` is the residue ``k`` for
``0 <= k <= 22`` and ``23`` is infinity.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .factorization import ExactFactorization, FactorizationError, verify_exact_factorization
from .hopf import rep_census, theorem23_counts
from .permcore import (
    Perm,
    PermGroup,
    SubsetAction,
    _mul,
    action_stabilizer,
    build_bsgs,
    coset_action,
    fixed_point_count,
    inverse,
    is_perfect,
    orbit,
    parse_cycles,
    point_stabilizer,
    pointwise_stabilizer,
)

P = 23
INF = 23
DEGREE = 24
M24_ORDER = 244823040  # 2^10 3^3 5 7 11 23
PSL_ORDER = 6072
G2_ORDER = 40320
OCTAD_STABILIZER_ORDER = 322560
OCTAD_COUNT = 759

FAULTS = {
    "m24-generator": "m24_order",
    "g1-perfect": "g1_perfect",
    "g2-perfect": "g2_perfect",
    "octad": "octad_orbit",
    "exact-factorization": "exact_factorization",
    "g1-self-normalizing": "g1_self_normalizing",
    "g2-self-normalizing": "g2_self_normalizing",
    "theorem23": "theorem23_counts",
}


class CertificateFailure(Exception):
    """A gating step failed; the group handed to later steps cannot be trusted."""


def _inv(x: int) -> int:
    return pow(x, P - 2, P)


def _perm(f: Callable[[int], int]) -> Perm:
    return tuple(f(x) for x in range(DEGREE))


def translation() -> Perm:
    """``x -> x + 1``: a 23-cycle on the residues fixing infinity."""
    return _perm(lambda x: INF if x == INF else (x + 1) % P)


def negative_reciprocal() -> Perm:
    """``x -> -1/x``, swapping 0 and infinity."""
    return _perm(lambda x: 0 if x == INF else INF if x == 0 else (-_inv(x)) % P)


_SQUARES = {x * x % P for x in range(1, P)}


def cubic_map() -> Perm:
    """``x -> x^3 / 9`` on nonzero squares, ``x -> 9 x^3`` on non-squares;
    fixes 0 and infinity.  Together with PSL(2,23) it generates M24."""
    def f(x):
        if x in (0, INF):
            return x
        if x in _SQUARES:
            return pow(x, 3, P) * _inv(9) % P
        return 9 * pow(x, 3, P) % P
    return _perm(f)


def build_psl2_23() -> PermGroup:
    G1 = build_bsgs([translation(), negative_reciprocal()])
    if G1.order() != PSL_ORDER:
        raise CertificateFailure(f"PSL(2,23) generators give order {G1.order()}")
    return G1


def m24_generators() -> list[Perm]:
    return [translation(), negative_reciprocal(), cubic_map()]


def build_m24(generators: list[Perm] | None = None) -> PermGroup:
    G = build_bsgs(generators or m24_generators())
    if G.order() != M24_ORDER:
        raise CertificateFailure(f"M24 generators give order {G.order()}, expected {M24_ORDER}")
    return G


@dataclass
class OctadData:
    octad: tuple
    five_point_stabilizer_order: int
    orbit_sizes: list


def find_octad(G: PermGroup) -> OctadData:
    """The block of S(5,8,24) through points 0..4.

    The pointwise stabilizer of five points has order 48 and orbits of sizes
    3 and 16 on the other 19 points; the 3-orbit completes the octad.
    """
    five = (0, 1, 2, 3, 4)
    K = pointwise_stabilizer(G, five)
    orbits = [o for o in K.orbits() if o[0] not in five or len(o) > 1]
    sizes = sorted(len(o) for o in orbits)
    if K.order() != 48 or sizes != [3, 16]:
        raise CertificateFailure(f"5-point stabilizer has order {K.order()} and orbits {sizes}")
    completion = next(o for o in orbits if len(o) == 3)
    return OctadData(tuple(sorted(five + tuple(completion))), K.order(), sizes)


def octad_orbit(G: PermGroup, octad: tuple):
    return orbit(G, SubsetAction(DEGREE, 8), tuple(octad))


def octad_stabilizer(G: PermGroup, octad: tuple, orb=None) -> PermGroup:
    return action_stabilizer(G, SubsetAction(DEGREE, 8), tuple(octad), orb)


def build_g2(G: PermGroup, octad: tuple, orb=None) -> PermGroup:
    """Stabilizer of the flag (point ``octad[0]``, octad): order 2^4 |A7|."""
    stab = octad_stabilizer(G, octad, orb)
    if stab.order() != OCTAD_STABILIZER_ORDER:
        raise CertificateFailure(f"octad stabilizer has order {stab.order()}")
    G2 = point_stabilizer(stab, octad[0])
    if G2.order() != G2_ORDER:
        raise CertificateFailure(f"flag stabilizer has order {G2.order()}")
    return G2


def elementary_abelian_kernel(G2: PermGroup, octad: tuple) -> PermGroup:
    """Pointwise stabilizer of the octad inside G2."""
    return pointwise_stabilizer(G2, list(octad))


# --------------------------------------------------------------------------
# certificate

@dataclass
class Check:
    name: str
    claim: str
    computed: object = None
    expected: object = None
    status: str = "skipped"  # pass | fail | skipped | info
    seconds: float = 0.0
    gating: bool = True

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "computed": _jsonable(self.computed),
                "expected": _jsonable(self.expected), "status": self.status,
                "gating": self.gating, "seconds": round(self.seconds, 3)}


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class CertificateReport:
    checks: list = field(default_factory=list)
    census: dict | None = None
    fault: str | None = None

    @property
    def passed(self) -> bool:
        gating = [c for c in self.checks if c.gating]
        return bool(gating) and all(c.passed for c in gating)

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self, timings: bool = True) -> dict:
        checks = [c.to_json() for c in self.checks]
        if not timings:
            for c in checks:
                c.pop("seconds")
        out = {"theorem": "M24 = G1 G2 exact, G1 ~ PSL(2,23), G2 ~ 2^4:A7, both perfect and "
                          "self-normalizing; H(M24, G1, G2) is biperfect",
               "all_pass": self.passed, "fault_injected": self.fault, "checks": checks}
        if self.census is not None:
            out["census"] = dict(self.census)
            if not timings:
                out["census"].pop("seconds", None)
        return out

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP", "info": "INFO"}[c.status]
            lines.append(f"[{tag}] {c.name}: {c.claim} -- computed {c.computed}, expected {c.expected}"
                         f" ({c.seconds:.2f}s)")
        if self.census is not None:
            lines.append(f"census: {self.census['orbits']} G1-orbits on G/G1, sizes "
                         f"{self.census['orbit_size_multiset']}, sum {self.census['sum_orbit_sizes']}, "
                         f"sum |G1||O| = {self.census['dim_sq_sum']}")
        lines.append("CERTIFIED" if self.passed else "NOT CERTIFIED")
        return "\n".join(lines)


class _Runner:
    def __init__(self, report: CertificateReport):
        self.report = report
        self.halted = False

    def check(self, name, claim, expected, compute, gating=True):
        chk = Check(name, claim, expected=expected, gating=gating)
        self.report.checks.append(chk)
        if self.halted:
            return None
        t = time.perf_counter()
        try:
            chk.computed = compute()
            if gating:
                chk.status = "pass" if chk.computed == expected else "fail"
            else:
                chk.status = "info"
        except CertificateFailure as exc:
            chk.computed = str(exc)
            chk.status = "fail"
        chk.seconds = time.perf_counter() - t
        return chk.computed

    def require(self, *names):
        """Stop running checks if any of ``names`` failed."""
        if any(self.report.get(n).status == "fail" for n in names):
            self.halted = True


def _tampered_generator() -> Perm:
    g = list(cubic_map())
    g[1], g[2] = g[2], g[1]
    return tuple(g)


def _odd_element() -> Perm:
    return parse_cycles("(1 2)", DEGREE)


def certify(census: bool = False, fault: str | None = None) -> CertificateReport:
    """Run every step of the M24 certificate; never raises on a failed claim."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {sorted(FAULTS)}")
    report = CertificateReport(fault=fault)
    run = _Runner(report)
    state: dict = {}

    def make_g():
        gens = m24_generators()
        if fault == "m24-generator":
            gens[2] = _tampered_generator()
        G = build_bsgs(gens)
        state["G"] = G
        return G.order()

    run.check("m24_order", "|G| = 2^10 3^3 5 7 11 23", M24_ORDER, make_g)
    run.require("m24_order")
    G = state.get("G")
    run.check("m24_transitive", "G is transitive on 24 points", True, lambda: G.is_transitive())

    def make_g1():
        state["G1"] = build_bsgs([translation(), negative_reciprocal()])
        return state["G1"].order()

    run.check("g1_order", "|G1| = |PSL(2,23)| = 23 (23^2 - 1) / 2", PSL_ORDER, make_g1)
    run.require("g1_order")
    G1 = state.get("G1")
    run.check("g1_in_g", "the generators of G1 lie in G", True,
              lambda: all(G.contains(g) for g in G1.generators))
    run.check("g1_transitive", "G1 is transitive on 24 points", True, lambda: G1.is_transitive())
    run.require("g1_in_g")

    def g1_perfect():
        H = G1
        if fault == "g1-perfect":
            H = build_bsgs(list(G1.generators) + [_odd_element()])
        return is_perfect(H)

    run.check("g1_perfect", "G1 is perfect", True, g1_perfect)

    def octad_5():
        data = find_octad(G)
        state["octad"] = data.octad
        return [data.five_point_stabilizer_order, data.orbit_sizes]

    run.check("octad_five_point_stabilizer", "stabilizer of points 0..4 has order 48, orbits {3, 16}",
              [48, [3, 16]], octad_5)
    run.require("octad_five_point_stabilizer")

    def octad_orb():
        orb = octad_orbit(G, state["octad"])
        state["octad_orbit"] = orb
        if fault == "octad":
            wrong = tuple(sorted(state["octad"][:7] + (next(x for x in range(DEGREE) if x not in state["octad"]),)))
            return len(octad_orbit(G, wrong))
        return len(orb)

    run.check("octad_orbit", "the octad lies in an orbit of 759 blocks", OCTAD_COUNT, octad_orb)

    def octad_stab():
        stab = octad_stabilizer(G, state["octad"], state["octad_orbit"])
        return stab.order()

    run.check("octad_stabilizer", "octad stabilizer order = |G| / 759", OCTAD_STABILIZER_ORDER, octad_stab)
    run.require("octad_stabilizer")

    def make_g2():
        state["G2"] = build_g2(G, state["octad"], state["octad_orbit"])
        return state["G2"].order()

    run.check("g2_order", "|G2| = 2^4 |A7| (stabilizer of a point-octad flag)", G2_ORDER, make_g2)
    run.require("g2_order")
    G2 = state.get("G2")

    def g2_perfect():
        H = G2
        if fault == "g2-perfect":
            H = build_bsgs(list(G2.generators) + [_odd_element()])
        return is_perfect(H)

    run.check("g2_perfect", "G2 is perfect", True, g2_perfect)
    run.check("g2_normal_2_4", "G2 fixing the octad pointwise is normal of order 16", True,
              lambda: _kernel_info(G2, state["octad"]), gating=False)
    run.check("order_product", "|G1| |G2| = |G|", M24_ORDER, lambda: G1.order() * G2.order())

    def cosets_g1():
        state["act1"] = coset_action(G, G1)
        return state["act1"].domain_size

    run.check("cosets_g1", "|G : G1| cosets enumerated", G2_ORDER, cosets_g1)
    run.require("cosets_g1")

    def exact():
        H = G2
        if fault == "exact-factorization":
            H = point_stabilizer(G2, G2.base[0])
        try:
            f = verify_exact_factorization(G, G1, H, materialize=False, action=state["act1"])
        except FactorizationError as exc:
            return str(exc)
        if H is G2:
            state["factorization"] = f
        return f.index

    run.check("exact_factorization", "G2 is transitive on the 40320 cosets G/G1", G2_ORDER, exact)

    def fixed1():
        H = G1
        if fault == "g1-self-normalizing":
            H = build_bsgs([negative_reciprocal()])
        return fixed_point_count(H, state["act1"])

    run.check("g1_self_normalizing", "G1 fixes exactly one coset of G/G1", 1, fixed1)

    def cosets_g2():
        state["act2"] = coset_action(G, G2)
        return state["act2"].domain_size

    run.check("cosets_g2", "|G : G2| cosets enumerated", PSL_ORDER, cosets_g2)
    run.require("cosets_g2")

    def fixed2():
        H = G2
        if fault == "g2-self-normalizing":
            other = next(x for x in state["octad"] if x != state["octad"][0])
            H = point_stabilizer(G2, other)
        return fixed_point_count(H, state["act2"])

    run.check("g2_self_normalizing", "G2 fixes exactly one coset of G/G2", 1, fixed2)

    def counts():
        f = ExactFactorization(G, G1, G2, state["act1"].domain_size, coset_action=state["act1"])
        actions = (state["act1"], state["act2"])
        if fault == "theorem23":
            # M22 has index 552 and normalizer M22:2, so two fixed cosets
            M22 = pointwise_stabilizer(G, [0, 1])
            f = ExactFactorization(G, M22, G2, 0)
            actions = (coset_action(G, M22), state["act2"])
        c = theorem23_counts(f, actions=actions)
        return [c.one_dim_H, c.one_dim_Hdual]

    run.check("theorem23_counts", "H and its dual have one 1-dim representation each", [1, 1], counts)

    if census and not run.halted and "factorization" in state:
        t = time.perf_counter()
        report.census = rep_census(state["factorization"], action=state["act1"]).to_json()
        report.census.pop("entries")
        report.census["seconds"] = round(time.perf_counter() - t, 3)
    return report


def _kernel_info(G2: PermGroup, octad: tuple) -> bool:
    E = elementary_abelian_kernel(G2, octad)
    normal = all(E.contains(_conj(g, e)) for g in G2.generators for e in E.generators)
    return E.order() == 16 and E.is_abelian() and normal


def _conj(g: Perm, e: Perm) -> Perm:
    return _mul(_mul(inverse(g), e), g)


def octad_summary(G: PermGroup | None = None) -> dict:
    G = G or build_m24()
    data = find_octad(G)
    orb = octad_orbit(G, data.octad)
    stab = octad_stabilizer(G, data.octad, orb)
    return {"octad": list(data.octad), "five_point_stabilizer_order": data.five_point_stabilizer_order,
            "orbit_sizes": data.orbit_sizes, "octads": len(orb), "octad_stabilizer_order": stab.order(),
            "block_multiset": dict(Counter(len(set(b) & set(data.octad)) for b in orb.points))}
