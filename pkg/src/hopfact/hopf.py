"""Finite-dimensional Hopf algebras as exact structure constants.

A :class:`HopfAlgebra` stores, on a basis ``e_0 .. e_{d-1}``:

* ``mult[(i, j)]``  the sparse vector ``e_i e_j``;
* ``comult[i]``     the sparse tensor ``Delta(e_i)`` keyed by ``(j, k)``;
* ``unit``, ``counit`` and ``antipode[j] = S(e_j)``.

All coefficients are :class:`fractions.Fraction`.  Bicrossproducts of exact
factorizations are built on the basis ``delta_b (x) a`` (b in G2, a in G1).
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import numpy as np
from scipy import sparse

from .factorization import ExactFactorization, MatchedPair, _mult_table, inverse_map, matched_pair
from .linalg import Echelon, SingularSystemError, add_into, solve_sparse
from .permcore import (
    DEFAULT_ORBIT_BOUND,
    PermGroup,
    ResourceError,
    abelianization_order,
    action_stabilizer,
    conjugacy_class_count,
    coset_action,
    fixed_point_count,
    orbit,
    orbit_partition,
    to_cycles,
)

log = logging.getLogger(__name__)

ONE = Fraction(1)
DEFAULT_DIM_BOUND = 2000


class HopfConstructionError(ArithmeticError):
    pass


@dataclass
class HopfAlgebra:
    dim: int
    labels: list
    mult: dict
    unit: dict
    comult: dict
    counit: list
    antipode: dict | None = None
    name: str = ""

    # -- elementwise operations -------------------------------------------
    def basis(self, i: int) -> dict:
        return {i: ONE}

    def product(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        mult = self.mult
        for i, a in x.items():
            for j, b in y.items():
                v = mult.get((i, j))
                if v:
                    add_into(out, v, a * b)
        return out

    def coproduct(self, x: Mapping) -> dict:
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.comult.get(i, {}), a)
        return out

    def coproduct_of_index(self, i: int) -> dict:
        return self.comult.get(i, {})

    def counit_of(self, x: Mapping):
        return sum((a * self.counit[i] for i, a in x.items()), Fraction(0))

    def apply_antipode(self, x: Mapping) -> dict:
        if self.antipode is None:
            raise HopfConstructionError("antipode not computed")
        out: dict = {}
        for i, a in x.items():
            add_into(out, self.antipode.get(i, {}), a)
        return out

    def tensor_product(self, X: Mapping, Y: Mapping) -> dict:
        """Product in ``H (x) H``."""
        out: dict = {}
        mult = self.mult
        for (i1, i2), a in X.items():
            for (j1, j2), b in Y.items():
                v1 = mult.get((i1, j1))
                if not v1:
                    continue
                v2 = mult.get((i2, j2))
                if not v2:
                    continue
                ab = a * b
                for k1, c1 in v1.items():
                    for k2, c2 in v2.items():
                        key = (k1, k2)
                        val = out.get(key, 0) + ab * c1 * c2
                        if val:
                            out[key] = val
                        else:
                            del out[key]
        return out

    def antipode_matrix(self) -> list[list[Fraction]]:
        """Dense matrix with ``S(e_j) = sum_i M[i][j] e_i``."""
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j, col in (self.antipode or {}).items():
            for i, c in col.items():
                m[i][j] = c
        return m

    def is_commutative(self) -> bool:
        return all(self.mult.get((i, j), {}) == self.mult.get((j, i), {})
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_cocommutative(self) -> bool:
        return all(self.comult.get(i, {}) == {(k, j): c for (j, k), c in self.comult.get(i, {}).items()}
                   for i in range(self.dim))

    def canonical(self) -> "HopfAlgebra":
        """Copy with zero entries dropped and every map keyed in sorted order."""
        mult = {key: dict(sorted(v.items())) for key, v in sorted(self.mult.items()) if v}
        comult = {i: dict(sorted(v.items())) for i, v in sorted(self.comult.items()) if v}
        anti = None
        if self.antipode is not None:
            anti = {j: dict(sorted(v.items())) for j, v in sorted(self.antipode.items()) if v}
        return HopfAlgebra(self.dim, list(self.labels), mult, dict(sorted(self.unit.items())),
                           comult, list(self.counit), anti, self.name)

    def same_structure(self, other: "HopfAlgebra") -> bool:
        a, b = self.canonical(), other.canonical()
        return (a.dim == b.dim and a.mult == b.mult and a.unit == b.unit and a.comult == b.comult
                and a.counit == b.counit and a.antipode == b.antipode)


# --------------------------------------------------------------------------
# standard examples

def group_algebra(G: PermGroup, compute_s: bool = True) -> HopfAlgebra:
    """``k[G]`` with group elements as grouplike basis."""
    elems = sorted(G.elements())
    index = {g: i for i, g in enumerate(elems)}
    table = _mult_table(elems, index)
    n = len(elems)
    mult = {(i, j): {table[i][j]: ONE} for i in range(n) for j in range(n)}
    comult = {i: {(i, i): ONE} for i in range(n)}
    H = HopfAlgebra(n, [to_cycles(g) for g in elems], mult, {0: ONE}, comult,
                    [ONE] * n, name="group algebra")
    if compute_s:
        inv = inverse_map(elems, index)
        H.antipode = {i: {inv[i]: ONE} for i in range(n)}
    return H


def function_algebra(G: PermGroup) -> HopfAlgebra:
    """``k^G``: functions on G with the delta basis."""
    elems = sorted(G.elements())
    index = {g: i for i, g in enumerate(elems)}
    table = _mult_table(elems, index)
    inv = inverse_map(elems, index)
    n = len(elems)
    mult = {(i, i): {i: ONE} for i in range(n)}
    comult: dict = {k: {} for k in range(n)}
    for i in range(n):
        for j in range(n):
            comult[table[i][j]][(i, j)] = ONE
    counit = [Fraction(0)] * n
    counit[0] = ONE
    return HopfAlgebra(n, [to_cycles(g) for g in elems], mult, {i: ONE for i in range(n)},
                       comult, counit, {i: {inv[i]: ONE} for i in range(n)}, name="function algebra")


# --------------------------------------------------------------------------
# bicrossproducts

# Orientation variants for the two actions the bicrossproduct consumes.
# product:   (delta_b (x) a)(delta_c (x) a') = [b == a . c] delta_b (x) aa'
#   "coset":  a . c = (c^-1 <| a^-1)^-1, left multiplication on G/G1
#   "right":  a . c = c <| a^-1
# coproduct: Delta(delta_g (x) a) = sum_{bc=g} (delta_b (x) a) (x) (delta_c (x) b^-1 . a)
#   "inverse": b^-1 . a = b^-1 |> a
#   "direct":  b^-1 . a = b |> a
CONVENTIONS = ("coset/inverse", "coset/direct", "right/inverse", "right/direct")
DEFAULT_CONVENTION = "coset/inverse"


def bicrossproduct_structure(f: ExactFactorization, mp: MatchedPair | None = None,
                             convention: str = DEFAULT_CONVENTION) -> HopfAlgebra:
    """Multiplication, unit, comultiplication and counit of H(G, G1, G2).

    Basis index ``j * |G1| + i`` is ``delta_b (x) a`` for ``b = g2[j]``,
    ``a = g1[i]``.  No antipode and no axiom check.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if not f.materialized:
        raise ResourceError("bicrossproduct needs a materialized factorization")
    if mp is None:
        mp = matched_pair(f)
    product_rule, coproduct_rule = convention.split("/")
    g1, g2 = f.g1_elements, f.g2_elements
    n1, n2 = len(g1), len(g2)
    m1 = _mult_table(g1, f.g1_index)
    m2 = _mult_table(g2, f.g2_index)
    inv1 = inverse_map(g1, f.g1_index)
    inv2 = inverse_map(g2, f.g2_index)
    tri, sq = mp.triangle, mp.square
    if product_rule == "coset":
        def act(i, jc):
            return inv2[sq[inv2[jc]][inv1[i]]]
    else:
        def act(i, jc):
            return sq[jc][inv1[i]]
    if coproduct_rule == "inverse":
        def twist(jb, i):
            return tri[inv2[jb]][i]
    else:
        def twist(jb, i):
            return tri[jb][i]

    def idx(j, i):
        return j * n1 + i

    mult = {}
    for j in range(n2):
        for i in range(n1):
            for jc in range(n2):
                if act(i, jc) != j:
                    continue
                for i2 in range(n1):
                    mult[(idx(j, i), idx(jc, i2))] = {idx(j, m1[i][i2]): ONE}
    unit = {idx(j, 0): ONE for j in range(n2)}
    comult: dict = {idx(j, i): {} for j in range(n2) for i in range(n1)}
    for jb in range(n2):
        for jc in range(n2):
            jg = m2[jb][jc]
            for i in range(n1):
                comult[idx(jg, i)][(idx(jb, i), idx(jc, twist(jb, i)))] = ONE
    counit = [Fraction(0)] * (n1 * n2)
    for i in range(n1):
        counit[idx(0, i)] = ONE
    labels = [[to_cycles(b), to_cycles(a)] for b in g2 for a in g1]
    return HopfAlgebra(n1 * n2, labels, mult, unit, comult, counit,
                       name=f"H(G,G1,G2) |G1|={n1} |G2|={n2}")


# --------------------------------------------------------------------------
# axioms

AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplication_multiplicative",
    "comultiplication_unital",
    "counit_multiplicative",
    "antipode",
)


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)  # axiom -> bool
    failures: dict = field(default_factory=dict)  # axiom -> first counterexample

    @property
    def ok(self) -> bool:
        return all(self.results.get(a, False) for a in AXIOMS)

    def to_json(self) -> dict:
        return {"all_pass": self.ok, "checks": dict(self.results),
                "failures": {k: str(v) for k, v in self.failures.items()}}


def _first_failure(cases: Iterable, pred: Callable) -> object | None:
    for case in cases:
        if not pred(case):
            return case
    return None


def _tensor_map(T: Mapping, left: Callable | None, right: Callable | None) -> dict:
    """Apply linear maps to the legs of a 2-tensor; a map returns a sparse dict."""
    out: dict = {}
    for (i, j), c in T.items():
        lv = left(i) if left else {(i,): ONE}
        rv = right(j) if right else {(j,): ONE}
        for ki, a in lv.items():
            for kj, b in rv.items():
                key = (ki if isinstance(ki, tuple) else (ki,)) + (kj if isinstance(kj, tuple) else (kj,))
                val = out.get(key, 0) + c * a * b
                if val:
                    out[key] = val
                else:
                    del out[key]
    return out


def _associativity_sparse(H: HopfAlgebra):
    """Exact associativity via integer sparse matrices, when it is safe.

    With ``L_x`` the left multiplication by ``e_x``, associativity is
    ``L_x L_y = L_{xy}`` for all x, y.  Coefficients are scaled to integers by
    their common denominator; returns ``NotImplemented`` when int64 products
    could overflow.
    """
    d = H.dim
    coeffs = [c for v in H.mult.values() for c in v.values()]
    if d < 32 or not coeffs:
        return NotImplemented
    q = math.lcm(*(Fraction(c).denominator for c in coeffs))
    scaled = [int(c * q) for c in coeffs]
    big = max(abs(c) for c in scaled)
    if big * big * d >= 2**62:
        return NotImplemented
    rows, cols, vals = [], [], []
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            # block i of L_all holds L_i; entry (k, j) is the coefficient of e_k in e_i e_j
            rows.append(k)
            cols.append(i * d + j)
            vals.append(int(c * q))
    L_all = sparse.csr_matrix((vals, (rows, cols)), shape=(d, d * d), dtype=np.int64)
    eye = sparse.identity(d, dtype=np.int64, format="csr")
    for x in range(d):
        L_x = L_all[:, x * d:(x + 1) * d]
        # block y of left is L_x L_y: coefficients of x(yz); block y of right: (xy)z
        left = (L_x @ L_all).tocsr()
        right = (L_all @ sparse.kron(L_x, eye, format="csr")).tocsr()
        diff = (left - right).tocoo()
        diff.eliminate_zeros()
        if diff.nnz:
            y, z = divmod(int(diff.col[0]), d)
            return (x, y, z)
    return None


def check_axiom(H: HopfAlgebra, axiom: str):
    """Return None when ``axiom`` holds, else a counterexample description."""
    d = range(H.dim)
    e = H.basis
    one = H.unit
    if axiom == "associativity":
        fast = _associativity_sparse(H)
        if fast is not NotImplemented:
            return fast

        def assoc(t):
            i, j, k = t
            return H.product(H.product(e(i), e(j)), e(k)) == H.product(e(i), H.product(e(j), e(k)))
        return _first_failure(itertools.product(d, d, d), assoc)
    if axiom == "unit":
        return _first_failure(d, lambda i: H.product(one, e(i)) == e(i) == H.product(e(i), one))
    if axiom == "coassociativity":
        def coassoc(i):
            D = H.comult.get(i, {})
            return _tensor_map(D, H.coproduct_of_index, None) == _tensor_map(D, None, H.coproduct_of_index)
        return _first_failure(d, coassoc)
    if axiom == "counit":
        def counit(i):
            D = H.comult.get(i, {})
            left: dict = {}
            right: dict = {}
            for (j, k), c in D.items():
                add_into(left, {k: c * H.counit[j]})
                add_into(right, {j: c * H.counit[k]})
            return left == e(i) == right
        return _first_failure(d, counit)
    if axiom == "comultiplication_multiplicative":
        def mult(t):
            i, j = t
            return H.coproduct(H.product(e(i), e(j))) == H.tensor_product(H.comult.get(i, {}), H.comult.get(j, {}))
        return _first_failure(itertools.product(d, d), mult)
    if axiom == "comultiplication_unital":
        expected: dict = {}
        for i, a in one.items():
            for j, b in one.items():
                expected[(i, j)] = a * b
        return None if H.coproduct(one) == expected else "Delta(1) != 1 (x) 1"
    if axiom == "counit_multiplicative":
        if H.counit_of(one) != 1:
            return "epsilon(1) != 1"
        return _first_failure(itertools.product(d, d),
                              lambda t: H.counit_of(H.product(e(t[0]), e(t[1]))) == H.counit[t[0]] * H.counit[t[1]])
    if axiom == "antipode":
        if H.antipode is None:
            return "no antipode"

        def anti(i):
            D = H.comult.get(i, {})
            left: dict = {}
            right: dict = {}
            for (j, k), c in D.items():
                add_into(left, H.product(H.apply_antipode(e(j)), e(k)), c)
                add_into(right, H.product(e(j), H.apply_antipode(e(k))), c)
            target = {u: c * H.counit[i] for u, c in one.items() if c * H.counit[i]}
            return left == target == right
        return _first_failure(d, anti)
    raise ValueError(f"unknown axiom {axiom!r}")


def verify_hopf_axioms(H: HopfAlgebra, axioms: Iterable[str] = AXIOMS) -> AxiomReport:
    report = AxiomReport()
    for axiom in axioms:
        failure = check_axiom(H, axiom)
        report.results[axiom] = failure is None
        if failure is not None:
            report.failures[axiom] = failure
    return report


def compute_antipode(H: HopfAlgebra) -> dict:
    """Solve ``sum S(x_(1)) x_(2) = epsilon(x) 1`` for the antipode matrix.

    Unknown ``(i, j)`` is the coefficient of ``e_i`` in ``S(e_j)``.
    """
    # k -> [(i, m, coefficient of e_m in e_i e_k)]
    by_right: dict = {}
    for (i, k), v in H.mult.items():
        for m, c in v.items():
            by_right.setdefault(k, []).append((i, m, c))
    equations = []
    for l in range(H.dim):
        rows: dict = {}
        for (j, k), c in H.comult.get(l, {}).items():
            for i, m, mu in by_right.get(k, ()):
                row = rows.setdefault(m, {})
                key = (i, j)
                val = row.get(key, 0) + c * mu
                if val:
                    row[key] = val
                else:
                    del row[key]
        for m in set(rows) | set(H.unit):
            equations.append((rows.get(m, {}), H.counit[l] * H.unit.get(m, 0)))
    unknowns = [(i, j) for j in range(H.dim) for i in range(H.dim)]
    try:
        sol = solve_sparse(equations, unknowns)
    except SingularSystemError as exc:
        raise HopfConstructionError(f"no antipode: {exc}") from None
    antipode: dict = {}
    for (i, j), c in sol.items():
        if c:
            antipode.setdefault(j, {})[i] = c
    return antipode


# --------------------------------------------------------------------------
# construction

def antipode_squared(H: HopfAlgebra) -> dict:
    """``S^2`` as a column dict."""
    return {j: H.apply_antipode(H.antipode.get(j, {})) for j in range(H.dim)}


def antipode_square_summary(H: HopfAlgebra) -> dict:
    s2 = antipode_squared(H)
    identity = all(clean_vec(s2[j]) == {j: 1} for j in range(H.dim))
    trace = sum((s2[j].get(j, 0) for j in range(H.dim)), Fraction(0))
    return {"identity": identity, "trace": trace}


def build_bicrossproduct(f: ExactFactorization, mp: MatchedPair | None = None,
                         convention: str = DEFAULT_CONVENTION,
                         dim_bound: int = DEFAULT_DIM_BOUND, verify: bool = True) -> HopfAlgebra:
    """H(G, G1, G2) with its antipode; raises unless every axiom holds."""
    if f.G.order() > dim_bound:
        raise ResourceError(f"dimension {f.G.order()} exceeds materialization bound {dim_bound}")
    H = bicrossproduct_structure(f, mp, convention)
    H.antipode = compute_antipode(H)
    if verify:
        report = verify_hopf_axioms(H)
        if not report.ok:
            raise HopfConstructionError(
                f"convention {convention!r} violates {sorted(report.failures)}")
    return H


def select_conventions(factorizations: Iterable[ExactFactorization]) -> list[str]:
    """Conventions for which every given factorization yields a Hopf algebra."""
    fs = list(factorizations)
    passing = []
    for conv in CONVENTIONS:
        ok = True
        for f in fs:
            H = bicrossproduct_structure(f, convention=conv)
            if not all(verify_hopf_axioms(H, AXIOMS[:-1]).results.values()):
                ok = False
                break
            try:
                H.antipode = compute_antipode(H)
            except HopfConstructionError:
                ok = False
                break
            if not verify_hopf_axioms(H, ("antipode",)).results["antipode"]:
                ok = False
                break
        if ok:
            passing.append(conv)
    return passing


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis (structure constants transposed)."""
    mult: dict = {}
    for k, D in H.comult.items():
        for (i, j), c in D.items():
            mult.setdefault((i, j), {})[k] = c
    comult: dict = {k: {} for k in range(H.dim)}
    for (i, j), v in H.mult.items():
        for k, c in v.items():
            comult[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    counit = [Fraction(H.unit.get(i, 0)) for i in range(H.dim)]
    anti = None
    if H.antipode is not None:
        anti = {}
        for j, col in H.antipode.items():
            for i, c in col.items():
                anti.setdefault(i, {})[j] = c
    labels = [("dual", lab) for lab in H.labels]
    return HopfAlgebra(H.dim, labels, mult, unit, comult, counit, anti, f"dual({H.name})").canonical()


def _apply_linear(phi: Mapping, x: Mapping) -> dict:
    out: dict = {}
    for i, a in x.items():
        add_into(out, phi.get(i, {}), a)
    return out


def hopf_map_failures(A: HopfAlgebra, B: HopfAlgebra, phi: Mapping) -> list[str]:
    """Which structure maps the linear map ``phi: A -> B`` fails to respect."""
    failed = []
    d = range(A.dim)
    if any(_apply_linear(phi, A.product(A.basis(i), A.basis(j)))
           != B.product(phi.get(i, {}), phi.get(j, {})) for i in d for j in d):
        failed.append("multiplication")
    if _apply_linear(phi, A.unit) != clean_vec(B.unit):
        failed.append("unit")

    def phi2(T):
        out: dict = {}
        for (i, j), c in T.items():
            for k, a in phi.get(i, {}).items():
                for l, b in phi.get(j, {}).items():
                    add_into(out, {(k, l): c * a * b})
        return out
    if any(B.coproduct(phi.get(i, {})) != phi2(A.comult.get(i, {})) for i in d):
        failed.append("comultiplication")
    if any(B.counit_of(phi.get(i, {})) != A.counit[i] for i in d):
        failed.append("counit")
    if A.antipode is not None and B.antipode is not None:
        if any(B.apply_antipode(phi.get(i, {})) != _apply_linear(phi, A.apply_antipode(A.basis(i)))
               for i in d):
            failed.append("antipode")
    return failed


def clean_vec(v: Mapping) -> dict:
    return {k: c for k, c in v.items() if c}


@dataclass
class DualityReport:
    variant: str | None
    rank: int
    dim: int
    attempts: dict

    @property
    def ok(self) -> bool:
        return self.variant is not None and self.rank == self.dim

    def to_json(self) -> dict:
        return {"isomorphism_found": self.ok, "variant": self.variant, "pairing_rank": self.rank,
                "dim": self.dim, "attempts": self.attempts}


def verify_duality(f: ExactFactorization, dim_bound: int = DEFAULT_DIM_BOUND) -> DualityReport:
    """Check H(G, G2, G1) against the dual of H(G, G1, G2).

    The candidate pairing sends ``delta_a (x) b`` (a in G1, b in G2) to the dual
    basis vector of ``delta_b (x) a``.  Variants invert either label and/or
    post-compose with the antipode; the first variant that is an invertible
    Hopf map is reported.
    """
    B = dual_hopf(build_bicrossproduct(f, dim_bound=dim_bound))
    fs = f.swapped()
    A = build_bicrossproduct(fs, dim_bound=dim_bound)
    n1, n2 = len(f.g1_elements), len(f.g2_elements)
    # A basis: index ja * n2 + ib  with a = G1[ja] (functions), b = G2[ib] (group part)
    a_of = [fs.g2_index[a] for a in fs.g2_elements]  # identity map, both sorted
    assert a_of == list(range(n1)) and fs.g1_elements == f.g2_elements
    inv1 = inverse_map(f.g1_elements, f.g1_index)
    inv2 = inverse_map(f.g2_elements, f.g2_index)
    attempts = {}
    for inv_a, inv_b, with_s in itertools.product((False, True), repeat=3):
        name = "+".join(n for n, on in (("invert-G1", inv_a), ("invert-G2", inv_b),
                                         ("antipode", with_s)) if on) or "identity"
        phi = {}
        for ja in range(n1):
            for ib in range(n2):
                a = inv1[ja] if inv_a else ja
                b = inv2[ib] if inv_b else ib
                target = {b * n1 + a: ONE}
                phi[ja * n2 + ib] = B.apply_antipode(target) if with_s else target
        failures = hopf_map_failures(A, B, phi)
        attempts[name] = failures or "ok"
        if not failures:
            r = Echelon()
            r.extend(phi.values())
            return DualityReport(name, r.rank, A.dim, attempts)
    return DualityReport(None, 0, A.dim, attempts)


# --------------------------------------------------------------------------
# one-dimensional representations and grouplikes

def commutator_ideal(H: HopfAlgebra) -> Echelon:
    """Echelon basis of the two-sided ideal generated by all ``[e_i, e_j]``."""
    ideal = Echelon()
    queue = []
    for i in range(H.dim):
        for j in range(i + 1, H.dim):
            c = H.product(H.basis(i), H.basis(j))
            add_into(c, H.product(H.basis(j), H.basis(i)), -1)
            if c and ideal.insert(c):
                queue.append(c)
    k = 0
    while k < len(queue):
        v = queue[k]
        k += 1
        for b in range(H.dim):
            for w in (H.product(H.basis(b), v), H.product(v, H.basis(b))):
                if w and ideal.insert(w):
                    queue.append(w)
    return ideal


def count_one_dim_reps(H: HopfAlgebra) -> int:
    """Codimension of the commutator ideal (the number of characters when H
    is semisimple)."""
    return H.dim - commutator_ideal(H).rank


@dataclass
class GrouplikeResult:
    count: int
    elements: list | None = None  # complex coefficient vectors, when enumerated


class ConsistencyError(ArithmeticError):
    pass


def grouplike_elements(H: HopfAlgebra, enumerate_limit: int = 64, tol: float = 1e-8) -> GrouplikeResult:
    """Grouplike elements of ``H`` as characters of its dual.

    The count is exact.  For ``dim <= enumerate_limit`` the characters are
    also found numerically (simultaneous eigenvectors of the commutative
    quotient of the dual) and every candidate is checked against
    ``Delta(x) = x (x) x`` and ``epsilon(x) = 1``.
    """
    D = dual_hopf(H)
    ideal = commutator_ideal(D)
    count = D.dim - ideal.rank
    if H.dim > enumerate_limit:
        return GrouplikeResult(count)

    free = sorted(k for k in range(D.dim) if k not in ideal.rows)
    pos = {k: n for n, k in enumerate(free)}
    proj = [ideal.reduce({i: ONE}) for i in range(D.dim)]
    r = len(free)
    mats = []
    for p in free:
        L = np.zeros((r, r))
        for q in free:
            for k, c in ideal.reduce(D.product({p: ONE}, {q: ONE})).items():
                L[pos[k], pos[q]] += float(c)
        mats.append(L)
    rng = np.random.default_rng(12345)
    M = sum(w * L for w, L in zip(rng.standard_normal(r), mats))
    _, vecs = np.linalg.eig(M)
    found = []
    for k in range(r):
        v = vecs[:, k]
        t = int(np.argmax(np.abs(v)))
        chi_free = np.array([(L @ v)[t] / v[t] for L in mats])
        x = np.array([sum(complex(c) * chi_free[pos[q]] for q, c in proj[i].items()) for i in range(D.dim)])
        if abs(sum(x[i] * float(H.counit[i]) for i in range(H.dim)) - 1) > tol:
            continue
        ok = True
        lhs: dict = {}
        for i in range(H.dim):
            if abs(x[i]) < tol:
                continue
            for key, c in H.comult.get(i, {}).items():
                lhs[key] = lhs.get(key, 0) + x[i] * float(c)
        for j in range(H.dim):
            for l in range(H.dim):
                if abs(lhs.get((j, l), 0) - x[j] * x[l]) > tol:
                    ok = False
                    break
            if not ok:
                break
        if ok and all(np.max(np.abs(x - y)) > tol for y in found):
            found.append(x)
    if len(found) != count:
        raise ConsistencyError(f"enumerated {len(found)} grouplikes, expected {count}")
    return GrouplikeResult(count, [list(np.round(x, 12)) for x in found])


# --------------------------------------------------------------------------
# group-theoretic counts (no materialization)

@dataclass
class Theorem23Counts:
    fixed_cosets_G1: int
    abelianization_G1: int
    fixed_cosets_G2: int
    abelianization_G2: int

    @property
    def one_dim_H(self) -> int:
        return self.fixed_cosets_G1 * self.abelianization_G1

    @property
    def one_dim_Hdual(self) -> int:
        return self.fixed_cosets_G2 * self.abelianization_G2

    @property
    def biperfect(self) -> bool:
        return self.one_dim_H == 1 and self.one_dim_Hdual == 1

    def to_json(self) -> dict:
        return {"one_dim_H": self.one_dim_H, "one_dim_Hdual": self.one_dim_Hdual,
                "fixed_cosets_G1": self.fixed_cosets_G1, "abelianization_G1": self.abelianization_G1,
                "fixed_cosets_G2": self.fixed_cosets_G2, "abelianization_G2": self.abelianization_G2,
                "biperfect": self.biperfect}


def theorem23_counts(f: ExactFactorization, coset_bound: int = DEFAULT_ORBIT_BOUND,
                     actions: tuple | None = None) -> Theorem23Counts:
    """One-dimensional representation counts of H(G, G1, G2) and its dual.

    Characters of H are pairs (fixed point of G1 on G/G1, linear character of
    G1); the dual is H(G, G2, G1).  ``actions`` may supply precomputed coset
    actions ``(G/G1, G/G2)``.
    """
    if actions is None:
        act1 = f.coset_action or coset_action(f.G, f.G1, coset_bound)
        act2 = coset_action(f.G, f.G2, coset_bound)
    else:
        act1, act2 = actions
    return Theorem23Counts(fixed_point_count(f.G1, act1), abelianization_order(f.G1),
                           fixed_point_count(f.G2, act2), abelianization_order(f.G2))


def character_degrees(K: PermGroup, element_limit: int = 10**4) -> list[int] | None:
    """Irreducible character degrees of ``K`` when they are forced by its
    order, class number and abelianization; ``None`` if ambiguous or too big.
    """
    n = K.order()
    if n > element_limit:
        return None
    classes = conjugacy_class_count(K)
    linear = abelianization_order(K)
    rest = classes - linear
    target = n - linear
    divisors = [d for d in range(2, int(n ** 0.5) + 1) if n % d == 0]
    solutions = []

    def search(remaining, count, smallest, chosen):
        if len(solutions) > 1:
            return
        if count == 0:
            if remaining == 0:
                solutions.append(list(chosen))
            return
        for d in divisors:
            if d < smallest or d * d * count > remaining:
                continue
            chosen.append(d)
            search(remaining - d * d, count - 1, d, chosen)
            chosen.pop()

    search(target, rest, 2, [])
    if len(solutions) != 1:
        return None
    return [1] * linear + solutions[0]


@dataclass
class CensusEntry:
    representative: int  # coset index in G/G1
    label: str  # canonical coset representative, cycle notation
    orbit_size: int
    stabilizer_order: int
    stabilizer_degrees: list | None = None

    @property
    def irrep_dims(self) -> list | None:
        if self.stabilizer_degrees is None:
            return None
        return [d * self.orbit_size for d in self.stabilizer_degrees]


@dataclass
class RepCensus:
    entries: list
    one_dim_count: int
    dim_sq_sum: int
    order_G1: int
    order_G2: int

    @property
    def orbit_sizes(self) -> list[int]:
        return sorted(e.orbit_size for e in self.entries)

    @property
    def irrep_dims(self) -> list | None:
        dims = []
        for e in self.entries:
            if e.irrep_dims is None:
                return None
            dims.extend(e.irrep_dims)
        return sorted(dims)

    def to_json(self) -> dict:
        sizes: dict = {}
        for e in self.entries:
            sizes[e.orbit_size] = sizes.get(e.orbit_size, 0) + 1
        return {
            "orbits": len(self.entries),
            "orbit_size_multiset": {str(k): v for k, v in sorted(sizes.items())},
            "sum_orbit_sizes": sum(e.orbit_size for e in self.entries),
            "dim_sq_sum": self.dim_sq_sum,
            "one_dim_count": self.one_dim_count,
            "irrep_dims": self.irrep_dims,
            "entries": [{"representative": e.label, "orbit_size": e.orbit_size,
                         "stabilizer_order": e.stabilizer_order,
                         "irrep_dims": e.irrep_dims} for e in self.entries],
        }


class CensusError(ArithmeticError):
    pass


def rep_census(f: ExactFactorization, coset_bound: int = DEFAULT_ORBIT_BOUND,
               degree_limit: int = 10**3, action=None) -> RepCensus:
    """G1-orbits on G/G1 (a copy of G2) with their stabilizers.

    Irreducibles of H(G, G1, G2) are pairs (orbit, irreducible of the
    stabilizer) of dimension ``dim V * orbit size``, so summing
    ``|G1| * orbit size`` over orbits must give ``|G1| |G2|``.
    """
    act = action or f.coset_action or coset_action(f.G, f.G1, coset_bound)
    n1, n2 = f.G1.order(), f.G2.order()
    entries = []
    for orb in orbit_partition(f.G1, act):
        size = len(orb)
        stab_order, rem = divmod(n1, size)
        if rem:
            raise CensusError("orbit size does not divide |G1|")
        degrees = None
        if stab_order == 1:
            degrees = [1]
        elif stab_order <= degree_limit:
            rep = orb[0]
            K = action_stabilizer(f.G1, act, rep, orbit(f.G1, act, rep, coset_bound))
            degrees = character_degrees(K)
        entries.append(CensusEntry(orb[0], to_cycles(act.label(orb[0])), size, stab_order, degrees))
    linear = abelianization_order(f.G1)
    fixed = sum(1 for e in entries if e.orbit_size == 1)
    census = RepCensus(entries, fixed * linear, sum(n1 * e.orbit_size for e in entries), n1, n2)
    if sum(e.orbit_size for e in entries) != n2:
        raise CensusError("orbit sizes do not sum to |G2|")
    if census.dim_sq_sum != n1 * n2:
        raise CensusError("sum of squared dimensions differs from dim H")
    return census
