"""Drinfeld doubles of Hopf algebras given by structure constants.

``D(H)`` lives on ``H^* (x) H`` with basis ``f^p (x) e_q`` at index
``p * d + q``.  Conventions:

* ``(f (x) a)(g (x) b) = sum f . g(S^-1(a_(3)) ? a_(1)) (x) a_(2) b``
* ``Delta(f (x) a) = sum (f_(2) (x) a_(1)) (x) (f_(1) (x) a_(2))``
* ``R = sum_i (1 (x) e_i) (x) (f^i (x) 1)``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .hopf import (
    AxiomReport,
    HopfAlgebra,
    HopfConstructionError,
    compute_antipode,
    count_one_dim_reps,
    dual_hopf,
    verify_hopf_axioms,
)
from .linalg import add_into, solve_sparse
from .permcore import ResourceError

DOUBLE_DIM_BOUND = 40


def _inverse_matrix(H: HopfAlgebra) -> dict:
    """``S^-1`` as a column dict, by an exact linear solve."""
    d = H.dim
    # unknown (i, j): coefficient of e_i in S^-1(e_j); equation S(S^-1(e_j)) = e_j
    equations = []
    for j in range(d):
        rows: dict = {}
        for i in range(d):
            for k, c in H.antipode.get(i, {}).items():
                rows.setdefault(k, {})[(i, j)] = c
        for k in range(d):
            equations.append((rows.get(k, {}), 1 if k == j else 0))
    sol = solve_sparse(equations, [(i, j) for j in range(d) for i in range(d)])
    inv: dict = {}
    for (i, j), c in sol.items():
        if c:
            inv.setdefault(j, {})[i] = c
    return inv


def _double_structure(H: HopfAlgebra) -> HopfAlgebra:
    d = H.dim
    if H.antipode is None:
        raise HopfConstructionError("input has no antipode")
    s_inv = _inverse_matrix(H)

    def idx(p, q):
        return p * d + q

    # Delta^2(e_q) as {(q1, q2, q3): c}
    delta2 = []
    for q in range(d):
        out: dict = {}
        for (a, b), c in H.comult.get(q, {}).items():
            for (a1, a2), c2 in H.comult.get(a, {}).items():
                add_into(out, {(a1, a2, b): c * c2})
        delta2.append(out)

    # W[(q3, q1)][t] = {r: coefficient of e_r in S^-1(e_q3) e_t e_q1}
    W: dict = {}

    def w(q3, q1):
        key = (q3, q1)
        if key not in W:
            left = s_inv.get(q3, {})
            table = {}
            for t in range(d):
                v = H.product(H.product(left, {t: 1}), {q1: 1})
                if v:
                    table[t] = v
            W[key] = table
        return W[key]

    # H^* product: f^p f^t = sum_k comult[k][(p, t)] f^k
    dual_mult: dict = {}
    for k, D in H.comult.items():
        for (p, t), c in D.items():
            dual_mult.setdefault((p, t), {})[k] = c

    mult: dict = {}
    for q in range(d):
        # functional part depends only on (q, r): sum over Delta^2
        # acc[(r, q2)] = {t: coeff} meaning f^r(S^-1(a3) e_t a1) with middle leg q2
        acc: dict = {}
        for (q1, q2, q3), c in delta2[q].items():
            for t, v in w(q3, q1).items():
                for r, cr in v.items():
                    slot = acc.setdefault((r, q2), {})
                    add_into(slot, {t: c * cr})
        for (r, q2), tvec in acc.items():
            for p in range(d):
                fpart: dict = {}
                for t, ct in tvec.items():
                    add_into(fpart, dual_mult.get((p, t), {}), ct)
                if not fpart:
                    continue
                for s in range(d):
                    hpart = H.mult.get((q2, s))
                    if not hpart:
                        continue
                    out = mult.setdefault((idx(p, q), idx(r, s)), {})
                    for k, ck in fpart.items():
                        for m, cm in hpart.items():
                            add_into(out, {idx(k, m): ck * cm})
    mult = {key: v for key, v in mult.items() if v}

    unit: dict = {}
    for p, ep in enumerate(H.counit):
        if ep:
            for u, cu in H.unit.items():
                unit[idx(p, u)] = ep * cu
    counit = [Fraction(H.unit.get(p, 0)) * H.counit[q] for p in range(d) for q in range(d)]

    # H^* coproduct: Delta(f^p) = sum mult[(i, j)][p] f^i (x) f^j
    dual_comult: dict = {}
    for (i, j), v in H.mult.items():
        for p, c in v.items():
            dual_comult.setdefault(p, {})[(i, j)] = c
    comult: dict = {}
    for p in range(d):
        for q in range(d):
            out: dict = {}
            for (i, j), c in dual_comult.get(p, {}).items():
                for (k, l), c2 in H.comult.get(q, {}).items():
                    add_into(out, {(idx(j, k), idx(i, l)): c * c2})
            comult[idx(p, q)] = out
    labels = [[("dual", H.labels[p]), H.labels[q]] for p in range(d) for q in range(d)]
    return HopfAlgebra(d * d, labels, mult, unit, comult, counit, name=f"D({H.name})")


def r_matrix(H: HopfAlgebra) -> dict:
    """Canonical ``R`` of ``D(H)`` as a 2-tensor over the double's basis."""
    d = H.dim
    R: dict = {}
    for i in range(d):
        for u, eu in enumerate(H.counit):
            if not eu:
                continue
            for v, cv in H.unit.items():
                add_into(R, {(u * d + i, i * d + v): eu * cv})
    return R


# --------------------------------------------------------------------------
# n-fold tensors over one algebra: dicts keyed by index tuples

def tensor_mul(A: HopfAlgebra, X: Mapping, Y: Mapping) -> dict:
    out: dict = {}
    for kx, a in X.items():
        for ky, b in Y.items():
            legs = []
            for i, j in zip(kx, ky):
                v = A.mult.get((i, j))
                if not v:
                    break
                legs.append(list(v.items()))
            else:
                ab = a * b
                for combo in itertools.product(*legs):
                    key = tuple(k for k, _ in combo)
                    c = ab
                    for _, cc in combo:
                        c *= cc
                    val = out.get(key, 0) + c
                    if val:
                        out[key] = val
                    else:
                        del out[key]
    return out


def _embed(R: Mapping, positions: tuple, n: int, unit: Mapping) -> dict:
    """Place the legs of ``R`` at ``positions`` of an n-fold tensor, unit elsewhere."""
    out: dict = {}
    others = [k for k in range(n) if k not in positions]
    for key, c in R.items():
        for fill in itertools.product(*(list(unit.items()) for _ in others)):
            full = [None] * n
            for pos, k in zip(positions, key):
                full[pos] = k
            coef = c
            for pos, (u, cu) in zip(others, fill):
                full[pos] = u
                coef *= cu
            add_into(out, {tuple(full): coef})
    return out


def _coproduct_leg(A: HopfAlgebra, T: Mapping, leg: int) -> dict:
    out: dict = {}
    for key, c in T.items():
        for (j, k), c2 in A.comult.get(key[leg], {}).items():
            add_into(out, {key[:leg] + (j, k) + key[leg + 1:]: c * c2})
    return out


def _antipode_leg(A: HopfAlgebra, T: Mapping, leg: int) -> dict:
    out: dict = {}
    for key, c in T.items():
        for j, c2 in A.antipode.get(key[leg], {}).items():
            add_into(out, {key[:leg] + (j,) + key[leg + 1:]: c * c2})
    return out


QT_CHECKS = ("delta_left", "delta_right", "intertwines_coproduct", "invertible")


def check_quasitriangular(A: HopfAlgebra, R: Mapping) -> dict:
    """Each quasitriangularity identity -> pass flag."""
    one = {k: c for k, c in A.unit.items()}
    R13 = _embed(R, (0, 2), 3, one)
    R23 = _embed(R, (1, 2), 3, one)
    R12 = _embed(R, (0, 1), 3, one)
    results = {
        "delta_left": _coproduct_leg(A, R, 0) == tensor_mul(A, R13, R23),
        "delta_right": _coproduct_leg(A, R, 1) == tensor_mul(A, R13, R12),
    }
    ok = True
    for x in range(A.dim):
        D = A.comult.get(x, {})
        Dop = {(k, j): c for (j, k), c in D.items()}
        if tensor_mul(A, R, D) != tensor_mul(A, Dop, R):
            ok = False
            break
    results["intertwines_coproduct"] = ok
    one2 = _embed({(): Fraction(1)}, (), 2, one)
    if A.antipode is None:
        results["invertible"] = False
    else:
        R_inv = _antipode_leg(A, R, 0)
        results["invertible"] = tensor_mul(A, R, R_inv) == one2 == tensor_mul(A, R_inv, R)
    return results


@dataclass
class QuasitriangularStructure:
    host: HopfAlgebra
    r_matrix: dict
    axioms: AxiomReport | None = None
    qt_checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.axioms is not None and self.axioms.ok
                and all(self.qt_checks.get(c, False) for c in QT_CHECKS))

    def to_json(self) -> dict:
        return {"dim": self.host.dim, "axioms": self.axioms.to_json() if self.axioms else None,
                "quasitriangular": dict(self.qt_checks), "all_pass": self.ok}


def drinfeld_double(H: HopfAlgebra, dim_bound: int = DOUBLE_DIM_BOUND, verify: bool = True) -> QuasitriangularStructure:
    if H.dim > dim_bound:
        raise ResourceError(f"dim(H) = {H.dim} exceeds double bound {dim_bound}")
    D = _double_structure(H)
    D.antipode = compute_antipode(D)
    R = r_matrix(H)
    qt = QuasitriangularStructure(D.canonical(), R)
    if verify:
        qt.axioms = verify_hopf_axioms(qt.host)
        qt.qt_checks = check_quasitriangular(qt.host, R)
        if not qt.ok:
            bad = sorted(set(qt.axioms.failures) | {k for k, v in qt.qt_checks.items() if not v})
            raise HopfConstructionError(f"double fails {bad}")
    return qt


def embeddings_are_algebra_maps(H: HopfAlgebra, D: HopfAlgebra) -> dict:
    """Check ``x -> eps (x) x`` and ``f -> f (x) 1`` against the double's product."""
    d = H.dim
    eps_leg = {p: c for p, c in enumerate(H.counit) if c}

    def from_h(x):
        out: dict = {}
        for q, c in x.items():
            for p, cp in eps_leg.items():
                add_into(out, {p * d + q: c * cp})
        return out

    def from_dual(fvec):
        out: dict = {}
        for p, c in fvec.items():
            for u, cu in H.unit.items():
                add_into(out, {p * d + u: c * cu})
        return out

    Hd = dual_hopf(H)
    ok_h = all(from_h(H.product({i: 1}, {j: 1})) == D.product(from_h({i: 1}), from_h({j: 1}))
               for i in range(d) for j in range(d))
    ok_f = all(from_dual(Hd.product({i: 1}, {j: 1})) == D.product(from_dual({i: 1}), from_dual({j: 1}))
               for i in range(d) for j in range(d))
    return {"H": ok_h, "dual": ok_f}


def double_biperfect_check(H: HopfAlgebra, dim_bound: int = DOUBLE_DIM_BOUND) -> dict:
    """Compare one-dimensional representation counts of H, H^*, D(H), D(H)^*."""
    qt = drinfeld_double(H, dim_bound)
    counts = {
        "H": count_one_dim_reps(H),
        "H_dual": count_one_dim_reps(dual_hopf(H)),
        "D": count_one_dim_reps(qt.host),
        "D_dual": count_one_dim_reps(dual_hopf(qt.host)),
    }
    h_bi = counts["H"] == 1 and counts["H_dual"] == 1
    d_bi = counts["D"] == 1 and counts["D_dual"] == 1
    return {
        "counts": counts,
        "H_biperfect": h_bi,
        "D_biperfect": d_bi,
        "equivalence_holds": h_bi == d_bi,
        "dim_H": H.dim,
        "dim_D": qt.host.dim,
    }
