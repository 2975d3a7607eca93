"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{column: Fraction}`` with no zero entries.  Rows of an
:class:`Echelon` are kept in reduced row echelon form, so reducing a vector is
a single pass over its pivot columns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

RHS = ("rhs",)


def clean(v: Mapping) -> dict:
    return {k: c for k, c in v.items() if c}


def add_into(acc: dict, v: Mapping, scale=1) -> None:
    for k, c in v.items():
        x = acc.get(k, 0) + scale * c
        if x:
            acc[k] = x
        else:
            acc.pop(k, None)


class Echelon:
    """Incremental reduced row echelon form of a set of sparse rows."""

    def __init__(self, pivot_key=None):
        self.rows: dict[Hashable, dict] = {}
        self._col_rows: dict[Hashable, set] = {}
        self._pivot_key = pivot_key

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> dict:
        out = {k: Fraction(c) for k, c in v.items() if c}
        for p in [k for k in out if k in self.rows]:
            c = out.get(p)
            if c:
                add_into(out, self.rows[p], -c)
        return out

    def _choose_pivot(self, v):
        cols = [k for k in v if k != RHS]
        if not cols:
            return None
        if self._pivot_key is not None:
            return min(cols, key=self._pivot_key)
        return min(cols, key=lambda k: (len(self._col_rows.get(k, ())), repr(k)))

    def insert(self, v: Mapping) -> bool:
        """Add ``v`` to the span; return True if the rank grew.

        A row reducing to a pure right-hand side is recorded under the
        ``RHS`` pivot (an inconsistent equation).
        """
        r = self.reduce(v)
        if not r:
            return False
        p = self._choose_pivot(r)
        if p is None:
            p = RHS
        inv = 1 / r[p]
        r = {k: c * inv for k, c in r.items()}
        # clear the new pivot column from existing rows
        for q in list(self._col_rows.get(p, ())):
            row = self.rows[q]
            c = row.get(p)
            if c:
                self._unindex(q, row)
                add_into(row, r, -c)
                self._index(q, row)
        self.rows[p] = r
        self._index(p, r)
        return True

    def _index(self, p, row):
        for k in row:
            if k != p:
                self._col_rows.setdefault(k, set()).add(p)

    def _unindex(self, p, row):
        for k in row:
            s = self._col_rows.get(k)
            if s is not None:
                s.discard(p)

    def extend(self, vectors: Iterable[Mapping]) -> int:
        return sum(1 for v in vectors if self.insert(v))

    @property
    def consistent(self) -> bool:
        return RHS not in self.rows


def rank(vectors: Iterable[Mapping]) -> int:
    e = Echelon()
    e.extend(vectors)
    return e.rank


class SingularSystemError(ArithmeticError):
    pass


def solve_sparse(equations: Iterable[tuple[Mapping, object]], unknowns: Iterable) -> dict:
    """Solve ``sum(coef * x[u]) = rhs`` for a unique solution.

    ``equations`` yields ``(coefficients, rhs)`` pairs.  Raises
    :class:`SingularSystemError` if the system is inconsistent or the
    solution is not unique.
    """
    unknowns = list(unknowns)
    e = Echelon()
    for coeffs, rhs in equations:
        row = dict(coeffs)
        if rhs:
            row[RHS] = -Fraction(rhs)
        e.insert(row)
    if not e.consistent:
        raise SingularSystemError("inconsistent linear system")
    if e.rank != len(unknowns):
        raise SingularSystemError(f"rank {e.rank} < {len(unknowns)} unknowns")
    solution = {}
    for u in unknowns:
        row = e.rows.get(u)
        if row is None or len(row) > 2 or any(k not in (u, RHS) for k in row):
            raise SingularSystemError("solution is not unique")
        solution[u] = -row.get(RHS, Fraction(0))
    return solution


def matrix_rank(rows: Iterable[Iterable]) -> int:
    """Rank of a dense matrix given as rows."""
    return rank({j: Fraction(c) for j, c in enumerate(row) if c} for row in rows)


def fraction_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"rational must be a 'num/den' string, got {s!r}")
    return Fraction(s)
