"""Exact rational linear algebra: dense matrices over Fraction, ranks, kernels.

All arithmetic is exact; nothing here ever touches floating point.  Dense
reduced-row-echelon form is the canonicalization workhorse (subspace bases,
kernels), while rank goes through a sparse integer-scaled elimination that
stays fast on the large, very sparse differential matrices.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse an exact rational from an int or a string like '-3' or '2/5'."""
    if isinstance(text, bool):
        raise _bad_rational(text)
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str) and _RATIONAL_RE.match(text.strip()):
        try:
            return Fraction(text.strip())
        except ZeroDivisionError:
            raise _bad_rational(text) from None
    raise _bad_rational(text)


def _bad_rational(value):
    from .errors import InputError

    return InputError(f"not a rational literal: {value!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    """Dense exact-rational matrix; rows x cols grid of Fraction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [[Fraction(v) for v in row] for row in entries]
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                from .errors import InputError

                raise InputError("ragged matrix rows")
        else:
            width = 0 if cols is None else cols
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.entries[i][i] = Fraction(1)
        return m

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    def copy(self) -> "RationalMatrix":
        return RationalMatrix([row[:] for row in self.entries], cols=self.cols)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            from .errors import InputError

            raise InputError(f"shape mismatch: {self.cols} vs {other.rows}")
        out = RationalMatrix.zeros(self.rows, other.cols)
        for i, row in enumerate(self.entries):
            acc = out.entries[i]
            for k, v in enumerate(row):
                if v:
                    orow = other.entries[k]
                    for j in range(other.cols):
                        if orow[j]:
                            acc[j] += v * orow[j]
        return out

    __matmul__ = matmul

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            from .errors import InputError

            raise InputError(f"vector length {len(vec)} != cols {self.cols}")
        return [
            sum((row[j] * vec[j] for j in range(self.cols) if vec[j]), Fraction(0))
            for row in self.entries
        ]

    def rref(self):
        """Reduced row-echelon form; returns (matrix, pivot column tuple)."""
        m = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            if pv != 1:
                m[r] = [v / pv for v in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        nonzero = [row for row in m if any(v != 0 for v in row)]
        return RationalMatrix(nonzero, cols=self.cols), tuple(pivots)

    def rank(self) -> int:
        cols = [[] for _ in range(self.cols)]
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if v:
                    cols[j].append((i, v))
        return rank_of_sparse_columns(cols)

    def kernel_basis(self) -> "RationalMatrix":
        """Reduced-echelon basis of the right kernel {v : Mv = 0}, one row per vector."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        vecs = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -red.entries[r][f]
            vecs.append(v)
        if not vecs:
            return RationalMatrix([], cols=self.cols)
        canon, _ = RationalMatrix(vecs, cols=self.cols).rref()
        return canon

    def inverse(self) -> "RationalMatrix":
        from .errors import InputError

        if self.rows != self.cols:
            raise InputError("only square matrices can be inverted")
        n = self.rows
        aug = RationalMatrix(
            [self.entries[i] + RationalMatrix.identity(n).entries[i] for i in range(n)],
            cols=2 * n,
        )
        red, pivots = aug.rref()
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
            raise InputError("matrix is singular")
        return RationalMatrix([red.entries[i][n:] for i in range(n)], cols=n)

    def to_lists(self):
        return [[format_rational(v) for v in row] for row in self.entries]


def rank(matrix: RationalMatrix) -> int:
    """Exact rank of a rational matrix."""
    return matrix.rank()


def kernel_basis(matrix: RationalMatrix) -> RationalMatrix:
    """Reduced-echelon basis of the right kernel of a rational matrix."""
    return matrix.kernel_basis()


def rank_of_sparse_columns(columns) -> int:
    """Rank of a matrix given column-wise as iterables of (row_index, value).

    Values may be ints or Fractions.  Works row-wise with the integer-scaled
    update r_j <- a_p * r_j - a_j * r_p (rank-preserving), gcd-normalizing as
    it goes, so all arithmetic stays in machine-friendly integers whenever the
    input is integral.
    """
    rows = {}
    for ci, col in enumerate(columns):
        for ri, v in col:
            if v:
                rows.setdefault(ri, {})[ci] = v
    active = []
    for row in rows.values():
        scaled = _integer_scaled(row)
        if scaled:
            active.append(scaled)
    rank_ = 0
    while active:
        best_idx = min(range(len(active)), key=lambda i: _pivot_key(active[i]))
        prow = active.pop(best_idx)
        pc, pv = _pick_pivot(prow)
        rank_ += 1
        nxt = []
        for row in active:
            a = row.get(pc)
            if a is None:
                nxt.append(row)
                continue
            new = {c: pv * v for c, v in row.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            new.pop(pc, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, abs(v))
                    if g == 1:
                        break
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                nxt.append(new)
        active = nxt
    return rank_


def _integer_scaled(row):
    """Clear denominators in a sparse row; scaling does not change rank."""
    if all(isinstance(v, int) for v in row.values()):
        return dict(row)
    lcm = 1
    for v in row.values():
        d = Fraction(v).denominator
        lcm = lcm // gcd(lcm, d) * d
    return {c: int(v * lcm) for c, v in row.items() if v}


def _pivot_key(row):
    return (len(row), 0 if any(v in (1, -1) for v in row.values()) else 1)


def _pick_pivot(row):
    for c, v in row.items():
        if v in (1, -1):
            return c, v
    return min(row.items(), key=lambda cv: (abs(cv[1]), cv[0]))
