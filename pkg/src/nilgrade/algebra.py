"""Nilpotent Lie algebras given by rational structure constants.

An algebra is stored as its dimension together with the sparse set of
structure constants c_{ij}^k (i < j) over a fixed ordered basis X_1..X_n,
meaning [X_i, X_j] = sum_k c_{ij}^k X_k.  Everything downstream (cohomology,
gradings, searches) consumes this representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import InputError, NotNilpotentError
from .linalg import RationalMatrix, format_rational, parse_rational


class BracketEntry(NamedTuple):
    i: int
    j: int
    k: int
    c: Fraction


class LieAlgebra:
    """Immutable structure-constant presentation of a Lie algebra.

    Construction checks well-formedness only (index ranges, i < j, nonzero
    coefficients, no duplicate (i, j, k)); the Jacobi identity is a separate,
    reportable check (see :func:`validate`).
    """

    __slots__ = ("name", "dim", "brackets", "_adj", "_cache")

    def __init__(self, name: str, dim: int, brackets=()):
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"dimension must be a positive integer, got {dim!r}")
        entries = []
        seen = set()
        for entry in brackets:
            i, j, k, c = entry
            c = parse_rational(c)
            if not (1 <= i < j <= dim):
                raise InputError(f"bracket indices must satisfy 1 <= i < j <= dim, got ({i},{j})")
            if not 1 <= k <= dim:
                raise InputError(f"bracket target out of range: k={k}")
            if c == 0:
                raise InputError(f"zero structure constant at ({i},{j},{k})")
            if (i, j, k) in seen:
                raise InputError(f"duplicate bracket entry ({i},{j},{k})")
            seen.add((i, j, k))
            entries.append(BracketEntry(i, j, k, c))
        entries.sort()
        self.name = str(name)
        self.dim = dim
        self.brackets = tuple(entries)
        adj = {}
        for e in entries:
            adj.setdefault((e.i, e.j), []).append((e.k, e.c))
        self._adj = {ij: tuple(ks) for ij, ks in adj.items()}
        self._cache = {}

    def pair(self, i: int, j: int):
        """Structure constants of [X_i, X_j] as ((k, c), ...), any i != j."""
        if i < j:
            return self._adj.get((i, j), ())
        return tuple((k, -c) for k, c in self._adj.get((j, i), ()))

    def renamed(self, name: str) -> "LieAlgebra":
        return LieAlgebra(name, self.dim, self.brackets)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, brackets={len(self.brackets)})"

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.brackets == other.brackets
        )

    def __hash__(self):
        return hash((self.dim, self.brackets))

    # caches survive within a process; drop them when pickling for workers
    def __getstate__(self):
        return (self.name, self.dim, self.brackets)

    def __setstate__(self, state):
        name, dim, brackets = state
        self.__init__(name, dim, brackets)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "brackets": [
                {"i": e.i, "j": e.j, "k": e.k, "c": format_rational(e.c)}
                for e in self.brackets
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "LieAlgebra":
        if not isinstance(doc, dict):
            raise InputError("algebra document must be a JSON object")
        missing = {"name", "dim", "brackets"} - set(doc)
        if missing:
            raise InputError(f"algebra document missing keys: {sorted(missing)}")
        if not isinstance(doc["dim"], int):
            raise InputError("'dim' must be an integer")
        brackets = []
        for raw in doc["brackets"]:
            try:
                brackets.append((raw["i"], raw["j"], raw["k"], parse_rational(raw["c"])))
            except (TypeError, KeyError):
                raise InputError(f"malformed bracket entry: {raw!r}") from None
        return cls(doc["name"], doc["dim"], brackets)


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple
    residual: tuple  # coordinates of [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple


def bracket(L: LieAlgebra, u: Sequence, v: Sequence):
    """Bilinear antisymmetric extension of the structure constants to vectors."""
    if len(u) != L.dim or len(v) != L.dim:
        raise InputError(f"vectors must have length {L.dim}")
    out = [Fraction(0)] * L.dim
    for (i, j), ks in L._adj.items():
        coef = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]
        if coef:
            for k, c in ks:
                out[k - 1] += coef * c
    return out


def validate(L: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on all basis triples, with witnesses."""
    violations = []
    basis = [
        [Fraction(1) if t == s else Fraction(0) for t in range(L.dim)]
        for s in range(L.dim)
    ]
    for i in range(1, L.dim + 1):
        for j in range(i + 1, L.dim + 1):
            uij = bracket(L, basis[i - 1], basis[j - 1])
            if all(x == 0 for x in uij):
                uij = None
            for k in range(j + 1, L.dim + 1):
                total = [Fraction(0)] * L.dim
                if uij is not None:
                    for t, x in enumerate(bracket(L, uij, basis[k - 1])):
                        total[t] += x
                ujk = bracket(L, basis[j - 1], basis[k - 1])
                if any(x != 0 for x in ujk):
                    for t, x in enumerate(bracket(L, ujk, basis[i - 1])):
                        total[t] += x
                uki = bracket(L, basis[k - 1], basis[i - 1])
                if any(x != 0 for x in uki):
                    for t, x in enumerate(bracket(L, uki, basis[j - 1])):
                        total[t] += x
                if any(x != 0 for x in total):
                    violations.append(JacobiViolation((i, j, k), tuple(total)))
    return ValidationReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n with a canonical reduced-row-echelon basis."""

    ambient_dim: int
    basis: RationalMatrix  # rows = basis vectors, in RREF

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        rows = [list(v) for v in vectors if any(x != 0 for x in v)]
        if not rows:
            return cls(ambient_dim, RationalMatrix([], cols=ambient_dim))
        red, _ = RationalMatrix(rows, cols=ambient_dim).rref()
        return cls(ambient_dim, red)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains_vector(self, vec) -> bool:
        v = [Fraction(x) for x in vec]
        for row in self.basis.entries:
            lead = next((c for c, x in enumerate(row) if x != 0), None)
            if lead is not None and v[lead] != 0:
                f = v[lead] / row[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(row) for row in other.basis.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )


@dataclass(frozen=True)
class SeriesReport:
    """Lower central series C^0 >= C^1 >= ... down to zero."""

    terms: tuple  # Subspace, starting with the full space
    dims: tuple
    nilpotency_class: int


def lower_central_series(L: LieAlgebra) -> SeriesReport:
    """Compute C^0 = full space, C^{i+1} = [full, C^i] until zero.

    Raises NotNilpotentError if the dimensions stop strictly decreasing
    before reaching zero.
    """
    cached = L._cache.get("lcs")
    if cached is not None:
        return cached
    n = L.dim
    basis = [
        [Fraction(1) if t == s else Fraction(0) for t in range(n)] for s in range(n)
    ]
    terms = [Subspace.full(n)]
    dims = [n]
    current = terms[0]
    while dims[-1] > 0:
        images = []
        for b in basis:
            for row in current.basis.entries:
                w = bracket(L, b, row)
                if any(x != 0 for x in w):
                    images.append(w)
        nxt = Subspace.span(images, n)
        if nxt.dim >= dims[-1]:
            raise NotNilpotentError(
                f"{L.name}: lower central series stabilizes at dimension {nxt.dim}"
            )
        terms.append(nxt)
        dims.append(nxt.dim)
        current = nxt
    report = SeriesReport(tuple(terms), tuple(dims), nilpotency_class=len(dims) - 1)
    L._cache["lcs"] = report
    return report


def p_filiform_degree(L: LieAlgebra) -> Optional[int]:
    """The p with dim C^i = dim - i - p for all i >= 1 (while >= 0), else None.

    Only p >= 1 counts; the candidate is dim - 1 - dim C^1.
    """
    series = lower_central_series(L)
    m = L.dim
    dims = series.dims
    if len(dims) < 2:
        return None
    p = m - 1 - dims[1]
    if p < 1:
        return None
    i = 1
    while True:
        want = m - i - p
        have = dims[i] if i < len(dims) else 0
        if want >= 0:
            if have != want:
                return None
            if want == 0:
                return p
        else:
            return p if have == 0 else None
        i += 1


def direct_sum_abelian(L: LieAlgebra, m: int, name: Optional[str] = None) -> LieAlgebra:
    """Trivial extension: append m central basis vectors, brackets unchanged."""
    if not isinstance(m, int) or m < 0:
        raise InputError(f"number of abelian summands must be a nonnegative integer, got {m!r}")
    if m == 0:
        return L
    if name is None:
        name = f"{L.name}+C^{m}"
    return LieAlgebra(name, L.dim + m, L.brackets)


def change_basis(L: LieAlgebra, P: RationalMatrix, name: Optional[str] = None) -> LieAlgebra:
    """Rewrite structure constants in the basis Y_i = sum_j P[i][j] X_j.

    P must be an invertible n x n rational matrix (rows = new basis vectors
    in old coordinates).
    """
    n = L.dim
    if P.rows != n or P.cols != n:
        raise InputError(f"change-of-basis matrix must be {n}x{n}, got {P.rows}x{P.cols}")
    Pinv_T = P.inverse().transpose()
    entries = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = bracket(L, P.entries[i - 1], P.entries[j - 1])
            coords = Pinv_T.mul_vector(w)
            for k, c in enumerate(coords, start=1):
                if c != 0:
                    entries.append((i, j, k, c))
    return LieAlgebra(name or f"{L.name}~", n, entries)
