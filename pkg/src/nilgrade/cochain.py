"""The exterior-algebra cochain complex of a Lie algebra and its Betti numbers.

The differential on degree one is minus the dual of the bracket,
d x_k = -sum_{i<j} c_{ij}^k x_i ^ x_j, extended to all degrees as an
antiderivation.  Bases of k-forms are strictly increasing index tuples in
lexicographic order; that order fixes the row/column convention of every
matrix produced here.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .algebra import LieAlgebra, validate
from .errors import InputError
from .linalg import RationalMatrix, kernel_basis, rank, rank_of_sparse_columns

__all__ = [
    "k_form_basis",
    "ce_differential",
    "betti",
    "betti_vector",
    "rank",
    "kernel_basis",
]


def k_form_basis(n: int, k: int):
    """All strictly increasing k-tuples from 1..n, lexicographically ordered."""
    if not 0 <= k <= n:
        raise InputError(f"form degree must satisfy 0 <= k <= {n}, got {k}")
    return list(itertools.combinations(range(1, n + 1), k))


def _sort_with_sign(seq):
    """Sort a tuple of indices, tracking the permutation sign; None on repeats."""
    seq = list(seq)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return None, 0
    return tuple(seq), sign


def _dual_differentials(L: LieAlgebra):
    """For each basis index m: the terms of d x_m as (((a, b), coeff), ...)."""
    diff = L._cache.get("dual_diff")
    if diff is None:
        diff = {}
        for e in L.brackets:
            diff.setdefault(e.k, []).append(((e.i, e.j), -e.c))
        L._cache["dual_diff"] = diff
    return diff


def sparse_differential(L: LieAlgebra, k: int):
    """Column-wise sparse matrix of d: forms of degree k -> degree k+1.

    Returns (columns, n_rows) where columns[c] is a tuple of (row_index,
    coeff) over the lexicographic (k+1)-form basis.  Cached per algebra.
    """
    key = ("sparse_diff", k)
    cached = L._cache.get(key)
    if cached is not None:
        return cached
    n = L.dim
    if not 0 <= k <= n:
        raise InputError(f"form degree must satisfy 0 <= k <= {n}, got {k}")
    dX = _dual_differentials(L)
    cols = k_form_basis(n, k)
    row_index = {f: idx for idx, f in enumerate(k_form_basis(n, k + 1))} if k < n else {}
    columns = []
    for form in cols:
        acc = {}
        for pos, m in enumerate(form):
            terms = dX.get(m)
            if not terms:
                continue
            rest = form[:pos] + form[pos + 1 :]
            outer = -1 if pos % 2 else 1
            for (a, b), coeff in terms:
                merged, sg = _sort_with_sign(rest[:pos] + (a, b) + rest[pos:])
                if merged is None:
                    continue
                ri = row_index[merged]
                new = acc.get(ri, 0) + outer * sg * coeff
                if new:
                    acc[ri] = new
                else:
                    acc.pop(ri, None)
        columns.append(tuple(sorted(acc.items())))
    result = (columns, len(row_index))
    L._cache[key] = result
    return result


def ce_differential(L: LieAlgebra, k: int) -> RationalMatrix:
    """Dense matrix of d on k-forms (rows: (k+1)-forms, cols: k-forms)."""
    _require_valid(L)
    columns, n_rows = sparse_differential(L, k)
    m = RationalMatrix.zeros(n_rows, len(columns))
    for ci, col in enumerate(columns):
        for ri, v in col:
            m.entries[ri][ci] = Fraction(v)
    return m


def differential_rank(L: LieAlgebra, k: int) -> int:
    """Exact rank of d on k-forms; cached per algebra."""
    key = ("diff_rank", k)
    r = L._cache.get(key)
    if r is None:
        columns, _ = sparse_differential(L, k)
        r = rank_of_sparse_columns(columns)
        L._cache[key] = r
    return r


def betti(L: LieAlgebra, k: int) -> int:
    """dim H^k of the cochain complex: dim ker d_k - rank d_{k-1}."""
    _require_valid(L)
    n = L.dim
    if not 0 <= k <= n:
        raise InputError(f"cohomology degree must satisfy 0 <= k <= {n}, got {k}")
    kernel_dim = comb(n, k) - differential_rank(L, k)
    image_dim = differential_rank(L, k - 1) if k >= 1 else 0
    return kernel_dim - image_dim


def betti_vector(L: LieAlgebra):
    """All Betti numbers b_0..b_n."""
    return [betti(L, k) for k in range(L.dim + 1)]


def differential_square_is_zero(L: LieAlgebra, k: int) -> bool:
    """Whether d_{k+1} o d_k vanishes identically (matrix product check)."""
    cols_k, _ = sparse_differential(L, k)
    cols_k1, _ = sparse_differential(L, k + 1)
    for col in cols_k:
        acc = {}
        for mid, v in col:
            for ri, w in cols_k1[mid]:
                new = acc.get(ri, 0) + v * w
                if new:
                    acc[ri] = new
                else:
                    acc.pop(ri, None)
        if acc:
            return False
    return True


def _require_valid(L: LieAlgebra):
    ok = L._cache.get("jacobi_ok")
    if ok is None:
        ok = validate(L).ok
        L._cache["jacobi_ok"] = ok
    if not ok:
        raise InputError(f"{L.name}: structure constants violate the Jacobi identity")
