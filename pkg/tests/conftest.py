"""Shared test helpers: independent oracles kept deliberately naive.

The oracles here recompute results from first principles (dict-based bracket
arithmetic, sympy linear algebra, brute-force filters) so that library code
is never checked against itself.
"""

import itertools
from fractions import Fraction

import pytest
from sympy import Matrix, Rational


def naive_bracket_table(brackets):
    """Map (i, j) -> {k: c} for i < j, straight from the entry list."""
    table = {}
    for (i, j, k, c) in brackets:
        table.setdefault((i, j), {})
        table[(i, j)][k] = table[(i, j)].get(k, 0) + Fraction(c)
    return table


def naive_bracket(table, u, v):
    """Bilinear antisymmetric extension on dict-vectors {index: coeff}."""
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            if a == b:
                continue
            (i, j), sign = ((a, b), 1) if a < b else ((b, a), -1)
            for k, c in table.get((i, j), {}).items():
                out[k] = out.get(k, 0) + sign * ca * cb * c
    return {k: v for k, v in out.items() if v}


def naive_jacobi_residual(brackets, i, j, k):
    """[[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] as a dict-vector."""
    table = naive_bracket_table(brackets)
    e = lambda s: {s: Fraction(1)}
    total = {}
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        term = naive_bracket(table, naive_bracket(table, e(x), e(y)), e(z))
        for t, v in term.items():
            total[t] = total.get(t, 0) + v
    return {t: v for t, v in total.items() if v}


def sympy_matrix(rational_matrix):
    return Matrix(
        [
            [Rational(v.numerator, v.denominator) for v in row]
            for row in rational_matrix.entries
        ]
        or [[]]
    )


def sympy_rank(rational_matrix):
    if rational_matrix.rows == 0 or rational_matrix.cols == 0:
        return 0
    return sympy_matrix(rational_matrix).rank()


def sympy_kernel_dim(rational_matrix):
    if rational_matrix.rows == 0:
        return rational_matrix.cols
    return len(sympy_matrix(rational_matrix).nullspace())


def brute_force_gradings(L, bound):
    """All homogeneous assignments by filtering the full D^n product.

    itertools.product with values -1..-D per position yields candidates in
    ascending lexicographic order of the absolute-value vector, the same
    contract the library promises.
    """
    out = []
    for absvec in itertools.product(range(1, bound + 1), repeat=L.dim):
        w = tuple(-a for a in absvec)
        if all(w[e.i - 1] + w[e.j - 1] == w[e.k - 1] for e in L.brackets):
            out.append(w)
    return out


@pytest.fixture(scope="session")
def catalog_entries():
    from nilgrade import catalog

    return catalog.entries()
