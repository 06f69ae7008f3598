"""Negative basis-diagonal gradings and the two admissibility conditions.

A candidate grading assigns a strictly negative integer weight to every basis
vector; homogeneity means weights[i] + weights[j] = weights[k] for every
stored bracket entry.  A homogeneous assignment grades the cochain complex by
the positive degree deg(x_{i_1}^...^x_{i_k}) = sum |weights[i_l]|, and the
differential preserves that degree, so H^j splits into components H^j_k.

The two verdicts reported here:

* condition (W): H^1 is supported in degrees {1, 2} and H^2 in {2, 3, 4};
* condition (H): for every odd k, the weight-(-k) component of the algebra
  and the degree-k components of H^1 and H^2 all have even dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import LieAlgebra, lower_central_series
from .cochain import k_form_basis, sparse_differential
from .errors import InputError, InternalCheckError, NotHomogeneousError
from .linalg import rank_of_sparse_columns

W_SUPPORT = {1: frozenset({1, 2}), 2: frozenset({2, 3, 4})}


def check_weights(L: LieAlgebra, weights: Sequence[int]):
    w = tuple(weights)
    if len(w) != L.dim:
        raise InputError(f"expected {L.dim} weights, got {len(w)}")
    for x in w:
        if not isinstance(x, int) or x >= 0:
            raise InputError(f"weights must be strictly negative integers, got {x!r}")
    return w


def is_homogeneous(L: LieAlgebra, weights: Sequence[int]):
    """Whether every bracket entry satisfies w_i + w_j = w_k; returns (flag, violations)."""
    w = check_weights(L, weights)
    bad = []
    for e in L.brackets:
        if w[e.i - 1] + w[e.j - 1] != w[e.k - 1]:
            bad.append((e.i, e.j, e.k))
    return not bad, tuple(bad)


def form_degree(weights, form) -> int:
    return sum(-weights[i - 1] for i in form)


def component_dims(weights) -> dict:
    """Map weight -> dimension of the corresponding graded component."""
    out = {}
    for x in weights:
        out[x] = out.get(x, 0) + 1
    return dict(sorted(out.items(), reverse=True))


@dataclass(frozen=True)
class GradedBettiProfile:
    """Dimensions of the degree components of H^j; only nonzero entries kept."""

    j: int
    by_degree: dict

    @property
    def total(self) -> int:
        return sum(self.by_degree.values())

    def to_dict(self):
        return {"j": self.j, "by_degree": {str(k): v for k, v in self.by_degree.items()}}


def graded_betti(L: LieAlgebra, weights: Sequence[int], j: int) -> GradedBettiProfile:
    """Per-degree dimensions of H^j under a homogeneous weight assignment."""
    if j not in (1, 2):
        raise InputError(f"graded Betti profiles are computed for j in {{1, 2}}, got {j}")
    w = check_weights(L, weights)
    homogeneous, bad = is_homogeneous(L, w)
    if not homogeneous:
        raise NotHomogeneousError(
            f"{L.name}: weight assignment is not homogeneous, violations {list(bad)}"
        )
    return _graded_profile(L, w, j)


def _graded_profile(L: LieAlgebra, w, j: int) -> GradedBettiProfile:
    n = L.dim
    if j > n:
        return GradedBettiProfile(j=j, by_degree={})
    deg_j = [form_degree(w, f) for f in k_form_basis(n, j)]
    deg_prev = [form_degree(w, f) for f in k_form_basis(n, j - 1)]
    cols_j, _ = sparse_differential(L, j)
    cols_prev, _ = sparse_differential(L, j - 1)
    deg_next = [form_degree(w, f) for f in k_form_basis(n, j + 1)] if j < n else []
    _assert_degree_preserving(L, cols_j, deg_j, deg_next)
    if j >= 2:
        _assert_degree_preserving(L, cols_prev, deg_prev, deg_j)
    by_degree = {}
    for d in sorted(set(deg_j)):
        block_j = [cols_j[c] for c in range(len(deg_j)) if deg_j[c] == d]
        block_prev = [cols_prev[c] for c in range(len(deg_prev)) if deg_prev[c] == d]
        dim = len(block_j) - rank_of_sparse_columns(block_j) - rank_of_sparse_columns(block_prev)
        if dim:
            by_degree[d] = dim
    return GradedBettiProfile(j=j, by_degree=by_degree)


def _assert_degree_preserving(L, columns, col_degrees, row_degrees):
    # theorem for homogeneous assignments; a violation means a bug, not bad input
    for ci, col in enumerate(columns):
        for ri, _v in col:
            if row_degrees[ri] != col_degrees[ci]:
                raise InternalCheckError(
                    f"{L.name}: differential does not preserve the cochain degree "
                    f"(column degree {col_degrees[ci]}, row degree {row_degrees[ri]})"
                )


@dataclass(frozen=True)
class ConditionReport:
    """Homogeneity plus (W)/(H) verdicts with failure witnesses.

    w_pass/h_pass are None ("not evaluated") when the assignment is not
    homogeneous.
    """

    algebra: str
    weights: tuple
    homogeneous: bool
    homogeneity_violations: tuple = ()
    w_pass: Optional[bool] = None
    w_offenders: tuple = ()  # (j, degree, dim) with degree outside the allowed support
    h_pass: Optional[bool] = None
    h_offenders: tuple = ()  # ("component"|"H^1"|"H^2", odd degree, odd dim)
    profiles: dict = field(default_factory=dict)  # j -> GradedBettiProfile
    component_dims: dict = field(default_factory=dict)

    @property
    def wh_pass(self) -> bool:
        return bool(self.homogeneous and self.w_pass and self.h_pass)

    def to_dict(self):
        return {
            "algebra": self.algebra,
            "weights": list(self.weights),
            "homogeneous": self.homogeneous,
            "homogeneity_violations": [list(v) for v in self.homogeneity_violations],
            "W": self.w_pass,
            "W_offenders": [list(o) for o in self.w_offenders],
            "H": self.h_pass,
            "H_offenders": [list(o) for o in self.h_offenders],
            "profiles": {str(j): p.to_dict()["by_degree"] for j, p in self.profiles.items()},
            "component_dims": {str(k): v for k, v in self.component_dims.items()},
        }


def check_conditions(L: LieAlgebra, weights: Sequence[int]) -> ConditionReport:
    """Evaluate homogeneity and, when homogeneous, conditions (W) and (H)."""
    w = check_weights(L, weights)
    homogeneous, bad = is_homogeneous(L, w)
    comps = component_dims(w)
    if not homogeneous:
        return ConditionReport(
            algebra=L.name,
            weights=w,
            homogeneous=False,
            homogeneity_violations=bad,
            component_dims=comps,
        )
    profiles = {j: _graded_profile(L, w, j) for j in (1, 2)}
    w_offenders = []
    for j in (1, 2):
        for d, dim in profiles[j].by_degree.items():
            if d not in W_SUPPORT[j]:
                w_offenders.append((j, d, dim))
    h_offenders = []
    for weight, dim in comps.items():
        if weight % 2 and dim % 2:
            h_offenders.append(("component", weight, dim))
    for j in (1, 2):
        for d, dim in profiles[j].by_degree.items():
            if d % 2 and dim % 2:
                h_offenders.append((f"H^{j}", d, dim))
    return ConditionReport(
        algebra=L.name,
        weights=w,
        homogeneous=True,
        w_pass=not w_offenders,
        w_offenders=tuple(sorted(w_offenders)),
        h_pass=not h_offenders,
        h_offenders=tuple(sorted(h_offenders, key=str)),
        profiles=profiles,
        component_dims=comps,
    )


def double_weights(weights: Sequence[int]):
    """Scale every weight by 2; empties all odd components, preserving homogeneity."""
    return tuple(2 * x for x in weights)


@dataclass(frozen=True)
class LemmaReport:
    """Structural facts every homogeneous assignment must satisfy."""

    grading_length: int
    nilpotency_class: int
    length_ok: bool  # number of occupied weights >= nilpotency class
    inclusions_ok: bool  # C^k inside the span of components below the k-th weight
    inclusion_details: tuple  # (k, i_k, contained)

    @property
    def ok(self) -> bool:
        return self.length_ok and self.inclusions_ok


def structural_lemma_checks(L: LieAlgebra, weights: Sequence[int]) -> LemmaReport:
    """Verify the length bound and central-series inclusions for a homogeneous grading.

    Both facts are theorems, so a failing report signals an implementation bug
    rather than bad input.
    """
    w = check_weights(L, weights)
    homogeneous, bad = is_homogeneous(L, w)
    if not homogeneous:
        raise NotHomogeneousError(
            f"{L.name}: structural lemma checks need a homogeneous assignment, violations {list(bad)}"
        )
    series = lower_central_series(L)
    distinct = sorted(set(w), reverse=True)  # i_1 > i_2 > ...
    length_ok = len(distinct) >= series.nilpotency_class
    details = []
    inclusions_ok = True
    for k in range(1, min(len(distinct), len(series.terms) - 1) + 1):
        i_k = distinct[k - 1]
        allowed = {v for v in range(1, L.dim + 1) if w[v - 1] < i_k}
        contained = all(
            all(row[c] == 0 for c in range(L.dim) if (c + 1) not in allowed)
            for row in series.terms[k].basis.entries
        )
        details.append((k, i_k, contained))
        inclusions_ok = inclusions_ok and contained
    return LemmaReport(
        grading_length=len(distinct),
        nilpotency_class=series.nilpotency_class,
        length_ok=length_ok,
        inclusions_ok=inclusions_ok,
        inclusion_details=tuple(details),
    )
