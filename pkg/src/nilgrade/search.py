"""Exhaustive search for admissible basis-diagonal gradings.

Homogeneity linearizes to one equation w_i + w_j = w_k per bracket support
triple, so candidate assignments are enumerated by a depth-first scan over
basis positions in index order, trying |w| = 1..D ascending and propagating
equations as they become determined.  Solutions therefore appear in ascending
lexicographic order of the absolute-value vector (|w_1|, ..., |w_n|) — the
frozen enumeration contract.

A negative search result means "no basis-diagonal grading within the weight
bound in the given basis", never "no grading exists".
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .algebra import LieAlgebra, lower_central_series, p_filiform_degree
from .errors import InputError
from .grading import check_conditions, is_homogeneous

NEGATIVE_RESULT_CAVEAT = (
    "no basis-diagonal grading within weight bound {bound} in the given basis"
)


@dataclass(frozen=True)
class WeightConstraintSystem:
    """Linearized homogeneity constraints over the domain {-1, ..., -D}."""

    n: int
    bound: int
    equations: tuple  # deduplicated (i, j, k) triples
    free_indices: tuple  # basis indices never appearing as a bracket target

    def to_dict(self):
        return {
            "n": self.n,
            "bound": self.bound,
            "equations": [list(e) for e in self.equations],
            "free_indices": list(self.free_indices),
        }


def constraint_system(L: LieAlgebra, bound: int) -> WeightConstraintSystem:
    """One equation w_i + w_j = w_k per bracket support triple, deduplicated."""
    if not isinstance(bound, int) or bound < 1:
        raise InputError(f"weight bound must be a positive integer, got {bound!r}")
    equations = tuple(sorted({(e.i, e.j, e.k) for e in L.brackets}))
    targets = {k for (_i, _j, k) in equations}
    free = tuple(v for v in range(1, L.dim + 1) if v not in targets)
    return WeightConstraintSystem(
        n=L.dim, bound=bound, equations=equations, free_indices=free
    )


def _solution_stream(n, equations, domains) -> Iterator[tuple]:
    """DFS over positions 1..n yielding |w|-vectors in ascending lex order.

    domains[v] is the ascending tuple of allowed |w_v| values.  Equations are
    propagated as soon as two of their variables are known; derived values
    must fall in the variable's domain.
    """
    eqs_of = {v: [] for v in range(1, n + 1)}
    for eq in equations:
        for v in set(eq):
            eqs_of[v].append(eq)
    assigned = [0] * (n + 1)  # 0 = unassigned; else |w_v|
    domain_sets = {v: frozenset(domains[v]) for v in range(1, n + 1)}

    def propagate(v, trail):
        """Assign v's pending consequences; returns False on any conflict."""
        queue = [v]
        while queue:
            x = queue.pop()
            for (i, j, k) in eqs_of[x]:
                ai, aj, ak = assigned[i], assigned[j], assigned[k]
                if ai and aj:
                    want = ai + aj
                    if ak:
                        if ak != want:
                            return False
                    else:
                        if want not in domain_sets[k]:
                            return False
                        assigned[k] = want
                        trail.append(k)
                        queue.append(k)
        return True

    def dfs(pos) -> Iterator[tuple]:
        while pos <= n and assigned[pos]:
            pos += 1
        if pos > n:
            # soundness re-check, independent of propagation bookkeeping
            if all(assigned[i] + assigned[j] == assigned[k] for (i, j, k) in equations):
                yield tuple(assigned[1:])
            return
        for val in domains[pos]:
            assigned[pos] = val
            trail = []
            if propagate(pos, trail):
                yield from dfs(pos + 1)
            for t in trail:
                assigned[t] = 0
            assigned[pos] = 0

    yield from dfs(1)


def enumerate_gradings(L: LieAlgebra, bound: int) -> Iterator[tuple]:
    """Yield every homogeneous assignment with weights in {-1..-bound}.

    Ascending lexicographic order of (|w_1|, ..., |w_n|); each solution is
    re-checked against the brackets before being yielded.
    """
    system = constraint_system(L, bound)
    domains = {v: tuple(range(1, bound + 1)) for v in range(1, L.dim + 1)}
    for absvec in _solution_stream(L.dim, system.equations, domains):
        w = tuple(-a for a in absvec)
        ok, _ = is_homogeneous(L, w)
        if not ok:  # pragma: no cover - propagation soundness guard
            raise InputError(f"{L.name}: propagation produced a non-homogeneous assignment")
        yield w


@dataclass(frozen=True)
class GuardAlarm:
    """Raised evidence that a search result contradicts a proved impossibility."""

    kind: str
    algebra: str
    weights: tuple
    message: str
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "kind": self.kind,
            "algebra": self.algebra,
            "weights": list(self.weights),
            "message": self.message,
            "details": self.details,
        }


@dataclass(frozen=True)
class SearchOutcome:
    mode: str  # "wh" | "w"
    bound: int
    found: tuple  # assignments, truncated to the first hit
    exhausted: bool
    guard_alarms: tuple = ()

    def to_dict(self):
        out = {
            "mode": self.mode,
            "bound": self.bound,
            "found": [list(w) for w in self.found],
            "exhausted": self.exhausted,
            "alarms": [a.to_dict() for a in self.guard_alarms],
        }
        if not self.found and self.exhausted:
            out["caveat"] = NEGATIVE_RESULT_CAVEAT.format(bound=self.bound)
        return out


def _passes(L, w, mode) -> bool:
    report = check_conditions(L, w)
    if not report.homogeneous or not report.w_pass:
        return False
    return bool(report.h_pass) if mode == "wh" else True


def _search_domains(L, bound):
    """Per-variable |w| domains, narrowed by a necessary condition for (W).

    C^1 is spanned by homogeneous vectors under any homogeneous assignment, so
    a basis vector outside C^1 contributes to H^1 in degree |w_v|; condition
    (W) then forces |w_v| <= 2.  Applies to both modes (both include (W)).
    """
    c1 = lower_central_series(L).terms[1] if L.dim else None
    full = tuple(range(1, bound + 1))
    narrowed = tuple(v for v in full if v <= 2)
    domains = {}
    for v in range(1, L.dim + 1):
        e_v = [Fraction(1) if t == v - 1 else Fraction(0) for t in range(L.dim)]
        domains[v] = full if c1 is not None and c1.contains_vector(e_v) else narrowed
    return domains


def _root_positions_and_values(L, bound, domains):
    # position 1 is never derivable at the root, so partition on its values
    return 1, domains[1]


def _scan_root_value(L, bound, mode, equations, domains, root_value):
    """First hit (or None) in the subtree where |w_1| = root_value."""
    sub = dict(domains)
    sub[1] = (root_value,)
    for absvec in _solution_stream(L.dim, equations, sub):
        w = tuple(-a for a in absvec)
        if _passes(L, w, mode):
            return w
    return None


def _worker(payload):
    L_state, bound, mode, root_values = payload
    L = LieAlgebra(*L_state)
    system = constraint_system(L, bound)
    domains = _search_domains(L, bound)
    results = {}
    for v in root_values:
        if v not in domains[1]:
            results[v] = None
            continue
        results[v] = _scan_root_value(L, bound, mode, system.equations, domains, v)
        if results[v] is not None:
            break  # later root values of this worker cannot precede this hit
    return results


def find_grading(L: LieAlgebra, bound: int, mode: str = "wh", jobs: int = 1):
    """First admissible assignment in enumeration order, or None with exhaustion.

    mode "wh" requires conditions (W) and (H); mode "w" requires (W) only.
    The candidate stream is the homogeneous enumeration narrowed by a
    necessary condition for (W) (see _search_domains), so the first hit and
    the exhaustion verdict match the unpruned search.  Deterministic for any
    jobs count.
    """
    if mode not in ("wh", "w"):
        raise InputError(f"mode must be 'wh' or 'w', got {mode!r}")
    if not isinstance(jobs, int) or jobs < 1:
        raise InputError(f"jobs must be a positive integer, got {jobs!r}")
    system = constraint_system(L, bound)
    domains = _search_domains(L, bound)
    root_values = domains[1]
    per_value: dict = {}
    if jobs == 1 or len(root_values) <= 1:
        for v in root_values:
            per_value[v] = _scan_root_value(L, bound, mode, system.equations, domains, v)
            if per_value[v] is not None:
                break
    else:
        chunks = [tuple(root_values[i::jobs]) for i in range(jobs)]
        payloads = [
            ((L.name, L.dim, L.brackets), bound, mode, chunk)
            for chunk in chunks
            if chunk
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=len(payloads)) as pool:
            for results in pool.map(_worker, payloads):
                per_value.update(results)
    hit = None
    for v in root_values:
        if per_value.get(v) is not None:
            hit = per_value[v]
            break
    alarms = []
    if hit is not None:
        report = check_conditions(L, hit)
        if report.w_pass and report.h_pass:
            alarm = theorem_guard(L, hit)
            if alarm is not None:
                alarms.append(alarm)
    outcome = SearchOutcome(
        mode=mode,
        bound=bound,
        found=(hit,) if hit is not None else (),
        exhausted=hit is None,
        guard_alarms=tuple(alarms),
    )
    return hit, outcome


def theorem_guard(L: LieAlgebra, weights: Sequence[int]) -> Optional[GuardAlarm]:
    """Alarm if a W- and H-passing assignment contradicts a proved impossibility.

    Callers must only invoke this on assignments that passed both conditions.
    A p-filiform algebra with dim >= p + 3 admits no such grading, so any find
    there is a bug; for p >= 2, dim >= 5 the guard also re-checks the expected
    shape relations (nonzero -1 and -2 components, dim n_{-2} = dim H^1_2 + 1)
    as a secondary detector.
    """
    p = p_filiform_degree(L)
    if p is None or L.dim < p + 3:
        return None
    w = tuple(weights)
    details: dict = {"p": p, "dim": L.dim}
    if p >= 2 and L.dim >= 5:
        report = check_conditions(L, w)
        comp = report.component_dims
        h1 = report.profiles[1].by_degree if report.profiles else {}
        details["shape_relations"] = {
            "n_minus_1_nonzero": comp.get(-1, 0) > 0,
            "n_minus_2_nonzero": comp.get(-2, 0) > 0,
            "n_minus_2_equals_h1_2_plus_1": comp.get(-2, 0) == h1.get(2, 0) + 1,
        }
    return GuardAlarm(
        kind="p-filiform-contradiction",
        algebra=L.name,
        weights=w,
        message=(
            f"{L.name} is {p}-filiform with dim {L.dim} >= {p + 3}; "
            "an admissible grading here contradicts the impossibility theorem "
            "and signals an implementation bug"
        ),
        details=details,
    )
