"""Period reduction through roots of unity.

For N = u*n with u | p^m - 1 and gcd(n, p^m - 1) = 1, a period-N sequence
splits into u period-n sequences a^j with a^j_i = sum_k a_{kn+i} * b_j^{kn+i},
where b_j is the unique n-th root of the j-th u-th root of unity.
Complexities add across the components and the connection polynomial is the
product of the component polynomials with arguments scaled by b_j^{-1}.

The decomposition follows a fixed accounting scheme: component 0 by direct
summation, one incremental power table per remaining root, then
multiply-accumulate, for at most 3(u-1)N field operations in total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algorithms import _exact_log, berlekamp_massey, ggc_phases
from .field import (
    FieldElement,
    FieldSpec,
    nth_root_coprime,
    prime_factors,
    uth_roots_of_unity,
)
from .opcount import OpCounter
from .poly import Poly, one_minus_x_pow, poly_gcd_normalized, scale_argument
from .sequence import LinCompResult, PeriodicSequence


class PeriodMismatchError(ValueError):
    pass


class ArityMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Inapplicable:
    """Why a period admits no root-of-unity split (a value, not an error)."""

    reason: str  # "u_is_one" or "u_not_divisor"
    detail: str


@dataclass(frozen=True)
class ReductionPlan:
    """A validated factorization N = u*n with its root tables.

    roots_x are the u-th roots of unity in canonical order (roots_x[0] = 1)
    and roots_b[i] is the unique n-th root of roots_x[i].
    """

    spec: FieldSpec
    N: int
    u: int
    n: int
    roots_x: tuple[FieldElement, ...]
    roots_b: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        q = self.spec.order_minus_one
        if self.u < 1 or self.n < 1 or self.N != self.u * self.n:
            raise ValueError("plan requires N = u*n with positive factors")
        if q % self.u != 0:
            raise ValueError(f"u={self.u} must divide {q}")
        if math.gcd(self.n, q) != 1:
            raise ValueError(f"n={self.n} must be coprime to {q}")
        if len(self.roots_x) != self.u or len(self.roots_b) != self.u:
            raise ValueError("need exactly u roots of each kind")
        one = self.spec.one()
        if self.roots_x[0] != one or self.roots_b[0] != one:
            raise ValueError("the first root of each kind must be 1")
        if len(set(self.roots_x)) != self.u or len(set(self.roots_b)) != self.u:
            raise ValueError("roots must be distinct")
        for x, b in zip(self.roots_x, self.roots_b):
            if b ** self.n != x:
                raise ValueError("roots_b[i]^n must equal roots_x[i]")


def plan_reduction(
    spec: FieldSpec, N: int, verify_coprime: bool = False
) -> ReductionPlan | Inapplicable:
    """Choose the unique admissible split N = u*n, or explain why none exists.

    Every prime shared between N and q = p^m - 1 must contribute its full
    multiplicity in N to u (otherwise n would not be coprime to q), so u is
    forced. Returns Inapplicable when u = 1 (nothing to split) or when that
    forced u does not divide q.

    verify_coprime additionally checks, test-mode style, that the u
    polynomials 1 - (b_i^{-1} x)^n are pairwise coprime.
    """
    if N < 1:
        raise ValueError("period must be >= 1")
    q = spec.order_minus_one
    u = 1
    for r in prime_factors(q):
        nn = N
        while nn % r == 0:
            u *= r
            nn //= r
    if u == 1:
        return Inapplicable("u_is_one", f"gcd({N}, {q}) = 1, nothing to split")
    if q % u != 0:
        return Inapplicable(
            "u_not_divisor",
            f"the shared-prime part {u} of N={N} does not divide {q}",
        )
    n = N // u
    roots_x = tuple(uth_roots_of_unity(spec, u))
    roots_b = tuple(nth_root_coprime(spec, x, n) for x in roots_x)
    plan = ReductionPlan(spec, N, u, n, roots_x, roots_b)
    if verify_coprime:
        _assert_pairwise_coprime(plan)
    return plan


def _assert_pairwise_coprime(plan: ReductionPlan) -> None:
    base = one_minus_x_pow(plan.spec, plan.n)
    polys = [scale_argument(base, b.inv()) for b in plan.roots_b]
    one = Poly.one(plan.spec)
    for i in range(plan.u):
        for j in range(i + 1, plan.u):
            if poly_gcd_normalized(polys[i], polys[j]) != one:
                raise AssertionError(
                    f"factors {i} and {j} of 1 - x^N are not coprime"
                )


def decompose(s: PeriodicSequence, plan: ReductionPlan) -> list[PeriodicSequence]:
    """Split a period-N sequence into the plan's u period-n components.

    Cost contract: (u-1)N/u additions for component 0, at most (u-1)N
    multiplications for the incremental power tables, and (2u-1)(u-1)N/u
    operations of multiply-accumulate for the remaining components, within
    the 3(u-1)N budget overall.
    """
    if s.spec != plan.spec or len(s) != plan.N:
        raise PeriodMismatchError(
            f"sequence (period {len(s)}) does not match the plan (period {plan.N})"
        )
    u, n, N = plan.u, plan.n, plan.N
    vals = s.period
    comps = []
    first = []
    for i in range(n):
        acc = vals[i]
        for k in range(1, u):
            acc = acc + vals[k * n + i]
        first.append(acc)
    comps.append(PeriodicSequence(plan.spec, tuple(first)))
    for j in range(1, u):
        b = plan.roots_b[j]
        powers = [plan.spec.one(), b]
        for _ in range(2, N):
            powers.append(powers[-1] * b)
        rows = []
        for i in range(n):
            acc = vals[i] * powers[i]
            for k in range(1, u):
                idx = k * n + i
                acc = acc + vals[idx] * powers[idx]
            rows.append(acc)
        comps.append(PeriodicSequence(plan.spec, tuple(rows)))
    return comps


def compose(results: list[LinCompResult], plan: ReductionPlan) -> LinCompResult:
    """Recombine component results: complexities add, polynomials multiply
    with arguments scaled by the inverse roots."""
    if len(results) != plan.u:
        raise ArityMismatchError(f"expected {plan.u} component results, got {len(results)}")
    with OpCounter() as ctr:
        total_c = 0
        mp = Poly.one(plan.spec)
        for res, b in zip(results, plan.roots_b):
            total_c += res.complexity
            mp = mp * scale_argument(res.min_poly, b.inv())
    ops = ctr.total + sum(r.field_ops for r in results)
    return LinCompResult(total_c, mp, "reduction", ops)


@dataclass(frozen=True)
class ComponentReport:
    """One solved component: which solver ran and how its work splits.

    ops_solve is the complexity-determination work; ops_min_poly is the
    extra spent reconstructing the connection polynomial (zero for the
    synthesis path, which produces the polynomial as it goes).
    """

    sequence: PeriodicSequence
    algorithm: str
    result: LinCompResult
    ops_solve: int
    ops_min_poly: int


@dataclass(frozen=True)
class SolveReport:
    """Full trace of a solve: plan (if any), per-component reports, and the
    per-phase operation counts that sum to result.field_ops."""

    result: LinCompResult
    plan: ReductionPlan | None
    components: tuple[ComponentReport, ...]
    ops_reduction: int
    ops_components: int
    ops_compose: int

    @property
    def ops_total(self) -> int:
        return self.ops_reduction + self.ops_components + self.ops_compose


def _solve_component(s: PeriodicSequence) -> ComponentReport:
    """Direct solve of one sequence: contraction when the period is a power
    of the characteristic, synthesis on two periods otherwise."""
    spec = s.spec
    if _exact_log(len(s), spec.p) is not None:
        res, ops_solve, ops_poly = ggc_phases(s)
        return ComponentReport(s, "ggc", res, ops_solve, ops_poly)
    res = berlekamp_massey(list(s.period) * 2, spec)
    return ComponentReport(s, "bm", res, res.field_ops, 0)


def solve_reduction_report(s: PeriodicSequence, plan: ReductionPlan) -> SolveReport:
    """Decompose, solve every component directly, and recombine."""
    with OpCounter() as red:
        parts = decompose(s, plan)
    comps = tuple(_solve_component(c) for c in parts)
    with OpCounter() as comp_ctr:
        combined = compose([c.result for c in comps], plan)
    ops_components = sum(c.ops_solve for c in comps)
    ops_compose = sum(c.ops_min_poly for c in comps) + comp_ctr.total
    result = LinCompResult(
        combined.complexity,
        combined.min_poly,
        "reduction",
        red.total + ops_components + ops_compose,
    )
    return SolveReport(result, plan, comps, red.total, ops_components, ops_compose)


def solve_auto_report(s: PeriodicSequence) -> SolveReport:
    """Best applicable strategy with a full trace.

    Reduce when the period splits; solve the whole sequence directly
    otherwise. Always produces the same complexity and polynomial as the
    gcd oracle.
    """
    plan = plan_reduction(s.spec, len(s))
    if isinstance(plan, Inapplicable):
        comp = _solve_component(s)
        return SolveReport(
            comp.result, None, (comp,), 0, comp.ops_solve, comp.ops_min_poly
        )
    return solve_reduction_report(s, plan)


def solve_auto(s: PeriodicSequence) -> LinCompResult:
    """Best applicable strategy; see solve_auto_report for the trace."""
    return solve_auto_report(s).result


def reduce_antisymmetric(s: PeriodicSequence) -> tuple[PeriodicSequence, FieldElement]:
    """Halve a period-2n sequence whose second half negates its first.

    Requires odd characteristic and gcd(n, p^m - 1) = 1. Returns (s2, b)
    where s2_i = 2 a_i b^i and b is the unique n-th root of -1; the original
    sequence has the same complexity as s2, and its connection polynomial is
    the s2 polynomial with argument scaled by b.
    """
    spec = s.spec
    if spec.p == 2:
        raise ValueError("requires odd characteristic")
    N = len(s)
    if N % 2 != 0:
        raise ValueError("period must be even")
    n = N // 2
    for i in range(n):
        if s.period[n + i] != -s.period[i]:
            raise ValueError("second half must be the negation of the first")
    b = nth_root_coprime(spec, spec.scalar(-1), n)
    two = spec.scalar(2)
    out = []
    bp = spec.one()
    for i in range(n):
        if i:
            bp = bp * b
        out.append(two * s.period[i] * bp)
    return PeriodicSequence(spec, tuple(out)), b
