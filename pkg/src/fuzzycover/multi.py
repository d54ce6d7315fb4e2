"""Multi-granulation fusion over a family of coverings.

Each covering contributes its own neighborhoods (using its own gamma) and its
own parameter slot.  Two combinators fold the per-covering predicates:

  ALL (type I):  every covering must pass its test  (per-object conjunction),
  ANY (type II): some covering must pass its test   (per-object disjunction).

Conjunction/disjunction distributes over the per-covering predicates, so each
fused operator equals the intersection/union of the per-covering results; the
operators are evaluated predicate-wise and the set identities are enforced by
the test suite and the brute-force checker.
"""

from __future__ import annotations

from .exact import format_scaled
from .model import (
    FuzzySet,
    Grade,
    GradeVector,
    MultiGranulationSystem,
    ParameterError,
    ThresholdPair,
    ThresholdVector,
)
from .neighborhood import NeighborhoodTable, build_table
from .single import (
    ApproximationResult,
    ResidualMode,
    _grade_lower_pred,
    _grade_upper_pred,
    _prob_pred,
    mass_sums,
    overlap_sums,
)


class Combinator:
    ALL = "all"   # type I: conjunction over coverings
    ANY = "any"   # type II: disjunction over coverings

    @classmethod
    def from_string(cls, text: str) -> str:
        if text in (cls.ALL, cls.ANY):
            return text
        raise ParameterError(f"unknown combinator: {text!r} (use all|any)")


def vector_leq(a, b) -> bool:
    """Componentwise order on threshold vectors or grade vectors."""
    if len(a) != len(b):
        raise ParameterError(f"vector lengths differ: {len(a)} != {len(b)}")
    if all(isinstance(x, ThresholdPair) for x in a + b):
        return all(
            x.alpha <= y.alpha and x.beta <= y.beta for x, y in zip(a, b)
        )
    if all(isinstance(x, Grade) for x in a + b):
        return all(x.k <= y.k for x, y in zip(a, b))
    raise ParameterError("vectors must both hold threshold pairs or both hold grades")


def _tables(system: MultiGranulationSystem) -> tuple[NeighborhoodTable, ...]:
    return tuple(build_table(system.space(c.name)) for c in system.coverings)


def _check_vector(system: MultiGranulationSystem, vec, what: str) -> None:
    if len(vec) != system.size:
        raise ParameterError(
            f"{what} vector length {len(vec)} != covering count {system.size}"
        )


def _fold(flag_rows: list[list[bool]], combinator: str) -> list[bool]:
    joined = zip(*flag_rows)
    if combinator == Combinator.ALL:
        return [all(col) for col in joined]
    return [any(col) for col in joined]


def _result(
    system: MultiGranulationSystem,
    operator: str,
    params: tuple[tuple[str, str], ...],
    lower_flags: list[bool],
    upper_flags: list[bool],
) -> ApproximationResult:
    objs = system.universe.objects
    return ApproximationResult(
        operator,
        params,
        tuple(n for n, f in zip(objs, lower_flags) if f),
        tuple(n for n, f in zip(objs, upper_flags) if f),
    )


def mg_prob(
    system: MultiGranulationSystem,
    target: FuzzySet,
    thresholds: ThresholdVector,
    combinator: str,
) -> ApproximationResult:
    """Fused probabilistic approximations across all coverings."""
    _check_vector(system, thresholds, "threshold")
    tables = _tables(system)
    lower_rows, upper_rows = [], []
    for table, t in zip(tables, thresholds):
        ov = overlap_sums(table, target)
        lower_rows.append([_prob_pred(o, s, t.alpha) for o, s in zip(ov, table.sigma)])
        upper_rows.append([_prob_pred(o, s, t.beta) for o, s in zip(ov, table.sigma)])
    return _result(
        system,
        f"mg-prob-{combinator}",
        (
            ("alphas", ",".join(format_scaled(t.alpha) for t in thresholds)),
            ("betas", ",".join(format_scaled(t.beta) for t in thresholds)),
            ("combinator", combinator),
        ),
        _fold(lower_rows, combinator),
        _fold(upper_rows, combinator),
    )


def mg_grade(
    system: MultiGranulationSystem,
    target: FuzzySet,
    grades: GradeVector,
    combinator: str,
    mode: ResidualMode = ResidualMode.RESIDUAL,
) -> ApproximationResult:
    """Fused grade approximations across all coverings."""
    _check_vector(system, grades, "grade")
    tables = _tables(system)
    lower_rows, upper_rows = [], []
    for table, g in zip(tables, grades):
        ov = overlap_sums(table, target)
        mass = mass_sums(table, target, mode)
        lower_rows.append([_grade_lower_pred(m, g.k) for m in mass])
        upper_rows.append([_grade_upper_pred(o, g.k) for o in ov])
    return _result(
        system,
        f"mg-grade-{combinator}",
        (
            ("ks", ",".join(format_scaled(g.k) for g in grades)),
            ("combinator", combinator),
            ("residual_mode", mode.value),
        ),
        _fold(lower_rows, combinator),
        _fold(upper_rows, combinator),
    )


def mg_dq(
    system: MultiGranulationSystem,
    target: FuzzySet,
    thresholds: ThresholdVector,
    grades: GradeVector,
    combinator: str,
    mode: ResidualMode = ResidualMode.RESIDUAL,
) -> ApproximationResult:
    """Fused double-quantitative approximations.

    Under ALL each covering must pass both of its tests; under ANY some
    covering must pass either of its tests.
    """
    _check_vector(system, thresholds, "threshold")
    _check_vector(system, grades, "grade")
    tables = _tables(system)
    lower_rows, upper_rows = [], []
    for table, t, g in zip(tables, thresholds, grades):
        ov = overlap_sums(table, target)
        mass = mass_sums(table, target, mode)
        if combinator == Combinator.ALL:
            lower_rows.append(
                [
                    _prob_pred(o, s, t.alpha) and _grade_lower_pred(m, g.k)
                    for o, s, m in zip(ov, table.sigma, mass)
                ]
            )
            upper_rows.append(
                [
                    _prob_pred(o, s, t.beta) and _grade_upper_pred(o, g.k)
                    for o, s in zip(ov, table.sigma)
                ]
            )
        else:
            lower_rows.append(
                [
                    _prob_pred(o, s, t.alpha) or _grade_lower_pred(m, g.k)
                    for o, s, m in zip(ov, table.sigma, mass)
                ]
            )
            upper_rows.append(
                [
                    _prob_pred(o, s, t.beta) or _grade_upper_pred(o, g.k)
                    for o, s in zip(ov, table.sigma)
                ]
            )
    return _result(
        system,
        f"mg-dq-{combinator}",
        (
            ("alphas", ",".join(format_scaled(t.alpha) for t in thresholds)),
            ("betas", ",".join(format_scaled(t.beta) for t in thresholds)),
            ("ks", ",".join(format_scaled(g.k) for g in grades)),
            ("combinator", combinator),
            ("residual_mode", mode.value),
        ),
        _fold(lower_rows, combinator),
        _fold(upper_rows, combinator),
    )
