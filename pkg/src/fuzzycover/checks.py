"""Differential testing: optimized operators against the brute-force path.

Every comparison is exact set equality.  Random instances draw degrees on a
coarse grid and bias parameters toward exact boundaries: thresholds are
sometimes taken from realized conditional probabilities (when they are
representable decimals) and grades from realized overlap sums, so ties like
P == alpha or overlap == k occur constantly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle, single
from .exact import MICRO
from .generate import random_covering, random_fuzzy_set
from .model import (
    ApproximationSpace,
    FuzzySet,
    Grade,
    MultiGranulationSystem,
    ThresholdPair,
    Universe,
)
from .multi import mg_dq, mg_grade, mg_prob
from .neighborhood import build_table
from .single import ResidualMode

OP_CYCLE = (
    "prob",
    "grade",
    "dq1",
    "dq2",
    "prob-regions",
    "grade-regions",
    "mg-prob",
    "mg-grade",
    "mg-dq",
)


@dataclass
class Mismatch:
    op: str
    instance: str
    detail: str


@dataclass
class DiffReport:
    instances: int = 0
    comparisons: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def describe(self) -> str:
        lines = [
            f"instances: {self.instances}",
            f"comparisons: {self.comparisons}",
            f"mismatches: {len(self.mismatches)}",
        ]
        for m in self.mismatches[:20]:
            lines.append(f"  {m.op} @ {m.instance}: {m.detail}")
        return "\n".join(lines)


def _representable(p: Fraction) -> int | None:
    """Micro-units for p if it lies on the 10^-6 grid and in [0, 1]."""
    scaled = p * MICRO
    if scaled.denominator == 1 and 0 <= scaled <= MICRO:
        return int(scaled)
    return None


def _pick_thresholds_for(
    rng: random.Random, table, target: FuzzySet
) -> ThresholdPair:
    candidates = [0, MICRO // 4, MICRO // 2, 3 * MICRO // 4, MICRO]
    candidates += [rng.randrange(0, MICRO + 1, 50_000) for _ in range(2)]
    if table is not None and rng.random() < 0.6:
        ov = single.overlap_sums(table, target)
        i = rng.randrange(len(ov))
        p = _representable(Fraction(ov[i], table.sigma[i]))
        if p is not None:
            candidates.append(p)
    a, b = sorted((rng.choice(candidates), rng.choice(candidates)))
    return ThresholdPair(alpha=b, beta=a)


def _pick_grade_for(rng: random.Random, table, target: FuzzySet) -> Grade:
    n = len(table.sigma) if table is not None else 4
    candidates = [0, MICRO // 2, MICRO, 2 * MICRO, n * MICRO]
    candidates.append(rng.randrange(0, (n + 1) * MICRO + 1, 100_000))
    if table is not None and rng.random() < 0.6:
        # exact tie: overlap == k or residual mass == k at some object
        ov = single.overlap_sums(table, target)
        mass = single.mass_sums(table, target, ResidualMode.RESIDUAL)
        candidates.append(rng.choice(list(ov) + list(mass)))
    return Grade(rng.choice(candidates))


def _compare_pair(report, op, tag, main_pair, oracle_pair):
    report.comparisons += 1
    if main_pair != oracle_pair:
        report.mismatches.append(
            Mismatch(op, tag, f"main={main_pair} oracle={oracle_pair}")
        )


def _compare_regions(report, op, tag, main_regions: dict, oracle_regions: dict):
    report.comparisons += 1
    main_sets = {k: frozenset(v) for k, v in main_regions.items()}
    if main_sets != oracle_regions:
        report.mismatches.append(
            Mismatch(op, tag, f"main={main_sets} oracle={oracle_regions}")
        )


def check_one(
    report: DiffReport,
    op: str,
    system: MultiGranulationSystem,
    target: FuzzySet,
    rng: random.Random,
    tag: str,
) -> None:
    """Compare one operator family on one system/target draw."""
    mode = rng.choice((ResidualMode.RESIDUAL, ResidualMode.COMPLEMENT))
    if op.startswith("mg-"):
        tables = [build_table(system.space(c.name)) for c in system.coverings]
        tvec = tuple(
            _pick_thresholds_for(rng, t, target) for t in tables
        )
        kvec = tuple(_pick_grade_for(rng, t, target) for t in tables)
        alphas = [t.alpha for t in tvec]
        betas = [t.beta for t in tvec]
        ks = [g.k for g in kvec]
        comb = rng.choice(("all", "any"))
        if op == "mg-prob":
            main = mg_prob(system, target, tvec, comb)
            got = oracle.mg_prob(system, target, alphas, betas, comb)
        elif op == "mg-grade":
            main = mg_grade(system, target, kvec, comb, mode)
            got = oracle.mg_grade(system, target, ks, comb, mode.value)
        else:
            main = mg_dq(system, target, tvec, kvec, comb, mode)
            got = oracle.mg_dq(system, target, alphas, betas, ks, comb, mode.value)
        _compare_pair(report, op, tag, (main.lower_set, main.upper_set), got)
        return

    covering = rng.choice(system.coverings)
    space = ApproximationSpace(system.universe, covering)
    table = build_table(space)
    t = _pick_thresholds_for(rng, table, target)
    k = _pick_grade_for(rng, table, target)
    if op == "prob":
        main = single.prob_approx(table, target, t)
        got = oracle.prob_approx(space, target, t.alpha, t.beta)
        _compare_pair(report, op, tag, (main.lower_set, main.upper_set), got)
    elif op == "grade":
        main = single.grade_approx(table, target, k, mode)
        got = oracle.grade_approx(space, target, k.k, mode.value)
        _compare_pair(report, op, tag, (main.lower_set, main.upper_set), got)
    elif op == "dq1":
        main = single.dq_disjunctive(table, target, t, k, mode)
        got = oracle.dq_disjunctive(space, target, t.alpha, t.beta, k.k, mode.value)
        _compare_pair(report, op, tag, (main.lower_set, main.upper_set), got)
    elif op == "dq2":
        main = single.dq_conjunctive(table, target, t, k, mode)
        got = oracle.dq_conjunctive(space, target, t.alpha, t.beta, k.k, mode.value)
        _compare_pair(report, op, tag, (main.lower_set, main.upper_set), got)
    elif op == "prob-regions":
        main = single.prob_regions(table, target, t)
        got = oracle.prob_regions(space, target, t.alpha, t.beta)
        _compare_regions(report, op, tag, main.as_dict(), got)
    elif op == "grade-regions":
        main = single.grade_regions(table, target, k, mode)
        got = oracle.grade_regions(space, target, k.k, mode.value)
        _compare_regions(report, op, tag, main.as_dict(), got)
    else:
        raise ValueError(f"unknown operator: {op!r}")


def run_random(
    seed: int,
    count: int,
    max_n: int = 16,
    max_m: int = 4,
    max_members: int = 5,
) -> DiffReport:
    """count random instances, cycling through every operator family."""
    report = DiffReport()
    gammas = (300_000, 500_000, 600_000, 750_000, 900_000, MICRO)
    for i in range(count):
        rng = random.Random(f"fuzzycover-check:{seed}:{i}")
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        members = rng.randint(1, max_members)
        gamma = rng.choice(gammas)
        universe = Universe(tuple(f"x{j + 1}" for j in range(n)))
        system = MultiGranulationSystem(
            universe,
            tuple(
                random_covering(rng, universe, f"g{j + 1}", members, gamma)
                for j in range(m)
            ),
        )
        target = random_fuzzy_set(rng, universe)
        op = OP_CYCLE[i % len(OP_CYCLE)]
        check_one(report, op, system, target, rng, tag=f"seed={seed} i={i}")
        report.instances += 1
    return report


def run_file(sf, seed: int = 0, rounds: int = 40) -> DiffReport:
    """Differential check over a loaded system file's own data."""
    report = DiffReport()
    system = sf.system
    targets = list(sf.targets.values()) or [FuzzySet.whole(system.universe)]
    for r in range(rounds):
        rng = random.Random(f"fuzzycover-check-file:{seed}:{r}")
        target = targets[r % len(targets)]
        op = OP_CYCLE[r % len(OP_CYCLE)]
        check_one(report, op, system, target, rng, tag=f"file round={r}")
        report.instances += 1
    return report
