"""System file format: ingestion, canonical serialization, result emission.

A system file is UTF-8 JSON.  Degrees are written as decimal *strings* (at
most 6 fractional digits) so that values round-trip exactly; bare JSON
numbers are rejected.  Shape:

    {
      "universe": ["x1", "x2", ...],
      "coverings": [
        {"name": "price", "gamma": "0.9",
         "members": [{"name": "high", "degrees": ["1", "0.7", ...]}, ...]}
      ],
      "experts": [                                  # optional
        {"name": "price2", "gamma": "0.9",
         "reports": [
           {"expert": "A", "sets": [{"name": "high", "degrees": [...]}, ...]},
           {"expert": "B", "sets": [...]}
         ]}
      ],
      "targets": {"X": ["0.6", "0.5", ...]}
    }

Expert blocks are unioned (pointwise max across experts, per set name) into
one covering each at load time, appended after the plain coverings.  Emitted
files are canonical: universe order everywhere, minimal decimal strings,
two-space indentation, sorted result keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exact import DecimalFormatError, format_scaled, parse_degree, parse_scaled
from .model import (
    FuzzyCovering,
    FuzzySet,
    MultiGranulationSystem,
    StructuralError,
    Universe,
    ValidationError,
    build_covering_from_reports,
)


class ParseError(ValueError):
    """Malformed system file (JSON, shape, degree strings or lengths)."""


def _fail(path: str, msg: str) -> "ParseError":
    return ParseError(f"{path}: {msg}")


def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise _fail(where, f"missing {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise _fail(f"{where}.{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_degrees(raw, universe: Universe, where: str) -> FuzzySet:
    if not isinstance(raw, list):
        raise _fail(where, "expected a list of degree strings")
    if len(raw) != universe.size:
        raise _fail(where, f"vector length {len(raw)} != universe size {universe.size}")
    values = []
    for j, item in enumerate(raw):
        if isinstance(item, (int, float)):
            raise _fail(
                f"{where}[{j}]",
                f"degree must be a string, got bare number {item!r} "
                "(quote it, e.g. \"0.75\", to keep arithmetic exact)",
            )
        try:
            values.append(parse_degree(item))
        except DecimalFormatError as e:
            raise _fail(f"{where}[{j}]", str(e)) from None
    return FuzzySet(universe, tuple(values))


def _parse_gamma(raw, where: str) -> int:
    if isinstance(raw, (int, float)):
        raise _fail(where, f"gamma must be a string, got bare number {raw!r}")
    try:
        gamma = parse_degree(raw)
    except DecimalFormatError as e:
        raise _fail(where, str(e)) from None
    if gamma == 0:
        raise _fail(where, "gamma must be positive")
    return gamma


def _parse_named_sets(raw, universe: Universe, where: str) -> list[tuple[str, FuzzySet]]:
    if not isinstance(raw, list) or not raw:
        raise _fail(where, "expected a non-empty list of named membership vectors")
    out = []
    for i, entry in enumerate(raw):
        name = _need(entry, "name", str, f"{where}[{i}]")
        degrees = _parse_degrees(entry.get("degrees"), universe, f"{where}[{i}].degrees")
        out.append((name, degrees))
    return out


@dataclass(frozen=True)
class SystemFile:
    """A loaded system: coverings (expert blocks already unioned) and targets."""

    system: MultiGranulationSystem
    targets: dict[str, FuzzySet]

    @property
    def universe(self) -> Universe:
        return self.system.universe

    def target(self, name: str) -> FuzzySet:
        try:
            return self.targets[name]
        except KeyError:
            raise StructuralError(
                f"no target named {name!r} (available: {', '.join(self.targets) or 'none'})"
            ) from None


def loads(text: str, origin: str = "<string>") -> SystemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{origin}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    if not isinstance(doc, dict):
        raise _fail(origin, "top level must be an object")

    names = _need(doc, "universe", list, origin)
    if not all(isinstance(n, str) for n in names):
        raise _fail(f"{origin}.universe", "object names must be strings")
    try:
        universe = Universe(tuple(names))
    except StructuralError as e:
        raise _fail(f"{origin}.universe", str(e)) from None

    coverings: list[FuzzyCovering] = []
    for i, block in enumerate(doc.get("coverings") or []):
        where = f"{origin}.coverings[{i}]"
        name = _need(block, "name", str, where)
        gamma = _parse_gamma(block.get("gamma"), f"{where}.gamma")
        members = _parse_named_sets(block.get("members"), universe, f"{where}.members")
        try:
            coverings.append(FuzzyCovering(name, universe, tuple(members), gamma))
        except StructuralError as e:
            raise _fail(where, str(e)) from None

    for i, block in enumerate(doc.get("experts") or []):
        where = f"{origin}.experts[{i}]"
        name = _need(block, "name", str, where)
        gamma = _parse_gamma(block.get("gamma"), f"{where}.gamma")
        reports = []
        raw_reports = _need(block, "reports", list, where)
        for j, rep in enumerate(raw_reports):
            expert = _need(rep, "expert", str, f"{where}.reports[{j}]")
            sets = _parse_named_sets(
                rep.get("sets"), universe, f"{where}.reports[{j}].sets"
            )
            reports.append((expert, sets))
        try:
            coverings.append(build_covering_from_reports(name, reports, gamma))
        except StructuralError as e:
            raise _fail(where, str(e)) from None

    if not coverings:
        raise _fail(origin, "no coverings (need a coverings or experts block)")

    targets: dict[str, FuzzySet] = {}
    raw_targets = doc.get("targets") or {}
    if not isinstance(raw_targets, dict):
        raise _fail(f"{origin}.targets", "expected an object of named degree lists")
    for tname, raw in raw_targets.items():
        targets[tname] = _parse_degrees(raw, universe, f"{origin}.targets.{tname}")

    system = MultiGranulationSystem(universe, tuple(coverings))
    return SystemFile(system, targets)


def load(path: str) -> SystemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}")
    return loads(text, origin=path)


def dumps(sf: SystemFile) -> str:
    """Canonical serialization; stable bytes for equal systems."""
    doc = {
        "universe": list(sf.universe.objects),
        "coverings": [
            {
                "name": c.name,
                "gamma": format_scaled(c.gamma),
                "members": [
                    {"name": n, "degrees": list(s.degree_strings())}
                    for n, s in c.members
                ],
            }
            for c in sf.system.coverings
        ],
        "targets": {
            name: list(s.degree_strings()) for name, s in sf.targets.items()
        },
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump(sf: SystemFile, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(sf))


def result_document(
    result,
    covering: str | None = None,
    target: str | None = None,
    regions=None,
    diagnostics=None,
) -> dict:
    doc = {
        "operator": result.operator,
        "params": {k: v for k, v in result.params},
        "lower": list(result.lower),
        "upper": list(result.upper),
    }
    if covering is not None:
        doc["covering"] = covering
    if target is not None:
        doc["target"] = target
    if regions is not None:
        doc["regions"] = {k: list(v) for k, v in regions.as_dict().items()}
    if diagnostics is not None:
        doc["diagnostics"] = diagnostics
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_result_csv(doc: dict, universe: Universe) -> str:
    """Flat per-object view of a result document."""
    lower = set(doc.get("lower", ()))
    upper = set(doc.get("upper", ()))
    regions = doc.get("regions") or {}
    region_of = {}
    for label, names in regions.items():
        for n in names:
            region_of.setdefault(n, []).append(label)
    diag = {d["object"]: d for d in doc.get("diagnostics") or []}
    header = ["object", "in_lower", "in_upper"]
    if regions:
        header.append("regions")
    if diag:
        header += ["overlap", "sigma", "p", "residual_mass", "complement_mass"]
    lines = [",".join(header)]
    for name in universe.objects:
        row = [name, str(int(name in lower)), str(int(name in upper))]
        if regions:
            row.append("|".join(region_of.get(name, [])))
        if diag:
            d = diag.get(name, {})
            row += [
                d.get("overlap", ""),
                d.get("sigma", ""),
                d.get("p", ""),
                d.get("residual_mass", ""),
                d.get("complement_mass", ""),
            ]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def parse_grade_string(text: str) -> int:
    """Grade values share the exact decimal grammar but may exceed 1."""
    try:
        return parse_scaled(text)
    except DecimalFormatError as e:
        raise ParseError(str(e)) from None


__all__ = [
    "ParseError",
    "SystemFile",
    "ValidationError",
    "load",
    "loads",
    "dump",
    "dumps",
    "result_document",
    "render_json",
    "render_result_csv",
]
