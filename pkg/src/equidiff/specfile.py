"""Sectioned text format for cover specifications.

Example::

    [group]
    invariants = 2

    [quotient]
    genus = 0

    [components]
    count = 1
    stabilizer_generators = (1)

    [branch Q1]
    generator = (1)
    theta = 1

    [node N1]
    quotient = smooth
    branch_stabilizer =
    swap = (1)

``[intersection LABEL]`` sections take the same keys as ``[node LABEL]``.
``#`` starts a comment. ``[components]`` may be omitted, meaning one
component with ``G1 = G``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .abgroup import DEFAULT_MAX_ORDER, AbelianGroup, GroupElement
from .coverspec import SMOOTH, CoverSpec, IntersectionOrbit, NodeOrbit, Violation, validate
from .errors import CapacityError, EquidiffError
from .ramification import BranchPoint

__all__ = [
    "Diagnostic",
    "SpecSyntaxError",
    "SpecValidationError",
    "SpecDocument",
    "parse_document",
    "parse_spec",
    "load_spec",
    "serialize",
    "parse_tuple",
]

_SECTION = re.compile(r"^\[\s*([A-Za-z_]+)(?:\s+([^\s\]]+))?\s*\]$")
_KEYVAL = re.compile(r"^([A-Za-z_]+)\s*=\s*(.*)$")
_TUPLE = re.compile(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)")
_LABEL = re.compile(r"^[A-Za-z0-9_.\-]+$")

_KEYS = {
    "group": {"invariants"},
    "quotient": {"genus"},
    "components": {"count", "stabilizer_generators"},
    "branch": {"generator", "theta"},
    "node": {"quotient", "branch_stabilizer", "swap"},
    "intersection": {"quotient", "branch_stabilizer", "swap"},
}
_LABELLED = {"branch", "node", "intersection"}


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class SpecSyntaxError(EquidiffError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(d) for d in diagnostics))


class SpecValidationError(EquidiffError):
    def __init__(self, document: SpecDocument, violations: list[Violation]):
        self.document = document
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass
class _Section:
    kind: str
    label: Optional[str]
    line: int
    values: dict = field(default_factory=dict)  # key -> (value, line, column)


@dataclass(frozen=True)
class SpecDocument:
    text: str
    spec: CoverSpec
    positions: dict  # label -> line of its section header

    def line_of(self, label: str) -> Optional[int]:
        return self.positions.get(label)


def parse_tuple(text: str) -> tuple[int, ...]:
    """``"(1,2)"``, ``"1,2"`` or ``"()"`` to a tuple of ints."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text.strip():
        return ()
    return tuple(int(part) for part in text.split(","))


def _split_sections(text: str) -> tuple[list[_Section], list[Diagnostic]]:
    diags: list[Diagnostic] = []
    sections: list[_Section] = []
    current: Optional[_Section] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("["):
            m = _SECTION.match(stripped)
            if not m:
                diags.append(Diagnostic(lineno, col, f"malformed section header {stripped!r}"))
                current = None
                continue
            kind, label = m.group(1), m.group(2)
            if kind not in _KEYS:
                diags.append(Diagnostic(lineno, col, f"unknown section [{kind}]"))
                current = None
                continue
            if (kind in _LABELLED) != (label is not None):
                what = "needs a label" if kind in _LABELLED else "takes no label"
                diags.append(Diagnostic(lineno, col, f"section [{kind}] {what}"))
                current = None
                continue
            if label is not None and (not _LABEL.match(label) or label == SMOOTH):
                diags.append(Diagnostic(lineno, col, f"invalid label {label!r}"))
            current = _Section(kind, label, lineno)
            sections.append(current)
            continue
        m = _KEYVAL.match(stripped)
        if not m:
            diags.append(Diagnostic(lineno, col, f"expected 'key = value', got {stripped!r}"))
            continue
        if current is None:
            diags.append(Diagnostic(lineno, col, "key outside of any section"))
            continue
        key, value = m.group(1), m.group(2).strip()
        if key not in _KEYS[current.kind]:
            diags.append(Diagnostic(lineno, col, f"unknown key {key!r} in [{current.kind}]"))
            continue
        if key in current.values:
            diags.append(Diagnostic(lineno, col, f"duplicate key {key!r}"))
            continue
        current.values[key] = (value, lineno, col + m.start(2))
    return sections, diags


class _Reader:
    def __init__(self):
        self.diags: list[Diagnostic] = []

    def error(self, line, col, message):
        self.diags.append(Diagnostic(line, col, message))

    def integer(self, section: _Section, key: str) -> Optional[int]:
        value, line, col = section.values[key]
        try:
            return int(value)
        except ValueError:
            self.error(line, col, f"{key}: expected an integer, got {value!r}")
            return None

    def tuples(self, section: _Section, key: str, G: AbelianGroup,
               single: bool = False) -> Optional[tuple[GroupElement, ...]]:
        value, line, col = section.values[key]
        found = []
        pos = 0
        rest = value
        while rest.strip():
            m = _TUPLE.match(rest.lstrip())
            if not m:
                self.error(line, col + pos, f"{key}: expected '(a, b, ...)' at {rest.strip()!r}")
                return None
            skip = len(rest) - len(rest.lstrip())
            coords = parse_tuple(m.group(0))
            if len(coords) != G.rank:
                self.error(line, col + pos + skip,
                           f"{key}: {m.group(0)} has {len(coords)} coordinates, "
                           f"group {G} needs {G.rank}")
                return None
            found.append(G.element(coords))
            consumed = skip + m.end()
            pos += consumed
            rest = rest[consumed:]
            stripped = rest.lstrip()
            if stripped.startswith(","):
                pos += len(rest) - len(stripped) + 1
                rest = stripped[1:]
                if not rest.strip():
                    self.error(line, col + pos, f"{key}: trailing comma")
                    return None
            elif stripped:
                self.error(line, col + pos, f"{key}: expected ',' between tuples")
                return None
        if single and len(found) != 1:
            self.error(line, col, f"{key}: expected exactly one tuple")
            return None
        return tuple(found)


def parse_document(text: str, max_order: int = DEFAULT_MAX_ORDER) -> SpecDocument:
    """Parse ``text``; raises :class:`SpecSyntaxError` with positioned diagnostics."""
    sections, diags = _split_sections(text)
    reader = _Reader()
    reader.diags = diags

    singles = {}
    labels: dict[str, int] = {}
    for sec in sections:
        if sec.kind not in _LABELLED:
            if sec.kind in singles:
                reader.error(sec.line, 1, f"duplicate section [{sec.kind}]")
            singles.setdefault(sec.kind, sec)
        else:
            if sec.label in labels:
                reader.error(sec.line, 1, f"duplicate label {sec.label!r} "
                             f"(first defined on line {labels[sec.label]})")
            labels.setdefault(sec.label, sec.line)
        for key in sorted(_KEYS[sec.kind] - set(sec.values)):
            reader.error(sec.line, 1, f"[{sec.kind}] is missing key {key!r}")

    if "group" not in singles:
        reader.error(1, 1, "missing [group]")
        raise SpecSyntaxError(reader.diags)
    if "quotient" not in singles:
        reader.error(1, 1, "missing [quotient]")
    if reader.diags:
        raise SpecSyntaxError(reader.diags)

    gsec = singles["group"]
    value, line, col = gsec.values["invariants"]
    try:
        invariants = parse_tuple(value)
        G = AbelianGroup(invariants, max_order=max_order)
    except (ValueError, CapacityError) as exc:
        reader.error(line, col, f"invariants: {exc}")
        raise SpecSyntaxError(reader.diags) from None

    genus = reader.integer(singles["quotient"], "genus")
    if "components" in singles:
        count = reader.integer(singles["components"], "count")
        stab = reader.tuples(singles["components"], "stabilizer_generators", G)
    else:
        count, stab = 1, _basis(G)

    branches, nodes, intersections = [], [], []
    for sec in sections:
        if sec.kind == "branch":
            gen = reader.tuples(sec, "generator", G, single=True)
            theta = reader.integer(sec, "theta")
            if gen is not None and theta is not None:
                branches.append(BranchPoint.from_generator(G, sec.label, gen[0], theta))
        elif sec.kind in ("node", "intersection"):
            quotient, qline, qcol = sec.values["quotient"]
            if not _LABEL.match(quotient):
                reader.error(qline, qcol, f"quotient: invalid label {quotient!r}")
            hs = reader.tuples(sec, "branch_stabilizer", G)
            swap = reader.tuples(sec, "swap", G, single=True)
            if hs is None or swap is None:
                continue
            cls = NodeOrbit if sec.kind == "node" else IntersectionOrbit
            orbit = cls(sec.label, quotient, hs, swap[0])
            (nodes if sec.kind == "node" else intersections).append(orbit)

    if reader.diags:
        raise SpecSyntaxError(reader.diags)
    spec = CoverSpec(G, genus, count, stab, tuple(branches), tuple(nodes),
                     tuple(intersections))
    positions = {sec.label: sec.line for sec in sections if sec.label is not None}
    positions.update({sec.kind: sec.line for sec in sections if sec.label is None})
    first_branch = next((sec.line for sec in sections if sec.kind == "branch"), None)
    if first_branch is not None:
        positions.setdefault("branches", first_branch)
    return SpecDocument(text, spec, positions)


def _basis(G: AbelianGroup) -> tuple[GroupElement, ...]:
    out = []
    for i, m in enumerate(G.invariants):
        if m > 1:
            out.append(tuple(int(i == j) for j in range(G.rank)))
    return tuple(out)


def parse_spec(text: str, max_order: int = DEFAULT_MAX_ORDER) -> CoverSpec:
    return parse_document(text, max_order).spec


def load_spec(text: str, max_order: int = DEFAULT_MAX_ORDER) -> SpecDocument:
    """Parse and validate; raises :class:`SpecValidationError` on violations."""
    doc = parse_document(text, max_order)
    violations = validate(doc.spec)
    if violations:
        raise SpecValidationError(doc, violations)
    return doc


def _fmt(g: GroupElement) -> str:
    return "(" + ",".join(str(c) for c in g) + ")"


def _fmt_list(gs) -> str:
    return ", ".join(_fmt(g) for g in gs)


def serialize(spec: CoverSpec) -> str:
    lines = [
        "[group]",
        "invariants = " + ", ".join(str(m) for m in spec.group.invariants),
        "",
        "[quotient]",
        f"genus = {spec.genus_y}",
        "",
        "[components]",
        f"count = {spec.component_count}",
        ("stabilizer_generators = " + _fmt_list(spec.stab_gens)).rstrip(),
    ]
    for b in spec.branches:
        lines += ["", f"[branch {b.label}]", f"generator = {_fmt(b.stab_gen)}",
                  f"theta = {b.theta_exp}"]
    for kind, orbits in (("node", spec.nodes), ("intersection", spec.intersections)):
        for o in orbits:
            lines += ["", f"[{kind} {o.label}]", f"quotient = {o.quotient}",
                      ("branch_stabilizer = " + _fmt_list(o.branch_stabilizer)).rstrip(),
                      f"swap = {_fmt(o.swap)}"]
    return "\n".join(lines) + "\n"
