"""Cross-validation of every representation of rational Dyck positroids.

Each path is pushed through every construction in the package and the
results are compared against independent routes. The report records one
result per check and per path, plus structured notes for the places where
the textbook statement of a formula had to be corrected.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from itertools import combinations

from .core import (
    DyckPath,
    enumerate_paths,
    is_connected,
    minor,
    path_to_matrix,
    phi,
    bases_from_matrix,
    column_profile,
)
from .errors import InvalidArgument, PositroidLabError
from .lediagram import cell_dimension, is_rational_dyck_le, le_from_path, perm_from_le, validate_le
from .necklace import necklace_explicit, necklace_from_bases
from .permutation import (
    geometric_bound_holds,
    path_from_perm,
    perm_from_necklace,
    perm_inverse_explicit,
    southwest_perm,
    weak_excedances,
)
from .plabic import build_plabic, graph_type, is_tree, positroid_from_plabic, trip_permutation
from .polytope import (
    LITERAL,
    hrep_general,
    hrep_refined,
    literal_m_gaps,
    polytopes_equal,
    vertices_from_bases,
    zero_one_points,
)

CHECKS = (
    "minors",
    "necklace",
    "permutation",
    "beta",
    "le",
    "plabic-trip",
    "plabic-sources",
    "polytope-01",
    "polytope-lp",
    "geometric",
    "connected",
)
BASIS_CHECKS = frozenset({"minors", "necklace", "plabic-sources", "polytope-01", "connected"})
LP_CHECKS = frozenset({"polytope-lp"})

DEFAULT_COUNT_CAP = 12
DEFAULT_BASES_CAP = 9
DEFAULT_LP_CAP = 8
MAX_N_ENV = "POSITROID_LAB_MAX_N"

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class Caps:
    count: int = DEFAULT_COUNT_CAP
    bases: int = DEFAULT_BASES_CAP
    lp: int = DEFAULT_LP_CAP

    @classmethod
    def from_env(cls, environ=None) -> "Caps":
        """A value in POSITROID_LAB_MAX_N replaces every default cap."""
        raw = (os.environ if environ is None else environ).get(MAX_N_ENV)
        if raw is None or raw == "":
            return cls()
        try:
            value = int(raw)
        except ValueError:
            raise InvalidArgument(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
        if value < 2:
            raise InvalidArgument(f"{MAX_N_ENV} must be at least 2")
        return cls(value, value, value)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class Note:
    """A structured warning about a textbook formula that needed correcting."""

    code: str
    path: str
    message: str


@dataclass(frozen=True)
class PathReport:
    path: str
    m: int
    d: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]


@dataclass(frozen=True)
class VerifyReport:
    types: tuple[tuple[int, int], ...]
    paths: tuple[PathReport, ...]
    notes: tuple[Note, ...] = ()
    skipped: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.paths)

    def counterexample(self) -> PathReport | None:
        """The failing path with the fewest steps (first in report order on ties)."""
        failing = [p for p in self.paths if not p.passed]
        return min(failing, key=lambda p: p.m + p.d) if failing else None

    def tally(self) -> dict[str, dict[str, int]]:
        out = {name: {PASS: 0, FAIL: 0, SKIP: 0} for name in CHECKS}
        for p in self.paths:
            for c in p.checks:
                out[c.name][c.status] += 1
        return out

    def note_summary(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for note in self.notes:
            out[note.code] = out.get(note.code, 0) + 1
        return out

    def to_json(self) -> dict:
        bad = self.counterexample()
        return {
            "status": PASS if self.passed else FAIL,
            "types": [list(t) for t in self.types],
            "paths_checked": len(self.paths),
            "skipped": list(self.skipped),
            "checks": self.tally(),
            "warnings": [
                {"code": n.code, "path": n.path, "message": n.message} for n in self.notes
            ],
            "counterexample": None
            if bad is None
            else {
                "path": bad.path,
                "failures": [{"check": c.name, "detail": c.detail} for c in bad.failures()],
            },
        }

    def to_tsv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
        writer.writerow(["path", "m", "d", *CHECKS])
        for p in self.paths:
            status = {c.name: c.status for c in p.checks}
            writer.writerow([p.path, p.m, p.d, *(status.get(name, SKIP) for name in CHECKS)])
        return buf.getvalue()


# ---------------------------------------------------------------- checks


def _maximal_minors_nonnegative(rows) -> bool:
    d, n = len(rows), len(rows[0])
    return all(minor(rows, range(1, d + 1), S) >= 0 for S in combinations(range(1, n + 1), d))


def _is_full_cycle(perm) -> bool:
    return len(perm.cycles()) == 1 and perm.n > 1


def verify_path(path: DyckPath, skip: frozenset[str] = frozenset(), caps: Caps = Caps(),
                notes: list[Note] | None = None) -> PathReport:
    """Run every check on one path; checks beyond the size caps are skipped."""
    n, d = path.n, path.d
    results: dict[str, CheckResult] = {}
    active = {name for name in CHECKS if name not in skip}
    if n > caps.bases:
        active -= BASIS_CHECKS
    if n > caps.lp:
        active -= LP_CHECKS

    def record(name: str, ok: bool, detail: str = "") -> None:
        results[name] = CheckResult(name, PASS if ok else FAIL, "" if ok else detail)

    extended = phi(path_to_matrix(path))
    profile = column_profile(extended)
    reference = southwest_perm(path)
    needs_bases = active & (BASIS_CHECKS | LP_CHECKS | {"permutation"})
    positroid = bases_from_matrix(extended) if needs_bases and n <= caps.bases else None
    generic = necklace_from_bases(positroid) if positroid is not None else None

    if "minors" in active:
        record("minors", _maximal_minors_nonnegative(extended.rows), "negative maximal minor")

    if "necklace" in active:
        explicit = necklace_explicit(profile)
        record("necklace", explicit == generic,
               f"explicit {explicit.entries} vs generic {generic.entries}")

    if "permutation" in active:
        routes = {"southwest": reference, "closed-form": perm_inverse_explicit(profile)}
        routes["necklace"] = perm_from_necklace(
            generic if generic is not None else necklace_explicit(profile)
        )
        disagree = [k for k, v in routes.items() if v != reference]
        shape_ok = _is_full_cycle(reference) and weak_excedances(reference) == set(range(1, d + 1))
        record("permutation", not disagree and shape_ok,
               f"routes {disagree} disagree with {reference}" if disagree
               else f"{reference} is not a {n}-cycle with weak excedances [{d}]")

    if "beta" in active:
        try:
            back = path_from_perm(reference, d)
            record("beta", back == path, f"round trip gave {back}")
        except PositroidLabError as exc:
            record("beta", False, str(exc))

    if "le" in active:
        le = le_from_path(path)
        ok = (
            validate_le(le)
            and cell_dimension(le) == n - 1
            and is_rational_dyck_le(le)
            and perm_from_le(le) == reference
        )
        record("le", ok, f"Le-diagram {le.fill} fails an identity")

    graph = build_plabic(path) if active & {"plabic-trip", "plabic-sources"} else None
    if "plabic-trip" in active:
        trip = trip_permutation(graph)
        ok = trip == reference and graph_type(graph) == (d, n) and is_tree(graph)
        record("plabic-trip", ok, f"trip permutation {trip} vs {reference}")

    if "plabic-sources" in active:
        sources = positroid_from_plabic(graph)
        record("plabic-sources", sources == positroid,
               f"{len(sources.bases)} source sets vs {len(positroid.bases)} bases")

    if active & {"polytope-01", "polytope-lp"}:
        general = hrep_general(generic)
        refined = hrep_refined(profile)
        if "polytope-01" in active:
            vertices = vertices_from_bases(positroid)
            ok = zero_one_points(general, d) == vertices == zero_one_points(refined, d)
            record("polytope-01", ok, "0/1 points differ from the basis indicators")
        if "polytope-lp" in active:
            record("polytope-lp", polytopes_equal(general, refined),
                   "general and refined systems differ")

    if "geometric" in active:
        record("geometric", geometric_bound_holds(profile), f"weights {profile.weights}")

    if "connected" in active:
        record("connected", is_connected(positroid), "positroid is disconnected")

    if notes is not None:
        notes.extend(_discrepancy_notes(path, profile, positroid, generic))

    checks = tuple(results.get(name, CheckResult(name, SKIP)) for name in CHECKS)
    return PathReport(str(path), path.m, path.d, checks)


def _discrepancy_notes(path, profile, positroid, generic) -> list[Note]:
    out = []
    label = str(path)
    if generic is not None:
        try:
            literal = necklace_explicit(profile, completion="literal")
            differs = literal != generic
        except PositroidLabError:
            differs = True
        if differs:
            out.append(Note(
                "necklace-completion",
                label,
                "completing entries from the global missing-weight set E_A gives a wrong "
                "necklace; the per-entry completion rule is used instead",
            ))
    gaps = literal_m_gaps(profile)
    if gaps:
        out.append(Note(
            "m-index-empty",
            label,
            f"m(i) has an empty index set for i in {gaps}; those window rows are omitted "
            "from the literal refined system",
        ))
    if positroid is not None:
        literal_points = zero_one_points(hrep_refined(profile, LITERAL), path.d)
        extra = len(literal_points) - len(positroid.bases)
        if literal_points != vertices_from_bases(positroid):
            out.append(Note(
                "refined-literal",
                label,
                f"the literal m(i) refined system admits {extra} extra 0/1 points; "
                "the corrected row-window family is used instead",
            ))
    return out


# ---------------------------------------------------------------- drivers


def sweep_types(max_n: int) -> list[tuple[int, int]]:
    return [(n - d, d) for n in range(2, max_n + 1) for d in range(1, n)]


def verify_types(
    types, skip=(), caps: Caps | None = None, notes_enabled: bool = True
) -> VerifyReport:
    skip = frozenset(skip)
    unknown = skip - set(CHECKS)
    if unknown:
        raise InvalidArgument(f"unknown checks to skip: {sorted(unknown)}")
    caps = caps or Caps.from_env()
    notes: list[Note] = []
    reports = []
    for m, d in types:
        for path in enumerate_paths(m, d):
            reports.append(verify_path(path, skip, caps, notes if notes_enabled else None))
    return VerifyReport(tuple(types), tuple(reports), tuple(notes), tuple(sorted(skip)))


def verify_type(m: int, d: int, skip=(), caps: Caps | None = None) -> VerifyReport:
    """A single type runs every check except LP certification above the LP cap."""
    caps = caps or Caps.from_env()
    single = Caps(count=caps.count, bases=max(caps.bases, m + d), lp=caps.lp)
    return verify_types([(m, d)], skip, single)


def verify_sweep(max_n: int, skip=(), caps: Caps | None = None) -> VerifyReport:
    caps = caps or Caps.from_env()
    if max_n > caps.count:
        raise InvalidArgument(f"--max-n {max_n} exceeds the sweep cap {caps.count}")
    return verify_types(sweep_types(max_n), skip, caps)
