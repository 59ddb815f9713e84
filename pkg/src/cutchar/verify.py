"""The identity and inequality checks, and grid sweeps over weight pairs.

Every check compares two quantities produced by independent code paths and
returns a :class:`CheckResult`; checks never raise on mathematical failure.
The Morse-type checks factor the difference of Euler polynomials as
(1 + t) * Q and attach Q as the witness: the check passes exactly when Q is
coefficientwise nonnegative, and equality of the two sides is visible as
Q == 0.  When no (1 + t) factor exists the check fails with the t = -1
value attached as the residual.

Check ids:

* ``gluing``          index(M) = index(plus) + index(minus) - rank * u^0
* ``mcut``            euler(cut) - euler(M) = (1+t) Q,  Q >= 0
* ``morse``           euler(plus) + euler(minus) + t*rank*u^0 - euler(M) = (1+t) Q',  Q' >= 0
* ``mv``              same left side against euler(cut),  Q'' >= 0
* ``simple``          h^0(plus) + h^0(minus) >= h^0(M) and
                      h^1(plus) + h^1(minus) + rank * u^0 >= h^1(M)
* ``semicontinuity``  h^p(cut) >= h^p(M) for p = 0, 1, with equal index
* ``oracle``          closed forms agree with the Cech, nodal Cech and
                      localization recomputations
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from io import StringIO

from .characters import Character, CharPoly, NotDivisible, morse_quotient
from .geometry import CohomologyTable, EquivBundleCP1, LineWeights, cohomology, cut, mcut_cohomology
from .oracles import cech_cohomology_nodal, cech_cohomology_p1, localization_index

__all__ = [
    "CheckResult",
    "SweepReport",
    "ALL_CHECKS",
    "MORSE_CHECKS",
    "run_check",
    "sweep",
    "grid_bundles",
    "equality_region",
    "verify_gluing",
    "verify_cut_inequality",
    "verify_morse",
    "verify_mv_morse",
    "verify_simple",
    "verify_semicontinuity",
    "cross_validate",
]


@dataclass(frozen=True, slots=True)
class CheckResult:
    """Outcome of one check on one bundle.

    ``witness`` is the certificate a passing inequality produces (the Morse
    quotient, or the slack of a direct comparison); it is kept on failures
    too, where its negative coefficients locate the violation.  ``residual``
    is attached when the claimed identity itself fails (no (1+t) factor, or
    two routes disagree) and holds the difference.
    """

    check_id: str
    bundle: EquivBundleCP1
    passed: bool
    witness: CharPoly | None = None
    residual: CharPoly | None = None

    def to_json_obj(self) -> dict:
        return {
            "check_id": self.check_id,
            "bundle": self.bundle.literal(),
            "passed": self.passed,
            "witness": None if self.witness is None else self.witness.to_json_obj(),
            "residual": None if self.residual is None else self.residual.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: object) -> "CheckResult":
        if not isinstance(obj, dict) or set(obj) != {"check_id", "bundle", "passed", "witness", "residual"}:
            raise ValueError(f"malformed check result: {obj!r}")
        if obj["check_id"] not in _REGISTRY:
            raise ValueError(f"unknown check id {obj['check_id']!r}")
        if type(obj["passed"]) is not bool:
            raise ValueError(f"passed must be a boolean, got {obj['passed']!r}")
        return cls(
            obj["check_id"],
            EquivBundleCP1.parse(obj["bundle"]),
            obj["passed"],
            None if obj["witness"] is None else CharPoly.from_json_obj(obj["witness"]),
            None if obj["residual"] is None else CharPoly.from_json_obj(obj["residual"]),
        )


def _morse_check(check_id: str, bundle: EquivBundleCP1, lhs: CharPoly, rhs: CharPoly) -> CheckResult:
    try:
        q = morse_quotient(lhs, rhs)
    except NotDivisible as exc:
        return CheckResult(check_id, bundle, False, residual=CharPoly([exc.residual]))
    return CheckResult(check_id, bundle, q.is_nonneg(), witness=q)


def _tables(bundle: EquivBundleCP1) -> tuple[CohomologyTable, CohomologyTable, CohomologyTable, CohomologyTable, int]:
    cutd = cut(bundle)
    return (
        cohomology(bundle),
        cohomology(cutd.plus),
        cohomology(cutd.minus),
        mcut_cohomology(cutd),
        cutd.red_dims[0],
    )


def verify_gluing(bundle: EquivBundleCP1) -> CheckResult:
    """Index additivity over the cut, correcting for the reduced point."""
    tm, tp, tmin, _, red0 = _tables(bundle)
    lhs = tm.index()
    rhs = tp.index() + tmin.index() - Character.monomial(0, red0)
    if lhs == rhs:
        return CheckResult("gluing", bundle, True)
    return CheckResult("gluing", bundle, False, residual=CharPoly([lhs - rhs]))


def verify_cut_inequality(bundle: EquivBundleCP1) -> CheckResult:
    """euler(cut) dominates euler(M) by a nonnegative (1+t) multiple."""
    tm, _, _, tcut, _ = _tables(bundle)
    return _morse_check("mcut", bundle, tcut.euler_poly(), tm.euler_poly())


def _sides_euler(tp: CohomologyTable, tmin: CohomologyTable, red0: int) -> CharPoly:
    node_term = CharPoly([Character(), Character.monomial(0, red0)])
    return tp.euler_poly() + tmin.euler_poly() + node_term


def verify_morse(bundle: EquivBundleCP1) -> CheckResult:
    """The two sides plus the node term dominate euler(M)."""
    tm, tp, tmin, _, red0 = _tables(bundle)
    return _morse_check("morse", bundle, _sides_euler(tp, tmin, red0), tm.euler_poly())


def verify_mv_morse(bundle: EquivBundleCP1) -> CheckResult:
    """The two sides plus the node term dominate euler(cut)."""
    _, tp, tmin, tcut, red0 = _tables(bundle)
    return _morse_check("mv", bundle, _sides_euler(tp, tmin, red0), tcut.euler_poly())


def verify_simple(bundle: EquivBundleCP1) -> CheckResult:
    """Degreewise inequalities between the sides and M, no factoring."""
    tm, tp, tmin, _, red0 = _tables(bundle)
    d0 = tp.h0 + tmin.h0 - tm.h0
    d1 = tp.h1 + tmin.h1 + Character.monomial(0, red0) - tm.h1
    slack = CharPoly([d0, d1])
    return CheckResult("simple", bundle, slack.is_nonneg(), witness=slack)


def verify_semicontinuity(bundle: EquivBundleCP1) -> CheckResult:
    """Cutting can only grow each h^p, and never moves the index."""
    tm, _, _, tcut, _ = _tables(bundle)
    slack = CharPoly([tcut.h0 - tm.h0, tcut.h1 - tm.h1])
    index_gap = tcut.index() - tm.index()
    passed = slack.is_nonneg() and not index_gap
    residual = None if not index_gap else CharPoly([index_gap])
    return CheckResult("semicontinuity", bundle, passed, witness=slack, residual=residual)


def cross_validate(bundle: EquivBundleCP1) -> CheckResult:
    """Closed forms against the Cech, nodal Cech and localization routes."""
    tm, _, _, tcut, _ = _tables(bundle)
    cech_h0 = Character()
    cech_h1 = Character()
    loc_index = Character()
    for s in bundle.summands:
        table = cech_cohomology_p1(s)
        cech_h0 += table.h0
        cech_h1 += table.h1
        loc_index += localization_index(s)
    nodal = cech_cohomology_nodal(cut(bundle))
    diffs = [
        tm.h0 - cech_h0,
        tm.h1 - cech_h1,
        tcut.h0 - nodal.h0,
        tcut.h1 - nodal.h1,
        tm.index() - loc_index,
    ]
    for diff in diffs:
        if diff:
            return CheckResult("oracle", bundle, False, residual=CharPoly([diff]))
    return CheckResult("oracle", bundle, True)


_REGISTRY: dict[str, object] = {
    "gluing": verify_gluing,
    "mcut": verify_cut_inequality,
    "morse": verify_morse,
    "mv": verify_mv_morse,
    "simple": verify_simple,
    "semicontinuity": verify_semicontinuity,
    "oracle": cross_validate,
}

ALL_CHECKS: tuple[str, ...] = tuple(_REGISTRY)

#: Checks whose witness is a Morse quotient; a zero witness means the two
#: sides are equal, which is what the equality sets in sweep reports track.
MORSE_CHECKS: tuple[str, ...] = ("mcut", "morse", "mv")


def run_check(check_id: str, bundle: EquivBundleCP1) -> CheckResult:
    if check_id not in _REGISTRY:
        raise ValueError(f"unknown check id {check_id!r}; known: {', '.join(ALL_CHECKS)}")
    return _REGISTRY[check_id](bundle)


@dataclass(frozen=True, slots=True)
class SweepReport:
    """All check results over a grid of bundles, plus derived views.

    ``results[i]`` are the results for ``grid[i]`` in registry order.
    ``equality_sets`` lists, per Morse-type check, the bundles whose witness
    is exactly zero.  ``claimed_region`` is set only by
    :func:`equality_region` and carries the grid points satisfying
    r_Q <= 0 <= r_P, for comparison against the computed sets.
    """

    grid: tuple[EquivBundleCP1, ...]
    results: tuple[tuple[CheckResult, ...], ...]
    summary: dict[str, dict[str, int]]
    equality_sets: dict[str, tuple[str, ...]]
    claimed_region: tuple[str, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for row in self.results for r in row)

    def to_json_obj(self) -> dict:
        obj = {
            "grid": [b.literal() for b in self.grid],
            "results": [[r.to_json_obj() for r in row] for row in self.results],
            "summary": self.summary,
            "equality_sets": {cid: list(lits) for cid, lits in self.equality_sets.items()},
        }
        if self.claimed_region is not None:
            obj["claimed_region"] = list(self.claimed_region)
        return obj

    @classmethod
    def from_json_obj(cls, obj: object) -> "SweepReport":
        if not isinstance(obj, dict):
            raise ValueError(f"sweep report must be a JSON object, got {obj!r}")
        required = {"grid", "results", "summary", "equality_sets"}
        if not required <= set(obj) or not set(obj) <= required | {"claimed_region"}:
            raise ValueError(f"sweep report keys must be {sorted(required)} (+ claimed_region), got {sorted(obj)}")
        grid = tuple(EquivBundleCP1.parse(lit) for lit in obj["grid"])
        results = tuple(
            tuple(CheckResult.from_json_obj(r) for r in row) for row in obj["results"]
        )
        if len(grid) != len(results):
            raise ValueError("grid and results have different lengths")
        for b, row in zip(grid, results):
            for r in row:
                if r.bundle != b:
                    raise ValueError(f"result bundle {r.bundle.literal()} under grid entry {b.literal()}")
        summary = obj["summary"]
        recounted = _summarize(results)
        if summary != recounted:
            raise ValueError(f"summary {summary} does not match results {recounted}")
        equality_sets = {cid: tuple(lits) for cid, lits in obj["equality_sets"].items()}
        claimed = obj.get("claimed_region")
        return cls(grid, results, summary, equality_sets, None if claimed is None else tuple(claimed))

    def to_csv(self) -> str:
        """Delimited form, one row per (bundle, check).

        The witness column holds the compact JSON of the witness when there
        is one, else of the residual, else is empty.
        """
        import csv

        buf = StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r_P", "r_Q", "check_id", "passed", "witness"])
        for bundle, row in zip(self.grid, self.results):
            rp = ";".join(str(s.r_p) for s in bundle.summands)
            rq = ";".join(str(s.r_q) for s in bundle.summands)
            for r in row:
                payload = r.witness if r.witness is not None else r.residual
                cell = "" if payload is None else json.dumps(payload.to_json_obj(), separators=(",", ":"))
                writer.writerow([rp, rq, r.check_id, str(r.passed).lower(), cell])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = ["# Sweep report", ""]
        lines.append(f"- Bundles: {len(self.grid)}")
        lines.append(f"- Checks: {', '.join(self.summary)}")
        lines.append(f"- Overall: {'PASS' if self.passed else 'FAIL'}")
        lines += ["", "## Summary", "", "| check | passed | failed |", "| --- | ---: | ---: |"]
        for cid, counts in self.summary.items():
            lines.append(f"| {cid} | {counts['passed']} | {counts['failed']} |")
        if self.equality_sets:
            lines += ["", "## Equality sets", ""]
            for cid, lits in self.equality_sets.items():
                if lits:
                    shown = ", ".join(f"`{lit}`" for lit in lits)
                    lines.append(f"- `{cid}` ({len(lits)}): {shown}")
                else:
                    lines.append(f"- `{cid}`: none")
        if self.claimed_region is not None:
            lines += ["", "## Claimed equality region", ""]
            lines.append(f"- r_Q <= 0 <= r_P holds at {len(self.claimed_region)} grid points")
            if self.claimed_region:
                lines.append("- " + ", ".join(f"`{lit}`" for lit in self.claimed_region))
        failures = [r for row in self.results for r in row if not r.passed]
        if failures:
            lines += ["", "## Failures", "", "| bundle | check | witness | residual |", "| --- | --- | --- | --- |"]
            for r in failures:
                w = "" if r.witness is None else str(r.witness)
                res = "" if r.residual is None else str(r.residual)
                lines.append(f"| `{r.bundle.literal()}` | {r.check_id} | {w} | {res} |")
        if len(self.grid) == 1:
            lines += ["", "## Details", "", "| check | passed | witness | residual |", "| --- | --- | --- | --- |"]
            for r in self.results[0]:
                w = "" if r.witness is None else str(r.witness)
                res = "" if r.residual is None else str(r.residual)
                lines.append(f"| {r.check_id} | {str(r.passed).lower()} | {w} | {res} |")
        return "\n".join(lines) + "\n"


def _summarize(results: tuple[tuple[CheckResult, ...], ...]) -> dict[str, dict[str, int]]:
    summary: dict[str, dict[str, int]] = {}
    for row in results:
        for r in row:
            counts = summary.setdefault(r.check_id, {"passed": 0, "failed": 0})
            counts["passed" if r.passed else "failed"] += 1
    return summary


def _normalize_checks(check_ids) -> tuple[str, ...]:
    if check_ids is None:
        return ALL_CHECKS
    wanted = set()
    for cid in check_ids:
        if cid not in _REGISTRY:
            raise ValueError(f"unknown check id {cid!r}; known: {', '.join(ALL_CHECKS)}")
        wanted.add(cid)
    return tuple(cid for cid in ALL_CHECKS if cid in wanted)


def sweep(bundles, check_ids=None, fail_fast: bool = False) -> SweepReport:
    """Run the selected checks over the bundles, in a deterministic order.

    Bundles are visited in the given order, checks in registry order.  With
    ``fail_fast`` the sweep stops right after the first failing check and
    the grid is trimmed to the bundles actually visited.
    """
    grid = tuple(bundles)
    if not grid:
        raise ValueError("sweep needs at least one bundle")
    selected = _normalize_checks(check_ids)
    rows: list[tuple[CheckResult, ...]] = []
    stop = False
    for bundle in grid:
        row: list[CheckResult] = []
        for cid in selected:
            result = _REGISTRY[cid](bundle)
            row.append(result)
            if fail_fast and not result.passed:
                stop = True
                break
        rows.append(tuple(row))
        if stop:
            break
    results = tuple(rows)
    equality_sets = {
        cid: tuple(
            bundle.literal()
            for bundle, row in zip(grid, results)
            for r in row
            if r.check_id == cid and r.passed and r.witness == CharPoly()
        )
        for cid in selected
        if cid in MORSE_CHECKS
    }
    return SweepReport(grid[: len(results)], results, _summarize(results), equality_sets)


def grid_bundles(rp_range: tuple[int, int], rq_range: tuple[int, int]) -> list[EquivBundleCP1]:
    """Rank-one bundles over the inclusive grid, r_P outer, r_Q inner."""
    lo_p, hi_p = rp_range
    lo_q, hi_q = rq_range
    if lo_p > hi_p or lo_q > hi_q:
        raise ValueError("ranges must be nonempty")
    return [
        EquivBundleCP1((LineWeights(rp, rq),))
        for rp in range(lo_p, hi_p + 1)
        for rq in range(lo_q, hi_q + 1)
    ]


def equality_region(rp_range: tuple[int, int], rq_range: tuple[int, int]) -> SweepReport:
    """Map where the Morse-type inequalities are equalities on a grid.

    Runs the ``mcut`` and ``morse`` checks over the rank-one grid and
    attaches the points with r_Q <= 0 <= r_P as the claimed region, so the
    report can be compared against the computed equality sets.
    """
    grid = grid_bundles(rp_range, rq_range)
    report = sweep(grid, ("mcut", "morse"))
    claimed = tuple(
        b.literal() for b in grid if b.summands[0].r_q <= 0 <= b.summands[0].r_p
    )
    return replace(report, claimed_region=claimed)
