"""Embedded library of published generator matrices with expected parameters.

Every matrix is stored bit-exactly as plain text under data/ together with
a manifest of machine-checkable expectations: (n, k, q), weight enumerator,
divisibility, minimum distance, and the minimality claim.  verify_entry
recomputes everything from scratch; verify_all drives the whole corpus and
is the backbone of the acceptance suite.

Automorphism-group orders and non-isomorphic-code counts that accompany
some matrices in the literature are kept in free-text notes only; nothing
here attempts to check them.
"""

from __future__ import annotations

import fnmatch
import json
from dataclasses import dataclass, field
from importlib import resources

from .. import code as code_mod
from .. import minimal
from ..code import LinearCode, WeightEnumerator

#: Entries with q^k above this enumerate too much for the fast tier.
FAST_TIER_LIMIT = 1 << 20


@dataclass(frozen=True)
class CorpusEntry:
    """One embedded matrix plus its expected, machine-checkable parameters."""

    id: str
    file: str
    q: int
    n: int
    k: int
    expected_d: int | None = None
    expected_we: dict[int, int] | None = None
    expected_delta: int | None = None
    expected_minimal: bool | None = None
    expected_wmax: int | None = None
    claim: str = ""
    notes: tuple[str, ...] = ()

    @property
    def tier(self) -> str:
        return "fast" if self.q**self.k <= FAST_TIER_LIMIT else "slow"

    def matrix_text(self) -> str:
        return (
            resources.files("mincodes.corpus")
            .joinpath(self.file)
            .read_text(encoding="utf-8")
        )

    def load(self) -> LinearCode:
        c = code_mod.parse_code(self.matrix_text(), self.q)
        if (c.n, c.k) != (self.n, self.k):
            raise ValueError(
                f"{self.id}: stored matrix is [{c.n},{c.k}], manifest says "
                f"[{self.n},{self.k}]"
            )
        return c


@dataclass
class EntryReport:
    """Outcome of re-deriving one corpus entry's expected properties."""

    id: str
    passed: bool
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    def fail(self, prop: str, expected, actual) -> None:
        self.checks[prop] = False
        self.details[prop] = f"expected {expected}, got {actual}"
        self.passed = False

    def ok(self, prop: str) -> None:
        self.checks[prop] = True


_cache: list[CorpusEntry] | None = None


def entries() -> list[CorpusEntry]:
    """All corpus entries, manifest order."""
    global _cache
    if _cache is None:
        raw = json.loads(
            resources.files("mincodes.corpus")
            .joinpath("manifest.json")
            .read_text(encoding="utf-8")
        )
        out = []
        for e in raw["entries"]:
            we = e.get("expected_we")
            out.append(
                CorpusEntry(
                    id=e["id"],
                    file=e["file"],
                    q=e["q"],
                    n=e["n"],
                    k=e["k"],
                    expected_d=e.get("expected_d"),
                    expected_we={int(w): c for w, c in we.items()} if we else None,
                    expected_delta=e.get("expected_delta"),
                    expected_minimal=e.get("expected_minimal"),
                    expected_wmax=e.get("expected_wmax"),
                    claim=e.get("claim", ""),
                    notes=tuple(e.get("notes", ())),
                )
            )
        _cache = out
    return list(_cache)


def get(entry_id: str) -> CorpusEntry:
    for e in entries():
        if e.id == entry_id:
            return e
    raise KeyError(f"no corpus entry {entry_id!r}")


def load(entry_id: str) -> LinearCode:
    """Parse the stored matrix of one entry."""
    return get(entry_id).load()


def verify_entry(entry: CorpusEntry, max_codewords: int | None = None) -> EntryReport:
    """Recompute every expected property of one entry and compare.

    Checks, in order: parse to the declared (n, k, q); weight enumerator;
    minimum distance; divisibility; maximum weight; minimality (geometric
    oracle); and, for entries claimed minimal, the three minimal-code
    bounds.  Any mismatch is reported with expected vs actual.
    """
    report = EntryReport(id=entry.id, passed=True)
    try:
        c = entry.load()
    except Exception as exc:  # parse/shape failure is a hard mismatch
        report.fail("parse", f"[{entry.n},{entry.k}]_{entry.q}", repr(exc))
        return report
    report.ok("parse")

    budget = max_codewords if max_codewords is not None else max(
        code_mod.DEFAULT_MAX_CODEWORDS, entry.q**entry.k
    )
    we = code_mod.weight_enumerator(c, budget)

    if entry.expected_we is not None:
        if we.counts == entry.expected_we:
            report.ok("weight_enumerator")
        else:
            report.fail("weight_enumerator", entry.expected_we, we.counts)
    if entry.expected_d is not None:
        if we.min_weight == entry.expected_d:
            report.ok("min_distance")
        else:
            report.fail("min_distance", entry.expected_d, we.min_weight)
    if entry.expected_delta is not None:
        if we.divisibility == entry.expected_delta:
            report.ok("divisibility")
        else:
            report.fail("divisibility", entry.expected_delta, we.divisibility)
    if entry.expected_wmax is not None:
        if we.max_weight == entry.expected_wmax:
            report.ok("max_weight")
        else:
            report.fail("max_weight", entry.expected_wmax, we.max_weight)
    if entry.expected_minimal is not None:
        actual = minimal.is_minimal_geometric(c)
        if actual == entry.expected_minimal:
            report.ok("minimal")
        else:
            report.fail("minimal", entry.expected_minimal, actual)
        if entry.expected_minimal:
            br = minimal.bounds_report(c, assume_minimal=True, max_codewords=budget)
            if br.all_satisfied:
                report.ok("bounds")
            else:
                report.fail("bounds", "all satisfied", br.satisfied)
    return report


def verify_all(
    filter_glob: str = "*",
    tier: str = "all",
    max_codewords: int | None = None,
) -> list[EntryReport]:
    """Verify every entry whose id matches the glob, honoring cost tiers."""
    if tier not in ("fast", "all"):
        raise ValueError("tier must be 'fast' or 'all'")
    reports = []
    for e in entries():
        if not fnmatch.fnmatch(e.id, filter_glob):
            continue
        if tier == "fast" and e.tier != "fast":
            continue
        reports.append(verify_entry(e, max_codewords))
    return reports
