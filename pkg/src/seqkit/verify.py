"""Compare computed sequences with OEIS b-file fixtures."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .bfile import load_fixture
from .convolution import solve_reversion_recurrence_zero
from .patalan import (
    antidiagonal_rows,
    super_patalan_dual_check,
    super_patalan_generators,
    super_patalan_matrix,
)
from .riordan import dual_riordan, dual_via_window, riordan_build

# Polynomials whose reversions are listed in OEIS, coefficients from x^0 up.
TABLE1 = (
    ("A001002", (0, 1, -1, -1)),
    ("A192945", (0, 1, -2, -1)),
    ("A250886", (0, 1, -1, -2)),
    ("A120590", (0, 1, -3, -1)),
    ("A276310", (0, 1, -2, -2)),
    ("A276314", (0, 1, -1, -3)),
    ("A276315", (0, 1, -3, -2)),
    ("A250887", (0, 1, -2, -3)),
    ("A006013", (0, 1, -2, 1)),
    ("A005159", (0, 1, -3, 1)),
    ("A085614", (0, 1, -2, 2)),
    ("A276316", (0, 1, -4, 1)),
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


def poly_to_text(coeffs: Sequence[int]) -> str:
    out = ""
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
        body = mono if abs(c) == 1 and k > 0 else f"{abs(c)}{mono}"
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


def rev_terms(poly: Sequence[int], count: int) -> list[Fraction]:
    """REV convention: the reversion's coefficients of ``x^1 .. x^count``."""
    return solve_reversion_recurrence_zero(poly, count)[1:]


@dataclass(frozen=True)
class Check:
    name: str
    expected_source: str
    computed_source: str
    status: str
    first_mismatch: int | None = None
    compared: int = 0
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def overall(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if SKIP in statuses:
            return "incomplete"
        return PASS

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self) -> dict:
        return {"overall": self.overall, "checks": [asdict(c) for c in self.checks]}

    @classmethod
    def from_json(cls, obj: dict) -> VerificationReport:
        return cls(tuple(Check(**c) for c in obj["checks"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.name}"
            if c.status == PASS:
                line += f"  ({c.compared} terms)"
            elif c.status == FAIL and c.first_mismatch is not None:
                line += f"  first mismatch at term {c.first_mismatch}"
            if c.detail:
                line += f"  [{c.detail}]"
            lines.append(line)
        n = self.counts()
        lines.append(f"overall: {self.overall} ({n[PASS]} passed, {n[FAIL]} failed, {n[SKIP]} skipped)")
        return "\n".join(lines) + "\n"


def compare_terms(name: str, expected_source: str, computed_source: str,
                  expected: Sequence[int], computed: Sequence, detail: str = "") -> Check:
    count = min(len(expected), len(computed))
    for i in range(count):
        if Fraction(expected[i]) != computed[i]:
            return Check(name, expected_source, computed_source, FAIL, i, count,
                         detail or f"expected {expected[i]}, computed {computed[i]}")
    return Check(name, expected_source, computed_source, PASS, None, count, detail)


def _fixture_check(name: str, oeis_id: str, fixtures_dir, computed_source: str,
                   compute: Callable[[object], Sequence], detail: str = "") -> Check:
    fixture = load_fixture(fixtures_dir, oeis_id)
    expected_source = f"{oeis_id} b-file"
    if fixture is None:
        return Check(name, expected_source, computed_source, SKIP,
                     detail=f"no fixture b{oeis_id[1:]}.txt")
    expected, computed = compute(fixture)
    return compare_terms(name, f"{expected_source} (offset {fixture.offset})",
                         computed_source, expected, computed, detail)


def _triangle_column0(terms: Sequence[int], count: int) -> list[int]:
    out = []
    for n in range(count):
        i = n * (n + 1) // 2
        if i >= len(terms):
            break
        out.append(terms[i])
    return out


def _rows_needed(count: int) -> int:
    rows = 0
    while rows * (rows + 1) // 2 < count:
        rows += 1
    return rows


def cmd_verify_oeis(fixtures_dir, N: int = 32) -> VerificationReport:
    checks = []

    for oeis_id, poly in TABLE1 + (("A000108", (0, 1, -1)),):
        text = poly_to_text(poly)
        kind = "catalan" if oeis_id == "A000108" else "table1"

        def compute(fx, poly=poly):
            count = min(N, len(fx.terms))
            return fx.terms[:count], rev_terms(poly, count)

        checks.append(_fixture_check(f"{kind}:{oeis_id} rev({text})", oeis_id, fixtures_dir,
                                     "reversion recurrence", compute))

    def super_catalan(fx):
        count = min(N, len(fx.terms))
        rows = _rows_needed(count)
        q = super_patalan_matrix(2, 1, max(rows - 1, 0))
        return fx.terms[:count], antidiagonal_rows(q, rows)[:count]

    checks.append(_fixture_check("quadrant:A068555 super Catalan", "A068555", fixtures_dir,
                                 "lower left quadrant of D(g,f), antidiagonal rows", super_catalan))

    def a046521(fx):
        count = min(N, len(fx.terms))
        rows = _rows_needed(count)
        g, f = super_patalan_generators(2, 1, rows)
        r = riordan_build(g, f, rows)
        flat = [abs(r[n, k]) for n in range(rows) for k in range(n + 1)]
        return fx.terms[:count], flat[:count]

    checks.append(_fixture_check("riordan:A046521 |R(1/sqrt(1-4x), -x/(1-4x))|", "A046521",
                                 fixtures_dir, "riordan_build, rows", a046521))

    for oeis_id, q in (("A283150", 1), ("A283151", 2)):
        def column0(fx, q=q):
            expected = _triangle_column0(fx.terms, 10)
            g, _ = super_patalan_generators(3, q, 10)
            return expected, list(g.coeffs)

        checks.append(_fixture_check(f"dualpair:{oeis_id} column 0 of R((1-9x)^(-{q}/3), -x/(1-9x))",
                                     oeis_id, fixtures_dir, "binomial series", column0))

    for p, q in ((2, 1), (3, 1), (3, 2)):
        name = f"duality:(p,q)=({p},{q})"
        size = min(N, 12)
        g, f = super_patalan_generators(p, q, 2 * size + 1)
        by_window = dual_via_window(g, f, size)
        by_formula = dual_riordan(g, f, size)
        ok = super_patalan_dual_check(p, q, size) and [list(r) for r in by_formula.entries] == by_window
        checks.append(Check(name, f"R((1-{p * p}x)^(-{p - q}/{p}), -x/(1-{p * p}x))",
                            "dual_riordan and D(-j,-i)", PASS if ok else FAIL,
                            None if ok else 0, (size + 1) ** 2,
                            "self-dual" if 2 * q == p and ok else ""))

    return VerificationReport(tuple(sorted(checks, key=lambda c: c.name)))
