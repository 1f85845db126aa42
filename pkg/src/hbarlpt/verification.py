"""Independent checks of computed coefficient tables.

The residual check rebuilds each ``C_k(r)`` as a :class:`TruncatedSeries`,
forms the order-k Riccati equation with series products (not with the index
loops used by the recursions) and reports the mismatch per power of r.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .coulomb import CoulombPotential, DebyeSpec, coulomb_closed_form, coulomb_series, debye_closed_form, debye_taylor
from .exact import TruncatedSeries
from .oscillator import OscillatorPotential, oscillator_closed_form, oscillator_series
from .tables import COULOMB, OSCILLATOR, CoefficientTable, EnergySeries, QuantumNumbers

__all__ = [
    "ResidualReport",
    "Mismatch",
    "CrossCheckReport",
    "VerificationReport",
    "riccati_residual",
    "quantization_residue",
    "cross_check_closed_forms",
    "verify_table",
    "DEFAULT_GRID",
]

DEFAULT_GRID = tuple((n, l) for n in range(4) for l in range(4))


@dataclass(frozen=True)
class ResidualReport:
    order: int
    residual_coefficients: tuple[Fraction, ...]
    leading_power: int
    step: int
    all_zero: bool

    @property
    def first_unchecked_power(self) -> int:
        """Lowest power of r that the stored index budget cannot test."""
        return self.leading_power + self.step * len(self.residual_coefficients)

    def nonzero_powers(self) -> list[int]:
        return [
            self.leading_power + self.step * i
            for i, c in enumerate(self.residual_coefficients)
            if c != 0
        ]


def _series(table: CoefficientTable, k: int) -> TruncatedSeries:
    coeffs = [table[k, i] for i in range(table.max_index + 1)]
    if table.family == OSCILLATOR:
        lead = 1 if k == 0 else 1 - 2 * k
    else:
        lead = -k
    return TruncatedSeries(coeffs, lead)


def _derivative(s: TruncatedSeries, step: int) -> TruncatedSeries:
    lp = s.leading_power
    return TruncatedSeries(
        ((lp + step * i) * c for i, c in enumerate(s.coefficients)), lp - 1
    )


def _rhs_terms(family: str, pot, qn: QuantumNumbers, energies: EnergySeries, k: int) -> list[tuple[int, Fraction]]:
    """Right-hand side of the order-k equation as (power of r, coefficient) pairs."""
    m = pot.m
    terms: list[tuple[int, Fraction]] = []
    if family == OSCILLATOR:
        if k == 0:
            terms.append((2, m * m * pot.omega**2))
            terms.extend((2 * i + 2, 2 * m * f) for i, f in enumerate(pot.f, start=1))
        else:
            terms.append((0, -2 * m * energies[k]))
    else:
        terms.append((0, -2 * m * energies[k]))
        if k == 1:
            terms.extend((i - 1, 2 * m * v) for i, v in enumerate(pot.V))
    if k == 2:
        terms.append((-2, Fraction(qn.L)))
    return terms


def riccati_residual(
    table: CoefficientTable,
    energies: EnergySeries,
    pot,
    qn: QuantumNumbers,
    k: int,
) -> ResidualReport:
    """Mismatch of the order-k equation ``C'_{k-1} + sum_j C_j C_{k-j} = rhs_k``."""
    if k < 0 or k > table.max_order:
        raise ValueError(
            f"order {k} needs C_{k} but the table stops at order {table.max_order}"
        )
    family = table.family
    step = 2 if family == OSCILLATOR else 1
    parts = [_series(table, j) for j in range(k + 1)]
    lhs = parts[0] * parts[k]
    for j in range(1, k + 1):
        lhs = lhs + parts[j] * parts[k - j]
    if k >= 1:
        lhs = lhs + _derivative(_series(table, k - 1), step)

    residual = list(lhs.coefficients)
    lead = lhs.leading_power
    for power, value in _rhs_terms(family, pot, qn, energies, k):
        offset = power - lead
        if offset < 0 or offset % step:
            raise AssertionError(f"term r^{power} does not fit a series starting at r^{lead}")
        idx = offset // step
        if idx < len(residual):
            residual[idx] -= value
    return ResidualReport(k, tuple(residual), lead, step, all(c == 0 for c in residual))


def quantization_residue(table: CoefficientTable, k: int) -> Fraction:
    """Stored residue coefficient ``C^k_{k-1}``; should equal ``N delta_{1k}``."""
    if k < 1:
        raise ValueError("the residue condition starts at k = 1")
    return table[k, k - 1]


@dataclass(frozen=True)
class Mismatch:
    family: str
    n: int
    l: int
    sample: int
    k: int
    recursion: Fraction
    closed_form: Fraction

    def as_dict(self) -> dict:
        d = asdict(self)
        d["recursion"] = str(self.recursion)
        d["closed_form"] = str(self.closed_form)
        return d


@dataclass
class CrossCheckReport:
    family: str
    comparisons: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    skipped_orders: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check_closed_forms(
    family: str,
    samples: Sequence,
    grid: Iterable[tuple[int, int]] = DEFAULT_GRID,
    K: int = 5,
    skip_orders: Iterable[int] | None = None,
) -> CrossCheckReport:
    """Compare recursion output with the explicit low-order formulas.

    ``family`` is ``"oscillator"`` (samples of :class:`OscillatorPotential`),
    ``"coulomb"`` (:class:`CoulombPotential`) or ``"debye"`` (:class:`DebyeSpec`,
    compared against the quoted Debye-specific expressions; order 4 is
    skipped by default because the quoted sign is wrong).
    """
    if family == "debye" and skip_orders is None:
        skip_orders = (4,)
    skip = tuple(sorted(set(skip_orders or ())))
    report = CrossCheckReport(family, skipped_orders=skip)
    for s_idx, sample in enumerate(samples):
        for n, l in sorted(grid):
            qn = QuantumNumbers(n, l)
            if family == OSCILLATOR:
                if not 1 <= K <= 5:
                    raise ValueError("oscillator closed forms cover K = 1..5")
                series, _ = oscillator_series(sample, qn, K)
                ref = lambda k: oscillator_closed_form(sample, qn, k)
            elif family == COULOMB:
                if not 0 <= K <= 5:
                    raise ValueError("Coulomb closed forms cover K = 0..5")
                series, _ = coulomb_series(sample, qn, K)
                ref = lambda k: coulomb_closed_form(sample, qn, k)
            elif family == "debye":
                series, _ = coulomb_series(debye_taylor(sample, K + 1), qn, K)
                ref = lambda k: debye_closed_form(sample, qn, k)
            else:
                raise ValueError(f"unknown family {family!r}")
            for k in series.orders():
                if k in skip:
                    continue
                report.comparisons += 1
                got, want = series[k], ref(k)
                if got != want:
                    report.mismatches.append(Mismatch(family, n, l, s_idx, k, got, want))
    return report


@dataclass
class VerificationReport:
    family: str
    n: int
    l: int
    K: int
    residual_failures: list[tuple[int, list[int]]] = field(default_factory=list)
    quantization_failures: list[tuple[int, Fraction, int]] = field(default_factory=list)
    cross_check: CrossCheckReport | None = None

    @property
    def ok(self) -> bool:
        return (
            not self.residual_failures
            and not self.quantization_failures
            and (self.cross_check is None or self.cross_check.ok)
        )

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "l": self.l,
            "K": self.K,
            "ok": self.ok,
            "residual_failures": [
                {"k": k, "powers": powers} for k, powers in self.residual_failures
            ],
            "quantization_failures": [
                {"k": k, "stored": str(got), "expected": want}
                for k, got, want in self.quantization_failures
            ],
        }
        if self.cross_check is not None:
            out["cross_check"] = {
                "family": self.cross_check.family,
                "comparisons": self.cross_check.comparisons,
                "mismatches": [m.as_dict() for m in self.cross_check.mismatches],
                "skipped_orders": list(self.cross_check.skipped_orders),
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"verification: {self.family} n={self.n} l={self.l} K={self.K}"]
        lines.append(
            f"riccati residuals: {len(self.residual_failures)} failing orders"
        )
        for k, powers in self.residual_failures:
            lines.append(f"  order {k}: nonzero at r^{powers}")
        lines.append(
            f"quantization residues: {len(self.quantization_failures)} failing orders"
        )
        for k, got, want in self.quantization_failures:
            lines.append(f"  C^{k}_{k - 1} = {got}, expected {want}")
        if self.cross_check is not None:
            cc = self.cross_check
            lines.append(
                f"closed-form cross-check ({cc.family}): {cc.comparisons} comparisons, "
                f"{len(cc.mismatches)} mismatches"
            )
            if cc.skipped_orders:
                lines.append(f"  skipped orders: {list(cc.skipped_orders)}")
            for mm in cc.mismatches:
                lines.append(
                    f"  n={mm.n} l={mm.l} sample={mm.sample} k={mm.k}: "
                    f"recursion {mm.recursion} != closed form {mm.closed_form}"
                )
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def verify_table(
    table: CoefficientTable,
    energies: EnergySeries,
    pot,
    qn: QuantumNumbers,
) -> VerificationReport:
    """Residuals at every order and residues at every k >= 1 of one table."""
    report = VerificationReport(table.family, qn.n, qn.l, table.max_order)
    N = qn.zero_count(table.family)
    for k in range(table.max_order + 1):
        res = riccati_residual(table, energies, pot, qn, k)
        if not res.all_zero:
            report.residual_failures.append((k, res.nonzero_powers()))
    for k in range(1, table.max_order + 1):
        got = quantization_residue(table, k)
        want = N if k == 1 else 0
        if got != want:
            report.quantization_failures.append((k, got, want))
    return report
