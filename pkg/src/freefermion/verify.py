"""Pipeline-versus-oracle comparison, overall and sector by sector."""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import (
    MultisetReport,
    compare_multisets,
    dense_matrix,
    expand_multiplicities,
    full_spectrum,
    projected_spectrum,
)
from .sectors import signed_generator
from .solver import SpectrumReport


@dataclass(frozen=True)
class VerifyResult:
    overall: MultisetReport
    sectors: tuple[tuple[str, MultisetReport], ...]
    tolerance: float

    @property
    def equal(self) -> bool:
        return self.overall.equal and all(r.equal for _, r in self.sectors)

    def summary_lines(self) -> list[str]:
        lines = [f"oracle: {self.overall}"]
        for label, rep in self.sectors:
            lines.append(f"  sector {label or '-'}: {rep}")
        return lines


def verify_against_oracle(
    report: SpectrumReport, tol: float = 1e-8, per_sector: bool = True
) -> VerifyResult:
    """Compare the solved spectrum multiset with dense diagonalization.

    The full comparison needs a complete enumeration; the per-sector
    comparison projects the dense Hamiltonian onto the sector's free
    stabilizer eigenvalues and matches the restricted spectra.
    """
    spec = report.analysis.spec
    plan = report.analysis.plan
    ledger = report.analysis.ledger
    sector_reports = []
    if per_sector:
        for sector in report.sectors:
            stabilizers = [
                (signed_generator(gen, 1), ledger.value(gen, sector.bits))
                for gen in plan.free_generators
            ]
            ref = projected_spectrum(spec, stabilizers)
            mine = expand_multiplicities(sector.energies)
            sector_reports.append((sector.label, compare_multisets(mine, ref, tol)))
    if report.complete:
        ref_full = full_spectrum(dense_matrix(spec))
        overall = compare_multisets(
            expand_multiplicities(report.full_spectrum()), ref_full, tol
        )
    else:
        overall = MultisetReport(
            equal=all(r.equal for _, r in sector_reports),
            max_deviation=max((r.max_deviation for _, r in sector_reports), default=0.0),
            first_mismatch=None,
            size_a=0,
            size_b=0,
        )
    return VerifyResult(overall, tuple(sector_reports), tol)
