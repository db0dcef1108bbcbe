"""Cross-checking closed forms against the Jacobi oracle.

``verify_case`` produces one report per (family, m, n, matrix kind):
closed-form vs numeric deviation, trace residual, positive
semidefiniteness of the matrix, and containment of the canonical
equitable-quotient eigenvalues in the full spectrum.  ``sweep`` runs a
deterministic grid of such cases.  ``verify_random_joins`` stress-tests
the two join formulas on seeded random graph pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .closed_forms import (
    ClosedFormSpectrum,
    fan_distance_laplacian_spectrum,
    fan_laplacian_spectrum,
    join_distance_laplacian_spectrum,
    join_laplacian_spectrum,
    nc_distance_laplacian_spectrum,
    nc_laplacian_spectrum,
)
from .eigen import Spectrum, group_multiplicities, symmetric_eigenvalues
from .graphs import Graph, generalized_fan, join, make_graph, nc_graph
from .matrices import distance_laplacian, laplacian_matrix
from .quotient import Partition, fan_partition, nc_partition, quotient_eigenvalues

DEFAULT_CASE_TOL = 1e-8
PSD_TOL = 1e-9
MAX_SWEEP_PARAM = 64

CASE_KINDS = (
    "fan-laplacian",
    "nc-laplacian",
    "fan-distance-laplacian",
    "nc-distance-laplacian",
)


class SpectrumSizeMismatch(ValueError):
    """Two multisets of different cardinality can never agree."""


def _expand(spectrum_like) -> list[float]:
    if hasattr(spectrum_like, "expanded"):
        return list(spectrum_like.expanded())
    return [float(v) for v in spectrum_like]


def compare_spectra(a, b) -> float:
    """Max elementwise gap between two multisets after ascending expansion."""
    xs = sorted(_expand(a))
    ys = sorted(_expand(b))
    if len(xs) != len(ys):
        raise SpectrumSizeMismatch(f"multiset sizes differ: {len(xs)} vs {len(ys)}")
    if not xs:
        return 0.0
    return max(abs(x - y) for x, y in zip(xs, ys))


@dataclass(frozen=True)
class VerificationReport:
    family: str
    m: int
    n: int
    kind: str
    closed_form: ClosedFormSpectrum
    numeric: Spectrum
    max_abs_deviation: float
    trace_residual: float
    psd_ok: bool
    quotient_containment_ok: bool
    errata_flags: tuple[str, ...]
    passed: bool

    @property
    def case_tag(self) -> str:
        return f"{self.family}-{self.kind}"


def _case_pieces(family: str, m: int, n: int, kind: str):
    if family == "fan":
        graph = generalized_fan(m, n)
        partition = fan_partition(m, n)
        closed = {
            "laplacian": fan_laplacian_spectrum,
            "distance-laplacian": fan_distance_laplacian_spectrum,
        }
    elif family == "nc":
        graph = nc_graph(m, n)
        partition = nc_partition(m, n)
        closed = {
            "laplacian": nc_laplacian_spectrum,
            "distance-laplacian": nc_distance_laplacian_spectrum,
        }
    else:
        raise ValueError(f"unknown family {family!r}")
    if kind not in closed:
        raise ValueError(f"no closed form for kind {kind!r}")
    builder = laplacian_matrix if kind == "laplacian" else distance_laplacian
    return graph, builder(graph), closed[kind](m, n), partition


def verify_case(
    family: str, m: int, n: int, kind: str, tol: float = DEFAULT_CASE_TOL
) -> VerificationReport:
    """Check one closed form against the numeric oracle and the quotient route."""
    _, matrix, closed, partition = _case_pieces(family, m, n, kind)
    raw = symmetric_eigenvalues(matrix)
    numeric = group_multiplicities(raw)
    deviation = compare_spectra(closed, raw)
    trace_residual = abs(closed.total() - float(np.trace(matrix)))
    psd_ok = bool(raw[0] >= -PSD_TOL)
    quotient = quotient_eigenvalues(matrix, partition)
    containment_ok = all(
        float(np.min(np.abs(raw - value))) <= tol for value in quotient.expanded()
    )
    passed = deviation < tol and trace_residual < tol and psd_ok and containment_ok
    return VerificationReport(
        family=family,
        m=m,
        n=n,
        kind=kind,
        closed_form=closed,
        numeric=numeric,
        max_abs_deviation=deviation,
        trace_residual=trace_residual,
        psd_ok=psd_ok,
        quotient_containment_ok=containment_ok,
        errata_flags=closed.errata_notes,
        passed=passed,
    )


def _split_case_kind(case_kind: str) -> tuple[str, str]:
    family, _, kind = case_kind.partition("-")
    if case_kind not in CASE_KINDS:
        raise ValueError(f"unknown case kind {case_kind!r}; expected one of {CASE_KINDS}")
    return family, kind


def sweep(
    m_range: tuple[int, int],
    n_range: tuple[int, int],
    kinds=CASE_KINDS,
    tol: float = DEFAULT_CASE_TOL,
) -> list[VerificationReport]:
    """One report per grid cell per kind, ordered by (m, n, kind position).

    Pair-class cases are skipped below their m, n >= 2 domain.  Failing
    reports are kept, never raised; callers decide what a failure means.
    """
    for lo, hi in (m_range, n_range):
        if not (1 <= lo <= hi <= MAX_SWEEP_PARAM):
            raise ValueError(f"range ({lo}, {hi}) outside 1..{MAX_SWEEP_PARAM}")
    kinds = tuple(kinds)
    for case_kind in kinds:
        _split_case_kind(case_kind)
    reports = []
    for m in range(m_range[0], m_range[1] + 1):
        for n in range(n_range[0], n_range[1] + 1):
            for case_kind in kinds:
                family, kind = _split_case_kind(case_kind)
                if family == "nc" and (m < 2 or n < 2):
                    continue
                reports.append(verify_case(family, m, n, kind, tol=tol))
    return reports


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


# --- serialization ---------------------------------------------------------


def _closed_form_to_dict(cf: ClosedFormSpectrum) -> dict:
    return {
        "pairs": [[v, k] for v, k in cf.pairs],
        "source": cf.source,
        "errata_notes": list(cf.errata_notes),
    }


def _closed_form_from_dict(d: dict) -> ClosedFormSpectrum:
    return ClosedFormSpectrum(
        tuple((float(v), int(k)) for v, k in d["pairs"]),
        d["source"],
        tuple(d["errata_notes"]),
    )


def _spectrum_to_dict(s: Spectrum) -> dict:
    return {"pairs": [[v, k] for v, k in s.pairs], "grouping_tol": s.grouping_tol}


def _spectrum_from_dict(d: dict) -> Spectrum:
    return Spectrum(tuple((float(v), int(k)) for v, k in d["pairs"]), float(d["grouping_tol"]))


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "family": report.family,
        "m": report.m,
        "n": report.n,
        "kind": report.kind,
        "closed_form": _closed_form_to_dict(report.closed_form),
        "numeric": _spectrum_to_dict(report.numeric),
        "max_abs_deviation": report.max_abs_deviation,
        "trace_residual": report.trace_residual,
        "psd_ok": report.psd_ok,
        "quotient_containment_ok": report.quotient_containment_ok,
        "errata_flags": list(report.errata_flags),
        "passed": report.passed,
    }


def report_from_dict(d: dict) -> VerificationReport:
    return VerificationReport(
        family=d["family"],
        m=int(d["m"]),
        n=int(d["n"]),
        kind=d["kind"],
        closed_form=_closed_form_from_dict(d["closed_form"]),
        numeric=_spectrum_from_dict(d["numeric"]),
        max_abs_deviation=float(d["max_abs_deviation"]),
        trace_residual=float(d["trace_residual"]),
        psd_ok=bool(d["psd_ok"]),
        quotient_containment_ok=bool(d["quotient_containment_ok"]),
        errata_flags=tuple(d["errata_flags"]),
        passed=bool(d["passed"]),
    )


def reports_to_json(reports) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def reports_from_json(text: str) -> list[VerificationReport]:
    return [report_from_dict(d) for d in json.loads(text)]


# --- randomized join checks ------------------------------------------------


@dataclass(frozen=True)
class JoinCheck:
    seed: int
    n1: int
    n2: int
    laplacian_deviation: float
    distance_laplacian_deviation: float
    ok: bool


def random_graph(order: int, rng: np.random.Generator) -> Graph:
    """Uniform random simple graph: each pair is an edge with probability 1/2."""
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < 0.5
    ]
    return make_graph(order, edges)


def verify_random_joins(
    pair_count: int = 100,
    seed: int = 20260809,
    max_order: int = 8,
    tol: float = DEFAULT_CASE_TOL,
) -> list[JoinCheck]:
    """Check both join spectrum maps on seeded random pairs of graphs.

    The component graphs may be disconnected; the join never is.  Each
    check records its own seed so any failure is reproducible.
    """
    checks = []
    for k in range(pair_count):
        pair_seed = seed + k
        rng = np.random.default_rng(pair_seed)
        n1 = int(rng.integers(1, max_order + 1))
        n2 = int(rng.integers(1, max_order + 1))
        g1 = random_graph(n1, rng)
        g2 = random_graph(n2, rng)
        spec1 = symmetric_eigenvalues(laplacian_matrix(g1))
        spec2 = symmetric_eigenvalues(laplacian_matrix(g2))
        joined = join(g1, g2)
        lap_dev = compare_spectra(
            join_laplacian_spectrum(spec1, n1, spec2, n2),
            symmetric_eigenvalues(laplacian_matrix(joined)),
        )
        dl_dev = compare_spectra(
            join_distance_laplacian_spectrum(spec1, n1, spec2, n2),
            symmetric_eigenvalues(distance_laplacian(joined)),
        )
        checks.append(
            JoinCheck(
                seed=pair_seed,
                n1=n1,
                n2=n2,
                laplacian_deviation=lap_dev,
                distance_laplacian_deviation=dl_dev,
                ok=lap_dev <= tol and dl_dev <= tol,
            )
        )
    return checks
