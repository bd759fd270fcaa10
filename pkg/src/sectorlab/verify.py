"""Property-verification engine for the operator-mean and entropy inequalities.

Each check runs one proved inequality over a seeded random ensemble and
reports trials, violations, and the worst margin observed.  Margins use one
comparable unit everywhere: Loewner failures are the most negative eigenvalue
of (LHS - RHS) relative to the larger operator norm, scalar failures the
signed relative gap (RHS - LHS)/|RHS|.  A violation anywhere in a
theorem-backed check is a numerical bug, not a math failure; the one
deliberate exception is the arithmetic-geometric-harmonic chain search, which
*expects* to find violations for strongly non-Hermitian inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ensemble import GENERATOR_NAME, SectorSpec, derive_seed, random_accretive, random_unit_vectors
from .entropy import EntropyConfig, relative_entropy, relative_entropy_hpd, tsallis_from_mean
from .errors import SectorlabError
from .linalg import (
    MAX_DIM,
    LoewnerTolerance,
    frob,
    herm_eig,
    inverse,
    op_norm,
    real_part,
    symmetrize,
)
from .means import (
    GeometricMeanConfig,
    arithmetic_mean,
    geometric_mean,
    geometric_mean_hpd,
    harmonic_mean,
    scalar_geometric,
)

DEFAULT_TOLERANCE = LoewnerTolerance(absolute=1e-10, relative=1e-10)

#: condition bound used for every verification ensemble draw
ENSEMBLE_COND_CAP = 100.0

HOMOGENEITY_SCALES = ((1.0, 1.0), (4.0, 9.0), (0.5, 7.3))
HOMOGENEITY_RTOL = 1e-9
SYMMETRY_RTOL = 1e-10

# purpose tags for per-trial stream derivation
_TAG_PAIR_A = 10
_TAG_PAIR_B = 11
_TAG_FAMILY = 12
_TAG_BILIN_X = 13
_TAG_BILIN_XSTAR = 14


@dataclass(frozen=True)
class EnsembleSpec:
    """Seeded recipe for one verification ensemble."""

    dim: int = 3
    trials: int = 100
    seed: int = 0
    sector_angle: float = 0.4 * (math.pi / 2)
    lambda_grid: tuple[float, ...] = (0.1, 0.5, 0.9)

    def __post_init__(self):
        if not (1 <= self.dim <= MAX_DIM):
            raise ValueError(f"dim must lie in [1, {MAX_DIM}], got {self.dim}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not (0.0 <= self.sector_angle < math.pi / 2):
            raise ValueError(f"sector_angle must lie in [0, pi/2), got {self.sector_angle}")
        if not self.lambda_grid:
            raise ValueError("lambda_grid must not be empty")
        for lam in self.lambda_grid:
            if not (0.0 < lam < 1.0):
                raise ValueError(f"lambda grid entries must lie in (0, 1), got {lam}")


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one inequality check over an ensemble."""

    property_id: str
    trials: int
    violations: int
    worst_margin: float
    worst_seed: int
    tolerance_used: LoewnerTolerance
    status: str | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        out = {
            "property_id": self.property_id,
            "trials": self.trials,
            "violations": self.violations,
            "worst_margin": self.worst_margin,
            "worst_seed": self.worst_seed,
            "tolerance": {
                "absolute": self.tolerance_used.absolute,
                "relative": self.tolerance_used.relative,
            },
        }
        if self.status is not None:
            out["status"] = self.status
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def trial_pair(spec: EnsembleSpec, trial: int):
    """The deterministic accretive pair used by every check for this trial."""
    a = random_accretive(SectorSpec(dim=spec.dim, angle=spec.sector_angle,
                                    cond_cap=ENSEMBLE_COND_CAP,
                                    seed=derive_seed(spec.seed, _TAG_PAIR_A, trial)))
    b = random_accretive(SectorSpec(dim=spec.dim, angle=spec.sector_angle,
                                    cond_cap=ENSEMBLE_COND_CAP,
                                    seed=derive_seed(spec.seed, _TAG_PAIR_B, trial)))
    return a, b


def _loewner_margin(x, y, tol: LoewnerTolerance) -> tuple[bool, float]:
    # Normalized Loewner margin: min eig(X - Y) over the larger operator norm.
    xm = symmetrize(x)
    ym = symmetrize(y)
    margin = float(herm_eig(xm - ym)[0][0])
    wx, _ = herm_eig(xm)
    wy, _ = herm_eig(ym)
    big = max(abs(wx[0]), abs(wx[-1]), abs(wy[0]), abs(wy[-1]))
    holds = margin >= -(tol.absolute + tol.relative * big)
    return holds, margin / max(big, 1e-30)


def _scalar_margin(lhs: float, rhs: float, tol: LoewnerTolerance) -> tuple[bool, float]:
    gap = rhs - lhs
    holds = gap >= -(tol.absolute + tol.relative * abs(rhs))
    return holds, gap / max(abs(rhs), 1e-30)


class _Tally:
    def __init__(self):
        self.worst = math.inf
        self.worst_seed = 0
        self.violations = 0
        self.trials = 0

    def trial(self, trial_index: int, margins, failed: bool):
        self.trials += 1
        if failed:
            self.violations += 1
        low = min(margins)
        if low < self.worst:
            self.worst = low
            self.worst_seed = trial_index

    def report(self, property_id: str, tol: LoewnerTolerance, **extra) -> PropertyReport:
        worst = self.worst if math.isfinite(self.worst) else 0.0
        return PropertyReport(property_id=property_id, trials=self.trials,
                              violations=self.violations, worst_margin=worst,
                              worst_seed=self.worst_seed, tolerance_used=tol, **extra)


def check_re_geometric(spec: EnsembleSpec, tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                       cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """Re(A #_lam B) >= (Re A) #_lam (Re B)."""
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            lhs = real_part(geometric_mean(a, b, lam, cfg))
            rhs = geometric_mean_hpd(real_part(a.mat), real_part(b.mat), lam)
            ok, margin = _loewner_margin(lhs, rhs, tol)
            margins.append(margin)
            failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_re_geometric", tol)


def check_re_harmonic(spec: EnsembleSpec,
                      tol: LoewnerTolerance = DEFAULT_TOLERANCE) -> PropertyReport:
    """Re(A !_lam B) >= (Re A) !_lam (Re B)."""
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            lhs = real_part(harmonic_mean(a, b, lam))
            rhs = harmonic_mean(real_part(a.mat), real_part(b.mat), lam)
            ok, margin = _loewner_margin(lhs, symmetrize(rhs), tol)
            margins.append(margin)
            failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_re_harmonic", tol)


def check_re_relative_entropy(spec: EnsembleSpec, tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                              cfg: EntropyConfig = EntropyConfig()) -> PropertyReport:
    """Re(S(A|B)) >= S(Re A | Re B)."""
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        lhs = real_part(relative_entropy(a, b, cfg))
        rhs = relative_entropy_hpd(real_part(a.mat), real_part(b.mat))
        ok, margin = _loewner_margin(lhs, rhs, tol)
        tally.trial(i, [margin], not ok)
    return tally.report("check_re_relative_entropy", tol)


def check_re_tsallis(spec: EnsembleSpec, tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                     cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """Re(T_lam(A|B)) >= T_lam(Re A | Re B)."""
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        ra = real_part(a.mat)
        rb = real_part(b.mat)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            lhs = real_part(tsallis_from_mean(a, b, lam, cfg))
            rhs = (geometric_mean_hpd(ra, rb, lam) - ra) / lam
            ok, margin = _loewner_margin(lhs, symmetrize(rhs), tol)
            margins.append(margin)
            failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_re_tsallis", tol)


def check_vector_family(spec: EnsembleSpec, family_size: int = 3,
                        tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                        cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """sum_k <(Re(A #_lam B))^-1 x_k, x_k> <= geometric mean of the Re-part sums."""
    if family_size < 1:
        raise ValueError(f"family_size must be >= 1, got {family_size}")
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        xs = random_unit_vectors(spec.dim, family_size,
                                 derive_seed(spec.seed, _TAG_FAMILY, i))
        inv_ra = inverse(real_part(a.mat))
        inv_rb = inverse(real_part(b.mat))
        sum_a = sum(np.vdot(x, inv_ra @ x).real for x in xs)
        sum_b = sum(np.vdot(x, inv_rb @ x).real for x in xs)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            inv_mean = inverse(real_part(geometric_mean(a, b, lam, cfg)))
            lhs = sum(np.vdot(x, inv_mean @ x).real for x in xs)
            rhs = scalar_geometric(sum_a, sum_b, lam)
            ok, margin = _scalar_margin(lhs, rhs, tol)
            margins.append(margin)
            failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_vector_family", tol)


def check_norm_inequality(spec: EnsembleSpec, tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                          cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """||(Re(A #_lam B))^-1|| <= ||(Re A)^-1||^(1-lam) * ||(Re B)^-1||^lam."""
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        norm_a = op_norm(inverse(real_part(a.mat)))
        norm_b = op_norm(inverse(real_part(b.mat)))
        margins, failed = [], False
        for lam in spec.lambda_grid:
            lhs = op_norm(inverse(real_part(geometric_mean(a, b, lam, cfg))))
            rhs = scalar_geometric(norm_a, norm_b, lam)
            ok, margin = _scalar_margin(lhs, rhs, tol)
            margins.append(margin)
            failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_norm_inequality", tol)


def check_bilinear(spec: EnsembleSpec, pairs_per_trial: int = 8,
                   tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                   cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """(Re <x*, x>)^2 <= <Re(A #_lam B) x*, x*> * (<(Re A)^-1 x,x> #_lam <(Re B)^-1 x,x>)."""
    if pairs_per_trial < 1:
        raise ValueError(f"pairs_per_trial must be >= 1, got {pairs_per_trial}")
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        xs = random_unit_vectors(spec.dim, pairs_per_trial,
                                 derive_seed(spec.seed, _TAG_BILIN_X, i))
        xstars = random_unit_vectors(spec.dim, pairs_per_trial,
                                     derive_seed(spec.seed, _TAG_BILIN_XSTAR, i))
        inv_ra = inverse(real_part(a.mat))
        inv_rb = inverse(real_part(b.mat))
        margins, failed = [], False
        for lam in spec.lambda_grid:
            re_mean = real_part(geometric_mean(a, b, lam, cfg))
            for x, xstar in zip(xs, xstars):
                lhs = float(np.vdot(x, xstar).real) ** 2
                quad_mean = np.vdot(xstar, re_mean @ xstar).real
                quad_ab = scalar_geometric(np.vdot(x, inv_ra @ x).real,
                                           np.vdot(x, inv_rb @ x).real, lam)
                rhs = quad_mean * quad_ab
                ok, margin = _scalar_margin(lhs, rhs, tol)
                margins.append(margin)
                failed |= not ok
        tally.trial(i, margins, failed)
    return tally.report("check_bilinear", tol)


def check_homogeneity(spec: EnsembleSpec, scales=HOMOGENEITY_SCALES,
                      cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """(alpha A) #_lam (beta B) = alpha^(1-lam) beta^lam (A #_lam B)."""
    tol = LoewnerTolerance(absolute=0.0, relative=HOMOGENEITY_RTOL)
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            base = geometric_mean(a, b, lam, cfg)
            scale_norm = frob(base)
            for alpha, beta in scales:
                scaled = geometric_mean(alpha * a.mat, beta * b.mat, lam, cfg)
                dev = frob(scaled - scalar_geometric(alpha, beta, lam) * base)
                rel = dev / max(scale_norm, 1e-30)
                margins.append(-rel)
                failed |= rel > HOMOGENEITY_RTOL
        tally.trial(i, margins, failed)
    return tally.report("check_homogeneity", tol)


def check_symmetry(spec: EnsembleSpec,
                   cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """A #_lam B = B #_(1-lam) A."""
    tol = LoewnerTolerance(absolute=0.0, relative=SYMMETRY_RTOL)
    tally = _Tally()
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        margins, failed = [], False
        for lam in spec.lambda_grid:
            left = geometric_mean(a, b, lam, cfg)
            right = geometric_mean(b, a, 1.0 - lam, cfg)
            rel = frob(left - right) / max(frob(left), 1e-30)
            margins.append(-rel)
            failed |= rel > SYMMETRY_RTOL
        tally.trial(i, margins, failed)
    return tally.report("check_symmetry", tol)


def search_agh_counterexample(spec: EnsembleSpec, tol: LoewnerTolerance = DEFAULT_TOLERANCE,
                              cfg: GeometricMeanConfig = GeometricMeanConfig()) -> PropertyReport:
    """Hunt for accretive pairs breaking Re(A !_lam B) <= Re(A #_lam B) <= Re(A nabla_lam B).

    For positive definite pairs (angle 0) the chain provably holds; for wide
    sectors it is expected to fail, and `violations` counts the trials where
    at least one link broke.  Success of the search means violations >= 1.
    """
    lams = [0.5] + [l for l in spec.lambda_grid if l != 0.5]
    tally = _Tally()
    witness_detail = None
    for i in range(spec.trials):
        a, b = trial_pair(spec, i)
        margins = []
        broke = None
        for lam in lams:
            sharp = real_part(geometric_mean(a, b, lam, cfg))
            low = real_part(harmonic_mean(a, b, lam))
            high = real_part(arithmetic_mean(a.mat, b.mat, lam))
            ok_low, m_low = _loewner_margin(sharp, low, tol)
            ok_high, m_high = _loewner_margin(high, sharp, tol)
            margins.extend([m_low, m_high])
            if not ok_low and broke is None:
                broke = (lam, "harmonic<=geometric")
            if not ok_high and broke is None:
                broke = (lam, "geometric<=arithmetic")
        tally.trial(i, margins, broke is not None)
        if broke is not None and witness_detail is None:
            witness_detail = f"trial {i}: {broke[1]} fails at lambda={broke[0]:g}"
    status = "found" if tally.violations >= 1 else "warning"
    return tally.report("search_agh_counterexample", tol, status=status, detail=witness_detail)


THEOREM_CHECKS = (
    check_re_geometric,
    check_re_harmonic,
    check_re_relative_entropy,
    check_re_tsallis,
    check_vector_family,
    check_norm_inequality,
    check_bilinear,
    check_homogeneity,
    check_symmetry,
)

CHECKS_BY_ID = {fn.__name__: fn for fn in THEOREM_CHECKS + (search_agh_counterexample,)}


def run_all(spec: EnsembleSpec) -> list[PropertyReport]:
    """Run the nine theorem-backed checks on shared ensemble streams.

    Per-check errors become reports with status "error" instead of aborting
    the remaining checks.
    """
    reports = []
    for fn in THEOREM_CHECKS:
        try:
            reports.append(fn(spec))
        except SectorlabError as exc:
            reports.append(PropertyReport(
                property_id=fn.__name__, trials=0, violations=0, worst_margin=0.0,
                worst_seed=0, tolerance_used=DEFAULT_TOLERANCE,
                status="error", detail=f"{type(exc).__name__}: {exc}"))
    return reports


def reports_to_dict(spec: EnsembleSpec, reports: list[PropertyReport]) -> dict:
    """Assemble the machine-readable report document."""
    return {
        "spec": {
            "dim": spec.dim,
            "trials": spec.trials,
            "seed": spec.seed,
            "sector_angle": spec.sector_angle,
            "lambda_grid": list(spec.lambda_grid),
            "generator": GENERATOR_NAME,
        },
        "reports": [r.to_dict() for r in reports],
    }


def all_theorem_checks_clean(reports: list[PropertyReport]) -> bool:
    """True when every theorem-backed report ran and saw zero violations."""
    for r in reports:
        if r.property_id == "search_agh_counterexample":
            continue
        if r.violations > 0 or r.status == "error":
            return False
    return True
