"""Projective qubit measurements, steered ensembles and numeric correlation.

A von Neumann measurement of the qubit side is a pair of rank-1 projectors
A_i = V |i><i| V^dag with V in SU(2).  Measuring leaves the qudit in one of
two steered d x d states, and the classical correlation of a state is the
supremum of

    S(rho_B) - sum_i p_i S(rho_i)

over all such measurements.  Because the projectors depend only on the Bloch
direction V maps the z-axis to, the optimizer searches the 2-sphere (coarse
grid, then Nelder-Mead refinement); the reported maximum is therefore a
certified lower bound on the supremum for general states, and exact for the
symmetric two-parameter family where the objective is axis-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .operators import (
    DensityMatrix,
    partial_trace_a,
    quantum_mutual_information,
    tensor,
    von_neumann_entropy,
    xlog2x,
)
from .family import TwoParamState, build_state

# Outcomes with probability at or below this contribute zero entropy.
DEGENERATE_TOL = 1e-12

_PAULI = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


@dataclass(frozen=True)
class MeasurementAxis:
    """Coefficients (t, y1, y2, y3) of the SU(2) element V = t*I + i*(y . sigma).

    The coefficients must satisfy t^2 + y1^2 + y2^2 + y3^2 = 1; axes (t, y)
    and (-t, -y) describe the same projector pair.
    """

    t: float
    y1: float
    y2: float
    y3: float

    def __post_init__(self):
        norm = self.t ** 2 + self.y1 ** 2 + self.y2 ** 2 + self.y3 ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"axis coefficients must have unit norm, got {norm!r}")

    def unitary(self) -> np.ndarray:
        """The 2x2 unitary V itself."""
        v = self.t * np.eye(2, dtype=complex)
        for y, sigma in zip((self.y1, self.y2, self.y3), _PAULI):
            v = v + 1j * y * sigma
        return v


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Steered qudit ensemble {(p0, rho0), (p1, rho1)} after a qubit measurement.

    For an outcome with p <= DEGENERATE_TOL the corresponding state slot holds
    the (numerically zero) unnormalized block and must be skipped by entropy
    sums.
    """

    p0: float
    p1: float
    rho0: np.ndarray
    rho1: np.ndarray

    @property
    def degenerate(self) -> bool:
        return min(self.p0, self.p1) <= DEGENERATE_TOL

    def outcomes(self) -> tuple[tuple[float, np.ndarray], tuple[float, np.ndarray]]:
        return ((self.p0, self.rho0), (self.p1, self.rho1))


@dataclass(frozen=True)
class OptimizerConfig:
    """Search resolution for the classical-correlation maximization.

    ``polar_steps x azimuth_steps`` Bloch directions are scanned before a
    Nelder-Mead refinement that stops once the simplex diameter drops below
    ``refine_tol`` or after ``refine_maxiter`` iterations.  ``random_probes``
    extra directions (seeded) can be mixed into the scan to guard against
    grid aliasing on unusually structured states.
    """

    polar_steps: int = 64
    azimuth_steps: int = 128
    refine_tol: float = 1e-10
    refine_maxiter: int = 500
    random_probes: int = 0
    seed: int = 0


def axis_from_direction(polar: float, azimuth: float) -> MeasurementAxis:
    """Axis whose first projector points along the Bloch direction (polar, azimuth)."""
    half = 0.5 * polar
    return MeasurementAxis(
        t=float(np.cos(half)),
        y1=float(np.sin(half) * np.sin(azimuth)),
        y2=float(-np.sin(half) * np.cos(azimuth)),
        y3=0.0,
    )


def random_axis(rng: np.random.Generator) -> MeasurementAxis:
    """Uniform random axis: a normalized 4-vector of standard normals."""
    x = rng.standard_normal(4)
    x /= np.linalg.norm(x)
    return MeasurementAxis(*map(float, x))


def projectors(axis: MeasurementAxis) -> tuple[np.ndarray, np.ndarray]:
    """The projector pair V|0><0|V^dag, V|1><1|V^dag; orthogonal and complete."""
    v = axis.unitary()
    a0 = np.outer(v[:, 0], v[:, 0].conj())
    a1 = np.outer(v[:, 1], v[:, 1].conj())
    return a0, a1


def conditional_ensemble(rho: DensityMatrix, axis: MeasurementAxis) -> ConditionalEnsemble:
    """Measure the qubit along ``axis`` and steer the qudit.

    p_i = tr[(A_i (x) I) rho (A_i (x) I)]; the steered states are the qudit
    reductions of the projected blocks.  Outcomes with p_i <= DEGENERATE_TOL
    keep their unnormalized block so the ensemble is always returned.
    """
    d = rho.dim_b
    eye = np.eye(d)
    probs: list[float] = []
    states: list[np.ndarray] = []
    for a in projectors(axis):
        k = tensor(a, eye)
        block = k @ rho.matrix @ k
        p = float(np.trace(block).real)
        reduced = np.einsum('ijil->jl', block.reshape(2, d, 2, d))
        if p > DEGENERATE_TOL:
            reduced = reduced / p
        reduced.flags.writeable = False
        probs.append(p)
        states.append(reduced)
    return ConditionalEnsemble(p0=probs[0], p1=probs[1], rho0=states[0], rho1=states[1])


def conditional_entropy(rho: DensityMatrix, axis: MeasurementAxis) -> float:
    """sum_i p_i S(rho_i) in bits; degenerate outcomes contribute zero."""
    ens = conditional_ensemble(rho, axis)
    total = 0.0
    for p, state in ens.outcomes():
        if p > DEGENERATE_TOL:
            total += p * von_neumann_entropy(state)
    return total


def measured_mutual_information(rho: DensityMatrix, axis: MeasurementAxis) -> float:
    """S(rho_B) minus the conditional entropy of the steered ensemble, in bits."""
    return von_neumann_entropy(partial_trace_a(rho)) - conditional_entropy(rho, axis)


def _steered_entropy_batch(rho: DensityMatrix, polar: np.ndarray,
                           azimuth: np.ndarray) -> np.ndarray:
    """Conditional entropy for a batch of Bloch directions, vectorized.

    With rho split into 2x2 blocks R[i, :, i', :] of size d x d, projecting
    onto |v><v| leaves the qudit block  M(v) = sum_{i i'} conj(v_i) v_i' R[i,:,i',:]
    with p = tr M.  Both outcomes use the two orthogonal eigenvectors of the
    direction.
    """
    d = rho.dim_b
    blocks = rho.matrix.reshape(2, d, 2, d)
    half = 0.5 * polar
    phase = np.exp(1j * azimuth)
    # outcome 0 spinor and its orthogonal complement (outcome 1)
    v0 = np.stack([np.cos(half).astype(complex), np.sin(half) * phase], axis=1)
    v1 = np.stack([-np.sin(half) * phase.conj(), np.cos(half).astype(complex)], axis=1)
    total = np.zeros(polar.shape, dtype=float)
    for v in (v0, v1):
        m = np.einsum('gi,gk,ijkl->gjl', v.conj(), v, blocks, optimize=True)
        p = np.einsum('gjj->g', m).real
        lam = np.linalg.eigvalsh(m)
        safe_p = np.where(p > DEGENERATE_TOL, p, 1.0)
        lam = np.clip(lam.real / safe_p[:, None], 0.0, 1.0)
        entropy = -np.sum(xlog2x(lam), axis=1)
        total += np.where(p > DEGENERATE_TOL, p * entropy, 0.0)
    return total


def classical_correlation_numeric(rho: DensityMatrix,
                                  config: OptimizerConfig | None = None,
                                  ) -> tuple[float, MeasurementAxis]:
    """Maximize the measured mutual information over projective qubit measurements.

    Returns the best value found (a lower bound on the supremum; exact to
    grid-plus-refinement precision for smooth objectives) together with the
    maximizing axis.
    """
    if config is None:
        config = OptimizerConfig()
    entropy_b = von_neumann_entropy(partial_trace_a(rho))

    polar = np.linspace(0.0, np.pi, config.polar_steps)
    azimuth = np.linspace(0.0, 2.0 * np.pi, config.azimuth_steps, endpoint=False)
    pol_grid, azi_grid = [a.ravel() for a in np.meshgrid(polar, azimuth, indexing='ij')]
    if config.random_probes > 0:
        rng = np.random.default_rng(config.seed)
        pol_grid = np.r_[pol_grid, np.arccos(rng.uniform(-1.0, 1.0, config.random_probes))]
        azi_grid = np.r_[azi_grid, rng.uniform(0.0, 2.0 * np.pi, config.random_probes)]

    cond = _steered_entropy_batch(rho, pol_grid, azi_grid)
    best = int(np.argmin(cond))
    x0 = np.array([pol_grid[best], azi_grid[best]])

    def objective(x: np.ndarray) -> float:
        return float(_steered_entropy_batch(rho, x[:1], x[1:2])[0])

    res = minimize(objective, x0, method='Nelder-Mead',
                   options={'xatol': config.refine_tol, 'fatol': np.inf,
                            'maxiter': config.refine_maxiter})
    if res.fun <= cond[best]:
        x_best, cond_best = res.x, float(res.fun)
    else:
        x_best, cond_best = x0, float(cond[best])
    axis = axis_from_direction(float(x_best[0]), float(x_best[1]) % (2.0 * np.pi))
    return entropy_b - cond_best, axis


def discord_numeric(rho: DensityMatrix, config: OptimizerConfig | None = None) -> float:
    """Total correlations minus the numerically maximized classical part, in bits."""
    value, _ = classical_correlation_numeric(rho, config)
    return quantum_mutual_information(rho) - value


def ensemble_spectrum_spread(s: TwoParamState, samples: int, seed: int) -> float:
    """Largest deviation of steered-state spectra from the family reference.

    Draws ``samples`` random axes, steers the family member along each, and
    returns the max L-infinity distance between every outcome's sorted
    spectrum and {2*alpha x (d-2), 2*beta, beta+gamma}.  Values at rounding
    level certify that the ensemble spectrum ignores the measurement choice.
    """
    if samples < 2:
        raise ValueError("need at least 2 sample axes")
    rho = build_state(s)
    reference = np.sort(np.r_[[2.0 * s.alpha] * (s.d - 2), 2.0 * s.beta,
                              s.beta + s.gamma])[::-1]
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        ens = conditional_ensemble(rho, random_axis(rng))
        for p, state in ens.outcomes():
            if p <= DEGENERATE_TOL:
                continue
            lam = np.sort(np.linalg.eigvalsh(state))[::-1]
            worst = max(worst, float(np.max(np.abs(lam - reference))))
    return worst
