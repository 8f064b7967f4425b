"""Seeded Wiener ensembles, the {1, i} parcel process, and square-root paths.

The square root of a Brownian path is built per step: take the Bernoulli
sign B of each increment, map it to the parcel value Phi = (1+B)/2 +
i(1-B)/2 (so Phi**2 == B), and set the root increment to Phi * |dW|**(1/2).
Each root increment then squares back to its Brownian increment, which is
the strongest checkable meaning of "square root of a Wiener process".

Randomness uses one counter-based (Philox) substream per trial, keyed by
(seed, trial index), so any partition of trials across workers reproduces
the serial ensemble bit-exactly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .clifford import CliffordElement, gamma_basis

# Rotation applied to sampled data: maps the parcel directions 1 and i to
# mirror-symmetric rays about the real axis.
WICK_FACTOR = cmath.exp(-1j * math.pi / 4.0)

_DEFAULT_CHUNK = 4096


@dataclass(frozen=True)
class PathEnsemble:
    """Seeded collection of Brownian increment rows, one trial per row."""

    seed: int
    trials: int
    steps: int
    horizon_T: float
    increments: np.ndarray  # shape (trials, steps), variance T/steps per entry


@dataclass(frozen=True)
class SqrtPath:
    """Square-root path derived from one row of Brownian increments."""

    bernoulli: np.ndarray        # {+1, -1} signs
    parcel: np.ndarray           # {1, i} values, parcel[j]**2 == bernoulli[j]
    sqrt_increments: np.ndarray  # complex; squares back to the increments
    partial_sums: np.ndarray     # running sum of sqrt_increments


@dataclass(frozen=True)
class SphereStepParams:
    """Coefficients of the sphere-valued step; all-zero defaults are inert."""

    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    e: float = 0.0
    f: float = 0.0
    g: float = 0.0
    k: float = 0.0
    m: float = 0.0
    dt: float = 1.0

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")


def _trial_generator(seed: int, trial: int) -> np.random.Generator:
    # Philox counter space is 256 bits; placing the trial index in the top
    # word gives every trial 2**192 private blocks.
    return np.random.Generator(np.random.Philox(key=seed, counter=trial << 192))


def increment_block(seed: int, first_trial: int, n_trials: int, steps: int,
                    horizon_T: float) -> np.ndarray:
    """Increment rows for trials [first_trial, first_trial + n_trials).

    Building block for parallel generation: each row depends only on
    (seed, trial index), so blocks computed in any order concatenate into
    the same ensemble.
    """
    scale = math.sqrt(horizon_T / steps)
    block = np.empty((n_trials, steps))
    for i in range(n_trials):
        block[i] = _trial_generator(seed, first_trial + i).normal(0.0, scale, size=steps)
    return block


def brownian_increments(seed: int, trials: int, steps: int, horizon_T: float) -> PathEnsemble:
    """Ensemble of i.i.d. N(0, T/steps) increments, bit-reproducible from the arguments."""
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if trials < 1 or steps < 1:
        raise ValueError(f"trials and steps must be >= 1, got {trials}, {steps}")
    if not horizon_T > 0:
        raise ValueError(f"horizon_T must be positive, got {horizon_T}")
    increments = increment_block(seed, 0, trials, steps, horizon_T)
    return PathEnsemble(seed=seed, trials=trials, steps=steps,
                        horizon_T=horizon_T, increments=increments)


def signs_to_bernoulli(increments) -> np.ndarray:
    """Elementwise sign as {+1, -1}; sign(0) = +1 (measure-zero tie-break)."""
    inc = np.asarray(increments)
    return np.where(inc >= 0, 1, -1)


def parcel_from_bernoulli(bernoulli) -> np.ndarray:
    """Map signs to parcel values: +1 -> 1, -1 -> i; elementwise Phi**2 == B."""
    b = np.asarray(bernoulli)
    if not np.all((b == 1) | (b == -1)):
        raise ValueError("bernoulli entries must all be +1 or -1")
    return (1 + b) / 2.0 + 1j * (1 - b) / 2.0


def sqrt_path(increments) -> SqrtPath:
    """Square-root path of one increment row: Phi * |dW|**(1/2) per step."""
    inc = np.asarray(increments, dtype=float)
    if inc.ndim != 1:
        raise ValueError(f"sqrt_path takes a single 1-D path, got shape {inc.shape}")
    bernoulli = signs_to_bernoulli(inc)
    parcel = parcel_from_bernoulli(bernoulli)
    sqrt_increments = parcel * np.sqrt(np.abs(inc))
    return SqrtPath(bernoulli=bernoulli, parcel=parcel,
                    sqrt_increments=sqrt_increments,
                    partial_sums=np.cumsum(sqrt_increments))


def wick_rotate_samples(z) -> np.ndarray:
    """Multiply samples by exp(-i pi/4); an isometry symmetrizing the parcel axes."""
    return np.asarray(z, dtype=np.complex128) * WICK_FACTOR


def _chunked(trials: int, chunk: int):
    for lo in range(0, trials, chunk):
        yield lo, min(lo + chunk, trials)


def _sqrt_endpoints(block: np.ndarray) -> np.ndarray:
    # Endpoint of the square-root path for each row: positive increments
    # accumulate on the real axis, negative ones on the imaginary axis.
    root = np.sqrt(np.abs(block))
    real = np.where(block >= 0, root, 0.0).sum(axis=1)
    imag = np.where(block < 0, root, 0.0).sum(axis=1)
    return real + 1j * imag


def sqrt_endpoint_statistics(ensemble: PathEnsemble,
                             chunk: int = _DEFAULT_CHUNK) -> tuple[np.ndarray, np.ndarray]:
    """Wick-rotated square-root endpoints, split into centered unit-variance channels.

    Per trial: sum the square-root increments, rotate by exp(-i pi/4), and
    split into real and imaginary parts.  Each channel is then centered and
    scaled by its population standard deviation (the raw sums carry a
    positive drift from E|dW|**(1/2) that the rotation does not remove).
    """
    if ensemble.trials < 100:
        raise ValueError(f"endpoint statistics need >= 100 trials, got {ensemble.trials}")
    endpoints = np.empty(ensemble.trials, dtype=np.complex128)
    for lo, hi in _chunked(ensemble.trials, chunk):
        endpoints[lo:hi] = _sqrt_endpoints(ensemble.increments[lo:hi])
    rotated = endpoints * WICK_FACTOR
    channels = []
    for values in (rotated.real, rotated.imag):
        sigma = values.std()
        if sigma == 0.0:
            raise ValueError("degenerate ensemble: channel has zero sample variance")
        channels.append((values - values.mean()) / sigma)
    return channels[0], channels[1]


def square_identity_residuals(ensemble: PathEnsemble,
                              chunk: int = _DEFAULT_CHUNK) -> tuple[float, float]:
    """Worst-case defect of the defining identity over the whole ensemble.

    Returns ``(max_step, max_path)``: the max per-step value of
    |(dY)**2 - dW| / max(1, |dW|) and the max per-path value of
    |sum (dY)**2 - W_T|.
    """
    max_step = 0.0
    max_path = 0.0
    for lo, hi in _chunked(ensemble.trials, chunk):
        block = ensemble.increments[lo:hi]
        root = np.sqrt(np.abs(block))
        squared = (np.where(block >= 0, root, 0.0) + 1j * np.where(block < 0, root, 0.0)) ** 2
        step = (np.abs(squared - block) / np.maximum(1.0, np.abs(block))).max()
        path = np.abs(squared.sum(axis=1) - block.sum(axis=1)).max()
        max_step = max(max_step, float(step))
        max_path = max(max_path, float(path))
    return max_step, max_path


def sphere_sqrt_step(params: SphereStepParams, dU1: float, dU2: float,
                     gamma0: CliffordElement | None = None) -> CliffordElement:
    """One sphere-valued step combining the two parcel channels.

    Signs of (dU1, dU2) give Bernoulli values B1, B2 and parcels Phi1, Phi2;
    the step is g2*(k + a*dt - i*b*dU2*B2)*Phi2 + g1*(m + c*dt -
    i*e*dU1*B1)*Phi1 + i*gamma0*(f*Phi1 + g*Phi2).  gamma0 is not pinned by
    the construction; it defaults to the third coordinate-side generator and
    can be overridden.
    """
    _, g1, g2, g3 = gamma_basis()
    if gamma0 is None:
        gamma0 = g3
    b1 = 1.0 if dU1 >= 0 else -1.0
    b2 = 1.0 if dU2 >= 0 else -1.0
    phi1 = 1.0 + 0.0j if b1 > 0 else 1.0j
    phi2 = 1.0 + 0.0j if b2 > 0 else 1.0j
    coeff2 = (params.k + params.a * params.dt - 1j * params.b * dU2 * b2) * phi2
    coeff1 = (params.m + params.c * params.dt - 1j * params.e * dU1 * b1) * phi1
    coeff0 = 1j * (params.f * phi1 + params.g * phi2)
    return coeff2 * g2 + coeff1 * g1 + coeff0 * gamma0


def check_unit_constraint(y: CliffordElement, tol: float) -> tuple[str, float]:
    """Classify Y**2 against +I / -I within ``tol`` (max-abs entry norm).

    Returns ``("plus_one" | "minus_one" | "violated", residual)`` where the
    residual is the distance to the nearer of the two targets.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    squared = y @ y
    identity = np.eye(2)
    r_plus = float(np.abs(squared - identity).max())
    r_minus = float(np.abs(squared + identity).max())
    if r_plus <= tol:
        return "plus_one", r_plus
    if r_minus <= tol:
        return "minus_one", r_minus
    return "violated", min(r_plus, r_minus)
