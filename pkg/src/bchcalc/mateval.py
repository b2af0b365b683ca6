"""Numerical verification of the truncated series on concrete matrices.

The ground truth log(exp X exp Y) is computed with the Mercator series
log(I + E), deliberately independent of the commutator series under test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NotNearIdentityError
from .series import BchSeries, expand
from .tables import CoefficientTables
from .words import Word

_LOG_TAIL_TOL = 1e-13
_GENERATOR = "numpy.random.default_rng (PCG64)"


def _as_square(a) -> np.ndarray:
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def mat_exp(a) -> np.ndarray:
    """Matrix exponential (scaling-and-squaring Padé via scipy)."""
    return scipy.linalg.expm(_as_square(a))


def mat_log(a) -> np.ndarray:
    """Matrix logarithm near the identity via the Mercator series.

    Requires ||A - I|| < 1 in some submultiplicative norm.  The Frobenius
    norm is checked first; when it is >= 1 the spectral radius decides
    instead (a scaled submultiplicative norm below 1 exists iff the radius
    is below 1, e.g. for nilpotent A - I).  Terms are summed until the
    series tail is below 1e-13.
    """
    m = _as_square(a)
    dim = m.shape[0]
    e = m - np.eye(dim)
    fro = float(np.linalg.norm(e))
    if fro >= 1.0:
        radius = float(np.max(np.abs(np.linalg.eigvals(e))))
        if radius >= 1.0:
            raise NotNearIdentityError(fro)

    out = np.zeros_like(e)
    power = np.eye(dim)
    prev_norm = None
    for j in range(1, 10_000):
        power = power @ e
        out += ((-1) ** (j + 1) / j) * power
        pnorm = float(np.linalg.norm(power))
        if pnorm == 0.0:
            break
        if fro < 1.0:
            if fro ** (j + 1) / (1.0 - fro) <= _LOG_TAIL_TOL:
                break
        elif prev_norm is not None and pnorm < prev_norm:
            # powers have started to contract; bound the tail geometrically
            ratio = pnorm / prev_norm
            if pnorm * ratio / ((1.0 - ratio) * (j + 1)) <= _LOG_TAIL_TOL:
                break
        prev_norm = pnorm
    return out


def nested_commutator(w: Word, x, y) -> np.ndarray:
    """Right-nested bracket [M1,[M2,[...,[M_{N-1},MN]...]]] per letter."""
    mx, my = _as_square(x), _as_square(y)
    if mx.shape != my.shape:
        raise DimensionMismatchError([mx.shape[0], my.shape[0]])
    mats = [mx if letter == "X" else my for letter in w]
    out = mats[-1]
    for m in reversed(mats[:-1]):
        out = m @ out - out @ m
    return out


def evaluate_series(s: BchSeries, x, y) -> np.ndarray:
    """Sum of float(coefficient) * nested commutator over all terms."""
    mx, my = _as_square(x), _as_square(y)
    if mx.shape != my.shape:
        raise DimensionMismatchError([mx.shape[0], my.shape[0]])
    out = np.zeros_like(mx)
    for term in s.terms:
        c = float(term.coefficient)
        if c != 0.0:
            out += c * nested_commutator(term.word, mx, my)
    return out


@dataclass(frozen=True)
class VerificationReport:
    order: int
    dim: int
    epsilon: float
    samples: int
    seed: int
    generator: str
    residuals: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.residuals)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "dim": self.dim,
            "epsilon": self.epsilon,
            "samples": self.samples,
            "seed": self.seed,
            "generator": self.generator,
            "residuals": list(self.residuals),
            "max_residual": self.max_residual,
        }


def verify_convergence(
    order: int,
    dim: int,
    epsilon: float,
    samples: int,
    seed: int,
    t: CoefficientTables,
) -> VerificationReport:
    """Frobenius residual of the truncated series against the direct log.

    Draws ``samples`` pairs of dim x dim matrices with entries uniform in
    [-epsilon, epsilon] from a seeded PRNG and compares
    log(exp X exp Y) with the evaluated series.
    """
    if order < 1 or dim < 1 or samples < 1:
        raise ValueError("order, dim and samples must all be >= 1")
    if not 0.0 < epsilon <= 0.1:
        raise ValueError(f"epsilon must be in (0, 0.1], got {epsilon}")
    rng = np.random.default_rng(seed)
    series = expand(order, False, False, t)
    residuals = []
    for _ in range(samples):
        x = rng.uniform(-epsilon, epsilon, size=(dim, dim))
        y = rng.uniform(-epsilon, epsilon, size=(dim, dim))
        truth = mat_log(mat_exp(x) @ mat_exp(y))
        approx = evaluate_series(series, x, y)
        residuals.append(float(np.linalg.norm(truth - approx)))
    return VerificationReport(
        order=order,
        dim=dim,
        epsilon=epsilon,
        samples=samples,
        seed=seed,
        generator=_GENERATOR,
        residuals=tuple(residuals),
    )
