"""Truncated single-mode bosonic Hilbert space.

States are complex amplitude vectors over the photon-number basis
``|0>..|n_max>``.  Coherent states, displacements, inner products and photon
statistics are the primitives everything else is built on.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm
from scipy.special import gammainc, gammaln

from .errors import DimensionMismatch, TruncationTooSmall

# Tail mass of the Poisson distribution that a truncation must exclude.
TAIL_MASS_BOUND = 1e-10


@dataclass(frozen=True)
class Truncation:
    """Fock-space cutoff: levels 0..n_max are retained."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")

    @property
    def dim(self) -> int:
        return self.n_max + 1

    @staticmethod
    def required_n_max(n_bar: float) -> int:
        """Smallest cutoff passing the mean + 6*sqrt + 10 guard for n_bar."""
        return int(np.ceil(n_bar + 6.0 * np.sqrt(max(n_bar, 0.0)) + 10.0))

    @classmethod
    def for_n_bar(cls, n_bar: float) -> "Truncation":
        return cls(cls.required_n_max(n_bar))

    def poisson_tail(self, n_bar: float) -> float:
        """Probability mass of a Poisson(n_bar) above n_max."""
        if n_bar <= 0:
            return 0.0
        # P(X > n_max) for X ~ Poisson(n_bar)
        return float(gammainc(self.n_max + 1, n_bar))

    def check_adequate(self, n_bar: float) -> None:
        """Raise unless both the guard and the tail-mass bound hold."""
        if self.n_max < self.required_n_max(n_bar):
            raise TruncationTooSmall(
                f"n_max={self.n_max} below guard {self.required_n_max(n_bar)} "
                f"for n_bar={n_bar:.3f}"
            )
        tail = self.poisson_tail(n_bar)
        if tail >= TAIL_MASS_BOUND:
            raise TruncationTooSmall(
                f"Poisson tail {tail:.3e} above {TAIL_MASS_BOUND:g} "
                f"for n_bar={n_bar:.3f}"
            )


@dataclass(frozen=True)
class CoherentParams:
    """Complex amplitude of a coherent state; n_bar is derived, never stored."""

    alpha: complex

    @property
    def n_bar(self) -> float:
        return float(abs(self.alpha) ** 2)

    @property
    def delta_n(self) -> float:
        return float(np.sqrt(self.n_bar))

    @property
    def delta_phi(self) -> float:
        return 1.0 / float(np.sqrt(self.n_bar))

    @classmethod
    def from_n_bar(cls, n_bar: float, phase: float = 0.0) -> "CoherentParams":
        return cls(np.sqrt(n_bar) * np.exp(1j * phase))


class FieldState:
    """Pure cavity field: complex amplitudes over the number basis."""

    def __init__(self, amplitudes: np.ndarray, truncation: Truncation):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (truncation.dim,):
            raise DimensionMismatch(
                f"amplitude vector of length {amplitudes.shape} does not match "
                f"truncation dim {truncation.dim}"
            )
        self.amplitudes = amplitudes
        self.truncation = truncation

    @property
    def n_max(self) -> int:
        return self.truncation.n_max

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "FieldState":
        return FieldState(self.amplitudes / self.norm(), self.truncation)

    def mean_photon(self) -> float:
        p = np.abs(self.amplitudes) ** 2
        return float(p @ np.arange(self.truncation.dim))

    def expect_a(self) -> complex:
        """<a>, the mean complex field amplitude."""
        c = self.amplitudes
        n = np.arange(1, self.truncation.dim)
        return complex(np.sum(np.conj(c[:-1]) * np.sqrt(n) * c[1:]))

    def density(self) -> np.ndarray:
        return np.outer(self.amplitudes, np.conj(self.amplitudes))

    def embedded(self, truncation: Truncation) -> "FieldState":
        """Zero-pad into a larger truncation (exact)."""
        if truncation.n_max < self.n_max:
            raise TruncationTooSmall("cannot embed into a smaller truncation")
        amp = np.zeros(truncation.dim, dtype=np.complex128)
        amp[: self.truncation.dim] = self.amplitudes
        return FieldState(amp, truncation)


def vacuum(truncation: Truncation) -> FieldState:
    amp = np.zeros(truncation.dim, dtype=np.complex128)
    amp[0] = 1.0
    return FieldState(amp, truncation)


def number_state(n: int, truncation: Truncation) -> FieldState:
    if not 0 <= n <= truncation.n_max:
        raise TruncationTooSmall(f"|{n}> outside truncation {truncation.n_max}")
    amp = np.zeros(truncation.dim, dtype=np.complex128)
    amp[n] = 1.0
    return FieldState(amp, truncation)


def annihilation_matrix(truncation: Truncation) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, truncation.dim)), 1).astype(np.complex128)


def coherent_state(params: CoherentParams, truncation: Truncation) -> FieldState:
    """Coherent state c_n = exp(-|a|^2/2) a^n / sqrt(n!).

    Amplitudes go through log-gamma so the construction stays finite well
    past n = 170 where factorials overflow.
    """
    truncation.check_adequate(params.n_bar)
    n = np.arange(truncation.dim)
    r = abs(params.alpha)
    if r == 0.0:
        return vacuum(truncation)
    log_mag = -params.n_bar / 2.0 + n * np.log(r) - 0.5 * gammaln(n + 1.0)
    amp = np.exp(log_mag) * np.exp(1j * n * np.angle(params.alpha))
    state = FieldState(amp, truncation)
    # renormalize away the (bounded) truncated tail
    return state.normalized()


def displacement_matrix(beta: complex, truncation: Truncation) -> np.ndarray:
    """exp(beta a^dag - beta* a) on the truncated space, by scaling-and-squaring."""
    a = annihilation_matrix(truncation)
    return expm(beta * a.conj().T - np.conj(beta) * a)


def displace(state: FieldState, beta: complex) -> FieldState:
    """Apply the displacement operator D(beta) to the state."""
    mean_in = state.mean_photon()
    a_in = state.expect_a()
    # exact mean photon number of the displaced state
    mean_out = mean_in + 2.0 * np.real(np.conj(beta) * a_in) + abs(beta) ** 2
    if mean_out + 6.0 * np.sqrt(max(mean_out, 0.0)) >= state.n_max:
        raise TruncationTooSmall(
            f"displacement drives <n> to {mean_out:.1f}, too close to "
            f"n_max={state.n_max}"
        )
    d = displacement_matrix(beta, state.truncation)
    return FieldState(d @ state.amplitudes, state.truncation)


def overlap(s1: FieldState, s2: FieldState) -> complex:
    """Hermitian inner product <s1|s2>."""
    if s1.truncation != s2.truncation:
        raise DimensionMismatch("overlap requires identical truncations")
    return complex(np.vdot(s1.amplitudes, s2.amplitudes))


def photon_statistics(state: FieldState):
    """(mean, variance, distribution) of the photon number.

    The state must be normalized; the distribution then sums to one by
    construction.
    """
    nrm = state.norm()
    if abs(nrm - 1.0) > 1e-6:
        raise ValueError(f"photon_statistics needs a normalized state, norm={nrm}")
    dist = np.abs(state.amplitudes) ** 2
    n = np.arange(state.truncation.dim)
    mean = float(dist @ n)
    var = float(dist @ (n - mean) ** 2)
    return mean, var, dist
