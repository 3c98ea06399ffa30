"""Morse-oscillator model data: quantum numbers, Laguerre polynomials, states.

The bound states live on an integer grid (n, v) with derived weight exponent
s = (v - 2n - 1)/2.  States are kept unnormalized by default; the
normalization constant is attached separately and only where it is defined,
because every eigenvalue computation cancels it anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .functions import LaurentPoly, WeightedFunction
from .scalars import RadicalScalar, sqrt_of_rational


class NonBoundError(ValueError):
    """The requested level is not bound for the given physical constants."""


@dataclass(frozen=True)
class QuantumNumbers:
    """Level index n, depth parameter v, and the derived exponent s.

    2s = v - 2n - 1 always; s >= 0 exactly on the physical half-plane
    v >= 2n + 1 where the state is normalizable.
    """

    n: int
    v: int
    s: Fraction

    @property
    def is_physical(self) -> bool:
        return self.s >= 0


@dataclass(frozen=True)
class PhysicalParams:
    """Well depth, inverse width, particle mass and hbar, in consistent units."""

    v0: float
    beta: float
    mass: float
    hbar: float


@dataclass(frozen=True)
class MorseState:
    """A grid state: quantum numbers, unnormalized wavefunction, normalization.

    The wavefunction is exp(-y/2) * y^s * L_n^{2s}(y) without the
    normalization factor; ``normalization`` is None on cells where the
    defining square root is zero or imaginary (non-normalizable cells).
    """

    qn: QuantumNumbers
    wavefunction: WeightedFunction
    normalization: RadicalScalar | None


def make_quantum_numbers(n: int, v: int) -> QuantumNumbers:
    """Quantum numbers for grid cell (n, v); negative s is permitted."""
    if n < 0 or v < 0:
        raise ValueError("n and v must be non-negative")
    return QuantumNumbers(n, v, Fraction(v - 2 * n - 1, 2))


def laguerre(n: int, alpha: Fraction | int) -> LaurentPoly:
    """Associated Laguerre polynomial L_n^alpha as an exact polynomial.

    Sum formula with generalized binomials, so any rational alpha works,
    including the negative integers that arise on cells with s < 0:
    L_n^a(y) = sum_k (-1)^k * C(n+a, n-k) * y^k / k!.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    alpha = Fraction(alpha)
    coeffs: dict[int, RadicalScalar] = {}
    binom = Fraction(1)  # C(n+alpha, n-k), built from k=n downward
    kfact = math.factorial(n)
    for k in range(n, -1, -1):
        c = binom / kfact
        if k % 2:
            c = -c
        if c:
            coeffs[k] = RadicalScalar(c)
        if k:
            binom = binom * (alpha + k) / (n - k + 1)
            kfact //= k
    return LaurentPoly(coeffs)


def normalization(n: int, v: int, beta: Fraction | int = 1) -> RadicalScalar | None:
    """The state's normalization constant, or None where it is undefined.

    Equals sqrt(beta * (v - 2n - 1) * n! / (v - n - 1)!); that expression
    needs v - n >= 1 (factorial argument) and v - 2n - 1 > 0 (positive
    radicand), which on the integer grid means v >= 2n + 2.
    """
    if n < 0 or v < 0:
        raise ValueError("n and v must be non-negative")
    if v - n < 1 or v - 2 * n - 1 <= 0:
        return None
    radicand = Fraction(beta) * (v - 2 * n - 1) * math.factorial(n)
    radicand /= math.factorial(v - n - 1)
    return sqrt_of_rational(radicand)


@lru_cache(maxsize=None)
def make_state(n: int, v: int) -> MorseState:
    """The grid state at (n, v), with normalization attached when defined."""
    qn = make_quantum_numbers(n, v)
    wf = WeightedFunction(qn.s, laguerre(n, 2 * qn.s))
    return MorseState(qn, wf, normalization(n, v))


def physical_map(params: PhysicalParams, n: int = 0) -> tuple[float, float, float]:
    """Map physical constants to (v, s, E) for level n, in floating point.

    v = sqrt(8 * mass * v0) / (beta * hbar), s follows the grid relation,
    and E = -beta^2 * hbar^2 * s^2 / (2 * mass).  Raises NonBoundError when
    s < 0, i.e. when level n does not fit in the well.
    """
    if params.v0 <= 0 or params.beta <= 0 or params.mass <= 0 or params.hbar <= 0:
        raise ValueError("physical constants must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    v = math.sqrt(8.0 * params.mass * params.v0) / (params.beta * params.hbar)
    s = (v - 2 * n - 1) / 2
    if s < 0:
        raise NonBoundError(f"level n={n} is not bound (s = {s:.6g} < 0)")
    e = -((params.beta * params.hbar * s) ** 2) / (2.0 * params.mass)
    return v, s, e
