"""Exact eigenvalue extraction and verification of the ladder relations.

Eigenvalues are found by polynomial proportionality, never by numerics: a
candidate is read off one coefficient pair and then checked against every
other coefficient by cross-multiplication, so a Proper result is a proof of
the eigenrelation for that cell.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .functions import Comparison, WeightedFunction
from .model import make_state, normalization
from .operators import (
    UndefinedOperatorError,
    k0_diff,
    k0_prime_composed,
    k0_prime_simplified,
    k_minus,
    k_plus,
)
from .scalars import ZERO, RadicalScalar, sqrt_of_rational


class ZeroStateError(ValueError):
    """Eigenvalue extraction against the zero function is meaningless."""


class EigenStatus(enum.Enum):
    PROPER = "Proper"
    TRIVIAL_ZERO = "TrivialZero"
    NOT_EIGENFUNCTION = "NotEigenfunction"
    OPERATOR_UNDEFINED = "OperatorUndefined"


class LadderOutcome(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    OUT_OF_DOMAIN = "OutOfDomain"


@dataclass(frozen=True)
class EigenResult:
    """An extracted eigenvalue plus how it was obtained.

    Proper means result = value * state exactly; TrivialZero means the
    applied operator returned the zero function (and value is 0).
    """

    value: RadicalScalar
    status: EigenStatus


_TRIVIAL = EigenResult(ZERO, EigenStatus.TRIVIAL_ZERO)
_NOT_EIGEN = EigenResult(ZERO, EigenStatus.NOT_EIGENFUNCTION)
_UNDEFINED = EigenResult(ZERO, EigenStatus.OPERATOR_UNDEFINED)


def extract_eigenvalue(result: WeightedFunction, state: WeightedFunction) -> EigenResult:
    """Exact lambda with result = lambda * state, or why there is none.

    The candidate comes from the state's lowest-exponent coefficient and is
    verified on the whole polynomial by cross-multiplication, so no radical
    division is needed for the decision itself.
    """
    if state.is_zero:
        raise ZeroStateError("cannot extract an eigenvalue against the zero function")
    if result.is_zero:
        return _TRIVIAL
    gap = result.s - state.s
    if gap.denominator != 1:
        return _NOT_EIGEN
    rpoly = result.poly.shifted(int(gap))
    spoly = state.poly
    base = spoly.min_exponent
    num = rpoly.coeff(base)
    den = spoly.coeff(base)
    if not num:
        return _NOT_EIGEN
    if rpoly.scaled(den) != spoly.scaled(num):
        return _NOT_EIGEN
    return EigenResult(num / den, EigenStatus.PROPER)


def eigenvalue_one(n: int, v: int) -> EigenResult:
    """Action of the closed-form shifted commutator on the (n, v) state.

    TrivialZero exactly on the s = 0 cells, where that operator vanishes
    identically; elsewhere Proper(2n - v + 1).
    """
    state = make_state(n, v)
    op = k0_prime_simplified(state.qn.s, v)
    if op.is_zero:
        return _TRIVIAL
    return extract_eigenvalue(op.apply(state.wavefunction), state.wavefunction)


def eigenvalue_two(n: int, v: int) -> EigenResult:
    """Doubled action of the diagonal operator, reported on the same scale.

    The diagonal operator is never the zero operator, so a vanishing result
    (its eigenvalue is 0 at s = 0) is still a proper eigenrelation; it is
    reported as Proper(0), not TrivialZero.
    """
    state = make_state(n, v)
    op = k0_diff(state.qn.s, n)
    r = extract_eigenvalue(op.apply(state.wavefunction), state.wavefunction)
    if r.status is EigenStatus.TRIVIAL_ZERO:
        return EigenResult(ZERO, EigenStatus.PROPER)
    if r.status is EigenStatus.PROPER:
        return EigenResult(r.value * 2, EigenStatus.PROPER)
    return r


def eigenvalue_three(n: int, v: int) -> Fraction:
    """The algebraic prediction 2n - v + 1 (equal to -2s)."""
    if n < 0 or v < 0:
        raise ValueError("n and v must be non-negative")
    return Fraction(2 * n - v + 1)


def eigenvalue_composed(n: int, v: int) -> EigenResult:
    """Action of the composition-built shifted commutator on the (n, v) state.

    OperatorUndefined where a constituent ladder prefactor divides by zero
    (s in {-1, 0, 1}).
    """
    state = make_state(n, v)
    try:
        op = k0_prime_composed(state.qn.s, v)
    except UndefinedOperatorError:
        return _UNDEFINED
    applied = op.apply(state.wavefunction)
    if applied.is_zero and not op.is_zero:
        return EigenResult(ZERO, EigenStatus.PROPER)
    return extract_eigenvalue(applied, state.wavefunction)


def verify_lowering(n: int, v: int) -> LadderOutcome:
    """Check N_n * (lowering op) psi_n = sqrt(n(v-n)) * N_{n-1} * psi_{n-1}.

    In domain when both normalization constants exist (v >= 2n + 2); the
    n = 0 branch instead requires exact annihilation of the ground state.
    """
    norm_n = normalization(n, v)
    if norm_n is None:
        return LadderOutcome.OUT_OF_DOMAIN
    state = make_state(n, v)
    applied = k_minus(state.qn.s, v).apply(state.wavefunction)
    if n == 0:
        return LadderOutcome.HOLDS if applied.is_zero else LadderOutcome.FAILS
    norm_prev = normalization(n - 1, v)
    if norm_prev is None:
        return LadderOutcome.OUT_OF_DOMAIN
    lhs = applied * norm_n
    factor = sqrt_of_rational(Fraction(n * (v - n))) * norm_prev
    rhs = make_state(n - 1, v).wavefunction * factor
    if lhs.compare(rhs) is Comparison.EQUAL:
        return LadderOutcome.HOLDS
    return LadderOutcome.FAILS


def verify_raising(n: int, v: int) -> LadderOutcome:
    """Check N_n * (raising op) psi_n = sqrt((n+1)(v-n-1)) * N_{n+1} * psi_{n+1}.

    In domain when both normalization constants exist (v >= 2n + 4).
    """
    norm_n = normalization(n, v)
    norm_next = normalization(n + 1, v)
    if norm_n is None or norm_next is None:
        return LadderOutcome.OUT_OF_DOMAIN
    state = make_state(n, v)
    applied = k_plus(state.qn.s, v).apply(state.wavefunction)
    lhs = applied * norm_n
    factor = sqrt_of_rational(Fraction((n + 1) * (v - n - 1))) * norm_next
    rhs = make_state(n + 1, v).wavefunction * factor
    if lhs.compare(rhs) is Comparison.EQUAL:
        return LadderOutcome.HOLDS
    return LadderOutcome.FAILS


def verify_commutator_action(n: int, v: int) -> LadderOutcome:
    """Check the composition-built commutator scales the state by 2n - v + 1.

    In domain when |s| > 1, where the composed form exists and all four
    constituent radicands are non-negative.
    """
    s = Fraction(v - 2 * n - 1, 2)
    if abs(s) <= 1:
        return LadderOutcome.OUT_OF_DOMAIN
    r = eigenvalue_composed(n, v)
    if r.status is EigenStatus.PROPER and r.value == eigenvalue_three(n, v):
        return LadderOutcome.HOLDS
    return LadderOutcome.FAILS
