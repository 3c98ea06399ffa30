"""Differential operators with Laurent coefficients, and the Morse family.

A DiffOp is a finite sum a_k(y) * d^k/dy^k with exact Laurent-polynomial
coefficients.  Applying one to a weighted function stays inside the weighted
family, so ladder relations, commutators and eigenvalue checks all reduce to
exact polynomial identities.

Ladder-operator constructors fold their scalar radical prefactor directly
into the coefficients; the radical cancellations of the parameter-shifted
commutator then happen through ordinary multiplication.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Callable

from .functions import LaurentPoly, ScalarLike, WeightedFunction
from .scalars import RadicalScalar, sqrt_of_rational


class UndefinedOperatorError(ZeroDivisionError):
    """A constructor's radical prefactor divides by zero at these parameters."""


class OpClass(enum.Enum):
    PROPER = "Proper"
    ZERO = "Zero"
    UNDEFINED = "Undefined"


class DiffOp:
    """Finite map {derivative order k >= 0: coefficient LaurentPoly}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, LaurentPoly] | None = None):
        out: dict[int, LaurentPoly] = {}
        if terms:
            for k, p in terms.items():
                if k < 0:
                    raise ValueError("derivative order must be non-negative")
                if p:
                    out[k] = p
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict[int, LaurentPoly]) -> DiffOp:
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls) -> DiffOp:
        return _ZERO_OP

    @classmethod
    def identity(cls) -> DiffOp:
        return _IDENTITY_OP

    @classmethod
    def multiplication(cls, poly: LaurentPoly) -> DiffOp:
        return cls._raw({0: poly}) if poly else _ZERO_OP

    @classmethod
    def derivative(cls, order: int = 1) -> DiffOp:
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        return cls._raw({order: LaurentPoly.one()})

    @property
    def terms(self) -> dict[int, LaurentPoly]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_order(self) -> int:
        return max(self._terms, default=0)

    def coeff(self, order: int) -> LaurentPoly:
        return self._terms.get(order, LaurentPoly.zero())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DiffOp):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> DiffOp:
        return DiffOp._raw({k: -p for k, p in self._terms.items()})

    def __add__(self, other: DiffOp) -> DiffOp:
        if not isinstance(other, DiffOp):
            return NotImplemented
        out = dict(self._terms)
        for k, p in other._terms.items():
            t = out.get(k)
            if t is None:
                out[k] = p
            else:
                t = t + p
                if t:
                    out[k] = t
                else:
                    del out[k]
        return DiffOp._raw(out)

    def __sub__(self, other: DiffOp) -> DiffOp:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def scaled(self, c: ScalarLike) -> DiffOp:
        c = c if isinstance(c, RadicalScalar) else RadicalScalar(c)
        if not c:
            return _ZERO_OP
        return DiffOp._raw({k: p.scaled(c) for k, p in self._terms.items()})

    def apply(self, f: WeightedFunction) -> WeightedFunction:
        """Exact action on a weighted function; the weight exponent s survives."""
        if not self._terms or f.is_zero:
            return WeightedFunction(f.s, LaurentPoly.zero())
        out = LaurentPoly.zero()
        df = f
        for k in range(self.max_order + 1):
            p = self._terms.get(k)
            if p is not None:
                out = out + p * df.poly
            if k < self.max_order:
                df = df.derivative()
        return WeightedFunction(f.s, out)

    def compose(self, other: DiffOp) -> DiffOp:
        """Exact composition self after other, by the Leibniz expansion."""
        out: dict[int, LaurentPoly] = {}
        for j, aj in self._terms.items():
            for k, bk in other._terms.items():
                bder = bk
                for i in range(j + 1):
                    c = aj * bder
                    if math.comb(j, i) != 1:
                        c = c.scaled(math.comb(j, i))
                    if c:
                        order = j - i + k
                        t = out.get(order)
                        if t is None:
                            out[order] = c
                        else:
                            t = t + c
                            if t:
                                out[order] = t
                            else:
                                del out[order]
                    if i < j:
                        bder = bder.derivative()
                        if not bder:
                            break
        return DiffOp._raw(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            p = f"({self._terms[k]})"
            if k == 1:
                parts.append(f"{p}*d/dy")
            elif k > 1:
                parts.append(f"{p}*d{k}/dy{k}")
            else:
                parts.append(p)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DiffOp({str(self)!r})"


_ZERO_OP = DiffOp._raw({})
_IDENTITY_OP = DiffOp._raw({0: LaurentPoly.one()})


def commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """[a, b] = a compose b - b compose a, in normal form."""
    return a.compose(b) - b.compose(a)


def k_minus(s: Fraction, v: Fraction | int) -> DiffOp:
    """Lowering operator at weight s and depth v, prefactor folded in.

    -sqrt((s+1)/s) * [(2s+1) d/dy - s(2s+1)/y + v/2]; undefined at s = 0.
    """
    s = Fraction(s)
    if s == 0:
        raise UndefinedOperatorError("lowering operator undefined at s = 0")
    pref = sqrt_of_rational(Fraction(s + 1, s))
    return DiffOp(
        {
            1: LaurentPoly({0: -(2 * s + 1) * pref}),
            0: LaurentPoly({-1: s * (2 * s + 1) * pref, 0: Fraction(-v, 2) * pref}),
        }
    )


def k_plus(s: Fraction, v: Fraction | int) -> DiffOp:
    """Raising operator at weight s and depth v, prefactor folded in.

    sqrt((s-1)/s) * [(2s-1) d/dy + s(2s-1)/y - v/2]; undefined at s = 0.
    """
    s = Fraction(s)
    if s == 0:
        raise UndefinedOperatorError("raising operator undefined at s = 0")
    pref = sqrt_of_rational(Fraction(s - 1, s))
    return DiffOp(
        {
            1: LaurentPoly({0: (2 * s - 1) * pref}),
            0: LaurentPoly({-1: s * (2 * s - 1) * pref, 0: Fraction(-v, 2) * pref}),
        }
    )


def k0_diff(s: Fraction, n: Fraction | int) -> DiffOp:
    """Diagonal operator y d2/dy2 + d/dy - s^2/y - y/4 + (n + 1/2)."""
    s = Fraction(s)
    return DiffOp(
        {
            2: LaurentPoly({1: 1}),
            1: LaurentPoly({0: 1}),
            0: LaurentPoly({-1: -(s * s), 1: Fraction(-1, 4), 0: Fraction(n) + Fraction(1, 2)}),
        }
    )


def schrodinger_diff(s: Fraction, v: Fraction | int) -> DiffOp:
    """The operator y d2/dy2 + d/dy - s^2/y - y/4 + v/2, which kills the state."""
    s = Fraction(s)
    return DiffOp(
        {
            2: LaurentPoly({1: 1}),
            1: LaurentPoly({0: 1}),
            0: LaurentPoly({-1: -(s * s), 1: Fraction(-1, 4), 0: Fraction(v, 2)}),
        }
    )


def k0_prime_simplified(s: Fraction, v: Fraction | int) -> DiffOp:
    """Closed-form shifted commutator s*(-8 d2/dy2 - (8/y) d/dy + 8s^2/y^2 - 4v/y).

    The zero operator exactly at s = 0.
    """
    s = Fraction(s)
    if s == 0:
        return DiffOp.zero()
    return DiffOp(
        {
            2: LaurentPoly({0: -8 * s}),
            1: LaurentPoly({-1: -8 * s}),
            0: LaurentPoly({-2: 8 * s**3, -1: -4 * s * Fraction(v)}),
        }
    )


def k0_prime_composed(s: Fraction, v: Fraction | int) -> DiffOp:
    """Shifted commutator built from ladder compositions.

    k_plus(s+1, v) after k_minus(s, v), minus k_minus(s-1, v) after
    k_plus(s, v): the left factors live at the intermediate state's weight.
    Undefined at s in {-1, 0, 1} where a constituent prefactor divides by
    zero.
    """
    s = Fraction(s)
    if s in (-1, 0, 1):
        raise UndefinedOperatorError(f"composed form undefined at s = {s}")
    lowering_then_raise = k_plus(s + 1, v).compose(k_minus(s, v))
    raising_then_lower = k_minus(s - 1, v).compose(k_plus(s, v))
    return lowering_then_raise - raising_then_lower


def naive_commutator(s: Fraction, v: Fraction | int) -> DiffOp:
    """Commutator of raising and lowering taken at one fixed (s, v).

    Collapses to a pure 1/y^2 multiplication operator; see
    naive_commutator_coefficient for its exact coefficient.
    """
    s = Fraction(s)
    if s == 0:
        raise UndefinedOperatorError("ladder operators undefined at s = 0")
    return commutator(k_plus(s, v), k_minus(s, v))


def naive_commutator_coefficient(s: Fraction) -> RadicalScalar:
    """Exact 1/y^2 coefficient of naive_commutator, any s != 0.

    2s(1 - 4s^2) * sqrt((s-1)/s) * sqrt((s+1)/s) in radical normal form.
    For s > 1 the radical product collapses to sqrt(s^2-1)/s and the value
    agrees with the closed form 2*sqrt(s^2-1)*(1-4s^2); for s < -1 complex
    square-root semantics flip the product's sign relative to that form.
    """
    s = Fraction(s)
    if s == 0:
        raise UndefinedOperatorError("ladder operators undefined at s = 0")
    pref = sqrt_of_rational(Fraction(s - 1, s)) * sqrt_of_rational(Fraction(s + 1, s))
    return pref * (2 * s * (1 - 4 * s * s))


def is_zero_or_undefined(build: Callable[[], DiffOp]) -> OpClass:
    """Classify a constructor call: Undefined if it raises, Zero if empty."""
    try:
        op = build()
    except UndefinedOperatorError:
        return OpClass.UNDEFINED
    return OpClass.ZERO if op.is_zero else OpClass.PROPER
