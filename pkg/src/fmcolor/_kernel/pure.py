"""Pure-Python arithmetic kernel for scalars in Q(zeta_N).

A scalar is held in canonical power-basis form: a tuple of integer
numerators of length phi(N) over one positive common denominator, jointly
reduced (gcd of all numerators and the denominator is 1). Canonical form is
unique, so equality is tuple equality.

The compiled kernel (fmcolor._kernel._compiled) implements the same classes
with the same algorithms; this module is the fallback and the reference for
parity tests. Selection happens in fmcolor._kernel.
"""

from fractions import Fraction
from math import gcd

from fmcolor._kernel._fmt import scalar_literal
from fmcolor._kernel._inverse import invert_data
from fmcolor.errors import ScalarOrderError

KERNEL_NAME = "pure"


class Context:
    """Precomputed data for one cyclotomic order N.

    red_rows[j] holds the power-basis coefficients of x^(dim+j) modulo the
    N-th cyclotomic polynomial, enough to reduce any product of two reduced
    scalars (degree <= 2*dim - 2).
    """

    __slots__ = ("order", "dim", "phi", "red_rows", "zero", "one")

    def __init__(self, order, phi, red_rows):
        self.order = order
        self.phi = phi
        self.dim = len(phi) - 1
        self.red_rows = red_rows
        self.zero = _raw(self, (0,) * self.dim, 1)
        self.one = _raw(self, (1,) + (0,) * (self.dim - 1), 1)

    def __repr__(self):
        return f"Context(order={self.order})"


def _raw(ctx, nums, den):
    s = Scalar.__new__(Scalar)
    s.ctx = ctx
    s.nums = nums
    s.den = den
    return s


def make_scalar(ctx, nums, den):
    """Normalize raw integer data into a canonical Scalar."""
    if den == 0:
        raise ZeroDivisionError("scalar denominator is zero")
    nums = list(nums)
    if len(nums) != ctx.dim:
        raise ValueError(f"expected {ctx.dim} coefficients, got {len(nums)}")
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    return _raw(ctx, tuple(nums), den)


def coerce(ctx, value):
    """Embed an int or Fraction into the field; pass scalars through."""
    if isinstance(value, Scalar):
        if value.ctx.order != ctx.order:
            raise ScalarOrderError(
                f"cannot mix scalars of order {value.ctx.order} and {ctx.order}"
            )
        return value
    if isinstance(value, int):
        return _raw(ctx, (value,) + (0,) * (ctx.dim - 1), 1)
    if isinstance(value, Fraction):
        return make_scalar(
            ctx, (value.numerator,) + (0,) * (ctx.dim - 1), value.denominator
        )
    raise TypeError(f"cannot coerce {type(value).__name__} to a scalar")


def _mul_data(ctx, a, b):
    """Product of two coefficient tuples, reduced mod phi (no gcd pass)."""
    d = ctx.dim
    if d == 1:
        return [a[0] * b[0]]
    prod = [0] * (2 * d - 1)
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                bj = b[j]
                if bj:
                    prod[i + j] += ai * bj
    rows = ctx.red_rows
    for e in range(2 * d - 2, d - 1, -1):
        c = prod[e]
        if c:
            row = rows[e - d]
            for i in range(d):
                ri = row[i]
                if ri:
                    prod[i] += c * ri
    del prod[d:]
    return prod


def _add_data(a_nums, a_den, b_nums, b_den):
    if a_den == b_den:
        return [x + y for x, y in zip(a_nums, b_nums)], a_den
    g = gcd(a_den, b_den)
    fa = b_den // g
    fb = a_den // g
    return [x * fa + y * fb for x, y in zip(a_nums, b_nums)], a_den * fa


class Scalar:
    """Element of Q(zeta_N) in canonical power-basis form. Immutable."""

    __slots__ = ("ctx", "nums", "den")

    def __init__(self, ctx, nums, den=1):
        s = make_scalar(ctx, nums, den)
        self.ctx = s.ctx
        self.nums = s.nums
        self.den = s.den

    def _check(self, other):
        if isinstance(other, Scalar):
            if other.ctx.order != self.ctx.order:
                raise ScalarOrderError(
                    f"cannot mix scalars of order {self.ctx.order} "
                    f"and {other.ctx.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return coerce(self.ctx, other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        nums, den = _add_data(self.nums, self.den, other.nums, other.den)
        return make_scalar(self.ctx, nums, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        nums, den = _add_data(
            self.nums, self.den, [-v for v in other.nums], other.den
        )
        return make_scalar(self.ctx, nums, den)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return _raw(self.ctx, tuple(-v for v in self.nums), self.den)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        nums = _mul_data(self.ctx, self.nums, other.nums)
        return make_scalar(self.ctx, nums, self.den * other.den)

    __rmul__ = __mul__

    def add_mul(self, a, b):
        """self + a*b in one normalization pass; the contraction primitive."""
        ctx = self.ctx
        if a.ctx.order != ctx.order or b.ctx.order != ctx.order:
            raise ScalarOrderError("cannot mix scalars of different orders")
        prod = _mul_data(ctx, a.nums, b.nums)
        nums, den = _add_data(self.nums, self.den, prod, a.den * b.den)
        return make_scalar(ctx, nums, den)

    def inverse(self):
        nums, den = invert_data(self.ctx.phi, self.nums, self.den)
        return _raw(self.ctx, nums, den)

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.ctx.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.ctx.order == self.ctx.order:
                return self.nums == other.nums and self.den == other.den
            # Cross-order comparison is only meaningful on the rational
            # subfield shared by every order.
            if self.is_rational() and other.is_rational():
                return (
                    self.nums[0] == other.nums[0] and self.den == other.den
                )
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.nums[0], self.den))
        return hash((self.ctx.order, self.nums, self.den))

    def __str__(self):
        return scalar_literal(self.nums, self.den)

    def __repr__(self):
        return f"Scalar({self.ctx.order}, {scalar_literal(self.nums, self.den)!r})"


def make_context(order, phi, red_rows):
    return Context(order, phi, red_rows)
