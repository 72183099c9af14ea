"""Exact arithmetic in cyclotomic fields Q(zeta_N).

All coefficients in the package live here: structure constants, bicharacter
values, form entries. Scalars are canonical power-basis residues modulo the
N-th cyclotomic polynomial, so equality is coefficient equality and every
identity check is exact. N is fixed per context; mixing orders raises
ScalarOrderError rather than embedding silently.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache, lru_cache

from fmcolor import _kernel
from fmcolor._kernel import Context, Scalar
from fmcolor.errors import SpecSyntaxError

__all__ = [
    "CyclotomicScalar",
    "context",
    "cyclotomic_polynomial",
    "format_scalar",
    "parse_scalar",
    "rational_scalar",
    "root_of_unity",
    "scalar_inverse",
]

# Public alias: the concrete class comes from the selected kernel.
CyclotomicScalar = Scalar


def _poly_div_exact(num: list[int], div: list[int]) -> list[int]:
    """Exact division of integer polynomials (div monic)."""
    num = list(num)
    q = [0] * (len(num) - len(div) + 1)
    for k in range(len(num) - len(div), -1, -1):
        c = num[k + len(div) - 1]
        q[k] = c
        if c:
            for i, dc in enumerate(div):
                num[k + i] -= c * dc
    assert not any(num), "non-exact polynomial division"
    return q


@cache
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the order-th cyclotomic polynomial."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if order == 1:
        return (-1, 1)
    poly = [-1] + [0] * (order - 1) + [1]  # x^order - 1
    for d in range(1, order):
        if order % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _reduction_rows(phi: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    dim = len(phi) - 1
    if dim < 2:
        return ()
    base = [-phi[i] for i in range(dim)]  # x^dim reduced
    rows = [tuple(base)]
    row = base
    for _ in range(dim - 2):
        carry = row[-1]
        row = [0] + row[:-1]
        if carry:
            row = [row[i] + carry * base[i] for i in range(dim)]
        rows.append(tuple(row))
    return tuple(rows)


@cache
def context(order: int) -> Context:
    """The shared arithmetic context for Q(zeta_order)."""
    phi = cyclotomic_polynomial(order)
    return _kernel.make_context(order, phi, _reduction_rows(phi))


def rational_scalar(order: int, value: int | Fraction) -> Scalar:
    """Embed a rational number into Q(zeta_order)."""
    return _kernel.coerce(context(order), value)


@lru_cache(maxsize=None)
def _zeta_pow(order: int, k: int) -> Scalar:
    ctx = context(order)
    if k == 0:
        return ctx.one
    if k < ctx.dim:
        nums = [0] * ctx.dim
        nums[k] = 1
        return _kernel.make_scalar(ctx, nums, 1)
    return _zeta_pow(order, k - 1) * _zeta_pow(order, 1)


def root_of_unity(k: int, order: int) -> Scalar:
    """zeta_order**k in canonical form; k is taken modulo order."""
    return _zeta_pow(order, k % order)


def scalar_inverse(a: Scalar) -> Scalar:
    """Multiplicative inverse (extended gcd against the minimal polynomial)."""
    return a.inverse()


def format_scalar(a: Scalar) -> str:
    """Canonical literal, e.g. `0`, `-1/2`, `z^2+1/3`."""
    return str(a)


_TERM_RE = re.compile(
    r"""
    (?:
        (?P<coeff>\d+(?:/\d+)?)          # rational, optionally over /q
        (?:\*?(?P<zc>z(?:\^(?P<expc>-?\d+))?))?   # optional z part
      |
        (?P<z>z(?:\^(?P<exp>-?\d+))?)    # bare z term
    )
    """,
    re.VERBOSE,
)


def parse_scalar(text: str, order: int) -> Scalar:
    """Parse a scalar literal for the given cyclotomic order.

    Accepts the emitted grammar plus harmless extras: whitespace, a bare `z`
    for `z^1`, and exponents outside [0, order) (reduced modulo order).
    """
    ctx = context(order)
    src = text
    pos = 0
    total = ctx.zero
    first = True
    n = len(src)
    while True:
        while pos < n and src[pos].isspace():
            pos += 1
        if pos >= n:
            if first:
                raise SpecSyntaxError("empty scalar literal", position=0)
            break
        sign = 1
        if src[pos] in "+-":
            if src[pos] == "-":
                sign = -1
            pos += 1
            while pos < n and src[pos].isspace():
                pos += 1
        elif not first:
            raise SpecSyntaxError(
                f"expected '+' or '-' in scalar literal {text!r}", position=pos
            )
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise SpecSyntaxError(
                f"malformed term in scalar literal {text!r}", position=pos
            )
        pos = m.end()
        coeff = Fraction(1)
        if m.group("coeff"):
            c = m.group("coeff")
            if "/" in c:
                num, den = c.split("/")
                if int(den) == 0:
                    raise SpecSyntaxError(
                        f"zero denominator in {text!r}", position=m.start()
                    )
                coeff = Fraction(int(num), int(den))
            else:
                coeff = Fraction(int(c))
        exp = 0
        if m.group("zc") or m.group("z"):
            e = m.group("expc") or m.group("exp")
            exp = int(e) if e is not None else 1
        term = rational_scalar(order, sign * coeff)
        if exp:
            term = term * root_of_unity(exp, order)
        total = total + term
        first = False
    return total
