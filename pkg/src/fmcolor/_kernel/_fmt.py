"""Canonical literal rendering of scalar data, shared by both kernels.

Grammar (also accepted by the parser in fmcolor.scalars): a signed sum of
terms, highest power of z first, constant last; `z` stands for the primitive
root of order N. Examples: `0`, `-3/2`, `z^1-1`, `1/2*z^3+z^1+2`.
"""

from fractions import Fraction


def _rat(num, den):
    return str(num) if den == 1 else f"{num}/{den}"


def scalar_literal(nums, den):
    terms = []
    for e in range(len(nums) - 1, -1, -1):
        n = nums[e]
        if not n:
            continue
        c = Fraction(n, den)
        if e == 0:
            body = _rat(abs(c.numerator), c.denominator)
        elif abs(c) == 1:
            body = f"z^{e}"
        else:
            body = f"{_rat(abs(c.numerator), c.denominator)}*z^{e}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = [body if sign == "+" else "-" + body]
    for sign, body in terms[1:]:
        out.append(sign + body)
    return "".join(out)
