"""Multiplicative inverse on raw scalar data via extended gcd in Q[x].

Shared by both kernels. This is a cold path (division shows up in
determinants and user-level arithmetic, never in the contraction loops), so
clarity wins over speed: coefficients are lifted to `Fraction`, the inverse
is computed modulo the minimal polynomial, and the result is pushed back to
the (integer numerators, common denominator) wire format.
"""

from fractions import Fraction
from math import gcd, lcm


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _divmod(num, div):
    """Polynomial divmod over Fraction lists (div nonzero)."""
    num = list(num)
    dn = len(div)
    lead = div[-1]
    q = [Fraction(0)] * max(len(num) - dn + 1, 0)
    for k in range(len(num) - dn, -1, -1):
        c = num[k + dn - 1] / lead
        if c:
            q[k] = c
            for i, dc in enumerate(div):
                num[k + i] -= c * dc
    return q, _trim(num[: dn - 1])


def invert_data(phi, nums, den):
    """Return (nums', den') with (nums/den) * (nums'/den') = 1 mod phi.

    phi is irreducible over Q, so every nonzero residue is invertible and the
    gcd below is a nonzero constant.
    """
    if not any(nums):
        raise ZeroDivisionError("inverse of zero scalar")
    a = _trim([Fraction(n, den) for n in nums])
    r0 = [Fraction(c) for c in phi]
    r1 = a
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q * s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        nxt = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            nxt[i] += c
        for i, c in enumerate(prod):
            nxt[i] -= c
        s0, s1 = s1, _trim(nxt)
    # r0 is a nonzero constant: gcd(a, phi)
    const = r0[0]
    inv = [c / const for c in s0]
    dim = len(phi) - 1
    inv += [Fraction(0)] * (dim - len(inv))
    common = lcm(*(c.denominator for c in inv)) if inv else 1
    out_nums = tuple(int(c * common) for c in inv)
    g = common
    for v in out_nums:
        g = gcd(g, v)
    if g > 1:
        out_nums = tuple(v // g for v in out_nums)
        common //= g
    return out_nums, common
