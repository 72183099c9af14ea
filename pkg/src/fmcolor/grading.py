"""Finite abelian grading groups and skew-symmetric bicharacters.

A group is a product of cyclic factors Z_d1 x ... x Z_dk (empty product =
trivial group). A bicharacter is stored as an integer exponent matrix M into
N-th roots of unity: eps(g_i, g_j) = zeta_N^(M[i][j]) on generators, extended
biadditively. Validity means the skew congruence M[i][j] + M[j][i] = 0 (mod N)
and the well-definedness congruences d_i*M[i][j] = d_j*M[i][j] = 0 (mod N);
those force every value of the biadditive extension to be well defined and
every eps(a, a) to be +1 or -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm

from fmcolor.errors import BicharacterViolation, ContextMismatchError
from fmcolor.report import CheckReport, Witness
from fmcolor.scalars import CyclotomicScalar, root_of_unity

__all__ = [
    "Bicharacter",
    "FiniteAbelianGroup",
    "GroupElement",
    "bicharacter_validate",
    "group_add",
    "group_neg",
]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_d1 x ... x Z_dk; an empty factor list is the trivial group."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if any(d < 2 for d in self.cyclic_orders):
            raise ValueError("cyclic factor orders must be >= 2")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        n = 1
        for d in self.cyclic_orders:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    def element(self, components) -> GroupElement:
        comps = tuple(components)
        if len(comps) != self.rank:
            raise ValueError(
                f"expected {self.rank} components, got {len(comps)}"
            )
        return GroupElement(
            self, tuple(c % d for c, d in zip(comps, self.cyclic_orders))
        )

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def elements(self):
        """All group elements, lexicographic by components."""
        for comps in itertools.product(*(range(d) for d in self.cyclic_orders)):
            yield GroupElement(self, comps)


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    components: tuple[int, ...]

    def _same(self, other: GroupElement):
        if self.group != other.group:
            raise ContextMismatchError("group elements from different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._same(other)
        return GroupElement(
            self.group,
            tuple(
                (a + b) % d
                for a, b, d in zip(
                    self.components, other.components, self.group.cyclic_orders
                )
            ),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(
            self.group,
            tuple(
                (-a) % d
                for a, d in zip(self.components, self.group.cyclic_orders)
            ),
        )

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.components)


def group_add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def group_neg(a: GroupElement) -> GroupElement:
    return -a


class Bicharacter:
    """Skew-symmetric bicharacter into N-th roots of unity.

    Evaluation requires a valid exponent matrix; constructing an invalid one
    is allowed so that `bicharacter_validate` can report exactly where the
    congruences break.
    """

    __slots__ = ("group", "root_order", "exponents", "_valid", "_cache")

    def __init__(self, group: FiniteAbelianGroup, root_order: int, exponents):
        rows = tuple(tuple(int(v) for v in row) for row in exponents)
        k = group.rank
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"exponent matrix must be {k}x{k}")
        if root_order < 1:
            raise ValueError("root_order must be >= 1")
        self.group = group
        self.root_order = root_order
        self.exponents = rows
        self._valid = None
        self._cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, Bicharacter)
            and self.group == other.group
            and self.root_order == other.root_order
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.group, self.root_order, self.exponents))

    def __repr__(self):
        return (
            f"Bicharacter(group={self.group.cyclic_orders}, "
            f"N={self.root_order}, M={self.exponents})"
        )

    def validate(self) -> CheckReport:
        """Check the skew and well-definedness congruences entry by entry."""
        n = self.root_order
        orders = self.group.cyclic_orders
        m = self.exponents
        checked = 0
        for i in range(self.group.rank):
            for j in range(self.group.rank):
                checked += 1
                skew = (m[i][j] + m[j][i]) % n
                if skew:
                    self._valid = False
                    return CheckReport(
                        "bicharacter", False, Witness((i, j), skew), checked
                    )
                wd = (orders[i] * m[i][j]) % n or (orders[j] * m[i][j]) % n
                if wd:
                    self._valid = False
                    return CheckReport(
                        "bicharacter", False, Witness((i, j), wd), checked
                    )
        self._valid = True
        return CheckReport("bicharacter", True, None, checked)

    @property
    def is_valid(self) -> bool:
        if self._valid is None:
            self.validate()
        return self._valid

    def eval(self, a: GroupElement, b: GroupElement) -> CyclotomicScalar:
        """eps(a, b) as an exact root of unity."""
        key = (a.components, b.components)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not self.is_valid:
            raise BicharacterViolation(
                "cannot evaluate an invalid bicharacter"
            )
        if a.group != self.group or b.group != self.group:
            raise ContextMismatchError("group element from a different group")
        exp = 0
        m = self.exponents
        for i, ai in enumerate(a.components):
            if ai:
                row = m[i]
                for j, bj in enumerate(b.components):
                    if bj:
                        exp += ai * row[j] * bj
        val = root_of_unity(exp, self.root_order)
        self._cache[key] = val
        return val


def bicharacter_validate(
    group: FiniteAbelianGroup, eps: Bicharacter
) -> CheckReport:
    """Report form of validation; failure carries the violating (i, j)."""
    if eps.group != group:
        raise ContextMismatchError("bicharacter belongs to a different group")
    return eps.validate()
