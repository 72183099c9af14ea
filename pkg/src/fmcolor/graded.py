"""Graded modules, structure-constant tensors, and pointwise operators.

Everything is exact and immutable. A BilinearMap stores the sparse
3-tensor of a product on the basis; a Representation stores one dense
action matrix per algebra basis vector (column convention: column j is the
image of carrier basis vector j). Grading soundness is enforced at
construction time: a stored entry landing outside its graded component
raises GradingViolation immediately, so downstream checks never see an
ill-graded tensor.

The pointwise operators at the bottom (derivation_defect and friends) take
homogeneous elements; the sign factors depend only on degrees, and every
operator is linear in each slot, so evaluating them on homogeneous linear
combinations agrees with basis-wise evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from fmcolor.errors import (
    ContextMismatchError,
    GradingViolation,
    HomogeneityError,
)
from fmcolor.grading import Bicharacter, FiniteAbelianGroup, GroupElement
from fmcolor.scalars import CyclotomicScalar, context

__all__ = [
    "AlgebraSpec",
    "BilinearForm",
    "BilinearMap",
    "Element",
    "GradedModule",
    "Representation",
    "commutator_product",
    "coherence_operator",
    "derivation_defect",
    "determinant",
    "left_action",
    "pre_derivation_defect",
    "pre_product_defect",
    "radical_vector",
    "rep_derivation_defect",
    "rep_product_defect",
    "rep_product_defect_rev",
    "symmetrized_product",
]


@dataclass(frozen=True)
class GradedModule:
    """A finite free module with one group degree per basis vector."""

    group: FiniteAbelianGroup
    bicharacter: Bicharacter
    degrees: tuple[GroupElement, ...]

    def __post_init__(self):
        if self.bicharacter.group != self.group:
            raise ContextMismatchError("bicharacter group differs from module group")
        for d in self.degrees:
            if d.group != self.group:
                raise ContextMismatchError("basis degree from a different group")

    @property
    def dimension(self) -> int:
        return len(self.degrees)

    @property
    def ctx(self):
        return context(self.bicharacter.root_order)

    def compatible(self, other: GradedModule) -> bool:
        """Same group, bicharacter, and scalar field (degrees may differ)."""
        return (
            self.group == other.group
            and self.bicharacter == other.bicharacter
        )

    def zero_element(self) -> Element:
        return Element(self, (self.ctx.zero,) * self.dimension)

    def basis_element(self, i: int) -> Element:
        z, o = self.ctx.zero, self.ctx.one
        return Element(
            self, tuple(o if k == i else z for k in range(self.dimension))
        )

    def element(self, coeffs) -> Element:
        """Build an element from scalars, ints, or Fractions."""
        from fmcolor import _kernel

        ctx = self.ctx
        vals = tuple(
            c if isinstance(c, CyclotomicScalar) else _kernel.coerce(ctx, c)
            for c in coeffs
        )
        return Element(self, vals)

    def eps(self, a: GroupElement, b: GroupElement) -> CyclotomicScalar:
        return self.bicharacter.eval(a, b)


class Element:
    """Coefficient vector over the module's basis."""

    __slots__ = ("module", "coeffs")

    def __init__(self, module: GradedModule, coeffs: tuple):
        if len(coeffs) != module.dimension:
            raise ValueError("coefficient count does not match dimension")
        order = module.bicharacter.root_order
        for c in coeffs:
            if c.ctx.order != order:
                raise ContextMismatchError(
                    "element coefficients from a different scalar field"
                )
        self.module = module
        self.coeffs = tuple(coeffs)

    def _same(self, other: Element):
        if self.module != other.module:
            raise ContextMismatchError("elements of different modules")

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return Element(
            self.module, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        return Element(
            self.module, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> Element:
        return Element(self.module, tuple(-a for a in self.coeffs))

    def scale(self, s: CyclotomicScalar) -> Element:
        return Element(self.module, tuple(s * a for a in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.module == other.module
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.module.degrees, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def degree(self) -> Optional[GroupElement]:
        """Degree of a homogeneous element; None for zero; error if mixed."""
        degs = {self.module.degrees[i] for i in self.support()}
        if not degs:
            return None
        if len(degs) > 1:
            raise HomogeneityError(
                f"element has mixed degrees {sorted(d.components for d in degs)}"
            )
        return degs.pop()

    def __repr__(self):
        terms = ", ".join(f"{i}: {c}" for i, c in enumerate(self.coeffs) if c)
        return f"Element({{{terms or '0'}}})"


def _deg_or_zero(x: Element) -> GroupElement:
    # Zero elements contribute nothing to any (multilinear) operator term,
    # so the sign factor may be computed at the zero degree.
    d = x.degree()
    return d if d is not None else x.module.group.zero()


class BilinearMap:
    """Sparse structure constants of a product m(b_i, b_j)."""

    __slots__ = ("module", "name", "entries")

    def __init__(self, module: GradedModule, name: str, entries):
        """entries: mapping (i, j) -> coefficient sequence of length dim."""
        self.module = module
        self.name = name
        ctx = module.ctx
        n = module.dimension
        store = {}
        for (i, j), coeffs in entries.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"entry index ({i}, {j}) out of range")
            vec = tuple(coeffs)
            if len(vec) != n:
                raise ValueError("entry value has wrong length")
            if not any(vec):
                continue
            target = module.degrees[i] + module.degrees[j]
            for k, c in enumerate(vec):
                if c and module.degrees[k] != target:
                    raise GradingViolation(
                        f"{name}(b{i}, b{j}) has a component on b{k} of degree "
                        f"{module.degrees[k].components}, expected "
                        f"{target.components}"
                    )
                if c and c.ctx.order != ctx.order:
                    raise ContextMismatchError(
                        "structure constant from a different scalar field"
                    )
            store[(i, j)] = vec
        self.entries = store

    def value(self, i: int, j: int) -> Element:
        vec = self.entries.get((i, j))
        if vec is None:
            return self.module.zero_element()
        return Element(self.module, vec)

    def apply(self, x: Element, y: Element) -> Element:
        """Bilinear extension: sum x_i y_j m(b_i, b_j)."""
        if x.module != self.module or y.module != self.module:
            raise ContextMismatchError("elements of a different module")
        acc = list(self.module.zero_element().coeffs)
        xc, yc = x.coeffs, y.coeffs
        for (i, j), vec in self.entries.items():
            xi = xc[i]
            if not xi:
                continue
            yj = yc[j]
            if not yj:
                continue
            s = xi * yj
            for k, c in enumerate(vec):
                if c:
                    acc[k] = acc[k].add_mul(s, c)
        return Element(self.module, tuple(acc))

    def is_zero(self) -> bool:
        return not self.entries

    def renamed(self, name: str) -> BilinearMap:
        return BilinearMap(self.module, name, self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, BilinearMap)
            and self.module == other.module
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"BilinearMap({self.name!r}, {len(self.entries)} entries)"


# --- dense matrices over the scalar field (dimensions stay tiny) ---------


def zero_matrix(ctx, rows: int, cols: int):
    row = (ctx.zero,) * cols
    return tuple(row for _ in range(rows))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in ra) for ra in a)


def mat_scale(s, a):
    return tuple(tuple(s * x for x in ra) for ra in a)


def mat_mul(ctx, a, b):
    n = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    zero = ctx.zero
    out = []
    for i in range(n):
        ra = a[i]
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                x = ra[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc.add_mul(x, y)
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(ctx, a, v):
    zero = ctx.zero
    out = []
    for row in a:
        acc = zero
        for x, c in zip(row, v):
            if x and c:
                acc = acc.add_mul(x, c)
        out.append(acc)
    return tuple(out)


def mat_is_zero(a) -> bool:
    return not any(any(row) for row in a)


def determinant(ctx, matrix) -> CyclotomicScalar:
    """Exact determinant by Gaussian elimination over the field."""
    n = len(matrix)
    if n == 0:
        return ctx.one
    rows = [list(r) for r in matrix]
    det = ctx.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return ctx.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        pinv = p.inverse()
        for r in range(col + 1, n):
            f = rows[r][col]
            if f:
                f = f * pinv
                rows[r] = [
                    a.add_mul(-f, b) for a, b in zip(rows[r], rows[col])
                ]
    return det


def radical_vector(ctx, matrix):
    """A canonical nonzero kernel vector of a singular matrix, else None.

    Reduced row echelon form; the first free column gets coefficient one and
    the pivot columns are back-substituted, so the witness is deterministic.
    """
    n = len(matrix)
    rows = [list(r) for r in matrix]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, n) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pinv = rows[r][col].inverse()
        rows[r] = [pinv * v for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a.add_mul(-f, b) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == n:
            return None
    free = next(c for c in range(n) if c not in pivots)
    vec = [ctx.zero] * n
    vec[free] = ctx.one
    for i, col in enumerate(pivots):
        vec[col] = -rows[i][free]
    return tuple(vec)


class Representation:
    """A linear action of the algebra on a carrier module."""

    __slots__ = ("algebra", "carrier", "action")

    def __init__(self, algebra: GradedModule, carrier: GradedModule, action):
        """action[i]: matrix of the operator for algebra basis vector i."""
        if not algebra.compatible(carrier):
            raise ContextMismatchError(
                "carrier has a different group or bicharacter"
            )
        mats = tuple(tuple(tuple(row) for row in m) for m in action)
        if len(mats) != algebra.dimension:
            raise ValueError("one action matrix per algebra basis vector")
        m = carrier.dimension
        for i, mat in enumerate(mats):
            if len(mat) != m or any(len(row) != m for row in mat):
                raise ValueError(f"action matrix {i} is not {m}x{m}")
            for r in range(m):
                for c in range(m):
                    if mat[r][c] and carrier.degrees[r] != (
                        algebra.degrees[i] + carrier.degrees[c]
                    ):
                        raise GradingViolation(
                            f"action[{i}][{r}][{c}] maps degree "
                            f"{carrier.degrees[c].components} outside its "
                            "graded target"
                        )
        self.algebra = algebra
        self.carrier = carrier
        self.action = mats

    def matrix(self, i: int):
        return self.action[i]

    def operator(self, x: Element):
        """Matrix of the action of a (not necessarily basis) element."""
        if x.module != self.algebra:
            raise ContextMismatchError("element of a different algebra")
        ctx = self.carrier.ctx
        acc = zero_matrix(ctx, self.carrier.dimension, self.carrier.dimension)
        for i, xi in enumerate(x.coeffs):
            if xi:
                acc = mat_add(acc, mat_scale(xi, self.action[i]))
        return acc

    def act(self, x: Element, v: Element) -> Element:
        if v.module != self.carrier:
            raise ContextMismatchError("vector of a different carrier")
        return Element(
            self.carrier, mat_vec(self.carrier.ctx, self.operator(x), v.coeffs)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.carrier == other.carrier
            and self.action == other.action
        )

    def __repr__(self):
        return (
            f"Representation(dimA={self.algebra.dimension}, "
            f"dimV={self.carrier.dimension})"
        )


class BilinearForm:
    """B(b_i, b_j) as a dense matrix; symmetry/invariance are checked, not assumed."""

    __slots__ = ("module", "matrix")

    def __init__(self, module: GradedModule, matrix):
        rows = tuple(tuple(r) for r in matrix)
        n = module.dimension
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"form matrix must be {n}x{n}")
        order = module.bicharacter.root_order
        for r in rows:
            for c in r:
                if c.ctx.order != order:
                    raise ContextMismatchError(
                        "form entry from a different scalar field"
                    )
        self.module = module
        self.matrix = rows

    def eval(self, x: Element, y: Element) -> CyclotomicScalar:
        acc = self.module.ctx.zero
        for i, xi in enumerate(x.coeffs):
            if not xi:
                continue
            row = self.matrix[i]
            for j, yj in enumerate(y.coeffs):
                if yj and row[j]:
                    acc = acc.add_mul(xi * yj, row[j])
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, BilinearForm)
            and self.module == other.module
            and self.matrix == other.matrix
        )

    def __repr__(self):
        return f"BilinearForm(dim={self.module.dimension})"


@dataclass(frozen=True)
class AlgebraSpec:
    """A module bundled with named products, actions, and forms.

    Product names carry roles: `dot` (associative-side product), `bracket`
    (Lie-side), `zinbiel`, `prelie`. Representation pairs follow the naming
    convention rho/mu unless callers say otherwise.
    """

    module: GradedModule
    products: dict = field(default_factory=dict)
    representations: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)

    def __post_init__(self):
        for name, p in self.products.items():
            if p.module != self.module:
                raise ContextMismatchError(f"product {name!r} on a different module")
        for name, r in self.representations.items():
            if r.algebra != self.module:
                raise ContextMismatchError(
                    f"representation {name!r} acts for a different algebra"
                )
        for name, f in self.forms.items():
            if f.module != self.module:
                raise ContextMismatchError(f"form {name!r} on a different module")

    def product(self, name: str) -> BilinearMap:
        return self.products[name]

    def with_extras(self, products=None, representations=None, forms=None):
        return replace(
            self,
            products={**self.products, **(products or {})},
            representations={**self.representations, **(representations or {})},
            forms={**self.forms, **(forms or {})},
        )


# --- derived products ------------------------------------------------------


def symmetrized_product(zinbiel: BilinearMap, name: str = "dot") -> BilinearMap:
    """x*y = x<>y + eps(x, y) y<>x, the associative-side product of a Zinbiel map."""
    mod = zinbiel.module
    entries = {}
    n = mod.dimension
    for i in range(n):
        for j in range(n):
            v = zinbiel.value(i, j) + zinbiel.value(j, i).scale(
                mod.eps(mod.degrees[i], mod.degrees[j])
            )
            if not v.is_zero():
                entries[(i, j)] = v.coeffs
    return BilinearMap(mod, name, entries)


def commutator_product(prelie: BilinearMap, name: str = "bracket") -> BilinearMap:
    """[x, y] = x*y - eps(x, y) y*x."""
    mod = prelie.module
    entries = {}
    n = mod.dimension
    for i in range(n):
        for j in range(n):
            v = prelie.value(i, j) - prelie.value(j, i).scale(
                mod.eps(mod.degrees[i], mod.degrees[j])
            )
            if not v.is_zero():
                entries[(i, j)] = v.coeffs
    return BilinearMap(mod, name, entries)


def left_action(bmap: BilinearMap) -> Representation:
    """The left-multiplication action x -> m(x, -) on the module itself."""
    mod = bmap.module
    n = mod.dimension
    action = []
    for i in range(n):
        cols = [bmap.value(i, j).coeffs for j in range(n)]
        action.append(
            tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
        )
    return Representation(mod, mod, action)


# --- pointwise operators ---------------------------------------------------


def _eps(x: Element, y: Element) -> CyclotomicScalar:
    return x.module.eps(_deg_or_zero(x), _deg_or_zero(y))


def derivation_defect(
    dot: BilinearMap, bracket: BilinearMap, x: Element, y: Element, z: Element
) -> Element:
    """How far [x, -] is from a color derivation of the product:

    [x, y.z] - [x, y].z - eps(x, y) y.[x, z]
    """
    return (
        bracket.apply(x, dot.apply(y, z))
        - dot.apply(bracket.apply(x, y), z)
        - dot.apply(y, bracket.apply(x, z)).scale(_eps(x, y))
    )


def rep_derivation_defect(
    rho: Representation,
    mu: Representation,
    bracket: BilinearMap,
    x1: Element,
    x2: Element,
):
    """rho(x1) mu(x2) - eps(x1, x2) mu(x2) rho(x1) - mu([x1, x2]), as a matrix."""
    ctx = rho.carrier.ctx
    a = mat_mul(ctx, rho.operator(x1), mu.operator(x2))
    b = mat_scale(_eps(x1, x2), mat_mul(ctx, mu.operator(x2), rho.operator(x1)))
    c = mu.operator(bracket.apply(x1, x2))
    return mat_sub(mat_sub(a, b), c)


def rep_product_defect(
    rho: Representation,
    mu: Representation,
    dot: BilinearMap,
    x1: Element,
    x2: Element,
):
    """mu(x1) rho(x2) + eps(x1, x2) mu(x2) rho(x1) - rho(x1.x2), as a matrix."""
    ctx = rho.carrier.ctx
    a = mat_mul(ctx, mu.operator(x1), rho.operator(x2))
    b = mat_scale(_eps(x1, x2), mat_mul(ctx, mu.operator(x2), rho.operator(x1)))
    c = rho.operator(dot.apply(x1, x2))
    return mat_sub(mat_add(a, b), c)


def rep_product_defect_rev(
    rho: Representation,
    mu: Representation,
    dot: BilinearMap,
    x: Element,
    y: Element,
):
    """-eps(x, y) rho(y) mu(x) - rho(x) mu(y) + rho(x.y), as a matrix.

    The composition-reversed twin of rep_product_defect; it governs when the
    twisted dual of an action pair stays a representation.
    """
    ctx = rho.carrier.ctx
    a = mat_scale(-_eps(x, y), mat_mul(ctx, rho.operator(y), mu.operator(x)))
    b = mat_mul(ctx, rho.operator(x), mu.operator(y))
    c = rho.operator(dot.apply(x, y))
    return mat_add(mat_sub(a, b), c)


def coherence_operator(
    dot: BilinearMap, bracket: BilinearMap, y: Element, z: Element, w: Element
) -> Element:
    """-eps(y, z) [z, y.w] - [y, z.w] + [y.z, w]."""
    return (
        bracket.apply(dot.apply(y, z), w)
        - bracket.apply(z, dot.apply(y, w)).scale(_eps(y, z))
        - bracket.apply(y, dot.apply(z, w))
    )


def pre_derivation_defect(
    zinbiel: BilinearMap,
    prelie: BilinearMap,
    bracket: BilinearMap,
    x: Element,
    y: Element,
    z: Element,
) -> Element:
    """x*(y<>z) - eps(x, y) y<>(x*z) - [x, y]<>z.

    bracket must be the commutator of the prelie product.
    """
    return (
        prelie.apply(x, zinbiel.apply(y, z))
        - zinbiel.apply(y, prelie.apply(x, z)).scale(_eps(x, y))
        - zinbiel.apply(bracket.apply(x, y), z)
    )


def pre_product_defect(
    zinbiel: BilinearMap,
    prelie: BilinearMap,
    dot: BilinearMap,
    x: Element,
    y: Element,
    z: Element,
) -> Element:
    """x<>(y*z) + eps(x, y) y<>(x*z) - (x.y)*z.

    dot must be the symmetrization of the zinbiel product.
    """
    return (
        zinbiel.apply(x, prelie.apply(y, z))
        + zinbiel.apply(y, prelie.apply(x, z)).scale(_eps(x, y))
        - prelie.apply(dot.apply(x, y), z)
    )
