"""The polynomial algebra k[x] through its finite-codimension quotients.

k[x] itself is never materialized.  Its finite dual is handled through
the tower of quotients k[x]/(f): a functional that vanishes on the ideal
(f) is stored as a vector on the quotient basis 1, x, ..., x^(deg f - 1)
together with its monic modulus, and inclusions along divisibility give
the directed system.  This module also hosts the end-to-end pullback
counterexample on the nilpotent map into 2 x 2 matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra as alg
from . import coalgebra as cog
from .coalgebra import (CoalgebraMorphism, dual_coalgebra, dual_of_algebra_morphism,
                        is_subcoalgebra, pullback_dagger, wedge)
from .errors import CrossCheckError, InvalidStructureError
from .fields import QQ, Field, require_same_field
from .linalg import Matrix, Subspace, orthogonal, subspace_sum

# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial, ascending coefficients, no trailing zeros."""

    field: Field
    coeffs: tuple

    @staticmethod
    def make(field: Field, coeffs) -> "Poly":
        cs = [field.normalize(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly.make(field, [field.zero, field.one])

    @staticmethod
    def constant(field: Field, c) -> "Poly":
        return Poly.make(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "Poly":
        if self.is_zero():
            raise InvalidStructureError("the zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return Poly.make(self.field, [self.field.div(c, lead) for c in self.coeffs])

    def add(self, other: "Poly") -> "Poly":
        require_same_field(self.field, other.field)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [self.field.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [self.field.zero] * (n - len(other.coeffs))
        return Poly.make(self.field, [x + y for x, y in zip(a, b)])

    def neg(self) -> "Poly":
        return Poly.make(self.field, [-c for c in self.coeffs])

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def mul(self, other: "Poly") -> "Poly":
        require_same_field(self.field, other.field)
        if self.is_zero() or other.is_zero():
            return Poly.make(self.field, [])
        field = self.field
        out = [field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b != field.zero:
                    out[i + j] = out[i + j] + a * b
        return Poly.make(field, out)

    def divmod(self, other: "Poly"):
        require_same_field(self.field, other.field)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quo = [field.zero] * max(0, len(rem) - d)
        for t in range(len(rem) - 1, d - 1, -1):
            c = rem[t]
            if c == field.zero:
                continue
            q = field.div(c, lead)
            quo[t - d] = q
            for s in range(d + 1):
                rem[t - d + s] = field.normalize(rem[t - d + s] - q * other.coeffs[s])
        return Poly.make(field, quo), Poly.make(field, rem)

    def mod(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.mod(self).is_zero()

    def eval(self, x):
        field = self.field
        acc = field.zero
        for c in reversed(self.coeffs):
            acc = field.normalize(acc * x + c)
        return acc

    def fmt(self) -> str:
        if self.is_zero():
            return "0"
        field = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == field.zero:
                continue
            if i == 0:
                terms.append(field.fmt(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if c == field.one:
                    terms.append(xs)
                elif c == field.normalize(-1):
                    terms.append(f"-{xs}")
                else:
                    terms.append(f"{field.fmt(c)}{xs}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.mod(b)
    if a.is_zero():
        return a
    return a.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly.make(f.field, [])
    quot, rem = f.mul(g).divmod(poly_gcd(f, g))
    assert rem.is_zero()
    return quot.monic()


# ---------------------------------------------------------------------------
# quotients and functionals


def quotient_of(f: Poly) -> alg.StructureConstantAlgebra:
    """k[x]/(f) on the basis 1, x, ..., x^(deg f - 1); f becomes monic."""
    if f.is_zero():
        raise InvalidStructureError("cannot quotient by the zero polynomial")
    return alg.quotient_polynomial(f.field, f.coeffs)


def power_mod(f: Poly, t: int) -> tuple:
    """Coordinates of x^t in k[x]/(f)."""
    field = f.field
    mono = Poly.make(field, [field.zero] * t + [field.one])
    rem = mono.mod(f.monic())
    d = f.degree
    out = list(rem.coeffs) + [field.zero] * (d - len(rem.coeffs))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FinDualElement:
    """A functional on k[x] vanishing on (modulus), as a vector on the
    quotient basis.  Two elements are equal when they agree after
    inclusion into the quotient by the lcm of their moduli."""

    modulus: Poly  # monic, degree >= 1
    functional: tuple

    __hash__ = None

    @staticmethod
    def make(modulus: Poly, functional) -> "FinDualElement":
        if modulus.is_zero() or modulus.degree < 1:
            raise InvalidStructureError("modulus must be nonzero of degree >= 1")
        modulus = modulus.monic()
        field = modulus.field
        functional = tuple(field.normalize(x) for x in functional)
        if len(functional) != modulus.degree:
            raise InvalidStructureError("functional length must equal the modulus degree")
        return FinDualElement(modulus, functional)

    def evaluate(self, p: Poly):
        field = self.modulus.field
        rem = p.mod(self.modulus)
        coeffs = list(rem.coeffs) + [field.zero] * (self.modulus.degree - len(rem.coeffs))
        acc = field.zero
        for a, b in zip(self.functional, coeffs):
            acc = acc + a * b
        return field.normalize(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinDualElement):
            return NotImplemented
        if self.modulus.field != other.modulus.field:
            return False
        target = poly_lcm(self.modulus, other.modulus)
        a = include(self, target)
        b = include(other, target)
        return a.functional == b.functional


def include(phi: FinDualElement, g: Poly) -> FinDualElement:
    """Pull the functional back along k[x]/(g) ->> k[x]/(modulus).

    Requires modulus | g; evaluation on every polynomial is unchanged.
    """
    g = g.monic()
    if not phi.modulus.divides(g):
        raise InvalidStructureError("inclusion requires the modulus to divide the target")
    field = g.field
    functional = []
    for i in range(g.degree):
        mono = Poly.make(field, [field.zero] * i + [field.one])
        functional.append(phi.evaluate(mono))
    return FinDualElement.make(g, functional)


def ideal_image_in_quotient(h: Poly, m: Poly) -> Subspace:
    """The image of the ideal (h) inside k[x]/(m), as a subspace."""
    field = m.field
    m = m.monic()
    d = m.degree
    if h.is_zero():
        return Subspace.zero(field, d)
    rows = []
    for i in range(d):
        shifted = Poly.make(field, [field.zero] * i + list(h.coeffs))
        rem = shifted.mod(m)
        rows.append(tuple(list(rem.coeffs) + [field.zero] * (d - len(rem.coeffs))))
    return Subspace.span(field, d, rows)


def vanishing_in_quotient(h: Poly, m: Poly) -> Subspace:
    """Functionals on k[x]/(m) vanishing on the image of the ideal (h)."""
    return orthogonal(ideal_image_in_quotient(h, m))


# ---------------------------------------------------------------------------
# the wedge law along the tower


@dataclass(frozen=True)
class WedgeLawReport:
    f: Poly
    g: Poly
    dim_ambient: int
    dim_left: int
    dim_right: int
    dim_wedge: int
    holds: bool

    def as_text(self) -> str:
        status = "ok" if self.holds else "FAILED"
        return (f"wedge law for f = {self.f.fmt()}, g = {self.g.fmt()}: "
                f"dim Z((f)) = {self.dim_left}, dim Z((g)) = {self.dim_right}, "
                f"wedge dimension {self.dim_wedge} of {self.dim_ambient} [{status}]")


def wedge_law(f: Poly, g: Poly) -> WedgeLawReport:
    """Check that Z((f)) wedge Z((g)) fills (k[x]/(fg))* exactly.

    Both wedge formulas run (the wedge operation cross-checks them); the
    report records the dimensions.
    """
    if f.is_zero() or g.is_zero():
        raise InvalidStructureError("wedge law needs nonzero polynomials")
    fg = f.mul(g).monic()
    if fg.degree < 1:
        raise InvalidStructureError(
            "both polynomials are constants; the ambient quotient would be the zero algebra")
    ambient = dual_coalgebra(quotient_of(fg))
    vf = vanishing_in_quotient(f, fg)
    vg = vanishing_in_quotient(g, fg)
    w = wedge(ambient, vf, vg)
    return WedgeLawReport(f=f, g=g, dim_ambient=fg.degree, dim_left=vf.dim,
                          dim_right=vg.dim, dim_wedge=w.dim,
                          holds=w.dim == fg.degree and w.is_full())


# ---------------------------------------------------------------------------
# homomorphisms out of k[x]


def hom_to(b: alg.StructureConstantAlgebra, image_of_x):
    """The map k[x] -> B sending x to the given element, factored
    through the quotient by its minimal polynomial.

    Returns (q, morphism) with q the minimal polynomial and the induced
    algebra morphism k[x]/(q) -> B.
    """
    field = b.field
    v = tuple(field.normalize(t) for t in image_of_x)
    powers = [b.unit]
    span = Subspace.span(field, b.dim, [b.unit])
    cur = b.unit
    while True:
        cur = b.multiply(cur, v)
        if span.contains(cur):
            coords = _coords_in_powers(field, b, powers, cur)
            break
        powers.append(cur)
        span = subspace_sum(span, Subspace.span(field, b.dim, [cur]))
    m = len(powers)
    q = Poly.make(field, [field.normalize(-c) for c in coords] + [field.one])
    source = quotient_of(q)
    matrix = Matrix(field, m, tuple(zip(*powers)))
    phi = alg.AlgebraMorphism(source, b, matrix)
    return q, phi


def _coords_in_powers(field, b, powers, target):
    """Coefficients expressing target in the (independent) power basis.

    The powers are not in canonical form, so route through the span's
    canonical coordinates and solve the small square change of basis.
    """
    aug = Subspace.span(field, b.dim, powers)
    coords_canon = aug.coords_of(tuple(target))
    rows = [aug.coords_of(p) for p in powers]
    sys_m = Matrix(field, len(powers), tuple(zip(*rows)))
    return _solve_square(field, sys_m, coords_canon)


def _solve_square(field, m: Matrix, rhs):
    """Solve m z = rhs for an invertible square matrix."""
    n = m.n_rows
    work = [list(r) + [rhs[i]] for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if work[r][col] != field.zero:
                piv = r
                break
        if piv is None:
            raise CrossCheckError("singular system in power-basis solve")
        work[col], work[piv] = work[piv], work[col]
        inv = field.inv(work[col][col])
        work[col] = [field.normalize(x * inv) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != field.zero:
                f = work[r][col]
                work[r] = [field.normalize(x - f * y) for x, y in zip(work[r], work[col])]
    return tuple(work[r][n] for r in range(n))


# ---------------------------------------------------------------------------
# the pullback counterexample


@dataclass(frozen=True)
class CounterexampleReport:
    minimal_polynomial: str
    dim_pullback_point: int
    dim_pullback_whole: int
    dim_kernel: int
    kernel_is_subcoalgebra: bool
    dim_wedge_of_pullbacks: int
    dim_pullback_of_wedge: int
    strict_inequality: bool

    def as_text(self) -> str:
        lines = [
            "pullback counterexample on x -> e01 in the 2x2 matrix algebra:",
            f"  minimal polynomial of the image: {self.minimal_polynomial}",
            f"  dim pullback of Z((x))   = {self.dim_pullback_point}",
            f"  dim pullback of Z((x^2)) = {self.dim_pullback_whole}",
            f"  dim ker of the dual map  = {self.dim_kernel}"
            f" (subcoalgebra: {str(self.kernel_is_subcoalgebra).lower()})",
            f"  wedge of pullbacks has dimension {self.dim_wedge_of_pullbacks}, "
            f"pullback of the wedge has dimension {self.dim_pullback_of_wedge}",
            f"  strict inequality: {str(self.strict_inequality).lower()}",
        ]
        return "\n".join(lines)


def counterexample(field: Field = QQ) -> CounterexampleReport:
    """Pullbacks along duals do not commute with wedge products.

    The witness: the map out of k[x] sending x to the matrix unit e01
    (nonzero, square zero).  Every claim is computed two independent
    ways where available; any deviation raises CrossCheckError.
    """
    b = alg.matrix_algebra(field, 2)
    e01 = b.basis_vector(1)
    q, phi = hom_to(b, e01)
    x2 = Poly.make(field, [field.zero, field.zero, field.one])
    if q != x2:
        raise CrossCheckError(f"expected minimal polynomial x^2, got {q.fmt()}")
    if alg.check_morphism(phi):
        raise CrossCheckError("induced quotient map is not an algebra morphism")

    f = dual_of_algebra_morphism(phi)  # (2x2 matrices)* -> (k[x]/(x^2))*
    source_alg = phi.source

    x_ideal = ideal_image_in_quotient(Poly.x(field), q)
    d_point = orthogonal(x_ideal)       # Z((x)), one-dimensional
    d_whole = vanishing_in_quotient(x2, q)  # Z((x^2)) = the whole dual

    def dagger_two_ways(d: Subspace, ideal_in_quotient: Subspace) -> Subspace:
        via_pullback = pullback_dagger(f, d)
        pushed = alg.image_of_subspace(phi, ideal_in_quotient)
        via_ideal = orthogonal(alg.ideal_generated(b, pushed, alg.TWO_SIDED))
        if via_pullback != via_ideal:
            raise CrossCheckError("pullback and ideal-annihilator routes disagree")
        return via_pullback

    fd_point = dagger_two_ways(d_point, x_ideal)
    fd_whole = dagger_two_ways(d_whole, ideal_image_in_quotient(x2, q))
    if fd_point.dim != 0:
        raise CrossCheckError(f"pullback of Z((x)) has dimension {fd_point.dim}, wanted 0")
    if fd_whole.dim != 4:
        raise CrossCheckError(f"pullback of Z((x^2)) has dimension {fd_whole.dim}, wanted 4")

    # ker f = (image of the unital quotient map)^perp; the unit and the
    # nilpotent span a 2-dimensional image, so the kernel has dimension 2.
    ker = cog.preimage_subspace(f, Subspace.zero(field, source_alg.dim))
    if ker.dim != b.dim - 2:
        raise CrossCheckError(f"kernel of the dual map has dimension {ker.dim}, wanted 2")
    ker_is_sub = is_subcoalgebra(f.source, ker)
    if ker_is_sub:
        raise CrossCheckError("kernel unexpectedly is a subcoalgebra")

    target = dual_coalgebra(source_alg)
    wedge_after = wedge(f.source, fd_point, fd_point)
    wedge_before = pullback_dagger(f, wedge(target, d_point, d_point))
    strict = wedge_after != wedge_before
    if not strict or wedge_after.dim != 0 or wedge_before.dim != 4:
        raise CrossCheckError("the wedge/pullback gap did not materialize")

    return CounterexampleReport(
        minimal_polynomial=q.fmt(),
        dim_pullback_point=fd_point.dim,
        dim_pullback_whole=fd_whole.dim,
        dim_kernel=ker.dim,
        kernel_is_subcoalgebra=ker_is_sub,
        dim_wedge_of_pullbacks=wedge_after.dim,
        dim_pullback_of_wedge=wedge_before.dim,
        strict_inequality=strict,
    )
