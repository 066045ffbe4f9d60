"""Vanishing-space topologies and section algebras on finite duals.

For a finite-dimensional algebra A, the dual space A* carries the dual
coalgebra, and the subcoalgebras cut out by two-sided ideals form a
topology closed under intersection and binary wedge.  Each nonzero
member C carries a section algebra, the image of A in C*, and the
global sections at C = A* recover A itself; both directions of that
roundtrip are computed, not assumed.

Membership in a section over an arbitrary subcoalgebra C is decided by
a maximal-witness reduction: the defining condition asks for some left
ideal I with Z(I) meeting C trivially and a_C(I) x inside a_C(A), and
J_x = {a in A : a_C(a) x in a_C(A)} is itself a left ideal containing
every witness, while the witness family is upward closed.  So the
existential holds exactly when J_x qualifies, one linear computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import algebra as alg
from .algebra import (LEFT, TWO_SIDED, AlgebraMorphism, StructureConstantAlgebra,
                      ideal_generated, is_ideal, quotient_algebra)
from .coalgebra import (CoalgebraMorphism, StructureConstantCoalgebra,
                        dual_algebra, dual_coalgebra, dual_of_algebra_morphism,
                        is_subcoalgebra, pullback_dagger, restrict_to_subcoalgebra)
from .errors import CrossCheckError, DimensionMismatchError, InvalidStructureError
from .fields import require_same_field
from .linalg import (Matrix, Subspace, image, intersect, kernel, orthogonal,
                     quotient_with_lift)


@dataclass(frozen=True)
class RingedCoalgebraView:
    """A finite-dimensional algebra together with its dual coalgebra and
    the induced subcoalgebra topology (held as a membership test)."""

    algebra: StructureConstantAlgebra
    coalg: StructureConstantCoalgebra

    @staticmethod
    def of(a: StructureConstantAlgebra) -> "RingedCoalgebraView":
        return RingedCoalgebraView(a, dual_coalgebra(a))


@dataclass(frozen=True)
class SectionAlgebra:
    """The section over an algebraic subcoalgebra C: the quotient of the
    base algebra by the annihilator ideal, with its embedding into C*."""

    subcoalgebra: Subspace
    algebra: StructureConstantAlgebra
    embedding: Matrix   # C.dim x algebra.dim, injective algebra morphism into C*
    from_base: AlgebraMorphism  # the projection A ->> section algebra


def _check_dual_subspace(rc: RingedCoalgebraView, s: Subspace, what: str):
    require_same_field(rc.algebra.field, s.field)
    if s.ambient_dim != rc.algebra.dim:
        raise DimensionMismatchError(f"{what} must live in the dual coordinate space")


def vanishing_space(a: StructureConstantAlgebra, s: Subspace) -> Subspace:
    """Functionals vanishing on s, inside the dual coordinates of a."""
    require_same_field(a.field, s.field)
    if s.ambient_dim != a.dim:
        raise DimensionMismatchError("subspace does not live in the algebra")
    return orthogonal(s)


def closure(a: StructureConstantAlgebra, s: Subspace) -> Subspace:
    """Double annihilator; at finite dimension this returns s itself,
    computed rather than assumed so the identity stays testable."""
    return orthogonal(vanishing_space(a, s))


def is_in_topology(rc: RingedCoalgebraView, d: Subspace) -> bool:
    """Whether d is cut out by a two-sided ideal; cross-checked against
    the subcoalgebra test on the dual coalgebra."""
    _check_dual_subspace(rc, d, "topology candidate")
    by_ideal = is_ideal(rc.algebra, orthogonal(d), TWO_SIDED)
    by_subcoalgebra = is_subcoalgebra(rc.coalg, d)
    if by_ideal != by_subcoalgebra:
        raise CrossCheckError(
            f"topology membership criteria disagree: ideal={by_ideal}, "
            f"subcoalgebra={by_subcoalgebra}")
    return by_ideal


def filter_contains(rc: RingedCoalgebraView, c: Subspace, i: Subspace,
                    side: str = LEFT) -> bool:
    """Whether the left ideal i belongs to the filter of c, i.e. whether
    the vanishing space of i meets c trivially."""
    if side != LEFT:
        raise InvalidStructureError("the section filter is built from left ideals")
    _check_dual_subspace(rc, c, "subcoalgebra")
    if not is_subcoalgebra(rc.coalg, c):
        raise InvalidStructureError("filter base is not a subcoalgebra")
    if not is_ideal(rc.algebra, i, LEFT):
        raise InvalidStructureError("filter candidate is not a left ideal")
    return intersect(orthogonal(i), c).dim == 0


def evaluation_map(rc: RingedCoalgebraView, c: Subspace) -> Matrix:
    """a_C: A -> C*, a |-> (evaluation of the basis functionals of c at a)."""
    return Matrix(rc.algebra.field, rc.algebra.dim, c.basis)


def _restricted_dual_algebra(rc: RingedCoalgebraView, c: Subspace):
    sub, _ = restrict_to_subcoalgebra(rc.coalg, c)
    return dual_algebra(sub)


def section_membership(rc: RingedCoalgebraView, c: Subspace, x) -> bool:
    """Membership of x in C* in the section over the subcoalgebra c.

    Uses the maximal-witness reduction: J_x = {a : a_C(a) x in a_C(A)}
    is a left ideal (verified), every witness ideal sits inside it, and
    the filter is upward closed, so x is accepted exactly when J_x is
    in the filter of c.
    """
    _check_dual_subspace(rc, c, "subcoalgebra")
    if not is_subcoalgebra(rc.coalg, c):
        raise InvalidStructureError("section base is not a subcoalgebra")
    field = rc.algebra.field
    x = tuple(field.normalize(t) for t in x)
    if len(x) != c.dim:
        raise DimensionMismatchError("functional does not live on the subcoalgebra")
    dual_on_c = _restricted_dual_algebra(rc, c)
    a_c = evaluation_map(rc, c)
    a_c_image = image(a_c)
    proj, _ = quotient_with_lift(a_c_image)
    cols = []
    for t in range(rc.algebra.dim):
        prod = dual_on_c.multiply(a_c.column(t), x)
        cols.append(proj.apply(prod))
    j_x = kernel(Matrix(field, rc.algebra.dim, tuple(zip(*cols))) if cols
                 else Matrix(field, 0, ()))
    if not is_ideal(rc.algebra, j_x, LEFT):
        raise CrossCheckError("the maximal witness J_x failed to be a left ideal")
    return filter_contains(rc, c, j_x)


def section_on_algebraic(rc: RingedCoalgebraView, c: Subspace) -> SectionAlgebra:
    """The section algebra over a nonzero algebraic subcoalgebra c.

    Returns A modulo the annihilator ideal of c, embedded into C* along
    the evaluation map.  c = 0 is rejected: its section would be the
    zero algebra, which the artifact does not represent.
    """
    if not is_in_topology(rc, c):
        raise InvalidStructureError("section base is not an algebraic subcoalgebra")
    if c.dim == 0:
        raise InvalidStructureError(
            "the zero subcoalgebra has no section (zero algebras are unsupported)")
    ideal = orthogonal(c)
    quot, proj_morphism = quotient_algebra(rc.algebra, ideal)
    _, lift = quotient_with_lift(ideal)
    embedding = evaluation_map(rc, c).mul(lift)
    return SectionAlgebra(subcoalgebra=c, algebra=quot, embedding=embedding,
                          from_base=proj_morphism)


def section_restriction(rc: RingedCoalgebraView, c1: Subspace, c2: Subspace):
    """Restriction of sections from c2 to a nested subcoalgebra c1.

    Returns (matrix, section over c1, section over c2); the matrix maps
    the section algebra of c2 onto that of c1 (a further quotient).
    """
    if not c2.contains_subspace(c1):
        raise InvalidStructureError("restriction requires nested subcoalgebras")
    s1 = section_on_algebraic(rc, c1)
    s2 = section_on_algebraic(rc, c2)
    _, lift2 = quotient_with_lift(orthogonal(c2))
    return s1.from_base.matrix.mul(lift2), s1, s2


def restricted_dual_map(f: CoalgebraMorphism, d: Subspace, fd: Subspace) -> Matrix:
    """Dual of the restriction of f to a map fd -> d, in the canonical
    bases of the two subcoalgebras; a (fd.dim x d.dim) matrix."""
    coords = [d.coords_of(f.apply(row)) for row in fd.basis]
    if not coords:
        return Matrix(f.source.field, d.dim, ())
    return Matrix(f.source.field, d.dim, tuple(coords))


def check_rc_morphism(phi: AlgebraMorphism, samples) -> list:
    """Verify the structure-map conditions of the dual of an algebra
    morphism on sampled algebraic subcoalgebras of the target's dual.

    For each sampled d = Z(I): the pullback along the dual morphism must
    equal the annihilator of the two-sided ideal generated by the image
    of I (computed both ways), must be algebraic on the source side, and
    the dual map must carry the section over d into the section over the
    pullback (image containment).
    """
    report = []
    rc_a = RingedCoalgebraView.of(phi.source)
    rc_b = RingedCoalgebraView.of(phi.target)
    f = dual_of_algebra_morphism(phi)  # B* -> A*
    for idx, d in enumerate(samples):
        if not is_in_topology(rc_a, d):
            raise InvalidStructureError(f"sample {idx} is not an algebraic subcoalgebra")
        ideal = orthogonal(d)
        fd = pullback_dagger(f, d)
        pushed = alg.image_of_subspace(phi, ideal)
        via_ideal = orthogonal(ideal_generated(phi.target, pushed, TWO_SIDED))
        if fd != via_ideal:
            report.append(
                f"sample {idx}: pullback (dim {fd.dim}) differs from the "
                f"ideal-annihilator route (dim {via_ideal.dim})")
            continue
        if not is_in_topology(rc_b, fd):
            report.append(f"sample {idx}: pullback left the topology")
            continue
        if d.dim == 0 or fd.dim == 0:
            continue  # no section is defined over the zero subcoalgebra
        g = restricted_dual_map(f, d, fd)
        carried = image(g.mul(evaluation_map(rc_a, d)))
        target_sections = image(evaluation_map(rc_b, fd))
        if not target_sections.contains_subspace(carried):
            report.append(f"sample {idx}: dual map does not restrict between sections")
    return report


def global_section_roundtrip(phi: AlgebraMorphism) -> list:
    """Check that global sections of the dual morphism recover phi.

    Builds f = (dual of phi): B* -> A*, takes sections at the full
    subcoalgebras on both sides, and compares the restricted dual map
    with phi itself; also checks that the comparison map of A* into the
    dual of its own global sections is the identity.
    """
    report = []
    a, b = phi.source, phi.target
    rc_a = RingedCoalgebraView.of(a)
    f = dual_of_algebra_morphism(phi)
    full_a = Subspace.full(a.field, a.dim)
    full_b = Subspace.full(b.field, b.dim)
    fd = pullback_dagger(f, full_a)
    if fd != full_b:
        report.append("pullback of the full dual is not the full dual")
        return report
    gamma = restricted_dual_map(f, full_a, full_b)
    if gamma != phi.matrix:
        report.append("global sections of the dual morphism differ from the original")
    section_full = section_on_algebraic(rc_a, full_a)
    iota = section_full.embedding.transpose()
    if iota != Matrix.identity(a.field, a.dim):
        report.append("the comparison map at the full dual is not the identity")
    return report
