"""Modules over the dual-coalgebra topology of a finite-dimensional algebra.

A left A-module M induces, over each algebraic subcoalgebra C = Z(I) of
the dual, the section module M/IM with its action of the section
algebra A/I; the global sections at C = A* return M itself.  Over an
arbitrary subcoalgebra only a membership predicate is provided, by the
same maximal-witness reduction used for section algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LEFT, is_ideal
from .comodule import (Comodule, LeftModule, check_module_morphism, cotensor,
                       cotensor_comodule, dual_module, module_to_comodule)
from .errors import (CrossCheckError, DimensionMismatchError,
                     InvalidStructureError)
from .linalg import (Matrix, Subspace, image, kernel, orthogonal,
                     quotient_with_lift)
from .ringed import (RingedCoalgebraView, SectionAlgebra, evaluation_map,
                     filter_contains, is_in_topology, section_on_algebraic)


@dataclass(frozen=True)
class RCModuleView:
    """A left module over the base algebra, together with its dual
    comodule over the base's dual coalgebra."""

    over: RingedCoalgebraView
    module: LeftModule
    comodule: Comodule

    @staticmethod
    def of(rc: RingedCoalgebraView, module: LeftModule) -> "RCModuleView":
        if module.algebra != rc.algebra:
            raise InvalidStructureError("module is not over the base algebra")
        return RCModuleView(rc, module, module_to_comodule(rc.algebra, module))


def ideal_times_module(module: LeftModule, ideal: Subspace) -> Subspace:
    """The subspace I.M spanned by ideal elements acting on basis vectors."""
    field = module.algebra.field
    rows = []
    for u in ideal.basis:
        act = module.action_matrix(u)
        rows.extend(act.column(b) for b in range(module.dim))
    return Subspace.span(field, module.dim, rows)


def dual_image_map(v: RCModuleView, c: Subspace) -> Matrix:
    """m^M_C: M -> (C cotensor M*)*, evaluation on the cotensor basis."""
    ct = cotensor(c, v.comodule)
    field = v.over.algebra.field
    if ct.dim == 0:
        return Matrix(field, v.module.dim, ())
    return Matrix(field, v.module.dim, ct.basis)


def module_section_on_algebraic(v: RCModuleView, c: Subspace):
    """The section module over an algebraic subcoalgebra c = Z(I).

    Returns (section module over the section algebra, projection matrix
    M ->> M/IM).  The kernel of the evaluation into the cotensor dual is
    verified to be exactly I.M, so the section equals the image of M in
    (C cotensor M*)*.
    """
    if not is_in_topology(v.over, c):
        raise InvalidStructureError("module section base is not algebraic")
    if c.dim == 0:
        raise InvalidStructureError(
            "the zero subcoalgebra has no section (zero algebras are unsupported)")
    sec = section_on_algebraic(v.over, c)
    ideal = orthogonal(c)
    im = ideal_times_module(v.module, ideal)
    ev = dual_image_map(v, c)
    if kernel(ev) != im:
        raise CrossCheckError(
            "kernel of the cotensor evaluation is not the ideal multiple of the module")
    proj, lift = quotient_with_lift(im)
    field = v.module.algebra.field
    q_dim = v.module.dim - im.dim
    _, alg_lift = quotient_with_lift(orthogonal(c))
    actions = []
    for r in range(sec.algebra.dim):
        a_elt = alg_lift.column(r)
        act = v.module.action_matrix(a_elt)
        actions.append(proj.mul(act).mul(lift))
    section_module = LeftModule(sec.algebra, q_dim, tuple(actions))
    return section_module, proj


def module_section_membership(v: RCModuleView, c: Subspace, x) -> bool:
    """Membership of a functional on C cotensor M* in the section over c.

    The same maximal-witness reduction as for section algebras:
    J_x = {a in A : a_C(a) . x lies in the image of M} is a left ideal
    containing every witness, so the defining existential holds exactly
    when J_x is in the filter of c.
    """
    rc = v.over
    field = rc.algebra.field
    ct_comodule, _ = cotensor_comodule(c, v.comodule)
    dual_act = dual_module(ct_comodule)
    x = tuple(field.normalize(t) for t in x)
    if len(x) != ct_comodule.dim:
        raise DimensionMismatchError("functional does not live on the cotensor space")
    ev = dual_image_map(v, c)
    target = image(ev)
    proj, _ = quotient_with_lift(target)
    a_c = evaluation_map(rc, c)
    cols = []
    for t in range(rc.algebra.dim):
        acted = dual_act.act(a_c.column(t), x)
        cols.append(proj.apply(acted))
    j_x = kernel(Matrix(field, rc.algebra.dim, tuple(zip(*cols))) if cols
                 else Matrix(field, 0, ()))
    if not is_ideal(rc.algebra, j_x, LEFT):
        raise CrossCheckError("the maximal witness J_x failed to be a left ideal")
    return filter_contains(rc, c, j_x)


def module_restriction(v: RCModuleView, c1: Subspace, c2: Subspace) -> Matrix:
    """Restriction of module sections from c2 to a nested c1 (both
    algebraic): the further quotient M/I2.M ->> M/I1.M."""
    if not c2.contains_subspace(c1):
        raise InvalidStructureError("restriction requires nested subcoalgebras")
    _, proj1 = module_section_on_algebraic(v, c1)
    im2 = ideal_times_module(v.module, orthogonal(c2))
    _, lift2 = quotient_with_lift(im2)
    return proj1.mul(lift2)


def hat_on_morphism(v1: RCModuleView, v2: RCModuleView, f: Matrix, cs) -> list:
    """The induced maps of section modules for a module morphism f and a
    list of algebraic subcoalgebras; returns one matrix per entry."""
    report = check_module_morphism(v1.module, v2.module, f)
    if report:
        raise InvalidStructureError("; ".join(report))
    out = []
    for c in cs:
        _, proj1 = module_section_on_algebraic(v1, c)
        im1 = ideal_times_module(v1.module, orthogonal(c))
        _, lift1 = quotient_with_lift(im1)
        _, proj2 = module_section_on_algebraic(v2, c)
        out.append(proj2.mul(f).mul(lift1))
    return out


def gamma_roundtrip(v1: RCModuleView, v2: RCModuleView, f: Matrix) -> list:
    """Global sections of the induced section maps recover the morphism.

    At c = A* the ideal is zero, so the section module is M itself and
    the induced map must equal f exactly.
    """
    report = []
    field = v1.over.algebra.field
    full = Subspace.full(field, v1.over.algebra.dim)
    sec1, proj1 = module_section_on_algebraic(v1, full)
    if proj1 != Matrix.identity(field, v1.module.dim):
        report.append("global section projection is not the identity")
    if sec1.dim != v1.module.dim or sec1.actions != v1.module.actions:
        report.append("global sections do not return the module itself")
    induced = hat_on_morphism(v1, v2, f, [full])[0]
    if induced != f:
        report.append("global sections of the induced maps differ from the morphism")
    return report
