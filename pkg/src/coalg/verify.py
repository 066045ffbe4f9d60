"""Seeded verification suite for the toolkit's algebraic laws.

Every law has a stable id and a neutral statement string; the manifest
below is the single source of those statements.  A run is deterministic
in (seed, cases, max_dim, fields): each case draws from a fresh
generator seeded by a string key, and the structured report serializes
with sorted keys and no timing data, so identical flags give identical
bytes.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field

from . import algebra as alg
from . import coalgebra as cog
from . import comodule as com
from . import polydual as pd
from . import randgen as rgen
from . import rcmodules as rcm
from . import ringed as rg
from .fields import GF, QQ, Field, field_from_tag
from .linalg import (Matrix, Subspace, intersect, intersect_all, orthogonal,
                     subspace_sum, tensor_map)

# ---------------------------------------------------------------------------
# the law manifest: id -> statement (the formula the check asserts)

LAWS = {
    "wedge.associative":
        "(U v V) v W = U v (V v W)",
    "wedge.meet-distributive":
        "(meet_i V_i) v W = meet_i (V_i v W), and symmetrically on the right",
    "wedge.preimage-compatible":
        "f^{-1}(V v W) = f^{-1}(V) v f^{-1}(W) for coalgebra morphisms f",
    "wedge.restricts-to-subcoalgebras":
        "(V1 v V2) cap D = (V1 cap D) v_D (V2 cap D) for subcoalgebras D",
    "wedge.grouplike-union":
        "grouplikes(V1 v V2) = grouplikes(V1) union grouplikes(V2)",
    "wedge.direct-sum":
        "(+ V_i) v (+ V'_i) = + (V_i v V'_i) in direct-sum coalgebras",
    "wedge.image-containment":
        "f(V v W) is contained in f(V) v f(W) (containment only)",
    "dagger.meet-compatible":
        "pullback(D cap D') = pullback(D) cap pullback(D') for subcoalgebras",
    "wedge.closes-subcoalgebras":
        "the wedge of two subcoalgebras is a subcoalgebra",
    "oracle.two-route-agreement":
        "both wedge formulas, both largest-subcoalgebra algorithms, and both "
        "pullback computations agree",
    "vanishing.quantale-laws":
        "meet_i Z(S_i) = Z(sum_i S_i) and Z(S1) v Z(S2) = Z(S1 S2)",
    "vanishing.galois-bijection":
        "Z(S)^perp = S for subspaces and Z(T^perp) = T for vanishing spaces",
    "vanishing.zero-forces-unit-ideal":
        "Z(I) = 0 forces I = A for left ideals",
    "sections.commutative-closure":
        "over commutative algebras, accepted section elements are closed "
        "under sum and product",
    "dagger.wedge-strict-counterexample":
        "pullback(D) v pullback(D) differs from pullback(D v D) on the "
        "nilpotent witness map",
    "cotensor.direct-sum":
        "D cotensor (N1 + N2) = (D cotensor N1) + (D cotensor N2)",
    "cotensor.monotone":
        "D inside D' implies D cotensor N inside D' cotensor N",
    "dualmodule.roundtrip":
        "comodule -> dual module -> comodule is the identity",
    "comodule.block-decomposition":
        "a complete orthogonal central idempotent family splits a comodule "
        "into comodule blocks that reassemble exactly",
    "findual.inclusion-evaluation":
        "inclusion along divisibility preserves evaluation pairings",
    "findual.inclusion-functorial":
        "include(include(phi, g), h) = include(phi, h) for modulus | g | h",
    "findual.wedge-law":
        "Z((f)) v Z((g)) fills the dual of k[x]/(fg)",
    "findual.residual-witness":
        "every nonzero polynomial is detected by a tower functional",
    "rcmodule.action-square":
        "restriction of module sections commutes with the section-algebra "
        "actions on nested algebraic subcoalgebras",
    "rcmodule.cotensor-annihilator":
        "C cotensor M* equals the annihilator of I.M when C = Z(I)",
    "rcmodule.global-sections-identity":
        "global sections return the module and the morphism exactly",
}

COALGEBRA_LAWS = [
    "wedge.associative", "wedge.meet-distributive", "wedge.preimage-compatible",
    "wedge.restricts-to-subcoalgebras", "wedge.grouplike-union",
    "wedge.direct-sum", "wedge.image-containment", "dagger.meet-compatible",
    "wedge.closes-subcoalgebras", "oracle.two-route-agreement",
]
RINGED_LAWS = [
    "vanishing.quantale-laws", "vanishing.galois-bijection",
    "vanishing.zero-forces-unit-ideal", "sections.commutative-closure",
    "dagger.wedge-strict-counterexample",
]
COMODULE_LAWS = [
    "cotensor.direct-sum", "cotensor.monotone", "dualmodule.roundtrip",
    "comodule.block-decomposition",
]
POLYDUAL_LAWS = [
    "findual.inclusion-evaluation", "findual.inclusion-functorial",
    "findual.wedge-law", "findual.residual-witness",
]
RCMODULE_LAWS = [
    "rcmodule.action-square", "rcmodule.cotensor-annihilator",
    "rcmodule.global-sections-identity",
]


# ---------------------------------------------------------------------------
# one-case runners; return None on pass, a short witness string on failure


def _law_wedge_associative(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    v1 = rgen.rand_subspace(rng, field, c.dim)
    v2 = rgen.rand_subspace(rng, field, c.dim)
    v3 = rgen.rand_subspace(rng, field, c.dim)
    lhs = cog.wedge(c, cog.wedge(c, v1, v2), v3)
    rhs = cog.wedge(c, v1, cog.wedge(c, v2, v3))
    if lhs != rhs:
        return f"dims {lhs.dim} != {rhs.dim} on a coalgebra of dimension {c.dim}"
    return None


def _law_wedge_meet_distributive(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    k = rng.randint(2, 4)
    vs = [rgen.rand_subspace(rng, field, c.dim) for _ in range(k)]
    w = rgen.rand_subspace(rng, field, c.dim)
    meet = intersect_all(vs)
    left = cog.wedge(c, meet, w)
    if left != intersect_all([cog.wedge(c, v, w) for v in vs]):
        return f"left distributivity fails over {k} subspaces (dim {c.dim})"
    right = cog.wedge(c, w, meet)
    if right != intersect_all([cog.wedge(c, w, v) for v in vs]):
        return f"right distributivity fails over {k} subspaces (dim {c.dim})"
    return None


def _law_wedge_preimage(rng, field, max_dim):
    f = rgen.rand_coalgebra_morphism(rng, field, max_dim)
    v = rgen.rand_subspace(rng, field, f.target.dim)
    w = rgen.rand_subspace(rng, field, f.target.dim)
    lhs = cog.preimage_subspace(f, cog.wedge(f.target, v, w))
    rhs = cog.wedge(f.source, cog.preimage_subspace(f, v),
                    cog.preimage_subspace(f, w))
    if lhs != rhs:
        return (f"preimage of wedge has dim {lhs.dim}, wedge of preimages "
                f"{rhs.dim} ({f.source.dim} -> {f.target.dim})")
    return None


def _law_wedge_restricts(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    d = rgen.rand_subcoalgebra(rng, c)
    v1 = rgen.rand_subspace(rng, field, c.dim)
    v2 = rgen.rand_subspace(rng, field, c.dim)
    lhs = intersect(cog.wedge(c, v1, v2), d)
    if d.dim == 0:
        return None if lhs.dim == 0 else "intersection with the zero subcoalgebra"
    sub, _ = cog.restrict_to_subcoalgebra(c, d)
    v1d = cog.restrict_subspace_coords(d, intersect(v1, d))
    v2d = cog.restrict_subspace_coords(d, intersect(v2, d))
    rhs = cog.wedge(sub, v1d, v2d)
    if cog.restrict_subspace_coords(d, lhs) != rhs:
        return f"restriction mismatch on a subcoalgebra of dim {d.dim} in {c.dim}"
    return None


def _law_wedge_grouplike_union(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim, with_points=True)
    v1 = rgen.rand_subspace(rng, field, c.dim)
    v2 = rgen.rand_subspace(rng, field, c.dim)
    w = cog.wedge(c, v1, v2)
    pts = cog.grouplikes(c)
    in_wedge = {g for g in pts if w.contains(g)}
    in_parts = {g for g in pts if v1.contains(g)} | {g for g in pts if v2.contains(g)}
    if in_wedge != in_parts:
        return (f"{len(in_wedge)} grouplikes in the wedge vs {len(in_parts)} "
                f"in the union (dim {c.dim})")
    return None


def _law_wedge_direct_sum(rng, field, max_dim):
    d1 = rng.randint(1, max(1, max_dim - 1))
    c1 = rgen.rand_coalgebra(rng, field, d1)
    c2 = rgen.rand_coalgebra(rng, field, max(1, max_dim - c1.dim))
    c = cog.direct_sum(c1, c2)
    v1 = rgen.rand_subspace(rng, field, c1.dim)
    v2 = rgen.rand_subspace(rng, field, c2.dim)
    w1 = rgen.rand_subspace(rng, field, c1.dim)
    w2 = rgen.rand_subspace(rng, field, c2.dim)
    big_v = subspace_sum(cog.embed_summand(c, v1, 0), cog.embed_summand(c, v2, c1.dim))
    big_w = subspace_sum(cog.embed_summand(c, w1, 0), cog.embed_summand(c, w2, c1.dim))
    lhs = cog.wedge(c, big_v, big_w)
    rhs = subspace_sum(cog.embed_summand(c, cog.wedge(c1, v1, w1), 0),
                       cog.embed_summand(c, cog.wedge(c2, v2, w2), c1.dim))
    if lhs != rhs:
        return f"direct-sum wedge mismatch: {lhs.dim} vs {rhs.dim}"
    return None


def _law_wedge_image_containment(rng, field, max_dim):
    f = rgen.rand_coalgebra_morphism(rng, field, max_dim)
    v = rgen.rand_subspace(rng, field, f.source.dim)
    w = rgen.rand_subspace(rng, field, f.source.dim)
    img = cog.image_subspace(f, cog.wedge(f.source, v, w))
    bound = cog.wedge(f.target, cog.image_subspace(f, v), cog.image_subspace(f, w))
    if not bound.contains_subspace(img):
        return f"image of the wedge (dim {img.dim}) escapes the bound (dim {bound.dim})"
    return None


def _law_dagger_meet(rng, field, max_dim):
    phi = rgen.rand_algebra_morphism(rng, field, max_dim)
    f = cog.dual_of_algebra_morphism(phi)
    d1 = rgen.rand_algebraic_subcoalgebra(rng, phi.source)
    d2 = rgen.rand_algebraic_subcoalgebra(rng, phi.source)
    meet = cog.subcoalgebra_intersection_check(f.target, d1, d2)
    lhs = cog.pullback_dagger(f, meet)
    rhs = intersect(cog.pullback_dagger(f, d1), cog.pullback_dagger(f, d2))
    if lhs != rhs:
        return f"pullback of meet has dim {lhs.dim}, meet of pullbacks {rhs.dim}"
    return None


def _law_wedge_closes_subcoalgebras(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    d1 = rgen.rand_subcoalgebra(rng, c)
    d2 = rgen.rand_subcoalgebra(rng, c)
    w = cog.wedge(c, d1, d2)
    if not cog.is_subcoalgebra(c, w):
        return f"wedge of subcoalgebras (dims {d1.dim}, {d2.dim}) is not one"
    return None


def _law_oracle_agreement(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    v = rgen.rand_subspace(rng, field, c.dim)
    w = rgen.rand_subspace(rng, field, c.dim)
    if cog.wedge_via_comult(c, v, w) != cog.wedge_via_dual_product(c, v, w):
        return "wedge routes disagree"
    u = rgen.rand_subspace(rng, field, c.dim)
    if (cog.largest_subcoalgebra_via_ideal(c, u)
            != cog.largest_subcoalgebra_via_fixpoint(c, u)):
        return "largest-subcoalgebra routes disagree"
    phi = rgen.rand_algebra_morphism(rng, field, max_dim)
    f = cog.dual_of_algebra_morphism(phi)
    d = rgen.rand_algebraic_subcoalgebra(rng, phi.source)
    ideal = orthogonal(d)
    via_pb = cog.pullback_dagger(f, d)
    pushed = alg.image_of_subspace(phi, ideal)
    via_ideal = orthogonal(alg.ideal_generated(phi.target, pushed, alg.TWO_SIDED))
    if via_pb != via_ideal:
        return "pullback routes disagree"
    return None


def _law_quantale(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    k = rng.randint(2, 3)
    ss = [rgen.rand_subspace(rng, field, a.dim) for _ in range(k)]
    lhs = intersect_all([rg.vanishing_space(a, s) for s in ss])
    total = ss[0]
    for s in ss[1:]:
        total = subspace_sum(total, s)
    if lhs != rg.vanishing_space(a, total):
        return "meet of vanishing spaces differs from the vanishing of the sum"
    c = cog.dual_coalgebra(a)
    s1, s2 = ss[0], ss[1]
    lhs2 = cog.wedge(c, rg.vanishing_space(a, s1), rg.vanishing_space(a, s2))
    rhs2 = rg.vanishing_space(a, alg.subspace_product(a, s1, s2))
    if lhs2 != rhs2:
        return "wedge of vanishing spaces differs from the vanishing of the product"
    return None


def _law_galois(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    s = rgen.rand_subspace(rng, field, a.dim)
    if orthogonal(rg.vanishing_space(a, s)) != s:
        return "double annihilator failed to recover a subspace"
    t = rgen.rand_algebraic_subcoalgebra(rng, a)
    if rg.vanishing_space(a, orthogonal(t)) != t:
        return "vanishing of the annihilator failed to recover a vanishing space"
    return None


def _law_nullstellensatz(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    if rng.random() < 0.25:
        ideal = Subspace.full(field, a.dim)
    else:
        ideal = rgen.rand_ideal(rng, a, alg.LEFT)
    if orthogonal(ideal).dim == 0 and ideal.dim != a.dim:
        return "a proper left ideal has empty vanishing space"
    return None


def _law_sections_closure(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim, commutative=True)
    rc = rg.RingedCoalgebraView.of(a)
    c = rgen.rand_subcoalgebra(rng, rc.coalg)
    if c.dim == 0:
        return None
    sub, _ = cog.restrict_to_subcoalgebra(rc.coalg, c)
    dual_on_c = cog.dual_algebra(sub)
    a_c = rg.evaluation_map(rc, c)
    samples = [a_c.apply(rgen.rand_vector(rng, field, a.dim, 2)),
               rgen.rand_vector(rng, field, c.dim, 2),
               rgen.rand_vector(rng, field, c.dim, 2)]
    accepted = [x for x in samples if rg.section_membership(rc, c, x)]
    for x in accepted:
        for y in accepted:
            s = tuple(field.normalize(p + q) for p, q in zip(x, y))
            if not rg.section_membership(rc, c, s):
                return f"accepted elements have a rejected sum (base dim {c.dim})"
            p = dual_on_c.multiply(x, y)
            if not rg.section_membership(rc, c, p):
                return f"accepted elements have a rejected product (base dim {c.dim})"
    return None


def _law_counterexample(rng, field, max_dim):
    rep = pd.counterexample(field)
    if not rep.strict_inequality:
        return "the strict inequality collapsed"
    if rep.dim_wedge_of_pullbacks != 0 or rep.dim_pullback_of_wedge != 4:
        return "unexpected dimensions in the counterexample"
    return None


def _embed_module_subspace(field, s: Subspace, offset: int, total: int) -> Subspace:
    rows = []
    for r in s.basis:
        row = [field.zero] * total
        for t, x in enumerate(r):
            row[offset + t] = x
        rows.append(row)
    return Subspace.span(field, total, rows)


def _law_cotensor_direct_sum(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    n1 = rgen.rand_comodule(rng, c, 1)
    n2 = rgen.rand_comodule(rng, c, 1)
    d = rgen.rand_subcoalgebra(rng, c)
    total = com.direct_sum(n1, n2)
    lhs = com.cotensor(d, total)
    rhs = subspace_sum(
        _embed_module_subspace(field, com.cotensor(d, n1), 0, total.dim),
        _embed_module_subspace(field, com.cotensor(d, n2), n1.dim, total.dim))
    if lhs != rhs:
        return f"cotensor of a direct sum: {lhs.dim} vs {rhs.dim}"
    return None


def _law_cotensor_monotone(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    n = rgen.rand_comodule(rng, c, 2)
    d = rgen.rand_subcoalgebra(rng, c)
    bigger = cog.sum_subcoalgebras(c, d, rgen.rand_subcoalgebra(rng, c))
    small = com.cotensor(d, n)
    large = com.cotensor(bigger, n)
    if not large.contains_subspace(small):
        return f"cotensor not monotone: dims {small.dim} vs {large.dim}"
    return None


def _law_dualmodule_roundtrip(rng, field, max_dim):
    c = rgen.rand_coalgebra(rng, field, max_dim)
    n = rgen.rand_comodule(rng, c, 2)
    back = com.module_to_comodule(cog.dual_algebra(c), com.dual_module(n))
    if back != n:
        return "roundtrip changed the comodule"
    return None


def _law_block_decomposition(rng, field, max_dim):
    d1 = rng.randint(1, max(1, max_dim - 1))
    a1 = rgen.rand_algebra(rng, field, d1)
    a2 = rgen.rand_algebra(rng, field, max(1, max_dim - a1.dim))
    a = alg.direct_product(a1, a2)
    mwe = rgen.rand_module(rng, a, 1)
    m = com.module_to_comodule(a, mwe.module)
    e1 = tuple(a1.unit) + (field.zero,) * a2.dim
    e2 = (field.zero,) * a1.dim + tuple(a2.unit)
    idems = [e1, e2] if rng.random() < 0.8 else [a.unit]
    pieces = com.block_decompose(m, idems)
    if sum(p.dim for p, _ in pieces) != m.dim:
        return "block dimensions do not add up"
    cols = []
    for piece, incl in pieces:
        for j in range(piece.dim):
            cols.append(incl.column(j))
    if not cols:
        return None
    reassembled = Matrix(field, len(cols), tuple(zip(*cols)))
    summed = pieces[0][0]
    for piece, _ in pieces[1:]:
        summed = com.direct_sum(summed, piece)
    lhs = m.rho_matrix().mul(reassembled)
    rhs = tensor_map(Matrix.identity(field, m.over.dim), reassembled).mul(
        summed.rho_matrix())
    if lhs != rhs:
        return "reassembly is not a comodule isomorphism"
    return None


def _law_findual_inclusion_eval(rng, field, max_dim):
    f = rgen.rand_monic_poly(rng, field, 1, 3)
    h = rgen.rand_monic_poly(rng, field, 1, 2)
    g = f.mul(h)
    phi = pd.FinDualElement.make(f, rgen.rand_vector(rng, field, f.degree, 3))
    psi = pd.include(phi, g)
    for _ in range(3):
        deg = rng.randint(0, 6)
        p = pd.Poly.make(field, [rgen.rand_scalar(rng, field, 3)
                                 for _ in range(deg + 1)])
        if phi.evaluate(p) != psi.evaluate(p):
            return f"inclusion changed an evaluation at degree {p.degree}"
    if phi != psi:
        return "inclusion changed the functional"
    return None


def _law_findual_inclusion_functorial(rng, field, max_dim):
    f = rgen.rand_monic_poly(rng, field, 1, 2)
    g = f.mul(rgen.rand_monic_poly(rng, field, 1, 2))
    h = g.mul(rgen.rand_monic_poly(rng, field, 1, 2))
    phi = pd.FinDualElement.make(f, rgen.rand_vector(rng, field, f.degree, 3))
    two_step = pd.include(pd.include(phi, g), h)
    one_step = pd.include(phi, h)
    if two_step.functional != one_step.functional:
        return "inclusion is not functorial along the divisibility chain"
    return None


def _law_findual_wedge(rng, field, max_dim):
    f = rgen.rand_monic_poly(rng, field, 1, 4)
    if rng.random() < 0.1:
        g = pd.Poly.make(field, [field.one])
    else:
        g = rgen.rand_monic_poly(rng, field, 1, 4)
    rep = pd.wedge_law(f, g)
    if not rep.holds:
        return rep.as_text()
    return None


def _law_findual_residual(rng, field, max_dim):
    deg = rng.randint(0, 6)
    coeffs = [rgen.rand_scalar(rng, field, 3) for _ in range(deg + 1)]
    p = pd.Poly.make(field, coeffs)
    if p.is_zero():
        p = pd.Poly.make(field, [field.one])
    modulus = pd.Poly.make(field, [field.zero] * (p.degree + 1) + [field.one])
    idx = next(i for i, cc in enumerate(p.coeffs) if cc != field.zero)
    functional = [field.one if t == idx else field.zero
                  for t in range(modulus.degree)]
    phi = pd.FinDualElement.make(modulus, functional)
    if phi.evaluate(p) == field.zero:
        return f"witness functional vanished on {p.fmt()}"
    return None


def _nested_algebraic_pair(rng, a):
    """Two nested nonzero algebraic subcoalgebras C1 <= C2."""
    for _ in range(6):
        i2 = rgen.rand_proper_ideal(rng, a)
        extra = Subspace.span(a.field, a.dim,
                              [rgen.rand_vector(rng, a.field, a.dim, 2)])
        i1 = alg.ideal_generated(a, subspace_sum(i2, extra), alg.TWO_SIDED)
        c2 = orthogonal(i2)
        c1 = orthogonal(i1)
        if c1.dim > 0 and c2.dim > 0:
            return c1, c2
    full = Subspace.full(a.field, a.dim)
    return full, full


def _law_rcmodule_action_square(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    rc = rg.RingedCoalgebraView.of(a)
    v = rcm.RCModuleView.of(rc, rgen.rand_module(rng, a, 2).module)
    c1, c2 = _nested_algebraic_pair(rng, a)
    rmat, _, s2 = rg.section_restriction(rc, c1, c2)
    m1, _ = rcm.module_section_on_algebraic(v, c1)
    m2, _ = rcm.module_section_on_algebraic(v, c2)
    lam = rcm.module_restriction(v, c1, c2)
    for r in range(s2.algebra.dim):
        u = tuple(field.one if t == r else field.zero
                  for t in range(s2.algebra.dim))
        if lam.mul(m2.action_matrix(u)) != m1.action_matrix(rmat.apply(u)).mul(lam):
            return f"action square fails at section basis {r}"
    return None


def _law_rcmodule_cotensor(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    rc = rg.RingedCoalgebraView.of(a)
    v = rcm.RCModuleView.of(rc, rgen.rand_module(rng, a, 2).module)
    c = rgen.rand_algebraic_subcoalgebra(rng, a)
    lhs = com.cotensor(c, v.comodule)
    rhs = orthogonal(rcm.ideal_times_module(v.module, orthogonal(c)))
    if lhs != rhs:
        return f"cotensor (dim {lhs.dim}) differs from the annihilator (dim {rhs.dim})"
    return None


def _law_rcmodule_global_sections(rng, field, max_dim):
    a = rgen.rand_algebra(rng, field, max_dim)
    rc = rg.RingedCoalgebraView.of(a)
    mwe = rgen.rand_module(rng, a, 2)
    v = rcm.RCModuleView.of(rc, mwe.module)
    f = mwe.endos[rng.randrange(len(mwe.endos))]
    problems = rcm.gamma_roundtrip(v, v, f)
    if problems:
        return problems[0]
    return None


_RUNNERS = {
    "wedge.associative": _law_wedge_associative,
    "wedge.meet-distributive": _law_wedge_meet_distributive,
    "wedge.preimage-compatible": _law_wedge_preimage,
    "wedge.restricts-to-subcoalgebras": _law_wedge_restricts,
    "wedge.grouplike-union": _law_wedge_grouplike_union,
    "wedge.direct-sum": _law_wedge_direct_sum,
    "wedge.image-containment": _law_wedge_image_containment,
    "dagger.meet-compatible": _law_dagger_meet,
    "wedge.closes-subcoalgebras": _law_wedge_closes_subcoalgebras,
    "oracle.two-route-agreement": _law_oracle_agreement,
    "vanishing.quantale-laws": _law_quantale,
    "vanishing.galois-bijection": _law_galois,
    "vanishing.zero-forces-unit-ideal": _law_nullstellensatz,
    "sections.commutative-closure": _law_sections_closure,
    "dagger.wedge-strict-counterexample": _law_counterexample,
    "cotensor.direct-sum": _law_cotensor_direct_sum,
    "cotensor.monotone": _law_cotensor_monotone,
    "dualmodule.roundtrip": _law_dualmodule_roundtrip,
    "comodule.block-decomposition": _law_block_decomposition,
    "findual.inclusion-evaluation": _law_findual_inclusion_eval,
    "findual.inclusion-functorial": _law_findual_inclusion_functorial,
    "findual.wedge-law": _law_findual_wedge,
    "findual.residual-witness": _law_findual_residual,
    "rcmodule.action-square": _law_rcmodule_action_square,
    "rcmodule.cotensor-annihilator": _law_rcmodule_cotensor,
    "rcmodule.global-sections-identity": _law_rcmodule_global_sections,
}

assert set(_RUNNERS) == set(LAWS)


# ---------------------------------------------------------------------------
# suite runner and report


@dataclass
class LawResult:
    law_id: str
    statement: str
    field_tag: str
    passes: int
    fails: int
    first_counterwitness: dict | None


@dataclass
class SuiteConfig:
    seed: int = 0
    cases: int = 200
    max_dim: int = 6
    field_tags: tuple = ("q", "fp:7")
    laws: tuple = tuple(sorted(LAWS))


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: int
    max_dim: int
    field_tags: tuple
    results: list
    wall_time: float

    @property
    def total_fails(self) -> int:
        return sum(r.fails for r in self.results)


def case_seed(seed: int, law_id: str, field_tag: str, index: int) -> str:
    return f"{seed}:{law_id}:{field_tag}:{index}"


def run_case(law_id: str, field: Field, seed_str: str, max_dim: int):
    rng = random.Random(seed_str)
    return _RUNNERS[law_id](rng, field, max_dim)


def run_suite(config: SuiteConfig) -> VerificationReport:
    t0 = time.perf_counter()
    results = []
    for law_id in config.laws:
        if law_id not in LAWS:
            raise KeyError(f"unknown law id {law_id!r}")
        for tag in config.field_tags:
            field = field_from_tag(tag)
            passes = 0
            fails = 0
            witness = None
            for i in range(config.cases):
                key = case_seed(config.seed, law_id, tag, i)
                try:
                    detail = run_case(law_id, field, key, config.max_dim)
                except Exception as exc:  # a raising case is a failing case
                    detail = f"exception: {exc}"
                if detail is None:
                    passes += 1
                else:
                    fails += 1
                    if witness is None:
                        witness = {"case": i, "case_seed": key, "detail": detail}
            results.append(LawResult(law_id, LAWS[law_id], tag, passes, fails, witness))
    results.sort(key=lambda r: (r.law_id, r.field_tag))
    return VerificationReport(
        suite="coalg-laws", seed=config.seed, cases=config.cases,
        max_dim=config.max_dim, field_tags=tuple(config.field_tags),
        results=results, wall_time=time.perf_counter() - t0)


def report_to_structured(report: VerificationReport) -> str:
    """Canonical machine-readable form; no timing data, so identical
    flags and seed give identical bytes."""
    payload = {
        "suite": report.suite,
        "seed": report.seed,
        "cases": report.cases,
        "max_dim": report.max_dim,
        "fields": list(report.field_tags),
        "results": [
            {
                "law": r.law_id,
                "statement": r.statement,
                "field": r.field_tag,
                "passes": r.passes,
                "fails": r.fails,
                "first_counterwitness": r.first_counterwitness,
            }
            for r in report.results
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def report_to_text(report: VerificationReport) -> str:
    lines = [
        f"suite {report.suite}: seed={report.seed} cases={report.cases} "
        f"max-dim={report.max_dim} fields={','.join(report.field_tags)}",
    ]
    for r in report.results:
        status = "ok" if r.fails == 0 else "FAIL"
        lines.append(f"  [{status}] {r.law_id} ({r.field_tag}): "
                     f"{r.passes} passed, {r.fails} failed")
        if r.first_counterwitness is not None:
            w = r.first_counterwitness
            lines.append(f"         witness: case {w['case']} "
                         f"(seed {w['case_seed']}): {w['detail']}")
    lines.append(f"total failures: {report.total_fails} "
                 f"(wall time {report.wall_time:.2f}s)")
    return "\n".join(lines) + "\n"
