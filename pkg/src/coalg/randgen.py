"""Seeded random instances for the verification suite and the tests.

Random comultiplications almost never satisfy coassociativity, so random
coalgebras are built as duals of randomly constructed associative
algebras (and direct sums of those, plus set coalgebras), which are
valid by construction.  Everything is deterministic in the passed
``random.Random``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import algebra as alg
from . import coalgebra as cog
from .comodule import Comodule, LeftModule, module_to_comodule
from .fields import Field
from .linalg import Matrix, Subspace, orthogonal, quotient_with_lift


@dataclass
class GenConfig:
    max_dim: int = 6
    max_span_vectors: int = 3
    scalar_bound: int = 3


def rand_scalar(rng: random.Random, field: Field, bound: int = 3):
    if field.char == 0:
        return Fraction(rng.randint(-bound, bound))
    return rng.randrange(field.char)


def rand_vector(rng: random.Random, field: Field, n: int, bound: int = 3) -> tuple:
    return tuple(rand_scalar(rng, field, bound) for _ in range(n))


def rand_subspace(rng: random.Random, field: Field, n: int,
                  max_vectors: int | None = None) -> Subspace:
    if max_vectors is None:
        max_vectors = n
    k = rng.randint(0, max(0, max_vectors))
    rows = [rand_vector(rng, field, n) for _ in range(k)]
    return Subspace.span(field, n, rows)


def rand_monic_poly(rng: random.Random, field: Field, min_deg: int, max_deg: int):
    from .polydual import Poly
    d = rng.randint(min_deg, max_deg)
    coeffs = [rand_scalar(rng, field, 2) for _ in range(d)] + [field.one]
    return Poly.make(field, coeffs)


# ---------------------------------------------------------------------------
# algebras


def rand_algebra(rng: random.Random, field: Field, max_dim: int,
                 commutative: bool = False) -> alg.StructureConstantAlgebra:
    """A random small associative algebra from the constructor pool."""
    max_dim = max(1, max_dim)
    choices = ["trunc", "quotpoly", "cyclic"]
    if not commutative:
        if max_dim >= 4:
            choices.append("matrix")
        if max_dim >= 3:
            choices.append("uppertri")
    if max_dim >= 2:
        choices.append("product")
        choices.append("quotient")
    kind = rng.choice(choices)
    if kind == "trunc":
        return alg.truncated_poly(field, rng.randint(1, max_dim))
    if kind == "quotpoly":
        p = rand_monic_poly(rng, field, 1, max_dim)
        return alg.quotient_polynomial(field, p.coeffs)
    if kind == "cyclic":
        n = rng.randint(1, max_dim)
        return alg.group_algebra(field, alg.cyclic_group_table(n))
    if kind == "matrix":
        return alg.matrix_algebra(field, 2)
    if kind == "uppertri":
        return alg.upper_triangular(field, 2)
    if kind == "product":
        d1 = rng.randint(1, max_dim - 1)
        a = rand_algebra(rng, field, d1, commutative)
        b = rand_algebra(rng, field, max_dim - a.dim, commutative)
        return alg.direct_product(a, b)
    # kind == "quotient": a random proper quotient of a pool algebra
    base = rand_algebra(rng, field, max_dim, commutative)
    ideal = rand_proper_ideal(rng, base)
    if ideal.dim == 0:
        return base
    quot, _ = alg.quotient_algebra(base, ideal)
    return quot


def rand_ideal(rng: random.Random, a: alg.StructureConstantAlgebra,
               side: str = alg.TWO_SIDED, generators: int = 1) -> Subspace:
    rows = [rand_vector(rng, field=a.field, n=a.dim, bound=2) for _ in range(generators)]
    return alg.ideal_generated(a, Subspace.span(a.field, a.dim, rows), side)


def rand_proper_ideal(rng: random.Random, a: alg.StructureConstantAlgebra,
                      attempts: int = 4) -> Subspace:
    """A two-sided ideal strictly below the whole algebra (possibly zero)."""
    for _ in range(attempts):
        ideal = rand_ideal(rng, a)
        if ideal.dim < a.dim:
            return ideal
    return Subspace.zero(a.field, a.dim)


def rand_algebra_morphism(rng: random.Random, field: Field,
                          max_dim: int) -> alg.AlgebraMorphism:
    kind = rng.choice(["identity", "quotient", "projection", "diagonal",
                       "evaluation", "unit"])
    if kind == "identity":
        return alg.identity_morphism(rand_algebra(rng, field, max_dim))
    if kind == "quotient":
        a = rand_algebra(rng, field, max_dim)
        ideal = rand_proper_ideal(rng, a)
        _, proj = alg.quotient_algebra(a, ideal)
        return proj
    if kind == "projection":
        d1 = rng.randint(1, max(1, max_dim - 1))
        a = rand_algebra(rng, field, d1)
        b = rand_algebra(rng, field, max(1, max_dim - a.dim))
        prod = alg.direct_product(a, b)
        rows = [tuple(field.one if t == i else field.zero for t in range(prod.dim))
                for i in range(a.dim)]
        return alg.AlgebraMorphism(prod, a, Matrix(field, prod.dim, tuple(rows)))
    if kind == "diagonal":
        a = rand_algebra(rng, field, max(1, max_dim // 2))
        prod = alg.direct_product(a, a)
        ident = Matrix.identity(field, a.dim)
        return alg.AlgebraMorphism(a, prod, Matrix(field, a.dim,
                                                   ident.rows + ident.rows))
    if kind == "evaluation":
        from .polydual import hom_to
        b = rand_algebra(rng, field, max_dim)
        for _ in range(4):
            v = rand_vector(rng, field, b.dim, 1)
            q, phi = hom_to(b, v)
            if q.degree <= max_dim:
                return phi
        return alg.identity_morphism(b)
    # kind == "unit": the structure map k -> B
    b = rand_algebra(rng, field, max_dim)
    k_alg = alg.truncated_poly(field, 1)
    rows = tuple((x,) for x in b.unit)
    return alg.AlgebraMorphism(k_alg, b, Matrix(field, 1, rows))


# ---------------------------------------------------------------------------
# coalgebras


def rand_coalgebra(rng: random.Random, field: Field, max_dim: int,
                   with_points: bool = False) -> cog.StructureConstantCoalgebra:
    kind = rng.choice(["dual", "dual", "sum", "points"] if not with_points
                      else ["points", "sum", "pointsum"])
    if kind == "dual":
        return cog.dual_coalgebra(rand_algebra(rng, field, max_dim))
    if kind == "points":
        return cog.set_coalgebra(field, rng.randint(1, max_dim))
    if kind == "pointsum":
        n = rng.randint(1, max(1, max_dim - 1))
        rest = cog.dual_coalgebra(rand_algebra(rng, field, max_dim - n))
        return cog.direct_sum(cog.set_coalgebra(field, n), rest)
    d1 = rng.randint(1, max(1, max_dim - 1))
    c1 = cog.dual_coalgebra(rand_algebra(rng, field, d1))
    if with_points:
        c2 = cog.set_coalgebra(field, max(1, max_dim - c1.dim))
    else:
        c2 = cog.dual_coalgebra(rand_algebra(rng, field, max(1, max_dim - c1.dim)))
    return cog.direct_sum(c1, c2)


def rand_subcoalgebra(rng: random.Random,
                      c: cog.StructureConstantCoalgebra) -> Subspace:
    kind = rng.choice(["zero", "full", "vanishing", "largest", "sum"])
    if kind == "zero":
        return Subspace.zero(c.field, c.dim)
    if kind == "full":
        return Subspace.full(c.field, c.dim)
    b = cog.dual_algebra(c)
    if kind == "vanishing":
        return orthogonal(rand_ideal(rng, b))
    if kind == "largest":
        return cog.largest_subcoalgebra_in(c, rand_subspace(rng, c.field, c.dim))
    d1 = orthogonal(rand_ideal(rng, b))
    d2 = orthogonal(rand_ideal(rng, b))
    return cog.sum_subcoalgebras(c, d1, d2)


def rand_algebraic_subcoalgebra(rng: random.Random, b: alg.StructureConstantAlgebra,
                                nonzero: bool = False, attempts: int = 5) -> Subspace:
    """Z(I) inside the dual coordinates of b, for a random two-sided ideal."""
    for _ in range(attempts):
        d = orthogonal(rand_ideal(rng, b))
        if not nonzero or d.dim > 0:
            return d
    return Subspace.full(b.field, b.dim)


def rand_coalgebra_morphism(rng: random.Random, field: Field,
                            max_dim: int) -> cog.CoalgebraMorphism:
    kind = rng.choice(["dual", "dual", "setmap", "identity"])
    if kind == "dual":
        return cog.dual_of_algebra_morphism(rand_algebra_morphism(rng, field, max_dim))
    if kind == "setmap":
        n = rng.randint(1, max_dim)
        m = rng.randint(1, max_dim)
        src = cog.set_coalgebra(field, n)
        tgt = cog.set_coalgebra(field, m)
        cols = [rng.randrange(m) for _ in range(n)]
        rows = tuple(tuple(field.one if cols[j] == i else field.zero
                           for j in range(n)) for i in range(m))
        return cog.CoalgebraMorphism(src, tgt, Matrix(field, n, rows))
    return cog.identity_morphism(rand_coalgebra(rng, field, max_dim))


# ---------------------------------------------------------------------------
# modules and comodules


def quotient_module(a: alg.StructureConstantAlgebra, ideal: Subspace) -> LeftModule:
    """The left module A/I for a two-sided ideal I."""
    proj, lift = quotient_with_lift(ideal)
    actions = []
    for i in range(a.dim):
        act = a.left_mult_matrix(a.basis_vector(i))
        actions.append(proj.mul(act).mul(lift))
    return LeftModule(a, a.dim - ideal.dim, tuple(actions))


def direct_sum_modules(m1: LeftModule, m2: LeftModule) -> LeftModule:
    a = m1.algebra
    field = a.field
    dim = m1.dim + m2.dim
    actions = []
    for i in range(a.dim):
        g1, g2 = m1.actions[i], m2.actions[i]
        rows = []
        for r in range(m1.dim):
            rows.append(tuple(g1.rows[r]) + (field.zero,) * m2.dim)
        for r in range(m2.dim):
            rows.append((field.zero,) * m1.dim + tuple(g2.rows[r]))
        actions.append(Matrix(field, dim, tuple(rows)))
    return LeftModule(a, dim, tuple(actions))


@dataclass
class ModuleWithEndos:
    """A module plus a supply of valid endomorphisms (right multiplications
    descend to quotients of the regular module by two-sided ideals)."""

    module: LeftModule
    endos: list = dc_field(default_factory=list)


def rand_module(rng: random.Random, a: alg.StructureConstantAlgebra,
                max_pieces: int = 2) -> ModuleWithEndos:
    pieces = []
    for _ in range(rng.randint(1, max_pieces)):
        if rng.random() < 0.5:
            ideal = Subspace.zero(a.field, a.dim)
        else:
            ideal = rand_proper_ideal(rng, a)
        pieces.append(ideal)
    module = None
    endo_a = None
    endo_b = None
    va = rand_vector(rng, a.field, a.dim, 2)
    vb = rand_vector(rng, a.field, a.dim, 2)
    for ideal in pieces:
        proj, lift = quotient_with_lift(ideal)
        part = quotient_module(a, ideal)
        ra = proj.mul(a.right_mult_matrix(va)).mul(lift)
        rb = proj.mul(a.right_mult_matrix(vb)).mul(lift)
        if module is None:
            module, endo_a, endo_b = part, ra, rb
        else:
            endo_a = _block_diag(a.field, module.dim, endo_a, part.dim, ra)
            endo_b = _block_diag(a.field, module.dim, endo_b, part.dim, rb)
            module = direct_sum_modules(module, part)
    mwe = ModuleWithEndos(module)
    mwe.endos = [Matrix.identity(a.field, module.dim),
                 Matrix.zero(a.field, module.dim, module.dim), endo_a, endo_b]
    return mwe


def _block_diag(field, d1, m1: Matrix, d2, m2: Matrix) -> Matrix:
    rows = []
    for r in range(d1):
        rows.append(tuple(m1.rows[r]) + (field.zero,) * d2)
    for r in range(d2):
        rows.append((field.zero,) * d1 + tuple(m2.rows[r]))
    return Matrix(field, d1 + d2, tuple(rows))


def rand_comodule(rng: random.Random, c: cog.StructureConstantCoalgebra,
                  max_pieces: int = 2) -> Comodule:
    b = cog.dual_algebra(c)
    mwe = rand_module(rng, b, max_pieces)
    return module_to_comodule(b, mwe.module)
