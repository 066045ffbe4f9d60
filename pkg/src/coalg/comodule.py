"""Finite-dimensional left comodules, cotensor products, and duals.

A comodule over a coalgebra C is stored by its coaction as sparse
constants ``(x, j, b, c)``: ``rho(e_x)`` contributes ``c * e_j (x) e_b``
in C (x) M, with the shared row-major flattening.  Dualizing a comodule
gives a left module over the dual algebra and back again; at finite
dimension the roundtrip is the identity on structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import StructureConstantAlgebra
from .coalgebra import (StructureConstantCoalgebra, dual_algebra, dual_coalgebra,
                        is_subcoalgebra, restrict_to_subcoalgebra)
from .errors import (CrossCheckError, DimensionMismatchError,
                     InvalidStructureError)
from .fields import require_same_field
from .linalg import (Matrix, Subspace, image, kernel, quotient_with_lift,
                     tensor_subspace_full, vec_is_zero, vec_kron)


def _normalize_constants(field, c_dim, m_dim, triples):
    acc = {}
    for x, j, b, c in triples:
        if not (0 <= x < m_dim and 0 <= j < c_dim and 0 <= b < m_dim):
            raise DimensionMismatchError(f"coaction entry ({x},{j},{b}) out of range")
        c = field.normalize(c)
        key = (x, j, b)
        c = field.normalize(acc.get(key, field.zero) + c)
        if c == field.zero:
            acc.pop(key, None)
        else:
            acc[key] = c
    return tuple(sorted((x, j, b, c) for (x, j, b), c in acc.items()))


@dataclass(frozen=True)
class Comodule:
    over: StructureConstantCoalgebra
    dim: int
    coaction: tuple  # sorted sparse (x, j, b, c): rho(e_x) has c * e_j (x) e_b
    _by_source: dict = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        by_source = {}
        for x, j, b, c in self.coaction:
            by_source.setdefault(x, []).append((j, b, c))
        object.__setattr__(self, "_by_source", by_source)

    @staticmethod
    def make(over: StructureConstantCoalgebra, dim: int, triples) -> "Comodule":
        if dim < 0:
            raise DimensionMismatchError("negative dimension")
        return Comodule(over, dim,
                        _normalize_constants(over.field, over.dim, dim, triples))

    def rho(self, v) -> tuple:
        field = self.over.field
        out = [field.zero] * (self.over.dim * self.dim)
        for x, j, b, c in self.coaction:
            a = v[x]
            if a != field.zero:
                idx = j * self.dim + b
                out[idx] = out[idx] + a * c
        return tuple(field.normalize(t) for t in out)

    def rho_basis(self, x: int):
        return self._by_source.get(x, ())

    def rho_matrix(self) -> Matrix:
        field = self.over.field
        grid = [[field.zero] * self.dim for _ in range(self.over.dim * self.dim)]
        for x, j, b, c in self.coaction:
            grid[j * self.dim + b][x] = c
        return Matrix(field, self.dim, tuple(tuple(r) for r in grid))

    def basis_vector(self, i: int) -> tuple:
        field = self.over.field
        return tuple(field.one if t == i else field.zero for t in range(self.dim))


@dataclass(frozen=True)
class ComoduleMorphism:
    source: Comodule
    target: Comodule
    matrix: Matrix

    def __post_init__(self):
        if self.source.over != self.target.over:
            raise InvalidStructureError("comodule morphism needs one base coalgebra")
        if self.matrix.n_rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise DimensionMismatchError("morphism matrix shape mismatch")


@dataclass(frozen=True)
class LeftModule:
    """A finite-dimensional left module by action matrices, one per
    algebra basis element."""

    algebra: StructureConstantAlgebra
    dim: int
    actions: tuple  # one dim x dim Matrix per algebra basis index

    def act(self, a_vec, v):
        """Action of the algebra element with coordinates a_vec."""
        field = self.algebra.field
        out = [field.zero] * self.dim
        for i, coef in enumerate(a_vec):
            if coef == field.zero:
                continue
            img = self.actions[i].apply(v)
            for t, x in enumerate(img):
                if x != field.zero:
                    out[t] = out[t] + coef * x
        return tuple(field.normalize(t) for t in out)

    def action_matrix(self, a_vec) -> Matrix:
        field = self.algebra.field
        acc = Matrix.zero(field, self.dim, self.dim)
        for i, coef in enumerate(a_vec):
            if coef != field.zero:
                acc = acc.add(self.actions[i].scale(coef))
        return acc


def regular_module(a: StructureConstantAlgebra) -> LeftModule:
    """The algebra acting on itself by left multiplication."""
    actions = tuple(a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim))
    return LeftModule(a, a.dim, actions)


def check_module_axioms(m: LeftModule) -> list:
    report = []
    a = m.algebra
    field = a.field
    if len(m.actions) != a.dim:
        return ["one action matrix per algebra basis element is required"]
    for mat in m.actions:
        if mat.n_rows != m.dim or mat.cols != m.dim:
            return ["action matrices must be square of the module dimension"]
    if m.action_matrix(a.unit) != Matrix.identity(field, m.dim):
        report.append("the identity does not act as the identity map")
    for i in range(a.dim):
        for j in range(a.dim):
            composed = m.actions[i].mul(m.actions[j])
            via_product = m.action_matrix(a.basis_product(i, j))
            if composed != via_product:
                report.append(f"action is not multiplicative at basis pair ({i},{j})")
    return report


def check_module_morphism(m1: LeftModule, m2: LeftModule, f: Matrix) -> list:
    report = []
    if m1.algebra != m2.algebra:
        return ["module morphism needs one base algebra"]
    if f.n_rows != m2.dim or f.cols != m1.dim:
        return ["morphism matrix shape mismatch"]
    for i in range(m1.algebra.dim):
        if f.mul(m1.actions[i]) != m2.actions[i].mul(f):
            report.append(f"does not intertwine the action of basis element {i}")
    return report


# ---------------------------------------------------------------------------
# axioms and morphism checks


def check_axioms(m: Comodule) -> list:
    """Coaction coassociativity-compatibility and the counit law."""
    report = []
    c = m.over
    field = c.field
    for x in range(m.dim):
        left = {}
        right = {}
        for j, b, cc in m.rho_basis(x):
            for a2, b2, dd in c.delta_basis(j):
                key = (a2, b2, b)
                left[key] = field.normalize(left.get(key, field.zero) + cc * dd)
            for j2, b2, dd in m.rho_basis(b):
                key = (j, j2, b2)
                right[key] = field.normalize(right.get(key, field.zero) + cc * dd)
        keys = set(left) | set(right)
        if any(left.get(t, field.zero) != right.get(t, field.zero) for t in keys):
            report.append(f"coaction coassociativity fails at basis {x}")
        ev = [field.zero] * m.dim
        for j, b, cc in m.rho_basis(x):
            ev[b] = field.normalize(ev[b] + cc * c.counit[j])
        expected = [field.one if t == x else field.zero for t in range(m.dim)]
        if ev != expected:
            report.append(f"counit law fails at basis {x}")
    return report


def check_morphism(f: ComoduleMorphism) -> list:
    report = []
    src, tgt = f.source, f.target
    c = src.over
    field = c.field
    cols = [f.matrix.column(i) for i in range(src.dim)]
    for x in range(src.dim):
        lhs = tgt.rho(cols[x])
        rhs = [field.zero] * (c.dim * tgt.dim)
        for j, b, cc in src.rho_basis(x):
            col = cols[b]
            for t, val in enumerate(col):
                if val != field.zero:
                    idx = j * tgt.dim + t
                    rhs[idx] = field.normalize(rhs[idx] + cc * val)
        if list(lhs) != rhs:
            report.append(f"coaction compatibility fails at basis {x}")
    return report


def regular_comodule(c: StructureConstantCoalgebra) -> Comodule:
    """C as a left comodule over itself via the comultiplication."""
    return Comodule.make(c, c.dim, c.comult)


# ---------------------------------------------------------------------------
# cotensor products


def cotensor(d: Subspace, m: Comodule) -> Subspace:
    """{x in M : rho(x) in D (x) M} for a subcoalgebra D."""
    c = m.over
    if not is_subcoalgebra(c, d):
        raise InvalidStructureError("cotensor factor is not a subcoalgebra")
    dm = tensor_subspace_full(d, m.dim)
    proj, _ = quotient_with_lift(dm)
    return kernel(proj.mul(m.rho_matrix()))


def cotensor_comodule(d: Subspace, m: Comodule):
    """The D-comodule structure induced on the cotensor product.

    Returns (comodule over the restricted coalgebra, inclusion matrix
    from cotensor coordinates into M).
    """
    c = m.over
    sub, _ = restrict_to_subcoalgebra(c, d)
    n_space = cotensor(d, m)
    field = c.field
    g = n_space.dim
    triples = []
    for r, row in enumerate(n_space.basis):
        w = list(m.rho(row))
        # coefficients read off at pivot pairs of (d basis) x (cotensor basis)
        for s in range(d.dim):
            ps = d.pivots[s]
            for t in range(g):
                pt = n_space.pivots[t]
                cc = w[ps * m.dim + pt]
                if cc != field.zero:
                    triples.append((r, s, t, cc))
                    piece = vec_kron(field, d.basis[s], n_space.basis[t])
                    for idx, x in enumerate(piece):
                        if x != field.zero:
                            w[idx] = field.normalize(w[idx] - cc * x)
        if not vec_is_zero(field, tuple(w)):
            raise CrossCheckError("coaction did not restrict to the cotensor product")
    incl = (Matrix(field, g, tuple(zip(*n_space.basis))) if g
            else Matrix(field, 0, tuple(() for _ in range(m.dim))))
    return Comodule.make(sub, g, triples), incl


# ---------------------------------------------------------------------------
# duality with modules


def dual_module(m: Comodule) -> LeftModule:
    """The dual space as a left module over the dual algebra."""
    b = dual_algebra(m.over)
    field = b.field
    grids = [[[field.zero] * m.dim for _ in range(m.dim)] for _ in range(b.dim)]
    for x, j, bb, c in m.coaction:
        grids[j][x][bb] = field.normalize(grids[j][x][bb] + c)
    actions = tuple(Matrix(field, m.dim, tuple(tuple(r) for r in g)) for g in grids)
    return LeftModule(b, m.dim, actions)


def module_to_comodule(a: StructureConstantAlgebra, m: LeftModule) -> Comodule:
    """The dual space of a left A-module as a comodule over the dual
    coalgebra of A; inverse to :func:`dual_module` on canonical forms."""
    if m.algebra != a:
        raise InvalidStructureError("module is not over the given algebra")
    report = check_module_axioms(m)
    if report:
        raise InvalidStructureError("; ".join(report))
    c = dual_coalgebra(a)
    field = a.field
    triples = []
    for i, mat in enumerate(m.actions):
        for x in range(m.dim):
            row = mat.rows[x]
            for bb, cc in enumerate(row):
                if cc != field.zero:
                    triples.append((x, i, bb, cc))
    return Comodule.make(c, m.dim, triples)


# ---------------------------------------------------------------------------
# direct sums and idempotent decompositions


def direct_sum(m1: Comodule, m2: Comodule) -> Comodule:
    if m1.over != m2.over:
        raise InvalidStructureError("direct sum needs one base coalgebra")
    dim = m1.dim + m2.dim
    triples = [(x, j, b, c) for x, j, b, c in m1.coaction]
    triples.extend((x + m1.dim, j, b + m1.dim, c) for x, j, b, c in m2.coaction)
    return Comodule.make(m1.over, dim, triples)


def summand_inclusion(m1: Comodule, m2: Comodule, which: int) -> Matrix:
    field = m1.over.field
    total = m1.dim + m2.dim
    off = 0 if which == 0 else m1.dim
    d = m1.dim if which == 0 else m2.dim
    rows = []
    for t in range(total):
        row = [field.zero] * d
        if off <= t < off + d:
            row[t - off] = field.one
        rows.append(tuple(row))
    return Matrix(field, d, tuple(rows))


def _pairing_action(m: Comodule, u) -> Matrix:
    """The operator (u (x) id) . rho for a functional u on the coalgebra."""
    field = m.over.field
    grid = [[field.zero] * m.dim for _ in range(m.dim)]
    for x, j, b, c in m.coaction:
        coef = u[j]
        if coef != field.zero:
            grid[b][x] = grid[b][x] + coef * c
    return Matrix(field, m.dim, tuple(tuple(field.normalize(v) for v in row)
                                      for row in grid))


def block_decompose(m: Comodule, idempotents) -> list:
    """Split a comodule along a complete orthogonal central idempotent
    family of the dual algebra.

    Returns a list of (comodule piece, inclusion matrix into M); the sum
    of the pieces reassembles M exactly.
    """
    b = dual_algebra(m.over)
    field = b.field
    idems = [tuple(field.normalize(x) for x in u) for u in idempotents]
    if not idems:
        raise InvalidStructureError("empty idempotent family")
    for u in idems:
        if len(u) != b.dim:
            raise DimensionMismatchError("idempotent length mismatch")
        if b.multiply(u, u) != u:
            raise InvalidStructureError("family member is not idempotent")
        for i in range(b.dim):
            e = b.basis_vector(i)
            if b.multiply(u, e) != b.multiply(e, u):
                raise InvalidStructureError("family member is not central")
    for s, u in enumerate(idems):
        for t, v in enumerate(idems):
            if s != t and not vec_is_zero(field, b.multiply(u, v)):
                raise InvalidStructureError("family is not orthogonal")
    total = [field.zero] * b.dim
    for u in idems:
        total = [field.normalize(x + y) for x, y in zip(total, u)]
    if tuple(total) != b.unit:
        raise InvalidStructureError("family is not complete (does not sum to 1)")

    pieces = []
    for u in idems:
        proj = _pairing_action(m, u)
        block = image(proj)
        g = block.dim
        triples = []
        for r, row in enumerate(block.basis):
            w = list(m.rho(row))
            for j in range(m.over.dim):
                for t in range(g):
                    pt = block.pivots[t]
                    cc = w[j * m.dim + pt]
                    if cc != field.zero:
                        triples.append((r, j, t, cc))
                        base = j * m.dim
                        for idx, x in enumerate(block.basis[t]):
                            if x != field.zero:
                                w[base + idx] = field.normalize(w[base + idx] - cc * x)
            if not vec_is_zero(field, tuple(w)):
                raise CrossCheckError("idempotent block is not a subcomodule")
        piece = Comodule.make(m.over, g, triples)
        bad = check_axioms(piece)
        if bad:
            raise CrossCheckError("idempotent block fails comodule axioms: " + bad[0])
        incl = (Matrix(field, g, tuple(zip(*block.basis))) if g
                else Matrix(field, 0, tuple(() for _ in range(m.dim))))
        pieces.append((piece, incl))
    if sum(p.dim for p, _ in pieces) != m.dim:
        raise CrossCheckError("idempotent blocks do not fill the comodule")
    return pieces
