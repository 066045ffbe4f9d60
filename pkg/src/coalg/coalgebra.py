"""Finite-dimensional coalgebras by structure constants.

Comultiplication is stored as sparse constants ``(i, j, k, c)`` meaning
that ``Delta(e_i)`` contributes ``c * e_j (x) e_k``; the counit is a
coordinate vector.  Duality with structure-constant algebras is an index
reshuffle, so double dualization is the identity on the nose.

Lattice-style operations that admit two formulas (wedge, subcoalgebra
tests, largest subcoalgebra) compute both routes and raise
:class:`~coalg.errors.CrossCheckError` on disagreement; the two routes
come from independent descriptions, so agreement is a strong internal
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (TWO_SIDED, StructureConstantAlgebra, commutator_subspace,
                      ideal_generated, is_ideal, radical, subspace_product)
from .errors import (CrossCheckError, DimensionMismatchError,
                     InvalidStructureError)
from .fields import Field, require_same_field
from .linalg import (Matrix, Subspace, base_field_roots, char_poly, intersect,
                     kernel, orthogonal, quotient_with_lift, subspace_sum,
                     tensor_index, tensor_of_subspaces, vec_is_zero, vec_kron)


def _normalize_constants(field: Field, dim: int, triples):
    acc = {}
    for i, j, k, c in triples:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise DimensionMismatchError(f"comultiplication entry ({i},{j},{k}) out of range")
        c = field.normalize(c)
        key = (i, j, k)
        c = field.normalize(acc.get(key, field.zero) + c)
        if c == field.zero:
            acc.pop(key, None)
        else:
            acc[key] = c
    return tuple(sorted((i, j, k, c) for (i, j, k), c in acc.items()))


@dataclass(frozen=True)
class StructureConstantCoalgebra:
    field: Field
    dim: int
    comult: tuple  # sorted sparse (i, j, k, c): Delta(e_i) has c * e_j (x) e_k
    counit: tuple
    _by_source: dict = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        by_source = {}
        for i, j, k, c in self.comult:
            by_source.setdefault(i, []).append((j, k, c))
        object.__setattr__(self, "_by_source", by_source)

    @staticmethod
    def make(field: Field, dim: int, triples, counit) -> "StructureConstantCoalgebra":
        if dim < 0:
            raise DimensionMismatchError("negative dimension")
        counit = tuple(field.normalize(x) for x in counit)
        if len(counit) != dim:
            raise DimensionMismatchError("counit vector length != dim")
        return StructureConstantCoalgebra(
            field, dim, _normalize_constants(field, dim, triples), counit)

    def delta(self, v) -> tuple:
        """Comultiplication of a coordinate vector, flattened row-major."""
        field = self.field
        out = [field.zero] * (self.dim * self.dim)
        for i, j, k, c in self.comult:
            a = v[i]
            if a != field.zero:
                idx = j * self.dim + k
                out[idx] = out[idx] + a * c
        return tuple(field.normalize(x) for x in out)

    def delta_basis(self, i: int):
        """Sparse comultiplication of e_i as (j, k, c) entries."""
        return self._by_source.get(i, ())

    def eps(self, v):
        field = self.field
        acc = field.zero
        for a, b in zip(self.counit, v):
            acc = acc + a * b
        return field.normalize(acc)

    def comult_matrix(self) -> Matrix:
        """Delta as a (dim^2 x dim) matrix on column vectors."""
        field = self.field
        grid = [[field.zero] * self.dim for _ in range(self.dim * self.dim)]
        for i, j, k, c in self.comult:
            grid[j * self.dim + k][i] = c
        return Matrix(field, self.dim, tuple(tuple(r) for r in grid))

    def basis_vector(self, i: int) -> tuple:
        return tuple(self.field.one if t == i else self.field.zero
                     for t in range(self.dim))


@dataclass(frozen=True)
class CoalgebraMorphism:
    source: StructureConstantCoalgebra
    target: StructureConstantCoalgebra
    matrix: Matrix  # target.dim x source.dim

    def __post_init__(self):
        require_same_field(self.source.field, self.target.field)
        if self.matrix.n_rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise DimensionMismatchError("morphism matrix shape mismatch")

    def apply(self, v):
        return self.matrix.apply(v)


def identity_morphism(c: StructureConstantCoalgebra) -> CoalgebraMorphism:
    return CoalgebraMorphism(c, c, Matrix.identity(c.field, c.dim))


def check_axioms(c: StructureConstantCoalgebra) -> list:
    """Violations of coassociativity and the counit laws, per basis index."""
    report = []
    field = c.field
    n = c.dim
    for i in range(n):
        left = {}
        right = {}
        for j, k, cc in c.delta_basis(i):
            for a, b, dd in c.delta_basis(j):
                key = (a, b, k)
                left[key] = field.normalize(left.get(key, field.zero) + cc * dd)
            for a, b, dd in c.delta_basis(k):
                key = (j, a, b)
                right[key] = field.normalize(right.get(key, field.zero) + cc * dd)
        keys = set(left) | set(right)
        if any(left.get(t, field.zero) != right.get(t, field.zero) for t in keys):
            report.append(f"coassociativity fails at basis {i}")
        lvec = [field.zero] * n
        rvec = [field.zero] * n
        for j, k, cc in c.delta_basis(i):
            lvec[k] = field.normalize(lvec[k] + cc * c.counit[j])
            rvec[j] = field.normalize(rvec[j] + cc * c.counit[k])
        e = [field.one if t == i else field.zero for t in range(n)]
        if lvec != e:
            report.append(f"left counit law fails at basis {i}")
        if rvec != e:
            report.append(f"right counit law fails at basis {i}")
    return report


def check_morphism(f: CoalgebraMorphism) -> list:
    report = []
    src, tgt, m = f.source, f.target, f.matrix
    field = src.field
    cols = [m.column(i) for i in range(src.dim)]
    for i in range(src.dim):
        lhs = tgt.delta(cols[i])
        rhs = [field.zero] * (tgt.dim * tgt.dim)
        for j, k, cc in src.delta_basis(i):
            piece = vec_kron(field, cols[j], cols[k])
            for t, x in enumerate(piece):
                if x != field.zero:
                    rhs[t] = field.normalize(rhs[t] + cc * x)
        if list(lhs) != rhs:
            report.append(f"comultiplication compatibility fails at basis {i}")
        if tgt.eps(cols[i]) != src.counit[i]:
            report.append(f"counit compatibility fails at basis {i}")
    return report


# ---------------------------------------------------------------------------
# duality


def dual_algebra(c: StructureConstantCoalgebra) -> StructureConstantAlgebra:
    """Convolution algebra on the dual basis: (f g)(x) = (f (x) g)(Delta x)."""
    triples = tuple((j, k, i, cc) for i, j, k, cc in c.comult)
    return StructureConstantAlgebra.make(c.field, c.dim, triples, c.counit)


def dual_coalgebra(a: StructureConstantAlgebra) -> StructureConstantCoalgebra:
    """Dual coalgebra of a finite-dimensional algebra on the dual basis."""
    triples = tuple((k, i, j, cc) for i, j, k, cc in a.mult)
    return StructureConstantCoalgebra.make(a.field, a.dim, triples, a.unit)


def dual_of_algebra_morphism(phi) -> CoalgebraMorphism:
    """Transpose of an algebra morphism A -> B as a coalgebra morphism B* -> A*."""
    return CoalgebraMorphism(dual_coalgebra(phi.target), dual_coalgebra(phi.source),
                             phi.matrix.transpose())


# ---------------------------------------------------------------------------
# wedge products


def _check_subspace(c: StructureConstantCoalgebra, v: Subspace, what: str):
    require_same_field(c.field, v.field)
    if v.ambient_dim != c.dim:
        raise DimensionMismatchError(f"{what} lives in ambient {v.ambient_dim}, "
                                     f"coalgebra has dimension {c.dim}")


def wedge_via_comult(c: StructureConstantCoalgebra, v: Subspace, w: Subspace) -> Subspace:
    """The preimage under Delta of V (x) C + C (x) W, as a kernel."""
    _check_subspace(c, v, "left wedge factor")
    _check_subspace(c, w, "right wedge factor")
    field = c.field
    pv, _ = quotient_with_lift(v)
    pw, _ = quotient_with_lift(w)
    a, b = pv.n_rows, pw.n_rows
    n = c.dim
    grid = [[field.zero] * n for _ in range(a * b)]
    pv_rows, pw_rows = pv.rows, pw.rows
    for i, j, k, cc in c.comult:
        for r in range(a):
            x = pv_rows[r][j]
            if x == field.zero:
                continue
            xc = x * cc
            for s in range(b):
                y = pw_rows[s][k]
                if y != field.zero:
                    grid[r * b + s][i] = grid[r * b + s][i] + xc * y
    m = Matrix(field, n, tuple(tuple(field.normalize(x) for x in row) for row in grid))
    return kernel(m)


def wedge_via_dual_product(c: StructureConstantCoalgebra, v: Subspace,
                           w: Subspace) -> Subspace:
    """The annihilator of the product of annihilators in the dual algebra."""
    _check_subspace(c, v, "left wedge factor")
    _check_subspace(c, w, "right wedge factor")
    b = dual_algebra(c)
    return orthogonal(subspace_product(b, orthogonal(v), orthogonal(w)))


def wedge(c: StructureConstantCoalgebra, v: Subspace, w: Subspace) -> Subspace:
    """Wedge product of two subspaces; both formulas, cross-checked."""
    first = wedge_via_comult(c, v, w)
    second = wedge_via_dual_product(c, v, w)
    if first != second:
        raise CrossCheckError(
            "wedge routes disagree: comultiplication preimage has dimension "
            f"{first.dim}, dual-product annihilator has dimension {second.dim}")
    return first


# ---------------------------------------------------------------------------
# subcoalgebras


def is_subcoalgebra_direct(c: StructureConstantCoalgebra, d: Subspace) -> bool:
    _check_subspace(c, d, "candidate subcoalgebra")
    dd = tensor_of_subspaces(d, d)
    return all(dd.contains(c.delta(row)) for row in d.basis)


def is_subcoalgebra_dual(c: StructureConstantCoalgebra, d: Subspace) -> bool:
    _check_subspace(c, d, "candidate subcoalgebra")
    return is_ideal(dual_algebra(c), orthogonal(d), TWO_SIDED)


def is_subcoalgebra(c: StructureConstantCoalgebra, d: Subspace) -> bool:
    """Whether Delta(D) lands in D (x) D; cross-checked against the
    two-sided-ideal criterion for the annihilator in the dual algebra."""
    direct = is_subcoalgebra_direct(c, d)
    dual = is_subcoalgebra_dual(c, d)
    if direct != dual:
        raise CrossCheckError(
            f"subcoalgebra criteria disagree on a subspace of dimension {d.dim}: "
            f"direct={direct}, dual ideal={dual}")
    return direct


def sum_subcoalgebras(c: StructureConstantCoalgebra, d1: Subspace,
                      d2: Subspace) -> Subspace:
    """Sum of two subcoalgebras; the result is checked to be one."""
    out = subspace_sum(d1, d2)
    if not is_subcoalgebra(c, out):
        raise CrossCheckError("sum of subcoalgebras failed the subcoalgebra test")
    return out


def subcoalgebra_intersection_check(c: StructureConstantCoalgebra, d1: Subspace,
                                    d2: Subspace) -> Subspace:
    """Intersection of two subcoalgebras; the result is checked to be one."""
    out = intersect(d1, d2)
    if not is_subcoalgebra(c, out):
        raise CrossCheckError("intersection of subcoalgebras failed the subcoalgebra test")
    return out


def largest_subcoalgebra_via_ideal(c: StructureConstantCoalgebra,
                                   v: Subspace) -> Subspace:
    """Annihilator of the two-sided ideal generated by the annihilator of v."""
    _check_subspace(c, v, "bounding subspace")
    b = dual_algebra(c)
    return orthogonal(ideal_generated(b, orthogonal(v), TWO_SIDED))


def largest_subcoalgebra_via_fixpoint(c: StructureConstantCoalgebra,
                                      v: Subspace) -> Subspace:
    """Iterate D <- {x in D : Delta(x) in D (x) D} until stable."""
    _check_subspace(c, v, "bounding subspace")
    cur = v
    while True:
        dd = tensor_of_subspaces(cur, cur)
        proj, _ = quotient_with_lift(dd)
        comp = proj.mul(c.comult_matrix())
        nxt = intersect(cur, kernel(comp))
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


def largest_subcoalgebra_in(c: StructureConstantCoalgebra, v: Subspace) -> Subspace:
    """Largest subcoalgebra contained in the subspace v; two routes,
    cross-checked, and the result is verified to be a subcoalgebra."""
    by_ideal = largest_subcoalgebra_via_ideal(c, v)
    by_fix = largest_subcoalgebra_via_fixpoint(c, v)
    if by_ideal != by_fix:
        raise CrossCheckError(
            "largest-subcoalgebra routes disagree: ideal route dimension "
            f"{by_ideal.dim}, fixpoint route dimension {by_fix.dim}")
    if not is_subcoalgebra(c, by_ideal):
        raise CrossCheckError("largest-subcoalgebra result is not a subcoalgebra")
    return by_ideal


def preimage_subspace(f: CoalgebraMorphism, v: Subspace) -> Subspace:
    """f^{-1}(v) as a raw subspace; no coalgebra structure is asserted."""
    _check_subspace(f.target, v, "subspace")
    proj, _ = quotient_with_lift(v)
    return kernel(proj.mul(f.matrix))


def image_subspace(f: CoalgebraMorphism, v: Subspace) -> Subspace:
    _check_subspace(f.source, v, "subspace")
    rows = [f.apply(row) for row in v.basis]
    return Subspace.span(f.target.field, f.target.dim, rows)


def pullback_dagger(f: CoalgebraMorphism, d: Subspace) -> Subspace:
    """Largest subcoalgebra of the source inside f^{-1}(d).

    d must be a subcoalgebra of the target.
    """
    if not is_subcoalgebra(f.target, d):
        raise InvalidStructureError("pullback target is not a subcoalgebra")
    return largest_subcoalgebra_in(f.source, preimage_subspace(f, d))


# ---------------------------------------------------------------------------
# group-like elements


def is_grouplike(c: StructureConstantCoalgebra, x) -> bool:
    field = c.field
    x = tuple(field.normalize(t) for t in x)
    if vec_is_zero(field, x):
        return False
    return c.delta(x) == vec_kron(field, x, x) and c.eps(x) == field.one


def _transposed_mult_operators(c: StructureConstantCoalgebra):
    """For each dual-basis index i, the transpose of left multiplication
    by that element of the dual algebra, acting on coordinate columns."""
    field = c.field
    n = c.dim
    mats = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    # dual algebra: e*_i e*_j = sum_k comult[k][i][j] e*_k
    for k, i, j, cc in c.comult:
        mats[i][j][k] = field.normalize(mats[i][j][k] + cc)
    return [Matrix(field, n, tuple(tuple(row) for row in m)) for m in mats]


def _restriction_matrix(field: Field, op: Matrix, s: Subspace) -> Matrix:
    cols = []
    for row in s.basis:
        img = op.apply(row)
        cols.append(s.coords_of(img))
    return Matrix(field, s.dim, tuple(zip(*cols))) if cols else Matrix(field, 0, ())


def grouplikes(c: StructureConstantCoalgebra) -> list:
    """All group-like elements with coordinates in the base field.

    A group-like x is exactly a multiplicative unital functional on the
    dual algebra, so it kills the ideal generated by commutators and is
    a simultaneous eigenvector of the transposed multiplication
    operators with eigenvalue tuple equal to its own coordinates.  The
    search splits the commutator annihilator along base-field roots of
    characteristic polynomials, then every surviving eigenvalue tuple is
    verified against Delta(x) = x (x) x and eps(x) = 1 exactly.
    """
    field = c.field
    n = c.dim
    if n == 0:
        return []
    b = dual_algebra(c)
    comm_ideal = ideal_generated(b, commutator_subspace(b), TWO_SIDED)
    start = orthogonal(comm_ideal)
    if start.dim == 0:
        return []
    ops = _transposed_mult_operators(c)
    leaves = [(start, [])]
    for i in range(n):
        op = ops[i]
        refined = []
        for space, evs in leaves:
            rest = _restriction_matrix(field, op, space)
            cp = char_poly(field, rest)
            for lam in base_field_roots(field, cp):
                shifted = rest.add(Matrix.identity(field, space.dim).scale(
                    field.normalize(-lam)))
                eig = kernel(shifted)
                if eig.dim == 0:
                    continue
                lifted = Subspace.span(field, n, [
                    _combine(field, coefs, space.basis) for coefs in eig.basis])
                refined.append((lifted, evs + [lam]))
        leaves = refined
        if not leaves:
            return []
    out = []
    for _, evs in leaves:
        cand = tuple(field.normalize(t) for t in evs)
        if is_grouplike(c, cand):
            out.append(cand)
    out.sort()
    return out


def _combine(field, coefs, basis_rows):
    n = len(basis_rows[0]) if basis_rows else 0
    out = [field.zero] * n
    for cf, row in zip(coefs, basis_rows):
        if cf != field.zero:
            for t, x in enumerate(row):
                if x != field.zero:
                    out[t] = out[t] + cf * x
    return tuple(field.normalize(v) for v in out)


def grouplikes_in(c: StructureConstantCoalgebra, v: Subspace) -> list:
    """Group-like elements lying in the subspace v."""
    return [g for g in grouplikes(c) if v.contains(g)]


# ---------------------------------------------------------------------------
# constructors and standard operations


def set_coalgebra(field: Field, n: int) -> StructureConstantCoalgebra:
    """The coalgebra spanned by a set of n points: Delta(e) = e (x) e."""
    if n < 0:
        raise DimensionMismatchError("negative number of points")
    triples = [(i, i, i, field.one) for i in range(n)]
    return StructureConstantCoalgebra.make(field, n, triples, (field.one,) * n)


def direct_sum(c1: StructureConstantCoalgebra,
               c2: StructureConstantCoalgebra) -> StructureConstantCoalgebra:
    require_same_field(c1.field, c2.field)
    off = c1.dim
    triples = list(c1.comult)
    triples.extend((i + off, j + off, k + off, cc) for i, j, k, cc in c2.comult)
    return StructureConstantCoalgebra.make(
        c1.field, c1.dim + c2.dim, triples, c1.counit + c2.counit)


def embed_summand(c_sum: StructureConstantCoalgebra, v: Subspace, offset: int) -> Subspace:
    """Inclusion of a subspace of a direct summand into the sum's coordinates."""
    field = v.field
    rows = []
    for r in v.basis:
        row = [field.zero] * c_sum.dim
        for t, x in enumerate(r):
            row[offset + t] = x
        rows.append(row)
    return Subspace.span(field, c_sum.dim, rows)


def restrict_to_subcoalgebra(c: StructureConstantCoalgebra, d: Subspace):
    """The coalgebra structure induced on a subcoalgebra.

    Returns (coalgebra on d.dim coordinates, inclusion matrix).
    """
    if not is_subcoalgebra(c, d):
        raise InvalidStructureError("restriction target is not a subcoalgebra")
    field = c.field
    m = d.dim
    triples = []
    for r, row in enumerate(d.basis):
        w = c.delta(row)
        # coefficient of b_s (x) b_t reads off at the pivot pair
        resid = list(w)
        for s in range(m):
            ps = d.pivots[s]
            for t in range(m):
                pt = d.pivots[t]
                cc = resid[ps * c.dim + pt]
                if cc != field.zero:
                    triples.append((r, s, t, cc))
                    piece = vec_kron(field, d.basis[s], d.basis[t])
                    for idx, x in enumerate(piece):
                        if x != field.zero:
                            resid[idx] = field.normalize(resid[idx] - cc * x)
        if not vec_is_zero(field, tuple(resid)):
            raise CrossCheckError("comultiplication did not restrict exactly")
    counit = tuple(c.eps(row) for row in d.basis)
    sub = StructureConstantCoalgebra.make(field, m, triples, counit)
    incl = Matrix(field, m, tuple(zip(*d.basis))) if m else Matrix(field, 0, tuple(
        () for _ in range(c.dim)))
    return sub, incl


def restrict_subspace_coords(d: Subspace, v: Subspace) -> Subspace:
    """Express a subspace of d in d's own coordinates (v must lie in d)."""
    rows = [d.coords_of(r) for r in v.basis]
    return Subspace.span(d.field, d.dim, rows)


def coradical(c: StructureConstantCoalgebra) -> Subspace:
    """Largest cosemisimple subcoalgebra, via the radical of the dual
    algebra; characteristic zero only."""
    return orthogonal(radical(dual_algebra(c)))


def coradical_filtration(c: StructureConstantCoalgebra) -> list:
    """The chain C_0 <= C_1 = C_0 v C_0 <= ... , ending at C itself."""
    c0 = coradical(c)
    chain = [c0]
    cur = c0
    while cur.dim < c.dim:
        nxt = wedge(c, cur, c0)
        if nxt.dim == cur.dim:
            raise CrossCheckError("coradical filtration stabilized below the whole space")
        chain.append(nxt)
        cur = nxt
    return chain
