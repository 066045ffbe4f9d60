"""Finite-dimensional associative unital algebras by structure constants.

An algebra is stored as sparse multiplication constants
``(i, j, k, c)`` meaning that ``e_i * e_j`` contributes ``c * e_k``,
together with the coordinate vector of the multiplicative identity.
The zero algebra is deliberately unrepresentable: every algebra here is
unital with 1 != 0, so quotients by the whole algebra are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (DimensionMismatchError, InvalidStructureError,
                     UnsupportedCharacteristicError)
from .fields import Field, require_same_field
from .linalg import Matrix, Subspace, kernel, quotient_with_lift, vec_is_zero

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two_sided"
_SIDES = (LEFT, RIGHT, TWO_SIDED)


def _normalize_constants(field: Field, dim: int, triples):
    acc = {}
    for i, j, k, c in triples:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise DimensionMismatchError(f"structure constant ({i},{j},{k}) out of range")
        c = field.normalize(c)
        key = (i, j, k)
        c = field.normalize(acc.get(key, field.zero) + c)
        if c == field.zero:
            acc.pop(key, None)
        else:
            acc[key] = c
    return tuple(sorted((i, j, k, c) for (i, j, k), c in acc.items()))


@dataclass(frozen=True)
class StructureConstantAlgebra:
    field: Field
    dim: int
    mult: tuple  # sorted sparse (i, j, k, c), c != 0
    unit: tuple
    _by_left: dict = dc_field(default=None, compare=False, repr=False)
    _by_right: dict = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        by_left = {}
        by_right = {}
        for i, j, k, c in self.mult:
            by_left.setdefault(i, []).append((j, k, c))
            by_right.setdefault(j, []).append((i, k, c))
        object.__setattr__(self, "_by_left", by_left)
        object.__setattr__(self, "_by_right", by_right)

    @staticmethod
    def make(field: Field, dim: int, triples, unit) -> "StructureConstantAlgebra":
        if dim < 1:
            raise InvalidStructureError("algebras here are unital with 1 != 0; dim >= 1")
        unit = tuple(field.normalize(x) for x in unit)
        if len(unit) != dim:
            raise DimensionMismatchError("unit vector length != dim")
        return StructureConstantAlgebra(
            field, dim, _normalize_constants(field, dim, triples), unit)

    def multiply(self, x, y) -> tuple:
        field = self.field
        out = [field.zero] * self.dim
        for i, j, k, c in self.mult:
            a = x[i]
            if a == field.zero:
                continue
            b = y[j]
            if b == field.zero:
                continue
            out[k] = out[k] + a * b * c
        return tuple(field.normalize(v) for v in out)

    def basis_product(self, i: int, j: int) -> tuple:
        field = self.field
        out = [field.zero] * self.dim
        for jj, k, c in self._by_left.get(i, ()):
            if jj == j:
                out[k] = field.normalize(out[k] + c)
        return tuple(out)

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> x * y."""
        field = self.field
        grid = [[field.zero] * self.dim for _ in range(self.dim)]
        for i, j, k, c in self.mult:
            a = x[i]
            if a != field.zero:
                grid[k][j] = grid[k][j] + a * c
        return Matrix(field, self.dim,
                      tuple(tuple(field.normalize(v) for v in row) for row in grid))

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> y * x."""
        field = self.field
        grid = [[field.zero] * self.dim for _ in range(self.dim)]
        for i, j, k, c in self.mult:
            b = x[j]
            if b != field.zero:
                grid[k][i] = grid[k][i] + b * c
        return Matrix(field, self.dim,
                      tuple(tuple(field.normalize(v) for v in row) for row in grid))

    def basis_vector(self, i: int) -> tuple:
        return tuple(self.field.one if t == i else self.field.zero
                     for t in range(self.dim))


@dataclass(frozen=True)
class AlgebraMorphism:
    source: StructureConstantAlgebra
    target: StructureConstantAlgebra
    matrix: Matrix  # target.dim x source.dim

    def __post_init__(self):
        require_same_field(self.source.field, self.target.field)
        if self.matrix.n_rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise DimensionMismatchError("morphism matrix shape mismatch")

    def apply(self, v):
        return self.matrix.apply(v)


def identity_morphism(a: StructureConstantAlgebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, a, Matrix.identity(a.field, a.dim))


def compose(g: AlgebraMorphism, f: AlgebraMorphism) -> AlgebraMorphism:
    """g after f."""
    if f.target is not g.source and f.target != g.source:
        raise InvalidStructureError("composition endpoint mismatch")
    return AlgebraMorphism(f.source, g.target, g.matrix.mul(f.matrix))


def check_axioms(a: StructureConstantAlgebra) -> list:
    """Every violated associativity triple or unit law, as strings."""
    report = []
    field = a.field
    for j in range(a.dim):
        e = a.basis_vector(j)
        if a.multiply(a.unit, e) != e:
            report.append(f"unit law fails on the left at basis {j}")
        if a.multiply(e, a.unit) != e:
            report.append(f"unit law fails on the right at basis {j}")
    prods = [[a.basis_product(i, j) for j in range(a.dim)] for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            pij = prods[i][j]
            for k in range(a.dim):
                ek = a.basis_vector(k)
                lhs = a.multiply(pij, ek)
                rhs = a.multiply(a.basis_vector(i), prods[j][k])
                if lhs != rhs:
                    report.append(f"associativity fails at basis triple ({i},{j},{k})")
    return report


def check_morphism(phi: AlgebraMorphism) -> list:
    report = []
    src, tgt, m = phi.source, phi.target, phi.matrix
    if m.apply(src.unit) != tgt.unit:
        report.append("morphism does not preserve the identity")
    cols = [m.column(j) for j in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = m.apply(src.basis_product(i, j))
            rhs = tgt.multiply(cols[i], cols[j])
            if lhs != rhs:
                report.append(f"multiplicativity fails at basis pair ({i},{j})")
    return report


def is_commutative(a: StructureConstantAlgebra) -> bool:
    table = {(i, j, k): c for i, j, k, c in a.mult}
    for i, j, k, c in a.mult:
        if table.get((j, i, k), a.field.zero) != c:
            return False
    return True


# ---------------------------------------------------------------------------
# constructors


def matrix_algebra(field: Field, n: int) -> StructureConstantAlgebra:
    """Full matrix algebra on matrix units e_ij, indexed i*n + j."""
    if n < 1:
        raise InvalidStructureError("matrix algebra needs n >= 1")
    triples = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                triples.append((i * n + j, j * n + k, i * n + k, field.one))
    unit = [field.zero] * (n * n)
    for i in range(n):
        unit[i * n + i] = field.one
    return StructureConstantAlgebra.make(field, n * n, triples, unit)


def truncated_poly(field: Field, n: int) -> StructureConstantAlgebra:
    """k[x]/(x^n) on the basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise InvalidStructureError("truncated polynomial algebra needs n >= 1")
    triples = [(i, j, i + j, field.one)
               for i in range(n) for j in range(n) if i + j < n]
    unit = [field.one] + [field.zero] * (n - 1)
    return StructureConstantAlgebra.make(field, n, triples, unit)


def upper_triangular(field: Field, n: int) -> StructureConstantAlgebra:
    """Upper triangular n x n matrices on the units e_ij, i <= j."""
    if n < 1:
        raise InvalidStructureError("upper triangular algebra needs n >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: t for t, p in enumerate(pairs)}
    triples = []
    for (i, j) in pairs:
        for (k, l) in pairs:
            if j == k:
                triples.append((index[(i, j)], index[(k, l)], index[(i, l)], field.one))
    unit = [field.zero] * len(pairs)
    for i in range(n):
        unit[index[(i, i)]] = field.one
    return StructureConstantAlgebra.make(field, len(pairs), triples, unit)


def group_algebra(field: Field, cayley_table) -> StructureConstantAlgebra:
    """Group algebra from a Cayley table t[i][j] = index of g_i g_j."""
    table = [list(row) for row in cayley_table]
    n = len(table)
    if n < 1 or any(len(row) != n for row in table):
        raise InvalidStructureError("Cayley table must be square and nonempty")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidStructureError("Cayley table entries must index elements")
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise InvalidStructureError(f"row {i} is not a permutation")
        if sorted(table[r][i] for r in range(n)) != list(range(n)):
            raise InvalidStructureError(f"column {i} is not a permutation")
    ident = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            ident = e
            break
    if ident is None:
        raise InvalidStructureError("Cayley table has no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InvalidStructureError(
                        f"Cayley table is not associative at ({i},{j},{k})")
    triples = [(i, j, table[i][j], field.one) for i in range(n) for j in range(n)]
    unit = [field.one if i == ident else field.zero for i in range(n)]
    return StructureConstantAlgebra.make(field, n, triples, unit)


def cyclic_group_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product(a: StructureConstantAlgebra,
                   b: StructureConstantAlgebra) -> StructureConstantAlgebra:
    require_same_field(a.field, b.field)
    triples = list(a.mult)
    off = a.dim
    triples.extend((i + off, j + off, k + off, c) for i, j, k, c in b.mult)
    unit = a.unit + b.unit
    return StructureConstantAlgebra.make(a.field, a.dim + b.dim, triples, unit)


def _poly_reduce(field: Field, coeffs, modulus):
    """Remainder of coeffs (ascending) modulo a monic modulus (ascending)."""
    d = len(modulus) - 1
    work = [field.normalize(c) for c in coeffs]
    for t in range(len(work) - 1, d - 1, -1):
        c = work[t]
        if c != field.zero:
            for s in range(d + 1):
                work[t - d + s] = field.normalize(work[t - d + s] - c * modulus[s])
    work = work[:d]
    work += [field.zero] * (d - len(work))
    return work


def quotient_polynomial(field: Field, coeffs) -> StructureConstantAlgebra:
    """k[x]/(f) for a nonzero polynomial f, basis 1, x, ..., x^(deg-1).

    f is given by ascending coefficients and is normalized monic.
    """
    coeffs = [field.normalize(c) for c in coeffs]
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    if not coeffs:
        raise InvalidStructureError("cannot quotient by the zero polynomial")
    if len(coeffs) == 1:
        raise InvalidStructureError(
            "quotient by a nonzero constant is the zero algebra, which is not supported")
    lead = coeffs[-1]
    monic = [field.div(c, lead) for c in coeffs]
    d = len(monic) - 1
    triples = []
    for i in range(d):
        for j in range(d):
            if i + j < d:
                triples.append((i, j, i + j, field.one))
            else:
                power = [field.zero] * (i + j) + [field.one]
                red = _poly_reduce(field, power, monic)
                for k, c in enumerate(red):
                    if c != field.zero:
                        triples.append((i, j, k, c))
    unit = [field.one] + [field.zero] * (d - 1)
    return StructureConstantAlgebra.make(field, d, triples, unit)


# ---------------------------------------------------------------------------
# subspace operations


def _check_subspace_fits(a: StructureConstantAlgebra, s: Subspace, what: str):
    require_same_field(a.field, s.field)
    if s.ambient_dim != a.dim:
        raise DimensionMismatchError(f"{what} lives in ambient {s.ambient_dim}, "
                                     f"algebra has dimension {a.dim}")


def subspace_product(a: StructureConstantAlgebra, s1: Subspace, s2: Subspace) -> Subspace:
    """Span of all products u * v with u in s1 and v in s2."""
    _check_subspace_fits(a, s1, "left factor")
    _check_subspace_fits(a, s2, "right factor")
    rows = [a.multiply(u, v) for u in s1.basis for v in s2.basis]
    return Subspace.span(a.field, a.dim, rows)


def ideal_generated(a: StructureConstantAlgebra, s: Subspace,
                    side: str = TWO_SIDED) -> Subspace:
    """Smallest subspace containing s closed under the requested
    multiplications, by closure iteration until the dimension stabilizes."""
    if side not in _SIDES:
        raise InvalidStructureError(f"side must be one of {_SIDES}")
    _check_subspace_fits(a, s, "generating subspace")
    cur = s
    while True:
        rows = list(cur.basis)
        for v in cur.basis:
            for i in range(a.dim):
                e = a.basis_vector(i)
                if side in (LEFT, TWO_SIDED):
                    rows.append(a.multiply(e, v))
                if side in (RIGHT, TWO_SIDED):
                    rows.append(a.multiply(v, e))
        nxt = Subspace.span(a.field, a.dim, rows)
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt


def is_ideal(a: StructureConstantAlgebra, s: Subspace, side: str = TWO_SIDED) -> bool:
    if side not in _SIDES:
        raise InvalidStructureError(f"side must be one of {_SIDES}")
    _check_subspace_fits(a, s, "candidate ideal")
    for v in s.basis:
        for i in range(a.dim):
            e = a.basis_vector(i)
            if side in (LEFT, TWO_SIDED) and not s.contains(a.multiply(e, v)):
                return False
            if side in (RIGHT, TWO_SIDED) and not s.contains(a.multiply(v, e)):
                return False
    return True


def quotient_algebra(a: StructureConstantAlgebra, ideal: Subspace):
    """Quotient by a two-sided ideal, on the canonical complement basis.

    Returns (quotient algebra, projection morphism).  The whole algebra
    is rejected as an ideal because the zero algebra is not supported.
    """
    _check_subspace_fits(a, ideal, "ideal")
    if not is_ideal(a, ideal, TWO_SIDED):
        raise InvalidStructureError("subspace is not a two-sided ideal")
    if ideal.dim == a.dim:
        raise InvalidStructureError(
            "quotient by the whole algebra is the zero algebra, which is not supported")
    proj, lift = quotient_with_lift(ideal)
    q = a.dim - ideal.dim
    field = a.field
    lifted = [lift.column(r) for r in range(q)]
    triples = []
    for r in range(q):
        for s in range(q):
            prod = proj.apply(a.multiply(lifted[r], lifted[s]))
            for t, c in enumerate(prod):
                if c != field.zero:
                    triples.append((r, s, t, c))
    unit = proj.apply(a.unit)
    quot = StructureConstantAlgebra.make(field, q, triples, unit)
    return quot, AlgebraMorphism(a, quot, proj)


def radical(a: StructureConstantAlgebra) -> Subspace:
    """Jacobson radical via the trace form, characteristic zero only.

    x is in the radical exactly when trace(L_x L_y) = 0 for all y.
    """
    if a.field.char != 0:
        raise UnsupportedCharacteristicError(
            "the trace-form radical is only computed in characteristic zero")
    field = a.field
    lmats = [a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim)]
    gram = []
    for i in range(a.dim):
        row = []
        li = lmats[i].rows
        for j in range(a.dim):
            lj = lmats[j].rows
            acc = field.zero
            for k in range(a.dim):
                for l in range(a.dim):
                    acc = acc + li[k][l] * lj[l][k]
            row.append(field.normalize(acc))
        gram.append(tuple(row))
    return kernel(Matrix(field, a.dim, tuple(gram)))


def commutator_subspace(a: StructureConstantAlgebra) -> Subspace:
    """Span of all basis commutators e_i e_j - e_j e_i."""
    field = a.field
    rows = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            diff = tuple(field.normalize(x - y) for x, y in
                         zip(a.basis_product(i, j), a.basis_product(j, i)))
            if not vec_is_zero(field, diff):
                rows.append(diff)
    return Subspace.span(field, a.dim, rows)


def image_of_subspace(phi: AlgebraMorphism, s: Subspace) -> Subspace:
    _check_subspace_fits(phi.source, s, "subspace")
    rows = [phi.apply(v) for v in s.basis]
    return Subspace.span(phi.target.field, phi.target.dim, rows)
