"""Exact subspace linear algebra over Q and F_p.

Every subspace is stored as a reduced-row-echelon basis with leading-one
pivots, so two subspaces are equal as sets exactly when their stored
bases are equal as tuples.  All operations are pure functions over
immutable values.

The tensor coordinate convention is row-major and is fixed globally:
the pair ``(i, j)`` with ``i`` in the first factor and ``j`` in the
second maps to ``i * dim_second + j``.  Every module uses
:func:`tensor_index`; nothing else may invent its own flattening.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError, FieldMismatchError
from .fields import QQ, Field, require_same_field

Vector = tuple

# Tensor coordinate spaces larger than this are rejected outright; the
# toolkit targets desk-scale dimensions.
MAX_TENSOR_DIM = 1 << 20


def tensor_index(dim_first: int, dim_second: int, i: int, j: int) -> int:
    """Flatten the tensor coordinate pair (i, j), row-major."""
    if not (0 <= i < dim_first and 0 <= j < dim_second):
        raise DimensionMismatchError(f"tensor index ({i},{j}) out of range")
    return i * dim_second + j


def check_tensor_dims(dim_first: int, dim_second: int) -> int:
    prod = dim_first * dim_second
    if prod > MAX_TENSOR_DIM:
        raise DimensionMismatchError(
            f"tensor space of dimension {prod} exceeds the supported limit")
    return prod


def vec_zero(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def vec_add(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.normalize(a + b) for a, b in zip(u, v))


def vec_sub(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.normalize(a - b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v: Vector) -> Vector:
    return tuple(field.normalize(c * a) for a in v)


def vec_dot(field: Field, u: Vector, v: Vector):
    acc = field.zero
    for a, b in zip(u, v):
        acc = acc + a * b
    return field.normalize(acc)


def vec_kron(field: Field, u: Vector, v: Vector) -> Vector:
    """u tensor v in the row-major flattening."""
    out = []
    for a in u:
        if a == field.zero:
            out.extend([field.zero] * len(v))
        else:
            out.extend(field.normalize(a * b) for b in v)
    return tuple(out)


def vec_is_zero(field: Field, v: Vector) -> bool:
    z = field.zero
    return all(a == z for a in v)


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; rows are tuples of normalized scalars."""

    field: Field
    cols: int
    rows: tuple

    @staticmethod
    def from_rows(field: Field, rows, cols: int | None = None) -> "Matrix":
        rows = [tuple(field.normalize(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError("cols required for empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged rows")
        return Matrix(field, cols, tuple(rows))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix(field, n, tuple(
            tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(field: Field, n_rows: int, n_cols: int) -> "Matrix":
        return Matrix(field, n_cols, ((field.zero,) * n_cols,) * n_rows)

    @staticmethod
    def from_triples(field: Field, n_rows: int, n_cols: int, triples) -> "Matrix":
        grid = [[field.zero] * n_cols for _ in range(n_rows)]
        for i, j, c in triples:
            if not (0 <= i < n_rows and 0 <= j < n_cols):
                raise DimensionMismatchError(f"entry ({i},{j}) out of range")
            grid[i][j] = field.normalize(grid[i][j] + field.normalize(c))
        return Matrix(field, n_cols, tuple(tuple(r) for r in grid))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product; v has length cols."""
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(v)} vs {self.cols} columns")
        norm = self.field.normalize
        out = []
        for row in self.rows:
            acc = self.field.zero
            for a, b in zip(row, v):
                if a != self.field.zero and b != self.field.zero:
                    acc = acc + a * b
            out.append(norm(acc))
        return tuple(out)

    def mul(self, other: "Matrix") -> "Matrix":
        require_same_field(self.field, other.field)
        if self.cols != other.n_rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.n_rows}x{self.cols} by "
                f"{other.n_rows}x{other.cols}")
        norm = self.field.normalize
        zero = self.field.zero
        ot = list(zip(*other.rows)) if other.rows else [()] * other.cols
        out = []
        for row in self.rows:
            new = []
            for col in ot:
                acc = zero
                for a, b in zip(row, col):
                    if a != zero and b != zero:
                        acc = acc + a * b
                new.append(norm(acc))
            out.append(tuple(new))
        return Matrix(self.field, other.cols, tuple(out))

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix(self.field, 0, ((),) * self.cols if self.cols else ())
        return Matrix(self.field, self.n_rows, tuple(zip(*self.rows)))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def add(self, other: "Matrix") -> "Matrix":
        require_same_field(self.field, other.field)
        if self.cols != other.cols or self.n_rows != other.n_rows:
            raise DimensionMismatchError("matrix shape mismatch")
        f = self.field
        return Matrix(self.field, self.cols, tuple(
            vec_add(f, r, s) for r, s in zip(self.rows, other.rows)))

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.cols, tuple(vec_scale(f, c, r) for r in self.rows))


def _rref_rational(rows, cols):
    """RREF over Q via integer-scaled elimination (fast path).

    Each row is scaled to a primitive integer row during elimination;
    pivot normalization to leading ones happens once at the end.
    """
    work = []
    for r in rows:
        den = 1
        for x in r:
            d = x.denominator
            den = den * d // gcd(den, d)
        ints = [int(x * den) for x in r]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        if any(ints):
            work.append(ints)
    pivots = []
    pr = 0
    n_rows = len(work)
    for pc in range(cols):
        piv_i = None
        for i in range(pr, n_rows):
            if work[i][pc]:
                piv_i = i
                break
        if piv_i is None:
            continue
        work[pr], work[piv_i] = work[piv_i], work[pr]
        piv = work[pr]
        pv = piv[pc]
        for i in range(n_rows):
            if i == pr:
                continue
            f = work[i][pc]
            if f:
                row = work[i]
                new = [a * pv - b * f for a, b in zip(row, piv)]
                g = 0
                for v in new:
                    g = gcd(g, v)
                if g > 1:
                    new = [v // g for v in new]
                work[i] = new
        pivots.append(pc)
        pr += 1
        if pr == n_rows:
            break
    out = []
    for idx, pc in enumerate(pivots):
        row = work[idx]
        pv = row[pc]
        out.append(tuple(Fraction(v, pv) for v in row))
    return tuple(out), tuple(pivots)


def _rref_prime(p, rows, cols):
    work = [list(r) for r in rows if any(r)]
    pivots = []
    pr = 0
    n_rows = len(work)
    for pc in range(cols):
        piv_i = None
        for i in range(pr, n_rows):
            if work[i][pc]:
                piv_i = i
                break
        if piv_i is None:
            continue
        work[pr], work[piv_i] = work[piv_i], work[pr]
        inv = pow(work[pr][pc], p - 2, p)
        work[pr] = [v * inv % p for v in work[pr]]
        piv = work[pr]
        for i in range(n_rows):
            if i != pr and work[i][pc]:
                f = work[i][pc]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], piv)]
        pivots.append(pc)
        pr += 1
        if pr == n_rows:
            break
    return tuple(tuple(work[i]) for i in range(len(pivots))), tuple(pivots)


def rref(field: Field, rows, cols: int):
    """Reduced row echelon form; returns (canonical rows, pivot columns)."""
    if field is QQ or field.char == 0:
        return _rref_rational([tuple(field.normalize(x) for x in r) for r in rows], cols)
    return _rref_prime(field.char, [[field.normalize(x) for x in r] for r in rows], cols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of a coordinate space, held in canonical RREF basis.

    Construct through :meth:`span`; equality of values is set equality.
    """

    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @staticmethod
    def span(field: Field, ambient_dim: int, rows) -> "Subspace":
        rows = list(rows)
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatchError(
                    f"spanning row of length {len(r)} in ambient {ambient_dim}")
        basis, pivots = rref(field, rows, ambient_dim)
        return Subspace(field, ambient_dim, basis, pivots)

    @staticmethod
    def zero(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, (), ())

    @staticmethod
    def full(field: Field, ambient_dim: int) -> "Subspace":
        ident = Matrix.identity(field, ambient_dim)
        return Subspace(field, ambient_dim, ident.rows, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v: Vector) -> Vector:
        """Residue of v after eliminating the basis pivots."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector/ambient mismatch")
        field = self.field
        v = list(field.normalize(x) for x in v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c != field.zero:
                for t in range(self.ambient_dim):
                    if row[t] != field.zero:
                        v[t] = field.normalize(v[t] - c * row[t])
        return tuple(v)

    def contains(self, v: Vector) -> bool:
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def coords_of(self, v: Vector) -> Vector:
        """Coefficients of v in the canonical basis; v must lie in the span."""
        coords = tuple(self.field.normalize(v[pc]) for pc in self.pivots)
        residual = self.reduce(v)
        if not vec_is_zero(self.field, residual):
            raise ValueError("vector is not in the subspace")
        return coords

    def complement_coords(self) -> tuple:
        """Ambient coordinates not used as pivots (canonical complement)."""
        pivset = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in pivset)


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} in canonical form."""
    red, pivots = rref(m.field, m.rows, m.cols)
    field = m.field
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    vecs = []
    for fcol in free:
        v = [field.zero] * m.cols
        v[fcol] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.normalize(-red[r][fcol])
        vecs.append(v)
    return Subspace.span(field, m.cols, vecs)


def image(m: Matrix) -> Subspace:
    """Column space of m, i.e. {m v}."""
    cols = [m.column(j) for j in range(m.cols)]
    return Subspace.span(m.field, m.n_rows, cols)


def row_space(m: Matrix) -> Subspace:
    return Subspace.span(m.field, m.cols, m.rows)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    require_same_field(a.field, b.field)
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimension mismatch in sum")
    return Subspace.span(a.field, a.ambient_dim, a.basis + b.basis)


def orthogonal(v: Subspace) -> Subspace:
    """Annihilator under the coordinate pairing with the dual basis.

    The result lives in the coordinate space of the same dimension;
    orthogonal(orthogonal(v)) == v in finite dimension.
    """
    m = Matrix(v.field, v.ambient_dim, v.basis)
    return kernel(m)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the orthogonal of the sum of orthogonals."""
    require_same_field(a.field, b.field)
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimension mismatch in intersection")
    return orthogonal(subspace_sum(orthogonal(a), orthogonal(b)))


def intersect_all(spaces) -> Subspace:
    spaces = list(spaces)
    if not spaces:
        raise DimensionMismatchError("empty intersection has no ambient space")
    acc = spaces[0]
    for s in spaces[1:]:
        acc = intersect(acc, s)
    return acc


def quotient_with_lift(v: Subspace):
    """Projection onto the canonical complement coordinates and a lift.

    Returns (projection, lift) with projection . lift equal to the
    identity on the quotient coordinates.  The complement basis is the
    set of non-pivot coordinates of the RREF basis of ``v``.
    """
    field = v.field
    n = v.ambient_dim
    comp = v.complement_coords()
    proj_rows = []
    for fcol in comp:
        row = [field.zero] * n
        row[fcol] = field.one
        for r, pc in enumerate(v.pivots):
            row[pc] = field.normalize(-v.basis[r][fcol])
        proj_rows.append(tuple(row))
    proj = Matrix(field, n, tuple(proj_rows))
    lift_rows = []
    for i in range(n):
        row = [field.zero] * len(comp)
        for r, fcol in enumerate(comp):
            if fcol == i:
                row[r] = field.one
        lift_rows.append(tuple(row))
    lift = Matrix(field, len(comp), tuple(lift_rows))
    return proj, lift


def tensor_map(f: Matrix, g: Matrix) -> Matrix:
    """Kronecker product acting as f tensor g on row-major coordinates."""
    require_same_field(f.field, g.field)
    check_tensor_dims(max(f.n_rows, 1), max(g.n_rows, 1))
    check_tensor_dims(max(f.cols, 1), max(g.cols, 1))
    field = f.field
    zero = field.zero
    norm = field.normalize
    rows = []
    for fr in f.rows:
        for gr in g.rows:
            row = []
            for a in fr:
                if a == zero:
                    row.extend([zero] * len(gr))
                else:
                    row.extend(norm(a * b) for b in gr)
            rows.append(tuple(row))
    return Matrix(field, f.cols * g.cols, tuple(rows))


def tensor_of_subspaces(v: Subspace, w: Subspace) -> Subspace:
    """Span of all u tensor x for u in v, x in w."""
    require_same_field(v.field, w.field)
    n = check_tensor_dims(v.ambient_dim, w.ambient_dim)
    rows = [vec_kron(v.field, a, b) for a in v.basis for b in w.basis]
    return Subspace.span(v.field, n, rows)


def tensor_subspace_full(v: Subspace, right_dim: int) -> Subspace:
    """V tensor (full right factor) as a subspace of the tensor space."""
    field = v.field
    n = check_tensor_dims(v.ambient_dim, right_dim)
    zero = field.zero
    rows = []
    for a in v.basis:
        for t in range(right_dim):
            row = [zero] * n
            for i, x in enumerate(a):
                if x != zero:
                    row[i * right_dim + t] = x
            rows.append(tuple(row))
    return Subspace.span(field, n, rows)


def full_tensor_subspace(left_dim: int, w: Subspace) -> Subspace:
    """(full left factor) tensor W as a subspace of the tensor space."""
    field = w.field
    n = check_tensor_dims(left_dim, w.ambient_dim)
    zero = field.zero
    rows = []
    for t in range(left_dim):
        base = t * w.ambient_dim
        for b in w.basis:
            row = [zero] * n
            for j, x in enumerate(b):
                if x != zero:
                    row[base + j] = x
            rows.append(tuple(row))
    return Subspace.span(field, n, rows)


def mixed_tensor_sum(v: Subspace, w: Subspace) -> Subspace:
    """V tensor C + C tensor W for V, W inside the same ambient C."""
    require_same_field(v.field, w.field)
    if v.ambient_dim != w.ambient_dim:
        raise DimensionMismatchError("mixed tensor sum needs one ambient space")
    return subspace_sum(tensor_subspace_full(v, w.ambient_dim),
                        full_tensor_subspace(v.ambient_dim, w))


def char_poly(field: Field, m: Matrix) -> tuple:
    """Characteristic polynomial, monic, coefficients descending.

    Division-free (Berkowitz), so it is exact over both Q and F_p.
    """
    if m.n_rows != m.cols:
        raise DimensionMismatchError("characteristic polynomial needs a square matrix")
    n = m.n_rows
    norm = field.normalize
    prev = [field.one]
    rows = m.rows
    for i in range(n):
        a = rows[i][i]
        toep = [field.one, norm(-a)]
        if i > 0:
            sub = [r[:i] for r in rows[:i]]
            col = [rows[r][i] for r in range(i)]
            row = rows[i][:i]
            cur = col
            for _ in range(i):
                s = field.zero
                for x, y in zip(row, cur):
                    s = s + x * y
                toep.append(norm(-s))
                nxt = []
                for rr in sub:
                    acc = field.zero
                    for x, y in zip(rr, cur):
                        acc = acc + x * y
                    nxt.append(norm(acc))
                cur = nxt
        new = [field.zero] * (i + 2)
        for j in range(i + 2):
            acc = field.zero
            lo = max(0, j - (len(toep) - 1))
            for t in range(lo, min(j, len(prev) - 1) + 1):
                acc = acc + toep[j - t] * prev[t]
            new[j] = norm(acc)
        prev = new
    return tuple(prev)


def _int_divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def base_field_roots(field: Field, coeffs_desc: tuple) -> list:
    """Distinct roots of a polynomial lying in the base field.

    Over Q: rational root search on the integer-cleared polynomial.
    Over F_p: exhaustive scan of all residues.
    """
    coeffs = list(coeffs_desc)
    while coeffs and coeffs[0] == field.zero:
        coeffs.pop(0)
    if not coeffs:
        raise ValueError("zero polynomial has every scalar as a root")

    def eval_at(x):
        acc = field.zero
        for c in coeffs:
            acc = field.normalize(acc * x + c)
        return acc

    if field.char != 0:
        return [x for x in range(field.char) if eval_at(x) == 0]

    roots = []
    has_zero_root = False
    while coeffs and coeffs[-1] == field.zero:
        has_zero_root = True
        coeffs.pop()
    if has_zero_root:
        roots.append(Fraction(0))
    if len(coeffs) <= 1:
        return sorted(roots)
    den = 1
    for c in coeffs:
        d = c.denominator
        den = den * d // gcd(den, d)
    ints = [int(c * den) for c in coeffs]
    lead, const = ints[0], ints[-1]
    for p in _int_divisors(const):
        for q in _int_divisors(lead):
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and eval_at(cand) == 0:
                    roots.append(cand)
    return sorted(roots)
