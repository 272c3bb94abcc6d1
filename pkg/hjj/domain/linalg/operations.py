"""Echelon forms, kernels, images and quotients over Q.

Elimination is delegated to sympy's DomainMatrix over QQ in sparse format; rows travel
as {column: Fraction} dicts so that large constraint systems never become dense.
"""
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from hjj.domain.linalg.entities import Matrix, Subspace, Vector, from_qq, to_qq, zero_vector
from hjj.domain.linalg.errors import DimensionMismatch, NotASubspace

SparseRow = Mapping[int, Fraction]


def _domain(rows: Sequence[SparseRow], ncols: int) -> DomainMatrix:
    data = {
        i: {j: to_qq(x) for j, x in row.items() if x != 0}
        for i, row in enumerate(rows)
    }
    return DomainMatrix({i: r for i, r in data.items() if r}, (len(rows), ncols), QQ)


def _sparse_rows(m: Matrix) -> list[dict[int, Fraction]]:
    return [{j: x for j, x in enumerate(m.row(i)) if x != 0} for i in range(m.rows)]


def _echelon(rows: Sequence[SparseRow], ncols: int) -> tuple[list[dict[int, Fraction]], tuple[int, ...]]:
    """Nonzero RREF rows (pivots normalized to 1) and their pivot columns."""
    if ncols == 0 or not any(any(x != 0 for x in row.values()) for row in rows):
        return [], ()
    reduced, pivots = _domain(rows, ncols).rref()
    sdm = reduced.to_sparse().rep
    echelon: list[dict[int, Fraction]] = []
    for r, pivot in enumerate(pivots):
        row = {int(j): from_qq(x) for j, x in sdm.get(r, {}).items() if x}
        lead = row[int(pivot)]
        if lead != 1:
            row = {j: x / lead for j, x in row.items()}
        echelon.append(row)
    return echelon, tuple(int(p) for p in pivots)


def _dense(row: SparseRow, ncols: int) -> Vector:
    values = [Fraction(0)] * ncols
    for j, x in row.items():
        values[j] = x
    return tuple(values)


def _subspace(rows: Sequence[SparseRow], ncols: int) -> Subspace:
    echelon, _ = _echelon(rows, ncols)
    return Subspace(ncols, Matrix.from_rows([_dense(r, ncols) for r in echelon], cols=ncols))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (same shape, zero rows last) and rank."""
    echelon, pivots = _echelon(_sparse_rows(m), m.cols)
    rows = [_dense(r, m.cols) for r in echelon]
    rows += [zero_vector(m.cols)] * (m.rows - len(rows))
    return Matrix.from_rows(rows, cols=m.cols), len(pivots)


def rank(m: Matrix) -> int:
    return len(_echelon(_sparse_rows(m), m.cols)[1])


def span(vectors: Iterable[Sequence[Fraction]], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    rows = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch("span", ambient_dim, len(v))
        rows.append({j: x for j, x in enumerate(v) if x != 0})
    return _subspace(rows, ambient_dim)


def solve_homogeneous(equations: Sequence[SparseRow], ncols: int) -> Subspace:
    """Canonical basis of the common kernel of sparse linear equations."""
    echelon, pivots = _echelon(equations, ncols)
    if not echelon:
        return Subspace.full(ncols)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    kernel: dict[int, dict[int, Fraction]] = {f: {f: Fraction(1)} for f in free}
    for row, pivot in zip(echelon, pivots):
        for j, x in row.items():
            if j != pivot:
                kernel[j][pivot] = -x
    return _subspace(list(kernel.values()), ncols)


def nullspace(m: Matrix) -> Subspace:
    """Canonical basis of {v : m v = 0}."""
    return solve_homogeneous(_sparse_rows(m), m.cols)


def image(m: Matrix) -> Subspace:
    """Canonical basis of the column span."""
    return _subspace(_sparse_rows(m.transpose()), m.rows)


def complement_equations(s: Subspace) -> list[Vector]:
    """Rows of a matrix whose kernel is exactly s."""
    if s.dim == 0:
        return Subspace.full(s.ambient_dim).vectors
    return nullspace(s.basis).vectors


def intersection(first: Subspace, second: Subspace) -> Subspace:
    if first.ambient_dim != second.ambient_dim:
        raise DimensionMismatch("intersection", first.ambient_dim, second.ambient_dim)
    equations = complement_equations(first) + complement_equations(second)
    return solve_homogeneous(
        [{j: x for j, x in enumerate(v) if x != 0} for v in equations], first.ambient_dim
    )


def sum_of(first: Subspace, second: Subspace) -> Subspace:
    if first.ambient_dim != second.ambient_dim:
        raise DimensionMismatch("sum_of", first.ambient_dim, second.ambient_dim)
    return span(first.vectors + second.vectors, first.ambient_dim)


def quotient_basis(z: Subspace, b: Subspace) -> list[Vector]:
    """Representatives extending a basis of b to a basis of z, reduced modulo b."""
    if z.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("quotient_basis", z.ambient_dim, b.ambient_dim)
    if not z.contains_subspace(b):
        raise NotASubspace("B is not contained in Z; the quotient is undefined")
    return span([b.reduce(v) for v in z.vectors], z.ambient_dim).vectors


def solve(m: Matrix, rhs: Sequence[Fraction]) -> Vector | None:
    """One solution of m x = rhs (free variables set to zero), or None if inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionMismatch("solve", m.rows, len(rhs))
    augmented = _sparse_rows(m)
    for i, value in enumerate(rhs):
        if value != 0:
            augmented[i][m.cols] = Fraction(value)
    echelon, pivots = _echelon(augmented, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for row, pivot in zip(echelon, pivots):
        x[pivot] = row.get(m.cols, Fraction(0))
    return tuple(x)


def restrict(m: Matrix, domain: Subspace) -> Matrix:
    """Matrix of m composed with the inclusion of domain's canonical basis."""
    if m.cols != domain.ambient_dim:
        raise DimensionMismatch("restrict", m.cols, domain.ambient_dim)
    return m @ domain.basis.transpose()
