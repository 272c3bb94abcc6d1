"""Builders for the algebras and representations used across the suites."""
from fractions import Fraction
from pathlib import Path

from hjj.domain.algebra.entities import BilinearMap, HomAlgebra
from hjj.domain.linalg.entities import Matrix, Vector
from hjj.domain.representation.entities import Representation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def vec(*xs: int | str | Fraction) -> Vector:
    return tuple(Fraction(x) for x in xs)


def mat(*rows: list[int]) -> Matrix:
    return Matrix.from_rows(rows)


def algebra(alpha: Matrix, products: dict[tuple[int, int], Vector]) -> HomAlgebra:
    """Algebra from the products of sorted index pairs; the transposes are filled in."""
    n = alpha.rows
    entries = {**products, **{(j, i): v for (i, j), v in products.items()}}
    return HomAlgebra(BilinearMap.from_entries(n, n, entries), alpha)


def alg2() -> HomAlgebra:
    """e1 * e1 = e2, alpha(e1) = e1 + e2, alpha(e2) = e2."""
    return algebra(mat([1, 0], [1, 1]), {(0, 0): vec(0, 1)})


def alg3() -> HomAlgebra:
    """alpha = diag(1, 2, 2); e2 * e2 = e3, e2 * e3 = 2 e1, e3 * e3 = 2 e3. Fails its axioms."""
    return algebra(
        mat([1, 0, 0], [0, 2, 0], [0, 0, 2]),
        {(1, 1): vec(0, 0, 1), (1, 2): vec(2, 0, 0), (2, 2): vec(0, 0, 2)},
    )


def abel1() -> HomAlgebra:
    return algebra(mat([1]), {})


def point1() -> HomAlgebra:
    """e * e = e with alpha = 0."""
    return algebra(mat([0]), {(0, 0): vec(1)})


def two_step(u: int, w: int, c: int, products: dict[tuple[int, int], Vector]) -> HomAlgebra:
    """U + W with U * U -> W, everything else zero, alpha = c on U and c^2 on W.

    Every such algebra satisfies the Hom-Jacobi-Jordan axioms.
    """
    n = u + w
    diagonal = [c] * u + [c * c] * w
    alpha = Matrix.from_sparse(n, n, {(i, i): Fraction(x) for i, x in enumerate(diagonal)})
    return algebra(alpha, products)


def bad_rep(a: HomAlgebra) -> Representation:
    """rho(e1) = 1, other generators act by zero, phi = 1."""
    rho = tuple(mat([1]) if i == 0 else mat([0]) for i in range(a.dim))
    return Representation(a, rho, mat([1]))


def jacobi_jordan5(a: int, b: int, c: int, p: int = 1, q: int = 1) -> HomAlgebra:
    """e1 e1 = a e5, e1 e2 = b e3, e1 e3 = c e4, e2 e5 = -2bc/a e4, twisted by diag(p, q, pq, p^2 q, p^2).

    The untwisted product has nonzero triple products such as (e1 e2) e1 = bc e4; composing
    it with the diagonal automorphism gives a multiplicative algebra with alpha = that map.
    """
    weights = [p, q, p * q, p * p * q, p * p]
    raw = {
        (0, 0): (4, Fraction(a)),
        (0, 1): (2, Fraction(b)),
        (0, 2): (3, Fraction(c)),
        (1, 4): (3, Fraction(-2 * b * c, a)),
    }
    products = {}
    for pair, (k, value) in raw.items():
        coords = [Fraction(0)] * 5
        coords[k] = value * weights[k]
        products[pair] = tuple(coords)
    alpha = Matrix.from_sparse(5, 5, {(i, i): Fraction(w) for i, w in enumerate(weights)})
    return algebra(alpha, products)
