import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jkinvariants.exactcore import (
    GaussRat,
    UniPoly,
    det,
    kernel_basis,
    pencil_matrix,
    pfaffian,
    pfaffian_expansion,
    poly_gcd,
    rank_exact,
    smith_normal_form,
    squarefree_decompose,
    squarefree_part,
)
from jkinvariants.exactcore.field import fmt_scalar, parse_scalar
from jkinvariants.exactcore.matrix import congruence, matmul, transpose
from jkinvariants.exactcore.residue import rank_modulo
from jkinvariants.exactcore.roots import NonSplitError, exact_roots, split_roots
from jkinvariants.exactcore.unipoly import poly_xgcd

F = Fraction
lam = sympy.Symbol("lam")


def P(*coeffs):
    return UniPoly(coeffs)


def to_sympy(p: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * lam**k for k, c in enumerate(p.coeffs))


def from_sympy(expr) -> UniPoly:
    coeffs = sympy.Poly(expr, lam).all_coeffs()[::-1]
    return UniPoly(F(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs)


rat = st.fractions(min_value=-20, max_value=20, max_denominator=6)
small_poly = st.lists(rat, min_size=0, max_size=5).map(UniPoly)


# -- gcd ------------------------------------------------------------------------


def test_gcd_common_factor():
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)


def test_gcd_with_zero():
    assert poly_gcd(P(F(1, 2), 1), UniPoly()) == P(F(1, 2), 1)
    assert poly_gcd(UniPoly(), UniPoly()).is_zero()
    assert poly_gcd(P(4, 2), UniPoly()) == P(2, 1)


def test_gcd_cubic_quadratic():
    # λ³−λ and λ²+λ: gcd λ(λ+1)
    g = poly_gcd(P(0, -1, 0, 1), P(0, 1, 1))
    assert g == from_sympy(sympy.gcd(lam**3 - lam, lam**2 + lam))
    assert g == P(0, 1, 1)


@settings(max_examples=60, deadline=None)
@given(small_poly, small_poly, small_poly)
def test_gcd_divides_and_is_greatest(a, b, c):
    p, q = a * c, b * c
    g = poly_gcd(p, q)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    assert g.lc() == 1
    assert g.divides(p) and g.divides(q)
    if not c.is_zero():
        assert c.divides(g) or c.degree() == 0


@settings(max_examples=40, deadline=None)
@given(small_poly, small_poly)
def test_gcd_matches_sympy(p, q):
    if p.is_zero() and q.is_zero():
        return
    ref = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), lam).monic()
    assert poly_gcd(p, q) == from_sympy(ref.as_expr())


@settings(max_examples=40, deadline=None)
@given(small_poly, small_poly)
def test_xgcd_bezout(p, q):
    g, s, t = poly_xgcd(p, q)
    assert s * p + t * q == g
    assert g == poly_gcd(p, q)


# -- squarefree ------------------------------------------------------------------


def test_squarefree_constructed():
    p = P(-1, 1) * P(-1, 1) * P(2, 1)
    assert squarefree_decompose(p) == [(P(2, 1), 1), (P(-1, 1), 2)]


def test_squarefree_already_squarefree():
    assert squarefree_decompose(P(3, 1)) == [(P(3, 1), 1)]


def test_squarefree_equal_multiplicities_grouped():
    # λ⁴+2λ³+λ² = λ²(λ+1)²; both roots have multiplicity 2, so they share one part
    parts = squarefree_decompose(P(0, 0, 1, 2, 1))
    assert parts == [(P(0, 1, 1), 2)]
    assert squarefree_part(P(0, 0, 1, 2, 1)) == P(0, 1, 1)


def test_squarefree_zero_raises():
    with pytest.raises(ValueError):
        squarefree_decompose(UniPoly())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=4),
       st.integers(1, 5))
def test_squarefree_reassembles(roots, lc):
    p = UniPoly([lc])
    for r, e in roots:
        p = p * P(-r, 1) ** e
    parts = squarefree_decompose(p)
    out = UniPoly([p.lc()])
    for q, e in parts:
        assert q.lc() == 1
        assert poly_gcd(q, q.derivative()).degree() == 0
        out = out * q**e
    assert out == p
    for (q1, _), (q2, _) in combinations(parts, 2):
        assert poly_gcd(q1, q2).degree() == 0


# -- rank / kernel -----------------------------------------------------------------


def test_rank_trivial():
    assert rank_exact([[0] * 3 for _ in range(3)]) == 0
    assert rank_exact([[int(i == j) for j in range(4)] for i in range(4)]) == 4


def test_rank_single_skew_pair():
    M = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    assert rank_exact(M) == sympy.Matrix(M).rank() == 2


def test_kernel_basis_examples():
    assert kernel_basis([[int(i == j) for j in range(3)] for i in range(3)]) == []
    assert kernel_basis([[0, 0], [0, 0]]) == [[1, 0], [0, 1]]
    # A_x for [e2,e3] = e1 at x = (1,0,0)
    assert kernel_basis([[0, 0, 0], [0, 0, 1], [0, -1, 0]]) == [[1, 0, 0]]


def test_kernel_vectors_have_content_one():
    K = kernel_basis([[F(2, 3), F(4, 3), 0], [0, 0, 0]])
    for v in K:
        assert all(F(c).denominator == 1 for c in v)
        assert sympy.gcd([int(c) for c in v]) == 1


mat = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5))


@settings(max_examples=60, deadline=None)
@given(mat)
def test_rank_matches_sympy_and_transpose(M):
    r = rank_exact(M)
    assert r == sympy.Matrix(M).rank()
    assert r == rank_exact(transpose(M))
    K = kernel_basis(M, len(M[0]))
    assert len(K) == len(M[0]) - r
    for v in K:
        assert all(sum(F(a) * b for a, b in zip(row, v)) == 0 for row in M)


def _random_invertible(rng, n):
    while True:
        T = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if det(T) != 0:
            return T


def test_rank_invariant_under_invertible_products():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 5)
        M = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        T, S = _random_invertible(rng, n), _random_invertible(rng, n)
        assert rank_exact(matmul(matmul(T, M), S)) == rank_exact(M)


# -- Pfaffian --------------------------------------------------------------------


def test_pfaffian_examples():
    assert pfaffian([[0, 1], [-1, 0]]) == 1
    assert pfaffian([[0, 0], [0, 0]]) == 0
    M = [[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, 3], [0, 0, -3, 0]]
    assert pfaffian(M) == pfaffian([[0, 2], [-2, 0]]) * pfaffian([[0, 3], [-3, 0]]) == 6


def test_pfaffian_errors():
    with pytest.raises(ValueError):
        pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])


def _random_skew(rng, n, lo=-5, hi=5):
    M = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = F(rng.randint(lo, hi))
            M[i][j], M[j][i] = v, -v
    return M


def test_pfaffian_squared_is_det_and_matches_expansion():
    rng = random.Random(11)
    for _ in range(30):
        n = 2 * rng.randint(1, 4)
        M = _random_skew(rng, n)
        pf = pfaffian(M)
        assert pf == pfaffian_expansion(M)
        assert pf * pf == det(M) == sympy.Matrix(M).det()


def test_pfaffian_congruence_rule():
    rng = random.Random(12)
    for _ in range(20):
        n = 2 * rng.randint(1, 3)
        M = _random_skew(rng, n)
        T = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        assert pfaffian(congruence(T, M)) == det(T) * pfaffian(M)


# -- Smith form ----------------------------------------------------------------


def test_smith_diagonal():
    Z, O = UniPoly(), UniPoly([1])
    M = [[O, Z, Z], [Z, P(0, 1), Z], [Z, Z, P(0, 0, 1)]]
    factors, r = smith_normal_form(M)
    assert factors == (O, P(0, 1), P(0, 0, 1)) and r == 3


def test_smith_skew_pair_duplicates():
    # entries ±t at (2,3) with t = 1 + 2λ
    A = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    B = [[0, 0, 0], [0, 0, 2], [0, -2, 0]]
    factors, r = smith_normal_form(pencil_matrix(A, B))
    assert r == 2
    assert factors == (P(F(1, 2), 1), P(F(1, 2), 1))


def test_smith_zero():
    assert smith_normal_form([[UniPoly()] * 2 for _ in range(2)]) == ((), 0)


def _minor_gcd(M, k):
    n = len(M)
    g = UniPoly()
    for rows in combinations(range(n), k):
        for cols in combinations(range(n), k):
            sub = sympy.Matrix([[to_sympy(M[i][j]) for j in cols] for i in rows])
            g = poly_gcd(g, from_sympy(sympy.expand(sub.det())) if sub.det() != 0 else UniPoly())
    return g


def test_smith_products_are_minor_gcds():
    rng = random.Random(3)
    for _ in range(6):
        n = rng.randint(2, 4)
        M = [[P(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(n)] for _ in range(n)]
        factors, r = smith_normal_form(M)
        prod = UniPoly([1])
        for k in range(1, r + 1):
            prod = prod * factors[k - 1]
            assert prod == _minor_gcd(M, k)


def test_smith_skew_pencils_pair_up():
    rng = random.Random(4)
    for _ in range(10):
        n = rng.randint(2, 6)
        A, B = _random_skew(rng, n, -1, 1), _random_skew(rng, n, -1, 1)
        factors, _ = smith_normal_form(pencil_matrix(A, B))
        divisors = {}
        for f in factors:
            for q, e in squarefree_decompose(f) if f.degree() > 0 else []:
                key = (str(q), e)
                divisors[key] = divisors.get(key, 0) + 1
        assert all(c % 2 == 0 for c in divisors.values())


# -- residue-ring rank ---------------------------------------------------------------


def test_rank_modulo_splits_by_root():
    # rank of diag(λ-1, λ-2) at the roots of (λ-1)(λ-2)(λ-3)
    q = P(-1, 1) * P(-2, 1) * P(-3, 1)
    M = [[P(-1, 1), UniPoly()], [UniPoly(), P(-2, 1)]]
    pieces = rank_modulo(M, q)
    by_root = {}
    for piece, r in pieces:
        for root in exact_roots(piece):
            by_root[root] = r
    assert by_root == {1: 1, 2: 1, 3: 2}


def test_rank_modulo_irreducible_quadratic():
    q = P(-2, 0, 1)  # λ² − 2
    M = [[P(0, 1), P(2)], [P(1), P(0, 1)]]  # det = λ² − 2
    assert rank_modulo(M, q) == [(q, 1)]


# -- roots and scalars -----------------------------------------------------------


def test_exact_roots_rational_and_gaussian():
    assert exact_roots(P(-1, 0, 1)) == [-1, 1]
    roots = exact_roots(P(2, 2, 1))  # (λ+1)² + 1
    assert roots == [GaussRat(-1, -1), GaussRat(-1, 1)]
    with pytest.raises(NonSplitError):
        split_roots(P(-2, 0, 1))


def test_scalar_round_trip():
    for v in (F(3, 4), F(-5), GaussRat(F(1, 2), -3), GaussRat(0, 1)):
        assert parse_scalar(fmt_scalar(v)) == v
