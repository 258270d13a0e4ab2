import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jkinvariants import catalog
from jkinvariants.catalog import template_poly
from jkinvariants.exactcore import MultiPoly
from jkinvariants.involution import (
    FamilyError,
    PolyFamily,
    chain_biisotropy_check,
    completeness_count,
    frobenius_family,
    frozen_bracket,
    is_casimir,
    kostant_regularity_check,
    lie_poisson_bracket,
    pfaffian_polynomial,
    shift_generators,
    verify_biinvolution,
)
from jkinvariants.jkinv import pencil_at
from jkinvariants.liealg import abelian, random_covector
from jkinvariants.pencil import characteristic_polynomial

F = Fraction


def alg(name):
    return catalog.load(name).algebra


def x(n, i):
    return MultiPoly.var(n, i - 1)


def poly(text, n, a=None):
    return template_poly(text, n, a)


def test_lie_poisson_examples():
    g = alg("A_3_1")
    assert lie_poisson_bracket(g, x(3, 2), x(3, 3)) == x(3, 1)
    f = poly("x1*x2 + x3^2", 3)
    assert lie_poisson_bracket(g, f, f).is_zero()
    assert lie_poisson_bracket(alg("A_3_9"), x(3, 1), x(3, 2)) == x(3, 3)


def test_frozen_bracket_examples():
    g = alg("A_3_1")
    assert frozen_bracket(g, [1, 0, 0], x(3, 2), x(3, 3)) == MultiPoly.const(3, 1)
    assert frozen_bracket(g, [4, 5, 6], x(3, 1), x(3, 1)).is_zero()
    assert frozen_bracket(alg("A_3_9"), [0, 0, 1], x(3, 1), x(3, 2)) == MultiPoly.const(3, 1)


def test_bracket_dimension_mismatch():
    with pytest.raises(FamilyError):
        lie_poisson_bracket(alg("A_3_1"), x(4, 1), x(3, 1))


def _random_poly(data, n):
    terms = data.draw(st.dictionaries(
        st.tuples(*[st.integers(0, 2)] * n), st.integers(-3, 3), max_size=4))
    return MultiPoly(n, {e: F(c) for e, c in terms.items()})


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from(["A_3_4", "A_4_10", "A_5_17", "heisenberg1"]))
def test_bracket_axioms(data, name):
    g = alg(name)
    n = g.dim
    f, h, k = (_random_poly(data, n) for _ in range(3))
    a = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    c = F(data.draw(st.integers(-4, 4)))
    for br in (lambda p, q: lie_poisson_bracket(g, p, q), lambda p, q: frozen_bracket(g, a, p, q)):
        assert br(f, h) == -br(h, f)
        assert br(f * c + k, h) == br(f, h) * c + br(k, h)
        assert br(f * k, h) == f * br(k, h) + k * br(f, h)


@pytest.mark.parametrize("name", ["A_4_1", "A_5_9", "A_5_40", "sl3", "heisenberg2"])
def test_lie_poisson_jacobi_on_coordinates(name):
    g = alg(name)
    n = g.dim
    br = lambda p, q: lie_poisson_bracket(g, p, q)  # noqa: E731
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                a, b, c = x(n, i), x(n, j), x(n, k)
                assert (br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)).is_zero()


def test_verify_biinvolution_examples():
    g = alg("A_3_9")
    a = [1, 2, 3]
    fam = PolyFamily([poly("x1^2+x2^2+x3^2", 3), poly("2*(a1*x1+a2*x2+a3*x3)", 3, a)])
    assert verify_biinvolution(g, a, fam)
    consts = PolyFamily([MultiPoly.const(3, 5), MultiPoly.const(3, -1)])
    assert verify_biinvolution(g, a, consts)
    bad = verify_biinvolution(alg("A_3_1"), [1, 1, 1], PolyFamily([x(3, 2), x(3, 3)]))
    assert not bad
    i, j, which, value = bad.witness
    assert (i, j, which, value) == (0, 1, "lie", x(3, 1))


def test_shift_generators_so3():
    g = alg("A_3_9")
    out = shift_generators(g, [1, 2, 3], PolyFamily([poly("x1^2+x2^2+x3^2", 3)]))
    assert set(out.polys) == {poly("2*(x1+2*x2+3*x3)", 3), poly("x1^2+x2^2+x3^2", 3)}


def test_shift_generators_linear_casimir():
    g = alg("heisenberg1")
    out = shift_generators(g, [1, 2, 3], PolyFamily([x(3, 3)]))
    assert out.polys == [x(3, 3)]


def test_shift_generators_a53_match_table_family():
    rec = catalog.load("A_5_3")
    a = [2, -1, 3, 1, 5]
    out = shift_generators(rec.algebra, a, rec.casimir_family())
    # x1, x2 and the degree 1 and 2 parts of the quadratic Casimir shifted to a
    assert len(out.polys) == 4
    table = rec.family(a)
    assert set(out.polys) == set(table.polys)
    assert verify_biinvolution(rec.algebra, a, out)


def test_shift_generators_rejects_non_casimir():
    with pytest.raises(FamilyError, match="#1"):
        shift_generators(alg("A_3_9"), [1, 2, 3], PolyFamily([x(3, 1)]))


def test_shift_generators_always_in_biinvolution():
    rng = random.Random(3)
    for name in catalog.list_corpus(max_dim=10):
        rec = catalog.load(name)
        if not rec.casimirs:
            continue
        a = random_covector(rng, rec.dim, 5)
        fam = shift_generators(rec.algebra, a, rec.casimir_family())
        assert verify_biinvolution(rec.algebra, a, fam), name


def test_frobenius_family_examples():
    rng = random.Random(4)
    g = alg("aff2")
    a = random_covector(rng, 6)
    fam = frobenius_family(g, a)
    assert len(fam.polys) == 3
    assert verify_biinvolution(g, a, fam)
    assert completeness_count(g, fam) == 3
    # Pf is a square of one linear form here, so the family is not complete
    for name in ("A_4_7", "A_4_9"):
        g = alg(name)
        a = random_covector(rng, 4)
        fam = frobenius_family(g, a)
        assert len(fam.polys) == 2 and completeness_count(g, fam) == 1
        assert verify_biinvolution(g, a, fam)
    g = alg("A_4_12")
    fam = frobenius_family(g, [3, -2, 5, 1])
    assert completeness_count(g, fam) == 2
    with pytest.raises(FamilyError):
        frobenius_family(alg("A_3_9"), [1, 2, 3])


def test_frobenius_family_a47_depends_on_x1_only():
    fam = frobenius_family(alg("A_4_7"), [3, -2, 5, 1])
    for p in fam.polys:
        for i in (1, 2, 3):
            assert p.diff(i).is_zero()


def test_frobenius_coefficients_are_char_poly_coefficients():
    # Pf(A_x + λA_a) = Pf(A_a)·p(λ), so the λ^k coefficient is Pf(A_a)·p_k
    g = alg("aff2")
    rng = random.Random(5)
    a = random_covector(rng, 6)
    Fx = pfaffian_polynomial(g)
    pfa = Fx(a)
    fam = frobenius_family(g, a)
    for _ in range(3):
        pt = random_covector(rng, 6)
        p = characteristic_polynomial(pencil_at(g, pt, a))
        assert [p[k] * pfa for k in range(p.degree())] == [q(pt) for q in fam.polys]


def test_completeness_examples():
    rec = catalog.load("A_3_9")
    a = [1, 2, 3]
    assert completeness_count(rec.algebra, rec.family(a)) == 2
    fam = PolyFamily([x(3, 1), poly("x1^2", 3), poly("x1^3", 3)])
    assert completeness_count(abelian(3), fam) == 1
    rec = catalog.load("A_5_36")
    a = [2, 1, -3, 4, 1]
    assert len(rec.family(a).polys) == 3
    assert completeness_count(rec.algebra, rec.family(a)) == 3


def test_chain_biisotropy_examples():
    rng = random.Random(6)
    assert chain_biisotropy_check(alg("A_3_9"), random_covector(rng, 3), random_covector(rng, 3))
    assert chain_biisotropy_check(abelian(3), [1, 2, 3], [3, 1, 2])


def test_kostant_examples():
    g = alg("A_3_9")
    cas = PolyFamily([poly("x1^2+x2^2+x3^2", 3)])
    assert kostant_regularity_check(g, cas, [1, 2, 3])
    assert kostant_regularity_check(g, cas, [0, 0, 0])
    rec = catalog.load("A_5_3")
    assert kostant_regularity_check(rec.algebra, rec.casimir_family(), [2, 1, -1, 3, 4])


def test_kostant_preconditions():
    g = alg("A_3_9")
    with pytest.raises(FamilyError):
        kostant_regularity_check(g, PolyFamily([x(3, 1)]), [1, 2, 3])
    with pytest.raises(FamilyError):
        kostant_regularity_check(alg("A_3_1"), PolyFamily([x(3, 1)]), [1, 2, 3])


def test_is_casimir():
    assert is_casimir(alg("A_3_9"), poly("x1^2+x2^2+x3^2", 3))
    assert not is_casimir(alg("A_4_7"), x(4, 1))


def test_family_json_round_trip():
    fam = PolyFamily([poly("x1^2-1/2*x2", 3), x(3, 3)])
    assert PolyFamily.from_json(3, fam.to_json()).polys == fam.polys
