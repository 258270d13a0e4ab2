import random
from fractions import Fraction

import pytest

from jkinvariants import catalog
from jkinvariants.exactcore.matrix import det
from jkinvariants.exactcore.roots import exact_roots
from jkinvariants.jkinv import (
    ClassificationError,
    SamplingError,
    classify,
    elashvili_check,
    jk_invariants,
    pencil_at,
    sample_generic_pair,
    sing_codim,
    singular_line_report,
    singular_point,
    verify_char_formula,
    vorontsov_check,
)
from jkinvariants.liealg import abelian, centre, change_basis, direct_sum, index, random_covector
from jkinvariants.pencil import characteristic_polynomial, jk_profile

F = Fraction


def alg(name):
    return catalog.load(name).algebra


def shape(prof):
    return prof.kronecker, [(s.root_count, s.block_sizes) for s in prof.strata]


def test_sample_generic_pair_examples():
    cert = sample_generic_pair(alg("A_3_1"), trials=5)
    assert shape(cert.profile) == ((1,), [(1, (2,))])
    assert cert.agreement_count >= 3 and cert.perturbation_stable
    assert jk_profile(pencil_at(alg("A_3_1"), cert.x, cert.a)).algebraic_type() == cert.profile.algebraic_type()
    assert sample_generic_pair(abelian(3)).profile.kronecker == (1, 1, 1)
    # a single 5×5 Kronecker block, i.e. k = 3
    assert shape(sample_generic_pair(alg("A_5_40"), trials=5).profile) == ((3,), [])


def test_sample_generic_pair_is_deterministic():
    a = sample_generic_pair(alg("A_4_3"), seed=7)
    b = sample_generic_pair(alg("A_4_3"), seed=7)
    assert a.to_dict() == b.to_dict()


def test_sample_generic_pair_needs_three_trials():
    with pytest.raises(ValueError):
        sample_generic_pair(alg("A_3_1"), trials=2)


def test_sampling_error_without_majority(monkeypatch):
    import itertools

    from jkinvariants import jkinv
    from jkinvariants.pencil import JKProfile

    # three samples with three different types: no majority
    fakes = itertools.cycle([JKProfile((1,), ()), JKProfile((2,), ()), JKProfile((3,), ())])
    monkeypatch.setattr(jkinv, "jk_profile", lambda P, seed=0: next(fakes))
    with pytest.raises(SamplingError, match="larger coordinate box"):
        sample_generic_pair(alg("A_3_1"), trials=3)


def test_jk_invariants_examples():
    assert shape(jk_invariants(alg("A_4_12"))) == ((), [(2, (2,))])
    assert shape(jk_invariants(alg("A_3_8"))) == ((2,), [])
    assert shape(jk_invariants(alg("sl2"))) == ((2,), [])
    assert shape(jk_invariants(alg("A_4_8"))) == ((2, 1), [])


def test_classify_examples():
    assert classify(alg("A_3_9")) == "Kronecker"
    assert classify(alg("A_4_7")) == "Jordan"
    assert classify(alg("A_3_1")) == "mixed"


def test_classify_detects_disagreement():
    cert = sample_generic_pair(alg("A_3_1"))
    # claim a Kronecker-type profile while p(λ) is not constant
    from dataclasses import replace

    fake = replace(cert, profile=replace(cert.profile, strata=()))
    with pytest.raises(ClassificationError):
        classify(alg("A_3_1"), certificate=fake)


def test_singular_line_report_examples():
    rng = random.Random(0)
    g = alg("A_3_9")
    r = singular_line_report(g, random_covector(rng, 3), random_covector(rng, 3))
    assert r.degree == 0 and not r.codim1_detected
    g = alg("A_3_1")
    r = singular_line_report(g, [3, 1, 2], [2, 5, -1])
    assert r.degree == 1 and r.distinct_roots == 1 and r.codim1_detected


def test_singular_line_report_gl2_plus():
    g = alg("gl2_plus")
    cert = sample_generic_pair(g)
    r = singular_line_report(g, cert.x, cert.a)
    assert r.degree == 4 and r.distinct_roots == 2
    assert [e for _, e in r.strata] == [2]


def test_verify_char_formula_examples():
    assert verify_char_formula(alg("A_3_1"), "-x1/a1")
    assert verify_char_formula(alg("A_5_38"), "-x1/a1")
    assert verify_char_formula(alg("A_5_38"), "-x2/a2")
    assert not verify_char_formula(alg("A_3_1"), "-x2/a2")


def test_verify_char_formula_gaussian():
    g = alg("A_4_12")
    assert verify_char_formula(g, "-(x1+i*x2)/(a1+i*a2)")
    assert not verify_char_formula(g, "-(x1+i*x2)/(a1-i*a2)")


def test_elashvili_examples():
    rng = random.Random(1)
    g = alg("sl2")
    r = elashvili_check(g, random_covector(rng, 3))
    assert r.ind_ann == r.ind_g == 1 and r.nontrivial_blocks_at_a == 0
    r = elashvili_check(abelian(3), [1, 2, 3])
    assert r.ind_ann == r.ind_g == 3
    rec = catalog.load("gl2_plus")
    y = singular_point(rec.algebra, witness=rec.singular_witness)
    r = elashvili_check(rec.algebra, y)
    assert r.ind_ann == 2 and r.ind_g == 0 and r.nontrivial_blocks_at_a >= 1


def test_singular_point_from_rational_root():
    g = alg("A_3_1")
    y = singular_point(g)
    assert y is not None
    from jkinvariants.exactcore.matrix import rank_exact
    from jkinvariants.liealg import poisson_matrix

    assert 3 - rank_exact(poisson_matrix(g, y)) > index(g)


def test_vorontsov_examples():
    assert vorontsov_check(alg("A_3_9"), [2])
    r = vorontsov_check(alg("A_3_9"), [2])
    assert r.sum_matches and r.equality_holds
    assert vorontsov_check(alg("sl3"), [2, 3])
    assert not vorontsov_check(alg("A_3_9"), [1])
    with pytest.raises(ValueError):
        vorontsov_check(alg("A_3_9"), [2, 3])


def test_sing_codim_small():
    assert sing_codim(alg("A_3_9")) == 3
    assert sing_codim(alg("A_3_1")) == 1
    assert sing_codim(alg("A_4_7")) == 1
    assert sing_codim(abelian(3)) is None


@pytest.mark.parametrize("name", ["A_3_1", "A_4_8", "A_5_3", "A_5_12", "heisenberg2", "so4"])
def test_kronecker_count_and_centre(name):
    g = alg(name)
    prof = jk_invariants(g)
    assert len(prof.kronecker) == index(g)
    assert sum(1 for k in prof.kronecker if k == 1) >= centre(g).dim
    p = characteristic_polynomial(pencil_at(g, *_cert_pair(g)))
    if not jk_profile(pencil_at(g, *_cert_pair(g))).has_infinite_eigenvalue:
        assert 2 * p.degree() == prof.jordan_dimension()


def _cert_pair(g):
    c = sample_generic_pair(g)
    return c.x, c.a


@pytest.mark.parametrize("name", ["A_4_3", "A_5_22", "so4"])
def test_profile_survives_basis_change(name):
    g = alg(name)
    rng = random.Random(2)
    while True:
        T = [[F(rng.randint(-2, 2)) for _ in range(g.dim)] for _ in range(g.dim)]
        if det(T) != 0:
            break
    assert jk_invariants(change_basis(g, T)).algebraic_type() == jk_invariants(g).algebraic_type()


def test_scaling_covariance():
    g = alg("A_5_22")
    x, a = [3, 1, -2, 5, 1], [2, -1, 4, 1, 3]
    p = characteristic_polynomial(pencil_at(g, x, a))
    alpha, beta = F(3), F(-2)
    q = characteristic_polynomial(pencil_at(g, [alpha * v for v in x], [beta * v for v in a]))
    assert exact_roots(q) == sorted(r * alpha / beta for r in exact_roots(p))
    assert jk_profile(pencil_at(g, x, a)).algebraic_type() == \
        jk_profile(pencil_at(g, [alpha * v for v in x], [beta * v for v in a])).algebraic_type()


def test_direct_sum_profile_is_union():
    g1, g2 = alg("A_3_1"), alg("A_4_12")
    prof = jk_invariants(direct_sum(g1, g2))
    p1, p2 = jk_invariants(g1), jk_invariants(g2)
    assert sorted(prof.kronecker) == sorted(p1.kronecker + p2.kronecker)
    assert prof.jordan_dimension() == p1.jordan_dimension() + p2.jordan_dimension()
