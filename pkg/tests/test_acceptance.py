"""One test per acceptance criterion; each prints a one-line summary."""

import random
import time
from fractions import Fraction

from jkinvariants import catalog
from jkinvariants.canonical import canonicalize
from jkinvariants.catalog.check import jordan_multiset, verify_record
from jkinvariants.catalog.constructions import aff_invariant
from jkinvariants.exactcore.matrix import congruence, det, form, rank_exact
from jkinvariants.exactcore.roots import NonSplitError, exact_roots
from jkinvariants.exactcore.unipoly import poly_gcd
from jkinvariants.involution import (
    completeness_count,
    frobenius_family,
    pfaffian_polynomial,
    verify_biinvolution,
)
from jkinvariants.jkinv import (
    classify,
    elashvili_check,
    jk_invariants,
    pencil_at,
    sample_generic_pair,
    singular_point,
    verify_char_formula,
)
from jkinvariants.liealg import (
    annihilator,
    annihilator_subalgebra,
    centre,
    direct_sum,
    index,
    random_covector,
)
from jkinvariants.pencil import (
    characteristic_polynomial,
    corank,
    core_subspace,
    jk_profile,
    jordan_counts_at,
    jordan_structure,
    jordan_structure_smith,
    pencil_rank,
    recursion_chains,
)

F = Fraction


def summary(n, ok, detail):
    print(f"criterion {n}: {detail}")
    return ok


def test_criterion_1_corpus_reproduction():
    t0 = time.perf_counter()
    failures = {}
    rows = catalog.table_rows()
    for name in rows:
        res = verify_record(catalog.load(name), seed=0)
        if res.report_only:
            continue
        if not res.passed:
            failures[name] = res.failures()
    elapsed = time.perf_counter() - t0
    detail = f"{len(rows) - len(failures)}/{len(rows)} table rows reproduced in {elapsed:.0f} s"
    if failures:
        detail += f"; failing: {failures}"
    summary(1, not failures, detail)
    assert elapsed < 300
    assert not failures, failures


def test_criterion_2_table_families():
    rng = random.Random(2)
    bad, count = [], 0
    for name in catalog.table_rows():
        rec = catalog.load(name)
        if not rec.family_templates:
            continue
        count += 1
        g = rec.algebra
        target = (g.dim + index(g)) // 2
        for _ in range(3):
            a = random_covector(rng, g.dim)
            fam = rec.family(a)
            if not verify_biinvolution(g, a, fam):
                bad.append((name, "bi-involution", a))
            cnt = completeness_count(g, fam, samples=3, seed=rng.randint(0, 10**6))
            if cnt != target:
                bad.append((name, f"completeness {cnt} vs {target}", a))
    summary(2, not bad, f"{count} families x 3 shift covectors; problems: {bad}")
    assert not bad


def test_criterion_3_semisimple():
    expected = {"sl2": [2], "sl3": [2, 3], "sl4": [2, 3, 4], "so4": [2, 2], "so5": [2, 4], "sp4": [2, 4]}
    got = {}
    for name, ks in expected.items():
        g = catalog.load(name).algebra
        got[name] = (sorted(jk_invariants(g).kronecker), classify(g))
    ok = all(got[n] == (ks, "Kronecker") for n, ks in expected.items())
    summary(3, ok, ", ".join(f"{n}->{k[0]}" for n, k in got.items()))
    assert ok, got


def test_criterion_4_contraction():
    profs = {n: jk_invariants(catalog.load(n).algebra) for n in ("e3", "e3_contracted", "so4")}
    shapes = {n: (sorted(p.kronecker), p.strata) for n, p in profs.items()}
    ok = all(s == ([2, 2], ()) for s in shapes.values())
    summary(4, ok, ", ".join(f"{n}: {p.summary()}" for n, p in profs.items()))
    assert ok


def test_criterion_5_aff():
    rng = random.Random(5)
    notes = []
    ok = True
    for n in (2, 3):
        g = catalog.load(f"aff{n}").algebra
        half = g.dim // 2
        cert = sample_generic_pair(g)
        prof = cert.profile
        roots_ok = jordan_multiset(prof) == [[2]] * half and not prof.kronecker
        p = characteristic_polynomial(pencil_at(g, cert.x, cert.a))
        distinct = p.degree() == half and poly_gcd(p, p.derivative()).degree() == 0
        kind = classify(g)
        a = random_covector(rng, g.dim)
        fam = frobenius_family(g, a)
        inv = bool(verify_biinvolution(g, a, fam))
        cnt = completeness_count(g, fam)
        Pf, I = pfaffian_polynomial(g), aff_invariant(n)
        ratios = set()
        for _ in range(5):
            pt = random_covector(rng, g.dim)
            ratios.add(F(Pf(pt)) / I(pt) if I(pt) else None)
        scalar_ok = len(ratios) == 1 and None not in ratios and 0 not in ratios
        this = kind == "Jordan" and roots_ok and distinct and inv and cnt == half and scalar_ok
        ok &= this
        notes.append(f"aff{n}: {kind}, {prof.summary()}, family {len(fam.polys)}/{cnt} independent, "
                     f"Pf/invariant = {sorted(map(str, ratios))}")
    summary(5, ok, "; ".join(notes))
    assert ok


def test_criterion_6_gl_plus():
    notes = []
    ok = True
    for n in (2, 3):
        rec = catalog.load("gl_plus", n=n)
        g = rec.algebra
        prof = jk_invariants(g)
        sizes = tuple(sorted([2] * (n - 2) + [4], reverse=True))
        strata_ok = jordan_multiset(prof) == [sorted(sizes)] * n and not prof.kronecker
        y = singular_point(g, witness=rec.singular_witness)
        ann = annihilator(g, y)
        ind_ann = index(annihilator_subalgebra(g, y))
        el = elashvili_check(g, y)
        this = (strata_ok and ann.dim == 2 * n - 2 and ind_ann == 2 and index(g) == 0
                and el.ind_ann == 2 and el.nontrivial_blocks_at_a >= 1)
        ok &= this
        notes.append(f"gl{n}+: {prof.summary()}, dim Ann y = {ann.dim}, ind Ann y = {ind_ann}, "
                     f"non-trivial blocks at y = {el.nontrivial_blocks_at_a}")
    summary(6, ok, "; ".join(notes))
    assert ok


def test_criterion_7_heisenberg():
    notes = []
    ok = True
    for n in (1, 2, 3):
        rec = catalog.load("heisenberg", n=n)
        g = rec.algebra
        h = g.dim
        formula = f"-x{h}/a{h}"
        cert = sample_generic_pair(g)
        prof = cert.profile
        p = characteristic_polynomial(pencil_at(g, cert.x, cert.a))
        root = -F(cert.x[h - 1]) / F(cert.a[h - 1])
        stratum = [s for s in prof.strata if s.poly(root) == 0]
        this = (prof.kronecker == (1,) and jordan_multiset(prof) == [[2] * n]
                and verify_char_formula(g, formula) and p(root) == 0
                and len(stratum) == 1 and stratum[0].block_sizes == (2,) * n)
        ok &= this
        notes.append(f"heisenberg{n}: {prof.summary()} at {formula}")
    summary(7, ok, "; ".join(notes))
    assert ok


def test_criterion_8_kozlov():
    notes = []
    ok = True
    for k in (2, 3):
        g = catalog.load("kozlov_kronecker", k=k).algebra
        prof = jk_invariants(g)
        this = len(prof.kronecker) == 1 and 2 * prof.kronecker[0] - 1 == g.dim and not prof.strata
        ok &= this
        notes.append(f"kozlov_kronecker{k} (dim {g.dim}): {prof.summary()}")
    g = catalog.load("kozlov_frobenius", sizes=[2, 1]).algebra
    prof = jk_invariants(g)
    ok &= jordan_multiset(prof) == [[2, 6]] and not prof.kronecker
    notes.append(f"kozlov_frobenius(2,1): {prof.summary()}")
    summary(8, ok, "; ".join(notes))
    assert ok


def _random_invertible(rng, n):
    while True:
        T = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if det(T) != 0:
            return T


def _trial(rng, rec, ind, cdim, problems, stats, t):
    g = rec.algebra
    x, a = random_covector(rng, g.dim, 6), random_covector(rng, g.dim, 6)
    P = pencil_at(g, x, a)
    prof = jk_profile(P, seed=t)
    name = rec.name

    def check(ok, what):
        if not ok:
            problems.append((t, name, what, x, a))

    check(prof.kronecker_dimension() + prof.jordan_dimension() == g.dim, "dimension sum")
    check(all(b % 2 == 0 for s in prof.strata for b in s.block_sizes), "block sizes even")
    check(len(prof.kronecker) == corank(P), "#Kronecker = corank")
    if pencil_rank(P) == g.dim - ind:
        stats["regular"] += 1
        check(len(prof.kronecker) == ind, "#Kronecker = index")
    check(sum(1 for k in prof.kronecker if k == 1) >= cdim, "trivial Kronecker >= dim centre")
    if rank_exact(P.B) == pencil_rank(P):
        fam = recursion_chains(P)
        vecs = fam.vectors()
        check(all(form(P.A, u, v) == 0 and form(P.B, u, v) == 0 for u in vecs for v in vecs),
              "chain bi-isotropy")
        check(fam.span_dim() == sum(prof.kronecker) == len(core_subspace(P)), "dim L = sum k")
        stats["chains"] += 1
    if prof.shift is None:
        for r in exact_roots(characteristic_polynomial(P)):
            if not isinstance(r, Fraction):
                continue
            sizes = [s.block_sizes for s in prof.strata if s.poly(r) == 0]
            total, nontrivial = jordan_counts_at(P, r)
            check(len(sizes) == 1 and total == len(sizes[0])
                  and nontrivial == sum(1 for b in sizes[0] if b > 2), f"counts at {r}")
            stats["roots"] += 1
    if t % 4 == 0 and g.dim <= 6:
        # elementary divisors from the Smith form pair up and match the chain-rank route
        check(jordan_structure_smith(P).strata == jordan_structure(P).strata, "Smith route agrees")
        stats["smith"] += 1
    if t % 5 == 0:
        T = _random_invertible(rng, g.dim)
        other = jk_profile(P.congruent(T), seed=t)
        check(other.algebraic_type() == prof.algebraic_type(), "congruence invariance")
        stats["congruence"] += 1
    if t % 5 == 1:
        try:
            cf = canonicalize(P)
        except NonSplitError:
            pass
        else:
            check(congruence(cf.T, P.A) == cf.A and congruence(cf.T, P.B) == cf.B, "canonical congruence")
            stats["canonical"] += 1


def test_criterion_9_property_suite():
    rng = random.Random(9)
    names = catalog.list_corpus(max_dim=10, families=True)
    recs = [catalog.load(n) for n in names]
    inds = {r.name: index(r.algebra) for r in recs}
    cdims = {r.name: centre(r.algebra).dim for r in recs}
    problems = []
    stats = {"regular": 0, "chains": 0, "roots": 0, "smith": 0, "congruence": 0, "canonical": 0}
    trials = 1000
    for t in range(trials):
        rec = rng.choice(recs)
        _trial(rng, rec, inds[rec.name], cdims[rec.name], problems, stats, t)
    # direct sums of random catalog pairs
    small = [r for r in recs if r.dim <= 5]
    for _ in range(20):
        r1, r2 = rng.choice(small), rng.choice(small)
        p1, p2 = jk_invariants(r1.algebra), jk_invariants(r2.algebra)
        p = jk_invariants(direct_sum(r1.algebra, r2.algebra))
        if sorted(p.kronecker) != sorted(p1.kronecker + p2.kronecker) or \
                jordan_multiset(p) != sorted(jordan_multiset(p1) + jordan_multiset(p2)):
            problems.append(("direct sum", r1.name, r2.name))
    detail = f"{trials} trials over {len(recs)} records ({stats}), 20 direct sums, {len(problems)} failures"
    summary(9, not problems, detail)
    assert not problems, problems[:5]


def test_criterion_10_triangular():
    notes = []
    ok = True
    for n in (3, 4):
        g = catalog.load(f"t{n}").algebra
        cert = sample_generic_pair(g)
        prof = cert.profile
        P = pencil_at(g, cert.x, cert.a)
        this = (prof.kronecker_dimension() + prof.jordan_dimension() == g.dim
                and len(prof.kronecker) == corank(P) == index(g))
        ok &= this
        notes.append(f"t{n}: index {index(g)}, {prof.summary()}, type {classify(g)}")
    summary(10, ok, "; ".join(notes))
    assert ok
