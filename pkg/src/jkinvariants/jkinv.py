"""Jordan-Kronecker invariants of a Lie algebra from sampled generic pencils A_x + λA_a."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import Sequence

from .exactcore.field import GaussRat
from .exactcore.matrix import principal_submatrix, rank_exact
from .exactcore.roots import exact_roots
from .exactcore.unipoly import UniPoly, squarefree_decompose, squarefree_part
from .expr import evaluate
from .liealg import (
    StructureConstants,
    annihilator,
    annihilator_subalgebra,
    index,
    poisson_matrix,
    random_covector,
)
from .pencil import (
    INFINITY,
    JKProfile,
    Pencil,
    characteristic_polynomial,
    jk_profile,
    jordan_counts_at,
)


class SamplingError(RuntimeError):
    pass


class ClassificationError(RuntimeError):
    """Independent type criteria disagree; indicates a bug."""


@dataclass
class GenericPairCertificate:
    x: list
    a: list
    profile: JKProfile
    agreement_count: int
    trials: int
    seed: object
    char_polys: list = field(default_factory=list)  # p(λ) of every sample, in sampling order
    sample_types: list = field(default_factory=list)
    perturbation_stable: bool = True

    def to_dict(self) -> dict:
        from .exactcore.field import fmt_rat

        return {
            "x": [fmt_rat(v) for v in self.x],
            "a": [fmt_rat(v) for v in self.a],
            "profile": self.profile.to_dict(),
            "summary": self.profile.summary(),
            "agreement": f"{self.agreement_count}/{self.trials}",
            "perturbation_stable": self.perturbation_stable,
        }


def pencil_at(g: StructureConstants, x: Sequence, a: Sequence) -> Pencil:
    return Pencil(poisson_matrix(g, x), poisson_matrix(g, a))


def _perturb(rng: random.Random, v: Sequence) -> list:
    w = list(v)
    j = rng.randrange(len(w))
    w[j] += rng.choice((1, -1))
    return w


def sample_generic_pair(g: StructureConstants, trials: int = 5, seed=0,
                        box: int = 10) -> GenericPairCertificate:
    """Modal JK type over random integer pairs, confirmed by a ±1 perturbation."""
    if trials < 3:
        raise ValueError("trials must be >= 3")
    rng = random.Random(seed)
    samples = []
    for _ in range(trials):
        x = random_covector(rng, g.dim, box)
        a = random_covector(rng, g.dim, box)
        P = pencil_at(g, x, a)
        samples.append((x, a, jk_profile(P, seed), characteristic_polynomial(P)))
    types = [s[2].algebraic_type() for s in samples]
    counts = {t: types.count(t) for t in types}
    best = max(counts.values())
    modal = next(t for t in types if counts[t] == best)
    if best < ceil(trials / 2) or list(counts.values()).count(best) > 1:
        raise SamplingError(
            f"no majority JK type among {trials} samples ({sorted(counts.values(), reverse=True)}); "
            "try a larger coordinate box"
        )
    stable = False
    chosen = None
    for x, a, prof, _ in samples:
        if prof.algebraic_type() != modal:
            continue
        chosen = chosen or (x, a, prof)
        x2, a2 = _perturb(rng, x), _perturb(rng, a)
        if any(x2) and any(a2) and jk_profile(pencil_at(g, x2, a2), seed).algebraic_type() == modal:
            chosen, stable = (x, a, prof), True
            break
    x, a, prof = chosen
    return GenericPairCertificate(x, a, prof, best, trials, seed, [s[3] for s in samples],
                                  types, stable)


def jk_invariants(g: StructureConstants, seed=0, trials: int = 5, box: int = 10) -> JKProfile:
    return sample_generic_pair(g, trials, seed, box).profile


def profile_type(prof: JKProfile) -> str:
    if not prof.strata:
        return "Kronecker"
    if not prof.kronecker:
        return "Jordan"
    return "mixed"


def classify(g: StructureConstants, seed=0, trials: int = 5, box: int = 10,
             certificate: GenericPairCertificate | None = None) -> str:
    """Kronecker / Jordan / mixed, cross-checked against p ≡ 1 and index = 0."""
    cert = certificate or sample_generic_pair(g, trials, seed, box)
    kind = profile_type(cert.profile)
    # the p ≡ 1 criterion is read off the samples themselves, not off the profile
    modal = max(cert.sample_types, key=cert.sample_types.count) if cert.sample_types else None
    generic_polys = [p for p, t in zip(cert.char_polys, cert.sample_types) if t == modal]
    trivial_p = all(p.degree() == 0 for p in generic_polys) and not cert.profile.has_infinite_eigenvalue
    frobenius = index(g, seed=seed, box=box) == 0
    if (kind == "Kronecker") != trivial_p or (kind == "Jordan") != frobenius:
        raise ClassificationError(
            f"type criteria disagree: profile says {kind}, p≡1 is {trivial_p}, index 0 is {frobenius}"
        )
    return kind


# -- singular set along a line ----------------------------------------------------------


@dataclass
class SingularLineReport:
    p: UniPoly
    strata: list
    distinct_roots: int
    degree: int
    codim1_detected: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p.to_str(),
            "strata": [{"poly": q.to_str(), "multiplicity": e} for q, e in self.strata],
            "distinct_roots": self.distinct_roots,
            "degree": self.degree,
            "codim1_detected": self.codim1_detected,
        }


def singular_line_report(g: StructureConstants, x: Sequence, a: Sequence) -> SingularLineReport:
    p = characteristic_polynomial(pencil_at(g, x, a))
    strata = squarefree_decompose(p)
    return SingularLineReport(p, strata, max(squarefree_part(p).degree(), 0), p.degree(),
                              p.degree() > 0)


def _formula_env(x: Sequence, a: Sequence) -> dict:
    env = {f"x{k + 1}": Fraction(v) for k, v in enumerate(x)}
    env.update({f"a{k + 1}": Fraction(v) for k, v in enumerate(a)})
    return env


def eval_formula(formula: str, x: Sequence, a: Sequence):
    return evaluate(formula, _formula_env(x, a))


def formula_divides(formula: str, p: UniPoly, x: Sequence, a: Sequence) -> bool | None:
    """Whether λ - formula(x, a) divides p exactly; None when the formula is undefined."""
    try:
        lam = eval_formula(formula, x, a)
    except ZeroDivisionError:
        return None
    if isinstance(lam, GaussRat) and lam.im == 0:
        lam = lam.re
    return p(lam) == 0


def verify_char_formula(g: StructureConstants, formula: str, samples: int = 3, seed=0,
                        box: int = 10, trials: int = 5) -> bool:
    """Evaluate the claimed characteristic number at generic pairs and test p(λ) = 0 exactly."""
    cert = sample_generic_pair(g, trials, seed, box)
    modal = cert.profile.algebraic_type()
    rng = random.Random(f"{seed}-formula")
    checked = 0
    for _ in range(50 * samples):
        x, a = random_covector(rng, g.dim, box), random_covector(rng, g.dim, box)
        P = pencil_at(g, x, a)
        if jk_profile(P, seed).algebraic_type() != modal:
            continue
        ok = formula_divides(formula, characteristic_polynomial(P), x, a)
        if ok is None:
            continue
        if not ok:
            return False
        checked += 1
        if checked == samples:
            return True
    raise SamplingError(f"could not find {samples} usable generic samples for {formula!r}")


# -- singular points, annihilators and the index of Ann a ---------------------------------


def singular_point(g: StructureConstants, seed=0, box: int = 10, attempts: int = 20, witness=None):
    """A covector y in Sing found as x + λ0 a for a rational characteristic number λ0.

    ``witness(rng, box)`` is used instead when given (for algebras whose characteristic
    numbers are irrational); its output is checked to be singular.
    """
    rng = random.Random(f"{seed}-singular")
    if witness is not None:
        ind = index(g, seed=seed, box=box)
        for _ in range(attempts):
            y = witness(rng, box)
            if g.dim - rank_exact(poisson_matrix(g, y)) > ind:
                return y
        return None
    for _ in range(attempts):
        x, a = random_covector(rng, g.dim, box), random_covector(rng, g.dim, box)
        p = characteristic_polynomial(pencil_at(g, x, a))
        for r in exact_roots(p) if p.degree() > 0 else []:
            if isinstance(r, Fraction):
                y = [xi + r * ai for xi, ai in zip(x, a)]
                if any(y):
                    return y
    return None


@dataclass
class ElashviliResult:
    ind_ann: int
    ind_g: int
    nontrivial_blocks_at_a: int
    total_blocks_at_a: int
    dim_ann: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def elashvili_check(g: StructureConstants, a: Sequence, seed=0, box: int = 10,
                    trials: int = 5) -> ElashviliResult:
    """ind Ann a = ind g  <=>  A_x + λA_a has no non-trivial Jordan blocks at λ = ∞."""
    ann = annihilator(g, a)
    sub = annihilator_subalgebra(g, a)
    ind_ann = index(sub, trials=trials, seed=seed, box=box) if sub.dim else 0
    ind_g = index(g, trials=trials, seed=seed, box=box)
    rng = random.Random(f"{seed}-elashvili")
    best = None
    for _ in range(trials):
        x = random_covector(rng, g.dim, box)
        counts = jordan_counts_at(pencil_at(g, x, a), INFINITY)
        # generic x minimises the rank drop of A restricted to Ker A_a
        if best is None or counts[1] < best[1]:
            best = counts
    total, nontrivial = best
    if (ind_ann == ind_g) != (nontrivial == 0) or 2 * nontrivial != ind_ann - ind_g:
        raise ClassificationError(
            f"Ann-index criterion failed: ind Ann a = {ind_ann}, ind g = {ind_g}, "
            f"non-trivial blocks at a = {nontrivial}"
        )
    return ElashviliResult(ind_ann, ind_g, nontrivial, total, ann.dim)


@dataclass
class VorontsovResult:
    dominates: bool
    sum_matches: bool
    equality_holds: bool
    kronecker: tuple
    degrees: tuple

    def __bool__(self):
        return self.dominates and (self.equality_holds or not self.sum_matches)


def vorontsov_check(g: StructureConstants, invariant_degrees: Sequence[int], seed=0,
                    profile: JKProfile | None = None) -> VorontsovResult:
    """Sorted invariant degrees dominate sorted Kronecker indices; equal when Σ deg = (dim+ind)/2."""
    prof = profile or jk_invariants(g, seed)
    ks = tuple(sorted(prof.kronecker))
    ms = tuple(sorted(invariant_degrees))
    if len(ms) != len(ks):
        raise ValueError(f"expected {len(ks)} invariant degrees (the index), got {len(ms)}")
    dominates = all(m >= k for m, k in zip(ms, ks))
    sum_matches = 2 * sum(ms) == g.dim + len(ks)
    return VorontsovResult(dominates, sum_matches, ms == ks, ks, ms)


# -- codimension of the singular set -----------------------------------------------------


def _max_independent_set(supports: list, nvars: int) -> int:
    """Largest variable set containing the support of no leading monomial."""
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def sing_codim(g: StructureConstants, seed=0, max_dim: int = 10) -> int | None:
    """Codimension of Sing over C: principal Pfaffians of order dim - ind, Groebner basis,
    then the dimension of the initial monomial ideal. None when Sing is empty."""
    import sympy

    from .involution import symbolic_pfaffian, symbolic_poisson_matrix

    n = g.dim
    ind = index(g, seed=seed)
    order = n - ind
    if order == 0:
        return None
    if ind == 0:
        return 1  # the hypersurface Pf(A_x) = 0
    if n > max_dim:
        raise ValueError(f"symbolic singular-set computation limited to dim <= {max_dim}")
    M = symbolic_poisson_matrix(g)
    gens = sympy.symbols(f"x1:{n + 1}")
    polys = []
    for idx in combinations(range(n), order):
        pf = symbolic_pfaffian(principal_submatrix(M, idx))
        if not pf.is_zero():
            polys.append(sum(sympy.Rational(c.numerator, c.denominator)
                             * sympy.prod([v ** k for v, k in zip(gens, e)])
                             for e, c in pf.terms.items()))
    if not polys:
        return 0
    G = sympy.groebner(polys, *gens, order="grevlex")
    if list(G.exprs) == [1]:
        return None
    supports = []
    for poly in G.polys:
        lm = poly.monoms(order="grevlex")[0]
        supports.append({i for i, k in enumerate(lm) if k})
    return n - _max_independent_set(supports, n)


__all__ = [
    "ClassificationError",
    "ElashviliResult",
    "GenericPairCertificate",
    "SamplingError",
    "SingularLineReport",
    "VorontsovResult",
    "classify",
    "elashvili_check",
    "eval_formula",
    "formula_divides",
    "jk_invariants",
    "pencil_at",
    "profile_type",
    "sample_generic_pair",
    "sing_codim",
    "singular_line_report",
    "singular_point",
    "verify_char_formula",
    "vorontsov_check",
]
