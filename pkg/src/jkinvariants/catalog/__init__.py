"""Built-in corpus: the low-dimensional table plus parametric matrix families."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable

from ..exactcore.field import Q, fmt_rat
from ..exactcore.multipoly import MultiPoly
from ..expr import evaluate, names_in
from ..involution import PolyFamily, is_casimir
from ..liealg import StructureConstants, abelian, validate_jacobi
from . import constructions as C


class CatalogError(ValueError):
    pass


@dataclass
class AlgebraRecord:
    name: str
    algebra: StructureConstants
    expected_index: int | None = None
    expected_profile: dict | None = None  # {"kronecker": [...], "jordan": [{"sizes", "root_formula"}]}
    expected_char_formulas: list = field(default_factory=list)
    expected_sing_codim: int | None = None
    family_templates: list = field(default_factory=list)
    casimirs: list = field(default_factory=list)
    origin: str = ""
    report_only: bool = False
    singular_witness: Callable | None = None  # (rng, box) -> covector in Sing, when p has no rational root

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def expected_type(self) -> str | None:
        prof = self.expected_profile
        if prof is None:
            return None
        if not prof["jordan"]:
            return "Kronecker"
        if not prof["kronecker"]:
            return "Jordan"
        return "mixed"

    def family(self, a=None) -> PolyFamily | None:
        """The stored family instantiated at the covector a (needed when it depends on a)."""
        if not self.family_templates:
            return None
        return PolyFamily([template_poly(t, self.dim, a) for t in self.family_templates], label=self.name)

    def casimir_family(self) -> PolyFamily:
        return PolyFamily([template_poly(t, self.dim) for t in self.casimirs], label=f"{self.name}-casimirs")


def _env(dim: int, a=None) -> dict:
    env = {f"x{k + 1}": MultiPoly.var(dim, k) for k in range(dim)}
    if a is not None:
        env.update({f"a{k + 1}": Fraction(v) for k, v in enumerate(a)})
    return env


def template_poly(text: str, dim: int, a=None) -> MultiPoly:
    needs_a = any(n.startswith("a") and n[1:].isdigit() for n in names_in(text))
    if needs_a and a is None:
        raise CatalogError(f"family member {text!r} depends on the covector a")
    value = evaluate(text, _env(dim, a))
    return value if isinstance(value, MultiPoly) else MultiPoly.const(dim, value)


def depends_on_a(text: str) -> bool:
    return any(n.startswith("a") and n[1:].isdigit() for n in names_in(text))


# -- the low-dimensional table ----------------------------------------------------------


@lru_cache(maxsize=1)
def _lowdim_rows() -> dict:
    data = resources.files(__package__).joinpath("data/lowdim.json").read_text()
    return {row["name"]: row for row in json.loads(data)}


def _check_constraint(row: dict, params: dict):
    constraint = row.get("constraint")
    if constraint and not evaluate(constraint, params):
        shown = ", ".join(f"{k}={fmt_rat(v)}" for k, v in sorted(params.items()))
        raise CatalogError(f"{row['name']}: parameters {shown} violate {constraint!r}")


def _load_row(name: str, params: dict) -> AlgebraRecord:
    row = _lowdim_rows()[name]
    unknown = set(params) - set(row["params"])
    if unknown:
        raise CatalogError(f"{name} has no parameter(s) {sorted(unknown)}")
    values = {k: Q(v) for k, v in row["params"].items()}
    values.update({k: Q(v) for k, v in params.items()})
    _check_constraint(row, values)
    g = StructureConstants.from_triples(row["dim"], row["brackets"], name=name, params=values)
    exp = row["expect"]
    fam = exp.get("family", [])
    return AlgebraRecord(
        name=name,
        algebra=g,
        expected_index=exp["index"],
        expected_profile=exp["profile"],
        expected_char_formulas=list(exp["char_formulas"]),
        expected_sing_codim=exp["sing_codim"],
        family_templates=list(fam),
        # a-free members that Poisson-commute with everything (semi-invariants are left out)
        casimirs=[t for t in fam if not depends_on_a(t) and is_casimir(g, template_poly(t, g.dim))],
        origin="low-dimensional table",
    )


# -- parametric families -------------------------------------------------------------------

_SEMISIMPLE = {
    ("sl", 2): [2], ("sl", 3): [2, 3], ("sl", 4): [2, 3, 4],
    ("so", 3): [2], ("so", 4): [2, 2], ("so", 5): [2, 4], ("sp", 4): [2, 4],
}


def _kron(ks, jordan=()):
    return {"kronecker": sorted(ks), "jordan": list(jordan)}


def _need(params: dict, key: str, lo: int, hi: int | None = None) -> int:
    if key not in params:
        raise CatalogError(f"missing parameter {key!r}")
    v = Q(params[key])
    if v.denominator != 1 or v < lo or (hi is not None and v > hi):
        rng = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
        raise CatalogError(f"parameter {key} must be an integer {rng}, got {fmt_rat(v)}")
    return int(v)


def _family_record(family: str, params: dict) -> AlgebraRecord:
    p = dict(params)
    if family in ("sl", "so"):
        n = _need(p, "n", 2 if family == "sl" else 3)
        g = C.sl(n) if family == "sl" else C.so(n)
        exp = _SEMISIMPLE.get((family, n))
        return AlgebraRecord(f"{family}{n}", g, len(exp) if exp else None,
                             _kron(exp) if exp else None, origin="semisimple")
    if family == "sp":
        _need(p, "n", 4, 4)
        return AlgebraRecord("sp4", C.sp4(), 2, _kron([2, 4]), origin="semisimple")
    if family in ("e", "e_contracted"):
        n = _need(p, "n", 2)
        g = C.euclidean(n) if family == "e" else C.euclidean_by_contraction(n)
        exp = _SEMISIMPLE.get(("so", n + 1))
        return AlgebraRecord(g.name, g, len(exp) if exp else None,
                             _kron(exp) if exp else None, origin="semidirect sum")
    if family == "aff":
        n = _need(p, "n", 1)
        half = (n * n + n) // 2
        return AlgebraRecord(
            f"aff{n}", C.aff(n), 0, _kron([], [{"sizes": [2], "root_formula": None}] * half),
            origin="semidirect sum",
        )
    if family == "gl_plus":
        n = _need(p, "n", 2)
        sizes = sorted([2] * (n - 2) + [4])
        fam = [f"x{k}" for k in range(n * n + 1, 2 * n * n + 1)]
        return AlgebraRecord(
            f"gl{n}_plus", C.gl_plus_matrices(n), 0,
            _kron([], [{"sizes": sizes, "root_formula": None}] * n),
            expected_sing_codim=1, family_templates=fam, origin="semidirect sum",
            singular_witness=lambda rng, box: _gl_plus_singular(n, rng, box),
        )
    if family == "t":
        n = _need(p, "n", 2)
        return AlgebraRecord(f"t{n}", C.upper_triangular(n), origin="upper triangular",
                             report_only=True)
    if family == "heisenberg":
        n = _need(p, "n", 1)
        d = 2 * n + 1
        root = f"-x{d}/a{d}"
        return AlgebraRecord(
            f"heisenberg{n}", C.heisenberg(n), 1,
            _kron([1], [{"sizes": [2] * n, "root_formula": root}]),
            expected_char_formulas=[root], expected_sing_codim=1,
            casimirs=[f"x{d}"], origin="heisenberg",
        )
    if family == "kozlov_kronecker":
        k = _need(p, "k", 1)
        product = "*".join(f"x{k + j}" for j in range(1, k + 2))
        return AlgebraRecord(
            f"kozlov_kronecker{k}", C.kozlov_kronecker(k), 1, _kron([k + 1]),
            expected_sing_codim=2, casimirs=[product], origin="realisation",
        )
    if family == "kozlov_frobenius":
        if "sizes" not in p:
            raise CatalogError("missing parameter 'sizes'")
        sizes = [int(s) for s in p["sizes"]]
        if not sizes or sizes[0] < max(sizes) or min(sizes) < 1:
            raise CatalogError("sizes must be positive with the first one the largest")
        b0 = sum(sizes) + 2
        root = f"-x{b0}/a{b0}"
        jordan = sorted([2 * (sizes[0] + 1)] + [2 * s for s in sizes[1:]])
        return AlgebraRecord(
            "kozlov_frobenius" + "_".join(map(str, sizes)), C.kozlov_frobenius(sizes), 0,
            _kron([], [{"sizes": jordan, "root_formula": root}]),
            expected_char_formulas=[root], expected_sing_codim=1, origin="realisation",
        )
    if family == "abelian":
        n = _need(p, "n", 1)
        return AlgebraRecord(f"abelian{n}", abelian(n), n, _kron([1] * n), origin="trivial")
    raise CatalogError(f"unknown algebra {family!r}")


def _gl_plus_singular(n: int, rng, box: int) -> list:
    """Random covector with det C = 0: the last row of C is a combination of the others."""
    while True:
        A = [Fraction(rng.randint(-box, box)) for _ in range(n * n)]
        rows = [[Fraction(rng.randint(-box, box)) for _ in range(n)] for _ in range(n - 1)]
        w = [rng.randint(-3, 3) for _ in range(n - 1)]
        rows.append([sum((wi * r[j] for wi, r in zip(w, rows)), Fraction(0)) for j in range(n)])
        if any(e for r in rows for e in r):
            return A + [e for r in rows for e in r]


FAMILIES = ("sl", "so", "sp", "e", "e_contracted", "aff", "gl_plus", "t", "heisenberg",
            "kozlov_kronecker", "kozlov_frobenius", "abelian")

# corpus name -> (family, params)
_INSTANCES = {
    "sl2": ("sl", {"n": 2}), "sl3": ("sl", {"n": 3}), "sl4": ("sl", {"n": 4}),
    "so3": ("so", {"n": 3}), "so4": ("so", {"n": 4}), "so5": ("so", {"n": 5}),
    "sp4": ("sp", {"n": 4}),
    "e3": ("e", {"n": 3}), "e3_contracted": ("e_contracted", {"n": 3}),
    "aff2": ("aff", {"n": 2}), "aff3": ("aff", {"n": 3}),
    "gl2_plus": ("gl_plus", {"n": 2}), "gl3_plus": ("gl_plus", {"n": 3}),
    "t3": ("t", {"n": 3}), "t4": ("t", {"n": 4}),
    "heisenberg1": ("heisenberg", {"n": 1}), "heisenberg2": ("heisenberg", {"n": 2}),
    "heisenberg3": ("heisenberg", {"n": 3}),
    "kozlov_kronecker2": ("kozlov_kronecker", {"k": 2}),
    "kozlov_kronecker3": ("kozlov_kronecker", {"k": 3}),
    "kozlov_frobenius2_1": ("kozlov_frobenius", {"sizes": [2, 1]}),
}


def _row_sort_key(name: str):
    _, d, k = name.split("_")
    return (int(d), int(k))


def load(name: str, **params) -> AlgebraRecord:
    """A corpus record by name; families take parameters (``load("heisenberg", n=2)``)."""
    if name in _lowdim_rows():
        rec = _load_row(name, params)
    elif name in _INSTANCES and not params:
        family, defaults = _INSTANCES[name]
        rec = _family_record(family, defaults)
    elif name in FAMILIES:
        rec = _family_record(name, params)
    else:
        raise CatalogError(f"unknown algebra {name!r}")
    bad = validate_jacobi(rec.algebra)
    if bad:
        raise CatalogError(f"{name}: Jacobi identity fails on {bad[0][0]}")
    return rec


def list_corpus(dim: int | None = None, type: str | None = None, max_dim: int | None = None,
                families: bool | None = None) -> list[str]:
    """Deterministic list of record names: table rows by (dim, number), then the families.

    Filters select among the table rows; the parametric families join the list when
    no filter is given or when ``families=True``.
    """
    filtered = not (dim is None and type is None and max_dim is None)
    names = sorted(_lowdim_rows(), key=_row_sort_key)
    if families or (families is None and not filtered):
        names += list(_INSTANCES)
    if not filtered:
        return names
    out = []
    for name in names:
        rec = load(name)
        if dim is not None and rec.dim != dim:
            continue
        if max_dim is not None and rec.dim > max_dim:
            continue
        if type is not None and rec.expected_type != type:
            continue
        out.append(name)
    return out


def table_rows() -> list[str]:
    return sorted(_lowdim_rows(), key=_row_sort_key)


__all__ = [
    "AlgebraRecord",
    "CatalogError",
    "FAMILIES",
    "list_corpus",
    "load",
    "table_rows",
    "template_poly",
]
