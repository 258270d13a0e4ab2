"""Regenerate src/jkinvariants/catalog/data/lowdim.json from the row table below.

Relations are written as "[ei,ej]=<linear combination of e_k>" and expanded with sympy
into sparse (i, j, k, coefficient) triples. Run from the repository root.
"""

import json
import re
from pathlib import Path

import sympy

J = "-x1/a1"
K1, K3, K5 = [1], [2], [3]

# name, relations, params {name: default}, constraint, ind, kronecker, jordan, sing_codim, family
ROWS = [
    ("A_3_1", ["[e2,e3]=e1"], {}, None, 1, [1], [([2], J)], 1, ["x1", "x2"]),
    ("A_3_2", ["[e1,e3]=e1", "[e2,e3]=e1+e2"], {}, None, 1, [2], [], 2, ["x1", "x2"]),
    ("A_3_3", ["[e1,e3]=e1", "[e2,e3]=e2"], {}, None, 1, [2], [], 2, ["x1", "x2"]),
    ("A_3_4", ["[e1,e3]=e1", "[e2,e3]=-e2"], {}, None, 1, [2], [], 2, ["x1", "x2"]),
    ("A_3_5", ["[e1,e3]=e1", "[e2,e3]=a*e2"], {"a": "1/2"}, "0 < abs(a) < 1", 1, [2], [], 2,
     ["x1", "x2"]),
    ("A_3_6", ["[e1,e3]=-e2", "[e2,e3]=e1"], {}, None, 1, [2], [], 2, ["x1", "x2"]),
    ("A_3_7", ["[e1,e3]=a*e1-e2", "[e2,e3]=e1+a*e2"], {"a": "1"}, "a > 0", 1, [2], [], 2,
     ["x1", "x2"]),
    ("A_3_8", ["[e1,e3]=-2*e2", "[e1,e2]=e1", "[e2,e3]=e3"], {}, None, 1, [2], [], 3,
     ["2*(x2^2+x1*x3)", "2*(a3*x1+2*a2*x2+a1*x3)"]),
    ("A_3_9", ["[e1,e2]=e3", "[e2,e3]=e1", "[e3,e1]=e2"], {}, None, 1, [2], [], 3,
     ["x1^2+x2^2+x3^2", "2*(a1*x1+a2*x2+a3*x3)"]),
    ("A_4_1", ["[e2,e4]=e1", "[e3,e4]=e2"], {}, None, 2, [2, 1], [], 2, ["x1", "x2", "x3"]),
    ("A_4_2", ["[e1,e4]=a*e1", "[e2,e4]=e2", "[e3,e4]=e2+e3"], {"a": "2"}, "a != 0", 2, [2, 1],
     [], 3, ["x1", "x2", "x3"]),
    ("A_4_3", ["[e1,e4]=e1", "[e3,e4]=e2"], {}, None, 2, [2, 1], [], 2, ["x1", "x2", "x3"]),
    ("A_4_4", ["[e1,e4]=e1", "[e2,e4]=e1+e2", "[e3,e4]=e2+e3"], {}, None, 2, [2, 1], [], 3,
     ["x1", "x2", "x3"]),
    ("A_4_5", ["[e1,e4]=e1", "[e2,e4]=a*e2", "[e3,e4]=b*e3"], {"a": "1/3", "b": "1/2"},
     "a*b != 0 and -1 <= a <= b <= 1", 2, [2, 1], [], 3, ["x1", "x2", "x3"]),
    ("A_4_6", ["[e1,e4]=a*e1", "[e2,e4]=b*e2-e3", "[e3,e4]=e2+b*e3"], {"a": "1", "b": "1/2"},
     "a != 0 and b >= 0", 2, [2, 1], [], 3, ["x1", "x2", "x3"]),
    ("A_4_7", ["[e2,e3]=e1", "[e1,e4]=2*e1", "[e2,e4]=e2", "[e3,e4]=e2+e3"], {}, None, 0, [],
     [([4], J)], 1, ["x1", "x2"]),
    ("A_4_8", ["[e2,e3]=e1", "[e2,e4]=e2", "[e3,e4]=-e3"], {}, None, 2, [2, 1], [], 3,
     ["x1", "2*(x2*x3-x1*x4)", "2*(-a4*x1+a3*x2+a2*x3-a1*x4)"]),
    ("A_4_9", ["[e2,e3]=e1", "[e1,e4]=(1+b)*e1", "[e2,e4]=e2", "[e3,e4]=b*e3"], {"b": "1/2"},
     "-1 < b <= 1", 0, [], [([4], J)], 1, ["x1", "x2"]),
    ("A_4_10", ["[e2,e3]=e1", "[e2,e4]=-e3", "[e3,e4]=e2"], {}, None, 2, [2, 1], [], 3,
     ["x1", "2*x1*x4+x2^2+x3^2", "2*(a4*x1+a2*x2+a3*x3+a1*x4)"]),
    ("A_4_11", ["[e2,e3]=e1", "[e1,e4]=2*a*e1", "[e2,e4]=a*e2-e3", "[e3,e4]=e2+a*e3"],
     {"a": "1"}, "a > 0", 0, [], [([4], J)], 1, ["x1", "x2"]),
    ("A_4_12", ["[e1,e3]=e1", "[e2,e3]=e2", "[e1,e4]=-e2", "[e2,e4]=e1"], {}, None, 0, [],
     [([2], "-(x1+i*x2)/(a1+i*a2)"), ([2], "-(x1-i*x2)/(a1-i*a2)")], 1, ["x1", "x2"]),
    ("A_5_1", ["[e3,e5]=e1", "[e4,e5]=e2"], {}, None, 3, [2, 1, 1], [], 2,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_2", ["[e2,e5]=e1", "[e3,e5]=e2", "[e4,e5]=e3"], {}, None, 3, [2, 1, 1], [], 3,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_3", ["[e3,e4]=e2", "[e3,e5]=e1", "[e4,e5]=e3"], {}, None, 3, [2, 1, 1], [], 3,
     ["x1", "x2", "x3^2+2*x2*x5-2*x1*x4", "2*(-a4*x1+a5*x2+a3*x3-a1*x4+a2*x5)"]),
    ("A_5_4", ["[e2,e4]=e1", "[e3,e5]=e1"], {}, None, 1, [1], [([2, 2], J)], 1,
     ["x1", "x2", "x3"]),
    ("A_5_5", ["[e3,e4]=e1", "[e2,e5]=e1", "[e3,e5]=e2"], {}, None, 1, [1], [([4], J)], 1,
     ["x1", "x2", "x3"]),
    ("A_5_6", ["[e3,e4]=e1", "[e2,e5]=e1", "[e3,e5]=e2", "[e4,e5]=e3"], {}, None, 1, [1],
     [([4], J)], 1, ["x1", "x2", "x3"]),
    ("A_5_7", ["[e1,e5]=e1", "[e2,e5]=a*e2", "[e3,e5]=b*e3", "[e4,e5]=c*e4"],
     {"a": "1/2", "b": "1/3", "c": "-1/4"}, "a*b*c != 0 and -1 <= c <= b <= a <= 1", 3,
     [2, 1, 1], [], 4, ["x1", "x2", "x3", "x4"]),
    ("A_5_8", ["[e2,e5]=e1", "[e3,e5]=e3", "[e4,e5]=c*e4"], {"c": "1/2"}, "0 < abs(c) <= 1", 3,
     [2, 1, 1], [], 3, ["x1", "x2", "x3", "x4"]),
    ("A_5_9", ["[e1,e5]=e1", "[e2,e5]=e1+e2", "[e3,e5]=b*e3", "[e4,e5]=c*e4"],
     {"b": "1", "c": "1/2"}, "c != 0 and c <= b", 3, [2, 1, 1], [], 4,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_10", ["[e2,e5]=e1", "[e3,e5]=e2", "[e4,e5]=e4"], {}, None, 3, [2, 1, 1], [], 3,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_11", ["[e1,e5]=e1", "[e2,e5]=e1+e2", "[e3,e5]=e2+e3", "[e4,e5]=c*e4"], {"c": "1/2"},
     "c != 0", 3, [2, 1, 1], [], 4, ["x1", "x2", "x3", "x4"]),
    ("A_5_12", ["[e1,e5]=e1", "[e2,e5]=e1+e2", "[e3,e5]=e2+e3", "[e4,e5]=e3+e4"], {}, None, 3,
     [2, 1, 1], [], 4, ["x1", "x2", "x3", "x4"]),
    ("A_5_13", ["[e1,e5]=e1", "[e2,e5]=a*e2", "[e3,e5]=p*e3-q*e4", "[e4,e5]=q*e3+p*e4"],
     {"a": "1/2", "p": "1", "q": "1"}, "a*q != 0 and abs(a) <= 1", 3, [2, 1, 1], [], 4,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_14", ["[e2,e5]=e1", "[e3,e5]=p*e3-e4", "[e4,e5]=e3+p*e4"], {"p": "1"}, None, 3,
     [2, 1, 1], [], 3, ["x1", "x2", "x3", "x4"]),
    ("A_5_15", ["[e1,e5]=e1", "[e2,e5]=e1+e2", "[e3,e5]=a*e3", "[e4,e5]=e3+a*e4"],
     {"a": "1/2"}, "abs(a) <= 1", 3, [2, 1, 1], [], 4, ["x1", "x2", "x3", "x4"]),
    ("A_5_16", ["[e1,e5]=e1", "[e2,e5]=e1+e2", "[e3,e5]=p*e3-q*e4", "[e4,e5]=q*e3+p*e4"],
     {"p": "1", "q": "1"}, "q != 0", 3, [2, 1, 1], [], 4, ["x1", "x2", "x3", "x4"]),
    ("A_5_17", ["[e1,e5]=p*e1-e2", "[e2,e5]=e1+p*e2", "[e3,e5]=q*e3-s*e4", "[e4,e5]=s*e3+q*e4"],
     {"p": "1", "q": "1/2", "s": "1"}, "s != 0", 3, [2, 1, 1], [], 4,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_18", ["[e1,e5]=p*e1-e2", "[e2,e5]=e1+p*e2", "[e3,e5]=e1+p*e3-e4",
                "[e4,e5]=e2+e3+p*e4"], {"p": "-1"}, "p <= 0", 3, [2, 1, 1], [], 4,
     ["x1", "x2", "x3", "x4"]),
    ("A_5_19", ["[e2,e3]=e1", "[e1,e5]=a*e1", "[e2,e5]=e2", "[e3,e5]=(a-1)*e3", "[e4,e5]=b*e4"],
     {"a": "2", "b": "1"}, "b != 0", 1, [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_20", ["[e2,e3]=e1", "[e1,e5]=a*e1", "[e2,e5]=e2", "[e3,e5]=(a-1)*e3",
                "[e4,e5]=e1+a*e4"], {"a": "2"}, None, 1, [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_21", ["[e2,e3]=e1", "[e1,e5]=2*e1", "[e2,e5]=e2+e3", "[e3,e5]=e3+e4", "[e4,e5]=e4"],
     {}, None, 1, [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_22", ["[e2,e3]=e1", "[e2,e5]=e3", "[e4,e5]=e4"], {}, None, 1, [1],
     [([2], "-x1/a1"), ([2], "-x4/a4")], 1, ["x1", "x2", "x4"]),
    ("A_5_23", ["[e2,e3]=e1", "[e1,e5]=2*e1", "[e2,e5]=e2+e3", "[e3,e5]=e3", "[e4,e5]=b*e4"],
     {"b": "1"}, "b != 0", 1, [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_24", ["[e2,e3]=e1", "[e1,e5]=2*e1", "[e2,e5]=e2+e3", "[e3,e5]=e3",
                "[e4,e5]=eps*e1+2*e4"], {"eps": "1"}, "eps == 1 or eps == -1", 1, [2],
     [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_25", ["[e2,e3]=e1", "[e1,e5]=2*p*e1", "[e2,e5]=p*e2+e3", "[e3,e5]=p*e3-e2",
                "[e4,e5]=b*e4"], {"b": "1", "p": "1"}, "b != 0", 1, [2], [([2], J)], 1,
     ["x1", "x2", "x4"]),
    ("A_5_26", ["[e2,e3]=e1", "[e1,e5]=2*p*e1", "[e2,e5]=p*e2+e3", "[e3,e5]=p*e3-e2",
                "[e4,e5]=eps*e1+2*e4"], {"eps": "1", "p": "1"}, "eps == 1 or eps == -1", 1,
     [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_27", ["[e2,e3]=e1", "[e1,e5]=e1", "[e3,e5]=e3+e4", "[e4,e5]=e1+e4"], {}, None, 1, [2],
     [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_28", ["[e2,e3]=e1", "[e1,e5]=a*e1", "[e2,e5]=(a-1)*e2", "[e3,e5]=e3+e4",
                "[e4,e5]=e4"], {"a": "2"}, None, 1, [2], [([2], J)], 1, ["x1", "x2", "x4"]),
    ("A_5_29", ["[e2,e4]=e1", "[e1,e5]=e1", "[e2,e5]=e2", "[e4,e5]=e3"], {}, None, 1, [1],
     [([4], J)], 1, ["x1", "x2", "x3"]),
    ("A_5_30", ["[e2,e4]=e1", "[e3,e4]=e2", "[e1,e5]=(a+1)*e1", "[e2,e5]=a*e2",
                "[e3,e5]=(a-1)*e3", "[e4,e5]=e4"], {"a": "1/2"}, None, 1, [3], [], 2,
     ["x1", "x2", "x3"]),
    ("A_5_31", ["[e2,e4]=e1", "[e3,e4]=e2", "[e1,e5]=3*e1", "[e2,e5]=2*e2", "[e3,e5]=e3",
                "[e4,e5]=e3+e4"], {}, None, 1, [3], [], 2, ["x1", "x2", "x3"]),
    ("A_5_32", ["[e2,e4]=e1", "[e3,e4]=e2", "[e1,e5]=e1", "[e2,e5]=e2", "[e3,e5]=a*e1+e3"],
     {"a": "1"}, None, 1, [3], [], 2, ["x1", "x2", "x3"]),
    ("A_5_33", ["[e1,e4]=e1", "[e3,e4]=b*e3", "[e2,e5]=e2", "[e3,e5]=a*e3"],
     {"a": "1", "b": "2"}, "a^2 + b^2 != 0", 1, [3], [], 3, ["x1", "x2", "x3"]),
    ("A_5_34", ["[e1,e4]=a*e1", "[e2,e4]=e2", "[e3,e4]=e3", "[e1,e5]=e1", "[e3,e5]=e2"],
     {"a": "2"}, None, 1, [3], [], 2, ["x1", "x2", "x3"]),
    ("A_5_35", ["[e1,e4]=b*e1", "[e2,e4]=e2", "[e3,e4]=e3", "[e1,e5]=a*e1", "[e2,e5]=-e3",
                "[e3,e5]=e2"], {"a": "1", "b": "2"}, "a^2 + b^2 != 0", 1, [3], [], 2,
     ["x1", "x2", "x3"]),
    ("A_5_36", ["[e2,e3]=e1", "[e1,e4]=e1", "[e2,e4]=e2", "[e2,e5]=-e2", "[e3,e5]=e3"], {}, None,
     1, [3], [], 2,
     ["(a1^2*x5+a1*a3*x2+a1*a2*x3-a2*a3*x1)/a1^2",
      "(a1^2*x2*x3-a1*a3*x1*x2-a1*a2*x1*x3+a2*a3*x1^2)/a1^3",
      "(-a1^2*x1*x2*x3+a1*a3*x1^2*x2+a1*a2*x1^2*x3-a2*a3*x1^3)/a1^4"]),
    ("A_5_37", ["[e2,e3]=e1", "[e1,e4]=2*e1", "[e2,e4]=e2", "[e3,e4]=e3", "[e2,e5]=-e3",
                "[e3,e5]=e2"], {}, None, 1, [3], [], 2,
     ["(-(a2^2+a3^2)*x1+2*a1*a2*x2+2*a1*a3*x3+2*a1^2*x5)/a1^2",
      "((a2^2+a3^2)*x1^2-2*a1*a2*x1*x2-2*a1*a3*x1*x3+a1^2*x2^2+a1^2*x3^2)/a1^3",
      "(-(a2^2+a3^2)*x1^3+2*a1*a2*x1^2*x2+2*a1*a3*x1^2*x3-a1^2*x1*x2^2-a1^2*x1*x3^2)/a1^4"]),
    ("A_5_38", ["[e1,e4]=e1", "[e2,e5]=e2", "[e4,e5]=e3"], {}, None, 1, [1],
     [([2], "-x1/a1"), ([2], "-x2/a2")], 1, ["x1", "x2", "x3"]),
    ("A_5_39", ["[e1,e4]=e1", "[e2,e4]=e2", "[e1,e5]=-e2", "[e2,e5]=e1", "[e4,e5]=e3"], {}, None,
     1, [1], [([2], "-(x1+i*x2)/(a1+i*a2)"), ([2], "-(x1-i*x2)/(a1-i*a2)")], 1,
     ["x1", "x2", "x3"]),
    ("A_5_40", ["[e1,e2]=2*e1", "[e1,e3]=-e2", "[e2,e3]=2*e3", "[e1,e4]=e5", "[e2,e4]=e4",
                "[e2,e5]=-e5", "[e3,e5]=e4"], {}, None, 1, [3], [], 2,
     ["x1*x4^2-x2*x4*x5-x3*x5^2",
      "2*a4*x1*x4+a1*x4^2-a5*x2*x4-a4*x2*x5-a2*x4*x5-2*a5*x3*x5-a3*x5^2",
      "a4^2*x1-a4*a5*x2-a5^2*x3+(2*a1*a4-a2*a5)*x4-(a2*a4+2*a3*a5)*x5"]),
]

_REL = re.compile(r"\[e(\d+),e(\d+)\]=(.+)")


def relation_triples(rel: str, dim: int, params):
    m = _REL.fullmatch(rel.replace(" ", ""))
    if not m:
        raise ValueError(f"bad relation {rel!r}")
    i, j, rhs = int(m.group(1)), int(m.group(2)), m.group(3)
    es = sympy.symbols(f"e1:{dim + 1}")
    local = {str(e): e for e in es}
    local.update({p: sympy.Symbol(p) for p in params})
    expr = sympy.expand(sympy.sympify(rhs, locals=local))
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    out = []
    for k, e in enumerate(es, start=1):
        coeff = sympy.expand(sign * expr.coeff(e))
        if coeff != 0:
            out.append([i, j, k, str(coeff).replace("**", "^")])
    return out


def build():
    records = []
    for name, rels, params, constraint, ind, kron, jordan, codim, family in ROWS:
        dim = int(name.split("_")[1])
        triples = [t for rel in rels for t in relation_triples(rel, dim, params)]
        records.append({
            "name": name,
            "dim": dim,
            "brackets": triples,
            "params": params,
            "constraint": constraint,
            "relations": rels,
            "expect": {
                "index": ind,
                "profile": {
                    "kronecker": kron,
                    "jordan": [{"sizes": sizes, "root_formula": f} for sizes, f in jordan],
                },
                "sing_codim": codim,
                "char_formulas": [f for _, f in jordan],
                "family": family,
            },
        })
    return records


if __name__ == "__main__":
    out = Path("src/jkinvariants/catalog/data/lowdim.json")
    out.write_text(json.dumps(build(), indent=1) + "\n")
    print(f"wrote {out}")
