"""Write the bundled catalog files in crates/core/catalogs/.

Values are entered in whatever cyclotomic form is convenient; the loader
normalizes. Every file is checked by the validators in the test suite.
"""
import itertools
import json
import os
import subprocess
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "catalogs")


def cyc(order, *terms):
    """terms: (exp, num, den)"""
    return {"order": order, "terms": [list(t) for t in terms]}


def rat(num, den=1):
    return cyc(1, (0, num, den))


ONE = rat(1)


def build(name, provenance, labels, unit, dual, fusion, fvalue, rvalue, pivotal):
    """fusion: dict (a, b) -> list of c; fvalue(a,b,c,d,e,f) -> cyc or None (=1)."""
    n = lambda a, b, c: 1 if c in fusion[(a, b)] else 0
    fus = [[a, b, c, 1] for a in labels for b in labels for c in fusion[(a, b)]]
    F = []
    for a, b, c, d in itertools.product(labels, repeat=4):
        if unit in (a, b, c):
            continue
        es = [e for e in labels if n(a, b, e) and n(e, c, d)]
        fs = [f for f in labels if n(b, c, f) and n(a, f, d)]
        for e in es:
            for f in fs:
                v = fvalue(a, b, c, d, e, f)
                F.append({"index": [a, b, c, d, e, f], "value": v if v is not None else ONE})
    R = []
    if rvalue is not None:
        for a in labels:
            for b in labels:
                for c in fusion[(a, b)]:
                    v = rvalue(a, b, c)
                    R.append({"index": [a, b, c], "value": v if v is not None else ONE})
    doc = {
        "name": name,
        "provenance": provenance,
        "labels": labels,
        "unit": unit,
        "dual": [dual[l] for l in labels],
        "fusion": fus,
        "F": F,
    }
    if rvalue is not None:
        doc["R"] = R
    doc["pivotal"] = [pivotal.get(l, ONE) for l in labels]
    with open(os.path.join(OUT, f"{name}.json"), "w") as fh:
        fh.write(dumps(doc))


def dumps(doc):
    """One JSON record per line for list-valued fields."""
    parts = []
    for k, v in doc.items():
        if isinstance(v, list) and v and isinstance(v[0], (list, dict)):
            body = ",\n".join("  " + json.dumps(x) for x in v)
            parts.append(f' "{k}": [\n{body}\n ]')
        else:
            parts.append(f" {json.dumps(k)}: {json.dumps(v)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def cyclic(m):
    labels = [str(g) for g in range(m)]
    fusion = {(a, b): [str((int(a) + int(b)) % m)] for a in labels for b in labels}
    dual = {a: str((-int(a)) % m) for a in labels}
    return labels, fusion, dual


def main():
    labels, fusion, dual = cyclic(2)
    build("vec_z2", "Pointed Z/2 with trivial associator and trivial braiding.",
          labels, "0", dual, fusion, lambda *a: None, lambda *a: None, {})

    fusion2 = {(a, b): [{"1": {"1": "1", "sgn": "sgn"}, "sgn": {"1": "sgn", "sgn": "1"}}[a][b]]
               for a in ["1", "sgn"] for b in ["1", "sgn"]}
    build("rep_z2", "Representations of Z/2: trivial associator, symmetric flip braiding.",
          ["1", "sgn"], "1", {"1": "1", "sgn": "sgn"}, fusion2,
          lambda *a: None, lambda *a: None, {})

    labels, fusion, dual = cyclic(3)
    build("vec_z3_q", "Pointed Z/3 with trivial associator and braiding "
          "R^{g,h} = w^{gh}, w a primitive cube root of unity (quadratic form q(g) = w^{g^2}).",
          labels, "0", dual, fusion, lambda *a: None,
          lambda a, b, c: cyc(3, ((int(a) * int(b)) % 3, 1, 1)), {})

    fib = ["1", "tau"]
    ffus = {("1", "1"): ["1"], ("1", "tau"): ["tau"], ("tau", "1"): ["tau"], ("tau", "tau"): ["1", "tau"]}
    phi_inv = cyc(5, (1, 1, 1), (4, 1, 1))

    def fib_f(a, b, c, d, e, f):
        if d == "tau":
            if (e, f) == ("1", "1"):
                return phi_inv
            if (e, f) == ("1", "tau"):
                return ONE
            if (e, f) == ("tau", "1"):
                return phi_inv
            return cyc(5, (1, -1, 1), (4, -1, 1))
        return None

    def fib_r(a, b, c):
        if a == b == "tau":
            return cyc(5, (3, 1, 1)) if c == "1" else cyc(5, (4, -1, 1))
        return None

    build("fibonacci", "Fibonacci category in Q(z5): golden-ratio F-matrix in a gauge with "
          "rational off-diagonal entry; R^{tt}_1 = z5^-2, R^{tt}_t = -z5^4 = exp(3 pi i/5). "
          "Checked by the pentagon and hexagon validators.",
          fib, "1", {"1": "1", "tau": "tau"}, ffus, fib_f, fib_r, {})

    ising = ["1", "sigma", "psi"]
    ifus = {}
    for a in ising:
        for b in ising:
            if a == "1":
                ifus[(a, b)] = [b]
            elif b == "1":
                ifus[(a, b)] = [a]
            elif a == b == "sigma":
                ifus[(a, b)] = ["1", "psi"]
            elif a == b == "psi":
                ifus[(a, b)] = ["1"]
            else:
                ifus[(a, b)] = ["sigma"]
    half_sqrt2 = cyc(16, (2, 1, 2), (14, 1, 2))

    def ising_f(a, b, c, d, e, f):
        if (a, b, c, d) == ("sigma",) * 4:
            if (e, f) == ("psi", "psi"):
                return cyc(16, (2, -1, 2), (14, -1, 2))
            return half_sqrt2
        if (a, b, c, d) in [("sigma", "psi", "sigma", "psi"), ("psi", "sigma", "psi", "sigma")]:
            return rat(-1)
        return None

    def ising_r(a, b, c):
        if a == b == "sigma":
            return cyc(16, (15, 1, 1)) if c == "1" else cyc(16, (3, 1, 1))
        if {a, b} == {"sigma", "psi"}:
            return cyc(4, (3, 1, 1))
        if a == b == "psi":
            return rat(-1)
        return None

    build("ising", "Ising category in Q(z16): F^{sss}_s = (1/sqrt2)[[1,1],[1,-1]], "
          "F^{s p s}_p = F^{p s p}_s = -1; R^{ss}_1 = exp(-i pi/8), R^{ss}_p = exp(3 i pi/8), "
          "R^{sp}_s = R^{ps}_s = -i, R^{pp}_1 = -1.",
          ising, "1", {l: l for l in ising}, ifus, ising_f, ising_r, {})

    sem = ["1", "s"]
    sfus = {("1", "1"): ["1"], ("1", "s"): ["s"], ("s", "1"): ["s"], ("s", "s"): ["1"]}
    build("semion", "Semion category: F^{sss}_s = -1, R^{ss}_1 = i, pivotal coefficient "
          "of s equal to -1 so that dim(s) = 1.",
          sem, "1", {"1": "1", "s": "s"}, sfus,
          lambda a, b, c, d, e, f: rat(-1) if (a, b, c) == ("s", "s", "s") else None,
          lambda a, b, c: cyc(4, (1, 1, 1)) if a == b == "s" else None,
          {"s": rat(-1)})

    out = subprocess.run([sys.executable, os.path.join(os.path.dirname(__file__), "derive_rep_s3.py")],
                         capture_output=True, text=True, check=True)
    data = json.loads(out.stdout)
    s3 = ["1", "sgn", "V"]
    sfus = {}
    for a in s3:
        for b in s3:
            if a == "1":
                sfus[(a, b)] = [b]
            elif b == "1":
                sfus[(a, b)] = [a]
            elif a == b == "sgn":
                sfus[(a, b)] = ["1"]
            elif a == b == "V":
                sfus[(a, b)] = ["1", "sgn", "V"]
            else:
                sfus[(a, b)] = ["V"]
    fmap = {tuple(r["index"]): rat(*r["value"]) for r in data["F"]}
    rmap = {tuple(r["index"]): rat(*r["value"]) for r in data["R"]}
    build("rep_s3", "Representations of S3 with rational 6j-symbols, derived by "
          "scripts/derive_rep_s3.py from rational intertwiners of the permutation "
          "realization of the 2-dimensional irrep; symmetric braiding read off from the flip. "
          "The pentagon and hexagon validators are the authority.",
          s3, "1", {l: l for l in s3}, sfus,
          lambda *k: fmap[k], lambda *k: rmap[k], {})


if __name__ == "__main__":
    main()
