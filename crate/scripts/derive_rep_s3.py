"""Derive skeletal F- and R-symbols of Rep(S3) from explicit intertwiners.

Irreps: trivial "1", sign "sgn", and the 2-dimensional "V" realized on
{x in Q^3 : x1 + x2 + x3 = 0} with basis e1 - e3, e2 - e3, so every matrix
is rational. Splitting vertices c -> a (x) b are chosen as rational bases of
Hom_G(c, a (x) b); vertices involving the unit are the canonical identities.

F is read off from  (S^{ab}_e (x) 1) S^{ec}_d = sum_f F[e, f] (1 (x) S^{bc}_f) S^{af}_d
and R from  flip S^{ab}_c = R^{ab}_c S^{ba}_c.  Prints JSON records.
"""
import itertools
import json

import sympy as sp

labels = ["1", "sgn", "V"]
# generators: transposition (1 2) and 3-cycle (1 2 3)
def perm_matrix(p):
    m = sp.zeros(3, 3)
    for i, j in enumerate(p):
        m[j, i] = 1
    return m

B = sp.Matrix([[1, 0], [0, 1], [-1, -1]])  # columns e1-e3, e2-e3
Binv = (B.T * B).inv() * B.T

def std(p):
    return Binv * perm_matrix(p) * B

gens = [(1, 0, 2), (1, 2, 0)]
sign = {(1, 0, 2): -1, (1, 2, 0): 1}
rep = {
    "1": lambda g: sp.Matrix([[1]]),
    "sgn": lambda g: sp.Matrix([[sign[g]]]),
    "V": std,
}
dim = {"1": 1, "sgn": 1, "V": 2}

def tensor_rep(a, b, g):
    return sp.kronecker_product(rep[a](g), rep[b](g))

fusion = {}
for a, b, c in itertools.product(labels, repeat=3):
    # solve X rho_c = rho_ab X
    da, db, dc = dim[a], dim[b], dim[c]
    xs = sp.symbols(f"x0:{da*db*dc}")
    X = sp.Matrix(da * db, dc, xs)
    eqs = []
    for g in gens:
        eqs.extend(list(tensor_rep(a, b, g) * X - X * rep[c](g)))
    sol = sp.linsolve(eqs, xs)
    (s,) = sol
    free = sorted(set().union(*[e.free_symbols for e in s]), key=str)
    if not free:
        continue
    assert len(free) == 1
    X = sp.Matrix(da * db, dc, [e.subs(free[0], 1) for e in s])
    fusion[(a, b, c)] = X

# canonical unit vertices
for a in labels:
    fusion[("1", a, a)] = sp.eye(dim[a])
    fusion[(a, "1", a)] = sp.eye(dim[a])

def S(a, b, c):
    return fusion[(a, b, c)]

F = []
for a, b, c, d in itertools.product(labels, repeat=4):
    es = [e for e in labels if (a, b, e) in fusion and (e, c, d) in fusion]
    fs = [f for f in labels if (b, c, f) in fusion and (a, f, d) in fusion]
    if not es:
        continue
    R = [sp.kronecker_product(sp.eye(dim[a]), S(b, c, f)) * S(a, f, d) for f in fs]
    Rmat = sp.Matrix.hstack(*[r.reshape(r.rows * r.cols, 1) for r in R])
    for e in es:
        L = sp.kronecker_product(S(a, b, e), sp.eye(dim[c])) * S(e, c, d)
        coeffs = Rmat.solve_least_squares(L.reshape(L.rows * L.cols, 1))
        assert Rmat * coeffs == L.reshape(L.rows * L.cols, 1)
        for f, v in zip(fs, coeffs):
            v = sp.nsimplify(v)
            F.append({"index": [a, b, c, d, e, f], "value": [int(v.p), int(v.q)]})

def flip(a, b):
    da, db = dim[a], dim[b]
    m = sp.zeros(da * db, da * db)
    for i in range(da):
        for j in range(db):
            m[j * da + i, i * db + j] = 1
    return m

Rr = []
for (a, b, c), X in fusion.items():
    lhs = flip(a, b) * X
    rhs = S(b, a, c)
    ratio = None
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if rhs[i, j] != 0:
                ratio = lhs[i, j] / rhs[i, j]
                break
        if ratio is not None:
            break
    assert lhs == ratio * rhs
    Rr.append({"index": [a, b, c], "value": [int(ratio.p), int(ratio.q)]})

print(json.dumps({"F": F, "R": Rr}))
