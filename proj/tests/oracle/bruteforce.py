#!/usr/bin/env python3
"""Brute-force socle series for coalgebra files, in exact rationals.

Independent of the C++ engine: simples are found by chopping the regular
(bi)comodule with a Norton irreducibility test, and each socle layer is the
sum of images of all homomorphisms from those simples. No radical or
annihilator is ever computed.

usage: bruteforce.py CORPUS_DIR OUT_DIR
"""

import json
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path


# ---------------------------------------------------------------- linear algebra
# Matrices are lists of rows of Fractions.

def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def mul(a, b):
    if not a or not b:
        return zeros(len(a), len(b[0]) if b else 0)
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def transpose(a):
    if not a:
        return []
    return [list(r) for r in zip(*a)]


def rref(a):
    m = [row[:] for row in a]
    pivots = []
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(a, ncols):
    """Basis of {x : a x = 0} as a list of column vectors."""
    if not a:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, piv = rref(a)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        out.append(x)
    return out


def span(vectors):
    """Row-reduced basis (list of vectors) of the span."""
    vs = [v for v in vectors if any(x != 0 for x in v)]
    if not vs:
        return []
    red, _ = rref(vs)
    return red


def rank(vectors):
    return len(span(vectors))


def apply(m, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m]


# ---------------------------------------------------------------- modules
# A module is a list of generator matrices acting on column vectors.

def spin(gens, seeds, n):
    basis = span(seeds)
    frontier = list(basis)
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = apply(g, v)
            if rank(basis + [w]) > len(basis):
                basis = span(basis + [w])
                frontier.append(w)
    return basis


def coords(basis, v):
    """Coordinates of v in the given list of basis vectors (must lie in the span)."""
    n = len(v)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = rref(aug)
    if k in piv:
        raise ValueError("vector not in span")
    x = [Fraction(0)] * k
    for row, p in zip(red, piv):
        x[p] = row[k]
    return x


def restrict(gens, basis):
    """Action on the invariant subspace spanned by basis."""
    out = []
    for g in gens:
        cols = [coords(basis, apply(g, b)) for b in basis]
        out.append(transpose(cols) if cols else [])
    return out


def extend_basis(basis, n):
    full = list(basis)
    for i in range(n):
        e = [Fraction(int(i == j)) for j in range(n)]
        if rank(full + [e]) > len(full):
            full.append(e)
    return full


def quotient(gens, basis, n):
    """Action on V / span(basis); returns (generators, complement vectors)."""
    full = extend_basis(basis, n)
    s = len(basis)
    comp = full[s:]
    out = []
    for g in gens:
        cols = [coords(full, apply(g, c))[s:] for c in comp]
        out.append(transpose(cols) if cols else [])
    return out, comp


def proper_submodule(gens, n):
    """None if irreducible (Norton test), else a basis of a proper nonzero submodule."""
    if n <= 1:
        return None
    candidates = []
    for g in gens:
        candidates.append(g)
    for g, h in combinations(gens, 2):
        candidates.append([[x + y for x, y in zip(r, s)] for r, s in zip(g, h)])
        candidates.append(mul(g, h))
    shifts = [Fraction(k) for k in (0, 1, -1, 2, -2, 3)]
    norton_ready = False
    for base in candidates:
        for lam in shifts:
            theta = [[x - (lam if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(base)]
            ker = nullspace(theta, n)
            if not ker:
                continue
            for v in ker:
                s = spin(gens, [v], n)
                if len(s) < n:
                    return s
            if len(ker) == 1:
                tgens = [transpose(g) for g in gens]
                u = nullspace(transpose(theta), n)
                t = spin(tgens, [u[0]], n)
                if len(t) < n:
                    # annihilator of a proper submodule of the dual
                    return nullspace(t, n)
                norton_ready = True
                break
        if norton_ready:
            return None
    raise RuntimeError("irreducibility test inconclusive")


def composition_factors(gens, n):
    if n == 0:
        return []
    sub = proper_submodule(gens, n)
    if sub is None:
        return [gens]
    q, _ = quotient(gens, sub, n)
    return composition_factors(restrict(gens, sub), len(sub)) + composition_factors(q, n - len(sub))


def hom_images(src, dst, m, n):
    """Images of a basis of Hom(src, dst), src of dim m, dst of dim n."""
    # unknown F is n x m, index (i, j) -> i*m + j; equations dst_x F - F src_x = 0
    rows = []
    for a, b in zip(src, dst):
        for i in range(n):
            for j in range(m):
                row = [Fraction(0)] * (n * m)
                for k in range(n):
                    if b[i][k] != 0:
                        row[k * m + j] += b[i][k]
                for k in range(m):
                    if a[k][j] != 0:
                        row[i * m + k] -= a[k][j]
                if any(x != 0 for x in row):
                    rows.append(row)
    sols = nullspace(rows, n * m)
    images = []
    for s in sols:
        for j in range(m):
            images.append([s[i * m + j] for i in range(n)])
    return images


def isomorphic(a, b, d):
    """Both simple of dimension d: isomorphic iff some nonzero map exists."""
    return rank(hom_images(a, b, d, d)) > 0


def distinct_simples(factors):
    out = []
    for f in factors:
        d = len(f[0])
        if not any(len(g[0]) == d and isomorphic(f, g, d) for g in out):
            out.append(f)
    return out


def socle_dims(gens, n, simples):
    """Cumulative dimensions of the socle series, by hom-space search."""
    dims = []
    total = 0
    cur, m = gens, n
    while m > 0:
        ims = []
        for s in simples:
            d = len(s[0])
            ims += hom_images(s, cur, d, m)
        soc = span(ims)
        if not soc:
            raise RuntimeError("empty socle")
        total += len(soc)
        dims.append(total)
        if len(soc) == m:
            break
        cur, _ = quotient(cur, soc, m)
        m -= len(soc)
    return dims


# ---------------------------------------------------------------- coalgebras

def load(path):
    f = json.loads(Path(path).read_text())
    if f["field"] != "q":
        raise ValueError("oracle works over the rationals only")
    labels = f["group"]["labels"]
    table = f["group"]["table"]
    n = len(f["basis"]["labels"])
    deg = [labels.index(d) for d in f["basis"]["degrees"]]
    D = {}
    for i, j, k, s in f["comult"]:
        D[(i, j, k)] = D.get((i, j, k), Fraction(0)) + Fraction(s)
    return f["name"], n, deg, len(labels), table, D


def regular_generators(n, deg, order, D, left, right):
    gens = []
    for k in range(n):
        if right:
            # (rho_k)_{ij} = D(i, k; j)
            gens.append([[D.get((i, k, j), Fraction(0)) for j in range(n)] for i in range(n)])
        if left:
            # (lambda_k)_{ij} = D(k, i; j)
            gens.append([[D.get((k, i, j), Fraction(0)) for j in range(n)] for i in range(n)])
    for g in range(order):
        gens.append([[Fraction(int(i == j and deg[i] == g)) for j in range(n)] for i in range(n)])
    return gens


def twists(simple, order, table, ngroup_gens):
    """Right twists S_g (x) L: degree projectors permute as P_h -> P_{g^-1 h}."""
    head, proj = simple[:-ngroup_gens], simple[-ngroup_gens:]
    out = []
    for g in range(order):
        perm = [None] * order
        for d in range(order):
            perm[table[g][d]] = proj[d]
        out.append(head + perm)
    return out


def analyse(path):
    name, n, deg, order, table, D = load(path)
    right = regular_generators(n, deg, order, D, left=False, right=True)
    simples = distinct_simples(composition_factors(right, n))
    closed = []
    for s in simples:
        closed += twists(s, order, table, order)
    closed = distinct_simples(closed)
    right_dims = socle_dims(right, n, closed)

    bi = regular_generators(n, deg, order, D, left=True, right=True)
    bisimples = distinct_simples(composition_factors(bi, n))
    bi_dims = socle_dims(bi, n, bisimples)
    return {"name": name, "right_socle_dims": right_dims, "coradical_dims": bi_dims}


def main(argv):
    if len(argv) != 3:
        print(__doc__, file=sys.stderr)
        return 2
    src, dst = Path(argv[1]), Path(argv[2])
    dst.mkdir(parents=True, exist_ok=True)
    for p in sorted(src.glob("*.json")):
        f = json.loads(p.read_text())
        if f["field"] != "q" or f["name"] in ("nonsplit",) or f["name"].startswith("perturbed"):
            continue
        rec = analyse(p)
        (dst / p.name).write_text(json.dumps(rec, indent=2) + "\n")
        print(p.name, rec["right_socle_dims"], rec["coradical_dims"])
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
