"""Scratch: brute-force relative bar cohomology of A = kQ/I directly.

C^0 = loop part of A;  C^p = vertex-bilinear maps on composable p-tuples
of positive-weight basis paths, valued in parallel slots of A.
(d F)(a1,...,a_{p+1}) = a1 F(a2..) - F(a1 a2, a3..) + ... +- F(..a_p) a_{p+1}.
Graded by weight shift: wt(F) = wt(value) - wt(inputs).
"""
import sys
from fractions import Fraction
from itertools import product
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation, El
from ncalc.linalg import Echelon, kernel_basis

q = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")])
pres = MonomialPresentation(q, [("x", "y", "y"), ("y", "y", "z")])
A = pres.arrow_algebra()
MAXW = 9

paths = {}  # weight -> list of basis paths (weight >= 1)
for w in range(1, MAXW + 1):
    paths[w] = pres.basis(w)
all_paths = [p for w in paths for p in paths[w]]


def tuples(p, total_wt):
    """Composable p-tuples of positive paths with total weight total_wt."""
    out = []
    def rec(sofar, wt_left):
        if len(sofar) == p:
            if wt_left == 0:
                out.append(tuple(sofar))
            return
        for w in range(1, wt_left - (p - len(sofar) - 1) + 1):
            for pa in paths.get(w, ()):
                if sofar and A.word_target(sofar[-1]) != A.word_source(pa):
                    continue
                rec(sofar + [pa], wt_left - w)
    rec([], total_wt)
    return out


def cochain_basis(p, shift, min_in=1, max_in=None):
    """Labels (inputs, value) for C^p in weight-shift `shift`."""
    out = []
    if max_in is None:
        max_in = MAXW
    for win in range(min_in, max_in + 1):
        wval = win + shift
        if wval < 0 or wval > MAXW:
            continue
        for tup in tuples(p, win):
            s, t = A.word_source(tup[0]), A.word_target(tup[-1])
            if wval == 0:
                if s == t:
                    out.append((tup, ("@" + s,)))
                continue
            for val in paths.get(wval, ()):
                if A.word_source(val) == s and A.word_target(val) == t:
                    out.append((tup, val))
    return out


def mul(a, b):
    w = A.mul_words(a, b)
    if w is None:
        return None
    if A.is_trivial_word(w):
        return w
    return w if not pres.contains_relation(w) else None


def dmap(p, label):
    """Differential of the elementary cochain `label` in C^p -> C^{p+1}."""
    tup, val = label
    out = {}
    def add(key, c):
        out[key] = out.get(key, 0) + c
        if not out[key]:
            del out[key]
    # (dF)(b1,...,b_{p+1}) picks up F at each face; enumerate p+1-tuples
    # that hit this label instead: much cheaper to emit faces directly.
    # face 0: b1 * F(b2..b_{p+1}): new first argument b0
    for w0 in range(1, MAXW + 1):
        for b0 in paths.get(w0, ()):
            if A.word_target(b0) != A.word_source(tup[0]):
                continue
            v = mul(b0, val) if not A.is_trivial_word(val) else (
                b0 if A.word_target(b0) == val[0][1:] else None)
            if v is not None:
                add(((b0,) + tup, v), 1)
    # last face: F(..) * b_last
    sgn_last = -1 if (p + 1) % 2 else 1
    for wl in range(1, MAXW + 1):
        for bl in paths.get(wl, ()):
            if A.word_source(bl) != A.word_target(tup[-1]):
                continue
            v = mul(val, bl) if not A.is_trivial_word(val) else (
                bl if A.word_source(bl) == val[0][1:] else None)
            if v is not None:
                add((tup + (bl,), v), sgn_last)
    # inner faces: -F(.., b_i b_{i+1}, ..) with alternating signs:
    # splitting each input a_i = b * c over all 2-factorizations
    for i, a in enumerate(tup):
        sgn = -1 if (i + 1) % 2 else 1
        for cut in range(1, len(a)):
            b, c = a[:cut], a[cut:]
            if pres.contains_relation(b) or pres.contains_relation(c):
                continue
            newt = tup[:i] + (b, c) + tup[i + 1:]
            add((newt, val), sgn)
    return out


def H(p, shift):
    """dim H^p at weight-shift `shift` (inputs capped so d is complete)."""
    # cap input weight so that the p+1 differential target stays in range
    cap = MAXW - 1
    basis_p = cochain_basis(p, shift, max_in=cap)
    if p == 0:
        raise SystemExit("use H0 directly")
    # cocycles among maps with inputs <= cap - ?: to be safe, kernel of d
    ker = kernel_basis(basis_p, lambda lab: dmap(p, lab))
    # boundaries from C^{p-1} with inputs <= cap
    prev = cochain_basis(p - 1, shift, max_in=cap)
    ech = Echelon()
    for lab in prev:
        v = dmap(p - 1, lab)
        v = {k: c for k, c in v.items() if sum(A.word_weight(x) for x in k[0]) <= cap}
        if v:
            ech.insert(v)
    # reduce kernel vectors by boundaries
    ech2 = Echelon()
    dim = 0
    for v in ker:
        r = ech.reduce(v)
        if r and ech2.insert(r):
            dim += 1
    return dim, len(ker), ech.rank


for shift in (-2, -1, 0):
    print("H^2 at weight-shift %d:" % shift, H(2, shift))
