"""Scratch: empirical dims of the relative cone on the pinned examples."""
import sys
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model, check_d_squared
from ncalc.homology import Homology
from ncalc.complexes import (FieldsComplex, FormsComplex, CyclicComplex,
                             centralizer_of_radical, center_basis,
                             four_term_report)


def ex2(max_weight=12):
    q = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")])
    pres = MonomialPresentation(q, [("x", "y", "y"), ("y", "y", "z")])
    return build_model(pres, max_weight)


def crown(r, max_weight=13):
    vs = [str(i) for i in range(1, r + 1)]
    arrows = [("a%d" % i, str(i), str(i % r + 1)) for i in range(1, r + 1)]
    rel = tuple("a%d" % i for i in list(range(1, r + 1)) + [1])
    q = Quiver(vs, arrows)
    pres = MonomialPresentation(q, [rel])
    return build_model(pres, max_weight)


def kx2(max_weight=11):
    q = Quiver(["1"], [("x", "1", "1")])
    pres = MonomialPresentation(q, [("x", "x")])
    return build_model(pres, max_weight)


def hh_table(model, nmax, wmin, wmax):
    H = Homology(FieldsComplex(model))
    out = {}
    for n in range(0, nmax + 1):
        row = {}
        for w in range(wmin, wmax + 1):
            d = H.block((n, w)).dim
            if d:
                row[w] = d
        out[n] = row
    return out


print("== ex2 ==")
m = ex2()
assert not check_d_squared(m)
print("chains:", [(g.name, g.degree, g.weight) for g in m.alg.gens])
t = hh_table(m, 5, -8, 8)
for n, row in t.items():
    print("HH^%d:" % n, row)
print("center:", {w: len(center_basis(m.pres, w)) for w in range(0, 9)})
print("centralizer:", {w: len(centralizer_of_radical(m.pres, w)) for w in range(0, 9)})

print("== crown r=2 ==")
m2 = crown(2)
assert not check_d_squared(m2)
t = hh_table(m2, 6, -13, 4)
for n, row in t.items():
    print("HH^%d:" % n, row)

print("== kx2 ==")
m1 = kx2()
assert not check_d_squared(m1)
t = hh_table(m1, 5, -11, 4)
for n, row in t.items():
    print("HH^%d:" % n, row)
print("center:", {w: len(center_basis(m1.pres, w)) for w in range(0, 3)})
