"""Confirm the pinned contraction profile on the ex2 model."""
from fractions import Fraction
from itertools import product
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.bar import ModelOps, BarChains
from ncalc.complexes import FieldsComplex
import exp_tr2 as T

ex2 = MonomialPresentation(
    Quiver(["1", "2", "3"],
           [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
    [("x", "y", "y"), ("y", "y", "z")])
m = build_model(ex2, 7)
bar = BarChains(ModelOps(m))
fc = FieldsComplex(m)
alg = m.alg

zs = [lab for n in range(4) for w in range(7)
      for lab in bar.basis((n, w)) if len(lab[2]) <= 2]
xf = T.xs_of(fc, "f", [(n, w) for n in range(-1, 2) for w in range(-3, 4)])
xb = T.xs_of(fc, "b", [(n, w) for n in range(-3, 1) for w in range(0, 5)])
print("zs:", len(zs), "xf:", len(xf), "xb:", len(xb))

tog = (0, 0, 1, 0, 0, 1, 1, 0)
st = (1, 0, 0, 0)
bzs = [bar.apply(z) for z in zs]
okf = T.check(alg, bar, zs, bzs, xf, tog, st)
okb = T.check(alg, bar, zs, bzs, xb, tog, st)
print("ex2 pinned profile: F", "OK" if okf else "FAIL",
      "| lam", "OK" if okb else "FAIL")
