import sys
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.homology import Homology
from ncalc.complexes import FieldsComplex

q = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")])
pres = MonomialPresentation(q, [("x", "y", "y"), ("y", "y", "z")])
m = build_model(pres, 10)
fc = FieldsComplex(m)
for key in [(1, -1), (2, -1), (3, -1)]:
    print("block", key)
    for lab in fc.basis(key):
        print("   ", lab, "->", fc.apply(lab))
