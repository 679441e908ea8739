import sys, time
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.homology import Homology
from ncalc.complexes import FieldsComplex

q = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")])
pres = MonomialPresentation(q, [("x", "y", "y"), ("y", "y", "z")])
t0 = time.time()
m = build_model(pres, 10)
print("build: %.2fs, gens=%d" % (time.time() - t0, len(m.alg.gens)))
H = Homology(FieldsComplex(m))
for n in range(0, 4):
    for w in range(-6, 7):
        t0 = time.time()
        d = H.block((n, w)).dim
        dt = time.time() - t0
        if dt > 0.5:
            fc = FieldsComplex(m)
            print("block (%d,%2d): dim %d  basis %d  [%.2fs]"
                  % (n, w, d, len(fc.basis((n, w))), dt))
print("done")
