import sys, time
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.homology import Homology
from ncalc.complexes import FieldsComplex

which = sys.argv[1]
HORIZON = int(sys.argv[2]) if len(sys.argv) > 2 else None
if which == "kx2":
    pres = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
    W, NMAX, WMIN, WMAX = 9, 5, -6, 3
else:
    r = int(which)
    vs = [str(i) for i in range(1, r + 1)]
    arrows = [("a%d" % i, str(i), str(i % r + 1)) for i in range(1, r + 1)]
    rel = tuple("a%d" % i for i in list(range(1, r + 1)) + [1])
    pres = MonomialPresentation(Quiver(vs, arrows), [rel])
    W, NMAX, WMIN, WMAX = 13, 6, -13, 4

t0 = time.time()
m = build_model(pres, W)
print("build: %.2fs, gens=%d, complete=%s, cap=%d" % (
    time.time() - t0, len(m.alg.gens), m.complete, m.weight_cap))
fc = FieldsComplex(m)
H = Homology(fc)
deep = fc.deep_label(HORIZON) if HORIZON else None
for n in range(0, NMAX + 1):
    t0 = time.time()
    row, srow = {}, {}
    for w in range(WMIN, WMAX + 1):
        d = H.block((n, w)).dim
        if d:
            row[w] = d
        if deep is not None:
            s = H.stable_dim((n, w), deep)
            if s:
                srow[w] = s
    print("HH^%d: raw %s  stable %s  [%.1fs]" % (n, row, srow, time.time() - t0))
