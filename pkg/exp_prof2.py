import sys, time
sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.homology import Homology
from ncalc.complexes import FieldsComplex

which = sys.argv[1]
if which == "ex2":
    q = Quiver(["1", "2", "3"], [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")])
    pres = MonomialPresentation(q, [("x", "y", "y"), ("y", "y", "z")])
    W, NMAX, WMIN, WMAX = 12, 5, -8, 8
else:
    r = int(which)
    vs = [str(i) for i in range(1, r + 1)]
    arrows = [("a%d" % i, str(i), str(i % r + 1)) for i in range(1, r + 1)]
    rel = tuple("a%d" % i for i in list(range(1, r + 1)) + [1])
    pres = MonomialPresentation(Quiver(vs, arrows), [rel])
    W, NMAX, WMIN, WMAX = 13, 6, -13, 4

t0 = time.time()
m = build_model(pres, W)
print("build: %.2fs, gens=%d" % (time.time() - t0, len(m.alg.gens)))
H = Homology(FieldsComplex(m))
fc = FieldsComplex(m)
for n in range(0, NMAX + 1):
    t0 = time.time()
    row = {}
    for w in range(WMIN, WMAX + 1):
        d = H.block((n, w)).dim
        if d:
            row[w] = d
    print("HH^%d: %s  [%.1fs]" % (n, row, time.time() - t0))
    sizes = {w: len(fc.basis((n, w))) for w in range(WMIN, WMAX + 1)}
    big = {w: s for w, s in sizes.items() if s > 200}
    if big:
        print("   big blocks:", big)
