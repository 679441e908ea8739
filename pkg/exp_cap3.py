"""Check the graded cyclic boundary: B^2 = 0 and bB + Bb = 0 on the
model bar chains (kx2 and ex2)."""
from fractions import Fraction
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.bar import ModelOps, BarChains

def apply_vec_f(f, vec):
    out = {}
    for lab, c in vec.items():
        for lab2, c2 in f(lab).items():
            v = out.get(lab2, 0) + c * c2
            if v:
                out[lab2] = v
            else:
                out.pop(lab2, None)
    return out

def run(name, pres, W, nmax, wmax):
    m = build_model(pres, W)
    bar = BarChains(ModelOps(m))
    ok2 = okc = True
    for n in range(nmax + 1):
        for w in range(wmax + 1):
            for lab in bar.basis((n, w)):
                v = {lab: Fraction(1)}
                B = bar.connes(v)
                if bar.connes(B):
                    ok2 = False
                x = apply_vec_f(bar.apply, B)
                for l2, c2 in bar.connes(apply_vec_f(bar.apply, v)).items():
                    y = x.get(l2, 0) + c2
                    if y:
                        x[l2] = y
                    else:
                        x.pop(l2, None)
                if x:
                    okc = False
    print(name, "B^2:", "OK" if ok2 else "FAIL",
          "| bB+Bb:", "OK" if okc else "FAIL")

kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
run("kx2", kx2, 6, 4, 6)
ex2 = MonomialPresentation(
    Quiver(["1", "2", "3"],
           [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
    [("x", "y", "y"), ("y", "y", "z")])
run("ex2", ex2, 7, 3, 7)
