"""Dump every gauge equation kx2 generates, op by op."""
from fractions import Fraction
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.compare import OracleComparison
from ncalc.calculus import cone_bracket, cup

pres = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
oc = OracleComparison(pres, max_degree=4)
cos = oc._co_classes()
hos = oc._ho_classes()
top = oc.top
print("co classes:", [k for k, j, _, _ in cos])
print("ho classes:", [k for k, j, _, _ in hos])

for (ka, ja, xa, va) in cos:
    for (kb, jb, xb, vb) in cos:
        tk = (ka[0] + kb[0] - 1, ka[1] + kb[1])
        if 0 <= tk[0] <= oc.max_degree and -tk[0] * top <= tk[1] <= top \
           and oc.hf.block(tk).dim == 1 and oc.hco.block(tk).dim == 1:
            pc = oc._co_coords(tk, cone_bracket(oc.model, xa, xb))
            bc = oc._bar_co_coords(tk, oc.cochains.bracket(va, vb, ka[0], kb[0]))
            rp, rb = pc.get(0, Fraction(0)), bc.get(0, Fraction(0))
            if rp or rb:
                print("BRK", ka, kb, "->", tk, "pipe", rp, "bar", rb,
                      "ratio", (rp / rb) if rb else None)
for (ka, ja, xa, va) in cos:
    for (kb, jb, xb, vb) in cos:
        tk = (ka[0] + kb[0], ka[1] + kb[1])
        if tk[0] <= oc.max_degree and -tk[0] * top <= tk[1] <= top \
           and oc.hf.block(tk).dim == 1 and oc.hco.block(tk).dim == 1:
            pc = oc._co_coords(tk, cup(oc.model, xa, xb))
            bc = oc._bar_co_coords(tk, oc.cochains.cup(va, vb))
            rp, rb = pc.get(0, Fraction(0)), bc.get(0, Fraction(0))
            if rp or rb:
                print("CUP", ka, kb, "->", tk, "pipe", rp, "bar", rb,
                      "ratio", (rp / rb) if rb else None)
for (ka, ja, xa, va) in cos:
    for (km, jm, om, vm) in hos:
        tk = (km[0] - ka[0], km[1] + ka[1])
        if not (0 <= tk[0] <= oc.max_degree and 0 <= tk[1] <= (tk[0] + 1) * top):
            continue
        if oc.fhom.block(tk).dim != 1 or oc.hch.block(tk).dim != 1:
            continue
        tkp, pc = oc.action.cap_class(xa, km, om)
        bc = oc._bar_ch_coords(tk, oc.chains.cap(va, vm, oc.cochains))
        rp, rb = pc.get(0, Fraction(0)), bc.get(0, Fraction(0))
        if rp or rb:
            print("CAP", ka, km, "->", tk, "pipe", rp, "bar", rb,
                  "ratio", (rp / rb) if rb else None)
