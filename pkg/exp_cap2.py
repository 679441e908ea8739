"""Diagnose which (field, form) pairs break the direct Lie route."""
from fractions import Fraction
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.homology import Homology
from ncalc.calculus import (FormsAction, connes_d, cone_bidegree,
                            lie_form, loop_contract)
from ncalc.linalg import vec_add

kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
m = build_model(kx2, 7)
alg = m.alg
hf = Homology(FieldsComplex(m))
fhom = Homology(FormsComplex(m))
forms_cx = FormsComplex(m)

def apply_vec(cx, vec):
    out = {}
    for lab, c in vec.items():
        for lab2, c2 in cx.apply(lab).items():
            v = out.get(lab2, 0) + c * c2
            if v:
                out[lab2] = v
            else:
                out.pop(lab2, None)
    return out

fields = []
for key in [(n, w) for n in range(0, 5) for w in range(-4, 2)]:
    blk = hf.block(key)
    for j, rep in enumerate(blk.reps):
        fields.append((key, j, hf.cx.vec_to_pair(rep)))

for fk, fj, x in fields:
    lam, F = x
    nx, wx = cone_bidegree(x)
    kind = ("lam" if lam and lam.terms else "") + (
        "F" if F is not None and F.values else "")
    for wkey in [(d, w) for d in range(0, 4) for w in range(0, 7)]:
        blk = fhom.block(wkey)
        for j, om in enumerate(blk.reps):
            tlie = (wkey[0] - nx + 1, wkey[1] + wx)
            if tlie[0] < 0 or not (0 <= tlie[1] <= 7) or wkey[0] + 1 > 5:
                continue
            out = lie_form(m, x, om)
            if lam is not None and lam.terms:
                out = vec_add(out, connes_d(alg, loop_contract(m, lam, om)))
                out = vec_add(out, loop_contract(m, lam, connes_d(alg, om)))
            resid = apply_vec(forms_cx, out)
            if resid:
                print("NOT CHAIN-CYCLE", fk, fj, kind, "om", wkey, j,
                      "resid keys", sorted({k[0] for k in resid}),
                      len(resid))
