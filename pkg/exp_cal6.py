import random
from fractions import Fraction

from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.calculus import contract_form, lie_form, cone_bidegree
from ncalc.homology import Homology
from ncalc.linalg import vec_add, vec_scale

random.seed(3)


def pres_kx2():
    return MonomialPresentation(Quiver(["1"], [("x", "1", "1")]),
                                [("x", "x")])


def apply_vec(cx, vec):
    out = {}
    for lab, c in vec.items():
        for l2, c2 in cx.apply(lab).items():
            v = out.get(l2, 0) + c * c2
            if v:
                out[l2] = v
            else:
                out.pop(l2, None)
    return out


model = build_model(pres_kx2(), 7)
fields = FieldsComplex(model)
forms = FormsComplex(model)
alg = model.alg
hf = Homology(fields)
hw = Homology(forms)

# cohomology reps at (p, 1-p); homology reps at the weights seen earlier
print("field classes:")
xcls = {}
for p in range(0, 6):
    for w in range(-6, 2):
        blk = hf.block((p, w))
        if blk.dim:
            print("  HH^%d w=%d dim=%d" % (p, w, blk.dim))
            for i, rep in enumerate(blk.reps):
                xcls[(p, w, i)] = fields.vec_to_pair(dict(rep))

print("form classes:")
wcls = {}
for m in range(0, 6):
    for w in range(0, 8):
        blk = hw.block((m, w))
        if blk.dim:
            print("  HH_%d w=%d dim=%d" % (m, w, blk.dim))
            for i, rep in enumerate(blk.reps):
                wcls[(m, w, i)] = dict(rep)

print("\ncap cycle test: D(i_X omega) == 0 ?")
for (p, wx, i), x in sorted(xcls.items()):
    for (m, wf, j), om in sorted(wcls.items()):
        if m - p < 0:
            continue
        r = contract_form(model, x, om)
        if not r:
            continue
        dr = apply_vec(forms, r)
        tag = "ZERO-D" if not dr else "D!=0"
        # can the class be read off?
        try:
            co = hw.block((m - p, wf + wx)).coords(r)
            cs = str(co)
        except ValueError:
            cs = "NOT-A-CYCLE"
        print("  X(%d,%d,%d) on w(%d,%d,%d): %-7s coords=%s"
              % (p, wx, i, m, wf, j, tag, cs))

print("\nlie cycle test: D(L_X omega) == 0 ?")
for (p, wx, i), x in sorted(xcls.items()):
    lam, F = x
    if lam and lam.terms:
        continue
    for (m, wf, j), om in sorted(wcls.items()):
        if m - p + 1 < 0:
            continue
        r = lie_form(model, x, om)
        if not r:
            continue
        dr = apply_vec(forms, r)
        tag = "ZERO-D" if not dr else "D!=0"
        try:
            co = hw.block((m - p + 1, wf + wx)).coords(r)
            cs = str(co)
        except ValueError:
            cs = "NOT-A-CYCLE"
        print("  X(%d,%d,%d) on w(%d,%d,%d): %-7s coords=%s"
              % (p, wx, i, m, wf, j, tag, cs))
