"""End-to-end cap/Cartan battery: caps land as classes, Cartan
L = B i + i B holds at class level, via independent routes."""
from fractions import Fraction

from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.homology import Homology
from ncalc.calculus import FormsAction, connes_d, cone_bidegree


def battery(name, pres, W, f_keys, w_keys):
    m = build_model(pres, W)
    alg = m.alg
    hf = Homology(FieldsComplex(m))
    fhom = Homology(FormsComplex(m))
    act = FormsAction(m, fhom)
    fields = []
    for key in f_keys:
        blk = hf.block(key)
        for j, rep in enumerate(blk.reps):
            cx = hf.cx
            fields.append((key, j, cx.vec_to_pair(rep)))
    forms = []
    for key in w_keys:
        blk = fhom.block(key)
        for j, rep in enumerate(blk.reps):
            forms.append((key, j, rep))
    print("%s: %d field classes, %d form classes"
          % (name, len(fields), len(forms)))
    ncap = nlie = ncart = nzero = 0
    bad = []
    for fk, fj, x in fields:
        nx, wx = cone_bidegree(x)
        for wk, wj, om in forms:
            tcap = (wk[0] - nx, wk[1] + wx)
            tlie = (wk[0] - nx + 1, wk[1] + wx)
            # stay inside the window
            if not (0 <= tcap[0] and 0 <= tcap[1] <= W
                    and tlie[0] >= 0 and 0 <= tlie[1] <= W
                    and wk[0] + 1 <= 6):
                continue
            try:
                t1, c1 = act.cap_class(x, wk, om)
            except ValueError as e:
                bad.append(("cap", name, fk, fj, wk, wj, str(e)[:60]))
                continue
            ncap += 1
            # lie direct
            t2, c2 = act.lie_class(x, wk, om)
            nlie += 1
            # Cartan: B(i_X om) + i_X(B om)
            v1 = fhom.block(t1).vector(c1)
            r1 = fhom.block((t1[0] + 1, t1[1])).coords(connes_d(alg, v1))
            dom = connes_d(alg, om)
            dkey = (wk[0] + 1, wk[1])
            try:
                t3, c3 = act.cap_class(x, dkey, dom)
            except ValueError as e:
                bad.append(("capB", name, fk, fj, wk, wj, str(e)[:60]))
                continue
            tot = dict(r1)
            sgn = -1 if nx % 2 == 0 else 1
            for k, c in c3.items():
                y = tot.get(k, 0) + sgn * c
                if y:
                    tot[k] = y
                else:
                    tot.pop(k, None)
            if tot == c2:
                ncart += 1
                if any(c2.values()):
                    nzero += 1
            else:
                bad.append(("cartan", name, fk, fj, wk, wj,
                            "lie=%s cartan=%s" % (c2, tot)))
    print("  caps: %d  lies: %d  cartan-ok: %d (nonzero %d)  bad: %d"
          % (ncap, nlie, ncart, nzero, len(bad)))
    for b in bad[:10]:
        print("   ", b)
    return bad


kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
fk = [(n, w) for n in range(0, 5) for w in range(-4, 2)]
wk = [(d, w) for d in range(0, 5) for w in range(0, 7)]
battery("kx2", kx2, 7, fk, wk)

ex2 = MonomialPresentation(
    Quiver(["1", "2", "3"],
           [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
    [("x", "y", "y"), ("y", "y", "z")])
fe = [(n, w) for n in range(0, 4) for w in range(0, 6)]
we = [(d, w) for d in range(0, 4) for w in range(0, 7)]
battery("ex2", ex2, 8, fe, we)
