"""Rich sign scan for the graded bar boundary: 1024 profiles, b^2=0 on
the kx2 model (generators in every degree -- the discriminating ground)."""
from fractions import Fraction
from itertools import product

from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.bar import ModelOps, BarChains

kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
mk = build_model(kx2, 6)
ops = ModelOps(mk)
base = BarChains(ops)
keys = [(n, w) for n in range(5) for w in range(7)]
labels = [lab for k in keys for lab in base.basis(k)]
print("labels:", len(labels))


def make_apply(tog):
    y1, y2, y3, z1, x1, x3, x4, x5, w1, w2 = tog

    def ap(lab):
        _, a, us = lab
        p = len(us)
        out = {}
        prefix = [ops.degree(a)]
        for u in us:
            prefix.append(prefix[-1] + ops.degree(u) + 1)
        E0 = prefix[0]

        def acc(l, c):
            v = out.get(l, 0) + c
            if v:
                out[l] = v
            else:
                out.pop(l, None)

        sd = -1 if w1 % 2 else 1
        for t, c in ops.diff(a).items():
            acc(("z", t, us), sd * c)
        for i in range(p):
            s = -1 if (prefix[i] + w1 + w2 * 0) % 2 else 1
            # w2: extra +1 on slot-d relative to coefficient-d
            s = -1 if (prefix[i] + w1 + w2) % 2 else 1
            for t, c in ops.diff(us[i]).items():
                acc(("z", a, us[:i] + (t,) + us[i + 1:]), s * c)
        if not p:
            return out
        du1 = ops.degree(us[0])
        e0 = y1 * E0 + y2 * du1 + y3 * du1 * E0
        s0 = -1 if e0 % 2 else 1
        for m, c in ops.mul(a, us[0]).items():
            acc(("z", m, us[1:]), s0 * c)
        for i in range(1, p):
            e = prefix[i] + z1 * ops.degree(us[i - 1])
            s = -1 if e % 2 else 1
            for m, c in ops.mul(us[i - 1], us[i]).items():
                acc(("z", a, us[:i - 1] + (m,) + us[i + 1:]), s * c)
        dup = ops.degree(us[-1])
        Ep1 = prefix[p - 1]
        e = x1 * dup * Ep1 + Ep1 + x3 * dup + x4 * dup * E0 + x5 * E0 + 1
        s = -1 if e % 2 else 1
        for m, c in ops.mul(us[-1], a).items():
            acc(("z", m, us[:-1]), s * c)
        return out
    return ap


def b2_ok(ap, labs):
    for lab in labs:
        out = {}
        for l1, c1 in ap(lab).items():
            for l2, c2 in ap(l1).items():
                v = out.get(l2, 0) + c1 * c2
                if v:
                    out[l2] = v
                else:
                    out.pop(l2, None)
        if out:
            return False
    return True


# quick filter on the four known-bad labels plus a deg-2 batch
quick = [lab for lab in labels
         if base.label_key(lab) in ((3, 3), (3, 4), (4, 4), (4, 5), (4, 6))]
print("quick set:", len(quick))

survivors = []
for tog in product((0, 1), repeat=10):
    if b2_ok(make_apply(tog), quick):
        survivors.append(tog)
print("after quick:", len(survivors))

final = [t for t in survivors if b2_ok(make_apply(t), labels)]
print("final kx2 winners (y1,y2,y3,z1,x1,x3,x4,x5,w1,w2):")
for t in final:
    print("   ", t)
