"""Pin the projection bar chains (model) -> forms complex: scan sign
toggles for the chain-map identity pi b = D pi on all labels."""
from fractions import Fraction
from itertools import product

from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.bar import ModelOps, BarChains
from ncalc.complexes import FormsComplex


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


def vadd(a, b, s=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + s * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def make_pi(alg, tog):
    e1, e2, e3, e4, e5 = tog

    def pi(vec):
        out = {}

        def acc(l, c):
            v = out.get(l, 0) + c
            if v:
                out[l] = v
            else:
                out.pop(l, None)

        for lab, c in vec.items():
            _, a, us = lab
            da = alg.word_degree(a)
            if not us:
                s = -1 if (e5 * da) % 2 else 1
                acc(("b", a), s * c)
                continue
            if len(us) != 1:
                continue
            u = us[0]
            n = da + alg.word_degree(u) + 1
            degs = [alg.word_degree((g,)) for g in u]
            for i, g in enumerate(u):
                pre, post = u[:i], u[i + 1:]
                dpre = sum(degs[:i])
                dpost = sum(degs[i + 1:])
                dmid = degs[i]
                e = (dpost * (da + dpre + dmid + e1)
                     + e2 * da + e3 * n + e4)
                s = -1 if e % 2 else 1
                w = None
                for part in (post, a, pre):
                    if not part:
                        continue
                    w = part if w is None else alg.mul_words(w, part)
                    if w is None:
                        break
                if w is None:
                    continue
                if alg.is_trivial_word(w):
                    w = ("@" + alg.gen[g].source,)
                acc(("f", g, w), s * c)
        return out
    return pi


def run(pres, W, nmax, wmax, name):
    m = build_model(pres, W)
    ops = ModelOps(m)
    bar = BarChains(ops)
    forms = FormsComplex(m)
    labels = [lab for n in range(nmax + 1) for w in range(wmax + 1)
              for lab in bar.basis((n, w))]
    print(name, "labels:", len(labels))
    winners = []
    for tog in product((0, 1), repeat=5):
        pi = make_pi(m.alg, tog)
        ok = True
        for lab in labels:
            lhs = pi(bar.apply(lab))
            rhs = apply_vec(forms, pi({lab: Fraction(1)}))
            if vadd(lhs, rhs, -1):
                ok = False
                break
        if ok:
            winners.append(tog)
    print(name, "pi winners (e1..e5):", winners)
    return winners


kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
wk = run(kx2, 6, 4, 6, "kx2")

ex2 = MonomialPresentation(
    Quiver(["1", "2", "3"],
           [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
    [("x", "y", "y"), ("y", "y", "z")])
we = run(ex2, 7, 3, 7, "ex2")
print("common:", sorted(set(wk) & set(we)))
