"""Pin the bar-side contraction signs: scan toggles for the strict
Cartan-type identity  b i_X - sigma i_X b = tau i_{DX}  on the graded
bar chains of the model, X running over elementary cone elements."""
from fractions import Fraction
from itertools import product

from ncalc.algebra import Quiver, MonomialPresentation, El
from ncalc.model import build_model
from ncalc.bar import ModelOps, BarChains
from ncalc.complexes import FieldsComplex


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


def acc(out, l, c):
    v = out.get(l, 0) + c
    if v:
        out[l] = v
    else:
        out.pop(l, None)


def contract(alg, lam, F, vec, tog):
    o1, g0, g1, g2, h0, h1, h2, h3 = tog
    out = {}
    for lab, c in vec.items():
        _, a, us = lab
        da = alg.word_degree(a)
        nh = da + sum(alg.word_degree(u) + 1 for u in us)
        if lam is not None and lam.terms:
            ael = El(alg, {a: Fraction(1)})
            for lw, lc in lam.terms.items():
                dl = alg.word_degree(lw)
                e = g0 + g1 * dl * da + g2 * dl * nh
                s = -1 if e % 2 else 1
                lel = El(alg, {lw: Fraction(1)})
                prod = (lel * ael) if o1 else (ael * lel)
                for w, cw in prod.terms.items():
                    acc(out, ("z", w, us), s * lc * cw * c)
        if F is not None and F.values and us:
            val = F(El(alg, {us[0]: Fraction(1)}))
            if val.terms:
                e = h0 + h1 * da + h2 * F.degree * da + h3 * F.degree
                s = -1 if e % 2 else 1
                prod = El(alg, {a: Fraction(1)}) * val
                for w, cw in prod.terms.items():
                    acc(out, ("z", w, us[1:]), s * cw * c)
    return out


def setup(pres, W):
    m = build_model(pres, W)
    ops = ModelOps(m)
    bar = BarChains(ops)
    fc = FieldsComplex(m)
    return m, bar, fc


def xs_of(fc, kind, keys):
    """Elementary cone elements (n_c, lam, F, Dlam, DF) from field labels."""
    out = []
    for key in keys:
        for lab in fc.basis(key):
            if (kind == "f") != (lab[0] == "f"):
                continue
            lam, F = fc.vec_to_pair({lab: Fraction(1)})
            dv = apply_vec(fc, {lab: Fraction(1)})
            dlam, dF = fc.vec_to_pair(dv) if dv else (None, None)
            out.append((key[0], lam, F, dlam, dF))
    return out


def check(alg, bar, zs, bzs, xs, tog, st):
    s1, s2, t1, t2 = st
    for (nc, lam, F, dlam, dF), (z, bz) in product(xs, zs_pairs(zs, bzs)):
        sig = -1 if (s1 * nc + s2) % 2 else 1
        tau = -1 if (t1 * nc + t2) % 2 else 1
        lhs = apply_vec(bar, contract(alg, lam, F, {z: Fraction(1)}, tog))
        for l, c in contract(alg, lam, F, bz, tog).items():
            acc(lhs, l, -sig * c)
        for l, c in contract(alg, dlam, dF, {z: Fraction(1)}, tog).items():
            acc(lhs, l, -tau * c)
        if lhs:
            return False
    return True


def zs_pairs(zs, bzs):
    return list(zip(zs, bzs))


def stage(name, alg, bar, zs, xs, togs, sts, base_tog=None):
    bzs = [bar.apply(z) for z in zs]
    winners = []
    for tg in togs:
        for st in sts:
            tog = tg if base_tog is None else merge(base_tog, tg)
            if check(alg, bar, zs, bzs, xs, tog, st):
                winners.append((tog, st))
    print(name, "winners:", len(winners))
    for w in winners[:8]:
        print("   ", w)
    return winners


def merge(base, lam_bits):
    # lam_bits fill (o1, g0, g1, g2); base carries (h0..h3)
    return lam_bits + base[4:]


kx2 = MonomialPresentation(Quiver(["1"], [("x", "1", "1")]), [("x", "x")])
mk, bark, fck = setup(kx2, 6)
alg = mk.alg

zs = [lab for n in range(5) for w in range(6)
      for lab in bark.basis((n, w)) if len(lab[2]) <= 2]
print("z set:", len(zs))

fkeys = [(n, w) for n in range(-2, 2) for w in range(-4, 4)]
xf = xs_of(fck, "f", fkeys)
xb = xs_of(fck, "b", [(n, w) for n in range(-4, 1) for w in range(0, 5)])
print("pure-F xs:", len(xf), " pure-lam xs:", len(xb))

# stage 1: pure F -- lambda toggles irrelevant, fix (0,0,0,0)
togs1 = [(0, 0, 0, 0) + h for h in product((0, 1), repeat=4)]
sts = list(product((0, 1), repeat=4))
w1 = stage("stage1 (F bits h0..h3, s, t)", alg, bark, zs, xf, togs1, sts)

# stage 2: pure lambda, F bits fixed from each stage-1 winner
for tog1, st1 in w1[:4]:
    togs2 = [lb for lb in product((0, 1), repeat=4)]
    w2 = stage("stage2 base=%s st=%s" % (tog1[4:], st1), alg, bark, zs, xb,
               togs2, [st1], base_tog=tog1)
