import itertools
from fractions import Fraction

from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.bar import QuotientOps, BarChains, BarCochains
from ncalc.homology import Homology


def pres_kx2():
    return MonomialPresentation(Quiver(["1"], [("x", "1", "1")]),
                                [("x", "x")])


def pres_a3rad2():
    return MonomialPresentation(
        Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]),
        [("a", "b")])


def pres_ex2():
    return MonomialPresentation(
        Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
        [("x", "y", "y"), ("y", "y", "z")])


def vec_add(a, b, s=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + s * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


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


for name, pres in [("kx2", pres_kx2()), ("a3", pres_a3rad2())]:
    ops = QuotientOps(pres)
    ch = BarChains(ops)
    co = BarCochains(pres)
    top = ops.top_weight()
    print(f"== {name}: top_weight={top}")
    PMAX = 6
    WMAX = min(2 + PMAX * top, 14)
    bad = 0
    # b^2 = 0
    for p in range(0, PMAX + 1):
        for w in range(0, WMAX + 1):
            for lab in ch.basis((p, w)):
                v2 = apply_vec(ch, ch.apply(lab))
                if v2:
                    bad += 1
    print("  b^2 fails:", bad)
    # delta^2 = 0
    bad = 0
    for p in range(0, PMAX):
        for w in range(-top, top + 1):
            for lab in co.basis((p, w)):
                v2 = apply_vec(co, co.apply(lab))
                if v2:
                    bad += 1
    print("  delta^2 fails:", bad)
    # B^2 = 0 and bB + Bb = 0
    bad = badc = 0
    for p in range(0, PMAX):
        for w in range(0, WMAX + 1):
            for lab in ch.basis((p, w)):
                v = {lab: Fraction(1)}
                if ch.connes(ch.connes(v)):
                    bad += 1
                lhs = apply_vec(ch, ch.connes(v))
                rhs = ch.connes(apply_vec(ch, v))
                if vec_add(lhs, rhs):
                    badc += 1
    print("  B^2 fails:", bad, " bB+Bb fails:", badc)
    # homology dims
    hch = Homology(ch)
    hco = Homology(co)
    print("  HH_ dims:", {(p, w): hch.block((p, w)).dim
                          for p in range(0, 5)
                          for w in range(0, min(4 + p * top, WMAX) + 1)
                          if hch.block((p, w)).dim})
    print("  HH^ dims:", {(p, w): hco.block((p, w)).dim
                          for p in range(0, 5)
                          for w in range(-top * 4 - 1, top + 1)
                          if hco.block((p, w)).dim})
