"""Probe: named ex2 families as cone pairs; bracket golden tables."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex
from ncalc.homology import Homology
from ncalc.calculus import cone_apply, cone_bracket, cup

A, B, GG, LL = 'x.y.y', 'y.y.z', 'x.y.y.z', 'x.y.y.y.z'


def ex2_model(W=12):
    q = Quiver(['1', '2', '3'], [('x', '1', '2'), ('y', '2', '2'),
                                 ('z', '2', '3')])
    return build_model(MonomialPresentation(q, [('x', 'y', 'y'),
                                                ('y', 'y', 'z')]), W)


model = ex2_model(12)
alg = model.alg
fields = FieldsComplex(model)
hom = Homology(fields)


def word(*names):
    return El(alg, {tuple(names): Fraction(1)})


def ys(s):
    return ('y',) * s


def a_ys_b(s, coeff=1):
    """alpha y^s beta with the signed low-s identifications."""
    if s >= 0:
        return El(alg, {(A,) + ys(s) + (B,): Fraction(coeff)})
    if s == -1:
        return El(alg, {(LL,): Fraction(coeff)})
    if s == -2:
        return El(alg, {(GG,): Fraction(-coeff)})
    return alg.zero()


def a_ys_z(s, coeff=1):
    if s >= 0:
        return El(alg, {(A,) + ys(s) + ('z',): Fraction(coeff)})
    return alg.zero()


def x_ys_b(s, coeff=1):
    if s >= 0:
        return El(alg, {('x',) + ys(s) + (B,): Fraction(coeff)})
    return alg.zero()


def gm(degree, weight, vals):
    return GenMap(alg, degree, weight,
                  {k: v for k, v in vals.items() if v})


def E(s):
    return (alg.zero(),
            gm(0, s, {'y': word(*(('y',) * (s + 1))),
                      A: 2 * El(alg, {(A,) + ys(s): Fraction(1)}),
                      B: 2 * El(alg, {ys(s) + (B,): Fraction(1)}),
                      LL: a_ys_b(s - 1, 3),
                      GG: a_ys_b(s - 2, -2)}))


def F(s):
    return (alg.zero(),
            gm(0, s, {'x': El(alg, {('x',) + ys(s): Fraction(1)}),
                      A: El(alg, {(A,) + ys(s): Fraction(1)}),
                      LL: a_ys_b(s - 1, 1),
                      GG: a_ys_b(s - 2, -1)}))


def G(s):
    return (alg.zero(),
            gm(0, s, {'z': El(alg, {ys(s) + ('z',): Fraction(1)}),
                      B: El(alg, {ys(s) + (B,): Fraction(1)}),
                      LL: a_ys_b(s - 1, 1),
                      GG: a_ys_b(s - 2, -1)}))


def Phi(s):
    return (alg.zero(),
            gm(-1, s - 2, {A: El(alg, {('x',) + ys(s): Fraction(1)}),
                           B: El(alg, {ys(s) + ('z',): Fraction(1)}),
                           LL: a_ys_z(s - 1, 1),
                           GG: a_ys_z(s - 2, -1)}))


def Theta(s):
    # Theta_s(Lambda) = alpha y^s z - x y^s beta; zero elsewhere
    return (alg.zero(),
            gm(-1, s - 1, {LL: a_ys_z(s, 1) - x_ys_b(s, 1)}))


def Xi(s):
    # Xi_s(Gamma) = Theta_s-type value on Gamma
    return (alg.zero(),
            gm(-1, s, {GG: a_ys_z(s, 1) - x_ys_b(s, 1)}))


def is_cocycle(x):
    d = cone_apply(fields, x)
    return not fields.pair_to_vec(*d)


def class_coords(x, key):
    return hom.block(key).coords(fields.pair_to_vec(*x))


def vsub(u, v):
    out = dict(u)
    for k, c in v.items():
        z = out.get(k, 0) - c
        if z:
            out[k] = z
        else:
            out.pop(k, None)
    return out


print("cocycle checks:")
for s in range(0, 5):
    print("  E%d %s  F%d %s  G%d %s" % (s, is_cocycle(E(s)),
                                        s, is_cocycle(F(s)),
                                        s, is_cocycle(G(s))))
for s in range(0, 4):
    print("  Phi%d %s  Theta%d %s  Xi%d %s" % (s, is_cocycle(Phi(s)),
                                               s, is_cocycle(Theta(s)),
                                               s, is_cocycle(Xi(s))))

print("[E_s, E_t] = (s-t) E_{s+t}:")
for s in range(0, 4):
    for t in range(0, 4):
        if s + t > 6:
            continue
        br = cone_bracket(model, E(s), E(t))
        ok = is_cocycle(br)
        lhs = class_coords(br, (1, s + t))
        rhs = class_coords(E(s + t), (1, s + t))
        rhs = {k: (s - t) * c for k, c in rhs.items() if (s - t) * c}
        print("  s=%d t=%d cocycle=%s match=%s" % (s, t, ok,
                                                   not vsub(lhs, rhs)))

print("[F0,-] and [G0,-] vanish on HH1/HH2 classes:")
for nm, X in [("F0", F(0)), ("G0", G(0))]:
    allok = True
    for key in [(1, 0), (1, 1), (1, 2), (1, 3), (2, -2), (2, -1)]:
        blk = hom.block(key)
        for rep in blk.reps:
            y = fields.vec_to_pair(dict(rep))
            br = cone_bracket(model, X, y)
            cc = class_coords(br, key)  # bracket with wt-0 deg-1: same key
            if cc:
                allok = False
                print("  [%s, rep@%s] != 0: %s" % (nm, key, cc))
    print("  [%s,-] all zero: %s" % (nm, allok))

print("Theta/Xi are cocycles and coboundaries:")
for s in range(0, 3):
    for nm, X, key in [("Theta", Theta(s), (2, s - 1)),
                       ("Xi", Xi(s), (2, s))]:
        print("  %s%d cocycle=%s class=%s" % (
            nm, s, is_cocycle(X), class_coords(X, key)))

print("HH2 blocks at weight >= 0 (expect dim 0, so [*, Phi_t] t>=1 vanish vacuously):")
print("  dims:", {w: len(hom.block((2, w)).reps) for w in range(0, 7)})

print("[E_1, Phi_0] class (claimed boundary; machine says?):")
br = cone_bracket(model, E(1), Phi(0))
print("  cocycle", is_cocycle(br), "class", class_coords(br, (2, -1)))
print("  bracket b-part:", br[0], "f-part:", br[1])
print("  Phi(1)-as-tabled vec:", fields.pair_to_vec(*Phi(1)))
print("  Theta0 vec:", fields.pair_to_vec(*Theta(0)))
print("  bracket vec:", fields.pair_to_vec(*br))

print("[E_{s+2}, Phi_0] classes (land in weight >= 0 blocks, all dim 0):")
for s in range(0, 3):
    br = cone_bracket(model, E(s + 2), Phi(0))
    key = (2, s)
    cc = class_coords(br, key)
    print("  s=%d key=%s cocycle=%s class=%s" % (s, key, is_cocycle(br), cc))

print("corrected Phi1 (Lambda -> -(3/2)(alpha z - x beta)):")
Phi1c = (alg.zero(),
         gm(-1, -1, {A: El(alg, {('x', 'y'): Fraction(1)}),
                     B: El(alg, {('y', 'z'): Fraction(1)}),
                     LL: Fraction(-3, 2) * (a_ys_z(0) - x_ys_b(0))}))
print("  cocycle", is_cocycle(Phi1c), "class", class_coords(Phi1c, (2, -1)))
br = cone_bracket(model, E(1), Phi(0))
print("  [E1,Phi0] == 2*[Phi1c]:",
      class_coords(br, (2, -1)) == {k: 2 * c for k, c in
                                    class_coords(Phi1c, (2, -1)).items()})

print("cup golden: [E_s] cup [y^w-class]:")
h0 = hom.block((0, 4))
yw = fields.vec_to_pair(dict(h0.reps[0]))
z = cup(model, E(0), yw)
print("  E0 cup y4: cocycle", is_cocycle(z), "class",
      class_coords(z, (1, 4)))
print("  E4 class:", class_coords(E(4), (1, 4)))
