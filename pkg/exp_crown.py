"""Probe: crown quiver F_m families, bracket table, cups, HC differential."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex
from ncalc.homology import Homology
from ncalc.calculus import cone_apply, cone_bracket, cup, unit_field


def crown_model(r, W=13):
    vs = [str(i) for i in range(1, r + 1)]
    arrows = [("a%d" % i, str(i), str(i % r + 1)) for i in range(1, r + 1)]
    rel = tuple("a%d" % i for i in list(range(1, r + 1)) + [1])
    return build_model(MonomialPresentation(Quiver(vs, arrows), [rel]), W)


r = 2
model = crown_model(r, 13)
alg = model.alg
fields = FieldsComplex(model)
hom = Homology(fields)

print("gens:", [(g.name, g.degree, g.weight) for g in alg.gen.values()])
print("HH blocks (dim>0):", {k: len(b.reps) for k, b in
                             sorted(hom.blocks.items())
                             if b.reps} if hasattr(hom, 'blocks') else None)


def eps_name(t):
    # chain generator of degree t; eps_0 is the arrow a1 itself
    if t == 0:
        return "a1"
    for g in alg.gen.values():
        if g.degree == t and g.weight == 1 + t * r:
            return g.name
    return None


def eps_el(t, coeff=1):
    nm = eps_name(t)
    if nm is None:
        return alg.zero()
    return El(alg, {(nm,): Fraction(coeff)})


max_t = max(g.degree for g in alg.gen.values())
print("eps range: 0..%d" % max_t)


def Fm(m):
    vals = {}
    for t in range(0, max_t + 1):
        nm = eps_name(t)
        if nm is None or t - m < 0:
            continue
        if m % 2 == 0:
            c = t - m + 1
            v = eps_el(t - m, c)
        else:
            v = eps_el(t - m) if t % 2 == 1 else alg.zero()
        if v:
            vals[nm] = v
    return (alg.zero(), GenMap(alg, -m, -m * r, vals))


def is_cocycle(x):
    d = cone_apply(fields, x)
    return not fields.pair_to_vec(*d)


def class_coords(x, key):
    return hom.block(key).coords(fields.pair_to_vec(*x))


print("F_m cocycle checks:")
for m in range(0, 6):
    x = Fm(m)
    print("  F%d vals=%d cocycle=%s" % (m, len(x[1].values), is_cocycle(x)))

print("block dims at F_m keys:")
for m in range(0, 6):
    key = (m + 1, -m * r)
    print("  m=%d key=%s dim=%d" % (m, key, len(hom.block(key).reps)))

print("[F_m, F_n] table, m+n <= 5:")
for m in range(0, 6):
    for n in range(0, 6):
        if m + n > 5:
            continue
        br = cone_bracket(model, Fm(m), Fm(n))
        key = (m + n + 1, -(m + n) * r)
        ok = is_cocycle(br)
        lhs = class_coords(br, key)
        rhs = class_coords(Fm(m + n), key)
        if m % 2 == 0 and n % 2 == 0:
            c = m - n
        elif m % 2 == 1 and n % 2 == 1:
            c = 0
        elif m % 2 == 1 and n % 2 == 0:
            c = m
        else:
            c = -n  # antisymmetry of the (odd, even) rule
        rhs = {k: c * v for k, v in rhs.items() if c * v}
        print("  m=%d n=%d cocycle=%s match=%s lhs=%s c=%d" % (
            m, n, ok, lhs == rhs, lhs, c))

print("cup products of positive-degree classes (expect zero classes):")
keys = [(m + 1, -m * r) for m in range(0, 5)]
for i, k1 in enumerate(keys):
    for k2 in keys:
        b1, b2 = hom.block(k1), hom.block(k2)
        if not b1.reps or not b2.reps:
            continue
        x = fields.vec_to_pair(dict(b1.reps[0]))
        y = fields.vec_to_pair(dict(b2.reps[0]))
        z = cup(model, x, y)
        key = (k1[0] + k2[0], k1[1] + k2[1])
        cc = class_coords(z, key)
        print("  %s cup %s -> %s class=%s cocycle=%s" % (
            k1, k2, key, cc, is_cocycle(z)))

print("unit acts as identity on F_m classes:")
u = unit_field(model)
for m in range(0, 4):
    x = Fm(m)
    key = (m + 1, -m * r)
    a = class_coords(cup(model, u, x), key)
    b = class_coords(cup(model, x, u), key)
    c = class_coords(x, key)
    print("  m=%d unit*x==x: %s x*unit==x: %s" % (m, a == c, b == c))
