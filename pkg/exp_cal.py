"""Probe: machine-verify calculus signs (bracket, cup, connes)."""
import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.calculus import (cone_bidegree, cone_apply, cone_bracket, cup,
                            unit_field, connes_d)

random.seed(7)


def ex2_model(W=10):
    q = Quiver(['1', '2', '3'], [('x', '1', '2'), ('y', '2', '2'),
                                 ('z', '2', '3')])
    return build_model(MonomialPresentation(q, [('x', 'y', 'y'),
                                                ('y', 'y', 'z')]), W)


def kx2_model(W=7):
    q = Quiver(['1'], [('x', '1', '1')])
    return build_model(MonomialPresentation(q, [('x', 'x')]), W)


def rand_pair(fields, key, tries=6):
    labs = fields.basis(key)
    if not labs:
        return None
    vec = {}
    for lab in labs:
        c = random.randint(-2, 2)
        if c:
            vec[lab] = Fraction(c)
    if not vec:
        vec = {labs[0]: Fraction(1)}
    return fields.vec_to_pair(vec)


def pair_eq(fields, x, y):
    vx = fields.pair_to_vec(*x)
    vy = fields.pair_to_vec(*y)
    return vx == vy


def pair_sub(fields, x, y):
    vx = fields.pair_to_vec(*x)
    for k, c in fields.pair_to_vec(*y).items():
        z = vx.get(k, 0) - c
        if z:
            vx[k] = z
        else:
            vx.pop(k, None)
    return vx


def check_bracket_chain_map(model, fields, keys, trials=40):
    bad = []
    for _ in range(trials):
        kx = random.choice(keys)
        ky = random.choice(keys)
        x = rand_pair(fields, kx)
        y = rand_pair(fields, ky)
        if x is None or y is None:
            continue
        nx = kx[0]
        lie_x = nx - 1
        lhs = cone_apply(fields, cone_bracket(model, x, y))
        t1 = cone_bracket(model, cone_apply(fields, x), y)
        t2 = cone_bracket(model, x, cone_apply(fields, y))
        sg = -1 if lie_x % 2 else 1
        rhs_vec = fields.pair_to_vec(*t1)
        for k, c in fields.pair_to_vec(*t2).items():
            z = rhs_vec.get(k, 0) + sg * c
            if z:
                rhs_vec[k] = z
            else:
                rhs_vec.pop(k, None)
        lhs_vec = fields.pair_to_vec(*lhs)
        if lhs_vec != rhs_vec:
            bad.append((kx, ky))
    return bad


def check_cup_chain_map(model, fields, keys, trials=40, sym=False):
    bad = []
    for _ in range(trials):
        kx = random.choice(keys)
        ky = random.choice(keys)
        x = rand_pair(fields, kx)
        y = rand_pair(fields, ky)
        if x is None or y is None:
            continue
        nx = kx[0]
        lhs = cone_apply(fields, cup(model, x, y, symmetrized=sym))
        t1 = cup(model, cone_apply(fields, x), y, symmetrized=sym)
        t2 = cup(model, x, cone_apply(fields, y), symmetrized=sym)
        sg = -1 if nx % 2 else 1
        rhs_vec = fields.pair_to_vec(*t1)
        for k, c in fields.pair_to_vec(*t2).items():
            z = rhs_vec.get(k, 0) + sg * c
            if z:
                rhs_vec[k] = z
            else:
                rhs_vec.pop(k, None)
        lhs_vec = fields.pair_to_vec(*lhs)
        if lhs_vec != rhs_vec:
            bad.append((kx, ky, lhs_vec, rhs_vec))
    return bad


def check_unit(model, fields, keys, trials=20):
    e = unit_field(model)
    bad = []
    for _ in range(trials):
        k = random.choice(keys)
        x = rand_pair(fields, k)
        if x is None:
            continue
        if not pair_eq(fields, cup(model, e, x), x):
            bad.append(("left", k))
        if not pair_eq(fields, cup(model, x, e), x):
            bad.append(("right", k))
    return bad


def vec_apply_cx(cx, vec):
    out = {}
    for lab, c in vec.items():
        for lab2, c2 in cx.apply(lab).items():
            y = out.get(lab2, 0) + c * c2
            if y:
                out[lab2] = y
            else:
                out.pop(lab2, None)
    return out


def check_connes(model, forms, keys):
    alg = model.alg
    bad = []
    for key in keys:
        for lab in forms.basis(key):
            v = {lab: Fraction(1)}
            lhs = connes_d(alg, vec_apply_cx(forms, v))
            rhs = vec_apply_cx(forms, connes_d(alg, v))
            tot = dict(lhs)
            for k, c in rhs.items():
                z = tot.get(k, 0) + c
                if z:
                    tot[k] = z
                else:
                    tot.pop(k, None)
            if tot:
                bad.append((key, lab, tot))
    return bad


def main():
    for name, model, W in [("ex2", ex2_model(10), 8),
                           ("kx2", kx2_model(7), 6)]:
        fields = FieldsComplex(model)
        keys = []
        for n in range(0, 4):
            for w in range(-4, W + 1):
                if fields.basis((n, w)):
                    keys.append((n, w))
        print(name, "field keys:", len(keys))
        bad = check_bracket_chain_map(model, fields, keys)
        print(name, "bracket chain map fails:", len(bad), bad[:4])
        bad = check_cup_chain_map(model, fields, keys)
        print(name, "cup chain map fails:", len(bad),
              [b[:2] for b in bad[:4]])
        bad = check_cup_chain_map(model, fields, keys, sym=True)
        print(name, "sym cup chain map fails:", len(bad),
              [b[:2] for b in bad[:4]])
        bad = check_unit(model, fields, keys)
        print(name, "unit fails:", len(bad), bad[:4])
        forms = FormsComplex(model)
        fkeys = []
        for d in range(0, 5):
            for w in range(0, W + 1):
                if forms.basis((d, w)):
                    fkeys.append((d, w))
        bad = check_connes(model, forms, fkeys)
        print(name, "connes anticommute fails:", len(bad), bad[:3])


if __name__ == "__main__":
    main()
