"""Probe 2 (fast): connes sign candidates on kx2; cup class-level checks."""
import random
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.homology import Homology
from ncalc.calculus import cone_apply, cup

random.seed(11)


def ex2_model(W=8):
    q = Quiver(['1', '2', '3'], [('x', '1', '2'), ('y', '2', '2'),
                                 ('z', '2', '3')])
    return build_model(MonomialPresentation(q, [('x', 'y', 'y'),
                                                ('y', 'y', 'z')]), W)


def kx2_model(W=6):
    q = Quiver(['1'], [('x', '1', '1')])
    return build_model(MonomialPresentation(q, [('x', 'x')]), W)


def connes_param(alg, vec, variant):
    out = {}
    for lab, c in vec.items():
        if lab[0] != "b":
            continue
        u = lab[1]
        if alg.is_trivial_word(u):
            continue
        degs = [alg.gen[v].degree for v in u]
        total = sum(degs)
        pre = 0
        for i, v in enumerate(u):
            di = degs[i]
            post = total - pre - di
            eps = {"rot": post * (pre + di),
                   "rot+tot": post * (pre + di) + total,
                   "rot+di": post * (pre + di) + di,
                   "rot+pre": post * (pre + di) + pre,
                   "spec": (pre + di) * post + pre * di,
                   "spec+tot": (pre + di) * post + pre * di + total,
                   "pre*rest": pre * (total - pre),
                   "pre*rest+di": pre * (total - pre) + di,
                   }[variant]
            s = -1 if eps % 2 else 1
            word = u[i + 1:] + u[:i]
            if not word:
                word = ("@" + alg.gen[v].source,)
            k = ("f", v, word)
            y = out.get(k, 0) + s * c
            if y:
                out[k] = y
            else:
                out.pop(k, None)
            pre += di
    return out


def vec_apply_cx(cx, vec, cache):
    out = {}
    for lab, c in vec.items():
        if lab not in cache:
            cache[lab] = cx.apply(lab)
        for lab2, c2 in cache[lab].items():
            y = out.get(lab2, 0) + c * c2
            if y:
                out[lab2] = y
            else:
                out.pop(lab2, None)
    return out


def scan_connes(model, forms, keys, variants):
    alg = model.alg
    cache = {}
    res = {}
    labs_by_key = {key: forms.basis(key) for key in keys}
    for var in variants:
        bad = 0
        first = None
        for key in keys:
            for lab in labs_by_key[key]:
                v = {lab: Fraction(1)}
                lhs = connes_param(alg, vec_apply_cx(forms, v, cache), var)
                rhs = vec_apply_cx(forms, connes_param(alg, v, var), cache)
                tot = dict(lhs)
                for k, c in rhs.items():
                    z = tot.get(k, 0) + c
                    if z:
                        tot[k] = z
                    else:
                        tot.pop(k, None)
                if tot:
                    bad += 1
                    if first is None:
                        first = (key, lab)
        res[var] = (bad, first)
    return res


def rand_cocycle(fields, hom, key):
    blk = hom.block(key)
    if not blk.reps:
        return None
    vec = {}
    for rep in blk.reps:
        c = random.randint(-2, 2)
        if c:
            for k, x in rep.items():
                y = vec.get(k, 0) + c * x
                if y:
                    vec[k] = y
                else:
                    vec.pop(k, None)
    if not vec:
        vec = dict(blk.reps[0])
    return fields.vec_to_pair(vec)


def rand_cobound(fields, key):
    n, w = key
    labs = fields.basis((n - 1, w))
    if not labs:
        return None
    vec = {}
    for lab in labs:
        c = random.randint(-1, 1)
        if c:
            vec[lab] = Fraction(c)
    if not vec:
        vec = {labs[0]: Fraction(1)}
    return cone_apply(fields, fields.vec_to_pair(vec))


def is_cocycle(fields, x):
    d = cone_apply(fields, x)
    return not fields.pair_to_vec(*d)


def check_cup_class(name, model, Wmax, trials):
    fields = FieldsComplex(model)
    hom = Homology(fields)
    keys = [(n, w) for n in range(0, 4) for w in range(-3, Wmax + 1)
            if fields.basis((n, w))]
    closure_bad, indep_bad, tested = [], [], 0
    for _ in range(trials):
        kx, ky = random.choice(keys), random.choice(keys)
        if kx[1] + ky[1] > Wmax or kx[0] + ky[0] > 4:
            continue
        x = rand_cocycle(fields, hom, kx)
        y = rand_cocycle(fields, hom, ky)
        if x is None or y is None:
            continue
        tested += 1
        z = cup(model, x, y)
        kz = (kx[0] + ky[0], kx[1] + ky[1])
        if not is_cocycle(fields, z):
            closure_bad.append((kx, ky))
            continue
        bx = rand_cobound(fields, kx)
        if bx is None:
            continue
        xb = (x[0] + bx[0], x[1] + bx[1])
        z2 = cup(model, xb, y)
        if not is_cocycle(fields, z2):
            indep_bad.append((kx, ky, "z2-not-cocycle"))
            continue
        blk = hom.block(kz)
        try:
            c1 = blk.coords(fields.pair_to_vec(*z))
            c2 = blk.coords(fields.pair_to_vec(*z2))
        except ValueError:
            indep_bad.append((kx, ky, "coords"))
            continue
        if c1 != c2:
            indep_bad.append((kx, ky, "class"))
    print(name, "cup tested:", tested)
    print(name, "cup closure fails:", len(closure_bad), closure_bad[:5])
    print(name, "cup class-indep fails:", len(indep_bad), indep_bad[:5])


def main():
    model = kx2_model(6)
    forms = FormsComplex(model)
    fkeys = [(d, w) for d in range(0, 5) for w in range(0, 7)
             if forms.basis((d, w))]
    variants = ["rot", "rot+tot", "rot+di", "rot+pre", "spec", "spec+tot",
                "pre*rest", "pre*rest+di"]
    print("kx2 connes scan:", scan_connes(model, forms, fkeys, variants))
    check_cup_class("kx2", model, 5, 60)
    model2 = ex2_model(8)
    forms2 = FormsComplex(model2)
    fkeys2 = [(d, w) for d in range(0, 4) for w in range(0, 7)
              if forms2.basis((d, w))]
    print("ex2 connes scan:", scan_connes(model2, forms2, fkeys2,
                                          ["rot", "spec"]))
    check_cup_class("ex2", model2, 6, 60)


if __name__ == "__main__":
    main()
