import random
from fractions import Fraction

from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.calculus import contract_form, lie_form, cone_bidegree
from ncalc.linalg import vec_add, vec_scale

random.seed(7)


def pres_ex2():
    return MonomialPresentation(
        Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
        [("x", "y", "y"), ("y", "y", "z")])


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


def rand_field(fields, n, w):
    labs = fields.basis((n, w))
    if not labs:
        return None
    vec = {}
    for lab in labs:
        c = random.choice([0, 0, 1, -1, 2])
        if c:
            vec[lab] = Fraction(c)
    if not vec:
        vec = {labs[0]: Fraction(1)}
    return fields.vec_to_pair(vec)


for name, pres, W in [("ex2", pres_ex2(), 9), ("kx2", pres_kx2(), 7)]:
    model = build_model(pres, W)
    fields = FieldsComplex(model)
    forms = FormsComplex(model)
    alg = model.alg

    def cone_diff(x):
        return fields.vec_to_pair(apply_vec(fields, fields.pair_to_vec(*x)))

    # test fields over several bidegrees, plus loop-only and mixed ones
    xs = []
    for n in range(0, 4):
        for w in range(-4, 5):
            x = rand_field(fields, n, w)
            if x is not None:
                xs.append(x)
    random.shuffle(xs)
    xs = xs[:14]

    # forms labels to act on
    forml = []
    for d in range(0, 4):
        for w in range(0, 7):
            forml.extend(forms.basis((d, w)))
    random.shuffle(forml)
    forml = forml[:40]

    resi = {}
    resl = {}
    for x in xs:
        n, wx = cone_bidegree(x)
        dx = cone_diff(x)
        for lab in forml:
            om = {lab: Fraction(1)}
            dom = apply_vec(forms, om)
            # contraction identity
            lhs = apply_vec(forms, contract_form(model, x, om))
            mid = contract_form(model, x, dom)
            rhs = contract_form(model, dx, om)
            for s_bit in (0, 1):
                for t_bit in (0, 1):
                    s = (-1 if n % 2 else 1) * (-1 if s_bit else 1)
                    t = -1 if t_bit else 1
                    r = vec_add(vec_add(lhs, vec_scale(mid, -s)),
                                vec_scale(rhs, -t))
                    key = ("i", s_bit, t_bit)
                    resi[key] = resi.get(key, 0) + (1 if r else 0)
            # Lie identity (derivation part only)
            lam, F = x
            if lam and lam.terms:
                continue
            g = F.degree
            lhs = apply_vec(forms, lie_form(model, x, om))
            mid = lie_form(model, x, dom)
            rhs = lie_form(model, dx, om)
            for s_bit in (0, 1):
                for t_bit in (0, 1):
                    s = (-1 if g % 2 else 1) * (-1 if s_bit else 1)
                    t = -1 if t_bit else 1
                    r = vec_add(vec_add(lhs, vec_scale(mid, -s)),
                                vec_scale(rhs, -t))
                    key = ("L", s_bit, t_bit)
                    resl[key] = resl.get(key, 0) + (1 if r else 0)
    print(f"== {name}")
    print("  contraction residuals per (extra-sign, rhs-sign):", resi)
    print("  lie residuals per (extra-sign, rhs-sign):", resl)
