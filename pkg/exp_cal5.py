import itertools
import random
from fractions import Fraction

from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex, FormsComplex
from ncalc.calculus import cone_bidegree
from ncalc.linalg import vec_add, vec_scale

random.seed(11)


def pres_kx2():
    return MonomialPresentation(Quiver(["1"], [("x", "1", "1")]),
                                [("x", "x")])


def pres_ex2():
    return MonomialPresentation(
        Quiver(["1", "2", "3"],
               [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
        [("x", "y", "y"), ("y", "y", "z")])


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


def _emit(out, k, c):
    y = out.get(k, 0) + c
    if y:
        out[k] = y
    else:
        out.pop(k, None)


def sgn(bits, du, dv, n):
    b1, b2, b3, b4, b5, b6 = bits
    e = b1 * du + b2 * dv + b3 * n + b4 * n * du + b5 * n * dv + b6 * du * dv
    return -1 if e % 2 else 1


def contract_p(model, x, vec, fbits, lbit_b, lbits_f, order):
    """Parameterized contraction: fbits for the F-term sign, lbit_b /
    lbits_f for the loop term; order: 0 = u.F(v), 1 = F(v).u."""
    alg = model.alg
    lam, F = x
    n = 1 - F.degree
    out = {}
    for lab, c in vec.items():
        if lab[0] == "b":
            if lam is not None and lam.terms:
                du = alg.word_degree(lab[1])
                s = sgn(lbit_b, du, 0, n)
                for w2, c2 in (lam * El(alg, {lab[1]: Fraction(1)})).terms.items():
                    _emit(out, ("b", w2), s * c * c2)
            continue
        _, v0, u0 = lab
        du = alg.word_degree(u0)
        dv = alg.gen[v0].degree
        if lam is not None and lam.terms:
            s = sgn(lbits_f, du, dv, n)
            for w2, c2 in (lam * El(alg, {u0: Fraction(1)})).terms.items():
                _emit(out, ("f", v0, w2), s * c * c2)
        if F.values:
            fv = F.value(v0)
            if fv:
                s = sgn(fbits, du, dv, n)
                ue = El(alg, {u0: Fraction(1)})
                prod = (ue * fv) if order == 0 else (fv * ue)
                for w2, c2 in prod.terms.items():
                    _emit(out, ("b", w2), s * c * c2)
    return out


def rand_field(fields, n, w):
    labs = fields.basis((n, w))
    if not labs:
        return None
    vec = {}
    for lab in labs:
        c = random.choice([0, 1, -1, 2])
        if c:
            vec[lab] = Fraction(c)
    if not vec:
        vec = {labs[0]: Fraction(1)}
    return fields.vec_to_pair(vec)


def scan(name, pres, W, nmax=4, wfmax=8):
    model = build_model(pres, W)
    fields = FieldsComplex(model)
    forms = FormsComplex(model)

    def cone_diff(x):
        return fields.vec_to_pair(apply_vec(fields, fields.pair_to_vec(*x)))

    xs = []
    for n in range(0, nmax + 1):
        for w in range(-5, 5):
            x = rand_field(fields, n, w)
            if x is not None and not (x[0] and x[0].terms):
                xs.append(x)   # derivation-only fields pin the F slot
    forml = []
    for d in range(0, 5):
        for w in range(0, wfmax + 1):
            forml.extend(forms.basis((d, w)))
    tests = []
    for x in xs:
        dx = cone_diff(x)
        for lab in forml:
            om = {lab: Fraction(1)}
            tests.append((x, dx, om, apply_vec(forms, om)))
    random.shuffle(tests)
    tests = tests[:220]

    cands = []
    for fbits in itertools.product((0, 1), repeat=6):
        for order in (0, 1):
            for s_bit in (0, 1):
                for t_bit in (0, 1):
                    cands.append((fbits, order, s_bit, t_bit))
    live = cands
    teeth = 0
    zero = (0, 0, 0, 0, 0, 0)
    for x, dx, om, dom in tests:
        n, _ = cone_bidegree(x)
        had = False
        nxt = []
        for fbits, order, s_bit, t_bit in live:
            lhs = apply_vec(forms, contract_p(model, x, om, fbits, zero, zero, order))
            mid = contract_p(model, x, dom, fbits, zero, zero, order)
            rhs = contract_p(model, dx, om, fbits, zero, zero, order)
            if lhs or mid or rhs:
                had = True
            s = (-1 if n % 2 else 1) * (-1 if s_bit else 1)
            t = -1 if t_bit else 1
            r = vec_add(vec_add(lhs, vec_scale(mid, -s)), vec_scale(rhs, -t))
            if not r:
                nxt.append((fbits, order, s_bit, t_bit))
        if had:
            teeth += 1
        live = nxt
        if not live:
            print(f"{name}: NO surviving contraction sign profile")
            return None
    print(f"{name}: teeth={teeth}, surviving contraction profiles: {len(live)}")
    for c in live[:8]:
        print("   fbits=%s order=%d sigma_bit=%d tau_bit=%d" % c)
    return live


live1 = scan("kx2", pres_kx2(), 7)
live2 = scan("ex2", pres_ex2(), 9)
if live1 and live2:
    both = [c for c in live1 if c in live2]
    print("common profiles:", len(both))
    for c in both[:10]:
        print("   fbits=%s order=%d sigma_bit=%d tau_bit=%d" % c)
