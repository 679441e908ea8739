"""The small complexes attached to a minimal model (TV, d).

Fields cone (cochain complex, computes HH^*):
    X^n_w = { loops b in B : deg b = -n, wt b = w, src b = tgt b }
          + { F: V -> B vertex-bilinear : F raises degree by 1-n, weight by w }
    D(b, F) = (db, (-1)^{deg b} ad_b + [d, F])
with ad_b the graded commutator on generators and [d,F] = dF - (-1)^s Fd
for F of degree shift s.  The column of B consists of the words with
equal endpoints plus the trivial paths; a derivation assigns each
generator a nontrivial-word value with the same source and target (so
ad of a loop and [d, F] land back in the same space, and no projection
is ever needed -- ad never emits a trivial word against a nontrivial
generator, and [d, F] values are products containing an F-value).
Cochain degree n of a derivation with degree shift s is n = 1 - s;
weight of a derivation is its weight shift, so derivation blocks occur
in negative weights.  H^0 of this cone is the center of A; the
degree-0 row reported by the homology reports instead follows the
centralizer normalization of `centralizer_of_radical`, which the
worked examples pin (see the README design notes).

Forms cone (chain complex, computes HH_*):
    T_d,w = { loops b : deg b = d, wt b = w }
          + { b'(x)v : tgt(b') = src(v), src(b') = tgt(v),
              deg b' + deg v + 1 = d, wt b' + wt v = w }
    D(b) = db
    D(b'(x)v) = co(b'(x)v) - dq(b'(x)v)
where co(b'(x)v) = b'v - (-1)^{|b'||v|} v b' (always a loop) and dq is
the induced differential on one-forms:
    dq(b'(x)v) = db'(x)v + (-1)^{|b'|} sum over dv = ... u1..uk ... of
                 rot(b' u_{<i} (x) u_i (x) u_{>i})
with rot(x (x) u (x) y) = (-1)^{|y|(|x|+|u|)} (y x)(x) u.
co is a chain map (co dq = d co, no sign), hence D^2 = 0 with the
minus sign on dq -- the usual shift of the one-form column.

Cyclic complex: loops modulo graded rotation, as an exact quotient
complex; its homology is the cyclic homology in this setting.

All three follow the block-complex protocol of ncalc.homology.
"""

from fractions import Fraction

from .algebra import El, GenMap, ad
from .homology import Homology
from .linalg import Echelon, Quotient

__all__ = [
    "FieldsComplex",
    "FormsComplex",
    "CyclicComplex",
    "centralizer_of_radical",
    "center_basis",
    "four_term_report",
]


class FieldsComplex:
    def __init__(self, model, der_only=False):
        self.model = model
        self.alg = model.alg
        self.der_only = der_only
        # generators whose differential uses a given letter; [d,F] needs it
        self._users = {}
        for g in self.alg.gens:
            for w in model.diff.value(g.name).terms:
                for x in w:
                    self._users.setdefault(x, set()).add(g.name)

    def next_key(self, key):
        n, w = key
        return (n + 1, w)

    def prev_key(self, key):
        n, w = key
        return (n - 1, w)

    def _value_words(self, degree, weight):
        # Derivation values stay in the span of nontrivial words.  Allowing
        # trivial-path values changes two homology blocks on the worked
        # examples (an extra coboundary in cochain degree 2, a shifted class
        # in cochain degree 2 of the one-relation loop); the bar oracle is
        # built with the same value convention so both sides agree.
        return self.alg.words_of(degree, weight)

    def basis(self, key):
        n, w = key
        alg = self.alg
        out = []
        if not self.der_only and n <= 0 and w >= 0:
            if n == 0 and w == 0:
                out.extend(("b", t) for t in alg.trivial_words())
            out.extend(("b", u) for u in alg.words_of(-n, w)
                       if alg.word_source(u) == alg.word_target(u))
        for g in alg.gens:
            du, wu = g.degree + 1 - n, g.weight + w
            for u in self._value_words(du, wu):
                if (alg.word_source(u) == g.source
                        and alg.word_target(u) == g.target):
                    out.append(("f", g.name, u))
        return out

    def deep_label(self, horizon):
        """Predicate flagging labels that touch weights above `horizon`.

        Used with Homology.stable_dim to screen truncation artifacts of
        models with infinitely many chains: a would-be bounding
        derivation there is an unbounded cascade of generator values,
        and cutting the cascade at the weight ceiling leaves a residue
        class supported on the deepest generators.
        """
        alg = self.alg

        def deep(label):
            if label[0] == "b":
                return alg.word_weight(label[1]) > horizon
            _, g, u = label
            return (alg.gen[g].weight > horizon
                    or alg.word_weight(u) > horizon)

        return deep

    def apply(self, label):
        alg = self.alg
        out = {}
        if label[0] == "b":
            u = label[1]
            el = El(alg, {u: Fraction(1)})
            for w2, c in self.model.diff(el).terms.items():
                out[("b", w2)] = c
            sign = -1 if alg.word_degree(u) % 2 else 1
            for v, val in ad(el).values.items():
                for w2, c in val.terms.items():
                    k = ("f", v, w2)
                    out[k] = out.get(k, 0) + sign * c
            return {k: c for k, c in out.items() if c}
        _, v0, u0 = label
        shift = alg.word_degree(u0) - alg.gen[v0].degree
        F = GenMap(alg, shift, alg.word_weight(u0) - alg.gen[v0].weight,
                   {v0: El(alg, {u0: Fraction(1)})})
        sgn = -1 if shift % 2 else 1
        targets = {v0} | self._users.get(v0, set())
        for v in targets:
            val = self.model.diff(F.value(v)) - sgn * F(self.model.diff.value(v))
            for w2, c in val.terms.items():
                k = ("f", v, w2)
                out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    # -- conversions used by the calculus layer -------------------------

    def pair_to_vec(self, b_el, gmap):
        vec = {}
        if b_el:
            for u, c in b_el.terms.items():
                vec[("b", u)] = c
        if gmap:
            for v, val in gmap.values.items():
                for u, c in val.terms.items():
                    vec[("f", v, u)] = vec.get(("f", v, u), 0) + c
        return {k: c for k, c in vec.items() if c}

    def pair_key(self, b_el, gmap):
        ns, ws = set(), set()
        if b_el:
            ns.add(-b_el.degree())
            ws.add(b_el.weight())
        if gmap:
            ns.add(1 - gmap.degree)
            ws.add(gmap.weight)
        if len(ns) != 1 or len(ws) != 1:
            raise ValueError("mixed-degree cone element")
        return (ns.pop(), ws.pop())

    def vec_to_pair(self, vec):
        b_terms, f_vals = {}, {}
        for k, c in vec.items():
            if k[0] == "b":
                b_terms[k[1]] = c
            else:
                f_vals.setdefault(k[1], {})[k[2]] = c
        b_el = El(self.alg, b_terms)
        gmap = None
        for v, terms in f_vals.items():
            val = El(self.alg, terms)
            g = self.alg.gen[v]
            m = GenMap(self.alg, val.degree() - g.degree,
                       val.weight() - g.weight, {v: val})
            gmap = m if gmap is None else gmap + m
        if gmap is None:
            gmap = GenMap(self.alg, 0, 0, {})
        return b_el, gmap


class FormsComplex:
    def __init__(self, model, forms_only=False, loops_only=False):
        self.model = model
        self.alg = model.alg
        self.forms_only = forms_only
        self.loops_only = loops_only

    def next_key(self, key):
        d, w = key
        return (d - 1, w)

    def prev_key(self, key):
        d, w = key
        return (d + 1, w)

    def basis(self, key):
        d, w = key
        alg = self.alg
        out = []
        if not self.forms_only:
            if d == 0 and w == 0:
                out.extend(("b", t) for t in alg.trivial_words())
            for u in alg.words_of(d, w):
                if alg.word_source(u) == alg.word_target(u):
                    out.append(("b", u))
        if self.loops_only:
            return out
        for g in alg.gens:
            du, wu = d - g.degree - 1, w - g.weight
            if wu < 0 or du < 0:
                continue
            if du == 0 and wu == 0:
                if g.source == g.target:
                    out.append(("f", g.name, ("@" + g.source,)))
                continue
            for u in alg.words_of(du, wu):
                if (alg.word_target(u) == g.source
                        and alg.word_source(u) == g.target):
                    out.append(("f", g.name, u))
        return out

    def apply(self, label):
        alg = self.alg
        out = {}
        if label[0] == "b":
            el = El(alg, {label[1]: Fraction(1)})
            for w2, c in self.model.diff(el).terms.items():
                out[("b", w2)] = c
            return out
        _, v0, u0 = label
        g = alg.gen[v0]
        ub = El(alg, {u0: Fraction(1)})
        vb = El(alg, {(v0,): Fraction(1)})
        du, dv = alg.word_degree(u0), g.degree
        if not self.forms_only:
            sgn = -1 if (du * dv) % 2 else 1
            for w2, c in (ub * vb - sgn * (vb * ub)).terms.items():
                out[("b", w2)] = out.get(("b", w2), 0) + c
        # minus the induced one-form differential
        for w2, c in self.model.diff(ub).terms.items():
            k = ("f", v0, w2)
            out[k] = out.get(k, 0) - c
        outer = -1 if du % 2 else 1
        for wj, cj in self.model.diff.value(v0).terms.items():
            for i, mid in enumerate(wj):
                pre, post = wj[:i], wj[i + 1:]
                dpost = sum(alg.gen[x].degree for x in post)
                dpre = sum(alg.gen[x].degree for x in pre)
                dmid = alg.gen[mid].degree
                s = -1 if (dpost * (du + dpre + dmid)) % 2 else 1
                word = _splice(alg, post, u0, pre)
                k = ("f", mid, word)
                out[k] = out.get(k, 0) - outer * s * cj
        return {k: c for k, c in out.items() if c}

    # -- conversions -----------------------------------------------------

    def b_vec(self, el):
        return {("b", u): c for u, c in el.terms.items()}

    def f_vec(self, vname, el):
        return {("f", vname, u): c for u, c in el.terms.items()}

    def vec_key(self, vec):
        keys = set()
        alg = self.alg
        for k in vec:
            if k[0] == "b":
                keys.add((alg.word_degree(k[1]), alg.word_weight(k[1])))
            else:
                g = alg.gen[k[1]]
                keys.add((alg.word_degree(k[2]) + g.degree + 1,
                          alg.word_weight(k[2]) + g.weight))
        if len(keys) != 1:
            raise ValueError("mixed-degree form element")
        return keys.pop()


def _splice(alg, post, u, pre):
    """The word post*u*pre where u may be a trivial path; never empty."""
    if alg.is_trivial_word(u):
        w = post + pre
        return w if w else u
    return post + u + pre


class CyclicComplex:
    """Loops modulo graded rotation; labels ("q", d, w, i)."""

    def __init__(self, model):
        self.model = model
        self.alg = model.alg
        self._quot = {}

    def next_key(self, key):
        d, w = key
        return (d - 1, w)

    def prev_key(self, key):
        d, w = key
        return (d + 1, w)

    def _loops(self, d, w):
        alg = self.alg
        if d == 0 and w == 0:
            return list(alg.trivial_words())
        return [u for u in alg.words_of(d, w)
                if alg.word_source(u) == alg.word_target(u)]

    def quot(self, key):
        if key in self._quot:
            return self._quot[key]
        d, w = key
        alg = self.alg
        loops = self._loops(d, w)
        rows = []
        for u in loops:
            if len(u) < 2:
                continue
            d1 = alg.gen[u[0]].degree
            sgn = -1 if (d1 * (d - d1)) % 2 else 1
            r = {u: Fraction(1)}
            rot = u[1:] + u[:1]
            r[rot] = r.get(rot, 0) - sgn
            if r.get(rot) == 0:
                r.pop(rot)
            if r:
                rows.append(r)
        q = Quotient(loops, rows)
        self._quot[key] = q
        return q

    def basis(self, key):
        d, w = key
        return [("q", d, w, i) for i in range(self.quot(key).dim)]

    def apply(self, label):
        _, d, w, i = label
        q = self.quot((d, w))
        rep = q.representative(i)
        out_el = self.model.diff(El(self.alg, rep))
        q2 = self.quot((d - 1, w))
        coords = q2.coords(out_el.terms)
        return {("q", d - 1, w, j): c for j, c in coords.items()}

    def class_of(self, el):
        """Quotient coordinates of a loop element, with its block key."""
        d, w = el.degree(), el.weight()
        q = self.quot((d, w))
        return (d, w), {("q", d, w, j): c
                        for j, c in q.coords(el.terms).items()}


# ---------------------------------------------------------------------
# independent checks against the presentation


def _arrow_commute_kernel(pres, paths):
    """Combinations of the given paths commuting with every arrow of A."""
    from .linalg import kernel_basis

    A = pres.arrow_algebra()
    arrows = pres.quiver.arrow_names()

    def commute_map(p):
        a = El(A, {p: Fraction(1)})
        out = {}
        for r in arrows:
            rb = El(A, {(r,): Fraction(1)})
            d = pres.normal_form(a * rb - rb * a)
            for u, c in d.terms.items():
                out[(r, u)] = out.get((r, u), 0) + c
        return {k: c for k, c in out.items() if c}

    return kernel_basis(paths, commute_map)


def centralizer_of_radical(pres, weight):
    """Basis of {a in A_weight : a r = r a for every arrow r}.

    At weight 0 this is the span of the sums of trivial paths that are
    constant on connected components -- the unit, for a connected
    quiver.  This is the degree-0 normalization the worked examples
    use; the honest center is the loop part, `center_basis`.
    """
    return _arrow_commute_kernel(pres, pres.basis(weight))


def center_basis(pres, weight):
    """Basis of the weight-w part of the center Z(A) (central loops)."""
    A = pres.arrow_algebra()
    loops = [p for p in pres.basis(weight)
             if A.word_source(p) == A.word_target(p)]
    return _arrow_commute_kernel(pres, loops)


def _commutator_rows(pres, weight):
    """Spanning set of span{uv - vu} in A_weight (cyclic pairs only)."""
    A = pres.arrow_algebra()
    rows = []
    for w1 in range(0, weight + 1):
        w2 = weight - w1
        for u in pres.basis(w1):
            for v in pres.basis(w2):
                eu, ev = El(A, {u: Fraction(1)}), El(A, {v: Fraction(1)})
                d = pres.normal_form(eu * ev - ev * eu)
                d = d.loop_part()
                if d:
                    rows.append(dict(d.terms))
    return rows


def four_term_report(model, max_degree, max_weight):
    """Cross-checks between the small complexes and the presentation.

    Returns a JSON-able dict; every 'ok' entry must be True for a sound
    model.  Covers: H^0(fields) vs the center of A, H_0(forms) vs
    A/[A,A], the image of the connecting map vs the span of
    commutators, ker(connecting) vs H_1(forms), and the column
    isomorphisms HH_n = H_{n-1}(one-forms), HH^n = H^n(derivations
    alone) for n >= 2.  Each weight entry also records the dimension
    of the centralizer of the radical, the degree-0 normalization the
    homology reports print.
    """
    pres = model.pres
    A = pres.arrow_algebra()
    fields = Homology(FieldsComplex(model))
    der = Homology(FieldsComplex(model, der_only=True))
    forms = Homology(FormsComplex(model))
    oneforms = Homology(FormsComplex(model, forms_only=True))
    loops = Homology(FormsComplex(model, loops_only=True))

    def co_image(rep):
        """Loop-column image of a one-form chain: u (x) v |-> [u, v]."""
        img = {}
        for (tag, v0, u0), c in rep.items():
            vb = El(model.alg, {(v0,): Fraction(1)})
            ub = El(model.alg, {u0: Fraction(1)})
            g = model.alg.gen[v0]
            du = model.alg.word_degree(u0)
            sgn = -1 if (du * g.degree) % 2 else 1
            for u, cc in (ub * vb - sgn * (vb * ub)).terms.items():
                img[u] = img.get(u, 0) + c * cc
        return {u: c for u, c in img.items() if c}

    def co_rank(src_block, tgt_block):
        """Rank of the commutator map on homology classes."""
        ech = Echelon()
        rk = 0
        for rep in src_block.reps:
            cvec = tgt_block.coords(
                {("b", u): c for u, c in co_image(rep).items()})
            if cvec and ech.insert(cvec):
                rk += 1
        return rk

    w_top = min(max_weight, model.faithful_weight)
    report = {"weights": [], "ok": True, "weight_window": w_top,
              "model_complete": model.complete}
    for w in range(0, w_top + 1):
        entry = {"weight": w}
        basis_w = pres.basis(w)
        entry["dim_A"] = len(basis_w)

        # H^0(fields) vs the center of A
        zw = center_basis(pres, w)
        blk = fields.block((0, w))
        imgs = []
        for rep in blk.reps:
            b_el, _ = FieldsComplex(model).vec_to_pair(rep)
            imgs.append(dict(model.augment(b_el).terms))
        ech_z = Echelon(key_order=basis_w)
        for r in zw:
            ech_z.insert(r)
        ech_i = Echelon(key_order=basis_w)
        for r in imgs:
            ech_i.insert(r)
        ok0 = (blk.dim == len(zw) == ech_i.rank
               and all(not ech_z.reduce(r) for r in imgs))
        entry["dim_H0_cone"] = blk.dim
        entry["dim_center"] = len(zw)
        entry["dim_centralizer"] = len(centralizer_of_radical(pres, w))
        entry["HH0_iso_ok"] = ok0

        # H_0(forms) vs A/[A,A] (loop side)
        loops_w = [u for u in basis_w
                   if A.word_source(u) == A.word_target(u)]
        comm = _commutator_rows(pres, w)
        ech_c = Echelon(key_order=basis_w)
        for r in comm:
            ech_c.insert(r)
        dim_quot = len(loops_w) - ech_c.rank
        b0 = forms.block((0, w)).dim
        entry["dim_HH0_hom"] = b0
        entry["dim_A_mod_commutators"] = dim_quot
        okh = b0 == dim_quot
        entry["HH0_hom_ok"] = okh

        # middle arrow: image of H_0(one-forms) -> A vs commutators.
        # A one-form of its own degree n sits in cone degree n + 1.
        of0 = oneforms.block((1, w))
        mid_imgs = []
        for rep in of0.reps:
            el = El(model.alg,
                    {u: Fraction(c) for u, c in co_image(rep).items()})
            img = dict(model.augment(el).terms)
            mid_imgs.append({k: v for k, v in img.items() if v})
        ech_m = Echelon(key_order=basis_w)
        for r in mid_imgs:
            ech_m.insert(r)
        ok_mid = (ech_m.rank == ech_c.rank
                  and all(not ech_c.reduce(r) for r in mid_imgs))
        entry["middle_image_ok"] = ok_mid

        # H_1 of the cone splits against the two columns:
        #   H_1(one-forms) -> H_1(loops) -> H_1(cone) -> H_0(one-forms)
        #     -> H_0(loops)
        # so dim H_1(cone) = ker(commutator map on H_0 classes)
        #                  + coker(commutator map on H_1 classes).
        rk0 = co_rank(of0, loops.block((0, w)))
        rk1 = co_rank(oneforms.block((2, w)), loops.block((1, w)))
        dim_ker = of0.dim - rk0
        dim_coker = loops.block((1, w)).dim - rk1
        h1 = forms.block((1, w)).dim
        entry["dim_HH1_hom"] = h1
        entry["HH1_ker_ok"] = h1 == dim_ker + dim_coker

        # column isomorphisms for n >= 2
        col_ok = True
        for n in range(2, max_degree + 1):
            if forms.block((n, w)).dim != oneforms.block((n, w)).dim:
                col_ok = False
        entry["forms_column_ok"] = col_ok

        entry_ok = ok0 and okh and ok_mid and entry["HH1_ker_ok"] and col_ok
        entry["ok"] = entry_ok
        report["ok"] = report["ok"] and entry_ok
        report["weights"].append(entry)

    # cochain side: HH^n(fields) vs derivation column alone, n >= 2
    coch = []
    ok_all = True
    for n in range(2, max_degree + 1):
        for w in range(-max_weight, w_top + 1):
            a = fields.block((n, w)).dim
            b = der.block((n, w)).dim
            if a or b:
                ok = a == b
                ok_all = ok_all and ok
                coch.append({"degree": n, "weight": w,
                             "dim_HH": a, "dim_der_column": b, "ok": ok})
    report["cochain_columns"] = coch
    report["ok"] = report["ok"] and ok_all
    return report
