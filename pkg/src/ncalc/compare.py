"""Cross-validation against the classical complexes of the quotient.

For a finite-dimensional monomial quotient the Hochschild theory has a
textbook home: the reduced bar chains and cochains over the vertex
base (bar.py, QuotientOps).  OracleComparison checks, block by block,
that the pipeline's small complexes compute the same thing:

  * dimensions of HH^p and HH_p per (degree, weight), p up to a bound;
    in degree zero the classical blocks see the center of A, which the
    pipeline's loop column reproduces, while the printed reports use
    the centralizer-of-the-radical normalization -- both are recorded;
  * structure constants of bracket, cup and cap.  The two sides build
    different bases, so constants can only agree up to one scalar per
    matched one-dimensional block; the matcher collects all the
    induced multiplicative equations, solves them, and verifies the
    rest.  Higher-dimensional blocks are compared through the ranks of
    the induced maps, which no rescaling can disturb.

A comparison failing loudly beats a silently weakened one: any
dimension or zero-pattern disagreement lands in the report rather than
being patched over.
"""

import random
from fractions import Fraction

from .algebra import Quiver, MonomialPresentation
from .bar import QuotientOps, BarChains, BarCochains
from .calculus import FormsAction, cone_bracket, cup, unit_field
from .complexes import (FieldsComplex, FormsComplex,
                        centralizer_of_radical, center_basis)
from .homology import Homology
from .model import build_model

__all__ = ["OracleComparison", "random_fd_presentation"]


class OracleComparison:
    def __init__(self, pres, max_degree=4, max_weight=None):
        self.pres = pres
        self.max_degree = max_degree
        self.cochains = BarCochains(pres)   # raises if not f.d.
        self.top = self.cochains.top
        if max_weight is None:
            max_weight = self.top * (max_degree + 1) + 1
        self.model = build_model(pres, max_weight)
        self.fields = FieldsComplex(self.model)
        self.hf = Homology(self.fields)
        self.forms = FormsComplex(self.model)
        self.fhom = Homology(self.forms)
        self.chains = BarChains(QuotientOps(pres))
        self.hch = Homology(self.chains)
        self.hco = Homology(self.cochains)
        self.action = FormsAction(self.model, self.fhom)

    # ----- dimensions ----------------------------------------------------

    def hh_keys(self, p):
        T = self.top
        return [(p, w) for w in range(-p * T, T + 1)]

    def hhlow_keys(self, p):
        T = self.top
        return [(p, w) for w in range(0, (p + 1) * T + 1)]

    def compare_dims(self):
        """Block dimensions on both sides; any disagreement is listed."""
        hh, hh_low, mism = {}, {}, []
        # degree 0 is handled through the center below; the loop column
        # of the cone only sees central elements that stay central at
        # the derivation level, so its (0, w) blocks are not the thing
        # to compare
        for p in range(1, self.max_degree + 1):
            for key in self.hh_keys(p):
                a = self.hf.block(key).dim
                b = self.hco.block(key).dim
                if a or b:
                    hh[key] = (a, b)
                if a != b:
                    mism.append(("hh", key, a, b))
        for p in range(0, self.max_degree + 1):
            for key in self.hhlow_keys(p):
                a = self.fhom.block(key).dim
                b = self.hch.block(key).dim
                if a or b:
                    hh_low[key] = (a, b)
                if a != b:
                    mism.append(("hh_low", key, a, b))
        degree0 = {}
        for w in range(0, self.top + 1):
            nc = len(centralizer_of_radical(self.pres, w))
            nz = len(center_basis(self.pres, w))
            if nz != self.hco.block((0, w)).dim:
                mism.append(("center", (0, w), nz,
                             self.hco.block((0, w)).dim))
            if nc < nz:
                mism.append(("centralizer", (0, w), nc, nz))
            if nc or nz:
                degree0[w] = {"centralizer": nc, "center": nz}
        return {"hh": hh, "hh_low": hh_low, "degree0": degree0,
                "mismatches": mism}

    # ----- classes -------------------------------------------------------

    def _co_classes(self):
        """[(key, index, pair, bar_vec)] over blocks equal-dimensional
        on both sides; pairs classes by position, which is only
        canonical for one-dimensional blocks -- exactly the ones the
        scalar matching uses."""
        out = []
        for p in range(0, self.max_degree + 1):
            for key in self.hh_keys(p):
                fb = self.hf.block(key)
                bb = self.hco.block(key)
                if fb.dim == 0 or fb.dim != bb.dim:
                    continue
                for j in range(fb.dim):
                    out.append((key, j, self.fields.vec_to_pair(fb.reps[j]),
                                bb.reps[j]))
        return out

    def _ho_classes(self):
        out = []
        for p in range(0, self.max_degree + 1):
            for key in self.hhlow_keys(p):
                fb = self.fhom.block(key)
                bb = self.hch.block(key)
                if fb.dim == 0 or fb.dim != bb.dim:
                    continue
                for j in range(fb.dim):
                    out.append((key, j, fb.reps[j], bb.reps[j]))
        return out

    def _codim(self, key):
        return self.hf.block(key).dim

    # ----- structure constants --------------------------------------

    def compare_constants(self):
        """Match one-dimensional blocks by a scalar each and check all
        bracket/cup/cap constants; rank-compare the rest.

        Returns a dict whose "ok" is True when every comparison went
        through: no zero-pattern clash, a consistent scalar assignment
        exists, ranks agree.
        """
        cos = self._co_classes()
        hos = self._ho_classes()
        co1 = {key for key, j, _, _ in cos if self._codim(key) == 1}
        ho1 = {key for key, j, _, _ in hos
               if self.fhom.block(key).dim == 1}
        eqs = []        # (dict var -> exp, Fraction value)
        zero_bad = []   # one side zero, the other not
        ranks = {}      # (op, skey1, skey2, tkey) -> ([pipe rows], [bar rows])

        def classify(op, akey, bkey, tkey, tdim_pipe, tdim_bar, pc, bc,
                     avar, bvar, tvar):
            """pc, bc: coords dicts (or None when the block is absent)."""
            if tdim_pipe != tdim_bar:
                zero_bad.append((op, akey, bkey, tkey, "dim"))
                return
            if tdim_pipe == 0:
                return
            key = (op, akey, bkey, tkey)
            if (akey in co1 if avar[0] == "c" else akey in ho1) and \
               (bkey in co1 if bvar[0] == "c" else bkey in ho1):
                if tdim_pipe == 1:
                    rp = pc.get(0, Fraction(0))
                    rb = bc.get(0, Fraction(0))
                    if bool(rp) != bool(rb):
                        zero_bad.append((op, akey, bkey, tkey, "zero"))
                    elif rp:
                        # t_a t_b rb = rp t_t
                        e = {avar: 1}
                        e[bvar] = e.get(bvar, 0) + 1
                        e[tvar] = e.get(tvar, 0) - 1
                        e = {v: n for v, n in e.items() if n}
                        eqs.append((e, rp / rb))
                    return
            r1, r2 = ranks.setdefault(key[:1] + (tkey,), ([], []))
            r1.append(pc)
            r2.append(bc)

        top = self.chains.ops.top_weight()

        # brackets and cups over cohomology pairs
        for (ka, ja, xa, va) in cos:
            for (kb, jb, xb, vb) in cos:
                tk = (ka[0] + kb[0] - 1, ka[1] + kb[1])
                if 0 <= tk[0] <= self.max_degree and -tk[0] * top <= tk[1] <= top:
                    pair = cone_bracket(self.model, xa, xb)
                    pc = self._co_coords(tk, pair)
                    bv = self.cochains.bracket(va, vb, ka[0], kb[0])
                    bc = self._bar_co_coords(tk, bv)
                    classify("bracket", ka, kb, tk,
                             self.hf.block(tk).dim, self.hco.block(tk).dim,
                             pc, bc, ("c",) + ka, ("c",) + kb, ("c",) + tk)
                tk = (ka[0] + kb[0], ka[1] + kb[1])
                if tk[0] <= self.max_degree and -tk[0] * top <= tk[1] <= top:
                    pair = cup(self.model, xa, xb)
                    pc = self._co_coords(tk, pair)
                    bv = self.cochains.cup(va, vb)
                    bc = self._bar_co_coords(tk, bv)
                    classify("cup", ka, kb, tk,
                             self.hf.block(tk).dim, self.hco.block(tk).dim,
                             pc, bc, ("c",) + ka, ("c",) + kb, ("c",) + tk)

        # caps: cohomology against homology
        for (ka, ja, xa, va) in cos:
            for (km, jm, om, vm) in hos:
                tk = (km[0] - ka[0], km[1] + ka[1])
                if not (0 <= tk[0] <= self.max_degree
                        and 0 <= tk[1] <= (tk[0] + 1) * top):
                    continue
                tkp, pc = self.action.cap_class(xa, km, om)
                assert tkp == tk
                bv = self.chains.cap(va, vm, self.cochains)
                bc = self._bar_ch_coords(tk, bv)
                classify("cap", ka, km, tk,
                         self.fhom.block(tk).dim, self.hch.block(tk).dim,
                         pc, bc, ("c",) + ka, ("h",) + km, ("h",) + tk)

        # pin the unit's scalar: both sides represent it by the sum of
        # trivial loops, so it is 1 by inspection
        assign0 = {("c", 0, 0): Fraction(1)}
        sol, bad_eqs = _solve_multiplicative(eqs, assign0)

        rank_bad = []
        for (op, tkey), (rows_p, rows_b) in sorted(ranks.items()):
            if _rank(rows_p) != _rank(rows_b):
                rank_bad.append((op, tkey, _rank(rows_p), _rank(rows_b)))

        return {
            "ok": not zero_bad and not rank_bad and sol is not None,
            "n_equations": len(eqs),
            "n_rank_blocks": len(ranks),
            "assignment": sol,
            "zero_pattern_failures": zero_bad,
            "unsatisfied": bad_eqs,
            "rank_mismatches": rank_bad,
        }

    # coordinate helpers; a missing block coords to zero --------------

    def _co_coords(self, key, pair):
        vec = self.fields.pair_to_vec(*pair)
        return self.hf.block(key).coords(vec)

    def _bar_co_coords(self, key, vec):
        return self.hco.block(key).coords(vec)

    def _bar_ch_coords(self, key, vec):
        return self.hch.block(key).coords(vec)


def _rank(rows):
    """Rank of a list of sparse coordinate dicts."""
    from .linalg import Echelon
    ech = Echelon()
    r = 0
    for row in rows:
        if row and ech.insert(dict(row)):
            r += 1
    return r


def _nth_root(q, e):
    """Exact rational e-th root, or None."""
    if e == 1:
        return q
    if q < 0:
        if e % 2 == 0:
            return None
        r = _nth_root(-q, e)
        return None if r is None else -r

    def iroot(n):
        if n < 2:
            return n
        x = round(n ** (1.0 / e))
        for c in (x - 1, x, x + 1):
            if c >= 0 and c ** e == n:
                return c
        return None

    a = iroot(q.numerator)
    b = iroot(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def _solve_multiplicative(eqs, assign):
    """Solve prod var^exp = value over the rationals.

    Propagates single-variable equations, branching on the sign of
    even roots and, when stuck, on a +-1 guess for the first live
    variable.  Returns (assignment, unsatisfied); assignment is None
    when no consistent one was found, with the offending equations
    listed.
    """

    def reduce(eq, asg):
        vars_, val = eq
        out = {}
        for v, e in vars_.items():
            if not e:
                continue
            if v in asg:
                val = val / (asg[v] ** e)
            else:
                out[v] = e
        return out, val

    def attempt(asg, pending, depth):
        asg = dict(asg)
        pending = list(pending)
        while True:
            nxt, progress = [], False
            for eq in pending:
                vars_, val = reduce(eq, asg)
                if not vars_:
                    if val != 1:
                        return None, [eq]
                    continue
                if len(vars_) == 1:
                    (v, e), = vars_.items()
                    root = _nth_root(val if e > 0 else 1 / val, abs(e))
                    if root is None:
                        return None, [eq]
                    asg[v] = root
                    progress = True
                    continue
                nxt.append((vars_, val))
            pending = nxt
            if not pending:
                return asg, []
            if not progress:
                break
        if depth <= 0:
            return None, pending
        v = sorted(pending[0][0])[0]
        for guess in (Fraction(1), Fraction(-1)):
            asg2 = dict(asg)
            asg2[v] = guess
            sol, bad = attempt(asg2, pending, depth - 1)
            if sol is not None:
                return sol, []
        return None, pending

    # even roots are taken positive; a sign branch on the guessed
    # variables covers the cases seen in practice
    return attempt(assign, eqs, depth=8)


def random_fd_presentation(seed):
    """A small random finite-dimensional monomial presentation.

    Mixes shapes: directed-acyclic quivers (finite-dimensional for
    free) and quivers with a loop tamed by a nilpotency relation.
    Deterministic in the seed; retries salted variants until the
    quotient provably dies by weight 8.
    """
    for salt in range(64):
        rng = random.Random((seed, salt))
        nv = rng.randint(2, 4)
        vertices = [str(i + 1) for i in range(nv)]
        arrows = []
        loopy = rng.random() < 0.5
        names = iter("abcdefgh")
        if loopy:
            v = rng.choice(vertices)
            arrows.append((next(names), v, v))
        for _ in range(rng.randint(2, 4)):
            s = rng.randint(0, nv - 1)
            t = rng.randint(0, nv - 1)
            if not loopy and t <= s:
                s, t = min(s, t), max(s, t)
                if s == t:
                    continue
            arrows.append((next(names), vertices[s], vertices[t]))
        if len(arrows) < 2:
            continue
        quiver = Quiver(vertices, arrows)
        # random composable words of length 2..3 as relations
        words = []
        by_src = {}
        for nm, s, t in arrows:
            by_src.setdefault(s, []).append((nm, t))
        for _ in range(24):
            nm, s, t = rng.choice(arrows)
            word = [nm]
            for _ in range(rng.randint(1, 2)):
                nxt = by_src.get(t)
                if not nxt:
                    break
                nm2, t = rng.choice(nxt)
                word.append(nm2)
            if len(word) >= 2:
                words.append(tuple(word))
        rels = []
        for w in words:
            if len(rels) >= rng.randint(1, 3):
                break
            if any(_contains(w, r) or _contains(r, w) for r in rels):
                continue
            rels.append(w)
        if not rels:
            continue
        try:
            pres = MonomialPresentation(quiver, rels)
            QuotientOps(pres).top_weight(limit=8)
        except ValueError:
            continue
        return pres
    raise ValueError("no finite-dimensional example for seed %r" % seed)


def _contains(w, r):
    return any(w[i:i + len(r)] == r for i in range(len(w) - len(r) + 1))
