"""Quivers, monomial presentations, and graded free (tensor) algebras.

A quiver is a finite directed multigraph.  The tensor algebra here is
taken over the product of base fields k at the vertices, so its basis
consists of the trivial paths plus all composable words in a chosen set
of graded generators.  Composition is written left to right: in the
word ``xy`` the arrow ``x`` acts first, so it needs target(x) ==
source(y).  Products of non-composable words are zero.

Words are tuples of generator names.  The trivial path at vertex v is
the one-letter word ("@v",); trivial paths multiply as the orthogonal
idempotents they are.  Every non-trivial generator must have weight
>= 1, which keeps every graded piece finite-dimensional.

Degree conventions: generators carry a homological degree (arrows live
in degree 0) and a weight (arrows weigh 1).  A derivation of degree d
extended over a word picks up the Koszul sign (-1)**(d * degree of the
prefix it jumped over).
"""

from fractions import Fraction

__all__ = [
    "Quiver",
    "MonomialPresentation",
    "Gen",
    "FreeAlgebra",
    "El",
    "GenMap",
]


class Quiver:
    def __init__(self, vertices, arrows):
        """arrows: iterable of (name, source, target)."""
        self.vertices = list(vertices)
        self.arrows = [tuple(a) for a in arrows]
        self.validate()

    def validate(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vs = set(self.vertices)
        for name, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError("arrow %r has endpoint outside the quiver" % name)
            if name.startswith("@"):
                raise ValueError("arrow names starting with '@' are reserved")

    def arrow_names(self):
        return [a[0] for a in self.arrows]


class MonomialPresentation:
    """A quiver with monomial relations (paths of length >= 2).

    The relation set must be reduced: no relation may contain another as
    a contiguous subword, otherwise the overlap-chain construction is not
    well posed.
    """

    def __init__(self, quiver, relations):
        self.quiver = quiver
        self.relations = [tuple(r) for r in relations]
        self._arrow = {a[0]: a for a in quiver.arrows}
        self.validate()

    def validate(self):
        seen = set()
        for r in self.relations:
            if r in seen:
                raise ValueError("duplicate relation %r" % (r,))
            seen.add(r)
            if len(r) < 2:
                raise ValueError("relation %r too short" % (r,))
            for x in r:
                if x not in self._arrow:
                    raise ValueError("relation %r uses unknown arrow %r" % (r, x))
            for a, b in zip(r, r[1:]):
                if self._arrow[a][2] != self._arrow[b][1]:
                    raise ValueError("relation %r is not a composable path" % (r,))
        for r in self.relations:
            for s in self.relations:
                if r is not s and _subword_positions(s, r):
                    raise ValueError(
                        "relation %r contains relation %r" % (s, r))

    def contains_relation(self, word):
        return any(_subword_positions(word, r) for r in self.relations)

    def basis(self, weight):
        """Basis paths of A = kQ/(relations) of the given length.

        Weight 0 gives the trivial paths.
        """
        alg = self.arrow_algebra()
        if weight == 0:
            return alg.trivial_words()
        return [w for w in alg.words_of(0, weight)
                if not self.contains_relation(w)]

    def arrow_algebra(self):
        if not hasattr(self, "_arrow_alg"):
            self._arrow_alg = FreeAlgebra(
                self.quiver.vertices,
                [Gen(n, s, t, 0, 1) for n, s, t in self.quiver.arrows])
        return self._arrow_alg

    def normal_form(self, el):
        """Image of a degree-0 element under kQ -> A, as an element again."""
        return El(el.alg, {w: c for w, c in el.terms.items()
                           if w[0].startswith("@") or not self.contains_relation(w)})


def _subword_positions(word, sub):
    n, m = len(word), len(sub)
    return [i for i in range(n - m + 1) if word[i:i + m] == sub]


class Gen:
    __slots__ = ("name", "source", "target", "degree", "weight")

    def __init__(self, name, source, target, degree=0, weight=1):
        self.name = name
        self.source = source
        self.target = target
        self.degree = degree
        self.weight = weight
        if weight < 1:
            raise ValueError("generator %r must have weight >= 1" % name)

    def __repr__(self):
        return "Gen(%s: %s->%s, deg %d, wt %d)" % (
            self.name, self.source, self.target, self.degree, self.weight)


class FreeAlgebra:
    def __init__(self, vertices, gens):
        self.vertices = list(vertices)
        self.gens = list(gens)
        self.gen = {}
        for g in self.gens:
            if g.name in self.gen or g.name.startswith("@"):
                raise ValueError("bad generator name %r" % g.name)
            self.gen[g.name] = g
        self._gen_pos = {g.name: i for i, g in enumerate(self.gens)}
        self._words_cache = {}

    # -- words ---------------------------------------------------------

    def trivial_words(self):
        return [("@" + v,) for v in self.vertices]

    def is_trivial_word(self, w):
        return len(w) == 1 and w[0].startswith("@")

    def word_source(self, w):
        if self.is_trivial_word(w):
            return w[0][1:]
        return self.gen[w[0]].source

    def word_target(self, w):
        if self.is_trivial_word(w):
            return w[0][1:]
        return self.gen[w[-1]].target

    def word_degree(self, w):
        if self.is_trivial_word(w):
            return 0
        return sum(self.gen[x].degree for x in w)

    def word_weight(self, w):
        if self.is_trivial_word(w):
            return 0
        return sum(self.gen[x].weight for x in w)

    def mul_words(self, u, v):
        """Concatenation, None if the endpoints do not match."""
        if self.is_trivial_word(u):
            return v if self.word_source(v) == u[0][1:] else None
        if self.is_trivial_word(v):
            return u if self.word_target(u) == v[0][1:] else None
        if self.gen[u[-1]].target != self.gen[v[0]].source:
            return None
        return u + v

    def _words_from(self, vertex, degree, weight):
        key = (vertex, degree, weight)
        if key in self._words_cache:
            return self._words_cache[key]
        if weight == 0:
            out = [()] if degree == 0 else []
        elif weight < 0:
            out = []
        else:
            out = []
            for g in self.gens:
                if g.source != vertex or g.weight > weight:
                    continue
                for tail in self._words_from(g.target, degree - g.degree,
                                             weight - g.weight):
                    out.append((g.name,) + tail)
        self._words_cache[key] = out
        return out

    def words_of(self, degree, weight):
        """All composable non-trivial words with the given totals."""
        if weight <= 0:
            return []
        out = []
        for v in self.vertices:
            out.extend(self._words_from(v, degree, weight))
        return out

    # -- elements ------------------------------------------------------

    def zero(self):
        return El(self, {})

    def unit(self):
        return El(self, {w: Fraction(1) for w in self.trivial_words()})

    def element(self, word, coeff=1):
        c = Fraction(coeff)
        return El(self, {tuple(word): c} if c else {})

    def from_terms(self, terms):
        return El(self, {tuple(w): Fraction(c) for w, c in terms if Fraction(c)})


class El:
    """A finite rational combination of words in a FreeAlgebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, El) and self.alg is other.alg
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        assert self.alg is other.alg
        out = dict(self.terms)
        for w, c in other.terms.items():
            x = out.get(w, 0) + c
            if x:
                out[w] = x
            else:
                out.pop(w, None)
        return El(self.alg, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, c):
        c = Fraction(c)
        if not c:
            return El(self.alg, {})
        return El(self.alg, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, El):
            return Fraction(other) * self
        assert self.alg is other.alg
        alg = self.alg
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = alg.mul_words(u, v)
                if w is None:
                    continue
                x = out.get(w, 0) + cu * cv
                if x:
                    out[w] = x
                else:
                    out.pop(w, None)
        return El(alg, out)

    def degree(self):
        degs = {self.alg.word_degree(w) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("not degree-homogeneous: %r" % self)
        return degs.pop()

    def weight(self):
        wts = {self.alg.word_weight(w) for w in self.terms}
        if len(wts) != 1:
            raise ValueError("not weight-homogeneous: %r" % self)
        return wts.pop()

    def loop_part(self):
        alg = self.alg
        return El(alg, {w: c for w, c in self.terms.items()
                        if alg.word_source(w) == alg.word_target(w)})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            word = "*".join(w)
            if c == 1:
                bits.append("+ %s" % word)
            elif c == -1:
                bits.append("- %s" % word)
            else:
                bits.append("%s %s*%s" % ("+" if c > 0 else "-", abs(c), word))
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else s


class GenMap:
    """A k-linear assignment on generators, extended as a derivation.

    `degree` and `weight` are the shifts: each value must satisfy
    deg(value) = deg(gen) + degree and wt(value) = wt(gen) + weight.
    Values may connect any endpoints; mismatched products vanish in the
    Leibniz extension, and the extension kills trivial paths.
    """

    __slots__ = ("alg", "degree", "weight", "values")

    def __init__(self, alg, degree, weight, values):
        self.alg = alg
        self.degree = degree
        self.weight = weight
        self.values = {}
        for name, val in values.items():
            if not val:
                continue
            g = alg.gen[name]
            for w in val.terms:
                if alg.word_degree(w) != g.degree + degree:
                    raise ValueError("value of %s has wrong degree" % name)
                if alg.word_weight(w) != g.weight + weight:
                    raise ValueError("value of %s has wrong weight" % name)
            self.values[name] = val

    def value(self, name):
        return self.values.get(name, self.alg.zero())

    def apply_word(self, w):
        alg = self.alg
        if alg.is_trivial_word(w):
            return alg.zero()
        out = alg.zero()
        deg_prefix = 0
        for i, x in enumerate(w):
            val = self.values.get(x)
            if val is not None:
                sign = -1 if (self.degree % 2) and (deg_prefix % 2) else 1
                pre = El(alg, {w[:i]: Fraction(sign)}) if i else None
                post = El(alg, {w[i + 1:]: Fraction(1)}) if i + 1 < len(w) else None
                t = val
                if pre is not None:
                    t = pre * t
                elif sign < 0:
                    t = -1 * t
                if post is not None:
                    t = t * post
                out = out + t
            deg_prefix += alg.gen[x].degree
        return out

    def __call__(self, el):
        if isinstance(el, El):
            out = self.alg.zero()
            for w, c in el.terms.items():
                out = out + c * self.apply_word(w)
            return out
        return self.apply_word(tuple(el))

    def __add__(self, other):
        assert (self.alg is other.alg and self.degree == other.degree
                and self.weight == other.weight)
        vals = dict(self.values)
        for n, v in other.values.items():
            vals[n] = vals.get(n, self.alg.zero()) + v
        return GenMap(self.alg, self.degree, self.weight,
                      {n: v for n, v in vals.items() if v})

    def __rmul__(self, c):
        return GenMap(self.alg, self.degree, self.weight,
                      {n: c * v for n, v in self.values.items() if Fraction(c)})

    def __sub__(self, other):
        return self + (-1) * other

    def __bool__(self):
        return bool(self.values)

    def __repr__(self):
        bits = ["%s -> %r" % (n, v) for n, v in sorted(self.values.items())]
        return "GenMap(deg %+d, wt %+d: %s)" % (
            self.degree, self.weight, "; ".join(bits) or "0")


def ad(b):
    """Inner derivation v -> b*v - (-1)^{|b||v|} v*b on generators.

    b must be homogeneous; the result has the degree and weight of b.
    Trivial-path summands of b act on a generator v as b*v - v*b too
    (the sign is immaterial in degree 0).
    """
    alg = b.alg
    if not b:
        return GenMap(alg, 0, 0, {})
    d, w = b.degree(), b.weight()
    values = {}
    for g in alg.gens:
        v = El(alg, {(g.name,): Fraction(1)})
        sign = -1 if (d % 2) and (g.degree % 2) else 1
        val = b * v - sign * (v * b)
        if val:
            values[g.name] = val
    return GenMap(alg, d, w, values)
