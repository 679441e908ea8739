"""The minimal model (TV, d) of a monomial presentation.

Generators of V are the overlap chains; a chain of order n sits in
homological degree n-1 and weight = path length.  The differential of a
chain generator g is

    d g = sum over ordered factorizations g.path = p_1 ... p_m into
          chain paths with deg(p_1)+...+deg(p_m) = deg(g) - 1 of
          (-1)^(m(m+1)/2 + deg(p_1)) * (the word p_1 ... p_m),

extended to all of TV as a degree -1 derivation.  The trivial
factorization is excluded by the degree condition; arrows have zero
differential.  d^2 = 0 is not assumed anywhere -- check_d_squared
verifies it generator by generator and the test suite runs it on
randomized presentations.
"""

from fractions import Fraction

from .algebra import El, FreeAlgebra, Gen, GenMap
from .chains import chain_name, compute_chains

__all__ = ["Model", "build_model", "check_d_squared"]


class Model:
    def __init__(self, pres, chains, alg, diff, weight_cap=None):
        self.pres = pres
        self.chains = chains
        self.alg = alg            # FreeAlgebra on the chain generators
        self.diff = diff          # GenMap, degree -1, weight 0
        self.chain_by_name = {chain_name(c.path): c for c in chains}
        self.max_weight = max((c.weight for c in chains), default=0)
        self.weight_cap = self.max_weight if weight_cap is None else weight_cap

    @property
    def complete(self):
        """Whether no chain exists beyond the build cap.

        Consecutive chain orders differ in weight by at most the longest
        relation minus one (an overlap shares at least one arrow), so a
        gap of that size below the cap proves there is nothing further.
        """
        step = max((len(r) for r in self.pres.relations), default=1) - 1
        return self.weight_cap - self.max_weight >= step

    @property
    def faithful_weight(self):
        """Largest weight at which the homology reports can be trusted.

        A complete model is faithful everywhere.  A truncated tower
        shows classes at weights above the top path weight of A whose
        bounding elements involve generators beyond the ceiling; below
        that weight A itself pins the answers, so reports are capped
        there.  (For a truncated model whose algebra is infinite
        dimensional no finite weight is safe; the cap then equals the
        build ceiling and callers must screen with stable dimensions.)
        """
        if self.complete:
            return self.weight_cap
        top = 0
        for w in range(self.weight_cap + 1):
            if self.pres.basis(w):
                top = w
        return top

    def d(self, el):
        return self.diff(el)

    def augment(self, el):
        """Project TV -> A: kill positive-degree letters, reduce mod relations."""
        A = self.pres.arrow_algebra()
        out = {}
        for w, c in el.terms.items():
            if self.alg.is_trivial_word(w):
                out[w] = out.get(w, 0) + c
                continue
            if any(self.alg.gen[x].degree for x in w):
                continue
            # degree-0 letters are single arrows; flatten to an arrow word
            word = tuple(x for g in w for x in self.chain_by_name[g].path)
            if not self.pres.contains_relation(word):
                out[word] = out.get(word, 0) + c
        return El(A, {w: c for w, c in out.items() if c})

    def export(self):
        gens = []
        for c in self.chains:
            name = chain_name(c.path)
            g = self.alg.gen[name]
            val = self.diff.value(name)
            gens.append({
                "name": name,
                "path": list(c.path),
                "source": g.source,
                "target": g.target,
                "degree": g.degree,
                "weight": g.weight,
                "differential": [[list(w), str(co)]
                                 for w, co in val.sorted_terms()],
            })
        return {"generators": gens, "max_weight": self.max_weight}


def _factorizations(path, target_degree, prefix_index):
    """Ordered factorizations of path into chain paths, by degree budget.

    prefix_index maps each chain path to its degree; organized as a dict
    from first letter to the list of (path, degree) starting with it, so
    the search only tries plausible factors.
    """
    n = len(path)

    def rec(i, budget):
        if i == n:
            return [()] if budget == 0 else []
        out = []
        for p, d in prefix_index.get(path[i], ()):
            if d > budget or i + len(p) > n:
                continue
            if path[i:i + len(p)] != p:
                continue
            for rest in rec(i + len(p), budget - d):
                out.append((p,) + rest)
        return out

    return rec(0, target_degree)


def build_model(pres, max_weight, max_order=None):
    chains = compute_chains(pres, max_weight, max_order=max_order)
    gens = []
    for c in chains:
        arrows = {a[0]: a for a in pres.quiver.arrows}
        src = arrows[c.path[0]][1]
        tgt = arrows[c.path[-1]][2]
        gens.append(Gen(chain_name(c.path), src, tgt, c.degree, c.weight))
    alg = FreeAlgebra(pres.quiver.vertices, gens)

    prefix_index = {}
    for c in chains:
        prefix_index.setdefault(c.path[0], []).append((c.path, c.degree))

    values = {}
    for c in chains:
        if c.order == 1:
            continue
        terms = {}
        for factors in _factorizations(c.path, c.degree - 1, prefix_index):
            m = len(factors)
            first_deg = _path_degree(factors[0], prefix_index)
            sign = -1 if ((m * (m + 1)) // 2 + first_deg) % 2 else 1
            word = tuple(chain_name(p) for p in factors)
            terms[word] = terms.get(word, 0) + Fraction(sign)
        val = El(alg, {w: co for w, co in terms.items() if co})
        if val:
            values[chain_name(c.path)] = val
    diff = GenMap(alg, -1, 0, values)
    return Model(pres, chains, alg, diff, weight_cap=max_weight)


def _path_degree(path, prefix_index):
    for p, d in prefix_index.get(path[0], ()):
        if p == path:
            return d
    raise KeyError(path)


def check_d_squared(model, samples=None):
    """d(d(g)) for every generator; returns the list of offenders (empty = ok).

    `samples` may add extra elements (e.g. random words) to check.
    """
    bad = []
    for c in model.chains:
        g = model.alg.element((chain_name(c.path),))
        if model.d(model.d(g)):
            bad.append(chain_name(c.path))
    for el in samples or ():
        if model.d(model.d(el)):
            bad.append(repr(el))
    return bad
