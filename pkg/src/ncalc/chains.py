"""Overlap chains of a monomial presentation.

Order-1 chains are the arrows (the chain's tail is the arrow itself).
A chain of order n+1 is c = u*s where u is an order-n chain with tail t
and s is a nonempty path from the end of u such that the word t*s
contains exactly one relation occurrence, that occurrence is a suffix
of t*s, and the relation is longer than s (so it reaches properly into
t).  The tail of c is s.  With a reduced relation set the suffix
occurrence is unique when it exists, and order-2 chains come out of the
same rule as the relations themselves (t = the arrow, s = the rest).

Homological degree of a chain = order - 1; weight = path length.
"""

__all__ = ["Chain", "compute_chains", "chain_name"]


class Chain:
    __slots__ = ("path", "order", "tail")

    def __init__(self, path, order, tail):
        self.path = tuple(path)
        self.order = order
        self.tail = tuple(tail)

    @property
    def degree(self):
        return self.order - 1

    @property
    def weight(self):
        return len(self.path)

    def __repr__(self):
        return "Chain(%s, order %d)" % (".".join(self.path), self.order)


def chain_name(path):
    return ".".join(path)


def _relation_occurrences(word, relations):
    out = []
    for r in relations:
        m = len(r)
        for i in range(len(word) - m + 1):
            if word[i:i + m] == r:
                out.append((i, i + m))
    return out


def compute_chains(pres, max_weight, max_order=None):
    """All chains of weight <= max_weight (and order <= max_order if given).

    Returns them sorted by (order, path).  Paths are asserted unique
    within each order; in the monomial setting they are unique globally,
    which build_model relies on for naming.
    """
    arrows = {a[0]: a for a in pres.quiver.arrows}
    by_vertex = {}
    for name, s, t in pres.quiver.arrows:
        by_vertex.setdefault(s, []).append((name, t))

    current = [Chain((a,), 1, (a,)) for a, _, _ in pres.quiver.arrows
               if 1 <= max_weight]
    chains = list(current)
    order = 1
    while current and (max_order is None or order < max_order):
        nxt = []
        for c in current:
            end = arrows[c.path[-1]][2]
            budget = max_weight - len(c.path)
            if budget <= 0:
                continue
            for s in _extensions(c.tail, end, budget, by_vertex,
                                 pres.relations):
                nxt.append(Chain(c.path + s, order + 1, s))
        seen = set()
        for c in nxt:
            # (lower chain)*tail decompositions must not collide
            assert c.path not in seen, "ambiguous chain %r" % (c.path,)
            seen.add(c.path)
        chains.extend(nxt)
        current = nxt
        order += 1
    chains.sort(key=lambda c: (c.order, c.path))
    return chains


def _extensions(tail, vertex, budget, by_vertex, relations):
    """Yield the valid extension paths s (depth-first, lexicographic)."""
    stack = [((), vertex)]
    while stack:
        s, v = stack.pop()
        # explore children in reverse so pops come out lexicographically
        children = by_vertex.get(v, [])
        for name, tgt in reversed(children):
            s2 = s + (name,)
            w = tail + s2
            occ = _relation_occurrences(w, relations)
            interior = [o for o in occ if o[1] < len(w)]
            if interior:
                # an occurrence that already ended can never be the unique
                # suffix occurrence of a longer word
                continue
            if occ:
                # reduced relations => at most one suffix occurrence
                (i, j), = occ
                if j - i > len(s2):
                    yield s2
                # either way, extending past a complete occurrence is dead
                continue
            if len(s2) < budget:
                stack.append((s2, tgt))
