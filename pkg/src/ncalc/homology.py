"""Block-wise homology of weight-graded complexes.

A complex object must provide:

    basis(key)     ordered list of hashable labels spanning the block
    apply(label)   the differential of a basis label, as a sparse vector
                   (dict label -> Fraction) over the next block's labels
    next_key(key)  key of the block the differential maps into
    prev_key(key)  key of the block mapping into this one

Labels are required to be self-describing (the same label never appears
in two different blocks), which lets results be cached per label.

A HomologyBlock stores representatives of a homology basis together
with an echelon of the boundary space, so any cycle in the block can be
reduced to exact coordinates in the chosen basis.
"""

from fractions import Fraction

from .linalg import Echelon, kernel_basis, vec_scale, vec_sub

__all__ = ["Homology", "HomologyBlock"]


class HomologyBlock:
    def __init__(self, labels, reps, ech, combos, n_boundary):
        self.labels = labels
        self.reps = reps              # list of sparse cycle vectors
        self._ech = ech               # echelon of boundaries then reps
        self._combos = combos         # combo[i]: dict rep_index -> Fraction
        self.n_boundary = n_boundary

    @property
    def dim(self):
        return len(self.reps)

    def coords(self, vec):
        """Coordinates of a cycle's class in the stored basis.

        Raises ValueError if vec is not in boundaries + span(reps),
        i.e. if it is not a cycle of this block.
        """
        v = dict(vec)
        out = {}
        for i, (row, p) in enumerate(zip(self._ech.rows, self._ech.pivots)):
            c = v.get(p)
            if c:
                for k, x in row.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
                for j, x in self._combos[i].items():
                    out[j] = out.get(j, 0) + c * x
        if v:
            raise ValueError("vector is not a cycle of this block")
        return {j: x for j, x in out.items() if x}

    def vector(self, coeffs):
        """Linear combination of representatives; coeffs: dict index -> c."""
        out = {}
        for j, c in coeffs.items():
            for k, x in self.reps[j].items():
                y = out.get(k, 0) + Fraction(c) * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return out


class Homology:
    def __init__(self, cx):
        self.cx = cx
        self._blocks = {}
        self._apply_cache = {}

    def apply(self, label):
        if label not in self._apply_cache:
            self._apply_cache[label] = self.cx.apply(label)
        return self._apply_cache[label]

    def block(self, key):
        if key in self._blocks:
            return self._blocks[key]
        labels = list(self.cx.basis(key))
        cycles = kernel_basis(labels, self.apply)
        prev = self.cx.prev_key(key)
        boundaries = [self.apply(l) for l in self.cx.basis(prev)]

        ech = Echelon(key_order=labels)
        combos = []
        n_bd = 0
        for b in boundaries:
            if _tracked_insert(ech, combos, b, {}):
                n_bd += 1
        reps = []
        for z in cycles:
            v = ech.reduce(z)
            if not v:
                continue
            idx = len(reps)
            p = ech._pick_pivot(v)
            c = v[p]
            v = {k: x / c for k, x in v.items()}
            # the stored row *is* the representative, so its class is
            # exactly 1 * rep[idx]
            combo = {idx: Fraction(1)}
            _back_eliminate(ech, combos, v, combo, p)
            reps.append(v)
        blk = HomologyBlock(labels, reps, ech, combos, n_bd)
        self._blocks[key] = blk
        return blk

    def dims(self, keys):
        return {k: self.block(k).dim for k in keys}

    def stable_dim(self, key, deep):
        """Classes of block(key) with support below the truncation band.

        `deep` is a predicate on labels marking the band next to the
        weight ceiling of a truncated model.  A class all of whose
        representatives can be pushed into that band only exists because
        the element that would bound it needs generators beyond the
        ceiling; such classes are artifacts of the truncation and are
        not counted.  On a model with finitely many generators (nothing
        near the ceiling) this agrees with block(key).dim.
        """
        blk = self.block(key)
        ech = Echelon(key_order=blk.labels)
        for lab in blk.labels:
            if deep(lab):
                ech.insert({lab: Fraction(1)})
        for l in self.cx.basis(self.cx.prev_key(key)):
            ech.insert(self.apply(l))
        n = 0
        for rep in blk.reps:
            if ech.insert(dict(rep)):
                n += 1
        return n


def _tracked_insert(ech, combos, vec, combo):
    v = dict(vec)
    combo = dict(combo)
    for i, (row, p) in enumerate(zip(ech.rows, ech.pivots)):
        c = v.get(p)
        if c:
            v = vec_sub(v, vec_scale(row, c))
            combo = vec_sub(combo, vec_scale(combos[i], c))
    if not v:
        return False
    p = ech._pick_pivot(v)
    c = v[p]
    v = {k: x / c for k, x in v.items()}
    combo = vec_scale(combo, Fraction(1) / c)
    _back_eliminate(ech, combos, v, combo, p)
    return True


def _back_eliminate(ech, combos, v, combo, p):
    for i, row in enumerate(ech.rows):
        x = row.get(p)
        if x:
            ech.rows[i] = vec_sub(row, vec_scale(v, x))
            combos[i] = vec_sub(combos[i], vec_scale(combo, x))
    ech.rows.append(v)
    ech.pivots.append(p)
    ech.pivot_set.add(p)
    combos.append(combo)
