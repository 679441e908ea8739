"""Probe 3: dissect the cup closure failure on ex2 (1,0) x (0,w)."""
import sys
from fractions import Fraction

sys.path.insert(0, "src")
from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FieldsComplex
from ncalc.homology import Homology
from ncalc.calculus import cone_apply, cup, dual_brace


def ex2_model(W=8):
    q = Quiver(['1', '2', '3'], [('x', '1', '2'), ('y', '2', '2'),
                                 ('z', '2', '3')])
    return build_model(MonomialPresentation(q, [('x', 'y', 'y'),
                                                ('y', 'y', 'z')]), W)


model = ex2_model(8)
alg = model.alg
fields = FieldsComplex(model)
hom = Homology(fields)

print("gens:", [(g.name, g.degree, g.weight) for g in alg.gens])

for key in [(1, 0), (0, 4)]:
    blk = hom.block(key)
    print(key, "dim", blk.dim)
    for i, rep in enumerate(blk.reps):
        print("  rep", i, dict(rep))
