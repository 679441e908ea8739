"""Euler-field golden: L_E on a weight-w loop class must be w times it."""
from fractions import Fraction
from ncalc.algebra import Quiver, MonomialPresentation, El, GenMap
from ncalc.model import build_model
from ncalc.complexes import FormsComplex
from ncalc.homology import Homology
from ncalc.calculus import FormsAction

ex2 = MonomialPresentation(
    Quiver(["1", "2", "3"],
           [("x", "1", "2"), ("y", "2", "2"), ("z", "2", "3")]),
    [("x", "y", "y"), ("y", "y", "z")])
m = build_model(ex2, 8)
alg = m.alg
fhom = Homology(FormsComplex(m))
act = FormsAction(m, fhom)

# the weight-grading derivation: a cone-degree-1, weight-0 cocycle
E0 = (alg.zero(), GenMap(alg, 0, 0, {
    g.name: El(alg, {(g.name,): Fraction(alg.gen[g.name].weight)})
    for g in alg.gens}))

for w in range(1, 7):
    key = (0, w)
    blk = fhom.block(key)
    for j, om in enumerate(blk.reps):
        tk, co = act.lie_class(E0, key, om)
        print("w=%d rep %d (%s): L_E coords %s" % (w, j, tk, dict(co)))
    # cap with E0 lowers degree below zero -> must be zero map from (1,w)
kb = fhom.block((1, 2))
for j, om in enumerate(kb.reps):
    tk, co = act.lie_class(E0, (1, 2), om)
    print("one-form w=2 rep %d: L_E coords %s" % (j, dict(co)))
