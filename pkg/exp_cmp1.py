"""Shake out the oracle comparison on kx2 and a3rad2."""
import time
from ncalc.algebra import Quiver, MonomialPresentation
from ncalc.compare import OracleComparison

for name, pres in [
    ("kx2", MonomialPresentation(
        Quiver(["1"], [("x", "1", "1")]), [("x", "x")])),
    ("a3rad2", MonomialPresentation(
        Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]),
        [("a", "b")])),
]:
    t0 = time.time()
    oc = OracleComparison(pres, max_degree=4)
    dims = oc.compare_dims()
    print(name, "top:", oc.top, "mismatches:", dims["mismatches"])
    print("  hh:", {k: v for k, v in sorted(dims["hh"].items())})
    print("  hh_low:", {k: v for k, v in sorted(dims["hh_low"].items())})
    print("  degree0:", dims["degree0"])
    cons = oc.compare_constants()
    print("  constants ok:", cons["ok"], "eqs:", cons["n_equations"],
          "rank blocks:", cons["n_rank_blocks"])
    if not cons["ok"]:
        print("   zero bad:", cons["zero_pattern_failures"][:6])
        print("   unsat:", cons["unsatisfied"][:4])
        print("   rank bad:", cons["rank_mismatches"][:6])
    print("  %.1fs" % (time.time() - t0))
