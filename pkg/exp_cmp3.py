"""Random finite-dimensional presentations through the comparison."""
import time
from ncalc.bar import QuotientOps
from ncalc.compare import OracleComparison, random_fd_presentation

for seed in range(12):
    t0 = time.time()
    pres = random_fd_presentation(seed)
    top = QuotientOps(pres).top_weight()
    print("seed", seed, "arrows", pres.quiver.arrows, "rels",
          sorted(pres.relations), "top", top)
    oc = OracleComparison(pres, max_degree=4)
    dims = oc.compare_dims()
    cons = oc.compare_constants()
    nhh = sum(1 for v in dims["hh"].values() if v[0])
    nlo = sum(1 for v in dims["hh_low"].values() if v[0])
    print("   mism:", dims["mismatches"], "| hh blocks:", nhh,
          "low blocks:", nlo, "| ok:", cons["ok"],
          "eqs:", cons["n_equations"], "ranks:", cons["n_rank_blocks"],
          "| %.1fs" % (time.time() - t0))
    if not cons["ok"]:
        print("   zero bad:", cons["zero_pattern_failures"][:6])
        print("   unsat:", cons["unsatisfied"][:3])
        print("   rank bad:", cons["rank_mismatches"][:6])
