"""
Dimension formulas and index-set counts
=======================================

The span of a variety carrying degree-q rational normal curves through n
generic points is bounded by a closed-form number pi_{r,n}(q).  This
script tabulates it, checks it against the Castelnuovo-Harris genus
bound, and counts the monomial index sets that realize it.
"""

from rncgeom import ScrollSpec, build_A, build_A_cone, castelnuovo_bound, pi
from rncgeom.catalog import ClassParams

# the table: one row per class, plus the genus-bound cross-check
print(f"{'r':>2} {'n':>2} {'q':>3} {'pi':>6} {'genus bound':>12}")
for r in (1, 2, 3):
    for n in (2, 3, 4):
        for q in range(n - 1, 8):
            d = q + r * (n - 1) + 2
            print(
                f"{r:>2} {n:>2} {q:>3} {pi(r, n, q):>6} "
                f"{castelnuovo_bound(r, n, d) - 1:>12}"
            )

# the index set A(rho, chi) over a scroll has exactly pi+1 elements
# counting the excluded zero index
a = ScrollSpec((2, 1, 1))
params = ClassParams(a.r, a.n, 7)
index_set = build_A(a, params.rho, params.chi)
print(f"\nA(rho={params.rho}, chi={params.chi}) over scroll {a.degrees}:")
for idx in index_set:
    print(" ", idx)
print(f"cardinality {len(index_set)} = pi_{{2,5}}(7) = {pi(2, 5, 7)}")

# the cone-over-a-Veronese-surface branch counts the same way
cone_set = build_A_cone(2, 6)
print(f"\ncone index set for q = 6: {len(cone_set)} elements = pi = {pi(2, 5, 6)}")
