"""
Special varieties and separating invariants
===========================================

Non-standard class members exist only when q = 2n-3.  Exact invariants
tell them apart from the standard models: the dimension of the contact
locus with a first osculator, or the osculating regularity order.
"""

from rncgeom import CubicSpecial, ScrollSpec, SegreSpecial, StandardScroll, Veronese33
from rncgeom.verify import inequivalence_invariants, specialness_witness

# Segre products P^1 x Q: contact dimension max(1, r-1) beats the
# standard value r
for r, mu in ((2, 4), (3, 5)):
    w = specialness_witness(SegreSpecial(r, mu))
    print(
        f"SegreSpecial(r={r}, mu={mu}): contact dim {w.measured} "
        f"vs standard {w.standard_reference} -> {w.verdict}"
    )

# the cubic construction with double points along a quadric
w = specialness_witness(CubicSpecial(2, 2))
print(f"CubicSpecial(2,2): contact dim {w.measured} vs {w.standard_reference} -> {w.verdict}")

# the curious Veronese threefold: standard in one class, special in another
w = specialness_witness(Veronese33())
print(
    f"Veronese(3,3) as a member of (3,6,9): regularity order {w.measured}, "
    f"standard models reach {w.details['standard_orders']} -> {w.verdict}"
)

# a standard control stays standard-compatible
w = specialness_witness(StandardScroll(ScrollSpec((1, 1, 0)), 1, 1))
print(f"standard control: contact dim {w.measured} -> {w.verdict}")

# when q = -1 mod n-1 two standard models compete; they coincide over a
# cone, swap into each other over the n=3 quadric, and are genuinely
# inequivalent otherwise
print()
for degrees, rho in (((4, 0, 0, 0), 2), ((1, 1), 2), ((2, 1, 1), 2)):
    report = inequivalence_invariants(ScrollSpec(degrees), rho)
    print(f"scroll {degrees}, rho={rho}: {report.relation}  {report.details}")
