"""
Osculating spaces and regularity
================================

The order-k osculating space at a point collects all partial derivatives
of a parametrization up to order k.  A map is k-regular when that space
reaches its maximal dimension C(d+k, d) - 1.  Veronese embeddings are
exactly q-regular; scrolls drop regularity at order 2 already.
"""

from fractions import Fraction as F

from rncgeom import Scroll, ScrollSpec, Veronese, make_variety, osculator, regularity_order
from rncgeom.osculation import admissibility_check

origin = (F(0), F(0))

# the Veronese surface of order 2 in P^5
veronese = make_variety(Veronese(2, 2))
for k in (1, 2, 3):
    rep = osculator(veronese, origin, k)
    print(
        f"Veronese(2,2) order {k}: dim {rep.subspace.dim}, "
        f"regular {rep.is_regular} (max dim+1 = {rep.expected_dim_plus_1})"
    )
print("regularity order at a generic point:", regularity_order(veronese, (F(1), F(2))))

# the scroll S_{2,1} has chart (t, t^2, s, s t): its second osculator
# misses one dimension, so it is 1- but not 2-regular
scroll = make_variety(Scroll(ScrollSpec((2, 1))))
rep = osculator(scroll, origin, 2)
print(
    f"\nS_(2,1) order 2: dim {rep.subspace.dim} < {rep.expected_dim_plus_1 - 1}, "
    f"regular {rep.is_regular}"
)

# admissibility: on the quadric S_{1,1}, a tangent plane at one point and
# a second point decompose P^3, for every assignment of the weights (1, 0)
quadric = make_variety(Scroll(ScrollSpec((1, 1))))
points = [(F(0), F(1)), (F(1), F(3)), (F(2), F(-1))]
report = admissibility_check(quadric, points, (1, 0))
print(f"\nadmissible triple on S_(1,1): {report.ok} "
      f"({report.assignments_tested} assignments tested)")
