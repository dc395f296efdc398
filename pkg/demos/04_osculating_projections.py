"""
Osculating projections onto Veronese images
===========================================

Projecting a class member from a direct sum of weighted osculators sends
it birationally onto a Veronese variety, and its curves onto rational
normal curves of the projected order.  This is the key mechanism behind
the classification of standard models.
"""

import random
from fractions import Fraction as F

from rncgeom import ScrollSpec, StandardScroll, Veronese, make_variety, pi
from rncgeom.osculation import osculating_projection, regularity_order
from rncgeom.verify import verify_veronese_projection

rng = random.Random(2)

# the standard model X(2,0) over S_{1,1}: class (r, n, q) = (1, 3, 4).
# projecting from one first-order osculator lands on a Veronese of
# order 2 spanning P^5
spec = StandardScroll(ScrollSpec((1, 1)), 2, 0)
variety = make_variety(spec)
center_point = (F(3), F(1, 2))
image = osculating_projection(variety, [(center_point, 1)])
print(f"image span: P^{image.span().dim} (pi_(1,2)(2) = {pi(1, 2, 2)})")
print("image regularity order at a generic point:", regularity_order(image, (F(1), F(5))))

# the full campaign also projects fitted curves and checks the
# single-point variant landing in the class (r, n-1, q - rho_1 - 1)
report = verify_veronese_projection(spec, trials=2, seed=7)
print("\ncampaign verdict:", report.verdict)
for trial in report.trials:
    print("  trial", trial["seed"], "image span", trial["image_span"],
          "projected curve", trial["projected_curve"])

# projecting the cubic Veronese threefold from a tangent osculator gives
# the special member of the class (3, 5, 7): the span matches pi_(2,5)(7)
cubic = make_variety(Veronese(3, 3))
proj = osculating_projection(cubic, [((F(1), F(0), F(2)), 1)])
print(f"\nVeronese(3,3) projected: span P^{proj.span().dim} = pi_(2,5)(7) = {pi(2, 5, 7)}")
