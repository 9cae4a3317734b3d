"""
Discriminants of complete intersections of equal degree
=======================================================

m hypersurfaces of degree d in P^n.  In characteristic two with n - m even
the pushforward counts every singular point twice, and the class is halved.
"""

from eqpic import GdmnSetup, g_closed_form, g_divisor_class
from eqpic.moduli import alpha_factor
from eqpic.moduli.gdmn import g_raw_pushforward

for dmn in [(4, 1, 2), (2, 3, 4), (3, 2, 4)]:
    s = GdmnSetup(*dmn)
    print(s.label(), "->", g_divisor_class(s), "| closed form", g_closed_form(s))

# one hypersurface: the s1 coefficient is the degree (n+1)(d-1)^n of the discriminant
print([g_divisor_class(GdmnSetup(d, 1, 2)).coefficient({"s1": 1}) for d in range(1, 6)])

# characteristic two
for char in (0, 2):
    s = GdmnSetup(2, 1, 3, char)
    print(f"char {char}: alpha = {alpha_factor(s)}, raw {g_raw_pushforward(s)}, class {g_divisor_class(s)}")
