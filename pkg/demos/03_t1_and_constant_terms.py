"""Three independent routes to the same t = 1 enumerator.

The e-seed pushed through Theta_(a,b) and specialized at t = 1, the
constant-term walk, and the direct area/riser sum over Dyck paths all
agree — an exact, machine-checked identity.
"""

from math import gcd

from ehall.checks import at_t1
from ehall.ctengine import ct_t1
from ehall.ehallops import theta
from ehall.rectcomb import path_enumerator
from ehall.symfun import e_, to_latex

for m, n in [(2, 6), (3, 6), (4, 6)]:
    d = gcd(m, n)
    a, b = m // d, n // d
    via_theta = at_t1(theta(a, b, e_(d))).convert("e")
    via_ct = ct_t1(m, n)
    via_paths = path_enumerator(m, n)
    assert via_theta == via_ct == via_paths
    print(f"e_{d}^(({a},{b})) at t=1  ==  CT walk({m},{n})  ==  path sum({m},{n}):")
    print(" ", to_latex(via_paths))
    print()
