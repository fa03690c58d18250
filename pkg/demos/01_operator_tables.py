"""Schur expansions produced by the Theta operators.

Feeds normalized Schur and monomial seeds through Theta_(a,b) and prints
the resulting Schur-positive expansions, paper-style.
"""

from ehall.coeffs import QTScalar
from ehall.ehallops import theta
from ehall.symfun import m_, s_, to_latex

inv_qt = QTScalar.qt_monomial(1, -1, -1)

print("Theta_(1,2) applied to (-qt)^-2 s_3:")
print(" ", to_latex(theta(1, 2, s_((3,)).scale(inv_qt * inv_qt)).convert("s")))
print()
print("Theta_(1,2) applied to (-qt)^-1 s_21:")
print(" ", to_latex(theta(1, 2, s_((2, 1)).scale(-inv_qt)).convert("s")))
print()
print("Theta_(1,1) applied to -m_21:")
print(" ", to_latex(theta(1, 1, m_((2, 1)).scale(QTScalar(-1))).convert("s")))
