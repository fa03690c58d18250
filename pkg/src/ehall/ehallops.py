"""Operators on symmetric functions: the degree-shift family D_k, the
bidegree-indexed family Q_(m,n) built from nested commutators, the
theta operators Theta_(a,b), and the composition operators C_a.

Conventions (fixed once, validated by the test suite):
  * Q_(0,l) is multiplication by q_l and Q_(1,0) = D_0.
  * For other bidegrees, Q_(m,n) = (1/M) [Q_(k,l), Q_(m-k,n-l)] with
    M = (1-t)(1-q) and the split (k,l) chosen canonically (see q_split).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import symfun
from .coeffs import QT_M, QT_ONE, QTScalar
from .symfun import Alphabet, SymFun, mul, plethys

#: bump when any operator convention changes, so cached results invalidate
CALIBRATION_VERSION = "ehall-ops-1"

_M_INV = QT_M.inverse()


# ---------------------------------------------------------------------------
# the operators D_k
# ---------------------------------------------------------------------------


def apply_D(k: int, g: SymFun) -> SymFun:
    """D_k g = [z^k] g[x + M/z] * sum_n e_n (-z)^n."""
    d = g.max_degree()
    series = plethys(g, Alphabet.x_plus_m_over_z())
    out = SymFun.zero("p")
    for j in series.exponents():
        n = k - j
        if n < 0 or n > k + d:
            continue
        term = mul(series.coeff(j), symfun.e_(n))
        if n % 2:
            term = -term
        out = out + term
    return out


# ---------------------------------------------------------------------------
# canonical commutator splits and bracket words
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_split(m: int, n: int):
    """Canonical split (k,l), (m-k,n-l) for Q_(m,n) = [Q_(k,l), Q_(u,v)]/M.

    The split is computed on the coprime direction (a,b) = (m,n)/gcd and
    kept unscaled: (k,l) is the unique lattice point in the box
    [0,a] x [0,b] with a*l - b*k = 1, which makes det((u,v),(k,l)) equal
    to gcd(m,n).
    """
    if m < 0 or n < 0 or (m, n) in ((0, 0), (1, 0)) or m == 0:
        raise ValueError(f"no split for bidegree {(m, n)}")
    d = gcd(m, n)
    a, b = m // d, n // d
    candidates = []
    for k in range(a + 1):
        num = 1 + b * k
        if num % a == 0:
            l = num // a
            if 0 <= l <= b and (k, l) not in ((0, 0), (a, b)):
                candidates.append((k, l))
    if len(candidates) != 1:
        raise AssertionError(f"split for {(m, n)} is not unique: {candidates}")
    k, l = candidates[0]
    u, v = m - k, n - l
    assert m * l - n * k == d
    assert u >= 1, f"unreachable axis leaf {(u, v)}"
    assert v >= 1 or u == 1, f"unreachable axis leaf {(u, v)}"
    assert k >= 1 or l == 1, f"unreachable axis leaf {(k, l)}"
    return (k, l), (u, v)


@lru_cache(maxsize=None)
def bracket_tree(m: int, n: int):
    """Nested-commutator expression for Q_(m,n) over the leaves q_l, D_0.

    Nodes are ('e', l) for multiplication by q_l, ('D',) for D_0, and
    ('[]', left, right) for a commutator divided by M.
    """
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise ValueError(f"invalid bidegree {(m, n)}")
    if m == 0:
        return ("e", n)
    if (m, n) == (1, 0):
        return ("D",)
    (k, l), (u, v) = q_split(m, n)
    return ("[]", bracket_tree(k, l), bracket_tree(u, v))


def bracket_word(m: int, n: int) -> str:
    """Flat string form of the commutator expression, e.g. '[e1,D0]'."""

    def render(node):
        if node[0] == "e":
            return "e1" if node[1] == 1 else f"q{node[1]}"
        if node[0] == "D":
            return "D0"
        return f"[{render(node[1])},{render(node[2])}]"

    return render(bracket_tree(m, n))


def m_power(m: int, n: int) -> int:
    """Exponent w in Q_(m,n) = (1/M^w) <bracket word>."""

    def count(node):
        return 0 if node[0] in ("e", "D") else 1 + count(node[1]) + count(node[2])

    return count(bracket_tree(m, n))


# ---------------------------------------------------------------------------
# applying Q_(m,n)
# ---------------------------------------------------------------------------

_apply_memo: dict = {}


def _apply_tree(node, f: SymFun) -> SymFun:
    if node[0] == "e":
        return mul(symfun.q_d(node[1]), f)
    if node[0] == "D":
        return apply_D(0, f)
    left, right = node[1], node[2]
    lr = _apply_tree(left, _apply_tree(right, f))
    rl = _apply_tree(right, _apply_tree(left, f))
    return (lr - rl).scale(_M_INV)


def apply_Q(m: int, n: int, f: SymFun) -> SymFun:
    """Apply Q_(m,n) to f (memoized on the bidegree and the content of f)."""
    key = (m, n, f.key())
    hit = _apply_memo.get(key)
    if hit is not None:
        return hit
    result = _apply_tree(bracket_tree(m, n), f)
    _apply_memo[key] = result
    return result


def clear_memo():
    _apply_memo.clear()


# ---------------------------------------------------------------------------
# theta operators
# ---------------------------------------------------------------------------


def theta(a: int, b: int, f: SymFun, g: SymFun | None = None) -> SymFun:
    """Theta_(a,b)(f) applied to g (default 1).

    f is expanded in the q_mu basis degreewise and each q_mu is replaced
    by the product of the commuting operators Q_(a mu_i, b mu_i).  For
    a < 0 the operator is transported along nabla:
    Theta_(a,b) = nabla^(-1) Theta_(a+b,b) nabla.
    """
    if b < 1:
        raise ValueError("theta needs b >= 1")
    if g is None:
        g = SymFun.one("p")
    if a < 0:
        from .macdonald import nabla  # deferred: macdonald builds on this module

        return nabla(theta(a + b, b, f, nabla(g)), power=-1)
    out = SymFun.zero("p")
    for comp in f.degree_components().values():
        for mu, c in symfun.expand_in_q(comp).terms.items():
            h = g
            for part in reversed(mu):
                if a == 0:
                    h = mul(symfun.q_d(part * b), h)
                else:
                    h = apply_Q(a * part, b * part, h)
            out = out + h.scale(c)
    return out


# ---------------------------------------------------------------------------
# composition operators
# ---------------------------------------------------------------------------


def c_op(a: int, f: SymFun) -> SymFun:
    """C_a f = (-t)^(1-a) (f[x - (t-1)/(tz)] * sum_m z^m h_m) |_(z^a)."""
    series = plethys(f, Alphabet.x_minus_tfrac_over_z())
    out = SymFun.zero("p")
    for j in series.exponents():
        n = a - j
        if n < 0:
            continue
        out = out + mul(series.coeff(j), symfun.h_(n))
    return out.scale(QTScalar.qt_monomial((-1) ** (1 - a), 0, 1 - a))


def c_alpha(alpha, f: SymFun | None = None) -> SymFun:
    """C_(alpha_1) C_(alpha_2) ... C_(alpha_k) f, applied right to left."""
    if f is None:
        f = SymFun.one("p")
    for a in reversed(tuple(alpha)):
        f = c_op(a, f)
    return f
