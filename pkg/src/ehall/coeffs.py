"""Exact arithmetic in the field Q(q,t).

QTPoly is a sparse bivariate polynomial with arbitrary-precision rational
coefficients; QTScalar is a gcd-reduced fraction of two QTPolys with a
monic denominator (graded lexicographic order, q before t).  Every
coefficient appearing anywhere in the library is a QTScalar, including
Laurent constants like (-qt)^(-j), whose negative exponents live in the
denominator.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction


class PoleError(ArithmeticError):
    """A specialization made a denominator vanish."""


def _grlex_key(expt):
    eq, et = expt
    return (eq + et, eq)


class QTPoly:
    """Sparse polynomial in q, t over Q.  Exponents are nonnegative."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, (int, Fraction)):
            terms = {(0, 0): Fraction(terms)} if terms else {}
        clean = {}
        for (eq, et), c in terms.items():
            if eq < 0 or et < 0:
                raise ValueError("QTPoly exponents must be nonnegative")
            c = Fraction(c)
            if c:
                clean[(eq, et)] = c
        self.terms = clean
        self._hash = None

    @staticmethod
    def monomial(c, eq, et):
        return QTPoly({(eq, et): Fraction(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = QTPoly.__new__(QTPoly)
        res.terms = out
        res._hash = None
        return res

    def __neg__(self):
        res = QTPoly.__new__(QTPoly)
        res.terms = {e: -c for e, c in self.terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            if not c0:
                return QTPoly()
            res = QTPoly.__new__(QTPoly)
            res.terms = {e: c * c0 for e, c in self.terms.items()}
            res._hash = None
            return res
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = QTPoly.__new__(QTPoly)
        res.terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use QTScalar for negative powers")
        result = QTPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def leading(self):
        """Leading (exponent, coeff) under grlex with q before t."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def degree(self):
        return max((eq + et for eq, et in self.terms), default=-1)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def const(self):
        return self.terms.get((0, 0), Fraction(0))

    def divmod(self, other):
        """Division with remainder by a single divisor, grlex order."""
        if not other:
            raise ZeroDivisionError("QTPoly division by zero")
        (dq, dt), dc = other.leading()
        quo = {}
        rem = {}
        cur = dict(self.terms)
        while cur:
            e = max(cur, key=_grlex_key)
            c = cur.pop(e)
            eq, et = e
            if eq >= dq and et >= dt:
                fe = (eq - dq, et - dt)
                fc = c / dc
                quo[fe] = quo.get(fe, 0) + fc
                for (a, b), cc in other.terms.items():
                    if (a, b) == (dq, dt):
                        continue
                    ee = (fe[0] + a, fe[1] + b)
                    s = cur.get(ee, 0) - fc * cc
                    if s:
                        cur[ee] = s
                    else:
                        cur.pop(ee, None)
            else:
                rem[e] = c
        return QTPoly(quo), QTPoly(rem)

    def subs(self, vq, vt):
        """Evaluate at QTScalar values vq, vt."""
        pow_q = {0: QTScalar.one()}
        pow_t = {0: QTScalar.one()}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        total = QTScalar.zero()
        for (eq, et), c in self.terms.items():
            term = QTScalar.from_fraction(c)
            if eq:
                term = term * power(pow_q, vq, eq)
            if et:
                term = term * power(pow_t, vt, et)
            total = total + term
        return total

    def _monomial_content(self):
        eq = min(e[0] for e in self.terms)
        et = min(e[1] for e in self.terms)
        return eq, et

    def _shift_down(self, eq, et):
        if not eq and not et:
            return self
        return QTPoly({(a - eq, b - et): c for (a, b), c in self.terms.items()})

    def to_json(self):
        return [[str(c), e[0], e[1]] for e, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(data):
        return QTPoly({(int(eq), int(et)): Fraction(c) for c, eq, et in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (eq, et), c in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True):
            mon = "".join(
                [f"q^{eq}" if eq > 1 else "q" * (eq == 1), f"t^{et}" if et > 1 else "t" * (et == 1)]
            )
            if not mon:
                bits.append(str(c))
            elif c == 1:
                bits.append(mon)
            elif c == -1:
                bits.append("-" + mon)
            else:
                bits.append(f"{c}*{mon}")
        s = "+".join(bits).replace("+-", "-")
        return s


_SYMPY_RING = None


def _sympy_ring():
    global _SYMPY_RING
    if _SYMPY_RING is None:
        from sympy import QQ
        from sympy.polys.orderings import grlex
        from sympy.polys.rings import ring

        _SYMPY_RING = ring("q,t", QQ, order=grlex)
    return _SYMPY_RING


def poly_gcd(a: QTPoly, b: QTPoly) -> QTPoly:
    """gcd of two QTPolys, delegated to sympy's sparse polynomial rings."""
    if not a:
        return b
    if not b:
        return a
    R, _, _ = _sympy_ring()
    dom = R.domain
    fa = R.from_dict({e: dom.convert(c) for e, c in a.terms.items()})
    fb = R.from_dict({e: dom.convert(c) for e, c in b.terms.items()})
    g = fa.gcd(fb)
    return QTPoly({e: Fraction(c.numerator, c.denominator) for e, c in g.to_dict().items()})


class QTScalar:
    """An element of Q(q,t) in canonical reduced form.

    Invariants: den != 0, gcd(num, den) = 1, den monic under grlex
    (q before t), and zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, QTPoly):
            num = QTPoly(num)
        if den is None:
            den = QTPoly(1)
        elif not isinstance(den, QTPoly):
            den = QTPoly(den)
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @staticmethod
    def _raw(num, den):
        out = QTScalar.__new__(QTScalar)
        out.num, out.den = num, den
        out._hash = None
        return out

    @staticmethod
    def zero():
        return QTScalar._raw(QTPoly(), QTPoly(1))

    @staticmethod
    def one():
        return QTScalar._raw(QTPoly(1), QTPoly(1))

    @staticmethod
    def from_fraction(c):
        return QTScalar._raw(QTPoly(Fraction(c)), QTPoly(1))

    @staticmethod
    def qt_monomial(c, eq, et):
        """c * q^eq * t^et with possibly negative exponents."""
        num_e = (max(eq, 0), max(et, 0))
        den_e = (max(-eq, 0), max(-et, 0))
        return QTScalar(QTPoly({num_e: Fraction(c)}), QTPoly({den_e: Fraction(1)}))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self:
            return other
        if not other:
            return self
        if self.den == other.den:
            return QTScalar(self.num + other.num, self.den)
        return QTScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QTScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self or not other:
            return QTScalar.zero()
        # cross-reduce to keep intermediate products small
        n1, d2 = _normalize(self.num, other.den)
        n2, d1 = _normalize(other.num, self.den)
        return QTScalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero QTScalar")
        return QTScalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QTScalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_polynomial(self):
        return self.den == QTPoly(1)

    def is_constant(self):
        return self.num.is_constant() and self.den == QTPoly(1)

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self!r}")
        return self.num.const()

    def specialize(self, bind):
        """Exact substitution; bind maps 'q'/'t' to QTScalar values.

        Missing variables are left alone.  Raises PoleError if the
        denominator vanishes under the binding.
        """
        vq = bind.get("q", QT_Q)
        vt = bind.get("t", QT_T)
        if not isinstance(vq, QTScalar):
            vq = QTScalar(vq)
        if not isinstance(vt, QTScalar):
            vt = QTScalar(vt)
        den = self.den.subs(vq, vt)
        if not den:
            raise PoleError(f"denominator vanishes under {bind}")
        return self.num.subs(vq, vt) / den

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data):
        return QTScalar(QTPoly.from_json(data["num"]), QTPoly.from_json(data["den"]))

    def key(self):
        """Hashable canonical content, for memo keys and digests."""
        return (
            tuple(sorted(self.num.terms.items())),
            tuple(sorted(self.den.terms.items())),
        )

    def __repr__(self):
        if self.den == QTPoly(1):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _coerce(x):
    if isinstance(x, QTScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QTScalar.from_fraction(x)
    if isinstance(x, QTPoly):
        return QTScalar(x)
    return NotImplemented


def _normalize(num: QTPoly, den: QTPoly):
    """Canonical reduced (num, den): coprime, den monic under grlex."""
    if not den:
        raise ZeroDivisionError("QTScalar with zero denominator")
    if not num:
        return QTPoly(), QTPoly(1)
    # cancel the common monomial factor
    nq, nt = num._monomial_content()
    dq, dt = den._monomial_content()
    mq, mt = min(nq, dq), min(nt, dt)
    if mq or mt:
        num = num._shift_down(mq, mt)
        den = den._shift_down(mq, mt)
    if den.is_constant():
        c = den.const()
        if c != 1:
            num = num * (1 / c)
        return num, QTPoly(1)
    if num.is_constant():
        pass  # nothing to cancel beyond the monic scaling below
    else:
        q, r = num.divmod(den)
        if not r:
            return _normalize(q, QTPoly(1))
        q, r = den.divmod(num)
        if not r:
            return _normalize(QTPoly(1), q)
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
            if den.is_constant():
                return _normalize(num, den)
    _, lc = den.leading()
    if lc != 1:
        inv = 1 / lc
        num = num * inv
        den = den * inv
    return num, den


# Common constants
QT_Q = QTScalar(QTPoly.monomial(1, 1, 0))
QT_T = QTScalar(QTPoly.monomial(1, 0, 1))
QT_ONE = QTScalar.one()
QT_ZERO = QTScalar.zero()
# M = (1-t)(1-q), ubiquitous in the operator calculus
M_POLY = (QTPoly(1) - QTPoly.monomial(1, 0, 1)) * (QTPoly(1) - QTPoly.monomial(1, 1, 0))
QT_M = QTScalar(M_POLY)


def qt(num, den=1):
    """Convenience constructor: qt(poly-dict/int, poly-dict/int)."""
    return QTScalar(num if isinstance(num, QTPoly) else QTPoly(num),
                    den if isinstance(den, QTPoly) else QTPoly(den))
