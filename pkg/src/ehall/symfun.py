"""Symmetric functions over Q(q,t).

A SymFun is a basis-tagged, finitely supported map from partitions to
QTScalar; sums of mixed degrees are allowed and all operations work
degreewise.  Supported bases: m, e, h, p, s, and the q-basis built from
the alternating hook-Schur combinations q_d.

The pivot basis for conversions is p: e and h reach it through Newton's
identities, s through Murnaghan-Nakayama characters, m through exact
monomial expansion in finitely many variables, and the q-basis through
a per-degree linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import threading

from . import linalg, shapes
from .coeffs import QT_ONE, QT_ZERO, QTScalar

BASES = "mehpsq"

_cache_lock = threading.RLock()


class TruncationError(ValueError):
    """A z-series coefficient beyond the computed truncation was requested."""


# ---------------------------------------------------------------------------
# transition expansions (all cached per generator / per degree)
# ---------------------------------------------------------------------------


def _merge(d1, d2):
    """Product of two expansions in a multiplicative basis (free merge)."""
    out = {}
    for mu, c1 in d1.items():
        for nu, c2 in d2.items():
            key = shapes.union_parts(mu, nu)
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _e_in_p(k: int):
    """e_k in the p basis: k e_k = sum_i (-1)^(i-1) p_i e_(k-i)."""
    if k == 0:
        return {(): Fraction(1)}
    out = {}
    for i in range(1, k + 1):
        sign = Fraction((-1) ** (i - 1), k)
        for mu, c in _e_in_p(k - i).items():
            key = shapes.union_parts(mu, (i,))
            out[key] = out.get(key, 0) + sign * c
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _h_in_p(k: int):
    """h_k in the p basis: k h_k = sum_i p_i h_(k-i)."""
    if k == 0:
        return {(): Fraction(1)}
    out = {}
    for i in range(1, k + 1):
        for mu, c in _h_in_p(k - i).items():
            key = shapes.union_parts(mu, (i,))
            out[key] = out.get(key, 0) + Fraction(c, k)
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _p_in_e(k: int):
    """p_k in the e basis, by inverting Newton's identity."""
    if k == 1:
        return {(1,): Fraction(1)}
    sign = Fraction((-1) ** (k - 1))
    out = {(k,): sign * k}
    for i in range(1, k):
        coef = -sign * Fraction((-1) ** (i - 1))
        for mu, c in _p_in_e(i).items():
            key = shapes.union_parts(mu, (k - i,))
            out[key] = out.get(key, 0) + coef * c
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _p_in_h(k: int):
    """p_k in the h basis: p_k = k h_k - sum_(i<k) p_i h_(k-i)."""
    if k == 1:
        return {(1,): Fraction(1)}
    out = {(k,): Fraction(k)}
    for i in range(1, k):
        for mu, c in _p_in_h(i).items():
            key = shapes.union_parts(mu, (k - i,))
            out[key] = out.get(key, 0) - c
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _gen_prod(kind: str, mu: tuple):
    """Expansion of a product of generators indexed by mu.

    kind is 'e>p', 'h>p', 'p>e' or 'p>h'; the result lives in the target
    (multiplicative) basis, with Fraction coefficients.
    """
    table = {"e>p": _e_in_p, "h>p": _h_in_p, "p>e": _p_in_e, "p>h": _p_in_h}[kind]
    out = {(): Fraction(1)}
    for part in mu:
        out = _merge(out, table(part))
    return out


@lru_cache(maxsize=None)
def _chi(lam: tuple, mu: tuple) -> int:
    """Irreducible S_n character value chi^lam_mu (Murnaghan-Nakayama)."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(nb2 - (ell - 1 - i) for i, nb2 in enumerate(newbeta))
        newlam = tuple(p for p in newlam if p > 0)
        total += (-1) ** height * _chi(newlam, rest)
    return total


@lru_cache(maxsize=None)
def _s_in_p(lam: tuple):
    """s_lam = sum_mu chi^lam_mu / z_mu p_mu."""
    d = sum(lam)
    out = {}
    for mu in shapes.partitions_of(d):
        c = _chi(lam, mu)
        if c:
            out[mu] = Fraction(c, shapes.z_stat(mu))
    return out


@lru_cache(maxsize=None)
def _p_in_s(mu: tuple):
    """p_mu = sum_lam chi^lam_mu s_lam."""
    d = sum(mu)
    out = {}
    for lam in shapes.partitions_of(d):
        c = _chi(lam, mu)
        if c:
            out[lam] = Fraction(c)
    return out


def _expand_p_monomials(mu: tuple, nvars: int):
    """Exact expansion of p_mu as a polynomial in nvars variables."""
    terms = {(0,) * nvars: Fraction(1)}
    for k in mu:
        new = {}
        for expt, c in terms.items():
            for i in range(nvars):
                e2 = list(expt)
                e2[i] += k
                e2 = tuple(e2)
                s = new.get(e2, 0) + c
                new[e2] = s
        terms = new
    return terms


@lru_cache(maxsize=None)
def _p_m_matrices(d: int):
    """(p-to-m, m-to-p) transition tables at degree d, via brute monomial
    expansion in d variables (an oracle-grade independent route)."""
    parts = shapes.partitions_of(d)
    if d == 0:
        return ({(): {(): Fraction(1)}}, {(): {(): Fraction(1)}})
    p2m = {}
    for mu in parts:
        expansion = _expand_p_monomials(mu, d)
        row = {}
        for nu in parts:
            key = tuple(list(nu) + [0] * (d - len(nu)))
            c = expansion.get(key)
            if c:
                row[nu] = c
        p2m[mu] = row
    mat = [[p2m[mu].get(nu, Fraction(0)) for nu in parts] for mu in parts]
    inv = linalg.inverse(mat)
    # p = mat * m componentwise, so m_mu = sum_j inv[i][j] p_(parts[j])
    m2p = {}
    for i, mu in enumerate(parts):
        m2p[mu] = {parts[j]: inv[i][j] for j in range(len(parts)) if inv[i][j]}
    return p2m, m2p


# ---------------------------------------------------------------------------
# SymFun
# ---------------------------------------------------------------------------


class SymFun:
    """A symmetric function tagged with the basis its terms refer to."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for mu, c in (terms or {}).items():
            mu = tuple(mu)
            if not isinstance(c, QTScalar):
                c = QTScalar(c)
            if c:
                clean[mu] = c
        self.terms = clean

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(basis="p"):
        return SymFun(basis, {})

    @staticmethod
    def one(basis="p"):
        return SymFun(basis, {(): QT_ONE})

    # -- structure ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def max_degree(self):
        return max((sum(mu) for mu in self.terms), default=0)

    def is_homogeneous(self):
        return len({sum(mu) for mu in self.terms}) <= 1

    def degree_components(self):
        """Map degree -> homogeneous component (same basis)."""
        out = {}
        for mu, c in self.terms.items():
            out.setdefault(sum(mu), {})[mu] = c
        return {d: SymFun(self.basis, t) for d, t in sorted(out.items())}

    def coefficient(self, mu):
        return self.terms.get(tuple(mu), QT_ZERO)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        if other.basis != self.basis:
            other = other.convert(self.basis)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            s = out.get(mu, QT_ZERO) + c
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
        res = SymFun.__new__(SymFun)
        res.basis, res.terms = self.basis, out
        return res

    def __neg__(self):
        res = SymFun.__new__(SymFun)
        res.basis = self.basis
        res.terms = {mu: -c for mu, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, QTScalar):
            c = QTScalar(c)
        if not c:
            return SymFun(self.basis, {})
        res = SymFun.__new__(SymFun)
        res.basis = self.basis
        res.terms = {mu: c * v for mu, v in self.terms.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, SymFun):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.convert("p").terms == other.convert("p").terms

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Canonical hashable digest (p-basis content)."""
        p = self.convert("p")
        return tuple(sorted((mu, c.key()) for mu, c in p.terms.items()))

    # -- conversions ----------------------------------------------------
    def convert(self, target: str) -> "SymFun":
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        with _cache_lock:
            p = self._to_p()
            if target == "p":
                return p
            return p._from_p(target)

    def _to_p(self):
        b = self.basis
        if b == "p":
            return self
        out = {}
        for mu, c in self.terms.items():
            if b in ("e", "h"):
                exp = _gen_prod(b + ">p", mu)
            elif b == "s":
                exp = _s_in_p(mu)
            elif b == "m":
                exp = _p_m_matrices(sum(mu))[1][mu]
            elif b == "q":
                exp = _q_mu_in_p(mu)
            for nu, f in exp.items():
                s = out.get(nu, QT_ZERO) + c * f
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
        res = SymFun.__new__(SymFun)
        res.basis, res.terms = "p", out
        return res

    def _from_p(self, target):
        assert self.basis == "p"
        if target == "q":
            return expand_in_q(self)
        out = {}
        for mu, c in self.terms.items():
            if target in ("e", "h"):
                exp = _gen_prod("p>" + target, mu)
            elif target == "s":
                exp = _p_in_s(mu)
            elif target == "m":
                exp = _p_m_matrices(sum(mu))[0][mu]
            for nu, f in exp.items():
                s = out.get(nu, QT_ZERO) + c * f
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
        res = SymFun.__new__(SymFun)
        res.basis, res.terms = target, out
        return res

    # -- serialization ---------------------------------------------------
    def to_json(self):
        order = sorted(self.terms, key=lambda mu: (sum(mu), mu), reverse=True)
        return {
            "basis": self.basis,
            "terms": [{"mu": list(mu), "c": self.terms[mu].to_json()} for mu in order],
        }

    @staticmethod
    def from_json(data):
        return SymFun(
            data["basis"],
            {tuple(t["mu"]): QTScalar.from_json(t["c"]) for t in data["terms"]},
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda mu: (sum(mu), mu), reverse=True)
        bits = []
        for mu in order:
            idx = "".join(map(str, mu)) if mu else ""
            name = f"{self.basis}[{idx}]" if mu else "1"
            bits.append(f"({self.terms[mu]!r})*{name}")
        return " + ".join(bits)


# -- generator constructors --------------------------------------------


def e_(k: int) -> SymFun:
    return SymFun("e", {(k,): QT_ONE}) if k else SymFun.one("e")


def h_(k: int) -> SymFun:
    return SymFun("h", {(k,): QT_ONE}) if k else SymFun.one("h")


def p_(k: int) -> SymFun:
    return SymFun("p", {(k,): QT_ONE}) if k else SymFun.one("p")


def s_(mu) -> SymFun:
    return SymFun("s", {shapes.check_partition(mu): QT_ONE})


def m_(mu) -> SymFun:
    return SymFun("m", {shapes.check_partition(mu): QT_ONE})


def e_mu(mu) -> SymFun:
    return SymFun("e", {shapes.check_partition(mu): QT_ONE})


def h_mu(mu) -> SymFun:
    return SymFun("h", {shapes.check_partition(mu): QT_ONE})


def mul(f: SymFun, g: SymFun) -> SymFun:
    """Exact product; free merge in a multiplicative basis, else via p."""
    basis = f.basis if f.basis == g.basis and f.basis in "ehpq" else "p"
    a, b = f.convert(basis), g.convert(basis)
    out = {}
    for mu, c1 in a.terms.items():
        for nu, c2 in b.terms.items():
            key = shapes.union_parts(mu, nu)
            s = out.get(key, QT_ZERO) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return SymFun(basis, out)


def convert(f: SymFun, target: str) -> SymFun:
    return f.convert(target)


# ---------------------------------------------------------------------------
# hook Schur functions and the q basis
# ---------------------------------------------------------------------------


def hook_schur(j: int, k: int) -> SymFun:
    """s_(j|k), the Schur function of the hook (j+1, 1^k)."""
    return s_(shapes.hook(j, k))


@lru_cache(maxsize=None)
def _q_d_in_p(d: int):
    """q_d = sum_(j+k=d-1) (-qt)^(-j) s_(j|k), expanded into p."""
    if d < 1:
        raise ValueError("q_d needs d >= 1")
    out = {}
    for j in range(d):
        k = d - 1 - j
        coeff = QTScalar.qt_monomial((-1) ** j, -j, -j)
        for nu, f in _s_in_p(shapes.hook(j, k)).items():
            s = out.get(nu, QT_ZERO) + coeff * f
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)
    return out


@lru_cache(maxsize=None)
def _q_mu_in_p(mu: tuple):
    out = {(): QT_ONE}
    for part in mu:
        nxt = {}
        for nu1, c1 in out.items():
            for nu2, c2 in _q_d_in_p(part).items():
                key = shapes.union_parts(nu1, nu2)
                s = nxt.get(key, QT_ZERO) + c1 * c2
                if s:
                    nxt[key] = s
                else:
                    nxt.pop(key, None)
        out = nxt
    return out


def q_d(d: int) -> SymFun:
    """The q-basis generator q_d, in the s basis."""
    terms = {}
    for j in range(d):
        terms[shapes.hook(j, d - 1 - j)] = QTScalar.qt_monomial((-1) ** j, -j, -j)
    return SymFun("s", terms)


def q_mu(mu) -> SymFun:
    return SymFun("q", {shapes.check_partition(mu): QT_ONE})


@lru_cache(maxsize=None)
def _q_inverse(d: int):
    """Inverse transition: p-coordinates -> q_mu-coordinates at degree d."""
    parts = shapes.partitions_of(d)
    mat = [[_q_mu_in_p(mu).get(nu, QT_ZERO) for mu in parts] for nu in parts]
    return linalg.inverse(mat)


def expand_in_q(f: SymFun) -> SymFun:
    """Express f in the q_mu basis (degreewise linear solve)."""
    out = {}
    for d, comp in f.convert("p").degree_components().items():
        parts = shapes.partitions_of(d)
        with _cache_lock:
            inv = _q_inverse(d)
        vec = [comp.terms.get(nu, QT_ZERO) for nu in parts]
        for i, mu in enumerate(parts):
            c = QT_ZERO
            for j in range(len(parts)):
                if vec[j]:
                    c = c + inv[i][j] * vec[j]
            if c:
                out[mu] = c
    return SymFun("q", out)


# ---------------------------------------------------------------------------
# Hall scalar product, involutions
# ---------------------------------------------------------------------------


def hall_scalar(f: SymFun, g: SymFun) -> QTScalar:
    """<s_lam, s_mu> = delta, extended bilinearly; mixed degrees pair to 0."""
    a, b = f.convert("s"), g.convert("s")
    total = QT_ZERO
    small, big = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    for mu, c in small.terms.items():
        d = big.terms.get(mu)
        if d:
            total = total + c * d
    return total


def omega(f: SymFun) -> SymFun:
    """The classical involution: omega p_k = (-1)^(k-1) p_k."""
    p = f.convert("p")
    out = {mu: c if (sum(mu) - len(mu)) % 2 == 0 else -c for mu, c in p.terms.items()}
    res = SymFun("p", out)
    return res.convert(f.basis)


def qt_invert(f: SymFun) -> SymFun:
    """Substitute q -> 1/q, t -> 1/t in every coefficient."""
    from .coeffs import QT_Q, QT_T

    bind = {"q": QT_Q.inverse(), "t": QT_T.inverse()}
    return SymFun(f.basis, {mu: c.specialize(bind) for mu, c in f.terms.items()})


def omega_star(f: SymFun) -> SymFun:
    """f_d -> (-1/qt)^(d-1) omega f_d(x; 1/q, 1/t), applied degreewise."""
    total = SymFun.zero(f.basis)
    for d, comp in f.degree_components().items():
        g = omega(qt_invert(comp))
        if d >= 1:
            g = g.scale(QTScalar.qt_monomial((-1) ** (d - 1), -(d - 1), -(d - 1)))
        total = total + g
    return total


def specialize_coeffs(f: SymFun, bind) -> SymFun:
    """Apply a q/t substitution to every coefficient."""
    return SymFun(f.basis, {mu: c.specialize(bind) for mu, c in f.terms.items()})


# ---------------------------------------------------------------------------
# composition-indexed Schur functions (Jacobi-Trudi determinant)
# ---------------------------------------------------------------------------


def composition_schur(alpha) -> SymFun:
    """det(h_(c_i - i + j)) for a composition alpha, expanded exactly.

    Always evaluates to 0 or to a single Schur function up to sign; that
    property is asserted here.
    """
    alpha = tuple(alpha)
    if not alpha or any(c < 1 for c in alpha):
        raise ValueError(f"invalid composition {alpha}")
    k = len(alpha)
    # Laplace expansion along rows, memoized on (row, remaining columns)
    from functools import lru_cache as _lc

    @_lc(maxsize=None)
    def minor(row, cols):
        if row == k:
            return SymFun.one("h")
        total = SymFun.zero("h")
        for idx, j in enumerate(cols):
            m = alpha[row] - (row + 1) + (j + 1)
            if m < 0:
                continue
            entry = h_(m)
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            term = mul(entry, sub)
            if idx % 2:
                term = -term
            total = total + term
        return total

    det = minor(0, tuple(range(k)))
    result = det.convert("s")
    if len(result.terms) > 1 or any(
        c.key() not in (QT_ONE.key(), (-QT_ONE).key()) for c in result.terms.values()
    ):
        raise AssertionError(f"composition Schur of {alpha} is not 0 or +-s_lam: {result!r}")
    return result


# ---------------------------------------------------------------------------
# plethystic evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Alphabet:
    """A formal plethystic argument: base_scale * x plus signed Laurent
    monomials in q, t, z.

    Evaluation is defined on power sums:
      p_k[A] = base_scale(q^k,t^k) * p_k(x) + sum_extras sign * mono^k,
    where a constant base_scale is left untouched (a constant alphabet
    multiplies power sums linearly).
    """

    base_scale: QTScalar
    extras: tuple = ()  # entries (sign, eq, et, ez)

    @staticmethod
    def x():
        return Alphabet(QT_ONE)

    @staticmethod
    def scaled(c):
        if not isinstance(c, QTScalar):
            c = QTScalar(c)
        return Alphabet(c)

    @staticmethod
    def x_plus_m_over_z():
        """x + M/z with M = (1-t)(1-q)."""
        return Alphabet(QT_ONE, ((1, 0, 0, -1), (-1, 0, 1, -1), (-1, 1, 0, -1), (1, 1, 1, -1)))

    @staticmethod
    def x_minus_tfrac_over_z():
        """x - (t-1)/(tz), the argument of the composition operators."""
        return Alphabet(QT_ONE, ((1, 0, -1, -1), (-1, 0, 0, -1)))

    def power_sum_image(self, k: int):
        """p_k[A] as a list of (z-exponent, SymFun in p basis)."""
        out = []
        if self.base_scale:
            if self.base_scale.is_constant():
                c = self.base_scale
            else:
                from .coeffs import QT_Q, QT_T

                c = self.base_scale.specialize({"q": QT_Q**k, "t": QT_T**k})
            out.append((0, SymFun("p", {(k,): c})))
        for sign, eq, et, ez in self.extras:
            mono = QTScalar.qt_monomial(sign, eq * k, et * k)
            out.append((ez * k, SymFun("p", {(): mono})))
        return out


class ZLaurent:
    """A finite Laurent series in z with SymFun coefficients."""

    def __init__(self, coeffs, bound=None):
        self.coeffs = {k: v for k, v in coeffs.items() if v}
        self.bound = bound

    def coeff(self, k) -> SymFun:
        if k in self.coeffs:
            return self.coeffs[k]
        if self.bound is not None and abs(k) > self.bound:
            raise TruncationError(f"z^{k} beyond truncation bound {self.bound}")
        return SymFun.zero("p")

    def exponents(self):
        return sorted(self.coeffs)


def plethys(f: SymFun, alphabet: Alphabet, z_truncation=None) -> ZLaurent:
    """f[A] as a Laurent series in z (exact and finite for these alphabets).

    If z_truncation is given, exponents with |e| > z_truncation are dropped
    and later extraction beyond the bound raises TruncationError.
    """
    p = f.convert("p")
    total = {}
    for mu, c in p.terms.items():
        series = {0: SymFun("p", {(): QT_ONE})}
        for part in mu:
            image = alphabet.power_sum_image(part)
            nxt = {}
            for z1, g1 in series.items():
                for z2, g2 in image:
                    z = z1 + z2
                    if z_truncation is not None and abs(z) > z_truncation:
                        continue
                    prod = mul(g1, g2)
                    nxt[z] = nxt[z] + prod if z in nxt else prod
            series = nxt
        for z, g in series.items():
            g = g.scale(c)
            total[z] = total[z] + g if z in total else g
    return ZLaurent(total, bound=z_truncation)


def plethys_whole(f: SymFun, alphabet: Alphabet) -> SymFun:
    """f[A] for an alphabet with no z content (single z^0 coefficient)."""
    series = plethys(f, alphabet)
    assert series.exponents() in ([], [0]), "alphabet has z content"
    return series.coeff(0)


# ---------------------------------------------------------------------------
# LaTeX display, paper style
# ---------------------------------------------------------------------------


def to_latex(f: SymFun) -> str:
    if not f.terms:
        return "0"
    order = sorted(f.terms, key=lambda mu: (sum(mu), mu), reverse=True)
    bits = []
    for mu in order:
        idx = "".join(map(str, mu)) if max(mu, default=0) < 10 else ",".join(map(str, mu))
        base = f"{f.basis}_{{{idx}}}" if mu else ""
        c = f.terms[mu]
        if c == QT_ONE and mu:
            bits.append(base)
        else:
            coeff = repr(c)
            if "+" in coeff or "-" in coeff[1:]:
                coeff = f"\\left({coeff}\\right)"
            bits.append(f"{coeff}\\,{base}" if base else coeff)
    out = " + ".join(bits)
    return out.replace("+ -", "- ")
