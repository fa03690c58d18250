"""Modified Macdonald polynomials and the nabla operator.

The H~_mu of degree n are computed as the joint eigenbasis of D_0 acting
on degree-n symmetric functions: the eigenvalue attached to mu is
1 - M B_mu(q,t) with B_mu the diagram generating function, each
eigenspace is checked to be one-dimensional, and each eigenvector is
normalized so the coefficient of s_(n) equals 1.  nabla then scales
H~_mu by t^n(mu) q^n(mu').
"""

from __future__ import annotations

from functools import lru_cache

from . import linalg, shapes, symfun
from .coeffs import QT_M, QT_ONE, QT_ZERO, QTScalar
from .ehallops import apply_D
from .symfun import SymFun


def b_mu(mu) -> QTScalar:
    """B_mu(q,t) = sum over cells (i,j) of q^(j-1) t^(i-1)."""
    total = QT_ZERO
    for i, part in enumerate(mu, start=1):
        for j in range(1, part + 1):
            total = total + QTScalar.qt_monomial(1, j - 1, i - 1)
    return total


def d0_eigenvalue(mu) -> QTScalar:
    """Eigenvalue of D_0 on H~_mu: 1 - M B_mu."""
    return QT_ONE - QT_M * b_mu(mu)


@lru_cache(maxsize=None)
def _d0_matrix(n: int):
    """Matrix of D_0 on the Schur basis at degree n (columns act on s_lam)."""
    parts = shapes.partitions_of(n)
    cols = []
    for lam in parts:
        image = apply_D(0, symfun.s_(lam)).convert("s")
        cols.append([image.terms.get(nu, QT_ZERO) for nu in parts])
    return [[cols[j][i] for j in range(len(parts))] for i in range(len(parts))]


@lru_cache(maxsize=None)
def eigenbasis(n: int):
    """All H~_mu with |mu| = n, as a dict mu -> SymFun in the s basis."""
    parts = shapes.partitions_of(n)
    if n == 0:
        return {(): SymFun.one("s")}
    mat = _d0_matrix(n)
    k = len(parts)
    seen = {}
    out = {}
    for mu in parts:
        ev = d0_eigenvalue(mu)
        key = ev.key()
        if key in seen:
            raise AssertionError(f"repeated D_0 eigenvalue for {mu} and {seen[key]}")
        seen[key] = mu
        shifted = [[mat[i][j] - ev if i == j else mat[i][j] for j in range(k)] for i in range(k)]
        kernel = linalg.nullspace(shifted)
        if len(kernel) != 1:
            raise AssertionError(f"eigenspace for {mu} has dimension {len(kernel)}")
        vec = kernel[0]
        top = vec[parts.index((n,))]
        if not top:
            raise AssertionError(f"H~_{mu} has no s_({n}) component")
        inv = top.inverse()
        out[mu] = SymFun("s", {parts[i]: vec[i] * inv for i in range(k) if vec[i]})
    return out


@lru_cache(maxsize=None)
def _eigen_matrix_inverse(n: int):
    """Inverse of the matrix whose columns are the H~_mu in Schur coordinates."""
    parts = shapes.partitions_of(n)
    basis = eigenbasis(n)
    mat = [[basis[mu].terms.get(lam, QT_ZERO) for mu in parts] for lam in parts]
    return linalg.inverse(mat)


def expand_in_eigenbasis(f: SymFun) -> dict:
    """Coordinates of f in the H~_mu basis: dict mu -> QTScalar."""
    out = {}
    for n, comp in f.convert("s").degree_components().items():
        parts = shapes.partitions_of(n)
        inv = _eigen_matrix_inverse(n)
        vec = [comp.terms.get(lam, QT_ZERO) for lam in parts]
        for i, mu in enumerate(parts):
            c = QT_ZERO
            for j in range(len(parts)):
                if vec[j]:
                    c = c + inv[i][j] * vec[j]
            if c:
                out[mu] = c
    return out


def nabla_eigenvalue(mu) -> QTScalar:
    """nabla H~_mu = t^n(mu) q^n(mu') H~_mu."""
    return QTScalar.qt_monomial(1, shapes.n_stat(shapes.conjugate(mu)), shapes.n_stat(mu))


def nabla(f: SymFun, power: int = 1) -> SymFun:
    """Apply nabla^power (power may be negative) degreewise."""
    out = SymFun.zero("s")
    for mu, c in expand_in_eigenbasis(f).items():
        ev = nabla_eigenvalue(mu) ** power
        out = out + eigenbasis(sum(mu))[mu].scale(c * ev)
    return out
