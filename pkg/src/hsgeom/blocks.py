"""2x2 block matrices over the base algebra.

Houses the indefinite forms of the half-space (H) and disk (D) models,
membership in their unitary groups, the Borel and shear constructors, the
vertical/horizontal Lie-algebra split and the exponential chart, plus the
Cayley conjugation intertwining the two groups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    GeometryError,
    NotDiagonalUnitary,
    NotHermitian,
    NotInGroup,
    NotInLieAlgebra,
    NotSymmetricPair,
    Singular,
)
from .linalg import (
    Tolerance,
    adjoint,
    as_matrix,
    expm,
    expm_skew,
    is_invertible,
    polar,
    resolve_tol,
    spec_norm,
)

TAGS = ("H", "D")


def check_tag(tag: str) -> str:
    if tag not in TAGS:
        raise ValueError(f"model tag must be 'H' or 'D', got {tag!r}")
    return tag


def as_block2(m) -> np.ndarray:
    """Coerce to a square complex matrix of even dimension 2n."""
    a = as_matrix(m)
    if a.shape[0] % 2:
        raise DimensionMismatch(f"block matrix needs even dimension, got {a.shape[0]}")
    return a


def block_dim(m) -> int:
    """Block dimension n of a 2n x 2n matrix."""
    return as_block2(m).shape[0] // 2


def blocks_of(m):
    """The four n x n blocks (a11, a12, a21, a22)."""
    a = as_block2(m)
    n = a.shape[0] // 2
    return a[:n, :n], a[:n, n:], a[n:, :n], a[n:, n:]


def from_blocks(a11, a12, a21, a22) -> np.ndarray:
    return np.block([[np.asarray(a11, dtype=complex), np.asarray(a12, dtype=complex)],
                     [np.asarray(a21, dtype=complex), np.asarray(a22, dtype=complex)]])


def form_reflection(tag: str, n: int) -> np.ndarray:
    """Self-adjoint reflection inducing the model form.

    H: [[0, -i], [i, 0]] blocks;  D: diag(1, -1) blocks.
    """
    check_tag(tag)
    one = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    if tag == "H":
        return from_blocks(zero, -1j * one, 1j * one, zero)
    return from_blocks(one, zero, zero, -one)


def symplectic_unit(n: int) -> np.ndarray:
    """The block matrix [[0, 1], [-1, 0]]."""
    one = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    return from_blocks(zero, one, -one, zero)


def cayley_unitary(n: int) -> np.ndarray:
    """Unitary (1/sqrt 2) [[1, 1], [i, -i]] conjugating the D form to the H form."""
    one = np.eye(n, dtype=complex)
    return from_blocks(one, one, 1j * one, -1j * one) / np.sqrt(2.0)


def form_product(tag: str, x, y) -> np.ndarray:
    """Algebra-valued product of two pairs under the model form.

    H: -i (x1* y2 - x2* y1);  D: x1* y1 - x2* y2.
    """
    check_tag(tag)
    x1, x2 = as_matrix(x[0]), as_matrix(x[1])
    y1, y2 = as_matrix(y[0]), as_matrix(y[1])
    if not (x1.shape == x2.shape == y1.shape == y2.shape):
        raise DimensionMismatch("pair components must share one dimension")
    if tag == "H":
        return -1j * (adjoint(x1) @ y2 - adjoint(x2) @ y1)
    return adjoint(x1) @ y1 - adjoint(x2) @ y2


def group_residual(tag: str, g, normalized: bool = False) -> float:
    """Defect of form preservation: || rho g* rho g - 1 ||.

    With normalized=True the residual is divided by max(1, ||g||^2), the
    natural scale of the quadratic membership identity.
    """
    m = as_block2(g)
    rho = form_reflection(tag, m.shape[0] // 2)
    r = spec_norm(rho @ adjoint(m) @ rho @ m - np.eye(m.shape[0]))
    if normalized:
        r /= max(1.0, spec_norm(m) ** 2)
    return r


def in_group(tag: str, g, tol: Tolerance | None = None) -> bool:
    """Whether g is an invertible block matrix preserving the model form."""
    t = resolve_tol(tol)
    try:
        m = as_block2(g)
    except GeometryError:
        return False
    if not is_invertible(m, tol):
        return False
    return group_residual(tag, m) <= t.eps_struct * max(1.0, spec_norm(m) ** 2)


def borel_element(b, x, tol: Tolerance | None = None) -> np.ndarray:
    """Lower-triangular group element [[b, 0], [x, (b*)^-1]].

    Requires b invertible and b* x Hermitian; these two conditions
    characterize the lower-triangular elements of the H-form group.
    """
    t = resolve_tol(tol)
    bm, xm = as_matrix(b), as_matrix(x)
    if bm.shape != xm.shape:
        raise DimensionMismatch("b and x must share one dimension")
    if not is_invertible(bm, tol):
        raise Singular("b must be invertible")
    s = adjoint(bm) @ xm
    if spec_norm(s - adjoint(s)) > t.eps_struct * max(1.0, spec_norm(s)):
        raise NotSymmetricPair("b* x must be Hermitian")
    zero = np.zeros_like(bm)
    return from_blocks(bm, zero, xm, np.linalg.inv(adjoint(bm)))


def shear(tau, tol: Tolerance | None = None) -> np.ndarray:
    """Unit upper-triangular group element [[1, tau], [0, 1]], tau Hermitian."""
    t = resolve_tol(tol)
    tm = as_matrix(tau)
    if spec_norm(tm - adjoint(tm)) > t.eps_struct * max(1.0, spec_norm(tm)):
        raise NotHermitian("tau must be Hermitian")
    one = np.eye(tm.shape[0], dtype=complex)
    zero = np.zeros_like(tm)
    return from_blocks(one, tm, zero, one)


def embed_invertible(g, tol: Tolerance | None = None) -> np.ndarray:
    """Multiplicative embedding g -> diag(g, (g*)^-1) into the H-form group."""
    gm = as_matrix(g)
    if not is_invertible(gm, tol):
        raise Singular("g must be invertible")
    zero = np.zeros_like(gm)
    return from_blocks(gm, zero, zero, np.linalg.inv(adjoint(gm)))


@dataclass(frozen=True)
class LieElement:
    """Lie-algebra element of the H-form group with its canonical split.

    vertical is anti-Hermitian and commutes with the symplectic unit;
    horizontal is Hermitian and anti-commutes with it; their sum is value.
    """

    value: np.ndarray
    vertical: np.ndarray
    horizontal: np.ndarray


def lie_residual(x) -> float:
    """Norm of rho x* rho + x, the defect of Lie-algebra membership."""
    m = as_block2(x)
    rho = form_reflection("H", m.shape[0] // 2)
    return spec_norm(rho @ adjoint(m) @ rho + m)


def lie_split(x, tol: Tolerance | None = None) -> LieElement:
    """Split a Lie-algebra element into vertical + horizontal parts.

    Averaging against conjugation by the symplectic unit J is basis free:
    vertical = (x + J x J^-1)/2, horizontal = (x - J x J^-1)/2.
    """
    t = resolve_tol(tol)
    m = as_block2(x)
    if lie_residual(m) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotInLieAlgebra("rho x* rho must equal -x")
    j = symplectic_unit(m.shape[0] // 2)
    conj = j @ m @ (-j)  # J^-1 = -J
    return LieElement(m, 0.5 * (m + conj), 0.5 * (m - conj))


def horizontal_element(alpha, beta, tol: Tolerance | None = None) -> np.ndarray:
    """Horizontal Lie-algebra element [[alpha, beta], [beta, -alpha]].

    Both entries must be Hermitian.
    """
    t = resolve_tol(tol)
    am, bm = as_matrix(alpha), as_matrix(beta)
    if am.shape != bm.shape:
        raise DimensionMismatch("alpha and beta must share one dimension")
    for name, m in (("alpha", am), ("beta", bm)):
        if spec_norm(m - adjoint(m)) > t.eps_struct * max(1.0, spec_norm(m)):
            raise NotHermitian(f"{name} must be Hermitian")
    return from_blocks(am, bm, bm, -am)


def exp_chart(elem, tol: Tolerance | None = None) -> np.ndarray:
    """Exponential chart exp(vertical) exp(horizontal) into the H-form group.

    The first factor is a unitary commuting with the symplectic unit, the
    second a positive definite element of the group.
    """
    e = elem if isinstance(elem, LieElement) else lie_split(elem, tol)
    return expm_skew(e.vertical, tol) @ expm(e.horizontal, tol)


def group_polar(tag: str, g, tol: Tolerance | None = None):
    """Polar decomposition inside the form group; both factors stay members."""
    if not in_group(tag, g, tol):
        raise NotInGroup(f"matrix is not in the unitary group U(theta_{tag})")
    return polar(as_block2(g), tol)


def unitary_split(u, tol: Tolerance | None = None):
    """Diagonal blocks (u1, u2) of a unitary element of the D-form group.

    Unitary members of the D group commute with the form reflection, hence
    are block diagonal with unitary blocks.
    """
    t = resolve_tol(tol)
    m = as_block2(u)
    if spec_norm(adjoint(m) @ m - np.eye(m.shape[0])) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotInGroup("matrix is not unitary")
    if not in_group("D", m, tol):
        raise NotInGroup("matrix is not in the unitary group U(theta_D)")
    u11, u12, u21, u22 = blocks_of(m)
    off = max(spec_norm(u12), spec_norm(u21))
    if off > t.eps_struct:
        raise NotDiagonalUnitary(f"off-diagonal blocks have norm {off:.3e}")
    return u11, u22


def cayley_conjugate(g) -> np.ndarray:
    """Conjugation U* g U carrying the H-form group onto the D-form group."""
    m = as_block2(g)
    u = cayley_unitary(m.shape[0] // 2)
    return adjoint(u) @ m @ u


def cayley_conjugate_inv(g) -> np.ndarray:
    """Inverse conjugation U g U*, carrying the D-form group onto the H-form group."""
    m = as_block2(g)
    u = cayley_unitary(m.shape[0] // 2)
    return u @ m @ adjoint(u)
