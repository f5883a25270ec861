"""The half-space and disk models and the Moebius action of their groups.

A half-space point is a complex matrix whose Hermitian imaginary part is
positive definite; a disk point is a strict contraction.  Sphere pairs
(x1, x2) with unit self-pairing coordinatize both models through the
fibration (x1, x2) -> x2 x1^-1.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    NotInDisk,
    NotInGroup,
    NotInHalfspace,
    NotOnSphere,
    NumericalBreakdown,
)
from .linalg import (
    Tolerance,
    adjoint,
    as_matrix,
    im_part,
    inv_sqrtm,
    is_invertible,
    re_part,
    resolve_tol,
    spec_norm,
)
from .blocks import (
    as_block2,
    blocks_of,
    borel_element,
    check_tag,
    form_product,
    in_group,
)

_SQRT2 = np.sqrt(2.0)


def base_point(n: int) -> np.ndarray:
    """The distinguished half-space point i*1."""
    return 1j * np.eye(n, dtype=complex)


def check_half_space(h, tol: Tolerance | None = None) -> np.ndarray:
    """Validate membership in the half-space: Im(h) positive definite."""
    t = resolve_tol(tol)
    m = as_matrix(h)
    w = np.linalg.eigvalsh(im_part(m))
    if float(w[0]) <= t.eps_pos:
        raise NotInHalfspace(
            f"imaginary part has minimum eigenvalue {w[0]:.3e}, "
            f"not above the floor {t.eps_pos:.1e}"
        )
    return m


def check_disk(z, tol: Tolerance | None = None) -> np.ndarray:
    """Validate membership in the disk: spectral norm strictly below one."""
    t = resolve_tol(tol)
    m = as_matrix(z)
    r = spec_norm(m)
    if r >= 1.0 - t.eps_pos:
        raise NotInDisk(f"spectral norm {r:.12f} is not below 1 - {t.eps_pos:.1e}")
    return m


def check_model_point(tag: str, p, tol: Tolerance | None = None) -> np.ndarray:
    check_tag(tag)
    return check_half_space(p, tol) if tag == "H" else check_disk(p, tol)


class KPair(NamedTuple):
    """Sphere pair (x1, x2) with model tag; x1 invertible, self-pairing 1."""

    x1: np.ndarray
    x2: np.ndarray
    tag: str


def sphere_residual(k: KPair) -> float:
    """Distance of the self-pairing from the identity."""
    n = k.x1.shape[0]
    return spec_norm(form_product(k.tag, k, k) - np.eye(n))


def make_kpair(x1, x2, tag: str, tol: Tolerance | None = None) -> KPair:
    """Validated sphere pair."""
    t = resolve_tol(tol)
    check_tag(tag)
    k = KPair(as_matrix(x1), as_matrix(x2), tag)
    if not is_invertible(k.x1, tol):
        raise NotOnSphere("first coordinate must be invertible")
    scale = max(1.0, spec_norm(k.x1) ** 2, spec_norm(k.x2) ** 2)
    if sphere_residual(k) > t.eps_struct * scale:
        raise NotOnSphere(
            f"self-pairing deviates from 1 by {sphere_residual(k):.3e}"
        )
    return k


def fibration(k: KPair, tol: Tolerance | None = None) -> np.ndarray:
    """Project a sphere pair to its model point x2 x1^-1."""
    k = make_kpair(k.x1, k.x2, k.tag, tol)
    p = k.x2 @ np.linalg.inv(k.x1)
    return check_model_point(k.tag, p, tol)


def half_space_section(h, tol: Tolerance | None = None) -> KPair:
    """Canonical sphere lift of a half-space point.

    (1, h) Im(h)^(-1/2) / sqrt(2); the fibration returns h.
    """
    m = check_half_space(h, tol)
    s = inv_sqrtm(im_part(m), tol) / _SQRT2
    return make_kpair(s, m @ s, "H", tol)


def disk_section(z, tol: Tolerance | None = None) -> KPair:
    """Canonical sphere lift (1, z)(1 - z*z)^(-1/2) of a disk point.

    This is the unique lift with positive definite first coordinate.
    """
    m = check_disk(z, tol)
    n = m.shape[0]
    s = inv_sqrtm(np.eye(n) - adjoint(m) @ m, tol)
    return make_kpair(s, m @ s, "D", tol)


def sphere_cayley(k: KPair, tol: Tolerance | None = None) -> KPair:
    """Carry a D-sphere pair onto the H sphere: ((x1+x2)/sqrt2, i(x1-x2)/sqrt2)."""
    if k.tag != "D":
        raise NotOnSphere("expected a D-sphere pair")
    k = make_kpair(k.x1, k.x2, "D", tol)
    return make_kpair((k.x1 + k.x2) / _SQRT2, 1j * (k.x1 - k.x2) / _SQRT2, "H", tol)


def sphere_cayley_inv(k: KPair, tol: Tolerance | None = None) -> KPair:
    """Inverse transport, H sphere to D sphere."""
    if k.tag != "H":
        raise NotOnSphere("expected an H-sphere pair")
    k = make_kpair(k.x1, k.x2, "H", tol)
    return make_kpair((k.x1 - 1j * k.x2) / _SQRT2, (k.x1 + 1j * k.x2) / _SQRT2, "D", tol)


def act_on_pair(g, k: KPair, tol: Tolerance | None = None) -> KPair:
    """Left multiplication of a sphere pair by a group element."""
    if not in_group(k.tag, g, tol):
        raise NotInGroup(f"matrix is not in the unitary group U(theta_{k.tag})")
    a11, a12, a21, a22 = blocks_of(g)
    return make_kpair(a11 @ k.x1 + a12 @ k.x2, a21 @ k.x1 + a22 @ k.x2, k.tag, tol)


def moebius(tag: str, g, p, tol: Tolerance | None = None) -> np.ndarray:
    """Moebius action (a21 + a22 p)(a11 + a12 p)^-1 of a group element.

    Equivalent to lifting p to the sphere, multiplying by g and projecting
    back; the direct fraction avoids the matrix square roots of the lift.
    """
    check_tag(tag)
    if not in_group(tag, g, tol):
        raise NotInGroup(f"matrix is not in the unitary group U(theta_{tag})")
    pm = check_model_point(tag, p, tol)
    a11, a12, a21, a22 = blocks_of(g)
    den = a11 + a12 @ pm
    if not is_invertible(den, tol):
        raise NumericalBreakdown("a11 + a12 p lost invertibility")
    out = (a21 + a22 @ pm) @ np.linalg.inv(den)
    return check_model_point(tag, out, tol)


def cayley_to_disk(h, tol: Tolerance | None = None) -> np.ndarray:
    """Cayley transform (1 + ih)(1 - ih)^-1 from the half-space to the disk."""
    m = check_half_space(h, tol)
    one = np.eye(m.shape[0], dtype=complex)
    z = (one + 1j * m) @ np.linalg.inv(one - 1j * m)
    return check_disk(z, tol)


def cayley_to_half_space(z, tol: Tolerance | None = None) -> np.ndarray:
    """Inverse Cayley transform i(1 - z)(1 + z)^-1."""
    m = check_disk(z, tol)
    one = np.eye(m.shape[0], dtype=complex)
    h = 1j * (one - m) @ np.linalg.inv(one + m)
    return check_half_space(h, tol)


def transitivity_witness(h, tol: Tolerance | None = None) -> np.ndarray:
    """Borel element carrying the base point i*1 to h = x + iy.

    [[y^(-1/2), 0], [x y^(-1/2), y^(1/2)]]; its inverse carries h back.
    """
    m = check_half_space(h, tol)
    s = inv_sqrtm(im_part(m), tol)
    return borel_element(s, re_part(m) @ s, tol)


def borel_from_sphere(k: KPair, tol: Tolerance | None = None) -> np.ndarray:
    """The unique Borel element carrying the base sphere pair (1, i)/sqrt2 to k.

    Witnesses that the Borel subgroup acts freely and transitively on the
    H sphere; membership of the result encodes the sphere constraint.
    """
    if k.tag != "H":
        raise NotOnSphere("expected an H-sphere pair")
    k = make_kpair(k.x1, k.x2, "H", tol)
    b = _SQRT2 * k.x1
    x = _SQRT2 * k.x2 - (1j / _SQRT2) * np.linalg.inv(adjoint(k.x1))
    return borel_element(b, x, tol)
