"""Form-decomposing reflections and their correspondence with the models.

A reflection here is a block matrix eps with eps^2 = 1 whose product with
the model form reflection is positive definite; such eps parametrize the
positive/negative orthogonal decompositions of the form.  The disk and
half-space are diffeomorphic to this reflection space, and the map
eps -> rho eps embeds it into the positive cone of the block algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotOnSphere, NotReflection
from .linalg import (
    Tolerance,
    adjoint,
    inv_sqrtm,
    re_part,
    resolve_tol,
    spec_norm,
    sqrtm,
)
from .blocks import (
    as_block2,
    blocks_of,
    cayley_unitary,
    check_tag,
    form_reflection,
    from_blocks,
)
from .models import (
    KPair,
    cayley_to_disk,
    cayley_to_half_space,
    check_disk,
    check_half_space,
    make_kpair,
)

#: strict idempotency budget enforced at construction
IDEMPOTENCY_TOL = 1e-9
#: lenient structural guard used when converting back to model points,
#: so that slightly drifted mid-geodesic reflections still convert
CONVERSION_GUARD = 1e-6


@dataclass(frozen=True)
class Reflection:
    """Form-decomposing reflection with its model tag.

    Build through make_reflection, which enforces both invariants.
    """

    tag: str
    eps: np.ndarray


def reflection_residuals(tag: str, eps):
    """(idempotency defect, Hermiticity defect of rho*eps, min eigenvalue of rho*eps)."""
    m = as_block2(eps)
    rho = form_reflection(tag, m.shape[0] // 2)
    idem = spec_norm(m @ m - np.eye(m.shape[0]))
    pos = rho @ m
    herm = spec_norm(pos - adjoint(pos))
    mineig = float(np.linalg.eigvalsh(re_part(pos))[0])
    return idem, herm, mineig


def make_reflection(eps, tag: str, tol: Tolerance | None = None,
                    idem_tol: float = IDEMPOTENCY_TOL) -> Reflection:
    """Validate both reflection invariants and wrap the matrix."""
    t = resolve_tol(tol)
    check_tag(tag)
    m = as_block2(eps)
    idem, herm, mineig = reflection_residuals(tag, m)
    scale = max(1.0, spec_norm(m) ** 2)
    if idem > idem_tol * scale:
        raise NotReflection(f"eps^2 deviates from 1 by {idem:.3e}")
    if herm > t.eps_struct * scale:
        raise NotReflection(f"rho eps deviates from Hermitian by {herm:.3e}")
    if mineig <= t.eps_pos:
        raise NotReflection(
            f"rho eps has minimum eigenvalue {mineig:.3e}, not positive definite"
        )
    return Reflection(tag, m)


def _guard(e: Reflection) -> Reflection:
    """Reject matrices that are structurally far from a reflection."""
    idem, herm, mineig = reflection_residuals(e.tag, e.eps)
    scale = max(1.0, spec_norm(e.eps) ** 2)
    if idem > CONVERSION_GUARD * scale or herm > CONVERSION_GUARD * scale or mineig <= 0.0:
        raise NotReflection(
            f"reflection invariants out of range (idem {idem:.3e}, "
            f"herm {herm:.3e}, min eig {mineig:.3e})"
        )
    return e


def rank_one_projection(k: KPair, tol: Tolerance | None = None) -> np.ndarray:
    """Idempotent p = x x* rho attached to a D-sphere pair.

    p is symmetric for the D form and fixes the pair itself.
    """
    if k.tag != "D":
        raise NotOnSphere("expected a D-sphere pair")
    k = make_kpair(k.x1, k.x2, "D", tol)
    col = np.vstack([k.x1, k.x2])
    rho = form_reflection("D", k.x1.shape[0])
    return col @ adjoint(col) @ rho


def disk_to_reflection(z, tol: Tolerance | None = None) -> Reflection:
    """Reflection attached to a disk point.

    With s = (1 - z*z)^-1 the matrix is
    [[2s - 1, -2 s z*], [2 z s, -2 z s z* - 1]]; it equals twice the
    projection of the canonical lift minus the identity.
    """
    m = check_disk(z, tol)
    n = m.shape[0]
    one = np.eye(n, dtype=complex)
    s = np.linalg.inv(one - adjoint(m) @ m)
    eps = from_blocks(
        2.0 * s - one,
        -2.0 * s @ adjoint(m),
        2.0 * m @ s,
        -2.0 * m @ s @ adjoint(m) - one,
    )
    return make_reflection(eps, "D", tol)


def reflection_to_disk(e: Reflection, tol: Tolerance | None = None) -> np.ndarray:
    """Inverse correspondence -eps12* (1 + eps11)^-1."""
    if e.tag != "D":
        raise NotReflection("expected a D reflection")
    _guard(e)
    e11, e12, _, _ = blocks_of(e.eps)
    one = np.eye(e11.shape[0], dtype=complex)
    z = -adjoint(e12) @ np.linalg.inv(one + e11)
    return check_disk(z, tol)


def half_space_to_reflection(h, tol: Tolerance | None = None) -> Reflection:
    """Reflection attached to a half-space point, via Cayley transport."""
    m = check_half_space(h, tol)
    inner = disk_to_reflection(cayley_to_disk(m, tol), tol)
    u = cayley_unitary(m.shape[0])
    return make_reflection(u @ inner.eps @ adjoint(u), "H", tol)


def reflection_to_half_space(e: Reflection, tol: Tolerance | None = None) -> np.ndarray:
    """Inverse correspondence on the half-space side."""
    if e.tag != "H":
        raise NotReflection("expected an H reflection")
    _guard(e)
    u = cayley_unitary(e.eps.shape[0] // 2)
    inner = Reflection("D", adjoint(u) @ e.eps @ u)
    return cayley_to_half_space(reflection_to_disk(inner, tol), tol)


def point_to_reflection(tag: str, p, tol: Tolerance | None = None) -> Reflection:
    check_tag(tag)
    if tag == "H":
        return half_space_to_reflection(p, tol)
    return disk_to_reflection(p, tol)


def reflection_to_point(e: Reflection, tol: Tolerance | None = None) -> np.ndarray:
    return reflection_to_half_space(e, tol) if e.tag == "H" else reflection_to_disk(e, tol)


def positive_embedding(e: Reflection, tol: Tolerance | None = None) -> np.ndarray:
    """Embedding eps -> rho eps into the positive cone of the block algebra."""
    _guard(e)
    rho = form_reflection(e.tag, e.eps.shape[0] // 2)
    return re_part(rho @ e.eps)


def reflection_to_sphere(e: Reflection, tol: Tolerance | None = None) -> KPair:
    """Canonical sphere lift of a D reflection.

    x1 = (1 + eps11)^(1/2), x2 = -eps12* (1 + eps11)^(-1/2); the unique
    lift with positive definite first coordinate.
    """
    if e.tag != "D":
        raise NotReflection("expected a D reflection")
    _guard(e)
    e11, e12, _, _ = blocks_of(e.eps)
    one = np.eye(e11.shape[0], dtype=complex)
    base = re_part(one + e11)
    x1 = sqrtm(base, tol)
    x2 = -adjoint(e12) @ inv_sqrtm(base, tol)
    return make_kpair(x1, x2, "D", tol)
