"""Finsler geometry of the positive cone and of the two models.

The positive invertible block matrices carry the invariant metric
||X||_a = ||a^(-1/2) X a^(-1/2)|| whose geodesics, exponential map and
distance have closed forms.  Pushing the models through the reflection
correspondence and the positive embedding makes the half-space and disk
non-positively curved metric length spaces; this module also provides the
covariant derivatives (ambient and half-space), the connection 1-form at
the base point, and two closed-form geodesic families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidParams,
    NotHermitian,
    NotHorizontal,
    NotPositiveDefinite,
    ReflectionDrift,
    Singular,
)
from .linalg import (
    Tolerance,
    adjoint,
    as_matrix,
    cosm,
    coshm,
    expm,
    im_part,
    inv_sqrtm,
    is_invertible,
    logm,
    powm,
    re_part,
    resolve_tol,
    sechm,
    sinm,
    sinhm,
    spec_norm,
    sqrtm,
)
from .blocks import (
    LieElement,
    blocks_of,
    check_tag,
    exp_chart,
    form_reflection,
    from_blocks,
    horizontal_element,
    lie_split,
)
from .models import base_point, check_half_space, check_model_point, moebius
from .reflections import (
    Reflection,
    point_to_reflection,
    positive_embedding,
    reflection_residuals,
    reflection_to_point,
)

#: default drift budget for mid-curve reflection invariants
DRIFT_TOL = 1e-7


def check_positive(a, tol: Tolerance | None = None) -> np.ndarray:
    """Validate a positive definite Hermitian matrix."""
    t = resolve_tol(tol)
    m = as_matrix(a)
    if spec_norm(m - adjoint(m)) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotPositiveDefinite("matrix is not Hermitian")
    w = np.linalg.eigvalsh(re_part(m))
    if float(w[0]) <= t.eps_pos:
        raise NotPositiveDefinite(
            f"minimum eigenvalue {w[0]:.3e} is not above the floor {t.eps_pos:.1e}"
        )
    return re_part(m)


def _check_hermitian(x, tol: Tolerance | None = None, name: str = "matrix") -> np.ndarray:
    t = resolve_tol(tol)
    m = as_matrix(x)
    if spec_norm(m - adjoint(m)) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotHermitian(f"{name} must be Hermitian")
    return m


def finsler_norm(a, x, tol: Tolerance | None = None) -> float:
    """Invariant norm ||a^(-1/2) x a^(-1/2)|| of a tangent x at the point a."""
    am = check_positive(a, tol)
    xm = _check_hermitian(x, tol, "tangent")
    s = inv_sqrtm(am, tol)
    return spec_norm(s @ xm @ s)


def cone_geodesic(a, b, t: float, tol: Tolerance | None = None) -> np.ndarray:
    """Point at parameter t of the unique geodesic joining a and b.

    a^(1/2) (a^(-1/2) b a^(-1/2))^t a^(1/2); t = 1/2 is the geometric mean.
    """
    am = check_positive(a, tol)
    bm = check_positive(b, tol)
    r = sqrtm(am, tol)
    s = inv_sqrtm(am, tol)
    return re_part(r @ powm(s @ bm @ s, float(t), tol) @ r)


def cone_exp(a, x, tol: Tolerance | None = None) -> np.ndarray:
    """Exponential map at a: a^(1/2) exp(a^(-1/2) x a^(-1/2)) a^(1/2).

    A Hermitian rearrangement of the one-parameter form
    e^(x a^-1 / 2) a e^(a^-1 x / 2); everywhere a diffeomorphism.
    """
    am = check_positive(a, tol)
    xm = _check_hermitian(x, tol, "tangent")
    r = sqrtm(am, tol)
    s = inv_sqrtm(am, tol)
    return re_part(r @ expm(s @ xm @ s, tol) @ r)


def cone_distance(a, b, tol: Tolerance | None = None) -> float:
    """Geodesic distance || log(a^(-1/2) b a^(-1/2)) ||."""
    am = check_positive(a, tol)
    bm = check_positive(b, tol)
    s = inv_sqrtm(am, tol)
    return spec_norm(logm(re_part(s @ bm @ s), tol))


def cone_covariant(a, adot, y, ydot, tol: Tolerance | None = None) -> np.ndarray:
    """Covariant derivative ydot - (adot a^-1 y + y a^-1 adot)/2.

    a is the current point of the curve, adot its velocity, y the value of
    the field there and ydot its ordinary derivative.
    """
    am = check_positive(a, tol)
    ad = _check_hermitian(adot, tol, "adot")
    ym = _check_hermitian(y, tol, "y")
    yd = _check_hermitian(ydot, tol, "ydot")
    inv_a = np.linalg.inv(am)
    return yd - 0.5 * (ad @ inv_a @ ym + ym @ inv_a @ ad)


def model_distance(tag: str, p, q, tol: Tolerance | None = None) -> float:
    """Distance in the half-space or disk, through the positive embedding."""
    check_tag(tag)
    ea = positive_embedding(point_to_reflection(tag, p, tol), tol)
    eb = positive_embedding(point_to_reflection(tag, q, tol), tol)
    return cone_distance(ea, eb, tol)


def disk_distance_from_origin(z, tol: Tolerance | None = None) -> float:
    """Closed form log((1 + ||z||) / (1 - ||z||)) for the distance to 0."""
    from .models import check_disk

    m = check_disk(z, tol)
    r = spec_norm(m)
    return float(np.log((1.0 + r) / (1.0 - r)))


def model_geodesic_sample(tag: str, p, q, t: float, tol: Tolerance | None = None):
    """(point, drift) at parameter t of the model geodesic joining p and q.

    The cone geodesic between the embedded endpoints stays in the embedded
    reflection space; drift is the idempotency defect of the recovered
    reflection and measures numerical degradation along the curve.
    """
    check_tag(tag)
    ea = positive_embedding(point_to_reflection(tag, p, tol), tol)
    eb = positive_embedding(point_to_reflection(tag, q, tol), tol)
    g = cone_geodesic(ea, eb, t, tol)
    rho = form_reflection(tag, g.shape[0] // 2)
    eps = rho @ g
    idem, herm, mineig = reflection_residuals(tag, eps)
    drift = max(idem, herm, 0.0 if mineig > 0.0 else -mineig)
    return reflection_to_point(Reflection(tag, eps), tol), drift


def model_geodesic(tag: str, p, q, t: float, tol: Tolerance | None = None,
                   drift_tol: float = DRIFT_TOL) -> np.ndarray:
    """Point at parameter t of the geodesic joining p and q in a model."""
    point, drift = model_geodesic_sample(tag, p, q, t, tol)
    if drift > drift_tol:
        raise ReflectionDrift(
            f"reflection invariants degraded to {drift:.3e} at t={t}"
        )
    return point


def half_space_covariant(h0, hdot, zeta, zetadot, tol: Tolerance | None = None) -> np.ndarray:
    """Covariant derivative of a field along a curve in the half-space.

    With h0 = x0 + i y0 the current point, hdot = x' + i y' the velocity,
    zeta = chi + i ups the field value and zetadot its derivative:

        D zeta / dt = zetadot - Re(x' y0^-1 ups + y' y0^-1 chi)
                              + i Re(x' y0^-1 chi - y' y0^-1 ups)

    where Re(u) = (u + u*)/2.  Both output parts are Hermitian.
    """
    h = check_half_space(h0, tol)
    xp = _check_hermitian(re_part(as_matrix(hdot)), tol, "x'")
    yp = _check_hermitian(im_part(as_matrix(hdot)), tol, "y'")
    chi = _check_hermitian(re_part(as_matrix(zeta)), tol, "chi")
    ups = _check_hermitian(im_part(as_matrix(zeta)), tol, "ups")
    zdot = as_matrix(zetadot)
    y0inv = np.linalg.inv(im_part(h))
    real_corr = re_part(xp @ y0inv @ ups + yp @ y0inv @ chi)
    imag_corr = re_part(xp @ y0inv @ chi - yp @ y0inv @ ups)
    return zdot - real_corr + 1j * imag_corr


def connection_form(zeta, tol: Tolerance | None = None) -> np.ndarray:
    """1-form of the reductive connection at the base point i*1.

    For zeta = chi + i ups it returns (1/2) [[-ups, chi], [chi, ups]], a
    horizontal Lie-algebra element.
    """
    z = as_matrix(zeta)
    chi = _check_hermitian(re_part(z), tol, "chi")
    ups = _check_hermitian(im_part(z), tol, "ups")
    return 0.5 * from_blocks(-ups, chi, chi, ups)


def tangent_from_horizontal(x, tol: Tolerance | None = None) -> np.ndarray:
    """Differential of the orbit map at the base point on horizontal elements.

    2 x12 - 2i x11; inverse of the connection 1-form.
    """
    x11, x12, _, _ = blocks_of(x)
    return 2.0 * x12 - 2j * x11


def horizontal_part_norm(x) -> float:
    return spec_norm(x)


def geodesic_from_base(x, t: float, tol: Tolerance | None = None) -> np.ndarray:
    """Geodesic of the half-space through i*1: the orbit exp(t x) . (i*1).

    x must be a horizontal Lie-algebra element (vertical part negligible).
    """
    tt = resolve_tol(tol)
    e = x if isinstance(x, LieElement) else lie_split(x, tol)
    if spec_norm(e.vertical) > tt.eps_struct * max(1.0, spec_norm(e.value)):
        raise NotHorizontal(
            f"vertical part has norm {spec_norm(e.vertical):.3e}"
        )
    n = e.value.shape[0] // 2
    g = exp_chart(LieElement(float(t) * e.value, float(t) * e.vertical,
                             float(t) * e.horizontal), tol)
    return moebius("H", g, base_point(n), tol)


@dataclass(frozen=True)
class GeodesicFamily:
    """Parameters of a closed-form geodesic family through the base point.

    The generator is the horizontal element [[alpha, beta], [beta, -alpha]].
    For the commuting variant alpha = cos(angle) radius, beta =
    sin(angle) radius with commuting Hermitian factors; for the
    anticommuting variant alpha beta = -beta alpha.
    """

    variant: str
    alpha: np.ndarray
    beta: np.ndarray
    radius: np.ndarray | None = None
    angle: np.ndarray | None = None


def commuting_family(radius, angle, tol: Tolerance | None = None) -> GeodesicFamily:
    """Family with commuting entries, built from a shared eigenbasis.

    radius must be Hermitian positive semidefinite and commute with the
    Hermitian angle; then alpha = cos(angle) radius and beta =
    sin(angle) radius commute automatically.
    """
    t = resolve_tol(tol)
    g = _check_hermitian(radius, tol, "radius")
    chi = _check_hermitian(angle, tol, "angle")
    if float(np.linalg.eigvalsh(g)[0]) < -t.eps_struct:
        raise InvalidParams("radius must be positive semidefinite")
    scale = max(1.0, spec_norm(g) * spec_norm(chi))
    if spec_norm(g @ chi - chi @ g) > t.eps_struct * scale:
        raise InvalidParams("radius and angle must commute")
    alpha = re_part(cosm(chi, tol) @ g)
    beta = re_part(sinm(chi, tol) @ g)
    if spec_norm(alpha @ beta - beta @ alpha) > t.eps_struct * max(1.0, scale ** 2):
        raise InvalidParams("derived entries fail to commute")
    return GeodesicFamily("commuting", alpha, beta, g, chi)


def anticommuting_family(alpha, beta, tol: Tolerance | None = None) -> GeodesicFamily:
    """Family whose Hermitian entries anticommute: alpha beta = -beta alpha."""
    t = resolve_tol(tol)
    a = _check_hermitian(alpha, tol, "alpha")
    b = _check_hermitian(beta, tol, "beta")
    scale = max(1.0, spec_norm(a) * spec_norm(b))
    if spec_norm(a @ b + b @ a) > t.eps_struct * scale:
        raise InvalidParams("entries must anticommute")
    return GeodesicFamily("anticommuting", a, b)


def family_generator(params: GeodesicFamily, tol: Tolerance | None = None) -> np.ndarray:
    """Horizontal element [[alpha, beta], [beta, -alpha]] of a family."""
    return horizontal_element(params.alpha, params.beta, tol)


def commuting_geodesic(params: GeodesicFamily, t: float,
                       tol: Tolerance | None = None) -> np.ndarray:
    """Closed form of the orbit geodesic for commuting entries.

    (sin(angle) sinh(2 t radius) + i)(cosh(2 t radius)
    + cos(angle) sinh(2 t radius))^-1.
    """
    if params.variant != "commuting":
        raise InvalidParams("expected commuting-family parameters")
    g2 = 2.0 * float(t) * params.radius
    sh = sinhm(g2, tol)
    den = coshm(g2, tol) + cosm(params.angle, tol) @ sh
    n = params.alpha.shape[0]
    num = sinm(params.angle, tol) @ sh + 1j * np.eye(n)
    return check_half_space(num @ np.linalg.inv(den), tol)


def commuting_circle_center(params: GeodesicFamily,
                            tol: Tolerance | None = None) -> np.ndarray:
    """Hermitian center mu = -cos(angle) sin(angle)^-1 of the orbit circle.

    The commuting geodesic satisfies (Re - mu)^2 + Im^2 = mu^2 + 1; defined
    when sin(angle) is invertible.
    """
    if params.variant != "commuting":
        raise InvalidParams("expected commuting-family parameters")
    s = sinm(params.angle, tol)
    if not is_invertible(s, tol):
        raise Singular("sin(angle) is not invertible")
    return re_part(-cosm(params.angle, tol) @ np.linalg.inv(s))


def anticommuting_geodesic(params: GeodesicFamily, t: float,
                           tol: Tolerance | None = None) -> np.ndarray:
    """Closed form of the orbit geodesic for anticommuting entries.

    sinh(2 t beta) cosh(2 t beta)^-1 + i cosh(2 t beta)^-1 exp(-2 t alpha);
    the real part does not depend on alpha.
    """
    if params.variant != "anticommuting":
        raise InvalidParams("expected anticommuting-family parameters")
    b2 = 2.0 * float(t) * params.beta
    sech = sechm(b2, tol)
    real = re_part(sinhm(b2, tol) @ sech)
    imag = re_part(sech @ expm(-2.0 * float(t) * params.alpha, tol))
    return check_half_space(real + 1j * imag, tol)
