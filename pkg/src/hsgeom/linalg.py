"""Dense complex matrix algebra with Hermitian functional calculus.

Matrices are square numpy arrays of complex128.  Every matrix function is
routed through the Hermitian eigendecomposition; anti-Hermitian exponents
are handled by factoring out i.  Structural predicates (hermiticity,
positivity, invertibility, strict contraction) are tolerance based and
never raise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    GeometryError,
    NotHermitian,
    NotPositiveDefinite,
    Singular,
)


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds.

    eps_struct bounds residuals of structural identities (hermiticity,
    form preservation); eps_pos is the minimum-eigenvalue floor used for
    positivity and invertibility.
    """

    eps_struct: float = 1e-10
    eps_pos: float = 1e-10

    def __post_init__(self):
        if self.eps_struct <= 0.0 or self.eps_pos <= 0.0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


def resolve_tol(tol: Tolerance | None) -> Tolerance:
    return DEFAULT_TOL if tol is None else tol


def as_matrix(a) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise GeometryError("matrix has NaN or Inf entries")
    return m


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def re_part(a: np.ndarray) -> np.ndarray:
    """Hermitian real part (a + a*) / 2."""
    return 0.5 * (a + adjoint(a))


def im_part(a: np.ndarray) -> np.ndarray:
    """Hermitian imaginary part (a - a*) / 2i."""
    return (a - adjoint(a)) / 2j


def spec_norm(a) -> float:
    """Operator 2-norm: the largest singular value."""
    return float(np.linalg.norm(as_matrix(a), 2))


def min_sing(a) -> float:
    """Smallest singular value."""
    return float(np.linalg.svd(as_matrix(a), compute_uv=False)[-1])


def herm_eig(a, tol: Tolerance | None = None):
    """Eigendecomposition of a Hermitian matrix.

    Returns (w, v) with w ascending and a = v diag(w) v* for unitary v.
    """
    m = as_matrix(a)
    t = resolve_tol(tol)
    if spec_norm(m - adjoint(m)) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(m)
    return w, v


_PD_KINDS = ("sqrt_pd", "log_pd", "pow_t")
_SCALAR_FUNCS = {
    "sqrt_pd": np.sqrt,
    "log_pd": np.log,
    "exp": np.exp,
    "cos": np.cos,
    "sin": np.sin,
    "cosh": np.cosh,
    "sinh": np.sinh,
    "inv_cosh": lambda x: 1.0 / np.cosh(x),
}


def fun_calc(a, kind: str, t: float | None = None, tol: Tolerance | None = None) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix spectrally.

    kind is one of sqrt_pd, log_pd, pow_t, exp, cos, sin, cosh, sinh,
    inv_cosh; the first three require the matrix to be positive definite,
    and pow_t takes the real exponent as `t`.
    """
    tt = resolve_tol(tol)
    w, v = herm_eig(a, tol)
    if kind in _PD_KINDS and w[0] <= tt.eps_pos:
        raise NotPositiveDefinite(
            f"minimum eigenvalue {w[0]:.3e} is not above the floor {tt.eps_pos:.1e}"
        )
    if kind == "pow_t":
        if t is None:
            raise ValueError("pow_t requires the exponent t")
        fw = w ** float(t)
    else:
        try:
            fw = _SCALAR_FUNCS[kind](w)
        except KeyError:
            raise ValueError(f"unknown functional-calculus kind {kind!r}") from None
    return re_part((v * fw) @ adjoint(v))


def sqrtm(a, tol=None):
    """Positive square root of a positive definite matrix."""
    return fun_calc(a, "sqrt_pd", tol=tol)


def inv_sqrtm(a, tol=None):
    """Inverse positive square root a^(-1/2)."""
    return fun_calc(a, "pow_t", t=-0.5, tol=tol)


def logm(a, tol=None):
    """Unique Hermitian logarithm of a positive definite matrix."""
    return fun_calc(a, "log_pd", tol=tol)


def powm(a, t, tol=None):
    """Real power a^t of a positive definite matrix."""
    return fun_calc(a, "pow_t", t=t, tol=tol)


def expm(a, tol=None):
    """Exponential of a Hermitian matrix."""
    return fun_calc(a, "exp", tol=tol)


def cosm(a, tol=None):
    return fun_calc(a, "cos", tol=tol)


def sinm(a, tol=None):
    return fun_calc(a, "sin", tol=tol)


def coshm(a, tol=None):
    return fun_calc(a, "cosh", tol=tol)


def sinhm(a, tol=None):
    return fun_calc(a, "sinh", tol=tol)


def sechm(a, tol=None):
    """Inverse of cosh(a); a Hermitian."""
    return fun_calc(a, "inv_cosh", tol=tol)


def expm_skew(a, tol: Tolerance | None = None) -> np.ndarray:
    """Exponential of an anti-Hermitian matrix; the result is unitary."""
    m = as_matrix(a)
    t = resolve_tol(tol)
    if spec_norm(m + adjoint(m)) > t.eps_struct * max(1.0, spec_norm(m)):
        raise NotHermitian("matrix is not anti-Hermitian within tolerance")
    h = re_part(-1j * m)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ adjoint(v)


def polar(a, tol: Tolerance | None = None):
    """Polar factors (u, p) of an invertible matrix: a = u p.

    u is unitary and p = (a* a)^(1/2) is positive definite.
    """
    m = as_matrix(a)
    t = resolve_tol(tol)
    w, s, vh = np.linalg.svd(m)
    if s[-1] <= t.eps_pos:
        raise Singular(
            f"smallest singular value {s[-1]:.3e} is not above the floor {t.eps_pos:.1e}"
        )
    u = w @ vh
    p = re_part(adjoint(vh) @ (s[:, None] * vh))
    return u, p


def is_hermitian(a, tol: Tolerance | None = None) -> bool:
    t = resolve_tol(tol)
    try:
        m = as_matrix(a)
    except GeometryError:
        return False
    return spec_norm(m - adjoint(m)) <= t.eps_struct * max(1.0, spec_norm(m))


def is_positive_definite(a, tol: Tolerance | None = None) -> bool:
    t = resolve_tol(tol)
    if not is_hermitian(a, tol):
        return False
    w = np.linalg.eigvalsh(re_part(as_matrix(a)))
    return float(w[0]) > t.eps_pos


def is_contraction_strict(a, tol: Tolerance | None = None) -> bool:
    t = resolve_tol(tol)
    try:
        return spec_norm(a) < 1.0 - t.eps_pos
    except GeometryError:
        return False


def is_invertible(a, tol: Tolerance | None = None) -> bool:
    t = resolve_tol(tol)
    try:
        return min_sing(a) > t.eps_pos
    except GeometryError:
        return False


class MatrixSampler:
    """Deterministic random-matrix source for tests and verification suites.

    Every draw derives from the seed (an int or numpy SeedSequence) given at
    construction, so runs with equal seeds are bit-identical.
    """

    def __init__(self, seed, n: int):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        self.n = int(n)
        self.rng = np.random.default_rng(seed)

    def matrix(self, scale: float = 1.0) -> np.ndarray:
        """General complex matrix; real and imaginary entries uniform in [-scale, scale]."""
        re = self.rng.uniform(-1.0, 1.0, (self.n, self.n))
        im = self.rng.uniform(-1.0, 1.0, (self.n, self.n))
        return scale * (re + 1j * im)

    def hermitian(self, scale: float = 1.0) -> np.ndarray:
        """Hermitian matrix with entries in scale * [-1, 1]."""
        return re_part(self.matrix(scale))

    def positive_definite(self, scale: float = 1.0) -> np.ndarray:
        """exp of a random Hermitian matrix."""
        return expm(self.hermitian(scale))

    def strict_contraction(self) -> np.ndarray:
        """General matrix rescaled so its spectral norm is uniform in [0.1, 0.9]."""
        m = self.matrix()
        target = self.rng.uniform(0.1, 0.9)
        return m * (target / spec_norm(m))

    def halfspace_point(self, scale: float = 1.0) -> np.ndarray:
        """x + i y with x random Hermitian and y random positive definite."""
        return self.hermitian(scale) + 1j * self.positive_definite(scale)
