"""Structured random generators built on MatrixSampler.

Used by the verification suites and the test suite to draw Lie-algebra
elements, group elements, sphere pairs and geodesic-family parameters.
Group elements are generated through the exponential chart, optionally
composed with Borel and embedded-invertible factors.
"""

from __future__ import annotations

import numpy as np

from .linalg import MatrixSampler, adjoint, polar, re_part
from .blocks import (
    LieElement,
    borel_element,
    cayley_conjugate,
    from_blocks,
    lie_split,
)
from .models import KPair, disk_section, half_space_section, make_kpair
from .geometry import GeodesicFamily, anticommuting_family, commuting_family


def random_unitary(smp: MatrixSampler) -> np.ndarray:
    return polar(smp.matrix() + 3.0 * np.eye(smp.n))[0]


def random_lie_element(smp: MatrixSampler, scale: float = 0.5) -> LieElement:
    """Element [[x11, x12], [x21, -x11*]] with Hermitian off-diagonal blocks."""
    x11 = smp.matrix(scale)
    x12 = smp.hermitian(scale)
    x21 = smp.hermitian(scale)
    return lie_split(from_blocks(x11, x12, x21, -adjoint(x11)))


def random_horizontal(smp: MatrixSampler, scale: float = 0.5) -> LieElement:
    """Horizontal element [[alpha, beta], [beta, -alpha]]."""
    alpha = smp.hermitian(scale)
    beta = smp.hermitian(scale)
    return lie_split(from_blocks(alpha, beta, beta, -alpha))


def random_group_element(smp: MatrixSampler, tag: str = "H",
                         scale: float = 0.5, with_borel: bool = False) -> np.ndarray:
    """Group element from the exponential chart, optionally times a Borel factor."""
    from .blocks import exp_chart

    g = exp_chart(random_lie_element(smp, scale))
    if with_borel:
        b = smp.positive_definite(scale)
        x = np.linalg.inv(adjoint(b)) @ smp.hermitian(scale)  # b* x Hermitian
        g = g @ borel_element(b, x)
    if tag == "D":
        return cayley_conjugate(g)
    return g


def random_kpair(smp: MatrixSampler, tag: str = "D") -> KPair:
    """Sphere pair: a canonical section moved off the canonical fiber."""
    u = random_unitary(smp)
    if tag == "D":
        k = disk_section(smp.strict_contraction())
    else:
        k = half_space_section(smp.halfspace_point())
    return make_kpair(k.x1 @ u, k.x2 @ u, tag)


def random_commuting_family(smp: MatrixSampler, radius: float = 1.0,
                            angle_range=(-np.pi, np.pi)) -> GeodesicFamily:
    """Commuting parameters from a shared random eigenbasis."""
    w = random_unitary(smp)
    radii = smp.rng.uniform(0.05, radius, smp.n)
    angles = smp.rng.uniform(angle_range[0], angle_range[1], smp.n)
    g = re_part((w * radii) @ adjoint(w))
    chi = re_part((w * angles) @ adjoint(w))
    return commuting_family(g, chi)


def random_anticommuting_family(smp: MatrixSampler, scale: float = 0.8) -> GeodesicFamily:
    """Anticommuting parameters.

    For n = 1 only alpha = 0 anticommutes; for even n the pair is built
    from sigma_z/sigma_x tensored with commuting Hermitian factors.
    """
    n = smp.n
    if n == 1:
        beta = np.array([[smp.rng.uniform(-scale, scale)]], dtype=complex)
        return anticommuting_family(np.zeros((1, 1), dtype=complex), beta)
    if n % 2:
        raise ValueError("anticommuting sampling needs n = 1 or even n")
    k = n // 2
    w = polar(smp.matrix()[:k, :k] + 3.0 * np.eye(k))[0]
    da = smp.rng.uniform(-scale, scale, k)
    db = smp.rng.uniform(-scale, scale, k)
    a_fact = re_part((w * da) @ adjoint(w))
    b_fact = re_part((w * db) @ adjoint(w))
    sz = np.array([[1.0, 0.0], [0.0, -1.0]])
    sx = np.array([[0.0, 1.0], [1.0, 0.0]])
    return anticommuting_family(np.kron(sz, a_fact), np.kron(sx, b_fact))
