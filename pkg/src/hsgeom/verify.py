"""Seeded randomized verification of the library's geometric identities.

Each suite draws `trials` independent instances; the instance for trial k
of a suite uses a generator spawned from the root seed and the pair
(suite index, k), so any failing trial is reproducible in isolation.
Residuals are aggregated as maxima, which makes reports independent of
evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GeometryError
from .linalg import (
    MatrixSampler,
    adjoint,
    as_matrix,
    expm_skew,
    im_part,
    re_part,
    spec_norm,
    sqrtm,
)
from .blocks import (
    blocks_of,
    borel_element,
    cayley_conjugate,
    cayley_unitary,
    embed_invertible,
    exp_chart,
    form_product,
    form_reflection,
    from_blocks,
    group_polar,
    group_residual,
    lie_split,
    shear,
    symplectic_unit,
    unitary_split,
)
from .models import (
    act_on_pair,
    base_point,
    borel_from_sphere,
    cayley_to_disk,
    disk_section,
    fibration,
    half_space_section,
    moebius,
    sphere_residual,
    transitivity_witness,
)
from .reflections import (
    disk_to_reflection,
    half_space_to_reflection,
    rank_one_projection,
    reflection_residuals,
    reflection_to_disk,
    reflection_to_point,
    reflection_to_sphere,
)
from .geometry import (
    anticommuting_geodesic,
    commuting_circle_center,
    commuting_geodesic,
    cone_covariant,
    cone_distance,
    cone_exp,
    cone_geodesic,
    connection_form,
    disk_distance_from_origin,
    family_generator,
    finsler_norm,
    geodesic_from_base,
    half_space_covariant,
    model_distance,
    model_geodesic_sample,
    tangent_from_horizontal,
)
from .sampling import (
    random_anticommuting_family,
    random_commuting_family,
    random_group_element,
    random_horizontal,
    random_kpair,
    random_lie_element,
    random_unitary,
)

SUITE_NAMES = (
    "forms",
    "groups",
    "actions",
    "reflections",
    "metric",
    "npc",
    "covariant",
    "families",
)


@dataclass
class CheckResult:
    name: str
    threshold: float
    residual: float = 0.0
    worst_trial: int = -1

    def update(self, value: float, trial: int) -> None:
        v = float(value)
        if v > self.residual:
            self.residual = v
            self.worst_trial = trial

    @property
    def passed(self) -> bool:
        return self.residual <= self.threshold


@dataclass
class SuiteResult:
    suite: str
    n: int
    seed: int
    trials: int
    checks: list = field(default_factory=list)
    error: str | None = None
    error_trial: int = -1

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)


def skew_log_unitary(u) -> np.ndarray:
    """Principal anti-Hermitian logarithm of a unitary matrix."""
    m = as_matrix(u)
    w, v = np.linalg.eig(m)
    lw = np.log(w)
    out = v @ np.diag(lw) @ np.linalg.inv(v)
    return 0.5 * (out - adjoint(out))


def _diff(a, b) -> float:
    return spec_norm(np.asarray(a) - np.asarray(b))


# ---------------------------------------------------------------------------
# suite bodies: one call per trial


def _trial_forms(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    x = (smp.matrix(), smp.matrix())
    y = (smp.matrix(), smp.matrix())
    g = exp_chart(random_lie_element(smp))
    act = blocks_of(g)
    gx = (act[0] @ x[0] + act[1] @ x[1], act[2] @ x[0] + act[3] @ x[1])
    gy = (act[0] @ y[0] + act[1] @ y[1], act[2] @ y[0] + act[3] @ y[1])
    rec["invariance"].update(
        _diff(form_product("H", gx, gy), form_product("H", x, y)), k)
    for tag in ("H", "D"):
        rho = form_reflection(tag, n)
        rx = blocks_of(rho)
        rxp = (rx[0] @ x[0] + rx[1] @ x[1], rx[2] @ x[0] + rx[3] @ x[1])
        inner = adjoint(rxp[0]) @ y[0] + adjoint(rxp[1]) @ y[1]
        rec["pairing_identity"].update(_diff(form_product(tag, x, y), inner), k)
    omega = adjoint(x[1]) @ y[0] - adjoint(x[0]) @ y[1]
    rec["symplectic_identity"].update(_diff(form_product("H", x, y), 1j * omega), k)
    self_pair = form_product("H", x, x)
    rec["self_pairing_hermitian"].update(_diff(self_pair, adjoint(self_pair)), k)


def _trial_groups(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    j = symplectic_unit(n)
    g1 = exp_chart(random_lie_element(smp))
    g2 = random_group_element(smp, "H", with_borel=True)
    rec["closure"].update(group_residual("H", g1 @ g2, normalized=True), k)
    rec["closure"].update(group_residual("H", np.linalg.inv(g1), normalized=True), k)
    u, p = group_polar("H", g1)
    rec["polar_membership"].update(group_residual("H", u, normalized=True), k)
    rec["polar_membership"].update(group_residual("H", p, normalized=True), k)
    rec["polar_relations"].update(spec_norm(u @ j - j @ u), k)
    rec["polar_relations"].update(_diff(j @ p @ (-j), np.linalg.inv(p)), k)
    rec["polar_relations"].update(_diff(u @ p, g1) / max(1.0, spec_norm(g1)), k)
    b1 = borel_element(smp.positive_definite(0.5),
                       np.linalg.inv(smp.positive_definite(0.5)) @ smp.hermitian())
    b2 = borel_element(smp.matrix() + 3.0 * np.eye(n),
                       np.linalg.inv(adjoint(smp.matrix() + 3.0 * np.eye(n))) @ smp.hermitian())
    prod = b1 @ b2
    p11, p12, p21, p22 = blocks_of(prod)
    rec["borel_closure"].update(spec_norm(p12), k)
    s = adjoint(p11) @ p21
    rec["borel_closure"].update(_diff(s, adjoint(s)), k)
    rec["borel_closure"].update(group_residual("H", prod, normalized=True), k)
    vert = random_lie_element(smp).vertical
    uh = expm_skew(vert)
    ud = adjoint(cayley_unitary(n)) @ uh @ cayley_unitary(n)
    u1, u2 = unitary_split(ud)
    rec["unitary_split"].update(_diff(ud, from_blocks(u1, 0 * u1, 0 * u1, u2)), k)
    rec["cayley_transport"].update(
        group_residual("D", cayley_conjugate(g1), normalized=True), k)
    a = smp.matrix() + 3.0 * np.eye(n)
    b = smp.matrix() + 3.0 * np.eye(n)
    rec["embed_multiplicative"].update(
        _diff(embed_invertible(a) @ embed_invertible(b), embed_invertible(a @ b)), k)
    rec["shear_membership"].update(
        group_residual("H", shear(smp.hermitian()), normalized=True), k)
    e = random_lie_element(smp, scale=0.4)
    g3 = exp_chart(e)
    u3, _ = group_polar("H", g3)
    logu = skew_log_unitary(u3)
    rec["chart_log_commutes"].update(spec_norm(logu @ j - j @ logu), k)


def _trial_actions(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    i1 = base_point(n)
    h = smp.halfspace_point()
    z = smp.strict_contraction()
    g = random_group_element(smp, "H", with_borel=True)
    g2 = exp_chart(random_lie_element(smp))
    gd = cayley_conjugate(g)
    gd2 = cayley_conjugate(g2)
    eye2 = np.eye(2 * n)
    rec["identity_action"].update(_diff(moebius("H", eye2, h), h), k)
    rec["associativity"].update(
        _diff(moebius("H", g, moebius("H", g2, h)), moebius("H", g @ g2, h)), k)
    rec["associativity"].update(
        _diff(moebius("D", gd, moebius("D", gd2, z)), moebius("D", gd @ gd2, z)), k)
    kp = random_kpair(smp, "D")
    kh = random_kpair(smp, "H")
    rec["sphere_equivariance"].update(sphere_residual(act_on_pair(gd, kp)), k)
    rec["sphere_equivariance"].update(sphere_residual(act_on_pair(g, kh)), k)
    rec["fibration_equivariance"].update(
        _diff(fibration(act_on_pair(g, kh)), moebius("H", g, fibration(kh))), k)
    rec["fibration_equivariance"].update(
        _diff(fibration(act_on_pair(gd, kp)), moebius("D", gd, fibration(kp))), k)
    rec["lift_equivalence"].update(
        _diff(fibration(act_on_pair(g, half_space_section(h))), moebius("H", g, h)), k)
    w = transitivity_witness(h)
    rec["transitivity"].update(_diff(moebius("H", w, i1), h), k)
    h2 = smp.halfspace_point()
    w2 = transitivity_witness(h2)
    rec["transitivity"].update(_diff(moebius("H", w2 @ np.linalg.inv(w), h), h2), k)
    bb = borel_from_sphere(kh)
    rec["free_action"].update(group_residual("H", bb, normalized=True), k)
    kb = act_on_pair(bb, half_space_section(i1))
    rec["free_action"].update(max(_diff(kb.x1, kh.x1), _diff(kb.x2, kh.x2)), k)
    recon = from_blocks(kh.x1, np.zeros((n, n)),
                        kh.x2 - 1j * np.linalg.inv(adjoint(kh.x1)),
                        np.linalg.inv(adjoint(kh.x1)))
    col = np.vstack([np.eye(n), 1j * np.eye(n)])
    target = np.vstack([kh.x1, kh.x2])
    rec["free_action"].update(spec_norm(recon @ col - target), k)
    uu = random_unitary(smp)
    rec["isotropy"].update(
        spec_norm(moebius("D", from_blocks(uu, 0 * uu, 0 * uu, uu), np.zeros((n, n)))), k)
    u_cayley = cayley_unitary(n)
    rec["cayley_compat"].update(
        _diff(cayley_to_disk(moebius("H", g, h)),
              moebius("D", adjoint(u_cayley) @ g @ u_cayley, cayley_to_disk(h))), k)


def _trial_reflections(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    z = smp.strict_contraction()
    h = smp.halfspace_point()
    ez = disk_to_reflection(z)
    eh = half_space_to_reflection(h)
    for e in (ez, eh):
        idem, herm, mineig = reflection_residuals(e.tag, e.eps)
        rec["invariants"].update(max(idem, herm), k)
        rec["invariants"].update(max(0.0, -mineig), k)
    delta = disk_section(z)
    proj = rank_one_projection(delta)
    rec["dual_route"].update(
        _diff(ez.eps, 2.0 * proj - np.eye(2 * n)), k)
    rec["projection_idempotent"].update(_diff(proj @ proj, proj), k)
    rho_d = form_reflection("D", n)
    rec["projection_symmetric"].update(
        _diff(rho_d @ adjoint(proj) @ rho_d, proj), k)
    rec["round_trip"].update(_diff(reflection_to_disk(ez), z), k)
    rec["round_trip"].update(
        _diff(disk_to_reflection(reflection_to_disk(ez)).eps, ez.eps), k)
    rec["round_trip"].update(_diff(reflection_to_point(eh), h), k)
    kp = random_kpair(smp, "D")  # same fiber as fibration(kp), moved by a unitary
    zf = fibration(kp)
    e_fiber = 2.0 * rank_one_projection(kp) - np.eye(2 * n)
    rec["fiber_independent"].update(_diff(e_fiber, disk_to_reflection(zf).eps), k)
    g = random_group_element(smp, "H")
    gd = cayley_conjugate(g)
    rec["equivariance"].update(
        _diff(half_space_to_reflection(moebius("H", g, h)).eps,
              g @ eh.eps @ np.linalg.inv(g)), k)
    rec["equivariance"].update(
        _diff(disk_to_reflection(moebius("D", gd, z)).eps,
              gd @ ez.eps @ np.linalg.inv(gd)), k)
    gamma = 2.0 * kp.x1 @ adjoint(kp.x2)
    m = from_blocks(0 * gamma, gamma, adjoint(gamma), 0 * gamma)
    witness = sqrtm(np.eye(2 * n) + m @ m) + m
    rec["positivity_witness"].update(
        _diff((2.0 * rank_one_projection(kp) - np.eye(2 * n)) @ rho_d, witness), k)
    lift = reflection_to_sphere(ez)
    rec["sphere_lift"].update(_diff(fibration(lift), z), k)


def _trial_metric(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    zero = np.zeros((n, n))
    z = smp.strict_contraction()
    rec["disk_closed_form"].update(
        abs(model_distance("D", zero, z) - disk_distance_from_origin(z)), k)
    p = smp.halfspace_point()
    q = smp.halfspace_point()
    dh = model_distance("H", p, q)
    rec["cayley_isometry"].update(
        abs(dh - model_distance("D", cayley_to_disk(p), cayley_to_disk(q))), k)
    g = random_group_element(smp, "H", with_borel=True)
    rec["isometric_action"].update(
        abs(model_distance("H", moebius("H", g, p), moebius("H", g, q)) - dh), k)
    a = smp.positive_definite(0.8)
    b = smp.positive_definite(0.8)
    dab = cone_distance(a, b)
    rec["symmetry"].update(abs(dab - cone_distance(b, a)), k)
    rec["geodesic_endpoints"].update(_diff(cone_geodesic(a, b, 0.0), a), k)
    rec["geodesic_endpoints"].update(_diff(cone_geodesic(a, b, 1.0), b), k)
    t = float(smp.rng.uniform(0.1, 0.9))
    s = float(smp.rng.uniform(0.1, 0.9))
    rec["geodesic_ratio"].update(
        abs(cone_distance(a, cone_geodesic(a, b, t)) - t * dab), k)
    rec["semigroup"].update(
        abs(cone_distance(cone_geodesic(a, b, s), cone_geodesic(a, b, t))
            - abs(t - s) * dab), k)
    x = smp.hermitian(0.8)
    rec["exp_consistency"].update(
        _diff(cone_geodesic(a, cone_exp(a, x), t), cone_exp(a, t * x)), k)
    gg = smp.matrix() + 3.0 * np.eye(n)
    gi = np.linalg.inv(gg)
    moved_a = re_part(adjoint(gi) @ a @ gi)
    moved_x = re_part(adjoint(gi) @ x @ gi)
    rec["finsler_invariance"].update(
        abs(finsler_norm(a, x) - finsler_norm(moved_a, moved_x)), k)
    rec["congruence_invariance"].update(
        abs(cone_distance(moved_a, re_part(adjoint(gi) @ b @ gi)) - dab), k)
    rec["finsler_at_identity"].update(
        abs(finsler_norm(np.eye(n), x) - spec_norm(x)), k)
    pt0, _ = model_geodesic_sample("H", p, q, 0.0)
    pt1, _ = model_geodesic_sample("H", p, q, 1.0)
    rec["model_endpoints"].update(max(_diff(pt0, p), _diff(pt1, q)), k)
    xh = random_horizontal(smp, 0.5)
    d1 = model_distance("H", base_point(n), geodesic_from_base(xh, 1.0))
    dt = model_distance("H", base_point(n), geodesic_from_base(xh, t))
    rec["base_speed"].update(abs(dt - t * d1), k)


_NPC_GRID = np.linspace(0.0, 1.0, 11)


def _trial_npc(smp: MatrixSampler, rec, k: int) -> None:
    p = smp.halfspace_point(0.8)
    q1 = smp.halfspace_point(0.8)
    q2 = smp.halfspace_point(0.8)
    d_end = model_distance(
        "H",
        model_geodesic_sample("H", p, q1, 1.0)[0],
        model_geodesic_sample("H", p, q2, 1.0)[0],
    )
    for t in np.arange(0.1, 0.95, 0.1):
        d_t = model_distance(
            "H",
            model_geodesic_sample("H", p, q1, float(t))[0],
            model_geodesic_sample("H", p, q2, float(t))[0],
        )
        rec["chord_arc"].update(d_t - float(t) * d_end, k)
    p2 = smp.halfspace_point(0.8)
    f = [
        model_distance(
            "H",
            model_geodesic_sample("H", p, q1, float(t))[0],
            model_geodesic_sample("H", p2, q2, float(t))[0],
        )
        for t in _NPC_GRID
    ]
    m = len(_NPC_GRID)
    for i in range(m):
        for j in range(i + 2, m):
            if (i + j) % 2 == 0:
                rec["midpoint_convexity"].update(
                    f[(i + j) // 2] - 0.5 * (f[i] + f[j]), k)


def _trial_covariant(smp: MatrixSampler, rec, k: int) -> None:
    n = smp.n
    x = random_horizontal(smp, 0.5)
    t0, s = 0.3, 1.0e-3
    delta = {dt: geodesic_from_base(x, t0 + dt) for dt in
             (-2 * s, -s, 0.0, s, 2 * s)}
    hdot = (delta[s] - delta[-s]) / (2 * s)
    zdot = (delta[2 * s] - 2.0 * delta[0.0] + delta[-2 * s]) / (4 * s * s)
    dcov = half_space_covariant(delta[0.0], hdot, hdot, zdot)
    rec["half_space_orbit"].update(spec_norm(dcov), k)
    rec["output_hermitian"].update(
        max(spec_norm(re_part(dcov) - adjoint(re_part(dcov))),
            spec_norm(im_part(dcov) - adjoint(im_part(dcov)))), k)
    a = smp.positive_definite(0.6)
    b = smp.positive_definite(0.6)
    gam = {dt: cone_geodesic(a, b, t0 + dt) for dt in (-2 * s, -s, 0.0, s, 2 * s)}
    adot = (gam[s] - gam[-s]) / (2 * s)
    ydot = (gam[2 * s] - 2.0 * gam[0.0] + gam[-2 * s]) / (4 * s * s)
    rec["ambient_geodesic"].update(
        spec_norm(cone_covariant(gam[0.0], re_part(adot), re_part(adot),
                                 re_part(ydot))), k)
    zeta = smp.hermitian() + 1j * smp.hermitian()
    kappa = connection_form(zeta)
    rec["kappa_round_trip"].update(_diff(tangent_from_horizontal(kappa), zeta), k)
    rec["kappa_horizontal"].update(spec_norm(lie_split(kappa).vertical), k)


def _trial_families(smp: MatrixSampler, rec, k: int) -> None:
    from .linalg import cosm, coshm, sinhm, sinm
    from .geometry import anticommuting_family

    grid = (0.0, 0.25, 0.5, 0.75, 1.0)
    fam = random_commuting_family(smp, radius=0.9,
                                  angle_range=(0.35, np.pi - 0.35))
    gen = family_generator(fam)
    mu = commuting_circle_center(fam)
    n = smp.n
    for t in grid:
        closed = commuting_geodesic(fam, t)
        rec["commuting_match"].update(
            _diff(closed, geodesic_from_base(gen, t)), k)
        g2 = 2.0 * float(t) * fam.radius
        sh = sinhm(g2)
        den_inv = np.linalg.inv(coshm(g2) + cosm(fam.angle) @ sh)
        rec["commuting_parts"].update(_diff(im_part(closed), den_inv), k)
        rec["commuting_parts"].update(
            _diff(re_part(closed), sinm(fam.angle) @ sh @ den_inv), k)
        rr = re_part(closed) - mu
        circle = rr @ rr + im_part(closed) @ im_part(closed)
        rec["circle"].update(_diff(circle, mu @ mu + np.eye(n)), k)
    if smp.n == 1 or smp.n % 2 == 0:
        fam2 = random_anticommuting_family(smp, scale=0.8)
        gen2 = family_generator(fam2)
        fam2_zero = anticommuting_family(np.zeros_like(fam2.alpha), fam2.beta)
        for t in grid:
            closed = anticommuting_geodesic(fam2, t)
            rec["anticommuting_match"].update(
                _diff(closed, geodesic_from_base(gen2, t)), k)
            rec["alpha_independence"].update(
                _diff(re_part(closed),
                      re_part(anticommuting_geodesic(fam2_zero, t))), k)


_TRIALS = {
    "forms": _trial_forms,
    "groups": _trial_groups,
    "actions": _trial_actions,
    "reflections": _trial_reflections,
    "metric": _trial_metric,
    "npc": _trial_npc,
    "covariant": _trial_covariant,
    "families": _trial_families,
}

_CHECKS = {
    "forms": {
        "invariance": 1e-8,
        "pairing_identity": 1e-10,
        "symplectic_identity": 1e-12,
        "self_pairing_hermitian": 1e-12,
    },
    "groups": {
        "closure": 1e-8,
        "polar_membership": 1e-9,
        "polar_relations": 1e-9,
        "borel_closure": 1e-9,
        "unitary_split": 1e-10,
        "cayley_transport": 1e-8,
        "embed_multiplicative": 1e-10,
        "shear_membership": 1e-10,
        "chart_log_commutes": 1e-8,
    },
    "actions": {
        "identity_action": 1e-12,
        "associativity": 1e-8,
        "sphere_equivariance": 1e-8,
        "fibration_equivariance": 1e-8,
        "lift_equivalence": 1e-9,
        "transitivity": 1e-9,
        "free_action": 1e-9,
        "isotropy": 1e-12,
        "cayley_compat": 1e-8,
    },
    "reflections": {
        "invariants": 1e-9,
        "dual_route": 1e-9,
        "projection_idempotent": 1e-9,
        "projection_symmetric": 1e-9,
        "round_trip": 1e-8,
        "fiber_independent": 1e-9,
        "equivariance": 1e-8,
        "positivity_witness": 1e-9,
        "sphere_lift": 1e-9,
    },
    "metric": {
        "disk_closed_form": 1e-8,
        "cayley_isometry": 1e-8,
        "isometric_action": 1e-8,
        "symmetry": 1e-10,
        "geodesic_endpoints": 1e-10,
        "geodesic_ratio": 1e-9,
        "semigroup": 1e-8,
        "exp_consistency": 1e-8,
        "finsler_invariance": 1e-8,
        "congruence_invariance": 1e-8,
        "finsler_at_identity": 1e-12,
        "model_endpoints": 1e-8,
        "base_speed": 1e-6,
    },
    "npc": {
        "chord_arc": 1e-9,
        "midpoint_convexity": 1e-7,
    },
    "covariant": {
        "half_space_orbit": 1e-4,
        "output_hermitian": 1e-10,
        "ambient_geodesic": 1e-5,
        "kappa_round_trip": 1e-12,
        "kappa_horizontal": 1e-15,
    },
    "families": {
        "commuting_match": 1e-8,
        "commuting_parts": 1e-9,
        "circle": 1e-8,
        "anticommuting_match": 1e-8,
        "alpha_independence": 1e-10,
    },
}


def run_suite(suite: str, n: int, seed: int, trials: int,
              threshold_override: float | None = None) -> SuiteResult:
    """Run one named suite and aggregate per-check maxima."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    thresholds = _CHECKS[suite]
    rec = {
        name: CheckResult(name, threshold_override if threshold_override is not None else th)
        for name, th in thresholds.items()
    }
    result = SuiteResult(suite, n, seed, trials, checks=list(rec.values()))
    idx = SUITE_NAMES.index(suite)
    body = _TRIALS[suite]
    for k in range(trials):
        smp = MatrixSampler(np.random.SeedSequence(seed, spawn_key=(idx, k)), n)
        try:
            body(smp, rec, k)
        except GeometryError as exc:
            result.error = f"{type(exc).__name__}: {exc}"
            result.error_trial = k
            break
    return result


def run(suites, n: int, seed: int, trials: int,
        threshold_override: float | None = None) -> list[SuiteResult]:
    if suites == "all" or suites == ["all"]:
        suites = list(SUITE_NAMES)
    elif isinstance(suites, str):
        suites = [suites]
    return [run_suite(s, n, seed, trials, threshold_override) for s in suites]


def format_report(results, out_format: str = "text") -> str:
    """Deterministic report; identical configs give identical bytes."""
    if out_format == "json":
        from .serialization import dumps

        payload = [
            {
                "suite": r.suite,
                "n": r.n,
                "seed": r.seed,
                "trials": r.trials,
                "passed": r.passed,
                "error": r.error,
                "error_trial": r.error_trial,
                "checks": [
                    {
                        "name": c.name,
                        "residual": c.residual,
                        "threshold": c.threshold,
                        "worst_trial": c.worst_trial,
                        "passed": c.passed,
                    }
                    for c in r.checks
                ],
            }
            for r in results
        ]
        return dumps({"results": payload, "passed": all(r.passed for r in results)})
    lines = []
    if out_format == "csv":
        lines.append("suite,check,residual,threshold,worst_trial,status")
        for r in results:
            for c in r.checks:
                lines.append(
                    f"{r.suite},{c.name},{c.residual:.17g},{c.threshold:.17g},"
                    f"{c.worst_trial},{'PASS' if c.passed else 'FAIL'}"
                )
            if r.error is not None:
                lines.append(f"{r.suite},__error__,inf,0,{r.error_trial},FAIL")
        lines.append(
            f"overall,,,,,{'PASS' if all(r.passed for r in results) else 'FAIL'}")
        return "\n".join(lines) + "\n"
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"suite={r.suite} n={r.n} seed={r.seed} trials={r.trials} "
            f"max_residual={r.max_residual:.6e} {status}"
        )
        for c in r.checks:
            mark = "ok " if c.passed else "BAD"
            lines.append(
                f"  [{mark}] {c.name}: residual={c.residual:.6e} "
                f"threshold={c.threshold:.1e} worst_trial={c.worst_trial}"
            )
        if r.error is not None:
            lines.append(f"  [BAD] aborted at trial {r.error_trial}: {r.error}")
    lines.append("overall " + ("PASS" if all(r.passed for r in results) else "FAIL"))
    return "\n".join(lines) + "\n"
