"""Discrete-time trajectory planning for the two motion strategies.

Strategy 1 drives the platform along a straight line under a quintic profile
(the conventional, unbalanced motion).  Strategy 2 drives the common center
of mass along a straight line under a bang-bang profile; each commanded COM
waypoint is mapped back to a platform pose by Newton inversion of the
closed-form COM model, so the platform path comes out implicitly curved.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasiblePoseError, PlanningError, SolverError
from .geometry import GeometryParams, inverse_kinematics, is_feasible
from .mass_model import MassParams, com_of_pose, com_pose_jacobian
from .profiles import BANG_BANG, QUINTIC, SCALAR_LAWS

MODE_PLATFORM_LINE = "platform_line_quintic"
MODE_COM_LINE = "com_line_bangbang"
PLAN_MODES = (MODE_PLATFORM_LINE, MODE_COM_LINE)

# Newton tolerance on the COM residual, in meters.
COM_SOLVE_TOL = 1e-10
_MAX_CONDITION = 1e12


@dataclass(frozen=True)
class PlanRequest:
    """A full planning problem: endpoints, timing, mode and mechanism data.

    dt must satisfy 0 < dt <= t_f/100 (at least 100 samples) and both
    endpoint poses must be feasible.
    """

    p_i: np.ndarray
    p_f: np.ndarray
    t_f: float
    dt: float
    mode: str
    geometry: GeometryParams
    masses: MassParams

    def __post_init__(self):
        p_i = np.asarray(self.p_i, dtype=float)
        p_f = np.asarray(self.p_f, dtype=float)
        if p_i.shape != (3,) or p_f.shape != (3,):
            raise ValueError("endpoint poses must be 3-vectors")
        object.__setattr__(self, "p_i", p_i)
        object.__setattr__(self, "p_f", p_f)
        if not (np.isfinite(self.t_f) and self.t_f > 0):
            raise ValueError(f"duration t_f must be > 0, got {self.t_f}")
        if not (np.isfinite(self.dt) and self.dt > 0):
            raise ValueError(f"time step dt must be > 0, got {self.dt}")
        if self.dt > self.t_f / 100.0 * (1.0 + 1e-12):
            raise ValueError(
                f"dt = {self.dt} too large: need at least 100 samples over t_f = {self.t_f}")
        if self.mode not in PLAN_MODES:
            raise ValueError(f"unknown planning mode {self.mode!r}; expected one of {PLAN_MODES}")
        for name, p in (("p_i", p_i), ("p_f", p_f)):
            rep = is_feasible(p, self.geometry)
            if not rep.feasible:
                raise InfeasiblePoseError(
                    f"endpoint {name} = {p.tolist()} is outside the workspace",
                    axis=None, radicand=float(np.min(rep.radicands)))


@dataclass(frozen=True)
class Trajectory:
    """Sampled trajectory on a uniform grid covering [0, t_f] inclusive.

    Every sample keeps the platform pose, the joint displacements recomputed
    from it, and the COM recomputed from it, so the rows are self-consistent
    by construction.
    """

    mode: str
    profile: str
    t: np.ndarray         # (n,)
    platform: np.ndarray  # (n, 3)
    joints: np.ndarray    # (n, 3)
    com: np.ndarray       # (n, 3)

    def __post_init__(self):
        n = len(self.t)
        if n < 2:
            raise ValueError("a trajectory needs at least two samples")
        if np.any(np.diff(self.t) <= 0):
            raise ValueError("sample times must be strictly increasing")
        for name in ("platform", "joints", "com"):
            if getattr(self, name).shape != (n, 3):
                raise ValueError(f"{name} must have shape ({n}, 3)")

    def __len__(self):
        return len(self.t)


def time_grid(t_f: float, dt: float) -> np.ndarray:
    """Uniform grid over [0, t_f] including both endpoints.

    t_f/dt need not be an integer; a final partial step is clamped to t_f
    (which leaves the last interval shorter than dt).
    """
    n = int(math.floor(t_f / dt + 1e-9))
    t = dt * np.arange(n + 1)
    if t[-1] < t_f * (1.0 - 1e-12):
        t = np.append(t, t_f)
    else:
        t[-1] = t_f
    return t


def solve_com_waypoint(S_target, guess, g: GeometryParams, mp: MassParams,
                       tol: float = COM_SOLVE_TOL, max_iter: int = 50,
                       full_output: bool = False):
    """Platform pose whose moving-link COM equals ``S_target``.

    Damped Newton iteration on the closed-form COM model with its analytic
    Jacobian, starting from ``guess``.  Steps are halved (up to 8 times)
    whenever the residual would not decrease or the iterate would leave the
    feasible workspace.

    Parameters
    ----------
    S_target : array_like
        Commanded COM position in meters.
    guess : array_like
        Feasible starting pose selecting the solution branch.
    tol : float
        Convergence threshold on the max-norm COM residual, meters.
    full_output : bool
        When true, return ``(pose, iterations, residual)`` instead of the
        pose alone.

    Raises
    ------
    InfeasiblePoseError
        If ``guess`` is outside the workspace.
    SolverError
        On iteration exhaustion, an ill-conditioned Jacobian (workspace
        boundary), or a stalled damped step; unreachable targets surface as
        one of these rather than silent extrapolation.
    """
    S_target = np.asarray(S_target, dtype=float)
    p = np.array(guess, dtype=float)
    f = com_of_pose(p, g, mp) - S_target
    res = float(np.max(np.abs(f)))
    iters = 0
    while res > tol:
        if iters >= max_iter:
            raise SolverError(
                f"COM inversion did not converge in {max_iter} iterations "
                f"(residual {res:.3g} m)", residual=res, iterations=iters)
        J = com_pose_jacobian(p, g, mp)
        if not np.all(np.isfinite(J)) or np.linalg.cond(J) > _MAX_CONDITION:
            raise SolverError(
                f"COM Jacobian ill-conditioned at p = {p.tolist()} "
                "(workspace boundary)", residual=res, iterations=iters)
        step = np.linalg.solve(J, -f)
        scale = 1.0
        accepted = False
        for _ in range(9):  # full step plus up to 8 halvings
            cand = p + scale * step
            if is_feasible(cand, g).feasible:
                fc = com_of_pose(cand, g, mp) - S_target
                rc = float(np.max(np.abs(fc)))
                if rc < res or rc <= tol:
                    accepted = True
                    break
            scale *= 0.5
        if not accepted:
            raise SolverError(
                f"COM inversion stalled at residual {res:.3g} m "
                f"(target {S_target.tolist()} may be unreachable)",
                residual=res, iterations=iters)
        p, f, res = cand, fc, rc
        iters += 1
    if full_output:
        return p, iters, res
    return p


def plan_platform_line(req: PlanRequest) -> Trajectory:
    """Strategy 1: platform on a straight line under the quintic profile.

    Raises PlanningError at the first infeasible intermediate pose.
    """
    if req.mode != MODE_PLATFORM_LINE:
        raise ValueError(f"plan_platform_line requires mode {MODE_PLATFORM_LINE!r}, got {req.mode!r}")
    t = time_grid(req.t_f, req.dt)
    sigma, _, _ = SCALAR_LAWS[QUINTIC](t, req.t_f)
    dp = req.p_f - req.p_i
    platform = req.p_i[None, :] + np.multiply.outer(sigma, dp)
    platform[0] = req.p_i
    platform[-1] = req.p_f
    joints = np.empty_like(platform)
    com = np.empty_like(platform)
    for k in range(len(t)):
        try:
            joints[k] = inverse_kinematics(platform[k], req.geometry)
            com[k] = com_of_pose(platform[k], req.geometry, req.masses)
        except InfeasiblePoseError as exc:
            raise PlanningError(
                f"platform-line plan hit an infeasible pose at t = {t[k]:.6g} s: {exc}",
                mode=req.mode, t=float(t[k])) from exc
    return Trajectory(mode=req.mode, profile=QUINTIC, t=t,
                      platform=platform, joints=joints, com=com)


def plan_com_line(req: PlanRequest, profile: str = BANG_BANG) -> Trajectory:
    """Strategy 2: COM on a straight line, bang-bang profile by default.

    Each commanded COM waypoint is inverted to a platform pose by Newton
    iteration warm-started from the previous sample; the endpoint samples are
    pinned to the requested poses (the solve is a fixed point there).  The
    ``profile`` keyword exists so the same machinery can drive the COM line
    under the quintic law for comparison studies.

    Raises PlanningError with the failing time if any waypoint cannot be
    inverted (non-convergence or workspace-boundary singularity).
    """
    if req.mode != MODE_COM_LINE:
        raise ValueError(f"plan_com_line requires mode {MODE_COM_LINE!r}, got {req.mode!r}")
    g, mp = req.geometry, req.masses
    S_i = com_of_pose(req.p_i, g, mp)
    S_f = com_of_pose(req.p_f, g, mp)
    D = S_f - S_i
    t = time_grid(req.t_f, req.dt)
    sigma, _, _ = SCALAR_LAWS[profile](t, req.t_f)
    n = len(t)
    platform = np.empty((n, 3))
    joints = np.empty((n, 3))
    com = np.empty((n, 3))
    p_prev = req.p_i
    for k in range(n):
        if k == 0:
            p = req.p_i
        elif k == n - 1:
            p = req.p_f
        else:
            S_cmd = S_i + sigma[k] * D
            try:
                p = solve_com_waypoint(S_cmd, p_prev, g, mp)
            except (SolverError, InfeasiblePoseError) as exc:
                raise PlanningError(
                    f"COM-line plan failed at t = {t[k]:.6g} s: {exc}",
                    mode=req.mode, t=float(t[k])) from exc
        platform[k] = p
        joints[k] = inverse_kinematics(p, g)
        com[k] = com_of_pose(p, g, mp)
        p_prev = p
    return Trajectory(mode=req.mode, profile=profile, t=t,
                      platform=platform, joints=joints, com=com)
