"""Geometric model of the Orthoglide.

The Orthoglide is a 3-DOF translational parallel manipulator whose three
actuated prismatic joints slide along the axes of a Cartesian frame.  Chain i
connects a slider point B_i on axis i to the platform point C_i through a
parallelogram of fixed length L, so the platform translates without rotating
and C_1 = C_2 = C_3 = p.  The frame origin sits at the intersection of the
three prismatic axes.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasiblePoseError, KinematicsError, SolverError

AXIS_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class GeometryParams:
    """Mechanism geometry.

    Parameters
    ----------
    L : float
        Parallelogram leg length |B_i C_i| in meters, identical for the three
        chains.
    l : float
        Offset of the slider attachment point A_i from its prismatic axis, in
        meters.  Enters only the mass model (positions of the A_i points),
        never the kinematic constraint.
    s : tuple of int
        Configuration indices (s_x, s_y, s_z), each -1 or +1, selecting which
        of the two inverse-kinematics branches each chain uses.
    """

    L: float
    l: float = 0.0
    s: tuple = (1, 1, 1)

    def __post_init__(self):
        if not (np.isfinite(self.L) and self.L > 0):
            raise ValueError(f"leg length L must be > 0, got {self.L}")
        if not (np.isfinite(self.l) and self.l >= 0):
            raise ValueError(f"slider offset l must be >= 0, got {self.l}")
        s = tuple(int(v) for v in self.s)
        if len(s) != 3 or any(v not in (-1, 1) for v in s):
            raise ValueError(f"configuration indices must each be -1 or +1, got {self.s!r}")
        object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class FeasibilityReport:
    """Boolean feasibility verdict plus the per-axis radicand diagnostics."""

    feasible: bool
    radicands: np.ndarray
    on_boundary: bool

    def __bool__(self):
        return self.feasible


@dataclass(frozen=True)
class JointPointSet:
    """Joint point coordinates for the three chains.

    Row i of each array is chain i+1: ``A`` holds the slider attachment
    points, ``B`` the points on the prismatic axes, ``C`` the distal joints
    (all equal to the platform point).
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray


def radicands(p, g: GeometryParams) -> np.ndarray:
    """Per-axis radicands L^2 - (off-axis distance)^2 guarding the IK roots.

    Component i is L^2 minus the squared distance of the platform point from
    prismatic axis i; the pose is reachable iff all three are >= 0.
    """
    p = np.asarray(p, dtype=float)
    return g.L**2 - np.sum(p**2) + p**2


def sqrt_radicands(p, g: GeometryParams) -> np.ndarray:
    """Square roots of the radicands, i.e. |rho_i - p_i| for each chain.

    Raises
    ------
    InfeasiblePoseError
        If any radicand is negative, naming the offending axis.
    """
    rad = radicands(p, g)
    if np.any(rad < 0.0):
        worst = int(np.argmin(rad))
        bad = ", ".join(
            f"{AXIS_NAMES[i]}-axis radicand = {rad[i]:.6g}" for i in range(3) if rad[i] < 0.0
        )
        raise InfeasiblePoseError(
            f"pose {np.asarray(p, float).tolist()} outside workspace: {bad}",
            axis=AXIS_NAMES[worst],
            radicand=float(rad[worst]),
        )
    return np.sqrt(rad)


def is_feasible(p, g: GeometryParams, boundary_tol: float = 1e-12) -> FeasibilityReport:
    """Check whether a platform pose is inside the reachable workspace.

    Poses with a vanishing radicand are feasible but flagged ``on_boundary``:
    the inverse kinematics is still defined there while its derivative (and
    the COM-inversion Jacobian) blows up.
    """
    rad = radicands(p, g)
    feasible = bool(np.all(rad >= 0.0))
    on_boundary = feasible and bool(np.min(rad) <= boundary_tol)
    return FeasibilityReport(feasible=feasible, radicands=rad, on_boundary=on_boundary)


def inverse_kinematics(p, g: GeometryParams) -> np.ndarray:
    """Prismatic joint displacements rho for a platform pose p.

    rho_i = p_i + s_i * sqrt(L^2 - (off-axis distance)^2); single-valued once
    the configuration indices are fixed.

    Raises
    ------
    InfeasiblePoseError
        If the pose is outside the workspace.
    """
    p = np.asarray(p, dtype=float)
    return p + np.asarray(g.s, dtype=float) * sqrt_radicands(p, g)


def joint_points(p, rho, g: GeometryParams, tol: float = 1e-8) -> JointPointSet:
    """Coordinates of the joint points A_i, B_i, C_i for a consistent (p, rho).

    B_i sits on prismatic axis i at displacement rho_i; A_i is the slider
    attachment offset by l from the axis; every C_i coincides with the
    platform point.

    Raises
    ------
    KinematicsError
        If any leg length |B_i - C_i| deviates from L by more than ``tol``.
    """
    p = np.asarray(p, dtype=float)
    rho = np.asarray(rho, dtype=float)
    l = g.l
    B = np.diag(rho)
    A = np.array([
        [rho[0] + l, 0.0, l],
        [l, rho[1] + l, 0.0],
        [0.0, l, rho[2] + l],
    ])
    C = np.tile(p, (3, 1))
    leg = np.linalg.norm(B - C, axis=1)
    err = np.abs(leg - g.L)
    if np.any(err > tol):
        i = int(np.argmax(err))
        raise KinematicsError(
            f"chain {i + 1} leg length {leg[i]:.12g} m deviates from L = {g.L:.12g} m "
            f"by {err[i]:.3g} m (tolerance {tol:.1g}); (p, rho) inconsistent"
        )
    return JointPointSet(A=A, B=B, C=C)


def _sphere_residuals(p, rho, L):
    # f_i = |p - B_i|^2 - L^2 with B_i on axis i at rho_i
    d = p - np.diag(rho)
    return np.sum(d * d, axis=1) - L**2


def forward_kinematics(rho, g: GeometryParams, guess, tol: float = 1e-10,
                       max_iter: int = 50) -> np.ndarray:
    """Platform pose for given joint displacements, near a supplied guess.

    Solves the three sphere constraints |p - B_i| = L by damped Newton
    iteration with the analytic 3x3 Jacobian.  The guess selects the branch;
    after convergence the solution is checked against the configuration
    indices.

    Parameters
    ----------
    rho : array_like
        Joint displacements (rho_x, rho_y, rho_z) in meters.
    guess : array_like
        Starting pose; must be in the basin of the intended solution.
    tol : float
        Position residual threshold in meters: the iteration stops once the
        accepted Newton step is no larger than this.

    Raises
    ------
    KinematicsError
        If the sphere system is clearly inconsistent (two slider points
        farther apart than 2L cannot be bridged by equal legs).
    SolverError
        On iteration exhaustion, a singular Jacobian, a stalled damped step,
        or convergence onto the branch not selected by ``g.s``.
    """
    rho = np.asarray(rho, dtype=float)
    p = np.array(guess, dtype=float)
    for i in range(3):
        j = (i + 1) % 3
        gap = math.hypot(rho[i], rho[j])
        if gap > 2.0 * g.L:
            raise KinematicsError(
                f"sphere constraints inconsistent: slider points of chains {i + 1} "
                f"and {j + 1} are {gap:.6g} m apart, more than 2L = {2 * g.L:.6g} m")
    # Convergence is judged on the Newton step (a position-space quantity);
    # the residual floor only short-circuits guesses that already solve the
    # sphere system to better than any tol-sized step could.
    f_floor = 0.02 * g.L * tol
    f = _sphere_residuals(p, rho, g.L)
    res = float(np.max(np.abs(f)))
    iters = 0
    converged = res <= f_floor
    while not converged:
        if iters >= max_iter:
            raise SolverError(
                f"forward kinematics did not converge in {max_iter} iterations "
                f"(residual {res:.3g} m^2)", residual=res, iterations=iters)
        J = 2.0 * (p - np.diag(rho))
        try:
            step = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError as exc:
            raise SolverError(
                f"singular sphere-constraint Jacobian at p = {p.tolist()}",
                residual=res, iterations=iters) from exc
        scale = 1.0
        accepted = False
        for _ in range(9):  # full step plus up to 8 halvings
            cand = p + scale * step
            fc = _sphere_residuals(cand, rho, g.L)
            rc = float(np.max(np.abs(fc)))
            if rc < res or rc <= f_floor:
                accepted = True
                break
            scale *= 0.5
        if not accepted:
            raise SolverError(
                f"forward kinematics stalled at residual {res:.3g} m^2",
                residual=res, iterations=iters)
        p, f, res = cand, fc, rc
        iters += 1
        converged = res <= f_floor or float(np.max(np.abs(scale * step))) <= tol

    rad = radicands(p, g)
    for i in range(3):
        # Branch is only identifiable away from the workspace boundary.
        if rad[i] > 1e-12 and np.sign(rho[i] - p[i]) != g.s[i]:
            raise SolverError(
                f"forward kinematics converged on the wrong {AXIS_NAMES[i]}-branch "
                f"for configuration index s_{AXIS_NAMES[i]} = {g.s[i]:+d}",
                residual=res, iterations=iters)
    return p
