"""Floating-point radial eigenvalue solver used as an independent oracle.

Solves ``-U''/(2m) + [l(l+1)/(2m r**2) + V(r)] U = E U`` (hbar = 1) with a
Numerov recurrence on a uniform mesh.  The level with ``n`` radial nodes is
isolated by bisection on the node count of the outward solution and then
refined on the jump of the logarithmic derivative at the outer turning point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "DebyePotential",
    "OscillatorWell",
    "RadialProblem",
    "SolverConfig",
    "NoBoundStateError",
    "ConvergenceError",
    "debye_problem",
    "oscillator_problem",
    "default_config",
    "integrate_outward",
    "integrate_inward",
    "matching_defect",
    "solve_eigenvalue",
    "radial_function",
    "count_nodes",
]

_BIG = 1e150
_SERIES_TERMS = 16


class NoBoundStateError(ValueError):
    """The energy bracket does not contain the requested level."""


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, bracket: tuple[float, float]):
        super().__init__(f"{message} (last bracket {bracket[0]!r}, {bracket[1]!r})")
        self.bracket = bracket


@dataclass(frozen=True)
class DebyePotential:
    """``V(r) = -alpha exp(-kappa r) / r``."""

    alpha: float
    kappa: float = 0.0

    def __call__(self, r):
        return -self.alpha * np.exp(-self.kappa * r) / r

    def r_times_v_taylor(self, J: int) -> list[float]:
        return [-self.alpha * (-self.kappa) ** s / math.factorial(s) for s in range(J)]

    def length_scale(self, m: float) -> float:
        return 1.0 / (m * self.alpha)

    def default_r_max(self, m: float, n: int, l: int) -> float:
        N = n + l + 1
        rmax = 40.0 * N**2 / (m * self.alpha)
        if self.kappa > 0:
            rmax = max(rmax, 40.0 / self.kappa)
        return rmax

    def default_bracket(self, m: float, n: int, l: int) -> tuple[float, float]:
        N = n + l + 1
        return (1.5 * (-m * self.alpha**2 / (2 * N**2)), 0.0)


@dataclass(frozen=True)
class OscillatorWell:
    """``V(r) = m omega**2 r**2 / 2 + sum_i f_i r**(2i+2)``."""

    m: float
    omega: float
    f: tuple[float, ...] = ()

    def __call__(self, r):
        r2 = r * r
        v = 0.5 * self.m * self.omega**2 * r2
        power = r2 * r2
        for fi in self.f:
            v = v + fi * power
            power = power * r2
        return v

    def r_times_v_taylor(self, J: int) -> list[float]:
        c = [0.0] * J
        if J > 3:
            c[3] = 0.5 * self.m * self.omega**2
        for i, fi in enumerate(self.f, start=1):
            if 2 * i + 3 < J:
                c[2 * i + 3] = fi
        return c

    def length_scale(self, m: float) -> float:
        return 1.0 / math.sqrt(m * self.omega)

    def default_r_max(self, m: float, n: int, l: int) -> float:
        N = 2 * n + l + 1
        return 15.0 * math.sqrt((2 * N + 1) / (m * self.omega))

    def default_bracket(self, m: float, n: int, l: int) -> tuple[float, float]:
        return (0.0, 3.0 * (2 * n + l + 1.5) * self.omega)


@dataclass(frozen=True)
class RadialProblem:
    potential: DebyePotential | OscillatorWell
    m: float
    l: int
    n: int

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("mass must be positive")
        if self.l < 0 or self.n < 0:
            raise ValueError("quantum numbers must be nonnegative")


@dataclass(frozen=True)
class SolverConfig:
    r_min: float
    r_max: float
    mesh_points: int = 200_000
    energy_bracket: tuple[float, float] = (-1.0, 0.0)
    tolerance: float = 1e-12
    max_iterations: int = 200

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r_min < r_max")
        if self.mesh_points < 1000:
            raise ValueError("mesh_points must be at least 1000")
        if not self.energy_bracket[0] < self.energy_bracket[1]:
            raise ValueError("energy bracket must be increasing")

    @property
    def step(self) -> float:
        return (self.r_max - self.r_min) / self.mesh_points


def debye_problem(alpha: float, kappa: float, n: int, l: int, m: float = 1.0) -> RadialProblem:
    return RadialProblem(DebyePotential(float(alpha), float(kappa)), float(m), l, n)


def oscillator_problem(
    omega: float, f: Sequence[float] = (), n: int = 0, l: int = 0, m: float = 1.0
) -> RadialProblem:
    well = OscillatorWell(float(m), float(omega), tuple(float(x) for x in f))
    return RadialProblem(well, float(m), l, n)


def default_config(problem: RadialProblem, **overrides) -> SolverConfig:
    pot, m = problem.potential, problem.m
    base = SolverConfig(
        r_min=1e-6 * pot.length_scale(m),
        r_max=pot.default_r_max(m, problem.n, problem.l),
        energy_bracket=pot.default_bracket(m, problem.n, problem.l),
    )
    return replace(base, **overrides)


def _mesh(config: SolverConfig) -> np.ndarray:
    return config.r_min + config.step * np.arange(config.mesh_points + 1)


def _numerov_weights(problem: RadialProblem, r: np.ndarray, E: float, h: float) -> np.ndarray:
    L = problem.l * (problem.l + 1)
    g = L / (r * r) + 2.0 * problem.m * (problem.potential(r) - E)
    return 1.0 - h * h * g / 12.0, g


def _regular_seed(problem: RadialProblem, E: float, r: Sequence[float]) -> list[float]:
    """Regular solution ``r**(l+1) sum_j a_j r**j`` near the origin, a_0 = 1."""
    l, m = problem.l, problem.m
    w = problem.potential.r_times_v_taylor(_SERIES_TERMS)
    a = [1.0]
    for j in range(1, _SERIES_TERMS):
        acc = 2.0 * m * sum(w[s] * a[j - 1 - s] for s in range(j))
        if j >= 2:
            acc -= 2.0 * m * E * a[j - 2]
        a.append(acc / (j * (2 * l + 1 + j)))
    return [x ** (l + 1) * sum(c * x**j for j, c in enumerate(a)) for x in r]


def _turning_index(g: np.ndarray) -> int:
    allowed = np.nonzero(g < 0)[0]
    M = len(g) - 1
    if allowed.size == 0:
        idx = M // 2
    else:
        idx = int(allowed[-1])
    return min(max(idx, 2), M - 2)


def _outward(
    wts: list[float], g: list[float], h: float, u0: float, u1: float, match: int
) -> tuple[int, tuple[float, float, float]]:
    """Numerov sweep from the origin; returns node count and U at match-1, match, match+1.

    Works with ``Y = w U`` and its first difference ``D``, both accumulated with
    compensated summation; the textbook three-term form loses ~eps/h**2.
    """
    h2 = h * h
    nodes = 0
    sign = 0
    for u in (u0, u1):
        if u != 0.0:
            s = 1 if u > 0 else -1
            if sign and s != sign:
                nodes += 1
            sign = s
    Y = wts[1] * u1
    D = Y - wts[0] * u0
    cD = cY = 0.0
    prev, cur = u0, u1
    triple = (math.nan, math.nan, math.nan)
    for i in range(1, len(wts) - 1):
        t = h2 * g[i] * cur - cD
        s = D + t
        cD = (s - D) - t
        D = s
        t = D - cY
        s = Y + t
        cY = (s - Y) - t
        Y = s
        nxt = Y / wts[i + 1]
        if nxt != 0.0:
            sg = 1 if nxt > 0 else -1
            if sign and sg != sign:
                nodes += 1
            sign = sg
        if i == match:
            triple = (prev, cur, nxt)
        if abs(nxt) > _BIG:
            D, cD, Y, cY, cur, nxt = D / _BIG, cD / _BIG, Y / _BIG, cY / _BIG, cur / _BIG, nxt / _BIG
        prev, cur = cur, nxt
    return nodes, triple


def _inward(wts: list[float], g: list[float], h: float, match: int) -> tuple[float, float, float]:
    """Sweep from ``r_max`` (U = 0 there) down to the match point."""
    h2 = h * h
    M = len(wts) - 1
    nxt, cur = 0.0, 1e-200
    Y = wts[M - 1] * cur
    D = Y - wts[M] * nxt
    cD = cY = 0.0
    for i in range(M - 1, match - 1, -1):
        t = h2 * g[i] * cur - cD
        s = D + t
        cD = (s - D) - t
        D = s
        t = D - cY
        s = Y + t
        cY = (s - Y) - t
        Y = s
        prev = Y / wts[i - 1]
        if i == match:
            return (prev, cur, nxt)
        if abs(prev) > _BIG:
            D, cD, Y, cY, cur, prev = D / _BIG, cD / _BIG, Y / _BIG, cY / _BIG, cur / _BIG, prev / _BIG
        nxt, cur = cur, prev
    raise AssertionError("inward sweep never reached the matching point")


def _prepare(problem: RadialProblem, config: SolverConfig, E: float):
    r = _mesh(config)
    h = config.step
    wts, g = _numerov_weights(problem, r, E, h)
    return r, h, wts.tolist(), g.tolist(), _turning_index(g)


def integrate_outward(problem: RadialProblem, config: SolverConfig, E: float) -> tuple[int, float]:
    """Node count on ``(r_min, r_match]`` and log-derivative at the match point.

    The match point is the outer classical turning point at energy ``E``.
    """
    r, h, wts, g, match = _prepare(problem, config, E)
    u0, u1 = _regular_seed(problem, E, r[:2])
    nodes, (um, u, up) = _outward(wts[: match + 2], g, h, u0, u1, match)
    return nodes, (up - um) / (2.0 * h * u)


def integrate_inward(problem: RadialProblem, config: SolverConfig, E: float) -> float:
    """Log-derivative at the match point of the solution decaying from ``r_max``."""
    r, h, wts, g, match = _prepare(problem, config, E)
    um, u, up = _inward(wts, g, h, match)
    return (up - um) / (2.0 * h * u)


def matching_defect(
    problem: RadialProblem, config: SolverConfig, E: float, match: int | None = None
) -> float:
    """Outward minus inward log-derivative at the outer turning point.

    Both use the same three mesh values, so the defect vanishes exactly at an
    eigenvalue of the discrete problem.  ``match`` pins the mesh index; by
    default it is the turning point at ``E``.
    """
    r, h, wts, g, turning = _prepare(problem, config, E)
    match = turning if match is None else match
    u0, u1 = _regular_seed(problem, E, r[:2])
    _, (om, o, op) = _outward(wts[: match + 3], g, h, u0, u1, match)
    im, i0, ip = _inward(wts, g, h, match)
    return ((op - om) / o - (ip - im) / i0) / (2.0 * h)


def _node_count(problem: RadialProblem, config: SolverConfig, E: float) -> int:
    r, h, wts, g, match = _prepare(problem, config, E)
    u0, u1 = _regular_seed(problem, E, r[:2])
    return _outward(wts, g, h, u0, u1, match)[0]


def _bisect_nodes(
    problem: RadialProblem, config: SolverConfig, lo: float, hi: float, width: float, it: int = 0
) -> tuple[float, float, int]:
    n = problem.n
    while hi - lo > width:
        it += 1
        if it > config.max_iterations:
            raise ConvergenceError("node-count bisection did not converge", (lo, hi))
        mid = 0.5 * (lo + hi)
        if _node_count(problem, config, mid) <= n:
            lo = mid
        else:
            hi = mid
    return lo, hi, it


def solve_eigenvalue(problem: RadialProblem, config: SolverConfig | None = None) -> float:
    """Energy of the level with ``problem.n`` radial nodes.

    The level is isolated on a mesh ten times coarser (node counts only), then
    refined on the full mesh by a bracketed root search on the matching defect.
    """
    config = default_config(problem) if config is None else config
    n = problem.n
    lo0, hi0 = config.energy_bracket
    coarse = replace(config, mesh_points=max(1000, config.mesh_points // 10))
    if _node_count(problem, coarse, lo0) > n:
        raise NoBoundStateError(f"more than {n} nodes already at E = {lo0}")
    if _node_count(problem, coarse, hi0) <= n:
        raise NoBoundStateError(f"no level with {n} nodes below E = {hi0}")

    # the defect has no poles within ~1e-4 of the initial bracket around a level
    width = max(1e3 * config.tolerance, 1e-4 * (hi0 - lo0))
    lo, hi, it = _bisect_nodes(problem, coarse, lo0, hi0, width)
    lo, hi = max(lo0, lo - width), min(hi0, hi + width)

    match = _prepare(problem, config, 0.5 * (lo + hi))[4]
    d_lo = matching_defect(problem, config, lo, match)
    d_hi = matching_defect(problem, config, hi, match)
    if np.isfinite(d_lo) and np.isfinite(d_hi) and d_lo * d_hi < 0:
        return float(
            brentq(
                lambda e: matching_defect(problem, config, e, match),
                lo,
                hi,
                xtol=config.tolerance,
                rtol=4 * np.finfo(float).eps,
                maxiter=config.max_iterations,
            )
        )
    # no usable sign change: finish on full-mesh node counts alone
    lo, hi, _ = _bisect_nodes(problem, config, lo0, hi0, config.tolerance, it)
    return 0.5 * (lo + hi)


def _sweep_values(wts, g, h, u_first, u_second, indices) -> list[float]:
    """Plain Numerov sweep over ``indices`` storing every value (for plotting/inspection)."""
    h2 = h * h
    i0, i1 = indices[0], indices[1]
    Y = wts[i1] * u_second
    D = Y - wts[i0] * u_first
    cD = cY = 0.0
    out = [u_first, u_second]
    scale_marks = []
    for pos in range(1, len(indices) - 1):
        i, j = indices[pos], indices[pos + 1]
        cur = out[-1]
        t = h2 * g[i] * cur - cD
        s = D + t
        cD = (s - D) - t
        D = s
        t = D - cY
        s = Y + t
        cY = (s - Y) - t
        Y = s
        nxt = Y / wts[j]
        out.append(nxt)
        if abs(nxt) > _BIG:
            D, cD, Y, cY = D / _BIG, cD / _BIG, Y / _BIG, cY / _BIG
            out[-1] = nxt / _BIG
            out[-2] = out[-2] / _BIG
            scale_marks.append(len(out) - 2)
    vals = np.array(out)
    for mark in scale_marks:
        vals[:mark] /= _BIG
    return vals


def count_nodes(u: np.ndarray) -> int:
    """Sign changes of ``u``, ignoring exact zeros."""
    s = np.sign(u[u != 0])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def radial_function(
    problem: RadialProblem, E: float, config: SolverConfig | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Mesh and matched solution ``U(r)`` at energy ``E``, scaled to max |U| = 1."""
    config = default_config(problem) if config is None else config
    r, h, wts, g, match = _prepare(problem, config, E)
    M = len(wts) - 1
    u0, u1 = _regular_seed(problem, E, r[:2])
    out = _sweep_values(wts, g, h, u0, u1, list(range(0, match + 1)))
    inn = _sweep_values(wts, g, h, 0.0, 1e-200, list(range(M, match - 1, -1)))[::-1]
    inn = inn * (out[-1] / inn[0])
    u = np.concatenate([out, inn[1:]])
    u = u / np.max(np.abs(u))
    return r, u
