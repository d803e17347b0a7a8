"""Floating-point search over all linear maps (not just monomial ones).

The objective is the squared defect of product preservation::

    F(T) = sum_{i<j} |T e_i o T e_j|^2 + sum_i |T e_i o T e_i - T(e_i^2)|^2

Zero is always a root, so the search is restricted to maps bounded away
from 0.  Results are evidence only: failing to find a root proves nothing.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import EvolutionAlgebra
from .errors import DimensionError, SpecError
from .rng import child_seed

CONSTRAINTS = ("unit-frobenius", "unit-rows")
GRAD_TOL = 1e-10
MAX_ITER = 10_000
_ARMIJO = 1e-4
_MAX_HALVINGS = 60


def structure_floats(A: EvolutionAlgebra) -> np.ndarray:
    C = np.zeros((A.n, A.n))
    for i, row in enumerate(A.rows):
        for k, c in row.items():
            C[i, k] = float(c)
    return C


def _batched_residual(T, C, Cp):
    """Residuals of a stack of maps ``T`` with shape (r, n, n); also returns
    the pieces the gradient needs: ``P[r,i,j,l]`` is coordinate l of
    ``Te_i o Te_j`` (diagonal zeroed) and ``Q`` the square defects."""
    n = T.shape[1]
    X = T[:, :, :, None] * Cp[None, None, :, :]          # r,i,k,l
    P = np.matmul(T[:, None, :, :], X)                   # r,i,j,l
    idx = np.arange(n)
    diag = P[:, idx, idx, :].copy()
    P[:, idx, idx, :] = 0.0
    Q = diag - np.matmul(C, T)
    # sum over i<j of the off-diagonal products, written as half the full sum
    F = 0.5 * (P * P).sum(axis=(1, 2, 3)) + (Q * Q).sum(axis=(1, 2))
    return F, P, Q


def _batched_gradient(T, C, Cp, P, Q):
    H = np.matmul(P, Cp.T)                               # r,a,j,b
    g = 2.0 * (H * T[:, None, :, :]).sum(axis=2)
    g += 4.0 * T * np.matmul(Q, Cp.T)
    g -= 2.0 * np.matmul(C.T, Q)
    return g


def _matrices(A, B):
    if A.n != B.n:
        raise DimensionError(f"domain has dimension {A.n}, codomain {B.n}")
    return structure_floats(A), structure_floats(B)


def residual(T, A: EvolutionAlgebra, B: EvolutionAlgebra) -> float:
    C, Cp = _matrices(A, B)
    T = np.asarray(T, dtype=float)
    if T.shape != (A.n, A.n):
        raise DimensionError(f"map has shape {T.shape}, expected {(A.n, A.n)}")
    return float(_batched_residual(T[None], C, Cp)[0][0])


def residual_gradient(T, A: EvolutionAlgebra, B: EvolutionAlgebra) -> np.ndarray:
    C, Cp = _matrices(A, B)
    T = np.asarray(T, dtype=float)[None]
    _, P, Q = _batched_residual(T, C, Cp)
    return _batched_gradient(T, C, Cp, P, Q)[0]


def project(T, constraint: str):
    """Nearest point of the feasible set: ``|T|_F >= 1`` for unit-frobenius,
    every row norm ``>= 1`` for unit-rows.  Works on stacks (r, n, n)."""
    T = np.array(T, dtype=float)
    if constraint == "unit-frobenius":
        norms = np.sqrt((T * T).sum(axis=(-2, -1), keepdims=True))
        scale = np.where(norms < 1.0, 1.0 / np.where(norms > 0, norms, 1.0), 1.0)
        T = T * scale
        zero = (norms == 0).reshape(norms.shape[:-2])
        if zero.any():
            n = T.shape[-1]
            T[zero] = np.eye(n) / np.sqrt(n)
        return T
    if constraint == "unit-rows":
        norms = np.sqrt((T * T).sum(axis=-1, keepdims=True))
        scale = np.where(norms < 1.0, 1.0 / np.where(norms > 0, norms, 1.0), 1.0)
        T = T * scale
        zero = norms[..., 0] == 0
        if zero.any():
            n = T.shape[-1]
            eye = np.broadcast_to(np.eye(n), T.shape)
            T[zero] = eye[zero]
        return T
    raise SpecError(f"unknown constraint {constraint!r}; choose from {', '.join(CONSTRAINTS)}")


@dataclass
class NumericCandidate:
    entries: np.ndarray
    residual: float
    restart_index: int
    converged: bool
    iterations: int = 0

    def to_dict(self) -> dict:
        return {
            "restart_index": self.restart_index,
            "residual": self.residual,
            "converged": self.converged,
            "iterations": self.iterations,
            "entries": self.entries.tolist(),
        }


def initial_points(n: int, restarts: int, seed: int, constraint: str) -> np.ndarray:
    """Restart r draws a standard normal matrix from
    ``numpy.random.default_rng(child_seed(seed, r))``."""
    T = np.stack([np.random.default_rng(child_seed(seed, r)).standard_normal((n, n))
                  for r in range(restarts)])
    return project(T, constraint)


def _descend(T, C, Cp, constraint, max_iter, tol):
    """Projected gradient descent with Armijo backtracking, run on the whole
    stack at once.  Each restart tries a Barzilai-Borwein step first and
    halves it until the sufficient-decrease test passes; restarts stop on
    their own once the projected gradient is below ``tol``."""
    r = T.shape[0]
    step = np.ones(r)
    iters = np.zeros(r, dtype=int)
    converged = np.zeros(r, dtype=bool)
    F, P, Q = _batched_residual(T, C, Cp)
    G = _batched_gradient(T, C, Cp, P, Q)
    active = np.arange(r)
    for _ in range(max_iter):
        Ta, g = T[active], G[active]
        gmap = Ta - project(Ta - g, constraint)
        gnorm = np.sqrt((gmap * gmap).sum(axis=(1, 2)))
        done = gnorm < tol
        converged[active[done]] = True
        active, Ta, g = active[~done], Ta[~done], g[~done]
        if active.size == 0:
            break
        Fa = F[active]
        s = step[active].copy()
        new_T = Ta.copy()
        nF, nP, nQ = Fa.copy(), P[active], Q[active]
        pending = np.arange(active.size)
        for _h in range(_MAX_HALVINGS):
            cand = project(Ta[pending] - s[pending, None, None] * g[pending], constraint)
            cF, cP, cQ = _batched_residual(cand, C, Cp)
            moved = ((cand - Ta[pending]) ** 2).sum(axis=(1, 2))
            ok = cF <= Fa[pending] - _ARMIJO * moved / s[pending]
            hit = pending[ok]
            new_T[hit], nF[hit], nP[hit], nQ[hit] = cand[ok], cF[ok], cP[ok], cQ[ok]
            pending = pending[~ok]
            if pending.size == 0:
                break
            s[pending] *= 0.5
        # a failed line search means the restart is stuck at rounding level
        stuck = np.zeros(active.size, dtype=bool)
        stuck[pending] = True
        ng = _batched_gradient(new_T, C, Cp, nP, nQ)
        dT = (new_T - Ta).reshape(active.size, -1)
        dg = (ng - g).reshape(active.size, -1)
        sy = (dT * dg).sum(axis=1)
        ss = (dT * dT).sum(axis=1)
        bb = np.where(sy > 0, ss / np.where(sy > 0, sy, 1.0), s * 2.0)
        step[active] = np.clip(bb, 1e-12, 1e6)
        T[active], F[active], G[active] = new_T, nF, ng
        P[active], Q[active] = nP, nQ
        iters[active] += 1
        active = active[~stuck]
    return T, F, iters, converged


def numeric_search(A: EvolutionAlgebra, B: EvolutionAlgebra, restarts: int, seed: int,
                   constraint: str = "unit-frobenius", max_iter: int = MAX_ITER,
                   tol: float = GRAD_TOL) -> list:
    """Minimise ``F`` from ``restarts`` seeded random starts on the
    feasible set; candidates come back sorted by (residual, restart)."""
    if restarts < 1:
        raise SpecError("restarts must be >= 1")
    if constraint not in CONSTRAINTS:
        raise SpecError(f"unknown constraint {constraint!r}; choose from {', '.join(CONSTRAINTS)}")
    T0 = initial_points(A.n, restarts, seed, constraint)
    cands = refine(T0, A, B, constraint, max_iter, tol)
    cands.sort(key=lambda c: (c.residual, c.restart_index))
    return cands


def refine(T0, A: EvolutionAlgebra, B: EvolutionAlgebra, constraint: str = "unit-frobenius",
           max_iter: int = MAX_ITER, tol: float = GRAD_TOL) -> list:
    """Run the descent from the given starting maps (shape (r, n, n)),
    returning one candidate per start in input order."""
    C, Cp = _matrices(A, B)
    T0 = project(np.asarray(T0, dtype=float), constraint)
    if T0.ndim != 3 or T0.shape[1:] != (A.n, A.n):
        raise DimensionError(f"starting maps have shape {T0.shape}, expected (r, {A.n}, {A.n})")
    T, F, iters, converged = _descend(T0, C, Cp, constraint, max_iter, tol)
    # report the residual recomputed from the returned entries
    F = _batched_residual(T, C, Cp)[0]
    return [NumericCandidate(T[r].copy(), float(F[r]), r, bool(converged[r]), int(iters[r]))
            for r in range(T.shape[0])]


def search_report(graph: str, direction: str, A, B, restarts: int, seed: int,
                  constraint: str = "unit-frobenius", keep: int = 10) -> dict:
    cands = numeric_search(A, B, restarts, seed, constraint)
    return {
        "graph": graph,
        "direction": direction,
        "restarts": restarts,
        "seed": seed,
        "constraint": constraint,
        "best_residual": cands[0].residual,
        "evidence_only": True,
        "candidates": [c.to_dict() for c in cands[:keep]],
    }
