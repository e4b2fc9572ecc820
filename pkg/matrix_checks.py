#!/usr/bin/env python3
"""
Matrix certificates for the symplectic compression semigroup
Integer identities for X = [Q] in sp(l, R), the monotone quadratic form
along e^{tX}, Monte-Carlo containment of the cone {Q >= 0}, the short-root
block generators, and regularity of diagonal Cartan elements for the
classical embeddings B_l, C_l, D_l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag, expm

DEFAULT_T_GRID = (0.0, 0.5, 1.0, 2.0)
MONOTONE_GRID = np.linspace(-2.0, 2.0, 41)
FD_STEP = 1e-5
FD_RELATIVE_TOLERANCE = 1e-6
ISOMETRY_TOLERANCE = 1e-9
MAX_REJECTION_DRAWS = 1000


class IdentityFailure(RuntimeError):
    """Raised when an exact integer matrix identity has a nonzero residual."""
    pass


class PreconditionError(ValueError):
    """Raised for bad indices, ranks or eigenvalue parameters."""
    pass


@dataclass(frozen=True)
class SympSetup:
    l: int
    Q: np.ndarray
    J: np.ndarray
    X: np.ndarray


def symp_setup(l):
    """Q = X = [[0,I],[I,0]] and J = [[0,I],[-I,0]] as integer matrices."""
    if not isinstance(l, (int, np.integer)) or l < 1:
        raise PreconditionError(f"l must be a positive integer, got {l!r}")
    I = np.eye(l, dtype=np.int64)
    Z = np.zeros((l, l), dtype=np.int64)
    Q = np.block([[Z, I], [I, Z]])
    J = np.block([[Z, I], [-I, Z]])
    return SympSetup(int(l), Q, J, Q.copy())


def _q(setup, v):
    return float(v @ setup.Q @ v)


def symp_identities(l, X=None):
    """X^T J + J X = 0 and X^T Q + Q X = 2I, exactly."""
    setup = symp_setup(l)
    X = setup.X if X is None else np.asarray(X)
    sp_residual = X.T @ setup.J + setup.J @ X
    derivative_residual = X.T @ setup.Q + setup.Q @ X - 2 * np.eye(2 * setup.l, dtype=np.int64)

    failures = []
    if np.any(sp_residual != 0):
        failures.append("X^T J + J X != 0")
    if np.any(derivative_residual != 0):
        failures.append("X^T Q + Q X != 2I")
    if failures:
        raise IdentityFailure(f"l={setup.l}: " + "; ".join(failures))
    return {
        "l": setup.l,
        "sp_residual": int(np.max(np.abs(sp_residual))),
        "derivative_residual": int(np.max(np.abs(derivative_residual))),
        "holds": True,
    }


def _flow(setup, t):
    return np.cosh(t) * np.eye(2 * setup.l) + np.sinh(t) * setup.X


def flow(l, t):
    """e^{tX} = cosh(t) I + sinh(t) X, valid because X^2 = I."""
    return _flow(symp_setup(l), t)


def flow_defect(l, t):
    """Max-norm distance between the closed-form flow and scipy's expm."""
    setup = symp_setup(l)
    return float(np.max(np.abs(expm(t * setup.X.astype(float)) - flow(l, t))))


def q_along_flow(l, v, t):
    """Q(e^{tX} v)."""
    setup = symp_setup(l)
    return _q(setup, flow(l, t) @ np.asarray(v, dtype=float))


def _unit_vector(rng, size):
    v = rng.standard_normal(size)
    return v / np.linalg.norm(v)


def q_monotonicity(l, trials, seed, grid=None, step=FD_STEP, rel_tol=FD_RELATIVE_TOLERANCE):
    """Check t -> Q(e^{tX}v) is strictly increasing for random unit v.

    Each trial draws from its own generator seeded with seed + trial. The
    derivative 2|e^{tX}v|^2 is also compared with a central finite difference.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    setup = symp_setup(l)
    grid = MONOTONE_GRID if grid is None else np.asarray(grid, dtype=float)

    violations = []
    derivative_violations = []
    worst = 0.0
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        v = _unit_vector(rng, 2 * setup.l)

        def q(t):
            return _q(setup, _flow(setup, t) @ v)

        values = [q(t) for t in grid]
        for k in range(1, len(grid)):
            if not values[k] > values[k - 1]:
                violations.append({"trial": trial, "v": v.tolist(), "t": float(grid[k])})
                break
        for t in grid:
            exact = 2.0 * float(np.sum((_flow(setup, t) @ v) ** 2))
            fd = (q(t + step) - q(t - step)) / (2 * step)
            err = abs(fd - exact) / exact
            worst = max(worst, err)
            if err >= rel_tol:
                derivative_violations.append({"trial": trial, "v": v.tolist(), "t": float(t), "error": err})

    return {
        "l": setup.l,
        "trials": trials,
        "seed": seed,
        "violations": violations,
        "derivative_violations": derivative_violations,
        "max_relative_error": worst,
        "passes": not violations and not derivative_violations,
    }


def _sample_cone(setup, rng):
    """Rejection-sample a unit vector with Q(v) >= 0."""
    for draws in range(1, MAX_REJECTION_DRAWS + 1):
        v = _unit_vector(rng, 2 * setup.l)
        if _q(setup, v) >= 0:
            return v, draws
    raise PreconditionError(f"no point with Q(v) >= 0 after {MAX_REJECTION_DRAWS} draws")


def block_element(A):
    """Y = diag(A, -A^T)."""
    A = np.asarray(A)
    return block_diag(A, -A.T)


def compression_check(l, samples, t_grid=DEFAULT_T_GRID, seed=0):
    """Monte-Carlo certificate that e^{tX} maps C = {Q >= 0} into itself, strictly for t > 0.

    Also checks that e^{tY} is a Q-isometry for one random block Y = diag(A, -A^T)
    with A normalized in Frobenius norm. Sample k draws from its own generator
    seeded with seed + k.
    """
    if samples < 1:
        raise PreconditionError(f"samples must be >= 1, got {samples}")
    t_grid = [float(t) for t in t_grid]
    if any(t < 0 for t in t_grid):
        raise PreconditionError(f"t_grid must be non-negative, got {t_grid}")
    setup = symp_setup(l)

    A = np.random.default_rng(seed).standard_normal((setup.l, setup.l))
    Y = block_element(A / np.linalg.norm(A, "fro"))
    isometries = [expm(t * Y) for t in t_grid]

    violations = []
    drawn = 0
    worst_isometry = 0.0
    for index in range(samples):
        v, draws = _sample_cone(setup, np.random.default_rng(seed + index))
        drawn += draws
        q0 = _q(setup, v)
        for t, g in zip(t_grid, isometries):
            qt = _q(setup, _flow(setup, t) @ v)
            if t == 0 and qt != q0:
                violations.append({"sample": index, "t": t, "kind": "identity", "v": v.tolist()})
            elif t > 0 and not qt > q0:
                violations.append({"sample": index, "t": t, "kind": "strict_increase", "v": v.tolist()})
            defect = abs(_q(setup, g @ v) - q0)
            worst_isometry = max(worst_isometry, defect)
            if defect >= ISOMETRY_TOLERANCE:
                violations.append({"sample": index, "t": t, "kind": "isometry", "v": v.tolist()})

    return {
        "l": setup.l,
        "samples": samples,
        "drawn": drawn,
        "t_grid": t_grid,
        "seed": seed,
        "isometry_max_defect": worst_isometry,
        "violations": violations,
        "passes": not violations,
    }


def block_identities(Y):
    """Residuals of Y^T J + J Y (sp membership) and Y^T Q + Q Y (Q-isometry)."""
    Y = np.asarray(Y)
    if Y.ndim != 2 or Y.shape[0] != Y.shape[1] or Y.shape[0] % 2:
        raise PreconditionError(f"expected a 2l x 2l matrix, got shape {Y.shape}")
    setup = symp_setup(Y.shape[0] // 2)
    sp_residual = float(np.max(np.abs(Y.T @ setup.J + setup.J @ Y)))
    isometry_residual = float(np.max(np.abs(Y.T @ setup.Q + setup.Q @ Y)))
    return {
        "sp_residual": sp_residual,
        "isometry_residual": isometry_residual,
        "symplectic": sp_residual == 0,
        "isometric": isometry_residual == 0,
    }


def short_root_block(l, i, j):
    """Y = diag(E_ij, -E_ji) for the short root λ_i - λ_j."""
    if not (1 <= i <= l and 1 <= j <= l) or i == j:
        raise PreconditionError(f"need 1 <= i != j <= {l}, got i={i}, j={j}")
    A = np.zeros((l, l), dtype=np.int64)
    A[i - 1, j - 1] = 1
    report = block_identities(block_element(A))
    report.update({"l": l, "i": i, "j": j, "holds": report["symplectic"] and report["isometric"]})
    return report


def embedding_regularity(family, l, lambdas=None):
    """Whether diag(Λ, -Λ) (C, D) or diag(0, Λ, -Λ) (B) has pairwise distinct eigenvalues."""
    if family not in ("B", "C", "D"):
        raise PreconditionError(f"family must be one of B, C, D, got {family!r}")
    if not isinstance(l, int) or l < 1:
        raise PreconditionError(f"l must be a positive integer, got {l!r}")
    lambdas = list(range(1, l + 1)) if lambdas is None else list(lambdas)
    if len(lambdas) != l:
        raise PreconditionError(f"expected {l} lambdas, got {len(lambdas)}")
    if len(set(lambdas)) != l:
        raise PreconditionError(f"lambdas must be pairwise distinct, got {lambdas}")

    diagonal = lambdas + [-x for x in lambdas]
    if family == "B":
        diagonal = [0] + diagonal
    element = np.diag(np.array(diagonal, dtype=float))
    trace = float(np.trace(element))
    if trace != 0:
        raise IdentityFailure(f"Cartan element has trace {trace}")

    # diagonal, so the spectrum is read off exactly
    eigenvalues = sorted(float(x) for x in np.diag(element))
    regular = len(set(eigenvalues)) == len(eigenvalues)
    return {
        "family": family,
        "l": l,
        "size": len(diagonal),
        "lambdas": lambdas,
        "eigenvalues": eigenvalues,
        "regular": regular,
    }
