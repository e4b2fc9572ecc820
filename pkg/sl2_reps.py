#!/usr/bin/env python3
"""
Irreducible representations of sl(2, C) and the clutching degree
Exact integer matrices for ρ_n, the two Bruhat-chart sections of the
tautological line bundle over the highest-weight orbit, the winding number of
their transition function, and the exterior powers Λ^k C^{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np
import sympy as sp

from root_core import ConsistencyError, RankDomainError

DEFAULT_MIN_SAMPLES = 1024
DEFAULT_SAMPLES_PER_DEGREE = 16
MIN_SAMPLES_PER_DEGREE = 8
DEFAULT_PARALLEL_TOLERANCE = 1e-9
DEFAULT_WINDING_TOLERANCE = 1e-6
RESCALE_THRESHOLD = 2.0 ** 512
# coordinates below this lose precision near the subnormal range
NEGLIGIBLE_COORDINATE = 1e-290


class CertificationError(RuntimeError):
    """Raised when a numerical certificate cannot be produced."""
    pass


class DegenerateRepresentationError(CertificationError, ValueError):
    """Raised for n = 0: the trivial representation is excluded."""
    pass


class ChartMismatchError(CertificationError):
    """Raised when the two chart sections are not parallel on the equator."""
    pass


class UndersampledError(CertificationError):
    """Raised when the circle is sampled too coarsely to track the phase."""
    pass


class NonIntegerWindingError(CertificationError):
    """Raised when the accumulated phase is not a multiple of 2π."""
    pass


@dataclass(frozen=True)
class IrrepN:
    n: int
    X: sp.ImmutableMatrix
    H: sp.ImmutableMatrix
    Y: sp.ImmutableMatrix

    @property
    def dim(self):
        return self.n + 1


@dataclass(frozen=True)
class ChartVector:
    """Chart section stored as mantissa·2**exponent with max|mantissa| in [0.5, 1)."""
    mantissa: np.ndarray
    exponent: int
    chart: str

    @property
    def coords(self):
        return _ldexp_complex(self.mantissa, self.exponent)


@dataclass(frozen=True)
class ClutchSamples:
    """a(x_k) = points[k]·2**exponent; exponent is 0 whenever the values fit in float64."""
    n: int
    points: np.ndarray
    max_residual: float
    exponent: int = 0


@dataclass(frozen=True)
class ExteriorRep:
    n: int
    k: int
    dimension: int
    X: sp.ImmutableMatrix
    H: sp.ImmutableMatrix
    Y: sp.ImmutableMatrix
    xi: sp.ImmutableMatrix
    weight: int
    span_dim: int
    restricted: tuple


def bracket_relations_hold(X, H, Y):
    """[H,X] = 2X, [H,Y] = -2Y, [X,Y] = H, checked exactly."""
    zero = sp.zeros(*H.shape)
    return (
        (H * X - X * H - 2 * X) == zero
        and (H * Y - Y * H + 2 * Y) == zero
        and (X * Y - Y * X - H) == zero
    )


def build_irrep(n):
    """ρ_n on C^{n+1} in the basis v_0..v_n (v_0 of highest weight n)."""
    if not isinstance(n, int) or n < 0:
        raise RankDomainError(f"n must be a non-negative integer, got {n!r}")
    if n == 0:
        raise DegenerateRepresentationError("n = 0 gives the trivial representation")
    dim = n + 1
    X = sp.zeros(dim, dim)
    Y = sp.zeros(dim, dim)
    H = sp.diag(*[n - 2 * j for j in range(dim)])
    for j in range(1, dim):
        # X v_j = j(n-j+1) v_{j-1}
        X[j - 1, j] = j * (n - j + 1)
    for j in range(dim - 1):
        # Y v_j = v_{j+1}
        Y[j + 1, j] = 1
    rep = IrrepN(n, sp.ImmutableMatrix(X), sp.ImmutableMatrix(H), sp.ImmutableMatrix(Y))
    if not bracket_relations_hold(rep.X, rep.H, rep.Y):
        raise ConsistencyError(f"ρ_{n} violates the sl(2) bracket relations")
    return rep


def casimir(rep):
    """XY + YX + H^2/2, which acts as n(n+2)/2 on ρ_n."""
    return rep.X * rep.Y + rep.Y * rep.X + rep.H * rep.H / 2


@lru_cache(maxsize=64)
def _as_complex(matrix):
    return np.array(matrix.tolist(), dtype=complex)


def _ldexp_complex(values, exponent):
    """values·2**exponent, overflowing to inf instead of raising."""
    values = np.asarray(values, dtype=complex)
    out = np.empty_like(values)
    with np.errstate(over="ignore"):
        out.real = np.ldexp(values.real, exponent)
        out.imag = np.ldexp(values.imag, exponent)
    return out if out.ndim else out[()]


def _peak_exponent(*vectors):
    peak = max(float(np.max(np.abs(v))) for v in vectors)
    return int(np.frexp(peak)[1])


def _nilpotent_exp_apply(matrix, start, t):
    """e^{tN} applied to a vector as the finite Taylor sum (N nilpotent).

    Returns (mantissa, exponent) with the sum equal to mantissa·2**exponent.
    Partial sums are divided by powers of two whenever they pass
    RESCALE_THRESHOLD, so the factorial growth of ρ_n(X) never overflows.
    """
    N = _as_complex(matrix)
    term = start.astype(complex)
    total = term.copy()
    exponent = 0
    for k in range(1, N.shape[0]):
        term = (N @ term) * t / k
        total = total + term
        if max(np.max(np.abs(term)), np.max(np.abs(total))) > RESCALE_THRESHOLD:
            shift = _peak_exponent(term, total)
            term = _ldexp_complex(term, -shift)
            total = _ldexp_complex(total, -shift)
            exponent += shift
    shift = _peak_exponent(total)
    return _ldexp_complex(total, -shift), exponent + shift


def y_chart(rep, z):
    """χ1(z) = e^{zρ(Y)} v_0 = (1, z, z^2/2!, ..., z^n/n!)."""
    v0 = np.zeros(rep.dim)
    v0[0] = 1.0
    return ChartVector(*_nilpotent_exp_apply(rep.Y, v0, complex(z)), "Y")


def x_chart(rep, w):
    """χ2(w) = e^{wρ(X)} v_n = (p_n(w), ..., p_1(w), 1) with p_1(w) = n·w."""
    vn = np.zeros(rep.dim)
    vn[-1] = 1.0
    return ChartVector(*_nilpotent_exp_apply(rep.X, vn, complex(w)), "X")


def default_samples(n, min_samples=DEFAULT_MIN_SAMPLES, per_degree=DEFAULT_SAMPLES_PER_DEGREE):
    return max(min_samples, per_degree * n)


def _chart_ratio(rep, x, tolerance):
    """(ratio, exponent, deviation) with a(x) = ratio·2**exponent."""
    chi1 = y_chart(rep, 1 / x)
    chi2 = x_chart(rep, x)
    pivot = int(np.argmax(np.abs(chi1.mantissa)))
    ratio = chi2.mantissa[pivot] / chi1.mantissa[pivot]
    fitted = ratio * chi1.mantissa
    scale = np.maximum(np.abs(chi2.mantissa), np.abs(fitted))
    visible = scale > NEGLIGIBLE_COORDINATE
    deviation = float(np.max(np.abs(chi2.mantissa - fitted)[visible] / scale[visible]))
    if not (np.isfinite(ratio) and np.isfinite(deviation)):
        raise ChartMismatchError(f"ρ_{rep.n}: non-finite chart comparison at x={x:.6g}")
    if deviation > tolerance:
        raise ChartMismatchError(
            f"ρ_{rep.n}: chart sections not parallel at x={x:.6g} (relative deviation {deviation:.3e})"
        )
    return ratio, chi2.exponent - chi1.exponent, deviation


def chart_parallelism(rep, x, tolerance=DEFAULT_PARALLEL_TOLERANCE):
    """Scalar a with χ2(x) = a·χ1(1/x), plus the worst coordinatewise relative deviation.

    The scalar is read from the largest-magnitude coordinate of χ1. Coordinates
    negligible against the leading one are left out of the deviation.
    """
    ratio, exponent, deviation = _chart_ratio(rep, x, tolerance)
    a = _ldexp_complex(ratio, exponent)
    if not np.isfinite(a):
        raise CertificationError(
            f"ρ_{rep.n}: clutching scalar n!·x^n exceeds the float64 range; use transition_samples"
        )
    return complex(a), deviation


def transition_samples(rep, M=None, tolerance=DEFAULT_PARALLEL_TOLERANCE):
    """Sample the clutching function a(x) = n!x^n at the M-th roots of unity."""
    if M is None:
        M = default_samples(rep.n)
    if M < MIN_SAMPLES_PER_DEGREE * rep.n:
        raise UndersampledError(
            f"{M} samples cannot resolve a degree-{rep.n} loop (need at least {MIN_SAMPLES_PER_DEGREE * rep.n})"
        )
    ratios = np.empty(M, dtype=complex)
    exponents = np.empty(M, dtype=np.int64)
    worst = 0.0
    for k in range(M):
        x = np.exp(2j * np.pi * k / M)
        ratios[k], exponents[k], deviation = _chart_ratio(rep, x, tolerance)
        worst = max(worst, deviation)
    shared = int(exponents.max())
    points = _ldexp_complex(ratios, exponents - shared)
    values = _ldexp_complex(points, shared)
    if np.all(np.isfinite(values)):
        return ClutchSamples(rep.n, values, worst)
    return ClutchSamples(rep.n, points, worst, shared)


def winding_number(samples, tolerance=DEFAULT_WINDING_TOLERANCE):
    """Total change of argument around the closed sample loop, divided by 2π."""
    points = np.asarray(samples.points if isinstance(samples, ClutchSamples) else samples, dtype=complex)
    if not np.all(np.isfinite(points)):
        raise NonIntegerWindingError("clutching samples must be finite")
    if np.any(points == 0):
        raise NonIntegerWindingError("clutching samples must avoid 0")
    steps = np.angle(np.roll(points, -1) / points)
    if np.any(np.abs(steps) >= np.pi - 1e-12):
        raise UndersampledError(
            f"phase step of {float(np.max(np.abs(steps))):.3f} rad: increase the sample count"
        )
    total = float(np.sum(steps))
    degree = int(round(total / (2 * np.pi)))
    residual = abs(total - 2 * np.pi * degree)
    if residual >= tolerance:
        raise NonIntegerWindingError(f"accumulated phase {total:.9f} is {residual:.2e} away from 2π·{degree}")
    return degree


def exterior_weight(n, k):
    """Sum of the k largest eigenvalues of ρ_n(H), equal to k(n-k+1)."""
    if not 1 <= k <= n:
        raise RankDomainError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    weight = sum(n - 2 * j for j in range(k))
    if weight != k * (n - k + 1):
        raise ConsistencyError(f"eigenvalue sum {weight} != k(n-k+1) for n={n}, k={k}")
    return weight


def _sort_sign(indices):
    """Parity sign of the permutation that sorts indices (all distinct)."""
    inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
    return -1 if inversions % 2 else 1


def _wedge_action(matrix, basis, position):
    """Matrix of a Lie algebra element on Λ^k by the derivation rule."""
    size = matrix.shape[0]
    out = sp.zeros(len(basis), len(basis))
    for col, subset in enumerate(basis):
        for p, s in enumerate(subset):
            for r in range(size):
                entry = matrix[r, s]
                if entry == 0:
                    continue
                if r != s and r in subset:
                    continue
                image = subset[:p] + (r,) + subset[p + 1:]
                out[position[tuple(sorted(image))], col] += _sort_sign(image) * entry
    return sp.ImmutableMatrix(out)


def exterior_rep(n, k):
    """ρ_n on Λ^k C^{n+1} and its restriction to the cyclic span V_k of ξ_k = v_0∧...∧v_{k-1}."""
    weight = exterior_weight(n, k)
    rep = build_irrep(n)
    basis = list(combinations(range(n + 1), k))
    position = {subset: idx for idx, subset in enumerate(basis)}
    X, H, Y = (_wedge_action(m, basis, position) for m in (rep.X, rep.H, rep.Y))

    xi = sp.zeros(len(basis), 1)
    xi[position[tuple(range(k))]] = 1
    xi = sp.ImmutableMatrix(xi)
    if X * xi != sp.zeros(len(basis), 1):
        raise ConsistencyError(f"ρ(X)ξ_{k} != 0 on Λ^{k} C^{n + 1}")
    if H * xi != weight * xi:
        raise ConsistencyError(f"ξ_{k} is not an H-eigenvector of weight {weight}")

    chain = [xi]
    while True:
        nxt = Y * chain[-1]
        if nxt.is_zero_matrix:
            break
        chain.append(nxt)
    B = sp.Matrix.hstack(*chain)
    span_dim = B.rank()

    # Coordinates in the basis Y^j ξ (full column rank): left inverse (B^T B)^{-1} B^T
    left = (B.T * B).inv() * B.T
    restricted = []
    for m in (X, H, Y):
        image = m * B
        coords = left * image
        if B * coords != image:
            raise ConsistencyError(f"V_{k} is not invariant under the Λ^{k} action")
        restricted.append(sp.ImmutableMatrix(coords))
    if not bracket_relations_hold(*restricted):
        raise ConsistencyError(f"restriction to V_{k} violates the sl(2) bracket relations")

    return ExteriorRep(
        n=n,
        k=k,
        dimension=comb(n + 1, k),
        X=X,
        H=H,
        Y=Y,
        xi=xi,
        weight=weight,
        span_dim=span_dim,
        restricted=tuple(restricted),
    )


def induced_irrep(ext):
    """The restriction to V_k written as an IrrepN of highest weight k(n-k+1)."""
    X, H, Y = ext.restricted
    rep = IrrepN(ext.weight, X, H, Y)
    if rep != build_irrep(ext.weight):
        raise ConsistencyError(f"V_{ext.k} in Λ^{ext.k} C^{ext.n + 1} is not ρ_{ext.weight} in the Y^j ξ basis")
    return rep


def grassmann_degree(n, k, M=None, tolerance=DEFAULT_PARALLEL_TOLERANCE, ext=None):
    """Clutching degree of the tautological bundle on G_1·[ξ_k], via the induced irrep on V_k."""
    ext = ext or exterior_rep(n, k)
    rep = induced_irrep(ext)
    return winding_number(transition_samples(rep, M or default_samples(rep.n), tolerance))
