#!/usr/bin/env python3
"""
Root systems with exact arithmetic
Builds the finite irreducible root systems A-G from their Dynkin data and
exposes the pairings (Killing numbers, basic-weight evaluations) that the
flag and classification code consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy as sp

LONG = "Long"
SHORT = "Short"

# Smallest admissible rank per family; E ranks are listed explicitly.
MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}
EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Squared length of a long root. Short roots get 1 (B, C, F) or 2/3 (G).
LONG_LENGTH = Fraction(2)


class RankDomainError(ValueError):
    """Raised when a (family, rank) pair or a node index is not admissible."""
    pass


class ConsistencyError(RuntimeError):
    """Raised when exact arithmetic produces a value the root system forbids."""
    pass


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, "family", family)
        if family not in "ABCDEFG" or len(family) != 1:
            raise RankDomainError(f"Unknown family '{self.family}' (expected one of A-G)")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RankDomainError(f"Rank must be an integer, got {self.rank!r}")
        if family in EXCEPTIONAL_RANKS:
            allowed = EXCEPTIONAL_RANKS[family]
            if self.rank not in allowed:
                raise RankDomainError(
                    f"{family}{self.rank} is not admissible: rank must be one of {list(allowed)}"
                )
        elif self.rank < MIN_RANK[family]:
            raise RankDomainError(
                f"{family}{self.rank} is not admissible: rank must be >= {MIN_RANK[family]}"
            )

    @property
    def simply_laced(self):
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    coeffs: tuple
    length_class: str

    @property
    def is_positive(self):
        return any(c > 0 for c in self.coeffs)

    @property
    def height(self):
        return sum(self.coeffs)

    def label(self):
        """Human-readable form such as 'α1+2α2' (leading '-' for negative roots)."""
        sign = "" if self.is_positive else "-"
        parts = []
        for idx, c in enumerate(self.coeffs, 1):
            c = abs(c)
            if c:
                parts.append(f"α{idx}" if c == 1 else f"{c}α{idx}")
        body = "+".join(parts)
        return f"{sign}({body})" if sign and len(parts) > 1 else f"{sign}{body}"

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class RootSystem:
    type: LieType
    simple: tuple
    all_roots: tuple
    gram: tuple
    cartan: tuple
    basic_weights: tuple
    weight_pairings: tuple
    _by_coeffs: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def rank(self):
        return self.type.rank

    @property
    def positive_roots(self):
        return tuple(r for r in self.all_roots if r.is_positive)

    def lookup(self, coeffs):
        """Return the Root with these coefficients, or None if it is not a root."""
        return self._by_coeffs.get(tuple(coeffs))

    def __contains__(self, root):
        return isinstance(root, Root) and self._by_coeffs.get(root.coeffs) == root

    def __hash__(self):
        return hash(self.type)


def _dynkin_data(lie_type):
    """Squared lengths of the simple roots and the diagram edges (0-based), in the figure's node order."""
    family, l = lie_type.family, lie_type.rank
    long_, short = LONG_LENGTH, Fraction(1)
    chain = [(i, i + 1) for i in range(l - 1)]

    if family == "A":
        return [long_] * l, chain
    if family == "B":
        return [long_] * (l - 1) + [short], chain
    if family == "C":
        return [short] * (l - 1) + [long_], chain
    if family == "D":
        # α_{l-1} and α_l both hang off α_{l-2}
        return [long_] * l, [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    if family == "E":
        # chain of l-1 nodes with the last node attached to the branch point
        branch = {6: 2, 7: 3, 8: 4}[l]
        return [long_] * l, [(i, i + 1) for i in range(l - 2)] + [(branch, l - 1)]
    if family == "F":
        return [long_, long_, short, short], chain
    # G2 in the figure's labels: α1 long, α2 short
    return [long_, Fraction(2, 3)], chain


def _inner(gram, u, v):
    total = Fraction(0)
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = gram[i]
        for j, vj in enumerate(v):
            if vj:
                total += ui * row[j] * vj
    return total


def _as_integer(value, what):
    value = Fraction(value)
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not integral: {value}")
    return int(value)


def inner(sys, u, v):
    """Exact inner product of two coefficient vectors (or Roots) over the simple roots."""
    u = u.coeffs if isinstance(u, Root) else u
    v = v.coeffs if isinstance(v, Root) else v
    return _inner(sys.gram, u, v)


def root_count(lie_type):
    """Closed-form number of roots |Π| for the type."""
    family, l = lie_type.family, lie_type.rank
    if family == "A":
        return l * (l + 1)
    if family in "BC":
        return 2 * l * l
    if family == "D":
        return 2 * l * (l - 1)
    return {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}[str(lie_type)]


def labeling_note(lie_type):
    """Note printed alongside outputs whose node labels differ from Bourbaki's."""
    if lie_type.family == "G":
        return ("G2 nodes follow the diagram figure: α1 is long (highest-root mark 2), "
                "α2 is short (mark 3); Bourbaki numbers them the other way round.")
    return ""


@lru_cache(maxsize=None)
def build(lie_type):
    """Construct the root system by closing the simple roots under the simple reflections."""
    if not isinstance(lie_type, LieType):
        lie_type = LieType(*lie_type)
    l = lie_type.rank
    lengths, edges = _dynkin_data(lie_type)

    gram = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        gram[i][i] = lengths[i]
    for i, j in edges:
        # joined nodes: ⟨α_i, α_j⟩ = -(longer squared length)/2
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2

    # Cartan integers A[i][j] = 2⟨α_i, α_j⟩/⟨α_j, α_j⟩
    cartan = tuple(
        tuple(_as_integer(2 * gram[i][j] / gram[j][j], f"Cartan entry ({i + 1},{j + 1})")
              for j in range(l))
        for i in range(l)
    )

    # Closure: r_i(β) = β - ⟨β, α_i^∨⟩ α_i, with ⟨β, α_i^∨⟩ = Σ_k β_k A[k][i]
    simple_vectors = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    found = set(simple_vectors)
    frontier = list(simple_vectors)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(l):
                pairing = sum(beta[k] * cartan[k][i] for k in range(l))
                if pairing == 0:
                    continue
                image = list(beta)
                image[i] -= pairing
                image = tuple(image)
                if image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt

    by_coeffs = {}
    for coeffs in found:
        if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
            raise ConsistencyError(f"{lie_type}: closure produced a mixed-sign vector {coeffs}")
        norm = _inner(gram, coeffs, coeffs)
        if norm == LONG_LENGTH:
            length_class = LONG
        elif not lie_type.simply_laced and norm == min(lengths):
            length_class = SHORT
        else:
            raise ConsistencyError(f"{lie_type}: root {coeffs} has squared length {norm}")
        by_coeffs[coeffs] = Root(coeffs, length_class)

    expected = root_count(lie_type)
    if len(by_coeffs) != expected:
        raise ConsistencyError(
            f"{lie_type}: closure produced {len(by_coeffs)} roots, closed form says {expected}"
        )

    # Positive roots by height, then their negatives in the same order
    positive = sorted((r for r in by_coeffs.values() if r.is_positive),
                      key=lambda r: (r.height, tuple(-c for c in r.coeffs)))
    ordered = tuple(positive) + tuple(by_coeffs[tuple(-c for c in r.coeffs)] for r in positive)

    basic_weights = _solve_basic_weights(gram, lengths)
    weight_pairings = tuple(
        tuple(_inner(gram, basic_weights[i], simple_vectors[j]) for j in range(l))
        for i in range(l)
    )
    # 2⟨α_i, ω_j⟩/⟨α_i, α_i⟩ = δ_ij
    for i in range(l):
        for j in range(l):
            if 2 * weight_pairings[j][i] / lengths[i] != (1 if i == j else 0):
                raise ConsistencyError(f"{lie_type}: basic weight ω{j + 1} fails duality at α{i + 1}")

    return RootSystem(
        type=lie_type,
        simple=tuple(by_coeffs[v] for v in simple_vectors),
        all_roots=ordered,
        gram=tuple(tuple(row) for row in gram),
        cartan=cartan,
        basic_weights=basic_weights,
        weight_pairings=weight_pairings,
        _by_coeffs=by_coeffs,
    )


def build_type(family, rank):
    """Shorthand for build(LieType(family, rank))."""
    return build(LieType(family, rank))


def _solve_basic_weights(gram, lengths):
    """ω_j in simple-root coordinates: the solution of Gram·x = (⟨α_j,α_j⟩/2)·e_j."""
    l = len(lengths)
    g = sp.Matrix(l, l, lambda i, j: sp.Rational(gram[i][j].numerator, gram[i][j].denominator))
    g_inv = g.inv()
    weights = []
    for j in range(l):
        half = sp.Rational(lengths[j].numerator, lengths[j].denominator) / 2
        column = g_inv[:, j] * half
        weights.append(tuple(Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in column))
    return tuple(weights)


def _require_root(sys, root, name="root"):
    if root not in sys:
        raise RankDomainError(f"{name} {root} is not a root of {sys.type}")


def _require_index(sys, j):
    if not isinstance(j, int) or not 1 <= j <= sys.rank:
        raise RankDomainError(f"Simple index {j!r} out of range 1..{sys.rank} for {sys.type}")


def cartan_matrix(sys):
    return [list(row) for row in sys.cartan]


def basic_weights(sys):
    """ω_1..ω_l in simple-root coordinates."""
    return [list(w) for w in sys.basic_weights]


def killing_number(sys, alpha, beta):
    """2⟨α,β⟩/⟨β,β⟩, i.e. α paired with the coroot of β."""
    _require_root(sys, alpha, "alpha")
    _require_root(sys, beta, "beta")
    value = 2 * inner(sys, alpha, beta) / inner(sys, beta, beta)
    return _as_integer(value, f"Killing number ⟨{alpha}, {beta}^∨⟩")


def weight_pairing(sys, j, alpha):
    """ω_j(H_α^∨) = n_j⟨α_j,α_j⟩/⟨α,α⟩ read off the coefficients of a positive root."""
    _require_index(sys, j)
    _require_root(sys, alpha, "alpha")
    if not alpha.is_positive:
        raise RankDomainError(f"weight_pairing expects a positive root, got {alpha}")
    n_j = alpha.coeffs[j - 1]
    value = n_j * sys.gram[j - 1][j - 1] / inner(sys, alpha, alpha)
    return _as_integer(value, f"ω{j}(H^∨) for {alpha}")


def weight_pairing_direct(sys, j, alpha):
    """2⟨ω_j, α⟩/⟨α,α⟩ evaluated with the solved basic-weight coordinates."""
    _require_index(sys, j)
    _require_root(sys, alpha, "alpha")
    value = 2 * _inner(sys.gram, sys.basic_weights[j - 1], alpha.coeffs) / inner(sys, alpha, alpha)
    return _as_integer(value, f"2⟨ω{j}, {alpha}⟩/⟨{alpha},{alpha}⟩")


def support(alpha):
    """Indices j (1-based) with n_j > 0."""
    if not alpha.is_positive:
        raise RankDomainError(f"support expects a positive root, got {alpha}")
    return frozenset(j for j, c in enumerate(alpha.coeffs, 1) if c > 0)


def is_chamber_closure(sys, alpha):
    """True iff ⟨α, α_i⟩ >= 0 for every simple root (H_α in the closed positive chamber)."""
    _require_root(sys, alpha, "alpha")
    return all(inner(sys, alpha, s) >= 0 for s in sys.simple)


def highest_root(sys):
    """The unique positive root μ such that μ + α_i is never a root."""
    l = sys.rank
    candidates = []
    for root in sys.positive_roots:
        if all(sys.lookup(tuple(c + (1 if k == i else 0) for k, c in enumerate(root.coeffs))) is None
               for i in range(l)):
            candidates.append(root)
    if len(candidates) != 1:
        raise ConsistencyError(f"{sys.type}: found {len(candidates)} maximal roots, expected 1")
    return candidates[0]


def dominant_short_root(sys):
    """The short positive root in the closed positive chamber, or None when simply laced."""
    if sys.type.simply_laced:
        return None
    candidates = [r for r in sys.positive_roots
                  if r.length_class == SHORT and is_chamber_closure(sys, r)]
    if len(candidates) != 1:
        raise ConsistencyError(
            f"{sys.type}: dominance scan found {len(candidates)} short chamber roots, expected 1"
        )
    return candidates[0]


def weyl_orbit_count(sys):
    return 1 if sys.type.simply_laced else 2


def reflect(sys, i, alpha):
    """Simple reflection r_i(α) = α - ⟨α, α_i^∨⟩ α_i."""
    _require_index(sys, i)
    coeffs = list(alpha.coeffs)
    coeffs[i - 1] -= killing_number(sys, alpha, sys.simple[i - 1])
    image = sys.lookup(coeffs)
    if image is None:
        raise ConsistencyError(f"{sys.type}: r{i}({alpha}) = {coeffs} is not a root")
    return image


def dominantize(sys, alpha):
    """Move α into the closed positive chamber by simple reflections.

    Returns (dominant root, word) where word lists the reflection indices in
    the order they were applied.
    """
    _require_root(sys, alpha, "alpha")
    word = []
    current = alpha
    # Each step strictly raises the height of the orbit element; bounded by |Π|
    for _ in range(len(sys.all_roots) + 1):
        negative = [i for i, s in enumerate(sys.simple, 1) if inner(sys, current, s) < 0]
        if not negative:
            return current, word
        current = reflect(sys, negative[0], current)
        word.append(negative[0])
    raise ConsistencyError(f"{sys.type}: dominantizing {alpha} did not terminate")
