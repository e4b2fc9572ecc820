#!/usr/bin/env python3
"""
Fundamental groups of real flag manifolds and orbit null-homotopy
Generator/relation presentations of π1(F_Θ) for split real forms, the parity
criterion for the rank-one orbits G(α)·b_Θ on minimal flag manifolds, and the
classification of the root subgroups that pass it on every minimal flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from root_core import (
    LONG,
    ConsistencyError,
    RankDomainError,
    dominant_short_root,
    dominantize,
    highest_root,
    killing_number,
    weight_pairing,
)


class Parity(str, Enum):
    EVEN = "Even"
    ODD = "Odd"


class Verdict(str, Enum):
    NOT_NULL_HOMOTOPIC = "NotNullHomotopic"
    NULL_HOMOTOPIC = "NullHomotopic"
    UNDETERMINED = "Undetermined"


class Pi1Group(str, Enum):
    CYCLIC_INFINITE = "Z"
    CYCLIC_TWO = "Z2"


@dataclass(frozen=True)
class FlagSpec:
    system: object
    theta: frozenset

    def __post_init__(self):
        theta = frozenset(self.theta)
        bad = [j for j in theta if not isinstance(j, int) or not 1 <= j <= self.system.rank]
        if bad:
            raise RankDomainError(f"theta contains indices outside 1..{self.system.rank}: {sorted(bad)}")
        object.__setattr__(self, "theta", theta)

    @property
    def is_minimal(self):
        return len(self.theta) == self.system.rank - 1


@dataclass(frozen=True)
class Kill:
    j: int

    def describe(self):
        return f"c{self.j} = 1"


@dataclass(frozen=True)
class Twist:
    i: int
    j: int
    epsilon: int

    def describe(self):
        # c_i c_j c_i⁻¹ c_j^{-ε} = 1
        tail = f"c{self.j}" if self.epsilon == -1 else f"c{self.j}⁻¹"
        return f"c{self.i} c{self.j} c{self.i}⁻¹ {tail} = 1"


@dataclass(frozen=True)
class Pi1Presentation:
    generators: tuple
    relations: tuple


@dataclass(frozen=True)
class HomotopyVerdict:
    flag: int
    pairing: int
    parity: Parity
    verdict: Verdict
    pi1: Pi1Group
    m_alpha_sign: int


@dataclass(frozen=True)
class OrbitReport:
    orbit: str
    root: object
    verdicts: tuple
    passes: bool
    stated_passes: object = None
    agrees: object = None
    note: str = ""


def minimal_flag(sys, beta):
    """The minimal flag manifold F_{Σ∖{β}}."""
    if not isinstance(beta, int) or not 1 <= beta <= sys.rank:
        raise RankDomainError(f"Node {beta!r} out of range 1..{sys.rank} for {sys.type}")
    return FlagSpec(sys, frozenset(range(1, sys.rank + 1)) - {beta})


def epsilon(sys, i, j):
    """ε(α_i, α_j) = (-1)^⟨α_i^∨, α_j⟩ where ⟨α_i^∨, α_j⟩ = 2⟨α_i,α_j⟩/⟨α_i,α_i⟩."""
    if i == j:
        raise RankDomainError("epsilon is defined for distinct simple indices only")
    exponent = killing_number(sys, sys.simple[j - 1], sys.simple[i - 1])
    return -1 if exponent % 2 else 1


def pi1_presentation(flag):
    """Generators c_1..c_l; Kill(j) for j in Θ and a Twist for every ordered pair i != j."""
    sys = flag.system
    l = sys.rank
    relations = [Kill(j) for j in sorted(flag.theta)]
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            if i != j:
                relations.append(Twist(i, j, epsilon(sys, i, j)))
    return Pi1Presentation(
        generators=tuple(f"c{j}" for j in range(1, l + 1)),
        relations=tuple(relations),
    )


def pi1_abelianized(flag):
    """Invariant factors of the abelianized presentation.

    Works over the free abelian group on {c_j : j not in Θ}. A Twist(i, j, -1)
    abelianizes to c_j^2 = 1, a Twist with ε = +1 to nothing. The result lists
    torsion factors (> 1) followed by a 0 for each free summand: [2] is Z2,
    [0] is Z and [] the trivial group.
    """
    sys = flag.system
    free = [j for j in range(1, sys.rank + 1) if j not in flag.theta]
    column = {j: k for k, j in enumerate(free)}

    rows = []
    for rel in pi1_presentation(flag).relations:
        if isinstance(rel, Twist) and rel.epsilon == -1 and rel.j in column:
            row = [0] * len(free)
            row[column[rel.j]] = 2
            rows.append(row)

    if not free:
        return []
    if not rows:
        return [0] * len(free)

    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(rows), len(free)), ZZ)
    nonzero = [abs(int(d)) for d in invariant_factors(matrix) if d != 0]
    torsion = [d for d in nonzero if d != 1]
    return torsion + [0] * (len(free) - len(nonzero))


def pi1_minimal(sys, beta):
    """π1 of the minimal flag at β: Z for A1 and for the long node of C_l, Z2 otherwise.

    B2 is C2 with the nodes swapped, so its long node α1 also gives Z.
    """
    minimal_flag(sys, beta)
    family, l = sys.type.family, sys.rank
    if (family == "A" and l == 1) or (family == "C" and beta == l) or (family == "B" and l == 2 and beta == 1):
        return Pi1Group.CYCLIC_INFINITE
    return Pi1Group.CYCLIC_TWO


def spherical_cover_is_universal(sys, j):
    """True when the spherical orbit of ω_j is the universal (double) cover of the minimal flag."""
    return pi1_minimal(sys, j) == Pi1Group.CYCLIC_TWO


def m_alpha_sign(sys, alpha, j):
    """Sign (-1)^{ω_j(H_α^∨)} of m_α on the highest-weight line of ω_j."""
    return -1 if weight_pairing(sys, j, alpha) % 2 else 1


def orbit_verdict(sys, alpha, j):
    """Parity verdict for G(α)·b on the minimal flag F_{Θ_{ω_j}}."""
    pairing = weight_pairing(sys, j, alpha)
    sign = m_alpha_sign(sys, alpha, j)
    if sign == -1:
        parity, verdict = Parity.ODD, Verdict.NOT_NULL_HOMOTOPIC
    elif spherical_cover_is_universal(sys, j):
        parity, verdict = Parity.EVEN, Verdict.NULL_HOMOTOPIC
    else:
        # even lift closes, but the double cover is not universal here
        parity, verdict = Parity.EVEN, Verdict.UNDETERMINED
    return HomotopyVerdict(
        flag=j,
        pairing=pairing,
        parity=parity,
        verdict=verdict,
        pi1=pi1_minimal(sys, j),
        m_alpha_sign=sign,
    )


def chamber_roots(sys):
    """One root per Weyl orbit in the closed positive chamber: highest root, then the short one."""
    roots = [highest_root(sys)]
    short = dominant_short_root(sys)
    if short is not None:
        roots.append(short)
    return roots


def orbit_of(sys, alpha):
    return "long" if alpha.length_class == LONG else "short"


def verdict_vector(sys, alpha):
    return tuple(orbit_verdict(sys, alpha, j) for j in range(1, sys.rank + 1))


def classify_generating(sys, claims=None):
    """Verdicts of every chamber root over all minimal flags, with agreement against the stated outcomes.

    claims maps orbit name ('long'/'short') to {'passes': bool, 'note': str}
    for this family; orbits without a claim get stated_passes=None.
    """
    claims = claims or {}
    reports = []
    for root in chamber_roots(sys):
        orbit = orbit_of(sys, root)
        verdicts = verdict_vector(sys, root)
        passes = all(v.verdict == Verdict.NOT_NULL_HOMOTOPIC for v in verdicts)
        claim = claims.get(orbit)
        if claim is None:
            reports.append(OrbitReport(orbit, root, verdicts, passes))
            continue
        claimed = bool(claim["passes"])
        note = claim.get("note", "")
        if claimed != passes:
            note = (f"derived verdict ({'passes' if passes else 'fails'}) disagrees with the "
                    f"stated outcome ({'passes' if claimed else 'fails'}). {note}").strip()
        reports.append(OrbitReport(orbit, root, verdicts, passes, claimed, claimed == passes, note))
    return reports


def all_roots_crosscheck(sys):
    """Dominantize every positive root and report its orbit's classification summary."""
    summaries = {orbit_of(sys, r): r for r in chamber_roots(sys)}
    passes = {
        orbit: all(v.verdict == Verdict.NOT_NULL_HOMOTOPIC for v in verdict_vector(sys, root))
        for orbit, root in summaries.items()
    }
    rows = []
    for alpha in sys.positive_roots:
        dominant, word = dominantize(sys, alpha)
        orbit = orbit_of(sys, alpha)
        if summaries.get(orbit) != dominant:
            raise ConsistencyError(
                f"{sys.type}: {alpha} dominantizes to {dominant}, not the {orbit} chamber root"
            )
        rows.append({
            "root": alpha,
            "dominant": dominant,
            "word": tuple(word),
            "orbit": orbit,
            "passes": passes[orbit],
        })
    return rows
