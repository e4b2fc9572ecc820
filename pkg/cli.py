#!/usr/bin/env python3
"""
Command line front end for the semigroup generation toolkit

Prints root data, fundamental groups of minimal flag manifolds, orbit parity
tables, the generation classification, sl(2) clutching degrees and the
symplectic compression example as text or deterministic JSON.
"""

import argparse
import sys
import traceback
from pathlib import Path

import yaml

# Add current directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

import report_format
from flag_topology import (
    FlagSpec,
    Twist,
    all_roots_crosscheck,
    chamber_roots,
    classify_generating,
    minimal_flag,
    orbit_of,
    orbit_verdict,
    pi1_abelianized,
    pi1_minimal,
    pi1_presentation,
)
from matrix_checks import (
    IdentityFailure,
    PreconditionError,
    compression_check,
    embedding_regularity,
    flow_defect,
    q_monotonicity,
    short_root_block,
    symp_identities,
)
from root_core import (
    ConsistencyError,
    LieType,
    RankDomainError,
    build,
    cartan_matrix,
    dominant_short_root,
    highest_root,
    labeling_note,
    root_count,
    weight_pairing,
    weight_pairing_direct,
    weyl_orbit_count,
)
from sl2_reps import (
    CertificationError,
    DegenerateRepresentationError,
    build_irrep,
    exterior_rep,
    grassmann_degree,
    transition_samples,
    winding_number,
)

PROFILES_DIR = Path(__file__).parent / "profiles"
STATED_OUTCOMES = "stated_outcomes"
FLOW_TIMES = (-2.0, -1.0, 0.0, 1.0, 2.0)
FLOW_TOLERANCE = 1e-9

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_CERTIFICATION = 3
EXIT_IDENTITY = 4


class ProfileError(Exception):
    """Raised when a profile file is missing or malformed."""
    pass


class ChecksFailed(Exception):
    """Raised after a Monte-Carlo report with violations has been printed."""
    pass


def _status(message):
    print(message, file=sys.stderr)


def load_profile(profile_name):
    """Load numerical defaults from profiles/{name}.yaml.

    Requires the 'sl2' and 'sp_example' sections; optional keys inside them
    fall back to the library defaults.
    """
    profile_path = PROFILES_DIR / f"{profile_name}.yaml"

    if not profile_path.exists():
        available = sorted(p.stem for p in PROFILES_DIR.glob("*.yaml") if p.stem != STATED_OUTCOMES) \
            if PROFILES_DIR.exists() else []
        message = f"Profile '{profile_name}' not found at {profile_path}"
        if available:
            message += f" (available profiles: {', '.join(available)})"
        raise ProfileError(message)

    with open(profile_path, 'r') as f:
        config = yaml.safe_load(f) or {}

    for key in ('sl2', 'sp_example'):
        if not isinstance(config.get(key), dict):
            raise ProfileError(f"Profile '{profile_name}' missing required section: '{key}'")

    sl2 = config['sl2']
    sl2.setdefault('min_samples', 1024)
    sl2.setdefault('samples_per_degree', 16)
    sl2.setdefault('parallel_tolerance', 1e-9)
    sl2.setdefault('winding_tolerance', 1e-6)
    sl2.setdefault('soft_cap', 30)
    for key in ('parallel_tolerance', 'winding_tolerance'):
        sl2[key] = float(sl2[key])

    sp = config['sp_example']
    sp.setdefault('samples', 500)
    sp.setdefault('trials', 1000)
    sp.setdefault('t_grid', [0.0, 0.5, 1.0, 2.0])
    sp.setdefault('seed', 0)
    return config


def load_stated_outcomes():
    """Stated generation outcomes per family and orbit, from profiles/stated_outcomes.yaml."""
    claims_path = PROFILES_DIR / f"{STATED_OUTCOMES}.yaml"
    if not claims_path.exists():
        _status(f"⚠️  No stated outcomes found at {claims_path}; agreement records will be empty")
        return {}
    with open(claims_path, 'r') as f:
        data = yaml.safe_load(f) or {}
    return data.get('families', {})


def _lie_type(args):
    return LieType(args.type, args.rank)


def _verdict_payload(v):
    return {
        "flag": v.flag,
        "pairing": v.pairing,
        "parity": v.parity,
        "verdict": v.verdict,
        "pi1": v.pi1,
        "m_alpha_sign": v.m_alpha_sign,
    }


def _summarize_agreement(reports):
    """Fold per-orbit agreement into the envelope's {agrees, note} record."""
    checked = [r for r in reports if r.stated_passes is not None]
    if not checked:
        return None
    notes = [f"{r.orbit}: {r.note}" for r in checked if r.note]
    return {"agrees": all(r.agrees for r in checked), "note": " | ".join(notes)}


def roots_command(args, profile):
    """Handle roots command."""
    lie_type = _lie_type(args)
    sys_ = build(lie_type)
    results = {
        "type": str(lie_type),
        "root_count": len(sys_.all_roots),
        "expected_count": root_count(lie_type),
        "positive_roots": list(sys_.positive_roots),
        "highest_root": highest_root(sys_),
        "dominant_short_root": dominant_short_root(sys_),
        "weyl_orbits": weyl_orbit_count(sys_),
        "cartan_matrix": cartan_matrix(sys_),
        "labeling_note": labeling_note(lie_type),
    }
    return "roots", {"type": args.type, "rank": args.rank}, results, None, report_format.format_roots


def classify_command(args, profile):
    """Handle classify command."""
    lie_type = _lie_type(args)
    sys_ = build(lie_type)
    claims = load_stated_outcomes().get(lie_type.family, {})
    reports = classify_generating(sys_, claims)

    orbits = []
    for r in reports:
        entry = {
            "orbit": r.orbit,
            "root": r.root,
            "passes": r.passes,
            "verdicts": [_verdict_payload(v) for v in r.verdicts],
            "stated": None,
        }
        if r.stated_passes is not None:
            entry["stated"] = {"claim": r.stated_passes, "agrees": r.agrees, "note": r.note}
            if not r.agrees:
                _status(f"⚠️  {lie_type} {r.orbit} orbit: derived verdict differs from the stated outcome")
        orbits.append(entry)

    results = {"type": str(lie_type), "orbits": orbits, "labeling_note": labeling_note(lie_type)}
    if args.all_roots:
        results["all_roots"] = all_roots_crosscheck(sys_)
    agreement = _summarize_agreement(reports)

    def render(payload):
        return report_format.format_classify(payload, agreement)

    inputs = {"type": args.type, "rank": args.rank, "all_roots": args.all_roots}
    return "classify", inputs, results, agreement, render


def _group_name(factors):
    if not factors:
        return "1"
    return " x ".join("Z" if d == 0 else f"Z{d}" for d in factors)


def pi1_command(args, profile):
    """Handle pi1 command (minimal flag by node, or any Θ via --theta)."""
    lie_type = _lie_type(args)
    sys_ = build(lie_type)
    if args.theta is not None and args.node is not None:
        raise RankDomainError("pi1 takes either a node index or --theta, not both")
    if args.theta is not None:
        flag = FlagSpec(sys_, frozenset(args.theta))
    elif args.node is not None:
        flag = minimal_flag(sys_, args.node)
    else:
        raise RankDomainError("pi1 needs a node index or --theta")

    presentation = pi1_presentation(flag)
    factors = pi1_abelianized(flag)
    group = _group_name(factors)
    if flag.is_minimal:
        node = next(j for j in range(1, sys_.rank + 1) if j not in flag.theta)
        rule = pi1_minimal(sys_, node)
        if group != rule.value:
            raise ConsistencyError(f"{lie_type}: rule gives {rule.value}, abelianization gives {group}")

    results = {
        "type": str(lie_type),
        "theta": sorted(flag.theta),
        "minimal": flag.is_minimal,
        "group": group,
        "invariant_factors": factors,
        "generators": list(presentation.generators),
        "relations": [rel.describe() for rel in presentation.relations],
        "epsilons": [[rel.i, rel.j, rel.epsilon] for rel in presentation.relations if isinstance(rel, Twist)],
    }
    inputs = {"type": args.type, "rank": args.rank, "node": args.node, "theta": args.theta}
    return "pi1", inputs, results, None, report_format.format_pi1


def homotopy_table_command(args, profile):
    """Handle homotopy-table command."""
    lie_type = _lie_type(args)
    sys_ = build(lie_type)
    rows = []
    for root in chamber_roots(sys_):
        cells = []
        for j in range(1, sys_.rank + 1):
            direct = weight_pairing_direct(sys_, j, root)
            if direct != weight_pairing(sys_, j, root):
                raise ConsistencyError(f"{lie_type}: pairing paths disagree for {root} at j={j}")
            cells.append(_verdict_payload(orbit_verdict(sys_, root, j)))
        rows.append({"orbit": orbit_of(sys_, root), "root": root, "cells": cells})
    results = {"type": str(lie_type), "flags": list(range(1, sys_.rank + 1)), "rows": rows}
    inputs = {"type": args.type, "rank": args.rank}
    return "homotopy-table", inputs, results, None, report_format.format_homotopy_table


def sl2_command(args, profile):
    """Handle sl2 command."""
    cfg = profile['sl2']
    if args.n > cfg['soft_cap']:
        _status(f"⚠️  n={args.n} is above the soft cap {cfg['soft_cap']}; sampling cost grows with n")
    rep = build_irrep(args.n)
    samples = args.samples or max(cfg['min_samples'], cfg['samples_per_degree'] * args.n)
    clutch = transition_samples(rep, samples, cfg['parallel_tolerance'])
    degree = winding_number(clutch, cfg['winding_tolerance'])
    _status(f"✓ ρ_{args.n}: winding {degree} from {samples} samples")

    results = {
        "n": args.n,
        "samples": samples,
        "degree": degree,
        "max_chart_deviation": clutch.max_residual,
    }
    if args.k is not None:
        ext = exterior_rep(args.n, args.k)
        m = ext.weight
        ext_samples = max(cfg['min_samples'], cfg['samples_per_degree'] * m)
        results["exterior"] = {
            "k": args.k,
            "weight": m,
            "dimension": ext.dimension,
            "span_dim": ext.span_dim,
            "degree": grassmann_degree(args.n, args.k, ext_samples, cfg['parallel_tolerance'], ext=ext),
        }
    inputs = {"n": args.n, "k": args.k, "samples": args.samples}
    return "sl2", inputs, results, None, report_format.format_sl2


def sp_example_command(args, profile):
    """Handle sp-example command."""
    cfg = profile['sp_example']
    l = args.l
    samples = args.samples or cfg['samples']
    seed = cfg['seed'] if args.seed is None else args.seed

    identities = symp_identities(l)
    defects = [{"t": t, "defect": flow_defect(l, t)} for t in FLOW_TIMES]
    monotonicity = q_monotonicity(l, cfg['trials'], seed)
    compression = compression_check(l, samples, cfg['t_grid'], seed)
    blocks = [short_root_block(l, i, j) for i in range(1, l + 1) for j in range(1, l + 1) if i != j]
    for block in blocks:
        if not block["holds"]:
            raise IdentityFailure(f"short-root block ({block['i']}, {block['j']}) is not a Q-isometry in sp")

    flow_ok = all(row["defect"] < FLOW_TOLERANCE for row in defects)
    results = {
        "l": l,
        "identities": identities,
        "flow_defects": defects,
        "flow_ok": flow_ok,
        "monotonicity": monotonicity,
        "compression": compression,
        "short_roots": blocks,
        "passes": flow_ok and monotonicity["passes"] and compression["passes"],
    }
    inputs = {"l": l, "samples": samples, "seed": seed, "trials": cfg['trials'], "t_grid": cfg['t_grid']}
    return "sp-example", inputs, results, None, report_format.format_sp_example


def embedding_command(args, profile):
    """Handle embedding command."""
    results = embedding_regularity(args.family, args.l, args.lambdas)
    inputs = {"family": args.family, "l": args.l, "lambdas": args.lambdas}
    return "embedding", inputs, results, None, report_format.format_embedding


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common(sub):
    sub.add_argument('--format', choices=['text', 'json'], default='text', help='Output format (default: text)')
    sub.add_argument('--profile', default='default', help='Profile name from profiles/ (default: default)')


def build_parser():
    parser = argparse.ArgumentParser(
        description="Semigroup generation toolkit for split real Lie groups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Root data and highest root for E8
  python cli.py roots E 8

  # Which root subgroups pass the parity test on every minimal flag
  python cli.py classify C 4
  python cli.py classify B 3 --all-roots --format json

  # Fundamental group of the minimal flag at node 4
  python cli.py pi1 C 4 4
  python cli.py pi1 A 3 --theta 2

  # Parity table of the chamber roots
  python cli.py homotopy-table F 4

  # Clutching degree of ρ_5, and of Λ^2 C^4
  python cli.py sl2 5
  python cli.py sl2 3 --k 2

  # Symplectic compression semigroup checks
  python cli.py sp-example 3 --samples 1000 --seed 7

  # Regular Cartan element for C3
  python cli.py embedding C 3 --lambdas 3 2 1
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    # Roots command
    roots_parser = subparsers.add_parser('roots', help='Root data, highest root and Cartan matrix')
    roots_parser.add_argument('type', help='Family letter A-G')
    roots_parser.add_argument('rank', type=int, help='Rank')
    roots_parser.set_defaults(handler=roots_command)

    # Classify command
    classify_parser = subparsers.add_parser('classify', help='Classify generating root subgroups')
    classify_parser.add_argument('type', help='Family letter A-G')
    classify_parser.add_argument('rank', type=int, help='Rank')
    classify_parser.add_argument('--all-roots', action='store_true', help='Cross-check every positive root')
    classify_parser.set_defaults(handler=classify_command)

    # Pi1 command
    pi1_parser = subparsers.add_parser('pi1', help='Fundamental group of a flag manifold')
    pi1_parser.add_argument('type', help='Family letter A-G')
    pi1_parser.add_argument('rank', type=int, help='Rank')
    pi1_parser.add_argument('node', type=int, nargs='?', help='Node β of the minimal flag F_{Σ∖{β}}')
    pi1_parser.add_argument('--theta', type=int, nargs='*', help='Arbitrary Θ (simple indices) instead of a node')
    pi1_parser.set_defaults(handler=pi1_command)

    # Homotopy table command
    table_parser = subparsers.add_parser('homotopy-table', help='Parity table of chamber roots over minimal flags')
    table_parser.add_argument('type', help='Family letter A-G')
    table_parser.add_argument('rank', type=int, help='Rank')
    table_parser.set_defaults(handler=homotopy_table_command)

    # Sl2 command
    sl2_parser = subparsers.add_parser('sl2', help='Clutching degree of an sl(2) irrep')
    sl2_parser.add_argument('n', type=_positive_int, help='Highest weight n >= 1')
    sl2_parser.add_argument('--k', type=_positive_int, help='Also treat Λ^k C^{n+1} (1 <= k <= n)')
    sl2_parser.add_argument('--samples', type=_positive_int, help='Circle samples (default: from profile)')
    sl2_parser.set_defaults(handler=sl2_command)

    # Sp example command
    sp_parser = subparsers.add_parser('sp-example', help='Symplectic compression semigroup checks')
    sp_parser.add_argument('l', type=_positive_int, help='Rank l >= 1')
    sp_parser.add_argument('--samples', type=_positive_int, help='Cone samples (default: from profile)')
    sp_parser.add_argument('--seed', type=int, help='Random seed (default: from profile)')
    sp_parser.set_defaults(handler=sp_example_command)

    # Embedding command
    emb_parser = subparsers.add_parser('embedding', help='Regularity of diag(Λ, -Λ) for B, C, D')
    emb_parser.add_argument('family', choices=['B', 'C', 'D'], help='Classical family')
    emb_parser.add_argument('l', type=_positive_int, help='Rank')
    emb_parser.add_argument('--lambdas', type=float, nargs='+', help='Diagonal entries (default: 1..l)')
    emb_parser.set_defaults(handler=embedding_command)

    for sub in subparsers.choices.values():
        _common(sub)
    return parser


def _normalize_lambdas(values):
    """Integral floats from the command line are reported as integers."""
    if values is None:
        return None
    return [int(v) if float(v).is_integer() else v for v in values]


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    if getattr(args, 'lambdas', None) is not None:
        args.lambdas = _normalize_lambdas(args.lambdas)

    try:
        profile = load_profile(args.profile)
        command, inputs, results, agreement, render = args.handler(args, profile)
        report = report_format.envelope(command, inputs, results, agreement)
        if args.format == 'json':
            print(report_format.render_json(report))
        else:
            print(render(report["results"]))
        if command == "sp-example" and not results["passes"]:
            raise ChecksFailed("Monte-Carlo or flow checks reported violations")
        return EXIT_OK
    except (ProfileError, RankDomainError, PreconditionError, DegenerateRepresentationError) as e:
        _status(f"❌ {e}")
        return EXIT_USAGE
    except (CertificationError, ChecksFailed) as e:
        _status(f"❌ Certification failed: {e}")
        return EXIT_CERTIFICATION
    except IdentityFailure as e:
        _status(f"❌ Identity failed: {e}")
        return EXIT_IDENTITY
    except Exception as e:
        _status(f"❌ Unexpected error: {e}")
        traceback.print_exc()
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
