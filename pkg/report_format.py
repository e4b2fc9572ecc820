#!/usr/bin/env python3
"""
Report rendering for the command line
Converts library results into the JSON-safe payloads documented in
SCHEMA.md and renders them either as deterministic JSON or as plain text
tables.
"""

import json
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from root_core import Root

TOOL_VERSION = "1.0.0"
SCHEMA_VERSION = "1"
SIGNIFICANT_DIGITS = 12
RULE = "=" * 80


def root_payload(root):
    if root is None:
        return None
    return {"label": root.label(), "coeffs": list(root.coeffs), "length": root.length_class}


def to_jsonable(value):
    """Recursively convert results to JSON types; floats keep 12 significant digits."""
    if isinstance(value, Root):
        return root_payload(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, complex):
        return [to_jsonable(value.real), to_jsonable(value.imag)]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return [to_jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if is_dataclass(value):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    return value


def envelope(command, inputs, results, agreement=None):
    return {
        "command": command,
        "inputs": to_jsonable(inputs),
        "results": to_jsonable(results),
        "paperAgreement": to_jsonable(agreement),
        "version": TOOL_VERSION,
        "schema": SCHEMA_VERSION,
    }


def render_json(report):
    """Byte-stable JSON: sorted keys, fixed indentation."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def _agreement_lines(agreement):
    if not agreement:
        return []
    mark = "✓" if agreement["agrees"] else "⚠️"
    lines = ["", f"{mark} Agreement with stated outcome: {'yes' if agreement['agrees'] else 'no'}"]
    if agreement.get("note"):
        lines.append(f"  {agreement['note']}")
    return lines


def format_roots(results):
    lines = [RULE, f"ROOT SYSTEM {results['type']}", RULE]
    lines.append(f"Roots: {results['root_count']} (closed form {results['expected_count']})")
    lines.append(f"Positive roots: {len(results['positive_roots'])}")
    lines.append(f"Highest root: {results['highest_root']['label']}  marks {results['highest_root']['coeffs']}")
    short = results["dominant_short_root"]
    lines.append(f"Dominant short root: {short['label'] if short else '-'}")
    lines.append(f"Weyl orbits on roots: {results['weyl_orbits']}")
    lines.append("")
    lines.append("Cartan matrix:")
    for row in results["cartan_matrix"]:
        lines.append("  " + " ".join(f"{x:>3}" for x in row))
    if results.get("labeling_note"):
        lines.append("")
        lines.append(f"Note: {results['labeling_note']}")
    return "\n".join(lines)


def _verdict_cell(cell):
    return f"{cell['pairing']}/{cell['parity'][0]}"


def format_homotopy_table(results):
    flags = results["flags"]
    width = max(len(row["root"]["label"]) for row in results["rows"]) + 10
    lines = [RULE, f"ORBIT PARITIES ON MINIMAL FLAGS {results['type']}", RULE]
    lines.append("Cells show ω_j(H_α^∨)/parity; columns are the minimal flags F_{Σ∖{α_j}}.")
    lines.append("")
    lines.append(" " * width + "".join(f"{'j=' + str(j):>8}" for j in flags))
    for row in results["rows"]:
        head = f"{row['orbit']:<6} {row['root']['label']}"
        lines.append(f"{head:<{width}}" + "".join(f"{_verdict_cell(c):>8}" for c in row["cells"]))
    lines.append("")
    for row in results["rows"]:
        marks = "".join("N" if c["verdict"] == "NotNullHomotopic" else
                        ("0" if c["verdict"] == "NullHomotopic" else "?") for c in row["cells"])
        lines.append(f"{row['orbit']:<6} verdicts: {marks}  (N not null-homotopic, 0 null-homotopic, ? undetermined)")
    return "\n".join(lines)


def format_classify(results, agreement=None):
    lines = [RULE, f"GENERATION CLASSIFICATION {results['type']}", RULE]
    for orbit in results["orbits"]:
        status = "passes" if orbit["passes"] else "fails"
        mark = "✓" if orbit["passes"] else "❌"
        lines.append(f"{mark} {orbit['orbit']} orbit ({orbit['root']['label']}): {status}")
        for cell in orbit["verdicts"]:
            lines.append(f"    flag {cell['flag']}: ω(H^∨)={cell['pairing']} {cell['parity']:<4} "
                         f"π1={cell['pi1']:<2} {cell['verdict']}")
        if orbit.get("stated"):
            stated_entry = orbit["stated"]
            stated = "passes" if stated_entry["claim"] else "fails"
            flag = "agrees" if stated_entry["agrees"] else "DISAGREES"
            lines.append(f"    stated outcome: {stated} ({flag})")
            if stated_entry.get("note"):
                lines.append(f"    {stated_entry['note']}")
    if results.get("labeling_note"):
        lines.append("")
        lines.append(f"Note: {results['labeling_note']}")
    if results.get("all_roots"):
        lines.append("")
        lines.append("All positive roots:")
        for row in results["all_roots"]:
            word = "".join(f"r{i}" for i in reversed(row["word"])) or "id"
            lines.append(f"  {row['root']['label']:<28} {row['orbit']:<6} -> {row['dominant']['label']:<20} "
                         f"via {word:<20} {'passes' if row['passes'] else 'fails'}")
    lines.extend(_agreement_lines(agreement))
    return "\n".join(lines)


def format_pi1(results):
    lines = [RULE, f"FUNDAMENTAL GROUP {results['type']}  Θ = {results['theta']}", RULE]
    lines.append(f"π1 = {results['group']}")
    lines.append(f"Abelianized invariant factors: {results['invariant_factors']}")
    lines.append("")
    lines.append(f"Generators: {', '.join(results['generators'])}")
    lines.append("Relations:")
    for rel in results["relations"]:
        lines.append(f"  {rel}")
    return "\n".join(lines)


def format_sl2(results):
    lines = [RULE, f"sl(2) REPRESENTATION ρ_{results['n']}", RULE]
    lines.append(f"Samples: {results['samples']}")
    lines.append(f"Max chart deviation: {results['max_chart_deviation']:.3e}")
    lines.append(f"Clutching degree: {results['degree']}")
    ext = results.get("exterior")
    if ext:
        lines.append("")
        lines.append(f"Λ^{ext['k']} C^{results['n'] + 1}: dimension {ext['dimension']}")
        lines.append(f"Highest weight k(n-k+1) = {ext['weight']}, cyclic span dimension {ext['span_dim']}")
        lines.append(f"Induced clutching degree: {ext['degree']}")
    return "\n".join(lines)


def _check_line(ok, label, detail=""):
    mark = "✓" if ok else "❌"
    return f"{mark} {label}" + (f": {detail}" if detail else "")


def format_sp_example(results):
    lines = [RULE, f"SYMPLECTIC COMPRESSION EXAMPLE l = {results['l']}", RULE]
    lines.append(_check_line(results["identities"]["holds"], "X^T J + J X = 0 and X^T Q + Q X = 2I"))
    worst = max(row["defect"] for row in results["flow_defects"])
    lines.append(_check_line(results["flow_ok"], "closed-form flow vs expm", f"max defect {worst:.2e}"))
    mono = results["monotonicity"]
    lines.append(_check_line(mono["passes"], "Q(e^{tX}v) strictly increasing",
                             f"{mono['trials']} trials, {len(mono['violations'])} violations, "
                             f"max derivative error {mono['max_relative_error']:.2e}"))
    comp = results["compression"]
    lines.append(_check_line(comp["passes"], "e^{tX} C ⊂ C and block isometries",
                             f"{comp['samples']} samples ({comp['drawn']} drawn), "
                             f"isometry defect {comp['isometry_max_defect']:.2e}"))
    blocks = results["short_roots"]
    lines.append(_check_line(all(b["holds"] for b in blocks), "short-root blocks diag(E_ij, -E_ji)",
                             f"{len(blocks)} pairs"))
    lines.append("")
    lines.append("All checks passed" if results["passes"] else "Some checks FAILED")
    return "\n".join(lines)


def format_embedding(results):
    lines = [RULE, f"CARTAN ELEMENT {results['family']}{results['l']}", RULE]
    lines.append(f"Λ = {results['lambdas']}")
    lines.append(f"Eigenvalues ({results['size']}): {results['eigenvalues']}")
    lines.append(_check_line(results["regular"], "regular (pairwise distinct eigenvalues)")
                 if results["regular"] else "⚠️ not regular: repeated eigenvalues")
    return "\n".join(lines)
