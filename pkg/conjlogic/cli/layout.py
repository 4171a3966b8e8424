"""
Text and JSON rendering of command results
"""
import json

import pandas as pd

from conjlogic.pauli.parser import format_conjunction, format_prop


def render_json(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _lines(*lines):
    return "\n".join(lines) + "\n"


# =============================================================================
# KERNEL
# =============================================================================

def formula_table_text(df):
    return df.to_string(index=False) + "\n"


def check_text(relation, lhs, rhs, result, names):
    arrow = "⇔" if relation == "equiv" else "⇒"
    head = f"{lhs} {arrow} {rhs}"
    if result.holds:
        return _lines(f"{head}: holds")
    values = ", ".join(f"{names[i]}={v.symbol}" for i, v in sorted(result.counterexample.items()))
    return _lines(f"{head}: fails", f"counterexample: {values}")


def laws_text(report, tables=None):
    summary = pd.DataFrame(
        {
            'law': [v.law_id for v in report.verdicts],
            'name': [v.law.name for v in report.verdicts],
            'holds': ["yes" if v.holds else "no" for v in report.verdicts],
            'counterexamples': [sum(len(f) for f in v.counterexamples) for v in report.verdicts],
        }
    )
    parts = [summary.to_string(index=False)]
    for law_id, df in (tables or {}).items():
        parts.append(f"\n{law_id} {report[law_id].law.name}\n{df.to_string(index=False)}")
    return "\n".join(parts) + "\n"


# =============================================================================
# PROPOSITIONS
# =============================================================================

def reduction_text(result):
    lines = [
        f"relation: {result.relation.value}",
        f"transcript: {result.transcript.render() or '(empty)'}",
    ]
    for stage in result.stages:
        lines.append(f"  {stage.label:<10} {stage.gates.render():<40} -> {format_conjunction(stage.images)}")
    lines.append(f"reduced: {format_conjunction(result.reduced)}")
    return _lines(*lines)


def props_text(props):
    return _lines(*(format_prop(p) for p in props)) if props else ""


def measurement_text(records, state):
    lines = []
    for record in records:
        note = "predicted" if record.predicted else "random"
        lines.append(f"{format_prop(record.measured)} -> {record.outcome} ({note})  {format_prop(record.resulting_prop)}")
    lines.append(f"state: {format_conjunction(state.generators)}")
    return _lines(*lines)


# =============================================================================
# ANALYSES
# =============================================================================

def pm_text(report):
    lines = [f"theory: {report.variant.value}"]
    for row in report.square:
        lines.append("  " + "  ".join(format_prop(p) for p in row))
    for c in report.constraints:
        members = " ∧ ".join(format_prop(p) for p in c.members[:2])
        lines.append(f"{c.name:<9} {members} ⇒ {format_prop(c.prediction)}  parity {c.parity}")
    lines.append(f"parity witness: {report.parity_witness}")
    lines.append(f"satisfiable: {'yes' if report.satisfiable else 'no'}")
    if report.assignment is not None:
        for props, bits in zip(report.square, report.assignment):
            lines.append("  " + "  ".join(f"{p.letters}={b}" for p, b in zip(props, bits)))
    return _lines(*lines)


def consistency_text(report):
    return _lines(
        f"cz: {report.cz.value}",
        f"premise: {format_conjunction(report.premise)}",
        f"reduced: {format_conjunction(report.reduction.reduced)}",
        f"via reduction: {format_prop(report.via_reduction)}",
        f"via CZ triple: {format_prop(report.via_triple_cz)}",
        f"derived: {format_conjunction(report.derived)}",
        f"contradiction: {'yes' if report.contradiction_found else 'no'}",
    )


def bench_text(report):
    closure = "skipped" if report.closure_median is None else f"{report.closure_median * 1e3:.3f} ms"
    return _lines(
        f"n={report.n} generators={report.generators} repetitions={report.repetitions} theory={report.variant.value}",
        f"reduce_set median: {report.reduce_median * 1e3:.3f} ms",
        f"closure median: {closure}",
        f"generator support (median): {report.support:g}" + (" (dense)" if report.dense else ""),
        f"gates per reduction (median): {report.gates}",
        f"throughput: {report.throughput:.3e} gate-row updates/s",
    )
