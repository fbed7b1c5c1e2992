"""Assemble verification output: verify rows, the full report document, renderers.

The JSON report is a single object with a top-level schema_version field
and the keys constants, relations, scales, planck_law and epoch. All
rendering is a pure function of the inputs, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

from .evolution import CSV_COLUMNS, CosmoParams, Variant, present_epoch, _row_values
from .planck_law import SpectrumForm, classify_law, mean_mode_energy, wien_scaling_residual
from .registry import ConstantsRegistry
from .relations import Relation, RelationResult, check_relation
from .scales import report_rows

SCHEMA_VERSION = 1

_PLANCK_H = 6.62607015e-27  # erg s; linear-form coefficient used in report checks


def verify_relations(
    relations: list[Relation], reg: ConstantsRegistry, tol_scale: float = 1.0
) -> list[tuple[Relation, RelationResult]]:
    return [(rel, check_relation(rel, reg, tol_scale)) for rel in relations]


def verify_row_dicts(checked: list[tuple[Relation, RelationResult]]) -> list[dict]:
    rows = []
    for rel, res in checked:
        rows.append(
            {
                "id": rel.id,
                "lhs_value": res.lhs_value.value if res.lhs_value else None,
                "rhs_value": res.rhs_value.value if res.rhs_value else None,
                "deviation_decades": res.deviation_decades,
                "tolerance_decades": rel.tolerance_decades,
                "comparator": rel.comparator.value,
                "dim_consistent": res.dim_consistent,
                "passed": res.passed,
                "ref": rel.ref,
            }
        )
    return rows


def render_verify_text(checked: list[tuple[Relation, RelationResult]]) -> str:
    header = f"{'id':<28} {'lhs':>13} {'rhs':>13} {'dev':>8} {'tol':>6}  {'verdict':<7} ref"
    lines = [header, "-" * len(header)]
    for rel, res in checked:
        lhs = f"{res.lhs_value.value:.6e}" if res.lhs_value else "-"
        rhs = f"{res.rhs_value.value:.6e}" if res.rhs_value else "-"
        dev = f"{res.deviation_decades:.4f}" if res.deviation_decades is not None else "-"
        tol = "-" if rel.comparator.value == "<=" else f"{rel.tolerance_decades:g}"
        verdict = "PASS" if res.passed else "FAIL"
        lines.append(f"{rel.id:<28} {lhs:>13} {rhs:>13} {dev:>8} {tol:>6}  {verdict:<7} {rel.ref}")
    passed = sum(1 for _, res in checked if res.passed)
    lines.append(f"{passed}/{len(checked)} relations passed")
    return "\n".join(lines) + "\n"


def render_verify_csv(checked: list[tuple[Relation, RelationResult]]) -> str:
    cols = (
        "id,lhs_value,rhs_value,deviation_decades,tolerance_decades,"
        "comparator,dim_consistent,passed,ref"
    )
    lines = [cols]
    for row in verify_row_dicts(checked):
        lines.append(
            ",".join(
                [
                    row["id"],
                    "" if row["lhs_value"] is None else f"{row['lhs_value']:.9e}",
                    "" if row["rhs_value"] is None else f"{row['rhs_value']:.9e}",
                    "" if row["deviation_decades"] is None else f"{row['deviation_decades']:.9e}",
                    f"{row['tolerance_decades']:.9e}",
                    row["comparator"],
                    str(row["dim_consistent"]).lower(),
                    str(row["passed"]).lower(),
                    '"' + row["ref"] + '"',
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _constants_section(reg: ConstantsRegistry) -> list[dict]:
    return [
        {
            "name": name,
            "value": reg.get(name).value,
            "unit": reg.get(name).dim.unit_string(),
            "provenance": reg.provenance(name),
        }
        for name in reg.names()
    ]


def _planck_law_section(reg: ConstantsRegistry) -> dict:
    k_B = reg.get("k_B").value
    linear = SpectrumForm.linear(_PLANCK_H)
    quadratic = SpectrumForm.power_law(_PLANCK_H / 1e14, 2.0)
    linear_verdict = classify_law(linear, k_boltzmann=k_B)
    quadratic_verdict = classify_law(quadratic, k_boltzmann=k_B)
    return {
        "mean_mode_energy_reference_erg": mean_mode_energy(linear, 1e14, 5000.0, k_B),
        "rayleigh_jeans_residual": abs(
            mean_mode_energy(linear, 1e8, 5000.0, k_B) / (k_B * 5000.0) - 1.0
        ),
        "linear_form": {
            "wien_compatible": linear_verdict.wien_compatible,
            "max_residual": linear_verdict.max_residual,
        },
        "power_law_p2": {
            "wien_compatible": quadratic_verdict.wien_compatible,
            "max_residual": quadratic_verdict.max_residual,
        },
        "p2_residual_at_reference": wien_scaling_residual(quadratic, 1e14, 5000.0, 2.0, k_B),
    }


def _epoch_section(reg: ConstantsRegistry, variant: Variant) -> dict:
    params = CosmoParams.defaults(reg, variant=variant)
    state = present_epoch(params)
    section = dict(zip(CSV_COLUMNS, _row_values(state)))
    section["variant"] = variant.value
    section["N_target"] = params.N_target
    return section


def build_report(
    reg: ConstantsRegistry,
    relations: list[Relation],
    tol_scale: float = 1.0,
    variant: Variant = Variant.EXACT,
) -> dict:
    checked = verify_relations(relations, reg, tol_scale)
    return {
        "schema_version": SCHEMA_VERSION,
        "constants": _constants_section(reg),
        "relations": verify_row_dicts(checked),
        "scales": [
            {"label": r.label, "value": r.value, "unit": r.unit, "note": r.note}
            for r in report_rows(reg)
        ],
        "planck_law": _planck_law_section(reg),
        "epoch": _epoch_section(reg, variant),
    }


def render_report_text(doc: dict) -> str:
    lines = []
    add = lines.append
    add("Fluctuational-cosmology verification report")
    add("=" * 43)
    add("")
    add("## Constants")
    add("")
    add(f"{'name':<6} {'value':>16} {'unit':<22} provenance")
    for row in doc["constants"]:
        add(f"{row['name']:<6} {row['value']:>16.9e} {row['unit']:<22} {row['provenance']}")
    add("")
    add("## Relations")
    sections: dict[str, list[dict]] = {}
    for row in doc["relations"]:
        sections.setdefault(row["id"].split(".", 1)[0], []).append(row)
    for section, rows in sections.items():
        add("")
        add(f"### {section}")
        for row in rows:
            dev = "-" if row["deviation_decades"] is None else f"{row['deviation_decades']:.4f}"
            tol = "-" if row["comparator"] == "<=" else f"{row['tolerance_decades']:g}"
            verdict = "PASS" if row["passed"] else "FAIL"
            add(f"  {verdict:<5} {row['id']:<28} dev={dev:>8} tol={tol:>5}  {row['ref']}")
    add("")
    add("## Characteristic scales")
    add("")
    for row in doc["scales"]:
        add(f"  {row['label']:<28} {row['value']:>16.9e} {row['unit']:<18} {row['note']}")
    add("")
    add("## Mode-energy spectrum checks")
    add("")
    pl = doc["planck_law"]
    add(f"  mean mode energy at nu=1e14 Hz, T=5000 K: {pl['mean_mode_energy_reference_erg']:.9e} erg")
    add(f"  Rayleigh-Jeans residual at nu=1e8 Hz:      {pl['rayleigh_jeans_residual']:.3e}")
    add(
        f"  linear form Wien-compatible:   {pl['linear_form']['wien_compatible']}"
        f" (max residual {pl['linear_form']['max_residual']:.3e})"
    )
    add(
        f"  nu^2 form Wien-compatible:     {pl['power_law_p2']['wien_compatible']}"
        f" (max residual {pl['power_law_p2']['max_residual']:.3e})"
    )
    add("")
    add("## Present epoch")
    add("")
    epoch = doc["epoch"]
    add(f"  variant: {epoch['variant']}   N_target: {epoch['N_target']:.3e}")
    for col in CSV_COLUMNS:
        add(f"  {col:<22} {epoch[col]:.9e}")
    return "\n".join(lines) + "\n"
