"""Command-line interface and the on-disk model file format.

Model files are JSON: schema_version, a field description, the objects B and F
with labelled bases, and one row-major matrix of scalar strings per primitive
generator. Scalars are "a/b" or "a" over the rationals and canonical
representatives in [0, p) over a prime field.

Exit codes: 0 all checked axioms pass, 1 at least one fails, 2 malformed input
or evaluation error.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

import click
import numpy as np

from . import catalog as cat
from . import library
from .classify import classify as classify_model
from .diagram import to_sexpr
from .exact import (
    BoundaryMismatch,
    DimensionCapExceeded,
    FieldSpec,
    ObjectSpace,
    SchemaError,
    UnknownGenerator,
)
from .model import (
    DEFAULT_DIMENSION_CAP,
    HopfDatumModel,
    PRIMITIVE_SIGNATURES,
)
from .product import build_product

SCHEMA_VERSION = "1"
DIM_CAP_ENV = "WREATHFORGE_DIM_CAP"


@dataclass(frozen=True)
class CliConfig:
    dimension_cap: int

    def validate_for(self, model: HopfDatumModel) -> None:
        needed = (model.B.dim * model.F.dim) ** 2
        if self.dimension_cap < needed:
            raise SchemaError(
                f"dimension cap {self.dimension_cap} is below the square of the "
                f"product of the declared object dimensions ({needed})"
            )


def _resolve_cap(option_value: int | None) -> int:
    if option_value is not None:
        return option_value
    env = os.environ.get(DIM_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as e:
            raise SchemaError(f"bad {DIM_CAP_ENV} value {env!r}") from e
    return DEFAULT_DIMENSION_CAP


# -- model file format -------------------------------------------------------

def model_to_json(model: HopfDatumModel) -> dict:
    fs = model.field
    generators = {}
    for name, (dom, cod) in PRIMITIVE_SIGNATURES.items():
        mat = model._matrices[name]
        generators[name] = {
            "dom": list(dom),
            "cod": list(cod),
            "matrix": [fs.format_scalar(v) for v in mat.reshape(-1)],
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "field": fs.to_json(),
        "objects": [
            {"name": s.name, "dim": s.dim, "basis_labels": list(s.basis_labels)}
            for s in (model.B, model.F)
        ],
        "generators": generators,
    }


def model_from_json(data: dict, dimension_cap: int = DEFAULT_DIMENSION_CAP
                    ) -> HopfDatumModel:
    if not isinstance(data, dict):
        raise SchemaError("/: model file must be a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(
            f"/schema_version: expected {SCHEMA_VERSION!r}, "
            f"got {data.get('schema_version')!r}"
        )
    fs = FieldSpec.from_json(data.get("field"))
    objects = data.get("objects")
    if not isinstance(objects, list) or len(objects) != 2:
        raise SchemaError("/objects: expected exactly two objects")
    spaces = {}
    for i, o in enumerate(objects):
        if not isinstance(o, dict):
            raise SchemaError(f"/objects/{i}: expected an object")
        try:
            space = ObjectSpace(o["name"], o["dim"], tuple(o["basis_labels"]))
        except (KeyError, TypeError, SchemaError) as e:
            raise SchemaError(f"/objects/{i}: {e}") from e
        spaces[space.name] = space
    if set(spaces) != {"B", "F"}:
        raise SchemaError(f"/objects: names must be B and F, got {sorted(spaces)}")
    gens_json = data.get("generators")
    if not isinstance(gens_json, dict):
        raise SchemaError("/generators: expected an object")
    missing = sorted(set(PRIMITIVE_SIGNATURES) - set(gens_json))
    if missing:
        raise SchemaError(f"/generators: missing {missing}")
    dims = {name: spaces[name].dim for name in spaces}
    matrices = {}
    for name, (dom, cod) in PRIMITIVE_SIGNATURES.items():
        g = gens_json[name]
        path = f"/generators/{name}"
        if not isinstance(g, dict):
            raise SchemaError(f"{path}: expected an object")
        if tuple(g.get("dom", ())) != dom or tuple(g.get("cod", ())) != cod:
            raise SchemaError(
                f"{path}: boundary {g.get('dom')}->{g.get('cod')}, "
                f"expected {list(dom)}->{list(cod)}"
            )
        rows = 1
        for x in cod:
            rows *= dims[x]
        cols = 1
        for x in dom:
            cols *= dims[x]
        flat = g.get("matrix")
        if not isinstance(flat, list) or len(flat) != rows * cols:
            raise SchemaError(
                f"{path}/matrix: expected {rows * cols} scalars, "
                f"got {len(flat) if isinstance(flat, list) else type(flat).__name__}"
            )
        m = np.empty((rows, cols), dtype=object)
        for k, text in enumerate(flat):
            try:
                m[k // cols, k % cols] = fs.parse_scalar(str(text))
            except SchemaError as e:
                raise SchemaError(f"{path}/matrix/{k}: {e}") from e
        matrices[name] = m
    return HopfDatumModel(fs, spaces["B"], spaces["F"], matrices,
                          dimension_cap=dimension_cap)


def load_model(path: str, dimension_cap: int) -> HopfDatumModel:
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"cannot read model file {path}: {e}") from e
    return model_from_json(data, dimension_cap=dimension_cap)


def _parse_field(text: str) -> FieldSpec:
    if text == "q":
        return FieldSpec(FieldSpec.RATIONALS)
    if text.startswith("fp:"):
        try:
            return FieldSpec(FieldSpec.PRIME, int(text[3:]))
        except (ValueError, SchemaError) as e:
            raise SchemaError(f"bad field {text!r}: {e}") from e
    raise SchemaError(f"bad field {text!r}: expected 'q' or 'fp:<p>'")


# -- commands ----------------------------------------------------------------

@click.group()
def main():
    """Exact verifier for crossed-product structure on a pair of objects."""


_EVAL_ERRORS = (SchemaError, BoundaryMismatch, DimensionCapExceeded,
                UnknownGenerator, library.NotAGroup, library.ZeroCocycleValue,
                library.BadCharacteristic)


def _fail2(e: Exception):
    click.echo(f"error: {e}", err=True)
    sys.exit(2)


@main.command()
@click.argument("path", type=click.Path())
@click.option("--suite", "suite_name", default="all", show_default=True,
              help="suite name, or 'all'")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--dimension-cap", type=int, default=None,
              help=f"override the evaluation word-dimension cap "
                   f"(env {DIM_CAP_ENV})")
def check(path, suite_name, fmt, dimension_cap):
    """Check the identity catalog against a model file."""
    try:
        cap = _resolve_cap(dimension_cap)
        model = load_model(path, cap)
        CliConfig(cap).validate_for(model)
        names = list(cat.suites()) if suite_name == "all" else [suite_name]
        for n in names:
            if n not in cat.suites():
                raise SchemaError(f"unknown suite {n!r}; have {list(cat.suites())}")
        reports = [cat.run_suite(n, model) for n in names]
    except _EVAL_ERRORS as e:
        _fail2(e)
    skipped = [r for rep in reports for r in rep.results if r.verdict == "skipped"]
    if skipped:
        for r in skipped:
            click.echo(f"error: {r.axiom_id} skipped: {r.reason}", err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(json.dumps(cat.report_json(model, reports), indent=2))
    else:
        for rep in reports:
            status = "pass" if rep.passed else "FAIL"
            click.echo(f"{rep.suite}: {status} "
                       f"({len(rep.results)} axioms)")
            for r in rep.failures:
                c = r.counterexample
                click.echo(
                    f"  {r.axiom_id}: differs at column {c['column']} "
                    f"row {c['row']}: {c['lhs_entry']} != {c['rhs_entry']}"
                )
    sys.exit(0 if all(rep.passed for rep in reports) else 1)


@main.command(name="classify")
@click.argument("path", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
@click.option("--dimension-cap", type=int, default=None)
def classify_cmd(path, fmt, dimension_cap):
    """Classify a model: signature, admissibility, named construction."""
    try:
        cap = _resolve_cap(dimension_cap)
        model = load_model(path, cap)
        CliConfig(cap).validate_for(model)
        report = classify_model(model)
    except _EVAL_ERRORS as e:
        _fail2(e)
    if fmt == "json":
        click.echo(json.dumps(report.to_json(), indent=2))
    else:
        click.echo(f"signature: {report.signature}")
        click.echo(f"trivalent: {report.is_trivalent}")
        click.echo(f"compatible: {report.compatible}")
        click.echo(f"theorem applies: {report.theorem_applies}")
        click.echo(f"named example: {report.named_example or '(none)'}")
        for suite, ok in report.suite_verdicts.items():
            click.echo(f"  {suite}: {'pass' if ok else 'FAIL'}")
    sys.exit(0 if all(report.suite_verdicts.values()) else 1)


@main.command()
@click.argument("path", type=click.Path())
@click.option("--out", required=True, type=click.Path())
@click.option("--dimension-cap", type=int, default=None)
def construct(path, out, dimension_cap):
    """Build the composite bialgebra on FB and write it as JSON."""
    try:
        cap = _resolve_cap(dimension_cap)
        model = load_model(path, cap)
        CliConfig(cap).validate_for(model)
        p = build_product(model)
    except _EVAL_ERRORS as e:
        _fail2(e)
    fs = model.field
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "composite-bialgebra",
        "field": fs.to_json(),
        "object": {
            "name": p.FB.name,
            "dim": p.FB.dim,
            "basis_labels": list(p.FB.basis_labels),
        },
        "generators": {
            name: [fs.format_scalar(v) for v in lm.entries.reshape(-1)]
            for name, lm in (
                ("mul", p.nabla), ("unit", p.eta),
                ("comul", p.delta), ("counit", p.epsilon),
            )
        },
        "source_model_hash": model.model_hash(),
    }
    with open(out, "w") as f:
        json.dump(doc, f, indent=2)
    click.echo(f"wrote {out}")
    sys.exit(0)


@main.group()
def axioms():
    """Inspect the identity catalog."""


@axioms.command(name="list")
def axioms_list():
    for a in cat.catalog():
        click.echo(f"{a.id}\t{a.suite}\t{a.note}")
    sys.exit(0)


@axioms.command(name="show")
@click.argument("axiom_id")
def axioms_show(axiom_id):
    try:
        a = cat.axiom_by_id(axiom_id)
    except KeyError:
        click.echo(f"error: unknown axiom {axiom_id!r}", err=True)
        sys.exit(2)
    click.echo(f"id: {a.id}")
    click.echo(f"suite: {a.suite}")
    click.echo(f"note: {a.note}")
    if a.hypotheses:
        click.echo(f"hypotheses: {', '.join(a.hypotheses)}")
    click.echo(f"lhs: {to_sexpr(a.lhs)}")
    click.echo(f"rhs: {to_sexpr(a.rhs)}")
    sys.exit(0)


@main.group()
def examples():
    """Built-in example models."""


@examples.command(name="list")
def examples_list():
    for name in sorted(library.EXAMPLES):
        click.echo(name)
    sys.exit(0)


@examples.command(name="emit")
@click.argument("name")
@click.option("--field", "field_text", default="q", show_default=True,
              help="'q' for rationals or 'fp:<p>' for a prime field")
def examples_emit(name, field_text):
    try:
        fs = _parse_field(field_text)
        model = library.example(name, fs)
    except (KeyError, *_EVAL_ERRORS) as e:
        _fail2(e)
    click.echo(json.dumps(model_to_json(model), indent=2))
    sys.exit(0)


if __name__ == "__main__":
    main()
