"""Declarative scenario files: parsing, construction, suite execution.

A scenario is one JSON document naming a field, a group, an algebra and a
partial action, plus the verification suites to run and optional expected
values.  Matrices and vectors are written as row-major arrays whose entries
are exact rational strings ("-3/2") or integers; matrix entry [r][c] is the
coefficient of basis r in the image of basis c.
"""

from __future__ import annotations

import json
import time
from importlib import resources
from pathlib import Path

from . import hopf as hopf_mod
from .actions import (dot_identities_report, global_action,
                      make_partial_action, restrict_global, trivial_from_split)
from .algebras import (center_basis, direct_product, field_algebra,
                       make_algebra, matrix_algebra, product_of_fields)
from .duality import (build_duality, corner_report, decomposition_report,
                      kernel_report, separability_report,
                      skew_injectivity_report)
from .errors import ParseError, ValidationError
from .fields import parse_field
from .groups import cyclic, direct_product as group_product, make_group, symmetric
from .linalg import Mat
from .report import SKIPPED, CheckResult, Report, check
from .skew import build_skew, grading_report, strong_grading_test
from .smash import build_smash, smash_report

SUITES = ("lemma1", "grading", "duality", "separability", "hopf", "centers")

SUITE_DESCRIPTIONS = {
    "lemma1": "evaluation identities of the dot calculus, exhaustively on the basis",
    "grading": "graded structure of the twisted group ring; strong iff global",
    "duality": "matrix map: kernel/image formulas, corner splitting, embeddings",
    "separability": "canonical separating element in the tensor quotient",
    "hopf": "group-algebra lift: Hopf axioms, coaction, partial smash, operator duality",
    "centers": "center dimensions of the algebra, twisted ring, smash and matrix target",
}


def _parse_scalar(field, x):
    if isinstance(x, bool):
        raise ParseError(f"expected a scalar, got boolean {x!r}")
    if isinstance(x, int):
        return field.from_int(x)
    if isinstance(x, str):
        return field.parse(x)
    raise ParseError(f"scalar entries must be integers or exact strings, got {x!r}")


def _parse_vector(field, data, length=None):
    if not isinstance(data, list):
        raise ParseError(f"expected a vector, got {type(data).__name__}")
    vec = tuple(_parse_scalar(field, x) for x in data)
    if length is not None and len(vec) != length:
        raise ParseError(f"vector has length {len(vec)}, expected {length}")
    return vec


def _parse_matrix(field, data, size=None):
    if not isinstance(data, list) or not data:
        raise ParseError("expected a non-empty matrix")
    rows = [_parse_vector(field, row) for row in data]
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("matrix rows have unequal lengths")
    if size is not None and (len(rows) != size or len(rows[0]) != size):
        raise ParseError(f"matrix is {len(rows)}x{len(rows[0])}, expected {size}x{size}")
    return Mat(field, rows)


def build_group(spec):
    if not isinstance(spec, dict):
        raise ParseError("group spec must be an object")
    if "cyclic" in spec:
        return cyclic(int(spec["cyclic"]))
    if "symmetric" in spec:
        return symmetric(int(spec["symmetric"]))
    if "direct_product" in spec:
        parts = spec["direct_product"]
        if len(parts) != 2:
            raise ParseError("group direct_product takes exactly two factors")
        return group_product(build_group(parts[0]), build_group(parts[1]))
    if "table" in spec:
        return make_group(spec["table"], spec.get("labels"))
    raise ParseError(f"unknown group spec {sorted(spec)!r}")


def build_algebra(field, spec):
    if not isinstance(spec, dict):
        raise ParseError("algebra spec must be an object")
    if "product_of_fields" in spec:
        m = int(spec["product_of_fields"])
        if m < 1:
            raise ParseError("product_of_fields needs at least one factor")
        return product_of_fields(field, m)
    if "matrix" in spec:
        size = int(spec["matrix"]["size"])
        return matrix_algebra(field_algebra(field), size)
    if "direct_product" in spec:
        parts = spec["direct_product"]
        if len(parts) != 2:
            raise ParseError("algebra direct_product takes exactly two factors")
        return direct_product(build_algebra(field, parts[0]),
                              build_algebra(field, parts[1]))
    if "constants" in spec:
        constants = spec["constants"]
        d = len(constants)
        table = [[[_parse_scalar(field, constants[i][j][k]) for k in range(d)]
                  for j in range(d)] for i in range(d)]
        unit = _parse_vector(field, spec["unit"], d)
        return make_algebra(field, table, unit, labels=spec.get("labels"))
    raise ParseError(f"unknown algebra spec {sorted(spec)!r}")


def build_action(field, group, algebra, spec):
    if not isinstance(spec, dict):
        raise ParseError("action spec must be an object")
    if "trivial_split" in spec:
        split = spec["trivial_split"]
        left = build_algebra(field, split["left"])
        right = build_algebra(field, split["right"])
        return trivial_from_split(left, right, group)
    if algebra is None:
        raise ParseError("this action spec needs an explicit 'algebra' entry")
    if "restrict_global" in spec:
        data = spec["restrict_global"]
        mats = data["automorphisms"]
        if len(mats) != group.order:
            raise ParseError("need one automorphism matrix per group element")
        parsed = [_parse_matrix(field, m, algebra.dim) for m in mats]
        parent = global_action(group, algebra, parsed)
        e = algebra.element(_parse_vector(field, data["idempotent"], algebra.dim))
        return restrict_global(parent, e)
    if "explicit" in spec:
        data = spec["explicit"]
        idems = [_parse_vector(field, v, algebra.dim) for v in data["idempotents"]]
        betas = [_parse_matrix(field, m, algebra.dim) for m in data["beta"]]
        return make_partial_action(group, algebra, idems, betas)
    raise ParseError(f"unknown action spec {sorted(spec)!r}")


def load_scenario(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: scenario must be a JSON object")
    doc.setdefault("name", path.stem)
    return doc


class _ScenarioRun:
    """Lazily builds the derived structures a suite needs."""

    def __init__(self, action):
        self.action = action
        self._skew = None
        self._smash = None
        self._duality = None
        self._matrix = None

    @property
    def skew(self):
        if self._skew is None:
            self._skew = build_skew(self.action)
        return self._skew

    @property
    def smash(self):
        if self._smash is None:
            self._smash = build_smash(self.skew)
        return self._smash

    @property
    def duality(self):
        if self._duality is None:
            self._duality = build_duality(self.smash)
        return self._duality

    @property
    def matrix(self):
        if self._duality is not None:
            return self._duality.mat
        if self._matrix is None:
            self._matrix = matrix_algebra(self.action.algebra, self.action.group)
        return self._matrix


def _explicit_hopf_checks(field, spec):
    """Validate user-supplied Hopf structure constants and the operator layer."""
    try:
        algebra = build_algebra(field, {"constants": spec["constants"],
                                        "unit": spec["unit"],
                                        "labels": spec.get("labels")})
        d = algebra.dim
        comul = spec["comultiplication"]
        dense = [[[_parse_scalar(field, comul[i][k][l]) for l in range(d)]
                  for k in range(d)] for i in range(d)]
        counit = _parse_vector(field, spec["counit"], d)
        antipode = _parse_matrix(field, spec["antipode"], d)
        data = hopf_mod.make_hopf(algebra, dense, counit, antipode)
    except ValidationError as exc:
        return [check("hopf.explicit_axioms", False, {}, [str(exc)])]
    results = []
    for c in hopf_mod.hopf_data_checks(data):
        results.append(check("hopf.explicit_" + c.name.split(".", 1)[1],
                             c.status == "pass", c.measured, c.witnesses))
    return results


def run_scenario(source, suites=None, field_override=None):
    """Execute a scenario and return its Report.

    Raises ParseError for malformed input and ValidationError when the
    scenario's action data fails an axiom; expectation mismatches and failed
    checks are recorded in the report, not raised.
    """
    doc = load_scenario(source) if not isinstance(source, dict) else dict(source)
    name = doc.get("name", "scenario")

    field_token = field_override or doc.get("field", "q")
    if isinstance(field_token, dict):
        field_token = f"fp:{field_token.get('prime')}"
    field = parse_field(field_token)

    if "group" not in doc:
        raise ParseError("scenario is missing its 'group' entry")
    group = build_group(doc["group"])
    algebra = build_algebra(field, doc["algebra"]) if "algebra" in doc else None
    if "action" not in doc:
        raise ParseError("scenario is missing its 'action' entry")
    action = build_action(field, group, algebra, doc["action"])

    selected = list(suites) if suites else list(doc.get("suites", SUITES))
    if doc.get("hopf_lift") and "hopf" not in selected:
        selected.append("hopf")
    for s in selected:
        if s not in SUITES:
            raise ParseError(f"unknown suite {s!r} (choose from {', '.join(SUITES)})")

    run = _ScenarioRun(action)
    report = Report(name, [])
    measured = {}

    def timed(producer):
        """Attach the group's wall time to its first check (text-only field)."""
        start = time.perf_counter()
        results = producer()
        if results:
            results[0].seconds = time.perf_counter() - start
        report.extend(results)

    measured["algebra_dimension"] = action.algebra.dim
    measured["ideal_dimensions"] = [sp.dim for sp in action.ideals]
    measured["global"] = action.is_global()
    report.checks.append(check(
        "action.axioms", True,
        {"algebra_dimension": measured["algebra_dimension"],
         "ideal_dimensions": str(measured["ideal_dimensions"]),
         "group_order": group.order}))

    if "lemma1" in selected:
        timed(lambda: dot_identities_report(action))

    if "grading" in selected or "duality" in selected or "centers" in selected \
            or "separability" in selected or "hopf" in selected:
        measured["skew_dimension"] = run.skew.dim

    if "grading" in selected:
        timed(lambda: grading_report(run.skew))
        st = strong_grading_test(run.skew)
        measured["strong"] = st["strong"]
        report.checks.append(check(
            "grading.strong_iff_global", st["agree"],
            {"strong": st["strong"], "global": st["global"]}))

    if "duality" in selected or "separability" in selected or "centers" in selected:
        measured["smash_dimension"] = run.smash.dim

    if "duality" in selected:
        timed(lambda: smash_report(run.smash))
        d = run.duality
        measured["kernel_dimension"] = d.kernel.dim
        measured["corner_dimension"] = d.image.dim
        measured["matrix_dimension"] = d.mat.dim
        timed(lambda: kernel_report(d))
        timed(lambda: corner_report(d))
        timed(lambda: decomposition_report(d))
        timed(lambda: skew_injectivity_report(d))

    if "separability" in selected:
        timed(lambda: separability_report(run.smash))

    if "hopf" in selected:
        timed(lambda: hopf_mod.hopf_lift_suite(action, run.skew))

    if "hopf" in doc and isinstance(doc["hopf"], dict):
        timed(lambda: _explicit_hopf_checks(field, doc["hopf"]))

    if "centers" in selected:
        measured["algebra_center_dimension"] = center_basis(action.algebra).dim
        measured["skew_center_dimension"] = center_basis(run.skew.algebra).dim
        measured["smash_center_dimension"] = center_basis(run.smash.algebra).dim
        measured["matrix_center_dimension"] = center_basis(run.matrix).dim
        report.checks.append(check(
            "centers.computed", True,
            {k: measured[k] for k in ("algebra_center_dimension",
                                      "skew_center_dimension",
                                      "smash_center_dimension",
                                      "matrix_center_dimension")}))

    suites_overridden = bool(suites)
    for key in sorted(doc.get("expect", {})):
        want = doc["expect"][key]
        if key not in measured:
            if suites_overridden:
                # the caller deliberately narrowed the run; expectations of
                # skipped suites are not failures
                report.checks.append(CheckResult(
                    f"expect.{key}", SKIPPED, {},
                    [f"{key} is not measured by the selected suites"]))
            else:
                report.checks.append(check(
                    f"expect.{key}", False, {},
                    [f"ExpectationMismatch: {key} was never measured "
                     f"(enable the suite that computes it)"]))
            continue
        got = measured[key]
        ok = got == want
        witnesses = [] if ok else [
            f"ExpectationMismatch: expected {want!r}, measured {got!r}"]
        report.checks.append(check(f"expect.{key}", ok,
                                   {"expected": str(want), "measured": str(got)},
                                   witnesses))
    return report


def bundled_fixtures():
    """Names of the scenario files shipped with the package."""
    base = resources.files("partialskew").joinpath("fixtures")
    return sorted(p.name for p in base.iterdir() if p.name.endswith(".json"))


def fixture_path(name):
    base = resources.files("partialskew").joinpath("fixtures")
    target = base.joinpath(name)
    if not target.is_file():
        raise ParseError(f"no bundled scenario named {name!r}")
    return target
