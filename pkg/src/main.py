import sys
import json
import logging
import argparse
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from src.builders.oracle import oracle_power_pair
from src.exporters.pair_exporter import PairExporter
from src.models.pair import MetricPair, ShiftParam
from src.models.report import Report
from src.models.scalar import GaussianRational, format_scalar, parse_scalar_text, promote
from src.models.superspace import parse_label
from src.types.enums import CheckStatus, Parity, PowerKind, ScalarField
from src.types.errors import MalformedInputError, SuperpowerError
from src.utils.catalog import type_I, type_II, type_III, verify_example_II, verify_example_III
from src.utils.handlers import power_pair
from src.utils.jordan import check_pair, faulkner_from_module, pair_difference, pairs_equal, tensor_shift, unit_pair
from src.utils.liesuper import metric_general_linear
from src.utils.superpowers import dim_power, enum_indices, matrix_power, superminor

# ============================================================
# CONFIGURATION
# ============================================================
LOG_LEVEL = "WARNING"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_MALFORMED = 2

logger = logging.getLogger(__name__)


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )
    logging.getLogger("src").setLevel(level)


# ============================================================
# INPUTS
# ============================================================

def _int_list(text: str, count: int, name: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise MalformedInputError(f"pair name '{name}' needs integer sizes") from exc
    if len(values) != count:
        raise MalformedInputError(f"pair name '{name}' needs {count} size(s)")
    return values


def named_pair(name: str) -> MetricPair:
    """typeI:p,q | typeII:n | typeIII:n | unit | gl11."""
    head, _, args = name.partition(":")
    if head == "typeI":
        return type_I(*_int_list(args, 2, name))
    if head == "typeII":
        return type_II(*_int_list(args, 1, name))
    if head == "typeIII":
        return type_III(*_int_list(args, 1, name))
    if head == "unit" and not args:
        return unit_pair()
    if head == "gl11" and not args:
        return faulkner_from_module(metric_general_linear(1, 1))
    raise MalformedInputError(f"unknown pair name '{name}'")


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"malformed JSON in {path}: {exc.msg}") from exc


def _in_field(grid: np.ndarray, field: ScalarField) -> np.ndarray:
    """Reject Gaussian entries under Q; under Q(i) every entry is promoted."""
    if field is ScalarField.RATIONAL:
        if any(isinstance(v, GaussianRational) for v in grid.flat):
            raise MalformedInputError("Gaussian scalar in a rational computation; pass --field gaussian")
        return grid
    out = np.empty(grid.shape, dtype=object)
    for idx, value in np.ndenumerate(grid):
        out[idx] = promote(value, field)
    return out


def load_pair(args) -> MetricPair:
    if args.file:
        pair = PairExporter.pair_from_json(_read_json(args.file))
    elif args.pair:
        pair = named_pair(args.pair)
    else:
        raise MalformedInputError("a pair is required: --pair NAME or --file PATH")
    field = ScalarField(args.field)
    pair.prod_minus = _in_field(pair.prod_minus, field)
    pair.prod_plus = _in_field(pair.prod_plus, field)
    pair.gram = _in_field(pair.gram, field)
    return pair


# ============================================================
# VERBS
# ============================================================

def cmd_dims(args) -> Tuple[dict, int]:
    return {"dim": dim_power(PowerKind(args.kind), args.d0, args.d1, args.n)}, EXIT_OK


def cmd_enum(args) -> Tuple[dict, int]:
    indices = enum_indices(PowerKind(args.kind), args.d0, args.d1, args.n)
    return {
        "indices": [idx.label for idx in indices],
        "parities": [int(idx.parity) for idx in indices],
    }, EXIT_OK


def _load_matrix(args):
    if not args.file:
        raise MalformedInputError("a supermatrix is required: --file PATH")
    a = PairExporter.matrix_from_json(_read_json(args.file))
    a.entries = _in_field(a.entries, ScalarField(args.field))
    return a


def cmd_minor(args) -> Tuple[dict, int]:
    a = _load_matrix(args)
    rows, cols = parse_label(args.rows), parse_label(args.cols)
    return {"value": format_scalar(superminor(PowerKind(args.kind), a, rows, cols))}, EXIT_OK


def cmd_matpow(args) -> Tuple[dict, int]:
    kind = PowerKind(args.kind)
    a = _load_matrix(args)
    grid = matrix_power(kind, a, args.n)
    label = lambda space: [idx.label for idx in enum_indices(kind, space.d0, space.d1, args.n)]
    return {
        "rows": label(a.rows),
        "cols": label(a.cols),
        "entries": PairExporter.grid_to_json(grid),
    }, EXIT_OK


def cmd_build(args) -> Tuple[dict, int]:
    pair = load_pair(args)
    if args.csv:
        df = PairExporter.products_to_dataframe(pair)
        PairExporter.export_to_csv(df, args.csv)
        logger.info("wrote %d product rows to %s", len(df), args.csv)
    return PairExporter.pair_to_json(pair), EXIT_OK


def cmd_power(args) -> Tuple[dict, int]:
    kind = PowerKind(args.kind)
    pair = load_pair(args)
    built = oracle_power_pair(kind, pair, args.n) if args.oracle else power_pair(kind, pair, args.n)
    return PairExporter.pair_to_json(built), EXIT_OK


def cmd_shift(args) -> Tuple[dict, int]:
    pair = load_pair(args)
    field = ScalarField(args.field)
    lam = _in_field(np.array(parse_scalar_text(args.lam), dtype=object), field).item()
    if args.a not in (0, 1):
        raise MalformedInputError(f"shift parity must be 0 or 1, got {args.a}")
    return PairExporter.pair_to_json(tensor_shift(pair, ShiftParam(lam, Parity(args.a)))), EXIT_OK


def _report_result(report: Report) -> Tuple[dict, int]:
    return PairExporter.report_to_json(report), EXIT_OK if report.status is CheckStatus.PASS else EXIT_FAIL


def cmd_verify(args) -> Tuple[dict, int]:
    return _report_result(check_pair(load_pair(args)))


def cmd_oracle_diff(args) -> Tuple[dict, int]:
    kind = PowerKind(args.kind)
    pair = load_pair(args)
    closed = power_pair(kind, pair, args.n)
    oracle = oracle_power_pair(kind, pair, args.n)
    equal = pairs_equal(closed, oracle)
    doc: Dict[str, Any] = {"equal": equal}
    if not equal and closed.gram.shape == oracle.gram.shape:
        doc["differences"] = pair_difference(closed, oracle)
    return doc, EXIT_OK if equal else EXIT_FAIL


def cmd_examples(args) -> Tuple[dict, int]:
    verify = verify_example_II if args.which == "II" else verify_example_III
    return _report_result(verify(args.n))


VERBS: Dict[str, Callable] = {
    "dims": cmd_dims,
    "enum": cmd_enum,
    "minor": cmd_minor,
    "matpow": cmd_matpow,
    "build": cmd_build,
    "power": cmd_power,
    "shift": cmd_shift,
    "verify": cmd_verify,
    "oracle-diff": cmd_oracle_diff,
    "examples": cmd_examples,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superpowers",
        description="Superpowers of superspaces, Lie supermodules and metric Jordan superpairs.",
    )
    parser.add_argument("--field", choices=[f.value for f in ScalarField], default=ScalarField.RATIONAL.value)
    parser.add_argument("--log-level", default=LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    verbs = parser.add_subparsers(dest="verb", required=True)

    def space_args(p, kinds=("alt", "sym")):
        p.add_argument("--kind", choices=kinds, required=True)
        p.add_argument("--d0", type=int, required=True)
        p.add_argument("--d1", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    def pair_args(p):
        source = p.add_mutually_exclusive_group()
        source.add_argument("--pair", help="typeI:p,q | typeII:n | typeIII:n | unit | gl11")
        source.add_argument("--file", help="JSON pair document")

    space_args(verbs.add_parser("dims", help="dimension of a superpower"))
    space_args(verbs.add_parser("enum", help="canonical index tuples of a superpower"))

    minor = verbs.add_parser("minor", help="superminor of a supermatrix")
    minor.add_argument("--kind", choices=("alt", "sym"), required=True)
    minor.add_argument("--file", required=True, help="JSON supermatrix document")
    minor.add_argument("--rows", required=True, help="row index tuple, e.g. (1,2)")
    minor.add_argument("--cols", required=True, help="column index tuple, e.g. (1,3)")

    matpow = verbs.add_parser("matpow", help="superpower of an even supermatrix")
    matpow.add_argument("--kind", choices=("alt", "sym"), required=True)
    matpow.add_argument("--file", required=True, help="JSON supermatrix document")
    matpow.add_argument("--n", type=int, required=True)

    build = verbs.add_parser("build", help="emit a pair document")
    pair_args(build)
    build.add_argument("--csv", help="also write the product table to this CSV path")

    power = verbs.add_parser("power", help="power of a metric pair")
    pair_args(power)
    power.add_argument("--kind", choices=[k.value for k in PowerKind], required=True)
    power.add_argument("--n", type=int, required=True)
    power.add_argument("--oracle", action="store_true", help="build through the Faulkner route")

    shift = verbs.add_parser("shift", help="tensor shift of a metric pair")
    pair_args(shift)
    shift.add_argument("--lam", required=True, help='exact scalar, e.g. -4, 1/2 or {"re": "0", "im": "1"} with --field gaussian')
    shift.add_argument("--a", type=int, default=0, help="parity of the shift (0 or 1)")

    verify = verbs.add_parser("verify", help="check the metric pair axioms")
    pair_args(verify)

    diff = verbs.add_parser("oracle-diff", help="compare closed-form and Faulkner powers")
    pair_args(diff)
    diff.add_argument("--kind", choices=[k.value for k in PowerKind], required=True)
    diff.add_argument("--n", type=int, required=True)

    examples = verbs.add_parser("examples", help="verify the type II / III identifications")
    examples.add_argument("--which", choices=("II", "III"), required=True)
    examples.add_argument("--n", type=int, required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    # ============================================================
    # LOGGING CONFIGURATION
    # ============================================================
    configure_logging(args.log_level)
    logger.info("%s | field %s", args.verb, args.field)

    try:
        doc, code = VERBS[args.verb](args)
    except MalformedInputError as exc:
        logger.error("malformed input: %s", exc)
        doc, code = {"error": f"malformed input: {exc}"}, EXIT_MALFORMED
    except SuperpowerError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        doc, code = {"error": f"{type(exc).__name__}: {exc}"}, EXIT_MALFORMED

    print(json.dumps(doc, sort_keys=True, ensure_ascii=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
