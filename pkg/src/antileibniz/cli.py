"""
Command-line front end.

    antileibniz check algebra lambda21.json
    antileibniz build double ex.json -o double.json
    antileibniz search structures --field gf2 --dim 2 --orbits
    antileibniz catalog show Lambda2_2 --param a=1 --param b=2

Exit status is 0 when every checked identity holds, 1 when one fails and 2
for usage, input or output errors. ``--machine`` prints one JSON document.
"""
import argparse
import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .affine import (
    GradedContext,
    GradedLine,
    check_completed_bialgebra_window,
    check_graded_line_window,
    compatibility_degrees,
)
from .algebra import (
    Algebra,
    check_anti_leibniz,
    check_anticomm_antiassoc,
    check_leibniz,
    check_mock_lie,
    check_right_anti_leibniz,
    check_right_leibniz,
)
from .bialgebra import (
    Bialgebra,
    check_bialgebra,
    check_coalgebra,
    dual_bialgebra,
    equivalence_crosscheck,
)
from .bialgebra.coalgebra import Coalgebra, check_anticocomm_anticoassoc
from .core.field import Field, PrimeField, get_field
from .errors import AntiLeibnizError, BadParameter
from .pairs import (
    MatchedPairData,
    check_matched_pair,
    coregular_bimodule,
    crossed_product,
    form_bimodule_isomorphism,
    standard_manin_triple,
)
from .report import Report
from .rotabaxter import (
    RelativeRB,
    SkewQuadraticRB,
    WeightedRB,
    check_rb_weight,
    check_skew_quadratic,
    delta_I_bialgebra,
    descendent_product,
    factorizable_to_rb,
    rb_to_factorizable,
    relative_rb_to_semidirect_solution,
    sharp_rb_criteria,
)
from .search import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    EXTRAPOLATION_NOTE,
    StructureSearcher,
    certify_symmetric_solutions,
    find_symmetric_solutions,
    orbit_classify,
    orbit_report,
)
from .serialization import dumps, load, to_document
from .suites import DEFAULT_SEED, equivalence_suite
from .tensorconstruct import (
    FIXTURES,
    LeibnizBialgebra,
    QuadraticAA,
    RMatrixFixture,
    aa_policy_report,
    catalog,
    check_leibniz_bialgebra,
    check_quadratic_aa,
    induced_bialgebra,
    list_fixtures,
    tensor_algebra,
)
from .tensorconstruct.leibniz import check_leibniz_coalgebra
from .yangbaxter import Tensor2, classify_r, delta_r, double_bialgebra, ybe_bracket
from .yangbaxter.rmatrix import coefficients

logger = logging.getLogger("antileibniz")

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

BUDGET_HELP = (f"candidate budget; overrides the {BUDGET_ENV} environment variable, "
               f"which overrides the default of {DEFAULT_BUDGET}")

ALGEBRA_LAWS: Dict[str, Callable[[Algebra], Report]] = {
    "anti-leibniz": check_anti_leibniz,
    "right-anti-leibniz": check_right_anti_leibniz,
    "mock-lie": check_mock_lie,
    "leibniz": check_leibniz,
    "right-leibniz": check_right_leibniz,
    "anticomm-antiassoc": check_anticomm_antiassoc,
    "aa-policy": aa_policy_report,
}

COALGEBRA_LAWS: Dict[str, Callable[[Coalgebra], Report]] = {
    "anti-leibniz": check_coalgebra,
    "leibniz": check_leibniz_coalgebra,
    "anticocomm-anticoassoc": check_anticocomm_anticoassoc,
}


class Outcome:
    """What a command hands back: a report and optionally a structure to write."""

    def __init__(self, report: Report, output: Any = None, table: Any = None):
        self.report = report
        self.output = output
        self.table = table


def setup_logging(
        verbose: bool = False,
        log_file: Optional[str] = None
) -> None:
    """
    Console handler for warnings (or debug output with -v) and an optional
     detailed log file.
    """
    console_formatter = logging.Formatter('%(levelname)s: %(message)s')
    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    for handler in list(logger.handlers):
        if getattr(handler, "_antileibniz_cli", False):
            logger.removeHandler(handler)
            handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    console_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    console_handler._antileibniz_cli = True
    logger.addHandler(console_handler)

    if log_file:
        if log_file == "auto":
            log_file = f"antileibniz_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(file_formatter)
        file_handler.setLevel(logging.DEBUG)
        file_handler._antileibniz_cli = True
        logger.addHandler(file_handler)

    logger.setLevel(logging.DEBUG if verbose or log_file else logging.INFO)


def _field(args) -> Optional[Field]:
    return get_field(args.field) if getattr(args, "field", None) else None


def reduce_to(obj: Any, field: Optional[Field]) -> Any:
    """Moves a structure to another field, reducing rational entries mod p."""
    if field is None or getattr(obj, "field", field) is field:
        return obj
    if isinstance(obj, Algebra):
        return Algebra(field.array(obj.sc), field, obj.labels)
    if isinstance(obj, Coalgebra):
        return Coalgebra(field.array(obj.cc), field, obj.labels)
    if isinstance(obj, Bialgebra):
        return Bialgebra(reduce_to(obj.alg, field), reduce_to(obj.coa, field))
    if isinstance(obj, Tensor2):
        return Tensor2(field.array(obj.coeff), field)
    raise BadParameter(f"--field cannot convert a {type(obj).__name__}")


def _read(path: str, kind: Optional[str], args) -> Any:
    """Loads a document and remembers the field it lives over."""
    value = load(path, kind)
    args.fields.append(getattr(value, "field", None))
    return value


def _load(path: str, kind: str, args) -> Any:
    return reduce_to(_read(path, kind, args), _field(args))


def _finite_field_in_play(args) -> bool:
    fields = [*args.fields, _field(args)]
    return any(isinstance(f, PrimeField) for f in fields)


def _sparse(field: Field, tensor: np.ndarray, limit: int = 20) -> List[str]:
    """Nonzero entries as 1-based index tuples with their coefficients."""
    hits = np.argwhere(field.nonzero_mask(tensor))
    out = [f"{tuple(int(i) + 1 for i in idx)}: {field.format(tensor[tuple(idx)])}"
           for idx in hits[:limit]]
    if len(hits) > limit:
        out.append(f"... {len(hits) - limit} more")
    return out


# check

def cmd_check_algebra(args) -> Outcome:
    A = _load(args.input, "algebra", args)
    return Outcome(ALGEBRA_LAWS[args.law](A))


def cmd_check_coalgebra(args) -> Outcome:
    C = _load(args.input, "coalgebra", args)
    law = "leibniz" if args.leibniz else args.law
    return Outcome(COALGEBRA_LAWS[law](C))


def cmd_check_quadratic(args) -> Outcome:
    return Outcome(check_quadratic_aa(_read(args.input, "quadratic", args)))


def cmd_check_form(args) -> Outcome:
    Q: QuadraticAA = _read(args.input, "quadratic", args)
    return Outcome(form_bimodule_isomorphism(Q.alg, Q.form))


def cmd_check_bialgebra(args) -> Outcome:
    return Outcome(check_bialgebra(_load(args.input, "bialgebra", args), strict=args.strict))


def cmd_check_leibniz_bialgebra(args) -> Outcome:
    return Outcome(check_leibniz_bialgebra(_read(args.input, "leibniz_bialgebra", args)))


def cmd_check_matched_pair(args) -> Outcome:
    return Outcome(check_matched_pair(_read(args.input, "matched_pair", args), strict=args.strict))


def cmd_check_crosscheck(args) -> Outcome:
    B = _load(args.input, "bialgebra", args)
    result = equivalence_crosscheck(B.alg, B.coa)
    report = Report("bialgebra, matched pair and Manin triple cross-check")
    report.add("verdicts agree", "bialgebra, matched pair and Manin triple", result.agree,
               {"bialgebra": result.bialgebra, "matched_pair": result.matched_pair,
                "manin": result.manin})
    report.notes.append(f"bialgebra={result.bialgebra}, matched pair={result.matched_pair}, "
                        f"Manin triple={result.manin}")
    return Outcome(report)


def cmd_check_suite(args) -> Outcome:
    return Outcome(equivalence_suite(seed=args.seed, count=args.count,
                                     field=args.field or "Q"))


# build

def cmd_build_double(args) -> Outcome:
    result = double_bialgebra(_load(args.input, "bialgebra", args))
    return Outcome(result.report, output=result.double)


def cmd_build_dual(args) -> Outcome:
    B = _load(args.input, "bialgebra", args)
    dual = dual_bialgebra(B)
    return Outcome(check_bialgebra(dual), output=dual)


def cmd_build_manin(args) -> Outcome:
    B = _load(args.input, "bialgebra", args)
    triple = standard_manin_triple(B.alg, B.coa)
    return Outcome(triple.report, output=triple.total)


def cmd_build_crossed(args) -> Outcome:
    D: MatchedPairData = _read(args.input, "matched_pair", args)
    report = check_matched_pair(D)
    total = crossed_product(D)
    report.extend(check_anti_leibniz(total), prefix="crossed product ")
    return Outcome(report, output=total)


# ybe

def _algebra_and_r(args) -> Tuple[Algebra, Tensor2]:
    value = _read(args.input, None, args)
    if isinstance(value, RMatrixFixture):
        A, r = value.algebra, value.r
    else:
        if args.r is None:
            raise BadParameter("pass --r with an r-matrix file or use an rmatrix document")
        A, r = _read(args.input, "algebra", args), _read(args.r, "r", args)
    field = _field(args)
    return reduce_to(A, field), reduce_to(r, field)


def cmd_ybe_check(args) -> Outcome:
    A, r = _algebra_and_r(args)
    c = classify_r(A, r)
    report = Report("Yang-Baxter classification")
    report.add("Yang-Baxter solution", "Yang-Baxter equation", c.is_solution)
    report.notes.append(f"symmetric={c.is_symmetric}, skew part invariant="
                        f"{c.skew_part_invariant}, quasi-triangular={c.quasi_triangular}, "
                        f"triangular={c.triangular}, factorizable={c.factorizable}")
    if not c.is_solution:
        report.notes.extend(f"bracket {entry}" for entry in _sparse(A.field, ybe_bracket(A, r)))
    if c.bialgebra_report is not None:
        report.extend(c.bialgebra_report, prefix="coboundary ")
    return Outcome(report)


def cmd_ybe_criteria(args) -> Outcome:
    A, r = _algebra_and_r(args)
    form = _read(args.form, "form", args) if args.form else None
    report = sharp_rb_criteria(A, form, r)
    semidirect = relative_rb_to_semidirect_solution(
        RelativeRB(coregular_bimodule(A), coefficients(A, r).T))
    report.extend(semidirect.report, prefix="coregular ")
    return Outcome(report)


def cmd_ybe_delta(args) -> Outcome:
    A, r = _algebra_and_r(args)
    B = Bialgebra(A, delta_r(A, r))
    return Outcome(check_bialgebra(B), output=B)


# rb

def _weight(args, field: Field):
    if args.weight is None:
        raise BadParameter("--lambda is required")
    try:
        return field.parse(args.weight)
    except AntiLeibnizError as e:
        raise BadParameter(f"--lambda {args.weight!r}: {e}") from e


def cmd_rb_check(args) -> Outcome:
    X = _read(args.input, "rb", args)
    if isinstance(X, SkewQuadraticRB):
        return Outcome(check_skew_quadratic(X))
    return Outcome(check_rb_weight(X))


def cmd_rb_descend(args) -> Outcome:
    X: WeightedRB = _read(args.input, "rb", args)
    report = check_rb_weight(X)
    if not report.holds:
        return Outcome(report)
    descendent = descendent_product(X)
    report.extend(check_anti_leibniz(descendent), prefix="descendent ")
    return Outcome(report, output=descendent)


def cmd_rb_from_factorizable(args) -> Outcome:
    A, r = _algebra_and_r(args)
    weight = _weight(args, A.field)
    X = factorizable_to_rb(A, r, weight)
    report = check_skew_quadratic(X)
    report.extend(delta_I_bialgebra(A, r, weight).report)
    return Outcome(report, output=X)


def cmd_rb_to_factorizable(args) -> Outcome:
    X = _read(args.input, "rb", args)
    if not isinstance(X, SkewQuadraticRB):
        raise BadParameter("to-factorizable needs a skew-quadratic document (with gram)")
    r = rb_to_factorizable(X)
    c = classify_r(X.algebra, r)
    report = Report("factorizable r from a Rota-Baxter operator")
    report.add("factorizable", "factorizable r", c.factorizable)
    return Outcome(report, output=RMatrixFixture(X.algebra, r))


# tensor

def cmd_tensor_algebra(args) -> Outcome:
    L, B = _read(args.left, "algebra", args), _read(args.right, "algebra", args)
    A = tensor_algebra(L, B)
    return Outcome(check_anti_leibniz(A), output=A)


def cmd_tensor_bialgebra(args) -> Outcome:
    LB: LeibnizBialgebra = _read(args.left, "leibniz_bialgebra", args)
    Q: QuadraticAA = _read(args.right, "quadratic", args)
    B = induced_bialgebra(LB, Q)
    return Outcome(check_bialgebra(B), output=B)


# affine

def cmd_affine_check(args) -> Outcome:
    G = GradedContext(_load(args.input, "bialgebra", args), args.window)
    report = check_completed_bialgebra_window(G)
    probes = compatibility_degrees(G)
    if probes:
        report.notes.append(f"compatibility probes (i, j, p, q): {len(probes)}, from "
                            f"{probes[0]} to {probes[-1]}")
    else:
        report.notes.append(f"no compatibility probe fits in window {args.window}")
    return Outcome(report)


def cmd_affine_line(args) -> Outcome:
    field = _field(args) or get_field("Q")
    try:
        c, w = field.parse(args.scale), field.parse(args.pairing)
    except AntiLeibnizError as e:
        raise BadParameter(f"--scale/--pairing: {e}") from e
    line = GradedLine(field, product=lambda i, j: c, pairing=lambda i: w,
                      name=f"graded line c={field.format(c)}, w={field.format(w)}")
    return Outcome(check_graded_line_window(line, args.window))


# search

def cmd_search_structures(args) -> Outcome:
    if not args.field:
        raise BadParameter("search needs --field, e.g. --field gf2")
    mask = None
    if args.mask:
        mask = np.asarray(json.loads(Path(args.mask).read_text()), dtype=bool)
    searcher = StructureSearcher(args.field, args.dim, budget=args.budget,
                                 workers=args.workers, mask=mask)
    result = searcher.search()
    report = result.report()
    table = result.summary()
    if args.orbits:
        representatives = orbit_classify(result.algebras, searcher.field, budget=args.budget)
        report.extend(orbit_report(representatives, searcher.field))
    return Outcome(report, output=result.algebras, table=table)


def cmd_search_ybe(args) -> Outcome:
    if not args.field:
        raise BadParameter("search ybe needs --field, e.g. --field gf3")
    A = _load(args.input, "algebra", args)
    solutions = find_symmetric_solutions(A, budget=args.budget)
    report = certify_symmetric_solutions(A, solutions)
    return Outcome(report, output=solutions)


# catalog

def _fixture_params(pairs: Sequence[str]) -> Dict[str, str]:
    params = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise BadParameter(f"--param expects name=value, got {pair!r}")
        name, value = pair.split("=", 1)
        params[name.strip()] = value.strip()
    return params


def cmd_catalog_list(args) -> Outcome:
    report = Report("catalog")
    report.notes.append(f"{len(FIXTURES)} fixtures")
    return Outcome(report, table=list_fixtures())


def cmd_catalog_show(args) -> Outcome:
    value = catalog(args.name, **_fixture_params(args.param))
    report = Report(f"fixture {args.name}")
    report.notes.append(FIXTURES[args.name].description)
    return Outcome(report, output=value)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", default=None,
                        help="field: Q or GF(p) (gf2, gf3, ...)")
    parser.add_argument("--machine", action="store_true",
                        help="print one JSON document instead of text")
    parser.add_argument("-o", "--output", default=None, help="write the result here")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--log-file", default=None,
                        help="also log to this file ('auto' for a timestamped name)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antileibniz",
        description="Exact checks and constructions for anti-Leibniz algebras, "
                    "coalgebras and bialgebras."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def leaf(group, name, handler, help_text):
        sub = group.add_parser(name, help=help_text)
        _common(sub)
        sub.set_defaults(handler=handler)
        return sub

    check = verbs.add_parser("check", help="verify identities").add_subparsers(
        dest="subverb", required=True)
    sub = leaf(check, "algebra", cmd_check_algebra, "check an algebra law")
    sub.add_argument("input")
    sub.add_argument("--law", choices=sorted(ALGEBRA_LAWS), default="anti-leibniz")
    sub = leaf(check, "coalgebra", cmd_check_coalgebra, "check the co-identity")
    sub.add_argument("input")
    sub.add_argument("--law", choices=sorted(COALGEBRA_LAWS), default="anti-leibniz")
    sub.add_argument("--leibniz", action="store_true", help="same as --law leibniz")
    sub = leaf(check, "bialgebra", cmd_check_bialgebra, "check a bialgebra")
    sub.add_argument("input")
    sub.add_argument("--strict", action="store_true")
    sub = leaf(check, "quadratic", cmd_check_quadratic,
               "check an anti-commutative anti-associative algebra with its form")
    sub.add_argument("input", help="quadratic document (products and gram)")
    sub = leaf(check, "form", cmd_check_form,
               "compare skew-style invariance with the regular-coregular isomorphism")
    sub.add_argument("input", help="quadratic document (products and gram)")
    sub = leaf(check, "leibniz-bialgebra", cmd_check_leibniz_bialgebra,
               "check a Leibniz bialgebra")
    sub.add_argument("input")
    sub = leaf(check, "matched-pair", cmd_check_matched_pair, "check a matched pair")
    sub.add_argument("input")
    sub.add_argument("--strict", action="store_true")
    sub = leaf(check, "crosscheck", cmd_check_crosscheck,
               "compare bialgebra, matched pair and Manin triple verdicts")
    sub.add_argument("input")
    sub = leaf(check, "suite", cmd_check_suite, "seeded random equivalence suite")
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--count", type=int, default=200)

    build = verbs.add_parser("build", help="run a construction").add_subparsers(
        dest="subverb", required=True)
    for name, handler, text in (
            ("double", cmd_build_double, "double of a bialgebra"),
            ("dual", cmd_build_dual, "dual bialgebra"),
            ("manin", cmd_build_manin, "standard Manin triple algebra"),
            ("crossed", cmd_build_crossed, "crossed product of a matched pair"),
    ):
        leaf(build, name, handler, text).add_argument("input")

    ybe = verbs.add_parser("ybe", help="Yang-Baxter equation").add_subparsers(
        dest="subverb", required=True)
    for name, handler, text in (
            ("check", cmd_ybe_check, "classify r"),
            ("criteria", cmd_ybe_criteria, "operator criteria next to the bracket"),
            ("delta", cmd_ybe_delta, "coboundary bialgebra of r"),
    ):
        sub = leaf(ybe, name, handler, text)
        sub.add_argument("input", help="algebra or rmatrix document")
        sub.add_argument("--r", default=None, help="r-matrix document")
        if name == "criteria":
            sub.add_argument("--form", default=None,
                             help="nondegenerate skew-symmetric invariant form document")

    rb = verbs.add_parser("rb", help="Rota-Baxter operators").add_subparsers(
        dest="subverb", required=True)
    leaf(rb, "check", cmd_rb_check, "check an operator").add_argument("input")
    leaf(rb, "descend", cmd_rb_descend, "descendent algebra").add_argument("input")
    sub = leaf(rb, "from-factorizable", cmd_rb_from_factorizable,
               "skew-quadratic operator of a factorizable r")
    sub.add_argument("input", help="algebra or rmatrix document")
    sub.add_argument("--r", default=None, help="r-matrix document")
    sub.add_argument("--lambda", dest="weight", default=None, help="nonzero weight")
    leaf(rb, "to-factorizable", cmd_rb_to_factorizable,
         "factorizable r of a skew-quadratic operator").add_argument("input")

    tensor = verbs.add_parser("tensor", help="tensor-product constructions").add_subparsers(
        dest="subverb", required=True)
    sub = leaf(tensor, "algebra", cmd_tensor_algebra, "Leibniz (x) anti-associative algebra")
    sub.add_argument("left")
    sub.add_argument("right")
    sub = leaf(tensor, "bialgebra", cmd_tensor_bialgebra,
               "Leibniz bialgebra (x) quadratic algebra")
    sub.add_argument("left")
    sub.add_argument("right")

    affine = verbs.add_parser("affine", help="affinization").add_subparsers(
        dest="subverb", required=True)
    sub = leaf(affine, "check", cmd_affine_check, "completed bialgebra on a window")
    sub.add_argument("input")
    sub.add_argument("--window", type=int, default=3)
    sub = leaf(affine, "line", cmd_affine_line, "graded line t^i t^j = c t^(i+j) on a window")
    sub.add_argument("--scale", default="1", help="product coefficient c")
    sub.add_argument("--pairing", default="1", help="pairing value w(t^i, t^-i)")
    sub.add_argument("--window", type=int, default=3)

    search = verbs.add_parser("search", help="finite-field searches").add_subparsers(
        dest="subverb", required=True)
    sub = leaf(search, "structures", cmd_search_structures, "enumerate structures")
    sub.add_argument("--dim", type=int, required=True)
    sub.add_argument("--mask", default=None, help="JSON boolean array of free entries")
    sub.add_argument("--orbits", action="store_true")
    sub.add_argument("--budget", type=int, default=None, help=BUDGET_HELP)
    sub.add_argument("--workers", type=int, default=4)
    sub = leaf(search, "ybe", cmd_search_ybe, "symmetric Yang-Baxter solutions")
    sub.add_argument("--input", required=True)
    sub.add_argument("--budget", type=int, default=None, help=BUDGET_HELP)

    cat = verbs.add_parser("catalog", help="built-in fixtures").add_subparsers(
        dest="subverb", required=True)
    leaf(cat, "list", cmd_catalog_list, "list fixtures")
    sub = leaf(cat, "show", cmd_catalog_show, "print a fixture")
    sub.add_argument("name")
    sub.add_argument("--param", action="append", default=[], help="name=value")
    return parser


def _emit(outcome: Outcome, args) -> None:
    output = outcome.output
    many = isinstance(output, list)
    if output is not None and args.output:
        if many:
            Path(args.output).write_text(
                json.dumps([to_document(x) for x in output], indent=2, sort_keys=True) + "\n",
                encoding="utf-8")
        else:
            Path(args.output).write_text(dumps(output), encoding="utf-8")
        logger.info(f"Wrote {args.output}")
        output = None
    if args.machine:
        doc = outcome.report.to_dict()
        if output is not None:
            doc["output"] = [to_document(x) for x in output] if many else to_document(output)
        if outcome.table is not None:
            doc["table"] = json.loads(outcome.table.to_json(orient="records"))
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    sys.stdout.write(outcome.report.render() + "\n")
    if outcome.table is not None:
        sys.stdout.write(outcome.table.to_string(index=False) + "\n")
    if output is not None:
        if many:
            for item in output:
                sys.stdout.write(json.dumps(to_document(item), sort_keys=True) + "\n")
            sys.stdout.write(f"count: {len(output)}\n")
        else:
            sys.stdout.write(dumps(output))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parses argv, dispatches, prints the outcome and returns the exit status.

    param: argv; Arguments without the program name. Default is sys.argv.
     (Sequence[str])
    :return: 0 pass, 1 fail, 2 error. (int)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code not in (0, None) else EXIT_PASS
    setup_logging(args.verbose, args.log_file)
    args.fields = []
    try:
        outcome = args.handler(args)
        if _finite_field_in_play(args) and EXTRAPOLATION_NOTE not in outcome.report.notes:
            outcome.report.notes.append(EXTRAPOLATION_NOTE)
        _emit(outcome, args)
    except (AntiLeibnizError, OSError) as e:
        logger.error(f"{args.verb} {args.subverb}: {e}")
        if args.machine:
            report = Report(f"{args.verb} {args.subverb}", error=str(e))
            sys.stdout.write(json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
        return EXIT_ERROR
    return EXIT_PASS if outcome.report.holds else EXIT_FAIL


def main() -> None:
    sys.exit(run())
