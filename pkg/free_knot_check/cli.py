import argparse
import sys

from free_knot_check import __version__, sweep
from free_knot_check.bns.brown import DegenerateHullError, RelatorError, classify, convex_hull, trace_path
from free_knot_check.bns.svg import render_svg
from free_knot_check.family.templates import (
    builtin_templates,
    generate_knot_word,
    get_template,
    read_templates_csv,
    validate_gamma,
)
from free_knot_check.reports import (
    build_run_report,
    bns_summary,
    gamma_summary,
    lemma5_summary,
    uniqueness_summary,
)
from free_knot_check.stallings.folding import build_core, is_conjugate_into, is_member
from free_knot_check.stallings.lemma5 import DEFAULT_V_MAX, Lemma5DomainError, lemma5_check
from free_knot_check.uniqueness.factorization import UniquenessInputError, check_unique
from free_knot_check.utils import parse_range, write_json
from free_knot_check.words.expr import ParamBinding, evaluate, format_word
from free_knot_check.words.free_group import CyclicWord, WordError, cyclically_reduce, exponent_sums


EXIT_CODES = {
    "ok": 0,
    "error": 1,
    "invalid_relator": 2,
    "invalid_uniqueness_input": 3,
    "invalid_lemma5_domain": 4,
    "bns_nonempty": 10,
    "uniqueness_fail": 11,
    "lemma5_fail": 12,
    "gamma_fail": 13,
}


class _Parser(argparse.ArgumentParser):
    # Usage errors exit 1; 2 is reserved for invalid relators
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["error"], f"{self.prog}: error: {message}\n")


def _binding(args) -> ParamBinding:
    return ParamBinding(args.p, args.q, args.n).check()


def _registry(args) -> list:
    return read_templates_csv(args.templates_csv) if args.templates_csv else builtin_templates()


def _resolve(args) -> tuple[str | None, str, object]:
    """Template name, expression text and reduced word for --template or --word."""
    binding = _binding(args)
    if args.template:
        t = get_template(args.template, _registry(args))
        return t.name, str(t.k_expr), generate_knot_word(t, binding)
    if args.word is not None:
        return None, args.word, evaluate(args.word, binding)
    raise ValueError("Give --template or --word.")


def _as_relator(word) -> CyclicWord:
    try:
        return CyclicWord(str(word))
    except WordError as e:
        raise RelatorError(f"Relator must be cyclically reduced: {e}") from e


def _as_uniqueness_input(word) -> CyclicWord:
    try:
        return CyclicWord(str(word))
    except WordError as e:
        raise UniquenessInputError(str(e)) from e


def _write_report(args, name, expr, word, **sections) -> None:
    if args.json:
        write_json(build_run_report(word, _binding(args), name, expr, **sections), args.json)
        print(f"Wrote report to {args.json}.")


def cmd_word(args) -> int:
    text = args.expr if args.expr is not None else args.word
    if text is None and args.template is None:
        raise ValueError("Give an expression, --word or --template.")
    if text is None:
        _, _, word = _resolve(args)
    else:
        word = evaluate(text, _binding(args))
    print(word.letters if word else "(empty)")
    print(f"length {len(word)}, exponent sums {exponent_sums(word)}")
    if word:
        print(f"run-length form {format_word(word)}")
    return EXIT_CODES["ok"]


def cmd_bns(args) -> int:
    name, expr, word = _resolve(args)
    relator = _as_relator(word)
    path = trace_path(relator)
    hull = convex_hull(path)
    verdict = classify(relator)
    print("EMPTY" if verdict.empty else "NONEMPTY")
    print(
        f"{len(verdict.simple_vertices)} simple vertices, "
        f"{len(verdict.special_edges)} special edges, "
        f"{len(hull.vertices)} hull vertices, word length {len(relator)}"
    )
    if args.svg:
        with open(args.svg, "w") as f:
            f.write(render_svg(path, hull, verdict))
        print(f"Wrote {args.svg}.")
    _write_report(args, name, expr, relator, bns=bns_summary(verdict))
    return EXIT_CODES["ok"] if verdict.empty else EXIT_CODES["bns_nonempty"]


def cmd_unique(args) -> int:
    name, expr, word = _resolve(args)
    report = check_unique(_as_uniqueness_input(word))
    print(f"{len(report.factorizations)} factorization classes ({report.mirror_count} for the inverse word)")
    for f, verdicts in report.factorizations:
        powers = ", ".join(f"{v.name}={v.root}^{v.exponent}" for v in verdicts)
        print(f"    rotation {f.rotation}: lambda={f.lam} mu={f.mu} nu={f.nu}; {powers}")
    if report.counterexample is not None:
        f, verdict = report.counterexample
        print(f"Counterexample at rotation {f.rotation}: {verdict.name} is ({verdict.root})^{verdict.exponent}")
    print("PASS" if report.passed else "FAIL")
    _write_report(args, name, expr, report.word, uniqueness=uniqueness_summary(report))
    return EXIT_CODES["ok"] if report.passed else EXIT_CODES["uniqueness_fail"]


def _gamma(args):
    """Template name and reduced gamma word for --gamma (word-expr syntax) or --template."""
    if args.gamma is not None:
        return None, evaluate(args.gamma, _binding(args))
    if args.template:
        t = get_template(args.template, _registry(args))
        return t.name, t.gamma.word()
    raise ValueError("Give --template or --gamma.")


def cmd_lemma5(args) -> int:
    name, gamma = _gamma(args)
    core, _ = cyclically_reduce(gamma)
    report = lemma5_check(args.p, args.q, core, args.v_max)
    print(f"gamma {report.gamma}, p={report.p}, q={report.q}")
    print(f"structural (no cyclic letter square): {'PASS' if report.structural_pass else 'FAIL'}")
    for (index, v), conjugate in report.conjugacy_results.items():
        print(f"    subgroup {index}, power {v}: {'conjugate into' if conjugate else 'not conjugate'}")
    print("PASS" if report.passed else "FAIL")
    _write_report(args, name, str(report.gamma), report.gamma, lemma5=lemma5_summary(report))
    return EXIT_CODES["ok"] if report.passed else EXIT_CODES["lemma5_fail"]


def cmd_gamma_check(args) -> int:
    _, gamma = _gamma(args)
    report = validate_gamma(gamma)
    print(f"gamma {gamma.letters or '(empty)'}")
    for key, value in gamma_summary(report).items():
        print(f"{key}: {value}")
    return EXIT_CODES["ok"] if report.overall else EXIT_CODES["gamma_fail"]


def cmd_stallings(args) -> int:
    binding = _binding(args)
    graph = build_core([evaluate(g, binding) for g in args.generators])
    word = evaluate(args.query, binding)
    print(f"{graph.vertex_count} vertices, {graph.edge_count} edges, rank {graph.rank()}")
    print(f"member: {is_member(graph, word)}")
    if word:
        print(f"conjugate into: {is_conjugate_into(graph, word)}")
    return EXIT_CODES["ok"]


def cmd_sweep(args) -> int:
    d = {
        "templates": [x for x in args.templates.split(",") if x],
        "p": parse_range(args.p_range),
        "q": parse_range(args.q_range),
        "n": parse_range(args.n_range),
        "v_max": args.v_max,
    }
    if not d["templates"]:
        raise ValueError("No templates given.")
    result = sweep.main(args.catalog, d, _registry(args))
    if "error" in result:
        print(result["error"], file=sys.stderr)
        return EXIT_CODES["error"]
    return EXIT_CODES["ok"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--template", help="builtin or registry template name")
    common.add_argument("--word", help="word expression, e.g. 'a^{p+1}b^{q+1}A^{p+1}B^{q+1}'")
    common.add_argument("--p", type=int, default=2)
    common.add_argument("--q", type=int, default=2)
    common.add_argument("--n", type=int, default=2)
    common.add_argument("--json", help="write a JSON run report here")
    common.add_argument("--templates-csv", help="template registry CSV used instead of the builtin templates")

    parser = _Parser(prog="free-knot-check", description="Algebraic checks for knots with free Seifert surfaces.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="expand a word expression")
    p.add_argument("expr", nargs="?")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("bns", parents=[common], help="decide emptiness of the BNS invariant")
    p.add_argument("--svg", help="write the traced path and hull here")
    p.set_defaults(func=cmd_bns)

    p = sub.add_parser("unique", parents=[common], help="check uniqueness of the free Seifert surface")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("lemma5", parents=[common], help="non-conjugacy of powers of gamma")
    p.add_argument("--gamma", help="gamma word, instead of the template's")
    p.add_argument("--v-max", type=int, default=DEFAULT_V_MAX)
    p.set_defaults(func=cmd_lemma5)

    p = sub.add_parser("gamma-check", parents=[common], help="validate the twisting curve gamma")
    p.add_argument("--gamma", help="gamma word, instead of the template's")
    p.set_defaults(func=cmd_gamma_check)

    p = sub.add_parser("stallings", parents=[common], help="membership and conjugacy queries")
    p.add_argument("query", help="word expression to test")
    p.add_argument("generators", nargs="*", help="subgroup generator expressions")
    p.set_defaults(func=cmd_stallings)

    p = sub.add_parser("sweep", parents=[common], help="run every check over a parameter grid")
    p.add_argument("--templates", default=",".join(sweep.D["templates"]))
    p.add_argument("--p-range", default="2,3")
    p.add_argument("--q-range", default="2,3")
    p.add_argument("--n-range", default="2,3")
    p.add_argument("--v-max", type=int, default=DEFAULT_V_MAX)
    p.add_argument("--catalog", required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RelatorError, DegenerateHullError) as e:
        print(f"Invalid relator: {e}", file=sys.stderr)
        return EXIT_CODES["invalid_relator"]
    except UniquenessInputError as e:
        print(f"Invalid uniqueness input: {e}", file=sys.stderr)
        return EXIT_CODES["invalid_uniqueness_input"]
    except Lemma5DomainError as e:
        print(f"Invalid subgroup check domain: {e}", file=sys.stderr)
        return EXIT_CODES["invalid_lemma5_domain"]
    except (ValueError, KeyError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CODES["error"]


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
