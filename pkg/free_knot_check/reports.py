"""Run reports: the JSON documents written by the CLI and appended to sweep catalogs."""
from free_knot_check import __version__
from free_knot_check.bns.brown import BnsVerdict, classify
from free_knot_check.family.templates import GammaReport, KnotTemplate, generate_knot_word, validate_gamma
from free_knot_check.stallings.lemma5 import DEFAULT_V_MAX, Lemma5Report, lemma5_check
from free_knot_check.uniqueness.factorization import UniquenessReport, check_unique
from free_knot_check.utils import timestamp
from free_knot_check.words.expr import ParamBinding
from free_knot_check.words.free_group import CyclicWord


def in_theorem(binding: ParamBinding) -> bool:
    """p, q >= 2, the region where the family results are proved."""
    return binding.p >= 2 and binding.q >= 2


def bns_summary(verdict: BnsVerdict) -> dict:
    return {
        "empty": verdict.empty,
        "simple_vertex_count": len(verdict.simple_vertices),
        "special_edge_count": len(verdict.special_edges),
        "hull_vertex_count": len(verdict.hull.vertices),
        "word_length": verdict.word_length,
    }


def uniqueness_summary(report: UniquenessReport) -> dict:
    counterexample = None
    if report.counterexample is not None:
        f, verdict = report.counterexample
        counterexample = {
            "rotation": f.rotation,
            "lambda": str(f.lam),
            "mu": str(f.mu),
            "nu": str(f.nu),
            "annulus": verdict.name,
            "root": str(verdict.root),
            "exponent": verdict.exponent,
        }
    return {
        "factorization_count": len(report.factorizations),
        "passed": report.passed,
        "counterexample": counterexample,
        "mirror_count": report.mirror_count,
    }


def gamma_summary(report: GammaReport) -> dict:
    return {
        "essential": report.essential,
        "null_homologous": report.null_homologous,
        "no_repeated_letter": report.no_repeated_letter,
        "cyclically_reduced": report.cyclically_reduced,
        "primitive": report.primitive,
        "overall": report.overall,
    }


def lemma5_summary(report: Lemma5Report) -> dict:
    return {
        "structural_pass": report.structural_pass,
        "v_max": report.v_max,
        "conjugacy_failures": [list(key) for key in report.failures],
        "witnesses": {str(index): letters for index, letters in report.witnesses.items()},
        "passed": report.passed,
    }


def build_run_report(
    word: CyclicWord,
    binding: ParamBinding,
    template: str | None = None,
    word_expr: str | None = None,
    gamma: dict | None = None,
    bns: dict | None = None,
    uniqueness: dict | None = None,
    lemma5: dict | None = None,
) -> dict:
    """Assemble a self-contained report. Sections not computed are None."""
    return {
        "template": template,
        "word_expr": word_expr,
        "binding": binding._asdict(),
        "word": str(word),
        "word_length": len(word),
        "in_theorem": in_theorem(binding),
        "bns_asserted": in_theorem(binding) and binding.n >= 2,
        "gamma": gamma,
        "bns": bns,
        "uniqueness": uniqueness,
        "lemma5": lemma5,
        "version": __version__,
        "timestamp": timestamp(),
    }


def run_checks(t: KnotTemplate, binding: ParamBinding, v_max: int = DEFAULT_V_MAX) -> dict:
    """Every check for one template instance.

    The subgroup check is only run inside its hypotheses p, q >= 2; outside them the section records
    why it was skipped.
    """
    word = generate_knot_word(t, binding)
    if in_theorem(binding):
        lemma5 = lemma5_summary(lemma5_check(binding.p, binding.q, t.gamma, v_max))
    else:
        lemma5 = {"skipped": "outside theorem hypotheses (p, q >= 2)"}
    return build_run_report(
        word,
        binding,
        template=t.name,
        word_expr=str(t.k_expr),
        gamma=gamma_summary(validate_gamma(t.gamma.letters)),
        bns=bns_summary(classify(word)),
        uniqueness=uniqueness_summary(check_unique(word)),
        lemma5=lemma5,
    )
