import sys
from dataclasses import dataclass

import pandas as pd

from free_knot_check.uniqueness.factorization import find_factorizations
from free_knot_check.words.expr import Expr, ParamBinding, evaluate, expand, parse_expr
from free_knot_check.words.free_group import (
    CyclicWord,
    Word,
    WordError,
    cyclic_equal,
    cyclically_reduce,
    exponent_sums,
    invert,
    letter_runs,
    primitive_root,
    reduce,
)


# Knot words for the curves of the four builtin constructions, each read starting at the
# marked point. Decompositions are (lambda, mu, nu) triples, one per complementary
# punctured torus, where they have been worked out by hand; the others are searched for.
BUILTIN_TEMPLATE_WORDS = {
    "fig3": {
        "k_expr": "A^{p+1} (baBA)^n b^{q+1} (bABa)^n a^{p+1} (BAba)^n B^{q+1} (BabA)^n",
        "decompositions": [
            ("A^{p+1}", "B", "(aBAb)^n b^q (bABa)^n"),
            ("a", "b^{q+1}", "(BabA)^n A^p (AbaB)^n"),
        ],
    },
    "fig6a": {
        "k_expr": "A^{p+1} (BabA)^n (baBA)^n (bABa)^n b^{q+1} (aBAb)^n a^{p+1} (bABa)^n (BAba)^n (BabA)^n B^{q+1} "
                  "(AbaB)^n",
        "decompositions": [
            ("A^p", "a (bABa)^n (BAba)^n", "(bABa)^n b^{q+1} (aBAb)^n"),
            ("(AbaB)^n A^{p+1} (BabA)^n", "(BAba)^n (BabA)^n B", "b^q"),
        ],
    },
    "fig6b": {
        "k_expr": "A^{p+1} (babaBABA)^n b^{q+1} (bABABaba)^n (baBABAba)^n (babABABa)^n a^{p+1} (BABAbaba)^n B^{q+1} "
                  "(BababABA)^n (BAbabaBA)^n (BABababA)^n",
        "decompositions": [],
    },
    "fig6c": {
        "k_expr": "A^{p+1} (bAbaBaBA)^n (bABaBabA)^n (baBaBAbA)^n b^{q+1} (bAbABaBa)^n a^{p+1} (BaBAbAba)^n "
                  "(BabAbABa)^n (BAbAbaBa)^n B^{q+1} (BaBabAbA)^n",
        "decompositions": [],
    },
}

BASE_KNOT_EXPR = "a^{p+1}b^{q+1}A^{p+1}B^{q+1}"
BASE_DECOMPOSITIONS = [("a", "A^p", "b^{q+1}"), ("a^{p+1}", "B^q", "b")]

REGISTRY_COLUMNS = ["name", "k_expr", "t1_lambda", "t1_mu", "t1_nu", "t2_lambda", "t2_mu", "t2_nu"]


class FamilyDomainError(ValueError):
    pass


class MalformedTemplateError(ValueError):
    pass


@dataclass(frozen=True)
class DecompositionTemplate:
    lambda_expr: Expr
    mu_expr: Expr
    nu_expr: Expr

    @classmethod
    def from_strings(cls, lam: str, mu: str, nu: str) -> "DecompositionTemplate":
        return cls(parse_expr(lam), parse_expr(mu), parse_expr(nu))

    def evaluate(self, binding: ParamBinding) -> tuple[Word, Word, Word]:
        return (
            evaluate(self.lambda_expr, binding),
            evaluate(self.mu_expr, binding),
            evaluate(self.nu_expr, binding),
        )

    def recompose(self, binding: ParamBinding) -> str:
        """lambda mu_bar nu lambda_bar mu nu_bar as a plain juxtaposition, nothing cancelled."""
        lam, mu, nu = self.evaluate(binding)
        return "".join(str(w) for w in (lam, invert(mu), nu, invert(lam), mu, invert(nu)))


@dataclass(frozen=True)
class KnotTemplate:
    name: str
    k_expr: Expr
    gamma: CyclicWord
    decompositions: tuple[DecompositionTemplate, ...] = ()


@dataclass(frozen=True)
class GammaReport:
    essential: bool
    null_homologous: bool
    no_repeated_letter: bool
    cyclically_reduced: bool
    primitive: bool

    @property
    def overall(self) -> bool:
        return self.essential and self.null_homologous and self.no_repeated_letter and self.cyclically_reduced


def _block_word(block: Expr, name: str) -> CyclicWord:
    # Insertion blocks may not depend on p, q, n
    word = evaluate(block, ParamBinding(1, 1, 1))
    if word != evaluate(block, ParamBinding(2, 2, 2)):
        raise MalformedTemplateError(f"Template {name}: insertion block ({block}) depends on a parameter.")
    try:
        return CyclicWord(word.letters)
    except WordError as e:
        raise MalformedTemplateError(f"Template {name}: insertion block ({block}) is not cyclically reduced.") from e


def insertion_words(t: KnotTemplate) -> list[CyclicWord]:
    """Distinct parenthesized insertion blocks of the template's knot word.

    Args:
        t (KnotTemplate): The template.

    Returns:
        list[CyclicWord]: The blocks in order of first appearance.

    Raises:
        MalformedTemplateError: A block is not a rotation of gamma or of its inverse.
    """
    gamma_bar = CyclicWord(invert(t.gamma.word()).letters)
    words = []
    for block in t.k_expr.blocks():
        word = _block_word(block, t.name)
        if not (cyclic_equal(word, t.gamma) or cyclic_equal(word, gamma_bar)):
            raise MalformedTemplateError(
                f"Template {t.name}: insertion block {word} is not a cyclic conjugate of {t.gamma} or its inverse."
            )
        if word.letters not in [w.letters for w in words]:
            words.append(word)
    return words


def make_template(
    name: str,
    k_expr: str,
    decompositions: list = (),
    gamma: str | None = None,
) -> KnotTemplate:
    """Build and validate a template.

    Args:
        name (str): Template name.
        k_expr (str): Parametric knot word.
        decompositions (list, optional): (lambda, mu, nu) expression strings. Defaults to none.
        gamma (str, optional): The curve's word. Defaults to the least rotation of the first insertion block.

    Returns:
        KnotTemplate: The validated template.
    """
    expr = parse_expr(k_expr)
    if gamma is None:
        blocks = expr.blocks()
        if not blocks:
            raise MalformedTemplateError(f"Template {name} has no insertion blocks to read gamma from.")
        first = _block_word(blocks[0], name)
        gamma_word = CyclicWord(first.canonical)
    else:
        gamma_word = CyclicWord(gamma)
    template = KnotTemplate(
        name,
        expr,
        gamma_word,
        tuple(DecompositionTemplate.from_strings(*d) for d in decompositions),
    )
    insertion_words(template)
    return template


def builtin_templates(d: dict = BUILTIN_TEMPLATE_WORDS) -> list[KnotTemplate]:
    return [make_template(name, entry["k_expr"], entry["decompositions"]) for name, entry in d.items()]


def get_template(name: str, registry: list[KnotTemplate] | None = None) -> KnotTemplate:
    for template in registry if registry is not None else builtin_templates():
        if template.name == name:
            return template
    raise KeyError(f"Unknown template {name!r}.")


def _check_generation_binding(binding: ParamBinding) -> ParamBinding:
    binding = ParamBinding(*binding).check()
    if min(binding) < 1:
        raise FamilyDomainError(f"Knot words are generated for p, q, n >= 1, got {binding}.")
    return binding


def expansion_cancellation(t: KnotTemplate, binding: ParamBinding) -> int:
    """Number of letters lost to free and cyclic reduction when the knot word is expanded."""
    raw = expand(t.k_expr, binding)
    core, _ = cyclically_reduce(reduce(raw))
    return len(raw) - len(core)


def generate_knot_word(t: KnotTemplate, binding: ParamBinding) -> CyclicWord:
    """Expand the template's knot word K_n for a binding of p, q, n.

    Args:
        t (KnotTemplate): The template.
        binding (ParamBinding): p, q, n, all at least 1.

    Returns:
        CyclicWord: The cyclically reduced knot word.
    """
    binding = _check_generation_binding(binding)
    core, _ = cyclically_reduce(evaluate(t.k_expr, binding))
    if exponent_sums(core) != (0, 0):
        raise MalformedTemplateError(
            f"Template {t.name}: knot word has exponent sums {exponent_sums(core)}, expected (0, 0)."
        )
    return core


def base_knot_word(binding: ParamBinding) -> CyclicWord:
    """The word of the base knot K_{p,q}, before any twisting along gamma."""
    binding = ParamBinding(*binding).check()
    return CyclicWord(evaluate(BASE_KNOT_EXPR, binding).letters)


def base_decompositions() -> list[DecompositionTemplate]:
    return [DecompositionTemplate.from_strings(*d) for d in BASE_DECOMPOSITIONS]


def template_decompositions(t: KnotTemplate, binding: ParamBinding) -> list[tuple[Word, Word, Word]]:
    """(lambda, mu, nu) triples of the knot word at a binding.

    Stored decompositions are evaluated; templates without them get the triples found by
    the factorization search.
    """
    if t.decompositions:
        return [d.evaluate(binding) for d in t.decompositions]
    return [(f.lam, f.mu, f.nu) for f in find_factorizations(generate_knot_word(t, binding))]


def validate_gamma(g: "Word | str") -> GammaReport:
    """Check the algebraic conditions on the curve gamma.

    Args:
        g (Word | str): The word of gamma (reduced first if needed).

    Returns:
        GammaReport: essential, null-homologous, no repeated letter, cyclically reduced, and
            (informational) primitive.
    """
    word = reduce(str(g))
    core, conjugator = cyclically_reduce(word)
    return GammaReport(
        essential=bool(word),
        null_homologous=exponent_sums(word) == (0, 0),
        no_repeated_letter=all(k == 1 for _, k in letter_runs(word, cyclic=not conjugator)),
        cyclically_reduced=not conjugator,
        primitive=bool(core) and primitive_root(core)[1] == 1,
    )


def read_templates_csv(path: str) -> list[KnotTemplate]:
    """Read a template registry document.

    Args:
        path (str): CSV file with columns name, k_expr, t1_lambda, t1_mu, t1_nu, t2_lambda, t2_mu, t2_nu.
            Decomposition columns may be left blank.

    Returns:
        list[KnotTemplate]: The validated templates, in file order.
    """
    df = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [c for c in ("name", "k_expr") if c not in df.columns]
    if missing:
        raise MalformedTemplateError(f"Template registry {path} is missing columns {missing}.")

    templates = []
    for _, row in df.iterrows():
        decompositions = []
        for prefix in ("t1", "t2"):
            pieces = [row.get(f"{prefix}_{piece}", "") for piece in ("lambda", "mu", "nu")]
            if any(pieces):
                decompositions.append(tuple(pieces))
        templates.append(make_template(row["name"], row["k_expr"], decompositions))
    return templates


def write_templates_csv(templates: list[KnotTemplate], path: str) -> None:
    rows = []
    for t in templates:
        row = {"name": t.name, "k_expr": str(t.k_expr)}
        for prefix, d in zip(("t1", "t2"), t.decompositions):
            row[f"{prefix}_lambda"] = str(d.lambda_expr)
            row[f"{prefix}_mu"] = str(d.mu_expr)
            row[f"{prefix}_nu"] = str(d.nu_expr)
        rows.append(row)
    pd.DataFrame(rows, columns=REGISTRY_COLUMNS).to_csv(path, index=False)


if __name__ == "__main__":
    template = get_template(sys.argv[1])
    binding = ParamBinding(*(int(x) for x in sys.argv[2:5]))
    word = generate_knot_word(template, binding)
    print(f"{template.name} at {binding}: {word} (length {len(word)})")
    print(f"gamma: {template.gamma}")
