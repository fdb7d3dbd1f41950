import sys
from itertools import product

import pandas as pd

from free_knot_check.family.templates import builtin_templates, get_template
from free_knot_check.reports import run_checks
from free_knot_check.stallings.lemma5 import DEFAULT_V_MAX
from free_knot_check.utils import append_catalog, check_writable
from free_knot_check.words.expr import ParamBinding


D = {
    "templates": ["fig3", "fig6a", "fig6b", "fig6c"],
    "p": [2, 3],
    "q": [2, 3],
    "n": [2, 3],
    "v_max": DEFAULT_V_MAX,
}


def main(catalog_path: str, d: dict = D, registry: list | None = None) -> dict:
    """Run every check over templates x p x q x n and append one catalog entry per instance.

    Args:
        catalog_path (str): Catalog file, appended to.
        d (dict, optional): Templates, parameter ranges and v_max. Defaults to D.
        registry (list, optional): Templates to look names up in. Defaults to the builtin templates.

    Returns:
        dict: {"success": ..., "entries": ..., "summary": DataFrame} or {"error": ...}.
    """
    if not d["templates"]:
        return {"error": "No templates given."}
    if not (d["p"] and d["q"] and d["n"]):
        return {"error": "Parameter ranges must be nonempty."}
    if min(min(d["p"]), min(d["q"]), min(d["n"])) < 1:
        return {"error": "Knot words are generated for p, q, n >= 1."}

    registry = registry if registry is not None else builtin_templates()
    try:
        templates = [get_template(name, registry) for name in sorted(d["templates"])]
    except KeyError as e:
        return {"error": str(e)}
    try:
        check_writable(catalog_path)
    except OSError as e:
        return {"error": f"Catalog {catalog_path} is not writable: {e}"}

    rows = []
    for t, p, q, n in product(templates, sorted(d["p"]), sorted(d["q"]), sorted(d["n"])):
        binding = ParamBinding(p, q, n)
        print(f"Checking {t.name} at p={p}, q={q}, n={n}.")
        report = run_checks(t, binding, d.get("v_max", DEFAULT_V_MAX))
        append_catalog(report, catalog_path)
        rows.append(
            {
                "template": t.name,
                "p": p,
                "q": q,
                "n": n,
                "length": report["word_length"],
                "region": "theorem" if report["in_theorem"] else "outside theorem hypotheses",
                "bns": "EMPTY" if report["bns"]["empty"] else "NONEMPTY",
                "unique": "PASS" if report["uniqueness"]["passed"] else "FAIL",
            }
        )

    summary = pd.DataFrame(rows)
    print(summary.to_string(index=False))
    print(f"{(summary['bns'] == 'EMPTY').sum()} EMPTY, {(summary['unique'] == 'PASS').sum()} PASS of {len(summary)}.")
    return {"success": "Completed sweep.", "entries": len(rows), "summary": summary}


if __name__ == "__main__":
    result = main(sys.argv[1])
    if "error" in result:
        print(result["error"], file=sys.stderr)
        sys.exit(1)
