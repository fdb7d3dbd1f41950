import sys
from dataclasses import dataclass, field

import numpy as np

from free_knot_check.stallings.folding import SubgroupGraph, build_core, is_conjugate_into, isolated_letters
from free_knot_check.words.expr import ParamBinding, evaluate
from free_knot_check.words.free_group import (
    CyclicWord,
    WordError,
    as_cyclic,
    cyclically_reduce,
    has_letter_square_cyclic,
    reduce,
)


# The two subgroups carried by the complementary punctured tori, as generator expressions
LEMMA5_SUBGROUPS = {
    0: ("a^{p+1}", "b^{q+1}A"),
    1: ("a^{p+1}B", "b^{q+1}"),
}
# Letters whose runs in reduced members of each subgroup are always at least 3 long
SQUARED_LETTERS = {0: ("b", "B"), 1: ("a", "A")}
DEFAULT_V_MAX = 4


class Lemma5DomainError(ValueError):
    pass


@dataclass(frozen=True)
class Lemma5Report:
    p: int
    q: int
    gamma: CyclicWord
    v_max: int
    structural_pass: bool
    conjugacy_results: dict[tuple[int, int], bool]
    witnesses: dict[int, list[str]] = field(default_factory=dict)

    @property
    def failures(self) -> list[tuple[int, int]]:
        return [key for key, conjugate in self.conjugacy_results.items() if conjugate]

    @property
    def passed(self) -> bool:
        return self.structural_pass and not self.failures


def subgroup_graphs(p: int, q: int, d: dict = LEMMA5_SUBGROUPS) -> dict[int, SubgroupGraph]:
    binding = ParamBinding(p, q, 0)
    return {index: build_core([evaluate(e, binding) for e in exprs]) for index, exprs in d.items()}


def lemma5_check(
    p: int,
    q: int,
    gamma: "CyclicWord | str",
    v_max: int = DEFAULT_V_MAX,
    d: dict = LEMMA5_SUBGROUPS,
) -> Lemma5Report:
    """Check that no power of gamma is conjugate into either subgroup.

    The structural check (gamma has no cyclic letter square) covers every power at once;
    the powers 1..v_max are also checked directly against the folded subgroup graphs.

    Args:
        p (int): At least 2.
        q (int): At least 2.
        gamma (CyclicWord | str): A cyclically reduced word.
        v_max (int, optional): Largest power checked directly. Defaults to DEFAULT_V_MAX.
        d (dict, optional): Subgroup generator expressions. Defaults to LEMMA5_SUBGROUPS.

    Returns:
        Lemma5Report: The structural and per-power verdicts.
    """
    if p < 2 or q < 2:
        raise Lemma5DomainError(f"The normal form argument needs p, q >= 2, got p={p}, q={q}.")
    if v_max < 1:
        raise Lemma5DomainError(f"v_max must be at least 1, got {v_max}.")
    try:
        gamma = as_cyclic(gamma)
    except WordError as e:
        raise Lemma5DomainError(str(e)) from e

    graphs = subgroup_graphs(p, q, d)
    results = {}
    for index, graph in graphs.items():
        for v in range(1, v_max + 1):
            results[(index, v)] = is_conjugate_into(graph, gamma.word() ** v)

    isolated = isolated_letters(gamma.word())
    witnesses = {index: [x for x in isolated if x in SQUARED_LETTERS.get(index, ())] for index in graphs}
    return Lemma5Report(p, q, gamma, v_max, not has_letter_square_cyclic(gamma), results, witnesses)


def sample_members(
    p: int,
    q: int,
    index: int,
    count: int = 200,
    max_factors: int = 6,
    seed: int = 0,
    d: dict = LEMMA5_SUBGROUPS,
) -> list[CyclicWord]:
    """Random nonempty members of a subgroup, freely and cyclically reduced.

    Args:
        p (int): Parameter p.
        q (int): Parameter q.
        index (int): Which subgroup of `d`.
        count (int, optional): Number of members. Defaults to 200.
        max_factors (int, optional): Most generator factors per product. Defaults to 6.
        seed (int, optional): Random seed. Defaults to 0.
        d (dict, optional): Subgroup generator expressions. Defaults to LEMMA5_SUBGROUPS.

    Returns:
        list[CyclicWord]: Cyclic cores of the sampled products.
    """
    binding = ParamBinding(p, q, 0)
    generators = [evaluate(e, binding) for e in d[index]]
    choices = generators + [~g for g in generators]
    rng = np.random.default_rng(seed)
    members = []
    while len(members) < count:
        factors = rng.integers(0, len(choices), size=rng.integers(1, max_factors + 1))
        core, _ = cyclically_reduce(reduce("".join(choices[i].letters for i in factors)))
        if core:
            members.append(core)
    return members


if __name__ == "__main__":
    report = lemma5_check(int(sys.argv[1]), int(sys.argv[2]), sys.argv[3])
    print(f"structural: {'PASS' if report.structural_pass else 'FAIL'}")
    for (index, v), conjugate in report.conjugacy_results.items():
        print(f"    subgroup {index}, power {v}: {'conjugate into' if conjugate else 'not conjugate'}")
    print("PASS" if report.passed else "FAIL")
