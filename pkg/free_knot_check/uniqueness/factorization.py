import sys
from dataclasses import dataclass

from free_knot_check.words.free_group import (
    CyclicWord,
    Word,
    WordError,
    as_cyclic,
    cyclically_reduce,
    invert,
    primitive_root,
    reduce,
)


ANNULUS_NAMES = ("lambda.mu_bar", "nu.lambda_bar", "mu.nu_bar")


class UniquenessInputError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    """A spelling of a rotation of K as lambda mu_bar nu lambda_bar mu nu_bar.

    `rotation` is the offset into the cyclic word at which lambda starts; `length` is the
    length of the whole cyclic word.
    """

    rotation: int
    lam: Word
    mu: Word
    nu: Word
    length: int

    def key(self) -> tuple[int, int, int]:
        return self.rotation, len(self.lam), len(self.mu)

    def blocks(self) -> tuple[Word, ...]:
        return self.lam, invert(self.mu), self.nu, invert(self.lam), self.mu, invert(self.nu)

    def spelled(self) -> str:
        return "".join(str(b) for b in self.blocks())

    def shift(self) -> "Factorization":
        """The same decomposition read starting from the second block."""
        return Factorization(
            (self.rotation + len(self.lam)) % self.length,
            invert(self.mu),
            invert(self.nu),
            invert(self.lam),
            self.length,
        )

    def orbit(self) -> list["Factorization"]:
        members = [self]
        for _ in range(5):
            members.append(members[-1].shift())
        return members

    def triples(self) -> set[tuple[str, str, str]]:
        return {(str(f.lam), str(f.mu), str(f.nu)) for f in self.orbit()}


@dataclass(frozen=True)
class AnnulusVerdict:
    name: str
    raw: str
    word: CyclicWord
    root: Word
    exponent: int
    is_proper_power: bool
    cancelled: bool = False
    degenerate: bool = False


@dataclass(frozen=True)
class UniquenessReport:
    word: CyclicWord
    factorizations: list[tuple[Factorization, tuple[AnnulusVerdict, ...]]]
    passed: bool
    counterexample: tuple[Factorization, AnnulusVerdict] | None = None
    mirror_count: int = 0


def is_factorization(k: "CyclicWord | str", f: Factorization) -> bool:
    """Letter-for-letter check, no reduction allowed."""
    text = as_cyclic(k).letters
    if f.length != len(text) or 2 * (len(f.lam) + len(f.mu) + len(f.nu)) != len(text):
        return False
    r = f.rotation % len(text)
    return f.spelled() == text[r:] + text[:r]


def find_factorizations(k: "CyclicWord | str") -> list[Factorization]:
    """Find every factorization of k, one per class of block rotations.

    Args:
        k (CyclicWord | str): A cyclically reduced word.

    Returns:
        list[Factorization]: Class representatives ordered by (rotation, |lambda|, |mu|).
            Empty for words of odd length.
    """
    text = as_cyclic(k).letters
    L = len(text)
    if L == 0 or L % 2:
        return []
    half = L // 2

    found = []
    seen = set()
    for r in range(L):
        s = text[r:] + text[:r]
        # The inverse of s[i:j] is t[L - j:L - i]
        t = s[::-1].swapcase()
        for l in range(half + 1):
            if s[half:half + l] != t[L - l:L]:
                continue
            for m in range(half - l + 1):
                if s[half + l:half + l + m] != t[L - l - m:L - l]:
                    continue
                if s[half + l + m:] != t[half:L - l - m]:
                    continue
                if (r, l, m) in seen:
                    continue
                f = Factorization(r, Word(s[:l]), Word(s[half + l:half + l + m]), Word(s[l + m:half]), L)
                seen.update(member.key() for member in f.orbit())
                found.append(f)
    return found


def _annulus(name: str, raw: str) -> AnnulusVerdict:
    cancelled = any(x == y.swapcase() for x, y in zip(raw, raw[1:])) or (
        len(raw) > 1 and raw[0] == raw[-1].swapcase()
    )
    core, _ = cyclically_reduce(reduce(raw))
    if not core:
        return AnnulusVerdict(name, raw, core, Word(), 1, False, cancelled, degenerate=True)
    root, exponent = primitive_root(core)
    return AnnulusVerdict(name, raw, core, root, exponent, exponent >= 2, cancelled)


def annulus_words(f: Factorization) -> tuple[AnnulusVerdict, ...]:
    """The three annulus core words lambda.mu_bar, nu.lambda_bar and mu.nu_bar.

    Cancellation inside a concatenation is recorded on the verdict (`cancelled`) and the
    word is still processed after reduction.
    """
    raws = (
        f.lam.letters + invert(f.mu).letters,
        f.nu.letters + invert(f.lam).letters,
        f.mu.letters + invert(f.nu).letters,
    )
    return tuple(_annulus(name, raw) for name, raw in zip(ANNULUS_NAMES, raws))


def check_unique(k: "CyclicWord | str", mirror: bool = True) -> UniquenessReport:
    """Run the proper-power obstruction over every factorization of k.

    Args:
        k (CyclicWord | str): A nonempty cyclically reduced word of even length.
        mirror (bool, optional): Also count the factorizations of the word read backwards.
            Defaults to True.

    Returns:
        UniquenessReport: `passed` is True when no annulus word of any factorization is a
            proper power.
    """
    try:
        k = as_cyclic(k)
    except WordError as e:
        raise UniquenessInputError(str(e)) from e
    if not k or len(k) % 2:
        raise UniquenessInputError(f"Uniqueness check needs a nonempty word of even length, got length {len(k)}.")

    rows = []
    counterexample = None
    for f in find_factorizations(k):
        verdicts = annulus_words(f)
        rows.append((f, verdicts))
        if counterexample is None:
            for verdict in verdicts:
                if verdict.is_proper_power:
                    counterexample = (f, verdict)
                    break

    mirror_count = len(find_factorizations(invert(k.word()).letters)) if mirror else 0
    return UniquenessReport(k, rows, counterexample is None, counterexample, mirror_count)


if __name__ == "__main__":
    report = check_unique(sys.argv[1])
    for f, verdicts in report.factorizations:
        print(f"rotation {f.rotation}: lambda={f.lam} mu={f.mu} nu={f.nu}")
        for verdict in verdicts:
            print(f"    {verdict.name}: {verdict.word} exponent {verdict.exponent}")
    print("PASS" if report.passed else "FAIL")
