import sys
from dataclasses import dataclass, field
from itertools import groupby


LETTERS = "abAB"
# Letter order used for canonical rotations: a < b < A < B
LETTER_ORDER = {"a": 0, "b": 1, "A": 2, "B": 3}


class WordError(ValueError):
    """Raised when a word violates a reducedness precondition."""


def inverse_letter(x: str) -> str:
    if x not in LETTER_ORDER:
        raise WordError(f"Unknown letter {x!r}; letters are a, b, A, B.")
    return x.swapcase()


def _check_letters(text: str) -> None:
    for i, x in enumerate(text):
        if x not in LETTER_ORDER:
            raise WordError(f"Unknown letter {x!r} at position {i + 1} in {text!r}.")


def _is_reduced(text: str) -> bool:
    return all(x != y.swapcase() for x, y in zip(text, text[1:]))


def _is_cyclically_reduced(text: str) -> bool:
    return _is_reduced(text) and (len(text) < 2 or text[0] != text[-1].swapcase())


@dataclass(frozen=True)
class Word:
    """A reduced word in the free group on a and b, with A and B the inverses of a and b.

    The constructor does not reduce: it rejects text that is not already reduced. Use
    `reduce` to build a Word from an arbitrary letter sequence.
    """

    letters: str = ""

    def __post_init__(self):
        _check_letters(self.letters)
        if not _is_reduced(self.letters):
            raise WordError(f"{self.letters!r} is not reduced.")

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word | str") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** -k
        return reduce(self.letters * k)


@dataclass(frozen=True, eq=False)
class CyclicWord:
    """A cyclically reduced word considered up to rotation.

    Equality and hashing go through `canonical`, the least rotation in the letter order
    a < b < A < B.
    """

    letters: str = ""
    canonical: str = field(init=False, repr=False)

    def __post_init__(self):
        _check_letters(self.letters)
        if not _is_cyclically_reduced(self.letters):
            raise WordError(f"{self.letters!r} is not cyclically reduced.")
        object.__setattr__(self, "canonical", _least_rotation(self.letters))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def word(self) -> Word:
        return Word(self.letters)

    def rotate(self, k: int) -> "CyclicWord":
        """Rotation starting at letter k (taken modulo the length)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return CyclicWord(self.letters[k:] + self.letters[:k])


def _least_rotation(text: str) -> str:
    if not text:
        return text
    keyed = [LETTER_ORDER[x] for x in text]
    best = min(range(len(text)), key=lambda i: keyed[i:] + keyed[:i])
    return text[best:] + text[:best]


def as_word(w: "Word | CyclicWord | str") -> Word:
    """Coerce a Word, CyclicWord, or reduced string into a Word (strings are not reduced)."""
    if isinstance(w, Word):
        return w
    if isinstance(w, CyclicWord):
        return w.word()
    return Word(w)


def as_cyclic(w: "Word | CyclicWord | str") -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    if isinstance(w, Word):
        return CyclicWord(w.letters)
    return CyclicWord(w)


def reduce(raw: str) -> Word:
    """Freely reduce a letter sequence.

    Args:
        raw (str): Any sequence over a, b, A, B.

    Returns:
        Word: The unique reduced word freely equal to `raw`.
    """
    _check_letters(raw)
    stack = []
    for x in raw:
        if stack and stack[-1] == x.swapcase():
            stack.pop()
        else:
            stack.append(x)
    return Word("".join(stack))


def invert(w: "Word | str") -> Word:
    w = as_word(w)
    return Word(w.letters[::-1].swapcase())


def concat(u: "Word | str", v: "Word | str") -> Word:
    """Free-group product of two reduced words."""
    u, v = as_word(u), as_word(v)
    # Only the seam can cancel
    i = 0
    while i < min(len(u), len(v)) and u.letters[-1 - i] == v.letters[i].swapcase():
        i += 1
    return Word(u.letters[:len(u) - i] + v.letters[i:])


def cyclically_reduce(w: "Word | str") -> tuple[CyclicWord, Word]:
    """Split a reduced word as conjugator * core * conjugator^-1.

    Args:
        w (Word | str): A reduced word.

    Returns:
        tuple[CyclicWord, Word]: The cyclically reduced core and the conjugator.
    """
    text = as_word(w).letters
    k = 0
    while 2 * k + 1 < len(text) and text[k] == text[-1 - k].swapcase():
        k += 1
    return CyclicWord(text[k:len(text) - k]), Word(text[:k])


def exponent_sums(w: "Word | CyclicWord | str") -> tuple[int, int]:
    text = str(w)
    _check_letters(text)
    return text.count("a") - text.count("A"), text.count("b") - text.count("B")


def primitive_root(w: "CyclicWord | str") -> tuple[Word, int]:
    """Find the primitive root of a cyclically reduced word.

    The exponent is L/d for the least divisor d of L = |w| such that rotating w by d
    letters gives w back.

    Args:
        w (CyclicWord | str): A nonempty cyclically reduced word.

    Returns:
        tuple[Word, int]: The root and the (maximal) exponent.
    """
    text = as_cyclic(w).letters
    if not text:
        raise WordError("The empty word has no primitive root.")
    n = len(text)
    for d in range(1, n + 1):
        if n % d == 0 and text[d:] + text[:d] == text:
            return Word(text[:d]), n // d
    raise AssertionError("unreachable")


def is_proper_power(w: "CyclicWord | str") -> bool:
    return primitive_root(w)[1] >= 2


def letter_runs(w: "Word | CyclicWord | str", cyclic: bool = False) -> list[tuple[str, int]]:
    """Maximal runs of a single letter, as (letter, length) pairs.

    With `cyclic=True` a run wrapping from the end of the word to its start is merged and
    reported first.
    """
    runs = [(x, len(list(group))) for x, group in groupby(str(w))]
    if cyclic and len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs = [(runs[0][0], runs[0][1] + runs[-1][1])] + runs[1:-1]
    return runs


def high_power_runs(w: "Word | CyclicWord | str", threshold: int = 3, cyclic: bool = True) -> list[tuple[str, int]]:
    return [(x, k) for x, k in letter_runs(w, cyclic=cyclic) if k >= threshold]


def has_letter_square_cyclic(w: "CyclicWord | str") -> bool:
    """True iff some rotation of w contains xx for a single letter x."""
    text = as_cyclic(w).letters
    if len(text) < 2:
        return False
    return any(x == y for x, y in zip(text, text[1:] + text[0]))


def cyclic_equal(u: "CyclicWord | str", v: "CyclicWord | str") -> bool:
    return as_cyclic(u) == as_cyclic(v)


if __name__ == "__main__":
    word = reduce(sys.argv[1])
    core, conjugator = cyclically_reduce(word)
    print(f"reduced: {word}")
    print(f"cyclic core: {core} (conjugator: {conjugator})")
    print(f"exponent sums: {exponent_sums(word)}")
    if core:
        root, exponent = primitive_root(core)
        print(f"primitive root: {root}^{exponent}")
