"""
Parametric word expressions such as "A^{p+1}(baBA)^n b^{q+1}".

Grammar (whitespace ignored, braces around an exponent accepted and ignored):

    expr     := factor*
    factor   := atom ["^" exponent]
    atom     := "a" | "b" | "A" | "B" | "(" expr ")"
    exponent := nat | param | param "+" nat
    param    := "p" | "q" | "n"
"""
import sys
from dataclasses import dataclass
from itertools import groupby
from typing import NamedTuple

from free_knot_check.words.free_group import LETTER_ORDER, Word, as_word, reduce


PARAMETERS = ("p", "q", "n")


class ExprSyntaxError(ValueError):
    """Malformed expression. `position` is the 1-based column of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownParameterError(ExprSyntaxError):
    pass


class ParamBinding(NamedTuple):
    p: int
    q: int
    n: int

    def check(self) -> "ParamBinding":
        for name, value in self._asdict().items():
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Parameter {name} must be a nonnegative integer, got {value!r}.")
        return self


@dataclass(frozen=True)
class Exponent:
    param: str | None = None
    offset: int = 1

    def value(self, binding: ParamBinding) -> int:
        if self.param is None:
            return self.offset
        return getattr(binding, self.param) + self.offset

    def __str__(self) -> str:
        if self.param is None:
            return str(self.offset)
        if self.offset == 0:
            return self.param
        return "{" + f"{self.param}+{self.offset}" + "}"


@dataclass(frozen=True)
class Factor:
    atom: "str | Expr"
    exponent: Exponent = Exponent()

    def __str__(self) -> str:
        atom = self.atom if isinstance(self.atom, str) else f"({self.atom})"
        if self.exponent == Exponent():
            return atom
        return f"{atom}^{self.exponent}"


@dataclass(frozen=True)
class Expr:
    factors: tuple[Factor, ...] = ()

    def __str__(self) -> str:
        return "".join(str(f) for f in self.factors)

    def __add__(self, other: "Expr") -> "Expr":
        return Expr(self.factors + other.factors)

    def blocks(self) -> list["Expr"]:
        """Parenthesized sub-expressions at the top level, in order of appearance."""
        return [f.atom for f in self.factors if isinstance(f.atom, Expr)]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def _error(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.i + 1)

    def parse(self) -> Expr:
        expr = self._expr()
        if self._peek():
            raise self._error(f"Unexpected {self._peek()!r}")
        return expr

    def _expr(self) -> Expr:
        factors = []
        while self._peek() and self._peek() != ")":
            factors.append(self._factor())
        return Expr(tuple(factors))

    def _factor(self) -> Factor:
        x = self._peek()
        if x in LETTER_ORDER:
            self.i += 1
            atom = x
        elif x == "(":
            self.i += 1
            atom = self._expr()
            if self._peek() != ")":
                raise self._error("Expected ')'")
            self.i += 1
        else:
            raise self._error(f"Unexpected {x!r}")
        if self._peek() != "^":
            return Factor(atom)
        self.i += 1
        return Factor(atom, self._exponent())

    def _exponent(self) -> Exponent:
        braced = self._peek() == "{"
        if braced:
            self.i += 1
        x = self._peek()
        if x.isdigit():
            exponent = Exponent(None, self._nat())
        elif x in PARAMETERS:
            self.i += 1
            offset = 0
            if self._peek() == "+":
                self.i += 1
                if not self._peek().isdigit():
                    raise self._error("Expected a natural number after '+'")
                offset = self._nat()
            exponent = Exponent(x, offset)
        elif x.isalpha():
            raise UnknownParameterError(f"Unknown parameter {x!r}; parameters are p, q, n", self.i + 1)
        else:
            raise self._error("Expected an exponent")
        if braced:
            if self._peek() != "}":
                raise self._error("Expected '}'")
            self.i += 1
        return exponent

    def _nat(self) -> int:
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        return int(self.text[start:self.i])


def parse_expr(text: str) -> Expr:
    """Parse a parametric word expression.

    Args:
        text (str): Expression text, e.g. "A^{p+1}(baBA)^n". Empty text is the empty expression.

    Returns:
        Expr: The parse tree.
    """
    return _Parser(text).parse()


def expand(e: Expr, binding: ParamBinding) -> str:
    """Expand all powers without any free reduction."""
    parts = []
    for f in e.factors:
        atom = f.atom if isinstance(f.atom, str) else expand(f.atom, binding)
        parts.append(atom * f.exponent.value(binding))
    return "".join(parts)


def evaluate(e: "Expr | str", binding: ParamBinding) -> Word:
    if isinstance(e, str):
        e = parse_expr(e)
    return reduce(expand(e, binding.check()))


def format_word(w: "Word | str") -> str:
    """Run-length form, e.g. "AAAb" -> "A^3b"."""
    w = as_word(w)
    out = []
    for x, group in groupby(w.letters):
        k = len(list(group))
        out.append(x if k == 1 else f"{x}^{k}")
    return "".join(out)


if __name__ == "__main__":
    binding = ParamBinding(*(int(x) for x in sys.argv[2:5]))
    word = evaluate(parse_expr(sys.argv[1]), binding)
    print(f"{word} (length {len(word)}, {format_word(word)})")
