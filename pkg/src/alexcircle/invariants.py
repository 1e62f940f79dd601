"""Invariant tuples of circle actions on closed Alexandrov 3-spaces.

A tuple ``(b; (eps, g, f, t); {(alpha_i, beta_i)}; (r_1, ..., r_s))`` records
the weighted orbit space of an action:

* ``b``      obstruction class of the principal orbit bundle
* ``eps``    ``"o"`` or ``"n"``, orientability of the orbit space
* ``g``      genus (cross-caps when ``eps == "n"``)
* ``f``      boundary circles made only of regular fixed points
* ``t``      boundary circles made only of special exceptional orbits
* pairs      Seifert invariants of the exceptional orbits
* singular   topologically singular points on each mixed boundary circle

Text form::

    (0;(n,1,1,0);[(2,1),(5,2)];[4])

Both multisets are stored sorted ascending, so tuple equality is multiset
equality.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Iterable, NamedTuple

ORIENTABLE = "o"
NONORIENTABLE = "n"
EPSILONS = (ORIENTABLE, NONORIENTABLE)


class TupleSyntaxError(ValueError):
    """Text does not follow the tuple grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class TupleArityError(TupleSyntaxError):
    """A tuple part is missing (for example the singular list)."""


class SeifertPair(NamedTuple):
    alpha: int
    beta: int


@dataclass(frozen=True)
class InvariantTuple:
    b: int
    eps: str
    g: int
    f: int
    t: int
    pairs: tuple[SeifertPair, ...] = ()
    singular: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple(sorted(SeifertPair(int(a), int(b)) for a, b in self.pairs))
        )
        object.__setattr__(self, "singular", tuple(sorted(int(r) for r in self.singular)))

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def s(self) -> int:
        return len(self.singular)

    @property
    def has_boundary(self) -> bool:
        """True when the orbit space has boundary, i.e. ``f + t + s > 0``."""
        return self.f + self.t + self.s > 0

    def replace(self, **changes: Any) -> "InvariantTuple":
        fields = dict(
            b=self.b, eps=self.eps, g=self.g, f=self.f, t=self.t,
            pairs=self.pairs, singular=self.singular,
        )
        fields.update(changes)
        return InvariantTuple(**fields)

    def sort_key(self) -> tuple:
        """Total order used for canonical forms and catalog output.

        Components compared in turn: eps (o before n), g, f, t, s, singular,
        n, pairs, b.
        """
        return (
            EPSILONS.index(self.eps) if self.eps in EPSILONS else len(EPSILONS),
            self.g, self.f, self.t, self.s, self.singular,
            self.n, self.pairs, self.b,
        )

    def __str__(self) -> str:
        return serialize_tuple(self)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"rule": v.rule, "message": v.message} for v in self.violations],
        }


# -- text form ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([on])|([()\[\];,]))")


class _Parser:
    def __init__(self, text: str):
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise TupleSyntaxError(f"unexpected character {text[bad]!r}", bad)
            start = m.start(m.lastindex)
            kind = ("int", "eps", "punct")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def _peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", self.end)

    def _fail(self, expected: str):
        kind, value, pos = self._peek()
        found = "end of input" if kind == "eof" else repr(value)
        # a part is missing when the tuple closes early
        if expected == "';'" and value in (")", ""):
            raise TupleArityError(f"missing tuple part: expected ';', found {found}", pos)
        raise TupleSyntaxError(f"expected {expected}, found {found}", pos)

    def punct(self, ch: str) -> None:
        kind, value, _ = self._peek()
        if kind != "punct" or value != ch:
            self._fail(f"'{ch}'")
        self.i += 1

    def accept(self, ch: str) -> bool:
        kind, value, _ = self._peek()
        if kind == "punct" and value == ch:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        kind, value, _ = self._peek()
        if kind != "int":
            self._fail("an integer")
        self.i += 1
        return int(value)

    def eps(self) -> str:
        kind, value, _ = self._peek()
        if kind != "eps":
            self._fail("'o' or 'n'")
        self.i += 1
        return value

    def parse(self) -> InvariantTuple:
        self.punct("(")
        b = self.integer()
        self.punct(";")
        self.punct("(")
        eps = self.eps()
        self.punct(",")
        g = self.integer()
        self.punct(",")
        f = self.integer()
        self.punct(",")
        t = self.integer()
        self.punct(")")
        self.punct(";")
        pairs = []
        self.punct("[")
        if not self.accept("]"):
            while True:
                self.punct("(")
                alpha = self.integer()
                self.punct(",")
                beta = self.integer()
                self.punct(")")
                pairs.append((alpha, beta))
                if self.accept("]"):
                    break
                self.punct(",")
        self.punct(";")
        singular = []
        self.punct("[")
        if not self.accept("]"):
            while True:
                singular.append(self.integer())
                if self.accept("]"):
                    break
                self.punct(",")
        self.punct(")")
        if self._peek()[0] != "eof":
            self._fail("end of input")
        return InvariantTuple(b, eps, g, f, t, pairs, singular)


def parse_tuple(text: str) -> InvariantTuple:
    """Parse the text form. Raises TupleSyntaxError / TupleArityError."""
    return _Parser(text).parse()


def serialize_tuple(t: InvariantTuple) -> str:
    pairs = ",".join(f"({p.alpha},{p.beta})" for p in t.pairs)
    singular = ",".join(str(r) for r in t.singular)
    return f"({t.b};({t.eps},{t.g},{t.f},{t.t});[{pairs}];[{singular}])"


# -- JSON form ---------------------------------------------------------------

def tuple_to_json(t: InvariantTuple) -> dict:
    return {
        "b": t.b,
        "eps": t.eps,
        "g": t.g,
        "f": t.f,
        "t": t.t,
        "pairs": [[p.alpha, p.beta] for p in t.pairs],
        "singular": list(t.singular),
    }


def tuple_from_json(obj: dict | str) -> InvariantTuple:
    if isinstance(obj, str):
        obj = json.loads(obj)
    missing = {"b", "eps", "g", "f", "t", "pairs", "singular"} - set(obj)
    if missing:
        raise ValueError(f"missing keys: {sorted(missing)}")
    return InvariantTuple(
        obj["b"], obj["eps"], obj["g"], obj["f"], obj["t"],
        [tuple(p) for p in obj["pairs"]], obj["singular"],
    )


# -- legality ----------------------------------------------------------------

def _pair_violations(p: SeifertPair) -> Iterable[Violation]:
    if p.alpha < 2:
        yield Violation("alpha_min", f"alpha >= 2 required in pair {tuple(p)}")
    if not 0 < p.beta < p.alpha:
        yield Violation("beta_range", f"0 < beta < alpha required in pair {tuple(p)}")
    if gcd(p.alpha, p.beta) != 1:
        yield Violation("gcd", f"gcd(α,β)=1 required in pair {tuple(p)}")


def validate(t: InvariantTuple) -> ValidationReport:
    """Check every legality rule and report all violations found."""
    out: list[Violation] = []
    if t.eps not in EPSILONS:
        out.append(Violation("eps", f"eps must be 'o' or 'n', got {t.eps!r}"))
    if t.g < 0:
        out.append(Violation("genus_nonneg", "genus must be >= 0"))
    elif t.eps == NONORIENTABLE and t.g < 1:
        out.append(Violation("genus_nonorientable", "nonorientable genus counts cross-caps, must be >= 1"))
    if t.f < 0:
        out.append(Violation("f_nonneg", "f must be >= 0"))
    if t.t < 0:
        out.append(Violation("t_nonneg", "t must be >= 0"))
    for p in t.pairs:
        out.extend(_pair_violations(p))
    for r in t.singular:
        if r < 2:
            out.append(Violation("r_positive", f"r_i must be a positive even integer, got {r}"))
        if r % 2:
            out.append(Violation("r_even", f"r_i must be even, got {r}"))
    if t.has_boundary and t.b != 0:
        out.append(Violation("b_boundary", "b=0 required when boundary present (f + t + s > 0)"))
    return ValidationReport(tuple(out))


def is_valid(t: InvariantTuple) -> bool:
    return validate(t).ok


def require_valid(t: InvariantTuple) -> InvariantTuple:
    report = validate(t)
    if not report.ok:
        raise ValueError("invalid tuple: " + "; ".join(v.message for v in report.violations))
    return t


def singular_point_count(t: InvariantTuple) -> int:
    """Number of topologically singular points, ``2r = sum(r_i)``."""
    return sum(t.singular)
