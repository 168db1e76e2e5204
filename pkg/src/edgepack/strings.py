"""Fixed-width binary strings and expressibility under bitwise AND / OR.

Bits are indexed ``1..m`` from the left, so ``"10100"`` has ``One = {1, 3}``.
Internally a string is an int whose most significant of ``m`` bits is bit 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

from edgepack.errors import (
    CapExceededError,
    FormatError,
    InvalidInputError,
    MembershipError,
    NotRegularError,
    WidthMismatchError,
)


@dataclass(frozen=True, order=True)
class BitString:
    width: int
    value: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise InvalidInputError("width must be >= 1")
        if not 0 <= self.value < (1 << self.width):
            raise InvalidInputError(f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def parse(cls, text: str) -> "BitString":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise FormatError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_ones(cls, width: int, ones: Iterable[int]) -> "BitString":
        value = 0
        for i in ones:
            if not 1 <= i <= width:
                raise InvalidInputError(f"bit index {i} out of range 1..{width}")
            value |= 1 << (width - i)
        return cls(width, value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.width}b")

    def bit(self, i: int) -> int:
        if not 1 <= i <= self.width:
            raise InvalidInputError(f"bit index {i} out of range 1..{self.width}")
        return (self.value >> (self.width - i)) & 1

    def ones(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.width + 1) if self.bit(i))

    def zeros(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.width + 1) if not self.bit(i))

    def popcount(self) -> int:
        return bin(self.value).count("1")

    def is_all_ones(self) -> bool:
        return self.value == (1 << self.width) - 1

    def __and__(self, other: "BitString") -> "BitString":
        _same_width(self, other)
        return BitString(self.width, self.value & other.value)

    def __or__(self, other: "BitString") -> "BitString":
        _same_width(self, other)
        return BitString(self.width, self.value | other.value)


def _same_width(a: BitString, b: BitString) -> None:
    if a.width != b.width:
        raise WidthMismatchError(f"width {a.width} vs {b.width}")


@dataclass(frozen=True)
class StringSet:
    """Distinct same-width strings, kept in input order (formulas index into it)."""

    width: int
    members: tuple[BitString, ...]

    def __post_init__(self) -> None:
        for s in self.members:
            if s.width != self.width:
                raise WidthMismatchError(f"member {s} has width {s.width}, expected {self.width}")
        if len(set(self.members)) != len(self.members):
            raise InvalidInputError("duplicate members")

    @classmethod
    def parse_many(cls, items: Sequence[str], width: Optional[int] = None) -> "StringSet":
        members = tuple(BitString.parse(t) for t in items)
        if width is None:
            if not members:
                raise InvalidInputError("cannot infer width of an empty set")
            width = members[0].width
        return cls(width, members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def index(self, s: BitString) -> int:
        return self.members.index(s)

    def subset(self, indices: Iterable[int]) -> "StringSet":
        return StringSet(self.width, tuple(self.members[i] for i in indices))

    def without(self, s: BitString) -> "StringSet":
        return StringSet(self.width, tuple(x for x in self.members if x != s))

    def with_ones(self, i: int) -> list[BitString]:
        """Members whose bit ``i`` is 1."""
        return [x for x in self.members if x.bit(i)]

    def with_zero(self, i: int) -> list[BitString]:
        """Members whose bit ``i`` is 0."""
        return [x for x in self.members if not x.bit(i)]

    def is_regular(self, c: int) -> bool:
        return all(x.popcount() == c for x in self.members)


# ------------------------------------------------------------------ formulas


@dataclass(frozen=True)
class Leaf:
    index: int


@dataclass(frozen=True)
class Op:
    op: str  # "and" | "or"
    left: "Formula"
    right: "Formula"


Formula = Union[Leaf, Op]


def evaluate(f: Formula, w: StringSet) -> BitString:
    if isinstance(f, Leaf):
        return w.members[f.index]
    a, b = evaluate(f.left, w), evaluate(f.right, w)
    return a & b if f.op == "and" else a | b


def fold(op: str, parts: Sequence[Formula]) -> Formula:
    if not parts:
        raise ValueError("cannot fold an empty operand list")
    return reduce(lambda acc, x: Op(op, acc, x), parts[1:], parts[0])


def format_formula(f: Formula) -> str:
    if isinstance(f, Leaf):
        return f"s{f.index}"
    return f"({f.op} {format_formula(f.left)} {format_formula(f.right)})"


def parse_formula(text: str) -> Formula:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def node() -> Formula:
        nonlocal pos
        if pos >= len(tokens):
            raise FormatError("unexpected end of formula")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens) or tokens[pos] not in ("and", "or"):
                raise FormatError("expected 'and' or 'or' after '('")
            op = tokens[pos]
            pos += 1
            left, right = node(), node()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise FormatError("expected ')'")
            pos += 1
            return Op(op, left, right)
        if tok.startswith("s") and tok[1:].isdigit():
            return Leaf(int(tok[1:]))
        raise FormatError(f"unexpected token {tok!r}")

    f = node()
    if pos != len(tokens):
        raise FormatError("trailing tokens after formula")
    return f


# ----------------------------------------------------------- expressibility


def t_vector(w: StringSet, i: int) -> tuple[bool, Optional[BitString]]:
    """OR of the members with bit ``i`` equal to 0; ``(False, None)`` if there are none."""
    if not 1 <= i <= w.width:
        raise InvalidInputError(f"bit index {i} out of range 1..{w.width}")
    zeros = w.with_zero(i)
    if not zeros:
        return False, None
    return True, reduce(lambda a, b: a | b, zeros)


def _check_target(w: StringSet, s: BitString) -> None:
    if len(w) == 0:
        raise InvalidInputError("operand set is empty")
    if s.width != w.width:
        raise WidthMismatchError(f"target width {s.width} vs set width {w.width}")


def is_expressible(w: StringSet, s: BitString) -> bool:
    _check_target(w, s)
    if s.is_all_ones():
        return reduce(lambda a, b: a | b, w.members).is_all_ones()
    ones = s.value
    for i in s.zeros():
        present, t = t_vector(w, i)
        if not present or (ones & ~t.value):
            return False
    return True


def find_formula(w: StringSet, s: BitString) -> Optional[Formula]:
    """Witness formula AND over zero bits i of (OR of members with bit i = 0)."""
    if not is_expressible(w, s):
        return None
    if s.is_all_ones():
        return fold("or", [Leaf(k) for k in range(len(w))])
    clauses: list[Formula] = []
    seen: set[tuple[int, ...]] = set()
    for i in sorted(s.zeros()):
        idx = tuple(k for k, x in enumerate(w.members) if not x.bit(i))
        if idx in seen:
            continue
        seen.add(idx)
        clauses.append(fold("or", [Leaf(k) for k in idx]))
    return fold("and", clauses)


def _node_count(w: StringSet, i: int) -> int:
    return len(w.with_ones(i))


def is_expressible_2regular(w: StringSet, x: BitString) -> bool:
    """Expressibility of a 2-regular target from a 2-regular set, by counting supports."""
    if x.width != w.width:
        raise WidthMismatchError(f"target width {x.width} vs set width {w.width}")
    if not w.is_regular(2):
        raise NotRegularError("operand set is not 2-regular")
    if x.popcount() != 2:
        raise NotRegularError(f"target {x} is not 2-regular")
    if x in w:
        raise MembershipError(f"target {x} is a member of the set")
    i, j = sorted(x.ones())
    return _node_count(w, i) >= 2 and _node_count(w, j) >= 2


@dataclass(frozen=True)
class EIVerdict:
    member: Optional[BitString] = None
    formula: Optional[Formula] = None

    @property
    def ok(self) -> bool:
        return self.member is None

    def __bool__(self) -> bool:
        return self.ok


def is_expressible_independent(x: StringSet) -> EIVerdict:
    """Check that no member is expressible from the others.

    On failure the witness formula indexes into ``x`` itself, never into the
    reduced set.
    """
    for k, s in enumerate(x.members):
        others = [j for j in range(len(x)) if j != k]
        if not others:
            continue
        rest = x.subset(others)
        f = find_formula(rest, s)
        if f is not None:
            return EIVerdict(s, _reindex(f, others))
    return EIVerdict()


def _reindex(f: Formula, mapping: Sequence[int]) -> Formula:
    if isinstance(f, Leaf):
        return Leaf(mapping[f.index])
    return Op(f.op, _reindex(f.left, mapping), _reindex(f.right, mapping))


def closure(w: StringSet, cap: int = 4096) -> frozenset[BitString]:
    """Least superset of ``w`` closed under pairwise AND and OR."""
    found = set(w.members)
    if len(found) > cap:
        raise CapExceededError(f"closure exceeds cap {cap}")
    frontier = list(found)
    while frontier:
        current = list(found)
        new = []
        for a in frontier:
            for b in current:
                for r in (a & b, a | b):
                    if r not in found:
                        found.add(r)
                        new.append(r)
                        if len(found) > cap:
                            raise CapExceededError(f"closure exceeds cap {cap}")
        frontier = new
    return frozenset(found)


# --------------------------------------------------------------- text format


def parse_strings(text: str) -> StringSet:
    items = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise FormatError(f"line {lineno}: not a binary string: {line!r}")
        items.append(line)
    if not items:
        raise FormatError("no strings in input")
    widths = {len(t) for t in items}
    if len(widths) != 1:
        raise WidthMismatchError(f"non-uniform widths {sorted(widths)}")
    return StringSet.parse_many(items)


def format_strings(w: StringSet, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(str(s) for s in w.members)
    return "\n".join(lines) + "\n"


def load_strings(path: str) -> StringSet:
    with open(path) as fh:
        return parse_strings(fh.read())
