"""Boolean functions over the variables q1..qn, stored as truth tables.

A function of arity ``n`` is a table of ``2**n`` bits packed into a Python
int.  Bit ``k`` of the table is the value at the assignment whose variable
``q_j`` equals bit ``j-1`` of ``k``; in other words ``q1`` is the least
significant bit of the assignment index.  Every other module relies on this
encoding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "BooleanFunction",
    "ExpressionError",
    "FunctionClass",
    "assignment_bits",
    "assignment_index",
    "classify",
    "combine",
    "constant",
    "disjunction",
    "evaluate",
    "negate",
    "parse_expr",
    "print_expr",
    "substitute",
    "variable",
]


class ExpressionError(ValueError):
    """Raised for malformed expressions; ``pos`` is the 0-based column."""

    def __init__(self, message: str, pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


def _table_bits(table: int, arity: int) -> np.ndarray:
    size = 1 << arity
    nbytes = max(1, (size + 7) // 8)
    raw = np.frombuffer(table.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def _bits_table(bits: np.ndarray) -> int:
    packed = np.packbits(np.asarray(bits, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    table: int

    def __post_init__(self):
        if self.arity < 0:
            raise ValueError("arity must be non-negative")
        if self.table < 0 or self.table >> (1 << self.arity):
            raise ValueError(f"table does not fit arity {self.arity}")

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def mask(self) -> int:
        return (1 << self.size) - 1

    def bits(self) -> np.ndarray:
        """Truth table as a boolean array indexed by assignment index."""
        return _table_bits(self.table, self.arity)

    def at(self, index: int) -> int:
        return (self.table >> index) & 1

    @classmethod
    def from_bits(cls, bits) -> BooleanFunction:
        bits = np.asarray(bits, dtype=bool)
        arity = int(len(bits)).bit_length() - 1
        if len(bits) != 1 << arity:
            raise ValueError("table length must be a power of two")
        return cls(arity, _bits_table(bits))

    def __and__(self, other):
        return combine("and", self, other)

    def __or__(self, other):
        return combine("or", self, other)

    def __xor__(self, other):
        return combine("xor", self, other)

    def __invert__(self):
        return negate(self)

    def __call__(self, *bits: int) -> int:
        return evaluate(self, bits)

    def __repr__(self) -> str:
        return f"BooleanFunction({self.arity}, {print_expr(self)!r})"


def assignment_index(bits: Sequence[int]) -> int:
    """Index of the assignment (q1, ..., qn) = bits."""
    return sum((int(b) & 1) << j for j, b in enumerate(bits))


def assignment_bits(index: int, arity: int) -> tuple[int, ...]:
    return tuple((index >> j) & 1 for j in range(arity))


def constant(value: int, arity: int) -> BooleanFunction:
    return BooleanFunction(arity, ((1 << (1 << arity)) - 1) if value else 0)


_VAR_CACHE: dict[tuple[int, int], int] = {}


def variable(i: int, arity: int) -> BooleanFunction:
    """The projection q_i (1-based)."""
    if not 1 <= i <= arity:
        raise ValueError(f"variable q{i} out of range for arity {arity}")
    key = (i, arity)
    if key not in _VAR_CACHE:
        idx = np.arange(1 << arity)
        _VAR_CACHE[key] = _bits_table((idx >> (i - 1)) & 1)
    return BooleanFunction(arity, _VAR_CACHE[key])


def disjunction(indices: Iterable[int], arity: int) -> BooleanFunction:
    """q_{i1} | ... | q_{il}; the empty disjunction is constant 0."""
    table = 0
    for i in indices:
        table |= variable(i, arity).table
    return BooleanFunction(arity, table)


def evaluate(f: BooleanFunction, u: Sequence[int]) -> int:
    if len(u) != f.arity:
        raise ValueError(f"assignment of length {len(u)} for arity {f.arity}")
    return f.at(assignment_index(u))


def _check_same_arity(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.arity != g.arity:
        raise ValueError(f"arity mismatch: {f.arity} vs {g.arity}")


def combine(connective: str, f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    """Pointwise AND / OR / XOR of two functions of equal arity."""
    _check_same_arity(f, g)
    op = connective.lower()
    if op == "and":
        table = f.table & g.table
    elif op == "or":
        table = f.table | g.table
    elif op == "xor":
        table = f.table ^ g.table
    else:
        raise ValueError(f"unknown connective {connective!r}")
    return BooleanFunction(f.arity, table)


def negate(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, f.table ^ f.mask)


def substitution_index(hs: Sequence[BooleanFunction]) -> np.ndarray:
    """For each input assignment u, the index of (h_1(u), ..., h_n(u))."""
    if not hs:
        raise ValueError("empty substitution vector")
    m = hs[0].arity
    idx = np.zeros(1 << m, dtype=np.int64)
    for j, h in enumerate(hs):
        if h.arity != m:
            raise ValueError(f"inconsistent arities in substitution: {h.arity} vs {m}")
        idx |= h.bits().astype(np.int64) << j
    return idx


def substitute(g: BooleanFunction, hs: Sequence[BooleanFunction]) -> BooleanFunction:
    """The function u -> g(h_1(u), ..., h_n(u))."""
    if len(hs) != g.arity:
        raise ValueError(f"{len(hs)} functions substituted into arity {g.arity}")
    idx = substitution_index(hs)
    return BooleanFunction(hs[0].arity, _bits_table(g.bits()[idx]))


def permute_variables(f: BooleanFunction, perm: Sequence[int], arity: int | None = None) -> BooleanFunction:
    """Rename q_i to q_{perm[i-1]} (1-based targets) in a function of the given output arity."""
    arity = f.arity if arity is None else arity
    return substitute(f, [variable(p, arity) for p in perm])


class FunctionClass(NamedTuple):
    projection: int | None
    disjunction: frozenset[int] | None
    constant: int | None

    @property
    def is_projection(self) -> bool:
        return self.projection is not None

    @property
    def is_disjunction_of_variables(self) -> bool:
        return self.disjunction is not None

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


def classify(f: BooleanFunction) -> FunctionClass:
    const = None
    if f.table == 0:
        const = 0
    elif f.table == f.mask:
        const = 1
    # a disjunction is determined by its values at the unit vectors
    support = frozenset(i for i in range(1, f.arity + 1) if f.at(1 << (i - 1)))
    disj = support if disjunction(support, f.arity) == f else None
    proj = next(iter(disj)) if disj is not None and len(disj) == 1 else None
    return FunctionClass(proj, disj, const)


def essential_variables(f: BooleanFunction) -> list[int]:
    """Variables f actually depends on, in increasing order."""
    bits = f.bits()
    out = []
    for i in range(1, f.arity + 1):
        idx = np.arange(f.size)
        if np.any(bits != bits[idx ^ (1 << (i - 1))]):
            out.append(i)
    return out


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(q\d+)|([01])|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("var", m.group(1), start))
        elif m.group(2):
            tokens.append(("const", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "!&^|()":
                raise ExpressionError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # precedence, loosest first: | ^ & !
    def __init__(self, text: str, arity: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.arity = arity

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExpressionError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> BooleanFunction:
        f = self.binary(0)
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionError(f"unexpected {tok[1]!r}", tok[2])
        return f

    _LEVELS = ("|", "^", "&")

    def binary(self, level: int) -> BooleanFunction:
        if level == len(self._LEVELS):
            return self.unary()
        op = self._LEVELS[level]
        f = self.binary(level + 1)
        while self.peek()[0] == op:
            self.take()
            g = self.binary(level + 1)
            f = combine({"|": "or", "^": "xor", "&": "and"}[op], f, g)
        return f

    def unary(self) -> BooleanFunction:
        kind, text, pos = self.peek()
        if kind == "!":
            self.take()
            return negate(self.unary())
        if kind == "(":
            self.take()
            f = self.binary(0)
            self.take(")")
            return f
        if kind == "const":
            self.take()
            return constant(int(text), self.arity)
        if kind == "var":
            self.take()
            i = int(text[1:])
            if not 1 <= i <= self.arity:
                raise ExpressionError(f"variable {text} out of range 1..{self.arity}", pos)
            return variable(i, self.arity)
        what = "end of input" if kind == "end" else repr(text)
        raise ExpressionError(f"expected an operand, found {what}", pos)


def parse_expr(text: str, arity: int) -> BooleanFunction:
    """Parse ``q<k>``, ``0``, ``1``, ``!``, ``&``, ``^``, ``|`` and parentheses."""
    return _Parser(text, arity).parse()


# --------------------------------------------------------------- printing

def _prime_implicants(minterms: list[int], k: int) -> list[tuple[int, int]]:
    # implicants are (value, dontcare-mask) pairs over k local variables
    current = {(m, 0) for m in minterms}
    primes: set[tuple[int, int]] = set()
    while current:
        merged = set()
        used = set()
        by_mask: dict[int, set[int]] = {}
        for v, d in current:
            by_mask.setdefault(d, set()).add(v)
        for d, values in by_mask.items():
            for v in values:
                for j in range(k):
                    bit = 1 << j
                    if d & bit or v & bit:
                        continue
                    w = v | bit
                    if w in values:
                        merged.add((v, d | bit))
                        used.add((v, d))
                        used.add((w, d))
        primes |= current - used
        current = merged
    return sorted(primes)


def _cover(minterms: list[int], primes: list[tuple[int, int]], k: int) -> list[tuple[int, int]]:
    full = (1 << k) - 1

    def covers(p, m):
        v, d = p
        return (m & (full ^ d)) == v

    uncovered = set(minterms)
    chosen = []
    for m in minterms:
        hits = [p for p in primes if covers(p, m)]
        if len(hits) == 1 and hits[0] not in chosen:
            chosen.append(hits[0])
    for p in chosen:
        uncovered -= {m for m in uncovered if covers(p, m)}
    while uncovered:
        best = max(
            primes,
            key=lambda p: (sum(covers(p, m) for m in uncovered), bin(p[1]).count("1"), -p[0], -p[1]),
        )
        chosen.append(best)
        uncovered -= {m for m in uncovered if covers(best, m)}
    return chosen


def _term_text(value: int, dc: int, support: list[int]) -> tuple[tuple[int, int], ...]:
    lits = []
    for j, var in enumerate(support):
        if dc >> j & 1:
            continue
        lits.append((var, value >> j & 1))
    return tuple(lits)


_QMC_LIMIT = 10


def print_expr(f: BooleanFunction) -> str:
    """Deterministic expression text; equal tables always print identically.

    Constants print as ``0``/``1``, disjunctions of variables as ``q1|q3``, and
    everything else as a sum of products over the essential variables.
    """
    cls = classify(f)
    if cls.constant is not None:
        return str(cls.constant)
    if cls.disjunction is not None:
        return "|".join(f"q{i}" for i in sorted(cls.disjunction))
    support = essential_variables(f)
    k = len(support)
    # project the table onto the support (other variables fixed at 0)
    bits = f.bits()
    local = [
        m for m in range(1 << k)
        if bits[sum(((m >> j) & 1) << (v - 1) for j, v in enumerate(support))]
    ]
    if k <= _QMC_LIMIT:
        implicants = _cover(local, _prime_implicants(local, k), k)
    else:
        implicants = [(m, 0) for m in local]
    terms = sorted(_term_text(v, d, support) for v, d in implicants)
    rendered = []
    for term in terms:
        rendered.append("&".join(f"q{v}" if pol else f"!q{v}" for v, pol in term))
    return "|".join(rendered)
