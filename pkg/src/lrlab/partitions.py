"""Integer partitions, Young diagrams, dominance order, and cell moves.

Every value is immutable after construction and every function is pure, so
all of this is safe to share between threads.
"""

from __future__ import annotations

from enum import Enum
from math import lcm
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidPartition, NotComparable, NotWeaklyDecreasing


class Cell(NamedTuple):
    """One box (row, col) of a Young diagram; both coordinates are 1-based."""

    row: int
    col: int


class Dominance(Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"
    DIFFERENT_WEIGHT = "DifferentWeight"


class Partition:
    """Weakly decreasing sequence of positive integers, in canonical form.

    Trailing zeros are stripped on construction and the empty sequence is the
    unit. Indexing past the end reads 0, which keeps prefix-sum arithmetic
    free of explicit padding.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        for x, y in zip(ps, ps[1:]):
            if x < y:
                raise NotWeaklyDecreasing(f"{list(ps)} is not weakly decreasing")
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if ps and ps[-1] < 0:
            raise InvalidPartition(f"{list(ps)} has negative parts")
        self._parts = ps

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for internal callers that already hold canonical tuples
        self = object.__new__(cls)
        self._parts = parts
        return self

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative row index")
        return self._parts[i] if i < len(self._parts) else 0

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        # plain lexicographic order on part tuples; used only for sorting
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"

    def padded(self, l: int) -> tuple[int, ...]:
        """Parts extended with zeros to length l."""
        if l < len(self._parts):
            raise InvalidPartition(f"{self} does not fit length {l}")
        return self._parts + (0,) * (l - len(self._parts))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths become parts)."""
        if not self._parts:
            return self
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition._trusted(tuple(cols))

    def cells(self) -> set[Cell]:
        return {Cell(i + 1, j + 1) for i, p in enumerate(self._parts) for j in range(p)}

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment."""
        return all(self[i] >= q for i, q in enumerate(other.parts))

    def plus(self, other: "Partition", l: int | None = None) -> "Partition":
        """Pointwise sum, both operands padded to a common length."""
        n = max(len(self), len(other)) if l is None else l
        a, b = self.padded(n), other.padded(n)
        return Partition._trusted(_strip(tuple(x + y for x, y in zip(a, b))))

    def scaled(self, n: int) -> "Partition":
        """Entrywise multiple n*A."""
        if n < 0:
            raise InvalidPartition("negative scale")
        if n == 0:
            return Partition._trusted(())
        return Partition._trusted(tuple(n * p for p in self._parts))


def _strip(ps: tuple[int, ...]) -> tuple[int, ...]:
    while ps and ps[-1] == 0:
        ps = ps[:-1]
    return ps


EMPTY = Partition()


def make_partition(raw: Iterable[int]) -> Partition:
    """Canonicalize a raw integer sequence (strip trailing zeros, validate)."""
    return Partition(raw)


def add_pointwise(a: Partition, b: Partition, l: int | None = None) -> Partition:
    return a.plus(b, l)


def single_column(r: int) -> Partition:
    """The one-column partition of height r (height 0 gives the unit)."""
    if r < 0:
        raise InvalidPartition("negative column height")
    return Partition._trusted((1,) * r)


def column_decomposition(a: Partition) -> list[Partition]:
    """Columns of a as single-column partitions; their pointwise sum is a."""
    return [single_column(h) for h in a.conjugate().parts]


def lcm_upto(l: int) -> int:
    """Least common multiple of 1..l."""
    if l < 1:
        raise ValueError("l must be at least 1")
    return lcm(*range(1, l + 1))


def dominance_compare(a: Partition, b: Partition) -> Dominance:
    """Prefix-sum comparison of equal-weight partitions."""
    if a.weight != b.weight:
        return Dominance.DIFFERENT_WEIGHT
    if a.parts == b.parts:
        return Dominance.EQUAL
    ge = le = True
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i]
        sb += b[i]
        if sa < sb:
            ge = False
        elif sb < sa:
            le = False
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def dominates(a: Partition, b: Partition) -> bool:
    """True when a is greater than or equal to b in dominance order."""
    return dominance_compare(a, b) in (Dominance.GREATER, Dominance.EQUAL)


def diagram_difference(a: Partition, b: Partition) -> tuple[set[Cell], set[Cell]]:
    """Cells only in a's diagram and cells only in b's diagram."""
    ca, cb = a.cells(), b.cells()
    return ca - cb, cb - ca


def diagram_distance(a: Partition, b: Partition) -> int:
    """Number of cells of a's diagram outside b's (the distance when weights agree)."""
    return len(a.cells() - b.cells())


def interpolating_sequence(a: Partition, b: Partition) -> list[Partition]:
    """Chain a = P0 > P1 > ... > Pk = b moving one cell per step.

    Each step takes the cell from the last row that is still too long and
    drops it onto the first row that is too short, so every intermediate
    partition stays between a and b in dominance order and all moved cells
    stay inside the symmetric difference of the two diagrams.
    """
    rel = dominance_compare(a, b)
    if rel not in (Dominance.GREATER, Dominance.EQUAL):
        raise NotComparable(f"{a} does not dominate {b}")
    out = [a]
    n = max(len(a), len(b))
    cur = list(a.padded(n))
    tgt = b.padded(n)
    while tuple(cur) != tgt:
        alpha = next(i for i in range(n) if cur[i] < tgt[i])
        beta = max(i for i in range(alpha) if cur[i] > tgt[i])
        cur[beta] -= 1
        cur[alpha] += 1
        out.append(Partition._trusted(_strip(tuple(cur))))
    return out


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield EMPTY
        return
    ml = n if max_len is None else min(max_len, n)
    mp = n if max_part is None else min(max_part, n)
    if ml <= 0 or mp <= 0:
        return
    acc: list[int] = []

    def rec(rem: int, prev: int, slots: int) -> Iterator[Partition]:
        if rem == 0:
            yield Partition._trusted(tuple(acc))
            return
        if slots == 0:
            return
        hi = min(prev, rem)
        lo = -(-rem // slots)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(rem - v, v, slots - 1)
            acc.pop()

    yield from rec(n, mp, ml)


def partitions_up_to(n: int, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of weight 0..n, weights ascending, descending lex inside."""
    for w in range(n + 1):
        yield from partitions_of(w, max_len=max_len)


def dominated_partitions(target: Partition, l: int) -> Iterator[Partition]:
    """All B of length <= l with |B| = |target| and B below target in dominance.

    Backtracking bounded by the target's prefix sums, descending lexicographic
    order; the target itself comes first.
    """
    tp = target.padded(l)
    total = sum(tp)
    pref = []
    s = 0
    for v in tp:
        s += v
        pref.append(s)
    acc: list[int] = []

    def rec(i: int, placed: int, prev: int) -> Iterator[Partition]:
        if i == l:
            if placed == total:
                yield Partition._trusted(_strip(tuple(acc)))
            return
        rem = total - placed
        hi = min(prev, pref[i] - placed, rem)
        lo = -(-rem // (l - i))
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, placed + v, v)
            acc.pop()

    yield from rec(0, 0, total if total else 0)


class SignedVector:
    """Integer vector of a fixed explicit length; zeros are significant."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        self._entries = tuple(int(e) for e in entries)

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignedVector) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(("SignedVector", self._entries))

    def __repr__(self) -> str:
        return f"SignedVector({list(self._entries)})"

    def __add__(self, other: "SignedVector") -> "SignedVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return SignedVector(x + y for x, y in zip(self._entries, other._entries))

    def add_partition(self, a: Partition) -> "SignedVector":
        return SignedVector(x + y for x, y in zip(self._entries, a.padded(len(self))))

    def to_partition(self) -> Partition | None:
        """The same vector as a partition, or None when it is not one."""
        es = self._entries
        if any(x < y for x, y in zip(es, es[1:])) or (es and min(es) < 0):
            return None
        return Partition._trusted(_strip(es))
