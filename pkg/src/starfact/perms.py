"""Permutations of {1..n}, integer partitions, total orders and orbits.

Symbols are the integers 1..n throughout.  Products are read left to
right: ``(p * q)(x) == q(p(x))``, i.e. apply ``p`` first, then ``q``.

>>> str(Permutation.parse("(1 2)", 3) * Permutation.parse("(1 3)", 3))
'(1 2 3)'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations as _iter_permutations
from math import factorial


class DegreeMismatchError(ValueError):
    """Two operands live in symmetric groups of different degree."""


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers; ``()`` is empty.

    >>> Partition((3, 1)).n, Partition((3, 1)).length
    (4, 2)
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"parts must weakly decrease: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def union(self, part: int) -> "Partition":
        """This partition with one extra part."""
        return Partition(tuple(sorted(self.parts + (part,), reverse=True)))

    def remove(self, part: int) -> "Partition":
        """This partition with one copy of ``part`` removed."""
        lst = list(self.parts)
        lst.remove(part)
        return Partition(tuple(lst))

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.parts) + "]"

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse ``"[3,1,1]"`` (or ``"[]"``)."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"expected [a,b,...]: {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return Partition(())
        return Partition(tuple(int(tok) for tok in inner.split(",")))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order."""

    def gen(rest: int, cap: int) -> list[tuple[int, ...]]:
        if rest == 0:
            return [()]
        out = []
        for first in range(min(rest, cap), 0, -1):
            out.extend((first,) + tail for tail in gen(rest - first, first))
        return out

    return tuple(Partition(parts) for parts in gen(n, n))


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1, 2, ..., n."""

    __slots__ = ("images",)

    def __init__(self, images) -> None:
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of [{len(images)}]: {images}")
        self.images = images

    # construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if a == b or not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"bad transposition ({a} {b}) in S_{n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for s in cyc:
                if not 1 <= s <= n:
                    raise ValueError(f"symbol {s} outside [{n}]")
                if s in seen:
                    raise ValueError(f"symbol {s} repeated across cycles")
                seen.add(s)
            for i, s in enumerate(cyc):
                images[s - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation, e.g. ``"(1 2)(3)"``.

        Fixed points may be omitted when ``n`` is given; otherwise the
        degree is the largest symbol mentioned.
        """
        text = text.strip()
        if not re.fullmatch(r"(\s*\([0-9\s]*\)\s*)+", text):
            raise ValueError(f"not cycle notation: {text!r}")
        cycles = []
        for group in re.findall(r"\(([0-9\s]*)\)", text):
            syms = tuple(int(tok) for tok in group.split())
            if syms:
                cycles.append(syms)
        degree = max((max(c) for c in cycles), default=0)
        if n is None:
            n = degree
            if n == 0:
                raise ValueError("cannot infer degree from empty cycles")
        elif degree > n:
            raise ValueError(f"symbol {degree} outside [{n}]")
        return cls.from_cycles(n, cycles)

    # basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def apply(self, s: int) -> int:
        return self.images[s - 1]

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles (fixed points included), each starting at its smallest
        symbol, sorted by that symbol."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.apply(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self.apply(x)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> Partition:
        return Partition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    @property
    def cycle_count(self) -> int:
        return len(self.cycles())

    # arithmetic -------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: apply ``self`` first, then ``other``."""
        if self.n != other.n:
            raise DegreeMismatchError(f"S_{self.n} vs S_{other.n}")
        q = other.images
        return Permutation(tuple(q[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def relabel(self, by: "Permutation") -> "Permutation":
        """The permutation whose cycles are this one's with every symbol
        ``s`` replaced by ``by(s)``.

        >>> str(Permutation.parse("(1 2)(3)").relabel(Permutation.parse("(1 3)")))
        '(1)(2 3)'
        """
        if self.n != by.n:
            raise DegreeMismatchError(f"S_{self.n} vs S_{by.n}")
        out = [0] * self.n
        b = by.images
        for x in range(1, self.n + 1):
            out[b[x - 1] - 1] = b[self.images[x - 1] - 1]
        return Permutation(out)

    # protocol ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(s) for s in c) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return p * q


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """Relabel each symbol ``s`` in ``p``'s cycles to ``by(s)``."""
    return p.relabel(by)


def symmetric_group(n: int):
    """Yield all of S_n in lexicographic image order."""
    for images in _iter_permutations(range(1, n + 1)):
        yield Permutation(images)


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> dict[Partition, tuple[Permutation, ...]]:
    """Cycle type -> all members, in lexicographic image order."""
    out: dict[Partition, list[Permutation]] = {}
    for p in symmetric_group(n):
        out.setdefault(p.cycle_type(), []).append(p)
    return {lam: tuple(members) for lam, members in out.items()}


def class_size(n: int, lam: Partition) -> int:
    """Size of the conjugacy class of cycle type ``lam`` in S_n."""
    if lam.n != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    denom = 1
    for part in lam.parts:
        denom *= part
    mult: dict[int, int] = {}
    for part in lam.parts:
        mult[part] = mult.get(part, 0) + 1
    for m in mult.values():
        denom *= factorial(m)
    return factorial(n) // denom


def class_representative(lam: Partition) -> Permutation:
    """Canonical member of the class: cycles filled with consecutive symbols."""
    cycles = []
    next_sym = 1
    for part in lam.parts:
        cycles.append(tuple(range(next_sym, next_sym + part)))
        next_sym += part
    return Permutation.from_cycles(lam.n, cycles)


def conjugating_permutation(src: Permutation, dst: Permutation) -> Permutation:
    """A ``d`` whose inverse-relabelling carries ``src`` to ``dst``, i.e.
    ``src.relabel(d.inverse()) == dst``.  Cycles are matched sorted by
    (length descending, smallest symbol), so the choice is deterministic.
    """
    if src.cycle_type() != dst.cycle_type():
        raise ValueError(f"{src} and {dst} are not conjugate")
    key = lambda c: (-len(c), c[0])
    r = [0] * src.n
    for cs, cd in zip(sorted(src.cycles(), key=key), sorted(dst.cycles(), key=key)):
        for s, t in zip(cs, cd):
            r[s - 1] = t
    return Permutation(r).inverse()


# ---------------------------------------------------------------------------
# transpositions


@dataclass(frozen=True, order=True)
class Transposition:
    """An unordered pair of distinct symbols, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if a == b or a < 1 or b < 1:
            raise ValueError(f"bad transposition ({a} {b})")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    def __contains__(self, s: int) -> bool:
        return s == self.a or s == self.b

    def other(self, s: int) -> int:
        if s == self.a:
            return self.b
        if s == self.b:
            return self.a
        raise ValueError(f"{s} not in {self}")

    def display(self, order: "TotalOrder") -> tuple[int, int]:
        """The pair as (smaller, larger) under ``order``."""
        if order.rank(self.a) < order.rank(self.b):
            return (self.a, self.b)
        return (self.b, self.a)

    def as_permutation(self, n: int) -> Permutation:
        return Permutation.transposition(n, self.a, self.b)

    def relabel(self, by: Permutation) -> "Transposition":
        return Transposition(by.apply(self.a), by.apply(self.b))

    def __str__(self) -> str:
        return f"({self.a} {self.b})"


def all_transpositions(n: int) -> tuple[Transposition, ...]:
    return tuple(
        Transposition(a, b) for a in range(1, n) for b in range(a + 1, n + 1)
    )


# ---------------------------------------------------------------------------
# total orders


class TotalOrder:
    """A total order on {1..n}, given as its sequence from smallest to largest.

    ``TotalOrder((3, 2, 1))`` is the order 3 < 2 < 1.
    """

    __slots__ = ("sequence", "_rank")

    def __init__(self, sequence) -> None:
        sequence = tuple(sequence)
        if sorted(sequence) != list(range(1, len(sequence) + 1)):
            raise ValueError(f"not an arrangement of [{len(sequence)}]: {sequence}")
        self.sequence = sequence
        self._rank = {s: i + 1 for i, s in enumerate(sequence)}

    @classmethod
    def natural(cls, n: int) -> "TotalOrder":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.sequence)

    @property
    def is_natural(self) -> bool:
        return all(s == i + 1 for i, s in enumerate(self.sequence))

    def rank(self, s: int) -> int:
        return self._rank[s]

    def precedes(self, a: int, b: int) -> bool:
        return self._rank[a] < self._rank[b]

    def larger_of(self, t: Transposition) -> int:
        return t.b if self._rank[t.a] < self._rank[t.b] else t.a

    def swapped(self, j: int) -> "TotalOrder":
        """This order with the symbols in positions j, j+1 exchanged (1-based)."""
        if not 1 <= j <= self.n - 1:
            raise ValueError(f"swap position {j} outside 1..{self.n - 1}")
        seq = list(self.sequence)
        seq[j - 1], seq[j] = seq[j], seq[j - 1]
        return TotalOrder(seq)

    def __eq__(self, other) -> bool:
        return isinstance(other, TotalOrder) and self.sequence == other.sequence

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __str__(self) -> str:
        return "<".join(str(s) for s in self.sequence)

    def __repr__(self) -> str:
        return f"TotalOrder({self.sequence})"

    @staticmethod
    def parse(text: str) -> "TotalOrder":
        """Parse ``"3<2<1"``."""
        return TotalOrder(tuple(int(tok) for tok in text.strip().split("<")))


def order_from_conjugator(delta: Permutation) -> TotalOrder:
    """The order ``d^{-1}(1) < d^{-1}(2) < ... < d^{-1}(n)``.

    Relabelling symbols by ``delta.inverse()`` carries sequences that are
    monotone under the natural order to sequences monotone under this one.
    """
    dinv = delta.inverse()
    return TotalOrder(tuple(dinv.apply(k) for k in range(1, delta.n + 1)))


def sort_swaps(order: TotalOrder) -> tuple[int, ...]:
    """Adjacent-swap positions that bubble-sort ``order``'s sequence into the
    natural one, in the order the swaps are applied."""
    seq = list(order.sequence)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(1, len(seq)):
            if seq[j - 1] > seq[j]:
                seq[j - 1], seq[j] = seq[j], seq[j - 1]
                swaps.append(j)
                changed = True
    return tuple(swaps)


def simple_reflection_decomposition(target: TotalOrder) -> tuple[int, ...]:
    """Adjacent-swap positions transforming the natural order into ``target``.

    Deterministic (reversed bubble sort); replaying the swaps on the natural
    sequence reproduces ``target``.
    """
    return tuple(reversed(sort_swaps(target)))


# ---------------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class OrbitPartition:
    """The partition of {1..n} into orbits of a set of permutations."""

    n: int
    blocks: frozenset[frozenset[int]]

    @property
    def is_transitive(self) -> bool:
        return len(self.blocks) == 1

    def block_of(self, s: int) -> frozenset[int]:
        for blk in self.blocks:
            if s in blk:
                return blk
        raise ValueError(f"{s} outside [{self.n}]")

    def sorted_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(b)) for b in self.blocks))


def orbits(generators, n: int | None = None) -> OrbitPartition:
    """Orbits of {1..n} under the group the generators generate.

    ``n`` may be omitted when there is at least one generator.
    """
    gens = list(generators)
    if n is None:
        if not gens:
            raise ValueError("need n for an empty generating set")
        n = gens[0].n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if g.n != n:
            raise DegreeMismatchError(f"S_{g.n} generator in S_{n} orbit computation")
        for s in range(1, n + 1):
            ra, rb = find(s), find(g.apply(s))
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, set[int]] = {}
    for s in range(1, n + 1):
        groups.setdefault(find(s), set()).add(s)
    return OrbitPartition(n, frozenset(frozenset(b) for b in groups.values()))


def is_transitive(generators, n: int) -> bool:
    return orbits(generators, n).is_transitive


class JoinCut(Enum):
    JOIN = "join"
    CUT = "cut"


def join_cut(nu: Permutation, t: Transposition) -> JoinCut:
    """JOIN when ``t``'s symbols lie in different cycles of ``nu`` (so the
    product ``nu * t`` has one cycle fewer), CUT when in the same cycle."""
    x = nu.apply(t.a)
    while x != t.a:
        if x == t.b:
            return JoinCut.CUT
        x = nu.apply(x)
    return JoinCut.JOIN
