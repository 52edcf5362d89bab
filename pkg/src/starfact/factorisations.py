"""Transposition factorisations of permutations: records, listers, counters.

Four families are covered.

* Star factorisations: every factor is (a root); the tuple must use every
  non-root symbol at least once (condition S2') and have length
  n + c - 2 + 2g (condition S1), where c counts the target's cycles.
* Monotone factorisations: length n - c + 2g, and the factors' larger
  symbols (under a fixed total order) weakly increase left to right (H2).
* Monotone double factorisations: a full cycle followed by a monotone tail
  of length c - 1 + 2g (conditions H0/H1/H2).
* Double Hurwitz tuples: a permutation from a fixed class followed by
  arbitrary transpositions, landing in a second class, generating a
  transitive group (H3'').

Counting and listing are deliberately separate code paths: counters run a
layered dynamic programme over (prefix product, auxiliary state), listers
do a pruned depth-first search and return fully validated records.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import (
    Partition,
    Permutation,
    TotalOrder,
    Transposition,
    all_transpositions,
    class_representative,
    class_size,
    conjugacy_classes,
    orbits,
    symmetric_group,
)


class ConditionViolation(ValueError):
    """A factorisation record failed one of its defining conditions."""

    def __init__(self, condition: str, message: str) -> None:
        self.condition = condition
        super().__init__(f"condition {condition} violated: {message}")


def _product(n: int, factors) -> Permutation:
    images = list(range(1, n + 1))
    for t in factors:
        a, b = t.a, t.b
        for i, v in enumerate(images):
            if v == a:
                images[i] = b
            elif v == b:
                images[i] = a
    return Permutation(images)


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class StarFactorisation:
    """Legs (a_1, ..., a_m), standing for the product (a_1 root)...(a_m root)."""

    n: int
    root: int
    legs: tuple[int, ...]
    target: Permutation
    genus: int

    def __post_init__(self) -> None:
        n, root = self.n, self.root
        if not 1 <= root <= n:
            raise ValueError(f"root {root} outside [{n}]")
        if self.target.n != n:
            raise ValueError("target degree differs from n")
        if any(a == root or not 1 <= a <= n for a in self.legs):
            raise ValueError(f"legs must avoid the root and stay in [{n}]")
        missing = set(range(1, n + 1)) - {root} - set(self.legs)
        if missing:
            t = Transposition(min(missing), root)
            raise ConditionViolation("S2'", f"{t} never appears")
        c = self.target.cycle_count
        if self.genus < 0 or len(self.legs) != n + c - 2 + 2 * self.genus:
            raise ConditionViolation(
                "S1",
                f"length {len(self.legs)} != {n} + {c} - 2 + 2*{self.genus}",
            )
        if _product(n, self.factors) != self.target:
            raise ConditionViolation("product", f"factors do not multiply to {self.target}")

    @classmethod
    def from_legs(cls, n: int, root: int, legs, target: Permutation) -> "StarFactorisation":
        """Build a record, deriving the genus from the leg count."""
        legs = tuple(legs)
        # coverage is reported before the length condition, mirroring the
        # constructor's order, so the genus derivation may not jump the queue
        missing = set(range(1, n + 1)) - {root} - set(legs)
        if missing and all(1 <= a <= n and a != root for a in legs):
            t = Transposition(min(missing), root)
            raise ConditionViolation("S2'", f"{t} never appears")
        c = target.cycle_count
        twice_g = len(legs) - (n + c - 2)
        if twice_g < 0 or twice_g % 2:
            raise ConditionViolation(
                "S1", f"length {len(legs)} has no genus: {n} + {c} - 2 + 2g"
            )
        return cls(n, root, legs, target, twice_g // 2)

    @property
    def factors(self) -> tuple[Transposition, ...]:
        return tuple(Transposition(a, self.root) for a in self.legs)

    def to_line(self) -> str:
        return "".join(str(t) for t in self.factors)

    def to_record(self) -> dict:
        return {
            "family": "star",
            "n": self.n,
            "root": self.root,
            "genus": self.genus,
            "target": str(self.target),
            "factors": [str(t) for t in self.factors],
        }


@dataclass(frozen=True)
class MonotoneFactorisation:
    """Transpositions whose larger symbols weakly increase under ``order``."""

    n: int
    order: TotalOrder
    factors: tuple[Transposition, ...]
    target: Permutation
    genus: int

    def __post_init__(self) -> None:
        n = self.n
        if self.order.n != n or self.target.n != n:
            raise ValueError("order/target degree differs from n")
        if any(t.b > n for t in self.factors):
            raise ValueError(f"factor symbol outside [{n}]")
        ranks = [self.order.rank(self.order.larger_of(t)) for t in self.factors]
        if any(x > y for x, y in zip(ranks, ranks[1:])):
            raise ConditionViolation("H2", f"larger symbols not weakly increasing under {self.order}")
        c = self.target.cycle_count
        if self.genus < 0 or len(self.factors) != n - c + 2 * self.genus:
            raise ConditionViolation(
                "H1", f"length {len(self.factors)} != {n} - {c} + 2*{self.genus}"
            )
        if _product(n, self.factors) != self.target:
            raise ConditionViolation("product", f"factors do not multiply to {self.target}")

    @classmethod
    def from_factors(cls, n, order, factors, target) -> "MonotoneFactorisation":
        factors = tuple(factors)
        c = target.cycle_count
        twice_g = len(factors) - (n - c)
        if twice_g < 0 or twice_g % 2:
            raise ConditionViolation(
                "H1", f"length {len(factors)} has no genus: {n} - {c} + 2g"
            )
        return cls(n, order, factors, target, twice_g // 2)

    def to_line(self) -> str:
        return "".join(str(t) for t in self.factors)

    def to_record(self) -> dict:
        return {
            "family": "monotone",
            "n": self.n,
            "root": None,
            "genus": self.genus,
            "target": str(self.target),
            "factors": [str(t) for t in self.factors],
            "order": str(self.order),
        }


@dataclass(frozen=True)
class MonotoneDoubleFactorisation:
    """A full cycle, then a tail monotone under the natural order."""

    n: int
    sigma: Permutation
    factors: tuple[Transposition, ...]
    target: Permutation
    genus: int

    def __post_init__(self) -> None:
        n = self.n
        if self.sigma.n != n or self.target.n != n:
            raise ValueError("sigma/target degree differs from n")
        if self.sigma.cycle_count != 1:
            raise ConditionViolation("H0", f"{self.sigma} is not a full cycle")
        c = self.target.cycle_count
        if self.genus < 0 or len(self.factors) != c - 1 + 2 * self.genus:
            raise ConditionViolation(
                "H1", f"tail length {len(self.factors)} != {c} - 1 + 2*{self.genus}"
            )
        nat = TotalOrder.natural(n)
        bs = [nat.larger_of(t) for t in self.factors]
        if any(x > y for x, y in zip(bs, bs[1:])):
            raise ConditionViolation("H2", "larger symbols not weakly increasing")
        if self.sigma * _product(n, self.factors) != self.target:
            raise ConditionViolation("product", f"factors do not multiply to {self.target}")

    def to_line(self) -> str:
        return str(self.sigma) + "".join(str(t) for t in self.factors)

    def to_record(self) -> dict:
        return {
            "family": "monotone_double",
            "n": self.n,
            "root": None,
            "genus": self.genus,
            "target": str(self.target),
            "factors": [str(self.sigma)] + [str(t) for t in self.factors],
        }


@dataclass(frozen=True)
class DoubleHurwitzFactorisation:
    """A class member followed by transpositions, transitive overall."""

    n: int
    sigma: Permutation
    factors: tuple[Transposition, ...]
    beta: Partition
    genus: int

    def __post_init__(self) -> None:
        n = self.n
        alpha = self.sigma.cycle_type()
        m = len(self.factors)
        if self.genus < 0 or m != alpha.length + self.beta.length - 2 + 2 * self.genus:
            raise ConditionViolation(
                "H1", f"length {m} != {alpha.length} + {self.beta.length} - 2 + 2*{self.genus}"
            )
        if (self.sigma * _product(n, self.factors)).cycle_type() != self.beta:
            raise ConditionViolation("product", f"product does not land in class {self.beta}")
        gens = [self.sigma] + [t.as_permutation(n) for t in self.factors]
        if not orbits(gens, n).is_transitive:
            raise ConditionViolation("H3''", "generated group is not transitive")


# ---------------------------------------------------------------------------
# small shared helpers


def _cycle_count(images: tuple[int, ...]) -> int:
    n = len(images)
    seen = [False] * n
    c = 0
    for start in range(n):
        if seen[start]:
            continue
        c += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x] - 1
    return c


@lru_cache(maxsize=None)
def full_cycles(n: int) -> tuple[Permutation, ...]:
    """All n-cycles of S_n, in lexicographic image order."""
    return tuple(p for p in symmetric_group(n) if p.cycle_count == 1)


# ---------------------------------------------------------------------------
# star factorisations


_STAR_LAYERS: dict[tuple[int, int], list[dict]] = {}
_STAR_FREE_LAYERS: dict[tuple[int, int], list[dict]] = {}


def _star_layers(n: int, root: int, length: int) -> list[dict]:
    """Layered walk counts over states (prefix product, covered-leg bitmask)."""
    key = (n, root)
    layers = _STAR_LAYERS.setdefault(key, [{(tuple(range(1, n + 1)), 0): 1}])
    while len(layers) <= length:
        nxt: dict = {}
        for (images, mask), cnt in layers[-1].items():
            for a in range(1, n + 1):
                if a == root:
                    continue
                new_images = tuple(
                    root if v == a else a if v == root else v for v in images
                )
                state = (new_images, mask | (1 << (a - 1)))
                nxt[state] = nxt.get(state, 0) + cnt
        layers.append(nxt)
    return layers


def _star_free_layers(n: int, root: int, length: int) -> list[dict]:
    key = (n, root)
    layers = _STAR_FREE_LAYERS.setdefault(key, [{tuple(range(1, n + 1)): 1}])
    while len(layers) <= length:
        nxt: dict = {}
        for images, cnt in layers[-1].items():
            for a in range(1, n + 1):
                if a == root:
                    continue
                new_images = tuple(
                    root if v == a else a if v == root else v for v in images
                )
                nxt[new_images] = nxt.get(new_images, 0) + cnt
        layers.append(nxt)
    return layers


def star_length(target: Permutation, genus: int) -> int:
    return target.n + target.cycle_count - 2 + 2 * genus


def count_star(target: Permutation, genus: int, root: int) -> int:
    """Number of transitive star factorisations, by dynamic programme."""
    n = target.n
    if not 1 <= root <= n:
        raise ValueError(f"root {root} outside [{n}]")
    if genus < 0:
        return 0
    m = star_length(target, genus)
    full = ((1 << n) - 1) & ~(1 << (root - 1))
    return _star_layers(n, root, m)[m].get((target.images, full), 0)


def count_star_unconstrained(target: Permutation, length: int, root: int) -> int:
    """Number of length-``length`` star-transposition tuples with the given
    product, with no coverage requirement."""
    n = target.n
    if not 1 <= root <= n:
        raise ValueError(f"root {root} outside [{n}]")
    if length < 0:
        return 0
    return _star_free_layers(n, root, length)[length].get(target.images, 0)


def enumerate_star(target: Permutation, genus: int, root: int) -> list[StarFactorisation]:
    """All transitive star factorisations, legs in lexicographic order."""
    n = target.n
    if not 1 <= root <= n:
        raise ValueError(f"root {root} outside [{n}]")
    if genus < 0:
        return []
    m = star_length(target, genus)
    need = set(range(1, n + 1)) - {root}
    out: list[StarFactorisation] = []
    legs: list[int] = []

    # remaining[x-1] = image of x under prefix^{-1} * target
    remaining = list(target.images)

    def rec(depth: int, covered: frozenset) -> None:
        rem = m - depth
        dist = n - _cycle_count(tuple(remaining))
        if dist > rem or (rem - dist) % 2 or len(need - covered) > rem:
            return
        if depth == m:
            out.append(StarFactorisation(n, root, tuple(legs), target, genus))
            return
        for a in sorted(need):
            legs.append(a)
            remaining[a - 1], remaining[root - 1] = remaining[root - 1], remaining[a - 1]
            rec(depth + 1, covered | {a})
            remaining[a - 1], remaining[root - 1] = remaining[root - 1], remaining[a - 1]
            legs.pop()

    rec(0, frozenset())
    return out


# ---------------------------------------------------------------------------
# monotone factorisations


_MONO_LAYERS: dict[tuple[int, tuple[int, ...]], list[dict]] = {}
_MD_LAYERS: dict[int, list[dict]] = {}


def _mono_transitions(n: int, sequence: tuple[int, ...]):
    """Per minimum-rank list of admissible (a, b, rank of larger) moves."""
    order = TotalOrder(sequence)
    moves = []
    for t in all_transpositions(n):
        big = order.larger_of(t)
        moves.append((t.a, t.b, order.rank(big)))
    by_rank = []
    for r in range(n + 1):
        by_rank.append(tuple(mv for mv in moves if mv[2] >= r))
    return by_rank


def _evolve_monotone(layers: list[dict], by_rank, n: int, length: int) -> None:
    while len(layers) <= length:
        nxt: dict = {}
        for (images, r), cnt in layers[-1].items():
            for a, b, rb in by_rank[r]:
                new_images = tuple(b if v == a else a if v == b else v for v in images)
                state = (new_images, rb)
                nxt[state] = nxt.get(state, 0) + cnt
        layers.append(nxt)


def _mono_layers(n: int, order: TotalOrder, length: int) -> list[dict]:
    key = (n, order.sequence)
    layers = _MONO_LAYERS.setdefault(key, [{(tuple(range(1, n + 1)), 0): 1}])
    _evolve_monotone(layers, _mono_transitions(n, order.sequence), n, length)
    return layers


def _md_layers(n: int, length: int) -> list[dict]:
    if n not in _MD_LAYERS:
        _MD_LAYERS[n] = [{(s.images, 0): 1 for s in full_cycles(n)}]
    layers = _MD_LAYERS[n]
    _evolve_monotone(layers, _mono_transitions(n, tuple(range(1, n + 1))), n, length)
    return layers


def monotone_length(target: Permutation, genus: int) -> int:
    return target.n - target.cycle_count + 2 * genus


def count_monotone(target: Permutation, genus: int, order: TotalOrder | None = None) -> int:
    """Number of monotone factorisations, by dynamic programme."""
    n = target.n
    if order is None:
        order = TotalOrder.natural(n)
    if genus < 0:
        return 0
    m = monotone_length(target, genus)
    layer = _mono_layers(n, order, m)[m]
    return sum(layer.get((target.images, r), 0) for r in range(n + 1))


def count_monotone_double(target: Permutation, genus: int) -> int:
    """Number of (full cycle, monotone tail) factorisations, by DP."""
    n = target.n
    if genus < 0:
        return 0
    k = target.cycle_count - 1 + 2 * genus
    layer = _md_layers(n, k)[k]
    return sum(layer.get((target.images, r), 0) for r in range(n + 1))


def _list_monotone_by_length(
    target: Permutation, length: int, order: TotalOrder
) -> list[tuple[Transposition, ...]]:
    n = target.n
    if length < 0:
        return []
    moves = []
    for t in all_transpositions(n):
        big = order.larger_of(t)
        small = t.other(big)
        moves.append((order.rank(big), order.rank(small), t))
    moves.sort()
    out: list[tuple[Transposition, ...]] = []
    path: list[Transposition] = []
    remaining = list(target.images)

    def rec(depth: int, min_rank: int) -> None:
        rem = length - depth
        dist = n - _cycle_count(tuple(remaining))
        if dist > rem or (rem - dist) % 2:
            return
        if depth == length:
            out.append(tuple(path))
            return
        for rb, _, t in moves:
            if rb < min_rank:
                continue
            a, b = t.a, t.b
            path.append(t)
            remaining[a - 1], remaining[b - 1] = remaining[b - 1], remaining[a - 1]
            rec(depth + 1, rb)
            remaining[a - 1], remaining[b - 1] = remaining[b - 1], remaining[a - 1]
            path.pop()

    rec(0, 0)
    return out


def enumerate_monotone(
    target: Permutation, genus: int, order: TotalOrder | None = None
) -> list[MonotoneFactorisation]:
    """All monotone factorisations, factor sequences in rank-lexicographic order."""
    n = target.n
    if order is None:
        order = TotalOrder.natural(n)
    if genus < 0:
        return []
    m = monotone_length(target, genus)
    return [
        MonotoneFactorisation(n, order, facs, target, genus)
        for facs in _list_monotone_by_length(target, m, order)
    ]


def enumerate_monotone_double(target: Permutation, genus: int) -> list[MonotoneDoubleFactorisation]:
    """All (full cycle, monotone tail) factorisations of the target."""
    n = target.n
    if genus < 0:
        return []
    k = target.cycle_count - 1 + 2 * genus
    nat = TotalOrder.natural(n)
    out = []
    for sigma in full_cycles(n):
        gam = sigma.inverse() * target
        slack = k - (n - gam.cycle_count)
        if slack < 0 or slack % 2:
            continue
        for facs in _list_monotone_by_length(gam, k, nat):
            out.append(MonotoneDoubleFactorisation(n, sigma, facs, target, genus))
    return out


# ---------------------------------------------------------------------------
# strictly monotone factorisations


def strictly_monotone_factorisation(target: Permutation) -> tuple[Transposition, ...]:
    """The unique factorisation (j_1 i_1)...(j_k i_k) with j_t < i_t and
    i_1 < i_2 < ... < i_k; its length is n - c and its factors span exactly
    the non-singleton orbits of the target.

    Peeling from the right: the last factor is (target(i), i) where i is the
    largest moved symbol; right-multiplying by it removes i from the support.
    """
    n = target.n
    facs: list[Transposition] = []
    current = target
    while True:
        moved = [s for s in range(n, 0, -1) if current.apply(s) != s]
        if not moved:
            break
        i = moved[0]
        j = current.apply(i)
        facs.append(Transposition(j, i))
        current = current * Permutation.transposition(n, j, i)
    facs.reverse()
    assert len(facs) == n - target.cycle_count
    assert orbits([t.as_permutation(n) for t in facs], n) == orbits([target], n)
    return tuple(facs)


# ---------------------------------------------------------------------------
# double Hurwitz tuples


def count_double_hurwitz(
    n: int, alpha: Partition, beta: Partition, genus: int, *, symmetry: bool = True
) -> int:
    """Number of (sigma, tau_1, ..., tau_m) with sigma of type ``alpha``, the
    product of type ``beta``, m = len(alpha) + len(beta) - 2 + 2g, and the
    whole tuple acting transitively.

    Tuple sets for conjugate choices of sigma are in product- and
    transitivity-preserving bijection, so by default one representative is
    enumerated and scaled by the class size; ``symmetry=False`` loops over
    the entire class instead.
    """
    if alpha.n != n or beta.n != n:
        raise ValueError("alpha and beta must be partitions of n")
    if genus < 0:
        return 0
    m = alpha.length + beta.length - 2 + 2 * genus
    if symmetry:
        sigmas = [class_representative(alpha)]
        scale = class_size(n, alpha)
    else:
        sigmas = list(conjugacy_classes(n)[alpha])
        scale = 1
    # a full-cycle sigma already acts transitively on its own
    check_orbits = alpha != Partition((n,))
    target_len = beta.length
    total = 0
    for sigma in sigmas:
        total += _count_dh_from(sigma, m, beta, target_len, check_orbits)
    return total * scale


def _count_dh_from(
    sigma: Permutation, m: int, beta: Partition, target_len: int, check_orbits: bool
) -> int:
    n = sigma.n
    trans = all_transpositions(n)
    count = 0
    images = list(sigma.images)
    path: list[Transposition] = []

    def rec(depth: int) -> None:
        nonlocal count
        rem = m - depth
        gap = abs(_cycle_count(tuple(images)) - target_len)
        if gap > rem or (rem - gap) % 2:
            return
        if depth == m:
            if Permutation(images).cycle_type() != beta:
                return
            if check_orbits and not orbits(
                [sigma] + [t.as_permutation(n) for t in path], n
            ).is_transitive:
                return
            count += 1
            return
        for t in trans:
            a, b = t.a, t.b
            for i, v in enumerate(images):
                if v == a:
                    images[i] = b
                elif v == b:
                    images[i] = a
            path.append(t)
            rec(depth + 1)
            path.pop()
            for i, v in enumerate(images):
                if v == a:
                    images[i] = b
                elif v == b:
                    images[i] = a

    rec(0)
    return count


def b_number(n: int, beta: Partition, genus: int) -> int:
    """Transitive double Hurwitz count from the full-cycle class, divided
    exactly by the size of the target class."""
    total = count_double_hurwitz(n, Partition((n,)), beta, genus)
    cls = class_size(n, beta)
    if total % cls:
        raise ArithmeticError(
            f"count {total} not divisible by class size {cls} for {beta}"
        )
    return total // cls
