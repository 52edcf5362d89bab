"""Integer group-algebra arithmetic for S_n, Jucys-Murphy elements, and the
transitivity operator on polynomials in them.

The Jucys-Murphy element for slot k is the sum of the transpositions
(1 k), (2 k), ..., (k-1 k).  Polynomials in the commuting family of all
slots from 2 to n are handled symbolically by :class:`SymExpr`; expanding an
expression produces monomials, each a tuple of exponents for slots 2..n,
and every monomial has a canonical multiline form

    product over slots j ascending of (sum of (i j) over i < j)^(exponent).

The transitivity operator keeps, inside that canonical expansion, exactly
the transposition tuples whose edges connect all of {1..n}.  It is linear
over monomials but deliberately NOT an algebra homomorphism; see
``transitive_evaluate``.
"""

from __future__ import annotations

from itertools import combinations, product

from .perms import Partition, Permutation, conjugacy_classes, partitions_of


class NotCentralError(ValueError):
    """Raised when a class decomposition is requested for a non-central
    element; ``witness`` holds two same-cycle-type permutations whose
    coefficients differ."""

    def __init__(self, witness: tuple[Permutation, Permutation], message: str) -> None:
        self.witness = witness
        super().__init__(message)


class AlgebraElement:
    """An element of the integer group algebra of S_n, as a sparse
    permutation-to-coefficient map."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None) -> None:
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for images, coeff in terms.items():
                if coeff:
                    self.terms[tuple(images)] = coeff

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {tuple(range(1, n + 1)): 1})

    @classmethod
    def from_permutation(cls, p: Permutation, coeff: int = 1) -> "AlgebraElement":
        return cls(p.n, {p.images: coeff})

    def coefficient(self, p: Permutation) -> int:
        return self.terms.get(p.images, 0)

    def support_size(self) -> int:
        return len(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for images, coeff in other.terms.items():
            out[images] = out.get(images, 0) + coeff
        return AlgebraElement(self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "AlgebraElement":
        return AlgebraElement(self.n, {k: scalar * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out: dict[tuple[int, ...], int] = {}
        for p, c1 in self.terms.items():
            for q, c2 in other.terms.items():
                r = tuple(q[v - 1] for v in p)
                out[r] = out.get(r, 0) + c1 * c2
        return AlgebraElement(self.n, out)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative power")
        out = AlgebraElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, support={len(self.terms)})"

    # class structure ----------------------------------------------------

    def central_witness(self) -> tuple[Permutation, Permutation] | None:
        """Two same-type permutations with different coefficients, or None."""
        for members in conjugacy_classes(self.n).values():
            first = members[0]
            c0 = self.coefficient(first)
            for p in members[1:]:
                if self.coefficient(p) != c0:
                    return (first, p)
        return None

    def is_central(self) -> bool:
        return self.central_witness() is None

    def decompose(self) -> dict[Partition, int]:
        """Write a central element over class sums; keys are cycle types."""
        witness = self.central_witness()
        if witness is not None:
            a, b = witness
            raise NotCentralError(
                witness,
                f"not central: coefficient {self.coefficient(a)} at {a} "
                f"but {self.coefficient(b)} at {b}",
            )
        out: dict[Partition, int] = {}
        for lam, members in conjugacy_classes(self.n).items():
            coeff = self.coefficient(members[0])
            if coeff:
                out[lam] = coeff
        return out


def jm_element(n: int, k: int) -> AlgebraElement:
    """The slot-k Jucys-Murphy element (1 k) + (2 k) + ... + (k-1 k)."""
    if not 1 <= k <= n:
        raise ValueError(f"slot {k} outside [{n}]")
    terms = {}
    for i in range(1, k):
        terms[Permutation.transposition(n, i, k).images] = 1
    return AlgebraElement(n, terms)


def class_sum(n: int, lam: Partition) -> AlgebraElement:
    if lam.n != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    return AlgebraElement(n, {p.images: 1 for p in conjugacy_classes(n)[lam]})


def format_class_decomposition(decomp: dict[Partition, int]) -> str:
    """Render e.g. ``22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]``: more parts
    first, then lexicographically larger part lists first."""
    if not decomp:
        return "0"
    ordered = sorted(
        decomp.items(), key=lambda kv: (-kv[0].length, tuple(-p for p in kv[0].parts))
    )
    return " + ".join(f"{coeff}*K{lam}" for lam, coeff in ordered)


# ---------------------------------------------------------------------------
# symbolic symmetric polynomials in the Jucys-Murphy slots


class SymExpr:
    """Polynomial expression in the slot variables; ``expand(n)`` turns it
    into a monomial-to-coefficient dict over exponent tuples for slots 2..n."""

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        raise NotImplementedError

    def __add__(self, other):
        return _Sum(self, _as_expr(other))

    def __radd__(self, other):
        return _Sum(_as_expr(other), self)

    def __sub__(self, other):
        return _Sum(self, _Scaled(-1, _as_expr(other)))

    def __mul__(self, other):
        return _Prod(self, _as_expr(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return _Scaled(other, self)
        return _Prod(_as_expr(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out: SymExpr = _Scalar(1)
        for _ in range(k):
            out = _Prod(out, self)
        return out


def _as_expr(x) -> SymExpr:
    if isinstance(x, SymExpr):
        return x
    if isinstance(x, int):
        return _Scalar(x)
    raise TypeError(f"cannot treat {x!r} as an expression")


class _Scalar(SymExpr):
    def __init__(self, c: int) -> None:
        self.c = c

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        if not self.c:
            return {}
        return {(0,) * (n - 1): self.c}


class _Scaled(SymExpr):
    def __init__(self, c: int, inner: SymExpr) -> None:
        self.c = c
        self.inner = inner

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        return {k: self.c * v for k, v in self.inner.expand(n).items() if self.c * v}


class _Sum(SymExpr):
    def __init__(self, left: SymExpr, right: SymExpr) -> None:
        self.left, self.right = left, right

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        out = dict(self.left.expand(n))
        for k, v in self.right.expand(n).items():
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}


class _Prod(SymExpr):
    def __init__(self, left: SymExpr, right: SymExpr) -> None:
        self.left, self.right = left, right

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        lhs, rhs = self.left.expand(n), self.right.expand(n)
        out: dict[tuple[int, ...], int] = {}
        for ka, va in lhs.items():
            for kb, vb in rhs.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + va * vb
        return {k: v for k, v in out.items() if v}


class _Gen(SymExpr):
    def __init__(self, kind: str, k: int) -> None:
        if k < 0:
            raise ValueError("negative degree")
        self.kind, self.k = kind, k

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        slots = n - 1
        k = self.k
        if self.kind == "e":
            if k > slots:
                return {}
            out = {}
            for subset in combinations(range(slots), k):
                exps = [0] * slots
                for i in subset:
                    exps[i] = 1
                out[tuple(exps)] = 1
            return out
        if self.kind == "h":
            out = {}
            for multiset in combinations(range(slots + k - 1), k):
                exps = [0] * slots
                for pos, raw in enumerate(multiset):
                    exps[raw - pos] += 1
                out[tuple(exps)] = out.get(tuple(exps), 0) + 1
            return out
        if self.kind == "p":
            if k == 0:
                return {(0,) * slots: slots}
            out = {}
            for i in range(slots):
                exps = [0] * slots
                exps[i] = k
                out[tuple(exps)] = 1
            return out
        raise AssertionError(self.kind)


def e(*parts: int) -> SymExpr:
    """Product of elementary symmetric polynomials, one per part."""
    out: SymExpr = _Scalar(1)
    for k in parts:
        out = _Prod(out, _Gen("e", k))
    return out


def h(*parts: int) -> SymExpr:
    """Product of complete homogeneous symmetric polynomials."""
    out: SymExpr = _Scalar(1)
    for k in parts:
        out = _Prod(out, _Gen("h", k))
    return out


def p(*parts: int) -> SymExpr:
    """Product of power sums."""
    out: SymExpr = _Scalar(1)
    for k in parts:
        out = _Prod(out, _Gen("p", k))
    return out


def jm_var(k: int) -> SymExpr:
    """The single slot variable for position k (k >= 2)."""
    if k < 2:
        raise ValueError("slots start at 2")
    return _SlotVar(k)


class _SlotVar(SymExpr):
    def __init__(self, k: int) -> None:
        self.k = k

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        if self.k > n:
            raise ValueError(f"slot {self.k} absent for n={n}")
        exps = [0] * (n - 1)
        exps[self.k - 2] = 1
        return {tuple(exps): 1}


# ---------------------------------------------------------------------------
# evaluation, plain and transitive


_MONO_VALUES: dict[tuple[int, tuple[int, ...]], AlgebraElement] = {}
_T_MONO_VALUES: dict[tuple[int, tuple[int, ...]], dict] = {}


def _monomial_value(n: int, exps: tuple[int, ...]) -> AlgebraElement:
    key = (n, exps)
    if key in _MONO_VALUES:
        return _MONO_VALUES[key]
    last = max((i for i, a in enumerate(exps) if a), default=-1)
    if last < 0:
        value = AlgebraElement.one(n)
    else:
        smaller = list(exps)
        smaller[last] -= 1
        value = _monomial_value(n, tuple(smaller)) * jm_element(n, last + 2)
    _MONO_VALUES[key] = value
    return value


def evaluate(expr: SymExpr, n: int) -> AlgebraElement:
    """Evaluate an expression at the slot-2..n Jucys-Murphy elements."""
    out = AlgebraElement.zero(n)
    for exps, coeff in expr.expand(n).items():
        out = out + coeff * _monomial_value(n, exps)
    return out


def _blocks_key(parent: list[int]) -> tuple[int, ...]:
    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mins: dict[int, int] = {}
    for s in range(len(parent)):
        r = find(s)
        mins[r] = min(mins.get(r, s), s)
    return tuple(mins[find(s)] for s in range(len(parent)))


def _transitive_monomial(n: int, exps: tuple[int, ...]) -> dict:
    """Transitive part of a canonical monomial: DP over (prefix product,
    connectivity partition of {1..n}), slots ascending, factors per slot
    chosen left to right."""
    key = (n, exps)
    if key in _T_MONO_VALUES:
        return _T_MONO_VALUES[key]
    start_key = tuple(range(n))
    states: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {
        (tuple(range(1, n + 1)), start_key): 1
    }
    for slot_index, mult in enumerate(exps):
        j = slot_index + 2
        for _ in range(mult):
            nxt: dict = {}
            for (images, blocks), cnt in states.items():
                for i in range(1, j):
                    new_images = tuple(
                        j if v == i else i if v == j else v for v in images
                    )
                    parent = list(blocks)
                    ri, rj = parent[i - 1], parent[j - 1]
                    if ri != rj:
                        lo, hi = min(ri, rj), max(ri, rj)
                        parent = [lo if x == hi else x for x in parent]
                    state = (new_images, tuple(parent))
                    nxt[state] = nxt.get(state, 0) + cnt
            states = nxt
    full = (0,) * n
    out: dict[tuple[int, ...], int] = {}
    for (images, blocks), cnt in states.items():
        if blocks == full:
            out[images] = out.get(images, 0) + cnt
    _T_MONO_VALUES[key] = out
    return out


def _transitive_monomial_expand(n: int, exps: tuple[int, ...]) -> dict:
    """Same transitive part by literal tuple enumeration; cross-check only."""
    slots: list[int] = []
    for slot_index, mult in enumerate(exps):
        slots.extend([slot_index + 2] * mult)
    choice_sets = [range(1, j) for j in slots]
    out: dict[tuple[int, ...], int] = {}
    for picks in product(*choice_sets):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        images = list(range(1, n + 1))
        for i, j in zip(picks, slots):
            for idx, v in enumerate(images):
                if v == i:
                    images[idx] = j
                elif v == j:
                    images[idx] = i
            parent[find(i - 1)] = find(j - 1)
        if len({find(s) for s in range(n)}) == 1:
            key = tuple(images)
            out[key] = out.get(key, 0) + 1
    return out


def transitive_evaluate(expr: SymExpr, n: int, method: str = "dp") -> AlgebraElement:
    """Apply the transitivity operator to the canonical expansion of ``expr``
    and evaluate.  Linear over monomials; NOT multiplicative across them, so
    the result depends on the expression only through its expansion.
    """
    if method not in ("dp", "expand"):
        raise ValueError(f"unknown method {method!r}")
    fn = _transitive_monomial if method == "dp" else _transitive_monomial_expand
    total: dict[tuple[int, ...], int] = {}
    for exps, coeff in expr.expand(n).items():
        for images, cnt in fn(n, exps).items():
            total[images] = total.get(images, 0) + coeff * cnt
    return AlgebraElement(n, total)


def transitive_power(n: int, t: int, method: str = "dp") -> AlgebraElement:
    """Transitive part of the t-th power of the top slot variable; its
    coefficients count transitive star factorisations rooted at n."""
    if t < 0:
        raise ValueError("negative power")
    exps = [0] * (n - 1)
    if n >= 2:
        exps[n - 2] = t
    elif t:
        return AlgebraElement.zero(n)
    return transitive_evaluate(_fixed_monomial(tuple(exps)), n, method=method)


class _fixed_monomial(SymExpr):
    def __init__(self, exps: tuple[int, ...]) -> None:
        self.exps = exps

    def expand(self, n: int) -> dict[tuple[int, ...], int]:
        if len(self.exps) != n - 1:
            raise ValueError("exponent tuple has wrong width")
        return {self.exps: 1}


def verify_elementary_class_sums(n: int, k: int) -> bool:
    """The k-th elementary polynomial at the slots equals the sum of the
    class sums over cycle types with exactly n - k cycles."""
    lhs = evaluate(e(k), n)
    rhs = AlgebraElement.zero(n)
    for lam in partitions_of(n):
        if lam.length == n - k:
            rhs = rhs + class_sum(n, lam)
    return lhs == rhs


def verify_corollary_1_6(n: int, k: int) -> bool:
    """Four routes to the same element: the transitive part of the top-slot
    power of degree n-1+k, the transitive part of the matching power sum,
    and the closed form as (product of all slots) times h_k, the latter both
    via symbolic expansion and explicit algebra products."""
    via_top_power = transitive_power(n, n - 1 + k)
    via_power_sum = transitive_evaluate(p(n - 1 + k), n)
    closed_form = evaluate(e(n - 1) * h(k), n)
    chain = AlgebraElement.one(n)
    for j in range(2, n + 1):
        chain = chain * jm_element(n, j)
    via_chain = chain * evaluate(h(k), n)
    return via_top_power == via_power_sum == closed_form == via_chain
