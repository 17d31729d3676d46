"""Finite groups as explicit multiplication tables over element indices 0..n-1.

The identity element is always index 0; constructors guarantee it and the
Cayley-file reader renumbers to it. Tables are dense numpy arrays so the
group-law validation (Latin square, identity, associativity) stays
vectorized and cheap at the supported scales.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CayleyValidationError, GroupParameterError, GroupSizeError

DEFAULT_MAX_ORDER = 512
# Exhaustive O(n^3) associativity checking is default up to this order;
# beyond it a fixed-seed sample of triples is used instead.
FULL_VALIDATION_CUTOFF = 256
_SAMPLED_TRIPLES = 32768

VALIDATION_LEVELS = ("auto", "full", "sampled", "off")


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise GroupParameterError(f"cannot factor {n}; need a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n).get(n) == 1


def totient(n: int) -> int:
    """Euler's totient: the number of k in [1, n] coprime to n."""
    if n < 1:
        raise GroupParameterError(f"totient undefined for {n}")
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


class FiniteGroup:
    """An immutable finite group on element indices 0..order-1.

    ``table[i, j]`` is the index of the product i*j and element 0 is the
    identity. ``orders[i]`` caches the order of element i.
    """

    __slots__ = ("order", "table", "orders", "spec", "_rows", "_invs", "_center", "_abelian")

    def __init__(self, table: np.ndarray, orders: tuple[int, ...], spec=None):
        self.order = int(table.shape[0])
        table.setflags(write=False)
        self.table = table
        self.orders = orders
        self.spec = spec
        self._rows: Optional[list[list[int]]] = None
        self._invs: Optional[list[int]] = None
        self._center: Optional[tuple[int, ...]] = None
        self._abelian: Optional[bool] = None

    @classmethod
    def from_table(
        cls,
        table,
        spec=None,
        validate: str = "auto",
        max_order: int = DEFAULT_MAX_ORDER,
    ) -> "FiniteGroup":
        """Validate a multiplication table and wrap it as a group.

        The identity must already sit at index 0. ``validate`` picks the
        associativity check: ``full``, ``sampled``, ``off``, or ``auto``
        (full up to the cutoff order, sampled above it).
        """
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GroupParameterError(f"table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n < 1:
            raise GroupParameterError("a group needs at least one element")
        if n > max_order:
            raise GroupSizeError(f"group order {n} exceeds the cap of {max_order}")
        _validate_table(arr, validate)
        orders = _element_orders(arr)
        return cls(arr, orders, spec)

    # -- basic accessors ---------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.spec.display() if self.spec is not None else "FiniteGroup"
        return f"<{name} of order {self.order}>"

    def rows(self) -> list[list[int]]:
        """The table as plain Python lists; fast for scalar-heavy loops."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def _check_index(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexError(f"element index {x} out of range [0, {self.order})")

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.rows()[a][b]

    def inv(self, a: int) -> int:
        self._check_index(a)
        if self._invs is None:
            rows = self.rows()
            self._invs = [row.index(0) for row in rows]
        return self._invs[a]

    def power(self, x: int, k: int) -> int:
        """x**k for any integer k (negative exponents via the inverse)."""
        self._check_index(x)
        if k < 0:
            x, k = self.inv(x), -k
        rows = self.rows()
        acc = 0
        while k:
            if k & 1:
                acc = rows[acc][x]
            x = rows[x][x]
            k >>= 1
        return acc

    def element_order(self, x: int) -> int:
        """The least k >= 1 with x**k = identity (memoized at construction)."""
        self._check_index(x)
        return self.orders[x]

    def powers_of(self, x: int) -> tuple[int, ...]:
        """The cyclic subgroup <x> in generation order x, x^2, ..., identity."""
        self._check_index(x)
        rows = self.rows()
        out = [x]
        y = x
        while y != 0:
            y = rows[y][x]
            out.append(y)
        return tuple(out)

    # -- structure predicates ----------------------------------------------

    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def center(self) -> tuple[int, ...]:
        """All z commuting with every element (row z equals column z)."""
        if self._center is None:
            sym = (self.table == self.table.T).all(axis=1)
            self._center = tuple(int(z) for z in np.nonzero(sym)[0])
        return self._center

    def is_p_group(self) -> Optional[int]:
        """The prime p when |G| is a p-power, else None (None for order 1)."""
        factors = prime_factors(self.order)
        if len(factors) == 1:
            return next(iter(factors))
        return None


def _validate_table(arr: np.ndarray, level: str) -> None:
    if level not in VALIDATION_LEVELS:
        raise GroupParameterError(f"unknown validation level {level!r}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise CayleyValidationError(
            "closure", f"entry at ({bad[0]}, {bad[1]}) is outside [0, {n})"
        )
    expect = np.arange(n)
    if not np.array_equal(np.sort(arr, axis=1), np.broadcast_to(expect, arr.shape)):
        row = next(i for i in range(n) if len(set(arr[i].tolist())) != n)
        raise CayleyValidationError("latin-square", f"row {row} repeats an entry")
    if not np.array_equal(np.sort(arr, axis=0), np.broadcast_to(expect[:, None], arr.shape)):
        col = next(j for j in range(n) if len(set(arr[:, j].tolist())) != n)
        raise CayleyValidationError("latin-square", f"column {col} repeats an entry")
    if not (np.array_equal(arr[0], expect) and np.array_equal(arr[:, 0], expect)):
        raise CayleyValidationError("identity", "element 0 is not a two-sided identity")

    if level == "auto":
        level = "full" if n <= FULL_VALIDATION_CUTOFF else "sampled"
    if level == "off":
        return
    if level == "full":
        for k in range(n):
            col = arr[:, k]
            lhs = col[arr]          # lhs[i, j] = table[table[i, j], k]
            rhs = arr[:, col]       # rhs[i, j] = table[i, table[j, k]]
            if not np.array_equal(lhs, rhs):
                i, j = np.argwhere(lhs != rhs)[0]
                raise CayleyValidationError(
                    "associativity", f"({i}*{j})*{k} != {i}*({j}*{k})"
                )
    else:
        rng = np.random.default_rng(0)
        m = min(_SAMPLED_TRIPLES, n**3)
        i = rng.integers(0, n, m)
        j = rng.integers(0, n, m)
        k = rng.integers(0, n, m)
        lhs = arr[arr[i, j], k]
        rhs = arr[i, arr[j, k]]
        if not np.array_equal(lhs, rhs):
            t = int(np.nonzero(lhs != rhs)[0][0])
            raise CayleyValidationError(
                "associativity", f"({i[t]}*{j[t]})*{k[t]} != {i[t]}*({j[t]}*{k[t]})"
            )


def _element_orders(arr: np.ndarray) -> tuple[int, ...]:
    rows = arr.tolist()
    n = len(rows)
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = rows[y][x]
            k += 1
            if k > n:
                raise CayleyValidationError(
                    "order", f"powers of element {x} never reach the identity"
                )
        orders.append(k)
    return tuple(orders)


# -- constructors -----------------------------------------------------------


def make_cyclic(n: int, *, spec=None, validate: str = "auto",
                max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The cyclic group Z_n under addition modulo n."""
    if n < 1:
        raise GroupParameterError(f"cyclic group order must be >= 1, got {n}")
    if n > max_order:
        raise GroupSizeError(f"group order {n} exceeds the cap of {max_order}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup.from_table(table, spec=spec, validate=validate, max_order=max_order)


def make_direct_product(parts: Sequence[FiniteGroup], *, spec=None,
                        validate: str = "auto",
                        max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Componentwise product; pair (a, b) gets index a*|H| + b, folded left."""
    if not parts:
        raise GroupParameterError("direct product needs at least one factor")
    total = math.prod(g.order for g in parts)
    if total > max_order:
        raise GroupSizeError(f"product order {total} exceeds the cap of {max_order}")
    table = parts[0].table
    for g in parts[1:]:
        table = _product2(table, g.table)
    return FiniteGroup.from_table(table, spec=spec, validate=validate, max_order=max_order)


def _product2(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    n1, n2 = t1.shape[0], t2.shape[0]
    a = np.repeat(np.arange(n1), n2)
    b = np.tile(np.arange(n2), n1)
    return t1[np.ix_(a, a)] * n2 + t2[np.ix_(b, b)]


def make_dicyclic(m: int, *, spec=None, validate: str = "auto",
                  max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The dicyclic group of order 4m on pairs (i, j), i in Z_{2m}, j in {0, 1}.

    Products: (i1,0)(i2,j2) = (i1+i2, j2); (i1,1)(i2,0) = (i1-i2, 1);
    (i1,1)(i2,1) = (i1-i2+m, 0), all mod 2m. For m a power of two this is
    the generalized quaternion group Q_{4m}. Pair (i, j) gets index j*2m + i.
    """
    if m < 2:
        raise GroupParameterError(f"dicyclic parameter must be >= 2, got {m}")
    n = 4 * m
    if n > max_order:
        raise GroupSizeError(f"group order {n} exceeds the cap of {max_order}")
    two_m = 2 * m
    idx = np.arange(n)
    i1, j1 = (idx % two_m)[:, None], (idx // two_m)[:, None]
    i2, j2 = (idx % two_m)[None, :], (idx // two_m)[None, :]
    plain = (i1 + i2) % two_m
    flip = (i1 - i2 + m * j2) % two_m
    res_i = np.where(j1 == 0, plain, flip)
    res_j = (j1 + j2) % 2
    table = res_j * two_m + res_i
    return FiniteGroup.from_table(table, spec=spec, validate=validate, max_order=max_order)


def make_metacyclic(m: int, n: int, k: int, *, spec=None, validate: str = "auto",
                    max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The metacyclic group Z_m x| Z_n with (i1,j1)(i2,j2) = (i1 + k^j1*i2, j1+j2).

    Requires k^n = 1 (mod m) and gcd(k, m) = 1. Pair (i, j) gets index
    j*m + i. Dihedral groups arise as (m, 2, m-1).
    """
    if m < 1 or n < 1 or k < 1:
        raise GroupParameterError(f"metacyclic parameters must be positive, got {(m, n, k)}")
    if math.gcd(k, m) != 1:
        raise GroupParameterError(f"metacyclic needs gcd(k, m) = 1, got k={k}, m={m}")
    if pow(k, n, m) != 1 % m:
        raise GroupParameterError(f"metacyclic needs k^n = 1 (mod m); {k}^{n} fails mod {m}")
    order = m * n
    if order > max_order:
        raise GroupSizeError(f"group order {order} exceeds the cap of {max_order}")
    kpow = np.array([pow(k, j, m) for j in range(n)])
    idx = np.arange(order)
    i1, j1 = (idx % m)[:, None], (idx // m)[:, None]
    i2, j2 = (idx % m)[None, :], (idx // m)[None, :]
    res_i = (i1 + kpow[j1] * i2) % m
    res_j = (j1 + j2) % n
    table = res_j * m + res_i
    return FiniteGroup.from_table(table, spec=spec, validate=validate, max_order=max_order)


def make_dihedral(m: int, *, spec=None, validate: str = "auto",
                  max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """The dihedral group of order 2m, realized as Metacyclic(m, 2, m-1)."""
    if m < 2:
        raise GroupParameterError(f"dihedral parameter must be >= 2, got {m}")
    return make_metacyclic(m, 2, m - 1, spec=spec, validate=validate, max_order=max_order)


def closure_from_generators(degree: int, generators: Iterable[Sequence[int]], *,
                            spec=None, validate: str = "auto",
                            max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Breadth-first closure of permutations of {0..degree-1} under composition.

    Permutations are one-line images; composition is (p*q)(x) = p[q[x]].
    Elements are indexed by discovery order with the identity first.
    """
    if degree < 1:
        raise GroupParameterError(f"permutation degree must be >= 1, got {degree}")
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupParameterError(f"{g} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(p[v] for v in g)
            if q not in index:
                if len(elems) >= max_order:
                    raise GroupSizeError(
                        f"closure exceeds the cap of {max_order} elements"
                    )
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(p[v] for v in q)]
    return FiniteGroup.from_table(table, spec=spec, validate=validate, max_order=max_order)


# -- derived structure ------------------------------------------------------


def normal_closure(group: FiniteGroup, x: int) -> frozenset[int]:
    """The smallest normal subgroup containing x.

    Conjugates of x are closed under multiplication; the closure of the
    conjugate set is normal because conjugation permutes it.
    """
    group._check_index(x)
    rows = group.rows()
    n = group.order
    invs = [rows[g].index(0) for g in range(n)]
    members = {rows[rows[g][x]][invs[g]] for g in range(n)}
    work = list(members)
    while work:
        a = work.pop()
        ra = rows[a]
        for b in tuple(members):
            for c in (ra[b], rows[b][a]):
                if c not in members:
                    members.add(c)
                    work.append(c)
    return frozenset(members)


def is_simple(group: FiniteGroup) -> bool:
    """True iff every non-identity element normally generates the whole group."""
    if group.order < 2:
        raise GroupParameterError("simplicity is undefined for the trivial group")
    for x in range(1, group.order):
        if len(normal_closure(group, x)) != group.order:
            return False
    return True


def prime_order_subgroup_count(group: FiniteGroup) -> int:
    """Number of distinct subgroups of prime order."""
    if group.order < 2:
        raise GroupParameterError("the trivial group has no prime-order subgroups")
    subs = {
        frozenset(group.powers_of(x))
        for x in range(1, group.order)
        if is_prime(group.orders[x])
    }
    return len(subs)


def has_unique_minimal_subgroup(group: FiniteGroup) -> bool:
    """True iff exactly one prime-order subgroup exists.

    Minimal subgroups are exactly the prime-order ones, so this equals
    uniqueness of the minimal subgroup.
    """
    return prime_order_subgroup_count(group) == 1


class AbelianShape:
    """Primary decomposition of an abelian group: one prime power per cyclic factor."""

    __slots__ = ("factors",)

    def __init__(self, factors: tuple[int, ...]):
        self.factors = tuple(sorted(factors))

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianShape) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"AbelianShape{self.factors}"

    @property
    def order(self) -> int:
        return math.prod(self.factors)


def abelian_shape(group: FiniteGroup) -> AbelianShape:
    """Primary decomposition computed from element-order statistics.

    For each prime p and abelian group with p-part Z_{p^t1} x ... x Z_{p^tk},
    the count of elements whose order divides p^j equals p^(sum min(ti, j)).
    Differencing the exponents of those counts recovers the multiset {ti}.
    """
    if not group.is_abelian():
        raise GroupParameterError("abelian_shape requires an abelian group")
    n = group.order
    factors: list[int] = []
    for p, e in sorted(prime_factors(n).items()):
        d = []
        prev = 0
        for j in range(1, e + 1):
            pj = p**j
            count = sum(1 for o in group.orders if pj % o == 0)
            f, c = 0, count
            while c > 1:
                c //= p
                f += 1
            if p**f != count:
                raise CayleyValidationError(
                    "order", f"element-order statistics inconsistent at prime {p}"
                )
            d.append(f - prev)
            prev = f
        d.append(0)
        for j in range(1, e + 1):
            factors.extend([p**j] * (d[j - 1] - d[j]))
    shape = AbelianShape(tuple(factors))
    if shape.order != n:
        raise CayleyValidationError("order", "primary decomposition does not match order")
    return shape


def has_cyclic_sylow(shape: AbelianShape) -> bool:
    """True iff some prime contributes exactly one factor to the decomposition."""
    counts = Counter(min(prime_factors(q)) for q in shape.factors)
    return any(c == 1 for c in counts.values())


def is_generalized_quaternion(group: FiniteGroup) -> bool:
    """True iff the group is a non-abelian 2-group with a single order-2 subgroup."""
    if group.is_p_group() != 2 or group.is_abelian():
        return False
    involutions = sum(1 for o in group.orders if o == 2)
    return involutions == 1
