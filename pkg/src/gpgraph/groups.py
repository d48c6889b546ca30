"""Finite groups as Cayley tables over 0-based element indices.

Every group is an n-by-n multiplication table; element 0 is always the
identity after construction (inputs with the identity elsewhere are
relabelled). All heavy table arithmetic goes through numpy.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

# Associativity is validated up to this order; beyond it the check must be
# explicitly waived by the caller (trusted constructors, `--trust` loads).
ASSOCIATIVITY_CHECK_LIMIT = 256

PERMUTATION_CLOSURE_CAP = 2048


class CayleyTableError(ValueError):
    """A table failed validation as a group multiplication table."""


class NotClosed(CayleyTableError):
    def __init__(self, row: int, col: int, value: int, order: int):
        self.witness = (row, col, value)
        super().__init__(
            f"entry table[{row}][{col}] = {value} is outside [0, {order})"
        )


class NoIdentity(CayleyTableError):
    def __init__(self):
        super().__init__("no two-sided identity element found")


class NoInverse(CayleyTableError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(CayleyTableError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class IndexOutOfRange(IndexError):
    def __init__(self, index: int, order: int):
        super().__init__(f"element index {index} out of range [0, {order})")


class NotPrime(ValueError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not prime")


class NotAPermutation(ValueError):
    pass


class OrderCapExceeded(ValueError):
    def __init__(self, cap: int):
        super().__init__(f"generated group exceeds the order cap {cap}")


def _table_dtype(n: int) -> type:
    return np.int16 if n <= 2**15 - 1 else np.int32


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; {} for n = 1."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FiniteGroup:
    """Immutable finite group; element 0 is the identity.

    Safe to share across worker threads: the lazy caches are populated by
    idempotent writes (racing writers compute identical values).
    """

    __slots__ = ("n", "table", "inverses", "_orders", "_abelian", "_masks")

    identity = 0

    def __init__(self, n: int, table: np.ndarray, inverses: np.ndarray):
        self.n = n
        self.table = table
        self.inverses = inverses
        self._orders: Optional[np.ndarray] = None
        self._abelian: Optional[bool] = None
        self._masks: Optional[list[int]] = None

    def __repr__(self):
        return f"FiniteGroup(order={self.n})"

    def _check_index(self, g: int) -> None:
        if not 0 <= g < self.n:
            raise IndexOutOfRange(g, self.n)

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        self._check_index(a)
        return int(self.inverses[a])

    def elements(self) -> range:
        return range(self.n)

    @property
    def orders(self) -> np.ndarray:
        """Orders of all elements (cached on first full-group query)."""
        if self._orders is None:
            n = self.n
            idx = np.arange(n)
            cur = idx.copy()  # cur[g] = g^k
            orders = np.zeros(n, dtype=np.int64)
            k = 1
            while (orders == 0).any():
                if k > n:  # possible only for a bad table taken on trust
                    raise CayleyTableError("some element's powers never reach the identity")
                done = (cur == 0) & (orders == 0)
                orders[done] = k
                cur = self.table[cur, idx]
                k += 1
            self._orders = orders
        return self._orders

    def order_of(self, g: int) -> int:
        """Smallest k >= 1 with g^k = identity; divides the group order."""
        self._check_index(g)
        if self._orders is not None:
            return int(self._orders[g])
        cur = g
        k = 1
        while cur != 0:
            if k > self.n:
                raise CayleyTableError("some element's powers never reach the identity")
            cur = int(self.table[cur, g])
            k += 1
        return k

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool(np.array_equal(self.table, self.table.T))
        return self._abelian

    def cyclic_subgroup(self, g: int) -> list[int]:
        """<g> as a sorted list; its size equals order_of(g)."""
        self._check_index(g)
        elems = [0]
        cur = g
        while cur != 0:
            if len(elems) > self.n:
                raise CayleyTableError("some element's powers never reach the identity")
            elems.append(cur)
            cur = int(self.table[cur, g])
        return sorted(elems)

    def cyclic_subgroup_masks(self) -> list[int]:
        """Bitmask of <g> for every g; mask bit e set iff e is a power of g."""
        if self._masks is None:
            table = self.table
            masks = []
            for g in range(self.n):
                col = table[:, g].tolist()
                m = 1  # identity bit
                cur = g
                steps = 0
                while cur != 0:
                    if steps > self.n:
                        raise CayleyTableError("some element's powers never reach the identity")
                    m |= 1 << cur
                    cur = col[cur]
                    steps += 1
                masks.append(m)
            self._masks = masks
        return self._masks

    def exponent(self) -> int:
        """Least common multiple of all element orders."""
        return int(math.lcm(*(int(o) for o in self.orders)))

    def p_group_prime(self) -> Optional[int]:
        """The prime p if |G| = p^k (k >= 1), else None.

        The trivial group returns None: it is vacuously a p-group for every
        prime and picking one would be arbitrary; callers branch on n == 1.
        """
        if self.n == 1:
            return None
        fact = prime_factors(self.n)
        if len(fact) == 1:
            return next(iter(fact))
        return None

    def subgroups_of_order_p(self, p: int) -> list[tuple[int, ...]]:
        """All distinct subgroups of order p, as sorted element tuples."""
        if not is_prime(p):
            raise NotPrime(p)
        orders = self.orders
        seen: set[tuple[int, ...]] = set()
        out: list[tuple[int, ...]] = []
        for g in range(self.n):
            if int(orders[g]) == p:
                sub = tuple(self.cyclic_subgroup(g))
                if sub not in seen:
                    seen.add(sub)
                    out.append(sub)
        return sorted(out)

    def center(self) -> list[int]:
        """Elements commuting with every element of the group."""
        commutes = self.table == self.table.T
        return [int(g) for g in np.nonzero(commutes.all(axis=1))[0]]

    def centralizer(self, x: int) -> list[int]:
        """Elements commuting with x."""
        self._check_index(x)
        commutes = self.table[x, :] == self.table[:, x]
        return [int(g) for g in np.nonzero(commutes)[0]]

    def fingerprint(self) -> tuple[int, tuple[int, ...], bool]:
        """(order, sorted element-order multiset, abelian flag).

        Not an isomorphism test; used only to dedupe the catalog.
        """
        return (self.n, tuple(sorted(int(o) for o in self.orders)), self.is_abelian)


def _generating_set(table: np.ndarray) -> list[int]:
    """Greedy generating set of the magma: repeatedly adjoin the smallest
    element outside the closure of what we have. Works on arbitrary tables
    (closure only needs the operation, not associativity)."""
    n = table.shape[0]
    in_closure = np.zeros(n, dtype=bool)
    in_closure[0] = True
    gens: list[int] = []
    while not in_closure.all():
        g = int(np.argmin(in_closure))
        gens.append(g)
        in_closure[g] = True
        while True:
            idx = np.nonzero(in_closure)[0]
            before = int(in_closure.sum())
            in_closure[table[np.ix_(idx, idx)].ravel()] = True
            if int(in_closure.sum()) == before:
                break
    return gens


def _check_associativity(table: np.ndarray) -> None:
    """Full associativity check via Light's test.

    It suffices to check triples whose middle element lies in a generating
    set: the elements that associate in the middle position form a closed
    submagma. O(n^2 * |gens|) instead of the naive O(n^3).
    """
    for s in _generating_set(table):
        left = table[table[:, s], :]    # (a, c) -> (a*s)*c
        right = table[:, table[s]]      # (a, c) -> a*(s*c)
        if not np.array_equal(left, right):
            a, c = (int(v) for v in np.argwhere(left != right)[0])
            raise NotAssociative(a, s, c)


def validate_and_build(table, *, trust_associativity: bool = False) -> FiniteGroup:
    """Validate a Cayley table and wrap it as a FiniteGroup.

    Checks closure, a two-sided identity (relabelled to index 0 if needed),
    two-sided inverses and, for n <= 256, full associativity. Larger tables
    require trust_associativity=True (catalog constructors are correct by
    construction; external tables are not).
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise CayleyTableError(f"table must be a square n x n array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise CayleyTableError("table entries must be integers")
    n = arr.shape[0]
    arr = arr.astype(_table_dtype(n), copy=True)

    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        r, c = (int(v) for v in bad[0])
        raise NotClosed(r, c, int(arr[r, c]), n)

    idx = np.arange(n)
    row_ok = (arr == idx[None, :]).all(axis=1)
    identity = -1
    for e in np.nonzero(row_ok)[0]:
        if (arr[:, e] == idx).all():
            identity = int(e)
            break
    if identity < 0:
        raise NoIdentity()

    if identity != 0:
        # Relabel so the identity sits at index 0 (swap 0 <-> identity).
        perm = idx.copy()
        perm[0], perm[identity] = identity, 0
        relabelled = np.empty_like(arr)
        relabelled[perm[:, None], perm[None, :]] = perm[arr]
        arr = relabelled

    inv = np.argmax(arr == 0, axis=1).astype(arr.dtype)
    right_ok = arr[idx, inv] == 0
    left_ok = arr[inv, idx] == 0
    if not (right_ok & left_ok).all():
        raise NoInverse(int(np.nonzero(~(right_ok & left_ok))[0][0]))

    if n <= ASSOCIATIVITY_CHECK_LIMIT:
        _check_associativity(arr)
    elif not trust_associativity:
        raise CayleyTableError(
            f"order {n} exceeds the associativity check limit "
            f"({ASSOCIATIVITY_CHECK_LIMIT}); pass trust_associativity=True "
            "for trusted tables"
        )

    arr.setflags(write=False)
    return FiniteGroup(n, arr, inv)


def closure_from_permutations(
    degree: int,
    generators: Iterable[Sequence[int]],
    *,
    cap: int = PERMUTATION_CLOSURE_CAP,
) -> FiniteGroup:
    """Group generated by permutations of [0, degree), as a Cayley table.

    Elements are indexed in discovery order with the identity at index 0.
    Raises OrderCapExceeded once more than `cap` elements are discovered
    (the table alone is O(cap^2) memory).
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise NotAPermutation(f"{g} is not a permutation of [0, {degree})")

    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    i = 0
    while i < len(elems):
        p = elems[i]
        i += 1
        for g in gens:
            q = tuple(p[g[x]] for x in range(degree))
            if q not in index:
                if len(elems) >= cap:
                    raise OrderCapExceeded(cap)
                index[q] = len(elems)
                elems.append(q)

    n = len(elems)
    perms = np.array(elems, dtype=_table_dtype(max(n, degree)))
    lut = {p.tobytes(): j for j, p in enumerate(perms)}
    table = np.empty((n, n), dtype=_table_dtype(n))
    for a in range(n):
        composed = perms[a][perms]  # row j: elems[a] o elems[j]
        table[a] = [lut[row.tobytes()] for row in composed]
    return validate_and_build(table, trust_associativity=True)


# ---------------------------------------------------------------------------
# Cayley table text format: first non-comment line is n, then n rows of n
# whitespace-separated 0-based indices ('#' starts a comment line). The
# identity need not be index 0 in a file; loading relabels.
# ---------------------------------------------------------------------------


def parse_cayley_table(text: str, *, trust_associativity: bool = False) -> FiniteGroup:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CayleyTableError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise CayleyTableError(f"first line must be the order, got {lines[0]!r}")
    if n < 1:
        raise CayleyTableError(f"order must be >= 1, got {n}")
    if len(lines) != n + 1:
        raise CayleyTableError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise CayleyTableError(f"non-integer entry in row {len(rows)}: {ln!r}")
        if len(row) != n:
            raise CayleyTableError(f"row {len(rows)} has {len(row)} entries, expected {n}")
        rows.append(row)
    return validate_and_build(np.array(rows), trust_associativity=trust_associativity)


def format_cayley_table(group: FiniteGroup) -> str:
    lines = [str(group.n)]
    for row in group.table:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def read_cayley_table(path, *, trust_associativity: bool = False) -> FiniteGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cayley_table(fh.read(), trust_associativity=trust_associativity)


def write_cayley_table(group: FiniteGroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cayley_table(group))
