"""Finite groups as validated multiplication tables.

Elements are the indices 0..n-1.  A group is a dense n-by-n table with
``table[a][b] = a*b``; every structural query (center, commutator subgroup,
exponent, quotients) is a scan over that table.  Named constructors always
put the identity at index 0; imported tables may put it anywhere and the
validator locates it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import config
from .errors import (
    BadShape,
    ConstructionSpecError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    NotSubgroup,
    ParseError,
    TooLarge,
)

__all__ = [
    "FiniteGroup",
    "Subset",
    "group_from_table",
    "group_from_text",
    "group_to_text",
    "cyclic",
    "dihedral",
    "symmetric",
    "quaternion8",
    "heisenberg",
    "direct_product",
    "opposite",
    "quotient_by_normal",
    "named_group",
    "parse_table_text",
    "format_table_text",
]


# --- table validation ---


def _check_closure(table: np.ndarray) -> None:
    n = table.shape[0]
    bad = (table < 0) | (table >= n)
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        raise NotClosed(a, b, int(table[a, b]))


def _check_associativity(table: np.ndarray) -> None:
    """Full O(n^3) scan, chunked over the left operand to bound memory."""
    n = table.shape[0]
    chunk = max(1, (1 << 22) // (n * n))
    for a0 in range(0, n, chunk):
        rows = table[a0 : a0 + chunk]
        left = table[table[a0 : a0 + chunk], :]  # (a*b)*c
        right = rows[:, table]  # a*(b*c)
        bad = left != right
        if bad.any():
            i, b, c = map(int, np.argwhere(bad)[0])
            raise NotAssociative(a0 + i, b, c)


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    idx = np.arange(n)
    hits = np.nonzero((table == idx).all(axis=1) & (table.T == idx).all(axis=1))[0]
    if hits.size == 0:
        raise NoIdentity()
    return int(hits[0])


def _find_inverses(table: np.ndarray, identity: int) -> np.ndarray:
    n = table.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for a in range(n):
        hits = np.nonzero(table[a] == identity)[0]
        two_sided = [int(b) for b in hits if table[b, a] == identity]
        if not two_sided:
            raise NoInverse(a)
        inv[a] = two_sided[0]
    return inv


class FiniteGroup:
    """Immutable finite group on {0..n-1}; all arrays are read-only."""

    def __init__(self, table, name: Optional[str] = None, validate: bool = True):
        arr = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise BadShape(f"expected a nonempty square table, got shape {arr.shape}")
        n = int(arr.shape[0])
        if n > config.MAX_ORDER:
            raise TooLarge(n, config.MAX_ORDER)
        if validate:
            _check_closure(arr)
            _check_associativity(arr)
        self.table = arr
        self.n = n
        self.name = name if name is not None else f"G{n}"
        self.identity = _find_identity(arr)
        self.inverse = _find_inverses(arr, self.identity)
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)

    # --- basic arithmetic ---

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 * b^-1 * a * b."""
        t = self.table
        return int(t[t[self.inverse[a], self.inverse[b]], t[a, b]])

    def power(self, a: int, k: int) -> int:
        """a^k for any integer k, negative exponents via inverses."""
        k %= int(self.element_orders[a])
        out = self.identity
        for _ in range(k):
            out = int(self.table[out, a])
        return out

    def power_all(self, k: int) -> np.ndarray:
        """Vector of a^k over every element a."""
        k %= self.exponent
        out = np.full(self.n, self.identity, dtype=np.int64)
        base = np.arange(self.n)
        for _ in range(k):
            out = self.table[out, base]
        return out

    # --- structure ---

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.n
        orders = np.zeros(n, dtype=np.int64)
        pw = np.arange(n)
        for k in range(1, n + 1):
            orders[(orders == 0) & (pw == self.identity)] = k
            if (orders > 0).all():
                break
            pw = self.table[pw, np.arange(n)]
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in self.element_orders))

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    @cached_property
    def has_2_torsion(self) -> bool:
        return bool((self.element_orders == 2).any())

    @cached_property
    def is_cyclic(self) -> bool:
        return bool((self.element_orders == self.n).any())

    def center(self) -> "Subset":
        members = np.nonzero((self.table == self.table.T).all(axis=1))[0]
        return Subset(self, tuple(int(z) for z in members))

    def subgroup_closure(self, gens: Iterable[int]) -> "Subset":
        members = {self.identity, *(int(g) for g in gens)}
        while True:
            arr = np.fromiter(members, dtype=np.int64)
            products = set(map(int, self.table[np.ix_(arr, arr)].ravel()))
            if products <= members:
                return Subset(self, tuple(sorted(members)))
            members |= products
            if len(members) > self.n:
                raise AssertionError("closure escaped the carrier")

    def commutator_subgroup(self) -> "Subset":
        t, inv = self.table, self.inverse
        comms = t[t[inv[:, None], inv[None, :]], t]
        return self.subgroup_closure(map(int, np.unique(comms)))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.n})"


@dataclass(frozen=True)
class Subset:
    """Sorted subset of a group's carrier."""

    group: FiniteGroup
    members: tuple

    def __post_init__(self):
        m = self.members
        if list(m) != sorted(set(m)) or any(not 0 <= x < self.group.n for x in m):
            raise BadShape("subset members must be distinct, in range, sorted")

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _require_subgroup(G: FiniteGroup, members: Sequence[int]) -> np.ndarray:
    arr = np.asarray(sorted(set(int(x) for x in members)), dtype=np.int64)
    if arr.size == 0 or G.identity not in arr:
        raise NotSubgroup("subset lacks the identity")
    inside = np.zeros(G.n, dtype=bool)
    inside[arr] = True
    if not inside[G.table[np.ix_(arr, arr)]].all():
        raise NotSubgroup("subset is not closed under products")
    if not inside[G.inverse[arr]].all():
        raise NotSubgroup("subset is not closed under inverses")
    return arr


def quotient_by_normal(G: FiniteGroup, normal: Iterable[int]):
    """Quotient group and the projection map g -> coset index.

    Cosets are numbered by their least member, ascending, so the output is
    deterministic.  Raises NotSubgroup / NotNormal (with a conjugation
    witness) when the input does not qualify.
    """
    members = _require_subgroup(G, list(normal))
    inside = np.zeros(G.n, dtype=bool)
    inside[members] = True
    for g in range(G.n):
        conj = G.table[G.table[g, members], G.inverse[g]]
        bad = ~inside[conj]
        if bad.any():
            raise NotNormal(g, int(members[np.argwhere(bad)[0][0]]))
    labels = G.table[:, members].min(axis=1)
    reps = np.unique(labels)
    rep_index = {int(r): i for i, r in enumerate(reps)}
    projection = np.array([rep_index[int(labels[a])] for a in range(G.n)], dtype=np.int64)
    qtable = projection[G.table[np.ix_(reps, reps)]]
    quotient = FiniteGroup(qtable, name=f"{G.name}/N{len(members)}")
    projection.setflags(write=False)
    return quotient, projection


# --- constructors ---


def group_from_table(table, name: Optional[str] = None) -> FiniteGroup:
    """Validate a raw table; all four group axioms are checked with witnesses."""
    return FiniteGroup(table, name=name, validate=True)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ConstructionSpecError("cyclic(n) needs n >= 1")
    idx = np.arange(n)
    return FiniteGroup(np.add.outer(idx, idx) % n, name=f"Z{n}", validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: indices 0..n-1 are rotations r^k, n..2n-1 are r^k * s."""
    if n < 1:
        raise ConstructionSpecError("dihedral(n) needs n >= 1")
    a = np.arange(n)
    add = np.add.outer(a, a) % n
    sub = np.subtract.outer(a, a) % n
    t = np.block([[add, add + n], [sub + n, sub]])
    return FiniteGroup(t, name=f"D{n}", validate=False)


def symmetric(n: int) -> FiniteGroup:
    """Order n!, elements numbered by lexicographic one-line notation.

    Products compose left-then-inner: (sigma * tau)(x) = sigma(tau(x)).
    """
    if not 1 <= n <= 6:
        raise ConstructionSpecError("symmetric(n) supports 1 <= n <= 6")
    perms = np.array(sorted(itertools.permutations(range(n))), dtype=np.int64)
    weights = n ** np.arange(n - 1, -1, -1)
    codes = perms @ weights
    composed = perms[:, perms] @ weights
    return FiniteGroup(np.searchsorted(codes, composed), name=f"S{n}", validate=False)


def quaternion8() -> FiniteGroup:
    """Indices 0..3 are a^k, 4..7 are a^k * b, with a^4 = e, b^2 = a^2."""
    k = np.arange(4)
    add = np.add.outer(k, k) % 4
    sub = np.subtract.outer(k, k) % 4
    t = np.block([[add, add + 4], [sub + 4, (sub + 2) % 4]])
    return FiniteGroup(t, name="Q8", validate=False)


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z_p; order p^3.

    The matrix with above-diagonal entries (a, b, c) gets index a*p^2 + b*p + c,
    and (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
    """
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise ConstructionSpecError("heisenberg(p) needs p prime")
    if p**3 > config.MAX_ORDER:
        raise TooLarge(p**3, config.MAX_ORDER)
    idx = np.arange(p**3)
    a, b, c = idx // p**2, (idx // p) % p, idx % p
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    t = ((a1 + a) % p) * p**2 + ((b1 + b) % p) * p + ((c1 + c + a1 * b) % p)
    return FiniteGroup(t, name=f"H{p}", validate=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Pairs (g, h) numbered g*|H| + h."""
    n = G.n * H.n
    if n > config.MAX_ORDER:
        raise TooLarge(n, config.MAX_ORDER)
    t = (G.table[:, None, :, None] * H.n + H.table[None, :, None, :]).reshape(n, n)
    return FiniteGroup(t, name=f"{G.name}x{H.name}", validate=False)


def opposite(G: FiniteGroup) -> FiniteGroup:
    """Same carrier, reversed multiplication a o b = b * a."""
    name = G.name[:-3] if G.name.endswith("^op") else f"{G.name}^op"
    return FiniteGroup(G.table.T, name=name, validate=False)


def _named_factor(token: str) -> FiniteGroup:
    tok = token.strip().lower()
    if tok == "q8":
        return quaternion8()
    if tok.startswith("heisenberg") and tok[len("heisenberg") :].isdigit():
        return heisenberg(int(tok[len("heisenberg") :]))
    if len(tok) >= 2 and tok[0] in "zds" and tok[1:].isdigit():
        return {"z": cyclic, "d": dihedral, "s": symmetric}[tok[0]](int(tok[1:]))
    raise ConstructionSpecError(
        f"unknown group spec {token!r}; expected Z<n>, D<n>, S<n>, Q8, "
        f"heisenberg<p>, or products joined by 'x' such as Z3xZ3"
    )


def named_group(spec: str) -> FiniteGroup:
    """Resolve specs like ``Z6``, ``D4``, ``S3``, ``Q8``, ``heisenberg3``, ``Z3xZ3``."""
    parts = [p for p in spec.strip().split("x") if p != ""]
    if not parts:
        raise ConstructionSpecError(f"empty group spec {spec!r}")
    group = _named_factor(parts[0])
    for part in parts[1:]:
        group = direct_product(group, _named_factor(part))
    return group


# --- text format ---


def parse_table_text(text: str):
    """Parse the shared table format: optional ``# name``, then n, then n rows.

    Returns (table, name).  Blank lines are allowed; anything after the last
    table row other than blanks is rejected.
    """
    name = None
    rows = []
    n = None
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if seen_header or name is not None:
                raise ParseError(lineno, "comment allowed only before the size line")
            name = line[1:].strip() or None
            continue
        if not seen_header:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(lineno, f"expected the table size, got {line!r}") from None
            if n < 1:
                raise ParseError(lineno, "table size must be positive")
            seen_header = True
            continue
        if len(rows) == n:
            raise ParseError(lineno, "trailing garbage after the table")
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"non-integer table entry in {line!r}") from None
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(row)}")
        rows.append(row)
    if n is None:
        raise ParseError(1, "empty input")
    if len(rows) != n:
        raise ParseError(len(text.splitlines()) + 1, f"expected {n} rows, got {len(rows)}")
    return np.array(rows, dtype=np.int64), name


def format_table_text(table: np.ndarray, name: Optional[str] = None) -> str:
    lines = []
    if name:
        lines.append(f"# {name}")
    lines.append(str(table.shape[0]))
    lines.extend(" ".join(str(int(v)) for v in row) for row in table)
    return "\n".join(lines) + "\n"


def group_from_text(text: str) -> FiniteGroup:
    table, name = parse_table_text(text)
    return group_from_table(table, name=name)


def group_to_text(G: FiniteGroup) -> str:
    return format_table_text(G.table, G.name)
