"""Bijections of a group's carrier and their algebra.

PointMap is the shared substrate: automorphisms, antiautomorphisms, the
inversion map, translations, and the two-sided maps f_{a,b}(x) = a*x*b are
all point maps over {0..n-1}.  Classification and enumeration live here;
the same table laws are reused verbatim for quandles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import config
from .errors import CapExceeded, NotAutomorphism, NotBijective
from .groups import FiniteGroup, Subset, direct_product, opposite, quotient_by_normal
from .verdicts import Verdict, combine, make_iff

__all__ = [
    "AUTOMORPHISM",
    "ANTIAUTOMORPHISM",
    "PLAIN",
    "PointMap",
    "ClassifiedMap",
    "preserves_table",
    "reverses_table",
    "preserving_mask",
    "reversing_mask",
    "classify",
    "inversion_map",
    "enumerate_aut",
    "enumerate_aaut",
    "aut_oracle",
    "inner_auts",
    "out_coset_reps",
    "centralizer_in_aut",
    "centralizer_in_aaut",
    "is_central_automorphism",
    "fix_set",
    "f_ab",
    "left_translation",
    "build_H",
    "build_F",
    "build_F_prime",
    "verify_F_iso",
    "closure_of_point_maps",
]

AUTOMORPHISM = "automorphism"
ANTIAUTOMORPHISM = "antiautomorphism"
PLAIN = "plain-bijection"


class PointMap:
    """A bijection of {0..n-1}, stored as its (read-only) images array."""

    __slots__ = ("images",)

    def __init__(self, images):
        arr = np.array(images, dtype=np.int64)
        if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise NotBijective(images)
        arr.setflags(write=False)
        self.images = arr

    @staticmethod
    def identity(n: int) -> "PointMap":
        return PointMap(np.arange(n))

    @property
    def n(self) -> int:
        return int(self.images.size)

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def compose(self, other: "PointMap") -> "PointMap":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return PointMap(self.images[other.images])

    def inverse(self) -> "PointMap":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.n)
        return PointMap(inv)

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.images)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointMap) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __lt__(self, other: "PointMap") -> bool:
        return self.as_tuple() < other.as_tuple()

    def __repr__(self) -> str:
        return f"PointMap({list(map(int, self.images))})"


@dataclass(frozen=True)
class ClassifiedMap:
    """A point map together with which group law it satisfies."""

    map: PointMap
    kind: str
    group: FiniteGroup

    @property
    def images(self) -> np.ndarray:
        return self.map.images

    def __lt__(self, other: "ClassifiedMap") -> bool:
        return self.map < other.map

    def to_json(self) -> dict:
        return {"images": [int(v) for v in self.images], "kind": self.kind}


# --- table laws (shared with quandles) ---


def preserves_table(table: np.ndarray, images: np.ndarray) -> bool:
    """f(a.b) = f(a).f(b) for the given table."""
    return bool(np.array_equal(images[table], table[np.ix_(images, images)]))


def reverses_table(table: np.ndarray, images: np.ndarray) -> bool:
    """f(a.b) = f(b).f(a) for the given table."""
    return bool(np.array_equal(images[table], table[np.ix_(images, images)].T))


def preserving_mask(table: np.ndarray, stack: np.ndarray) -> np.ndarray:
    """Boolean mask over a (m, n) stack of image arrays satisfying the law."""
    lhs = stack[:, table]
    rhs = table[stack[:, :, None], stack[:, None, :]]
    return (lhs == rhs).all(axis=(1, 2))

def reversing_mask(table: np.ndarray, stack: np.ndarray) -> np.ndarray:
    lhs = stack[:, table]
    rhs = table[stack[:, :, None], stack[:, None, :]].transpose(0, 2, 1)
    return (lhs == rhs).all(axis=(1, 2))


def classify(G: FiniteGroup, pm: PointMap) -> ClassifiedMap:
    """Decide which law a bijection satisfies, by full scan.

    A map satisfying both laws (possible only when the two coincide, i.e. on
    abelian groups) is classified as an automorphism.
    """
    if pm.n != G.n:
        raise NotBijective(pm.images)
    if preserves_table(G.table, pm.images):
        kind = AUTOMORPHISM
    elif reverses_table(G.table, pm.images):
        kind = ANTIAUTOMORPHISM
    else:
        kind = PLAIN
    return ClassifiedMap(pm, kind, G)


def inversion_map(G: FiniteGroup) -> ClassifiedMap:
    """The map g -> g^-1; an antiautomorphism, an automorphism when abelian."""
    return classify(G, PointMap(G.inverse))


# --- Aut(G) enumeration ---


def _greedy_generators(G: FiniteGroup) -> List[int]:
    """Minimal-ish generating set: repeatedly add the least uncovered element."""
    gens: List[int] = []
    covered = {G.identity}
    while len(covered) < G.n:
        gens.append(min(set(range(G.n)) - covered))
        covered = set(G.subgroup_closure(gens))
    return gens


def _extend_hom(G: FiniteGroup, gens: Sequence[int], gen_images: Sequence[int]):
    """Close a partial generator assignment under the homomorphism law.

    Returns the full images array, or None on conflict.  Every product of
    known elements forces the image of the product; the worklist runs until
    the assignment covers the subgroup generated so far.
    """
    t = G.table
    part = np.full(G.n, -1, dtype=np.int64)
    part[G.identity] = G.identity
    known = [G.identity]
    for g, img in zip(gens, gen_images):
        if part[g] == -1:
            part[g] = img
            known.append(g)
        elif part[g] != img:
            return None
    i = 0
    while i < len(known):
        u = known[i]
        j = 0
        while j < len(known):
            v = known[j]
            for x, y in ((u, v), (v, u)):
                p = int(t[x, y])
                q = int(t[part[x], part[y]])
                if part[p] == -1:
                    part[p] = q
                    known.append(p)
                elif part[p] != q:
                    return None
            j += 1
        i += 1
    return part


_AUT_CACHE: Dict[FiniteGroup, Tuple[Tuple[int, ...], ...]] = {}


def _aut_images(G: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    if G in _AUT_CACHE:
        return _AUT_CACHE[G]
    if G.n > config.MAX_AUT_GROUP_ORDER:
        raise CapExceeded("automorphism enumeration", G.n, config.MAX_AUT_GROUP_ORDER)
    gens = _greedy_generators(G)
    orders = G.element_orders
    candidates = [np.nonzero(orders == orders[g])[0] for g in gens]
    found: List[np.ndarray] = []

    def descend(depth: int, images: List[int]) -> None:
        if depth == len(gens):
            part = _extend_hom(G, gens, images)
            if part is not None and -1 not in part and len(set(map(int, part))) == G.n:
                found.append(part)
            return
        for c in candidates[depth]:
            if _extend_hom(G, gens[: depth + 1], images + [int(c)]) is not None:
                descend(depth + 1, images + [int(c)])

    if not gens:  # trivial group
        found.append(np.array([G.identity], dtype=np.int64))
    else:
        descend(0, [])
    stack = np.array(found, dtype=np.int64)
    keep = preserving_mask(G.table, stack)
    result = tuple(sorted(tuple(map(int, row)) for row in stack[keep]))
    _AUT_CACHE[G] = result
    return result


def aut_oracle(G: FiniteGroup) -> List[ClassifiedMap]:
    """Aut(G) by scanning all n! bijections; only for very small groups."""
    if G.n > config.MAX_GROUP_ORACLE_ORDER:
        raise CapExceeded("group automorphism oracle", G.n, config.MAX_GROUP_ORACLE_ORDER)
    perms = np.array(list(itertools.permutations(range(G.n))), dtype=np.int64)
    keep = preserving_mask(G.table, perms)
    rows = sorted(tuple(map(int, row)) for row in perms[keep])
    return [ClassifiedMap(PointMap(row), AUTOMORPHISM, G) for row in rows]


def enumerate_aut(G: FiniteGroup, oracle: bool = False) -> List[ClassifiedMap]:
    """Complete Aut(G), lexicographically sorted by images."""
    if oracle:
        return aut_oracle(G)
    return [ClassifiedMap(PointMap(row), AUTOMORPHISM, G) for row in _aut_images(G)]


def enumerate_aaut(G: FiniteGroup) -> List[ClassifiedMap]:
    """Complete AAut(G) = {phi o inversion | phi in Aut(G)}, sorted, verified."""
    rows = sorted(tuple(map(int, np.array(row)[G.inverse])) for row in _aut_images(G))
    out = []
    for row in rows:
        images = np.array(row, dtype=np.int64)
        if not reverses_table(G.table, images):
            raise NotAutomorphism("composition with inversion lost the reversal law", row)
        out.append(classify(G, PointMap(images)))
    return out


# --- closure of map sets ---


def closure_of_point_maps(
    maps: Sequence[PointMap], cap: int = config.MAX_CLOSURE_SIZE
) -> List[PointMap]:
    """Group generated by the given bijections, as a sorted list.

    Cayley-graph breadth-first search: each round composes only the frontier
    with the generators (inverses included, so every word is reachable by
    right multiplication alone).
    """
    if not maps:
        raise ValueError("closure needs at least one map")
    n = maps[0].n
    gen_rows: Dict[bytes, np.ndarray] = {}
    for m in maps:
        gen_rows[m.images.tobytes()] = m.images
        inv = m.inverse().images
        gen_rows.setdefault(inv.tobytes(), inv)
    gens = np.array(list(gen_rows.values()), dtype=np.int64)
    identity = np.arange(n, dtype=np.int64)
    closed = identity[None, :]
    known = {identity.tobytes()}
    frontier = closed
    while frontier.size:
        products = np.unique(frontier[:, gens].reshape(-1, n), axis=0)
        fresh = [row for row in products if row.tobytes() not in known]
        if not fresh:
            break
        if len(known) + len(fresh) > cap:
            raise CapExceeded("map closure", len(known) + len(fresh), cap)
        frontier = np.array(fresh)
        known.update(row.tobytes() for row in frontier)
        closed = np.concatenate([closed, frontier])
    order = np.lexsort(closed.T[::-1])
    return [PointMap(row) for row in closed[order]]


# --- map families ---


def f_ab(G: FiniteGroup, a: int, b: int) -> PointMap:
    """The two-sided translation x -> a*x*b."""
    return PointMap(G.table[G.table[a, :], b])


def left_translation(G: FiniteGroup, a: int) -> PointMap:
    """The map t_a: x -> a*x."""
    return PointMap(G.table[a])


def inner_auts(G: FiniteGroup) -> List[ClassifiedMap]:
    """Conjugation maps x -> g*x*g^-1, deduplicated, sorted."""
    rows = {tuple(map(int, G.table[G.table[g, :], G.inverse[g]])) for g in range(G.n)}
    return [ClassifiedMap(PointMap(row), AUTOMORPHISM, G) for row in sorted(rows)]


def out_coset_reps(G: FiniteGroup) -> List[ClassifiedMap]:
    """One representative per coset of Inn(G) in Aut(G): the least member."""
    auts = enumerate_aut(G)
    inner = [m.map for m in inner_auts(G)]
    seen = set()
    reps = []
    for cm in auts:  # already lex sorted, so the first unseen member leads its coset
        if cm.map in seen:
            continue
        coset = {inn.compose(cm.map) for inn in inner}
        seen |= coset
        reps.append(cm)
    return reps


def _commuting_filter(pool: List[ClassifiedMap], base: np.ndarray) -> List[ClassifiedMap]:
    if not pool:
        return []
    stack = np.array([cm.images for cm in pool])
    mask = (stack[:, base] == base[stack]).all(axis=1)
    return [cm for cm, keep in zip(pool, mask) if keep]


def centralizer_in_aut(G: FiniteGroup, phi: ClassifiedMap) -> List[ClassifiedMap]:
    return _commuting_filter(enumerate_aut(G), phi.images)


def centralizer_in_aaut(G: FiniteGroup, phi: ClassifiedMap) -> List[ClassifiedMap]:
    return _commuting_filter(enumerate_aaut(G), phi.images)


def is_central_automorphism(G: FiniteGroup, theta: ClassifiedMap) -> bool:
    """Whether x^-1 * theta(x) lies in Z(G) for every x."""
    if not preserves_table(G.table, theta.images):
        raise NotAutomorphism("central-automorphism test needs an automorphism")
    vals = G.table[G.inverse, theta.images]
    central = np.zeros(G.n, dtype=bool)
    central[list(G.center())] = True
    return bool(central[vals].all())


def fix_set(G: FiniteGroup, cm: ClassifiedMap) -> Subset:
    hits = np.nonzero(cm.images == np.arange(G.n))[0]
    return Subset(G, tuple(int(x) for x in hits))


def _all_f_ab_stack(G: FiniteGroup) -> np.ndarray:
    """Images of f_{a,b} for all (a,b), shaped (n, n, n) indexed [a, b, x]."""
    t = G.table
    return t[t].transpose(0, 2, 1)


def build_H(G: FiniteGroup) -> List[PointMap]:
    """H = {t_a | a in Z(G)}; distinct maps, sorted."""
    rows = sorted(tuple(map(int, G.table[a])) for a in G.center())
    return [PointMap(row) for row in rows]


def build_F(G: FiniteGroup) -> List[PointMap]:
    """F = {f_{a,b} | a, b in G} as distinct point maps, sorted; |F| = n^2/|Z|."""
    flat = _all_f_ab_stack(G).reshape(G.n * G.n, G.n)
    return [PointMap(row) for row in np.unique(flat, axis=0)]


def build_F_prime(G: FiniteGroup, phi: ClassifiedMap) -> List[PointMap]:
    """F' = subgroup generated by {f_{a,b} | a in Fix(phi), b in G}.

    The generating set is already closed: Fix(phi) is a subgroup and
    f_{a,b} f_{c,d} = f_{ac,db}, so no further closure pass is needed.
    """
    fixed = np.asarray(list(fix_set(G, phi)), dtype=np.int64)
    flat = _all_f_ab_stack(G)[fixed].reshape(fixed.size * G.n, G.n)
    return [PointMap(row) for row in np.unique(flat, axis=0)]


def verify_F_iso(G: FiniteGroup) -> Verdict:
    """F realises (G x G^op)/N, N = {(a, a^-1) | a in Z(G)}.

    Checks that (a,b) -> f_{a,b} is constant on N-cosets, is bijective onto F,
    and turns coset multiplication into map composition.
    """
    inputs = G.name
    product = direct_product(G, opposite(G))
    normal = [a * G.n + int(G.inverse[a]) for a in G.center()]
    quotient, projection = quotient_by_normal(product, normal)

    stack = _all_f_ab_stack(G).reshape(G.n * G.n, G.n)  # row a*n+b is f_{a,b}
    unique_rows = np.unique(stack, axis=0)
    well_defined = True
    bad_pair = None
    for k in range(quotient.n):
        members = np.nonzero(projection == k)[0]
        if not (stack[members] == stack[members[0]]).all():
            well_defined = False
            bad_pair = (int(members[0]), k)
            break
    parts = [
        make_iff(
            "f-structure/well-defined",
            inputs,
            lhs=well_defined,
            rhs=True,
            counterexample=bad_pair,
            notes="f depends only on the N-coset of (a,b)",
        ),
        make_iff(
            "f-structure/bijective",
            inputs,
            lhs=len(unique_rows) == quotient.n,
            rhs=True,
            notes=f"|F| = {len(unique_rows)}, |(GxG^op)/N| = {quotient.n}",
        ),
    ]
    # Homomorphism: on coset representatives, composition of maps matches
    # the quotient's multiplication.
    reps = np.array(
        [int(np.nonzero(projection == k)[0][0]) for k in range(quotient.n)], dtype=np.int64
    )
    rep_maps = stack[reps]  # (q, n)
    composed = rep_maps[:, rep_maps]  # [i, j] = f_i after f_j
    target = rep_maps[quotient.table]
    # f_{a,b} f_{c,d} = f_{ac,db}, and (a,b)(c,d) = (ac, db) in G x G^op, so
    # the correspondence is a straight homomorphism.
    hom_ok = bool((composed == target).all())
    parts.append(
        make_iff(
            "f-structure/homomorphism",
            inputs,
            lhs=hom_ok,
            rhs=True,
            notes="coset product maps to composition f_i o f_j = f(q_i * q_j)",
        )
    )
    return combine("f-structure/iso", inputs, "isomorphism", parts)
