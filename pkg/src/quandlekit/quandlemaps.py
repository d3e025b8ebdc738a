"""Quandle morphism enumeration and group structure of map sets.

The backtracking engine enumerates bijections f with f(x *1 y) =
f(x) *2 f(y) between two tables; automorphisms are the case t1 = t2 = op,
antiautomorphisms the case t2 = op transposed.  Assignments propagate
eagerly: the moment both arguments of a table cell have images, the cell's
image is forced, so most of the map is determined by a few choices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import config
from .errors import CapExceeded, CarrierMismatch
from .groupmaps import (
    ClassifiedMap,
    PointMap,
    closure_of_point_maps,
    preserves_table,
    preserving_mask,
    reverses_table,
)
from .groups import FiniteGroup
from .quandles import Quandle, inn_group

__all__ = [
    "QuandleMap",
    "SemidirectReport",
    "is_quandle_auto",
    "is_quandle_anti",
    "enumerate_quandle_auts",
    "enumerate_quandle_antis",
    "quandle_aut_oracle",
    "quandle_anti_oracle",
    "find_table_iso",
    "induced",
    "closure_group",
    "semidirect_verify",
    "inn_out_report",
]


@dataclass(frozen=True)
class QuandleMap:
    map: PointMap
    kind: str  # "automorphism" | "antiautomorphism"
    quandle: Quandle

    @property
    def images(self) -> np.ndarray:
        return self.map.images

    def __lt__(self, other: "QuandleMap") -> bool:
        return self.map < other.map

    def to_json(self) -> dict:
        return {"images": [int(v) for v in self.images], "kind": self.kind}


def is_quandle_auto(Q: Quandle, pm: PointMap) -> bool:
    if pm.n != Q.n:
        raise CarrierMismatch(Q.n, pm.n)
    return preserves_table(Q.op, pm.images)


def is_quandle_anti(Q: Quandle, pm: PointMap) -> bool:
    if pm.n != Q.n:
        raise CarrierMismatch(Q.n, pm.n)
    return reverses_table(Q.op, pm.images)


# --- backtracking engine over table isomorphisms ---


def _search_table_isos(
    t1: np.ndarray, t2: np.ndarray, first_only: bool = False
) -> List[Tuple[int, ...]]:
    """All bijections f with f(t1[x,y]) = t2[f(x),f(y)], as sorted tuples.

    Branching picks the unassigned point with the most constraints whose
    value is already determined; with ``first_only`` it picks the least
    unassigned index and explores candidates ascending, so the first hit is
    the lexicographically least solution.
    """
    n = int(t1.shape[0])
    part = np.full(n, -1, dtype=np.int64)  # source -> target
    taken = np.full(n, -1, dtype=np.int64)  # target -> source
    assigned: List[int] = []
    solutions: List[Tuple[int, ...]] = []

    def try_assign(x: int, w: int) -> Optional[List[int]]:
        """Force (x -> w) and all consequences; returns the undo list or None."""
        added: List[int] = []
        queue = [(x, w)]
        ok = True
        while queue:
            a, b = queue.pop()
            if part[a] != -1:
                if part[a] != int(b):
                    ok = False
                    break
                continue
            if taken[b] != -1:
                ok = False
                break
            part[a] = b
            taken[b] = a
            assigned.append(a)
            added.append(a)
            for v in assigned:
                pv = part[v]
                queue.append((int(t1[a, v]), int(t2[b, pv])))
                queue.append((int(t1[v, a]), int(t2[pv, b])))
        if ok:
            return added
        undo(added)
        return None

    def undo(added: List[int]) -> None:
        for a in reversed(added):
            taken[part[a]] = -1
            part[a] = -1
            assigned.pop()

    def pick_branch_point() -> int:
        free = np.nonzero(part == -1)[0]
        if first_only:
            return int(free[0])
        known = part != -1
        score = known[t1[free][:, known]].sum(axis=1) + known[t1[known][:, free]].sum(axis=0)
        return int(free[int(np.argmax(score))])

    def descend() -> bool:
        if len(assigned) == n:
            solutions.append(tuple(int(v) for v in part))
            return first_only
        x = pick_branch_point()
        for w in range(n):
            if taken[w] != -1:
                continue
            added = try_assign(x, w)
            if added is not None:
                done = descend()
                undo(added)
                if done:
                    return True
        return False

    descend()
    stack = np.array(sorted(solutions), dtype=np.int64).reshape(len(solutions), n)
    lhs = stack[:, t1]
    rhs = t2[stack[:, :, None], stack[:, None, :]]
    if not (lhs == rhs).all():
        raise AssertionError("search produced a non-morphism; engine bug")
    return [tuple(map(int, row)) for row in stack]


def find_table_iso(t1: np.ndarray, t2: np.ndarray) -> Optional[np.ndarray]:
    """Lexicographically least table isomorphism, or None."""
    if t1.shape != t2.shape:
        return None
    hits = _search_table_isos(np.asarray(t1), np.asarray(t2), first_only=True)
    return np.array(hits[0], dtype=np.int64) if hits else None


def _is_trivial_table(op: np.ndarray) -> bool:
    return bool((op == np.arange(op.shape[0])[:, None]).all())


_ENUM_CACHE: Dict[Tuple[Quandle, str], Tuple[Tuple[int, ...], ...]] = {}


def _enumerate(Q: Quandle, kind: str) -> Tuple[Tuple[int, ...], ...]:
    key = (Q, kind)
    if key not in _ENUM_CACHE:
        if Q.n > config.MAX_QUANDLE_ENUM_ORDER:
            raise CapExceeded("quandle map enumeration", Q.n, config.MAX_QUANDLE_ENUM_ORDER)
        if kind == "automorphism":
            if _is_trivial_table(Q.op) and Q.n > config.MAX_ORACLE_ORDER:
                # Aut(T_n) is all of Sym(n); materializing n! maps is refused.
                raise CapExceeded("trivial-quandle automorphisms", Q.n, config.MAX_ORACLE_ORDER)
            target = Q.op
        else:
            target = np.ascontiguousarray(Q.op.T)
        _ENUM_CACHE[key] = tuple(_search_table_isos(Q.op, target))
    return _ENUM_CACHE[key]


def enumerate_quandle_auts(Q: Quandle, oracle: bool = False) -> List[QuandleMap]:
    """Complete Aut(Q), lexicographically sorted."""
    if oracle:
        return quandle_aut_oracle(Q)
    return [QuandleMap(PointMap(r), "automorphism", Q) for r in _enumerate(Q, "automorphism")]


def enumerate_quandle_antis(Q: Quandle, oracle: bool = False) -> List[QuandleMap]:
    """Complete set of antiautomorphisms of Q, lexicographically sorted."""
    if oracle:
        return quandle_anti_oracle(Q)
    rows = _enumerate(Q, "antiautomorphism")
    return [QuandleMap(PointMap(r), "antiautomorphism", Q) for r in rows]


def _oracle_rows(op: np.ndarray, reverse: bool) -> List[Tuple[int, ...]]:
    n = op.shape[0]
    if n > config.MAX_ORACLE_ORDER:
        raise CapExceeded("quandle map oracle", n, config.MAX_ORACLE_ORDER)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    lhs = perms[:, op]
    rhs = op[perms[:, :, None], perms[:, None, :]]
    if reverse:
        rhs = rhs.transpose(0, 2, 1)
    keep = (lhs == rhs).all(axis=(1, 2))
    return [tuple(map(int, row)) for row in perms[keep]]


def quandle_aut_oracle(Q: Quandle) -> List[QuandleMap]:
    """Aut(Q) by scanning all n! bijections."""
    return [QuandleMap(PointMap(r), "automorphism", Q) for r in _oracle_rows(Q.op, False)]


def quandle_anti_oracle(Q: Quandle) -> List[QuandleMap]:
    """Antiautomorphisms of Q by scanning all n! bijections."""
    return [QuandleMap(PointMap(r), "antiautomorphism", Q) for r in _oracle_rows(Q.op, True)]


def induced(Q: Quandle, gmap: ClassifiedMap, target: str) -> bool:
    """Whether a group map, read as a point map, is an auto/anti of Q."""
    if gmap.map.n != Q.n:
        raise CarrierMismatch(Q.n, gmap.map.n)
    if target in ("auto", "automorphism"):
        return is_quandle_auto(Q, gmap.map)
    if target in ("anti", "antiautomorphism"):
        return is_quandle_anti(Q, gmap.map)
    raise ValueError(f"unknown target {target!r}")


# --- group structure of map sets ---


def closure_group(maps: Sequence[PointMap]):
    """Closure under composition/inverse plus its abstract group table."""
    closed = closure_of_point_maps(maps, cap=config.MAX_CLOSURE_SIZE)
    index = {m.as_tuple(): i for i, m in enumerate(closed)}
    arr = np.array([m.as_tuple() for m in closed], dtype=np.int64)
    table = np.empty((len(closed), len(closed)), dtype=np.int64)
    composed = arr[:, arr]  # [i, j] = m_i o m_j
    for i in range(len(closed)):
        for j in range(len(closed)):
            table[i, j] = index[tuple(map(int, composed[i, j]))]
    return closed, FiniteGroup(table, name=f"maps<{len(closed)}>")


@dataclass(frozen=True)
class SemidirectReport:
    normal_part_size: int
    complement_size: int
    intersection_trivial: bool
    closure_size: int
    verdict: bool
    failing_clause: Optional[str] = None
    mode: str = "materialized"  # or "certified"

    def to_json(self) -> dict:
        return {
            "normal_part_size": self.normal_part_size,
            "complement_size": self.complement_size,
            "intersection_trivial": self.intersection_trivial,
            "closure_size": self.closure_size,
            "verdict": self.verdict,
            "failing_clause": self.failing_clause,
            "mode": self.mode,
        }


def _rows_of(maps: Sequence[PointMap]) -> np.ndarray:
    return np.array(sorted({m.as_tuple() for m in maps}), dtype=np.int64)


def _row_set(arr: np.ndarray) -> set:
    return {row.tobytes() for row in arr}


def _is_map_group(arr: np.ndarray) -> bool:
    """Whether a deduplicated stack of maps is closed under composition/inverse.

    A nonempty set closed under both necessarily contains the identity, so
    this is the full subgroup test.  Membership checks run through one
    sorted-unique pass instead of per-row lookups.
    """
    m, n = arr.shape
    base = np.unique(arr, axis=0)
    if len(base) != m:
        return False
    composed = arr[:, arr].reshape(-1, n)
    if len(np.unique(np.concatenate([base, composed]), axis=0)) != m:
        return False
    inverses = np.argsort(arr, axis=1)
    return len(np.unique(np.concatenate([base, inverses]), axis=0)) == m


def semidirect_verify(
    normal_candidates: Sequence[PointMap],
    complement_candidates: Sequence[PointMap],
    Q: Quandle,
) -> SemidirectReport:
    """Check that two map sets realise an inner semidirect product in Aut(Q).

    Clauses: every member is an automorphism of Q; each set is a group; the
    complement normalizes the normal part; the intersection is trivial; the
    closure of the union has exactly |N| * |C| elements.  Above the BFS cap
    the closure size is certified from the clauses plus distinctness of the
    n o c products instead of being materialized.
    """
    N = _rows_of(normal_candidates)
    C = _rows_of(complement_candidates)
    n = Q.n

    def fail(clause: str, closure_size: int = 0, inter: bool = False) -> SemidirectReport:
        return SemidirectReport(len(N), len(C), inter, closure_size, False, clause)

    if N.size == 0 or C.size == 0:
        return fail("a part is empty")
    for label, arr in (("normal", N), ("complement", C)):
        if arr.size and not preserving_mask(Q.op, arr).all():
            return fail(f"{label} part contains a non-automorphism")
        if not _is_map_group(arr):
            return fail(f"{label} part is not a group of maps")

    nset = _row_set(N)
    for c in C:
        cinv = np.argsort(c)
        conjugated = c[N[:, cinv]]  # c o f o c^-1 for each f
        if any(row.tobytes() not in nset for row in conjugated):
            return fail("complement does not normalize the normal part")

    inter = nset & _row_set(C)
    identity = np.arange(n, dtype=np.int64).tobytes()
    intersection_trivial = inter <= {identity}
    if not intersection_trivial:
        return fail("intersection is not trivial", inter=False)

    products = N[:, C].reshape(-1, n)  # f o c for all pairs
    distinct = len(_row_set(products))
    expected = len(N) * len(C)
    if distinct != expected:
        return fail("n o c products collide", closure_size=distinct, inter=True)

    if expected <= config.MAX_SEMIDIRECT_BFS:
        closed = closure_of_point_maps(
            [PointMap(r) for r in N] + [PointMap(r) for r in C],
            cap=max(config.MAX_CLOSURE_SIZE, expected),
        )
        closure_size = len(closed)
        mode = "materialized"
    else:
        closure_size = expected
        mode = "certified"
    verdict = closure_size == expected
    return SemidirectReport(
        len(N),
        len(C),
        True,
        closure_size,
        verdict,
        None if verdict else "closure size differs from |N| * |C|",
        mode,
    )


def inn_out_report(Q: Quandle) -> Tuple[int, int, int]:
    """(inn size, aut size, out index), with Inn normal in Aut verified."""
    inner = inn_group(Q)
    auts = enumerate_quandle_auts(Q)
    aut_rows = {m.map.as_tuple() for m in auts}
    inn_rows = {m.as_tuple() for m in inner}
    if not inn_rows <= aut_rows:
        raise AssertionError("Inn(Q) escaped Aut(Q); engine bug")
    for a in auts:
        inv = a.map.inverse()
        for s in inner:
            if a.map.compose(s).compose(inv).as_tuple() not in inn_rows:
                raise AssertionError("Inn(Q) is not normal in Aut(Q); engine bug")
    if len(auts) % len(inner) != 0:
        raise AssertionError("|Aut| not divisible by |Inn|")
    return len(inner), len(auts), len(auts) // len(inner)
