"""Group-to-quandle constructions.

Every constructor takes a validated group (plus parameters) and returns a
quandle on the same carrier, re-checking the axioms so that a failing
formula surfaces a concrete witness instead of a wrong table.  Formulas:

    conj_m:  x*y = y^-m x y^m          core:   x*y = y x^-1 y
    R_n:     i*j = 2j - i (mod n)      alex:   x*y = phi(x y^-1) y
    q1:      x*y = y phi(y^-1 x)       q2:     x*y = y psi(y x^-1)
    q3:      x*y = psi(x y^-1) y       q4:     x*y = y psi(y^-1 x)
    p1:      x*y = y c^-1 y^-1 x c     p2:     x*y = y c^-1 x y^-1 c
    p3:      x*y = c^-1 y^-1 x c y     p4:     x*y = c^-1 x y^-1 c y

q1 needs a map satisfying the automorphism law, q2-q4 the antiautomorphism
law; q3/q4 additionally need x psi(y) x^-1 = psi(x y x^-1) for all x, y.
On abelian groups the two laws coincide, so either kind is accepted there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import CompatibilityFail, ConstructionSpecError, WrongMapKind
from .groupmaps import ClassifiedMap, enumerate_aaut, enumerate_aut, preserves_table, reverses_table
from .groups import FiniteGroup
from .quandles import Quandle, trivial

__all__ = [
    "ConstructionSpec",
    "conj_m",
    "core",
    "dihedral_quandle",
    "alex",
    "q1",
    "q2",
    "q3",
    "q4",
    "p1",
    "p2",
    "p3",
    "p4",
    "build",
    "spec_from_string",
    "KINDS",
]


def _map_label(cm: ClassifiedMap) -> str:
    images = list(map(int, cm.images))
    if len(images) <= 10:
        return "[" + ",".join(map(str, images)) + "]"
    return "[" + ",".join(map(str, images[:6])) + f",...#{len(images)}]"


def _require_auto_law(G: FiniteGroup, cm: ClassifiedMap) -> None:
    if not preserves_table(G.table, cm.images):
        raise WrongMapKind("automorphism", cm.kind)


def _require_anti_law(G: FiniteGroup, cm: ClassifiedMap) -> None:
    if not reverses_table(G.table, cm.images):
        raise WrongMapKind("antiautomorphism", cm.kind)


def _require_compatible(G: FiniteGroup, cm: ClassifiedMap) -> None:
    """x psi(y) x^-1 = psi(x y x^-1) for all x, y."""
    t, inv, psi = G.table, G.inverse, cm.images
    idx = np.arange(G.n)
    lhs = t[t[idx[:, None], psi[None, :]], inv[:, None]]
    rhs = psi[t[t, inv[:, None]]]
    bad = lhs != rhs
    if bad.any():
        x, y = map(int, np.argwhere(bad)[0])
        raise CompatibilityFail(x, y)


def conj_m(G: FiniteGroup, m: int) -> Quandle:
    """Conjugation quandle: x*y = y^-m x y^m."""
    ym = G.power_all(m)
    yminv = G.inverse[ym]
    by_yx = G.table[G.table[yminv], ym[:, None]]  # [y, x] = y^-m x y^m
    return Quandle(by_yx.T, name=f"Conj_{m}({G.name})")


def core(G: FiniteGroup) -> Quandle:
    """Core quandle: x*y = y x^-1 y."""
    by_yx = G.table[G.table[:, G.inverse], np.arange(G.n)[:, None]]
    return Quandle(by_yx.T, name=f"Core({G.name})")


def dihedral_quandle(n: int) -> Quandle:
    """R_n on 0..n-1: i*j = 2j - i (mod n)."""
    if n < 1:
        raise ConstructionSpecError("dihedral_quandle(n) needs n >= 1")
    idx = np.arange(n)
    return Quandle((2 * idx[None, :] - idx[:, None]) % n, name=f"R{n}")


def alex(G: FiniteGroup, phi: ClassifiedMap) -> Quandle:
    """Generalized Alexander quandle: x*y = phi(x y^-1) y."""
    _require_auto_law(G, phi)
    heads = phi.images[G.table[:, G.inverse]]  # [x, y] = phi(x y^-1)
    op = G.table[heads, np.arange(G.n)[None, :]]
    return Quandle(op, name=f"Alex({G.name},phi={_map_label(phi)})")


def q1(G: FiniteGroup, phi: ClassifiedMap) -> Quandle:
    """x*y = y phi(y^-1 x)."""
    _require_auto_law(G, phi)
    tails = phi.images[G.table[G.inverse]]  # [y, x] = phi(y^-1 x)
    by_yx = G.table[np.arange(G.n)[:, None], tails]
    return Quandle(by_yx.T, name=f"Q1({G.name},phi={_map_label(phi)})")


def q2(G: FiniteGroup, psi: ClassifiedMap) -> Quandle:
    """x*y = y psi(y x^-1)."""
    _require_anti_law(G, psi)
    tails = psi.images[G.table[:, G.inverse]]  # [y, x] = psi(y x^-1)
    by_yx = G.table[np.arange(G.n)[:, None], tails]
    return Quandle(by_yx.T, name=f"Q2({G.name},psi={_map_label(psi)})")


def q3(G: FiniteGroup, psi: ClassifiedMap) -> Quandle:
    """x*y = psi(x y^-1) y, requiring the conjugation compatibility of psi."""
    _require_anti_law(G, psi)
    _require_compatible(G, psi)
    heads = psi.images[G.table[:, G.inverse]]  # [x, y] = psi(x y^-1)
    op = G.table[heads, np.arange(G.n)[None, :]]
    return Quandle(op, name=f"Q3({G.name},psi={_map_label(psi)})")


def q4(G: FiniteGroup, psi: ClassifiedMap) -> Quandle:
    """x*y = y psi(y^-1 x), requiring the conjugation compatibility of psi."""
    _require_anti_law(G, psi)
    _require_compatible(G, psi)
    tails = psi.images[G.table[G.inverse]]  # [y, x] = psi(y^-1 x)
    by_yx = G.table[np.arange(G.n)[:, None], tails]
    return Quandle(by_yx.T, name=f"Q4({G.name},psi={_map_label(psi)})")


def _check_element(G: FiniteGroup, c: int) -> None:
    if not 0 <= c < G.n:
        raise ConstructionSpecError(f"element index {c} outside 0..{G.n - 1}")


def p1(G: FiniteGroup, c: int) -> Quandle:
    """x*y = y c^-1 y^-1 x c."""
    _check_element(G, c)
    t, inv = G.table, G.inverse
    idx = np.arange(G.n)
    prefix = t[t[idx, inv[c]], inv]  # y c^-1 y^-1
    by_yx = t[t[prefix], c]
    return Quandle(by_yx.T, name=f"P1({G.name},c={c})")


def p2(G: FiniteGroup, c: int) -> Quandle:
    """x*y = y c^-1 x y^-1 c."""
    _check_element(G, c)
    t, inv = G.table, G.inverse
    idx = np.arange(G.n)
    prefix = t[idx, inv[c]]  # y c^-1
    suffix = t[inv, c]  # y^-1 c
    by_yx = t[t[prefix], suffix[:, None]]
    return Quandle(by_yx.T, name=f"P2({G.name},c={c})")


def p3(G: FiniteGroup, c: int) -> Quandle:
    """x*y = c^-1 y^-1 x c y."""
    _check_element(G, c)
    t, inv = G.table, G.inverse
    idx = np.arange(G.n)
    prefix = t[inv[c], inv]  # c^-1 y^-1
    suffix = t[c, idx]  # c y
    by_yx = t[t[prefix], suffix[:, None]]
    return Quandle(by_yx.T, name=f"P3({G.name},c={c})")


def p4(G: FiniteGroup, c: int) -> Quandle:
    """x*y = c^-1 x y^-1 c y."""
    _check_element(G, c)
    t, inv = G.table, G.inverse
    idx = np.arange(G.n)
    heads = t[inv[c]]  # c^-1 x, indexed by x
    suffix = t[t[inv, c], idx]  # y^-1 c y
    op = t[np.ix_(heads, suffix)]
    return Quandle(op, name=f"P4({G.name},c={c})")


KINDS = (
    "trivial",
    "dihedral",
    "conj",
    "core",
    "alex",
    "q1",
    "q2",
    "q3",
    "q4",
    "p1",
    "p2",
    "p3",
    "p4",
)

_GROUP_FREE = {"trivial", "dihedral"}
_MAP_PARAM = {"alex": "phi", "q1": "phi", "q2": "psi", "q3": "psi", "q4": "psi"}


@dataclass(frozen=True)
class ConstructionSpec:
    """Which constructor to run and with what parameters."""

    kind: str
    group: Optional[FiniteGroup] = None
    n: Optional[int] = None
    m: Optional[int] = None
    map: Optional[ClassifiedMap] = None
    c: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConstructionSpecError(f"unknown construction kind {self.kind!r}")


def build(spec: ConstructionSpec) -> Quandle:
    """Dispatch a ConstructionSpec to its constructor."""
    kind = spec.kind
    if kind in _GROUP_FREE:
        if spec.n is None:
            raise ConstructionSpecError(f"{kind} needs n")
        return trivial(spec.n) if kind == "trivial" else dihedral_quandle(spec.n)
    if spec.group is None:
        raise ConstructionSpecError(f"{kind} needs a group")
    if kind == "conj":
        if spec.m is None:
            raise ConstructionSpecError("conj needs m")
        return conj_m(spec.group, spec.m)
    if kind == "core":
        return core(spec.group)
    if kind in _MAP_PARAM:
        if spec.map is None:
            raise ConstructionSpecError(f"{kind} needs {_MAP_PARAM[kind]}")
        ctor = {"alex": alex, "q1": q1, "q2": q2, "q3": q3, "q4": q4}[kind]
        return ctor(spec.group, spec.map)
    if spec.c is None:
        raise ConstructionSpecError(f"{kind} needs c")
    ctor = {"p1": p1, "p2": p2, "p3": p3, "p4": p4}[kind]
    return ctor(spec.group, spec.c)


def spec_from_string(text: str, group: Optional[FiniteGroup] = None) -> ConstructionSpec:
    """Parse CLI-style specs: ``core``, ``conj:m=2``, ``trivial:n=4``,
    ``alex:phi=3``, ``q3:psi=1``, ``p1:c=3``.

    Map parameters are indices into the lexicographically sorted Aut(G)
    (for phi) or AAut(G) (for psi) lists; index 0 under phi is always the
    identity map.
    """
    head, _, rest = text.strip().partition(":")
    kind = head.strip().lower()
    if kind not in KINDS:
        raise ConstructionSpecError(f"unknown construction kind {head!r}")
    params = {}
    if rest:
        for piece in rest.split(","):
            key, eq, value = piece.partition("=")
            if not eq:
                raise ConstructionSpecError(f"malformed parameter {piece!r}, expected key=value")
            try:
                params[key.strip()] = int(value)
            except ValueError:
                raise ConstructionSpecError(f"parameter {key!r} needs an integer") from None

    def take(key):
        if key not in params:
            raise ConstructionSpecError(f"{kind} needs {key}=<int>")
        return params.pop(key)

    spec: ConstructionSpec
    if kind in _GROUP_FREE:
        spec = ConstructionSpec(kind, n=take("n"))
    elif kind == "conj":
        spec = ConstructionSpec(kind, group=group, m=params.pop("m", 1))
    elif kind == "core":
        spec = ConstructionSpec(kind, group=group)
    elif kind in _MAP_PARAM:
        if group is None:
            raise ConstructionSpecError(f"{kind} needs a group to resolve its map index")
        index = take(_MAP_PARAM[kind])
        pool = enumerate_aut(group) if _MAP_PARAM[kind] == "phi" else enumerate_aaut(group)
        if not 0 <= index < len(pool):
            raise ConstructionSpecError(
                f"{_MAP_PARAM[kind]} index {index} outside 0..{len(pool) - 1}"
            )
        spec = ConstructionSpec(kind, group=group, map=pool[index])
    else:
        spec = ConstructionSpec(kind, group=group, c=take("c"))
    if params:
        raise ConstructionSpecError(f"unexpected parameters {sorted(params)} for {kind}")
    if kind not in _GROUP_FREE and group is None:
        raise ConstructionSpecError(f"{kind} needs a group")
    return spec
