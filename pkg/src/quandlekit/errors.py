"""Exception types shared across the package.

Every validation failure carries a concrete witness (the offending indices)
so callers can replay the violation against the raw table.
"""

from __future__ import annotations


class QuandleKitError(Exception):
    """Base class for all package errors."""


class ParseError(QuandleKitError):
    """Malformed text input; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooLarge(QuandleKitError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class CapExceeded(QuandleKitError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


# --- group table validation ---


class BadShape(QuandleKitError):
    pass


class NotClosed(QuandleKitError):
    def __init__(self, a: int, b: int, value):
        super().__init__(f"entry ({a},{b}) = {value} is outside 0..n-1")
        self.witness = (a, b)


class NotAssociative(QuandleKitError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"(a*b)*c != a*(b*c) at (a,b,c) = ({a},{b},{c})")
        self.witness = (a, b, c)


class NoIdentity(QuandleKitError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NoInverse(QuandleKitError):
    def __init__(self, a: int):
        super().__init__(f"element {a} has no two-sided inverse")
        self.witness = a


class NotSubgroup(QuandleKitError):
    def __init__(self, reason: str):
        super().__init__(reason)


class NotNormal(QuandleKitError):
    def __init__(self, g: int, n: int):
        super().__init__(f"conjugate of {n} by {g} leaves the subset")
        self.witness = (g, n)


# --- maps ---


class NotBijective(QuandleKitError):
    def __init__(self, images):
        super().__init__(f"images {list(images)} are not a permutation")


class NotAutomorphism(QuandleKitError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class WrongMapKind(QuandleKitError):
    def __init__(self, needed: str, got: str):
        super().__init__(f"construction needs a map satisfying the {needed} law, got {got}")
        self.needed = needed
        self.got = got


class CarrierMismatch(QuandleKitError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"carrier size mismatch: expected {expected}, got {got}")


# --- quandle axioms ---


class QuandleAxiomError(QuandleKitError):
    """Base for Q1/Q2/Q3 violations; ``witness`` indexes the raw table."""


class Q1Fail(QuandleAxiomError):
    def __init__(self, x: int):
        super().__init__(f"idempotency fails: op[{x}][{x}] != {x}")
        self.witness = (x,)


class Q2Fail(QuandleAxiomError):
    def __init__(self, y: int):
        super().__init__(f"right translation by {y} is not a bijection")
        self.witness = (y,)


class Q3Fail(QuandleAxiomError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"self-distributivity fails at (x,y,z) = ({x},{y},{z})")
        self.witness = (x, y, z)


class CompatibilityFail(QuandleKitError):
    def __init__(self, x: int, y: int):
        super().__init__(f"x*psi(y)*x^-1 != psi(x*y*x^-1) at (x,y) = ({x},{y})")
        self.witness = (x, y)


class ConstructionSpecError(QuandleKitError):
    pass
