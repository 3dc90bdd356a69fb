"""Real Clifford algebra of an (n+2)-dimensional Euclidean space.

Blades are stored as generator bitmasks: bit ``g`` set means the generator
``b_g`` is a factor.  For a register of width ``n`` the generator universe is
``b_0, b_1, ..., b_n, b_{n+1}``; the canonical form of a blade is the product
of its generators in ascending index order.

A :class:`Multivector` is a sparse map from blade masks to real coefficients.
Values are treated as immutable; every operation returns a new instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Tuple

MAX_WIDTH = 24

Blade = int


def blade(*generators: int) -> Blade:
    """Mask of the canonical blade built from distinct ``generators``."""
    mask = 0
    for g in generators:
        if g < 0:
            raise ValueError(f"negative generator index {g}")
        if mask >> g & 1:
            raise ValueError(f"generator b_{g} repeated")
        mask |= 1 << g
    return mask


def generators(mask: Blade) -> Tuple[int, ...]:
    """Generator indices of a blade, ascending."""
    out = []
    g = 0
    while mask:
        if mask & 1:
            out.append(g)
        mask >>= 1
        g += 1
    return tuple(out)


def grade(mask: Blade) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def _swap_parity(x: Blade, y: Blade) -> int:
    # pairs (i in x, j in y) with i > j
    x >>= 1
    count = 0
    while x:
        count += bin(x & y).count("1")
        x >>= 1
    return count & 1


def blade_product(x: Blade, y: Blade) -> Tuple[int, Blade]:
    """Geometric product of two canonical blades.

    Returns ``(sign, mask)`` with ``sign`` in ``{+1, -1}``.  Repeated
    generators contract to 1 since every ``b_k`` squares to +1.

    >>> blade_product(blade(2), blade(1))
    (-1, 6)
    >>> blade_product(blade(1, 2), blade(2, 3))
    (1, 10)
    """
    return (-1 if _swap_parity(x, y) else 1), x ^ y


def _check_width(width: int) -> None:
    if width < 0 or width > MAX_WIDTH:
        raise ValueError(f"register width must lie in 0..{MAX_WIDTH}, got {width}")


@dataclass
class OpCounter:
    """Step counter: one multiplication per product, one addition per sum."""

    multiplications: int = 0
    additions: int = 0

    @property
    def total(self) -> int:
        return self.multiplications + self.additions


class Multivector:
    """Sparse real multivector over the generators ``b_0 .. b_{width+1}``."""

    __slots__ = ("width", "terms")

    def __init__(self, width: int, terms: Optional[Mapping[Blade, float]] = None):
        _check_width(width)
        self.width = width
        limit = 1 << (width + 2)
        clean = {}
        if terms:
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"blade mask {mask:#b} outside generators b_0..b_{width + 1}")
                if coeff != 0.0:
                    clean[mask] = float(coeff)
        self.terms = clean

    @classmethod
    def _raw(cls, width: int, terms: dict) -> "Multivector":
        # trusted constructor: terms already validated and zero-pruned
        mv = cls.__new__(cls)
        mv.width = width
        mv.terms = terms
        return mv

    @classmethod
    def scalar(cls, width: int, value: float = 1.0) -> "Multivector":
        return cls(width, {0: value})

    @classmethod
    def from_blade(cls, width: int, mask: Blade, coeff: float = 1.0) -> "Multivector":
        return cls(width, {mask: coeff})

    @classmethod
    def basis(cls, width: int, *gens: int, coeff: float = 1.0) -> "Multivector":
        """``coeff * b_{g1} b_{g2} ...`` with the generators multiplied in the order given."""
        sign = 1
        mask = 0
        for g in gens:
            s, mask = blade_product(mask, 1 << g)
            sign *= s
        return cls(width, {mask: sign * coeff})

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, frozenset(self.terms.items())))

    def coeff(self, mask: Blade) -> float:
        return self.terms.get(mask, 0.0)

    def __add__(self, other: "Multivector") -> "Multivector":
        return mv_add(self, other)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return mv_add(self, mv_scale(other, -1.0))

    def __neg__(self) -> "Multivector":
        return mv_scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_product(self, other)
        return mv_scale(self, other)

    def __rmul__(self, other):
        return mv_scale(self, other)

    def __truediv__(self, s: float) -> "Multivector":
        return mv_scale(self, 1.0 / s)

    def __repr__(self) -> str:
        return f"Multivector({self.width}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask, c in self:
            name = "".join(f"b{g}" for g in generators(mask))
            parts.append(f"{c:+g}{'*' + name if name else ''}")
        return " ".join(parts)


def _same_width(x: Multivector, y: Multivector) -> None:
    if x.width != y.width:
        raise ValueError(f"width mismatch: {x.width} vs {y.width}")


def mv_product(x: Multivector, y: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """Geometric product, bilinear over blade products.

    Counts as a single multiplication on ``counter`` whatever the term count.
    """
    _same_width(x, y)
    if counter is not None:
        counter.multiplications += 1
    out: dict = {}
    parity = _swap_parity
    for bx, cx in x.terms.items():
        for by, cy in y.terms.items():
            z = bx ^ by
            v = -cx * cy if parity(bx, by) else cx * cy
            out[z] = out.get(z, 0.0) + v
    return Multivector._raw(x.width, {k: v for k, v in out.items() if v != 0.0})


def mv_add(x: Multivector, y: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    _same_width(x, y)
    if counter is not None:
        counter.additions += 1
    out = dict(x.terms)
    for mask, c in y.terms.items():
        out[mask] = out.get(mask, 0.0) + c
    return Multivector._raw(x.width, {k: v for k, v in out.items() if v != 0.0})


def mv_scale(x: Multivector, s: float) -> Multivector:
    s = float(s)
    return Multivector._raw(x.width, {k: v * s for k, v in x.terms.items() if v * s != 0.0})


def mv_sum(items: Iterable[Multivector], width: int, counter: Optional[OpCounter] = None) -> Multivector:
    acc = Multivector(width)
    for item in items:
        acc = mv_add(acc, item, counter)
    return acc


def reverse(x: Multivector) -> Multivector:
    """Reverse: a grade-k blade picks up ``(-1)**(k*(k-1)/2)``."""
    out = {}
    for mask, c in x.terms.items():
        k = grade(mask)
        out[mask] = -c if (k * (k - 1) // 2) & 1 else c
    return Multivector._raw(x.width, out)
