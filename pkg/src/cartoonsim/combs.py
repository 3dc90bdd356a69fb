"""Binary coding of n-bit strings by combs.

A comb is a blade that does not contain the subsidiary generator
``b = b_{n+1}``.  The comb ``c_{A;A_1...A_n}`` contains ``b_0`` iff the
zeroth bit ``A`` is 1 and ``b_k`` iff ``A_k`` is 1.  Bit strings are written
with ``A_1`` leftmost throughout the package.

The bit-level operations here come in two flavours.  The plain names
(:func:`sandwich_ak`, :func:`left_mult_bk`, :func:`negate_bit`) evaluate the
literal geometric products; the ``*_by_index`` variants act directly on
blade masks and coefficients.  Both must agree, which the tests check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .clifford import Blade, Multivector, OpCounter, mv_add, mv_product, mv_scale, reverse


@dataclass(frozen=True)
class CombIndex:
    """Index ``A;A_1...A_n`` of a comb (``zeroth`` is the ``A`` before the semicolon)."""

    zeroth: int
    bits: str

    def __post_init__(self):
        if self.zeroth not in (0, 1):
            raise ValueError(f"zeroth bit must be 0 or 1, got {self.zeroth!r}")
        if any(ch not in "01" for ch in self.bits):
            raise ValueError(f"bit string must contain only 0/1, got {self.bits!r}")

    @property
    def width(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return f"{self.zeroth};{self.bits}"


@dataclass(frozen=True)
class SpecialBlades:
    """``a = b_0 b``, ``a_k = b_k b`` and ``b = b_{n+1}`` for a given width."""

    width: int
    a: Blade
    a_k: Tuple[Blade, ...]  # a_k[k - 1] is a_k
    b: Blade


def special_blades(width: int) -> SpecialBlades:
    b = 1 << (width + 1)
    return SpecialBlades(
        width=width,
        a=1 | b,
        a_k=tuple((1 << k) | b for k in range(1, width + 1)),
        b=b,
    )


def comb_encode(idx: CombIndex) -> Blade:
    mask = idx.zeroth
    for k, ch in enumerate(idx.bits, start=1):
        if ch == "1":
            mask |= 1 << k
    return mask


def bits_of(mask: Blade, width: int) -> str:
    """The bit string ``A_1...A_n`` of a comb mask (zeroth bit dropped)."""
    return "".join("1" if mask >> k & 1 else "0" for k in range(1, width + 1))


def mask_of(bits: str) -> Blade:
    """Real comb mask ``c_{0;bits}``."""
    return comb_encode(CombIndex(0, bits))


def is_comb(mask: Blade, width: int) -> bool:
    return not mask >> (width + 1) & 1


def comb_decode(mask: Blade, width: int) -> CombIndex:
    if mask < 0 or mask >> (width + 1):
        raise ValueError(f"blade {mask:#b} is not a comb for width {width}")
    return CombIndex(mask & 1, bits_of(mask, width))


def is_imaginary(mask: Blade) -> bool:
    return bool(mask & 1)


def comb(bits: str, zeroth: int = 0, coeff: float = 1.0) -> Multivector:
    """Multivector ``coeff * c_{zeroth;bits}``."""
    return Multivector.from_blade(len(bits), comb_encode(CombIndex(zeroth, bits)), coeff)


def _require_combs(x: Multivector) -> None:
    top = 1 << (x.width + 1)
    for mask in x.terms:
        if mask & top:
            raise ValueError(f"multivector is not comb-supported (blade {mask:#b} contains b_{x.width + 1})")


def _check_bit(k: int, width: int, lowest: int = 1) -> None:
    if not lowest <= k <= width:
        raise ValueError(f"bit index {k} outside {lowest}..{width}")


# -- complex structure -------------------------------------------------------

def i_map(x: Multivector) -> Multivector:
    """``i c_{A;...} = (-1)**A' c_{A';...}``; squares to minus the identity."""
    _require_combs(x)
    out = {}
    for mask, c in x.terms.items():
        out[mask ^ 1] = c if mask & 1 else -c
    return Multivector._raw(x.width, out)


def phase_exp(phi: float, x: Multivector) -> Multivector:
    """``exp(i phi) x = cos(phi) x + sin(phi) i(x)``."""
    return mv_add(mv_scale(x, math.cos(phi)), mv_scale(i_map(x), math.sin(phi)))


def complex_scale(z: complex, x: Multivector) -> Multivector:
    """Multiply by ``z = re + im*i`` with ``i`` acting as :func:`i_map`."""
    z = complex(z)
    if z.imag == 0.0:
        return mv_scale(x, z.real)
    if z.real == 0.0:
        return mv_scale(i_map(x), z.imag)
    return mv_add(mv_scale(x, z.real), mv_scale(i_map(x), z.imag))


# -- bit operations by literal Clifford products ------------------------------

def _sandwich(r: Blade, x: Multivector, counter: Optional[OpCounter]) -> Multivector:
    rot = Multivector.from_blade(x.width, r)
    return mv_product(mv_product(reverse(rot), x, counter), rot, counter)


def sandwich_ak(k: int, x: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """``a_k^* x a_k``; on a comb this is ``(-1)**A_k`` times the comb."""
    _check_bit(k, x.width)
    _require_combs(x)
    return _sandwich(special_blades(x.width).a_k[k - 1], x, counter)


def left_mult_bk(k: int, x: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """``b_k x`` for ``0 <= k <= n``: toggles bit k with sign ``(-1)**(A_0+...+A_{k-1})``."""
    _check_bit(k, x.width, lowest=0)
    _require_combs(x)
    return mv_product(Multivector.from_blade(x.width, 1 << k), x, counter)


@lru_cache(maxsize=None)
def _negation_rotor(width: int, k: int) -> Multivector:
    # a a_1 ... a_{k-1}
    sb = special_blades(width)
    r = Multivector.from_blade(width, sb.a)
    for j in range(1, k):
        r = mv_product(r, Multivector.from_blade(width, sb.a_k[j - 1]))
    return r


def negate_bit(k: int, x: Multivector, counter: Optional[OpCounter] = None) -> Multivector:
    """``n_k x = b_k a_{k-1}^* ... a^* x a ... a_{k-1}``; flips ``A_k`` with no sign."""
    _check_bit(k, x.width)
    _require_combs(x)
    r = _negation_rotor(x.width, k)
    inner = mv_product(mv_product(reverse(r), x, counter), r, counter)
    return mv_product(Multivector.from_blade(x.width, 1 << k), inner, counter)


# -- the same operations by index manipulation --------------------------------

def sandwich_ak_by_index(k: int, x: Multivector) -> Multivector:
    _check_bit(k, x.width)
    _require_combs(x)
    return Multivector._raw(x.width, {m: (-c if m >> k & 1 else c) for m, c in x.terms.items()})


def left_mult_bk_by_index(k: int, x: Multivector) -> Multivector:
    _check_bit(k, x.width, lowest=0)
    _require_combs(x)
    below = (1 << k) - 1
    out = {}
    for m, c in x.terms.items():
        out[m ^ (1 << k)] = -c if bin(m & below).count("1") & 1 else c
    return Multivector._raw(x.width, out)


def negate_bit_by_index(k: int, x: Multivector) -> Multivector:
    _check_bit(k, x.width)
    _require_combs(x)
    return Multivector._raw(x.width, {m ^ (1 << k): c for m, c in x.terms.items()})


# -- complex-amplitude view ---------------------------------------------------

@dataclass
class CombState:
    """Complex amplitudes over n-bit strings (``A_1`` leftmost).

    Correspondence with multivectors: ``c_{0;A}`` carries amplitude 1 and
    ``c_{1;A}`` carries amplitude ``-1j``, which makes :func:`i_map`
    correspond to multiplication by ``1j``.
    """

    width: int
    amps: Dict[str, complex] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for bits, a in self.amps.items():
            if len(bits) != self.width or any(ch not in "01" for ch in bits):
                raise ValueError(f"bad bit string {bits!r} for width {self.width}")
            a = complex(a)
            if a != 0:
                clean[bits] = a
        self.amps = clean

    @classmethod
    def basis(cls, bits: str) -> "CombState":
        return cls(len(bits), {bits: 1.0})

    @classmethod
    def from_vector(cls, width: int, vec) -> "CombState":
        """From a dense vector indexed by ``int(bits, 2)`` (``A_1`` most significant)."""
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != (1 << width,):
            raise ValueError(f"expected {1 << width} amplitudes, got shape {vec.shape}")
        return cls(width, {format(i, f"0{width}b") if width else "": complex(a) for i, a in enumerate(vec)})

    def amplitude(self, bits: str) -> complex:
        return self.amps.get(bits, 0j)

    def to_vector(self) -> np.ndarray:
        vec = np.zeros(1 << self.width, dtype=complex)
        for bits, a in self.amps.items():
            vec[int(bits, 2) if bits else 0] = a
        return vec

    def norm2(self) -> float:
        return sum(abs(a) ** 2 for a in self.amps.values())


def comb_state_of(x: Multivector) -> CombState:
    _require_combs(x)
    amps: Dict[str, complex] = {}
    for mask, c in x.terms.items():
        bits = bits_of(mask, x.width)
        amps[bits] = amps.get(bits, 0j) + (complex(0.0, -c) if mask & 1 else complex(c, 0.0))
    return CombState(x.width, amps)


def multivector_of(s: CombState) -> Multivector:
    terms: Dict[Blade, float] = {}
    for bits, a in s.amps.items():
        m = mask_of(bits)
        if a.real != 0.0:
            terms[m] = a.real
        if a.imag != 0.0:
            terms[m | 1] = -a.imag
    return Multivector(s.width, terms)


def comb_multivector(width: int, coeffs: Mapping[CombIndex, float]) -> Multivector:
    """Build a comb-supported multivector from ``{CombIndex: coefficient}``."""
    terms: Dict[Blade, float] = {}
    for idx, c in coeffs.items():
        if idx.width != width:
            raise ValueError(f"comb {idx} does not have width {width}")
        terms[comb_encode(idx)] = terms.get(comb_encode(idx), 0.0) + c
    return Multivector(width, terms)
