"""Half-integer spins, even/odd spin coherent states and splitting schemes.

All cat-state quantities are parametrized by the real overlap ``p`` between
the two opposite-phase spin-1/2 coherent states, ``0 <= p <= 1``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DegenerateCatError, SchemeError, SpinCatError

SpinLike = Union["HalfInt", int, float, str, Fraction]


@dataclass(frozen=True, order=True)
class HalfInt:
    """A nonnegative multiple of 1/2, stored as the integer ``twice = 2*value``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be an int, got {self.twice!r}")
        if self.twice < 0:
            raise SpinCatError(f"spin must be nonnegative, got twice={self.twice}")

    @classmethod
    def coerce(cls, value: SpinLike) -> "HalfInt":
        """Build from a HalfInt, an int/float/Fraction, or a string like ``"3/2"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            text = value.strip()
            try:
                frac = Fraction(text)
            except ValueError as exc:
                raise SpinCatError(f"cannot parse spin {value!r}") from exc
        elif isinstance(value, (int, Fraction)):
            frac = Fraction(value)
        elif isinstance(value, float):
            frac = Fraction(value).limit_denominator(2)
            if float(frac) != value:
                raise SpinCatError(f"{value!r} is not a half-integer")
        else:
            raise TypeError(f"cannot interpret {value!r} as a spin")
        twice = 2 * frac
        if twice.denominator != 1:
            raise SpinCatError(f"{value!r} is not a half-integer")
        return cls(int(twice))

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.coerce(other).twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.coerce(other).twice)

    def __float__(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def half(value: SpinLike) -> HalfInt:
    """Shorthand for :meth:`HalfInt.coerce`."""
    return HalfInt.coerce(value)


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def coerce(cls, value: Union["Parity", int, str]) -> "Parity":
        if isinstance(value, Parity):
            return value
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("even", "odd"):
                return cls.EVEN if key == "even" else cls.ODD
            value = int(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise SpinCatError(f"cannot interpret {value!r} as a parity")
        return cls.ODD if value % 2 else cls.EVEN

    @property
    def cos_m_pi(self) -> int:
        """Phase factor ``cos(m*pi)``: exactly +1 (even) or -1 (odd)."""
        return 1 if self is Parity.EVEN else -1


def overlap_from_eta(eta: float) -> float:
    """Overlap ``<eta|-eta> = (1 - eta**2) / (1 + eta**2)`` for real ``eta`` in [0, 1]."""
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise SpinCatError(f"eta must lie in [0, 1], got {eta}")
    return (1.0 - eta * eta) / (1.0 + eta * eta)


def eta_from_overlap(p: float) -> float:
    """Inverse of :func:`overlap_from_eta` on [0, 1]."""
    p = _check_overlap(p)
    return math.sqrt((1.0 - p) / (1.0 + p))


def _check_overlap(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise SpinCatError(f"overlap p must lie in [0, 1], got {p}")
    return p


def coherent_pair_overlap(j: SpinLike, p: float) -> float:
    """Overlap ``<j, eta | j, -eta> = p**(2j)``."""
    return _check_overlap(p) ** half(j).twice


@dataclass(frozen=True)
class CatState:
    """Even (``m`` even) or odd spin-``j`` coherent cat state at overlap ``p``."""

    j: HalfInt
    m: Parity
    p: float

    def __post_init__(self):
        object.__setattr__(self, "j", half(self.j))
        object.__setattr__(self, "m", Parity.coerce(self.m))
        object.__setattr__(self, "p", _check_overlap(self.p))
        if self.j.twice < 1:
            raise SpinCatError("cat state needs j >= 1/2")

    @property
    def c(self) -> int:
        return self.m.cos_m_pi

    @property
    def degenerate(self) -> bool:
        """True for the odd cat whose two branches coincide (``p**(2j) == 1``)."""
        return self.m is Parity.ODD and self.pow(self.j) == 1.0

    def pow(self, spin: SpinLike) -> float:
        """``p ** (2 * spin)``."""
        return self.p ** half(spin).twice

    def with_p(self, p: float) -> "CatState":
        return CatState(self.j, self.m, p)


def cat_normalization(state: CatState) -> float:
    """Normalization ``N_m = (2 + 2 p**(2j) cos(m pi)) ** -1/2``."""
    if state.degenerate:
        raise DegenerateCatError(
            f"odd cat state with j={state.j} at p={state.p} is not normalizable"
        )
    return 1.0 / math.sqrt(2.0 + 2.0 * state.c * state.pow(state.j))


@dataclass(frozen=True)
class SplitScheme:
    """Ordered decomposition of a spin into two or three parts."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(half(x) for x in self.parts)
        if len(parts) not in (2, 3):
            raise SchemeError(f"only 2- and 3-part schemes are supported, got {len(parts)}")
        if any(x.twice < 1 for x in parts):
            raise SchemeError("every part must be at least 1/2")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "SplitScheme":
        """Parse ``"3/2,1/2"`` or ``"1/2,1/2,1"``."""
        return cls(tuple(t for t in text.split(",") if t.strip()))

    @property
    def j(self) -> HalfInt:
        return HalfInt(sum(x.twice for x in self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index: int) -> HalfInt:
        return self.parts[index]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


def check_scheme(state: CatState, scheme: SplitScheme, size: int | None = None) -> SplitScheme:
    """Validate that ``scheme`` splits ``state.j`` (and has ``size`` parts, if given)."""
    if not isinstance(scheme, SplitScheme):
        scheme = SplitScheme(tuple(scheme))
    if size is not None and len(scheme) != size:
        raise SchemeError(f"expected a {size}-part scheme, got ({scheme})")
    if scheme.j != state.j:
        raise SchemeError(f"scheme ({scheme}) sums to {scheme.j}, not j={state.j}")
    return scheme


def enumerate_bipartitions(j: SpinLike) -> list[SplitScheme]:
    """The ``2j - 1`` ordered splits ``(j - s/2, s/2)`` for ``s = 1 .. 2j - 1``."""
    n = half(j).twice
    return [SplitScheme((HalfInt(n - s), HalfInt(s))) for s in range(1, n)]


def enumerate_tripartitions(j: SpinLike) -> list[SplitScheme]:
    """All ordered three-part splits of ``j`` into parts of at least 1/2."""
    n = half(j).twice
    out = []
    for a, b in itertools.product(range(n - 2, 0, -1), repeat=2):
        if n - a - b >= 1:
            out.append(SplitScheme((HalfInt(a), HalfInt(b), HalfInt(n - a - b))))
    return out


def spin_sum(parts: Iterable[SpinLike]) -> HalfInt:
    return HalfInt(sum(half(x).twice for x in parts))
