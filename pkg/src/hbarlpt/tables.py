"""Shared result containers: quantum numbers, coefficient tables, energy series."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .exact import RationalLike, as_rational

OSCILLATOR = "oscillator"
COULOMB = "coulomb"
FAMILIES = (OSCILLATOR, COULOMB)


class MissingEntryError(KeyError):
    """A recursion step asked for a coefficient that has not been computed yet."""


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")

    @property
    def L(self) -> int:
        """Centrifugal factor l(l+1)."""
        return self.l * (self.l + 1)

    def zero_count(self, family: str) -> int:
        """Number of zeros enclosed by the contour around the origin."""
        if family == OSCILLATOR:
            return 2 * self.n + self.l + 1
        if family == COULOMB:
            return self.n + self.l + 1
        raise ValueError(f"unknown family {family!r}")

    def eta(self, family: str) -> int:
        N = self.zero_count(family)
        return N * (N + 1)


class CoefficientTable:
    """Triangular table of expansion coefficients ``C^k_i``.

    ``k`` is the order in hbar, ``i`` the index of the Laurent (oscillator, in
    powers of r**2) or Taylor (Coulomb, in powers of r) series of ``C_k(r)``.
    A table is filled by exactly one driver and then frozen.
    """

    def __init__(self, family: str, max_order: int, max_index: int):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.family = family
        self.max_order = max_order
        self.max_index = max_index
        self._entries: dict[tuple[int, int], Fraction] = {}
        self._frozen = False

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        try:
            return self._entries[key]
        except KeyError:
            k, i = key
            raise MissingEntryError(
                f"coefficient C^{k}_{i} is not present in the {self.family} table"
            ) from None

    def __setitem__(self, key: tuple[int, int], value: Fraction) -> None:
        if self._frozen:
            raise TypeError("coefficient table is frozen")
        k, i = key
        if not (0 <= k <= self.max_order and 0 <= i <= self.max_index):
            raise IndexError(f"C^{k}_{i} lies outside the table bounds")
        self._entries[key] = as_rational(value)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def row(self, k: int) -> list[Fraction]:
        return [self[k, i] for i in range(self.max_index + 1)]

    def freeze(self) -> "CoefficientTable":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def with_entry(self, k: int, i: int, value: RationalLike) -> "CoefficientTable":
        """Frozen copy with one entry replaced (used for corruption checks)."""
        if (k, i) not in self._entries:
            raise MissingEntryError(f"coefficient C^{k}_{i} is not present")
        clone = CoefficientTable(self.family, self.max_order, self.max_index)
        clone._entries = dict(self._entries)
        clone._entries[k, i] = as_rational(value)
        return clone.freeze()

    def __repr__(self) -> str:
        return (
            f"CoefficientTable(family={self.family!r}, max_order={self.max_order}, "
            f"max_index={self.max_index}, entries={len(self)})"
        )


@dataclass(frozen=True)
class EnergySeries:
    """Energy corrections ``E_{k_min}..E_K`` of one family.

    Oscillator: ``E(hbar) = sum_k E_k hbar**k`` starting at k = 1.
    Coulomb: ``E(hbar) = hbar**-2 * sum_k E_k hbar**(2k)`` starting at k = 0.
    """

    corrections: tuple[Fraction, ...]
    k_min: int
    family: str
    hbar: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "corrections", tuple(as_rational(c) for c in self.corrections))
        object.__setattr__(self, "hbar", as_rational(self.hbar))

    @property
    def max_order(self) -> int:
        return self.k_min + len(self.corrections) - 1

    def __getitem__(self, k: int) -> Fraction:
        """Correction of absolute order ``k``."""
        if not self.k_min <= k <= self.max_order:
            raise IndexError(f"order {k} outside {self.k_min}..{self.max_order}")
        return self.corrections[k - self.k_min]

    def __len__(self) -> int:
        return len(self.corrections)

    def orders(self) -> range:
        return range(self.k_min, self.max_order + 1)

    def partial_sum(self, K: int | None = None, hbar: RationalLike | None = None) -> Fraction:
        """Sum of the corrections up to and including order ``K``."""
        K = self.max_order if K is None else K
        if K > self.max_order:
            raise IndexError(f"series only known to order {self.max_order}")
        h = self.hbar if hbar is None else as_rational(hbar)
        total = Fraction(0)
        for k in range(self.k_min, K + 1):
            if self.family == OSCILLATOR:
                total += self[k] * h**k
            else:
                total += self[k] * h ** (2 * k)
        if self.family == COULOMB:
            total /= h**2
        return total

    def partial_sums(self, hbar: RationalLike | None = None) -> list[Fraction]:
        return [self.partial_sum(K, hbar) for K in self.orders()]
