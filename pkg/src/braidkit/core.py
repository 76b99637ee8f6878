"""Exact arithmetic in the braid group B_n via left Garside normal forms.

Values come in three layers:

* :class:`SimpleElement` -- a permutation braid, i.e. a positive braid in
  which every pair of strands crosses at most once.  These are the letters
  of normal forms; the identity and the half twist ``delta`` are the bottom
  and top of their prefix lattice.
* :class:`BraidWord` -- a word in the Artin generators, written as signed
  integers (``+i`` for the i-th generator, ``-i`` for its inverse).
* :class:`CanonicalBraid` -- the left normal form ``delta^p x_1 ... x_l``
  with every adjacent factor pair left weighted.  This is the universal
  value type: two braids are equal in the group iff their canonical forms
  compare equal componentwise.

All values are immutable and all operations are pure functions, so they are
safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel


@dataclass(frozen=True, slots=True)
class SimpleElement:
    """A permutation braid on ``n`` strands.

    ``perm[i]`` is the 0-indexed final position of the strand starting at
    position ``i``; the identity permutation is the trivial braid and the
    order-reversing permutation is the half twist.
    """

    n: int
    perm: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a braid group needs at least 2 strands")
        if len(self.perm) != self.n or sorted(self.perm) != list(range(self.n)):
            raise ValueError(f"{self.perm!r} is not a permutation of 0..{self.n - 1}")

    @classmethod
    def identity(cls, n: int) -> SimpleElement:
        return cls(n, kernel.identity(n))

    @classmethod
    def delta(cls, n: int) -> SimpleElement:
        """The Garside element: every pair of strands crosses exactly once."""
        return cls(n, kernel.delta(n))

    @classmethod
    def atom(cls, i: int, n: int) -> SimpleElement:
        """The i-th Artin generator (1-indexed), crossing strands i and i+1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for {n} strands")
        perm = list(range(n))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls(n, tuple(perm))

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[int]) -> SimpleElement:
        """Product of positive generators, which must form a permutation braid."""
        perm = kernel.identity(n)
        count = 0
        for i in letters:
            perm = kernel.compose(perm, cls.atom(i, n).perm)
            count += 1
        if kernel.inv_count(perm) != count:
            raise ValueError(f"letters {letters!r} do not spell a simple braid")
        return cls(n, perm)

    @property
    def length(self) -> int:
        """Number of crossings (inversions); between 0 and n(n-1)/2."""
        return kernel.inv_count(self.perm)

    def is_identity(self) -> bool:
        return self.perm == kernel.identity(self.n)

    def is_delta(self) -> bool:
        return self.perm == kernel.delta(self.n)

    def tau(self) -> SimpleElement:
        """Conjugate by the half twist."""
        return SimpleElement(self.n, kernel.tau(self.perm))

    def complement(self) -> SimpleElement:
        """The unique simple ``t`` with ``self * t = delta``."""
        return SimpleElement(self.n, kernel.right_complement(self.perm))

    def meet(self, other: SimpleElement) -> SimpleElement:
        """Greatest common prefix in the lattice of simple elements."""
        self._check_same_group(other)
        return SimpleElement(self.n, kernel.meet(self.perm, other.perm))

    def is_prefix_of(self, other: SimpleElement) -> bool:
        self._check_same_group(other)
        return kernel.is_prefix(self.perm, other.perm)

    def compose(self, other: SimpleElement) -> SimpleElement:
        """Permutation product; only a braid product when the lengths add."""
        self._check_same_group(other)
        return SimpleElement(self.n, kernel.compose(self.perm, other.perm))

    def canonical_letters(self) -> tuple[int, ...]:
        """Deterministic positive word: repeatedly peel the smallest atom prefix."""
        perm = list(self.perm)
        out = []
        while True:
            for i in range(self.n - 1):
                if perm[i] > perm[i + 1]:
                    out.append(i + 1)
                    perm[i], perm[i + 1] = perm[i + 1], perm[i]
                    break
            else:
                return tuple(out)

    def braid(self) -> CanonicalBraid:
        if self.is_identity():
            return CanonicalBraid(self.n, 0, ())
        if self.is_delta():
            return CanonicalBraid(self.n, 1, ())
        return CanonicalBraid(self.n, 0, (self.perm,))

    def __str__(self) -> str:
        if self.is_identity():
            return "1"
        return " ".join(str(i) for i in self.canonical_letters())

    def _check_same_group(self, other: SimpleElement) -> None:
        if self.n != other.n:
            raise ValueError(f"mixed strand counts {self.n} and {other.n}")


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the Artin generators, as signed 1-indexed letters."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a braid group needs at least 2 strands")
        for e in self.letters:
            if not 1 <= abs(e) <= self.n - 1:
                raise ValueError(f"letter {e} out of range for {self.n} strands")

    @classmethod
    def parse(cls, n: int, text: str) -> BraidWord:
        """Parse whitespace-separated signed integers, e.g. ``"1 2 -1"``."""
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ValueError(f"malformed braid word {text!r}") from exc
        return cls(n, letters)

    def text(self) -> str:
        return " ".join(str(e) for e in self.letters)

    def braid(self) -> CanonicalBraid:
        return normalize(self)

    def __str__(self) -> str:
        return self.text()


def _collect(items: Sequence[tuple[int, tuple[int, ...]]], n: int) -> tuple[int, tuple]:
    """Normal form of a product of terms ``delta^d * u``.

    Half-twist powers commute to the front by twisting every factor they
    pass with tau; tau has order two, so only the parity of the power
    accumulated to the right of each factor matters.
    """
    acc = 0
    out = []
    for d, u in reversed(items):
        out.append(kernel.tau(u) if acc & 1 else u)
        acc += d
    out.reverse()
    p, core = kernel.normalize_factors(out, n)
    return acc + p, tuple(core)


@dataclass(frozen=True, slots=True)
class CanonicalBraid:
    """A braid in left normal form ``delta^power x_1 ... x_l``.

    ``factors`` holds the permutations of the ``x_i``; each is neither
    trivial nor the half twist and every adjacent pair is left weighted.
    Construct braids through :func:`normalize`, the ``SimpleElement`` /
    ``BraidWord`` conversions, or group operations -- not by hand.
    """

    n: int
    power: int
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert self.n >= 2
        assert kernel.is_normal(self.factors, self.n), \
            f"factors {self.factors} are not a left normal form"

    @classmethod
    def identity(cls, n: int) -> CanonicalBraid:
        return cls(n, 0, ())

    @classmethod
    def delta_power(cls, n: int, p: int) -> CanonicalBraid:
        return cls(n, p, ())

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[SimpleElement]) -> CanonicalBraid:
        p, core = kernel.normalize_factors([f.perm for f in factors], n)
        return cls(n, p, tuple(core))

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def factor(self, i: int) -> SimpleElement:
        return SimpleElement(self.n, self.factors[i])

    def simple_factors(self) -> tuple[SimpleElement, ...]:
        return tuple(SimpleElement(self.n, f) for f in self.factors)

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def is_positive(self) -> bool:
        """Whether the braid lies in the positive monoid (infimum >= 0)."""
        return self.power >= 0

    def __mul__(self, other: CanonicalBraid) -> CanonicalBraid:
        if not isinstance(other, CanonicalBraid):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed strand counts {self.n} and {other.n}")
        mine = self.factors
        if other.power & 1:
            mine = tuple(kernel.tau(f) for f in mine)
        p, core = kernel.normalize_factors(list(mine) + list(other.factors), self.n)
        return CanonicalBraid(self.n, self.power + other.power + p, tuple(core))

    def inverse(self) -> CanonicalBraid:
        items = [(-1, kernel.left_complement(f)) for f in reversed(self.factors)]
        items.append((-self.power, kernel.identity(self.n)))
        p, core = _collect(items, self.n)
        return CanonicalBraid(self.n, p, core)

    def __pow__(self, exp: int) -> CanonicalBraid:
        acc = CanonicalBraid.identity(self.n)
        if exp == 0:
            return acc
        base = self if exp > 0 else self.inverse()
        e = abs(exp)
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            base = base * base
        return acc

    def conjugate_by(self, g: CanonicalBraid) -> CanonicalBraid:
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def tau(self) -> CanonicalBraid:
        """Conjugate by the half twist; acts factorwise, no renormalization."""
        return CanonicalBraid(
            self.n, self.power, tuple(kernel.tau(f) for f in self.factors)
        )

    def exponent_sum(self) -> int:
        """Image under the abelianization homomorphism to the integers."""
        half = self.n * (self.n - 1) // 2
        return self.power * half + sum(kernel.inv_count(f) for f in self.factors)

    def prefix_of(self, other: CanonicalBraid) -> bool:
        """Whether ``self^-1 * other`` is positive."""
        return (self.inverse() * other).is_positive()

    def as_simple(self) -> SimpleElement | None:
        """This braid as a simple element, or None if it is not one."""
        if self.power == 0 and not self.factors:
            return SimpleElement.identity(self.n)
        if self.power == 1 and not self.factors:
            return SimpleElement.delta(self.n)
        if self.power == 0 and len(self.factors) == 1:
            return SimpleElement(self.n, self.factors[0])
        return None

    def __str__(self) -> str:
        return render_nf(self)

    def __repr__(self) -> str:
        return f"CanonicalBraid({self.n}, {render_nf(self)!r})"


def normalize(word: BraidWord) -> CanonicalBraid:
    """Left normal form of a word in the Artin generators.

    A negative letter is rewritten as ``delta^-1`` times the left complement
    of its generator before the half-twist powers are pushed to the front.
    """
    items = []
    for e in word.letters:
        perm = SimpleElement.atom(abs(e), word.n).perm
        if e > 0:
            items.append((0, perm))
        else:
            items.append((-1, kernel.left_complement(perm)))
    p, core = _collect(items, word.n)
    return CanonicalBraid(word.n, p, core)


def braid_from_text(n: int, text: str) -> CanonicalBraid:
    return normalize(BraidWord.parse(n, text))


_NF_HEAD = re.compile(r"^D\^(-?\d+)$")


def render_nf(x: CanonicalBraid) -> str:
    """Render ``delta^p x_1 ... x_l`` as ``"D^p | w1 | ... | wl"``.

    Each ``wi`` is the canonical positive word of the factor; a braid of
    canonical length zero renders as just ``"D^p"``.
    """
    head = f"D^{x.power}"
    if not x.factors:
        return head
    words = (str(SimpleElement(x.n, f)) for f in x.factors)
    return " | ".join((head, *words))


def parse_nf(n: int, text: str) -> CanonicalBraid:
    """Parse the :func:`render_nf` format back into a braid.

    The factor words are multiplied out and renormalized, so any braid whose
    rendering round-trips compares equal even if the input words were not in
    canonical spelling.
    """
    parts = [part.strip() for part in text.split("|")]
    m = _NF_HEAD.match(parts[0])
    if m is None:
        raise ValueError(f"malformed normal form text {text!r}")
    braid = CanonicalBraid.delta_power(n, int(m.group(1)))
    for part in parts[1:]:
        word = BraidWord.parse(n, part)
        if any(e < 0 for e in word.letters):
            raise ValueError(f"factor word {part!r} must be positive")
        braid = braid * normalize(word)
    return braid
