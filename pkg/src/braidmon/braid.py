"""Artin braid words and the left Garside normal form.

A braid on ``n`` strands is stored as a word in the Artin generators, each
letter a pair ``(i, s)`` meaning sigma_i^s with ``1 <= i < n`` and ``s = +-1``.
Words compose left to right: ``a * b`` performs ``a`` first.

Equality of braids is decided by the left normal form
``Delta^inf * A_1 * ... * A_r`` whose canonical factors are permutation braids
stored as tuples ``p`` with ``p[j]`` the final position of the strand that
starts at position ``j`` (0-based).
"""

from __future__ import annotations

import dataclasses
import functools
import json
import re
from typing import Iterable, Sequence

Letter = tuple[int, int]
Perm = tuple[int, ...]


class BraidError(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutation helpers (0-based, p[j] = image of j)


def _compose(a: Perm, b: Perm) -> Perm:
    """Permutation of the braid ``a*b`` (a first)."""
    return tuple(b[x] for x in a)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, x in enumerate(p):
        inv[x] = j
    return tuple(inv)


def _transposition(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _longest(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def _starting_set(p: Perm) -> frozenset[int]:
    # sigma_i left-divides p iff strands at positions i-1, i cross
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def _finishing_set(p: Perm) -> frozenset[int]:
    q = _inverse(p)
    return frozenset(i for i in range(1, len(p)) if q[i - 1] > q[i])


def _perm_word(p: Perm) -> list[int]:
    """A positive Artin word (generator indices) of the permutation braid ``p``."""
    # peel left divisors off one at a time
    word = []
    p = tuple(p)
    while True:
        s = _starting_set(p)
        if not s:
            return word
        i = min(s)
        word.append(i)
        # p = sigma_i * p'  =>  p'[m] = p[sigma_i(m)]
        t = _transposition(len(p), i)
        p = tuple(p[t[m]] for m in range(len(p)))


def _inversions(p: Perm) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


# ---------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Permutation:
    """Element of S_n, 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    @classmethod
    def _from0(cls, p: Perm) -> Permutation:
        return cls(tuple(x + 1 for x in p))

    def __mul__(self, other: Permutation) -> Permutation:
        # self first, then other
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def is_identity(self) -> bool:
        return all(x == j + 1 for j, x in enumerate(self.images))

    def cycle_type(self) -> tuple[int, ...]:
        seen, lengths = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            length, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self.images[j - 1]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    strand_count: int
    infimum: int
    factors: tuple[Perm, ...]

    def to_word(self) -> BraidWord:
        n = self.strand_count
        delta = [(i, 1) for i in _perm_word(_longest(n))]
        letters: list[Letter] = []
        if self.infimum >= 0:
            letters.extend(delta * self.infimum)
        else:
            inv = [(i, -1) for i, _ in reversed(delta)]
            letters.extend(inv * (-self.infimum))
        for f in self.factors:
            letters.extend((i, 1) for i in _perm_word(f))
        return BraidWord(n, tuple(letters))

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_text(self) -> str:
        """``D^k . f1 . f2 ...`` with each simple factor written as a positive word."""
        parts = [f"D^{self.infimum}"] if self.infimum else []
        parts += [BraidWord(self.strand_count, tuple((i, 1) for i in _perm_word(f))).to_text()
                  for f in self.factors]
        return " . ".join(parts) or "1"

    def as_json(self) -> dict:
        return {"infimum": self.infimum, "factors": [[x + 1 for x in f] for f in self.factors]}


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Push generators from the front of ``b`` onto ``a`` until the pair is left-weighted."""
    n = len(a)
    while True:
        extra = _starting_set(b) - _finishing_set(a)
        if not extra:
            return a, b
        i = min(extra)
        t = _transposition(n, i)
        a = _compose(a, t)
        b = _compose(t, b)


def _normalize(n: int, infimum: int, factors: list[Perm]) -> GarsideNormalForm:
    delta = _longest(n)
    ident = tuple(range(n))
    factors = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = _left_weight(factors[j], factors[j + 1])
            if (a, b) != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = a, b
                changed = True
        # Delta factors migrate to the front; identities to the back
        while factors and factors[0] == delta:
            infimum += 1
            factors.pop(0)
        while factors and factors[-1] == ident:
            factors.pop()
            changed = True
        if ident in factors:
            factors = [f for f in factors if f != ident]
            changed = True
    return GarsideNormalForm(n, infimum, tuple(factors))


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        n = self.strand_count
        if n < 1:
            raise BraidError("strand count must be positive")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i < n:
                raise BraidError(f"generator index {i} out of range for B_{n}")
            if s not in (1, -1):
                raise BraidError(f"letter sign must be +-1, got {s}")
        object.__setattr__(self, "letters", letters)

    # -- construction -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def from_exponents(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BraidWord:
        """``[(1, 3), (2, -1)]`` -> sigma_1^3 sigma_2^-1."""
        letters = []
        for i, e in pairs:
            s = 1 if e > 0 else -1
            letters.extend([(i, s)] * abs(e))
        return cls(n, tuple(letters))

    @classmethod
    def parse(cls, n: int, text: str) -> BraidWord:
        """Parse ``"s1 s2^-1 s1^3"`` or the sigma rendering ``"σ₁σ₂⁻¹σ₁³"``."""
        text = _desuperscript(text.strip().translate(_FROM_SUB))
        if text in ("", "1", "e"):
            return cls(n, ())
        pairs = []
        pos = 0
        pattern = re.compile(r"\s*[sσ](\d+)(?:\^?\{?(-?\d+)\}?)?\s*")
        while pos < len(text):
            m = pattern.match(text, pos)
            if not m:
                raise BraidError(f"cannot parse braid word at {text[pos:]!r}")
            pairs.append((int(m.group(1)), int(m.group(2)) if m.group(2) else 1))
            pos = m.end()
        return cls.from_exponents(n, pairs)

    @classmethod
    def from_json(cls, n: int, data: str | Sequence) -> BraidWord:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(n, tuple((int(i), int(s)) for i, s in data))

    # -- algebra ------------------------------------------------------------

    def _check(self, other: BraidWord):
        if self.strand_count != other.strand_count:
            raise BraidError(
                f"strand count mismatch: {self.strand_count} vs {other.strand_count}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        return multiply(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strand_count, base.letters * abs(k)).free_reduce()

    def inverse(self) -> BraidWord:
        return BraidWord(self.strand_count, tuple((i, -s) for i, s in reversed(self.letters)))

    def free_reduce(self) -> BraidWord:
        stack: list[Letter] = []
        for i, s in self.letters:
            if stack and stack[-1] == (i, -s):
                stack.pop()
            else:
                stack.append((i, s))
        return BraidWord(self.strand_count, tuple(stack))

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)

    def permutation(self) -> Permutation:
        p = tuple(range(self.strand_count))
        for i, _ in self.letters:
            p = _compose(p, _transposition(self.strand_count, i))
        return Permutation._from0(p)

    def shift(self, offset: int, n: int | None = None) -> BraidWord:
        """Re-index generators by ``offset`` into ``B_n``."""
        n = self.strand_count + offset if n is None else n
        return BraidWord(n, tuple((i + offset, s) for i, s in self.letters))

    @functools.cached_property
    def normal_form(self) -> GarsideNormalForm:
        n = self.strand_count
        if n == 1:
            return GarsideNormalForm(1, 0, ())
        delta_inv_count = 0
        factors: list[Perm] = []
        w0 = _longest(n)
        for i, s in self.letters:
            t = _transposition(n, i)
            if s > 0:
                factors.append(t)
            else:
                # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pull Delta^-1 to the front
                factors = [_tau(f) for f in factors]
                delta_inv_count += 1
                factors.append(tuple(t[w0[j]] for j in range(n)))
        return _normalize(n, -delta_inv_count, factors)

    def equals(self, other: BraidWord) -> bool:
        self._check(other)
        return self.normal_form == other.normal_form

    def is_identity(self) -> bool:
        nf = self.normal_form
        return nf.infimum == 0 and not nf.factors

    def __len__(self) -> int:
        return len(self.letters)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def _runs(self) -> list[tuple[int, int]]:
        runs: list[list[int]] = []
        for i, s in self.letters:
            if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (s > 0):
                runs[-1][1] += s
            else:
                runs.append([i, s])
        return [(i, e) for i, e in runs]

    def to_text(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in self._runs())

    def to_unicode(self) -> str:
        if not self.letters:
            return "1"
        out = []
        for i, e in self._runs():
            out.append("σ" + str(i).translate(_SUB) + ("" if e == 1 else str(e).translate(_SUP)))
        return "".join(out)

    def to_json(self) -> list[list[int]]:
        return [[i, s] for i, s in self.letters]


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_FROM_SUP = str.maketrans("⁻⁰¹²³⁴⁵⁶⁷⁸⁹", "-0123456789")


def _desuperscript(text: str) -> str:
    return re.sub("[⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group().translate(_FROM_SUP), text)


def multiply(a: BraidWord, b: BraidWord) -> BraidWord:
    a._check(b)
    return BraidWord(a.strand_count, a.letters + b.letters).free_reduce()


def conjugate(a: BraidWord, by: BraidWord) -> BraidWord:
    """``by^-1 * a * by``."""
    a._check(by)
    return BraidWord(a.strand_count, by.inverse().letters + a.letters + by.letters).free_reduce()


def normal_form(a: BraidWord) -> GarsideNormalForm:
    return a.normal_form


def equal(a: BraidWord, b: BraidWord) -> bool:
    return a.equals(b)


def permutation_of(a: BraidWord) -> Permutation:
    return a.permutation()


def exponent_sum(a: BraidWord) -> int:
    return a.exponent_sum()


def full_twist(n: int) -> BraidWord:
    if n < 2:
        raise BraidError("full twist needs n >= 2")
    return BraidWord(n, tuple((i, 1) for i in range(1, n)) * n)


def half_twist(n: int) -> BraidWord:
    """The Garside element Delta."""
    return BraidWord(n, tuple((i, 1) for i in _perm_word(_longest(n))))


def sigma(n: int, i: int, e: int = 1) -> BraidWord:
    return BraidWord.from_exponents(n, [(i, e)])


def product(words: Iterable[BraidWord], n: int) -> BraidWord:
    letters: list[Letter] = []
    for w in words:
        if w.strand_count != n:
            raise BraidError("strand count mismatch in product")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters)).free_reduce()
