"""Signed permutations, type B roots, reduced words and reflection orders.

The generators of W(B_n) are ``s_0`` (negate the first position) and
``s_a`` for ``1 <= a < n`` (swap positions ``a`` and ``a + 1``). Words act by
right multiplication: ``word_to_perm((a_1, ..., a_l)) = s_{a_1} ... s_{a_l}``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cache, cached_property
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from shifted_balanced.config import settings
from shifted_balanced.errors import (
    CapExceededError,
    InvalidReflectionOrderError,
    NotReducedError,
    ParseError,
)

logger = logging.getLogger(__name__)


class RootKind(str, Enum):
    SHORT = "short"  # e_b
    MINUS = "minus"  # e_b - e_a
    PLUS = "plus"  # e_b + e_a
    DOUBLED = "doubled"  # 2e_b, label of an extra cell only


_ROOT_RE = re.compile(r"^\s*(2?)e_?(\d+)\s*(?:([+-])\s*e_?(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class Root:
    kind: RootKind
    b: int
    a: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", RootKind(self.kind))
        if self.kind in (RootKind.SHORT, RootKind.DOUBLED):
            if self.b < 1 or self.a != 0:
                raise ParseError(f"malformed root ({self.kind.value}, {self.b}, {self.a})")
        elif not self.b > self.a >= 1:
            raise ParseError(f"malformed root ({self.kind.value}, {self.b}, {self.a})")

    @classmethod
    def short(cls, b: int) -> Root:
        return cls(RootKind.SHORT, b)

    @classmethod
    def minus(cls, b: int, a: int) -> Root:
        return cls(RootKind.MINUS, b, a)

    @classmethod
    def plus(cls, b: int, a: int) -> Root:
        return cls(RootKind.PLUS, b, a)

    @classmethod
    def doubled(cls, b: int) -> Root:
        return cls(RootKind.DOUBLED, b)

    @classmethod
    def parse(cls, text: str) -> Root:
        """Accept ``e3``, ``e_3-e_1``, ``e3+e2``, ``2e2`` (and the unicode minus)."""
        match = _ROOT_RE.match(text.replace("−", "-"))
        if not match:
            raise ParseError(f"cannot parse root {text!r}")
        doubled, b, sign, a = match.groups()
        b = int(b)
        if doubled:
            if sign:
                raise ParseError(f"cannot parse root {text!r}")
            return cls.doubled(b)
        if not sign:
            return cls.short(b)
        a = int(a)
        try:
            return cls.minus(b, a) if sign == "-" else cls.plus(b, a)
        except ParseError as exc:
            raise ParseError(f"cannot parse root {text!r}: need a larger index first") from exc

    def vector(self) -> dict[int, int]:
        if self.kind is RootKind.SHORT:
            return {self.b: 1}
        if self.kind is RootKind.DOUBLED:
            return {self.b: 2}
        return {self.b: 1, self.a: -1 if self.kind is RootKind.MINUS else 1}

    @classmethod
    def from_vector(cls, vector: Mapping[int, int]) -> tuple[Root, int] | None:
        """Return ``(root, sign)`` with ``vector == sign * root``, or None."""
        support = sorted(((k, c) for k, c in vector.items() if c), reverse=True)
        if len(support) == 1:
            (k, c), = support
            if abs(c) == 1:
                return cls.short(k), c
            if abs(c) == 2:
                return cls.doubled(k), c // 2
            return None
        if len(support) == 2:
            (hi, ch), (lo, cl) = support
            if abs(ch) != 1 or abs(cl) != 1:
                return None
            kind = RootKind.MINUS if cl == -ch else RootKind.PLUS
            return cls(kind, hi, lo), ch
        return None

    @property
    def is_type_b(self) -> bool:
        return self.kind is not RootKind.DOUBLED

    def __str__(self) -> str:
        if self.kind is RootKind.SHORT:
            return f"e{self.b}"
        if self.kind is RootKind.DOUBLED:
            return f"2e{self.b}"
        sign = "-" if self.kind is RootKind.MINUS else "+"
        return f"e{self.b}{sign}e{self.a}"


def unit(x: int) -> dict[int, int]:
    """``e_x`` for a signed index: ``e_{-x} = -e_x`` and ``e_0 = 0``."""
    if x == 0:
        return {}
    return {abs(x): 1 if x > 0 else -1}


def add_vectors(*vectors: Mapping[int, int]) -> dict[int, int]:
    total: dict[int, int] = {}
    for vector in vectors:
        for k, c in vector.items():
            total[k] = total.get(k, 0) + c
    return {k: c for k, c in total.items() if c}


def negate(vector: Mapping[int, int]) -> dict[int, int]:
    return {k: -c for k, c in vector.items()}


def signed_difference(x: int, y: int) -> tuple[Root, int] | None:
    """``e_x - e_y`` for signed indices, as ``(root, sign)``."""
    return Root.from_vector(add_vectors(unit(x), negate(unit(y))))


def positive_roots(n: int) -> list[Root]:
    roots = []
    for b in range(1, n + 1):
        roots.append(Root.short(b))
        for a in range(1, b):
            roots.append(Root.minus(b, a))
            roots.append(Root.plus(b, a))
    return roots


@dataclass(frozen=True)
class SignedPermutation:
    """Window notation ``[w(1), ..., w(n)]`` with ``w(-i) = -w(i)``."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ParseError(f"{list(window)} is not a signed permutation")

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        tokens = text.replace("−", "-").replace(",", " ").split()
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise ParseError(f"cannot parse signed permutation {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.n:
            raise ParseError(f"index {i} is outside 1..{self.n}")
        value = self.window[abs(i) - 1]
        return value if i > 0 else -value

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.window)

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for pos, value in enumerate(self.window, 1):
            inv[abs(value) - 1] = pos if value > 0 else -pos
        return SignedPermutation(tuple(inv))

    @cached_property
    def inversions(self) -> frozenset[Root]:
        return _inversions(self.window)

    @property
    def length(self) -> int:
        return len(self.inversions)


def apply(w: SignedPermutation, i: int) -> int:
    return w(i)


def compose(w: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """``(w ∘ v)(i) = w(v(i))``."""
    if w.n != v.n:
        raise ParseError(f"cannot compose permutations of ranks {w.n} and {v.n}")
    return SignedPermutation(tuple(w(x) for x in v.window))


def inverse(w: SignedPermutation) -> SignedPermutation:
    return w.inverse()


def simple_reflection(n: int, a: int) -> SignedPermutation:
    if not 0 <= a < n:
        raise ParseError(f"s_{a} is not a generator of B_{n}")
    window = list(range(1, n + 1))
    _act_on_positions(window, a)
    return SignedPermutation(tuple(window))


def _act_on_positions(window: list[int], a: int) -> None:
    if a == 0:
        window[0] = -window[0]
    else:
        window[a - 1], window[a] = window[a], window[a - 1]


@cache
def _inversions(window: tuple[int, ...]) -> frozenset[Root]:
    n = len(window)
    inv = [0] * (n + 1)
    for pos, value in enumerate(window, 1):
        inv[abs(value)] = pos if value > 0 else -pos
    roots = set()
    for b in range(1, n + 1):
        if inv[b] < 0:
            roots.add(Root.short(b))
        for a in range(1, b):
            if inv[b] < inv[a]:
                roots.add(Root.minus(b, a))
            if inv[b] < -inv[a]:
                roots.add(Root.plus(b, a))
    return frozenset(roots)


def inversion_set(w: SignedPermutation) -> frozenset[Root]:
    """Positive roots α with w⁻¹(α) negative."""
    return w.inversions


def length(w: SignedPermutation) -> int:
    return w.length


def all_signed_permutations(n: int) -> Iterator[SignedPermutation]:
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise ParseError(f"rank must be positive, got {self.n}")
        bad = [x for x in letters if not 0 <= x < self.n]
        if bad:
            raise ParseError(f"letters {bad} are outside 0..{self.n - 1}")

    @classmethod
    def parse(cls, text: str, n: int) -> Word:
        """Blank or comma separated letters; a digit string when ``n <= 10``."""
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1 and tokens[0].isdigit() and n <= 10:
            tokens = list(tokens[0])
        try:
            return cls(tuple(int(t) for t in tokens), n)
        except ValueError as exc:
            raise ParseError(f"cannot parse word {text!r}") from exc

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        if self.n <= 10:
            return "".join(str(x) for x in self.letters)
        return " ".join(str(x) for x in self.letters)

    def suffix(self, k: int) -> tuple[int, ...]:
        return self.letters[len(self.letters) - k:] if k else ()


def word_to_perm(word: Word) -> SignedPermutation:
    window = list(range(1, word.n + 1))
    for a in word.letters:
        _act_on_positions(window, a)
    return SignedPermutation(tuple(window))


def is_reduced(word: Word) -> bool:
    return word_to_perm(word).length == len(word)


def _left_descents(window: tuple[int, ...]) -> list[int]:
    n = len(window)
    inv = [0] * (n + 1)
    for pos, value in enumerate(window, 1):
        inv[abs(value)] = pos if value > 0 else -pos
    descents = [0] if inv[1] < 0 else []
    descents.extend(a for a in range(1, n) if inv[a] > inv[a + 1])
    return descents


def _left_multiply(window: tuple[int, ...], a: int) -> tuple[int, ...]:
    """``s_a ∘ w``: act on values."""

    def move(x: int) -> int:
        sign = 1 if x > 0 else -1
        value = abs(x)
        if a == 0:
            return -x if value == 1 else x
        if value == a:
            return sign * (a + 1)
        if value == a + 1:
            return sign * a
        return x

    return tuple(move(x) for x in window)


def _reduced_words(window: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    descents = _left_descents(window)
    if not descents:
        yield ()
        return
    for a in descents:
        for rest in _reduced_words(_left_multiply(window, a)):
            yield (a, *rest)


def enumerate_reduced_words(w: SignedPermutation, cap: int | None = None) -> Iterator[Word]:
    """Red(w) in lexicographic order."""
    cap = settings.word_cap if cap is None else cap
    if w.length > cap:
        raise CapExceededError("reduced-word enumeration", w.length, cap)
    for letters in _reduced_words(w.window):
        yield Word(letters, w.n)


@cache
def _count_reduced(window: tuple[int, ...]) -> int:
    descents = _left_descents(window)
    if not descents:
        return 1
    return sum(_count_reduced(_left_multiply(window, a)) for a in descents)


def count_reduced_words(w: SignedPermutation) -> int:
    return _count_reduced(w.window)


@dataclass(frozen=True)
class ReflectionOrder:
    roots: tuple[Root, ...]

    def __post_init__(self) -> None:
        roots = tuple(self.roots)
        object.__setattr__(self, "roots", roots)
        if len(set(roots)) != len(roots):
            raise InvalidReflectionOrderError("a reflection order lists each root once")
        if any(not root.is_type_b for root in roots):
            raise InvalidReflectionOrderError("2e_k is not a root of type B")

    @classmethod
    def parse(cls, text: str) -> ReflectionOrder:
        return cls(tuple(Root.parse(t.strip()) for t in text.split(",") if t.strip()))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __str__(self) -> str:
        return ", ".join(str(root) for root in self.roots)


def reflection_order(word: Word) -> ReflectionOrder:
    """γ_k = s_{a_1} ... s_{a_{k-1}}(α_{a_k}), positive for every k iff the word is reduced."""
    window = list(range(1, word.n + 1))
    roots = []
    for step, a in enumerate(word.letters, 1):
        if a == 0:
            vector = unit(window[0])
        else:
            vector = add_vectors(unit(window[a]), negate(unit(window[a - 1])))
        found = Root.from_vector(vector)
        if found is None or found[1] < 0:
            raise NotReducedError(f"word {word} is not reduced (letter {step})")
        roots.append(found[0])
        _act_on_positions(window, a)
    return ReflectionOrder(tuple(roots))


def reflection_order_to_word(order: ReflectionOrder | Sequence[Root], n: int | None = None) -> Word:
    roots = tuple(order)
    if n is None:
        n = max((root.b for root in roots), default=1)
    window = list(range(1, n + 1))
    letters = []
    for step, root in enumerate(roots, 1):
        if not root.is_type_b:
            raise InvalidReflectionOrderError(f"step {step}: {root} is not a root of type B")
        if root.b > n:
            raise ParseError(f"root {root} does not live in rank {n}")
        inv = [0] * (n + 1)
        for pos, value in enumerate(window, 1):
            inv[abs(value)] = pos if value > 0 else -pos
        image = add_vectors(*(
            {inv[k]: c} if inv[k] > 0 else {-inv[k]: -c} for k, c in root.vector().items()
        ))
        found = Root.from_vector(image)
        letter = None
        if found is not None and found[1] > 0:
            simple, _ = found
            if simple.kind is RootKind.SHORT and simple.b == 1:
                letter = 0
            elif simple.kind is RootKind.MINUS and simple.b == simple.a + 1:
                letter = simple.a
        if letter is None:
            raise InvalidReflectionOrderError(
                f"step {step}: the prefix does not send {root} to a simple root"
            )
        letters.append(letter)
        _act_on_positions(window, letter)
    return Word(tuple(letters), n)


def is_valid_reflection_order(order: ReflectionOrder | Sequence[Root], w: SignedPermutation) -> bool:
    """Check the ordering condition on every α + β = γ inside Inv(w).

    Raises InvalidReflectionOrderError when the listed roots are not Inv(w).
    """
    roots = tuple(order)
    inversions = w.inversions
    if len(roots) != len(inversions) or set(roots) != inversions:
        raise InvalidReflectionOrderError(f"the listed roots are not the inversion set of {w}")
    position = {root: k for k, root in enumerate(roots)}
    candidates = positive_roots(w.n)
    for alpha in inversions:
        for beta in candidates:
            found = Root.from_vector(add_vectors(alpha.vector(), beta.vector()))
            if found is None:
                continue
            total, _ = found
            if not total.is_type_b or total not in inversions:
                continue
            if beta in inversions:
                lo, hi = sorted((position[alpha], position[beta]))
                if not lo < position[total] < hi:
                    return False
            elif position[alpha] > position[total]:
                return False
    return True


def pattern_embeds(w: SignedPermutation, pattern: SignedPermutation) -> bool:
    """A subsequence of w's window with the pattern's signs and relative order of absolute values."""
    m = pattern.n
    target_signs = [x > 0 for x in pattern.window]
    target_order = sorted(range(m), key=lambda k: abs(pattern.window[k]))
    for positions in combinations(range(w.n), m):
        sub = [w.window[p] for p in positions]
        if [x > 0 for x in sub] != target_signs:
            continue
        if sorted(range(m), key=lambda k: abs(sub[k])) == target_order:
            return True
    return False


def _patterns(windows: Iterable[Sequence[int]]) -> tuple[SignedPermutation, ...]:
    return tuple(SignedPermutation(tuple(window)) for window in windows)


VEXILLARY_PATTERNS: tuple[SignedPermutation, ...] = _patterns([
    (-3, 2, -1), (-3, 2, 1), (3, 2, -1), (3, 2, 1), (3, -1, 2), (-2, 3, 1), (-1, 3, 2),
    (-4, -1, -2, 3), (-4, 1, -2, 3), (-3, -4, -1, -2), (-3, -4, 1, -2),
    (3, -4, -1, -2), (3, -4, 1, -2), (3, 1, 4, 2), (-2, -3, 4, -1),
    (2, 4, 1, 3), (2, -3, 4, -1), (2, 1, 4, 3),
])


def is_vexillary(w: SignedPermutation) -> bool:
    return not any(pattern_embeds(w, pattern) for pattern in VEXILLARY_PATTERNS)
