"""Words over symmetric alphabets, reduced free-group words, and quasi-lengths.

Two word types live here.  ``MonoidWord`` is a raw letter sequence (never
reduced); palindromicity is a property of the letter sequence as written,
so it belongs to this type.  ``FreeWord`` is the canonical reduced form of
a free-group element, stored as syllables ``(generator, exponent)`` with
adjacent syllables on distinct generators.  The quasi-length ``ql`` is a
syllable-level sum and is only well defined on the reduced form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Alphabet",
    "MonoidWord",
    "FreeWord",
    "free_alphabet",
    "reduce_word",
    "is_word_palindrome",
    "tr",
    "ql",
    "free_multiply",
    "free_invert",
    "free_commutator",
    "parse_monoid_word",
    "format_monoid_word",
    "parse_free_word",
    "format_free_word",
]

# index of tr(m) by the mathematical residue m mod 3 (0, 1, 2 -> 0, 1, -1)
_TR_BY_RESIDUE = (0, 1, -1)


def tr(m: int) -> int:
    """Ternary residue sign: 0, 1 or -1 according to m mod 3."""
    return _TR_BY_RESIDUE[m % 3]


@dataclass(frozen=True)
class Alphabet:
    """Symmetric alphabet: a set of letters closed under a formal inversion.

    ``involution`` pairs each letter with its inverse letter; a letter may
    be its own inverse.
    """

    letters: tuple[str, ...]
    involution: dict[str, str]

    def __post_init__(self) -> None:
        letters = set(self.letters)
        if len(letters) != len(self.letters):
            raise ValueError("duplicate letters in alphabet")
        if set(self.involution) != letters:
            raise ValueError("involution domain must be the letter set")
        for a, b in self.involution.items():
            if b not in letters:
                raise ValueError(f"inverse letter {b!r} missing from alphabet")
            if self.involution[b] != a:
                raise ValueError(f"involution is not self-inverse at {a!r}")

    def inverse_letter(self, a: str) -> str:
        return self.involution[a]

    def __contains__(self, a: str) -> bool:
        return a in self.involution


def free_alphabet(rank: int) -> Alphabet:
    """The alphabet x1, x1^-1, ..., x<rank>, x<rank>^-1."""
    if rank < 1:
        raise ValueError("rank must be positive")
    letters: list[str] = []
    involution: dict[str, str] = {}
    for i in range(1, rank + 1):
        pos, neg = f"x{i}", f"x{i}^-1"
        letters += [pos, neg]
        involution[pos] = neg
        involution[neg] = pos
    return Alphabet(tuple(letters), involution)


@dataclass(frozen=True)
class MonoidWord:
    """A finite letter sequence; not reduced, compared letter by letter."""

    letters: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "MonoidWord") -> "MonoidWord":
        return MonoidWord(self.letters + other.letters)

    def reverse(self) -> "MonoidWord":
        return MonoidWord(self.letters[::-1])


def is_word_palindrome(w: MonoidWord) -> bool:
    """True iff the letter sequence equals its own reversal."""
    return w.letters == w.letters[::-1]


# letter of a free-group alphabet: x<i> or x<i>^-1, with x/y aliases for rank 2
_FREE_LETTER_RE = re.compile(r"^x(\d+)(\^-1)?$")
_LETTER_ALIASES = {"x": "x1", "y": "x2", "x^-1": "x1^-1", "y^-1": "x2^-1"}


def _letter_to_syllable(letter: str) -> tuple[int, int]:
    letter = _LETTER_ALIASES.get(letter, letter)
    m = _FREE_LETTER_RE.match(letter)
    if m is None:
        raise ValueError(f"not a free-group letter: {letter!r}")
    return int(m.group(1)), -1 if m.group(2) else 1


def _push_syllable(stack: list[list[int]], gen: int, exp: int) -> None:
    # merge with the top of the stack, dropping annihilated syllables
    if exp == 0:
        return
    if stack and stack[-1][0] == gen:
        stack[-1][1] += exp
        if stack[-1][1] == 0:
            stack.pop()
    else:
        stack.append([gen, exp])


@dataclass(frozen=True)
class FreeWord:
    """Reduced word of a free group of given rank, in syllable normal form.

    Syllables are ``(generator index in 1..rank, nonzero exponent)`` with
    adjacent syllables on distinct generators; this normal form is unique,
    so equality of values is equality of group elements.
    """

    rank: int
    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        prev = 0
        for gen, exp in self.syllables:
            if not 1 <= gen <= self.rank:
                raise ValueError(f"generator index {gen} out of range 1..{self.rank}")
            if exp == 0:
                raise ValueError("zero exponent syllable")
            if gen == prev:
                raise ValueError("adjacent syllables share a generator (not reduced)")
            prev = gen

    @staticmethod
    def identity(rank: int) -> "FreeWord":
        return FreeWord(rank, ())

    @staticmethod
    def generator(rank: int, gen: int, exp: int = 1) -> "FreeWord":
        return FreeWord(rank, ((gen, exp),) if exp else ())

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        stack = [list(s) for s in self.syllables]
        for gen, exp in other.syllables:
            _push_syllable(stack, gen, exp)
        return FreeWord(self.rank, tuple((g, e) for g, e in stack))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.syllables)))

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.syllables if g == gen)

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def to_letters(self, names: tuple[str, ...] | None = None) -> MonoidWord:
        """Spell the word out letter by letter.

        ``names`` optionally renames generator i to ``names[i-1]`` (the
        inverse letter gets a ``^-1`` suffix); defaults to x1, x2, ...
        """
        letters: list[str] = []
        for gen, exp in self.syllables:
            base = names[gen - 1] if names else f"x{gen}"
            letter = base if exp > 0 else base + "^-1"
            letters.extend([letter] * abs(exp))
        return MonoidWord(tuple(letters))


def reduce_word(w: MonoidWord, rank: int | None = None) -> FreeWord:
    """Canonical reduced form of a word over a free-group alphabet.

    Idempotent in the sense that reducing the spelled-out form of the
    result gives the result back; the empty word maps to the identity.
    """
    stack: list[list[int]] = []
    max_gen = 1
    for letter in w.letters:
        gen, exp = _letter_to_syllable(letter)
        max_gen = max(max_gen, gen)
        _push_syllable(stack, gen, exp)
    if rank is None:
        rank = max_gen
    return FreeWord(rank, tuple((g, e) for g, e in stack))


def ql(w: FreeWord | MonoidWord) -> int:
    """Quasi-length: the sum of tr over the syllable exponents of the
    reduced form.  Unreduced input is reduced first."""
    if isinstance(w, MonoidWord):
        w = reduce_word(w)
    return sum(tr(exp) for _, exp in w.syllables)


def free_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


def free_invert(u: FreeWord) -> FreeWord:
    return u.inverse()


def free_commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u^-1 v^-1 u v."""
    return u.inverse() * v.inverse() * u * v


# ---------------------------------------------------------------------------
# plain-text formats
#
# MonoidWord: letters separated by spaces, inverse letters carry a ^-1
# suffix; the empty word prints as "1".
# FreeWord: syllables like x1^-3, exponent suffix omitted when it is 1;
# "[u,v]" is accepted on input as commutator shorthand.
# ---------------------------------------------------------------------------


def format_monoid_word(w: MonoidWord) -> str:
    return " ".join(w.letters) if w.letters else "1"


def parse_monoid_word(text: str, alphabet: Alphabet | None = None) -> MonoidWord:
    text = text.strip()
    if text in ("", "1"):
        return MonoidWord()
    letters = tuple(text.split())
    if alphabet is not None:
        for a in letters:
            if a not in alphabet:
                raise ValueError(f"letter {a!r} not in alphabet")
    return MonoidWord(letters)


def format_free_word(w: FreeWord) -> str:
    if not w.syllables:
        return "1"
    return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in w.syllables)


_SYLLABLE_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def _split_commutator(text: str) -> tuple[str, str]:
    # text is "[...]" with the comma at bracket depth 1
    depth = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 1:
            return text[1:i], text[i + 1 : -1]
    raise ValueError(f"malformed commutator expression: {text!r}")


def parse_free_word(text: str, rank: int | None = None) -> FreeWord:
    """Parse the syllable text format; "1" is the identity.

    Accepts x/y as aliases for x1/x2 and "[u,v]" commutator atoms, e.g.
    "[x,y] x1^2".
    """
    text = text.strip()
    atoms: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {text!r}")
        elif ch == " " and depth == 0:
            if start < i:
                atoms.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ValueError(f"unbalanced brackets in {text!r}")
    if start < len(text):
        atoms.append(text[start:])

    def parse_atom(atom: str) -> FreeWord:
        if atom == "1":
            return FreeWord.identity(rank or 1)
        if atom.startswith("["):
            if not atom.endswith("]"):
                raise ValueError(f"malformed commutator expression: {atom!r}")
            left, right = _split_commutator(atom)
            u, v = parse_atom(left.strip()), parse_atom(right.strip())
            r0 = max(u.rank, v.rank, rank or 1)
            return free_commutator(FreeWord(r0, u.syllables), FreeWord(r0, v.syllables))
        atom = _LETTER_ALIASES.get(atom, atom)
        m = _SYLLABLE_RE.match(atom)
        if m is None:
            raise ValueError(f"not a syllable: {atom!r}")
        gen = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        return FreeWord(max(gen, rank or 1), ((gen, exp),) if exp else ())

    if not atoms:
        return FreeWord.identity(rank or 1)
    parsed = [parse_atom(a) for a in atoms]
    r = rank or max(w.rank for w in parsed)
    out = FreeWord.identity(r)
    for w in parsed:
        out = out * FreeWord(r, w.syllables)
    return out
