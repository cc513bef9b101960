"""Braid words, exact equality, permutations and labeled braids.

A letter is a signed integer: ``k`` is the generator sigma_k and ``-k`` its
inverse, with ``1 <= k <= strands - 1``. Positive sigma_i means the strand
in position i crosses over the strand in position i+1.

Equality is decided exactly through the Dynnikov coordinates of the image
of the standard lamination, which is a faithful action of B_n on Z^(2n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import kernels


class WordFormatError(ValueError):
    """Raised for malformed braid word text or out-of-range letters."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise WordFormatError(f"strands must be >= 1, got {self.strands}")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise WordFormatError(f"letter {x} out of range for n={self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise WordFormatError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def shifted(self, offset: int, strands: int) -> BraidWord:
        return BraidWord(strands, tuple(x + offset if x > 0 else x - offset for x in self.letters))

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class LabeledBraid:
    """A braid word together with the generator labels of its source strands."""

    labels: tuple[str, ...]
    word: BraidWord

    @property
    def strands(self) -> int:
        return len(self.labels)

    def target_labels(self) -> tuple[str, ...]:
        return transport(self.labels, perm_of(self.word))


def letter_text(x: int) -> str:
    return f"s{x}" if x > 0 else f"S{-x}"


def letters_text(letters) -> str:
    return " ".join(letter_text(x) for x in letters)


def format_word(w: BraidWord) -> str:
    body = letters_text(w.letters)
    return f"n={w.strands} {body}".rstrip()


_LETTER = re.compile(r"([sS])(\d+)")


def parse_letters(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.replace(",", " ").split():
        pos = 0
        while pos < len(tok):
            m = _LETTER.match(tok, pos)
            if not m:
                raise WordFormatError(f"bad letter at {tok[pos:]!r}")
            k = int(m.group(2))
            if k == 0:
                raise WordFormatError("generator index must be positive")
            out.append(k if m.group(1) == "s" else -k)
            pos = m.end()
    return tuple(out)


def parse_word(text: str) -> BraidWord:
    """Parse ``n=<int>`` followed by letters ``s<k>`` / ``S<k>``."""
    text = text.strip()
    m = re.match(r"n\s*=\s*(\d+)", text)
    if not m:
        raise WordFormatError("word must start with n=<int>")
    return BraidWord(int(m.group(1)), parse_letters(text[m.end():]))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def dynnikov(w: BraidWord) -> tuple[int, ...]:
    """Dynnikov coordinates of the standard lamination acted on by ``w``."""
    start = [0, 1] * w.strands
    return tuple(kernels.dynnikov_apply(start, w.letters))


def are_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise WordFormatError("strand counts differ")
    return dynnikov(w1) == dynnikov(w2)


def is_trivial(w: BraidWord) -> bool:
    return dynnikov(w) == tuple([0, 1] * w.strands)


def perm_of(w: BraidWord) -> tuple[int, ...]:
    """Where each strand ends up: ``p[i]`` is the final 0-based position of
    the strand that starts at position ``i``. Letters act left to right."""
    at = list(range(w.strands))  # at[pos] = strand currently at pos
    for x in w.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    p = [0] * w.strands
    for pos, strand in enumerate(at):
        p[strand] = pos
    return tuple(p)


def transport(labels, perm) -> tuple[str, ...]:
    out = [""] * len(labels)
    for i, lab in enumerate(labels):
        out[perm[i]] = lab
    return tuple(out)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def labeled_equal(a: LabeledBraid, b: LabeledBraid) -> bool:
    return a.labels == b.labels and are_equal(a.word, b.word)
