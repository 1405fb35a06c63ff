"""Text normalization, sentence splitting and tokenization for Devanagari corpora.

All downstream counting and lexicon lookup assumes NFC-normalized text, so
normalization happens once, up front, and everything else operates on its
output.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

DEVANAGARI_START = 0x0900
DEVANAGARI_END = 0x097F
DANDA = "।"
DOUBLE_DANDA = "॥"
ZWNJ = "‌"
ZWJ = "‍"

# Maximal word runs: Latin letters, ASCII digits, the Devanagari block minus
# the danda terminators, plus ZWJ/ZWNJ which may join conjunct forms.
_WORD_RUN = re.compile(
    r"[0-9A-Za-zऀ-ॣ०-ॿ‌‍]+"
)
_TOKEN = re.compile(
    r"[0-9A-Za-zऀ-ॣ०-ॿ‌‍]+|\S"
)
_WS_RUN = re.compile(r"\s+")
_SENT_END = re.compile(r"[।॥?!.]")
_HAS_LATIN_ALNUM = re.compile(r"[A-Za-z0-9]")
_ASCII_DIGITS = re.compile(r"[0-9]+\Z")
_DEVA_DIGITS = re.compile(r"[०-९]+\Z")
_LATIN_LETTER = re.compile(r"[A-Za-z]")
_ANY_DIGIT = re.compile(r"[0-9०-९]")


class TokenKind(Enum):
    DEVANAGARI_WORD = "devanagari_word"
    LATIN_WORD = "latin_word"
    LATIN_NUMBER = "latin_number"
    DEVANAGARI_NUMBER = "devanagari_number"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    span: tuple[int, int]  # codepoint offsets into the normalized source


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    span: tuple[int, int]


@dataclass(frozen=True)
class FilterPolicy:
    drop_symbols: bool = True
    drop_latin_words: bool = True
    drop_latin_numbers: bool = True
    drop_devanagari_digits: bool = False

    def keeps(self, kind: TokenKind) -> bool:
        if kind is TokenKind.SYMBOL:
            return not self.drop_symbols
        if kind is TokenKind.LATIN_WORD:
            return not self.drop_latin_words
        if kind is TokenKind.LATIN_NUMBER:
            return not self.drop_latin_numbers
        if kind is TokenKind.DEVANAGARI_NUMBER:
            return not self.drop_devanagari_digits
        return True


def normalize_text(raw: str) -> str:
    """NFC-normalize and collapse every whitespace run to a single space."""
    return _WS_RUN.sub(" ", unicodedata.normalize("NFC", raw))


def _is_devanagari_word(surface: str) -> bool:
    for ch in surface:
        if ch in (ZWJ, ZWNJ):
            continue
        if not DEVANAGARI_START <= ord(ch) <= DEVANAGARI_END:
            return False
    return True


def classify(surface: str) -> TokenKind:
    if _ASCII_DIGITS.fullmatch(surface):
        return TokenKind.LATIN_NUMBER
    if _DEVA_DIGITS.fullmatch(surface):
        return TokenKind.DEVANAGARI_NUMBER
    if not _LATIN_LETTER.search(surface):
        if _is_devanagari_word(surface):
            return TokenKind.DEVANAGARI_WORD
        # digit runs mixing scripts classify with the Latin digits they carry
        if _ANY_DIGIT.search(surface) and _HAS_LATIN_ALNUM.search(surface):
            return TokenKind.LATIN_NUMBER
        return TokenKind.SYMBOL
    return TokenKind.LATIN_WORD


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word and symbol tokens.

    Word runs are never subdivided: joined (sandhi) words pass through whole.
    Every non-space, non-word character becomes a single-character symbol
    token.
    """
    out = []
    for m in _TOKEN.finditer(text):
        surface = m.group()
        if _WORD_RUN.fullmatch(surface):
            kind = classify(surface)
        else:
            kind = TokenKind.SYMBOL
        out.append(Token(surface=surface, kind=kind, span=(m.start(), m.end())))
    return out


def split_sentences(text: str) -> list[Sentence]:
    """Split on danda, double danda, '?', '!' and '.'.

    The terminator stays with the sentence it ends; trailing text without a
    terminator forms a final sentence; empty segments are dropped.
    """
    sentences = []
    start = 0
    for m in _SENT_END.finditer(text):
        end = m.end()
        _append_sentence(sentences, text, start, end)
        start = end
    _append_sentence(sentences, text, start, len(text))
    return sentences


def _append_sentence(acc: list[Sentence], text: str, start: int, end: int) -> None:
    segment = text[start:end]
    if not segment.strip():
        return
    tokens = tuple(
        Token(t.surface, t.kind, (t.span[0] + start, t.span[1] + start))
        for t in tokenize(segment)
    )
    acc.append(Sentence(tokens=tokens, span=(start, end)))


def filter_tokens(tokens: Sequence[Token], policy: FilterPolicy = FilterPolicy()) -> list[Token]:
    return [t for t in tokens if policy.keeps(t.kind)]


def iter_filtered_surfaces(raw: str, policy: FilterPolicy = FilterPolicy()) -> Iterator[str]:
    """Fast path used by counting: normalized, filtered word surfaces only.

    Equivalent to normalize -> split -> tokenize -> filter on word surfaces
    (symbol tokens never survive the default policy; sentence boundaries do
    not affect token surfaces).
    """
    text = unicodedata.normalize("NFC", raw)
    if policy.drop_symbols:
        matches = _WORD_RUN.finditer(text)
    else:
        matches = _TOKEN.finditer(text)
    for m in matches:
        surface = m.group()
        kind = classify(surface) if _WORD_RUN.fullmatch(surface) else TokenKind.SYMBOL
        if policy.keeps(kind):
            yield surface
