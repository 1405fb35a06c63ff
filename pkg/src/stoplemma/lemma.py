"""Lexicon-based lemmatization with identity fallback.

A plain surface->lemma table stands in for a model-based lemmatizer; any
surface absent from the table lemmatizes to itself, so lookup is total and
fully deterministic.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping


class LexiconError(ValueError):
    """Malformed or internally inconsistent lexicon file."""


@dataclass(frozen=True)
class LemmaLexicon:
    entries: Mapping[str, str]

    @property
    def entry_count(self) -> int:
        return len(self.entries)

    def lemma_of(self, word: str) -> str:
        return self.entries.get(word, word)


EMPTY_LEXICON = LemmaLexicon(entries={})


def load_lexicon(path: str | Path) -> LemmaLexicon:
    """Parse a UTF-8 TSV of ``surface<TAB>lemma`` lines.

    ``#`` comments and blank lines are skipped.  A surface mapped to two
    different lemmas is an error; repeating an identical pair is not.
    """
    path = Path(path)
    entries: dict[str, str] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise LexiconError(f"{path}:{lineno}: expected 'surface<TAB>lemma', got {line!r}")
            surface = unicodedata.normalize("NFC", parts[0])
            lemma = unicodedata.normalize("NFC", parts[1])
            if surface in entries and entries[surface] != lemma:
                raise LexiconError(
                    f"{path}:{lineno}: conflicting lemma for {surface!r}: "
                    f"{entries[surface]!r} vs {lemma!r}"
                )
            entries[surface] = lemma
    return LemmaLexicon(entries=entries)


def lemmatize(word: str, lex: LemmaLexicon) -> str:
    if not word:
        raise ValueError("cannot lemmatize an empty word")
    return lex.lemma_of(word)


def lemmatize_phrase(phrase: str, lex: LemmaLexicon) -> str:
    """Lemmatize a (possibly multi-word) entry token-by-token on whitespace."""
    words = phrase.split()
    if not words:
        raise ValueError("cannot lemmatize an empty phrase")
    return " ".join(lex.lemma_of(w) for w in words)


def gen_lemma(words: Iterable[str], lex: LemmaLexicon) -> set[str]:
    """Image of a word set under lemmatization; duplicates collapse."""
    return {lemmatize_phrase(w, lex) for w in words}


def oov_rate(words: Iterable[str], lex: LemmaLexicon) -> float:
    """Fraction of distinct words falling back to identity (out of lexicon)."""
    words = set(words)
    if not words:
        return 0.0
    missing = sum(1 for w in words if w not in lex.entries)
    return missing / len(words)
