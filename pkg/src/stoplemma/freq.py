"""Raw-frequency tables over words and lemmas, with deterministic ranking."""

from __future__ import annotations

import json
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import CorpusSource, Document
from .lemma import EMPTY_LEXICON, LemmaLexicon
from .normalize import FilterPolicy, iter_filtered_surfaces

# Large documents are scanned in slices so counting never materializes the
# whole token stream; slice boundaries snap to whitespace to keep runs whole.
_CHUNK_CHARS = 1 << 22


@dataclass(frozen=True)
class FrequencyTable:
    item_kind: str  # "word" or "lemma"
    counts: dict[str, int]
    source_id: str

    @property
    def total_tokens(self) -> int:
        return sum(self.counts.values())

    @property
    def unique_count(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class RankedList:
    entries: tuple[tuple[int, str, int], ...]  # (rank, item, count)

    def items(self) -> list[str]:
        return [item for _, item, _ in self.entries]


def _iter_chunks(text: str) -> Iterable[str]:
    if len(text) <= _CHUNK_CHARS:
        yield text
        return
    start = 0
    while start < len(text):
        end = min(start + _CHUNK_CHARS, len(text))
        if end < len(text):
            # back up to the last whitespace so no token straddles the cut
            cut = end
            while cut > start and not text[cut - 1].isspace():
                cut -= 1
            if cut > start:
                end = cut
        yield text[start:end]
        start = end


def count_document_words(doc: Document, policy: FilterPolicy = FilterPolicy()) -> Counter:
    # Count all word runs first, then filter per unique type: classification
    # work scales with the vocabulary, not the token count.
    from . import normalize as _n

    counts: Counter = Counter()
    pattern = _n._WORD_RUN if policy.drop_symbols else _n._TOKEN
    for chunk in _iter_chunks(doc.raw_text):
        counts.update(pattern.findall(unicodedata.normalize("NFC", chunk)))
    for surface in list(counts):
        if _n._WORD_RUN.fullmatch(surface):
            kind = _n.classify(surface)
        else:
            kind = _n.TokenKind.SYMBOL
        if not policy.keeps(kind):
            del counts[surface]
    return counts


def merge_counts(tables: Iterable[Counter]) -> Counter:
    merged: Counter = Counter()
    for t in tables:
        merged.update(t)
    return merged


def count_words(corpus: CorpusSource, policy: FilterPolicy = FilterPolicy()) -> FrequencyTable:
    merged = merge_counts(count_document_words(d, policy) for d in corpus.documents)
    return FrequencyTable(item_kind="word", counts=dict(merged), source_id=corpus.id)


def count_lemmas(
    corpus: CorpusSource,
    policy: FilterPolicy = FilterPolicy(),
    lex: LemmaLexicon = EMPTY_LEXICON,
) -> FrequencyTable:
    words = count_words(corpus, policy)
    return lemma_table(words, lex)


def lemma_table(words: FrequencyTable, lex: LemmaLexicon) -> FrequencyTable:
    """Collapse a word table into a lemma table; token totals are conserved."""
    counts: dict[str, int] = {}
    lookup = lex.entries.get
    for word, n in words.counts.items():
        lemma = lookup(word, word)
        counts[lemma] = counts.get(lemma, 0) + n
    return FrequencyTable(item_kind="lemma", counts=counts, source_id=words.source_id)


def rank_items(table: FrequencyTable) -> RankedList:
    """Order by descending count, breaking ties by ascending codepoint order."""
    ordered = sorted(table.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return RankedList(
        entries=tuple((rank, item, count) for rank, (item, count) in enumerate(ordered, start=1))
    )


def top_k(ranked: RankedList, k: int) -> list[str]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [item for _, item, _ in ranked.entries[:k]]


def write_tsv(ranked: RankedList, path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for _, item, count in ranked.entries:
            fh.write(f"{item}\t{count}\n")


def read_ranked_tsv(path: str | Path) -> RankedList:
    """Read an ``item<TAB>count`` file written in rank order."""
    entries = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'item<TAB>count', got {line!r}")
            entries.append((len(entries) + 1, parts[0], int(parts[1])))
    return RankedList(entries=tuple(entries))


def stats_row(table: FrequencyTable) -> dict:
    """Per-source summary mirroring the corpus-metadata table columns."""
    return {
        "source_id": table.source_id,
        "item_kind": table.item_kind,
        "total_tokens": table.total_tokens,
        "unique_count": table.unique_count,
    }


def write_report(tables: Sequence[FrequencyTable], path: str | Path) -> None:
    report = [stats_row(t) for t in tables]
    with Path(path).open("w", encoding="utf-8") as fh:
        json.dump(report, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")
