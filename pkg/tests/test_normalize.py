import re
import unicodedata

import pytest
from hypothesis import given, strategies as st

from stoplemma.normalize import (
    FilterPolicy,
    Token,
    TokenKind,
    filter_tokens,
    iter_filtered_surfaces,
    normalize_text,
    split_sentences,
    tokenize,
)

DEVANAGARI_LETTERS = [chr(c) for c in range(0x0905, 0x0939 + 1)]
DEVANAGARI_MATRAS = [chr(c) for c in range(0x093E, 0x094C + 1)]
LATIN_ALNUM = re.compile(r"[A-Za-z0-9]")


class TestNormalizeText:
    def test_nukta_forms_unify(self):
        # U+0958 is composition-excluded, so NFC settles both the precomposed
        # qa and ka + nukta on the decomposed pair
        assert normalize_text("क़") == normalize_text("क़")
        assert normalize_text("क़") == "क़"

    def test_no_break_space_collapses(self):
        assert normalize_text("अ ब") == "अ ब"

    def test_whitespace_run_collapses_to_one_space(self):
        assert normalize_text("अ \t\n ब") == "अ ब"

    def test_idempotent_on_nfc_text(self):
        text = normalize_text("राम घर गया।")
        assert normalize_text(text) == text

    @given(st.text(max_size=200))
    def test_idempotent(self, raw):
        once = normalize_text(raw)
        assert normalize_text(once) == once


class TestTokenize:
    def test_whitespace_split(self):
        tokens = tokenize("राम घर गया")
        assert [t.surface for t in tokens] == ["राम", "घर", "गया"]
        assert all(t.kind is TokenKind.DEVANAGARI_WORD for t in tokens)

    def test_joined_words_not_segmented(self):
        tokens = tokenize("रामघर")
        assert [t.surface for t in tokens] == ["रामघर"]

    def test_mixed_kinds(self):
        kinds = [(t.surface, t.kind) for t in tokenize("abc १२ 45 ।")]
        assert kinds == [
            ("abc", TokenKind.LATIN_WORD),
            ("१२", TokenKind.DEVANAGARI_NUMBER),
            ("45", TokenKind.LATIN_NUMBER),
            ("।", TokenKind.SYMBOL),
        ]

    def test_punctuation_becomes_symbol_tokens(self):
        tokens = tokenize("क-ख")
        assert [t.kind for t in tokens] == [
            TokenKind.DEVANAGARI_WORD,
            TokenKind.SYMBOL,
            TokenKind.DEVANAGARI_WORD,
        ]

    def test_spans_index_into_source(self):
        text = "घर गया।"
        for t in tokenize(text):
            assert text[t.span[0]:t.span[1]] == t.surface

    @given(st.text(alphabet=DEVANAGARI_LETTERS + DEVANAGARI_MATRAS + ["्"],
                   min_size=1, max_size=30))
    def test_devanagari_run_is_one_token(self, word):
        tokens = tokenize(word)
        assert len(tokens) == 1
        assert tokens[0].surface == word

    @given(st.lists(st.text(alphabet=DEVANAGARI_LETTERS, min_size=1, max_size=8),
                    min_size=1, max_size=20))
    def test_retokenizing_surfaces_is_a_fixpoint(self, words):
        text = " ".join(words)
        surfaces = [t.surface for t in tokenize(text)]
        again = [t.surface for t in tokenize(" ".join(surfaces))]
        assert surfaces == again


class TestSplitSentences:
    def test_danda_split(self):
        assert len(split_sentences("वह घर गया। फिर आया।")) == 2

    def test_empty_input(self):
        assert split_sentences("") == []

    def test_trailing_text_without_terminator(self):
        sents = split_sentences("क्या? हाँ")
        assert len(sents) == 2
        assert sents[0].span == (0, 5)
        assert sents[1].tokens[-1].surface == "हाँ"

    def test_terminator_attaches_to_its_sentence(self):
        sents = split_sentences(normalize_text("एक। दो॥"))
        assert [s.tokens[-1].surface for s in sents] == ["।", "॥"]

    @given(st.text(alphabet=DEVANAGARI_LETTERS + [" ", "।", "?", "!", "."],
                   max_size=120))
    def test_spans_cover_the_text(self, raw):
        text = normalize_text(raw)
        sents = split_sentences(text)
        covered = sum(s.span[1] - s.span[0] for s in sents)
        dropped = len(text) - covered
        # whatever is not in a sentence span is inter-sentence whitespace
        assert dropped >= 0
        in_spans = set()
        for s in sents:
            assert s.span[0] <= s.span[1]
            for i in range(*s.span):
                assert i not in in_spans  # non-overlapping
                in_spans.add(i)
        for i in range(len(text)):
            if i not in in_spans:
                assert text[i] == " "


class TestFilterTokens:
    def test_default_policy(self):
        tokens = tokenize("घर house 123 ।")
        kept = filter_tokens(tokens)
        assert [t.surface for t in kept] == ["घर"]

    def test_empty(self):
        assert filter_tokens([]) == []

    def test_drop_devanagari_digits_flag(self):
        tokens = tokenize("१२ घर")
        kept = filter_tokens(tokens, FilterPolicy(drop_devanagari_digits=True))
        assert [t.surface for t in kept] == ["घर"]

    def test_devanagari_digits_kept_by_default(self):
        kept = filter_tokens(tokenize("१२ घर"))
        assert [t.surface for t in kept] == ["१२", "घर"]

    @given(st.text(max_size=200))
    def test_no_latin_alnum_survives_default_policy(self, raw):
        text = normalize_text(raw)
        for token in filter_tokens(tokenize(text)):
            assert not LATIN_ALNUM.search(token.surface)

    @given(st.text(max_size=200))
    def test_fast_path_matches_tokenize_pipeline(self, raw):
        policy = FilterPolicy()
        slow = [t.surface for t in filter_tokens(tokenize(normalize_text(raw)), policy)]
        fast = list(iter_filtered_surfaces(raw, policy))
        assert slow == fast
