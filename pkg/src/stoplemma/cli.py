"""Command-line entry point: one subcommand per analysis.

``freq``     word/lemma frequency tables for one or more corpora
``induce``   stop-lemma induction from stop lists + corpora
``overlap``  top-k overlap counts across ranked lists (word-cloud data)
``posstats`` POS-group vs. rank point-biserial statistics
``assess``   cross-lingual coverage of a stop-lemma list

All outputs are deterministic: no timestamps, provenance blocks carry content
hashes. Exit codes: 0 success, 1 input/validation error, 2 computation error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import assess as assess_mod
from . import corpus as corpus_mod
from . import freq as freq_mod
from . import induce as induce_mod
from . import lemma as lemma_mod
from . import stats as stats_mod
from .normalize import FilterPolicy

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_COMPUTE_ERROR = 2

_INPUT_ERRORS = (
    corpus_mod.CorpusError,
    lemma_mod.LexiconError,
    induce_mod.InductionError,
    assess_mod.MappingError,
    FileNotFoundError,
    ValueError,
)


class InputSpecError(ValueError):
    pass


def _require_args(args, names: list[str]) -> None:
    missing = [n for n in names if getattr(args, n, None) in (None, [])]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise InputSpecError(f"missing required option(s): {flags} (flag or config file)")


def _parse_id_path(spec: str, label: str) -> tuple[str, str]:
    if "=" not in spec:
        raise InputSpecError(f"{label} must look like ID=PATH, got {spec!r}")
    ident, path = spec.split("=", 1)
    if not ident or not path:
        raise InputSpecError(f"{label} must look like ID=PATH, got {spec!r}")
    return ident, path


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _hash_tree(path: Path) -> str:
    if path.is_file():
        return _sha256(path)
    h = hashlib.sha256()
    for p in sorted(path.rglob("*")):
        if p.is_file():
            h.update(str(p.relative_to(path)).encode())
            h.update(_sha256(p).encode())
    return h.hexdigest()


def _require_paths(paths: list[str]) -> None:
    missing = [p for p in paths if not Path(p).exists()]
    if missing:
        raise FileNotFoundError(f"input path(s) not found: {', '.join(missing)}")


def _write_provenance(outdir: Path, command: str, params: dict, inputs: list[str]) -> None:
    block = {
        "command": command,
        "parameters": params,
        "inputs": {p: _hash_tree(Path(p)) for p in sorted(set(inputs))},
    }
    with (outdir / "provenance.json").open("w", encoding="utf-8") as fh:
        json.dump(block, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")


def _policy_from_args(args) -> FilterPolicy:
    return FilterPolicy(
        drop_symbols=not args.keep_symbols,
        drop_latin_words=not args.keep_latin_words,
        drop_latin_numbers=not args.keep_latin_numbers,
        drop_devanagari_digits=args.drop_devanagari_digits,
    )


def _load_lexicon_arg(args) -> lemma_mod.LemmaLexicon:
    if args.lexicon:
        return lemma_mod.load_lexicon(args.lexicon)
    return lemma_mod.EMPTY_LEXICON


def _corpora_from_args(args) -> list[tuple[str, str]]:
    return [_parse_id_path(spec, "--corpus") for spec in args.corpus]


def cmd_freq(args) -> int:
    _require_args(args, ["corpus", "out"])
    corpora = _corpora_from_args(args)
    inputs = [path for _, path in corpora] + ([args.lexicon] if args.lexicon else [])
    _require_paths(inputs)
    policy = _policy_from_args(args)
    lex = _load_lexicon_arg(args)
    outdir = Path(args.out)

    tables = []
    exports = []
    for ident, path in corpora:
        source = corpus_mod.load_corpus(path, id=ident)
        words = freq_mod.count_words(source, policy)
        lemmas = freq_mod.lemma_table(words, lex)
        tables += [words, lemmas]
        exports.append((ident, freq_mod.rank_items(words), freq_mod.rank_items(lemmas)))

    outdir.mkdir(parents=True, exist_ok=True)
    for ident, ranked_words, ranked_lemmas in exports:
        freq_mod.write_tsv(ranked_words, outdir / f"words_{ident}.tsv")
        freq_mod.write_tsv(ranked_lemmas, outdir / f"lemmas_{ident}.tsv")
    freq_mod.write_report(tables, outdir / "freq_report.json")
    _write_provenance(outdir, "freq", _param_dict(args), inputs)
    return EXIT_OK


def cmd_induce(args) -> int:
    _require_args(args, ["stoplist", "corpus", "out"])
    stoplists = [_parse_id_path(s, "--stoplist") for s in args.stoplist]
    corpora = _corpora_from_args(args)
    inputs = [p for _, p in stoplists] + [p for _, p in corpora]
    if args.lexicon:
        inputs.append(args.lexicon)
    _require_paths(inputs)
    policy = _policy_from_args(args)
    lex = _load_lexicon_arg(args)

    lists = [induce_mod.load_stopword_list(path, source_id=ident) for ident, path in stoplists]
    lemma_tables = []
    ranked = []
    for ident, path in corpora:
        source = corpus_mod.load_corpus(path, id=ident)
        table = freq_mod.count_lemmas(source, policy, lex)
        lemma_tables.append(table)
        ranked.append(freq_mod.rank_items(table))

    set_a = induce_mod.build_set_a(lists, lex, k=args.k_a)
    set_b = induce_mod.build_set_b(ranked, k=args.k_b)
    aggregate = induce_mod.aggregate_lemma_counts([t.counts for t in lemma_tables])
    provenance = {
        "stoplists": [i for i, _ in stoplists],
        "corpora": [i for i, _ in corpora],
        "k_a": args.k_a,
        "k_b": args.k_b,
        "lexicon": args.lexicon or "",
    }
    final = induce_mod.build_final_list(set_a, set_b, aggregate, provenance=provenance)
    report = induce_mod.induction_report(lists, set_a, set_b, final)

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    induce_mod.write_stoplemma_list(final, outdir / "stoplemmas.txt")
    induce_mod.write_induction_report(report, outdir / "induction_report.json")
    _write_provenance(outdir, "induce", _param_dict(args), inputs)
    return EXIT_OK


def cmd_overlap(args) -> int:
    _require_args(args, ["ranked", "out"])
    ranked_specs = [_parse_id_path(s, "--ranked") for s in args.ranked]
    inputs = [p for _, p in ranked_specs]
    _require_paths(inputs)
    lists = [freq_mod.read_ranked_tsv(path) for _, path in ranked_specs]
    report = stats_mod.top_k_overlap(lists, k=args.k, source_ids=[i for i, _ in ranked_specs])

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stats_mod.write_overlap_tsv(report, outdir / "overlap.tsv")
    summary = {
        "k": report.k,
        "source_count": report.source_count,
        "unique_items": report.unique_items,
        "max_count": report.max_count,
        "short_sources": list(report.short_sources),
    }
    with (outdir / "overlap_report.json").open("w", encoding="utf-8") as fh:
        json.dump(summary, fh, ensure_ascii=False, indent=2, sort_keys=True)
        fh.write("\n")
    _write_provenance(outdir, "overlap", _param_dict(args), inputs)
    return EXIT_OK


def cmd_posstats(args) -> int:
    _require_args(args, ["ranked", "pos_lexicon", "out"])
    ranked_specs = [_parse_id_path(s, "--ranked") for s in args.ranked]
    inputs = [p for _, p in ranked_specs] + [args.pos_lexicon]
    _require_paths(inputs)
    lists = [freq_mod.read_ranked_tsv(path) for _, path in ranked_specs]
    pos_lex = stats_mod.load_pos_lexicon(args.pos_lexicon)
    report = stats_mod.pos_rank_analysis(
        lists,
        pos_lex,
        depth=args.depth,
        source_ids=[i for i, _ in ranked_specs],
        use_frequency=args.use_frequency,
    )
    if all(s.mean_r is None for s in report.summaries):
        print("error: correlation undefined for every (group, source) cell", file=sys.stderr)
        return EXIT_COMPUTE_ERROR

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stats_mod.write_correlation_tsv(report, outdir / "posstats.tsv")
    stats_mod.write_correlation_json(report, outdir / "posstats.json")
    verdict = {"reject_pos_hypothesis": stats_mod.reject_pos_hypothesis(report, args.threshold),
               "threshold": args.threshold}
    with (outdir / "hypothesis.json").open("w", encoding="utf-8") as fh:
        json.dump(verdict, fh, indent=2, sort_keys=True)
        fh.write("\n")
    _write_provenance(outdir, "posstats", _param_dict(args), inputs)
    return EXIT_OK


def cmd_assess(args) -> int:
    _require_args(args, ["mapping", "list", "out"])
    inputs = [args.mapping, args.list] + ([args.lexicon] if args.lexicon else [])
    _require_paths(inputs)
    mapping = assess_mod.load_mapping(args.mapping)
    lex = _load_lexicon_arg(args)
    stop_lemmas = set(induce_mod.load_reference_list(args.list))
    report = assess_mod.assess_coverage(mapping, lex, stop_lemmas)

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    assess_mod.write_coverage_json(report, outdir / "coverage.json")
    (outdir / "coverage.txt").write_text(assess_mod.format_summary(report) + "\n", encoding="utf-8")
    _write_provenance(outdir, "assess", _param_dict(args), inputs)
    return EXIT_OK


def _param_dict(args) -> dict:
    skip = {"func", "config"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _add_policy_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--keep-symbols", action="store_true",
                   help="retain punctuation/symbol tokens")
    p.add_argument("--keep-latin-words", action="store_true",
                   help="retain Latin-script word tokens")
    p.add_argument("--keep-latin-numbers", action="store_true",
                   help="retain Latin-digit number tokens")
    p.add_argument("--drop-devanagari-digits", action="store_true",
                   help="drop Devanagari-digit number tokens")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stoplemma",
                                     description="Hindi stop-lemma toolkit")
    parser.add_argument("--config", help="JSON config file; command-line flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("freq", help="word/lemma frequency tables")
    p.add_argument("--corpus", action="append", metavar="ID=PATH")
    p.add_argument("--lexicon", help="surface<TAB>lemma TSV")
    _add_policy_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("induce", help="induce a stop-lemma list")
    p.add_argument("--stoplist", action="append", metavar="ID=PATH")
    p.add_argument("--corpus", action="append", metavar="ID=PATH")
    p.add_argument("--lexicon")
    p.add_argument("--k-a", type=int, default=induce_mod.DEFAULT_K)
    p.add_argument("--k-b", type=int, default=induce_mod.DEFAULT_K)
    _add_policy_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("overlap", help="top-k overlap across ranked lists")
    p.add_argument("--ranked", action="append", metavar="ID=PATH")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("posstats", help="POS-group vs. rank correlation")
    p.add_argument("--ranked", action="append", metavar="ID=PATH")
    p.add_argument("--pos-lexicon", help="item<TAB>tag TSV")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--use-frequency", action="store_true",
                   help="correlate against raw frequency instead of rank")
    p.add_argument("--out")
    p.set_defaults(func=cmd_posstats)

    p = sub.add_parser("assess", help="coverage of a stop-lemma list")
    p.add_argument("--mapping", help="external<TAB>hindi TSV")
    p.add_argument("--lexicon")
    p.add_argument("--list", help="one lemma per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_assess)

    return parser


def _suppress_defaults(parser: argparse.ArgumentParser) -> None:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                _suppress_defaults(sub)
        elif action.dest != "help":
            action.default = argparse.SUPPRESS


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    with open(args.config, encoding="utf-8") as fh:
        config = json.load(fh)
    # find which options were given explicitly: reparse with all defaults
    # suppressed, then let config fill only the rest (flags win)
    bare = build_parser()
    _suppress_defaults(bare)
    explicit = vars(bare.parse_args(argv))
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest not in explicit and hasattr(args, dest):
            setattr(args, dest, value)
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, list(argv) if argv is not None else sys.argv[1:])
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
