"""
Cross-source consistency and POS-rank correlation
=================================================

Two diagnostics over ranked frequency lists:

* top-k overlap — how many of eight sources share each top-10 lemma
  (a lemma seen in all eight is a very strong stop-lemma candidate);
* point-biserial correlation between part-of-speech group membership
  and rank, to test whether function-word groups crowd the top ranks.
"""

from stoplemma import data_path
from stoplemma.freq import read_ranked_tsv
from stoplemma.stats import (
    load_pos_lexicon,
    pos_rank_analysis,
    reject_pos_hypothesis,
    top_k_overlap,
)

paths = sorted(data_path("table3_top10").glob("*.tsv"))
lists = [read_ranked_tsv(p) for p in paths]
ids = [p.stem for p in paths]

report = top_k_overlap(lists, k=10, source_ids=ids)
print(f"{report.unique_items} distinct lemmas across {report.source_count} top-10 lists")
everywhere = sorted(l for l, n in report.counts.items() if n == report.max_count)
print(f"present in all {report.max_count} sources:", everywhere)

pos = load_pos_lexicon(data_path("demo_pos_lexicon.tsv"))
analysis = pos_rank_analysis(lists, pos, source_ids=ids)
for summary in analysis.summaries:
    if summary.mean_r is None:
        print(f"  {summary.group:12} undefined in: {summary.flagged_sources}")
    else:
        print(f"  {summary.group:12} mean r = {summary.mean_r:+.3f}")

# A strong negative r would mean the group concentrates at the best
# ranks; no group exceeding the threshold keeps the null standing.
print("reject POS-dominance hypothesis:", reject_pos_hypothesis(analysis))
