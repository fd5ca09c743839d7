"""The five indicators for one (institution, subject, window) cell.

Cells are the atoms of both rating and benchmarking: publication count,
total citations, h-index, the share of publications landing in top-quartile
journals (by 2010 SNIP within the subject), and citations per paper.
"""

from pathlib import Path

from nichebench import (
    build_snip_quartiles,
    h_index,
    indicator_vector,
    load_corpus_dir,
)

DATA = Path(__file__).parent.parent / "data" / "fixture"
corpus = load_corpus_dir(DATA)

# h-index from raw citation counts: 4 papers with >= 4 citations each
print("h-index of [10, 8, 5, 4, 3] ->", h_index([10, 8, 5, 4, 3]))

# the same institution at the three hierarchy levels
for code, level, label in [
    (4000, 1, "discipline"),
    (4200, 2, "sub-discipline"),
    (4201, 3, "niche"),
]:
    vec = indicator_vector(corpus, "U001", code, level, (2008, 2013))
    name = corpus.taxonomy.nodes[code].name
    print(
        f"\nU001 in {name} ({label}):"
        f"\n  pubs={vec.total_pubs}  cites={vec.total_cites}  h={vec.h_index}"
        f"  %top-SNIP={vec.pct_top_snip:.2f}  cpp={vec.cpp:.2f}"
    )

# top-quartile journals for the Artificial Intelligence niche
table = build_snip_quartiles(corpus)
print("\ntop-quartile journals in Artificial Intelligence:")
for jid in sorted(table.top(4201)):
    journal = corpus.journals[jid]
    print(f"  {jid}  snip={journal.snip_2010:<5}  {journal.title}")

# narrower windows never increase the counts
for window in [(2008, 2013), (2008, 2010), (2011, 2013)]:
    vec = indicator_vector(corpus, "U001", 4000, 1, window)
    print(f"window {window}: pubs={vec.total_pubs} cites={vec.total_cites}")
