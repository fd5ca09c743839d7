"""Overall rating: a band matrix over the busiest 15 disciplines.

Every institution in scope gets one band per discipline (the same
normalize/weight/score/band pipeline run per column). A dot marks cells
where the institution does not clear the publication threshold.
"""

from pathlib import Path

from nichebench import load_corpus_dir, rate_overall

DATA = Path(__file__).parent.parent / "data" / "fixture"
corpus = load_corpus_dir(DATA)

# the default threshold is 40 publications; the bundled corpus is small,
# so a lower bar shows more of the matrix
for preset in ("equal", "volume", "quality"):
    matrix = rate_overall(corpus, region="ALL", preset=preset, min_pubs=10)
    print(f"\n=== preset: {preset} (threshold {matrix.min_pubs}) ===")
    print(" " * 36 + " ".join(f"{code//1000:>3}" for code in matrix.subject_codes))
    for row, (iid, name) in enumerate(zip(matrix.institution_ids, matrix.institution_names)):
        cells = " ".join(
            f"{b:>3}" if b is not None else "  ." for b in matrix.bands[row]
        )
        print(f"{name[:34]:36}{cells}")

print("\ncolumns are discipline codes (divided by 1000), ordered by total")
print("corpus publications; bands run 1 (best) to 10, '.' = below threshold")
