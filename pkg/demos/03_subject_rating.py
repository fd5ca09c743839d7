"""Rate institutions in one subject under different weight schemes.

Pipeline per scope: drop institutions under the publication threshold,
normalize each indicator by its scope maximum, weight, sum, rescale the
grand totals to a 0-100 percentage, and bucket into bands 1 (best) to 10.

Volume weighting rewards output (pubs, cites, h); quality weighting rewards
impact density (%top-SNIP, CPP) -- the same institutions can land in very
different bands under the two lenses.
"""

from pathlib import Path

from nichebench import PRESETS, RatingQuery, WeightScheme, load_corpus_dir, rate_subject

DATA = Path(__file__).parent.parent / "data" / "fixture"
corpus = load_corpus_dir(DATA)


def show(title, rows):
    print(f"\n=== {title} ===")
    print(f"{'institution':34} {'pubs':>5} {'cites':>6} {'h':>3} {'%top':>6} {'cpp':>6} {'pct':>7} band")
    for r in rows:
        v = r.vector
        print(
            f"{r.name:34} {v.total_pubs:>5} {v.total_cites:>6} {v.h_index:>3}"
            f" {v.pct_top_snip:>6.2f} {v.cpp:>6.2f} {r.percentage:>7.2f} {r.band:>4}"
        )


subject = 4000  # Computer Science discipline
for preset_name in ("equal", "volume", "quality"):
    query = RatingQuery(
        subject_code=subject,
        level=1,
        year_window=(2008, 2013),
        weights=PRESETS[preset_name],
        min_pubs=40,
    )
    show(f"Computer Science, {preset_name} weights, threshold 40", rate_subject(corpus, query))

# custom weights: skew entirely toward citations-per-paper
custom = RatingQuery(subject, 1, (2008, 2013), weights=WeightScheme(0, 0, 0, 20, 80))
show("Computer Science, custom (snip=20, cpp=80)", rate_subject(corpus, custom))

# the niche level works the same way; thresholds are query parameters
niche = RatingQuery(5201, 3, (2008, 2013), min_pubs=5)
show("Electrical and Electronic Engineering (niche), threshold 5", rate_subject(corpus, niche))
