"""At-a-glance benchmarking: compare up to five institutions per indicator.

Each indicator column is rescaled so the best of the *chosen* set reads
100; actual values ride along for labels. No publication threshold applies
-- small specialist institutes compare directly against large ones. The
profiles below are exactly what the web client plots as radar polygons.
"""

from pathlib import Path

from nichebench import INDICATORS, benchmark, benchmark_multi, load_corpus_dir

DATA = Path(__file__).parent.parent / "data" / "fixture"
corpus = load_corpus_dir(DATA)

chosen = ["U001", "U002", "U004", "U008", "U011"]
profile = benchmark(corpus, chosen, 5201, 3, (2008, 2013))

subject = corpus.taxonomy.nodes[profile.subject_code].name
print(f"benchmark: {subject}, {profile.year_window[0]}-{profile.year_window[1]}\n")
for axis, indicator in enumerate(INDICATORS):
    print(f"{indicator}:")
    for entry in profile.entries:
        bar = "#" * round(entry.pct[axis] / 2.5)
        print(f"  {entry.name[:30]:32} {entry.pct[axis]:>6.1f} |{bar:<40}| actual {entry.actual[axis]:g}")
    if profile.degenerate[axis]:
        print("  (axis degenerate: all chosen institutions are at zero)")
    print()

# multiple subject tabs: each profile normalizes independently
profiles = benchmark_multi(
    corpus, ["U008", "U011"], [(6201, 3), (6000, 1)], (2008, 2013)
)
for p in profiles:
    name = corpus.taxonomy.nodes[p.subject_code].name
    leaders = [
        e.name for e in p.entries if any(pct == 100.0 for pct in e.pct)
    ]
    print(f"tab {name!r}: axis leaders -> {', '.join(leaders)}")
