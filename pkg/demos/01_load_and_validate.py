"""Load the bundled synthetic corpus and inspect its validation report.

The corpus lives in five CSV files (publications, journals, institutions,
snip values, subject taxonomy). Loading is strict: dangling references,
duplicate ids or malformed rows abort immediately. Softer issues -- a
journal without a SNIP value, a publication outside the declared window --
come back as warnings.
"""

from pathlib import Path

from nichebench import load_corpus_dir, validate_corpus

DATA = Path(__file__).parent.parent / "data" / "fixture"

corpus = load_corpus_dir(DATA)

print("corpus summary")
for key, value in corpus.summary().items():
    print(f"  {key}: {value}")

report = validate_corpus(corpus)
print(f"\nvalidation: {'OK' if report.ok else 'FAILED'}")
for key, value in report.counts.items():
    print(f"  {key}: {value}")

print(f"\nfirst warnings ({len(report.warnings)} total):")
for line in report.warnings[:5]:
    print(f"  - {line}")

# the corpus is immutable: derived indexes are safe to share across threads
print("\nregions:", ", ".join(sorted(corpus.regions)))
biggest = max(corpus.institutions.values(),
              key=lambda i: len(corpus.publications_by_institution[i.institution_id]))
print("largest producer:", biggest.name,
      f"({len(corpus.publications_by_institution[biggest.institution_id])} publications)")
