"""Rating and benchmarking of research institutions from a publication corpus.

Load a corpus from five CSV files, compute per-cell bibliometric indicators
(publications, citations, h-index, top-quartile SNIP share, citations per
paper), rate institutions through a normalize/weight/score/band pipeline,
and build max-normalized benchmarking profiles for radar charts.
"""

from .benchmark import BenchmarkEntry, BenchmarkProfile, benchmark, benchmark_multi
from .corpus import (
    ALL_REGIONS,
    Corpus,
    InstitutionRecord,
    JournalRecord,
    PublicationRecord,
    ValidationReport,
    load_corpus,
    load_corpus_dir,
    validate_corpus,
)
from .errors import (
    DanglingReference,
    DuplicateId,
    EmptyScope,
    InsufficientTaxonomy,
    InvalidQuery,
    LevelMismatch,
    MalformedRow,
    MissingFile,
    NichebenchError,
    OutOfRange,
    TooManyInstitutions,
    UnknownCode,
    UnknownInstitution,
    UnknownRegion,
)
from .indicators import (
    INDICATORS,
    IndicatorVector,
    SnipQuartileTable,
    build_snip_quartiles,
    cpp,
    h_index,
    indicator_vector,
    pct_top_snip,
)
from .rating import (
    DEFAULT_MIN_PUBS,
    OverallMatrix,
    PRESETS,
    RatingQuery,
    RatingRow,
    WeightScheme,
    band,
    normalize,
    percentage_scores,
    rate_overall,
    rate_subject,
    score_table,
    top_level1_subjects,
    weighted_total,
)
from .taxonomy import SubjectNode, SubjectTaxonomy, load_taxonomy, subjects_of_journal

__version__ = "0.1.0"
