"""Multi-criteria ranking with MOORA, RAM, FUCA and CURLI, plus rank-correlation tools."""

from .compare import ComparisonReport, agreement, spearman_naive, spearman_tie_adjusted
from .core import (
    ConfigError,
    Criterion,
    DataError,
    DecisionMatrix,
    Direction,
    MCDMError,
    MethodResult,
    RankOrder,
    TiePolicy,
    ValidationReport,
    column_ranks,
    rank_scores,
    validate,
)
from .datasets import (
    MatrixDocument,
    ReferenceRanking,
    builtin_bank_dataset,
    builtin_camels_reference,
    dump_matrix_csv,
    dump_reference_csv,
    load_matrix_csv,
    load_reference_csv,
    published_rankings,
)
from .methods import METHODS, curli, curli_score_table, fuca, moora, ram, run_method
from .normalize import NormalizedMatrix, WeightedMatrix, apply_weights, sum_normalize, vector_normalize
from .replication import ReplicationReport, replicate

__version__ = "0.1.0"
