"""able2rank: analogy-based object ranking.

Observed pairwise preferences are transferred to new object pairs via
graded analogical proportions and aggregated into a total order with a
Bradley-Terry-Luce model.
"""

from .aggregate import Ranking, ThetaVector, able2rank_predict, btl_fit, rank_from_scores
from .analogy import (ProportionMeasure, boolean_proportion, parse_measures,
                      scalar_proportion, vector_proportion)
from .baseline import LinearModel, err_fit, err_predict, err_rank, err_targets
from .dataset import (DatasetError, FeatureSchema, PreferenceStore,
                      RankingInstance, extract_pairs, load_dataset,
                      parse_schema, pool_pairs)
from .evaluation import (ExperimentReport, GridSearchResult, grid_search_cv,
                         ranking_loss, run_experiment)
from .pairwise import ComparisonMatrix, SupportList, app, comparison_matrix, top_k_stable
from .preprocess import (PreprocessReport, maybe_log_transform,
                         min_max_normalize, preprocess_for_able2rank,
                         skewness, standardize)

__version__ = "0.1.0"
