from . import backend
from .cart import Tree, best_split, gini_impurity, grow_tree
from .model import ForestModel, ForestParams, memorizing_params, oob_accuracy, train_forest
from .rng import bootstrap_indices, tree_rng
from .serialize import load_suite, save_suite, suite_from_bytes, suite_to_bytes
from .suite import SCORE_NAMES, ScoreSuite, score_suite, train_suite

__all__ = [
    "backend",
    "Tree",
    "best_split",
    "gini_impurity",
    "grow_tree",
    "ForestModel",
    "ForestParams",
    "memorizing_params",
    "oob_accuracy",
    "train_forest",
    "bootstrap_indices",
    "tree_rng",
    "load_suite",
    "save_suite",
    "suite_from_bytes",
    "suite_to_bytes",
    "SCORE_NAMES",
    "ScoreSuite",
    "score_suite",
    "train_suite",
]
