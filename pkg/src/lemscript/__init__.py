"""Edit-script induction for lemmatization.

Three label schemes (udpipe, ixapipes, morpheus styles) that encode a
(wordform, lemma) pair into a compact edit label and decode a
(wordform, label) pair back to the lemma, plus treebank ingestion,
evaluation metrics, significance testing, and a frequency baseline.
"""

from .baseline import BaselineModel, predict_lemma, train_baseline
from .corpus_io import (
    LabeledCorpus,
    LabeledToken,
    adjust_propn_lemmas,
    label_corpus,
    parse_conllu,
    parse_labeled,
    write_conllu,
    write_labeled,
)
from .metrics import (
    EvalReport,
    LabelVocabulary,
    McNemarResult,
    OovReport,
    inv_oov_accuracy,
    mcnemar,
    oov_report,
    paired_outcomes,
    sentence_accuracy,
    unique_labels,
    word_accuracy,
)
from .model import Corpus, Scheme, Sentence, SesLabel, Token
from .schemes import decode, encode

__version__ = "0.1.0"

__all__ = [
    "BaselineModel",
    "Corpus",
    "EvalReport",
    "LabelVocabulary",
    "LabeledCorpus",
    "LabeledToken",
    "McNemarResult",
    "OovReport",
    "Scheme",
    "Sentence",
    "SesLabel",
    "Token",
    "adjust_propn_lemmas",
    "decode",
    "encode",
    "inv_oov_accuracy",
    "label_corpus",
    "mcnemar",
    "oov_report",
    "paired_outcomes",
    "parse_conllu",
    "parse_labeled",
    "predict_lemma",
    "sentence_accuracy",
    "train_baseline",
    "unique_labels",
    "word_accuracy",
    "write_conllu",
    "write_labeled",
]
