"""Frequency baseline: most frequent label per lowercased wordform.

Stands in for a trained classifier so the encode -> classify -> decode ->
evaluate loop runs end to end. Prediction backs off to the corpus-wide
most frequent label for unseen forms, and to the identity lemma when a
label cannot be applied to the word at all; those decode failures are
counted, never raised.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import IO

from . import schemes
from .corpus_io import LabeledCorpus
from .errors import EmptyCorpus, LabelDecodeError
from .model import Corpus, Scheme, SesLabel


@dataclass(frozen=True, slots=True)
class BaselineModel:
    scheme: Scheme
    per_form: dict[str, str]  # lowercased form -> most frequent label text
    fallback: str             # corpus-wide most frequent label text


@dataclass(slots=True)
class PredictionStats:
    tokens: int = 0
    fallback_uses: int = 0
    decode_failures: int = 0


def train_baseline(labeled: LabeledCorpus) -> BaselineModel:
    """Ties break toward the lexicographically smallest label text."""
    by_form: dict[str, Counter[str]] = {}
    overall: Counter[str] = Counter()
    for sentence in labeled.sentences:
        for tok in sentence:
            key = tok.form.lower()
            by_form.setdefault(key, Counter())[tok.label.text] += 1
            overall[tok.label.text] += 1
    if not overall:
        raise EmptyCorpus("cannot train a baseline on zero labeled tokens")
    return BaselineModel(
        scheme=labeled.scheme,
        per_form={form: _majority(counts) for form, counts in by_form.items()},
        fallback=_majority(overall),
    )


def predict_lemma(model: BaselineModel, form: str) -> tuple[str, bool]:
    """Predict one lemma; returns (lemma, used_fallback)."""
    lemma, used_fallback, _ = _predict(model, form)
    return lemma, used_fallback


def predict_corpus(
    model: BaselineModel, corpus: Corpus, lemmatized_only: bool = False
) -> tuple[list[list[str]], PredictionStats]:
    """Predict lemmas sentence by sentence, aggregating failure counts.

    With lemmatized_only, tokens lacking a gold lemma are skipped so the
    output aligns with evaluation over gold-lemmatized tokens.
    """
    stats = PredictionStats()
    out: list[list[str]] = []
    for sentence in corpus.sentences:
        row: list[str] = []
        for tok in sentence.tokens:
            if lemmatized_only and tok.lemma is None:
                continue
            lemma, used_fallback, failed = _predict(model, tok.form)
            stats.tokens += 1
            stats.fallback_uses += used_fallback
            stats.decode_failures += failed
            row.append(lemma)
        out.append(row)
    return out, stats


def save_model(model: BaselineModel, fp: IO[str]) -> None:
    payload = {
        "scheme": model.scheme.value,
        "fallback": model.fallback,
        "per_form": model.per_form,
    }
    json.dump(payload, fp, ensure_ascii=False, sort_keys=True, indent=2)
    fp.write("\n")


def load_model(fp: IO[str]) -> BaselineModel:
    payload = json.load(fp)
    return BaselineModel(
        scheme=Scheme(payload["scheme"]),
        per_form=dict(payload["per_form"]),
        fallback=payload["fallback"],
    )


def _majority(counts: Counter[str]) -> str:
    return min(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def _predict(model: BaselineModel, form: str) -> tuple[str, bool, bool]:
    text = model.per_form.get(form.lower())
    used_fallback = text is None
    if used_fallback:
        text = model.fallback
    try:
        return schemes.decode(form, SesLabel(model.scheme, text)), used_fallback, False
    except LabelDecodeError:
        return form, used_fallback, True
