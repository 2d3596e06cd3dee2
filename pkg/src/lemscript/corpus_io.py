"""Treebank ingestion, the proper-noun lemma adjustment, and labeled datasets.

Input is CoNLL-U: tab-separated 10-column rows, "#" comment lines, blank
lines between sentences, UTF-8. Multiword-range rows (ID contains "-")
and empty nodes (ID contains ".") are skipped; a LEMMA of "_" is treated
as absent. Labeled datasets serialize as 3-column TSV
(form<TAB>gold_lemma<TAB>label) with a blank line after each sentence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable

from . import schemes
from .casing import CaseClass, char_class, shift_upper
from .errors import FormatError, LemscriptError
from .model import Corpus, Scheme, Sentence, SesLabel, Token


@dataclass(frozen=True, slots=True)
class LabeledToken:
    form: str
    gold_lemma: str
    label: SesLabel


@dataclass(frozen=True, slots=True)
class LabeledCorpus:
    scheme: Scheme
    sentences: tuple[tuple[LabeledToken, ...], ...] = ()

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)


@dataclass(frozen=True, slots=True)
class LabelFailure:
    """One token whose label did not decode back to the gold lemma."""

    sentence_index: int  # 0-based sentence position
    token_index: int     # the token's 1-based index within its sentence
    reason: str


def parse_conllu(lines: Iterable[str], source_name: str = "") -> Corpus:
    sentences: list[Sentence] = []
    tokens: list[Token] = []
    comments: list[str] = []

    def flush() -> None:
        nonlocal tokens, comments
        if tokens:
            sentences.append(Sentence(tuple(tokens), tuple(comments)))
        tokens = []
        comments = []

    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) < 10:
            raise FormatError(lineno, f"expected 10 tab-separated columns, got {len(cols)}")
        token_id = cols[0]
        if "-" in token_id or "." in token_id:
            continue
        try:
            index = int(token_id)
        except ValueError:
            raise FormatError(lineno, f"non-numeric token id {token_id!r}") from None
        form = cols[1]
        if not form:
            raise FormatError(lineno, "empty FORM column")
        lemma = cols[2] if cols[2] != "_" else None
        upos = cols[3] if cols[3] != "_" else ""
        tokens.append(Token(form=form, lemma=lemma, upos=upos, index=index))
    flush()
    return Corpus(tuple(sentences), source_name)


def read_conllu(path: str, source_name: str | None = None) -> Corpus:
    with open(path, encoding="utf-8") as fp:
        return parse_conllu(fp, source_name if source_name is not None else path)


def write_conllu(corpus: Corpus, fp: IO[str]) -> None:
    """Emit one row per retained token; unknown columns as underscores."""
    for sentence in corpus.sentences:
        for comment in sentence.comments:
            fp.write(comment + "\n")
        for tok in sentence.tokens:
            fields = (
                str(tok.index),
                tok.form,
                tok.lemma if tok.lemma is not None else "_",
                tok.upos if tok.upos else "_",
                "_", "_", "_", "_", "_", "_",
            )
            fp.write("\t".join(fields) + "\n")
        fp.write("\n")


def adjust_propn_lemmas(corpus: Corpus) -> Corpus:
    """Uppercase the first character of lowercase-initial PROPN lemmas."""
    out = []
    for sentence in corpus.sentences:
        toks = []
        for tok in sentence.tokens:
            if (
                tok.upos == "PROPN"
                and tok.lemma
                and char_class(tok.lemma[0]) is CaseClass.LOWER
            ):
                tok = Token(
                    form=tok.form,
                    lemma=shift_upper(tok.lemma[0]) + tok.lemma[1:],
                    upos=tok.upos,
                    index=tok.index,
                )
            toks.append(tok)
        out.append(Sentence(tuple(toks), sentence.comments))
    return Corpus(tuple(out), corpus.source_name)


def label_corpus(
    corpus: Corpus, scheme: Scheme
) -> tuple[LabeledCorpus, list[LabelFailure]]:
    """Encode every lemmatized token; verify each label by decoding it back.

    Tokens whose label does not reproduce the gold lemma are recorded as
    failures instead of being included. Tokens without a lemma are
    skipped. Results are memoized per (form, lemma) pair, which is where
    the bulk of treebank-scale throughput comes from.
    """
    scheme = Scheme(scheme)
    cache: dict[tuple[str, str], tuple[SesLabel | None, str]] = {}
    failures: list[LabelFailure] = []
    out: list[tuple[LabeledToken, ...]] = []
    for sent_idx, sentence in enumerate(corpus.sentences):
        row: list[LabeledToken] = []
        for tok in sentence.tokens:
            if tok.lemma is None:
                continue
            key = (tok.form, tok.lemma)
            hit = cache.get(key)
            if hit is None:
                try:
                    label = schemes.encode(scheme, tok.form, tok.lemma)
                    decoded = schemes.decode(tok.form, label)
                    if decoded == tok.lemma:
                        hit = (label, "")
                    else:
                        hit = (None, f"decoded to {decoded!r} instead of gold lemma")
                except LemscriptError as exc:
                    hit = (None, f"{type(exc).__name__}: {exc}")
                cache[key] = hit
            label, reason = hit
            if label is None:
                failures.append(LabelFailure(sent_idx, tok.index, reason))
            else:
                row.append(LabeledToken(tok.form, tok.lemma, label))
        out.append(tuple(row))
    return LabeledCorpus(scheme, tuple(out)), failures


def write_labeled(labeled: LabeledCorpus, fp: IO[str]) -> None:
    for sentence in labeled.sentences:
        for tok in sentence:
            fp.write(f"{tok.form}\t{tok.gold_lemma}\t{tok.label.text}\n")
        fp.write("\n")


def parse_labeled(lines: Iterable[str], scheme: Scheme) -> LabeledCorpus:
    scheme = Scheme(scheme)
    sentences: list[tuple[LabeledToken, ...]] = []
    row: list[LabeledToken] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            if row:
                sentences.append(tuple(row))
                row = []
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise FormatError(lineno, f"expected 3 tab-separated columns, got {len(cols)}")
        form, lemma, label_text = cols
        if not label_text:
            raise FormatError(lineno, "empty label column")
        row.append(LabeledToken(form, lemma, SesLabel(scheme, label_text)))
    if row:
        sentences.append(tuple(row))
    return LabeledCorpus(scheme, tuple(sentences))


def failures_to_dicts(failures: list[LabelFailure]) -> list[dict[str, object]]:
    return [
        {
            "sentence_index": f.sentence_index,
            "token_index": f.token_index,
            "reason": f.reason,
        }
        for f in failures
    ]
