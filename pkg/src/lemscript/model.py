"""Shared data model: tokens, sentences, corpora, scheme ids and labels.

Everything here is immutable value data; instances are safe to share
between threads and processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Scheme(str, Enum):
    """The three supported edit-script label schemes."""

    UDPIPE = "udpipe"
    IXAPIPES = "ixapipes"
    MORPHEUS = "morpheus"


@dataclass(frozen=True, slots=True)
class SesLabel:
    """A textual edit-script label tagged with its scheme."""

    scheme: Scheme
    text: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("label text must be non-empty")


@dataclass(frozen=True, slots=True)
class Token:
    form: str                 # surface wordform, never empty
    lemma: str | None = None  # gold lemma; None when the treebank masks it
    upos: str = ""            # universal POS tag, "" when absent
    index: int = 1            # 1-based position within the sentence


@dataclass(frozen=True, slots=True)
class Sentence:
    tokens: tuple[Token, ...]
    comments: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Corpus:
    sentences: tuple[Sentence, ...] = ()
    source_name: str = ""

    @property
    def token_count(self) -> int:
        """Total retained tokens across all sentences."""
        return sum(len(s.tokens) for s in self.sentences)

    @property
    def sentence_count(self) -> int:
        return len(self.sentences)
