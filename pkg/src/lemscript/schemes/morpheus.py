"""Morpheus-style labels: one token per wordform character.

Label grammar (bit-exact):

    label := token ("|" token)*
    token := "s" | "d" | "l" | "r_" char+

The encoder aligns form to lemma case-sensitively, then folds every run
of inserts into its neighbouring token so the one-token-per-character
invariant holds even when the lemma is longer than the word: a preceding
same/replace token absorbs the inserted characters into a replace
payload, a preceding delete becomes a plain replace, and a run at the
very start is prepended into the first token. A replace that merely
lowercases its character is re-labelled "l".
"""

from __future__ import annotations

from ..alignment import DELETE, INSERT, MATCH, levenshtein_align
from ..casing import CaseClass, char_class, shift_lower
from ..errors import ArityMismatch, EmptyInput, ParseError, SchemeMismatch
from ..model import Scheme, SesLabel

TOKEN_SEP = "|"
SAME = "s"
DEL = "d"
LOWER = "l"
REPLACE_MARK = "r_"


def encode(form: str, lemma: str) -> SesLabel:
    if not form or not lemma:
        raise EmptyInput("form and lemma must be non-empty")
    if form == lemma:
        return SesLabel(Scheme.MORPHEUS, TOKEN_SEP.join(SAME * len(form)))

    # tokens[k] describes form[k]; (kind, payload), payload for "r" only
    tokens: list[tuple[str, str]] = []
    leading: list[str] = []  # insert run seen before any consuming op
    for op in levenshtein_align(form, lemma):
        if op.kind == INSERT:
            if tokens:
                tokens[-1] = _absorb_after(tokens[-1], form[len(tokens) - 1], op.b_char)
            else:
                leading.append(op.b_char)
            continue
        if op.kind == MATCH:
            token = (SAME, "")
        elif op.kind == DELETE:
            token = (DEL, "")
        else:
            token = ("r", op.b_char)
        if leading:
            token = _absorb_before(token, form[len(tokens)], "".join(leading))
            leading.clear()
        tokens.append(token)

    parts = []
    for pos, (kind, payload) in enumerate(tokens):
        if (
            kind == "r"
            and len(payload) == 1
            and char_class(form[pos]) is CaseClass.UPPER
            and payload == shift_lower(form[pos])
        ):
            parts.append(LOWER)
        elif kind == "r":
            parts.append(REPLACE_MARK + payload)
        else:
            parts.append(kind)
    return SesLabel(Scheme.MORPHEUS, TOKEN_SEP.join(parts))


def decode(form: str, label: SesLabel) -> str:
    if label.scheme is not Scheme.MORPHEUS:
        raise SchemeMismatch(f"expected morpheus label, got {label.scheme.value}")
    tokens = parse_label(label.text)
    if len(tokens) != len(form):
        raise ArityMismatch(
            f"label has {len(tokens)} tokens for a {len(form)}-character wordform"
        )
    out: list[str] = []
    for ch, (kind, payload) in zip(form, tokens):
        if kind == SAME:
            out.append(ch)
        elif kind == LOWER:
            out.append(shift_lower(ch))
        elif kind == "r":
            out.append(payload)
        # DEL emits nothing
    return "".join(out)


def parse_label(text: str) -> list[tuple[str, str]]:
    """Split a label into (kind, payload) pairs; payload for replaces only."""
    if not text:
        raise ParseError("empty morpheus label")
    tokens: list[tuple[str, str]] = []
    for raw in text.split(TOKEN_SEP):
        if raw in (SAME, DEL, LOWER):
            tokens.append((raw, ""))
        elif raw.startswith(REPLACE_MARK) and len(raw) > len(REPLACE_MARK):
            tokens.append(("r", raw[len(REPLACE_MARK) :]))
        else:
            raise ParseError(f"invalid morpheus token {raw!r}")
    return tokens


def _absorb_after(token: tuple[str, str], form_char: str, inserted: str) -> tuple[str, str]:
    kind, payload = token
    if kind == SAME:
        return ("r", form_char + inserted)
    if kind == "r":
        return ("r", payload + inserted)
    # delete followed by insert collapses to a replace
    return ("r", inserted)


def _absorb_before(token: tuple[str, str], form_char: str, inserted: str) -> tuple[str, str]:
    kind, payload = token
    if kind == SAME:
        return ("r", inserted + form_char)
    if kind == "r":
        return ("r", inserted + payload)
    return ("r", inserted)
