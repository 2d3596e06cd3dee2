from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import COMPARISON_LABELS, COMPARISON_PAIRS
from lemscript.errors import EmptyInput, LengthMismatch, ParseError, SchemeMismatch
from lemscript.model import Scheme, SesLabel
from lemscript.schemes import udpipe


@pytest.mark.parametrize(
    "form,lemma,expected", [(*p, e) for p, e in zip(COMPARISON_PAIRS, COMPARISON_LABELS["udpipe"])]
)
def test_published_labels(form, lemma, expected):
    assert udpipe.encode(form, lemma).text == expected


def test_absolute_label_when_nothing_is_shared():
    label = udpipe.encode("xyz", "абв")
    assert label.text == "aабв"
    assert udpipe.decode("xyz", label) == "абв"


def test_decode_fixtures():
    assert udpipe.decode("birds", SesLabel(Scheme.UDPIPE, "↓0;d¦-")) == "bird"
    assert udpipe.decode("You", SesLabel(Scheme.UDPIPE, "↓0;d¦")) == "you"


def test_decode_length_mismatch():
    label = SesLabel(Scheme.UDPIPE, "↓0;d¦--+o--+o")
    with pytest.raises(LengthMismatch):
        udpipe.decode("cat", label)


def test_scheme_guard():
    with pytest.raises(SchemeMismatch):
        udpipe.decode("cats", SesLabel(Scheme.MORPHEUS, "s|s|s|d"))


def test_identity_stability():
    # fully lowercase identity pairs share one copy-free, edit-free label
    assert udpipe.encode("the", "the").text == "↓0;d¦"
    assert udpipe.encode("road", "road").text == "↓0;d¦"


def test_length_insensitivity():
    assert udpipe.encode("cats", "cat").text == udpipe.encode("birds", "bird").text


def test_prefix_edits_and_copies():
    label = udpipe.encode("geсходить", "сходить")
    assert label.text == "↓0;d--¦"
    assert udpipe.decode("geсходить", label) == "сходить"
    # a shared prefix character forces copies into the script
    label = udpipe.encode("abXcats", "abYcat")
    assert udpipe.decode("abXcats", label) == "abYcat"
    assert "→" in label.text


def test_mixed_casing_roundtrip():
    for form, lemma in [
        ("McDonald", "McDonald"),
        ("IBM", "ibm"),
        ("çiçekler", "Çiçek"),
        ("ЖУКИ", "жук"),
        ("9abc", "9Abc"),
    ]:
        label = udpipe.encode(form, lemma)
        assert udpipe.decode(form, label) == lemma, (form, lemma, label.text)


def test_empty_input_rejected():
    with pytest.raises(EmptyInput):
        udpipe.encode("", "cat")
    with pytest.raises(EmptyInput):
        udpipe.encode("cats", "")


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "a",                # absolute without a lemma
        "x0;d¦",            # casing must open with an arrow
        "↓;d¦",             # segment without a position
        "↓0¦",              # casing never closed by ;d
        "↓0;x¦",            # wrong rule marker
        "↓0;d",             # no prefix/suffix separator
        "↓0;d¦¦¦",          # two separators
        "↓0;d+",            # dangling insert
        "↓0;dq¦",           # stray op character
    ],
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        udpipe.parse_label(bad)


def test_insert_payload_may_be_any_character():
    # a separator character is legal as an insert payload
    parsed = udpipe.parse_label("↓0;d+¦¦-")
    assert parsed.prefix_ops == (("ins", "¦"),)
    assert parsed.suffix_ops == (("del", ""),)


LETTERS = "abcdstzABCDSTZжуकिЖӰßİıçğşÇĞŞëË"
WORDS = st.text(alphabet=LETTERS, min_size=1, max_size=12)


@given(WORDS, WORDS)
def test_roundtrip_property(form, lemma):
    label = udpipe.encode(form, lemma)
    assert udpipe.decode(form, label) == lemma
