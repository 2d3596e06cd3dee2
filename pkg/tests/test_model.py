import pytest

from conftest import corpus_of
from lemscript.model import Corpus, Scheme, Sentence, SesLabel, Token


def test_token_count_empty():
    assert Corpus().token_count == 0


def test_token_count_sums_sentences():
    pairs = [(f"w{k}", f"w{k}") for k in range(7)]
    corpus = corpus_of(pairs, sentence_size=3)  # sentences of 3, 3, 1
    assert corpus.sentence_count == 3
    assert corpus.token_count == 7


def test_label_text_must_be_non_empty():
    with pytest.raises(ValueError):
        SesLabel(Scheme.UDPIPE, "")


def test_scheme_values_are_closed():
    assert {s.value for s in Scheme} == {"udpipe", "ixapipes", "morpheus"}
    with pytest.raises(ValueError):
        Scheme("lemming")


def test_model_values_are_immutable():
    token = Token("cats", "cat", "NOUN", 1)
    with pytest.raises(AttributeError):
        token.form = "dogs"
    sentence = Sentence((token,))
    with pytest.raises(AttributeError):
        sentence.tokens = ()
