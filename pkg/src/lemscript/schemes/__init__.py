"""Scheme registry: string-keyed dispatch over the three label schemes."""

from __future__ import annotations

from ..errors import SchemeMismatch
from ..model import Scheme, SesLabel
from . import ixapipes, morpheus, udpipe

_ENCODERS = {
    Scheme.UDPIPE: udpipe.encode,
    Scheme.IXAPIPES: ixapipes.encode,
    Scheme.MORPHEUS: morpheus.encode,
}

_DECODERS = {
    Scheme.UDPIPE: udpipe.decode,
    Scheme.IXAPIPES: ixapipes.decode,
    Scheme.MORPHEUS: morpheus.decode,
}


def encode(scheme: Scheme, form: str, lemma: str) -> SesLabel:
    """Encode a (form, lemma) pair under the given scheme."""
    return _ENCODERS[Scheme(scheme)](form, lemma)


def decode(form: str, label: SesLabel) -> str:
    """Apply a label to a wordform, dispatching on the label's scheme."""
    decoder = _DECODERS.get(label.scheme)
    if decoder is None:
        raise SchemeMismatch(f"unknown scheme {label.scheme!r}")
    return decoder(form, label)
