import json

import pytest

from ecourant.algebra import aff1
from ecourant.constructions import build_omni
from ecourant.corpus import corpus_documents
from ecourant.errors import DimensionGuardError
from ecourant.gcs import eigenbundle, build_omni_gcs, OmniGCSData
from ecourant.algebra import rotation, zero_tensor
from ecourant.io import (
    DocumentError, from_document, parse_document, serialize_document, to_document,
)

AFF1 = ('{"kind":"lie_algebra","dims":{"n":2},"tensors":{"bracket":'
        '[[["0","0"],["0","1"]],[["0","-1"],["0","0"]]]}}')


def test_parse_aff1():
    doc = parse_document(AFF1)
    assert doc.kind == "lie_algebra" and doc.scalar_field == "rational"
    assert from_document(doc).bracket == aff1().bracket
    assert len(doc.digest) == 64


def test_noncanonical_scalar_path():
    text = AFF1.replace('["0","1"]', '["0","4/6"]')
    with pytest.raises(DocumentError, match=r"non-canonical rational '4/6' at tensors\.bracket\[0\]\[1\]\[1\]"):
        parse_document(text)


@pytest.mark.parametrize("text,match", [
    ('{"kind": "lie_algebra", ', "malformed JSON.*line 1 column"),
    ('{"kind":"banana","dims":{},"tensors":{}}', "unknown kind 'banana'"),
    (AFF1.replace('"n":2', '"n":3'), r"extent mismatch.*tensors\.bracket"),
    (AFF1.replace('"0","1"', '"0",1'), r"schema violation.*tensors\.bracket"),
    (AFF1.replace('"n":2', '"m":2'), "missing dimension 'n'"),
    ('{"kind":"lie_algebra","dims":{"n":1},"tensors":{}}', "missing tensor 'bracket'"),
    (AFF1.replace('"tensors"', '"extra":1,"tensors"'), "schema violation"),
    (AFF1.replace('"0","1"', '"0","1i"'), "imaginary scalar"),
])
def test_parse_errors(text, match):
    with pytest.raises(DocumentError, match=match):
        parse_document(text)


def test_dimension_guard():
    text = '{"kind":"gcs","dims":{"k":70},"tensors":{"J":[]}}'
    with pytest.raises(DimensionGuardError):
        parse_document(text)


def test_round_trip_corpus():
    docs = corpus_documents()
    assert len(docs) > 60
    for name, doc in docs.items():
        text = serialize_document(doc)
        again = parse_document(text)
        assert serialize_document(again) == text, name
        assert again == doc, name


def test_canonical_key_order():
    text = serialize_document(parse_document(AFF1))
    assert list(json.loads(text)) == ["dims", "kind", "scalar_field", "tensors"]
    assert text.endswith("\n")


def test_gaussian_subspace_round_trip():
    C = build_omni(2)
    S = eigenbundle(C, build_omni_gcs(2, OmniGCSData(zero_tensor(2, 2, 2), rotation(2))))
    doc = to_document(S)
    assert doc.scalar_field == "gaussian"
    text = serialize_document(doc)
    assert from_document(parse_document(text)).same_span(S)


def test_structure_round_trip():
    C = build_omni(2)
    back = from_document(parse_document(serialize_document(to_document(C))))
    assert back == C
