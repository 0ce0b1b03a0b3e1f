import json

import pytest

import hypershell as hs


def test_fixture_round_trip():
    text = hs.fixture("tetrahedron")
    assert hs.document_kind(text) == "shell"
    assert hs.is_closed(text)
    assert hs.fixture("tetrahedron") == text


def test_close_open_shell():
    fan = hs.fixture("triangle-fan")
    assert not hs.is_closed(fan)
    closed = hs.close(fan)
    assert hs.is_closed(closed)
    assert hs.document_kind(closed) == "shell"


def test_canonical_code_ignores_child_order():
    doc = json.loads(hs.fixture("tetrahedron"))
    code = hs.canonical_code(json.dumps(doc))
    # Swapping two children and fixing up the link keeps the shell isomorphic.
    n = len(doc["children"])
    perm = list(range(n))[::-1]
    doc["children"] = [doc["children"][perm[i]] for i in range(n)]
    inv = {perm[i]: i for i in range(n)}
    for pair in doc["link"]:
        pair["a"][0] = inv[pair["a"][0]]
        pair["b"][0] = inv[pair["b"][0]]
    assert hs.canonical_code(json.dumps(doc)) == code


def test_monad_laws():
    passed, cases, issues = hs.monad_laws(dim=1, cases=20, seed=4)
    assert (passed, cases, issues) == (20, 20, [])


def test_lafont():
    r = hs.lafont("mul", 2, 2)
    assert r["result"] == 4 and r["normal"]
    assert hs.document_kind(r["trace"]) == "trace"
    for seed in range(3):
        assert hs.lafont("add", 3, 2, strategy="random", seed=seed)["result"] == 5


def test_weak_model():
    model = hs.fixture("poset-chain-4")
    report = hs.weak_check(model)
    assert all(v == [] for v in report.values())
    cat = hs.derive_category(model)
    assert cat["issues"] == []
    assert len(cat["identity"]) == len(cat["objects"]) == 4


def test_render():
    dot = hs.render_dot(hs.fixture("tetrahedron"), "link", 2)
    assert dot.startswith("digraph")


def test_errors():
    with pytest.raises(hs.SyntaxError):
        hs.document_kind("{")
    with pytest.raises(hs.SchemaError):
        hs.document_kind('{"kind": "shell", "version": 1}')
    bad = json.loads(hs.fixture("tetrahedron"))
    bad["children"][0]["dim"] = 7
    with pytest.raises(hs.InvalidDocument):
        hs.document_kind(json.dumps(bad))
    with pytest.raises(ValueError):
        hs.fixture("no-such-fixture")
