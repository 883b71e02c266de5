import json

import pytest

from hkbinomial import (
    Config,
    NotApplicableError,
    ResourceError,
    cross_check,
    hk,
    load_corpus,
    parse_binomial,
    render,
)

F1 = parse_binomial("x1^3 - x2^2", 5)


def test_auto_prefers_closed():
    rep = hk(F1, 5, 1)
    assert rep.value == 10
    assert rep.engine == "closed"
    assert rep.mmax_params is not None
    assert rep.classification["r"] == 1


def test_auto_falls_back_to_direct():
    f = parse_binomial("x1^3*x2 - x1*x2", 3)
    rep = hk(f, 3, 1)
    assert rep.value == 5
    assert rep.engine == "direct"
    assert any("not applicable" in note for note in rep.guard_notes)


def test_explicit_closed_large_n():
    rep = hk(F1, 5, 8, engine="closed")
    assert rep.value == 2 * 5**8 == 781250


def test_explicit_engine_errors_propagate():
    with pytest.raises(NotApplicableError):
        hk(parse_binomial("x1^3*x2 - x1*x2", 3), 3, 1, engine="closed")
    with pytest.raises(ResourceError):
        hk(F1, 5, 8, engine="oracle")


def test_auto_oracle_fallback():
    # shrink the direct budget so auto lands on the oracle
    f = parse_binomial("x1^3*x2 - x1*x2", 3)
    cfg = Config(enum_cap=5, oracle_cap=10**6)
    rep = hk(f, 3, 1, config=cfg)
    assert rep.engine == "oracle"
    assert rep.value == 5
    assert rep.oracle_stats is not None


def test_all_engines_exhausted():
    f = parse_binomial("x1^3*x2 - x1*x2", 3)
    with pytest.raises(ResourceError):
        hk(f, 3, 1, config=Config(enum_cap=5, oracle_cap=5))


def test_cross_check_agrees(corpus_small):
    report = cross_check((f, p, n) for f, p, n in corpus_small[:10])
    assert report.all_agree
    for entry in report.entries:
        assert entry["agree"]
        assert len(entry["values"]) >= 1


def test_cross_check_budget_skip_noted():
    cfg = Config(oracle_cap=5)
    report = cross_check([(F1, 5, 1)], cfg)
    entry = report.entries[0]
    assert "oracle" in entry["skipped"]
    assert {"closed", "direct"} <= set(entry["values"])
    assert entry["agree"]


def test_cross_check_empty():
    report = cross_check([])
    assert report.all_agree and report.entries == []


def test_cross_check_workers_deterministic(corpus_small):
    items = corpus_small[:8]
    seq = cross_check(items, Config(workers=1))
    par = cross_check(items, Config(workers=4))
    assert seq.entries == par.entries


def test_report_payload_deterministic():
    a = hk(F1, 5, 1).json_dict()
    b = hk(F1, 5, 1).json_dict()
    a.pop("timing")
    b.pop("timing")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["data"]["value"] == "10"


def test_load_corpus(tmp_path):
    path = tmp_path / "corpus.jsonl"
    lines = [
        json.dumps({"poly": render(F1), "p": 5, "n": 1}),
        "",
        json.dumps({"poly": "x1^3*x2 - x1*x2", "p": 3, "n": 2}),
    ]
    path.write_text("\n".join(lines) + "\n")
    items = load_corpus(str(path))
    assert len(items) == 2
    assert items[0][0] == F1
