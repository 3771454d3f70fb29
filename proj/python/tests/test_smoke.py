import pytest

import flowtri


def test_g27_analyze():
    g = flowtri.generate("gkn", 2, 7)
    r = flowtri.analyze(g, framing="paper-g27")
    s = r["summary"]
    assert (s["routes"], s["exceptional"], s["cliques"]) == (13, 3, 16)
    assert s["dcov"] == [1, 7, 7, 1]
    assert s["gorenstein"] and s["unimodal"]
    assert all(c["ok"] for c in r["checks"])


def test_contract_and_oracle_agree():
    full = flowtri.contract(flowtri.generate("car", 8), strip=True)["graph"]
    o = flowtri.oracle(full)
    assert o["hstar_polynomial"] == "1 + 10x + 20x^2 + 10x^3 + x^4"
    assert all(c["ok"] for c in o["checks"])


def test_edge_list_input():
    r = flowtri.framings("1 2\n1 2\n2 3\n2 3\n", enumerate=False)
    assert r["count"] == "4"


def test_errors():
    with pytest.raises(flowtri.FlowtriError, match="BadInput"):
        flowtri.contract("1 x\n")
    with pytest.raises(ValueError):
        flowtri.generate("nope", 1)


def test_fuzz_small():
    r = flowtri.fuzz(5, seed=3)
    assert r["graphs"] == 5
    assert all(c["ok"] for c in r["checks"])
