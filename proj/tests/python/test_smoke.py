import pytest

import lap

SC = lap.FIXTURE_DIR / "supercuspidal"
SA = lap.FIXTURE_DIR / "stable_arthur"


def test_validate_fixture():
    info = lap.validate(SC / "psi9.json")
    assert info["valid"]
    assert info["dimension"] == 9
    assert info["good_parity"]


def test_invalid_dimension():
    param = lap.load(SC / "psi9.json")
    param["group"]["dual_dim"] = 11
    with pytest.raises(ValueError):
        lap.validate(param)


def test_packet_of_single_block():
    data = lap.packet_data(SC / "psi1.json", nonzero_only=True)["data"]
    assert len(data) == 2


def test_nonvanishing_trace():
    v = lap.nonvanishing(SC / "pi_psi9.json", explain=True)
    assert v["verdict"] == "Nonzero"
    assert v["replay"] == "Nonzero"
    assert all("rule" in e for e in v["trace"])


def test_d_values():
    assert lap.compute_d(SC / "pi_psi4.json", -1) == 1
    assert lap.compute_d(SA / "pi_psi3.json", -1) == 5
    report = lap.adams_report(SA / "pi_psi3.json", -1)
    assert report["d"] == 5


def test_graph():
    params = [SC / f"psi{k}.json" for k in range(1, 10)]
    g = lap.psi_graph(params, filter=True)
    assert len(g["edges"]) == 12
    assert g["dot"].startswith("digraph")


def test_raising_from_psi9():
    moves = lap.raising_neighbors(SC / "psi9.json")["raising"]
    assert sorted(m["op"] for m in moves) == ["D", "D"]


def test_obstructions():
    hits = lap.obstructions(SC / "psi9.json")["obstructions"]
    assert sorted(h["predicted_zero_alpha"] for h in hits) == [3, 5]


def test_conservation():
    assert lap.conservation(4, 10) == 20
    assert lap.m_alpha(20, 10) == 9


def test_quick_acceptance():
    results = lap.run_acceptance(corpus_dim=5)
    assert [r["id"] for r in results] == list(range(1, 9))
    assert results[0]["pass"]
