import pytest

import tannaka


def test_reconstruct_z2_characters():
    r = tannaka.reconstruct(tannaka.fixture("z2_characters"))
    assert r["ok"]
    assert r["dim"] == 2
    assert len(r["characters"]["elements"]) == 2


def test_validate_reports_broken_relation():
    r = tannaka.validate(tannaka.fixture("z2_broken"))
    assert not r["ok"]
    failed = [c["name"] for c in r["checks"] if not c["pass"]]
    assert failed == ["functor: relation 0: [g,g] = []@x"]


def test_field_override():
    r = tannaka.nat(tannaka.fixture("z2_regular"), field="Fp:3")
    assert r["field"] == "Fp:3"
    assert r["quotient_dim"] == r["nat_dim"] == 2


def test_rho_tilde_comatrix():
    r = tannaka.rho_tilde(tannaka.fixture("comatrix2"))
    assert r["rank"] == 4 and r["injective"] and r["surjective"]


def test_coherence():
    assert tannaka.coherence_equal("(swap[X,Y;0] ; swap[Y,X;0])", "id[X,Y]")
    assert not tannaka.coherence_equal("swap[X,X;0]", "id[X,X]")
    assert tannaka.permutation("swap[X,Y,Z;1]") == [0, 2, 1]
    assert tannaka.eval_in_vec("swap[X,Y;0]", {"X": 1, "Y": 2}) == [["1", "0"], ["0", "1"]]
    r = tannaka.coherence("swap[X,X;0]", "id[X,X]", {"X": 1})
    assert not r["ok"] and r["matrices_equal"]


def test_errors():
    with pytest.raises(tannaka.ParseError):
        tannaka.validate("{ not json")
    with pytest.raises(tannaka.InvalidInput):
        tannaka.rho_tilde(tannaka.fixture("z2_regular"))
    with pytest.raises(ValueError):
        tannaka.coherence("swap[X,Y;0]", "id[X,Y]")
