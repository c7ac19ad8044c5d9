import pytest

from degpow.claims import CLAIMS, ClaimError, is_complete_multipartite, verify_claim
from degpow.constructions import complete_multipartite, cycle, friendship, turan
from degpow.counting import degree_power_sum


def test_kin_example():
    rep = verify_claim("kin", 6, 4)
    assert rep.passed and not rep.counterexamples and rep.checked > 0
    assert rep.values["e_r(F_n)"] == degree_power_sum(friendship(6), 4) == 690


def test_stars_i_example():
    rep = verify_claim("stars_i", 6, 3)
    assert rep.passed and rep.checked > 0


def test_turan_baseline_example():
    rep = verify_claim("turan_baseline", 7, 1)
    assert rep.passed
    assert rep.values["ex(n,K3)"] == 12 and rep.values["T(n,2)_is_witness"]


@pytest.mark.parametrize("n", [5, 6, 7])
@pytest.mark.parametrize("r", [2, 3])
def test_prop_small(n, r):
    assert verify_claim("prop_small", n, r).passed


@pytest.mark.parametrize("claim", ["stars_ii_desk", "kovik_ii_desk", "labe_ii_desk", "labe_iii_desk", "labe_i_desk"])
@pytest.mark.parametrize("n", [5, 6])
def test_desk_claims_complete(claim, n):
    rep = verify_claim(claim, n, 3)
    assert rep.desk and rep.passed
    if "construction_value" in rep.values:
        assert rep.values["construction_value"] <= rep.values["brute_optimum"]
        assert rep.values["deficit"] >= 0


def test_stars_ii_desk_equality_small():
    for n in (5, 6, 7):
        rep = verify_claim("stars_ii_desk", n, 3)
        assert rep.values["equal"]


def test_kovik_infeasible_is_reported():
    rep = verify_claim("kovik_ii_desk", 5, 4, s=2, t=3)
    assert rep.passed
    assert rep.values["construction"] == "infeasible at this n"


def test_claim_errors():
    with pytest.raises(ClaimError):
        verify_claim("nonsense", 5)
    with pytest.raises(ClaimError):
        verify_claim("kin", 1)
    with pytest.raises(ClaimError):
        verify_claim("kin", 5, 0)
    with pytest.raises(ClaimError):
        verify_claim("kovik_ii_desk", 6, 3, s=3, t=2)
    assert {"kin", "stars_i", "prop_small", "turan_baseline", "kovik_ii_desk", "stars_ii_desk",
            "labe_iii_desk"} <= set(CLAIMS)


def test_multipartite_recognition():
    assert is_complete_multipartite(complete_multipartite([1, 2, 3]))
    assert is_complete_multipartite(turan(7, 3))
    assert not is_complete_multipartite(cycle(5))
    assert not is_complete_multipartite(friendship(5))


def test_report_record_is_serialisable():
    import json

    rec = verify_claim("kin", 5, 5).to_record()
    assert json.loads(json.dumps(rec)) == rec
    assert rec["passed"] is True and rec["counterexamples"] == []
