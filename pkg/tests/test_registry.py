import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhecke.identities import hecke
from qhecke.identities.registry import REGISTRY, IdentitySpec, VerifyReport, get_identity, verify, verify_named
from qhecke.rings import LAURENT, LaurentA
from qhecke.series import QSeries

NAMES = [
    "thm1.1-even", "thm1.1-odd", "cor-even", "cor-odd", "cor-residue-1", "cor-residue-3",
    "cor-i-vanish", "cor-i-companion", "cor-rho-even", "cor-rho-odd", "cor-omega-even", "cor-omega-odd",
    "lemma-pentagonal-closed", "lemma-pentagonal-recurrence", "lemma-tail-coeff",
    "eq-macmahon", "eq-finite-jacobi-a", "eq-bailey-pair", "eq-gamma", "eq-master", "eq-er-tail",
]


def test_registry_names():
    assert list(REGISTRY) == NAMES


def test_default_orders():
    assert get_identity("thm1.1-even").default_order == 200
    assert get_identity("lemma-pentagonal-closed").default_order == 150


def test_unknown_identity():
    with pytest.raises(KeyError):
        get_identity("bogus")


@pytest.mark.parametrize("name", NAMES)
def test_every_identity_matches_at_60(name):
    report = verify_named(name, 60)
    assert report.status == "match", str(report)
    assert report.first_mismatch is None


def test_order_one():
    r = verify_named("thm1.1-even", 1)
    assert r.ok


def test_nonpositive_order():
    with pytest.raises(ValueError):
        verify_named("cor-even", 0)


def test_residue_one_at_400():
    assert verify_named("cor-residue-1", 400).ok


def _perturbed_rhs_even(order):
    # flip the sign of the whole n = 1 term: -q^10 (1 + q^6) (1 - (a^2 + a^-2) q^-2)
    n1 = QSeries.from_dict({10: -1, 16: -1}, LAURENT) * QSeries.from_dict(
        {0: 1, -2: -LaurentA.from_dict({2: 1, -2: 1})}, LAURENT
    )
    return hecke.rhs_even(order) - 2 * n1


def test_perturbed_rhs_mismatch():
    spec = get_identity("thm1.1-even")
    bad = IdentitySpec("perturbed", "LAURENT", "sign of n=1 flipped", spec.lhs, _perturbed_rhs_even)
    r = verify(bad, 100)
    assert r.status == "mismatch"
    # the deepest exponent of the n = 1 term is 6 + 4 - 2 = 8, from j = +-1
    assert r.first_mismatch["exponent"] == 8
    lhs = LAURENT.parse(r.first_mismatch["lhs"])
    rhs = LAURENT.parse(r.first_mismatch["rhs"])
    assert lhs == -rhs == LaurentA.from_dict({2: 1, -2: 1})


def test_builder_failure_is_reported():
    def boom(order):
        raise RuntimeError("kaput")

    r = verify(IdentitySpec("broken", "ZZ", "", boom, boom), 10)
    assert r.status == "error" and "kaput" in r.message


def test_report_invariants():
    with pytest.raises(ValueError):
        VerifyReport("x", "ZZ", 5, "match", {"exponent": 1, "lhs": "0", "rhs": "1"})
    with pytest.raises(ValueError):
        VerifyReport("x", "ZZ", 5, "mismatch")
    with pytest.raises(ValueError):
        VerifyReport("x", "ZZ", 5, "maybe")


reports = st.one_of(
    st.builds(VerifyReport, st.text(min_size=1), st.sampled_from(["ZZ", "LAURENT"]), st.integers(1, 999),
              st.just("match"), st.none(), st.integers(0, 10**6)),
    st.builds(VerifyReport, st.text(min_size=1), st.just("ZZ"), st.integers(1, 999), st.just("mismatch"),
              st.fixed_dictionaries({"exponent": st.integers(-50, 50), "lhs": st.text(), "rhs": st.text()}),
              st.integers(0, 10**6)),
)


@given(reports)
def test_report_json_round_trip(r):
    text = r.to_json()
    back = VerifyReport.from_json(text)
    assert back == r
    assert json.loads(back.to_json()) == json.loads(text)
