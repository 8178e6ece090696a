import itertools

import pytest

from rdpdescent import (ConsistencyError, HypersurfaceGerm, OrderingTag,
                        Ring, UsageError, aggregate_verdict, an_p_power,
                        invertible_summand, length_formula, parse_poly,
                        pi1_trivial, pic_torsion_p_group, run_battery,
                        shape_witness, theta_free, tjurina_p_divisible)
from rdpdescent.catalog import instantiate, table_records
from rdpdescent.criteria import (BLOCKED, DESCENDS, FAIL, NOT_APPLICABLE,
                                 PASS, SHAPE_WITNESS, UNDETERMINED,
                                 CriterionReport)

LOCAL = OrderingTag.LOCAL_NEG_DEGREVLEX


def germ_of(src, p=2, names=("x", "y", "z")):
    return HypersurfaceGerm(parse_poly(src, Ring(p, names, LOCAL)))


def catalog_germ(dynkin, n, r, p):
    return instantiate(dynkin, n, r, p).germ()


# -- Tjurina divisibility ------------------------------------------------------

def test_tjurina_e6_1_char3_fails():
    rep = tjurina_p_divisible(catalog_germ("E", 6, 1, 3))
    assert rep.status == FAIL and rep.witness["tjurina"] == 7


def test_tjurina_e8_4_char2_passes():
    rep = tjurina_p_divisible(catalog_germ("E", 8, 4, 2))
    assert rep.status == PASS and rep.witness["tjurina"] == 8


def test_tjurina_e8_1_char5_fails():
    rep = tjurina_p_divisible(catalog_germ("E", 8, 1, 5))
    assert rep.status == FAIL and rep.witness["tjurina"] == 8


def test_tjurina_not_applicable_for_nonisolated():
    rep = tjurina_p_divisible(germ_of("x*y"))
    assert rep.status == NOT_APPLICABLE


# -- length formula ---------------------------------------------------------------

def test_length_formula_e6_1_char2():
    rep = length_formula(catalog_germ("E", 6, 1, 2))
    assert rep.status == FAIL
    assert (rep.witness["len_jacobian"], rep.witness["len_bracket"]) == (6, 28)


def test_length_formula_e7_0_char2():
    rep = length_formula(catalog_germ("E", 7, 0, 2))
    assert rep.status == PASS
    assert (rep.witness["len_jacobian"], rep.witness["len_bracket"]) == (14, 56)


def test_length_formula_e8_2_char3():
    rep = length_formula(catalog_germ("E", 8, 2, 3))
    assert rep.status == FAIL
    assert (rep.witness["len_jacobian"], rep.witness["len_bracket"]) == (8, 85)


def test_length_formula_exponent_uses_germ_dimension():
    # one variable: d = 0, so the formula reads l(bracket) = l(jacobian)... p^0
    g = germ_of("x^3", p=3, names=("x",))
    rep = length_formula(g)
    assert rep.witness["expected"] == rep.witness["len_jacobian"] * 3 ** g.dim


# -- theta freeness -----------------------------------------------------------------

def test_theta_free_matches_table_column():
    rep = theta_free(catalog_germ("E", 8, 2, 2))
    assert rep.status == PASS and rep.witness["len_bracket"] == 48
    rep = theta_free(catalog_germ("E", 8, 3, 2))
    assert rep.status == FAIL
    rep = theta_free(catalog_germ("E", 6, None, 5))
    assert rep.status == FAIL and rep.witness["len_bracket"] == 173


def test_theta_free_equals_length_formula_statuswise():
    for rec in table_records():
        g = rec.germ()
        assert theta_free(g).status == length_formula(g).status


# -- invertible summand ---------------------------------------------------------------

def test_summand_e7_1_fails_with_three_modes():
    rep = invertible_summand(catalog_germ("E", 7, 1, 2))
    assert rep.status == FAIL
    assert rep.witness["failures"]["x"] == "not a parameter ideal"
    assert rep.witness["failures"]["y"] == "omitted partial not a member"
    assert rep.witness["failures"]["z"] == "omitted partial not a member"


def test_summand_d4_1_fails():
    rep = invertible_summand(catalog_germ("D", 4, 1, 2))
    assert rep.status == FAIL


def test_summand_d4_0_passes_omitting_z():
    rep = invertible_summand(catalog_germ("D", 4, 0, 2))
    assert rep.status == PASS and rep.witness["omitted"] == "z"


def test_summand_permutation_invariant():
    # relabeling the variables never changes PASS/FAIL
    for dynkin, n, r, p in (("E", 7, 1, 2), ("E", 8, 0, 2), ("D", 5, 1, 2)):
        g = catalog_germ(dynkin, n, r, p)
        base = invertible_summand(g).status
        for perm in itertools.permutations(range(3)):
            permuted = HypersurfaceGerm(g.f.rename(perm))
            assert invertible_summand(permuted).status == base


def test_summand_not_applicable_cases():
    assert invertible_summand(germ_of("x*y")).status == NOT_APPLICABLE
    assert invertible_summand(germ_of("x^2+y^2", names=("x", "y"))).status == NOT_APPLICABLE


# -- arithmetic criteria -----------------------------------------------------------------

def test_an_p_power():
    assert an_p_power(7, 2).status == PASS
    assert an_p_power(7, 2).witness["q"] == 8
    assert an_p_power(5, 2).status == FAIL
    assert an_p_power(4, 5).status == PASS
    with pytest.raises(UsageError):
        an_p_power(0, 2)


def test_pic_torsion():
    assert pic_torsion_p_group(4, 3).status == FAIL
    assert pic_torsion_p_group(3, 3).status == PASS
    assert pic_torsion_p_group(1, 2).status == PASS
    assert pic_torsion_p_group(4, 2).status == PASS
    assert pic_torsion_p_group(6, 2).status == FAIL


def test_pi1_trivial():
    assert pi1_trivial("C3").status == FAIL
    assert pi1_trivial("0").status == PASS
    assert pi1_trivial("C5").status == FAIL
    assert pi1_trivial(None).status == NOT_APPLICABLE


# -- shape witness ------------------------------------------------------------------------

def test_shape_e8_0():
    rep = shape_witness(catalog_germ("E", 8, 0, 2))
    assert rep.status == PASS
    assert rep.witness == {"variable": "z", "q": 2}


def test_shape_an_family():
    for e in (1, 2, 3):
        g = germ_of(f"z^{2 ** e}-x*y")
        rep = shape_witness(g)
        assert rep.status == PASS and rep.witness["q"] == 2 ** e


def test_shape_d_odd_fails_despite_descending():
    # D_(2m+1)^0 has a linear z-monomial, so the shape test cannot see it
    rep = shape_witness(catalog_germ("D", 5, 0, 2))
    assert rep.status == FAIL


def test_shape_explicit_q():
    g = germ_of("z^4+x^2*y")
    assert shape_witness(g, q=4).status == PASS
    assert shape_witness(g, q=2).status == FAIL
    with pytest.raises(UsageError):
        shape_witness(g, q=6)


def test_shape_char3_e6_0():
    rep = shape_witness(catalog_germ("E", 6, 0, 3))
    assert rep.status == PASS
    assert rep.witness == {"variable": "x", "q": 3}


def test_shape_rejects_linear_tail():
    assert shape_witness(germ_of("z^2+x")).status == FAIL


# -- aggregation ----------------------------------------------------------------------------

def test_aggregate_e8_3_blocked():
    _, verdict = run_battery(catalog_germ("E", 8, 3, 2))
    assert verdict.outcome == BLOCKED
    assert any(r.id == "LENGTH_FORMULA" for r in verdict.reasons)


def test_aggregate_e7_1_blocked_by_summand():
    rec = instantiate("E", 7, 1, 2)
    reports, verdict = run_battery(rec.germ(), record=rec)
    by_id = {r.id: r.status for r in reports}
    assert by_id["PI1_TRIVIAL"] == PASS
    assert by_id["TJURINA_P_DIVISIBLE"] == PASS
    assert by_id["LENGTH_FORMULA"] == PASS
    assert by_id["INVERTIBLE_SUMMAND"] == FAIL
    assert verdict.outcome == BLOCKED


def test_aggregate_d9_0_descends_from_catalog_fact():
    rec = instantiate("D", 9, 0, 2)
    _, verdict = run_battery(rec.germ(), record=rec)
    assert verdict.outcome == DESCENDS


def test_aggregate_never_descends_from_necessary_passes():
    # every necessary criterion passes, but nothing sufficient does
    g = germ_of("z^2+x^2*y+y^2*z")  # D_5^0 without its catalog record
    reports, verdict = run_battery(g)
    assert all(r.status != FAIL for r in reports if r.id != SHAPE_WITNESS)
    assert verdict.outcome == UNDETERMINED


def test_aggregate_contradiction_raises():
    bad = [CriterionReport("LENGTH_FORMULA", FAIL, {"len_jacobian": 1}),
           CriterionReport(SHAPE_WITNESS, PASS, {"variable": "z", "q": 2})]
    with pytest.raises(ConsistencyError):
        aggregate_verdict(bad)
    with pytest.raises(ConsistencyError):
        aggregate_verdict([CriterionReport("PI1_TRIVIAL", FAIL, {"group": "C3"})],
                          catalog_fact=DESCENDS)


def test_fail_reports_must_carry_witnesses():
    with pytest.raises(ConsistencyError):
        CriterionReport("PI1_TRIVIAL", FAIL)


def test_short_circuit_stops_at_first_failure():
    rec = instantiate("E", 6, 1, 2)
    reports, verdict = run_battery(rec.germ(), record=rec, short_circuit=True)
    assert verdict.outcome == BLOCKED
    assert reports[-1].status == FAIL
    assert len(reports) < 8


def test_battery_on_user_equation_has_na_group_criteria():
    reports, verdict = run_battery(germ_of("z^2+x^3+y^5"))
    by_id = {r.id: r.status for r in reports}
    assert by_id["PI1_TRIVIAL"] == NOT_APPLICABLE
    assert by_id["PIC_TORSION_P_GROUP"] == NOT_APPLICABLE
    assert by_id["AN_P_POWER"] == NOT_APPLICABLE
    assert verdict.outcome == DESCENDS  # shape witness carries it
