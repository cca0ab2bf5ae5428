from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxcurve.bounds import (
    BoundReport,
    castelnuovo_c0,
    castelnuovo_epsilon,
    castelnuovo_upper,
    classification_notes,
    conjecture_excludes,
    conjecture_gap,
    conjecture_interval_violations,
    deg_frobenius,
    deg_ramification,
    dimension_genus_bound,
    frobenius_genus_bound,
    ft1_bound,
    halphen_c1,
    halphen_degree_threshold,
    halphen_epsilon,
    halphen_p3_applies,
    ihara_bound,
    known_examples,
    known_spectrum,
    ramification_genus_bound,
    third_bound,
    trichotomy_classify,
    uniform_order_genus,
)
from maxcurve.curves import family_genus, family_instances
from maxcurve.field_core import is_prime_power

PRIME_POWERS = [q for q in range(2, 65) if is_prime_power(q)]


def brute_c0(d, r):
    """Oracle: Castelnuovo's number from its defining division d-1 = m(r-1) + eps."""
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) // 2 * (r - 1) + m * eps


@pytest.mark.parametrize("d,r,c0,eps", [(8, 3, 9, 1), (6, 2, 10, 0), (12, 4, 15, 2)])
def test_c0_examples(d, r, c0, eps):
    assert castelnuovo_c0(d, r) == c0
    assert castelnuovo_epsilon(d, r) == eps


@pytest.mark.parametrize("d,r,c1,eps1", [(8, 3, 7, 1), (12, 4, 13, 3), (10, 3, 12, 0)])
def test_c1_examples(d, r, c1, eps1):
    assert halphen_c1(d, r) == c1
    assert halphen_epsilon(d, r) == eps1


def test_c0_matches_division_oracle():
    for r in range(2, 12):
        for d in range(r, 80):
            assert castelnuovo_c0(d, r) == brute_c0(d, r)


def test_preconditions():
    for bad in [(2, 3), (5, 1)]:
        with pytest.raises(ValueError):
            castelnuovo_c0(*bad)
    for bad in [(8, 2), (2, 3)]:
        with pytest.raises(ValueError):
            halphen_c1(*bad)
    with pytest.raises(ValueError):
        ihara_bound(6)
    with pytest.raises(ValueError):
        castelnuovo_upper(5, 1)


def test_castelnuovo_upper_examples():
    assert castelnuovo_upper(8, 3) == 9
    assert castelnuovo_upper(12, 4) == 15
    assert castelnuovo_upper(3, 2) == 1


def test_castelnuovo_upper_dominates():
    for r in range(3, 50):
        for d in range(r + 1, 51):
            assert castelnuovo_upper(d, r) >= castelnuovo_c0(d, r)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_bound_identities(q):
    assert castelnuovo_c0(q + 1, 2) == ihara_bound(q) == q * (q - 1) // 2
    assert castelnuovo_c0(q + 1, 3) == ft1_bound(q)
    if q >= 3:
        assert halphen_c1(q + 1, 3) == third_bound(q)
    assert dimension_genus_bound(q, 2) == ihara_bound(q)
    assert dimension_genus_bound(q, 3) == Fraction((q - 1) ** 2, 4)


def test_halphen_two_formulas_agree():
    for d in range(3, 66):
        assert halphen_c1(d, 3) == (d * d - 3 * d + 6) // 6


def test_top_three():
    assert (ihara_bound(5), ft1_bound(5), third_bound(5)) == (10, 4, 4)
    assert (ihara_bound(8), ft1_bound(8), third_bound(8)) == (28, 12, 10)
    assert (ihara_bound(2), ft1_bound(2), third_bound(2)) == (1, 0, 1)


@pytest.mark.parametrize("q,g,tag", [(8, 11, "excluded"), (8, 12, "equals_second"), (4, 6, "equals_hermitian"),
                                     (7, 7, "below_third"), (7, 8, "excluded"), (7, 9, "equals_second"),
                                     (7, 21, "equals_hermitian"), (7, 22, "excluded"), (5, 5, "excluded"),
                                     (5, 4, "equals_second"), (3, 2, "excluded"), (2, 1, "equals_hermitian")])
def test_trichotomy(q, g, tag):
    assert trichotomy_classify(q, g).tag == tag


def test_trichotomy_table_mode():
    assert trichotomy_classify(5, 3).from_table
    assert not trichotomy_classify(7, 3).from_table
    assert known_spectrum(4) == {0, 1, 2, 6}
    with pytest.raises(ValueError):
        known_spectrum(7)
    with pytest.raises(ValueError):
        trichotomy_classify(9, -1)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_known_genera_are_never_excluded(q):
    genera = {e.genus for e in known_examples(q)} | {family_genus(f) for f in family_instances(q)}
    for g in genera:
        assert not trichotomy_classify(q, g).excluded, (q, g)


def test_known_examples_congruences():
    genera = {e.genus for e in known_examples(11)}
    assert (11 * 11 - 11 - 2) // 6 in genera
    assert (11 - 1) * (11 - 3) // 8 in genera
    # (q-1)(q-2)/6 is only listed off q = 1 mod 3, and the q = 2 mod 3 family only on it
    labels = {e.label for e in known_examples(7)}
    assert not any("(q-1)(q-2)/6" in s or "(q^2-q-2)/6" in s for s in labels)
    assert not any("mod 4" in s for s in {e.label for e in known_examples(2)})


def test_conjecture():
    assert conjecture_gap(7, 3) == (7, 9)
    assert conjecture_excludes(7, 8, 3)
    assert not conjecture_excludes(7, 9, 3)
    assert conjecture_gap(11, 4) == (13, 15)
    assert conjecture_excludes(11, 14, 4)
    lo, hi = conjecture_gap(5, 3)
    assert lo >= hi - 1 and not any(conjecture_excludes(5, g, 3) for g in range(20))
    with pytest.raises(ValueError):
        conjecture_gap(2, 3)


def test_conjecture_interval_violations_only_at_small_q():
    bad = conjecture_interval_violations(64)
    assert all(q <= 11 for q, *_ in bad)
    assert (5, 3, 4, 4) in bad


def test_degree_formulas():
    assert deg_ramification((0, 1, 2), 1, 3) == 9
    assert deg_ramification((0, 1, 3), 3, 4) == 28
    assert deg_ramification((0, 1), 0, 1) == 0
    assert deg_frobenius((0, 2), 1, 3, 4) == 18
    assert deg_frobenius((0, 1), 0, 1, 2) == 2
    for bad in [(0, 2, 3), (1, 2), (0, 1, 1)]:
        with pytest.raises(ValueError):
            deg_ramification(bad, 1, 3)
    with pytest.raises(ValueError):
        deg_frobenius((1, 2), 1, 3, 4)
    with pytest.raises(ValueError):
        deg_frobenius((0, 2), 1, 3, 6)


def test_ramification_genus_bound():
    assert ramification_genus_bound((0, 1, 2, 11), 11) == 17
    assert ramification_genus_bound((0, 1, 2, 7), 7) == Fraction(19, 3)
    assert ramification_genus_bound((0, 1, 3), 3) == 3
    with pytest.raises(ValueError):
        ramification_genus_bound((0, 1, 5), 7)


@pytest.mark.parametrize("q", [7, 8, 9, 11, 13, 16, 17])
def test_ramification_bound_closed_form(q):
    # orders (0, 1, 2, q) force g >= (q^2 - 2q + 3)/6
    assert ramification_genus_bound((0, 1, 2, q), q) == Fraction(q * q - 2 * q + 3, 6)


@pytest.mark.parametrize("q", [7, 8, 9, 11, 13, 16, 17, 19])
def test_frobenius_bound_closed_forms(q):
    # weight 4 and weight 6 versions of the same Frobenius-divisor count
    assert frobenius_genus_bound((0, 1, q), q, 4) == 1 + Fraction((q + 1) * (q * q - 4 * q - 1), 2 * (3 * q - 1))
    assert frobenius_genus_bound((0, 1, q), q, 6) == 1 + Fraction((q + 1) * (q * q - 6 * q - 3), 2 * (5 * q - 1))
    # either way the genus (q-1)(q-2)/6 is incompatible
    assert frobenius_genus_bound((0, 1, q), q, 6) < Fraction((q - 1) * (q - 2), 6)
    with pytest.raises(ValueError):
        frobenius_genus_bound((0, 1, q), q, 0)


def test_uniform_order_genus():
    assert uniform_order_genus(3, 5) == 3
    assert uniform_order_genus(5, 11) == Fraction(23, 5)
    for q in range(5, 40):
        assert uniform_order_genus(4, q) == Fraction(q * q - 3 * q + 8, 12)
        assert uniform_order_genus(3, q) == Fraction(q * q - 2 * q + 3, 6)
    with pytest.raises(ValueError):
        uniform_order_genus(1, 5)


def test_dimension_genus_bound():
    assert dimension_genus_bound(13, 5) == Fraction(121, 8)
    assert dimension_genus_bound(13, 5) >= 15


@given(st.integers(2, 60), st.integers(0, 40))
def test_dimension_bound_is_castelnuovo_upper(N, extra):
    q = N + extra
    assert dimension_genus_bound(q, N) == castelnuovo_upper(q + 1, N)


def test_classification_notes():
    assert classification_notes(13, 22) == ["non-existent"]
    assert classification_notes(16, 35) == ["non-existent"]
    assert classification_notes(11, 15) == ["unique curve: AS(q,(q+1)/3)"]
    assert classification_notes(7, 5) == []
    assert "unique curve: hermitian" in classification_notes(9, 36)
    assert "unique curve: AS(q,5)" in classification_notes(9, 16)
    assert any("fermat-half" in n for n in classification_notes(17, 28))


def test_metadata():
    assert halphen_degree_threshold(3) == 108
    assert halphen_degree_threshold(7) == 288
    assert halphen_degree_threshold(9) == 1024
    assert halphen_p3_applies(17) and not halphen_p3_applies(20) and halphen_p3_applies(25)
    assert halphen_p3_applies(8, positive_char=False) and not halphen_p3_applies(6)


def test_bound_report():
    rep = BoundReport(7, 3, 8)
    assert (rep.c0, rep.eps, rep.c1, rep.eps1, rep.ihara) == (9, 1, 7, 1, 21)
    assert rep.trichotomy == "excluded" and rep.conjecture_excludes
    d = rep.to_dict()
    assert d["castelnuovo_upper"] == "9"
    rep2 = BoundReport(7, 2)
    assert rep2.c1 is None and rep2.trichotomy is None


@given(st.sampled_from(PRIME_POWERS), st.integers(2, 6))
def test_report_invariants(q, r):
    if r > q + 1:
        return
    rep = BoundReport(q, r)
    assert 0 <= rep.eps <= r - 2
    assert rep.eps1 is None or 0 <= rep.eps1 <= r - 1
    assert min(rep.c0, rep.ihara, rep.ft1, rep.third, rep.castelnuovo_upper) >= 0
