from hypothesis import given, strategies as st

from qtrace.coeff import ONE, ScalarLaurent, q_exponent, scalar_conj, scalar_mul, u_power

laurent = st.dictionaries(st.integers(-12, 12), st.integers(-50, 50), max_size=6).map(ScalarLaurent)


def test_inverse_pair():
    assert scalar_mul(u_power(1), u_power(-1)) == ONE


def test_difference_of_squares():
    a = ScalarLaurent({0: 1, 2: 1})
    b = ScalarLaurent({0: 1, 2: -1})
    assert a * b == ScalarLaurent({0: 1, 4: -1})


def test_q_for_n2_is_u8():
    assert u_power(q_exponent(2)) == ScalarLaurent({8: 1})


def test_conj_examples():
    assert scalar_conj(ONE) == ONE
    assert scalar_conj(u_power(3)) == u_power(-3)
    assert scalar_conj(ScalarLaurent({0: 1, 2: 1})) == ScalarLaurent({0: 1, -2: 1})


def test_no_zero_terms_stored():
    a = ScalarLaurent({1: 2, 3: 0}) + ScalarLaurent({1: -2})
    assert a.is_zero() and a.terms == {}


def test_big_coefficients_are_exact():
    a = ScalarLaurent({0: 10 ** 40})
    assert (a * a).terms == {0: 10 ** 80}


def test_json_pairs_round_trip():
    a = ScalarLaurent({-3: 7, 5: -2})
    assert a.to_pairs() == [[-3, "7"], [5, "-2"]]
    assert ScalarLaurent.from_pairs(a.to_pairs()) == a


def test_unit_inverse():
    assert (-u_power(4)).inverse() == -u_power(-4)


@given(laurent)
def test_conj_involution(a):
    assert scalar_conj(scalar_conj(a)) == a


@given(laurent, laurent, laurent)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurent, laurent)
def test_conj_is_ring_hom(a, b):
    assert scalar_conj(a * b) == scalar_conj(a) * scalar_conj(b)
    assert scalar_conj(a + b) == scalar_conj(a) + scalar_conj(b)
