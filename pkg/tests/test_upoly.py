import pytest

from linkfloer.upoly import UPoly, upoly_arith


def P(*exps):
    return UPoly(exps)


def test_char_two_addition():
    one_plus_u = P(0, 1)
    assert one_plus_u + one_plus_u == UPoly.zero()


def test_frobenius_square():
    one_plus_u = P(0, 1)
    assert one_plus_u * one_plus_u == P(0, 2)


def test_divmod_by_hand():
    # (U^3 + U) / U = U^2 + 1 remainder 0, worked out by long division
    q, r = P(3, 1).divmod(P(1))
    assert q == P(2, 0)
    assert r.is_zero()


def test_divmod_generic_identity():
    a = P(5, 3, 0)
    b = P(2, 1)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree() < b.degree()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        P(1).divmod(UPoly.zero())


def test_zero_unique_representation():
    assert P() == UPoly.zero()
    assert not P()
    assert str(P()) == "0"


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        UPoly([-1])


def test_parse_round_trip():
    for p in [UPoly.zero(), UPoly.one(), P(1), P(3, 1, 0), P(7, 2)]:
        assert UPoly.parse(str(p)) == p


def test_dispatch():
    assert upoly_arith(P(0), P(0), "add").is_zero()
    assert upoly_arith(P(1), P(2), "mul") == P(3)
    assert upoly_arith(P(3, 1), P(1), "divmod") == (P(2, 0), UPoly.zero())
