import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_cyclic import characteristics as ch
from theta_cyclic.errors import ValidationError


def half_chars(g):
    return st.builds(
        ch.char,
        st.tuples(*[st.integers(0, 1)] * g),
        st.tuples(*[st.integers(0, 1)] * g),
    )


any_genus_char = st.integers(1, 3).flatmap(half_chars)
char_pairs = st.integers(1, 3).flatmap(
    lambda g: st.tuples(half_chars(g), half_chars(g))
)
char_triples = st.integers(1, 3).flatmap(
    lambda g: st.tuples(half_chars(g), half_chars(g), half_chars(g))
)


def test_char_reduces_mod_level():
    c = ch.char((3, -1), (2, 5), level=2)
    assert c.top == (1, 1)
    assert c.bottom == (0, 1)


def test_char_from_fractions():
    c = ch.char_from_fractions((Fraction(1, 2), 0), (Fraction(2, 3), Fraction(1, 6)))
    assert c.level == 6
    assert c.top == (3, 0)
    assert c.bottom == (4, 1)
    assert not c.is_half()
    assert ch.char((1,), (0,)).is_half()


def test_as_fractions_roundtrip():
    c = ch.char((1, 0), (1, 1))
    a, b = c.as_fractions()
    assert a == (Fraction(1, 2), Fraction(0))
    assert b == (Fraction(1, 2), Fraction(1, 2))


def test_parity_match_definition():
    # e_*([a;b]) = (-1)^(4 a.b) with half-integer entries
    for c in ch.all_half_characteristics(2):
        a, b = c.as_fractions()
        expected = (-1) ** int(4 * sum(x * y for x, y in zip(a, b)))
        assert ch.e_star(c) == expected
        assert ch.parity(c) == ("even" if expected == 1 else "odd")


@pytest.mark.parametrize("g,even,odd", [(1, 3, 1), (2, 10, 6), (3, 36, 28)])
def test_parity_counts(g, even, odd):
    assert len(ch.even_characteristics(g)) == even == ch.expected_even_count(g)
    assert len(ch.odd_characteristics(g)) == odd == ch.expected_odd_count(g)
    assert len(ch.all_half_characteristics(g)) == 4**g


def test_parity_requires_half():
    with pytest.raises(ValidationError):
        ch.parity(ch.char((1,), (2,), level=6))


def test_count_by_parity():
    assert ch.count_by_parity(1) == (3, 1)
    assert ch.count_by_parity(2) == (10, 6)
    assert ch.count_by_parity(3) == (36, 28)


@given(char_pairs)
def test_compose_commutes_and_self_inverse(pair):
    x, y = pair
    assert ch.compose(x, y) == ch.compose(y, x)
    assert ch.compose(x, x).is_zero()
    assert ch.compose(x, ch.zero_char(x.g)) == x


@given(char_triples)
def test_compose_associative(triple):
    x, y, z = triple
    assert ch.compose(ch.compose(x, y), z) == ch.compose(x, ch.compose(y, z))


@given(char_pairs)
def test_pairing_symmetric_mod2(pair):
    x, y = pair
    assert ch.pairing(x, y) == ch.pairing(y, x)
    assert ch.pairing(x, x) == 0


@given(char_triples)
def test_pairing_bilinear(triple):
    x, y, z = triple
    lhs = ch.pairing(x, ch.compose(y, z))
    assert lhs == (ch.pairing(x, y) + ch.pairing(x, z)) % 2


@given(char_pairs)
def test_parity_product_rule(pair):
    # e_*(xy) = e_*(x) e_*(y) (-1)^|x,y|
    x, y = pair
    lhs = ch.e_star(ch.compose(x, y))
    rhs = ch.e_star(x) * ch.e_star(y) * (-1) ** ch.pairing(x, y)
    assert lhs == rhs


@given(char_triples)
def test_triple_pairing_definition(triple):
    x, y, z = triple
    expected = (ch.pairing(x, y) + ch.pairing(y, z) + ch.pairing(z, x)) % 2
    assert ch.triple_pairing(x, y, z) == expected


@given(char_pairs)
def test_binom_exponent_matches_transcendental(pair):
    # the symbol is exp(pi*i*sum m_j a_j') over the integer numerators
    m, a = pair
    val = ch.sign_from_i_exponent(ch.binom_exponent(m, a))
    s = sum(x * y for x, y in zip(m.top, a.bottom))
    direct = cmath.exp(1j * math.pi * s)
    assert abs(complex(val) - direct) < 1e-12


def test_syzygetic_relation():
    a = ch.char((0, 0), (0, 1))
    b = ch.char((0, 0), (1, 0))
    assert ch.is_syzygetic(a, b)
    c = ch.char((1, 0), (0, 1))
    d = ch.char((0, 1), (0, 0))
    assert ch.is_azygetic(c, d) == (ch.pairing(c, d) == 1)


GOEPEL_COUNTS = {
    (2, 1): 15,
    (2, 2): 15,
    (3, 1): 63,
    (3, 2): 315,
    (3, 3): 135,
}


@pytest.mark.parametrize("g,r", sorted(GOEPEL_COUNTS))
def test_goepel_group_enumeration_count(g, r):
    groups = ch.enumerate_goepel_groups(g, r)
    assert len(groups) == GOEPEL_COUNTS[(g, r)] == ch.goepel_group_count(g, r)
    for grp in groups[:20]:
        assert ch.is_goepel_group(grp)
        assert len(grp) == 2**r


def test_goepel_group_count_formula():
    # (2^{2g}-1)(2^{2g-2}-1).../((2^r-1)...(2-1))
    assert ch.goepel_group_count(2, 2) == (15 * 3) // (3 * 1)
    assert ch.goepel_group_count(3, 3) == (63 * 15 * 3) // (7 * 3 * 1)


def test_is_goepel_group_rejects():
    # closed but azygetic pair
    a = ch.char((1, 0), (0, 1))
    b = ch.char((0, 1), (0, 0))
    assert ch.pairing(a, b) == 1
    grp = [ch.zero_char(2), a, b, ch.compose(a, b)]
    assert not ch.is_goepel_group(grp)
    # not closed
    assert not ch.is_goepel_group([ch.zero_char(2), a, b])


@pytest.mark.parametrize("g,r", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_goepel_system_counts(g, r):
    expected = ch.goepel_system_counts(g, r)
    sigma = g - r
    assert expected == (
        2 ** (sigma - 1) * (2**sigma + 1) if sigma else 1,
        2 ** (sigma - 1) * (2**sigma - 1) if sigma else 0,
        2 ** (2 * sigma) * (2**r - 1),
    )
    for grp in ch.enumerate_goepel_groups(g, r)[:6]:
        systems = ch.goepel_systems(grp)
        assert len(systems) == 2 ** (2 * g - r)
        tags = [tag for tag, _ in systems]
        counts = (tags.count("allEven"), tags.count("allOdd"), tags.count("mixed"))
        assert counts == expected


def test_goepel_systems_partition_group():
    grp = ch.enumerate_goepel_groups(2, 2)[0]
    systems = ch.goepel_systems(grp)
    seen = set()
    for _, coset in systems:
        assert len(coset) == 4
        assert not (seen & coset)
        seen |= coset
    assert len(seen) == 16


def test_any_three_of_goepel_system_syzygetic():
    for grp in ch.enumerate_goepel_groups(2, 2)[:5]:
        for _, coset in ch.goepel_systems(grp):
            elems = sorted(coset)
            for i in range(len(elems)):
                for j in range(i + 1, len(elems)):
                    for k in range(j + 1, len(elems)):
                        assert ch.triple_pairing(elems[i], elems[j], elems[k]) == 0


def test_compose_rejects_mixed_levels():
    with pytest.raises(ValidationError):
        ch.compose(ch.char((1,), (0,)), ch.char((1,), (0,), level=6))


def test_mixed_genus_rejected():
    with pytest.raises(ValidationError):
        ch.pairing(ch.char((1,), (0,)), ch.char((1, 0), (0, 0)))
