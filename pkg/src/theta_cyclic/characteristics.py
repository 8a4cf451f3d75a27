"""Exact arithmetic on rational theta characteristics.

A characteristic is stored as integer numerators over a fixed level:
the column vectors a = top/level and b = bottom/level.  All of the
combinatorics here (parity, syzygety, Goepel groups and systems) is for
level 2, i.e. half-integer characteristics, and is done in exact
integer arithmetic.  Pairings follow the convention that the top row
carries the tau-side numerators m_i and the bottom row the z-side
numerators m_i'.

Integer encodings (2g bits, top bits low) are used internally for
enumeration; the public face is the Characteristic dataclass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import NumericalError, ValidationError


@dataclass(frozen=True, order=True)
class Characteristic:
    level: int
    top: tuple
    bottom: tuple

    def __post_init__(self):
        if self.level < 1:
            raise ValidationError("level must be a positive integer")
        if len(self.top) != len(self.bottom):
            raise ValidationError("top and bottom rows must have equal length")
        if not all(isinstance(x, int) and 0 <= x < self.level for x in self.top + self.bottom):
            raise ValidationError("numerators must be integers reduced mod level")

    @property
    def g(self) -> int:
        return len(self.top)

    def as_fractions(self):
        a = tuple(Fraction(x, self.level) for x in self.top)
        b = tuple(Fraction(x, self.level) for x in self.bottom)
        return a, b

    def is_half(self) -> bool:
        return self.level == 2

    def is_zero(self) -> bool:
        return not any(self.top) and not any(self.bottom)


def char(top: Sequence[int], bottom: Sequence[int], level: int = 2) -> Characteristic:
    """Build a characteristic, reducing numerators mod level."""
    return Characteristic(
        level=level,
        top=tuple(int(x) % level for x in top),
        bottom=tuple(int(x) % level for x in bottom),
    )


def char_from_fractions(a: Sequence[Fraction], b: Sequence[Fraction]) -> Characteristic:
    """Build a characteristic from rational vectors a, b (level = lcm of denominators)."""
    fracs = [Fraction(x) for x in a] + [Fraction(x) for x in b]
    level = 1
    for f in fracs:
        level = level * f.denominator // _gcd(level, f.denominator)
    g = len(a)
    top = [int(Fraction(x) * level) % level for x in a]
    bottom = [int(Fraction(x) * level) % level for x in b]
    return Characteristic(level=max(level, 1), top=tuple(top), bottom=tuple(bottom))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def zero_char(g: int, level: int = 2) -> Characteristic:
    return Characteristic(level=level, top=(0,) * g, bottom=(0,) * g)


def _require_half(*cs: Characteristic) -> None:
    for c in cs:
        if c.level != 2:
            raise ValidationError("operation requires half-integer (level 2) characteristics")
    gs = {c.g for c in cs}
    if len(gs) > 1:
        raise ValidationError("characteristics must share the same genus")


# ---------------------------------------------------------------------------
# level-2 algebra


def e_star(c: Characteristic) -> int:
    """The sign (-1)^(sum top_i*bottom_i) over integer numerators:
    +1 for an even characteristic, -1 for an odd one."""
    _require_half(c)
    return -1 if sum(t * b for t, b in zip(c.top, c.bottom)) % 2 else 1


def parity(c: Characteristic) -> str:
    """\"even\" or \"odd\"."""
    return "even" if e_star(c) == 1 else "odd"


def is_even(c: Characteristic) -> bool:
    return e_star(c) == 1


def is_odd(c: Characteristic) -> bool:
    return e_star(c) == -1


def norm_product(c: Characteristic) -> int:
    """Sum of top_i * bottom_i over the integer numerators (not reduced)."""
    _require_half(c)
    return sum(t * b for t, b in zip(c.top, c.bottom))


def compose(c1: Characteristic, c2: Characteristic) -> Characteristic:
    """Group law: numerators add mod the (common) level."""
    if c1.level != c2.level:
        raise ValidationError("compose requires characteristics of equal level")
    if c1.g != c2.g:
        raise ValidationError("compose requires characteristics of equal genus")
    lv = c1.level
    return Characteristic(
        level=lv,
        top=tuple((x + y) % lv for x, y in zip(c1.top, c2.top)),
        bottom=tuple((x + y) % lv for x, y in zip(c1.bottom, c2.bottom)),
    )


def pairing(m: Characteristic, a: Characteristic) -> int:
    """|m, a| mod 2.  Zero means syzygetic, one azygetic."""
    _require_half(m, a)
    return sum(mb * at - mt * ab for mt, mb, at, ab in zip(m.top, m.bottom, a.top, a.bottom)) % 2


def triple_pairing(m: Characteristic, a: Characteristic, b: Characteristic) -> int:
    """|m, a, b| = |a,b| + |b,m| + |m,a| mod 2."""
    return (pairing(a, b) + pairing(b, m) + pairing(m, a)) % 2


def is_syzygetic(m: Characteristic, a: Characteristic) -> bool:
    return pairing(m, a) == 0


def is_azygetic(m: Characteristic, a: Characteristic) -> bool:
    return pairing(m, a) == 1


def binom_exponent(m: Characteristic, a: Characteristic) -> int:
    """The symbol (m over a) = exp(pi*i * sum_j m_j a_j') as an exact
    power of the imaginary unit: returns e with value == i**e, e mod 4."""
    _require_half(m, a)
    s = sum(mt * ab for mt, ab in zip(m.top, a.bottom))
    return (2 * s) % 4


def sign_from_i_exponent(e: int):
    """Value of i**e for integer e."""
    return (1, 1j, -1, -1j)[e % 4]


# ---------------------------------------------------------------------------
# enumeration (integer encodings internal)


def _encode(c: Characteristic) -> int:
    code = 0
    for i, t in enumerate(c.top):
        code |= (t & 1) << i
    for i, b in enumerate(c.bottom):
        code |= (b & 1) << (c.g + i)
    return code


def _decode(code: int, g: int) -> Characteristic:
    top = tuple((code >> i) & 1 for i in range(g))
    bottom = tuple((code >> (g + i)) & 1 for i in range(g))
    return Characteristic(level=2, top=top, bottom=bottom)


def _pair_code(x: int, y: int, g: int) -> int:
    mask = (1 << g) - 1
    xt, xb = x & mask, x >> g
    yt, yb = y & mask, y >> g
    return (bin((xb & yt) ^ (xt & yb)).count("1")) % 2


def all_half_characteristics(g: int) -> list:
    """All 2^(2g) half-integer characteristics in a fixed order."""
    return [_decode(code, g) for code in range(1 << (2 * g))]


def even_characteristics(g: int) -> list:
    return [c for c in all_half_characteristics(g) if is_even(c)]


def odd_characteristics(g: int) -> list:
    return [c for c in all_half_characteristics(g) if is_odd(c)]


def expected_even_count(g: int) -> int:
    return 2 ** (g - 1) * (2**g + 1)


def expected_odd_count(g: int) -> int:
    return 2 ** (g - 1) * (2**g - 1)


def count_by_parity(g: int) -> tuple:
    """(nEven, nOdd) by exhaustive enumeration; checked against the
    closed forms 2^(g-1)(2^g +/- 1)."""
    if g < 1:
        raise ValidationError("genus must be >= 1")
    n_even = n_odd = 0
    for c in all_half_characteristics(g):
        if is_even(c):
            n_even += 1
        else:
            n_odd += 1
    if (n_even, n_odd) != (expected_even_count(g), expected_odd_count(g)):
        raise NumericalError("parity counts disagree with the closed forms")
    return n_even, n_odd


def goepel_group_count(g: int, r: int) -> int:
    """Number of distinct Goepel groups of order 2^r in genus g."""
    if not 0 <= r <= g:
        raise ValidationError("need 0 <= r <= g")
    num = 1
    for k in range(r):
        num *= 2 ** (2 * g - 2 * k) - 1
    den = 1
    for k in range(1, r + 1):
        den *= 2**k - 1
    return num // den


def is_goepel_group(chars: Iterable[Characteristic]) -> bool:
    """True when the given set is a Goepel group: contains the zero
    characteristic, is closed under composition, has order 2^r with
    r <= g, and every two members are syzygetic."""
    cs = list(chars)
    if not cs:
        return False
    g = cs[0].g
    try:
        _require_half(*cs)
    except ValidationError:
        return False
    codes = {_encode(c) for c in cs}
    n = len(codes)
    if n != len(cs) or n & (n - 1) != 0:
        return False
    r = n.bit_length() - 1
    if r > g or 0 not in codes:
        return False
    for x in codes:
        for y in codes:
            if (x ^ y) not in codes:
                return False
            if _pair_code(x, y, g):
                return False
    return True


def enumerate_goepel_groups(g: int, r: int) -> list:
    """All Goepel groups of order 2^r, each as a frozenset of
    Characteristic.  Enumeration is by canonical greedy bases so each
    group appears exactly once."""
    if not 0 <= r <= g:
        raise ValidationError("need 0 <= r <= g")
    if g > 3:
        raise ValidationError("enumeration is only supported for g <= 3")
    total = 1 << (2 * g)
    groups = []

    def extend(basis, span, start):
        if len(basis) == r:
            groups.append(frozenset(_decode(x, g) for x in span))
            return
        for c in range(start, total):
            if c in span:
                continue
            if any(_pair_code(c, b, g) for b in basis):
                continue
            # canonical: c must be the minimum of its new layer
            if any((c ^ x) < c for x in span):
                continue
            new_span = span | {c ^ x for x in span}
            extend(basis + [c], new_span, c + 1)

    extend([], {0}, 1)
    return groups


def goepel_systems(group: Iterable[Characteristic]) -> list:
    """All cosets of a Goepel group, each tagged "allEven", "allOdd" or
    "mixed" by the parities of its members.  Returned as (tag,
    frozenset) pairs sorted by the smallest encoded member."""
    cs = list(group)
    if not is_goepel_group(cs):
        raise ValidationError("input is not a Goepel group")
    g = cs[0].g
    gcodes = sorted(_encode(c) for c in cs)
    seen = set()
    out = []
    for rep in range(1 << (2 * g)):
        if rep in seen:
            continue
        coset = [rep ^ x for x in gcodes]
        seen.update(coset)
        members = [_decode(x, g) for x in sorted(coset)]
        pars = {e_star(c) for c in members}
        tag = "mixed" if len(pars) == 2 else ("allEven" if 1 in pars else "allOdd")
        out.append((tag, frozenset(members)))
    out.sort(key=lambda p: min(_encode(c) for c in p[1]))
    return out


def goepel_system_counts(g: int, r: int) -> tuple:
    """(all-even, all-odd, mixed) Goepel system counts for given g, r."""
    sigma = g - r
    even = 2 ** (sigma - 1) * (2**sigma + 1) if sigma >= 1 else 1
    odd = 2 ** (sigma - 1) * (2**sigma - 1) if sigma >= 1 else 0
    mixed = 2 ** (2 * sigma) * (2**r - 1)
    return even, odd, mixed
