"""Ring kernel: structured arithmetic, axiom scan, quotients, spec grammar."""

import pytest

from omegalab.errors import RingConstructionError, SpecParseError
from omegalab.rings import (
    RingElement,
    TableRing,
    make_product,
    make_quotient,
    make_truncated_local,
    make_zmod,
    parse_ring_spec,
    verify_ring_axioms,
)


def test_zmod_basics():
    ring = make_zmod(12)
    assert ring.order == 12
    assert ring.descriptor == "zmod:12"
    assert ring.add(7, 8) == 3
    assert ring.mul(7, 8) == 8
    assert ring.neg(5) == 7
    assert ring.sub(3, 5) == 10
    assert ring.power(2, 3) == 8
    assert ring.zero == 0 and ring.one == 1


def test_zmod_modulus_floor():
    with pytest.raises(RingConstructionError):
        make_zmod(1)
    with pytest.raises(RingConstructionError):
        make_zmod(0)


def test_units_match_gcd():
    ring = make_zmod(12)
    assert ring.units() == frozenset({1, 5, 7, 11})
    assert ring.is_unit(5)
    assert not ring.is_unit(2)


def test_product_encoding_roundtrip():
    ring = make_product(make_zmod(4), make_zmod(3))
    for i in range(ring.order):
        a, b = ring.decode(i)
        assert ring.encode(a, b) == i
    # componentwise arithmetic
    x = ring.encode(3, 2)
    y = ring.encode(2, 2)
    assert ring.decode(ring.add(x, y)) == (1, 1)
    assert ring.decode(ring.mul(x, y)) == (2, 1)


def test_crt_isomorphism_z4xz3_z12():
    # the unique unital map Z/12 -> Z/4 x Z/3 sends k to k * 1 and is a
    # ring isomorphism; checking it pins the product encoding against zmod
    prod = make_product(make_zmod(4), make_zmod(3))
    z12 = make_zmod(12)
    image = [prod.zero] * 12
    for k in range(1, 12):
        image[k] = prod.add(image[k - 1], prod.one)
    assert len(set(image)) == 12
    for a in range(12):
        for b in range(12):
            assert image[z12.add(a, b)] == prod.add(image[a], image[b])
            assert image[z12.mul(a, b)] == prod.mul(image[a], image[b])


def test_truncated_local_nilpotency():
    # F_2[x,y]/m^2: any product of two variables dies
    m2 = make_truncated_local(2, 2, 2)
    assert m2.order == 8
    x = m2.parse_element("x")
    y = m2.parse_element("y")
    assert m2.mul(x, y) == m2.zero
    assert m2.mul(x, x) == m2.zero
    # in m^3 the products survive one more level
    m3 = make_truncated_local(2, 2, 3)
    assert m3.order == 64
    x3 = m3.parse_element("x")
    y3 = m3.parse_element("y")
    xy = m3.mul(x3, y3)
    assert xy != m3.zero
    assert m3.mul(xy, x3) == m3.zero


def test_truncated_display_parse_roundtrip():
    ring = make_truncated_local(3, 1, 2)
    for i in range(ring.order):
        assert ring.parse_element(ring.display(i)) == i
    big = make_truncated_local(2, 2, 3)
    for i in range(big.order):
        assert big.parse_element(big.display(i)) == i


def test_truncated_parse_errors():
    ring = make_truncated_local(2, 2, 2)
    with pytest.raises(SpecParseError):
        ring.parse_element("x^2")  # truncated away
    with pytest.raises(SpecParseError):
        ring.parse_element("q")
    with pytest.raises(SpecParseError):
        ring.parse_element("x+x")


def test_truncated_constructor_guards():
    with pytest.raises(RingConstructionError):
        make_truncated_local(4, 1, 2)  # p must be prime
    with pytest.raises(RingConstructionError):
        make_truncated_local(2, 0, 2)
    with pytest.raises(RingConstructionError):
        make_truncated_local(2, 1, 1)


def test_axiom_scan_passes_on_real_rings():
    for ring in (make_zmod(6), make_product(make_zmod(2), make_zmod(2)),
                 make_truncated_local(2, 1, 3)):
        report = verify_ring_axioms(ring)
        assert report.ok and report.checked
        assert report.axiom is None


def test_axiom_scan_large_ring_unchecked():
    report = verify_ring_axioms(make_zmod(1000))
    assert report.ok and not report.checked


def _z4_tables():
    z4 = make_zmod(4)
    add = [[z4.add(i, j) for j in range(4)] for i in range(4)]
    mul = [[z4.mul(i, j) for j in range(4)] for i in range(4)]
    return add, mul


def test_axiom_scan_reports_first_violation():
    add, mul = _z4_tables()
    mul[1][2] = 3  # breaks symmetry, caught before associativity
    bad = TableRing(add, mul, 0, 1, "bad:mul")
    report = verify_ring_axioms(bad)
    assert not report.ok
    assert report.axiom == "mul-commutative"
    assert report.witness == (1, 2)


def test_axiom_scan_zero_identity():
    add, mul = _z4_tables()
    # symmetric corruption so commutativity still holds
    add[0][1] = 2
    add[1][0] = 2
    bad = TableRing(add, mul, 0, 1, "bad:add")
    report = verify_ring_axioms(bad)
    assert not report.ok
    assert report.axiom == "zero-identity"
    assert report.witness == (1,)


def test_order_cap_enforced():
    with pytest.raises(RingConstructionError):
        make_zmod(5000)
    with pytest.raises(RingConstructionError):
        parse_ring_spec("zmod:9999")
    assert parse_ring_spec("zmod:9999", order_cap=10000).order == 9999
    with pytest.raises(RingConstructionError):
        make_product(make_zmod(100), make_zmod(100))


def test_quotient_z12_by_4_is_z4():
    parent = make_zmod(12)
    q = make_quotient(parent, frozenset({0, 4, 8}), label="gen:4")
    assert q.order == 4
    assert q.reps == (0, 1, 2, 3)
    assert q.descriptor == "quot:zmod:12/gen:4"
    z4 = make_zmod(4)
    for i in range(4):
        for j in range(4):
            assert q.add(i, j) == z4.add(i, j)
            assert q.mul(i, j) == z4.mul(i, j)
    # projection respects the parent arithmetic
    for x in range(12):
        for y in range(12):
            assert q.project[parent.add(x, y)] == q.add(q.project[x], q.project[y])


def test_quotient_guards():
    parent = make_zmod(6)
    with pytest.raises(RingConstructionError):
        make_quotient(parent, frozenset({2, 4}))  # missing zero
    with pytest.raises(RingConstructionError):
        make_quotient(parent, frozenset(range(6)))  # whole ring


def test_ring_spec_roundtrip():
    for spec in (
        "zmod:12",
        "prod:zmod:4,zmod:9",
        "prod:zmod:4,prod:zmod:2,zmod:3",
        "trunc:p=2,vars=2,nil=3",
        "trunc:p=3,vars=1,nil=2",
    ):
        ring = parse_ring_spec(spec)
        assert ring.descriptor == spec
        assert parse_ring_spec(ring.descriptor).descriptor == spec


def test_ring_spec_errors():
    for bad in ("zmod:", "prod:zmod:4", "zmod:12extra", "trunc:p=2,vars=1",
                "ring:5", ""):
        with pytest.raises(SpecParseError):
            parse_ring_spec(bad)


def test_product_element_display_parse():
    ring = make_product(make_zmod(4), make_zmod(3))
    i = ring.encode(1, 2)
    assert ring.display(i) == "(1,2)"
    assert ring.parse_element("(1,2)") == i
    with pytest.raises(SpecParseError):
        ring.parse_element("1,2")
    with pytest.raises(SpecParseError):
        ring.parse_element("(1,2,3)")


def test_ring_element_wrapper():
    ring = make_zmod(12)
    a = RingElement(ring, 7)
    assert (a + 8).index == 3
    assert (a * RingElement(ring, 2)).index == 2
    assert (-a).index == 5
    assert a.display() == "7"
    with pytest.raises(ValueError):
        RingElement(ring, 12)
    other = make_zmod(6)
    with pytest.raises(ValueError):
        a + RingElement(other, 1)
