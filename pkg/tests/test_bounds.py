from decimal import Decimal

from projwidth.services import bounds

def test_bound_values():
    assert bounds.ew_bound(4) == Decimal("3.0000")
    assert bounds.ew_bound(11) == Decimal("5.0000")
    assert bounds.fw_bound(4) == Decimal("2.0000")
    assert bounds.fw_bound(16) == Decimal("4.1310")
    assert bounds.single_edge_bound(4, 3) == Decimal("4.8990")
    assert bounds.stable_bound(4) == Decimal("1.0000")
    assert bounds.stable_bound(16) == Decimal("5.9345")

def test_bounds_print_four_places():
    assert str(bounds.ew_bound(22)) == "7.0000"
    assert str(bounds.fw_bound(9)) == "3.0895"

def test_integer_checks_at_equality():
    assert bounds.ew_ok(11, 5)
    assert not bounds.ew_ok(11, 6)
    assert bounds.fw_ok(4, 2)
    assert not bounds.fw_ok(4, 3)
    assert bounds.single_edge_ok(4, 3, 4)
    assert not bounds.single_edge_ok(4, 3, 5)
    assert bounds.stable_ok(4, 1)
    assert not bounds.stable_ok(4, 0)

def test_short_cycle_branch():
    assert bounds.short_cycle_branch(100, 4, 7)
    assert not bounds.short_cycle_branch(100, 4, 8)

def test_ratio():
    assert bounds.ratio(5, Decimal("5.0000")) == Decimal("1.0000")
    assert bounds.ratio(None, Decimal("5.0000")) is None
