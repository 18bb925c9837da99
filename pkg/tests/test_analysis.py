from decimal import Decimal

import pytest

from projwidth.core.errors import InvalidParameterError
from projwidth.schemas.analysis import CSV_COLUMNS, CSV_VERSION_LINE
from projwidth.services.analysis import (
    analyze_instance,
    max_ratios,
    parse_k_range,
    rows_to_csv,
    summary_line,
    verify_sweep,
)

def test_analyze_k4(k4):
    row = analyze_instance(k4, family="grid", k=2)
    assert row.edge_width == 3
    assert row.face_width == 2
    assert row.single_edge_size is not None
    assert row.all_checks_pass
    assert row.csv_cells()[:8] == ["grid", "2", "4", "6", "3", "3.0000", "2", "2.0000"]

def test_analyze_with_oracle(k4):
    row = analyze_instance(k4, with_oracle=True)
    assert row.family == "grid k=2"
    assert row.oct_min == 2
    assert row.alpha == 1

def test_analyze_bipartite_input(c4_planar):
    row = analyze_instance(c4_planar)
    assert row.edge_width is None
    assert row.all_checks_pass
    cells = row.csv_cells()
    assert cells[4] == "inf"
    assert cells[6] == "inf"

def test_analyze_abstract_graph(grotzsch):
    row = analyze_instance(grotzsch)
    assert row.edge_width == 5
    assert row.all_checks_pass
    assert row.csv_cells()[6] == ""

def test_csv_layout(k4):
    text = rows_to_csv([analyze_instance(k4, family="grid", k=2)])
    lines = text.splitlines()
    assert lines[0] == CSV_VERSION_LINE
    assert lines[1] == ",".join(CSV_COLUMNS)
    assert lines[2].endswith(",true")
    assert len(lines) == 3

def test_empty_sweep_is_header_only():
    assert rows_to_csv(verify_sweep("grid", [])).splitlines() == [CSV_VERSION_LINE, ",".join(CSV_COLUMNS)]

def test_grid_sweep_face_width_is_k():
    rows = verify_sweep("grid", [2, 3, 4, 5, 6])
    assert [row.face_width for row in rows] == [2, 3, 4, 5, 6]
    assert all(row.all_checks_pass for row in rows)

def test_mycielski_sweep_meets_the_bound():
    rows = verify_sweep("mycielski", [2, 3, 4])
    assert [row.edge_width for row in rows] == [5, 7, 9]
    ew, _ = max_ratios(rows)
    assert ew == Decimal("1.0000")

def test_sweep_with_workers_keeps_order():
    rows = verify_sweep("grid", [4, 2, 3], jobs=2)
    assert [row.k for row in rows] == [4, 2, 3]

def test_summary_line(k4):
    line = summary_line([analyze_instance(k4)])
    assert line == "max ew ratio=1.0000 max fw ratio=1.0000"

def test_parse_k_range():
    assert parse_k_range("2..6") == [2, 3, 4, 5, 6]
    assert parse_k_range("5..4") == []
    with pytest.raises(InvalidParameterError):
        parse_k_range("2-6")
