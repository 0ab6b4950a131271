import pytest

from models.cabling import CableParams
from models.complex import HFKTable
from models.enums import TableFormat
from models.errors import NotLargeN
from services.cabling_service import cabling_service
from services.torus_service import torus_service
from utils.rendering import render_table


def test_grid_layout():
    text = render_table(torus_service.hfk_torus_2(1), TableFormat.GRID, "HFK(T(2,3))")
    assert text.splitlines() == [
        "HFK(T(2,3))",
        "i\\M |  0 -1 -2",
        "--------------",
        "  1 |  Z  .  .",
        "  0 |  .  Z  .",
        " -1 |  .  .  Z",
    ]


def test_grid_keeps_empty_rows():
    rows = render_table(torus_service.hfk_torus_3_7()).splitlines()[2:]
    labels = [row.split("|")[0].strip() for row in rows]
    assert labels == [str(i) for i in range(6, -7, -1)]
    assert set(rows[labels.index("4")].split("|")[1].split()) == {"."}


def test_empty_table():
    assert render_table(HFKTable()) == "0\n"


def test_partial_table_annotation(unknot):
    table = cabling_service.cable_table(unknot, CableParams(p=3, n=-2, c_prime=0))
    lines = render_table(table, TableFormat.GRID, "T(3,-5)").splitlines()
    assert lines[1] == "valid for i < 0"
    assert "  c_prime: 0" in lines


def test_conjectural_note(trefoil):
    with pytest.warns(NotLargeN):
        table = cabling_service.cable2_hfk(trefoil, 1)
    assert "conjectural: large-n hypothesis unverified" in render_table(table)


def test_csv_and_json_formats():
    table = torus_service.hfk_torus_2(1)
    assert render_table(table, TableFormat.CSV) == "alexander,maslov,group\n1,0,Z\n0,-1,Z\n-1,-2,Z\n"
    assert render_table(table, "json").startswith("{\n")


def test_color_only_when_requested():
    table = torus_service.hfk_torus_2(1)
    assert "\033[" not in render_table(table)
    assert "\033[1m" in render_table(table, color=True)
