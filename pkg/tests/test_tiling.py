import io
import xml.etree.ElementTree as ET

import pytest

from modular_braid.tiling import SVG_NS, emit_tiling_svg, tile_path_data

NS = {"svg": SVG_NS}


def _tiles(root):
    return [p for p in root.iter(f"{{{SVG_NS}}}path") if "tile" in p.get("class", "").split()]


@pytest.mark.parametrize("depth, expected", [(0, 6), (1, 30)])
def test_tile_counts(tmp_path, depth, expected):
    out = tmp_path / "tiles.svg"
    count = emit_tiling_svg((0, 5), depth, str(out))
    root = ET.parse(out).getroot()
    # 4 nontrivial reduced words of length 1 per tile at depth 1
    assert count == expected == len(_tiles(root))


def test_tile_ids(tmp_path):
    out = tmp_path / "tiles.svg"
    emit_tiling_svg((-2, 2), 0, str(out))
    root = ET.parse(out).getroot()
    assert [p.get("id") for p in _tiles(root)] == ["B-2", "B-1", "B0", "B1", "B2"]


def test_images_carry_their_word(tmp_path):
    out = tmp_path / "tiles.svg"
    emit_tiling_svg((0, 0), 1, str(out))
    root = ET.parse(out).getroot()
    words = sorted(p.get("data-word") for p in _tiles(root) if p.get("data-word"))
    assert words == ["g1", "g1^-1", "g2", "g2^-1"]


def test_empty_range(tmp_path):
    out = tmp_path / "tiles.svg"
    assert emit_tiling_svg((3, 2), 1, str(out)) == 0
    assert _tiles(ET.parse(out).getroot()) == []


def test_text_and_binary_streams():
    text = io.StringIO()
    assert emit_tiling_svg((0, 1), 0, text) == 2
    assert ET.fromstring(text.getvalue().split("?>", 1)[1]).tag == f"{{{SVG_NS}}}svg"
    raw = io.BytesIO()
    assert emit_tiling_svg((0, 1), 0, raw) == 2
    assert b"B1" in raw.getvalue()


def test_path_data_for_standard_tile():
    d = tile_path_data([None, complex(-0.5, 0.8660254), complex(0.5, 0.8660254)])
    assert d.startswith("M -0.5 0.866025")
    assert " A 1 1 0 0 0 0.5 0.866025" in d
    assert d.endswith("Z")
