import re

import pytest

from conftest import PHI1_TABLE_N3
from pathmorph.errors import LengthMismatch, LimitExceeded
from pathmorph.families import count_formula, enumerate_paths
from pathmorph.paths import Path, parse
from pathmorph.render import RenderSpec, extract_pairs, render_gallery, render_pair


def polylines(doc):
    return re.findall(r'<polyline class="(\w+)" points="([^"]*)"[^>]*stroke="(\w+)"', doc)


def test_render_pair_structure():
    doc = render_pair(Path((0, 1, 0)), Path((0, 1, 2)))
    lines = polylines(doc)
    assert [(cls, color) for cls, _, color in lines] == [("original", "blue"), ("image", "red")]
    assert all(len(pts.split()) == 3 for _, pts, _ in lines)
    assert extract_pairs(doc) == [(Path((0, 1, 0)), Path((0, 1, 2)))]


def test_render_pair_row_one_heights():
    src, dst = map(parse, PHI1_TABLE_N3[0])
    doc = render_pair(src, dst)
    [(p, q)] = extract_pairs(doc)
    assert max(p.positions) == 3 and q.positions[-1] == 6


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        render_pair(Path((0, 1, 0)), Path((0, 1, 2, 1, 0)))


@pytest.mark.parametrize("n, name, panels", [(3, "phi1", 10), (4, "phi2", 5), (1, "phi1", 1),
                                             (3, "phi1full", 20), (5, "psi2", 14)])
def test_gallery_panels_and_round_trip(n, name, panels):
    doc = render_gallery(n, name)
    assert doc.count('<g class="panel"') == panels
    pairs = extract_pairs(doc)
    assert len(pairs) == panels
    from pathmorph.bijections import get_map
    info = get_map(name)
    assert panels == count_formula(n, info.domain)
    assert [p for p, _ in pairs] == list(enumerate_paths(n, info.domain))
    assert all(info.forward(p) == q for p, q in pairs)


def test_gallery_deterministic():
    assert render_gallery(4, "phi2") == render_gallery(4, "phi2")


def test_spec_options():
    spec = RenderSpec(cell_width=120, cell_height=90, columns=2, show_grid=False,
                      show_axis=False, original_color="#0000ff", image_color="#ff0000")
    doc = render_gallery(3, "phi1", spec)
    assert 'class="grid"' not in doc and 'class="axis"' not in doc
    assert 'width="240" height="450"' in doc
    assert [p for p, _ in extract_pairs(doc)] == list(enumerate_paths(3, "Aprime"))
    with pytest.raises(ValueError):
        RenderSpec(cell_width=0)


def test_gallery_limit():
    with pytest.raises(LimitExceeded):
        render_gallery(13, "phi2")


def test_y_is_affine_in_value():
    doc = render_pair(*map(parse, PHI1_TABLE_N3[3]))
    dy = int(re.search(r'data-dy="(\d+)"', doc).group(1))
    base = int(re.search(r'data-baseline="(\d+)"', doc).group(1))
    src, dst = map(parse, PHI1_TABLE_N3[3])
    for (_, pts, _), path in zip(polylines(doc), (src, dst)):
        ys = [int(pt.split(",")[1]) for pt in pts.split()]
        assert ys == [base - v * dy for v in path.positions]
