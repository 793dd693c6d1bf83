import re
import xml.etree.ElementTree as ET

import pytest

from cp1graft.angles import Angle
from cp1graft.circles import Circle
from cp1graft.configurations import build_configuration
from cp1graft.svg import SIZE, render
from cp1graft.triangles import atomic_classify, realize

NS = "{http://www.w3.org/2000/svg}"


def labelled_points(cfg):
    out = []
    for (i, j), pts in sorted(cfg.intersections.items()):
        out += [(f"{n}{i + 1}{j + 1}", p) for n, p in zip("xy", pts)]
    return out


def octahedral():
    return build_configuration(Circle(0, 0.5j, 0), Circle(1, 0, -1), Circle.line(0, 1j))


def coords(root):
    for el in root.iter(f"{NS}polyline"):
        for pair in el.get("points").split():
            yield tuple(map(float, pair.split(",")))


@pytest.mark.parametrize("chart", ["plane", "stereo"])
def test_octahedral_labels(chart):
    cfg = octahedral()
    root = ET.fromstring(render(cfg.circles, labelled_points(cfg), chart=chart))
    labels = [t.text for t in root.iter(f"{NS}text")]
    assert len(labels) == 6
    assert any("inf" in lab for lab in labels) or chart == "stereo"


def test_plane_lines_are_clipped():
    cfg = octahedral()
    root = ET.fromstring(render(cfg.circles, labelled_points(cfg)))
    pts = list(coords(root))
    assert pts
    assert all(-1e-6 <= x <= SIZE + 1e-6 and -1e-6 <= y <= SIZE + 1e-6 for x, y in pts)


def test_stereo_marks_far_side_dashed():
    cfg = octahedral()
    text = render(cfg.circles, labelled_points(cfg), chart="stereo")
    assert "stroke-dasharray" in text
    assert "stroke-dasharray" not in render(cfg.circles, labelled_points(cfg), chart="plane")


def test_dual_circle_is_drawn_dashed():
    r = realize(atomic_classify(Angle.pi(1, 4), Angle.pi(1, 3), Angle.pi(1, 6)))
    plain = render(r.configuration.circles, [])
    with_dual = render(r.configuration.circles, [], dual=Circle(1, 0, -1))
    assert "stroke-dasharray" not in plain and "stroke-dasharray" in with_dual


def test_numbers_are_fixed_precision():
    cfg = octahedral()
    text = render(cfg.circles, labelled_points(cfg))
    assert not re.search(r"\d\.\d{4,}", text)


def test_unknown_chart():
    with pytest.raises(ValueError):
        render([], [], chart="mercator")
