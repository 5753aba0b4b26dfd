from qbalance.analysis import Scheme, redundancy_table
from qbalance.balancing import walk_trace
from qbalance.core import make_shape, parse_word
from qbalance.graycode import gray_walk
from qbalance.plotting import gray_walk_figure, redundancy_figure, walk_figure


def test_walk_figure():
    trace = walk_trace(make_shape(3, 4), parse_word("2101", 3))
    fig = walk_figure(trace, band=(3, 5))
    assert len(fig.data) == 1
    assert list(fig.data[0].y) == [4, 2, 3, 4, 5, 6, 4, 5, 3, 4, 5, 3]
    assert fig.layout.title.text == "Random walk"


def test_gray_walk_figure_shades_subset():
    fig = gray_walk_figure(gray_walk(3, 3), z1=5, z2=19)
    assert fig.layout.shapes
    assert fig.layout.xaxis.title.text == "z'"


def test_redundancy_figure_has_one_line_per_scheme():
    fig = redundancy_figure(redundancy_table(3, range(1, 8)))
    assert {trace.name for trace in fig.data} == {scheme.value for scheme in Scheme}
    assert fig.layout.yaxis.type == "log"


def test_figure_html_export(tmp_path):
    path = tmp_path / "walk.html"
    walk_figure(gray_walk(2, 3)).write_html(str(path))
    assert "plotly" in path.read_text(encoding="utf-8").lower()
