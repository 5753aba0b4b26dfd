"""
Plotting - Interactive random walk and redundancy charts

Builds plotly figures; callers write them with `fig.write_html(path)`.
"""

from collections import defaultdict
from typing import Iterable, Optional, Tuple

import plotly.graph_objects as go
import structlog

from .analysis import SchemeBound
from .balancing import WalkTrace

logger = structlog.get_logger(__name__)


def walk_figure(
    trace: WalkTrace,
    title: str = "Random walk",
    band: Optional[Tuple[float, float]] = None,
) -> go.Figure:
    """
    Weight versus index with the balancing value as a dashed line

    Args:
        trace: Walk to plot
        title: Figure title
        band: Optional (low, high) weight range to shade
    """
    fig = go.Figure()
    fig.add_trace(
        go.Scatter(
            x=[z for z, _ in trace.points],
            y=trace.weights,
            mode="lines+markers",
            name="weight",
        )
    )
    if trace.beta is not None:
        fig.add_hline(y=float(trace.beta), line_dash="dash", annotation_text=f"beta={trace.beta}")
    if band is not None:
        fig.add_hrect(y0=band[0], y1=band[1], opacity=0.15, line_width=0)
    fig.update_layout(title=title, xaxis_title="z", yaxis_title="weight")
    return fig


def gray_walk_figure(trace: WalkTrace, z1: Optional[int] = None, z2: Optional[int] = None) -> go.Figure:
    """Gray code walk, with the prefix subset [z1, z2] shaded when given."""
    fig = walk_figure(trace, title="Gray code random walk")
    if z1 is not None and z2 is not None:
        fig.add_vrect(x0=z1, x1=z2, opacity=0.15, line_width=0, annotation_text="subset")
    fig.update_layout(xaxis_title="z'")
    return fig


def redundancy_figure(rows: Iterable[SchemeBound]) -> go.Figure:
    """Information length k_max versus redundancy r, one line per scheme, log scale."""
    series = defaultdict(list)
    for row in rows:
        series[row.scheme.value].append((row.r, float(row.k_max)))

    fig = go.Figure()
    for scheme, points in series.items():
        fig.add_trace(
            go.Scatter(
                x=[r for r, _ in points],
                y=[k for _, k in points],
                mode="lines+markers",
                name=scheme,
            )
        )
    fig.update_layout(
        title="Information length vs. redundancy",
        xaxis_title="r",
        yaxis_title="k",
        yaxis_type="log",
    )
    logger.debug("redundancy_figure_built", schemes=len(series))
    return fig
