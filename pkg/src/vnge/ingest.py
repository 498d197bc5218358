"""Correlation networks from multivariate price series.

A sliding window over daily log-returns yields one network per window
end: assets are nodes, and an edge joins two assets when the absolute
Pearson correlation of their windowed returns exceeds the threshold.
"""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import PanelFormatError, VngeError
from .graph import Graph, from_edge_list


class WindowOutOfRangeError(VngeError):
    """Window end index does not leave a full window of returns."""


class TooShortError(VngeError):
    """The panel has fewer return days than one window."""


@dataclass(frozen=True)
class TimeSeriesPanel:
    """Per-asset return series: `returns` has one row per asset."""

    assets: tuple[str, ...]
    returns: np.ndarray

    @property
    def n_assets(self) -> int:
        return len(self.assets)

    @property
    def n_periods(self) -> int:
        return self.returns.shape[1]


@dataclass(frozen=True)
class CorrNetParams:
    # No default threshold: the cutoff is a modelling choice the caller
    # must make explicitly.
    threshold: float
    window: int = 28

    def validate(self) -> None:
        if self.window < 3:
            raise PanelFormatError(f"window must be >= 3, got {self.window}")
        if not 0.0 <= self.threshold <= 1.0:
            raise PanelFormatError(f"threshold must be in [0, 1], got {self.threshold}")


def panel_from_prices(assets, prices: np.ndarray) -> TimeSeriesPanel:
    """Log-returns ln(p_t / p_{t-1}) from a days x assets price matrix."""
    prices = np.asarray(prices, dtype=np.float64)
    if np.any(prices <= 0.0):
        raise PanelFormatError("prices must be strictly positive")
    if prices.shape[0] < 2:
        raise PanelFormatError("need at least two price rows to form returns")
    returns = np.diff(np.log(prices), axis=0).T
    return TimeSeriesPanel(tuple(assets), returns)


def load_price_csv(path) -> TimeSeriesPanel:
    """Read a CSV with a header of asset labels and one row per trading day."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PanelFormatError("empty CSV")
        assets = [h.strip() for h in header]
        if not assets or any(not a for a in assets):
            raise PanelFormatError("header must list non-empty asset labels")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(assets):
                raise PanelFormatError(
                    f"line {lineno}: {len(row)} fields, expected {len(assets)}"
                )
            try:
                values = [float(x) for x in row]
            except ValueError:
                raise PanelFormatError(f"line {lineno}: non-numeric price")
            if any(v <= 0.0 for v in values):
                raise PanelFormatError(f"line {lineno}: nonpositive price")
            rows.append(values)
    if len(rows) < 2:
        raise PanelFormatError("need at least two price rows to form returns")
    return panel_from_prices(assets, np.array(rows))


def window_correlation_network(
    panel: TimeSeriesPanel, params: CorrNetParams, t: int
) -> Graph:
    """Correlation network for the window of returns ending at index t.

    Return indices are 1-based so that window end t covers (t-window, t];
    an edge appears when |pearson| strictly exceeds the threshold. Assets
    with zero variance in the window connect to nothing.
    """
    params.validate()
    w = params.window
    if t < w or t > panel.n_periods:
        raise WindowOutOfRangeError(
            f"window end {t} invalid for window {w} over {panel.n_periods} returns"
        )
    block = panel.returns[:, t - w : t]
    centered = block - block.mean(axis=1, keepdims=True)
    norms = np.sqrt(np.sum(centered * centered, axis=1))
    ok = norms > 0.0
    safe = np.where(ok, norms, 1.0)
    unit = centered / safe[:, None]
    corr = unit @ unit.T
    valid = np.outer(ok, ok)
    hit = (np.abs(corr) > params.threshold) & valid
    a = panel.n_assets
    pairs = [(i, j) for i in range(a) for j in range(i + 1, a) if hit[i, j]]
    return from_edge_list(a, pairs)


def network_sequence(panel: TimeSeriesPanel, params: CorrNetParams) -> list[Graph]:
    """One network per window end, from the first full window to the last day."""
    params.validate()
    if panel.n_periods < params.window:
        raise TooShortError(
            f"{panel.n_periods} return days < window {params.window}"
        )
    return [
        window_correlation_network(panel, params, t)
        for t in range(params.window, panel.n_periods + 1)
    ]


def filter_connected_fullsize(graphs, n_required: int) -> list[Graph]:
    """Keep graphs that are connected and involve exactly n_required active nodes.

    A node is active when its degree is positive; connectivity is checked
    on the active nodes, so panels wider than the surviving component are
    dropped rather than crashing.
    """
    kept = []
    for g in graphs:
        active = [v for v in range(g.n) if g.degree(v) > 0]
        if len(active) != n_required:
            continue
        if n_required == 0:
            continue
        seen = {active[0]}
        q = deque([active[0]])
        while q:
            u = q.popleft()
            for v in g.neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    q.append(v)
        if len(seen) == len(active):
            kept.append(g)
    return kept
