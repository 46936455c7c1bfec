"""Divisor trees: construction, per-generation counts, layout, SVG and JSON.

A tree's root is a square of side n; its arm holds one square per proper
divisor of n (largest first), and every square grows its own arm the same
way down to side 1.  Layout coordinates are integers so output is
byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

from .core import kappa0_recursive
from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class DivisorTree:
    side: int
    children: tuple[DivisorTree, ...] = ()

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def unit_count(self) -> int:
        """Number of side-1 squares."""
        return sum(1 for node, _ in self.walk() if node.side == 1)

    def walk(self):
        """Yield (node, depth) in pre-order."""
        stack = [(self, 0)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            stack.extend((c, depth + 1) for c in reversed(node.children))


def proper_divisors_desc(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    divs = sorted(small + large, reverse=True)
    return divs[1:]


def build_tree(n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> DivisorTree:
    """Full divisor tree of n.

    Raises BudgetExceeded as soon as more than ``node_budget`` nodes would be
    created; the error carries kappa0(n), the size actually required.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if node_budget < 1:
        raise ValueError(f"node_budget must be >= 1, got {node_budget}")
    divisor_cache: dict[int, list[int]] = {}
    count = 0

    def grow(side):
        nonlocal count
        count += 1
        if count > node_budget:
            raise BudgetExceeded(n, node_budget, kappa0_recursive(n))
        divs = divisor_cache.get(side)
        if divs is None:
            divs = divisor_cache[side] = proper_divisors_desc(side)
        return DivisorTree(side, tuple(grow(d) for d in divs))

    return grow(n)


def generation_counts(t: DivisorTree) -> list[int]:
    """Squares per depth; entry i is upsilon_{i+1} of the root side."""
    counts: list[int] = []
    for _, depth in t.walk():
        if depth == len(counts):
            counts.append(0)
        counts[depth] += 1
    return counts


# -- layout ------------------------------------------------------------------

@dataclass(frozen=True)
class PlacedSquare:
    side: int
    x: int
    y: int
    generation: int


@dataclass(frozen=True)
class LayoutTree:
    nodes: tuple[PlacedSquare, ...]
    width: int
    height: int


def _extent(node, horizontal, gap, memo):
    """(width, height) of the subtree box, root square at its lower-left corner."""
    key = (node.side, horizontal)
    hit = memo.get(key)
    if hit is not None:
        return hit
    w = h = node.side
    if node.children:
        sub = [_extent(c, not horizontal, gap, memo) for c in node.children]
        if horizontal:
            w = node.side + sum(gap + cw for cw, _ in sub)
            h = max(node.side, max(ch for _, ch in sub))
        else:
            h = node.side + sum(gap + ch for _, ch in sub)
            w = max(node.side, max(cw for cw, _ in sub))
    memo[key] = (w, h)
    return w, h


def layout(t: DivisorTree, gap: int = 1) -> LayoutTree:
    """Place every square; arms alternate right, up, right, ... by generation.

    Each subtree gets its own bounding box along its parent's arm, so no two
    squares overlap.  Coordinates have y pointing up with the root at (0, 0).
    """
    memo: dict = {}
    width, height = _extent(t, True, gap, memo)
    placed: list[PlacedSquare] = []
    stack = [(t, 0, 0, 0)]
    while stack:
        node, x, y, gen = stack.pop()
        placed.append(PlacedSquare(node.side, x, y, gen))
        horizontal = gen % 2 == 0
        pending = []
        if horizontal:
            cx = x + node.side
            for c in node.children:
                cx += gap
                pending.append((c, cx, y, gen + 1))
                cx += _extent(c, not horizontal, gap, memo)[0]
        else:
            cy = y + node.side
            for c in node.children:
                cy += gap
                pending.append((c, x, cy, gen + 1))
                cy += _extent(c, not horizontal, gap, memo)[1]
        stack.extend(reversed(pending))
    return LayoutTree(tuple(placed), width, height)


_PALETTE = ("#4c72b0", "#55a868", "#8172b2", "#64b5cd", "#ccb974", "#8c8c8c")
_UNIT_FILL = "#f28e2b"


def render_svg(lay: LayoutTree, max_generation: int | None = None, scale: int = 10) -> str:
    """SVG 1.1 document with one <rect> per placed square.

    Rects carry ``gen-<i>`` classes; side-1 squares also carry ``unit``.
    ``max_generation`` drops deeper squares, which gives the build-up stages
    of a tree as separate documents.
    """
    nodes = [s for s in lay.nodes if max_generation is None or s.generation <= max_generation]
    gens = sorted({s.generation for s in lay.nodes})
    pad = scale
    w = lay.width * scale + 2 * pad
    h = lay.height * scale + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        "<style>",
        "rect { stroke: #222222; stroke-width: 1; }",
    ]
    for g in gens:
        out.append(f".gen-{g} {{ fill: {_PALETTE[g % len(_PALETTE)]}; }}")
    out.append(f".unit {{ fill: {_UNIT_FILL}; }}")
    out.append("</style>")
    for s in nodes:
        cls = f"gen-{s.generation}" + (" unit" if s.side == 1 else "")
        x = pad + s.x * scale
        y = pad + (lay.height - s.y - s.side) * scale
        size = s.side * scale
        out.append(
            f'<rect class="{cls}" x="{x}" y="{y}" width="{size}" height="{size}" '
            f'data-side="{s.side}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- JSON --------------------------------------------------------------------

def _to_obj(t: DivisorTree) -> dict:
    return {"side": t.side, "children": [_to_obj(c) for c in t.children]}


def export_json(t: DivisorTree) -> str:
    return json.dumps(_to_obj(t), separators=(",", ":"))


def _from_obj(obj) -> DivisorTree:
    if not isinstance(obj, dict) or set(obj) != {"side", "children"}:
        raise ValueError(f"expected {{side, children}} object, got {obj!r}")
    side = obj["side"]
    if not isinstance(side, int) or isinstance(side, bool) or side < 1:
        raise ValueError(f"side must be a positive integer, got {side!r}")
    return DivisorTree(side, tuple(_from_obj(c) for c in obj["children"]))


def parse_json(text: str) -> DivisorTree:
    return _from_obj(json.loads(text))
