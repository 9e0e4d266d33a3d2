"""The Fibonacci representation graph and its SVG rendering.

A word w_0 .. w_n over {0, 1} sits at P(w) = sum_k phi^{-k} (2 w_k - 1 - i).
Two words land on the same point exactly when they have the same length and
the same Fibonacci value, so vertices are keyed by (length, value) and the
floating coordinates are only used for drawing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .exact import DomainError, fib
from .fibrep import PHI, rho


def word_value(word: str) -> int:
    """[i_1 .. i_k] = sum_j i_j F_{k+2-j}."""
    k = len(word)
    return sum(fib(k + 2 - j) for j, c in enumerate(word, 1) if c == "1")


def word_point(word: str) -> complex:
    return sum(PHI ** -k * complex(2 * int(c) - 1, -1) for k, c in enumerate(word))


@dataclass
class GraphG:
    depth: int
    # (length, value) -> point / number of downward paths from the root
    points: dict[tuple[int, int], complex] = field(default_factory=dict)
    paths: dict[tuple[int, int], int] = field(default_factory=dict)
    edges: list[tuple[tuple[int, int], tuple[int, int]]] = field(default_factory=list)

    def row(self, n: int) -> list[tuple[int, int]]:
        """Vertices of row n (words of length n - 1), left to right."""
        keys = [key for key in self.points if key[0] == n - 1]
        return sorted(keys, key=lambda key: self.points[key].real)

    def to_svg(self, labels: bool = False, scale: float = 100.0) -> str:
        return render_svg(self, labels=labels, scale=scale)


def graph_g(depth: int) -> GraphG:
    """All words of length <= depth (rows 1 .. depth + 1), grown row by row.

    Appending a letter maps value v to rho(v) + letter, since [w0] = rho([w]).
    """
    if not 0 <= depth <= 16:
        raise DomainError("depth must be in 0..16")
    g = GraphG(depth)
    root = (0, 0)
    g.points[root] = 0j
    g.paths[root] = 1
    frontier = [root]
    for length in range(depth):
        step = PHI ** -length
        nxt: dict[tuple[int, int], None] = {}
        for key in frontier:
            base = rho(key[1])
            for letter in (0, 1):
                child = (length + 1, base + letter)
                g.edges.append((key, child))
                if child not in g.points:
                    g.points[child] = g.points[key] + step * complex(2 * letter - 1, -1)
                    g.paths[child] = 0
                    nxt[child] = None
                g.paths[child] += g.paths[key]
        frontier = list(nxt)
    return g


def render_svg(g: GraphG, labels: bool = False, scale: float = 100.0) -> str:
    """Standalone SVG: real axis to the right, -Im(P) downward."""
    pts = {key: (p.real * scale, -p.imag * scale) for key, p in g.points.items()}
    pad = 0.25 * scale
    xs = [x for x, _ in pts.values()]
    ys = [y for _, y in pts.values()]
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0:.3f} {y0:.3f} {w:.3f} {h:.3f}" '
        f'width="{w:.0f}" height="{h:.0f}">',
        '<g stroke="#555" stroke-width="0.6">',
    ]
    for a, b in g.edges:
        (xa, ya), (xb, yb) = pts[a], pts[b]
        out.append(f'<line x1="{xa:.3f}" y1="{ya:.3f}" x2="{xb:.3f}" y2="{yb:.3f}"/>')
    out.append("</g>")
    out.append('<g fill="#1f4e79">')
    for (length, value), (x, y) in pts.items():
        r = 0.08 * scale * PHI ** -length
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r:.3f}" data-row="{length + 1}" data-value="{value}"/>')
    out.append("</g>")
    if labels:
        out.append('<g font-family="sans-serif" text-anchor="middle" fill="#000">')
        for (length, value), (x, y) in pts.items():
            size = 0.12 * scale * PHI ** -length
            out.append(f'<text x="{x:.3f}" y="{y - size:.3f}" font-size="{size:.3f}">{escape(str(value))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
