"""SVG rendering of level sets with optional arc overlays."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .arcs import ArcApprox
from .core import Color, LevelSets, vertices

_HEX = re.compile(r"^[0-9a-fA-F]{6}$")


@dataclass(frozen=True)
class RenderStyle:
    """Canvas size and colours; colour values are 6-hex-digit RGB strings."""

    canvas: int = 1000
    white_up_fill: str = "f5f5f0"
    white_down_fill: str = "dcdcd2"
    yellow_up_fill: str = "f0c830"
    yellow_down_fill: str = "d4a017"
    background: str = "1e1e28"
    stroke: str = "d62728"
    stroke_width: float = 2.0

    def __post_init__(self):
        if self.canvas <= 0:
            raise ValueError(f"canvas side must be positive, got {self.canvas}")
        for name in (
            "white_up_fill",
            "white_down_fill",
            "yellow_up_fill",
            "yellow_down_fill",
            "background",
            "stroke",
        ):
            value = getattr(self, name)
            if not _HEX.match(value):
                raise ValueError(f"{name} must be a 6-hex-digit RGB string, got {value!r}")

    def fills(self, color: Color) -> tuple[str, str]:
        if color is Color.WHITE:
            return self.white_up_fill, self.white_down_fill
        return self.yellow_up_fill, self.yellow_down_fill


def render_svg(ls: LevelSets, style: RenderStyle | None = None, overlays: list[ArcApprox] | None = None) -> str:
    """One polygon per triangle, apex up, overlay polylines drawn last.

    Output is deterministic byte for byte: triangles are emitted in the
    canonical order and all coordinates use a fixed format.
    """
    style = style or RenderStyle()
    side = style.canvas
    height = side * math.sqrt(3.0) / 2.0

    def xy(p) -> tuple[float, float]:
        cx, cy = p.to_cartesian()
        return cx * side, height - cy * side

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{height:.4f}" '
        f'viewBox="0 0 {side} {height:.4f}">',
        f'<rect x="0" y="0" width="{side}" height="{height:.4f}" fill="#{style.background}"/>',
    ]
    up_fill, down_fill = style.fills(ls.color)
    for block, fill in ((ls.up, up_fill), (ls.down, down_fill)):
        for t in block:
            pts = " ".join(
                "%.4f,%.4f" % xy(v) for v in vertices(t, ls.scale)
            )
            lines.append(f'<polygon points="{pts}" fill="#{fill}"/>')
    for arc in overlays or []:
        pts = " ".join("%.4f,%.4f" % xy(p) for p in arc.polyline)
        lines.append(
            f'<polyline points="{pts}" fill="none" stroke="#{style.stroke}" '
            f'stroke-width="{style.stroke_width}" stroke-linejoin="round"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
