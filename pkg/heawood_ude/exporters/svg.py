'''
svg.py: Drawings of embeddings, one SVG document each
'''

from dataclasses import dataclass

import svgwrite

from heawood_ude.exceptions import ConfigurationError
from heawood_ude.exporters.exporter import Exporter
from heawood_ude.incidence import ALL_LABELS, build_heawood_incidence

PADDING = 0.2


@dataclass(frozen=True)
class RenderStyle:
    """
    @type scale: pixels per unit length
    @type vertex_radius: pixels
    @type label_offset: (dx, dy) pixels from the vertex centre
    """
    scale: float = 200
    vertex_radius: float = 6
    label_offset: tuple = (8, -8)
    point_colour: str = '#1f77b4'
    line_colour: str = '#d62728'
    edge_colour: str = '#333333'
    edge_width: float = 2
    font_size: int = 14

    def __post_init__(self):
        if not self.scale > 0:
            raise ConfigurationError("scale must be positive, got " +
                                     str(self.scale))
        if not self.vertex_radius > 0:
            raise ConfigurationError("vertex radius must be positive")


def _pixel(value):
    return round(float(value), 3)


def render_svg(e, style=None):
    """
    @type e: EmbeddingCandidate
    @type style: RenderStyle
    @rtype string
    @return SVG document with the 21 unit edges and the 14 labelled
        vertices, y axis pointing up
    """
    style = style or RenderStyle()
    coords = e.coords
    xs = [coords[label].x for label in ALL_LABELS]
    ys = [coords[label].y for label in ALL_LABELS]
    x_min = min(xs) - PADDING
    y_max = max(ys) + PADDING
    width = (max(xs) + PADDING - x_min) * style.scale
    height = (y_max - min(ys) + PADDING) * style.scale

    def place(p):
        return (_pixel((p.x - x_min) * style.scale),
                _pixel((y_max - p.y) * style.scale))

    dwg = svgwrite.Drawing(size=(_pixel(width), _pixel(height)),
                           profile='full', debug=False)
    edges = dwg.add(dwg.g(id='edges', stroke=style.edge_colour,
                          stroke_width=style.edge_width))
    for point, line in build_heawood_incidence().flags:
        edges.add(dwg.line(start=place(coords[point]),
                           end=place(coords[line])))

    vertices = dwg.add(dwg.g(id='vertices', font_size=style.font_size,
                             font_family='sans-serif'))
    dx, dy = style.label_offset
    for label in ALL_LABELS:
        x, y = place(coords[label])
        colour = style.point_colour if label.is_point else style.line_colour
        vertices.add(dwg.circle(center=(x, y), r=style.vertex_radius,
                                fill=colour))
        vertices.add(dwg.text(str(label),
                              insert=(_pixel(x + dx), _pixel(y + dy)),
                              fill=colour))
    return dwg.tostring()


class SvgExporter(Exporter):

    def __init__(self, style=None):
        self.style = style or RenderStyle()

    def _documents(self, embeddings):
        return [('embedding-%02d.svg' % (i + 1), render_svg(e, self.style))
                for i, e in enumerate(embeddings)]
