"""TraceRenderer - draws a two-column deletion trace into a PNG image."""

from pathlib import Path
from typing import Sequence, Tuple, Union

from PIL import Image, ImageDraw

from utils.constants import (
    CELL_MARGIN,
    CELL_SIZE,
    COLOR_BACKGROUND,
    COLOR_BOX_OF_I,
    COLOR_OUTLINE,
    COLOR_SHADED,
    COLOR_TEXT,
    DIAGRAM_SPACING,
    HEADER_HEIGHT,
)
from utils.data_structures import TwoColumnTraceStep
from utils.logging_config import get_logger

logger = get_logger(__name__)


class TraceRenderer:
    """Lays the steps out left to right; each column shows lambda[i] above lambda'[i]."""

    def __init__(self, cell_size: int = CELL_SIZE):
        self.cell_size = cell_size

    def _diagram_size(self, steps: Sequence[TwoColumnTraceStep]) -> Tuple[int, int]:
        rows = max(max(s.shape.num_rows, s.rewritten_shape.num_rows) for s in steps)
        return 2 * self.cell_size, rows * self.cell_size

    def image_size(self, steps: Sequence[TwoColumnTraceStep]) -> Tuple[int, int]:
        if not steps:
            return 2 * CELL_MARGIN + self.cell_size, 2 * CELL_MARGIN + HEADER_HEIGHT
        width, height = self._diagram_size(steps)
        total_width = 2 * CELL_MARGIN + len(steps) * width + (len(steps) - 1) * DIAGRAM_SPACING
        total_height = 2 * CELL_MARGIN + HEADER_HEIGHT + 2 * height + DIAGRAM_SPACING
        return total_width, total_height

    def _draw_diagram(self, draw: ImageDraw.ImageDraw, x: int, y: int, rows: Sequence[int],
                      box_row: int, shaded: Sequence[int]):
        size = self.cell_size
        for r, length in enumerate(rows, start=1):
            for c in range(1, length + 1):
                left = x + (c - 1) * size
                top = y + (r - 1) * size
                if r == box_row and c == length:
                    fill = COLOR_BOX_OF_I
                elif r in shaded:
                    fill = COLOR_SHADED
                else:
                    fill = COLOR_BACKGROUND
                draw.rectangle([left, top, left + size, top + size], fill=fill, outline=COLOR_OUTLINE)

    def render(self, steps: Sequence[TwoColumnTraceStep]) -> Image.Image:
        image = Image.new('RGB', self.image_size(steps), COLOR_BACKGROUND)
        draw = ImageDraw.Draw(image)
        if not steps:
            draw.text((CELL_MARGIN, CELL_MARGIN), "empty", fill=COLOR_TEXT)
            return image

        width, height = self._diagram_size(steps)
        for n, step in enumerate(steps):
            x = CELL_MARGIN + n * (width + DIAGRAM_SPACING)
            draw.text((x, CELL_MARGIN), f"i={step.index}", fill=COLOR_TEXT)
            draw.text((x, CELL_MARGIN + HEADER_HEIGHT // 2), f"case {step.case}", fill=COLOR_TEXT)
            top = CELL_MARGIN + HEADER_HEIGHT
            self._draw_diagram(draw, x, top, step.shape.rows, step.box_row, step.shaded_rows)
            self._draw_diagram(draw, x, top + height + DIAGRAM_SPACING, step.rewritten_shape.rows,
                               step.rewritten_box_row, ())
        return image

    def save(self, steps: Sequence[TwoColumnTraceStep], path: Union[str, Path]) -> Path:
        path = Path(path)
        self.render(steps).save(path, format='PNG')
        logger.info(f"trace with {len(steps)} steps written to {path}")
        return path


def render_trace_png(steps: Sequence[TwoColumnTraceStep], path: Union[str, Path]) -> Path:
    return TraceRenderer().save(steps, path)
