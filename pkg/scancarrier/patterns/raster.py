from scancarrier.patterns.base import BasePattern


class RasterPattern(BasePattern):
    """Continuous raster: rows left to right, then right to left, alternating."""

    letter = "C"

    def base_order(self, rows, cols):
        cells = []
        for r in range(rows):
            columns = range(cols) if r % 2 == 0 else range(cols - 1, -1, -1)
            cells.extend((r, c) for c in columns)
        return cells
