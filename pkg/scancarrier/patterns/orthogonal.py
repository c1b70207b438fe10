from scancarrier.patterns.base import BasePattern


class OrthogonalPattern(BasePattern):
    """Continuous orthogonal: columns top to bottom, then bottom to top, alternating."""

    letter = "O"

    def base_order(self, rows, cols):
        cells = []
        for c in range(cols):
            row_range = range(rows) if c % 2 == 0 else range(rows - 1, -1, -1)
            cells.extend((r, c) for r in row_range)
        return cells
