from scancarrier.patterns.base import BasePattern


class DiagonalPattern(BasePattern):
    """
    Continuous diagonal: zigzag over anti-diagonals from (0, 0).

    Even anti-diagonals run up and to the right, odd ones down and to the
    left, which is the JPEG coefficient order extended to rectangles.
    """

    letter = "D"

    def base_order(self, rows, cols):
        cells = []
        for s in range(rows + cols - 1):
            first = max(0, s - cols + 1)
            last = min(s, rows - 1)
            row_range = range(first, last + 1)
            if s % 2 == 0:
                row_range = reversed(row_range)
            cells.extend((r, s - r) for r in row_range)
        return cells
