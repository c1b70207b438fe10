from scancarrier.patterns.base import BasePattern


class SpiralPattern(BasePattern):
    """Clockwise inward spiral starting at (0, 0)."""

    letter = "S"

    def base_order(self, rows, cols):
        cells = []
        top, bottom, left, right = 0, rows - 1, 0, cols - 1
        while top <= bottom and left <= right:
            cells.extend((top, c) for c in range(left, right + 1))
            cells.extend((r, right) for r in range(top + 1, bottom + 1))
            # single row or column left: nothing to walk back along
            if top < bottom and left < right:
                cells.extend((bottom, c) for c in range(right - 1, left - 1, -1))
                cells.extend((r, left) for r in range(bottom - 1, top, -1))
            top, bottom, left, right = top + 1, bottom - 1, left + 1, right - 1
        return cells
