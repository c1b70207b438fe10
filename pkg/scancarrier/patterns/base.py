from abc import ABC, abstractmethod
from typing import List, Tuple

Cell = Tuple[int, int]


class BasePattern(ABC):
    """
    Abstract base class for the four basic scan patterns

    A pattern defines its transform-0 traversal; the remaining seven
    transformations are derived here so every pattern shares one family:

    - 2 mirrors transform 0 horizontally (starts top-right)
    - 4 rotates it by 180 degrees (starts bottom-right)
    - 6 mirrors it vertically (starts bottom-left)
    - 1, 3, 5, 7 are the reverses of 0, 2, 4, 6
    """

    letter: str = None

    @abstractmethod
    def base_order(self, rows: int, cols: int) -> List[Cell]:
        """
        Transform-0 traversal of a rows x cols grid.

        :param rows: Grid height, at least 1
        :param cols: Grid width, at least 1
        :return: Every (row, col) cell exactly once, in visiting order
        """
        raise NotImplementedError

    def order(self, transform: int, rows: int, cols: int) -> List[Cell]:
        if not 0 <= transform <= 7:
            raise ValueError(f"transform {transform} outside 0..7")
        even, reverse = transform & ~1, transform & 1
        cells = self.base_order(rows, cols)
        if even == 2:
            cells = [(r, cols - 1 - c) for r, c in cells]
        elif even == 4:
            cells = [(rows - 1 - r, cols - 1 - c) for r, c in cells]
        elif even == 6:
            cells = [(rows - 1 - r, c) for r, c in cells]
        if reverse:
            cells.reverse()
        return cells
