from scancarrier.core.models import ScanPattern
from scancarrier.patterns.base import BasePattern
from scancarrier.patterns.diagonal import DiagonalPattern
from scancarrier.patterns.orthogonal import OrthogonalPattern
from scancarrier.patterns.raster import RasterPattern
from scancarrier.patterns.spiral import SpiralPattern


class PatternRegistry:
    """
    Registry for basic scan patterns.
    """

    _patterns = {
        ScanPattern.RASTER: RasterPattern(),
        ScanPattern.DIAGONAL: DiagonalPattern(),
        ScanPattern.ORTHOGONAL: OrthogonalPattern(),
        ScanPattern.SPIRAL: SpiralPattern(),
    }

    @classmethod
    def get_pattern(cls, pattern) -> BasePattern:
        """
        Returns the pattern implementation for a pattern letter.

        :param pattern: ScanPattern member or its letter
        :return: Pattern instance
        :raises ValueError: If the letter is not registered
        """
        try:
            return cls._patterns[ScanPattern(pattern)]
        except ValueError:
            raise ValueError(f"Pattern '{pattern}' is not registered.") from None

    @classmethod
    def letters(cls):
        return [pattern.value for pattern in cls._patterns]
