class ScanCarrierError(Exception):
    """Base exception for all scancarrier errors"""


class InvalidScanSpecError(ScanCarrierError):
    """Raised when a scan spec text does not name a pattern letter and a transform 0..7"""


class ScanPathError(ScanCarrierError):
    """Raised when a scan path does not fit the image it is applied to"""


class ImageShapeError(ScanCarrierError):
    """Raised when two images that must match in size do not"""


class KeywordError(ScanCarrierError):
    """Raised when a carrier keyword is empty or holds a non-alphanumeric character"""


class PipelineSyntaxError(ScanCarrierError):
    """Raised when pipeline text does not follow the grammar"""

    def __init__(self, message: str, position: int, expected: str = None):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class PipelineValidationError(ScanCarrierError):
    """Raised when a pipeline cannot be decrypted"""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__(
            "pipeline is not decryptable: "
            + "; ".join(str(diagnostic) for diagnostic in self.diagnostics)
        )


class MetricsError(ScanCarrierError):
    """Raised when an image is too small for the requested measurement"""


class ImageFormatError(ScanCarrierError):
    """Raised when a graymap file is malformed or uses an unsupported variant"""


class ImageIOError(ScanCarrierError):
    """Raised when an image file cannot be read or written"""


class CacheMissError(ScanCarrierError):
    """Raised when a requested key is not found in the path cache"""


class SerializationError(ScanCarrierError):
    """Raised when a report cannot be serialized"""
