import numpy as np
import pytest
from pydantic import ValidationError

from scancarrier.core.cipher import encrypt, preset_pipeline
from scancarrier.core.exceptions import ImageShapeError, MetricsError
from scancarrier.core.metrics import adjacent_correlation, entropy, histogram, npcr_uaci, report
from scancarrier.core.models import Direction, Image, MetricsReport
from scancarrier.core.scan import apply_path, generate_path
from scancarrier.utils.helpers import gradient_image
from scancarrier.utils.pgm import read_pgm

from helpers import ALL_SPECS, FIXTURES, random_image

DEFAULT_KEY = "UniversityOfMysore"


def checkerboard(rows=4, cols=4):
    r, c = np.indices((rows, cols))
    return Image(pixels=255 * ((r + c) % 2))


class TestHistogram:
    def test_constant(self):
        counts = histogram(Image(pixels=np.zeros((3, 3), dtype=np.uint8)))
        assert counts[0] == 9
        assert sum(counts[1:]) == 0

    def test_every_value_once(self):
        counts = histogram(Image(pixels=np.arange(256).reshape(16, 16)))
        assert counts == [1] * 256


class TestEntropy:
    def test_constant(self):
        assert entropy(Image(pixels=np.full((4, 4), 9))) == 0.0

    def test_two_values(self):
        assert entropy(checkerboard()) == 1.0

    def test_uniform(self):
        assert entropy(Image(pixels=np.arange(256).reshape(16, 16))) == 8.0

    def test_bounds(self, rng):
        for _ in range(20):
            value = entropy(random_image(rng, 7, 9))
            assert 0.0 <= value <= 8.0

    def test_permutation_invariant(self, rng):
        img = random_image(rng, 9, 9)
        for scan in ALL_SPECS:
            assert entropy(apply_path(img, generate_path(scan, 9, 9))) == entropy(img)


class TestAdjacentCorrelation:
    def test_constant_is_undefined(self):
        img = Image(pixels=np.full((5, 5), 200))
        for direction in Direction:
            assert adjacent_correlation(img, direction) is None

    def test_gradient(self):
        img = gradient_image(256, 256, step=1)
        assert adjacent_correlation(img, "horizontal") == pytest.approx(1.0, abs=1e-6)
        assert adjacent_correlation(img, Direction.VERTICAL) == pytest.approx(1.0, abs=1e-6)

    def test_anticorrelated(self):
        img = checkerboard(6, 6)
        assert adjacent_correlation(img, Direction.HORIZONTAL) == pytest.approx(-1.0)
        assert adjacent_correlation(img, Direction.VERTICAL) == pytest.approx(-1.0)
        assert adjacent_correlation(img, Direction.DIAGONAL) == pytest.approx(1.0)

    def test_bounds(self, rng):
        for _ in range(20):
            img = random_image(rng, 6, 6)
            for direction in Direction:
                value = adjacent_correlation(img, direction)
                assert value is None or -1.0 <= value <= 1.0

    def test_too_small(self):
        with pytest.raises(MetricsError):
            adjacent_correlation(Image.from_rows([[5]]), Direction.HORIZONTAL)
        with pytest.raises(MetricsError):
            adjacent_correlation(Image.from_rows([[1, 2, 3]]), Direction.VERTICAL)

    def test_unknown_direction(self):
        with pytest.raises(ValueError):
            adjacent_correlation(checkerboard(), "sideways")


class TestNpcrUaci:
    def test_identical(self, rng):
        img = random_image(rng)
        assert npcr_uaci(img, img) == (0.0, 0.0)

    def test_inverted(self):
        black = Image(pixels=np.zeros((3, 3), dtype=np.uint8))
        white = Image(pixels=np.full((3, 3), 255))
        assert npcr_uaci(black, white) == pytest.approx((100.0, 100.0))

    def test_single_pixel(self):
        a = Image.from_rows([[10, 20], [30, 40]])
        b = Image.from_rows([[10, 20], [30, 91]])
        npcr, uaci = npcr_uaci(a, b)
        assert npcr == pytest.approx(25.0)
        assert uaci == pytest.approx(100 * 51 / (255 * 4))

    def test_symmetric(self, rng):
        for _ in range(10):
            a, b = random_image(rng, 5, 8), random_image(rng, 5, 8)
            assert npcr_uaci(a, b) == npcr_uaci(b, a)

    def test_shape_mismatch(self, rng):
        with pytest.raises(ImageShapeError):
            npcr_uaci(random_image(rng, 2, 3), random_image(rng, 3, 2))


class TestReport:
    def test_constant(self):
        result = report(Image(pixels=np.full((4, 4), 7)))
        assert result.entropy == 0.0
        assert all(value is None for value in result.correlations.values())
        assert result.npcr is None and result.uaci is None
        assert result.histogram[7] == 16

    def test_against_itself(self, rng):
        img = random_image(rng)
        result = report(img, img)
        assert (result.npcr, result.uaci) == (0.0, 0.0)

    def test_single_row(self):
        result = report(Image.from_rows([[1, 2, 4]]))
        assert result.correlations[Direction.VERTICAL] is None
        assert result.correlations[Direction.HORIZONTAL] is not None

    def test_reference_shape_mismatch_propagates(self, rng):
        with pytest.raises(ImageShapeError):
            report(random_image(rng, 4, 4), random_image(rng, 4, 5))

    def test_model_invariants(self):
        with pytest.raises(ValidationError):
            MetricsReport(rows=1, cols=1, histogram=[0] * 256, entropy=0.0, correlations={})
        with pytest.raises(ValidationError):
            MetricsReport(
                rows=1,
                cols=1,
                histogram=[1] + [0] * 255,
                entropy=0.0,
                correlations={Direction.HORIZONTAL: 1.5},
            )


class TestDistortionOrdering:
    """Pinned values on the gradient fixture with D0 and the default keyword."""

    @pytest.fixture
    def gradient(self):
        return read_pgm(FIXTURES / "gradient.pgm")

    def test_fixture_is_gradient(self, gradient):
        assert gradient == gradient_image()
        assert adjacent_correlation(gradient, Direction.HORIZONTAL) == pytest.approx(1.0, abs=1e-9)
        assert entropy(gradient) == pytest.approx(7.0, abs=1e-9)

    def test_scan_lowers_correlation(self, gradient):
        scanned = encrypt(gradient, preset_pipeline("a", "D0", DEFAULT_KEY))
        plain = adjacent_correlation(gradient, Direction.HORIZONTAL)
        cipher = adjacent_correlation(scanned, Direction.HORIZONTAL)
        assert cipher < plain
        assert cipher == pytest.approx(0.99963705336522046, abs=1e-9)

    def test_hybrid_raises_entropy(self, gradient):
        scanned = encrypt(gradient, preset_pipeline("a", "D0", DEFAULT_KEY))
        hybrid = encrypt(gradient, preset_pipeline("e", "D0", DEFAULT_KEY))
        assert entropy(scanned) == pytest.approx(7.0, abs=1e-9)
        assert entropy(hybrid) == pytest.approx(7.9544803069272714, abs=1e-9)
        assert entropy(hybrid) >= entropy(scanned)

    def test_hybrid_report(self, gradient):
        hybrid = encrypt(gradient, preset_pipeline("e", "D0", DEFAULT_KEY))
        result = report(hybrid, gradient)
        assert result.npcr > 0
        assert result.npcr == pytest.approx(99.517822265625, abs=1e-9)
        assert result.uaci == pytest.approx(33.455547257965684, abs=1e-9)
        assert result.correlations[Direction.HORIZONTAL] == pytest.approx(
            -0.0063060100214062057, abs=1e-9
        )

    def test_carrier_only_entropy(self, gradient):
        added = encrypt(gradient, preset_pipeline("b", "D0", DEFAULT_KEY))
        assert entropy(added) == pytest.approx(7.9544803069272723, abs=1e-9)
