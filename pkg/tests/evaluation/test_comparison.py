import pytest

from uvlife.evaluation.comparison import ModelScore, compare_models, mixed_city_sample
from uvlife.evaluation.metrics import UvMetrics
from uvlife.exception import UvlUserError


def score(dataset, method, miou, uv_iou=0.5):
    return ModelScore(dataset, method, UvMetrics(uv_iou, None, None, None, miou))


class TestCompareModels:
    def test_best_miou_per_dataset(self):
        best = compare_models(
            [
                score("wuhan", "unet", 0.80),
                score("wuhan", "deeplab", 0.84),
                score("beijing", "unet", 0.78),
            ]
        )

        assert list(best) == ["beijing", "wuhan"]
        assert best["wuhan"].method == "deeplab"
        assert best["beijing"].method == "unet"

    def test_ties_go_to_uv_iou_then_name(self):
        best = compare_models(
            [
                score("wuhan", "b", 0.8, uv_iou=0.7),
                score("wuhan", "c", 0.8, uv_iou=0.75),
                score("wuhan", "a", 0.8, uv_iou=0.75),
            ]
        )

        assert best["wuhan"].method == "a"

    def test_undefined_scores_are_skipped(self):
        assert compare_models([score("wuhan", "unet", None)]) == {}

    def test_duplicates(self):
        with pytest.raises(UvlUserError, match="listed twice"):
            compare_models([score("wuhan", "unet", 0.8), score("wuhan", "unet", 0.7)])


class TestMixedCitySample:
    @pytest.fixture
    def tiles(self):
        return {
            "shenzhen": list(range(10)),
            "beijing": list(range(100, 104)),
        }

    def test_equal_share_per_city(self, tiles):
        sample = mixed_city_sample(tiles, seed=1)

        cities = [city for city, _ in sample]
        assert cities == ["beijing"] * 4 + ["shenzhen"] * 4
        shenzhen = [tile for city, tile in sample if city == "shenzhen"]
        assert shenzhen == sorted(shenzhen)
        assert len(set(shenzhen)) == 4

    def test_seeded(self, tiles):
        assert mixed_city_sample(tiles, seed=7) == mixed_city_sample(tiles, seed=7)

    def test_too_many(self, tiles):
        with pytest.raises(UvlUserError, match="smallest city has 4"):
            mixed_city_sample(tiles, seed=1, per_city=5)

    def test_no_cities(self):
        assert mixed_city_sample({}, seed=1) == []
