"""Category aggregation, ranking, and catalog recommendations."""

import math
import random
from pathlib import Path

import numpy as np
import pytest

from linksage.classifier import LabeledUrl, VectorizerConfig, fit_url_classifier
from linksage.errors import (
    DuplicateCatalogUrl,
    EmptyInput,
    InvariantViolation,
    MalformedRow,
    MissingHeader,
    NegativeFrecency,
    ZeroTotal,
)
from linksage.history import HistoryRecord
from linksage.recommend import (
    CategorizedLink,
    CategoryScore,
    category_probabilities,
    category_totals,
    load_catalog,
    parse_catalog,
    rank_categories,
    recommend,
    score_history,
)
from linksage.regression import LinearModel

FIXTURES = Path(__file__).parent / "fixtures"

# A mixed-category snapshot of scored, classified history rows.
SCORED_ROWS = [
    CategorizedLink("https://web.facebook.com/", 543, 102108.26, "Computers"),
    CategorizedLink("https://drive.google.com/drive/my-drive", 28, 4873.655, "Computers"),
    CategorizedLink("http://codeforces.com/contests", 21, 3650.896, "Arts"),
    CategorizedLink("https://www.floydhub.com/jobs", 4, 665.371, "Business"),
    CategorizedLink("http://www.cricbuzz.com/live-cricket-scores", 4, 579.825, "Games"),
    CategorizedLink("http://localhost/map/googlemap.php", 9, 528.395, "Computers"),
    CategorizedLink("https://www.kaggle.com/competitions", 2, 309.769, "Arts"),
    CategorizedLink("https://freebitco.in/", 1, 111.909, "Business"),
]


def expected_totals(links):
    """In-test aggregation oracle built on plain dicts and fsum."""
    frecency, visits = {}, {}
    for link in links:
        frecency.setdefault(link.category, []).append(link.frecency)
        visits[link.category] = visits.get(link.category, 0) + link.visit_count
    return {c: (math.fsum(frecency[c]), visits[c]) for c in frecency}


class TestParseCatalog:
    def test_bundled_fixture(self):
        catalog = parse_catalog((FIXTURES / "catalog.csv").read_text())
        assert list(catalog) == ["Computers", "Arts", "Business", "Games"]
        assert catalog["Computers"] == [
            "https://twitter.com",
            "https://bitbucket.org",
            "https://reddit.com",
            "https://instagram.com",
            "https://datascience.com",
            "https://khanacademy.org",
            "https://www.computer.org",
            "https://www.apple.com",
            "https://www.ieee.org",
        ]
        assert catalog["Games"] == [
            "http://www.mariogames.be",
            "https://www.goal.com/en",
            "http://gamesgames.com",
        ]

    def test_load_catalog_reads_the_same(self):
        path = FIXTURES / "catalog.csv"
        assert load_catalog(path) == parse_catalog(path.read_text())

    def test_errors(self):
        with pytest.raises(MissingHeader):
            parse_catalog("url,category\nx,y\n")
        with pytest.raises(MalformedRow) as info:
            parse_catalog("category,url\nArts\n")
        assert info.value.line_no == 2
        with pytest.raises(InvariantViolation):
            parse_catalog("category,url\n ,https://x.org\n")
        with pytest.raises(DuplicateCatalogUrl) as dup:
            parse_catalog("category,url\nArts,https://x.org\nArts,https://x.org\n")
        assert (dup.value.category, dup.value.url) == ("Arts", "https://x.org")

    def test_same_url_in_two_categories_is_fine(self):
        catalog = parse_catalog("category,url\nArts,https://x.org\nGames,https://x.org\n")
        assert catalog == {"Arts": ["https://x.org"], "Games": ["https://x.org"]}


class TestCategoryTotals:
    def test_single_link(self):
        totals = category_totals([CategorizedLink("u", 2, 10.0, "A")])
        assert totals == [CategoryScore("A", 10.0, 2)]

    def test_two_links_add(self):
        totals = category_totals(
            [CategorizedLink("u1", 1, 3.0, "A"), CategorizedLink("u2", 1, 4.0, "A")]
        )
        assert totals[0].total_frecency == 7.0

    def test_mixed_snapshot_sums_per_category(self):
        totals = category_totals(SCORED_ROWS)
        assert [t.category for t in totals] == ["Computers", "Arts", "Business", "Games"]
        oracle = expected_totals(SCORED_ROWS)
        by_name = {t.category: t for t in totals}
        for category, (frecency, visits) in oracle.items():
            assert by_name[category].total_frecency == pytest.approx(frecency, rel=1e-12)
            assert by_name[category].total_visits == visits
        # frozen decimals for this snapshot, alongside the fsum oracle above
        assert by_name["Computers"].total_frecency == pytest.approx(107510.31, abs=0.01)
        assert by_name["Arts"].total_frecency == pytest.approx(3960.665, abs=0.01)
        assert by_name["Business"].total_frecency == pytest.approx(777.28, abs=0.01)
        assert by_name["Games"].total_frecency == pytest.approx(579.825, abs=0.01)
        assert [by_name[c].total_visits for c in ["Computers", "Arts", "Business", "Games"]] == [
            580, 23, 5, 4,
        ]

    def test_errors(self):
        with pytest.raises(EmptyInput):
            category_totals([])
        with pytest.raises(NegativeFrecency) as info:
            category_totals([CategorizedLink("u", 1, -0.5, "A")])
        assert (info.value.url, info.value.value) == ("u", -0.5)

    def test_totals_are_permutation_invariant(self):
        rng = random.Random(2)
        shuffled = SCORED_ROWS[:]
        reference = {
            (t.category, round(t.total_frecency, 6), t.total_visits)
            for t in category_totals(SCORED_ROWS)
        }
        for _ in range(5):
            rng.shuffle(shuffled)
            got = {
                (t.category, round(t.total_frecency, 6), t.total_visits)
                for t in category_totals(shuffled)
            }
            assert got == reference

    def test_concatenation_adds(self):
        a = [CategorizedLink("u1", 1, 5.0, "A"), CategorizedLink("u2", 2, 1.0, "B")]
        b = [CategorizedLink("u3", 3, 2.5, "A")]
        combined = {t.category: t for t in category_totals(a + b)}
        assert combined["A"].total_frecency == 7.5
        assert combined["A"].total_visits == 4
        assert combined["B"].total_frecency == 1.0


class TestCategoryProbabilities:
    def test_single_category_is_certain(self):
        scores = category_probabilities([CategoryScore("A", 42.0, 1)])
        assert scores[0].probability == 1.0

    def test_quarter_split(self):
        scores = category_probabilities(
            [CategoryScore("A", 1.0, 1), CategoryScore("B", 3.0, 1)]
        )
        assert [s.probability for s in scores] == [0.25, 0.75]

    def test_mixed_snapshot_probabilities(self):
        totals = category_totals(SCORED_ROWS)
        scores = category_probabilities(totals)
        grand = math.fsum(t.total_frecency for t in totals)
        for before, after in zip(totals, scores):
            assert after.probability == pytest.approx(
                before.total_frecency / grand, rel=1e-12
            )
            assert after.total_frecency == before.total_frecency
            assert after.total_visits == before.total_visits
        by_name = {s.category: s.probability for s in scores}
        assert by_name["Computers"] == pytest.approx(0.9529, abs=1e-4)
        assert by_name["Arts"] == pytest.approx(0.035, abs=1e-3)
        assert by_name["Business"] == pytest.approx(0.0069, abs=1e-3)
        assert by_name["Games"] == pytest.approx(0.0051, abs=1e-3)
        assert math.fsum(by_name.values()) == pytest.approx(1.0, abs=1e-9)

    def test_zero_total(self):
        with pytest.raises(ZeroTotal):
            category_probabilities([CategoryScore("A", 0.0, 1)])


class TestRankCategories:
    def test_mixed_snapshot_order(self):
        ranked = rank_categories(category_probabilities(category_totals(SCORED_ROWS)))
        assert [s.category for s in ranked] == ["Computers", "Arts", "Business", "Games"]

    def test_alphabetical_tie_break(self):
        ranked = rank_categories(
            [CategoryScore("B", 1.0, 1, 0.5), CategoryScore("A", 1.0, 1, 0.5)]
        )
        assert [s.category for s in ranked] == ["A", "B"]

    def test_single(self):
        only = CategoryScore("A", 1.0, 1, 1.0)
        assert rank_categories([only]) == [only]

    def test_requires_probabilities(self):
        with pytest.raises(ValueError):
            rank_categories([CategoryScore("A", 1.0, 1)])

    def test_scaling_frecencies_never_reorders(self):
        for scale in [0.001, 1.0, 7.3, 1e6]:
            scaled = [
                CategorizedLink(l.url, l.visit_count, l.frecency * scale, l.category)
                for l in SCORED_ROWS
            ]
            ranked = rank_categories(category_probabilities(category_totals(scaled)))
            assert [s.category for s in ranked] == ["Computers", "Arts", "Business", "Games"]


class TestRecommend:
    @pytest.fixture
    def catalog(self):
        return load_catalog(FIXTURES / "catalog.csv")

    def test_top_category_top_three(self, catalog):
        result = recommend(["Computers"], catalog, set(), 3)
        assert result == [
            ("Computers", ["https://twitter.com", "https://bitbucket.org", "https://reddit.com"])
        ]

    def test_all_categories_in_ranking_order(self, catalog):
        result = recommend(["Computers", "Arts", "Business", "Games"], catalog, set(), 3)
        assert [category for category, _ in result] == [
            "Computers", "Arts", "Business", "Games",
        ]
        assert result[3][1] == [
            "http://www.mariogames.be", "https://www.goal.com/en", "http://gamesgames.com",
        ]

    def test_visited_urls_are_skipped_in_order(self, catalog):
        visited = {"https://twitter.com", "https://reddit.com"}
        result = recommend(["Computers"], catalog, visited, 3)
        assert result[0][1] == [
            "https://bitbucket.org", "https://instagram.com", "https://datascience.com",
        ]

    def test_fully_visited_category_is_empty(self, catalog):
        visited = set(catalog["Computers"])
        assert recommend(["Computers"], catalog, visited, 3) == [("Computers", [])]

    def test_unknown_category_maps_to_empty(self, catalog):
        assert recommend(["Health"], catalog, set(), 3) == [("Health", [])]

    def test_k_zero_gives_empty_lists(self, catalog):
        result = recommend(["Computers", "Arts"], catalog, set(), 0)
        assert result == [("Computers", []), ("Arts", [])]

    def test_negative_k_rejected(self, catalog):
        with pytest.raises(ValueError):
            recommend(["Computers"], catalog, set(), -1)


class TestScoreHistory:
    def _models(self):
        # regression model that just echoes the visit count: theta over
        # [bias, first, last, count] standardized with mean 0 / std 1
        linear = LinearModel(
            np.array([0.0, 0.0, 0.0, 1.0]),
            np.array([0.0, 0.0, 0.0]),
            np.array([1.0, 1.0, 1.0]),
        )
        corpus = [
            LabeledUrl("game.zone", "Games"),
            LabeledUrl("game.hub", "Games"),
            LabeledUrl("paint.gallery", "Arts"),
        ]
        mnb = fit_url_classifier(corpus, VectorizerConfig(), alpha=0.1)
        return linear, mnb

    def test_empty_history(self):
        linear, mnb = self._models()
        assert score_history([], linear, mnb) == []

    def test_scores_and_categories(self):
        linear, mnb = self._models()
        records = [
            HistoryRecord("https://game.zone/play", 10, 20, 7),
            HistoryRecord("https://paint.gallery/expo", 10, 20, 3),
        ]
        scored = score_history(records, linear, mnb)
        assert [link.url for link in scored] == [r.url for r in records]
        assert [link.visit_count for link in scored] == [7, 3]
        assert [link.frecency for link in scored] == [7.0, 3.0]
        assert [link.category for link in scored] == ["Games", "Arts"]

    def test_negative_predictions_clamp_to_zero(self):
        linear = LinearModel(
            np.array([-50.0, 0.0, 0.0, 0.0]),
            np.array([0.0, 0.0, 0.0]),
            np.array([1.0, 1.0, 1.0]),
        )
        _, mnb = self._models()
        scored = score_history([HistoryRecord("https://game.zone/x", 1, 2, 1)], linear, mnb)
        assert scored[0].frecency == 0.0
