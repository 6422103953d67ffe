from fractions import Fraction

import pytest

import basketminer.bench as bench_module
from basketminer.apriori import apriori_mine
from basketminer.bench import EngineDisagreementError, benchmark, run_phases
from basketminer.core import FrequentItemset, MiningParams
from basketminer.oracle import GeneratorConfig, generate_db
from helpers import as_pairs

CONFIG = GeneratorConfig(num_transactions=400, universe_size=15,
                         basket_size_range=(1, 6), seed=17)


@pytest.fixture(scope="module")
def bench_db():
    return generate_db(CONFIG)


class TestRunPhases:
    @pytest.mark.parametrize("algorithm", ["apriori", "fpgrowth", "bruteforce"])
    def test_result_matches_apriori(self, bench_db, algorithm):
        params = MiningParams(Fraction(1, 20), 1)
        run = run_phases(algorithm, bench_db, params)
        assert as_pairs(run.result) == as_pairs(apriori_mine(bench_db, params))

    def test_total_is_exactly_build_plus_mine(self, bench_db):
        params = MiningParams(Fraction(1, 10), 1)
        for algorithm in ("apriori", "fpgrowth", "bruteforce"):
            run = run_phases(algorithm, bench_db, params)
            assert run.total_seconds == run.build_seconds + run.mine_seconds

    def test_bruteforce_has_no_build_phase(self, bench_db):
        run = run_phases("bruteforce", bench_db, MiningParams(Fraction(1, 10), 1))
        assert run.build_seconds == 0.0
        assert run.peak_structure == 2 ** len(bench_db.dictionary) - 1

    def test_unknown_algorithm_rejected(self, bench_db):
        with pytest.raises(ValueError):
            run_phases("eclat", bench_db, MiningParams(Fraction(1, 10), 1))


class TestBenchmark:
    def test_report_shape(self, bench_db):
        thresholds = (Fraction(1, 20), Fraction(1, 10))
        report = benchmark(bench_db, thresholds,
                           ("apriori", "fpgrowth", "bruteforce"),
                           repeat=2, dataset="unit")
        assert report.dataset == "unit"
        assert report.repeat == 2
        assert len(report.runs) == 6
        for run in report.runs:
            assert run.total_seconds == run.build_seconds + run.mine_seconds
            assert run.absolute_threshold >= 1
            assert run.peak_structure >= 0

    def test_engines_report_identical_cardinalities(self, bench_db):
        report = benchmark(bench_db, (Fraction(1, 20),),
                           ("apriori", "fpgrowth", "bruteforce"),
                           repeat=1, dataset="unit")
        counts = {run.frequent_itemsets for run in report.runs}
        assert len(counts) == 1

    def test_itemset_counts_antitone_in_threshold(self, bench_db):
        thresholds = (Fraction(1, 50), Fraction(1, 10), Fraction(1, 4))
        report = benchmark(bench_db, thresholds, ("fpgrowth",), repeat=1,
                           dataset="unit")
        cardinalities = [run.frequent_itemsets for run in report.runs]
        assert cardinalities == sorted(cardinalities, reverse=True)

    def test_repeat_must_be_positive(self, bench_db):
        with pytest.raises(ValueError):
            benchmark(bench_db, (Fraction(1, 10),), ("apriori",), repeat=0,
                      dataset="unit")

    def test_disagreement_raises(self, bench_db, monkeypatch):
        def broken(db, params):
            return [FrequentItemset((0,), db.n)]

        monkeypatch.setattr(bench_module, "brute_force_mine", broken)
        with pytest.raises(EngineDisagreementError):
            benchmark(bench_db, (Fraction(1, 10),),
                      ("apriori", "bruteforce"), repeat=1, dataset="unit")
