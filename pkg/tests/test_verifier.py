"""The law registry, the check engine, audits, and counterexample search."""

import pytest

from ilattice import (
    BudgetExceededError,
    CheckStrategy,
    OpMode,
    audit,
    build_universe,
    check_law,
    enumerate_partitions,
    iter_universes,
    law_by_name,
    law_registry,
    search_counterexample,
    universe_from_partition,
)
from ilattice.verifier import REPORT_SCHEMA, SampleStream

from naive_oracle import LAWS as ORACLE_LAWS, SetOps, check_law as oracle_check


@pytest.fixture
def one_block2():
    return universe_from_partition([(1, 2)])


@pytest.fixture
def classical3():
    return universe_from_partition([(1,), (2,), (3,)])


class TestRegistry:
    def test_size_and_uniqueness(self):
        registry = law_registry()
        assert len(registry) >= 40
        names = [law.name for law in registry]
        assert len(set(names)) == len(names)

    def test_required_entries(self):
        assert law_by_name("orthomodularity").arity == 2
        assert law_by_name("partial-de-morgan-as-stated") is not law_by_name(
            "partial-de-morgan-corrected"
        )
        assert law_by_name("cloud-extensive").mode_sensitivity == "mode-free"
        assert law_by_name("meet-associativity").mode_sensitivity == "per-mode"
        assert law_by_name("modularity-probe").probe

    def test_arities_in_range(self):
        assert all(1 <= law.arity <= 3 for law in law_registry())

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown law"):
            law_by_name("no-such-law")

    def test_every_law_agrees_with_the_oracle_everywhere(self):
        # same names, independent set-based definitions, every universe <= 3 atoms
        assert set(ORACLE_LAWS) == {law.name for law in law_registry()}
        for universe in iter_universes(3):
            ops = SetOps(universe.atom_ids, universe.blocks)
            for law in law_registry():
                modes = (
                    ["literal", "closure"]
                    if law.mode_sensitivity == "per-mode"
                    else ["literal"]
                )
                for mode_name in modes:
                    report = check_law(universe, law, OpMode(mode_name))
                    expected, _ = oracle_check(ops, law.name, mode_name)
                    assert (report.status == "holds") == expected, (
                        universe.digest,
                        law.name,
                        mode_name,
                    )


class TestCheckLaw:
    def test_distributivity_fails_literal_with_minimal_witness(self, one_block2):
        law = law_by_name("distributivity-meet-over-join")
        report = check_law(one_block2, law, OpMode.LITERAL)
        assert report.status == "fails"
        assert report.counterexample == {"A": ("x1",), "B": (), "C": ("x2",)}
        assert report.minimal

    def test_distributivity_holds_on_closed_inputs(self, one_block2):
        law = law_by_name("distributivity-meet-over-join")
        report = check_law(one_block2, law, OpMode.LITERAL, closed_only=True)
        assert report.status == "holds"
        assert report.cases_checked == 2 ** 3  # two closed qsets, arity three

    def test_cloud_extensive_counts_all_subsets(self, classical3):
        report = check_law(classical3, law_by_name("cloud-extensive"), None)
        assert report.status == "holds"
        assert report.cases_checked == 2 ** len(classical3)
        assert report.mode == "n/a"

    def test_counterexample_reevaluates_false(self, one_block2):
        for name in ("meet-associativity", "leq-iff-leq1", "partial-de-morgan-as-stated"):
            law = law_by_name(name)
            report = check_law(one_block2, law, OpMode.LITERAL)
            assert report.status == "fails"
            witness = tuple(
                one_block2.qset(ids) for ids in report.counterexample.values()
            )
            assert not law.predicate(one_block2, witness, OpMode.LITERAL)

    def test_counterexample_is_one_minimal(self, one_block2):
        law = law_by_name("meet-associativity")
        report = check_law(one_block2, law, OpMode.LITERAL)
        witness = [one_block2.qset(ids) for ids in report.counterexample.values()]
        for i, qset in enumerate(witness):
            for atom in qset.members:
                smaller = list(witness)
                smaller[i] = qset - one_block2.qset([atom])
                assert law.predicate(one_block2, tuple(smaller), OpMode.LITERAL)

    def test_mode_required_for_per_mode_laws(self, one_block2):
        with pytest.raises(ValueError, match="mode"):
            check_law(one_block2, law_by_name("meet-associativity"), None)

    def test_case_budget(self, one_block2):
        with pytest.raises(BudgetExceededError, match="budget"):
            check_law(
                one_block2, law_by_name("meet-associativity"), OpMode.LITERAL,
                case_budget=10,
            )


class TestSampled:
    def test_reproducible(self, one_block2):
        strategy = CheckStrategy.sampled(64, seed=7)
        law = law_by_name("distributivity-meet-over-join")
        first = check_law(one_block2, law, OpMode.LITERAL, strategy)
        second = check_law(one_block2, law, OpMode.LITERAL, strategy)
        assert first == second

    def test_holding_law_reports_sample_count(self, classical3):
        strategy = CheckStrategy.sampled(25, seed=1)
        report = check_law(classical3, law_by_name("cloud-extensive"), None, strategy)
        assert report.status == "holds"
        assert report.cases_checked == 25

    def test_sampled_failure_is_sound(self, one_block2):
        strategy = CheckStrategy.sampled(256, seed=3)
        law = law_by_name("distributivity-meet-over-join")
        report = check_law(one_block2, law, OpMode.LITERAL, strategy)
        if report.status == "fails":
            witness = tuple(
                one_block2.qset(ids) for ids in report.counterexample.values()
            )
            assert not law.predicate(one_block2, witness, OpMode.LITERAL)

    def test_stream_is_platform_stable(self):
        stream = SampleStream(1, '[["x1","x2"]]', "law")
        values = [stream.next_u64() for _ in range(3)]
        again = SampleStream(1, '[["x1","x2"]]', "law")
        assert values == [again.next_u64() for _ in range(3)]

    def test_strategy_validation(self):
        with pytest.raises(ValueError):
            CheckStrategy("sampled")
        with pytest.raises(ValueError):
            CheckStrategy("sampled", sample_count=0)
        with pytest.raises(ValueError):
            CheckStrategy("guess")


class TestAudit:
    def test_classical_universe_everything_holds(self, classical3):
        table = audit(classical3)
        assert all(report.status == "holds" for report in table.rows)

    def test_one_block_literal_failures(self, one_block2):
        table = audit(one_block2, modes=[OpMode.LITERAL])
        report = table.row("meet-associativity", "literal")
        assert report.status == "fails"
        assert report.counterexample == {"A": ("x1",), "B": ("x1",), "C": ("x2",)}
        failing = {r.law for r in table.rows if r.status == "fails"}
        assert failing == {
            "meet-associativity",
            "order-meet-greatest-lower",
            "order-meet-collapse",
            "leq-iff-leq1",
            "distributivity-join-over-meet",
            "distributivity-meet-over-join",
            "partial-de-morgan-as-stated",
            "meet-de-morgan-equality",
            "modularity-probe",
        }

    def test_rows_cover_registry_in_order(self, one_block2):
        table = audit(one_block2)
        assert {row.law for row in table.rows} == {law.name for law in law_registry()}
        keys = [(row.law, row.mode) for row in table.rows]
        assert keys == sorted(keys)

    def test_deterministic(self, one_block2):
        assert audit(one_block2).to_dict() == audit(one_block2).to_dict()

    def test_budget_overflow_marks_skipped(self, one_block2):
        table = audit(one_block2, case_budget=30)
        statuses = {row.status for row in table.rows}
        assert "skipped" in statuses
        arity3 = table.row("join-associativity", "n/a")
        assert arity3.status == "skipped"
        arity1 = table.row("cloud-extensive", "n/a")
        assert arity1.status == "holds"

    def test_isomorphic_universes_same_statuses(self):
        left = build_universe(
            [("x1", "m"), ("x2", "m"), ("y", "M")], [["x1", "x2"], ["y"]]
        )
        right = build_universe(
            [("p", "M"), ("q", "m"), ("r", "m")], [["p"], ["q", "r"]]
        )
        def statuses(table):
            return [(row.law, row.mode, row.status) for row in table.rows]
        assert statuses(audit(left)) == statuses(audit(right))

    def test_schema_validates(self, one_block2):
        jsonschema = pytest.importorskip("jsonschema")
        jsonschema.validate(audit(one_block2).to_dict(), REPORT_SCHEMA)


class TestPartitions:
    def test_bell_counts(self):
        for n, bell in {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}.items():
            assert len(list(enumerate_partitions(n))) == bell

    def test_restricted_growth_order_n3(self):
        assert list(enumerate_partitions(3)) == [
            ((1, 2, 3),),
            ((1, 2), (3,)),
            ((1, 3), (2,)),
            ((1,), (2, 3)),
            ((1,), (2,), (3,)),
        ]

    def test_range_errors(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(0))
        with pytest.raises(ValueError):
            list(enumerate_partitions(7))

    def test_universe_from_partition(self):
        u = universe_from_partition([(1, 3), (2,)])
        assert u.atom_ids == ("x1", "x2", "x3")
        assert u.blocks == (("x1", "x3"), ("x2",))
        assert all(atom.kind == "m" for atom in u.atoms)

    def test_iter_universes_counts(self):
        assert sum(1 for _ in iter_universes(4)) == 1 + 2 + 5 + 15


class TestSearch:
    def test_distributivity_found_at_two_atom_block(self):
        law = law_by_name("distributivity-meet-over-join")
        found = search_counterexample(law, OpMode.LITERAL, 4)
        assert found is not None
        universe, witness = found
        assert universe.digest == '[["x1","x2"]]'
        assert {name: q.members for name, q in witness.items()} == {
            "A": ("x1",), "B": (), "C": ("x2",),
        }

    def test_orthomodularity_has_no_counterexample(self):
        assert search_counterexample(law_by_name("orthomodularity"), None, 4) is None

    def test_partial_de_morgan_as_stated(self):
        found = search_counterexample(
            law_by_name("partial-de-morgan-as-stated"), OpMode.LITERAL, 4
        )
        universe, witness = found
        assert universe.digest == '[["x1","x2"]]'
        assert witness["A"].members == ("x1",)
        assert witness["B"].members == ("x2",)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            search_counterexample(law_by_name("orthomodularity"), None, 7)
