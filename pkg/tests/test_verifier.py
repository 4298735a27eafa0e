import pytest

from ring_explorer import (
    BUILTIN_NAMES,
    AuditStatus,
    CertificateKind,
    Configuration,
    ConfigurationError,
    Lasso,
    Objective,
    Palette,
    RandomPolicy,
    SchedulerModel,
    StateLimitExceeded,
    SystemState,
    TerminalTrace,
    TerritorySet,
    Transform,
    build_reachable_graph,
    builtin_algorithm,
    certificate_holds,
    check_perpetual_exploration,
    check_terminating_exploration,
    classify_configuration,
    count_configuration_classes,
    enumerate_initial_configurations,
    find_independent_territory_set,
    strongly_connected_components,
    is_quiescent,
    simulate,
    universality_audit,
)

FSYNC, SSYNC, ASYNC = SchedulerModel.FSYNC, SchedulerModel.SSYNC, SchedulerModel.ASYNC


def config(text: str, n: int) -> Configuration:
    return Configuration.parse(text, n=n)


def has_changing_cycle(graph) -> bool:
    "depth-first search for a cycle of state-changing edges"
    color: dict = {}

    def visit(key) -> bool:
        color[key] = "grey"
        for edge in graph.edges[key]:
            if not edge.changing:
                continue
            state = color.get(edge.target)
            if state == "grey" or (state is None and visit(edge.target)):
                return True
        color[key] = "black"
        return False

    return any(visit(key) for key in graph.states if key not in color)


class TestReachableGraph:
    def test_fsync_pair_is_one_canonical_state(self, fp2):
        graph = build_reachable_graph(SystemState.initial(config("G,W", 6), FSYNC), fp2)
        assert len(graph.states) == 1
        (edge,) = graph.edges[graph.root]
        assert edge.target == graph.root
        assert edge.changing

    def test_quiescent_start_has_no_edges(self, ft3):
        graph = build_reachable_graph(SystemState.initial(config("G,GW", 5), FSYNC), ft3)
        assert len(graph.states) == 1
        assert graph.edge_count == 0
        assert graph.quiescent == {graph.root}

    def test_state_limit(self, ap3):
        with pytest.raises(StateLimitExceeded) as error:
            build_reachable_graph(SystemState.initial(config("W,W,G", 6), SSYNC), ap3, bound=2)
        assert error.value.limit == 2
        assert error.value.frontier >= 1

    def test_state_limit_must_be_positive(self, fp2):
        with pytest.raises(ConfigurationError, match="state limit"):
            build_reachable_graph(SystemState.initial(config("G,W", 6), FSYNC), fp2, bound=0)

    def test_every_state_has_a_stem_from_the_root(self, ap3):
        graph = build_reachable_graph(SystemState.initial(config("W,W,G", 6), SSYNC), ap3)
        for key in graph.states:
            path = graph.stem(key)
            assert (path[-1].target if path else graph.root) == key


class TestStronglyConnectedComponents:
    def test_components_and_self_loops(self):
        successors = {1: [2], 2: [1, 3], 3: [3], 4: [1]}
        components = strongly_connected_components(successors, successors.__getitem__)
        assert sorted(sorted(c) for c in components) == [[1, 2], [3]]
        everything = strongly_connected_components(successors, successors.__getitem__, include_trivial=True)
        assert sorted(sorted(c) for c in everything) == [[1, 2], [3], [4]]


class TestPerpetualExploration:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_fp2_explores_every_ring(self, fp2, n):
        verdict = check_perpetual_exploration(config("G,W", n), fp2, FSYNC)
        assert verdict.holds
        assert verdict.witness is None

    def test_symmetric_start_under_ssync_fails(self, ap3):
        verdict = check_perpetual_exploration(config("W,G,W", 9), ap3, SSYNC)
        assert not verdict.holds
        assert verdict.reason == "under-covered"
        assert isinstance(verdict.witness, TerminalTrace)
        assert verdict.witness.replays(ap3)
        assert len(verdict.uncovered) > 0

    def test_separated_robots_fail(self, fp2):
        verdict = check_perpetual_exploration(config("G,.,W", 6), fp2, FSYNC)
        assert not verdict.holds
        assert verdict.witness.replays(fp2)
        assert verdict.witness.trace.final.occupied == {0, 2}

    @pytest.mark.parametrize("n", [5, 6])
    def test_ap3_under_ssync_and_async(self, ap3, n):
        for text in ap3.initial_configs:
            for model in (SSYNC, ASYNC):
                assert check_perpetual_exploration(config(text, n), ap3, model).holds

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(3, 9))
    def test_ap3_explores_from_every_declared_initial_under_async(self, ap3, n):
        for initial in ap3.initial_configurations(n):
            assert check_perpetual_exploration(initial, ap3, ASYNC).holds

    def test_verdicts_are_invariant_under_symmetries(self, ap3):
        base = config("W,W,G", 7)
        expected = check_perpetual_exploration(base, ap3, SSYNC).outcome
        for t in Transform.dihedral(7)[1::3]:
            assert check_perpetual_exploration(base.transform(t), ap3, SSYNC).outcome is expected
        swapped = base.color_swap()
        assert check_perpetual_exploration(swapped, ap3.color_swapped(), SSYNC).outcome is expected


class TestTerminatingExploration:
    def test_fp2_never_terminates(self, fp2):
        verdict = check_terminating_exploration(config("G,W", 6), fp2, FSYNC)
        assert not verdict.holds
        assert verdict.reason == "non-termination"
        assert isinstance(verdict.witness, Lasso)
        assert verdict.witness.replays(fp2)

    def test_ft3_terminates(self, ft3):
        verdict = check_terminating_exploration(config("W,W,W", 5), ft3, FSYNC)
        assert verdict.holds
        assert verdict.states > 1

    def test_too_few_robots_leave_nodes_unvisited(self, ft3):
        verdict = check_terminating_exploration(config("G,.,.,G", 8), ft3, FSYNC)
        assert not verdict.holds
        assert verdict.reason == "under-covered"
        assert verdict.uncovered == frozenset(range(8)) - {0, 3}

    @pytest.mark.parametrize("n", range(3, 11))
    def test_ft3_terminates_from_every_declared_initial(self, ft3, n):
        for initial in ft3.initial_configurations(n):
            assert check_terminating_exploration(initial, ft3, FSYNC).holds, f"{initial} n={n}"

    @pytest.mark.parametrize("n", range(3, 9))
    def test_color_swapped_ft3_terminates_from_the_swapped_initials(self, ft3, n):
        swapped = ft3.color_swapped()
        assert "G,G,G" in swapped.initial_configs
        for initial in swapped.initial_configurations(n):
            assert check_terminating_exploration(initial, swapped, FSYNC).holds

    def test_at4_terminates_from_the_rendezvous_start(self, at4):
        assert check_terminating_exploration(config("W,W,G,G", 6), at4, ASYNC).holds

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(5, 9))
    def test_at4_terminates_from_every_declared_initial(self, at4, n):
        for algorithm in (at4, at4.color_swapped()):
            for initial in algorithm.initial_configurations(n):
                assert check_terminating_exploration(initial, algorithm, ASYNC).holds, f"{initial} n={n}"

    @pytest.mark.parametrize("name", ["FP2", "FT3"])
    @pytest.mark.parametrize("model", [FSYNC, SSYNC])
    def test_cycle_criterion_agrees_with_depth_first_search(self, name, model, small_configurations):
        algorithm = builtin_algorithm(name)
        for initial in small_configurations:
            verdict = check_terminating_exploration(initial, algorithm, model)
            graph = build_reachable_graph(SystemState.initial(initial, model), algorithm)
            assert (verdict.reason == "non-termination") == has_changing_cycle(graph), f"{initial}"
            if not verdict.holds:
                assert verdict.witness.replays(algorithm)

    def test_holds_implies_random_runs_terminate(self, ft3):
        for seed in range(20):
            state = SystemState.initial(config("G,W,G", 7), FSYNC)
            trace = simulate(state, ft3, RandomPolicy(seed), max_steps=500)
            assert is_quiescent(trace.final, ft3)
            assert trace.visited() == frozenset(range(7))


class TestTerritories:
    def test_robots_three_apart(self):
        territories = find_independent_territory_set(config("G,.,.,G", 6))
        assert territories == TerritorySet(6, ((0, 1), (3, 4)))
        assert str(territories) == "{v0,v1}, {v3,v4}"

    def test_robots_two_apart(self):
        territories = find_independent_territory_set(config("G,.,G", 6))
        assert territories.territories == ((0, 5), (2, 3))

    @pytest.mark.parametrize("text", ["G,W", "GW,.,.,W", "G,.,W,.,G"])
    def test_hypotheses_must_hold(self, text):
        assert find_independent_territory_set(config(text, 6)) is None

    def test_territories_must_be_apart(self):
        with pytest.raises(AssertionError):
            TerritorySet(6, ((0, 1), (2, 3)))

    def test_certified_configurations_fail_for_every_builtin(self):
        initial = config("G,.,.,G", 7)
        assert find_independent_territory_set(initial) is not None
        for name in BUILTIN_NAMES:
            algorithm = builtin_algorithm(name)
            assert not check_perpetual_exploration(initial, algorithm, FSYNC).holds
            assert not check_terminating_exploration(initial, algorithm, FSYNC).holds


class TestCertificates:
    @pytest.mark.parametrize(
        "text, n, model, kind",
        [
            ("G,.,.,G", 6, FSYNC, CertificateKind.TERRITORY),
            ("W,W", 6, FSYNC, CertificateKind.PAIR_SAME_COLOR),
            ("GG", 6, FSYNC, CertificateKind.TERRITORY),
            ("WWW,.,.,G", 7, FSYNC, CertificateKind.TERRITORY),
            ("GG", 6, SSYNC, CertificateKind.SAME_COLOR_TOWER),
            ("GGW", 7, SSYNC, CertificateKind.SAME_COLOR_TOWER),
            ("W,.,.,.,GW", 9, SSYNC, CertificateKind.DISTANCE_CLASS),
            ("GW,.,W", 9, SSYNC, CertificateKind.TOWER_DISTANCE_2),
            ("W,G,W", 9, SSYNC, CertificateKind.SYMMETRIC_XYX),
            ("W,G,G,W", 8, SSYNC, CertificateKind.SYMMETRIC_CLASS),
            ("GW,GW", 6, ASYNC, CertificateKind.SYMMETRIC_CLASS),
        ],
    )
    def test_classify(self, text, n, model, kind):
        initial = config(text, n)
        certificate = classify_configuration(initial, model)
        assert certificate is not None and certificate.kind is kind
        assert certificate_holds(certificate, initial)

    @pytest.mark.parametrize(
        "text, n, model",
        [
            ("G,W", 6, FSYNC),
            ("GG", 5, SSYNC),
            ("GG", 5, FSYNC),
            ("GW", 6, FSYNC),
            ("W,G,W", 8, SSYNC),
            ("W,W,G", 9, SSYNC),
            ("W,W,G,G", 8, ASYNC),
        ],
    )
    def test_no_certificate(self, text, n, model):
        assert classify_configuration(config(text, n), model) is None

    def test_monochrome_tower_territory_is_fsync_only(self):
        tower = config("GG", 6)
        certificate = classify_configuration(tower, FSYNC)
        assert certificate.territories is not None
        assert "monochrome towers" in certificate.detail
        assert classify_configuration(tower, SSYNC).kind is CertificateKind.SAME_COLOR_TOWER
        assert not certificate_holds(certificate, config("GW", 6))

    def test_territory_certificate_carries_its_territories(self):
        certificate = classify_configuration(config("G,.,.,G", 6), FSYNC, Objective.TERMINATING)
        assert certificate.territories == TerritorySet(6, ((0, 1), (3, 4)))


class TestEnumeration:
    def test_adjacent_pairs(self):
        configs = enumerate_initial_configurations(6, 2, allow_towers=False, connected=True)
        assert {c.format() for c in configs} == {"G,W,.,.,.,.", "G,G,.,.,.,.", "W,W,.,.,.,."}

    @pytest.mark.parametrize("n, k", [(2, 2), (6, 0)])
    def test_rejects_degenerate_sizes(self, n, k):
        with pytest.raises(ConfigurationError):
            enumerate_initial_configurations(n, k)

    def test_single_robot(self):
        assert len(enumerate_initial_configurations(3, 1, Palette("G"))) == 1
        assert count_configuration_classes(3, 1, 1) == 1

    def test_representatives_are_canonical_and_sorted(self):
        configs = enumerate_initial_configurations(5, 3)
        assert all(c.canonical[0] == c for c in configs)
        assert [c.key() for c in configs] == sorted(c.key() for c in configs)

    @pytest.mark.parametrize("n", range(3, 10))
    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("allow_towers", [True, False])
    def test_enumeration_matches_orbit_count(self, n, k, allow_towers):
        configs = enumerate_initial_configurations(n, k, allow_towers=allow_towers)
        assert len(configs) == count_configuration_classes(n, k, 2, allow_towers=allow_towers)

    def test_known_orbit_counts(self):
        # pairs on a hexagon differ only by their distance
        assert count_configuration_classes(6, 2, 1, allow_towers=False) == 3
        assert count_configuration_classes(6, 2, 1) == 4


class TestAudit:
    def test_fp2_is_universal_for_pairs(self, fp2):
        report = universality_audit(fp2, FSYNC, Objective.PERPETUAL, range(6, 11), 2, allow_towers=False, workers=1)
        assert report.clean
        assert {e.config.format().rstrip(",.") for e in report.solves} == {"G,W"}
        assert len(report.solves) == 5
        for entry in report.certified:
            assert entry.certificate.kind in (CertificateKind.TERRITORY, CertificateKind.PAIR_SAME_COLOR)
        for n in range(6, 11):
            assert report.expected_classes[n] == sum(1 for e in report.entries if e.n == n)

    def test_only_the_mixed_tower_is_a_discrepancy_under_fsync(self, fp2):
        report = universality_audit(fp2, FSYNC, Objective.PERPETUAL, [6], 2, workers=1)
        assert {e.config.format().rstrip(",.") for e in report.discrepancies} == {"GW"}
        assert report.counts()[AuditStatus.DISCREPANCY.value] == 1

    def test_state_limit_marks_entries(self, ap3):
        report = universality_audit(ap3, SSYNC, Objective.PERPETUAL, [6], 3, state_limit=1, workers=1)
        assert report.limit_exceeded
        assert not report.clean

    @pytest.mark.slow
    def test_ap3_is_universal_under_ssync(self, ap3):
        report = universality_audit(ap3, SSYNC, Objective.PERPETUAL, [9], 3, workers=1)
        assert not report.discrepancies
        assert not report.limit_exceeded
        solved = {e.config.format().rstrip(",.") for e in report.solves}
        assert solved == {"G,W,W", "G,G,W", "GW,W", "G,GW"}

    @pytest.mark.slow
    def test_ft3_terminating_audit(self, ft3):
        report = universality_audit(ft3, FSYNC, Objective.TERMINATING, [6], 3, workers=2)
        solved = {e.config.format().rstrip(",.") for e in report.solves}
        assert {"W,W,W", "G,W,W", "G,W,G"} <= solved
