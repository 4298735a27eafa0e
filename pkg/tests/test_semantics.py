import pytest

from ring_explorer import (
    Algorithm,
    AsyncLC,
    AsyncM,
    ChoiceError,
    Configuration,
    Decision,
    FairPolicy,
    FirstPolicy,
    FsyncChoice,
    RandomPolicy,
    RobotState,
    SchedulerModel,
    ScriptedPolicy,
    SsyncChoice,
    SymmetryMode,
    SystemState,
    Transform,
    apply_choice,
    builtin_algorithm,
    enumerate_choices,
    is_quiescent,
    parse_choice,
    parse_script,
    robot_options,
    simulate,
    successors,
)


def initial(text: str, n: int, model: SchedulerModel) -> SystemState:
    return SystemState.initial(Configuration.parse(text, n=n), model)


def outcome_keys(state: SystemState, algorithm) -> set:
    return {target.erased_key() for _, target in successors(state, algorithm, distinct=False)}


class TestSteps:
    def test_fsync_step_rotates_the_pair(self, fp2):
        state = initial("G,W", 6, SchedulerModel.FSYNC)
        assert [str(c) for c in enumerate_choices(state, fp2)] == ["fsync"]
        target = apply_choice(state, FsyncChoice(), fp2)
        assert target.configuration == Configuration.parse("W,.,.,.,.,G")
        assert target.configuration.canonical[0] == state.configuration.canonical[0]

    def test_ssync_moves_two_robots_onto_one_node(self, ap3):
        state = initial("W,G,W", 9, SchedulerModel.SSYNC)
        assert sorted(robot_options(state, ap3)) == [0, 2]
        target = apply_choice(state, SsyncChoice((0, 2)), ap3)
        assert target.configuration.format() == ".,GWW,.,.,.,.,.,.,."
        assert is_quiescent(target, ap3)
        assert successors(target, ap3) == []

    def test_mirror_image_successors_are_merged(self, ap3):
        state = initial("W,G,W", 9, SchedulerModel.SSYNC)
        assert len(successors(state, ap3, distinct=False)) == 3
        assert [str(choice) for choice, _ in successors(state, ap3)] == ["ssync 0", "ssync 0,2"]

    def test_async_look_compute_records_a_pending_move(self, ap3):
        state = initial(".,WG,W", 5, SchedulerModel.ASYNC)
        assert sorted(robot_options(state, ap3)) == [1]
        after_lc = apply_choice(state, AsyncLC(1), ap3)
        assert after_lc.robot(1) == RobotState(1, 1, "G", 1)
        assert after_lc.pending == {1}
        assert not is_quiescent(after_lc, ap3)
        assert AsyncM(1) in set(enumerate_choices(after_lc, ap3))
        after_move = apply_choice(after_lc, AsyncM(1), ap3)
        assert after_move.robot(1) == RobotState(1, 2, "G")
        assert after_move.configuration.format() == ".,G,GW,.,."

    def test_choices_must_fit_the_model(self, fp2):
        state = initial("G,W", 6, SchedulerModel.SSYNC)
        with pytest.raises(ChoiceError):
            apply_choice(state, FsyncChoice(), fp2)
        with pytest.raises(ChoiceError):
            apply_choice(state, SsyncChoice((0, 5)), fp2)

    def test_either_needs_a_resolution(self, ft3):
        state = initial("G,W,G", 6, SchedulerModel.SSYNC)
        with pytest.raises(ChoiceError):
            apply_choice(state, SsyncChoice((1,)), ft3)
        target = apply_choice(state, SsyncChoice((1,), ((1, Decision("W", 1)),)), ft3)
        assert target.robot(1).node == 2

    def test_locked_mode_resolves_equal_robots_together(self):
        spread = Algorithm.from_text("S : . | W(W) | . :: W, either\n")
        state = initial("WW", 5, SchedulerModel.FSYNC)
        independent = list(enumerate_choices(state, spread, SymmetryMode.INDEPENDENT))
        locked = list(enumerate_choices(state, spread, SymmetryMode.LOCKED))
        assert len(independent) == 4
        assert len(locked) == 2


class TestChoiceText:
    @pytest.mark.parametrize("text", ["fsync", "fsync 1=W+", "ssync 0,2", "ssync 1 1=G-", "lc 3", "lc 0=W.", "m 2"])
    def test_round_trip(self, text):
        assert str(parse_choice(text)) == text

    @pytest.mark.parametrize("text", ["", "ssync", "lc", "lc x", "m -1", "fsync 1=Q", "fsync 1", "jump 2"])
    def test_malformed(self, text):
        with pytest.raises(ChoiceError):
            parse_choice(text)

    def test_script_skips_comments_and_names_bad_lines(self):
        assert parse_script("# warm up\nfsync\n\nssync 0  # one robot\n") == [FsyncChoice(), SsyncChoice((0,))]
        with pytest.raises(ChoiceError, match="line 2"):
            parse_script("fsync\nwhatever\n")


class TestSimulation:
    def test_ft3_terminates_on_a_five_node_ring(self, ft3):
        trace = simulate(initial("W,W,W", 5, SchedulerModel.FSYNC), ft3, FirstPolicy())
        assert len(trace) == 3
        assert is_quiescent(trace.final, ft3)
        assert trace.final.configuration.canonical[0] == Configuration.parse("G,GW", n=5).canonical[0]
        assert trace.visited() == frozenset(range(5))
        assert trace.replays(ft3)

    def test_random_policy_is_reproducible(self, ap3):
        state = initial("W,W,G", 7, SchedulerModel.ASYNC)
        first = simulate(state, ap3, RandomPolicy(seed=11), max_steps=40)
        second = simulate(state, ap3, RandomPolicy(seed=11), max_steps=40)
        assert first.to_text() == second.to_text()
        assert len(first) == 40
        assert first.replays(ap3)

    def test_fair_policy_serves_every_robot(self, ap3):
        trace = simulate(initial("W,W,G", 8, SchedulerModel.SSYNC), ap3, FairPolicy(), max_steps=200)
        assert trace.visited() == frozenset(range(8))

    def test_scripted_policy_replays_and_rejects(self, ft3):
        state = initial("W,W,W", 5, SchedulerModel.FSYNC)
        trace = simulate(state, ft3, ScriptedPolicy(parse_script("fsync\nfsync 1=W-\n")))
        assert len(trace) == 2
        assert trace.final.configuration.format() == "W,.,.,G,G"
        with pytest.raises(ChoiceError):
            simulate(state, ft3, ScriptedPolicy([SsyncChoice((0,))]))

    def test_max_steps_bounds_the_run(self, fp2):
        trace = simulate(initial("G,W", 6, SchedulerModel.FSYNC), fp2, FirstPolicy(), max_steps=7)
        assert len(trace) == 7
        assert trace.to_text().startswith("start ⊢ G,W,.,.,.,.")


class TestSmallModelProperties:
    @pytest.mark.parametrize("name", ["FT3", "AP3"])
    @pytest.mark.parametrize("model", [SchedulerModel.SSYNC, SchedulerModel.ASYNC])
    def test_successors_are_equivariant(self, name, model, small_configurations):
        algorithm = builtin_algorithm(name)
        swapped = algorithm.color_swapped()
        for config in small_configurations:
            state = SystemState.initial(config, model)
            outcomes = [target for _, target in successors(state, algorithm, distinct=False)]
            for t in Transform.dihedral(config.n):
                assert outcome_keys(state.transform(t), algorithm) == {s.transform(t).erased_key() for s in outcomes}
            swap = Transform.color_swap(config.n, config.palette.swap())
            assert outcome_keys(state.transform(swap), swapped) == {s.transform(swap).erased_key() for s in outcomes}

    @pytest.mark.parametrize("name", ["FP2", "FT3", "AP3", "AT4"])
    def test_fsync_steps_are_ssync_steps(self, name, small_configurations):
        algorithm = builtin_algorithm(name)
        for config in small_configurations:
            fsync = outcome_keys(SystemState.initial(config, SchedulerModel.FSYNC), algorithm)
            ssync = outcome_keys(SystemState.initial(config, SchedulerModel.SSYNC), algorithm)
            assert fsync <= ssync

    @pytest.mark.parametrize("name", ["FT3", "AP3"])
    def test_ssync_steps_are_async_executions(self, name, small_configurations):
        """An SSYNC step is every activated robot's LC followed by its move. Steps
        in which an earlier light change alters a later robot's decision have no
        such ASYNC counterpart and are skipped.
        """
        algorithm = builtin_algorithm(name)
        checked = 0
        for config in small_configurations:
            state = SystemState.initial(config, SchedulerModel.SSYNC)
            options = robot_options(state, algorithm)
            for choice in enumerate_choices(state, algorithm):
                picks = dict(choice.resolutions)
                decisions = {i: picks.get(i, options[i][0]) for i in choice.subset}
                current = SystemState.initial(config, SchedulerModel.ASYNC)
                applicable = True
                for i in choice.subset:
                    available = robot_options(current, algorithm).get(i, ())
                    if decisions[i] not in available:
                        applicable = False
                        break
                    lc = AsyncLC(i, decisions[i] if len(available) > 1 else None)
                    current = apply_choice(current, lc, algorithm)
                if not applicable:
                    continue
                for i in sorted(current.pending):
                    current = apply_choice(current, AsyncM(i), algorithm)
                assert current.erased_key() == apply_choice(state, choice, algorithm).erased_key()
                checked += 1
        assert checked > 0

    def test_steps_conserve_robots(self, small_configurations, ap3):
        for config in small_configurations:
            for model in SchedulerModel:
                state = SystemState.initial(config, model)
                for _, target in successors(state, ap3, distinct=False):
                    assert target.k == config.k
                    assert target.configuration.k == config.k
