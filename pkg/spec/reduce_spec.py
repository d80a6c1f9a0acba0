from mamba import description, it, before
from hypothesis import given, settings, strategies as st
from structutils import (
    DisagreementError,
    Family,
    InputError,
    RunConfig,
    UnsupportedError,
    equivalence_from_classes,
    tree_parents
)
from uhpres import (
    LEAF,
    OMEGA,
    EqCharacter,
    InjSpectrum,
    LinOrderPres,
    node,
    star
)
from uhreduce import (
    COFINITE,
    FINITE,
    INFINITE,
    REDUCTIONS,
    TAILS,
    Kind,
    Schedule,
    build_inj_degrees,
    build_odd_zchain,
    build_reduction,
    check_inj_degrees,
    check_stage_invariants,
    close_loop,
    element_label,
    inj_cof_image,
    inj_cof_universe,
    iter_reduction,
    limit_is_exact,
    limit_presentation,
    pair_code,
    predicted_verdict,
    two_adic,
    two_power_split,
    zchain_image,
    zchain_orbit,
    zchain_successor
)
from uhreduce.app import run_reduce


@st.composite
def schedules(draw, size=8):
    """Enumerations with stages increasing past every element"""
    xs = draw(st.lists(st.integers(0, 12), unique=True, max_size=size))
    events = []
    stage = 0
    for x in xs:
        stage = max(stage + 1, x + 1) + draw(st.integers(0, 3))
        events.append((x, stage))
    return Schedule(tuple(events))


def raises_input_error(f, fld=None):
    try:
        f()
    except InputError as e:
        if fld is not None:
            assert e.field == fld
    else:
        assert False, "must raise error"


with description("Schedule:") as self:
    with it("sorts events by stage"):
        w = Schedule.of((1, 5), (0, 2))
        assert w.events == ((0, 2), (1, 5))
        assert w.members(4) == {0}
        assert w.members(5) == {0, 1}
        assert w.entering(5) == 1
        assert w.entering(3) is None
        assert w.stage_of(1) == 5
        assert w.last_stage == 5
        assert w.restricted(4).events == ((0, 2),)

    with it("reads events from json"):
        w = Schedule.parse({'events': [[2, 3], [0, 4]]})
        assert w.to_json() == [[2, 3], [0, 4]]
        assert Schedule.parse([]) == Schedule()

    with it("raises error on events at stage 0"):
        raises_input_error(lambda: Schedule.of((0, 0)), "events[0]")

    with it("raises error on elements entering too early"):
        raises_input_error(lambda: Schedule.of((0, 1), (3, 2)), "events[1]")

    with it("raises error on two elements at one stage"):
        raises_input_error(lambda: Schedule.of((0, 1), (2, 3), (1, 3)),
                           "events[2]")

    with it("raises error on an element entering twice"):
        raises_input_error(lambda: Schedule.of((0, 1), (0, 2)), "events[1]")

    with it("raises error on malformed events"):
        raises_input_error(lambda: Schedule.parse([[0, 1], [1]]), "events[1]")
        raises_input_error(lambda: Schedule.parse([[-1, 1]]), "events[0]")
        raises_input_error(lambda: Schedule.parse("0,1"), "events")

    with it("codes pairs the Cantor way"):
        assert pair_code(0, 0) == 0
        assert pair_code(1, 0) == 1
        assert pair_code(0, 1) == 2
        assert pair_code(0, 2) == 5

with description("Kind:") as self:
    with it("parses names in any case"):
        assert Kind.parse("lin_inf") == Kind.LIN_INF
        assert Kind.parse("TREE_PRED_WUH").family == Family.TREE_PRED

    with it("raises error on unknown kinds"):
        raises_input_error(lambda: Kind.parse("LIN_FIN"), "kind")

    with it("separates reductions from special structures"):
        assert len(REDUCTIONS) == 11
        assert not Kind.ODD_ZCHAIN.is_reduction
        assert not Kind.TREE_ORD_CHAIN.tree_output

with description("linear reductions:") as self:
    with it("puts new elements between the successor pair of least code"):
        w = Schedule.of((0, 1), (1, 2), (2, 3))
        snap = build_reduction(Kind.LIN_INF, w, 9)
        assert snap.metadata['order'] == [7, 4, 1, 3, 9, 0, 6, 2, 5, 8]
        assert snap.size == 10

    with it("adds new least elements while nothing enters"):
        snap = build_reduction(Kind.LIN_INF, Schedule(), 6)
        assert snap.metadata['order'] == [6, 4, 3, 1, 0, 2, 5]

    with it("builds the order it lists"):
        snap = build_reduction("LIN_COF", Schedule(), 4)
        order = snap.metadata['order']
        rel = snap.structure.relations[0]
        for i, a in enumerate(order):
            for b in order[i + 1:]:
                assert (a, b) in rel
                assert (b, a) not in rel

with description("equivalence reductions:") as self:
    with it("starts EQ_INF with one pair and one singleton"):
        snap = build_reduction(Kind.EQ_INF, Schedule(), 0)
        assert snap.metadata['classes'] == [[0, 1], [2]]
        assert snap.structure == equivalence_from_classes([[0, 1], [2]], 3)

    with it("pairs the least singleton when something enters"):
        snap = build_reduction(Kind.EQ_INF, Schedule.of((0, 1)), 1)
        assert snap.metadata['classes'] == [[0, 1], [2, 3], [4]]

    with it("pairs 2n with an odd number when n enters"):
        snap = build_reduction(Kind.EQ_COF, Schedule.of((0, 1)), 1)
        assert snap.metadata['classes'] == [[0, 1]]
        snap = build_reduction(Kind.EQ_COF, Schedule(), 1)
        assert snap.metadata['classes'] == [[0], [1]]

    with it("keeps even singletons outside W"):
        snap = build_reduction(Kind.EQ_COF, Schedule(), 3)
        evens = [c for c in snap.metadata['classes'] if c[0] % 2 == 0]
        assert evens == [[0], [2], [4]]

with description("injection reductions:") as self:
    with it("starts INJ_INF with one arrow"):
        snap = build_reduction(Kind.INJ_INF, Schedule(), 0)
        assert snap.structure.functions == ((1, None),)
        assert snap.metadata['chain'] == [0, 1]

    with it("extends the chain backwards when something enters"):
        snap = build_reduction(Kind.INJ_INF, Schedule.of((0, 1)), 1)
        assert snap.metadata['chain'] == [3, 0, 1, 2]
        snap = build_reduction(Kind.INJ_INF, Schedule(), 1)
        assert snap.metadata['chain'] == [0, 1, 2, 3]

    with it("splits numbers into columns"):
        assert two_adic(12) == (2, 1)
        assert two_adic(7) == (0, 3)
        assert inj_cof_universe(2) == [1, 2, 3]
        assert len(inj_cof_universe(5)) == 15

    with it("doubles columns outside W"):
        assert inj_cof_image(3, Schedule()) == 6
        assert inj_cof_image(1, Schedule()) == 2

    with it("turns a column into a zeta orbit when it enters"):
        w = Schedule.of((0, 1))
        assert inj_cof_image(1, w) == 4
        assert inj_cof_image(4, w) == 16
        assert inj_cof_image(2, w) == 1
        assert inj_cof_image(8, w) == 2

    with it("labels INJ_COF elements by their numbers"):
        snap = build_reduction(Kind.INJ_COF, Schedule(), 2)
        assert snap.structure.labels == ("1", "2", "3")

with description("tree reductions:") as self:
    with it("hangs nodes below node 1 once W is not empty"):
        w = Schedule.of((1, 3))
        snap = build_reduction(Kind.TREE_ORD_UH, w, 4)
        assert snap.metadata['parents'] == [None, 0, 0, 1, 1]
        assert snap.metadata['height2'] == [3, 4]
        assert build_reduction(Kind.TREE_ORD_UH, Schedule(), 4)\
            .metadata['height2'] == []

    with it("gives TREE_ORD_WUH one node of rank 1 per element of W"):
        snap = build_reduction(Kind.TREE_ORD_WUH, Schedule.of((0, 1)), 1)
        assert snap.metadata['parents'] == [None, 0, 0, 0, 3]
        assert snap.metadata['rank1'] == [3]

    with it("grows both successor counts of TREE_PRED_UH"):
        snap = build_reduction(Kind.TREE_PRED_UH, Schedule.of((0, 1)), 1)
        assert snap.metadata['successors'] == [1, 1]
        snap = build_reduction(Kind.TREE_PRED_UH, Schedule(), 3)
        assert snap.metadata['successors'] == [3, 0]
        assert snap.structure.family == Family.TREE_PRED

    with it("gives 2^n of TREE_PRED_WUH n successors while W is empty"):
        snap = build_reduction(Kind.TREE_PRED_WUH, Schedule(), 3)
        assert snap.metadata['successors'] == [0, 1, 2, 3]
        assert snap.structure.labels[1] == "2^0"

    with it("joins runs of W into chains"):
        w = Schedule.of((1, 2), (0, 3))
        snap = build_reduction(Kind.TREE_ORD_CHAIN, w, 3)
        assert snap.metadata['chains'] == [[1, 6, 3, 4]]
        assert snap.metadata['runs'] == [[0, 1]]
        parents = tree_parents(snap.structure)
        assert parents[1] == 6 and parents[4] == 0

with description("stage invariants:") as self:
    with it("hold on every reduction"):
        @settings(derandomize=True, deadline=None, max_examples=50)
        @given(schedules())
        def hold(w):
            for kind in REDUCTIONS:
                for snap in iter_reduction(kind, w, 200):
                    report = check_stage_invariants(kind, snap, w)
                    assert report.holds, report.to_dict()

        hold()

    with it("build each snapshot as a substructure of the next"):
        w = Schedule.of((0, 1), (2, 4), (1, 6))
        # numbered so that old elements come first
        prefix_kinds = [Kind.LIN_INF, Kind.LIN_COF, Kind.EQ_INF, Kind.INJ_INF,
                        Kind.TREE_ORD_UH, Kind.TREE_ORD_WUH,
                        Kind.TREE_PRED_UH, Kind.TREE_PRED_WUH]
        for kind in prefix_kinds:
            snaps = list(iter_reduction(kind, w, 8))
            assert [s.stage for s in snaps] == list(range(9))
            for a, b in zip(snaps, snaps[1:]):
                assert b.structure.induced(range(a.size)) == a.structure

    with it("put old chain nodes below new ones"):
        w = Schedule.of((1, 2), (0, 3))
        a = build_reduction(Kind.TREE_ORD_CHAIN, w, 2)
        b = build_reduction(Kind.TREE_ORD_CHAIN, w, 3)
        assert a.metadata['parents'][1] == 0
        assert b.metadata['parents'][1] == 6
        assert check_stage_invariants(Kind.TREE_ORD_CHAIN, b, w).holds

    with it("catch a snapshot built from another schedule"):
        w = Schedule.of((0, 1))
        snap = build_reduction(Kind.EQ_INF, w, 3)
        assert check_stage_invariants(Kind.EQ_INF, snap, w).holds
        report = check_stage_invariants(Kind.EQ_INF, snap, Schedule())
        assert not report
        assert report.to_dict()['holds'] is False

    with it("raise error on a snapshot of another kind"):
        snap = build_reduction(Kind.EQ_INF, Schedule(), 1)
        raises_input_error(
            lambda: check_stage_invariants(Kind.EQ_COF, snap, Schedule()),
            "kind")

    with it("raise error on special structures"):
        raises_input_error(
            lambda: build_reduction(Kind.ODD_ZCHAIN, Schedule(), 1), "kind")
        raises_input_error(
            lambda: build_reduction(Kind.LIN_INF, Schedule(), -1), "stages")

with description("INJ_DEGREES:") as self:
    with before.all:
        self.w = Schedule.of((0, 1))

    with it("starts every main orbit with one arrow"):
        snap = build_inj_degrees(0, [Schedule()], 0)
        assert snap.metadata['orbits'] == [[1, 7]]
        assert snap.structure.labels == ("2^0.3^0", "2^0.3^0.7^1")

    with it("pulls the auxiliary orbit of an entering element in"):
        snap = build_inj_degrees(0, [self.w], 1)
        assert snap.metadata['orbits'] == [[5, 1, 7, 3, 21, 15, 147, 49]]
        assert snap.metadata['waiting'] == [[]]
        assert check_inj_degrees(snap, [self.w]) == []

    with it("leaves auxiliary orbits apart otherwise"):
        snap = build_inj_degrees(0, [Schedule()], 1)
        assert snap.metadata['orbits'] == [[5, 1, 7, 49]]
        assert snap.metadata['waiting'] == [[1]]

    with it("codes every W_e in its own orbit"):
        ws = [Schedule.of((1, 2), (0, 4)), Schedule(), Schedule.of((2, 3))]
        snap = build_inj_degrees(2, ws, 6)
        assert check_inj_degrees(snap, ws) == []
        assert check_inj_degrees(snap, [Schedule()] * 3) != []

    with it("names elements by their exponents"):
        assert element_label(2 * 9 * 125) == "2^1.3^2.5^3"
        assert element_label(3) == "2^0.3^1"

    with it("raises error on a wrong number of schedules"):
        raises_input_error(lambda: build_inj_degrees(1, [Schedule()], 1),
                           "schedules")

with description("zeta chains:") as self:
    with it("runs up through 1 mod 4 and down through 3 mod 4"):
        assert zchain_successor(1) == 5
        assert zchain_successor(3) == 1
        assert zchain_successor(7) == 3
        assert zchain_successor(5) == 9
        assert zchain_orbit(2, 2) == [7, 3, 1, 5, 9]

    with it("visits every odd number on one chain"):
        x = 999
        seen = [x]
        for _ in range(499):
            x = zchain_successor(x)
            seen.append(x)
        assert x == 997
        assert sorted(seen) == list(range(1, 1000, 2))

    with it("copies the chain onto every power of two"):
        assert two_power_split(12) == (2, 3)
        assert zchain_image(2) == 10
        assert zchain_image(6) == 2
        assert zchain_image(12) == 4
        assert zchain_orbit(1, 1, 2) == [12, 4, 20]

    with it("lists 1..n with undefined images past n"):
        s = build_odd_zchain(6)
        assert s.labels == ("1", "2", "3", "4", "5", "6")
        assert s.functions == ((4, None, 0, None, None, 1),)

    with it("keeps every image of a long prefix"):
        s = build_odd_zchain(1000)
        f = s.functions[0]
        for m in range(1, 1001):
            y = zchain_image(m)
            assert f[m - 1] == (y - 1 if y <= 1000 else None)
        defined = [y for y in f if y is not None]
        assert len(defined) == len(set(defined))

    with it("raises error on even numbers"):
        raises_input_error(lambda: zchain_successor(4))
        raises_input_error(lambda: zchain_image(0))
        raises_input_error(lambda: build_odd_zchain(0), "n")

with description("limits:") as self:
    with it("gives the dense order for infinite W"):
        p = limit_presentation(Kind.LIN_INF, Schedule(), INFINITE)
        assert p == LinOrderPres.of("eta")
        assert limit_is_exact(Kind.LIN_INF, Schedule(), INFINITE)

    with it("counts the pairs of a finite W"):
        w = Schedule.of((0, 1), (3, 5))
        assert limit_presentation(Kind.EQ_INF, w, FINITE) == \
            EqCharacter.of({2: 3, 1: OMEGA})

    with it("counts what a cofinite W misses"):
        w = Schedule.of((0, 1), (3, 5))
        assert limit_presentation(Kind.INJ_COF, w, COFINITE) == \
            InjSpectrum.of(omega=2, zeta=OMEGA)

    with it("marks stand-ins as inexact"):
        w = Schedule.of((0, 1))
        assert not limit_is_exact(Kind.LIN_COF, w, COFINITE)
        assert not limit_is_exact(Kind.TREE_ORD_WUH, w, INFINITE)

    with it("keeps the extra successors of a cofinite TREE_PRED_WUH"):
        # 1 never enters, so 2^0 keeps no successors
        w = Schedule.of((0, 1), (2, 4))
        p = limit_presentation(Kind.TREE_PRED_WUH, w, COFINITE)
        assert p == node((star(OMEGA), OMEGA), (LEAF, 1))
        w = Schedule.of((1, 3))
        p = limit_presentation(Kind.TREE_PRED_WUH, w, COFINITE)
        assert p == node((star(OMEGA), OMEGA))

    with it("predicts the property of each reduction"):
        assert predicted_verdict(Kind.LIN_INF, Schedule(), FINITE) == \
            ('uh', False)
        assert predicted_verdict(Kind.EQ_COF, Schedule(), COFINITE) == \
            ('wuh', True)
        assert predicted_verdict(Kind.TREE_ORD_CHAIN, Schedule(), COFINITE) \
            == ('tree', False)

    with it("agrees with the deciders on every limit"):
        ws = [Schedule(), Schedule.of((0, 1), (2, 4)), Schedule.of((1, 3))]
        config = RunConfig(max_sets=200)
        for kind in REDUCTIONS:
            if kind == Kind.TREE_ORD_CHAIN:
                continue
            for w in ws:
                for tail in TAILS:
                    loop = close_loop(kind, w, tail, config)
                    assert loop.agrees, loop.to_dict()

    with it("raises error on the chain construction"):
        try:
            close_loop(Kind.TREE_ORD_CHAIN, Schedule(), FINITE)
        except UnsupportedError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on unknown tails"):
        raises_input_error(
            lambda: limit_presentation(Kind.LIN_INF, Schedule(), "co-finite"),
            "limit")

with description("run_reduce:") as self:
    with it("prints the last snapshot"):
        config = RunConfig(stages=9)
        w = Schedule.of((0, 1), (1, 2), (2, 3))
        d = run_reduce(Kind.LIN_INF, [w], None, True, config)
        assert d['stage'] == 9
        assert d['metadata']['order'] == [7, 4, 1, 3, 9, 0, 6, 2, 5, 8]
        assert d['invariants'] == 'hold'

    with it("lists the odd numbers"):
        d = run_reduce(Kind.ODD_ZCHAIN, [Schedule()], None, False,
                       RunConfig(stages=4))
        assert d['structure']['size'] == 4

    with it("closes the loop on a limit"):
        d = run_reduce(Kind.EQ_COF, [Schedule.of((0, 1))], COFINITE, False,
                       RunConfig())
        assert d['agrees'] is True
        assert d['property'] == 'wuh'

    with it("raises error on the loop of the chain construction"):
        try:
            run_reduce(Kind.TREE_ORD_CHAIN, [Schedule()], FINITE, False,
                       RunConfig())
        except UnsupportedError:
            pass
        else:
            assert False, "must raise error"

    with it("keeps DisagreementError for failed checks"):
        assert DisagreementError("x").exit_code == 4
