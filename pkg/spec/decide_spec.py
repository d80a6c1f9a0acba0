from itertools import combinations

from mamba import description, it, before
from hypothesis import given, settings, strategies as st
from structutils import (
    Family,
    InputError,
    PreconditionError,
    UnsupportedError,
    chain,
    graph_from_edges,
    nested_from_partitions,
    tree_parents
)
from uhoracle import (
    enumerate_structures,
    is_exceptional_bruteforce,
    is_uh_bruteforce,
    minimal_exceptional_sets_bruteforce
)
from uhpres import (
    OMEGA,
    Document,
    EqCharacter,
    GraphPres,
    InjSpectrum,
    LinOrderPres,
    complete_graph,
    from_parents,
    load_presentation,
    present,
    to_networkx
)
from uhdecide import (
    NA,
    analyze,
    analyze_equivalence,
    analyze_graph,
    analyze_injection,
    analyze_linear,
    branching_profile,
    build_TA,
    check_exceptional,
    classify_finite_graph,
    definable_closure_linear,
    is_exceptional_linear,
    minimal_exceptional_linear,
    parse_set
)

COUNTS = st.sampled_from([0, 1, 2, 3, OMEGA])

with description("analyze_linear:") as self:
    with before.all:
        self.eta_ends = LinOrderPres.of("eta", 5, "eta")

    with it("finds eta ultrahomogeneous"):
        r = analyze_linear(LinOrderPres.of("eta"))
        assert r.uh and r.wuh and r.cc
        assert r.delta2 == NA
        assert [e.elements for e in r.minimal_exceptional] == [()]

    with it("finds both minimal sets between two eta blocks"):
        r = analyze_linear(self.eta_ends)
        assert not r.uh
        assert r.wuh
        assert [e.elements for e in r.minimal_exceptional] == \
            [("a1", "a3", "a5"), ("a1", "a2", "a4", "a5")]
        assert r.special == ["a1", "a2", "a3", "a4", "a5"]

    with it("rejects omega"):
        r = analyze_linear(LinOrderPres.of("omega"))
        assert not r.uh
        assert not r.wuh
        assert not r.cc
        assert r.minimal_exceptional == []

    with it("normalizes before deciding"):
        r = analyze_linear(LinOrderPres.of("eta", 1, "eta"))
        assert r.uh
        assert r.extra['normalized'] == ["eta"]

    with it("agrees with exhaustive search on finite chains"):
        for n in range(1, 7):
            p = LinOrderPres.of(n)
            assert analyze_linear(p).uh == is_uh_bruteforce(chain(n)).holds
            got = [{q - 1 for _, q in s} for s in minimal_exceptional_linear(p)]
            want = [set(m) for m in minimal_exceptional_sets_bruteforce(chain(n))]
            assert got == want

with description("is_exceptional_linear:") as self:
    with before.all:
        self.eta_ends = LinOrderPres.of("eta", 5, "eta")

    with it("accepts a minimal set"):
        assert is_exceptional_linear(self.eta_ends, ["a1", "a3", "a5"]).holds

    with it("needs the block ends next to eta"):
        t = is_exceptional_linear(self.eta_ends, ["a2", "a3", "a4"])
        assert not t.holds
        assert t.failed.name == "block ends next to eta are in S"
        assert t.failed.witness == ("a1",)

    with it("needs a member in every successor pair"):
        t = is_exceptional_linear(self.eta_ends, ["a1", "a5"])
        assert not t.holds
        assert t.failed.name == "no successor pair outside S"
        assert t.failed.witness == ("a2", "a3")

    with it("accepts the middle of three points"):
        assert is_exceptional_linear(LinOrderPres.of(3), ["a2"]).holds

    with it("reads coordinates as well as names"):
        assert is_exceptional_linear(self.eta_ends, ["1:1", (1, 3), "a5"]).holds

    with it("rejects orders with infinitely many successivities"):
        t = is_exceptional_linear(LinOrderPres.of("zeta"), [])
        assert t.failed.name == "finitely many successivities"

    with it("raises error on unknown points"):
        try:
            is_exceptional_linear(self.eta_ends, ["a6"])
        except InputError as e:
            assert e.field == "S"
        else:
            assert False, "must raise error"

    with it("agrees with exhaustive search on every subset"):
        for n in range(1, 7):
            p = LinOrderPres.of(n)
            for k in range(n + 1):
                for S in combinations(range(n), k):
                    got = is_exceptional_linear(p, [(0, x + 1) for x in S])
                    want = is_exceptional_bruteforce(chain(n), S)
                    assert got.holds == want.holds

with description("definable_closure_linear:") as self:
    with it("adds every special point"):
        p = LinOrderPres.of("eta", 5, "eta")
        assert definable_closure_linear(p, ["a1", "a3", "a5"]) == \
            ["a1", "a2", "a3", "a4", "a5"]
        assert definable_closure_linear(LinOrderPres.of(3), ["a2"]) == \
            ["a1", "a2", "a3"]

    with it("is empty for eta"):
        assert definable_closure_linear(LinOrderPres.of("eta"), []) == []

    with it("raises error when the set is not exceptional"):
        try:
            definable_closure_linear(LinOrderPres.of("eta", 5, "eta"), ["a3"])
        except PreconditionError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error for minimal sets of non-wuh orders"):
        try:
            minimal_exceptional_linear(LinOrderPres.of("omega"))
        except PreconditionError:
            pass
        else:
            assert False, "must raise error"

with description("analyze_equivalence:") as self:
    with it("finds classes of one size ultrahomogeneous"):
        r = analyze_equivalence(EqCharacter.of({2: OMEGA}))
        assert r.uh and r.wuh and r.cc and r.delta2

    with it("rejects two sizes occurring infinitely often"):
        r = analyze_equivalence(EqCharacter.of({1: OMEGA, 2: OMEGA}))
        assert not r.uh
        assert not r.wuh
        assert not r.cc

    with it("picks one element of every exceptional class"):
        r = analyze_equivalence(EqCharacter.of({3: 2, 5: 1, OMEGA: OMEGA}))
        assert r.wuh
        assert [e.elements for e in r.minimal_exceptional] == \
            [("1.0:0", "2.0:0", "2.1:0")]
        assert r.extra['main_size'] == OMEGA

    with it("adds the partner of a class of size 2 to the closure"):
        r = analyze_equivalence(EqCharacter.of({2: 1, 3: OMEGA}))
        assert r.definable_closure.elements == ("1.0:0", "1.0:1")

    with it("lists one minimal set per size without an omega count"):
        r = analyze_equivalence(EqCharacter.of({2: 1, 3: 1}))
        assert len(r.minimal_exceptional) == 2

    with it("is not wuh with an unbounded tail"):
        r = analyze_equivalence(EqCharacter.of({2: OMEGA}, unbounded_tail=True))
        assert not r.wuh
        assert r.delta2

    with it("keeps the implications between the notions"):
        @settings(derandomize=True, deadline=None, max_examples=100)
        @given(st.dictionaries(st.sampled_from([1, 2, 3, OMEGA]),
                               COUNTS.filter(bool), max_size=4),
               st.booleans())
        def implications(entries, tail):
            r = analyze_equivalence(EqCharacter.of(entries, tail))
            assert r.implications_hold()
            if r.uh:
                assert r.wuh

        implications()

with description("analyze_injection:") as self:
    with it("finds zeta orbits ultrahomogeneous"):
        r = analyze_injection(InjSpectrum.of(zeta=OMEGA))
        assert r.uh
        assert r.cc is False
        assert r.delta2

    with it("rejects infinitely many omega orbits"):
        r = analyze_injection(InjSpectrum.of(omega=OMEGA))
        assert not r.uh
        assert not r.wuh
        assert r.delta2

    with it("picks the start of every omega orbit"):
        r = analyze_injection(InjSpectrum.of({3: OMEGA}, omega=2))
        assert r.wuh
        assert not r.uh
        assert [e.elements for e in r.minimal_exceptional] == \
            [("o0.0:0", "o0.1:0")]

    with it("adds a unique fixed point to the closure"):
        r = analyze_injection(InjSpectrum.of({1: 1}, omega=1))
        assert r.definable_closure.elements == ("o0.0:0", "c1.0:0")

    with it("keeps the implications between the notions"):
        @settings(derandomize=True, deadline=None, max_examples=100)
        @given(st.dictionaries(st.integers(1, 4), COUNTS.filter(bool),
                               max_size=3), COUNTS, COUNTS)
        def implications(cycles, omega, zeta):
            r = analyze_injection(InjSpectrum.of(cycles, omega, zeta))
            assert r.implications_hold()
            assert r.uh == (omega == 0)

        implications()

with description("analyze_graph:") as self:
    with before.all:
        self.k3 = complete_graph(3)
        self.star4 = graph_from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        self.c5 = graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])

    with it("finds copies of K_3 ultrahomogeneous"):
        r = analyze_graph(GraphPres(bulk=(OMEGA, 3)))
        assert r.uh and r.wuh

    with it("accepts a finite part beside copies of K_3"):
        r = analyze_graph(GraphPres(((self.star4, 1),), bulk=(OMEGA, 3)))
        assert not r.uh
        assert r.wuh
        assert len(r.extra['exceptional_set'].elements) == 5

    with it("rejects two component types occurring infinitely often"):
        r = analyze_graph(GraphPres(((self.k3, OMEGA), (self.star4, OMEGA))))
        assert not r.wuh
        assert "two kinds of components occur infinitely often" in r.notes
        # neither K_3 nor the star is an induced subgraph of the other
        assert r.cc is True and r.delta2 is True

    with it("finds components hidden in others not computably categorical"):
        k2 = complete_graph(2)
        r = analyze_graph(GraphPres(((k2, OMEGA), (self.star4, OMEGA))))
        assert not r.wuh
        assert r.cc is False and r.delta2 is True
        r = analyze_graph(GraphPres(((k2, 2), (self.star4, OMEGA))))
        assert r.cc is True

    with it("classifies finite graphs"):
        assert classify_finite_graph(to_networkx(self.c5)) == "C5"
        r = analyze_graph(GraphPres(((self.c5, 1),)))
        assert r.uh
        assert r.extra['finite_class'] == "C5"
        path = graph_from_edges(3, [(0, 1), (1, 2)])
        assert not analyze_graph(GraphPres(((path, 1),))).uh

    with it("trusts the catalog"):
        r = analyze_graph(GraphPres(catalog_tag="random"))
        assert r.uh
        assert r.extra['catalog'] == "random"

    with it("reports necessary conditions beside K_omega"):
        g = GraphPres(((self.k3, 1),), bulk=(1, OMEGA))
        r = analyze_graph(g)
        assert not r.uh
        assert r.wuh is None
        assert "necessary conditions only" in r.notes

    with it("raises error on infinitely many finite components beside K_omega"):
        g = GraphPres(((self.k3, OMEGA),), bulk=(1, OMEGA))
        try:
            analyze_graph(g)
        except UnsupportedError:
            pass
        else:
            assert False, "must raise error"
        assert analyze_graph(g, necessary_only=True).wuh is None

    with it("rejects K_3 and K_omega both occurring infinitely often"):
        g = GraphPres(((self.k3, OMEGA),), bulk=(OMEGA, OMEGA))
        assert analyze_graph(g, necessary_only=True).wuh is False

with description("oracle agreement:") as self:
    with it("decides every small structure like exhaustive search"):
        for fam in (Family.ORDER, Family.EQUIVALENCE, Family.INJECTION,
                    Family.GRAPH, Family.TREE_PO, Family.TREE_PRED):
            for n in range(1, 7):
                for s in enumerate_structures(fam, n):
                    decided = analyze(Document(fam, present(s))).uh
                    assert decided == is_uh_bruteforce(s).holds, (fam, n)

    with it("decides small nested structures like exhaustive search"):
        for n in range(1, 7):
            for s in enumerate_structures(Family.NESTED_EQ, n, arity=2):
                want = is_uh_bruteforce(s).holds
                decided = analyze(Document(Family.NESTED_EQ, present(s))).uh
                assert decided == want
                # uh iff all E_i classes split into equally many E_i+1 classes
                tree, _ = build_TA(s)
                shape = from_parents(tree_parents(tree))
                assert (branching_profile(shape) is not None) == want
                assert is_uh_bruteforce(tree, tree.size).holds == want

with description("analyze:") as self:
    with it("reads a symbolic file"):
        doc = load_presentation({"family": "order", "blocks": ["eta", 5, "eta"]})
        r = analyze(doc)
        assert r.wuh
        assert 'oracle' not in r.extra

    with it("adds the exhaustive verdict for finite files"):
        doc = load_presentation({"family": "order",
                                 "structure": chain(3).to_dict()})
        r = analyze(doc)
        assert r.extra['oracle']['uh'] is False
        assert r.extra['oracle']['minimal_exceptional'] == [["1"], ["0", "2"]]

    with it("decides n-equivalence structures by exhaustive search"):
        s = nested_from_partitions([[[0, 1, 2], [3, 4, 5]],
                                    [[0, 1], [2, 3], [4, 5]]], 6, Family.N_EQ)
        r = analyze(Document(Family.N_EQ, None, s))
        assert r.wuh
        assert r.extra['relations_uh'] == [True, True]

with description("check_exceptional:") as self:
    with it("checks symbolic orders by their conditions"):
        doc = load_presentation({"family": "order", "blocks": ["eta", 5, "eta"]})
        assert check_exceptional(doc, parse_set("a1, a3,,a5")).holds
        assert not check_exceptional(doc, ["a3"]).holds

    with it("checks finite structures by exhaustive search"):
        doc = Document(Family.ORDER, present(chain(4)), chain(4))
        t = check_exceptional(doc, ["1"])
        assert not t.holds
        assert "2->3" in t.conditions[0].witness

    with it("raises error on symbolic families without a check"):
        doc = load_presentation({"family": "equivalence",
                                 "entries": [[2, "omega"]]})
        try:
            check_exceptional(doc, [])
        except UnsupportedError:
            pass
        else:
            assert False, "must raise error"
