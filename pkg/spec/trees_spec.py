from mamba import description, it, before
from hypothesis import given, settings, strategies as st
from structutils import (
    DisagreementError,
    Family,
    InputError,
    PreconditionError,
    ResourceError,
    nested_from_partitions,
    tree_from_parents,
    tree_parents
)
from uhoracle import enumerate_structures, is_exceptional_bruteforce
from uhpres import (
    LEAF,
    OMEGA,
    EqCharacter,
    NestedEqPres,
    address_map,
    from_parents,
    node,
    star
)
from uhdecide import (
    NA,
    agree,
    analyze_equivalence,
    analyze_nested,
    analyze_tree_po,
    analyze_tree_pred,
    build_TA,
    check_nested,
    closed_form_wuh,
    embeds,
    is_exceptional_tree_po,
    is_exceptional_tree_pred,
    is_finite_type,
    is_strongly_finite_type,
    minimal_exceptional_tree_po,
    rooted_view,
    type_conditions
)

# a root with one child, which has infinitely many leaves
BROOM = node((star(OMEGA), 1))

with description("analyze_tree_po:") as self:
    with it("finds a star ultrahomogeneous"):
        r = analyze_tree_po(star(OMEGA))
        assert r.uh and r.wuh
        assert r.delta2 == NA
        assert r.extra['rank'] == 1

    with it("finds the inner node of the broom exceptional"):
        r = analyze_tree_po(BROOM)
        assert not r.uh
        assert r.wuh
        assert r.special == ["0.0"]
        assert [e.elements for e in r.minimal_exceptional] == \
            [("0.0",), ("0.0/0.0",)]

    with it("rejects infinitely many nodes of rank 1"):
        r = analyze_tree_po(node((star(1), OMEGA)))
        assert not r.uh
        assert not r.wuh
        assert r.minimal_exceptional == []
        assert "infinitely many nodes of rank >= 1" in r.notes

    with it("reports finite type as computable categoricity"):
        r = analyze_tree_po(node((star(1), OMEGA), (star(2), OMEGA)))
        assert r.cc is False
        assert r.extra['strongly_finite_type'] is False

    with it("stops enumerating past the search bound"):
        r = analyze_tree_po(node((star(3), 4)), max_sets=10)
        assert r.wuh
        assert r.minimal_exceptional == []
        assert any("not enumerated" in n for n in r.notes)
        try:
            minimal_exceptional_tree_po(node((star(3), 4)), 10)
        except ResourceError:
            pass
        else:
            assert False, "must raise error"

with description("is_exceptional_tree_po:") as self:
    with it("accepts the inner node of the broom"):
        assert is_exceptional_tree_po(BROOM, ["0.0"]).holds
        assert is_exceptional_tree_po(BROOM, ["0.0/0.0"]).holds

    with it("needs every node of rank 1 covered"):
        t = is_exceptional_tree_po(BROOM, ["root"])
        assert not t.holds
        assert t.failed.name == "every node of rank >= 1 is at or below a member"
        assert t.failed.witness == ("0.0",)
        assert t.lower["0.0"] == ["root"]

    with it("reads addresses as step sequences"):
        assert is_exceptional_tree_po(BROOM, [[(0, 0)]]).holds

    with it("raises error on trees that are not wuh"):
        try:
            is_exceptional_tree_po(node((star(1), OMEGA)), [])
        except PreconditionError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on missing nodes"):
        try:
            is_exceptional_tree_po(BROOM, ["1.0"])
        except InputError:
            pass
        else:
            assert False, "must raise error"

    with it("agrees with exhaustive search on every subset"):
        for n in range(1, 7):
            for s in enumerate_structures(Family.TREE_PO, n):
                parents = tree_parents(s)
                t = from_parents(parents)
                addr = address_map(parents)
                for m in range(1 << n):
                    S = [x for x in s.universe if m >> x & 1]
                    got = is_exceptional_tree_po(t, [addr[x] for x in S])
                    assert got.holds == is_exceptional_bruteforce(s, S).holds

with description("finite type:") as self:
    with it("embeds smaller stars into larger ones"):
        assert embeds(star(2), star(3))
        assert not embeds(star(3), star(2))
        assert embeds(star(5), star(OMEGA))
        assert embeds(LEAF, LEAF)

    with it("matches children injectively"):
        assert not embeds(node((star(1), 2)), node((star(2), 1)))
        assert embeds(node((star(1), 2)), node((star(2), 2)))

    with it("accepts two shapes that do not embed into each other"):
        t = node((node((star(4), 2)), OMEGA), (node((star(1), 3)), OMEGA))
        assert is_strongly_finite_type(t)
        assert is_finite_type(t)

    with it("rejects embedding types occurring infinitely often"):
        t = node((star(1), OMEGA), (star(2), OMEGA))
        assert not is_strongly_finite_type(t)
        assert not is_finite_type(t)
        conds = type_conditions(t)
        assert [c.holds for c in conds] == [False, False]
        assert conds[1].witness == ("root",)

    with it("separates the two notions"):
        # a finite type below omega copies of a larger one
        t = node((star(1), 1), (star(2), OMEGA))
        assert not is_strongly_finite_type(t)
        assert is_finite_type(t)

    with it("rejects unbounded tails"):
        assert not is_finite_type(node(unbounded_tail=True))

with description("analyze_tree_pred:") as self:
    with it("finds the uniform binary tree ultrahomogeneous"):
        r = analyze_tree_pred(node((star(2), 2)))
        assert r.uh
        assert r.extra['beta'].beta == (2, 2)

    with it("leaves out one odd child"):
        t = node((star(3), OMEGA), (star(5), 1))
        r = analyze_tree_pred(t)
        assert not r.uh
        assert r.wuh
        assert [e.elements for e in r.minimal_exceptional] == [("1.0",)]
        assert r.extra['closed_form_wuh'] is True
        assert r.extra['views_uh'] is True

    with it("rejects two child shapes occurring infinitely often"):
        r = analyze_tree_pred(node((star(2), OMEGA), (star(3), OMEGA)))
        assert not r.wuh
        assert r.extra['closed_form_wuh'] is False

    with it("reports finite type when not wuh"):
        t = node((node((star(4), 2)), OMEGA), (node((star(1), 3)), OMEGA))
        r = analyze_tree_pred(t)
        assert not r.wuh
        assert r.cc is True
        assert r.extra['finite_type'] is True
        assert r.extra['closed_form_wuh'] is False

    with it("has no closed form above height 3"):
        deep = node((node((node((star(1), 1)), 1)), 1))
        assert closed_form_wuh(deep) is None
        assert analyze_tree_pred(deep).uh

    with it("matches the closed forms on random trees up to height 3"):
        mults = st.sampled_from([1, 2, 3, OMEGA])

        def trees(depth):
            if depth == 0:
                return st.just(LEAF)
            kids = st.lists(st.tuples(trees(depth - 1), mults),
                            min_size=1, max_size=3)
            out = st.one_of(st.just(LEAF), kids.map(lambda cs: node(*cs)))
            if depth >= 2:
                # a tail adds height 2
                tail = st.lists(st.tuples(trees(depth - 1), mults), max_size=2)
                out = st.one_of(out, tail.map(
                    lambda cs: node(*cs, unbounded_tail=True)))
            return out

        @settings(derandomize=True, deadline=None, max_examples=1000)
        @given(trees(3))
        def closed_forms(t):
            closed = closed_form_wuh(t)
            assert closed is not None
            assert closed == analyze_tree_pred(t).wuh

        closed_forms()

with description("rooted_view:") as self:
    with before.all:
        self.tree = node((star(3), OMEGA), (star(5), 1))

    with it("drops the children inside the set"):
        v = rooted_view(self.tree, [(), ((1, 0),)], ())
        assert v.tree == node((star(3), OMEGA))
        assert v.depth == 0

    with it("hangs the node below its chain of ancestors"):
        v = rooted_view(self.tree, [(), ((1, 0),)], ((1, 0),))
        assert v.tree == node((star(5), 1))
        assert v.depth == 1

with description("is_exceptional_tree_pred:") as self:
    with before.all:
        self.tree = node((star(3), OMEGA), (star(5), 1))

    with it("accepts the odd child"):
        assert is_exceptional_tree_pred(self.tree, ["1.0"]).holds

    with it("rejects the root alone"):
        t = is_exceptional_tree_pred(self.tree, [])
        assert not t.holds
        assert t.failed.name == "T_S[root] is ultrahomogeneous"

    with it("closes the set under predecessors"):
        assert is_exceptional_tree_pred(self.tree, ["1.0/0.0"]).holds

    with it("agrees with exhaustive search on small trees"):
        for n in range(1, 7):
            for s in enumerate_structures(Family.TREE_PRED, n):
                parents = tree_parents(s)
                t = from_parents(parents)
                addr = address_map(parents)
                for m in range(1 << n):
                    S = [x for x in s.universe if m >> x & 1]
                    # the generated substructure adds the predecessors
                    closed = {parents.index(None)} | set(S)
                    for x in S:
                        while parents[x] is not None:
                            x = parents[x]
                            closed.add(x)
                    got = is_exceptional_tree_pred(t, [addr[x] for x in S])
                    want = is_exceptional_bruteforce(s, sorted(closed))
                    assert got.holds == want.holds

with description("build_TA:") as self:
    with it("builds the class tree of one relation"):
        a = nested_from_partitions([[[0, 1], [2]]], 3)
        tree, leaf_of = build_TA(a)
        assert tree.family == Family.TREE_PRED
        assert tree_parents(tree) == [None, 0, 0, 1, 1, 2]
        assert leaf_of == {0: 3, 1: 4, 2: 5}
        assert tree.labels[1] == "[0]_1"

    with it("builds the class tree of two relations"):
        a = nested_from_partitions([[[0, 1, 2], [3, 4, 5]],
                                    [[0, 1], [2], [3], [4, 5]]], 6)
        tree, _ = build_TA(a)
        shape = from_parents(tree_parents(tree))
        assert shape == node((node((star(2), 1), (star(1), 1)), 2))

    with it("raises error on relations that are not nested"):
        a = nested_from_partitions([[[0, 1, 2], [3, 4, 5]],
                                    [[0, 1], [2, 3], [4, 5]]], 6)
        try:
            check_nested(a)
        except InputError as e:
            assert e.field == "relations[1]"
        else:
            assert False, "must raise error"

with description("analyze_nested:") as self:
    with it("is not uh though each relation is"):
        t = node((node((star(OMEGA), 3)), 1), (node((star(OMEGA), 5)), 1))
        r = analyze_nested(NestedEqPres(2, tree=t))
        assert not r.uh
        assert r.wuh
        assert analyze_equivalence(EqCharacter.of({OMEGA: 2})).uh
        assert analyze_equivalence(EqCharacter.of({OMEGA: 8})).uh

    with it("fixes one element of the second class"):
        t = node((node((star(2), OMEGA)), 1), (node((star(3), OMEGA)), 1))
        r = analyze_nested(NestedEqPres(2, tree=t))
        assert r.wuh
        assert r.extra['closed_form_wuh'] is True
        assert [e.elements for e in r.minimal_exceptional] == \
            [("1.0/0.0/0.0",)]

    with it("finds computable categoricity beyond wuh"):
        t = node((node((star(1), 2)), OMEGA), (node((star(2), 1)), OMEGA))
        r = analyze_nested(NestedEqPres(2, tree=t))
        assert not r.wuh
        assert r.cc is True
        assert r.extra['closed_form_wuh'] is False
        assert r.extra['each_relation_uh'] is False

    with it("reads finite structures through their class tree"):
        a = nested_from_partitions([[[0, 1], [2, 3]]], 4)
        r = analyze_nested(NestedEqPres(1, structure=a))
        assert r.uh
        assert r.extra['each_relation_uh'] is True

    with it("raises error on class trees of the wrong depth"):
        try:
            NestedEqPres(2, tree=star(3))
        except InputError as e:
            assert e.field == "tree"
        else:
            assert False, "must raise error"

with description("tree_from_parents:") as self:
    with it("round-trips through presentations"):
        s = tree_from_parents([None, 0, 0, 1], Family.TREE_PRED)
        assert from_parents(tree_parents(s)) == node((star(1), 1), (LEAF, 1))

with description("agree:") as self:
    with it("passes on equal verdicts"):
        agree("wuh", True, True)
        agree("uh", False, False, "the class tree")

    with it("raises a disagreement on different verdicts"):
        try:
            agree("wuh", True, False, "the class tree")
        except DisagreementError as e:
            assert e.exit_code == 4
            assert "the class tree says wuh=False" in str(e)
        else:
            assert False, "must raise error"
