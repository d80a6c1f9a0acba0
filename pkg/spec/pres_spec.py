from fractions import Fraction
from itertools import product

from mamba import description, it, before
from hypothesis import given, settings, strategies as st
from structutils import (
    Family,
    InputError,
    UnsupportedError,
    chain,
    equivalence_from_classes,
    tree_parents
)
from uhoracle import enumerate_structures
from uhpres import (
    B_ETA,
    B_OMEGA,
    B_OMEGA_STAR,
    B_ZETA,
    LEAF,
    OMEGA,
    EqCharacter,
    ExtCount,
    GraphPres,
    InjSpectrum,
    LinOrderPres,
    applicable_rewrites,
    complete_graph,
    dyadic_points,
    fin,
    from_parents,
    height,
    materialize,
    node,
    normalize_linear,
    order_features,
    pres_isomorphic,
    present,
    presented_size,
    star,
    tree_key,
    truncate
)

BLOCKS = [fin(1), fin(2), B_OMEGA, B_OMEGA_STAR, B_ZETA, B_ETA]

with description("ExtCount:") as self:
    with it("absorbs finite counts into omega"):
        assert ExtCount(3) + OMEGA == OMEGA
        assert OMEGA + 0 == OMEGA
        assert ExtCount(2) + 3 == 5

    with it("orders naturals below omega"):
        assert ExtCount(100) < OMEGA
        assert not OMEGA < ExtCount(100)
        assert sorted([OMEGA, ExtCount(2), ExtCount(1)]) == [1, 2, OMEGA]

    with it("multiplies by zero to zero"):
        assert ExtCount(0) * OMEGA == 0
        assert ExtCount(2) * OMEGA == OMEGA

    with it("parses counts from json"):
        assert ExtCount.parse("omega", "x") == OMEGA
        assert ExtCount.parse(4, "x") == 4

    with it("raises error on negative counts with the field"):
        try:
            ExtCount.parse(-1, "entries[0][1]")
        except InputError as e:
            assert e.field == "entries[0][1]"
        else:
            assert False, "must raise error"

with description("normalize_linear:") as self:
    with it("merges finite blocks"):
        assert normalize_linear(LinOrderPres.of(2, 3)) == LinOrderPres.of(5)

    with it("absorbs one point between dense blocks"):
        p = LinOrderPres.of("eta", 1, "eta")
        assert normalize_linear(p) == LinOrderPres.of("eta")

    with it("joins omega* and omega into zeta"):
        p = LinOrderPres.of("omega*", "omega")
        assert normalize_linear(p) == LinOrderPres.of("zeta")

    with it("absorbs finite blocks into omega and omega*"):
        assert normalize_linear(LinOrderPres.of(3, "omega")) == \
            LinOrderPres.of("omega")
        assert normalize_linear(LinOrderPres.of("omega*", 2, "omega")) == \
            LinOrderPres.of("zeta")

    with it("is idempotent"):
        for blocks in product(BLOCKS, repeat=3):
            p = normalize_linear(LinOrderPres(blocks))
            assert normalize_linear(p) == p
            assert applicable_rewrites(p) == []

    with it("is confluent"):
        @settings(derandomize=True, deadline=None, max_examples=200)
        @given(st.lists(st.sampled_from(BLOCKS), max_size=6),
               st.data())
        def confluent(blocks, data):
            p = LinOrderPres(tuple(blocks))
            target = normalize_linear(p)
            # rewrite in a random order until stuck
            while True:
                steps = applicable_rewrites(p)
                if not steps:
                    break
                p = data.draw(st.sampled_from(steps))
            assert p == target

        confluent()

    with it("reads features off the points of a window"):
        assert order_features(LinOrderPres.of("eta", 1, "eta")) == \
            (False, False, 0, (("dense", 0),))
        assert order_features(LinOrderPres.of("omega", 1, "omega*")) == \
            (True, True, 2, (("omega", 0), ("fin", 1), ("omega*", 0)))
        assert order_features(LinOrderPres.of("omega*", 2, "omega")) == \
            (False, False, 1, (("zeta", 0),))
        assert order_features(LinOrderPres.of(1, "eta", 2)) == \
            (True, True, 1, (("fin", 1), ("dense", 0), ("fin", 2)))

    with it("has equal features exactly on equal normal forms"):
        by_features = {}
        by_normal = {}
        for k in range(1, 5):
            for blocks in product(BLOCKS, repeat=k):
                p = LinOrderPres(blocks)
                norm = normalize_linear(p)
                feat = order_features(p)
                assert by_features.setdefault(feat, norm) == norm
                assert by_normal.setdefault(norm, feat) == feat

with description("materialize:") as self:
    with it("fills equivalence classes round-robin"):
        m = materialize(EqCharacter.of({2: OMEGA}), 4)
        assert m.structure == equivalence_from_classes([[0, 1], [2, 3]])

    with it("closes a finite cycle"):
        m = materialize(InjSpectrum.of({3: 1}), 3)
        assert m.structure.functions == ((1, 2, 0),)

    with it("takes dyadic points for eta"):
        m = materialize(LinOrderPres.of("eta"), 3)
        assert m.labels == ("0:1/2", "0:1/4", "0:3/4")
        assert (1, 0) in m.structure.relations[0]
        assert (0, 2) in m.structure.relations[0]

    with it("lists dyadic points in insertion order"):
        pts = []
        for q in dyadic_points():
            pts.append(q)
            if len(pts) == 4:
                break
        assert pts == [Fraction(1, 2), Fraction(1, 4), Fraction(3, 4),
                       Fraction(1, 8)]

    with it("is monotone"):
        samples = [
            (LinOrderPres.of(1, "eta", "zeta", "omega*"), None),
            (EqCharacter.of({3: 2, 1: OMEGA}, unbounded_tail=True), None),
            (InjSpectrum.of({2: OMEGA}, omega=1, zeta=2), None),
            (GraphPres(bulk=(OMEGA, OMEGA)), None),
            (node((star(OMEGA), 2), (LEAF, 1)), Family.TREE_PO),
            (node(unbounded_tail=True), Family.TREE_PRED),
        ]
        for p, fam in samples:
            for n in range(12):
                small = materialize(p, n, fam)
                big = materialize(p, n + 1, fam)
                cut = big.structure.induced(range(n))
                assert cut == small.structure
                assert big.labels[:n] == small.labels

    with it("realizes a tree tail as stars of every size"):
        m = materialize(node(unbounded_tail=True), 30, Family.TREE_PO)
        parents = tree_parents(m.structure)
        kids = [x for x in m.structure.universe if parents[x] == 0]
        sizes = sorted(sum(1 for y in m.structure.universe if parents[y] == k)
                       for k in kids)
        assert sizes[:3] == [1, 2, 3]

    with it("raises error on catalog graphs"):
        try:
            materialize(GraphPres(catalog_tag="random"), 3)
        except UnsupportedError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on a negative size"):
        try:
            materialize(LinOrderPres.of("eta"), -1)
        except InputError:
            pass
        else:
            assert False, "must raise error"

with description("presented_size:") as self:
    with it("counts finite presentations"):
        assert presented_size(LinOrderPres.of(2, 3)) == 5
        assert presented_size(EqCharacter.of({2: 3, 1: 1})) == 7
        assert presented_size(node((star(2), 3))) == 10

    with it("returns omega for infinite ones"):
        assert presented_size(InjSpectrum.of(zeta=1)) == OMEGA
        assert presented_size(EqCharacter.of({2: OMEGA})) == OMEGA

with description("pres_isomorphic:") as self:
    with it("compares characters"):
        assert pres_isomorphic(EqCharacter.of({2: OMEGA}),
                               EqCharacter.of({2: "omega"}))
        assert not pres_isomorphic(EqCharacter.of({2: OMEGA}),
                                   EqCharacter.of({2: OMEGA}, True))

    with it("tells left endpoints from right endpoints"):
        assert not pres_isomorphic(LinOrderPres.of(1, "eta"),
                                   LinOrderPres.of("eta", 1))

    with it("compares orders after normalization"):
        assert pres_isomorphic(LinOrderPres.of("eta", 1, "eta"),
                               LinOrderPres.of("eta"))

    with it("merges equal graph components"):
        a = GraphPres(bulk=(2, 3))
        b = GraphPres(((complete_graph(3), 1), (complete_graph(3), 1)))
        assert pres_isomorphic(a, b)
        assert not pres_isomorphic(a, GraphPres(bulk=(3, 3)))

    with it("is an equivalence relation"):
        sample = [LinOrderPres(b) for k in range(1, 3)
                  for b in product(BLOCKS, repeat=k)]
        for a in sample:
            assert pres_isomorphic(a, a)
            for b in sample:
                if pres_isomorphic(a, b):
                    assert pres_isomorphic(b, a)
                    for c in sample:
                        if pres_isomorphic(b, c):
                            assert pres_isomorphic(a, c)

    with it("raises error across families"):
        try:
            pres_isomorphic(chain(3), equivalence_from_classes([[0, 1], [2]]))
        except InputError:
            pass
        else:
            assert False, "must raise error"
        try:
            pres_isomorphic(LinOrderPres.of(3), EqCharacter.of({3: 1}))
        except InputError:
            pass
        else:
            assert False, "must raise error"

with description("TreePres:") as self:
    with it("merges equal children"):
        assert node((LEAF, 1), (LEAF, 2)) == star(3)
        assert node((star(1), 1), (LEAF, 1)) == node((LEAF, 1), (star(1), 1))

    with it("gives equal keys exactly to isomorphic finite trees"):
        for n in range(1, 8):
            reps = enumerate_structures(Family.TREE_PO, n)
            keys = {tree_key(from_parents(tree_parents(s))) for s in reps}
            assert len(keys) == len(reps)

    with it("keeps its key under relabeling"):
        @settings(derandomize=True, deadline=None, max_examples=50)
        @given(st.permutations(range(7)))
        def relabeled(perm):
            for s in enumerate_structures(Family.TREE_PRED, 7)[:12]:
                a = from_parents(tree_parents(s))
                b = from_parents(tree_parents(s.relabel(perm)))
                assert tree_key(a) == tree_key(b)

        relabeled()

    with it("measures heights"):
        assert height(LEAF) == 0
        assert height(star(OMEGA)) == 1
        assert height(node((star(2), OMEGA))) == 2

    with it("truncates omega multiplicities"):
        t = truncate(node((star(OMEGA), OMEGA)), 2)
        assert t == node((star(2), 2))

    with it("raises error on zero multiplicities"):
        try:
            node((LEAF, 0))
        except InputError:
            pass
        else:
            assert False, "must raise error"

with description("present:") as self:
    with before.all:
        self.two_one = equivalence_from_classes([[0, 1], [2]])

    with it("presents finite structures"):
        assert present(chain(3)) == LinOrderPres.of(3)
        assert present(self.two_one) == EqCharacter.of({2: 1, 1: 1})

    with it("presents finite trees"):
        s = enumerate_structures(Family.TREE_PO, 3)
        assert {present(t) for t in s} == {star(2), node((star(1), 1))}
