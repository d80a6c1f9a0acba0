from mamba import description, it, before
from hypothesis import given, settings, strategies as st
from structutils import (
    Family,
    InputError,
    PartialMap,
    PreconditionError,
    ResourceError,
    chain,
    equivalence_from_classes,
    injection_from_images,
    tree_from_parents
)
from uhoracle import (
    automorphisms,
    canonical_certificate,
    definable_closure_bruteforce,
    enumerate_structures,
    extension_of,
    find_isomorphism,
    generated_substructure,
    is_exceptional_bruteforce,
    is_isomorphism,
    is_uh_bruteforce,
    minimal_exceptional_sets_bruteforce
)

with description("generated_substructure:") as self:
    with it("returns the set itself for relational structures"):
        s = equivalence_from_classes([[0, 1], [2, 3, 4]])
        assert generated_substructure(s, [1, 4]) == {1, 4}

    with it("closes under the injection"):
        s = injection_from_images([1, 2, 0])
        assert generated_substructure(s, [0]) == {0, 1, 2}

    with it("closes under the predecessor"):
        s = tree_from_parents([None, 0, 1], Family.TREE_PRED)
        assert generated_substructure(s, [2]) == {0, 1, 2}

    with it("adds the root of a tree-po"):
        s = tree_from_parents([None, 0, 0], Family.TREE_PO)
        assert generated_substructure(s, [2]) == {0, 2}

    with it("raises error on elements out of range"):
        try:
            generated_substructure(chain(3), [3])
        except InputError:
            pass
        else:
            assert False, "must raise error"

with description("is_uh_bruteforce:") as self:
    with it("accepts one-element structures"):
        for fam in (Family.ORDER, Family.EQUIVALENCE, Family.INJECTION,
                    Family.GRAPH, Family.TREE_PO, Family.TREE_PRED):
            for s in enumerate_structures(fam, 1):
                assert is_uh_bruteforce(s).holds

    with it("accepts classes of one size"):
        assert is_uh_bruteforce(equivalence_from_classes([[0, 1], [2, 3]]))

    with it("rejects the 3-chain with the first failing map"):
        v = is_uh_bruteforce(chain(3))
        assert not v.holds
        assert v.witness.pairs == ((0, 1),)

    with it("rejects structures above the cap"):
        try:
            is_uh_bruteforce(chain(9))
        except ResourceError:
            pass
        else:
            assert False, "must raise error"

    with it("rejects partial structures"):
        try:
            is_uh_bruteforce(injection_from_images([1, None]))
        except PreconditionError:
            pass
        else:
            assert False, "must raise error"

with description("is_exceptional_bruteforce:") as self:
    with it("accepts the whole universe"):
        for n in range(1, 7):
            for s in enumerate_structures(Family.EQUIVALENCE, n):
                assert is_exceptional_bruteforce(s, s.universe)

    with it("accepts the middle of the 3-chain"):
        assert is_exceptional_bruteforce(chain(3), [1]).holds

    with it("rejects a non-extendible map fixing the set"):
        v = is_exceptional_bruteforce(chain(4), [1])
        assert not v.holds
        assert (2, 3) in v.witness.pairs
        assert v.witness.fixed == {1}

    with it("agrees with is_uh_bruteforce on the empty set"):
        for fam in (Family.ORDER, Family.EQUIVALENCE, Family.INJECTION,
                    Family.GRAPH, Family.TREE_PO):
            for n in range(1, 5):
                for s in enumerate_structures(fam, n):
                    assert is_uh_bruteforce(s).holds == \
                        is_exceptional_bruteforce(s, []).holds

    with it("is monotone"):
        for fam in (Family.ORDER, Family.TREE_PO, Family.GRAPH):
            for s in enumerate_structures(fam, 4):
                found = [frozenset(x for x in s.universe if m >> x & 1)
                         for m in range(1 << s.size)
                         if is_exceptional_bruteforce(
                             s, [x for x in s.universe if m >> x & 1])]
                for S in found:
                    for x in s.universe:
                        assert S | {x} in found

    with it("returns witnesses that are non-extendible isomorphisms"):
        for s in enumerate_structures(Family.TREE_PO, 5):
            v = is_uh_bruteforce(s)
            if not v.holds:
                assert extension_of(s, v.witness) is None

with description("minimal_exceptional_sets_bruteforce:") as self:
    with it("returns the empty set for uh structures"):
        s = equivalence_from_classes([[0, 1], [2, 3]])
        assert minimal_exceptional_sets_bruteforce(s) == [frozenset()]

    with it("finds both minimal sets of the 3-chain"):
        assert minimal_exceptional_sets_bruteforce(chain(3)) == \
            [{1}, {0, 2}]

    with it("needs one endpoint for the 2-chain"):
        assert minimal_exceptional_sets_bruteforce(chain(2)) == [{0}, {1}]

with description("definable_closure_bruteforce:") as self:
    with it("returns the universe for the universe"):
        s = equivalence_from_classes([[0, 1], [2]])
        assert definable_closure_bruteforce(s, [0, 1, 2]).closure == {0, 1, 2}

    with it("returns everything for a rigid structure"):
        assert definable_closure_bruteforce(chain(3), []).closure == {0, 1, 2}

    with it("returns nothing when classes can swap"):
        s = equivalence_from_classes([[0, 1], [2, 3]])
        d = definable_closure_bruteforce(s, [])
        assert d.closure == frozenset()
        assert sorted(d.witness) == [0, 1, 2, 3]

    with it("is a closure operator"):
        for fam in (Family.EQUIVALENCE, Family.TREE_PO):
            for s in enumerate_structures(fam, 5):
                for m in range(1 << s.size):
                    S = {x for x in s.universe if m >> x & 1}
                    d = definable_closure_bruteforce(s, S).closure
                    assert S <= d
                    assert definable_closure_bruteforce(s, d).closure == d
                    for x in s.universe:
                        bigger = definable_closure_bruteforce(s, S | {x})
                        assert d <= bigger.closure

with description("enumerate_structures:") as self:
    with it("lists the partitions of 3"):
        assert len(enumerate_structures(Family.EQUIVALENCE, 3)) == 3

    with it("lists one order per size"):
        assert enumerate_structures(Family.ORDER, 5) == [chain(5)]

    with it("lists the cycle types of 3"):
        assert len(enumerate_structures(Family.INJECTION, 3)) == 3

    with it("lists rooted trees and graphs"):
        assert len(enumerate_structures(Family.TREE_PO, 4)) == 4
        assert len(enumerate_structures(Family.TREE_PRED, 5)) == 9
        assert len(enumerate_structures(Family.GRAPH, 3)) == 4
        assert len(enumerate_structures(Family.GRAPH, 4)) == 11

    with it("lists pairwise non-isomorphic structures"):
        for fam in (Family.GRAPH, Family.TREE_PO, Family.INJECTION):
            reps = enumerate_structures(fam, 5)
            certs = {canonical_certificate(s) for s in reps}
            assert len(certs) == len(reps)

    with it("lists nested structures with exactly n elements"):
        for s in enumerate_structures(Family.NESTED_EQ, 4, arity=2):
            assert s.size == 4
            assert s.arity == 2

    with it("is deterministic"):
        assert enumerate_structures(Family.GRAPH, 4) == \
            enumerate_structures(Family.GRAPH, 4)

    with it("raises error above the cap"):
        try:
            enumerate_structures(Family.EQUIVALENCE, 9)
        except ResourceError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error without an arity for nested-eq"):
        try:
            enumerate_structures(Family.NESTED_EQ, 3)
        except InputError:
            pass
        else:
            assert False, "must raise error"

with description("automorphisms and isomorphisms:") as self:
    with before.all:
        self.two_two = equivalence_from_classes([[0, 1], [2, 3]])

    with it("counts the automorphisms of 2+2"):
        assert len(list(automorphisms(self.two_two))) == 8
        assert len(list(automorphisms(self.two_two, [0]))) == 2

    with it("extends a map across classes"):
        perm = extension_of(self.two_two, PartialMap(((0, 2),)))
        assert perm is not None
        assert perm[0] == 2
        assert is_isomorphism(self.two_two, self.two_two, perm)

    with it("finds isomorphisms between relabeled copies"):
        @settings(derandomize=True, deadline=None, max_examples=50)
        @given(st.permutations(range(6)))
        def relabeled(perm):
            s = enumerate_structures(Family.TREE_PO, 6)[7]
            t = s.relabel(perm)
            found = find_isomorphism(s, t)
            assert found is not None
            assert is_isomorphism(s, t, found)
            assert canonical_certificate(s) == canonical_certificate(t)

        relabeled()
