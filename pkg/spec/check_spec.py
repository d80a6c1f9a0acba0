import os

from mamba import description, it, before
from structutils import (
    Family,
    InputError,
    RunConfig,
    chain,
    load_config
)
from uhcheck.crosscheck import (
    Disagreement,
    crosscheck,
    reproducer,
    select_instances,
    smallest
)

dirpath = os.path.dirname(os.path.abspath(__file__))
presets = os.path.join(dirpath, "../presets")

with description("RunConfig:") as self:
    with it("has the documented defaults"):
        c = RunConfig()
        assert c.cap == 8
        assert c.exhaustive == 6
        assert c.sample == 2000
        assert c.max_prefix == 4096
        assert c.max_sets == 10000
        assert c.format == "json"

    with it("matches the default preset"):
        assert load_config(os.path.join(presets, "default.toml")) == RunConfig()

    with it("reads every table of a preset"):
        c = load_config(os.path.join(dirpath, "files/small.toml"))
        assert c.seed == 7
        assert c.stages == 9
        assert c.format == "text"
        assert (c.cap, c.exhaustive, c.sample) == (4, 3, 5)
        assert c.max_sets == 50
        assert c.max_prefix == 4096

    with it("reads a preset in its detected encoding"):
        plain = load_config(os.path.join(dirpath, "files/small.toml"))
        wide = load_config(os.path.join(dirpath, "files/small_utf16.toml"))
        assert wide == plain

    with it("loads the shipped presets"):
        quick = load_config(os.path.join(presets, "quick.toml"))
        assert quick.cap == 5
        assert quick.max_sets == 1000
        acceptance = load_config(os.path.join(presets, "acceptance.toml"))
        assert acceptance.jobs == 4

    with it("validates updates"):
        c = RunConfig().updated(cap=12, command="crosscheck")
        assert c.cap == 12
        assert c.command == "crosscheck"
        try:
            c.updated(cap=13)
        except ValueError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on caps out of range"):
        for cap in (0, 13):
            try:
                RunConfig(cap=cap)
            except ValueError:
                pass
            else:
                assert False, "must raise error"
        try:
            load_config(os.path.join(dirpath, "files/bad_cap.toml"))
        except ValueError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on values of the wrong type"):
        try:
            load_config(os.path.join(dirpath, "files/bad_type.toml"))
        except ValueError as e:
            assert "seed" in str(e)
        else:
            assert False, "must raise error"
        try:
            RunConfig.from_dict({'caps': []})
        except ValueError:
            pass
        else:
            assert False, "must raise error"

    with it("raises error on unknown formats"):
        try:
            RunConfig(format="xml")
        except ValueError:
            pass
        else:
            assert False, "must raise error"

with description("crosscheck:") as self:
    with before.all:
        self.config = RunConfig(cap=4)

    with it("agrees on small orders with every subset"):
        s = crosscheck(Family.ORDER, self.config)
        assert s.agrees
        assert s.instances == 4
        assert s.subsets == 2 + 4 + 8 + 16
        assert s.sizes[4] == (1, 1)

    with it("agrees on every family up to the cap"):
        for fam in (Family.EQUIVALENCE, Family.INJECTION, Family.GRAPH,
                    Family.TREE_PO, Family.TREE_PRED, Family.NESTED_EQ):
            s = crosscheck(fam, self.config)
            assert s.agrees, s.to_text()
            assert s.undecided == 0

    with it("counts every graph on four vertices"):
        s = crosscheck(Family.GRAPH, self.config)
        assert s.sizes[3] == (4, 4)
        assert s.sizes[4] == (11, 11)

    with it("gives the same results on several workers"):
        one = crosscheck(Family.TREE_PO, self.config)
        many = crosscheck(Family.TREE_PO, self.config.updated(jobs=2))
        assert one.to_dict() == many.to_dict()

    with it("samples above the exhaustive threshold"):
        config = RunConfig(cap=5, exhaustive=3, sample=2, seed=1)
        insts, sizes = select_instances(Family.GRAPH, config)
        assert sizes[3] == (4, 4)
        assert sizes[4] == (2, 11)
        assert sizes[5] == (2, 34)
        again, _ = select_instances(Family.GRAPH, config)
        assert [i.key for i in insts] == [i.key for i in again]

    with it("samples subsets with the seed"):
        config = RunConfig(cap=4, exhaustive=3, sample=5)
        s = crosscheck(Family.ORDER, config)
        assert s.subsets == 2 + 4 + 8 + 5

    with it("prints a summary"):
        s = crosscheck(Family.ORDER, RunConfig(cap=2))
        assert s.to_text() == "\n".join([
            "order: 2 instances, 6 subsets, 0 disagreements",
            "  size 1: 1 of 1",
            "  size 2: 1 of 1"])
        d = s.to_dict()
        assert d['family'] == "order"
        assert d['disagreements'] == []
        assert d['schema_version'] == 1

    with it("raises error on families without a cross-check"):
        try:
            crosscheck(Family.N_EQ, self.config)
        except InputError as e:
            assert e.field == "family"
        else:
            assert False, "must raise error"

with description("disagreements:") as self:
    with before.all:
        self.ds = [
            Disagreement(("order", 3, 0), 'exceptional', True, False,
                         chain(3), (0, 2)),
            Disagreement(("order", 3, 0), 'exceptional', True, False,
                         chain(3), (1,)),
            Disagreement(("order", 2, 0), 'uh', True, False, chain(2)),
        ]

    with it("picks the smallest instance first"):
        assert smallest(self.ds) is self.ds[2]
        assert smallest(self.ds[:2]) is self.ds[1]

    with it("writes a reproducer holding the structure"):
        r = reproducer(self.ds[0])
        assert r['family'] == "order"
        assert r['structure']['size'] == 3
        assert r['crosscheck']['subset'] == [0, 2]
        assert r['crosscheck']['instance'] == ["order", 3, 0]
