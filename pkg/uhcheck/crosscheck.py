"""Cross-check the deciders against the exhaustive oracle

Every structure of a family up to the cap is given to its decider through
its presentation and to the oracle as an explicit structure; the uh
verdicts must agree. For orders and tree-po every subset is also checked
for being exceptional both ways. Above the exhaustive threshold instances
and subsets are sampled with a seeded generator, so a fixed seed always
checks the same ones.
"""

import random
import sys

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from structutils import (
    Family,
    FiniteStructure,
    InputError,
    RunConfig,
    stamp,
    tree_parents
)
from uhdecide import analyze, is_exceptional_linear, is_exceptional_tree_po
from uhoracle import (
    DEFAULT_NESTED_ARITY,
    enumerate_structures,
    is_exceptional_bruteforce,
    is_uh_bruteforce
)
from uhpres import Document, address_map, present

FAMILIES = (
    Family.ORDER,
    Family.EQUIVALENCE,
    Family.INJECTION,
    Family.GRAPH,
    Family.TREE_PO,
    Family.TREE_PRED,
    Family.NESTED_EQ,
)

# families whose deciders check exceptional sets symbolically
SET_FAMILIES = (Family.ORDER, Family.TREE_PO)

Key = Tuple[str, int, int]


@dataclass(frozen=True)
class Instance:
    """The index-th structure of its size in the enumeration order"""
    size: int
    index: int
    structure: FiniteStructure

    @property
    def key(self) -> Key:
        return (self.structure.family.value, self.size, self.index)


@dataclass
class Disagreement:
    key: Key
    question: str
    decided: Optional[bool]
    oracle: bool
    structure: FiniteStructure
    subset: Tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            'instance': list(self.key),
            'question': self.question,
            'subset': list(self.subset),
            'decided': self.decided,
            'oracle': self.oracle
        }


@dataclass
class InstanceResult:
    key: Key
    subsets: int = 0
    undecided: bool = False
    disagreements: List[Disagreement] = field(default_factory=list)


@dataclass
class CrossCheckSummary:
    """What one cross-check run compared"""
    family: Family
    cap: int
    seed: int
    sizes: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    subsets: int = 0
    undecided: int = 0
    disagreements: List[Disagreement] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(checked for checked, _ in self.sizes.values())

    @property
    def agrees(self) -> bool:
        return not self.disagreements

    def add(self, r: InstanceResult):
        self.subsets += r.subsets
        self.undecided += int(r.undecided)
        self.disagreements.extend(r.disagreements)

    def to_dict(self) -> dict:
        return stamp({
            'family': self.family.value,
            'cap': self.cap,
            'seed': self.seed,
            'sizes': [{'size': n, 'checked': c, 'classes': total}
                      for n, (c, total) in sorted(self.sizes.items())],
            'instances': self.instances,
            'subsets': self.subsets,
            'undecided': self.undecided,
            'disagreements': [d.to_dict() for d in self.disagreements]
        })

    def to_text(self) -> str:
        lines = [f"{self.family.value}: {self.instances} instances, "
                 f"{self.subsets} subsets, "
                 f"{len(self.disagreements)} disagreements"]
        lines += [f"  size {n}: {c} of {total}"
                  for n, (c, total) in sorted(self.sizes.items())]
        lines += [f"  disagreement {d.key} on {d.question}"
                  + (f" with {list(d.subset)}" if d.subset else "")
                  for d in self.disagreements]
        return "\n".join(lines)


def _rng(config: RunConfig, *key) -> random.Random:
    return random.Random(":".join(str(k) for k in (config.seed,) + key))


def select_instances(family: Family, config: RunConfig,
                     arity: Optional[int] = None
                     ) -> Tuple[List[Instance], Dict[int, Tuple[int, int]]]:
    """The instances to check and, per size, (checked, classes)"""
    out: List[Instance] = []
    sizes: Dict[int, Tuple[int, int]] = {}
    for n in range(1, config.cap + 1):
        reps = enumerate_structures(family, n, config.cap, arity)
        chosen = list(range(len(reps)))
        if n > config.exhaustive and len(reps) > config.sample:
            chosen = sorted(_rng(config, family.value, n).sample(
                chosen, config.sample))
        sizes[n] = (len(chosen), len(reps))
        out.extend(Instance(n, i, reps[i]) for i in chosen)
    return out, sizes


def _subsets(inst: Instance, config: RunConfig) -> Iterable[Tuple[int, ...]]:
    n = inst.size
    if n <= config.exhaustive:
        for k in range(n + 1):
            yield from combinations(range(n), k)
        return
    rng = _rng(config, *inst.key)
    for mask in sorted(rng.sample(range(1 << n), min(config.sample, 1 << n))):
        yield tuple(x for x in range(n) if mask >> x & 1)


def _decide_exceptional(s: FiniteStructure, p, S: Tuple[int, ...],
                        addresses) -> bool:
    if s.family == Family.ORDER:
        # chain(n) lists 0..n-1 in order, the presentation is Fin n
        return is_exceptional_linear(p, [(0, x + 1) for x in S]).holds
    return is_exceptional_tree_po(p, [addresses[x] for x in S]).holds


def check_instance(inst: Instance, config: RunConfig) -> InstanceResult:
    """Compare decider and oracle on one structure"""
    s = inst.structure
    result = InstanceResult(inst.key)
    p = present(s)
    decided = analyze(Document(s.family, p), config).uh
    expected = is_uh_bruteforce(s, config.cap).holds
    if decided is None:
        result.undecided = True
    elif decided != expected:
        result.disagreements.append(
            Disagreement(inst.key, 'uh', decided, expected, s))
    if s.family not in SET_FAMILIES:
        return result
    addresses = address_map(tree_parents(s)) \
        if s.family == Family.TREE_PO else None
    for S in _subsets(inst, config):
        result.subsets += 1
        got = _decide_exceptional(s, p, S, addresses)
        want = is_exceptional_bruteforce(s, S, config.cap).holds
        if got != want:
            result.disagreements.append(
                Disagreement(inst.key, 'exceptional', got, want, s, S))
    return result


def _check_star(args) -> InstanceResult:
    return check_instance(*args)


def crosscheck(family: Family, config: RunConfig = RunConfig(),
               arity: Optional[int] = None) -> CrossCheckSummary:
    """cmd_crosscheck: agreement of the deciders with the oracle

    Arguments
      family: the family to check
      config: cap, exhaustive threshold, sample size, seed and jobs
      arity: number of relations for nested-eq
    Returns
      the summary; results come in the enumeration order whatever the
      number of jobs
    """
    if family not in FAMILIES:
        raise InputError(f"no cross-check for family {family.value}",
                         field="family")
    if family == Family.NESTED_EQ and arity is None:
        arity = DEFAULT_NESTED_ARITY
    insts, sizes = select_instances(family, config, arity)
    summary = CrossCheckSummary(family, config.cap, config.seed, sizes)
    work = [(inst, config) for inst in insts]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_check_star, work, chunksize=16))
    else:
        results = map(_check_star, work)
    for r in results:
        if config.verbose:
            status = "ok" if not r.disagreements else "DISAGREE"
            print(f"{r.key[0]} size {r.key[1]} #{r.key[2]}: {status}",
                  file=sys.stderr)
        summary.add(r)
    return summary


def reproducer(d: Disagreement) -> dict:
    """A presentation file holding the structure of a disagreement, with the
    question under `crosscheck`"""
    return stamp({
        'family': d.structure.family.value,
        'structure': d.structure.to_dict(),
        'crosscheck': d.to_dict()
    })


def smallest(ds: List[Disagreement]) -> Disagreement:
    """The disagreement on the smallest instance, then the smallest subset"""
    return min(ds, key=lambda d: (d.key[1], d.key[2], len(d.subset), d.subset))
