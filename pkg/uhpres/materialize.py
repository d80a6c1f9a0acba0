"""Finite prefixes of presented structures

Every presentation enumerates its elements in a fixed order; the prefix of
length n is the substructure on the first n of them. Prefixes are monotone:
the prefix of length n is the substructure of the prefix of length n + 1 on
its first n elements, and labels never change.

Fill orders:
  linear       blocks round-robin, one new element per live block per round;
               omega counts up, omega* counts down from the top, zeta
               alternates 0, 1, -1, 2, -2, ..., eta takes dyadic points
               1/2, 1/4, 3/4, 1/8, ... of the open unit interval
  equivalence  classes round-robin, largest declared size first, then tail
               classes of sizes 1, 2, 3, ...
  injection    orbits round-robin: cycles by length, then omega, then zeta
               orbits, then tail cycles of lengths 1, 2, 3, ...
  graph        components round-robin in canonical order, bulk copies last
  trees        in rounds r = 0, 1, 2, ...: every node all of whose steps use
               a copy index <= r, parents first
  nested-eq    the leaves of the class tree in the tree's order

Besides the structure, every element gets a kind (what any isomorphism must
preserve on its own) and every pair of elements a link (what it must
preserve between two elements beyond the relations), which the symbolic
back-and-forth uses in place of an oracle for its stage checks.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count, islice
from typing import (
    Callable,
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union
)

from structutils import (
    Family,
    FiniteStructure,
    InputError,
    UnsupportedError,
    graph_from_edges,
    injection_from_images,
    nested_from_partitions,
    order_from_sequence,
    tree_from_parents
)
from .character import EqCharacter, InjSpectrum
from .extcount import ExtCount, OMEGA as OMEGA_COUNT
from .graph import GraphPres
from .linear import (
    FIN,
    OMEGA,
    OMEGA_STAR,
    ZETA,
    ETA,
    Block,
    LinOrderPres,
    normalize_linear
)
from .nested import NestedEqPres
from .tree import TreePres, child_slots, leaf_count, node_count, slot, tree_key

T = TypeVar('T')

Presentation = Union[LinOrderPres, EqCharacter, InjSpectrum, GraphPres,
                     TreePres, NestedEqPres]

_END = object()


def fair_merge(streams: Iterable[Iterable[T]]) -> Iterator[T]:
    """Interleave possibly infinitely many possibly infinite streams

    Round r takes one new stream from `streams` and then one item from every
    stream still alive, in the order the streams were taken.
    """
    source = iter(streams)
    active: List[Iterator[T]] = []
    more = True
    while True:
        if more:
            nxt = next(source, _END)
            if nxt is _END:
                more = False
            else:
                active.append(iter(nxt))
        if not more and not active:
            return
        alive = []
        for s in active:
            x = next(s, _END)
            if x is not _END:
                yield x
                alive.append(s)
        active = alive


def dyadic_points() -> Iterator[Fraction]:
    """1/2, 1/4, 3/4, 1/8, 3/8, ... : a dense order without endpoints"""
    d = 2
    while True:
        for num in range(1, d, 2):
            yield Fraction(num, d)
        d *= 2


def zeta_points() -> Iterator[int]:
    """0, 1, -1, 2, -2, ..."""
    yield 0
    for k in count(1):
        yield k
        yield -k


@dataclass(frozen=True)
class Materialized:
    """A finite prefix of a presented structure with its metadata"""
    structure: FiniteStructure
    # internal coordinate of each element
    keys: Tuple[Hashable, ...]
    kinds: Tuple[Hashable, ...]
    linker: Optional[Callable[[Hashable, Hashable], Hashable]] = \
        field(default=None, compare=False)
    # graph component instance -> template, None for K_omega
    templates: Dict[Hashable, Optional[FiniteStructure]] = \
        field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return self.structure.size

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.structure.labels

    def label_map(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.structure.labels)}

    def kind(self, x: int) -> Hashable:
        return self.kinds[x]

    def link(self, x: int, y: int) -> Hashable:
        if self.linker is None:
            return None
        return self.linker(self.keys[x], self.keys[y])


# linear orders

def _block_stream(i: int, b: Block) -> Iterator[Tuple[Hashable, Hashable]]:
    if b.kind == FIN:
        for pos in range(1, b.k + 1):
            yield (i, pos), (FIN, i, pos)
    elif b.kind == OMEGA:
        for pos in count():
            yield (i, pos), (OMEGA, i, pos)
    elif b.kind == OMEGA_STAR:
        for d in count(1):
            yield (i, -d), (OMEGA_STAR, i, d)
    elif b.kind == ZETA:
        for z in zeta_points():
            yield (i, z), (ZETA, i)
    else:
        for q in dyadic_points():
            yield (i, q), (ETA, i)


def _linear_link(p: LinOrderPres):
    def link(kx, ky):
        if kx[0] == ky[0] and p.blocks[kx[0]].kind == ZETA:
            return ky[1] - kx[1]
        return None
    return link


def _materialize_linear(p: LinOrderPres, n: int) -> Materialized:
    p = normalize_linear(p)
    recs = list(islice(fair_merge(_block_stream(i, b)
                                  for i, b in enumerate(p.blocks)), n))
    keys = tuple(k for k, _ in recs)
    seq = sorted(range(len(keys)), key=lambda x: keys[x])
    s = order_from_sequence(seq, len(keys)).with_labels(
        [f"{i}:{c}" for i, c in keys])
    return Materialized(s, keys, tuple(kd for _, kd in recs), _linear_link(p))


def _in_block(b: Block, c) -> bool:
    if b.kind == FIN:
        return 1 <= c <= b.k
    if b.kind == OMEGA:
        return c >= 0
    if b.kind == OMEGA_STAR:
        return c <= -1
    return b.kind == ZETA


def _first(b: Block):
    return 1 if b.kind == FIN else 0


def _last(b: Block):
    return b.k if b.kind == FIN else -1


def _true_successor(blocks: Sequence[Block], key):
    """The immediate successor of a point in the whole order, or None"""
    i, c = key
    b = blocks[i]
    if b.kind == ETA:
        return None
    if _in_block(b, c + 1):
        return (i, c + 1)
    if b.has_max and i + 1 < len(blocks) and blocks[i + 1].has_min:
        return (i + 1, _first(blocks[i + 1]))
    return None


def _true_predecessor(blocks: Sequence[Block], key):
    i, c = key
    b = blocks[i]
    if b.kind == ETA:
        return None
    if _in_block(b, c - 1):
        return (i, c - 1)
    if b.has_min and i > 0 and blocks[i - 1].has_max:
        return (i - 1, _last(blocks[i - 1]))
    return None


def linear_window(p: LinOrderPres, points: int = 3) -> List[Hashable]:
    """Keys of a prefix of p taken as written, in increasing order

    The prefix is long enough to hold every finite block and `points` points
    of every infinite one.
    """
    blocks = p.blocks
    want = {i: (b.k if b.kind == FIN else points) for i, b in enumerate(blocks)}
    seen: Dict[int, int] = {}
    keys = []
    for key, _ in fair_merge(_block_stream(i, b) for i, b in enumerate(blocks)):
        if all(seen.get(i, 0) >= n for i, n in want.items()):
            break
        keys.append(key)
        seen[key[0]] = seen.get(key[0], 0) + 1
    return sorted(keys)


def order_features(p: LinOrderPres) -> Tuple:
    """Endpoint, successivity and density features of the order type

    Read off the points of a window of p as written: successor pairs split
    the window into condensation classes (maximal runs at finite distance),
    each closed or open at either end. Two neighbouring classes are adjacent
    when no point of the whole order lies between them, which fails exactly
    when an eta block reaches between them. A one-point class with no
    adjacent class on either side sits in a dense segment; runs of those
    collapse to one marker.
    """
    blocks = p.blocks
    window = linear_window(p)
    runs: List[List[Hashable]] = []
    for key in window:
        if runs and _true_successor(blocks, runs[-1][-1]) == key:
            runs[-1].append(key)
        else:
            runs.append([key])

    def shape(run):
        left = _true_predecessor(blocks, run[0]) is None
        right = _true_successor(blocks, run[-1]) is None
        if left and right:
            return ("fin", len(run))
        if left:
            return (OMEGA, 0)
        if right:
            return (OMEGA_STAR, 0)
        return (ZETA, 0)

    def adjacent(a, b):
        lo, hi = a[-1][0], b[0][0]
        return not any(blocks[i].kind == ETA for i in range(lo, hi + 1))

    def dense(j):
        run = runs[j]
        if shape(run) != ("fin", 1):
            return False
        if blocks[run[0][0]].kind == ETA:
            return True
        left = j > 0 and not adjacent(runs[j - 1], run)
        right = j + 1 < len(runs) and not adjacent(run, runs[j + 1])
        return left and right

    classes: List[Tuple[str, int]] = []
    for j, run in enumerate(runs):
        cls = ("dense", 0) if dense(j) else shape(run)
        if cls == ("dense", 0) and classes and classes[-1] == cls:
            continue
        classes.append(cls)
    has_min = bool(classes) and classes[0][0] in ("fin", OMEGA)
    has_max = bool(classes) and classes[-1][0] in ("fin", OMEGA_STAR)
    successivities = sum(1 for c in classes
                         if c[0] in (OMEGA, OMEGA_STAR, ZETA) or
                         (c[0] == "fin" and c[1] > 1))
    return (has_min, has_max, successivities, tuple(classes))


# equivalence structures

def _class_stream(ckey, size: ExtCount):
    idx = range(size.value) if size.is_finite else count()
    for j in idx:
        yield (ckey, j), ("class", size.to_json())


def _eq_classes(c: EqCharacter):
    entries = sorted(c.entries, key=lambda e: e[0].sort_key(), reverse=True)
    for copy in count():
        alive = False
        for j, (size, cnt) in enumerate(entries):
            if cnt.is_omega or copy < cnt.value:
                alive = True
                yield _class_stream((j, copy), size)
        if c.unbounded_tail:
            alive = True
            yield _class_stream(("tail", copy), ExtCount(copy + 1))
        if not alive:
            return


def _materialize_equivalence(c: EqCharacter, n: int) -> Materialized:
    recs = list(islice(fair_merge(_eq_classes(c)), n))
    keys = tuple(k for k, _ in recs)
    groups: Dict[Hashable, List[int]] = {}
    for x, (ckey, _) in enumerate(keys):
        groups.setdefault(ckey, []).append(x)
    s = nested_from_partitions([list(groups.values())], len(keys),
                               Family.EQUIVALENCE)
    s = s.with_labels([f"{_ckey_str(ck)}:{j}" for ck, j in keys])
    return Materialized(s, keys, tuple(kd for _, kd in recs))


def _ckey_str(ck) -> str:
    a, b = ck
    return f"{a}.{b}"


# injection structures

def _orbit_stream(okey, shape: str, k: int = 0):
    if shape == "cycle":
        for pos in range(k):
            yield (okey, pos, k), ("cycle", k)
    elif shape == "omega":
        for pos in count():
            yield (okey, pos, 0), ("omega", pos)
    else:
        for pos in zeta_points():
            yield (okey, pos, 0), ("zeta",)


def _inj_orbits(sp: InjSpectrum):
    for copy in count():
        alive = False
        for k, cnt in sp.cycles:
            if cnt.is_omega or copy < cnt.value:
                alive = True
                yield _orbit_stream(("c", k, copy), "cycle", k)
        for shape, cnt in (("omega", sp.omega_orbits), ("zeta", sp.zeta_orbits)):
            if cnt.is_omega or copy < cnt.value:
                alive = True
                yield _orbit_stream((shape[0], 0, copy), shape)
        if sp.unbounded_cycle_tail:
            alive = True
            yield _orbit_stream(("t", copy + 1, copy), "cycle", copy + 1)
        if not alive:
            return


def _inj_link(kx, ky):
    if kx[0] != ky[0]:
        return None
    period = kx[2]
    diff = ky[1] - kx[1]
    return diff % period if period else diff


def _materialize_injection(sp: InjSpectrum, n: int) -> Materialized:
    recs = list(islice(fair_merge(_inj_orbits(sp)), n))
    keys = tuple(k for k, _ in recs)
    index = {k: x for x, k in enumerate(keys)}
    images: List[Optional[int]] = []
    for okey, pos, period in keys:
        nxt = (pos + 1) % period if period else pos + 1
        images.append(index.get((okey, nxt, period)))
    s = injection_from_images(images).with_labels(
        [f"{o[0]}{o[1]}.{o[2]}:{pos}" for o, pos, _ in keys])
    return Materialized(s, keys, tuple(kd for _, kd in recs), _inj_link)


# graphs

def _graph_instances(g: GraphPres, templates: Dict):
    types = g.component_types()
    bulk = g.canonical().bulk
    for copy in count():
        alive = False
        for j, (cert, comp, mult) in enumerate(types):
            if mult.is_omega or copy < mult.value:
                alive = True
                ikey = (j, copy)
                templates[ikey] = comp
                yield (((ikey, v), ("component", cert))
                       for v in range(comp.size))
        if bulk is not None:
            m = bulk[0]
            if m.is_omega or copy < m.value:
                alive = True
                ikey = ("bulk", copy)
                templates[ikey] = None
                yield (((ikey, v), ("component", "K_omega"))
                       for v in count())
        if not alive:
            return


def _materialize_graph(g: GraphPres, n: int) -> Materialized:
    if g.catalog_tag is not None:
        raise UnsupportedError(
            f"catalog graph '{g.catalog_tag}' has no materialization")
    templates: Dict[Hashable, Optional[FiniteStructure]] = {}
    recs = list(islice(fair_merge(_graph_instances(g, templates)), n))
    keys = tuple(k for k, _ in recs)
    edges = []
    for x in range(len(keys)):
        for y in range(x + 1, len(keys)):
            (ix, vx), (iy, vy) = keys[x], keys[y]
            if ix != iy:
                continue
            tmpl = templates[ix]
            if tmpl is None or (vx, vy) in tmpl.relations[0]:
                edges.append((x, y))
    s = graph_from_edges(len(keys), edges).with_labels(
        [f"{_ckey_str(i)}:{v}" for i, v in keys])
    return Materialized(s, keys, tuple(kd for _, kd in recs),
                        lambda kx, ky: kx[0] == ky[0], dict(templates))


# trees

def _addresses(t: TreePres, prefix: tuple, r: int):
    yield prefix
    for idx, child, mult in child_slots(t):
        if idx - len(t.children) > r:
            break
        copies = r + 1 if mult.is_omega else min(r + 1, mult.value)
        for c in range(copies):
            yield from _addresses(child, prefix + ((idx, c),), r)


def tree_nodes(t: TreePres) -> Iterator[tuple]:
    """Addresses of the nodes of a presented tree in materialization order"""
    total = node_count(t)
    emitted = set()
    for r in count():
        layer = sorted((a for a in _addresses(t, (), r) if a not in emitted),
                       key=lambda a: (len(a), a))
        for a in layer:
            emitted.add(a)
            yield a
        if total.is_finite and len(emitted) >= total.value:
            return


def address_label(a: tuple) -> str:
    if not a:
        return "root"
    return "/".join(f"{i}.{c}" for i, c in a)


def _subtrees_along(t: TreePres, a: tuple) -> List[TreePres]:
    """The subtrees at every prefix of an address, the whole tree first"""
    out = [t]
    cur = t
    for i, _ in a:
        cur = slot(cur, i)[0]
        out.append(cur)
    return out


def _materialize_tree(t: TreePres, n: int, family: Family) -> Materialized:
    keys = tuple(islice(tree_nodes(t), n))
    index = {a: x for x, a in enumerate(keys)}
    parents = [index[a[:-1]] if a else None for a in keys]
    kinds = tuple((len(a), tree_key(_subtrees_along(t, a)[-1])) for a in keys)
    s = tree_from_parents(parents, family).with_labels(
        [address_label(a) for a in keys])
    return Materialized(s, keys, kinds)


def _materialize_nested(p: NestedEqPres, n: int) -> Materialized:
    if p.structure is not None:
        s = p.structure.induced(range(min(n, p.structure.size)))
        return Materialized(s, tuple(s.universe), tuple(0 for _ in s.universe))
    depth = p.arity + 1
    leaves = tuple(islice((a for a in tree_nodes(p.tree) if len(a) == depth), n))
    parts = []
    for i in range(1, p.arity + 1):
        groups: Dict[tuple, List[int]] = {}
        for x, a in enumerate(leaves):
            groups.setdefault(a[:i], []).append(x)
        parts.append(list(groups.values()))
    kinds = tuple(tuple(tree_key(st) for st in _subtrees_along(p.tree, a)[1:-1])
                  for a in leaves)
    s = nested_from_partitions(parts, len(leaves)).with_labels(
        [address_label(a) for a in leaves])
    return Materialized(s, leaves, kinds)


def materialize(p: Presentation, n: int,
                family: Optional[Family] = None) -> Materialized:
    """The first n elements of a presented structure

    Arguments
      p: a presentation
      n: number of elements; a finite structure with fewer elements is
         returned whole
      family: tree-po or tree-pred, for a TreePres
    Returns
      the prefix with its labels, kinds and links
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError("n must be >= 0", field="n")
    if isinstance(p, LinOrderPres):
        return _materialize_linear(p, n)
    if isinstance(p, EqCharacter):
        return _materialize_equivalence(p, n)
    if isinstance(p, InjSpectrum):
        return _materialize_injection(p, n)
    if isinstance(p, GraphPres):
        return _materialize_graph(p, n)
    if isinstance(p, TreePres):
        if family not in (Family.TREE_PO, Family.TREE_PRED):
            raise InputError("a tree needs family tree-po or tree-pred",
                             field="family")
        return _materialize_tree(p, n, family)
    if isinstance(p, NestedEqPres):
        return _materialize_nested(p, n)
    raise InputError(f"not a presentation: {type(p).__name__}")


def presented_size(p: Presentation) -> ExtCount:
    """The number of elements of a presented structure, possibly omega"""
    if isinstance(p, LinOrderPres):
        if p.is_finite:
            return ExtCount(sum(b.k for b in p.blocks))
        return OMEGA_COUNT
    if isinstance(p, EqCharacter):
        if p.unbounded_tail:
            return OMEGA_COUNT
        total = ExtCount(0)
        for size, cnt in p.entries:
            total = total + size * cnt
        return total
    if isinstance(p, InjSpectrum):
        if p.unbounded_cycle_tail or p.omega_orbits or p.zeta_orbits:
            return OMEGA_COUNT
        total = ExtCount(0)
        for k, cnt in p.cycles:
            total = total + cnt * k
        return total
    if isinstance(p, GraphPres):
        if p.catalog_tag is not None:
            return OMEGA_COUNT
        g = p.canonical()
        if g.bulk is not None:
            return OMEGA_COUNT
        total = ExtCount(0)
        for c, m in g.components:
            total = total + m * c.size
        return total
    if isinstance(p, TreePres):
        return node_count(p)
    if isinstance(p, NestedEqPres):
        if p.structure is not None:
            return ExtCount(p.structure.size)
        return leaf_count(p.tree)
    raise InputError(f"not a presentation: {type(p).__name__}")

