"""Stage-by-stage reductions from index sets to homogeneity properties

Each construction reads the enumeration of a set W and builds a computable
structure in stages; the limit has the homogeneity property in question
exactly when W has the property of its index set (infinite, cofinite, empty,
finite). A construction is a generator yielding the snapshot after stage 0,
1, 2, .... Snapshots of the chain construction and of EQ_COF may relate old
elements anew; every other snapshot is a substructure of the next one.

Ties between successor pairs are broken by the least Cantor code of the pair.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from structutils import (
    Family,
    InputError,
    equivalence_from_classes,
    injection_from_images,
    order_from_sequence,
    tree_from_parents
)
from .schedule import Schedule, pair_code
from .snapshots import Kind, StageSnapshot

Snapshots = Iterator[StageSnapshot]
Parents = List[Optional[int]]


def _snapshot(kind: Kind, stage: int, metadata: dict,
              builder: Callable) -> StageSnapshot:
    return StageSnapshot(kind, stage, metadata, builder)


# linear orders

def least_code_pair(seq: Sequence[int],
                    ok: Callable[[int, int], bool]) -> Optional[int]:
    """Index j of the adjacent pair (seq[j], seq[j + 1]) of least code
    among those accepted by ok"""
    best: Optional[Tuple[int, int]] = None
    for j in range(len(seq) - 1):
        a, b = seq[j], seq[j + 1]
        if ok(a, b):
            c = pair_code(a, b)
            if best is None or c < best[0]:
                best = (c, j)
    return None if best is None else best[1]


def _lin_slot(older: Sequence[int], w: Schedule, t: int,
              cofinite: bool) -> Optional[int]:
    """Where the element added at stage 3t + 3 goes: after older[j], or in
    front when None"""
    if cofinite:
        inside = w.members(t + 1)
        return least_code_pair(older,
                               lambda a, b: a in inside and b in inside)
    if w.entering(t + 1) is None:
        return None
    return least_code_pair(older, lambda a, b: True)


def _lin(kind: Kind, w: Schedule) -> Snapshots:
    """Stages 3t + 1 and 3t + 2 add a new least and greatest element. Stage
    3t + 3 puts the new element between the successor pair of least code,
    when something entered W at stage t + 1 (LIN_INF) or when both members
    of the pair are in W by then (LIN_COF); otherwise it is a new least
    element. The limit is dense exactly when W is infinite, resp. it has
    finitely many successivities exactly when W is cofinite.
    """
    cofinite = kind == Kind.LIN_COF
    seq = [0]
    for s in count():
        order = tuple(seq)
        yield _snapshot(kind, s, {'size': s + 1, 'order': list(order)},
                        lambda order=order: order_from_sequence(order))
        x = s + 1
        if x % 3 == 1:
            seq.insert(0, x)
        elif x % 3 == 2:
            seq.append(x)
        else:
            j = _lin_slot(seq, w, x // 3 - 1, cofinite)
            seq.insert(0 if j is None else j + 1, x)


def _check_lin(snap: StageSnapshot, w: Schedule) -> List[str]:
    out = []
    s, order = snap.stage, snap.metadata['order']
    if sorted(order) != list(range(s + 1)):
        return [f"universe is not 0..{s}"]
    cofinite = snap.kind == Kind.LIN_COF
    for x in range(1, s + 1):
        upto = [y for y in order if y <= x]
        i = upto.index(x)
        if x % 3 == 1 and i != 0:
            out.append(f"{x} is not below the older elements")
        elif x % 3 == 2 and i != x:
            out.append(f"{x} is not above the older elements")
        elif x % 3 == 0:
            older = [y for y in upto if y != x]
            j = _lin_slot(older, w, x // 3 - 1, cofinite)
            if i != (0 if j is None else j + 1):
                where = "least" if j is None else \
                    f"between {older[j]} and {older[j + 1]}"
                out.append(f"{x} should be {where}")
    return out


# equivalence structures

def _classes(n: int, mate: Dict[int, int]) -> List[List[int]]:
    return [[x] if x not in mate else [x, mate[x]]
            for x in range(n) if x not in mate or x < mate[x]]


def _eq_snapshot(kind: Kind, s: int, n: int,
                 mate: Dict[int, int]) -> StageSnapshot:
    classes = _classes(n, mate)
    frozen = tuple(tuple(c) for c in classes)
    return _snapshot(kind, s, {'size': n, 'classes': classes},
                     lambda: equivalence_from_classes(frozen, n))


def _eq_inf(kind: Kind, w: Schedule) -> Snapshots:
    """A^0 = {0, 1, 2} with 0 ~ 1. Stage s adds 2s + 1 and 2s + 2; when
    something enters W then, 2s + 1 joins the least element still alone, so
    every class ends up of size two exactly when W is infinite.
    """
    mate = {0: 1, 1: 0}
    for s in count():
        yield _eq_snapshot(kind, s, 2 * s + 3, mate)
        a = 2 * s + 3
        if w.entering(s + 1) is not None:
            i = next(x for x in range(a) if x not in mate)
            mate[i], mate[a] = a, i


def _eq_cof(kind: Kind, w: Schedule) -> Snapshots:
    """Stage s + 1 adds 2s and 2s + 1. When n enters W, 2n is paired with the
    least odd number up to 2s + 1 still alone; otherwise 2s stays alone and
    2s + 1 is paired with the least odd number below it still alone, if any.
    New elements are singletons unless paired. Classes have size one or two,
    and [2n] = {2n} exactly while n is not in W.
    """
    mate: Dict[int, int] = {}
    for s in count():
        yield _eq_snapshot(kind, s, 2 * s, mate)
        top = 2 * s + 1
        n = w.entering(s + 1)
        if n is not None:
            odd = next(x for x in range(1, top + 1, 2) if x not in mate)
            mate[2 * n], mate[odd] = odd, 2 * n
        else:
            odd = next((x for x in range(1, top, 2) if x not in mate), None)
            if odd is not None:
                mate[odd], mate[top] = top, odd


def _check_classes(snap: StageSnapshot) -> Tuple[List[str], Dict[int, int]]:
    """Violations of the partition shape, and the pairs by element"""
    out = []
    seen: Dict[int, int] = {}
    for c in snap.metadata['classes']:
        if len(c) not in (1, 2):
            out.append(f"class {c} has size {len(c)}")
        for x in c:
            if x in seen:
                out.append(f"{x} lies in two classes")
            seen[x] = len(c)
    if sorted(seen) != list(range(snap.size)):
        out.append(f"classes do not cover 0..{snap.size - 1}")
    mate = {x: y for c in snap.metadata['classes'] if len(c) == 2
            for x, y in (c, c[::-1])}
    return out, mate


def _check_eq_inf(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    out = [] if snap.size == 2 * s + 3 else [f"universe is not 0..{2 * s + 2}"]
    bad, mate = _check_classes(snap)
    out += bad
    if mate.get(0) != 1:
        out.append("0 and 1 are not equivalent")
    if 2 * s + 2 in mate:
        out.append(f"{2 * s + 2} is not alone")
    pairs = len(mate) // 2
    if pairs != len(w.members(s)) + 1:
        out.append(f"{pairs} pairs with {len(w.members(s))} elements in W")
    for x, y in mate.items():
        t = (x - 1) // 2
        if x > max(y, 1) and (x % 2 == 0 or w.entering(t) is None):
            out.append(f"{x} joined {y} at stage {t} with nothing entering")
    return out


def _check_eq_cof(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    out = [] if snap.size == 2 * s else [f"universe is not 0..{2 * s - 1}"]
    bad, mate = _check_classes(snap)
    out += bad
    inside = w.members(s)
    for n in range(s):
        if (2 * n in mate) != (n in inside):
            out.append(f"[{2 * n}] has size {2 if 2 * n in mate else 1} "
                       f"but {n} {'is' if n in inside else 'is not'} in W")
    for x, y in mate.items():
        if x % 2 == 0 and y % 2 == 0:
            out.append(f"{x} and {y} are both even")
    return out


# injection structures

def _chain(images: Dict[int, int], start: int) -> List[int]:
    out = [start]
    while out[-1] in images and len(out) <= len(images):
        out.append(images[out[-1]])
    return out


def _inj_inf(kind: Kind, w: Schedule) -> Snapshots:
    """phi(0) = 1 at stage 0, one finite chain from a start to an end. Stage
    s adds 2s and 2s + 1 and maps the end to 2s; then 2s -> 2s + 1 extends
    the chain forwards, or when something enters W, 2s + 1 -> start extends
    it backwards. The limit is one zeta orbit exactly when W is infinite.
    """
    images = {0: 1}
    start, end = 0, 1
    for s in count():
        n = 2 * s + 2
        frozen = tuple(images.get(x) for x in range(n))
        yield _snapshot(kind, s,
                        {'size': n, 'start': start, 'end': end,
                         'chain': _chain(images, start)},
                        lambda frozen=frozen: injection_from_images(frozen))
        p, q = n, n + 1
        images[end] = p
        if w.entering(s + 1) is not None:
            images[q] = start
            start, end = q, p
        else:
            images[p] = q
            end = q


def _check_inj_inf(snap: StageSnapshot, w: Schedule) -> List[str]:
    s, md = snap.stage, snap.metadata
    out = []
    chain = md['chain']
    if sorted(chain) != list(range(2 * s + 2)):
        out.append("the chain does not visit every element once")
    if chain[:1] != [md['start']] or chain[-1:] != [md['end']]:
        out.append("the chain does not run from start to end")
    inside = w.members(s)
    if 0 in chain and chain.index(0) != len(inside):
        out.append(f"0 sits at position {chain.index(0)} with "
                   f"{len(inside)} elements in W")
    last = max((w.stage_of(x) for x in inside), default=None)
    expected = 0 if last is None else 2 * last + 1
    if md['start'] != expected:
        out.append(f"chain starts at {md['start']}, expected {expected}")
    return out


def two_adic(x: int) -> Tuple[int, int]:
    """(n, i) with x = 2^n (2i + 1)"""
    n = 0
    while x % 2 == 0:
        x //= 2
        n += 1
    return n, (x - 1) // 2


def inj_cof_image(x: int, w: Schedule) -> int:
    """The limit map of the INJ_COF construction at x

    Column i holds the numbers 2^n (2i + 1). It is an omega orbit, doubling,
    unless i enters W at stage m + 1: then odd exponents from 2m + 3 on run
    down, 2^(2m+1) (2i + 1) goes to 2i + 1 and even exponents from 2m on run
    up, which makes it a zeta orbit. The value only depends on W_s for the
    elements present at stage s.
    """
    n, i = two_adic(x)
    entered = w.stage_of(i)
    if entered is None or n < 2 * (entered - 1):
        return 2 * x
    m = entered - 1
    if n % 2 == 0:
        return 4 * x
    if n == 2 * m + 1:
        return 2 * i + 1
    return x // 4


def inj_cof_universe(s: int) -> List[int]:
    """{2^n (2i + 1) : i + n < s}, in increasing order"""
    return sorted((2 ** n) * (2 * i + 1)
                  for i in range(s) for n in range(s - i))


def _inj_cof(kind: Kind, w: Schedule) -> Snapshots:
    for s in count():
        ws = w.restricted(s)

        def build(s=s, ws=ws):
            elements = inj_cof_universe(s)
            index = {x: k for k, x in enumerate(elements)}
            images = tuple(index.get(inj_cof_image(x, ws)) for x in elements)
            return injection_from_images(images).with_labels(
                [str(x) for x in elements])
        yield _snapshot(kind, s,
                        {'size': s * (s + 1) // 2,
                         'rewired': sorted(ws.elements)},
                        build)


def _check_inj_cof(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    ws = w.restricted(s)
    elements = inj_cof_universe(s)
    present = set(elements)
    out = [] if len(elements) == snap.size else ["wrong universe size"]
    images = {x: inj_cof_image(x, ws) for x in elements}
    targets = [y for y in images.values() if y in present]
    if len(targets) != len(set(targets)):
        out.append("the map is not injective")
    for x, y in images.items():
        if two_adic(x)[1] != two_adic(y)[1]:
            out.append(f"{x} -> {y} leaves its column")
    for i in range(s):
        head = 2 * i + 1
        has_pre = any(y == head for y in images.values())
        if i not in ws.elements:
            if has_pre:
                out.append(f"{head} has a predecessor with {i} not in W")
            if any(images[x] != 2 * x for x in elements if two_adic(x)[1] == i):
                out.append(f"column {i} is not doubling with {i} not in W")
        else:
            m = ws.stage_of(i) - 1
            if (2 ** (2 * m + 1)) * head in present and not has_pre:
                out.append(f"{head} has no predecessor with {i} in W")
    return out


# trees with a partial order

def _tree_snapshot(kind: Kind, s: int, parents: Parents, metadata: dict,
                   family: Family = Family.TREE_PO,
                   labels: Optional[Sequence[str]] = None) -> StageSnapshot:
    frozen = tuple(parents)
    names = None if labels is None else tuple(labels)

    def build():
        t = tree_from_parents(frozen, family)
        return t if names is None else t.with_labels(names)
    metadata = dict(metadata, size=len(frozen), parents=list(frozen))
    return _snapshot(kind, s, metadata, build)


def _check_parents(snap: StageSnapshot, size: int,
                   ordered: bool = True) -> List[str]:
    parents = snap.metadata['parents']
    if len(parents) != size:
        return [f"{len(parents)} nodes, expected {size}"]
    if parents[0] is not None or any(p is None for p in parents[1:]):
        return ["0 is not the only root"]
    if ordered and any(p >= x for x, p in enumerate(parents)
                       if p is not None):
        return ["a node is numbered before its parent"]
    return []


def _runs(inside) -> Dict[int, int]:
    """Maximal runs start -> end of a finite set"""
    return {n: next(k for k in count(n) if k + 1 not in inside)
            for n in inside if n - 1 not in inside}


def _tree_ord_chain(kind: Kind, w: Schedule) -> Snapshots:
    """Stage s + 1 adds 2s + 1 and 2s + 2 below the root. When m enters W,
    the chains of the runs of W just below and just above m are joined with
    2s + 2 in between, starting from 2m + 1 when no run ends at m - 1. So the
    nodes below 2n + 1, for a run n..n + k of W, form a chain holding k + 1
    even nodes; when W is cofinite the chains grow without end and the limit
    is not a tree.
    """
    chains: Dict[int, List[int]] = {}
    ends: Dict[int, int] = {}   # run end -> run start
    parents: Parents = [None]
    for s in count():
        yield _tree_snapshot(kind, s, parents, {
            'chains': [chains[n] for n in sorted(chains)],
            'runs': [[n, chains_end] for chains_end, n in sorted(
                ends.items(), key=lambda e: e[1])]})
        parents += [0, 0]
        m = w.entering(s + 1)
        if m is None:
            continue
        start = ends.pop(m - 1, None)
        head = chains.pop(start) if start is not None else [2 * m + 1]
        tail: List[int] = []
        end = m
        if m + 1 in chains:
            tail = chains.pop(m + 1)
            end = next(e for e, n in ends.items() if n == m + 1)
            del ends[end]
        start = m if start is None else start
        chains[start] = head + [2 * s + 2] + tail
        ends[end] = start
        chain = chains[start]
        for lower, upper in zip(chain, chain[1:]):
            parents[lower] = upper
        parents[chain[-1]] = 0


def _check_tree_ord_chain(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    out = _check_parents(snap, 2 * s + 1, ordered=False)
    if out:
        return out
    parents = snap.metadata['parents']
    inside = w.members(s)
    runs = _runs(inside)
    if [list(r) for r in sorted(runs.items())] != snap.metadata['runs']:
        out.append("chains do not follow the runs of W")
    for n, end in runs.items():
        below = []
        x = parents[2 * n + 1]
        while x:
            below.append(x)
            x = parents[x]
        evens = {y for y in below + [2 * n + 1] if y % 2 == 0}
        expected = {2 * w.stage_of(k) for k in range(n, end + 1)}
        if evens != expected:
            out.append(f"below {2 * n + 1}: {sorted(evens)}, "
                       f"expected {sorted(expected)}")
    for x in range(1, 2 * s + 1):
        if parents[x] != 0 and not any(x in c for c in snap.metadata['chains']):
            out.append(f"{x} is off the root but in no chain")
    return out


def _tree_ord_uh(kind: Kind, w: Schedule) -> Snapshots:
    """Stage t adds node t below the root, or below node 1 once W_t is not
    empty (from t = 2 on). The limit has an element of height 2 exactly when
    W is not empty.
    """
    first = w.events[0][1] if w.events else None
    parents: Parents = [None]
    for s in count():
        yield _tree_snapshot(kind, s, parents, {
            'height2': [x for x, p in enumerate(parents) if p == 1]})
        t = s + 1
        parents.append(1 if t >= 2 and first is not None and first <= t else 0)


def _check_tree_ord_uh(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    out = _check_parents(snap, s + 1)
    if out:
        return out
    parents = snap.metadata['parents']
    for t in range(1, s + 1):
        expected = 1 if t >= 2 and w.members(t) else 0
        if parents[t] != expected:
            out.append(f"{t} hangs below {parents[t]}, expected {expected}")
    return out


def _tree_ord_wuh(kind: Kind, w: Schedule) -> Snapshots:
    """Stage s adds 2s + 1 and 2s + 2 below the root, with 2s + 1 below 2s + 2
    when something enters W at stage s. Nodes of rank 1 are then the 2s + 1
    of those stages, finitely many exactly when W is finite.
    """
    parents: Parents = [None, 0, 0]
    for s in count():
        yield _tree_snapshot(kind, s, parents, {
            'rank1': sorted({p for p in parents[1:] if p})})
        t = s + 1
        parents.append(0)
        parents.append(2 * t + 1 if w.entering(t) is not None else 0)


def _check_tree_ord_wuh(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    out = _check_parents(snap, 2 * s + 3)
    if out:
        return out
    parents = snap.metadata['parents']
    inner = {p for p in parents[1:] if p}
    expected = {2 * w.stage_of(x) + 1 for x in w.members(s)}
    if inner != expected:
        out.append(f"nodes of rank 1 are {sorted(inner)}, "
                   f"expected {sorted(expected)}")
    return out


# trees with a predecessor function

def _tree_pred_uh(kind: Kind, w: Schedule) -> Snapshots:
    """Root 0 with successors 1 and 2. Every stage gives 1 another successor,
    and 2 one more when something enters W. Both get infinitely many exactly
    when W is infinite.
    """
    parents: Parents = [None, 0, 0]
    for s in count():
        yield _tree_snapshot(kind, s, parents, {
            'successors': [parents.count(1), parents.count(2)]},
            Family.TREE_PRED)
        parents.append(1)
        if w.entering(s + 1) is not None:
            parents.append(2)


def _check_tree_pred_uh(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    inside = len(w.members(s))
    out = _check_parents(snap, 3 + s + inside)
    if out:
        return out
    parents = snap.metadata['parents']
    if parents[1:3] != [0, 0]:
        out.append("1 and 2 are not successors of the root")
    counts = Counter(parents)
    got = [counts[0], counts[1], counts[2]]
    if got != [2, s, inside]:
        out.append(f"successor counts {got}, expected {[2, s, inside]}")
    return out


def _run_lengths(inside, upto: int) -> List[int]:
    """k_n for n <= upto: the length of the run n + 1, n + 2, ... inside W"""
    k = [0] * (upto + 2)
    for n in range(upto, -1, -1):
        k[n] = k[n + 1] + 1 if n + 1 in inside else 0
    return k[:upto + 1]


def _tree_pred_wuh(kind: Kind, w: Schedule) -> Snapshots:
    """Stage s adds the node 2^s of height 1 with s successors. Every 2^n
    keeps n + k successors, k the length of the run n + 1, ..., n + k inside
    W_s. Infinitely many nodes of height 1 end up with infinitely many
    successors exactly when W is cofinite.
    """
    parents: Parents = [None]
    labels = ["0"]
    level1: List[int] = []
    succ: List[int] = []
    for s in count():
        level1.append(len(parents))
        parents.append(0)
        labels.append(f"2^{s}")
        succ.append(0)
        k = _run_lengths(w.members(s), s)
        for n in range(s + 1):
            while succ[n] < n + k[n]:
                parents.append(level1[n])
                labels.append(f"2^{n}.{succ[n]}")
                succ[n] += 1
        yield _tree_snapshot(kind, s, parents, {'successors': list(succ)},
                             Family.TREE_PRED, labels)


def _check_tree_pred_wuh(snap: StageSnapshot, w: Schedule) -> List[str]:
    s = snap.stage
    succ = snap.metadata['successors']
    out = _check_parents(snap, 1 + len(succ) + sum(succ))
    if out:
        return out
    if len(succ) != s + 1:
        return [f"{len(succ)} nodes of height 1, expected {s + 1}"]
    k = _run_lengths(w.members(s), s)
    parents = snap.metadata['parents']
    counts = Counter(parents)
    tops = [x for x, p in enumerate(parents) if p == 0]
    for n, top in enumerate(tops):
        got = counts[top]
        if got != n + k[n] or got != succ[n]:
            out.append(f"2^{n} has {got} successors, expected {n + k[n]}")
    return out


_BUILDERS = {
    Kind.LIN_INF: _lin,
    Kind.LIN_COF: _lin,
    Kind.EQ_INF: _eq_inf,
    Kind.EQ_COF: _eq_cof,
    Kind.INJ_INF: _inj_inf,
    Kind.INJ_COF: _inj_cof,
    Kind.TREE_ORD_CHAIN: _tree_ord_chain,
    Kind.TREE_ORD_UH: _tree_ord_uh,
    Kind.TREE_ORD_WUH: _tree_ord_wuh,
    Kind.TREE_PRED_UH: _tree_pred_uh,
    Kind.TREE_PRED_WUH: _tree_pred_wuh,
}

_CHECKERS = {
    Kind.LIN_INF: _check_lin,
    Kind.LIN_COF: _check_lin,
    Kind.EQ_INF: _check_eq_inf,
    Kind.EQ_COF: _check_eq_cof,
    Kind.INJ_INF: _check_inj_inf,
    Kind.INJ_COF: _check_inj_cof,
    Kind.TREE_ORD_CHAIN: _check_tree_ord_chain,
    Kind.TREE_ORD_UH: _check_tree_ord_uh,
    Kind.TREE_ORD_WUH: _check_tree_ord_wuh,
    Kind.TREE_PRED_UH: _check_tree_pred_uh,
    Kind.TREE_PRED_WUH: _check_tree_pred_wuh,
}


def _reduction_kind(kind) -> Kind:
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    if not kind.is_reduction:
        raise InputError(f"{kind.value} is not a reduction", field="kind")
    return kind


def iter_reduction(kind, w: Schedule,
                   stages: Optional[int] = None) -> Snapshots:
    """Snapshots after stage 0, 1, ..., up to `stages` when given

    Arguments
      kind: a reduction kind or its name
      w: the enumeration of W seen so far
      stages: last stage to run
    """
    kind = _reduction_kind(kind)
    if stages is not None and stages < 0:
        raise InputError("stages must be >= 0", field="stages")
    for snap in _BUILDERS[kind](kind, w):
        yield snap
        if stages is not None and snap.stage >= stages:
            return


def build_reduction(kind, w: Schedule, stages: int) -> StageSnapshot:
    """The snapshot after exactly `stages` stages"""
    snap = None
    for snap in iter_reduction(kind, w, stages):
        pass
    return snap


@dataclass
class InvariantReport:
    """Outcome of a stage invariant check"""
    kind: Kind
    stage: int
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {'kind': self.kind.value, 'stage': self.stage,
                'holds': self.holds, 'violations': list(self.violations)}


def check_stage_invariants(kind, snap: StageSnapshot,
                           w: Schedule) -> InvariantReport:
    """Check the stage invariants a construction maintains

    Arguments
      kind: the kind the snapshot is expected to have
      snap: a snapshot built from w
      w: the schedule it was built from
    Returns
      the report, with an empty violation list when everything holds
    """
    kind = _reduction_kind(kind)
    if snap.kind != kind:
        raise InputError(
            f"snapshot is of kind {snap.kind.value}, not {kind.value}",
            field="kind")
    return InvariantReport(kind, snap.stage, _CHECKERS[kind](snap, w))
