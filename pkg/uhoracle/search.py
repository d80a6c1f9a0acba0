"""Backtracking search for isomorphisms, automorphisms and embeddings

Every pair (u, v) of elements gets a small integer signature recording which
relations hold between them in either direction, which function maps one to
the other, and (on the diagonal) which functions are defined at u and which
constants u is. A bijection is an isomorphism exactly when it preserves all
pair signatures, so the searches below only ever compare signatures.

Candidates are pruned with colour refinement, run on both sides with a shared
palette so colours are comparable across structures.
"""

from functools import lru_cache
from typing import (
    Dict,
    Hashable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple
)

from structutils import FiniteStructure, InputError

Table = Tuple[Tuple[int, ...], ...]
Perm = Tuple[int, ...]


@lru_cache(maxsize=1024)
def pair_table(s: FiniteStructure) -> Table:
    """The pair signature table of a structure"""
    n = s.size
    table = [[0] * n for _ in range(n)]
    bit = 1
    for rel in s.relations:
        for u, v in rel:
            table[u][v] |= bit
            table[v][u] |= bit << 1
        bit <<= 2
    for fn in s.functions:
        for u, v in enumerate(fn):
            if v is not None:
                table[u][v] |= bit
                table[v][u] |= bit << 1
                table[u][u] |= bit << 2
        bit <<= 3
    for c in s.constants:
        table[c][c] |= bit
        bit <<= 1
    return tuple(tuple(row) for row in table)


def same_language(s1: FiniteStructure, s2: FiniteStructure) -> bool:
    return s1.family == s2.family and \
        len(s1.relations) == len(s2.relations) and \
        len(s1.functions) == len(s2.functions) and \
        len(s1.constants) == len(s2.constants)


def refine(tables: Sequence[Table],
           initial: Sequence[Sequence[Hashable]]) -> List[List[int]]:
    """Colour refinement on several structures with one shared palette

    Arguments
      tables: pair tables of the structures
      initial: initial colour of every element, per structure
    Returns
      the stable colouring, as small integers, per structure
    """
    palette = sorted({(repr(c)) for cols in initial for c in cols})
    index = {c: i for i, c in enumerate(palette)}
    colours = [[index[repr(c)] for c in cols] for cols in initial]
    count = len(palette)
    while True:
        sigs = []
        for t, col in zip(tables, colours):
            n = len(col)
            sigs.append([
                (col[u], t[u][u],
                 tuple(sorted((t[u][v], col[v])
                              for v in range(n) if v != u and t[u][v])))
                for u in range(n)
            ])
        palette = sorted({sig for side in sigs for sig in side})
        index = {sig: i for i, sig in enumerate(palette)}
        colours = [[index[sig] for sig in side] for side in sigs]
        if len(palette) == count:
            return colours
        count = len(palette)


def _initial(t: Table, marks: Dict[int, int]) -> List[Tuple[int, int]]:
    return [(marks.get(u, 0), t[u][u]) for u in range(len(t))]


def _search(t1: Table, t2: Table,
            col1: List[int], col2: List[int],
            assign: Dict[int, int],
            order: List[int]) -> Iterator[Perm]:
    """Enumerate the bijections extending `assign` that preserve signatures"""
    n = len(t1)
    image: List[Optional[int]] = [None] * n
    used = [False] * n
    for u, w in assign.items():
        image[u] = w
        used[w] = True
    done = list(assign)

    def consistent(u: int, w: int) -> bool:
        if t1[u][u] != t2[w][w]:
            return False
        row1, row2 = t1[u], t2[w]
        return all(row1[x] == row2[image[x]] for x in done)

    def descend(k: int) -> Iterator[Perm]:
        if k == len(order):
            yield tuple(image)
            return
        u = order[k]
        for w in range(n):
            if used[w] or col2[w] != col1[u] or not consistent(u, w):
                continue
            image[u] = w
            used[w] = True
            done.append(u)
            yield from descend(k + 1)
            done.pop()
            used[w] = False
            image[u] = None

    # the pre-assigned part must itself be consistent
    for i, u in enumerate(done):
        w = image[u]
        if t1[u][u] != t2[w][w] or col1[u] != col2[w]:
            return
        if any(t1[u][x] != t2[w][image[x]] for x in done[:i]):
            return
    yield from descend(0)


def _prepare(s1: FiniteStructure, s2: FiniteStructure,
             pairs: Sequence[Tuple[int, int]]):
    t1, t2 = pair_table(s1), pair_table(s2)
    marks1 = {a: i + 1 for i, (a, _) in enumerate(pairs)}
    marks2 = {b: i + 1 for i, (_, b) in enumerate(pairs)}
    col1, col2 = refine([t1, t2], [_initial(t1, marks1), _initial(t2, marks2)])
    assign = dict(pairs)
    sizes: Dict[int, int] = {}
    for c in col1:
        sizes[c] = sizes.get(c, 0) + 1
    order = sorted((u for u in s1.universe if u not in assign),
                   key=lambda u: (sizes[col1[u]], col1[u], u))
    return t1, t2, col1, col2, assign, order


def isomorphisms(s1: FiniteStructure, s2: FiniteStructure,
                 pairs: Sequence[Tuple[int, int]] = ()) -> Iterator[Perm]:
    """Enumerate the isomorphisms from s1 to s2 extending a partial map

    Arguments
      s1, s2: finite structures
      pairs: (element of s1, element of s2) pairs to respect
    Returns
      an iterator of isomorphisms as image tuples
    """
    if not same_language(s1, s2) or s1.size != s2.size:
        return iter(())
    for a, b in pairs:
        s1.check_element(a)
        s2.check_element(b)
    t1, t2, col1, col2, assign, order = _prepare(s1, s2, pairs)
    if sorted(col1) != sorted(col2):
        return iter(())
    return _search(t1, t2, col1, col2, assign, order)


def find_isomorphism(s1: FiniteStructure, s2: FiniteStructure,
                     pairs: Sequence[Tuple[int, int]] = ()) -> Optional[Perm]:
    """An isomorphism from s1 to s2 extending a partial map, or None"""
    return next(isomorphisms(s1, s2, pairs), None)


def automorphisms(s: FiniteStructure, fixed: Sequence[int] = ()) -> Iterator[Perm]:
    """Enumerate the automorphisms of s fixing a set pointwise"""
    return isomorphisms(s, s, [(x, x) for x in sorted(set(fixed))])


def embeddings(s: FiniteStructure,
               domain: Sequence[int],
               fixed: Sequence[int] = ()) -> Iterator[Perm]:
    """Enumerate the embeddings of the substructure on `domain` into s

    The domain is taken in increasing order and images are produced in
    lexicographic order. Elements of `fixed` inside the domain map to
    themselves. For a domain closed under the functions of s these are the
    isomorphisms onto generated substructures.

    Returns
      an iterator of image tuples, aligned with the sorted domain
    """
    t = pair_table(s)
    dom = sorted(set(domain))
    fix = set(fixed) | set(s.constants)
    n = s.size
    image: List[int] = []
    used = [False] * n

    def descend(k: int) -> Iterator[Perm]:
        if k == len(dom):
            yield tuple(image)
            return
        u = dom[k]
        targets = [u] if u in fix else range(n)
        row = t[u]
        for w in targets:
            if used[w] or t[w][w] != row[u]:
                continue
            roww = t[w]
            if any(row[dom[i]] != roww[image[i]] for i in range(k)):
                continue
            image.append(w)
            used[w] = True
            yield from descend(k + 1)
            used[w] = False
            image.pop()

    return descend(0)


def canonical_certificate(s: FiniteStructure) -> Tuple:
    """A complete isomorphism invariant of a small finite structure

    The certificate is the least pair-table encoding over the leaves of the
    individualization-refinement search tree. Two structures of the same
    language get equal certificates iff they are isomorphic.
    """
    t = pair_table(s)
    n = s.size
    best: List[Optional[Tuple]] = [None]

    def descend(col: List[Hashable]):
        col = refine([t], [col])[0]
        cells: Dict[int, List[int]] = {}
        for u, c in enumerate(col):
            cells.setdefault(c, []).append(u)
        if len(cells) == n:
            order = sorted(range(n), key=lambda u: col[u])
            enc = tuple(t[order[i]][order[j]] for i in range(n) for j in range(n))
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        target = min((c for c in cells if len(cells[c]) > 1),
                     key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            descend([(c, 1 if u == v else 0) for u, c in enumerate(col)])

    if n:
        descend([0] * n)
    return (s.family.value, n, len(s.relations), len(s.functions),
            len(s.constants), best[0] or ())


def check_map(s1: FiniteStructure, s2: FiniteStructure,
              pairs: Sequence[Tuple[int, int]]) -> bool:
    """True if the pairs preserve every pair signature"""
    t1, t2 = pair_table(s1), pair_table(s2)
    for a, b in pairs:
        s1.check_element(a)
        s2.check_element(b)
    for a, b in pairs:
        for x, y in pairs:
            if t1[a][x] != t2[b][y]:
                return False
    return True


def is_isomorphism(s1: FiniteStructure, s2: FiniteStructure,
                   perm: Sequence[int]) -> bool:
    """Verify a total map edge by edge"""
    if len(perm) != s1.size or s1.size != s2.size or \
       sorted(perm) != list(s2.universe):
        return False
    if not same_language(s1, s2):
        raise InputError("structures of different languages")
    return check_map(s1, s2, list(enumerate(perm)))
