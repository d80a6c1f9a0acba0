"""Reading and writing presentation files

A presentation file is a JSON object with a `family` field and either the
family's symbolic fields or an explicit finite `structure`:

    {"family": "order", "blocks": ["eta", 5, "eta"]}
    {"family": "equivalence", "entries": [[2, "omega"]]}
    {"family": "injection", "cycles": [[3, "omega"]], "omega": 2, "zeta": 0}
    {"family": "graph", "components": [{"vertices": 2, "edges": [[0, 1]],
     "multiplicity": 1}], "bulk": ["omega", 3]}
    {"family": "graph", "catalog": "random"}
    {"family": "tree-po", "tree": [[[[[], "omega"]], 1]]}
    {"family": "nested-eq", "arity": 1, "tree": ...}
    {"family": "n-eq", "structure": {"size": 3, "relations": [...]}}

Counts are integers or the string "omega". Errors name the JSON path of the
offending field.
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from structutils import (
    SCHEMA_VERSION,
    Family,
    FiniteStructure,
    InputError,
    read_json,
    stamp
)
from .character import EqCharacter, InjSpectrum
from .extcount import ExtCount
from .graph import GraphPres
from .linear import Block, LinOrderPres
from .materialize import Presentation
from .nested import NestedEqPres
from .present import present
from .tree import TreePres


@dataclass(frozen=True)
class Document:
    """The content of a presentation file"""
    family: Family
    pres: Optional[Presentation] = None
    # set when the file gives an explicit finite structure
    structure: Optional[FiniteStructure] = None

    @property
    def is_finite(self) -> bool:
        return self.structure is not None


def _expect_type(x: Any, types, field: str, what: str):
    if isinstance(x, bool) or not isinstance(x, types):
        raise InputError(f"expected {what}", field=field or None)


def _nat(x: Any, field: str, minimum: int = 0) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < minimum:
        raise InputError(f"expected an integer >= {minimum}, got {x!r}",
                         field=field)
    return x


def _flag(obj: dict, key: str, field: str) -> bool:
    val = obj.get(key, False)
    if not isinstance(val, bool):
        raise InputError("expected true or false", field=f"{field}{key}")
    return val


def _pairs(x: Any, field: str) -> List[Tuple[Any, Any]]:
    _expect_type(x, list, field, "a list of pairs")
    for i, p in enumerate(x):
        if not isinstance(p, list) or len(p) != 2:
            raise InputError("expected a pair", field=f"{field}[{i}]")
    return [tuple(p) for p in x]


def parse_structure(obj: Any, family: Family,
                    field: str = "structure") -> FiniteStructure:
    """Read an explicit finite structure

    For tree-po the root is taken as the constant when none is given.
    """
    _expect_type(obj, dict, field, "an object")
    size = _nat(obj.get('size'), f"{field}.size")
    rels = []
    for i, rel in enumerate(obj.get('relations', [])):
        pairs = _pairs(rel, f"{field}.relations[{i}]")
        for j, (u, v) in enumerate(pairs):
            _nat(u, f"{field}.relations[{i}][{j}][0]")
            _nat(v, f"{field}.relations[{i}][{j}][1]")
        rels.append(frozenset(pairs))
    fns = []
    for i, fn in enumerate(obj.get('functions', [])):
        _expect_type(fn, list, f"{field}.functions[{i}]", "a list of images")
        for j, v in enumerate(fn):
            if v is not None:
                _nat(v, f"{field}.functions[{i}][{j}]")
        fns.append(tuple(fn))
    consts = tuple(_nat(c, f"{field}.constants[{i}]")
                   for i, c in enumerate(obj.get('constants', [])))
    labels = obj.get('labels', [])
    _expect_type(labels, list, f"{field}.labels", "a list of strings")
    if labels and (len(labels) != size or
                   not all(isinstance(x, str) for x in labels)):
        raise InputError("expected one string label per element",
                         field=f"{field}.labels")
    if family == Family.TREE_PO and not consts and rels:
        lt = rels[0]
        roots = [r for r in range(size)
                 if all((r, x) in lt for x in range(size) if x != r)]
        consts = tuple(roots[:1])
    s = FiniteStructure(family, size, tuple(rels), tuple(fns), consts,
                        tuple(labels))
    return s.validate()


def parse_tree(x: Any, field: str = "tree") -> TreePres:
    """Read a tree node: [[child, multiplicity], ...] or an object"""
    tail = False
    kids = x
    if isinstance(x, dict):
        kids = x.get('children', [])
        tail = _flag(x, 'unbounded_tail', f"{field}.")
    _expect_type(kids, list, field, "a list of [child, multiplicity] pairs")
    children = []
    for i, (child, mult) in enumerate(_pairs(kids, field)):
        children.append((parse_tree(child, f"{field}[{i}][0]"),
                         ExtCount.parse(mult, f"{field}[{i}][1]", minimum=1)))
    return TreePres(tuple(children), tail)


def _parse_counts(x: Any, field: str, finite_sizes: bool):
    seen = set()
    out = []
    for i, (size, cnt) in enumerate(_pairs(x, field)):
        if finite_sizes:
            size = ExtCount(_nat(size, f"{field}[{i}][0]", minimum=1))
        else:
            size = ExtCount.parse(size, f"{field}[{i}][0]", minimum=1)
        if size in seen:
            raise InputError(f"size {size!r} is listed twice",
                             field=f"{field}[{i}][0]")
        seen.add(size)
        out.append((size, ExtCount.parse(cnt, f"{field}[{i}][1]", minimum=1)))
    return out


def _parse_graph(obj: dict) -> GraphPres:
    if 'catalog' in obj:
        tag = obj['catalog']
        _expect_type(tag, str, "catalog", "a catalog tag")
        if 'components' in obj or 'bulk' in obj:
            raise InputError("a catalog graph has no other fields",
                             field="catalog")
        return GraphPres(catalog_tag=tag)
    comps = []
    raw = obj.get('components', [])
    _expect_type(raw, list, "components", "a list of components")
    for i, c in enumerate(raw):
        field = f"components[{i}]"
        _expect_type(c, dict, field, "an object")
        n = _nat(c.get('vertices'), f"{field}.vertices", minimum=1)
        edges = _pairs(c.get('edges', []), f"{field}.edges")
        pairs = set()
        for j, (u, v) in enumerate(edges):
            if _nat(u, f"{field}.edges[{j}][0]") >= n or \
               _nat(v, f"{field}.edges[{j}][1]") >= n or u == v:
                raise InputError("edge endpoints must be distinct vertices",
                                 field=f"{field}.edges[{j}]")
            pairs.update({(u, v), (v, u)})
        g = FiniteStructure(Family.GRAPH, n, (frozenset(pairs),))
        mult = ExtCount.parse(c.get('multiplicity', 1), f"{field}.multiplicity",
                              minimum=1)
        comps.append((g, mult))
    bulk = None
    if 'bulk' in obj:
        m, n = _pairs([obj['bulk']], "bulk")[0]
        bulk = (ExtCount.parse(m, "bulk[0]", minimum=1),
                ExtCount.parse(n, "bulk[1]", minimum=1))
    return GraphPres(tuple(comps), bulk)


def load_presentation(obj: Any) -> Document:
    """Validate a parsed presentation file

    Argument
      obj: the JSON document
    Returns
      the document with its presentation and, for finite files, the structure
    """
    _expect_type(obj, dict, "", "a JSON object")
    version = obj.get('schema_version', SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise InputError(f"unsupported schema version {version!r}",
                         field="schema_version")
    fam = Family.parse(obj.get('family'))
    if 'structure' in obj:
        s = parse_structure(obj['structure'], fam)
        pres = None if fam == Family.N_EQ else present(s)
        return Document(fam, pres, s)
    if fam == Family.ORDER:
        blocks = obj.get('blocks', [])
        _expect_type(blocks, list, "blocks", "a list of blocks")
        return Document(fam, LinOrderPres(tuple(
            Block.parse(b, f"blocks[{i}]") for i, b in enumerate(blocks))))
    if fam == Family.EQUIVALENCE:
        entries = _parse_counts(obj.get('entries', []), "entries", False)
        return Document(fam, EqCharacter(
            tuple(sorted(entries, key=lambda e: e[0].sort_key())),
            _flag(obj, 'unbounded_tail', "")))
    if fam == Family.INJECTION:
        cycles = _parse_counts(obj.get('cycles', []), "cycles", True)
        return Document(fam, InjSpectrum.of(
            {int(k): c for k, c in cycles},
            ExtCount.parse(obj.get('omega', 0), "omega"),
            ExtCount.parse(obj.get('zeta', 0), "zeta"),
            _flag(obj, 'unbounded_cycle_tail', "")))
    if fam == Family.GRAPH:
        return Document(fam, _parse_graph(obj))
    if fam in (Family.TREE_PO, Family.TREE_PRED):
        if 'tree' not in obj:
            raise InputError("missing tree", field="tree")
        return Document(fam, parse_tree(obj['tree']))
    if fam == Family.NESTED_EQ:
        arity = _nat(obj.get('arity'), "arity", minimum=1)
        if 'tree' not in obj:
            raise InputError("missing tree", field="tree")
        return Document(fam, NestedEqPres(arity, tree=parse_tree(obj['tree'])))
    raise InputError(f"family {fam.value} needs an explicit structure",
                     field="structure")


def read_presentation(path: str) -> Document:
    """Read and validate a presentation file"""
    return load_presentation(read_json(path))


def dump_presentation(doc: Document) -> dict:
    """The JSON document of a presentation, stamped with the schema version"""
    d = {'family': doc.family.value}
    if doc.structure is not None:
        d['structure'] = doc.structure.to_dict()
    elif isinstance(doc.pres, TreePres):
        d["tree"] = doc.pres.to_json()
    else:
        d.update(doc.pres.to_json())
    return stamp(d)
