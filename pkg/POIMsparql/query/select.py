import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Tuple

from POIMsparql.errors import custom_errors as ce
import POIMsparql.helpers as hl
import POIMsparql.graph.terms as tm
import POIMsparql.graph.fresh as fr
import POIMsparql.matching.matcher as mt
import POIMsparql.query.construct as cq

logger = logging.getLogger(__name__)

COLUMN_NAMESPACE = "urn:poim:col:"
LINE_BLANK = tm.blank("r")


def column_iri(name, namespace=COLUMN_NAMESPACE):
    return tm.iri(f"{namespace}{name}")


@dataclass(frozen=True)
class SelectQuery:
    """
    Basic select query (L, S): a query graph and the ordered distinct
    variables to project on, each occurring in L.
    """

    lhs: tm.Graph
    columns: Tuple[tm.Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        _check_distinct(self.columns)
        unbound = [c for c in self.columns if c not in self.lhs.variables]
        if unbound:
            raise ce.UnboundColumnError(
                f"Selected variable(s) {', '.join(str(c) for c in unbound)} do not occur in the pattern")

    @property
    def column_names(self):
        return tuple(c.value for c in self.columns)


@dataclass(frozen=True)
class Multirelation:
    """
    A bag of rows over I ∪ B. Rows are kept in canonical order.
    """

    column_names: Tuple[str, ...]
    rows: Tuple[Tuple[tm.Term, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "column_names", tuple(self.column_names))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in hl.canonical_rows(self.rows)))
        for row in self.rows:
            if len(row) != len(self.column_names):
                raise ValueError(f"Row {row} does not have {len(self.column_names)} entries")
            if any(t.is_variable for t in row):
                raise ValueError(f"Row {row} contains a variable")

    def counts(self) -> Counter:
        return Counter(self.rows)

    def __len__(self):
        return len(self.rows)


def _check_distinct(columns):
    repeated = [c for c, n in Counter(columns).items() if n > 1]
    if repeated:
        raise ce.DuplicateColumnError(f"Repeated column(s) {', '.join(str(c) for c in repeated)}")


def gr_of(columns, namespace=COLUMN_NAMESPACE) -> tm.Graph:
    """
    Relational query graph of `columns`: one triple (_:r, s_j, ?s_j) per
    variable ?s_j, all with the same blank subject.
    """
    columns = tuple(columns)
    _check_distinct(columns)
    return tm.Graph(frozenset(tm.Triple(LINE_BLANK, column_iri(c.value, namespace), c)
                              for c in columns))


def _lines(graph):
    lines = defaultdict(dict)
    for s, p, o in graph:
        lines[s].setdefault(p, []).append(o)
    return lines


def is_relational(graph: tm.Graph, column_names, namespace=COLUMN_NAMESPACE) -> bool:
    predicates = {column_iri(name, namespace) for name in column_names}
    if len(predicates) != len(list(column_names)):
        return False
    objects = {o for _, _, o in graph}
    for line, cells in _lines(graph).items():
        if not line.is_blank or line in objects:
            return False
        if set(cells) != predicates or any(len(v) != 1 for v in cells.values()):
            return False
        if any(v[0].is_variable for v in cells.values()):
            return False
    return True


def rel_of(graph: tm.Graph, column_names, namespace=COLUMN_NAMESPACE) -> Multirelation:
    if not is_relational(graph, column_names, namespace):
        raise ce.NotRelationalError("Graph is not relational on the given columns")
    predicates = [column_iri(name, namespace) for name in column_names]
    rows = [tuple(cells[p][0] for p in predicates) for cells in _lines(graph).values()]
    return Multirelation(tuple(column_names), tuple(rows))


def eval_select(query: SelectQuery, data: tm.Graph, generator=None) -> Multirelation:
    """
    Run the construct query (L, Gr(S)) and read the result as a table, one
    row per line blank.
    """
    generator = generator or fr.FreshBlankGenerator()
    if not query.columns:
        k = len(mt.enumerate_matches(query.lhs, data))
        return Multirelation((), ((),) * k)
    construct = cq.normalize_construct(query.lhs, gr_of(query.columns), generator)
    result = cq.eval_construct_direct(construct, data, generator)
    logger.debug("Select query produced %d line triple(s)", len(result))
    return rel_of(result, query.column_names)
