from dataclasses import dataclass, field
from enum import IntEnum
from typing import FrozenSet, Iterable, NamedTuple, Optional, Tuple


class TermKind(IntEnum):
    # Values give the canonical kind rank.
    IRI = 0
    LITERAL = 1
    BLANK = 2
    VARIABLE = 3


@dataclass(frozen=True)
class Term:
    """
    An attribute of a graph: an IRI, a literal, a blank or a variable.

    Equality is structural on the kind and the lexical parts, so literals
    are compared lexically ("1" and "01" are different terms).

    Parameters
    ----------
    kind : TermKind
        Which of the four disjoint sets the term belongs to.
    value : str
        IRI string, literal lexical form, or local name of a blank/variable.
    datatype : str, optional
        Datatype IRI of a typed literal.
    language : str, optional
        Language tag of a literal.
    """

    kind: TermKind
    value: str
    datatype: Optional[str] = None
    language: Optional[str] = None

    def sort_key(self) -> Tuple[int, str, str, str]:
        return (int(self.kind), self.value, self.datatype or "", self.language or "")

    def __lt__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @property
    def is_identifier(self) -> bool:
        return self.kind in (TermKind.IRI, TermKind.LITERAL)

    @property
    def is_blank(self) -> bool:
        return self.kind == TermKind.BLANK

    @property
    def is_variable(self) -> bool:
        return self.kind == TermKind.VARIABLE

    def n3(self) -> str:
        if self.kind == TermKind.IRI:
            return f"<{self.value}>"
        if self.kind == TermKind.BLANK:
            return f"_:{self.value}"
        if self.kind == TermKind.VARIABLE:
            return f"?{self.value}"
        lexical = f'"{escape_literal(self.value)}"'
        if self.language:
            return f"{lexical}@{self.language}"
        if self.datatype:
            return f"{lexical}^^<{self.datatype}>"
        return lexical

    def __str__(self):
        return self.n3()


def iri(value):
    return Term(TermKind.IRI, value)


def literal(value, datatype=None, language=None):
    return Term(TermKind.LITERAL, value, datatype, language)


def blank(name):
    return Term(TermKind.BLANK, name)


def variable(name):
    return Term(TermKind.VARIABLE, name)


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def escape_literal(text):
    return "".join(_ESCAPES.get(c, c) for c in text)


class Triple(NamedTuple):
    subject: Term
    predicate: Term
    object: Term

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."


class Partition(NamedTuple):
    identifiers: FrozenSet[Term]
    blanks: FrozenSet[Term]
    variables: FrozenSet[Term]


@dataclass(frozen=True)
class Graph:
    """
    A finite set of triples. Graphs are immutable values; every operation
    returns a new graph.
    """

    triples: FrozenSet[Triple] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.triples, frozenset):
            object.__setattr__(self, "triples", frozenset(self.triples))

    @classmethod
    def of(cls, *triples):
        return cls(frozenset(Triple(*t) for t in triples))

    def __iter__(self):
        return iter(self.triples)

    def __len__(self):
        return len(self.triples)

    def __contains__(self, triple):
        return triple in self.triples

    def __or__(self, other):
        return Graph(self.triples | other.triples)

    def __sub__(self, other):
        return Graph(self.triples - other.triples)

    def issubset(self, other) -> bool:
        return self.triples <= other.triples

    def sorted(self):
        return sorted(self.triples)

    def attributes(self) -> FrozenSet[Term]:
        return frozenset(term for triple in self.triples for term in triple)

    def partition(self) -> Partition:
        return partition_terms(self.attributes())

    @property
    def blanks(self) -> FrozenSet[Term]:
        return self.partition().blanks

    @property
    def variables(self) -> FrozenSet[Term]:
        return self.partition().variables

    @property
    def is_data_graph(self) -> bool:
        return not self.variables

    def __str__(self):
        return "\n".join(t.n3() for t in self.sorted())


EMPTY = Graph()


def partition_terms(terms: Iterable[Term]) -> Partition:
    terms = list(terms)
    return Partition(frozenset(t for t in terms if t.is_identifier),
                     frozenset(t for t in terms if t.is_blank),
                     frozenset(t for t in terms if t.is_variable))


def attributes(graph: Graph) -> Tuple[FrozenSet[Term], Partition]:
    """
    Return |graph| together with its split into identifiers, blanks and
    variables.
    """
    terms = graph.attributes()
    return terms, partition_terms(terms)


def union(graphs: Iterable[Graph]) -> Graph:
    return Graph(frozenset().union(*(g.triples for g in graphs)))


@dataclass(frozen=True)
class FixedSet:
    """
    A subset C of the attributes that morphisms must leave untouched.

    Identifiers are always fixed. Blanks and variables are fixed either
    wholesale or, for blanks, through an explicit finite set (the set
    I ∪ |G|_B used to merge local results).
    """

    fixes_all_blanks: bool = False
    fixes_all_variables: bool = False
    extra_fixed_blanks: FrozenSet[Term] = frozenset()

    fixes_identifiers = True

    def __contains__(self, term: Term) -> bool:
        if term.is_identifier:
            return True
        if term.is_blank:
            return self.fixes_all_blanks or term in self.extra_fixed_blanks
        return self.fixes_all_variables

    @classmethod
    def ib_of(cls, graph: Graph) -> "FixedSet":
        return cls(extra_fixed_blanks=graph.blanks)

    @classmethod
    def from_flag(cls, flag: str) -> "FixedSet":
        try:
            return NAMED_FIXED_SETS[flag.upper()]
        except KeyError:
            raise ValueError(f"Unknown fixed set {flag}. Use one of {', '.join(NAMED_FIXED_SETS)}")


I = FixedSet()
IB = FixedSet(fixes_all_blanks=True)
IV = FixedSet(fixes_all_variables=True)
IBV = FixedSet(fixes_all_blanks=True, fixes_all_variables=True)

NAMED_FIXED_SETS = {"I": I, "IB": IB, "IV": IV, "IBV": IBV}
