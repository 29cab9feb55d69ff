import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from POIMsparql.errors import custom_errors as ce
import POIMsparql.graph.terms as tm
import POIMsparql.query.construct as cq
import POIMsparql.query.select as sq
from POIMsparql.syntax.tokenizer import tokenize, unescape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParsedDocument:
    prefixes: Dict[str, str]
    graph: tm.Graph
    source_spans: Dict[tm.Triple, Tuple[int, int]] = field(default_factory=dict, hash=False)


class Parser(object):
    """
    Recursive descent parser shared by data documents and queries.

    Triple syntax: `;` predicate-object lists, `,` object lists, IRIs in
    `<>`, prefixed names, plain, typed and language-tagged string literals,
    `_:name` blanks and, in queries only, `?name` variables. Any term kind
    is accepted in any position.
    """

    def __init__(self, text, prefixes=None, allow_variables=False):
        self.tokens = list(tokenize(text))
        self.index = 0
        self.prefixes = dict(prefixes or {})
        self.allow_variables = allow_variables
        self.source_spans = {}

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        if token.kind != "EOF":
            self.index += 1
        return token

    def error(self, message, token=None, error_class=ce.ParseError):
        token = token or self.current
        return error_class(message, token.line, token.column)

    def at(self, kind, text=None):
        token = self.current
        if token.kind != kind:
            return False
        if text is None:
            return True
        return token.text.upper() == text if kind == "KEYWORD" else token.text == text

    def expect(self, kind, text=None):
        if not self.at(kind, text):
            found = self.current.text or "end of input"
            raise self.error(f"Expected {text or kind}, found {found}")
        return self.advance()

    # Directives

    def prefix_directive(self):
        turtle = self.at("DIRECTIVE")
        self.advance()
        name = self.expect("PNAME")
        if not name.text.endswith(":"):
            raise self.error(f"Malformed prefix name {name.text}", name)
        namespace = self.expect("IRIREF")
        if turtle:
            self.expect("PUNCT", ".")
        self.prefixes[name.text[:-1]] = namespace.text[1:-1]

    def at_directive(self):
        return self.at("DIRECTIVE") or self.at("KEYWORD", "PREFIX")

    # Terms

    def term(self):
        token = self.advance()
        if token.kind == "IRIREF":
            return tm.iri(token.text[1:-1])
        if token.kind == "PNAME":
            return tm.iri(self.expand(token))
        if token.kind == "BLANK":
            return tm.blank(token.text[2:])
        if token.kind == "VAR":
            if not self.allow_variables:
                raise self.error(f"Variable {token.text} in a data graph", token, ce.VariableInDataError)
            return tm.variable(token.text[1:])
        if token.kind == "STRING":
            return self.literal(token)
        found = token.text or "end of input"
        raise self.error(f"Expected a term, found {found}", token)

    def expand(self, token):
        prefix, local = token.text.split(":", 1)
        if prefix not in self.prefixes:
            raise self.error(f"Undefined prefix {prefix}:", token, ce.UndefinedPrefixError)
        return self.prefixes[prefix] + local

    def literal(self, token):
        lexical = unescape(token.text[1:-1], token.line, token.column)
        if self.at("LANGTAG"):
            return tm.literal(lexical, language=self.advance().text[1:])
        if self.at("DATATYPE"):
            self.advance()
            datatype = self.advance()
            if datatype.kind == "IRIREF":
                return tm.literal(lexical, datatype=datatype.text[1:-1])
            if datatype.kind == "PNAME":
                return tm.literal(lexical, datatype=self.expand(datatype))
            raise self.error("Expected a datatype IRI", datatype)
        return tm.literal(lexical)

    # Triples

    def triples(self, out):
        first = self.current
        subject = self.term()
        while True:
            predicate = self.term()
            while True:
                triple = tm.Triple(subject, predicate, self.term())
                out.add(triple)
                self.source_spans.setdefault(triple, (first.line, first.column))
                if not self.at("PUNCT", ","):
                    break
                self.advance()
            if not self.at("PUNCT", ";"):
                return
            while self.at("PUNCT", ";"):
                self.advance()
            if self.at("PUNCT"):
                return

    def block(self):
        """
        Triples between braces, separated by `.`, the last `.` optional.
        """
        self.expect("PUNCT", "{")
        out = set()
        while not self.at("PUNCT", "}"):
            self.triples(out)
            if self.at("PUNCT", "."):
                self.advance()
            elif not self.at("PUNCT", "}"):
                raise self.error(f"Expected . or }}, found {self.current.text or 'end of input'}")
        self.advance()
        return tm.Graph(frozenset(out))

    # Documents

    def data_document(self):
        out = set()
        while not self.at("EOF"):
            if self.at_directive():
                self.prefix_directive()
                continue
            self.triples(out)
            self.expect("PUNCT", ".")
        return ParsedDocument(dict(self.prefixes), tm.Graph(frozenset(out)), dict(self.source_spans))

    def query_document(self):
        while self.at_directive():
            self.prefix_directive()
        if self.at("KEYWORD", "CONSTRUCT"):
            self.advance()
            template = self.block()
            self.expect("KEYWORD", "WHERE")
            pattern = self.block()
            self.expect("EOF")
            return cq.normalize_construct(pattern, template)
        if self.at("KEYWORD", "SELECT"):
            self.advance()
            columns = []
            while self.at("VAR"):
                columns.append(tm.variable(self.advance().text[1:]))
            self.expect("KEYWORD", "WHERE")
            pattern = self.block()
            self.expect("EOF")
            return sq.SelectQuery(pattern, tuple(columns))
        raise self.error(f"Expected CONSTRUCT or SELECT, found {self.current.text or 'end of input'}")


def parse_data(text: str, prefixes=None) -> ParsedDocument:
    """
    Parse a data document in the Turtle subset. Variables are rejected.
    """
    document = Parser(text, prefixes).data_document()
    logger.debug("Parsed %d data triple(s)", len(document.graph))
    return document


def parse_query(text: str, prefixes=None):
    """
    Parse `CONSTRUCT { ... } WHERE { ... }` or `SELECT ?v ... WHERE { ... }`.

    Returns
    ----------
    query : ConstructQuery (normalized) or SelectQuery
    """
    return Parser(text, prefixes, allow_variables=True).query_document()
