import json

import POIMsparql.graph.terms as tm
import POIMsparql.syntax.canonical as cn


def serialize_graph(graph: tm.Graph) -> str:
    """
    N-Triples, one triple per line in canonical order, blanks relabelled
    `_:b0, _:b1, ...`. Isomorphic graphs give identical text.
    """
    return "".join(f"{t.n3()}\n" for t in cn.canonical_listing(graph))


def serialize_graph_json_lines(graph: tm.Graph) -> str:
    return "".join(json.dumps([term.n3() for term in t], ensure_ascii=False) + "\n"
                   for t in cn.canonical_listing(graph))


def _row_labels(rows):
    labels = {}
    for row in rows:
        for term in row:
            if term.is_blank and term not in labels:
                labels[term] = f"_:b{len(labels)}"
    return labels


def _quote(text):
    return '"' + text.replace('"', '""') + '"'


def _csv_field(text):
    if any(c in text for c in ',"\r\n'):
        return _quote(text)
    return text


def _cell(term, labels):
    if term.is_blank:
        return labels[term]
    if term.kind == tm.TermKind.LITERAL:
        return _quote(term.value)
    return _csv_field(term.value)


def serialize_multirelation(relation) -> str:
    """
    CSV with a header of column names and one line per row. IRIs are bare,
    literals quoted, blanks relabelled `_:bN`.

    The format is lossy: a literal keeps only its lexical form, dropping its
    datatype and language tag, and an IRI holding a comma, quote or line
    break is quoted like a literal. Use json-lines output to keep every term
    exact.
    """
    labels = _row_labels(relation.rows)
    lines = [",".join(_csv_field(name) for name in relation.column_names)]
    lines.extend(",".join(_cell(term, labels) for term in row) for row in relation.rows)
    return "".join(f"{line}\n" for line in lines)


def serialize_multirelation_json_lines(relation) -> str:
    labels = _row_labels(relation.rows)
    out = []
    for row in relation.rows:
        record = {name: (labels[t] if t.is_blank else t.n3()) for name, t in zip(relation.column_names, row)}
        out.append(json.dumps(record, ensure_ascii=False) + "\n")
    return "".join(out)


def serialize_matches(matches) -> str:
    """
    One JSON object per match: its 1-based index and the images of the
    blanks and variables of the query graph in canonical order.
    """
    out = []
    for i, match in enumerate(matches, 1):
        assignment = {x.n3(): y.n3() for x, y in match.assignment()}
        out.append(json.dumps({"match": i, "assignment": assignment}, ensure_ascii=False) + "\n")
    return "".join(out)
