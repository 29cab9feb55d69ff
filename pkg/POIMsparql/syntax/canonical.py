"""
Canonical blank labelling.

Blank colours are refined from the shapes of the triples each blank occurs
in until the partition is stable; remaining ties are broken by
individualising one blank of the first tied class and keeping the branch
whose listing is smallest. Graphs that are isomorphic in D_I get the same
listing.
"""
import hashlib
from dataclasses import dataclass
from typing import Dict

import POIMsparql.graph.terms as tm

_INITIAL = "blank"


def _digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _describe(term, colors, me):
    if term == me:
        return "@"
    if term.is_blank:
        return "_:" + colors[term]
    return term.n3()


def refine(graph, colors):
    occurrences = {b: [] for b in colors}
    for triple in graph:
        for term in set(triple):
            if term in occurrences:
                occurrences[term].append(triple)
    classes = len(set(colors.values()))
    while True:
        refined = {}
        for b, triples in occurrences.items():
            shapes = sorted(" ".join(_describe(t, colors, b) for t in triple) for triple in triples)
            refined[b] = _digest(colors[b] + "|" + "|".join(shapes))
        count = len(set(refined.values()))
        colors = refined
        if count == classes:
            return colors
        classes = count


def sort_key(triple, colors):
    return tuple((int(t.kind), colors[t], "", "") if t.is_blank else t.sort_key() for t in triple)


def listing(graph, colors):
    """
    Triples in canonical order with blanks relabelled `b0, b1, ...` in order
    of first appearance.
    """
    return _relabel(graph, colors)[0]


def _relabel(graph, colors):
    ordered = sorted(graph, key=lambda t: sort_key(t, colors))
    labels = {}
    lines = []
    for triple in ordered:
        terms = []
        for term in triple:
            if term.is_blank:
                if term not in labels:
                    labels[term] = tm.blank(f"b{len(labels)}")
                term = labels[term]
            terms.append(term)
        lines.append(tm.Triple(*terms))
    return lines, labels


@dataclass(frozen=True)
class Leaf:
    """
    A discrete colouring reached by the search, with its listing.
    """

    colors: Dict[tm.Term, str]
    text: str
    labels: Dict[tm.Term, tm.Term]

    @classmethod
    def of(cls, graph, colors):
        lines, labels = _relabel(graph, colors)
        return cls(colors, "\n".join(t.n3() for t in lines), labels)

    def automorphism_to(self, other):
        """
        Blank map sending each blank here to the blank with the same label
        in `other`.
        """
        by_label = {label: b for b, label in other.labels.items()}
        return {b: by_label[label] for b, label in self.labels.items()}


def _first_tied_cell(colors):
    classes = {}
    for b, color in colors.items():
        classes.setdefault(color, []).append(b)
    tied = sorted(c for c, members in classes.items() if len(members) > 1)
    return sorted(classes[tied[0]]) if tied else None


def _is_automorphism(graph, mapping):
    return all(tm.Triple(*(mapping.get(t, t) for t in triple)) in graph for triple in graph)


class CanonicalSearch:
    """
    Individualise and refine search for the smallest listing.

    Whenever two leaves give the same listing their label correspondence is
    an automorphism. At a node reached by individualising `path`, candidates
    in the orbit of an explored candidate under the recorded automorphisms
    fixing `path` pointwise are skipped: their subtrees are images of an
    explored one.
    """

    def __init__(self, graph):
        self.graph = graph
        self.first = None
        self.best = None
        self.automorphisms = []

    def run(self, colors):
        self._explore(colors, ())
        return self.best.colors

    def _individualise(self, colors, b):
        individualised = dict(colors)
        individualised[b] = _digest(colors[b] + "*")
        return refine(self.graph, individualised)

    def _leftmost(self, colors):
        cell = _first_tied_cell(colors)
        while cell is not None:
            colors = self._individualise(colors, cell[0])
            cell = _first_tied_cell(colors)
        return Leaf.of(self.graph, colors)

    def _record(self, reference, leaf):
        if reference is None or reference.text != leaf.text:
            return
        mapping = reference.automorphism_to(leaf)
        if any(x != y for x, y in mapping.items()) and _is_automorphism(self.graph, mapping):
            self.automorphisms.append(mapping)

    def _visit(self, leaf):
        self._record(self.first, leaf)
        self._record(self.best, leaf)
        if self.first is None:
            self.first = leaf
        if self.best is None or leaf.text < self.best.text:
            self.best = leaf

    def _orbit_of_explored(self, b, explored, path):
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for mapping in self.automorphisms:
            if any(mapping.get(p, p) != p for p in path):
                continue
            for x, y in mapping.items():
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        return find(b) in {find(e) for e in explored}

    def _explore(self, colors, path):
        """
        Visit the leaves below `colors` and return the leftmost one.
        """
        cell = _first_tied_cell(colors)
        if cell is None:
            leaf = Leaf.of(self.graph, colors)
            self._visit(leaf)
            return leaf
        explored = []
        leftmost = None
        for b in cell:
            if explored and self._orbit_of_explored(b, explored, path):
                continue
            child = self._individualise(colors, b)
            if explored:
                candidate = self._leftmost(child)
                for reference in (leftmost, self.first, self.best):
                    self._record(reference, candidate)
                if self._orbit_of_explored(b, explored, path):
                    continue
            leaf = self._explore(child, path + (b,))
            if leftmost is None:
                leftmost = leaf
            explored.append(b)
        return leftmost


def canonical_colors(graph: tm.Graph):
    """
    Pairwise distinct, isomorphism-invariant colours for the blanks of
    `graph`.
    """
    colors = {b: _INITIAL for b in graph.blanks}
    return CanonicalSearch(graph).run(refine(graph, colors))


def canonical_listing(graph: tm.Graph):
    return listing(graph, canonical_colors(graph))


def canonical_form(graph: tm.Graph) -> tm.Graph:
    return tm.Graph(frozenset(canonical_listing(graph)))
