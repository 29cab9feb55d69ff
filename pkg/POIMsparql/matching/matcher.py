import logging
from collections import defaultdict
from typing import List

import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp

logger = logging.getLogger(__name__)

# A match is a morphism from a query graph to a data graph fixing I.
Match = mp.Morphism


class TripleIndex(object):
    """
    Candidate lookup on a data graph by subject, predicate and object.
    """

    def __init__(self, graph):
        self.graph = graph
        self.all = sorted(graph)
        self.by_position = [defaultdict(list) for _ in range(3)]
        for triple in self.all:
            for i, term in enumerate(triple):
                self.by_position[i][term].append(triple)

    def candidates(self, pattern, binding):
        """
        Data triples compatible with the already known positions of
        `pattern`, using the most selective positional index.
        """
        best = self.all
        for i, term in enumerate(pattern):
            value = _resolve(term, binding)
            if value is None:
                continue
            found = self.by_position[i].get(value, [])
            if len(found) < len(best):
                best = found
        return best

    def count(self, pattern):
        return len(self.candidates(pattern, {}))


def _resolve(term, binding):
    if term.is_identifier:
        return term
    return binding.get(term)


def _unify(pattern, triple, binding):
    added = []
    for term, value in zip(pattern, triple):
        if term.is_identifier:
            if term != value:
                break
            continue
        bound = binding.get(term)
        if bound is None:
            binding[term] = value
            added.append(term)
        elif bound != value:
            break
    else:
        return added
    for term in added:
        del binding[term]
    return None


def enumerate_matches(query: tm.Graph, data: tm.Graph) -> List[Match]:
    """
    All matches from `query` to `data`, each once, sorted by their
    assignment vector (images of the blanks and variables of `query` in
    canonical attribute order). Blanks of the query act as variables and
    matches need not be injective.
    """
    index = TripleIndex(data)
    patterns = sorted(query, key=lambda t: (index.count(t), t))
    free = sorted(x for x in query.attributes() if not x.is_identifier)
    identifiers = {x: x for x in query.attributes() if x.is_identifier}

    assignments = []
    binding = {}

    def search(i):
        if i == len(patterns):
            assignments.append(tuple(binding[x] for x in free))
            return
        pattern = patterns[i]
        for triple in index.candidates(pattern, binding):
            added = _unify(pattern, triple, binding)
            if added is None:
                continue
            search(i + 1)
            for term in added:
                del binding[term]

    search(0)
    assignments = sorted(set(assignments))
    logger.debug("%d match(es) of a %d-triple query graph", len(assignments), len(query))

    matches = []
    for vector in assignments:
        mapping = dict(identifiers)
        mapping.update(zip(free, vector))
        matches.append(mp.Morphism(query, data, mapping, tm.I))
    return matches


def match_image(match: Match) -> tm.Graph:
    return mp.apply_morphism(match)


def restrict_to_image(match: Match) -> Match:
    """
    The same match with its target cut down to the matched subgraph.
    """
    return mp.Morphism(match.source, match_image(match), dict(match.mapping), match.fixed)
