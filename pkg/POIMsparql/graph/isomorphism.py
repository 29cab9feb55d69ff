from collections import Counter
from typing import Optional

import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp

_SELF = ("S",)
_FREE = ("V",)


def _shape(triple, term, fixed):
    return tuple(("F",) + t.sort_key() if t in fixed else (_SELF if t == term else _FREE)
                 for t in triple)


def signatures(graph, fixed):
    """
    Degree signature of every non-fixed attribute: the multiset of shapes of
    the triples it occurs in. A shape keeps the fixed attributes, marks the
    attribute itself and blurs every other non-fixed attribute.
    """
    signature = {}
    for triple in graph:
        for term in set(triple):
            if term in fixed:
                continue
            signature.setdefault(term, Counter())[_shape(triple, term, fixed)] += 1
    return {term: tuple(sorted(c.items())) for term, c in signature.items()}


def iso_check(g1: tm.Graph, g2: tm.Graph, fixed: tm.FixedSet) -> Optional[mp.Morphism]:
    """
    Look for an isomorphism g1 -> g2 fixing `fixed`.

    Parameters
    ----------
    g1, g2 : Graph
        Graphs to compare.
    fixed : FixedSet
        Attributes every isomorphism must leave untouched.

    Returns
    ----------
    witness : Morphism or None
        The least witness in canonical attribute order (non-fixed attributes
        of g1 assigned in canonical order, candidates tried in canonical
        order), or None when the graphs are not isomorphic.
    """
    if len(g1) != len(g2):
        return None
    attrs1, attrs2 = g1.attributes(), g2.attributes()
    fixed1 = {x for x in attrs1 if x in fixed}
    if fixed1 != {x for x in attrs2 if x in fixed}:
        return None
    free1 = sorted(attrs1 - fixed1)
    free2 = sorted(attrs2 - fixed1)
    if len(free1) != len(free2):
        return None

    sig1, sig2 = signatures(g1, fixed), signatures(g2, fixed)
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None
    candidates = {x: [y for y in free2 if sig2[y] == sig1[x]] for x in free1}

    position = {x: i for i, x in enumerate(free1)}
    checks = [[] for _ in free1]
    for triple in g1:
        free_positions = [position[t] for t in triple if t in position]
        if free_positions:
            checks[max(free_positions)].append(triple)
        elif triple not in g2:
            return None

    mapping = {x: x for x in fixed1}
    used = set()
    targets = g2.triples

    def image(triple):
        return tm.Triple(*(mapping[t] for t in triple))

    def extend(i):
        if i == len(free1):
            return True
        x = free1[i]
        for y in candidates[x]:
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            if all(image(t) in targets for t in checks[i]) and extend(i + 1):
                return True
            used.discard(y)
            del mapping[x]
        return False

    if not extend(0):
        return None
    return mp.Morphism(g1, g2, dict(mapping), fixed)


def is_isomorphic(g1, g2, fixed) -> bool:
    return iso_check(g1, g2, fixed) is not None
