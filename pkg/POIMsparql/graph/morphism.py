from dataclasses import dataclass, field
from typing import Dict, Mapping

from POIMsparql.errors import custom_errors as ce
import POIMsparql.graph.terms as tm


@dataclass(frozen=True)
class Morphism:
    """
    A graph morphism source -> target induced by an attribute map that
    fixes every attribute of the source lying in `fixed`.

    The attribute map is stored as given; `check` tells whether it really
    is a morphism.
    """

    source: tm.Graph
    target: tm.Graph
    mapping: Mapping[tm.Term, tm.Term] = field(hash=False)
    fixed: tm.FixedSet = tm.I

    def check(self) -> bool:
        return check_morphism(self.mapping, self.source, self.target, self.fixed)

    def then(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def inverse(self) -> "Morphism":
        inverted = {y: x for x, y in self.mapping.items()}
        if len(inverted) != len(self.mapping):
            raise ce.PreconditionError("Only injective morphisms can be inverted")
        return Morphism(self.target, self.source, inverted, self.fixed)

    def assignment(self):
        """
        The non-fixed part of the map, as (attribute, image) pairs in
        canonical attribute order.
        """
        return [(x, self.mapping[x]) for x in sorted(self.mapping) if x not in self.fixed]

    def is_identity(self) -> bool:
        return all(x == y for x, y in self.mapping.items())


def apply_map(mapping: Mapping[tm.Term, tm.Term], graph: tm.Graph) -> tm.Graph:
    try:
        return tm.Graph(frozenset(tm.Triple(mapping[s], mapping[p], mapping[o])
                                  for s, p, o in graph))
    except KeyError as exc:
        raise ce.TotalityError(f"Attribute {exc.args[0]} has no image")


def apply_morphism(morphism: Morphism) -> tm.Graph:
    """
    Image of the source graph. Triples may merge under a non-injective map.
    """
    return apply_map(morphism.mapping, morphism.source)


def check_morphism(mapping, source, target, fixed) -> bool:
    for x in source.attributes():
        if x not in mapping:
            return False
        if x in fixed and mapping[x] != x:
            return False
    return all(tm.Triple(mapping[s], mapping[p], mapping[o]) in target
               for s, p, o in source)


def identity(graph: tm.Graph, fixed=tm.IBV) -> Morphism:
    return Morphism(graph, graph, {x: x for x in graph.attributes()}, fixed)


def inclusion(subgraph: tm.Graph, graph: tm.Graph, fixed=tm.IBV) -> Morphism:
    return Morphism(subgraph, graph, {x: x for x in subgraph.attributes()}, fixed)


def compose(first: Morphism, second: Morphism) -> Morphism:
    """
    second ∘ first. Attributes in the image of `first` that `second` does
    not list are taken to be fixed by `second`.
    """
    mapping: Dict[tm.Term, tm.Term] = {}
    for x, y in first.mapping.items():
        mapping[x] = second.mapping.get(y, y)
    return Morphism(first.source, second.target, mapping, first.fixed)
