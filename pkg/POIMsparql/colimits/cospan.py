from dataclasses import dataclass

import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp


@dataclass(frozen=True)
class Cospan:
    """
    Transformation rule L -> K <- R with K = L ∪ R and both legs inclusions.
    """

    left: tm.Graph
    middle: tm.Graph
    right: tm.Graph

    @classmethod
    def from_sides(cls, left, right):
        return cls(left, left | right, right)

    @property
    def left_inclusion(self) -> mp.Morphism:
        return mp.inclusion(self.left, self.middle)

    @property
    def right_inclusion(self) -> mp.Morphism:
        return mp.inclusion(self.right, self.middle)

    def is_valid(self) -> bool:
        return self.middle == self.left | self.right
