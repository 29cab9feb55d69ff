from dataclasses import dataclass
from typing import Tuple

import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp
import POIMsparql.graph.fresh as fr
import POIMsparql.colimits.colimits as cl
from POIMsparql.colimits.cospan import Cospan


@dataclass(frozen=True)
class PoimTrace:
    """
    Every object and arrow of one POIM transformation:

        L --l--> K <--r-- R
        |m       |n       |p
        G --g--> D <--h-- H
    """

    rule: Cospan
    input_match: mp.Morphism
    pushout_graph: tm.Graph
    pushout_match: mp.Morphism
    pushout_inclusion: mp.Morphism
    result_graph: tm.Graph
    result_match: mp.Morphism
    result_inclusion: mp.Morphism

    @property
    def data_graph(self):
        return self.input_match.target


def poim(rule: Cospan, match: mp.Morphism, generator=None, reserved=frozenset()) -> PoimTrace:
    """
    Pushout along the left leg followed by image factorization along the
    right leg. The result is one representative of its isomorphism class;
    new blanks come from `generator`.
    """
    generator = generator or fr.FreshBlankGenerator()
    pushout = cl.pushout(rule.left_inclusion, match, generator, tm.I, reserved)
    image = cl.image_factorization(rule.right_inclusion, pushout.match)
    return PoimTrace(rule, match,
                     pushout.graph, pushout.match, pushout.inclusion,
                     image.graph, image.match, image.inclusion)


def poim_shortcut(rule: Cospan, match: mp.Morphism, generator=None,
                  reserved=frozenset()) -> Tuple[tm.Graph, mp.Morphism]:
    """
    Result of `poim` computed directly: H = P(R) with P = m on the
    attributes R shares with L and P = the fresh renaming elsewhere.
    """
    generator = generator or fr.FreshBlankGenerator()
    renaming = cl.extension_renaming(rule.left, rule.middle, match.target, generator, tm.I, reserved)
    left_terms = rule.left.attributes()
    mapping = {x: (match.mapping[x] if x in left_terms else renaming.get(x, x))
               for x in rule.right.attributes()}
    result = mp.apply_map(mapping, rule.right)
    return result, mp.Morphism(rule.right, result, mapping, tm.I)
