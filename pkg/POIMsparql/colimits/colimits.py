import logging
from typing import List, NamedTuple, Tuple

from POIMsparql.errors import custom_errors as ce
import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp
import POIMsparql.graph.fresh as fr
from POIMsparql.colimits.cospan import Cospan

logger = logging.getLogger(__name__)

COPY_SEPARATOR = "·"


class PushoutResult(NamedTuple):
    graph: tm.Graph
    match: mp.Morphism
    inclusion: mp.Morphism


class ImageResult(NamedTuple):
    graph: tm.Graph
    match: mp.Morphism
    inclusion: mp.Morphism


def coproduct(parts, fixed=tm.I, generator=None, reserved=frozenset()) -> Tuple[tm.Graph, List[mp.Morphism]]:
    """
    Coproduct of `parts` in the category of graphs with morphisms fixing
    `fixed`.

    Summands are taken in order; a non-fixed attribute of a summand that
    already occurs in an earlier (renamed) summand gets a fresh name, so
    that summands only share fixed attributes and the union is the
    coproduct object. Fresh names also avoid `reserved`.

    Returns
    ----------
    (union graph, injections) with one injection per part.
    """
    generator = generator or fr.FreshBlankGenerator()
    parts = list(parts)
    avoid = set(reserved).union(*(p.attributes() for p in parts))
    taken = set()
    renamed_parts, witnesses = [], []
    for part in parts:
        renamed, witness = fr.rename_apart(part, taken, generator, fixed, avoid)
        taken |= renamed.attributes()
        avoid |= renamed.attributes()
        renamed_parts.append(renamed)
        witnesses.append(witness)
    total = tm.union(renamed_parts)
    injections = [mp.Morphism(part, total, dict(w.mapping), fixed)
                  for part, w in zip(parts, witnesses)]
    return total, injections


def _copy_name(term, i, used):
    candidate = tm.Term(term.kind, f"{term.value}{COPY_SEPARATOR}{i}")
    j = 1
    while candidate in used:
        candidate = tm.Term(term.kind, f"{term.value}{COPY_SEPARATOR}{i}{COPY_SEPARATOR}{j}")
        j += 1
    return candidate


def replicate(rule: Cospan, k: int):
    """
    k copies of `rule` with the blanks and variables of copy i suffixed by
    `·i`, renamed simultaneously in L, K and R.

    Returns
    ----------
    (replicated rule, list of the k copy renamings over |K|)
    """
    if k < 0:
        raise ValueError("Number of copies must be non-negative")
    used = set(rule.middle.attributes())
    renamings = []
    lefts, rights = [], []
    for i in range(1, k + 1):
        renaming = {}
        for term in sorted(rule.middle.attributes()):
            if term.is_identifier:
                continue
            renaming[term] = _copy_name(term, i, used)
            used.add(renaming[term])
        renamings.append(renaming)
        lefts.append(fr.rename(rule.left, renaming)[0])
        rights.append(fr.rename(rule.right, renaming)[0])
    return Cospan.from_sides(tm.union(lefts), tm.union(rights)), renamings


def replicate_rule(rule: Cospan, k: int) -> Cospan:
    return replicate(rule, k)[0]


def extension_renaming(left, middle, target, generator, fixed=tm.I, reserved=frozenset()):
    """
    Fresh names for the non-fixed attributes of |K| ∖ |L|, chosen outside
    |G| ∪ |K| ∪ reserved. Both the pushout and the direct image formula use
    this renaming, so they agree name for name.
    """
    extension = [x for x in middle.attributes() - left.attributes() if x not in fixed]
    avoid = target.attributes() | middle.attributes() | set(reserved)
    return fr.fresh_renaming(extension, avoid, generator)


def pushout(left_inclusion: mp.Morphism, match: mp.Morphism, generator=None,
            fixed=tm.I, reserved=frozenset()) -> PushoutResult:
    """
    Pushout of an inclusion l: L -> K along a match m: L -> G.

    The attributes of K outside L are first renamed apart from G, then
    N(x) = m(x) on |L| and N(x) = x on the rest of |K|, D = G ∪ N(K),
    n is the restriction of N and g the inclusion of G in D.
    """
    left, middle = left_inclusion.source, left_inclusion.target
    if not left.issubset(middle):
        raise ce.PreconditionError("Left leg of the rule is not an inclusion")
    if match.source != left or not mp.check_morphism(match.mapping, left, match.target, fixed):
        raise ce.PreconditionError("Match is not a morphism from the left-hand side to the data graph")
    generator = generator or fr.FreshBlankGenerator()
    data = match.target

    renaming = extension_renaming(left, middle, data, generator, fixed, reserved)
    left_terms = left.attributes()
    mapping = {x: (match.mapping[x] if x in left_terms else renaming.get(x, x))
               for x in middle.attributes()}
    pushout_graph = data | mp.apply_map(mapping, middle)
    logger.debug("Pushout adds %d triple(s) to the data graph", len(pushout_graph) - len(data))
    return PushoutResult(pushout_graph,
                         mp.Morphism(middle, pushout_graph, mapping, fixed),
                         mp.inclusion(data, pushout_graph, fixed))


def image_factorization(right_inclusion: mp.Morphism, match: mp.Morphism) -> ImageResult:
    """
    Factor n: K -> D through the image H of R ⊆ K.
    """
    right = right_inclusion.source
    terms = right.attributes()
    mapping = {x: y for x, y in match.mapping.items() if x in terms}
    image = mp.apply_map(mapping, right)
    return ImageResult(image,
                       mp.Morphism(right, image, mapping, match.fixed),
                       mp.inclusion(image, match.target, match.fixed))
