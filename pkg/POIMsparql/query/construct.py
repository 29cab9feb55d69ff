import logging
from dataclasses import dataclass

import POIMsparql.helpers as hl
import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp
import POIMsparql.graph.fresh as fr
import POIMsparql.matching.matcher as mt
import POIMsparql.colimits.colimits as cl
import POIMsparql.colimits.poim as pm
from POIMsparql.colimits.cospan import Cospan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructQuery:
    """
    Basic construct query (L, R) with |L|_B ∩ |R|_B = ∅ and |R|_V ⊆ |L|_V,
    together with its rule L ⊆ K = L ∪ R ⊇ R.
    """

    lhs: tm.Graph
    rhs: tm.Graph
    rule: Cospan


def normalize_construct(lhs: tm.Graph, rhs: tm.Graph, generator=None) -> ConstructQuery:
    """
    Build a construct query from two query graphs, repairing rather than
    rejecting them: blanks of R shared with L are renamed, and triples of R
    with a variable that L does not bind are dropped.
    """
    generator = generator or fr.FreshBlankGenerator()
    shared = lhs.blanks & rhs.blanks
    if shared:
        renaming = fr.fresh_renaming(shared, lhs.attributes() | rhs.attributes(), generator)
        rhs = fr.rename(rhs, renaming)[0]
        logger.debug("Renamed %d blank(s) of the template apart from the pattern", len(renaming))

    unbound = rhs.variables - lhs.variables
    if unbound:
        kept = tm.Graph(frozenset(t for t in rhs if not unbound.intersection(t)))
        logger.warning("Dropped %d template triple(s) with unbound variable(s) %s",
                       len(rhs) - len(kept), ", ".join(str(v) for v in sorted(unbound)))
        rhs = kept
    return ConstructQuery(lhs, rhs, Cospan.from_sides(lhs, rhs))


def eval_construct_direct(query: ConstructQuery, data: tm.Graph, generator=None) -> tm.Graph:
    """
    Union over the matches m_1, ..., m_k of the copies H_i of R where each
    variable x is replaced by m_i(x) and each blank by a new blank, one per
    (blank, match) pair.
    """
    generator = generator or fr.FreshBlankGenerator()
    matches = mt.enumerate_matches(query.lhs, data)
    avoid = set(data.attributes() | query.rule.middle.attributes())
    left_terms = query.lhs.attributes()
    template_blanks = [x for x in query.rhs.blanks if x not in left_terms]
    result = set()
    for match in matches:
        renaming = fr.fresh_renaming(template_blanks, avoid, generator)
        avoid.update(renaming.values())
        mapping = {x: (match.mapping[x] if x in left_terms else renaming.get(x, x))
                   for x in query.rhs.attributes()}
        result.update(mp.apply_map(mapping, query.rhs))
    return tm.Graph(frozenset(result))


def eval_construct_high(query: ConstructQuery, data: tm.Graph, generator=None) -> tm.Graph:
    """
    One POIM transformation of the k-fold rule along the match kL -> G that
    agrees with m_i on the i-th copy of L.
    """
    generator = generator or fr.FreshBlankGenerator()
    matches = mt.enumerate_matches(query.lhs, data)
    rule, renamings = cl.replicate(query.rule, len(matches))
    mapping = {x: x for x in rule.left.attributes() if x.is_identifier}
    for match, renaming in zip(matches, renamings):
        for x in query.lhs.attributes():
            mapping[renaming.get(x, x)] = match.mapping[x]
    merged = mp.Morphism(rule.left, data, mapping, tm.I)
    logger.debug("High-level calculus on a %d-fold rule", len(matches))
    return pm.poim(rule, merged, generator).result_graph


def local_result(match, rule, reserved, prefix):
    """
    POIM transformation of one match restricted to its image. Blanks coming
    from R avoid `reserved`.
    """
    restricted = mt.restrict_to_image(match)
    return pm.poim(rule, restricted, fr.FreshBlankGenerator(prefix), reserved).result_graph


def eval_construct_low(query: ConstructQuery, data: tm.Graph, generator=None, ncpus=1) -> tm.Graph:
    """
    Local results H_i, one per match, glued by a coproduct that fixes the
    identifiers and the blanks of the data graph.
    """
    generator = generator or fr.FreshBlankGenerator()
    matches = mt.enumerate_matches(query.lhs, data)
    reserved = data.attributes()
    local_results = hl.parallelize(local_result, matches, ncpus, rule=query.rule,
                                   reserved=reserved, prefix=generator.prefix)
    result, _ = cl.coproduct(local_results, tm.FixedSet.ib_of(data), generator, reserved)
    return result


def is_well_formed(triple) -> bool:
    subject, predicate, obj = triple
    return (subject.kind in (tm.TermKind.IRI, tm.TermKind.BLANK)
            and predicate.kind == tm.TermKind.IRI
            and obj.kind != tm.TermKind.VARIABLE)


def filter_well_formed(graph: tm.Graph) -> tm.Graph:
    return tm.Graph(frozenset(t for t in graph if is_well_formed(t)))


def eliminate_query_blanks(query: ConstructQuery, generator=None) -> ConstructQuery:
    """
    Replace every blank of L by a new variable.
    """
    generator = generator or fr.FreshBlankGenerator()
    renaming = {}
    reserved = set(query.rule.middle.attributes())
    for term in sorted(query.lhs.blanks):
        renaming[term] = generator.variable(reserved)
        reserved.add(renaming[term])
    return normalize_construct(fr.rename(query.lhs, renaming)[0], query.rhs, generator)


def answers_over_rdf(query: ConstructQuery, data: tm.Graph, generator=None) -> tm.Graph:
    """
    The SPARQL answer: the well-formed triples of the query result.
    """
    generator = generator or fr.FreshBlankGenerator()
    if query.lhs.blanks:
        query = eliminate_query_blanks(query, generator)
    return filter_well_formed(eval_construct_direct(query, data, generator))


EVALUATORS = {"direct": eval_construct_direct,
              "high": eval_construct_high,
              "low": eval_construct_low}


def evaluate(query, data, mode="direct", generator=None, strict_rdf=False, ncpus=1):
    generator = generator or fr.FreshBlankGenerator()
    if mode == "low":
        result = eval_construct_low(query, data, generator, ncpus)
    else:
        result = EVALUATORS[mode](query, data, generator)
    if strict_rdf:
        result = filter_well_formed(result)
    return result
