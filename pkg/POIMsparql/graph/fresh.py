import logging
import os

import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp

logger = logging.getLogger(__name__)

DEFAULT_PREFIX = "g"
PREFIX_ENV = "POIM_BLANK_PREFIX"


def default_prefix():
    return os.environ.get(PREFIX_ENV) or DEFAULT_PREFIX


class FreshBlankGenerator(object):
    """
    Mints new blanks `_:<prefix>N` (and variables `?<prefix>N`) from a
    monotone counter, skipping reserved names.

    One generator belongs to one evaluation; it is the only stateful object
    of the library and is never shared between evaluations.
    """

    def __init__(self, prefix=None, start=0):
        self.prefix = prefix if prefix is not None else default_prefix()
        self.counter = start

    def _next(self, make, reserved):
        while True:
            term = make(f"{self.prefix}{self.counter}")
            self.counter += 1
            if term not in reserved:
                return term

    def blank(self, reserved=frozenset()):
        return self._next(tm.blank, reserved)

    def variable(self, reserved=frozenset()):
        return self._next(tm.variable, reserved)

    def fresh_like(self, term, reserved=frozenset()):
        if term.is_variable:
            return self.variable(reserved)
        return self.blank(reserved)


def fresh_renaming(terms, reserved, generator):
    """
    Map every term of `terms` (blanks or variables, taken in canonical
    order) to a new term of the same kind outside `reserved`.
    """
    reserved = set(reserved)
    renaming = {}
    for term in sorted(terms):
        new = generator.fresh_like(term, reserved)
        reserved.add(new)
        renaming[term] = new
    return renaming


def rename(graph, renaming, fixed=tm.I):
    """
    Apply a partial renaming (identity elsewhere) and return the renamed
    graph with the witnessing morphism.
    """
    mapping = {x: renaming.get(x, x) for x in graph.attributes()}
    renamed = mp.apply_map(mapping, graph)
    return renamed, mp.Morphism(graph, renamed, mapping, fixed)


def fresh_blank_rename(graph, reserved, generator=None):
    """
    Replace every blank of `graph` by a blank that is neither reserved nor
    already in the graph.

    Returns
    ----------
    (renamed graph, witnessing morphism fixing I ∪ V)
    """
    generator = generator or FreshBlankGenerator()
    blanks = graph.blanks
    renaming = fresh_renaming(blanks, set(reserved) | graph.attributes(), generator)
    if renaming:
        logger.debug("Renamed blanks %s", ", ".join(f"{x}->{y}" for x, y in renaming.items()))
    return rename(graph, renaming, tm.IV)


def rename_apart(graph, taken, generator, fixed=tm.I, avoid=frozenset()):
    """
    Rename the non-fixed attributes of `graph` that occur in `taken`,
    keeping the others. New names also stay clear of `avoid`. Used to
    separate coproduct summands.
    """
    clashing = [x for x in graph.attributes() if x not in fixed and x in taken]
    renaming = fresh_renaming(clashing, set(taken) | set(avoid) | graph.attributes(), generator)
    return rename(graph, renaming, fixed)
