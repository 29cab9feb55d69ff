import pytest
import itertools
from hypothesis import given
from hypothesis import strategies as st
import POIMsparql.graph.terms as tm
import POIMsparql.graph.morphism as mp
import POIMsparql.graph.isomorphism as iso
import POIMsparql.graph.fresh as fr
from POIMsparql.errors import custom_errors as ce
from POIMsparql.data.prefixes import WELL_KNOWN_PREFIXES as P
from tests import strategies as strat


def ex(name):
    return tm.iri(P["ex"] + name)


def foaf(name):
    return tm.iri(P["foaf"] + name)


ALICE, LISSIE = tm.literal("Alice"), tm.literal("Lissie")
X, NAME = tm.variable("x"), tm.variable("name")


def test_term_order():
    terms = [tm.variable("a"), tm.blank("a"), tm.literal("a"), tm.iri("a"), tm.literal("a", language="en")]
    assert sorted(terms) == [tm.iri("a"), tm.literal("a"), tm.literal("a", language="en"),
                             tm.blank("a"), tm.variable("a")]


def test_literals_are_lexical():
    assert tm.literal("1") != tm.literal("01")
    assert tm.literal("1", datatype=P["xsd"] + "integer") != tm.literal("1")


def test_attributes_empty():
    terms, partition = tm.attributes(tm.EMPTY)
    assert terms == frozenset()
    assert partition == (frozenset(), frozenset(), frozenset())


def test_attributes_data_graph(data_graph):
    g = data_graph('ex:a foaf:name "Alice" ; foaf:nick "Lissie" .')
    terms, partition = tm.attributes(g)
    assert partition.identifiers == {ex("a"), foaf("name"), ALICE, foaf("nick"), LISSIE}
    assert partition.blanks == frozenset() and partition.variables == frozenset()
    assert terms == partition.identifiers


def test_attributes_query_graph(query_graph):
    terms, partition = tm.attributes(query_graph("?x foaf:name ?name"))
    assert partition.identifiers == {foaf("name")}
    assert partition.variables == {X, NAME}
    assert partition.blanks == frozenset()


def test_apply_identity(data_graph):
    g = data_graph('ex:a foaf:name "Alice" ; foaf:nick "Lissie" .')
    assert mp.apply_morphism(mp.identity(g)) == g


def test_apply_match(query_graph, data_graph):
    source = query_graph("?x foaf:name ?name")
    mapping = {X: ex("a"), NAME: ALICE, foaf("name"): foaf("name")}
    image = mp.apply_morphism(mp.Morphism(source, tm.EMPTY, mapping))
    assert image == data_graph('ex:a foaf:name "Alice" .')


def test_apply_collapses_triples(query_graph):
    source = query_graph("?x ex:p ?y . ?y ex:p ?x")
    mapping = {X: ex("a"), tm.variable("y"): ex("a"), ex("p"): ex("p")}
    image = mp.apply_morphism(mp.Morphism(source, tm.EMPTY, mapping))
    assert image == tm.Graph.of((ex("a"), ex("p"), ex("a")))


def test_apply_partial_map_raises(query_graph):
    source = query_graph("?x foaf:name ?name")
    with pytest.raises(ce.TotalityError):
        mp.apply_morphism(mp.Morphism(source, tm.EMPTY, {X: ex("a")}))


def test_check_morphism(data_graph, query_graph):
    g = data_graph('ex:a foaf:name "Alice" ; foaf:nick "Lissie" .')
    assert mp.check_morphism({x: x for x in g.attributes()}, g, g, tm.IBV)

    moved = {x: x for x in g.attributes()}
    moved[ex("a")] = ex("b")
    target = data_graph('ex:b foaf:name "Alice" ; foaf:nick "Lissie" .')
    assert not mp.check_morphism(moved, g, target, tm.I)

    source = query_graph("?x foaf:name ?name")
    match = {X: ex("a"), NAME: ALICE, foaf("name"): foaf("name")}
    assert mp.check_morphism(match, source, g, tm.I)
    assert not mp.check_morphism({X: ex("a")}, source, g, tm.I)


def test_compose(query_graph, data_graph):
    source = query_graph("?x foaf:name ?name")
    middle = query_graph("?y foaf:name ?z")
    target = data_graph('ex:a foaf:name "Alice" .')
    first = mp.Morphism(source, middle, {X: tm.variable("y"), NAME: tm.variable("z"), foaf("name"): foaf("name")})
    second = mp.Morphism(middle, target, {tm.variable("y"): ex("a"), tm.variable("z"): ALICE,
                                          foaf("name"): foaf("name")})
    composed = first.then(second)
    assert composed.check()
    assert composed.mapping[X] == ex("a")


def test_inverse(query_graph, data_graph):
    source = query_graph("?x foaf:name ?name")
    target = data_graph('ex:a foaf:name "Alice" .')
    match = mp.Morphism(source, target, {X: ex("a"), NAME: ALICE, foaf("name"): foaf("name")})
    back = match.inverse()
    assert (back.source, back.target) == (target, source)
    assert match.then(back).mapping == {x: x for x in source.attributes()}

    collapse = mp.Morphism(query_graph("?x foaf:name ?x"), data_graph("ex:a foaf:name ex:a ."),
                           {X: ex("a"), tm.variable("y"): ex("a"), foaf("name"): foaf("name")})
    with pytest.raises(ce.PreconditionError):
        collapse.inverse()


G1 = """_:b1 foaf:knows <http://example.org/Al> .
_:b2 foaf:knows <http://example.org/Bob> ."""
G2 = """_:b2 foaf:knows <http://example.org/Al> .
_:b1 foaf:knows <http://example.org/Bob> ."""


def test_iso_swapped_blanks(data_graph, g1=G1, g2=G2):
    g1, g2 = data_graph(g1), data_graph(g2)
    witness = iso.iso_check(g1, g2, tm.I)
    assert witness is not None
    assert witness.assignment() == [(tm.blank("b1"), tm.blank("b2")), (tm.blank("b2"), tm.blank("b1"))]
    assert mp.apply_morphism(witness) == g2
    assert iso.iso_check(g1, g2, tm.IB) is None


def test_iso_self_is_identity(data_graph, g1=G1):
    g = data_graph(g1)
    for fixed in (tm.I, tm.IB, tm.IV, tm.IBV):
        assert iso.iso_check(g, g, fixed).is_identity()


def test_iso_blank_against_iri(data_graph):
    g1 = data_graph("ex:a ex:p _:b .")
    g2 = data_graph("ex:a ex:p ex:c .")
    assert iso.iso_check(g1, g2, tm.I) is None


def test_iso_blank_against_variable_fixing_i(query_graph):
    g1 = query_graph("_:b ex:p ex:c")
    g2 = query_graph("?b ex:p ex:c")
    assert iso.iso_check(g1, g2, tm.I) is not None
    assert iso.iso_check(g1, g2, tm.IV) is None


def test_fixed_sets(data_graph):
    g = data_graph("_:c ex:p ex:a .")
    fixed = tm.FixedSet.ib_of(g)
    assert tm.blank("c") in fixed and tm.blank("d") not in fixed
    assert ex("a") in fixed and tm.variable("c") not in fixed
    assert tm.FixedSet.from_flag("ib") == tm.IB
    with pytest.raises(ValueError):
        tm.FixedSet.from_flag("B")


def test_fresh_rename_without_blanks(data_graph):
    g = data_graph('ex:a foaf:name "Alice" .')
    renamed, witness = fr.fresh_blank_rename(g, set(), fr.FreshBlankGenerator("g"))
    assert renamed == g
    assert witness.is_identity()


def test_fresh_rename(query_graph):
    g = query_graph("_:x foaf:name ?name")
    renamed, witness = fr.fresh_blank_rename(g, {tm.blank("x")}, fr.FreshBlankGenerator("g"))
    assert renamed == query_graph("_:g0 foaf:name ?name")
    assert witness.mapping[tm.blank("x")] == tm.blank("g0")
    assert witness.mapping[NAME] == NAME
    assert iso.iso_check(g, renamed, tm.IV) is not None


def test_fresh_rename_twice(data_graph):
    g = data_graph('_:c vcard:FN "Alice" .')
    generator = fr.FreshBlankGenerator("g")
    reserved = set(g.attributes())
    first, _ = fr.fresh_blank_rename(g, reserved, generator)
    reserved |= first.attributes()
    second, _ = fr.fresh_blank_rename(g, reserved, generator)
    assert first.blanks and second.blanks
    assert not first.blanks & second.blanks
    assert not (first.blanks | second.blanks) & g.blanks


def test_fresh_generator_skips_reserved():
    generator = fr.FreshBlankGenerator("g")
    assert generator.blank({tm.blank("g0"), tm.blank("g1")}) == tm.blank("g2")
    assert generator.variable() == tm.variable("g3")


def test_fresh_prefix_from_environment(monkeypatch):
    monkeypatch.setenv(fr.PREFIX_ENV, "n")
    assert fr.FreshBlankGenerator().blank() == tm.blank("n0")


def brute_force_iso(g1, g2, fixed):
    free1 = sorted(x for x in g1.attributes() if x not in fixed)
    free2 = sorted(x for x in g2.attributes() if x not in fixed)
    if len(free1) != len(free2) or len(g1) != len(g2):
        return None
    for images in itertools.permutations(free2):
        mapping = {x: x for x in g1.attributes() if x in fixed}
        mapping.update(zip(free1, images))
        if mp.apply_map(mapping, g1) == g2:
            return [(x, mapping[x]) for x in free1]
    return None


@strat.PROPERTY_SETTINGS
@given(strat.data_graphs(5), strat.data_graphs(5))
def test_iso_agrees_with_brute_force(g1, g2):
    witness = iso.iso_check(g1, g2, tm.I)
    expected = brute_force_iso(g1, g2, tm.I)
    if expected is None:
        assert witness is None
    else:
        assert witness.check()
        assert witness.assignment() == expected


@strat.PROPERTY_SETTINGS
@given(strat.data_graphs(6), st.permutations(strat.BLANKS))
def test_iso_of_renamed_graph(g, permutation):
    renamed = mp.apply_map({x: dict(zip(strat.BLANKS, permutation)).get(x, x) for x in g.attributes()}, g)
    forward = iso.iso_check(g, renamed, tm.I)
    assert forward is not None and mp.apply_morphism(forward) == renamed
    back = forward.inverse()
    assert back.check() and mp.apply_morphism(back) == g
    assert forward.then(back).is_identity()
    reverse = iso.iso_check(renamed, g, tm.I)
    assert reverse is not None and mp.apply_morphism(reverse.inverse()) == renamed
    if renamed != g:
        assert iso.iso_check(g, renamed, tm.IB) is None


NODES = strat.ENTITIES + strat.LITERALS + strat.BLANKS + strat.VARIABLES


@st.composite
def morphism_from(draw, source, fixed):
    """
    A random morphism out of `source` fixing `fixed`, into its image plus
    a few unrelated triples.
    """
    mapping = {x: x if x in fixed else draw(st.sampled_from(NODES)) for x in sorted(source.attributes())}
    target = mp.apply_map(mapping, source) | draw(strat.query_graphs(2))
    return mp.Morphism(source, target, mapping, fixed)


@strat.PROPERTY_SETTINGS
@given(strat.query_graphs(4), st.sampled_from([tm.I, tm.IB, tm.IV, tm.IBV]), st.data())
def test_composition_of_morphisms(source, fixed, data):
    first = data.draw(morphism_from(source, fixed))
    second = data.draw(morphism_from(first.target, fixed))
    assert first.check() and second.check()
    composed = first.then(second)
    assert composed.check()
    assert mp.apply_morphism(composed) == mp.apply_map(second.mapping, mp.apply_morphism(first))


@strat.PROPERTY_SETTINGS
@given(strat.data_graphs(4), strat.data_graphs(4), strat.data_graphs(4))
def test_iso_is_transitive(g1, g2, g3):
    first, second = iso.iso_check(g1, g2, tm.I), iso.iso_check(g2, g3, tm.I)
    if first is not None and second is not None:
        composed = first.then(second)
        assert composed.check()
        assert mp.apply_morphism(composed) == g3
