import os
import pytest
import POIMsparql.helpers as hl
import POIMsparql.graph.terms as tm
import POIMsparql.graph.isomorphism as iso
import POIMsparql.syntax.parser as ps
import POIMsparql.syntax.serializers as sr
from POIMsparql.data.prefixes import WELL_KNOWN_PREFIXES


DIR = os.path.dirname(__file__)
DATA = os.path.join(DIR, "data")


@pytest.fixture
def data_path():
    def _data_path(filename):
        return os.path.join(DATA, filename)
    return _data_path


@pytest.fixture
def load_graph(data_path):
    def _load_graph(filename):
        return ps.parse_data(hl.read_text(data_path(filename))).graph
    return _load_graph


@pytest.fixture
def load_query(data_path):
    def _load_query(filename):
        return ps.parse_query(hl.read_text(data_path(filename)))
    return _load_query


@pytest.fixture
def data_graph():
    def _data_graph(text):
        return ps.parse_data(text, WELL_KNOWN_PREFIXES).graph
    return _data_graph


@pytest.fixture
def query_graph():
    def _query_graph(text):
        return ps.Parser("{ " + text + " }", WELL_KNOWN_PREFIXES, allow_variables=True).block()
    return _query_graph


@pytest.fixture
def assert_isomorphic():
    def _assert_isomorphic(g1, g2, fixed=tm.I):
        assert iso.is_isomorphic(g1, g2, fixed), \
            'Graphs are not isomorphic:\n' + sr.serialize_graph(g1) + '---\n' + sr.serialize_graph(g2)
    return _assert_isomorphic
