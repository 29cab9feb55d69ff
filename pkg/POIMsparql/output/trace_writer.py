import os
from string import Template

TRACE_TEMPLATE = os.path.join(os.path.dirname(os.path.dirname(__file__)), "templates", "poim_trace.txt")

INDENT = "    "


def format_graph(graph):
    if not len(graph):
        return f"{INDENT}(empty)"
    return "\n".join(f"{INDENT}{t.n3()}" for t in graph.sorted())


def format_morphism(morphism):
    rows = [f"{INDENT}{x.n3()} -> {y.n3()}" for x, y in sorted(morphism.mapping.items()) if x != y]
    if not rows:
        return f"{INDENT}(inclusion)"
    return "\n".join(rows)


class TraceWriter(object):
    """
    Text rendering of a PoimTrace laid out like the POIM square.
    """

    template = TRACE_TEMPLATE

    def __init__(self, trace):
        self.trace = trace
        self.fill_in()

    def keywords(self):
        trace = self.trace
        return {"left": format_graph(trace.rule.left),
                "middle": format_graph(trace.rule.middle),
                "right": format_graph(trace.rule.right),
                "data": format_graph(trace.data_graph),
                "pushout": format_graph(trace.pushout_graph),
                "result": format_graph(trace.result_graph),
                "match_table": format_morphism(trace.input_match),
                "pushout_table": format_morphism(trace.pushout_match),
                "result_table": format_morphism(trace.result_match),
                "pushout_inclusion": format_morphism(trace.pushout_inclusion),
                "result_inclusion": format_morphism(trace.result_inclusion),
                }

    def fill_in(self):
        with open(self.template, 'r', encoding="utf-8") as infile:
            trace_template = Template(infile.read())
        self.text = trace_template.safe_substitute(self.keywords())

