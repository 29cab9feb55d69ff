import json
import logging
import sys
from argparse import ArgumentParser
from dataclasses import dataclass, field
from typing import List, Optional

from POIMsparql.errors import custom_errors as ce
import POIMsparql.helpers as hl
import POIMsparql.valid_flags as vf
import POIMsparql.yaml_parser as yp
import POIMsparql.graph.terms as tm
import POIMsparql.graph.fresh as fr
import POIMsparql.graph.isomorphism as iso
import POIMsparql.matching.matcher as mt
import POIMsparql.colimits.colimits as cl
import POIMsparql.colimits.poim as pm
import POIMsparql.query.construct as cq
import POIMsparql.query.select as sq
import POIMsparql.syntax.parser as ps
import POIMsparql.syntax.serializers as sr
from POIMsparql.data.prefixes import WELL_KNOWN_PREFIXES
from POIMsparql.output.trace_writer import TraceWriter

logger = logging.getLogger("poim")

COMMANDS = ("construct", "select", "matches", "iso", "poim-trace")

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_ISOMORPHIC = 1
EXIT_IO = 2
EXIT_UNBOUND = 3
EXIT_MATCH_COUNT = 4

DEFAULT_FORMATS = {"construct": "nt", "select": "csv", "matches": "json-lines"}
ALLOWED_FORMATS = {"construct": ("nt", "json-lines"),
                   "select": ("csv", "json-lines"),
                   "matches": ("json-lines",)}


class UsageError(ce.PoimError):
    pass


@dataclass
class CliConfig:
    command: str
    data_paths: List[str] = field(default_factory=list)
    query_path: Optional[str] = None
    mode: str = "direct"
    fix: str = "I"
    strict_rdf: bool = False
    output_format: Optional[str] = None
    ncpus: int = 1
    blank_prefix: Optional[str] = None
    verbose: bool = False

    def generator(self):
        return fr.FreshBlankGenerator(self.blank_prefix)


def parse_args(argv=None):
    """
    Command line parser
    """
    parser = ArgumentParser(prog="poim", description="Evaluate basic CONSTRUCT and SELECT queries "
                                                     "with the POIM transformation")
    parser.add_argument("command", choices=COMMANDS, help="What to run")
    parser.add_argument("-c", "--config", type=str, help="Yaml configuration file")
    parser.add_argument("-d", "--data", nargs="+", help="Data files (Turtle subset)")
    parser.add_argument("-q", "--query", type=str, help="Query file")
    parser.add_argument("--mode", choices=vf.MODES, help="Construct calculus (default: direct)")
    parser.add_argument("--fix", choices=vf.FIX_FLAGS, help="Fixed set for iso (default: I)")
    parser.add_argument("--strict-rdf", action="store_true", default=None,
                        help="Keep only well-formed RDF triples")
    parser.add_argument("--output-format", choices=vf.OUTPUT_FORMATS)
    parser.add_argument("--ncpus", type=int, help="Workers for the low-level calculus")
    parser.add_argument("--blank-prefix", type=str, help=f"Fresh blank prefix (env {fr.PREFIX_ENV})")
    parser.add_argument("-v", "--verbose", action="store_true", default=None)
    return parser.parse_args(argv)


def _first(*values):
    for value in values:
        if value is not None:
            return value
    return None


def build_config(args) -> CliConfig:
    """
    Merge command-line flags over the configuration file over defaults.
    """
    yaml_obj = None
    if args.config:
        yaml_obj = yp.YamlParser(args.config, vf.VALID_FLAGS)
        yaml_obj.read()

    def from_yaml(name):
        return getattr(yaml_obj, name) if yaml_obj is not None else None

    config = CliConfig(command=args.command,
                       data_paths=_first(args.data, from_yaml("data_files")) or [],
                       query_path=_first(args.query, from_yaml("query")),
                       mode=_first(args.mode, from_yaml("mode"), "direct"),
                       fix=str(_first(args.fix, from_yaml("fix"), "I")).upper(),
                       strict_rdf=bool(_first(args.strict_rdf, from_yaml("strict_rdf"), False)),
                       output_format=_first(args.output_format, from_yaml("output_format"),
                                            DEFAULT_FORMATS.get(args.command)),
                       ncpus=int(_first(args.ncpus, from_yaml("ncpus"), 1)),
                       blank_prefix=_first(args.blank_prefix, from_yaml("blank_prefix")),
                       verbose=bool(_first(args.verbose, from_yaml("verbose"), False)))
    validate(config)
    return config


def validate(config):
    if config.mode not in vf.MODES:
        raise UsageError(f"Unknown mode {config.mode}")
    if config.fix not in vf.FIX_FLAGS:
        raise UsageError(f"Unknown fixed set {config.fix}")
    allowed = ALLOWED_FORMATS.get(config.command)
    if allowed and config.output_format not in allowed:
        raise UsageError(f"{config.command} writes {' or '.join(allowed)}, not {config.output_format}")
    if config.command == "iso":
        if len(config.data_paths) != 2:
            raise UsageError("iso needs exactly two data files")
    else:
        if not config.query_path:
            raise UsageError(f"{config.command} needs a query file")
        if not config.data_paths:
            raise UsageError(f"{config.command} needs at least one data file")


def undecodable(path, err):
    """
    ParseError pointing at the first byte that is not UTF-8.
    """
    prefix = err.object[:err.start]
    line_start = prefix.rfind(b"\n") + 1
    column = len(prefix[line_start:].decode("utf-8")) + 1
    error = ce.ParseError(f"invalid UTF-8 byte 0x{err.object[err.start]:02x}", prefix.count(b"\n") + 1, column)
    error.path = path
    return error


def read_document(path, parse):
    try:
        text = hl.read_text(path)
    except UnicodeDecodeError as err:
        raise undecodable(path, err) from err
    try:
        return parse(text, WELL_KNOWN_PREFIXES)
    except ce.ParseError as err:
        err.path = path
        raise


def load_data(paths, generator):
    """
    Union of the data files, each file its own blank scope.
    """
    graphs = [read_document(path, ps.parse_data).graph for path in paths]
    if len(graphs) == 1:
        return graphs[0]
    merged, _ = cl.coproduct(graphs, tm.IV, generator)
    return merged


def load_query(config, kind):
    query = read_document(config.query_path, ps.parse_query)
    if kind is not None and not isinstance(query, kind):
        raise UsageError(f"{config.command} needs a {'SELECT' if kind is sq.SelectQuery else 'CONSTRUCT'} query")
    return query


def run_construct(config):
    generator = config.generator()
    query = load_query(config, cq.ConstructQuery)
    data = load_data(config.data_paths, generator)
    result = cq.evaluate(query, data, config.mode, generator, config.strict_rdf, config.ncpus)
    logger.info("%s calculus produced %d triple(s)", config.mode, len(result))
    if config.output_format == "json-lines":
        return EXIT_OK, sr.serialize_graph_json_lines(result)
    return EXIT_OK, sr.serialize_graph(result)


def run_select(config):
    generator = config.generator()
    query = load_query(config, sq.SelectQuery)
    data = load_data(config.data_paths, generator)
    relation = sq.eval_select(query, data, generator)
    logger.info("Select query produced %d row(s)", len(relation))
    if config.output_format == "json-lines":
        return EXIT_OK, sr.serialize_multirelation_json_lines(relation)
    return EXIT_OK, sr.serialize_multirelation(relation)


def run_matches(config):
    query = load_query(config, None)
    data = load_data(config.data_paths, config.generator())
    matches = mt.enumerate_matches(query.lhs, data)
    logger.info("%d match(es)", len(matches))
    return EXIT_OK, sr.serialize_matches(matches)


def run_iso(config):
    first, second = (read_document(path, ps.parse_data).graph for path in config.data_paths)
    witness = iso.iso_check(first, second, tm.FixedSet.from_flag(config.fix))
    if witness is None:
        logger.info("Graphs are not isomorphic fixing %s", config.fix)
        return EXIT_NOT_ISOMORPHIC, ""
    assignment = {x.n3(): y.n3() for x, y in witness.assignment()}
    return EXIT_OK, json.dumps(assignment, ensure_ascii=False) + "\n"


def run_poim_trace(config):
    generator = config.generator()
    query = load_query(config, cq.ConstructQuery)
    data = load_data(config.data_paths, generator)
    matches = mt.enumerate_matches(query.lhs, data)
    if len(matches) != 1:
        logger.error("poim-trace needs exactly one match, found %d", len(matches))
        return EXIT_MATCH_COUNT, ""
    trace = pm.poim(query.rule, matches[0], generator)
    return EXIT_OK, TraceWriter(trace).text


RUNNERS = {"construct": run_construct,
           "select": run_select,
           "matches": run_matches,
           "iso": run_iso,
           "poim-trace": run_poim_trace}


def run(config):
    try:
        return RUNNERS[config.command](config)
    except ce.UnboundColumnError as err:
        logger.error("%s", err)
        return EXIT_UNBOUND, ""
    except ce.ParseError as err:
        logger.error("%s:%s", getattr(err, "path", "<input>"), err)
        return EXIT_PARSE, ""
    except OSError as err:
        logger.error("%s", err)
        return EXIT_IO, ""
    except ce.PoimError as err:
        logger.error("%s", err)
        return EXIT_PARSE, ""


def main(argv=None):
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, which is reserved for I/O
        return EXIT_OK if not exc.code else EXIT_PARSE
    try:
        config = build_config(args)
    except OSError as err:
        logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr)
        logger.error("%s", err)
        return EXIT_IO
    except (ce.PoimError, KeyError, UnicodeDecodeError) as err:
        logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr)
        logger.error("%s", err)
        return EXIT_PARSE
    logging.basicConfig(format="%(levelname)s: %(message)s", stream=sys.stderr,
                        level=logging.DEBUG if config.verbose else logging.INFO)
    status, output = run(config)
    if output:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
