from dataclasses import dataclass
from difflib import SequenceMatcher
import os
import yaml

from POIMsparql.errors import custom_errors as ce


@dataclass
class YamlParser(object):
    """
    Configuration file for the `poim` command. Every key is optional; keys
    left out stay None so that command-line flags and defaults apply.
    """

    yamlfile: str
    valid_flags: dict

    def read(self) -> None:
        self.data = self._parse_yaml()
        self._check()
        self._parse()

    def _parse_yaml(self) -> dict:
        # Retrieve raw info from yaml
        with open(self.yamlfile, 'r') as stream:
            try:
                data = yaml.safe_load(stream)
            except yaml.YAMLError as exc:
                raise ce.WrongYamlFile(f"Input file: {self.yamlfile} does not look like a correct yml file") from exc
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ce.WrongYamlFile(f"Input file: {self.yamlfile} does not contain a mapping of flags")
        return data

    def _check(self) -> None:
        # Check if keys in yaml file are valid flags
        for key in self.data.keys():
            if key not in self.valid_flags.values():
                raise KeyError(self._recommend(key))

    def _recommend(self, key):
        most_similar_flag = None
        for valid_key in self.valid_flags.values():
            flag = SimilarFlag(valid_key)
            flag.calculate_distance(key)
            if not most_similar_flag or flag.distance > most_similar_flag.distance:
                most_similar_flag = flag
        return f"Incorrect flag {key}. Did you mean {most_similar_flag.name}?"

    def _parse(self) -> None:
        # Parse fields in yaml file, relative paths taken from the file's directory
        valid_flags = self.valid_flags
        data = self.data
        base = os.path.dirname(os.path.abspath(self.yamlfile))
        data_files = data.get(valid_flags["data"], None)
        if isinstance(data_files, str):
            data_files = [data_files]
        self.data_files = [os.path.join(base, f) for f in data_files] if data_files else None
        query = data.get(valid_flags["query"], None)
        self.query = os.path.join(base, query) if query else None
        self.mode = data.get(valid_flags["mode"], None)
        self.fix = data.get(valid_flags["fix"], None)
        self.strict_rdf = data.get(valid_flags["strict_rdf"], None)
        self.output_format = data.get(valid_flags["output_format"], None)
        self.ncpus = data.get(valid_flags["ncpus"], None)
        self.blank_prefix = data.get(valid_flags["blank_prefix"], None)
        self.verbose = data.get(valid_flags["verbose"], None)


@dataclass
class SimilarFlag():

    name: str

    def calculate_distance(self, key):
        self.distance = SequenceMatcher(None, self.name, key).ratio()
