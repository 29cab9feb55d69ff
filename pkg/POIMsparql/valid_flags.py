VALID_FLAGS = {"data": "data",
               "query": "query",
               "mode": "mode",
               "fix": "fix",
               "strict_rdf": "strict_rdf",
               "output_format": "output_format",
               "ncpus": "ncpus",
               "blank_prefix": "blank_prefix",
               "verbose": "verbose",
               }

MODES = ("direct", "high", "low")

FIX_FLAGS = ("I", "IB")

OUTPUT_FORMATS = ("nt", "csv", "json-lines")
