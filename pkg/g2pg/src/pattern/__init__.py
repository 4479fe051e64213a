from pattern.engine import evaluate  # noqa
from pattern.oracle import brute_force_evaluate  # noqa
from pattern.parser import parse_rdf_pattern  # noqa
