from g2gml.dump import dump_document  # noqa
from g2gml.parser import (load_document, parse_document,  # noqa
                          parse_pg_edge_pattern, parse_pg_node_pattern)
