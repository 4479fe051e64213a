from rdf.graph import RdfGraph  # noqa
from rdf.loader import load_graph, load_graphs  # noqa
from rdf.ntriples import load_ntriples, serialize_ntriples  # noqa
from rdf.turtle import load_turtle_subset  # noqa
