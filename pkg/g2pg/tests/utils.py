import re
import threading
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Dict, List, Optional
from urllib.parse import parse_qs, urlparse

from extract.results import RESULTS_MEDIA_TYPE, dump_results
from models.bindings import BindingTable
from models.mapping import PrefixMap
from models.pg import PropertyGraph
from pattern.engine import evaluate
from pattern.parser import parse_rdf_pattern
from rdf.graph import RdfGraph

_PREFIX = re.compile(r'^PREFIX\s+(\S*):\s*<([^>]*)>\s*$', re.MULTILINE)
_QUERY = re.compile(
    r'SELECT DISTINCT (?P<vars>[^\n]*)\nWHERE \{\n(?P<body>.*)\n\}'
    r'(?:\nORDER BY [^\n]*)?'
    r'(?:\nLIMIT (?P<limit>\d+))?(?:\nOFFSET (?P<offset>\d+))?\s*$',
    re.DOTALL,
)


def answer_query(text: str, graph: RdfGraph, ignore_limit: bool = False) -> bytes:
    """Evaluates a generated SELECT query with LIMIT/OFFSET over a fixture graph."""
    match = _QUERY.search(text)
    if match is None:
        raise ValueError(f'unexpected query text: {text!r}')
    prefixes = PrefixMap(dict(_PREFIX.findall(text)))
    columns = [name.lstrip('?') for name in match.group('vars').split()]
    table = evaluate(parse_rdf_pattern(match.group('body'), prefixes), graph)
    rows = table.project(columns).sorted_rows()
    offset = int(match.group('offset') or 0)
    if match.group('limit') is not None and not ignore_limit:
        rows = rows[offset:offset + int(match.group('limit'))]
    page = BindingTable(columns)
    for row in rows:
        page.add_row(row)
    return dump_results(page)


class StubEndpoint:
    """A local SPARQL endpoint serving one graph, for tests.

    ``fail_with`` makes every request answer with that HTTP status;
    ``ignore_limit`` answers every page with the whole result.
    """

    def __init__(self,
                 graph: RdfGraph,
                 fail_with: Optional[int] = None,
                 ignore_limit: bool = False,
                 ) -> None:
        self.graph = graph
        self.fail_with = fail_with
        self.ignore_limit = ignore_limit
        self.requests: List[Dict[str, str]] = []
        self._server = ThreadingHTTPServer(('127.0.0.1', 0), self._handler())
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)

    @property
    def url(self) -> str:
        host, port = self._server.server_address[:2]
        return f'http://{host}:{port}/sparql'

    def __enter__(self):
        self._thread.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._server.shutdown()
        self._server.server_close()
        self._thread.join()

    def _handler(self):
        endpoint = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, format, *args):
                pass

            def _answer(self, query: Optional[str]) -> None:
                endpoint.requests.append({
                    'method': self.command,
                    'accept': self.headers.get('Accept', ''),
                    'user_agent': self.headers.get('User-Agent', ''),
                    'query': query or '',
                })
                if endpoint.fail_with is not None:
                    self._reply(endpoint.fail_with, b'stub failure', 'text/plain')
                elif query is None:
                    self._reply(HTTPStatus.BAD_REQUEST, b'missing query', 'text/plain')
                else:
                    body = answer_query(query, endpoint.graph, endpoint.ignore_limit)
                    self._reply(HTTPStatus.OK, body, RESULTS_MEDIA_TYPE)

            def _reply(self, status: int, body: bytes, content_type: str) -> None:
                self.send_response(status)
                self.send_header('Content-Type', content_type)
                self.send_header('Content-Length', str(len(body)))
                self.end_headers()
                self.wfile.write(body)

            def do_GET(self):
                params = parse_qs(urlparse(self.path).query)
                self._answer(params.get('query', [None])[0])

            def do_POST(self):
                length = int(self.headers.get('Content-Length', 0))
                form = parse_qs(self.rfile.read(length).decode('utf-8'))
                self._answer(form.get('query', [None])[0])

        return Handler


def name_pairs(graph: PropertyGraph, edge_label: str, key: str) -> set:
    """Distinct (name, name) pairs across edges, read in both directions."""
    pairs = set()
    for edge in graph.edges.values():
        if edge.label != edge_label:
            continue
        for left in graph.nodes[edge.src_id].properties.get(key, ()):
            for right in graph.nodes[edge.dst_id].properties.get(key, ()):
                pairs.add((left.value, right.value))
                pairs.add((right.value, left.value))
    return pairs
