from logging import getLogger
from typing import List, Optional

import backoff
import requests

from core.exceptions import EndpointError, NetworkError
from extract.results import RESULTS_MEDIA_TYPE, parse_results
from extract.schema import EndpointConfig, GeneratedQuery
from models.bindings import BindingTable
from models.mapping import EdgeMappingDef, MappingDef, PrefixMap

logger = getLogger(__name__)

EXCERPT_LENGTH = 200


def generate_query(mapping: MappingDef, prefixes: PrefixMap) -> GeneratedQuery:
    lines = [f'PREFIX {name}: <{iri}>' for name, iri in prefixes.items()]
    projection = ' '.join(f'?{name}' for name in mapping.projected_vars)
    lines.append(f'SELECT DISTINCT {projection}')
    lines.append('WHERE {')
    lines.extend(f'  {line}' for line in mapping.rdf_pattern_text.split('\n'))
    lines.append('}')
    origin = (mapping.edge_label if isinstance(mapping, EdgeMappingDef)
              else mapping.label)
    return GeneratedQuery(
        text='\n'.join(lines),
        projected_vars=mapping.projected_vars,
        origin=origin,
    )


def paged_query(query: GeneratedQuery, page_size: int, page: int) -> str:
    order = ' '.join(f'?{name}' for name in query.projected_vars)
    return (
        f'{query.text}\nORDER BY {order}\n'
        f'LIMIT {page_size}\nOFFSET {page * page_size}'
    )


class _ServerError(Exception):
    def __init__(self, status: int) -> None:
        self.status = status
        super().__init__(f'HTTP {status}')


class SparqlClient:
    """Runs SELECT queries against one endpoint, one page at a time."""

    def __init__(self, config: EndpointConfig) -> None:
        self.config = config
        self.warnings: List[str] = []
        self._session: Optional[requests.Session] = None
        self._request = backoff.on_exception(
            backoff.expo,
            (requests.ConnectionError, requests.Timeout, _ServerError),
            max_tries=config.max_retries + 1,
            factor=config.backoff_factor,
            on_backoff=self._log_retry,
        )(self._send)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        try:
            if self._session:
                self._session.close()
        except Exception:
            logger.exception(
                'Failed to close the HTTP session, endpoint=%s', self.config.url
            )

    @property
    def session(self) -> requests.Session:
        if not self._session:
            self._session = requests.Session()
            self._session.headers.update({
                'Accept': RESULTS_MEDIA_TYPE,
                'User-Agent': self.config.user_agent,
            })
        return self._session

    def _log_retry(self, details) -> None:
        logger.warning(
            'Endpoint %s failed (%s), retry %s after %.2fs',
            self.config.url, details.get('exception'), details['tries'],
            details.get('wait', 0.0),
        )

    def _send(self, text: str) -> requests.Response:
        if len(text.encode('utf-8')) < self.config.get_max_bytes:
            response = self.session.get(
                self.config.url, params={'query': text},
                timeout=self.config.timeout,
            )
        else:
            response = self.session.post(
                self.config.url, data={'query': text},
                timeout=self.config.timeout,
            )
        if response.status_code >= 500:
            raise _ServerError(response.status_code)
        if not 200 <= response.status_code < 300:
            raise EndpointError(
                response.status_code, response.text[:EXCERPT_LENGTH]
            )
        return response

    def fetch(self, text: str) -> BindingTable:
        try:
            response = self._request(text)
        except _ServerError as exc:
            raise NetworkError(
                f'{self.config.url} kept answering HTTP {exc.status} '
                f'after {self.config.max_retries + 1} attempts'
            ) from None
        except requests.RequestException as exc:
            raise NetworkError(
                f'{self.config.url} unreachable after '
                f'{self.config.max_retries + 1} attempts: {exc}'
            ) from None
        return parse_results(response.content)

    def execute(self, query: GeneratedQuery) -> BindingTable:
        page_size = self.config.page_size
        table = BindingTable(query.projected_vars)
        page = 0
        while True:
            rows = self.fetch(paged_query(query, page_size, page))
            table.extend(rows.project(query.projected_vars))
            logger.debug(
                'Query %s page %s: %s rows', query.origin, page, len(rows)
            )
            if len(rows) < page_size:
                break
            if len(rows) > page_size:
                message = (
                    f'{query.origin}: endpoint returned {len(rows)} rows for '
                    f'LIMIT {page_size}; paging stopped'
                )
                logger.warning(message)
                self.warnings.append(message)
                break
            page += 1
        if page and len(rows) == 0:
            message = (
                f'{query.origin}: result count is an exact multiple of '
                f'page size {page_size}; the endpoint may have truncated results'
            )
            logger.warning(message)
            self.warnings.append(message)
        logger.info('Query %s returned %s rows', query.origin, len(table))
        return table


def execute(query: GeneratedQuery, endpoint: EndpointConfig) -> BindingTable:
    with SparqlClient(endpoint) as client:
        return client.execute(query)
