import pytest

from extract.schema import EndpointConfig
from g2gml.parser import parse_document
from rdf.ntriples import load_ntriples
from settings import settings
from testdata import MUSICIAN_MAPPING, MUSICIANS_NT
from utils import StubEndpoint


@pytest.fixture(scope='session')
def musician_document():
    return parse_document(MUSICIAN_MAPPING)


@pytest.fixture
def musician_graph():
    return load_ntriples(MUSICIANS_NT)


@pytest.fixture
def stub_endpoint(musician_graph):
    with StubEndpoint(musician_graph) as endpoint:
        yield endpoint


@pytest.fixture
def endpoint_config():
    def inner(url, **kwargs):
        options = {
            'timeout': settings.request_timeout,
            'max_retries': 2,
            'backoff_factor': 0,
            **kwargs,
        }
        return EndpointConfig(url=url, **options)

    return inner
