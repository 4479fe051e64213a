from typing import Dict, List, Literal, Optional, Tuple

from pydantic import Field, validator

from core.config import settings
from models.base import BaseModel
from models.rdf import is_absolute_iri


class EndpointConfig(BaseModel):
    url: str
    timeout: float = Field(default_factory=lambda: settings.timeout, gt=0)
    page_size: int = Field(default_factory=lambda: settings.page_size, ge=1)
    max_retries: int = Field(default_factory=lambda: settings.max_retries, ge=0)
    backoff_factor: float = Field(
        default_factory=lambda: settings.backoff_factor, ge=0
    )
    max_in_flight: int = Field(
        default_factory=lambda: settings.max_in_flight, ge=1
    )
    get_max_bytes: int = Field(
        default_factory=lambda: settings.get_max_bytes, ge=0
    )
    user_agent: str = Field(default_factory=lambda: settings.user_agent)

    @validator('url')
    def url_is_http(cls, value: str) -> str:
        if not is_absolute_iri(value) or not value.lower().startswith(('http://', 'https://')):
            raise ValueError(f'endpoint URL must be an absolute http(s) URL: {value!r}')
        return value


class GeneratedQuery(BaseModel):
    text: str
    projected_vars: Tuple[str, ...]
    origin: str


class ResultHead(BaseModel):
    vars: List[str] = []


class ResultTerm(BaseModel):
    type: Literal['uri', 'literal', 'typed-literal', 'bnode']
    value: str
    datatype: Optional[str] = None
    lang: Optional[str] = Field(None, alias='xml:lang')

    class Config:
        allow_population_by_field_name = True


class ResultBindings(BaseModel):
    bindings: List[Dict[str, ResultTerm]]


class ResultsDocument(BaseModel):
    head: ResultHead
    results: ResultBindings
