from enum import Enum
from pathlib import Path
from typing import Dict, List, Literal, Union

from pydantic import Field, StrictBool, StrictInt, StrictStr

from models.base import BaseModel


class OutputFormat(str, Enum):
    PG_TEXT = 'pg'
    PG_JSON = 'pg_json'
    NEO4J_CSV = 'neo4j_csv'
    PGX_FLAT = 'pgx'
    NEPTUNE_CSV = 'neptune_csv'


DEFAULT_NAMES = {
    OutputFormat.PG_TEXT: '{stem}.pg',
    OutputFormat.PG_JSON: '{stem}.json',
    OutputFormat.NEO4J_CSV: '{stem}_neo4j',
    OutputFormat.PGX_FLAT: '{stem}_pgx',
    OutputFormat.NEPTUNE_CSV: '{stem}_neptune',
}


class EmissionTarget(BaseModel):
    format: OutputFormat
    output_path: Path

    @classmethod
    def default(cls, format: OutputFormat, out_dir: Path, stem: str) -> 'EmissionTarget':
        return cls(
            format=format,
            output_path=Path(out_dir) / DEFAULT_NAMES[format].format(stem=stem),
        )


class TaggedValue(BaseModel):
    type: Literal['integer', 'decimal', 'datetime']
    value: StrictStr


JsonValue = Union[StrictBool, StrictInt, StrictStr, TaggedValue]


class PgJsonNode(BaseModel):
    id: StrictStr
    labels: List[StrictStr]
    properties: Dict[str, List[JsonValue]] = {}


class PgJsonEdge(BaseModel):
    from_: StrictStr = Field(..., alias='from')
    to: StrictStr
    label: StrictStr
    properties: Dict[str, List[JsonValue]] = {}


class PgJsonDocument(BaseModel):
    nodes: List[PgJsonNode]
    edges: List[PgJsonEdge]
