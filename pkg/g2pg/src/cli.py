import argparse
import sys
from logging import config as logging_config
from logging import getLogger
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError, root_validator, validator

from core.config import Settings
from core.exceptions import (MappingSyntaxError, RdfParseError, SourceError,
                             UnsupportedFeature, UsageError)
from core.logger import LOGGING, level_for
from extract.schema import EndpointConfig
from g2gml.parser import load_document
from load.base import GraphWriter
from load.schema import EmissionTarget, OutputFormat
from models.base import BaseModel
from rdf.loader import load_graphs
from transform.base import run_mapping

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_MAPPING = 1
EXIT_SOURCE = 2
EXIT_IO = 3
EXIT_USAGE = 64


class RunConfig(BaseModel):
    mapping_path: Path
    input_paths: List[Path] = []
    endpoint: Optional[EndpointConfig] = None
    targets: List[EmissionTarget]
    report: bool = False
    verbosity: int = 0
    log_level: str = 'WARNING'

    @validator('targets')
    def targets_not_empty(cls, value):
        if not value:
            raise ValueError('at least one output format is required')
        return value

    @root_validator(skip_on_failure=True)
    def exactly_one_source(cls, values):
        if bool(values.get('input_paths')) == (values.get('endpoint') is not None):
            raise ValueError('exactly one of --input and --endpoint is required')
        return values


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f'{self.format_usage()}{self.prog}: error: {message}')


def build_parser(settings: Settings) -> ArgumentParser:
    parser = ArgumentParser(
        prog='g2pg',
        description='Convert RDF data into property graphs with a G2GML mapping.',
    )
    parser.add_argument('mapping', type=Path, help='G2GML mapping file (.g2g)')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        '--input', action='append', type=Path, metavar='PATH',
        help='RDF data file (N-Triples or Turtle); may be repeated',
    )
    source.add_argument('--endpoint', metavar='URL', help='SPARQL endpoint URL')
    parser.add_argument(
        '--format', action='append', dest='formats', metavar='FORMAT',
        choices=[item.value for item in OutputFormat],
        help='output format: %(choices)s; may be repeated (default: pg)',
    )
    parser.add_argument('--out', type=Path, default=Path('.'),
                        help='output directory (default: current directory)')
    parser.add_argument('--page-size', type=int, default=settings.page_size)
    parser.add_argument('--timeout', type=float, default=settings.timeout)
    parser.add_argument('--max-retries', type=int, default=settings.max_retries)
    parser.add_argument('--report', action='store_true',
                        help='print run statistics to standard output')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    return parser


def _invalid(exc: ValidationError) -> UsageError:
    messages = '; '.join(
        f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
        for error in exc.errors()
    )
    return UsageError(f'invalid arguments: {messages}')


def parse_args(args: Sequence[str]) -> RunConfig:
    try:
        settings = Settings()
    except ValidationError as exc:
        raise _invalid(exc) from None
    namespace = build_parser(settings).parse_args(list(args))
    formats = [OutputFormat(name) for name in dict.fromkeys(
        namespace.formats or [OutputFormat.PG_TEXT.value]
    )]
    stem = namespace.mapping.stem
    try:
        endpoint = None
        if namespace.endpoint is not None:
            endpoint = EndpointConfig(
                url=namespace.endpoint,
                timeout=namespace.timeout,
                page_size=namespace.page_size,
                max_retries=namespace.max_retries,
                backoff_factor=settings.backoff_factor,
                max_in_flight=settings.max_in_flight,
                get_max_bytes=settings.get_max_bytes,
                user_agent=settings.user_agent,
            )
        return RunConfig(
            mapping_path=namespace.mapping,
            input_paths=namespace.input or [],
            endpoint=endpoint,
            targets=[EmissionTarget.default(f, namespace.out, stem) for f in formats],
            report=namespace.report,
            verbosity=namespace.verbose,
            log_level=settings.log_level,
        )
    except ValidationError as exc:
        raise _invalid(exc) from None


def configure_logging(verbosity: int, default: str = 'WARNING') -> None:
    logging_config.dictConfig(LOGGING)
    getLogger().setLevel(level_for(verbosity, default.upper()))


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f'g2pg: {message}\n')
    return code


def main(args: Optional[Sequence[str]] = None) -> int:
    try:
        run = parse_args(sys.argv[1:] if args is None else args)
    except UsageError as exc:
        sys.stderr.write(f'{exc}\n')
        return EXIT_USAGE
    configure_logging(run.verbosity, run.log_level)

    try:
        document = load_document(run.mapping_path)
    except OSError as exc:
        return _fail(EXIT_IO, f'cannot read mapping {run.mapping_path}: {exc.strerror or exc}')
    except UnicodeDecodeError as exc:
        return _fail(EXIT_MAPPING, f'{run.mapping_path}: not UTF-8 text: {exc}')
    except (MappingSyntaxError, UnsupportedFeature) as exc:
        return _fail(EXIT_MAPPING, f'{run.mapping_path}: {exc}')

    try:
        if run.endpoint is not None:
            source = run.endpoint
        else:
            source = load_graphs(run.input_paths)
        graph, report = run_mapping(document, source)
    except OSError as exc:
        return _fail(EXIT_IO, f'cannot read input: {exc}')
    except UnicodeDecodeError as exc:
        return _fail(EXIT_SOURCE, f'input is not UTF-8 text: {exc}')
    except (RdfParseError, UnsupportedFeature) as exc:
        return _fail(EXIT_SOURCE, f'input: {exc}')
    except SourceError as exc:
        return _fail(EXIT_SOURCE, str(exc))

    try:
        with GraphWriter(run.targets) as writer:
            written = writer.write(graph)
    except OSError as exc:
        return _fail(EXIT_IO, f'cannot write output: {exc}')

    logger.info('Wrote %s files: %s nodes, %s edges',
                len(written), len(graph.nodes), len(graph.edges))
    if run.report:
        sys.stdout.write(report.render())
    return EXIT_OK
