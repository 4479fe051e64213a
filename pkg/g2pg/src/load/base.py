import os
import tempfile
from logging import getLogger
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Tuple

from load.csv_files import emit_neo4j_csv, emit_neptune_csv, emit_pgx_flat
from load.pg_json import emit_pg_json
from load.pg_text import emit_pg_text
from load.schema import EmissionTarget, OutputFormat
from models.pg import PropertyGraph

logger = getLogger(__name__)

RenderedFile = Tuple[Path, str]


def _single(emit: Callable[[PropertyGraph], str]):
    def render(graph: PropertyGraph, path: Path) -> List[RenderedFile]:
        return [(path, emit(graph))]
    return render


def _pair(emit: Callable[[PropertyGraph], Tuple[str, str]], first: str, second: str):
    def render(graph: PropertyGraph, path: Path) -> List[RenderedFile]:
        head, tail = emit(graph)
        return [(path / first, head), (path / second, tail)]
    return render


EMITTERS: Dict[OutputFormat, Callable[[PropertyGraph, Path], List[RenderedFile]]] = {
    OutputFormat.PG_TEXT: _single(emit_pg_text),
    OutputFormat.PG_JSON: _single(emit_pg_json),
    OutputFormat.NEO4J_CSV: _pair(emit_neo4j_csv, 'nodes.csv', 'edges.csv'),
    OutputFormat.PGX_FLAT: _pair(emit_pgx_flat, 'vertices.csv', 'edges.csv'),
    OutputFormat.NEPTUNE_CSV: _pair(emit_neptune_csv, 'nodes.csv', 'edges.csv'),
}


def render_target(graph: PropertyGraph, target: EmissionTarget) -> List[RenderedFile]:
    return EMITTERS[target.format](graph, target.output_path)


class GraphWriter:
    """Writes every target of a run, or none of them.

    All files are rendered before the first one is touched; each is written
    to a temporary file next to its destination and renamed into place.
    """

    def __init__(self, targets: Sequence[EmissionTarget]) -> None:
        self.targets = list(targets)
        self._pending: List[Path] = []

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        for temp in self._pending:
            try:
                temp.unlink()
            except FileNotFoundError:
                pass
            except OSError:
                logger.exception('Failed to remove temporary file %s', temp)
        self._pending.clear()

    def _stage(self, path: Path, content: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, name = tempfile.mkstemp(
            dir=path.parent, prefix=f'.{path.name}.', suffix='.tmp'
        )
        temp = Path(name)
        self._pending.append(temp)
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(content)
        return temp

    def write(self, graph: PropertyGraph) -> List[Path]:
        rendered = [
            file for target in self.targets for file in render_target(graph, target)
        ]
        staged = [(self._stage(path, content), path) for path, content in rendered]
        for temp, path in staged:
            os.replace(temp, path)
            self._pending.remove(temp)
            logger.info('Wrote %s', path)
        return [path for path, _ in rendered]
