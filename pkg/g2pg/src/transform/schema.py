from typing import List, Literal

from models.base import BaseModel


class MappingStats(BaseModel):
    kind: Literal['node', 'edge']
    name: str
    rows: int = 0
    emitted: int = 0
    dropped: int = 0
    skipped: int = 0


class RunReport(BaseModel):
    source: str
    mappings: List[MappingStats] = []
    nodes: int = 0
    edges: int = 0
    warnings: List[str] = []

    @property
    def dropped_edge_rows(self) -> int:
        return sum(m.dropped for m in self.mappings if m.kind == 'edge')

    def render(self) -> str:
        header = ('mapping', 'kind', 'rows', 'emitted', 'dropped', 'skipped')
        table = [header] + [
            (m.name, m.kind, str(m.rows), str(m.emitted), str(m.dropped), str(m.skipped))
            for m in self.mappings
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        lines = [f'source: {self.source}']
        for row in table:
            cells = [row[0].ljust(widths[0]), row[1].ljust(widths[1])]
            cells += [cell.rjust(width) for cell, width in zip(row[2:], widths[2:])]
            lines.append('  '.join(cells).rstrip())
        lines.append(f'nodes: {self.nodes}')
        lines.append(f'edges: {self.edges}')
        lines.append(f'dropped edge rows: {self.dropped_edge_rows}')
        if self.warnings:
            lines.append('warnings:')
            lines.extend(f'  {warning}' for warning in self.warnings)
        return '\n'.join(lines) + '\n'
