from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from models.rdf import RdfTerm, term_sort_key

Row = Tuple[Optional[RdfTerm], ...]


class BindingTable:
    """A set of solution mappings over an ordered set of columns.

    Rows are stored as tuples aligned with the columns, ``None`` meaning
    unbound. Duplicate rows are dropped on insertion, which gives the
    table SELECT DISTINCT semantics.
    """

    def __init__(self, columns: Sequence[str]) -> None:
        if len(set(columns)) != len(columns):
            raise ValueError(f'duplicate columns: {columns}')
        self.columns: Tuple[str, ...] = tuple(columns)
        self._index = {name: i for i, name in enumerate(self.columns)}
        self._rows: Dict[Row, None] = {}

    @classmethod
    def from_mappings(cls,
                      columns: Sequence[str],
                      mappings: Iterable[Mapping[str, RdfTerm]],
                      ) -> 'BindingTable':
        table = cls(columns)
        for mapping in mappings:
            table.add(mapping)
        return table

    def add(self, mapping: Mapping[str, RdfTerm]) -> None:
        unknown = set(mapping) - set(self._index)
        if unknown:
            raise ValueError(f'variables outside the columns: {sorted(unknown)}')
        self._rows.setdefault(
            tuple(mapping.get(name) for name in self.columns), None
        )

    def add_row(self, row: Row) -> None:
        if len(row) != len(self.columns):
            raise ValueError('row width differs from the column count')
        self._rows.setdefault(tuple(row), None)

    def extend(self, other: 'BindingTable') -> None:
        for mapping in other:
            self.add(mapping)

    def project(self, columns: Sequence[str]) -> 'BindingTable':
        projected = BindingTable(columns)
        positions = [self._index.get(name) for name in columns]
        for row in self._rows:
            projected.add_row(tuple(
                None if position is None else row[position]
                for position in positions
            ))
        return projected

    @property
    def rows(self) -> Tuple[Row, ...]:
        return tuple(self._rows)

    def sorted_rows(self) -> Tuple[Row, ...]:
        return tuple(sorted(
            self._rows,
            key=lambda row: tuple(term_sort_key(term) for term in row),
        ))

    def row_set(self) -> frozenset:
        """Rows as a set of (variable, term) sets, independent of column order."""
        return frozenset(
            frozenset(
                (name, term)
                for name, term in zip(self.columns, row)
                if term is not None
            )
            for row in self._rows
        )

    def __iter__(self) -> Iterator[Dict[str, RdfTerm]]:
        for row in self._rows:
            yield {
                name: term
                for name, term in zip(self.columns, row)
                if term is not None
            }

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BindingTable):
            return NotImplemented
        return (set(self.columns) == set(other.columns)
                and self.row_set() == other.row_set())

    def __repr__(self) -> str:
        return f'BindingTable(columns={self.columns}, rows={len(self)})'
