from collections import defaultdict
from typing import Dict, Iterable, Iterator, Optional, Set

from models.rdf import RdfTerm, Triple, validate_triple


class RdfGraph:
    """An in-memory triple set indexed by subject, predicate and object.

    Graphs are filled by the loaders and treated as read-only afterwards.
    """

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self._triples: Set[Triple] = set()
        self._by_subject: Dict[RdfTerm, Set[Triple]] = defaultdict(set)
        self._by_predicate: Dict[RdfTerm, Set[Triple]] = defaultdict(set)
        self._by_object: Dict[RdfTerm, Set[Triple]] = defaultdict(set)
        for triple in triples:
            self.add(triple)

    def add(self, triple: Triple) -> None:
        triple = validate_triple(Triple(*triple))
        if triple in self._triples:
            return
        self._triples.add(triple)
        self._by_subject[triple.subject].add(triple)
        self._by_predicate[triple.predicate].add(triple)
        self._by_object[triple.object].add(triple)

    def match(self,
              s: Optional[RdfTerm] = None,
              p: Optional[RdfTerm] = None,
              o: Optional[RdfTerm] = None,
              ) -> Iterator[Triple]:
        """Triples agreeing with every bound position; None is a wildcard."""
        candidates: Optional[Set[Triple]] = None
        for term, index in ((s, self._by_subject),
                            (p, self._by_predicate),
                            (o, self._by_object)):
            if term is None:
                continue
            found = index.get(term)
            if not found:
                return
            if candidates is None or len(found) < len(candidates):
                candidates = found
        if candidates is None:
            candidates = self._triples
        for triple in tuple(candidates):
            if ((s is None or triple.subject == s)
                    and (p is None or triple.predicate == p)
                    and (o is None or triple.object == o)):
                yield triple

    def terms(self) -> Set[RdfTerm]:
        universe: Set[RdfTerm] = set()
        for triple in self._triples:
            universe.update(triple)
        return universe

    @property
    def triples(self) -> frozenset:
        return frozenset(self._triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __len__(self) -> int:
        return len(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RdfGraph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        return f'RdfGraph(triples={len(self)})'
