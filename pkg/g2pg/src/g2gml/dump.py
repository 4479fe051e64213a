from typing import List

from models.mapping import (EdgeMappingDef, MappingDocument, NodeMappingDef,
                            PropertyList)

INDENT = ' ' * 4


def format_properties(properties: PropertyList) -> str:
    if not properties:
        return ''
    body = ', '.join(f'{key}:{var}' for key, var in properties)
    return f' {{{body}}}'


def format_node_pattern(mapping: NodeMappingDef) -> str:
    return f'({mapping.node_var}:{mapping.label}{format_properties(mapping.properties)})'


def format_edge_pattern(mapping: EdgeMappingDef) -> str:
    return (
        f'({mapping.src_var}:{mapping.src_label})'
        f'-[:{mapping.edge_label}{format_properties(mapping.properties)}]->'
        f'({mapping.dst_var}:{mapping.dst_label})'
    )


def dump_document(document: MappingDocument) -> str:
    """Canonical G2GML text; parsing it again gives an equal document."""
    lines: List[str] = [
        f'PREFIX {name}: <{iri}>' for name, iri in document.prefixes.items()
    ]
    blocks = [
        (format_node_pattern(m), m.rdf_pattern_text) for m in document.node_mappings
    ] + [
        (format_edge_pattern(m), m.rdf_pattern_text) for m in document.edge_mappings
    ]
    for header, pattern_text in blocks:
        if lines:
            lines.append('')
        lines.append(header)
        lines.extend(
            INDENT + line for line in pattern_text.split('\n') if line.strip()
        )
    return '\n'.join(lines) + '\n'
