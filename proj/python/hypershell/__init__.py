"""Hypergraph shells, pasting diagrams and hypercategories.

Documents are passed around as their JSON text, the same format the hgx tool
reads and writes.
"""

from ._hypershell import (
    InvalidDocument,
    SchemaError,
    SyntaxError,
    canonical_code,
    close,
    derive_category,
    document_kind,
    fixture,
    is_closed,
    lafont,
    monad_laws,
    render_dot,
    weak_check,
)

__all__ = [
    "InvalidDocument",
    "SchemaError",
    "SyntaxError",
    "canonical_code",
    "close",
    "derive_category",
    "document_kind",
    "fixture",
    "is_closed",
    "lafont",
    "monad_laws",
    "render_dot",
    "weak_check",
]
