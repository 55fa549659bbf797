from .codec import (
    KINDS,
    canonicalize,
    dumps,
    from_document,
    infer_kind,
    load,
    loads,
    save,
    to_document,
)

__all__ = [
    "KINDS",
    "canonicalize",
    "dumps",
    "from_document",
    "infer_kind",
    "load",
    "loads",
    "save",
    "to_document",
]
