"""Textual model language: parser, canonical serializer, exports."""

from .export import (
    export_dot,
    export_results_json,
    export_tree_json,
    tree_to_decl,
)
from .parser import parse_model
from .serializer import serialize_model
from .source import NodeRef, SourceModel, SystemDecl, TreeDecl

__all__ = [
    "parse_model",
    "serialize_model",
    "export_dot",
    "export_results_json",
    "export_tree_json",
    "tree_to_decl",
    "NodeRef",
    "SourceModel",
    "SystemDecl",
    "TreeDecl",
]
