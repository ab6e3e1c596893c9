"""
Prelude declarations, one module per concern. ``all_declarations`` lists them
in load order; names are resolved lazily so order only matters for export.
"""
from . import arith, corpus, decidable, inductives, integers, logic, univalent


def all_declarations():
    return [
        *inductives.declarations(),
        *logic.declarations(),
        *univalent.declarations(),
        *univalent.self_relation_declarations(),
        *arith.declarations(),
        *decidable.declarations(),
        *integers.declarations(),
        *corpus.declarations(),
    ]
