"""Spring-dashpot network language: parsing, transfer functions and Burgers reduction."""
from .network_expr import (
    NetworkExpr,
    Spring,
    Dashpot,
    Series,
    Parallel,
    series,
    parallel,
    format_network,
    element_count,
)
from .network_parser import NetworkParser, Token, tokenize, parse, ELEMENT_KEYWORDS
from .transfer_function import RationalTF, transfer_function, to_burgers
from .canonical import canonical_network


def compile_network(text: str):
    """Parse ``text`` and return (tree, transfer function)."""
    expr = parse(text)
    return expr, transfer_function(expr)


__all__ = [
    'NetworkExpr', 'Spring', 'Dashpot', 'Series', 'Parallel', 'series', 'parallel',
    'format_network', 'element_count', 'NetworkParser', 'Token', 'tokenize', 'parse',
    'ELEMENT_KEYWORDS', 'RationalTF', 'transfer_function', 'to_burgers', 'canonical_network',
    'compile_network',
]
