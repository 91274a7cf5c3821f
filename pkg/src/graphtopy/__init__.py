"""graphtopy package public API (lazy exports)

루트에서는 sympy / networkx 를 쓰는 서브모듈을 즉시 import 하지 않고,
요청 시점에 지연 로딩합니다.

    from graphtopy import standard_graph, zeta_rational, cayley_directed

내부적으로는 PEP 562의 __getattr__을 활용해 필요한 기호만 지연 import 합니다.
"""

from __future__ import annotations

import importlib
from typing import TYPE_CHECKING

__version__ = "0.1.0"

# 지연 로딩 매핑: 심볼명 -> (모듈경로, 속성명)
_EXPORTS = {
    # Core
    "settings": ("graphtopy.core.config", "settings"),
    "limits": ("graphtopy.core.config", "limits"),
    "get_logger": ("graphtopy.core.logging", "get_logger"),
    "setup_logging": ("graphtopy.core.logging", "setup_logging"),
    "GraphtopyError": ("graphtopy.core.errors", "GraphtopyError"),
    # Graphs
    "DirectedGraph": ("graphtopy.graphs.models", "DirectedGraph"),
    "UndirectedGraph": ("graphtopy.graphs.models", "UndirectedGraph"),
    "GraphMorphism": ("graphtopy.graphs.models", "GraphMorphism"),
    "standard_graph": ("graphtopy.graphs.builders", "standard_graph"),
    "is_isomorphic": ("graphtopy.graphs.isomorphism", "is_isomorphic"),
    "graph_sum": ("graphtopy.graphs.limits", "graph_sum"),
    "product": ("graphtopy.graphs.limits", "product"),
    "pushout": ("graphtopy.graphs.limits", "pushout"),
    "pullback": ("graphtopy.graphs.limits", "pullback"),
    "parse_graph": ("graphtopy.graphs.serialization", "parse_graph"),
    "graph_to_json": ("graphtopy.graphs.serialization", "graph_to_json"),
    # Zeta
    "enumerate_homs": ("graphtopy.zeta.homs", "enumerate_homs"),
    "counting_bijectivity": ("graphtopy.zeta.homs", "counting_bijectivity"),
    "zeta_series": ("graphtopy.zeta.zeta", "zeta_series"),
    "zeta_rational": ("graphtopy.zeta.zeta", "zeta_rational"),
    "ihara_series": ("graphtopy.zeta.zeta", "ihara_series"),
    "ihara_rational": ("graphtopy.zeta.zeta", "ihara_rational"),
    "weak_equiv_directed": ("graphtopy.zeta.zeta", "weak_equiv_directed"),
    "primitive_multiplicities": (
        "graphtopy.zeta.replacement",
        "primitive_multiplicities",
    ),
    # Coverings
    "Covering": ("graphtopy.coverings.covering", "Covering"),
    "find_n_coloring": ("graphtopy.coverings.coloring", "find_n_coloring"),
    "covering_weak_equiv": ("graphtopy.coverings.category", "covering_weak_equiv"),
    # G-sets
    "GSetAction": ("graphtopy.gsets.action", "GSetAction"),
    "cayley_directed": ("graphtopy.gsets.cayley", "cayley_directed"),
    "cayley_undirected": ("graphtopy.gsets.cayley", "cayley_undirected"),
    "weak_equiv_gsets": ("graphtopy.gsets.homotopy", "weak_equiv_gsets"),
    # Lab
    "DemoReport": ("graphtopy.lab.reports", "DemoReport"),
}

__all__ = ["__version__", *_EXPORTS]


def __getattr__(name: str):
    target = _EXPORTS.get(name)
    if not target:
        raise AttributeError(f"module 'graphtopy' has no attribute {name!r}")
    module_name, attr_name = target
    module = importlib.import_module(module_name)
    try:
        attr = getattr(module, attr_name)
    except AttributeError as e:
        raise AttributeError(
            f"Failed to resolve attribute {name!r} from {module_name}.{attr_name}"
        ) from e
    globals()[name] = attr  # cache for future lookups
    return attr


def __dir__():  # pragma: no cover
    return sorted(list(globals().keys()) + list(__all__))


if TYPE_CHECKING:  # 타입체커를 위한 정적 import (런타임에는 지연 로딩)
    from .core.config import limits as limits
    from .core.config import settings as settings
    from .core.errors import GraphtopyError as GraphtopyError
    from .core.logging import get_logger as get_logger
    from .core.logging import setup_logging as setup_logging
    from .coverings.category import covering_weak_equiv as covering_weak_equiv
    from .coverings.coloring import find_n_coloring as find_n_coloring
    from .coverings.covering import Covering as Covering
    from .graphs.builders import standard_graph as standard_graph
    from .graphs.isomorphism import is_isomorphic as is_isomorphic
    from .graphs.limits import graph_sum as graph_sum
    from .graphs.limits import product as product
    from .graphs.limits import pullback as pullback
    from .graphs.limits import pushout as pushout
    from .graphs.models import DirectedGraph as DirectedGraph
    from .graphs.models import GraphMorphism as GraphMorphism
    from .graphs.models import UndirectedGraph as UndirectedGraph
    from .graphs.serialization import graph_to_json as graph_to_json
    from .graphs.serialization import parse_graph as parse_graph
    from .gsets.action import GSetAction as GSetAction
    from .gsets.cayley import cayley_directed as cayley_directed
    from .gsets.cayley import cayley_undirected as cayley_undirected
    from .gsets.homotopy import weak_equiv_gsets as weak_equiv_gsets
    from .lab.reports import DemoReport as DemoReport
    from .zeta.homs import counting_bijectivity as counting_bijectivity
    from .zeta.homs import enumerate_homs as enumerate_homs
    from .zeta.replacement import primitive_multiplicities as primitive_multiplicities
    from .zeta.zeta import ihara_rational as ihara_rational
    from .zeta.zeta import ihara_series as ihara_series
    from .zeta.zeta import weak_equiv_directed as weak_equiv_directed
    from .zeta.zeta import zeta_rational as zeta_rational
    from .zeta.zeta import zeta_series as zeta_series
