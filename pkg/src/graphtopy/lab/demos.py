"""
Scripted reproductions of the counting arguments.

Every verdict is an exact computation on explicitly built objects, and the
enumeration order is fixed, so reports are identical across runs.
"""

from graphtopy.core.errors import DisconnectedGraphError, FlavorMismatchError
from graphtopy.core.logging import get_logger
from graphtopy.coverings.category import covering_weak_equiv
from graphtopy.coverings.coloring import find_n_coloring
from graphtopy.graphs.builders import (
    cherry,
    cherry_to_digon,
    cycle_quotient,
    digon_to_arc,
    elementary_folding,
    path,
    undirected_arc,
    undirected_cycle,
)
from graphtopy.graphs.components import is_connected
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.graphs.limits import pullback, pushout
from graphtopy.graphs.models import GraphMorphism, UndirectedGraph, identity
from graphtopy.graphs.validation import ensure_valid_morphism
from graphtopy.gsets.cayley import cayley_directed
from graphtopy.gsets.dessins import d0, d1, dessin_bipartite, state_collapse
from graphtopy.gsets.homotopy import weak_equiv_gsets
from graphtopy.zeta.counting import cycle_count_vector, nb_count_vector
from graphtopy.zeta.homs import BijectivityReport, counting_bijectivity
from graphtopy.zeta.zeta import ihara_rational, zeta_rational

from .reports import DemoReport

logger = get_logger(__name__)

THEOREM_BOUND = 8


def _rows(report: BijectivityReport) -> list[dict]:
    return [{**r._asdict(), "bijective": r.bijective} for r in report.rows]


# =============================================================================
# Rigidity of cycle counting on all undirected cycles
# =============================================================================


def demo_prop_4_8(f: GraphMorphism, bound: int | None = None) -> DemoReport:
    """Counting all cycles c^p_U (backtracking included) detects isomorphisms.

    The default bound is the total number of arcs of both graphs.
    """
    ensure_valid_morphism(f)
    x, y = f.domain, f.codomain
    if not isinstance(x, UndirectedGraph) or not isinstance(y, UndirectedGraph):
        raise FlavorMismatchError("Cycle rigidity is stated for undirected graphs")
    for g in (x, y):
        if not is_connected(g):
            raise DisconnectedGraphError("Both graphs must be connected", repr(g))
    if bound is None:
        bound = len(x.arcs) + len(y.arcs)

    report = DemoReport(demo="prop-4-8")
    counting = counting_bijectivity(f, bound, "undirected")
    report.add(
        f"f is bijective on Hom(c^p_U, -) for p <= {bound}",
        counting.bijective,
        expected=None,
        first_failure=counting.first_failure,
        rows=_rows(counting),
    )
    if counting.bijective:
        witness = is_isomorphic(x, y)
        report.add(
            "Bijective cycle counting comes with an isomorphism",
            witness is not None and f.is_invertible(),
            f_invertible=f.is_invertible(),
            witness=witness is not None,
        )
    else:
        report.add(
            "A failing length is reported",
            counting.first_failure is not None,
            least_failing_p=counting.first_failure,
        )
    logger.info("Rigidity demo finished", bound=bound, bijective=counting.bijective)
    return report


def prop_4_8_examples() -> list[tuple[str, GraphMorphism]]:
    return [
        ("identity of c^3_U", identity(undirected_cycle(3))),
        ("elementary folding V_U -> A_U", elementary_folding()),
        ("quotient c^4_U -> c^2_U", cycle_quotient(4, 2)),
    ]


def demo_prop_4_8_examples() -> DemoReport:
    report = DemoReport(demo="prop-4-8")
    for name, f in prop_4_8_examples():
        report.extend(demo_prop_4_8(f), prefix=f"[{name}] ")
    return report


# =============================================================================
# Non-existence of a model structure with W_U as weak equivalences
# =============================================================================


def demo_theorem_4_9() -> DemoReport:
    report = DemoReport(demo="theorem-4-9")
    fold, to_digon, to_arc = elementary_folding(), cherry_to_digon(), digon_to_arc()
    digon = undirected_cycle(2)

    # (a) trees carry no non-backtracking cycles
    before = nb_count_vector(cherry(), THEOREM_BOUND)
    after = nb_count_vector(undirected_arc(), THEOREM_BOUND)
    folding = counting_bijectivity(fold, THEOREM_BOUND, "nonbacktracking")
    report.add(
        f"(a) the elementary folding is in W_U up to p = {THEOREM_BOUND}",
        folding.bijective and not any(before.values()) and not any(after.values()),
        c_p_V_U=before,
        c_p_A_U=after,
    )

    # (b) pushout of l along the folding
    graph, left, _ = pushout(to_digon, fold)
    digon_counts = nb_count_vector(digon, THEOREM_BOUND)
    pushout_counts = nb_count_vector(graph, THEOREM_BOUND)  # type: ignore[arg-type]
    leg = counting_bijectivity(left, THEOREM_BOUND, "nonbacktracking")
    report.add(
        "(b) the pushout of l along the folding changes the count of nb 2-cycles",
        digon_counts[2] != pushout_counts[2],
        c_2_before=digon_counts[2],
        c_2_after=pushout_counts[2],
        pushout_nodes=len(graph.nodes),
        pushout_arcs=len(graph.arcs),  # type: ignore[union-attr]
    )
    report.add(
        "(b) the induced map c^2_U -> pushout is in W_U",
        leg.bijective,
        expected=False,
        first_failure=leg.first_failure,
    )

    # (c) pullback of the folding along m
    graph, _, right = pullback(fold, to_arc)
    counts = nb_count_vector(graph, 2)  # type: ignore[arg-type]
    projection = counting_bijectivity(right, THEOREM_BOUND, "nonbacktracking")
    report.add(
        "(c) the pullback of f along m is two digons sharing a node",
        len(graph.nodes) == 3 and len(graph.arcs) == 4,  # type: ignore[union-attr]
        nodes=len(graph.nodes),
        arcs=len(graph.arcs),  # type: ignore[union-attr]
    )
    report.add(
        "(c) the pulled back projection to c^2_U is a weak equivalence",
        projection.bijective,
        expected=False,
        c_2_pullback=counts[2],
        c_2_base=digon_counts[2],
        first_failure=projection.first_failure,
    )
    return report


# =============================================================================
# The dessins D_0 and D_1
# =============================================================================


def demo_dessins_d0_d1(bound: int = 6) -> DemoReport:
    report = DemoReport(demo="dessins-d0-d1")
    x, y = d0(), d1()
    gx, gy = cayley_directed(x.action), cayley_directed(y.action)

    zx, zy = zeta_rational(gx), zeta_rational(gy)
    report.add(
        "Both Cayley graphs have reciprocal zeta 1 - 2t",
        zx.coeffs == zy.coeffs == (1, -2),
        D_0=str(zx),
        D_1=str(zy),
    )
    nx_counts, ny_counts = cycle_count_vector(gx, bound), cycle_count_vector(gy, bound)
    report.add(
        f"n_p = 2^p on both sides for p <= {bound}",
        all(nx_counts[p] == ny_counts[p] == 2**p for p in range(1, bound + 1)),
        D_0=nx_counts,
        D_1=ny_counts,
    )
    report.add(
        "D_0 and D_1 are weakly equivalent",
        weak_equiv_gsets(x.action, y.action),
    )
    report.add(
        "Their Cayley graphs are isomorphic",
        is_isomorphic(gx, gy) is not None,
        expected=False,
        nodes=[len(gx.nodes), len(gy.nodes)],
    )
    collapse = counting_bijectivity(state_collapse(), bound, "directed")
    report.add(
        "The state collapse Cal(D_1) -> Cal(D_0) is bijective on closed walks",
        collapse.bijective,
        rows=_rows(collapse),
    )
    report.add(
        "The underlying graphs are A_U and the path with two arcs",
        is_isomorphic(dessin_bipartite(x), undirected_arc()) is not None
        and is_isomorphic(dessin_bipartite(y), path(3)) is not None,
    )
    return report


# =============================================================================
# Covering weak equivalences over B_2
# =============================================================================


def _rotation(p: int, r: int) -> GraphMorphism:
    cycle = undirected_cycle(p)
    return GraphMorphism(
        domain=cycle,
        codomain=cycle,
        f0={str(n): str((n + r) % p) for n in range(p)},
        f1={f"{n}{s}": f"{(n + r) % p}{s}" for n in range(p) for s in "+-"},
    )


def _color_matching(h: GraphMorphism) -> dict[str, str] | None:
    """Colors domain and codomain of h separately; the color renaming h induces.

    None when either side has no 2-coloring or h sends one color class into
    two.
    """
    domain = find_n_coloring(h.domain, 2)  # type: ignore[arg-type]
    codomain = find_n_coloring(h.codomain, 2)  # type: ignore[arg-type]
    if domain is None or codomain is None:
        return None
    pairs = {
        (domain.morphism.f1[e], codomain.morphism.f1[h.f1[e]])
        for e in h.domain.edges
    }
    renaming = dict(pairs)
    if len(renaming) != len(pairs) or len(set(renaming.values())) != len(pairs):
        return None
    return renaming


def demo_prop_5_4(bound: int = 8) -> DemoReport:
    """A covering weak equivalence and a covering that is not one, over B_2."""
    report = DemoReport(demo="prop-5-4")
    for name, h, expected in (
        ("rotation of c^4_U by two steps", _rotation(4, 2), True),
        ("quotient c^8_U -> c^4_U", cycle_quotient(8, 4), False),
    ):
        renaming = _color_matching(h)
        report.add(
            f"[{name}] maps a 2-coloring of its domain onto one of its codomain",
            renaming is not None,
            renaming=renaming,
        )
        weak = covering_weak_equiv(h, bound)
        left = ihara_rational(h.domain)  # type: ignore[arg-type]
        right = ihara_rational(h.codomain)  # type: ignore[arg-type]
        report.add(
            f"[{name}] is a covering weak equivalence",
            weak.holds,
            expected=expected,
            first_failure=weak.report.first_failure,
        )
        report.add(
            f"[{name}] Ihara functions agree exactly when it is one",
            (left == right) == weak.holds,
            ihara_domain=str(left),
            ihara_codomain=str(right),
        )
    return report


DEMOS = {
    "theorem-4-9": demo_theorem_4_9,
    "prop-4-8": demo_prop_4_8_examples,
    "dessins-d0-d1": demo_dessins_d0_d1,
    "prop-5-4": demo_prop_5_4,
}
