"""Structural validation of graphs and morphisms.

Validators never raise: they return a list of diagnostics naming the offending
ids. `ensure_valid` turns a non-empty list into an InvalidGraphError.
"""

from graphtopy.core.errors import Diagnostic, InvalidGraphError

from .models import DirectedGraph, Graph, GraphMorphism, UndirectedGraph

CODE = "GT-001"


def _check_incidence(
    ids: frozenset[str],
    nodes: frozenset[str],
    table,
    label: str,
) -> list[Diagnostic]:
    found = []
    for e in sorted(ids):
        if e not in table:
            found.append(Diagnostic(CODE, f"missing {label}", e))
        elif table[e] not in nodes:
            found.append(Diagnostic(CODE, f"dangling {label}", e))
    for e in sorted(set(table) - ids):
        found.append(Diagnostic(CODE, f"{label} defined on unknown element", e))
    return found


def validate_directed(g: DirectedGraph) -> list[Diagnostic]:
    """src and tgt total on arcs and landing in nodes."""
    return _check_incidence(g.arcs, g.nodes, g.src, "source") + _check_incidence(
        g.arcs, g.nodes, g.tgt, "target"
    )


def validate_undirected(g: UndirectedGraph) -> list[Diagnostic]:
    """Incidence plus inv∘inv = id and s∘i = t; degenerate loops pass."""
    found = _check_incidence(g.halfarcs, g.nodes, g.src, "source")
    found += _check_incidence(g.halfarcs, g.nodes, g.tgt, "target")
    for h in sorted(g.halfarcs):
        if h not in g.inv:
            found.append(Diagnostic(CODE, "missing involution", h))
            continue
        j = g.inv[h]
        if j not in g.halfarcs:
            found.append(Diagnostic(CODE, "dangling involution", h))
            continue
        if g.inv.get(j) != h:
            found.append(Diagnostic(CODE, "involution is not an involution", h))
        if g.src.get(j) != g.tgt.get(h):
            found.append(Diagnostic(CODE, "involution breaks s∘i=t", h))
    return found


def validate(g: Graph) -> list[Diagnostic]:
    if isinstance(g, UndirectedGraph):
        return validate_undirected(g)
    return validate_directed(g)


def validate_morphism(f: GraphMorphism) -> list[Diagnostic]:
    """Naturality squares commute pointwise (and f1∘i = i∘f1 when undirected).

    A malformed domain or codomain is reported first and stops the check.
    """
    x, y = f.domain, f.codomain
    if x.flavor != y.flavor:
        return [Diagnostic(CODE, "domain and codomain flavors differ")]
    found = [
        Diagnostic(d.code, f"{side}: {d.message}", d.subject)
        for side, g in (("domain", x), ("codomain", y))
        for d in validate(g)
    ]
    if found:
        return found
    found = []
    for n in sorted(x.nodes):
        if f.f0.get(n) not in y.nodes:
            found.append(Diagnostic(CODE, "node image missing or dangling", n))
    for e in x.sorted_edges:
        image = f.f1.get(e)
        if image not in y.edges:
            found.append(Diagnostic(CODE, "edge image missing or dangling", e))
            continue
        if f.f0.get(x.src[e]) != y.src[image]:
            found.append(Diagnostic(CODE, "f0∘src ≠ src∘f1", e))
        if f.f0.get(x.tgt[e]) != y.tgt[image]:
            found.append(Diagnostic(CODE, "f0∘tgt ≠ tgt∘f1", e))
        if isinstance(x, UndirectedGraph) and isinstance(y, UndirectedGraph):
            if f.f1.get(x.inv[e]) != y.inv[image]:
                found.append(Diagnostic(CODE, "f1∘inv ≠ inv∘f1", e))
    return found


def ensure_valid(g: Graph) -> Graph:
    found = validate(g)
    if found:
        raise InvalidGraphError(
            "; ".join(d.message for d in found), subject=found[0].subject
        )
    return g


def ensure_valid_morphism(f: GraphMorphism) -> GraphMorphism:
    found = validate_morphism(f)
    if found:
        raise InvalidGraphError(
            "; ".join(d.message for d in found), subject=found[0].subject
        )
    return f
