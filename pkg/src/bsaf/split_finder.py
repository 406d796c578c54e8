"""Discover valid cuts by condensing an argument dependency digraph.

Edges encode "must not come later than": an attack ``(T, h)`` draws
``t -> h`` for every tail member (attackers before their target), while
a support ``(T, h)`` draws ``h -> t`` (the supported head before its
tail).  With that orientation, every prefix of a topological order of
the strongly connected components is a valid cut: no attack enters the
prefix from outside and every crossing support points backward into it.

Only prefix cuts of one deterministic component order are emitted;
searching arbitrary antichains of the condensation is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ArgumentId, Extension, Framework


@dataclass(frozen=True)
class DependencyGraph:
    nodes: tuple[ArgumentId, ...]
    edges: frozenset[tuple[ArgumentId, ArgumentId]]


def dependency_graph(f: Framework) -> DependencyGraph:
    """Orientation: tail -> head for attacks, head -> tail for supports."""
    edges = set()
    for link in f.attacks:
        for t in link.tail:
            edges.add((t, link.head))
    for link in f.supports:
        for t in link.tail:
            edges.add((link.head, t))
    return DependencyGraph(nodes=f.args, edges=frozenset(edges))


def condense(g: DependencyGraph) -> tuple[frozenset[ArgumentId], ...]:
    """Strongly connected components in a topological order.

    Iterative Tarjan; vertices and neighbours are visited in index
    order, so the output is deterministic for a given graph.  Tarjan
    completes components sinks-first, hence the final reversal.
    """
    succ: dict[ArgumentId, list[ArgumentId]] = {v: [] for v in g.nodes}
    for a, b in sorted(g.edges, key=lambda e: (e[0].index, e[1].index)):
        succ[a].append(b)

    index: dict[ArgumentId, int] = {}
    lowlink: dict[ArgumentId, int] = {}
    on_stack: set[ArgumentId] = set()
    stack: list[ArgumentId] = []
    components: list[frozenset[ArgumentId]] = []
    counter = 0

    for root in g.nodes:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            for i in range(pos, len(succ[v])):
                w = succ[v][i]
                if w not in index:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w is v:
                        break
                components.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])

    components.reverse()
    return tuple(components)


def enumerate_cuts(f: Framework) -> list[Extension]:
    """Every nonempty proper topological prefix of the condensation, by size."""
    comps = condense(dependency_graph(f))
    cuts = []
    prefix: set[ArgumentId] = set()
    for comp in comps[:-1]:
        prefix |= comp
        cuts.append(Extension(frozenset(prefix)))
    return cuts


def best_cut(f: Framework) -> Extension | None:
    """The most balanced cut; ties prefer the smaller lower part."""
    cuts = enumerate_cuts(f)
    if not cuts:
        return None
    n = f.n

    def key(cut: Extension):
        size = len(cut.members)
        return (abs(size - (n - size)), size, tuple(sorted(cut.names)))

    return min(cuts, key=key)
