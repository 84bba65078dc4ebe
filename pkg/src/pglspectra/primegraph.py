"""Prime graphs (Gruenberg-Kegel graphs) built from element-order spectra.

Vertices are the primes dividing some element order; two primes r, s are
adjacent exactly when r*s is itself an element order.  Since the spectrum
is divisor-closed, r*s lies in it iff r*s divides some maximal order, so
adjacency is decided on mu directly and omega is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrime
from .numtheory import factor, is_prime
from .spectra import Spectrum


@dataclass(frozen=True)
class PrimeGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]  # pairs (r, s) with r < s

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for r, s in self.edges:
            if r == v:
                out.add(s)
            elif s == v:
                out.add(r)
        return out

    def is_isolated(self, v: int) -> bool:
        return v in self.vertices and not any(v in e for e in self.edges)


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components, ordered: the one containing 2 first (when 2 is
    a vertex), the rest by smallest member ascending."""

    components: tuple[frozenset[int], ...]

    @property
    def t(self) -> int:
        return len(self.components)


def build_graph(s: Spectrum) -> PrimeGraph:
    """The prime graph of a spectrum.

    Needs the complete factorization of every maximal order; an incomplete
    one poisons the whole graph with FactorizationIncomplete rather than
    producing a silently partial vertex set.
    """
    mu = s.sorted_mu()
    vertices: set[int] = set()
    for m in mu:
        vertices.update(factor(m).require_complete().primes())
    verts = sorted(vertices)
    edges = set()
    for i, r in enumerate(verts):
        for t in verts[i + 1:]:
            rs = r * t
            if any(m % rs == 0 for m in mu):
                edges.add((r, t))
    return PrimeGraph(frozenset(vertices), frozenset(edges))


def components(g: PrimeGraph) -> ComponentPartition:
    """Connected components by traversal, in the documented stable order."""
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices}
    for r, s in g.edges:
        adjacency[r].add(s)
        adjacency[s].add(r)
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v] - comp)
        seen |= comp
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (2 not in c, min(c)))
    return ComponentPartition(tuple(comps))


@dataclass(frozen=True)
class ComponentSpectra:
    """mu restricted to each component; tail_singletons[i] says whether the
    (i+2)-nd component carries exactly one maximal order."""

    mu_sets: tuple[frozenset[int], ...]
    tail_singletons: tuple[bool, ...]


def mu_components(s: Spectrum, part: ComponentPartition) -> ComponentSpectra:
    """Split mu by component: mu_i = {m in mu : all primes of m lie in pi_i}.

    Every maximal order lands in exactly one component because its prime
    divisors are pairwise adjacent.
    """
    mu_sets = []
    for comp in part.components:
        members = set()
        for m in s.mu:
            if all(p in comp for p in factor(m).require_complete().primes()):
                members.add(m)
        mu_sets.append(frozenset(members))
    return ComponentSpectra(
        mu_sets=tuple(mu_sets),
        tail_singletons=tuple(len(ms) == 1 for ms in mu_sets[1:]),
    )


def is_cpp_candidate(s: Spectrum, p: int) -> bool:
    """Spectrum-level necessary condition for the C_pp property.

    True iff p divides some element order and p is an isolated vertex of
    the prime graph (no element order p*r with r != p).  This does not
    decide the centralizer-theoretic C_pp property itself, only its
    spectrum shadow, hence "candidate".
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not any(m % p == 0 for m in s.mu):
        return False
    return build_graph(s).is_isolated(p)


def to_dot(g: PrimeGraph, part: ComponentPartition | None = None,
           label: str = "") -> str:
    """Render the graph in DOT format with stable ascending-prime ordering."""
    comp_of: dict[int, int] = {}
    if part is not None:
        for idx, comp in enumerate(part.components, start=1):
            for v in comp:
                comp_of[v] = idx
    lines = ["graph primegraph {"]
    if label:
        lines.append(f'  label="{label}";')
    for v in sorted(g.vertices):
        if comp_of:
            lines.append(f'  "{v}" [component={comp_of[v]}];')
        else:
            lines.append(f'  "{v}";')
    for r, s in sorted(g.edges):
        lines.append(f'  "{r}" -- "{s}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
