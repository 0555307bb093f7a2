
"""
The quantum Bruhat graph QBG(W), its parabolic version QBG(W^S), σ-restricted subgraphs, path
weights, label-increasing paths and the tilted Bruhat order.

Graphs are #networkx.MultiDiGraph instances whose nodes are Weyl element indices and whose edge keys
are positive root indices, so every (source, label) pair carries at most one edge.
"""

import dataclasses
import enum
import logging
import typing as t
from fractions import Fraction

import databind.json
import networkx as nx

from .cartan import CorootVector, ParabolicSubset, ReflectionOrder, RootVector, Weight, WeylElement, WeylGroup, pairing
from .exc import ArgumentError, InvariantViolation
from .types import EdgeKindName, GraphEdgeRecord, GraphExport

log = logging.getLogger(__name__)

Rational = t.Union[int, Fraction]


class EdgeKind(enum.Enum):
  BRUHAT = enum.auto()
  QUANTUM = enum.auto()


@dataclasses.dataclass(frozen=True)
class QbgEdge:
  source: WeylElement
  target: WeylElement
  label: RootVector
  kind: EdgeKind

  def __str__(self) -> str:
    arrow = '=>' if self.kind == EdgeKind.QUANTUM else '->'
    return f'{self.source} {arrow}{self.label} {self.target}'


class QuantumBruhatGraph:
  """
  QBG(W^S) on the minimal coset representatives for *S*; with `S = ∅` this is QBG(W). Distances and
  path weights from every vertex are computed by breadth-first search at construction time.

  Use #build_qbg() or #build_parabolic_qbg().
  """

  def __init__(self, W: WeylGroup, S: ParabolicSubset) -> None:
    self.W = W
    self.S = S
    self.datum = W.datum
    self.vertices: t.List[WeylElement] = W.min_coset_representatives(S)
    self.labels: t.List[RootVector] = self.datum.positive_roots_outside(S)
    self.graph = nx.MultiDiGraph()
    for v in self.vertices:
      self.graph.add_node(v.index, element=v)

    shifts = {b: self.datum.quantum_shift(b, S) for b in self.labels}
    for u in self.vertices:
      for beta in self.labels:
        v = W.coset_min(W.mul(u, W.reflection(beta)), S)
        if v.length == u.length + 1:
          kind = EdgeKind.BRUHAT
        elif v.length == u.length - shifts[beta] + 1:
          kind = EdgeKind.QUANTUM
        else:
          continue
        self.graph.add_edge(u.index, v.index, key=self.datum.root_index(beta), edge=QbgEdge(u, v, beta, kind))

    self._distance: t.Dict[int, t.Dict[int, int]] = {}
    self._weight: t.Dict[int, t.Dict[int, CorootVector]] = {}
    zero = CorootVector.zero(W.rank)
    for source in self.graph.nodes:
      distance = {source: 0}
      weight = {source: zero}
      for u, v in nx.bfs_edges(self.graph, source):
        edge = self._some_edge(u, v)
        distance[v] = distance[u] + 1
        weight[v] = weight[u] + self.edge_weight(edge)
      if len(distance) != len(self.vertices):
        raise InvariantViolation(f'{self.datum.name}: QBG(W^{S}) is not strongly connected')
      self._distance[source] = distance
      self._weight[source] = weight

    log.debug('%s: QBG(W^%s) has %d vertices, %d Bruhat and %d quantum edges', self.datum.name, S,
      len(self.vertices), self.edge_count(EdgeKind.BRUHAT), self.edge_count(EdgeKind.QUANTUM))

  def __repr__(self) -> str:
    return f'QuantumBruhatGraph({self.datum.name}, S={self.S})'

  def _some_edge(self, u: int, v: int) -> QbgEdge:
    key = min(self.graph[u][v])
    return self.graph[u][v][key]['edge']

  def __contains__(self, w: object) -> bool:
    return isinstance(w, WeylElement) and w.index in self.graph

  def _check_vertex(self, w: WeylElement) -> None:
    if w.index not in self.graph:
      raise ArgumentError(f'{w} is not a vertex of QBG(W^{self.S})')

  def edges(self) -> t.Iterator[QbgEdge]:
    for _u, _v, data in self.graph.edges(data=True):
      yield data['edge']

  def out_edges(self, u: WeylElement) -> t.List[QbgEdge]:
    self._check_vertex(u)
    return [data['edge'] for _u, _v, data in self.graph.out_edges(u.index, data=True)]

  def edge(self, u: WeylElement, label: RootVector) -> t.Optional[QbgEdge]:
    """ The edge leaving *u* with the given label, if any. """

    if u.index not in self.graph or not self.datum.is_root(label):
      return None
    key = self.datum.root_index(label)
    for _u, _v, k, data in self.graph.out_edges(u.index, keys=True, data=True):
      if k == key:
        return data['edge']
    return None

  def edge_count(self, kind: t.Optional[EdgeKind] = None) -> int:
    return sum(1 for e in self.edges() if kind is None or e.kind == kind)

  def edge_weight(self, edge: QbgEdge) -> CorootVector:
    """ β∨ for a quantum edge, zero for a Bruhat edge. """

    if edge.kind == EdgeKind.QUANTUM:
      return self.datum.coroot(edge.label)
    return CorootVector.zero(self.W.rank)

  def distance(self, u: WeylElement, v: WeylElement) -> int:
    """ ℓ(u ⇒ v), the length of a shortest directed path. """

    self._check_vertex(u)
    self._check_vertex(v)
    return self._distance[u.index][v.index]

  def path_weight(self, u: WeylElement, v: WeylElement) -> CorootVector:
    """ wt(u ⇒ v), the sum of β∨ over the quantum edges of one shortest path. """

    self._check_vertex(u)
    self._check_vertex(v)
    return self._weight[u.index][v.index]

  def _sorted_edges(self) -> t.List[QbgEdge]:
    return sorted(self.edges(), key=lambda e: (e.source.index, self.datum.root_index(e.label)))

  def to_export(self) -> GraphExport:
    return GraphExport(
      type=self.datum.name,
      parabolic=list(self.S),
      vertices=[str(v) for v in self.vertices],
      edges=[
        GraphEdgeRecord(str(e.source), str(e.target), list(e.label.coords), EdgeKindName[e.kind.name])
        for e in self._sorted_edges()])

  def to_json(self) -> t.Dict[str, t.Any]:
    return databind.json.dump(self.to_export(), GraphExport)  # type: ignore

  def to_dot(self) -> str:
    """ Graphviz source; quantum edges are dashed, labels are roots in simple-root coordinates. """

    lines = [f'digraph "QBG({self.datum.name}, S={self.S})" {{']
    for v in self.vertices:
      lines.append(f'  n{v.index} [label="{v}"];')
    for e in self._sorted_edges():
      style = ', style=dashed' if e.kind == EdgeKind.QUANTUM else ''
      lines.append(f'  n{e.source.index} -> n{e.target.index} [label="{e.label}"{style}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def build_qbg(W: WeylGroup) -> QuantumBruhatGraph:
  return QuantumBruhatGraph(W, ParabolicSubset())


def build_parabolic_qbg(W: WeylGroup, S: ParabolicSubset) -> QuantumBruhatGraph:
  if any(not 1 <= i <= W.rank for i in S):
    raise ArgumentError(f'{S} is not a subset of the Dynkin nodes of {W.datum.name}')
  return QuantumBruhatGraph(W, S)


class SigmaSubgraph:
  """
  QBG_{σλ}: the subgraph of *parent* keeping the edges whose label β satisfies σ⟨λ, β∨⟩ ∈ ℤ. The
  vertex set is unchanged; the view shares storage with the parent.
  """

  def __init__(self, parent: QuantumBruhatGraph, lam: Weight, sigma: Rational) -> None:
    self.parent = parent
    self.lam = lam
    self.sigma = Fraction(sigma)
    datum = parent.datum
    self.admitted_keys = frozenset(
      datum.root_index(b) for b in parent.labels
      if (self.sigma * pairing(lam, datum.coroot(b))).denominator == 1)
    self.view = nx.subgraph_view(parent.graph, filter_edge=lambda u, v, k: k in self.admitted_keys)
    self._ancestors: t.Dict[int, t.FrozenSet[int]] = {}

  def __repr__(self) -> str:
    return f'SigmaSubgraph({self.parent.datum.name}, λ={self.lam}, σ={self.sigma})'

  def admits(self, label: RootVector) -> bool:
    return self.parent.datum.root_index(label) in self.admitted_keys

  def edges(self) -> t.Iterator[QbgEdge]:
    for _u, _v, data in self.view.edges(data=True):
      yield data['edge']

  def ancestors(self, v: WeylElement) -> t.FrozenSet[int]:
    """ Indices of the vertices with a directed path to *v* (including *v*). """

    result = self._ancestors.get(v.index)
    if result is None:
      self.parent._check_vertex(v)
      result = self._ancestors[v.index] = frozenset(nx.ancestors(self.view, v.index)) | {v.index}
    return result

  def has_path(self, u: WeylElement, v: WeylElement) -> bool:
    return u.index in self.ancestors(v)

  def distance(self, u: WeylElement, v: WeylElement) -> t.Optional[int]:
    """ The restricted distance, #None if *v* is not reachable from *u*. """

    if not self.has_path(u, v):
      return None
    return nx.shortest_path_length(self.view, u.index, v.index)


def restrict_sigma(graph: QuantumBruhatGraph, lam: Weight, sigma: Rational) -> SigmaSubgraph:
  """
  # Raises
  ArgumentError: If σ lies outside [0, 1] or λ has the wrong rank.
  """

  if not 0 <= sigma <= 1:
    raise ArgumentError(f'σ = {sigma} lies outside [0, 1]')
  if lam.rank != graph.W.rank:
    raise ArgumentError(f'rank mismatch: {lam} for {graph.datum.name}')
  return SigmaSubgraph(graph, lam, sigma)


def wt_lambda(graph: QuantumBruhatGraph, u: WeylElement, v: WeylElement, lam: Weight) -> int:
  """ The λ-weight ⟨λ, wt(u ⇒ v)⟩. """

  return pairing(lam, graph.path_weight(u, v))


def parabolic_path_weight(graph: QuantumBruhatGraph, u: WeylElement, v: WeylElement, lam: Weight) -> int:
  """
  wt_λ(u ⇒ v) computed in QBG(W^S) for arbitrary representatives *u*, *v*, which are projected to
  their minimal coset representatives first.

  # Raises
  ArgumentError: If the graph's S differs from S_λ.
  """

  if graph.S != ParabolicSubset.of_weight(lam):
    raise ArgumentError(f'the λ-weight on W^S requires S = S_λ, got S = {graph.S} for λ = {lam}')
  W = graph.W
  return pairing(lam, graph.path_weight(W.coset_min(u, graph.S), W.coset_min(v, graph.S)))


def _greedy_path(
  graph: QuantumBruhatGraph,
  u: WeylElement,
  v: WeylElement,
  rank_of: t.Callable[[RootVector], int],
  labels: t.Optional[t.Collection[RootVector]],
  restriction: t.Optional[SigmaSubgraph],
) -> t.Optional[t.List[QbgEdge]]:
  allowed = None if labels is None else set(labels)
  path: t.List[QbgEdge] = []
  current = u
  while current != v:
    remaining = graph.distance(current, v)
    candidates = [
      e for e in graph.out_edges(current)
      if (allowed is None or e.label in allowed)
      and (restriction is None or restriction.admits(e.label))
      and graph.distance(e.target, v) == remaining - 1]
    if not candidates:
      return None
    step = min(candidates, key=lambda e: rank_of(e.label))
    if path and rank_of(step.label) <= rank_of(path[-1].label):
      return None
    path.append(step)
    current = step.target
  return path


def increasing_path(
  graph: QuantumBruhatGraph,
  u: WeylElement,
  v: WeylElement,
  order: ReflectionOrder,
  labels: t.Optional[t.Collection[RootVector]] = None,
  restriction: t.Optional[SigmaSubgraph] = None,
) -> t.Optional[t.List[QbgEdge]]:
  """
  The unique directed path from *u* to *v* whose labels strictly increase in *order*. It is built by
  always taking the smallest label that shortens the distance to *v*, which yields the
  lexicographically minimal shortest path.

  # Arguments
  labels: Only edges with these labels may be used.
  restriction: Only edges admitted by this σ-restricted subgraph may be used.

  # Returns
  The list of edges, or #None if no admissible label-increasing path exists.
  """

  return _greedy_path(graph, u, v, order.position, labels, restriction)


def decreasing_path(
  graph: QuantumBruhatGraph,
  u: WeylElement,
  v: WeylElement,
  order: ReflectionOrder,
  labels: t.Optional[t.Collection[RootVector]] = None,
  restriction: t.Optional[SigmaSubgraph] = None,
) -> t.Optional[t.List[QbgEdge]]:
  """ Mirror image of #increasing_path(); the result is lexicographically maximal. """

  return _greedy_path(graph, u, v, lambda b: -order.position(b), labels, restriction)


def all_shortest_paths(graph: QuantumBruhatGraph, u: WeylElement, v: WeylElement) -> t.Iterator[t.List[QbgEdge]]:
  """ Every shortest directed path from *u* to *v*, parallel edges counted separately. """

  def walk(current: WeylElement, prefix: t.List[QbgEdge]) -> t.Iterator[t.List[QbgEdge]]:
    if current == v:
      yield list(prefix)
      return
    remaining = graph.distance(current, v)
    for e in graph.out_edges(current):
      if graph.distance(e.target, v) == remaining - 1:
        prefix.append(e)
        yield from walk(e.target, prefix)
        prefix.pop()

  return walk(u, [])


def all_monotone_paths(
  graph: QuantumBruhatGraph,
  u: WeylElement,
  v: t.Optional[WeylElement],
  order: ReflectionOrder,
  increasing: bool = True,
) -> t.Iterator[t.List[QbgEdge]]:
  """
  Every directed path from *u* to *v*, of any length, whose labels are strictly monotone in *order*.
  With `v = None` the paths to all targets are produced. Strict monotonicity bounds the length by
  |Δ⁺|.
  """

  sign = 1 if increasing else -1

  def walk(current: WeylElement, prefix: t.List[QbgEdge]) -> t.Iterator[t.List[QbgEdge]]:
    if v is None or current == v:
      yield list(prefix)
    for e in graph.out_edges(current):
      if prefix and sign * order.position(e.label) <= sign * order.position(prefix[-1].label):
        continue
      prefix.append(e)
      yield from walk(e.target, prefix)
      prefix.pop()

  return walk(u, [])


def tilted_leq(graph: QuantumBruhatGraph, reference: WeylElement, x: WeylElement, y: WeylElement) -> bool:
  """ x ≤_ref y, i.e. ℓ(y ⇒ ref) = ℓ(y ⇒ x) + ℓ(x ⇒ ref). """

  return graph.distance(y, reference) == graph.distance(y, x) + graph.distance(x, reference)


def tilted_min(graph: QuantumBruhatGraph, coset: t.Sequence[WeylElement], reference: WeylElement) -> WeylElement:
  """
  The unique element of *coset* below every other member in the *reference*-tilted Bruhat order.
  """

  minima = [x for x in coset if all(tilted_leq(graph, reference, x, y) for y in coset)]
  if len(minima) != 1:
    raise InvariantViolation(f'coset of {coset[0]} has {len(minima)} minima in the {reference}-tilted order')
  return minima[0]


def coset_increasing_path(
  graph: QuantumBruhatGraph,
  v: WeylElement,
  reference: WeylElement,
  S: ParabolicSubset,
  order: ReflectionOrder,
  restriction: t.Optional[SigmaSubgraph] = None,
) -> t.Tuple[WeylElement, t.Optional[t.List[QbgEdge]]]:
  """
  The label-increasing path from some element of vW_S to *reference* with labels in Δ⁺ ∖ Δ⁺_S.
  Returns the start `min(vW_S, ≤_reference)` together with the path (#None if there is none).
  """

  W = graph.W
  start = tilted_min(graph, W.coset(v, S), reference)
  labels = W.datum.positive_roots_outside(S)
  return start, increasing_path(graph, start, reference, order, labels, restriction)


def reverse_edge(graph: QuantumBruhatGraph, edge: QbgEdge) -> QbgEdge:
  """
  The edge `y w₀ → x w₀` with label −w₀β attached to the edge `x → y` with label β. Both edges have
  the same kind.

  # Raises
  InvariantViolation: If the reversed edge is missing or of the other kind.
  """

  W = graph.W
  label = -W.act_root(W.longest, edge.label)
  source = W.mul(edge.target, W.longest)
  reversed_edge = graph.edge(source, label)
  if reversed_edge is None or reversed_edge.kind != edge.kind or reversed_edge.target != W.mul(edge.source, W.longest):
    raise InvariantViolation(f'{edge} has no reversed counterpart')
  return reversed_edge
