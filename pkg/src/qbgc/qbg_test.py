
import itertools
from fractions import Fraction

import pytest

from qbgc.affine import inversion_table
from qbgc.cartan import CorootVector, ParabolicSubset, RootVector, Weight, build_root_system, reflection_order, weyl_enumerate
from qbgc.exc import ArgumentError
from qbgc.qbg import (
  EdgeKind, all_monotone_paths, all_shortest_paths, build_parabolic_qbg, build_qbg, coset_increasing_path,
  decreasing_path, increasing_path, parabolic_path_weight, restrict_sigma, reverse_edge, tilted_leq, tilted_min,
  wt_lambda)
from qbgc.qls import candidate_breaks
from qbgc.session import open_session


def _qbg(series: str, rank: int):
  return build_qbg(weyl_enumerate(build_root_system(series, rank)))


def test__build_qbg__rank_one() -> None:
  graph = _qbg('A', 1)
  W = graph.W
  e, s = W.identity, W.generator(1)
  edges = sorted(graph.edges(), key=lambda x: x.source.index)
  assert [(x.source, x.target, x.kind) for x in edges] == [(e, s, EdgeKind.BRUHAT), (s, e, EdgeKind.QUANTUM)]
  assert all(x.label == RootVector((1,)) for x in edges)


def test__build_qbg__edge_counts() -> None:
  """
  A2 has eight Bruhat covers and seven quantum edges: one per right descent plus w₀ → e along θ.
  """

  graph = _qbg('A', 2)
  assert graph.edge_count(EdgeKind.BRUHAT) == 8
  assert graph.edge_count(EdgeKind.QUANTUM) == 7
  W = graph.W
  theta = W.datum.highest_root
  edge = graph.edge(W.longest, theta)
  assert edge is not None and edge.kind == EdgeKind.QUANTUM and edge.target == W.identity


def test__build_parabolic_qbg__empty_subset_is_the_full_graph() -> None:
  graph = _qbg('B', 2)
  parabolic = build_parabolic_qbg(graph.W, ParabolicSubset())
  assert {(e.source, e.target, e.label) for e in parabolic.edges()} == {(e.source, e.target, e.label) for e in graph.edges()}
  with pytest.raises(ArgumentError):
    build_parabolic_qbg(graph.W, ParabolicSubset.of(3))


def test__build_parabolic_qbg__vertices_are_minimal_representatives() -> None:
  graph = _qbg('A', 2)
  W = graph.W
  parabolic = build_parabolic_qbg(W, ParabolicSubset.of(2))
  assert [str(v) for v in parabolic.vertices] == ['e', 's1', 's2 s1']
  assert all(e.label != RootVector((0, 1)) for e in parabolic.edges())
  for u in parabolic.vertices:
    for v in parabolic.vertices:
      assert parabolic.distance(u, v) >= 0


def test__QuantumBruhatGraph__path_weights() -> None:
  graph = _qbg('A', 1)
  W = graph.W
  s = W.generator(1)
  assert graph.path_weight(W.identity, W.longest).is_zero()
  assert graph.path_weight(s, W.identity) == CorootVector((1,))
  assert wt_lambda(graph, s, W.identity, Weight((1,))) == 1
  assert graph.distance(s, W.identity) == 1

  a2 = _qbg('A', 2)
  assert a2.path_weight(a2.W.identity, a2.W.longest).is_zero()


def test__QuantumBruhatGraph__to_dot_marks_quantum_edges() -> None:
  dot = _qbg('A', 1).to_dot()
  assert dot.startswith('digraph')
  assert 'n0 -> n1 [label="(1)"];' in dot
  assert 'n1 -> n0 [label="(1)", style=dashed];' in dot


def test__QuantumBruhatGraph__to_json() -> None:
  data = _qbg('A', 1).to_json()
  assert data['type'] == 'A1'
  assert data['vertices'] == ['e', 's1']
  assert [e['kind'] for e in data['edges']] == ['BRUHAT', 'QUANTUM']


def test__restrict_sigma() -> None:
  graph = _qbg('A', 1)
  assert len(list(restrict_sigma(graph, Weight((1,)), 0).edges())) == 2
  assert len(list(restrict_sigma(graph, Weight((1,)), Fraction(1, 2)).edges())) == 0
  assert len(list(restrict_sigma(graph, Weight((2,)), Fraction(1, 2)).edges())) == 2
  with pytest.raises(ArgumentError):
    restrict_sigma(graph, Weight((1,)), 2)
  with pytest.raises(ArgumentError):
    restrict_sigma(graph, Weight((1, 0)), 0)


def test__SigmaSubgraph__reachability() -> None:
  graph = _qbg('A', 1)
  W = graph.W
  s = W.generator(1)
  empty = restrict_sigma(graph, Weight((1,)), Fraction(1, 2))
  assert not empty.has_path(s, W.identity)
  assert empty.has_path(s, s)
  assert empty.distance(s, W.identity) is None
  full = restrict_sigma(graph, Weight((1,)), 1)
  assert full.distance(s, W.identity) == 1


def test__parabolic_path_weight() -> None:
  graph = _qbg('A', 2)
  W = graph.W
  lam = Weight((1, 0))
  parabolic = build_parabolic_qbg(W, ParabolicSubset.of(2))
  assert parabolic_path_weight(parabolic, W.identity, W.identity, lam) == 0
  assert parabolic_path_weight(parabolic, W.longest, W.identity, lam) == 1
  for u in W:
    for v in W:
      assert parabolic_path_weight(parabolic, u, v, lam) == wt_lambda(graph, u, v, lam)
  with pytest.raises(ArgumentError):
    parabolic_path_weight(graph, W.identity, W.longest, lam)


def test__increasing_path() -> None:
  graph = _qbg('A', 1)
  W = graph.W
  order = reflection_order(W, (1,))
  s = W.generator(1)
  assert increasing_path(graph, s, s, order) == []
  path = increasing_path(graph, s, W.identity, order)
  assert path is not None and len(path) == 1 and path[0].kind == EdgeKind.QUANTUM
  assert increasing_path(graph, s, W.identity, order, restriction=restrict_sigma(graph, Weight((1,)), Fraction(1, 2))) is None


def test__increasing_path__is_the_minimal_shortest_path() -> None:
  graph = _qbg('B', 2)
  W = graph.W
  order = reflection_order(W, W.longest.canonical_word)
  for u in W:
    for v in W:
      path = increasing_path(graph, u, v, order)
      assert path is not None and len(path) == graph.distance(u, v)
      keys = sorted(tuple(order.position(e.label) for e in p) for p in all_shortest_paths(graph, u, v))
      assert tuple(order.position(e.label) for e in path) == keys[0]
      down = decreasing_path(graph, u, v, order)
      assert down is not None
      assert tuple(order.position(e.label) for e in down) == keys[-1]


def test__all_monotone_paths__unique_per_target() -> None:
  graph = _qbg('A', 2)
  W = graph.W
  order = reflection_order(W, (2, 1, 2))
  for u in W:
    targets = [p[-1].target.index if p else u.index for p in all_monotone_paths(graph, u, None, order)]
    assert sorted(targets) == list(range(len(W)))


def test__tilted_min() -> None:
  graph = _qbg('A', 2)
  W = graph.W
  S = ParabolicSubset.of(2)
  coset = W.coset(W.longest, S)
  assert tilted_min(graph, coset, W.longest) == W.longest
  assert tilted_min(graph, [W.parse('s1')], W.identity) == W.parse('s1')
  # w₀ ⇒ e is a single quantum edge along θ, so w₀ is below s2 s1 in the e-tilted order.
  assert tilted_min(graph, coset, W.identity) == W.longest
  assert tilted_leq(graph, W.identity, W.identity, W.longest)


def test__coset_increasing_path() -> None:
  graph = _qbg('A', 2)
  W = graph.W
  order = inversion_table(W, Weight((1, 0))).order
  S = ParabolicSubset.of(2)
  start, path = coset_increasing_path(graph, W.identity, W.longest, S, order)
  assert start == W.generator(2)
  assert path is not None
  assert [e.label for e in path] == [RootVector((1, 1)), RootVector((1, 0))]
  assert all(e.label not in W.datum.positive_roots_in(S) for e in path)


def test__reverse_edge__keeps_the_kind() -> None:
  graph = _qbg('G', 2)
  for edge in graph.edges():
    reversed_edge = reverse_edge(graph, edge)
    assert reversed_edge.kind == edge.kind
    assert reverse_edge(graph, reversed_edge) == edge


@pytest.mark.parametrize('series,rank', [('A', 2), ('B', 2), ('G', 2), ('A', 3)])
def test__tilted_leq__is_a_partial_order_with_minimum_the_reference(series: str, rank: int) -> None:
  graph = _qbg(series, rank)
  W = graph.W
  elements = list(W)
  for ref in elements:
    below = {(x.index, y.index) for x in elements for y in elements if tilted_leq(graph, ref, x, y)}
    for x in elements:
      assert (x.index, x.index) in below
      assert (ref.index, x.index) in below
      for y in elements:
        if x != y and (x.index, y.index) in below:
          assert (y.index, x.index) not in below
    for x, y in below:
      for z in elements:
        if (y, z.index) in below:
          assert (x, z.index) in below
    assert tilted_min(graph, elements, ref) == ref


@pytest.mark.parametrize('series,rank', [('A', 2), ('B', 2), ('G', 2), ('A', 3)])
def test__restrict_sigma__edges_project_to_paths_in_the_parabolic_graph(series: str, rank: int) -> None:
  """
  Every edge u → v of QBG_{σλ}(W) yields a directed path ⌊u⌋ ⇒ ⌊v⌋ in QBG_{σλ}(W^S), S = S_λ, for
  all dominant λ with coordinates up to 2 and all σ ∈ {0} ∪ candidate breaks.
  """

  session = open_session(series, rank)
  W = session.W
  for coords in itertools.product(range(3), repeat=rank):
    lam = Weight(coords)
    S = ParabolicSubset.of_weight(lam)
    for sigma in [Fraction(0)] + candidate_breaks(W, lam):
      full = restrict_sigma(session.qbg, lam, sigma)
      parabolic = restrict_sigma(session.parabolic(S), lam, sigma)
      for edge in full.edges():
        u, v = W.coset_min(edge.source, S), W.coset_min(edge.target, S)
        assert parabolic.has_path(u, v), f'{edge} for λ = {lam}, σ = {sigma}'
