
"""
Quantum Lakshmibai–Seshadri paths of shape λ: enumeration, weights, degree statistics, the graded
characters gch^w and gch_w, and the Lusztig involution.
"""

import dataclasses
import logging
import typing as t
from fractions import Fraction

import databind.json

from .cartan import ParabolicSubset, Weight, WeylElement, WeylGroup, pairing
from .charpoly import GradedCharacter
from .config import Limits
from .exc import ArgumentError, InvariantViolation
from .qbg import QuantumBruhatGraph, SigmaSubgraph, parabolic_path_weight, restrict_sigma
from .types import QlsPathRecord

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class QlsPath:
  """
  η = (w₁, …, w_s; σ₀, …, σ_s) with 0 = σ₀ < σ₁ < ⋯ < σ_s = 1 and adjacent vertices distinct.
  """

  vertices: t.Tuple[WeylElement, ...]
  breaks: t.Tuple[Fraction, ...]

  def __post_init__(self) -> None:
    if not self.vertices or len(self.breaks) != len(self.vertices) + 1:
      raise ArgumentError(f'a path with {len(self.vertices)} vertices needs {len(self.vertices) + 1} breaks')
    if self.breaks[0] != 0 or self.breaks[-1] != 1:
      raise ArgumentError(f'breaks must run from 0 to 1, got {self._breaks_str()}')
    if any(a >= b for a, b in zip(self.breaks, self.breaks[1:])):
      raise ArgumentError(f'breaks must increase strictly, got {self._breaks_str()}')
    if any(a == b for a, b in zip(self.vertices, self.vertices[1:])):
      raise ArgumentError('adjacent vertices of a QLS path must differ')

  @staticmethod
  def of(vertices: t.Sequence[WeylElement], breaks: t.Sequence[t.Union[int, Fraction, str]]) -> 'QlsPath':
    return QlsPath(tuple(vertices), tuple(Fraction(b) for b in breaks))

  @property
  def s(self) -> int:
    return len(self.vertices)

  def _breaks_str(self) -> str:
    return ', '.join(map(str, self.breaks))

  def __str__(self) -> str:
    return '(' + ', '.join(map(str, self.vertices)) + '; ' + self._breaks_str() + ')'


@dataclasses.dataclass(frozen=True)
class DegStats:
  deg_star_up: int
  deg_star_down: int
  deg_up: int
  deg_down: int


def candidate_breaks(W: WeylGroup, lam: Weight) -> t.List[Fraction]:
  """ Σ(λ) = { c / ⟨λ, β∨⟩ : β ∈ Δ⁺ ∖ Δ⁺_S, 0 < c < ⟨λ, β∨⟩ }, sorted. """

  datum = W.datum
  S = ParabolicSubset.of_weight(lam)
  result = set()
  for beta in datum.positive_roots_outside(S):
    h = pairing(lam, datum.coroot(beta))
    result.update(Fraction(c, h) for c in range(1, h))
  return sorted(result)


class QlsModel:
  """
  QLS(λ) for a fixed dominant λ over the parabolic graph QBG(W^S), S = S_λ. The σ-restricted
  subgraphs for the candidate breaks share their reachability caches across all queries.
  """

  def __init__(self, graph: QuantumBruhatGraph, lam: Weight, limits: t.Optional[Limits] = None) -> None:
    if lam.rank != graph.W.rank or not lam.is_dominant():
      raise ArgumentError(f'{lam} is not a dominant weight of {graph.datum.name}')
    if graph.S != ParabolicSubset.of_weight(lam):
      raise ArgumentError(f'QLS paths of shape {lam} live on QBG(W^S) with S = S_λ')
    self.graph = graph
    self.W = graph.W
    self.lam = lam
    self.S = graph.S
    self.limits = limits or Limits()
    self.representatives = graph.vertices
    self.breaks = candidate_breaks(self.W, lam)
    self._subgraphs: t.Dict[Fraction, SigmaSubgraph] = {}
    self._paths: t.Optional[t.List[QlsPath]] = None

  def __repr__(self) -> str:
    return f'QlsModel({self.W.datum.name}, λ={self.lam})'

  def subgraph(self, sigma: Fraction) -> SigmaSubgraph:
    sigma = Fraction(sigma)
    result = self._subgraphs.get(sigma)
    if result is None:
      result = self._subgraphs[sigma] = restrict_sigma(self.graph, self.lam, sigma)
    return result

  # Enumeration

  def enumerate(self, first: t.Optional[WeylElement] = None) -> t.Iterator[QlsPath]:
    """
    Depth-first enumeration. Each path is extended by a break σ beyond the last one and a vertex w'
    that reaches the current last vertex in QBG_{σλ}(W^S).

    # Arguments
    first: If set, only paths with w₁ = *first* are produced.
    """

    elements = self.W.elements

    def extend(vertices: t.Tuple[WeylElement, ...], breaks: t.Tuple[Fraction, ...]) -> t.Iterator[QlsPath]:
      yield QlsPath(vertices, breaks + (Fraction(1),))
      current = vertices[-1]
      for sigma in self.breaks:
        if sigma <= breaks[-1]:
          continue
        for index in sorted(self.subgraph(sigma).ancestors(current)):
          if index != current.index:
            yield from extend(vertices + (elements[index],), breaks + (sigma,))

    starts = self.representatives if first is None else [first]
    for w1 in starts:
      if w1 not in self.graph:
        raise ArgumentError(f'{w1} is not a minimal coset representative for S = {self.S}')
      yield from extend((w1,), (Fraction(0),))

  def paths(self) -> t.List[QlsPath]:
    """ QLS(λ) in #enumerate() order, computed once per model. """

    if self._paths is None:
      self._paths = list(self.enumerate())
      log.debug('%r: %d paths', self, len(self._paths))
    return self._paths

  def count(self) -> int:
    return len(self.paths())

  # Membership

  def _check_shape(self, eta: QlsPath) -> bool:
    return all(v in self.graph for v in eta.vertices) and all(b in self.breaks for b in eta.breaks[1:-1])

  def is_valid(self, eta: QlsPath) -> bool:
    """ Condition (C): w_{i+1} reaches w_i in QBG_{σ_iλ}(W^S) for 1 ≤ i ≤ s−1. """

    if not self._check_shape(eta):
      return False
    return all(
      self.subgraph(eta.breaks[i]).has_path(eta.vertices[i], eta.vertices[i - 1])
      for i in range(1, eta.s))

  def is_valid_shortest(self, eta: QlsPath) -> bool:
    """ Condition (C′): some shortest path from w_{i+1} to w_i in QBG(W^S) lies in QBG_{σ_iλ}(W^S). """

    if not self._check_shape(eta):
      return False
    for i in range(1, eta.s):
      restricted = self.subgraph(eta.breaks[i]).distance(eta.vertices[i], eta.vertices[i - 1])
      if restricted is None or restricted != self.graph.distance(eta.vertices[i], eta.vertices[i - 1]):
        return False
    return True

  def _require(self, eta: QlsPath) -> None:
    if not self.is_valid(eta):
      raise ArgumentError(f'{eta} is not a QLS path of shape {self.lam}')

  # Statistics

  def wt(self, eta: QlsPath) -> Weight:
    """ wt(η) = Σ (σ_i − σ_{i−1}) w_iλ. """

    total = [Fraction(0)] * self.lam.rank
    for i, v in enumerate(eta.vertices, 1):
      width = eta.breaks[i] - eta.breaks[i - 1]
      for k, x in enumerate(self.W.act(v, self.lam).coords):
        total[k] += width * x
    if any(x.denominator != 1 for x in total):
      raise InvariantViolation(f'wt({eta}) is not integral')
    return Weight(tuple(int(x) for x in total))

  def wt_lambda(self, u: WeylElement, v: WeylElement) -> int:
    return parabolic_path_weight(self.graph, u, v, self.lam)

  def deg_stats(self, eta: QlsPath, w: WeylElement) -> DegStats:
    """
    Deg*, Deg_*, Deg^w and Deg_w of *eta*, with the boundary vertices w₀ := w and w_{s+1} := w.
    """

    s = eta.s
    vertices = (w,) + eta.vertices + (w,)
    junctions = [self.wt_lambda(vertices[i + 1], vertices[i]) for i in range(s + 1)]
    star_up = sum((1 - eta.breaks[i]) * junctions[i] for i in range(1, s))
    star_down = sum(eta.breaks[i] * junctions[i] for i in range(1, s))
    values = [Fraction(star_up), Fraction(star_down), star_up + junctions[0], star_down + junctions[s]]
    if any(x.denominator != 1 or x < 0 for x in values):
      raise InvariantViolation(f'degree statistics of {eta} are not nonnegative integers: {values}')
    return DegStats(*(int(x) for x in values))

  def gch_up(self, w: WeylElement) -> GradedCharacter:
    """ gch^w QLS(λ) = Σ q^{−Deg^w(η)} e^{wt(η)}. """

    return GradedCharacter.collect((self.wt(eta), -self.deg_stats(eta, w).deg_up) for eta in self.paths())

  def gch_down(self, w: WeylElement) -> GradedCharacter:
    """ gch_w QLS(λ) = Σ q^{−Deg_w(η)} e^{wt(η)}. """

    return GradedCharacter.collect((self.wt(eta), -self.deg_stats(eta, w).deg_down) for eta in self.paths())

  def lusztig_T(self, eta: QlsPath) -> QlsPath:
    """ T(η) = (⌊w₀w_s⌋, …, ⌊w₀w₁⌋; 1−σ_s, …, 1−σ₀). """

    W = self.W
    vertices = tuple(W.coset_min(W.mul(W.longest, v), self.S) for v in reversed(eta.vertices))
    breaks = tuple(1 - b for b in reversed(eta.breaks))
    return QlsPath(vertices, breaks)

  def to_record(self, eta: QlsPath, w: WeylElement) -> QlsPathRecord:
    stats = self.deg_stats(eta, w)
    return QlsPathRecord(
      vertices=[str(v) for v in eta.vertices],
      breaks=[str(b) for b in eta.breaks],
      weight=list(self.wt(eta).coords),
      anchor=str(w),
      deg_star_up=stats.deg_star_up,
      deg_star_down=stats.deg_star_down,
      deg_up=stats.deg_up,
      deg_down=stats.deg_down)

  def to_json(self, eta: QlsPath, w: WeylElement) -> t.Dict[str, t.Any]:
    return databind.json.dump(self.to_record(eta, w), QlsPathRecord)  # type: ignore
