
"""
Quantum alcove paths: the sets B(w; t(w₀λ)) and QB(w; t(w₀λ)), their statistics and the graded
character C_w^{t(w₀λ)}.
"""

import dataclasses
import itertools
import logging
import typing as t

import databind.json

from .affine import AffineRoot, ExtendedAffineElement, ExtendedAffineWeylGroup, InversionTable
from .cartan import CorootVector, RootVector, Weight, WeylElement, WeylGroup
from .charpoly import GradedCharacter
from .config import Limits
from .exc import ArgumentError, ResourceLimitExceeded
from .qbg import EdgeKind, QuantumBruhatGraph
from .types import AlcovePathRecord, EdgeKindName

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class AlcoveStep:
  """
  The step `dr(z_{i−1}) → dr(z_i)` taken at table index *index*. #kind is #None when the step is not
  an edge of QBG(W), which only happens for members of B that are not in QB.
  """

  index: int
  root: AffineRoot
  source: WeylElement
  target: WeylElement
  label: RootVector
  kind: t.Optional[EdgeKind]

  @property
  def degree(self) -> int:
    return self.root.degree


@dataclasses.dataclass(frozen=True)
class AlcovePath:
  """
  The path p_J with chain z₀ = w·t(w₀λ), z_i = z_{i−1}·s_{β̃_{j_i}}.
  """

  w: WeylElement
  J: t.Tuple[int, ...]
  chain: t.Tuple[ExtendedAffineElement, ...]
  steps: t.Tuple[AlcoveStep, ...]

  @property
  def is_admissible(self) -> bool:
    """ Every step is an edge of QBG(W), i.e. the path belongs to QB(w; t(w₀λ)). """

    return all(step.kind is not None for step in self.steps)

  @property
  def end(self) -> ExtendedAffineElement:
    return self.chain[-1]

  @property
  def quantum_indices(self) -> t.Tuple[int, ...]:
    """ J⁻, the indices of the quantum steps. """

    return tuple(step.index for step in self.steps if step.kind == EdgeKind.QUANTUM)

  def __str__(self) -> str:
    marks = ''.join('q' if s.kind == EdgeKind.QUANTUM else 'b' if s.kind == EdgeKind.BRUHAT else '?' for s in self.steps)
    return '{' + ','.join(map(str, self.J)) + '}' + (f' [{marks}]' if marks else '')


class QuantumAlcoveModel:
  """
  Alcove paths for a fixed dominant weight λ, built on the inversion table of t(w₀λ) and QBG(W).
  """

  def __init__(self, qbg: QuantumBruhatGraph, table: InversionTable, limits: t.Optional[Limits] = None) -> None:
    if qbg.S:
      raise ArgumentError('quantum alcove paths live on the full QBG(W)')
    self.qbg = qbg
    self.table = table
    self.W: WeylGroup = qbg.W
    self.affine = ExtendedAffineWeylGroup(self.W)
    self.limits = limits or Limits()
    self.lam = table.lam
    self._reflections = [self.affine.affine_reflection(e.root) for e in table.entries]
    self._origin = self.affine.translation(self.W.act(self.W.longest, self.lam))

  def __repr__(self) -> str:
    return f'QuantumAlcoveModel({self.W.datum.name}, λ={self.lam}, L={self.table.L})'

  def start(self, w: WeylElement) -> ExtendedAffineElement:
    """ z₀ = w·t(w₀λ). """

    return self.affine.compose(self.affine.finite(w), self._origin)

  def _step(self, z: ExtendedAffineElement, j: int) -> t.Tuple[ExtendedAffineElement, AlcoveStep]:
    entry = self.table.entry(j)
    image = self.affine.compose(z, self._reflections[j - 1])
    edge = self.qbg.edge(z.direction, entry.finite_label)
    kind = edge.kind if edge is not None and edge.target == image.direction else None
    return image, AlcoveStep(j, entry.root, z.direction, image.direction, entry.finite_label, kind)

  def path(self, w: WeylElement, J: t.Iterable[int]) -> AlcovePath:
    """
    Build p_J for an arbitrary subset *J*; check #AlcovePath.is_admissible for QB membership.

    # Raises
    ArgumentError: If *J* is not strictly increasing inside 1..L.
    """

    J = tuple(J)
    if any(a >= b for a, b in zip(J, J[1:])):
      raise ArgumentError(f'J = {J} is not strictly increasing')
    chain = [self.start(w)]
    steps = []
    for j in J:
      z, step = self._step(chain[-1], j)
      chain.append(z)
      steps.append(step)
    return AlcovePath(w, J, tuple(chain), tuple(steps))

  def enumerate_b(self, w: WeylElement) -> t.Iterator[AlcovePath]:
    """
    Stream all 2^L members of B(w; t(w₀λ)).

    # Raises
    ResourceLimitExceeded: If L exceeds #Limits.max_alcove_length.
    """

    L = self.table.L
    if L > self.limits.max_alcove_length:
      raise ResourceLimitExceeded('L', self.limits.max_alcove_length, L, 'use enumerate_qb() or raise QBGC_MAX_L')
    for size in range(L + 1):
      for J in itertools.combinations(range(1, L + 1), size):
        yield self.path(w, J)

  def enumerate_qb(self, w: WeylElement, first: t.Optional[int] = None) -> t.Iterator[AlcovePath]:
    """
    Depth-first enumeration of QB(w; t(w₀λ)) in ≺′-lexicographic order of J. The edge condition is
    checked per step, so non-admissible prefixes are pruned.

    # Arguments
    first: If set, only the paths whose J starts with this index are produced; `0` selects p_∅ alone.
    """

    if first is None or first == 0:
      yield self.path(w, ())
    if first == 0:
      return

    def extend(J: t.Tuple[int, ...], chain: t.Tuple[ExtendedAffineElement, ...], steps: t.Tuple[AlcoveStep, ...], lo: int, hi: int) -> t.Iterator[AlcovePath]:
      for j in range(lo, hi + 1):
        z, step = self._step(chain[-1], j)
        if step.kind is None:
          continue
        path = AlcovePath(w, J + (j,), chain + (z,), steps + (step,))
        yield path
        yield from extend(path.J, path.chain, path.steps, j + 1, self.table.L)

    origin = (self.start(w),)
    if first is None:
      yield from extend((), origin, (), 1, self.table.L)
    else:
      yield from extend((), origin, (), first, first)

  def count_qb(self, w: WeylElement) -> int:
    return sum(1 for _ in self.enumerate_qb(w))

  def graded_character(self, w: WeylElement) -> GradedCharacter:
    """ C_w^{t(w₀λ)} = Σ q^{deg(qwt(p))} e^{wt(ed(p))} over QB(w; t(w₀λ)). """

    return GradedCharacter.collect((end_weight(p), qwt_deg(p)) for p in self.enumerate_qb(w))

  def to_record(self, path: AlcovePath) -> AlcovePathRecord:
    return AlcovePathRecord(
      w=str(path.w),
      J=list(path.J),
      kinds=[EdgeKindName[s.kind.name] for s in path.steps if s.kind is not None],
      end_weight=list(end_weight(path).coords),
      degree=qwt_deg(path))

  def to_json(self, path: AlcovePath) -> t.Dict[str, t.Any]:
    return databind.json.dump(self.to_record(path), AlcovePathRecord)  # type: ignore


def qwt(path: AlcovePath) -> t.Tuple[CorootVector, int]:
  """ qwt(p_J) = Σ_{j ∈ J⁻} β̃_j as (finite part, δ̃-coefficient). """

  finite = CorootVector.zero(len(path.w.action))
  degree = 0
  for step in path.steps:
    if step.kind == EdgeKind.QUANTUM:
      finite = finite + step.root.finite_part
      degree += step.root.degree
  return finite, degree


def qwt_deg(path: AlcovePath) -> int:
  """ deg(qwt(p_J)) = Σ_{j ∈ J⁻} a_j. """

  return sum(step.degree for step in path.steps if step.kind == EdgeKind.QUANTUM)


def end_weight(path: AlcovePath) -> Weight:
  """ wt(ed(p_J)), the translation part of the last chain element. """

  return path.end.translation
