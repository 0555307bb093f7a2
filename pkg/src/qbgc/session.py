
"""
A #Session bundles the root system, its Weyl group, QBG(W) and per-weight caches for one Cartan
type. Sessions are cached per `(series, rank, limits)` so repeated lookups are free, also inside
worker processes.
"""

import functools
import logging
import typing as t

from .affine import InversionTable, inversion_table
from .bijection import XiContext, make_context
from .cartan import CartanDatum, ParabolicSubset, Weight, WeylElement, WeylGroup, build_root_system, weyl_enumerate
from .config import Limits
from .exc import ArgumentError
from .qbg import QuantumBruhatGraph, build_parabolic_qbg, build_qbg
from .qbpaths import QuantumAlcoveModel
from .qls import QlsModel
from .types import RootSystemSummary

log = logging.getLogger(__name__)


class Session:

  def __init__(self, series: str, rank: int, limits: t.Optional[Limits] = None) -> None:
    self.limits = limits or Limits()
    self.datum: CartanDatum = build_root_system(series, rank, self.limits)
    self.W: WeylGroup = weyl_enumerate(self.datum, self.limits)
    self.qbg: QuantumBruhatGraph = build_qbg(self.W)
    self._parabolic: t.Dict[ParabolicSubset, QuantumBruhatGraph] = {ParabolicSubset(): self.qbg}
    self._tables: t.Dict[Weight, InversionTable] = {}
    self._alcoves: t.Dict[Weight, QuantumAlcoveModel] = {}
    self._qls: t.Dict[Weight, QlsModel] = {}
    self._counts: t.Dict[Weight, int] = {}
    log.info('Opened session for %s (|W| = %d)', self.datum.name, len(self.W))

  def __repr__(self) -> str:
    return f'Session({self.datum.name})'

  @property
  def name(self) -> str:
    return self.datum.name

  def weight(self, coords: t.Union[str, t.Sequence[int], Weight]) -> Weight:
    """
    Coerce *coords* into a dominant #Weight of this type.

    # Raises
    ArgumentError: On a rank mismatch or a non-dominant weight.
    """

    if isinstance(coords, str):
      lam = Weight.parse(coords)
    elif isinstance(coords, Weight):
      lam = coords
    else:
      lam = Weight(tuple(coords))
    if lam.rank != self.datum.rank:
      raise ArgumentError(f'{self.name} needs {self.datum.rank} weight coordinates, got {lam}')
    if not lam.is_dominant():
      raise ArgumentError(f'{lam} is not dominant')
    return lam

  def element(self, text: t.Union[str, WeylElement]) -> WeylElement:
    if isinstance(text, WeylElement):
      return text
    return self.W.parse(text)

  def parabolic(self, S: ParabolicSubset) -> QuantumBruhatGraph:
    graph = self._parabolic.get(S)
    if graph is None:
      graph = self._parabolic[S] = build_parabolic_qbg(self.W, S)
    return graph

  def table(self, lam: Weight) -> InversionTable:
    table = self._tables.get(lam)
    if table is None:
      table = self._tables[lam] = inversion_table(self.W, self.weight(lam))
    return table

  def alcoves(self, lam: Weight) -> QuantumAlcoveModel:
    model = self._alcoves.get(lam)
    if model is None:
      model = self._alcoves[lam] = QuantumAlcoveModel(self.qbg, self.table(lam), self.limits)
    return model

  def qls(self, lam: Weight) -> QlsModel:
    model = self._qls.get(lam)
    if model is None:
      lam = self.weight(lam)
      model = self._qls[lam] = QlsModel(self.parabolic(ParabolicSubset.of_weight(lam)), lam, self.limits)
    return model

  def qls_count(self, lam: Weight) -> int:
    count = self._counts.get(lam)
    if count is None:
      count = self._counts[lam] = self.qls(lam).count()
    return count

  def context(self, lam: Weight, w: WeylElement) -> XiContext:
    return make_context(self.alcoves(lam), self.qls(lam), w)

  def summary(self) -> RootSystemSummary:
    d = self.datum
    return RootSystemSummary(
      type=d.name,
      rank=d.rank,
      cartan_matrix=[list(row) for row in d.cartan_matrix],
      simple_roots=[list(d.simple_root(i).coords) for i in range(1, d.rank + 1)],
      positive_roots=[list(b.coords) for b in d.positive_roots],
      weyl_group_order=len(self.W),
      longest_element=str(self.W.longest),
      highest_root=list(d.highest_root.coords),
      highest_short_root=list(d.highest_short_root.coords))


@functools.lru_cache(maxsize=16)
def _cached_session(series: str, rank: int, limits: Limits) -> Session:
  return Session(series, rank, limits)


def open_session(series: str, rank: int, limits: t.Optional[Limits] = None) -> Session:
  """
  A cached #Session for the given type. The series letter is case insensitive and `limits=None`
  is the same as `Limits()`; #Limits is frozen, hence usable as a cache key.
  """

  return _cached_session(series.upper(), rank, limits or Limits())
