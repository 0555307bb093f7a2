
"""
The bijection Ξ_w : QB(w; t(w₀λ)) → QLS(λ), its inverse and the weight/degree preservation check.
"""

import dataclasses
import logging
import typing as t
from fractions import Fraction

from .affine import AffineRoot, InversionTable
from .cartan import ParabolicSubset, ReflectionOrder, Weight, WeylElement, WeylGroup, pairing
from .exc import ArgumentError, InvariantViolation
from .qbg import QuantumBruhatGraph, increasing_path, restrict_sigma, tilted_min
from .qbpaths import AlcovePath, QuantumAlcoveModel, end_weight, qwt_deg
from .qls import QlsModel, QlsPath

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class XiContext:
  """
  Everything Ξ_w needs for a fixed pair (λ, w). The order ≺ and the table order ≺′ both derive from
  the reduced word w₀ = v(λ₋)·w₀^S fixed by the table.
  """

  w: WeylElement
  alcoves: QuantumAlcoveModel
  qls: QlsModel

  @property
  def W(self) -> WeylGroup:
    return self.alcoves.W

  @property
  def lam(self) -> Weight:
    return self.alcoves.lam

  @property
  def table(self) -> InversionTable:
    return self.alcoves.table

  @property
  def order(self) -> ReflectionOrder:
    return self.table.order

  @property
  def qbg(self) -> QuantumBruhatGraph:
    return self.alcoves.qbg

  @property
  def S(self) -> ParabolicSubset:
    return self.qls.S

  @property
  def anchor(self) -> WeylElement:
    """ ww₀, the vertex the degree statistic of the image is anchored at. """

    return self.W.mul(self.w, self.W.longest)


def make_context(alcoves: QuantumAlcoveModel, qls: QlsModel, w: WeylElement) -> XiContext:
  if alcoves.lam != qls.lam:
    raise ArgumentError(f'alcove model for {alcoves.lam} and QLS model for {qls.lam} disagree')
  return XiContext(w, alcoves, qls)


def xi(ctx: XiContext, path: AlcovePath) -> QlsPath:
  """
  Ξ_w(p_J). The indices of J are grouped by equal d-values; the direction parts at the group
  boundaries, multiplied by w₀ and projected to W^S, become the vertices of the image.

  # Raises
  ArgumentError: If *path* is not a member of QB(w; t(w₀λ)).
  InvariantViolation: If the image is malformed.
  """

  if path.w != ctx.w or not path.is_admissible:
    raise ArgumentError(f'{path} is not a member of QB({ctx.w}; t(w₀{ctx.lam}))')
  W = ctx.W
  x = [z.direction for z in path.chain]
  d = [ctx.table.entry(j).d for j in path.J]

  sigmas = [Fraction(0)] + sorted({v for v in d if v > 0})
  u = [0] + [sum(1 for v in d if v <= sigma) for sigma in sigmas]
  w_p = [W.mul(x[k], W.longest) for k in u]
  vertices = tuple(W.coset_min(v, ctx.S) for v in w_p[1:])
  for p in range(len(vertices) - 1):
    if vertices[p] == vertices[p + 1]:
      raise InvariantViolation(f'Ξ({path}): consecutive vertices {vertices[p]} coincide')

  eta = QlsPath(vertices, tuple(sigmas) + (Fraction(1),))
  if not ctx.qls.is_valid(eta):
    raise InvariantViolation(f'Ξ({path}) = {eta} violates condition (C)')
  return eta


def xi_inverse(ctx: XiContext, eta: QlsPath) -> AlcovePath:
  """
  Ξ_w⁻¹(η). Starting from v₀ = ww₀, each v_p is the tilted minimum of y_pW_S; the label-increasing
  path from v_{p+1} to v_p in QBG_{τ_pλ}(W) is mirrored through w₀ and translated into table indices.

  # Raises
  ArgumentError: If *eta* is not in QLS(λ).
  InvariantViolation: If a translated affine root is missing from the table or out of order.
  """

  if not ctx.qls.is_valid(eta):
    raise ArgumentError(f'{eta} is not a QLS path of shape {ctx.lam}')
  W = ctx.W
  datum = W.datum
  lam_minus = W.act(W.longest, ctx.lam)
  labels = datum.positive_roots_outside(ctx.S)

  J: t.List[int] = []
  previous = ctx.anchor
  for p in range(eta.s):
    tau = eta.breaks[p]
    current = tilted_min(ctx.qbg, W.coset(eta.vertices[p], ctx.S), previous)
    edges = increasing_path(ctx.qbg, current, previous, ctx.order, labels, restrict_sigma(ctx.qbg, ctx.lam, tau))
    if edges is None:
      raise InvariantViolation(f'no label-increasing path from {current} to {previous} in QBG_{tau}λ')
    for edge in reversed(edges):
      gamma = -W.act_root(W.longest, edge.label)
      height = -pairing(lam_minus, datum.coroot(gamma))
      a = (1 - tau) * height
      if a.denominator != 1:
        raise InvariantViolation(f'degree {a} for {gamma} at τ = {tau} is not integral')
      j = ctx.table.index_of(AffineRoot(-datum.coroot(gamma), int(a)))
      if j is None:
        raise InvariantViolation(f'affine root {-datum.coroot(gamma)}+{a}δ is not in the inversion table')
      J.append(j)
    previous = current

  if any(a >= b for a, b in zip(J, J[1:])):
    raise InvariantViolation(f'Ξ⁻¹({eta}) produced the non-increasing index list {J}')
  path = ctx.alcoves.path(ctx.w, J)
  if not path.is_admissible:
    raise InvariantViolation(f'Ξ⁻¹({eta}) = {path} is not in QB({ctx.w}; t(w₀{ctx.lam}))')
  return path


@dataclasses.dataclass(frozen=True)
class PreservationRecord:
  path: AlcovePath
  image: QlsPath
  end_weight: Weight
  image_weight: Weight
  degree: int
  image_degree: int

  @property
  def weight_matches(self) -> bool:
    return self.end_weight == self.image_weight

  @property
  def degree_matches(self) -> bool:
    return self.degree == self.image_degree

  @property
  def ok(self) -> bool:
    return self.weight_matches and self.degree_matches


def check_preservation(ctx: XiContext, path: AlcovePath) -> PreservationRecord:
  """ Compare wt(ed(p)) with wt(Ξ_w(p)) and deg(qwt(p)) with Deg^{ww₀}(Ξ_w(p)). """

  image = xi(ctx, path)
  return PreservationRecord(
    path=path,
    image=image,
    end_weight=end_weight(path),
    image_weight=ctx.qls.wt(image),
    degree=qwt_deg(path),
    image_degree=ctx.qls.deg_stats(image, ctx.anchor).deg_up)
