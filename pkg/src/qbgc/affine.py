
"""
The extended affine Weyl group t(P) ⋊ W of the dual affinization, affine real roots γ∨ + aδ̃ and the
inversion table of the translation t(w₀λ).
"""

import dataclasses
import logging
import typing as t
from fractions import Fraction

import databind.json

from .cartan import (
  CorootVector, FixedWords, OrderDirection, ParabolicSubset, ReflectionOrder, RootVector, Weight, WeylElement,
  WeylGroup, fixed_words_for_lambda, pairing, reflection_order)
from .exc import ArgumentError, InvariantViolation
from .types import InversionEntryRecord, InversionTableExport

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class AffineRoot:
  """
  The real affine root `finite_part + degree · δ̃`; *finite_part* is a coroot.
  """

  finite_part: CorootVector
  degree: int

  def __str__(self) -> str:
    return f'{self.finite_part}+{self.degree}δ'


@dataclasses.dataclass(frozen=True)
class ExtendedAffineElement:
  """
  The element t(ν)v. #translation and #direction are the wt and dr parts.
  """

  translation: Weight
  direction: WeylElement

  def __str__(self) -> str:
    return f't({self.translation}){self.direction}'


class ExtendedAffineWeylGroup:
  """
  Group operations on #ExtendedAffineElement values over an enumerated #WeylGroup.
  """

  def __init__(self, W: WeylGroup) -> None:
    self.W = W

  def translation(self, nu: Weight) -> ExtendedAffineElement:
    return ExtendedAffineElement(nu, self.W.identity)

  def finite(self, v: WeylElement) -> ExtendedAffineElement:
    return ExtendedAffineElement(Weight.zero(self.W.rank), v)

  def compose(self, x: ExtendedAffineElement, y: ExtendedAffineElement) -> ExtendedAffineElement:
    """ (t(ν)v)(t(μ)u) = t(ν + vμ)(vu). """

    W = self.W
    return ExtendedAffineElement(x.translation + W.act(x.direction, y.translation), W.mul(x.direction, y.direction))

  def invert(self, x: ExtendedAffineElement) -> ExtendedAffineElement:
    """ (t(ν)v)⁻¹ = t(−v⁻¹ν)v⁻¹. """

    v_inv = self.W.inverse(x.direction)
    return ExtendedAffineElement(-self.W.act(v_inv, x.translation), v_inv)

  def affine_reflection(self, root: AffineRoot) -> ExtendedAffineElement:
    """
    s_{α∨ + aδ̃} = t(−aα)s_α.

    # Raises
    ArgumentError: If the finite part is not a coroot.
    """

    datum = self.W.datum
    if root.finite_part.is_zero():
      raise ArgumentError(f'{root} has a zero finite part')
    alpha = datum.root_of_coroot(root.finite_part)
    return ExtendedAffineElement(datum.root_to_weight(alpha).scale(-root.degree), self.W.reflection(alpha))


def phi(W: WeylGroup) -> RootVector:
  """ The highest short root φ. """

  return W.datum.highest_short_root


@dataclasses.dataclass(frozen=True)
class InversionEntry:
  """
  One affine root β̃ = −γ∨ + aδ̃ of the inversion set of t(w₀λ).

  #height is ⟨λ₋, −γ∨⟩, #d is (height − a) / height, #finite_label is γ and #projected_label is
  −w₀γ ∈ Δ⁺ ∖ Δ⁺_S.
  """

  root: AffineRoot
  a: int
  d: Fraction
  height: int
  finite_label: RootVector
  projected_label: RootVector


class InversionTable:
  """
  The inversion set of t(w₀λ), sorted by ≺′: first by d, then by the projected label, larger labels in
  the fixed order ≺ first. Entries are addressed from 1 as in `β̃₁, …, β̃_L`.
  """

  def __init__(self, W: WeylGroup, lam: Weight, fixed: FixedWords, order: ReflectionOrder, entries: t.Sequence[InversionEntry]) -> None:
    self.W = W
    self.lam = lam
    self.fixed = fixed
    self.order = order
    self.entries: t.Tuple[InversionEntry, ...] = tuple(entries)
    self._index = {e.root: j for j, e in enumerate(self.entries, 1)}

  def __repr__(self) -> str:
    return f'InversionTable({self.W.datum.name}, λ={self.lam}, L={self.L})'

  def __len__(self) -> int:
    return len(self.entries)

  def __iter__(self) -> t.Iterator[InversionEntry]:
    return iter(self.entries)

  @property
  def L(self) -> int:
    return len(self.entries)

  @property
  def S(self) -> ParabolicSubset:
    return self.fixed.S

  def entry(self, j: int) -> InversionEntry:
    if not 1 <= j <= self.L:
      raise ArgumentError(f'table index {j} out of range 1..{self.L}')
    return self.entries[j - 1]

  def index_of(self, root: AffineRoot) -> t.Optional[int]:
    return self._index.get(root)

  def phi_key(self, entry: InversionEntry) -> t.Tuple[Fraction, int]:
    """ The sort key realizing ≺′ through (d, projected label). """

    return entry.d, self.order.sequence.index(entry.projected_label)

  def aligned_with_fixed_word(self) -> bool:
    """ The first M entries project onto β₁, …, β_M of the fixed reduced word of w₀. """

    M = self.fixed.M
    return all(self.entries[k].projected_label == self.order.sequence[k] for k in range(M)) and \
      all(e.d > 0 for e in self.entries[M:])

  def to_export(self) -> InversionTableExport:
    return InversionTableExport(
      type=self.W.datum.name,
      weight=list(self.lam.coords),
      length=self.L,
      entries=[
        InversionEntryRecord(j, list(e.root.finite_part.coords), e.a, str(e.d), list(e.finite_label.coords), list(e.projected_label.coords))
        for j, e in enumerate(self.entries, 1)])

  def to_json(self) -> t.Dict[str, t.Any]:
    return databind.json.dump(self.to_export(), InversionTableExport)  # type: ignore


def inversion_table(W: WeylGroup, lam: Weight) -> InversionTable:
  """
  Build the inversion table of t(w₀λ) = {−γ∨ + aδ̃ : γ ∈ Δ⁺, 0 < a ≤ ⟨λ₋, −γ∨⟩}.

  # Raises
  ArgumentError: If *lam* is not dominant.
  """

  datum = W.datum
  fixed = fixed_words_for_lambda(W, lam)
  order = reflection_order(W, fixed.word, OrderDirection.DECREASING)
  lam_minus = W.act(W.longest, lam)
  position = {b: k for k, b in enumerate(order.sequence)}

  entries = []
  for gamma in datum.positive_roots:
    height = -pairing(lam_minus, datum.coroot(gamma))
    if height <= 0:
      continue
    projected = -W.act_root(W.longest, gamma)
    if not projected.is_positive() or projected in datum.positive_roots_in(fixed.S):
      raise InvariantViolation(f'{datum.name}: projected label {projected} of {gamma} lies in Δ⁺_S')
    finite_part = -datum.coroot(gamma)
    for a in range(1, height + 1):
      entries.append(InversionEntry(AffineRoot(finite_part, a), a, Fraction(height - a, height), height, gamma, projected))

  entries.sort(key=lambda e: (e.d, position[e.projected_label]))
  keys = [(e.d, e.projected_label) for e in entries]
  if len(set(keys)) != len(keys):
    raise InvariantViolation(f'{datum.name}: the ≺′ key is not injective on the inversion set of t({lam_minus})')

  expected = sum(pairing(lam, datum.coroot(b)) for b in datum.positive_roots)
  if len(entries) != expected:
    raise InvariantViolation(f'{datum.name}: inversion table has {len(entries)} entries, expected {expected}')

  table = InversionTable(W, lam, fixed, order, entries)
  log.debug('%s: inversion table of t(%s) has L = %d', datum.name, lam_minus, table.L)
  return table
