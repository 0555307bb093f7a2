
"""
Graded characters: finitely supported integer combinations of `q^k e^μ` over the weight lattice.
"""

import collections
import typing as t

import databind.json
from typing_extensions import TypeAlias

from .cartan import Weight, WeylElement, WeylGroup
from .exc import ArgumentError
from .types import CharacterTerm

#: A term is addressed by the weight coordinates and the q-exponent.
TermKey: TypeAlias = t.Tuple[t.Tuple[int, ...], int]


class GradedCharacter:
  """
  An immutable value `Σ c · q^k e^μ`. Zero coefficients are never stored, so two characters are equal
  exactly when their term maps are equal.
  """

  __slots__ = ('_terms',)

  def __init__(self, terms: t.Optional[t.Mapping[TermKey, int]] = None) -> None:
    self._terms: t.Dict[TermKey, int] = {k: v for k, v in (terms or {}).items() if v != 0}

  @staticmethod
  def zero() -> 'GradedCharacter':
    return GradedCharacter()

  @staticmethod
  def monomial(weight: Weight, q: int = 0, coeff: int = 1) -> 'GradedCharacter':
    return GradedCharacter({(weight.coords, q): coeff})

  @staticmethod
  def collect(terms: t.Iterable[t.Tuple[Weight, int]]) -> 'GradedCharacter':
    """ Sum `q^k e^μ` over an iterable of `(μ, k)` pairs. """

    counter: t.Counter[TermKey] = collections.Counter((weight.coords, q) for weight, q in terms)
    return GradedCharacter(counter)

  def terms(self) -> t.List[t.Tuple[Weight, int, int]]:
    """ `(μ, k, c)` triples in canonical order (weight coordinates, then k). """

    return [(Weight(coords), q, c) for (coords, q), c in sorted(self._terms.items())]

  def coefficient(self, weight: Weight, q: int = 0) -> int:
    return self._terms.get((weight.coords, q), 0)

  def is_zero(self) -> bool:
    return not self._terms

  def total_mass(self) -> int:
    """ The value at q = 1, e^μ = 1. """

    return sum(self._terms.values())

  def add(self, other: 'GradedCharacter') -> 'GradedCharacter':
    result = dict(self._terms)
    for key, value in other._terms.items():
      result[key] = result.get(key, 0) + value
    return GradedCharacter(result)

  def negate(self) -> 'GradedCharacter':
    return GradedCharacter({k: -v for k, v in self._terms.items()})

  def equals(self, other: 'GradedCharacter') -> bool:
    return self._terms == other._terms

  def bar(self) -> 'GradedCharacter':
    """ The involution q ↦ q⁻¹. """

    return GradedCharacter({(coords, -q): c for (coords, q), c in self._terms.items()})

  def weyl_act(self, W: WeylGroup, v: WeylElement) -> 'GradedCharacter':
    """ v · e^μ = e^{vμ}; the q-grading is untouched. """

    result: t.Dict[TermKey, int] = {}
    for (coords, q), c in self._terms.items():
      key = (W.act(v, Weight(coords)).coords, q)
      result[key] = result.get(key, 0) + c
    return GradedCharacter(result)

  def specialize_q1(self) -> 'GradedCharacter':
    """ Collapse all q-exponents to zero. """

    result: t.Dict[TermKey, int] = {}
    for (coords, _q), c in self._terms.items():
      result[(coords, 0)] = result.get((coords, 0), 0) + c
    return GradedCharacter(result)

  def q_exponents(self) -> t.Set[int]:
    return {q for (_coords, q) in self._terms}

  def to_records(self) -> t.List[CharacterTerm]:
    return [CharacterTerm(list(weight.coords), q, c) for weight, q, c in self.terms()]

  def to_json(self) -> t.List[t.Dict[str, t.Any]]:
    return databind.json.dump(self.to_records(), t.List[CharacterTerm])  # type: ignore

  @staticmethod
  def from_json(data: t.Any) -> 'GradedCharacter':
    records = databind.json.load(data, t.List[CharacterTerm])
    result: t.Dict[TermKey, int] = {}
    for record in records:
      key = (tuple(record.weight), record.q)
      if key in result:
        raise ArgumentError(f'duplicate character term {record}')
      result[key] = record.coeff
    return GradedCharacter(result)

  def __add__(self, other: 'GradedCharacter') -> 'GradedCharacter':
    return self.add(other)

  def __sub__(self, other: 'GradedCharacter') -> 'GradedCharacter':
    return self.add(other.negate())

  def __neg__(self) -> 'GradedCharacter':
    return self.negate()

  def __eq__(self, other: object) -> bool:
    if not isinstance(other, GradedCharacter):
      return NotImplemented
    return self.equals(other)

  __hash__ = None  # type: ignore

  def __repr__(self) -> str:
    return f'GradedCharacter({self})'

  def __str__(self) -> str:
    if not self._terms:
      return '0'
    out = ''
    for index, (weight, q, c) in enumerate(self.terms()):
      factors = []
      if abs(c) != 1:
        factors.append(str(abs(c)))
      if q != 0:
        factors.append(f'q^{q}')
      if not weight.is_zero():
        factors.append('e[' + ','.join(map(str, weight.coords)) + ']')
      text = ' '.join(factors) or '1'
      if index == 0:
        out = ('-' if c < 0 else '') + text
      else:
        out += (' - ' if c < 0 else ' + ') + text
    return out
