
"""
Finite root systems, their Weyl groups, parabolic cosets and reflection orders.

Roots are stored in the simple-root basis, coroots in the simple-coroot basis and weights in the
fundamental-weight basis, so that every quantity stays an exact integer vector. Weyl group elements
are identified by their action matrix on fundamental-weight coordinates.
"""

import dataclasses
import enum
import logging
import math
import re
import typing as t

import numpy as np

from .config import Limits
from .exc import ArgumentError, ConfigurationError, InvariantViolation, ResourceLimitExceeded

log = logging.getLogger(__name__)

#: A word in the simple reflections, generators numbered from 1.
Word = t.Tuple[int, ...]

SERIES = 'ABCDEFG'

# Generators are written s1, s2, ...; "e" and "w0" name the identity and the longest element.
_GENERATOR_RE = re.compile(r's(\d+)')


@dataclasses.dataclass(frozen=True)
class Weight:
  """
  An integral weight in the fundamental-weight basis, i.e. `coords[i] = ⟨λ, α_{i+1}∨⟩`.
  """

  coords: t.Tuple[int, ...]

  @staticmethod
  def zero(rank: int) -> 'Weight':
    return Weight((0,) * rank)

  @staticmethod
  def fundamental(rank: int, i: int) -> 'Weight':
    """ The fundamental weight ϖ_i, *i* counted from 1. """

    if not 1 <= i <= rank:
      raise ArgumentError(f'fundamental weight index {i} out of range 1..{rank}')
    return Weight(tuple(1 if j == i - 1 else 0 for j in range(rank)))

  @staticmethod
  def parse(text: str) -> 'Weight':
    """ Parse a comma-separated list of integers such as `"1,0,2"`. """

    try:
      return Weight(tuple(int(x) for x in text.replace(' ', '').split(',') if x != ''))
    except ValueError:
      raise ArgumentError(f'not a weight: {text!r}')

  @property
  def rank(self) -> int:
    return len(self.coords)

  def is_dominant(self) -> bool:
    return all(x >= 0 for x in self.coords)

  def is_zero(self) -> bool:
    return not any(self.coords)

  def scale(self, k: int) -> 'Weight':
    return Weight(tuple(k * x for x in self.coords))

  def _check(self, other: 'Weight') -> None:
    if self.rank != other.rank:
      raise ArgumentError(f'rank mismatch: {self} and {other}')

  def __add__(self, other: 'Weight') -> 'Weight':
    self._check(other)
    return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

  def __sub__(self, other: 'Weight') -> 'Weight':
    self._check(other)
    return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

  def __neg__(self) -> 'Weight':
    return Weight(tuple(-a for a in self.coords))

  def __str__(self) -> str:
    return '[' + ','.join(map(str, self.coords)) + ']'


@dataclasses.dataclass(frozen=True)
class RootVector:
  """
  An element of the root lattice in the simple-root basis.
  """

  coords: t.Tuple[int, ...]

  def is_positive(self) -> bool:
    return any(self.coords) and all(x >= 0 for x in self.coords)

  def is_negative(self) -> bool:
    return any(self.coords) and all(x <= 0 for x in self.coords)

  @property
  def height(self) -> int:
    return sum(self.coords)

  def __neg__(self) -> 'RootVector':
    return RootVector(tuple(-a for a in self.coords))

  def __str__(self) -> str:
    return '(' + ','.join(map(str, self.coords)) + ')'


@dataclasses.dataclass(frozen=True)
class CorootVector:
  """
  An element of the coroot lattice Q∨ in the simple-coroot basis.
  """

  coords: t.Tuple[int, ...]

  @staticmethod
  def zero(rank: int) -> 'CorootVector':
    return CorootVector((0,) * rank)

  def is_zero(self) -> bool:
    return not any(self.coords)

  def __add__(self, other: 'CorootVector') -> 'CorootVector':
    if len(self.coords) != len(other.coords):
      raise ArgumentError(f'rank mismatch: {self} and {other}')
    return CorootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

  def __neg__(self) -> 'CorootVector':
    return CorootVector(tuple(-a for a in self.coords))

  def __str__(self) -> str:
    return '(' + ','.join(map(str, self.coords)) + ')∨'


@dataclasses.dataclass(frozen=True)
class ParabolicSubset:
  """
  A subset S of the Dynkin node set I = {1, …, rank}, possibly empty.
  """

  members: t.FrozenSet[int] = frozenset()

  @staticmethod
  def of(*members: int) -> 'ParabolicSubset':
    return ParabolicSubset(frozenset(members))

  @staticmethod
  def of_weight(lam: Weight) -> 'ParabolicSubset':
    """ S_λ = { i : ⟨λ, α_i∨⟩ = 0 }. """

    return ParabolicSubset(frozenset(i + 1 for i, x in enumerate(lam.coords) if x == 0))

  def __contains__(self, i: object) -> bool:
    return i in self.members

  def __iter__(self) -> t.Iterator[int]:
    return iter(sorted(self.members))

  def __len__(self) -> int:
    return len(self.members)

  def __str__(self) -> str:
    return '{' + ','.join(map(str, self)) + '}'


def pairing(lam: Weight, coroot: CorootVector) -> int:
  """
  The canonical pairing ⟨λ, γ∨⟩. Since ⟨ϖ_i, α_j∨⟩ = δ_ij this is a plain dot product.
  """

  if len(lam.coords) != len(coroot.coords):
    raise ArgumentError(f'rank mismatch: {lam} and {coroot}')
  return sum(a * b for a, b in zip(lam.coords, coroot.coords))


def parse_cartan_type(text: str) -> t.Tuple[str, int]:
  """
  Parse a Cartan type such as `"A2"` or `"g2"`.
  """

  match = re.fullmatch(r'\s*([A-Ga-g])\s*(\d+)\s*', text)
  if not match:
    raise ConfigurationError(f'not a Cartan type: {text!r}')
  return match.group(1).upper(), int(match.group(2))


def weyl_group_order(series: str, rank: int) -> int:
  _check_type(series, rank)
  if series == 'A':
    return math.factorial(rank + 1)
  if series in 'BC':
    return 2 ** rank * math.factorial(rank)
  if series == 'D':
    return 2 ** (rank - 1) * math.factorial(rank)
  return {('E', 6): 51840, ('E', 7): 2903040, ('E', 8): 696729600, ('F', 4): 1152, ('G', 2): 12}[(series, rank)]


def positive_root_count(series: str, rank: int) -> int:
  _check_type(series, rank)
  if series == 'A':
    return rank * (rank + 1) // 2
  if series in 'BC':
    return rank * rank
  if series == 'D':
    return rank * (rank - 1)
  return {('E', 6): 36, ('E', 7): 63, ('E', 8): 120, ('F', 4): 24, ('G', 2): 6}[(series, rank)]


def _check_type(series: str, rank: int) -> None:
  valid = (
    (series == 'A' and rank >= 1) or
    (series in 'BC' and len(series) == 1 and rank >= 2) or
    (series == 'D' and rank >= 4) or
    (series == 'E' and rank in (6, 7, 8)) or
    (series == 'F' and rank == 4) or
    (series == 'G' and rank == 2))
  if not valid:
    raise ConfigurationError(f'{series}{rank} is not a finite Cartan type')


def _bilinear_form(series: str, rank: int) -> np.ndarray:
  """
  The W-invariant form (α_i, α_j) on simple roots, normalized so that short roots have squared
  length 2. Bourbaki numbering.
  """

  n = rank
  form = np.zeros((n, n), dtype=np.int64)
  edges: t.List[t.Tuple[int, int]]

  if series in 'ADE':
    lengths = [2] * n
    if series == 'A':
      edges = [(i, i + 1) for i in range(n - 1)]
    elif series == 'D':
      edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    else:
      edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] + [(i, i + 1) for i in range(5, n - 1)]
  elif series == 'B':
    lengths = [4] * (n - 1) + [2]
    edges = [(i, i + 1) for i in range(n - 1)]
  elif series == 'C':
    lengths = [2] * (n - 1) + [4]
    edges = [(i, i + 1) for i in range(n - 1)]
  elif series == 'F':
    lengths = [4, 4, 2, 2]
    edges = [(0, 1), (1, 2), (2, 3)]
  else:
    lengths = [2, 6]
    edges = [(0, 1)]

  for i, length in enumerate(lengths):
    form[i, i] = length
  for i, j in edges:
    # Joined nodes: (α_i, α_j) = -max(|α_i|², |α_j|²) / 2.
    form[i, j] = form[j, i] = -max(lengths[i], lengths[j]) // 2
  return form


class CartanDatum:
  """
  A finite root system together with its enumerated positive roots, coroots, ρ, the highest root θ
  and the highest short root φ. Use #build_root_system() to construct one.
  """

  def __init__(self, series: str, rank: int, form: np.ndarray) -> None:
    self.series = series
    self.rank = rank
    self.form = form
    diag = np.diag(form)
    self._matrix = (2 * form) // diag[:, None]
    self.cartan_matrix: t.Tuple[t.Tuple[int, ...], ...] = tuple(tuple(int(x) for x in row) for row in self._matrix)
    self.symmetrizer: t.Tuple[int, ...] = tuple(int(x) // 2 for x in diag)
    self._validate()

    self.positive_roots: t.List[RootVector] = self._enumerate_positive_roots()
    self.roots: t.List[RootVector] = self.positive_roots + [-b for b in self.positive_roots]
    self._root_index = {b: k for k, b in enumerate(self.roots)}
    self.coroots: t.List[CorootVector] = [self._compute_coroot(b) for b in self.roots]
    self._coroot_index = {c: k for k, c in enumerate(self.coroots)}

    self.rho = Weight((1,) * rank)
    self.highest_root = max(self.positive_roots, key=lambda b: (b.height, b.coords))
    short = min(self._half_norm(b) for b in self.positive_roots)
    self.highest_short_root = max(
      (b for b in self.positive_roots if self._half_norm(b) == short),
      key=lambda b: (b.height, b.coords))

    expected = positive_root_count(series, rank)
    if len(self.positive_roots) != expected:
      raise InvariantViolation(f'{self.name}: found {len(self.positive_roots)} positive roots, expected {expected}')
    log.debug('%s: %d positive roots, θ = %s, φ = %s', self.name, expected, self.highest_root, self.highest_short_root)

  def __repr__(self) -> str:
    return f'CartanDatum({self.name})'

  @property
  def name(self) -> str:
    return f'{self.series}{self.rank}'

  def _validate(self) -> None:
    a = self._matrix
    n = self.rank
    for i in range(n):
      if a[i, i] != 2:
        raise InvariantViolation(f'{self.name}: diagonal Cartan entry {a[i, i]} != 2')
      for j in range(n):
        if i != j and (a[i, j] > 0 or (a[i, j] == 0) != (a[j, i] == 0)):
          raise InvariantViolation(f'{self.name}: Cartan matrix entry ({i}, {j}) is not of finite type')
    if round(float(np.linalg.det(a))) <= 0 or min(np.linalg.eigvalsh(self.form.astype(float))) <= 0:
      raise InvariantViolation(f'{self.name}: Cartan matrix is not of finite type')

  def _reflect(self, i: int, coords: t.Tuple[int, ...]) -> t.Tuple[int, ...]:
    """ s_i on root-lattice coordinates, *i* counted from 0. """

    p = sum(int(self._matrix[i, j]) * c for j, c in enumerate(coords))
    out = list(coords)
    out[i] -= p
    return tuple(out)

  def _enumerate_positive_roots(self) -> t.List[RootVector]:
    n = self.rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
      coords = queue.pop()
      for i in range(n):
        image = self._reflect(i, coords)
        if image not in seen and all(x >= 0 for x in image) and any(image):
          seen.add(image)
          queue.append(image)
    return sorted((RootVector(c) for c in seen), key=lambda b: (b.height, b.coords))

  def _half_norm(self, root: RootVector) -> int:
    c = np.array(root.coords, dtype=np.int64)
    return int(c @ self.form @ c) // 2

  def _compute_coroot(self, root: RootVector) -> CorootVector:
    # β = Σ c_j α_j = Σ c_j d_j α_j∨, and β∨ = β / d_β.
    d = self._half_norm(root)
    scaled = [c * dj for c, dj in zip(root.coords, self.symmetrizer)]
    if any(x % d for x in scaled):
      raise InvariantViolation(f'{self.name}: coroot of {root} is not integral')
    return CorootVector(tuple(x // d for x in scaled))

  # Lookups

  @property
  def num_positive_roots(self) -> int:
    return len(self.positive_roots)

  def simple_root(self, i: int) -> RootVector:
    return self.positive_roots[self.root_index(RootVector(tuple(1 if j == i - 1 else 0 for j in range(self.rank))))]

  def root_index(self, root: RootVector) -> int:
    try:
      return self._root_index[root]
    except KeyError:
      raise ArgumentError(f'{root} is not a root of {self.name}')

  def is_root(self, root: RootVector) -> bool:
    return root in self._root_index

  def coroot(self, root: RootVector) -> CorootVector:
    return self.coroots[self.root_index(root)]

  def root_of_coroot(self, coroot: CorootVector) -> RootVector:
    try:
      return self.roots[self._coroot_index[coroot]]
    except KeyError:
      raise ArgumentError(f'{coroot} is not a coroot of {self.name}')

  def is_short(self, root: RootVector) -> bool:
    return self._half_norm(root) == self._half_norm(self.highest_short_root)

  def root_to_weight(self, root: RootVector) -> Weight:
    return Weight(tuple(int(x) for x in self._matrix @ np.array(root.coords, dtype=np.int64)))

  def root_pairing(self, alpha: RootVector, beta: RootVector) -> int:
    """ ⟨α, β∨⟩ for two roots. """

    return pairing(self.root_to_weight(alpha), self.coroot(beta))

  def positive_roots_in(self, S: ParabolicSubset) -> t.List[RootVector]:
    """ Δ⁺_S, the positive roots supported on S. """

    return [b for b in self.positive_roots if all(c == 0 or (i + 1) in S for i, c in enumerate(b.coords))]

  def positive_roots_outside(self, S: ParabolicSubset) -> t.List[RootVector]:
    """ Δ⁺ ∖ Δ⁺_S. """

    inside = set(self.positive_roots_in(S))
    return [b for b in self.positive_roots if b not in inside]

  def quantum_shift(self, beta: RootVector, S: ParabolicSubset) -> int:
    """ ⟨2ρ − 2ρ_S, β∨⟩, the length drop (plus one) along a quantum edge labeled β. """

    two_rho_s = sum(self.root_pairing(a, beta) for a in self.positive_roots_in(S))
    return 2 * pairing(self.rho, self.coroot(beta)) - two_rho_s


def build_root_system(series: str, rank: int, limits: t.Optional[Limits] = None) -> CartanDatum:
  """
  Build the root system of type *series*/*rank* (Bourbaki numbering).

  # Raises
  ConfigurationError: If the type does not exist or its rank exceeds #Limits.max_rank (G2 excepted).
  """

  limits = limits or Limits()
  series = series.upper()
  _check_type(series, rank)
  if rank > limits.max_rank and (series, rank) != ('G', 2):
    raise ConfigurationError(f'{series}{rank}: rank {rank} exceeds the configured bound {limits.max_rank} (QBGC_MAX_RANK)')
  return CartanDatum(series, rank, _bilinear_form(series, rank))


@dataclasses.dataclass(frozen=True, eq=False)
class WeylElement:
  """
  An element of an enumerated Weyl group. Equality is decided by the action matrix on
  fundamental-weight coordinates; the canonical word is the lexicographically smallest reduced word.
  """

  index: int
  action: t.Tuple[t.Tuple[int, ...], ...]
  canonical_word: Word
  length: int

  def __eq__(self, other: object) -> bool:
    if self is other:
      return True
    if not isinstance(other, WeylElement):
      return NotImplemented
    return self.action == other.action

  def __hash__(self) -> int:
    return hash(self.index)

  def __repr__(self) -> str:
    return f'WeylElement({self})'

  def __str__(self) -> str:
    return word_to_string(self.canonical_word)


def word_to_string(word: t.Sequence[int]) -> str:
  return ' '.join(f's{i}' for i in word) if word else 'e'


class WeylGroup:
  """
  The Weyl group of a #CartanDatum, enumerated by breadth-first search over right multiplication by
  simple reflections. Elements are indexed by (length, canonical word). Use #weyl_enumerate().
  """

  def __init__(self, datum: CartanDatum, limits: t.Optional[Limits] = None) -> None:
    limits = limits or Limits()
    expected = weyl_group_order(datum.series, datum.rank)
    if expected > limits.max_weyl_order:
      raise ResourceLimitExceeded('|W|', limits.max_weyl_order, expected, f'{datum.name}; raise QBGC_MAX_W')

    self.datum = datum
    n = datum.rank
    A = datum._matrix
    gens = [np.eye(n, dtype=np.int64) - np.outer(A[:, i], np.eye(n, dtype=np.int64)[i]) for i in range(n)]
    gen_perm = [[datum.root_index(RootVector(datum._reflect(i, b.coords))) for b in datum.roots] for i in range(n)]

    mats = [np.eye(n, dtype=np.int64)]
    perms = [list(range(len(datum.roots)))]
    lengths = [0]
    by_key = {mats[0].tobytes(): 0}
    right: t.Dict[int, t.List[int]] = {}
    frontier = [0]
    while frontier:
      upcoming = []
      for idx in frontier:
        row = []
        for i in range(n):
          m = mats[idx] @ gens[i]
          key = m.tobytes()
          j = by_key.get(key)
          if j is None:
            j = len(mats)
            if j >= limits.max_weyl_order and j >= expected:
              raise ResourceLimitExceeded('|W|', limits.max_weyl_order, j + 1)
            by_key[key] = j
            mats.append(m)
            lengths.append(lengths[idx] + 1)
            perms.append([perms[idx][gen_perm[i][b]] for b in range(len(datum.roots))])
            upcoming.append(j)
          row.append(j)
        right[idx] = row
      frontier = upcoming

    if len(mats) != expected:
      raise InvariantViolation(f'{datum.name}: enumerated {len(mats)} Weyl group elements, expected {expected}')

    left = {idx: [by_key[(gens[i] @ mats[idx]).tobytes()] for i in range(n)] for idx in range(len(mats))}

    # Leftmost descent recursion; BFS order visits shorter elements first.
    words: t.Dict[int, Word] = {0: ()}
    for idx in sorted(range(len(mats)), key=lambda k: lengths[k]):
      if idx == 0:
        continue
      i = next(i for i in range(n) if lengths[left[idx][i]] < lengths[idx])
      words[idx] = (i + 1,) + words[left[idx][i]]

    order = sorted(range(len(mats)), key=lambda k: (lengths[k], words[k]))
    renumber = {old: new for new, old in enumerate(order)}
    self._mats = [mats[old] for old in order]
    self._perms = [perms[old] for old in order]
    self._right = [[renumber[j] for j in right[old]] for old in order]
    self._by_key = {m.tobytes(): k for k, m in enumerate(self._mats)}
    self.elements: t.List[WeylElement] = [
      WeylElement(k, tuple(tuple(int(x) for x in row) for row in self._mats[k]), words[old], lengths[old])
      for k, old in enumerate(order)]
    self._mul_cache: t.Dict[t.Tuple[int, int], WeylElement] = {}
    self._inverse_cache: t.Dict[int, WeylElement] = {}
    self._reflection_cache: t.Dict[int, WeylElement] = {}

    self.identity = self.elements[0]
    self.longest = self.elements[-1]
    if self.longest.length != datum.num_positive_roots or self.elements[-2].length == self.longest.length:
      raise InvariantViolation(f'{datum.name}: longest element has length {self.longest.length}')
    log.debug('%s: |W| = %d, ℓ(w₀) = %d, w₀ = %s', datum.name, len(self.elements), self.longest.length, self.longest)

  def __repr__(self) -> str:
    return f'WeylGroup({self.datum.name}, order={len(self.elements)})'

  def __len__(self) -> int:
    return len(self.elements)

  def __iter__(self) -> t.Iterator[WeylElement]:
    return iter(self.elements)

  def __getitem__(self, index: int) -> WeylElement:
    return self.elements[index]

  @property
  def rank(self) -> int:
    return self.datum.rank

  def _element(self, m: np.ndarray) -> WeylElement:
    try:
      return self.elements[self._by_key[m.astype(np.int64).tobytes()]]
    except KeyError:
      raise InvariantViolation(f'{self.datum.name}: matrix is not in the Weyl group')

  # Group structure

  def generator(self, i: int) -> WeylElement:
    if not 1 <= i <= self.rank:
      raise ArgumentError(f'generator s{i} out of range 1..{self.rank}')
    return self.elements[self._right[0][i - 1]]

  def right_generator(self, w: WeylElement, i: int) -> WeylElement:
    """ w s_i. """

    return self.elements[self._right[w.index][i - 1]]

  def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
    key = (u.index, v.index)
    result = self._mul_cache.get(key)
    if result is None:
      result = self._mul_cache[key] = self._element(self._mats[u.index] @ self._mats[v.index])
    return result

  def inverse(self, w: WeylElement) -> WeylElement:
    result = self._inverse_cache.get(w.index)
    if result is None:
      result = self._inverse_cache[w.index] = self.from_word(tuple(reversed(w.canonical_word)))
    return result

  def from_word(self, word: t.Sequence[int]) -> WeylElement:
    """ The product of the simple reflections in *word*; the word need not be reduced. """

    idx = 0
    for i in word:
      if not 1 <= i <= self.rank:
        raise ArgumentError(f'generator s{i} out of range 1..{self.rank}')
      idx = self._right[idx][i - 1]
    return self.elements[idx]

  def is_reduced(self, word: t.Sequence[int]) -> bool:
    return self.from_word(word).length == len(word)

  def parse(self, text: str) -> WeylElement:
    """
    Parse `"e"`, `"w0"` or a word such as `"s1 s2"` / `"s1s2"`. Non-reduced words are accepted and
    normalized.
    """

    text = text.strip()
    if text in ('e', '1', 'id', ''):
      return self.identity
    if text == 'w0':
      return self.longest
    stripped = _GENERATOR_RE.sub('', text).replace(' ', '').replace('*', '').replace('·', '')
    if stripped:
      raise ArgumentError(f'not a Weyl group word: {text!r}')
    return self.from_word([int(x) for x in _GENERATOR_RE.findall(text)])

  # Actions

  def act(self, w: WeylElement, lam: Weight) -> Weight:
    if lam.rank != self.rank:
      raise ArgumentError(f'rank mismatch: {lam} for {self.datum.name}')
    return Weight(tuple(int(x) for x in self._mats[w.index] @ np.array(lam.coords, dtype=np.int64)))

  def act_root(self, w: WeylElement, root: RootVector) -> RootVector:
    return self.datum.roots[self._perms[w.index][self.datum.root_index(root)]]

  def act_coroot(self, w: WeylElement, coroot: CorootVector) -> CorootVector:
    return self.datum.coroot(self.act_root(w, self.datum.root_of_coroot(coroot)))

  def reflection(self, root: RootVector) -> WeylElement:
    """ s_β for a root β (s_β = s_{−β}). """

    k = self.datum.root_index(root)
    result = self._reflection_cache.get(k)
    if result is None:
      n = self.rank
      b = np.array(self.datum.root_to_weight(root).coords, dtype=np.int64)
      c = np.array(self.datum.coroot(root).coords, dtype=np.int64)
      result = self._reflection_cache[k] = self._element(np.eye(n, dtype=np.int64) - np.outer(b, c))
    return result

  def inversion_count(self, w: WeylElement) -> int:
    """ #(Δ⁺ ∩ w⁻¹Δ⁻), counted directly on the root permutation. """

    return sum(1 for b in self.datum.positive_roots if self.act_root(w, b).is_negative())

  # Parabolic cosets

  def coset_min(self, w: WeylElement, S: ParabolicSubset) -> WeylElement:
    """ ⌊w⌋, the minimal-length representative of wW_S. """

    idx = w.index
    lowered = True
    while lowered:
      lowered = False
      for i in S:
        j = self._right[idx][i - 1]
        if self.elements[j].length < self.elements[idx].length:
          idx = j
          lowered = True
    return self.elements[idx]

  def parabolic_subgroup(self, S: ParabolicSubset) -> t.List[WeylElement]:
    """ W_S; its elements are exactly those whose reduced words use only letters from S. """

    return [w for w in self.elements if all(i in S for i in w.canonical_word)]

  def min_coset_representatives(self, S: ParabolicSubset) -> t.List[WeylElement]:
    """ W^S in index order. """

    return [w for w in self.elements if all(self.right_generator(w, i).length > w.length for i in S)]

  def coset(self, w: WeylElement, S: ParabolicSubset) -> t.List[WeylElement]:
    """ The members of wW_S. """

    return sorted({self.mul(w, x) for x in self.parabolic_subgroup(S)}, key=lambda x: x.index)

  def longest_in(self, S: ParabolicSubset) -> WeylElement:
    """ w₀^S, the longest element of W_S. """

    return max(self.parabolic_subgroup(S), key=lambda x: x.length)

  def reduced_words(self, w: WeylElement) -> t.List[Word]:
    """ All reduced words of *w* in lexicographic order. """

    memo: t.Dict[int, t.List[Word]] = {0: [()]}

    def words(x: WeylElement) -> t.List[Word]:
      if x.index not in memo:
        memo[x.index] = [
          prefix + (i,)
          for i in range(1, self.rank + 1)
          if self.right_generator(x, i).length < x.length
          for prefix in words(self.right_generator(x, i))]
      return memo[x.index]

    return sorted(words(w))


def weyl_enumerate(datum: CartanDatum, limits: t.Optional[Limits] = None) -> WeylGroup:
  """
  Enumerate the Weyl group of *datum*.

  # Raises
  ResourceLimitExceeded: If |W| exceeds #Limits.max_weyl_order.
  """

  return WeylGroup(datum, limits)


class OrderDirection(enum.Enum):
  #: β₁ ≺ β₂ ≺ ⋯ ≺ β_N, the order attached to a reduced word of w₀ in the quantum Bruhat graph setting.
  INCREASING = enum.auto()

  #: β₁ ≻ β₂ ≻ ⋯ ≻ β_N, the order used for the inversion table and the bijection.
  DECREASING = enum.auto()


@dataclasses.dataclass(frozen=True)
class ReflectionOrder:
  """
  A total order ≺ on Δ⁺ induced by a reduced word i₁⋯i_N of w₀ through
  β_k = s_{i_N}⋯s_{i_{k+1}} α_{i_k}. #roots lists Δ⁺ in ≺-increasing order.
  """

  word: Word
  direction: OrderDirection
  sequence: t.Tuple[RootVector, ...]
  roots: t.Tuple[RootVector, ...]
  _position: t.Dict[RootVector, int] = dataclasses.field(default_factory=dict, compare=False, repr=False)

  def __post_init__(self) -> None:
    self._position.update({b: k for k, b in enumerate(self.roots)})

  def position(self, root: RootVector) -> int:
    try:
      return self._position[root]
    except KeyError:
      raise ArgumentError(f'{root} is not a positive root')

  def precedes(self, alpha: RootVector, beta: RootVector) -> bool:
    """ α ≺ β. """

    return self.position(alpha) < self.position(beta)

  def reversed(self) -> 'ReflectionOrder':
    direction = OrderDirection.INCREASING if self.direction == OrderDirection.DECREASING else OrderDirection.DECREASING
    return ReflectionOrder(self.word, direction, self.sequence, tuple(reversed(self.roots)))

  def is_reflection_order(self, datum: CartanDatum) -> bool:
    """
    Whenever γ∨ = α∨ + β∨ for α, β, γ ∈ Δ⁺, γ lies strictly between α and β.
    """

    coroot_to_root = {datum.coroot(b): b for b in datum.positive_roots}
    for a in datum.positive_roots:
      for b in datum.positive_roots:
        g = coroot_to_root.get(datum.coroot(a) + datum.coroot(b))
        if g is None:
          continue
        pa, pb, pg = self.position(a), self.position(b), self.position(g)
        if not (min(pa, pb) < pg < max(pa, pb)):
          return False
    return True


def reflection_order(W: WeylGroup, word: t.Sequence[int], direction: OrderDirection = OrderDirection.INCREASING) -> ReflectionOrder:
  """
  The reflection order induced by the reduced word *word* of w₀.

  # Raises
  ArgumentError: If *word* is not reduced or does not evaluate to w₀.
  """

  word = tuple(word)
  if W.from_word(word) != W.longest or len(word) != W.longest.length:
    raise ArgumentError(f'{word_to_string(word)} is not a reduced word for w₀')

  sequence: t.List[RootVector] = [RootVector(())] * len(word)
  u = W.identity
  for k in range(len(word) - 1, -1, -1):
    sequence[k] = W.act_root(u, W.datum.simple_root(word[k]))
    u = W.right_generator(u, word[k])

  if direction == OrderDirection.INCREASING:
    ascending = tuple(sequence)
  else:
    ascending = tuple(reversed(sequence))
  return ReflectionOrder(word, direction, tuple(sequence), ascending)


@dataclasses.dataclass(frozen=True)
class FixedWords:
  """
  The reduced words w₀ = v(λ₋) · w₀^S fixed for a dominant weight λ.
  """

  lam: Weight
  S: ParabolicSubset
  v_lambda_minus: WeylElement
  longest_parabolic: WeylElement
  v_word: Word
  parabolic_word: Word

  @property
  def word(self) -> Word:
    return self.v_word + self.parabolic_word

  @property
  def M(self) -> int:
    return len(self.v_word)


def fixed_words_for_lambda(W: WeylGroup, lam: Weight) -> FixedWords:
  """
  Reduced words for v(λ₋), w₀^S and their concatenation, a reduced word for w₀.

  # Raises
  ArgumentError: If *lam* is not dominant.
  """

  if lam.rank != W.rank or not lam.is_dominant():
    raise ArgumentError(f'{lam} is not a dominant weight of {W.datum.name}')

  S = ParabolicSubset.of_weight(lam)
  v = W.coset_min(W.longest, S)
  w0_s = W.mul(W.inverse(v), W.longest)
  if W.act(v, lam) != W.act(W.longest, lam) or w0_s != W.longest_in(S):
    raise InvariantViolation(f'{W.datum.name}: inconsistent coset decomposition of w₀ for {lam}')
  if v.length + w0_s.length != W.longest.length:
    raise InvariantViolation(f'{W.datum.name}: lengths of v(λ₋) and w₀^S are not additive')

  fixed = FixedWords(lam, S, v, w0_s, v.canonical_word, w0_s.canonical_word)
  if not W.is_reduced(fixed.word) or W.from_word(fixed.word) != W.longest:
    raise InvariantViolation(f'{W.datum.name}: concatenated word is not a reduced word for w₀')
  return fixed
