
from fractions import Fraction

import pytest

from qbgc.affine import AffineRoot, ExtendedAffineElement, ExtendedAffineWeylGroup, inversion_table, phi
from qbgc.cartan import CorootVector, RootVector, Weight, build_root_system, weyl_enumerate
from qbgc.exc import ArgumentError


def _group(series: str, rank: int):
  return weyl_enumerate(build_root_system(series, rank))


def test__ExtendedAffineWeylGroup__composition() -> None:
  W = _group('A', 1)
  affine = ExtendedAffineWeylGroup(W)
  s = W.generator(1)
  assert affine.compose(affine.translation(Weight((1,))), affine.translation(Weight((2,)))) == affine.translation(Weight((3,)))
  assert affine.compose(affine.translation(Weight((-1,))), ExtendedAffineElement(Weight((2,)), s)) == ExtendedAffineElement(Weight((1,)), s)

  x = ExtendedAffineElement(Weight((3,)), s)
  assert affine.invert(x) == ExtendedAffineElement(Weight((3,)), s)
  assert affine.compose(x, affine.invert(x)) == affine.finite(W.identity)


def test__ExtendedAffineWeylGroup__affine_reflection() -> None:
  W = _group('B', 2)
  affine = ExtendedAffineWeylGroup(W)
  datum = W.datum
  s0 = affine.affine_reflection(AffineRoot(-datum.coroot(phi(W)), 1))
  assert s0 == ExtendedAffineElement(datum.root_to_weight(phi(W)), W.reflection(phi(W)))

  alpha = datum.simple_root(1)
  assert affine.affine_reflection(AffineRoot(datum.coroot(alpha), 0)) == affine.finite(W.reflection(alpha))

  for beta in datum.roots:
    r = affine.affine_reflection(AffineRoot(datum.coroot(beta), 2))
    assert affine.compose(r, r) == affine.finite(W.identity)

  with pytest.raises(ArgumentError):
    affine.affine_reflection(AffineRoot(CorootVector.zero(2), 1))


def test__inversion_table__rank_one() -> None:
  W = _group('A', 1)
  table = inversion_table(W, Weight((1,)))
  assert table.L == 1
  entry = table.entry(1)
  assert entry.root == AffineRoot(CorootVector((-1,)), 1)
  assert entry.a == 1 and entry.d == 0
  assert entry.finite_label == RootVector((1,))

  table = inversion_table(W, Weight((2,)))
  assert table.L == 2
  assert [e.d for e in table] == [Fraction(0), Fraction(1, 2)]
  assert [e.a for e in table] == [2, 1]
  assert table.index_of(AffineRoot(CorootVector((-1,)), 1)) == 2

  assert inversion_table(W, Weight((0,))).L == 0
  with pytest.raises(ArgumentError):
    table.entry(3)


def test__inversion_table__length_and_alignment() -> None:
  """
  L = Σ ⟨λ, β∨⟩ and the d = 0 block projects onto the leading roots of the fixed reduced word.
  """

  for series, rank in (('A', 2), ('B', 2), ('G', 2), ('A', 3)):
    W = _group(series, rank)
    for coords in ((1,) * rank, (1,) + (0,) * (rank - 1), (0,) * (rank - 1) + (2,)):
      lam = Weight(coords)
      table = inversion_table(W, lam)
      assert table.L == sum(lam.coords[i] * c for b in W.datum.positive_roots for i, c in enumerate(W.datum.coroot(b).coords))
      assert table.aligned_with_fixed_word()
      keys = [table.phi_key(e) for e in table]
      assert keys == sorted(keys)
      for e in table:
        assert e.projected_label not in W.datum.positive_roots_in(table.S)


def test__inversion_table__json() -> None:
  data = inversion_table(_group('A', 1), Weight((2,))).to_json()
  assert data['length'] == 2
  assert [e['d'] for e in data['entries']] == ['0', '1/2']
  assert data['entries'][0]['finite_part'] == [-1]


def test__inversion_table__rejects_non_dominant_weights() -> None:
  with pytest.raises(ArgumentError):
    inversion_table(_group('A', 2), Weight((-1, 1)))
