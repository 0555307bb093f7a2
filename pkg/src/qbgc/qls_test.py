
from fractions import Fraction

import pytest

from qbgc.cartan import ParabolicSubset, Weight
from qbgc.charpoly import GradedCharacter
from qbgc.exc import ArgumentError
from qbgc.qls import DegStats, QlsModel, QlsPath, candidate_breaks
from qbgc.session import open_session

PLUS = Weight((1,))
MINUS = Weight((-1,))


def _model(series: str, rank: int, *coords: int) -> QlsModel:
  return open_session(series, rank).qls(Weight(coords))


def test__QlsPath__validation() -> None:
  W = open_session('A', 1).W
  e, s = W.identity, W.generator(1)
  assert str(QlsPath.of([e], [0, 1])) == '(e; 0, 1)'
  assert QlsPath.of([s, e], [0, '1/2', 1]).s == 2
  with pytest.raises(ArgumentError):
    QlsPath.of([e], [0, '1/2', 1])
  with pytest.raises(ArgumentError):
    QlsPath.of([e, s], [0, 1, 1])
  with pytest.raises(ArgumentError):
    QlsPath.of([e, e], [0, '1/2', 1])
  with pytest.raises(ArgumentError):
    QlsPath.of([e], [0, '1/2'])


def test__candidate_breaks() -> None:
  W = open_session('A', 1).W
  assert candidate_breaks(W, PLUS) == []
  assert candidate_breaks(W, Weight((2,))) == [Fraction(1, 2)]
  assert candidate_breaks(W, Weight((3,))) == [Fraction(1, 3), Fraction(2, 3)]


def test__QlsModel__enumerate_rank_one() -> None:
  model = _model('A', 1, 1)
  assert [str(eta) for eta in model.enumerate()] == ['(e; 0, 1)', '(s1; 0, 1)']

  assert [str(eta) for eta in _model('A', 1, 0).enumerate()] == ['(e; 0, 1)']

  double = _model('A', 1, 2)
  assert sorted(str(eta) for eta in double.enumerate()) == [
    '(e, s1; 0, 1/2, 1)', '(e; 0, 1)', '(s1, e; 0, 1/2, 1)', '(s1; 0, 1)']


def test__QlsModel__counts() -> None:
  assert _model('A', 2, 1, 0).count() == 3
  assert _model('A', 2, 0, 1).count() == 3
  assert _model('A', 2, 1, 1).count() == 9
  assert _model('B', 2, 1, 0).count() == 5
  assert _model('B', 2, 0, 1).count() == 4
  assert _model('A', 3, 0, 1, 0).count() == 6


def test__QlsModel__paths_are_enumerated_once() -> None:
  model = QlsModel(open_session('A', 2).parabolic(ParabolicSubset()), Weight((1, 1)))
  paths = model.paths()
  assert model.paths() is paths
  assert paths == list(model.enumerate())
  assert model.count() == 9


def test__QlsModel__enumerate_from_a_vertex() -> None:
  model = _model('A', 2, 1, 1)
  by_vertex = [eta for v in model.representatives for eta in model.enumerate(v)]
  assert by_vertex == list(model.enumerate())
  with pytest.raises(ArgumentError):
    list(_model('A', 2, 1, 0).enumerate(model.W.generator(2)))


def test__QlsModel__requires_a_matching_parabolic_graph() -> None:
  session = open_session('A', 2)
  with pytest.raises(ArgumentError):
    QlsModel(session.qbg, Weight((1, 0)))
  with pytest.raises(ArgumentError):
    QlsModel(session.parabolic(ParabolicSubset()), Weight((1, -1)))


def test__QlsModel__membership() -> None:
  model = _model('B', 2, 1, 1)
  for eta in model.enumerate():
    assert model.is_valid(eta)
    assert model.is_valid_shortest(eta)
  W = model.W
  assert not model.is_valid(QlsPath.of([W.identity, W.longest], [0, '1/3', 1]))


def test__QlsModel__wt() -> None:
  model = _model('A', 1, 2)
  W = model.W
  e, s = W.identity, W.generator(1)
  assert model.wt(QlsPath.of([e], [0, 1])) == Weight((2,))
  assert model.wt(QlsPath.of([s], [0, 1])) == Weight((-2,))
  assert model.wt(QlsPath.of([s, e], [0, '1/2', 1])) == Weight((0,))


def test__QlsModel__deg_stats() -> None:
  model = _model('A', 1, 1)
  W = model.W
  e, s = W.identity, W.generator(1)
  assert model.deg_stats(QlsPath.of([e], [0, 1]), e) == DegStats(0, 0, 0, 0)
  assert model.deg_stats(QlsPath.of([e], [0, 1]), s).deg_up == 0
  assert model.deg_stats(QlsPath.of([s], [0, 1]), e).deg_up == 1
  assert model.deg_stats(QlsPath.of([e], [0, 1]), s).deg_down == 1


def test__QlsModel__deg_stats_with_a_break() -> None:
  """
  The inner junction s1 ⇒ e has λ-weight 2 for λ = 2ϖ and is weighted by 1/2 on both sides.
  """

  model = _model('A', 1, 2)
  W = model.W
  e, s = W.identity, W.generator(1)
  stats = model.deg_stats(QlsPath.of([e, s], [0, '1/2', 1]), s)
  assert stats == DegStats(deg_star_up=1, deg_star_down=1, deg_up=1, deg_down=1)


def test__QlsModel__graded_characters_rank_one() -> None:
  model = _model('A', 1, 1)
  W = model.W
  e, s = W.identity, W.generator(1)
  both = GradedCharacter.monomial(PLUS) + GradedCharacter.monomial(MINUS)
  assert model.gch_down(e) == both
  assert model.gch_down(s) == GradedCharacter.monomial(MINUS) + GradedCharacter.monomial(PLUS, q=-1)
  assert model.gch_up(e) == GradedCharacter.monomial(PLUS) + GradedCharacter.monomial(MINUS, q=-1)
  assert str(model.gch_down(s)) == 'e[-1] + q^-1 e[1]'

  zero = _model('A', 2, 0, 0)
  for w in zero.W:
    assert zero.gch_up(w) == GradedCharacter.monomial(Weight((0, 0)))


def test__QlsModel__graded_characters_agree_at_q1() -> None:
  model = _model('A', 2, 1, 1)
  reference = model.gch_up(model.W.identity).specialize_q1()
  for w in model.W:
    assert model.gch_up(w).specialize_q1() == reference
    assert model.gch_down(w).specialize_q1() == reference
    assert all(k <= 0 for k in model.gch_up(w).q_exponents())


def test__QlsModel__lusztig_T() -> None:
  model = _model('A', 2, 1, 0)
  W = model.W
  assert model.lusztig_T(QlsPath.of([W.identity], [0, 1])) == QlsPath.of([W.parse('s2 s1')], [0, 1])

  model = _model('B', 2, 1, 1)
  W = model.W
  for eta in model.enumerate():
    image = model.lusztig_T(eta)
    assert model.is_valid(image)
    assert model.lusztig_T(image) == eta
    assert model.wt(image) == W.act(W.longest, model.wt(eta))
    for w in W:
      assert model.deg_stats(image, w).deg_down == model.deg_stats(eta, W.mul(W.longest, w)).deg_up


def test__QlsModel__to_json() -> None:
  model = _model('A', 1, 2)
  W = model.W
  data = model.to_json(QlsPath.of([W.identity, W.generator(1)], [0, '1/2', 1]), W.generator(1))
  assert data['vertices'] == ['e', 's1']
  assert data['breaks'] == ['0', '1/2', '1']
  assert data['weight'] == [0]
  assert data['anchor'] == 's1'
