
import pytest

from qbgc.cartan import ParabolicSubset, Weight
from qbgc.config import Limits
from qbgc.exc import ArgumentError
from qbgc.session import open_session


def test__open_session__is_cached() -> None:
  assert open_session('A', 2) is open_session('a', 2)
  assert open_session('A', 2) is open_session('A', 2, Limits())
  assert open_session('A', 2) is not open_session('B', 2)
  assert open_session('A', 2) is not open_session('A', 2, Limits(max_qls=8))


def test__Session__weight() -> None:
  session = open_session('A', 2)
  assert session.weight('1,0') == Weight((1, 0))
  assert session.weight([0, 2]) == Weight((0, 2))
  with pytest.raises(ArgumentError):
    session.weight('1')
  with pytest.raises(ArgumentError):
    session.weight((1, -1))


def test__Session__caches_models() -> None:
  session = open_session('B', 2)
  lam = Weight((1, 0))
  assert session.table(lam) is session.table(lam)
  assert session.qls(lam) is session.qls(lam)
  assert session.parabolic(ParabolicSubset()) is session.qbg
  assert session.qls_count(lam) == 5


def test__Session__summary() -> None:
  summary = open_session('A', 1).summary()
  assert summary.type == 'A1'
  assert summary.weyl_group_order == 2
  assert summary.positive_roots == [[1]]
  assert summary.longest_element == 's1'
