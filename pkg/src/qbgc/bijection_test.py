
import pytest

from qbgc.bijection import check_preservation, xi, xi_inverse
from qbgc.cartan import Weight
from qbgc.exc import ArgumentError
from qbgc.qls import QlsPath
from qbgc.session import open_session


def test__xi__rank_one() -> None:
  session = open_session('A', 1)
  lam = Weight((1,))
  W = session.W
  e, s = W.identity, W.generator(1)

  ctx = session.context(lam, e)
  assert xi(ctx, ctx.alcoves.path(e, ())) == QlsPath.of([s], [0, 1])
  assert xi(ctx, ctx.alcoves.path(e, (1,))) == QlsPath.of([e], [0, 1])
  assert xi_inverse(ctx, QlsPath.of([e], [0, 1])).J == (1,)
  assert xi_inverse(ctx, QlsPath.of([s], [0, 1])).J == ()

  ctx = session.context(lam, s)
  assert xi(ctx, ctx.alcoves.path(s, (1,))) == QlsPath.of([s], [0, 1])
  assert xi(ctx, ctx.alcoves.path(s, ())) == QlsPath.of([e], [0, 1])


def test__xi__empty_path_maps_to_the_anchor_coset() -> None:
  """
  Ξ_w(p_∅) = (⌊w v(λ₋)⌋; 0, 1).
  """

  session = open_session('B', 2)
  W = session.W
  for lam in (Weight((1, 0)), Weight((0, 1)), Weight((1, 1))):
    v = session.table(lam).fixed.v_lambda_minus
    for w in W:
      ctx = session.context(lam, w)
      expected = QlsPath.of([W.coset_min(W.mul(w, v), ctx.S)], [0, 1])
      assert xi(ctx, ctx.alcoves.path(w, ())) == expected
      assert xi_inverse(ctx, expected).J == ()


def test__xi__rejects_foreign_paths() -> None:
  session = open_session('A', 1)
  W = session.W
  ctx = session.context(Weight((1,)), W.identity)
  with pytest.raises(ArgumentError):
    xi(ctx, ctx.alcoves.path(W.generator(1), (1,)))
  with pytest.raises(ArgumentError):
    xi_inverse(ctx, QlsPath.of([W.identity, W.generator(1)], [0, '1/2', 1]))


def test__check_preservation__rank_one() -> None:
  session = open_session('A', 1)
  s = session.W.generator(1)
  ctx = session.context(Weight((1,)), s)
  record = check_preservation(ctx, ctx.alcoves.path(s, (1,)))
  assert record.ok
  assert record.end_weight == Weight((-1,))
  assert record.degree == record.image_degree == 1


@pytest.mark.parametrize('series,rank,coords', [
  ('A', 1, (2,)),
  ('A', 2, (1, 1)),
  ('A', 2, (2, 0)),
  ('B', 2, (1, 1)),
  ('G', 2, (1, 0)),
])
def test__xi__is_a_weight_and_degree_preserving_bijection(series: str, rank: int, coords: tuple) -> None:
  session = open_session(series, rank)
  lam = Weight(coords)
  targets = set(session.qls(lam).enumerate())
  for w in session.W:
    ctx = session.context(lam, w)
    images = set()
    for path in ctx.alcoves.enumerate_qb(w):
      record = check_preservation(ctx, path)
      assert record.ok, f'{path} -> {record.image}'
      assert xi_inverse(ctx, record.image).J == path.J
      images.add(record.image)
    assert images == targets
