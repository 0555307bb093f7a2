
import pytest

from qbgc.config import Limits
from qbgc.exc import ConfigurationError, ResourceLimitExceeded


def test__Limits__from_env() -> None:
  limits = Limits.from_env({'QBGC_MAX_W': '1152', 'QBGC_MAX_L': '12'})
  assert limits.max_weyl_order == 1152
  assert limits.max_alcove_length == 12
  assert limits.max_rank == Limits().max_rank


def test__Limits__overrides_take_precedence() -> None:
  limits = Limits.from_env({'QBGC_MAX_W': '1152'}, max_weyl_order=48, max_alcove_length=None)
  assert limits.max_weyl_order == 48
  assert limits.max_alcove_length == Limits().max_alcove_length


@pytest.mark.parametrize('raw', ['abc', '0', '-3'])
def test__Limits__rejects_malformed_values(raw: str) -> None:
  with pytest.raises(ConfigurationError):
    Limits.from_env({'QBGC_MAX_RANK': raw})


def test__ResourceLimitExceeded__message_names_the_resource() -> None:
  exc = ResourceLimitExceeded('L', 20, 24, 'raise QBGC_MAX_L')
  assert str(exc) == 'L = 24 exceeds the configured limit 20 (raise QBGC_MAX_L)'
