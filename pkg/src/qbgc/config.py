
import dataclasses
import logging
import os
import typing as t

from .exc import ConfigurationError

log = logging.getLogger(__name__)

ENV_MAX_RANK = 'QBGC_MAX_RANK'
ENV_MAX_W = 'QBGC_MAX_W'
ENV_MAX_L = 'QBGC_MAX_L'
ENV_MAX_QLS = 'QBGC_MAX_QLS'


@dataclasses.dataclass(frozen=True)
class Limits:
  """
  Resource caps for the exhaustive enumerations. The defaults admit A1–A4, B2–B3, C2–C3, D4 and G2.
  Raise #max_weyl_order to 1152 to admit F4.
  """

  #: The largest rank accepted by #build_root_system(). G2 is accepted regardless.
  max_rank: int = 4

  #: The largest Weyl group order that will be enumerated.
  max_weyl_order: int = 192

  #: The largest L for which the full power set B(w; t(w₀λ)) is streamed.
  max_alcove_length: int = 20

  #: Weights whose QLS set is larger than this are skipped by grid verification.
  max_qls: int = 20000

  @staticmethod
  def from_env(environ: t.Optional[t.Mapping[str, str]] = None, **overrides: t.Optional[int]) -> 'Limits':
    """
    Read limits from `QBGC_MAX_RANK`, `QBGC_MAX_W`, `QBGC_MAX_L` and `QBGC_MAX_QLS`. Keyword arguments
    that are not #None take precedence over the environment.
    """

    environ = os.environ if environ is None else environ
    values: t.Dict[str, int] = {}
    for field, var in (
      ('max_rank', ENV_MAX_RANK),
      ('max_weyl_order', ENV_MAX_W),
      ('max_alcove_length', ENV_MAX_L),
      ('max_qls', ENV_MAX_QLS),
    ):
      raw = environ.get(var)
      if raw is not None:
        values[field] = _parse_positive(var, raw)
    for key, value in overrides.items():
      if value is not None:
        values[key] = _parse_positive(key, str(value))
    limits = Limits(**values)
    log.debug('Using %s', limits)
    return limits


def _parse_positive(name: str, raw: str) -> int:
  try:
    value = int(raw)
  except ValueError:
    raise ConfigurationError(f'{name}: expected a positive integer, got {raw!r}')
  if value <= 0:
    raise ConfigurationError(f'{name}: expected a positive integer, got {value}')
  return value
