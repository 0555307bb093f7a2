
import dataclasses
import typing as t


class QbgcException(Exception):
  pass


class ConfigurationError(QbgcException):
  """
  Raised for Cartan types that do not exist or that lie outside the configured #Limits, and for
  malformed limit values.
  """


class ArgumentError(QbgcException, ValueError):
  """
  Raised when an operation receives an argument outside of its domain, e.g. a non-dominant weight
  where a dominant one is required or a path that is not a member of the set it claims to be in.
  """


@dataclasses.dataclass
class ResourceLimitExceeded(QbgcException):
  """
  Raised when an enumeration would exceed one of the configured #Limits.
  """

  resource: str
  limit: int
  actual: int
  hint: t.Optional[str] = None

  def __str__(self) -> str:
    message = f'{self.resource} = {self.actual} exceeds the configured limit {self.limit}'
    if self.hint:
      message += f' ({self.hint})'
    return message


class InvariantViolation(QbgcException):
  """
  An internal consistency check failed. This signals a bug in the implementation, never bad input.
  """
