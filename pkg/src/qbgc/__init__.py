
__author__ = 'Niklas Rosenstein <rosensteinniklas@gmail.com>'
__version__ = '0.1.0'

from .cartan import (
  CartanDatum, CorootVector, ParabolicSubset, ReflectionOrder, RootVector, Weight, WeylElement, WeylGroup,
  build_root_system, fixed_words_for_lambda, pairing, reflection_order, weyl_enumerate)
from .charpoly import GradedCharacter
from .config import Limits
from .exc import ArgumentError, ConfigurationError, InvariantViolation, QbgcException, ResourceLimitExceeded
from .session import Session, open_session

__all__ = [
  'CartanDatum',
  'CorootVector',
  'ParabolicSubset',
  'ReflectionOrder',
  'RootVector',
  'Weight',
  'WeylElement',
  'WeylGroup',
  'build_root_system',
  'fixed_words_for_lambda',
  'pairing',
  'reflection_order',
  'weyl_enumerate',
  'GradedCharacter',
  'Limits',
  'ArgumentError',
  'ConfigurationError',
  'InvariantViolation',
  'QbgcException',
  'ResourceLimitExceeded',
  'Session',
  'open_session',
]
