
"""
Plain records for everything the library exports as JSON. Rationals are written as `"p/q"` strings,
Weyl group elements as words such as `"s1 s2"` (or `"e"`), vectors as lists of integers.
"""

import dataclasses
import enum
import typing as t


class EdgeKindName(enum.Enum):
  BRUHAT = enum.auto()
  QUANTUM = enum.auto()


@dataclasses.dataclass
class RootSystemSummary:
  type: str
  rank: int
  cartan_matrix: t.List[t.List[int]]
  simple_roots: t.List[t.List[int]]
  positive_roots: t.List[t.List[int]]
  weyl_group_order: int
  longest_element: str
  highest_root: t.List[int]
  highest_short_root: t.List[int]


@dataclasses.dataclass
class GraphEdgeRecord:
  source: str
  target: str
  label: t.List[int]
  kind: EdgeKindName


@dataclasses.dataclass
class GraphExport:
  type: str
  parabolic: t.List[int]
  vertices: t.List[str]
  edges: t.List[GraphEdgeRecord]


@dataclasses.dataclass
class InversionEntryRecord:
  index: int
  finite_part: t.List[int]
  a: int
  d: str
  finite_label: t.List[int]
  projected_label: t.List[int]


@dataclasses.dataclass
class InversionTableExport:
  type: str
  weight: t.List[int]
  length: int
  entries: t.List[InversionEntryRecord]


@dataclasses.dataclass
class AlcovePathRecord:
  w: str
  J: t.List[int]
  kinds: t.List[EdgeKindName]
  end_weight: t.List[int]
  degree: int


@dataclasses.dataclass
class QlsPathRecord:
  vertices: t.List[str]
  breaks: t.List[str]
  weight: t.List[int]
  anchor: str
  deg_star_up: int
  deg_star_down: int
  deg_up: int
  deg_down: int


@dataclasses.dataclass
class CharacterTerm:
  weight: t.List[int]
  q: int
  coeff: int


@dataclasses.dataclass
class CheckRecord:
  suite: str
  name: str
  passed: bool
  weight: t.Optional[t.List[int]] = None
  w: t.Optional[str] = None
  detail: t.Optional[str] = None
  residual: t.Optional[t.List[CharacterTerm]] = None


@dataclasses.dataclass
class VerificationReport:
  type: str
  suite: str
  passed: bool
  checks: int
  failures: int
  skipped: t.List[t.List[int]]
  records: t.List[CheckRecord]
