
"""
Verification suites. Each suite computes the two sides of an identity with independent code paths
and reports one #CheckRecord per (weight, w) unit, carrying the first counterexample on failure.
"""

import concurrent.futures
import itertools
import logging
import math
import typing as t

import databind.json

from .bijection import check_preservation, xi, xi_inverse
from .cartan import CorootVector, OrderDirection, ParabolicSubset, Weight, WeylElement, reflection_order
from .charpoly import GradedCharacter
from .config import Limits
from .exc import QbgcException
from .qbg import QbgEdge, QuantumBruhatGraph, all_monotone_paths, all_shortest_paths, parabolic_path_weight, reverse_edge, wt_lambda
from .session import Session, open_session
from .types import CheckRecord, VerificationReport

log = logging.getLogger(__name__)

#: Suites that run once per dominant weight; the others run once per type.
WEIGHT_SUITES = ('theorem', 'bijection', 'involution', 'cardinality')
TYPE_SUITES = ('shellability', 'weights')
SUITES = WEIGHT_SUITES + TYPE_SUITES

#: Shellability is checked against the full shortest-path oracle only up to this group order.
SHELLABILITY_MAX_ORDER = 48


def _record(suite: str, name: str, failure: t.Optional[str], lam: t.Optional[Weight] = None,
    w: t.Optional[WeylElement] = None, residual: t.Optional[GradedCharacter] = None) -> CheckRecord:
  return CheckRecord(
    suite=suite,
    name=name,
    passed=failure is None,
    weight=None if lam is None else list(lam.coords),
    w=None if w is None else str(w),
    detail=failure,
    residual=None if residual is None or residual.is_zero() else residual.to_records())


def _elements(session: Session, ws: t.Optional[t.Sequence[WeylElement]]) -> t.Sequence[WeylElement]:
  return session.W.elements if ws is None else ws


# Per-weight suites

def check_theorem(session: Session, lam: Weight, ws: t.Optional[t.Sequence[WeylElement]] = None) -> t.List[CheckRecord]:
  """ bar(C_w) = gch^{ww₀} and w₀·bar(C_w) = gch_{w₀ww₀}, both computed independently. """

  W = session.W
  alcoves, qls = session.alcoves(lam), session.qls(lam)
  records = []
  for w in _elements(session, ws):
    lhs = alcoves.graded_character(w).bar()
    rhs = qls.gch_up(W.mul(w, W.longest))
    diff = lhs - rhs
    records.append(_record('theorem', 'bar-C-equals-gch-up', None if diff.is_zero() else f'{lhs} != {rhs}', lam, w, diff))

    lhs = lhs.weyl_act(W, W.longest)
    rhs = qls.gch_down(W.mul(W.mul(W.longest, w), W.longest))
    diff = lhs - rhs
    records.append(_record('theorem', 'w0-bar-C-equals-gch-down', None if diff.is_zero() else f'{lhs} != {rhs}', lam, w, diff))
  return records


def check_bijection(session: Session, lam: Weight, ws: t.Optional[t.Sequence[WeylElement]] = None) -> t.List[CheckRecord]:
  """ Weight and degree preservation of Ξ_w, both round trips, and bijectivity onto QLS(λ). """

  qls = session.qls(lam)
  targets = qls.paths()
  target_set = set(targets)
  records = []
  for w in _elements(session, ws):
    ctx = session.context(lam, w)
    failure: t.Optional[str] = None
    images = set()
    try:
      for path in ctx.alcoves.enumerate_qb(w):
        record = check_preservation(ctx, path)
        images.add(record.image)
        if not record.ok:
          failure = f'{path} -> {record.image}: weight {record.end_weight} vs {record.image_weight}, degree {record.degree} vs {record.image_degree}'
          break
        back = xi_inverse(ctx, record.image)
        if back.J != path.J:
          failure = f'{path} -> {record.image} -> {back}'
          break
      if failure is None and images != target_set:
        failure = f'image has {len(images)} paths, QLS({lam}) has {len(target_set)}'
      if failure is None:
        for eta in targets:
          again = xi(ctx, xi_inverse(ctx, eta))
          if again != eta:
            failure = f'{eta} -> {again}'
            break
    except QbgcException as exc:
      failure = f'{type(exc).__name__}: {exc}'
    records.append(_record('bijection', 'xi-preserves-and-inverts', failure, lam, w))
  return records


def check_involution(session: Session, lam: Weight, ws: t.Optional[t.Sequence[WeylElement]] = None) -> t.List[CheckRecord]:
  """ T² = id, wt∘T = w₀·wt, Deg_w∘T = Deg^{w₀w}, and gch_w = w₀·gch^{w₀w}. """

  W = session.W
  qls = session.qls(lam)
  paths = qls.paths()
  failure: t.Optional[str] = None
  for eta in paths:
    image = qls.lusztig_T(eta)
    if not qls.is_valid(image):
      failure = f'T{eta} = {image} is not a QLS path'
    elif qls.lusztig_T(image) != eta:
      failure = f'T(T{eta}) = {qls.lusztig_T(image)}'
    elif qls.wt(image) != W.act(W.longest, qls.wt(eta)):
      failure = f'wt(T{eta}) = {qls.wt(image)}'
    if failure:
      break
  records = [_record('involution', 'T-is-an-involution', failure, lam)]

  for w in _elements(session, ws):
    anti = W.mul(W.longest, w)
    failure = None
    for eta in paths:
      down = qls.deg_stats(qls.lusztig_T(eta), w).deg_down
      up = qls.deg_stats(eta, anti).deg_up
      if down != up:
        failure = f'Deg_w(T{eta}) = {down}, Deg^(w0 w)({eta}) = {up}'
        break
    records.append(_record('involution', 'T-swaps-degrees', failure, lam, w))

    lhs = qls.gch_down(w)
    rhs = qls.gch_up(anti).weyl_act(W, W.longest)
    diff = lhs - rhs
    records.append(_record('involution', 'gch-down-equals-w0-gch-up', None if diff.is_zero() else f'{lhs} != {rhs}', lam, w, diff))
  return records


def fundamental_counts(session: Session) -> t.List[int]:
  n = session.datum.rank
  return [session.qls_count(Weight.fundamental(n, i)) for i in range(1, n + 1)]


def expected_qls_count(session: Session, lam: Weight) -> int:
  """ Π_i |QLS(ϖ_i)|^{m_i} for λ = Σ m_iϖ_i. """

  return math.prod(c ** m for c, m in zip(fundamental_counts(session), lam.coords))


def check_cardinality(session: Session, lam: Weight, ws: t.Optional[t.Sequence[WeylElement]] = None) -> t.List[CheckRecord]:
  """ Product rule, (C) ⇔ (C′), |QB(w)| = |QLS(λ)| and w-independence at q = 1. """

  qls = session.qls(lam)
  paths = qls.paths()
  expected = expected_qls_count(session, lam)
  records = [_record('cardinality', 'product-rule', None if len(paths) == expected else f'{len(paths)} != {expected}', lam)]

  bad = next((eta for eta in paths if not qls.is_valid_shortest(eta)), None)
  records.append(_record('cardinality', 'condition-C-prime', None if bad is None else f'{bad} fails (C′)', lam))

  alcoves = session.alcoves(lam)
  reference = qls.gch_down(session.W.identity).specialize_q1()
  for w in _elements(session, ws):
    count = alcoves.count_qb(w)
    records.append(_record('cardinality', 'qb-count', None if count == len(paths) else f'|QB| = {count}, |QLS| = {len(paths)}', lam, w))
    other = qls.gch_down(w).specialize_q1()
    records.append(_record('cardinality', 'q1-independent-of-w', None if other == reference else f'{other} != {reference}', lam, w))
  return records


# Per-type suites

def check_shellability(session: Session) -> t.List[CheckRecord]:
  """
  For the canonical and the lexicographically largest reduced word of w₀, every pair (u, v) has
  exactly one label-increasing and one label-decreasing path; each is shortest and lexicographically
  extremal among all shortest paths.
  """

  W, graph = session.W, session.qbg
  if len(W) > SHELLABILITY_MAX_ORDER:
    return [CheckRecord('shellability', 'skipped', True, detail=f'|W| = {len(W)} > {SHELLABILITY_MAX_ORDER}')]
  words = W.reduced_words(W.longest)
  records = []
  for word in sorted({words[0], words[-1]}):
    order = reflection_order(W, word, OrderDirection.INCREASING)
    failure = None if order.is_reflection_order(session.datum) else 'not a reflection order'
    for u, increasing in itertools.product(W.elements, (True, False)):
      if failure:
        break
      sign = 1 if increasing else -1
      by_target: t.Dict[int, t.List[t.List[t.Any]]] = {}
      for path in all_monotone_paths(graph, u, None, order, increasing):
        by_target.setdefault(path[-1].target.index if path else u.index, []).append(path)
      for v in W.elements:
        found = by_target.get(v.index, [])
        if len(found) != 1:
          failure = f'{len(found)} monotone paths from {u} to {v}'
          break
        keys = [tuple(sign * order.position(e.label) for e in p) for p in all_shortest_paths(graph, u, v)]
        mine = tuple(sign * order.position(e.label) for e in found[0])
        if len(mine) != graph.distance(u, v) or mine != min(keys):
          failure = f'monotone path from {u} to {v} is not the extremal shortest path'
          break
    direction = ' '.join(f's{i}' for i in word)
    records.append(_record('shellability', f'word {direction}', failure))
  return records


def check_weights(session: Session, lam: t.Optional[Weight] = None) -> t.List[CheckRecord]:
  """
  Well-definedness of wt(u ⇒ v), the arrow reversal of edges, the w₀-symmetry of λ-weights and the
  agreement of λ-weights computed on W with those computed on W^S.
  """

  W, graph = session.W, session.qbg
  weights = [lam] if lam is not None else [session.datum.rho] + [Weight.fundamental(W.rank, i) for i in range(1, W.rank + 1)]

  failure = None
  for u, v in itertools.product(W.elements, W.elements):
    if any(_weight_along(graph, p) != graph.path_weight(u, v) for p in all_shortest_paths(graph, u, v)):
      failure = f'shortest paths from {u} to {v} carry different weights'
      break
  records = [_record('weights', 'well-defined', failure)]

  try:
    for edge in graph.edges():
      reverse_edge(graph, edge)
    failure = None
  except QbgcException as exc:
    failure = str(exc)
  records.append(_record('weights', 'arrow-reversal', failure))

  for mu in weights:
    failure = None
    S = ParabolicSubset.of_weight(mu)
    parabolic = session.parabolic(S)
    for x, y in itertools.product(W.elements, W.elements):
      full = wt_lambda(graph, x, y, mu)
      if full != parabolic_path_weight(parabolic, x, y, mu):
        failure = f'wt_λ({x} ⇒ {y}) differs between W and W^S'
      elif wt_lambda(graph, W.mul(W.longest, x), W.mul(W.longest, y), mu) != wt_lambda(graph, y, x, mu):
        failure = f'wt_λ(w0 {x} ⇒ w0 {y}) != wt_λ({y} ⇒ {x})'
      elif full < 0:
        failure = f'wt_λ({x} ⇒ {y}) = {full} < 0'
      if failure:
        break
    records.append(_record('weights', 'lambda-weights', failure, mu))
  return records


def _weight_along(graph: QuantumBruhatGraph, path: t.Sequence[QbgEdge]) -> CorootVector:
  total = CorootVector.zero(graph.W.rank)
  for edge in path:
    total = total + graph.edge_weight(edge)
  return total


# Driver

def dominant_grid(rank: int, max_coord: int) -> t.List[Weight]:
  return [Weight(c) for c in itertools.product(range(max_coord + 1), repeat=rank)]


def _run_unit(series: str, rank: int, limits: Limits, suite: str, coords: t.Optional[t.Tuple[int, ...]], words: t.Optional[t.List[str]]) -> t.List[CheckRecord]:
  session = open_session(series, rank, limits)
  ws = None if words is None else [session.W.parse(x) for x in words]
  lam = None if coords is None else Weight(coords)
  log.info('%s: running %s for λ = %s', session.name, suite, lam)
  if suite == 'theorem':
    return check_theorem(session, t.cast(Weight, lam), ws)
  if suite == 'bijection':
    return check_bijection(session, t.cast(Weight, lam), ws)
  if suite == 'involution':
    return check_involution(session, t.cast(Weight, lam), ws)
  if suite == 'cardinality':
    return check_cardinality(session, t.cast(Weight, lam), ws)
  if suite == 'shellability':
    return check_shellability(session)
  if suite == 'weights':
    return check_weights(session, lam)
  raise ValueError(suite)


def run_suite(
  session: Session,
  suite: str,
  weights: t.Optional[t.Sequence[Weight]] = None,
  ws: t.Optional[t.Sequence[WeylElement]] = None,
  max_coord: int = 2,
  jobs: int = 1,
) -> VerificationReport:
  """
  Run *suite*. Without *weights*, weight suites sweep every dominant weight with coordinates in
  `0..max_coord`, skipping weights whose QLS set is predicted to exceed #Limits.max_qls. Units are
  distributed over *jobs* worker processes; the report lists them in submission order.
  """

  if suite not in SUITES:
    raise ValueError(f'unknown suite {suite!r}')

  skipped: t.List[t.List[int]] = []
  units: t.List[t.Optional[t.Tuple[int, ...]]]
  if suite in TYPE_SUITES:
    units = [None] if not weights else [lam.coords for lam in weights]
  elif weights:
    units = [lam.coords for lam in weights]
  else:
    units = []
    for lam in dominant_grid(session.datum.rank, max_coord):
      if expected_qls_count(session, lam) > session.limits.max_qls:
        skipped.append(list(lam.coords))
      else:
        units.append(lam.coords)
    if skipped:
      log.info('%s: skipping %d weights above max_qls = %d', session.name, len(skipped), session.limits.max_qls)

  words = None if ws is None else [str(w) for w in ws]
  args = [(session.datum.series, session.datum.rank, session.limits, suite, unit, words) for unit in units]
  records: t.List[CheckRecord] = []
  if jobs > 1 and len(args) > 1:
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
      for chunk in executor.map(_run_unit, *zip(*args)):
        records.extend(chunk)
  else:
    for arg in args:
      records.extend(_run_unit(*arg))

  failures = sum(1 for r in records if not r.passed)
  return VerificationReport(
    type=session.name,
    suite=suite,
    passed=failures == 0,
    checks=len(records),
    failures=failures,
    skipped=skipped,
    records=records)


def report_to_json(report: VerificationReport) -> t.Dict[str, t.Any]:
  return databind.json.dump(report, VerificationReport)  # type: ignore
