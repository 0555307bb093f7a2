
import argparse
import concurrent.futures
import dataclasses
import json
import logging
import sys
import typing as t

import databind.json

from .cartan import ParabolicSubset, Weight, parse_cartan_type, weyl_group_order
from .config import Limits
from .exc import ArgumentError, ConfigurationError, InvariantViolation, QbgcException, ResourceLimitExceeded
from .session import Session, open_session
from .types import AlcovePathRecord, EdgeKindName, QlsPathRecord, RootSystemSummary
from .verify import SUITES, report_to_json, run_suite

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


@dataclasses.dataclass(frozen=True)
class JobSpec:
  """
  The options shared by all commands, as parsed from the command line.
  """

  command: str
  type: str
  lam: t.Optional[str] = None
  w: str = 'e'
  format: str = 'text'
  output: t.Optional[str] = None
  jobs: int = 1
  max_w: t.Optional[int] = None
  max_l: t.Optional[int] = None

  @staticmethod
  def from_args(args: argparse.Namespace) -> 'JobSpec':
    return JobSpec(
      command=args.command,
      type=args.type,
      lam=getattr(args, 'lam', None),
      w=getattr(args, 'w', 'e'),
      format=args.format,
      output=args.output,
      jobs=args.jobs,
      max_w=args.max_w,
      max_l=args.max_l)


def _common(parser: argparse.ArgumentParser, formats: t.Sequence[str], lam: bool = True, w: bool = True) -> None:
  parser.add_argument('--type', required=True, help='The Cartan type, e.g. A2, B3 or G2.')
  if lam:
    parser.add_argument('--lambda', dest='lam', help='A dominant weight as comma-separated fundamental-weight coordinates.')
  if w:
    parser.add_argument('--w', default='e', help='A Weyl group element: "e", "w0" or a word such as "s1 s2". (default: e)')
  parser.add_argument('--format', choices=formats, default=formats[0])
  parser.add_argument('--output', help='Write to this file instead of stdout.')
  parser.add_argument('--jobs', type=int, default=1, help='Number of worker processes.')
  parser.add_argument('--max-w', type=int, help='Override QBGC_MAX_W, the largest Weyl group order.')
  parser.add_argument('--max-l', type=int, help='Override QBGC_MAX_L, the largest table length for enumerate_b.')
  parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for debug output.')


parser = argparse.ArgumentParser(prog='qbgc', description='Quantum Bruhat graphs, quantum alcove paths and QLS paths.')
subparsers = parser.add_subparsers(dest='command', required=True)

_build = subparsers.add_parser('build', help='Print a JSON summary of the root system.')
_common(_build, ('json',), lam=False, w=False)

_graph = subparsers.add_parser('graph', help='Export QBG(W) or QBG(W^S) as DOT or JSON.')
_common(_graph, ('dot', 'json'), w=False)
_graph.add_argument('--parabolic', help='Comma-separated Dynkin nodes S; defaults to S_λ when --lambda is given.')

_table = subparsers.add_parser('table', help='Print the inversion table of t(w₀λ) as JSON.')
_common(_table, ('json',), w=False)

_enum = subparsers.add_parser('enum', help='List QB(w; t(w₀λ)) or QLS(λ).')
_enum.add_argument('kind', choices=('qb', 'qls'))
_common(_enum, ('text', 'json'))

_char = subparsers.add_parser('char', help='Compute a graded character.')
_char.add_argument('kind', choices=('qb', 'qls-up', 'qls-down'))
_common(_char, ('text', 'json'))

_verify = subparsers.add_parser('verify', help='Run a verification suite.')
_verify.add_argument('suite', choices=SUITES)
_common(_verify, ('text', 'json'))
_verify.add_argument('--all-w', action='store_true', help='Check every element of W instead of --w only.')
_verify.add_argument('--max-coord', type=int, default=2, help='Largest weight coordinate in grid mode. (default: 2)')


def _open(job: JobSpec) -> Session:
  series, rank = parse_cartan_type(job.type)
  weyl_group_order(series, rank)
  limits = Limits.from_env(max_weyl_order=job.max_w, max_alcove_length=job.max_l)
  try:
    return open_session(series, rank, limits)
  except ConfigurationError as exc:
    raise ResourceLimitExceeded('rank', limits.max_rank, rank, str(exc))


def _weight(session: Session, job: JobSpec, required: bool = True) -> t.Optional[Weight]:
  if job.lam is None:
    if required:
      raise ArgumentError('--lambda is required for this command')
    return None
  return session.weight(job.lam)


def _emit(job: JobSpec, text: str) -> None:
  if not text.endswith('\n'):
    text += '\n'
  if job.output:
    with open(job.output, 'w', encoding='utf-8') as fp:
      fp.write(text)
  else:
    sys.stdout.write(text)


def _dumps(value: t.Any) -> str:
  return json.dumps(value, indent=2, ensure_ascii=False)


def cmd_build(job: JobSpec, args: argparse.Namespace) -> int:
  session = _open(job)
  _emit(job, _dumps(databind.json.dump(session.summary(), RootSystemSummary)))
  return EXIT_OK


def _parabolic_subset(text: str) -> ParabolicSubset:
  try:
    return ParabolicSubset(frozenset(int(x) for x in text.split(',') if x.strip()))
  except ValueError:
    raise ArgumentError(f'--parabolic expects comma-separated Dynkin nodes, got {text!r}')


def cmd_graph(job: JobSpec, args: argparse.Namespace) -> int:
  session = _open(job)
  lam = _weight(session, job, required=False)
  if args.parabolic:
    S = _parabolic_subset(args.parabolic)
  elif lam is not None:
    S = ParabolicSubset.of_weight(lam)
  else:
    S = ParabolicSubset()
  graph = session.parabolic(S)
  _emit(job, _dumps(graph.to_json()) if job.format == 'json' else graph.to_dot())
  return EXIT_OK


def cmd_table(job: JobSpec, args: argparse.Namespace) -> int:
  session = _open(job)
  _emit(job, _dumps(session.table(t.cast(Weight, _weight(session, job))).to_json()))
  return EXIT_OK


def _qb_records(series: str, rank: int, limits: Limits, coords: t.Tuple[int, ...], word: str, first: t.Optional[int]) -> t.List[AlcovePathRecord]:
  session = open_session(series, rank, limits)
  model = session.alcoves(Weight(coords))
  return [model.to_record(p) for p in model.enumerate_qb(session.W.parse(word), first)]


def _qls_records(series: str, rank: int, limits: Limits, coords: t.Tuple[int, ...], word: str, first: t.Optional[int]) -> t.List[QlsPathRecord]:
  session = open_session(series, rank, limits)
  model = session.qls(Weight(coords))
  start = None if first is None else session.W[first]
  anchor = session.W.parse(word)
  return [model.to_record(eta, anchor) for eta in model.enumerate(start)]


def cmd_enumerate(job: JobSpec, args: argparse.Namespace) -> int:
  """ List QB(w; t(w₀λ)) or QLS(λ); the order does not depend on --jobs. """

  session = _open(job)
  lam = t.cast(Weight, _weight(session, job))
  w = session.element(job.w)
  worker: t.Callable[..., t.List[t.Any]]
  units: t.List[t.Optional[int]]
  if args.kind == 'qb':
    worker = _qb_records
    units = [0] + list(range(1, session.table(lam).L + 1))
  else:
    worker = _qls_records
    units = [v.index for v in session.qls(lam).representatives]

  common = (session.datum.series, session.datum.rank, session.limits, lam.coords, str(w))
  records: t.List[t.Any] = []
  if job.jobs > 1:
    with concurrent.futures.ProcessPoolExecutor(max_workers=job.jobs) as executor:
      for chunk in executor.map(worker, *zip(*[common + (u,) for u in units])):
        records.extend(chunk)
  else:
    records = worker(*common, None)
  log.info('Enumerated %d paths', len(records))

  if job.format == 'json':
    record_type = AlcovePathRecord if args.kind == 'qb' else QlsPathRecord
    _emit(job, _dumps(databind.json.dump(records, t.List[record_type])))  # type: ignore
    return EXIT_OK

  lines = []
  for r in records:
    if args.kind == 'qb':
      kinds = ''.join('q' if k == EdgeKindName.QUANTUM else 'b' for k in r.kinds)
      lines.append('J={' + ','.join(map(str, r.J)) + '}' + (f' [{kinds}]' if kinds else '') +
        f' end={_vec(r.end_weight)} deg={r.degree}')
    else:
      lines.append('(' + ', '.join(r.vertices) + '; ' + ', '.join(r.breaks) + f') wt={_vec(r.weight)} '
        f'Deg^w={r.deg_up} Deg_w={r.deg_down}')
  lines.append(f'count: {len(records)}')
  _emit(job, '\n'.join(lines))
  return EXIT_OK


def _vec(coords: t.Sequence[int]) -> str:
  return '[' + ','.join(map(str, coords)) + ']'


def cmd_char(job: JobSpec, args: argparse.Namespace) -> int:
  session = _open(job)
  lam = t.cast(Weight, _weight(session, job))
  w = session.element(job.w)
  if args.kind == 'qb':
    character = session.alcoves(lam).graded_character(w)
  elif args.kind == 'qls-up':
    character = session.qls(lam).gch_up(w)
  else:
    character = session.qls(lam).gch_down(w)
  _emit(job, _dumps(character.to_json()) if job.format == 'json' else str(character))
  return EXIT_OK


def cmd_verify(job: JobSpec, args: argparse.Namespace) -> int:
  session = _open(job)
  lam = _weight(session, job, required=False)
  ws = None if args.all_w else [session.element(job.w)]
  report = run_suite(session, args.suite, None if lam is None else [lam], ws, args.max_coord, job.jobs)
  if job.format == 'json':
    _emit(job, _dumps(report_to_json(report)))
  else:
    status = 'PASS' if report.passed else 'FAIL'
    _emit(job, f'{status} {report.suite} {report.type}: {report.checks} checks, {report.failures} failures, {len(report.skipped)} weights skipped')
  if not report.passed:
    first = next(r for r in report.records if not r.passed)
    print(f'counterexample: {first.name} λ={first.weight} w={first.w}: {first.detail}', file=sys.stderr)
    return EXIT_FAILED
  return EXIT_OK


COMMANDS: t.Dict[str, t.Callable[[JobSpec, argparse.Namespace], int]] = {
  'build': cmd_build,
  'graph': cmd_graph,
  'table': cmd_table,
  'enum': cmd_enumerate,
  'char': cmd_char,
  'verify': cmd_verify,
}


def run(argv: t.Optional[t.Sequence[str]] = None) -> int:
  """ Parse *argv*, run the command and return the exit code. """

  args = parser.parse_args(argv)
  level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
  logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
  try:
    return COMMANDS[args.command](JobSpec.from_args(args), args)
  except ResourceLimitExceeded as exc:
    print(f'error: {exc}', file=sys.stderr)
    return EXIT_LIMIT
  except InvariantViolation as exc:
    print(f'internal error: {exc}', file=sys.stderr)
    return EXIT_FAILED
  except QbgcException as exc:
    print(f'error: {exc}', file=sys.stderr)
    return EXIT_USAGE
