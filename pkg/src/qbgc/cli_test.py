
import json
import typing as t

import pytest

from qbgc.cli import EXIT_FAILED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, run


def _run(capsys: pytest.CaptureFixture, *argv: str) -> t.Tuple[int, str, str]:
  code = run(list(argv))
  captured = capsys.readouterr()
  return code, captured.out, captured.err


def test__char__rank_one_goldens(capsys: pytest.CaptureFixture) -> None:
  assert _run(capsys, 'char', 'qb', '--type', 'A1', '--lambda', '1', '--w', 'e')[:2] == (EXIT_OK, 'e[-1] + e[1]\n')
  assert _run(capsys, 'char', 'qb', '--type', 'A1', '--lambda', '1', '--w', 's1')[1] == 'q^1 e[-1] + e[1]\n'
  assert _run(capsys, 'char', 'qls-down', '--type', 'A1', '--lambda', '1', '--w', 's1')[1] == 'e[-1] + q^-1 e[1]\n'
  assert _run(capsys, 'char', 'qls-up', '--type', 'A1', '--lambda', '1', '--w', 'e')[1] == 'q^-1 e[-1] + e[1]\n'
  assert _run(capsys, 'char', 'qb', '--type', 'A1', '--lambda', '0', '--w', 'e')[1] == '1\n'


def test__char__json(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'char', 'qb', '--type', 'A1', '--lambda', '1', '--w', 's1', '--format', 'json')
  assert code == EXIT_OK
  assert json.loads(out) == [{'weight': [-1], 'q': 1, 'coeff': 1}, {'weight': [1], 'q': 0, 'coeff': 1}]


def test__enum__qls(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'enum', 'qls', '--type', 'A1', '--lambda', '1')
  assert code == EXIT_OK
  assert out.splitlines() == [
    '(e; 0, 1) wt=[1] Deg^w=0 Deg_w=0',
    '(s1; 0, 1) wt=[-1] Deg^w=1 Deg_w=0',
    'count: 2',
  ]
  assert _run(capsys, 'enum', 'qls', '--type', 'A1', '--lambda', '0')[1].splitlines()[-1] == 'count: 1'


def test__enum__qb(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'enum', 'qb', '--type', 'A1', '--lambda', '1', '--w', 's1')
  assert code == EXIT_OK
  assert out.splitlines() == ['J={} end=[1] deg=0', 'J={1} [q] end=[-1] deg=1', 'count: 2']


def test__enum__output_does_not_depend_on_jobs(capsys: pytest.CaptureFixture) -> None:
  for kind in ('qb', 'qls'):
    serial = _run(capsys, 'enum', kind, '--type', 'A2', '--lambda', '1,1', '--w', 's1', '--format', 'json')[1]
    parallel = _run(capsys, 'enum', kind, '--type', 'A2', '--lambda', '1,1', '--w', 's1', '--format', 'json', '--jobs', '2')[1]
    assert serial == parallel
    assert len(json.loads(serial)) == 9


def test__build(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'build', '--type', 'A2')
  assert code == EXIT_OK
  data = json.loads(out)
  assert data['weyl_group_order'] == 6
  assert data['longest_element'] == 's1 s2 s1'
  assert data['positive_roots'] == [[0, 1], [1, 0], [1, 1]]


def test__graph__dot_and_json(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'graph', '--type', 'A1', '--format', 'dot')
  assert code == EXIT_OK and 'style=dashed' in out
  data = json.loads(_run(capsys, 'graph', '--type', 'A2', '--lambda', '1,0', '--format', 'json')[1])
  assert data['parabolic'] == [2]
  assert len(data['vertices']) == 3


def test__table__writes_to_a_file(capsys: pytest.CaptureFixture, tmp_path) -> None:
  target = tmp_path / 'table.json'
  code, out, _ = _run(capsys, 'table', '--type', 'A1', '--lambda', '2', '--output', str(target))
  assert code == EXIT_OK and out == ''
  assert json.loads(target.read_text(encoding='utf-8'))['length'] == 2


def test__verify__theorem_passes(capsys: pytest.CaptureFixture) -> None:
  code, out, _ = _run(capsys, 'verify', 'theorem', '--type', 'A1', '--lambda', '1', '--all-w')
  assert code == EXIT_OK
  assert out == 'PASS theorem A1: 4 checks, 0 failures, 0 weights skipped\n'

  code, out, _ = _run(capsys, 'verify', 'bijection', '--type', 'A2', '--lambda', '1,1', '--all-w', '--format', 'json')
  assert code == EXIT_OK
  assert json.loads(out)['checks'] == 6


def test__verify__shellability(capsys: pytest.CaptureFixture) -> None:
  assert _run(capsys, 'verify', 'shellability', '--type', 'B2')[0] == EXIT_OK


def test__exit_codes(capsys: pytest.CaptureFixture) -> None:
  code, _, err = _run(capsys, 'build', '--type', 'X1')
  assert code == EXIT_USAGE and 'not a Cartan type' in err
  assert _run(capsys, 'char', 'qb', '--type', 'A1')[0] == EXIT_USAGE
  assert _run(capsys, 'char', 'qb', '--type', 'A2', '--lambda', '1')[0] == EXIT_USAGE
  assert _run(capsys, 'char', 'qb', '--type', 'A2', '--lambda', '1,-1')[0] == EXIT_USAGE
  assert _run(capsys, 'char', 'qb', '--type', 'A2', '--lambda', '1,0', '--w', 's5')[0] == EXIT_USAGE
  code, _, err = _run(capsys, 'graph', '--type', 'A2', '--parabolic', 'x')
  assert code == EXIT_USAGE and '--parabolic' in err
  assert _run(capsys, 'graph', '--type', 'A2', '--parabolic', '1,5')[0] == EXIT_USAGE
  assert _run(capsys, 'build', '--type', 'A5')[0] == EXIT_LIMIT
  code, _, err = _run(capsys, 'build', '--type', 'F4')
  assert code == EXIT_LIMIT and 'QBGC_MAX_W' in err
  assert EXIT_FAILED == 1


def test__argparse_errors_exit_with_usage() -> None:
  with pytest.raises(SystemExit) as excinfo:
    run(['char', 'qb', '--lambda', '1'])
  assert excinfo.value.code == EXIT_USAGE


@pytest.mark.parametrize('argv', [
  ['build', '--type', 'A1', '--format', 'dot'],
  ['table', '--type', 'A1', '--lambda', '1', '--format', 'text'],
  ['char', 'qb', '--type', 'A1', '--lambda', '1', '--format', 'dot'],
  ['graph', '--type', 'A1', '--format', 'text'],
])
def test__format_choices_depend_on_the_command(argv: t.List[str]) -> None:
  with pytest.raises(SystemExit) as excinfo:
    run(argv)
  assert excinfo.value.code == EXIT_USAGE
