import json

import pytest

from src.cli import main
from src.exceptions import ConstructionError
from src.services.verifier import verify_shortened


def test_build_plain(capsys):
    assert main(['build', '--n', '3', '--i', '1']) == 0
    assert capsys.readouterr().out == '1,2,3,2\n'


def test_build_order_4(capsys):
    assert main(['build', '--n', '4', '--i', '1', '--format', 'plain']) == 0
    letters = [int(part) for part in capsys.readouterr().out.strip().split(',')]
    assert len(letters) == 21
    assert verify_shortened(letters, 4, 1)


def test_build_json_matches_plain(capsys):
    main(['build', '--n', '4', '--i', '2'])
    plain = [int(part) for part in capsys.readouterr().out.strip().split(',')]
    main(['build', '--n', '4', '--i', '2', '--format', 'json'])
    document = json.loads(capsys.readouterr().out)
    assert document == {'n': 4, 'i': 2, 'length': 18, 'letters': plain}


def test_build_to_file(tmp_path):
    out = tmp_path / 'cycle.json'
    assert main(['build', '--n', '5', '--i', '3', '--format', 'json', '--out', str(out)]) == 0
    document = json.loads(out.read_text(encoding='utf-8'))
    assert document['length'] == 120 - 12
    assert verify_shortened(document['letters'], 5, 3)


def test_build_all(capsys):
    assert main(['build', '--n', '4', '--all-i']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [len(line.split(',')) for line in lines] == [24, 21, 18]


def test_build_all_json(capsys):
    assert main(['build', '--n', '3', '--all-i', '--format', 'json']) == 0
    documents = json.loads(capsys.readouterr().out)
    assert [document['letters'] for document in documents] == [[1, 4, 5, 2, 4, 3], [1, 2, 3, 2]]


@pytest.mark.parametrize('argv', [
    ['build', '--n', '4', '--i', '3'],
    ['build', '--n', '2', '--i', '0'],
    ['build', '--n', '4'],
    ['build', '--n', '4', '--i', '1', '--cycles', '0,1'],
    ['build', '--n', '4', '--all-i', '--cycles', '0,'],
])
def test_build_usage_errors(argv):
    with pytest.raises(SystemExit) as context:
        main(argv)
    assert context.value.code == 2


def test_build_selection(capsys):
    assert main(['build', '--n', '5', '--i', '1', '--cycles', '3,']) == 0
    letters = [int(part) for part in capsys.readouterr().out.strip().split(',')]
    assert verify_shortened(letters, 5, 1)


def test_build_failure(mocker, capsys):
    mocker.patch('src.commands.build.build_shortened_ucycle',
                 side_effect=ConstructionError('construction invariant violated'))
    assert main(['build', '--n', '4', '--i', '0']) == 1
    assert 'construction invariant violated' in capsys.readouterr().err


def test_build_unwritable_output(tmp_path):
    with pytest.raises(SystemExit) as context:
        main(['build', '--n', '3', '--i', '0', '--out', str(tmp_path / 'missing' / 'cycle.txt')])
    assert context.value.code == 2
