import pytest

from tests.words import LINEAR_WORD_3, CYCLE_4_ONE, CYCLE_4_TWO


def write_plain(path, letters):
    path.write_text(','.join(map(str, letters)) + '\n', encoding='utf-8')
    return path


@pytest.fixture
def cycle_one_file(tmp_path):
    return write_plain(tmp_path / 'cycle_one.txt', CYCLE_4_ONE)


@pytest.fixture
def cycle_two_file(tmp_path):
    return write_plain(tmp_path / 'cycle_two.txt', CYCLE_4_TWO)


@pytest.fixture
def linear_file(tmp_path):
    return write_plain(tmp_path / 'linear.txt', LINEAR_WORD_3)


@pytest.fixture
def corrupted_file(tmp_path):
    letters = list(CYCLE_4_ONE)
    letters[1] = letters[0]
    return write_plain(tmp_path / 'corrupted.txt', letters)
