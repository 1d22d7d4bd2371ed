import json
import tempfile
import unittest
from pathlib import Path

from src.exceptions import InvalidWordError
from src.services.storage import parse_letters, read_letters, to_json, to_plain


class TestStorage(unittest.TestCase):
    def test_plain_formats(self):
        self.assertEqual(parse_letters('1,2,3,2\n'), [1, 2, 3, 2])
        self.assertEqual(parse_letters('1, 2,\n3 ,2'), [1, 2, 3, 2])
        self.assertEqual(parse_letters('12'), [12])

    def test_compact_digits(self):
        self.assertEqual(parse_letters('145243', 3), [1, 4, 5, 2, 4, 3])
        self.assertEqual(parse_letters('12', 3), [12])
        self.assertEqual(parse_letters('145243'), [145243])

    def test_json_formats(self):
        self.assertEqual(parse_letters('[1, 2, 3, 2]'), [1, 2, 3, 2])
        self.assertEqual(parse_letters(to_json(3, 1, (1, 2, 3, 2))), [1, 2, 3, 2])
        self.assertEqual(json.loads(to_json(3, 1, (1, 2, 3, 2))),
                         {'n': 3, 'i': 1, 'length': 4, 'letters': [1, 2, 3, 2]})

    def test_invalid_input(self):
        with self.assertRaises(InvalidWordError) as context:
            parse_letters('  \n')
        self.assertEqual(context.exception.detail, 'empty input')
        for text in ('1,x,3', '{"n": 3, "i": 0, "length": 2, "letters": [1]}', '[1, "a"]'):
            with self.assertRaises(InvalidWordError):
                parse_letters(text)

    def test_to_plain(self):
        self.assertEqual(to_plain((1, 4, 5, 2, 4, 3)), '1,4,5,2,4,3\n')

    def test_read_letters(self):
        with tempfile.TemporaryDirectory() as folder:
            path = Path(folder) / 'cycle.txt'
            path.write_text(to_plain((1, 2, 3, 2)), encoding='utf-8')
            self.assertEqual(read_letters(path), [1, 2, 3, 2])
