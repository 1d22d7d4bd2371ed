import json
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from src.exceptions import InvalidWordError
from src.schemas import CycleDocument


def to_plain(letters: Sequence[int]) -> str:
    return ','.join(map(str, letters)) + '\n'


def to_document(n: int, i: int, letters: Sequence[int]) -> CycleDocument:
    return CycleDocument(n=n, i=i, length=len(letters), letters=list(letters))


def to_json(n: int, i: int, letters: Sequence[int]) -> str:
    return to_document(n, i, letters).model_dump_json() + '\n'


def parse_letters(text: str, n: int | None = None) -> list[int]:
    """
    The parse_letters function reads a cycle from plain text or from a JSON document.
    Plain text is a comma-separated list of integers; whitespace is ignored. A run of digits without
    separators (such as 145243) is read one letter per digit only when the window size n is given and the
    run has at least n digits; otherwise it is a single letter.

    :param text: str: File contents
    :param n: int | None: Window size the letters are meant for
    :return: The letters
    """
    text = text.strip()
    if not text:
        raise InvalidWordError('empty input')
    if text[0] in '{[':
        try:
            payload = json.loads(text)
            if isinstance(payload, list):
                return [int(letter) for letter in payload]
            return CycleDocument.model_validate(payload).letters
        except (ValueError, TypeError, ValidationError) as err:
            raise InvalidWordError(f'invalid JSON cycle: {err}') from err
    try:
        if ',' not in text and text.isdigit() and n is not None and len(text) >= n:
            return [int(digit) for digit in text]
        return [int(part) for part in text.replace('\n', ',').split(',') if part.strip()]
    except ValueError as err:
        raise InvalidWordError(f'invalid plain cycle: {err}') from err


def read_letters(path: Path, n: int | None = None) -> list[int]:
    return parse_letters(Path(path).read_text(encoding='utf-8'), n)


def write_text(path: Path | None, text: str) -> None:
    if path is None:
        print(text, end='')
    else:
        Path(path).write_text(text, encoding='utf-8')
