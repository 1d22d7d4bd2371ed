import argparse
import sys

from src.config.config import settings


def order(value: str) -> int:
    n = int(value)
    if not 3 <= n <= settings.max_order:
        raise argparse.ArgumentTypeError(f'n must lie in 3..{settings.max_order}')
    return n


def cycle_ids(value: str) -> list[int]:
    """
    The cycle_ids function parses a comma-separated list of twin cycle ids such as "0,2,5" or "3,".

    :param value: str: The raw argument
    :return: The ids
    """
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid cycle id list: {value!r}')


def fail(detail: str) -> int:
    print(f'error: {detail}', file=sys.stderr)
    return 1
