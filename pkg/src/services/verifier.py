"""
Brute-force coverage check of (shortened) universal cycles. Only reduce and covered_permutations are used,
none of the construction, so the verdict is an independent cross-check of the pipeline.
"""
from itertools import permutations
from math import factorial
from typing import Sequence

from src.core.perm_core import covered_permutations, cyclic_windows
from src.exceptions import UCycleError
from src.schemas import BadWindow, CoverageReport, PermutationCoverage


def coverage(z: Sequence[int], n: int) -> CoverageReport:
    """
    The coverage function classifies every cyclic n-window of z and tallies the permutations it covers.
    Windows with an unsupported repetition pattern are reported, not raised.

    :param z: Sequence[int]: The cyclic word, at least n letters long
    :param n: int: The order
    :return: The coverage report; its verdict is True iff every n-permutation is covered exactly once
    """
    report = CoverageReport(order=n, length=len(z), alphabet_size=len(set(z)),
                            counts={p: PermutationCoverage() for p in permutations(range(1, n + 1))})
    counts = report.counts
    for start, window in enumerate(cyclic_windows(z, n)):
        try:
            covered = covered_permutations(window)
        except UCycleError as err:
            report.bad_windows.append(BadWindow(start=start, window=list(window), detail=err.detail))
            continue
        if len(covered) == 2:
            report.compressed_windows.append(start)
        for p in covered:
            counts[p].count += 1
            counts[p].starts.append(start)
    report.missing = [p for p, entry in counts.items() if entry.count == 0]
    report.duplicated = [p for p, entry in counts.items() if entry.count > 1]
    report.verdict = not (report.missing or report.duplicated or report.bad_windows)
    return report


def verify_shortened(z: Sequence[int], n: int, i: int) -> bool:
    """
    The verify_shortened function accepts z as a universal cycle shortened i times: full coverage,
    length n! - i(n-1) and i(n-1) compressed windows.

    :param z: Sequence[int]: The cyclic word
    :param n: int: The order
    :param i: int: The number of compressed twin cycles
    :return: True if z is a universal cycle for S_n shortened by i(n-1)
    """
    if len(z) < n:
        return False
    report = coverage(z, n)
    return (report.verdict
            and len(z) == factorial(n) - i * (n - 1)
            and len(report.compressed_windows) == i * (n - 1))


def _listing(perms: list[tuple[int, ...]], limit: int = 12) -> str:
    shown = ' '.join(''.join(map(str, p)) if len(p) < 10 else ','.join(map(str, p)) for p in perms[:limit])
    return shown + (f' ... (+{len(perms) - limit})' if len(perms) > limit else '')


def summary(report: CoverageReport) -> str:
    lines = [
        f'order: {report.order}',
        f'length: {report.length}',
        f'compressed windows: {len(report.compressed_windows)}',
        f'distinct letters: {report.alphabet_size}',
        f'covered: {sum(1 for entry in report.counts.values() if entry.count)} of {len(report.counts)}',
    ]
    if report.missing:
        lines.append(f'missing: {_listing(report.missing)}')
    if report.duplicated:
        lines.append(f'duplicated: {_listing(report.duplicated)}')
    for bad in report.bad_windows:
        lines.append(f'bad window at {bad.start}: {bad.window} ({bad.detail})')
    lines.append(f"verdict: {'ok' if report.verdict else 'FAILED'}")
    return '\n'.join(lines)
