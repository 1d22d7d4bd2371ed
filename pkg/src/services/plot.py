from pathlib import Path
from typing import Sequence

from jinja2 import Environment, FileSystemLoader

from src.config.config import settings
from src.core.cluster_graph import build_P_star
from src.core.perm_core import covered_permutations, cyclic_windows, reduce, windows
from src.exceptions import InvalidWordError, UCycleError

TEMPLATE_FOLDER = Path(__file__).parent / 'templates'

env = Environment(loader=FileSystemLoader(TEMPLATE_FOLDER), trim_blocks=True, lstrip_blocks=True,
                  keep_trailing_newline=True, autoescape=True)

COLORS = {'plain': '#000000', 'family': '#1f4fd1', 'compressed': '#d11f1f', 'bad': '#888888'}


def _window_color(window: tuple[int, ...], star: set[tuple[int, ...]]) -> str:
    try:
        covered = covered_permutations(window)
    except UCycleError:
        return COLORS['bad']
    if len(covered) == 2:
        return COLORS['compressed']
    return COLORS['family'] if covered & star else COLORS['plain']


def render_svg(letters: Sequence[int], n: int, cyclic: bool = True) -> str:
    """
    The render_svg function draws a word in a grid from left to right, one dot per letter at the height of its
    value, with the pattern of the n-window starting at each dot written to its right. Members of P* are blue
    and compressed windows red. A cyclic word repeats its first n-1 letters in gray so every window is visible.

    :param letters: Sequence[int]: The word
    :param n: int: The window size
    :param cyclic: bool: Whether the word is a cycle
    :return: The SVG document
    """
    letters = tuple(letters)
    if not letters:
        raise InvalidWordError('empty input')
    starts = cyclic_windows(letters, n) if cyclic else windows(letters, n)
    shown = letters + letters[:n - 1] if cyclic else letters
    star = set(build_P_star(n).members) if n >= 4 else set()

    cell, margin = settings.plot_cell, settings.plot_margin
    low, high = min(letters), max(letters)
    width = 2 * margin + cell * (len(shown) + 1)
    height = 2 * margin + cell * (high - low + 2)

    def x_of(index: int) -> int:
        return margin + cell * (index + 1)

    def y_of(value: int) -> int:
        return margin + cell * (high - value + 1)

    dots = [{'x': x_of(index), 'y': y_of(value), 'value': value, 'repeated': index >= len(letters)}
            for index, value in enumerate(shown)]
    labels = [{'x': x_of(index), 'y': y_of(shown[index]), 'color': _window_color(window, star),
               'text': ''.join(map(str, reduce(window))) if n < 10 else ','.join(map(str, reduce(window)))}
              for index, window in enumerate(starts)]
    return env.get_template('word_plot.svg.j2').render(
        title=f"{'cycle' if cyclic else 'word'} of length {len(letters)} for n={n}",
        width=width, height=height, font_size=max(9, cell // 3), radius=max(3, cell // 7),
        left=x_of(0), right=x_of(len(shown)), top=y_of(high + 1), bottom=y_of(low - 1),
        grid_x=[x_of(index) for index in range(len(shown) + 1)],
        grid_y=[y_of(value) for value in range(low - 1, high + 2)],
        ticks=[{'y': y_of(value), 'value': value} for value in range(low, high + 1)],
        dots=dots, labels=labels,
    )
