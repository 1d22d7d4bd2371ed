import unittest
from math import factorial
from unittest.mock import patch

import pytest

from src.core.cluster_graph import build_cluster_graph
from src.exceptions import ConstructionError, OrderError
from src.services.pipeline import (
    build_all,
    build_shortened_ucycle,
    choose_cycles,
    max_shortening,
)
from src.services.verifier import verify_shortened
from tests.words import SMALL_FULL, SMALL_SHORT


class TestBuild(unittest.TestCase):
    def assertShortened(self, z, n, i):
        self.assertEqual(len(z), factorial(n) - i * (n - 1))
        self.assertTrue(verify_shortened(z, n, i))
        self.assertEqual(set(z), set(range(1, max(z) + 1)))

    def test_order_3(self):
        self.assertEqual(build_shortened_ucycle(3, 0), SMALL_FULL)
        self.assertEqual(build_shortened_ucycle(3, 1), SMALL_SHORT)
        self.assertEqual(build_shortened_ucycle(3, 1, selection=[0]), SMALL_SHORT)

    def test_order_4(self):
        for i in range(3):
            self.assertShortened(build_shortened_ucycle(4, i), 4, i)

    def test_order_5(self):
        for i in range(max_shortening(5) + 1):
            self.assertShortened(build_shortened_ucycle(5, i), 5, i)

    def test_order_6_ends(self):
        for i in (0, 1, 24):
            self.assertShortened(build_shortened_ucycle(6, i), 6, i)

    def test_selection_and_seed(self):
        self.assertShortened(build_shortened_ucycle(4, 1, selection=[1]), 4, 1)
        self.assertShortened(build_shortened_ucycle(5, 2, selection=[5, 0]), 5, 2)
        self.assertShortened(build_shortened_ucycle(5, 3, seed=7), 5, 3)
        self.assertEqual(build_shortened_ucycle(5, 3, seed=7), build_shortened_ucycle(5, 3, seed=7))

    def test_deterministic(self):
        self.assertEqual(build_shortened_ucycle(5, 2), build_shortened_ucycle(5, 2))

    def test_out_of_range(self):
        with self.assertRaises(OrderError) as context:
            build_shortened_ucycle(4, 3)
        self.assertEqual(context.exception.detail, 'i must lie in 0..2 for n=4')
        with self.assertRaises(OrderError) as context:
            build_shortened_ucycle(2, 0)
        self.assertEqual(context.exception.detail, 'order too small')
        with self.assertRaises(OrderError):
            build_shortened_ucycle(3, 1, selection=[1])
        with self.assertRaises(OrderError) as context:
            build_shortened_ucycle(3, 0, selection=[0])
        self.assertEqual(context.exception.detail, '1 cycle ids selected for i=0')
        self.assertEqual(build_shortened_ucycle(3, 0, selection=[]), SMALL_FULL)

    def test_choose_cycles(self):
        G = build_cluster_graph(5)
        self.assertEqual([cycle.id for cycle in choose_cycles(G, 2)], [0, 1])
        self.assertEqual([cycle.id for cycle in choose_cycles(G, 2, [4, 1])], [4, 1])
        for selection in ([1], [1, 1], [0, 6]):
            with self.assertRaises(OrderError):
                choose_cycles(G, 2, selection)

    def test_failed_verification(self):
        with patch('src.services.pipeline.verify_shortened', return_value=False):
            with self.assertRaises(ConstructionError) as context:
                build_shortened_ucycle(4, 1)
        self.assertEqual(context.exception.detail, 'construction invariant violated')

    def test_build_all(self):
        results = build_all(4)
        self.assertEqual([i for i, _ in results], [0, 1, 2])
        for i, z in results:
            self.assertTrue(verify_shortened(z, 4, i))


@pytest.mark.slow
@pytest.mark.parametrize('i', range(25))
def test_order_6_every_i(i):
    assert verify_shortened(build_shortened_ucycle(6, i), 6, i)


@pytest.mark.slow
@pytest.mark.parametrize('i', [0, 1, 120])
def test_order_7(i):
    z = build_shortened_ucycle(7, i)
    assert len(z) == 5040 - 6 * i
    assert verify_shortened(z, 7, i)
