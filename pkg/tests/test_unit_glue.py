import unittest

from src.core.cluster_graph import build_cluster_graph, build_P, build_P_prime, twin_cycles
from src.core.glue import glue
from src.core.perm_core import covered_permutations, cyclic_windows
from src.exceptions import ConstructionError
from tests.words import CYCLE_4_FULL, CYCLE_4_ONE, CYCLE_4_TWO

# Words w behind the three n=4 cycles, one per number of compressed twin cycles.
W_0 = (16, 13, 12, 15, 14, 16, 17, 12, 18, 11, 14, 8, 10, 16, 9, 6, 17, 7, 5)
W_1 = (10, 9, 8, 11, 7, 8, 6, 9, 10, 6, 5, 9, 7, 10, 8, 6)
W_2 = (8, 7, 6, 8, 5, 9, 8, 10, 11, 8, 10, 6, 5)


class TestGlue(unittest.TestCase):
    def setUp(self):
        self.cycles = twin_cycles(build_cluster_graph(4))

    def family(self, i):
        return build_P_prime(4, self.cycles[:i])

    def test_glue_without_compression(self):
        self.assertEqual(glue(W_0, build_P(4), 4), CYCLE_4_FULL)

    def test_glue_with_one_compressed_cycle(self):
        self.assertEqual(glue(W_1, self.family(1), 4), CYCLE_4_ONE)

    def test_glue_with_two_compressed_cycles(self):
        self.assertEqual(glue(W_2, self.family(2), 4), CYCLE_4_TWO)

    def test_length(self):
        for w, i in ((W_0, 0), (W_1, 1), (W_2, 2)):
            self.assertEqual(len(glue(w, self.family(i), 4)), len(w) + 5)

    def test_seam_windows_follow_the_tour(self):
        P = build_P(4).members
        for w, i in ((W_0, 0), (W_1, 1), (W_2, 2)):
            z = glue(w, self.family(i), 4)
            k = len(w)
            windows = cyclic_windows(z, 4)
            seam = [windows[start % len(z)] for start in range(k + 2, k + 2 + 2 * 4)]
            covered = [covered_permutations(window) for window in seam]
            self.assertEqual([next(p for p in P if p in pair) for pair in covered], list(P))
            self.assertEqual(set().union(*covered), set(self.family(i).members))

    def test_preconditions(self):
        with self.assertRaises(ConstructionError) as context:
            glue((1, 2, 3) + W_0, build_P(4), 4)
        self.assertEqual(context.exception.detail, 'first (n-1)-window of w is not decreasing')
        with self.assertRaises(ConstructionError) as context:
            glue(W_0 + (20,), build_P(4), 4)
        self.assertEqual(context.exception.detail, 'last (n-1)-window of w is not decreasing')
        with self.assertRaises(ConstructionError) as context:
            glue((15, 10, 5, 17, 15, 19, 18, 5), build_P(4), 4)
        self.assertEqual(context.exception.detail, 'w covers a permutation more than once')
        with self.assertRaises(ConstructionError):
            glue((3, 2), build_P(4), 4)
        with self.assertRaises(ConstructionError):
            glue((4, 3, 2, 1), build_P(4), 4)
        with self.assertRaises(ConstructionError):
            glue((2, 1, 3, 2, 1), build_P(4), 3)
