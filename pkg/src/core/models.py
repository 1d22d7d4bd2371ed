from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from src.core.perm_core import Permutation, Word, covered_permutations, is_permutation, reduce

Cluster = tuple[int, ...]


class EdgeKind(str, Enum):
    plain = 'plain'
    compressed = 'compressed'


class EdgeLabel(BaseModel):
    """
    L(e) of a cluster graph edge: an n-permutation for a plain edge, or an n-letter word whose
    first and last letters are equal for a compressed twin pair.
    """
    letters: Word
    kind: EdgeKind = EdgeKind.plain

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def check_letters(self) -> 'EdgeLabel':
        letters = self.letters
        if len(letters) < 2:
            raise ValueError(f'label {letters} is too short')
        if self.kind is EdgeKind.plain and not is_permutation(letters):
            raise ValueError(f'plain label {letters} is not a permutation')
        if self.kind is EdgeKind.compressed and (letters[0] != letters[-1]
                                                  or len(set(letters[:-1])) != len(letters) - 1):
            raise ValueError(f'compressed label {letters} needs equal end letters and distinct others')
        return self

    @property
    def order(self) -> int:
        return len(self.letters)

    @property
    def source(self) -> Cluster:
        return reduce(self.letters[:-1])

    @property
    def target(self) -> Cluster:
        return reduce(self.letters[1:])

    @property
    def is_compressed(self) -> bool:
        return self.kind is EdgeKind.compressed

    def covers(self) -> frozenset[Permutation]:
        return covered_permutations(self.letters)

    def __str__(self) -> str:
        return ''.join(map(str, self.letters)) if self.order < 10 else ','.join(map(str, self.letters))


class TwinCycle(BaseModel):
    id: int
    pairs: tuple[tuple[Permutation, Permutation], ...]
    clusters: tuple[Cluster, ...]

    model_config = ConfigDict(frozen=True)

    def contains(self, p: Permutation) -> bool:
        return any(p in pair for pair in self.pairs)


class PFamilyVariant(str, Enum):
    p = 'P'
    p_star = 'P*'
    p_prime = "P'"


class PFamily(BaseModel):
    order: int
    members: tuple[Permutation, ...]
    variant: PFamilyVariant

    model_config = ConfigDict(frozen=True)

    def __contains__(self, p: Permutation) -> bool:
        return tuple(p) in self.members

    def __len__(self) -> int:
        return len(self.members)


class Trail(BaseModel):
    edges: tuple[tuple[int, EdgeLabel], ...]
    start: Cluster
    end: Cluster

    model_config = ConfigDict(frozen=True)

    @property
    def labels(self) -> list[EdgeLabel]:
        return [label for _, label in self.edges]

    def __len__(self) -> int:
        return len(self.edges)
