from pydantic import BaseModel, Field, model_validator


class CycleDocument(BaseModel):
    n: int = Field(ge=3)
    i: int = Field(ge=0)
    length: int
    letters: list[int]

    @model_validator(mode='after')
    def check_length(self) -> 'CycleDocument':
        if self.length != len(self.letters):
            raise ValueError(f'length {self.length} does not match {len(self.letters)} letters')
        return self


class PermutationCoverage(BaseModel):
    count: int = 0
    starts: list[int] = []


class BadWindow(BaseModel):
    start: int
    window: list[int]
    detail: str


class CoverageReport(BaseModel):
    order: int
    length: int
    counts: dict[tuple[int, ...], PermutationCoverage]
    compressed_windows: list[int] = []
    missing: list[tuple[int, ...]] = []
    duplicated: list[tuple[int, ...]] = []
    bad_windows: list[BadWindow] = []
    alphabet_size: int = 0
    verdict: bool = False

    @property
    def total_count(self) -> int:
        return sum(entry.count for entry in self.counts.values())
