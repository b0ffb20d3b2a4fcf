"""Corpus generation and small-rank classification.

Generates every symmetric even-diagonal nonsingular integer matrix within
bounds, constructs the pointed data of each, and groups the results by rank
up to relabeling equivalence (canonical_form). Class counts are emitted as
data; nothing here asserts agreement with any published table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import Singular
from .lattice import GramMatrix, check_gram
from .moddata import canonical_form, from_lattice


@dataclass(frozen=True)
class CorpusSpec:
    """Finite, deterministic generation bounds."""

    max_dim: int
    max_entry: int
    max_rank: int | None = None

    def __post_init__(self):
        if self.max_dim < 1 or self.max_entry < 1:
            raise ValueError("bounds must be positive")
        if self.max_rank is not None and self.max_rank < 1:
            raise ValueError("max_rank must be positive when set")


def generate_gram_matrices(spec: CorpusSpec) -> list[GramMatrix]:
    """All valid construction inputs within bounds.

    Ordered by dimension, then lexicographically by row-major entries (which
    coincides with lexicographic order on the upper triangle read row-wise).
    Singular matrices are skipped; |det| is capped by max_rank when set.
    """
    out = []
    for n in range(1, spec.max_dim + 1):
        positions = [(i, j) for i in range(n) for j in range(i, n)]
        even_bound = spec.max_entry - (spec.max_entry % 2)
        ranges = [
            range(-even_bound, even_bound + 1, 2) if i == j
            else range(-spec.max_entry, spec.max_entry + 1)
            for (i, j) in positions
        ]
        for combo in itertools.product(*ranges):
            rows = [[0] * n for _ in range(n)]
            for (i, j), value in zip(positions, combo):
                rows[i][j] = value
                rows[j][i] = value
            try:
                gram = check_gram(rows)
            except Singular:
                continue
            if spec.max_rank is not None and abs(gram.determinant) > spec.max_rank:
                continue
            out.append(gram)
    return out


@dataclass(frozen=True)
class ModularClass:
    """One equivalence class: canonical key, first witness, twist multiset."""

    canonical: bytes
    witness: GramMatrix
    twist_multiset: tuple[str, ...]


@dataclass(frozen=True)
class ClassificationResult:
    by_rank: tuple[tuple[int, tuple[ModularClass, ...]], ...]

    def classes(self, rank: int) -> tuple[ModularClass, ...]:
        for r, cs in self.by_rank:
            if r == rank:
                return cs
        return ()

    def class_count(self, rank: int) -> int:
        return len(self.classes(rank))


def classify(corpus, max_rank: int = 8) -> ClassificationResult:
    """Group the pointed data of a corpus by rank, deduplicated by canonical form.

    The class sets are independent of corpus order; witnesses are the first
    matrix (in the given order) realizing each class.
    """
    buckets: dict[int, dict[bytes, ModularClass]] = {}
    for gram in corpus:
        md = from_lattice(gram)
        key = canonical_form(md, max_rank=max_rank)
        bucket = buckets.setdefault(md.rank, {})
        if key not in bucket:
            exponents = sorted(t.root_exponent() for t in md.twists)
            twists = tuple(f"e({q.numerator}/{q.denominator})" for q in exponents)
            bucket[key] = ModularClass(key, gram, twists)
    return ClassificationResult(tuple(
        (rank, tuple(bucket[key] for key in sorted(bucket)))
        for rank, bucket in sorted(buckets.items())
    ))


def format_matrix(gram: GramMatrix) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in gram.entries)


def format_classification(result: ClassificationResult) -> str:
    """Plain-text classification table: rank, class count, witnesses, twists."""
    lines = ["rank  classes"]
    for rank, classes in result.by_rank:
        lines.append(f"{rank:<5} {len(classes)}")
        for idx, cls in enumerate(classes, start=1):
            twists = ",".join(cls.twist_multiset)
            lines.append(f"    class {idx}: twists {twists}  witness [{format_matrix(cls.witness)}]")
    return "\n".join(lines) + "\n"
