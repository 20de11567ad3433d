"""Tabular ranking datasets with a typed feature schema.

A dataset is a CSV whose rows are objects listed in ground-truth rank
order (best first), accompanied by a sidecar schema file declaring each
column as numeric, binary, or ordinal.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

VALID_KINDS = ("numeric", "binary", "ordinal")


class DatasetError(ValueError):
    """Raised for malformed data or schema files, with file position info."""


@dataclass(frozen=True)
class Column:
    """One schema column: a name plus its feature kind.

    Binary columns carry the two raw values mapping to 0 and 1; ordinal
    columns carry their level labels listed worst-to-best.
    """

    name: str
    kind: str
    levels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in VALID_KINDS:
            raise DatasetError(f"column {self.name!r}: unknown kind {self.kind!r}")
        if self.kind == "binary" and len(self.levels) != 2:
            raise DatasetError(f"column {self.name!r}: binary needs exactly 2 values")
        if self.kind == "ordinal":
            if not self.levels:
                raise DatasetError(f"column {self.name!r}: ordinal needs levels")
            if len(set(self.levels)) != len(self.levels):
                raise DatasetError(f"column {self.name!r}: duplicate ordinal levels")

    def encode(self, cell: str, row: int) -> float:
        """Map one raw cell to its numeric value."""
        cell = cell.strip()
        if self.kind == "numeric":
            try:
                return float(cell)
            except ValueError:
                raise DatasetError(
                    f"row {row}, column {self.name!r}: cannot parse {cell!r} as number"
                ) from None
        if self.kind == "binary":
            try:
                return float(self.levels.index(cell))
            except ValueError:
                raise DatasetError(
                    f"row {row}, column {self.name!r}: {cell!r} not in declared "
                    f"binary values {list(self.levels)}"
                ) from None
        # ordinal: equally spaced in [0, 1], worst level -> 0, best -> 1
        try:
            idx = self.levels.index(cell)
        except ValueError:
            raise DatasetError(
                f"row {row}, column {self.name!r}: unknown ordinal level {cell!r}"
            ) from None
        if len(self.levels) == 1:
            return 0.0
        return idx / (len(self.levels) - 1)


@dataclass(frozen=True)
class FeatureSchema:
    """Ordered column declarations; order defines the feature index."""

    columns: tuple[Column, ...]

    def __post_init__(self):
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise DatasetError("duplicate column names in schema")

    @property
    def dim(self) -> int:
        return len(self.columns)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    def kinds(self) -> list[str]:
        return [c.kind for c in self.columns]


@dataclass(frozen=True)
class RankingInstance:
    """A query set with its ground-truth total order.

    Row order encodes the ranking: row 0 is the top item. `values` holds
    one object per row, one feature per column.
    """

    values: np.ndarray
    schema: FeatureSchema
    name: str = ""

    def __post_init__(self):
        if self.values.ndim != 2:
            raise DatasetError("instance values must be a 2-d array")
        if self.values.shape[1] != self.schema.dim:
            raise DatasetError(
                f"instance has {self.values.shape[1]} features, "
                f"schema declares {self.schema.dim}"
            )

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def with_values(self, values: np.ndarray) -> "RankingInstance":
        return RankingInstance(values, self.schema, self.name)

    def subset(self, rows: Sequence[int]) -> "RankingInstance":
        """Induced sub-instance: selected rows kept in original rank order."""
        rows = sorted(rows)
        return RankingInstance(self.values[rows], self.schema, self.name)


@dataclass(frozen=True)
class PreferenceStore:
    """The multiset of ordered training preference pairs.

    `preferred[p]` beats `dispreferred[p]`; pairs are enumerated by
    (rank_i, rank_j) lexicographic order with i < j, instances in the
    order they were given.
    """

    preferred: np.ndarray
    dispreferred: np.ndarray

    def __post_init__(self):
        if self.preferred.shape != self.dispreferred.shape:
            raise DatasetError("preference pair arrays must have equal shape")

    def __len__(self) -> int:
        return self.preferred.shape[0]

    @property
    def pairs(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        return zip(self.preferred, self.dispreferred)


def parse_schema(path: str | Path) -> FeatureSchema:
    """Parse a schema sidecar file, one column declaration per line.

    Line format: `name,numeric` | `name,binary,<val0>,<val1>` |
    `name,ordinal,<lvl0>,...` (ordinal levels worst-to-best).
    """
    path = Path(path)
    columns = []
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DatasetError(f"cannot read schema file {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) < 2:
            raise DatasetError(f"{path}:{lineno}: expected `name,kind[,levels...]`")
        name, kind, *levels = parts
        columns.append(Column(name, kind, tuple(levels)))
    if not columns:
        raise DatasetError(f"{path}: schema declares no columns")
    return FeatureSchema(tuple(columns))


def load_dataset(data_path: str | Path, schema_path: str | Path,
                 name: str = "") -> RankingInstance:
    """Load a CSV ranking dataset under its schema.

    Rows must be pre-sorted by ground-truth rank, best first. Raw values
    are kept unpreprocessed except for binary/ordinal encoding into [0, 1].
    """
    data_path = Path(data_path)
    schema = parse_schema(schema_path)
    try:
        text = data_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot read data file {data_path}: {exc}") from exc
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except StopIteration:
        raise DatasetError(f"{data_path}: file is empty") from None
    header = [h.strip() for h in header]
    col_index = {}
    for col in schema.columns:
        if col.name not in header:
            raise DatasetError(f"{data_path}: missing column {col.name!r}")
        col_index[col.name] = header.index(col.name)

    rows = []
    for rowno, record in enumerate(reader, start=2):
        if not record or all(not c.strip() for c in record):
            continue
        encoded = []
        for col in schema.columns:
            idx = col_index[col.name]
            if idx >= len(record) or not record[idx].strip():
                raise DatasetError(
                    f"{data_path}: row {rowno}, column {col.name!r}: missing value"
                )
            encoded.append(col.encode(record[idx], rowno))
        rows.append(encoded)
    if not rows:
        raise DatasetError(f"{data_path}: no data rows")
    return RankingInstance(np.asarray(rows, dtype=float), schema,
                           name or data_path.stem)


def extract_pairs(instance: RankingInstance) -> PreferenceStore:
    """All ordered preference pairs implied by one ranking.

    For rank positions i < j the object at position i is preferred,
    giving n(n-1)/2 pairs in (i, j) lexicographic order.
    """
    n = instance.n
    idx_i, idx_j = np.triu_indices(n, k=1)
    return PreferenceStore(instance.values[idx_i], instance.values[idx_j])


def pool_pairs(instances: Sequence[RankingInstance]) -> PreferenceStore:
    """Union of preference pairs over several training rankings."""
    stores = [extract_pairs(inst) for inst in instances]
    if not stores:
        raise DatasetError("no training instances given")
    return PreferenceStore(
        np.concatenate([s.preferred for s in stores]),
        np.concatenate([s.dispreferred for s in stores]),
    )
