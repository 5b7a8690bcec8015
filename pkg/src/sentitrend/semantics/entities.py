"""Dictionary (gazetteer) lookup of brand and product mentions in raw tweets."""
from __future__ import annotations

import csv
import enum
import io
import os
import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping, Optional, Union

from ..errors import DataError

_WORD = re.compile(r"[^\W_]+")
# joiners allowed inside one surface form, e.g. "mercedes-benz"
_JOINERS = frozenset("-'&.")


class EntityKind(str, enum.Enum):
    BRAND = "Brand"
    PRODUCT_TERM = "ProductTerm"


@dataclass(frozen=True)
class Gazetteer:
    entries: Mapping[str, EntityKind]

    def __post_init__(self):
        entries = {}
        for surface, kind in self.entries.items():
            key = surface.strip().lower()
            if not key:
                continue
            if key in entries:
                raise DataError(f"duplicate gazetteer entry {key!r}")
            entries[key] = EntityKind(kind)
        object.__setattr__(self, "entries", entries)
        parts = max((len(_WORD.findall(k)) for k in entries), default=1)
        object.__setattr__(self, "max_parts", max(parts, 1))

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, surface: str) -> Optional[EntityKind]:
        return self.entries.get(surface.lower())

    @classmethod
    def from_csv(cls, source: Union[str, os.PathLike, Iterable[str]]) -> "Gazetteer":
        if isinstance(source, (str, os.PathLike)):
            with open(source, newline="", encoding="utf-8") as fh:
                return cls.from_csv(fh)
        entries = {}
        for n, row in enumerate(csv.reader(source)):
            if not row or (n == 0 and row[0].strip().lower() == "surface"):
                continue
            if len(row) != 2:
                raise DataError(f"gazetteer row {n + 1}: expected surface,kind")
            key = row[0].strip().lower()
            if key in entries:
                raise DataError(f"duplicate gazetteer entry {key!r}")
            try:
                entries[key] = EntityKind(row[1].strip())
            except ValueError:
                raise DataError(f"gazetteer row {n + 1}: unknown kind {row[1]!r}") from None
        return cls(entries)

    @classmethod
    def default(cls) -> "Gazetteer":
        text = resources.files("sentitrend.data").joinpath("gazetteer.csv").read_text("utf-8")
        return cls.from_csv(io.StringIO(text))


@dataclass(frozen=True)
class Entity:
    surface: str
    kind: EntityKind
    start: int
    end: int


def extract_entities(raw_text: str, gazetteer: Gazetteer) -> list[Entity]:
    """Leftmost-longest, case-insensitive gazetteer matches over word tokens.

    A multi-part surface only matches when its parts are joined by a single
    joiner character (hyphen, apostrophe, ampersand, period), never by spaces.
    """
    words = [(m.start(), m.end()) for m in _WORD.finditer(raw_text)]
    found = []
    i = 0
    while i < len(words):
        # last index reachable from i through single joiner characters
        reach = i
        while (reach + 1 < len(words) and reach - i + 1 < gazetteer.max_parts
               and words[reach + 1][0] - words[reach][1] == 1
               and raw_text[words[reach][1]] in _JOINERS):
            reach += 1
        for j in range(reach, i - 1, -1):
            start, end = words[i][0], words[j][1]
            kind = gazetteer.get(raw_text[start:end])
            if kind is not None:
                found.append(Entity(raw_text[start:end], kind, start, end))
                i = j + 1
                break
        else:
            i += 1
    return found


def entity_frequencies(texts: Iterable[str], gazetteer: Gazetteer) -> list[tuple[str, str, int]]:
    """(lowercased surface, kind, count) sorted by count desc, then surface."""
    counts: Counter = Counter()
    for text in texts:
        for ent in extract_entities(text, gazetteer):
            counts[(ent.surface.lower(), ent.kind.value)] += 1
    return sorted(((s, k, c) for (s, k), c in counts.items()), key=lambda r: (-r[2], r[0]))


def write_entities_csv(rows: Iterable[tuple[str, str, int]], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["entity", "kind", "count"])
    for row in rows:
        writer.writerow(row)
