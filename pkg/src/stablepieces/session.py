"""Sessions bundle a root datum with an automorphism and hold the
expensive shared tables.

A session can persist its Bruhat matrix and piece list to a cache
directory, keyed by a digest of (Cartan matrix, automorphism); files with
a mismatched digest are ignored and regenerated.  Everything else is cheap
enough to recompute.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .bruhat import bruhat_masks
from .cartan import CartanDatum
from .pieces import PieceIndex, check_piece, enumerate_pieces
from .twist import DiagramAutomorphism
from .weyl import WeylGroup


def datum_digest(datum: CartanDatum, automorphism_key) -> str:
    payload = json.dumps(
        {
            "labels": list(datum.labels),
            "matrix": [list(row) for row in datum.matrix],
            "automorphism": [list(pair) for pair in automorphism_key],
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


class Session:
    def __init__(self, datum: CartanDatum, automorphism: str = "id",
                 label: str | None = None, cache_dir: str | Path | None = None):
        self.group = WeylGroup(datum)
        self.tw = DiagramAutomorphism.parse(self.group, automorphism)
        self.label = label or "cartan"
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.digest = datum_digest(datum, self.tw.key())
        self._pieces: tuple[PieceIndex, ...] | None = None
        self._load_cache()

    # -- disk cache -------------------------------------------------------

    def _cache_path(self) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"{self.digest}.json"

    def _load_cache(self) -> None:
        path = self._cache_path()
        if path is None or not path.exists():
            return
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return
        if data.get("digest") != self.digest:
            return
        try:
            masks = [int(m, 16) for m in data["bruhat"]]
            pieces = tuple(
                check_piece(self.group, self.tw, tuple(entry["J"]),
                            self.group.from_word(entry["w"]))
                for entry in data["pieces"]
            )
        except (KeyError, TypeError, ValueError):
            return
        if len(masks) != self.group.order:
            return
        self.group.cache["bruhat_masks"] = masks
        self._pieces = pieces

    def save_cache(self) -> None:
        path = self._cache_path()
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        data = {
            "digest": self.digest,
            "bruhat": [format(m, "x") for m in bruhat_masks(self.group)],
            "pieces": [
                {"J": list(p.subset), "w": list(p.w.reduced_word())}
                for p in self.pieces()
            ],
        }
        path.write_text(json.dumps(data, sort_keys=True,
                                   separators=(",", ":")))

    # -- shared views ------------------------------------------------------

    def pieces(self) -> tuple[PieceIndex, ...]:
        if self._pieces is None:
            self._pieces = enumerate_pieces(self.group, self.tw)
            self.save_cache()
        return self._pieces

    def piece(self, subset, word) -> PieceIndex:
        return check_piece(self.group, self.tw, tuple(subset),
                           self.group.from_word(word))
