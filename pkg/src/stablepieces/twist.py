"""Diagram automorphisms: label permutations preserving the Cartan matrix.

The automorphism acts on elements through the induced permutation of the
positive roots (alpha_i goes to alpha_{delta(i)}, extended linearly), so no
word-level recomputation is needed and lengths are preserved by
construction.
"""

from __future__ import annotations

from typing import Mapping

from .weyl import WeylElement, WeylGroup


class DiagramAutomorphism:
    """A permutation delta of the simple-root labels with A[d(i)][d(j)] = A[i][j]."""

    __slots__ = ("group", "mapping", "_root_perm", "_inverse_mapping", "_inverse_aut")

    def __init__(self, group: WeylGroup, mapping: Mapping[int, int]):
        labels = group.datum.labels
        got = dict(mapping)
        if sorted(got) != sorted(labels) or sorted(got.values()) != sorted(labels):
            raise ValueError("not a diagram automorphism")
        for i in labels:
            for j in labels:
                if group.datum.entry(got[i], got[j]) != group.datum.entry(i, j):
                    raise ValueError("not a diagram automorphism")
        self.group = group
        self.mapping = {i: got[i] for i in labels}
        self._inverse_mapping = {v: k for k, v in self.mapping.items()}
        self._inverse_aut: "DiagramAutomorphism" | None = None

        # induced signed permutation of the positive roots
        roots = group.roots
        pos_of = {label: k for k, label in enumerate(labels)}
        perm = []
        for v in roots.positive_roots:
            image = [0] * len(v)
            for pos, c in enumerate(v):
                if c:
                    image[pos_of[self.mapping[labels[pos]]]] = c
            perm.append(roots.signed_index(tuple(image)))
        self._root_perm = tuple(perm)

    @classmethod
    def identity(cls, group: WeylGroup) -> "DiagramAutomorphism":
        return cls(group, {i: i for i in group.datum.labels})

    @classmethod
    def parse(cls, group: WeylGroup, spec: str) -> "DiagramAutomorphism":
        """Parse ``id`` or an explicit mapping such as ``1:2,2:1``."""
        spec = spec.strip()
        if spec in ("id", "identity", ""):
            return cls.identity(group)
        mapping = {}
        for item in spec.split(","):
            src, _, dst = item.partition(":")
            try:
                mapping[int(src)] = int(dst)
            except ValueError:
                raise ValueError("not a diagram automorphism") from None
        return cls(group, mapping)

    # -- identity / formatting  ---------------------------------------------

    def is_identity(self) -> bool:
        return all(v == k for k, v in self.mapping.items())

    def spec_string(self) -> str:
        if self.is_identity():
            return "id"
        return ",".join(f"{i}:{self.mapping[i]}" for i in self.group.datum.labels)

    def __repr__(self) -> str:
        return f"DiagramAutomorphism({self.spec_string()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagramAutomorphism):
            return NotImplemented
        return self.group is other.group and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash((id(self.group), tuple(sorted(self.mapping.items()))))

    # -- actions -------------------------------------------------------------

    def __call__(self, label: int) -> int:
        return self.mapping[label]

    def inverse_label(self, label: int) -> int:
        return self._inverse_mapping[label]

    def inverse_automorphism(self) -> "DiagramAutomorphism":
        if self._inverse_aut is None:
            self._inverse_aut = DiagramAutomorphism(self.group, self._inverse_mapping)
            self._inverse_aut._inverse_aut = self
        return self._inverse_aut

    def key(self) -> tuple[tuple[int, int], ...]:
        """Hashable mapping key for per-automorphism caches."""
        return tuple(sorted(self.mapping.items()))

    def apply_subset(self, subset) -> tuple[int, ...]:
        return tuple(sorted(self.mapping[j] for j in subset))

    def inverse_subset(self, subset) -> tuple[int, ...]:
        return tuple(sorted(self._inverse_mapping[j] for j in subset))

    def apply_element(self, w: WeylElement) -> WeylElement:
        """delta(w), acting as the conjugate of w by the root permutation."""
        if w.group is not self.group:
            raise ValueError("incompatible root systems")
        perm = self._root_perm  # entries are positive: delta permutes Phi+
        # (delta w)(delta(beta)) = delta(w(beta)) for every positive root beta
        image = [0] * len(perm)
        for k in range(len(perm)):
            t = w.action[k]
            image[perm[k]] = perm[t] if t >= 0 else ~perm[~t]
        return WeylElement(self.group, tuple(image))
