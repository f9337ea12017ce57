"""Finite root systems generated by an integer Cartan matrix.

Roots are stored as integer coordinate vectors over the simple-root basis,
so all arithmetic is exact.  Positive roots get a fixed deterministic order
(height, then lexicographic on coordinates) and every other module addresses
roots through signed indices into that order:

    k >= 0   means the positive root at index k,
    k < 0    means the negative of the positive root at index ~k.

Negation of a signed index is bitwise complement (``~k``), which commutes
with everything else and keeps the encoding branch free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Vec = tuple[int, ...]

DEFAULT_ROOT_CAP = 10000


def _check_matrix(matrix: Sequence[Sequence[int]]) -> None:
    n = len(matrix)
    if n == 0:
        raise ValueError("invalid Cartan matrix")
    for row in matrix:
        if len(row) != n:
            raise ValueError("invalid Cartan matrix")
    for i in range(n):
        for j in range(n):
            a = matrix[i][j]
            if not isinstance(a, int):
                raise ValueError("invalid Cartan matrix")
            if i == j:
                if a != 2:
                    raise ValueError("invalid Cartan matrix")
            else:
                if a > 0:
                    raise ValueError("invalid Cartan matrix")
                if (a == 0) != (matrix[j][i] == 0):
                    raise ValueError("invalid Cartan matrix")


@dataclass(frozen=True)
class CartanDatum:
    """Simple-root labels 1..n together with an integer Cartan matrix."""

    labels: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_matrix(matrix: Sequence[Sequence[int]]) -> "CartanDatum":
        _check_matrix(matrix)
        n = len(matrix)
        return CartanDatum(
            labels=tuple(range(1, n + 1)),
            matrix=tuple(tuple(int(a) for a in row) for row in matrix),
        )

    @property
    def rank(self) -> int:
        return len(self.labels)

    def entry(self, i: int, j: int) -> int:
        """Cartan entry for labels i, j (1-based)."""
        return self.matrix[i - 1][j - 1]


def standard_matrix(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix of the simple type ``letter`` at the given rank."""
    letter = letter.upper()
    ranges = {"A": (1, 9), "B": (2, 9), "C": (2, 9), "D": (3, 9),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    if letter not in ranges:
        raise ValueError("invalid Cartan matrix")
    lo, hi = ranges[letter]
    if not lo <= rank <= hi:
        raise ValueError("invalid Cartan matrix")

    def chain(n: int) -> list[list[int]]:
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            m[i][i + 1] = -1
            m[i + 1][i] = -1
        return m

    m = chain(rank)
    if letter == "B":
        # last simple root short: reflection at it adds the root twice
        m[rank - 1][rank - 2] = -2
    elif letter == "C":
        m[rank - 2][rank - 1] = -2
    elif letter == "D":
        m[rank - 2][rank - 1] = 0
        m[rank - 1][rank - 2] = 0
        m[rank - 3][rank - 1] = -1
        m[rank - 1][rank - 3] = -1
    elif letter == "E":
        # Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-..
        m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        bonds = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, rank)]
        for a, b in bonds:
            m[a - 1][b - 1] = -1
            m[b - 1][a - 1] = -1
    elif letter == "F":
        m[1][2] = -1
        m[2][1] = -2
    elif letter == "G":
        m[0][1] = -1
        m[1][0] = -3
    return m


def product_matrix(blocks: Iterable[Sequence[Sequence[int]]]) -> list[list[int]]:
    """Block-diagonal Cartan matrix of a reducible product."""
    blocks = list(blocks)
    sizes = [len(b) for b in blocks]
    n = sum(sizes)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def datum_from_type(spec: str) -> CartanDatum:
    """Parse a type string such as ``A2``, ``G2`` or ``A1xA1``."""
    parts = spec.replace("X", "x").split("x")
    blocks = []
    for part in parts:
        part = part.strip()
        if len(part) < 2 or not part[1:].isdigit():
            raise ValueError("invalid Cartan matrix")
        blocks.append(standard_matrix(part[0], int(part[1:])))
    return CartanDatum.from_matrix(product_matrix(blocks))


class RootSystem:
    """All roots generated from a Cartan datum by simple reflections.

    Construction is a breadth-first closure of the simple roots under the
    simple reflections; it raises ``ValueError("not finite type")`` when the
    count exceeds ``root_cap``.
    """

    def __init__(self, datum: CartanDatum, root_cap: int = DEFAULT_ROOT_CAP):
        _check_matrix(datum.matrix)
        self.datum = datum
        self.rank = datum.rank
        n = self.rank
        A = datum.matrix

        simple: list[Vec] = []
        for i in range(n):
            v = [0] * n
            v[i] = 1
            simple.append(tuple(v))

        def reflect(i: int, v: Vec) -> Vec:
            c = sum(A[i][j] * v[j] for j in range(n) if v[j])
            if c == 0:
                return v
            out = list(v)
            out[i] -= c
            return tuple(out)

        seen: set[Vec] = set(simple)
        queue: list[Vec] = list(simple)
        while queue:
            nxt: list[Vec] = []
            for v in queue:
                for i in range(n):
                    w = reflect(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
                        if len(seen) > root_cap:
                            raise ValueError("not finite type")
            queue = nxt

        positives = sorted(
            (v for v in seen if all(c >= 0 for c in v)),
            key=lambda v: (sum(v), v),
        )
        self.positive_roots: tuple[Vec, ...] = tuple(positives)
        self.num_positive = len(positives)
        self._pos_index = {v: k for k, v in enumerate(positives)}
        # signed index of each simple root, by label position
        self.simple_indices: tuple[int, ...] = tuple(
            self._pos_index[s] for s in simple
        )
        # reflection tables: refl[i][k] = signed image of positive root k
        # under the simple reflection at label position i
        tables = []
        for i in range(n):
            row = []
            for v in positives:
                w = reflect(i, v)
                row.append(self.signed_index(w))
            tables.append(tuple(row))
        self.reflection_tables: tuple[tuple[int, ...], ...] = tuple(tables)

    # -- signed-index helpers -------------------------------------------

    def signed_index(self, v: Vec) -> int:
        if all(c >= 0 for c in v):
            return self._pos_index[v]
        neg = tuple(-c for c in v)
        return ~self._pos_index[neg]

    def vector(self, k: int) -> Vec:
        if k >= 0:
            return self.positive_roots[k]
        return tuple(-c for c in self.positive_roots[~k])

    def label_of_simple(self, k: int) -> int | None:
        """Label i when the signed index k is the simple root alpha_i."""
        if k < 0:
            return None
        try:
            pos = self.simple_indices.index(k)
        except ValueError:
            return None
        return self.datum.labels[pos]

    # -- root sets -------------------------------------------------------

    def all_roots(self) -> list[Vec]:
        out = list(self.positive_roots)
        out.extend(tuple(-c for c in v) for v in self.positive_roots)
        return out

    def phi_subset_positive(self, subset: Iterable[int]) -> frozenset[int]:
        """Positive-root indices of Phi_J, the roots supported on J only."""
        positions = {self.datum.labels.index(j) for j in subset}
        return frozenset(
            k for k, v in enumerate(self.positive_roots)
            if all(c == 0 or pos in positions for pos, c in enumerate(v))
        )

    def phi_subset(self, subset: Iterable[int]) -> set[Vec]:
        """Phi_J as vectors, both signs."""
        pos = self.phi_subset_positive(subset)
        out: set[Vec] = set()
        for k in pos:
            v = self.positive_roots[k]
            out.add(v)
            out.add(tuple(-c for c in v))
        return out
