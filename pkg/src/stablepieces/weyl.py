"""Exact Weyl group arithmetic on top of a root system.

An element is represented canonically by its action on the positive roots,
an integer tuple of signed root indices.  Equality and composition are then
O(number of positive roots) with no word normalisation, and the length is
just the count of positive roots sent negative.

Full group enumeration (needed by the brute-force checks and the piece
machinery) is a breadth-first walk from the identity by right
multiplication; elements keep their discovery index for stable iteration.
"""

from __future__ import annotations

from .cartan import CartanDatum, RootSystem, Vec


class WeylElement:
    """A Weyl group element as a signed permutation of the positive roots."""

    __slots__ = ("group", "action", "_inverse", "_hash", "_word")

    def __init__(self, group: "WeylGroup", action: tuple[int, ...]):
        self.group = group
        self.action = action
        self._inverse: WeylElement | None = None
        self._hash: int | None = None
        self._word: tuple[int, ...] | None = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.group is other.group and self.action == other.action

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.action)
        return self._hash

    def __repr__(self) -> str:
        word = "".join(str(i) for i in self.reduced_word())
        return f"W[{word or 'e'}]"

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.group is not other.group:
            raise ValueError("incompatible root systems")
        act = self.action
        return WeylElement(
            self.group,
            tuple(act[s] if s >= 0 else ~act[~s] for s in other.action),
        )

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            inv = [0] * len(self.action)
            for k, s in enumerate(self.action):
                if s >= 0:
                    inv[s] = k
                else:
                    inv[~s] = ~k
            out = WeylElement(self.group, tuple(inv))
            out._inverse = self
            self._inverse = out
        return self._inverse

    @property
    def length(self) -> int:
        return sum(1 for s in self.action if s < 0)

    def is_identity(self) -> bool:
        return self is self.group.identity or self.action == self.group.identity.action

    # -- root action --------------------------------------------------------

    def act_signed(self, k: int) -> int:
        return self.action[k] if k >= 0 else ~self.action[~k]

    def act_root(self, v: Vec) -> Vec:
        return self.group.roots.vector(self.act_signed(self.group.roots.signed_index(v)))

    # -- descents and words --------------------------------------------------

    def right_descents(self) -> tuple[int, ...]:
        """Labels i with w(alpha_i) negative."""
        grp = self.group
        return tuple(
            grp.datum.labels[pos]
            for pos, k in enumerate(grp.roots.simple_indices)
            if self.action[k] < 0
        )

    def left_descents(self) -> tuple[int, ...]:
        return self.inverse().right_descents()

    def reduced_word(self) -> tuple[int, ...]:
        """The deterministic reduced word: smallest left descent first."""
        if self._word is None:
            grp = self.group
            w = self
            word: list[int] = []
            while True:
                descents = w.left_descents()
                if not descents:
                    break
                i = min(descents)
                word.append(i)
                w = grp.simple(i) * w
            self._word = tuple(word)
        return self._word


class WeylGroup:
    """The Weyl group of a root system, with cached generator tables."""

    def __init__(self, datum_or_roots: CartanDatum | RootSystem):
        if isinstance(datum_or_roots, RootSystem):
            self.roots = datum_or_roots
        else:
            self.roots = RootSystem(datum_or_roots)
        self.datum = self.roots.datum
        n = self.roots.num_positive
        self.identity = WeylElement(self, tuple(range(n)))
        self._simple = {
            label: WeylElement(self, self.roots.reflection_tables[pos])
            for pos, label in enumerate(self.datum.labels)
        }
        self._elements: tuple[WeylElement, ...] | None = None
        self._index: dict[tuple[int, ...], int] = {}
        self._right_table: list[tuple[int, ...]] | None = None
        self._all_words_memo: dict[tuple[int, ...], frozenset[tuple[int, ...]]] = {}
        # shared scratch space for caches built by other modules (write once)
        self.cache: dict = {}

    # -- generators ----------------------------------------------------------

    def simple(self, label: int) -> WeylElement:
        try:
            return self._simple[label]
        except KeyError:
            raise ValueError("invalid generator") from None

    def from_word(self, word) -> WeylElement:
        w = self.identity
        for i in word:
            w = w * self.simple(i)
        return w

    # -- enumeration -----------------------------------------------------------

    def elements(self) -> tuple[WeylElement, ...]:
        """All elements in breadth-first discovery order from the identity."""
        if self._elements is None:
            order: list[WeylElement] = [self.identity]
            index = {self.identity.action: 0}
            table: list[tuple[int, ...]] = []
            head = 0
            while head < len(order):
                w = order[head]
                row = []
                for label in self.datum.labels:
                    ws = w * self.simple(label)
                    j = index.get(ws.action)
                    if j is None:
                        j = len(order)
                        index[ws.action] = j
                        order.append(ws)
                    row.append(j)
                table.append(tuple(row))
                head += 1
            self._elements = tuple(order)
            self._index = index
            self._right_table = table
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    def element_index(self, w: WeylElement) -> int:
        self.elements()
        return self._index[w.action]

    def right_multiplication_table(self) -> list[tuple[int, ...]]:
        """table[k][pos] = index of elements()[k] * s_{labels[pos]}."""
        self.elements()
        assert self._right_table is not None
        return self._right_table

    def multiplication_table(self) -> list[tuple[int, ...]]:
        """Full index-level product table, built lazily from generator words."""
        table = self.cache.get("mult_table")
        if table is None:
            order = self.elements()
            right = self.right_multiplication_table()
            pos_of = {label: pos for pos, label in enumerate(self.datum.labels)}
            words = [w.reduced_word() for w in order]
            table = []
            for i in range(len(order)):
                row = []
                for j in range(len(order)):
                    k = i
                    for letter in words[j]:
                        k = right[k][pos_of[letter]]
                    row.append(k)
                table.append(tuple(row))
            self.cache["mult_table"] = table
        return table

    def inverse_table(self) -> tuple[int, ...]:
        """inverse_table()[k] = index of elements()[k] inverted."""
        table = self.cache.get("inverse_table")
        if table is None:
            order = self.elements()
            table = tuple(self.element_index(w.inverse()) for w in order)
            self.cache["inverse_table"] = table
        return table

    def lengths(self) -> tuple[int, ...]:
        lens = self.cache.get("lengths")
        if lens is None:
            lens = tuple(w.length for w in self.elements())
            self.cache["lengths"] = lens
        return lens

    # -- distinguished elements ---------------------------------------------------

    def longest_element(self, subset=None) -> WeylElement:
        """The longest element of the standard parabolic W_J (all of W by default)."""
        labels = tuple(self.datum.labels) if subset is None else tuple(sorted(subset))
        simple_pos = {
            label: self.roots.simple_indices[self.datum.labels.index(label)]
            for label in labels
        }
        w = self.identity
        while True:
            for label in labels:
                if w.action[simple_pos[label]] >= 0:
                    w = w * self.simple(label)
                    break
            else:
                return w

    # -- reduced words ----------------------------------------------------------------

    def all_reduced_words(self, w: WeylElement) -> frozenset[tuple[int, ...]]:
        """Every reduced word of w.  Memoised; meant for short elements."""
        memo = self._all_words_memo
        cached = memo.get(w.action)
        if cached is not None:
            return cached
        if w.length == 0:
            result = frozenset({()})
        else:
            words: set[tuple[int, ...]] = set()
            for i in w.right_descents():
                for prefix in self.all_reduced_words(w * self.simple(i)):
                    words.add(prefix + (i,))
            result = frozenset(words)
        memo[w.action] = result
        return result


def sort_key(w: WeylElement) -> tuple[int, tuple[int, ...]]:
    """Deterministic ordering key: length, then the canonical reduced word."""
    return (w.length, w.reduced_word())
