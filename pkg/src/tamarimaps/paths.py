r"""Lattice path primitives: Dyck paths, grid paths, and their statistics.

A Dyck path is a balanced word over ``u`` (up step) and ``d`` (down step)
whose every prefix has at least as many ``u`` as ``d``.  A grid path is an
arbitrary word over ``N`` (north) and ``E`` (east).  Both are immutable;
every operation is a pure function, so values can be shared freely.

Conventions used throughout the package:

- up steps of a Dyck path are numbered 1..n in order of occurrence;
- word positions are 1-based (position ``j`` is the ``j``-th letter);
- lattice points along a path are numbered 0..len (point ``j`` sits after
  the first ``j`` steps).
"""

from __future__ import annotations


class DyckPath:
    """A Dyck path stored as its word over ``u``/``d``.

    >>> P = DyckPath("uududd")
    >>> P.size
    3
    >>> P.match_up(1), P.distance(1)
    (6, 5)
    >>> P.contacts()
    2
    """

    __slots__ = ("word", "size", "_heights", "_ups", "_match")

    def __init__(self, word: str = ""):
        if any(c not in "ud" for c in word):
            raise ValueError("Dyck word may only contain 'u' and 'd': %r" % (word,))
        heights = [0]
        ups = []
        stack = []
        match = [0] * len(word)
        h = 0
        for j, c in enumerate(word):
            if c == "u":
                ups.append(j + 1)
                stack.append(j)
                h += 1
            else:
                if not stack:
                    raise ValueError("not a Dyck word (prefix goes below 0): %r" % (word,))
                match[stack.pop()] = j + 1
                h -= 1
            heights.append(h)
        if h != 0:
            raise ValueError("not a Dyck word (unbalanced): %r" % (word,))
        self.word = word
        self.size = len(ups)
        self._heights = tuple(heights)
        self._ups = tuple(ups)
        self._match = tuple(match)

    # -- basic protocol ----------------------------------------------------

    def __repr__(self):
        return "DyckPath(%r)" % (self.word,)

    def __str__(self):
        return self.word

    def __eq__(self, other):
        return isinstance(other, DyckPath) and self.word == other.word

    def __hash__(self):
        return hash(("DyckPath", self.word))

    def __len__(self):
        return len(self.word)

    @property
    def is_empty(self) -> bool:
        return not self.word

    # -- statistics --------------------------------------------------------

    def heights(self) -> tuple:
        """Heights at lattice points 0..2n (running #u - #d)."""
        return self._heights

    def up_position(self, i: int) -> int:
        """Word position (1-based) of the i-th up step."""
        if not 1 <= i <= self.size:
            raise IndexError("up-step index %d out of range 1..%d" % (i, self.size))
        return self._ups[i - 1]

    def match_up(self, i: int) -> int:
        """Word position of the down step matched with the i-th up step.

        The match is the first later down step returning to the height the
        up step started from (the down step met by a horizontal ray drawn
        rightwards from the middle of the up step).

        >>> DyckPath("uududd").match_up(1)
        6
        """
        return self._match[self.up_position(i) - 1]

    def distance(self, i: int) -> int:
        """Letter distance from the i-th up step to its match: the number
        of letters strictly between them, plus one.  Always odd.

        >>> DyckPath("uududd").distance(1)
        5
        """
        return self.match_up(i) - self.up_position(i)

    def distance_vector(self) -> tuple:
        return tuple(self._match[p - 1] - p for p in self._ups)

    def type_of(self) -> "GridPath":
        """The type of the path: a grid word of length n-1 whose k-th letter
        is ``E`` when the k-th up step is immediately followed by another up
        step and ``N`` otherwise.

        >>> DyckPath("uudd").type_of()
        GridPath('E')
        >>> DyckPath("udud").type_of()
        GridPath('N')
        """
        if self.size < 1:
            raise ValueError("type is defined for nonempty Dyck paths only")
        w = self.word
        letters = ["E" if w[p] == "u" else "N" for p in self._ups[:-1]]
        return GridPath("".join(letters))

    def contains(self, i: int, j: int) -> bool:
        """Whether the j-th up step lies strictly inside the matching arc of
        the i-th up step (between the i-th up step and its matched down step).
        """
        if i == j:
            raise ValueError("contains() needs two distinct up-step indices")
        pi, pj = self.up_position(i), self.up_position(j)
        return pi < pj < self.match_up(i)

    def contacts(self) -> int:
        """Number of lattice points of the path on the x-axis, both
        endpoints included.  The empty path has one contact.

        >>> DyckPath("udud").contacts()
        3
        """
        return self._heights.count(0)

    def contact_positions(self) -> tuple:
        """Lattice point indices (0..2n) where the path touches the x-axis."""
        return tuple(j for j, h in enumerate(self._heights) if h == 0)


class GridPath:
    """A grid path stored as its word over ``N``/``E``.

    Any word is allowed: grid paths serve both as lattice elements and as
    canopies, and a canopy may be all-north or all-east.

    >>> v = GridPath("EEN")
    >>> v.horiz((0, 1))
    2
    """

    __slots__ = ("word", "_levels")

    def __init__(self, word: str = ""):
        if any(c not in "NE" for c in word):
            raise ValueError("grid word may only contain 'N' and 'E': %r" % (word,))
        self.word = word
        # levels[y] = largest abscissa the path reaches at ordinate y
        levels = []
        x = 0
        for c in word:
            if c == "E":
                x += 1
            else:
                levels.append(x)
        levels.append(x)
        self._levels = tuple(levels)

    def __repr__(self):
        return "GridPath(%r)" % (self.word,)

    def __str__(self):
        return self.word

    def __eq__(self, other):
        return isinstance(other, GridPath) and self.word == other.word

    def __hash__(self):
        return hash(("GridPath", self.word))

    def __len__(self):
        return len(self.word)

    @property
    def east_count(self) -> int:
        return self._levels[-1]

    @property
    def north_count(self) -> int:
        return len(self._levels) - 1

    @property
    def endpoint(self) -> tuple:
        return (self.east_count, self.north_count)

    def levels(self) -> tuple:
        """levels()[y] is the largest abscissa of the path at ordinate y."""
        return self._levels

    def points(self) -> list:
        """The lattice points visited, in order, starting at (0, 0)."""
        pts = [(0, 0)]
        x = y = 0
        for c in self.word:
            if c == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def north_abscissas(self) -> tuple:
        """Abscissa of each north step, bottom to top."""
        return self._levels[:-1]

    def weakly_above(self, v: "GridPath") -> bool:
        """Whether this path stays weakly above ``v``; requires equal
        endpoints to be meaningful and returns False otherwise.
        """
        if self.endpoint != v.endpoint:
            return False
        mine, theirs = self._levels, v._levels
        return all(mine[y] <= theirs[y] for y in range(len(mine)))

    def horiz(self, p: tuple) -> int:
        """Maximum number of east steps from the lattice point ``p`` before
        crossing this path.  ``p`` must lie weakly above the path, inside its
        bounding rectangle.
        """
        x, y = p
        if not 0 <= y <= self.north_count or x < 0:
            raise ValueError("point %r outside the bounding rectangle of %r" % (p, self))
        if x > self._levels[y]:
            raise ValueError("point %r lies strictly below %r" % (p, self))
        return self._levels[y] - x


class PathPair:
    """A pair (upper, canopy) of grid paths with equal endpoints, the upper
    one weakly above the canopy.  These are the elements of the lattice
    attached to the canopy.
    """

    __slots__ = ("upper", "canopy")

    def __init__(self, upper: GridPath, canopy: GridPath):
        if len(upper) != len(canopy):
            raise ValueError("paths of a pair must have equal length")
        if not upper.weakly_above(canopy):
            raise ValueError(
                "upper path %r is not weakly above canopy %r" % (upper.word, canopy.word)
            )
        self.upper = upper
        self.canopy = canopy

    def __repr__(self):
        return "PathPair(%r, %r)" % (self.upper.word, self.canopy.word)

    def __eq__(self, other):
        return (
            isinstance(other, PathPair)
            and self.upper == other.upper
            and self.canopy == other.canopy
        )

    def __hash__(self):
        return hash(("PathPair", self.upper.word, self.canopy.word))


def enumerate_dyck_paths(n: int) -> list:
    """All Dyck paths of size ``n`` in lexicographic word order ('d' < 'u').

    >>> [P.word for P in enumerate_dyck_paths(2)]
    ['udud', 'uudd']
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    words = []

    def extend(prefix, ups_left, height):
        if ups_left == 0 and height == 0:
            words.append("".join(prefix))
            return
        if height > 0:
            prefix.append("d")
            extend(prefix, ups_left, height - 1)
            prefix.pop()
        if ups_left > 0:
            prefix.append("u")
            extend(prefix, ups_left - 1, height + 1)
            prefix.pop()

    extend([], n, 0)
    return [DyckPath(w) for w in words]


def grid_path_from_north_abscissas(abscissas, east_count: int) -> GridPath:
    """Rebuild the grid word whose k-th north step has the given abscissa."""
    prev = 0
    letters = []
    for b in abscissas:
        if b < prev:
            raise ValueError("north abscissas must be weakly increasing")
        letters.append("E" * (b - prev))
        letters.append("N")
        prev = b
    if east_count < prev:
        raise ValueError("east count smaller than the last north abscissa")
    letters.append("E" * (east_count - prev))
    return GridPath("".join(letters))
