r"""The Tamari order on Dyck paths, the lattice attached to a canopy,
synchronized and canopy intervals, and the size-shifting bijection between
them.

The production order test compares distance vectors (``tamari_leq``); the
classical right-rotation covering relation is kept as an independent test
oracle (``dyck_rotation_covers``), as is the covering relation of the canopy
lattice (``tam_covers``).
"""

from __future__ import annotations

from .paths import (
    DyckPath,
    GridPath,
    PathPair,
    enumerate_dyck_paths,
    grid_path_from_north_abscissas,
)


# ---------------------------------------------------------------------------
# Order on Dyck paths
# ---------------------------------------------------------------------------

def tamari_leq(P: DyckPath, Q: DyckPath) -> bool:
    """Whether ``P <= Q`` in the Tamari order: the distance of every up step
    of ``P`` is at most the distance of the same-index up step of ``Q``.

    >>> tamari_leq(DyckPath("udud"), DyckPath("uudd"))
    True
    >>> tamari_leq(DyckPath("uudd"), DyckPath("udud"))
    False
    """
    if P.size != Q.size:
        raise ValueError("paths must have equal size")
    return all(a <= b for a, b in zip(P.distance_vector(), Q.distance_vector()))


def dyck_rotation_covers(P: DyckPath) -> list:
    """All paths covering ``P`` for the classical right rotation: a down step
    immediately followed by an up step is swapped with the whole excursion
    that up step starts.  Test oracle for ``tamari_leq``.

    >>> [c.word for c in dyck_rotation_covers(DyckPath("udud"))]
    ['uudd']
    """
    w = P.word
    out = []
    for t in range(len(w) - 1):
        if w[t] == "d" and w[t + 1] == "u":
            # excursion starting at the up step in word position t+2 (1-based)
            i = w[: t + 1].count("u") + 1
            m = P.match_up(i)  # 1-based position of its matching down step
            out.append(DyckPath(w[:t] + w[t + 1 : m] + "d" + w[m:]))
    return sorted(set(out), key=lambda p: p.word)


# ---------------------------------------------------------------------------
# The lattice attached to a canopy
# ---------------------------------------------------------------------------

def _check_in_tam(v: GridPath, v1: GridPath):
    if not v1.weakly_above(v):
        raise ValueError("%r is not an element above the canopy %r" % (v1.word, v.word))


def tam_covers(v: GridPath, v1: GridPath) -> list:
    """Covering elements of ``v1`` in the lattice of paths weakly above ``v``.

    For each valley (an east step followed by a north step) at point ``p``,
    the east step just before ``p`` is switched with the portion of the path
    from ``p`` to the first later point with the same horizontal distance.

    >>> [c.word for c in tam_covers(GridPath("EN"), GridPath("EN"))]
    ['NE']
    """
    _check_in_tam(v, v1)
    w = v1.word
    levels = v.levels()
    out = []
    for t in range(len(w) - 1):
        if w[t] == "E" and w[t + 1] == "N":
            x = w[: t + 1].count("E")
            y = t + 1 - x
            hd = levels[y] - x
            j = t
            for j in range(t + 1, len(w)):
                if w[j] == "E":
                    x += 1
                else:
                    y += 1
                if levels[y] - x == hd:
                    break
            out.append(GridPath(w[:t] + w[t + 1 : j + 1] + "E" + w[j + 1 :]))
    covers = sorted(set(out), key=lambda p: p.word)
    for c in covers:
        _check_in_tam(v, c)
    return covers


def enumerate_tam(v: GridPath) -> list:
    """All grid paths weakly above ``v`` with the same endpoints, in
    lexicographic word order.

    >>> [p.word for p in enumerate_tam(GridPath("EN"))]
    ['EN', 'NE']
    """
    levels = v.levels()
    q = v.north_count
    words = []

    def extend(prefix, x, y):
        if len(prefix) == len(v):
            words.append("".join(prefix))
            return
        if x < levels[y]:
            prefix.append("E")
            extend(prefix, x + 1, y)
            prefix.pop()
        if y < q:
            prefix.append("N")
            extend(prefix, x, y + 1)
            prefix.pop()

    extend([], 0, 0)
    return [GridPath(w) for w in sorted(words)]


def tam_leq(v: GridPath, v1: GridPath, v2: GridPath) -> bool:
    """Order test in the lattice attached to ``v``, through the path-pair
    isomorphism onto a type fiber of the Tamari lattice.  The agreement of
    this route with the reflexive-transitive closure of ``tam_covers`` is
    part of the test surface.
    """
    return tamari_leq(pathpair_to_dyck(PathPair(v1, v)), pathpair_to_dyck(PathPair(v2, v)))


# ---------------------------------------------------------------------------
# Dyck paths <-> pairs of non-crossing grid paths (size shift by one)
# ---------------------------------------------------------------------------

def dyck_to_pathpair(P: DyckPath) -> PathPair:
    """Send a Dyck path of size n to a pair (upper, canopy) of length n-1.

    The canopy is the type of ``P``.  Writing r_1 < ... < r_{s-1} for the
    indices of the north letters of the type and r_s = n, the k-th north step
    of the upper path sits c_k columns left of the k-th north step of the
    canopy, where c_k counts the up steps whose matching arc strictly
    contains both the r_k-th and the r_{k+1}-th up steps.

    >>> dyck_to_pathpair(DyckPath("udud"))
    PathPair('N', 'N')
    """
    if P.size < 1:
        raise ValueError("needs a nonempty Dyck path")
    v = P.type_of()
    north_ranks = [k + 1 for k, c in enumerate(v.word) if c == "N"]
    ranks = north_ranks + [P.size]
    abscissas = []
    for k, rk in enumerate(north_ranks):
        rnext = ranks[k + 1]
        pos_next = P.up_position(rnext)
        c_k = sum(
            1
            for m in range(1, rk)
            if P.up_position(m) < P.up_position(rk) and pos_next < P.match_up(m)
        )
        abscissas.append(v.north_abscissas()[k] - c_k)
    v1 = grid_path_from_north_abscissas(abscissas, v.east_count)
    return PathPair(v1, v)


def pathpair_to_dyck(pp: PathPair) -> DyckPath:
    """Inverse of :func:`dyck_to_pathpair`: rebuild the unique Dyck path
    whose type is the canopy and whose containment counts reproduce the
    upper path.  Each containment count fixes the height after one maximal
    descent, hence the descent lengths, left to right.

    >>> pathpair_to_dyck(PathPair(GridPath("N"), GridPath("N"))).word
    'udud'
    """
    v1, v = pp.upper, pp.canopy
    n = len(v) + 1
    north_ranks = [k + 1 for k, c in enumerate(v.word) if c == "N"]
    shifts = [a - b for a, b in zip(v.north_abscissas(), v1.north_abscissas())]
    # height after the k-th maximal descent equals the containment count c_k
    word = []
    total_down = 0
    for k, rk in enumerate(north_ranks):
        word.append("u" * (rk - (north_ranks[k - 1] if k else 0)))
        run = rk - shifts[k] - total_down
        if run < 1:
            raise ValueError("invalid pair: impossible descent at north step %d" % (k + 1,))
        word.append("d" * run)
        total_down += run
    word.append("u" * (n - (north_ranks[-1] if north_ranks else 0)))
    word.append("d" * (n - total_down))
    P = DyckPath("".join(word))
    if P.type_of() != v:
        raise ValueError("invalid pair: no Dyck path reproduces it")
    return P


# ---------------------------------------------------------------------------
# Interval types
# ---------------------------------------------------------------------------

class SyncInterval:
    """A synchronized interval: two Dyck paths of equal size and equal type,
    comparable in the Tamari order.  The size-0 interval (two empty paths) is
    allowed; it is the unit of interval composition.
    """

    __slots__ = ("lower", "upper")

    def __init__(self, lower: DyckPath, upper: DyckPath):
        if lower.size != upper.size:
            raise ValueError("paths of an interval must have equal size")
        if lower.size > 0:
            if lower.type_of() != upper.type_of():
                raise ValueError(
                    "paths have different types: %s vs %s"
                    % (lower.type_of().word, upper.type_of().word)
                )
            if not tamari_leq(lower, upper):
                raise ValueError("%r is not below %r" % (lower.word, upper.word))
        self.lower = lower
        self.upper = upper

    @property
    def size(self) -> int:
        return self.lower.size

    def __repr__(self):
        return "SyncInterval(%r, %r)" % (self.lower.word, self.upper.word)

    def __eq__(self, other):
        return (
            isinstance(other, SyncInterval)
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self):
        return hash(("SyncInterval", self.lower.word, self.upper.word))

    def to_text(self) -> str:
        return "%s|%s" % (self.lower.word, self.upper.word)

    @staticmethod
    def from_text(text: str) -> "SyncInterval":
        parts = text.strip().split("|")
        if len(parts) != 2:
            raise ValueError("interval text must be two Dyck words joined by '|'")
        return SyncInterval(DyckPath(parts[0]), DyckPath(parts[1]))


class CanopyInterval:
    """A triple (upper, lower, canopy) of equal-length grid paths with both
    elements above the canopy and lower <= upper in the canopy's lattice.
    """

    __slots__ = ("upper", "lower", "canopy")

    def __init__(self, upper: GridPath, lower: GridPath, canopy: GridPath):
        if not (len(upper) == len(lower) == len(canopy)):
            raise ValueError("the three paths must have equal length")
        _check_in_tam(canopy, lower)
        _check_in_tam(canopy, upper)
        if len(canopy) and not tam_leq(canopy, lower, upper):
            raise ValueError(
                "%r is not below %r above the canopy %r"
                % (lower.word, upper.word, canopy.word)
            )
        self.upper = upper
        self.lower = lower
        self.canopy = canopy

    @property
    def size(self) -> int:
        return len(self.canopy)

    def __repr__(self):
        return "CanopyInterval(%r, %r, %r)" % (
            self.upper.word,
            self.lower.word,
            self.canopy.word,
        )

    def __eq__(self, other):
        return (
            isinstance(other, CanopyInterval)
            and self.upper == other.upper
            and self.lower == other.lower
            and self.canopy == other.canopy
        )

    def __hash__(self):
        return hash(("CanopyInterval", self.upper.word, self.lower.word, self.canopy.word))

    def to_text(self) -> str:
        return "%s|%s|%s" % (self.upper.word, self.lower.word, self.canopy.word)

    @staticmethod
    def from_text(text: str) -> "CanopyInterval":
        parts = text.strip().split("|")
        if len(parts) != 3:
            raise ValueError("canopy interval text must be three grid words joined by '|'")
        return CanopyInterval(GridPath(parts[0]), GridPath(parts[1]), GridPath(parts[2]))


class PointedSyncInterval:
    """A synchronized interval whose lower path is split at a contact into a
    left and a right Dyck factor.  The left factor must be nonempty unless
    the whole path is empty, so ``cut`` ranges over 1..contacts-1 (and is 0
    exactly for the size-0 interval).
    """

    __slots__ = ("base", "cut")

    def __init__(self, base: SyncInterval, cut: int):
        contacts = base.lower.contacts()
        if base.size == 0:
            if cut != 0:
                raise ValueError("the empty interval admits only cut 0")
        elif not 1 <= cut <= contacts - 1:
            raise ValueError("cut must be in 1..%d, got %d" % (contacts - 1, cut))
        self.base = base
        self.cut = cut

    @property
    def size(self) -> int:
        return self.base.size

    def split_lower(self) -> tuple:
        """The two Dyck factors of the lower path at the pointed contact."""
        pos = self.base.lower.contact_positions()[self.cut]
        w = self.base.lower.word
        return DyckPath(w[:pos]), DyckPath(w[pos:])

    def __repr__(self):
        return "PointedSyncInterval(%r, cut=%d)" % (self.base, self.cut)

    def __eq__(self, other):
        return (
            isinstance(other, PointedSyncInterval)
            and self.base == other.base
            and self.cut == other.cut
        )

    def __hash__(self):
        return hash(("PointedSyncInterval", self.base, self.cut))


# ---------------------------------------------------------------------------
# Synchronized <-> canopy intervals
# ---------------------------------------------------------------------------

def sync_to_canopy(interval: SyncInterval) -> CanopyInterval:
    """Size-n synchronized interval -> size-(n-1) canopy interval, by sending
    both paths through the pair bijection over their common type.

    >>> sync_to_canopy(SyncInterval(DyckPath("udud"), DyckPath("udud"))).to_text()
    'N|N|N'
    """
    if interval.size < 1:
        raise ValueError("needs a nonempty interval")
    low = dyck_to_pathpair(interval.lower)
    up = dyck_to_pathpair(interval.upper)
    return CanopyInterval(up.upper, low.upper, low.canopy)


def canopy_to_sync(ci: CanopyInterval) -> SyncInterval:
    """Inverse of :func:`sync_to_canopy`."""
    return SyncInterval(
        pathpair_to_dyck(PathPair(ci.lower, ci.canopy)),
        pathpair_to_dyck(PathPair(ci.upper, ci.canopy)),
    )


# ---------------------------------------------------------------------------
# Recursive composition of synchronized intervals
# ---------------------------------------------------------------------------

def compose_intervals(pointed: PointedSyncInterval, other: SyncInterval) -> SyncInterval:
    """Compose a pointed interval [Pl Pr, Q1] and an interval [P2, Q2] into
    the interval [u Pl d Pr P2, u Q1 d Q2].  Sizes add up plus one.

    >>> empty = SyncInterval(DyckPath(""), DyckPath(""))
    >>> compose_intervals(PointedSyncInterval(empty, 0), empty).to_text()
    'ud|ud'
    """
    left, right = pointed.split_lower()
    lower = DyckPath("u" + left.word + "d" + right.word + other.lower.word)
    upper = DyckPath("u" + pointed.base.upper.word + "d" + other.upper.word)
    return SyncInterval(lower, upper)


def decompose_interval(interval: SyncInterval) -> tuple:
    """Inverse of :func:`compose_intervals` on nonempty intervals.

    The upper path is cut at its first return to the axis, the lower path at
    the same position (necessarily a contact), and the left lower piece is
    cut again at its own first return to locate the pointed contact.
    """
    if interval.size == 0:
        raise ValueError("cannot decompose the empty interval")
    P, Q = interval.lower.word, interval.upper.word
    qcut = interval.upper.contact_positions()[1]
    Q1, Q2 = DyckPath(Q[1 : qcut - 1]), DyckPath(Q[qcut:])
    if interval.lower.heights()[qcut] != 0:
        raise ValueError("lower path has no contact under the upper first return")
    P1, P2 = DyckPath(P[:qcut]), DyckPath(P[qcut:])
    pcut = P1.contact_positions()[1]
    left, right = DyckPath(P[1 : pcut - 1]), DyckPath(P[pcut:qcut])
    lower1 = DyckPath(left.word + right.word)
    base = SyncInterval(lower1, Q1)
    if base.size == 0:
        cut = 0
    else:
        cut = lower1.contact_positions().index(len(left))
    return PointedSyncInterval(base, cut), SyncInterval(P2, Q2)


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------

def dyck_paths_by_type(n: int) -> dict:
    """Group all size-n Dyck paths by type word."""
    fibers = {}
    for P in enumerate_dyck_paths(n):
        fibers.setdefault(P.type_of().word if n else "", []).append(P)
    return fibers


def enumerate_sync_intervals(n: int) -> list:
    """All synchronized intervals of size ``n``, ordered by word encodings.
    Comparisons are run fiber by fiber: only equal-type paths can form one.

    >>> [i.to_text() for i in enumerate_sync_intervals(2)]
    ['udud|udud', 'uudd|uudd']
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return [SyncInterval(DyckPath(""), DyckPath(""))]
    out = []
    for fiber in dyck_paths_by_type(n).values():
        vectors = [P.distance_vector() for P in fiber]
        for i, P in enumerate(fiber):
            for j, Q in enumerate(fiber):
                if all(a <= b for a, b in zip(vectors[i], vectors[j])):
                    out.append(SyncInterval(P, Q))
    return sorted(out, key=lambda I: (I.lower.word, I.upper.word))


def enumerate_pointed_intervals(n: int) -> list:
    """All properly pointed synchronized intervals of size ``n``."""
    if n == 0:
        return [PointedSyncInterval(SyncInterval(DyckPath(""), DyckPath("")), 0)]
    return [
        PointedSyncInterval(I, c)
        for I in enumerate_sync_intervals(n)
        for c in range(1, I.lower.contacts())
    ]


def enumerate_canopy_intervals(v: GridPath) -> list:
    """All intervals of the lattice attached to ``v``, from the reflexive-
    transitive closure of the covering relation (independent of the Dyck-path
    order test)."""
    elements = enumerate_tam(v)
    index = {e.word: k for k, e in enumerate(elements)}
    above = []
    for e in elements:
        reach = {e.word}
        stack = [e]
        while stack:
            cur = stack.pop()
            for c in tam_covers(v, cur):
                if c.word not in reach:
                    reach.add(c.word)
                    stack.append(c)
        above.append(reach)
    out = []
    for k, low in enumerate(elements):
        for upw in sorted(above[k]):
            out.append(CanopyInterval(elements[index[upw]], low, v))
    return sorted(out, key=lambda ci: (ci.lower.word, ci.upper.word))


def count_canopy_intervals_of_length(n: int) -> int:
    """Total number of canopy intervals over all canopies of length ``n``."""
    from itertools import product

    total = 0
    for letters in product("EN", repeat=n):
        total += len(enumerate_canopy_intervals(GridPath("".join(letters))))
    return total
