r"""The bijection chain: non-separable planar maps <-> decorated trees <->
synchronized intervals <-> canopy intervals.

Maps to trees goes through a depth-first exploration of the map, clockwise
around each vertex; trees to maps reverses it by re-attaching each leaf to
the ancestor its label names.  Trees to intervals reads the upper path off
the depth evolution and the lower path off the charge process; the inverse
recovers each leaf label with a leftward ray in the lower path.
"""

from __future__ import annotations

from .maps import (
    PlanarMap,
    ParallelBrick,
    compose_parallel,
    map_from_rotations,
    parallel_components,
    single_loop_map,
)
from .paths import DyckPath
from .tamari import (
    CanopyInterval,
    PointedSyncInterval,
    SyncInterval,
    canopy_to_sync,
    compose_intervals,
    decompose_interval,
    sync_to_canopy,
)
from .trees import DecoratedTree


# ---------------------------------------------------------------------------
# Maps <-> decorated trees
# ---------------------------------------------------------------------------

def map_to_tree(M: PlanarMap) -> DecoratedTree:
    """Explore a non-separable map depth-first, clockwise around each vertex,
    starting along the root edge.

    The first time an edge is scanned towards an already visited vertex it
    becomes a leaf labeled with that vertex's depth (the tail of the root
    has depth -1).  The root edge is then deleted; the tree is rooted at the
    head of the root.  Siblings visited first end up last in traversal
    order, so children are prepended.

    >>> from tamarimaps.maps import double_edge_map
    >>> map_to_tree(double_edge_map()).to_text()
    '(-1)'
    """
    if not M.is_non_separable():
        raise ValueError("the exploration needs a non-separable map")
    sigma = M.sigma
    depth = {M.vertex_of(M.root): -1}
    explored = [False] * M.edge_count
    explored[M.root >> 1] = True

    def explore(arrival, p):
        depth[M.vertex_of(arrival)] = p
        children = []
        d = sigma[arrival]
        while d != arrival:
            if not explored[d >> 1]:
                explored[d >> 1] = True
                other = M.vertex_of(d ^ 1)
                if other in depth:
                    children.insert(0, depth[other])
                else:
                    children.insert(0, explore(d ^ 1, p + 1))
            d = sigma[d]
        return tuple(children)

    return DecoratedTree(explore(M.root ^ 1, 0))


def tree_to_map(T: DecoratedTree) -> PlanarMap:
    """Inverse exploration: embed the tree with a fresh root edge above its
    root, then turn each leaf back into an edge towards the ancestor of the
    depth its label names (-1 meaning the new root-edge tail).

    Leaves are processed from the last one in traversal order; each new dart
    is attached just after, in clockwise order, the edge through which the
    ancestor reaches the leaf.
    """
    violations = T.validate()
    if violations:
        raise ValueError("not a decorated tree: %s" % (violations[0],))

    # dart ids: ("v",) tail of the root edge; each tree node address gets its
    # parent-edge dart pair (address, 0) at the parent and (address, 1) below
    ROOT_TAIL = ("v", 0)
    ROOT_HEAD = ("v", 1)
    twin = {ROOT_TAIL: ROOT_HEAD, ROOT_HEAD: ROOT_TAIL}
    rotations = {}  # node address (or "v") -> clockwise dart list

    def up_dart(address):
        return (address, 0)

    def down_dart(address):
        return (address, 1)

    def build(node, address, parent_dart):
        # clockwise rotation at an internal node: parent edge first, then
        # children in reverse traversal order (visited first = scanned first)
        darts = [parent_dart]
        for k in reversed(range(len(node))):
            child_address = address + (k,)
            darts.append(up_dart(child_address))
            twin[up_dart(child_address)] = down_dart(child_address)
            twin[down_dart(child_address)] = up_dart(child_address)
            child = node[k]
            if not isinstance(child, int):
                build(child, child_address, down_dart(child_address))
        rotations[address] = darts

    rotations["v"] = [ROOT_TAIL]
    build(T.root, (), ROOT_HEAD)

    # re-attach leaves, last in traversal order first
    for leaf in reversed(T.leaves_in_traversal_order()):
        if leaf.label == -1:
            host, host_dart = "v", ROOT_TAIL
        else:
            host = leaf.address[: leaf.label]
            host_dart = up_dart(leaf.address[: leaf.label + 1])
        cyc = rotations[host]
        cyc.insert(cyc.index(host_dart) + 1, down_dart(leaf.address))

    M = map_from_rotations(list(rotations.values()), twin, ROOT_TAIL)
    if not M.is_non_separable():
        raise AssertionError("reconstruction produced a separable map")
    return M


# ---------------------------------------------------------------------------
# Decorated trees <-> synchronized intervals
# ---------------------------------------------------------------------------

def tree_to_upper(T: DecoratedTree) -> DyckPath:
    """The depth evolution of the tree traversal: one up step entering each
    edge, one down step leaving it.

    >>> tree_to_upper(DecoratedTree.from_text("(-1 -1)")).word
    'udud'
    """
    out = []

    def walk(node):
        for child in node:
            out.append("u")
            if not isinstance(child, int):
                walk(child)
            out.append("d")

    walk(T.root)
    return DyckPath("".join(out))


def tree_to_lower(T: DecoratedTree) -> DyckPath:
    """The charge word: an up step on each internal edge, and u d^(1+k) on
    each leaf of charge k, in traversal order.

    >>> tree_to_lower(DecoratedTree.from_text("((-1))")).word
    'uudd'
    """
    charges = iter(T.compute_charges().charges)
    out = []

    def walk(node):
        for child in node:
            out.append("u")
            if isinstance(child, int):
                out.append("d" * (1 + next(charges)))
            else:
                walk(child)

    walk(T.root)
    return DyckPath("".join(out))


def tree_to_interval(T: DecoratedTree) -> SyncInterval:
    """The synchronized interval [lower, upper] attached to a decorated tree."""
    return SyncInterval(tree_to_lower(T), tree_to_upper(T))


def interval_to_tree(interval: SyncInterval) -> DecoratedTree:
    """Inverse of :func:`tree_to_interval`.

    The tree shape is the contour tree of the upper path.  For the leaf
    owning the i-th up step, a leftward ray is drawn in the lower path from
    the lowest point of the down run after its i-th up step; the ray stops
    at the nearest midpoint of a double up step at exactly that height, and
    the leaf is labeled with the depth of the shallower endpoint of the edge
    owning, in the upper path, the same index as the lower of those two up
    steps.  No midpoint at that height labels the leaf -1.
    """
    if interval.size < 1:
        raise ValueError("needs a nonempty interval")
    Q, P = interval.upper, interval.lower
    w = Q.word
    pos = 0

    def parse():
        nonlocal pos
        children = []
        while pos < len(w) and w[pos] == "u":
            pos += 1
            if pos < len(w) and w[pos] == "d":
                pos += 1
                children.append(("leaf",))
            else:
                children.append(parse())
                pos += 1  # the matching d
        return tuple(children)

    shape = parse()

    # depth of the shallower endpoint of the edge owning each up step of Q
    qh = Q.heights()
    up_parent_depth = [qh[Q.up_position(i) - 1] for i in range(1, Q.size + 1)]

    ph = P.heights()
    pw = P.word
    labels = []
    for i in range(1, P.size + 1):
        start = P.up_position(i)
        end = start
        while end < len(pw) and pw[end] == "d":
            end += 1
        y = ph[end]
        label = -1
        for q in range(end - 1, 0, -1):
            if ph[q] == y and pw[q - 1] == "u" and pw[q] == "u":
                label = up_parent_depth[pw[:q].count("u") - 1]
                break
        labels.append(label)

    # keep labels only for leaves, in traversal order (up-step order)
    it = iter(range(P.size))

    def fill(node):
        out = []
        for child in node:
            idx = next(it)
            if child == ("leaf",):
                out.append(labels[idx])
            else:
                out.append(fill(child))
        return tuple(out)

    return DecoratedTree(fill(shape))


# ---------------------------------------------------------------------------
# Composed chains
# ---------------------------------------------------------------------------

def map_to_interval(M: PlanarMap) -> SyncInterval:
    return tree_to_interval(map_to_tree(M))


def interval_to_map(interval: SyncInterval) -> PlanarMap:
    return tree_to_map(interval_to_tree(interval))


def map_to_canopy(M: PlanarMap) -> CanopyInterval:
    return sync_to_canopy(map_to_interval(M))


def canopy_to_map(ci: CanopyInterval) -> PlanarMap:
    return interval_to_map(canopy_to_sync(ci))


# ---------------------------------------------------------------------------
# The recursive bijection of the closing remark
# ---------------------------------------------------------------------------

def recursive_map_to_interval(M: PlanarMap) -> SyncInterval:
    """The recursively defined bijection: peel the first parallel brick off
    the map and translate it into a pointed interval, translate the rest
    recursively, and compose.

    A loop brick is the empty pointed interval.  A map brick is re-rooted at
    the first of its darts on the head side of the contracted root edge,
    translated recursively, and pointed at the contact numbered contacts
    minus the brick's root-side dart count.  This convention makes the
    recursion coincide with ``map_to_interval`` at every tested size; the
    coincidence is a reported test, not an assumption.
    """
    bricks = parallel_components(M)
    first = bricks[0]
    rest = bricks[1:]
    K, j = first.component, first.root_side
    if K.edge_count == 1:
        pointed = PointedSyncInterval(SyncInterval(DyckPath(""), DyckPath("")), 0)
    else:
        rot = K.vertex_darts(K.root)
        inner = recursive_map_to_interval(PlanarMap(K.sigma, rot[j]))
        pointed = PointedSyncInterval(inner, inner.lower.contacts() - j)
    if rest:
        other = recursive_map_to_interval(compose_parallel(rest))
    else:
        other = SyncInterval(DyckPath(""), DyckPath(""))
    return compose_intervals(pointed, other)


def recursive_interval_to_map(interval: SyncInterval) -> PlanarMap:
    """Inverse of :func:`recursive_map_to_interval`."""
    pointed, other = decompose_interval(interval)
    if pointed.size == 0:
        brick = ParallelBrick(single_loop_map(), 1)
    else:
        K = recursive_interval_to_map(pointed.base)
        j = pointed.base.lower.contacts() - pointed.cut
        rot = K.vertex_darts(K.root)
        brick = ParallelBrick(PlanarMap(K.sigma, rot[len(rot) - j]), j)
    if other.size == 0:
        return compose_parallel([brick])
    rest = parallel_components(recursive_interval_to_map(other))
    return compose_parallel([brick] + rest)
