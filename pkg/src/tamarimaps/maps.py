r"""Rooted planar maps as rotation systems.

A map on 2m darts is a pair (sigma, twin) of permutations: ``twin`` pairs
the two darts of each edge and is hard-wired as d <-> d^1 (darts 2i and
2i+1 form edge i), while ``sigma`` sends each dart to the next dart in
CLOCKWISE order around its vertex.  A distinguished root dart orients the
root edge from the root vertex towards its head.

Faces are the orbits of phi = sigma o twin; the orbit of a dart d is the
face on the left of d, so the outer face is the phi-orbit of the root dart.
Planarity is the Euler relation V - E + F = 2 (genus 0 only); it is checked
at construction, as is connectivity (sigma and twin must act transitively).
"""

from __future__ import annotations

from collections import namedtuple
from itertools import permutations


MapStats = namedtuple("MapStats", ["outer_face_degree", "root_vertex_degree", "edge_count"])


class PlanarMap:
    """A rooted planar map.

    >>> M = double_edge_map()
    >>> M.edge_count, M.vertex_count, M.face_count
    (2, 2, 2)
    >>> M.is_non_separable()
    True
    """

    __slots__ = ("sigma", "root", "_vlabel", "_nv", "_flabel", "_nf")

    def __init__(self, sigma, root: int = 0):
        sigma = tuple(sigma)
        n = len(sigma)
        if n < 2 or n % 2:
            raise ValueError("a map needs a positive even number of darts")
        if sorted(sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation of the darts")
        if not 0 <= root < n:
            raise ValueError("root dart %d out of range" % (root,))
        self.sigma = sigma
        self.root = root
        self._vlabel, self._nv = _orbit_labels(sigma)
        phi = tuple(sigma[d ^ 1] for d in range(n))
        self._flabel, self._nf = _orbit_labels(phi)
        # connectivity: sigma and twin together must reach every dart
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            d = stack.pop()
            for e in (sigma[d], d ^ 1):
                if not seen[e]:
                    seen[e] = True
                    count += 1
                    stack.append(e)
        if count != n:
            raise ValueError("rotation system is not connected")
        if self._nv - n // 2 + self._nf != 2:
            raise ValueError("Euler relation fails: the map is not planar")

    # -- basics --------------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def vertex_count(self) -> int:
        return self._nv

    @property
    def face_count(self) -> int:
        return self._nf

    def twin(self, d: int) -> int:
        return d ^ 1

    def phi(self, d: int) -> int:
        """Face permutation: next dart of the face on the left of ``d``."""
        return self.sigma[d ^ 1]

    def vertex_of(self, d: int) -> int:
        """Vertex id (orbit label of sigma) the dart is attached to."""
        return self._vlabel[d]

    def __repr__(self):
        return "PlanarMap(sigma=%r, root=%d)" % (list(self.sigma), self.root)

    def __eq__(self, other):
        return (
            isinstance(other, PlanarMap)
            and self.sigma == other.sigma
            and self.root == other.root
        )

    def __hash__(self):
        return hash((self.sigma, self.root))

    # -- vertices and faces ----------------------------------------------------

    def vertex_darts(self, d: int) -> list:
        """The sigma-cycle through ``d``, starting at ``d`` (clockwise)."""
        out = [d]
        e = self.sigma[d]
        while e != d:
            out.append(e)
            e = self.sigma[e]
        return out

    def rotations(self) -> list:
        """One clockwise dart cycle per vertex, each starting at its least
        dart, ordered by that least dart."""
        seen = set()
        out = []
        for d in range(len(self.sigma)):
            if d not in seen:
                cyc = self.vertex_darts(d)
                seen.update(cyc)
                out.append(cyc)
        return out

    def face_of(self, d: int) -> list:
        """The phi-orbit through ``d``, starting at ``d``."""
        out = [d]
        e = self.phi(d)
        while e != d:
            out.append(e)
            e = self.phi(e)
        return out

    def faces(self) -> list:
        """All faces as dart cycles, each starting at its least dart."""
        seen = set()
        out = []
        for d in range(len(self.sigma)):
            if d not in seen:
                cyc = self.face_of(d)
                seen.update(cyc)
                out.append(cyc)
        return out

    def outer_face(self) -> list:
        """The face on the left of the root dart, starting at the root."""
        return self.face_of(self.root)

    @property
    def outer_face_degree(self) -> int:
        return len(self.outer_face())

    @property
    def root_vertex_degree(self) -> int:
        return len(self.vertex_darts(self.root))

    def stats(self) -> MapStats:
        return MapStats(self.outer_face_degree, self.root_vertex_degree, self.edge_count)

    # -- separability ----------------------------------------------------------

    def has_loop(self) -> bool:
        vl = self._vlabel
        return any(vl[2 * i] == vl[2 * i + 1] for i in range(self.edge_count))

    def _edge_list(self) -> list:
        vl = self._vlabel
        return [(i, vl[2 * i], vl[2 * i + 1]) for i in range(self.edge_count)]

    def is_non_separable(self) -> bool:
        """At least two edges, no loop, and a single biconnected block.

        A loop beside any other edge yields the forbidden edge bipartition
        meeting at one vertex, so loops are rejected outright; the rest is
        cut-vertex freeness of the underlying multigraph.
        """
        if self.edge_count < 2 or self.has_loop():
            return False
        blocks, _cuts = _multigraph_blocks(self._nv, self._edge_list())
        return len(blocks) == 1

    def separating_bipartition(self):
        """Definitional oracle: a pair of nonempty edge sets meeting at
        exactly one vertex, or None.  Exponential in the edge count."""
        edges = self._edge_list()
        m = len(edges)
        for mask in range(1, 1 << (m - 1)):
            sides = ([], [])
            for i, a, b in edges:
                sides[(mask >> i) & 1].append((i, a, b))
            if not sides[0] or not sides[1]:
                continue
            touching = [set(), set()]
            for s in (0, 1):
                for _i, a, b in sides[s]:
                    touching[s].update((a, b))
            if len(touching[0] & touching[1]) == 1:
                return (
                    frozenset(i for i, _a, _b in sides[0]),
                    frozenset(i for i, _a, _b in sides[1]),
                )
        return None

    # -- duality ----------------------------------------------------------------

    def dual(self) -> "PlanarMap":
        """The dual map: faces become vertices (sigma' = phi), same dart
        pairing, same root dart.  The root vertex of the dual is the old
        outer face and the outer face of the dual is the old root vertex;
        applying ``dual`` twice gives back the map unchanged.
        """
        return PlanarMap(tuple(self.sigma[d ^ 1] for d in range(len(self.sigma))), self.root)

    # -- canonical form ------------------------------------------------------------

    def _canonical_order(self):
        sigma = self.sigma
        n = len(sigma)
        new = [-1] * n
        new[self.root] = 0
        new[self.root ^ 1] = 1
        order = [self.root, self.root ^ 1]
        i = 0
        while i < len(order):
            e = sigma[order[i]]
            i += 1
            if new[e] < 0:
                new[e] = len(order)
                new[e ^ 1] = len(order) + 1
                order.append(e)
                order.append(e ^ 1)
        return new, order

    def canonical_code(self) -> bytes:
        """A byte string equal for two maps exactly when they are isomorphic
        as rooted maps (root-first traversal relabeling; rooted maps have no
        nontrivial automorphisms)."""
        new, order = self._canonical_order()
        return bytes(new[self.sigma[d]] for d in order)

    def canonical_form(self) -> "PlanarMap":
        """The same rooted map with darts renamed by the canonical traversal
        (root dart 0, twin pairing 2i <-> 2i+1 preserved)."""
        new, order = self._canonical_order()
        sigma = [0] * len(order)
        for d, nd in enumerate(new):
            sigma[nd] = new[self.sigma[d]]
        return PlanarMap(sigma, 0)

    def is_isomorphic_to(self, other: "PlanarMap") -> bool:
        return self.canonical_code() == other.canonical_code()

    # -- text form --------------------------------------------------------------

    def to_text(self) -> str:
        """Three-line format: dart count, root dart, sigma images (1-based;
        the twin involution is implicit as (1,2)(3,4)...)."""
        return "darts %d\nroot %d\nsigma %s\n" % (
            len(self.sigma),
            self.root + 1,
            " ".join(str(x + 1) for x in self.sigma),
        )

    @staticmethod
    def from_text(text: str) -> "PlanarMap":
        fields = {}
        for line in text.strip().splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] not in ("darts", "root", "sigma") or parts[0] in fields:
                raise ValueError("bad map line: %r" % (line,))
            fields[parts[0]] = parts[1:]
        if set(fields) != {"darts", "root", "sigma"}:
            raise ValueError("map text needs 'darts', 'root' and 'sigma' lines")
        n = int(fields["darts"][0])
        root = int(fields["root"][0]) - 1
        sigma = [int(x) - 1 for x in fields["sigma"]]
        if len(sigma) != n:
            raise ValueError("sigma has %d images, expected %d" % (len(sigma), n))
        return PlanarMap(sigma, root)

    def to_dot(self) -> str:
        """Deterministic DOT rendering: one node per sigma-orbit, one edge
        per twin pair, the root edge drawn bold and oriented."""
        lines = ["graph planar_map {"]
        for cyc in self.rotations():
            lines.append(
                '  v%d [label="v%d: %s"];'
                % (self._vlabel[cyc[0]], self._vlabel[cyc[0]], " ".join(str(d + 1) for d in cyc))
            )
        for i in range(self.edge_count):
            a, b = self._vlabel[2 * i], self._vlabel[2 * i + 1]
            attrs = ' [label="e%d"]' % i
            if 2 * i == (self.root & ~1):
                tail, head = self._vlabel[self.root], self._vlabel[self.root ^ 1]
                attrs = ' [label="e%d (root)", style=bold, dir=forward]' % i
                a, b = tail, head
            lines.append("  v%d -- v%d%s;" % (a, b, attrs))
        lines.append("}")
        return "\n".join(lines) + "\n"


def _orbit_labels(perm):
    n = len(perm)
    label = [-1] * n
    count = 0
    for d in range(n):
        if label[d] < 0:
            e = d
            while label[e] < 0:
                label[e] = count
                e = perm[e]
            count += 1
    return label, count


# ---------------------------------------------------------------------------
# Small fixed maps
# ---------------------------------------------------------------------------

def single_edge_map() -> PlanarMap:
    """Two vertices joined by one edge, rooted at dart 0 (one of the two
    excluded one-edge maps; used as a degenerate series brick)."""
    return PlanarMap((0, 1), 0)


def single_loop_map() -> PlanarMap:
    """One vertex with a loop (the other one-edge map; degenerate parallel
    brick)."""
    return PlanarMap((1, 0), 0)


def double_edge_map() -> PlanarMap:
    """Two vertices joined by two parallel edges: the unique non-separable
    map with two edges."""
    return PlanarMap((2, 3, 0, 1), 0)


# ---------------------------------------------------------------------------
# Blocks of a multigraph (no loops)
# ---------------------------------------------------------------------------

def _multigraph_blocks(nv: int, edges):
    """Biconnected blocks (as frozensets of edge ids) and cut vertices of a
    connected loopless multigraph; bridges are blocks of size one.  Standard
    lowpoint computation, tracking edge ids so parallel edges form cycles.
    """
    adjacency = [[] for _ in range(nv)]
    for eid, a, b in edges:
        if a == b:
            raise ValueError("loops are not allowed here")
        adjacency[a].append((eid, b))
        adjacency[b].append((eid, a))
    depth = [-1] * nv
    low = [0] * nv
    cuts = set()
    blocks = []
    edge_stack = []
    if nv == 0:
        return blocks, cuts

    def dfs(vertex, parent_eid, d):
        depth[vertex] = low[vertex] = d
        children = 0
        for eid, other in adjacency[vertex]:
            if eid == parent_eid:
                parent_eid = -1  # skip the tree edge once; parallels recurse
                continue
            if depth[other] < 0:
                children += 1
                edge_stack.append(eid)
                dfs(other, eid, d + 1)
                low[vertex] = min(low[vertex], low[other])
                if low[other] >= d:
                    if d > 0 or children > 1:
                        cuts.add(vertex)
                    block = set()
                    while True:
                        e = edge_stack.pop()
                        block.add(e)
                        if e == eid:
                            break
                    blocks.append(frozenset(block))
            elif depth[other] < depth[vertex]:
                edge_stack.append(eid)
                low[vertex] = min(low[vertex], depth[other])

    dfs(0, -1, 0)
    if any(d < 0 for d in depth):
        raise ValueError("multigraph is not connected")
    return blocks, cuts


# ---------------------------------------------------------------------------
# Building maps from ad-hoc rotation systems
# ---------------------------------------------------------------------------

def map_from_rotations(rotations, twin: dict, root) -> PlanarMap:
    """Build a PlanarMap from clockwise dart cycles with arbitrary hashable
    dart ids and an explicit twin involution.  Darts are renamed by the
    root-first canonical traversal, so the result is in canonical form.
    """
    sigma = {}
    for cyc in rotations:
        for k, d in enumerate(cyc):
            if d in sigma:
                raise ValueError("dart %r appears in two rotations" % (d,))
            sigma[d] = cyc[(k + 1) % len(cyc)]
    if set(twin) != set(sigma):
        raise ValueError("twin and rotations cover different dart sets")
    for d, e in twin.items():
        if d == e or twin[e] != d:
            raise ValueError("twin is not a fixed-point-free involution")
    new = {root: 0, twin[root]: 1}
    order = [root, twin[root]]
    i = 0
    while i < len(order):
        e = sigma[order[i]]
        i += 1
        if e not in new:
            new[e] = len(order)
            new[twin[e]] = len(order) + 1
            order.append(e)
            order.append(twin[e])
    if len(order) != len(sigma):
        raise ValueError("rotation system is not connected")
    out = [0] * len(order)
    for d, nd in new.items():
        out[nd] = new[sigma[d]]
    return PlanarMap(out, 0)


# ---------------------------------------------------------------------------
# Exhaustive census
# ---------------------------------------------------------------------------

def enumerate_nonseparable(m: int) -> list:
    """Brute-force census of the non-separable rooted planar maps with ``m``
    edges: the twin involution is fixed on 2m darts, every vertex rotation
    sigma is tried, connected maps satisfying the Euler relation are kept,
    and rooted isomorphs (root = dart 0) are removed by canonical code.

    Feasible to m = 5 in seconds; m = 6 (12! rotation systems) takes around
    a quarter of an hour.

    >>> len(enumerate_nonseparable(2))
    1
    """
    if m < 2:
        raise ValueError("non-separable maps need at least two edges")
    n = 2 * m
    target_vf = m + 2
    seen = set()
    kept = []
    for sigma in permutations(range(n)):
        # vertex orbits and loop rejection (a loop beside other edges is
        # always separable)
        vlabel = [-1] * n
        nv = 0
        for d in range(n):
            if vlabel[d] < 0:
                e = d
                while vlabel[e] < 0:
                    vlabel[e] = nv
                    e = sigma[e]
                nv += 1
        ok = True
        for i in range(0, n, 2):
            if vlabel[i] == vlabel[i + 1]:
                ok = False
                break
        if not ok:
            continue
        # faces, then the Euler relation
        flabel = [-1] * n
        nf = 0
        for d in range(n):
            if flabel[d] < 0:
                e = d
                while flabel[e] < 0:
                    flabel[e] = nf
                    e = sigma[e ^ 1]
                nf += 1
        if nv + nf != target_vf:
            continue
        # connectivity
        seen_d = [False] * n
        seen_d[0] = True
        stack = [0]
        cnt = 1
        while stack:
            d = stack.pop()
            e = sigma[d]
            if not seen_d[e]:
                seen_d[e] = True
                cnt += 1
                stack.append(e)
            e = d ^ 1
            if not seen_d[e]:
                seen_d[e] = True
                cnt += 1
                stack.append(e)
        if cnt != n:
            continue
        # canonical dedup (inline root-first relabeling), then the full
        # cut-vertex test on new codes only
        new = [-1] * n
        new[0] = 0
        new[1] = 1
        order = [0, 1]
        i = 0
        while i < len(order):
            e = sigma[order[i]]
            i += 1
            if new[e] < 0:
                new[e] = len(order)
                new[e ^ 1] = len(order) + 1
                order.append(e)
                order.append(e ^ 1)
        code = bytes(new[sigma[d]] for d in order)
        if code in seen:
            continue
        seen.add(code)
        M = PlanarMap(sigma, 0)
        if M.is_non_separable():
            kept.append(M.canonical_form())
    return sorted(kept, key=lambda M: M.canonical_code())


# ---------------------------------------------------------------------------
# Series decomposition (delete the root edge)
# ---------------------------------------------------------------------------

SeriesBrick = namedtuple("SeriesBrick", ["component", "exposed"])


def series_components(M: PlanarMap) -> list:
    """Decompose a non-separable map by deleting its root edge.

    The remainder is a chain of blocks (non-separable maps and single edges)
    linked by cut vertices between the two endpoints of the root.  Each
    block is returned as a standalone rooted map together with the number of
    its darts exposed on the outer face of ``M`` (its contribution to the
    outer face degree).  Blocks are listed in the order the outer face walk
    of ``M`` meets them, starting from the head of the root; each block's
    root is its first exposed dart, so the block's root vertex is the
    linking vertex nearer the root's head.
    """
    if not M.is_non_separable():
        raise ValueError("series decomposition needs a non-separable map")
    r = M.root
    rt = r ^ 1
    outer = M.face_of(r)

    # rotation system of the remainder
    rot = {}
    for cyc in M.rotations():
        cyc = [d for d in cyc if d not in (r, rt)]
        if cyc:
            rot[M.vertex_of(cyc[0])] = cyc
    vl = M._vlabel
    edges = [(i, vl[2 * i], vl[2 * i + 1]) for i in range(M.edge_count) if 2 * i != (r & ~1)]
    blocks, _cuts = _multigraph_blocks(M.vertex_count, edges)
    block_of_edge = {}
    for bi, block in enumerate(blocks):
        for eid in block:
            block_of_edge[eid] = bi

    # group the outer walk (minus the root dart) into one run per block
    runs = []
    for d in outer[1:]:
        bi = block_of_edge[d >> 1]
        if runs and runs[-1][0] == bi:
            runs[-1][1].append(d)
        else:
            runs.append((bi, [d]))
    if sorted(bi for bi, _ in runs) != sorted(range(len(blocks))):
        raise AssertionError("outer walk does not expose each block exactly once")

    bricks = []
    for bi, exposed_darts in runs:
        block_darts = set()
        for eid in blocks[bi]:
            block_darts.add(2 * eid)
            block_darts.add(2 * eid + 1)
        rotations = []
        for cyc in rot.values():
            sub = [d for d in cyc if d in block_darts]
            if sub:
                rotations.append(sub)
        twin = {d: d ^ 1 for d in block_darts}
        component = map_from_rotations(rotations, twin, exposed_darts[0])
        bricks.append(SeriesBrick(component, len(exposed_darts)))
    return bricks


def compose_series(bricks) -> PlanarMap:
    """Inverse of :func:`series_components`: chain the bricks at their
    linking vertices and close the chain with a new root edge.

    Each brick is a rooted map (a single edge or a non-separable map) plus
    the number of outer-walk darts it exposes, between 1 and its outer
    degree minus one; the exposed walk ends at the linking vertex shared
    with the next brick.
    """
    bricks = [SeriesBrick(b[0], b[1]) for b in bricks]
    if not bricks:
        raise ValueError("a series decomposition has at least one brick")
    for K, j in bricks:
        if K.edge_count == 1:
            if K.has_loop():
                raise ValueError("a series brick cannot be a loop")
            if j != 1:
                raise ValueError("a single-edge brick exposes exactly one dart")
        elif not K.is_non_separable():
            raise ValueError("series bricks must be single edges or non-separable")
        elif not 1 <= j <= K.outer_face_degree - 1:
            raise ValueError(
                "exposed count %d out of range 1..%d" % (j, K.outer_face_degree - 1)
            )

    rotations = {}  # (brick index, vertex id) -> clockwise dart list
    tags = {}
    for i, (K, _j) in enumerate(bricks):
        for cyc in K.rotations():
            rotations[(i, K.vertex_of(cyc[0]))] = [(i, d) for d in cyc]
        for d in range(K.dart_count):
            tags[(i, d)] = (i, d ^ 1)

    def rotate_to(lst, first):
        k = lst.index(first)
        return lst[k:] + lst[:k]

    # walk data per brick: the dart closing its exposed arc and the vertices
    enter_vertex = []  # root vertex of the brick (walk enters here)
    exit_dart = []  # twin of the last exposed dart (at the far link vertex)
    exit_vertex = []
    for i, (K, j) in enumerate(bricks):
        walk = K.face_of(K.root)
        last = walk[j - 1]
        enter_vertex.append((i, K.vertex_of(K.root)))
        exit_dart.append((i, last ^ 1))
        exit_vertex.append((i, K.vertex_of(last ^ 1)))

    # glue brick i+1's root vertex onto brick i's exit vertex
    merged = {key: list(cyc) for key, cyc in rotations.items()}
    alias = {}

    def resolve(key):
        while key in alias:
            key = alias[key]
        return key

    for i in range(len(bricks) - 1):
        host = resolve(exit_vertex[i])
        guest = resolve(enter_vertex[i + 1])
        host_cyc = rotate_to(merged[host], exit_dart[i])
        guest_cyc = rotate_to(merged[guest], (i + 1, bricks[i + 1].component.root))
        merged[host] = [host_cyc[0]] + guest_cyc + host_cyc[1:]
        del merged[guest]
        alias[guest] = host

    # close with the root edge: R at the final exit vertex, R' at the first
    # brick's root vertex
    R, Rt = ("root", 0), ("root", 1)
    tags[R], tags[Rt] = Rt, R
    u_key = resolve(enter_vertex[0])
    u_cyc = rotate_to(merged[u_key], (0, bricks[0].component.root))
    merged[u_key] = [Rt] + u_cyc
    v_key = resolve(exit_vertex[-1])
    v_cyc = rotate_to(merged[v_key], exit_dart[-1])
    merged[v_key] = [v_cyc[0], R] + v_cyc[1:]
    return map_from_rotations(list(merged.values()), tags, R)


# ---------------------------------------------------------------------------
# Parallel decomposition (contract the root edge)
# ---------------------------------------------------------------------------

ParallelBrick = namedtuple("ParallelBrick", ["component", "root_side"])


def parallel_components(M: PlanarMap) -> list:
    """Decompose a non-separable map by contracting its root edge.

    The merged endpoint is the only possible cut vertex; splitting there
    yields an ordered list of components (non-separable maps and loops) in
    parallel.  Each component is returned as a standalone rooted map whose
    root vertex is its copy of the merged endpoint, together with the number
    of its darts that came from the root vertex of ``M`` (its contribution
    to the root vertex degree).  Components are ordered clockwise after the
    root dart.
    """
    if not M.is_non_separable():
        raise ValueError("parallel decomposition needs a non-separable map")
    r = M.root
    rt = r ^ 1
    side_a = M.vertex_darts(r)[1:]  # clockwise after the root dart
    side_b = M.vertex_darts(rt)[1:]
    merged_rot = side_a + side_b
    at_w = set(merged_rot)

    # components of the contracted map: loops at the merged vertex are their
    # own components; the rest are blocks of the loopless contracted graph
    comp_of_edge = {}
    loop_eids = []
    other_edges = []
    vl = M._vlabel
    wv = M.vertex_count  # id for the merged vertex
    for i in range(M.edge_count):
        if 2 * i == (r & ~1):
            continue
        a = wv if 2 * i in at_w else vl[2 * i]
        b = wv if 2 * i + 1 in at_w else vl[2 * i + 1]
        if a == b:
            loop_eids.append(i)
        else:
            other_edges.append((i, a, b))
    # compact vertex ids for the block finder
    used = sorted({x for _e, a, b in other_edges for x in (a, b)})
    compact = {x: k for k, x in enumerate(used)}
    if other_edges:
        blocks, _cuts = _multigraph_blocks(
            len(used), [(e, compact[a], compact[b]) for e, a, b in other_edges]
        )
    else:
        blocks = []
    components = [frozenset([e]) for e in loop_eids] + list(blocks)
    for ci, comp in enumerate(components):
        for eid in comp:
            comp_of_edge[eid] = ci

    # runs of component darts along the merged rotation
    def runs_of(lst):
        runs = []
        for d in lst:
            ci = comp_of_edge[d >> 1]
            if runs and runs[-1][0] == ci:
                runs[-1][1].append(d)
            else:
                runs.append((ci, [d]))
        return runs

    runs_a, runs_b = runs_of(side_a), runs_of(side_b)
    if len(runs_a) != len(components) or len(runs_b) != len(components):
        raise AssertionError("components do not form single arcs on both sides")
    if [ci for ci, _ in runs_b] != [ci for ci, _ in reversed(runs_a)]:
        raise AssertionError("parallel components are not properly nested")

    arcs_b = {ci: darts for ci, darts in runs_b}
    bricks = []
    for ci, arc_a in runs_a:
        comp_darts = set()
        for eid in components[ci]:
            comp_darts.add(2 * eid)
            comp_darts.add(2 * eid + 1)
        rotations = [arc_a + arcs_b[ci]]
        for cyc in M.rotations():
            if M.vertex_of(cyc[0]) in (vl[r], vl[rt]):
                continue
            sub = [d for d in cyc if d in comp_darts]
            if sub:
                rotations.append(sub)
        twin = {d: d ^ 1 for d in comp_darts}
        component = map_from_rotations(rotations, twin, arc_a[0])
        bricks.append(ParallelBrick(component, len(arc_a)))
    return bricks


def compose_parallel(bricks) -> PlanarMap:
    """Inverse of :func:`parallel_components`: split each brick's root
    vertex after ``root_side`` darts, stack the first parts clockwise after
    a new root dart and the second parts counter-clockwise after its twin.
    """
    bricks = [ParallelBrick(b[0], b[1]) for b in bricks]
    if not bricks:
        raise ValueError("a parallel decomposition has at least one brick")
    for K, j in bricks:
        if K.edge_count == 1:
            if not K.has_loop():
                raise ValueError("a parallel brick cannot be a plain edge")
            if j != 1:
                raise ValueError("a loop brick keeps exactly one dart at the root")
        elif not K.is_non_separable():
            raise ValueError("parallel bricks must be loops or non-separable")
        elif not 1 <= j <= K.root_vertex_degree - 1:
            raise ValueError(
                "root-side count %d out of range 1..%d" % (j, K.root_vertex_degree - 1)
            )
    rotations = []
    tags = {}
    side_a = []
    side_b = []
    for i, (K, j) in enumerate(bricks):
        root_cyc = [(i, d) for d in K.vertex_darts(K.root)]
        side_a.extend(root_cyc[:j])
        side_b[:0] = root_cyc[j:]
        for cyc in K.rotations():
            if K.vertex_of(cyc[0]) == K.vertex_of(K.root):
                continue
            rotations.append([(i, d) for d in cyc])
        for d in range(K.dart_count):
            tags[(i, d)] = (i, d ^ 1)
    R, Rt = ("root", 0), ("root", 1)
    tags[R], tags[Rt] = Rt, R
    rotations.append([R] + side_a)
    rotations.append([Rt] + side_b)
    return map_from_rotations(rotations, tags, R)


# ---------------------------------------------------------------------------
# Census by composition (scales past the brute force)
# ---------------------------------------------------------------------------

def enumerate_nonseparable_by_composition(m: int) -> list:
    """The non-separable census with ``m`` edges generated through the
    series decomposition: every such map is, uniquely, a root edge closing a
    chain of bricks (single edges and pointed smaller non-separable maps)
    whose edges sum to m - 1.  Complete and duplicate-free by the series
    decomposition bijection; cross-checked against the brute force in the
    test suite.
    """
    if m < 2:
        raise ValueError("non-separable maps need at least two edges")
    cache = {}

    def census(k):
        if k not in cache:
            cache[k] = _compose_census(k, census)
        return cache[k]

    return census(m)


def _compose_census(m, census):
    brick_choices = [(single_edge_map(), 1, 1)]
    for e in range(2, m):
        for K in census(e):
            for j in range(1, K.outer_face_degree):
                brick_choices.append((K, j, e))

    out = {}

    def extend(budget, acc):
        if budget == 0:
            M = compose_series(acc)
            code = M.canonical_code()
            if code in out:
                raise AssertionError("series composition produced a duplicate")
            out[code] = M
            return
        for K, j, cost in brick_choices:
            if cost <= budget:
                acc.append(SeriesBrick(K, j))
                extend(budget - cost, acc)
                acc.pop()

    extend(m - 1, [])
    return [out[c] for c in sorted(out)]
