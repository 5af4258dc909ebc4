r"""Decorated trees: plane trees with integer leaf labels.

A decorated tree is a rooted plane tree whose leaves carry integer labels
at least -1, subject to three conditions (the root has depth 0, and the
traversal order on leaves is the counter-clockwise order, i.e. the stored
child order):

1. a leaf attached to a node of depth p has label strictly smaller than p;
2. every internal node of depth p > 0 has a descendant leaf labeled at
   most p - 2;
3. for any node t of depth p and any subtree T' rooted at a child of t,
   a leaf of T' labeled exactly p admits no earlier leaf of T' (in
   traversal order) with a label smaller than p.

Trees are stored as nested tuples: an internal node is a nonempty tuple of
children, a leaf is its integer label, and the root is always a tuple (the
empty tuple is the empty tree, which has no decorations).  Text form:
``tree := label | "(" tree+ ")"``, e.g. ``((-1))`` and ``(-1 -1)``.
"""

from __future__ import annotations

from collections import namedtuple


Violation = namedtuple("Violation", ["condition", "address", "detail"])

Leaf = namedtuple("Leaf", ["address", "label", "parent_depth"])


def _check_structure(node, address=()):
    if isinstance(node, int):
        if node < -1:
            raise ValueError("leaf label %d below -1 at %r" % (node, address))
        return
    if not isinstance(node, tuple):
        raise ValueError("tree nodes must be tuples or integer labels, got %r" % (node,))
    if not node and address:
        raise ValueError("internal node without children at %r" % (address,))
    for k, child in enumerate(node):
        _check_structure(child, address + (k,))


class DecoratedTree:
    """A plane tree with integer leaf labels, stored as nested tuples.

    >>> T = DecoratedTree.from_text("((-1))")
    >>> T.edge_count
    2
    >>> T.is_valid()
    True
    """

    __slots__ = ("root",)

    def __init__(self, root):
        root = _freeze(root)
        if isinstance(root, int):
            raise ValueError("the root must be a tuple of children")
        _check_structure(root)
        self.root = root

    def __repr__(self):
        return "DecoratedTree(%r)" % (self.root,)

    def __eq__(self, other):
        return isinstance(other, DecoratedTree) and self.root == other.root

    def __hash__(self):
        return hash(("DecoratedTree", self.root))

    # -- shape -------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        def count(node):
            if isinstance(node, int):
                return 0
            return sum(1 + count(child) for child in node)

        return count(self.root)

    def node(self, address: tuple):
        cur = self.root
        for k in address:
            cur = cur[k]
        return cur

    def depth(self, address: tuple) -> int:
        return len(address)

    def leaves_in_traversal_order(self) -> list:
        """Leaves as (address, label, parent depth), in traversal order."""
        out = []

        def walk(node, address):
            for k, child in enumerate(node):
                if isinstance(child, int):
                    out.append(Leaf(address + (k,), child, len(address)))
                else:
                    walk(child, address + (k,))

        walk(self.root, ())
        return out

    def internal_nodes(self) -> list:
        """Addresses of internal nodes (root included), in traversal order."""
        out = []

        def walk(node, address):
            out.append(address)
            for k, child in enumerate(node):
                if not isinstance(child, int):
                    walk(child, address + (k,))

        walk(self.root, ())
        return out

    # -- decoration conditions ----------------------------------------------

    def validate(self) -> list:
        """All condition violations, empty when the tree is decorated.

        >>> DecoratedTree.from_text("((0))").validate()[0].condition
        2
        """
        violations = []
        leaves = self.leaves_in_traversal_order()

        for leaf in leaves:
            if leaf.label >= leaf.parent_depth:
                violations.append(
                    Violation(
                        1,
                        leaf.address,
                        "leaf labeled %d under a node of depth %d"
                        % (leaf.label, leaf.parent_depth),
                    )
                )

        def subtree_leaves(address):
            return [lf for lf in leaves if lf.address[: len(address)] == address]

        for address in self.internal_nodes():
            p = len(address)
            if p > 0:
                if all(lf.label > p - 2 for lf in subtree_leaves(address)):
                    violations.append(
                        Violation(
                            2,
                            address,
                            "internal node of depth %d with no descendant leaf <= %d"
                            % (p, p - 2),
                        )
                    )
            node = self.node(address)
            for k, child in enumerate(node):
                if isinstance(child, int):
                    continue
                seen_smaller = False
                for lf in subtree_leaves(address + (k,)):
                    if lf.label == p and seen_smaller:
                        violations.append(
                            Violation(
                                3,
                                lf.address,
                                "leaf labeled %d preceded in its subtree by a smaller label"
                                % (p,),
                            )
                        )
                        break
                    if lf.label < p:
                        seen_smaller = True
        return violations

    def is_valid(self) -> bool:
        return not self.validate()

    def compute_charges(self):
        """Charge of each leaf, aligned with the traversal order.

        Every internal non-root node of depth p adds one charge to its first
        descendant leaf (traversal order) labeled at most p - 2; condition 2
        guarantees that leaf exists.

        >>> DecoratedTree.from_text("((-1))").compute_charges().charges
        (1,)
        """
        violations = self.validate()
        if violations:
            raise ValueError("not a decorated tree: %s" % (violations[0],))
        leaves = self.leaves_in_traversal_order()
        charges = [0] * len(leaves)
        for address in self.internal_nodes():
            p = len(address)
            if p == 0:
                continue
            for idx, lf in enumerate(leaves):
                if lf.address[:p] == address and lf.label <= p - 2:
                    charges[idx] += 1
                    break
            else:
                raise AssertionError("condition 2 should have provided a leaf")
        return ChargeAssignment(tuple(charges), len(self.internal_nodes()) - 1)

    # -- text form -----------------------------------------------------------

    def to_text(self) -> str:
        def render(node):
            if isinstance(node, int):
                return str(node)
            return "(" + " ".join(render(child) for child in node) + ")"

        return render(self.root)

    @staticmethod
    def from_text(text: str) -> "DecoratedTree":
        tokens = text.replace("(", " ( ").replace(")", " ) ").split()
        pos = 0

        def parse():
            nonlocal pos
            if pos >= len(tokens):
                raise ValueError("unexpected end of tree text")
            tok = tokens[pos]
            pos += 1
            if tok == "(":
                children = []
                while pos < len(tokens) and tokens[pos] != ")":
                    children.append(parse())
                if pos >= len(tokens):
                    raise ValueError("unbalanced '(' in tree text")
                pos += 1
                return tuple(children)
            if tok == ")":
                raise ValueError("unexpected ')' in tree text")
            try:
                label = int(tok)
            except ValueError:
                raise ValueError("bad token %r in tree text" % (tok,)) from None
            return label

        root = parse()
        if pos != len(tokens):
            raise ValueError("trailing tokens in tree text")
        if isinstance(root, int):
            raise ValueError("the outermost node must be parenthesized")
        return DecoratedTree(root)


def _freeze(node):
    if isinstance(node, int):
        return node
    return tuple(_freeze(child) for child in node)


class ChargeAssignment:
    """Per-leaf charges in traversal order; their total is the number of
    internal non-root nodes."""

    __slots__ = ("charges", "total")

    def __init__(self, charges: tuple, expected_total: int):
        self.charges = tuple(charges)
        self.total = sum(self.charges)
        if self.total != expected_total:
            raise ValueError(
                "total charge %d differs from internal non-root count %d"
                % (self.total, expected_total)
            )

    def __repr__(self):
        return "ChargeAssignment(%r)" % (self.charges,)

    def __eq__(self, other):
        return isinstance(other, ChargeAssignment) and self.charges == other.charges

    def __hash__(self):
        return hash(self.charges)


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------

def enumerate_plane_shapes(n: int) -> list:
    """All plane trees with ``n`` edges, as nested tuples with ``None`` at
    the leaves, in a deterministic order."""
    if n < 0:
        raise ValueError("edge count must be nonnegative")

    cache = {}

    def shapes_with(e):
        # all node shapes with e edges below; a child of size s costs 1 + s
        if e in cache:
            return cache[e]
        out = []

        def split(remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for child_edges in range(remaining):
                for child in ([None] if child_edges == 0 else shapes_with(child_edges)):
                    acc.append(child)
                    split(remaining - 1 - child_edges, acc)
                    acc.pop()

        split(e, [])
        cache[e] = out
        return out

    if n == 0:
        return [()]
    return list(shapes_with(n))


def enumerate_decorated_trees(n: int) -> list:
    """All decorated trees with ``n`` edges, sorted by text encoding.

    Labels are generated leaf by leaf in traversal order; condition 1 caps
    each label by the parent depth and condition 3 is pruned incrementally
    (it only constrains a leaf against earlier leaves).  Condition 2 is
    checked at the end via the full validator.

    >>> len(enumerate_decorated_trees(2))
    2
    """
    if n < 1:
        raise ValueError("decorated trees need at least one edge")
    out = []
    for shape in enumerate_plane_shapes(n):
        skeleton = DecoratedTree(_shape_with_labels(shape, None))
        leaves = skeleton.leaves_in_traversal_order()
        addresses = [lf.address for lf in leaves]
        depths = [lf.parent_depth for lf in leaves]

        def assign(idx, labels):
            if idx == len(leaves):
                tree = DecoratedTree(_shape_with_labels(shape, labels))
                if tree.is_valid():
                    out.append(tree)
                return
            for label in range(-1, depths[idx]):
                labels.append(label)
                if _condition3_prefix_ok(addresses, labels):
                    assign(idx + 1, labels)
                labels.pop()

        assign(0, [])
    return sorted(out, key=lambda t: t.to_text())


def _condition3_prefix_ok(addresses, labels):
    """Incremental condition-3 check for the freshly assigned last label."""
    idx = len(labels) - 1
    addr, label = addresses[idx], labels[idx]
    if label < 0:
        return True
    # the label names the depth of an ancestor t; the subtree T' is rooted at
    # the child of t on the way to this leaf, i.e. shares addr[: label + 1]
    prefix = addr[: label + 1]
    for j in range(idx):
        if addresses[j][: label + 1] == prefix and labels[j] < label:
            return False
    return True


def _shape_with_labels(shape, labels):
    """Fill a shape's leaves (None placeholders) with labels in traversal
    order; with ``labels=None``, fill with -1 placeholders."""
    it = iter(labels) if labels is not None else None

    def fill(node):
        if node is None:
            return -1 if it is None else next(it)
        return tuple(fill(child) for child in node)

    filled = fill(shape)
    if it is not None:
        rest = list(it)
        if rest:
            raise ValueError("too many labels for the shape")
    return filled
