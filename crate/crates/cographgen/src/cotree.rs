//! Arena-backed rooted trees whose leaves stand for graph vertices.
//!
//! Every internal node has at least two children and carries its leaf count
//! as a label. Child lists are ordered; all trees produced by this crate
//! keep each child list sorted under [`compare_nodes`], which makes the
//! serialized text form canonical: two trees are isomorphic exactly when
//! they serialize to the same string.
//!
//! The text form is a bracket expression over the grammar
//! `tree := "1" | "(" tree (" " tree)+ ")"` with single spaces and no other
//! whitespace, e.g. `((1 1) (1 (1 1)))`.
//!
//! Nodes live in an arena indexed by [`NodeId`] with an explicit free list,
//! so subtree deletion and cloning cost one arena slot operation per node
//! and never invalidate identifiers of untouched nodes.

use std::cmp::Ordering;

use thiserror::Error;

use crate::partition::Partition;

/// Index of a node in its tree's arena.
///
/// Identifiers are only meaningful for the tree that produced them and may
/// be recycled after a deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(u32);

impl NodeId {
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
struct Node {
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    /// Number of leaves in this node's subtree. A node is a leaf exactly
    /// when its child list is empty, in which case the label is 1.
    leaf_count: usize,
}

/// Parse failure for the canonical text form, with a byte offset.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// Input ended inside an unfinished tree (or was empty).
    #[error("unexpected end of input")]
    UnexpectedEnd,
    /// A character that fits no grammar rule at this point.
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar {
        /// Byte offset of the offending character.
        at: usize,
        /// The character found there.
        found: char,
    },
    /// A `)` closed a node with fewer than two children.
    #[error("internal node with fewer than two children at byte {at}")]
    SingleChild {
        /// Byte offset of the closing parenthesis.
        at: usize,
    },
    /// Input continued after a complete tree.
    #[error("trailing input at byte {at}")]
    TrailingInput {
        /// Byte offset where the extra input starts.
        at: usize,
    },
}

/// A complete tree failed structural validation.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("internal node with a single child")]
pub struct InvalidTree;

/// A rooted tree with labeled nodes stored in an arena.
#[derive(Debug, Clone)]
pub struct Cotree {
    nodes: Vec<Node>,
    free: Vec<NodeId>,
    root: NodeId,
    leaves: usize,
}

impl Cotree {
    /// The one-leaf tree. It is the only member of its size class and
    /// stands for the one-vertex graph.
    pub fn trivial() -> Cotree {
        Cotree {
            nodes: vec![Node {
                parent: None,
                children: Vec::new(),
                leaf_count: 1,
            }],
            free: Vec::new(),
            root: NodeId(0),
            leaves: 1,
        }
    }

    /// The least tree on `n` leaves: a root with `n` leaf children.
    ///
    /// # Panics
    ///
    /// Panics if `n < 2`.
    pub fn minimum(n: usize) -> Cotree {
        assert!(n >= 2, "the minimum tree needs at least two leaves");
        let mut tree = Cotree {
            nodes: Vec::with_capacity(n + 1),
            free: Vec::new(),
            root: NodeId(0),
            leaves: n,
        };
        tree.nodes.push(Node {
            parent: None,
            children: Vec::with_capacity(n),
            leaf_count: n,
        });
        for _ in 0..n {
            tree.new_child(tree.root, 1);
        }
        tree
    }

    /// Root node identifier.
    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Total number of leaves, i.e. the number of graph vertices the tree
    /// stands for.
    pub fn leaves(&self) -> usize {
        self.leaves
    }

    /// Number of live nodes. Trees on `n >= 2` leaves have at most `2n - 1`.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - self.free.len()
    }

    /// The node's parent, `None` for the root.
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v.index()].parent
    }

    /// The node's ordered child list, empty for leaves.
    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v.index()].children
    }

    /// True when the node has no children.
    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.nodes[v.index()].children.is_empty()
    }

    /// Number of leaves in the node's subtree.
    pub fn leaf_count(&self, v: NodeId) -> usize {
        self.nodes[v.index()].leaf_count
    }

    /// The partition of `leaf_count(v)` read off the children's labels.
    ///
    /// # Panics
    ///
    /// Panics on leaves, and on unordered trees whose child labels are not
    /// non-decreasing.
    pub fn induced_partition(&self, v: NodeId) -> Partition {
        assert!(!self.is_leaf(v), "leaves induce no partition");
        let parts = self.children(v)
            .iter()
            .map(|&c| self.leaf_count(c))
            .collect();
        Partition::new(parts).expect("child labels of an ordered tree form a partition")
    }

    /// Serializes to the canonical bracket text, e.g. `(1 (1 1))`.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(4 * self.leaves);
        self.serialize_into(&mut out);
        out
    }

    /// Appends the canonical bracket text to `out` without clearing it.
    pub fn serialize_into(&self, out: &mut String) {
        // Explicit stack of (node, next child index); safe for trees of any
        // depth, including adversarial parsed input.
        let mut stack = vec![(self.root, 0usize)];
        while let Some((v, ci)) = stack.pop() {
            let node = &self.nodes[v.index()];
            if node.children.is_empty() {
                out.push('1');
                continue;
            }
            if ci == 0 {
                out.push('(');
            }
            if ci < node.children.len() {
                if ci > 0 {
                    out.push(' ');
                }
                stack.push((v, ci + 1));
                stack.push((node.children[ci], 0));
            } else {
                out.push(')');
            }
        }
    }

    /// Parses the bracket text form. Labels are computed while parsing, so
    /// the result is fully labeled. Child order is taken as written; input
    /// produced by [`Cotree::serialize`] round-trips byte-identically.
    pub fn parse(text: &str) -> Result<Cotree, ParseError> {
        let bytes = text.as_bytes();
        let mut tree = Cotree {
            nodes: Vec::new(),
            free: Vec::new(),
            root: NodeId(0),
            leaves: 0,
        };
        // Open internal nodes, innermost last.
        let mut open: Vec<NodeId> = Vec::new();
        let mut root: Option<NodeId> = None;
        let mut expect_node = true;
        for (at, &b) in bytes.iter().enumerate() {
            // A set root with no open node means the tree is complete, so
            // any further byte is trailing input.
            if root.is_some() && open.is_empty() {
                return Err(ParseError::TrailingInput { at });
            }
            if expect_node {
                match b {
                    b'1' | b'(' => {
                        let parent = open.last().copied();
                        let id = tree.alloc(parent, 1);
                        match parent {
                            Some(p) => tree.nodes[p.index()].children.push(id),
                            None => root = Some(id),
                        }
                        if b == b'(' {
                            open.push(id);
                        } else {
                            expect_node = false;
                        }
                    }
                    _ => return Err(unexpected(text, at)),
                }
            } else {
                match b {
                    b' ' => expect_node = true,
                    b')' => {
                        let v = open
                            .pop()
                            .expect("an open node exists while the tree is incomplete");
                        if tree.nodes[v.index()].children.len() < 2 {
                            return Err(ParseError::SingleChild { at });
                        }
                        let label = tree.nodes[v.index()]
                            .children
                            .iter()
                            .map(|c| tree.nodes[c.index()].leaf_count)
                            .sum();
                        tree.nodes[v.index()].leaf_count = label;
                    }
                    _ => return Err(unexpected(text, at)),
                }
            }
        }
        if expect_node || !open.is_empty() {
            return Err(ParseError::UnexpectedEnd);
        }
        let root = root.expect("a completed parse has a root");
        tree.root = root;
        tree.leaves = tree.nodes[root.index()].leaf_count;
        Ok(tree)
    }

    /// Recomputes every label bottom-up and refreshes the leaf total.
    ///
    /// Fails when some internal node has a single child, which no partition
    /// can describe.
    pub fn relabel(&mut self) -> Result<(), InvalidTree> {
        let mut stack = vec![(self.root, 0usize)];
        while let Some((v, ci)) = stack.pop() {
            let node = &self.nodes[v.index()];
            if node.children.is_empty() {
                self.nodes[v.index()].leaf_count = 1;
                continue;
            }
            if node.children.len() < 2 {
                return Err(InvalidTree);
            }
            if ci < node.children.len() {
                let c = node.children[ci];
                stack.push((v, ci + 1));
                stack.push((c, 0));
            } else {
                let label = node
                    .children
                    .iter()
                    .map(|c| self.nodes[c.index()].leaf_count)
                    .sum();
                self.nodes[v.index()].leaf_count = label;
            }
        }
        self.leaves = self.nodes[self.root.index()].leaf_count;
        Ok(())
    }

    /// True when every child list is sorted under [`compare_nodes`].
    ///
    /// All trees built by this crate's constructors and successor steps are
    /// ordered; parsed input need not be.
    pub fn is_ordered(&self) -> bool {
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            let children = &self.nodes[v.index()].children;
            for pair in children.windows(2) {
                if compare_nodes(self, pair[0], self, pair[1]) == NodeOrdering::Greater {
                    return false;
                }
            }
            stack.extend_from_slice(children);
        }
        true
    }

    /// Takes a slot off the free list or grows the arena. The caller links
    /// the node into a child list (or makes it the root).
    pub(crate) fn alloc(&mut self, parent: Option<NodeId>, leaf_count: usize) -> NodeId {
        match self.free.pop() {
            Some(id) => {
                let node = &mut self.nodes[id.index()];
                node.parent = parent;
                node.children.clear();
                node.leaf_count = leaf_count;
                id
            }
            None => {
                let id = NodeId(self.nodes.len() as u32);
                self.nodes.push(Node {
                    parent,
                    children: Vec::new(),
                    leaf_count,
                });
                id
            }
        }
    }

    /// Allocates a node labeled `leaf_count` and appends it to `parent`'s
    /// child list.
    pub(crate) fn new_child(&mut self, parent: NodeId, leaf_count: usize) -> NodeId {
        let id = self.alloc(Some(parent), leaf_count);
        self.nodes[parent.index()].children.push(id);
        id
    }

    /// Recycles all of `v`'s child subtrees and empties its child list.
    /// Returns the number of nodes freed.
    pub(crate) fn clear_children(&mut self, v: NodeId) -> u64 {
        let mut children = std::mem::take(&mut self.nodes[v.index()].children);
        let mut freed = 0;
        for &c in &children {
            freed += self.free_subtree(c);
        }
        children.clear();
        // Hand the emptied list back so the slot keeps its capacity.
        self.nodes[v.index()].children = children;
        freed
    }

    fn free_subtree(&mut self, v: NodeId) -> u64 {
        let mut children = std::mem::take(&mut self.nodes[v.index()].children);
        let mut freed = 1;
        for &c in &children {
            freed += self.free_subtree(c);
        }
        children.clear();
        self.nodes[v.index()].children = children;
        self.free.push(v);
        freed
    }

    /// Appends a structural copy of this tree's subtree at `src` as the last
    /// child of `parent`. `src` must not lie inside `parent`'s subtree.
    /// Returns the copy's root and the number of nodes created.
    pub(crate) fn append_clone(&mut self, parent: NodeId, src: NodeId) -> (NodeId, u64) {
        let copy = self.new_child(parent, self.nodes[src.index()].leaf_count);
        let mut created = 1;
        let mut i = 0;
        while let Some(&c) = self.nodes[src.index()].children.get(i) {
            created += self.append_clone(copy, c).1;
            i += 1;
        }
        (copy, created)
    }

    /// Appends a copy of `src`'s subtree at `v` (from another tree) as the
    /// last child of `parent` in this tree.
    pub(crate) fn append_copy_from(&mut self, parent: NodeId, src: &Cotree, v: NodeId) -> NodeId {
        let copy = self.new_child(parent, src.leaf_count(v));
        for &c in src.children(v) {
            self.append_copy_from(copy, src, c);
        }
        copy
    }

    /// Builds a tree whose root's children are copies of the given trees,
    /// in the given order.
    pub(crate) fn from_children(children: &[&Cotree]) -> Cotree {
        assert!(children.len() >= 2, "a root needs at least two children");
        let total = children.iter().map(|t| t.leaves()).sum();
        let mut tree = Cotree {
            nodes: vec![Node {
                parent: None,
                children: Vec::with_capacity(children.len()),
                leaf_count: total,
            }],
            free: Vec::new(),
            root: NodeId(0),
            leaves: total,
        };
        for sub in children {
            tree.append_copy_from(tree.root, sub, sub.root());
        }
        tree
    }
}

fn unexpected(text: &str, at: usize) -> ParseError {
    let found = text[at..].chars().next().unwrap_or('\u{FFFD}');
    ParseError::UnexpectedChar { at, found }
}

/// Outcome of the recursive node comparison.
///
/// `Equivalent` means the two subtrees are isomorphic, not that they are the
/// same node; distinct equivalent siblings are common.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeOrdering {
    /// The first subtree comes earlier in the enumeration order.
    Less,
    /// The subtrees are isomorphic.
    Equivalent,
    /// The first subtree comes later in the enumeration order.
    Greater,
}

impl NodeOrdering {
    /// The same relation as a standard ordering, mapping `Equivalent` to
    /// `Equal`.
    pub fn as_ordering(self) -> Ordering {
        match self {
            NodeOrdering::Less => Ordering::Less,
            NodeOrdering::Equivalent => Ordering::Equal,
            NodeOrdering::Greater => Ordering::Greater,
        }
    }
}

/// Compares two nodes of (possibly distinct) ordered trees.
///
/// Nodes are ranked first by leaf count, then by the lexicographic order of
/// their induced partitions, then by their ordered children pairwise. Leaves
/// compare as equivalent.
pub fn compare_nodes(ta: &Cotree, a: NodeId, tb: &Cotree, b: NodeId) -> NodeOrdering {
    let la = ta.leaf_count(a);
    let lb = tb.leaf_count(b);
    if la != lb {
        return if la < lb {
            NodeOrdering::Less
        } else {
            NodeOrdering::Greater
        };
    }
    if la == 1 {
        return NodeOrdering::Equivalent;
    }
    let pa = ta.children(a).iter().map(|&c| ta.leaf_count(c));
    let pb = tb.children(b).iter().map(|&c| tb.leaf_count(c));
    match pa.cmp(pb) {
        Ordering::Less => return NodeOrdering::Less,
        Ordering::Greater => return NodeOrdering::Greater,
        Ordering::Equal => {}
    }
    // Equal partitions imply equally many children.
    for (&ca, &cb) in ta.children(a).iter().zip(tb.children(b)) {
        match compare_nodes(ta, ca, tb, cb) {
            NodeOrdering::Equivalent => continue,
            decided => return decided,
        }
    }
    NodeOrdering::Equivalent
}

/// Compares two whole trees of the same size by their roots.
///
/// # Panics
///
/// Panics when the leaf totals differ; the tree order is only defined
/// within one size class.
pub fn compare_trees(a: &Cotree, b: &Cotree) -> NodeOrdering {
    assert_eq!(
        a.leaves(),
        b.leaves(),
        "comparing trees over different leaf counts"
    );
    compare_nodes(a, a.root(), b, b.root())
}
