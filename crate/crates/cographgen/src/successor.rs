//! The successor step of the tree enumeration.
//!
//! Trees on `n` leaves are totally ordered by [`compare_trees`]; this module
//! advances a tree to its immediate successor in place. The step finds the
//! pivot (the first non-exhausted node in inverted post-order), bumps the
//! pivot's induced partition, and resets everything that ranks behind the
//! pivot to its least configuration. Work per step is linear in `n`.
//!
//! [`compare_trees`]: crate::cotree::compare_trees

use crate::cotree::{Cotree, NodeId};
use crate::partition::Partition;

/// Arena operations performed by one successor step.
///
/// Visits are nodes inspected by the pivot search; created and deleted count
/// arena slot writes. Their sum tracks the step's running time up to a
/// constant and stays within a small multiple of the leaf count.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct StepWork {
    /// Nodes inspected while searching for the pivot.
    pub visited: u64,
    /// Nodes allocated by rebuilds and subtree copies.
    pub created: u64,
    /// Nodes recycled by rebuilds and subtree copies.
    pub deleted: u64,
}

impl StepWork {
    /// Total operations counted across all three kinds.
    pub fn total(&self) -> u64 {
        self.visited + self.created + self.deleted
    }
}

/// A located pivot: the deepest-rightmost non-exhausted node.
#[derive(Debug, Clone)]
pub struct Pivot {
    /// The pivot node itself.
    pub node: NodeId,
    /// Nodes from the pivot up to and including the root.
    pub path_to_root: Vec<NodeId>,
}

/// True when the node's subtree admits no further successor steps below or
/// at it, checked in constant time.
///
/// A node is exhausted when it is a leaf or when its induced partition is
/// the balanced two-part maximum, which shows up as exactly two children
/// whose first carries half the label rounded down. The subtree of an
/// exhausted node visited by the pivot search is maximal as a whole, so the
/// check never needs to descend.
pub fn is_exhausted(t: &Cotree, v: NodeId) -> bool {
    let children = t.children(v);
    match children.len() {
        0 => true,
        2 => t.leaf_count(children[0]) == t.leaf_count(v) / 2,
        _ => false,
    }
}

/// Finds the pivot: the first non-exhausted node in inverted post-order
/// (siblings right to left, every subtree before its root). Returns `None`
/// exactly when the tree is the maximum of its size class.
pub fn find_pivot(t: &Cotree) -> Option<Pivot> {
    find_pivot_instrumented(t, &mut StepWork::default())
}

/// [`find_pivot`] with visit counting.
pub fn find_pivot_instrumented(t: &Cotree, work: &mut StepWork) -> Option<Pivot> {
    let node = search(t, t.root(), work)?;
    let mut path_to_root = Vec::new();
    let mut v = Some(node);
    while let Some(x) = v {
        path_to_root.push(x);
        v = t.parent(x);
    }
    Some(Pivot { node, path_to_root })
}

fn search(t: &Cotree, v: NodeId, work: &mut StepWork) -> Option<NodeId> {
    for &c in t.children(v).iter().rev() {
        if let Some(found) = search(t, c, work) {
            return Some(found);
        }
    }
    work.visited += 1;
    if is_exhausted(t, v) {
        None
    } else {
        Some(v)
    }
}

/// Replaces `v`'s subtree with the least subtree inducing `p`: one child
/// per part, where parts greater than one become flat stars of leaves.
///
/// # Panics
///
/// Panics when `p` does not sum to `v`'s label.
pub fn rebuild_node(t: &mut Cotree, v: NodeId, p: &Partition) {
    rebuild_node_instrumented(t, v, p, &mut StepWork::default());
}

/// [`rebuild_node`] with arena operation counting.
pub fn rebuild_node_instrumented(t: &mut Cotree, v: NodeId, p: &Partition, work: &mut StepWork) {
    assert_eq!(
        p.total(),
        t.leaf_count(v),
        "rebuilding a node with a partition of the wrong total"
    );
    work.deleted += t.clear_children(v);
    for &part in p.parts() {
        let child = t.new_child(v, part);
        work.created += 1;
        if part > 1 {
            for _ in 0..part {
                t.new_child(child, 1);
                work.created += 1;
            }
        }
    }
}

/// Advances the tree to its immediate successor in place. Returns `false`,
/// leaving the tree untouched, when it is already the maximum.
pub fn next_tree(t: &mut Cotree) -> bool {
    next_tree_instrumented(t, &mut StepWork::default())
}

/// [`next_tree`] with work counting added onto `work`.
pub fn next_tree_instrumented(t: &mut Cotree, work: &mut StepWork) -> bool {
    debug_assert_eq!(t.leaf_count(t.root()), t.leaves(), "stale root label");
    let Some(pivot) = find_pivot_instrumented(t, work) else {
        return false;
    };
    let bumped = t
        .induced_partition(pivot.node)
        .successor()
        .expect("a non-exhausted pivot has a next partition");
    rebuild_node_instrumented(t, pivot.node, &bumped, work);
    // Everything ranking behind the pivot gets reset: on the way up, each
    // right sibling either copies the just-updated subtree (equal label) or
    // restarts at its own flat star (greater label). Copies at higher levels
    // include the rewrites already done at lower ones.
    for &x in &pivot.path_to_root {
        let Some(parent) = t.parent(x) else {
            break;
        };
        let pos = t
            .children(parent)
            .iter()
            .position(|&c| c == x)
            .expect("a child occurs in its parent's list");
        let label = t.leaf_count(x);
        let mut i = pos + 1;
        while let Some(&y) = t.children(parent).get(i) {
            if t.leaf_count(y) == label {
                copy_children(t, y, x, work);
            } else {
                rebuild_node_instrumented(t, y, &Partition::minimum(t.leaf_count(y)), work);
            }
            i += 1;
        }
    }
    true
}

/// Makes `dst`'s subtree a structural copy of `src`'s. Both keep their own
/// identifiers and labels; only the shapes below them change.
fn copy_children(t: &mut Cotree, dst: NodeId, src: NodeId, work: &mut StepWork) {
    debug_assert_eq!(t.leaf_count(dst), t.leaf_count(src));
    work.deleted += t.clear_children(dst);
    let mut i = 0;
    while let Some(&c) = t.children(src).get(i) {
        work.created += t.append_clone(dst, c).1;
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{compare_trees, NodeOrdering};

    fn parsed(text: &str) -> Cotree {
        Cotree::parse(text).unwrap()
    }

    fn advance(text: &str) -> Option<String> {
        let mut t = parsed(text);
        next_tree(&mut t).then(|| t.serialize())
    }

    #[test]
    fn leaves_and_balanced_pairs_are_exhausted() {
        let t = parsed("((1 1) (1 1 1))");
        let root = t.root();
        assert!(is_exhausted(&t, root), "(2, 3) is the maximum for 5");
        let kids = t.children(root).to_vec();
        assert!(is_exhausted(&t, kids[0]));
        assert!(!is_exhausted(&t, kids[1]), "(1, 1, 1) can still advance");
        assert!(is_exhausted(&t, t.children(kids[0])[0]), "leaf");

        let t = parsed("(1 1 (1 1))");
        assert!(!is_exhausted(&t, t.root()), "(1, 1, 2) can still advance");
    }

    #[test]
    fn pivot_of_the_star_is_the_root() {
        let t = Cotree::minimum(4);
        let pivot = find_pivot(&t).unwrap();
        assert_eq!(pivot.node, t.root());
        assert_eq!(pivot.path_to_root, vec![t.root()]);
    }

    #[test]
    fn pivot_prefers_the_deepest_rightmost_candidate() {
        // The rightmost subtree is scanned first, children before parents.
        let t = parsed("(1 (1 1 1))");
        let pivot = find_pivot(&t).unwrap();
        assert_eq!(t.leaf_count(pivot.node), 3);
        assert_eq!(pivot.path_to_root, vec![pivot.node, t.root()]);

        let t = parsed("((1 1 1) (1 (1 1)))");
        let pivot = find_pivot(&t).unwrap();
        assert_eq!(pivot.node, t.children(t.root())[0]);
    }

    #[test]
    fn maximum_trees_have_no_pivot() {
        assert!(find_pivot(&parsed("((1 1) (1 1))")).is_none());
        assert!(find_pivot(&parsed("((1 1) (1 (1 1)))")).is_none());
        assert!(find_pivot(&parsed("((1 (1 1)) (1 (1 1)))")).is_none());
        assert!(find_pivot(&Cotree::trivial()).is_none());
        // Not maximal: the 3-leaf star below the balanced root can advance.
        assert!(find_pivot(&parsed("((1 1) (1 1 1))")).is_some());
    }

    #[test]
    fn rebuild_produces_minimal_subtrees() {
        let mut t = parsed("(1 (1 1 1 1))");
        let v = t.children(t.root())[1];
        rebuild_node(&mut t, v, &Partition::new(vec![1, 3]).unwrap());
        assert_eq!(t.serialize(), "(1 (1 (1 1 1)))");
        rebuild_node(&mut t, v, &Partition::new(vec![2, 2]).unwrap());
        assert_eq!(t.serialize(), "(1 ((1 1) (1 1)))");
        rebuild_node(&mut t, v, &Partition::minimum(4));
        assert_eq!(t.serialize(), "(1 (1 1 1 1))");
        assert!(t.node_count() < 2 * t.leaves());
    }

    #[test]
    #[should_panic(expected = "wrong total")]
    fn rebuild_checks_the_partition_total() {
        let mut t = Cotree::minimum(4);
        let root = t.root();
        rebuild_node(&mut t, root, &Partition::new(vec![2, 3]).unwrap());
    }

    #[test]
    fn successor_chain_on_four_leaves() {
        assert_eq!(advance("(1 1 1 1)").unwrap(), "(1 1 (1 1))");
        assert_eq!(advance("(1 1 (1 1))").unwrap(), "(1 (1 1 1))");
        assert_eq!(advance("(1 (1 1 1))").unwrap(), "(1 (1 (1 1)))");
        assert_eq!(advance("(1 (1 (1 1)))").unwrap(), "((1 1) (1 1))");
        assert_eq!(advance("((1 1) (1 1))"), None::<String>);
    }

    #[test]
    fn maximum_is_a_fixed_point() {
        let mut t = parsed("((1 1) (1 1))");
        assert!(!next_tree(&mut t));
        assert_eq!(t.serialize(), "((1 1) (1 1))");
    }

    #[test]
    fn equal_sized_right_siblings_receive_copies() {
        let mut t = parsed("((1 1 1) (1 (1 1)))");
        assert!(next_tree(&mut t));
        assert_eq!(t.serialize(), "((1 (1 1)) (1 (1 1)))");
    }

    #[test]
    fn larger_right_siblings_restart_at_their_star() {
        // The pivot is the 3-leaf star; its 4-leaf right sibling cannot take
        // a copy and falls back to its own least shape.
        let mut t = parsed("(1 (1 1 1) ((1 1) (1 1)))");
        assert!(next_tree(&mut t));
        assert_eq!(t.serialize(), "(1 (1 (1 1)) (1 1 1 1))");
        assert!(t.is_ordered());
    }

    #[test]
    fn exhausted_children_push_the_pivot_to_the_root() {
        let mut t = parsed("(1 (1 (1 1)) ((1 1) (1 1)))");
        // Both subtrees are maximal for their sizes, so the root advances
        // its partition from (1, 3, 4) to (1, 7).
        assert!(next_tree(&mut t));
        assert_eq!(t.serialize(), "(1 (1 1 1 1 1 1 1))");
    }

    #[test]
    fn steps_grow_strictly_and_stay_ordered() {
        for n in 2..=7 {
            let mut t = Cotree::minimum(n);
            loop {
                let prev = t.clone();
                if !next_tree(&mut t) {
                    break;
                }
                assert_eq!(compare_trees(&prev, &t), NodeOrdering::Less);
                assert!(t.is_ordered());
                assert_eq!(t.leaves(), n);
                assert!(t.node_count() < 2 * n);
            }
        }
    }

    #[test]
    fn work_counters_track_arena_churn() {
        let mut t = Cotree::minimum(4);
        let mut work = StepWork::default();
        assert!(next_tree_instrumented(&mut t, &mut work));
        // Pivot search visits all five nodes; the root rebuild frees the
        // four leaves and creates the (1, 1, 2) configuration.
        assert_eq!(work.visited, 5);
        assert_eq!(work.deleted, 4);
        assert_eq!(work.created, 5);
        assert_eq!(work.total(), 14);
    }
}
