//! The top-level enumeration: every unlabeled cograph on `n` vertices,
//! streamed as (cotree, root type) pairs in a fixed total order.
//!
//! Trees are visited from the minimum upward by successor steps. Each tree
//! stands for two cographs, one per root type, emitted union first and join
//! second; the two are edge complements of each other. Setup and every
//! subsequent step cost work linear in `n`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use crate::cotree::Cotree;
use crate::graph::{RootType, SimpleGraph};
use crate::partition::Partition;
use crate::successor::{next_tree, rebuild_node};

/// One output of the enumeration: a tree together with a root type.
#[derive(Debug, Clone)]
pub struct CographHandle {
    tree: Cotree,
    root_type: RootType,
    ordinal: u64,
}

impl CographHandle {
    /// The canonical cotree, ordered and labeled.
    pub fn tree(&self) -> &Cotree {
        &self.tree
    }

    /// Union roots denote the disconnected graph of the pair, join roots
    /// the connected one.
    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    /// One-based position in the output sequence.
    pub fn ordinal(&self) -> u64 {
        self.ordinal
    }

    /// The output line `<bit>:<tree>`, such as `0:(1 1 (1 1))`.
    pub fn canonical_line(&self) -> String {
        format!("{}:{}", self.root_type.bit(), self.tree.serialize())
    }

    /// Materializes the graph this handle denotes.
    pub fn to_graph(&self) -> SimpleGraph {
        SimpleGraph::from_cotree(&self.tree, self.root_type)
    }
}

/// Streams every cograph on `n` vertices exactly once.
///
/// Outputs strictly increase in the order that compares trees first and
/// breaks ties by root type. Exhaustion is permanent: once `next` returns
/// `None` it keeps doing so.
#[derive(Debug)]
pub struct Generator {
    tree: Cotree,
    tree_index: u64,
    ordinal: u64,
    pending: Option<RootType>,
}

impl Generator {
    /// Positions the stream at the minimum tree.
    ///
    /// The single-vertex graph is connected, so for `n = 1` the stream
    /// holds exactly one handle, the join-rooted one-leaf tree.
    ///
    /// # Panics
    ///
    /// Panics when `n` is zero.
    pub fn new(n: usize) -> Generator {
        assert!(n >= 1, "cographs need at least one vertex");
        let (tree, first) = if n == 1 {
            (Cotree::trivial(), RootType::Join)
        } else {
            (Cotree::minimum(n), RootType::Union)
        };
        Generator {
            tree,
            tree_index: 1,
            ordinal: 0,
            pending: Some(first),
        }
    }

    /// Number of leaves of every emitted tree.
    pub fn leaves(&self) -> usize {
        self.tree.leaves()
    }

    /// One-based index of the tree behind the upcoming output.
    pub fn tree_index(&self) -> u64 {
        self.tree_index
    }
}

impl Iterator for Generator {
    type Item = CographHandle;

    fn next(&mut self) -> Option<CographHandle> {
        let root_type = self.pending?;
        self.ordinal += 1;
        let handle = CographHandle {
            tree: self.tree.clone(),
            root_type,
            ordinal: self.ordinal,
        };
        self.pending = match root_type {
            RootType::Union => Some(RootType::Join),
            RootType::Join => {
                if next_tree(&mut self.tree) {
                    self.tree_index += 1;
                    Some(RootType::Union)
                } else {
                    None
                }
            }
        };
        Some(handle)
    }
}

/// Number of unlabeled cographs on `n` vertices.
///
/// Drives the tree succession in counting mode: no handles, graphs, or
/// text are materialized.
///
/// # Panics
///
/// Panics when `n` is zero.
pub fn count_cographs(n: usize) -> u64 {
    assert!(n >= 1, "cographs need at least one vertex");
    if n == 1 {
        return 1;
    }
    let mut tree = Cotree::minimum(n);
    let mut trees = 1u64;
    while next_tree(&mut tree) {
        trees += 1;
    }
    2 * trees
}

/// [`count_cographs`] split across `threads` workers.
///
/// Trees sharing a root partition sit consecutively in the enumeration, so
/// each root partition's run counts independently: seed the least tree with
/// that root partition, advance until the root partition moves on. Workers
/// pull partitions from a shared cursor and the run lengths add up.
///
/// # Panics
///
/// Panics when `n` or `threads` is zero.
pub fn count_cographs_parallel(n: usize, threads: usize) -> u64 {
    assert!(threads >= 1, "at least one counting worker is needed");
    if n == 1 {
        return 1;
    }
    if threads == 1 {
        return count_cographs(n);
    }
    let mut roots = Vec::new();
    let mut p = Partition::minimum(n);
    loop {
        let next = p.successor();
        roots.push(p);
        match next {
            Some(q) => p = q,
            None => break,
        }
    }
    let cursor = AtomicUsize::new(0);
    let trees: u64 = thread::scope(|scope| {
        let roots = &roots;
        let cursor = &cursor;
        let workers: Vec<_> = (0..threads.min(roots.len()))
            .map(|_| {
                scope.spawn(move || {
                    let mut local = 0u64;
                    while let Some(p) = roots.get(cursor.fetch_add(1, Ordering::Relaxed)) {
                        local += count_root_run(n, p);
                    }
                    local
                })
            })
            .collect();
        workers
            .into_iter()
            .map(|w| w.join().expect("counting worker panicked"))
            .sum()
    });
    2 * trees
}

/// Trees whose root induces exactly `p`, counted by walking the run.
fn count_root_run(n: usize, p: &Partition) -> u64 {
    let mut tree = Cotree::minimum(n);
    let root = tree.root();
    rebuild_node(&mut tree, root, p);
    let mut count = 1u64;
    while next_tree(&mut tree) {
        if tree.induced_partition(tree.root()).parts() != p.parts() {
            break;
        }
        count += 1;
    }
    count
}
