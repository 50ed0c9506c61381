//! Brute-force reference implementations for testing and verification.
//!
//! Everything here trades speed for being obviously correct, and stays
//! independent of the incremental enumeration it is used to check: trees
//! are built exhaustively from partitions rather than by successor steps,
//! duplicates are removed through serialized text rather than through the
//! comparison function, and the graph census filters all labeled graphs
//! directly by the induced-path characterization.

use std::collections::{BTreeMap, HashSet};
use std::thread;

use itertools::Itertools;

use crate::cotree::{compare_trees, Cotree};
use crate::graph::SimpleGraph;
use crate::partition::{compare_partitions, Partition};

/// Every partition of `n` with at least two parts, sorted ascending.
///
/// # Panics
///
/// Panics outside the supported range `2..=20`.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut found = partitions_unsorted(n);
    found.sort_by(compare_partitions);
    found
}

/// The same set in raw generation order (ascending first part, then
/// recursively ascending remainders), which tests compare against the
/// comparator-sorted order.
pub(crate) fn partitions_unsorted(n: usize) -> Vec<Partition> {
    assert!((2..=20).contains(&n), "partition oracle supports 2..=20");
    let mut found = Vec::new();
    let mut prefix = Vec::new();
    gather_parts(n, 1, &mut prefix, &mut found);
    found
}

fn gather_parts(
    remaining: usize,
    min_part: usize,
    prefix: &mut Vec<usize>,
    found: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if prefix.len() >= 2 {
            found.push(Partition::new(prefix.clone()).expect("generated parts are valid"));
        }
        return;
    }
    for part in min_part..=remaining {
        prefix.push(part);
        gather_parts(remaining - part, part, prefix, found);
        prefix.pop();
    }
}

/// Every tree on `n` leaves, one per isomorphism class, sorted ascending
/// under [`compare_trees`].
///
/// Trees are assembled bottom-up: for each partition of `n`, children are
/// drawn from the already-built size classes, taking multisets for runs of
/// equal parts so that no arrangement is produced twice.
///
/// # Panics
///
/// Panics outside the supported range `2..=9`.
pub fn all_trees(n: usize) -> Vec<Cotree> {
    assert!((2..=9).contains(&n), "tree oracle supports 2..=9");
    let mut by_size: Vec<Vec<Cotree>> = vec![Vec::new(), vec![Cotree::trivial()]];
    for m in 2..=n {
        // Dedup by serialized text, which is injective on the trees built
        // here and does not involve the comparison function.
        let mut seen: BTreeMap<String, Cotree> = BTreeMap::new();
        for p in all_partitions(m) {
            let mut groups: Vec<(usize, usize)> = Vec::new();
            for &part in p.parts() {
                match groups.last_mut() {
                    Some((size, count)) if *size == part => *count += 1,
                    _ => groups.push((part, 1)),
                }
            }
            let group_choices: Vec<Vec<Vec<usize>>> = groups
                .iter()
                .map(|&(size, count)| {
                    (0..by_size[size].len())
                        .combinations_with_replacement(count)
                        .collect()
                })
                .collect();
            for combo in group_choices.into_iter().multi_cartesian_product() {
                let mut children: Vec<&Cotree> = Vec::new();
                for (&(size, _), indices) in groups.iter().zip(&combo) {
                    for &i in indices {
                        children.push(&by_size[size][i]);
                    }
                }
                let tree = Cotree::from_children(&children);
                let key = tree.serialize();
                seen.entry(key).or_insert(tree);
            }
        }
        let mut trees: Vec<Cotree> = seen.into_values().collect();
        trees.sort_by(|a, b| compare_trees(a, b).as_ordering());
        by_size.push(trees);
    }
    by_size.pop().expect("loop pushed one class per size")
}

/// True when no four vertices induce a path, checked subset by subset.
pub fn is_p4_free(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if induces_p4(g, [a, b, c, d]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn induces_p4(g: &SimpleGraph, q: [usize; 4]) -> bool {
    let mut degrees = [0u8; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i] as u32, q[j] as u32) {
                edges += 1;
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    // Three edges on four vertices form a path exactly when the degrees
    // are 1, 1, 2, 2 (the alternatives are the star and the triangle).
    if edges != 3 {
        return false;
    }
    degrees.sort_unstable();
    degrees == [1, 1, 2, 2]
}

/// A label-independent fingerprint: the least adjacency bit string over all
/// vertex orderings. Two graphs get equal forms exactly when isomorphic.
///
/// # Panics
///
/// Panics over 11 vertices, where the pair bits outgrow the word.
pub fn canonical_form(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical forms use one bit per vertex pair");
    canonical_mask(adjacency_mask(g), n)
}

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

fn adjacency_mask(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    let mut mask = 0;
    for (u, v) in g.edges() {
        mask |= 1 << pair_bit(n, u as usize, v as usize);
    }
    mask
}

fn canonical_mask(mask: u64, n: usize) -> u64 {
    let mut best = u64::MAX;
    for perm in (0..n).permutations(n) {
        let mut mapped = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_bit(n, i, j) & 1 == 1 {
                    let (a, b) = if perm[i] < perm[j] {
                        (perm[i], perm[j])
                    } else {
                        (perm[j], perm[i])
                    };
                    mapped |= 1 << pair_bit(n, a, b);
                }
            }
        }
        best = best.min(mapped);
    }
    if best == u64::MAX {
        // Zero or one vertices admit a single empty labeling.
        0
    } else {
        best
    }
}

/// Canonical forms of every graph on `n` vertices with no induced path on
/// four vertices, found by filtering all labeled graphs.
///
/// # Panics
///
/// Panics outside the supported range `1..=7`; the labeled space and the
/// permutation count both explode shortly after.
pub fn bruteforce_cograph_forms(n: usize) -> HashSet<u64> {
    assert!((1..=7).contains(&n), "graph census supports 1..=7");
    let pair_count = n * (n - 1) / 2;
    let total: u64 = 1 << pair_count;
    let quads: Vec<[u32; 6]> = (0..n)
        .combinations(4)
        .map(|q| {
            let mut bits = [0u32; 6];
            let mut k = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    bits[k] = pair_bit(n, q[i], q[j]);
                    k += 1;
                }
            }
            bits
        })
        .collect();
    let workers = if pair_count >= 15 {
        thread::available_parallelism().map_or(1, |p| p.get().min(16)) as u64
    } else {
        1
    };
    thread::scope(|scope| {
        let quads = &quads;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut forms = HashSet::new();
                    for mask in total * w / workers..total * (w + 1) / workers {
                        if mask_is_p4_free(mask, quads) {
                            forms.insert(canonical_mask(mask, n));
                        }
                    }
                    forms
                })
            })
            .collect();
        let mut forms = HashSet::new();
        for handle in handles {
            forms.extend(handle.join().expect("census worker panicked"));
        }
        forms
    })
}

fn mask_is_p4_free(mask: u64, quads: &[[u32; 6]]) -> bool {
    for quad in quads {
        let b: [u64; 6] = quad.map(|bit| mask >> bit & 1);
        if b.iter().sum::<u64>() != 3 {
            continue;
        }
        // Degrees inside the quad, with pairs enumerated as
        // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
        let mut degrees = [
            b[0] + b[1] + b[2],
            b[0] + b[3] + b[4],
            b[1] + b[3] + b[5],
            b[2] + b[4] + b[5],
        ];
        degrees.sort_unstable();
        if degrees == [1, 1, 2, 2] {
            return false;
        }
    }
    true
}

/// Number of isomorphism classes of graphs on `n` vertices with no induced
/// four-vertex path.
pub fn count_cographs_bruteforce(n: usize) -> u64 {
    bruteforce_cograph_forms(n).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::RootType;

    fn parts(items: &[&[usize]]) -> Vec<Partition> {
        items
            .iter()
            .map(|p| Partition::new(p.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn partitions_of_small_totals() {
        assert_eq!(all_partitions(2), parts(&[&[1, 1]]));
        assert_eq!(all_partitions(3), parts(&[&[1, 1, 1], &[1, 2]]));
        assert_eq!(
            all_partitions(5),
            parts(&[
                &[1, 1, 1, 1, 1],
                &[1, 1, 1, 2],
                &[1, 1, 3],
                &[1, 2, 2],
                &[1, 4],
                &[2, 3],
            ])
        );
    }

    #[test]
    fn partition_counts_track_the_partition_numbers() {
        // p(n) minus one, for the single-part partition.
        let expected = [1, 2, 4, 6, 10, 14, 21, 29, 41, 55, 76];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(all_partitions(i + 2).len(), count, "n = {}", i + 2);
        }
    }

    #[test]
    fn generation_order_agrees_with_the_comparator() {
        for n in 2..=12 {
            let raw = partitions_unsorted(n);
            let sorted = all_partitions(n);
            assert_eq!(raw, sorted, "sorting must be a no-op for n = {n}");
        }
    }

    #[test]
    fn partitions_of_six_end_at_the_balanced_pair() {
        let sixes = all_partitions(6);
        assert_eq!(sixes.len(), 10);
        let tail: Vec<_> = sixes[7..].iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(tail, vec![vec![2, 2, 2], vec![2, 4], vec![3, 3]]);
    }

    #[test]
    fn tree_class_sizes_match_the_published_sequence() {
        let expected = [1, 2, 5, 12, 33, 90, 261, 766];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 2).len(), count, "n = {}", i + 2);
        }
    }

    #[test]
    fn trees_on_four_leaves_in_order() {
        let texts: Vec<String> = all_trees(4).iter().map(Cotree::serialize).collect();
        assert_eq!(
            texts,
            [
                "(1 1 1 1)",
                "(1 1 (1 1))",
                "(1 (1 1 1))",
                "(1 (1 (1 1)))",
                "((1 1) (1 1))",
            ]
        );
    }

    #[test]
    fn oracle_trees_are_ordered_and_distinct() {
        let trees = all_trees(6);
        let mut texts = HashSet::new();
        for t in &trees {
            assert!(t.is_ordered());
            assert!(t.node_count() < 2 * t.leaves());
            assert!(texts.insert(t.serialize()), "duplicate {}", t.serialize());
        }
    }

    #[test]
    fn path_detection() {
        let mut p4 = SimpleGraph::new(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        assert!(!is_p4_free(&p4));

        let mut c5 = SimpleGraph::new(5);
        for i in 0..5u32 {
            c5.add_edge(i, (i + 1) % 5);
        }
        assert!(!is_p4_free(&c5), "the five-cycle contains induced paths");

        let mut star = SimpleGraph::new(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        assert!(is_p4_free(&star));

        let t = Cotree::parse("(1 1 (1 1))").unwrap();
        assert!(is_p4_free(&SimpleGraph::from_cotree(&t, RootType::Join)));
        assert!(is_p4_free(&SimpleGraph::new(6)));
    }

    #[test]
    fn canonical_forms_ignore_labeling() {
        let mut a = SimpleGraph::new(3);
        a.add_edge(0, 1);
        a.add_edge(1, 2);
        let mut b = SimpleGraph::new(3);
        b.add_edge(0, 2);
        b.add_edge(1, 2);
        assert_eq!(canonical_form(&a), canonical_form(&b));

        let mut c = SimpleGraph::new(3);
        c.add_edge(0, 1);
        assert_ne!(canonical_form(&a), canonical_form(&c));
        assert_eq!(canonical_form(&SimpleGraph::new(1)), 0);
    }

    #[test]
    fn census_matches_published_counts() {
        let expected = [1, 2, 4, 10, 24, 66];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(count_cographs_bruteforce(i + 1), count, "n = {}", i + 1);
        }
    }

    #[test]
    #[ignore = "takes minutes; run with --ignored"]
    fn census_matches_published_count_on_seven() {
        assert_eq!(count_cographs_bruteforce(7), 180);
    }
}
