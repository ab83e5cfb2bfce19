//! Bipartite matching between two degree multisets under divisibility.
//!
//! Side A holds the degrees of the group, side B those of the normalizer;
//! an edge joins `a` to `b` when `b` divides `a`. The question is whether
//! a perfect matching exists, and when it does not, the augmenting-path
//! search hands back a concrete Hall violator: a set `S` of A-vertices
//! whose joint neighborhood is smaller than `S`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::chardeg::DegreeMultiset;
use crate::{Error, Result};

/// The divisibility graph between two degree lists. Vertices keep the
/// ascending multiset order of their [`DegreeMultiset`]s; adjacency lists
/// are in ascending B-index order.
pub struct DivisibilityGraph {
    a: Vec<BigUint>,
    b: Vec<BigUint>,
    adj: Vec<Vec<usize>>,
}

impl DivisibilityGraph {
    pub fn a_len(&self) -> usize {
        self.a.len()
    }

    pub fn b_len(&self) -> usize {
        self.b.len()
    }

    pub fn a_degree(&self, i: usize) -> &BigUint {
        &self.a[i]
    }

    pub fn b_degree(&self, j: usize) -> &BigUint {
        &self.b[j]
    }

    /// B-indices whose degree divides the `i`-th A-degree.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }
}

/// Builds the graph with an edge wherever the B-degree divides the
/// A-degree.
pub fn build_graph(a: &DegreeMultiset, b: &DegreeMultiset) -> DivisibilityGraph {
    let a: Vec<BigUint> = a.iter().cloned().collect();
    let b: Vec<BigUint> = b.iter().cloned().collect();
    let adj = a
        .iter()
        .map(|x| {
            b.iter()
                .enumerate()
                .filter(|(_, y)| (x % *y).is_zero())
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    DivisibilityGraph { a, b, adj }
}

/// Outcome of the matching search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingResult {
    /// A perfect matching: `assignment[i]` is the B-index paired with
    /// A-vertex `i`.
    Bijection { assignment: Vec<usize> },
    /// A Hall violator: A-indices, sorted, whose joint neighborhood has
    /// exactly one vertex fewer.
    Violator { indices: Vec<usize> },
    /// The two sides differ in size, so no bijection can exist.
    CountMismatch { left: usize, right: usize },
}

/// Maximum-matching search by augmenting paths. A-vertices are processed
/// in index order and each search scans neighbors in index order, so the
/// result is determined by the graph alone.
///
/// On failure, the visited B-vertices of the failed search are all
/// matched; their mates, together with the failed vertex, form a Hall
/// violator with `|N(S)| = |S| - 1`.
pub fn kuhn_match(graph: &DivisibilityGraph) -> MatchingResult {
    if graph.a_len() != graph.b_len() {
        return MatchingResult::CountMismatch {
            left: graph.a_len(),
            right: graph.b_len(),
        };
    }
    let mut mate_of_b: Vec<Option<usize>> = vec![None; graph.b_len()];
    for start in 0..graph.a_len() {
        let mut visited = vec![false; graph.b_len()];
        if !augment(graph, start, &mut visited, &mut mate_of_b) {
            let mut indices = vec![start];
            for (j, &seen) in visited.iter().enumerate() {
                if seen {
                    indices.push(mate_of_b[j].expect("visited B-vertex is matched"));
                }
            }
            indices.sort_unstable();
            return MatchingResult::Violator { indices };
        }
    }
    let mut assignment = vec![0usize; graph.a_len()];
    for (j, mate) in mate_of_b.iter().enumerate() {
        assignment[mate.expect("perfect matching saturates B")] = j;
    }
    MatchingResult::Bijection { assignment }
}

fn augment(
    graph: &DivisibilityGraph,
    a: usize,
    visited: &mut [bool],
    mate_of_b: &mut [Option<usize>],
) -> bool {
    for &j in graph.neighbors(a) {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match mate_of_b[j] {
            None => true,
            Some(mate) => augment(graph, mate, visited, mate_of_b),
        };
        if free {
            mate_of_b[j] = Some(a);
            return true;
        }
    }
    false
}

/// Exhaustive matching search, the oracle for the augmenting-path code.
/// Returns the lexicographically first perfect assignment, or `None` when
/// there is none. Sides above 9 vertices are refused.
pub fn brute_force_match(graph: &DivisibilityGraph) -> Result<Option<Vec<usize>>> {
    const MAX: usize = 9;
    let n = graph.a_len().max(graph.b_len());
    if n > MAX {
        return Err(Error::BruteForceGuard { n, max: MAX });
    }
    if graph.a_len() != graph.b_len() {
        return Ok(None);
    }
    let mut used = vec![false; graph.b_len()];
    let mut assignment = Vec::with_capacity(graph.a_len());
    fn search(
        graph: &DivisibilityGraph,
        used: &mut [bool],
        assignment: &mut Vec<usize>,
    ) -> bool {
        let i = assignment.len();
        if i == graph.a_len() {
            return true;
        }
        for &j in graph.neighbors(i) {
            if used[j] {
                continue;
            }
            used[j] = true;
            assignment.push(j);
            if search(graph, used, assignment) {
                return true;
            }
            assignment.pop();
            used[j] = false;
        }
        false
    }
    if search(graph, &mut used, &mut assignment) {
        Ok(Some(assignment))
    } else {
        Ok(None)
    }
}

/// Checks a matching result against the graph it claims to describe.
pub fn verify_result(graph: &DivisibilityGraph, result: &MatchingResult) -> bool {
    match result {
        MatchingResult::Bijection { assignment } => {
            if assignment.len() != graph.a_len() || graph.a_len() != graph.b_len() {
                return false;
            }
            let mut taken = vec![false; graph.b_len()];
            assignment.iter().enumerate().all(|(i, &j)| {
                j < graph.b_len() && !std::mem::replace(&mut taken[j], true) && graph.edge(i, j)
            })
        }
        MatchingResult::Violator { indices } => {
            if indices.is_empty()
                || indices.windows(2).any(|w| w[0] >= w[1])
                || indices.iter().any(|&i| i >= graph.a_len())
            {
                return false;
            }
            let mut neighborhood = vec![false; graph.b_len()];
            for &i in indices {
                for &j in graph.neighbors(i) {
                    neighborhood[j] = true;
                }
            }
            let joint = neighborhood.iter().filter(|&&x| x).count();
            joint < indices.len()
        }
        MatchingResult::CountMismatch { left, right } => {
            *left == graph.a_len() && *right == graph.b_len() && left != right
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(a: Vec<u64>, b: Vec<u64>) -> DivisibilityGraph {
        build_graph(
            &DegreeMultiset::from_u64s(a).unwrap(),
            &DegreeMultiset::from_u64s(b).unwrap(),
        )
    }

    fn matched_pairs(g: &DivisibilityGraph, assignment: &[usize]) -> Vec<(u64, u64)> {
        assignment
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                (
                    u64::try_from(g.a_degree(i)).unwrap(),
                    u64::try_from(g.b_degree(j)).unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn four_by_four_bijection() {
        // Group side 6, 10, 22, 26 against normalizer side 2, 3, 5, 13:
        // the only perfect matching pairs 6-3, 10-5, 22-2, 26-13.
        let g = graph(vec![6, 10, 22, 26], vec![3, 5, 13, 2]);
        let MatchingResult::Bijection { assignment } = kuhn_match(&g) else {
            panic!("expected a bijection");
        };
        assert!(verify_result(&g, &MatchingResult::Bijection { assignment: assignment.clone() }));
        assert_eq!(
            matched_pairs(&g, &assignment),
            vec![(6, 3), (10, 5), (22, 2), (26, 13)]
        );
    }

    #[test]
    fn violator_with_shape_of_failed_search() {
        // Nine versus nine, but the odd degrees 1, 1, 14, 14, 14, 14 can
        // only reach the five normalizer degrees 1, 1, 1, 1, 2.
        let g = graph(
            vec![1, 1, 14, 14, 14, 14, 20, 35, 35],
            vec![1, 1, 1, 1, 2, 4, 4, 4, 4],
        );
        let result = kuhn_match(&g);
        let MatchingResult::Violator { indices } = &result else {
            panic!("expected a violator, got {result:?}");
        };
        assert!(verify_result(&g, &result));
        assert_eq!(indices, &vec![0, 1, 2, 3, 4, 5]);
        // Exactly one fewer neighbor than members.
        let mut nb = vec![false; g.b_len()];
        for &i in indices {
            for &j in g.neighbors(i) {
                nb[j] = true;
            }
        }
        assert_eq!(nb.iter().filter(|&&x| x).count(), indices.len() - 1);
    }

    #[test]
    fn count_mismatch() {
        let g = graph(vec![1, 2, 3], vec![1, 1]);
        let result = kuhn_match(&g);
        assert_eq!(
            result,
            MatchingResult::CountMismatch { left: 3, right: 2 }
        );
        assert!(verify_result(&g, &result));
    }

    #[test]
    fn identical_multisets_always_match() {
        for degrees in [vec![1u64], vec![1, 1, 2, 3, 3], vec![5, 7, 35]] {
            let g = graph(degrees.clone(), degrees);
            assert!(matches!(kuhn_match(&g), MatchingResult::Bijection { .. }));
        }
    }

    #[test]
    fn empty_sides_match_vacuously() {
        let g = DivisibilityGraph {
            a: vec![],
            b: vec![],
            adj: vec![],
        };
        assert_eq!(
            kuhn_match(&g),
            MatchingResult::Bijection { assignment: vec![] }
        );
    }

    #[test]
    fn brute_force_guard() {
        let g = graph(vec![1; 10], vec![1; 10]);
        assert!(matches!(
            brute_force_match(&g),
            Err(Error::BruteForceGuard { n: 10, max: 9 })
        ));
    }

    #[test]
    fn graph_accessors() {
        let g = graph(vec![4, 6], vec![2, 3]);
        assert_eq!(g.a_len(), 2);
        assert_eq!(g.b_len(), 2);
        assert_eq!(g.neighbors(0), &[0]);
        assert_eq!(g.neighbors(1), &[0, 1]);
        assert!(g.edge(1, 1));
        assert!(!g.edge(0, 1));
    }

    #[test]
    fn verify_rejects_malformed_results() {
        let g = graph(vec![4, 6], vec![2, 3]);
        // 3 does not divide 4.
        assert!(!verify_result(
            &g,
            &MatchingResult::Bijection { assignment: vec![1, 0] }
        ));
        // Repeated B-vertex.
        assert!(!verify_result(
            &g,
            &MatchingResult::Bijection { assignment: vec![0, 0] }
        ));
        // {4, 6} has joint neighborhood {2, 3}: not a violator.
        assert!(!verify_result(
            &g,
            &MatchingResult::Violator { indices: vec![0, 1] }
        ));
        // Unsorted index list.
        assert!(!verify_result(
            &g,
            &MatchingResult::Violator { indices: vec![1, 0] }
        ));
        // Mismatch claim on balanced graph.
        assert!(!verify_result(
            &g,
            &MatchingResult::CountMismatch { left: 2, right: 2 }
        ));
    }

    proptest! {
        #[test]
        fn kuhn_output_always_verifies(
            a in proptest::collection::vec(1u64..60, 0..8),
            b in proptest::collection::vec(1u64..60, 0..8),
        ) {
            let g = graph(a, b);
            prop_assert!(verify_result(&g, &kuhn_match(&g)));
        }

        #[test]
        fn kuhn_agrees_with_brute_force(
            a in proptest::collection::vec(1u64..40, 1..7),
            b in proptest::collection::vec(1u64..40, 1..7),
        ) {
            let g = graph(a, b);
            let fast = matches!(kuhn_match(&g), MatchingResult::Bijection { .. });
            let slow = brute_force_match(&g).unwrap().is_some();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn appending_a_one_preserves_bijection(
            a in proptest::collection::vec(1u64..40, 1..7),
            b in proptest::collection::vec(1u64..40, 1..7),
            extra in 1u64..40,
        ) {
            let g = graph(a.clone(), b.clone());
            if matches!(kuhn_match(&g), MatchingResult::Bijection { .. }) {
                let mut a2 = a;
                a2.push(extra);
                let mut b2 = b;
                b2.push(1);
                let g2 = graph(a2, b2);
                let still = matches!(kuhn_match(&g2), MatchingResult::Bijection { .. });
                prop_assert!(still);
            }
        }

        #[test]
        fn self_matching_is_always_a_bijection(
            degrees in proptest::collection::vec(1u64..100, 1..8),
        ) {
            let g = graph(degrees.clone(), degrees);
            let matched = matches!(kuhn_match(&g), MatchingResult::Bijection { .. });
            prop_assert!(matched);
        }
    }
}
