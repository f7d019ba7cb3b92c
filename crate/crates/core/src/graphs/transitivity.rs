//! Budgeted vertex-transitivity certification by automorphism search.

use super::Graph;

/// Permutation group given by its degree and a generating set. Generators
/// are stored as images: `sigma[i]` is where vertex `i` goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), degree, "generator of wrong degree");
            let mut seen = vec![false; degree];
            for &img in g {
                assert!(img < degree && !seen[img], "generator is not a bijection");
                seen[img] = true;
            }
        }
        PermutationGroup { degree, generators }
    }

    /// The symmetric group on `degree` points (a transposition and a cycle).
    pub fn symmetric(degree: usize) -> Self {
        assert!(degree >= 1);
        if degree == 1 {
            return Self::new(1, vec![vec![0]]);
        }
        let mut swap: Vec<usize> = (0..degree).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::new(degree, vec![swap, cycle])
    }

    /// Cyclic shift group on `degree` points.
    pub fn cyclic(degree: usize) -> Self {
        assert!(degree >= 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::new(degree, vec![cycle])
    }
}

/// Outcome of the budgeted transitivity search: a witness group, a
/// refutation, or budget exhaustion (reported distinctly).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransitivityOutcome {
    Witness(PermutationGroup),
    Refuted,
    BudgetExhausted,
}

/// Searches for automorphisms mapping vertex 0 to every other vertex,
/// certifying a single vertex orbit. Backtracking with degree and
/// neighborhood refinement; `budget` caps the total number of search nodes
/// across all targets.
pub fn vertex_transitivity_witness(g: &Graph, budget: u64) -> TransitivityOutcome {
    let n = g.vertices();
    if n == 0 {
        return TransitivityOutcome::Refuted;
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // cheap obstruction first
    if degrees.iter().any(|&d| d != degrees[0]) {
        return TransitivityOutcome::Refuted;
    }
    let order = g.bfs_order(0);
    let search_order: Vec<usize> = if order.len() == n {
        order
    } else {
        // disconnected regular graph: fall back to index order
        (0..n).collect()
    };

    let mut nodes_left = budget;
    let mut generators: Vec<Vec<usize>> = Vec::new();
    for target in 1..n {
        // targets already in the orbit of vertex 0 under the generators
        // found so far need no fresh search
        if orbit_of_zero(n, &generators)[target] {
            continue;
        }
        let mut assignment = vec![usize::MAX; n];
        let mut used = vec![false; n];
        assignment[0] = target;
        used[target] = true;
        match extend(g, &degrees, &search_order, 1, &mut assignment, &mut used, &mut nodes_left) {
            SearchResult::Found => generators.push(assignment),
            SearchResult::Exhausted => return TransitivityOutcome::BudgetExhausted,
            SearchResult::NotFound => return TransitivityOutcome::Refuted,
        }
    }
    TransitivityOutcome::Witness(PermutationGroup::new(n, generators))
}

fn orbit_of_zero(n: usize, generators: &[Vec<usize>]) -> Vec<bool> {
    let mut in_orbit = vec![false; n];
    in_orbit[0] = true;
    let mut frontier = vec![0usize];
    while let Some(v) = frontier.pop() {
        for sigma in generators {
            let w = sigma[v];
            if !in_orbit[w] {
                in_orbit[w] = true;
                frontier.push(w);
            }
        }
    }
    in_orbit
}

enum SearchResult {
    Found,
    NotFound,
    Exhausted,
}

fn extend(
    g: &Graph,
    degrees: &[usize],
    order: &[usize],
    pos: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    nodes_left: &mut u64,
) -> SearchResult {
    if pos == order.len() {
        return SearchResult::Found;
    }
    let v = order[pos];
    for img in 0..g.vertices() {
        if used[img] || degrees[img] != degrees[v] {
            continue;
        }
        if *nodes_left == 0 {
            return SearchResult::Exhausted;
        }
        *nodes_left -= 1;
        // adjacency must agree with every already-assigned vertex
        let consistent = order[..pos].iter().all(|&w| {
            assignment[w] == usize::MAX || g.has_edge(v, w) == g.has_edge(img, assignment[w])
        });
        if !consistent {
            continue;
        }
        assignment[v] = img;
        used[img] = true;
        match extend(g, degrees, order, pos + 1, assignment, used, nodes_left) {
            SearchResult::NotFound => {}
            other => return other,
        }
        assignment[v] = usize::MAX;
        used[img] = false;
    }
    SearchResult::NotFound
}
