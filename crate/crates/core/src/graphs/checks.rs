//! Combinatorial structure checks: regularity, strong regularity,
//! distance-regularity. All checks count exactly; a `None` result means the
//! property fails.

use super::{Graph, GraphError};

/// Common vertex degree, when the graph is regular.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let n = g.vertices();
    if n == 0 {
        return None;
    }
    let d = g.degree(0);
    (1..n).all(|v| g.degree(v) == d).then_some(d)
}

/// Strongly regular parameters (k, l, m): k-regular, every adjacent pair has
/// l common neighbors, every non-adjacent pair has m common neighbors.
/// Complete and disconnected graphs are excluded by definition.
pub fn is_strongly_regular(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.vertices();
    let k = is_regular(g)?;
    if !g.is_connected() || k == n - 1 || n < 3 {
        return None;
    }
    let mut l: Option<usize> = None;
    let mut m: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
            let slot = if g.has_edge(u, v) { &mut l } else { &mut m };
            match slot {
                None => *slot = Some(common),
                Some(c) if *c != common => return None,
                _ => {}
            }
        }
    }
    Some((k, l?, m?))
}

/// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} of a
/// distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Distance-regularity check by exhaustive distance-partition counting.
/// Returns the intersection array when the graph is distance-regular,
/// `None` when it is not, and an error on disconnected input.
pub fn is_distance_regular(g: &Graph) -> Result<Option<IntersectionArray>, GraphError> {
    let n = g.vertices();
    if n == 0 || !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let all_dist: Vec<Vec<usize>> = (0..n).map(|v| g.distances_from(v)).collect();
    let diameter = *all_dist.iter().flatten().max().expect("nonempty");
    let mut b = vec![None; diameter + 1];
    let mut c = vec![None; diameter + 1];
    for v in 0..n {
        let dist = &all_dist[v];
        for u in 0..n {
            let i = dist[u];
            let mut further = 0;
            let mut closer = 0;
            for w in g.neighbors(u) {
                if dist[w] == i + 1 {
                    further += 1;
                } else if i > 0 && dist[w] == i - 1 {
                    closer += 1;
                }
            }
            for (slot, val) in [(&mut b[i], further), (&mut c[i], closer)] {
                match slot {
                    None => *slot = Some(val),
                    Some(x) if *x != val => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    let b: Vec<usize> = b[..diameter].iter().map(|x| x.expect("seen")).collect();
    let c: Vec<usize> = c[1..].iter().map(|x| x.expect("seen")).collect();
    Ok(Some(IntersectionArray { b, c }))
}
