//! Named graph families.

use super::{complement, Graph, GraphError};

/// All k-element subsets of {0..n-1} in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Hamming graph H(d, q): vertices are d-tuples over an alphabet of size q
/// (lexicographic, first coordinate major), adjacent when they differ in
/// exactly one coordinate.
pub fn hamming(d: usize, q: usize) -> Result<Graph, GraphError> {
    if d < 1 || q < 1 {
        return Err(GraphError::Parameter("hamming needs d, q >= 1".into()));
    }
    let n = q.pow(d as u32);
    let mut g = Graph::new(n, format!("hamming({d},{q})"));
    let digits = |mut v: usize| -> Vec<usize> {
        let mut t = vec![0; d];
        for i in (0..d).rev() {
            t[i] = v % q;
            v /= q;
        }
        t
    };
    let tuples: Vec<Vec<usize>> = (0..n).map(digits).collect();
    for u in 0..n {
        for v in u + 1..n {
            let differ = tuples[u].iter().zip(&tuples[v]).filter(|(a, b)| a != b).count();
            if differ == 1 {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Kneser graph KG(n, k): vertices are k-subsets of an n-set, adjacent when
/// disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k < 1 || n < 2 * k {
        return Err(GraphError::Parameter("kneser needs n >= 2k >= 2".into()));
    }
    let verts = subsets(n, k);
    let mut g = Graph::new(verts.len(), format!("kneser({n},{k})"));
    for u in 0..verts.len() {
        for v in u + 1..verts.len() {
            if intersection_size(&verts[u], &verts[v]) == 0 {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Johnson graph J(n, k): vertices are k-subsets of an n-set, adjacent when
/// they intersect in k-1 elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k < 1 || n <= k {
        return Err(GraphError::Parameter("johnson needs n > k >= 1".into()));
    }
    let verts = subsets(n, k);
    let mut g = Graph::new(verts.len(), format!("johnson({n},{k})"));
    for u in 0..verts.len() {
        for v in u + 1..verts.len() {
            if intersection_size(&verts[u], &verts[v]) == k - 1 {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Petersen graph (Kneser graph KG(5,2)).
pub fn petersen() -> Graph {
    let mut g = kneser(5, 2).expect("valid parameters");
    g.label = "petersen".into();
    g
}

/// Folded d-cube: vertices are (d-1)-bit strings, adjacent when they differ
/// in exactly one bit or in all d-1 bits. For d = 5 this is the strongly
/// regular (16, 5, 0, 2) graph.
pub fn folded_cube(d: usize) -> Result<Graph, GraphError> {
    if d < 2 {
        return Err(GraphError::Parameter("folded cube needs d >= 2".into()));
    }
    let bits = d - 1;
    let n = 1usize << bits;
    let mask = n - 1;
    let mut g = Graph::new(n, format!("folded_cube({d})"));
    for u in 0..n {
        for v in u + 1..n {
            let x = u ^ v;
            if x.count_ones() == 1 || x == mask {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Clebsch graph: the strongly regular (16, 5, 0, 2) graph, i.e. the folded
/// 5-cube.
pub fn clebsch() -> Graph {
    let mut g = folded_cube(5).expect("valid parameters");
    g.label = "clebsch".into();
    g
}

/// Shrikhande graph: Cayley graph of Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. Strongly regular (16, 6, 2, 2) but not
/// distance transitive.
pub fn shrikhande() -> Graph {
    let mut g = Graph::new(16, "shrikhande");
    let connection = [(1i32, 0i32), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    for a in 0..16 {
        for b in a + 1..16 {
            let (ax, ay) = ((a / 4) as i32, (a % 4) as i32);
            let (bx, by) = ((b / 4) as i32, (b % 4) as i32);
            let diff = (((bx - ax) % 4 + 4) % 4, ((by - ay) % 4 + 4) % 4);
            if connection.contains(&diff) {
                g.set_edge(a, b);
            }
        }
    }
    g
}

/// Gosset graph on 56 vertices: two copies of the edge set of K8. In the
/// E8-root model the vertices are the permutations of ±(3,3,-1,...,-1) and
/// adjacency is maximal inner product, which works out to: same copy when
/// the edges share exactly one endpoint, different copies when the edges
/// are disjoint.
pub fn gosset() -> Graph {
    let edges = subsets(8, 2);
    let m = edges.len();
    let mut g = Graph::new(2 * m, "gosset");
    for u in 0..2 * m {
        for v in u + 1..2 * m {
            let (cu, eu) = (u / m, &edges[u % m]);
            let (cv, ev) = (v / m, &edges[v % m]);
            let common = intersection_size(eu, ev);
            let adjacent = if cu == cv { common == 1 } else { common == 0 };
            if adjacent {
                g.set_edge(u, v);
            }
        }
    }
    g
}

/// Schläfli graph: the induced subgraph on the 27 neighbors of a Gosset
/// graph vertex, verified strongly regular (27, 16, 10, 8).
pub fn schlafli() -> Graph {
    let gos = gosset();
    let nbrs = gos.neighbors(0);
    assert_eq!(nbrs.len(), 27);
    let mut g = Graph::new(27, "schlafli");
    for i in 0..27 {
        for j in i + 1..27 {
            if gos.has_edge(nbrs[i], nbrs[j]) {
                g.set_edge(i, j);
            }
        }
    }
    assert_eq!(
        super::checks::is_strongly_regular(&g),
        Some((16, 10, 8)),
        "Schläfli construction must be strongly regular (27,16,10,8)"
    );
    g
}

/// Complement of the Clebsch graph (strongly regular (16, 10, 6, 6)).
pub fn clebsch_complement() -> Graph {
    complement(&clebsch())
}
