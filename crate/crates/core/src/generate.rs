//! Graph family generators: complete, complete bipartite, cycle, path, wheel,
//! and seeded random families.
//!
//! Random graphs use `ChaCha8Rng` seeded from a caller-supplied 64-bit value,
//! so identical parameters reproduce identical graphs on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("{family} requires {requirement}, got {got}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, requirement: &'static str, got: impl ToString) -> GenerateError {
    GenerateError::BadParameter {
        family,
        requirement,
        got: got.to_string(),
    }
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    if a == 0 || b == 0 {
        return Err(bad("complete-bipartite", "both part sizes >= 1", format!("{a}, {b}")));
    }
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(bad("cycle", "n >= 3", n));
    }
    let mut g = Graph::new(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

/// Path on `n` vertices (`n - 1` edges); `n >= 1`.
pub fn path(n: usize) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(bad("path", "n >= 1", n));
    }
    let mut g = Graph::new(n)?;
    for v in 0..n.saturating_sub(1) {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

/// Wheel over a rim cycle of length `rim` plus a hub adjacent to every rim
/// vertex; `rim + 1` vertices total. The hub is the last vertex.
pub fn wheel(rim: usize) -> Result<Graph, GenerateError> {
    if rim < 3 {
        return Err(bad("wheel", "rim length >= 3", rim));
    }
    let mut g = Graph::new(rim + 1)?;
    for v in 0..rim {
        g.add_edge(v, (v + 1) % rim)?;
        g.add_edge(v, rim)?;
    }
    Ok(g)
}

/// Erdős–Rényi `G(n, p)`: each of the `C(n,2)` pairs is an edge independently
/// with probability `p`, drawn in lexicographic pair order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("random", "0 <= p <= 1", p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Uniform random labeled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(bad("random-tree", "n >= 1", n));
    }
    let mut g = Graph::new(n)?;
    if n == 1 {
        return Ok(g);
    }
    if n == 2 {
        g.add_edge(0, 1)?;
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &a in &seq {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &a in &seq {
        let leaf = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&leaf);
        g.add_edge(leaf, a)?;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let mut last = leaves.into_iter();
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    g.add_edge(u, v)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert_eq!(cycle(4).unwrap().edge_count(), 4);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.n(), w4.edge_count()), (5, 8));
        assert_eq!(w4.degree(4).unwrap(), 4);
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn gnp_is_deterministic_and_extremes_work() {
        let a = gnp(8, 0.4, 12345).unwrap();
        let b = gnp(8, 0.4, 12345).unwrap();
        assert_eq!(a, b);
        let c = gnp(8, 0.4, 54321).unwrap();
        assert_ne!(a, c); // overwhelmingly likely for distinct seeds
        assert_eq!(gnp(6, 1.0, 7).unwrap().edge_count(), 15);
        assert_eq!(gnp(6, 0.0, 7).unwrap().edge_count(), 0);
        assert!(gnp(6, 1.5, 7).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..50 {
            let n = 1 + (seed as usize % 12);
            let t = random_tree(n, seed).unwrap();
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
            assert!(t.is_forest());
        }
        assert_eq!(random_tree(5, 9).unwrap(), random_tree(5, 9).unwrap());
    }
}
