//! Graph generators: Erdős–Rényi random graphs and a few named graphs.

use rand::Rng;

use crate::error::{invalid_param, Result};
use crate::graph::Graph;
use crate::seed::RngSeed;

/// G(n, p): each of the `n(n-1)/2` pairs is an edge independently with
/// probability `p`.
pub fn gen_er_graph(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid_param(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unique(n, edges))
}

/// Standard small graphs: `paw`, `cycle(m)`, `complete(m)`, `star(m)`
/// (`K_{1,m}`, center 0) and `path(m)` (`m` vertices).
///
/// The paw numbers its pendant 0, the center 1 and the two remaining triangle
/// vertices 2 and 3.
pub fn named_graph(name: &str) -> Result<Graph> {
    let name = name.trim().to_ascii_lowercase();
    if name == "paw" {
        return Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]);
    }
    let (kind, arg) = name
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(|| invalid_param(format!("unknown graph {name:?}")))?;
    let m: usize = arg
        .trim()
        .parse()
        .map_err(|_| invalid_param(format!("invalid size in {name:?}")))?;
    match kind.trim() {
        "cycle" if m >= 3 => Graph::new(m, (0..m).map(|i| (i, (i + 1) % m))),
        "cycle" => Err(invalid_param("a cycle needs at least 3 vertices")),
        "complete" => Graph::new(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)))),
        "star" => Graph::new(m + 1, (1..=m).map(|v| (0, v))),
        "path" => Graph::new(m, (1..m).map(|v| (v - 1, v))),
        other => Err(invalid_param(format!("unknown graph family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        let g = gen_er_graph(12, 0.0, RngSeed(1)).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = gen_er_graph(12, 1.0, RngSeed(1)).unwrap();
        assert_eq!(g.edge_count(), 66);
        assert!(gen_er_graph(5, 1.5, RngSeed(1)).is_err());
        assert!(gen_er_graph(5, -0.1, RngSeed(1)).is_err());
    }

    #[test]
    fn er_is_reproducible() {
        let a = gen_er_graph(30, 0.3, RngSeed(9)).unwrap();
        let b = gen_er_graph(30, 0.3, RngSeed(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn er_edge_count_concentrates() {
        // Binomial(1770, 0.3): mean 531, sd ~19.28
        let mean = 1770.0 * 0.3;
        let sd = (1770.0f64 * 0.3 * 0.7).sqrt();
        for seed in 0..100 {
            let m = gen_er_graph(60, 0.3, RngSeed(seed)).unwrap().edge_count() as f64;
            assert!((m - mean).abs() <= 4.0 * sd, "seed {seed}: {m} edges");
        }
    }

    #[test]
    fn named_graphs() {
        let paw = named_graph("paw").unwrap();
        let mut degs = paw.degrees();
        degs.sort();
        assert_eq!((paw.vertex_count(), paw.edge_count(), degs), (4, 4, vec![1, 2, 2, 3]));

        let c5 = named_graph("cycle(5)").unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert!(c5.degrees().iter().all(|&d| d == 2));

        let k4 = named_graph("complete(4)").unwrap();
        assert_eq!((k4.edge_count(), k4.max_degree()), (6, 3));

        let star = named_graph("star(4)").unwrap();
        assert_eq!((star.vertex_count(), star.max_degree()), (5, 4));

        let path = named_graph("path(3)").unwrap();
        assert_eq!(path.edge_count(), 2);

        assert!(named_graph("petersen").is_err());
        assert!(named_graph("cycle(2)").is_err());
        assert!(named_graph("cycle(x)").is_err());
    }
}
