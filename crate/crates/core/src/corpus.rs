//! Small graph families and seeded random graphs used by the checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let names = labels(n);
    let edges: Vec<(String, String)> = pairs
        .into_iter()
        .map(|(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    Graph::new(names, edges).expect("well-formed by construction")
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    from_pairs(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The star with `k` leaves around `v0`.
pub fn star(k: usize) -> Graph {
    from_pairs(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    from_pairs(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

pub fn edgeless(n: usize) -> Graph {
    from_pairs(n, [])
}

/// A graph on `n` vertices keeping each possible edge with probability 1/2.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    from_pairs(n, pairs)
}

/// `count` random graphs with between 1 and `max_vertices` vertices.
pub fn random_graphs(seed: u64, count: usize, max_vertices: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vertices);
            random_graph(&mut rng, n)
        })
        .collect()
}

/// Every graph on `n` labelled vertices with at most `max_edges` edges.
pub fn all_graphs(n: usize, max_edges: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        if mask.count_ones() as usize <= max_edges {
            out.push(from_pairs(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            ));
        }
    }
    out
}

/// The fixed corpus: `Γ_{p,q}` for `p + q <= 5`, paths, cycles and stars on
/// at most six vertices, and `random` seeded random graphs on at most six
/// vertices.
pub fn standard_corpus(seed: u64, random: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for p in 1..=4u64 {
        for q in 1..=5 - p {
            out.push((
                format!("gamma({p},{q})"),
                Graph::gamma(p, q, false).expect("p, q >= 1"),
            ));
        }
    }
    for n in 1..=6 {
        out.push((format!("path({n})"), path(n)));
    }
    for n in 3..=6 {
        out.push((format!("cycle({n})"), cycle(n)));
    }
    for k in 1..=5 {
        out.push((format!("star({k})"), star(k)));
    }
    for (i, g) in random_graphs(seed, random, 6).into_iter().enumerate() {
        out.push((format!("random#{i}"), g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(path(4).counts(), (4, 3));
        assert_eq!(cycle(5).counts(), (5, 5));
        assert_eq!(star(3).counts(), (4, 3));
        assert_eq!(complete(4).counts(), (4, 6));
        assert_eq!(all_graphs(3, 3).len(), 8);
        assert_eq!(all_graphs(4, 1).len(), 7);
        assert_eq!(random_graphs(7, 5, 6), random_graphs(7, 5, 6));
        assert_eq!(standard_corpus(1, 100).len(), 10 + 6 + 4 + 5 + 100);
    }
}
