//! Exhaustive automorphism search for small graphs.
//!
//! The search assigns vertices one at a time. Candidates are restricted to the
//! cell of the partition by `(degree, sorted neighbor degrees)`, and every
//! partial assignment must preserve adjacency with the vertices already
//! placed. Vertices are visited breadth first, starting each component at a
//! vertex of the smallest cell, so that almost every vertex has an already
//! placed neighbor and its candidates are drawn from that neighbor's image.
//!
//! The same engine serves the monoid, partial-group and poset modules: each
//! of them rebuilds an adjacency structure from its own operation table and
//! certifies every candidate independently.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{factorial, PermSet, Permutation};

/// Limits on the vertex count accepted by exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Limit for arbitrary graphs.
    pub plain_vertices: usize,
    /// Limit for graphs recognized as a star with a pendant tail.
    pub shaped_vertices: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            plain_vertices: 12,
            shaped_vertices: 5000,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            plain_vertices: usize::MAX,
            shaped_vertices: usize::MAX,
        }
    }

    pub(crate) fn admit(&self, adjacency: &[Vec<usize>], what: &'static str) -> Result<()> {
        let n = adjacency.len();
        if n <= self.plain_vertices
            || (n <= self.shaped_vertices && gamma_shape(adjacency).is_some())
        {
            return Ok(());
        }
        Err(Error::BudgetExceeded {
            what,
            size: n,
            limit: self.plain_vertices,
        })
    }
}

/// Parameters of a graph recognized as a star with `p` leaves and a pendant
/// path of `q` vertices, possibly with one extra isolated vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaShape {
    pub p: usize,
    pub q: usize,
    pub plus: bool,
}

/// Recognizes the star-with-tail shape with `p, q >= 2`. Only in that regime
/// is the automorphism group exactly the symmetric group on the leaves.
pub fn gamma_shape(adjacency: &[Vec<usize>]) -> Option<GammaShape> {
    let n = adjacency.len();
    let degree = |v: usize| adjacency[v].len();
    let isolated = (0..n).filter(|&v| degree(v) == 0).count();
    if isolated > 1 {
        return None;
    }
    let mut high = (0..n).filter(|&v| degree(v) >= 3);
    let center = high.next()?;
    if high.next().is_some() {
        return None;
    }
    let leaves = adjacency[center]
        .iter()
        .filter(|&&v| degree(v) == 1)
        .count();
    let mut rest = adjacency[center].iter().filter(|&&v| degree(v) != 1);
    let head = *rest.next()?;
    if rest.next().is_some() || degree(head) != 2 {
        return None;
    }
    let (mut prev, mut cur, mut q) = (center, head, 1);
    while degree(cur) == 2 {
        let next = if adjacency[cur][0] == prev {
            adjacency[cur][1]
        } else {
            adjacency[cur][0]
        };
        prev = cur;
        cur = next;
        q += 1;
        if q > n {
            return None;
        }
    }
    if degree(cur) != 1 || n != 1 + leaves + q + isolated {
        return None;
    }
    Some(GammaShape {
        p: leaves,
        q,
        plus: isolated == 1,
    })
}

fn degree_cells(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let keys: Vec<(usize, Vec<usize>)> = adjacency
        .iter()
        .map(|nbrs| {
            let mut ds: Vec<usize> = nbrs.iter().map(|&u| adjacency[u].len()).collect();
            ds.sort_unstable();
            (nbrs.len(), ds)
        })
        .collect();
    let mut ids = BTreeMap::new();
    for key in &keys {
        let next = ids.len();
        ids.entry(key.clone()).or_insert(next);
    }
    keys.iter().map(|k| ids[k]).collect()
}

/// Enumerates every adjacency-preserving bijection of the vertex set in a
/// deterministic order. `visit` receives the image array and returns `false`
/// to stop the search early. Neighbor lists must be sorted.
pub(crate) fn for_each_automorphism(
    adjacency: &[Vec<usize>],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = adjacency.len();
    if n == 0 {
        visit(&[]);
        return;
    }
    let cell = degree_cells(adjacency);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); cell.iter().max().unwrap() + 1];
    for v in 0..n {
        members[cell[v]].push(v);
    }

    // Breadth-first visiting order; each component starts at a vertex of the
    // smallest cell.
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![None; n];
    let mut placed = vec![false; n];
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (members[cell[v]].len(), v));
    for root in roots {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &adjacency[v] {
                if !placed[u] {
                    placed[u] = true;
                    anchor[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut chosen: Vec<Option<usize>> = vec![None; n];
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cursor = vec![0usize; n];

    let candidates_for = |v: usize, image: &[usize], used: &[bool]| -> Vec<usize> {
        let pool: &[usize] = match anchor[v] {
            Some(u) => &adjacency[image[u]],
            None => &members[cell[v]],
        };
        pool.iter()
            .copied()
            .filter(|&w| cell[w] == cell[v] && !used[w])
            .collect()
    };
    let consistent = |v: usize, w: usize, image: &[usize], used: &[bool]| -> bool {
        let mut placed_neighbors = 0;
        for &u in &adjacency[v] {
            if image[u] != usize::MAX {
                placed_neighbors += 1;
                if adjacency[w].binary_search(&image[u]).is_err() {
                    return false;
                }
            }
        }
        adjacency[w].iter().filter(|&&x| used[x]).count() == placed_neighbors
    };

    let mut level = 0;
    candidates[0] = candidates_for(order[0], &image, &used);
    loop {
        let v = order[level];
        if let Some(w) = chosen[level].take() {
            used[w] = false;
            image[v] = usize::MAX;
        }
        if cursor[level] < candidates[level].len() {
            let w = candidates[level][cursor[level]];
            cursor[level] += 1;
            if !consistent(v, w, &image, &used) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            chosen[level] = Some(w);
            if level + 1 == n {
                if !visit(&image) {
                    return;
                }
                continue;
            }
            level += 1;
            candidates[level] = candidates_for(order[level], &image, &used);
            cursor[level] = 0;
        } else if level == 0 {
            return;
        } else {
            level -= 1;
        }
    }
}

/// All automorphisms of `graph` under the default [`SearchBudget`].
pub fn graph_automorphisms(graph: &Graph) -> Result<PermSet> {
    graph_automorphisms_with(graph, SearchBudget::default())
}

pub fn graph_automorphisms_with(graph: &Graph, budget: SearchBudget) -> Result<PermSet> {
    budget.admit(graph.adjacency(), "graph")?;
    let mut group = PermSet::new(graph.vertex_count());
    for_each_automorphism(graph.adjacency(), &mut |images| {
        group
            .insert(Permutation::from_vec_unchecked(images.to_vec()))
            .expect("degree matches");
        true
    });
    Ok(group)
}

/// `|Aut(graph)|`. Star-with-tail graphs are answered from their shape as
/// `p!`; everything else is counted by backtracking without storing the group.
pub fn graph_automorphism_count(graph: &Graph) -> BigUint {
    match gamma_shape(graph.adjacency()) {
        Some(shape) => factorial(shape.p as u64),
        None => backtracking_count(graph),
    }
}

/// `|Aut(graph)|` by backtracking alone, with no shape shortcut.
pub fn backtracking_count(graph: &Graph) -> BigUint {
    let mut count = BigUint::from(0u32);
    for_each_automorphism(graph.adjacency(), &mut |_| {
        count += 1u32;
        true
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edgeless(n: usize) -> Graph {
        Graph::new(
            (0..n).map(|i| format!("v{i}")),
            Vec::<(String, String)>::new(),
        )
        .unwrap()
    }

    fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
        g.edges()
            .iter()
            .all(|&(a, b)| g.has_edge(p.apply(a), p.apply(b)))
    }

    #[test]
    fn small_families() {
        assert_eq!(
            graph_automorphisms(&Graph::gamma(3, 2, false).unwrap())
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            graph_automorphisms(&Graph::gamma(2, 3, false).unwrap())
                .unwrap()
                .order(),
            2
        );
        let edge = Graph::new(["a", "b"], [("a", "b")]).unwrap();
        assert_eq!(graph_automorphisms(&edge).unwrap().order(), 2);
        assert_eq!(graph_automorphisms(&Graph::empty()).unwrap().order(), 1);
        assert_eq!(graph_automorphism_count(&edgeless(4)), BigUint::from(24u32));
    }

    #[test]
    fn returned_group_is_sound_and_closed() {
        let g = Graph::gamma(3, 2, true).unwrap();
        let group = graph_automorphisms(&g).unwrap();
        assert!(group.is_group());
        for p in &group {
            assert!(is_automorphism(&g, p));
            for v in 0..g.vertex_count() {
                assert_eq!(g.degree(v), g.degree(p.apply(v)));
            }
        }
        assert!(group
            .iter()
            .all(|p| p.apply(0) == 0 && (4..7).all(|v| p.apply(v) == v)));
        assert!(group.is_symmetric_on(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn shape_recognition() {
        let g = Graph::gamma(4, 3, true).unwrap();
        assert_eq!(
            gamma_shape(g.adjacency()),
            Some(GammaShape {
                p: 4,
                q: 3,
                plus: true
            })
        );
        assert_eq!(
            gamma_shape(Graph::gamma(2, 1, false).unwrap().adjacency()),
            None
        );
        assert_eq!(
            gamma_shape(Graph::gamma(1, 4, false).unwrap().adjacency()),
            None
        );
        assert_eq!(gamma_shape(edgeless(3).adjacency()), None);
        // Cycle through the center: not a pendant tail.
        let cyc = Graph::new(
            ["c", "a", "b", "x", "y"],
            [("c", "a"), ("c", "b"), ("c", "x"), ("x", "y"), ("y", "c")],
        )
        .unwrap();
        assert_eq!(gamma_shape(cyc.adjacency()), None);
    }

    #[test]
    fn fast_path_agrees_with_backtracking() {
        for p in 1..=9u64 {
            for q in 1..=9u64 {
                if p + q + 1 > 12 {
                    continue;
                }
                for plus in [false, true] {
                    let g = Graph::gamma(p, q, plus).unwrap();
                    assert_eq!(
                        graph_automorphism_count(&g),
                        backtracking_count(&g),
                        "{p} {q} {plus}"
                    );
                }
            }
        }
    }

    #[test]
    fn large_shaped_graphs() {
        let g = Graph::gamma(6, 232, false).unwrap();
        assert_eq!(graph_automorphism_count(&g), BigUint::from(720u32));
        assert_eq!(graph_automorphisms(&g).unwrap().order(), 720);
        assert_eq!(
            graph_automorphism_count(&Graph::gamma(2, 2, true).unwrap()),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let path: Vec<(String, String)> = (0..19)
            .map(|i| (format!("v{i}"), format!("v{}", i + 1)))
            .collect();
        let g = Graph::new((0..20).map(|i| format!("v{i}")), path).unwrap();
        assert!(matches!(
            graph_automorphisms(&g),
            Err(Error::BudgetExceeded { .. })
        ));
        let roomy = SearchBudget {
            plain_vertices: 20,
            ..SearchBudget::default()
        };
        assert_eq!(graph_automorphisms_with(&g, roomy).unwrap().order(), 2);
    }
}
