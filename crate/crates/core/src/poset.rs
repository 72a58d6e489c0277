//! The face poset `P(Γ)`: singletons `{x}` and edges `{x,y}` ordered by
//! inclusion.
//!
//! Elements are laid out as the singletons in vertex order followed by the
//! edges in canonical order. The relation is a dense boolean matrix so that
//! every axiom check is exhaustive.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::aut::{for_each_automorphism, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMap};
use crate::monoid::next_permutation;
use crate::perm::{PermSet, Permutation};
use crate::report::AxiomReport;

const HEADER: &str = "autoratio-poset v1";

/// Largest poset accepted by [`poset_automorphisms_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 8;

/// What an element of `P(Γ)` stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FaceTag {
    Singleton(String),
    EdgeFace(String, String),
}

impl FaceTag {
    pub fn label(&self) -> String {
        match self {
            FaceTag::Singleton(x) => format!("{{{x}}}"),
            FaceTag::EdgeFace(x, y) => format!("{{{x},{y}}}"),
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, FaceTag::Singleton(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePoset {
    tags: Vec<FaceTag>,
    leq: Vec<bool>,
}

impl FacePoset {
    /// A tagged relation; `relation[i][j]` means `i ≤ j`. Nothing beyond the
    /// shape is validated, see [`check_poset_axioms`].
    pub fn new(tags: Vec<FaceTag>, relation: Vec<Vec<bool>>) -> Result<FacePoset> {
        let n = tags.len();
        if relation.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: relation.len(),
            });
        }
        let mut leq = Vec::with_capacity(n * n);
        for row in relation {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            leq.extend(row);
        }
        Ok(FacePoset { tags, leq })
    }

    pub fn size(&self) -> usize {
        self.tags.len()
    }

    pub fn tags(&self) -> &[FaceTag] {
        &self.tags
    }

    pub fn label(&self, i: usize) -> String {
        self.tags[i].label()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn set_leq(&mut self, a: usize, b: usize, value: bool) {
        let n = self.size();
        self.leq[a * n + b] = value;
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| (0..self.size()).all(|b| !self.lt(a, b)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| (0..self.size()).all(|b| !self.lt(b, a)))
            .collect()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether `phi` preserves and reflects the order.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        let n = self.size();
        phi.len() == n
            && Permutation::new(phi.to_vec()).is_ok()
            && (0..n).all(|a| (0..n).all(|b| self.leq(a, b) == self.leq(phi[a], phi[b])))
    }

    /// Element tags followed by the covering pairs, as indices.
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER}\nelements: {}\n", self.size());
        for t in &self.tags {
            match t {
                FaceTag::Singleton(x) => {
                    let _ = writeln!(out, "vertex {x}");
                }
                FaceTag::EdgeFace(x, y) => {
                    let _ = writeln!(out, "edge {x} {y}");
                }
            }
        }
        out.push_str("covers:\n");
        for (a, b) in self.covering_pairs() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    /// Reads the format written by [`FacePoset::to_text`]; the order is the
    /// reflexive transitive closure of the listed covers.
    pub fn from_text(text: &str) -> Result<FacePoset> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((i, other)) => {
                return Err(Error::parse(
                    i,
                    format!("expected `{HEADER}`, found `{other}`"),
                ))
            }
            None => return Err(Error::parse(1, "empty input")),
        }
        let mut tags = Vec::new();
        let mut covers = Vec::new();
        let mut in_covers = false;
        for (ln, line) in lines {
            if line.starts_with("elements:") {
                continue;
            }
            if line == "covers:" {
                in_covers = true;
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            if in_covers {
                let pair = match words[..] {
                    [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                    _ => None,
                };
                covers.push((ln, pair.ok_or_else(|| Error::parse(ln, "expected `I J`"))?));
                continue;
            }
            match words[..] {
                ["vertex", x] => tags.push(FaceTag::Singleton(x.into())),
                ["edge", x, y] => tags.push(FaceTag::EdgeFace(x.into(), y.into())),
                _ => return Err(Error::parse(ln, format!("unexpected line `{line}`"))),
            }
        }
        let n = tags.len();
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for (ln, (a, b)) in covers {
            if a >= n || b >= n {
                return Err(Error::parse(ln, "cover index out of range"));
            }
            rel[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        FacePoset::new(tags, rel)
    }
}

/// `P(graph)`.
pub fn face_poset(graph: &Graph) -> FacePoset {
    let nv = graph.vertex_count();
    let mut tags: Vec<FaceTag> = graph
        .vertices()
        .iter()
        .map(|v| FaceTag::Singleton(v.clone()))
        .collect();
    tags.extend(
        graph
            .edge_labels()
            .map(|(a, b)| FaceTag::EdgeFace(a.to_string(), b.to_string())),
    );
    let n = tags.len();
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        rel[a][nv + e] = true;
        rel[b][nv + e] = true;
    }
    FacePoset::new(tags, rel).expect("square relation")
}

/// Order axioms plus the structural facts of a face poset: maximal elements
/// are the edges and isolated vertices, strict relations run from a vertex
/// to an edge containing it, there is no chain of length two, and the size
/// is `|V| + |E|`.
pub fn check_poset_axioms(p: &FacePoset) -> AxiomReport {
    let n = p.size();
    let mut report = AxiomReport::default();
    let l = |i: usize| p.label(i);

    let reflexive = (0..n).find(|&a| !p.leq(a, a)).map(l);
    report.record("reflexive", reflexive);

    let antisym = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && p.leq(a, b) && p.leq(b, a))
        .map(|(a, b)| format!("({}, {})", l(a), l(b)));
    report.record("antisymmetric", antisym);

    let transitive = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                    return Some(format!("({}, {}, {})", l(a), l(b), l(c)));
                }
            }
        }
        None
    });
    report.record("transitive", transitive);

    let strict = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| {
            p.lt(a, b)
                && !match (&p.tags[a], &p.tags[b]) {
                    (FaceTag::Singleton(x), FaceTag::EdgeFace(u, v)) => x == u || x == v,
                    _ => false,
                }
        })
        .map(|(a, b)| format!("{} < {}", l(a), l(b)));
    report.record("strict relations are vertex in edge", strict);

    let isolated = |a: usize| (0..n).all(|b| b == a || (!p.leq(a, b) && !p.leq(b, a)));
    let maximal = p.maximal_elements();
    let expected: Vec<usize> = (0..n)
        .filter(|&a| !p.tags[a].is_singleton() || isolated(a))
        .collect();
    let max_check = (maximal != expected).then(|| {
        let names: Vec<String> = maximal.iter().map(|&a| l(a)).collect();
        format!("maximal elements are {}", names.join(" "))
    });
    report.record(
        "maximal elements are edges and isolated vertices",
        max_check,
    );

    let chain = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            if p.lt(a, b) {
                if let Some(c) = (0..n).find(|&c| p.lt(b, c)) {
                    return Some(format!("{} < {} < {}", l(a), l(b), l(c)));
                }
            }
        }
        None
    });
    report.record("height at most 1", chain);

    let distinct: std::collections::HashSet<&FaceTag> = p.tags.iter().collect();
    let size =
        (distinct.len() != n).then(|| format!("{n} elements, {} distinct faces", distinct.len()));
    report.record("size = |V| + |E|", size);
    report
}

/// All automorphisms of a face poset (default budget).
pub fn poset_automorphisms(p: &FacePoset) -> Result<PermSet> {
    poset_automorphisms_with(p, SearchBudget::default())
}

/// Vertices are read off the relation as the elements with nothing strictly
/// below them, and two are adjacent when they share an upper bound. Every
/// incidence-preserving vertex bijection yields a candidate whose edge images
/// are the common upper bounds of the image vertices; each candidate is then
/// certified against the whole relation in both directions.
pub fn poset_automorphisms_with(p: &FacePoset, budget: SearchBudget) -> Result<PermSet> {
    let n = p.size();
    let bottoms: Vec<usize> = p.minimal_elements();
    let mut slot = vec![usize::MAX; n];
    for (i, &a) in bottoms.iter().enumerate() {
        slot[a] = i;
    }
    let below: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| p.lt(b, a)).map(|b| slot[b]).collect())
        .collect();
    let mut adjacency = vec![Vec::new(); bottoms.len()];
    let mut upper = std::collections::HashMap::new();
    for (a, lows) in below.iter().enumerate() {
        if let [x, y] = lows[..] {
            if x != usize::MAX && y != usize::MAX {
                adjacency[x].push(y);
                adjacency[y].push(x);
                upper.insert((x.min(y), x.max(y)), a);
            }
        }
    }
    budget.admit(&adjacency, "poset minimal elements")?;

    let mut candidates = Vec::new();
    for_each_automorphism(&adjacency, &mut |sigma| {
        let mut phi = vec![usize::MAX; n];
        for (i, &a) in bottoms.iter().enumerate() {
            phi[a] = bottoms[sigma[i]];
        }
        for (a, lows) in below.iter().enumerate() {
            if let [x, y] = lows[..] {
                let (s, t) = (sigma[x], sigma[y]);
                if let Some(&b) = upper.get(&(s.min(t), s.max(t))) {
                    phi[a] = b;
                }
            }
        }
        if phi.iter().all(|&x| x != usize::MAX) {
            candidates.push(phi);
        }
        true
    });
    let certified: Vec<Vec<usize>> = candidates
        .into_par_iter()
        .filter(|phi| p.is_automorphism(phi))
        .collect();
    let mut group = PermSet::new(n);
    for phi in certified {
        group.insert(Permutation::new(phi)?)?;
    }
    Ok(group)
}

/// Every bijection that preserves and reflects the order; at most
/// [`BRUTEFORCE_LIMIT`] elements.
pub fn poset_automorphisms_bruteforce(p: &FacePoset) -> Result<PermSet> {
    let n = p.size();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::OracleLimit {
            what: "poset",
            size: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let mut phi: Vec<usize> = (0..n).collect();
    let mut group = PermSet::new(n);
    loop {
        if p.is_automorphism(&phi) {
            group.insert(Permutation::new(phi.clone())?)?;
        }
        if !next_permutation(&mut phi) {
            break;
        }
    }
    Ok(group)
}

/// `P(f)`: `{x} ↦ {f(x)}` and `{x,y} ↦ {f(x),f(y)}`, as indices into
/// [`face_poset`] of source and target, checked to be order preserving.
pub fn induced_poset_map(f: &GraphMap) -> Result<Vec<usize>> {
    f.check_homomorphism()?;
    let (src, dst) = (f.source(), f.target());
    let nv = src.vertex_count();
    let mut map: Vec<usize> = (0..nv).map(|v| f.image(v)).collect();
    for e in 0..src.edge_count() {
        let image = f.edge_image(e).expect("homomorphisms send edges to edges");
        map.push(dst.vertex_count() + image);
    }
    let (ps, pt) = (face_poset(src), face_poset(dst));
    for a in 0..ps.size() {
        for b in 0..ps.size() {
            if ps.leq(a, b) && !pt.leq(map[a], map[b]) {
                return Err(Error::NotHomomorphism(ps.label(a), ps.label(b)));
            }
        }
    }
    Ok(map)
}

/// The automorphism of `P(graph)` induced by a graph automorphism.
pub fn poset_extension(graph: &Graph, sigma: &Permutation) -> Result<Permutation> {
    let f = GraphMap::new(graph, graph, sigma.images().to_vec())?;
    f.check_injective()?;
    if f.check_homomorphism().is_err() {
        return Err(Error::NotAutomorphism);
    }
    Ok(Permutation::from_vec_unchecked(induced_poset_map(&f)?))
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

    #[test]
    fn construction() {
        let p = face_poset(&Graph::new(["x", "y"], [("x", "y")]).unwrap());
        assert_eq!(p.size(), 3);
        assert!(p.leq(0, 2) && p.leq(1, 2) && !p.leq(0, 1) && !p.leq(2, 0));
        assert_eq!(face_poset(&Graph::gamma(3, 2, false).unwrap()).size(), 11);
        let anti = face_poset(&edgeless(3));
        assert_eq!(anti.maximal_elements(), [0, 1, 2]);
        assert_eq!(anti.minimal_elements(), [0, 1, 2]);
    }

    #[test]
    fn axioms() {
        let p = face_poset(&Graph::gamma(2, 2, false).unwrap());
        let report = check_poset_axioms(&p);
        assert!(report.all_passed(), "{report}");

        let plus = face_poset(&Graph::gamma(2, 2, true).unwrap());
        assert!(check_poset_axioms(&plus).all_passed());
        let maximal: Vec<String> = plus
            .maximal_elements()
            .into_iter()
            .map(|a| plus.label(a))
            .collect();
        assert_eq!(
            maximal,
            ["{c0'}", "{c0,c1}", "{c0,c2}", "{c0,d1}", "{d1,d2}"]
        );

        let mut broken = p.clone();
        broken.set_leq(5, 0, true);
        let report = check_poset_axioms(&broken);
        let anti = report.get("antisymmetric").unwrap();
        assert!(!anti.passed);
        assert_eq!(anti.witness.as_deref(), Some("({c0}, {c0,c1})"));

        let mut chain = p.clone();
        chain.set_leq(5, 6, true);
        chain.set_leq(0, 6, true);
        assert!(
            !check_poset_axioms(&chain)
                .get("height at most 1")
                .unwrap()
                .passed
        );
    }

    #[test]
    fn automorphisms() {
        let p = face_poset(&Graph::gamma(3, 2, false).unwrap());
        assert_eq!(poset_automorphisms(&p).unwrap().order(), 6);
        let k3 =
            face_poset(&Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap());
        assert_eq!(poset_automorphisms(&k3).unwrap().order(), 6);
        assert_eq!(
            poset_automorphisms_bruteforce(&k3).unwrap(),
            poset_automorphisms(&k3).unwrap()
        );
        let anti = face_poset(&edgeless(3));
        assert_eq!(poset_automorphisms(&anti).unwrap().order(), 6);
        assert_eq!(poset_automorphisms_bruteforce(&anti).unwrap().order(), 6);
        assert!(matches!(
            poset_automorphisms_bruteforce(&p),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn induced_maps() {
        let g = Graph::gamma(2, 2, false).unwrap();
        let id = induced_poset_map(&GraphMap::identity(&g)).unwrap();
        assert_eq!(id, (0..9).collect::<Vec<_>>());
        let swap = poset_extension(&g, &Permutation::transposition(5, 1, 2)).unwrap();
        assert!(face_poset(&g).is_automorphism(swap.images()));
        assert!(!swap.is_identity());
        assert!(matches!(
            poset_extension(&g, &Permutation::transposition(5, 0, 1)),
            Err(Error::NotAutomorphism)
        ));
    }

    #[test]
    fn text_round_trip() {
        let p = face_poset(&Graph::gamma(2, 1, true).unwrap());
        assert_eq!(FacePoset::from_text(&p.to_text()).unwrap(), p);
        assert!(FacePoset::from_text("autoratio-poset v1\nvertex a\ncovers:\n0 7\n").is_err());
    }
}
