//! Finite monoids given by Cayley tables, and the commutative monoid
//! `M(Γ) = V ⊔ E ⊔ {0, 1}` attached to a graph.
//!
//! In `M(Γ)`, `1` is neutral, `0` absorbs everything except `1`, every vertex
//! is idempotent, distinct vertices multiply to `0`, a vertex times an edge is
//! the edge when the vertex is an endpoint and `0` otherwise, and any two
//! edges multiply to `0`. Elements are laid out as `[0, 1, vertices, edges]`.
//!
//! These rules are associative only on edgeless graphs: for an edge
//! `e = {x,y}`, `(x*y)*e = 0` while `x*(y*e) = e`. The table is built as
//! stated anyway and [`check_monoid_axioms`] reports the failure. Automorphisms
//! are taken to be table-preserving bijections fixing `1`, which is the
//! monoid notion whenever the table is associative.
//!
//! Monoid automorphisms fix `0` and `1` and preserve idempotents, so they
//! permute vertices among themselves and edges among themselves; incidence
//! `x * e != 0` then pins the edge images down from the vertex images. The
//! structured search enumerates incidence-preserving vertex bijections and
//! certifies each resulting element permutation against the whole table.
//! [`monoid_automorphisms_bruteforce`] makes no such assumption and is used
//! to cross-check it on small inputs.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::aut::{for_each_automorphism, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMap};
use crate::perm::{PermSet, Permutation};
use crate::report::AxiomReport;

const HEADER: &str = "autoratio-monoid v1";

/// Largest monoid accepted by [`monoid_automorphisms_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 9;
/// Largest monoid accepted by [`finite_monoid_automorphisms`].
pub const UNTAGGED_LIMIT: usize = 10;

/// A finite magma with a distinguished element, given by its full table.
/// [`check_monoid_axioms`] decides whether it is actually a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = labels.len();
        if table.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: table.len(),
            });
        }
        if identity >= n {
            return Err(Error::UnknownElement(format!("#{identity}")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= n) {
                return Err(Error::UnknownElement(format!("#{bad}")));
            }
            flat.extend(row);
        }
        Ok(FiniteMonoid {
            labels,
            table: flat,
            identity,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    /// Overwrites one table cell.
    pub fn set_product(&mut self, a: usize, b: usize, value: usize) {
        let n = self.size();
        self.table[a * n + b] = value;
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// Whether `phi` (an element permutation) satisfies `phi(ab) = phi(a)phi(b)`
    /// for all `a, b` and fixes the identity.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        let n = self.size();
        phi.len() == n
            && phi[self.identity] == self.identity
            && (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }

    pub fn to_text(&self) -> String {
        let tags: Vec<String> = self.labels.iter().map(|l| format!("element {l}")).collect();
        self.render(&tags)
    }

    fn render(&self, tag_lines: &[String]) -> String {
        let n = self.size();
        let mut out = format!("{HEADER}\n{} {}\n", n, self.identity);
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for t in tag_lines {
            let _ = writeln!(out, "{t}");
        }
        out
    }
}

/// What an element of `M(Γ)` stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementTag {
    Zero,
    One,
    Vertex(String),
    Edge(String, String),
}

impl ElementTag {
    fn line(&self) -> String {
        match self {
            ElementTag::Zero => "zero".into(),
            ElementTag::One => "one".into(),
            ElementTag::Vertex(v) => format!("vertex {v}"),
            ElementTag::Edge(a, b) => format!("edge {a} {b}"),
        }
    }
}

/// `M(Γ)`: a finite monoid with every element tagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMonoid {
    base: FiniteMonoid,
    tags: Vec<ElementTag>,
}

impl GraphMonoid {
    /// Wraps a table and its tags; checks that the tags describe a graph
    /// (one zero, one at the identity, edges between listed vertices).
    pub fn from_parts(base: FiniteMonoid, tags: Vec<ElementTag>) -> Result<Self> {
        if tags.len() != base.size() {
            return Err(Error::DimensionMismatch {
                expected: base.size(),
                found: tags.len(),
            });
        }
        let gm = GraphMonoid { base, tags };
        if gm.tags.iter().filter(|t| **t == ElementTag::Zero).count() != 1
            || gm.tags[gm.base.identity] != ElementTag::One
            || gm.tags.iter().filter(|t| **t == ElementTag::One).count() != 1
        {
            return Err(Error::parse(
                0,
                "tags need exactly one zero and one `one` at the identity",
            ));
        }
        gm.underlying_graph()?;
        Ok(gm)
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn tags(&self) -> &[ElementTag] {
        &self.tags
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn zero(&self) -> usize {
        self.tags
            .iter()
            .position(|t| *t == ElementTag::Zero)
            .unwrap()
    }

    pub fn one(&self) -> usize {
        self.base.identity
    }

    pub fn vertex_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| matches!(self.tags[a], ElementTag::Vertex(_)))
            .collect()
    }

    pub fn edge_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| matches!(self.tags[a], ElementTag::Edge(..)))
            .collect()
    }

    /// The graph the tags describe.
    pub fn underlying_graph(&self) -> Result<Graph> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for t in &self.tags {
            match t {
                ElementTag::Vertex(v) => vertices.push(v.clone()),
                ElementTag::Edge(a, b) => edges.push((a.clone(), b.clone())),
                _ => {}
            }
        }
        let g = Graph::new(
            vertices,
            edges.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        if g.edge_count() != edges.len() {
            return Err(Error::parse(0, "duplicate edge tag"));
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let tags: Vec<String> = self.tags.iter().map(ElementTag::line).collect();
        self.base.render(&tags)
    }
}

/// A Cayley table read from text: tagged as `M(Γ)` when every tag line is a
/// graph tag, plain otherwise.
#[derive(Clone, Debug)]
pub enum ParsedMonoid {
    Graph(GraphMonoid),
    Plain(FiniteMonoid),
}

/// Parses the Cayley table format: a version header, `n identity`, `n` rows
/// of `n` indices, then one tag line per element (`zero`, `one`,
/// `vertex X`, `edge X Y` or `element LABEL`).
pub fn parse_cayley(text: &str) -> Result<ParsedMonoid> {
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
    let (ln, head) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing size line"))?;
    let nums: Vec<usize> = head
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::parse(ln, format!("bad integer `{t}`")))
        })
        .collect::<Result<_>>()?;
    let [n, identity] = nums[..] else {
        return Err(Error::parse(ln, "expected `n identity_index`"));
    };
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(ln, "missing table row"))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(ln, format!("bad integer `{t}`")))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    let mut tags = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut plain = false;
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(ln, "missing tag line"))?;
        let words: Vec<&str> = line.split_whitespace().collect();
        let tag = match words[..] {
            ["zero"] => Some(ElementTag::Zero),
            ["one"] => Some(ElementTag::One),
            ["vertex", v] => Some(ElementTag::Vertex(v.into())),
            ["edge", a, b] => Some(ElementTag::Edge(a.into(), b.into())),
            ["element", l] => {
                plain = true;
                labels.push(l.to_string());
                None
            }
            _ => return Err(Error::parse(ln, format!("bad tag line `{line}`"))),
        };
        if let Some(t) = tag {
            labels.push(tag_label(&t));
            tags.push(t);
        }
    }
    if let Some((ln, extra)) = lines.next() {
        return Err(Error::parse(
            ln,
            format!("unexpected trailing line `{extra}`"),
        ));
    }
    let base = FiniteMonoid::new(labels, rows, identity)?;
    if plain {
        Ok(ParsedMonoid::Plain(base))
    } else {
        Ok(ParsedMonoid::Graph(GraphMonoid::from_parts(base, tags)?))
    }
}

fn tag_label(t: &ElementTag) -> String {
    match t {
        ElementTag::Zero => "0".into(),
        ElementTag::One => "1".into(),
        ElementTag::Vertex(v) => v.clone(),
        ElementTag::Edge(a, b) => format!("{{{a},{b}}}"),
    }
}

/// Builds `M(Γ)`.
pub fn monoid_from_graph(graph: &Graph) -> GraphMonoid {
    let nv = graph.vertex_count();
    let n = nv + graph.edge_count() + 2;
    let (zero, one) = (0, 1);
    let vertex = |v: usize| 2 + v;
    let edge = |e: usize| 2 + nv + e;

    let mut tags = vec![ElementTag::Zero, ElementTag::One];
    tags.extend(
        graph
            .vertices()
            .iter()
            .map(|v| ElementTag::Vertex(v.clone())),
    );
    tags.extend(
        graph
            .edge_labels()
            .map(|(a, b)| ElementTag::Edge(a.to_string(), b.to_string())),
    );
    let labels = tags.iter().map(tag_label).collect();

    let mut table = vec![vec![zero; n]; n];
    for a in 0..n {
        table[one][a] = a;
        table[a][one] = a;
    }
    for v in 0..nv {
        table[vertex(v)][vertex(v)] = vertex(v);
    }
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        for x in [a, b] {
            table[vertex(x)][edge(e)] = edge(e);
            table[edge(e)][vertex(x)] = edge(e);
        }
    }
    let base = FiniteMonoid::new(labels, table, one).expect("table is well formed");
    GraphMonoid { base, tags }
}

/// Associativity and the identity laws, exhaustively.
pub fn check_monoid_axioms(m: &FiniteMonoid) -> AxiomReport {
    let n = m.size();
    let mut report = AxiomReport::default();
    let e = m.identity();
    let identity = (0..n)
        .find(|&a| m.mul(e, a) != a || m.mul(a, e) != a)
        .map(|a| format!("identity {} fails on {}", m.label(e), m.label(a)));
    report.record("identity law", identity);
    let mut assoc = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let ab = m.mul(a, b);
            for c in 0..n {
                if m.mul(ab, c) != m.mul(a, m.mul(b, c)) {
                    assoc = Some(format!("({}, {}, {})", m.label(a), m.label(b), m.label(c)));
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", assoc);
    report
}

fn first_failure(n: usize, mut bad: impl FnMut(usize) -> Option<String>) -> Option<String> {
    (0..n).find_map(&mut bad)
}

/// The monoid axioms plus the structural properties of `M(Γ)`: commutativity,
/// `0` absorbing off `1`, idempotents off `{0, 1}` are the vertices, nonzero
/// square-zero elements are the edges, `x * e != 0` iff `x ∈ e`, and
/// `|M| = |V| + |E| + 2`.
pub fn check_graph_monoid(gm: &GraphMonoid) -> AxiomReport {
    let m = &gm.base;
    let n = m.size();
    let (zero, one) = (gm.zero(), gm.one());
    let mut report = check_monoid_axioms(m);

    let comm = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| m.mul(a, b) != m.mul(b, a))
        .map(|(a, b)| format!("({}, {})", m.label(a), m.label(b)));
    report.record("commutative", comm);

    let absorbing = first_failure(n, |a| {
        (a != one && (m.mul(zero, a) != zero || m.mul(a, zero) != zero))
            .then(|| m.label(a).to_string())
    });
    report.record("zero absorbing off one", absorbing);

    let idempotents = first_failure(n, |a| {
        let is_vertex = matches!(gm.tags[a], ElementTag::Vertex(_));
        (a != zero && a != one && m.is_idempotent(a) != is_vertex).then(|| m.label(a).to_string())
    });
    report.record("idempotents are vertices", idempotents);

    let square_zero = first_failure(n, |a| {
        let is_edge = matches!(gm.tags[a], ElementTag::Edge(..));
        (a != zero && (m.mul(a, a) == zero) != is_edge).then(|| m.label(a).to_string())
    });
    report.record("square-zero elements are edges", square_zero);

    let mut incidence = None;
    'inc: for x in gm.vertex_elements() {
        for e in gm.edge_elements() {
            let ElementTag::Vertex(xl) = &gm.tags[x] else {
                unreachable!()
            };
            let ElementTag::Edge(a, b) = &gm.tags[e] else {
                unreachable!()
            };
            if (m.mul(x, e) != zero) != (xl == a || xl == b) {
                incidence = Some(format!("({}, {})", m.label(x), m.label(e)));
                break 'inc;
            }
        }
    }
    report.record("x * e nonzero iff x in e", incidence);

    let (nv, ne) = (gm.vertex_elements().len(), gm.edge_elements().len());
    report.record(
        "size = |V| + |E| + 2",
        (n != nv + ne + 2).then(|| format!("{n} != {nv} + {ne} + 2")),
    );
    report
}

/// The element map `M(f)` for an injective graph homomorphism `f`, as indices
/// into `monoid_from_graph(f.source())` and `monoid_from_graph(f.target())`.
pub fn induced_monoid_map(f: &GraphMap) -> Result<Vec<usize>> {
    f.check_injective()?;
    f.check_homomorphism()?;
    let (src, dst) = (f.source(), f.target());
    let (ns, nt) = (src.vertex_count(), dst.vertex_count());
    let mut mapping = vec![0, 1];
    mapping.extend((0..ns).map(|v| 2 + f.image(v)));
    mapping.extend((0..src.edge_count()).map(|e| 2 + nt + f.edge_image(e).expect("homomorphism")));

    let (ms, mt) = (monoid_from_graph(src), monoid_from_graph(dst));
    for a in 0..ms.size() {
        for b in 0..ms.size() {
            if mapping[ms.base.mul(a, b)] != mt.base.mul(mapping[a], mapping[b]) {
                return Err(Error::NotHomomorphism(
                    ms.base.label(a).to_string(),
                    ms.base.label(b).to_string(),
                ));
            }
        }
    }
    Ok(mapping)
}

/// The automorphism of `M(graph)` induced by a graph automorphism.
pub fn monoid_extension(graph: &Graph, sigma: &Permutation) -> Result<Permutation> {
    let f = GraphMap::new(graph, graph, sigma.images().to_vec())?;
    if sigma.degree() != graph.vertex_count() || !f.is_homomorphism() {
        return Err(Error::NotAutomorphism);
    }
    Ok(Permutation::from_vec_unchecked(induced_monoid_map(&f)?))
}

/// All automorphisms of `M(Γ)` (structured search, default budget).
pub fn monoid_automorphisms(gm: &GraphMonoid) -> Result<PermSet> {
    monoid_automorphisms_with(gm, SearchBudget::default())
}

pub fn monoid_automorphisms_with(gm: &GraphMonoid, budget: SearchBudget) -> Result<PermSet> {
    let m = &gm.base;
    let n = m.size();
    let (zero, one) = (gm.zero(), gm.one());
    let vertices = gm.vertex_elements();
    let edges = gm.edge_elements();
    let position: HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(i, &x)| (x, i)).collect();

    // Incidence is read off the table, not the tags.
    let mut adjacency = vec![Vec::new(); vertices.len()];
    let mut edge_of = HashMap::new();
    for &e in &edges {
        let ends: Vec<usize> = vertices
            .iter()
            .filter(|&&x| m.mul(x, e) != zero)
            .map(|x| position[x])
            .collect();
        let [a, b] = ends[..] else {
            // Not incidence-structured: no candidate can be consistent.
            return Ok(PermSet::new(n));
        };
        adjacency[a].push(b);
        adjacency[b].push(a);
        edge_of.insert((a.min(b), a.max(b)), e);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    budget.admit(&adjacency, "monoid vertex class")?;

    let mut candidates = Vec::new();
    for_each_automorphism(&adjacency, &mut |sigma| {
        let mut phi = vec![usize::MAX; n];
        phi[zero] = zero;
        phi[one] = one;
        for (i, &x) in vertices.iter().enumerate() {
            phi[x] = vertices[sigma[i]];
        }
        for (&(a, b), &e) in &edge_of {
            let (sa, sb) = (sigma[a], sigma[b]);
            match edge_of.get(&(sa.min(sb), sa.max(sb))) {
                Some(&img) => phi[e] = img,
                None => return true,
            }
        }
        candidates.push(phi);
        true
    });

    let certified: Vec<Vec<usize>> = candidates
        .into_par_iter()
        .filter(|phi| phi.iter().all(|&x| x != usize::MAX) && m.is_automorphism(phi))
        .collect();
    let mut group = PermSet::new(n);
    for phi in certified {
        group.insert(Permutation::new(phi)?)?;
    }
    Ok(group)
}

/// Automorphisms of an arbitrary small finite monoid, pruned only by
/// preservation of idempotents.
pub fn finite_monoid_automorphisms(m: &FiniteMonoid) -> Result<PermSet> {
    let n = m.size();
    if n > UNTAGGED_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "untagged monoid",
            size: n,
            limit: UNTAGGED_LIMIT,
        });
    }
    let mut group = PermSet::new(n);
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[m.identity()] = m.identity();
    used[m.identity()] = true;

    fn extend(
        m: &FiniteMonoid,
        a: usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        group: &mut PermSet,
    ) {
        let n = m.size();
        if a == n {
            if m.is_automorphism(phi) {
                group
                    .insert(Permutation::from_vec_unchecked(phi.clone()))
                    .expect("degree matches");
            }
            return;
        }
        if a == m.identity() {
            return extend(m, a + 1, phi, used, group);
        }
        for b in 0..n {
            if used[b] || m.is_idempotent(a) != m.is_idempotent(b) {
                continue;
            }
            phi[a] = b;
            used[b] = true;
            extend(m, a + 1, phi, used, group);
            used[b] = false;
            phi[a] = usize::MAX;
        }
    }
    extend(m, 0, &mut phi, &mut used, &mut group);
    Ok(group)
}

/// All bijections fixing the identity that respect the whole table. No
/// structural assumptions; limited to [`BRUTEFORCE_LIMIT`] elements.
pub fn monoid_automorphisms_bruteforce(m: &FiniteMonoid) -> Result<PermSet> {
    let n = m.size();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::OracleLimit {
            what: "monoid",
            size: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let others: Vec<usize> = (0..n).filter(|&a| a != m.identity()).collect();
    let mut group = PermSet::new(n);
    let mut arrangement = others.clone();
    loop {
        let mut phi = vec![m.identity(); n];
        for (&a, &b) in others.iter().zip(&arrangement) {
            phi[a] = b;
        }
        if m.is_automorphism(&phi) {
            group.insert(Permutation::new(phi)?)?;
        }
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    Ok(group)
}

/// Lexicographic successor; false once the last arrangement is reached.
pub(crate) fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> Graph {
        Graph::new(["x", "y"], [("x", "y")]).unwrap()
    }

    fn edgeless(n: usize) -> Graph {
        Graph::new(
            (0..n).map(|i| format!("v{i}")),
            Vec::<(String, String)>::new(),
        )
        .unwrap()
    }

    #[test]
    fn single_edge_products() {
        let gm = monoid_from_graph(&single_edge());
        let m = gm.base();
        assert_eq!(m.labels(), ["0", "1", "x", "y", "{x,y}"]);
        let (x, y, e) = (2, 3, 4);
        assert_eq!(m.mul(x, e), e);
        assert_eq!(m.mul(x, y), 0);
        assert_eq!(m.mul(e, e), 0);
        let idempotents: Vec<_> = (0..5).filter(|&a| m.is_idempotent(a)).collect();
        assert_eq!(idempotents, [0, 1, x, y]);
    }

    #[test]
    fn sizes() {
        assert_eq!(
            monoid_from_graph(&Graph::gamma(3, 2, false).unwrap()).size(),
            13
        );
        let empty = monoid_from_graph(&Graph::empty());
        assert_eq!(empty.size(), 2);
        assert!(check_graph_monoid(&empty).all_passed());
    }

    #[test]
    fn axioms_hold_and_mutations_are_caught() {
        let gm = monoid_from_graph(&Graph::gamma(2, 2, false).unwrap());
        let report = check_graph_monoid(&gm);
        let failures: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failures, ["associativity"], "{report}");
        assert_eq!(
            report.get("associativity").unwrap().witness.as_deref(),
            Some("(c0, c1, {c0,c1})")
        );

        let edgeless3 = monoid_from_graph(&edgeless(3));
        assert!(check_graph_monoid(&edgeless3).all_passed());
        let mut broken = edgeless3.base().clone();
        // v0 * v1 = 0; send it to v0 instead.
        broken.set_product(2, 3, 2);
        let report = check_monoid_axioms(&broken);
        let assoc = report.get("associativity").unwrap();
        assert!(!assoc.passed);
        assert!(assoc.witness.is_some());
    }

    #[test]
    fn induced_maps() {
        let g = Graph::gamma(2, 2, false).unwrap();
        let id = induced_monoid_map(&GraphMap::identity(&g)).unwrap();
        assert_eq!(id, (0..11).collect::<Vec<_>>());

        let swap = Permutation::transposition(5, 1, 2);
        let phi = monoid_extension(&g, &swap).unwrap();
        assert_eq!(phi.degree(), 11);
        assert!(monoid_from_graph(&g).base().is_automorphism(phi.images()));
        assert!(!phi.is_identity());

        let two = edgeless(2);
        let one = edgeless(1);
        let collapse = GraphMap::new(&two, &one, vec![0, 0]).unwrap();
        assert!(matches!(
            induced_monoid_map(&collapse),
            Err(Error::NotInjective(..))
        ));
    }

    #[test]
    fn automorphism_counts() {
        let gm = monoid_from_graph(&Graph::gamma(3, 2, false).unwrap());
        assert_eq!(monoid_automorphisms(&gm).unwrap().order(), 6);
        let edge = monoid_from_graph(&single_edge());
        assert_eq!(monoid_automorphisms(&edge).unwrap().order(), 2);
        assert_eq!(
            monoid_automorphisms_bruteforce(edge.base())
                .unwrap()
                .order(),
            2
        );
        assert_eq!(
            monoid_automorphisms(&monoid_from_graph(&Graph::empty()))
                .unwrap()
                .order(),
            1
        );

        let two = monoid_from_graph(&edgeless(2));
        assert_eq!(
            monoid_automorphisms_bruteforce(two.base()).unwrap().order(),
            2
        );
        let trivial = FiniteMonoid::new(vec!["1".into()], vec![vec![0]], 0).unwrap();
        assert_eq!(
            monoid_automorphisms_bruteforce(&trivial).unwrap().order(),
            1
        );
        assert_eq!(
            finite_monoid_automorphisms(edge.base()).unwrap(),
            monoid_automorphisms(&edge).unwrap()
        );
    }

    #[test]
    fn oracle_limit() {
        let gm = monoid_from_graph(&Graph::gamma(2, 2, false).unwrap());
        assert!(matches!(
            monoid_automorphisms_bruteforce(gm.base()),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn cayley_text_round_trip() {
        let gm = monoid_from_graph(&Graph::gamma(2, 1, true).unwrap());
        let text = gm.to_text();
        assert!(text.starts_with(&format!("autoratio-monoid v1\n{} 1\n", gm.size())));
        match parse_cayley(&text).unwrap() {
            ParsedMonoid::Graph(parsed) => assert_eq!(parsed, gm),
            ParsedMonoid::Plain(_) => panic!("tags lost"),
        }
        let plain = gm.base().to_text();
        assert!(matches!(
            parse_cayley(&plain).unwrap(),
            ParsedMonoid::Plain(_)
        ));
        assert!(parse_cayley("autoratio-monoid v1\n2 0\n0 1\n").is_err());
    }

    #[test]
    fn next_permutation_enumerates_all() {
        let mut xs = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut xs) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
