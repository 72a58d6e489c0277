//! The partial group `𝓔(Γ)` of short words on the vertices of a graph.
//!
//! Elements are the empty word, every one-letter word `(x)`, and both
//! orientations `(x,y)`, `(y,x)` of every edge. A sequence of elements is in
//! the domain when its flattening (the concatenation of the member words)
//!
//! * is empty or uses a single vertex, or
//! * uses exactly two adjacent vertices and every maximal constant block
//!   other than the first and the last has even length.
//!
//! Those are exactly the factors of the infinite words `x^{2k1} y^{2r1}
//! x^{2k2} ...`. The product cancels adjacent equal letters until none
//! remain; on the domain this always lands on an element. Inversion reverses
//! words.
//!
//! [`check_partial_group_axioms`] and the brute-force automorphism oracle work
//! against the [`PartialGroupOps`] trait so they can be pointed at
//! deliberately corrupted structures.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::aut::{for_each_automorphism, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMap};
use crate::monoid::next_permutation;
use crate::perm::{PermSet, Permutation};
use crate::report::AxiomReport;

const HEADER: &str = "autoratio-partial-group v1";

/// Default word length for axiom checks.
pub const DEFAULT_AXIOM_LEN: usize = 4;
/// Default word length for automorphism certification.
pub const DEFAULT_CERT_LEN: usize = 3;
/// Largest partial group accepted by [`partial_automorphisms_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 8;
/// Upper bound on the number of words [`check_partial_group_axioms`] will
/// enumerate.
pub const WORD_ENUMERATION_LIMIT: u128 = 50_000_000;

/// The operations of a finite partial group on element indices.
pub trait PartialGroupOps: Sync {
    fn size(&self) -> usize;
    fn unit(&self) -> usize;
    /// Domain membership of a word of elements.
    fn domain_contains(&self, word: &[usize]) -> bool;
    /// The product of a word; `None` outside the domain.
    fn multiply(&self, word: &[usize]) -> Option<usize>;
    fn inverse(&self, element: usize) -> usize;
    fn element_label(&self, element: usize) -> String;

    fn word_label(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "()".into();
        }
        word.iter().map(|&x| self.element_label(x)).collect()
    }
}

/// Cancels adjacent equal letters until none remain.
pub fn reduce_word<T: PartialEq + Copy>(letters: &[T]) -> Vec<T> {
    let mut stack: Vec<T> = Vec::with_capacity(letters.len());
    for &x in letters {
        if stack.last() == Some(&x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

/// `𝓔(Γ)`.
#[derive(Clone, Debug)]
pub struct PartialGroup {
    graph: Graph,
    words: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
    inverse: Vec<usize>,
}

impl PartialGroup {
    /// Builds `𝓔(graph)` with elements ordered as: the empty word, `(x)` in
    /// vertex order, then `(x,y)` and `(y,x)` for each edge in canonical order.
    pub fn from_graph(graph: &Graph) -> PartialGroup {
        let mut words = vec![Vec::new()];
        words.extend((0..graph.vertex_count()).map(|v| vec![v]));
        for &(a, b) in graph.edges() {
            words.push(vec![a, b]);
            words.push(vec![b, a]);
        }
        let lookup: HashMap<Vec<usize>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let inverse = words
            .iter()
            .map(|w| {
                let rev: Vec<usize> = w.iter().rev().copied().collect();
                lookup[&rev]
            })
            .collect();
        PartialGroup {
            graph: graph.clone(),
            words,
            lookup,
            inverse,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The vertex word of an element.
    pub fn word(&self, element: usize) -> &[usize] {
        &self.words[element]
    }

    /// The element whose vertex word is `word`, if any.
    pub fn element(&self, word: &[usize]) -> Option<usize> {
        self.lookup.get(word).copied()
    }

    /// Element standing for the one-letter word `(v)`.
    pub fn vertex_element(&self, v: usize) -> usize {
        1 + v
    }

    fn check_letters(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&x| x >= self.words.len()) {
            Some(x) => Err(Error::UnknownElement(format!("#{x}"))),
            None => Ok(()),
        }
    }

    pub fn flatten(&self, word: &[usize]) -> Vec<usize> {
        word.iter()
            .flat_map(|&x| self.words[x].iter().copied())
            .collect()
    }

    /// Domain test on an already flattened vertex word.
    pub fn admits_flat(&self, flat: &[usize]) -> bool {
        self.admits_letters(flat.iter().copied())
    }

    /// Single pass over the letters: at most two distinct letters, adjacent,
    /// and every run that is followed by another run and preceded by one has
    /// even length.
    fn admits_letters(&self, letters: impl Iterator<Item = usize>) -> bool {
        let (mut first, mut other) = (None, None);
        let (mut current, mut len, mut runs) = (usize::MAX, 0usize, 0usize);
        for v in letters {
            if v == current {
                len += 1;
                continue;
            }
            if runs >= 2 && len % 2 == 1 {
                return false;
            }
            match (first, other) {
                (None, _) => first = Some(v),
                (Some(x), None) if v != x => {
                    if !self.graph.has_edge(x, v) {
                        return false;
                    }
                    other = Some(v);
                }
                (Some(x), Some(y)) if v != x && v != y => return false,
                _ => {}
            }
            current = v;
            len = 1;
            runs += 1;
        }
        true
    }

    fn letters<'a>(&'a self, word: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
        word.iter()
            .flat_map(move |&x| self.words[x].iter().copied())
    }

    pub fn in_domain(&self, word: &[usize]) -> Result<bool> {
        self.check_letters(word)?;
        Ok(self.admits_flat(&self.flatten(word)))
    }

    pub fn product(&self, word: &[usize]) -> Result<usize> {
        self.check_letters(word)?;
        self.multiply(word)
            .ok_or_else(|| Error::NotInDomain(self.word_label(word)))
    }

    pub fn invert(&self, element: usize) -> usize {
        self.inverse[element]
    }

    /// Parses `[]`, `[x]` or `[x,y]`.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::UnknownElement(text.to_string()))?;
        let letters: Vec<usize> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|l| self.graph.require_index(l.trim()))
                .collect::<Result<_>>()?
        };
        self.element(&letters)
            .ok_or_else(|| Error::UnknownElement(text.to_string()))
    }

    /// Parses a sequence of elements written back to back: `[x][y][x,y]`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let end = rest
                .find(']')
                .ok_or_else(|| Error::UnknownElement(rest.to_string()))?;
            out.push(self.parse_element(&rest[..=end])?);
            rest = rest[end + 1..].trim_start();
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER}\nvertices: {}\n", self.graph.vertices().join(" "));
        for (a, b) in self.graph.edge_labels() {
            let _ = writeln!(out, "edge {a} {b}");
        }
        let _ = writeln!(out, "elements: {}", self.words.len());
        for e in 0..self.words.len() {
            let _ = writeln!(out, "{}", self.element_label(e));
        }
        out
    }

    /// Reads the format written by [`PartialGroup::to_text`]; the element
    /// list is regenerated from the graph and must agree with the file.
    pub fn from_text(text: &str) -> Result<PartialGroup> {
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
        let (ln, vline) = lines
            .next()
            .ok_or_else(|| Error::parse(2, "missing vertices"))?;
        let vertices: Vec<String> = vline
            .strip_prefix("vertices:")
            .ok_or_else(|| Error::parse(ln, "expected `vertices:`"))?
            .split_whitespace()
            .map(String::from)
            .collect();
        let mut edges = Vec::new();
        let mut listed = Vec::new();
        for (ln, line) in lines {
            if let Some(rest) = line.strip_prefix("edge ") {
                match rest.split_whitespace().collect::<Vec<_>>()[..] {
                    [a, b] => edges.push((a.to_string(), b.to_string())),
                    _ => return Err(Error::parse(ln, "expected `edge X Y`")),
                }
            } else if line.starts_with("elements:") {
                continue;
            } else {
                listed.push((ln, line.to_string()));
            }
        }
        let graph = Graph::new(
            vertices,
            edges.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?;
        let pg = PartialGroup::from_graph(&graph);
        if !listed.is_empty() {
            if listed.len() != pg.size() {
                return Err(Error::parse(0, "element list does not match the graph"));
            }
            for (e, (ln, label)) in listed.iter().enumerate() {
                if pg.element_label(e) != *label {
                    return Err(Error::parse(*ln, format!("unexpected element `{label}`")));
                }
            }
        }
        Ok(pg)
    }
}

impl PartialGroupOps for PartialGroup {
    fn size(&self) -> usize {
        self.words.len()
    }

    fn unit(&self) -> usize {
        0
    }

    fn domain_contains(&self, word: &[usize]) -> bool {
        self.admits_letters(self.letters(word))
    }

    fn multiply(&self, word: &[usize]) -> Option<usize> {
        if !self.domain_contains(word) {
            return None;
        }
        let mut stack: Vec<usize> = Vec::with_capacity(4);
        for x in self.letters(word) {
            if stack.last() == Some(&x) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        self.element(&stack)
    }

    fn inverse(&self, element: usize) -> usize {
        self.inverse[element]
    }

    fn element_label(&self, element: usize) -> String {
        let letters: Vec<&str> = self.words[element]
            .iter()
            .map(|&v| self.graph.label(v))
            .collect();
        format!("[{}]", letters.join(","))
    }
}

fn inverse_word(pg: &dyn PartialGroupOps, word: &[usize]) -> Vec<usize> {
    word.iter().rev().map(|&x| pg.inverse(x)).collect()
}

/// Every word of length at most `max_len`, domain or not.
fn all_words(n: usize, max_len: usize, mut visit: impl FnMut(&[usize])) {
    let mut word = Vec::with_capacity(max_len);
    visit(&word);
    if n == 0 {
        return;
    }
    for len in 1..=max_len {
        word.clear();
        word.resize(len, 0);
        loop {
            visit(&word);
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                word[k] += 1;
                if word[k] < n {
                    break;
                }
                word[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
    }
}

/// Applies `f` to every word of length at most `max_len`, in parallel over
/// the first letter, keeping the `Some` results.
fn collect_words<T: Send>(
    n: usize,
    max_len: usize,
    f: impl Fn(&[usize]) -> Option<T> + Sync,
) -> Vec<T> {
    let mut out: Vec<T> = f(&[]).into_iter().collect();
    if max_len == 0 {
        return out;
    }
    let rest: Vec<Vec<T>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut buf = vec![first];
            all_words(n, max_len - 1, |suffix| {
                buf.truncate(1);
                buf.extend_from_slice(suffix);
                found.extend(f(&buf));
            });
            found
        })
        .collect();
    out.extend(rest.into_iter().flatten());
    out
}

fn word_count(n: usize, max_len: usize) -> u128 {
    (0..=max_len as u32)
        .map(|k| (n as u128).saturating_pow(k))
        .sum()
}

/// Domain words of length at most `max_len`, grown prefix by prefix. Complete
/// whenever the domain is closed under prefixes.
pub fn domain_words(pg: &dyn PartialGroupOps, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<usize>> = frontier
            .par_iter()
            .flat_map_iter(|w: &Vec<usize>| {
                (0..pg.size()).filter_map(move |x| {
                    let mut ext = w.clone();
                    ext.push(x);
                    pg.domain_contains(&ext).then_some(ext)
                })
            })
            .collect();
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Exhaustive check of the partial-group axioms on all words of length at
/// most `max_len`:
///
/// * D1: every element, as a one-letter word, is in the domain;
/// * D2: both parts of every split of a domain word are in the domain;
/// * P1: the product restricts to the identity on elements;
/// * P2: `Π(u∘v∘w) = Π(u∘(Π v)∘w)` for every three-way split;
/// * P3: `u⁻¹∘u` is in the domain with product the unit;
///
/// plus the unit and inversion laws.
pub fn check_partial_group_axioms(pg: &dyn PartialGroupOps, max_len: usize) -> Result<AxiomReport> {
    if max_len < 3 {
        return Err(Error::MaxLength {
            min: 3,
            got: max_len,
        });
    }
    let n = pg.size();
    let total = word_count(n, max_len);
    if total > WORD_ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "word enumeration",
            size: total.min(usize::MAX as u128) as usize,
            limit: WORD_ENUMERATION_LIMIT as usize,
        });
    }
    let domain = collect_words(n, max_len, |w| pg.domain_contains(w).then(|| w.to_vec()));

    let mut report = AxiomReport::default();
    let label = |w: &[usize]| pg.word_label(w);

    let unit = (pg.multiply(&[]) != Some(pg.unit())).then(|| "Π(()) is not the unit".to_string());
    report.record("unit", unit);

    let d1 = (0..n)
        .find(|&x| !pg.domain_contains(&[x]))
        .map(|x| pg.element_label(x))
        .or_else(|| (!pg.domain_contains(&[])).then(|| "()".to_string()));
    report.record("D1", d1);

    let d2 = domain.par_iter().find_map_first(|w| {
        (0..=w.len()).find_map(|k| {
            (!pg.domain_contains(&w[..k]) || !pg.domain_contains(&w[k..]))
                .then(|| format!("{} split at {k}", label(w)))
        })
    });
    report.record("D2", d2);

    let p1 = (0..n)
        .find(|&x| pg.multiply(&[x]) != Some(x))
        .map(|x| pg.element_label(x));
    report.record("P1", p1);

    let p2 = domain.par_iter().find_map_first(|w| {
        let whole = pg.multiply(w);
        for i in 0..=w.len() {
            for j in i..=w.len() {
                let Some(inner) = pg.multiply(&w[i..j]) else {
                    return Some(format!(
                        "{}: Π undefined on factor {}",
                        label(w),
                        label(&w[i..j])
                    ));
                };
                let mut folded = w[..i].to_vec();
                folded.push(inner);
                folded.extend_from_slice(&w[j..]);
                if !pg.domain_contains(&folded) || pg.multiply(&folded) != whole {
                    return Some(format!(
                        "u∘v∘w = {}, u∘Π(v)∘w = {}",
                        label(w),
                        label(&folded)
                    ));
                }
            }
        }
        None
    });
    report.record("P2", p2);

    let p3 = domain.par_iter().find_map_first(|u| {
        let mut w = inverse_word(pg, u);
        w.extend_from_slice(u);
        (!pg.domain_contains(&w) || pg.multiply(&w) != Some(pg.unit())).then(|| label(&w))
    });
    report.record("P3", p3);

    let mut seen = vec![false; n];
    let inversion = (0..n)
        .find(|&x| {
            let y = pg.inverse(x);
            y >= n || std::mem::replace(&mut seen[y], true) || pg.inverse(y) != x
        })
        .map(|x| pg.element_label(x));
    report.record("inversion is an involutory bijection", inversion);
    Ok(report)
}

fn map_word(phi: &[usize], word: &[usize]) -> Vec<usize> {
    word.iter().map(|&x| phi[x]).collect()
}

fn respects(pg: &dyn PartialGroupOps, phi: &[usize], words: &[Vec<usize>]) -> bool {
    words.iter().all(|w| {
        let image = map_word(phi, w);
        match (pg.multiply(w), pg.multiply(&image)) {
            (Some(p), Some(q)) => phi[p] == q,
            _ => false,
        }
    })
}

/// All automorphisms of `𝓔(Γ)` (default budget), certified on domain words of
/// length at most `max_len`.
pub fn partial_automorphisms(pg: &PartialGroup, max_len: usize) -> Result<PermSet> {
    partial_automorphisms_with(pg, max_len, SearchBudget::default())
}

pub fn partial_automorphisms_with(
    pg: &PartialGroup,
    max_len: usize,
    budget: SearchBudget,
) -> Result<PermSet> {
    if max_len < 2 {
        return Err(Error::MaxLength {
            min: 2,
            got: max_len,
        });
    }
    let n = pg.size();
    let unit = pg.unit();
    // Vertex letters are the non-unit elements that can be multiplied with
    // themselves; adjacency is domain membership of ((x),(y)).
    let letters: Vec<usize> = (0..n)
        .filter(|&x| x != unit && pg.domain_contains(&[x, x]))
        .collect();
    let mut adjacency = vec![Vec::new(); letters.len()];
    let mut pair_product = HashMap::new();
    for (i, &x) in letters.iter().enumerate() {
        for (j, &y) in letters.iter().enumerate() {
            if i != j && pg.domain_contains(&[x, y]) {
                adjacency[i].push(j);
                if let Some(p) = pg.multiply(&[x, y]) {
                    pair_product.insert((i, j), p);
                }
            }
        }
    }
    budget.admit(&adjacency, "partial-group vertex letters")?;

    let mut candidates = Vec::new();
    for_each_automorphism(&adjacency, &mut |sigma| {
        let mut phi = vec![usize::MAX; n];
        phi[unit] = unit;
        for (i, &x) in letters.iter().enumerate() {
            phi[x] = letters[sigma[i]];
        }
        for (&(i, j), &p) in &pair_product {
            match pair_product.get(&(sigma[i], sigma[j])) {
                Some(&q) => phi[p] = q,
                None => return true,
            }
        }
        if phi.iter().all(|&x| x != usize::MAX) {
            candidates.push(phi);
        }
        true
    });

    let words = domain_words(pg, max_len);
    let certified: Vec<Vec<usize>> = candidates
        .into_par_iter()
        .filter(|phi| {
            let Ok(perm) = Permutation::new(phi.clone()) else {
                return false;
            };
            let inv = perm.inverse();
            (0..n).all(|x| phi[pg.invert(x)] == pg.invert(phi[x]))
                && respects(pg, phi, &words)
                && respects(pg, inv.images(), &words)
        })
        .collect();
    let mut group = PermSet::new(n);
    for phi in certified {
        group.insert(Permutation::new(phi)?)?;
    }
    Ok(group)
}

/// Every bijection fixing the unit that preserves domain membership in both
/// directions, the product, and inversion on all words of length at most
/// `max_len`. No structural assumptions; at most [`BRUTEFORCE_LIMIT`]
/// elements.
pub fn partial_automorphisms_bruteforce(
    pg: &dyn PartialGroupOps,
    max_len: usize,
) -> Result<PermSet> {
    let n = pg.size();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::OracleLimit {
            what: "partial group",
            size: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let words = collect_words(n, max_len, |w| Some((w.to_vec(), pg.domain_contains(w))));
    let unit = pg.unit();
    let others: Vec<usize> = (0..n).filter(|&x| x != unit).collect();
    let mut arrangement = others.clone();
    let mut group = PermSet::new(n);
    loop {
        let mut phi = vec![unit; n];
        for (&a, &b) in others.iter().zip(&arrangement) {
            phi[a] = b;
        }
        let ok = (0..n).all(|x| phi[pg.inverse(x)] == pg.inverse(phi[x]))
            && words.iter().all(|(w, inside)| {
                let image = map_word(&phi, w);
                if pg.domain_contains(&image) != *inside {
                    return false;
                }
                !inside || pg.multiply(w).map(|p| phi[p]) == pg.multiply(&image)
            });
        if ok {
            group.insert(Permutation::new(phi)?)?;
        }
        if !next_permutation(&mut arrangement) {
            break;
        }
    }
    Ok(group)
}

/// Letterwise image map `𝓔(f)` of a graph homomorphism, as indices into
/// `PartialGroup::from_graph` of source and target, certified on source
/// domain words of length at most `max_len`.
pub fn induced_partial_map(f: &GraphMap, max_len: usize) -> Result<Vec<usize>> {
    f.check_homomorphism()?;
    let src = PartialGroup::from_graph(f.source());
    let dst = PartialGroup::from_graph(f.target());
    let mapping: Vec<usize> = (0..src.size())
        .map(|e| {
            let image: Vec<usize> = src.word(e).iter().map(|&v| f.image(v)).collect();
            dst.element(&image)
                .expect("homomorphisms send edges to edges")
        })
        .collect();
    for w in domain_words(&src, max_len) {
        let image = map_word(&mapping, &w);
        let ok = matches!(
            (src.multiply(&w), dst.multiply(&image)),
            (Some(p), Some(q)) if mapping[p] == q
        );
        if !ok {
            return Err(Error::NotInDomain(dst.word_label(&image)));
        }
    }
    Ok(mapping)
}

/// The automorphism of `𝓔(graph)` induced by a graph automorphism.
pub fn partial_group_extension(graph: &Graph, sigma: &Permutation) -> Result<Permutation> {
    let f = GraphMap::new(graph, graph, sigma.images().to_vec())?;
    f.check_injective()?;
    if f.check_homomorphism().is_err() {
        return Err(Error::NotAutomorphism);
    }
    Ok(Permutation::from_vec_unchecked(induced_partial_map(&f, 2)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> PartialGroup {
        PartialGroup::from_graph(&Graph::new(["x", "y"], [("x", "y")]).unwrap())
    }

    #[test]
    fn element_sets() {
        let one = PartialGroup::from_graph(&Graph::new(["x"], Vec::<(&str, &str)>::new()).unwrap());
        assert_eq!(one.size(), 2);
        let pg = single_edge();
        let labels: Vec<String> = (0..pg.size()).map(|e| pg.element_label(e)).collect();
        assert_eq!(labels, ["[]", "[x]", "[y]", "[x,y]", "[y,x]"]);
        assert_eq!(
            PartialGroup::from_graph(&Graph::gamma(3, 2, false).unwrap()).size(),
            17
        );
    }

    #[test]
    fn domain_membership() {
        let g = Graph::new(["x", "y", "z"], [("x", "y")]).unwrap();
        let pg = PartialGroup::from_graph(&g);
        let w = |s: &str| pg.parse_word(s).unwrap();
        assert!(pg.in_domain(&w("[x][x][x]")).unwrap());
        assert!(pg.in_domain(&w("[x][y]")).unwrap());
        assert!(!pg.in_domain(&w("[x][z]")).unwrap());
        assert!(pg.in_domain(&w("[x,y][y,x]")).unwrap());
        assert!(!pg.in_domain(&w("[x,y][x,y]")).unwrap());
        assert!(pg.in_domain(&w("[][z][]")).unwrap());
        assert!(matches!(pg.in_domain(&[99]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn products_and_inverses() {
        let pg = single_edge();
        let w = |s: &str| pg.parse_word(s).unwrap();
        let e = |s: &str| pg.parse_element(s).unwrap();
        assert_eq!(pg.product(&w("[x][x]")).unwrap(), e("[]"));
        assert_eq!(pg.product(&w("[x][y]")).unwrap(), e("[x,y]"));
        assert_eq!(pg.product(&w("[x][x][x]")).unwrap(), e("[x]"));
        assert_eq!(pg.product(&[]).unwrap(), e("[]"));
        assert!(matches!(
            pg.product(&w("[x][y][x]")),
            Err(Error::NotInDomain(_))
        ));
        assert_eq!(pg.invert(e("[]")), e("[]"));
        assert_eq!(pg.invert(e("[x]")), e("[x]"));
        assert_eq!(pg.invert(e("[x,y]")), e("[y,x]"));
    }

    #[test]
    fn odd_interior_block_is_rejected() {
        let pg = single_edge();
        let (x, y) = (0, 1);
        let word: Vec<usize> = "xxxyyyyyxxyyyyyyx"
            .chars()
            .map(|c| if c == 'x' { x } else { y })
            .collect();
        assert!(!pg.admits_flat(&word));
        assert_eq!(reduce_word(&word), [x, y, x]);
        assert!(!pg.admits_flat(&word[..15]));
        assert!(pg.admits_flat(&[x, x, x, y, y, y, y, x, x, y]));
    }

    #[test]
    fn axioms_hold() {
        let g = Graph::gamma(2, 2, false).unwrap();
        let report = check_partial_group_axioms(&PartialGroup::from_graph(&g), 4).unwrap();
        assert!(report.all_passed(), "{report}");
        let one = PartialGroup::from_graph(&Graph::new(["x"], Vec::<(&str, &str)>::new()).unwrap());
        assert!(check_partial_group_axioms(&one, 5).unwrap().all_passed());
        // The two-element group.
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(one.multiply(&[a, b]), Some(a ^ b));
            }
        }
        assert!(check_partial_group_axioms(&one, 2).is_err());
    }

    struct SkipOneCancellation(PartialGroup);

    impl PartialGroupOps for SkipOneCancellation {
        fn size(&self) -> usize {
            self.0.size()
        }
        fn unit(&self) -> usize {
            0
        }
        fn domain_contains(&self, word: &[usize]) -> bool {
            self.0.domain_contains(word)
        }
        fn multiply(&self, word: &[usize]) -> Option<usize> {
            // (x)(x)(x) should reduce to (x); report the unit instead.
            if word.len() == 3 && word.iter().all(|&w| w == 1) {
                return Some(0);
            }
            self.0.multiply(word)
        }
        fn inverse(&self, element: usize) -> usize {
            self.0.inverse(element)
        }
        fn element_label(&self, element: usize) -> String {
            self.0.element_label(element)
        }
    }

    #[test]
    fn corrupted_product_fails_p2() {
        let corrupted = SkipOneCancellation(single_edge());
        let report = check_partial_group_axioms(&corrupted, 4).unwrap();
        let p2 = report.get("P2").unwrap();
        assert!(!p2.passed);
        assert!(p2.witness.is_some());
    }

    #[test]
    fn automorphisms() {
        let g = Graph::gamma(3, 2, false).unwrap();
        assert_eq!(
            partial_automorphisms(&PartialGroup::from_graph(&g), 3)
                .unwrap()
                .order(),
            6
        );
        let edge = single_edge();
        assert_eq!(partial_automorphisms(&edge, 3).unwrap().order(), 2);
        assert_eq!(
            partial_automorphisms_bruteforce(&edge, 3).unwrap(),
            partial_automorphisms(&edge, 3).unwrap()
        );
        let path = PartialGroup::from_graph(
            &Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap(),
        );
        assert_eq!(partial_automorphisms(&path, 3).unwrap().order(), 2);

        let one = PartialGroup::from_graph(&Graph::new(["x"], Vec::<(&str, &str)>::new()).unwrap());
        assert_eq!(
            partial_automorphisms_bruteforce(&one, 3).unwrap().order(),
            1
        );
        let two =
            PartialGroup::from_graph(&Graph::new(["x", "y"], Vec::<(&str, &str)>::new()).unwrap());
        assert_eq!(
            partial_automorphisms_bruteforce(&two, 3).unwrap().order(),
            2
        );
        assert!(partial_automorphisms(&edge, 1).is_err());
    }

    #[test]
    fn induced_maps() {
        let g = Graph::gamma(2, 2, false).unwrap();
        let id = induced_partial_map(&GraphMap::identity(&g), 3).unwrap();
        assert_eq!(
            id,
            (0..PartialGroup::from_graph(&g).size()).collect::<Vec<_>>()
        );
        let swap = partial_group_extension(&g, &Permutation::transposition(5, 1, 2)).unwrap();
        assert!(!swap.is_identity());

        let edge = Graph::new(["x", "y"], [("x", "y")]).unwrap();
        let point = Graph::new(["p"], Vec::<(&str, &str)>::new()).unwrap();
        let contract = GraphMap::new(&edge, &point, vec![0, 0]).unwrap();
        assert!(matches!(
            induced_partial_map(&contract, 3),
            Err(Error::NotHomomorphism(..))
        ));
    }

    #[test]
    fn text_round_trip() {
        let pg = PartialGroup::from_graph(&Graph::gamma(2, 1, true).unwrap());
        let back = PartialGroup::from_text(&pg.to_text()).unwrap();
        assert_eq!(back.graph(), pg.graph());
    }
}
