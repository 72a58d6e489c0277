//! Evolution algebras on a natural basis and the algebra `A(Γ)`.
//!
//! An evolution algebra is stored by the squares of its basis vectors;
//! products of distinct basis vectors vanish. `A(Γ)` has basis `V ∪ E`
//! (vertices first, then edges) with `v² = v` and `e² = e + x + y` for
//! `e = {x,y}`.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Rational, SparseVec};
use crate::graph::{Graph, GraphMap};
use crate::perm::Permutation;

/// First line of the text form, written as a comment.
const HEADER: &str = "# autoratio-evoalg v1";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisTag {
    Vertex(String),
    Edge(String, String),
}

impl BasisTag {
    pub fn label(&self) -> String {
        match self {
            BasisTag::Vertex(v) => v.clone(),
            BasisTag::Edge(x, y) => format!("{{{x},{y}}}"),
        }
    }

    fn parse(label: &str) -> BasisTag {
        label
            .strip_prefix('{')
            .and_then(|l| l.strip_suffix('}'))
            .and_then(|l| l.split_once(','))
            .map(|(x, y)| BasisTag::Edge(x.to_string(), y.to_string()))
            .unwrap_or_else(|| BasisTag::Vertex(label.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionAlgebra<F: Field = Rational> {
    basis: Vec<BasisTag>,
    squares: Vec<SparseVec<F>>,
}

impl<F: Field> EvolutionAlgebra<F> {
    pub fn new(basis: Vec<BasisTag>, squares: Vec<SparseVec<F>>) -> Result<Self> {
        let n = basis.len();
        if squares.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: squares.len(),
            });
        }
        if let Some(&k) = squares.iter().flat_map(|s| s.keys()).find(|&&k| k >= n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: k + 1,
            });
        }
        let squares = squares
            .into_iter()
            .map(|s| s.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Ok(EvolutionAlgebra { basis, squares })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisTag] {
        &self.basis
    }

    pub fn square(&self, i: usize) -> &SparseVec<F> {
        &self.squares[i]
    }

    pub fn set_square(&mut self, i: usize, square: SparseVec<F>) {
        self.squares[i] = square.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }

    /// Product of dense coordinate vectors.
    pub fn multiply(&self, u: &[F], v: &[F]) -> Result<Vec<F>> {
        for w in [u, v] {
            if w.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: w.len(),
                });
            }
        }
        let mut out = vec![F::zero(); self.dim()];
        for i in 0..self.dim() {
            let c = u[i].mul(&v[i]);
            if !c.is_zero() {
                for (&k, s) in &self.squares[i] {
                    out[k] = out[k].add(&c.mul(s));
                }
            }
        }
        Ok(out)
    }

    fn multiply_sparse(&self, u: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (&i, a) in u {
            if let Some(b) = v.get(&i) {
                let c = a.mul(b);
                for (&k, s) in &self.squares[i] {
                    add_into(&mut out, k, c.mul(s));
                }
            }
        }
        out
    }

    /// `A² = A`: the basis squares span the whole algebra.
    pub fn is_regular(&self) -> bool {
        F::rank(&self.squares) == self.dim()
    }

    /// Whether `m` (columns are the images of basis vectors) is invertible
    /// and multiplicative on every pair of basis vectors.
    pub fn is_algebra_automorphism(&self, m: &Matrix<F>) -> Result<bool> {
        let n = self.dim();
        if m.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.dim(),
            });
        }
        if !m.is_invertible() {
            return Ok(false);
        }
        Ok((0..n).into_par_iter().all(|i| {
            let ci = m.column(i);
            self.multiply_sparse(ci, ci) == m.apply(&self.squares[i])
                && (i + 1..n).all(|j| self.multiply_sparse(ci, m.column(j)).is_empty())
        }))
    }

    /// One line per basis vector: `label : c*label + ...` giving its square.
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER}\n");
        for (i, tag) in self.basis.iter().enumerate() {
            let _ = writeln!(
                out,
                "{} : {}",
                tag.label(),
                self.format_vector(&self.squares[i])
            );
        }
        out
    }

    pub fn format_vector(&self, v: &SparseVec<F>) -> String {
        if v.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (&k, c)) in v.iter().enumerate() {
            let label = self.basis[k].label();
            let (negative, magnitude) = match c.to_string().strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, c.to_string()),
            };
            match (n, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if magnitude != "1" {
                out.push_str(&magnitude);
                out.push('*');
            }
            out.push_str(&label);
        }
        out
    }

    /// Reads [`EvolutionAlgebra::to_text`]. Labels written `{x,y}` are
    /// tagged as edges, anything else as vertices. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, rhs) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(i + 1, "expected `label : square`"))?;
            rows.push((i + 1, label.trim().to_string(), rhs.trim().to_string()));
        }
        let labels: Vec<String> = rows.iter().map(|(_, l, _)| l.clone()).collect();
        let index: std::collections::HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        if index.len() != labels.len() {
            return Err(Error::parse(0, "duplicate basis label"));
        }
        let mut squares = Vec::with_capacity(rows.len());
        for (ln, _, rhs) in &rows {
            squares.push(parse_terms::<F>(rhs, &index).map_err(|m| Error::parse(*ln, m))?);
        }
        let basis = labels.iter().map(|l| BasisTag::parse(l)).collect();
        EvolutionAlgebra::new(basis, squares)
    }
}

fn add_into<F: Field>(v: &mut SparseVec<F>, k: usize, c: F) {
    let entry = v.entry(k).or_insert_with(F::zero);
    *entry = entry.add(&c);
    if entry.is_zero() {
        v.remove(&k);
    }
}

fn parse_terms<F: Field>(
    rhs: &str,
    index: &std::collections::HashMap<&str, usize>,
) -> std::result::Result<SparseVec<F>, String> {
    let mut out = SparseVec::new();
    let mut sign = F::one();
    let mut expect_term = true;
    for token in rhs.split_whitespace() {
        if !expect_term {
            sign = match token {
                "+" => F::one(),
                "-" => F::one().neg(),
                _ => return Err(format!("expected `+` or `-`, found `{token}`")),
            };
            expect_term = true;
            continue;
        }
        let (mut coeff, body) = match token.strip_prefix('-') {
            Some(rest) if !rest.is_empty() => (sign.neg(), rest),
            _ => (sign.clone(), token),
        };
        let label = match body.split_once('*') {
            Some((c, label)) => {
                let c = F::parse(c).ok_or_else(|| format!("bad coefficient `{c}`"))?;
                coeff = coeff.mul(&c);
                label
            }
            None => match F::parse(body) {
                Some(c) if c.is_zero() => {
                    expect_term = false;
                    continue;
                }
                Some(_) => return Err(format!("constant term `{body}`")),
                None => body,
            },
        };
        let &k = index
            .get(label)
            .ok_or_else(|| format!("unknown basis label `{label}`"))?;
        add_into(&mut out, k, coeff);
        expect_term = false;
    }
    if expect_term {
        return Err("incomplete expression".into());
    }
    Ok(out)
}

/// `A(graph)` over the field `F`.
pub fn evolution_algebra_from_graph<F: Field>(graph: &Graph) -> EvolutionAlgebra<F> {
    let nv = graph.vertex_count();
    let mut basis: Vec<BasisTag> = graph
        .vertices()
        .iter()
        .map(|v| BasisTag::Vertex(v.clone()))
        .collect();
    basis.extend(
        graph
            .edge_labels()
            .map(|(x, y)| BasisTag::Edge(x.to_string(), y.to_string())),
    );
    let mut squares: Vec<SparseVec<F>> =
        (0..nv).map(|v| SparseVec::from([(v, F::one())])).collect();
    for (e, &(x, y)) in graph.edges().iter().enumerate() {
        squares.push(SparseVec::from([
            (x, F::one()),
            (y, F::one()),
            (nv + e, F::one()),
        ]));
    }
    EvolutionAlgebra { basis, squares }
}

/// `A(graph)` over the rationals.
pub fn evolution_algebra(graph: &Graph) -> EvolutionAlgebra<Rational> {
    evolution_algebra_from_graph(graph)
}

/// Square matrix stored by sparse columns; column `j` is the image of the
/// `j`-th basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field = Rational> {
    columns: Vec<SparseVec<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn identity(n: usize) -> Self {
        Matrix {
            columns: (0..n).map(|j| SparseVec::from([(j, F::one())])).collect(),
        }
    }

    /// The matrix sending basis vector `j` to basis vector `p(j)`.
    pub fn permutation(p: &Permutation) -> Self {
        Matrix {
            columns: p
                .images()
                .iter()
                .map(|&i| SparseVec::from([(i, F::one())]))
                .collect(),
        }
    }

    /// From dense rows.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        let mut columns = vec![SparseVec::new(); n];
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    columns[j].insert(i, c);
                }
            }
        }
        Ok(Matrix { columns })
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<F> {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.columns[j].get(&i).cloned().unwrap_or_else(F::zero)
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            for (&i, m) in &self.columns[j] {
                add_into(&mut out, i, c.mul(m));
            }
        }
        out
    }

    /// `self × other`.
    pub fn compose(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Matrix {
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        F::rank(&self.columns)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim()
    }

    /// `n` on the first line, then `n` rows of `n` entries.
    pub fn to_text(&self) -> String {
        let n = self.dim();
        let mut out = format!("{n}\n");
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| self.entry(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, first) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty matrix file"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::parse(ln, "expected the dimension"))?;
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| F::parse(t).ok_or_else(|| Error::parse(ln, format!("bad entry `{t}`"))))
                .collect::<Result<Vec<F>>>()?;
            if row.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        Matrix::from_rows(rows)
    }
}

/// The permutation of the basis of `A(graph)` induced by a graph
/// automorphism: `b_v ↦ b_σ(v)` and `b_e ↦ b_σ̄(e)`.
pub fn induced_basis_permutation(graph: &Graph, sigma: &Permutation) -> Result<Permutation> {
    let f = GraphMap::new(graph, graph, sigma.images().to_vec())?;
    f.check_injective()?;
    if f.check_homomorphism().is_err() {
        return Err(Error::NotAutomorphism);
    }
    let nv = graph.vertex_count();
    let mut images = sigma.images().to_vec();
    for e in 0..graph.edge_count() {
        images.push(nv + f.edge_image(e).expect("automorphisms send edges to edges"));
    }
    Ok(Permutation::from_vec_unchecked(images))
}

/// The permutation matrix of [`induced_basis_permutation`].
pub fn induced_algebra_map<F: Field>(graph: &Graph, sigma: &Permutation) -> Result<Matrix<F>> {
    Ok(Matrix::permutation(&induced_basis_permutation(
        graph, sigma,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Zp;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn single_edge() -> Graph {
        Graph::new(["x", "y"], [("x", "y")]).unwrap()
    }

    #[test]
    fn construction() {
        let a = evolution_algebra(&single_edge());
        assert_eq!(a.dim(), 3);
        assert_eq!(
            a.to_text(),
            "# autoratio-evoalg v1\nx : x\ny : y\n{x,y} : x + y + {x,y}\n"
        );
        assert_eq!(
            evolution_algebra(&Graph::gamma(3, 2, false).unwrap()).dim(),
            11
        );
        let two = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let a2 = evolution_algebra(&two);
        assert_eq!(a2.dim(), 2);
        assert!((0..2).all(|i| a2.square(i) == &SparseVec::from([(i, q(1))])));
    }

    #[test]
    fn products() {
        let a = evolution_algebra(&single_edge());
        let b = |i: usize| {
            let mut v = vec![q(0); 3];
            v[i] = q(1);
            v
        };
        assert_eq!(a.multiply(&b(0), &b(0)).unwrap(), b(0));
        assert_eq!(a.multiply(&b(0), &b(1)).unwrap(), vec![q(0); 3]);
        assert_eq!(a.multiply(&b(0), &b(2)).unwrap(), vec![q(0); 3]);
        let xe = vec![q(1), q(0), q(1)];
        assert_eq!(a.multiply(&xe, &xe).unwrap(), vec![q(2), q(1), q(1)]);
        assert!(a.multiply(&xe, &b(0)[..2]).is_err());
    }

    #[test]
    fn regularity() {
        assert!(evolution_algebra(&Graph::gamma(2, 2, false).unwrap()).is_regular());
        let mut a = evolution_algebra(&single_edge());
        assert!(a.is_regular());
        a.set_square(1, SparseVec::new());
        assert!(!a.is_regular());
        assert!(
            evolution_algebra_from_graph::<Zp<2>>(&Graph::gamma(2, 2, true).unwrap()).is_regular()
        );
    }

    #[test]
    fn automorphism_certification() {
        let g = Graph::gamma(2, 2, false).unwrap();
        let a = evolution_algebra(&g);
        assert!(a.is_algebra_automorphism(&Matrix::identity(9)).unwrap());
        let swap =
            induced_algebra_map::<Rational>(&g, &Permutation::transposition(5, 1, 2)).unwrap();
        assert!(a.is_algebra_automorphism(&swap).unwrap());
        // Edges {c0,c1} and {c0,c2} are basis vectors 5 and 6.
        assert_eq!(swap.entry(6, 5), q(1));
        assert_eq!(swap.entry(5, 6), q(1));
        assert!(a.is_algebra_automorphism(&Matrix::identity(3)).is_err());

        let g23 = Graph::gamma(2, 3, false).unwrap();
        let a23 = evolution_algebra(&g23);
        // Swapping c1 with d3 is not a graph automorphism.
        let bad = Permutation::transposition(a23.dim(), 1, 5);
        assert!(!a23
            .is_algebra_automorphism(&Matrix::permutation(&bad))
            .unwrap());
        let singular = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]]).unwrap();
        let two = evolution_algebra(&Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap());
        assert!(!two.is_algebra_automorphism(&singular).unwrap());
    }

    #[test]
    fn homomorphism_of_extension() {
        let g = Graph::gamma(3, 1, false).unwrap();
        let s = Permutation::from_cycles(5, &[&[1, 2]]).unwrap();
        let t = Permutation::from_cycles(5, &[&[2, 3]]).unwrap();
        let lhs = induced_algebra_map::<Rational>(&g, &s.compose(&t).unwrap()).unwrap();
        let rhs = induced_algebra_map::<Rational>(&g, &s)
            .unwrap()
            .compose(&induced_algebra_map(&g, &t).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(induced_algebra_map::<Rational>(&g, &Permutation::transposition(5, 0, 1)).is_err());
    }

    #[test]
    fn text_formats() {
        let a = evolution_algebra(&Graph::gamma(2, 1, true).unwrap());
        assert_eq!(
            EvolutionAlgebra::<Rational>::from_text(&a.to_text()).unwrap(),
            a
        );
        let b = EvolutionAlgebra::<Rational>::from_text(
            "# comment\np : 1/2*p - q\nq : -2*p + 3/4*q\nr : 0\n",
        )
        .unwrap();
        assert_eq!(
            b.to_text(),
            "# autoratio-evoalg v1\np : 1/2*p - q\nq : -2*p + 3/4*q\nr : 0\n"
        );
        assert!(!b.is_regular());
        assert!(EvolutionAlgebra::<Rational>::from_text("p : z").is_err());
        assert!(EvolutionAlgebra::<Rational>::from_text("p : p +").is_err());

        let m = Matrix::<Rational>::from_text("2\n0 1\n1 0\n").unwrap();
        assert_eq!(Matrix::from_text(&m.to_text()).unwrap(), m);
        assert!(Matrix::<Rational>::from_text("2\n0 1\n").is_err());
    }
}
