//! Permutations of `{0, .., n-1}` and explicitly enumerated permutation groups.
//!
//! Composition applies the right operand first: `a.compose(&b)` maps `i` to
//! `a(b(i))`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored in one-line image notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &from) in cycle.iter().enumerate() {
                let to = cycle[(k + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(Error::NotAPermutation(cycle.to_vec()));
                }
                images[from] = to;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

/// A finite set of permutations of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSet {
    degree: usize,
    elements: BTreeSet<Permutation>,
}

impl PermSet {
    pub fn new(degree: usize) -> Self {
        PermSet {
            degree,
            elements: BTreeSet::new(),
        }
    }

    pub fn insert(&mut self, p: Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.elements.insert(p))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter()
    }

    /// True when the set contains the identity and is closed under
    /// composition and inversion.
    pub fn is_group(&self) -> bool {
        if !self.elements.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.elements.contains(&a.inverse())
                && self
                    .elements
                    .iter()
                    .all(|b| self.elements.contains(&a.compose(b).unwrap()))
        })
    }

    /// The subgroup generated by `gens`, by breadth-first saturation.
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<PermSet> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut set = PermSet::new(degree);
        let identity = Permutation::identity(degree);
        set.elements.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        // Finite groups: closing under right multiplication by generators
        // already yields inverses.
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let next = p.compose(g)?;
                if set.elements.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(set)
    }

    /// Whether the set restricted to `support` is the full symmetric group on
    /// it. Every element must fix all points outside `support`.
    pub fn is_symmetric_on(&self, support: &[usize]) -> Result<bool> {
        let inside: BTreeSet<usize> = support.iter().copied().collect();
        for p in &self.elements {
            if let Some(i) = (0..self.degree).find(|&i| !inside.contains(&i) && p.apply(i) != i) {
                return Err(Error::OutsideSupport(i));
            }
        }
        // Elements fixing the complement are determined by their restriction,
        // so distinct elements are distinct restrictions.
        Ok(self.is_group() && BigUint::from(self.order()) == factorial(inside.len() as u64))
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::collections::btree_set::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    go(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn composition_conventions() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&a).unwrap(), a);
        assert!(a.compose(&a).unwrap().is_identity());
        // 0 -> b -> 0 -> a -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
        assert_eq!(a.compose(&b).unwrap().images(), [1, 2, 0]);
        assert!(a.compose(&Permutation::identity(4)).is_err());
        assert_eq!(a.compose(&b).unwrap().to_string(), "[1,2,0]");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
    }

    #[test]
    fn closures() {
        assert_eq!(PermSet::closure(3, &[]).unwrap().order(), 1);
        let t = Permutation::transposition(3, 0, 1);
        assert_eq!(
            PermSet::closure(3, std::slice::from_ref(&t))
                .unwrap()
                .order(),
            2
        );
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let s3 = PermSet::closure(3, &[t, c]).unwrap();
        let brute: BTreeSet<_> = all_permutations(3).into_iter().collect();
        assert_eq!(s3.elements, brute);
        assert!(s3.is_group());
    }

    #[test]
    fn symmetric_recognition() {
        let s3 = PermSet::closure(
            4,
            &[
                Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert!(s3.is_symmetric_on(&[1, 2, 3]).unwrap());
        assert!(matches!(
            s3.is_symmetric_on(&[1, 2]),
            Err(Error::OutsideSupport(3))
        ));
        assert!(!PermSet::closure(2, &[])
            .unwrap()
            .is_symmetric_on(&[0, 1])
            .unwrap());
        let order_two = PermSet::closure(3, &[Permutation::transposition(3, 0, 1)]).unwrap();
        assert!(!order_two.is_symmetric_on(&[0, 1, 2]).unwrap());
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(Permutation)
    }

    proptest! {
        #[test]
        fn closure_order_divides_factorial(gens in prop::collection::vec(perm_strategy(5), 0..3)) {
            let g = PermSet::closure(5, &gens).unwrap();
            prop_assert_eq!(120 % g.order(), 0);
            let again = PermSet::closure(5, &g.iter().cloned().collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(&again, &g);
            for p in &g {
                prop_assert!(g.contains(&p.inverse()));
            }
        }

        #[test]
        fn inverse_cancels(p in perm_strategy(7)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }
    }
}
