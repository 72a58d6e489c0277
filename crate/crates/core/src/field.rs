//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rationals, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Sparse vector: coordinate index to nonzero coefficient.
pub type SparseVec<F> = BTreeMap<usize, F>;

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    fn parse(text: &str) -> Option<Self>;

    /// Rank of the span of `rows`.
    fn rank(rows: &[SparseVec<Self>]) -> usize {
        let mut rows: Vec<SparseVec<Self>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&k, c)| (k, c.clone()))
                    .collect()
            })
            .filter(|r: &SparseVec<Self>| !r.is_empty())
            .collect();
        let mut rank = 0;
        while let Some(pick) = pivot_row(&rows) {
            let pivot = rows.swap_remove(pick);
            rank += 1;
            let (&col, lead) = pivot.iter().next().expect("nonempty");
            let lead_inv = lead.inv().expect("nonzero");
            for row in rows.iter_mut() {
                if let Some(c) = row.get(&col).cloned() {
                    let factor = c.mul(&lead_inv);
                    for (&k, v) in &pivot {
                        let entry = row.entry(k).or_insert_with(Self::zero);
                        *entry = entry.sub(&factor.mul(v));
                        if entry.is_zero() {
                            row.remove(&k);
                        }
                    }
                }
            }
            rows.retain(|r| !r.is_empty());
        }
        rank
    }
}

/// Row whose leading column is smallest, preferring the sparsest.
fn pivot_row<T>(rows: &[SparseVec<T>]) -> Option<usize> {
    rows.iter()
        .enumerate()
        .min_by_key(|(_, r)| (*r.keys().next().expect("nonempty"), r.len()))
        .map(|(i, _)| i)
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn parse(text: &str) -> Option<Self> {
        text.trim().parse().ok()
    }

    /// Fraction-free elimination: rows are scaled to primitive integer rows
    /// and each reduction step is `lead * row - c * pivot` divided by the
    /// content of the result.
    fn rank(rows: &[SparseVec<Self>]) -> usize {
        let mut rows: Vec<SparseVec<BigInt>> = rows
            .iter()
            .map(|r| {
                let r: SparseVec<&Self> = r
                    .iter()
                    .filter(|(_, c)| !Zero::is_zero(*c))
                    .map(|(&k, c)| (k, c))
                    .collect();
                let lcm = r.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                primitive(
                    r.iter()
                        .map(|(&k, x)| (k, x.numer() * (&lcm / x.denom())))
                        .collect(),
                )
            })
            .filter(|r| !r.is_empty())
            .collect();
        let mut rank = 0;
        while let Some(pick) = pivot_row(&rows) {
            let pivot = rows.swap_remove(pick);
            rank += 1;
            let (&col, lead) = pivot.iter().next().expect("nonempty");
            for row in rows.iter_mut() {
                if let Some(c) = row.get(&col).cloned() {
                    let mut next = SparseVec::new();
                    for k in row
                        .keys()
                        .chain(pivot.keys())
                        .copied()
                        .collect::<std::collections::BTreeSet<_>>()
                    {
                        let a = row.get(&k).map_or_else(BigInt::zero, |v| lead * v);
                        let b = pivot.get(&k).map_or_else(BigInt::zero, |v| &c * v);
                        let v = a - b;
                        if !v.is_zero() {
                            next.insert(k, v);
                        }
                    }
                    *row = primitive(next);
                }
            }
            rows.retain(|r| !r.is_empty());
        }
        rank
    }
}

fn primitive(row: SparseVec<BigInt>) -> SparseVec<BigInt> {
    let content = row.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() || content.is_one() {
        return row;
    }
    row.into_iter().map(|(k, v)| (k, v / &content)).collect()
}

/// The prime field `Z/P`. `P` must be prime for division to be meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub fn new(n: i64) -> Self {
        Zp(n.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Zp(r.iter_u64_digits().next().unwrap_or(0))
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self.0 as u128, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u128;
            }
            base = base * base % P as u128;
            e >>= 1;
        }
        Zp(acc as u64)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn one() -> Self {
        Zp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 + other.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 + P as u128 - other.0 as u128) % P as u128) as u64)
    }
    fn mul(&self, other: &Self) -> Self {
        Zp(((self.0 as u128 * other.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Zp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
    fn from_i64(n: i64) -> Self {
        Zp::new(n)
    }
    fn parse(text: &str) -> Option<Self> {
        let r: Rational = text.trim().parse().ok()?;
        let num = Zp::<P>::from_bigint(r.numer());
        let den = Zp::<P>::from_bigint(r.denom());
        Some(num.mul(&den.inv()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rows<F: Field>(dense: &[&[i64]]) -> Vec<SparseVec<F>> {
        dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(k, &v)| (k, F::from_i64(v)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
        assert_eq!(<Rational as Field>::parse("-6/8"), Some(q(-3, 4)));
        assert_eq!(q(3, 4).to_string(), "3/4");
        assert_eq!(<Rational as Field>::inv(&q(0, 1)), None);
    }

    #[test]
    fn ranks() {
        let m: &[&[i64]] = &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]];
        assert_eq!(Rational::rank(&rows::<Rational>(m)), 2);
        assert_eq!(Zp::<7>::rank(&rows::<Zp<7>>(m)), 2);
        let full: &[&[i64]] = &[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]];
        assert_eq!(Rational::rank(&rows::<Rational>(full)), 3);
        // det = 4, which vanishes mod 2.
        assert_eq!(Zp::<2>::rank(&rows::<Zp<2>>(full)), 2);
        assert_eq!(Rational::rank(&[]), 0);
    }

    #[test]
    fn fraction_rows() {
        let r: Vec<SparseVec<Rational>> = vec![
            [(0, q(1, 2)), (1, q(1, 3))].into_iter().collect(),
            [(0, q(3, 2)), (1, q(1, 1))].into_iter().collect(),
        ];
        assert_eq!(Rational::rank(&r), 1);
    }

    #[test]
    fn prime_field() {
        let a = Zp::<5>::new(3);
        assert_eq!(a.inv(), Some(Zp::new(2)));
        assert_eq!(a.neg(), Zp::new(2));
        assert_eq!(Zp::<5>::parse("1/2"), Some(Zp::new(3)));
        assert_eq!(Zp::<5>::parse("1/5"), None);
        assert_eq!(Zp::<5>::new(-1).value(), 4);
    }
}
