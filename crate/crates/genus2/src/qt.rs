//! Exact Laurent polynomials in `q^(1/4)` and `t^(1/4)` over arbitrary-precision rationals.
//!
//! Exponents are stored as integers counting powers of the quarter roots, so
//! `q^(1/2)` is the key `(2, 0)` and `t^(-3/4)` is `(0, -3)`. Every coefficient
//! appearing in the algebra lives in this ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Substitutions of the two parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `q^(1/4) -> 1`
    QToOne,
    /// `t^(1/4) -> 1`
    TToOne,
    /// `q^(1/4) -> 1` and `t^(1/4) -> 1`
    BothToOne,
    /// `t^(1/4) -> q^(1/4)`
    TToQ,
}

/// Raised when an exact division leaves a remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quotient is not a Laurent polynomial")
    }
}

impl std::error::Error for NotDivisible {}

/// Laurent polynomial in `q^(1/4)`, `t^(1/4)` with rational coefficients.
///
/// Invariant: no stored coefficient is zero; the zero element has empty support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QTLaurent {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl QTLaurent {
    pub fn zero() -> Self {
        QTLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    /// `c * q^(a/4) * t^(b/4)`
    pub fn monomial(a: i32, b: i32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        QTLaurent { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::monomial(
            0,
            0,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// `q^(a/4)`
    pub fn q_pow(a: i32) -> Self {
        Self::monomial(a, 0, BigRational::one())
    }

    /// `t^(b/4)`
    pub fn t_pow(b: i32) -> Self {
        Self::monomial(0, b, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `((a, b), coeff)` with `(a, b)` ascending.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    /// Single-term decomposition, if this is a monomial.
    pub fn as_monomial(&self) -> Option<((i32, i32), &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, v)| (*k, v))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, key: (i32, i32), c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Multiply in place by `c * q^(a/4) t^(b/4)`.
    pub fn scale_monomial(&self, a: i32, b: i32, c: &BigRational) -> QTLaurent {
        if c.is_zero() {
            return QTLaurent::zero();
        }
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QTLaurent {
        self.scale_monomial(0, 0, c)
    }

    /// Substitute per `mode` and collect terms.
    pub fn specialize(&self, mode: Specialization) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (&(a, b), c) in &self.terms {
            let key = match mode {
                Specialization::QToOne => (0, b),
                Specialization::TToOne => (a, 0),
                Specialization::BothToOne => (0, 0),
                Specialization::TToQ => (a + b, 0),
            };
            out.add_term(key, c);
        }
        out
    }

    fn min_exponents(&self) -> (i32, i32) {
        let mut it = self.terms.keys();
        let &(a0, b0) = it.next().unwrap();
        it.fold((a0, b0), |(a, b), &(x, y)| (a.min(x), b.min(y)))
    }

    /// Exact division; errors unless `self = q * d` for a Laurent polynomial `q`.
    ///
    /// Monomial content is stripped from both operands first, which reduces the
    /// question to ordinary polynomial division by a single divisor: there the
    /// lex-leading term of any multiple of `d` is divisible by the lex-leading
    /// term of `d`, so a failed step certifies non-divisibility.
    pub fn div_exact(&self, d: &QTLaurent) -> Result<QTLaurent, NotDivisible> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Ok(QTLaurent::zero());
        }
        // Single-term divisors are units of the Laurent ring.
        if let Some(((a, b), c)) = d.as_monomial() {
            return Ok(self.scale_monomial(-a, -b, &c.recip()));
        }
        let (xa, xb) = self.min_exponents();
        let (ma, mb) = d.min_exponents();
        let one = BigRational::one();
        let mut rem = self.scale_monomial(-xa, -xb, &one);
        let den = d.scale_monomial(-ma, -mb, &one);
        let (&(da, db), dc) = den.terms.iter().next_back().unwrap();
        let mut quo = QTLaurent::zero();
        while !rem.is_zero() {
            let (&(ra, rb), rc) = rem.terms.iter().next_back().unwrap();
            if ra < da || rb < db {
                return Err(NotDivisible);
            }
            let factor = QTLaurent::monomial(ra - da, rb - db, rc / dc);
            rem -= &(&factor * &den);
            quo += &factor;
        }
        Ok(quo.scale_monomial(xa - ma, xb - mb, &one))
    }
}

impl Add for &QTLaurent {
    type Output = QTLaurent;
    fn add(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QTLaurent> for QTLaurent {
    fn add_assign(&mut self, rhs: &QTLaurent) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, v);
        }
    }
}

impl Sub for &QTLaurent {
    type Output = QTLaurent;
    fn sub(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&QTLaurent> for QTLaurent {
    fn sub_assign(&mut self, rhs: &QTLaurent) {
        for (k, v) in &rhs.terms {
            self.add_term(*k, &-v);
        }
    }
}

impl Neg for &QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        QTLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Mul for &QTLaurent {
    type Output = QTLaurent;
    fn mul(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

fn fmt_exponent(f: &mut fmt::Formatter<'_>, sym: &str, e: i32) -> fmt::Result {
    debug_assert!(e != 0);
    if e == 4 {
        write!(f, "{sym}")
    } else if e % 4 == 0 {
        if e > 0 {
            write!(f, "{sym}^{}", e / 4)
        } else {
            write!(f, "{sym}^({})", e / 4)
        }
    } else if e % 2 == 0 {
        write!(f, "{sym}^({}/2)", e / 2)
    } else {
        write!(f, "{sym}^({e}/4)")
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, a: i32, b: i32, c: &BigRational) -> fmt::Result {
    let mut lead = true;
    if !c.is_one() || (a == 0 && b == 0) {
        write!(f, "{c}")?;
        lead = false;
    }
    if a != 0 {
        if !lead {
            write!(f, "*")?;
        }
        fmt_exponent(f, "q", a)?;
        lead = false;
    }
    if b != 0 {
        if !lead {
            write!(f, "*")?;
        }
        fmt_exponent(f, "t", b)?;
    }
    Ok(())
}

impl fmt::Display for QTLaurent {
    /// Canonical rendering: terms sorted by `(a, b)` descending, reduced
    /// fractional exponents, e.g. `q^(1/2)*t^(-1/2) + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_term(f, a, b, &c.abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QTLaurent {
        QTLaurent::q_pow(4)
    }

    fn t() -> QTLaurent {
        QTLaurent::t_pow(4)
    }

    #[test]
    fn monomial_product_adds_exponents() {
        let h = QTLaurent::q_pow(2);
        assert_eq!(&h * &h, q());
    }

    #[test]
    fn difference_of_squares() {
        let sum = &q() + &t();
        let diff = &q() - &t();
        let mut expect = QTLaurent::monomial(8, 0, BigRational::one());
        expect.add_term((0, 8), &-BigRational::one());
        assert_eq!(&sum * &diff, expect);
    }

    #[test]
    fn casimir_coefficient_expansion() {
        // q^(-3/2) t^(-1/2) (2q+1)(q+t)
        let two_q_plus_1 = &QTLaurent::from_int(2).mul(&q()) + &QTLaurent::one();
        let q_plus_t = &q() + &t();
        let c = QTLaurent::monomial(-6, -2, BigRational::one());
        let got = &(&c * &two_q_plus_1) * &q_plus_t;
        let mut expect = QTLaurent::monomial(2, -2, BigRational::from_integer(2.into()));
        expect.add_term((-2, -2), &BigRational::one());
        expect.add_term((-2, 2), &BigRational::from_integer(2.into()));
        expect.add_term((-6, 2), &BigRational::one());
        assert_eq!(got, expect);
    }

    #[test]
    fn div_exact_quantum_integer() {
        // (q - q^-1) / (q^(1/2) - q^(-1/2)) = q^(1/2) + q^(-1/2)
        let num = &QTLaurent::q_pow(4) - &QTLaurent::q_pow(-4);
        let den = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
        let expect = &QTLaurent::q_pow(2) + &QTLaurent::q_pow(-2);
        assert_eq!(num.div_exact(&den).unwrap(), expect);
    }

    #[test]
    fn div_exact_zero_numerator() {
        let den = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
        assert_eq!(QTLaurent::zero().div_exact(&den).unwrap(), QTLaurent::zero());
    }

    #[test]
    fn div_exact_unit_by_non_unit_fails() {
        let den = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
        assert_eq!(QTLaurent::one().div_exact(&den), Err(NotDivisible));
    }

    #[test]
    fn div_exact_roundtrip_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = QTLaurent::zero();
                for _ in 0..rng.gen_range(1..5) {
                    p.add_term(
                        (rng.gen_range(-6..6), rng.gen_range(-6..6)),
                        &BigRational::from_integer(rng.gen_range(-4i64..5).into()),
                    );
                }
                p
            };
            let x = rand_poly(&mut rng);
            let d = rand_poly(&mut rng);
            if d.is_zero() {
                continue;
            }
            let prod = &x * &d;
            assert_eq!(prod.div_exact(&d).unwrap(), x);
        }
    }

    #[test]
    fn specialize_j_relation_coefficient() {
        // q^(-1/2) t^(-1/2) (q+t) at q=1 -> t^(1/2) + t^(-1/2)
        let c = QTLaurent::monomial(-2, -2, BigRational::one());
        let x = &c * &(&q() + &t());
        let expect = &QTLaurent::t_pow(2) + &QTLaurent::t_pow(-2);
        assert_eq!(x.specialize(Specialization::QToOne), expect);
    }

    #[test]
    fn specialize_casimir_constant() {
        // q^(-3/2) t^(-3/2) (t+1)(q+t)(q^2+t) at q=t=1 -> 8
        let c = QTLaurent::monomial(-6, -6, BigRational::one());
        let x = &(&c * &(&t() + &QTLaurent::one()))
            * &(&(&q() + &t()) * &(&QTLaurent::q_pow(8) + &t()));
        assert_eq!(
            x.specialize(Specialization::BothToOne),
            QTLaurent::from_int(8)
        );
    }

    #[test]
    fn specialize_t_to_q_merges_exponents() {
        let x = QTLaurent::monomial(3, 5, BigRational::one());
        assert_eq!(x.specialize(Specialization::TToQ), QTLaurent::q_pow(8));
    }

    #[test]
    fn ring_axioms_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = QTLaurent::zero();
            for _ in 0..rng.gen_range(0..5) {
                p.add_term(
                    (rng.gen_range(-8..8), rng.gen_range(-8..8)),
                    &BigRational::new(rng.gen_range(-9i64..10).into(), rng.gen_range(1i64..5).into()),
                );
            }
            p
        };
        for _ in 0..100 {
            let a = rand_poly(&mut rng);
            let b = rand_poly(&mut rng);
            let c = rand_poly(&mut rng);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }
    }

    #[test]
    fn specialize_is_ring_hom_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let modes = [
            Specialization::QToOne,
            Specialization::TToOne,
            Specialization::BothToOne,
            Specialization::TToQ,
        ];
        for _ in 0..100 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = QTLaurent::zero();
                for _ in 0..rng.gen_range(0..5) {
                    p.add_term(
                        (rng.gen_range(-8..8), rng.gen_range(-8..8)),
                        &BigRational::from_integer(rng.gen_range(-3i64..4).into()),
                    );
                }
                p
            };
            let x = rand_poly(&mut rng);
            let y = rand_poly(&mut rng);
            for mode in modes {
                assert_eq!(
                    (&x * &y).specialize(mode),
                    &x.specialize(mode) * &y.specialize(mode)
                );
            }
        }
    }

    #[test]
    fn display_reduced_fractions() {
        let x = QTLaurent::monomial(2, 0, BigRational::one());
        assert_eq!(x.to_string(), "q^(1/2)");
        let y = QTLaurent::monomial(4, -2, BigRational::one());
        assert_eq!(y.to_string(), "q*t^(-1/2)");
        let z = &QTLaurent::from_int(2) - &QTLaurent::q_pow(-3);
        assert_eq!(z.to_string(), "2 - q^(-3/4)");
    }
}
