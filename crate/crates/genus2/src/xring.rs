//! Laurent polynomials and fractions in the three variables `X12, X23, X13`
//! with [`QTLaurent`] coefficients.
//!
//! Fractions keep their denominators as multisets of canonical factors, so
//! sums land on small common denominators and zero-testing never expands a
//! denominator. Equality is by cross-multiplication; there is no gcd-based
//! canonical form.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::qt::{NotDivisible, QTLaurent, Specialization};

/// Exponent vector for `X12, X23, X13`.
pub type XExp = [i16; 3];

/// Laurent polynomial in the three `X` variables over [`QTLaurent`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct XLaurent {
    pub terms: BTreeMap<XExp, QTLaurent>,
}

impl XLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QTLaurent::one())
    }

    pub fn constant(c: QTLaurent) -> Self {
        let mut e = Self::default();
        e.add_term([0, 0, 0], &c);
        e
    }

    /// `c * X_var^e`
    pub fn monomial(var: usize, e: i16, c: QTLaurent) -> Self {
        let mut exp = [0i16; 3];
        exp[var] = e;
        let mut out = Self::default();
        out.add_term(exp, &c);
        out
    }

    /// `X_var + X_var^-1`
    pub fn var_plus_inverse(var: usize) -> Self {
        let mut out = Self::monomial(var, 1, QTLaurent::one());
        let mut exp = [0i16; 3];
        exp[var] = -1;
        out.add_term(exp, &QTLaurent::one());
        out
    }

    /// `X_var - X_var^-1`
    pub fn var_minus_inverse(var: usize) -> Self {
        let mut out = Self::monomial(var, 1, QTLaurent::one());
        let mut exp = [0i16; 3];
        exp[var] = -1;
        out.add_term(exp, &-&QTLaurent::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).map(QTLaurent::is_one).unwrap_or(false)
    }

    pub fn add_term(&mut self, e: XExp, c: &QTLaurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(QTLaurent::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        XLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = Self::default();
        for (e, v) in &self.terms {
            out.add_term(*e, &(v * c));
        }
        out
    }

    /// Substitute `X_k -> q^(v_k/2) X_k`.
    pub fn shift(&self, v: &[i32; 3]) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            let quarters = 2 * (v[0] * e[0] as i32 + v[1] * e[1] as i32 + v[2] * e[2] as i32);
            out.add_term(*e, &c.scale_monomial(quarters, 0, &BigRational::one()));
        }
        out
    }

    /// Cyclically permute the variables `X12 -> X23 -> X13 -> X12`.
    pub fn cycle(&self) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            out.add_term([e[2], e[0], e[1]], c);
        }
        out
    }

    pub fn specialize(&self, mode: Specialization) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            out.add_term(*e, &c.specialize(mode));
        }
        out
    }

    fn min_exponents(&self) -> XExp {
        let mut it = self.terms.keys();
        let first = *it.next().unwrap();
        it.fold(first, |m, e| [m[0].min(e[0]), m[1].min(e[1]), m[2].min(e[2])])
    }

    /// Split into `unit * canonical` where the unit is an invertible monomial
    /// `c q^(a/4) t^(b/4) X^m` and the canonical part has minimal exponents 0
    /// and lex-leading coefficient with leading term 1.
    pub fn canonicalize(&self) -> (Unit, XLaurent) {
        assert!(!self.is_zero());
        let m = self.min_exponents();
        let (lead_exp, lead_coeff) = self.terms.iter().next_back().unwrap();
        let _ = lead_exp;
        let (&(a, b), c) = lead_coeff.iter().next_back().unwrap();
        let unit = Unit { x: m, qt: (a, b), c: c.clone() };
        let inv = QTLaurent::monomial(-a, -b, c.recip());
        let mut canon = XLaurent::default();
        for (e, v) in &self.terms {
            canon.add_term([e[0] - m[0], e[1] - m[1], e[2] - m[2]], &(v * &inv));
        }
        (unit, canon)
    }

    /// Exact division by `d`, when the quotient exists over the coefficient
    /// ring. Same scheme as the two-parameter case: strip monomial content,
    /// then divide by the lex-leading term.
    pub fn div_exact(&self, d: &XLaurent) -> Result<XLaurent, NotDivisible> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Ok(XLaurent::zero());
        }
        let mx = self.min_exponents();
        let md = d.min_exponents();
        let mut rem = XLaurent::default();
        for (e, c) in &self.terms {
            rem.add_term([e[0] - mx[0], e[1] - mx[1], e[2] - mx[2]], c);
        }
        let mut den = XLaurent::default();
        for (e, c) in &d.terms {
            den.add_term([e[0] - md[0], e[1] - md[1], e[2] - md[2]], c);
        }
        let (de, dc) = {
            let (e, c) = den.terms.iter().next_back().unwrap();
            (*e, c.clone())
        };
        let mut quo = XLaurent::default();
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (*e, c.clone())
            };
            if re[0] < de[0] || re[1] < de[1] || re[2] < de[2] {
                return Err(NotDivisible);
            }
            let fc = rc.div_exact(&dc)?;
            let fe = [re[0] - de[0], re[1] - de[1], re[2] - de[2]];
            let mut factor = XLaurent::default();
            factor.add_term(fe, &fc);
            rem = rem.sub(&factor.mul(&den));
            quo = quo.add(&factor);
        }
        let shift = [mx[0] - md[0], mx[1] - md[1], mx[2] - md[2]];
        let mut out = XLaurent::default();
        for (e, c) in &quo.terms {
            out.add_term([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]], c);
        }
        Ok(out)
    }
}

/// Invertible monomial `c * q^(a/4) t^(b/4) * X^x`.
#[derive(Debug, Clone)]
pub struct Unit {
    pub x: XExp,
    pub qt: (i32, i32),
    pub c: BigRational,
}

impl Unit {
    fn inverse_poly(&self) -> XLaurent {
        let mut out = XLaurent::default();
        out.add_term(
            [-self.x[0], -self.x[1], -self.x[2]],
            &QTLaurent::monomial(-self.qt.0, -self.qt.1, self.c.recip()),
        );
        out
    }

}

/// Fraction of [`XLaurent`]s with a factored denominator.
#[derive(Debug, Clone, Default)]
pub struct XRational {
    pub num: XLaurent,
    /// Canonical factors with multiplicities; the denominator is their product.
    pub den: BTreeMap<XLaurent, u32>,
}

impl XRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        XRational { num: XLaurent::one(), den: BTreeMap::new() }
    }

    pub fn from_poly(num: XLaurent) -> Self {
        XRational { num, den: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn push_factor(&mut self, f: &XLaurent, mult: u32) {
        if mult == 0 {
            return;
        }
        let (unit, canon) = f.canonicalize();
        if !canon.is_one() {
            *self.den.entry(canon).or_insert(0) += mult;
        }
        let mut inv = unit.inverse_poly();
        for _ in 1..mult {
            inv = inv.mul(&unit.inverse_poly());
        }
        self.num = self.num.mul(&inv);
    }

    /// `num / (f1 * f2 * ...)`; factors are canonicalized on entry.
    pub fn new(num: XLaurent, factors: &[XLaurent]) -> Self {
        let mut out = XRational::from_poly(num);
        for f in factors {
            out.push_factor(f, 1);
        }
        out.cleanup();
        out
    }

    /// Divide by an invertible coefficient monomial.
    pub fn div_unit(&self, a: i32, b: i32, c: &BigRational) -> Self {
        XRational {
            num: self.num.scale(&QTLaurent::monomial(-a, -b, c.recip())),
            den: self.den.clone(),
        }
    }

    /// Divide by an arbitrary coefficient polynomial (kept as a constant
    /// denominator factor).
    pub fn div_scalar(&self, s: &QTLaurent) -> Self {
        let mut out = self.clone();
        out.push_factor(&XLaurent::constant(s.clone()), 1);
        out.cleanup();
        out
    }

    fn cleanup(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        // Opportunistic cancellation of denominator factors into the numerator.
        let factors: Vec<XLaurent> = self.den.keys().cloned().collect();
        for f in factors {
            while self.den.get(&f).copied().unwrap_or(0) > 0 {
                match self.num.div_exact(&f) {
                    Ok(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    Err(NotDivisible) => break,
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return XRational::zero();
        }
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        let mut out = XRational { num: self.num.mul(&other.num), den };
        out.cleanup();
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = XRational { num: self.num.scale(c), den: self.den.clone() };
        out.cleanup();
        out
    }

    pub fn neg(&self) -> Self {
        XRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Common denominator: factor-wise maximum of multiplicities.
        let mut common = self.den.clone();
        for (f, m) in &other.den {
            let e = common.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let ext = |own: &BTreeMap<XLaurent, u32>| -> XLaurent {
            let mut e = XLaurent::one();
            for (f, m) in &common {
                let have = own.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    e = e.mul(f);
                }
            }
            e
        };
        let num = self.num.mul(&ext(&self.den)).add(&other.num.mul(&ext(&other.den)));
        let mut out = XRational { num, den: common };
        out.cleanup();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Equality by cross-multiplication.
    pub fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Substitute `X_k -> q^(v_k/2) X_k` in numerator and denominator.
    pub fn shift(&self, v: &[i32; 3]) -> Self {
        let mut out = XRational::from_poly(self.num.shift(v));
        for (f, m) in &self.den {
            out.push_factor(&f.shift(v), *m);
        }
        out.cleanup();
        out
    }

    /// Cyclically permute the variables in numerator and denominator.
    pub fn cycle(&self) -> Self {
        let mut out = XRational::from_poly(self.num.cycle());
        for (f, m) in &self.den {
            out.push_factor(&f.cycle(), *m);
        }
        out.cleanup();
        out
    }

    /// Specialize the coefficient parameters; fails if a denominator factor
    /// collapses to zero.
    pub fn specialize(&self, mode: Specialization) -> Result<Self, QSingular> {
        let mut out = XRational::from_poly(self.num.specialize(mode));
        for (f, m) in &self.den {
            let fs = f.specialize(mode);
            if fs.is_zero() {
                return Err(QSingular);
            }
            out.push_factor(&fs, *m);
        }
        out.cleanup();
        Ok(out)
    }

    /// Expanded denominator (used only for rendering).
    pub fn den_expanded(&self) -> XLaurent {
        let mut d = XLaurent::one();
        for (f, m) in &self.den {
            for _ in 0..*m {
                d = d.mul(f);
            }
        }
        d
    }
}

impl PartialEq for XRational {
    fn eq(&self, other: &Self) -> bool {
        XRational::eq(self, other)
    }
}

/// A parameter specialization hit a vanishing denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSingular;

impl fmt::Display for QSingular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "denominator vanishes under the requested specialization")
    }
}

impl std::error::Error for QSingular {}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["X12", "X23", "X13"];
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (k, &ek) in e.iter().enumerate() {
                if ek != 0 {
                    write!(f, "*{}^{}", names[k], ek)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for XRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den_expanded())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(var: usize) -> XRational {
        XRational::from_poly(XLaurent::monomial(var, 1, QTLaurent::one()))
    }

    #[test]
    fn fraction_cancellation() {
        // 1/(X12 - X12^-1) + (-1)/(X12 - X12^-1) = 0
        let f = XRational::new(XLaurent::one(), &[XLaurent::var_minus_inverse(0)]);
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn cross_multiplication_equality() {
        // X12 / 1 == X12^2 / X12
        let lhs = x(0);
        let rhs = XRational::new(
            XLaurent::monomial(0, 2, QTLaurent::one()),
            &[XLaurent::monomial(0, 1, QTLaurent::one())],
        );
        assert!(lhs.eq(&rhs));
    }

    #[test]
    fn identity_multiplication() {
        let f = XRational::from_poly(XLaurent::var_plus_inverse(0));
        assert!(f.mul(&XRational::one()).eq(&f));
    }

    #[test]
    fn shift_examples() {
        // shift(X12, (1,0,0)) = q^(1/2) X12
        let shifted = x(0).shift(&[1, 0, 0]);
        let want = x(0).scale(&QTLaurent::q_pow(2));
        assert!(shifted.eq(&want));
        // untouched variable
        let f = XRational::from_poly(XLaurent::var_plus_inverse(1));
        assert!(f.shift(&[1, 0, 0]).eq(&f));
    }

    #[test]
    fn shift_inverse_roundtrip() {
        let f = XRational::new(
            XLaurent::var_plus_inverse(0).mul(&XLaurent::var_plus_inverse(2)),
            &[XLaurent::var_minus_inverse(0), XLaurent::var_minus_inverse(2)],
        );
        let round = f.shift(&[1, 0, 0]).shift(&[-1, 0, 0]);
        assert!(round.eq(&f));
    }

    #[test]
    fn shift_is_additive_and_multiplicative() {
        let f = XRational::new(
            XLaurent::var_minus_inverse(1).add(&XLaurent::one()),
            &[XLaurent::var_minus_inverse(0)],
        );
        let g = XRational::new(
            XLaurent::var_plus_inverse(0),
            &[XLaurent::var_minus_inverse(1)],
        );
        let v = [1, -1, 0];
        let w = [0, 2, 1];
        let vw = [1, 1, 1];
        assert!(f.shift(&v).shift(&w).eq(&f.shift(&vw)));
        assert!(f.mul(&g).shift(&v).eq(&f.shift(&v).mul(&g.shift(&v))));
        assert!(f.add(&g).shift(&v).eq(&f.shift(&v).add(&g.shift(&v))));
    }

    #[test]
    fn ring_axioms_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut p = XLaurent::zero();
            for _ in 0..rng.gen_range(1..4) {
                p.add_term(
                    [rng.gen_range(-2..3), rng.gen_range(-2..3), rng.gen_range(-2..3)],
                    &QTLaurent::monomial(
                        rng.gen_range(-2..3),
                        0,
                        BigRational::from_integer(rng.gen_range(-3i64..4).into()),
                    ),
                );
            }
            p
        };
        for _ in 0..30 {
            let num_a = rand_poly(&mut rng);
            let num_b = rand_poly(&mut rng);
            let num_c = rand_poly(&mut rng);
            let da = rand_poly(&mut rng);
            let db = rand_poly(&mut rng);
            if da.is_zero() || db.is_zero() {
                continue;
            }
            let a = XRational::new(num_a, &[da.clone()]);
            let b = XRational::new(num_b, &[db]);
            let c = XRational::new(num_c, &[da]);
            assert!(a.mul(&b).eq(&b.mul(&a)));
            assert!(a.mul(&b.add(&c)).eq(&a.mul(&b).add(&a.mul(&c))));
            assert!(a.add(&b).add(&c).eq(&a.add(&b.add(&c))));
        }
    }
}
