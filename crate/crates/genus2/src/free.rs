//! Free-algebra elements (noncommutative words with Laurent coefficients) and
//! their normally ordered counterparts.

use std::collections::BTreeMap;
use std::fmt;

use crate::gens::{Gen, NormalMonomial};
use crate::qt::{QTLaurent, Specialization};

/// A word in the free algebra on the fifteen generators.
pub type Word = Vec<Gen>;

pub fn word_weight(w: &[Gen]) -> u32 {
    w.iter().map(|g| g.weight()).sum()
}

/// Finitely supported map from words to coefficients. The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    pub terms: BTreeMap<Word, QTLaurent>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(vec![], QTLaurent::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(vec![g], QTLaurent::one())
    }

    pub fn term(w: Word, c: QTLaurent) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &QTLaurent) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// Noncommutative product: concatenates words.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, &(c1 * c2));
            }
        }
        out
    }

    pub fn specialize(&self, mode: Specialization) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.specialize(mode));
        }
        out
    }

    /// Relabel generators through a permutation, keeping word order.
    pub fn permute(&self, perm: &dyn Fn(Gen) -> Gen) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|&g| perm(g)).collect(), c);
        }
        out
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|w| word_weight(w)).max().unwrap_or(0)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for g in w {
                write!(f, "*{g}")?;
            }
        }
        Ok(())
    }
}

/// Finitely supported map from normally ordered monomials to coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalElement {
    pub terms: BTreeMap<NormalMonomial, QTLaurent>,
}

impl NormalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(NormalMonomial::one(), QTLaurent::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(NormalMonomial::gen(g), QTLaurent::one())
    }

    pub fn term(m: NormalMonomial, c: QTLaurent) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: &QTLaurent) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(QTLaurent::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, &(v * c));
        }
        out
    }

    pub fn coeff(&self, m: &NormalMonomial) -> QTLaurent {
        self.terms.get(m).cloned().unwrap_or_else(QTLaurent::zero)
    }

    /// Greatest monomial in the calibrated order.
    pub fn leading_monomial(&self) -> Option<&NormalMonomial> {
        self.terms.keys().next_back()
    }

    pub fn specialize(&self, mode: Specialization) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &c.specialize(mode));
        }
        out
    }

    /// Forget the ordering and view each monomial as a word.
    pub fn to_free(&self) -> FreeElement {
        let mut out = FreeElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.word(), c);
        }
        out
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }
}
