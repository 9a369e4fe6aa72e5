//! The fifteen generators, their grading weights, normally ordered monomials
//! and the weighted degree reverse lexicographic monomial order.

use std::cmp::Ordering;
use std::fmt;

/// Number of generators.
pub const NGEN: usize = 15;

/// Generator names in the fixed normal-ordering sequence.
pub const GEN_NAMES: [&str; NGEN] = [
    "O1", "O2", "O3", "O4", "O5", "O6", "O12", "O23", "O34", "O45", "O56", "O61", "O123", "O234",
    "O345",
];

/// Grading weights: 2 for the level-one generators, 3 for the level-two ones,
/// 4 for the level-three ones.
pub const GEN_WEIGHTS: [u32; NGEN] = [2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 4];

/// A generator, identified by its position `0..15` in the fixed sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u8);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn weight(self) -> u32 {
        GEN_WEIGHTS[self.index()]
    }

    pub fn name(self) -> &'static str {
        GEN_NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Gen> {
        GEN_NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| Gen(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Gen> {
        (0..NGEN as u8).map(Gen)
    }

    /// Level-one generator `O_i` with 1-based cyclic index (mod 6).
    pub fn level1(i: i32) -> Gen {
        Gen(((i - 1).rem_euclid(6)) as u8)
    }

    /// Level-two generator `O_{i,i+1}` with 1-based cyclic index (mod 6).
    pub fn level2(i: i32) -> Gen {
        Gen(6 + ((i - 1).rem_euclid(6)) as u8)
    }

    /// Level-three generator `O_{i,i+1,i+2}` with 1-based cyclic index.
    /// Indices fold mod 3: `O_{456} = O_{123}` and so on.
    pub fn level3(i: i32) -> Gen {
        Gen(12 + ((i - 1).rem_euclid(3)) as u8)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector of a normally ordered monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NormalMonomial {
    pub exps: [u16; NGEN],
}

impl NormalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn gen(g: Gen) -> Self {
        let mut m = Self::default();
        m.exps[g.index()] = 1;
        m
    }

    pub fn gen_pow(g: Gen, e: u16) -> Self {
        let mut m = Self::default();
        m.exps[g.index()] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn weight(&self) -> u32 {
        self.exps
            .iter()
            .zip(GEN_WEIGHTS.iter())
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for i in 0..NGEN {
            exps[i] = exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        NormalMonomial { exps }
    }

    /// Componentwise divisibility.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a >= b)
    }

    /// Componentwise difference; caller must ensure divisibility.
    pub fn div(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for i in 0..NGEN {
            exps[i] -= other.exps[i];
        }
        NormalMonomial { exps }
    }

    /// Bitmask of the support, used as a cheap divisibility prefilter.
    pub fn support_mask(&self) -> u16 {
        let mut m = 0u16;
        for i in 0..NGEN {
            if self.exps[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// The word `O1^e1 O2^e2 ...` spelled out as a sequence of generators.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::with_capacity(self.exps.iter().map(|&e| e as usize).sum());
        for i in 0..NGEN {
            for _ in 0..self.exps[i] {
                w.push(Gen(i as u8));
            }
        }
        w
    }

    /// Sorted monomial of a word's generator multiset.
    pub fn from_word(word: &[Gen]) -> Self {
        let mut m = Self::default();
        for g in word {
            m.exps[g.index()] = m.exps[g.index()]
                .checked_add(1)
                .expect("monomial exponent overflow");
        }
        m
    }

    /// Compare in the calibrated monomial order (see [`crate::engine`]):
    /// weighted degree first, ties broken reverse-lexicographically scanning
    /// exponents from `O345` down to `O1`, smaller exponent at the first
    /// difference winning. Equivalently, degrevlex for the variable ranking
    /// `O1 > O2 > ... > O345`.
    pub fn cmp_order(&self, other: &Self) -> Ordering {
        match self.weight().cmp(&other.weight()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..NGEN).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_order(other)
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..NGEN {
            match self.exps[i] {
                0 => {}
                e => {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "{}", GEN_NAMES[i])?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_by_level() {
        assert_eq!(Gen::from_name("O1").unwrap().weight(), 2);
        assert_eq!(Gen::from_name("O61").unwrap().weight(), 3);
        assert_eq!(Gen::from_name("O345").unwrap().weight(), 4);
    }

    #[test]
    fn cyclic_index_folding() {
        assert_eq!(Gen::level1(7), Gen::from_name("O1").unwrap());
        assert_eq!(Gen::level2(6), Gen::from_name("O61").unwrap());
        assert_eq!(Gen::level3(4), Gen::from_name("O123").unwrap());
        assert_eq!(Gen::level3(5), Gen::from_name("O234").unwrap());
        assert_eq!(Gen::level3(6), Gen::from_name("O345").unwrap());
    }

    #[test]
    fn order_compares_weight_first() {
        let a = NormalMonomial::gen(Gen::from_name("O34").unwrap())
            .mul(&NormalMonomial::gen(Gen::from_name("O45").unwrap()));
        let low = NormalMonomial::gen(Gen::from_name("O1").unwrap());
        assert!(a > low);
    }

    #[test]
    fn order_tie_break() {
        // weight-6 tie: O34*O45 beats O4*O345
        let a = NormalMonomial::gen(Gen::from_name("O34").unwrap())
            .mul(&NormalMonomial::gen(Gen::from_name("O45").unwrap()));
        let b = NormalMonomial::gen(Gen::from_name("O4").unwrap())
            .mul(&NormalMonomial::gen(Gen::from_name("O345").unwrap()));
        assert!(a > b);
    }

    #[test]
    fn word_roundtrip() {
        let m = NormalMonomial::gen_pow(Gen(0), 2).mul(&NormalMonomial::gen(Gen(12)));
        assert_eq!(NormalMonomial::from_word(&m.word()), m);
        assert_eq!(m.to_string(), "O1^2*O123");
    }
}
