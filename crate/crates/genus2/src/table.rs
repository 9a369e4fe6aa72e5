//! The normal-ordering commutation table and the terminating rewrite that
//! brings free-algebra elements to the spanning-set form.

use std::collections::BTreeMap;
use std::fmt;

use crate::free::{FreeElement, NormalElement, Word};
use crate::gens::{Gen, NormalMonomial, NGEN};
use crate::qt::{NotDivisible, QTLaurent, Specialization};
use crate::transcription::TABLE;

/// Malformed or missing transcription data.
#[derive(Debug, Clone)]
pub struct DataError(pub String);

impl fmt::Display for DataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "data error: {}", self.0)
    }
}

impl std::error::Error for DataError {}

/// One table entry for a pair `(row, col)` with `row` after `col`:
/// `[O_row, O_col]_{q^c} = sign * x`.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub c: i8,
    pub sign: i8,
    pub x: FreeElement,
}

/// The antisymmetric exponent matrix together with the right-hand sides.
#[derive(Debug, Clone)]
pub struct CommutationTable {
    /// `c[j][k]` for any pair of generator indices; antisymmetric.
    pub c: [[i8; NGEN]; NGEN],
    /// Entries keyed by `(row, col)` with `row > col` in the sequence.
    entries: BTreeMap<(u8, u8), TableEntry>,
}

impl CommutationTable {
    /// Parse the embedded transcription.
    pub fn load() -> Result<Self, DataError> {
        let mut parsed = Vec::with_capacity(TABLE.len());
        for (row, col, cval, sign, xsrc) in TABLE.iter() {
            let j = Gen::from_name(row).ok_or_else(|| DataError(format!("bad row {row}")))?;
            let k = Gen::from_name(col).ok_or_else(|| DataError(format!("bad col {col}")))?;
            let x = if *sign == 0 {
                FreeElement::zero()
            } else {
                crate::parse::parse_free(xsrc)
                    .map_err(|e| DataError(format!("entry ({row},{col}): {e}")))?
            };
            parsed.push((j, k, *cval, *sign, x));
        }
        Self::from_entries(&parsed)
    }

    /// Build and validate a table from explicit entries.
    pub fn from_entries(data: &[(Gen, Gen, i8, i8, FreeElement)]) -> Result<Self, DataError> {
        let mut c = [[0i8; NGEN]; NGEN];
        let mut entries = BTreeMap::new();
        for (j, k, cval, sign, x) in data {
            if j.index() <= k.index() {
                return Err(DataError(format!("entry ({j},{k}) not below diagonal")));
            }
            if *sign == 0 && (*cval != 0 || !x.is_zero()) {
                return Err(DataError(format!("entry ({j},{k}): zero entry must be empty")));
            }
            if cval.abs() > 2 {
                return Err(DataError(format!("entry ({j},{k}): exponent {cval} out of range")));
            }
            c[j.index()][k.index()] = *cval;
            c[k.index()][j.index()] = -*cval;
            if entries
                .insert((j.0, k.0), TableEntry { c: *cval, sign: *sign, x: x.clone() })
                .is_some()
            {
                return Err(DataError(format!("duplicate entry ({j},{k})")));
            }
        }
        if entries.len() != NGEN * (NGEN - 1) / 2 {
            return Err(DataError(format!("expected 105 entries, got {}", entries.len())));
        }
        let table = CommutationTable { c, entries };
        for ((j, k), e) in &table.entries {
            let wjk = Gen(*j).weight() + Gen(*k).weight();
            if e.x.terms.keys().any(|w| crate::free::word_weight(w) >= wjk) {
                return Err(DataError(format!(
                    "entry ({}, {}) has a right-hand side of weight >= {}",
                    Gen(*j),
                    Gen(*k),
                    wjk
                )));
            }
        }
        Ok(table)
    }

    /// Specialize all right-hand sides (used for the `t = q` algebra).
    pub fn specialize(&self, mode: Specialization) -> Self {
        CommutationTable {
            c: self.c,
            entries: self
                .entries
                .iter()
                .map(|(k, e)| {
                    (
                        *k,
                        TableEntry { c: e.c, sign: e.sign, x: e.x.specialize(mode) },
                    )
                })
                .collect(),
        }
    }

    pub fn entry(&self, row: Gen, col: Gen) -> &TableEntry {
        assert!(row.index() > col.index());
        &self.entries[&(row.0, col.0)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Gen, Gen, &TableEntry)> {
        self.entries.iter().map(|(&(j, k), e)| (Gen(j), Gen(k), e))
    }

    /// The normal-ordering relator for a pair `row` after `col`:
    /// `q^(c/4) O_row O_col - q^(-c/4) O_col O_row - sign (q^(1/2)-q^(-1/2)) x`.
    pub fn eta(&self, row: Gen, col: Gen) -> FreeElement {
        let e = self.entry(row, col);
        let mut out = FreeElement::term(vec![row, col], QTLaurent::q_pow(e.c as i32));
        out.add_term(vec![col, row], &-&QTLaurent::q_pow(-(e.c as i32)));
        if e.sign != 0 {
            let bracket = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
            let factor = bracket.scale(&num_rational::BigRational::from_integer(
                (-e.sign as i64).into(),
            ));
            out = out.add(&e.x.scale(&factor));
        }
        out
    }

    /// All 105 normal-ordering relators.
    pub fn etas(&self) -> Vec<((Gen, Gen), FreeElement)> {
        self.entries
            .iter()
            .map(|(&(j, k), _)| ((Gen(j), Gen(k)), self.eta(Gen(j), Gen(k))))
            .collect()
    }

    /// Rewrite a single adjacent pair `O_j O_k` (j after k):
    /// returns `(q^(-c/2), [terms of sign*q^(-c/4)*(q^(1/2)-q^(-1/2))*x])`.
    fn swap_terms(&self, j: Gen, k: Gen) -> (QTLaurent, Vec<(Word, QTLaurent)>) {
        let e = self.entry(j, k);
        let swap_coeff = QTLaurent::q_pow(-2 * e.c as i32);
        let mut extra = Vec::new();
        if e.sign != 0 {
            let bracket = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
            let factor = QTLaurent::q_pow(-(e.c as i32)).scale_monomial(
                0,
                0,
                &num_rational::BigRational::from_integer((e.sign as i64).into()),
            );
            let factor = &factor * &bracket;
            for (w, c) in &e.x.terms {
                extra.push((w.clone(), c * &factor));
            }
        }
        (swap_coeff, extra)
    }

    /// Normal-order a free element with the default leftmost strategy.
    pub fn normal_order(&self, e: &FreeElement) -> NormalElement {
        self.normal_order_with(e, &|w| {
            (0..w.len().saturating_sub(1)).find(|&i| w[i].index() > w[i + 1].index())
        })
    }

    /// Normal-order with a custom out-of-order pair selector. The selector
    /// must return the index of some adjacent inverted pair when one exists.
    ///
    /// Termination measure: a swap keeps the weight and strictly lowers the
    /// inversion count, while every correction term strictly lowers the
    /// weight (checked at table load); both are asserted in debug builds.
    pub fn normal_order_with(
        &self,
        e: &FreeElement,
        pick: &dyn Fn(&[Gen]) -> Option<usize>,
    ) -> NormalElement {
        #[cfg(debug_assertions)]
        fn inversions(w: &[Gen]) -> usize {
            let mut n = 0;
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    if w[i].index() > w[j].index() {
                        n += 1;
                    }
                }
            }
            n
        }
        let mut result = NormalElement::zero();
        let mut work: BTreeMap<Word, QTLaurent> = e.terms.clone();
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match pick(&w) {
                None => result.add_term(NormalMonomial::from_word(&w), &c),
                Some(i) => {
                    debug_assert!(w[i].index() > w[i + 1].index());
                    let (swap_coeff, extra) = self.swap_terms(w[i], w[i + 1]);
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    #[cfg(debug_assertions)]
                    {
                        debug_assert!(inversions(&swapped) + 1 == inversions(&w));
                        for (xw, _) in &extra {
                            debug_assert!(
                                crate::free::word_weight(xw)
                                    < w[i].weight() + w[i + 1].weight()
                            );
                        }
                    }
                    let add = |work: &mut BTreeMap<Word, QTLaurent>, w: Word, c: QTLaurent| {
                        use std::collections::btree_map::Entry;
                        if c.is_zero() {
                            return;
                        }
                        match work.entry(w) {
                            Entry::Vacant(v) => {
                                v.insert(c);
                            }
                            Entry::Occupied(mut o) => {
                                *o.get_mut() += &c;
                                if o.get().is_zero() {
                                    o.remove();
                                }
                            }
                        }
                    };
                    add(&mut work, swapped, &c * &swap_coeff);
                    for (xw, xc) in extra {
                        let mut nw = Vec::with_capacity(w.len() - 2 + xw.len());
                        nw.extend_from_slice(&w[..i]);
                        nw.extend_from_slice(&xw);
                        nw.extend_from_slice(&w[i + 2..]);
                        add(&mut work, nw, &c * &xc);
                    }
                }
            }
        }
        result
    }

    /// `[a, b]_{q^j} = (q^(j/4) a b - q^(-j/4) b a) / (q^(1/2) - q^(-1/2))`,
    /// products normal-ordered, the division applied coefficientwise.
    pub fn q_commutator(
        &self,
        a: &NormalElement,
        b: &NormalElement,
        j: i32,
    ) -> Result<NormalElement, NotDivisible> {
        let ab = a.to_free().mul(&b.to_free()).scale(&QTLaurent::q_pow(j));
        let ba = b.to_free().mul(&a.to_free()).scale(&QTLaurent::q_pow(-j));
        let num = self.normal_order(&ab.sub(&ba));
        let den = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
        let mut out = NormalElement::zero();
        for (m, c) in &num.terms {
            out.add_term(*m, &c.div_exact(&den)?);
        }
        Ok(out)
    }

    /// Leading behavior of a word: the sorted monomial of its multiset and the
    /// integer `M` with `word = q^(M/2) * monomial + lower-order terms`.
    pub fn leading_power(&self, word: &[Gen]) -> (NormalMonomial, i32) {
        let m = NormalMonomial::from_word(word);
        let ordered = self.normal_order(&FreeElement::term(word.to_vec(), QTLaurent::one()));
        let c = ordered.coeff(&m);
        let ((a, b), r) = c
            .as_monomial()
            .unwrap_or_else(|| panic!("leading coefficient of {m} is not a monomial: {c}"));
        assert!(
            b == 0 && a % 2 == 0 && num_traits::One::is_one(r),
            "leading coefficient of {m} is not an integer power of q^(1/2): {c}"
        );
        (m, a / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_free;

    fn table() -> CommutationTable {
        CommutationTable::load().unwrap()
    }

    fn g(name: &str) -> Gen {
        Gen::from_name(name).unwrap()
    }

    #[test]
    fn loads_all_entries() {
        let t = table();
        assert_eq!(t.entries().count(), 105);
        // antisymmetry and range
        for j in 0..NGEN {
            for k in 0..NGEN {
                assert_eq!(t.c[j][k], -t.c[k][j]);
                assert!(t.c[j][k].abs() <= 2);
            }
        }
    }

    #[test]
    fn normal_order_o2_o1() {
        let t = table();
        let got = t.normal_order(&parse_free("O2*O1").unwrap());
        // q^(1/2) O1 O2 - (q^(3/4) - q^(-1/4)) O12
        let want = t.normal_order(&parse_free("q^(1/2)*O1*O2 - (q^(3/4) - q^(-1/4))*O12").unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn normal_order_commuting_pair() {
        let t = table();
        let got = t.normal_order(&parse_free("O3*O1").unwrap());
        assert_eq!(got, t.normal_order(&parse_free("O1*O3").unwrap()));
        assert_eq!(got.terms.len(), 1);
    }

    #[test]
    fn normal_order_fixed_point() {
        let t = table();
        let e = parse_free("O1*O2").unwrap();
        let got = t.normal_order(&e);
        assert_eq!(got.terms.len(), 1);
        assert!(got.coeff(&NormalMonomial::from_word(&[g("O1"), g("O2")])).is_one());
    }

    #[test]
    fn etas_normal_order_to_zero() {
        let t = table();
        for ((j, k), eta) in t.etas() {
            let n = t.normal_order(&eta);
            assert!(n.is_zero(), "eta({j},{k}) does not vanish: {n:?}");
        }
    }

    #[test]
    fn eta_o2_o1_matches_formula() {
        let t = table();
        let eta = t.eta(g("O2"), g("O1"));
        let want =
            parse_free("q^(-1/4)*O2*O1 - q^(1/4)*O1*O2 + (q^(1/2) - q^(-1/2))*O12").unwrap();
        assert_eq!(eta, want);
    }

    #[test]
    fn q_commutators_rebuild_generators() {
        let t = table();
        let o = |n: &str| NormalElement::gen(g(n));
        assert_eq!(t.q_commutator(&o("O1"), &o("O2"), 1).unwrap(), o("O12"));
        assert_eq!(t.q_commutator(&o("O6"), &o("O1"), 1).unwrap(), o("O61"));
        let o12 = t.q_commutator(&o("O1"), &o("O2"), 1).unwrap();
        assert_eq!(t.q_commutator(&o12, &o("O3"), 1).unwrap(), o("O123"));
        assert!(t.q_commutator(&o("O1"), &o("O3"), 0).unwrap().is_zero());
    }

    #[test]
    fn q_commutator_antisymmetry() {
        // [O_J, O_K]_{q^c} + [O_K, O_J]_{q^-c} = 0 at each pair's own
        // exponent, where both sides are Laurent.
        let t = table();
        for (j, k, entry) in t.entries() {
            let ej = NormalElement::gen(j);
            let ek = NormalElement::gen(k);
            let lhs = t.q_commutator(&ej, &ek, entry.c as i32).unwrap();
            let rhs = t.q_commutator(&ek, &ej, -(entry.c as i32)).unwrap();
            assert!(lhs.add(&rhs).is_zero(), "pair ({j},{k})");
        }
    }

    #[test]
    fn leading_power_examples() {
        let t = table();
        let (m, p) = t.leading_power(&[g("O2"), g("O1")]);
        assert_eq!((m.to_string().as_str(), p), ("O1*O2", 1));
        let (m, p) = t.leading_power(&[g("O1"), g("O2")]);
        assert_eq!((m.to_string().as_str(), p), ("O1*O2", 0));
        let (m, p) = t.leading_power(&[g("O3"), g("O1")]);
        assert_eq!((m.to_string().as_str(), p), ("O1*O3", 0));
    }

    #[test]
    fn normal_order_strategy_independent() {
        use rand::{Rng, SeedableRng};
        let t = table();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            // random word of weight <= 8
            let mut w = Vec::new();
            let mut weight = 0;
            while weight < 8 {
                let g = Gen(rng.gen_range(0..NGEN as u8));
                if weight + g.weight() > 8 {
                    break;
                }
                weight += g.weight();
                w.push(g);
            }
            let e = FreeElement::term(w, QTLaurent::one());
            let left = t.normal_order(&e);
            let seed: u64 = rng.gen();
            let random_pick = move |w: &[Gen]| {
                let choices: Vec<usize> = (0..w.len().saturating_sub(1))
                    .filter(|&i| w[i].index() > w[i + 1].index())
                    .collect();
                if choices.is_empty() {
                    None
                } else {
                    use rand::SeedableRng;
                    let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(
                        seed ^ (w.len() as u64) << 32 | choices.len() as u64,
                    );
                    Some(choices[r.gen_range(0..choices.len())])
                }
            };
            let right = t.normal_order_with(&e, &random_pick);
            assert_eq!(left, right);
        }
    }
}
