//! Mapping class group action: the order-6 rotation `I`, the Dehn twist `d1`
//! and its inverse, twists `d2..d5` by conjugation, word action and the
//! relation/ideal-invariance checks.

use std::collections::HashMap;
use std::fmt;

use crate::engine::{AlgebraMode, Engine, EngineError};
use crate::free::{FreeElement, NormalElement};
use crate::gens::{Gen, NGEN};
use crate::report::Report;
use crate::table::DataError;
use crate::transcription::{D1, D1_COMMUTATIVE, D1_INV};

/// A letter of a mapping-class-group word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    /// Dehn twist `d_i`, `i` in `1..=5`; `true` marks the inverse.
    Twist(u8, bool),
    /// The order-6 rotation; `true` marks the inverse.
    Rot(bool),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Twist(i, false) => write!(f, "d{i}"),
            Letter::Twist(i, true) => write!(f, "d{i}^-1"),
            Letter::Rot(false) => write!(f, "I"),
            Letter::Rot(true) => write!(f, "I^-1"),
        }
    }
}

/// Parse a whitespace-separated word like `"d1 d2^-1 I I"`.
pub fn parse_word(src: &str) -> Result<Vec<Letter>, String> {
    src.split_whitespace()
        .map(|tok| {
            let (base, inv) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            match base {
                "I" => Ok(Letter::Rot(inv)),
                _ => {
                    let i: u8 = base
                        .strip_prefix('d')
                        .and_then(|s| s.parse().ok())
                        .filter(|i| (1..=5).contains(i))
                        .ok_or_else(|| format!("unknown mapping class letter '{tok}'"))?;
                    Ok(Letter::Twist(i, inv))
                }
            }
        })
        .collect()
}

/// The rotation as a permutation of generator indices: `perm[g] = I(g)`.
pub fn rotation_perm() -> [u8; NGEN] {
    let mut p = [0u8; NGEN];
    for i in 1..=6 {
        p[Gen::level1(i).index()] = Gen::level1(i + 1).0;
        p[Gen::level2(i).index()] = Gen::level2(i + 1).0;
    }
    for i in 1..=3 {
        p[Gen::level3(i).index()] = Gen::level3(i + 1).0;
    }
    p
}

fn invert_perm(p: &[u8; NGEN]) -> [u8; NGEN] {
    let mut q = [0u8; NGEN];
    for (i, &v) in p.iter().enumerate() {
        q[v as usize] = i as u8;
    }
    q
}

/// Parsed generator-image tables for the twist and its inverse.
pub struct MappingClassAction {
    pub d1: HashMap<Gen, FreeElement>,
    pub d1_inv: HashMap<Gen, FreeElement>,
    rot: [u8; NGEN],
    rot_inv: [u8; NGEN],
}

fn parse_image_table(data: &[(&str, &str)]) -> Result<HashMap<Gen, FreeElement>, DataError> {
    data.iter()
        .map(|(name, src)| {
            let g = Gen::from_name(name)
                .ok_or_else(|| DataError(format!("bad generator {name}")))?;
            let e = crate::parse::parse_free(src)
                .map_err(|e| DataError(format!("image of {name}: {e}")))?;
            Ok((g, e))
        })
        .collect()
}

impl MappingClassAction {
    pub fn new() -> Result<Self, DataError> {
        let rot = rotation_perm();
        Ok(MappingClassAction {
            d1: parse_image_table(&D1)?,
            d1_inv: parse_image_table(&D1_INV)?,
            rot_inv: invert_perm(&rot),
            rot,
        })
    }

    /// The independently transcribed commutative twist table.
    pub fn d1_commutative_table() -> Result<HashMap<Gen, FreeElement>, DataError> {
        parse_image_table(&D1_COMMUTATIVE)
    }

    fn apply_perm(
        &self,
        engine: &Engine,
        perm: &[u8; NGEN],
        times: u32,
        e: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let mut step = [0u8; NGEN];
        for (i, s) in step.iter_mut().enumerate() {
            *s = i as u8;
        }
        for _ in 0..times {
            for s in step.iter_mut() {
                *s = perm[*s as usize];
            }
        }
        let f = e.to_free().permute(&|g: Gen| Gen(step[g.index()]));
        engine.reduce_free(&f, mode)
    }

    fn apply_images(
        &self,
        engine: &Engine,
        images: &HashMap<Gen, FreeElement>,
        e: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let mut total = FreeElement::zero();
        for (m, c) in &e.terms {
            let mut prod = FreeElement::one();
            for g in m.word() {
                match images.get(&g) {
                    Some(img) => prod = prod.mul(img),
                    None => prod = prod.mul(&FreeElement::gen(g)),
                }
            }
            total = total.add(&prod.scale(c));
        }
        engine.reduce_free(&total, mode)
    }

    /// Apply one letter. Twists `d_i`, `i >= 2`, act through conjugation by
    /// the rotation.
    pub fn apply_letter(
        &self,
        engine: &Engine,
        letter: Letter,
        e: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        match letter {
            Letter::Rot(false) => self.apply_perm(engine, &self.rot, 1, e, mode),
            Letter::Rot(true) => self.apply_perm(engine, &self.rot_inv, 1, e, mode),
            Letter::Twist(i, inv) => {
                let k = (i - 1) as u32;
                let images = if inv { &self.d1_inv } else { &self.d1 };
                let shifted = self.apply_perm(engine, &self.rot_inv, k, e, mode)?;
                let twisted = self.apply_images(engine, images, &shifted, mode)?;
                self.apply_perm(engine, &self.rot, k, &twisted, mode)
            }
        }
    }

    /// Apply a word, rightmost letter first, reducing after every letter.
    pub fn apply(
        &self,
        engine: &Engine,
        word: &[Letter],
        e: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let mut cur = engine.reduce(e, mode)?;
        for &letter in word.iter().rev() {
            cur = self.apply_letter(engine, letter, &cur, mode)?;
        }
        Ok(cur)
    }

    /// Apply the twist or rotation to a free element (used on ideal
    /// generators, which need not be normally ordered).
    pub fn apply_free(
        &self,
        engine: &Engine,
        letter: Letter,
        e: &FreeElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        match letter {
            Letter::Rot(false) => {
                engine.reduce_free(&e.permute(&|g: Gen| Gen(self.rot[g.index()])), mode)
            }
            Letter::Rot(true) => {
                engine.reduce_free(&e.permute(&|g: Gen| Gen(self.rot_inv[g.index()])), mode)
            }
            Letter::Twist(1, inv) => {
                let images = if inv { &self.d1_inv } else { &self.d1 };
                let mut total = FreeElement::zero();
                for (w, c) in &e.terms {
                    let mut prod = FreeElement::one();
                    for g in w {
                        match images.get(g) {
                            Some(img) => prod = prod.mul(img),
                            None => prod = prod.mul(&FreeElement::gen(*g)),
                        }
                    }
                    total = total.add(&prod.scale(c));
                }
                engine.reduce_free(&total, mode)
            }
            _ => panic!("apply_free supports d1 and the rotation only"),
        }
    }

    /// Relation suite: braid relation, the two commutations, `I^6 = id` and
    /// the inverse-rotation factorization, all after reduction.
    pub fn verify_relations(
        &self,
        engine: &Engine,
        mode: AlgebraMode,
    ) -> Result<Report, EngineError> {
        let mut report = Report::new(format!("mcg relations [{}]", mode.name()));
        let six: Vec<Gen> = (0..6).map(Gen).collect();
        let word = |s: &str| parse_word(s).unwrap();
        for g in &six {
            let e = NormalElement::gen(*g);
            let lhs = self.apply(engine, &word("d1 d2 d1"), &e, mode)?;
            let rhs = self.apply(engine, &word("d2 d1 d2"), &e, mode)?;
            report.check(format!("d1 d2 d1 = d2 d1 d2 on {g}"), lhs == rhs);
            for k in [3u8, 4u8] {
                let lhs = self.apply(engine, &word(&format!("d1 d{k}")), &e, mode)?;
                let rhs = self.apply(engine, &word(&format!("d{k} d1")), &e, mode)?;
                report.check(format!("d1 d{k} = d{k} d1 on {g}"), lhs == rhs);
            }
        }
        for g in Gen::all() {
            let e = NormalElement::gen(g);
            let six_rot = self.apply(engine, &vec![Letter::Rot(false); 6], &e, mode)?;
            report.check(format!("I^6 = id on {g}"), six_rot == engine.reduce(&e, mode)?);
        }
        for g in &six {
            let e = NormalElement::gen(*g);
            let lhs = self.apply(engine, &word("d5 d4 d3 d2 d1"), &e, mode)?;
            let rhs = self.apply(engine, &[Letter::Rot(true)], &e, mode)?;
            report.check(format!("d5 d4 d3 d2 d1 = I^-1 on {g}"), lhs == rhs);
        }
        Ok(report)
    }

    /// Ideal invariance: images of all 61 canonical relators under the given
    /// automorphism reduce to zero; with `include_defining`, the 105 ordering
    /// relators, the 18 J-relators and the central relator are checked too.
    pub fn verify_ideal_invariance(
        &self,
        engine: &Engine,
        letter: Letter,
        mode: AlgebraMode,
        include_defining: bool,
    ) -> Result<Report, EngineError> {
        use rayon::prelude::*;
        let mut report = Report::new(format!("ideal invariance under {letter} [{}]", mode.name()));
        let gs = crate::relators::parse_groebner()?;
        let mut items: Vec<(String, &FreeElement)> = gs
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("g{}", i + 1), g))
            .collect();
        if include_defining {
            for ((j, k), eta) in &engine.defining.etas {
                items.push((format!("eta({j},{k})"), eta));
            }
            for (i, rho) in engine.defining.rhos.iter().enumerate() {
                items.push((format!("rho_{}", i + 1), rho));
            }
            items.push(("central relator".to_string(), &engine.defining.casimir));
        }
        let results: Vec<(String, bool)> = items
            .par_iter()
            .map(|(name, e)| {
                let img = self.apply_free(engine, letter, e, mode)?;
                Ok((name.clone(), img.is_zero()))
            })
            .collect::<Result<_, EngineError>>()?;
        for (name, ok) in results {
            report.check(format!("{letter}({name}) = 0"), ok);
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_free;
    use std::sync::OnceLock;

    fn engine() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| Engine::new().unwrap())
    }

    fn mcg() -> &'static MappingClassAction {
        static MCG: OnceLock<MappingClassAction> = OnceLock::new();
        MCG.get_or_init(|| MappingClassAction::new().unwrap())
    }

    fn gen(n: &str) -> NormalElement {
        NormalElement::gen(Gen::from_name(n).unwrap())
    }

    #[test]
    fn rotation_on_generators() {
        let e = engine();
        let got = mcg()
            .apply(e, &[Letter::Rot(false)], &gen("O1"), AlgebraMode::QT)
            .unwrap();
        assert_eq!(got, gen("O2"));
        let got = mcg()
            .apply(e, &[Letter::Rot(false)], &gen("O61"), AlgebraMode::QT)
            .unwrap();
        assert_eq!(got, gen("O12"));
        // cycle type (6,6,3)
        let mut p = rotation_perm();
        for _ in 0..2 {
            let mut q = [0u8; NGEN];
            for (i, &v) in p.iter().enumerate() {
                q[i] = rotation_perm()[v as usize];
            }
            p = q;
        }
        assert_eq!(p[12], 12); // level-3 generators have order 3
    }

    #[test]
    fn twist_on_o6() {
        let e = engine();
        let got = mcg()
            .apply(e, &parse_word("d1").unwrap(), &gen("O6"), AlgebraMode::QT)
            .unwrap();
        assert_eq!(got, gen("O61"));
    }

    #[test]
    fn twist_inverse_composition() {
        let e = engine();
        let w = parse_word("d1^-1 d1").unwrap();
        for name in ["O2", "O6", "O12", "O23", "O56", "O61", "O123", "O234"] {
            let got = mcg().apply(e, &w, &gen(name), AlgebraMode::QT).unwrap();
            assert_eq!(got, gen(name), "d1^-1 d1 moved {name}");
        }
    }

    #[test]
    fn conjugated_twist_d3_on_o4() {
        let e = engine();
        let got = mcg()
            .apply(e, &parse_word("d3").unwrap(), &gen("O4"), AlgebraMode::QT)
            .unwrap();
        let want = e
            .reduce_free(
                &parse_free("q^(1/4)*O3*O4 - q^(1/2)*O34").unwrap(),
                AlgebraMode::QT,
            )
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn braid_image_of_o2() {
        let e = engine();
        let got = mcg()
            .apply(e, &parse_word("d1 d2 d1").unwrap(), &gen("O2"), AlgebraMode::QT)
            .unwrap();
        let want = e
            .reduce_free(
                &parse_free("q^(1/4)*O12*O2 - q^(3/4)*O2*O12 + q*O1").unwrap(),
                AlgebraMode::QT,
            )
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_rotation_factorization_on_o2() {
        let e = engine();
        let got = mcg()
            .apply(e, &parse_word("d5 d4 d3 d2 d1").unwrap(), &gen("O2"), AlgebraMode::QT)
            .unwrap();
        assert_eq!(got, gen("O1"));
    }

    #[test]
    fn commutative_twist_table_matches_specialization() {
        let e = engine();
        let table = MappingClassAction::d1_commutative_table().unwrap();
        for (g, img) in &mcg().d1 {
            let spec = e.reduce_free(img, AlgebraMode::Q1T).unwrap();
            let indep = e.reduce_free(&table[g], AlgebraMode::Q1T).unwrap();
            assert_eq!(spec, indep, "commutative twist image of {g}");
        }
    }

    #[test]
    fn automorphism_property_on_random_elements() {
        use rand::{Rng, SeedableRng};
        let e = engine();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let rand_basis = |rng: &mut rand_chacha::ChaCha8Rng| loop {
                let mut m = crate::gens::NormalMonomial::one();
                let mut w = 0;
                while w < 6 {
                    let g = Gen(rng.gen_range(0..NGEN as u8));
                    if w + g.weight() > 6 {
                        break;
                    }
                    w += g.weight();
                    m.exps[g.index()] += 1;
                }
                if e.is_basis(&m) {
                    return NormalElement::term(m, crate::qt::QTLaurent::one());
                }
            };
            let a = rand_basis(&mut rng);
            let b = rand_basis(&mut rng);
            let len = rng.gen_range(1..=3);
            let letters: Vec<Letter> = (0..len)
                .map(|_| match rng.gen_range(0..4) {
                    0 => Letter::Rot(false),
                    1 => Letter::Rot(true),
                    2 => Letter::Twist(rng.gen_range(1..=5), false),
                    _ => Letter::Twist(rng.gen_range(1..=5), true),
                })
                .collect();
            let ab = e.multiply(&a, &b, AlgebraMode::QT).unwrap();
            let lhs = mcg().apply(e, &letters, &ab, AlgebraMode::QT).unwrap();
            let fa = mcg().apply(e, &letters, &a, AlgebraMode::QT).unwrap();
            let fb = mcg().apply(e, &letters, &b, AlgebraMode::QT).unwrap();
            let rhs = e.multiply(&fa, &fb, AlgebraMode::QT).unwrap();
            assert_eq!(lhs, rhs, "word {letters:?} is not multiplicative");
        }
    }
}
