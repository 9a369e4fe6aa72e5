//! The Poisson bracket on the commutative `q = 1` algebra, extracted from the
//! noncommutative structure constants, and its `t = 1` specialization.

use num_rational::BigRational;

use crate::engine::{AlgebraMode, Engine, EngineError};
use crate::free::NormalElement;
use crate::gens::{Gen, NormalMonomial};
use crate::mcg::{Letter, MappingClassAction};
use crate::qt::{QTLaurent, Specialization};
use crate::report::Report;

/// `{b1, b2} = (1/4) lim_{q^(1/4) -> 1} (b1 b2 - b2 b1) / (q^(1/4) - 1)`
/// on basis monomials: multiply in the generic algebra both ways, check each
/// coefficient of the difference dies at `q = 1`, divide by `q^(1/4) - 1`,
/// evaluate at `q = 1` and scale by `1/4`.
pub fn bracket_monomials(
    engine: &Engine,
    b1: &NormalMonomial,
    b2: &NormalMonomial,
) -> Result<NormalElement, EngineError> {
    let ab = engine.structure_constants(b1, b2, AlgebraMode::QT)?;
    let ba = engine.structure_constants(b2, b1, AlgebraMode::QT)?;
    let diff = ab.sub(&ba);
    let q4_minus_1 = &QTLaurent::q_pow(1) - &QTLaurent::one();
    let quarter = QTLaurent::monomial(0, 0, BigRational::new(1.into(), 4.into()));
    let mut out = NormalElement::zero();
    for (m, c) in &diff.terms {
        if !c.specialize(Specialization::QToOne).is_zero() {
            return Err(EngineError::NotDivisible(format!(
                "commutator coefficient at {m} does not vanish at q=1: {c}"
            )));
        }
        let quotient = c.div_exact(&q4_minus_1).map_err(|_| {
            EngineError::NotDivisible(format!("coefficient at {m} not divisible by q^(1/4)-1"))
        })?;
        out.add_term(*m, &(&quotient.specialize(Specialization::QToOne) * &quarter));
    }
    Ok(out)
}

/// Bilinear extension to arbitrary elements of the commutative algebra.
/// Scalars are specialized to the `q = 1` coefficient ring first.
pub fn bracket(
    engine: &Engine,
    a: &NormalElement,
    b: &NormalElement,
) -> Result<NormalElement, EngineError> {
    let a = engine.reduce(a, AlgebraMode::Q1T)?;
    let b = engine.reduce(b, AlgebraMode::Q1T)?;
    let mut out = NormalElement::zero();
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            let br = bracket_monomials(engine, m1, m2)?;
            for (m, c) in &br.terms {
                out.add_term(*m, &(&(c1 * c2) * c));
            }
        }
    }
    engine.reduce(&out, AlgebraMode::Q1T)
}

/// `t = 1` bracket on the coordinate ring.
pub fn bracket_t1(
    engine: &Engine,
    a: &NormalElement,
    b: &NormalElement,
) -> Result<NormalElement, EngineError> {
    let br = bracket(engine, a, b)?;
    engine.reduce(&br, AlgebraMode::QT1)
}

fn commutative_mode(t1: bool) -> AlgebraMode {
    if t1 {
        AlgebraMode::QT1
    } else {
        AlgebraMode::Q1T
    }
}

fn bracket_in(
    engine: &Engine,
    a: &NormalElement,
    b: &NormalElement,
    t1: bool,
) -> Result<NormalElement, EngineError> {
    if t1 {
        bracket_t1(engine, a, b)
    } else {
        bracket(engine, a, b)
    }
}

/// Full bracket suite: divisibility on generator commutators, the generator
/// bracket table, antisymmetry, Jacobi on all generator triples, Leibniz on
/// random triples and twist/rotation equivariance; everything in the `q = 1`
/// algebra and again at `t = 1`.
pub fn verify_poisson(
    engine: &Engine,
    mcg: &MappingClassAction,
    t1: bool,
    rng_seed: u64,
) -> Result<Report, EngineError> {
    use rayon::prelude::*;
    let mode = commutative_mode(t1);
    let mut report = Report::new(format!("poisson bracket [{}]", mode.name()));

    // (i) + (ii): divisibility, antisymmetry and the table formula
    // `{O_J, O_K} = -(c/2) O_K O_J +- X` on all 105 generator pairs.
    let pairs: Vec<(Gen, Gen)> = Gen::all()
        .flat_map(|j| Gen::all().filter(move |k| k.index() < j.index()).map(move |k| (j, k)))
        .collect();
    let results: Vec<(Gen, Gen, bool, bool)> = pairs
        .par_iter()
        .map(|(j, k)| {
            let mj = NormalMonomial::gen(*j);
            let mk = NormalMonomial::gen(*k);
            let br = bracket_monomials(engine, &mj, &mk)?;
            let br = engine.reduce(&br, mode)?;
            let anti = bracket_monomials(engine, &mk, &mj)?;
            let anti = engine.reduce(&anti, mode)?;
            let antisym = br.add(&anti).is_zero();
            // table formula
            let entry = engine.table.entry(*j, *k);
            let mut want = NormalElement::term(
                mk.mul(&mj),
                QTLaurent::monomial(
                    0,
                    0,
                    BigRational::new((-(entry.c as i64)).into(), 2.into()),
                ),
            );
            if entry.sign != 0 {
                let sign = BigRational::from_integer((entry.sign as i64).into());
                let x = engine.normal_order(&entry.x, mode);
                for (m, c) in &x.terms {
                    want.add_term(*m, &c.scale(&sign));
                }
            }
            let want = engine.reduce(&want, mode)?;
            Ok((*j, *k, antisym, br == want))
        })
        .collect::<Result<_, EngineError>>()?;
    for (j, k, antisym, table_ok) in results {
        report.check(format!("antisymmetry {{{j},{k}}}"), antisym);
        report.check(format!("bracket table {{{j},{k}}}"), table_ok);
    }

    // (iii) Jacobi on all 455 generator triples.
    let triples: Vec<(Gen, Gen, Gen)> = Gen::all()
        .flat_map(|a| {
            Gen::all().flat_map(move |b| {
                Gen::all()
                    .filter(move |c| a.index() < b.index() && b.index() < c.index())
                    .map(move |c| (a, b, c))
            })
        })
        .collect();
    let results: Vec<(Gen, Gen, Gen, bool)> = triples
        .par_iter()
        .map(|(a, b, c)| {
            let ea = NormalElement::gen(*a);
            let eb = NormalElement::gen(*b);
            let ec = NormalElement::gen(*c);
            let j1 = bracket_in(engine, &ea, &bracket_in(engine, &eb, &ec, t1)?, t1)?;
            let j2 = bracket_in(engine, &eb, &bracket_in(engine, &ec, &ea, t1)?, t1)?;
            let j3 = bracket_in(engine, &ec, &bracket_in(engine, &ea, &eb, t1)?, t1)?;
            Ok((*a, *b, *c, j1.add(&j2).add(&j3).is_zero()))
        })
        .collect::<Result<_, EngineError>>()?;
    for (a, b, c, ok) in results {
        report.check(format!("jacobi ({a},{b},{c})"), ok);
    }

    // (iv) Leibniz on random triples.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(rng_seed);
    let mut leibniz_trials = Vec::new();
    for _ in 0..100 {
        let pick = |rng: &mut rand_chacha::ChaCha8Rng| Gen(rng.gen_range(0..15) as u8);
        leibniz_trials.push((pick(&mut rng), pick(&mut rng), pick(&mut rng)));
    }
    let results: Vec<(usize, bool)> = leibniz_trials
        .par_iter()
        .enumerate()
        .map(|(i, (a, b, c))| {
            let ea = NormalElement::gen(*a);
            let eb = NormalElement::gen(*b);
            let ec = NormalElement::gen(*c);
            let bc = engine.multiply(&eb, &ec, mode)?;
            let lhs = bracket_in(engine, &ea, &bc, t1)?;
            let ab = bracket_in(engine, &ea, &eb, t1)?;
            let ac = bracket_in(engine, &ea, &ec, t1)?;
            let rhs = engine
                .multiply(&ab, &ec, mode)?
                .add(&engine.multiply(&eb, &ac, mode)?);
            let rhs = engine.reduce(&rhs, mode)?;
            Ok((i, lhs == rhs))
        })
        .collect::<Result<_, EngineError>>()?;
    let leibniz_ok = results.iter().all(|(_, ok)| *ok);
    report.check("leibniz rule on 100 random triples", leibniz_ok);

    // (v) equivariance of the bracket under the twist and the rotation on
    // generator pairs.
    let autos = [Letter::Twist(1, false), Letter::Rot(false)];
    for auto in autos {
        let results: Vec<bool> = pairs
            .par_iter()
            .map(|(j, k)| {
                let ej = NormalElement::gen(*j);
                let ek = NormalElement::gen(*k);
                let br = bracket_in(engine, &ej, &ek, t1)?;
                let lhs = mcg.apply(engine, &[auto], &br, mode)?;
                let fj = mcg.apply(engine, &[auto], &ej, mode)?;
                let fk = mcg.apply(engine, &[auto], &ek, mode)?;
                let rhs = bracket_in(engine, &fj, &fk, t1)?;
                Ok(lhs == rhs)
            })
            .collect::<Result<_, EngineError>>()?;
        report.check(
            format!("{auto}-equivariance on all generator pairs"),
            results.iter().all(|&ok| ok),
        );
    }
    Ok(report)
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

    fn mono(n: &str) -> NormalMonomial {
        NormalMonomial::gen(Gen::from_name(n).unwrap())
    }

    #[test]
    fn bracket_o2_o1() {
        // {O2, O1} = (1/2) O1 O2 - O12
        let e = engine();
        let got = bracket_monomials(e, &mono("O2"), &mono("O1")).unwrap();
        let want = e
            .reduce_free(&parse_free("1/2*O1*O2 - O12").unwrap(), AlgebraMode::Q1T)
            .unwrap();
        assert_eq!(e.reduce(&got, AlgebraMode::Q1T).unwrap(), want);
    }

    #[test]
    fn bracket_commuting_pair() {
        let e = engine();
        let got = bracket_monomials(e, &mono("O3"), &mono("O1")).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn bracket_self_is_zero() {
        let e = engine();
        let m = mono("O123");
        assert!(bracket_monomials(e, &m, &m).unwrap().is_zero());
    }

    #[test]
    fn jacobi_on_first_triple() {
        let e = engine();
        let ea = NormalElement::gen(Gen::from_name("O1").unwrap());
        let eb = NormalElement::gen(Gen::from_name("O2").unwrap());
        let ec = NormalElement::gen(Gen::from_name("O3").unwrap());
        let j1 = bracket(e, &ea, &bracket(e, &eb, &ec).unwrap()).unwrap();
        let j2 = bracket(e, &eb, &bracket(e, &ec, &ea).unwrap()).unwrap();
        let j3 = bracket(e, &ec, &bracket(e, &ea, &eb).unwrap()).unwrap();
        assert!(j1.add(&j2).add(&j3).is_zero());
    }

    #[test]
    fn rotation_equivariance_on_o1_o2() {
        // {O2, O3} = I({O1, O2})
        let e = engine();
        let mcg = MappingClassAction::new().unwrap();
        let br12 = bracket_monomials(e, &mono("O1"), &mono("O2")).unwrap();
        let br12 = e.reduce(&br12, AlgebraMode::Q1T).unwrap();
        let lhs = mcg
            .apply(e, &[Letter::Rot(false)], &br12, AlgebraMode::Q1T)
            .unwrap();
        let rhs = bracket_monomials(e, &mono("O2"), &mono("O3")).unwrap();
        let rhs = e.reduce(&rhs, AlgebraMode::Q1T).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn level3_pair_bracket_from_limit() {
        // {O123, O345}: classical limit of the q^2 table entry:
        // -(c/2) O345 O123 + X|q=1 with c = 2 for the pair as ordered (row O345).
        let e = engine();
        let got = bracket_monomials(e, &mono("O123"), &mono("O345")).unwrap();
        let got = e.reduce(&got, AlgebraMode::Q1T).unwrap();
        // From the table: [O345, O123]_{q^-2} = -X, so {O345, O123} = O123 O345 - X|q=1,
        // hence {O123, O345} = -O123 O345 + X|q=1.
        let entry = e.table.entry(
            Gen::from_name("O345").unwrap(),
            Gen::from_name("O123").unwrap(),
        );
        assert_eq!((entry.c, entry.sign), (-2, -1));
        let x = e.normal_order(&entry.x, AlgebraMode::Q1T);
        let mut want = NormalElement::term(
            mono("O123").mul(&mono("O345")),
            QTLaurent::monomial(0, 0, BigRational::from_integer((-1).into())),
        );
        for (m, c) in &x.terms {
            want.add_term(*m, c);
        }
        let want = e.reduce(&want, AlgebraMode::Q1T).unwrap();
        assert_eq!(got, want);
    }
}
