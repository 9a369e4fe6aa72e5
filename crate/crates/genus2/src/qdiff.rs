//! Representation by q-shift operators: generator images, composition,
//! relator verification and the commutative classical limit.
//!
//! Variables are indexed `0 = X12, 1 = X23, 2 = X13`; a shift vector
//! `v = (v12, v23, v13)` stands for the operator `d12^v12 d23^v23 d13^v13`
//! acting by `X_k -> q^(v_k/2) X_k`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_rational::BigRational;

use crate::engine::{AlgebraMode, Engine, EngineError};
use crate::free::NormalElement;
use crate::gens::{Gen, NGEN};
use crate::qt::{QTLaurent, Specialization};
use crate::report::Report;
use crate::xring::{QSingular, XLaurent, XRational};

/// Finitely supported map from shift vectors to rational-function coefficients.
#[derive(Debug, Clone, Default)]
pub struct QDiffOperator {
    pub terms: BTreeMap<[i32; 3], XRational>,
}

impl QDiffOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        let mut t = BTreeMap::new();
        t.insert([0, 0, 0], XRational::one());
        QDiffOperator { terms: t }
    }

    pub fn term(v: [i32; 3], c: XRational) -> Self {
        let mut out = Self::default();
        out.add_term(v, c);
        out
    }

    pub fn add_term(&mut self, v: [i32; 3], c: XRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&v) {
            None => {
                self.terms.insert(v, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(v, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = Self::default();
        for (v, f) in &self.terms {
            out.add_term(*v, f.scale(c));
        }
        out
    }

    /// Shift-twisted composition: `(f d^v)(g d^w) = f * shift(g, v) d^(v+w)`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (v, f) in &self.terms {
            for (w, g) in &other.terms {
                let c = f.mul(&g.shift(v));
                out.add_term([v[0] + w[0], v[1] + w[1], v[2] + w[2]], c);
            }
        }
        out
    }

    /// Cyclic permutation of variable and shift indices `12 -> 23 -> 13 -> 12`.
    pub fn cycle(&self) -> Self {
        let mut out = Self::default();
        for (v, f) in &self.terms {
            out.add_term([v[2], v[0], v[1]], f.cycle());
        }
        out
    }

    pub fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// `[A, B]_{q^j}`: the twisted commutator divided by `q^(1/2) - q^(-1/2)`.
    pub fn q_commutator(&self, other: &Self, j: i32) -> Self {
        let ab = self.compose(other).scale(&QTLaurent::q_pow(j));
        let ba = other.compose(self).scale(&QTLaurent::q_pow(-j));
        let num = ab.sub(&ba);
        let den = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
        let mut out = Self::default();
        for (v, c) in &num.terms {
            out.add_term(*v, c.div_scalar(&den));
        }
        out
    }
}

/// `(1 - t^(1/2) X_m X_j^a X_k^b)(1 - t^(1/2) X_m^-1 X_j^a X_k^b)`,
/// with `thalf = false` dropping the `t^(1/2)` factors.
fn pair_numerator(j: usize, k: usize, m: usize, a: i16, b: i16, thalf: bool) -> XLaurent {
    let t2 = if thalf { QTLaurent::t_pow(2) } else { QTLaurent::one() };
    let mut jk = [0i16; 3];
    jk[j] = a;
    jk[k] = b;
    let factor = |mexp: i16| -> XLaurent {
        let mut f = XLaurent::one();
        let mut e = jk;
        e[m] = mexp;
        f.add_term(e, &-&t2);
        f
    };
    factor(1).mul(&factor(-1))
}

/// One Hamiltonian-family term: sign `ab`, numerator as above, denominator
/// `t^(1/2) X_j^a X_k^b (X_j - X_j^-1)(X_k - X_k^-1)`.
fn hamiltonian(j: usize, k: usize, m: usize, shift_of: impl Fn(i16, i16) -> [i32; 3]) -> QDiffOperator {
    let mut out = QDiffOperator::zero();
    for a in [1i16, -1] {
        for b in [1i16, -1] {
            let sign = BigRational::from_integer(((a * b) as i64).into());
            let num = pair_numerator(j, k, m, a, b, true).scale(&QTLaurent::monomial(
                0,
                -2,
                sign,
            ));
            let mut xunit = [0i16; 3];
            xunit[j] = a;
            xunit[k] = b;
            let mut frac = XRational::new(
                num,
                &[XLaurent::var_minus_inverse(j), XLaurent::var_minus_inverse(k)],
            );
            frac = frac.mul(&XRational::from_poly({
                let mut inv = XLaurent::default();
                inv.add_term([-xunit[0], -xunit[1], -xunit[2]], &QTLaurent::one());
                inv
            }));
            out.add_term(shift_of(a, b), frac);
        }
    }
    out
}

/// The set of generator images in Laurent form: the six base operators plus
/// the displayed images of the level-two and level-three generators and their
/// cyclic transports.
pub struct RepImages {
    images: [QDiffOperator; NGEN],
    pair_cache: RwLock<HashMap<(u8, u8), Arc<QDiffOperator>>>,
}

fn explicit_o12() -> QDiffOperator {
    // sum_{a,b} ab q^(1/4) t^(-1/2) N(23; 12^a 13^b) / (X13^b (X12-X12^-1)(X13-X13^-1)) d12^a d13^b
    let mut out = QDiffOperator::zero();
    for a in [1i16, -1] {
        for b in [1i16, -1] {
            let sign = BigRational::from_integer(((a * b) as i64).into());
            let num = pair_numerator(0, 2, 1, a, b, true).scale(&QTLaurent::monomial(1, -2, sign));
            let mut frac = XRational::new(
                num,
                &[XLaurent::var_minus_inverse(0), XLaurent::var_minus_inverse(2)],
            );
            frac = frac.mul(&XRational::from_poly(XLaurent::monomial(
                2,
                -b,
                QTLaurent::one(),
            )));
            out.add_term([a as i32, 0, b as i32], frac);
        }
    }
    out
}

fn explicit_o23() -> QDiffOperator {
    // sum_{a,b} ab q^(-1/4) t^(-1/2) N(13; 12^a 23^b)
    //   / (X12^(2a) X23^b (X23-X23^-1)(X12-X12^-1)) d12^a d23^b
    let mut out = QDiffOperator::zero();
    for a in [1i16, -1] {
        for b in [1i16, -1] {
            let sign = BigRational::from_integer(((a * b) as i64).into());
            let num = pair_numerator(0, 1, 2, a, b, true).scale(&QTLaurent::monomial(-1, -2, sign));
            let mut frac = XRational::new(
                num,
                &[XLaurent::var_minus_inverse(1), XLaurent::var_minus_inverse(0)],
            );
            let mut inv = XLaurent::default();
            inv.add_term([-2 * a, -b, 0], &QTLaurent::one());
            frac = frac.mul(&XRational::from_poly(inv));
            out.add_term([a as i32, b as i32, 0], frac);
        }
    }
    out
}

fn explicit_o123() -> QDiffOperator {
    // sum_{a,b} ab N(12; 23^a 13^b) / (t^(1/2) X23^(2a) (X13-X13^-1)(X23-X23^-1)) d23^a d13^b
    let mut out = QDiffOperator::zero();
    for a in [1i16, -1] {
        for b in [1i16, -1] {
            let sign = BigRational::from_integer(((a * b) as i64).into());
            let num = pair_numerator(1, 2, 0, a, b, true).scale(&QTLaurent::monomial(0, -2, sign));
            let mut frac = XRational::new(
                num,
                &[XLaurent::var_minus_inverse(2), XLaurent::var_minus_inverse(1)],
            );
            let mut inv = XLaurent::default();
            inv.add_term([0, -2 * a, 0], &QTLaurent::one());
            frac = frac.mul(&XRational::from_poly(inv));
            out.add_term([0, a as i32, b as i32], frac);
        }
    }
    out
}

impl RepImages {
    /// Build all fifteen images from the displayed formulas and the cyclic
    /// transport `image(I^2 g) = cycle(image(g))`.
    pub fn new() -> Self {
        let g = |n: &str| Gen::from_name(n).unwrap().index();
        let mut images: [QDiffOperator; NGEN] = Default::default();
        // Multiplication operators.
        images[g("O2")] = QDiffOperator::term(
            [0, 0, 0],
            XRational::from_poly(XLaurent::var_plus_inverse(0)),
        );
        images[g("O4")] = QDiffOperator::term(
            [0, 0, 0],
            XRational::from_poly(XLaurent::var_plus_inverse(1)),
        );
        images[g("O6")] = QDiffOperator::term(
            [0, 0, 0],
            XRational::from_poly(XLaurent::var_plus_inverse(2)),
        );
        // Shift operators.
        images[g("O1")] = hamiltonian(0, 2, 1, |a, b| [a as i32, 0, b as i32]);
        images[g("O3")] = hamiltonian(0, 1, 2, |a, b| [a as i32, b as i32, 0]);
        images[g("O5")] = hamiltonian(2, 1, 0, |a, b| [0, b as i32, a as i32]);
        // Displayed level-two and level-three images.
        images[g("O12")] = explicit_o12();
        images[g("O23")] = explicit_o23();
        images[g("O123")] = explicit_o123();
        // Cyclic transports.
        images[g("O34")] = images[g("O12")].cycle();
        images[g("O56")] = images[g("O34")].cycle();
        images[g("O45")] = images[g("O23")].cycle();
        images[g("O61")] = images[g("O45")].cycle();
        images[g("O345")] = images[g("O123")].cycle();
        images[g("O234")] = images[g("O345")].cycle();
        RepImages { images, pair_cache: RwLock::new(HashMap::new()) }
    }

    pub fn generator(&self, g: Gen) -> &QDiffOperator {
        &self.images[g.index()]
    }

    /// Images of the level-two and level-three generators built independently
    /// through the q-commutator chain.
    pub fn commutator_chain(&self) -> [(Gen, QDiffOperator); 9] {
        let g = |n: &str| Gen::from_name(n).unwrap();
        let im = |n: &str| self.generator(g(n));
        let o12 = im("O1").q_commutator(im("O2"), 1);
        let o23 = im("O2").q_commutator(im("O3"), 1);
        let o34 = im("O3").q_commutator(im("O4"), 1);
        let o45 = im("O4").q_commutator(im("O5"), 1);
        let o56 = im("O5").q_commutator(im("O6"), 1);
        let o61 = im("O6").q_commutator(im("O1"), 1);
        let o123 = o12.q_commutator(im("O3"), 1);
        let o234 = o23.q_commutator(im("O4"), 1);
        let o345 = o34.q_commutator(im("O5"), 1);
        [
            (g("O12"), o12),
            (g("O23"), o23),
            (g("O34"), o34),
            (g("O45"), o45),
            (g("O56"), o56),
            (g("O61"), o61),
            (g("O123"), o123),
            (g("O234"), o234),
            (g("O345"), o345),
        ]
    }

    fn pair(&self, a: Gen, b: Gen) -> Arc<QDiffOperator> {
        if let Some(hit) = self.pair_cache.read().unwrap().get(&(a.0, b.0)) {
            return hit.clone();
        }
        let op = Arc::new(self.generator(a).compose(self.generator(b)));
        self.pair_cache.write().unwrap().insert((a.0, b.0), op.clone());
        op
    }

    /// Homomorphic image of a normally ordered element.
    pub fn element(&self, e: &NormalElement) -> QDiffOperator {
        let mut out = QDiffOperator::zero();
        for (m, c) in &e.terms {
            let word = m.word();
            let op = match word.len() {
                0 => QDiffOperator::identity(),
                1 => self.generator(word[0]).clone(),
                _ => {
                    let mut acc = (*self.pair(word[0], word[1])).clone();
                    for g in &word[2..] {
                        acc = acc.compose(self.generator(*g));
                    }
                    acc
                }
            };
            out = out.add(&op.scale(c));
        }
        out
    }

    /// Classical limit of a generator image: substitute `q^(1/4) -> 1`; the
    /// shift keys are reinterpreted as powers of the momenta `P12, P23, P13`.
    pub fn classical_generator(&self, g: Gen) -> Result<ClassicalElem, QSingular> {
        let mut terms = BTreeMap::new();
        for (v, c) in &self.generator(g).terms {
            let spec = c.specialize(Specialization::QToOne)?;
            if !spec.is_zero() {
                terms.insert(*v, spec);
            }
        }
        Ok(ClassicalElem { terms })
    }

    /// Evaluate a commutative polynomial at the classical generator images.
    pub fn classical_element(&self, e: &NormalElement) -> Result<ClassicalElem, QSingular> {
        let imgs: Vec<ClassicalElem> = (0..NGEN as u8)
            .map(|i| self.classical_generator(Gen(i)))
            .collect::<Result<_, _>>()?;
        let mut out = ClassicalElem::zero();
        for (m, c) in &e.terms {
            let mut acc = ClassicalElem::one();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    acc = acc.mul(&imgs[i]);
                }
            }
            out = out.add(&acc.scale(&c.specialize(Specialization::QToOne)));
        }
        Ok(out)
    }
}

impl Default for RepImages {
    fn default() -> Self {
        Self::new()
    }
}

/// Commutative classical image: Laurent polynomial in the momenta `P` with
/// rational-function coefficients in `X`.
#[derive(Debug, Clone, Default)]
pub struct ClassicalElem {
    pub terms: BTreeMap<[i32; 3], XRational>,
}

impl ClassicalElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut t = BTreeMap::new();
        t.insert([0, 0, 0], XRational::one());
        ClassicalElem { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, v: [i32; 3], c: XRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&v) {
            None => {
                self.terms.insert(v, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(v, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(*v, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QTLaurent) -> Self {
        let mut out = Self::default();
        for (v, f) in &self.terms {
            out.add_term(*v, f.scale(c));
        }
        out
    }

    /// Commutative product: momenta commute with coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (v, f) in &self.terms {
            for (w, g) in &other.terms {
                out.add_term([v[0] + w[0], v[1] + w[1], v[2] + w[2]], f.mul(g));
            }
        }
        out
    }

    pub fn eq(&self, other: &Self) -> bool {
        let mut diff = self.clone();
        for (v, c) in &other.terms {
            diff.add_term(*v, c.neg());
        }
        diff.is_zero()
    }

    pub fn specialize(&self, mode: Specialization) -> Result<Self, QSingular> {
        let mut out = Self::default();
        for (v, c) in &self.terms {
            out.add_term(*v, c.specialize(mode)?);
        }
        Ok(out)
    }

    /// Componentwise maximum of the momentum exponents, when it is attained
    /// by a term of the support.
    pub fn leading_momentum(&self) -> Option<[i32; 3]> {
        let mut max = [i32::MIN; 3];
        for v in self.terms.keys() {
            for k in 0..3 {
                max[k] = max[k].max(v[k]);
            }
        }
        self.terms.contains_key(&max).then_some(max)
    }
}

/// The displayed `t = 1` classical images of the three shift generators.
pub fn classical_display(g: Gen) -> ClassicalElem {
    let name = g.name();
    let (j, k, m, shift_of): (usize, usize, usize, fn(i16, i16) -> [i32; 3]) = match name {
        "O1" => (0, 2, 1, |a, b| [a as i32, 0, b as i32]),
        "O3" => (0, 1, 2, |a, b| [a as i32, b as i32, 0]),
        "O5" => (2, 1, 0, |a, b| [0, b as i32, a as i32]),
        _ => panic!("classical_display covers O1, O3, O5"),
    };
    let mut out = ClassicalElem::zero();
    for a in [1i16, -1] {
        for b in [1i16, -1] {
            let sign = BigRational::from_integer(((a * b) as i64).into());
            let num = pair_numerator(j, k, m, a, b, false)
                .scale(&QTLaurent::monomial(0, 0, sign));
            let mut frac = XRational::new(
                num,
                &[XLaurent::var_minus_inverse(j), XLaurent::var_minus_inverse(k)],
            );
            let mut inv = XLaurent::default();
            let mut e = [0i16; 3];
            e[j] = -a;
            e[k] = -b;
            inv.add_term(e, &QTLaurent::one());
            frac = frac.mul(&XRational::from_poly(inv));
            out.add_term(shift_of(a, b), frac);
        }
    }
    out
}

/// Verification options for the representation suite.
#[derive(Debug, Clone, Copy, Default)]
pub struct RepCheckOptions {
    /// Skip the expensive central-relator operator check.
    pub skip_casimir: bool,
    /// Restrict the relator operator checks to a single `g<i>` (1-based).
    pub only: Option<usize>,
}

/// Full representation suite: explicit formulas against the commutator chain,
/// first-column table relations as operator identities, and all canonical
/// relators plus the central relator mapping to the zero operator.
pub fn verify_representation(
    engine: &Engine,
    images: &RepImages,
    opts: RepCheckOptions,
) -> Result<Report, EngineError> {
    use rayon::prelude::*;
    let mut report = Report::new("q-difference representation");
    let gname = |n: &str| Gen::from_name(n).unwrap();

    if opts.only.is_none() {
        // (i) + (ii): chain equals Laurent-form images.
        let chain = images.commutator_chain();
        let results: Vec<(Gen, bool)> = chain
            .par_iter()
            .map(|(g, op)| (*g, op.eq(images.generator(*g))))
            .collect();
        for (g, ok) in results {
            report.check(format!("commutator chain matches image of {g}"), ok);
        }

        // (iii) first-column table relations as operator identities.
        let o1 = gname("O1");
        let rows: Vec<Gen> = Gen::all().filter(|g| g.index() > o1.index()).collect();
        let results: Vec<(Gen, bool)> = rows
            .par_iter()
            .map(|row| {
                let entry = engine.table.entry(*row, o1);
                let lhs = images
                    .generator(*row)
                    .compose(images.generator(o1))
                    .scale(&QTLaurent::q_pow(entry.c as i32));
                let rhs = images
                    .generator(o1)
                    .compose(images.generator(*row))
                    .scale(&QTLaurent::q_pow(-(entry.c as i32)));
                let mut diff = lhs.sub(&rhs);
                if entry.sign != 0 {
                    let bracket = &QTLaurent::q_pow(2) - &QTLaurent::q_pow(-2);
                    let x = engine.normal_order(&entry.x, AlgebraMode::QT);
                    let xop = images.element(&x).scale(&bracket.scale(
                        &BigRational::from_integer((entry.sign as i64).into()),
                    ));
                    diff = diff.sub(&xop);
                }
                (*row, diff.is_zero())
            })
            .collect();
        for (row, ok) in results {
            report.check(format!("operator identity for ({row}, O1)"), ok);
        }
    }

    // (iv) relators map to the zero operator.
    let gs = crate::relators::parse_groebner()?;
    let selected: Vec<usize> = match opts.only {
        Some(i) => vec![i - 1],
        None => (0..gs.len()).collect(),
    };
    let results: Vec<(usize, bool)> = selected
        .par_iter()
        .map(|&i| {
            let n = engine.normal_order(&gs[i], AlgebraMode::QT);
            (i, images.element(&n).is_zero())
        })
        .collect();
    for (i, ok) in results {
        report.check(format!("g{} maps to the zero operator", i + 1), ok);
    }

    if !opts.skip_casimir && opts.only.is_none() {
        let n = engine.normal_order(&engine.defining.casimir, AlgebraMode::QT);
        report.check(
            "central relator maps to the zero operator",
            images.element(&n).is_zero(),
        );
    }
    Ok(report)
}

/// Classical-limit suite: the specialized relators vanish on the classical
/// images, the multiplication images are bare `X + X^-1`, the displayed
/// `t = 1` forms match, and the leading momenta are as expected.
pub fn verify_classical(engine: &Engine, images: &RepImages) -> Result<Report, EngineError> {
    use rayon::prelude::*;
    let mut report = Report::new("classical limit");
    let gname = |n: &str| Gen::from_name(n).unwrap();

    for n in ["O2", "O4", "O6"] {
        let img = images
            .classical_generator(gname(n))
            .map_err(|e| EngineError::Data(format!("classical image of {n}: {e}")))?;
        let var = match n {
            "O2" => 0,
            "O4" => 1,
            _ => 2,
        };
        let want = ClassicalElem {
            terms: BTreeMap::from([(
                [0, 0, 0],
                XRational::from_poly(XLaurent::var_plus_inverse(var)),
            )]),
        };
        report.check(format!("classical image of {n} is X + X^-1"), img.eq(&want));
    }

    for n in ["O1", "O3", "O5"] {
        let img = images
            .classical_generator(gname(n))
            .map_err(|e| EngineError::Data(format!("classical image of {n}: {e}")))?;
        let t1 = img
            .specialize(Specialization::TToOne)
            .map_err(|e| EngineError::Data(format!("t=1 image of {n}: {e}")))?;
        report.check(
            format!("t=1 classical image of {n} matches the displayed form"),
            t1.eq(&classical_display(gname(n))),
        );
    }

    let lead = |n: &str| -> Option<[i32; 3]> {
        images.classical_generator(gname(n)).ok()?.leading_momentum()
    };
    report.check("leading momentum of O1 is P12*P13", lead("O1") == Some([1, 0, 1]));
    report.check("leading momentum of O3 is P12*P23", lead("O3") == Some([1, 1, 0]));
    report.check("leading momentum of O5 is P13*P23", lead("O5") == Some([0, 1, 1]));

    let gs = crate::relators::parse_groebner()?;
    let results: Vec<(usize, bool)> = (0..gs.len())
        .into_par_iter()
        .map(|i| {
            let n = engine.normal_order(&gs[i], AlgebraMode::Q1T);
            let img = images.classical_element(&n).map_err(|e| {
                EngineError::Data(format!("classical evaluation of g{}: {e}", i + 1))
            })?;
            Ok((i, img.is_zero()))
        })
        .collect::<Result<_, EngineError>>()?;
    for (i, ok) in results {
        report.check(format!("g{}|q=1 vanishes on classical images", i + 1), ok);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn engine() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| Engine::new().unwrap())
    }

    fn images() -> &'static RepImages {
        static IMAGES: OnceLock<RepImages> = OnceLock::new();
        IMAGES.get_or_init(RepImages::new)
    }

    fn gn(n: &str) -> Gen {
        Gen::from_name(n).unwrap()
    }

    #[test]
    fn shift_acts_on_multiplication_operator() {
        // d12 (X12 mult) = q^(1/2) X12 d12
        let d12 = QDiffOperator::term([1, 0, 0], XRational::one());
        let x12 = QDiffOperator::term(
            [0, 0, 0],
            XRational::from_poly(XLaurent::monomial(0, 1, QTLaurent::one())),
        );
        let got = d12.compose(&x12);
        let want = QDiffOperator::term(
            [1, 0, 0],
            XRational::from_poly(XLaurent::monomial(0, 1, QTLaurent::q_pow(2))),
        );
        assert!(got.eq(&want));
    }

    #[test]
    fn compose_with_zero() {
        let z = QDiffOperator::zero();
        let a = images().generator(gn("O1")).clone();
        assert!(a.compose(&z).is_zero());
        assert!(z.compose(&a).is_zero());
    }

    #[test]
    fn multiplication_operators_commute() {
        let a = images().generator(gn("O2"));
        let b = images().generator(gn("O4"));
        assert!(a.compose(b).eq(&b.compose(a)));
    }

    #[test]
    fn composition_associative_on_generator_images() {
        let a = images().generator(gn("O1"));
        let b = images().generator(gn("O2"));
        let c = images().generator(gn("O3"));
        let lhs = a.compose(b).compose(c);
        let rhs = a.compose(&b.compose(c));
        assert!(lhs.eq(&rhs));
    }

    #[test]
    fn chain_matches_explicit_o12() {
        let im = images();
        let chain = im.generator(gn("O1")).q_commutator(im.generator(gn("O2")), 1);
        assert!(chain.eq(im.generator(gn("O12"))));
    }

    #[test]
    fn rep_of_identity() {
        let e = NormalElement::one();
        assert!(images().element(&e).eq(&QDiffOperator::identity()));
    }

    #[test]
    fn first_column_commutation_o6_o1() {
        // eta(O6, O1): [O6, O1]_q = O61 as operators
        let im = images();
        let lhs = im.generator(gn("O6")).q_commutator(im.generator(gn("O1")), 1);
        assert!(lhs.eq(im.generator(gn("O61"))));
    }

    #[test]
    fn g4_maps_to_zero_operator() {
        let e = engine();
        let gs = crate::relators::parse_groebner().unwrap();
        let n = e.normal_order(&gs[3], AlgebraMode::QT);
        assert!(images().element(&n).is_zero());
    }

    #[test]
    fn rep_is_multiplicative_on_samples() {
        use rand::{Rng, SeedableRng};
        let e = engine();
        let im = images();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..4 {
            let rand_basis = |rng: &mut rand_chacha::ChaCha8Rng| loop {
                let mut m = crate::gens::NormalMonomial::one();
                let mut w = 0;
                while w < 4 {
                    let g = Gen(rng.gen_range(0..NGEN as u8));
                    if w + g.weight() > 4 {
                        break;
                    }
                    w += g.weight();
                    m.exps[g.index()] += 1;
                }
                if e.is_basis(&m) {
                    return NormalElement::term(m, QTLaurent::one());
                }
            };
            let a = rand_basis(&mut rng);
            let b = rand_basis(&mut rng);
            let prod = e.multiply(&a, &b, AlgebraMode::QT).unwrap();
            let lhs = im.element(&prod);
            let rhs = im.element(&a).compose(&im.element(&b));
            assert!(lhs.eq(&rhs), "images of {a:?} * {b:?} disagree");
        }
    }
}
