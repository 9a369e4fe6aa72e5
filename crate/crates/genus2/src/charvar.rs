//! Exact finite-field validation: sample SL(2) representations of the
//! genus-two surface group over a prime field, evaluate the fifteen trace
//! coordinates, and check every specialized relator, the trace identities,
//! the trace-coordinate round-trips and the twist/rotation equivariance.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{AlgebraMode, Engine, EngineError};
use crate::free::{FreeElement, NormalElement};
use crate::gens::{Gen, NGEN};
use crate::parse::{eval_ast, parse_ast, EvalTarget, GenAlphabet, NamedAlphabet};
use crate::qt::QTLaurent;
use crate::report::Report;
use crate::transcription::{ABL_NAMES, ABL_WORDS, PHI, PSI_WORDS, TRACE_IDENTITIES};

/// Sampling gave up after the configured retry budget.
#[derive(Debug, Clone)]
pub struct RetryExhausted {
    pub budget: u32,
}

impl fmt::Display for RetryExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sampling retry budget of {} exhausted", self.budget)
    }
}

impl std::error::Error for RetryExhausted {}

/// Prime-field arithmetic on `u64` values reduced mod `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p > 3 && p < (1 << 32), "prime must fit in 32 bits and exceed 3");
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut out = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(out, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        out
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn is_square(&self, a: u64) -> bool {
        a % self.p == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Tonelli-Shanks square root; `None` for non-residues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return Some(0);
        }
        if !self.is_square(a) {
            return None;
        }
        if self.p % 4 == 3 {
            return Some(self.pow(a, (self.p + 1) / 4));
        }
        // Write p - 1 = q 2^s with q odd.
        let mut q = self.p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        // Find a non-residue z.
        let mut z = 2;
        while self.is_square(z) {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// Reduce an exact rational mod `p`.
    pub fn from_rational(&self, r: &BigRational) -> u64 {
        let p = BigInt::from(self.p);
        let num = r.numer().clone() % &p;
        let num = if num.is_negative() { num + &p } else { num };
        let den = r.denom().clone() % &p;
        assert!(!den.is_zero(), "denominator divisible by p");
        let num = num.to_u64().unwrap();
        let den = den.to_u64().unwrap();
        self.mul(num, self.inv(den))
    }
}

/// 2x2 matrix over the prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2Mat {
    pub e: [[u64; 2]; 2],
}

impl SL2Mat {
    pub fn identity() -> Self {
        SL2Mat { e: [[1, 0], [0, 1]] }
    }

    pub fn mul(&self, o: &SL2Mat, f: &Fp) -> SL2Mat {
        let mut out = [[0u64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = f.add(
                    f.mul(self.e[i][0], o.e[0][j]),
                    f.mul(self.e[i][1], o.e[1][j]),
                );
            }
        }
        SL2Mat { e: out }
    }

    pub fn det(&self, f: &Fp) -> u64 {
        f.sub(f.mul(self.e[0][0], self.e[1][1]), f.mul(self.e[0][1], self.e[1][0]))
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv_unimodular(&self, f: &Fp) -> SL2Mat {
        SL2Mat {
            e: [
                [self.e[1][1], f.neg(self.e[0][1])],
                [f.neg(self.e[1][0]), self.e[0][0]],
            ],
        }
    }

    pub fn trace(&self, f: &Fp) -> u64 {
        f.add(self.e[0][0], self.e[1][1])
    }

    pub fn is_central(&self, f: &Fp) -> bool {
        self.e[0][1] == 0
            && self.e[1][0] == 0
            && self.e[0][0] == self.e[1][1]
            && (self.e[0][0] == 1 || self.e[0][0] == f.p - 1)
    }

    pub fn pow(&self, e: i8, f: &Fp) -> SL2Mat {
        let base = if e < 0 { self.inv_unimodular(f) } else { *self };
        let mut out = SL2Mat::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base, f);
        }
        out
    }
}

/// Quadruple of determinant-one matrices satisfying the surface relation
/// `X1 Y1 X1^-1 Y1^-1 X2 Y2 X2^-1 Y2^-1 = 1` exactly.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceRep {
    pub x1: SL2Mat,
    pub y1: SL2Mat,
    pub x2: SL2Mat,
    pub y2: SL2Mat,
    pub p: u64,
}

impl SurfaceRep {
    pub fn trivial(p: u64) -> Self {
        let i = SL2Mat::identity();
        SurfaceRep { x1: i, y1: i, x2: i, y2: i, p }
    }

    pub fn letters(&self) -> [SL2Mat; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }

    /// Evaluate a fundamental-group word, matrix products read left to right.
    pub fn eval_word(&self, word: &[(u8, i8)], f: &Fp) -> SL2Mat {
        let letters = self.letters();
        let mut out = SL2Mat::identity();
        for &(idx, e) in word {
            out = out.mul(&letters[idx as usize].pow(e, f), f);
        }
        out
    }

    pub fn satisfies_surface_relation(&self, f: &Fp) -> bool {
        let w: [(u8, i8); 8] = [
            (0, 1),
            (1, 1),
            (0, -1),
            (1, -1),
            (2, 1),
            (3, 1),
            (2, -1),
            (3, -1),
        ];
        self.eval_word(&w, f) == SL2Mat::identity()
    }

    /// Conjugate the whole representation by an invertible matrix.
    pub fn conjugate(&self, g: &SL2Mat, f: &Fp) -> SurfaceRep {
        let gi = g.inv_unimodular(f);
        let c = |m: &SL2Mat| g.mul(m, f).mul(&gi, f);
        SurfaceRep { x1: c(&self.x1), y1: c(&self.y1), x2: c(&self.x2), y2: c(&self.y2), p: self.p }
    }
}

fn random_sl2(f: &Fp, rng: &mut ChaCha8Rng) -> SL2Mat {
    loop {
        let a = rng.gen_range(0..f.p);
        let b = rng.gen_range(0..f.p);
        let c = rng.gen_range(0..f.p);
        if a != 0 {
            let d = f.mul(f.add(1, f.mul(b, c)), f.inv(a));
            return SL2Mat { e: [[a, b], [c, d]] };
        }
        if b != 0 {
            // det = -bc = 1
            let c = f.neg(f.inv(b));
            let d = rng.gen_range(0..f.p);
            return SL2Mat { e: [[a, b], [c, d]] };
        }
    }
}

/// Solve `g K = C g` over the field: the solution space of a 4x4 linear
/// system, returned as a basis of up to 2 matrices.
fn intertwiners(k: &SL2Mat, c: &SL2Mat, f: &Fp) -> Vec<SL2Mat> {
    // Unknown g = [[g0,g1],[g2,g3]]; equations (gK - Cg)_{ij} = 0.
    // Row-reduce the 4x4 coefficient matrix.
    let mut m = [[0u64; 4]; 4];
    // (gK)_{ij} = sum_l g_{il} K_{lj}; (Cg)_{ij} = sum_l C_{il} g_{lj}
    // variable index of g_{il}: 2*i + l
    for i in 0..2 {
        for j in 0..2 {
            let row = 2 * i + j;
            for l in 0..2 {
                m[row][2 * i + l] = f.add(m[row][2 * i + l], k.e[l][j]);
                m[row][2 * l + j] = f.sub(m[row][2 * l + j], c.e[i][l]);
            }
        }
    }
    // Gaussian elimination.
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        if let Some(pr) = (r..4).find(|&i| m[i][col] != 0) {
            m.swap(r, pr);
            let inv = f.inv(m[r][col]);
            for x in m[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for i in 0..4 {
                if i != r && m[i][col] != 0 {
                    let factor = m[i][col];
                    for cc in 0..4 {
                        m[i][cc] = f.sub(m[i][cc], f.mul(factor, m[r][cc]));
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
    }
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = [0u64; 4];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[ri][fc]);
            }
            SL2Mat { e: [[v[0], v[1]], [v[2], v[3]]] }
        })
        .collect()
}

/// Sample a surface representation: random commutator on the first handle,
/// a trace-coordinate solve on the second, glued by an intertwiner.
pub fn sample_rep(p: u64, seed: u64, budget: u32) -> Result<SurfaceRep, RetryExhausted> {
    let f = Fp::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let x1 = random_sl2(&f, &mut rng);
        let y1 = random_sl2(&f, &mut rng);
        let c = x1
            .mul(&y1, &f)
            .mul(&x1.inv_unimodular(&f), &f)
            .mul(&y1.inv_unimodular(&f), &f);
        let cinv = c.inv_unimodular(&f);
        let target = cinv.trace(&f);
        if target == 2 || target == f.p - 2 {
            continue;
        }
        // Fricke solve: x^2 + y^2 + z^2 - xyz - 2 = target.
        let x = rng.gen_range(0..f.p);
        let y = rng.gen_range(0..f.p);
        let b = f.mul(x, y);
        let cc = f.sub(f.add(f.mul(x, x), f.mul(y, y)), f.add(2, target));
        let disc = f.sub(f.mul(b, b), f.mul(4, cc));
        let Some(sq) = f.sqrt(disc) else { continue };
        let z = f.mul(f.add(b, sq), f.inv(2));
        // zeta + zeta^-1 = z
        let zdisc = f.sub(f.mul(z, z), 4);
        let Some(zsq) = f.sqrt(zdisc) else { continue };
        let zeta = f.mul(f.add(z, zsq), f.inv(2));
        if zeta == 0 {
            continue;
        }
        let a_mat = SL2Mat { e: [[x, f.neg(1)], [1, 0]] };
        let b_mat = SL2Mat { e: [[0, zeta], [f.neg(f.inv(zeta)), y]] };
        let k = a_mat
            .mul(&b_mat, &f)
            .mul(&a_mat.inv_unimodular(&f), &f)
            .mul(&b_mat.inv_unimodular(&f), &f);
        debug_assert_eq!(k.trace(&f), target);
        if k.is_central(&f) || c.is_central(&f) {
            continue;
        }
        // Glue: g K g^-1 = C^-1.
        let basis = intertwiners(&k, &cinv, &f);
        if basis.is_empty() {
            continue;
        }
        let mut glue = None;
        for _ in 0..16 {
            let mut g = SL2Mat { e: [[0, 0], [0, 0]] };
            for bm in &basis {
                let lambda = rng.gen_range(0..f.p);
                for i in 0..2 {
                    for j in 0..2 {
                        g.e[i][j] = f.add(g.e[i][j], f.mul(lambda, bm.e[i][j]));
                    }
                }
            }
            let det = g.det(&f);
            if det == 0 {
                continue;
            }
            if let Some(s) = f.sqrt(det) {
                let sinv = f.inv(s);
                for i in 0..2 {
                    for j in 0..2 {
                        g.e[i][j] = f.mul(g.e[i][j], sinv);
                    }
                }
                glue = Some(g);
                break;
            }
        }
        let Some(g) = glue else { continue };
        let gi = g.inv_unimodular(&f);
        let x2 = g.mul(&a_mat, &f).mul(&gi, &f);
        let y2 = g.mul(&b_mat, &f).mul(&gi, &f);
        let rep = SurfaceRep { x1, y1, x2, y2, p };
        if rep.satisfies_surface_relation(&f) {
            return Ok(rep);
        }
    }
    Err(RetryExhausted { budget })
}

/// The fifteen trace coordinates of a representation.
pub fn psi_eval(rep: &SurfaceRep) -> [u64; NGEN] {
    let f = Fp::new(rep.p);
    let mut out = [0u64; NGEN];
    for (name, word) in PSI_WORDS.iter() {
        let g = Gen::from_name(name).unwrap();
        out[g.index()] = rep.eval_word(word, &f).trace(&f);
    }
    out
}

/// Evaluate a commutative element (rational coefficients) at a trace vector.
pub fn eval_element(e: &NormalElement, values: &[u64; NGEN], f: &Fp) -> u64 {
    let mut acc = 0u64;
    for (m, c) in &e.terms {
        let ((a, b), r) = c
            .as_monomial()
            .expect("element must have scalar coefficients");
        assert!(a == 0 && b == 0, "element must be parameter-free");
        let mut term = f.from_rational(r);
        for (i, &e) in m.exps.iter().enumerate() {
            for _ in 0..e {
                term = f.mul(term, values[i]);
            }
        }
        acc = f.add(acc, term);
    }
    acc
}

/// Commutative polynomial in the fourteen trace coordinates.
#[derive(Debug, Clone, Default)]
pub struct TracePoly {
    pub terms: std::collections::BTreeMap<Vec<u16>, QTLaurent>,
}

impl TracePoly {
    fn add_term(&mut self, m: Vec<u16>, c: &QTLaurent) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn eval(&self, values: &[u64; 14], f: &Fp) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let ((a, b), r) = c.as_monomial().expect("trace polynomial must be scalar");
            assert!(a == 0 && b == 0);
            let mut term = f.from_rational(r);
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term = f.mul(term, values[i]);
                }
            }
            acc = f.add(acc, term);
        }
        acc
    }

    /// Substitute each trace coordinate by its image polynomial in the
    /// fifteen generators.
    pub fn substitute(&self, images: &[FreeElement; 14]) -> FreeElement {
        let mut out = FreeElement::zero();
        for (m, c) in &self.terms {
            let mut prod = FreeElement::term(vec![], c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&images[i]);
                }
            }
            out = out.add(&prod);
        }
        out
    }
}

impl EvalTarget for TracePoly {
    fn one() -> Self {
        let mut p = TracePoly::default();
        p.add_term(vec![0; 14], &QTLaurent::one());
        p
    }
    fn sym(i: u16) -> Self {
        let mut m = vec![0u16; 14];
        m[i as usize] = 1;
        let mut p = TracePoly::default();
        p.add_term(m, &QTLaurent::one());
        p
    }
    fn scalar(c: QTLaurent) -> Self {
        let mut p = TracePoly::default();
        p.add_term(vec![0; 14], &c);
        p
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = TracePoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<u16> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, &(c1 * c2));
            }
        }
        out
    }
}

/// Parsed trace-coordinate data: identities and generator images.
pub struct TraceData {
    /// For every generator, its trace word rewritten in the fourteen
    /// coordinates (the six short words are single coordinates).
    pub iota: [TracePoly; NGEN],
    /// Images of the fourteen coordinates in the generators.
    pub phi: [FreeElement; 14],
}

impl TraceData {
    pub fn new() -> Result<Self, EngineError> {
        let alphabet = NamedAlphabet(&ABL_NAMES);
        let parse_tp = |src: &str| -> Result<TracePoly, EngineError> {
            eval_ast(&parse_ast(src, &alphabet).map_err(|e| EngineError::Data(e.to_string()))?)
                .map_err(|e| EngineError::Data(e.to_string()))
        };
        // Direct coordinates for the six short generator words.
        let direct: [(&str, &str); 6] = [
            ("O1", "tY1"),
            ("O2", "tX1"),
            ("O3", "tY1Y2"),
            ("O4", "tX2"),
            ("O5", "tY2"),
            ("O45", "tX2Y2"),
        ];
        let mut iota: Vec<Option<TracePoly>> = vec![None; NGEN];
        for (g, src) in direct {
            iota[Gen::from_name(g).unwrap().index()] = Some(parse_tp(src)?);
        }
        for (g, src) in TRACE_IDENTITIES.iter() {
            iota[Gen::from_name(g).unwrap().index()] = Some(parse_tp(src)?);
        }
        let iota: Vec<TracePoly> = iota
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| EngineError::Data(format!("no trace identity for {}", Gen(i as u8))))
            })
            .collect::<Result<_, _>>()?;
        let mut phi: Vec<FreeElement> = Vec::with_capacity(14);
        for (name, src) in PHI.iter() {
            assert_eq!(*name, ABL_NAMES[phi.len()]);
            let ast = parse_ast(src, &GenAlphabet).map_err(|e| EngineError::Data(e.to_string()))?;
            phi.push(eval_ast(&ast).map_err(|e| EngineError::Data(e.to_string()))?);
        }
        Ok(TraceData {
            iota: iota.try_into().unwrap(),
            phi: phi.try_into().unwrap(),
        })
    }

    /// Trace values of the fourteen coordinates on a representation.
    pub fn abl_values(&self, rep: &SurfaceRep) -> [u64; 14] {
        let f = Fp::new(rep.p);
        let mut out = [0u64; 14];
        for (i, w) in ABL_WORDS.iter().enumerate() {
            out[i] = rep.eval_word(w, &f).trace(&f);
        }
        out
    }
}

/// The twist's action on the fundamental group: `X1 -> X1 Y1`, rest fixed.
pub fn twist_rep(rep: &SurfaceRep) -> SurfaceRep {
    let f = Fp::new(rep.p);
    SurfaceRep { x1: rep.x1.mul(&rep.y1, &f), ..*rep }
}

/// The rotation's action on the fundamental group.
pub fn rotate_rep(rep: &SurfaceRep) -> SurfaceRep {
    let f = Fp::new(rep.p);
    let conj = rep
        .x1
        .inv_unimodular(&f)
        .mul(&rep.y2, &f)
        .mul(&rep.x2, &f);
    let conj_inv = conj.inv_unimodular(&f);
    SurfaceRep {
        x1: rep.y2.mul(&rep.y1, &f),
        y1: rep.x1.inv_unimodular(&f),
        x2: conj.mul(&rep.y2, &f).mul(&conj_inv, &f),
        y2: rep.y2.mul(&conj_inv, &f),
        p: rep.p,
    }
}

/// Relator data specialized to `q = t = 1`, shared across samples.
pub struct SpecializedRelators {
    pub groebner: Vec<NormalElement>,
    /// The commutative central relator at `t = 1`.
    pub r0: NormalElement,
    /// The first commutative J-relator at `t = 1`.
    pub r1: NormalElement,
}

impl SpecializedRelators {
    pub fn new(engine: &Engine) -> Result<Self, EngineError> {
        let gs = crate::relators::parse_groebner()?;
        let spec = |e: &FreeElement| -> NormalElement {
            engine.normal_order(e, AlgebraMode::QT1)
        };
        Ok(SpecializedRelators {
            groebner: gs.iter().map(&spec).collect(),
            r0: spec(&engine.defining.casimir),
            r1: spec(&engine.defining.rhos[0]),
        })
    }
}

/// Per-representation checks; returns a short failure description.
pub fn check_rep(
    rep: &SurfaceRep,
    rels: &SpecializedRelators,
    data: &TraceData,
) -> Result<(), String> {
    let f = Fp::new(rep.p);
    if !rep.satisfies_surface_relation(&f) {
        return Err("surface relation violated".into());
    }
    let traces = psi_eval(rep);
    for (i, g) in rels.groebner.iter().enumerate() {
        if eval_element(g, &traces, &f) != 0 {
            return Err(format!("g{} does not vanish", i + 1));
        }
    }
    if eval_element(&rels.r0, &traces, &f) != 0 {
        return Err("central relator does not vanish".into());
    }
    if eval_element(&rels.r1, &traces, &f) != 0 {
        return Err("first J-relator does not vanish".into());
    }
    // Trace identities: every generator's word equals its coordinate polynomial.
    let abl = data.abl_values(rep);
    for g in Gen::all() {
        if traces[g.index()] != data.iota[g.index()].eval(&abl, &f) {
            return Err(format!("trace identity for {g} fails"));
        }
    }
    // Coordinate round-trips: the image polynomial of each coordinate
    // evaluates to the coordinate's own trace.
    for (i, img) in data.phi.iter().enumerate() {
        let mut val = 0u64;
        for (w, c) in &img.terms {
            let ((a, b), r) = c.as_monomial().expect("scalar coefficients");
            assert!(a == 0 && b == 0);
            let mut term = f.from_rational(r);
            for g in w {
                term = f.mul(term, traces[g.index()]);
            }
            val = f.add(val, term);
        }
        if val != abl[i] {
            return Err(format!("round-trip for {} fails", ABL_NAMES[i]));
        }
    }
    Ok(())
}

/// Twist/rotation equivariance on a single representation.
pub fn check_equivariance(
    rep: &SurfaceRep,
    engine: &Engine,
    mcg: &crate::mcg::MappingClassAction,
) -> Result<(), String> {
    let f = Fp::new(rep.p);
    let traces = psi_eval(rep);
    let twisted = psi_eval(&twist_rep(rep));
    let rotated = psi_eval(&rotate_rep(rep));
    for g in Gen::all() {
        // Twist: the image polynomial evaluated on the original traces must
        // match the generator's trace on the twisted representation.
        let image = mcg
            .apply(engine, &[crate::mcg::Letter::Twist(1, false)], &NormalElement::gen(g), AlgebraMode::QT1)
            .map_err(|e| e.to_string())?;
        let lhs = eval_element(&image, &traces, &f);
        if lhs != twisted[g.index()] {
            return Err(format!("twist equivariance fails on {g}"));
        }
        let image = mcg
            .apply(engine, &[crate::mcg::Letter::Rot(false)], &NormalElement::gen(g), AlgebraMode::QT1)
            .map_err(|e| e.to_string())?;
        let lhs = eval_element(&image, &traces, &f);
        if lhs != rotated[g.index()] {
            return Err(format!("rotation equivariance fails on {g}"));
        }
    }
    Ok(())
}

/// Symbolic round-trip: rewriting each generator's trace word through the
/// fourteen coordinates and mapping back lands on the same generator.
pub fn verify_symbolic_roundtrip(engine: &Engine, data: &TraceData) -> Result<Report, EngineError> {
    use rayon::prelude::*;
    let mut report = Report::new("symbolic round-trip");
    let results: Vec<(Gen, bool)> = Gen::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| {
            let substituted = data.iota[g.index()].substitute(&data.phi);
            let reduced = engine.reduce_free(&substituted, AlgebraMode::QT1)?;
            Ok((*g, reduced == NormalElement::gen(*g)))
        })
        .collect::<Result<_, EngineError>>()?;
    for (g, ok) in results {
        report.check(format!("round-trip fixes {g}"), ok);
    }
    Ok(report)
}

/// Full sampling suite over `n` representations.
pub fn verify_on_reps(
    engine: &Engine,
    mcg: &crate::mcg::MappingClassAction,
    n: u32,
    p: u64,
    seed: u64,
) -> Result<Report, EngineError> {
    use rayon::prelude::*;
    let mut report = Report::new(format!("character variety [p = {p}, n = {n}]"));
    let rels = SpecializedRelators::new(engine)?;
    let data = TraceData::new()?;

    // Deterministic fixed case: the trivial representation.
    let trivial = SurfaceRep::trivial(p);
    report.check(
        "trivial representation passes all relator checks",
        check_rep(&trivial, &rels, &data).is_ok(),
    );
    let f = Fp::new(p);
    report.check(
        "trivial representation trace vector is all 2",
        psi_eval(&trivial) == [2u64; NGEN],
    );
    report.check(
        "central relator on the all-2 vector is 0",
        eval_element(&rels.r0, &[2u64; NGEN], &f) == 0,
    );

    let sample_results: Vec<Result<(u64, SurfaceRep), String>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            sample_rep(p, s, 1000)
                .map(|r| (s, r))
                .map_err(|e| format!("seed {s}: {e}"))
        })
        .collect();
    let mut reps = Vec::new();
    let mut sample_ok = true;
    for r in sample_results {
        match r {
            Ok(sr) => reps.push(sr),
            Err(e) => {
                report.check(format!("sampling failed: {e}"), false);
                sample_ok = false;
            }
        }
    }
    report.check(format!("sampled {n} representations"), sample_ok);

    let failures: Vec<String> = reps
        .par_iter()
        .flat_map(|(s, rep)| {
            let mut errs = Vec::new();
            if let Err(e) = check_rep(rep, &rels, &data) {
                errs.push(format!("seed {s}: {e}"));
            }
            if let Err(e) = check_equivariance(rep, engine, mcg) {
                errs.push(format!("seed {s}: {e}"));
            }
            // Conjugation invariance of the trace vector.
            let f = Fp::new(rep.p);
            let mut rng = ChaCha8Rng::seed_from_u64(*s ^ 0x5eed);
            let g = random_sl2(&f, &mut rng);
            if psi_eval(&rep.conjugate(&g, &f)) != psi_eval(rep) {
                errs.push(format!("seed {s}: traces not conjugation invariant"));
            }
            errs
        })
        .collect();
    for e in &failures {
        report.check(e.clone(), false);
    }
    report.check(
        format!("all relator/identity/equivariance checks on {} samples", reps.len()),
        failures.is_empty(),
    );
    report.merge(verify_symbolic_roundtrip(engine, &data)?);
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

    const P: u64 = 1000003;

    #[test]
    fn field_sqrt_roundtrip() {
        let f = Fp::new(P);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let a = rng.gen_range(1..P);
            let sq = f.mul(a, a);
            let r = f.sqrt(sq).unwrap();
            assert!(r == a || r == f.neg(a));
        }
    }

    #[test]
    fn trivial_representation() {
        let rep = SurfaceRep::trivial(P);
        let f = Fp::new(P);
        assert!(rep.satisfies_surface_relation(&f));
        assert_eq!(psi_eval(&rep), [2u64; NGEN]);
    }

    #[test]
    fn sampled_rep_satisfies_relation_exactly() {
        let rep = sample_rep(10007, 1, 1000).unwrap();
        let f = Fp::new(10007);
        assert!(rep.satisfies_surface_relation(&f));
        assert!(!rep.x1.is_central(&f));
    }

    #[test]
    fn psi_o4_is_trace_of_x2() {
        let rep = sample_rep(P, 7, 1000).unwrap();
        let f = Fp::new(P);
        let traces = psi_eval(&rep);
        assert_eq!(traces[Gen::from_name("O4").unwrap().index()], rep.x2.trace(&f));
    }

    #[test]
    fn relators_vanish_on_samples() {
        let e = engine();
        let rels = SpecializedRelators::new(e).unwrap();
        let data = TraceData::new().unwrap();
        for s in 0..5 {
            let rep = sample_rep(P, s, 1000).unwrap();
            check_rep(&rep, &rels, &data).unwrap();
        }
    }

    #[test]
    fn equivariance_on_samples() {
        let e = engine();
        let mcg = crate::mcg::MappingClassAction::new().unwrap();
        for s in 0..3 {
            let rep = sample_rep(P, s, 1000).unwrap();
            check_equivariance(&rep, e, &mcg).unwrap();
        }
    }

    #[test]
    fn trivial_rep_coordinate_roundtrip_value() {
        // On the trivial representation the image of the three-letter
        // coordinate evaluates to 2 + 4 - 4 = 2, the trace of the identity.
        let e = engine();
        let _ = e;
        let data = TraceData::new().unwrap();
        let img = &data.phi[13]; // tY1X2Y2 -> O34 + O1*O45 - O5*O345
        let f = Fp::new(P);
        let mut val = 0u64;
        for (w, c) in &img.terms {
            let ((_, _), r) = c.as_monomial().unwrap();
            let mut term = f.from_rational(r);
            for _ in w {
                term = f.mul(term, 2);
            }
            val = f.add(val, term);
        }
        assert_eq!(val, 2);
    }

    #[test]
    fn symbolic_roundtrip_all_generators() {
        let e = engine();
        let data = TraceData::new().unwrap();
        let report = verify_symbolic_roundtrip(e, &data).unwrap();
        assert!(report.passed(), "{report}");
    }
}
