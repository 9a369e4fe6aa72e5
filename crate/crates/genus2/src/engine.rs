//! Canonical forms: the calibrated monomial order, reduction by the 61
//! canonical-form relators, multiplication with structure constants, and the
//! four algebra modes sharing one monomial basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::free::{FreeElement, NormalElement};
use crate::gens::{Gen, NormalMonomial, GEN_NAMES, NGEN};
use crate::qt::{QTLaurent, Specialization};
use crate::relators::{groebner_first_monomials, parse_groebner, DefiningRelators};
use crate::table::{CommutationTable, DataError};

/// The four algebras sharing the monomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraMode {
    /// Generic two-parameter algebra, noncommutative.
    QT,
    /// `t = q` specialization (skein algebra), noncommutative.
    Skein,
    /// `q = 1` classical limit, commutative with `t`-Laurent coefficients.
    Q1T,
    /// `q = t = 1` coordinate ring, commutative with rational coefficients.
    QT1,
}

impl AlgebraMode {
    pub const ALL: [AlgebraMode; 4] =
        [AlgebraMode::QT, AlgebraMode::Skein, AlgebraMode::Q1T, AlgebraMode::QT1];

    pub fn is_commutative(self) -> bool {
        matches!(self, AlgebraMode::Q1T | AlgebraMode::QT1)
    }

    /// Coefficient specialization applied to inputs and relator data.
    pub fn specialization(self) -> Option<Specialization> {
        match self {
            AlgebraMode::QT => None,
            AlgebraMode::Skein => Some(Specialization::TToQ),
            AlgebraMode::Q1T => Some(Specialization::QToOne),
            AlgebraMode::QT1 => Some(Specialization::BothToOne),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraMode::QT => "qt",
            AlgebraMode::Skein => "skein",
            AlgebraMode::Q1T => "q1t",
            AlgebraMode::QT1 => "qt1",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "qt" => Some(AlgebraMode::QT),
            "skein" => Some(AlgebraMode::Skein),
            "q1t" => Some(AlgebraMode::Q1T),
            "qt1" => Some(AlgebraMode::QT1),
            _ => None,
        }
    }

    fn index(self) -> usize {
        match self {
            AlgebraMode::QT => 0,
            AlgebraMode::Skein => 1,
            AlgebraMode::Q1T => 2,
            AlgebraMode::QT1 => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub enum EngineError {
    Data(String),
    Calibration(String),
    /// A reduction step produced a leading coefficient that is not invertible
    /// in the Laurent ring; flatness of the basis would be violated.
    NonLaurentCoefficient(String),
    NotDivisible(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Data(s) => write!(f, "data error: {s}"),
            EngineError::Calibration(s) => write!(f, "calibration error: {s}"),
            EngineError::NonLaurentCoefficient(s) => {
                write!(f, "non-Laurent coefficient: {s}")
            }
            EngineError::NotDivisible(s) => write!(f, "not divisible: {s}"),
        }
    }
}

impl std::error::Error for EngineError {}

impl From<DataError> for EngineError {
    fn from(e: DataError) -> Self {
        EngineError::Data(e.0)
    }
}

/// Weighted degree reverse lexicographic order, described by the scan order
/// of the tie-break: `ranking[0]` is compared first, the smaller exponent at
/// the first difference winning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub ranking: [u8; NGEN],
}

impl MonomialOrder {
    /// `O1` lowest, `O345` highest: scan from `O1` up.
    pub fn natural() -> Self {
        let mut ranking = [0u8; NGEN];
        for (i, r) in ranking.iter_mut().enumerate() {
            *r = i as u8;
        }
        MonomialOrder { ranking }
    }

    /// The calibrated ranking: scan from `O345` down to `O1`, i.e. degrevlex
    /// for the variable significance `O1 > O2 > ... > O345`. This is the
    /// order implemented by [`NormalMonomial::cmp_order`].
    pub fn calibrated() -> Self {
        let mut ranking = [0u8; NGEN];
        for (i, r) in ranking.iter_mut().enumerate() {
            *r = (NGEN - 1 - i) as u8;
        }
        MonomialOrder { ranking }
    }

    pub fn cmp(&self, a: &NormalMonomial, b: &NormalMonomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match a.weight().cmp(&b.weight()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for &i in &self.ranking {
            match a.exps[i as usize].cmp(&b.exps[i as usize]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Whether every relator's declared first monomial strictly dominates the
    /// rest of its support.
    pub fn calibrates(&self, relators: &[(NormalMonomial, Vec<NormalMonomial>)]) -> bool {
        relators.iter().all(|(lead, tail)| {
            tail.iter()
                .all(|m| self.cmp(lead, m) == std::cmp::Ordering::Greater)
        })
    }
}

/// Backtracking search over scan orders satisfying all `lead > tail`
/// constraints. Only same-weight pairs constrain the tie-break.
pub fn search_ranking(
    relators: &[(NormalMonomial, Vec<NormalMonomial>)],
) -> Option<MonomialOrder> {
    // Constraints as exponent differences lead - tail (same weight only).
    let mut constraints: Vec<[i32; NGEN]> = Vec::new();
    for (lead, tail) in relators {
        for m in tail {
            if m.weight() == lead.weight() {
                let mut d = [0i32; NGEN];
                for i in 0..NGEN {
                    d[i] = lead.exps[i] as i32 - m.exps[i] as i32;
                }
                constraints.push(d);
            }
        }
    }
    fn go(
        chosen: &mut Vec<u8>,
        used: &mut [bool; NGEN],
        live: &[usize],
        constraints: &[[i32; NGEN]],
    ) -> bool {
        if chosen.len() == NGEN {
            return live.is_empty();
        }
        'candidates: for v in 0..NGEN {
            if used[v] {
                continue;
            }
            // Scanning v next: any live constraint with a *positive* entry at v
            // would make the lead lose; prune.
            let mut next_live = Vec::new();
            for &ci in live {
                match constraints[ci][v].cmp(&0) {
                    std::cmp::Ordering::Greater => continue 'candidates,
                    std::cmp::Ordering::Less => {} // satisfied, drop
                    std::cmp::Ordering::Equal => next_live.push(ci),
                }
            }
            used[v] = true;
            chosen.push(v as u8);
            if go(chosen, used, &next_live, constraints) {
                return true;
            }
            chosen.pop();
            used[v] = false;
        }
        false
    }
    let mut chosen = Vec::new();
    let mut used = [false; NGEN];
    let live: Vec<usize> = (0..constraints.len()).collect();
    if go(&mut chosen, &mut used, &live, &constraints) {
        let mut ranking = [0u8; NGEN];
        ranking.copy_from_slice(&chosen);
        Some(MonomialOrder { ranking })
    } else {
        None
    }
}

/// A canonical-form relator: monic lead plus strictly smaller tail.
#[derive(Debug, Clone)]
pub struct Relator {
    pub lead: NormalMonomial,
    pub tail: NormalElement,
    lead_mask: u16,
}

struct ModeData {
    relators: Vec<Relator>,
    cache: RwLock<HashMap<NormalMonomial, Arc<NormalElement>>>,
}

/// The reduction engine over the four algebra modes.
pub struct Engine {
    pub table: CommutationTable,
    pub skein_table: CommutationTable,
    pub defining: DefiningRelators,
    pub order: MonomialOrder,
    modes: [ModeData; 4],
}

/// Monomial selection strategy for the uniqueness evidence.
#[derive(Clone, Copy)]
pub enum ReduceStrategy {
    GreatestFirst,
    /// Pick a pseudo-random reducible monomial and relator each step.
    Random(u64),
}

/// Raw inputs for the engine, either from the embedded transcription or from
/// an external relator bundle.
pub struct EngineParts {
    pub table: CommutationTable,
    /// Canonical-form relators with their declared leading monomials.
    pub groebner: Vec<(NormalMonomial, FreeElement)>,
    pub rhos: Vec<FreeElement>,
    pub casimir: FreeElement,
}

impl EngineParts {
    pub fn embedded() -> Result<Self, EngineError> {
        let table = CommutationTable::load()?;
        let defining = DefiningRelators::build(&table)?;
        let gs = parse_groebner()?;
        let leads = groebner_first_monomials()?;
        Ok(EngineParts {
            table,
            groebner: leads.into_iter().zip(gs).collect(),
            rhos: defining.rhos,
            casimir: defining.casimir,
        })
    }
}

impl Engine {
    pub fn new() -> Result<Engine, EngineError> {
        Self::from_parts(EngineParts::embedded()?)
    }

    pub fn from_parts(parts: EngineParts) -> Result<Engine, EngineError> {
        let EngineParts { table, groebner, rhos, casimir } = parts;
        let skein_table = table.specialize(Specialization::TToQ);
        let defining = DefiningRelators { etas: table.etas(), rhos, casimir };
        let (leads, gs): (Vec<NormalMonomial>, Vec<FreeElement>) = groebner.into_iter().unzip();

        // Calibrate the order: the declared first monomial of each relator
        // must dominate its support.
        let mut constraint_data = Vec::new();
        for (g, lead) in gs.iter().zip(&leads) {
            let tail: Vec<NormalMonomial> = g
                .terms
                .keys()
                .map(|w| NormalMonomial::from_word(w))
                .filter(|m| m != lead)
                .collect();
            constraint_data.push((*lead, tail));
        }
        let order = if MonomialOrder::natural().calibrates(&constraint_data) {
            MonomialOrder::natural()
        } else if MonomialOrder::calibrated().calibrates(&constraint_data) {
            MonomialOrder::calibrated()
        } else {
            search_ranking(&constraint_data).ok_or_else(|| {
                EngineError::Calibration(
                    "no variable ranking makes every first-listed monomial leading".into(),
                )
            })?
        };
        if order != MonomialOrder::calibrated() {
            // The internal Ord on NormalMonomial hard-codes the calibrated
            // ranking; a different outcome means the data changed.
            return Err(EngineError::Calibration(format!(
                "calibration found ranking {:?}, which disagrees with the built-in order",
                order.ranking
            )));
        }

        // Relator sets per mode.
        let build_mode = |spec: Option<Specialization>| -> Result<Vec<Relator>, EngineError> {
            gs.iter()
                .zip(&leads)
                .enumerate()
                .map(|(i, (g, lead))| {
                    let mut tail = NormalElement::zero();
                    for (w, c) in &g.terms {
                        if w.windows(2).any(|p| p[0].index() > p[1].index()) {
                            return Err(EngineError::Data(format!(
                                "g{}: term not normally ordered",
                                i + 1
                            )));
                        }
                        let m = NormalMonomial::from_word(w);
                        if m != *lead {
                            let c = match spec {
                                Some(s) => c.specialize(s),
                                None => c.clone(),
                            };
                            tail.add_term(m, &c);
                        }
                    }
                    Ok(Relator { lead: *lead, tail, lead_mask: lead.support_mask() })
                })
                .collect()
        };
        let modes = [
            ModeData {
                relators: build_mode(None)?,
                cache: RwLock::new(HashMap::new()),
            },
            ModeData {
                relators: build_mode(Some(Specialization::TToQ))?,
                cache: RwLock::new(HashMap::new()),
            },
            ModeData {
                relators: build_mode(Some(Specialization::QToOne))?,
                cache: RwLock::new(HashMap::new()),
            },
            ModeData {
                relators: build_mode(Some(Specialization::BothToOne))?,
                cache: RwLock::new(HashMap::new()),
            },
        ];
        Ok(Engine { table, skein_table, defining, order, modes })
    }

    pub fn relators(&self, mode: AlgebraMode) -> &[Relator] {
        &self.modes[mode.index()].relators
    }

    /// Is the monomial in the shared basis (no relator lead divides it)?
    pub fn is_basis(&self, m: &NormalMonomial) -> bool {
        self.find_relator(m).is_none()
    }

    fn find_relator(&self, m: &NormalMonomial) -> Option<usize> {
        let mask = m.support_mask();
        let w = m.weight();
        self.modes[0].relators.iter().position(|r| {
            r.lead_mask & !mask == 0 && r.lead.weight() <= w && m.divisible_by(&r.lead)
        })
    }

    /// Normal-order a free element within a mode: table rewriting for the two
    /// noncommutative modes, exponent collection for the commutative ones.
    /// Input coefficients are specialized to the mode's ring.
    pub fn normal_order(&self, e: &FreeElement, mode: AlgebraMode) -> NormalElement {
        let e = match mode.specialization() {
            Some(s) => e.specialize(s),
            None => e.clone(),
        };
        match mode {
            AlgebraMode::QT => self.table.normal_order(&e),
            AlgebraMode::Skein => self.skein_table.normal_order(&e),
            _ => {
                let mut out = NormalElement::zero();
                for (w, c) in &e.terms {
                    out.add_term(NormalMonomial::from_word(w), c);
                }
                out
            }
        }
    }

    /// One reduction step: express a reducible monomial through strictly
    /// smaller ones, using the relator at `ri`.
    fn reduce_step(
        &self,
        v: &NormalMonomial,
        ri: usize,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let r = &self.modes[mode.index()].relators[ri];
        let mu = v.div(&r.lead);
        // Every output monomial must fall strictly below v, or the reduction
        // would not terminate; violated only by corrupt relator data.
        let check_below = |out: &NormalElement| -> Result<(), EngineError> {
            match out.terms.keys().all(|m| m < v) {
                true => Ok(()),
                false => Err(EngineError::Data(format!(
                    "relator g{} does not lower the monomial {v}",
                    ri + 1
                ))),
            }
        };
        if mode.is_commutative() {
            // (lead + tail) * mu = v + tail*mu, so v = -tail*mu.
            let mut out = NormalElement::zero();
            for (m, c) in &r.tail.terms {
                out.add_term(m.mul(&mu), &-c);
            }
            check_below(&out)?;
            return Ok(out);
        }
        let mut f = FreeElement::zero();
        let mut wlead = mu.word();
        wlead.extend(r.lead.word());
        f.add_term(wlead, &QTLaurent::one());
        for (m, c) in &r.tail.terms {
            let mut w = mu.word();
            w.extend(m.word());
            f.add_term(w, c);
        }
        let p = match mode {
            AlgebraMode::QT => self.table.normal_order(&f),
            _ => self.skein_table.normal_order(&f),
        };
        let lc = p.coeff(v);
        let ((a, b), c) = lc.as_monomial().ok_or_else(|| {
            EngineError::NonLaurentCoefficient(format!(
                "leading coefficient of relator multiple at {v} is {lc}"
            ))
        })?;
        let inv = QTLaurent::monomial(-a, -b, c.recip());
        let mut out = NormalElement::zero();
        for (m, pc) in &p.terms {
            if m != v {
                out.add_term(*m, &-&(pc * &inv));
            }
        }
        check_below(&out)?;
        Ok(out)
    }

    /// Canonical form of a single monomial, memoized per mode.
    pub fn reduce_monomial(
        &self,
        m0: NormalMonomial,
        mode: AlgebraMode,
    ) -> Result<Arc<NormalElement>, EngineError> {
        let data = &self.modes[mode.index()];
        if let Some(hit) = data.cache.read().unwrap().get(&m0) {
            return Ok(hit.clone());
        }
        let mut steps: HashMap<NormalMonomial, (usize, NormalElement)> = HashMap::new();
        let mut stack = vec![m0];
        while let Some(&v) = stack.last() {
            if data.cache.read().unwrap().contains_key(&v) {
                stack.pop();
                continue;
            }
            let ri = match self.find_relator(&v) {
                None => {
                    // Basis monomial: canonical form is itself.
                    data.cache
                        .write()
                        .unwrap()
                        .insert(v, Arc::new(NormalElement::term(v, QTLaurent::one())));
                    stack.pop();
                    continue;
                }
                Some(ri) => ri,
            };
            if !steps.contains_key(&v) {
                let step = self.reduce_step(&v, ri, mode)?;
                steps.insert(v, (ri, step));
            }
            let step = &steps[&v].1;
            let missing: Vec<NormalMonomial> = {
                let cache = data.cache.read().unwrap();
                step.terms
                    .keys()
                    .filter(|m| !cache.contains_key(*m) && self.find_relator(m).is_some())
                    .cloned()
                    .collect()
            };
            if missing.is_empty() {
                let mut out = NormalElement::zero();
                let cache = data.cache.read().unwrap();
                for (m, c) in &step.terms {
                    match cache.get(m) {
                        Some(sub) => {
                            for (sm, sc) in &sub.terms {
                                out.add_term(*sm, &(sc * c));
                            }
                        }
                        None => out.add_term(*m, c),
                    }
                }
                drop(cache);
                steps.remove(&v);
                data.cache.write().unwrap().insert(v, Arc::new(out));
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        let out = data.cache.read().unwrap().get(&m0).unwrap().clone();
        Ok(out)
    }

    /// Canonical form supported on basis monomials. Input coefficients are
    /// specialized to the mode's ring first.
    pub fn reduce(
        &self,
        e: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let e = match mode.specialization() {
            Some(s) => e.specialize(s),
            None => e.clone(),
        };
        let mut out = NormalElement::zero();
        for (m, c) in &e.terms {
            if self.find_relator(m).is_none() {
                out.add_term(*m, c);
            } else {
                let sub = self.reduce_monomial(*m, mode)?;
                for (sm, sc) in &sub.terms {
                    out.add_term(*sm, &(sc * c));
                }
            }
        }
        Ok(out)
    }

    /// Reduce a free element: normal-order, then take canonical form.
    pub fn reduce_free(
        &self,
        e: &FreeElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        let n = self.normal_order(e, mode);
        self.reduce(&n, mode)
    }

    /// Uncached reduction with an explicit monomial-selection strategy; used
    /// as independent evidence that canonical forms do not depend on the
    /// reduction path.
    pub fn reduce_with_strategy(
        &self,
        e: &NormalElement,
        mode: AlgebraMode,
        strategy: ReduceStrategy,
    ) -> Result<NormalElement, EngineError> {
        use rand::{Rng, SeedableRng};
        let mut rng = match strategy {
            ReduceStrategy::Random(seed) => Some(rand_chacha::ChaCha8Rng::seed_from_u64(seed)),
            ReduceStrategy::GreatestFirst => None,
        };
        let mut work: BTreeMap<NormalMonomial, QTLaurent> = match mode.specialization() {
            Some(s) => e.specialize(s).terms,
            None => e.terms.clone(),
        };
        let mut out = NormalElement::zero();
        loop {
            let reducible: Vec<NormalMonomial> = work
                .keys()
                .filter(|m| self.find_relator(m).is_some())
                .cloned()
                .collect();
            if reducible.is_empty() {
                for (m, c) in work {
                    out.add_term(m, &c);
                }
                return Ok(out);
            }
            let v = match rng.as_mut() {
                None => *reducible.last().unwrap(),
                Some(r) => reducible[r.gen_range(0..reducible.len())],
            };
            let candidates: Vec<usize> = (0..self.modes[0].relators.len())
                .filter(|&i| v.divisible_by(&self.modes[0].relators[i].lead))
                .collect();
            let ri = match rng.as_mut() {
                None => candidates[0],
                Some(r) => candidates[r.gen_range(0..candidates.len())],
            };
            let c = work.remove(&v).unwrap();
            let step = self.reduce_step(&v, ri, mode)?;
            for (m, sc) in &step.terms {
                let entry = work.entry(*m).or_insert_with(QTLaurent::zero);
                *entry += &(sc * &c);
                if entry.is_zero() {
                    work.remove(m);
                }
            }
        }
    }

    /// Product in the given mode, reduced to canonical form.
    pub fn multiply(
        &self,
        a: &NormalElement,
        b: &NormalElement,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        if mode.is_commutative() {
            let mut prod = NormalElement::zero();
            for (m1, c1) in &a.terms {
                for (m2, c2) in &b.terms {
                    prod.add_term(m1.mul(m2), &(c1 * c2));
                }
            }
            self.reduce(&prod, mode)
        } else {
            let f = a.to_free().mul(&b.to_free());
            self.reduce_free(&f, mode)
        }
    }

    /// Structure constants of the product of two basis monomials.
    pub fn structure_constants(
        &self,
        b1: &NormalMonomial,
        b2: &NormalMonomial,
        mode: AlgebraMode,
    ) -> Result<NormalElement, EngineError> {
        self.multiply(
            &NormalElement::term(*b1, QTLaurent::one()),
            &NormalElement::term(*b2, QTLaurent::one()),
            mode,
        )
    }

    pub fn gen_element(&self, name: &str) -> Option<NormalElement> {
        Gen::from_name(name).map(NormalElement::gen)
    }

    /// Names of all generators, in sequence order.
    pub fn generator_names() -> [&'static str; NGEN] {
        GEN_NAMES
    }

    /// Transcription checksum: entry/relator counts, unit distinct leads,
    /// and order calibration (already enforced by construction).
    pub fn verify_table(&self) -> crate::report::Report {
        let mut report = crate::report::Report::new("transcription checksum");
        report.check("105 table entries", self.table.entries().count() == 105);
        let rels = self.relators(AlgebraMode::QT);
        report.check("61 canonical relators", rels.len() == 61);
        let mut leads: Vec<NormalMonomial> = rels.iter().map(|r| r.lead).collect();
        leads.sort();
        leads.dedup();
        report.check("leading monomials distinct", leads.len() == rels.len());
        report.check(
            "every tail strictly below its lead",
            rels.iter().all(|r| {
                r.tail
                    .terms
                    .keys()
                    .all(|m| self.order.cmp(&r.lead, m) == std::cmp::Ordering::Greater)
            }),
        );
        report.check("18 J-relators", self.defining.rhos.len() == 18);
        report.check("central relator present", !self.defining.casimir.is_zero());
        report.check(
            "order calibrated",
            self.order == MonomialOrder::calibrated(),
        );
        report
    }

    /// Ideal checks per item family.
    pub fn verify_ideal(
        &self,
        items: IdealItems,
        mode: AlgebraMode,
    ) -> Result<crate::report::Report, EngineError> {
        use rayon::prelude::*;
        let mut report = crate::report::Report::new(format!(
            "ideal vanishing: {items:?} [{}]",
            mode.name()
        ));
        match items {
            IdealItems::Etas => {
                let results: Vec<(String, bool)> = self
                    .defining
                    .etas
                    .par_iter()
                    .map(|((j, k), eta)| {
                        let r = self.reduce_free(eta, mode)?;
                        Ok((format!("eta({j},{k}) = 0"), r.is_zero()))
                    })
                    .collect::<Result<_, EngineError>>()?;
                for (name, ok) in results {
                    report.check(name, ok);
                }
            }
            IdealItems::Rhos => {
                let results: Vec<(usize, bool)> = self
                    .defining
                    .rhos
                    .par_iter()
                    .enumerate()
                    .map(|(i, rho)| Ok((i, self.reduce_free(rho, mode)?.is_zero())))
                    .collect::<Result<_, EngineError>>()?;
                for (i, ok) in results {
                    report.check(format!("rho_{} = 0", i + 1), ok);
                }
            }
            IdealItems::Casimir => {
                let r = self.reduce_free(&self.defining.casimir, mode)?;
                report.check("central relator = 0", r.is_zero());
            }
            IdealItems::GClosure => {
                let rels = self.relators(AlgebraMode::QT);
                let pairs: Vec<(usize, Gen)> = (0..rels.len())
                    .flat_map(|i| Gen::all().map(move |g| (i, g)))
                    .collect();
                let results: Vec<(usize, Gen, bool, bool)> = pairs
                    .par_iter()
                    .map(|&(i, g)| {
                        let r = &self.relators(AlgebraMode::QT)[i];
                        let mut full = r.tail.clone();
                        full.add_term(r.lead, &QTLaurent::one());
                        let ge = NormalElement::gen(g);
                        let left = self.multiply(&ge, &full, mode)?;
                        let right = self.multiply(&full, &ge, mode)?;
                        Ok((i, g, left.is_zero(), right.is_zero()))
                    })
                    .collect::<Result<_, EngineError>>()?;
                for (i, g, l, r) in results {
                    report.check(format!("{g} * g{} = 0", i + 1), l);
                    report.check(format!("g{} * {g} = 0", i + 1), r);
                }
            }
        }
        Ok(report)
    }

    /// Random normally ordered monomial of weight at most `max_weight`,
    /// restricted to the basis when `basis_only` is set.
    pub fn random_monomial(
        &self,
        rng: &mut rand_chacha::ChaCha8Rng,
        max_weight: u32,
        basis_only: bool,
    ) -> NormalMonomial {
        use rand::Rng;
        loop {
            let mut m = NormalMonomial::one();
            let mut w = 0;
            loop {
                let g = Gen(rng.gen_range(0..NGEN as u8));
                if w + g.weight() > max_weight {
                    break;
                }
                w += g.weight();
                m.exps[g.index()] += 1;
                if rng.gen_bool(0.2) {
                    break;
                }
            }
            if !basis_only || self.is_basis(&m) {
                return m;
            }
        }
    }

    /// Canonical forms are independent of the reduction strategy: reduce
    /// random free elements greatest-first and with random monomial/relator
    /// selection, and compare.
    pub fn verify_strategy_agreement(
        &self,
        count: usize,
        max_weight: u32,
        seed: u64,
    ) -> Result<crate::report::Report, EngineError> {
        use rayon::prelude::*;
        let mut report = crate::report::Report::new("reduction strategy agreement");
        let results: Vec<bool> = (0..count)
            .into_par_iter()
            .map(|i| {
                use rand::{Rng, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ (i as u64) << 16);
                let mut e = FreeElement::zero();
                for _ in 0..rng.gen_range(1..4) {
                    let m = self.random_monomial(&mut rng, max_weight, false);
                    let mut word = m.word();
                    // shuffle the word so normal ordering has work to do
                    for k in (1..word.len()).rev() {
                        word.swap(k, rng.gen_range(0..=k));
                    }
                    e.add_term(
                        word,
                        &QTLaurent::monomial(
                            rng.gen_range(-4..5),
                            rng.gen_range(-4..5),
                            num_rational::BigRational::from_integer(
                                rng.gen_range(-3i64..4).into(),
                            ),
                        ),
                    );
                }
                let n = self.normal_order(&e, AlgebraMode::QT);
                let greatest =
                    self.reduce_with_strategy(&n, AlgebraMode::QT, ReduceStrategy::GreatestFirst)?;
                let random = self.reduce_with_strategy(
                    &n,
                    AlgebraMode::QT,
                    ReduceStrategy::Random(seed.wrapping_add(i as u64)),
                )?;
                let cached = self.reduce(&n, AlgebraMode::QT)?;
                Ok(greatest == random && greatest == cached)
            })
            .collect::<Result<_, EngineError>>()?;
        report.check(
            format!("{count} random elements agree under both strategies"),
            results.iter().all(|&b| b),
        );
        Ok(report)
    }

    /// Flatness evidence: products of random basis pairs have Laurent
    /// structure constants whose specializations match the products computed
    /// with the specialized relator sets.
    pub fn verify_flatness(
        &self,
        pairs: usize,
        max_weight: u32,
        seed: u64,
    ) -> Result<crate::report::Report, EngineError> {
        use rayon::prelude::*;
        let mut report = crate::report::Report::new("specialization flatness");
        let results: Vec<bool> = (0..pairs)
            .into_par_iter()
            .map(|i| {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ (i as u64) << 20);
                let b1 = self.random_monomial(&mut rng, max_weight, true);
                let b2 = self.random_monomial(&mut rng, max_weight, true);
                let qt = self.structure_constants(&b1, &b2, AlgebraMode::QT)?;
                let ok_q1t =
                    qt.specialize(Specialization::QToOne)
                        == self.structure_constants(&b1, &b2, AlgebraMode::Q1T)?;
                let ok_qt1 =
                    qt.specialize(Specialization::BothToOne)
                        == self.structure_constants(&b1, &b2, AlgebraMode::QT1)?;
                let ok_skein =
                    qt.specialize(Specialization::TToQ)
                        == self.structure_constants(&b1, &b2, AlgebraMode::Skein)?;
                // In the commutative settings the product order is irrelevant.
                let ok_comm = self.structure_constants(&b1, &b2, AlgebraMode::Q1T)?
                    == self.structure_constants(&b2, &b1, AlgebraMode::Q1T)?;
                Ok(ok_q1t && ok_qt1 && ok_skein && ok_comm)
            })
            .collect::<Result<_, EngineError>>()?;
        report.check(
            format!("{pairs} random basis products specialize coherently"),
            results.iter().all(|&b| b),
        );
        Ok(report)
    }
}

/// Item families for [`Engine::verify_ideal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealItems {
    Etas,
    Rhos,
    Casimir,
    GClosure,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_free;

    fn engine() -> &'static Engine {
        use std::sync::OnceLock;
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| Engine::new().unwrap())
    }

    #[test]
    fn natural_ranking_fails_but_calibrated_passes() {
        let gs = parse_groebner().unwrap();
        let leads = groebner_first_monomials().unwrap();
        let data: Vec<(NormalMonomial, Vec<NormalMonomial>)> = gs
            .iter()
            .zip(&leads)
            .map(|(g, lead)| {
                (
                    *lead,
                    g.terms
                        .keys()
                        .map(|w| NormalMonomial::from_word(w))
                        .filter(|m| m != lead)
                        .collect(),
                )
            })
            .collect();
        assert!(!MonomialOrder::natural().calibrates(&data));
        assert!(MonomialOrder::calibrated().calibrates(&data));
        let found = search_ranking(&data).expect("search must find a ranking");
        assert!(found.calibrates(&data));
    }

    #[test]
    fn reduce_g4_lead() {
        let e = engine();
        let got = e
            .reduce_free(&parse_free("O34*O45").unwrap(), AlgebraMode::QT)
            .unwrap();
        let want = e
            .normal_order(
                &parse_free(
                    "q^(1/2)*O4*O345 + q^(-1/2)*O3*O5 - q^(-1/2)*t^(-1/2)*(q+t)*O1",
                )
                .unwrap(),
                AlgebraMode::QT,
            );
        assert_eq!(got, want);
    }

    #[test]
    fn reduce_leaves_basis_monomials() {
        let e = engine();
        let got = e
            .reduce_free(&parse_free("O1^3").unwrap(), AlgebraMode::QT)
            .unwrap();
        assert_eq!(got.terms.len(), 1);
        assert!(e.is_basis(got.leading_monomial().unwrap()));
    }

    #[test]
    fn reduce_g4_lead_commutative() {
        let e = engine();
        let got = e
            .reduce_free(&parse_free("O34*O45").unwrap(), AlgebraMode::QT1)
            .unwrap();
        let want = e
            .reduce_free(
                &parse_free("O4*O345 + O3*O5 - 2*O1").unwrap(),
                AlgebraMode::QT1,
            )
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn multiply_ordered_pair_is_basis_monomial() {
        let e = engine();
        let a = e.gen_element("O1").unwrap();
        let b = e.gen_element("O2").unwrap();
        let p = e.multiply(&a, &b, AlgebraMode::QT).unwrap();
        assert_eq!(p.terms.len(), 1);
        let m = p.leading_monomial().unwrap();
        assert_eq!(m.to_string(), "O1*O2");
        assert!(p.coeff(m).is_one());
    }

    #[test]
    fn all_groebner_relators_reduce_to_zero() {
        let e = engine();
        let gs = parse_groebner().unwrap();
        for (i, g) in gs.iter().enumerate() {
            let r = e.reduce_free(g, AlgebraMode::QT).unwrap();
            assert!(r.is_zero(), "g{} does not reduce to zero: {r:?}", i + 1);
        }
    }

    #[test]
    fn rhos_reduce_to_zero_qt() {
        let e = engine();
        for (i, rho) in e.defining.rhos.iter().enumerate() {
            let r = e.reduce_free(rho, AlgebraMode::QT).unwrap();
            assert!(r.is_zero(), "rho_{} does not reduce to zero: {r:?}", i + 1);
        }
    }

    #[test]
    fn casimir_reduces_to_zero_qt() {
        let e = engine();
        let r = e.reduce_free(&e.defining.casimir, AlgebraMode::QT).unwrap();
        assert!(r.is_zero(), "casimir does not reduce to zero: {r:?}");
    }
}
