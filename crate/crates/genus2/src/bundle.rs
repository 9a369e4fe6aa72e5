//! JSON relator bundle: the normal-ordering table, canonical-form relators,
//! J-relators and the central relator in one structured document. The engine
//! can be rebuilt from a bundle, and the embedded transcription exports to
//! one; the file shipped in `data/relators.json` is that export.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::engine::{Engine, EngineError, EngineParts};
use crate::free::{FreeElement, NormalElement};
use crate::gens::{Gen, NormalMonomial, GEN_WEIGHTS, NGEN};
use crate::qt::QTLaurent;
use crate::table::{CommutationTable, DataError};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoeffTermJson {
    pub q: i32,
    pub t: i32,
    pub num: String,
    pub den: String,
}

pub type ElementJson = Vec<TermJson>;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub exps: [u16; NGEN],
    pub coeff: Vec<CoeffTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RhsJson {
    pub row: String,
    pub col: String,
    pub c: i8,
    pub sign: i8,
    pub element: ElementJson,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OrderJson {
    pub weights: [u32; NGEN],
    /// Tie-break scan order of the calibrated monomial order.
    pub ranking: [u8; NGEN],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Bundle {
    pub c_matrix: Vec<Vec<i8>>,
    pub rhs: Vec<RhsJson>,
    pub relators_g: Vec<ElementJson>,
    pub relators_rho: Vec<ElementJson>,
    pub casimir: ElementJson,
    pub monomial_order: OrderJson,
}

pub fn coeff_to_json(c: &QTLaurent) -> Vec<CoeffTermJson> {
    c.iter()
        .rev()
        .map(|(&(q, t), r)| CoeffTermJson {
            q,
            t,
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        })
        .collect()
}

fn coeff_from_json(terms: &[CoeffTermJson]) -> Result<QTLaurent, DataError> {
    let mut out = QTLaurent::zero();
    for t in terms {
        let num: BigInt = t
            .num
            .parse()
            .map_err(|_| DataError(format!("bad numerator {}", t.num)))?;
        let den: BigInt = t
            .den
            .parse()
            .map_err(|_| DataError(format!("bad denominator {}", t.den)))?;
        out.add_term((t.q, t.t), &BigRational::new(num, den));
    }
    Ok(out)
}

/// Terms in descending monomial order, so the first entry is the lead.
pub fn element_to_json(e: &NormalElement) -> ElementJson {
    e.terms
        .iter()
        .rev()
        .map(|(m, c)| TermJson { exps: m.exps, coeff: coeff_to_json(c) })
        .collect()
}

fn element_from_json(terms: &[TermJson]) -> Result<NormalElement, DataError> {
    let mut out = NormalElement::zero();
    for t in terms {
        out.add_term(NormalMonomial { exps: t.exps }, &coeff_from_json(&t.coeff)?);
    }
    Ok(out)
}

/// Export the engine's data as a bundle; table right-hand sides and free-form
/// relators are stored normally ordered.
pub fn export(engine: &Engine) -> Bundle {
    let normalize = |e: &FreeElement| engine.table.normal_order(e);
    let mut rhs = Vec::new();
    for (row, col, entry) in engine.table.entries() {
        rhs.push(RhsJson {
            row: row.name().to_string(),
            col: col.name().to_string(),
            c: entry.c,
            sign: entry.sign,
            element: element_to_json(&normalize(&entry.x)),
        });
    }
    let relators_g = engine
        .relators(crate::engine::AlgebraMode::QT)
        .iter()
        .map(|r| {
            let mut full = r.tail.clone();
            full.add_term(r.lead, &QTLaurent::one());
            element_to_json(&full)
        })
        .collect();
    let relators_rho = engine
        .defining
        .rhos
        .iter()
        .map(|rho| element_to_json(&normalize(rho)))
        .collect();
    let casimir = element_to_json(&normalize(&engine.defining.casimir));
    Bundle {
        c_matrix: engine.table.c.iter().map(|row| row.to_vec()).collect(),
        rhs,
        relators_g,
        relators_rho,
        casimir,
        monomial_order: OrderJson {
            weights: GEN_WEIGHTS,
            ranking: engine.order.ranking,
        },
    }
}

/// Rebuild an engine from a bundle.
pub fn load(bundle: &Bundle) -> Result<Engine, EngineError> {
    if bundle.c_matrix.len() != NGEN || bundle.c_matrix.iter().any(|r| r.len() != NGEN) {
        return Err(EngineError::Data("c_matrix must be 15 x 15".into()));
    }
    if bundle.rhs.len() != NGEN * (NGEN - 1) / 2 {
        return Err(EngineError::Data(format!(
            "expected 105 table entries, got {}",
            bundle.rhs.len()
        )));
    }
    let mut entries = Vec::new();
    for r in &bundle.rhs {
        let row = Gen::from_name(&r.row)
            .ok_or_else(|| EngineError::Data(format!("bad row {}", r.row)))?;
        let col = Gen::from_name(&r.col)
            .ok_or_else(|| EngineError::Data(format!("bad col {}", r.col)))?;
        if bundle.c_matrix[row.index()][col.index()] != r.c {
            return Err(EngineError::Data(format!(
                "c_matrix disagrees with entry ({}, {})",
                r.row, r.col
            )));
        }
        let x = element_from_json(&r.element).map_err(EngineError::from)?;
        entries.push((row, col, r.c, r.sign, x.to_free()));
    }
    let table = CommutationTable::from_entries(&entries).map_err(EngineError::from)?;
    let mut groebner = Vec::new();
    for (i, terms) in bundle.relators_g.iter().enumerate() {
        let e = element_from_json(terms).map_err(EngineError::from)?;
        let lead = terms
            .first()
            .map(|t| NormalMonomial { exps: t.exps })
            .ok_or_else(|| EngineError::Data(format!("g{} is empty", i + 1)))?;
        groebner.push((lead, e.to_free()));
    }
    let rhos = bundle
        .relators_rho
        .iter()
        .map(|terms| Ok(element_from_json(terms)?.to_free()))
        .collect::<Result<Vec<_>, DataError>>()
        .map_err(EngineError::from)?;
    let casimir = element_from_json(&bundle.casimir)
        .map_err(EngineError::from)?
        .to_free();
    Engine::from_parts(EngineParts { table, groebner, rhos, casimir })
}

/// Render an element in the stable JSON output schema of the CLI.
pub fn element_output(mode_name: &str, e: &NormalElement) -> serde_json::Value {
    serde_json::json!({
        "algebra": mode_name,
        "terms": e.terms.iter().rev().map(|(m, c)| {
            serde_json::json!({
                "monomial": m.exps.to_vec(),
                "coeff": coeff_to_json(c),
            })
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn engine() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(|| Engine::new().unwrap())
    }

    #[test]
    fn export_counts() {
        let b = export(engine());
        assert_eq!(b.rhs.len(), 105);
        assert_eq!(b.relators_g.len(), 61);
        assert_eq!(b.relators_rho.len(), 18);
        assert!(!b.casimir.is_empty());
        for g in &b.relators_g {
            assert_eq!(g[0].coeff.len(), 1);
            assert_eq!((g[0].coeff[0].num.as_str(), g[0].coeff[0].den.as_str()), ("1", "1"));
        }
    }

    #[test]
    fn export_load_roundtrip() {
        let b = export(engine());
        let text = serde_json::to_string(&b).unwrap();
        let back: Bundle = serde_json::from_str(&text).unwrap();
        assert_eq!(b, back);
        let rebuilt = load(&back).unwrap();
        // A couple of behavioral probes on the rebuilt engine.
        let e = crate::parse::parse_free("O34*O45").unwrap();
        let got = rebuilt.reduce_free(&e, crate::engine::AlgebraMode::QT).unwrap();
        let want = engine().reduce_free(&e, crate::engine::AlgebraMode::QT).unwrap();
        assert_eq!(got, want);
        let r = rebuilt
            .reduce_free(&rebuilt.defining.rhos[7], crate::engine::AlgebraMode::QT)
            .unwrap();
        assert!(r.is_zero());
    }
}
