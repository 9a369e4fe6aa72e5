//! Defining relators: the 105 normal-ordering relators, the 18 J-relators
//! built from three index-shifted families, the central Casimir relator, and
//! the 61 canonical-form relators parsed from the embedded data.

use crate::free::FreeElement;
use crate::gens::Gen;
use crate::parse::parse_free;
use crate::qt::QTLaurent;
use crate::table::{CommutationTable, DataError};
use crate::transcription::{CASIMIR, GROEBNER};

/// The full generating set of the defining ideal.
#[derive(Debug, Clone)]
pub struct DefiningRelators {
    /// Normal-ordering relators keyed by (row, col).
    pub etas: Vec<((Gen, Gen), FreeElement)>,
    /// The 18 J-relators, `rho[0]..rho[17]` standing for `rho_1..rho_18`.
    pub rhos: Vec<FreeElement>,
    /// The central relator `rho_0`.
    pub casimir: FreeElement,
}

fn coeff_bracket() -> QTLaurent {
    // q^(1/2) t^(-1/2) + q^(-1/2) t^(1/2)
    let mut c = QTLaurent::monomial(2, -2, num_rational::BigRational::from_integer(1.into()));
    c.add_term((-2, 2), &num_rational::BigRational::from_integer(1.into()));
    c
}

fn gen_elem(g: Gen) -> FreeElement {
    FreeElement::gen(g)
}

/// Family (a), 1-based cyclic index `i`:
/// `q^(-1/2) O_{i+2} O_{i+4} + q^(1/2) O_{i+3} O_{i+2,i+3,i+4}
///  - O_{i+2,i+3} O_{i+3,i+4} - (q^(1/2)t^(-1/2)+q^(-1/2)t^(1/2)) O_i`
fn rho_a(i: i32) -> FreeElement {
    let mut e = gen_elem(Gen::level1(i + 2))
        .mul(&gen_elem(Gen::level1(i + 4)))
        .scale(&QTLaurent::q_pow(-2));
    e = e.add(
        &gen_elem(Gen::level1(i + 3))
            .mul(&gen_elem(Gen::level3(i + 2)))
            .scale(&QTLaurent::q_pow(2)),
    );
    e = e.sub(&gen_elem(Gen::level2(i + 2)).mul(&gen_elem(Gen::level2(i + 3))));
    e.sub(&gen_elem(Gen::level1(i)).scale(&coeff_bracket()))
}

/// Family (b):
/// `-q^(-1) O_{i+3} O_{i+5,i} - O_{i+4} O_{i+1,i+2} + q^(-1/2) O_{i+3,i+4} O_{i+1,i+2,i+3}
///  - (q^(1/2)t^(-1/2)+q^(-1/2)t^(1/2)) (O_{i,i+1} - q^(-1/4) O_i O_{i+1})`
fn rho_b(i: i32) -> FreeElement {
    let mut e = gen_elem(Gen::level1(i + 3))
        .mul(&gen_elem(Gen::level2(i + 5)))
        .scale(&-&QTLaurent::q_pow(-4));
    e = e.sub(&gen_elem(Gen::level1(i + 4)).mul(&gen_elem(Gen::level2(i + 1))));
    e = e.add(
        &gen_elem(Gen::level2(i + 3))
            .mul(&gen_elem(Gen::level3(i + 1)))
            .scale(&QTLaurent::q_pow(-2)),
    );
    let inner = FreeElement::gen(Gen::level2(i)).sub(
        &gen_elem(Gen::level1(i))
            .mul(&gen_elem(Gen::level1(i + 1)))
            .scale(&QTLaurent::q_pow(-1)),
    );
    e.sub(&inner.scale(&coeff_bracket()))
}

/// Family (c):
/// `-q^(1/2) O_{i+1,i+2} O_{i+4,i+5} + O_{i,i+1,i+2} O_{i+1,i+2,i+3} - q^(-1/2) O_i O_{i+3}
///  - (q^(1/2)t^(-1/2)+q^(-1/2)t^(1/2)) (-(q-1+q^(-1)) O_{i+2,i+3,i+4}
///    + q^(-3/4) O_{i+1} O_{i+5,i} + q^(3/4) O_{i+5} O_{i,i+1} - O_i O_{i+1} O_{i+5})`
fn rho_c(i: i32) -> FreeElement {
    let mut e = gen_elem(Gen::level2(i + 1))
        .mul(&gen_elem(Gen::level2(i + 4)))
        .scale(&-&QTLaurent::q_pow(2));
    e = e.add(&gen_elem(Gen::level3(i)).mul(&gen_elem(Gen::level3(i + 1))));
    e = e.sub(
        &gen_elem(Gen::level1(i))
            .mul(&gen_elem(Gen::level1(i + 3)))
            .scale(&QTLaurent::q_pow(-2)),
    );
    let mut qpoly = QTLaurent::q_pow(4);
    qpoly -= &QTLaurent::one();
    qpoly += &QTLaurent::q_pow(-4);
    let mut inner = FreeElement::gen(Gen::level3(i + 2)).scale(&-&qpoly);
    inner = inner.add(
        &gen_elem(Gen::level1(i + 1))
            .mul(&gen_elem(Gen::level2(i + 5)))
            .scale(&QTLaurent::q_pow(-3)),
    );
    inner = inner.add(
        &gen_elem(Gen::level1(i + 5))
            .mul(&gen_elem(Gen::level2(i)))
            .scale(&QTLaurent::q_pow(3)),
    );
    inner = inner.sub(
        &gen_elem(Gen::level1(i))
            .mul(&gen_elem(Gen::level1(i + 1)))
            .mul(&gen_elem(Gen::level1(i + 5))),
    );
    e.sub(&inner.scale(&coeff_bracket()))
}

impl DefiningRelators {
    pub fn build(table: &CommutationTable) -> Result<Self, DataError> {
        let etas = table.etas();
        let mut rhos = Vec::with_capacity(18);
        for i in 1..=6 {
            rhos.push(rho_a(i));
        }
        for i in 1..=6 {
            rhos.push(rho_b(i));
        }
        for i in 1..=6 {
            rhos.push(rho_c(i));
        }
        let casimir =
            parse_free(CASIMIR).map_err(|e| DataError(format!("casimir: {e}")))?;
        Ok(DefiningRelators { etas, rhos, casimir })
    }
}

/// Parse the 61 canonical-form relators, preserving the listed term order.
/// Returns, per relator, the list of `(free-element term source, element)`
/// with the first entry the declared leading monomial.
pub fn parse_groebner() -> Result<Vec<FreeElement>, DataError> {
    GROEBNER
        .iter()
        .enumerate()
        .map(|(i, src)| {
            parse_free(src).map_err(|e| DataError(format!("g{}: {e}", i + 1)))
        })
        .collect()
}

/// The first monomial listed in each relator source string, used to calibrate
/// the monomial order.
pub fn groebner_first_monomials() -> Result<Vec<crate::gens::NormalMonomial>, DataError> {
    GROEBNER
        .iter()
        .enumerate()
        .map(|(i, src)| {
            let head = src
                .split(['+', '-'])
                .next()
                .ok_or_else(|| DataError(format!("g{}: empty", i + 1)))?;
            let e = parse_free(head).map_err(|e| DataError(format!("g{}: {e}", i + 1)))?;
            let (w, c) = e
                .terms
                .iter()
                .next()
                .ok_or_else(|| DataError(format!("g{}: empty head", i + 1)))?;
            if !c.is_one() {
                return Err(DataError(format!("g{}: leading coefficient is {c}, not 1", i + 1)));
            }
            Ok(crate::gens::NormalMonomial::from_word(w))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_1_matches_printed_form() {
        let want = parse_free(
            "q^(-1/2)*O3*O5 + q^(1/2)*O4*O345 - O34*O45 - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*O1",
        )
        .unwrap();
        assert_eq!(rho_a(1), want);
    }

    #[test]
    fn rho_7_matches_printed_form() {
        let want = parse_free(
            "-q^(-1)*O4*O61 - O5*O23 + q^(-1/2)*O45*O234 \
             - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*(O12 - q^(-1/4)*O1*O2)",
        )
        .unwrap();
        assert_eq!(rho_b(1), want);
    }

    #[test]
    fn rho_13_matches_printed_form() {
        let want = parse_free(
            "-q^(1/2)*O23*O56 + O123*O234 - q^(-1/2)*O1*O4 \
             - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*(-(q - 1 + q^(-1))*O345 \
             + q^(-3/4)*O2*O61 + q^(3/4)*O6*O12 - O1*O2*O6)",
        )
        .unwrap();
        assert_eq!(rho_c(1), want);
    }

    #[test]
    fn rho_families_cycle_under_relabeling() {
        // The index-shift permutation sends each family member to the next.
        let step = |g: Gen| -> Gen {
            match g.index() {
                0..=5 => Gen::level1(g.index() as i32 + 2),
                6..=11 => Gen::level2(g.index() as i32 - 6 + 2),
                _ => Gen::level3(g.index() as i32 - 12 + 2),
            }
        };
        for i in 1..=6 {
            // index arithmetic folds i = 7 back to 1
            assert_eq!(rho_a(i).permute(&step), rho_a(i + 1));
            assert_eq!(rho_b(i).permute(&step), rho_b(i + 1));
            assert_eq!(rho_c(i).permute(&step), rho_c(i + 1));
        }
        assert_eq!(rho_a(7), rho_a(1));
    }

    #[test]
    fn groebner_parses_with_unit_leads() {
        let gs = parse_groebner().unwrap();
        assert_eq!(gs.len(), 61);
        let leads = groebner_first_monomials().unwrap();
        assert_eq!(leads.len(), 61);
        // all leads distinct
        let mut sorted = leads.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 61);
        for (i, (g, lead)) in gs.iter().zip(&leads).enumerate() {
            let c = g.terms.get(&lead.word()).unwrap_or_else(|| {
                panic!("g{}: declared lead {lead} missing from element", i + 1)
            });
            assert!(c.is_one(), "g{}: lead coefficient {c}", i + 1);
        }
    }
}
