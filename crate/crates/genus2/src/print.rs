//! Canonical text rendering: terms in descending monomial order, coefficients
//! with reduced fractional exponents, parenthesized when they have several
//! terms. The output parses back to the same element.

use std::fmt::Write;

use num_traits::Signed;

use crate::free::NormalElement;
use crate::qt::QTLaurent;

fn is_negative(c: &QTLaurent) -> bool {
    c.iter().next_back().map(|(_, r)| r.is_negative()).unwrap_or(false)
}

/// Render one coefficient-monomial pair into `out`; `first` controls the sign
/// separator.
fn push_term(out: &mut String, c: &QTLaurent, monomial: &str, first: bool) {
    let negative = is_negative(c);
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let abs = if negative { -c } else { c.clone() };
    let coeff_str = abs.to_string();
    if monomial.is_empty() {
        // Constant term: parenthesize multi-term coefficients for re-parsing.
        if abs.num_terms() > 1 {
            let _ = write!(out, "({coeff_str})");
        } else {
            out.push_str(&coeff_str);
        }
        return;
    }
    if abs.is_one() {
        out.push_str(monomial);
    } else if abs.num_terms() == 1 {
        let _ = write!(out, "{coeff_str}*{monomial}");
    } else {
        let _ = write!(out, "({coeff_str})*{monomial}");
    }
}

/// Canonical rendering of a normally ordered element.
pub fn render(e: &NormalElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.terms.iter().rev().enumerate() {
        let monomial = if m.is_one() { String::new() } else { m.to_string() };
        push_term(&mut out, c, &monomial, i == 0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{AlgebraMode, Engine};
    use crate::parse::parse_free;

    #[test]
    fn renders_g4_tail() {
        let e = Engine::new().unwrap();
        let r = e
            .reduce_free(&parse_free("O34*O45").unwrap(), AlgebraMode::QT)
            .unwrap();
        assert_eq!(
            render(&r),
            "q^(1/2)*O4*O345 + q^(-1/2)*O3*O5 - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*O1"
        );
    }

    #[test]
    fn renders_commutative_form() {
        let e = Engine::new().unwrap();
        let r = e
            .reduce_free(&parse_free("O34*O45").unwrap(), AlgebraMode::QT1)
            .unwrap();
        assert_eq!(render(&r), "O4*O345 + O3*O5 - 2*O1");
    }

    #[test]
    fn zero_and_unit() {
        assert_eq!(render(&NormalElement::zero()), "0");
        assert_eq!(render(&NormalElement::one()), "1");
    }

    #[test]
    fn roundtrip_random_canonical_forms() {
        use rand::{Rng, SeedableRng};
        let engine = Engine::new().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..30 {
            let mut e = crate::free::FreeElement::zero();
            for _ in 0..rng.gen_range(1..4) {
                let mut w = Vec::new();
                let mut weight = 0;
                while weight < 8 {
                    let g = crate::gens::Gen(rng.gen_range(0..15) as u8);
                    if weight + g.weight() > 8 {
                        break;
                    }
                    weight += g.weight();
                    w.push(g);
                }
                e.add_term(
                    w,
                    &QTLaurent::monomial(
                        rng.gen_range(-4..5),
                        rng.gen_range(-4..5),
                        num_rational::BigRational::from_integer(rng.gen_range(-3i64..4).into()),
                    ),
                );
            }
            let canonical = engine.reduce_free(&e, AlgebraMode::QT).unwrap();
            let text = render(&canonical);
            let back = engine
                .reduce_free(&parse_free(&text).unwrap(), AlgebraMode::QT)
                .unwrap();
            assert_eq!(back, canonical, "round trip failed for {text}");
        }
    }
}
