//! The Poisson bracket extracted from the flat family: generator brackets,
//! a Jacobi instance and rotation equivariance.
//!
//! ```sh
//! cargo run --release --example poisson_bracket
//! ```

use genus2::engine::{AlgebraMode, Engine};
use genus2::free::NormalElement;
use genus2::gens::{Gen, NormalMonomial};
use genus2::mcg::{Letter, MappingClassAction};
use genus2::poisson::{bracket, bracket_monomials};
use genus2::print::render;

fn main() {
    let engine = Engine::new().expect("engine");
    let mono = |n: &str| NormalMonomial::gen(Gen::from_name(n).unwrap());
    let gen = |n: &str| NormalElement::gen(Gen::from_name(n).unwrap());

    for (a, b) in [("O2", "O1"), ("O3", "O1"), ("O23", "O12"), ("O123", "O345")] {
        let br = bracket_monomials(&engine, &mono(a), &mono(b)).expect("bracket");
        let br = engine.reduce(&br, AlgebraMode::Q1T).expect("reduce");
        println!("{{{a}, {b}}} = {}", render(&br));
    }

    // Jacobi identity on a generator triple.
    let (a, b, c) = (gen("O1"), gen("O2"), gen("O3"));
    let j = bracket(&engine, &a, &bracket(&engine, &b, &c).unwrap())
        .unwrap()
        .add(&bracket(&engine, &b, &bracket(&engine, &c, &a).unwrap()).unwrap())
        .add(&bracket(&engine, &c, &bracket(&engine, &a, &b).unwrap()).unwrap());
    println!("jacobi on (O1, O2, O3) vanishes: {}", j.is_zero());

    // Rotation equivariance: {O2, O3} = I({O1, O2}).
    let mcg = MappingClassAction::new().expect("mcg");
    let br = bracket(&engine, &gen("O1"), &gen("O2")).unwrap();
    let rotated = mcg
        .apply(&engine, &[Letter::Rot(false)], &br, AlgebraMode::Q1T)
        .unwrap();
    let direct = bracket(&engine, &gen("O2"), &gen("O3")).unwrap();
    println!("rotation equivariance on (O1, O2): {}", rotated == direct);
}
