//! The four algebras as one flat family: structure constants of the generic
//! algebra are Laurent in the parameters and specialize to the structure
//! constants of the skein, classical and coordinate-ring settings.
//!
//! ```sh
//! cargo run --release --example flat_family
//! ```

use genus2::engine::{AlgebraMode, Engine};
use genus2::gens::{Gen, NormalMonomial};
use genus2::print::render;
use genus2::qt::Specialization;

fn main() {
    let engine = Engine::new().expect("engine");
    let mono = |names: &[&str]| {
        let mut m = NormalMonomial::one();
        for n in names {
            m.exps[Gen::from_name(n).unwrap().index()] += 1;
        }
        m
    };

    let b1 = mono(&["O23", "O61"]);
    let b2 = mono(&["O12"]);
    assert!(engine.is_basis(&b1) && engine.is_basis(&b2));

    let qt = engine.structure_constants(&b1, &b2, AlgebraMode::QT).unwrap();
    println!("({b1}) * ({b2}) in the generic algebra:");
    println!("  {}", render(&qt));

    for (mode, spec) in [
        (AlgebraMode::Skein, Specialization::TToQ),
        (AlgebraMode::Q1T, Specialization::QToOne),
        (AlgebraMode::QT1, Specialization::BothToOne),
    ] {
        let direct = engine.structure_constants(&b1, &b2, mode).unwrap();
        let specialized = qt.specialize(spec);
        assert_eq!(direct, specialized, "flatness fails in {}", mode.name());
        println!("[{:>5}] {}", mode.name(), render(&direct));
    }
    println!("specializations agree with the per-mode products: ok");

    // In the commutative settings the order of the factors is immaterial.
    let forward = engine.structure_constants(&b1, &b2, AlgebraMode::Q1T).unwrap();
    let backward = engine.structure_constants(&b2, &b1, AlgebraMode::Q1T).unwrap();
    assert_eq!(forward, backward);
    println!("commutativity at q = 1: ok");
}
