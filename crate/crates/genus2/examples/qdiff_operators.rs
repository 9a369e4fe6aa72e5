//! The q-shift operator representation: generator images, a relator mapping
//! to the zero operator, and the commutative classical limit.
//!
//! ```sh
//! cargo run --release --example qdiff_operators
//! ```

use genus2::engine::{AlgebraMode, Engine};
use genus2::gens::Gen;
use genus2::qdiff::RepImages;

fn main() {
    let engine = Engine::new().expect("engine");
    let images = RepImages::new();
    let g = |n: &str| Gen::from_name(n).unwrap();

    // Multiplication operators are single shift-free terms.
    let o2 = images.generator(g("O2"));
    println!("image of O2: {} term(s), shift {:?}", o2.terms.len(), o2.terms.keys().next().unwrap());

    // The image of O1 is a four-term shift operator.
    let o1 = images.generator(g("O1"));
    println!("image of O1 has shifts: {:?}", o1.terms.keys().collect::<Vec<_>>());

    // The commutator chain rebuilds the displayed image of O12.
    let chain = o1.q_commutator(images.generator(g("O2")), 1);
    println!("[O1,O2]_q equals the displayed image of O12: {}", chain.eq(images.generator(g("O12"))));

    // A canonical-form relator maps to the zero operator.
    let g4 = genus2::relators::parse_groebner().expect("relators")[3].clone();
    let n = engine.normal_order(&g4, AlgebraMode::QT);
    println!("g4 maps to the zero operator: {}", images.element(&n).is_zero());

    // Classical limit: images become commuting momenta.
    let classical = images.classical_generator(g("O1")).expect("regular at q=1");
    println!(
        "classical image of O1 has momenta: {:?}, leading {:?}",
        classical.terms.keys().collect::<Vec<_>>(),
        classical.leading_momentum().unwrap()
    );
    let c2 = images.classical_generator(g("O2")).expect("regular at q=1");
    println!("classical image of O2 is multiplication: {:?}", c2.terms.keys().collect::<Vec<_>>());
}
