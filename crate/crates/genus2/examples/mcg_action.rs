//! Mapping class group action: twists, the order-6 rotation, and the braid
//! relation checked on generators.
//!
//! ```sh
//! cargo run --release --example mcg_action
//! ```

use genus2::engine::{AlgebraMode, Engine};
use genus2::free::NormalElement;
use genus2::gens::Gen;
use genus2::mcg::{parse_word, MappingClassAction};
use genus2::print::render;

fn main() {
    let engine = Engine::new().expect("engine");
    let mcg = MappingClassAction::new().expect("mcg");
    let gen = |n: &str| NormalElement::gen(Gen::from_name(n).unwrap());

    for (word, target) in [
        ("I", "O1"),
        ("d1", "O2"),
        ("d1", "O6"),
        ("d3", "O4"),
        ("d1 d2 d1", "O2"),
        ("d5 d4 d3 d2 d1", "O2"),
        ("d1^-1 d1", "O61"),
    ] {
        let letters = parse_word(word).expect("word");
        let image = mcg
            .apply(&engine, &letters, &gen(target), AlgebraMode::QT)
            .expect("apply");
        println!("({word})({target}) = {}", render(&image));
    }

    // Braid relation on all six basic generators.
    let lhs_word = parse_word("d1 d2 d1").unwrap();
    let rhs_word = parse_word("d2 d1 d2").unwrap();
    for i in 1..=6 {
        let e = NormalElement::gen(Gen::level1(i));
        let lhs = mcg.apply(&engine, &lhs_word, &e, AlgebraMode::QT).unwrap();
        let rhs = mcg.apply(&engine, &rhs_word, &e, AlgebraMode::QT).unwrap();
        assert_eq!(lhs, rhs);
    }
    println!("braid relation d1 d2 d1 = d2 d1 d2 on O1..O6: ok");

    // The rotation has order six on every generator.
    let six = parse_word("I I I I I I").unwrap();
    for g in Gen::all() {
        let e = NormalElement::gen(g);
        assert_eq!(mcg.apply(&engine, &six, &e, AlgebraMode::QT).unwrap(), e);
    }
    println!("I^6 = id on all fifteen generators: ok");
}
