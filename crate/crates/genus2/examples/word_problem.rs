//! Canonical forms across the four algebras sharing one monomial basis.
//!
//! ```sh
//! cargo run --release --example word_problem
//! ```

use genus2::engine::{AlgebraMode, Engine};
use genus2::parse::parse_free;
use genus2::print::render;

fn main() {
    let engine = Engine::new().expect("engine");

    let inputs = [
        "O34*O45",
        "O2*O1",
        "O45*O34*O1",
        "O123*O234",
        "O61^2*O12",
    ];
    for src in inputs {
        println!("{src}");
        let e = parse_free(src).expect("parse");
        for mode in AlgebraMode::ALL {
            let canonical = engine.reduce_free(&e, mode).expect("reduce");
            println!("  [{:>5}] {}", mode.name(), render(&canonical));
        }
        println!();
    }

    // The same element written two ways lands on the same canonical form.
    let lhs = engine
        .reduce_free(&parse_free("O12*O23*O34").expect("parse"), AlgebraMode::QT)
        .expect("reduce");
    let rhs = engine
        .reduce_free(
            &parse_free("(O12*O23)*O34 + O1*O3 - O1*O3").expect("parse"),
            AlgebraMode::QT,
        )
        .expect("reduce");
    assert_eq!(lhs, rhs);
    println!("canonical forms agree for equal inputs: ok");
}
