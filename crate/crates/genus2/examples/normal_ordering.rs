//! The normal-ordering rewrite and the q-commutators that rebuild the
//! higher generators from the six basic ones.
//!
//! ```sh
//! cargo run --release --example normal_ordering
//! ```

use genus2::free::{FreeElement, NormalElement};
use genus2::gens::Gen;
use genus2::print::render;
use genus2::qt::QTLaurent;
use genus2::table::CommutationTable;

fn main() {
    let table = CommutationTable::load().expect("table");
    let g = |n: &str| Gen::from_name(n).unwrap();

    // Reordering one inverted pair introduces a lower-weight correction.
    let word = vec![g("O2"), g("O1")];
    let ordered = table.normal_order(&FreeElement::term(word.clone(), QTLaurent::one()));
    println!("O2*O1  ->  {}", render(&ordered));

    // Every word has a well-defined leading power of q^(1/2).
    for word in [
        vec![g("O2"), g("O1")],
        vec![g("O345"), g("O123")],
        vec![g("O61"), g("O34"), g("O12")],
    ] {
        let (monomial, m) = table.leading_power(&word);
        let names: Vec<&str> = word.iter().map(|g| g.name()).collect();
        println!("leading power of {}: q^({m}/2) * {monomial}", names.join("*"));
    }

    // q-commutators of adjacent generators rebuild the level-two and
    // level-three generators.
    let o = |n: &str| NormalElement::gen(g(n));
    let o12 = table.q_commutator(&o("O1"), &o("O2"), 1).expect("laurent");
    assert_eq!(o12, o("O12"));
    let o123 = table.q_commutator(&o12, &o("O3"), 1).expect("laurent");
    assert_eq!(o123, o("O123"));
    println!("[[O1,O2]_q, O3]_q = O123: ok");

    // All 105 normal-ordering relators vanish under the rewrite.
    let vanish = table
        .etas()
        .into_iter()
        .all(|(_, eta)| table.normal_order(&eta).is_zero());
    println!("all 105 ordering relators rewrite to zero: {vanish}");
}
