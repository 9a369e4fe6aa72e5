//! Exact finite-field validation: sample surface-group representations,
//! evaluate the fifteen trace coordinates and check the specialized relators
//! and trace identities on every sample.
//!
//! ```sh
//! cargo run --release --example finite_field_sampling
//! ```

use genus2::charvar::{
    check_rep, psi_eval, sample_rep, Fp, SpecializedRelators, SurfaceRep, TraceData,
};
use genus2::engine::Engine;

fn main() {
    let p = 1000003;
    let engine = Engine::new().expect("engine");
    let rels = SpecializedRelators::new(&engine).expect("relators");
    let data = TraceData::new().expect("trace data");

    // The trivial representation is the fixed smoke case.
    let trivial = SurfaceRep::trivial(p);
    assert_eq!(psi_eval(&trivial), [2u64; 15]);
    check_rep(&trivial, &rels, &data).expect("trivial representation");
    println!("trivial representation: all relators vanish on the all-2 vector");

    for seed in 0..10 {
        let rep = sample_rep(p, seed, 1000).expect("sampling");
        let f = Fp::new(p);
        assert!(rep.satisfies_surface_relation(&f));
        check_rep(&rep, &rels, &data).expect("checks");
        let traces = psi_eval(&rep);
        println!(
            "seed {seed}: relation exact, 61 relators + trace identities pass; tr(X1) = {}",
            traces[1]
        );
    }
}
