//! Regenerate `data/relators.json`, the machine-readable relator bundle.
//!
//! ```sh
//! cargo run --release --example export_bundle [-- <output path>]
//! ```

use genus2::bundle;
use genus2::engine::Engine;

fn main() {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/relators.json").to_string());
    let engine = Engine::new().expect("engine");
    let b = bundle::export(&engine);
    let text = serde_json::to_string_pretty(&b).expect("serialize");
    std::fs::create_dir_all(std::path::Path::new(&out).parent().unwrap()).expect("mkdir");
    std::fs::write(&out, text).expect("write");
    println!(
        "wrote {out}: {} table entries, {} relators, {} J-relators",
        b.rhs.len(),
        b.relators_g.len(),
        b.relators_rho.len()
    );
}
