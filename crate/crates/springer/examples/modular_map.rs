//! The modular Springer correspondence for odd ell: every ell-regular
//! label goes to the pair of its sign-twisted symbol. GL_n reduces to
//! plain conjugation.
//!
//! Run with `cargo run --example modular_map`.

use springer::bipartition::{bipartitions_of, DLabel, Sign};
use springer::correspondence::{modular_springer_c, modular_springer_d, modular_springer_gl};
use springer::partition::{partitions_of, Partition};

fn main() {
    let ell = 3;

    println!("type C_2, ell = {ell}:");
    for label in bipartitions_of(2) {
        match modular_springer_c(&label, ell) {
            Ok(pair) => println!(
                "  D^({}) -> orbit {}, local system {}",
                label.to_text(),
                pair.orbit,
                if pair.local_system_trivial { "trivial" } else { "nontrivial" }
            ),
            Err(_) => println!("  ({}) is not {ell}-regular: no simple module", label.to_text()),
        }
    }

    println!("\ndegenerate type D labels carry their sign through:");
    for sign in [Sign::Plus, Sign::Minus] {
        let label = DLabel::degenerate(Partition::new([1]).unwrap(), sign);
        let pair = modular_springer_d(&label, ell).unwrap();
        println!("  D^{label} -> orbit {}", pair.orbit);
    }

    println!("\nGL_5, ell = {ell}: the modular map is conjugation");
    for mu in partitions_of(5) {
        if mu.is_l_regular(ell) {
            println!("  D^{mu} -> orbit {}", modular_springer_gl(&mu, ell).unwrap());
        }
    }
}
