//! Straightening a non-distinguished symbol: the out-of-order pairs are
//! swapped until the reading weakly increases, then the distinguished
//! symbol is inverted to its orbit partition.
//!
//! Run with `cargo run --example straightening`.

use springer::bipartition::Bipartition;
use springer::correspondence::{
    lusztig_symbol_c, partition_of_distinguished_c, straighten_c,
};

fn main() {
    // a rank-31 type C label whose symbol needs two straightening passes
    let label = Bipartition::from_text("1.4.4.5.6.7|1.3").unwrap();
    println!("label: {label}");

    let symbol = lusztig_symbol_c(&label);
    println!("symbol (not distinguished):");
    println!("  S = {:?}", symbol.s());
    println!("  T = {:?}", symbol.t());

    let out = straighten_c(&symbol).unwrap();
    for (i, step) in out.steps.iter().enumerate() {
        let swaps: Vec<String> = step
            .swapped
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        println!("step {}: swap {}", i + 1, swaps.join(", "));
        println!("  S = {:?}", step.s);
        println!("  T = {:?}", step.t);
    }

    let distinguished = out.result;
    println!("distinguished reading: {:?}", distinguished.reading());

    let orbit = partition_of_distinguished_c(&distinguished).unwrap();
    println!("orbit partition: {orbit}");
}
