//! The full ordinary Springer correspondence at small rank: every
//! character label with its sign-twisted symbol, the d statistic, the
//! orbit, and the local-system flag.
//!
//! Run with `cargo run --example correspondence_table`.

use springer::bipartition::{bipartitions_of, dlabels_of};
use springer::correspondence::{
    lusztig_symbol_b, lusztig_symbol_c, lusztig_symbol_dlabel, springer_pair_bd, springer_pair_c,
    SpringerPair,
};

fn print_row(label: &str, pair: &SpringerPair) {
    println!(
        "  {:<12} {:<22} d = {:<3} orbit = {:<14} local system {}",
        label,
        pair.symbol.to_string(),
        pair.symbol.d_value(),
        pair.orbit.to_string(),
        if pair.local_system_trivial { "trivial" } else { "nontrivial" }
    );
}

fn main() {
    let n = 2;

    println!("type C_{n} (Sp_{}):", 2 * n);
    for label in bipartitions_of(n) {
        // the sign twist sends the trivial character to the zero orbit
        let pair = springer_pair_c(&lusztig_symbol_c(&label.star())).unwrap();
        print_row(&label.to_text(), &pair);
    }

    println!("\ntype B_{n} (SO_{}):", 2 * n + 1);
    for label in bipartitions_of(n) {
        let pair = springer_pair_bd(&lusztig_symbol_b(&label.star()), None).unwrap();
        print_row(&label.to_text(), &pair);
    }

    println!("\ntype D_{n} (SO_{}):", 2 * n);
    for label in dlabels_of(n) {
        let twisted = label.star();
        let pair =
            springer_pair_bd(&lusztig_symbol_dlabel(&twisted), twisted.sign()).unwrap();
        print_row(&label.to_text(), &pair);
    }
}
