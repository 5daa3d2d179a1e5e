//! Basic-set data by hand: checking the two axioms on a small
//! decomposition matrix, recovering the unique compatible injection, and
//! building the closure-induced order on labels in the good case.
//!
//! Run with `cargo run --example basic_sets`.

use springer::basic_set::{
    check_basic_set_datum, find_betas, springer_order_good_case, BetaInjection,
    DecompositionMatrix, OrderRelation,
};
use springer::bipartition::bipartitions_of;
use springer::correspondence::{lusztig_symbol_c, springer_pair_c};

fn main() {
    let labels = |names: &[&str]| -> Vec<String> { names.iter().map(|s| s.to_string()).collect() };

    // a 3x2 matrix with a chain order
    let matrix = DecompositionMatrix::new(
        labels(&["E1", "E2", "E3"]),
        labels(&["F1", "F2"]),
        vec![vec![1, 0], vec![1, 1], vec![0, 1]],
        false,
    )
    .unwrap();
    let order = OrderRelation::from_pairs(
        labels(&["E1", "E2", "E3"]),
        [("E1", "E2"), ("E2", "E3")],
    )
    .unwrap();

    println!("searching for injections compatible with the chain E1 < E2 < E3:");
    let betas = find_betas(&matrix, &order).unwrap();
    for beta in &betas {
        for (f, e) in beta.describe(&matrix) {
            println!("  beta({f}) = {e}");
        }
        let report = check_basic_set_datum(&matrix, &order, beta).unwrap();
        println!("  axioms: {report}");
    }
    if betas.is_empty() {
        println!("  none exist");
    }

    // a wrong injection violates triangularity
    let wrong = BetaInjection::new(vec![0, 1]).unwrap();
    let report = check_basic_set_datum(&matrix, &order, &wrong).unwrap();
    println!("deliberately wrong injection: {report}");

    // the good-case order induced by orbit closure through the sign-twisted
    // symbols of C_2: labels over higher orbits sit lower
    println!("\ngood-case order for C_2 from orbit closure:");
    let c2: Vec<_> = bipartitions_of(2).into_iter().collect();
    let names: Vec<String> = c2.iter().map(|b| b.to_text()).collect();
    let orbits: Vec<_> = c2
        .iter()
        .map(|b| springer_pair_c(&lusztig_symbol_c(&b.star())).unwrap().orbit)
        .collect();
    let induced =
        springer_order_good_case(&names, &orbits, |a, b| a.closure_leq(b)).unwrap();
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            if i != j && induced.leq(i, j) {
                println!("  {a} < {b}");
            }
        }
    }
}
