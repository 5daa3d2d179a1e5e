//! 2-quotients of nilpotent orbit partitions, two ways: the explicit
//! per-type case formulas, and the beta-number abacus oracle.
//!
//! Run with `cargo run --example two_quotient`.

use springer::orbit::{orbits_of, two_quotient_explicit, LieType, OrbitPartition};
use springer::partition::Partition;

fn show(orbit: &OrbitPartition) {
    let quotient = two_quotient_explicit(orbit);
    let (first, second) = orbit.partition().two_quotient();
    println!(
        "  type {}  lambda = {:<28} quotient = ({},{})  oracle {}",
        orbit.lie_type(),
        orbit.partition().to_string(),
        quotient.first,
        quotient.second,
        if quotient.first == first && quotient.second == second {
            "agrees"
        } else {
            "DISAGREES"
        }
    );
}

fn main() {
    println!("showcase partitions:");
    let cases = [
        (LieType::C, vec![2, 3, 3, 4, 6, 6, 7, 7, 9, 9]),
        (LieType::B, vec![1, 2, 2, 3, 4, 4, 6, 6, 7, 8, 8]),
        (LieType::D, vec![2, 2, 3, 4, 4, 6, 6, 7, 8, 8]),
    ];
    for (lie_type, parts) in cases {
        let lambda = Partition::new(parts).unwrap();
        let orbit = OrbitPartition::new(lie_type, lambda, None).unwrap();
        show(&orbit);
    }

    println!("\nall orbits of C_3, B_3, D_3:");
    for lie_type in [LieType::C, LieType::B, LieType::D] {
        for orbit in orbits_of(lie_type, 3) {
            show(&orbit);
        }
        println!();
    }
}
