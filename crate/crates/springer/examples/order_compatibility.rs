//! The order-compatibility sweeps that pin the modular correspondence
//! down: along the Dipper-James order the d statistic strictly drops, the
//! sign-twisted symbols reverse in the symbol order, and the straightened
//! orbit partitions stay dominance-comparable.
//!
//! Run with `cargo run --example order_compatibility`.

use springer::orbit::LieType;
use springer::verify::{run_property, Property};

fn main() {
    let max_n = 5;
    let properties = [
        Property::DjImpliesD,
        Property::DjImpliesSymbolOrder,
        Property::DjImpliesDominance,
        Property::ClosureImpliesSymbolOrder,
        Property::DistinguishedIffOrbit,
    ];
    for property in properties {
        for lie_type in [LieType::B, LieType::C, LieType::D] {
            for report in run_property(property, Some(lie_type), max_n) {
                println!(
                    "{} {:<28} {:<18} cases={:<8} {} ms",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.property,
                    report.scope,
                    report.cases,
                    report.elapsed_ms
                );
                if let Some(counterexample) = &report.counterexample {
                    println!("     counterexample: {counterexample}");
                }
            }
        }
    }
}
