//! The Springer correspondence maps for classical Weyl groups: characters
//! (labeled by bipartitions or type-D labels) to Lusztig symbols, symbols
//! back to nilpotent orbit partitions via straightening, the d-order, and
//! the modular correspondence for odd ℓ.
//!
//! Two conventions are in play. [`lusztig_symbol_c`] and friends attach to a
//! label the symbol tabulated in Carter's tables; [`springer_symbol_c`] and
//! friends compose with the sign twist first, which is the normalization
//! under which the trivial character goes to the zero orbit. The modular
//! correspondence sends an ℓ-regular label to the pair of its sign-twisted
//! symbol.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bipartition::{check_odd_prime, is_prime, Bipartition, DLabel, Sign, UnorderedBipartition};
use crate::error::Error;
use crate::orbit::{LieType, OrbitPartition};
use crate::partition::{Partition, SuffixSums};
use crate::symbol::{validate_rows_bd, validate_rows_c, Symbol, SymbolBD, SymbolC};

fn weakly_increasing(seq: &[u32]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}

/// Pads an ordered bipartition to the `(m+1, m)` shape used by the type B/C
/// symbol formulas. The padding is minimal, so the first entries are not
/// both zero (for a nonempty label).
fn padded_shape_bc(label: &Bipartition) -> (Vec<u32>, Vec<u32>) {
    let m = label
        .second
        .len()
        .max(label.first.len().saturating_sub(1));
    (label.first.padded(m + 1), label.second.padded(m))
}

/// Symbol of a type-C character label: `S_i = a_i + 2(i-1)`,
/// `T_i = b_i + 2i - 1` on the minimally padded shape.
pub fn lusztig_symbol_c(label: &Bipartition) -> SymbolC {
    let (a, b) = padded_shape_bc(label);
    let s: Vec<u32> = a.iter().enumerate().map(|(i, &x)| x + 2 * i as u32).collect();
    let t: Vec<u32> = b
        .iter()
        .enumerate()
        .map(|(i, &x)| x + 2 * i as u32 + 1)
        .collect();
    SymbolC::from_rows(s, t, 2 * label.size()).expect("image of a bipartition is a valid symbol")
}

/// Symbol of a type-B character label: `S_i = a_i + 2(i-1)`,
/// `T_i = b_i + 2(i-1)` on the `(m+1, m)` shape.
pub fn lusztig_symbol_b(label: &Bipartition) -> SymbolBD {
    let (a, b) = padded_shape_bc(label);
    let s: Vec<u32> = a.iter().enumerate().map(|(i, &x)| x + 2 * i as u32).collect();
    let t: Vec<u32> = b.iter().enumerate().map(|(i, &x)| x + 2 * i as u32).collect();
    SymbolBD::from_rows(s, t, 2 * label.size() + 1)
        .expect("image of a bipartition is a valid symbol")
}

/// Symbol of a type-D class: both components padded to a common length `m`,
/// `S_i = a_i + 2(i-1)`, `T_i = b_i + 2(i-1)`. Degenerate classes land on
/// degenerate symbols.
pub fn lusztig_symbol_d(label: &UnorderedBipartition) -> SymbolBD {
    let (a, b) = label.components();
    let m = a.len().max(b.len());
    let (a, b) = (a.padded(m), b.padded(m));
    let s: Vec<u32> = a.iter().enumerate().map(|(i, &x)| x + 2 * i as u32).collect();
    let t: Vec<u32> = b.iter().enumerate().map(|(i, &x)| x + 2 * i as u32).collect();
    SymbolBD::from_rows(s, t, 2 * label.size()).expect("image of a class is a valid symbol")
}

/// Symbol of a type-D label; the sign of a degenerate label is carried
/// outside the symbol.
pub fn lusztig_symbol_dlabel(label: &DLabel) -> SymbolBD {
    lusztig_symbol_d(&label.unordered_class())
}

/// Sign-twisted symbol of a type-C label.
pub fn springer_symbol_c(label: &Bipartition) -> SymbolC {
    lusztig_symbol_c(&label.star())
}

/// Sign-twisted symbol of a type-B label.
pub fn springer_symbol_b(label: &Bipartition) -> SymbolBD {
    lusztig_symbol_b(&label.star())
}

/// Sign-twisted symbol of a type-D class.
pub fn springer_symbol_d(label: &UnorderedBipartition) -> SymbolBD {
    lusztig_symbol_d(&label.star())
}

/// Sign-twisted symbol of a type-D label; signs are preserved by the twist.
pub fn springer_symbol_dlabel(label: &DLabel) -> SymbolBD {
    lusztig_symbol_dlabel(&label.star())
}

/// One straightening step: the out-of-order pairs that were swapped (in
/// reading order, larger entry first) and the resulting rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightenStep {
    pub swapped: Vec<(u32, u32)>,
    pub s: Vec<u32>,
    pub t: Vec<u32>,
}

/// Result of straightening: the swap steps taken and the distinguished
/// symbol they reach.
#[derive(Clone, Debug)]
pub struct Straightening<S> {
    pub steps: Vec<StraightenStep>,
    pub result: S,
}

/// Collects the out-of-order pairs `(s_i, t_i)` with `s_i > t_i` and
/// `(t_i, s_{i+1})` with `t_i > s_{i+1}`, swaps them all, and reports the
/// pairs in reading order. Rows strictly increase, so the pairs are
/// pairwise disjoint and the swaps commute.
fn y_swap_once(s: &mut [u32], t: &mut [u32]) -> Vec<(u32, u32)> {
    let mut swapped = Vec::new();
    let mut st_swaps = Vec::new();
    let mut ts_swaps = Vec::new();
    for i in 0..t.len() {
        if s[i] > t[i] {
            swapped.push((s[i], t[i]));
            st_swaps.push(i);
        }
        if i + 1 < s.len() && t[i] > s[i + 1] {
            swapped.push((t[i], s[i + 1]));
            ts_swaps.push(i);
        }
    }
    for &i in &st_swaps {
        std::mem::swap(&mut s[i], &mut t[i]);
    }
    for &i in &ts_swaps {
        let (a, b) = (t[i], s[i + 1]);
        t[i] = b;
        s[i + 1] = a;
    }
    swapped
}

fn straighten_rows(
    mut s: Vec<u32>,
    mut t: Vec<u32>,
    validate: impl Fn(&[u32], &[u32]) -> Result<(), Error>,
) -> (Vec<StraightenStep>, Vec<u32>, Vec<u32>) {
    let mut steps = Vec::new();
    loop {
        let before = SuffixSums::of_u32(&crate::symbol::interleave_rows(&s, &t));
        let swapped = y_swap_once(&mut s, &mut t);
        if swapped.is_empty() {
            break;
        }
        debug_assert!(validate(&s, &t).is_ok(), "swap left the symbol invalid");
        let after = SuffixSums::of_u32(&crate::symbol::interleave_rows(&s, &t));
        debug_assert!(
            before.leq(&after).unwrap() && before != after,
            "each swap step must strictly increase the reading"
        );
        steps.push(StraightenStep {
            swapped,
            s: s.clone(),
            t: t.clone(),
        });
        assert!(steps.len() <= 10_000, "straightening failed to terminate");
    }
    (steps, s, t)
}

/// Straightens a defect-one type-C symbol to its distinguished reordering.
pub fn straighten_c(sym: &SymbolC) -> Result<Straightening<SymbolC>, Error> {
    if sym.defect() != 1 {
        return Err(Error::WrongDefect {
            expected: 1,
            found: sym.defect(),
        });
    }
    let rank = sym.rank();
    let (steps, s, t) = straighten_rows(sym.s().to_vec(), sym.t().to_vec(), |s, t| {
        validate_rows_c(s, t, rank)
    });
    let result = SymbolC::from_rows(s, t, rank)?;
    debug_assert!(result.is_distinguished());
    Ok(Straightening { steps, result })
}

/// Straightens a defect-one (odd rank) or defect-zero (even rank) type-B/D
/// symbol, working in the stored orientation.
pub fn straighten_bd(sym: &SymbolBD) -> Result<Straightening<SymbolBD>, Error> {
    let expected = if sym.odd_rank() { 1 } else { 0 };
    if sym.defect() != expected {
        return Err(Error::WrongDefect {
            expected,
            found: sym.defect(),
        });
    }
    let rank = sym.rank();
    let (steps, s, t) = straighten_rows(sym.s().to_vec(), sym.t().to_vec(), |s, t| {
        validate_rows_bd(s, t, rank)
    });
    let result = SymbolBD::from_rows(s, t, rank)?;
    debug_assert!(result.is_distinguished());
    Ok(Straightening { steps, result })
}

/// Recovers the orbit partition from a distinguished defect-one type-C
/// symbol: equal adjacent entries of the reading become half-integer pairs
/// `(a-1/2, a+1/2)`, then the staircase `0,1,...,2m` is subtracted and the
/// result doubled.
pub fn partition_of_distinguished_c(sym: &SymbolC) -> Result<Partition, Error> {
    if sym.defect() != 1 {
        return Err(Error::WrongDefect {
            expected: 1,
            found: sym.defect(),
        });
    }
    if !sym.is_distinguished() {
        return Err(Error::NotDistinguished);
    }
    let reading = sym.reading();
    // work with doubled values so the half-integer shifts stay integral
    let mut doubled: Vec<i64> = reading.iter().map(|&x| 2 * x as i64).collect();
    let mut k = 0;
    while k + 1 < reading.len() {
        if reading[k] == reading[k + 1] {
            doubled[k] -= 1;
            doubled[k + 1] += 1;
            k += 2;
        } else {
            k += 1;
        }
    }
    let parts: Vec<i64> = doubled
        .iter()
        .enumerate()
        .map(|(i, &v)| v - 2 * i as i64)
        .collect();
    let partition =
        Partition::new(parts).expect("a distinguished defect-1 symbol inverts to a partition");
    debug_assert_eq!(partition.sum(), sym.rank());
    Ok(partition)
}

/// Recovers the orbit partition from a distinguished type-B/D symbol. In
/// the weakly increasing reading, equal adjacent pairs starting at an odd
/// position spread to `(a-1, a+1)`, pairs starting at an even position are
/// frozen, unpaired entries move by `+1/2` at even positions and `-1/2` at
/// odd ones; then `0,0,2,2,...` is subtracted and the result doubled.
pub fn partition_of_distinguished_bd(sym: &SymbolBD) -> Result<Partition, Error> {
    let expected = if sym.odd_rank() { 1 } else { 0 };
    if sym.defect() != expected {
        return Err(Error::WrongDefect {
            expected,
            found: sym.defect(),
        });
    }
    let reading = if weakly_increasing(&sym.reading()) {
        sym.reading()
    } else if sym.defect() == 0 && weakly_increasing(&sym.reading_flipped()) {
        sym.reading_flipped()
    } else {
        return Err(Error::NotDistinguished);
    };
    let mut doubled: Vec<i64> = reading.iter().map(|&x| 2 * x as i64).collect();
    let mut paired = vec![false; reading.len()];
    let mut k = 0;
    while k + 1 < reading.len() {
        if reading[k] == reading[k + 1] {
            paired[k] = true;
            paired[k + 1] = true;
            if k % 2 == 1 {
                doubled[k] -= 2;
                doubled[k + 1] += 2;
            }
            k += 2;
        } else {
            k += 1;
        }
    }
    for (i, flag) in paired.iter().enumerate() {
        if !flag {
            if i % 2 == 0 {
                doubled[i] += 1;
            } else {
                doubled[i] -= 1;
            }
        }
    }
    let parts: Vec<i64> = doubled
        .iter()
        .enumerate()
        .map(|(i, &v)| v - 4 * (i as i64 / 2))
        .collect();
    let partition =
        Partition::new(parts).expect("a distinguished Springer-range symbol inverts to a partition");
    debug_assert_eq!(partition.sum(), sym.rank());
    Ok(partition)
}

/// A point of the Springer parameter space: a nilpotent orbit together with
/// a local system, the latter recorded by the symbol itself. The local
/// system is trivial exactly when the symbol is distinguished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerPair {
    pub orbit: OrbitPartition,
    pub local_system_trivial: bool,
    pub symbol: Symbol,
}

impl Serialize for SpringerPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpringerPair", 4)?;
        st.serialize_field("orbit", &self.orbit)?;
        st.serialize_field("local_system_trivial", &self.local_system_trivial)?;
        st.serialize_field("symbol", &self.symbol)?;
        st.serialize_field("sign", &self.orbit.sign())?;
        st.end()
    }
}

/// Orbit and local-system flag attached to a defect-one type-C symbol.
pub fn springer_pair_c(sym: &SymbolC) -> Result<SpringerPair, Error> {
    let straightened = straighten_c(sym)?;
    let partition = partition_of_distinguished_c(&straightened.result)?;
    let orbit = OrbitPartition::new(LieType::C, partition, None)?;
    Ok(SpringerPair {
        orbit,
        local_system_trivial: sym.is_distinguished(),
        symbol: Symbol::C(sym.clone()),
    })
}

/// Orbit and local-system flag attached to a type-B/D symbol in the
/// Springer range. Degenerate type-D symbols label two orbits and need the
/// caller to supply the sign; all other symbols must come without one.
pub fn springer_pair_bd(sym: &SymbolBD, sign: Option<Sign>) -> Result<SpringerPair, Error> {
    let degenerate = sym.is_degenerate();
    if degenerate && sign.is_none() {
        return Err(Error::NotAnOrbitPartition(format!(
            "degenerate symbol {sym} labels two orbits; a sign is required"
        )));
    }
    if !degenerate && sign.is_some() {
        return Err(Error::NotAnOrbitPartition(format!(
            "symbol {sym} labels a single orbit; no sign applies"
        )));
    }
    let straightened = straighten_bd(sym)?;
    let partition = partition_of_distinguished_bd(&straightened.result)?;
    let lie_type = if sym.odd_rank() { LieType::B } else { LieType::D };
    let orbit = OrbitPartition::new(lie_type, partition, sign)?;
    Ok(SpringerPair {
        orbit,
        local_system_trivial: sym.is_distinguished(),
        symbol: Symbol::Bd(sym.clone()),
    })
}

/// Straightens either flavor of symbol.
pub fn straighten_symbol(sym: &Symbol) -> Result<Straightening<Symbol>, Error> {
    match sym {
        Symbol::C(sym) => {
            let out = straighten_c(sym)?;
            Ok(Straightening {
                steps: out.steps,
                result: Symbol::C(out.result),
            })
        }
        Symbol::Bd(sym) => {
            let out = straighten_bd(sym)?;
            Ok(Straightening {
                steps: out.steps,
                result: Symbol::Bd(out.result),
            })
        }
    }
}

/// Orbit partition of any symbol in the Springer range: straighten, then
/// invert the distinguished symbol.
pub fn orbit_partition_of_symbol(sym: &Symbol) -> Result<Partition, Error> {
    match sym {
        Symbol::C(sym) => partition_of_distinguished_c(&straighten_c(sym)?.result),
        Symbol::Bd(sym) => partition_of_distinguished_bd(&straighten_bd(sym)?.result),
    }
}

/// d-order on type-C labels: `a <=_d b` iff the sign-twisted symbol of `b`
/// precedes that of `a` in the symbol order.
pub fn d_order_leq_c(a: &Bipartition, b: &Bipartition) -> bool {
    springer_symbol_c(b).leq(&springer_symbol_c(a))
}

/// d-order on type-B labels.
pub fn d_order_leq_b(a: &Bipartition, b: &Bipartition) -> bool {
    springer_symbol_b(b).leq(&springer_symbol_b(a))
}

/// d-order on type-D labels, through their symbols. The two signed labels
/// over one partition share a symbol, so this relation does not separate
/// them.
pub fn d_order_leq_d(a: &DLabel, b: &DLabel) -> bool {
    springer_symbol_dlabel(b).leq(&springer_symbol_dlabel(a))
}

fn require_regular(regular: bool, ell: u32, label: String) -> Result<(), Error> {
    if regular {
        Ok(())
    } else {
        Err(Error::NotLRegular { ell, label })
    }
}

/// Modular Springer correspondence for type C, ℓ odd: the ℓ-regular label
/// goes to the pair of its sign-twisted symbol.
pub fn modular_springer_c(label: &Bipartition, ell: u32) -> Result<SpringerPair, Error> {
    check_odd_prime(ell)?;
    require_regular(label.is_l_regular(ell)?, ell, label.to_text())?;
    springer_pair_c(&springer_symbol_c(label))
}

/// Modular Springer correspondence for type B, ℓ odd.
pub fn modular_springer_b(label: &Bipartition, ell: u32) -> Result<SpringerPair, Error> {
    check_odd_prime(ell)?;
    require_regular(label.is_l_regular(ell)?, ell, label.to_text())?;
    springer_pair_bd(&springer_symbol_b(label), None)
}

/// Modular Springer correspondence for type D, ℓ odd; the sign of a
/// degenerate label is carried through the twist.
pub fn modular_springer_d(label: &DLabel, ell: u32) -> Result<SpringerPair, Error> {
    check_odd_prime(ell)?;
    require_regular(label.is_l_regular(ell)?, ell, label.to_text())?;
    let twisted = label.star();
    springer_pair_bd(&lusztig_symbol_dlabel(&twisted), twisted.sign())
}

/// Modular Springer correspondence for GL_n: an ℓ-regular partition goes to
/// the orbit of its conjugate.
pub fn modular_springer_gl(mu: &Partition, ell: u32) -> Result<Partition, Error> {
    if !is_prime(ell) {
        return Err(Error::UnsupportedPrime(ell));
    }
    require_regular(mu.is_l_regular(ell), ell, mu.to_text())?;
    Ok(mu.conjugate())
}
