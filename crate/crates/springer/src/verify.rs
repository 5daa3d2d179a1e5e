//! Registered verification sweeps over small ranks: order compatibility,
//! round trips, bijectivity, d-function consistency, and randomized
//! basic-set checks.
//!
//! Every sweep walks a finite instance space and evaluates one typed
//! predicate per instance. On failure the instance is serialized into the
//! report, and [`recheck`] re-evaluates exactly the same predicate on the
//! serialized form, so a reported counterexample is independently
//! reproducible from the report alone.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::basic_set::{
    check_basic_set_datum, compare_data, find_betas, BetaInjection, DecompositionMatrix,
    OrderRelation,
};
use crate::bipartition::{
    bipartitions_of, unordered_bipartitions_of, Bipartition, UnorderedBipartition,
};
use crate::correspondence::{
    lusztig_symbol_b, lusztig_symbol_c, lusztig_symbol_d, orbit_partition_of_symbol,
    straighten_symbol,
};
use crate::error::Error;
use crate::orbit::{orbits_of, two_quotient_explicit, LieType, OrbitPartition};
use crate::partition::{partitions_of, Partition, SuffixSums};
use crate::symbol::{Symbol, SymbolBD, SymbolC};

/// Outcome of one registered sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub property: String,
    pub scope: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<Value>,
    pub elapsed_ms: u128,
}

/// The registered property suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    RoundTrip,
    QuotientOracle,
    DjImpliesD,
    DjImpliesSymbolOrder,
    DjImpliesDominance,
    DistinguishedIffOrbit,
    DConsistency,
    PhiBijective,
    ClosureImpliesSymbolOrder,
    StraightenMonotone,
    GlConjugation,
    BasicSetRandom,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::RoundTrip,
        Property::QuotientOracle,
        Property::DjImpliesD,
        Property::DjImpliesSymbolOrder,
        Property::DjImpliesDominance,
        Property::DistinguishedIffOrbit,
        Property::DConsistency,
        Property::PhiBijective,
        Property::ClosureImpliesSymbolOrder,
        Property::StraightenMonotone,
        Property::GlConjugation,
        Property::BasicSetRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RoundTrip => "round-trip",
            Property::QuotientOracle => "quotient-oracle-vs-explicit",
            Property::DjImpliesD => "dj-implies-d",
            Property::DjImpliesSymbolOrder => "dj-implies-symbol-order",
            Property::DjImpliesDominance => "dj-implies-dominance",
            Property::DistinguishedIffOrbit => "distinguished-iff-orbit",
            Property::DConsistency => "d-consistency",
            Property::PhiBijective => "phi-bijective",
            Property::ClosureImpliesSymbolOrder => "closure-implies-symbol-order",
            Property::StraightenMonotone => "straighten-monotone",
            Property::GlConjugation => "gl-conjugation",
            Property::BasicSetRandom => "basic-set-random",
        }
    }

    pub fn parse(name: &str) -> Option<Property> {
        Property::ALL.iter().copied().find(|p| p.name() == name)
    }

    /// Whether the property sweeps per classical type (as opposed to GL_n or
    /// label-free instances).
    pub fn per_lie_type(self) -> bool {
        !matches!(self, Property::GlConjugation | Property::BasicSetRandom)
    }
}

/// Character labels per type: ordered bipartitions for B and C, unordered
/// classes for D (signs do not affect symbols or the orders swept here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyLabel {
    Ordered(Bipartition),
    Unordered(UnorderedBipartition),
}

impl AnyLabel {
    fn to_value(&self) -> Value {
        match self {
            AnyLabel::Ordered(b) => serde_json::to_value(b).unwrap(),
            AnyLabel::Unordered(u) => serde_json::to_value(u).unwrap(),
        }
    }

    fn from_value(lie_type: LieType, value: &Value) -> Result<AnyLabel, Error> {
        let parse = |v: &Value| -> Result<AnyLabel, Error> {
            match lie_type {
                LieType::B | LieType::C => serde_json::from_value(v.clone())
                    .map(AnyLabel::Ordered)
                    .map_err(|e| Error::Parse(e.to_string())),
                LieType::D => serde_json::from_value(v.clone())
                    .map(AnyLabel::Unordered)
                    .map_err(|e| Error::Parse(e.to_string())),
            }
        };
        parse(value)
    }

    pub fn size(&self) -> u64 {
        match self {
            AnyLabel::Ordered(b) => b.size(),
            AnyLabel::Unordered(u) => u.size(),
        }
    }

    pub fn dj_leq(&self, other: &AnyLabel) -> bool {
        match (self, other) {
            (AnyLabel::Ordered(a), AnyLabel::Ordered(b)) => a.dj_leq(b),
            (AnyLabel::Unordered(a), AnyLabel::Unordered(b)) => a.dj_leq(b),
            _ => panic!("mixed label kinds"),
        }
    }
}

pub fn labels_for(lie_type: LieType, n: u32) -> Vec<AnyLabel> {
    match lie_type {
        LieType::B | LieType::C => bipartitions_of(n).into_iter().map(AnyLabel::Ordered).collect(),
        LieType::D => unordered_bipartitions_of(n)
            .into_iter()
            .map(AnyLabel::Unordered)
            .collect(),
    }
}

fn trivial_label(lie_type: LieType, n: u32) -> AnyLabel {
    let full = Partition::new([n as i64]).unwrap();
    match lie_type {
        LieType::B | LieType::C => {
            AnyLabel::Ordered(Bipartition::new(full, Partition::empty()))
        }
        LieType::D => AnyLabel::Unordered(UnorderedBipartition::new(full, Partition::empty())),
    }
}

/// Symbol of a label under the untwisted map.
pub fn phi_symbol(lie_type: LieType, label: &AnyLabel) -> Symbol {
    match (lie_type, label) {
        (LieType::C, AnyLabel::Ordered(b)) => Symbol::C(lusztig_symbol_c(b)),
        (LieType::B, AnyLabel::Ordered(b)) => Symbol::Bd(lusztig_symbol_b(b)),
        (LieType::D, AnyLabel::Unordered(u)) => Symbol::Bd(lusztig_symbol_d(u)),
        _ => panic!("label kind does not match the type"),
    }
}

/// Symbol of a label under the sign-twisted map.
pub fn psi_symbol(lie_type: LieType, label: &AnyLabel) -> Symbol {
    let twisted = match label {
        AnyLabel::Ordered(b) => AnyLabel::Ordered(b.star()),
        AnyLabel::Unordered(u) => AnyLabel::Unordered(u.star()),
    };
    phi_symbol(lie_type, &twisted)
}

/// Orbit partition reached from a label: straighten its symbol and invert.
pub fn orbit_partition_of_label(lie_type: LieType, label: &AnyLabel) -> Partition {
    orbit_partition_of_symbol(&phi_symbol(lie_type, label))
        .expect("labels map to Springer-range symbols")
}

/// Number of positive roots: n² in types B and C, n(n-1) in type D. This is
/// the Springer fiber dimension over the zero orbit.
pub fn positive_root_count(lie_type: LieType, n: u64) -> u64 {
    match lie_type {
        LieType::B | LieType::C => n * n,
        LieType::D => n * n - n,
    }
}

// ---------------------------------------------------------------------------
// typed instance predicates (shared by sweeps and recheck)
// ---------------------------------------------------------------------------

fn check_round_trip(orbit: &OrbitPartition) -> bool {
    let quotient = two_quotient_explicit(orbit);
    let symbol = match orbit.lie_type() {
        LieType::C => Symbol::C(lusztig_symbol_c(&quotient)),
        LieType::B => Symbol::Bd(lusztig_symbol_b(&quotient)),
        LieType::D => Symbol::Bd(lusztig_symbol_d(&UnorderedBipartition::new(
            quotient.first.clone(),
            quotient.second.clone(),
        ))),
    };
    symbol.is_distinguished()
        && orbit_partition_of_symbol(&symbol).as_ref() == Ok(orbit.partition())
}

fn check_quotient_oracle(orbit: &OrbitPartition) -> bool {
    let explicit = two_quotient_explicit(orbit);
    let (first, second) = orbit.partition().two_quotient();
    explicit.first == first && explicit.second == second && explicit.size() == orbit.rank()
}

fn check_dj_implies_d(lie_type: LieType, a: &AnyLabel, b: &AnyLabel) -> bool {
    if !(a.dj_leq(b) && a != b) {
        return true;
    }
    phi_symbol(lie_type, b).d_value() < phi_symbol(lie_type, a).d_value()
}

fn check_dj_implies_symbol_order(lie_type: LieType, a: &AnyLabel, b: &AnyLabel) -> bool {
    if !a.dj_leq(b) {
        return true;
    }
    psi_symbol(lie_type, b).leq(&psi_symbol(lie_type, a))
}

fn check_dj_implies_dominance(lie_type: LieType, a: &AnyLabel, b: &AnyLabel) -> bool {
    if !a.dj_leq(b) {
        return true;
    }
    orbit_partition_of_label(lie_type, a).dominance_leq(&orbit_partition_of_label(lie_type, b))
}

fn delta_image(lie_type: LieType, n: u32) -> Vec<AnyLabel> {
    orbits_of(lie_type, n as u64)
        .iter()
        .map(|orbit| {
            let q = two_quotient_explicit(orbit);
            match lie_type {
                LieType::B | LieType::C => AnyLabel::Ordered(q),
                LieType::D => AnyLabel::Unordered(UnorderedBipartition::new(
                    q.first.clone(),
                    q.second.clone(),
                )),
            }
        })
        .collect()
}

fn check_distinguished_iff_orbit(lie_type: LieType, label: &AnyLabel) -> bool {
    let distinguished = phi_symbol(lie_type, label).is_distinguished();
    let n = label.size() as u32;
    let in_image = delta_image(lie_type, n).contains(label);
    distinguished == in_image
}

fn check_d_consistency(lie_type: LieType, label: &AnyLabel) -> bool {
    let symbol = phi_symbol(lie_type, label);
    let (def, closed, shifts_ok) = match &symbol {
        Symbol::C(sym) => {
            let (mut s, mut t) = (sym.s().to_vec(), sym.t().to_vec());
            let mut ok = true;
            for _ in 0..2 {
                let shifted = crate::symbol::shift_rows_c(&s, &t);
                s = shifted.0;
                t = shifted.1;
                let again = SymbolC::from_rows(s.clone(), t.clone(), sym.rank())
                    .expect("shift preserves validity");
                ok &= again == *sym;
                let mut entries: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
                entries.sort_unstable();
                ok &= d_of_entries(&entries, true) == sym.d_value();
            }
            (sym.d_value(), sym.d_value_closed(), ok)
        }
        Symbol::Bd(sym) => {
            let (mut s, mut t) = (sym.s().to_vec(), sym.t().to_vec());
            let mut ok = true;
            for _ in 0..2 {
                let shifted = crate::symbol::shift_rows_bd(&s, &t);
                s = shifted.0;
                t = shifted.1;
                let again = SymbolBD::from_rows(s.clone(), t.clone(), sym.rank())
                    .expect("shift preserves validity");
                ok &= again == *sym;
                let mut entries: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
                entries.sort_unstable();
                ok &= d_of_entries(&entries, false) == sym.d_value();
            }
            (sym.d_value(), sym.d_value_closed(), ok)
        }
    };
    if def != closed || !shifts_ok {
        return false;
    }
    // for the label of the trivial character, Phi lands on the regular
    // orbit (d = 0) and Psi on the zero orbit (d = #positive roots)
    let n = label.size() as u32;
    if n >= 1 && *label == trivial_label(lie_type, n) {
        if phi_symbol(lie_type, label).d_value() != 0 {
            return false;
        }
        let psi_d = psi_symbol(lie_type, label).d_value();
        if psi_d != positive_root_count(lie_type, n as u64) as i64 {
            return false;
        }
    }
    true
}

fn d_of_entries(entries: &[u32], type_c: bool) -> i64 {
    crate::symbol::d_of_sorted_entries(entries, type_c)
}

fn check_straighten_monotone(lie_type: LieType, label: &AnyLabel) -> bool {
    let symbol = phi_symbol(lie_type, label);
    let straightened = match straighten_symbol(&symbol) {
        Ok(s) => s,
        Err(_) => return false,
    };
    // each recorded step strictly increases the reading in dominance order
    let mut readings = Vec::new();
    let (s0, t0) = symbol.rows();
    readings.push(crate::symbol::interleave_rows(s0, t0));
    for step in &straightened.steps {
        readings.push(crate::symbol::interleave_rows(&step.s, &step.t));
    }
    for w in readings.windows(2) {
        let before = SuffixSums::of_u32(&w[0]);
        let after = SuffixSums::of_u32(&w[1]);
        if !(before.leq(&after).unwrap() && w[0] != w[1]) {
            return false;
        }
    }
    // the result is the sorted-reading reorder of the input
    let mut sorted = readings[0].clone();
    sorted.sort_unstable();
    let (rs, rt) = straightened.result.rows();
    crate::symbol::interleave_rows(rs, rt) == sorted
        && straightened.result.is_distinguished()
}

fn check_closure_implies_symbol_order(a: &OrbitPartition, b: &OrbitPartition) -> bool {
    if !(a.closure_leq(b) && a != b) {
        return true;
    }
    let sym = |o: &OrbitPartition| {
        let q = two_quotient_explicit(o);
        match o.lie_type() {
            LieType::C => Symbol::C(lusztig_symbol_c(&q)),
            LieType::B => Symbol::Bd(lusztig_symbol_b(&q)),
            LieType::D => Symbol::Bd(lusztig_symbol_d(&UnorderedBipartition::new(
                q.first.clone(),
                q.second.clone(),
            ))),
        }
    };
    sym(a).d_value() > sym(b).d_value()
}

fn check_phi_bijective(lie_type: LieType, n: u32) -> bool {
    use std::collections::HashSet;
    let labels = labels_for(lie_type, n);
    let images: HashSet<Symbol> = labels
        .iter()
        .map(|label| phi_symbol(lie_type, label))
        .collect();
    if images.len() != labels.len() {
        return false;
    }
    let expected: HashSet<Symbol> = match lie_type {
        LieType::C => enumerate_symbols_c(2 * n as u64)
            .into_iter()
            .map(Symbol::C)
            .collect(),
        LieType::B => enumerate_symbols_bd(2 * n as u64 + 1, 1)
            .into_iter()
            .map(Symbol::Bd)
            .collect(),
        LieType::D => enumerate_symbols_bd(2 * n as u64, 0)
            .into_iter()
            .map(Symbol::Bd)
            .collect(),
    };
    images == expected
}

fn check_gl_conjugation(mu: &Partition, ell: u32) -> bool {
    // cell-transpose oracle, independent of the column-count implementation
    let cells: Vec<(usize, u32)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| (i, j)))
        .collect();
    let max_col = mu.parts().last().copied().unwrap_or(0);
    let transposed: Vec<u32> = (1..=max_col)
        .map(|j| cells.iter().filter(|&&(_, c)| c == j).count() as u32)
        .collect();
    let oracle = Partition::from_parts(&transposed);
    match crate::correspondence::modular_springer_gl(mu, ell) {
        Ok(image) => image == oracle,
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------------
// independent enumeration of symbols by rank and defect
// ---------------------------------------------------------------------------

fn rows_with(len: usize, min_first: u32, sum: i64) -> Vec<Vec<u32>> {
    fn gen(len: usize, lo: u32, sum: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining entries are >= first, pairwise gaps >= 2
        let k = len as i64;
        let mut first = lo;
        loop {
            let min_rest = k * first as i64 + k * (k - 1);
            if min_rest > sum {
                break;
            }
            prefix.push(first);
            gen(len - 1, first + 2, sum - first as i64, prefix, out);
            prefix.pop();
            first += 1;
        }
    }
    let mut out = Vec::new();
    if sum >= 0 {
        gen(len, min_first, sum, &mut Vec::new(), &mut out);
    }
    out
}

/// All defect-one type-C symbols of the given rank, by brute force over row
/// shapes; shift-equivalent duplicates collapse through the constructor.
pub fn enumerate_symbols_c(rank: u64) -> Vec<SymbolC> {
    let mut out = std::collections::HashSet::new();
    let m_bound = (rank / 2 + 1) as usize;
    for m in 0..=m_bound {
        let l = (2 * m + 1) as i64;
        let total = rank as i64 / 2 + l * (l - 1) / 2;
        let s_min = (m * (m + 1)) as i64;
        let t_min = (m * m) as i64;
        for s_sum in s_min..=(total - t_min) {
            for s in rows_with(m + 1, 0, s_sum) {
                for t in rows_with(m, 1, total - s_sum) {
                    if let Ok(sym) = SymbolC::from_rows(s.clone(), t, rank) {
                        out.insert(sym);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All type-B/D symbols of the given rank and defect (0 or 1), as unordered
/// classes.
pub fn enumerate_symbols_bd(rank: u64, defect: usize) -> Vec<SymbolBD> {
    assert!(defect <= 1);
    let mut out = std::collections::HashSet::new();
    let m_bound = (rank / 2 + 1) as usize;
    for m in 0..=m_bound {
        let (ls, lt) = (m + defect, m);
        let l = (ls + lt) as i64;
        let total_doubled = rank as i64 + (l - 1).pow(2) - 1;
        if total_doubled % 2 != 0 {
            continue;
        }
        let total = total_doubled / 2;
        let s_min = (ls * ls.saturating_sub(1)) as i64;
        let t_min = (lt * lt.saturating_sub(1)) as i64;
        for s_sum in s_min..=(total - t_min) {
            for s in rows_with(ls, 0, s_sum) {
                for t in rows_with(lt, 0, total - s_sum) {
                    if let Ok(sym) = SymbolBD::from_rows(s.clone(), t, rank) {
                        if sym.defect() == defect {
                            out.insert(sym);
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// randomized basic-set instances
// ---------------------------------------------------------------------------

/// Builds one seeded random decomposition matrix with a planted valid datum
/// and checks: axiom validity, uniqueness of the found injection (it must be
/// the planted one), stability under order enlargement, validity of order
/// intersections, and the cross-comparison inequalities.
pub fn check_basic_set_seed(seed: u64) -> bool {
    check_basic_set_seed_impl(seed).unwrap_or(false)
}

fn check_basic_set_seed_impl(seed: u64) -> Result<bool, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_ord: usize = rng.gen_range(1..=6);
    let n_mod: usize = rng.gen_range(1..=n_ord.min(4));
    let ordinary: Vec<String> = (0..n_ord).map(|i| format!("E{i}")).collect();
    let modular: Vec<String> = (0..n_mod).map(|i| format!("F{i}")).collect();

    let mut targets: Vec<usize> = (0..n_ord).collect();
    targets.shuffle(&mut rng);
    targets.truncate(n_mod);
    let planted = BetaInjection::new(targets.clone())?;

    // random partial order along a random linear extension (acyclic by
    // construction)
    let mut extension: Vec<usize> = (0..n_ord).collect();
    extension.shuffle(&mut rng);
    let position = {
        let mut pos = vec![0usize; n_ord];
        for (rank, &label) in extension.iter().enumerate() {
            pos[label] = rank;
        }
        pos
    };
    let mut base_pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n_ord {
        for j in 0..n_ord {
            if position[i] < position[j] && rng.gen_bool(0.4) {
                base_pairs.push((i, j));
            }
        }
    }
    let as_names = |pairs: &[(usize, usize)], ordinary: &[String]| -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|&(i, j)| (ordinary[i].clone(), ordinary[j].clone()))
            .collect()
    };
    let named = as_names(&base_pairs, &ordinary);
    let base_order = OrderRelation::from_pairs(
        ordinary.clone(),
        named.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )?;

    // matrix consistent with the planted datum
    let mut entries = vec![vec![0u64; n_mod]; n_ord];
    for (f, &target) in targets.iter().enumerate() {
        for (e, row) in entries.iter_mut().enumerate() {
            if e == target {
                row[f] = 1;
            } else if base_order.leq(e, target) && rng.gen_bool(0.5) {
                row[f] = rng.gen_range(1..=3);
            }
        }
    }
    let matrix = DecompositionMatrix::new(ordinary.clone(), modular, entries, false)?;

    // 1. the planted datum is valid and is the unique injection found
    if !check_basic_set_datum(&matrix, &base_order, &planted)?.is_valid() {
        return Ok(false);
    }
    let found = find_betas(&matrix, &base_order)?;
    if found != vec![planted.clone()] {
        return Ok(false);
    }

    // 2. enlargement keeps the datum valid and the injection unique
    let mut enlarged_pairs = base_pairs.clone();
    for i in 0..n_ord {
        for j in 0..n_ord {
            if position[i] < position[j] && rng.gen_bool(0.4) {
                enlarged_pairs.push((i, j));
            }
        }
    }
    let named = as_names(&enlarged_pairs, &ordinary);
    let enlarged = OrderRelation::from_pairs(
        ordinary.clone(),
        named.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )?;
    if !base_order.contained_in(&enlarged)? {
        return Ok(false);
    }
    if !check_basic_set_datum(&matrix, &enlarged, &planted)?.is_valid() {
        return Ok(false);
    }
    if find_betas(&matrix, &enlarged)? != vec![planted.clone()] {
        return Ok(false);
    }

    // 3. a second order built from the forced pairs plus noise also carries
    //    the planted datum, and so does the intersection
    let mut second_pairs: Vec<(usize, usize)> = Vec::new();
    for (f, &target) in targets.iter().enumerate() {
        for e in 0..n_ord {
            if matrix.entry(e, f) != 0 && e != target {
                second_pairs.push((e, target));
            }
        }
    }
    for i in 0..n_ord {
        for j in 0..n_ord {
            if position[i] < position[j] && rng.gen_bool(0.3) {
                second_pairs.push((i, j));
            }
        }
    }
    let named = as_names(&second_pairs, &ordinary);
    let second = OrderRelation::from_pairs(
        ordinary.clone(),
        named.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )?;
    if !check_basic_set_datum(&matrix, &second, &planted)?.is_valid() {
        return Ok(false);
    }
    let meet = base_order.intersection(&second)?;
    if !check_basic_set_datum(&matrix, &meet, &planted)?.is_valid() {
        return Ok(false);
    }

    // 4. cross-comparison inequalities between the two data
    let report = compare_data(&matrix, (&base_order, &planted), (&second, &planted))?;
    Ok(report.holds())
}

// ---------------------------------------------------------------------------
// sweep driver
// ---------------------------------------------------------------------------

const GL_PRIMES: [u32; 3] = [3, 5, 7];
const BASIC_SET_INSTANCES: u64 = 1000;
const BASIC_SET_MASTER_SEED: u64 = 0x5052_494E_4745;

fn orbit_instances(lie_type: LieType, max_n: u32) -> Vec<OrbitPartition> {
    (1..=max_n as u64)
        .flat_map(|n| orbits_of(lie_type, n))
        .collect()
}

fn run_typed(p: Property, lie_type: LieType, max_n: u32) -> (u64, Option<Value>) {
    let mut cases = 0u64;
    let name = p.name();
    match p {
        Property::RoundTrip | Property::QuotientOracle => {
            for orbit in orbit_instances(lie_type, max_n) {
                cases += 1;
                let ok = match p {
                    Property::RoundTrip => check_round_trip(&orbit),
                    _ => check_quotient_oracle(&orbit),
                };
                if !ok {
                    return (
                        cases,
                        Some(json!({
                            "property": name,
                            "type": lie_type.as_str(),
                            "orbit": orbit,
                        })),
                    );
                }
            }
        }
        Property::DjImpliesD | Property::DjImpliesSymbolOrder | Property::DjImpliesDominance => {
            for n in 1..=max_n {
                let labels = labels_for(lie_type, n);
                for a in &labels {
                    for b in &labels {
                        cases += 1;
                        let ok = match p {
                            Property::DjImpliesD => check_dj_implies_d(lie_type, a, b),
                            Property::DjImpliesSymbolOrder => {
                                check_dj_implies_symbol_order(lie_type, a, b)
                            }
                            _ => check_dj_implies_dominance(lie_type, a, b),
                        };
                        if !ok {
                            return (
                                cases,
                                Some(json!({
                                    "property": name,
                                    "type": lie_type.as_str(),
                                    "a": a.to_value(),
                                    "b": b.to_value(),
                                })),
                            );
                        }
                    }
                }
            }
        }
        Property::DistinguishedIffOrbit
        | Property::DConsistency
        | Property::StraightenMonotone => {
            for n in 1..=max_n {
                for label in labels_for(lie_type, n) {
                    cases += 1;
                    let ok = match p {
                        Property::DistinguishedIffOrbit => {
                            check_distinguished_iff_orbit(lie_type, &label)
                        }
                        Property::DConsistency => check_d_consistency(lie_type, &label),
                        _ => check_straighten_monotone(lie_type, &label),
                    };
                    if !ok {
                        return (
                            cases,
                            Some(json!({
                                "property": name,
                                "type": lie_type.as_str(),
                                "label": label.to_value(),
                            })),
                        );
                    }
                }
            }
        }
        Property::PhiBijective => {
            for n in 1..=max_n {
                cases += 1;
                if !check_phi_bijective(lie_type, n) {
                    return (
                        cases,
                        Some(json!({
                            "property": name,
                            "type": lie_type.as_str(),
                            "n": n,
                        })),
                    );
                }
            }
        }
        Property::ClosureImpliesSymbolOrder => {
            for n in 1..=max_n as u64 {
                let orbits = orbits_of(lie_type, n);
                for a in &orbits {
                    for b in &orbits {
                        cases += 1;
                        if !check_closure_implies_symbol_order(a, b) {
                            return (
                                cases,
                                Some(json!({
                                    "property": name,
                                    "type": lie_type.as_str(),
                                    "a": a,
                                    "b": b,
                                })),
                            );
                        }
                    }
                }
            }
        }
        Property::GlConjugation | Property::BasicSetRandom => unreachable!("not type-parametric"),
    }
    (cases, None)
}

/// Runs a registered property. Type-parametric properties sweep the given
/// type, or all three when `lie_type` is `None`.
pub fn run_property(
    p: Property,
    lie_type: Option<LieType>,
    max_n: u32,
) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    match p {
        Property::GlConjugation => {
            let start = Instant::now();
            let mut cases = 0u64;
            let mut counterexample = None;
            'outer: for n in 0..=max_n {
                for mu in partitions_of(n) {
                    for ell in GL_PRIMES {
                        if mu.is_l_regular(ell) {
                            cases += 1;
                            if !check_gl_conjugation(&mu, ell) {
                                counterexample = Some(json!({
                                    "property": p.name(),
                                    "mu": mu,
                                    "ell": ell,
                                }));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            reports.push(VerificationReport {
                property: p.name().into(),
                scope: format!("GL, n <= {max_n}, ell in {GL_PRIMES:?}"),
                passed: counterexample.is_none(),
                cases,
                counterexample,
                elapsed_ms: start.elapsed().as_millis(),
            });
        }
        Property::BasicSetRandom => {
            let start = Instant::now();
            let mut cases = 0u64;
            let mut counterexample = None;
            for i in 0..BASIC_SET_INSTANCES {
                let seed = BASIC_SET_MASTER_SEED.wrapping_add(i);
                cases += 1;
                if !check_basic_set_seed(seed) {
                    counterexample = Some(json!({
                        "property": p.name(),
                        "seed": seed,
                    }));
                    break;
                }
            }
            reports.push(VerificationReport {
                property: p.name().into(),
                scope: format!("{BASIC_SET_INSTANCES} seeded random matrices"),
                passed: counterexample.is_none(),
                cases,
                counterexample,
                elapsed_ms: start.elapsed().as_millis(),
            });
        }
        _ => {
            let types = match lie_type {
                Some(t) => vec![t],
                None => vec![LieType::B, LieType::C, LieType::D],
            };
            for t in types {
                let start = Instant::now();
                let (cases, counterexample) = run_typed(p, t, max_n);
                reports.push(VerificationReport {
                    property: p.name().into(),
                    scope: format!("type {t}, n <= {max_n}"),
                    passed: counterexample.is_none(),
                    cases,
                    counterexample,
                    elapsed_ms: start.elapsed().as_millis(),
                });
            }
        }
    }
    reports
}

/// Re-evaluates a reported counterexample through the same predicate the
/// sweep used; `Ok(true)` means the property holds on that instance.
pub fn recheck(instance: &Value) -> Result<bool, Error> {
    let name = instance
        .get("property")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("instance is missing a 'property' field".into()))?;
    let property = Property::parse(name)
        .ok_or_else(|| Error::Parse(format!("unknown property '{name}'")))?;
    let lie_type = || -> Result<LieType, Error> {
        instance
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("instance is missing a 'type' field".into()))?
            .parse()
    };
    let field = |key: &str| -> Result<&Value, Error> {
        instance
            .get(key)
            .ok_or_else(|| Error::Parse(format!("instance is missing '{key}'")))
    };
    let orbit_field = |key: &str| -> Result<OrbitPartition, Error> {
        serde_json::from_value(field(key)?.clone()).map_err(|e| Error::Parse(e.to_string()))
    };
    match property {
        Property::RoundTrip => Ok(check_round_trip(&orbit_field("orbit")?)),
        Property::QuotientOracle => Ok(check_quotient_oracle(&orbit_field("orbit")?)),
        Property::DjImpliesD | Property::DjImpliesSymbolOrder | Property::DjImpliesDominance => {
            let t = lie_type()?;
            let a = AnyLabel::from_value(t, field("a")?)?;
            let b = AnyLabel::from_value(t, field("b")?)?;
            Ok(match property {
                Property::DjImpliesD => check_dj_implies_d(t, &a, &b),
                Property::DjImpliesSymbolOrder => check_dj_implies_symbol_order(t, &a, &b),
                _ => check_dj_implies_dominance(t, &a, &b),
            })
        }
        Property::DistinguishedIffOrbit | Property::DConsistency | Property::StraightenMonotone => {
            let t = lie_type()?;
            let label = AnyLabel::from_value(t, field("label")?)?;
            Ok(match property {
                Property::DistinguishedIffOrbit => check_distinguished_iff_orbit(t, &label),
                Property::DConsistency => check_d_consistency(t, &label),
                _ => check_straighten_monotone(t, &label),
            })
        }
        Property::PhiBijective => {
            let t = lie_type()?;
            let n = field("n")?
                .as_u64()
                .ok_or_else(|| Error::Parse("'n' must be an integer".into()))?;
            Ok(check_phi_bijective(t, n as u32))
        }
        Property::ClosureImpliesSymbolOrder => Ok(check_closure_implies_symbol_order(
            &orbit_field("a")?,
            &orbit_field("b")?,
        )),
        Property::GlConjugation => {
            let mu: Partition = serde_json::from_value(field("mu")?.clone())
                .map_err(|e| Error::Parse(e.to_string()))?;
            let ell = field("ell")?
                .as_u64()
                .ok_or_else(|| Error::Parse("'ell' must be an integer".into()))?;
            Ok(check_gl_conjugation(&mu, ell as u32))
        }
        Property::BasicSetRandom => {
            let seed = field("seed")?
                .as_u64()
                .ok_or_else(|| Error::Parse("'seed' must be an integer".into()))?;
            Ok(check_basic_set_seed(seed))
        }
    }
}
