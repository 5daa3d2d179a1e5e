//! Lusztig symbols: ordered pairs of rows for type C, unordered pairs for
//! types B and D, taken modulo the shift operation.
//!
//! A symbol is a pair of strictly increasing rows of nonnegative integers
//! with no two consecutive integers inside a row, whose entry sum is pinned
//! to the rank N by a quadratic offset in the row lengths. Symbols of defect
//! one (types B, C) and defect zero (type D) parametrize the pairs (orbit,
//! local system) reached by the Springer correspondence; the `d` statistic
//! computed here equals the dimension of the Springer fiber over the
//! attached orbit.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

fn check_row(name: &str, row: &[u32], min_first: u32) -> Result<(), Error> {
    if let Some(&first) = row.first() {
        if first < min_first {
            return Err(Error::InvalidRow(format!(
                "{name} starts at {first}, below the allowed minimum {min_first}"
            )));
        }
    }
    for w in row.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::InvalidRow(format!(
                "{name} is not strictly increasing at {}..{}",
                w[0], w[1]
            )));
        }
        if w[1] == w[0] + 1 {
            return Err(Error::ConsecutiveEntries(format!(
                "{name} contains {} and {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

fn row_sum(row: &[u32]) -> i64 {
    row.iter().map(|&x| x as i64).sum()
}

/// Validates the three defining conditions of a type-C symbol without
/// normalizing: row shapes, gap conditions, and the entry-sum constraint.
pub fn validate_rows_c(s: &[u32], t: &[u32], rank: u64) -> Result<(), Error> {
    if rank % 2 != 0 {
        return Err(Error::WrongDefectParity(format!(
            "type C rank {rank} must be even"
        )));
    }
    check_row("S", s, 0)?;
    check_row("T", t, 1)?;
    if s.len() <= t.len() || (s.len() - t.len()) % 2 == 0 {
        return Err(Error::WrongDefectParity(format!(
            "type C needs l(S) = l(T) + d with d odd >= 1, got lengths {} and {}",
            s.len(),
            t.len()
        )));
    }
    let total_len = (s.len() + t.len()) as i64;
    let expected = rank as i64 / 2 + total_len * (total_len - 1) / 2;
    let found = row_sum(s) + row_sum(t);
    if found != expected {
        return Err(Error::WrongSum { expected, found });
    }
    Ok(())
}

/// Validates the defining conditions of a type-B/D symbol without
/// normalizing.
pub fn validate_rows_bd(s: &[u32], t: &[u32], rank: u64) -> Result<(), Error> {
    check_row("S", s, 0)?;
    check_row("T", t, 0)?;
    let diff = s.len().abs_diff(t.len());
    if diff as u64 % 2 != rank % 2 {
        return Err(Error::WrongDefectParity(format!(
            "defect {diff} must have the parity of the rank {rank}"
        )));
    }
    let total_len = (s.len() + t.len()) as i64;
    let expected_doubled = rank as i64 + (total_len - 1).pow(2) - 1;
    let found_doubled = 2 * (row_sum(s) + row_sum(t));
    if found_doubled != expected_doubled {
        return Err(Error::WrongSum {
            expected: expected_doubled,
            found: found_doubled,
        });
    }
    Ok(())
}

/// One shift step for type C: `(S,T) -> ({0} ∪ S+2, {1} ∪ T+2)`.
pub fn shift_rows_c(s: &[u32], t: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut ns = vec![0];
    ns.extend(s.iter().map(|&x| x + 2));
    let mut nt = vec![1];
    nt.extend(t.iter().map(|&x| x + 2));
    (ns, nt)
}

/// One shift step for types B/D: `[S,T] -> [{0} ∪ S+2, {0} ∪ T+2]`.
pub fn shift_rows_bd(s: &[u32], t: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut ns = vec![0];
    ns.extend(s.iter().map(|&x| x + 2));
    let mut nt = vec![0];
    nt.extend(t.iter().map(|&x| x + 2));
    (ns, nt)
}

pub(crate) fn interleave_rows(s: &[u32], t: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(s.len() + t.len());
    let mut i = 0;
    while i < s.len() || i < t.len() {
        if i < s.len() {
            out.push(s[i]);
        }
        if i < t.len() {
            out.push(t[i]);
        }
        i += 1;
    }
    out
}

fn weakly_increasing(seq: &[u32]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}

/// `d` statistic from the sorted entry multiset: the pairwise-minimum sum of
/// the entries minus the same sum for the reference sequence, which is
/// `0,1,2,...` for type C and `0,0,2,2,4,4,...` for types B/D.
pub(crate) fn d_of_sorted_entries(entries: &[u32], type_c: bool) -> i64 {
    let l = entries.len() as i64;
    let mut total = 0i64;
    let mut reference = 0i64;
    for (i, &x) in entries.iter().enumerate() {
        let i = i as i64;
        let x0 = if type_c { i } else { 2 * (i / 2) };
        total += (l - 1 - i) * x as i64;
        reference += (l - 1 - i) * x0;
    }
    total - reference
}

fn sorted_entries(s: &[u32], t: &[u32]) -> Vec<u32> {
    let mut e: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
    e.sort_unstable();
    e
}

/// A type-C symbol: an ordered pair of rows with `T ⊆ {1,2,...}` and
/// `l(S) = l(T) + d` for an odd defect `d >= 1`, stored in shift-minimal
/// form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolC {
    s: Vec<u32>,
    t: Vec<u32>,
    rank: u64,
}

impl SymbolC {
    /// Validates the rows and reduces to the shift-minimal representative.
    pub fn from_rows(s: Vec<u32>, t: Vec<u32>, rank: u64) -> Result<Self, Error> {
        validate_rows_c(&s, &t, rank)?;
        let mut sym = SymbolC { s, t, rank };
        sym.normalize();
        Ok(sym)
    }

    fn normalize(&mut self) {
        while self.s.first() == Some(&0) && self.t.first() == Some(&1) {
            self.s.remove(0);
            self.t.remove(0);
            for x in self.s.iter_mut().chain(self.t.iter_mut()) {
                *x -= 2;
            }
        }
        debug_assert!(validate_rows_c(&self.s, &self.t, self.rank).is_ok());
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn defect(&self) -> usize {
        self.s.len() - self.t.len()
    }

    pub fn entry_count(&self) -> usize {
        self.s.len() + self.t.len()
    }

    /// The alternating reading `(s_1, t_1, s_2, t_2, ...)`.
    pub fn reading(&self) -> Vec<u32> {
        interleave_rows(&self.s, &self.t)
    }

    /// True when the reading weakly increases.
    pub fn is_distinguished(&self) -> bool {
        weakly_increasing(&self.reading())
    }

    /// Definitional `d`: pairwise minima of the entries against the
    /// reference sequence `0,1,...,2m`.
    pub fn d_value(&self) -> i64 {
        d_of_sorted_entries(&sorted_entries(&self.s, &self.t), true)
    }

    /// Closed form `Σ inf(x_i,x_j) − m(4m²−1)/3` with `2m+1` entries; always
    /// agrees with [`SymbolC::d_value`].
    pub fn d_value_closed(&self) -> i64 {
        let entries = sorted_entries(&self.s, &self.t);
        let m = (entries.len() as i64 - 1) / 2;
        let l = entries.len() as i64;
        let pair_min_sum: i64 = entries
            .iter()
            .enumerate()
            .map(|(i, &x)| (l - 1 - i as i64) * x as i64)
            .sum();
        pair_min_sum - m * (4 * m * m - 1) / 3
    }

    /// Symbol order: `a <= b` iff `a = b` or `d(a) > d(b)`. Requires equal
    /// rank.
    pub fn leq(&self, other: &SymbolC) -> bool {
        assert_eq!(self.rank, other.rank, "symbol order needs equal ranks");
        self == other || self.d_value() > other.d_value()
    }
}

impl fmt::Display for SymbolC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(&self.s), join(&self.t))
    }
}

/// A type-B/D symbol: an unordered pair of rows from `{0,1,2,...}` with
/// `|l(S) − l(T)| = d ≡ N (mod 2)`. Stored shift-minimal, with the longer
/// row first when the defect is positive and the lexicographically smaller
/// row first at defect zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolBD {
    s: Vec<u32>,
    t: Vec<u32>,
    rank: u64,
}

impl SymbolBD {
    pub fn from_rows(s: Vec<u32>, t: Vec<u32>, rank: u64) -> Result<Self, Error> {
        validate_rows_bd(&s, &t, rank)?;
        let mut sym = SymbolBD { s, t, rank };
        sym.normalize();
        Ok(sym)
    }

    fn normalize(&mut self) {
        while self.s.first() == Some(&0) && self.t.first() == Some(&0) {
            self.s.remove(0);
            self.t.remove(0);
            for x in self.s.iter_mut().chain(self.t.iter_mut()) {
                *x -= 2;
            }
        }
        let keep = match self.s.len().cmp(&self.t.len()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => self.s <= self.t,
        };
        if !keep {
            std::mem::swap(&mut self.s, &mut self.t);
        }
        debug_assert!(validate_rows_bd(&self.s, &self.t, self.rank).is_ok());
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn t(&self) -> &[u32] {
        &self.t
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn defect(&self) -> usize {
        self.s.len().abs_diff(self.t.len())
    }

    pub fn entry_count(&self) -> usize {
        self.s.len() + self.t.len()
    }

    /// True for odd rank (type B over SO_{2n+1}), false for even rank
    /// (type D over SO_{2n}).
    pub fn odd_rank(&self) -> bool {
        self.rank % 2 == 1
    }

    /// Reading in the stored orientation.
    pub fn reading(&self) -> Vec<u32> {
        interleave_rows(&self.s, &self.t)
    }

    /// Reading with the rows swapped; only meaningful at defect zero.
    pub fn reading_flipped(&self) -> Vec<u32> {
        interleave_rows(&self.t, &self.s)
    }

    /// True when some allowed reading weakly increases: the stored reading
    /// for positive defect, either orientation at defect zero.
    pub fn is_distinguished(&self) -> bool {
        if weakly_increasing(&self.reading()) {
            return true;
        }
        self.defect() == 0 && weakly_increasing(&self.reading_flipped())
    }

    /// Equal rows. Arises only at defect zero (type D); a degenerate symbol
    /// labels two nilpotent orbits distinguished by a sign.
    pub fn is_degenerate(&self) -> bool {
        self.defect() == 0 && self.s == self.t
    }

    /// Definitional `d` against the reference sequence `0,0,2,2,...`.
    pub fn d_value(&self) -> i64 {
        d_of_sorted_entries(&sorted_entries(&self.s, &self.t), false)
    }

    /// Closed form: `Σ inf − m(m−1)(4m+1)/3` on `2m+1` entries (odd rank),
    /// `Σ inf − m(m−1)(4m−5)/3` on `2m` entries (even rank).
    pub fn d_value_closed(&self) -> i64 {
        let entries = sorted_entries(&self.s, &self.t);
        let l = entries.len() as i64;
        let pair_min_sum: i64 = entries
            .iter()
            .enumerate()
            .map(|(i, &x)| (l - 1 - i as i64) * x as i64)
            .sum();
        let correction = if l % 2 == 1 {
            let m = (l - 1) / 2;
            m * (m - 1) * (4 * m + 1) / 3
        } else {
            let m = l / 2;
            m * (m - 1) * (4 * m - 5) / 3
        };
        pair_min_sum - correction
    }

    pub fn leq(&self, other: &SymbolBD) -> bool {
        assert_eq!(self.rank, other.rank, "symbol order needs equal ranks");
        self == other || self.d_value() > other.d_value()
    }
}

impl fmt::Display for SymbolBD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", join(&self.s), join(&self.t))
    }
}

fn join(row: &[u32]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A symbol of either flavor, for interfaces that cut across types.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    C(SymbolC),
    Bd(SymbolBD),
}

impl Symbol {
    pub fn rank(&self) -> u64 {
        match self {
            Symbol::C(sym) => sym.rank(),
            Symbol::Bd(sym) => sym.rank(),
        }
    }

    pub fn d_value(&self) -> i64 {
        match self {
            Symbol::C(sym) => sym.d_value(),
            Symbol::Bd(sym) => sym.d_value(),
        }
    }

    pub fn is_distinguished(&self) -> bool {
        match self {
            Symbol::C(sym) => sym.is_distinguished(),
            Symbol::Bd(sym) => sym.is_distinguished(),
        }
    }

    pub fn rows(&self) -> (&[u32], &[u32]) {
        match self {
            Symbol::C(sym) => (sym.s(), sym.t()),
            Symbol::Bd(sym) => (sym.s(), sym.t()),
        }
    }

    /// Symbol order across the unified type; both sides must have the same
    /// flavor and rank.
    pub fn leq(&self, other: &Symbol) -> bool {
        match (self, other) {
            (Symbol::C(a), Symbol::C(b)) => a.leq(b),
            (Symbol::Bd(a), Symbol::Bd(b)) => a.leq(b),
            _ => panic!("symbol order compares symbols of one flavor"),
        }
    }

    pub fn type_letter(&self) -> &'static str {
        match self {
            Symbol::C(_) => "C",
            Symbol::Bd(sym) => {
                if sym.odd_rank() {
                    "B"
                } else {
                    "D"
                }
            }
        }
    }

    /// Two-row layout used by the pretty CLI output.
    pub fn two_row_display(&self) -> String {
        let (s, t) = self.rows();
        let open = if matches!(self, Symbol::C(_)) { "(" } else { "[" };
        let close = if matches!(self, Symbol::C(_)) { ")" } else { "]" };
        format!("{open}{}{close}\n{open}{}{close}", join(s), join(t))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::C(sym) => sym.fmt(f),
            Symbol::Bd(sym) => sym.fmt(f),
        }
    }
}

/// Builds a symbol from rows given only the type letter, inferring the rank
/// from the entry-sum constraint.
pub fn symbol_from_rows(type_letter: &str, s: Vec<u32>, t: Vec<u32>) -> Result<Symbol, Error> {
    let total = row_sum(&s) + row_sum(&t);
    let l = (s.len() + t.len()) as i64;
    match type_letter {
        "C" | "c" => {
            let rank = 2 * total - l * (l - 1);
            if rank < 0 {
                return Err(Error::WrongSum {
                    expected: l * (l - 1) / 2,
                    found: total,
                });
            }
            Ok(Symbol::C(SymbolC::from_rows(s, t, rank as u64)?))
        }
        "B" | "b" | "D" | "d" => {
            let rank = 2 * total + 1 - (l - 1).pow(2);
            if rank < 0 {
                return Err(Error::WrongSum {
                    expected: ((l - 1).pow(2) - 1) / 2,
                    found: total,
                });
            }
            let want_odd = matches!(type_letter, "B" | "b");
            if (rank % 2 == 1) != want_odd {
                return Err(Error::WrongDefectParity(format!(
                    "rows have rank {rank}, which is type {}",
                    if rank % 2 == 1 { "B" } else { "D" }
                )));
            }
            Ok(Symbol::Bd(SymbolBD::from_rows(s, t, rank as u64)?))
        }
        other => Err(Error::Parse(format!("unknown symbol type '{other}'"))),
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    #[serde(rename = "type")]
    type_letter: String,
    #[serde(rename = "N")]
    rank: u64,
    #[serde(rename = "S")]
    s: Vec<u32>,
    #[serde(rename = "T")]
    t: Vec<u32>,
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (s, t) = self.rows();
        SymbolRepr {
            type_letter: self.type_letter().to_string(),
            rank: self.rank(),
            s: s.to_vec(),
            t: t.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymbolRepr::deserialize(deserializer)?;
        let sym = match repr.type_letter.as_str() {
            "C" => Symbol::C(
                SymbolC::from_rows(repr.s, repr.t, repr.rank)
                    .map_err(|e| D::Error::custom(e.to_string()))?,
            ),
            "B" | "D" => {
                let want_odd = repr.type_letter == "B";
                if (repr.rank % 2 == 1) != want_odd {
                    return Err(D::Error::custom(format!(
                        "rank {} does not match type {}",
                        repr.rank, repr.type_letter
                    )));
                }
                Symbol::Bd(
                    SymbolBD::from_rows(repr.s, repr.t, repr.rank)
                        .map_err(|e| D::Error::custom(e.to_string()))?,
                )
            }
            other => return Err(D::Error::custom(format!("unknown symbol type '{other}'"))),
        };
        Ok(sym)
    }
}

impl Serialize for SymbolC {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Symbol::C(self.clone()).serialize(serializer)
    }
}

impl Serialize for SymbolBD {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Symbol::Bd(self.clone()).serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_c(s: &[u32], t: &[u32], rank: u64) -> SymbolC {
        SymbolC::from_rows(s.to_vec(), t.to_vec(), rank).unwrap()
    }

    #[test]
    fn validation_examples() {
        let sym = sym_c(&[1], &[], 2);
        assert_eq!(sym.defect(), 1);
        assert!(matches!(
            SymbolC::from_rows(vec![0, 1], vec![], 0),
            Err(Error::ConsecutiveEntries(_))
        ));
        // S=(0,4,6,9,11,14), T=(2,4,8,11,14): valid at N = 56
        let big = sym_c(&[0, 4, 6, 9, 11, 14], &[2, 4, 8, 11, 14], 56);
        assert_eq!(big.defect(), 1);
        assert!(matches!(
            SymbolC::from_rows(vec![2], vec![], 2),
            Err(Error::WrongSum { .. })
        ));
        assert!(matches!(
            SymbolC::from_rows(vec![1], vec![1], 2),
            Err(Error::WrongDefectParity(_))
        ));
        // T must avoid 0 in type C
        assert!(matches!(
            SymbolC::from_rows(vec![0, 2], vec![0], 2),
            Err(Error::InvalidRow(_))
        ));
    }

    #[test]
    fn shift_and_normalize() {
        let base = sym_c(&[1], &[], 2);
        let (s, t) = shift_rows_c(base.s(), base.t());
        assert_eq!((s.as_slice(), t.as_slice()), (&[0, 3][..], &[1][..]));
        // the constructor reduces back to the minimal representative
        let renorm = SymbolC::from_rows(s.clone(), t.clone(), 2).unwrap();
        assert_eq!(renorm, base);
        // shifting preserves the defining conditions
        validate_rows_c(&s, &t, 2).unwrap();
        let (s2, t2) = shift_rows_c(&s, &t);
        validate_rows_c(&s2, &t2, 2).unwrap();
        assert_eq!(SymbolC::from_rows(s2, t2, 2).unwrap(), base);
    }

    #[test]
    fn reading_and_distinguished() {
        assert_eq!(sym_c(&[1], &[], 2).reading(), vec![1]);
        let big = sym_c(&[0, 4, 6, 9, 11, 14], &[2, 4, 8, 11, 14], 56);
        assert_eq!(big.reading(), vec![0, 2, 4, 4, 6, 8, 9, 11, 11, 14, 14]);
        assert!(big.is_distinguished());

        let crooked = sym_c(&[1, 6, 8, 11, 14, 17], &[1, 3, 5, 8, 12], 62);
        assert_eq!(crooked.reading(), vec![1, 1, 6, 3, 8, 5, 11, 8, 14, 12, 17]);
        assert!(!crooked.is_distinguished());
    }

    #[test]
    fn degenerate_symbols() {
        let deg = SymbolBD::from_rows(vec![1], vec![1], 4).unwrap();
        assert!(deg.is_degenerate());
        assert!(deg.is_distinguished());
        let sym = SymbolBD::from_rows(vec![1, 3, 5, 8, 12], vec![1, 5, 8, 10, 12], 50).unwrap();
        assert!(!sym.is_degenerate());
        let defect1 = SymbolBD::from_rows(vec![0, 2], vec![1], 3).unwrap();
        assert!(!defect1.is_degenerate());
    }

    #[test]
    fn d_values() {
        assert_eq!(sym_c(&[1], &[], 2).d_value(), 0);
        let s1 = sym_c(&[0, 2], &[2], 2);
        assert_eq!(s1.d_value(), 1);
        assert_eq!(s1.d_value_closed(), 1);
        let s2 = sym_c(&[0, 2, 4], &[2, 4], 4);
        assert_eq!(s2.d_value(), 4);
        assert_eq!(s2.d_value_closed(), 4);
    }

    #[test]
    fn d_is_shift_invariant() {
        let sym = sym_c(&[0, 4, 6, 9, 11, 14], &[2, 4, 8, 11, 14], 56);
        let d = sym.d_value();
        let (mut s, mut t) = (sym.s().to_vec(), sym.t().to_vec());
        for _ in 0..3 {
            let shifted = shift_rows_c(&s, &t);
            s = shifted.0;
            t = shifted.1;
            let mut entries: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
            entries.sort_unstable();
            assert_eq!(d_of_sorted_entries(&entries, true), d);
        }

        let bd = SymbolBD::from_rows(vec![1, 3, 5, 8, 12], vec![1, 5, 8, 10, 12], 50).unwrap();
        let d = bd.d_value();
        let (mut s, mut t) = (bd.s().to_vec(), bd.t().to_vec());
        for _ in 0..3 {
            let shifted = shift_rows_bd(&s, &t);
            s = shifted.0;
            t = shifted.1;
            let mut entries: Vec<u32> = s.iter().chain(t.iter()).copied().collect();
            entries.sort_unstable();
            assert_eq!(d_of_sorted_entries(&entries, false), d);
        }
    }

    #[test]
    fn symbol_order() {
        let a = sym_c(&[0, 2], &[2], 2);
        let b = sym_c(&[1], &[], 2);
        assert!(a.leq(&a));
        assert!(a.leq(&b));
        assert!(!b.leq(&a));
    }

    #[test]
    fn rank_inference() {
        let sym = symbol_from_rows("C", vec![0, 4, 6, 9, 11, 14], vec![2, 4, 8, 11, 14]).unwrap();
        assert_eq!(sym.rank(), 56);
        let sym = symbol_from_rows("B", vec![0, 2, 6, 9, 11, 13], vec![2, 4, 6, 9, 13]).unwrap();
        assert_eq!(sym.rank(), 51);
        let sym = symbol_from_rows("D", vec![1, 3, 5, 8, 12], vec![1, 5, 8, 10, 12]).unwrap();
        assert_eq!(sym.rank(), 50);
        assert!(symbol_from_rows("B", vec![1, 3, 5, 8, 12], vec![1, 5, 8, 10, 12]).is_err());
    }

    #[test]
    fn serde_schema() {
        let sym = symbol_from_rows("C", vec![0, 4, 6, 9, 11, 14], vec![2, 4, 8, 11, 14]).unwrap();
        let json = serde_json::to_string(&sym).unwrap();
        assert_eq!(
            json,
            r#"{"type":"C","N":56,"S":[0,4,6,9,11,14],"T":[2,4,8,11,14]}"#
        );
        let back: Symbol = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sym);
    }

    #[test]
    fn higher_defect_symbols_validate_and_carry_d() {
        // defect 3, outside the Springer range but still a valid symbol
        let sym = SymbolC::from_rows(vec![0, 2, 4], vec![], 6).unwrap();
        assert_eq!(sym.defect(), 3);
        assert_eq!(sym.d_value(), 1);
        assert_eq!(sym.d_value_closed(), 1);
        let (s, t) = shift_rows_c(sym.s(), sym.t());
        validate_rows_c(&s, &t, 6).unwrap();

        let sym = SymbolBD::from_rows(vec![0, 2, 4], vec![1], 6).unwrap();
        assert_eq!(sym.defect(), 2);
        assert_eq!(sym.d_value(), 2);
        assert_eq!(sym.d_value_closed(), 2);
    }

    #[test]
    fn bd_orientation_is_canonical() {
        let one = SymbolBD::from_rows(vec![1, 3], vec![0, 2], 4).unwrap();
        let two = SymbolBD::from_rows(vec![0, 2], vec![1, 3], 4).unwrap();
        assert_eq!(one, two);
        assert_eq!(one.s(), &[0, 2]);
    }
}
