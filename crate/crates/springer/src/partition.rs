//! Partitions in the weakly increasing convention, the dominance order by
//! suffix sums, conjugation, ℓ-regularity, enumeration, and a beta-number
//! 2-quotient oracle.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An integer partition, stored weakly increasing with zero parts stripped.
///
/// The increasing convention matches the index arithmetic used by the symbol
/// and 2-quotient formulas throughout this crate. Operations accept
/// zero-padded inputs and canonicalize them; [`Partition::decreasing`] gives
/// the conventional decreasing view for display.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary integer entries: sorts them
    /// increasingly and strips zeros. Negative entries are rejected.
    pub fn new<I>(parts: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut v = Vec::new();
        for p in parts {
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative entry {p}")));
            }
            if p > u32::MAX as i64 {
                return Err(Error::InvalidPartition(format!("entry {p} too large")));
            }
            if p > 0 {
                v.push(p as u32);
            }
        }
        v.sort_unstable();
        Ok(Partition { parts: v })
    }

    /// Canonicalizes a slice of nonnegative parts (sorts, strips zeros).
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable();
        Partition { parts: v }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parts in weakly increasing order, without zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Decreasing view, for display only.
    pub fn decreasing(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.reverse();
        v
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-pads to `len` entries, zeros in front (increasing convention).
    ///
    /// Panics if `len` is smaller than the number of parts.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(len >= self.parts.len(), "padding length too small");
        let mut v = vec![0; len - self.parts.len()];
        v.extend_from_slice(&self.parts);
        v
    }

    /// Transpose of the Young diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.last().copied().unwrap_or(0);
        let mut cols: Vec<u32> = (1..=max)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        // cols is weakly decreasing in j; reverse for the increasing convention
        cols.reverse();
        Partition { parts: cols }
    }

    /// True when no nonzero part value occurs `ell` or more times.
    pub fn is_l_regular(&self, ell: u32) -> bool {
        debug_assert!(ell >= 2);
        let mut run = 0u32;
        let mut prev = None;
        for &p in &self.parts {
            if Some(p) == prev {
                run += 1;
            } else {
                run = 1;
                prev = Some(p);
            }
            if run >= ell {
                return false;
            }
        }
        true
    }

    /// Dominance order with automatic zero-padding to the common length.
    ///
    /// `self <= other` iff every suffix sum of `self` is at most the matching
    /// suffix sum of `other`. On partitions of the same integer this is the
    /// classical dominance order; see [`dominance_leq`] for the raw relation
    /// with an explicit padding length.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        dominance_leq(self, other, len).expect("padding length is sufficient")
    }

    /// Standard 2-quotient computed from beta-numbers on an abacus.
    ///
    /// A beta-set of even size is fixed, split into even and odd residues,
    /// and each class is renormalized to a partition. The component order is
    /// calibrated so that on nilpotent orbit partitions it agrees with the
    /// explicit formulas of [`crate::orbit::two_quotient_explicit`]: the
    /// odd-residue class comes first when `|λ|` is even, the even-residue
    /// class when `|λ|` is odd.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        self.two_quotient_with_size(self.len() + self.len() % 2)
    }

    /// Same as [`Partition::two_quotient`] with an explicit (even) beta-set
    /// size; the result does not depend on the choice.
    pub fn two_quotient_with_size(&self, size: usize) -> (Partition, Partition) {
        assert!(size >= self.len() && size % 2 == 0, "beta-set size must be even and large enough");
        let padded = self.padded(size);
        let mut even_class = Vec::new();
        let mut odd_class = Vec::new();
        for (j, &p) in padded.iter().enumerate() {
            let beta = p as u64 + j as u64;
            if beta % 2 == 0 {
                even_class.push(beta / 2);
            } else {
                odd_class.push((beta - 1) / 2);
            }
        }
        let renorm = |class: &[u64]| {
            let parts: Vec<u32> = class
                .iter()
                .enumerate()
                .map(|(i, &q)| (q - i as u64) as u32)
                .collect();
            Partition::from_parts(&parts)
        };
        let from_even = renorm(&even_class);
        let from_odd = renorm(&odd_class);
        if self.sum() % 2 == 0 {
            (from_odd, from_even)
        } else {
            (from_even, from_odd)
        }
    }

    /// Dot-separated text form, e.g. `1.2.3`; the empty partition is ``.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Parses the dot-separated text form, canonicalizing the entries.
    pub fn from_text(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split('.') {
            let p: i64 = piece
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition entry '{piece}' in '{s}'")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(raw).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Suffix sums `S_i(s) = s_i + s_{i+1} + ... + s_l` of a fixed-length
/// sequence. `S_1` is the total sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixSums {
    values: Vec<i64>,
}

impl SuffixSums {
    pub fn of(seq: &[i64]) -> Self {
        let mut values = vec![0; seq.len()];
        let mut acc = 0;
        for (i, &x) in seq.iter().enumerate().rev() {
            acc += x;
            values[i] = acc;
        }
        SuffixSums { values }
    }

    pub fn of_u32(seq: &[u32]) -> Self {
        let widened: Vec<i64> = seq.iter().map(|&x| x as i64).collect();
        SuffixSums::of(&widened)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Componentwise comparison; the sequences must have equal length.
    pub fn leq(&self, other: &SuffixSums) -> Result<bool, Error> {
        if self.values.len() != other.values.len() {
            return Err(Error::LengthMismatch {
                left: self.values.len(),
                right: other.values.len(),
            });
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a <= b))
    }
}

/// Raw dominance relation with an explicit padding length: `a <= b` iff
/// `S_i(a) <= S_i(b)` for every `i` after zero-padding both sides to
/// `pad_to` entries. Callers must pad explicitly; a `pad_to` shorter than
/// either partition is rejected.
pub fn dominance_leq(a: &Partition, b: &Partition, pad_to: usize) -> Result<bool, Error> {
    if pad_to < a.len() || pad_to < b.len() {
        return Err(Error::LengthMismatch {
            left: a.len().max(b.len()),
            right: pad_to,
        });
    }
    let sa = SuffixSums::of_u32(&a.padded(pad_to));
    let sb = SuffixSums::of_u32(&b.padded(pad_to));
    sa.leq(&sb)
}

/// All partitions of `n`, each exactly once, ordered lexicographically on
/// the decreasing reading (so `(1,1,..,1)` comes first and `(n)` last).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn gen(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = prefix.clone();
            parts.reverse(); // prefix is decreasing; store increasing
            out.push(Partition { parts });
            return;
        }
        for k in 1..=remaining.min(max_part) {
            prefix.push(k);
            gen(remaining - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_strips() {
        let p = Partition::new([3, 1, 2]).unwrap();
        assert_eq!(p.parts(), &[1, 2, 3]);
        let q = Partition::new([0, 0, 2]).unwrap();
        assert_eq!(q.parts(), &[2]);
        assert!(Partition::new([1, -1]).is_err());
        let big = Partition::new([2, 3, 3, 4, 6, 6, 7, 7, 9, 9]).unwrap();
        assert_eq!(big.sum(), 56);
        assert_eq!(big.parts(), &[2, 3, 3, 4, 6, 6, 7, 7, 9, 9]);
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new([3]).unwrap();
        assert_eq!(p.conjugate().parts(), &[1, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // (1,2,2): transpose of the diagram by hand is (2,3)
        let q = Partition::new([1, 2, 2]).unwrap();
        assert_eq!(q.conjugate().parts(), &[2, 3]);
    }

    #[test]
    fn conjugate_matches_cell_transpose_oracle() {
        // independent oracle: transpose the explicit cell set of the diagram
        fn oracle(p: &Partition) -> Partition {
            let cells: Vec<(usize, u32)> = p
                .parts()
                .iter()
                .enumerate()
                .flat_map(|(i, &len)| (1..=len).map(move |j| (i, j)))
                .collect();
            let max_col = p.parts().last().copied().unwrap_or(0);
            let parts: Vec<u32> = (1..=max_col)
                .map(|j| cells.iter().filter(|&&(_, c)| c == j).count() as u32)
                .collect();
            Partition::from_parts(&parts)
        }
        for n in 0..=10 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate(), oracle(&p), "conjugate of {p}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a = Partition::new([1, 1, 1]).unwrap();
        let b = Partition::new([1, 2]).unwrap();
        assert!(a.dominance_leq(&b));
        assert!(!b.dominance_leq(&a));
        assert!(a.dominance_leq(&a));

        // one box moved: (..,10,14) <= (..,9,15), and (..,11,13) <= (..,10,14)
        let base = Partition::new([1, 1, 2, 4, 4, 5, 5, 8, 8, 10, 14]).unwrap();
        let up = Partition::new([1, 1, 2, 4, 4, 5, 5, 8, 8, 9, 15]).unwrap();
        let down = Partition::new([1, 1, 2, 4, 4, 5, 5, 8, 8, 11, 13]).unwrap();
        assert!(base.dominance_leq(&up));
        assert!(!up.dominance_leq(&base));
        assert!(down.dominance_leq(&base));
        assert!(!base.dominance_leq(&down));
    }

    #[test]
    fn dominance_rejects_short_padding() {
        let a = Partition::new([1, 1, 1]).unwrap();
        let b = Partition::new([3]).unwrap();
        assert!(matches!(
            dominance_leq(&a, &b, 2),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(dominance_leq(&a, &b, 3).unwrap());
    }

    #[test]
    fn l_regularity() {
        assert!(!Partition::new([1, 1, 1]).unwrap().is_l_regular(3));
        assert!(Partition::new([1, 2]).unwrap().is_l_regular(3));
        // max multiplicity 2 < 3
        assert!(Partition::new([2, 2, 3, 3, 4]).unwrap().is_l_regular(3));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let three = partitions_of(3);
        assert_eq!(three.len(), 3);
        // deterministic order: lexicographic on the decreasing reading
        assert_eq!(three[0].parts(), &[1, 1, 1]);
        assert_eq!(three[1].parts(), &[1, 2]);
        assert_eq!(three[2].parts(), &[3]);
        // p(8) = 22, frozen from the pentagonal-number recurrence below
        assert_eq!(partitions_of(8).len(), 22);
        fn count(n: usize) -> i64 {
            let mut p = vec![0i64; n + 1];
            p[0] = 1;
            for i in 1..=n {
                let mut k = 1i64;
                loop {
                    let g1 = (k * (3 * k - 1) / 2) as usize;
                    if g1 > i {
                        break;
                    }
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    p[i] += sign * p[i - g1];
                    let g2 = (k * (3 * k + 1) / 2) as usize;
                    if g2 <= i {
                        p[i] += sign * p[i - g2];
                    }
                    k += 1;
                }
            }
            p[n]
        }
        assert_eq!(count(8), 22);
        for n in 0..=12u32 {
            assert_eq!(partitions_of(n).len() as i64, count(n as usize));
        }
    }

    #[test]
    fn two_quotient_paper_scale_examples() {
        let c = Partition::new([2, 3, 3, 4, 6, 6, 7, 7, 9, 9]).unwrap();
        let (q1, q2) = c.two_quotient();
        assert_eq!(q1, Partition::new([2, 2, 3, 3, 4]).unwrap());
        assert_eq!(q2, Partition::new([1, 1, 3, 4, 5]).unwrap());

        let b = Partition::new([1, 2, 2, 3, 4, 4, 6, 6, 7, 8, 8]).unwrap();
        let (q1, q2) = b.two_quotient();
        assert_eq!(q1, Partition::new([2, 3, 3, 3]).unwrap());
        assert_eq!(q2, Partition::new([2, 2, 2, 3, 5]).unwrap());

        assert_eq!(
            Partition::empty().two_quotient(),
            (Partition::empty(), Partition::empty())
        );
    }

    #[test]
    fn two_quotient_beta_set_size_stability() {
        for n in 0..=10 {
            for p in partitions_of(n) {
                let base = p.two_quotient();
                let size = p.len() + p.len() % 2;
                assert_eq!(p.two_quotient_with_size(size + 2), base);
                assert_eq!(p.two_quotient_with_size(size + 4), base);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p = Partition::from_text("1.2.3").unwrap();
        assert_eq!(p.parts(), &[1, 2, 3]);
        assert_eq!(p.to_text(), "1.2.3");
        assert_eq!(Partition::from_text("").unwrap(), Partition::empty());
        assert!(Partition::from_text("1.x").is_err());
    }

    #[test]
    fn serde_array_form() {
        let p = Partition::new([1, 2, 2]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,2]");
        let back: Partition = serde_json::from_str("[2,1,2]").unwrap();
        assert_eq!(back, p);
    }
}
