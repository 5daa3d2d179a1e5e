//! Ordered and unordered bipartitions, type-D labels with signs, the
//! sign-twist (star) maps, and the Dipper-James orders.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partition::{partitions_of, Partition};

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks that `ell` is an odd prime, as required by the type B/C/D module
/// classification.
pub fn check_odd_prime(ell: u32) -> Result<(), Error> {
    if ell == 2 || !is_prime(ell) {
        return Err(Error::UnsupportedPrime(ell));
    }
    Ok(())
}

/// Sign tag for degenerate type-D labels and orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign '{other}'"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: Error| D::Error::custom(e.to_string()))
    }
}

/// An ordered pair of partitions; labels the irreducible characters of the
/// Weyl groups of types B and C.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> u64 {
        self.first.sum() + self.second.sum()
    }

    /// Sign twist: conjugate both components and swap them. Tensoring a
    /// character with the sign character acts this way on labels; an
    /// involution.
    pub fn star(&self) -> Bipartition {
        Bipartition {
            first: self.second.conjugate(),
            second: self.first.conjugate(),
        }
    }

    /// Dipper-James order: componentwise dominance with matching component
    /// sizes.
    pub fn dj_leq(&self, other: &Bipartition) -> bool {
        self.first.sum() == other.first.sum()
            && self.second.sum() == other.second.sum()
            && self.first.dominance_leq(&other.first)
            && self.second.dominance_leq(&other.second)
    }

    /// Both components ℓ-regular. Requires an odd prime.
    pub fn is_l_regular(&self, ell: u32) -> Result<bool, Error> {
        check_odd_prime(ell)?;
        Ok(self.first.is_l_regular(ell) && self.second.is_l_regular(ell))
    }

    /// Pipe-separated text form, e.g. `1.2|3`; empty components allowed.
    pub fn to_text(&self) -> String {
        format!("{}|{}", self.first.to_text(), self.second.to_text())
    }

    pub fn from_text(s: &str) -> Result<Self, Error> {
        let mut pieces = s.splitn(2, '|');
        let first = pieces.next().unwrap_or("");
        let second = pieces
            .next()
            .ok_or_else(|| Error::Parse(format!("bipartition '{s}' is missing '|'")))?;
        Ok(Bipartition::new(
            Partition::from_text(first)?,
            Partition::from_text(second)?,
        ))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// A swap-equivalence class of bipartitions, stored with the smaller
/// component first under the lexicographic order on part lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorderedBipartition {
    a: Partition,
    b: Partition,
}

impl UnorderedBipartition {
    pub fn new(x: Partition, y: Partition) -> Self {
        if x <= y {
            UnorderedBipartition { a: x, b: y }
        } else {
            UnorderedBipartition { a: y, b: x }
        }
    }

    pub fn from_bipartition(b: &Bipartition) -> Self {
        UnorderedBipartition::new(b.first.clone(), b.second.clone())
    }

    /// The canonical representative (smaller component first).
    pub fn components(&self) -> (&Partition, &Partition) {
        (&self.a, &self.b)
    }

    pub fn size(&self) -> u64 {
        self.a.sum() + self.b.sum()
    }

    pub fn is_degenerate_class(&self) -> bool {
        self.a == self.b
    }

    pub fn star(&self) -> UnorderedBipartition {
        UnorderedBipartition::new(self.a.conjugate(), self.b.conjugate())
    }

    /// Dipper-James order on classes: fix one orientation of `self` and test
    /// it against both orientations of `other`. Flipping the fixed
    /// orientation flips which test fires, so the relation is well defined
    /// on classes.
    pub fn dj_leq(&self, other: &UnorderedBipartition) -> bool {
        let this = Bipartition::new(self.a.clone(), self.b.clone());
        let straight = Bipartition::new(other.a.clone(), other.b.clone());
        let flipped = Bipartition::new(other.b.clone(), other.a.clone());
        this.dj_leq(&straight) || this.dj_leq(&flipped)
    }

    pub fn is_l_regular(&self, ell: u32) -> Result<bool, Error> {
        check_odd_prime(ell)?;
        Ok(self.a.is_l_regular(ell) && self.b.is_l_regular(ell))
    }

    pub fn to_text(&self) -> String {
        format!("{}|{}", self.a.to_text(), self.b.to_text())
    }
}

impl fmt::Display for UnorderedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl Serialize for UnorderedBipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            pair: [&'a Partition; 2],
        }
        Repr { pair: [&self.a, &self.b] }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnorderedBipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            pair: [Partition; 2],
        }
        let r = Repr::deserialize(deserializer)?;
        let [x, y] = r.pair;
        Ok(UnorderedBipartition::new(x, y))
    }
}

/// Label of an irreducible character of a type-D Weyl group: an unordered
/// bipartition with distinct components, or a partition with a sign when the
/// class is degenerate (only for even total size).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DLabel {
    NonDegenerate(UnorderedBipartition),
    Degenerate { lambda: Partition, sign: Sign },
}

impl DLabel {
    /// Wraps a non-degenerate class; degenerate classes must carry a sign.
    pub fn non_degenerate(u: UnorderedBipartition) -> Result<Self, Error> {
        if u.is_degenerate_class() {
            return Err(Error::Parse(format!(
                "class {u} is degenerate and needs a sign"
            )));
        }
        Ok(DLabel::NonDegenerate(u))
    }

    pub fn degenerate(lambda: Partition, sign: Sign) -> Self {
        DLabel::Degenerate { lambda, sign }
    }

    pub fn size(&self) -> u64 {
        match self {
            DLabel::NonDegenerate(u) => u.size(),
            DLabel::Degenerate { lambda, .. } => 2 * lambda.sum(),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            DLabel::NonDegenerate(_) => None,
            DLabel::Degenerate { sign, .. } => Some(*sign),
        }
    }

    /// Projection to unordered bipartitions, sending `[λ,±]` to `[λ,λ]`.
    pub fn unordered_class(&self) -> UnorderedBipartition {
        match self {
            DLabel::NonDegenerate(u) => u.clone(),
            DLabel::Degenerate { lambda, .. } => {
                UnorderedBipartition::new(lambda.clone(), lambda.clone())
            }
        }
    }

    /// Sign twist: conjugates the underlying class and preserves the sign.
    pub fn star(&self) -> DLabel {
        match self {
            DLabel::NonDegenerate(u) => DLabel::NonDegenerate(u.star()),
            DLabel::Degenerate { lambda, sign } => DLabel::Degenerate {
                lambda: lambda.conjugate(),
                sign: *sign,
            },
        }
    }

    /// Order induced through the projection to unordered classes: labels
    /// compare strictly iff their projections do, so the two signed labels
    /// over the same partition are incomparable.
    pub fn dj_leq(&self, other: &DLabel) -> bool {
        if self == other {
            return true;
        }
        let pa = self.unordered_class();
        let pb = other.unordered_class();
        pa != pb && pa.dj_leq(&pb)
    }

    pub fn is_l_regular(&self, ell: u32) -> Result<bool, Error> {
        match self {
            DLabel::NonDegenerate(u) => u.is_l_regular(ell),
            DLabel::Degenerate { lambda, .. } => {
                check_odd_prime(ell)?;
                Ok(lambda.is_l_regular(ell))
            }
        }
    }

    /// Text form: the unordered pair `a|b`, with a `:+`/`:-` suffix on
    /// degenerate labels, e.g. `1|1:+`.
    pub fn to_text(&self) -> String {
        match self {
            DLabel::NonDegenerate(u) => u.to_text(),
            DLabel::Degenerate { lambda, sign } => {
                format!("{}|{}:{}", lambda.to_text(), lambda.to_text(), sign)
            }
        }
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DLabel::NonDegenerate(u) => u.fmt(f),
            DLabel::Degenerate { lambda, sign } => write!(f, "[{lambda},{sign}]"),
        }
    }
}

impl Serialize for DLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            DLabel::NonDegenerate(u) => u.serialize(serializer),
            DLabel::Degenerate { lambda, sign } => {
                #[derive(Serialize)]
                struct Repr<'a> {
                    lambda: &'a Partition,
                    sign: Sign,
                }
                Repr { lambda, sign: *sign }.serialize(serializer)
            }
        }
    }
}

impl<'de> Deserialize<'de> for DLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Degenerate { lambda: Partition, sign: Sign },
            Pair { pair: [Partition; 2] },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Degenerate { lambda, sign } => Ok(DLabel::Degenerate { lambda, sign }),
            Repr::Pair { pair } => {
                let [x, y] = pair;
                DLabel::non_degenerate(UnorderedBipartition::new(x, y))
                    .map_err(|e| D::Error::custom(e.to_string()))
            }
        }
    }
}

/// All ordered bipartitions of `n`, grouped by the size of the first
/// component (ascending), each group in partition enumeration order.
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for r in 0..=n {
        for first in partitions_of(r) {
            for second in partitions_of(n - r) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out
}

/// All unordered bipartitions of `n`, deduplicated, in first-seen order.
pub fn unordered_bipartitions_of(n: u32) -> Vec<UnorderedBipartition> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for b in bipartitions_of(n) {
        let u = UnorderedBipartition::from_bipartition(&b);
        if seen.insert(u.clone()) {
            out.push(u);
        }
    }
    out
}

/// All type-D labels of `n`: unordered classes, with each degenerate class
/// `[λ,λ]` replaced by the two signed labels.
pub fn dlabels_of(n: u32) -> Vec<DLabel> {
    let mut out = Vec::new();
    for u in unordered_bipartitions_of(n) {
        if u.is_degenerate_class() {
            let lambda = u.components().0.clone();
            out.push(DLabel::degenerate(lambda.clone(), Sign::Plus));
            out.push(DLabel::degenerate(lambda, Sign::Minus));
        } else {
            out.push(DLabel::NonDegenerate(u));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(a: &[i64], b: &[i64]) -> Bipartition {
        Bipartition::new(
            Partition::new(a.iter().copied()).unwrap(),
            Partition::new(b.iter().copied()).unwrap(),
        )
    }

    #[test]
    fn star_examples() {
        // trivial <-> sign label
        assert_eq!(bip(&[4], &[]).star(), bip(&[], &[1, 1, 1, 1]));
        assert_eq!(bip(&[1], &[]).star(), bip(&[], &[1]));
        // conjugate both parts and swap; total size preserved
        let b = bip(&[1, 4, 4, 5, 6, 7], &[1, 3]);
        let s = b.star();
        assert_eq!(s, bip(&[1, 1, 2], &[1, 2, 3, 5, 5, 5, 6]));
        assert_eq!(s.size(), 31);
        assert_eq!(s.star(), b);
    }

    #[test]
    fn star_dlabel_examples() {
        let u = UnorderedBipartition::new(
            Partition::new([1]).unwrap(),
            Partition::new([2]).unwrap(),
        );
        let l = DLabel::non_degenerate(u).unwrap();
        let expected = DLabel::non_degenerate(UnorderedBipartition::new(
            Partition::new([1]).unwrap(),
            Partition::new([1, 1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(l.star(), expected);

        let d = DLabel::degenerate(Partition::new([1]).unwrap(), Sign::Plus);
        assert_eq!(d.star(), d);
        let d2 = DLabel::degenerate(Partition::new([2]).unwrap(), Sign::Minus);
        assert_eq!(
            d2.star(),
            DLabel::degenerate(Partition::new([1, 1]).unwrap(), Sign::Minus)
        );
    }

    #[test]
    fn dj_order_examples() {
        assert!(bip(&[1], &[1, 1]).dj_leq(&bip(&[1], &[2])));
        // component sizes differ: incomparable both ways
        assert!(!bip(&[1], &[]).dj_leq(&bip(&[], &[1])));
        assert!(!bip(&[], &[1]).dj_leq(&bip(&[1], &[])));
        assert!(bip(&[1, 1], &[1]).dj_leq(&bip(&[2], &[1])));
    }

    #[test]
    fn dj_unordered_examples() {
        let u = |a: &[i64], b: &[i64]| {
            UnorderedBipartition::new(
                Partition::new(a.iter().copied()).unwrap(),
                Partition::new(b.iter().copied()).unwrap(),
            )
        };
        assert!(u(&[1], &[1, 1]).dj_leq(&u(&[1], &[2])));
        assert!(u(&[2], &[1]).dj_leq(&u(&[2], &[1])));
        // same class regardless of orientation
        assert_eq!(u(&[1], &[]), u(&[], &[1]));
        assert!(u(&[1], &[]).dj_leq(&u(&[], &[1])));
    }

    #[test]
    fn dj_dlabel_sign_incomparability() {
        let plus = DLabel::degenerate(Partition::new([1]).unwrap(), Sign::Plus);
        let minus = DLabel::degenerate(Partition::new([1]).unwrap(), Sign::Minus);
        assert!(!plus.dj_leq(&minus));
        assert!(!minus.dj_leq(&plus));
        assert!(plus.dj_leq(&plus));
    }

    #[test]
    fn enumeration_counts() {
        let one = bipartitions_of(1);
        assert_eq!(one, vec![bip(&[], &[1]), bip(&[1], &[])]);
        assert_eq!(unordered_bipartitions_of(2).len(), 3);
        let d2 = dlabels_of(2);
        assert_eq!(d2.len(), 4);
        assert_eq!(d2.iter().filter(|l| l.sign().is_some()).count(), 2);

        // |Bipart_n| = sum_r p(r) p(n-r)
        fn p(n: u32) -> usize {
            partitions_of(n).len()
        }
        for n in 0..=8u32 {
            let expected: usize = (0..=n).map(|r| p(r) * p(n - r)).sum();
            assert_eq!(bipartitions_of(n).len(), expected);
        }
    }

    #[test]
    fn l_regular_counts() {
        assert!(!bip(&[1, 1, 1], &[]).is_l_regular(3).unwrap());
        assert!(bip(&[2, 1], &[]).is_l_regular(3).unwrap());
        let regular = bipartitions_of(3)
            .iter()
            .filter(|b| b.is_l_regular(3).unwrap())
            .count();
        assert_eq!(regular, 8);
        assert!(matches!(
            bip(&[1], &[]).is_l_regular(2),
            Err(Error::UnsupportedPrime(2))
        ));
        assert!(matches!(
            bip(&[1], &[]).is_l_regular(9),
            Err(Error::UnsupportedPrime(9))
        ));
    }

    #[test]
    fn text_forms() {
        let b = Bipartition::from_text("1.2|3").unwrap();
        assert_eq!(b, bip(&[1, 2], &[3]));
        assert_eq!(b.to_text(), "1.2|3");
        assert_eq!(Bipartition::from_text("1|").unwrap(), bip(&[1], &[]));
        assert_eq!(Bipartition::from_text("|").unwrap(), bip(&[], &[]));
        assert!(Bipartition::from_text("1.2").is_err());
    }

    #[test]
    fn serde_schemas() {
        let b = bip(&[1, 2], &[3]);
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"first":[1,2],"second":[3]}"#
        );
        let u = UnorderedBipartition::new(
            Partition::new([3]).unwrap(),
            Partition::new([1, 2]).unwrap(),
        );
        assert_eq!(
            serde_json::to_string(&u).unwrap(),
            r#"{"pair":[[1,2],[3]]}"#
        );
        let d = DLabel::degenerate(Partition::new([2]).unwrap(), Sign::Plus);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"lambda":[2],"sign":"+"}"#
        );
        let back: DLabel = serde_json::from_str(r#"{"lambda":[2],"sign":"+"}"#).unwrap();
        assert_eq!(back, d);
        let back: DLabel = serde_json::from_str(r#"{"pair":[[1],[2]]}"#).unwrap();
        assert_eq!(back.to_text(), "1|2");
    }
}
