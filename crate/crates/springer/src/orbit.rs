//! Nilpotent orbit partitions for the classical types, the closure order,
//! and the explicit 2-quotient formulas on orbit partitions.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bipartition::{Bipartition, Sign};
use crate::error::Error;
use crate::partition::{partitions_of, Partition};

/// Classical type of the ambient group: B for SO_{2n+1}, C for Sp_{2n},
/// D for SO_{2n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub fn as_str(self) -> &'static str {
        match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        }
    }

    /// Total size of an orbit partition for rank `n`.
    pub fn partition_size(self, n: u64) -> u64 {
        match self {
            LieType::B => 2 * n + 1,
            LieType::C | LieType::D => 2 * n,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown type '{other}'"))),
        }
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: Error| D::Error::custom(e.to_string()))
    }
}

fn multiplicities_ok(p: &Partition, lie_type: LieType) -> bool {
    // C: odd parts in even multiplicity; B, D: even parts in even multiplicity
    let needs_even_mult = |v: u32| match lie_type {
        LieType::C => v % 2 == 1,
        LieType::B | LieType::D => v % 2 == 0,
    };
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut mult = 1;
        while i + mult < parts.len() && parts[i + mult] == v {
            mult += 1;
        }
        if needs_even_mult(v) && mult % 2 != 0 {
            return false;
        }
        i += mult;
    }
    true
}

/// True when `p` labels a nilpotent orbit of the given type and rank: the
/// size matches and the relevant parts come in even multiplicities.
pub fn is_orbit_partition(p: &Partition, lie_type: LieType, n: u64) -> bool {
    p.sum() == lie_type.partition_size(n) && multiplicities_ok(p, lie_type)
}

/// A nilpotent orbit, labeled by its partition. For type D, partitions with
/// only even parts each label two degenerate orbits, told apart by a sign;
/// the sign is present exactly in that case.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitPartition {
    lie_type: LieType,
    partition: Partition,
    sign: Option<Sign>,
}

impl OrbitPartition {
    pub fn new(
        lie_type: LieType,
        partition: Partition,
        sign: Option<Sign>,
    ) -> Result<Self, Error> {
        let size = partition.sum();
        let size_ok = match lie_type {
            LieType::B => size % 2 == 1,
            LieType::C | LieType::D => size % 2 == 0,
        };
        if !size_ok || !multiplicities_ok(&partition, lie_type) {
            return Err(Error::NotAnOrbitPartition(format!(
                "{partition} is not a type {lie_type} orbit partition"
            )));
        }
        let very_even =
            lie_type == LieType::D && partition.parts().iter().all(|&p| p % 2 == 0);
        if very_even && sign.is_none() {
            return Err(Error::NotAnOrbitPartition(format!(
                "{partition} has only even parts and labels two orbits; a sign is required"
            )));
        }
        if !very_even && sign.is_some() {
            return Err(Error::NotAnOrbitPartition(format!(
                "{partition} labels a single orbit; no sign applies"
            )));
        }
        Ok(OrbitPartition {
            lie_type,
            partition,
            sign,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    /// Rank `n` of the ambient group.
    pub fn rank(&self) -> u64 {
        match self.lie_type {
            LieType::B => (self.partition.sum() - 1) / 2,
            LieType::C | LieType::D => self.partition.sum() / 2,
        }
    }

    /// Closure order: dominance on zero-padded partitions. The two
    /// degenerate orbits over the same very even partition are incomparable.
    pub fn closure_leq(&self, other: &OrbitPartition) -> bool {
        debug_assert_eq!(self.lie_type, other.lie_type);
        debug_assert_eq!(self.partition.sum(), other.partition.sum());
        if self.partition == other.partition {
            return self.sign == other.sign;
        }
        self.partition.dominance_leq(&other.partition)
    }

    pub fn to_text(&self) -> String {
        match self.sign {
            Some(sign) => format!("{}:{}", self.partition.to_text(), sign),
            None => self.partition.to_text(),
        }
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(sign) => write!(f, "({},{sign})", self.partition),
            None => self.partition.fmt(f),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct OrbitRepr {
    #[serde(rename = "type")]
    lie_type: LieType,
    n: u64,
    lambda: Partition,
    sign: Option<Sign>,
}

impl Serialize for OrbitPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        OrbitRepr {
            lie_type: self.lie_type,
            n: self.rank(),
            lambda: self.partition.clone(),
            sign: self.sign,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrbitPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = OrbitRepr::deserialize(deserializer)?;
        let orbit = OrbitPartition::new(repr.lie_type, repr.lambda, repr.sign)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        if orbit.rank() != repr.n {
            return Err(D::Error::custom(format!(
                "orbit rank {} does not match declared n = {}",
                orbit.rank(),
                repr.n
            )));
        }
        Ok(orbit)
    }
}

/// All nilpotent orbits of the given type and rank. Type-D partitions with
/// only even parts are emitted twice, with signs `+` and `-`.
pub fn orbits_of(lie_type: LieType, n: u64) -> Vec<OrbitPartition> {
    let size = lie_type.partition_size(n) as u32;
    let mut out = Vec::new();
    for p in partitions_of(size) {
        if !multiplicities_ok(&p, lie_type) {
            continue;
        }
        let very_even = lie_type == LieType::D && p.parts().iter().all(|&x| x % 2 == 0);
        if very_even {
            out.push(OrbitPartition::new(lie_type, p.clone(), Some(Sign::Plus)).unwrap());
            out.push(OrbitPartition::new(lie_type, p, Some(Sign::Minus)).unwrap());
        } else {
            out.push(OrbitPartition::new(lie_type, p, None).unwrap());
        }
    }
    out
}

/// Pads to the length-parity convention: even length for C and D, odd for B.
fn padded_to_parity(p: &Partition, lie_type: LieType) -> Vec<u32> {
    let want_odd = lie_type == LieType::B;
    let len = p.len();
    let target = if (len % 2 == 1) == want_odd { len } else { len + 1 };
    p.padded(target)
}

/// Indices (1-based, into the padded increasing partition) of the first
/// members of the consecutive equal pairs formed by the odd parts (type C)
/// or even parts (types B, D). Pairs are matched greedily from the smallest
/// index; consecutive selected indices always differ by more than one.
fn pair_start_indices(padded: &[u32], lie_type: LieType) -> Vec<usize> {
    let relevant = |v: u32| match lie_type {
        LieType::C => v % 2 == 1,
        LieType::B | LieType::D => v % 2 == 0 && v > 0,
    };
    let mut indices = Vec::new();
    let mut i = 0;
    while i < padded.len() {
        if relevant(padded[i]) {
            assert!(
                i + 1 < padded.len() && padded[i + 1] == padded[i],
                "pairing invariant violated at index {} of {padded:?}",
                i + 1
            );
            if let Some(&last) = indices.last() {
                assert!(i + 1 - last > 1, "pair starts must be separated");
            }
            indices.push(i + 1); // 1-based
            i += 2;
        } else {
            i += 1;
        }
    }
    indices
}

/// The 2-quotient of an orbit partition by the explicit case formulas; the
/// result is a bipartition of `n` and always agrees with the beta-number
/// oracle [`Partition::two_quotient`].
pub fn two_quotient_explicit(orbit: &OrbitPartition) -> Bipartition {
    two_quotient_formulas(orbit.lie_type(), orbit.partition(), orbit.rank())
}

/// Same as [`two_quotient_explicit`], taking a bare partition; the type-D
/// sign plays no role in the quotient. Rejects non-orbit partitions.
pub fn two_quotient_of_partition(
    lie_type: LieType,
    partition: &Partition,
) -> Result<Bipartition, Error> {
    let size = partition.sum();
    let parity_ok = match lie_type {
        LieType::B => size % 2 == 1,
        LieType::C | LieType::D => size % 2 == 0,
    };
    if !parity_ok || !multiplicities_ok(partition, lie_type) {
        return Err(Error::NotAnOrbitPartition(format!(
            "{partition} is not a type {lie_type} orbit partition"
        )));
    }
    let n = match lie_type {
        LieType::B => (size - 1) / 2,
        LieType::C | LieType::D => size / 2,
    };
    Ok(two_quotient_formulas(lie_type, partition, n))
}

fn two_quotient_formulas(lie_type: LieType, partition: &Partition, n: u64) -> Bipartition {
    let padded = padded_to_parity(partition, lie_type);
    let index_set = pair_start_indices(&padded, lie_type);
    let in_set = |i: usize| index_set.binary_search(&i).is_ok();
    let at = |i: usize| padded[i - 1]; // 1-based access

    let mut first = Vec::new();
    let mut second = Vec::new();
    match lie_type {
        LieType::C => {
            let m = padded.len() / 2;
            for i in 1..=m {
                let a = at(2 * i);
                first.push(if a % 2 == 0 {
                    a / 2
                } else if in_set(2 * i) {
                    (a + 1) / 2
                } else {
                    debug_assert!(in_set(2 * i - 1));
                    (a - 1) / 2
                });
                let b = at(2 * i - 1);
                second.push(if b % 2 == 0 {
                    b / 2
                } else if in_set(2 * i - 1) {
                    (b + 1) / 2
                } else {
                    debug_assert!(in_set(2 * i - 2));
                    (b - 1) / 2
                });
            }
        }
        LieType::B | LieType::D => {
            // first component reads the odd positions, second the even ones
            let first_len = padded.len().div_ceil(2);
            for i in 1..=first_len {
                let a = at(2 * i - 1);
                first.push(if a % 2 == 1 {
                    (a - 1) / 2
                } else if in_set(2 * i - 1) {
                    a / 2
                } else {
                    debug_assert!(in_set(2 * i - 2));
                    a / 2 - 1
                });
            }
            for i in 1..=padded.len() / 2 {
                let b = at(2 * i);
                second.push(if b % 2 == 1 {
                    (b + 1) / 2
                } else if in_set(2 * i) {
                    b / 2 + 1
                } else {
                    debug_assert!(in_set(2 * i - 1));
                    b / 2
                });
            }
        }
    }
    let quotient = Bipartition::new(
        Partition::from_parts(&first),
        Partition::from_parts(&second),
    );
    debug_assert_eq!(quotient.size(), n);
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn orbit_membership() {
        assert!(!is_orbit_partition(&part(&[1, 2]), LieType::B, 1));
        assert!(is_orbit_partition(&part(&[1, 1]), LieType::C, 1));
        assert!(is_orbit_partition(&part(&[2]), LieType::C, 1));
        assert!(is_orbit_partition(
            &part(&[2, 3, 3, 4, 6, 6, 7, 7, 9, 9]),
            LieType::C,
            28
        ));
        assert!(!is_orbit_partition(&part(&[2]), LieType::C, 2));
    }

    #[test]
    fn enumerations() {
        let c1: Vec<String> = orbits_of(LieType::C, 1).iter().map(|o| o.to_text()).collect();
        assert_eq!(c1, vec!["1.1", "2"]);
        let b1: Vec<String> = orbits_of(LieType::B, 1).iter().map(|o| o.to_text()).collect();
        assert_eq!(b1, vec!["1.1.1", "3"]);
        let d2: Vec<String> = orbits_of(LieType::D, 2).iter().map(|o| o.to_text()).collect();
        assert_eq!(d2, vec!["1.1.1.1", "2.2:+", "2.2:-", "1.3"]);
    }

    #[test]
    fn closure_order() {
        let c = |v: &[i64]| OrbitPartition::new(LieType::C, part(v), None).unwrap();
        assert!(c(&[1, 1]).closure_leq(&c(&[2])));
        assert!(!c(&[2]).closure_leq(&c(&[1, 1])));

        let plus = OrbitPartition::new(LieType::D, part(&[2, 2]), Some(Sign::Plus)).unwrap();
        let minus = OrbitPartition::new(LieType::D, part(&[2, 2]), Some(Sign::Minus)).unwrap();
        assert!(!plus.closure_leq(&minus));
        assert!(!minus.closure_leq(&plus));
        assert!(plus.closure_leq(&plus));

        let low = OrbitPartition::new(LieType::D, part(&[1, 1, 1, 1]), None).unwrap();
        let high = OrbitPartition::new(LieType::D, part(&[1, 3]), None).unwrap();
        assert!(low.closure_leq(&high));
        assert!(low.closure_leq(&plus));
    }

    #[test]
    fn sign_presence_is_enforced() {
        assert!(OrbitPartition::new(LieType::D, part(&[2, 2]), None).is_err());
        assert!(OrbitPartition::new(LieType::D, part(&[1, 3]), Some(Sign::Plus)).is_err());
        assert!(OrbitPartition::new(LieType::C, part(&[1, 2]), None).is_err());
    }

    #[test]
    fn explicit_quotient_showcase_values() {
        let c = OrbitPartition::new(LieType::C, part(&[2, 3, 3, 4, 6, 6, 7, 7, 9, 9]), None)
            .unwrap();
        let q = two_quotient_explicit(&c);
        assert_eq!(q.first, part(&[2, 2, 3, 3, 4]));
        assert_eq!(q.second, part(&[1, 1, 3, 4, 5]));

        let b = OrbitPartition::new(
            LieType::B,
            part(&[1, 2, 2, 3, 4, 4, 6, 6, 7, 8, 8]),
            None,
        )
        .unwrap();
        let q = two_quotient_explicit(&b);
        assert_eq!(q.first, part(&[2, 3, 3, 3]));
        assert_eq!(q.second, part(&[2, 2, 2, 3, 5]));

        let d = OrbitPartition::new(LieType::D, part(&[2, 2, 3, 4, 4, 6, 6, 7, 8, 8]), None)
            .unwrap();
        let q = two_quotient_explicit(&d);
        assert_eq!(q.first, part(&[1, 1, 1, 2, 4]));
        assert_eq!(q.second, part(&[1, 3, 4, 4, 4]));
    }

    #[test]
    fn index_sets_match_hand_computation() {
        // type C: odd entries pair up at 1-based indices {2,7,9}
        let padded = part(&[2, 3, 3, 4, 6, 6, 7, 7, 9, 9]).padded(10);
        assert_eq!(pair_start_indices(&padded, LieType::C), vec![2, 7, 9]);
        let padded = part(&[1, 2, 2, 3, 4, 4, 6, 6, 7, 8, 8]).padded(11);
        assert_eq!(pair_start_indices(&padded, LieType::B), vec![2, 5, 7, 10]);
        let padded = part(&[2, 2, 3, 4, 4, 6, 6, 7, 8, 8]).padded(10);
        assert_eq!(pair_start_indices(&padded, LieType::D), vec![1, 4, 6, 9]);
    }

    #[test]
    fn explicit_equals_oracle_small_ranks() {
        for lie_type in [LieType::B, LieType::C, LieType::D] {
            for n in 1..=5 {
                for orbit in orbits_of(lie_type, n) {
                    let explicit = two_quotient_explicit(&orbit);
                    let (q1, q2) = orbit.partition().two_quotient();
                    assert_eq!(
                        (explicit.first.clone(), explicit.second.clone()),
                        (q1, q2),
                        "type {lie_type} orbit {orbit}"
                    );
                    assert_eq!(explicit.size(), n);
                }
            }
        }
    }

    #[test]
    fn serde_schema() {
        let plus = OrbitPartition::new(LieType::D, part(&[2, 2]), Some(Sign::Plus)).unwrap();
        let json = serde_json::to_string(&plus).unwrap();
        assert_eq!(json, r#"{"type":"D","n":2,"lambda":[2,2],"sign":"+"}"#);
        let back: OrbitPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, plus);
    }
}
