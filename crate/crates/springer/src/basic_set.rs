//! Abstract basic-set data for decomposition matrices: partial orders on
//! ordinary labels, injections from modular to ordinary labels, the two
//! defining axioms (a unit diagonal entry and triangularity with respect to
//! the order), comparison of data, and exhaustive search for the unique
//! compatible injection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A decomposition matrix: ordinary labels index the rows, modular labels
/// the columns, entries are composition multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    ordinary: Vec<String>,
    modular: Vec<String>,
    entries: Vec<Vec<u64>>,
}

impl<'de> Deserialize<'de> for DecompositionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ordinary: Vec<String>,
            modular: Vec<String>,
            entries: Vec<Vec<u64>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        DecompositionMatrix::new(raw.ordinary, raw.modular, raw.entries, false)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

impl DecompositionMatrix {
    /// Builds and validates a matrix. Every column must contain a nonzero
    /// entry (each modular simple occurs in some reduction); pass
    /// `allow_zero_columns` to relax that check.
    pub fn new(
        ordinary: Vec<String>,
        modular: Vec<String>,
        entries: Vec<Vec<u64>>,
        allow_zero_columns: bool,
    ) -> Result<Self, Error> {
        if entries.len() != ordinary.len() {
            return Err(Error::InconsistentLabels(format!(
                "{} rows for {} ordinary labels",
                entries.len(),
                ordinary.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != modular.len() {
                return Err(Error::InconsistentLabels(format!(
                    "row {} has {} entries for {} modular labels",
                    ordinary[i],
                    row.len(),
                    modular.len()
                )));
            }
        }
        let unique = |labels: &[String]| {
            let set: std::collections::HashSet<&String> = labels.iter().collect();
            set.len() == labels.len()
        };
        if !unique(&ordinary) || !unique(&modular) {
            return Err(Error::InconsistentLabels("duplicate labels".into()));
        }
        if !allow_zero_columns {
            for (j, label) in modular.iter().enumerate() {
                if entries.iter().all(|row| row[j] == 0) {
                    return Err(Error::NotABasicSetDatum(format!(
                        "modular label {label} has an all-zero column"
                    )));
                }
            }
        }
        Ok(DecompositionMatrix {
            ordinary,
            modular,
            entries,
        })
    }

    pub fn ordinary(&self) -> &[String] {
        &self.ordinary
    }

    pub fn modular(&self) -> &[String] {
        &self.modular
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row][col]
    }
}

/// A partial order on a fixed label set, stored as its full set of
/// comparable pairs (reflexive and transitively closed). Construction
/// rejects generating pairs that would force a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelation {
    labels: Vec<String>,
    // leq[i][j] holds iff labels[i] <= labels[j]
    leq: Vec<Vec<bool>>,
}

impl OrderRelation {
    /// The reflexive-transitive closure of the given generating pairs.
    pub fn from_pairs<'a, I>(labels: Vec<String>, pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let n = labels.len();
        let index = |name: &str| -> Result<usize, Error> {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::InconsistentLabels(format!("unknown label {name}")))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let (i, j) = (index(a)?, index(b)?);
            leq[i][j] = true;
        }
        // Warshall closure
        for k in 0..n {
            let through_k = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k] {
                    for (cell, &reachable) in row.iter_mut().zip(&through_k) {
                        *cell |= reachable;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are comparable both ways",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(OrderRelation { labels, leq })
    }

    /// Materializes a predicate that is already a partial order; the axioms
    /// are re-checked and violations rejected.
    pub fn from_predicate<F>(labels: Vec<String>, pred: F) -> Result<Self, Error>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = i == j || pred(i, j);
            }
        }
        let rel = OrderRelation { labels, leq };
        rel.check_axioms()?;
        Ok(rel)
    }

    fn check_axioms(&self) -> Result<(), Error> {
        let n = self.labels.len();
        for i in 0..n {
            if !self.leq[i][i] {
                return Err(Error::NotPartialOrder(format!(
                    "missing reflexive pair for {}",
                    self.labels[i]
                )));
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are comparable both ways",
                        self.labels[i], self.labels[j]
                    )));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::NotPartialOrder(format!(
                            "transitivity fails through {}",
                            self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Number of comparable pairs, reflexive ones included.
    pub fn pair_count(&self) -> usize {
        self.leq.iter().flatten().filter(|&&b| b).count()
    }

    fn same_labels(&self, other: &OrderRelation) -> Result<(), Error> {
        if self.labels != other.labels {
            return Err(Error::InconsistentLabels(
                "orders are defined on different label sets".into(),
            ));
        }
        Ok(())
    }

    /// Subset test on pair sets.
    pub fn contained_in(&self, other: &OrderRelation) -> Result<bool, Error> {
        self.same_labels(other)?;
        Ok(self
            .leq
            .iter()
            .zip(&other.leq)
            .all(|(ra, rb)| ra.iter().zip(rb).all(|(&a, &b)| !a || b)))
    }

    /// Intersection of pair sets; always again a partial order.
    pub fn intersection(&self, other: &OrderRelation) -> Result<OrderRelation, Error> {
        self.same_labels(other)?;
        let leq = self
            .leq
            .iter()
            .zip(&other.leq)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(&a, &b)| a && b).collect())
            .collect();
        Ok(OrderRelation {
            labels: self.labels.clone(),
            leq,
        })
    }
}

/// An injection from modular labels to ordinary labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaInjection {
    // target ordinary index for each modular index
    map: Vec<usize>,
}

impl BetaInjection {
    pub fn new(map: Vec<usize>) -> Result<Self, Error> {
        let mut seen = std::collections::HashSet::new();
        for &target in &map {
            if !seen.insert(target) {
                return Err(Error::NotABasicSetDatum(
                    "the map is not injective".into(),
                ));
            }
        }
        Ok(BetaInjection { map })
    }

    pub fn target(&self, modular: usize) -> usize {
        self.map[modular]
    }

    pub fn targets(&self) -> &[usize] {
        &self.map
    }

    pub fn describe(&self, matrix: &DecompositionMatrix) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(f, &e)| {
                (
                    matrix.modular()[f].clone(),
                    matrix.ordinary()[e].clone(),
                )
            })
            .collect()
    }
}

/// Axiom report for a candidate basic-set datum: modular labels whose
/// diagonal entry is not one, and (ordinary, modular) pairs breaking
/// triangularity. Empty lists mean the datum is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DatumReport {
    pub unit_violations: Vec<String>,
    pub triangularity_violations: Vec<(String, String)>,
}

impl DatumReport {
    pub fn is_valid(&self) -> bool {
        self.unit_violations.is_empty() && self.triangularity_violations.is_empty()
    }
}

impl fmt::Display for DatumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid basic set datum");
        }
        write!(
            f,
            "unit violations: [{}]; triangularity violations: [{}]",
            self.unit_violations.join(", "),
            self.triangularity_violations
                .iter()
                .map(|(e, m)| format!("({e},{m})"))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

fn check_labels(matrix: &DecompositionMatrix, order: &OrderRelation) -> Result<(), Error> {
    if matrix.ordinary() != order.labels() {
        return Err(Error::InconsistentLabels(
            "order labels do not match the matrix's ordinary labels".into(),
        ));
    }
    Ok(())
}

/// Checks the two axioms of a basic-set datum: the diagonal entry
/// `d[β(F), F]` must be one, and any nonzero `d[E, F]` forces `E <= β(F)`.
pub fn check_basic_set_datum(
    matrix: &DecompositionMatrix,
    order: &OrderRelation,
    beta: &BetaInjection,
) -> Result<DatumReport, Error> {
    check_labels(matrix, order)?;
    if beta.targets().len() != matrix.modular().len() {
        return Err(Error::InconsistentLabels(format!(
            "injection covers {} modular labels, matrix has {}",
            beta.targets().len(),
            matrix.modular().len()
        )));
    }
    if beta.targets().iter().any(|&e| e >= matrix.ordinary().len()) {
        return Err(Error::InconsistentLabels(
            "injection targets an unknown ordinary label".into(),
        ));
    }
    let mut report = DatumReport::default();
    for (f, modular) in matrix.modular().iter().enumerate() {
        let target = beta.target(f);
        if matrix.entry(target, f) != 1 {
            report.unit_violations.push(modular.clone());
        }
        for (e, ordinary) in matrix.ordinary().iter().enumerate() {
            if matrix.entry(e, f) != 0 && !order.leq(e, target) {
                report
                    .triangularity_violations
                    .push((ordinary.clone(), modular.clone()));
            }
        }
    }
    Ok(report)
}

/// Exhaustively searches for injections that satisfy both axioms. For a
/// genuine partial order the result has at most one element: two valid
/// injections for one order coincide.
pub fn find_betas(
    matrix: &DecompositionMatrix,
    order: &OrderRelation,
) -> Result<Vec<BetaInjection>, Error> {
    check_labels(matrix, order)?;
    let n_mod = matrix.modular().len();
    let n_ord = matrix.ordinary().len();
    // per-column candidates: rows with entry one that dominate every
    // nonzero row of the column
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n_mod);
    for f in 0..n_mod {
        let nonzero: Vec<usize> = (0..n_ord).filter(|&e| matrix.entry(e, f) != 0).collect();
        let column: Vec<usize> = (0..n_ord)
            .filter(|&e| matrix.entry(e, f) == 1 && nonzero.iter().all(|&x| order.leq(x, e)))
            .collect();
        candidates.push(column);
    }
    // most-constrained columns (many nonzero entries) first prunes the
    // injectivity backtracking
    let mut column_order: Vec<usize> = (0..n_mod).collect();
    column_order.sort_by_key(|&f| {
        let nonzeros = (0..n_ord).filter(|&e| matrix.entry(e, f) != 0).count();
        (std::cmp::Reverse(nonzeros), f)
    });

    let mut found = Vec::new();
    let mut assignment = vec![usize::MAX; n_mod];
    let mut used = vec![false; n_ord];
    fn search(
        pos: usize,
        column_order: &[usize],
        candidates: &[Vec<usize>],
        assignment: &mut [usize],
        used: &mut [bool],
        found: &mut Vec<Vec<usize>>,
    ) {
        if pos == column_order.len() {
            found.push(assignment.to_vec());
            return;
        }
        let f = column_order[pos];
        for &e in &candidates[f] {
            if !used[e] {
                used[e] = true;
                assignment[f] = e;
                search(pos + 1, column_order, candidates, assignment, used, found);
                used[e] = false;
                assignment[f] = usize::MAX;
            }
        }
    }
    let mut raw = Vec::new();
    search(
        0,
        &column_order,
        &candidates,
        &mut assignment,
        &mut used,
        &mut raw,
    );
    for map in raw {
        found.push(BetaInjection::new(map)?);
    }
    debug_assert!(
        found.len() <= 1,
        "two distinct injections satisfy one partial order"
    );
    Ok(found)
}

/// Cross-comparison of two basic set data for the same matrix: for every
/// modular label, `β_1(F) <=_2 β_2(F)` and `β_2(F) <=_1 β_1(F)`; when the
/// first order is contained in the second the injections coincide.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CompareReport {
    pub cross_violations: Vec<String>,
    /// Set when the first order is contained in the second.
    pub betas_equal_when_nested: Option<bool>,
}

impl CompareReport {
    pub fn holds(&self) -> bool {
        self.cross_violations.is_empty() && self.betas_equal_when_nested.unwrap_or(true)
    }
}

pub fn compare_data(
    matrix: &DecompositionMatrix,
    first: (&OrderRelation, &BetaInjection),
    second: (&OrderRelation, &BetaInjection),
) -> Result<CompareReport, Error> {
    for (order, beta) in [first, second] {
        let report = check_basic_set_datum(matrix, order, beta)?;
        if !report.is_valid() {
            return Err(Error::NotABasicSetDatum(report.to_string()));
        }
    }
    let (order1, beta1) = first;
    let (order2, beta2) = second;
    let mut report = CompareReport::default();
    for (f, modular) in matrix.modular().iter().enumerate() {
        let (e1, e2) = (beta1.target(f), beta2.target(f));
        if !order2.leq(e1, e2) || !order1.leq(e2, e1) {
            report.cross_violations.push(modular.clone());
        }
    }
    if order1.contained_in(order2)? {
        report.betas_equal_when_nested = Some(beta1 == beta2);
    }
    Ok(report)
}

/// The order induced on labels by a closure order on their orbits when
/// every decomposition-group is trivial: `E_1 <= E_2` iff the labels agree
/// or the orbit of `E_2` lies strictly below the orbit of `E_1`.
pub fn springer_order_good_case<K, F>(
    labels: &[String],
    orbits: &[K],
    closure_leq: F,
) -> Result<OrderRelation, Error>
where
    K: PartialEq,
    F: Fn(&K, &K) -> bool,
{
    if labels.len() != orbits.len() {
        return Err(Error::InconsistentLabels(format!(
            "{} labels for {} orbits",
            labels.len(),
            orbits.len()
        )));
    }
    OrderRelation::from_predicate(labels.to_vec(), |i, j| {
        i == j || (orbits[j] != orbits[i] && closure_leq(&orbits[j], &orbits[i]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn matrix(ord: &[&str], modl: &[&str], entries: &[&[u64]]) -> DecompositionMatrix {
        DecompositionMatrix::new(
            labels(ord),
            labels(modl),
            entries.iter().map(|r| r.to_vec()).collect(),
            false,
        )
        .unwrap()
    }

    #[test]
    fn identity_datum_is_valid() {
        let m = matrix(&["E1", "E2"], &["F1", "F2"], &[&[1, 0], &[0, 1]]);
        let order = OrderRelation::from_pairs(labels(&["E1", "E2"]), []).unwrap();
        let beta = BetaInjection::new(vec![0, 1]).unwrap();
        let report = check_basic_set_datum(&m, &order, &beta).unwrap();
        assert!(report.is_valid());
        let found = find_betas(&m, &order).unwrap();
        assert_eq!(found, vec![beta]);
    }

    #[test]
    fn chain_column_example() {
        let m = matrix(&["E1", "E2"], &["F"], &[&[1], &[1]]);
        let order = OrderRelation::from_pairs(labels(&["E1", "E2"]), [("E1", "E2")]).unwrap();
        let top = BetaInjection::new(vec![1]).unwrap();
        assert!(check_basic_set_datum(&m, &order, &top).unwrap().is_valid());
        let bottom = BetaInjection::new(vec![0]).unwrap();
        let report = check_basic_set_datum(&m, &order, &bottom).unwrap();
        assert_eq!(
            report.triangularity_violations,
            vec![("E2".to_string(), "F".to_string())]
        );
        assert_eq!(find_betas(&m, &order).unwrap(), vec![top]);
    }

    #[test]
    fn entry_two_has_no_datum() {
        let m = matrix(&["E"], &["F"], &[&[2]]);
        let order = OrderRelation::from_pairs(labels(&["E"]), []).unwrap();
        assert!(find_betas(&m, &order).unwrap().is_empty());
        let beta = BetaInjection::new(vec![0]).unwrap();
        let report = check_basic_set_datum(&m, &order, &beta).unwrap();
        assert_eq!(report.unit_violations, vec!["F".to_string()]);
    }

    #[test]
    fn order_operations() {
        let trivial = OrderRelation::from_pairs(labels(&["a", "b", "c"]), []).unwrap();
        let chain =
            OrderRelation::from_pairs(labels(&["a", "b", "c"]), [("a", "b"), ("b", "c")]).unwrap();
        assert!(trivial.contained_in(&chain).unwrap());
        assert!(!chain.contained_in(&trivial).unwrap());
        assert_eq!(chain.intersection(&chain).unwrap(), chain);
        // transitive closure added (a, c)
        assert!(chain.leq(0, 2));

        let other =
            OrderRelation::from_pairs(labels(&["a", "b", "c"]), [("c", "b"), ("a", "b")]).unwrap();
        let meet = chain.intersection(&other).unwrap();
        assert!(meet.leq(0, 1));
        assert!(!meet.leq(1, 2));
        assert!(!meet.leq(2, 1));
        assert_eq!(meet.pair_count(), 4);

        assert!(OrderRelation::from_pairs(
            labels(&["a", "b"]),
            [("a", "b"), ("b", "a")]
        )
        .is_err());
    }

    #[test]
    fn compare_data_cross_inequalities() {
        let m = matrix(&["E1", "E2"], &["F"], &[&[1], &[1]]);
        let order1 = OrderRelation::from_pairs(labels(&["E1", "E2"]), [("E1", "E2")]).unwrap();
        let order2 =
            OrderRelation::from_pairs(labels(&["E1", "E2"]), [("E1", "E2")]).unwrap();
        let beta = BetaInjection::new(vec![1]).unwrap();
        let report = compare_data(&m, (&order1, &beta), (&order2, &beta)).unwrap();
        assert!(report.holds());
        assert_eq!(report.betas_equal_when_nested, Some(true));

        let bad = BetaInjection::new(vec![0]).unwrap();
        assert!(compare_data(&m, (&order1, &bad), (&order2, &beta)).is_err());
    }

    #[test]
    fn compare_data_with_incomparable_orders() {
        // a diagonal matrix admits the identity injection under any order;
        // the cross-inequalities hold even for orders pointing opposite ways
        let m = matrix(&["E1", "E2"], &["F1", "F2"], &[&[1, 0], &[0, 1]]);
        let up = OrderRelation::from_pairs(labels(&["E1", "E2"]), [("E1", "E2")]).unwrap();
        let down = OrderRelation::from_pairs(labels(&["E1", "E2"]), [("E2", "E1")]).unwrap();
        let identity = BetaInjection::new(vec![0, 1]).unwrap();
        let report = compare_data(&m, (&up, &identity), (&down, &identity)).unwrap();
        assert!(report.holds());
        assert!(report.cross_violations.is_empty());
        // neither order contains the other
        assert!(!up.contained_in(&down).unwrap());
        assert_eq!(report.betas_equal_when_nested, None);
    }

    #[test]
    fn good_case_order() {
        // two labels on strictly comparable orbits: one nontrivial pair,
        // reversed relative to the closure order
        let order = springer_order_good_case(
            &labels(&["low", "high"]),
            &[1u32, 2u32],
            |a, b| a <= b,
        )
        .unwrap();
        assert!(order.leq(1, 0)); // orbit(low)=1 < orbit(high)=2 reverses
        assert!(!order.leq(0, 1));

        // equal orbits: only reflexive pairs
        let order =
            springer_order_good_case(&labels(&["x", "y"]), &[1u32, 1u32], |a, b| a <= b).unwrap();
        assert!(!order.leq(0, 1));
        assert!(!order.leq(1, 0));
        assert_eq!(order.pair_count(), 2);
    }

    #[test]
    fn label_mismatch_is_rejected() {
        let m = matrix(&["E1"], &["F"], &[&[1]]);
        let order = OrderRelation::from_pairs(labels(&["X"]), []).unwrap();
        assert!(matches!(
            find_betas(&m, &order),
            Err(Error::InconsistentLabels(_))
        ));
    }
}
