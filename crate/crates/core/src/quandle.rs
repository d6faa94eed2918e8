//! Finite quandles as Cayley tables.
//!
//! Elements are the indices `0..n`, and `table[a][b]` holds `a^b`. A table is
//! a quandle when every column `a -> a^b` is a bijection (axiom 1), the
//! operation right-distributes over itself (axiom 2) and every element is
//! idempotent (axiom 3).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{QuandleError, Result};
use crate::perm::Permutation;

/// Which quandle axiom a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Right multiplication by each element is a bijection.
    RightInvertible = 1,
    /// `(a^b)^c = (a^c)^(b^c)`.
    SelfDistributive = 2,
    /// `a^a = a`.
    Idempotent = 3,
}

impl Axiom {
    pub fn id(self) -> u8 {
        self as u8
    }
}

impl Serialize for Axiom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.id())
    }
}

impl<'de> Deserialize<'de> for Axiom {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match u8::deserialize(d)? {
            1 => Ok(Axiom::RightInvertible),
            2 => Ok(Axiom::SelfDistributive),
            3 => Ok(Axiom::Idempotent),
            other => Err(serde::de::Error::custom(format!(
                "unknown axiom id {other}"
            ))),
        }
    }
}

/// A failed axiom together with the lexicographically first witness.
///
/// Witness layouts: axiom 1 is `[b, a, a']` with `a < a'` and `a^b = a'^b`;
/// axiom 2 is `[a, b, c]`; axiom 3 is `[a]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "axiom {} fails at {:?}", v.axiom.id(), v.witness)?;
        }
        Ok(())
    }
}

fn check_shape(rows: &[Vec<usize>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(QuandleError::EmptyCarrier);
    }
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(QuandleError::MalformedTable(format!(
                "row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((b, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(QuandleError::MalformedTable(format!(
                "entry [{a}][{b}] = {v} is out of range for n = {n}"
            )));
        }
    }
    Ok(n)
}

/// Checks all three quandle axioms on a square table.
///
/// Every axiom is scanned in full; each failing axiom contributes its
/// lexicographically first witness. Non-square tables and out-of-range
/// entries are input errors, not violations.
pub fn validate_axioms(rows: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = check_shape(rows)?;
    let op = |a: usize, b: usize| rows[a][b];
    let mut violations = Vec::new();

    'columns: for b in 0..n {
        let mut first_preimage = vec![usize::MAX; n];
        let mut collision: Option<(usize, usize)> = None;
        for a in 0..n {
            let y = op(a, b);
            if first_preimage[y] == usize::MAX {
                first_preimage[y] = a;
            } else {
                let cand = (first_preimage[y], a);
                if collision.is_none_or(|c| cand < c) {
                    collision = Some(cand);
                }
            }
        }
        if let Some((a, a2)) = collision {
            violations.push(Violation {
                axiom: Axiom::RightInvertible,
                witness: vec![b, a, a2],
            });
            break 'columns;
        }
    }

    'triples: for a in 0..n {
        for b in 0..n {
            let ab = op(a, b);
            for c in 0..n {
                if op(ab, c) != op(op(a, c), op(b, c)) {
                    violations.push(Violation {
                        axiom: Axiom::SelfDistributive,
                        witness: vec![a, b, c],
                    });
                    break 'triples;
                }
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| op(a, a) != a) {
        violations.push(Violation {
            axiom: Axiom::Idempotent,
            witness: vec![a],
        });
    }

    Ok(AxiomReport::from_violations(violations))
}

/// A validated finite quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    n: usize,
    // row-major, table[a * n + b] = a^b
    table: Vec<usize>,
    // inv[a * n + b] = the unique c with c^b = a
    inv: Vec<usize>,
}

impl FiniteQuandle {
    /// Builds a quandle from its Cayley table, rejecting malformed tables
    /// and tables that fail any axiom.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let report = validate_axioms(&rows)?;
        if !report.valid {
            return Err(QuandleError::AxiomViolation(report));
        }
        Ok(Self::from_fn_unchecked(rows.len(), |a, b| rows[a][b]))
    }

    /// Tabulates `f` without checking the axioms. Callers guarantee that
    /// `f` is a quandle operation on `0..n`.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(f(a, b));
            }
        }
        let mut inv = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                inv[table[a * n + b] * n + b] = a;
            }
        }
        Self { n, table, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn check_index(&self, x: usize) -> Result<usize> {
        if x < self.n {
            Ok(x)
        } else {
            Err(QuandleError::IndexOutOfRange {
                index: x,
                n: self.n,
            })
        }
    }

    /// `a^b`.
    pub fn op(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.op_raw(a, b))
    }

    /// `a^{b^-1}`: the unique `c` with `c^b = a`.
    pub fn op_inv(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.op_inv_raw(a, b))
    }

    #[inline]
    pub(crate) fn op_raw(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub(crate) fn op_inv_raw(&self, a: usize, b: usize) -> usize {
        self.inv[a * self.n + b]
    }

    /// The inner map `rho_b : x -> x^b`.
    pub fn rho(&self, b: usize) -> Result<Permutation> {
        self.check_index(b)?;
        Ok(self.rho_raw(b))
    }

    pub(crate) fn rho_raw(&self, b: usize) -> Permutation {
        Permutation::from_images_unchecked((0..self.n).map(|x| self.op_raw(x, b)).collect())
    }

    /// `mu(x) = rho_x` for every element.
    pub fn inner_representation(&self) -> Vec<Permutation> {
        (0..self.n).map(|x| self.rho_raw(x)).collect()
    }

    /// Pairs `(x, y)` where `rho_{x^y}` differs from the conjugate
    /// `rho_y o rho_x o rho_y^-1`. Empty for every valid quandle.
    pub fn inner_representation_failures(&self) -> Vec<(usize, usize)> {
        let mu = self.inner_representation();
        let mu_inv: Vec<Permutation> = mu.iter().map(Permutation::inverse).collect();
        let mut failures = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let conj = mu[y].compose(&mu[x]).compose(&mu_inv[y]);
                if mu[self.op_raw(x, y)] != conj {
                    failures.push((x, y));
                }
            }
        }
        failures
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.op_raw(a, b) == a))
    }
}

/// `x^y = x` on `n` elements.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(QuandleError::EmptyCarrier);
    }
    Ok(FiniteQuandle::from_fn_unchecked(n, |a, _| a))
}

/// A finite group given by its multiplication table, `mul[a][b] = a*b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, the identity, inverses and associativity.
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_shape(&mul).map_err(|e| match e {
            QuandleError::MalformedTable(m) => QuandleError::InvalidGroup(m),
            other => other,
        })?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| QuandleError::InvalidGroup("no identity element".into()))?;
        let inverses = mul
            .iter()
            .enumerate()
            .map(|(x, row)| {
                (0..n)
                    .find(|&y| row[y] == identity && mul[y][x] == identity)
                    .ok_or_else(|| {
                        QuandleError::InvalidGroup(format!("element {x} has no inverse"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(QuandleError::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            mul,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.mul
    }
}

/// `a^b = b^-1 a b` on the elements of `group`.
pub fn conjugation_quandle(group: &GroupTable) -> FiniteQuandle {
    FiniteQuandle::from_fn_unchecked(group.order(), |a, b| {
        group.mul(group.mul(group.inverse(b), a), b)
    })
}

/// `{"n": .., "table": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

/// `{"n": .., "mul": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
}

impl TableJson {
    pub fn rows(self) -> Result<Vec<Vec<usize>>> {
        if self.n != self.table.len() {
            return Err(QuandleError::MalformedTable(format!(
                "declared n = {} but table has {} rows",
                self.n,
                self.table.len()
            )));
        }
        Ok(self.table)
    }
}

impl GroupJson {
    pub fn into_group(self) -> Result<GroupTable> {
        if self.n != self.mul.len() {
            return Err(QuandleError::InvalidGroup(format!(
                "declared n = {} but table has {} rows",
                self.n,
                self.mul.len()
            )));
        }
        GroupTable::new(self.mul)
    }
}

impl From<&FiniteQuandle> for TableJson {
    fn from(q: &FiniteQuandle) -> Self {
        TableJson {
            n: q.order(),
            table: q.rows(),
        }
    }
}

impl TryFrom<TableJson> for FiniteQuandle {
    type Error = QuandleError;

    fn try_from(j: TableJson) -> Result<Self> {
        FiniteQuandle::new(j.rows()?)
    }
}

impl Serialize for FiniteQuandle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteQuandle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableJson::deserialize(d)?;
        FiniteQuandle::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5_t2() -> FiniteQuandle {
        FiniteQuandle::from_fn_unchecked(5, |a, b| (2 * a + 4 * b) % 5)
    }

    /// S_3 acting on {1,2,3}, indexed e, (12), (13), (23), (123), (132).
    /// Products are computed by composing the actual permutations.
    pub(crate) fn s3_table() -> Vec<Vec<usize>> {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        // a*b = apply b after a, as functions on {0,1,2}
                        let pa = perms[a];
                        let pb = perms[b];
                        index([pb[pa[0]], pb[pa[1]], pb[pa[2]]])
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn trivial_tables() {
        assert_eq!(
            trivial_quandle(3).unwrap().rows(),
            vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]
        );
        assert_eq!(trivial_quandle(1).unwrap().rows(), vec![vec![0]]);
        assert!(
            validate_axioms(&trivial_quandle(4).unwrap().rows())
                .unwrap()
                .valid
        );
        assert_eq!(trivial_quandle(0), Err(QuandleError::EmptyCarrier));
    }

    #[test]
    fn non_bijective_column_is_reported() {
        let report = validate_axioms(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(
            report.violations[0],
            Violation {
                axiom: Axiom::RightInvertible,
                witness: vec![0, 0, 1]
            }
        );
    }

    #[test]
    fn non_idempotent_table_is_reported() {
        let report = validate_axioms(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation {
                axiom: Axiom::Idempotent,
                witness: vec![0]
            }]
        );
    }

    #[test]
    fn every_failing_axiom_is_reported() {
        // constant table: columns collapse, distributivity holds, 1^1 = 0
        let report = validate_axioms(&[vec![0, 0], vec![0, 0]]).unwrap();
        let axioms: Vec<_> = report.violations.iter().map(|v| v.axiom).collect();
        assert_eq!(axioms, vec![Axiom::RightInvertible, Axiom::Idempotent]);

        // a^b = a + 1 mod 3 is a rack-like table: bijective columns only
        let shift: Vec<Vec<usize>> = (0..3).map(|a| vec![(a + 1) % 3; 3]).collect();
        let report = validate_axioms(&shift).unwrap();
        assert_eq!(
            report.violation(Axiom::Idempotent).unwrap().witness,
            vec![0]
        );
        assert!(report.violation(Axiom::RightInvertible).is_none());
    }

    #[test]
    fn distributivity_witness_is_lexicographically_first() {
        // a^b = 2a - b mod 3 is a quandle; perturb it until axiom 2 breaks
        let mut t: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (2 * a + 2 * b) % 3).collect())
            .collect();
        assert!(validate_axioms(&t).unwrap().valid);
        t[1][0] = 0;
        t[0][0] = 2;
        let report = validate_axioms(&t).unwrap();
        let v = report.violation(Axiom::SelfDistributive).unwrap();
        // brute-force the first failing triple independently
        let first = (0..3)
            .flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| t[t[a][b]][c] != t[t[a][c]][t[b][c]])
            .unwrap();
        assert_eq!(v.witness, vec![first.0, first.1, first.2]);
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        assert!(matches!(
            validate_axioms(&[vec![0, 1], vec![0]]),
            Err(QuandleError::MalformedTable(_))
        ));
        assert!(matches!(
            validate_axioms(&[vec![0, 2], vec![1, 1]]),
            Err(QuandleError::MalformedTable(_))
        ));
        assert_eq!(validate_axioms(&[]), Err(QuandleError::EmptyCarrier));
    }

    #[test]
    fn z6_affine_table_is_valid() {
        let t: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| (5 * a + 2 * b) % 6).collect())
            .collect();
        assert!(validate_axioms(&t).unwrap().valid);
    }

    #[test]
    fn op_and_inverse() {
        let q = z5_t2();
        assert_eq!(q.op(1, 0).unwrap(), 2);
        assert_eq!(q.op(3, 3).unwrap(), 3);
        assert_eq!(q.op(0, 1).unwrap(), 4);
        assert_eq!(q.op_inv(2, 0).unwrap(), 1);
        assert_eq!(q.op_inv(0, 1).unwrap(), 3);
        for x in 0..5 {
            assert_eq!(q.op_inv(x, x).unwrap(), x);
        }
        assert_eq!(
            q.op(5, 0),
            Err(QuandleError::IndexOutOfRange { index: 5, n: 5 })
        );
        assert!(q.op_inv(0, 7).is_err());
        assert!(q.rho(5).is_err());
    }

    #[test]
    fn rho_images() {
        let q = z5_t2();
        assert_eq!(q.rho(0).unwrap().images(), &[0, 2, 4, 1, 3]);
        assert_eq!(q.rho(1).unwrap().images(), &[4, 1, 3, 0, 2]);
        let t = trivial_quandle(4).unwrap();
        assert!((0..4).all(|b| t.rho(b).unwrap().is_identity()));
    }

    #[test]
    fn conjugation_of_s3() {
        let g = GroupTable::new(s3_table()).unwrap();
        let q = conjugation_quandle(&g);
        assert_eq!(q.op(1, 2).unwrap(), 3);
        assert!(validate_axioms(&q.rows()).unwrap().valid);
        assert!(q.inner_representation_failures().is_empty());
        let mu = q.inner_representation();
        let (r1, r2) = (&mu[1], &mu[2]);
        assert_eq!(
            mu[q.op(1, 2).unwrap()],
            r2.compose(r1).compose(&r2.inverse())
        );
    }

    #[test]
    fn abelian_groups_give_trivial_quandles() {
        let z4: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        let klein: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        for mul in [z4, klein] {
            let q = conjugation_quandle(&GroupTable::new(mul).unwrap());
            assert_eq!(q, trivial_quandle(4).unwrap());
        }
    }

    #[test]
    fn group_validation_rejects_garbage() {
        // no identity
        assert!(GroupTable::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        // a latin square with identity 0 that is not associative
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupTable::new(loop5),
            Err(QuandleError::InvalidGroup(_))
        ));
    }

    #[test]
    fn inner_representation_cases() {
        assert!(trivial_quandle(3)
            .unwrap()
            .inner_representation()
            .iter()
            .all(Permutation::is_identity));
        let mu = z5_t2().inner_representation();
        let distinct: std::collections::HashSet<_> = mu.iter().collect();
        assert_eq!(distinct.len(), 5);
        assert!(z5_t2().inner_representation_failures().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let q = z5_t2();
        let s = serde_json::to_string(&q).unwrap();
        assert!(s.starts_with("{\"n\":5,\"table\":[[0,4,3,2,1]"));
        let back: FiniteQuandle = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(
            serde_json::from_str::<FiniteQuandle>("{\"n\":2,\"table\":[[0,0],[0,1]]}").is_err()
        );
    }
}
