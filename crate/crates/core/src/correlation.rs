//! Probability tables for the two-input/two-output scenario, correlations,
//! the CHSH combination and the formal locality checkers.
//!
//! Outcome bits map to signs as `0 -> +1`, `1 -> -1` everywhere in the crate.

use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for all table-level equality checks.
pub const TABLE_TOLERANCE: f64 = 1e-12;

/// Largest |F| attainable by local hidden-variable models.
pub const CHSH_LOCAL_BOUND: f64 = 2.0;

/// Largest |F| attainable by quantum correlations.
pub const TSIRELSON_BOUND: f64 = 2.0 * SQRT_2;

/// Algebraic maximum of |F|.
pub const CHSH_ALGEBRAIC_BOUND: f64 = 4.0;

/// Slack used when placing a CHSH value on a class boundary, so that values
/// landing on `2` or `2√2` up to rounding fall into the weaker class.
pub const CLASS_BOUNDARY_SLACK: f64 = 1e-12;

fn check_bit(name: &str, bit: u8) {
    assert!(bit <= 1, "{name} must be a bit, got {bit}");
}

/// A dichotomic outcome in the ±1 convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignOutcome {
    Plus,
    Minus,
}

impl SignOutcome {
    /// Sign of `r`, with `sgn(0) = +1`.
    pub fn of(r: f64) -> Self {
        if r < 0.0 {
            SignOutcome::Minus
        } else {
            SignOutcome::Plus
        }
    }

    /// `0 -> +1`, `1 -> -1`.
    pub fn from_bit(bit: u8) -> Self {
        check_bit("outcome", bit);
        if bit == 0 {
            SignOutcome::Plus
        } else {
            SignOutcome::Minus
        }
    }

    pub fn to_bit(self) -> u8 {
        match self {
            SignOutcome::Plus => 0,
            SignOutcome::Minus => 1,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            SignOutcome::Plus => 1,
            SignOutcome::Minus => -1,
        }
    }
}

impl Neg for SignOutcome {
    type Output = SignOutcome;

    fn neg(self) -> SignOutcome {
        match self {
            SignOutcome::Plus => SignOutcome::Minus,
            SignOutcome::Minus => SignOutcome::Plus,
        }
    }
}

impl Mul for SignOutcome {
    type Output = SignOutcome;

    fn mul(self, rhs: SignOutcome) -> SignOutcome {
        if self == rhs {
            SignOutcome::Plus
        } else {
            SignOutcome::Minus
        }
    }
}

#[inline]
fn setting_index(x: u8, y: u8) -> usize {
    check_bit("x", x);
    check_bit("y", y);
    (2 * x + y) as usize
}

#[inline]
fn outcome_index(a: u8, b: u8) -> usize {
    check_bit("a", a);
    check_bit("b", b);
    (2 * a + b) as usize
}

/// Conditional distribution `P(a, b | x, y)` with `x, y, a, b ∈ {0, 1}`.
///
/// Serialized as a JSON object keyed `"x,y"`, each value holding the row
/// `[P(0,0), P(0,1), P(1,0), P(1,1)]` for that setting pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "BTreeMap<String, [f64; 4]>",
    into = "BTreeMap<String, [f64; 4]>"
)]
pub struct BoxTable {
    rows: [[f64; 4]; 4],
}

impl BoxTable {
    /// Builds a table from rows indexed by `2x + y`, each row indexed by `2a + b`.
    pub fn new(rows: [[f64; 4]; 4]) -> Result<Self> {
        for (s, row) in rows.iter().enumerate() {
            let (x, y) = (s / 2, s % 2);
            for (o, &p) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidTable(format!(
                        "P({},{}|{x},{y}) = {p} is not a probability",
                        o / 2,
                        o % 2
                    )));
                }
            }
            let total: f64 = row.iter().sum();
            if (total - 1.0).abs() > TABLE_TOLERANCE {
                return Err(Error::InvalidTable(format!(
                    "row ({x},{y}) sums to {total}"
                )));
            }
        }
        Ok(BoxTable { rows })
    }

    pub fn from_fn(f: impl Fn(u8, u8, u8, u8) -> f64) -> Result<Self> {
        let mut rows = [[0.0; 4]; 4];
        for x in 0..2u8 {
            for y in 0..2u8 {
                for a in 0..2u8 {
                    for b in 0..2u8 {
                        rows[setting_index(x, y)][outcome_index(a, b)] = f(x, y, a, b);
                    }
                }
            }
        }
        BoxTable::new(rows)
    }

    /// Every entry `1/4`.
    pub fn uniform() -> Self {
        BoxTable {
            rows: [[0.25; 4]; 4],
        }
    }

    /// Table with a single outcome pair per setting pair.
    pub fn deterministic(outputs: impl Fn(u8, u8) -> (u8, u8)) -> Self {
        let mut rows = [[0.0; 4]; 4];
        for x in 0..2u8 {
            for y in 0..2u8 {
                let (a, b) = outputs(x, y);
                rows[setting_index(x, y)][outcome_index(a, b)] = 1.0;
            }
        }
        BoxTable { rows }
    }

    /// `P(a|x) P(b|y)` from `alice[x][a]` and `bob[y][b]`.
    pub fn product(alice: [[f64; 2]; 2], bob: [[f64; 2]; 2]) -> Result<Self> {
        BoxTable::from_fn(|x, y, a, b| alice[x as usize][a as usize] * bob[y as usize][b as usize])
    }

    /// Convex combination `Σ w_k T_k`; weights must be non-negative and sum to one.
    pub fn mixture(components: &[(f64, BoxTable)]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("empty mixture".into()));
        }
        if components.iter().any(|(w, _)| *w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidArgument(
                "mixture weights must be non-negative".into(),
            ));
        }
        let total: f64 = components.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > TABLE_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "mixture weights sum to {total}"
            )));
        }
        let mut rows = [[0.0; 4]; 4];
        for (w, t) in components {
            for (acc, row) in rows.iter_mut().zip(t.rows.iter()) {
                for (r, p) in acc.iter_mut().zip(row.iter()) {
                    *r += w * p;
                }
            }
        }
        BoxTable::new(rows)
    }

    pub fn prob(&self, x: u8, y: u8, a: u8, b: u8) -> f64 {
        self.rows[setting_index(x, y)][outcome_index(a, b)]
    }

    /// Row for setting pair `(x, y)` in `(a, b)` order `00, 01, 10, 11`.
    pub fn row(&self, x: u8, y: u8) -> [f64; 4] {
        self.rows[setting_index(x, y)]
    }

    /// `P(a | x, y)`.
    pub fn alice_marginal(&self, x: u8, y: u8, a: u8) -> f64 {
        self.prob(x, y, a, 0) + self.prob(x, y, a, 1)
    }

    /// `P(b | x, y)`.
    pub fn bob_marginal(&self, x: u8, y: u8, b: u8) -> f64 {
        self.prob(x, y, 0, b) + self.prob(x, y, 1, b)
    }
}

impl TryFrom<BTreeMap<String, [f64; 4]>> for BoxTable {
    type Error = Error;

    fn try_from(map: BTreeMap<String, [f64; 4]>) -> Result<Self> {
        if map.len() != 4 {
            return Err(Error::InvalidTable(format!(
                "expected 4 setting rows, found {}",
                map.len()
            )));
        }
        let mut rows = [[0.0; 4]; 4];
        for x in 0..2u8 {
            for y in 0..2u8 {
                let key = format!("{x},{y}");
                let row = map
                    .get(&key)
                    .ok_or_else(|| Error::InvalidTable(format!("missing row \"{key}\"")))?;
                rows[setting_index(x, y)] = *row;
            }
        }
        BoxTable::new(rows)
    }
}

impl From<BoxTable> for BTreeMap<String, [f64; 4]> {
    fn from(t: BoxTable) -> Self {
        let mut map = BTreeMap::new();
        for x in 0..2u8 {
            for y in 0..2u8 {
                map.insert(format!("{x},{y}"), t.row(x, y));
            }
        }
        map
    }
}

impl fmt::Display for BoxTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x y | P(0,0)   P(0,1)   P(1,0)   P(1,1)")?;
        for x in 0..2u8 {
            for y in 0..2u8 {
                let r = self.row(x, y);
                writeln!(
                    f,
                    "{x} {y} | {:.6} {:.6} {:.6} {:.6}",
                    r[0], r[1], r[2], r[3]
                )?;
            }
        }
        Ok(())
    }
}

/// `E(x, y) = P(equal signs | x, y) - P(unequal signs | x, y)`.
pub fn correlation_from_table(t: &BoxTable, x: u8, y: u8) -> f64 {
    let r = t.row(x, y);
    (r[0] + r[3]) - (r[1] + r[2])
}

/// The four correlations with `a, a'` the settings `x = 0, 1` and `b, b'` the
/// settings `y = 0, 1`.
pub fn correlations_from_table(t: &BoxTable) -> CorrelationSet {
    CorrelationSet {
        e_ab: correlation_from_table(t, 0, 0),
        e_ab_prime: correlation_from_table(t, 0, 1),
        e_a_prime_b: correlation_from_table(t, 1, 0),
        e_a_prime_b_prime: correlation_from_table(t, 1, 1),
    }
}

/// The four correlations entering the CHSH combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSet {
    e_ab: f64,
    e_ab_prime: f64,
    e_a_prime_b: f64,
    e_a_prime_b_prime: f64,
}

impl CorrelationSet {
    pub fn new(
        e_ab: f64,
        e_ab_prime: f64,
        e_a_prime_b: f64,
        e_a_prime_b_prime: f64,
    ) -> Result<Self> {
        for (name, e) in [
            ("E(a,b)", e_ab),
            ("E(a,b')", e_ab_prime),
            ("E(a',b)", e_a_prime_b),
            ("E(a',b')", e_a_prime_b_prime),
        ] {
            if !e.is_finite() || e.abs() > 1.0 + TABLE_TOLERANCE {
                return Err(Error::InvalidArgument(format!(
                    "{name} = {e} outside [-1, 1]"
                )));
            }
        }
        Ok(CorrelationSet {
            e_ab,
            e_ab_prime,
            e_a_prime_b,
            e_a_prime_b_prime,
        })
    }

    pub fn e_ab(&self) -> f64 {
        self.e_ab
    }

    pub fn e_ab_prime(&self) -> f64 {
        self.e_ab_prime
    }

    pub fn e_a_prime_b(&self) -> f64 {
        self.e_a_prime_b
    }

    pub fn e_a_prime_b_prime(&self) -> f64 {
        self.e_a_prime_b_prime
    }

    /// `[E(a,b), E(a,b'), E(a',b), E(a',b')]`.
    pub fn as_array(&self) -> [f64; 4] {
        [
            self.e_ab,
            self.e_ab_prime,
            self.e_a_prime_b,
            self.e_a_prime_b_prime,
        ]
    }
}

/// Three-way classification of a CHSH value by its magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NonlocalityClass {
    #[serde(rename = "local")]
    Local,
    #[serde(rename = "quantum")]
    QuantumNonlocal,
    #[serde(rename = "superquantum")]
    Superquantum,
}

impl NonlocalityClass {
    /// `|f| ≤ 2` local, `2 < |f| ≤ 2√2` quantum, above that superquantum.
    /// Both boundaries are closed on the weaker side.
    pub fn classify(f: f64) -> Self {
        let m = f.abs();
        if m <= CHSH_LOCAL_BOUND + CLASS_BOUNDARY_SLACK {
            NonlocalityClass::Local
        } else if m <= TSIRELSON_BOUND + CLASS_BOUNDARY_SLACK {
            NonlocalityClass::QuantumNonlocal
        } else {
            NonlocalityClass::Superquantum
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NonlocalityClass::Local => "local",
            NonlocalityClass::QuantumNonlocal => "quantum",
            NonlocalityClass::Superquantum => "superquantum",
        }
    }
}

impl fmt::Display for NonlocalityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChshReport {
    pub f: f64,
    pub class: NonlocalityClass,
}

/// `F = E(a,b) + E(a,b') + E(a',b) - E(a',b')`.
pub fn chsh_value(c: &CorrelationSet) -> ChshReport {
    let f = c.e_ab + c.e_ab_prime + c.e_a_prime_b - c.e_a_prime_b_prime;
    ChshReport {
        f,
        class: NonlocalityClass::classify(f),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Bob,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignalingReport {
    pub holds: bool,
    pub max_deviation: f64,
}

/// A tuple where a party's outcome distribution moves with the remote outcome.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutcomeWitness {
    pub x: u8,
    pub y: u8,
    /// Party whose outcome distribution is examined.
    pub party: Party,
    /// Remote outcome conditioned on.
    pub conditioned_on: u8,
    pub outcome: u8,
    pub conditional: f64,
    pub marginal: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutcomeIndependenceReport {
    pub holds: bool,
    pub witness: Option<OutcomeWitness>,
}

/// A tuple where a party's outcome distribution moves with the remote setting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SettingWitness {
    pub party: Party,
    pub local_setting: u8,
    pub outcome: u8,
    /// Probability of `outcome` with the remote setting at 0 and at 1.
    pub given_remote: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParameterIndependenceReport {
    pub holds: bool,
    pub max_deviation: f64,
    pub witness: Option<SettingWitness>,
}

/// Largest change of a local marginal under a change of the remote setting,
/// together with the first tuple (Alice before Bob) exceeding `tol`.
fn marginal_shift(t: &BoxTable, tol: f64) -> (f64, Option<SettingWitness>) {
    let mut max_dev: f64 = 0.0;
    let mut witness = None;
    for x in 0..2u8 {
        for a in 0..2u8 {
            let p = [t.alice_marginal(x, 0, a), t.alice_marginal(x, 1, a)];
            let dev = (p[0] - p[1]).abs();
            max_dev = max_dev.max(dev);
            if dev > tol && witness.is_none() {
                witness = Some(SettingWitness {
                    party: Party::Alice,
                    local_setting: x,
                    outcome: a,
                    given_remote: p,
                });
            }
        }
    }
    for y in 0..2u8 {
        for b in 0..2u8 {
            let p = [t.bob_marginal(0, y, b), t.bob_marginal(1, y, b)];
            let dev = (p[0] - p[1]).abs();
            max_dev = max_dev.max(dev);
            if dev > tol && witness.is_none() {
                witness = Some(SettingWitness {
                    party: Party::Bob,
                    local_setting: y,
                    outcome: b,
                    given_remote: p,
                });
            }
        }
    }
    (max_dev, witness)
}

pub fn check_no_signaling(t: &BoxTable) -> SignalingReport {
    check_no_signaling_within(t, TABLE_TOLERANCE)
}

/// Marginals of `a` independent of `y` and of `b` independent of `x`.
pub fn check_no_signaling_within(t: &BoxTable, tol: f64) -> SignalingReport {
    let (max_deviation, _) = marginal_shift(t, tol);
    SignalingReport {
        holds: max_deviation <= tol,
        max_deviation,
    }
}

pub fn check_parameter_independence(t: &BoxTable) -> ParameterIndependenceReport {
    check_parameter_independence_within(t, TABLE_TOLERANCE)
}

/// At the table level parameter independence is marginal invariance under
/// the remote setting; the report also carries the first violating tuple.
pub fn check_parameter_independence_within(t: &BoxTable, tol: f64) -> ParameterIndependenceReport {
    let (max_deviation, witness) = marginal_shift(t, tol);
    ParameterIndependenceReport {
        holds: witness.is_none(),
        max_deviation,
        witness,
    }
}

pub fn check_outcome_independence(t: &BoxTable) -> OutcomeIndependenceReport {
    check_outcome_independence_within(t, TABLE_TOLERANCE)
}

/// `P(a|x,y,b) = P(a|x,y)` and `P(b|x,y,a) = P(b|x,y)` wherever the
/// conditioning outcome has probability above `tol`.
pub fn check_outcome_independence_within(t: &BoxTable, tol: f64) -> OutcomeIndependenceReport {
    for x in 0..2u8 {
        for y in 0..2u8 {
            for b in 0..2u8 {
                let pb = t.bob_marginal(x, y, b);
                if pb <= tol {
                    continue;
                }
                for a in 0..2u8 {
                    let conditional = t.prob(x, y, a, b) / pb;
                    let marginal = t.alice_marginal(x, y, a);
                    if (conditional - marginal).abs() > tol {
                        return OutcomeIndependenceReport {
                            holds: false,
                            witness: Some(OutcomeWitness {
                                x,
                                y,
                                party: Party::Alice,
                                conditioned_on: b,
                                outcome: a,
                                conditional,
                                marginal,
                            }),
                        };
                    }
                }
            }
            for a in 0..2u8 {
                let pa = t.alice_marginal(x, y, a);
                if pa <= tol {
                    continue;
                }
                for b in 0..2u8 {
                    let conditional = t.prob(x, y, a, b) / pa;
                    let marginal = t.bob_marginal(x, y, b);
                    if (conditional - marginal).abs() > tol {
                        return OutcomeIndependenceReport {
                            holds: false,
                            witness: Some(OutcomeWitness {
                                x,
                                y,
                                party: Party::Bob,
                                conditioned_on: a,
                                outcome: b,
                                conditional,
                                marginal,
                            }),
                        };
                    }
                }
            }
        }
    }
    OutcomeIndependenceReport {
        holds: true,
        witness: None,
    }
}

pub fn locality_check(t: &BoxTable) -> bool {
    locality_check_within(t, TABLE_TOLERANCE)
}

/// `P(a,b|x,y) = P(a|x) P(b|y)` for every tuple, with the one-sided
/// marginals read at the remote setting 0.
pub fn locality_check_within(t: &BoxTable, tol: f64) -> bool {
    for x in 0..2u8 {
        for y in 0..2u8 {
            for a in 0..2u8 {
                for b in 0..2u8 {
                    let factorized = t.alice_marginal(x, 0, a) * t.bob_marginal(0, y, b);
                    if (t.prob(x, y, a, b) - factorized).abs() > tol {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal_pr() -> BoxTable {
        BoxTable::from_fn(|x, y, a, b| if (a + b) % 2 == x * y { 0.5 } else { 0.0 }).unwrap()
    }

    #[test]
    fn pr_correlations() {
        let t = ideal_pr();
        assert_eq!(correlation_from_table(&t, 0, 0), 1.0);
        assert_eq!(correlation_from_table(&t, 1, 1), -1.0);
    }

    #[test]
    fn uniform_table_is_uncorrelated() {
        let t = BoxTable::uniform();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(correlation_from_table(&t, x, y), 0.0);
            }
        }
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut rows = [[0.25; 4]; 4];
        rows[2][1] = 0.3;
        assert!(matches!(BoxTable::new(rows), Err(Error::InvalidTable(_))));
        rows[2][1] = -0.25;
        rows[2][0] = 0.75;
        assert!(BoxTable::new(rows).is_err());
    }

    #[test]
    fn chsh_examples() {
        let r = chsh_value(&CorrelationSet::new(1.0, 1.0, 1.0, -1.0).unwrap());
        assert_eq!(r.f, 4.0);
        assert_eq!(r.class, NonlocalityClass::Superquantum);

        let r = chsh_value(&CorrelationSet::new(0.0, 0.0, 0.0, 0.0).unwrap());
        assert_eq!(r.f, 0.0);
        assert_eq!(r.class, NonlocalityClass::Local);
    }

    #[test]
    fn class_boundaries_fall_to_weaker_class() {
        assert_eq!(NonlocalityClass::classify(2.0), NonlocalityClass::Local);
        assert_eq!(NonlocalityClass::classify(-2.0), NonlocalityClass::Local);
        assert_eq!(
            NonlocalityClass::classify(2.0 + 1e-9),
            NonlocalityClass::QuantumNonlocal
        );
        assert_eq!(
            NonlocalityClass::classify(TSIRELSON_BOUND),
            NonlocalityClass::QuantumNonlocal
        );
        assert_eq!(
            NonlocalityClass::classify(-TSIRELSON_BOUND),
            NonlocalityClass::QuantumNonlocal
        );
        assert_eq!(
            NonlocalityClass::classify(TSIRELSON_BOUND + 1e-9),
            NonlocalityClass::Superquantum
        );
    }

    #[test]
    fn correlation_set_rejects_out_of_range() {
        assert!(CorrelationSet::new(1.5, 0.0, 0.0, 0.0).is_err());
        assert!(CorrelationSet::new(0.0, 0.0, f64::NAN, 0.0).is_err());
    }

    #[test]
    fn no_signaling_examples() {
        let r = check_no_signaling(&ideal_pr());
        assert!(r.holds);
        assert_eq!(r.max_deviation, 0.0);

        // P(a=0|x=0,y=0) = 1 against P(a=0|x=0,y=1) = 1/2
        let t = BoxTable::from_fn(|x, y, a, _| match (x, y) {
            (0, 0) => {
                if a == 0 {
                    0.5
                } else {
                    0.0
                }
            }
            _ => 0.25,
        })
        .unwrap();
        let r = check_no_signaling(&t);
        assert!(!r.holds);
        assert!((r.max_deviation - 0.5).abs() < 1e-15);

        let p = BoxTable::product([[0.3, 0.7], [0.9, 0.1]], [[0.5, 0.5], [0.2, 0.8]]).unwrap();
        assert!(check_no_signaling(&p).holds);
    }

    #[test]
    fn pr_outcome_independence_witness() {
        let r = check_outcome_independence(&ideal_pr());
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(
            (w.x, w.y, w.party, w.conditioned_on, w.outcome),
            (0, 0, Party::Alice, 0, 0)
        );
        assert_eq!(w.conditional, 1.0);
        assert_eq!(w.marginal, 0.5);
    }

    #[test]
    fn deterministic_tables_satisfy_oi() {
        let t = BoxTable::deterministic(|x, y| (x ^ y, x & y));
        assert!(check_outcome_independence(&t).holds);
        let p = BoxTable::product([[0.3, 0.7], [0.9, 0.1]], [[0.5, 0.5], [0.2, 0.8]]).unwrap();
        assert!(check_outcome_independence(&p).holds);
    }

    #[test]
    fn parameter_independence_examples() {
        assert!(check_parameter_independence(&ideal_pr()).holds);
        let p = BoxTable::product([[1.0, 0.0], [0.4, 0.6]], [[0.5, 0.5], [0.2, 0.8]]).unwrap();
        assert!(check_parameter_independence(&p).holds);
        // b copies x
        let t = BoxTable::deterministic(|x, _| (0, x));
        let r = check_parameter_independence(&t);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.party, Party::Bob);
        assert_eq!(w.given_remote, [1.0, 0.0]);
    }

    #[test]
    fn locality_examples() {
        let p = BoxTable::product([[0.3, 0.7], [0.9, 0.1]], [[0.5, 0.5], [0.2, 0.8]]).unwrap();
        assert!(locality_check(&p));
        assert!(!locality_check(&ideal_pr()));
    }

    #[test]
    fn json_layout() {
        let t = ideal_pr();
        let v = serde_json::to_value(t).unwrap();
        assert_eq!(v["0,0"], serde_json::json!([0.5, 0.0, 0.0, 0.5]));
        assert_eq!(v["1,1"], serde_json::json!([0.0, 0.5, 0.5, 0.0]));
        let back: BoxTable = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_rejects_bad_tables() {
        let missing = r#"{"0,0":[1,0,0,0],"0,1":[1,0,0,0],"1,0":[1,0,0,0]}"#;
        assert!(serde_json::from_str::<BoxTable>(missing).is_err());
        let unnormalized = r#"{"0,0":[1,0,0,0],"0,1":[1,0,0,0],"1,0":[1,0,0,0],"1,1":[0.5,0,0,0]}"#;
        assert!(serde_json::from_str::<BoxTable>(unnormalized).is_err());
    }

    #[test]
    fn sign_outcome_algebra() {
        assert_eq!(SignOutcome::of(0.3), SignOutcome::Plus);
        assert_eq!(SignOutcome::of(-2.0), SignOutcome::Minus);
        assert_eq!(SignOutcome::of(0.0), SignOutcome::Plus);
        assert_eq!(SignOutcome::from_bit(1).value(), -1);
        assert_eq!(-SignOutcome::Plus, SignOutcome::Minus);
        assert_eq!(SignOutcome::Minus * SignOutcome::Minus, SignOutcome::Plus);
        for bit in 0..2 {
            assert_eq!(SignOutcome::from_bit(bit).to_bit(), bit);
        }
    }
}
