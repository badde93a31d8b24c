//! Closed-form alternation sets from the printed inequality tables.
//!
//! Every condition is an affine inequality `k1·v1 + k2·v2 + k3·n + k4·m + k0 ≥ 0`
//! in the theorem variables: (c1, c2, n, m) in fundamental coordinates for
//! B2/C2/D2, root coordinates for G2, and (x, y, n, m) for A2 where
//! λ = (3x+y)ϖ1 + yϖ2 and μ = nα1 + mα2.

use crate::kwmf::AltSet;
use crate::rootsys::{weyl_group, Algebra, WeylElement};
use crate::weightlat::{in_root_lattice, sl3_param_rational, to_fund_basis, FundCoords, Weight};
use crate::Q;
use num_rational::Ratio;
use num_traits::Zero;
use std::fmt::Write as _;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AltCondError {
    #[error("{alg} has no condition labelled `{label}`")]
    UnknownCondition { alg: Algebra, label: String },
    #[error("{0} has no printed case table")]
    NoCaseTable(Algebra),
    #[error("cases `{first}` and `{second}` both match")]
    DoubleMatch { first: String, second: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("`{0}` is not a word in the Weyl group")]
    UnknownWord(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub coeffs: [Q; 4],
    pub constant: Q,
}

impl Condition {
    pub fn value(&self, vars: &[Q; 4]) -> Q {
        self.coeffs.iter().zip(vars).fold(self.constant, |acc, (k, v)| acc + *k * *v)
    }

    pub fn holds(&self, vars: &[Q; 4]) -> bool {
        self.value(vars) >= Q::zero()
    }
}

const fn q(n: i64, d: i64) -> Q {
    Ratio::new_raw(n, d)
}

const fn z(n: i64) -> Q {
    Ratio::new_raw(n, 1)
}

type Row = (&'static str, [Q; 4], Q);

// (c1, c2, n, m) | constant
const B2_CONDITIONS: [Row; 8] = [
    ("J1", [z(1), q(1, 2), z(-1), q(-1, 2)], z(0)),
    ("J2", [z(1), z(1), z(-1), z(-1)], z(0)),
    ("J3", [z(0), q(1, 2), z(-1), q(-1, 2)], z(-1)),
    ("J4", [z(1), z(0), z(-1), z(-1)], z(-1)),
    ("J5", [z(-1), z(0), z(-1), z(-1)], z(-3)),
    ("J6", [z(0), q(-1, 2), z(-1), q(-1, 2)], z(-2)),
    ("J7", [z(-1), q(-1, 2), z(-1), q(-1, 2)], z(-3)),
    ("J8", [z(-1), z(-1), z(-1), z(-1)], z(-4)),
];

const C2_CONDITIONS: [Row; 8] = [
    ("L1", [z(1), z(1), z(-1), z(-1)], z(0)),
    ("L2", [q(1, 2), z(1), q(-1, 2), z(-1)], z(0)),
    ("L3", [z(0), z(1), z(-1), z(-1)], z(-1)),
    ("L4", [q(1, 2), z(0), q(-1, 2), z(-1)], z(-1)),
    ("L5", [q(-1, 2), z(0), q(-1, 2), z(-1)], z(-2)),
    ("L6", [z(0), z(-1), z(-1), z(-1)], z(-3)),
    ("L7", [z(-1), z(-1), z(-1), z(-1)], z(-4)),
    ("L8", [q(-1, 2), z(-1), q(-1, 2), z(-1)], z(-3)),
];

// unlabeled in the theorem; I1..I4 in statement order
const D2_CONDITIONS: [Row; 4] = [
    ("I1", [q(1, 2), z(0), q(-1, 2), z(0)], z(0)),
    ("I2", [q(-1, 2), z(0), q(-1, 2), z(0)], z(-1)),
    ("I3", [z(0), q(1, 2), z(0), q(-1, 2)], z(0)),
    ("I4", [z(0), q(-1, 2), z(0), q(-1, 2)], z(-1)),
];

const G2_CONDITIONS: [Row; 12] = [
    ("K1", [z(1), z(0), z(-1), z(0)], z(0)),
    ("K2", [z(0), z(1), z(0), z(-1)], z(0)),
    ("K3", [z(-1), z(3), z(-1), z(0)], z(-1)),
    ("K4", [z(1), z(-1), z(0), z(-1)], z(-1)),
    ("K5", [z(2), z(-3), z(-1), z(0)], z(-4)),
    ("K6", [z(-1), z(2), z(0), z(-1)], z(-2)),
    ("K7", [z(-1), z(0), z(-1), z(0)], z(-10)),
    ("K8", [z(0), z(-1), z(0), z(-1)], z(-6)),
    ("K9", [z(1), z(-3), z(-1), z(0)], z(-9)),
    ("K10", [z(-1), z(1), z(0), z(-1)], z(-5)),
    ("K11", [z(-2), z(3), z(-1), z(0)], z(-6)),
    ("K12", [z(1), z(-2), z(0), z(-1)], z(-4)),
];

// (x, y, n, m) | constant
const A2_CONDITIONS: [Row; 6] = [
    ("T1", [z(2), z(1), z(-1), z(0)], z(0)),
    ("T2", [z(1), z(1), z(0), z(-1)], z(0)),
    ("T3", [z(-1), z(0), z(-1), z(0)], z(-1)),
    ("T4", [z(1), z(0), z(0), z(-1)], z(-1)),
    ("T5", [z(-1), z(-1), z(-1), z(0)], z(-2)),
    ("T6", [z(-2), z(-1), z(0), z(-1)], z(-2)),
];

type Member = (&'static str, &'static str, &'static str);

const B2_MEMBERS: [Member; 8] = [
    ("1", "J1", "J2"),
    ("s1", "J3", "J2"),
    ("s2", "J1", "J4"),
    ("s2s1", "J3", "J5"),
    ("s1s2", "J6", "J4"),
    ("s1s2s1", "J7", "J5"),
    ("s2s1s2", "J6", "J8"),
    ("s2s1s2s1", "J7", "J8"),
];

const C2_MEMBERS: [Member; 8] = [
    ("1", "L1", "L2"),
    ("s1", "L3", "L2"),
    ("s2", "L1", "L4"),
    ("s2s1", "L3", "L5"),
    ("s1s2", "L6", "L4"),
    ("s1s2s1", "L7", "L5"),
    ("s2s1s2", "L6", "L8"),
    ("s2s1s2s1", "L7", "L8"),
];

const D2_MEMBERS: [Member; 4] = [
    ("1", "I1", "I3"),
    ("s1", "I2", "I3"),
    ("s2", "I1", "I4"),
    ("s2s1", "I2", "I4"),
];

const G2_MEMBERS: [Member; 12] = [
    ("1", "K1", "K2"),
    ("s1", "K3", "K2"),
    ("s2", "K1", "K4"),
    ("s2s1", "K3", "K6"),
    ("s1s2", "K5", "K4"),
    ("s1s2s1", "K11", "K6"),
    ("s2s1s2", "K5", "K12"),
    ("s2s1s2s1", "K11", "K10"),
    ("s1s2s1s2", "K9", "K12"),
    ("s1s2s1s2s1", "K7", "K10"),
    ("s2s1s2s1s2", "K9", "K8"),
    ("s1s2s1s2s1s2", "K7", "K8"),
];

const A2_MEMBERS: [Member; 6] = [
    ("1", "T1", "T2"),
    ("s1", "T3", "T2"),
    ("s2", "T1", "T4"),
    ("s1s2", "T5", "T4"),
    ("s2s1", "T3", "T6"),
    ("s1s2s1", "T5", "T6"),
];

fn rows(alg: Algebra) -> &'static [Row] {
    match alg {
        Algebra::A2 => &A2_CONDITIONS,
        Algebra::B2 => &B2_CONDITIONS,
        Algebra::C2 => &C2_CONDITIONS,
        Algebra::D2 => &D2_CONDITIONS,
        Algebra::G2 => &G2_CONDITIONS,
    }
}

fn members(alg: Algebra) -> &'static [Member] {
    match alg {
        Algebra::A2 => &A2_MEMBERS,
        Algebra::B2 => &B2_MEMBERS,
        Algebra::C2 => &C2_MEMBERS,
        Algebra::D2 => &D2_MEMBERS,
        Algebra::G2 => &G2_MEMBERS,
    }
}

/// The four theorem variables for (λ, μ); see the module docs.
pub fn theorem_vars(alg: Algebra, lambda: &Weight, mu: &Weight) -> [Q; 4] {
    match alg {
        Algebra::G2 => [lambda.a1, lambda.a2, mu.a1, mu.a2],
        Algebra::A2 => {
            let (c1, c2) = to_fund_basis(alg, *lambda);
            let (x, y) = sl3_param_rational(c1, c2);
            [x, y, mu.a1, mu.a2]
        }
        _ => {
            let (c1, c2) = to_fund_basis(alg, *lambda);
            let (n, m) = to_fund_basis(alg, *mu);
            [c1, c2, n, m]
        }
    }
}

/// λ − μ lies in the root lattice.
pub fn lattice_compatible(alg: Algebra, lambda: &Weight, mu: &Weight) -> bool {
    let (c1, c2) = to_fund_basis(alg, *lambda - *mu);
    c1.is_integer() && c2.is_integer() && in_root_lattice(alg, FundCoords::new(c1.to_integer(), c2.to_integer()))
}

/// A condition table plus the per-element pairing of conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub algebra: Algebra,
    pub conditions: Vec<Condition>,
    /// Indexed by canonical group element: positions of its two conditions.
    pairs: Vec<[usize; 2]>,
}

impl ClosedForm {
    fn build(alg: Algebra, conditions: Vec<Condition>) -> Result<Self, AltCondError> {
        let group = weyl_group(alg);
        let find = |label: &str| {
            conditions
                .iter()
                .position(|c| c.label == label)
                .ok_or_else(|| AltCondError::UnknownCondition { alg, label: label.to_string() })
        };
        let mut pairs = vec![[usize::MAX; 2]; group.len()];
        for &(word, a, b) in members(alg) {
            let idx = group.find_word(word).ok_or_else(|| AltCondError::UnknownWord(word.to_string()))?;
            pairs[idx] = [find(a)?, find(b)?];
        }
        debug_assert!(pairs.iter().all(|p| p[0] != usize::MAX));
        Ok(ClosedForm { algebra: alg, conditions, pairs })
    }

    pub fn standard(alg: Algebra) -> &'static ClosedForm {
        static FORMS: OnceLock<Vec<ClosedForm>> = OnceLock::new();
        &FORMS.get_or_init(|| {
            Algebra::ALL
                .iter()
                .map(|&a| {
                    let conds = rows(a)
                        .iter()
                        .map(|&(label, coeffs, constant)| Condition { label: label.to_string(), coeffs, constant })
                        .collect();
                    ClosedForm::build(a, conds).expect("built-in tables are consistent")
                })
                .collect()
        })[alg as usize]
    }

    /// Same pairing with a different condition table, e.g. one read back
    /// from [`ClosedForm::to_text`].
    pub fn with_conditions(alg: Algebra, conditions: Vec<Condition>) -> Result<Self, AltCondError> {
        ClosedForm::build(alg, conditions)
    }

    /// Replaces the condition carrying the same label.
    pub fn replace(&self, cond: Condition) -> Result<Self, AltCondError> {
        let mut out = self.clone();
        let slot = out
            .conditions
            .iter_mut()
            .find(|c| c.label == cond.label)
            .ok_or_else(|| AltCondError::UnknownCondition { alg: self.algebra, label: cond.label.clone() })?;
        *slot = cond;
        Ok(out)
    }

    pub fn condition(&self, label: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.label == label)
    }

    /// Labels of the two conditions attached to element `idx`.
    pub fn pair_labels(&self, idx: usize) -> [&str; 2] {
        let [a, b] = self.pairs[idx];
        [&self.conditions[a].label, &self.conditions[b].label]
    }

    pub fn member(&self, idx: usize, lambda: &Weight, mu: &Weight) -> bool {
        lattice_compatible(self.algebra, lambda, mu) && self.member_unchecked(idx, &theorem_vars(self.algebra, lambda, mu))
    }

    fn member_unchecked(&self, idx: usize, vars: &[Q; 4]) -> bool {
        let [a, b] = self.pairs[idx];
        self.conditions[a].holds(vars) && self.conditions[b].holds(vars)
    }

    pub fn alt_set(&self, lambda: &Weight, mu: &Weight) -> AltSet {
        if !lattice_compatible(self.algebra, lambda, mu) {
            return AltSet::EMPTY;
        }
        let vars = theorem_vars(self.algebra, lambda, mu);
        AltSet::from_indices((0..self.pairs.len()).filter(|&i| self.member_unchecked(i, &vars)))
    }

    /// One condition per line: `label k_c1 k_c2 k_n k_m constant`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.conditions {
            let _ = write!(s, "{}", c.label);
            for k in c.coeffs.iter().chain(std::iter::once(&c.constant)) {
                let _ = write!(s, " {k}");
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Vec<Condition>, AltCondError> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| AltCondError::Parse { line: i + 1, msg: msg.to_string() };
            let mut parts = line.split_whitespace();
            let label = parts.next().ok_or_else(|| err("missing label"))?.to_string();
            let nums = parts
                .map(|p| p.parse::<Q>().map_err(|_| err(&format!("bad number `{p}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            if nums.len() != 5 {
                return Err(err("expected four coefficients and a constant"));
            }
            out.push(Condition { label, coeffs: [nums[0], nums[1], nums[2], nums[3]], constant: nums[4] });
        }
        Ok(out)
    }
}

pub fn evaluate_condition(alg: Algebra, label: &str, lambda: &Weight, mu: &Weight) -> Result<bool, AltCondError> {
    let c = ClosedForm::standard(alg)
        .condition(label)
        .ok_or_else(|| AltCondError::UnknownCondition { alg, label: label.to_string() })?;
    Ok(c.holds(&theorem_vars(alg, lambda, mu)))
}

pub fn member_closed(alg: Algebra, sigma: &WeylElement, lambda: &Weight, mu: &Weight) -> bool {
    let idx = weyl_group(alg).index_of(&sigma.matrix).expect("element of this algebra's Weyl group");
    ClosedForm::standard(alg).member(idx, lambda, mu)
}

pub fn alt_set_closed(alg: Algebra, lambda: &Weight, mu: &Weight) -> AltSet {
    ClosedForm::standard(alg).alt_set(lambda, mu)
}

/// One case of a printed theorem: the set and its condition signature.
#[derive(Clone, Copy, Debug)]
pub struct Case {
    pub set: &'static [&'static str],
    pub holds: &'static [&'static str],
    pub fails: &'static [&'static str],
    /// Set as printed, where the printed label differs from `set`.
    pub printed: Option<&'static [&'static str]>,
}

const fn case(set: &'static [&'static str], holds: &'static [&'static str], fails: &'static [&'static str]) -> Case {
    Case { set, holds, fails, printed: None }
}

const fn relabelled(
    set: &'static [&'static str],
    holds: &'static [&'static str],
    fails: &'static [&'static str],
    printed: &'static [&'static str],
) -> Case {
    Case { set, holds, fails, printed: Some(printed) }
}

const B2_CASES: [Case; 24] = [
    case(&["1"], &["J1", "J2"], &["J3", "J4"]),
    case(&["s1"], &["J2", "J3"], &["J1", "J5"]),
    case(&["s2"], &["J1", "J4"], &["J2", "J6"]),
    case(&["s2s1"], &["J3", "J5"], &["J2", "J7"]),
    case(&["s1s2"], &["J6", "J4"], &["J8", "J1"]),
    case(&["s1s2s1"], &["J7", "J5"], &["J8", "J3"]),
    case(&["s2s1s2"], &["J6", "J8"], &["J4", "J7"]),
    case(&["s2s1s2s1"], &["J7", "J8"], &["J5", "J6"]),
    case(&["1", "s1"], &["J1", "J3"], &["J4", "J5"]),
    case(&["1", "s2"], &["J2", "J4"], &["J3", "J6"]),
    case(&["s1", "s2s1"], &["J2", "J5"], &["J1", "J7"]),
    case(&["s2", "s1s2"], &["J1", "J6"], &["J2", "J8"]),
    case(&["s2s1", "s1s2s1"], &["J3", "J7"], &["J2", "J8"]),
    case(&["s1s2", "s2s1s2"], &["J4", "J8"], &["J1", "J7"]),
    case(&["s1s2s1", "s2s1s2s1"], &["J5", "J8"], &["J6", "J3"]),
    case(&["s2s1s2", "s2s1s2s1"], &["J6", "J7"], &["J5", "J4"]),
    relabelled(&["1", "s1", "s2"], &["J3", "J4"], &["J5", "J6"], &["1", "s1", "s2s1"]),
    relabelled(&["1", "s1", "s2s1"], &["J1", "J5"], &["J4", "J7"], &["1", "s1", "s2"]),
    case(&["1", "s2", "s1s2"], &["J2", "J6"], &["J3", "J8"]),
    relabelled(&["s1", "s2s1", "s1s2s1"], &["J7", "J2"], &["J8", "J1"], &["s2", "s1s2", "s2s1s2"]),
    relabelled(&["s2", "s1s2", "s2s1s2"], &["J1", "J8"], &["J2", "J7"], &["s1s2", "s2s1s2", "s2s1s2s1"]),
    relabelled(
        &["s2s1", "s1s2s1", "s2s1s2s1"],
        &["J3", "J8"],
        &["J2", "J6"],
        &["s2s1s2", "s2s1s2s1", "s1s2s1"],
    ),
    relabelled(
        &["s1s2", "s2s1s2", "s2s1s2s1"],
        &["J7", "J4"],
        &["J5", "J1"],
        &["s2s1", "s1s2s1", "s2s1s2s1"],
    ),
    relabelled(&["s2s1s2", "s2s1s2s1", "s1s2s1"], &["J6", "J5"], &["J4", "J3"], &["s1", "s2s1", "s1s2s1"]),
];

const C2_CASES: [Case; 24] = [
    case(&["1"], &["L1", "L2"], &["L4", "L3"]),
    case(&["s1"], &["L3", "L2"], &["L5", "L1"]),
    case(&["s2"], &["L1", "L4"], &["L2", "L6"]),
    case(&["s2s1"], &["L3", "L5"], &["L2", "L7"]),
    case(&["s1s2"], &["L6", "L4"], &["L8", "L1"]),
    case(&["s1s2s1"], &["L7", "L5"], &["L8", "L3"]),
    case(&["s2s1s2"], &["L6", "L8"], &["L4", "L7"]),
    case(&["s2s1s2s1"], &["L7", "L8"], &["L5", "L6"]),
    case(&["1", "s1"], &["L1", "L3"], &["L4", "L5"]),
    case(&["1", "s2"], &["L2", "L4"], &["L3", "L6"]),
    case(&["s1", "s2s1"], &["L2", "L5"], &["L1", "L7"]),
    case(&["s2", "s1s2"], &["L1", "L6"], &["L2", "L8"]),
    case(&["s2s1", "s1s2s1"], &["L3", "L7"], &["L2", "L8"]),
    case(&["s1s2", "s2s1s2"], &["L4", "L8"], &["L1", "L7"]),
    case(&["s1s2s1", "s2s1s2s1"], &["L5", "L8"], &["L6", "L3"]),
    case(&["s2s1s2", "s2s1s2s1"], &["L6", "L7"], &["L5", "L4"]),
    case(&["1", "s1", "s2s1"], &["L1", "L5"], &["L4", "L7"]),
    case(&["1", "s1", "s2"], &["L3", "L4"], &["L5", "L6"]),
    case(&["1", "s2", "s1s2"], &["L2", "L6"], &["L3", "L8"]),
    case(&["s2", "s1s2", "s2s1s2"], &["L1", "L8"], &["L2", "L7"]),
    case(&["s1s2", "s2s1s2", "s2s1s2s1"], &["L7", "L4"], &["L5", "L1"]),
    case(&["s2s1s2", "s2s1s2s1", "s1s2s1"], &["L6", "L5"], &["L4", "L3"]),
    case(&["s2s1s2s1", "s1s2s1", "s2s1"], &["L3", "L8"], &["L2", "L6"]),
    case(&["s1", "s2s1", "s1s2s1"], &["L7", "L2"], &["L8", "L1"]),
];

const D2_CASES: [Case; 4] = [
    case(&["1"], &["I1", "I3"], &[]),
    case(&["s1"], &["I2", "I3"], &[]),
    case(&["s2"], &["I1", "I4"], &[]),
    case(&["s2s1"], &["I2", "I4"], &[]),
];

/// Printed case list of the B2, C2 or D2 theorem.
pub fn printed_cases(alg: Algebra) -> Option<&'static [Case]> {
    match alg {
        Algebra::B2 => Some(&B2_CASES),
        Algebra::C2 => Some(&C2_CASES),
        Algebra::D2 => Some(&D2_CASES),
        _ => None,
    }
}

impl Case {
    pub fn alt_set(&self, alg: Algebra) -> AltSet {
        AltSet::from_words(weyl_group(alg), self.set).expect("case words are group elements")
    }

    pub fn printed_set(&self, alg: Algebra) -> AltSet {
        AltSet::from_words(weyl_group(alg), self.printed.unwrap_or(self.set)).expect("case words are group elements")
    }

    /// `{1}: J1, J2, ¬J3, ¬J4`; just the set when the theorem names no conditions.
    pub fn label(&self, alg: Algebra) -> String {
        let set = format!("{{{}}}", self.set.join(", "));
        if alg == Algebra::D2 {
            return set;
        }
        let conds: Vec<String> = self
            .holds
            .iter()
            .map(|s| s.to_string())
            .chain(self.fails.iter().map(|s| format!("¬{s}")))
            .collect();
        format!("{set}: {}", conds.join(", "))
    }

    fn matches(&self, form: &ClosedForm, vars: &[Q; 4]) -> bool {
        let get = |l: &str| form.condition(l).expect("case labels are in the table").holds(vars);
        self.holds.iter().all(|l| get(l)) && !self.fails.iter().any(|l| get(l))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseMatch {
    pub index: usize,
    pub label: String,
    pub set: AltSet,
}

/// The printed case whose signature holds at (λ, μ); `None` is "∅ otherwise".
pub fn theorem_case(alg: Algebra, lambda: &Weight, mu: &Weight) -> Result<Option<CaseMatch>, AltCondError> {
    let cases = printed_cases(alg).ok_or(AltCondError::NoCaseTable(alg))?;
    if !lattice_compatible(alg, lambda, mu) {
        return Ok(None);
    }
    let form = ClosedForm::standard(alg);
    let vars = theorem_vars(alg, lambda, mu);
    let mut found: Option<CaseMatch> = None;
    for (i, c) in cases.iter().enumerate() {
        if !c.matches(form, &vars) {
            continue;
        }
        if let Some(prev) = &found {
            return Err(AltCondError::DoubleMatch { first: prev.label.clone(), second: c.label(alg) });
        }
        found = Some(CaseMatch { index: i, label: c.label(alg), set: c.alt_set(alg) });
    }
    Ok(found)
}
