//! Executable checkers for identities, containments, and regularity bounds
//! relating symbolic powers of edge ideals, their colon ideals, and graph
//! structure (odd girth, gaps, chordal complements).
//!
//! Every checker returns a `CheckReport` rather than a bare bool: the report
//! carries the computed quantities so a failure can be re-verified by hand.
//! Statements with a hypothesis return `NotApplicable` when the hypothesis
//! gate evaluates false; the gate evaluation is part of the witness. Long
//! computations respect a per-instance time limit and report `Timeout`
//! instead of crashing.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Duration;

use itertools::Itertools;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::betti::{regularity_in, BettiError};
use crate::budget::{Budget, Interrupted};
use crate::graphs::{Graph, MAX_CANONICAL_VERTICES};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::linalg::Field;
use crate::symbolic::{symbolic_power_budgeted, symbolic_power_of_covers_budgeted, CoverSystem};

/// The checkable statements, by short stable id (the CLI speaks these).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Statement {
    /// "seccol": (I^(2) : e) equals I + (products of one neighbor of each
    /// endpoint) + (common neighbors of the endpoints).
    ColonOfSquare,
    /// "col": (I^(s+1) : e_1...e_s) factors through the first edge's colon,
    /// powered over the covers containing exactly one of its endpoints.
    ColonFactorization,
    /// "rfirst": reg I^(s+1) <= max(colon regs + 2s, reg(I^(s+1) + I^s)).
    RegFromColons,
    /// "base": reg(I^(2) : e) <= reg I.
    RegOfColonOfSquare,
    /// "lemreg": reg(I^(s+1) : e_1...e_s) <= reg I.
    RegOfColon,
    /// "1main": reg I^(s+1) <= max(reg I + 2s, reg(I^(s+1) + I^s)).
    RegBound,
    /// "2main": odd girth > 2s-3 implies
    /// reg I^(s+1) <= max(reg I + 2s, reg I^s).
    RegBoundOddGirth,
    /// "cont": odd girth > 2s-3 implies I^(s+1) contained in I^s.
    SymbolicInOrdinary,
    /// "twth": reg I^(2) <= reg I + 2 and reg I^(3) <= reg I + 4.
    SmallPowerBounds,
    /// "regord": odd girth > 2k-1 implies reg I^s <= 2s + reg I - 2 for s <= k.
    OrdinaryRegBound,
    /// "resycy": odd girth > 2k-1 implies reg I^(s) <= 2s + reg I - 2 for
    /// s <= k+1.
    SymbolicRegBound,
    /// "fouthr": for gap-free G and u a minimal generator of I^2,
    /// (I^(4):u) + (I^3:u) = (I^3:u) + (variables lying in (I^(4):u)).
    FourthColonVariables,
    /// "fococh": chordal complement implies reg I^(s) = 2s for s = 2, 3, 4.
    CochordalSymbolicReg,
    /// "froberg": reg I = 2 iff the complement graph is chordal.
    RegTwoIffCochordal,
    /// "bipartite": bipartite graphs have I^(s) = I^s.
    BipartiteEquality,
    /// "rty": odd girth > 2k-1 implies I^(s) = I^s for s <= k.
    EqualityBelowOddGirth,
    /// "conjectures": survey of the open bounds reg I^s <= 2s + reg I - 2,
    /// reg I^s = reg I^(s), reg I^(s) <= 2s + reg I - 2.
    ConjectureSurvey,
}

impl Statement {
    pub const ALL: [Statement; 17] = [
        Statement::ColonOfSquare,
        Statement::ColonFactorization,
        Statement::RegFromColons,
        Statement::RegOfColonOfSquare,
        Statement::RegOfColon,
        Statement::RegBound,
        Statement::RegBoundOddGirth,
        Statement::SymbolicInOrdinary,
        Statement::SmallPowerBounds,
        Statement::OrdinaryRegBound,
        Statement::SymbolicRegBound,
        Statement::FourthColonVariables,
        Statement::CochordalSymbolicReg,
        Statement::RegTwoIffCochordal,
        Statement::BipartiteEquality,
        Statement::EqualityBelowOddGirth,
        Statement::ConjectureSurvey,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::ColonOfSquare => "seccol",
            Statement::ColonFactorization => "col",
            Statement::RegFromColons => "rfirst",
            Statement::RegOfColonOfSquare => "base",
            Statement::RegOfColon => "lemreg",
            Statement::RegBound => "1main",
            Statement::RegBoundOddGirth => "2main",
            Statement::SymbolicInOrdinary => "cont",
            Statement::SmallPowerBounds => "twth",
            Statement::OrdinaryRegBound => "regord",
            Statement::SymbolicRegBound => "resycy",
            Statement::FourthColonVariables => "fouthr",
            Statement::CochordalSymbolicReg => "fococh",
            Statement::RegTwoIffCochordal => "froberg",
            Statement::BipartiteEquality => "bipartite",
            Statement::EqualityBelowOddGirth => "rty",
            Statement::ConjectureSurvey => "conjectures",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown statement id {0:?}; valid ids: seccol, col, rfirst, base, lemreg, 1main, 2main, cont, twth, regord, resycy, fouthr, fococh, froberg, bipartite, rty, conjectures")]
pub struct UnknownStatement(pub String);

impl FromStr for Statement {
    type Err = UnknownStatement;

    fn from_str(s: &str) -> Result<Self, UnknownStatement> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| UnknownStatement(s.to_string()))
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Statement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
    Timeout,
}

/// Outcome of one checker instance. `params` pins down the instance
/// (edges, s, k); `witness` holds the computed quantities, enough to
/// re-verify the verdict independently.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub statement: Statement,
    pub graph6: String,
    pub n: usize,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub witness: BTreeMap<String, Value>,
}

impl CheckReport {
    fn new(statement: Statement, g: &Graph, params: BTreeMap<String, String>) -> Self {
        CheckReport {
            statement,
            graph6: graph_id(g),
            n: g.n(),
            params,
            status: CheckStatus::Pass,
            witness: BTreeMap::new(),
        }
    }

    fn resolve(mut self, outcome: Result<CheckStatus, Interrupted>) -> Self {
        self.status = match outcome {
            Ok(status) => status,
            Err(_) => {
                self.witness.insert(
                    "note".to_string(),
                    json!("exceeded the per-instance time limit"),
                );
                CheckStatus::Timeout
            }
        };
        self
    }
}

/// Canonical graph id used in reports; falls back to the labeled encoding
/// when the graph is too big to canonicalize.
fn graph_id(g: &Graph) -> String {
    if g.n() <= MAX_CANONICAL_VERTICES {
        g.canonical_form().to_graph6()
    } else {
        g.to_graph6()
    }
}

/// How checkers run (field, per-instance time limit) and which instances a
/// sweep generates (the s / k range).
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub s_min: u32,
    pub s_max: u32,
    pub timeout: Option<Duration>,
    pub field: Field,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            s_min: 1,
            s_max: 3,
            timeout: Some(Duration::from_secs(60)),
            field: Field::Q,
        }
    }
}

impl SweepConfig {
    fn budget(&self) -> Budget {
        Budget::from_timeout(self.timeout)
    }

    fn s_range(&self) -> std::ops::RangeInclusive<u32> {
        self.s_min.max(1)..=self.s_max
    }
}

/// Regularity value with the unit ideal singled out. Colon ideals can be the
/// whole ring; the statements' inequalities then hold trivially, which we
/// record as value 0 plus a witness note instead of erroring.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Reg {
    Unit,
    Val(u32),
}

impl Reg {
    fn value(self) -> u32 {
        match self {
            Reg::Unit => 0,
            Reg::Val(v) => v,
        }
    }
}

static REG_MEMO: Lazy<Mutex<HashMap<(MonomialIdeal, Field), u32>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn reg_of(ideal: &MonomialIdeal, field: Field, budget: &Budget) -> Result<Reg, Interrupted> {
    assert!(!ideal.is_zero(), "callers gate out the zero ideal");
    if ideal.is_unit() {
        return Ok(Reg::Unit);
    }
    let key = (ideal.clone(), field);
    if let Some(&v) = REG_MEMO.lock().unwrap().get(&key) {
        return Ok(Reg::Val(v));
    }
    match regularity_in(ideal, field, budget) {
        Ok(r) => {
            REG_MEMO.lock().unwrap().insert(key, r.0);
            Ok(Reg::Val(r.0))
        }
        Err(BettiError::Interrupted(e)) => Err(e),
        Err(other) => unreachable!("zero and unit ideals were gated: {other}"),
    }
}

fn edge_monomial(g: &Graph, e: (usize, usize)) -> Monomial {
    assert!(g.has_edge(e.0, e.1), "not an edge of the graph: {e:?}");
    Monomial::edge(g.n(), e.0, e.1)
}

fn product_of_edges(g: &Graph, edges: &[(usize, usize)]) -> Monomial {
    edges.iter().fold(Monomial::one(g.n()), |acc, &e| {
        acc.mul(&edge_monomial(g, e))
    })
}

fn put(witness: &mut BTreeMap<String, Value>, key: &str, value: impl Serialize) {
    witness.insert(
        key.to_string(),
        serde_json::to_value(value).expect("witness values serialize"),
    );
}

/// Shared tail of the ideal-equality checkers: record both sides, and on a
/// mismatch the smallest generator lying in one side only.
fn equality_status(
    witness: &mut BTreeMap<String, Value>,
    lhs: &MonomialIdeal,
    rhs: &MonomialIdeal,
) -> CheckStatus {
    put(witness, "lhs", lhs.to_string());
    put(witness, "rhs", rhs.to_string());
    if lhs == rhs {
        return CheckStatus::Pass;
    }
    let mut missing: Vec<(&'static str, &Monomial)> = Vec::new();
    if let Some(m) = lhs.gens().iter().find(|m| !rhs.contains(m)) {
        missing.push(("lhs_only", m));
    }
    if let Some(m) = rhs.gens().iter().find(|m| !lhs.contains(m)) {
        missing.push(("rhs_only", m));
    }
    missing.sort_by_key(|(_, m)| (*m).clone());
    let (side, m) = missing[0];
    put(witness, "counterexample", m.to_string());
    put(witness, "counterexample_side", side);
    CheckStatus::Fail
}

/// Colon of the second symbolic power by an edge x_i x_j, against its closed
/// form: the edge ideal plus all products x_p x_q with x_p adjacent to x_i,
/// x_q adjacent to x_j, x_p != x_q, plus the common neighbors as variables.
pub fn check_seccol(g: &Graph, e: (usize, usize), cfg: &SweepConfig) -> CheckReport {
    let em = edge_monomial(g, e);
    let params = BTreeMap::from([("e".to_string(), em.to_string())]);
    let mut report = CheckReport::new(Statement::ColonOfSquare, g, params);
    let budget = cfg.budget();
    let outcome = (|| {
        let lhs = symbolic_power_budgeted(g, 2, &budget)?.colon(&em);
        let n = g.n();
        let (i, j) = e;
        let mut extra: Vec<Monomial> = Vec::new();
        for p in g.neighbors(i).iter() {
            for q in g.neighbors(j).iter() {
                if p != q {
                    extra.push(Monomial::edge(n, p, q));
                }
            }
        }
        for t in g
            .neighbors(i)
            .iter()
            .filter(|&t| g.neighbors(j).contains(t))
        {
            extra.push(Monomial::variable(n, t));
        }
        let rhs = MonomialIdeal::edge_ideal(g).sum(&MonomialIdeal::new(n, extra));
        Ok(equality_status(&mut report.witness, &lhs, &rhs))
    })();
    report.resolve(outcome)
}

/// Colon of I^(s+1) by an s-fold edge product, against the two-step form:
/// power the first edge's colon over the covers meeting that edge in one
/// vertex, then colon out the remaining edges. Every choice of first edge is
/// checked.
pub fn check_col(g: &Graph, edges: &[(usize, usize)], cfg: &SweepConfig) -> CheckReport {
    let s = edges.len() as u32;
    assert!(s >= 1, "need at least one edge");
    let u = product_of_edges(g, edges);
    let params = BTreeMap::from([
        ("s".to_string(), s.to_string()),
        ("u".to_string(), u.to_string()),
    ]);
    let mut report = CheckReport::new(Statement::ColonFactorization, g, params);
    let budget = cfg.budget();
    let outcome = (|| {
        let lhs = symbolic_power_budgeted(g, s + 1, &budget)?.colon(&u);
        put(&mut report.witness, "lhs", lhs.to_string());
        let covers = g.minimal_vertex_covers();
        let mut checked = 0usize;
        for first in edges.iter().copied().unique() {
            let once: Vec<_> = covers
                .iter()
                .filter(|c| {
                    usize::from(c.contains(first.0)) + usize::from(c.contains(first.1)) == 1
                })
                .cloned()
                .collect();
            let system = CoverSystem::new(g.n(), once);
            let powered = symbolic_power_of_covers_budgeted(&system, s, &budget)?;
            let rest = u.div(&edge_monomial(g, first));
            let rhs = powered.colon(&rest);
            checked += 1;
            if rhs != lhs {
                put(
                    &mut report.witness,
                    "first_edge",
                    edge_monomial(g, first).to_string(),
                );
                return Ok(equality_status(&mut report.witness, &lhs, &rhs));
            }
        }
        put(&mut report.witness, "first_edge_choices", checked);
        Ok(CheckStatus::Pass)
    })();
    report.resolve(outcome)
}

/// reg I^(s+1) against the max of (colon by each minimal generator of I^s,
/// plus 2s) and reg(I^(s+1) + I^s).
pub fn check_rfirst(g: &Graph, s: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s >= 1);
    let params = BTreeMap::from([("s".to_string(), s.to_string())]);
    let mut report = CheckReport::new(Statement::RegFromColons, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        let power = ideal.power(s);
        let symbolic = symbolic_power_budgeted(g, s + 1, &budget)?;
        let lhs = reg_of(&symbolic, cfg.field, &budget)?.value();
        let mut colon_max = 0u32;
        let mut unit_colons = 0usize;
        for u in power.gens() {
            match reg_of(&symbolic.colon(u), cfg.field, &budget)? {
                Reg::Unit => unit_colons += 1,
                Reg::Val(v) => colon_max = colon_max.max(v),
            }
        }
        let with_sum = reg_of(&symbolic.sum(&power), cfg.field, &budget)?.value();
        let bound = (colon_max + 2 * s).max(with_sum);
        put(&mut report.witness, "reg_symbolic", lhs);
        put(&mut report.witness, "max_colon_reg", colon_max);
        put(&mut report.witness, "reg_sum", with_sum);
        put(&mut report.witness, "bound", bound);
        if unit_colons > 0 {
            put(
                &mut report.witness,
                "note",
                format!(
                    "{unit_colons} colon ideal(s) were the unit ideal, counted as regularity 0"
                ),
            );
        }
        Ok(if lhs <= bound {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// reg(I^(2) : e) <= reg I.
pub fn check_base(g: &Graph, e: (usize, usize), cfg: &SweepConfig) -> CheckReport {
    let em = edge_monomial(g, e);
    let params = BTreeMap::from([("e".to_string(), em.to_string())]);
    let mut report = CheckReport::new(Statement::RegOfColonOfSquare, g, params);
    let budget = cfg.budget();
    let outcome = (|| {
        let colon = symbolic_power_budgeted(g, 2, &budget)?.colon(&em);
        let lhs = reg_of(&colon, cfg.field, &budget)?;
        let base = reg_of(&MonomialIdeal::edge_ideal(g), cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_colon", lhs.value());
        put(&mut report.witness, "reg_edge_ideal", base);
        if lhs == Reg::Unit {
            put(
                &mut report.witness,
                "note",
                "colon is the unit ideal, counted as regularity 0",
            );
        }
        Ok(if lhs.value() <= base {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// reg(I^(s+1) : e_1...e_s) <= reg I for an s-fold edge product.
pub fn check_lemreg(g: &Graph, edges: &[(usize, usize)], cfg: &SweepConfig) -> CheckReport {
    let s = edges.len() as u32;
    assert!(s >= 1, "need at least one edge");
    let u = product_of_edges(g, edges);
    let params = BTreeMap::from([
        ("s".to_string(), s.to_string()),
        ("u".to_string(), u.to_string()),
    ]);
    let mut report = CheckReport::new(Statement::RegOfColon, g, params);
    let budget = cfg.budget();
    let outcome = (|| {
        let colon = symbolic_power_budgeted(g, s + 1, &budget)?.colon(&u);
        let lhs = reg_of(&colon, cfg.field, &budget)?;
        let base = reg_of(&MonomialIdeal::edge_ideal(g), cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_colon", lhs.value());
        put(&mut report.witness, "reg_edge_ideal", base);
        if lhs == Reg::Unit {
            put(
                &mut report.witness,
                "note",
                "colon is the unit ideal, counted as regularity 0",
            );
        }
        Ok(if lhs.value() <= base {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// reg I^(s+1) <= max(reg I + 2s, reg(I^(s+1) + I^s)).
pub fn check_1main(g: &Graph, s: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s >= 1);
    let params = BTreeMap::from([("s".to_string(), s.to_string())]);
    let mut report = CheckReport::new(Statement::RegBound, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        let symbolic = symbolic_power_budgeted(g, s + 1, &budget)?;
        let lhs = reg_of(&symbolic, cfg.field, &budget)?.value();
        let base = reg_of(&ideal, cfg.field, &budget)?.value();
        let with_sum = reg_of(&symbolic.sum(&ideal.power(s)), cfg.field, &budget)?.value();
        let bound = (base + 2 * s).max(with_sum);
        put(&mut report.witness, "reg_symbolic", lhs);
        put(&mut report.witness, "reg_edge_ideal", base);
        put(&mut report.witness, "reg_sum", with_sum);
        put(&mut report.witness, "bound", bound);
        Ok(if lhs <= bound {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// Under odd girth > 2s-3: reg I^(s+1) <= max(reg I + 2s, reg I^s).
pub fn check_2main(g: &Graph, s: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s >= 1);
    let params = BTreeMap::from([("s".to_string(), s.to_string())]);
    let mut report = CheckReport::new(Statement::RegBoundOddGirth, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let girth = g.odd_girth();
    put(&mut report.witness, "odd_girth", girth.to_string());
    if !girth.exceeds(2 * i64::from(s) - 3) {
        put(
            &mut report.witness,
            "note",
            "odd cycle shorter than the hypothesis allows",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        let lhs = reg_of(
            &symbolic_power_budgeted(g, s + 1, &budget)?,
            cfg.field,
            &budget,
        )?
        .value();
        let base = reg_of(&ideal, cfg.field, &budget)?.value();
        let ordinary = reg_of(&ideal.power(s), cfg.field, &budget)?.value();
        let bound = (base + 2 * s).max(ordinary);
        put(&mut report.witness, "reg_symbolic", lhs);
        put(&mut report.witness, "reg_edge_ideal", base);
        put(&mut report.witness, "reg_ordinary_power", ordinary);
        put(&mut report.witness, "bound", bound);
        Ok(if lhs <= bound {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// Under odd girth > 2s-3: I^(s+1) is contained in I^s.
pub fn check_cont(g: &Graph, s: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s >= 1);
    let params = BTreeMap::from([("s".to_string(), s.to_string())]);
    let mut report = CheckReport::new(Statement::SymbolicInOrdinary, g, params);
    let girth = g.odd_girth();
    put(&mut report.witness, "odd_girth", girth.to_string());
    if !girth.exceeds(2 * i64::from(s) - 3) {
        put(
            &mut report.witness,
            "note",
            "odd cycle shorter than the hypothesis allows",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let symbolic = symbolic_power_budgeted(g, s + 1, &budget)?;
        let ordinary = MonomialIdeal::edge_ideal(g).power(s);
        match symbolic.gens().iter().find(|m| !ordinary.contains(m)) {
            None => Ok(CheckStatus::Pass),
            Some(m) => {
                put(&mut report.witness, "counterexample", m.to_string());
                Ok(CheckStatus::Fail)
            }
        }
    })();
    report.resolve(outcome)
}

/// reg I^(2) <= reg I + 2 and reg I^(3) <= reg I + 4.
pub fn check_twth(g: &Graph, cfg: &SweepConfig) -> CheckReport {
    let mut report = CheckReport::new(Statement::SmallPowerBounds, g, BTreeMap::new());
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let base = reg_of(&MonomialIdeal::edge_ideal(g), cfg.field, &budget)?.value();
        let second = reg_of(&symbolic_power_budgeted(g, 2, &budget)?, cfg.field, &budget)?.value();
        let third = reg_of(&symbolic_power_budgeted(g, 3, &budget)?, cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_edge_ideal", base);
        put(&mut report.witness, "reg_symbolic_2", second);
        put(&mut report.witness, "reg_symbolic_3", third);
        Ok(if second <= base + 2 && third <= base + 4 {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// Under odd girth > 2k-1: reg I^s <= 2s + reg I - 2 for every s <= k.
pub fn check_regord(g: &Graph, k: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(k >= 1);
    let params = BTreeMap::from([("k".to_string(), k.to_string())]);
    let mut report = CheckReport::new(Statement::OrdinaryRegBound, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let girth = g.odd_girth();
    put(&mut report.witness, "odd_girth", girth.to_string());
    if !girth.exceeds(2 * i64::from(k) - 1) {
        put(
            &mut report.witness,
            "note",
            "odd cycle shorter than the hypothesis allows",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        let base = reg_of(&ideal, cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_edge_ideal", base);
        let mut rows = Vec::new();
        let mut ok = true;
        for s in 1..=k {
            let value = reg_of(&ideal.power(s), cfg.field, &budget)?.value();
            let bound = 2 * s + base - 2;
            ok &= value <= bound;
            rows.push(json!({"s": s, "reg": value, "bound": bound}));
        }
        put(&mut report.witness, "instances", rows);
        Ok(if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// Under odd girth > 2k-1: reg I^(s) <= 2s + reg I - 2 for every s <= k+1.
pub fn check_resycy(g: &Graph, k: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(k >= 1);
    let params = BTreeMap::from([("k".to_string(), k.to_string())]);
    let mut report = CheckReport::new(Statement::SymbolicRegBound, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let girth = g.odd_girth();
    put(&mut report.witness, "odd_girth", girth.to_string());
    if !girth.exceeds(2 * i64::from(k) - 1) {
        put(
            &mut report.witness,
            "note",
            "odd cycle shorter than the hypothesis allows",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let base = reg_of(&MonomialIdeal::edge_ideal(g), cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_edge_ideal", base);
        let mut rows = Vec::new();
        let mut ok = true;
        for s in 1..=k + 1 {
            let symbolic = symbolic_power_budgeted(g, s, &budget)?;
            let value = reg_of(&symbolic, cfg.field, &budget)?.value();
            let bound = 2 * s + base - 2;
            ok &= value <= bound;
            rows.push(json!({"s": s, "reg": value, "bound": bound}));
        }
        put(&mut report.witness, "instances", rows);
        Ok(if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// For u = e1*e2 a minimal generator of I^2:
/// (I^(4):u) + (I^3:u) = (I^3:u) + (X_0), X_0 the variables inside (I^(4):u).
/// Gated on gap-freeness; the equality is still evaluated for gapped graphs
/// and recorded in the witness, since it can genuinely fail there.
pub fn check_fouthr(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    cfg: &SweepConfig,
) -> CheckReport {
    let u = edge_monomial(g, e1).mul(&edge_monomial(g, e2));
    let square = MonomialIdeal::edge_ideal(g).power(2);
    assert!(
        square.gens().contains(&u),
        "u must be a minimal generator of the square of the edge ideal"
    );
    let params = BTreeMap::from([("u".to_string(), u.to_string())]);
    let mut report = CheckReport::new(Statement::FourthColonVariables, g, params);
    let gap_free = g.is_gap_free();
    put(&mut report.witness, "gap_free", gap_free);
    let budget = cfg.budget();
    let outcome = (|| {
        let n = g.n();
        let fourth_colon = symbolic_power_budgeted(g, 4, &budget)?.colon(&u);
        let cube_colon = MonomialIdeal::edge_ideal(g).power(3).colon(&u);
        let x0: Vec<Monomial> = (0..n)
            .map(|t| Monomial::variable(n, t))
            .filter(|x| fourth_colon.contains(x))
            .collect();
        put(
            &mut report.witness,
            "x0",
            x0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        );
        let lhs = fourth_colon.sum(&cube_colon);
        let rhs = cube_colon.sum(&MonomialIdeal::new(n, x0));
        let verdict = equality_status(&mut report.witness, &lhs, &rhs);
        if !gap_free {
            put(
                &mut report.witness,
                "equality_holds",
                verdict == CheckStatus::Pass,
            );
            put(
                &mut report.witness,
                "note",
                "graph has a gap, hypothesis not met",
            );
            return Ok(CheckStatus::NotApplicable);
        }
        Ok(verdict)
    })();
    report.resolve(outcome)
}

/// For graphs whose complement is chordal: reg I^(s) = 2s for s = 2, 3, 4.
/// Each s gets a fresh time budget; a timeout on one s does not discard the
/// values already computed.
pub fn check_fococh(g: &Graph, cfg: &SweepConfig) -> CheckReport {
    let mut report = CheckReport::new(Statement::CochordalSymbolicReg, g, BTreeMap::new());
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let cochordal = g.complement().is_chordal();
    put(&mut report.witness, "complement_chordal", cochordal);
    if !cochordal {
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let mut values = Vec::new();
    let mut timed_out = Vec::new();
    let mut failed = false;
    for s in 2u32..=4 {
        let budget = cfg.budget();
        let value =
            symbolic_power_budgeted(g, s, &budget).and_then(|sp| reg_of(&sp, cfg.field, &budget));
        match value {
            Ok(r) => {
                failed |= r.value() != 2 * s;
                values.push(json!({"s": s, "reg": r.value(), "expected": 2 * s}));
            }
            Err(_) => timed_out.push(s),
        }
    }
    put(&mut report.witness, "instances", values);
    if !timed_out.is_empty() {
        put(&mut report.witness, "timed_out_s", timed_out.clone());
    }
    report.status = if failed {
        CheckStatus::Fail
    } else if !timed_out.is_empty() {
        CheckStatus::Timeout
    } else {
        CheckStatus::Pass
    };
    report
}

/// reg I = 2 exactly when the complement graph is chordal.
pub fn check_froberg(g: &Graph, cfg: &SweepConfig) -> CheckReport {
    let mut report = CheckReport::new(Statement::RegTwoIffCochordal, g, BTreeMap::new());
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let base = reg_of(&MonomialIdeal::edge_ideal(g), cfg.field, &budget)?.value();
        let cochordal = g.complement().is_chordal();
        put(&mut report.witness, "reg_edge_ideal", base);
        put(&mut report.witness, "complement_chordal", cochordal);
        Ok(if (base == 2) == cochordal {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// Bipartite graphs: I^(s) = I^s on the nose.
pub fn check_bipartite(g: &Graph, s: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s >= 1);
    let params = BTreeMap::from([("s".to_string(), s.to_string())]);
    let mut report = CheckReport::new(Statement::BipartiteEquality, g, params);
    if !g.is_bipartite() {
        put(&mut report.witness, "odd_girth", g.odd_girth().to_string());
        put(&mut report.witness, "note", "graph is not bipartite");
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let symbolic = symbolic_power_budgeted(g, s, &budget)?;
        let ordinary = MonomialIdeal::edge_ideal(g).power(s);
        Ok(equality_status(&mut report.witness, &symbolic, &ordinary))
    })();
    report.resolve(outcome)
}

/// Under odd girth > 2k-1: I^(s) = I^s for every s <= k.
pub fn check_rty(g: &Graph, k: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(k >= 1);
    let params = BTreeMap::from([("k".to_string(), k.to_string())]);
    let mut report = CheckReport::new(Statement::EqualityBelowOddGirth, g, params);
    let girth = g.odd_girth();
    put(&mut report.witness, "odd_girth", girth.to_string());
    if !girth.exceeds(2 * i64::from(k) - 1) {
        put(
            &mut report.witness,
            "note",
            "odd cycle shorter than the hypothesis allows",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        for s in 1..=k {
            let symbolic = symbolic_power_budgeted(g, s, &budget)?;
            let ordinary = ideal.power(s);
            if symbolic != ordinary {
                put(&mut report.witness, "s", s);
                return Ok(equality_status(&mut report.witness, &symbolic, &ordinary));
            }
        }
        Ok(CheckStatus::Pass)
    })();
    report.resolve(outcome)
}

/// Survey of the open questions: for each s up to s_max, does
/// reg I^s <= 2s + reg I - 2 hold, does reg I^s = reg I^(s), and does the
/// same bound hold for the symbolic power. A fail here is a potential
/// counterexample and is reported loudly, never dropped.
pub fn survey_conjectures(g: &Graph, s_max: u32, cfg: &SweepConfig) -> CheckReport {
    assert!(s_max >= 1);
    let params = BTreeMap::from([("s_max".to_string(), s_max.to_string())]);
    let mut report = CheckReport::new(Statement::ConjectureSurvey, g, params);
    if g.edge_count() == 0 {
        put(
            &mut report.witness,
            "note",
            "edgeless graph, zero edge ideal",
        );
        return report.resolve(Ok(CheckStatus::NotApplicable));
    }
    let budget = cfg.budget();
    let outcome = (|| {
        let ideal = MonomialIdeal::edge_ideal(g);
        let base = reg_of(&ideal, cfg.field, &budget)?.value();
        put(&mut report.witness, "reg_edge_ideal", base);
        let mut rows = Vec::new();
        let mut ok = true;
        for s in 1..=s_max {
            let ordinary = reg_of(&ideal.power(s), cfg.field, &budget)?.value();
            let symbolic =
                reg_of(&symbolic_power_budgeted(g, s, &budget)?, cfg.field, &budget)?.value();
            let bound = 2 * s + base - 2;
            let ordinary_bounded = ordinary <= bound;
            let powers_agree = ordinary == symbolic;
            let symbolic_bounded = symbolic <= bound;
            ok &= ordinary_bounded && powers_agree && symbolic_bounded;
            rows.push(json!({
                "s": s,
                "reg_ordinary": ordinary,
                "reg_symbolic": symbolic,
                "bound": bound,
                "ordinary_bounded": ordinary_bounded,
                "powers_agree": powers_agree,
                "symbolic_bounded": symbolic_bounded,
            }));
        }
        put(&mut report.witness, "instances", rows);
        if !ok {
            put(
                &mut report.witness,
                "note",
                "potential counterexample, verify by hand",
            );
        }
        Ok(if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        })
    })();
    report.resolve(outcome)
}

/// All instances of one statement on one graph, with s and k drawn from the
/// config range. Edge-product statements enumerate multisets of edges, so
/// their instance count grows quickly with the range.
pub fn instances_for(statement: Statement, g: &Graph, cfg: &SweepConfig) -> Vec<CheckReport> {
    let edges = g.edges();
    match statement {
        Statement::ColonOfSquare => edges.iter().map(|&e| check_seccol(g, e, cfg)).collect(),
        Statement::RegOfColonOfSquare => edges.iter().map(|&e| check_base(g, e, cfg)).collect(),
        Statement::ColonFactorization => cfg
            .s_range()
            .flat_map(|s| {
                edges
                    .iter()
                    .copied()
                    .combinations_with_replacement(s as usize)
                    .map(|u| check_col(g, &u, cfg))
                    .collect::<Vec<_>>()
            })
            .collect(),
        Statement::RegOfColon => cfg
            .s_range()
            .flat_map(|s| {
                edges
                    .iter()
                    .copied()
                    .combinations_with_replacement(s as usize)
                    .map(|u| check_lemreg(g, &u, cfg))
                    .collect::<Vec<_>>()
            })
            .collect(),
        Statement::RegFromColons => cfg.s_range().map(|s| check_rfirst(g, s, cfg)).collect(),
        Statement::RegBound => cfg.s_range().map(|s| check_1main(g, s, cfg)).collect(),
        Statement::RegBoundOddGirth => cfg.s_range().map(|s| check_2main(g, s, cfg)).collect(),
        Statement::SymbolicInOrdinary => cfg.s_range().map(|s| check_cont(g, s, cfg)).collect(),
        Statement::BipartiteEquality => cfg.s_range().map(|s| check_bipartite(g, s, cfg)).collect(),
        Statement::OrdinaryRegBound => cfg.s_range().map(|k| check_regord(g, k, cfg)).collect(),
        Statement::SymbolicRegBound => cfg.s_range().map(|k| check_resycy(g, k, cfg)).collect(),
        Statement::EqualityBelowOddGirth => cfg.s_range().map(|k| check_rty(g, k, cfg)).collect(),
        Statement::SmallPowerBounds => vec![check_twth(g, cfg)],
        Statement::CochordalSymbolicReg => vec![check_fococh(g, cfg)],
        Statement::RegTwoIffCochordal => vec![check_froberg(g, cfg)],
        Statement::ConjectureSurvey => vec![survey_conjectures(g, cfg.s_max.max(1), cfg)],
        Statement::FourthColonVariables => {
            let square = MonomialIdeal::edge_ideal(g).power(2);
            let mut out = Vec::new();
            for (a, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[a..] {
                    let u = product_of_edges(g, &[e1, e2]);
                    if square.gens().contains(&u) {
                        out.push(check_fouthr(g, e1, e2, cfg));
                    }
                }
            }
            out
        }
    }
}

/// Runs the selected statements over a corpus, in parallel across graphs,
/// and returns the reports sorted by (graph, statement, parameters) so the
/// output is deterministic regardless of scheduling.
pub fn sweep(graphs: &[Graph], statements: &[Statement], cfg: &SweepConfig) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            statements
                .iter()
                .flat_map(move |&st| instances_for(st, g, cfg))
                .collect::<Vec<_>>()
        })
        .collect();
    reports.sort_by(|a, b| {
        (&a.graph6, a.statement.id(), &a.params).cmp(&(&b.graph6, b.statement.id(), &b.params))
    });
    reports
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub timeout: usize,
}

impl StatusCounts {
    fn bump(&mut self, status: CheckStatus) {
        match status {
            CheckStatus::Pass => self.pass += 1,
            CheckStatus::Fail => self.fail += 1,
            CheckStatus::NotApplicable => self.not_applicable += 1,
            CheckStatus::Timeout => self.timeout += 1,
        }
    }

    fn total(&self) -> usize {
        self.pass + self.fail + self.not_applicable + self.timeout
    }
}

/// Per-statement tallies over a batch of reports.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub by_statement: BTreeMap<String, StatusCounts>,
}

impl Summary {
    pub fn failures(&self) -> usize {
        self.by_statement.values().map(|c| c.fail).sum()
    }

    pub fn timeouts(&self) -> usize {
        self.by_statement.values().map(|c| c.timeout).sum()
    }
}

pub fn summarize(reports: &[CheckReport]) -> Summary {
    let mut summary = Summary::default();
    for r in reports {
        summary
            .by_statement
            .entry(r.statement.id().to_string())
            .or_default()
            .bump(r.status);
    }
    summary
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<12} {:>6} {:>6} {:>6} {:>8} {:>7}",
            "statement", "pass", "fail", "n/a", "timeout", "total"
        )?;
        for (id, c) in &self.by_statement {
            writeln!(
                f,
                "{:<12} {:>6} {:>6} {:>6} {:>8} {:>7}",
                id,
                c.pass,
                c.fail,
                c.not_applicable,
                c.timeout,
                c.total()
            )?;
        }
        Ok(())
    }
}
