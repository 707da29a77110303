//! Symbolic powers of edge ideals.
//!
//! The s-th symbolic power of I(G) is the intersection of P_C^s over all
//! minimal vertex covers C, where P_C = (x_i : i in C). Concretely a
//! monomial m lies in I(G)^(s) iff every minimal cover C carries weight
//! sum_{i in C} exp_i(m) >= s. Generators are the minimal nonnegative
//! integer solutions of that system of covering inequalities.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use once_cell::sync::Lazy;
use thiserror::Error;

use crate::budget::{Budget, Interrupted};
use crate::graphs::{Graph, VertexSet};
use crate::ideals::{Monomial, MonomialIdeal};

/// A family of vertex covers over a fixed ambient `K[x1..xn]`.
///
/// Usually the full family of minimal covers of a graph, but checker code
/// also builds subfamilies (for instance all covers meeting a given edge
/// exactly once), so the intersection kernel takes the family, not a graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoverSystem {
    n: usize,
    covers: Vec<VertexSet>,
}

impl CoverSystem {
    /// Sorts and deduplicates; an empty family denotes the unit ideal (the
    /// empty intersection), while a family containing the empty cover forces
    /// the zero ideal.
    pub fn new(n: usize, mut covers: Vec<VertexSet>) -> Self {
        assert!((1..=32).contains(&n));
        assert!(
            covers.iter().all(|c| c.is_subset_of(VertexSet::full(n))),
            "cover outside the vertex range"
        );
        covers.sort();
        covers.dedup();
        CoverSystem { n, covers }
    }

    pub fn of_graph(g: &Graph) -> Self {
        CoverSystem::new(g.n(), g.minimal_vertex_covers())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[VertexSet] {
        &self.covers
    }
}

/// Membership test for the intersection of s-th cover powers: every cover in
/// the system must carry weight at least s.
pub fn symbolic_member(cs: &CoverSystem, m: &Monomial, s: u32) -> bool {
    assert_eq!(m.n(), cs.n, "ambient mismatch");
    cs.covers.iter().all(|c| cover_weight(c, m) >= s)
}

fn cover_weight(c: &VertexSet, m: &Monomial) -> u32 {
    c.iter().map(|i| u32::from(m.exp(i))).sum()
}

/// All minimal nonnegative integer exponent vectors satisfying
/// `sum over C of e_i >= s` for every cover C in the system.
///
/// Branch and prune: grow vectors one unit at a time along a violated
/// constraint (picking the one with the fewest growable coordinates),
/// capping coordinates at s since no minimal solution exceeds that.
pub fn minimal_solutions(cs: &CoverSystem, s: u32) -> Vec<Vec<u16>> {
    minimal_solutions_budgeted(cs, s, &Budget::unlimited()).expect("unlimited budget")
}

pub fn minimal_solutions_budgeted(
    cs: &CoverSystem,
    s: u32,
    budget: &Budget,
) -> Result<Vec<Vec<u16>>, Interrupted> {
    assert!(s >= 1, "power must be positive");
    let n = cs.n;
    if cs.covers.is_empty() {
        return Ok(vec![vec![0; n]]); // empty intersection: the whole ring
    }
    let cap = u16::try_from(s).expect("power fits in u16");
    let cover_vars: Vec<Vec<usize>> = cs.covers.iter().map(|c| c.to_vec()).collect();

    let start = vec![0u16; n];
    let mut visited: HashSet<Vec<u16>> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    let mut feasible: Vec<Vec<u16>> = Vec::new();
    let mut steps = 0u64;
    while let Some(v) = stack.pop() {
        steps += 1;
        if steps.is_multiple_of(1024) {
            budget.check()?;
        }
        let mut branch: Option<&[usize]> = None;
        let mut branch_growable = usize::MAX;
        for vars in &cover_vars {
            let weight: u32 = vars.iter().map(|&i| u32::from(v[i])).sum();
            if weight >= s {
                continue;
            }
            let growable = vars.iter().filter(|&&i| v[i] < cap).count();
            if growable < branch_growable {
                branch_growable = growable;
                branch = Some(vars);
            }
        }
        match branch {
            None => feasible.push(v),
            Some(vars) => {
                for &i in vars {
                    if v[i] >= cap {
                        continue;
                    }
                    let mut w = v.clone();
                    w[i] += 1;
                    if visited.insert(w.clone()) {
                        stack.push(w);
                    }
                }
                // a violated constraint with nothing growable (the empty
                // cover) kills the branch: the system is infeasible
            }
        }
    }
    // different branches can reach comparable feasible vectors; keep minima
    feasible.sort_by_key(|v| v.iter().map(|&e| u32::from(e)).sum::<u32>());
    let mut minimal: Vec<Vec<u16>> = Vec::new();
    for v in feasible {
        if !minimal
            .iter()
            .any(|u| u.iter().zip(&v).all(|(&a, &b)| a <= b))
        {
            minimal.push(v);
        }
    }
    Ok(minimal)
}

/// The ideal `intersection over C of P_C^s` for an arbitrary cover family,
/// computed from the minimal solutions of the covering inequalities.
/// Memoized on (family, s); results are canonical so concurrent callers
/// always agree.
pub fn symbolic_power_of_covers(cs: &CoverSystem, s: u32) -> MonomialIdeal {
    symbolic_power_of_covers_budgeted(cs, s, &Budget::unlimited()).expect("unlimited budget")
}

pub fn symbolic_power_of_covers_budgeted(
    cs: &CoverSystem,
    s: u32,
    budget: &Budget,
) -> Result<MonomialIdeal, Interrupted> {
    static MEMO: Lazy<Mutex<HashMap<(CoverSystem, u32), MonomialIdeal>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(hit) = MEMO.lock().unwrap().get(&(cs.clone(), s)) {
        return Ok(hit.clone());
    }
    let gens = minimal_solutions_budgeted(cs, s, budget)?
        .into_iter()
        .map(Monomial::new)
        .collect();
    let ideal = MonomialIdeal::new(cs.n, gens);
    MEMO.lock().unwrap().insert((cs.clone(), s), ideal.clone());
    Ok(ideal)
}

/// The s-th symbolic power of the edge ideal of `g`. For an edgeless graph
/// the only minimal cover is empty and the result is the zero ideal.
pub fn symbolic_power(g: &Graph, s: u32) -> MonomialIdeal {
    symbolic_power_of_covers(&CoverSystem::of_graph(g), s)
}

pub fn symbolic_power_budgeted(
    g: &Graph,
    s: u32,
    budget: &Budget,
) -> Result<MonomialIdeal, Interrupted> {
    symbolic_power_of_covers_budgeted(&CoverSystem::of_graph(g), s, budget)
}

pub const ORACLE_MAX_N: usize = 7;
pub const ORACLE_MAX_S: u32 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("symbolic power oracle is limited to n <= {ORACLE_MAX_N}, s <= {ORACLE_MAX_S}; got n={n}, s={s}")]
pub struct OracleTooLarge {
    pub n: usize,
    pub s: u32,
}

/// Independent route to the symbolic power: expand each P_C^s into its full
/// generator list (all degree-s monomials in the cover variables) and
/// intersect them one by one. Exponential, hence the size guard.
pub fn symbolic_power_oracle(g: &Graph, s: u32) -> Result<MonomialIdeal, OracleTooLarge> {
    assert!(s >= 1, "power must be positive");
    let n = g.n();
    if n > ORACLE_MAX_N || s > ORACLE_MAX_S {
        return Err(OracleTooLarge { n, s });
    }
    let mut acc: Option<MonomialIdeal> = None;
    for cover in g.minimal_vertex_covers() {
        let p = prime_power_ideal(n, cover, s);
        acc = Some(match acc {
            None => p,
            Some(a) => a.intersect(&p),
        });
    }
    Ok(acc.expect("every graph has at least one minimal cover"))
}

/// P_C^s: all monomials of total degree s supported on C.
fn prime_power_ideal(n: usize, cover: VertexSet, s: u32) -> MonomialIdeal {
    let vars = cover.to_vec();
    let mut gens = Vec::new();
    let mut exps = vec![0u16; n];
    distribute(&vars, s as u16, &mut exps, &mut gens);
    MonomialIdeal::new(n, gens)
}

fn distribute(vars: &[usize], remaining: u16, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    match vars {
        [] => {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
        }
        [last] => {
            exps[*last] = remaining;
            out.push(Monomial::new(exps.clone()));
            exps[*last] = 0;
        }
        [first, rest @ ..] => {
            for e in 0..=remaining {
                exps[*first] = e;
                distribute(rest, remaining - e, exps, out);
            }
            exps[*first] = 0;
        }
    }
}
