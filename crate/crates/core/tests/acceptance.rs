//! End-to-end acceptance sweep: every statement checker over exhaustive
//! small-graph corpora, plus the oracle cross-checks. One test per criterion,
//! each printing a single summary line (run with `-- --nocapture` to see
//! them).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use edgeal_core::betti::{betti_table, taylor_betti_oracle, SimplicialComplex};
use edgeal_core::graphs::{enumerate_graphs, example42, Graph, VertexSet};
use edgeal_core::ideals::{Monomial, MonomialIdeal};
use edgeal_core::linalg::Field;
use edgeal_core::symbolic::{symbolic_power, symbolic_power_oracle};
use edgeal_core::theorems::{
    check_bipartite, check_col, check_cont, check_fococh, check_fouthr, check_froberg, check_rty,
    check_seccol, check_twth, CheckStatus, SweepConfig,
};

fn graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| enumerate_graphs(n, true).unwrap())
        .collect()
}

/// Unlimited time: these criteria demand 100% pass, so slowness must never
/// masquerade as failure.
fn unlimited() -> SweepConfig {
    SweepConfig {
        timeout: None,
        ..SweepConfig::default()
    }
}

fn conclude(name: &str, instances: usize, started: Instant, failures: Vec<String>) {
    let secs = started.elapsed().as_secs_f64();
    if failures.is_empty() {
        println!("[acceptance] {name}: PASS ({instances} instances, {secs:.1}s)");
    } else {
        println!(
            "[acceptance] {name}: FAIL ({} of {instances} instances, {secs:.1}s)",
            failures.len()
        );
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
        panic!("{name}: {} failing instances", failures.len());
    }
}

#[test]
fn criterion_01_colon_of_square_closed_form() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            let mut failures = Vec::new();
            let mut count = 0;
            for e in g.edges() {
                count += 1;
                let r = check_seccol(g, e, &cfg);
                if r.status != CheckStatus::Pass {
                    failures.push(format!("{} e={:?}: {:?}", g.to_graph6(), e, r.witness));
                }
            }
            (count, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "01 second symbolic power colon formula (n<=6, every edge)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_02_colon_factorization_two_edges() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(5)
        .par_iter()
        .map(|g| {
            let edges = g.edges();
            let mut failures = Vec::new();
            let mut count = 0;
            for (a, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[a..] {
                    count += 1;
                    let r = check_col(g, &[e1, e2], &cfg);
                    if r.status != CheckStatus::Pass {
                        failures.push(format!(
                            "{} u={:?}: {:?}",
                            g.to_graph6(),
                            r.params,
                            r.witness
                        ));
                    }
                }
            }
            (count, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "02 colon factorization through first edge (n<=5, s=2)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_03_symbolic_in_ordinary_containments() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            let mut failures = Vec::new();
            let mut count = 0;
            for s in 1..=4u32 {
                let r = check_cont(g, s, &cfg);
                match r.status {
                    CheckStatus::Pass => count += 1,
                    // the gate can only close for s >= 3
                    CheckStatus::NotApplicable if s >= 3 => {}
                    other => failures.push(format!(
                        "{} s={s}: {:?} {:?}",
                        g.to_graph6(),
                        other,
                        r.witness
                    )),
                }
            }
            (count, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "03 symbolic power inside ordinary power (n<=6, s=1..4 gated)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_04_small_symbolic_power_reg_bounds() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            if g.edge_count() == 0 {
                return (0, Vec::new());
            }
            let r = check_twth(g, &cfg);
            if r.status == CheckStatus::Pass {
                (1, Vec::new())
            } else {
                (
                    1,
                    vec![format!("{}: {:?} {:?}", g.to_graph6(), r.status, r.witness)],
                )
            }
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "04 reg of second and third symbolic powers bounded (n<=6)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_05_cochordal_symbolic_reg_exact() {
    let started = Instant::now();
    // fresh 60s budget per exponent; s=4 may time out, s=2 and s=3 may not
    let cfg = SweepConfig {
        timeout: Some(Duration::from_secs(60)),
        ..SweepConfig::default()
    };
    let results: Vec<(usize, usize, Vec<String>)> = graphs_up_to(5)
        .par_iter()
        .map(|g| {
            if g.edge_count() == 0 || !g.complement().is_chordal() {
                return (0, 0, Vec::new());
            }
            let r = check_fococh(g, &cfg);
            let mut failures = Vec::new();
            let mut timeouts = 0;
            match r.status {
                CheckStatus::Pass => {}
                CheckStatus::Timeout => {
                    timeouts = 1;
                    let late = r.witness.get("timed_out_s").cloned().unwrap_or_default();
                    if late != serde_json::json!([4]) {
                        failures.push(format!("{}: timeout outside s=4: {late}", g.to_graph6()));
                    }
                }
                other => failures.push(format!("{}: {:?} {:?}", g.to_graph6(), other, r.witness)),
            }
            (1, timeouts, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _, _)| c).sum();
    let timeouts: usize = results.iter().map(|(_, t, _)| t).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, _, f)| f).collect();
    let name =
        format!("05 chordal complement forces reg = 2s (n<=5, s=2..4, {timeouts} timeouts at s=4)");
    conclude(&name, instances, started, failures);
}

#[test]
fn criterion_06_fixture_graph_claims() {
    let started = Instant::now();
    let g = example42();
    let n = g.n();
    let ideal = MonomialIdeal::edge_ideal(&g);
    let u = Monomial::edge(n, 0, 1).mul(&Monomial::edge(n, 5, 6));
    let x3x5 = Monomial::parse("x3*x5", n).unwrap();
    let mut failures = Vec::new();

    let fourth_colon = symbolic_power(&g, 4).colon(&u);
    if !fourth_colon.contains(&x3x5) {
        failures.push("x3*x5 should lie in (I^(4) : u)".to_string());
    }
    let cube_colon = ideal.power(3).colon(&u);
    let x0: Vec<Monomial> = (0..n)
        .map(|t| Monomial::variable(n, t))
        .filter(|x| fourth_colon.contains(x))
        .collect();
    if !x0.is_empty() {
        failures.push(format!("X_0 should be empty, got {x0:?}"));
    }
    if cube_colon.sum(&MonomialIdeal::new(n, x0)).contains(&x3x5) {
        failures.push("x3*x5 should NOT lie in (I^3 : u) + (X_0)".to_string());
    }
    // the two chosen edges really form a gap
    let (sub, _) = g
        .induced_subgraph(VertexSet::from_indices(&[0, 1, 5, 6]))
        .unwrap();
    if g.is_gap_free() || sub.edge_count() != 2 {
        failures.push("x1x2 and x6x7 should form an induced gap".to_string());
    }
    // and the checker reports all of this as its witness
    let report = check_fouthr(&g, (0, 1), (5, 6), &unlimited());
    if report.status != CheckStatus::NotApplicable
        || report.witness.get("counterexample") != Some(&serde_json::json!("x3*x5"))
    {
        failures.push(format!("checker witness diverged: {:?}", report.witness));
    }
    conclude(
        "06 fixture graph reproduces all three claims",
        4,
        started,
        failures,
    );
}

#[test]
fn criterion_07_reg_two_iff_complement_chordal() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            if g.edge_count() == 0 {
                return (0, Vec::new());
            }
            let r = check_froberg(g, &cfg);
            if r.status == CheckStatus::Pass {
                (1, Vec::new())
            } else {
                (1, vec![format!("{}: {:?}", g.to_graph6(), r.witness)])
            }
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "07 reg = 2 iff chordal complement (n<=6, >=1 edge)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_08_bipartite_powers_coincide() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            if !g.is_bipartite() {
                return (0, Vec::new());
            }
            let mut failures = Vec::new();
            let mut count = 0;
            for s in 1..=3 {
                count += 1;
                let r = check_bipartite(g, s, &cfg);
                if r.status != CheckStatus::Pass {
                    failures.push(format!("{} s={s}: {:?}", g.to_graph6(), r.witness));
                }
            }
            (count, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "08 bipartite symbolic powers are ordinary (n<=6, s<=3)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_09_oracle_equivalences() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut instances = 0;

    // symbolic power via covering inequalities vs. iterated intersection
    let sym: Vec<String> = graphs_up_to(5)
        .par_iter()
        .flat_map_iter(|g| {
            let mut bad = Vec::new();
            for s in 1..=3 {
                let fast = symbolic_power(g, s);
                let slow = symbolic_power_oracle(g, s).unwrap();
                if fast != slow {
                    bad.push(format!("symbolic {} s={s}", g.to_graph6()));
                }
            }
            bad
        })
        .collect();
    instances += graphs_up_to(5).len() * 3;
    failures.extend(sym);

    // betti tables vs. the Taylor strand oracle on encountered powers
    let betti: Vec<(usize, Vec<String>)> = graphs_up_to(4)
        .par_iter()
        .map(|g| {
            let ideal = MonomialIdeal::edge_ideal(g);
            let mut bad = Vec::new();
            let mut count = 0;
            for s in 1..=2u32 {
                for powered in [ideal.power(s), symbolic_power(g, s)] {
                    if powered.is_zero() || powered.gens().len() > 10 {
                        continue;
                    }
                    count += 1;
                    if betti_table(&powered).unwrap() != taylor_betti_oracle(&powered).unwrap() {
                        bad.push(format!("betti {} s={s}", g.to_graph6()));
                    }
                }
            }
            (count, bad)
        })
        .collect();
    instances += betti.iter().map(|(c, _)| c).sum::<usize>();
    failures.extend(betti.into_iter().flat_map(|(_, f)| f));

    // frozen homology fixtures
    let hollow =
        SimplicialComplex::from_faces(vec![0, 1, 2], &[vec![0, 1], vec![1, 2], vec![0, 2]]);
    let simplex = SimplicialComplex::from_faces(vec![0, 1, 2], &[vec![0, 1, 2]]);
    let two_points = SimplicialComplex::from_faces(vec![0, 1], &[vec![0], vec![1]]);
    instances += 3;
    if hollow.reduced_homology_ranks(Field::Q) != BTreeMap::from([(1, 1)]) {
        failures.push("hollow triangle homology".to_string());
    }
    if !simplex.reduced_homology_ranks(Field::Q).is_empty() {
        failures.push("solid simplex homology".to_string());
    }
    if two_points.reduced_homology_ranks(Field::Q) != BTreeMap::from([(0, 1)]) {
        failures.push("two points homology".to_string());
    }

    conclude(
        "09 independent oracles agree (symbolic, betti, homology)",
        instances,
        started,
        failures,
    );
}

#[test]
fn criterion_10_equality_below_odd_girth() {
    let started = Instant::now();
    let cfg = unlimited();
    let results: Vec<(usize, Vec<String>)> = graphs_up_to(6)
        .par_iter()
        .map(|g| {
            let mut failures = Vec::new();
            let mut count = 0;
            for k in 1..=3u32 {
                let r = check_rty(g, k, &cfg);
                match r.status {
                    CheckStatus::Pass => count += 1,
                    CheckStatus::NotApplicable => {}
                    other => failures.push(format!(
                        "{} k={k}: {:?} {:?}",
                        g.to_graph6(),
                        other,
                        r.witness
                    )),
                }
            }
            (count, failures)
        })
        .collect();
    let instances: usize = results.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|(_, f)| f).collect();
    conclude(
        "10 high odd girth makes symbolic powers ordinary (n<=6, k<=3)",
        instances,
        started,
        failures,
    );
}
