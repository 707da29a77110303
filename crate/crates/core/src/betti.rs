//! Multigraded Betti numbers and Castelnuovo-Mumford regularity of monomial
//! ideals.
//!
//! For a monomial ideal I and a multidegree b, the rank of beta_{i,b}(I) is
//! the reduced homology rank in dimension i-1 of the upper Koszul complex
//! K^b(I): the simplicial complex on supp(b) whose faces S satisfy
//! x^b / x^S in I. Nonzero entries only occur for b in the lcm lattice of
//! the generators, so the table is a finite exact computation. Regularity is
//! max(deg b - i) over nonzero entries.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::budget::{Budget, Interrupted};
use crate::ideals::{Monomial, MonomialIdeal};
use crate::linalg::{rank, Field};

/// Taylor-complex cross check is exponential in the generator count.
pub const TAYLOR_MAX_GENERATORS: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BettiError {
    #[error("the zero ideal has no finite free resolution data")]
    ZeroIdeal,
    #[error("regularity of the unit ideal is not defined")]
    UnitIdeal,
    #[error("Taylor cross check supports at most {max} generators, ideal has {got}")]
    TooManyGenerators { max: usize, got: usize },
    #[error(transparent)]
    Interrupted(#[from] Interrupted),
}

/// Finite simplicial complex on an explicit (possibly empty) vertex list,
/// stored by its facets as bitmasks over local vertex indices.
///
/// Two degenerate complexes matter and are distinct: the void complex has no
/// faces at all (`facets` empty), while the irrelevant complex has the empty
/// face as its only face (`facets == [0]`). The latter has reduced homology
/// of rank one in dimension -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn void(vertices: Vec<usize>) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// Builds the complex generated by `faces`, each a list of labels drawn
    /// from `vertices`. Non-maximal faces are dropped.
    pub fn from_faces(vertices: Vec<usize>, faces: &[Vec<usize>]) -> Self {
        assert!(vertices.len() <= 32, "complex too large");
        let index: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        assert_eq!(index.len(), vertices.len(), "duplicate vertex label");
        let masks: Vec<u32> = faces
            .iter()
            .map(|face| {
                let mut mask = 0u32;
                for v in face {
                    let i = *index.get(v).expect("face label not in vertex list");
                    mask |= 1 << i;
                }
                mask
            })
            .collect();
        Self::from_local_facets(vertices, masks)
    }

    fn from_local_facets(vertices: Vec<usize>, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut facets: Vec<u32> = Vec::new();
        for m in masks {
            if !facets.iter().any(|&f| m & !f == 0) {
                facets.push(m);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Facets as sorted label lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| self.unpack(f)).collect()
    }

    fn unpack(&self, mask: u32) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.vertices[i])
            .collect()
    }

    /// All faces grouped by cardinality; `result[k]` lists the k-element
    /// faces as sorted masks. Empty for the void complex.
    fn faces_by_cardinality(&self) -> Vec<Vec<u32>> {
        if self.is_void() {
            return Vec::new();
        }
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        for &facet in &self.facets {
            // submask walk, includes 0 and facet itself
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let max_card = seen.iter().map(|m| m.count_ones()).max().unwrap() as usize;
        let mut by_card: Vec<Vec<u32>> = vec![Vec::new(); max_card + 1];
        for m in seen {
            by_card[m.count_ones() as usize].push(m);
        }
        by_card
    }

    /// Reduced Euler characteristic: sum over faces of (-1)^dim, the empty
    /// face contributing -1 at dimension -1. Zero for the void complex.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (card, faces) in self.faces_by_cardinality().iter().enumerate() {
            let sign = if card % 2 == 0 { -1 } else { 1 };
            chi += sign * faces.len() as i64;
        }
        chi
    }

    /// Ranks of the reduced homology groups over `field`, keyed by dimension;
    /// dimensions with rank zero are omitted. The irrelevant complex reports
    /// `{-1: 1}`, the void complex reports nothing.
    pub fn reduced_homology_ranks(&self, field: Field) -> BTreeMap<i32, usize> {
        let by_card = self.faces_by_cardinality();
        if by_card.is_empty() {
            return BTreeMap::new();
        }
        let max_card = by_card.len() - 1;
        // boundary_ranks[k] = rank of d_k : C_k -> C_{k-1} (cardinality k
        // faces to cardinality k-1 faces, reduced chain complex so C_0 is
        // spanned by the empty face). d_0 = 0.
        let mut boundary_ranks = vec![0usize; max_card + 2];
        for k in 1..=max_card {
            let rows = &by_card[k - 1];
            let cols = &by_card[k];
            let row_index: HashMap<u32, usize> =
                rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
            for (c, &face) in cols.iter().enumerate() {
                let mut sign = 1i64;
                for i in 0..32 {
                    if face >> i & 1 == 1 {
                        let sub = face & !(1 << i);
                        matrix[row_index[&sub]][c] = sign;
                        sign = -sign;
                    }
                }
            }
            boundary_ranks[k] = rank(field, &matrix);
        }
        let mut out = BTreeMap::new();
        for k in 0..=max_card {
            let h = by_card[k].len() - boundary_ranks[k] - boundary_ranks[k + 1];
            if h > 0 {
                out.insert(k as i32 - 1, h);
            }
        }
        out
    }
}

/// Upper Koszul complex of `ideal` at multidegree `b`: faces are the subsets
/// S of supp(b) with x^b / x^S in the ideal.
///
/// A generator g dividing b contributes every subset of
/// {v in supp(b) : g_v < b_v} as a face, and those simplices cover all faces,
/// so the facets are the maximal such complement-of-tight-coordinates sets.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    assert_eq!(ideal.n(), b.n(), "ambient variable count mismatch");
    let supp: Vec<usize> = b.support().collect();
    assert!(supp.len() <= 32, "multidegree support too large");
    let mut masks: Vec<u32> = Vec::new();
    for g in ideal.gens() {
        if !g.divides(b) {
            continue;
        }
        let mut mask = 0u32;
        for (i, &v) in supp.iter().enumerate() {
            if g.exp(v) < b.exp(v) {
                mask |= 1 << i;
            }
        }
        masks.push(mask);
    }
    if masks.is_empty() {
        SimplicialComplex::void(supp)
    } else {
        SimplicialComplex::from_local_facets(supp, masks)
    }
}

/// All joins of generator multidegrees: the lcm lattice, sorted, including
/// the generators themselves and the top element.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>, BettiError> {
    if ideal.is_zero() {
        return Err(BettiError::ZeroIdeal);
    }
    let mut set: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut worklist: Vec<Monomial> = set.iter().cloned().collect();
    while let Some(b) = worklist.pop() {
        for g in ideal.gens() {
            let join = b.lcm(g);
            if set.insert(join.clone()) {
                worklist.push(join);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Castelnuovo-Mumford regularity, as `max(deg b - i)` over nonzero entries
/// of a multigraded Betti table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Regularity(pub u32);

impl std::fmt::Display for Regularity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multigraded Betti table of a monomial ideal (of the ideal, not the
/// quotient ring: beta_0 counts the generators).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(u32, Monomial), u32>,
}

/// One nonzero table entry, the serialization unit.
#[derive(Serialize)]
pub struct BettiEntry {
    pub i: u32,
    pub multidegree: Vec<u16>,
    pub total_degree: u32,
    pub rank: u32,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self, i: u32, b: &Monomial) -> u32 {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// Nonzero entries in (homological index, total degree, multidegree)
    /// order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &Monomial, u32)> {
        self.entries.iter().map(|((i, b), &r)| (*i, b, r))
    }

    /// Total Betti number: sum of ranks at homological index `i`.
    pub fn total(&self, i: u32) -> u32 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &r)| r)
            .sum()
    }

    pub fn max_index(&self) -> u32 {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> Regularity {
        let r = self
            .entries
            .keys()
            .map(|(i, b)| b.deg() - i)
            .max()
            .expect("betti table of a nonzero ideal has entries");
        Regularity(r)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // BTreeMap key order is (i, deg b, exponents), already deterministic
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for ((i, b), &rank) in &self.entries {
            seq.serialize_element(&BettiEntry {
                i: *i,
                multidegree: b.exps().to_vec(),
                total_degree: b.deg(),
                rank,
            })?;
        }
        seq.end()
    }
}

/// Betti table over Q with no time limit.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    betti_table_in(ideal, Field::Q, &Budget::unlimited())
}

/// Betti table over a chosen field, interruptible. Multidegrees of the lcm
/// lattice are processed in parallel; assembly into the BTreeMap keeps the
/// result deterministic.
pub fn betti_table_in(
    ideal: &MonomialIdeal,
    field: Field,
    budget: &Budget,
) -> Result<BettiTable, BettiError> {
    type DegreeRanks = Vec<(Monomial, BTreeMap<i32, usize>)>;
    let lattice = lcm_lattice(ideal)?;
    let per_degree: Result<DegreeRanks, Interrupted> = lattice
        .into_par_iter()
        .map(|b| {
            budget.check()?;
            let ranks = upper_koszul(ideal, &b).reduced_homology_ranks(field);
            Ok((b, ranks))
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (b, ranks) in per_degree? {
        for (dim, h) in ranks {
            let i = u32::try_from(dim + 1).expect("upper Koszul homology starts at dim -1");
            entries.insert((i, b.clone()), h as u32);
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        entries,
    })
}

/// Regularity over Q. Errors on the zero ideal (no table) and the unit ideal
/// (callers that want a convention for it must supply their own).
pub fn regularity(ideal: &MonomialIdeal) -> Result<Regularity, BettiError> {
    regularity_in(ideal, Field::Q, &Budget::unlimited())
}

pub fn regularity_in(
    ideal: &MonomialIdeal,
    field: Field,
    budget: &Budget,
) -> Result<Regularity, BettiError> {
    if ideal.is_zero() {
        return Err(BettiError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(BettiError::UnitIdeal);
    }
    Ok(betti_table_in(ideal, field, budget)?.regularity())
}

/// Independent Betti table from the Taylor complex: for each multidegree b,
/// the strand spanned by generator subsets with lcm exactly b, with the
/// boundary keeping only lcm-preserving deletions. Exponential in the number
/// of generators, hence the guard; used to cross-check `betti_table`.
pub fn taylor_betti_oracle(ideal: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    taylor_betti_oracle_in(ideal, Field::Q)
}

pub fn taylor_betti_oracle_in(
    ideal: &MonomialIdeal,
    field: Field,
) -> Result<BettiTable, BettiError> {
    if ideal.is_zero() {
        return Err(BettiError::ZeroIdeal);
    }
    let gens = ideal.gens();
    let m = gens.len();
    if m > TAYLOR_MAX_GENERATORS {
        return Err(BettiError::TooManyGenerators {
            max: TAYLOR_MAX_GENERATORS,
            got: m,
        });
    }
    // lcms[mask] = lcm of the generators selected by mask
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << m);
    lcms.push(Monomial::one(ideal.n()));
    for mask in 1u32..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = lcms[(mask & (mask - 1)) as usize].clone();
        lcms.push(rest.lcm(&gens[low]));
    }
    let mut strands: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << m) {
        strands
            .entry(lcms[mask as usize].clone())
            .or_default()
            .push(mask);
    }
    let mut entries = BTreeMap::new();
    for (b, masks) in strands {
        let max_card = masks.iter().map(|s| s.count_ones()).max().unwrap() as usize;
        let mut by_card: Vec<Vec<u32>> = vec![Vec::new(); max_card + 1];
        for s in masks {
            by_card[s.count_ones() as usize].push(s);
        }
        for level in by_card.iter_mut() {
            level.sort_unstable();
        }
        // d_k : strand subsets of size k -> size k-1; deleting a generator
        // only stays in the strand when the lcm is preserved. d_1 = 0: the
        // empty subset has lcm 1, never a strand multidegree here.
        let mut boundary_ranks = vec![0usize; max_card + 2];
        for k in 2..=max_card {
            let rows = &by_card[k - 1];
            let cols = &by_card[k];
            let row_index: HashMap<u32, usize> =
                rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
            for (c, &subset) in cols.iter().enumerate() {
                let mut sign = 1i64;
                for j in 0..m {
                    if subset >> j & 1 == 1 {
                        let sub = subset & !(1 << j);
                        if lcms[sub as usize] == b {
                            matrix[row_index[&sub]][c] = sign;
                        }
                        sign = -sign;
                    }
                }
            }
            boundary_ranks[k] = rank(field, &matrix);
        }
        for k in 1..=max_card {
            let h = by_card[k].len() - boundary_ranks[k] - boundary_ranks[k + 1];
            if h > 0 {
                entries.insert((k as u32 - 1, b.clone()), h as u32);
            }
        }
    }
    Ok(BettiTable {
        n: ideal.n(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, path, Graph};

    fn ideal(src: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(src, n).unwrap()
    }

    fn mono(src: &str, n: usize) -> Monomial {
        Monomial::parse(src, n).unwrap()
    }

    #[test]
    fn homology_of_fixed_complexes() {
        let hollow_triangle =
            SimplicialComplex::from_faces(vec![0, 1, 2], &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(
            hollow_triangle.reduced_homology_ranks(Field::Q),
            BTreeMap::from([(1, 1)])
        );
        assert_eq!(hollow_triangle.reduced_euler_characteristic(), -1);

        let full_triangle = SimplicialComplex::from_faces(vec![0, 1, 2], &[vec![0, 1, 2]]);
        assert!(full_triangle.reduced_homology_ranks(Field::Q).is_empty());
        assert_eq!(full_triangle.reduced_euler_characteristic(), 0);

        let two_points = SimplicialComplex::from_faces(vec![3, 7], &[vec![3], vec![7]]);
        assert_eq!(
            two_points.reduced_homology_ranks(Field::Q),
            BTreeMap::from([(0, 1)])
        );

        let irrelevant = SimplicialComplex::from_faces(vec![0, 1], &[vec![]]);
        assert!(!irrelevant.is_void());
        assert_eq!(
            irrelevant.reduced_homology_ranks(Field::Q),
            BTreeMap::from([(-1, 1)])
        );
        assert_eq!(irrelevant.reduced_euler_characteristic(), -1);

        let void = SimplicialComplex::void(vec![0, 1]);
        assert!(void.is_void());
        assert!(void.reduced_homology_ranks(Field::Q).is_empty());
        assert_eq!(void.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn facet_filter_drops_dominated_faces() {
        let k = SimplicialComplex::from_faces(vec![0, 1, 2], &[vec![0], vec![0, 1], vec![2]]);
        assert_eq!(k.facets(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn upper_koszul_shapes() {
        let k3 =
            MonomialIdeal::edge_ideal(&Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap());
        // at x1*x2*x3 each edge generator leaves exactly its complement vertex
        let k = upper_koszul(&k3, &mono("x1*x2*x3", 3));
        assert_eq!(k.facets(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(k.reduced_homology_ranks(Field::Q), BTreeMap::from([(0, 2)]));
        // multidegree outside the ideal: void
        assert!(upper_koszul(&k3, &mono("x1", 3)).is_void());
        // at a generator the complex is the irrelevant complex
        let at_gen = upper_koszul(&k3, &mono("x1*x2", 3));
        assert_eq!(
            at_gen.reduced_homology_ranks(Field::Q),
            BTreeMap::from([(-1, 1)])
        );
    }

    #[test]
    fn lcm_lattice_of_square_cycle() {
        let c4 = MonomialIdeal::edge_ideal(&cycle(4));
        let lattice = lcm_lattice(&c4).unwrap();
        // 4 generators, 4 joins of adjacent pairs collapse to triples, plus
        // the two diagonal joins and the top: 9 distinct multidegrees
        assert_eq!(lattice.len(), 9);
        assert!(lattice.contains(&mono("x1*x2*x3*x4", 4)));
        assert_eq!(
            lcm_lattice(&MonomialIdeal::zero(4)),
            Err(BettiError::ZeroIdeal)
        );
    }

    #[test]
    fn koszul_resolution_of_three_variables() {
        let m = ideal("(x1, x2, x3)", 3);
        let table = betti_table(&m).unwrap();
        assert_eq!(table.total(0), 3);
        assert_eq!(table.total(1), 3);
        assert_eq!(table.total(2), 1);
        assert_eq!(table.max_index(), 2);
        assert_eq!(table.rank(2, &mono("x1*x2*x3", 3)), 1);
        assert_eq!(regularity(&m).unwrap(), Regularity(1));
    }

    #[test]
    fn triangle_edge_ideal_table() {
        let k3 = MonomialIdeal::edge_ideal(&complete(3));
        let table = betti_table(&k3).unwrap();
        assert_eq!(table.total(0), 3);
        assert_eq!(table.total(1), 2);
        assert_eq!(table.rank(1, &mono("x1*x2*x3", 3)), 2);
        assert_eq!(table.max_index(), 1);
        assert_eq!(regularity(&k3).unwrap(), Regularity(2));
    }

    #[test]
    fn zeroth_betti_numbers_sit_exactly_on_the_generators() {
        for i in [
            MonomialIdeal::edge_ideal(&cycle(5)),
            ideal("(x1^2, x1*x2, x2^3)", 2),
            MonomialIdeal::edge_ideal(&path(4)).power(2),
        ] {
            let table = betti_table(&i).unwrap();
            let degree_zero: Vec<Monomial> = table
                .entries()
                .filter(|(idx, _, _)| *idx == 0)
                .map(|(_, b, r)| {
                    assert_eq!(r, 1);
                    b.clone()
                })
                .collect();
            assert_eq!(&degree_zero, i.gens());
        }
    }

    #[test]
    fn frozen_regularity_values() {
        let path3 = MonomialIdeal::edge_ideal(&path(3));
        assert_eq!(regularity(&path3).unwrap(), Regularity(2));
        assert_eq!(regularity(&path3.power(2)).unwrap(), Regularity(4));
        let edge = MonomialIdeal::edge_ideal(&complete(2));
        assert_eq!(regularity(&edge).unwrap(), Regularity(2));
        let c5 = MonomialIdeal::edge_ideal(&cycle(5));
        assert_eq!(regularity(&c5).unwrap(), Regularity(3));
    }

    #[test]
    fn degenerate_ideals_are_rejected() {
        assert_eq!(
            regularity(&MonomialIdeal::zero(3)),
            Err(BettiError::ZeroIdeal)
        );
        assert_eq!(
            regularity(&MonomialIdeal::unit(3)),
            Err(BettiError::UnitIdeal)
        );
        // the unit ideal still has a betti table (one generator in degree 0)
        let table = betti_table(&MonomialIdeal::unit(3)).unwrap();
        assert_eq!(table.total(0), 1);
        assert_eq!(table.max_index(), 0);
    }

    #[test]
    fn taylor_strands_match_upper_koszul() {
        let samples = vec![
            ideal("(x1, x2, x3)", 3),
            MonomialIdeal::edge_ideal(&complete(3)),
            MonomialIdeal::edge_ideal(&cycle(4)),
            MonomialIdeal::edge_ideal(&cycle(5)),
            MonomialIdeal::edge_ideal(&path(4)).power(2),
            ideal("(x1^2, x1*x2, x2^2, x2*x3^3)", 3),
        ];
        for i in samples {
            let fast = betti_table(&i).unwrap();
            let slow = taylor_betti_oracle(&i).unwrap();
            assert_eq!(fast, slow, "tables differ for {i}");
        }
    }

    #[test]
    fn taylor_guard_and_field_variant() {
        let big = MonomialIdeal::edge_ideal(&complete(6));
        assert_eq!(
            taylor_betti_oracle(&big),
            Err(BettiError::TooManyGenerators {
                max: TAYLOR_MAX_GENERATORS,
                got: 15
            })
        );
        let c5 = MonomialIdeal::edge_ideal(&cycle(5));
        // squarefree small cases have no torsion, char 2 agrees with Q
        assert_eq!(
            betti_table_in(&c5, Field::Fp(2), &Budget::unlimited()).unwrap(),
            betti_table(&c5).unwrap()
        );
    }

    #[test]
    fn alternating_sums_recover_euler_characteristics() {
        let i = MonomialIdeal::edge_ideal(&cycle(4)).power(2);
        let table = betti_table(&i).unwrap();
        for b in lcm_lattice(&i).unwrap() {
            let complex = upper_koszul(&i, &b);
            let alternating: i64 = table
                .entries()
                .filter(|(_, eb, _)| *eb == &b)
                .map(|(idx, _, r)| if idx % 2 == 0 { r as i64 } else { -(r as i64) })
                .sum();
            assert_eq!(alternating, -complex.reduced_euler_characteristic());
        }
    }

    #[test]
    fn serialization_is_sorted_and_complete() {
        let table = betti_table(&MonomialIdeal::edge_ideal(&complete(3))).unwrap();
        let json = serde_json::to_value(&table).unwrap();
        let rows = json.as_array().unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0]["i"], 0);
        assert_eq!(rows[0]["total_degree"], 2);
        assert_eq!(rows[3]["i"], 1);
        assert_eq!(rows[3]["multidegree"], serde_json::json!([1, 1, 1]));
        assert_eq!(rows[3]["rank"], 2);
    }

    #[test]
    fn interruption_surfaces_as_an_error() {
        let i = MonomialIdeal::edge_ideal(&cycle(5)).power(2);
        let spent = Budget::with_timeout(std::time::Duration::from_secs(0));
        assert!(matches!(
            betti_table_in(&i, Field::Q, &spent),
            Err(BettiError::Interrupted(_))
        ));
    }
}
