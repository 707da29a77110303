//! Monomials and monomial ideals of `K[x1..xn]`.
//!
//! A `MonomialIdeal` is always kept in canonical form: the unique minimal
//! generating set, sorted by total degree and then lexicographically with x1
//! heaviest. Two ideals are equal as ideals iff they compare equal. The zero
//! ideal has no generators; the unit ideal is generated by 1.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graphs::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("parse error in {input:?}: {msg}")]
    Parse { input: String, msg: String },
}

fn parse_err(input: &str, msg: impl Into<String>) -> IdealError {
    IdealError::Parse {
        input: input.to_string(),
        msg: msg.into(),
    }
}

// ============================================================================
// Monomial
// ============================================================================

/// A monomial as an exponent vector over a fixed ambient ring `K[x1..xn]`.
/// The ambient size is the vector length; mixing ambients panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        debug_assert!(!exps.is_empty() && exps.len() <= 32);
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial::new(exps)
    }

    /// x_u * x_v for an edge u != v.
    pub fn edge(n: usize, u: usize, v: usize) -> Self {
        assert!(u < n && v < n && u != v);
        let mut exps = vec![0; n];
        exps[u] = 1;
        exps[v] = 1;
        Monomial::new(exps)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn deg(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn same_ambient(&self, other: &Monomial) {
        assert_eq!(
            self.n(),
            other.n(),
            "ambient mismatch: {} vs {} variables",
            self.n(),
            other.n()
        );
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.same_ambient(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.same_ambient(other);
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Exact division; panics unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        assert!(other.divides(self), "inexact monomial division");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.same_ambient(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.same_ambient(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps)
    }

    /// Parse the text form "x1^2*x3" (or "1") in an ambient of n variables.
    pub fn parse(input: &str, n: usize) -> Result<Self, IdealError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(parse_err(input, "empty monomial"));
        }
        if s == "1" {
            return Ok(Monomial::one(n));
        }
        let mut exps = vec![0u16; n];
        for factor in s.split('*') {
            let f = factor.trim();
            let rest = f
                .strip_prefix('x')
                .ok_or_else(|| parse_err(input, format!("expected x<k>, got {f:?}")))?;
            let (var, pow) = match rest.split_once('^') {
                Some((v, p)) => (v, p),
                None => (rest, "1"),
            };
            let var: usize = var
                .parse()
                .map_err(|_| parse_err(input, format!("bad variable index {var:?}")))?;
            if var == 0 || var > n {
                return Err(parse_err(
                    input,
                    format!("variable x{var} outside x1..x{n}"),
                ));
            }
            let pow: u16 = pow
                .parse()
                .map_err(|_| parse_err(input, format!("bad exponent {pow:?}")))?;
            exps[var - 1] = exps[var - 1]
                .checked_add(pow)
                .ok_or_else(|| parse_err(input, "exponent overflow"))?;
        }
        Ok(Monomial::new(exps))
    }
}

impl Ord for Monomial {
    // degree first, then lex with x1 heaviest, so (x1*x2, x1*x3, x2*x3)
    // lists in the conventional order
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exps.len()))?;
        for &e in &self.exps {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

// ============================================================================
// MonomialIdeal
// ============================================================================

/// A monomial ideal in canonical form (minimal generators, sorted).
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set: drops duplicates and
    /// divisibility-redundant generators, sorts the rest.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(
                g.n(),
                n,
                "ambient mismatch: generator in {} variables, ideal in {}",
                g.n(),
                n
            );
        }
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            // kept generators have degree <= deg(g), so divisibility only
            // needs checking against them
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { n, gens: minimal }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal::new(n, vec![Monomial::one(n)])
    }

    /// The edge ideal (x_u x_v : uv an edge). Edgeless graphs give the zero
    /// ideal.
    pub fn edge_ideal(g: &Graph) -> Self {
        let n = g.n();
        let gens = g
            .edges()
            .iter()
            .map(|&(u, v)| Monomial::edge(n, u, v))
            .collect();
        MonomialIdeal::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    fn same_ambient(&self, other: &MonomialIdeal) {
        assert_eq!(
            self.n, other.n,
            "ambient mismatch: {} vs {} variables",
            self.n, other.n
        );
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.same_ambient(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ambient(other);
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::new(self.n, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ambient(other);
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// s-th power; s = 0 gives the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..s {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ambient(other);
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)))
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Colon ideal (I : u), generated by g / gcd(g, u).
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(u))).collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Parse the text form "(x1*x2, x2*x3)"; "(0)" and "()" give the zero
    /// ideal.
    pub fn parse(input: &str, n: usize) -> Result<Self, IdealError> {
        let s = input.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_err(input, "expected parenthesized generator list"))?
            .trim();
        if inner.is_empty() || inner == "0" {
            return Ok(MonomialIdeal::zero(n));
        }
        let gens = inner
            .split(',')
            .map(|tok| Monomial::parse(tok, n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal::new(n, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
