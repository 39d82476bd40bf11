//! Local standard bases and dimension counts for quotients of the local ring.
//!
//! The completion loop is Buchberger's, with s-pairs processed by increasing
//! lcm degree and the coprimality criterion; normal forms are Mora weak
//! normal forms, so the same loop serves global, local and mixed block
//! orders. Quotient dimensions are counted combinatorially on the leading
//! ideal of a standard basis.

mod dimension;
mod lazard;
mod mora;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder, Polynomial};

pub use dimension::{leading_ideal_krull_dim, local_quotient_dim};
pub use ops::{
    ideal_eliminate, ideal_intersect, ideal_product, ideal_quotient_by_element, ideal_sum,
};

use mora::OrderedPoly;

/// Finite generator list in a fixed ambient ring with an active term order.
#[derive(Debug, Clone)]
pub struct Ideal {
    gens: Vec<Polynomial>,
    nvars: usize,
    order: MonomialOrder,
    is_standard_basis: bool,
}

impl Ideal {
    /// Build an ideal, dropping zero generators.
    pub fn new(nvars: usize, order: MonomialOrder, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator in wrong ring");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { gens, nvars, order, is_standard_basis: false }
    }

    /// The zero ideal in the local order.
    pub fn zero(nvars: usize) -> Self {
        Ideal {
            gens: Vec::new(),
            nvars,
            order: MonomialOrder::LocalAntiDegRevLex,
            is_standard_basis: true,
        }
    }

    /// The unit ideal `(1)`, used as the marker for an empty locus.
    pub fn unit(nvars: usize) -> Self {
        Ideal {
            gens: vec![Polynomial::one(nvars)],
            nvars,
            order: MonomialOrder::LocalAntiDegRevLex,
            is_standard_basis: true,
        }
    }

    pub fn local(nvars: usize, gens: Vec<Polynomial>) -> Self {
        Ideal::new(nvars, MonomialOrder::LocalAntiDegRevLex, gens)
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_flagged_standard_basis(&self) -> bool {
        self.is_standard_basis
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Re-interpret the generators under a different order (drops the flag).
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        if self.order == order {
            return self.clone();
        }
        Ideal {
            gens: self.gens.clone(),
            nvars: self.nvars,
            order,
            is_standard_basis: false,
        }
    }

    pub fn push(&mut self, p: Polynomial) {
        if !p.is_zero() {
            assert_eq!(p.nvars(), self.nvars);
            self.gens.push(p);
            self.is_standard_basis = false;
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal with {} generators in {} variables", self.gens.len(), self.nvars)
    }
}

/// A nonnegative dimension count, or the marker for an unbounded one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantValue {
    Finite(u64),
    Infinite,
}

impl InvariantValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, InvariantValue::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            InvariantValue::Finite(n) => Some(*n),
            InvariantValue::Infinite => None,
        }
    }

    pub fn expect_finite(&self, what: &str) -> Result<u64> {
        self.finite().ok_or_else(|| Error::Precondition(format!("{what} is infinite")))
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Finite(n) => write!(f, "{n}"),
            InvariantValue::Infinite => write!(f, "infinite"),
        }
    }
}

/// Mora weak normal form of `p` against the generator list `basis`.
///
/// The remainder `r` satisfies `u * p = q + r` with `q` in the ideal
/// generated by `basis` (as an ideal of the ring of the order) and `u` a
/// local unit; no leading monomial of `basis` divides the leading monomial
/// of a nonzero `r`.
pub fn mora_normal_form(
    p: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Polynomial {
    if p.is_zero() || basis.is_empty() {
        return p.clone();
    }
    let op = OrderedPoly::from_poly(p, order);
    let ob: Vec<OrderedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrderedPoly::from_poly(g, order))
        .collect();
    mora::normal_form(&op, &ob, order).to_poly(p.nvars())
}

/// Standard basis of `I` for its stored order, computed through the
/// homogenised Gröbner basis (see [`lazard`]).
///
/// The result generates the same ideal of the (localised) ring, its leading
/// monomials generate the leading ideal, generators are primitive with a
/// deterministic sort, and the standard-basis flag is set.
pub fn standard_basis(ideal: &Ideal) -> Ideal {
    if ideal.is_standard_basis {
        return ideal.clone();
    }
    let order = ideal.order.clone();
    let raw = lazard::standard_basis_gens(&ideal.gens, &order);

    // Minimalise on the dehomogenised leading monomials, visiting low-degree
    // leads first so the divisor is always kept.
    let mut keep: Vec<Polynomial> = Vec::new();
    let mut idx: Vec<usize> = (0..raw.len()).collect();
    idx.sort_by_key(|&i| raw[i].leading_monomial(&order).unwrap().total_degree());
    for &i in &idx {
        let lm = raw[i].leading_monomial(&order).unwrap();
        if keep
            .iter()
            .any(|k| k.leading_monomial(&order).unwrap().divides(lm))
        {
            continue;
        }
        keep.push(raw[i].clone());
    }

    let mut gens: Vec<Polynomial> = keep.iter().map(|g| g.primitive_part(&order)).collect();
    gens.sort_by(|a, b| {
        order
            .compare(
                b.leading_monomial(&order).unwrap(),
                a.leading_monomial(&order).unwrap(),
            )
            .then_with(|| canonical_cmp(a, b))
    });
    Ideal {
        gens,
        nvars: ideal.nvars,
        order,
        is_standard_basis: true,
    }
}

/// Deterministic total comparison used only to fix generator order.
fn canonical_cmp(a: &Polynomial, b: &Polynomial) -> std::cmp::Ordering {
    let av: Vec<_> = a.terms().collect();
    let bv: Vec<_> = b.terms().collect();
    av.cmp(&bv)
}

/// Minimal generators of the leading-term ideal, computing a standard basis
/// when needed. Sorted canonically, so equal leading ideals give equal
/// vectors.
pub fn leading_monomials(ideal: &Ideal) -> Vec<Monomial> {
    let sb = standard_basis(ideal);
    let mut lms = minimal_leading_monomials(&sb);
    lms.sort();
    lms
}

/// Membership test in the localised ring: `p` lies in `I` exactly when
/// adjoining it does not change the leading ideal.
pub fn ideal_contains(ideal: &Ideal, p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    let mut enlarged = ideal.clone();
    enlarged.push(p.clone());
    leading_monomials(ideal) == leading_monomials(&enlarged)
}

/// Ideal equality through leading ideals: each side equals the sum exactly
/// when its leading ideal already generates the sum's leading ideal.
pub fn ideal_eq(a: &Ideal, b: &Ideal) -> bool {
    let sum = ops::ideal_sum(a, &b.with_order(a.order().clone()));
    let l_sum = leading_monomials(&sum);
    leading_monomials(a) == l_sum && leading_monomials(b) == l_sum
}

/// An ideal of the local ring is the unit ideal iff the leading ideal of a
/// standard basis contains 1.
pub fn is_unit_ideal(ideal: &Ideal) -> bool {
    let sb = standard_basis(ideal);
    sb.gens
        .iter()
        .any(|g| g.leading_monomial(sb.order()).map(Monomial::is_one).unwrap_or(false))
}

/// Minimal generators of the leading-term ideal of a standard basis.
pub(crate) fn minimal_leading_monomials(sb: &Ideal) -> Vec<Monomial> {
    debug_assert!(sb.is_standard_basis);
    let mut lms: Vec<Monomial> = sb
        .gens
        .iter()
        .filter_map(|g| g.leading_monomial(&sb.order).cloned())
        .collect();
    lms.sort_by_key(Monomial::total_degree);
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in lms {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    pub(crate) fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    pub(crate) fn parse(text: &str, names: &[&str]) -> Polynomial {
        parse_polynomial(text, &vars(names)).unwrap()
    }

    pub(crate) fn local_ideal(gens: &[&str], names: &[&str]) -> Ideal {
        Ideal::local(names.len(), gens.iter().map(|g| parse(g, names)).collect())
    }

    #[test]
    fn monomial_generators_are_already_standard() {
        let i = local_ideal(&["x", "y"], &["x", "y"]);
        let sb = standard_basis(&i);
        assert_eq!(sb.gens().len(), 2);
        assert!(sb.is_flagged_standard_basis());
        let lms = minimal_leading_monomials(&sb);
        assert_eq!(lms.len(), 2);
    }

    #[test]
    fn unit_times_variable_has_leading_ideal_x() {
        let i = local_ideal(&["x - x^2"], &["x"]);
        let sb = standard_basis(&i);
        let lms = minimal_leading_monomials(&sb);
        assert_eq!(lms, vec![Monomial::var(1, 0)]);
    }

    #[test]
    fn standard_basis_is_idempotent() {
        let i = local_ideal(&["x*y - z^2", "x + y", "z"], &["x", "y", "z"]);
        let sb = standard_basis(&i);
        let sb2 = standard_basis(&sb);
        assert_eq!(sb.gens(), sb2.gens());
        // recomputing from scratch (flag cleared) gives the same generators
        let again = standard_basis(&sb.with_order(MonomialOrder::GlobalDegRevLex).with_order(
            MonomialOrder::LocalAntiDegRevLex,
        ));
        assert_eq!(sb.gens(), again.gens());
    }

    #[test]
    fn membership_by_normal_form() {
        let i = local_ideal(&["x*y - z^2", "x + y"], &["x", "y", "z"]);
        let sb = standard_basis(&i);
        let member = parse("(x + y)*z - 3*(x*y - z^2)", &["x", "y", "z"]);
        assert!(ideal_contains(&sb, &member));
        assert!(!ideal_contains(&sb, &parse("z", &["x", "y", "z"])));
    }

    #[test]
    fn unit_ideal_detection() {
        let i = local_ideal(&["1 + x"], &["x", "y"]);
        assert!(is_unit_ideal(&i));
        let j = local_ideal(&["x", "y"], &["x", "y"]);
        assert!(!is_unit_ideal(&j));
    }
}
