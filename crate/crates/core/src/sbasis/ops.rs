//! Ideal-theoretic operations: sums, products, element quotients,
//! intersections and elimination of an auxiliary variable.
//!
//! Intersections follow the classical recipe `t*I + (1-t)*J` followed by
//! elimination of `t`, with `t` in a global block over the local ambient
//! variables. Element quotients divide the intersection with the principal
//! ideal by the element, using the tracked Mora division so the division is
//! exact in the local ring.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{MonomialOrder, Polynomial};

use super::mora::normal_form_tracked;
use super::{standard_basis, Ideal};

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.nvars(), b.nvars());
    let mut gens = a.gens().to_vec();
    gens.extend_from_slice(b.gens());
    Ideal::new(a.nvars(), a.order().clone(), gens)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.nvars(), b.nvars());
    let mut gens = Vec::with_capacity(a.gens().len() * b.gens().len());
    for f in a.gens() {
        for g in b.gens() {
            gens.push(f * g);
        }
    }
    Ideal::new(a.nvars(), a.order().clone(), gens)
}

/// `I ∩ J` via the auxiliary variable `t`: eliminate `t` from
/// `t*I + (1-t)*J` under the block order with `t` global.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.nvars(), b.nvars());
    let n = a.nvars();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(n, a.order().clone(), Vec::new());
    }
    let t = Polynomial::var(n + 1, n);
    let one = Polynomial::one(n + 1);
    let one_minus_t = &one - &t;
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in a.gens() {
        gens.push(&f.extended() * &t);
    }
    for g in b.gens() {
        gens.push(&g.extended() * &one_minus_t);
    }
    let extended = Ideal::new(n + 1, MonomialOrder::eliminating(n), gens);
    let eliminated = eliminate_inner(&extended, n);
    Ideal::new(
        n,
        a.order().clone(),
        eliminated.into_iter().map(|g| g.truncated()).collect(),
    )
}

/// Generators of `I` not involving `var`, from a standard basis in the
/// elimination order. The order of `ideal` must already put `var` in a
/// global block.
pub fn ideal_eliminate(ideal: &Ideal, var: usize) -> Result<Ideal> {
    if !ideal.order().global_block().contains(&var) {
        return Err(Error::NotEliminationOrder { var });
    }
    let kept = eliminate_inner(ideal, var);
    Ok(Ideal::new(ideal.nvars(), ideal.order().clone(), kept))
}

fn eliminate_inner(ideal: &Ideal, var: usize) -> Vec<Polynomial> {
    let sb = standard_basis(ideal);
    sb.gens()
        .iter()
        .filter(|g| !g.involves_var(var))
        .cloned()
        .collect()
}

/// `(I : h) = { p : p*h ∈ I }` in the local ring.
///
/// For a unit `h` the quotient is `I` itself; for the zero element it is the
/// unit ideal. Otherwise `(I : h) = (I ∩ (h)) / h`, with the division done
/// by tracked Mora reduction: each intersection generator `g` satisfies
/// `alpha*g = q*h` with `alpha` a local unit, and `q` generates the same
/// ideal as `g/h`.
pub fn ideal_quotient_by_element(ideal: &Ideal, h: &Polynomial) -> Result<Ideal> {
    assert_eq!(ideal.nvars(), h.nvars());
    let n = ideal.nvars();
    if h.is_zero() {
        return Ok(Ideal::unit(n).with_order(ideal.order().clone()));
    }
    if !h.constant_term().is_zero() {
        return Ok(ideal.clone());
    }
    let principal = Ideal::new(n, ideal.order().clone(), vec![h.clone()]);
    let meet = ideal_intersect(ideal, &principal);
    let order = ideal.order().clone();
    let mut gens = Vec::with_capacity(meet.gens().len());
    for g in meet.gens() {
        let (_, beta, r) = normal_form_tracked(g, h, &order);
        if !r.is_zero() {
            return Err(Error::Inconsistency {
                context: "ideal quotient".to_string(),
                detail: "intersection generator is not divisible by the element".to_string(),
            });
        }
        gens.push(-&beta);
    }
    Ok(Ideal::new(n, order, gens))
}

#[cfg(test)]
mod tests {
    use super::super::tests::{local_ideal, parse};
    use super::super::{ideal_eq, is_unit_ideal};
    use super::*;

    #[test]
    fn quotient_of_square_by_element() {
        let i = local_ideal(&["x^2"], &["x", "y"]);
        let q = ideal_quotient_by_element(&i, &parse("x", &["x", "y"])).unwrap();
        assert!(ideal_eq(&q, &local_ideal(&["x"], &["x", "y"])));
    }

    #[test]
    fn coordinate_axes_intersection() {
        let a = local_ideal(&["x"], &["x", "y"]);
        let b = local_ideal(&["y"], &["x", "y"]);
        let meet = ideal_intersect(&a, &b);
        assert!(ideal_eq(&meet, &local_ideal(&["x*y"], &["x", "y"])));
    }

    #[test]
    fn quotient_grows_to_full_saturation() {
        // (x^2, xy) : x = (x, y), then once more gives the unit ideal.
        let i = local_ideal(&["x^2", "x*y"], &["x", "y"]);
        let x = parse("x", &["x", "y"]);
        let q1 = ideal_quotient_by_element(&i, &x).unwrap();
        assert!(ideal_eq(&q1, &local_ideal(&["x", "y"], &["x", "y"])));
        let q2 = ideal_quotient_by_element(&q1, &x).unwrap();
        assert!(is_unit_ideal(&q2));
    }

    #[test]
    fn quotient_by_unit_is_identity() {
        let i = local_ideal(&["x^2"], &["x"]);
        let q = ideal_quotient_by_element(&i, &parse("1 - x", &["x"])).unwrap();
        assert!(ideal_eq(&q, &i));
    }

    #[test]
    fn elimination_requires_block_order() {
        let i = local_ideal(&["x*y"], &["x", "y"]);
        assert!(matches!(
            ideal_eliminate(&i, 1),
            Err(Error::NotEliminationOrder { var: 1 })
        ));
    }

    #[test]
    fn quotient_ideal_of_product_curve() {
        // (xy, z) : x = (y, z)
        let i = local_ideal(&["x*y", "z"], &["x", "y", "z"]);
        let q = ideal_quotient_by_element(&i, &parse("x", &["x", "y", "z"])).unwrap();
        assert!(ideal_eq(&q, &local_ideal(&["y", "z"], &["x", "y", "z"])));
    }
}
