//! Dimension counts on the leading ideal of a standard basis.

use crate::ring::{Monomial, MonomialOrder};

use super::{minimal_leading_monomials, standard_basis, Ideal, InvariantValue};

/// Vector-space dimension of the local quotient algebra, i.e. the number of
/// standard monomials (monomials outside the leading-term ideal).
///
/// `Infinite` is returned exactly when some variable has no pure power among
/// the leading monomials, which for a monomial ideal is the finiteness
/// criterion.
pub fn local_quotient_dim(ideal: &Ideal) -> InvariantValue {
    let local = if ideal.order() == &MonomialOrder::LocalAntiDegRevLex {
        ideal.clone()
    } else {
        ideal.with_order(MonomialOrder::LocalAntiDegRevLex)
    };
    let sb = standard_basis(&local);
    let n = sb.nvars();
    if sb.is_zero_ideal() {
        return if n == 0 { InvariantValue::Finite(1) } else { InvariantValue::Infinite };
    }
    let lms = minimal_leading_monomials(&sb);
    if lms.iter().any(Monomial::is_one) {
        return InvariantValue::Finite(0);
    }
    // Bounding box: the minimal pure power of each variable.
    let mut bounds = vec![0u32; n];
    for i in 0..n {
        let Some(e) = lms
            .iter()
            .filter(|m| m.is_pure_power_of(i))
            .map(|m| m.exp(i))
            .min()
        else {
            return InvariantValue::Infinite;
        };
        bounds[i] = e;
    }
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|lm| lm.divides(&m)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return InvariantValue::Finite(count);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Combinatorial Krull dimension of the monomial leading ideal of a standard
/// basis: the largest number of variables spanning a coordinate subspace not
/// contained in the zero set complement, i.e. the largest subset `S` such
/// that no leading monomial has support inside `S`.
///
/// The zero ideal gives the ambient dimension; the unit ideal gives 0.
pub fn leading_ideal_krull_dim(ideal: &Ideal) -> usize {
    let sb = standard_basis(ideal);
    let n = sb.nvars();
    if sb.is_zero_ideal() {
        return n;
    }
    let lms = minimal_leading_monomials(&sb);
    if lms.iter().any(Monomial::is_one) {
        return 0;
    }
    let supports: Vec<Vec<usize>> = lms.iter().map(|m| m.support().collect()).collect();
    assert!(n <= 24, "combinatorial Krull dimension limited to 24 variables");
    let mut best = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = supports
            .iter()
            .all(|supp| supp.iter().any(|&v| mask & (1 << v) == 0));
        if independent {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::super::tests::local_ideal;
    use super::*;

    #[test]
    fn maximal_ideal_has_dimension_one() {
        let i = local_ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(local_quotient_dim(&i), InvariantValue::Finite(1));
    }

    #[test]
    fn scaled_monomials() {
        // (3x^2, 2y): standard monomials 1, x
        let i = local_ideal(&["3*x^2", "2*y"], &["x", "y"]);
        assert_eq!(local_quotient_dim(&i), InvariantValue::Finite(2));
    }

    #[test]
    fn local_dimension_sees_only_the_origin() {
        // (x - x^2) vanishes at 0 and 1, but the germ at 0 has length 1.
        let i = local_ideal(&["x - x^2"], &["x"]);
        assert_eq!(local_quotient_dim(&i), InvariantValue::Finite(1));
    }

    #[test]
    fn positive_dimension_is_infinite() {
        let i = local_ideal(&["x"], &["x", "y"]);
        assert_eq!(local_quotient_dim(&i), InvariantValue::Infinite);
    }

    #[test]
    fn mixed_generators_quotient_dim() {
        let i = local_ideal(&["x*y - z^2", "x + y", "z"], &["x", "y", "z"]);
        assert_eq!(local_quotient_dim(&i), InvariantValue::Finite(2));
    }

    #[test]
    fn krull_dimension_examples() {
        let cone = local_ideal(&["x*y - z^2"], &["x", "y", "z"]);
        assert_eq!(leading_ideal_krull_dim(&cone), 2);
        let zero = Ideal::zero(4);
        assert_eq!(leading_ideal_krull_dim(&zero), 4);
        let point = local_ideal(&["x", "y"], &["x", "y"]);
        assert_eq!(leading_ideal_krull_dim(&point), 0);
    }
}
