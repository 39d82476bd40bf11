use std::cmp::Ordering;

use super::monomial::Monomial;

/// Term orders on power products.
///
/// `GlobalDegRevLex` is the usual degree-reverse-lexicographic well-order.
/// `LocalAntiDegRevLex` ranks *lower* total degree as larger, so `1` is the
/// largest monomial; it is the order of the local ring at the origin.
/// `Block` compares a designated global block of variables first (degrevlex
/// on that block) and breaks ties with the local order on the remaining
/// variables; it is the elimination order used for saturation and
/// intersection with an auxiliary variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    GlobalDegRevLex,
    LocalAntiDegRevLex,
    Block { global_vars: Vec<usize> },
}

impl MonomialOrder {
    /// Elimination order for the single auxiliary variable `var`.
    pub fn eliminating(var: usize) -> Self {
        MonomialOrder::Block { global_vars: vec![var] }
    }

    /// `true` when degree-0 monomials can be leading (the ring is local).
    pub fn is_local(&self) -> bool {
        !matches!(self, MonomialOrder::GlobalDegRevLex)
    }

    pub fn global_block(&self) -> &[usize] {
        match self {
            MonomialOrder::Block { global_vars } => global_vars,
            _ => &[],
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GlobalDegRevLex => degrevlex_full(a, b),
            MonomialOrder::LocalAntiDegRevLex => antideg_full(a, b),
            MonomialOrder::Block { global_vars } => {
                let mut mask = vec![false; a.nvars()];
                for &v in global_vars {
                    mask[v] = true;
                }
                let da: u32 = global_vars.iter().map(|&v| a.exp(v)).sum();
                let db: u32 = global_vars.iter().map(|&v| b.exp(v)).sum();
                match da.cmp(&db).then_with(|| revlex_masked(a, b, &mask, true)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let la: u32 = (0..a.nvars()).filter(|&v| !mask[v]).map(|v| a.exp(v)).sum();
                let lb: u32 = (0..a.nvars()).filter(|&v| !mask[v]).map(|v| b.exp(v)).sum();
                lb.cmp(&la).then_with(|| revlex_masked(a, b, &mask, false))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn degrevlex_full(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| revlex_tiebreak(a, b))
}

fn antideg_full(a: &Monomial, b: &Monomial) -> Ordering {
    b.total_degree()
        .cmp(&a.total_degree())
        .then_with(|| revlex_tiebreak(a, b))
}

/// Reverse-lexicographic tie-break: the monomial with the *smaller* exponent
/// in the last differing variable is the larger one.
fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    for i in (0..a.nvars()).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn revlex_masked(a: &Monomial, b: &Monomial, mask: &[bool], in_block: bool) -> Ordering {
    for i in (0..a.nvars()).rev() {
        if mask[i] != in_block {
            continue;
        }
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
