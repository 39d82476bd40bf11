//! Standard-basis completion by homogenisation.
//!
//! The generators are homogenised with a fresh variable and a Gröbner basis
//! is computed under the degree-first well-order whose tie-break is the
//! target order on the original variables. Everything stays homogeneous, so
//! Buchberger's loop terminates degree by degree with no ecart bookkeeping;
//! setting the homogenisation variable back to 1 yields a standard basis
//! for the target order. The leading-term correspondence holds because a
//! unit of the (possibly mixed) localisation homogenises with leading part
//! `c * t^k`.
//!
//! Coefficient arithmetic is fraction-free: basis elements are primitive
//! integer polynomials and every reduction step is a cross-multiplication
//! followed by a content strip.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Monomial, MonomialOrder, Polynomial};

/// Compare homogenised monomials (the homogenisation variable is the last
/// coordinate): total degree first, then the base order on the original
/// variables. A well-order for any base order.
fn cmp_homog(base: &MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| base.compare(&a.truncated_view(), &b.truncated_view()))
}

impl Monomial {
    /// The monomial with the last coordinate dropped (used only by the
    /// homogenised comparator).
    fn truncated_view(&self) -> Monomial {
        Monomial::new(self.exps()[..self.nvars() - 1].to_vec())
    }
}

fn homogenize(p: &Polynomial) -> Vec<(Monomial, BigRational)> {
    let deg = p.total_degree();
    p.terms()
        .map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            exps.push(deg - m.total_degree());
            (Monomial::new(exps), c.clone())
        })
        .collect()
}

/// Homogeneous polynomial with primitive integer coefficients, terms sorted
/// strictly descending under the homogenised order.
#[derive(Clone)]
struct HPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl HPoly {
    fn from_rational_terms(raw: Vec<(Monomial, BigRational)>, base: &MonomialOrder) -> Self {
        let mut den_lcm = BigInt::one();
        for (_, c) in &raw {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = raw
            .into_iter()
            .map(|(m, c)| {
                let scale = &den_lcm / c.denom();
                (m, c.numer() * scale)
            })
            .collect();
        terms.sort_by(|(a, _), (b, _)| cmp_homog(base, b, a));
        let mut h = HPoly { terms };
        h.strip_content();
        h
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, BigInt) {
        &self.terms[0]
    }

    /// Divide by the coefficient gcd and normalise the lead sign.
    fn strip_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a * self - b * m * other`, merging the sorted term lists.
    fn cross(
        &self,
        a: &BigInt,
        other: &HPoly,
        m: &Monomial,
        b: &BigInt,
        base: &MonomialOrder,
    ) -> HPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let bm = other.terms[j].0.mul(m);
            match cmp_homog(base, &self.terms[i].0, &bm) {
                Ordering::Greater => {
                    out.push((self.terms[i].0.clone(), &self.terms[i].1 * a));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, -(&other.terms[j].1 * b)));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &self.terms[i].1 * a - &other.terms[j].1 * b;
                    if !coeff.is_zero() {
                        out.push((self.terms[i].0.clone(), coeff));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (mm, c) in &self.terms[i..] {
            out.push((mm.clone(), c * a));
        }
        for (bm, bc) in &other.terms[j..] {
            out.push((bm.mul(m), -(bc * b)));
        }
        HPoly { terms: out }
    }
}

/// Fraction-free division normal form under the homogenised well-order;
/// cancels the lead as long as possible.
fn reduce_lead(mut h: HPoly, basis: &[HPoly], base: &MonomialOrder) -> HPoly {
    'outer: while !h.is_zero() {
        let lm = h.lead().0.clone();
        for g in basis {
            if g.lead().0.divides(&lm) {
                let m = g.lead().0.div_into(&lm);
                let a = g.lead().1.clone();
                let b = h.lead().1.clone();
                h = h.cross(&a, g, &m, &b, base);
                h.strip_content();
                continue 'outer;
            }
        }
        break;
    }
    h
}

/// Reduce every tail term of `h` modulo the other basis leads (terminates:
/// well-order, fixed degree).
fn reduce_tail(mut h: HPoly, basis: &[HPoly], skip: usize, base: &MonomialOrder) -> HPoly {
    'outer: loop {
        for k in 1..h.terms.len() {
            let (tm, tc) = &h.terms[k];
            for (gi, g) in basis.iter().enumerate() {
                if gi != skip && g.lead().0.divides(tm) {
                    let m = g.lead().0.div_into(tm);
                    let a = g.lead().1.clone();
                    let b = tc.clone();
                    h = h.cross(&a, g, &m, &b, base);
                    h.strip_content();
                    continue 'outer;
                }
            }
        }
        return h;
    }
}

fn spoly(f: &HPoly, g: &HPoly, base: &MonomialOrder) -> HPoly {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let lcm = fm.lcm(gm);
    let mf = fm.div_into(&lcm);
    let mg = gm.div_into(&lcm);
    let shifted = HPoly {
        terms: f.terms.iter().map(|(n, a)| (n.mul(&mf), a.clone())).collect(),
    };
    let mut s = shifted.cross(gc, g, &mg, fc, base);
    s.strip_content();
    s
}

/// Standard basis of the ideal generated by `gens` for `order`, through the
/// homogenised Gröbner basis. The result is dehomogenised but neither
/// minimalised nor normalised; the caller owns canonicalisation.
pub(crate) fn standard_basis_gens(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    let mut basis: Vec<HPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| HPoly::from_rational_terms(homogenize(g), order))
        .collect();
    if basis.is_empty() {
        return Vec::new();
    }

    // Pair queue with the coprimality and chain criteria; pairs are
    // processed by ascending lcm degree (normal selection).
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let mut dropped: Vec<(usize, usize)> = Vec::new();
    let enqueue = |pairs: &mut Vec<(u32, usize, usize)>,
                   dropped: &mut Vec<(usize, usize)>,
                   basis: &[HPoly],
                   j: usize| {
        for i in 0..j {
            let lma = &basis[i].lead().0;
            let lmb = &basis[j].lead().0;
            if lma.coprime(lmb) {
                dropped.push((i, j));
                continue;
            }
            pairs.push((lma.lcm(lmb).total_degree(), i, j));
        }
    };
    for j in 0..basis.len() {
        enqueue(&mut pairs, &mut dropped, &basis, j);
    }

    let mut done: Vec<(usize, usize)> = Vec::new();
    while !pairs.is_empty() {
        let k = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (d, i, j))| (*d, *i, *j))
            .map(|(k, _)| k)
            .unwrap();
        let (_, i, j) = pairs.swap_remove(k);
        // chain criterion: if some k has its lead dividing lcm(i, j) and both
        // (i, k) and (j, k) are already settled, the pair is redundant
        let lcm_ij = basis[i].lead().0.lcm(&basis[j].lead().0);
        let settled = |a: usize, b: usize, done: &Vec<(usize, usize)>, dropped: &Vec<(usize, usize)>| {
            let key = (a.min(b), a.max(b));
            done.contains(&key) || dropped.contains(&key)
        };
        let redundant = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().0.divides(&lcm_ij)
                && settled(i, k, &done, &dropped)
                && settled(j, k, &done, &dropped)
        });
        done.push((i.min(j), i.max(j)));
        if redundant {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        let mut r = reduce_lead(s, &basis, order);
        if !r.is_zero() {
            r.strip_content();
            let j_new = basis.len();
            basis.push(r);
            enqueue(&mut pairs, &mut dropped, &basis, j_new);
        }
    }

    // prune leads divisible by other leads, then inter-reduce the tails for
    // a canonical-ish basis
    let mut keep: Vec<HPoly> = Vec::new();
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by_key(|&i| basis[i].lead().0.total_degree());
    for &i in &idx {
        let lm = &basis[i].lead().0;
        if keep.iter().any(|k| k.lead().0.divides(lm)) {
            continue;
        }
        keep.push(basis[i].clone());
    }
    let reduced: Vec<HPoly> = (0..keep.len())
        .map(|i| reduce_tail(keep[i].clone(), &keep, i, order))
        .collect();

    reduced.iter().map(|h| dehomogenize(h, nvars)).collect()
}

fn dehomogenize(h: &HPoly, nvars: usize) -> Polynomial {
    // distinct original monomials stay distinct, no cancellation
    Polynomial::from_terms(
        nvars,
        h.terms.iter().map(|(m, c)| {
            let exps = m.exps()[..nvars].to_vec();
            (Monomial::new(exps), BigRational::from_integer(c.clone()))
        }),
    )
}
