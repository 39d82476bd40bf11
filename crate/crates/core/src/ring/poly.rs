use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;

pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by the canonical monomial order, so two
/// polynomials are equal iff their term maps are equal; no coefficient is
/// ever zero. Term orders are supplied per operation where they matter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_term(Monomial::var(nvars, i), Coeff::one())
    }

    pub fn from_term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Maximum total degree over all terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Largest monomial under `order`, with its coefficient.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self * c * m` in one pass.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            out.add_term(Monomial::new(exps), c * coeff_int(e as i64));
        }
        out
    }

    /// Substitute `x_i := sum_j M[i][j] * y_j`; `M` is `nvars x new_nvars`.
    pub fn substitute_linear(&self, matrix: &[Vec<Coeff>]) -> Polynomial {
        assert_eq!(matrix.len(), self.nvars);
        let new_nvars = if matrix.is_empty() { 0 } else { matrix[0].len() };
        let images: Vec<Polynomial> = matrix
            .iter()
            .map(|row| {
                assert_eq!(row.len(), new_nvars);
                let mut p = Polynomial::zero(new_nvars);
                for (j, c) in row.iter().enumerate() {
                    p.add_term(Monomial::var(new_nvars, j), c.clone());
                }
                p
            })
            .collect();
        // Cache powers of each image up to the exponent actually used.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(new_nvars), p.clone()]).collect();
        let mut out = Polynomial::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(new_nvars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Set the last variable to zero and drop it from the ring.
    pub fn set_last_var_zero(&self) -> Polynomial {
        assert!(self.nvars > 0);
        let last = self.nvars - 1;
        let mut out = Polynomial::zero(last);
        for (m, c) in &self.terms {
            if m.exp(last) == 0 {
                out.add_term(m.truncated(), c.clone());
            }
        }
        out
    }

    /// Append a fresh last variable with exponent zero everywhere.
    pub fn extended(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars + 1,
            terms: self.terms.iter().map(|(m, c)| (m.extended(), c.clone())).collect(),
        }
    }

    /// Drop the last variable; panics if it occurs in any term.
    pub fn truncated(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars - 1,
            terms: self.terms.iter().map(|(m, c)| (m.truncated(), c.clone())).collect(),
        }
    }

    pub fn involves_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Divide by the gcd of the coefficients' numerators times the lcm of the
    /// denominators, normalising the sign of the leading rational so that the
    /// result is a primitive integer polynomial. A no-op on zero.
    pub fn primitive_part(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        let lead = &self.terms[self.leading_monomial(order).unwrap()];
        if (lead * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn terms_sorted_desc(&self, order: &MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut v: Vec<(Monomial, Coeff)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.compare(b, a));
        v
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize) -> Polynomial {
        Polynomial::var(n, 0)
    }
    fn y(n: usize) -> Polynomial {
        Polynomial::var(n, 1)
    }

    #[test]
    fn power_rule() {
        // d/dx (x^3 + y^2) = 3x^2
        let p = &x(2).pow(3) + &y(2).pow(2);
        assert_eq!(p.partial_derivative(0), x(2).pow(2).scale(&coeff_int(3)));
        // d/dz (xy - z^2) = -2z
        let z = Polynomial::var(3, 2);
        let q = &(&Polynomial::var(3, 0) * &Polynomial::var(3, 1)) - &z.pow(2);
        assert_eq!(q.partial_derivative(2), z.scale(&coeff_int(-2)));
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(2) + &y(2)) * &(&x(2) - &y(2));
        assert_eq!(p, &x(2).pow(2) - &y(2).pow(2));
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = &x(2) - &x(2);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn linear_substitution() {
        // x := x + y, y := y  applied to x^2 gives x^2 + 2xy + y^2
        let m = vec![
            vec![coeff_int(1), coeff_int(1)],
            vec![coeff_int(0), coeff_int(1)],
        ];
        let p = x(2).pow(2).substitute_linear(&m);
        let expect = &(&x(2).pow(2) + &(&x(2) * &y(2)).scale(&coeff_int(2))) + &y(2).pow(2);
        assert_eq!(p, expect);
    }

    #[test]
    fn primitive_part_clears_denominators() {
        let p = &x(1).scale(&coeff_ratio(2, 3)) + &Polynomial::constant(1, coeff_ratio(-4, 9));
        let prim = p.primitive_part(&MonomialOrder::GlobalDegRevLex);
        // (2/3)x - 4/9 -> 3x - 2  up to sign of the leading coefficient
        let expect = &x(1).scale(&coeff_int(3)) + &Polynomial::constant(1, coeff_int(-2));
        assert_eq!(prim, expect);
    }
}
