use std::fmt;

/// Exponent vector of a power product, one entry per ambient variable.
///
/// The canonical `Ord` on monomials is plain lexicographic comparison of the
/// exponent vectors. It is *not* a term order; it only gives term maps a
/// stable storage order. Term orders live in [`crate::ring::MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The monomial `x_i` in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `true` when the monomial is a positive power of the single variable `i`.
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.exps[i] > 0 && self.exps.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined only when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Append a fresh variable with exponent zero (used for auxiliary
    /// elimination variables).
    pub fn extended(&self) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(0);
        Monomial { exps }
    }

    /// Drop the last variable; the caller guarantees its exponent is zero.
    pub fn truncated(&self) -> Monomial {
        debug_assert_eq!(*self.exps.last().unwrap(), 0);
        Monomial {
            exps: self.exps[..self.exps.len() - 1].to_vec(),
        }
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
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let m = Monomial::new(vec![2, 1]);
        let n = Monomial::new(vec![3, 1]);
        assert!(m.divides(&n));
        assert!(!n.divides(&m));
        assert_eq!(m.div_into(&n), Monomial::new(vec![1, 0]));
    }

    #[test]
    fn lcm_and_coprime() {
        let m = Monomial::new(vec![2, 0, 1]);
        let n = Monomial::new(vec![0, 3, 1]);
        assert_eq!(m.lcm(&n), Monomial::new(vec![2, 3, 1]));
        assert!(!m.coprime(&n));
        assert!(Monomial::new(vec![1, 0]).coprime(&Monomial::new(vec![0, 2])));
    }
}
