//! Geometric constructions over the algebra kernel: Jacobian stacks and
//! their minor ideals, singular loci, relative polar ideals with saturation,
//! seeded generic linear forms, and exact hyperplane sections via unimodular
//! coordinate changes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::{coeff_int, Coeff, Polynomial};
use crate::sbasis::{
    ideal_quotient_by_element, ideal_sum, is_unit_ideal, leading_ideal_krull_dim, standard_basis,
    Ideal,
};

/// Iteration cap for the saturation fixpoint.
const SATURATION_CAP: usize = 50;

/// An analytic germ at the origin: ambient variable count, defining ideal
/// (empty for the smooth ambient space) and its declared dimension.
#[derive(Debug, Clone)]
pub struct GermVariety {
    nvars: usize,
    defining: Ideal,
    dim: usize,
}

impl GermVariety {
    /// The smooth germ of the full ambient space.
    pub fn ambient(nvars: usize) -> Self {
        GermVariety { nvars, defining: Ideal::zero(nvars), dim: nvars }
    }

    /// Build a germ and check that it passes through the origin and that the
    /// declared dimension matches the dimension of the leading ideal of a
    /// standard basis of the defining ideal.
    pub fn new(nvars: usize, gens: Vec<Polynomial>, dim: usize) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if !g.constant_term().is_zero() {
                return Err(Error::NotThroughOrigin { index: i });
            }
        }
        if dim > nvars {
            return Err(Error::DimensionMismatch { declared: dim, computed: nvars });
        }
        let defining = Ideal::local(nvars, gens);
        let computed = leading_ideal_krull_dim(&defining);
        if computed != dim {
            return Err(Error::DimensionMismatch { declared: dim, computed });
        }
        Ok(GermVariety { nvars, defining, dim })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn is_ambient(&self) -> bool {
        self.defining.is_zero_ideal()
    }

    /// The germ cut out by one more equation, with dimension dropped by one.
    pub fn slice_by(&self, g: &Polynomial) -> Result<GermVariety> {
        let mut gens = self.defining.gens().to_vec();
        gens.push(g.clone());
        if self.dim == 0 {
            return Err(Error::Precondition("cannot slice a zero-dimensional germ".into()));
        }
        GermVariety::new(self.nvars, gens, self.dim - 1)
    }
}

/// Seeded configuration for drawing and certifying generic linear data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericityConfig {
    pub seed: u64,
    pub coefficient_bound: u32,
    pub samples: u32,
}

impl Default for GenericityConfig {
    fn default() -> Self {
        GenericityConfig { seed: 0, coefficient_bound: 1000, samples: 3 }
    }
}

/// A nonzero linear form vanishing at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Coeff>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Precondition("linear form must be nonzero".into()));
        }
        Ok(LinearForm { coeffs })
    }

    /// Extract the form from a homogeneous linear polynomial.
    pub fn from_poly(p: &Polynomial) -> Result<Self> {
        let n = p.nvars();
        let mut coeffs = vec![Coeff::zero(); n];
        for (m, c) in p.terms() {
            if m.total_degree() != 1 {
                return Err(Error::Precondition(
                    "pinned form must be a homogeneous linear polynomial".into(),
                ));
            }
            let var = m.support().next().expect("degree-1 monomial has support");
            coeffs[var] = c.clone();
        }
        LinearForm::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn poly(&self) -> Polynomial {
        let n = self.coeffs.len();
        let mut p = Polynomial::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(crate::ring::Monomial::var(n, i), c.clone());
        }
        p
    }
}

/// Deterministic stream of generic linear forms. Distinct `stream` values
/// give independent draws for the same seed.
pub struct FormDrawer {
    rng: ChaCha8Rng,
    bound: u32,
}

impl FormDrawer {
    pub fn new(seed: u64, stream: u64, bound: u32) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        FormDrawer { rng, bound }
    }

    /// Draw a nonzero integer vector uniform in `[-bound, bound]^n`,
    /// rejecting the all-zero draw.
    pub fn draw(&mut self, nvars: usize) -> LinearForm {
        let b = self.bound as i64;
        loop {
            let coeffs: Vec<Coeff> = (0..nvars)
                .map(|_| coeff_int(self.rng.gen_range(-b..=b)))
                .collect();
            if coeffs.iter().any(|c| !c.is_zero()) {
                return LinearForm { coeffs };
            }
        }
    }
}

/// `count` reproducible generic linear forms, one independent stream per
/// sample index.
pub fn generic_linear(cfg: &GenericityConfig, nvars: usize, count: usize) -> Vec<LinearForm> {
    (0..count)
        .map(|i| FormDrawer::new(cfg.seed, i as u64, cfg.coefficient_bound).draw(nvars))
        .collect()
}

/// Stacked Jacobian matrix: rows are the gradients of the defining equations
/// of `x` followed by the gradients of `fns`; columns are the ambient
/// variables.
pub fn jacobian_stack(x: &GermVariety, fns: &[&Polynomial]) -> Vec<Vec<Polynomial>> {
    let n = x.nvars();
    let mut rows = Vec::with_capacity(x.defining().gens().len() + fns.len());
    for g in x.defining().gens() {
        rows.push((0..n).map(|i| g.partial_derivative(i)).collect());
    }
    for f in fns {
        assert_eq!(f.nvars(), n);
        rows.push((0..n).map(|i| f.partial_derivative(i)).collect());
    }
    rows
}

/// Ideal generated by all `k x k` minors of `matrix`. When `k` exceeds a
/// matrix dimension the rank condition is vacuous and the zero ideal is
/// returned; `k = 0` yields the unit ideal (empty determinant).
pub fn minors_ideal(matrix: &[Vec<Polynomial>], k: usize, nvars: usize) -> Ideal {
    if k == 0 {
        return Ideal::unit(nvars);
    }
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if k > rows || k > cols {
        return Ideal::zero(nvars);
    }
    let mut gens = Vec::new();
    for rsel in combinations(rows, k) {
        for csel in combinations(cols, k) {
            let d = det(matrix, &rsel, &csel);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::local(nvars, gens)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Laplace expansion along the first selected row.
fn det(matrix: &[Vec<Polynomial>], rsel: &[usize], csel: &[usize]) -> Polynomial {
    let nvars = matrix[rsel[0]][csel[0]].nvars();
    if rsel.len() == 1 {
        return matrix[rsel[0]][csel[0]].clone();
    }
    let mut acc = Polynomial::zero(nvars);
    let sub_rows = &rsel[1..];
    for (j, &c) in csel.iter().enumerate() {
        let entry = &matrix[rsel[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = csel
            .iter()
            .enumerate()
            .filter(|(jj, _)| *jj != j)
            .map(|(_, &cc)| cc)
            .collect();
        let minor = det(matrix, sub_rows, &sub_cols);
        let signed = if j % 2 == 0 { minor } else { -&minor };
        acc = &acc + &(entry * &signed);
    }
    acc
}

/// Ideal of the singular locus: the defining ideal plus the
/// `(N-d) x (N-d)` minors of its Jacobian. The smooth ambient space gets the
/// unit-ideal marker (empty singular locus); saturating by it is a no-op.
pub fn singular_locus_ideal(x: &GermVariety) -> Ideal {
    let n = x.nvars();
    if x.is_ambient() {
        return Ideal::unit(n);
    }
    let jac = jacobian_stack(x, &[]);
    let minors = minors_ideal(&jac, n - x.dim(), n);
    ideal_sum(x.defining(), &minors)
}

/// Saturation `(I : J^infinity)`: iterate the full ideal quotient
/// `I <- (I : J) = ∩_j (I : j)` until it stabilises. Removes the components
/// of the zero set of `I` that are contained in the zero set of `J`.
///
/// Two dimension shortcuts settle the common cases without quotient rounds:
/// a zero-dimensional ideal saturates to the unit ideal against any proper
/// `J` (the germ's only component is the origin), and a complete
/// intersection is unmixed, so nothing is removed when the locus of `J` has
/// strictly smaller dimension.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if by.is_zero_ideal() {
        // every component lies in the whole space, nothing survives
        return Ok(Ideal::unit(ideal.nvars()).with_order(ideal.order().clone()));
    }
    if is_unit_ideal(by) {
        // saturating by the empty locus changes nothing
        return Ok(ideal.clone());
    }
    let sb = standard_basis(ideal);
    if is_unit_ideal(&sb) {
        return Ok(ideal.clone());
    }
    let dim = leading_ideal_krull_dim(&sb);
    if dim == 0 {
        // a proper J contains the origin, so the whole component goes
        return Ok(Ideal::unit(ideal.nvars()).with_order(ideal.order().clone()));
    }
    if ideal.gens().len() == ideal.nvars() - dim {
        // complete intersection, hence Cohen-Macaulay and unmixed: every
        // component has dimension `dim`
        let dim_by = leading_ideal_krull_dim(&standard_basis(by));
        if dim_by < dim {
            return Ok(ideal.clone());
        }
    }
    let divisors: Vec<&Polynomial> = by.gens().iter().collect();
    let mut cur = ideal.clone();
    let mut cur_lms = crate::sbasis::leading_monomials(&cur);
    for _ in 0..SATURATION_CAP {
        let mut next: Option<Ideal> = None;
        for j in &divisors {
            let q = ideal_quotient_by_element(&cur, j)?;
            next = Some(match next {
                None => q,
                Some(acc) => crate::sbasis::ideal_intersect(&acc, &q),
            });
        }
        let next = next.expect("at least one divisor");
        // the quotient chain is increasing, so leading-ideal stability is
        // ideal equality
        let next_lms = crate::sbasis::leading_monomials(&next);
        if next_lms == cur_lms {
            return Ok(cur);
        }
        cur = next;
        cur_lms = next_lms;
    }
    Err(Error::SaturationCap { cap: SATURATION_CAP })
}

/// Closure of the relative polar set of the pair `(f, g)` on the smooth part
/// of `x`: the locus where `df` and `dg` are linearly dependent modulo the
/// conormal of `x`, encoded as the `(N-d+2)`-minors of the stacked Jacobian,
/// with components inside the singular locus removed by saturation.
///
/// When the rank condition is vacuous (curves) the polar set is all of `x`.
pub fn polar_ideal(x: &GermVariety, f: &Polynomial, g: &Polynomial) -> Result<Ideal> {
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Err(Error::Precondition("polar pair must vanish at the origin".into()));
    }
    let n = x.nvars();
    let k = n - x.dim() + 2;
    let stack = jacobian_stack(x, &[f, g]);
    let minors = minors_ideal(&stack, k, n);
    let raw = ideal_sum(x.defining(), &minors);
    saturate(&raw, &singular_locus_ideal(x))
}

/// Critical ideal of `f` on the smooth part of `x`: defining ideal plus the
/// `(N-d+1)`-minors of `[Jac(I_X); df]`, saturated by the singular locus.
/// `f` has an isolated singularity on `x` iff this is zero-dimensional or
/// the unit ideal.
pub fn critical_ideal(x: &GermVariety, f: &Polynomial) -> Result<Ideal> {
    let n = x.nvars();
    let k = n - x.dim() + 1;
    let stack = jacobian_stack(x, &[f]);
    let minors = minors_ideal(&stack, k, n);
    let raw = ideal_sum(x.defining(), &minors);
    saturate(&raw, &singular_locus_ideal(x))
}

/// `true` when the ideal cuts out at most the origin.
pub fn is_at_most_origin(ideal: &Ideal) -> bool {
    if is_unit_ideal(ideal) {
        return true;
    }
    leading_ideal_krull_dim(&standard_basis(ideal)) == 0
}

/// Substitution matrix (`N x (N-1)`, integer entries) realising the section
/// by the hyperplane `h = 0`: an invertible change of coordinates moves `h`
/// to the last variable, which is then set to zero.
pub fn section_matrix(h: &LinearForm) -> Vec<Vec<Coeff>> {
    let full = unimodular_completion(&primitive_int_coeffs(h));
    let n = full.len();
    full.iter()
        .map(|row| row[..n - 1].iter().map(|z| BigRational::from_integer(z.clone())).collect())
        .collect()
}

fn primitive_int_coeffs(h: &LinearForm) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut den_lcm = BigInt::one();
    for c in h.coeffs() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = h
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for z in &ints {
        g = g.gcd(z);
    }
    ints.into_iter().map(|z| z / &g).collect()
}

/// Complete the primitive integer row `c` to a unimodular matrix `V` with
/// `c * V = e_N`, by accumulating the elementary column operations of a
/// Euclidean reduction of `c`.
fn unimodular_completion(c: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = c.len();
    let mut r = c.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    // column op: col_a += q * col_b  (applied to r and to every row of v)
    let col_addmul = |r: &mut Vec<BigInt>, v: &mut Vec<Vec<BigInt>>, a: usize, b: usize, q: &BigInt| {
        let delta = &r[b] * q;
        r[a] += delta;
        for row in v.iter_mut() {
            let delta = &row[b] * q;
            row[a] += delta;
        }
    };
    loop {
        // pick the nonzero entry of smallest absolute value as the pivot
        let pivot = (0..n)
            .filter(|&i| !r[i].is_zero())
            .min_by_key(|&i| r[i].abs())
            .expect("nonzero vector");
        let mut done = true;
        for i in 0..n {
            if i == pivot || r[i].is_zero() {
                continue;
            }
            let q = -(&r[i] / &r[pivot]);
            if !q.is_zero() {
                col_addmul(&mut r, &mut v, i, pivot, &q);
            }
            if !r[i].is_zero() {
                done = false;
            }
        }
        if done {
            // only the pivot is nonzero; gcd of a primitive vector is 1
            debug_assert_eq!(r[pivot].abs(), BigInt::one());
            if r[pivot].is_negative() {
                for row in v.iter_mut() {
                    row[pivot] = -row[pivot].clone();
                }
                r[pivot] = -r[pivot].clone();
            }
            if pivot != n - 1 {
                for row in v.iter_mut() {
                    row.swap(pivot, n - 1);
                }
                r.swap(pivot, n - 1);
            }
            return v;
        }
    }
}

/// Intersect the germ with the hyperplane `h = 0`: an exact unimodular
/// coordinate change sends `h` to the last variable, the defining equations
/// are rewritten and the last variable set to zero. The result lives in
/// `N-1` variables with declared dimension `d-1`; a failed dimension check
/// is the genericity-failure signal.
pub fn hyperplane_section(x: &GermVariety, h: &LinearForm) -> Result<GermVariety> {
    assert_eq!(h.nvars(), x.nvars());
    if x.dim() == 0 {
        return Err(Error::Precondition("cannot section a zero-dimensional germ".into()));
    }
    let w = section_matrix(h);
    let gens: Vec<Polynomial> = x
        .defining()
        .gens()
        .iter()
        .map(|g| g.substitute_linear(&w))
        .collect();
    GermVariety::new(x.nvars() - 1, gens, x.dim() - 1)
}
