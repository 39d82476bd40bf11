//! The invariants and the identity verifiers.
//!
//! Milnor numbers of hypersurface germs and isolated complete intersections,
//! intersection multiplicities of curves against hypersurfaces, Brasselet
//! numbers and local Euler obstructions through generic hyperplane flags,
//! Euler obstructions of functions, Milnor-fibre Euler characteristics, and
//! mechanical verification of the identities tying them together.
//!
//! Every quantity that depends on a generic choice is computed for several
//! independently seeded draws and accepted only when all draws agree and all
//! intermediate dimension and finiteness checks pass; disagreement forces a
//! redraw of the whole round, and persistent failure is reported as a
//! certification error rather than a number.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{
    critical_ideal, hyperplane_section, is_at_most_origin, jacobian_stack, minors_ideal,
    polar_ideal, section_matrix, singular_locus_ideal, FormDrawer, GenericityConfig, GermVariety,
    LinearForm,
};
use crate::ring::Polynomial;
use crate::sbasis::{
    ideal_sum, is_unit_ideal, leading_ideal_krull_dim, local_quotient_dim, standard_basis, Ideal,
    InvariantValue,
};

/// Redraw cap for genericity certification.
const REDRAW_ROUNDS: u32 = 10;

/// One certified sample value, part of the genericity evidence of a result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub label: String,
    pub sample: u32,
    pub value: i64,
}

/// An integer invariant together with its genericity evidence.
#[derive(Debug, Clone)]
pub struct CertifiedValue {
    pub value: i64,
    pub certificates: Vec<Certificate>,
    pub rounds: u32,
    pub terms: Vec<(String, i64)>,
}

/// Both sides of an identity with the per-term breakdown and the genericity
/// evidence; `pass` holds exactly when the two sides agree.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: String,
    pub lhs: i64,
    pub rhs: i64,
    pub terms: Vec<(String, i64)>,
    pub certificates: Vec<Certificate>,
    pub rounds: u32,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(identity: &str, lhs: i64, rhs: i64) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            lhs,
            rhs,
            terms: Vec::new(),
            certificates: Vec::new(),
            rounds: 0,
            pass: lhs == rhs,
            notes: Vec::new(),
        }
    }
}

/// Outcome of the Euler obstruction of a function, with the Morse-point
/// count it encodes.
#[derive(Debug, Clone)]
pub struct FunctionObstruction {
    pub eu_f: i64,
    pub n_reg: i64,
    pub eu_x: i64,
    pub brasselet: i64,
    pub certificates: Vec<Certificate>,
    pub rounds: u32,
}

// ---------------------------------------------------------------------------
// certification machinery

/// Per-sample failure: `Retry` marks a bad draw (redraw the round), `Fatal`
/// aborts certification with a hard error.
enum SampleFail {
    Retry(String),
    Fatal(Error),
}

#[derive(Clone, PartialEq, Eq)]
struct SampleOutcome {
    headline: i64,
    /// entries recorded as per-sample certificates
    certs: Vec<(String, i64)>,
    /// entries recorded once as the term breakdown
    parts: Vec<(String, i64)>,
}

type SampleResult = std::result::Result<SampleOutcome, SampleFail>;

fn certify(
    cfg: &GenericityConfig,
    mut sample_fn: impl FnMut(&mut FormDrawer) -> SampleResult,
) -> Result<(SampleOutcome, Vec<Certificate>, u32)> {
    if cfg.samples < 2 {
        return Err(Error::Precondition(
            "genericity certification needs at least 2 samples".into(),
        ));
    }
    let mut last_detail = String::new();
    for round in 0..REDRAW_ROUNDS {
        let mut outcomes: Vec<SampleOutcome> = Vec::with_capacity(cfg.samples as usize);
        let mut failed = false;
        for sample in 0..cfg.samples {
            let stream = ((round as u64) << 32) | sample as u64;
            let mut drawer = FormDrawer::new(cfg.seed, stream, cfg.coefficient_bound);
            match sample_fn(&mut drawer) {
                Ok(outcome) => outcomes.push(outcome),
                Err(SampleFail::Retry(detail)) => {
                    last_detail = format!("round {round} sample {sample}: {detail}");
                    failed = true;
                    break;
                }
                Err(SampleFail::Fatal(e)) => return Err(e),
            }
        }
        if failed {
            continue;
        }
        if outcomes.windows(2).all(|w| w[0] == w[1]) {
            let certificates = outcomes
                .iter()
                .enumerate()
                .flat_map(|(s, o)| {
                    o.certs.iter().map(move |(label, value)| Certificate {
                        label: label.clone(),
                        sample: s as u32,
                        value: *value,
                    })
                })
                .collect();
            let chosen = outcomes.into_iter().next().expect("samples >= 2");
            return Ok((chosen, certificates, round + 1));
        }
        last_detail = format!("round {round}: samples disagree");
    }
    Err(Error::GenericityFailure { rounds: REDRAW_ROUNDS, detail: last_detail })
}

fn retry_on_degenerate(e: Error) -> SampleFail {
    match e {
        Error::SaturationCap { .. } | Error::DimensionMismatch { .. } => {
            SampleFail::Retry(e.to_string())
        }
        other => SampleFail::Fatal(other),
    }
}

fn sign_pow(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn to_i64(n: u64, what: &str) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Precondition(format!("{what} overflows i64")))
}

// ---------------------------------------------------------------------------
// Milnor numbers and intersection multiplicities

fn check_germ_function(f: &Polynomial, nvars: usize, what: &str) -> Result<()> {
    if f.nvars() != nvars {
        return Err(Error::VarCountMismatch { left: f.nvars(), right: nvars });
    }
    if f.is_zero() {
        return Err(Error::Precondition(format!("{what} must be nonzero")));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::Precondition(format!("{what} must vanish at the origin")));
    }
    Ok(())
}

/// Milnor number of a hypersurface germ: the local dimension of the Jacobian
/// quotient algebra. `Infinite` signals a non-isolated critical point.
pub fn milnor_hypersurface(f: &Polynomial, nvars: usize) -> Result<InvariantValue> {
    check_germ_function(f, nvars, "f")?;
    let jac = Ideal::local(nvars, (0..nvars).map(|i| f.partial_derivative(i)).collect());
    Ok(local_quotient_dim(&jac))
}

/// Milnor number of an isolated complete intersection singularity, by the
/// Lê-Greuel recursion: for every prefix `(f_1..f_m)` the quotient by
/// `(f_1..f_{m-1})` plus the maximal minors of the Jacobian of the prefix
/// must be finite, and consecutive quotient dimensions telescope to the
/// Milnor number of the full tuple.
pub fn milnor_icis(tuple: &[Polynomial], nvars: usize) -> Result<u64> {
    if tuple.is_empty() || tuple.len() > nvars {
        return Err(Error::Precondition(format!(
            "an ICIS tuple in {nvars} variables needs between 1 and {nvars} components"
        )));
    }
    for (i, f) in tuple.iter().enumerate() {
        check_germ_function(f, nvars, &format!("tuple component {}", i + 1))?;
    }
    let mut mu_prev: u64 = 0;
    for m in 1..=tuple.len() {
        let prefix = &tuple[..m];
        let refs: Vec<&Polynomial> = prefix.iter().collect();
        let jac = jacobian_stack(&GermVariety::ambient(nvars), &refs);
        let minors = minors_ideal(&jac, m, nvars);
        let lower = Ideal::local(nvars, prefix[..m - 1].to_vec());
        let quotient = ideal_sum(&lower, &minors);
        let dim = match local_quotient_dim(&quotient) {
            InvariantValue::Finite(d) => d,
            InvariantValue::Infinite => {
                return Err(Error::NotIcis { prefix: format!("components 1..={m}") });
            }
        };
        if dim < mu_prev {
            return Err(Error::Inconsistency {
                context: "Lê-Greuel recursion".into(),
                detail: format!(
                    "quotient dimension {dim} at level {m} is smaller than the previous Milnor number {mu_prev}"
                ),
            });
        }
        mu_prev = dim - mu_prev;
    }
    Ok(mu_prev)
}

/// Intersection multiplicity at the origin of a curve with the hypersurface
/// `f = 0`: the local dimension of the quotient by the curve ideal plus `f`.
/// The unit ideal (empty curve) meets everything with multiplicity 0;
/// `Infinite` signals that `f` vanishes on a curve component.
pub fn intersection_multiplicity(curve: &Ideal, f: &Polynomial) -> Result<InvariantValue> {
    check_germ_function(f, curve.nvars(), "f")?;
    if is_unit_ideal(curve) {
        return Ok(InvariantValue::Finite(0));
    }
    let dim = leading_ideal_krull_dim(&standard_basis(curve));
    if dim != 1 {
        return Err(Error::NotACurve { found: dim });
    }
    let meet = ideal_sum(curve, &Ideal::local(curve.nvars(), vec![f.clone()]));
    Ok(local_quotient_dim(&meet))
}

// ---------------------------------------------------------------------------
// Brasselet number via the generic flag

/// One flag descent: at each level take the relative polar curve of `f`
/// against a fresh generic form, intersect it with `f = 0`, and cut by a
/// generic hyperplane before descending. Any dimension slip or infinite
/// intersection marks the draw as degenerate.
fn brasselet_sample(
    x: &GermVariety,
    f: &Polynomial,
    drawer: &mut FormDrawer,
) -> SampleResult {
    let d = x.dim();
    let mut cur_x = x.clone();
    let mut cur_f = f.clone();
    let mut total: i64 = 0;
    let mut parts: Vec<(String, i64)> = Vec::new();
    for level in 0..d {
        let cur_dim = d - level;
        let aux = drawer.draw(cur_x.nvars());
        let gamma = polar_ideal(&cur_x, &cur_f, &aux.poly()).map_err(retry_on_degenerate)?;
        let term: i64 = if is_unit_ideal(&gamma) {
            0
        } else {
            match leading_ideal_krull_dim(&standard_basis(&gamma)) {
                1 => match local_quotient_dim(&ideal_sum(
                    &gamma,
                    &Ideal::local(cur_x.nvars(), vec![cur_f.clone()]),
                )) {
                    InvariantValue::Finite(v) => i64::try_from(v).map_err(|_| {
                        SampleFail::Fatal(Error::Precondition(
                            "intersection number overflows i64".into(),
                        ))
                    })?,
                    InvariantValue::Infinite => {
                        return Err(SampleFail::Retry(format!(
                            "level {level}: f vanishes on a polar-curve component"
                        )));
                    }
                },
                dim => {
                    return Err(SampleFail::Retry(format!(
                        "level {level}: polar set has dimension {dim}, expected a curve"
                    )));
                }
            }
        };
        let signed = sign_pow(cur_dim - 1) * term;
        total += signed;
        parts.push((format!("level {level} polar intersection"), signed));
        if level + 1 < d {
            let h = drawer.draw(cur_x.nvars());
            let next_x = hyperplane_section(&cur_x, &h).map_err(retry_on_degenerate)?;
            let w = section_matrix(&h);
            let next_f = cur_f.substitute_linear(&w);
            if next_f.is_zero() {
                return Err(SampleFail::Retry(format!(
                    "level {level}: f vanishes identically on the hyperplane section"
                )));
            }
            cur_x = next_x;
            cur_f = next_f;
        }
    }
    Ok(SampleOutcome {
        headline: total,
        certs: vec![("B".to_string(), total)],
        parts,
    })
}

fn certified_brasselet(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
    label: &str,
) -> Result<CertifiedValue> {
    if x.dim() == 0 {
        // the stratum sum over positive-dimensional strata is empty
        return Ok(CertifiedValue {
            value: 0,
            certificates: Vec::new(),
            rounds: 0,
            terms: vec![(format!("{label} (zero-dimensional)"), 0)],
        });
    }
    let (outcome, mut certificates, rounds) = certify(cfg, |drawer| brasselet_sample(x, f, drawer))?;
    for c in &mut certificates {
        c.label = format!("{label} {}", c.label);
    }
    Ok(CertifiedValue {
        value: outcome.headline,
        certificates,
        rounds,
        terms: outcome.parts,
    })
}

/// Brasselet number of `f` on the germ, as the alternating sum of polar
/// intersection numbers along a certified generic hyperplane flag.
pub fn brasselet_number(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<CertifiedValue> {
    check_germ_function(f, x.nvars(), "f")?;
    ensure_isolated_on(x, f, "f")?;
    certified_brasselet(x, f, cfg, "B(X,f)")
}

fn ensure_isolated_on(x: &GermVariety, f: &Polynomial, what: &str) -> Result<()> {
    if x.dim() == 0 {
        return Ok(());
    }
    let crit = critical_ideal(x, f)?;
    if is_at_most_origin(&crit) {
        Ok(())
    } else {
        Err(Error::NonIsolated { what: format!("{what} on the germ") })
    }
}

/// Local Euler obstruction: the Brasselet number of a certified generic
/// linear form. A pinned form skips the drawing but not the certification
/// checks, so a degenerate pinned form surfaces as a certification failure.
pub fn euler_obstruction_with(
    x: &GermVariety,
    cfg: &GenericityConfig,
    pinned: Option<&LinearForm>,
) -> Result<CertifiedValue> {
    if x.dim() == 0 {
        return Ok(CertifiedValue {
            value: 0,
            certificates: Vec::new(),
            rounds: 0,
            terms: vec![("Eu (zero-dimensional)".to_string(), 0)],
        });
    }
    if let Some(l) = pinned {
        if l.nvars() != x.nvars() {
            return Err(Error::VarCountMismatch { left: l.nvars(), right: x.nvars() });
        }
    }
    let (outcome, mut certificates, rounds) = certify(cfg, |drawer| {
        let l = match pinned {
            Some(l) => l.clone(),
            None => drawer.draw(x.nvars()),
        };
        let lp = l.poly();
        match ensure_isolated_on(x, &lp, "the linear form") {
            Ok(()) => {}
            Err(Error::NonIsolated { .. }) => {
                return Err(SampleFail::Retry(
                    "linear form has a non-isolated singularity on the germ".into(),
                ));
            }
            Err(e) => return Err(retry_on_degenerate(e)),
        }
        brasselet_sample(x, &lp, drawer)
    })?;
    for c in &mut certificates {
        c.label = format!("Eu {}", c.label);
    }
    Ok(CertifiedValue {
        value: outcome.headline,
        certificates,
        rounds,
        terms: outcome.parts,
    })
}

pub fn euler_obstruction(x: &GermVariety, cfg: &GenericityConfig) -> Result<CertifiedValue> {
    euler_obstruction_with(x, cfg, None)
}

/// Independent route to the Euler obstruction for germs presented as a
/// complete intersection: `1 + (-1)^(d-1) mu(tuple, l)` for a certified
/// generic linear `l`.
pub fn euler_obstruction_icis_route(
    x: &GermVariety,
    cfg: &GenericityConfig,
) -> Result<CertifiedValue> {
    let n = x.nvars();
    let d = x.dim();
    if d == 0 || x.defining().gens().len() != n - d {
        return Err(Error::Precondition(
            "the ICIS route needs a complete-intersection presentation of positive dimension"
                .into(),
        ));
    }
    let (outcome, certificates, rounds) = certify(cfg, |drawer| {
        let l = drawer.draw(n);
        let mut tuple = x.defining().gens().to_vec();
        tuple.push(l.poly());
        match milnor_icis(&tuple, n) {
            Ok(mu) => {
                let mu = i64::try_from(mu).map_err(|_| {
                    SampleFail::Fatal(Error::Precondition("Milnor number overflows i64".into()))
                })?;
                let value = 1 + sign_pow(d - 1) * mu;
                Ok(SampleOutcome {
                    headline: value,
                    certs: vec![("Eu via ICIS".to_string(), value)],
                    parts: vec![("mu(tuple, l)".to_string(), mu)],
                })
            }
            Err(Error::NotIcis { prefix }) => Err(SampleFail::Retry(format!(
                "sliced tuple is not an ICIS ({prefix})"
            ))),
            Err(e) => Err(SampleFail::Fatal(e)),
        }
    })?;
    Ok(CertifiedValue {
        value: outcome.headline,
        certificates,
        rounds,
        terms: outcome.parts,
    })
}

/// Euler obstruction of the function `f`: the defect
/// `Eu_X(0) - B_{f,X}(0)`, reported together with the Morse-point count
/// `n_reg = (-1)^d * Eu_{f,X}(0)`, which must be nonnegative.
pub fn euler_obstruction_of_function(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<FunctionObstruction> {
    let eu = euler_obstruction(x, cfg)?;
    let b = brasselet_number(x, f, cfg)?;
    let eu_f = eu.value - b.value;
    let n_reg = sign_pow(x.dim()) * eu_f;
    if n_reg < 0 {
        return Err(Error::Inconsistency {
            context: "Euler obstruction of a function".into(),
            detail: format!(
                "Morse point count n_reg = {n_reg} is negative (Eu = {}, B = {})",
                eu.value, b.value
            ),
        });
    }
    let mut certificates = eu.certificates;
    certificates.extend(b.certificates);
    Ok(FunctionObstruction {
        eu_f,
        n_reg,
        eu_x: eu.value,
        brasselet: b.value,
        certificates,
        rounds: eu.rounds.max(b.rounds),
    })
}

/// Euler characteristic of the Milnor fibre of `f` on a germ with (at most)
/// an isolated singularity: the Brasselet number. When the germ carries a
/// complete-intersection presentation the value is cross-checked against the
/// independent route `1 + (-1)^(d-1) mu(tuple, f)` and a mismatch is an
/// error, not a value.
pub fn chi_milnor_fibre_isolated(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<CertifiedValue> {
    let sing = singular_locus_ideal(x);
    if !is_at_most_origin(&sing) {
        return Err(Error::Precondition(
            "the germ does not have an isolated singularity".into(),
        ));
    }
    let b = brasselet_number(x, f, cfg)?;
    let n = x.nvars();
    let d = x.dim();
    if d >= 1 && x.defining().gens().len() == n - d {
        let mut tuple = x.defining().gens().to_vec();
        tuple.push(f.clone());
        match milnor_icis(&tuple, n) {
            Ok(mu) => {
                let expected = 1 + sign_pow(d - 1) * to_i64(mu, "Milnor number")?;
                if expected != b.value {
                    return Err(Error::Inconsistency {
                        context: "Milnor fibre Euler characteristic".into(),
                        detail: format!(
                            "flag route gives {} but the ICIS route gives {expected} (mu = {mu})",
                            b.value
                        ),
                    });
                }
            }
            Err(Error::NotIcis { .. }) => {
                // complete-intersection presentation that is not an ICIS:
                // the cross-check does not apply
            }
            Err(e) => return Err(e),
        }
    }
    Ok(b)
}

// ---------------------------------------------------------------------------
// stratified evaluator

/// User-supplied stratum data: the closure of the stratum as a germ, the
/// Euler characteristic of its complex link in the ambient germ, and
/// optionally the (echoed, unused) Euler obstruction along it.
#[derive(Debug, Clone)]
pub struct StratumDatum {
    pub closure: GermVariety,
    pub chi_complex_link: i64,
    pub euler_obstruction_along: Option<i64>,
}

/// Evaluate the stratified Euler-characteristic sums for user-supplied
/// stratification data: the Milnor-fibre total
/// `sum_i (1 - chi_i) * B_{f, closure_i}` and, when `g` is supplied, the
/// polar total `sum_i (-1)^(d_i - 1) I(polar_i(f, g), f) * (1 - chi_i)`
/// together with the same Milnor-fibre total for the `g = 0` slices. The
/// report then checks the difference identity between the two routes.
///
/// This is a calculator for supplied strata, not a stratification
/// discoverer; complex-link Euler characteristics are taken as given, and
/// the slices by `g` reuse the ambient complex-link values.
pub fn evaluate_stratified_chi(
    strata: &[StratumDatum],
    f: &Polynomial,
    g: Option<&Polynomial>,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let max_dim = strata.iter().map(|s| s.closure.dim()).max().unwrap_or(0);
    for (i, s) in strata.iter().enumerate() {
        if s.closure.dim() == max_dim && max_dim > 0 && s.chi_complex_link != 0 {
            return Err(Error::Precondition(format!(
                "stratum {i} is open (dimension {max_dim}) but has nonzero complex-link Euler characteristic"
            )));
        }
    }
    let mut terms: Vec<(String, i64)> = Vec::new();
    let mut certificates: Vec<Certificate> = Vec::new();
    let mut rounds = 0u32;
    let mut chi_total: i64 = 0;
    for (i, s) in strata.iter().enumerate() {
        let weight = 1 - s.chi_complex_link;
        let b = certified_brasselet(&s.closure, f, cfg, &format!("stratum {i} B"))
            .map_err(|e| stratum_error(i, e))?;
        let contribution = weight * b.value;
        chi_total += contribution;
        terms.push((format!("stratum {i}: (1 - chi) * B"), contribution));
        certificates.extend(b.certificates);
        rounds = rounds.max(b.rounds);
    }

    let mut report = match g {
        None => {
            let mut r = VerificationReport::new("stratified-chi", chi_total, chi_total);
            r.notes.push(
                "no g supplied: the report carries the Milnor-fibre total on both sides".into(),
            );
            r
        }
        Some(g) => {
            check_germ_function(g, f.nvars(), "g")?;
            let mut polar_total: i64 = 0;
            let mut chi_slice_total: i64 = 0;
            for (i, s) in strata.iter().enumerate() {
                let weight = 1 - s.chi_complex_link;
                let di = s.closure.dim();
                if di >= 1 {
                    let gamma =
                        polar_ideal(&s.closure, f, g).map_err(|e| stratum_error(i, e))?;
                    let im = intersection_multiplicity(&gamma, f)
                        .map_err(|e| stratum_error(i, e))?;
                    let im = im
                        .finite()
                        .ok_or_else(|| Error::NonAdmissiblePair {
                            reason: format!("stratum {i}: infinite polar intersection number"),
                        })?;
                    let term = sign_pow(di - 1) * to_i64(im, "intersection number")? * weight;
                    polar_total += term;
                    terms.push((format!("stratum {i}: polar term"), term));
                    let sliced = s.closure.slice_by(g).map_err(|e| stratum_error(i, e))?;
                    let bg = certified_brasselet(&sliced, f, cfg, &format!("stratum {i} B on g-slice"))
                        .map_err(|e| stratum_error(i, e))?;
                    chi_slice_total += weight * bg.value;
                    terms.push((format!("stratum {i}: g-slice (1 - chi) * B"), weight * bg.value));
                    certificates.extend(bg.certificates);
                    rounds = rounds.max(bg.rounds);
                }
            }
            let mut r = VerificationReport::new(
                "stratified-chi",
                chi_total - chi_slice_total,
                polar_total,
            );
            r.notes.push(
                "lhs: difference of stratified Milnor-fibre totals; rhs: weighted polar intersection sum"
                    .into(),
            );
            r
        }
    };
    report.terms = terms;
    report.certificates = certificates;
    report.rounds = rounds;
    report.pass = report.lhs == report.rhs;
    Ok(report)
}

fn stratum_error(index: usize, e: Error) -> Error {
    Error::Precondition(format!("stratum {index}: {e}"))
}

// ---------------------------------------------------------------------------
// identity verifiers

fn check_pair_admissible(f: &Polynomial, g: &Polynomial) -> Result<()> {
    // proportional pairs make the rank condition hold identically
    if let (Some((fm, fc)), Some((gm, gc))) = (
        f.leading_term(&crate::ring::MonomialOrder::LocalAntiDegRevLex),
        g.leading_term(&crate::ring::MonomialOrder::LocalAntiDegRevLex),
    ) {
        if fm == gm {
            let ratio = fc / gc;
            if &g.scale(&ratio) == f {
                return Err(Error::NonAdmissiblePair {
                    reason: "f and g are proportional, the polar rank condition is vacuous".into(),
                });
            }
        }
    }
    Ok(())
}

fn polar_intersection(x: &GermVariety, f: &Polynomial, g: &Polynomial) -> Result<i64> {
    let gamma = polar_ideal(x, f, g)?;
    let im = match intersection_multiplicity(&gamma, f) {
        Ok(v) => v,
        Err(Error::NotACurve { found }) => {
            return Err(Error::NonAdmissiblePair {
                reason: format!("polar set of (f, g) has dimension {found}, expected a curve"),
            });
        }
        Err(e) => return Err(e),
    };
    im.finite()
        .ok_or_else(|| Error::NonAdmissiblePair {
            reason: "the polar intersection number is infinite".into(),
        })
        .and_then(|v| to_i64(v, "intersection number"))
}

/// Verify the Lê-Greuel-type identity
/// `B(X, f) - B(X^g, f) = (-1)^(d-1) I(X^f, polar(f, g))`.
pub fn verify_le_greuel(
    x: &GermVariety,
    f: &Polynomial,
    g: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    check_germ_function(f, x.nvars(), "f")?;
    check_germ_function(g, x.nvars(), "g")?;
    check_pair_admissible(f, g)?;
    ensure_isolated_on(x, f, "f")?;
    ensure_isolated_on(x, g, "g")?;
    let d = x.dim();
    if d == 0 {
        return Err(Error::Precondition("the germ must have positive dimension".into()));
    }
    let intersection = polar_intersection(x, f, g)?;
    let rhs = sign_pow(d - 1) * intersection;
    let b_x = brasselet_number(x, f, cfg)?;
    let x_g = x.slice_by(g)?;
    let b_xg = certified_brasselet(&x_g, f, cfg, "B(X^g,f)")?;
    let lhs = b_x.value - b_xg.value;
    let mut report = VerificationReport::new("legreuel", lhs, rhs);
    report.terms = vec![
        ("B(X,f)".to_string(), b_x.value),
        ("B(X^g,f)".to_string(), b_xg.value),
        ("I(X^f, polar)".to_string(), intersection),
        ("sign (-1)^(d-1)".to_string(), sign_pow(d - 1)),
    ];
    report.certificates = b_x.certificates;
    report.certificates.extend(b_xg.certificates);
    report.rounds = b_x.rounds.max(b_xg.rounds);
    report.notes.push(
        "rhs sign convention: (-1)^(d-1); the (-1)^d variant fails the smooth-case cross-checks"
            .to_string(),
    );
    Ok(report)
}

/// Verify the smooth-case Teissier identity
/// `mu(f) + mu'(f) = I({f = 0}, polar(f, l))` for a certified generic
/// hyperplane form `l`, with `mu'` the Milnor number of the hyperplane
/// restriction.
pub fn verify_teissier_smooth(
    f: &Polynomial,
    nvars: usize,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    if nvars < 2 {
        return Err(Error::Unsupported(
            "the hyperplane-section Milnor number needs at least 2 variables".into(),
        ));
    }
    check_germ_function(f, nvars, "f")?;
    let mu = milnor_hypersurface(f, nvars)?
        .finite()
        .ok_or_else(|| Error::NonIsolated { what: "f".into() })?;
    let mu = to_i64(mu, "Milnor number")?;
    let ambient = GermVariety::ambient(nvars);
    let (outcome, certificates, rounds) = certify(cfg, |drawer| {
        let l = drawer.draw(nvars);
        let gamma = polar_ideal(&ambient, f, &l.poly()).map_err(retry_on_degenerate)?;
        if is_unit_ideal(&gamma) {
            return Err(SampleFail::Retry("polar set of (f, l) is empty".into()));
        }
        if leading_ideal_krull_dim(&standard_basis(&gamma)) != 1 {
            return Err(SampleFail::Retry("polar set of (f, l) is not a curve".into()));
        }
        let im = match intersection_multiplicity(&gamma, f) {
            Ok(InvariantValue::Finite(v)) => v,
            Ok(InvariantValue::Infinite) => {
                return Err(SampleFail::Retry("f vanishes on a polar component".into()));
            }
            Err(e) => return Err(SampleFail::Fatal(e)),
        };
        let w = section_matrix(&l);
        let restricted = f.substitute_linear(&w);
        if restricted.is_zero() {
            return Err(SampleFail::Retry("f vanishes on the hyperplane".into()));
        }
        let mu_prime = match milnor_hypersurface(&restricted, nvars - 1) {
            Ok(InvariantValue::Finite(v)) => v,
            Ok(InvariantValue::Infinite) => {
                return Err(SampleFail::Retry(
                    "hyperplane restriction has a non-isolated critical point".into(),
                ));
            }
            Err(e) => return Err(SampleFail::Fatal(e)),
        };
        let im = i64::try_from(im).expect("desk-scale intersection number");
        let mu_prime = i64::try_from(mu_prime).expect("desk-scale Milnor number");
        Ok(SampleOutcome {
            headline: im,
            certs: vec![
                ("mu'".to_string(), mu_prime),
                ("I".to_string(), im),
            ],
            parts: vec![("mu'".to_string(), mu_prime), ("intersection".to_string(), im)],
        })
    })?;
    let mu_prime = outcome
        .parts
        .iter()
        .find(|(l, _)| l == "mu'")
        .map(|(_, v)| *v)
        .expect("mu' recorded");
    let intersection = outcome.headline;
    let mut report = VerificationReport::new("teissier-smooth", mu + mu_prime, intersection);
    report.terms = vec![
        ("mu".to_string(), mu),
        ("mu'".to_string(), mu_prime),
        ("intersection".to_string(), intersection),
    ];
    report.certificates = certificates;
    report.rounds = rounds;
    Ok(report)
}

/// Verify the isolated-singularity intersection-number identity
/// `chi(X, f) - chi(X^g, f) = (-1)^(d-1) I(X^f, polar(f, g))`, with both
/// Euler characteristics computed through Brasselet numbers (and their ICIS
/// cross-checks where available).
pub fn verify_int_numb_isolated(
    x: &GermVariety,
    f: &Polynomial,
    g: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    check_germ_function(f, x.nvars(), "f")?;
    check_germ_function(g, x.nvars(), "g")?;
    check_pair_admissible(f, g)?;
    let sing = singular_locus_ideal(x);
    if !is_at_most_origin(&sing) {
        return Err(Error::Precondition(
            "the germ does not have an isolated singularity".into(),
        ));
    }
    ensure_isolated_on(x, f, "f")?;
    ensure_isolated_on(x, g, "g")?;
    let d = x.dim();
    if d == 0 {
        return Err(Error::Precondition("the germ must have positive dimension".into()));
    }
    let intersection = polar_intersection(x, f, g)?;
    let rhs = sign_pow(d - 1) * intersection;
    let chi_x = chi_milnor_fibre_isolated(x, f, cfg)?;
    let x_g = x.slice_by(g)?;
    let chi_xg = if x_g.dim() == 0 {
        CertifiedValue { value: 0, certificates: Vec::new(), rounds: 0, terms: Vec::new() }
    } else {
        chi_milnor_fibre_isolated(&x_g, f, cfg)?
    };
    let lhs = chi_x.value - chi_xg.value;
    let mut report = VerificationReport::new("intnumb-isolated", lhs, rhs);
    report.terms = vec![
        ("chi(X, f)".to_string(), chi_x.value),
        ("chi(X^g, f)".to_string(), chi_xg.value),
        ("I(X^f, polar)".to_string(), intersection),
        ("sign (-1)^(d-1)".to_string(), sign_pow(d - 1)),
    ];
    report.certificates = chi_x.certificates;
    report
        .certificates
        .extend(chi_xg.certificates.into_iter().map(|mut c| {
            c.label = format!("g-slice {}", c.label);
            c
        }));
    report.rounds = chi_x.rounds.max(chi_xg.rounds);
    Ok(report)
}

/// Verify the complete-intersection form of the identity:
/// `mu(tuple, f) + mu(tuple, f, g) = I(X^f, polar(f, g))` on the germ cut
/// out by `tuple`.
pub fn verify_icis(
    tuple: &[Polynomial],
    nvars: usize,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<VerificationReport> {
    if tuple.is_empty() || tuple.len() >= nvars {
        return Err(Error::Precondition(
            "the ICIS identity needs a tuple cutting out a positive-dimensional germ".into(),
        ));
    }
    check_germ_function(f, nvars, "f")?;
    check_germ_function(g, nvars, "g")?;
    check_pair_admissible(f, g)?;
    let d = nvars - tuple.len();
    let x = GermVariety::new(nvars, tuple.to_vec(), d)?;
    let mut with_f = tuple.to_vec();
    with_f.push(f.clone());
    let mu_f = to_i64(milnor_icis(&with_f, nvars)?, "Milnor number")?;
    let mut with_fg = with_f.clone();
    with_fg.push(g.clone());
    let mu_fg = to_i64(milnor_icis(&with_fg, nvars)?, "Milnor number")?;
    let intersection = polar_intersection(&x, f, g)?;
    let mut report = VerificationReport::new("icis-legreuel", mu_f + mu_fg, intersection);
    report.terms = vec![
        ("mu(tuple, f)".to_string(), mu_f),
        ("mu(tuple, f, g)".to_string(), mu_fg),
        ("I(X^f, polar)".to_string(), intersection),
    ];
    Ok(report)
}

// ---------------------------------------------------------------------------
// generic-pair wrappers: draw the pair under certification

fn certified_pair_report(
    cfg: &GenericityConfig,
    run: impl Fn(&Polynomial, &Polynomial) -> Result<VerificationReport>,
    nvars: usize,
) -> Result<VerificationReport> {
    let (outcome, certificates, rounds) = certify(cfg, |drawer| {
        let f = drawer.draw(nvars).poly();
        let g = drawer.draw(nvars).poly();
        match run(&f, &g) {
            Ok(report) => Ok(SampleOutcome {
                headline: report.lhs,
                certs: vec![("lhs".to_string(), report.lhs), ("rhs".to_string(), report.rhs)],
                parts: report
                    .terms
                    .iter()
                    .cloned()
                    .chain([("lhs".to_string(), report.lhs), ("rhs".to_string(), report.rhs)])
                    .collect(),
            }),
            Err(
                e @ (Error::NonAdmissiblePair { .. }
                | Error::NonIsolated { .. }
                | Error::DimensionMismatch { .. }
                | Error::GenericityFailure { .. }
                | Error::SaturationCap { .. }
                | Error::Inconsistency { .. }),
            ) => Err(SampleFail::Retry(e.to_string())),
            Err(e) => Err(SampleFail::Fatal(e)),
        }
    })?;
    let lhs = outcome
        .parts
        .iter()
        .rev()
        .find(|(l, _)| l == "lhs")
        .map(|(_, v)| *v)
        .expect("lhs recorded");
    let rhs = outcome
        .parts
        .iter()
        .rev()
        .find(|(l, _)| l == "rhs")
        .map(|(_, v)| *v)
        .expect("rhs recorded");
    let mut report = VerificationReport::new("", lhs, rhs);
    report.terms = outcome.parts;
    report.certificates = certificates;
    report.rounds = rounds;
    Ok(report)
}

/// `verify_le_greuel` with a certified generic linear pair `(f, g)`.
pub fn verify_le_greuel_generic(
    x: &GermVariety,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let mut report =
        certified_pair_report(cfg, |f, g| verify_le_greuel(x, f, g, cfg), x.nvars())?;
    report.identity = "legreuel".to_string();
    report.notes.push(
        "rhs sign convention: (-1)^(d-1); the (-1)^d variant fails the smooth-case cross-checks"
            .to_string(),
    );
    Ok(report)
}

/// `verify_int_numb_isolated` with a certified generic linear pair.
pub fn verify_int_numb_isolated_generic(
    x: &GermVariety,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let mut report =
        certified_pair_report(cfg, |f, g| verify_int_numb_isolated(x, f, g, cfg), x.nvars())?;
    report.identity = "intnumb-isolated".to_string();
    Ok(report)
}

fn certified_g_report(
    cfg: &GenericityConfig,
    run: impl Fn(&Polynomial) -> Result<VerificationReport>,
    nvars: usize,
) -> Result<VerificationReport> {
    let (outcome, certificates, rounds) = certify(cfg, |drawer| {
        let g = drawer.draw(nvars).poly();
        match run(&g) {
            Ok(report) => Ok(SampleOutcome {
                headline: report.lhs,
                certs: vec![("lhs".to_string(), report.lhs), ("rhs".to_string(), report.rhs)],
                parts: report
                    .terms
                    .iter()
                    .cloned()
                    .chain([("lhs".to_string(), report.lhs), ("rhs".to_string(), report.rhs)])
                    .collect(),
            }),
            Err(
                e @ (Error::NonAdmissiblePair { .. }
                | Error::NonIsolated { .. }
                | Error::DimensionMismatch { .. }
                | Error::GenericityFailure { .. }
                | Error::SaturationCap { .. }
                | Error::Inconsistency { .. }),
            ) => Err(SampleFail::Retry(e.to_string())),
            Err(e) => Err(SampleFail::Fatal(e)),
        }
    })?;
    let lhs = outcome
        .parts
        .iter()
        .rev()
        .find(|(l, _)| l == "lhs")
        .map(|(_, v)| *v)
        .expect("lhs recorded");
    let rhs = outcome
        .parts
        .iter()
        .rev()
        .find(|(l, _)| l == "rhs")
        .map(|(_, v)| *v)
        .expect("rhs recorded");
    let mut report = VerificationReport::new("", lhs, rhs);
    report.terms = outcome.parts;
    report.certificates = certificates;
    report.rounds = rounds;
    Ok(report)
}

/// `verify_le_greuel` with the given `f` and a certified generic linear `g`.
pub fn verify_le_greuel_with_generic_g(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let mut report =
        certified_g_report(cfg, |g| verify_le_greuel(x, f, g, cfg), x.nvars())?;
    report.identity = "legreuel".to_string();
    report.notes.push(
        "rhs sign convention: (-1)^(d-1); the (-1)^d variant fails the smooth-case cross-checks"
            .to_string(),
    );
    Ok(report)
}

/// `verify_int_numb_isolated` with the given `f` and a certified generic
/// linear `g`.
pub fn verify_int_numb_isolated_with_generic_g(
    x: &GermVariety,
    f: &Polynomial,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let mut report =
        certified_g_report(cfg, |g| verify_int_numb_isolated(x, f, g, cfg), x.nvars())?;
    report.identity = "intnumb-isolated".to_string();
    Ok(report)
}

/// `verify_icis` with a certified generic linear pair.
pub fn verify_icis_generic(
    tuple: &[Polynomial],
    nvars: usize,
    cfg: &GenericityConfig,
) -> Result<VerificationReport> {
    let mut report =
        certified_pair_report(cfg, |f, g| verify_icis(tuple, nvars, f, g), nvars)?;
    report.identity = "icis-legreuel".to_string();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn parse(text: &str, names: &[&str]) -> Polynomial {
        parse_polynomial(text, &vars(names)).unwrap()
    }

    fn cfg(seed: u64) -> GenericityConfig {
        GenericityConfig { seed, coefficient_bound: 1000, samples: 3 }
    }

    fn cone() -> GermVariety {
        GermVariety::new(3, vec![parse("x*y - z^2", &["x", "y", "z"])], 2).unwrap()
    }

    fn cusp() -> GermVariety {
        GermVariety::new(2, vec![parse("y^2 - x^3", &["x", "y"])], 1).unwrap()
    }

    #[test]
    fn milnor_of_morse_point() {
        let f = parse("x^2 + y^2", &["x", "y"]);
        assert_eq!(milnor_hypersurface(&f, 2).unwrap(), InvariantValue::Finite(1));
    }

    #[test]
    fn milnor_of_cusp_and_fermat() {
        let f = parse("x^3 + y^2", &["x", "y"]);
        assert_eq!(milnor_hypersurface(&f, 2).unwrap(), InvariantValue::Finite(2));
        let g = parse("x^3 + y^3 + z^3", &["x", "y", "z"]);
        assert_eq!(milnor_hypersurface(&g, 3).unwrap(), InvariantValue::Finite(8));
    }

    #[test]
    fn milnor_of_nonisolated_is_infinite() {
        let f = parse("x^2*y", &["x", "y"]);
        assert_eq!(milnor_hypersurface(&f, 2).unwrap(), InvariantValue::Infinite);
    }

    #[test]
    fn icis_of_cone_with_plane() {
        let names = ["x", "y", "z"];
        let tuple = [parse("x*y - z^2", &names), parse("x + y", &names)];
        assert_eq!(milnor_icis(&tuple, 3).unwrap(), 1);
    }

    #[test]
    fn icis_of_smooth_line() {
        let tuple = [parse("x", &["x"])];
        assert_eq!(milnor_icis(&tuple, 1).unwrap(), 0);
    }

    #[test]
    fn icis_of_sphere_section() {
        let names = ["x", "y", "z"];
        let tuple = [parse("x^2 + y^2 + z^2", &names), parse("x", &names)];
        assert_eq!(milnor_icis(&tuple, 3).unwrap(), 1);
    }

    #[test]
    fn transverse_line_meets_once() {
        let curve = Ideal::local(2, vec![parse("y", &["x", "y"])]);
        let f = parse("x", &["x", "y"]);
        assert_eq!(
            intersection_multiplicity(&curve, &f).unwrap(),
            InvariantValue::Finite(1)
        );
    }

    #[test]
    fn polar_curve_meets_cusp_thrice() {
        // curve 3x^2 - 2y (polar of the cusp for a = b = 1), f = x^3 + y^2
        let curve = Ideal::local(2, vec![parse("3*x^2 - 2*y", &["x", "y"])]);
        let f = parse("x^3 + y^2", &["x", "y"]);
        assert_eq!(
            intersection_multiplicity(&curve, &f).unwrap(),
            InvariantValue::Finite(3)
        );
    }

    #[test]
    fn generic_line_meets_cusp_twice() {
        let curve = Ideal::local(2, vec![parse("y^2 - x^3", &["x", "y"])]);
        let f = parse("x + y", &["x", "y"]);
        assert_eq!(
            intersection_multiplicity(&curve, &f).unwrap(),
            InvariantValue::Finite(2)
        );
    }

    #[test]
    fn imult_rejects_non_curves() {
        let surface = Ideal::local(3, vec![parse("x*y - z^2", &["x", "y", "z"])]);
        let f = parse("x", &["x", "y", "z"]);
        assert!(matches!(
            intersection_multiplicity(&surface, &f),
            Err(Error::NotACurve { found: 2 })
        ));
    }

    #[test]
    fn brasselet_of_cusp_function_on_plane() {
        let x = GermVariety::ambient(2);
        let f = parse("x^3 + y^2", &["x", "y"]);
        let b = brasselet_number(&x, &f, &cfg(11)).unwrap();
        assert_eq!(b.value, -1);
        // terms: -3 from the polar level, +2 from the line level
        assert_eq!(b.terms.iter().map(|(_, v)| *v).collect::<Vec<_>>(), vec![-3, 2]);
    }

    #[test]
    fn brasselet_of_generic_linear_on_cone_vanishes() {
        let l = LinearForm::new(vec![
            crate::ring::coeff_int(3),
            crate::ring::coeff_int(-5),
            crate::ring::coeff_int(7),
        ])
        .unwrap();
        let b = brasselet_number(&cone(), &l.poly(), &cfg(5)).unwrap();
        assert_eq!(b.value, 0);
    }

    #[test]
    fn brasselet_of_generic_linear_on_ambient_space() {
        for n in 1..=3 {
            let x = GermVariety::ambient(n);
            let l = euler_obstruction(&x, &cfg(7)).unwrap();
            assert_eq!(l.value, 1, "Eu(C^{n})");
        }
    }

    #[test]
    fn euler_obstruction_of_cuspidal_curve() {
        let eu = euler_obstruction(&cusp(), &cfg(3)).unwrap();
        assert_eq!(eu.value, 2);
        let quintic = GermVariety::new(2, vec![parse("y^2 - x^5", &["x", "y"])], 1).unwrap();
        let eu5 = euler_obstruction(&quintic, &cfg(3)).unwrap();
        assert_eq!(eu5.value, 2);
    }

    #[test]
    fn euler_obstruction_of_cone_both_routes() {
        let eu = euler_obstruction(&cone(), &cfg(9)).unwrap();
        assert_eq!(eu.value, 0);
        let icis_route = euler_obstruction_icis_route(&cone(), &cfg(9)).unwrap();
        assert_eq!(icis_route.value, 0);
    }

    #[test]
    fn function_obstruction_counts_morse_points() {
        let x = GermVariety::ambient(2);
        let f = parse("x^3 + y^2", &["x", "y"]);
        let o = euler_obstruction_of_function(&x, &f, &cfg(13)).unwrap();
        assert_eq!(o.eu_f, 2);
        assert_eq!(o.n_reg, 2);
        // a generic linear form has vanishing function obstruction
        let l = parse("2*x - 7*y", &["x", "y"]);
        let o2 = euler_obstruction_of_function(&x, &l, &cfg(13)).unwrap();
        assert_eq!(o2.eu_f, 0);
        assert_eq!(o2.n_reg, 0);
    }

    #[test]
    fn chi_of_milnor_fibres() {
        let x = GermVariety::ambient(2);
        let f = parse("x^3 + y^2", &["x", "y"]);
        assert_eq!(chi_milnor_fibre_isolated(&x, &f, &cfg(1)).unwrap().value, -1);
        let l = parse("x + 4*y - 2*z", &["x", "y", "z"]);
        assert_eq!(chi_milnor_fibre_isolated(&cone(), &l, &cfg(1)).unwrap().value, 0);
        let x3 = GermVariety::ambient(3);
        let coord = parse("x", &["x", "y", "z"]);
        assert_eq!(chi_milnor_fibre_isolated(&x3, &coord, &cfg(1)).unwrap().value, 1);
    }

    #[test]
    fn le_greuel_on_cone_with_generic_pair() {
        let r = verify_le_greuel_generic(&cone(), &cfg(2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, -2);
        assert_eq!(r.rhs, -2);
    }

    #[test]
    fn le_greuel_on_plane_cusp() {
        let x = GermVariety::ambient(2);
        let f = parse("x^3 + y^2", &["x", "y"]);
        let g = parse("3*x + 2*y", &["x", "y"]);
        let r = verify_le_greuel(&x, &f, &g, &cfg(4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, -3);
        assert_eq!(r.rhs, -3);
    }

    #[test]
    fn le_greuel_on_independent_linear_forms() {
        let x = GermVariety::ambient(3);
        let f = parse("x + y", &["x", "y", "z"]);
        let g = parse("x - y + z", &["x", "y", "z"]);
        let r = verify_le_greuel(&x, &f, &g, &cfg(6)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, 0);
        assert_eq!(r.rhs, 0);
    }

    #[test]
    fn le_greuel_rejects_equal_pair() {
        let f = parse("x + y - z", &["x", "y", "z"]);
        assert!(matches!(
            verify_le_greuel(&cone(), &f, &f, &cfg(0)),
            Err(Error::NonAdmissiblePair { .. })
        ));
    }

    #[test]
    fn teissier_on_cusp() {
        let f = parse("x^3 + y^2", &["x", "y"]);
        let r = verify_teissier_smooth(&f, 2, &cfg(8)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, 3);
        assert_eq!(r.rhs, 3);
    }

    #[test]
    fn teissier_on_morse_three_fold() {
        let f = parse("x^2 + y^2 + z^2", &["x", "y", "z"]);
        let r = verify_teissier_smooth(&f, 3, &cfg(8)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, 2);
    }

    #[test]
    fn teissier_rejects_one_variable() {
        let f = parse("x^2", &["x"]);
        assert!(matches!(
            verify_teissier_smooth(&f, 1, &cfg(0)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn intnumb_on_cone() {
        let r = verify_int_numb_isolated_generic(&cone(), &cfg(12)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, -2);
        assert_eq!(r.rhs, -2);
    }

    #[test]
    fn icis_identity_on_cone() {
        let tuple = vec![parse("x*y - z^2", &["x", "y", "z"])];
        let r = verify_icis_generic(&tuple, 3, &cfg(14)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, 2);
        assert_eq!(r.rhs, 2);
    }

    #[test]
    fn stratified_single_open_stratum_matches_isolated_chi() {
        let x = GermVariety::ambient(2);
        let f = parse("x^3 + y^2", &["x", "y"]);
        let strata = vec![StratumDatum {
            closure: x.clone(),
            chi_complex_link: 0,
            euler_obstruction_along: None,
        }];
        let r = evaluate_stratified_chi(&strata, &f, None, &cfg(4)).unwrap();
        assert_eq!(r.lhs, -1);
        assert!(r.pass);
    }

    #[test]
    fn stratified_cone_with_point_stratum() {
        let names = ["x", "y", "z"];
        let origin = GermVariety::new(
            3,
            vec![parse("x", &names), parse("y", &names), parse("z", &names)],
            0,
        )
        .unwrap();
        let strata = vec![
            StratumDatum {
                closure: origin,
                chi_complex_link: 2,
                euler_obstruction_along: None,
            },
            StratumDatum {
                closure: cone(),
                chi_complex_link: 0,
                euler_obstruction_along: None,
            },
        ];
        let f = parse("x + 4*y - 2*z", &names);
        let g = parse("5*x - y + 3*z", &names);
        let r = evaluate_stratified_chi(&strata, &f, Some(&g), &cfg(4)).unwrap();
        // the point stratum contributes nothing; the open stratum gives the
        // isolated-singularity identity on the cone
        assert!(r.pass);
        assert_eq!(r.lhs, -2);
    }

    #[test]
    fn stratified_empty_list_is_zero() {
        let f = parse("x", &["x", "y"]);
        let r = evaluate_stratified_chi(&[], &f, None, &cfg(0)).unwrap();
        assert_eq!(r.lhs, 0);
        assert_eq!(r.rhs, 0);
        assert!(r.pass);
    }

    #[test]
    fn pinned_degenerate_form_fails_certification() {
        let pinned = LinearForm::from_poly(&parse("x", &["x", "y", "z"])).unwrap();
        match euler_obstruction_with(&cone(), &cfg(0), Some(&pinned)) {
            Err(Error::GenericityFailure { .. }) => {}
            other => panic!("expected certification failure, got {other:?}"),
        }
    }

    #[test]
    fn seed_stability_of_certified_values() {
        for seed in [1, 2, 3] {
            assert_eq!(euler_obstruction(&cone(), &cfg(seed)).unwrap().value, 0);
            assert_eq!(euler_obstruction(&cusp(), &cfg(seed)).unwrap().value, 2);
        }
    }
}
