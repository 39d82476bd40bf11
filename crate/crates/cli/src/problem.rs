//! Problem-file ingestion: a single self-describing JSON document naming the
//! variables, the ambient germ, the functions and optional stratification
//! data, plus genericity-configuration overrides.

use std::path::Path;

use serde::Deserialize;

use germcalc_core::geometry::{GenericityConfig, GermVariety};
use germcalc_core::invariants::StratumDatum;
use germcalc_core::ring::{parse_polynomial, Polynomial};

use crate::CliError;

/// Environment variable consulted for the default seed when neither the
/// command line nor the problem file provides one.
pub const SEED_ENV_VAR: &str = "GERMCALC_SEED";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    #[serde(default)]
    pub space: Option<SpaceSpec>,
    #[serde(default)]
    pub f: Option<String>,
    #[serde(default)]
    pub g: Option<String>,
    #[serde(default)]
    pub strata: Option<Vec<StratumSpec>>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub samples: Option<u32>,
    #[serde(default)]
    pub bound: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub ideal: Vec<String>,
    pub dim: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub ideal: Vec<String>,
    pub dim: usize,
    pub chi_complex_link: i64,
    #[serde(default)]
    pub euler_obstruction_along: Option<i64>,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Io(format!("cannot parse {}: {e}", path.display())))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial, CliError> {
        parse_polynomial(text, &self.variables).map_err(CliError::Core)
    }

    /// The ambient germ: the declared space, or all of `C^N` when absent.
    pub fn germ(&self) -> Result<GermVariety, CliError> {
        match &self.space {
            None => Ok(GermVariety::ambient(self.nvars())),
            Some(space) => {
                let gens = space
                    .ideal
                    .iter()
                    .map(|s| self.parse_poly(s))
                    .collect::<Result<Vec<_>, _>>()?;
                GermVariety::new(self.nvars(), gens, space.dim).map_err(CliError::Core)
            }
        }
    }

    pub fn require_f(&self) -> Result<Polynomial, CliError> {
        match &self.f {
            Some(text) => self.parse_poly(text),
            None => Err(CliError::Io("the problem file does not define f".into())),
        }
    }

    pub fn optional_f(&self) -> Result<Option<Polynomial>, CliError> {
        self.f.as_deref().map(|t| self.parse_poly(t)).transpose()
    }

    pub fn optional_g(&self) -> Result<Option<Polynomial>, CliError> {
        self.g.as_deref().map(|t| self.parse_poly(t)).transpose()
    }

    pub fn strata_data(&self) -> Result<Vec<StratumDatum>, CliError> {
        let Some(specs) = &self.strata else {
            return Err(CliError::Io("the problem file does not define strata".into()));
        };
        specs
            .iter()
            .map(|s| {
                let gens = s
                    .ideal
                    .iter()
                    .map(|t| self.parse_poly(t))
                    .collect::<Result<Vec<_>, _>>()?;
                let closure = GermVariety::new(self.nvars(), gens, s.dim)
                    .map_err(CliError::Core)?;
                Ok(StratumDatum {
                    closure,
                    chi_complex_link: s.chi_complex_link,
                    euler_obstruction_along: s.euler_obstruction_along,
                })
            })
            .collect()
    }

    /// Resolve the genericity configuration: command-line flags beat the
    /// problem file, which beats the `GERMCALC_SEED` environment variable,
    /// which beats the defaults.
    pub fn config(
        &self,
        seed_flag: Option<u64>,
        samples_flag: Option<u32>,
        bound_flag: Option<u32>,
    ) -> GenericityConfig {
        let default = GenericityConfig::default();
        let env_seed = std::env::var(SEED_ENV_VAR)
            .ok()
            .and_then(|v| v.parse::<u64>().ok());
        GenericityConfig {
            seed: seed_flag.or(self.seed).or(env_seed).unwrap_or(default.seed),
            samples: samples_flag.or(self.samples).unwrap_or(default.samples),
            coefficient_bound: bound_flag.or(self.bound).unwrap_or(default.coefficient_bound),
        }
    }
}
