//! Run configuration, loadable from a TOML file and overridden by command-line flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use schur_core::algebra::{semisimple, trivial, zigzag, BasedAlgebra};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::presentation::Presentation;

/// Which base algebra to schurify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AlgebraSpec {
    /// The extended zigzag algebra Z with ℓ + 1 vertices.
    Zigzag(usize),
    /// The idempotent truncation ξ^e T ξ^e with e = e_0 + ... + e_{ℓ-1} of the zigzag case.
    ZigzagBar(usize),
    /// The ground ring.
    Trivial,
    /// k ⊕ ... ⊕ k with m summands.
    Semisimple(usize),
    /// A JSON presentation file.
    File(PathBuf),
}

impl AlgebraSpec {
    /// The base algebra A.
    pub fn base(&self) -> Result<BasedAlgebra, CliError> {
        Ok(match self {
            AlgebraSpec::Zigzag(l) | AlgebraSpec::ZigzagBar(l) => zigzag(*l)?,
            AlgebraSpec::Trivial => trivial(),
            AlgebraSpec::Semisimple(m) => semisimple(*m)?,
            AlgebraSpec::File(p) => Presentation::load(p)?.build()?,
        })
    }

    /// Initial idempotents kept by the truncation, if any.
    pub fn truncation(&self) -> Option<Vec<usize>> {
        match self {
            AlgebraSpec::ZigzagBar(l) => Some((0..*l).collect()),
            _ => None,
        }
    }

    /// ℓ for the zigzag cases.
    pub fn zigzag_length(&self) -> Option<usize> {
        match self {
            AlgebraSpec::Zigzag(l) | AlgebraSpec::ZigzagBar(l) => Some(*l),
            _ => None,
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || {
            CliError::Usage(format!("unknown algebra '{s}' (expected zigzag:ℓ, zigzag-bar:ℓ, trivial, semisimple:m or file:PATH)"))
        };
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let count = |a: Option<&str>| -> Result<usize, CliError> {
            let v: usize = a.ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(CliError::Usage(format!(
                    "'{s}': the parameter must be at least 1"
                )));
            }
            Ok(v)
        };
        match head {
            "zigzag" => Ok(AlgebraSpec::Zigzag(count(arg)?)),
            "zigzag-bar" => Ok(AlgebraSpec::ZigzagBar(count(arg)?)),
            "semisimple" => Ok(AlgebraSpec::Semisimple(count(arg)?)),
            "trivial" if arg.is_none() => Ok(AlgebraSpec::Trivial),
            "file" => Ok(AlgebraSpec::File(PathBuf::from(
                arg.filter(|a| !a.is_empty()).ok_or_else(bad)?,
            ))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Zigzag(l) => write!(f, "zigzag:{l}"),
            AlgebraSpec::ZigzagBar(l) => write!(f, "zigzag-bar:{l}"),
            AlgebraSpec::Trivial => f.write_str("trivial"),
            AlgebraSpec::Semisimple(m) => write!(f, "semisimple:{m}"),
            AlgebraSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl TryFrom<String> for AlgebraSpec {
    type Error = CliError;
    fn try_from(s: String) -> Result<Self, CliError> {
        s.parse()
    }
}

impl From<AlgebraSpec> for String {
    fn from(a: AlgebraSpec) -> String {
        a.to_string()
    }
}

/// Coefficients: ℚ, 𝔽_p or ℤ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Q,
    Fp(u64),
    Z,
}

impl FieldSpec {
    /// Characteristic of a field (0 for ℚ); `None` for ℤ.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            FieldSpec::Q => Some(0),
            FieldSpec::Fp(p) => Some(*p),
            FieldSpec::Z => None,
        }
    }
}

impl FromStr for FieldSpec {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "Q" | "q" => Ok(FieldSpec::Q),
            "Z" | "z" => Ok(FieldSpec::Z),
            _ => {
                let p = s
                    .strip_prefix("Fp:")
                    .or_else(|| s.strip_prefix("fp:"))
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| {
                        CliError::Usage(format!("unknown field '{s}' (expected Q, Fp:p or Z)"))
                    })?;
                if !schur_core::ring::is_prime(p) {
                    return Err(CliError::Usage(format!("Fp:{p}: {p} is not prime")));
                }
                Ok(FieldSpec::Fp(p))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => f.write_str("Q"),
            FieldSpec::Fp(p) => write!(f, "Fp:{p}"),
            FieldSpec::Z => f.write_str("Z"),
        }
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = CliError;
    fn try_from(s: String) -> Result<Self, CliError> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// How decomposition numbers are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

/// Output format of structured results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutFormat {
    Json,
    Csv,
    /// Plain text: a number, a matrix such as `[[1,0],[qπ,1]]`, or a pass/fail table.
    Text,
}

/// Everything a command needs besides its own arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub algebra: AlgebraSpec,
    pub n: usize,
    pub d: usize,
    pub field: FieldSpec,
    pub method: Method,
    /// Output format; each command has its own default.
    pub out: Option<OutFormat>,
    /// Write results here instead of standard output.
    pub output: Option<PathBuf>,
    /// Directory holding the Littlewood-Richardson cache.
    pub cache_dir: Option<PathBuf>,
    /// Worker count; computations are sequential, so this only has to be positive.
    pub threads: usize,
    /// Seed for sampled checks.
    pub seed: u64,
    /// Number of sampled triples and pairs in `verify`.
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algebra: AlgebraSpec::Zigzag(1),
            n: 2,
            d: 2,
            field: FieldSpec::Q,
            method: Method::Both,
            out: None,
            output: None,
            cache_dir: None,
            threads: 1,
            seed: 0,
            samples: 100,
        }
    }
}

impl RunConfig {
    /// Read a TOML configuration file.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig =
            toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))?;
        cfg.validate_basic()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    /// Checks that hold for every command.
    pub fn validate_basic(&self) -> Result<(), CliError> {
        if self.n == 0 {
            return Err(CliError::Usage("n must be at least 1".into()));
        }
        if self.threads == 0 {
            return Err(CliError::Usage("threads must be at least 1".into()));
        }
        Ok(())
    }

    /// Quasi-hereditary structure (standard modules, straightening, decomposition numbers)
    /// needs enough letters to fill every tableau: n ≥ d.
    pub fn validate_heredity(&self) -> Result<(), CliError> {
        self.validate_basic()?;
        if self.n < self.d {
            return Err(CliError::Usage(format!(
                "n = {} < d = {}: standard tableaux do not span and the algebra is only cellular in this range; quasi-hereditary operations need n >= d",
                self.n, self.d
            )));
        }
        Ok(())
    }

    /// The characteristic used for ranks, refusing ℤ.
    pub fn characteristic(&self) -> Result<u64, CliError> {
        self.field.characteristic().ok_or_else(|| {
            CliError::Usage("this command needs a field: use --field Q or --field Fp:p".into())
        })
    }
}
