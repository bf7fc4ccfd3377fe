use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lindef_core::constructions::{AlgebraBase, AlgebraSpec, J_S36, J_S45};

use crate::UsageError;

#[derive(Parser, Debug)]
#[command(name = "lindef", version, about = "Exact computations in truncated standard graded algebras")]
pub struct Cli {
    /// Output format on standard output.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Directory for report files (JSON, text and the run manifest).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an algebra and summarise it.
    Build(AlgebraArgs),
    /// Print the Hilbert function.
    Hilbert(AlgebraArgs),
    /// Backelin-Roos obstruction from the Hilbert function.
    Obstruction(ObstructionArgs),
    /// Colon ideal (I : f).
    Colon(ColonArgs),
    /// Betti table of a minimal free resolution.
    Resolve(ModuleArgs),
    /// Homology of the linear part of a minimal free resolution.
    Linpart(ModuleArgs),
    /// Verify a witness file.
    Certify(CertifyArgs),
    /// Search for witnesses.
    Search(SearchArgs),
    /// Rerun a bundled case end to end.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct AlgebraArgs {
    /// One of s36, s45, v72, v53, v54, v45, roos, conca.
    #[arg(long)]
    pub builtin: Option<String>,
    /// JSON algebra description.
    #[arg(long, value_name = "FILE")]
    pub algebra: Option<PathBuf>,
    /// Artinian reduction of the Veronese ring V(n, c).
    #[arg(long, num_args = 2, value_names = ["N", "C"])]
    pub veronese: Option<Vec<usize>>,
    /// Artinian reduction of the Segre product S(m, n); see --j.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub segre: Option<Vec<usize>>,
    /// Linear forms J for --segre, one per line (default: the built-in J for S(3,6) and S(4,5)).
    #[arg(long = "J", alias = "j", value_name = "FILE")]
    pub j: Option<PathBuf>,
    /// Additional linear forms to factor out.
    #[arg(long = "quotient", value_name = "FORM")]
    pub quotient: Vec<String>,
    /// Truncation degree for rings that are not artinian.
    #[arg(long)]
    pub truncation: Option<usize>,
}

impl AlgebraArgs {
    pub fn is_given(&self) -> bool {
        self.builtin.is_some() || self.algebra.is_some() || self.veronese.is_some() || self.segre.is_some()
    }

    pub fn spec(&self) -> Result<AlgebraSpec> {
        let given = [self.builtin.is_some(), self.algebra.is_some(), self.veronese.is_some(), self.segre.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(UsageError("give exactly one of --builtin, --algebra, --veronese, --segre".into()).into());
        }
        let mut spec = if let Some(b) = &self.builtin {
            AlgebraSpec::builtin(b)
        } else if let Some(p) = &self.algebra {
            let text = read(p)?;
            AlgebraSpec::from_json(&text).with_context(|| format!("in {}", p.display()))?
        } else if let Some(v) = &self.veronese {
            AlgebraSpec { base: AlgebraBase::Veronese { n: v[0], c: v[1] }, quotient_linear: Vec::new() }
        } else {
            let s = self.segre.as_ref().expect("checked above");
            let j = match &self.j {
                Some(p) => read(p)?.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect(),
                None => match (s[0], s[1]) {
                    (3, 6) => J_S36.iter().map(|x| x.to_string()).collect(),
                    (4, 5) => J_S45.iter().map(|x| x.to_string()).collect(),
                    _ => return Err(UsageError("--segre needs --J for this size".into()).into()),
                },
            };
            AlgebraSpec { base: AlgebraBase::Segre { m: s[0], n: s[1], j, truncation: None }, quotient_linear: Vec::new() }
        };
        if let Some(t) = self.truncation {
            match &mut spec.base {
                AlgebraBase::Presentation { truncation, .. } | AlgebraBase::Segre { truncation, .. } => *truncation = Some(t),
                _ => return Err(UsageError("--truncation applies to presentations and Segre rings".into()).into()),
            }
        }
        spec.quotient_linear.extend(self.quotient.iter().cloned());
        Ok(spec)
    }
}

#[derive(Args, Debug)]
pub struct ObstructionArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Number of series coefficients to examine.
    #[arg(long, default_value_t = 20)]
    pub window: usize,
    /// The ring is a complete intersection.
    #[arg(long)]
    pub complete_intersection: bool,
}

#[derive(Args, Debug)]
pub struct ColonArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Generators of I, comma separated ("0" for the zero ideal).
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub ideal: Vec<String>,
    /// The element f.
    #[arg(long)]
    pub by: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    /// The ideal I itself.
    Ideal,
    /// The cyclic module R/I.
    Quotient,
    /// The residue field k.
    Residue,
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Generators of I, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ideal: Vec<String>,
    /// Module to resolve (default: the ideal if given, else the residue field).
    #[arg(long, value_enum)]
    pub module: Option<ModuleKind>,
    /// Last homological degree.
    #[arg(long)]
    pub cutoff: Option<usize>,
    /// Largest rank of a free module.
    #[arg(long, default_value_t = 4000)]
    pub max_rank: usize,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Replaces the algebra of the witness; with --builtin alone the bundled witness is used.
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
    /// Numeric Betti-splitting cross-check through this homological degree (0 disables).
    #[arg(long, default_value_t = 2)]
    pub cutoff: usize,
    /// Linear-part corroboration of (l1) through this degree.
    #[arg(long)]
    pub linpart: Option<usize>,
    /// Random strong-Koszulness spot checks.
    #[arg(long, default_value_t = 0)]
    pub spot_checks: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    ExhaustiveSparse,
    Randomized,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Search job: {"algebra": ..., "certs": ..., "config": ...}.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Take the ring and its ring-level certificates from a witness file.
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub pool: Option<Vec<i64>>,
    #[arg(long)]
    pub max_support: Option<usize>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub max_candidates: Option<usize>,
    #[arg(long)]
    pub max_seconds: Option<f64>,
    #[arg(long)]
    pub max_witnesses: Option<usize>,
    /// Prime for the modular prefilter.
    #[arg(long = "mod-p")]
    pub mod_p: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// s36, s45, v72, v53, v54, v45, roos, conca or all.
    pub case: String,
    /// Read witness files from this directory instead of the bundled copies.
    #[arg(long, value_name = "DIR")]
    pub data: Option<PathBuf>,
    /// Linear-part corroboration through this degree (0 disables).
    #[arg(long, default_value_t = 4)]
    pub linpart: usize,
    /// Numeric Betti-splitting cross-check through this degree (0 disables).
    #[arg(long, default_value_t = 2)]
    pub cutoff: usize,
    /// Wall-clock budget in seconds for a search fallback.
    #[arg(long, default_value_t = 1800.0)]
    pub search_seconds: f64,
}

pub fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| UsageError(format!("cannot read {}: {e}", p.display())).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(args: &[&str]) -> Result<AlgebraSpec> {
        let cli = Cli::try_parse_from(["lindef", "hilbert"].iter().chain(args)).map_err(|e| anyhow::anyhow!(e.to_string()))?;
        match cli.command {
            Command::Hilbert(a) => a.spec(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn algebra_sources_are_exclusive() {
        assert!(algebra(&["--builtin", "roos"]).is_ok());
        assert!(algebra(&["--veronese", "5", "3", "--quotient", "a30"]).unwrap().quotient_linear == vec!["a30".to_string()]);
        assert!(algebra(&[]).unwrap_err().is::<UsageError>());
        assert!(algebra(&["--builtin", "roos", "--veronese", "5", "3"]).unwrap_err().is::<UsageError>());
        assert!(algebra(&["--segre", "2", "3"]).unwrap_err().is::<UsageError>());
    }

    #[test]
    fn truncation_only_for_presentations_and_segre() {
        assert!(algebra(&["--veronese", "4", "5", "--truncation", "3"]).unwrap_err().is::<UsageError>());
        let s = algebra(&["--segre", "3", "6", "--truncation", "4"]).unwrap();
        assert!(matches!(s.base, AlgebraBase::Segre { truncation: Some(4), .. }));
    }
}
