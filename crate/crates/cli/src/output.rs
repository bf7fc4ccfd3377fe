use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use lindef_core::constructions::AlgebraSpec;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::args::{Cli, Format};

pub enum Outcome {
    Success,
    Failed,
}

impl Outcome {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Success
        } else {
            Outcome::Failed
        }
    }
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub algebra_spec_sha256: Option<String>,
    pub engine_version: String,
    pub arithmetic: String,
    pub wall_clock_seconds: f64,
    pub verdicts: Vec<String>,
}

pub fn spec_hash(spec: &AlgebraSpec) -> String {
    let digest = Sha256::digest(spec.to_canonical_json().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Collects one command's result and writes it out with its manifest.
pub struct Run<'a> {
    cli: &'a Cli,
    command: &'static str,
    start: Instant,
    pub spec: Option<AlgebraSpec>,
    pub arithmetic: String,
    pub verdicts: Vec<String>,
    pub write_files: bool,
}

impl<'a> Run<'a> {
    pub fn new(cli: &'a Cli, command: &'static str) -> Self {
        Run { cli, command, start: Instant::now(), spec: None, arithmetic: "rational".into(), verdicts: Vec::new(), write_files: true }
    }

    fn manifest(&self) -> RunManifest {
        RunManifest {
            command: self.command.into(),
            arguments: std::env::args().skip(1).collect(),
            algebra_spec_sha256: self.spec.as_ref().map(spec_hash),
            engine_version: lindef_core::VERSION.into(),
            arithmetic: self.arithmetic.clone(),
            wall_clock_seconds: self.start.elapsed().as_secs_f64(),
            verdicts: self.verdicts.clone(),
        }
    }

    /// Prints `text` or the JSON result, and writes `<command>.json`,
    /// `<command>.txt` and `manifest.json` under `--out`.
    pub fn finish(self, result: Value, text: &str) -> Result<()> {
        let manifest = self.manifest();
        let body = match self.cli.format {
            Format::Text if text.ends_with('\n') => text.to_string(),
            Format::Text => format!("{text}\n"),
            Format::Json => serde_json::to_string_pretty(&json!({ "result": result, "manifest": manifest }))? + "\n",
        };
        let mut out = std::io::stdout().lock();
        match out.write_all(body.as_bytes()).and_then(|_| out.flush()) {
            // a closed pipe (`| head`) is not an error
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        }
        if let Some(dir) = self.cli.out.as_ref().filter(|_| self.write_files) {
            write_reports(dir, self.command, &result, text, &manifest)?;
        }
        Ok(())
    }
}

pub fn write_reports(dir: &Path, stem: &str, result: &Value, text: &str, manifest: &RunManifest) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let put = |name: String, body: String| -> Result<()> {
        let p = dir.join(name);
        std::fs::write(&p, body).with_context(|| format!("writing {}", p.display()))
    };
    put(format!("{stem}.json"), serde_json::to_string_pretty(result)? + "\n")?;
    put(format!("{stem}.txt"), text.to_string())?;
    put("manifest.json".into(), serde_json::to_string_pretty(manifest)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_hash_is_stable_and_distinguishes_specs() {
        let a = spec_hash(&AlgebraSpec::builtin("roos"));
        assert_eq!(a.len(), 64);
        assert_eq!(a, spec_hash(&AlgebraSpec::builtin("roos")));
        assert_ne!(a, spec_hash(&AlgebraSpec::builtin("s36")));
    }
}
