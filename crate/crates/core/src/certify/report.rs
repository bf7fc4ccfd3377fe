use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: Status,
    /// Informational checks never change the verdict.
    pub required: bool,
    pub evidence: String,
}

impl Check {
    pub fn new(id: impl Into<String>, description: impl Into<String>, ok: bool, evidence: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            description: description.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            required: true,
            evidence: evidence.into(),
        }
    }

    pub fn with_status(id: impl Into<String>, description: impl Into<String>, status: Status, evidence: impl Into<String>) -> Self {
        Check { id: id.into(), description: description.into(), status, required: true, evidence: evidence.into() }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedNotAbsolutelyKoszul,
    /// Every check passed, but the ambient algebra is only known through a truncation degree.
    CertifiedThroughTruncation,
    Refuted,
    Inconclusive,
}

impl Verdict {
    pub fn is_certified(self) -> bool {
        matches!(self, Verdict::CertifiedNotAbsolutelyKoszul | Verdict::CertifiedThroughTruncation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftLink {
    pub from: String,
    pub to: String,
    pub justification: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub subject: String,
    pub checks: Vec<Check>,
    pub lift_chain: Vec<LiftLink>,
    pub verdict: Verdict,
    pub caveats: Vec<String>,
}

impl Report {
    /// Verdict from the required checks: any failure refutes, any inconclusive check
    /// leaves the question open, otherwise certified (qualified by `truncation`).
    pub fn assemble(
        subject: impl Into<String>,
        checks: Vec<Check>,
        lift_chain: Vec<LiftLink>,
        truncation: Option<usize>,
        mut caveats: Vec<String>,
    ) -> Self {
        let required = || checks.iter().filter(|c| c.required);
        let lift_failed = lift_chain.iter().any(|l| l.status == Status::Fail);
        let verdict = if required().any(|c| c.status == Status::Fail) || lift_failed {
            Verdict::Refuted
        } else if required().any(|c| c.status == Status::Inconclusive) {
            Verdict::Inconclusive
        } else if let Some(d) = truncation {
            caveats.push(format!("the algebra is not artinian; all checks hold through truncation degree {d}"));
            Verdict::CertifiedThroughTruncation
        } else {
            Verdict::CertifiedNotAbsolutelyKoszul
        };
        Report { schema: REPORT_SCHEMA, subject: subject.into(), checks, lift_chain, verdict, caveats }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.required && c.status == Status::Fail)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a ",
                Status::Inconclusive => "??? ",
            };
            let opt = if c.required { "" } else { " (info)" };
            out.push_str(&format!("  [{tag}] {}: {}{opt}\n", c.id, c.description));
            if !c.evidence.is_empty() {
                for line in c.evidence.lines() {
                    out.push_str(&format!("         {line}\n"));
                }
            }
        }
        for l in &self.lift_chain {
            out.push_str(&format!("  lift {} -> {}: {} [{:?}]\n", l.from, l.to, l.justification, l.status));
        }
        for c in &self.caveats {
            out.push_str(&format!("  caveat: {c}\n"));
        }
        out.push_str(&format!("verdict: {}\n", serde_json::to_value(self.verdict).unwrap().as_str().unwrap()));
        out
    }
}
