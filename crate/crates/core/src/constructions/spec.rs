//! Serializable descriptions of algebras and the named built-in rings.

use serde::{Deserialize, Serialize};

use super::hpoly::{h_poly_segre, h_poly_veronese, HPolynomial};
use super::segre::{segre_artinian, segre_s36, segre_s45};
use super::veronese::veronese_artinian;
use crate::error::{Error, Result};
use crate::exactla::Rationals;
use crate::galgebra::algebra::Algebra;
use crate::galgebra::poly::PolyRing;
use crate::galgebra::presentation::build_from_presentation;
use crate::galgebra::quotient::quotient_by_linear_forms;

pub const BUILTINS: [&str; 8] = ["s36", "s45", "v72", "v53", "v54", "v45", "roos", "conca"];

/// Default truncation for rings that are not artinian.
pub const DEFAULT_TRUNCATION: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AlgebraBase {
    Builtin {
        name: String,
    },
    Presentation {
        vars: Vec<String>,
        relations: Vec<String>,
        #[serde(default)]
        truncation: Option<usize>,
    },
    Veronese {
        n: usize,
        c: usize,
    },
    Segre {
        m: usize,
        n: usize,
        j: Vec<String>,
        #[serde(default)]
        truncation: Option<usize>,
    },
}

/// A base algebra, optionally followed by a quotient by linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(flatten)]
    pub base: AlgebraBase,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotient_linear: Vec<String>,
}

impl AlgebraSpec {
    pub fn builtin(name: &str) -> Self {
        AlgebraSpec { base: AlgebraBase::Builtin { name: name.to_string() }, quotient_linear: Vec::new() }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "algebra spec".into(), message: e.to_string() })
    }

    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn with_quotient(mut self, forms: &[String]) -> Self {
        self.quotient_linear.extend(forms.iter().cloned());
        self
    }

    /// Short human-readable name.
    pub fn describe(&self) -> String {
        let base = match &self.base {
            AlgebraBase::Builtin { name } => name.clone(),
            AlgebraBase::Presentation { vars, relations, .. } => {
                format!("k[{}]/({})", vars.join(","), relations.join(", "))
            }
            AlgebraBase::Veronese { n, c } => format!("V({n},{c}) artinian"),
            AlgebraBase::Segre { m, n, .. } => format!("S({m},{n})/J"),
        };
        if self.quotient_linear.is_empty() {
            base
        } else {
            format!("{base} / ({})", self.quotient_linear.join(", "))
        }
    }

    pub fn build(&self) -> Result<Algebra<Rationals>> {
        let a = match &self.base {
            AlgebraBase::Builtin { name } => build_builtin(name)?,
            AlgebraBase::Presentation { vars, relations, truncation } => {
                build_presentation_strs(vars, relations, truncation.unwrap_or(DEFAULT_TRUNCATION))?
            }
            AlgebraBase::Veronese { n, c } => veronese_artinian(*n, *c)?,
            AlgebraBase::Segre { m, n, j, truncation } => {
                segre_artinian(*m, *n, j, truncation.unwrap_or(DEFAULT_TRUNCATION))?
            }
        };
        if self.quotient_linear.is_empty() {
            return Ok(a);
        }
        let forms = self.quotient_linear.iter().map(|f| a.parse(f)).collect::<Result<Vec<_>>>()?;
        quotient_by_linear_forms(&a, &forms)
    }

    /// Closed-form h-polynomial of the base ring, when it is an artinian
    /// reduction of a Cohen–Macaulay ring with a known formula.
    pub fn closed_form_h(&self) -> Option<HPolynomial> {
        match &self.base {
            AlgebraBase::Veronese { n, c } => Some(h_poly_veronese(*n, *c)),
            AlgebraBase::Segre { m, n, .. } => Some(h_poly_segre(*m, *n)),
            AlgebraBase::Builtin { name } => match name.as_str() {
                "s36" => Some(h_poly_segre(3, 6)),
                "s45" => Some(h_poly_segre(4, 5)),
                "v72" => Some(h_poly_veronese(7, 2)),
                "v53" => Some(h_poly_veronese(5, 3)),
                "v54" => Some(h_poly_veronese(5, 4)),
                "v45" => Some(h_poly_veronese(4, 5)),
                _ => None,
            },
            AlgebraBase::Presentation { .. } => None,
        }
    }
}

pub fn build_presentation_strs(vars: &[String], relations: &[String], cap: usize) -> Result<Algebra<Rationals>> {
    let ring = PolyRing { names: vars };
    let rels = relations.iter().map(|r| ring.parse(r)).collect::<Result<Vec<_>>>()?;
    build_from_presentation(vars, &rels, cap)
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn build_builtin(name: &str) -> Result<Algebra<Rationals>> {
    match name {
        "s36" => segre_s36(),
        "s45" => segre_s45(),
        "v72" => veronese_artinian(7, 2),
        "v53" => veronese_artinian(5, 3),
        "v54" => veronese_artinian(5, 4),
        "v45" => veronese_artinian(4, 5),
        "roos" => build_presentation_strs(
            &strs(&["x", "y", "z", "u"]),
            &strs(&["x^2", "x*y", "y^2", "z^2", "z*u", "u^2"]),
            4,
        ),
        "conca" => build_presentation_strs(
            &strs(&["x", "y", "z", "u"]),
            &strs(&["x^2+y*z", "x*y-y*u", "x*z", "x*u", "y^2"]),
            DEFAULT_TRUNCATION,
        ),
        other => Err(Error::Invalid(format!("unknown builtin `{other}` (expected one of {})", BUILTINS.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let s = AlgebraSpec::builtin("v72").with_quotient(&["a21".to_string()]);
        let j = s.to_canonical_json();
        assert_eq!(j, r#"{"kind":"builtin","name":"v72","quotient_linear":["a21"]}"#);
        assert_eq!(AlgebraSpec::from_json(&j).unwrap(), s);
        let p = AlgebraSpec::from_json(r#"{"kind":"presentation","vars":["x"],"relations":["x^2"]}"#).unwrap();
        assert_eq!(p.build().unwrap().dims(), &[1, 1]);
        assert!(AlgebraSpec::from_json(r#"{"kind":"nope"}"#).is_err());
    }

    #[test]
    fn small_builtins() {
        assert_eq!(build_builtin("roos").unwrap().dims(), &[1, 4, 4]);
        let c = build_builtin("conca").unwrap();
        assert!(!c.is_artinian());
        assert_eq!(c.top(), DEFAULT_TRUNCATION);
        assert!(build_builtin("s99").is_err());
    }

    #[test]
    fn quotient_spec() {
        let s = AlgebraSpec::builtin("roos").with_quotient(&["x+z".to_string()]);
        let a = s.build().unwrap();
        assert_eq!(a.num_vars(), 3);
    }
}
