//! The chain `R → U → W`: `U` an artinian reduction of a Cohen–Macaulay ring
//! `R` by a regular sequence of linear forms, `W = U/I` with `I` linear.

use std::sync::Arc;

use super::context::KoszulContext;
use super::report::{LiftLink, Status};
use crate::constructions::{AlgebraSpec, HPolynomial};
use crate::exactla::Rationals;
use crate::galgebra::{ideal, Algebra};

/// Link 1 is checked by comparing the Hilbert function of `U` with the
/// closed-form h-polynomial of `R` (a length-matching linear system of
/// parameters of a Cohen–Macaulay ring is regular). Link 2 needs the ideal of
/// the quotient forms to have a linear resolution over `U`.
pub fn verify_lift_chain(spec: &AlgebraSpec, u: &Arc<Algebra<Rationals>>, ctx_u: &KoszulContext<Rationals>) -> Vec<LiftLink> {
    let mut links = Vec::new();
    let base = AlgebraSpec { base: spec.base.clone(), quotient_linear: Vec::new() };
    if let Some(h) = spec.closed_form_h() {
        let got = HPolynomial::from_dims(u.dims());
        let ok = u.is_artinian() && got == h;
        links.push(LiftLink {
            from: "Cohen–Macaulay ring".into(),
            to: base.describe(),
            justification: format!(
                "regular-sequence reduction: Hilbert function {:?} {} h-polynomial {}",
                u.dims(),
                if ok { "matches" } else { "does not match" },
                h.display()
            ),
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }
    if !spec.quotient_linear.is_empty() {
        let forms: Result<Vec<_>, _> = spec.quotient_linear.iter().map(|f| u.parse(f)).collect();
        let (status, why) = match forms.and_then(|f| ideal(u, &f)) {
            Ok(i) => match ctx_u.linear_reason(&i) {
                Some(r) => (Status::Pass, format!("quotient ideal has a linear resolution: {r}")),
                None => (Status::Fail, "quotient ideal is not certified to have a linear resolution".to_string()),
            },
            Err(e) => (Status::Fail, e.to_string()),
        };
        links.push(LiftLink { from: base.describe(), to: spec.describe(), justification: why, status });
    }
    links
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn veronese_chain() {
        let spec = AlgebraSpec::builtin("v72").with_quotient(&["a21".to_string()]);
        let u = Arc::new(AlgebraSpec::builtin("v72").build().unwrap());
        let mut ctx = KoszulContext::new(&u);
        let links = verify_lift_chain(&spec, &u, &ctx);
        assert_eq!(links[0].status, Status::Pass);
        assert_eq!(links[1].status, Status::Fail);
        ctx.trust_strongly_koszul("Veronese ring");
        let links = verify_lift_chain(&spec, &u, &ctx);
        assert!(links.iter().all(|l| l.status == Status::Pass));
        // a non-variable linear form is not covered by strong Koszulness
        let spec = AlgebraSpec::builtin("v72").with_quotient(&["a1+a2".to_string()]);
        assert_eq!(verify_lift_chain(&spec, &u, &ctx)[1].status, Status::Fail);
    }
}
