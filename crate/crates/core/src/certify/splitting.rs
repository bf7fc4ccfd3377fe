//! Betti splittings `M = M1 + M2`, certified either by a zero intersection or
//! by the intersection living strictly above both regularities.

use super::report::{Check, Status};
use crate::error::Error;
use crate::exactla::Field;
use crate::galgebra::Submodule;
use crate::resolution::{betti_splitting_numeric, ResolveOptions};

pub struct SplittingRegs {
    pub reg1: Option<usize>,
    pub reg2: Option<usize>,
}

/// `numeric`: cutoff and options for the Betti-number cross-check; skipped when
/// over budget, fatal when the numbers disagree.
pub fn verify_betti_splitting<K: Field>(
    m: &Submodule<K>,
    m1: &Submodule<K>,
    m2: &Submodule<K>,
    regs: SplittingRegs,
    numeric: Option<(usize, &ResolveOptions)>,
    id: &str,
) -> Check {
    let desc = "is a Betti splitting";
    let sum_ok = m1.sum(m2).and_then(|s| s.equals(m));
    match sum_ok {
        Ok(true) => {}
        Ok(false) => return Check::new(id, desc, false, "M1 + M2 differs from M"),
        Err(e) => return Check::new(id, desc, false, e.to_string()),
    }
    let cap = match m1.intersect(m2) {
        Ok(c) => c,
        Err(e) => return Check::new(id, desc, false, e.to_string()),
    };
    let mut evidence = Vec::new();
    let mut status = if cap.is_zero() {
        evidence.push("route (a): M1 ∩ M2 = 0".to_string());
        Status::Pass
    } else {
        let low = cap.min_gen_degree().expect("nonzero intersection");
        match (regs.reg1, regs.reg2) {
            (Some(r1), Some(r2)) if low > r1.max(r2) => {
                evidence.push(format!(
                    "route (b): M1 ∩ M2 generated in degrees ≥ {low} > max(reg M1 = {r1}, reg M2 = {r2})"
                ));
                Status::Pass
            }
            (r1, r2) => {
                let show = |r: Option<usize>| r.map_or("?".to_string(), |r| r.to_string());
                evidence.push(format!(
                    "no route: M1 ∩ M2 starts in degree {low}, reg M1 = {}, reg M2 = {}",
                    show(r1),
                    show(r2)
                ));
                Status::Inconclusive
            }
        }
    };
    if let Some((cutoff, opts)) = numeric {
        match betti_splitting_numeric(m, m1, m2, cutoff, opts) {
            Ok(rep) => {
                let rows: Vec<String> = rep
                    .rows
                    .iter()
                    .map(|r| format!("i={}: {} vs {}+{}+{}", r.i, r.beta_m, r.beta_m1, r.beta_m2, r.beta_intersection_prev))
                    .collect();
                evidence.push(format!("numeric through i={cutoff}: {}", rows.join("; ")));
                if !rep.holds {
                    evidence.push("numeric Betti numbers contradict the splitting".into());
                    status = Status::Fail;
                }
            }
            Err(Error::Budget(b)) => evidence.push(format!("numeric cross-check skipped: {b}")),
            Err(e) => evidence.push(format!("numeric cross-check skipped: {e}")),
        }
    }
    Check::with_status(id, desc, status, evidence.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_builtin;
    use crate::galgebra::{ideal_from_strs, FreeModule};
    use std::sync::Arc;

    #[test]
    fn roos_zero_intersection() {
        let a = Arc::new(build_builtin("roos").unwrap());
        let k = ideal_from_strs(&a, &["y*u"]).unwrap();
        let l2 = ideal_from_strs(&a, &["x+z"]).unwrap();
        let m = Submodule::zero(&a, FreeModule::ring()).colon(&a.parse("x-z").unwrap()).unwrap();
        let c = verify_betti_splitting(&m, &k, &l2, SplittingRegs { reg1: None, reg2: None }, Some((3, &ResolveOptions::default())), "s");
        assert!(c.passed(), "{c:?}");
        assert!(c.evidence.contains("route (a)"));
    }

    #[test]
    fn conca_y_decomposition_refuted() {
        // U = (y, x-u, z^2) = (y) + (x-u, z^2) with beta_1(U) = 7
        let a = Arc::new(build_builtin("conca").unwrap());
        let u = ideal_from_strs(&a, &["y", "x-u", "z^2"]).unwrap();
        let m1 = ideal_from_strs(&a, &["y"]).unwrap();
        let m2 = ideal_from_strs(&a, &["x-u", "z^2"]).unwrap();
        let c = verify_betti_splitting(&u, &m1, &m2, SplittingRegs { reg1: None, reg2: None }, Some((2, &ResolveOptions::default())), "s");
        assert_eq!(c.status, Status::Fail, "{c:?}");
    }

    #[test]
    fn sum_mismatch_fails() {
        let a = Arc::new(build_builtin("roos").unwrap());
        let m = ideal_from_strs(&a, &["x", "y"]).unwrap();
        let m1 = ideal_from_strs(&a, &["x"]).unwrap();
        let c = verify_betti_splitting(&m, &m1, &m1, SplittingRegs { reg1: None, reg2: None }, None, "s");
        assert_eq!(c.status, Status::Fail);
    }
}
