//! Closed-form h-polynomials and the Backelin–Roos series test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolynomial {
    pub coeffs: Vec<i64>,
}

impl HPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        HPolynomial { coeffs }
    }

    pub fn from_dims(dims: &[usize]) -> Self {
        Self::new(dims.iter().map(|&d| d as i64).collect())
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// `Σ h_i t^i`, e.g. `1 + 10t + 10t^2`.
    pub fn display(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            let mag = c.abs();
            let body = if mag == 1 && i > 0 { mono } else { format!("{mag}{mono}") };
            if out.is_empty() {
                out = if c < 0 { format!("-{body}") } else { body };
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn big_binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `Σ_{i<m} C(m-1,i) C(n-1,i) t^i`.
pub fn h_poly_segre(m: usize, n: usize) -> HPolynomial {
    let (m, n) = (m as i64, n as i64);
    HPolynomial::new((0..m.max(1)).map(|i| binom(m - 1, i) * binom(n - 1, i)).collect())
}

/// `h_i = Σ_{j≤i} (-1)^{i-j} C(n-1+jc, n-1) C(n, i-j)` for `i < n`.
pub fn h_poly_veronese(n: usize, c: usize) -> HPolynomial {
    let (n, c) = (n as i64, c as i64);
    let coeffs = (0..n.max(1))
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let s = if (i - j) % 2 == 0 { 1 } else { -1 };
                    s * binom(n - 1 + j * c, n - 1) * binom(n, i - j)
                })
                .sum()
        })
        .collect();
    HPolynomial::new(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionVerdict {
    NoObstruction,
    BrObstructed,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub h: Vec<i64>,
    pub codim: usize,
    /// Decimal strings, since the coefficients outgrow machine integers quickly.
    pub series_coefficients: Vec<String>,
    pub first_negative_index: Option<usize>,
    pub h_at_minus_one: i64,
    pub s: usize,
    pub g_at_minus_one: i64,
    pub complete_intersection: bool,
    pub verdict: ObstructionVerdict,
}

/// Expands `1 - h(-t)/(1-t)^codim` to `window` terms and factors `h = (1+t)^s g`.
pub fn br_obstruction(h: &HPolynomial, codim: usize, window: usize, complete_intersection: bool) -> ObstructionReport {
    let window = window.max(1);
    let mut series = Vec::with_capacity(window);
    for k in 0..window {
        let mut acc = if k == 0 { BigInt::one() } else { BigInt::zero() };
        for (i, &hi) in h.coeffs.iter().enumerate().take(k + 1) {
            // coefficient of t^{k-i} in (1-t)^{-codim}
            let tail = if codim == 0 {
                if k == i {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                big_binom((codim - 1 + k - i) as u64, (k - i) as u64)
            };
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc -= BigInt::from(hi * sign) * tail;
        }
        series.push(acc);
    }
    let first_negative_index = series.iter().position(|x| x.is_negative());

    let mut g = h.coeffs.clone();
    let mut s = 0;
    while g.len() > 1 && HPolynomial::new(g.clone()).eval(-1) == 0 {
        // synthetic division by (t + 1)
        let d = g.len() - 1;
        let mut q = vec![0i64; d];
        q[d - 1] = g[d];
        for i in (1..d).rev() {
            q[i - 1] = g[i] - q[i];
        }
        g = q;
        s += 1;
    }
    let g_at = HPolynomial::new(g).eval(-1);
    let obstructed = first_negative_index.is_some() || (!complete_intersection && g_at > 0);
    ObstructionReport {
        h: h.coeffs.clone(),
        codim,
        series_coefficients: series.iter().map(|x| x.to_string()).collect(),
        first_negative_index,
        h_at_minus_one: h.eval(-1),
        s,
        g_at_minus_one: g_at,
        complete_intersection,
        verdict: if obstructed { ObstructionVerdict::BrObstructed } else { ObstructionVerdict::NoObstruction },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segre_closed_form() {
        assert_eq!(h_poly_segre(3, 6).coeffs, vec![1, 10, 10]);
        assert_eq!(h_poly_segre(2, 3).coeffs, vec![1, 2]);
        assert_eq!(h_poly_segre(1, 5).coeffs, vec![1]);
        assert_eq!(h_poly_segre(4, 5).coeffs, vec![1, 12, 18, 4]);
    }

    #[test]
    fn veronese_closed_form() {
        assert_eq!(h_poly_veronese(7, 2).coeffs, vec![1, 21, 35, 7]);
        assert_eq!(h_poly_veronese(3, 2).coeffs, vec![1, 3]);
        assert_eq!(h_poly_veronese(4, 1).coeffs, vec![1]);
        assert_eq!(h_poly_veronese(5, 4).coeffs, vec![1, 65, 155, 35]);
    }

    #[test]
    fn obstruction_examples() {
        let ci = br_obstruction(&HPolynomial::new(vec![1, 1]), 1, 20, true);
        assert!(ci.series_coefficients.iter().all(|c| c == "0"));
        assert_eq!(ci.verdict, ObstructionVerdict::NoObstruction);
        let w = br_obstruction(&HPolynomial::new(vec![1, 20, 25, 2]), 20, 20, false);
        assert_eq!(w.h_at_minus_one, 4);
        assert_eq!(w.verdict, ObstructionVerdict::BrObstructed);
        let roos = br_obstruction(&HPolynomial::new(vec![1, 4, 4]), 4, 20, false);
        assert_eq!(roos.h_at_minus_one, 1);
        assert_eq!(roos.verdict, ObstructionVerdict::BrObstructed);
    }

    #[test]
    fn factor_out_one_plus_t() {
        // (1+t)^2 (1+3t) = 1 + 5t + 7t^2 + 3t^3
        let r = br_obstruction(&HPolynomial::new(vec![1, 5, 7, 3]), 3, 5, false);
        assert_eq!(r.s, 2);
        assert_eq!(r.g_at_minus_one, -2);
    }
}
