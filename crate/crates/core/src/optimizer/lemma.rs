use super::profile::PartProfile;
use crate::error::{Error, Result};

/// Default number of integer cases checked for the hypothesis.
pub const DEFAULT_R_CHECK: usize = 1000;

const SLACK: f64 = 1e-12;

/// Outcome of [`lemma_simplex_check`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LemmaCheck {
    Verified {
        lhs: f64,
        rhs: f64,
        holds: bool,
    },
    /// The hypothesis fails at this `r`, or in the `r -> ∞` limit when `r`
    /// is `None`.
    HypothesisViolated {
        r: Option<usize>,
    },
}

fn binom_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

/// Elementary symmetric polynomials `e_0..=e_s` of `values`.
fn elementary(values: impl Iterator<Item = f64>, s: usize) -> Vec<f64> {
    let mut e = vec![0.0; s + 1];
    e[0] = 1.0;
    for v in values {
        for j in (1..=s).rev() {
            e[j] += e[j - 1] * v;
        }
    }
    e
}

/// Checks `C(r-1, s)/r^{s+1} <= λ(r-1)/(2r) + μ` for `1 <= r <= r_check`
/// and `0 <= λ/2 + μ`, then evaluates
/// `Σ_i α_i² e_s(α without i)` against `λ Σ_{i<j} α_i α_j + μ`.
pub fn lemma_simplex_check(s: usize, lambda: f64, mu: f64, alpha: &PartProfile) -> Result<LemmaCheck> {
    lemma_simplex_check_with(s, lambda, mu, alpha, DEFAULT_R_CHECK)
}

pub fn lemma_simplex_check_with(
    s: usize,
    lambda: f64,
    mu: f64,
    alpha: &PartProfile,
    r_check: usize,
) -> Result<LemmaCheck> {
    if s == 0 {
        return Err(Error::domain("s must be at least 1"));
    }
    if !(lambda.is_finite() && mu.is_finite()) {
        return Err(Error::domain("λ and μ must be finite"));
    }
    for r in 1..=r_check {
        let rf = r as f64;
        let left = binom_f64(r - 1, s) / rf.powi(s as i32 + 1);
        let right = lambda * (rf - 1.0) / (2.0 * rf) + mu;
        if left > right + SLACK {
            return Ok(LemmaCheck::HypothesisViolated { r: Some(r) });
        }
    }
    if lambda / 2.0 + mu < -SLACK {
        return Ok(LemmaCheck::HypothesisViolated { r: None });
    }
    let a = alpha.fractions();
    let lhs: f64 = (0..a.len())
        .map(|i| {
            let others = a.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v);
            a[i] * a[i] * elementary(others, s)[s]
        })
        .sum();
    let pairs = (1.0 - a.iter().map(|v| v * v).sum::<f64>()) / 2.0;
    let rhs = lambda * pairs + mu;
    Ok(LemmaCheck::Verified {
        lhs,
        rhs,
        holds: lhs <= rhs + SLACK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::a_seq;

    #[test]
    fn balanced_reduces_to_hypothesis() {
        let (s, m) = (2, 5);
        let p = PartProfile::balanced(m);
        // λ = 0 and the smallest μ allowed by the hypothesis
        let mu = (1..=1000)
            .map(|r| binom_f64(r - 1, s) / (r as f64).powi(s as i32 + 1))
            .fold(0.0, f64::max);
        match lemma_simplex_check(s, 0.0, mu, &p).unwrap() {
            LemmaCheck::Verified { lhs, holds, .. } => {
                assert!((lhs - binom_f64(m - 1, s) / (m as f64).powi(s as i32 + 1)).abs() < 1e-15);
                assert!(holds);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn first_h4_segment() {
        // the segment through (0, 0) with slope A_4
        let t = 4usize;
        let fact: f64 = (1..=t).map(|i| i as f64).product();
        let lambda = 4.0 * a_seq(t, 4).unwrap() / fact;
        let mu = 0.0;
        let p = PartProfile::new(vec![0.5, 0.3, 0.2]).unwrap();
        match lemma_simplex_check(t - 2, lambda, mu, &p).unwrap() {
            LemmaCheck::Verified { lhs, rhs, holds } => {
                assert!(holds, "{lhs} > {rhs}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_part() {
        let p = PartProfile::new(vec![1.0]).unwrap();
        assert_eq!(
            lemma_simplex_check(1, 1.0, 0.0, &p).unwrap(),
            LemmaCheck::Verified {
                lhs: 0.0,
                rhs: 0.0,
                holds: true
            }
        );
    }

    #[test]
    fn violated_hypothesis_is_reported() {
        let p = PartProfile::balanced(3);
        assert_eq!(
            lemma_simplex_check(1, 0.0, 0.0, &p).unwrap(),
            LemmaCheck::HypothesisViolated { r: Some(2) }
        );
        assert!(lemma_simplex_check(0, 0.0, 0.0, &p).is_err());
    }
}
