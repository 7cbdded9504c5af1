//! Closed-form boundary curves and the exact rational values behind them.
//!
//! Float evaluators return `Result<f64>` and reject arguments outside their
//! stated domain. Where a curve takes a rational value at a knot, an
//! `*_exact` companion returns it as a [`BigRational`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Where a sampled curve value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveSource {
    ClosedForm,
    Optimized,
    Empirical,
    ConstructionLimit,
}

impl fmt::Display for CurveSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveSource::ClosedForm => "closed_form",
            CurveSource::Optimized => "optimized",
            CurveSource::Empirical => "empirical",
            CurveSource::ConstructionLimit => "construction_limit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CurveSample {
    pub x: f64,
    pub y: f64,
    pub source: CurveSource,
}

/// A sampled curve `x -> y`, samples sorted by `x`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BoundaryCurve {
    pub name: String,
    pub samples: Vec<CurveSample>,
}

impl BoundaryCurve {
    /// `x,y,source` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,source\n");
        for s in &self.samples {
            out.push_str(&format!("{},{},{}\n", s.x, s.y, s.source));
        }
        out
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("x = {x} outside [0, 1]")))
    }
}

fn check_range(x: f64, lo: f64, hi: f64, what: &str) -> Result<()> {
    if x >= lo - 1e-12 && x <= hi + 1e-12 {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} needs x in [{lo}, {hi}], got {x}")))
    }
}

/// The index `k` with `x` in `((k-2)/(k-1), (k-1)/k]`; `1` for `x = 0`.
///
/// Computed as `ceil(1/(1-x))` with a small downward nudge so that
/// critical densities such as `0.8` land in their closed cell despite
/// rounding in `1/(1-x)`. Requires `x < 1`.
pub fn density_cell(x: f64) -> usize {
    debug_assert!((0.0..1.0).contains(&x));
    (1.0 / (1.0 - x) - 1e-9).ceil().max(1.0) as usize
}

/// Falling factorial `(a)_b = a(a-1)...(a-b+1)` in floating point.
pub fn falling(a: f64, b: usize) -> f64 {
    (0..b).map(|i| a - i as f64).product()
}

fn falling_big(a: i64, b: usize) -> BigInt {
    (0..b as i64).map(|i| BigInt::from(a - i)).product()
}

fn binom_u(n: usize, k: usize) -> u64 {
    crate::graph::binomial(n as u64, k as u64).expect("small binomial") as u64
}

/// Upper clique-density curve `x^{r/2}`.
pub fn kk_upper(r: usize, x: f64) -> Result<f64> {
    if r < 2 {
        return Err(Error::domain("kk_upper needs r >= 2"));
    }
    check_unit(x)?;
    Ok(x.powf(r as f64 / 2.0))
}

/// Minimum asymptotic `K_r` density at edge density `x`.
pub fn g_r(r: usize, x: f64) -> Result<f64> {
    if r < 2 {
        return Err(Error::domain("g_r needs r >= 2"));
    }
    check_unit(x)?;
    if x <= (r as f64 - 2.0) / (r as f64 - 1.0) {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    let k = density_cell(x).max(r);
    let kf = k as f64;
    let root = (1.0 - kf / (kf - 1.0) * x).max(0.0).sqrt();
    let rf = r as f64;
    let v = falling(kf, r) / kf.powi(r as i32) * (1.0 + root).powi(r as i32 - 1) * (1.0 - (rf - 1.0) * root);
    Ok(v.max(0.0))
}

/// `g_r(1 - 1/k) = (k)_r / k^r` for `k >= 1`.
pub fn g_r_knot_exact(r: usize, k: usize) -> BigRational {
    BigRational::new(falling_big(k as i64, r), BigInt::from(k).pow(r as u32))
}

/// Lower and upper boundary `(i, I)` of the region for `K_3 + co-K_3`.
pub fn goodman_olpp(x: f64) -> Result<(f64, f64)> {
    check_unit(x)?;
    let lower = 1.0 - 3.0 * x + 3.0 * x * x;
    let y = 1.0 - x;
    let upper = 1.0 - 3.0 * (x - x.powf(1.5)).min(y - y.powf(1.5));
    Ok((lower, upper))
}

/// `1 - 3x + 3x^2` at a rational `x`.
pub fn goodman_lower_exact(x: &BigRational) -> BigRational {
    let three = BigRational::from_integer(3.into());
    BigRational::one() - &three * x + three * x * x
}

/// Upper boundary for `K_3^-`: `(3/2)(x - g_3(x))`.
pub fn k3minus_upper(x: f64) -> Result<f64> {
    Ok(1.5 * (x - g_r(3, x)?))
}

/// `k3minus_upper(1 - 1/k)` for `k >= 1`.
pub fn k3minus_knot_exact(k: usize) -> BigRational {
    let x = BigRational::new((k as i64 - 1).into(), (k as i64).into());
    BigRational::new(3.into(), 2.into()) * (x - g_r_knot_exact(3, k))
}

fn check_t(t: usize) -> Result<()> {
    if t < 4 {
        Err(Error::domain(format!("t must be at least 4, got {t}")))
    } else {
        Ok(())
    }
}

/// Index of the largest `A_r`, which is also the first knot of `h_t`.
pub fn k_of_t(t: usize) -> Result<usize> {
    check_t(t)?;
    let t = t as i64;
    if matches!(t, 5 | 8 | 11 | 14 | 17 | 20) {
        Ok(((t - 2) * (3 * t + 1) / 6) as usize)
    } else {
        Ok(div_ceil((t + 1) * (3 * t - 8), 6) as usize)
    }
}

/// Number of parts of the balanced multipartite maximiser for `K_t^-`.
pub fn q_of_t(t: usize) -> Result<usize> {
    check_t(t)?;
    let t = t as i64;
    Ok(div_ceil((t - 2) * (3 * t + 1), 6) as usize)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// `A_r = C(t,2) (r-2)_{t-3} / r^{t-2}`, exactly. Needs `r >= 2`.
pub fn a_seq_exact(t: usize, r: usize) -> Result<BigRational> {
    check_t(t)?;
    if r < 2 {
        return Err(Error::domain(format!("A_r needs r >= 2, got {r}")));
    }
    Ok(BigRational::new(
        BigInt::from(binom_u(t, 2)) * falling_big(r as i64 - 2, t - 3),
        BigInt::from(r).pow(t as u32 - 2),
    ))
}

/// `B_r = C(t,2) (r-1)_{t-2} / r^{t-1}`, exactly. Needs `r >= t - 2`.
pub fn b_seq_exact(t: usize, r: usize) -> Result<BigRational> {
    check_t(t)?;
    if r < t - 2 {
        return Err(Error::domain(format!("B_r needs r >= t - 2 = {}, got {r}", t - 2)));
    }
    Ok(BigRational::new(
        BigInt::from(binom_u(t, 2)) * falling_big(r as i64 - 1, t - 2),
        BigInt::from(r).pow(t as u32 - 1),
    ))
}

pub fn a_seq(t: usize, r: usize) -> Result<f64> {
    check_t(t)?;
    if r < 2 {
        return Err(Error::domain(format!("A_r needs r >= 2, got {r}")));
    }
    let rf = r as f64;
    Ok(binom_u(t, 2) as f64 * falling(rf - 2.0, t - 3) / rf.powi(t as i32 - 2))
}

pub fn b_seq(t: usize, r: usize) -> Result<f64> {
    check_t(t)?;
    if r < t - 2 {
        return Err(Error::domain(format!("B_r needs r >= t - 2 = {}, got {r}", t - 2)));
    }
    let rf = r as f64;
    Ok(binom_u(t, 2) as f64 * falling(rf - 1.0, t - 2) / rf.powi(t as i32 - 1))
}

/// Inducibility of `K_t^-`, i.e. `B_{q(t)}`.
pub fn ind_kt_minus(t: usize) -> Result<BigRational> {
    b_seq_exact(t, q_of_t(t)?)
}

/// Default last knot index of `h_t`.
pub fn h_t_default_r_max(t: usize) -> Result<usize> {
    Ok(10 * k_of_t(t)?)
}

/// Knots of `h_t`: `(0, 0)`, `(1 - 1/r, B_r)` for `k(t) <= r <= r_max`, and
/// the terminal `(1, 0)`.
pub fn h_t_knots(t: usize, r_max: usize) -> Result<Vec<(f64, f64)>> {
    let k = k_of_t(t)?;
    if r_max < k {
        return Err(Error::domain(format!("r_max = {r_max} below k(t) = {k}")));
    }
    let mut knots = Vec::with_capacity(r_max - k + 3);
    knots.push((0.0, 0.0));
    for r in k..=r_max {
        knots.push((1.0 - 1.0 / r as f64, b_seq(t, r)?));
    }
    knots.push((1.0, 0.0));
    Ok(knots)
}

/// Piecewise-linear upper bound for `K_t^-` with the default `r_max`.
pub fn h_t_curve(t: usize, x: f64) -> Result<f64> {
    h_t_curve_with(t, x, h_t_default_r_max(t)?)
}

pub fn h_t_curve_with(t: usize, x: f64, r_max: usize) -> Result<f64> {
    check_unit(x)?;
    Ok(interpolate(&h_t_knots(t, r_max)?, x))
}

/// Linear interpolation through knots sorted by `x`; clamps outside.
pub fn interpolate(knots: &[(f64, f64)], x: f64) -> f64 {
    let i = knots.partition_point(|&(kx, _)| kx < x);
    if i == 0 {
        return knots[0].1;
    }
    if i == knots.len() {
        return knots[i - 1].1;
    }
    let (x0, y0) = knots[i - 1];
    let (x1, y1) = knots[i];
    if x1 == x {
        return y1;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

/// Small-density upper bound `3x^2/2` for `K_4^-` on `[0, 1/2]`.
pub fn k4minus_small_upper(x: f64) -> Result<f64> {
    check_range(x, 0.0, 0.5, "k4minus_small_upper")?;
    Ok(1.5 * x * x)
}

/// Star curve `s_t` on `[0, 1/2]`, traced by complete bipartite graphs.
pub fn s_t_curve(t: usize, x: f64) -> Result<f64> {
    if t == 0 {
        return Err(Error::domain("s_t needs t >= 1"));
    }
    check_range(x, 0.0, 0.5, "s_t")?;
    if t == 1 {
        return Ok(x);
    }
    let root = (1.0 - 2.0 * x).max(0.0).sqrt();
    let e = t as i32 - 1;
    Ok((t as f64 + 1.0) / 2f64.powi(t as i32) * x * ((1.0 - root).powi(e) + (1.0 + root).powi(e)))
}

/// Maximiser of `s_t` on `[0, 1/2]`.
pub fn x_star(t: usize) -> Result<f64> {
    if t == 0 {
        return Err(Error::domain("x_star needs t >= 1"));
    }
    if t <= 3 {
        return Ok(0.5);
    }
    let ti = t as i32;
    let tf = t as f64;
    let h = |y: f64| 1.0 - tf * y + tf * y.powi(ti - 1) - y.powi(ti);
    let (mut lo, mut hi) = (1.0 / tf, 1.0 / (tf - 1.0));
    let lo_sign = h(lo) > 0.0;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if (h(mid) > 0.0) == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y = 0.5 * (lo + hi);
    Ok(2.0 * y / ((1.0 + y) * (1.0 + y)))
}

/// Value of the `K_{s,t}` upper bound and whether it is only an upper bound
/// (not the closed form of the extremal curve).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct KstBound {
    pub value: f64,
    pub upper_bound_only: bool,
}

/// `1/(2^{s-1}(t-s+2)) C(s+t, s) x^{s-1} s_{t-s+1}(x)`, with the star
/// factor frozen at its maximum `s_{t-s+1}(x*)` once `x > x*(t-s+1)`.
pub fn kst_upper(s: usize, t: usize, x: f64) -> Result<KstBound> {
    if s < 2 || t < s {
        return Err(Error::domain(format!("kst_upper needs 2 <= s <= t, got s={s}, t={t}")));
    }
    check_unit(x)?;
    let u = t - s + 1;
    let xs = x_star(u)?;
    let upper_bound_only = x > xs;
    let star = s_t_curve(u, x.min(xs))?;
    let coef = binom_u(s + t, s) as f64 / (2f64.powi(s as i32 - 1) * (t - s + 2) as f64);
    Ok(KstBound {
        value: coef * x.powi(s as i32 - 1) * star,
        upper_bound_only,
    })
}

/// Upper bound `3x(1-x)^2` for `C_4` on `[1/2, 1]`.
pub fn c4_upper_large(x: f64) -> Result<f64> {
    check_range(x, 0.5, 1.0, "c4_upper_large")?;
    Ok(3.0 * x * (1.0 - x) * (1.0 - x))
}

/// `c4_upper_large(1 - 1/k) = 3(k-1)/k^3`.
pub fn c4_knot_exact(k: usize) -> BigRational {
    BigRational::new((3 * (k as i64 - 1)).into(), BigInt::from(k).pow(3))
}

/// Finite bound `x(1-x)^2 n^4/8 + 2n^3` on `N(C_4, G)`, with `x = 2e/n^2`.
pub fn c4_finite_bound(n: usize, e: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("c4_finite_bound needs n >= 1"));
    }
    if e > n * (n - 1) / 2 {
        return Err(Error::domain(format!("{e} edges exceed C({n}, 2)")));
    }
    let nf = n as f64;
    let x = 2.0 * e as f64 / (nf * nf);
    Ok(x * (1.0 - x) * (1.0 - x) * nf.powi(4) / 8.0 + 2.0 * nf.powi(3))
}

/// Left end of the interval where the `S_3` lower bound is stated.
pub fn s3_tail_start() -> f64 {
    4.0 * 2f64.sqrt() - 5.0
}

/// Lower bound `4(1 - √(1-x))(1-x)^{3/2}` for `S_3` near `x = 1`.
pub fn s3_lower_tail(x: f64) -> Result<f64> {
    check_range(x, s3_tail_start(), 1.0, "s3_lower_tail")?;
    let y = (1.0 - x).max(0.0);
    Ok(4.0 * (1.0 - y.sqrt()) * y.powf(1.5))
}

/// Curves addressable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedCurve {
    /// `x^{r/2}`
    Kk(usize),
    G(usize),
    GoodmanLower,
    GoodmanUpper,
    K3Minus,
    H(usize),
    K4MinusSmall,
    S(usize),
    Kst(usize, usize),
    C4Large,
    S3Tail,
}

impl FromStr for NamedCurve {
    type Err = Error;

    /// Accepts `kk3`, `g3`, `goodman-lower`, `goodman-upper`, `k3minus`,
    /// `h4`, `k4minus-small`, `s3`, `kst2-3`, `c4-large`, `s3-tail`; a dash
    /// between the letters and the first number is optional.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let fixed = match lower.as_str() {
            "goodman-lower" => Some(NamedCurve::GoodmanLower),
            "goodman-upper" => Some(NamedCurve::GoodmanUpper),
            "k3minus" | "k3-" => Some(NamedCurve::K3Minus),
            "k4minus-small" => Some(NamedCurve::K4MinusSmall),
            "c4-large" | "c4" => Some(NamedCurve::C4Large),
            "s3-tail" => Some(NamedCurve::S3Tail),
            _ => None,
        };
        if let Some(c) = fixed {
            return Ok(c);
        }
        let bad = || Error::parse(format!("unknown curve {s:?}"));
        let split = lower.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (head, tail) = lower.split_at(split);
        let head = head.trim_end_matches('-');
        let nums: Vec<usize> = tail
            .split(['-', ','])
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, nums.as_slice()) {
            ("kk", [r]) if *r >= 2 => Ok(NamedCurve::Kk(*r)),
            ("g", [r]) if *r >= 2 => Ok(NamedCurve::G(*r)),
            ("h", [t]) if *t >= 4 => Ok(NamedCurve::H(*t)),
            ("s", [t]) if *t >= 1 => Ok(NamedCurve::S(*t)),
            ("kst", [s, t]) if *s >= 2 && t >= s => Ok(NamedCurve::Kst(*s, *t)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for NamedCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCurve::Kk(r) => write!(f, "kk{r}"),
            NamedCurve::G(r) => write!(f, "g{r}"),
            NamedCurve::GoodmanLower => write!(f, "goodman-lower"),
            NamedCurve::GoodmanUpper => write!(f, "goodman-upper"),
            NamedCurve::K3Minus => write!(f, "k3minus"),
            NamedCurve::H(t) => write!(f, "h{t}"),
            NamedCurve::K4MinusSmall => write!(f, "k4minus-small"),
            NamedCurve::S(t) => write!(f, "s{t}"),
            NamedCurve::Kst(s, t) => write!(f, "kst{s}-{t}"),
            NamedCurve::C4Large => write!(f, "c4-large"),
            NamedCurve::S3Tail => write!(f, "s3-tail"),
        }
    }
}

impl NamedCurve {
    /// Closed interval the curve is defined on.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            NamedCurve::K4MinusSmall | NamedCurve::S(_) => (0.0, 0.5),
            NamedCurve::C4Large => (0.5, 1.0),
            NamedCurve::S3Tail => (s3_tail_start(), 1.0),
            _ => (0.0, 1.0),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match *self {
            NamedCurve::Kk(r) => kk_upper(r, x),
            NamedCurve::G(r) => g_r(r, x),
            NamedCurve::GoodmanLower => goodman_olpp(x).map(|p| p.0),
            NamedCurve::GoodmanUpper => goodman_olpp(x).map(|p| p.1),
            NamedCurve::K3Minus => k3minus_upper(x),
            NamedCurve::H(t) => h_t_curve(t, x),
            NamedCurve::K4MinusSmall => k4minus_small_upper(x),
            NamedCurve::S(t) => s_t_curve(t, x),
            NamedCurve::Kst(s, t) => kst_upper(s, t, x).map(|b| b.value),
            NamedCurve::C4Large => c4_upper_large(x),
            NamedCurve::S3Tail => s3_lower_tail(x),
        }
    }

    /// `grid` equally spaced samples over the curve's domain, endpoints
    /// included.
    pub fn sample(&self, grid: usize) -> Result<BoundaryCurve> {
        if grid < 2 {
            return Err(Error::domain("grid needs at least 2 points"));
        }
        let (a, b) = self.domain();
        let samples = (0..grid)
            .map(|i| {
                let x = if i + 1 == grid {
                    b
                } else {
                    a + (b - a) * i as f64 / (grid - 1) as f64
                };
                Ok(CurveSample {
                    x,
                    y: self.eval(x)?,
                    source: CurveSource::ClosedForm,
                })
            })
            .collect::<Result<_>>()?;
        Ok(BoundaryCurve {
            name: self.to_string(),
            samples,
        })
    }
}

/// Nearest `f64` to an exact value.
pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
