//! Numeric singularity analysis of the exact generating functions:
//! polynomial roots, dominant singularity, growth constant and amplitude,
//! plus the geometric extrapolation of growth constants across levels.
//!
//! Root approximations come from an Aberth–Ehrlich sweep in `f64`; every
//! reported root is then polished by Newton steps in exact scaled-integer
//! arithmetic (values carried as `A / 10^w`) until its residual passes the
//! requested bound, so the precision of the output does not depend on
//! floating point. Certification of the residual bound is an exact
//! integer comparison.

use crate::series::{series_expand, IntPolynomial, RationalFunction};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticsError {
    #[error("cannot analyse a polynomial of degree < 1")]
    DegreeTooSmall,
    #[error("root polishing stalled: requested residual 1e-{requested}, achieved {achieved:.3e}")]
    NonConvergence { requested: u32, achieved: f64 },
    #[error("dominant root is not real and positive")]
    DominantNotReal,
    #[error("dominant root is not simple (multiplicity {0})")]
    DominantNotSimple(u32),
    #[error("dominant root is not unique: next modulus within {0:.3e}")]
    DominantNotUnique(f64),
    #[error("zero numerator: asymptotic form undefined")]
    ZeroFunction,
    #[error("extrapolation needs exactly four growth constants, got {0}")]
    NeedFourValues(usize),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}

/// One root, polished to a rational approximation whose residual is
/// certified against the exact polynomial.
#[derive(Clone, Debug)]
pub struct PolishedRoot {
    pub re: BigRational,
    pub im: BigRational,
    pub multiplicity: u32,
    /// Exactly computed |p(root)| / max|coeff|, as an f64.
    pub relative_residual: f64,
}

impl PolishedRoot {
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn approx(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn modulus(&self) -> f64 {
        self.approx().norm()
    }
}

/// All complex roots of a polynomial, ordered by `(modulus, argument)`,
/// with multiplicities summing to the degree.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<PolishedRoot>,
    pub precision: u32,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

// ---------------------------------------------------------------------
// exact helpers

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Fixed-point decimal rendering with `digits` places, rounded half away
/// from zero.
pub fn decimal_string(x: &BigRational, digits: u32) -> String {
    let neg = x.is_negative();
    let scaled = (x.abs() * BigRational::from_integer(pow10(digits)) + rat(1, 2)).floor();
    let s = scaled.to_integer().to_string();
    let s = if digits == 0 {
        s
    } else if s.len() <= digits as usize {
        format!("0.{:0>width$}", s, width = digits as usize)
    } else {
        let (int, frac) = s.split_at(s.len() - digits as usize);
        format!("{int}.{frac}")
    };
    if neg && !scaled.is_zero() {
        format!("-{s}")
    } else {
        s
    }
}

fn eval_rational_real(p: &IntPolynomial, x: &BigRational) -> BigRational {
    let mut v = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        v = v * x + BigRational::from_integer(c.clone());
    }
    v
}

/// Truncates a rational to denominator `10^digits` (nearest).
fn truncate_rational(x: &BigRational, digits: u32) -> BigRational {
    let scale = pow10(digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let nearest = if scaled.is_negative() {
        -((-&scaled) + rat(1, 2)).floor()
    } else {
        (scaled + rat(1, 2)).floor()
    };
    nearest / BigRational::from_integer(scale)
}

fn max_abs_coeff(p: &IntPolynomial) -> BigInt {
    p.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// `|n| / |d|` as f64, tolerating magnitudes far outside f64 range.
fn big_ratio_f64(n: &BigInt, d: &BigInt) -> f64 {
    if n.is_zero() {
        return 0.0;
    }
    let (n, d) = (n.abs(), d.abs());
    let sn = n.bits().saturating_sub(53);
    let sd = d.bits().saturating_sub(53);
    let fn_ = (&n >> sn).to_f64().unwrap_or(f64::INFINITY);
    let fd_ = (&d >> sd).to_f64().unwrap_or(f64::INFINITY);
    let e = sn as i64 - sd as i64;
    if e > 2000 {
        f64::INFINITY
    } else if e < -2000 {
        0.0
    } else {
        (fn_ / fd_) * 2f64.powi(e as i32)
    }
}

/// Nearest-integer division, `d > 0`.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    use num_integer::Integer;
    let (q, r) = n.div_rem(d);
    if &r.abs() * 2 >= *d {
        if n.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

// ---------------------------------------------------------------------
// scaled-integer polynomial evaluation: z = (a + i b) / 10^w

/// `p((a+ib)/s) * s^deg` with `spow[j] = s^j`.
fn eval_scaled_complex(
    p: &IntPolynomial,
    a: &BigInt,
    b: &BigInt,
    spow: &[BigInt],
) -> (BigInt, BigInt) {
    let deg = p.degree().expect("nonzero polynomial");
    let mut vre = p.coeff(deg);
    let mut vim = BigInt::zero();
    for k in (0..deg).rev() {
        let nre = &vre * a - &vim * b + p.coeff(k) * &spow[deg - k];
        let nim = vre * b + vim * a;
        vre = nre;
        vim = nim;
    }
    (vre, vim)
}

/// `p(a/s) * s^deg`: exact, sign-faithful.
fn eval_scaled_real(p: &IntPolynomial, a: &BigInt, spow: &[BigInt]) -> BigInt {
    let deg = p.degree().expect("nonzero polynomial");
    let mut v = p.coeff(deg);
    for k in (0..deg).rev() {
        v = v * a + p.coeff(k) * &spow[deg - k];
    }
    v
}

fn scale_powers(w: u32, deg: usize) -> Vec<BigInt> {
    let s = pow10(w);
    let mut out = Vec::with_capacity(deg + 1);
    out.push(BigInt::one());
    for _ in 0..deg {
        out.push(out.last().unwrap() * &s);
    }
    out
}

// ---------------------------------------------------------------------
// f64 stage

fn horner_c64(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut v = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        v = v * z + c;
    }
    v
}

/// Aberth–Ehrlich simultaneous iteration; deterministic initial guesses on
/// a circle sized by the geometric mean of the root moduli.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect();
    let radius = {
        let a0 = coeffs[0].abs().max(1e-300);
        let an = coeffs[n].abs().max(1e-300);
        (a0 / an).powf(1.0 / n as f64).clamp(1e-3, 1e3)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.7;
            // slight eccentricity breaks symmetric stalemates
            Complex64::from_polar(radius * (1.0 + 0.05 * (k as f64 % 3.0)), theta)
        })
        .collect();
    for _ in 0..600 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let zk = z[k];
            let p = horner_c64(coeffs, zk);
            let dp = horner_c64(&deriv, zk);
            if p.norm() == 0.0 {
                continue;
            }
            let w = if dp.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                p / dp
            };
            let mut s = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    let d = zk - zj;
                    if d.norm() > 1e-300 {
                        s += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let corr = if denom.norm() < 1e-300 { w } else { w / denom };
            z[k] = zk - corr;
            moved = moved.max(corr.norm() / (1.0 + z[k].norm()));
        }
        if moved < 1e-14 {
            break;
        }
    }
    z
}

// ---------------------------------------------------------------------
// square-free decomposition by repeated derivative gcds

/// Splits a polynomial into square-free factors with their multiplicities.
///
/// With `g_0 = p` and `g_{i+1} = gcd(g_i, g_i')`, the quotient
/// `w_i = g_i / g_{i+1}` collects each irreducible factor of multiplicity
/// at least `i+1` exactly once, so `w_i / w_{i+1}` is the square-free
/// product of the factors of multiplicity exactly `i+1`. All arithmetic
/// stays on primitive integer polynomials, where these divisions are
/// exact.
fn square_free_parts(p: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut g = p.primitive();
    let mut w: Vec<IntPolynomial> = Vec::new();
    while g.degree().unwrap_or(0) > 0 {
        let next = g.gcd(&g.derivative()).primitive();
        w.push(g.exact_div(&next).expect("gcd divides").primitive());
        g = next;
    }
    let mut parts = Vec::new();
    for i in 0..w.len() {
        let exact = if i + 1 < w.len() {
            w[i].exact_div(&w[i + 1])
                .expect("nested factor divides")
                .primitive()
        } else {
            w[i].clone()
        };
        if exact.degree().unwrap_or(0) > 0 {
            parts.push((exact, i as u32 + 1));
        }
    }
    parts
}

// ---------------------------------------------------------------------
// Newton polishing on scaled integers

const POLISH_EXTRA: u32 = 8;
const START_SCALE: u32 = 18;

/// One Newton step `z - p(z)/p'(z)` from scale `w` to scale `w2`.
fn newton_step_scaled(
    p: &IntPolynomial,
    dp: &IntPolynomial,
    a: &BigInt,
    b: &BigInt,
    w: u32,
    w2: u32,
) -> (BigInt, BigInt) {
    let deg = p.degree().unwrap();
    let spow = scale_powers(w, deg);
    let (pre, pim) = eval_scaled_complex(p, a, b, &spow);
    let (dre, dim) = eval_scaled_complex(dp, a, b, &spow);
    let n2 = &dre * &dre + &dim * &dim;
    if n2.is_zero() {
        let lift = pow10(w2 - w);
        return (a * &lift, b * &lift);
    }
    // p/p' = (pre + i pim) / (dre + i dim) / s, so the integer-scale
    // correction at the target scale s2 is num * (s2/s) / n2
    let num_re = &pre * &dre + &pim * &dim;
    let num_im = &pim * &dre - &pre * &dim;
    let lift = pow10(w2 - w);
    (
        a * &lift - div_round(&(&num_re * &lift), &n2),
        b * &lift - div_round(&(&num_im * &lift), &n2),
    )
}

/// Polishes an f64 root approximation to `digits` decimals by Newton
/// steps with a doubling scale; quadratic convergence makes three or four
/// steps enough from f64 accuracy.
fn polish_complex(
    p: &IntPolynomial,
    dp: &IntPolynomial,
    z0: Complex64,
    digits: u32,
) -> (BigRational, BigRational) {
    let target = 2 * digits + POLISH_EXTRA;
    let mut w = START_SCALE;
    let s0 = pow10(w).to_f64().unwrap();
    let mut a = BigInt::from((z0.re * s0).round() as i128);
    let mut b = BigInt::from((z0.im * s0).round() as i128);
    while w < target {
        let w2 = (2 * w).min(target);
        (a, b) = newton_step_scaled(p, dp, &a, &b, w, w2);
        w = w2;
    }
    // one settling step at full scale
    (a, b) = newton_step_scaled(p, dp, &a, &b, w, w);
    let s = BigRational::from_integer(pow10(w));
    (
        BigRational::from_integer(a) / &s,
        BigRational::from_integer(b) / &s,
    )
}

/// Certifies an f64 root as real by an exact sign change and refines it by
/// bracketed Newton on scaled integers. Returns `None` when no sign change
/// exists nearby (a complex pair hugging the axis).
fn refine_real(p: &IntPolynomial, x0: f64, digits: u32) -> Option<BigRational> {
    let deg = p.degree().unwrap();
    let w0 = START_SCALE;
    let spow = scale_powers(w0, deg);
    let center = BigInt::from((x0 * pow10(w0).to_f64().unwrap()).round() as i128);
    // sign-change bracket, widening from 1e-9
    let mut half_width = pow10(w0 - 9);
    let mut bracket = None;
    for _ in 0..9 {
        let lo = &center - &half_width;
        let hi = &center + &half_width;
        let flo = eval_scaled_real(p, &lo, &spow);
        let fhi = eval_scaled_real(p, &hi, &spow);
        if flo.is_zero() {
            return Some(BigRational::new(lo, pow10(w0)));
        }
        if fhi.is_zero() {
            return Some(BigRational::new(hi, pow10(w0)));
        }
        if flo.is_negative() != fhi.is_negative() {
            bracket = Some((lo, hi, flo.is_negative()));
            break;
        }
        half_width *= 10;
    }
    let (mut lo, mut hi, neg_left) = bracket?;
    // shrink by bisection to ~1e-12 so Newton starts well inside
    let dp = p.derivative();
    for _ in 0..12 {
        let mid = (&lo + &hi) / 2;
        let fm = eval_scaled_real(p, &mid, &spow);
        if fm.is_zero() {
            return Some(BigRational::new(mid, pow10(w0)));
        }
        if fm.is_negative() == neg_left {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let target = 2 * digits + POLISH_EXTRA;
    let mut w = w0;
    let mut a = (&lo + &hi) / 2;
    let zero = BigInt::zero();
    while w < target {
        let w2 = (2 * w).min(target);
        (a, _) = newton_step_scaled(p, &dp, &a, &zero, w, w2);
        w = w2;
    }
    (a, _) = newton_step_scaled(p, &dp, &a, &zero, w, w);
    Some(BigRational::new(a, pow10(w)))
}

/// Exact relative residual |p(z)| / max|coeff| as an f64.
fn relative_residual(p: &IntPolynomial, re: &BigRational, im: &BigRational) -> f64 {
    // bring (re, im) to a common power-of-ten denominator
    let w = 2 * 40 + POLISH_EXTRA;
    let s = pow10(w);
    let a = div_round(&(re.numer() * &s), re.denom());
    let b = div_round(&(im.numer() * &s), im.denom());
    let deg = p.degree().unwrap();
    let spow = scale_powers(w, deg);
    let (vre, vim) = eval_scaled_complex(p, &a, &b, &spow);
    let norm2 = &vre * &vre + &vim * &vim;
    let scale = max_abs_coeff(p) * &spow[deg];
    big_ratio_f64(&norm2, &(&scale * &scale)).sqrt()
}

/// All complex roots of `p` to roughly `precision` significant decimal
/// digits. Roots of multiplicity `k` are located on the square-free part,
/// so Newton polishing converges quadratically for every reported root;
/// each residual is certified with exact arithmetic against the bound
/// `|p(root)| < 10^(2-precision) * max|coeff|`.
pub fn find_roots(p: &IntPolynomial, precision: u32) -> Result<RootSet, AsymptoticsError> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(AsymptoticsError::DegreeTooSmall);
    }
    let mut roots: Vec<PolishedRoot> = Vec::new();
    // factor out roots at the origin
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(PolishedRoot {
            re: BigRational::zero(),
            im: BigRational::zero(),
            multiplicity: zeros as u32,
            relative_residual: 0.0,
        });
    }
    let shifted = IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    let mut worst = 0.0f64;
    for (factor, mult) in square_free_parts(&shifted) {
        let f64_coeffs: Vec<f64> = factor
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        let dfactor = factor.derivative();
        for z in aberth(&f64_coeffs) {
            let (re, im) = if z.im.abs() < 1e-7 * (1.0 + z.norm()) {
                match refine_real(&factor, z.re, precision) {
                    Some(r) => (r, BigRational::zero()),
                    None => polish_complex(&factor, &dfactor, z, precision),
                }
            } else {
                polish_complex(&factor, &dfactor, z, precision)
            };
            let residual = relative_residual(&factor, &re, &im);
            worst = worst.max(residual);
            roots.push(PolishedRoot {
                re,
                im,
                multiplicity: mult,
                relative_residual: residual,
            });
        }
    }
    let bound = 10f64.powi(2 - precision.min(300) as i32);
    if worst >= bound {
        return Err(AsymptoticsError::NonConvergence {
            requested: precision,
            achieved: worst,
        });
    }
    roots.sort_by(|a, b| {
        let (za, zb) = (a.approx(), b.approx());
        (za.norm(), za.arg())
            .partial_cmp(&(zb.norm(), zb.arg()))
            .unwrap()
    });
    Ok(RootSet { roots, precision })
}

/// The dominant singularity of a reduced rational function, certified
/// real, positive, simple, and strictly smaller in modulus than every
/// other denominator root.
#[derive(Clone, Debug)]
pub struct DominantSingularity {
    pub root: BigRational,
    pub next_modulus: f64,
    /// `next_modulus - root`: the certified modulus gap.
    pub margin: f64,
}

impl DominantSingularity {
    pub fn decimal(&self, digits: u32) -> String {
        decimal_string(&self.root, digits)
    }
}

pub fn dominant_singularity(
    f: &RationalFunction,
    precision: u32,
) -> Result<DominantSingularity, AsymptoticsError> {
    let set = find_roots(f.den(), precision.max(24))?;
    let dom = &set.roots[0];
    if !dom.is_real() || !dom.re.is_positive() {
        return Err(AsymptoticsError::DominantNotReal);
    }
    if dom.multiplicity != 1 {
        return Err(AsymptoticsError::DominantNotSimple(dom.multiplicity));
    }
    let next_modulus = match set.roots.get(1) {
        Some(r) => r.modulus(),
        None => f64::INFINITY,
    };
    let margin = next_modulus - dom.modulus();
    if margin <= 0.0 {
        return Err(AsymptoticsError::DominantNotUnique(margin));
    }
    // refine beyond the generic polish so downstream rational evaluation
    // at this point carries the full requested precision
    let root = refine_real(f.den(), dom.re.to_f64().unwrap(), precision + 6)
        .unwrap_or_else(|| dom.re.clone());
    Ok(DominantSingularity { root, next_modulus, margin })
}

/// `counts[n] ~ amplitude * growth^n`, from the simple dominant pole.
#[derive(Clone, Debug)]
pub struct AsymptoticForm {
    pub growth: f64,
    pub amplitude: f64,
    pub growth_exact: BigRational,
    pub amplitude_exact: BigRational,
    /// Order from which the form is within ~1e-3 relatively.
    pub valid_from: usize,
}

impl AsymptoticForm {
    pub fn growth_decimal(&self, digits: u32) -> String {
        decimal_string(&self.growth_exact, digits)
    }

    pub fn amplitude_decimal(&self, digits: u32) -> String {
        decimal_string(&self.amplitude_exact, digits)
    }
}

/// Growth constant `1/r` and amplitude `-num(r) / (r * den'(r))` at the
/// dominant simple pole `r`.
pub fn asymptotic_form(
    f: &RationalFunction,
    precision: u32,
) -> Result<AsymptoticForm, AsymptoticsError> {
    if f.num().is_zero() {
        return Err(AsymptoticsError::ZeroFunction);
    }
    let dom = dominant_singularity(f, precision)?;
    let r = &dom.root;
    let num_r = eval_rational_real(f.num(), r);
    let dden_r = eval_rational_real(&f.den().derivative(), r);
    let amplitude_exact = -num_r / (r * dden_r);
    let growth_exact = BigRational::one() / r.clone();
    let ratio = r.to_f64().unwrap() / dom.next_modulus;
    let valid_from = if ratio > 0.0 && ratio < 1.0 {
        (-3.0 / ratio.log10()).ceil().max(1.0) as usize
    } else {
        1
    };
    Ok(AsymptoticForm {
        growth: growth_exact.to_f64().unwrap_or(f64::NAN),
        amplitude: amplitude_exact.to_f64().unwrap_or(f64::NAN),
        growth_exact,
        amplitude_exact,
        valid_from,
    })
}

/// Relative error `|a_n / (amplitude * growth^n) - 1|`, with the exact
/// coefficient `a_n`.
pub fn asymptotic_check(f: &RationalFunction, n: usize) -> Result<f64, AsymptoticsError> {
    let form = asymptotic_form(f, 40)?;
    let a = series_expand(f, n)?;
    let r = BigRational::one() / &form.growth_exact;
    let an = BigRational::from_integer(a[n].clone());
    let mut rn = BigRational::one();
    for _ in 0..n {
        rn *= &r;
        rn = truncate_rational(&rn, 90);
    }
    let rel = (an * rn / &form.amplitude_exact - BigRational::one()).abs();
    Ok(rel.to_f64().unwrap_or(f64::NAN))
}

/// Geometric extrapolation of four growth constants (levels 0..3).
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthExtrapolation {
    /// First differences of the inputs rounded to three decimals.
    pub differences: [f64; 3],
    /// Simple fraction nearest to `d3/d2`, when the differences are usable.
    pub snapped_ratio: Option<(u32, u32)>,
    /// Third input (rounded) plus the geometric tail `d3 / (1 - ratio)`,
    /// all on three-decimal arithmetic.
    pub estimate: f64,
    /// The same tail sum on raw differences with the measured ratio.
    pub measured_estimate: f64,
}

const SNAP_CANDIDATES: [(u32, u32); 5] = [(1, 3), (2, 5), (1, 2), (3, 5), (2, 3)];

/// Rounds the four constants to three decimals, takes first differences,
/// snaps `d3/d2` to the nearest simple fraction and adds the implied
/// geometric tail to the third constant. A constant tail (zero
/// differences) extrapolates to itself.
pub fn extrapolate_growth(constants: &[f64]) -> Result<GrowthExtrapolation, AsymptoticsError> {
    if constants.len() != 4 {
        return Err(AsymptoticsError::NeedFourValues(constants.len()));
    }
    let r3 = |x: f64| (x * 1000.0).round() / 1000.0;
    let c: Vec<f64> = constants.iter().map(|&x| r3(x)).collect();
    let d = [r3(c[1] - c[0]), r3(c[2] - c[1]), r3(c[3] - c[2])];

    let raw_d2 = constants[2] - constants[1];
    let raw_d3 = constants[3] - constants[2];
    let measured_estimate = if raw_d2 != 0.0 && raw_d3 != raw_d2 {
        constants[2] + raw_d3 / (1.0 - raw_d3 / raw_d2)
    } else {
        constants[3]
    };

    if d[1] == 0.0 || d[2] == 0.0 {
        return Ok(GrowthExtrapolation {
            differences: d,
            snapped_ratio: None,
            estimate: c[3],
            measured_estimate,
        });
    }
    let ratio = d[2] / d[1];
    let (p, q) = SNAP_CANDIDATES
        .into_iter()
        .min_by(|a, b| {
            let da = (a.0 as f64 / a.1 as f64 - ratio).abs();
            let db = (b.0 as f64 / b.1 as f64 - ratio).abs();
            da.partial_cmp(&db).unwrap()
        })
        .unwrap();
    let tail = d[2] / (1.0 - p as f64 / q as f64);
    Ok(GrowthExtrapolation {
        differences: d,
        snapped_ratio: Some((p, q)),
        estimate: c[2] + tail,
        measured_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::blocks_gf;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn simple_roots() {
        // 1 - 2q: root 0.5
        let rs = find_roots(&p(&[1, -2]), 30).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].re, rat(1, 2));

        // (1-q)^2: double root at 1
        let rs = find_roots(&p(&[1, -2, 1]), 30).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].multiplicity, 2);
        assert!((rs.roots[0].approx().re - 1.0).abs() < 1e-12);

        // q^2 (1 - q): zero root with multiplicity 2
        let rs = find_roots(&p(&[0, 0, 1, -1]), 30).unwrap();
        assert_eq!(rs.total_multiplicity(), 3);
        assert_eq!(rs.roots[0].multiplicity, 2);
        assert!(rs.roots[0].re.is_zero());
    }

    #[test]
    fn residuals_meet_bound() {
        let den = blocks_gf(3).unwrap().den().clone();
        let rs = find_roots(&den, 30).unwrap();
        assert_eq!(rs.total_multiplicity(), 56);
        for r in &rs.roots {
            assert!(r.relative_residual < 1e-28, "{:?}", r.approx());
        }
    }

    #[test]
    fn multiplicative_smoke() {
        // roots of den * (1 - 2q) = union of root sets
        let den = blocks_gf(1).unwrap().den().clone();
        let prod = &den * &p(&[1, -2]);
        let rs = find_roots(&prod, 30).unwrap();
        assert_eq!(rs.total_multiplicity(), 7);
        assert!(rs
            .roots
            .iter()
            .any(|r| r.is_real() && (r.approx().re - 0.5).abs() < 1e-12));
    }

    #[test]
    fn level1_root_list() {
        let rs = find_roots(blocks_gf(1).unwrap().den(), 30).unwrap();
        let want = [
            (0.233117, 0.0),
            (0.449922, -0.087757),
            (0.449922, 0.087757),
            (0.988454, -1.537589),
            (0.988454, 1.537589),
            (-6.109867, 0.0),
        ];
        assert_eq!(rs.roots.len(), 6);
        for (re, im) in want {
            assert!(
                rs.roots
                    .iter()
                    .any(|r| (r.approx().re - re).abs() < 1e-6
                        && (r.approx().im - im).abs() < 1e-6),
                "missing root {re}+{im}i"
            );
        }
        // ordering is by modulus: the positive real one comes first
        assert!((rs.roots[0].approx().re - 0.233117).abs() < 1e-6);
    }

    #[test]
    fn dominant_and_form_level1() {
        let f = blocks_gf(1).unwrap();
        let dom = dominant_singularity(&f, 30).unwrap();
        assert_eq!(&dom.decimal(6), "0.233117");
        assert!((dom.next_modulus - 0.458400).abs() < 1e-4);
        assert!(dom.margin > 0.2);

        let form = asymptotic_form(&f, 30).unwrap();
        assert!((form.growth - 4.289698).abs() < 1e-6);
        assert!((form.amplitude - 0.126651).abs() < 1e-6);
        assert_eq!(form.growth_decimal(6), "4.289698");
    }

    #[test]
    fn form_rejects_zero_and_multiple() {
        let zero = RationalFunction::from_i64(&[], &[1, -2]);
        assert_eq!(
            asymptotic_form(&zero, 20).err(),
            Some(AsymptoticsError::ZeroFunction)
        );
        // double pole on the positive axis must fail loudly
        let f = RationalFunction::from_i64(&[0, 1], &[1, -2, 1]);
        assert!(matches!(
            dominant_singularity(&f, 20),
            Err(AsymptoticsError::DominantNotSimple(2))
        ));
    }

    #[test]
    fn check_small_order() {
        let f = blocks_gf(1).unwrap();
        // a12 sits within 2% of the asymptotic form
        let err = asymptotic_check(&f, 12).unwrap();
        assert!(err < 0.02, "{err}");
    }

    #[test]
    fn extrapolation_paths() {
        let blocks = [3.863131, 4.289698, 4.462811, 4.538766];
        let e = extrapolate_growth(&blocks).unwrap();
        assert_eq!(e.snapped_ratio, Some((2, 5)));
        assert!((e.estimate - 4.590).abs() < 5e-4, "{}", e.estimate);
        assert_eq!(e.differences, [0.427, 0.173, 0.076]);

        let cheesy = [3.863131, 4.114908, 4.231836, 4.288631];
        let e = extrapolate_growth(&cheesy).unwrap();
        assert_eq!(e.snapped_ratio, Some((1, 2)));
        assert!((e.estimate - 4.346).abs() < 5e-4, "{}", e.estimate);

        let flat = [4.0, 4.0, 4.0, 4.0];
        let e = extrapolate_growth(&flat).unwrap();
        assert_eq!(e.estimate, 4.0);
        assert_eq!(e.snapped_ratio, None);

        assert!(matches!(
            extrapolate_growth(&[1.0, 2.0]),
            Err(AsymptoticsError::NeedFourValues(2))
        ));
    }

    #[test]
    fn tail_error_decays_geometrically() {
        // e_n = |a_n r^n - amplitude| carries an oscillation from the
        // complex subdominant pair, so raw consecutive ratios spike near
        // its zero crossings; the suffix maximum is the honest envelope.
        // The modulus ratio is ~0.5085, so eight steps shrink the envelope
        // well below 0.6^5.
        let f = blocks_gf(1).unwrap();
        let form = asymptotic_form(&f, 40).unwrap();
        let a = crate::series::series_expand(&f, 61).unwrap();
        let r = BigRational::one() / &form.growth_exact;
        let mut e: Vec<BigRational> = Vec::new();
        let mut rn = BigRational::one();
        for (n, an) in a.iter().enumerate() {
            if n >= 1 {
                rn *= &r;
                rn = truncate_rational(&rn, 120);
            }
            if n >= 20 {
                let val = BigRational::from_integer(an.clone()) * &rn - &form.amplitude_exact;
                e.push(val.abs());
            }
        }
        let mut suffix_max = e.clone();
        for i in (0..suffix_max.len() - 1).rev() {
            if suffix_max[i] < suffix_max[i + 1] {
                suffix_max[i] = suffix_max[i + 1].clone();
            }
        }
        let factor = rat(7776, 100_000); // 0.6^5
        for i in 0..suffix_max.len() - 8 {
            assert!(
                suffix_max[i + 8] <= &suffix_max[i] * &factor,
                "envelope stalled at n={}",
                20 + i
            );
        }
        // absolute envelope anchored at n = 20
        let base = rat(7, 10);
        let mut bound = e[0].clone();
        for (k, en) in e.iter().enumerate().skip(1) {
            bound *= &base;
            assert!(en <= &bound, "n={} above 0.7^k envelope", 20 + k);
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 3), "0.500");
        assert_eq!(decimal_string(&rat(-1, 3), 6), "-0.333333");
        assert_eq!(decimal_string(&rat(4589667, 1000000), 3), "4.590");
        assert_eq!(decimal_string(&rat(7, 1), 2), "7.00");
    }
}
