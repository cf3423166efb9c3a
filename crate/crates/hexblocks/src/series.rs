//! Exact integer polynomials, reduced rational functions, series
//! expansion, and fraction-free linear solving over the rational-function
//! field. Everything here is exact; no floating point.

mod closed_forms;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("unknown level {0}; closed forms exist for levels 1, 2 and 3")]
    UnknownLevel(u32),
    #[error("matrix is singular over the rational-function field")]
    SingularMatrix,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("series expansion requires a denominator with constant term 1, got {0}")]
    BadConstantTerm(BigInt),
}

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
/// Trailing zero coefficients are stripped; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPolynomial::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Exact division; errors if `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &IntPolynomial) -> Result<IntPolynomial, SeriesError> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), d.degree().unwrap());
        if dn < dd {
            return Err(SeriesError::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        let lead = d.leading();
        for k in (0..=dn - dd).rev() {
            let (qk, r) = rem[k + dd].div_rem(&lead);
            if !r.is_zero() {
                return Err(SeriesError::InexactDivision);
            }
            if !qk.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &qk * dc;
                }
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::InexactDivision);
        }
        Ok(IntPolynomial::new(quot))
    }

    /// Pseudo-remainder of `self` by `d`: `lead(d)^k * self mod d` over the
    /// integers.
    fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().unwrap();
        let lead = d.leading();
        let mut rem = self.clone();
        while let Some(rn) = rem.degree() {
            if rn < dd {
                break;
            }
            let shift = rn - dd;
            let rl = rem.leading();
            let mut next = vec![BigInt::zero(); rn];
            for (i, c) in rem.coeffs.iter().enumerate().take(rn) {
                next[i] = c * &lead;
            }
            for (i, c) in d.coeffs.iter().enumerate().take(dd) {
                next[shift + i] -= c * &rl;
            }
            rem = IntPolynomial::new(next);
        }
        rem
    }

    /// Polynomial gcd over the integers: primitive part by a primitive
    /// pseudo-remainder sequence times the gcd of the contents, with a
    /// positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.primitive() * &IntPolynomial::new(vec![other.content()]);
        }
        if other.is_zero() {
            return self.primitive() * &IntPolynomial::new(vec![self.content()]);
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        IntPolynomial::new(a.coeffs.iter().map(|c| c * &content).collect())
    }

    /// Exact value at a rational point, as a (numerator, denominator) pair
    /// over `den^deg`.
    pub fn eval_rational(
        &self,
        num: &BigInt,
        den: &BigInt,
    ) -> (BigInt, BigInt) {
        // Horner on p(n/d) * d^deg
        if self.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        let deg = self.degree().unwrap();
        let mut acc = self.coeffs[deg].clone();
        for k in (0..deg).rev() {
            acc = acc * num + &self.coeffs[k] * den.pow((deg - k) as u32);
        }
        (acc, den.pow(deg as u32))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if k > 0 {
                write!(f, "*q^{k}")?;
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|k| self.coeff(k) + rhs.coeff(k))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|k| self.coeff(k) - rhs.coeff(k))
                .collect(),
        )
    }
}

impl Mul<&IntPolynomial> for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        (&self).mul(rhs)
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A reduced ratio of integer polynomials. After construction
/// `gcd(num, den)` is constant and the denominator is sign-normalized so
/// that its lowest nonzero coefficient is positive; every generating
/// function handled here then has `den(0) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RationalFunction { num, den };
        f.reduce();
        f
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Self {
        RationalFunction::new(IntPolynomial::from_i64(num), IntPolynomial::from_i64(den))
    }

    pub fn zero() -> Self {
        RationalFunction::new(IntPolynomial::zero(), IntPolynomial::one())
    }

    pub fn one() -> Self {
        RationalFunction::new(IntPolynomial::one(), IntPolynomial::one())
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IntPolynomial::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) || !g.leading().is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides");
            self.den = self.den.exact_div(&g).expect("gcd divides");
        }
        let lowest = self
            .den
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator");
        if lowest.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn add(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction::new(-&self.num, self.den.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Taylor coefficients `a_0..a_n` of `f`, by the linear recurrence
/// `den * A = num`. The reduced denominator must have constant term 1.
pub fn series_expand(f: &RationalFunction, n: usize) -> Result<Vec<BigInt>, SeriesError> {
    let d0 = f.den.coeff(0);
    if !d0.is_one() {
        return Err(SeriesError::BadConstantTerm(d0));
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut s = f.num.coeff(k);
        for i in 1..=k.min(f.den.degree().unwrap_or(0)) {
            s -= f.den.coeff(i) * &a[k - i];
        }
        a.push(s);
    }
    Ok(a)
}

/// Closed-form area generating function for level `1`, `2` or `3`
/// polyominoes with cheesy blocks.
pub fn blocks_gf(level: u32) -> Result<RationalFunction, SeriesError> {
    let (num, den) = match level {
        1 => (closed_forms::LEVEL1_NUM, closed_forms::LEVEL1_DEN),
        2 => (closed_forms::LEVEL2_NUM, closed_forms::LEVEL2_DEN),
        3 => (closed_forms::LEVEL3_NUM, closed_forms::LEVEL3_DEN),
        other => return Err(SeriesError::UnknownLevel(other)),
    };
    Ok(RationalFunction::from_i64(num, den))
}

/// A square system `M x = rhs` over the rational-function field.
#[derive(Clone, Debug)]
pub struct RatFuncMatrix {
    pub entries: Vec<Vec<RationalFunction>>,
    pub rhs: Vec<RationalFunction>,
}

impl RatFuncMatrix {
    pub fn new(entries: Vec<Vec<RationalFunction>>, rhs: Vec<RationalFunction>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|row| row.len() == n), "matrix not square");
        assert_eq!(rhs.len(), n, "rhs length mismatch");
        RatFuncMatrix { entries, rhs }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Residual `M x - rhs`; identically zero for an exact solution.
    pub fn residual(&self, x: &[RationalFunction]) -> Vec<RationalFunction> {
        self.entries
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .zip(x)
                    .fold(b.neg(), |acc, (a, xi)| acc.add(&a.mul(xi)))
            })
            .collect()
    }
}

/// Exact Gaussian elimination: each row is cleared to polynomial form, the
/// elimination itself is fraction-free (Bareiss, divisions exact), and the
/// back substitution reduces each entry at the end.
pub fn solve_linear_system(
    system: &RatFuncMatrix,
) -> Result<Vec<RationalFunction>, SeriesError> {
    let n = system.dim();
    // clear denominators row by row
    let mut m: Vec<Vec<IntPolynomial>> = Vec::with_capacity(n);
    let mut b: Vec<IntPolynomial> = Vec::with_capacity(n);
    for (row, rhs) in system.entries.iter().zip(&system.rhs) {
        let mut lcm = IntPolynomial::one();
        for f in row.iter().chain(std::iter::once(rhs)) {
            let g = lcm.gcd(f.den());
            lcm = (&lcm * f.den()).exact_div(&g)?;
        }
        m.push(
            row.iter()
                .map(|f| (&lcm.exact_div(f.den()).expect("lcm divisible")) * f.num())
                .collect(),
        );
        b.push((&lcm.exact_div(rhs.den()).expect("lcm divisible")) * rhs.num());
    }
    // fraction-free elimination
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    b.swap(k, i);
                }
                None => return Err(SeriesError::SingularMatrix),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev)?;
            }
            let t = &(&m[k][k] * &b[i]) - &(&m[i][k] * &b[k]);
            b[i] = t.exact_div(&prev)?;
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    // back substitution over the field, reduced as it goes
    let mut x = vec![RationalFunction::zero(); n];
    for k in (0..n).rev() {
        if m[k][k].is_zero() {
            return Err(SeriesError::SingularMatrix);
        }
        let mut acc = RationalFunction::new(b[k].clone(), IntPolynomial::one());
        for j in k + 1..n {
            let term = RationalFunction::new(m[k][j].clone(), IntPolynomial::one()).mul(&x[j]);
            acc = acc.sub(&term);
        }
        x[k] = acc.div(&RationalFunction::new(
            m[k][k].clone(),
            IntPolynomial::one(),
        ));
    }
    Ok(x)
}

/// Builds the three-equation linear system in the unknowns
/// `(E1, F1, G)` — the counting series of complete figures, their
/// last-column-height weighted version, and the incomplete-figure series —
/// with the coefficients of the level-one column-transfer recursion.
pub fn build_level1_system() -> RatFuncMatrix {
    let rf = RationalFunction::from_i64;
    // building blocks q^a/(1-q)^b
    let q_1q = rf(&[0, 1], &[1, -1]);
    let q_1q2 = rf(&[0, 1], &[1, -2, 1]);
    let q2_1q2 = rf(&[0, 0, 1], &[1, -2, 1]);
    let q2_1q3 = rf(&[0, 0, 1], &[1, -3, 3, -1]);
    let q3_1q3 = rf(&[0, 0, 0, 1], &[1, -3, 3, -1]);
    let one = RationalFunction::one();
    let two = rf(&[2], &[1]);
    let three = rf(&[3], &[1]);

    // E1 = q/(1-q) + q/(1-q)^2 E1 + q/(1-q) F1 + q^2/(1-q)^2 (F1-E1)
    //      + q^2/(1-q)^2 G
    let r1 = vec![
        one.sub(&q_1q2).add(&q2_1q2),
        q_1q.add(&q2_1q2).neg(),
        q2_1q2.neg(),
    ];
    let b1 = q_1q.clone();

    // F1 = q/(1-q) + q^2/(1-q)^2 + [q/(1-q)^2 + 2q^2/(1-q)^3] E1
    //      + [q/(1-q) + q^2/(1-q)^2] F1 + [3q^2/(1-q)^2 + 2q^3/(1-q)^3] (F1-E1)
    //      + [2q^2/(1-q)^2 + 2q^3/(1-q)^3] G
    let c_e = q_1q2.add(&two.mul(&q2_1q3));
    let c_f = q_1q.add(&q2_1q2);
    let c_fe = three.mul(&q2_1q2).add(&two.mul(&q3_1q3));
    let c_g = two.mul(&q2_1q2).add(&two.mul(&q3_1q3));
    let r2 = vec![
        c_fe.sub(&c_e),
        one.sub(&c_f).sub(&c_fe),
        c_g.neg(),
    ];
    let b2 = q_1q.add(&q2_1q2);

    // G = q^2/(1-q)^2 + [2q^2/(1-q)^2 + 2q^2/(1-q)^3] E1
    //     + [2q^2/(1-q)^2 + 2q^3/(1-q)^3] G
    let r3 = vec![
        two.mul(&q2_1q2).add(&two.mul(&q2_1q3)).neg(),
        RationalFunction::zero(),
        one.sub(&two.mul(&q2_1q2)).sub(&two.mul(&q3_1q3)),
    ];
    let b3 = q2_1q2;

    RatFuncMatrix::new(vec![r1, r2, r3], vec![b1, b2, b3])
}

/// Coefficient list as a JSON array of exact decimal strings.
pub fn coeffs_to_json(coeffs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(
        coeffs
            .iter()
            .map(|c| serde_json::Value::String(c.to_string()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn poly_arithmetic() {
        // (1-q)(1+q) = 1-q^2
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2, 3]), p(&[1, 0, 3]));
        assert_eq!(&p(&[1]) - &p(&[1]), IntPolynomial::zero());
        // identity on the degree-56 stress case
        let big = blocks_gf(3).unwrap().num().clone();
        assert_eq!(&big * &IntPolynomial::one(), big);
    }

    #[test]
    fn gcd_and_exact_div() {
        // gcd(1-q^2, 1-q) = 1-q up to sign normalization (leading > 0 => q-1)
        let g = p(&[1, 0, -1]).gcd(&p(&[1, -1]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, 1])).unwrap(), p(&[1, -1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[6])), p(&[2]));
        assert!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])).is_err());
    }

    #[test]
    fn rational_reduction_invariant() {
        let f = RationalFunction::from_i64(&[0, 1, -1], &[1, -2, 1]); // q(1-q)/(1-q)^2
        assert_eq!(f, RationalFunction::from_i64(&[0, 1], &[1, -1]));
        let g = f.num().gcd(f.den());
        assert_eq!(g.degree(), Some(0));
        assert!(f.den().coeff(0).is_one());
    }

    #[test]
    fn expand_simple() {
        let f = RationalFunction::from_i64(&[0, 1], &[1, -1]);
        let a = series_expand(&f, 6).unwrap();
        assert_eq!(a, [0, 1, 1, 1, 1, 1, 1].map(BigInt::from));
    }

    #[test]
    fn blocks_gf_data() {
        let f1 = blocks_gf(1).unwrap();
        assert_eq!(f1.num(), &p(&[0, 1, -6, 11, -6, 2]));
        assert_eq!(f1.den(), &p(&[1, -9, 27, -32, 13, -3, -1]));
        assert_eq!(blocks_gf(2).unwrap().den().coeff(22), BigInt::from(34));
        assert_eq!(blocks_gf(3).unwrap().den().coeff(56), BigInt::from(12));
        assert_eq!(blocks_gf(0).err(), Some(SeriesError::UnknownLevel(0)));

        // all three match the published counts for areas 1..=12
        let table1: [&[i64]; 3] = [
            &[1, 3, 11, 44, 184, 784, 3363, 14451, 62097, 266716, 1145074, 4914448],
            &[1, 3, 11, 44, 186, 810, 3582, 15952, 71242, 318441, 1423411, 6360809],
            &[1, 3, 11, 44, 186, 812, 3614, 16259, 73558, 333683, 1515454, 6885303],
        ];
        for (lvl, want) in (1..=3).zip(table1) {
            let a = series_expand(&blocks_gf(lvl).unwrap(), 12).unwrap();
            assert!(a[0].is_zero());
            assert_eq!(&a[1..13], want.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
        }
        // spot value from the level-2 expansion
        let a2 = series_expand(&blocks_gf(2).unwrap(), 10).unwrap();
        assert_eq!(a2[10], BigInt::from(318441));
    }

    #[test]
    fn solve_trivial_systems() {
        // identity matrix returns the rhs
        let one = RationalFunction::one();
        let zero = RationalFunction::zero();
        let rhs = vec![
            RationalFunction::from_i64(&[0, 1], &[1, -1]),
            RationalFunction::from_i64(&[2], &[1]),
        ];
        let m = RatFuncMatrix::new(
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
            rhs.clone(),
        );
        assert_eq!(solve_linear_system(&m).unwrap(), rhs);

        // (1-q) X = q  =>  X = q/(1-q)
        let m = RatFuncMatrix::new(
            vec![vec![RationalFunction::from_i64(&[1, -1], &[1])]],
            vec![RationalFunction::from_i64(&[0, 1], &[1])],
        );
        assert_eq!(
            solve_linear_system(&m).unwrap()[0],
            RationalFunction::from_i64(&[0, 1], &[1, -1])
        );

        // singular
        let m = RatFuncMatrix::new(
            vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]],
            vec![zero.clone(), zero.clone()],
        );
        assert_eq!(solve_linear_system(&m).err(), Some(SeriesError::SingularMatrix));
    }

    #[test]
    fn json_coefficient_export() {
        let v = coeffs_to_json(&[BigInt::from(1), BigInt::from(-6), BigInt::from(2)]);
        assert_eq!(v.to_string(), r#"["1","-6","2"]"#);
        // big values stay exact strings
        let big = series_expand(&blocks_gf(3).unwrap(), 40).unwrap();
        let arr = coeffs_to_json(&big);
        assert_eq!(arr[12].as_str(), Some("6885303"));
        assert!(arr[40].as_str().unwrap().len() > 19);
    }

    #[test]
    fn level1_system_solves_to_closed_form() {
        let sys = build_level1_system();
        let x = solve_linear_system(&sys).unwrap();
        assert_eq!(x[0], blocks_gf(1).unwrap());
        // residual identically zero
        assert!(sys.residual(&x).iter().all(|r| r.is_zero()));
        // F1 - E1 is a counting series: nonnegative coefficients
        let d = series_expand(&x[1].sub(&x[0]), 30).unwrap();
        assert!(d.iter().all(|c| !c.is_negative()));
    }

    proptest! {
        #[test]
        fn reduce_then_expand_consistent(
            n in proptest::collection::vec(-6..6i64, 1..6),
            d in proptest::collection::vec(-6..6i64, 0..5),
            s in proptest::collection::vec(-4..4i64, 1..4),
        ) {
            // multiplying num and den by the same polynomial never changes
            // the reduced form
            prop_assume!(s.iter().any(|&c| c != 0));
            let den: Vec<i64> = std::iter::once(1).chain(d).collect();
            let f = RationalFunction::from_i64(&n, &den);
            let sp = p(&s);
            let g = RationalFunction::new(f.num() * &sp, f.den() * &sp);
            prop_assert_eq!(f, g);
        }

        #[test]
        fn gcd_divides_both(
            a in proptest::collection::vec(-5..5i64, 1..7),
            b in proptest::collection::vec(-5..5i64, 1..7),
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let g = pa.gcd(&pb);
            prop_assert!(pa.exact_div(&g).is_ok());
            prop_assert!(pb.exact_div(&g).is_ok());
        }
    }
}
