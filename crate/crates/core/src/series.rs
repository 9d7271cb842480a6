//! Truncated formal power series over the rationals.
//!
//! A series of order `N` knows its coefficients for `x^0..=x^N`; everything
//! above is unknown. Binary operations combine to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::ExactRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

/// Result of comparing two series up to their common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    /// Coefficients `0..=order` were compared.
    pub order: usize,
    pub first_mismatch: Option<usize>,
}

impl Agreement {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![ExactRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^power`, truncated at `order`.
    pub fn monomial(c: ExactRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Missing coefficients below `order` are zero; extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>, order: usize) -> Self {
        coeffs.resize(order + 1, ExactRational::zero());
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I, order: usize) -> Self {
        let coeffs = values
            .into_iter()
            .map(|v| ExactRational::from_integer(BigInt::from(v)))
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    /// Series with coefficient `f(n)` at `x^n`.
    pub fn from_fn<F: FnMut(usize) -> ExactRational>(order: usize, f: F) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `None` above the truncation order: such coefficients are unknown.
    pub fn coeff(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficientwise comparison up to the smaller of the two orders.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let order = self.order().min(other.order());
        let first_mismatch = (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i]);
        Agreement { order, first_mismatch }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&ExactRational::from_integer(BigInt::from(c)))
    }

    /// Multiply by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `x^k`; the low coefficients must vanish. The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonInvertible);
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `a / b`. When `b` has valuation `v > 0`, both sides are divided by
    /// `x^v` first; `a` must then vanish to order `v` as well.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order().min(divisor.order());
        let v = divisor.coeffs[..=order]
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::NonInvertible)?;
        let num = self.truncate(order).shift_down(v)?;
        let den = divisor.truncate(order).shift_down(v)?;
        let order = order - v;
        let lead_inv = den.coeffs[0].recip();
        let mut out: Vec<ExactRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for k in 1..=n {
                acc -= &den.coeffs[k] * &out[n - k];
            }
            out.push(acc * &lead_inv);
        }
        Ok(Self { coeffs: out })
    }

    /// Formal derivative; the order drops by one (order 0 stays at the zero series).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |n| {
            &self.coeffs[n + 1] * ExactRational::from_integer(BigInt::from(n + 1))
        })
    }

    /// `exp(s)` through `n r_n = sum_{k=1}^n k s_k r_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let order = self.order();
        let weighted: Vec<ExactRational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * ExactRational::from_integer(BigInt::from(k)))
            .collect();
        let mut out = vec![ExactRational::one()];
        for n in 1..=order {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc += &weighted[k] * &out[n - k];
                }
            }
            out.push(acc / ExactRational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(s)` for `s(0) = 1`, through `n s_n = sum_{k=1}^n k l_k s_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm);
        }
        let order = self.order();
        let mut out = vec![ExactRational::zero()];
        for n in 1..=order {
            let mut acc = &self.coeffs[n] * ExactRational::from_integer(BigInt::from(n));
            for k in 1..n {
                acc -= &out[k] * ExactRational::from_integer(BigInt::from(k)) * &self.coeffs[n - k];
            }
            out.push(acc / ExactRational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: out })
    }

    /// The series `sum_j s_{mj} x^j`, of order `floor(N / m)`.
    ///
    /// Equivalent to averaging `s(xi^k t)` over the m-th roots of unity `xi`
    /// and substituting `t^m = x`.
    pub fn multisect(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("multisection step must be at least 1".into()));
        }
        let order = self.order() / m;
        Ok(Self::from_fn(order, |j| self.coeffs[j * m].clone()))
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn combine(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&ExactRational, &ExactRational) -> ExactRational,
) -> TruncatedSeries {
    let order = a.order().min(b.order());
    TruncatedSeries::from_fn(order, |i| f(&a.coeffs[i], &b.coeffs[i]))
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        combine(self, rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: Self) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonRational {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct JsonSeries {
    order: usize,
    coefficients: Vec<JsonRational>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        JsonSeries {
            order: self.order(),
            coefficients: self
                .coeffs
                .iter()
                .map(|c| JsonRational { num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonSeries::deserialize(deserializer)?;
        if raw.coefficients.len() != raw.order + 1 {
            return Err(D::Error::custom("coefficient count must equal order + 1"));
        }
        let mut coeffs = Vec::with_capacity(raw.coefficients.len());
        for c in raw.coefficients {
            let num: BigInt = c.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = c.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(ExactRational::new(num, den));
        }
        Ok(Self { coeffs })
    }
}
