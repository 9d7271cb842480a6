//! Closed-form counts: fraction-free determinants, the Kreweras formula for
//! partitions between two bounds, the determinant for `fbar_m(n)`, and the
//! inclusion-exclusion recursion over first boundary contacts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{binomial_or_zero, binomial_unchecked, ExactInteger};
use crate::error::{Error, Result};
use crate::paths::ReversePartition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<ExactInteger>,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<ExactInteger>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> ExactInteger) -> Result<Self> {
        Self::new((0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_fn(dim, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactInteger {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<ExactInteger>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }
}

/// Bareiss elimination: every intermediate is itself a minor, so each
/// division is exact.
pub fn determinant(matrix: &IntegerMatrix) -> ExactInteger {
    let n = matrix.dim();
    let mut a = matrix.rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!(v.is_multiple_of(&prev));
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Number of weakly increasing sequences `nu` with `lower <= nu <= upper`
/// componentwise, as `det( C(a_i - b_j + 1, j - i + 1) )`.
pub fn kreweras_count(upper: &ReversePartition, lower: &ReversePartition) -> Result<ExactInteger> {
    if upper.len() != lower.len() {
        return Err(Error::LengthMismatch(upper.len(), lower.len()));
    }
    if !lower.contained_in(upper) {
        return Err(Error::NotDominated);
    }
    let n = upper.len();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let (a, b) = (upper.parts(), lower.parts());
    let m = IntegerMatrix::from_fn(n, |i, j| {
        binomial_or_zero(a[i] as i64 - b[j] as i64 + 1, j as i64 - i as i64 + 1)
    })?;
    Ok(determinant(&m))
}

/// Enumerates the sequences between `lower` and `upper` one by one.
pub fn count_partitions_between(
    upper: &ReversePartition,
    lower: &ReversePartition,
) -> Result<ExactInteger> {
    if upper.len() != lower.len() {
        return Err(Error::LengthMismatch(upper.len(), lower.len()));
    }
    if !lower.contained_in(upper) {
        return Err(Error::NotDominated);
    }
    fn walk(a: &[usize], b: &[usize], i: usize, prev: usize) -> u64 {
        if i == a.len() {
            return 1;
        }
        (prev.max(b[i])..=a[i]).map(|v| walk(a, b, i + 1, v)).sum()
    }
    Ok(BigInt::from(walk(upper.parts(), lower.parts(), 0, 0)))
}

/// The `nm - 1` parts `(m^m, (2m)^m, ..., ((n-1)m)^m, (nm)^(m-1))`.
pub fn fbar_parts(m: usize, n: usize) -> Vec<usize> {
    let mut parts = Vec::with_capacity((n * m).saturating_sub(1));
    for h in 1..n {
        parts.extend(std::iter::repeat_n(h * m, m));
    }
    parts.extend(std::iter::repeat_n(n * m, m.saturating_sub(1)));
    parts
}

/// `fbar_m(n) = det( C(a_i + 1, j - i + 1) )` over the parts of [`fbar_parts`].
pub fn fbar_determinant(m: usize, n: usize) -> Result<ExactInteger> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let a = fbar_parts(m, n);
    if a.is_empty() {
        // m = 1, n = 1: the empty determinant
        return Ok(BigInt::one());
    }
    let matrix = IntegerMatrix::from_fn(a.len(), |i, j| {
        binomial_unchecked(a[i] as u64 + 1, j as i64 - i as i64 + 1)
    })?;
    Ok(determinant(&matrix))
}

/// Tables produced by [`recursion_fbar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FbarRecursion {
    pub m: usize,
    /// `g[i - 1][t - 1] = g_t(i)` for `1 <= i <= n`.
    pub g: Vec<Vec<ExactInteger>>,
    /// `values[i - 1] = fbar_m(i)` for `1 <= i <= n`.
    pub values: Vec<ExactInteger>,
}

fn binom(n: usize, k: i64) -> ExactInteger {
    binomial_unchecked(n as u64, k)
}

/// Inclusion-exclusion over the first contact with the boundary.
///
/// `g_t(i)` counts the paths reaching the `t`-th corner of the `i`-th block
/// without touching the boundary; `g_m(i)` must equal `fbar_m(i)`, which is
/// checked for every `i`.
pub fn recursion_tables(m: usize, n: usize) -> Result<FbarRecursion> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("the recursion needs m >= 2, got {m}")));
    }
    let mut g: Vec<Vec<ExactInteger>> = Vec::with_capacity(n);
    for i in 1..=n {
        let row = (1..=m)
            .map(|t| {
                let mut v = binom(2 * m * i - m + t - 1, (m * i) as i64);
                for (j, prev) in g.iter().enumerate() {
                    let d = i - (j + 1);
                    for (r, g_rj) in prev.iter().enumerate() {
                        let r = r + 1;
                        v -= g_rj * binom(2 * m * d + t - r - 1, (m * d) as i64 - 1);
                    }
                }
                v
            })
            .collect();
        g.push(row);
    }
    let mut values = Vec::with_capacity(n);
    for n in 1..=n {
        let mut v = binom(2 * m * n - 1, (m * n) as i64);
        for (i, row) in g.iter().enumerate().take(n - 1) {
            let d = n - (i + 1);
            for (t, g_ti) in row.iter().enumerate() {
                let t = t + 1;
                v -= g_ti * binom(2 * m * d + m - t - 1, (m * d) as i64 - 1);
            }
        }
        if v != g[n - 1][m - 1] {
            return Err(Error::Inconsistent(format!(
                "g_m({n}) = {} but fbar_m({n}) = {v}",
                g[n - 1][m - 1]
            )));
        }
        values.push(v);
    }
    Ok(FbarRecursion { m, g, values })
}

pub fn recursion_fbar(m: usize, n: usize) -> Result<ExactInteger> {
    if n == 0 {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("the recursion needs m >= 2, got {m}")));
        }
        return Ok(BigInt::one());
    }
    let tables = recursion_tables(m, n)?;
    Ok(tables.values[n - 1].clone())
}

/// Cofactor expansion along the first row; exponential, for cross-checks only.
pub fn cofactor_determinant(matrix: &IntegerMatrix) -> ExactInteger {
    fn expand(rows: &[Vec<ExactInteger>]) -> ExactInteger {
        if rows.len() == 1 {
            return rows[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for c in 0..rows.len() {
            if rows[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<ExactInteger>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &rows[0][c] * expand(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    expand(&matrix.rows())
}
