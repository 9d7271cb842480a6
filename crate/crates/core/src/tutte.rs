//! Tutte polynomials of lattice path matroids.
//!
//! `t(P; z, y) = sum z^i(s) y^e(s)` over paths `s` with the endpoint of `P`
//! that never go above `P`. `i(s)` counts the N edges that `s` shares with
//! `P` (same start point, both stepping north); `e(s)` counts the E steps of
//! `s` before its own first N step (all of them if it has none).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::ExactInteger;
use crate::error::{Error, Result};
use crate::paths::{LatticePath, Step};

pub const DEFAULT_MAX_LENGTH: usize = 20;

/// Polynomial in `z` and `y` with integer coefficients, keyed by `(deg_z, deg_y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), ExactInteger>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, z_deg: u32, y_deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(z_deg, y_deg, BigInt::from(c));
        p
    }

    pub fn add_term(&mut self, z_deg: u32, y_deg: u32, c: ExactInteger) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((z_deg, y_deg)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(z_deg, y_deg));
        }
    }

    pub fn coeff(&self, z_deg: u32, y_deg: u32) -> ExactInteger {
        self.terms.get(&(z_deg, y_deg)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ExactInteger)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply by `z^a y^b`.
    pub fn shifted(&self, a: u32, b: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect() }
    }

    /// Substitute `z = 1`, leaving a polynomial in `y`.
    pub fn at_z_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, j), c) in &self.terms {
            out.add_term(0, j, c.clone());
        }
        out
    }

    pub fn eval(&self, z: &ExactInteger, y: &ExactInteger) -> ExactInteger {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * z.pow(i) * y.pow(j))
            .sum()
    }

    pub fn eval_at_ones(&self) -> ExactInteger {
        self.terms.values().sum()
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &rhs.terms {
                out.add_term(a + i, b + j, c * d);
            }
        }
        out
    }
}

/// Terms in increasing `(deg_z, deg_y)` order, e.g. `1·z^1·y^0 + 1·z^0·y^1`
/// renders as `1·y + 1·z`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by_key(|(&(i, j), _)| (i + j, i));
        for (n, (&(i, j), c)) in sorted.into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            match i {
                0 => {}
                1 => f.write_str("·z")?,
                _ => write!(f, "·z^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("·y")?,
                _ => write!(f, "·y^{j}")?,
            }
        }
        Ok(())
    }
}

/// Length guard; `WALLCOUNT_MAX_WIDTH = w` raises it to `2w`.
pub fn max_length() -> usize {
    std::env::var("WALLCOUNT_MAX_WIDTH")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_LENGTH, |w| 2 * w)
}

/// DP over `(height, seen an N yet)`, one step of `P` at a time.
pub fn tutte_polynomial(p: &LatticePath) -> Result<BivariatePolynomial> {
    let limit = max_length();
    if p.len() > limit {
        return Err(Error::TooLarge { width: p.len(), limit });
    }
    let ceil = p.ceilings();
    let width = p.east_count();
    let boundary_height = p.north_prefix_counts();
    let mut states: HashMap<(usize, bool), BivariatePolynomial> = HashMap::new();
    states.insert((0, false), BivariatePolynomial::one());
    for (s, step) in p.steps().iter().enumerate() {
        let mut next: HashMap<(usize, bool), BivariatePolynomial> = HashMap::new();
        for ((y, started), poly) in states {
            let x = s - y;
            if y < ceil[x] as usize {
                let shared = *step == Step::N && y == boundary_height[s];
                let gained = if shared { poly.shifted(1, 0) } else { poly.clone() };
                let slot = next.entry((y + 1, true)).or_default();
                *slot = &*slot + &gained;
            }
            if x < width && y <= ceil[x + 1] as usize {
                let gained = if started { poly } else { poly.shifted(0, 1) };
                let slot = next.entry((y, started)).or_default();
                *slot = &*slot + &gained;
            }
        }
        states = next;
    }
    let height = p.north_count();
    Ok(states
        .into_iter()
        .filter(|((y, _), _)| *y == height)
        .fold(BivariatePolynomial::zero(), |acc, (_, poly)| &acc + &poly))
}

/// `t(PN) = z t(P)` and `(z - 1) t(PE) = z t(P) + ((z - 1) y - z) t(P; 1, y)`.
pub fn verify_append_recursion(p: &LatticePath) -> Result<bool> {
    let t = tutte_polynomial(p)?;
    let t_n = tutte_polynomial(&p.with_step(Step::N))?;
    let t_e = tutte_polynomial(&p.with_step(Step::E))?;
    let z = BivariatePolynomial::z();
    let z_minus_one = &z - &BivariatePolynomial::one();
    let north_ok = t_n == &z * &t;
    let lhs = &z_minus_one * &t_e;
    let correction = &(&z_minus_one * &BivariatePolynomial::y()) - &z;
    let rhs = &(&z * &t) + &(&correction * &t.at_z_one());
    Ok(north_ok && lhs == rhs)
}

/// Every path of length `0..=max_len`, in order of length then binary value.
pub fn all_paths(max_len: usize) -> impl Iterator<Item = LatticePath> {
    (0..=max_len).flat_map(|len| {
        (0u64..1 << len).map(move |bits| {
            LatticePath::new((0..len).map(|i| if bits >> i & 1 == 1 { Step::N } else { Step::E }).collect())
        })
    })
}

/// Checks the append recursion for every path of length `<= max_len`; returns
/// the number checked and the first failing path.
pub fn verify_append_recursion_exhaustive(max_len: usize) -> Result<(usize, Option<LatticePath>)> {
    let mut checked = 0;
    for p in all_paths(max_len) {
        checked += 1;
        if !verify_append_recursion(&p)? {
            return Ok((checked, Some(p)));
        }
    }
    Ok((checked, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{count_weakly_below, q_count};
    use num_traits::One;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    /// The definition, summed over every word with the same step counts.
    fn by_definition(path: &LatticePath) -> BivariatePolynomial {
        let ceil = path.ceilings();
        let heights = path.north_prefix_counts();
        let (len, n) = (path.len(), path.north_count());
        let mut out = BivariatePolynomial::zero();
        for mask in 0u32..1 << len {
            if mask.count_ones() as usize != n {
                continue;
            }
            let (mut x, mut y) = (0usize, 0i64);
            let (mut common_n, mut lead_e, mut started, mut ok) = (0u32, 0u32, false, true);
            for i in 0..len {
                if mask >> i & 1 == 1 {
                    if path.steps()[i] == Step::N && y == heights[i] as i64 {
                        common_n += 1;
                    }
                    y += 1;
                    started = true;
                } else {
                    x += 1;
                    if !started {
                        lead_e += 1;
                    }
                }
                ok &= y <= ceil[x];
            }
            if ok {
                out.add_term(common_n, lead_e, BigInt::one());
            }
        }
        out
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(tutte_polynomial(&p("N")).unwrap(), BivariatePolynomial::z());
        assert_eq!(tutte_polynomial(&p("-")).unwrap(), BivariatePolynomial::one());
        assert_eq!(tutte_polynomial(&p("E")).unwrap(), BivariatePolynomial::y());
        let ne = tutte_polynomial(&p("NE")).unwrap();
        assert_eq!(ne, &BivariatePolynomial::z() + &BivariatePolynomial::y());
        assert_eq!(ne.to_string(), "1·y + 1·z");
        assert_eq!(tutte_polynomial(&p("NENE")).unwrap().eval_at_ones(), BigInt::from(5));
    }

    #[test]
    fn matches_definition() {
        for path in all_paths(10) {
            assert_eq!(tutte_polynomial(&path).unwrap(), by_definition(&path), "{path}");
        }
    }

    #[test]
    fn append_recursion() {
        assert!(verify_append_recursion(&p("-")).unwrap());
        assert!(verify_append_recursion(&p("N")).unwrap());
        let (checked, failure) = verify_append_recursion_exhaustive(8).unwrap();
        assert_eq!(checked, (1 << 9) - 1);
        assert_eq!(failure, None);
    }

    #[test]
    fn uniform_matroid_case() {
        // every path below NNE: the uniform matroid U(2,3), Tutte polynomial z^2 + z + y
        let expected = &(&BivariatePolynomial::monomial(1, 2, 0) + &BivariatePolynomial::z()) + &BivariatePolynomial::y();
        assert_eq!(tutte_polynomial(&p("N2E")).unwrap(), expected);
    }

    #[test]
    fn positional_reading_breaks_recursion() {
        // Counting E steps shared with P by position gives t(NE) = z + 1, which
        // contradicts the recursion's z + y.
        let recursion = &(&BivariatePolynomial::z() * &BivariatePolynomial::z())
            + &(&(&(&BivariatePolynomial::z() - &BivariatePolynomial::one()) * &BivariatePolynomial::y())
                - &BivariatePolynomial::z());
        // (z - 1) t(NE) from the recursion, applied to t(N) = z
        let positional = &BivariatePolynomial::z() + &BivariatePolynomial::one();
        let lhs = &(&BivariatePolynomial::z() - &BivariatePolynomial::one()) * &positional;
        assert_ne!(lhs, recursion);
    }

    #[test]
    fn value_at_ones_counts_paths() {
        for path in all_paths(12).filter(|q| q.len() % 3 == 0 || q.len() == 12) {
            assert_eq!(
                tutte_polynomial(&path).unwrap().eval_at_ones(),
                count_weakly_below(&path, path.endpoint()).unwrap()
            );
        }
        for (k, l, n) in [(1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 3, 2)] {
            let stair = LatticePath::staircase(k, l, n);
            assert_eq!(tutte_polynomial(&stair).unwrap().eval_at_ones(), q_count(k, l, n).unwrap());
        }
    }

    #[test]
    fn guard() {
        if std::env::var("WALLCOUNT_MAX_WIDTH").is_err() {
            assert!(tutte_polynomial(&LatticePath::staircase(1, 1, 11)).is_err());
        }
    }

    #[test]
    fn no_zero_terms_and_evaluation() {
        let t = tutte_polynomial(&p("N2E2N2E2")).unwrap();
        assert!(t.terms().all(|(_, c)| !c.is_zero()));
        assert_eq!(t.eval(&BigInt::one(), &BigInt::one()), t.eval_at_ones());
        let diff = &t - &t;
        assert!(diff.is_zero());
    }
}
