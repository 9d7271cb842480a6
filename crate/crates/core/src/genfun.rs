//! Generating functions from the kernel `(w - 1)^l - x w^(k+l)`.
//!
//! The `l` small roots `w_i` are Puiseux series and are never represented
//! individually. Their power sums (shifted by one) have a closed form; every
//! other symmetric function is obtained from those through Newton's
//! identities, and all of them are ordinary power series over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial_unchecked, ExactRational};
use crate::error::{Error, Result};
use crate::paths::{f_r_count, q_count};
use crate::series::{Agreement, TruncatedSeries};

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

fn big(v: BigInt) -> ExactRational {
    ExactRational::from_integer(v)
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_kl(k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter(format!("k and l must be positive (k={k}, l={l})")));
    }
    Ok(())
}

/// `sum_{n>=1} C(a n + b, c n + d) x^n / n`, with zero for an out-of-range lower index.
fn binomial_log_series(order: usize, a: u64, b: i64, c: i64, d: i64) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            return ExactRational::zero();
        }
        let top = a as i64 * n as i64 + b;
        if top < 0 {
            return ExactRational::zero();
        }
        let v = binomial_unchecked(top as u64, c * n as i64 + d);
        ExactRational::new(v, BigInt::from(n))
    })
}

/// `p_m(w_1 - 1, ..., w_l - 1) = m sum_{n>=1} C((k+l)n, ln - m) x^n / n`.
pub fn power_sum_u(k: usize, l: usize, m: usize, order: usize) -> TruncatedSeries {
    binomial_log_series(order, (k + l) as u64, 0, l as i64, -(m as i64)).scale_int(m as i64)
}

/// `e_0..=e_count` from power sums `p[0] = p_1, p[1] = p_2, ...`
/// through `j e_j = sum_{i=1}^j (-1)^(i-1) e_(j-i) p_i`.
pub fn elementary_from_power_sums(p: &[TruncatedSeries], count: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut e = vec![TruncatedSeries::one(order)];
    for j in 1..=count {
        let mut acc = TruncatedSeries::zero(order);
        for i in 1..=j {
            let term = &e[j - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&ExactRational::new(BigInt::one(), BigInt::from(j))));
    }
    e
}

/// `p_1..=p_count` from `e[0] = 1, e[1], ...`; entries past the end of `e` are zero.
pub fn power_sums_from_elementary(e: &[TruncatedSeries], count: usize, order: usize) -> Vec<TruncatedSeries> {
    let elem = |i: usize| e.get(i).cloned().unwrap_or_else(|| TruncatedSeries::zero(order));
    let mut p: Vec<TruncatedSeries> = Vec::with_capacity(count);
    for m in 1..=count {
        let mut acc = elem(m).scale_int(m as i64 * sign(m - 1));
        for i in 1..m {
            let term = &elem(i) * &p[m - i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    p
}

/// Symmetric functions of the small kernel roots, as series to a fixed order.
#[derive(Debug, Clone)]
pub struct RootSymmetrics {
    pub k: usize,
    pub l: usize,
    pub order: usize,
    /// `p_u[m - 1] = p_m(u)` for `m = 1..=l`, with `u_i = w_i - 1`.
    pub p_u: Vec<TruncatedSeries>,
    /// `e_u[j] = e_j(u)` for `j = 0..=l`.
    pub e_u: Vec<TruncatedSeries>,
    /// `e_w[j] = e_j(w)` for `j = 0..=l`.
    pub e_w: Vec<TruncatedSeries>,
}

impl RootSymmetrics {
    pub fn build(k: usize, l: usize, order: usize) -> Result<Self> {
        check_kl(k, l)?;
        if order == 0 {
            return Err(Error::InvalidParameter("order must be at least 1".into()));
        }
        let p_u: Vec<TruncatedSeries> = (1..=l).map(|m| power_sum_u(k, l, m, order)).collect();
        let e_u = elementary_from_power_sums(&p_u, l, order);
        // prod (1 + t(1 + u_i)) = sum_i e_i(u) t^i (1 + t)^(l - i)
        let e_w = (0..=l)
            .map(|j| {
                (0..=j).fold(TruncatedSeries::zero(order), |acc, i| {
                    let c = big(binomial_unchecked((l - i) as u64, (j - i) as i64));
                    &acc + &e_u[i].scale(&c)
                })
            })
            .collect();
        Ok(Self { k, l, order, p_u, e_u, e_w })
    }

    /// Checks `j e_j = sum (-1)^(i-1) e_(j-i) p_i` for the stored `e_u`, `p_u`.
    pub fn newton_agreement(&self) -> Agreement {
        let mut worst = Agreement { order: self.order, first_mismatch: None };
        for j in 1..=self.l {
            let mut rhs = TruncatedSeries::zero(self.order);
            for i in 1..=j {
                let term = &self.e_u[j - i] * &self.p_u[i - 1];
                rhs = if i % 2 == 1 { &rhs + &term } else { &rhs - &term };
            }
            let a = self.e_u[j].scale_int(j as i64).agreement(&rhs);
            if let Some(at) = a.first_mismatch {
                if worst.first_mismatch.is_none_or(|w| at < w) {
                    worst.first_mismatch = Some(at);
                }
            }
        }
        worst
    }

    /// `prod (1 - w_i) = sum_j (-1)^j e_j(w)`.
    pub fn prod_one_minus_w(&self) -> TruncatedSeries {
        self.e_w
            .iter()
            .enumerate()
            .fold(TruncatedSeries::zero(self.order), |acc, (j, e)| &acc + &e.scale_int(sign(j)))
    }

    /// `e_j(1 - w_1, ..., 1 - w_l) = (-1)^j e_j(u)`.
    pub fn e_one_minus_w(&self, j: usize) -> TruncatedSeries {
        self.e_u[j].scale_int(sign(j))
    }

    /// `e_j(1/w_1, ..., 1/w_l) = e_(l-j)(w) / e_l(w)`.
    pub fn e_reciprocal(&self, j: usize) -> Result<TruncatedSeries> {
        self.e_w[self.l - j].div(&self.e_w[self.l])
    }

    /// `F_r = sum_{i=0}^{r-1} (-1)^i C(l - r + i, i) e_(l-r+1+i)(w)`.
    pub fn f_r(&self, r: usize) -> Result<TruncatedSeries> {
        let l = self.l;
        if r == 0 || r > l {
            return Err(Error::InvalidParameter(format!("r = {r} must lie in 1..={l}")));
        }
        Ok((0..r).fold(TruncatedSeries::zero(self.order), |acc, i| {
            let c = big(binomial_unchecked((l - r + i) as u64, i as i64)) * int(sign(i));
            &acc + &self.e_w[l - r + 1 + i].scale(&c)
        }))
    }
}

pub fn build_root_symmetrics(k: usize, l: usize, order: usize) -> Result<RootSymmetrics> {
    RootSymmetrics::build(k, l, order)
}

/// Generating function of `f_r(n)` from the elementary symmetric functions of the small roots.
pub fn f_r_series(k: usize, l: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
    RootSymmetrics::build(k, l, order.max(1))?.f_r(r).map(|s| s.truncate(order))
}

/// `Q = exp( sum C((k+l)n, ln) x^n / n )`.
pub fn q_series_exp(k: usize, l: usize, order: usize) -> Result<TruncatedSeries> {
    check_kl(k, l)?;
    binomial_log_series(order, (k + l) as u64, 0, l as i64, 0).exp()
}

/// `Q = (F_l - 1) / x`; the symmetric functions are built one order higher.
pub fn q_series_symmetric(k: usize, l: usize, order: usize) -> Result<TruncatedSeries> {
    let sym = RootSymmetrics::build(k, l, order + 1)?;
    let f_l = sym.f_r(l)?;
    (&f_l - &TruncatedSeries::one(order + 1)).shift_down(1)
}

/// `F_1 = exp( sum C((k+l)n - 1, ln - 1) x^n / n )`.
pub fn f1_series_exp(k: usize, l: usize, order: usize) -> Result<TruncatedSeries> {
    check_kl(k, l)?;
    binomial_log_series(order, (k + l) as u64, -1, l as i64, -1).exp()
}

/// `prod_{k=1}^m C(xi^k x^(1/m))`, evaluated as `exp(m * multisect_m(log C))`.
pub fn fbar_series_multisection(m: usize, order: usize) -> Result<TruncatedSeries> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let c = TruncatedSeries::from_fn(order * m, |n| {
        let n = n as u64;
        big(binomial_unchecked(2 * n, n as i64) / (n + 1))
    });
    c.log()?.multisect(m)?.scale_int(m as i64).exp()
}

/// `Fbar_m`, computed through the exponential formula at `k = l = m` and
/// through the root-of-unity product; the two must agree.
pub fn fbar_series(m: usize, order: usize) -> Result<TruncatedSeries> {
    let by_exp = f1_series_exp(m, m, order)?;
    let by_roots = fbar_series_multisection(m, order)?;
    if let Some(at) = by_exp.agreement(&by_roots).first_mismatch {
        return Err(Error::Inconsistent(format!(
            "exponential and root-of-unity forms of Fbar_{m} differ at x^{at}"
        )));
    }
    Ok(by_exp)
}

/// Power sums `p_1..=p_count` of the reciprocals of all `k + l` kernel roots.
///
/// The reciprocals are the roots of the reversed kernel `w^k (1 - w)^l - x`,
/// whose leading coefficient `(-1)^l` is a unit.
pub fn reciprocal_power_sums_all_roots(k: usize, l: usize, count: usize, order: usize) -> Vec<TruncatedSeries> {
    let degree = k + l;
    // reversed[d] = coefficient of w^d
    let mut reversed = vec![TruncatedSeries::zero(order); degree + 1];
    for i in 0..=l {
        let c = big(binomial_unchecked(l as u64, i as i64)) * int(sign(i));
        reversed[k + i] = &reversed[k + i] + &TruncatedSeries::constant(c, order);
    }
    reversed[0] = &reversed[0] - &TruncatedSeries::monomial(ExactRational::one(), 1, order);
    let lead = int(sign(l));
    // monic: w^d + c_1 w^(d-1) + ... + c_d, and e_j = (-1)^j c_j
    let e: Vec<TruncatedSeries> = (0..=degree)
        .map(|j| reversed[degree - j].scale(&(int(sign(j)) / &lead)))
        .collect();
    power_sums_from_elementary(&e, count, order)
}

/// `p_m(1/w_(l+1), ..., 1/w_(l+k))` as the difference of the all-roots power
/// sum and the small-roots power sum.
pub fn conjugate_reciprocal_power_sum(sym: &RootSymmetrics, m: usize) -> Result<TruncatedSeries> {
    let all = reciprocal_power_sums_all_roots(sym.k, sym.l, m, sym.order);
    let e_rec: Vec<TruncatedSeries> = (0..=sym.l).map(|j| sym.e_reciprocal(j)).collect::<Result<_>>()?;
    let small = power_sums_from_elementary(&e_rec, m, sym.order);
    Ok(&all[m - 1] - &small[m - 1])
}

/// `m sum_{n>=1} C((k+l)n - m - 1, kn - m) x^n / n`, zero when `kn < m`.
pub fn conjugate_reciprocal_power_sum_closed(k: usize, l: usize, m: usize, order: usize) -> TruncatedSeries {
    binomial_log_series(order, (k + l) as u64, -(m as i64) - 1, k as i64, -(m as i64)).scale_int(m as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub identity: String,
    pub params: String,
    pub status: Status,
    pub first_mismatch_order: Option<usize>,
}

impl IdentityResult {
    fn from_agreement(identity: &str, params: String, a: &Agreement) -> Self {
        Self {
            identity: identity.to_string(),
            params,
            status: if a.holds() { Status::Pass } else { Status::Fail },
            first_mismatch_order: a.first_mismatch,
        }
    }

    fn skipped(identity: &str, params: String) -> Self {
        Self { identity: identity.to_string(), params, status: Status::Skipped, first_mismatch_order: None }
    }
}

fn counts_series(order: usize, f: impl Fn(usize) -> Result<BigInt>) -> Result<TruncatedSeries> {
    let values: Vec<ExactRational> = (0..=order).map(|n| f(n).map(big)).collect::<Result<_>>()?;
    Ok(TruncatedSeries::from_coeffs(values, order))
}

/// Checks the closed-form corollaries of the kernel solution for one `(k, l)`:
///
/// * `Q = (F_l - 1)/x = -(1/x) prod (1 - w_i)`, against the exponential form;
/// * `F_1 = w_1 ... w_l`, against the exponential form;
/// * `F_2 = (1 - l + sum 1/w_j) prod w_j` (needs `l >= 2`), against path counts;
/// * `F_(l-1) = 1 + (l - 1 - sum 1/(1 - w_i)) prod (1 - w_i)` (needs `l >= 2`);
/// * the conjugate-root reciprocal power sums `p_m` for `m = 1..=m_max`;
/// * Newton's identities for the stored symmetric functions.
pub fn identity_suite(k: usize, l: usize, order: usize, m_max: usize) -> Result<Vec<IdentityResult>> {
    let sym = RootSymmetrics::build(k, l, order + 1)?;
    let params = format!("k={k} l={l} N={order}");
    let one = TruncatedSeries::one(order + 1);
    let mut out = Vec::new();

    out.push(IdentityResult::from_agreement("newton", params.clone(), &sym.newton_agreement()));

    let q_exp = q_series_exp(k, l, order)?;
    let q_from_f = (&sym.f_r(l)? - &one).shift_down(1)?;
    let q_from_prod = (-&sym.prod_one_minus_w()).shift_down(1)?;
    let q_dp = counts_series(order, |n| q_count(k, l, n))?;
    let mut a = q_exp.agreement(&q_from_f);
    for other in [&q_from_prod, &q_dp] {
        let b = q_exp.agreement(other);
        if b.first_mismatch.is_some() && a.first_mismatch.is_none_or(|x| b.first_mismatch.unwrap() < x) {
            a = b;
        }
    }
    out.push(IdentityResult::from_agreement("Q=(F_l-1)/x=-prod(1-w)/x", params.clone(), &a));

    let f1_prod = sym.e_w[l].truncate(order);
    out.push(IdentityResult::from_agreement(
        "F_1=prod(w)",
        params.clone(),
        &f1_prod.agreement(&f1_series_exp(k, l, order)?),
    ));

    if l >= 2 {
        let sum_recip = sym.e_reciprocal(1)?;
        let f2 = &(&sum_recip + &TruncatedSeries::constant(int(1 - l as i64), order + 1)) * &sym.e_w[l];
        let f2_dp = counts_series(order, |n| f_r_count(k, l, 2, n))?;
        let mut a = f2.agreement(&sym.f_r(2)?);
        if a.holds() {
            a = f2.agreement(&f2_dp);
        }
        out.push(IdentityResult::from_agreement("F_2=(1-l+sum(1/w))prod(w)", params.clone(), &a));

        // sum_j prod_{i != j} (1 - w_i) = e_(l-1)(1 - w)
        let f_lm1 = &(&one + &sym.e_one_minus_w(l).scale_int(l as i64 - 1)) - &sym.e_one_minus_w(l - 1);
        let f_lm1_dp = counts_series(order, |n| f_r_count(k, l, l - 1, n))?;
        let mut a = f_lm1.agreement(&sym.f_r(l - 1)?);
        if a.holds() {
            a = f_lm1.agreement(&f_lm1_dp);
        }
        out.push(IdentityResult::from_agreement("F_(l-1)=1+(l-1-sum(1/(1-w)))prod(1-w)", params.clone(), &a));
    } else {
        out.push(IdentityResult::skipped("F_2=(1-l+sum(1/w))prod(w)", params.clone()));
        out.push(IdentityResult::skipped("F_(l-1)=1+(l-1-sum(1/(1-w)))prod(1-w)", params.clone()));
    }

    for m in 1..=m_max {
        let lhs = conjugate_reciprocal_power_sum(&sym, m)?;
        let rhs = conjugate_reciprocal_power_sum_closed(k, l, m, order);
        out.push(IdentityResult::from_agreement(
            "p_m(1/w_conj)",
            format!("{params} m={m}"),
            &lhs.agreement(&rhs),
        ));
    }
    Ok(out)
}

/// `C(n, k)` extended to negative `n` by `n (n-1) ... (n-k+1) / k!`; zero for `k < 0`.
fn generalized_binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial_unchecked(n as u64, k);
    }
    // C(-a, k) = (-1)^k C(a + k - 1, k)
    let v = binomial_unchecked((-n + k - 1) as u64, k);
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

fn pm1(e: i64) -> BigInt {
    BigInt::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub name: &'static str,
    pub checked: usize,
    /// First failing parameter tuple, rendered.
    pub first_failure: Option<String>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Exhaustively checks the three alternating binomial sums for
/// `0 <= l <= bound`, `1 <= r <= bound`, `0 <= j <= l`.
pub fn binomial_lemma_checks(bound: usize) -> Vec<LemmaReport> {
    let b = bound as i64;
    let mut reports = vec![
        LemmaReport { name: "alternating-sum", checked: 0, first_failure: None },
        LemmaReport { name: "weighted-sum-i", checked: 0, first_failure: None },
        LemmaReport { name: "weighted-sum", checked: 0, first_failure: None },
    ];
    let mut record = |idx: usize, ok: bool, tuple: String| {
        let r = &mut reports[idx];
        r.checked += 1;
        if !ok && r.first_failure.is_none() {
            r.first_failure = Some(tuple);
        }
    };
    for l in 0..=b {
        for r in 1..=b {
            for j in 0..=l {
                if j < r {
                    let lhs: BigInt = (0..=r - 1 - j)
                        .map(|m| pm1(j + r + m + 1) * generalized_binomial(l - j, r - 1 - m - j))
                        .sum();
                    let rhs = pm1(r - j - 1) * generalized_binomial(l - j - 1, r - j - 1);
                    record(0, lhs == rhs, format!("l={l} r={r} j={j}"));

                    let lhs: BigInt = (0..=r - 1 - j)
                        .map(|m| {
                            pm1(j + r + m) * generalized_binomial(l - j, r - 1 - m - j) * generalized_binomial(m + l, l)
                        })
                        .sum();
                    record(2, lhs == -generalized_binomial(r - 1, j), format!("l={l} r={r} j={j}"));
                }
                for i in 0..=(r - 1 - j) {
                    let lhs: BigInt = (i..=r - 1 - j)
                        .map(|m| {
                            pm1(r + m + i + j)
                                * generalized_binomial(l - j, r - 1 - m - j)
                                * generalized_binomial(m + l, i + l)
                        })
                        .sum();
                    let rhs = pm1(i - 1) * generalized_binomial(r - 1, i + j);
                    record(1, lhs == rhs, format!("l={l} r={r} j={j} i={i}"));
                }
            }
        }
    }
    reports
}
