//! Lattice paths over `{N, E}`, boundary-constrained counting, and the
//! path/reverse-partition correspondence.
//!
//! "Never goes above `P`" means every lattice point `(x, y)` of the path
//! satisfies `y <= ceiling_P(x)`, where `ceiling_P(x)` is the highest point of
//! `P` in column `x`. "Never goes below" uses the lowest point instead.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::ExactInteger;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.len() - self.north_count()
    }

    /// `(#E, #N)`.
    pub fn endpoint(&self) -> Point {
        Point::new(self.east_count() as i64, self.north_count() as i64)
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn with_step(&self, step: Step) -> Self {
        let mut p = self.clone();
        p.push(step);
        p
    }

    pub fn push_run(&mut self, step: Step, count: usize) {
        self.steps.extend(std::iter::repeat_n(step, count));
    }

    pub fn concat(&self, other: &LatticePath) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Self { steps }
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self { steps: self.steps.repeat(times) }
    }

    /// Mirror image in the diagonal: every N becomes E and vice versa.
    pub fn reflected(&self) -> Self {
        Self { steps: self.steps.iter().map(|s| s.flipped()).collect() }
    }

    /// Highest `y` of the path in each column `0..=#E`.
    pub fn ceilings(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.east_count() + 1);
        let mut y = 0i64;
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out.push(y);
        out
    }

    /// Lowest `y` of the path in each column `0..=#E`.
    pub fn floors(&self) -> Vec<i64> {
        let mut out = vec![0];
        let mut y = 0i64;
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    /// Number of N steps among the first `len` steps.
    pub fn north_prefix_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        out.push(0);
        for s in &self.steps {
            if *s == Step::N {
                acc += 1;
            }
            out.push(acc);
        }
        out
    }

    /// Both paths end at the same point and `self` is weakly above `other`
    /// after every prefix.
    pub fn weakly_above(&self, other: &LatticePath) -> bool {
        self.endpoint() == other.endpoint()
            && self
                .north_prefix_counts()
                .iter()
                .zip(other.north_prefix_counts())
                .all(|(a, b)| *a >= b)
    }

    /// `(N^k E^l)^n`.
    pub fn staircase(k: usize, l: usize, n: usize) -> Self {
        let mut block = Self::empty();
        block.push_run(Step::N, k);
        block.push_run(Step::E, l);
        block.repeat(n)
    }

    /// `(N^k E^l)^(n-1) N^k E^(l-r)`; the empty path for `n = 0`.
    pub fn truncated_staircase(k: usize, l: usize, r: usize, n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut p = Self::staircase(k, l, n - 1);
        p.push_run(Step::N, k);
        p.push_run(Step::E, l.saturating_sub(r));
        p
    }

    /// `N (E^m N^m)^(n-1) E^m N^(m-1)`: the lower boundary whose upper region
    /// corresponds to tableaux over the periodic building `B_m^n`.
    pub fn periodic_wall_boundary(m: usize, n: usize) -> Self {
        if n == 0 || m == 0 {
            return Self::empty();
        }
        let mut p = Self::new(vec![Step::N]);
        let mut block = Self::empty();
        block.push_run(Step::E, m);
        block.push_run(Step::N, m);
        p = p.concat(&block.repeat(n - 1));
        p.push_run(Step::E, m);
        p.push_run(Step::N, m - 1);
        p
    }

    /// Run-length form, e.g. `N3E2`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.steps.len() {
            let s = self.steps[i];
            let mut j = i;
            while j < self.steps.len() && self.steps[j] == s {
                j += 1;
            }
            out.push(if s == Step::N { 'N' } else { 'E' });
            if j - i > 1 {
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

/// Accepts words over `N`/`E` with optional exponents: `"N3E2" == "NNNEE"`.
/// `"-"` or the empty string is the empty path. Whitespace is ignored.
impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let mut steps = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let step = match c.to_ascii_uppercase() {
                'N' => Step::N,
                'E' => Step::E,
                _ => return Err(Error::PathSyntax(s.clone())),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let count = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| Error::PathSyntax(s.clone()))?
            };
            steps.extend(std::iter::repeat_n(step, count));
        }
        Ok(Self { steps })
    }
}

/// Weakly increasing sequence `a_1 <= ... <= a_n` of non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReversePartition {
    parts: Vec<usize>,
}

impl ReversePartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter(format!(
                "reverse partition must be weakly increasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn zeros(len: usize) -> Self {
        Self { parts: vec![0; len] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Componentwise `self <= other`; `false` for different lengths.
    pub fn contained_in(&self, other: &ReversePartition) -> bool {
        self.len() == other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// The path with `parts[i]` E steps before its `(i+1)`-th N step, padded
    /// with E steps up to `width`.
    pub fn to_path(&self, width: usize) -> Result<LatticePath> {
        if self.parts.last().is_some_and(|&p| p > width) {
            return Err(Error::InvalidParameter(format!("part exceeds width {width}")));
        }
        let mut path = LatticePath::empty();
        let mut east = 0;
        for &p in &self.parts {
            path.push_run(Step::E, p - east);
            path.push(Step::N);
            east = p;
        }
        path.push_run(Step::E, width - east);
        Ok(path)
    }
}

/// `mu_i` = number of E steps preceding the i-th N step.
pub fn path_to_reverse_partition(p: &LatticePath, rows: usize) -> Result<ReversePartition> {
    let found = p.north_count();
    if found != rows {
        return Err(Error::WrongNorthCount { expected: rows, found });
    }
    let mut parts = Vec::with_capacity(rows);
    let mut east = 0;
    for s in p.steps() {
        match s {
            Step::E => east += 1,
            Step::N => parts.push(east),
        }
    }
    Ok(ReversePartition { parts })
}

/// Number of N/E paths from the origin to `target` whose every lattice point
/// satisfies `allowed(x, y)`.
fn count_in_region(target: Point, allowed: impl Fn(i64, i64) -> bool) -> ExactInteger {
    let (w, h) = (target.x as usize, target.y as usize);
    let mut column = vec![BigInt::zero(); h + 1];
    for x in 0..=w {
        for y in 0..=h {
            let (xi, yi) = (x as i64, y as i64);
            if !allowed(xi, yi) {
                column[y] = BigInt::zero();
                continue;
            }
            if x == 0 && y == 0 {
                column[y] = BigInt::one();
            } else if y > 0 {
                // column[y] still holds the value from column x-1
                let below = column[y - 1].clone();
                column[y] += below;
            }
        }
    }
    column[h].clone()
}

fn check_target(boundary: &LatticePath, target: Point) -> Result<()> {
    let end = boundary.endpoint();
    if target.x < 0 || target.y < 0 || target.x > end.x || target.y > end.y {
        return Err(Error::Unreachable { x: target.x, y: target.y });
    }
    Ok(())
}

/// Paths from `(0, 0)` to `target` that never pass strictly above `boundary`.
pub fn count_weakly_below(boundary: &LatticePath, target: Point) -> Result<ExactInteger> {
    check_target(boundary, target)?;
    let ceil = boundary.ceilings();
    if target.y > ceil[target.x as usize] {
        return Err(Error::Unreachable { x: target.x, y: target.y });
    }
    Ok(count_in_region(target, |x, y| y <= ceil[x as usize]))
}

/// Paths from `(0, 0)` to `target` that never pass strictly below `boundary`,
/// counted by reflecting both in the diagonal.
pub fn count_weakly_above(boundary: &LatticePath, target: Point) -> Result<ExactInteger> {
    check_target(boundary, target)?;
    count_weakly_below(&boundary.reflected(), Point::new(target.y, target.x))
}

/// Same count as [`count_weakly_above`], from the boundary's column floors
/// without any reflection.
pub fn count_weakly_above_direct(boundary: &LatticePath, target: Point) -> Result<ExactInteger> {
    check_target(boundary, target)?;
    let floor = boundary.floors();
    if target.y < floor[target.x as usize] {
        return Err(Error::Unreachable { x: target.x, y: target.y });
    }
    Ok(count_in_region(target, |x, y| y >= floor[x as usize]))
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Paths to `(l n - r, k n)` never above `(N^k E^l)^(n-1) N^k E^(l-r)`; 1 at `n = 0`.
pub fn f_r_count(k: usize, l: usize, r: usize, n: usize) -> Result<ExactInteger> {
    require_positive("k", k)?;
    require_positive("l", l)?;
    if r == 0 || r > l {
        return Err(Error::InvalidParameter(format!("r = {r} must lie in 1..={l}")));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let boundary = LatticePath::truncated_staircase(k, l, r, n);
    count_weakly_below(&boundary, boundary.endpoint())
}

/// Paths to `(l n, k n)` never above `(N^k E^l)^n`.
pub fn q_count(k: usize, l: usize, n: usize) -> Result<ExactInteger> {
    require_positive("k", k)?;
    require_positive("l", l)?;
    let boundary = LatticePath::staircase(k, l, n);
    count_weakly_below(&boundary, boundary.endpoint())
}

/// Paths to `(mn, mn)` never below `N (E^m N^m)^(n-1) E^m N^(m-1)`; 1 at `n = 0`.
pub fn fbar_count(m: usize, n: usize) -> Result<ExactInteger> {
    require_positive("m", m)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let boundary = LatticePath::periodic_wall_boundary(m, n);
    count_weakly_above(&boundary, boundary.endpoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    /// Every word with the target's step counts, filtered by the boundary.
    fn brute_force(boundary: &LatticePath, target: Point, above: bool) -> usize {
        let (e, n) = (target.x as usize, target.y as usize);
        let len = e + n;
        let ceil = boundary.ceilings();
        let floor = boundary.floors();
        (0u32..1 << len)
            .filter(|mask| mask.count_ones() as usize == n)
            .filter(|mask| {
                let (mut x, mut y) = (0usize, 0i64);
                (0..len).all(|i| {
                    if mask >> i & 1 == 1 {
                        y += 1;
                    } else {
                        x += 1;
                    }
                    if above { y >= floor[x] } else { y <= ceil[x] }
                })
            })
            .count()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(p("N3E2").to_string(), "NNNEE");
        assert_eq!(p("NE3N3E3N2").compact(), "NE3N3E3N2");
        assert_eq!(p("n e").to_string(), "NE");
        assert!(p("-").is_empty());
        assert!("NX".parse::<LatticePath>().is_err());
        assert_eq!(p("N3E2").endpoint(), Point::new(2, 3));
    }

    #[test]
    fn weakly_below_examples() {
        assert_eq!(count_weakly_below(&p("NE"), Point::new(1, 1)).unwrap(), BigInt::from(2));
        assert_eq!(count_weakly_below(&p("NENE"), Point::new(2, 2)).unwrap(), BigInt::from(5));
        assert_eq!(count_weakly_below(&p("N3E3"), Point::new(3, 3)).unwrap(), BigInt::from(20));
        assert_eq!(brute_force(&p("NENE"), Point::new(2, 2), false), 5);
    }

    #[test]
    fn weakly_above_examples() {
        let b = LatticePath::periodic_wall_boundary(2, 1);
        assert_eq!(b, p("NE2N"));
        assert_eq!(count_weakly_above(&b, Point::new(2, 2)).unwrap(), BigInt::from(3));
        assert_eq!(brute_force(&b, Point::new(2, 2), true), 3);

        // m = 1: N (EN)^(n-1) E gives Catalan numbers
        for n in 1..=8 {
            let b = LatticePath::periodic_wall_boundary(1, n);
            assert_eq!(
                count_weakly_above(&b, b.endpoint()).unwrap(),
                crate::arith::catalan(n as i64).unwrap()
            );
        }
        for b in ["NE2N", "E3", "N", "NENNE"] {
            assert_eq!(count_weakly_above(&p(b), Point::new(0, 0)).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn unreachable_targets() {
        assert!(count_weakly_below(&p("NE"), Point::new(2, 0)).is_err());
        assert!(count_weakly_below(&p("NE"), Point::new(-1, 0)).is_err());
        assert!(count_weakly_below(&p("EN"), Point::new(0, 1)).is_err());
        assert!(count_weakly_above(&p("NE"), Point::new(1, 0)).is_err());
    }

    #[test]
    fn reverse_partitions() {
        let mu = path_to_reverse_partition(&p("NE3N3E3N2"), 6).unwrap();
        assert_eq!(mu.parts(), &[0, 3, 3, 3, 6, 6]);
        assert_eq!(path_to_reverse_partition(&p("N3E2"), 3).unwrap().parts(), &[0, 0, 0]);
        assert_eq!(path_to_reverse_partition(&p("E2N2"), 2).unwrap().parts(), &[2, 2]);
        assert_eq!(
            path_to_reverse_partition(&p("NE"), 2),
            Err(Error::WrongNorthCount { expected: 2, found: 1 })
        );
        assert_eq!(mu.to_path(6).unwrap(), p("NE3N3E3N2"));
        assert!(ReversePartition::new(vec![2, 1]).is_err());
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(f_r_count(1, 1, 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(f_r_count(2, 3, 1, 0).unwrap(), BigInt::one());
        assert_eq!(f_r_count(3, 3, 1, 2).unwrap(), BigInt::from(281));
        assert_eq!(q_count(1, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(q_count(1, 1, 2).unwrap(), BigInt::from(5));
        assert_eq!(q_count(2, 3, 0).unwrap(), BigInt::one());
        assert_eq!(fbar_count(3, 2).unwrap(), BigInt::from(281));
        assert!(f_r_count(2, 2, 3, 1).is_err());
        assert!(f_r_count(2, 2, 0, 1).is_err());
        assert!(q_count(0, 2, 1).is_err());
    }

    #[test]
    fn boundary_always_counts_itself() {
        for s in ["N", "E", "NE", "EN", "N2E3N", "E2N4E", "NENENE"] {
            let b = p(s);
            assert!(count_weakly_below(&b, b.endpoint()).unwrap() >= BigInt::one());
        }
    }

    fn path_strategy() -> impl Strategy<Value = LatticePath> {
        proptest::collection::vec(any::<bool>(), 0..=12).prop_map(|bits| {
            LatticePath::new(bits.into_iter().map(|b| if b { Step::N } else { Step::E }).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reflection_matches_direct_and_brute_force(b in path_strategy()) {
            let end = b.endpoint();
            let reflected = count_weakly_above(&b, end).unwrap();
            prop_assert_eq!(&reflected, &count_weakly_above_direct(&b, end).unwrap());
            prop_assert_eq!(reflected, BigInt::from(brute_force(&b, end, true)));
            let below = count_weakly_below(&b, end).unwrap();
            prop_assert!(below >= BigInt::one());
            prop_assert_eq!(below, BigInt::from(brute_force(&b, end, false)));
        }

        #[test]
        fn partition_path_round_trip(parts in proptest::collection::vec(0usize..6, 0..6), extra in 0usize..3) {
            let mut parts = parts;
            parts.sort();
            let width = parts.last().copied().unwrap_or(0) + extra;
            let mu = ReversePartition::new(parts.clone()).unwrap();
            let path = mu.to_path(width).unwrap();
            prop_assert_eq!(path_to_reverse_partition(&path, parts.len()).unwrap(), mu);
        }

        #[test]
        fn larger_region_never_decreases_count(
            parts in proptest::collection::vec(0usize..5, 1..6),
            shrink in proptest::collection::vec(0usize..3, 6),
        ) {
            let mut upper = parts;
            upper.sort();
            // lower partition: componentwise smaller, still weakly increasing
            let mut lower: Vec<usize> = upper.iter().zip(&shrink).map(|(a, s)| a.saturating_sub(*s)).collect();
            for i in 1..lower.len() {
                lower[i] = lower[i].max(lower[i - 1]);
            }
            let width = *upper.last().unwrap();
            let hi = ReversePartition::new(lower).unwrap().to_path(width).unwrap();
            let lo = ReversePartition::new(upper).unwrap().to_path(width).unwrap();
            prop_assert!(hi.weakly_above(&lo));
            let end = hi.endpoint();
            prop_assert!(count_weakly_below(&hi, end).unwrap() >= count_weakly_below(&lo, end).unwrap());
        }
    }
}
