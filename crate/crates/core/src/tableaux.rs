//! Two-row Young tableaux with horizontal walls.
//!
//! A tableau of shape `(m, m)` is determined by its top row `y_1 < ... < y_m`
//! (the complement in `1..=2m` is the bottom row `x`). Column `i` carries the
//! constraint `x_i < y_i` unless `i` is a wall.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::ExactInteger;
use crate::counting::count_partitions_between;
use crate::error::{Error, Result};
use crate::paths::{count_weakly_above, LatticePath, Point, ReversePartition, Step};

pub const DEFAULT_MAX_WIDTH: usize = 12;

/// Enumeration guard; `WALLCOUNT_MAX_WIDTH` overrides the default.
pub fn max_width() -> usize {
    std::env::var("WALLCOUNT_MAX_WIDTH")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WIDTH)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungBuilding {
    m: usize,
    walls: BTreeSet<usize>,
}

impl YoungBuilding {
    /// `walls` are 1-based column indices in `1..=m`.
    pub fn new(m: usize, walls: impl IntoIterator<Item = usize>) -> Result<Self> {
        let walls: BTreeSet<usize> = walls.into_iter().collect();
        if let Some(bad) = walls.iter().find(|&&i| i == 0 || i > m) {
            return Err(Error::InvalidParameter(format!("wall column {bad} outside 1..={m}")));
        }
        Ok(Self { m, walls })
    }

    pub fn without_walls(m: usize) -> Self {
        Self { m, walls: BTreeSet::new() }
    }

    pub fn all_walls(m: usize) -> Self {
        Self { m, walls: (1..=m).collect() }
    }

    /// `B_m^n`: `n` copies of the `2 x m` block with walls in every column but
    /// the first.
    pub fn periodic(m: usize, n: usize) -> Self {
        let walls = (0..n).flat_map(|j| (2..=m).map(move |i| j * m + i)).collect();
        Self { m: m * n, walls }
    }

    pub fn width(&self) -> usize {
        self.m
    }

    pub fn walls(&self) -> &BTreeSet<usize> {
        &self.walls
    }

    pub fn is_wall(&self, column: usize) -> bool {
        self.walls.contains(&column)
    }

    fn check_guard(&self) -> Result<()> {
        let limit = max_width();
        if self.m > limit {
            return Err(Error::TooLarge { width: self.m, limit });
        }
        Ok(())
    }

    fn admits(&self, top: &[usize], bottom: &[usize]) -> bool {
        (1..=self.m).all(|i| self.is_wall(i) || bottom[i - 1] < top[i - 1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WallTableau {
    bottom: Vec<usize>,
    top: Vec<usize>,
    walls: BTreeSet<usize>,
}

fn complement(top: &[usize], m: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = top.iter().copied().collect();
    (1..=2 * m).filter(|v| !set.contains(v)).collect()
}

impl WallTableau {
    /// Builds the tableau with top row `top` over `building`, checking every invariant.
    pub fn from_top_row(building: &YoungBuilding, top: Vec<usize>) -> Result<Self> {
        let m = building.width();
        if top.len() != m
            || top.windows(2).any(|w| w[0] >= w[1])
            || top.iter().any(|&v| v == 0 || v > 2 * m)
        {
            return Err(Error::InvalidParameter(format!("invalid top row {top:?} for width {m}")));
        }
        let bottom = complement(&top, m);
        if !building.admits(&top, &bottom) {
            return Err(Error::InvalidParameter(format!(
                "top row {top:?} violates a non-wall column constraint"
            )));
        }
        Ok(Self { bottom, top, walls: building.walls.clone() })
    }

    pub fn width(&self) -> usize {
        self.top.len()
    }

    /// `x(T)`.
    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// `y(T)`.
    pub fn top(&self) -> &[usize] {
        &self.top
    }

    /// `w_i = 1` when label `i` sits in the top row.
    pub fn yamanouchi_word(&self) -> Vec<u8> {
        let mut word = vec![0u8; 2 * self.width()];
        for &v in &self.top {
            word[v - 1] = 1;
        }
        word
    }

    /// The word read with `0 -> N`, `1 -> E`.
    pub fn path(&self) -> LatticePath {
        LatticePath::new(
            self.yamanouchi_word()
                .into_iter()
                .map(|b| if b == 1 { Step::E } else { Step::N })
                .collect(),
        )
    }

    /// `mu_i = x_i - i`.
    pub fn reverse_partition(&self) -> ReversePartition {
        ReversePartition::new(self.bottom.iter().enumerate().map(|(i, x)| x - (i + 1)).collect())
            .expect("bottom row is strictly increasing")
    }

    pub fn render(&self) -> String {
        let cell = |v: &usize| format!("{v:>3}");
        let top: String = self.top.iter().map(cell).collect();
        let marks: String = (1..=self.width())
            .map(|i| if self.walls.contains(&i) { "  =" } else { "  ." })
            .collect();
        let bottom: String = self.bottom.iter().map(cell).collect();
        format!("y:{top}\n  {marks}\nx:{bottom}")
    }
}

impl fmt::Display for WallTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Advances `c` (strictly increasing, values in `1..=n`) to the next
/// combination in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - (k - 1 - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn for_each_valid_top(building: &YoungBuilding, mut f: impl FnMut(&[usize], &[usize])) {
    let m = building.width();
    let mut top: Vec<usize> = (1..=m).collect();
    loop {
        let bottom = complement(&top, m);
        if building.admits(&top, &bottom) {
            f(&top, &bottom);
        }
        if !next_combination(&mut top, 2 * m) {
            break;
        }
    }
}

/// All tableaux over `building`, in lexicographic order of the top row.
pub fn enumerate_tableaux(building: &YoungBuilding) -> Result<Vec<WallTableau>> {
    building.check_guard()?;
    let mut out = Vec::new();
    for_each_valid_top(building, |top, bottom| {
        out.push(WallTableau {
            bottom: bottom.to_vec(),
            top: top.to_vec(),
            walls: building.walls.clone(),
        })
    });
    Ok(out)
}

/// `|YT(building)|` without materializing the tableaux.
pub fn count_tableaux(building: &YoungBuilding) -> Result<ExactInteger> {
    building.check_guard()?;
    let mut count = 0u64;
    for_each_valid_top(building, |_, _| count += 1);
    Ok(BigInt::from(count))
}

/// Componentwise lower and upper bounds `(y_min, y_max)` on the top row.
///
/// `y_max[i] = 2i` off the walls; on a wall it is `i + i0` where `i0` is the
/// last non-wall column before `i` (0 if none).
pub fn y_extremes(building: &YoungBuilding) -> (Vec<usize>, Vec<usize>) {
    let m = building.width();
    let y_min = (m + 1..=2 * m).collect();
    let mut last_open = 0;
    let mut y_max = Vec::with_capacity(m);
    for i in 1..=m {
        if building.is_wall(i) {
            y_max.push(i + last_open);
        } else {
            y_max.push(2 * i);
            last_open = i;
        }
    }
    (y_min, y_max)
}

/// The three predicates of the tableau partial order, kept separate because
/// the order is antitone in `y`.
pub fn mu_le(t: &WallTableau, u: &WallTableau) -> bool {
    t.reverse_partition().contained_in(&u.reverse_partition())
}

pub fn path_above(t: &WallTableau, u: &WallTableau) -> bool {
    t.path().weakly_above(&u.path())
}

pub fn y_ge(t: &WallTableau, u: &WallTableau) -> bool {
    t.top.len() == u.top.len() && t.top.iter().zip(&u.top).all(|(a, b)| a >= b)
}

/// Counts every weakly increasing sequence dominated by `upper`, one at a time.
pub fn count_partitions_within(upper: &ReversePartition) -> ExactInteger {
    count_partitions_between(upper, &ReversePartition::zeros(upper.len()))
        .expect("zero sequence is dominated by any reverse partition")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCounts {
    pub tableaux: ExactInteger,
    pub paths_above: ExactInteger,
    pub partitions: ExactInteger,
}

impl BijectionCounts {
    pub fn agree(&self) -> bool {
        self.tableaux == self.paths_above && self.paths_above == self.partitions
    }
}

/// The three cardinalities: tableaux over `building`, paths to `(m, m)` weakly
/// above the path of the maximal tableau, and partitions inside its reverse
/// partition.
pub fn bijection_counts(building: &YoungBuilding) -> Result<BijectionCounts> {
    let m = building.width();
    let (_, y_max) = y_extremes(building);
    let maximal = WallTableau::from_top_row(building, y_max)?;
    let tableaux = count_tableaux(building)?;
    let paths_above = count_weakly_above(&maximal.path(), Point::new(m as i64, m as i64))?;
    let partitions = count_partitions_within(&maximal.reverse_partition());
    Ok(BijectionCounts { tableaux, paths_above, partitions })
}

pub fn verify_bijection(building: &YoungBuilding) -> Result<bool> {
    Ok(bijection_counts(building)?.agree())
}
