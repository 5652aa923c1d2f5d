//! Alternating sign matrices, corner sums, square ice, inflation and keys.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::{Cell, Error, Result, DEFAULT_ENUM_LIMIT};

/// An `n×n` alternating sign matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl TryFrom<Vec<Vec<i8>>> for Asm {
    type Error = Error;
    fn try_from(v: Vec<Vec<i8>>) -> Result<Self> {
        Asm::new(v)
    }
}

impl From<Asm> for Vec<Vec<i8>> {
    fn from(a: Asm) -> Self {
        a.entries
    }
}

fn alternates_to_one(line: impl Iterator<Item = i8>) -> bool {
    let mut sum = 0i32;
    for v in line {
        sum += v as i32;
        if !(0..=1).contains(&sum) {
            return false;
        }
    }
    sum == 1
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAsm("matrix is not square".into()));
        }
        if entries.iter().flatten().any(|v| !(-1..=1).contains(v)) {
            return Err(Error::InvalidAsm("entries must be -1, 0 or 1".into()));
        }
        for i in 0..n {
            if !alternates_to_one(entries[i].iter().copied()) {
                return Err(Error::InvalidAsm(format!("row {}", i + 1)));
            }
            if !alternates_to_one((0..n).map(|k| entries[k][i])) {
                return Err(Error::InvalidAsm(format!("column {}", i + 1)));
            }
        }
        Ok(Asm { entries })
    }

    pub fn from_permutation(w: &Permutation) -> Self {
        let n = w.n();
        let mut entries = vec![vec![0; n]; n];
        for i in 1..=n {
            entries[i - 1][w.at(i) - 1] = 1;
        }
        Asm { entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(&Permutation::identity(n))
    }

    /// The permutation if there are no `-1` entries.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let oneline: Option<Vec<usize>> =
            self.entries.iter().map(|r| r.iter().position(|&v| v == 1).map(|j| j + 1)).collect();
        if !self.negatives().is_empty() {
            return None;
        }
        Permutation::new(oneline?).ok()
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// `A_{ij}`, 1-indexed.
    pub fn at(&self, i: usize, j: usize) -> i8 {
        self.entries[i - 1][j - 1]
    }

    /// `row_{A,i}(j) = Σ_{k ≤ j} A_{ik}`.
    pub fn row_partial(&self, i: usize, j: usize) -> i32 {
        (1..=j).map(|k| self.at(i, k) as i32).sum()
    }

    /// `col_{A,j}(i) = Σ_{k ≤ i} A_{kj}`.
    pub fn col_partial(&self, i: usize, j: usize) -> i32 {
        (1..=i).map(|k| self.at(k, j) as i32).sum()
    }

    /// `N(A)`, the cells holding `-1`.
    pub fn negatives(&self) -> BTreeSet<Cell> {
        self.cells_with(-1)
    }

    pub fn cells_with(&self, v: i8) -> BTreeSet<Cell> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i, j) == v {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// `D(A)`: cells missed by every defining segment.
    ///
    /// From each `1` a segment runs east and another south, each stopping at
    /// the first `-1` or at the edge of the grid.
    pub fn rothe_diagram(&self) -> BTreeSet<Cell> {
        let n = self.n();
        let mut touched = vec![vec![false; n + 1]; n + 1];
        for (i, j) in self.cells_with(1) {
            touched[i][j] = true;
            for k in j + 1..=n {
                touched[i][k] = true;
                if self.at(i, k) == -1 {
                    break;
                }
            }
            for k in i + 1..=n {
                touched[k][j] = true;
                if self.at(k, j) == -1 {
                    break;
                }
            }
        }
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if !touched[i][j] {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Reflection across the antidiagonal: `A'_{ij} = A_{n+1-j, n+1-i}`.
    pub fn antidiagonal_reflection(&self) -> Self {
        let n = self.n();
        let entries =
            (1..=n).map(|i| (1..=n).map(|j| self.at(n + 1 - j, n + 1 - i)).collect()).collect();
        Asm { entries }
    }

    /// Pivots of `cell`, ordered by increasing row.
    pub fn pivots(&self, cell: Cell) -> Vec<Cell> {
        let (a, b) = cell;
        let mut out = Vec::new();
        for i in 1..=a {
            for j in 1..=b {
                if (i, j) == (a, b) || self.at(i, j) != 1 {
                    continue;
                }
                let clean = (i..=a).all(|r| {
                    (j..=b).all(|c| (r, c) == (i, j) || (r, c) == (a, b) || self.at(r, c) == 0)
                });
                if clean {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether `A_{cell} = -1` and the inflation region holds no other negatives.
    pub fn is_removable(&self, cell: Cell) -> bool {
        let (a, b) = cell;
        if self.at(a, b) != -1 {
            return false;
        }
        let piv = self.pivots(cell);
        if piv.len() < 2 {
            return false;
        }
        for l in 0..piv.len() - 1 {
            let (il, _) = piv[l];
            let (_, jn) = piv[l + 1];
            for r in il..=a {
                for c in jn..=b {
                    if (r, c) != (a, b) && self.at(r, c) == -1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn removable_negatives(&self) -> Vec<Cell> {
        self.negatives().into_iter().filter(|&c| self.is_removable(c)).collect()
    }

    /// Remove the `-1` at `cell` together with its pivots, placing `1`s at
    /// `(i_1, j_2), …, (i_{k-1}, j_k)`.
    pub fn inflate(&self, cell: Cell) -> Result<Asm> {
        if !self.is_removable(cell) {
            return Err(Error::NotRemovable(cell));
        }
        let piv = self.pivots(cell);
        let mut e = self.entries.clone();
        e[cell.0 - 1][cell.1 - 1] = 0;
        for &(i, j) in &piv {
            e[i - 1][j - 1] = 0;
        }
        for l in 0..piv.len() - 1 {
            e[piv[l].0 - 1][piv[l + 1].1 - 1] = 1;
        }
        Asm::new(e).map_err(|_| Error::NotRemovable(cell))
    }

    /// Inverse of inflation, using the pivots of `cell` that sit in `rows`.
    pub fn deflate(&self, cell: Cell, rows: &[usize]) -> Result<Asm> {
        let bad = || Error::InvalidPivots(cell, rows.to_vec());
        if !self.rothe_diagram().contains(&cell) {
            return Err(Error::NotInDiagram(cell));
        }
        let mut rows: Vec<usize> = rows.to_vec();
        rows.sort_unstable();
        rows.dedup();
        let chosen: Vec<Cell> = self.pivots(cell).into_iter().filter(|p| rows.contains(&p.0)).collect();
        if rows.is_empty() || chosen.len() != rows.len() {
            return Err(bad());
        }
        let (a, b) = cell;
        let k = chosen.len();
        let mut e = self.entries.clone();
        for &(i, j) in &chosen {
            e[i - 1][j - 1] = 0;
        }
        e[chosen[0].0 - 1][b - 1] = 1;
        for l in 0..k - 1 {
            e[chosen[l + 1].0 - 1][chosen[l].1 - 1] = 1;
        }
        e[a - 1][chosen[k - 1].1 - 1] = 1;
        e[a - 1][b - 1] = -1;
        let out = Asm::new(e).map_err(|_| bad())?;
        if out.inflate(cell).as_ref() != Ok(self) {
            return Err(bad());
        }
        Ok(out)
    }

    /// The key: inflate removable `-1`s row by row, left to right.
    pub fn key(&self) -> Permutation {
        let mut a = self.clone();
        loop {
            let negs = a.negatives();
            if negs.is_empty() {
                return a.to_permutation().expect("inflation ends at a permutation matrix");
            }
            let next = negs
                .into_iter()
                .find_map(|c| a.inflate(c).ok())
                .expect("some negative entry is always removable");
            a = next;
        }
    }

    pub fn corner_sum(&self) -> CornerSum {
        let n = self.n();
        let mut r = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                let v = r[i - 1][j] as i64 + r[i][j - 1] as i64 - r[i - 1][j - 1] as i64
                    + self.at(i, j) as i64;
                r[i][j] = v as usize;
            }
        }
        CornerSum { values: r }
    }

    pub fn to_ice(&self) -> IceConfig {
        let n = self.n();
        let horiz = (1..=n).map(|i| (0..=n).map(|k| self.row_partial(i, k) == 1).collect()).collect();
        let vert = (0..=n).map(|k| (1..=n).map(|j| self.col_partial(k, j) == 1).collect()).collect();
        IceConfig { n, horiz, vert }
    }
}

/// `A ≤ B` iff `r_A ≥ r_B` entrywise.
pub fn asm_leq(a: &Asm, b: &Asm) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let (ra, rb) = (a.corner_sum(), b.corner_sum());
    Ok(ra.values.iter().flatten().zip(rb.values.iter().flatten()).all(|(x, y)| x >= y))
}

/// Corner sums `r(i,j)` for `0 ≤ i, j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CornerSum {
    values: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for CornerSum {
    type Error = Error;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self> {
        CornerSum::new(v)
    }
}

impl From<CornerSum> for Vec<Vec<usize>> {
    fn from(c: CornerSum) -> Self {
        c.values
    }
}

impl CornerSum {
    /// Validates the characterization: boundary values and 0/1 steps.
    pub fn new(values: Vec<Vec<usize>>) -> Result<Self> {
        let m = values.len();
        if m == 0 || values.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidCornerSum("table must be (n+1)×(n+1)".into()));
        }
        let n = m - 1;
        for i in 0..=n {
            if values[i][0] != 0 || values[0][i] != 0 || values[i][n] != i || values[n][i] != i {
                return Err(Error::InvalidCornerSum(format!("boundary at index {i}")));
            }
        }
        for i in 0..=n {
            for j in 1..=n {
                let step = |a: usize, b: usize| b >= a && b - a <= 1;
                if !step(values[i][j - 1], values[i][j]) || !step(values[j - 1][i], values[j][i]) {
                    return Err(Error::InvalidCornerSum(format!("step near ({i},{j})")));
                }
            }
        }
        Ok(CornerSum { values })
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn at(&self, i: usize, j: usize) -> usize {
        self.values[i][j]
    }

    pub fn values(&self) -> &[Vec<usize>] {
        &self.values
    }

    /// `A_{ij} = r(i,j) + r(i-1,j-1) − r(i-1,j) − r(i,j-1)`.
    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.n();
        let r = |i: usize, j: usize| self.values[i][j] as i64;
        let entries = (1..=n)
            .map(|i| (1..=n).map(|j| (r(i, j) + r(i - 1, j - 1) - r(i - 1, j) - r(i, j - 1)) as i8).collect())
            .collect();
        Asm::new(entries)
    }
}

/// Every ASM of size `n`, lexicographic by row vectors.
pub fn enumerate_asm(n: usize) -> Result<Vec<Asm>> {
    enumerate_asm_with_limit(n, DEFAULT_ENUM_LIMIT)
}

pub fn enumerate_asm_with_limit(n: usize, limit: usize) -> Result<Vec<Asm>> {
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for i in 0..=n {
        r[i][n] = i;
        r[n][i] = i;
    }
    let mut out = Vec::new();
    fill_corner(&mut r, n, 1, 1, &mut out);
    out.sort();
    Ok(out)
}

fn fill_corner(r: &mut Vec<Vec<usize>>, n: usize, i: usize, j: usize, out: &mut Vec<Asm>) {
    if n <= 1 || i == n {
        let cs = CornerSum { values: r.clone() };
        out.push(cs.to_asm().expect("corner sums from the characterization give an ASM"));
        return;
    }
    let (ni, nj) = if j + 1 == n { (i + 1, 1) } else { (i, j + 1) };
    let left = r[i][j - 1];
    let up = r[i - 1][j];
    for v in [left, left + 1] {
        if v < up || v > up + 1 {
            continue;
        }
        if j == n - 1 && !(v + 1 >= i && v <= i) {
            continue;
        }
        if i == n - 1 && !(v + 1 >= j && v <= j) {
            continue;
        }
        r[i][j] = v;
        fill_corner(r, n, ni, nj, out);
    }
}

/// A square ice configuration on the framed `(n+2)×(n+2)` grid.
///
/// `horiz[i-1][k]` is the edge of row `i` between columns `k` and `k+1`
/// (`k = 0` and `k = n` are boundary edges); it is `true` when the arrow points
/// west. `vert[k][j-1]` is the edge of column `j` between rows `k` and `k+1`;
/// it is `true` when the arrow points south.
///
/// Vertex states are written with one letter each, named by the two edges
/// whose arrows point into the vertex:
///
/// | letter | inward edges | ASM entry | tile       |
/// |--------|--------------|-----------|------------|
/// | `H`    | west, east   | `1`       | `ElbowSE`  |
/// | `V`    | north, south | `-1`      | `ElbowNW`  |
/// | `N`    | north, east  | `0`       | `Cross`    |
/// | `S`    | south, west  | `0`       | `Blank`    |
/// | `L`    | east, south  | `0`       | `Horizontal` |
/// | `R`    | west, north  | `0`       | `Vertical` |
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IceConfig {
    n: usize,
    horiz: Vec<Vec<bool>>,
    vert: Vec<Vec<bool>>,
}

impl IceConfig {
    pub fn from_edges(horiz: Vec<Vec<bool>>, vert: Vec<Vec<bool>>) -> Result<Self> {
        let n = horiz.len();
        if horiz.iter().any(|r| r.len() != n + 1) || vert.len() != n + 1 || vert.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidIce("edge arrays have the wrong shape".into()));
        }
        let ice = IceConfig { n, horiz, vert };
        ice.validate()?;
        Ok(ice)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.horiz[i][0] || !self.horiz[i][n] {
                return Err(Error::InvalidIce(format!("horizontal boundary of row {}", i + 1)));
            }
            if self.vert[0][i] || !self.vert[n][i] {
                return Err(Error::InvalidIce(format!("vertical boundary of column {}", i + 1)));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let (w, e, no, s) = self.inward(i, j);
                if [w, e, no, s].iter().filter(|&&b| b).count() != 2 {
                    return Err(Error::InvalidIce(format!("vertex ({i},{j}) is not 2-in 2-out")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Which of the west, east, north, south edges point into vertex `(i,j)`.
    fn inward(&self, i: usize, j: usize) -> (bool, bool, bool, bool) {
        let w = !self.horiz[i - 1][j - 1];
        let e = self.horiz[i - 1][j];
        let no = self.vert[i - 1][j - 1];
        let s = !self.vert[i][j - 1];
        (w, e, no, s)
    }

    pub fn state(&self, i: usize, j: usize) -> char {
        match self.inward(i, j) {
            (true, true, false, false) => 'H',
            (false, false, true, true) => 'V',
            (false, true, true, false) => 'N',
            (true, false, false, true) => 'S',
            (false, true, false, true) => 'L',
            (true, false, true, false) => 'R',
            _ => unreachable!("validated 2-in 2-out"),
        }
    }

    pub fn to_letters(&self) -> Vec<String> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| self.state(i, j)).collect()).collect()
    }

    pub fn from_letters(rows: &[String]) -> Result<Self> {
        let n = rows.len();
        let grid: Vec<Vec<char>> = rows.iter().map(|r| r.chars().collect()).collect();
        if grid.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidIce("letter grid is not square".into()));
        }
        let mut horiz: Vec<Vec<Option<bool>>> = vec![vec![None; n + 1]; n];
        let mut vert: Vec<Vec<Option<bool>>> = vec![vec![None; n]; n + 1];
        let set = |slot: &mut Option<bool>, v: bool| -> Result<()> {
            match *slot {
                Some(old) if old != v => Err(Error::InvalidIce("neighbouring states disagree".into())),
                _ => {
                    *slot = Some(v);
                    Ok(())
                }
            }
        };
        for i in 1..=n {
            for j in 1..=n {
                let (w, e, no, s) = match grid[i - 1][j - 1] {
                    'H' => (true, true, false, false),
                    'V' => (false, false, true, true),
                    'N' => (false, true, true, false),
                    'S' => (true, false, false, true),
                    'L' => (false, true, false, true),
                    'R' => (true, false, true, false),
                    c => return Err(Error::InvalidIce(format!("unknown state letter {c:?}"))),
                };
                set(&mut horiz[i - 1][j - 1], !w)?;
                set(&mut horiz[i - 1][j], e)?;
                set(&mut vert[i - 1][j - 1], no)?;
                set(&mut vert[i][j - 1], !s)?;
            }
        }
        let horiz = horiz.into_iter().map(|r| r.into_iter().map(|v| v.unwrap_or(false)).collect()).collect();
        let vert = vert.into_iter().map(|r| r.into_iter().map(|v| v.unwrap_or(false)).collect()).collect();
        IceConfig::from_edges(horiz, vert)
    }

    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.n;
        let entries = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| match self.state(i, j) {
                        'H' => 1,
                        'V' => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Asm::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure_asm() -> Asm {
        Asm::new(vec![vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, -1, 1], vec![0, 0, 1, 0]]).unwrap()
    }

    fn seven() -> Asm {
        Asm::new(vec![
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 1, 0, 0, 0, -1, 1],
            vec![1, 0, -1, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(Asm::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).is_ok());
        assert!(Asm::new(vec![vec![1, -1, 1], vec![0, 1, 0], vec![0, 1, 0]]).is_err());
    }

    #[test]
    fn corner_sums() {
        let id = Asm::identity(4).corner_sum();
        for i in 0..=4 {
            for j in 0..=4 {
                assert_eq!(id.at(i, j), i.min(j));
            }
        }
        let a = figure_asm();
        assert_eq!(a.corner_sum().to_asm().unwrap(), a);
        let mut bad = id.values().to_vec();
        bad[2][2] = 0;
        assert!(CornerSum::new(bad).is_err());
    }

    #[test]
    fn diagram_of_figure() {
        let a = figure_asm();
        assert_eq!(a.rothe_diagram(), [(1, 1), (1, 2), (2, 1)].into_iter().collect());
        assert_eq!(a.negatives(), [(3, 3)].into_iter().collect());
        assert!(Asm::identity(3).rothe_diagram().is_empty());
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_asm(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42, 429]);
        assert!(enumerate_asm(7).is_err());
    }

    #[test]
    fn ice_roundtrip_figure() {
        let a = figure_asm();
        let ice = a.to_ice();
        assert_eq!(ice.to_asm().unwrap(), a);
        assert_eq!(IceConfig::from_letters(&ice.to_letters()).unwrap(), ice);
        let id = Asm::identity(3).to_ice().to_letters();
        assert_eq!(id, vec!["HLL", "RHL", "RRH"]);
    }

    #[test]
    fn pivots_of_2143() {
        let a = Asm::from_permutation(&"2143".parse().unwrap());
        assert_eq!(a.pivots((3, 3)), vec![(1, 2), (2, 1)]);
        assert!(a.pivots((1, 1)).is_empty());
    }

    #[test]
    fn key_of_figure() {
        let a = seven();
        assert_eq!(a.key(), "5241763".parse().unwrap());
        assert_eq!(a.pivots((5, 6)), vec![(1, 6), (3, 5), (4, 4), (5, 2)]);
        assert_eq!(a.removable_negatives(), vec![(5, 6), (6, 3)]);
    }

    #[test]
    fn inflation_figure_staircase() {
        // 1s on a staircase north-west of a -1, as in the inflation picture
        let a = Asm::new(vec![
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, -1, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(a.pivots((4, 4)), vec![(1, 4), (2, 3), (3, 2), (4, 1)]);
        let b = a.inflate((4, 4)).unwrap();
        assert_eq!(b.cells_with(1), [(1, 3), (2, 2), (3, 1), (4, 5), (5, 4)].into_iter().collect());
        assert_eq!(b.deflate((4, 4), &[1, 2, 3]).unwrap(), a);
    }

    #[test]
    fn deflation_figure() {
        // first and third pivots of (4,4)
        let a = Asm::new(vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0],
        ])
        .unwrap();
        let d = a.deflate((4, 4), &[1, 3]).unwrap();
        assert_eq!(d.cells_with(1), [(1, 4), (2, 2), (3, 3), (4, 1), (4, 5), (5, 4)].into_iter().collect());
        assert_eq!(d.negatives(), [(4, 4)].into_iter().collect());
        assert!(a.deflate((4, 4), &[]).is_err());
        assert!(a.deflate((4, 5), &[1]).is_err());
    }

    #[test]
    fn leq_extremes() {
        let id = Asm::identity(4);
        let w0 = Asm::from_permutation(&Permutation::longest(4));
        assert!(asm_leq(&id, &id).unwrap());
        assert!(asm_leq(&id, &w0).unwrap());
        assert!(!asm_leq(&w0, &id).unwrap());
        assert!(asm_leq(&id, &Asm::identity(3)).is_err());
    }
}
