//! Bumpless pipe dreams.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::asm::{enumerate_asm_with_limit, Asm, CornerSum};
use crate::perm::{demazure_product, Permutation, Word};
use crate::poly::Polynomial;
use crate::vex::Partition;
use crate::{Cell, Error, Result, DEFAULT_ENUM_LIMIT, DEFAULT_POLY_LIMIT};

const N: u8 = 1;
const E: u8 = 2;
const S: u8 = 4;
const W: u8 = 8;

/// One of the six tiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Blank,
    Horizontal,
    Vertical,
    Cross,
    /// Pipe enters from the bottom and leaves to the right.
    ElbowSE,
    /// Pipe enters from the left and leaves through the top.
    ElbowNW,
}

impl Tile {
    pub const ALL: [Tile; 6] =
        [Tile::Blank, Tile::Horizontal, Tile::Vertical, Tile::Cross, Tile::ElbowSE, Tile::ElbowNW];

    /// Bit set of the sides carrying a pipe.
    fn edges(self) -> u8 {
        match self {
            Tile::Blank => 0,
            Tile::Horizontal => W | E,
            Tile::Vertical => N | S,
            Tile::Cross => N | E | S | W,
            Tile::ElbowSE => S | E,
            Tile::ElbowNW => N | W,
        }
    }

    fn from_edges(e: u8) -> Option<Tile> {
        Tile::ALL.into_iter().find(|t| t.edges() == e)
    }

    pub fn north(self) -> bool {
        self.edges() & N != 0
    }
    pub fn east(self) -> bool {
        self.edges() & E != 0
    }
    pub fn south(self) -> bool {
        self.edges() & S != 0
    }
    pub fn west(self) -> bool {
        self.edges() & W != 0
    }

    pub fn is_elbow(self) -> bool {
        matches!(self, Tile::ElbowSE | Tile::ElbowNW)
    }

    /// Serialization code.
    pub fn code(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Horizontal => '-',
            Tile::Vertical => '|',
            Tile::Cross => '+',
            Tile::ElbowSE => 'L',
            Tile::ElbowNW => 'J',
        }
    }

    pub fn from_code(c: char) -> Option<Tile> {
        Tile::ALL.into_iter().find(|t| t.code() == c)
    }

    pub fn glyph(self) -> char {
        match self {
            Tile::Blank => '·',
            Tile::Horizontal => '─',
            Tile::Vertical => '│',
            Tile::Cross => '┼',
            Tile::ElbowSE => '╭',
            Tile::ElbowNW => '╯',
        }
    }
}

/// An `n×n` bumpless pipe dream.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BpdJson", into = "BpdJson")]
pub struct Bpd {
    tiles: Vec<Vec<Tile>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BpdJson {
    pub n: usize,
    pub tiles: Vec<String>,
}

impl TryFrom<BpdJson> for Bpd {
    type Error = Error;
    fn try_from(j: BpdJson) -> Result<Self> {
        let b = Bpd::from_rows(&j.tiles)?;
        if b.n() != j.n {
            return Err(Error::SizeMismatch(j.n, b.n()));
        }
        Ok(b)
    }
}

impl From<Bpd> for BpdJson {
    fn from(b: Bpd) -> Self {
        BpdJson { n: b.n(), tiles: b.rows() }
    }
}

/// Which kind of rectangle move produced a pipe dream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Droop,
    KDroop,
    Local,
    InverseLocal,
}

/// A move, recorded as the rectangle whose boundary was rerouted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub nw: Cell,
    pub se: Cell,
}

impl Bpd {
    pub fn new(tiles: Vec<Vec<Tile>>) -> Result<Self> {
        let n = tiles.len();
        if tiles.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBpd("grid is not square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let t = tiles[i][j];
                let north = if i == 0 { false } else { tiles[i - 1][j].south() };
                let west = if j == 0 { false } else { tiles[i][j - 1].east() };
                let south = if i + 1 == n { true } else { tiles[i + 1][j].north() };
                let east = if j + 1 == n { true } else { tiles[i][j + 1].west() };
                if t.north() != north || t.west() != west || t.south() != south || t.east() != east {
                    return Err(Error::InvalidBpd(format!("tile at ({},{}) does not connect", i + 1, j + 1)));
                }
            }
        }
        Ok(Bpd { tiles })
    }

    pub fn from_rows<T: AsRef<str>>(rows: &[T]) -> Result<Self> {
        let tiles = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .map(|c| Tile::from_code(c).ok_or_else(|| Error::Parse(format!("unknown tile code {c:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Bpd::new(tiles)
    }

    pub fn rows(&self) -> Vec<String> {
        self.tiles.iter().map(|r| r.iter().map(|t| t.code()).collect()).collect()
    }

    pub fn n(&self) -> usize {
        self.tiles.len()
    }

    /// Tile at `(i, j)`, 1-indexed.
    pub fn at(&self, i: usize, j: usize) -> Tile {
        self.tiles[i - 1][j - 1]
    }

    pub fn tiles(&self) -> &[Vec<Tile>] {
        &self.tiles
    }

    fn cells_of(&self, t: Tile) -> BTreeSet<Cell> {
        let n = self.n();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i, j) == t {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// `D(P)`.
    pub fn blanks(&self) -> BTreeSet<Cell> {
        self.cells_of(Tile::Blank)
    }

    /// `U(P)`.
    pub fn upward_elbows(&self) -> BTreeSet<Cell> {
        self.cells_of(Tile::ElbowNW)
    }

    /// `C(P)`.
    pub fn crosses(&self) -> BTreeSet<Cell> {
        self.cells_of(Tile::Cross)
    }

    pub fn to_asm(&self) -> Asm {
        let entries = self
            .tiles
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| match t {
                        Tile::ElbowSE => 1,
                        Tile::ElbowNW => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Asm::new(entries).expect("a valid pipe dream gives an alternating sign matrix")
    }

    /// Crossings in reading order with their letters `r(i,j) − 1`.
    pub fn labelled_crossings(&self) -> Vec<(Cell, usize)> {
        let r = self.to_asm().corner_sum();
        let n = self.n();
        let mut out = Vec::new();
        for j in 1..=n {
            for i in (1..=n).rev() {
                if self.at(i, j) == Tile::Cross {
                    out.push(((i, j), r.at(i, j) - 1));
                }
            }
        }
        out
    }

    /// Letter of a crossing counted from the picture: pipes passing through
    /// the east side of column `j` at or above row `i`, less one.
    pub fn geometric_label(&self, cell: Cell) -> usize {
        let (i, j) = cell;
        (1..=i).filter(|&k| self.at(k, j).east()).count() - 1
    }

    pub fn reading_word(&self) -> Word {
        Word(self.labelled_crossings().into_iter().map(|(_, a)| a).collect())
    }

    /// `δ(P)`, the Demazure product of the reading word.
    pub fn demazure(&self) -> Permutation {
        demazure_product(&self.reading_word(), self.n()).expect("letters lie in [n-1]")
    }

    /// Sweep labels through the grid: columns left to right, each bottom to
    /// top. `at_cross` maps the south and west labels at a crossing to the
    /// north and east ones.
    fn sweep(&self, mut at_cross: impl FnMut(usize, usize) -> (usize, usize)) -> Permutation {
        let n = self.n();
        // east-edge label of each row, from the previous column
        let mut west = vec![0usize; n + 1];
        for j in 1..=n {
            let mut south = j;
            for i in (1..=n).rev() {
                let (up, right) = match self.at(i, j) {
                    Tile::Blank => (0, 0),
                    Tile::Horizontal => (0, west[i]),
                    Tile::Vertical => (south, 0),
                    Tile::ElbowSE => (0, south),
                    Tile::ElbowNW => (west[i], 0),
                    Tile::Cross => at_cross(south, west[i]),
                };
                west[i] = right;
                south = up;
            }
        }
        Permutation::new(west[1..].to_vec()).expect("each row carries exactly one pipe out")
    }

    /// `δ(P)` by following labels; the larger label leaves every crossing northward.
    pub fn demazure_graphical(&self) -> Permutation {
        self.sweep(|s, w| (s.max(w), s.min(w)))
    }

    /// The permutation traced by the pipes themselves.
    pub fn pipe_permutation(&self) -> Permutation {
        self.sweep(|s, w| (s, w))
    }

    /// How many times each pair of pipes (named by starting column) crosses.
    pub fn crossing_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        self.sweep(|s, w| {
            *counts.entry((s.min(w), s.max(w))).or_insert(0) += 1;
            (s, w)
        });
        counts
    }

    /// Reduced iff `|C(P)| = ℓ(δ(P))`.
    pub fn is_reduced(&self) -> bool {
        self.crosses().len() == self.demazure().length()
    }

    /// `∏_{D} β(x_i ⊕ y_j) · ∏_{U} (1 + β(x_i ⊕ y_j))`.
    pub fn weight(&self) -> Polynomial {
        let b = Polynomial::beta();
        let mut out = Polynomial::one();
        for (i, j) in self.blanks() {
            out = &out * &(&b * &Polynomial::oplus(i, j));
        }
        for (i, j) in self.upward_elbows() {
            out = &out * &(&Polynomial::one() + &(&b * &Polynomial::oplus(i, j)));
        }
        out
    }

    /// Reroute the pipe edges along the boundary of `[r1,r2]×[c1,c2]`.
    ///
    /// Returns `None` when the result is not a valid pipe dream.
    pub fn toggle_rectangle(&self, nw: Cell, se: Cell) -> Option<Bpd> {
        let ((r1, c1), (r2, c2)) = (nw, se);
        if r1 >= r2 || c1 >= c2 || r2 > self.n() || c2 > self.n() {
            return None;
        }
        let mut mask = vec![vec![0u8; self.n() + 1]; self.n() + 1];
        for r in [r1, r2] {
            for c in c1..=c2 {
                if c < c2 {
                    mask[r][c] ^= E;
                }
                if c > c1 {
                    mask[r][c] ^= W;
                }
            }
        }
        for c in [c1, c2] {
            for r in r1..=r2 {
                if r < r2 {
                    mask[r][c] ^= S;
                }
                if r > r1 {
                    mask[r][c] ^= N;
                }
            }
        }
        let mut tiles = self.tiles.clone();
        for r in r1..=r2 {
            for c in c1..=c2 {
                if mask[r][c] != 0 {
                    tiles[r - 1][c - 1] = Tile::from_edges(tiles[r - 1][c - 1].edges() ^ mask[r][c])?;
                }
            }
        }
        Bpd::new(tiles).ok()
    }

    fn elbows_in(&self, nw: Cell, se: Cell) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in nw.0..=se.0 {
            for c in nw.1..=se.1 {
                if self.at(r, c).is_elbow() {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Droops: a downward elbow at `(i,j)` moves to a blank `(a,b)`.
    pub fn droop_moves(&self) -> Vec<(Move, Bpd)> {
        let n = self.n();
        let mut out = Vec::new();
        for (i, j) in self.cells_of(Tile::ElbowSE) {
            for a in i + 1..=n {
                for b in j + 1..=n {
                    if self.at(a, b) != Tile::Blank || self.elbows_in((i, j), (a, b)) != [(i, j)] {
                        continue;
                    }
                    if let Some(p) = self.toggle_rectangle((i, j), (a, b)) {
                        out.push((Move { kind: MoveKind::Droop, nw: (i, j), se: (a, b) }, p));
                    }
                }
            }
        }
        out
    }

    /// K-theoretic droops into an upward elbow at `(a,b)`.
    pub fn kdroop_moves(&self) -> Vec<(Move, Bpd)> {
        let mut out = Vec::new();
        for (i, j) in self.cells_of(Tile::ElbowSE) {
            for (a, b) in self.upward_elbows() {
                if a <= i || b <= j {
                    continue;
                }
                let elbows = self.elbows_in((i, j), (a, b));
                if elbows.len() != 3 {
                    continue;
                }
                let third = *elbows.iter().find(|&&c| c != (i, j) && c != (a, b)).unwrap();
                if self.at(third.0, third.1) != Tile::ElbowSE {
                    continue;
                }
                let se = if third.0 == a && third.1 > j && third.1 < b {
                    third
                } else if third.1 == b && third.0 > i && third.0 < a {
                    third
                } else {
                    continue;
                };
                if let Some(p) = self.toggle_rectangle((i, j), se) {
                    out.push((Move { kind: MoveKind::KDroop, nw: (i, j), se }, p));
                }
            }
        }
        out
    }

    /// Every deflation of the underlying matrix, as pipe dreams.
    pub fn deflations(&self) -> Vec<Bpd> {
        let a = self.to_asm();
        let mut out = Vec::new();
        for cell in a.rothe_diagram() {
            let rows: Vec<usize> = a.pivots(cell).iter().map(|p| p.0).collect();
            for mask in 1u32..(1 << rows.len()) {
                let pick: Vec<usize> =
                    rows.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &r)| r).collect();
                if let Ok(d) = a.deflate(cell, &pick) {
                    out.push(phi(&d));
                }
            }
        }
        out
    }

    /// The cells of `⋃_{(i,j) ∈ D(P)} [1,i]×[1,j]`.
    pub fn mutable_region(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for (i, j) in self.blanks() {
            for r in 1..=i {
                for c in 1..=j {
                    out.insert((r, c));
                }
            }
        }
        out
    }

    /// Reflection across the antidiagonal, which swaps blanks and crosses.
    pub fn antidiagonal_involution(&self) -> Bpd {
        phi(&self.to_asm().antidiagonal_reflection())
    }

    /// Box-drawing picture, one line per row.
    pub fn render(&self, ascii_safe: bool) -> String {
        let mut s = String::new();
        for row in &self.tiles {
            for t in row {
                s.push(if ascii_safe { t.code() } else { t.glyph() });
            }
            s.push('\n');
        }
        s
    }

    /// The pipe dream with the given blanks and crosses, if one exists.
    pub fn from_blanks_and_crosses(n: usize, blanks: &BTreeSet<Cell>, crosses: &BTreeSet<Cell>) -> Result<Bpd> {
        let mut r = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                let step = if blanks.contains(&(i, j)) {
                    0
                } else if crosses.contains(&(i, j)) {
                    2
                } else {
                    1
                };
                r[i][j] = r[i - 1][j - 1] + step;
            }
        }
        let bad = || Error::InvalidBpd("no pipe dream has these blank and crossing tiles".into());
        let asm = CornerSum::new(r).and_then(|c| c.to_asm()).map_err(|_| bad())?;
        let p = phi(&asm);
        if p.blanks() != *blanks || p.crosses() != *crosses {
            return Err(bad());
        }
        Ok(p)
    }
}

impl fmt::Display for Bpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// `Φ`: tiles are read off the row and column partial sums.
pub fn phi(a: &Asm) -> Bpd {
    let n = a.n();
    let mut tiles = vec![vec![Tile::Blank; n]; n];
    let mut col = vec![0i32; n + 1];
    for i in 1..=n {
        let mut row = 0i32;
        for j in 1..=n {
            let west = row == 1;
            let north = col[j] == 1;
            row += a.at(i, j) as i32;
            col[j] += a.at(i, j) as i32;
            let e = (if north { N } else { 0 })
                | (if west { W } else { 0 })
                | (if row == 1 { E } else { 0 })
                | (if col[j] == 1 { S } else { 0 });
            tiles[i - 1][j - 1] = Tile::from_edges(e).expect("partial sums give one of the six tiles");
        }
    }
    Bpd { tiles }
}

/// `Φ⁻¹`.
pub fn phi_inv(p: &Bpd) -> Asm {
    p.to_asm()
}

/// The Rothe pipe dream of `w`.
pub fn rothe_bpd(w: &Permutation) -> Bpd {
    phi(&Asm::from_permutation(w))
}

/// All pipe dreams of size `n`, in the order of [`enumerate_asm_with_limit`].
pub fn enumerate_bpd(n: usize) -> Result<Vec<Bpd>> {
    enumerate_bpd_with_limit(n, DEFAULT_ENUM_LIMIT)
}

pub fn enumerate_bpd_with_limit(n: usize, limit: usize) -> Result<Vec<Bpd>> {
    Ok(enumerate_asm_with_limit(n, limit)?.iter().map(phi).collect())
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimit { n, limit })
    } else {
        Ok(())
    }
}

fn closure(start: Bpd, step: impl Fn(&Bpd) -> Vec<Bpd>) -> BTreeSet<Bpd> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        for q in step(&p) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// `Pipes(w)`: closure of the Rothe pipe dream under droops and K-droops.
pub fn pipes(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    pipes_with_limit(w, DEFAULT_POLY_LIMIT)
}

pub fn pipes_with_limit(w: &Permutation, limit: usize) -> Result<BTreeSet<Bpd>> {
    check_limit(w.n(), limit)?;
    Ok(closure(rothe_bpd(w), |p| {
        p.droop_moves().into_iter().chain(p.kdroop_moves()).map(|(_, q)| q).collect()
    }))
}

/// `Pipes(w)` as the closure under all deflations.
pub fn pipes_by_deflation(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    check_limit(w.n(), DEFAULT_POLY_LIMIT)?;
    Ok(closure(rothe_bpd(w), Bpd::deflations))
}

/// `Pipes(w)` by filtering every pipe dream of size `n`.
pub fn pipes_by_filter(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    Ok(enumerate_bpd(w.n())?.into_iter().filter(|p| p.demazure() == *w).collect())
}

/// Reduced elements of `Pipes(w)`.
pub fn rpipes(w: &Permutation) -> Result<BTreeSet<Bpd>> {
    Ok(pipes(w)?.into_iter().filter(Bpd::is_reduced).collect())
}

/// A pipe dream with a subset of its upward elbows marked.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MarkedBpdJson", into = "MarkedBpdJson")]
pub struct MarkedBpd {
    base: Bpd,
    marks: BTreeSet<Cell>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarkedBpdJson {
    pub n: usize,
    pub tiles: Vec<String>,
    pub marks: Vec<[usize; 2]>,
}

impl TryFrom<MarkedBpdJson> for MarkedBpd {
    type Error = Error;
    fn try_from(j: MarkedBpdJson) -> Result<Self> {
        let base = Bpd::try_from(BpdJson { n: j.n, tiles: j.tiles })?;
        MarkedBpd::new(base, j.marks.iter().map(|m| (m[0], m[1])).collect())
    }
}

impl From<MarkedBpd> for MarkedBpdJson {
    fn from(m: MarkedBpd) -> Self {
        MarkedBpdJson { n: m.base.n(), tiles: m.base.rows(), marks: m.marks.iter().map(|&(i, j)| [i, j]).collect() }
    }
}

impl MarkedBpd {
    pub fn new(base: Bpd, marks: BTreeSet<Cell>) -> Result<Self> {
        if !marks.is_subset(&base.upward_elbows()) {
            return Err(Error::InvalidBpd("marks must sit on upward elbows".into()));
        }
        Ok(MarkedBpd { base, marks })
    }

    pub fn base(&self) -> &Bpd {
        &self.base
    }

    pub fn marks(&self) -> &BTreeSet<Cell> {
        &self.marks
    }

    /// `β^{|D|+|S|−ℓ(δ)} ∏_{D ∪ S} (x_i ⊕ y_j)`.
    pub fn weight(&self) -> Polynomial {
        let ell = self.base.demazure().length();
        let d = self.base.blanks();
        let k = (d.len() + self.marks.len()) as u32 - ell as u32;
        let mut out = Polynomial::beta().pow(k);
        for &(i, j) in d.iter().chain(&self.marks) {
            out = &out * &Polynomial::oplus(i, j);
        }
        out
    }
}

/// Every marking of every element of `Pipes(w)`.
pub fn mpipes(w: &Permutation) -> Result<BTreeSet<MarkedBpd>> {
    let mut out = BTreeSet::new();
    for p in pipes(w)? {
        let u: Vec<Cell> = p.upward_elbows().into_iter().collect();
        for mask in 0u64..(1 << u.len()) {
            let marks = u.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect();
            out.insert(MarkedBpd { base: p.clone(), marks });
        }
    }
    Ok(out)
}

/// `β^{−ℓ(w)} Σ_{P ∈ Pipes(w)} wt(P)`.
pub fn grothendieck_bpd(w: &Permutation) -> Result<Polynomial> {
    let total: Polynomial = pipes(w)?.iter().map(Bpd::weight).sum();
    Ok(total.div_beta_pow(w.length() as u32).expect("every weight carries at least β^ℓ"))
}

/// `Σ_{P reduced} ∏_{D(P)} (x_i − y_j)`.
pub fn schubert_bpd(w: &Permutation) -> Result<Polynomial> {
    Ok(rpipes(w)?
        .iter()
        .map(|p| p.blanks().into_iter().map(|(i, j)| &Polynomial::x(i) - &Polynomial::y(j)).product::<Polynomial>())
        .sum())
}

/// `λ^{(w)}`, the mutable region of the Rothe pipe dream.
pub fn lambda_of(w: &Permutation) -> Partition {
    Partition::from_cells(&rothe_bpd(w).mutable_region()).expect("a union of rectangles at the origin")
}

/// A tiling of a Young diagram in which pipes enter through the bottom of
/// columns and leave through the right of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionBpdJson", into = "PartitionBpdJson")]
pub struct PartitionBpd {
    shape: Partition,
    tiles: Vec<Vec<Tile>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionBpdJson {
    pub shape: Vec<usize>,
    pub tiles: Vec<String>,
}

impl TryFrom<PartitionBpdJson> for PartitionBpd {
    type Error = Error;
    fn try_from(j: PartitionBpdJson) -> Result<Self> {
        let tiles = j
            .tiles
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| Tile::from_code(c).ok_or_else(|| Error::Parse(format!("unknown tile code {c:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let p = PartitionBpd::new(tiles)?;
        if p.shape.parts() != j.shape.as_slice() {
            return Err(Error::InvalidPartitionTiling("shape does not match rows".into()));
        }
        Ok(p)
    }
}

impl From<PartitionBpd> for PartitionBpdJson {
    fn from(p: PartitionBpd) -> Self {
        PartitionBpdJson {
            shape: p.shape.parts().to_vec(),
            tiles: p.tiles.iter().map(|r| r.iter().map(|t| t.code()).collect()).collect(),
        }
    }
}

impl PartitionBpd {
    /// Rows of tiles; row lengths give the shape.
    pub fn new(tiles: Vec<Vec<Tile>>) -> Result<Self> {
        let shape = Partition::new(tiles.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidPartitionTiling("row lengths must weakly decrease".into()))?;
        if shape.len() != tiles.len() {
            return Err(Error::InvalidPartitionTiling("empty row".into()));
        }
        let get = |i: usize, j: usize| -> Option<Tile> { tiles.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied() };
        for (i, j) in shape.cells() {
            let t = get(i, j).unwrap();
            let north = get(i - 1, j).map_or(false, Tile::south);
            let west = get(i, j - 1).map_or(false, Tile::east);
            let ok_south = get(i + 1, j).map_or(true, |b| b.north() == t.south());
            let ok_east = get(i, j + 1).map_or(true, |b| b.west() == t.east());
            if t.north() != north || t.west() != west || !ok_south || !ok_east {
                return Err(Error::InvalidPartitionTiling(format!("tile at ({i},{j}) does not connect")));
            }
        }
        Ok(PartitionBpd { shape, tiles })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn at(&self, i: usize, j: usize) -> Tile {
        self.tiles[i - 1][j - 1]
    }

    pub fn blanks(&self) -> BTreeSet<Cell> {
        self.shape.cells().into_iter().filter(|&(i, j)| self.at(i, j) == Tile::Blank).collect()
    }

    pub fn upward_elbows(&self) -> BTreeSet<Cell> {
        self.shape.cells().into_iter().filter(|&(i, j)| self.at(i, j) == Tile::ElbowNW).collect()
    }

    pub fn crosses(&self) -> BTreeSet<Cell> {
        self.shape.cells().into_iter().filter(|&(i, j)| self.at(i, j) == Tile::Cross).collect()
    }

    /// `comp`: the smallest square pipe dream restricting to `self` with no
    /// blanks or upward elbows outside the shape.
    pub fn complete(&self) -> Bpd {
        let m = self.shape.len();
        let k = self.shape.part(1);
        let size = m + k;
        let mut e = vec![vec![0u8; size + 1]; size + 1];
        for (i, j) in self.shape.cells() {
            e[i][j] = self.at(i, j).edges();
        }
        for (i, j) in self.shape.cells() {
            let t = self.at(i, j);
            if t.east() && !self.shape.contains((i, j + 1)) {
                for c in j + 1..=size {
                    e[i][c] |= W | E;
                }
            }
            if t.south() && !self.shape.contains((i + 1, j)) {
                for r in i + 1..=size {
                    e[r][j] |= N | S;
                }
            }
        }
        for i in 1..=size {
            let free = (1..=size).find(|&j| !self.shape.contains((i, j)) && e[i][j] == 0);
            if let Some(j) = free {
                e[i][j] = S | E;
                for c in j + 1..=size {
                    e[i][c] |= W | E;
                }
                for r in i + 1..=size {
                    e[r][j] |= N | S;
                }
            }
        }
        let mut tiles: Vec<Vec<Tile>> = (1..=size)
            .map(|i| (1..=size).map(|j| Tile::from_edges(e[i][j]).expect("completion builds valid tiles")).collect())
            .collect();
        while tiles.len() > m.max(k) && tiles[tiles.len() - 1][tiles.len() - 1] == Tile::ElbowSE {
            tiles.pop();
            for r in tiles.iter_mut() {
                r.pop();
            }
        }
        Bpd::new(tiles).expect("completion is a pipe dream")
    }
}

/// `res_λ(P)`.
pub fn restrict(p: &Bpd, shape: &Partition) -> Result<PartitionBpd> {
    if shape.len() > p.n() || shape.part(1) > p.n() {
        return Err(Error::InvalidPartitionTiling(format!("{shape} does not fit in size {}", p.n())));
    }
    let tiles = (1..=shape.len()).map(|i| (1..=shape.part(i)).map(|j| p.at(i, j)).collect()).collect();
    PartitionBpd::new(tiles)
}

/// All tilings in `BPD(λ)`.
pub fn enumerate_partition_bpds(shape: &Partition) -> Vec<PartitionBpd> {
    let cells: Vec<Cell> = shape.cells().into_iter().collect();
    let mut tiles: Vec<Vec<Tile>> = shape.parts().iter().map(|&p| vec![Tile::Blank; p]).collect();
    let mut out = Vec::new();
    partition_rec(shape, &cells, 0, &mut tiles, &mut out);
    out
}

fn partition_rec(shape: &Partition, cells: &[Cell], k: usize, tiles: &mut Vec<Vec<Tile>>, out: &mut Vec<PartitionBpd>) {
    if k == cells.len() {
        out.push(PartitionBpd { shape: shape.clone(), tiles: tiles.clone() });
        return;
    }
    let (i, j) = cells[k];
    let north = i > 1 && tiles[i - 2][j - 1].south();
    let west = j > 1 && tiles[i - 1][j - 2].east();
    for t in Tile::ALL {
        if t.north() == north && t.west() == west {
            tiles[i - 1][j - 1] = t;
            partition_rec(shape, cells, k + 1, tiles, out);
        }
    }
}
