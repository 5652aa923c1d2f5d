//! Vexillary permutations, flagged tableaux and their pipe dreams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bpd::{pipes, rothe_bpd, Bpd, MarkedBpd, Move, MoveKind, Tile};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::{Cell, Error, Result, DEFAULT_POLY_LIMIT};

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `δ^{(n)} = (n−1, n−2, …, 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition { parts: (1..n).rev().collect() }
    }

    /// The partition whose diagram is `cells`, if that set is a Young diagram.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<Self> {
        let rows = cells.iter().map(|c| c.0).max().unwrap_or(0);
        let parts: Vec<usize> =
            (1..=rows).map(|i| cells.iter().filter(|c| c.0 == i).count()).collect();
        let p = Partition::new(parts).ok()?;
        (p.cells() == *cells).then_some(p)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.0 >= 1 && cell.1 >= 1 && cell.1 <= self.part(cell.0)
    }

    /// `Yd(λ)` in row-major order.
    pub fn cells(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.insert((i + 1, j));
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let m = self.part(1);
        Partition { parts: (1..=m).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }

    pub fn fits_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Every partition whose diagram lies inside `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_rec(self, 1, usize::MAX, &mut cur, &mut out);
        out
    }
}

fn sub_rec(outer: &Partition, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i > outer.len() {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        return;
    }
    for p in 0..=outer.part(i).min(cap) {
        cur.push(p);
        sub_rec(outer, i + 1, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn require_vexillary(v: &Permutation) -> Result<()> {
    if v.is_vexillary() {
        Ok(())
    } else {
        Err(Error::NotVexillary(v.to_string()))
    }
}

/// `μ^{(v)}`: the code of `v` sorted into a partition.
pub fn mu_of(v: &Permutation) -> Result<Partition> {
    require_vexillary(v)?;
    let mut c = v.lehmer_code();
    c.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(c)
}

/// `λ^{(v)}`: the smallest partition containing `D(v)`.
pub fn lambda_of(v: &Permutation) -> Result<Partition> {
    require_vexillary(v)?;
    Ok(crate::bpd::lambda_of(v))
}

/// `f_i` = the largest `j` with `(j, j − i + μ_i) ∈ λ^{(v)}`.
pub fn flag_of(v: &Permutation) -> Result<Vec<usize>> {
    let mu = mu_of(v)?;
    let lam = lambda_of(v)?;
    Ok((1..=mu.len())
        .map(|i| {
            let mut j = i;
            while lam.contains((j + 1, j + 1 + mu.part(i) - i)) {
                j += 1;
            }
            j
        })
        .collect())
}

/// A semistandard tableau with row `i` bounded by `flag[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<Vec<usize>>")]
pub struct FlaggedTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    flag: Vec<usize>,
}

impl From<FlaggedTableau> for Vec<Vec<usize>> {
    fn from(t: FlaggedTableau) -> Self {
        t.rows
    }
}

fn check_flag(shape: &Partition, flag: &[usize]) -> Result<()> {
    if flag.len() < shape.len() {
        return Err(Error::InvalidTableau("flag is shorter than the shape".into()));
    }
    Ok(())
}

impl FlaggedTableau {
    pub fn new(rows: Vec<Vec<usize>>, flag: Vec<usize>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("rows must weakly shorten".into()))?;
        check_flag(&shape, &flag)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let ok_row = j == 0 || row[j - 1] <= v;
                let ok_col = i == 0 || rows[i - 1][j] < v;
                if v == 0 || v > flag[i] || !ok_row || !ok_col {
                    return Err(Error::InvalidTableau(format!("entry at ({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(FlaggedTableau { shape, rows, flag })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn flag(&self) -> &[usize] {
        &self.flag
    }

    /// `T(i,j)`, 1-indexed.
    pub fn at(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }
}

/// A set-valued tableau with row `i` bounded by `flag[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<Vec<BTreeSet<usize>>>")]
pub struct SetValuedTableau {
    shape: Partition,
    rows: Vec<Vec<BTreeSet<usize>>>,
    flag: Vec<usize>,
}

impl From<SetValuedTableau> for Vec<Vec<BTreeSet<usize>>> {
    fn from(t: SetValuedTableau) -> Self {
        t.rows
    }
}

impl SetValuedTableau {
    pub fn new(rows: Vec<Vec<BTreeSet<usize>>>, flag: Vec<usize>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("rows must weakly shorten".into()))?;
        check_flag(&shape, &flag)?;
        for (i, row) in rows.iter().enumerate() {
            for (j, set) in row.iter().enumerate() {
                let (Some(&lo), Some(&hi)) = (set.first(), set.last()) else {
                    return Err(Error::InvalidTableau(format!("empty cell at ({},{})", i + 1, j + 1)));
                };
                let ok_row = j == 0 || *row[j - 1].last().unwrap() <= lo;
                let ok_col = i == 0 || *rows[i - 1][j].last().unwrap() < lo;
                if lo == 0 || hi > flag[i] || !ok_row || !ok_col {
                    return Err(Error::InvalidTableau(format!("entry at ({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(SetValuedTableau { shape, rows, flag })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<BTreeSet<usize>>] {
        &self.rows
    }

    pub fn at(&self, i: usize, j: usize) -> &BTreeSet<usize> {
        &self.rows[i - 1][j - 1]
    }

    /// `|T|`, the total number of entries.
    pub fn size(&self) -> usize {
        self.rows.iter().flatten().map(BTreeSet::len).sum()
    }

    /// Keep the least entry of every cell.
    pub fn flatten(&self) -> FlaggedTableau {
        let rows = self.rows.iter().map(|r| r.iter().map(|s| *s.first().unwrap()).collect()).collect();
        FlaggedTableau { shape: self.shape.clone(), rows, flag: self.flag.clone() }
    }

    /// `S_T = {(k, k − i + j) : k ∈ T(i,j), k ≠ min T(i,j)}`.
    pub fn excess_cells(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for (i, j) in self.shape.cells() {
            for &k in self.at(i, j).iter().skip(1) {
                out.insert((k, k + j - i));
            }
        }
        out
    }

    /// `β^{|T|−|λ|} ∏ x_k ⊕ y_{k+j−i}`.
    pub fn weight(&self) -> Polynomial {
        let mut out = Polynomial::beta().pow((self.size() - self.shape.size()) as u32);
        for (i, j) in self.shape.cells() {
            for &k in self.at(i, j) {
                out = &out * &Polynomial::oplus(k, k + j - i);
            }
        }
        out
    }

    pub fn is_saturated(&self) -> bool {
        *self == saturate(&self.flatten())
    }
}

/// Add to each cell every larger value the neighbours and flag allow.
pub fn saturate(t: &FlaggedTableau) -> SetValuedTableau {
    let shape = &t.shape;
    let mut rows: Vec<Vec<BTreeSet<usize>>> =
        t.rows.iter().map(|r| r.iter().map(|&v| BTreeSet::from([v])).collect()).collect();
    for (i, j) in shape.cells() {
        let lo = t.at(i, j);
        let mut hi = t.flag[i - 1];
        if shape.contains((i, j + 1)) {
            hi = hi.min(t.at(i, j + 1));
        }
        if shape.contains((i + 1, j)) {
            hi = hi.min(t.at(i + 1, j) - 1);
        }
        rows[i - 1][j - 1].extend(lo + 1..=hi);
    }
    SetValuedTableau { shape: shape.clone(), rows, flag: t.flag.clone() }
}

/// `FSYT(λ, f)` in row-major lexicographic order.
pub fn enumerate_fsyt(shape: &Partition, flag: &[usize]) -> Result<Vec<FlaggedTableau>> {
    check_flag(shape, flag)?;
    let cells: Vec<Cell> = shape.cells().into_iter().collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fsyt_rec(shape, flag, &cells, 0, &mut rows, &mut out);
    Ok(out)
}

fn fsyt_rec(
    shape: &Partition,
    flag: &[usize],
    cells: &[Cell],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<FlaggedTableau>,
) {
    if k == cells.len() {
        out.push(FlaggedTableau { shape: shape.clone(), rows: rows.clone(), flag: flag.to_vec() });
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    if j > 1 {
        lo = lo.max(rows[i - 1][j - 2]);
    }
    if i > 1 {
        lo = lo.max(rows[i - 2][j - 1] + 1);
    }
    for v in lo..=flag[i - 1] {
        rows[i - 1][j - 1] = v;
        fsyt_rec(shape, flag, cells, k + 1, rows, out);
    }
}

/// Set-valued tableaux of shape `λ` bounded by `f`.
pub fn enumerate_svt(shape: &Partition, flag: &[usize]) -> Result<Vec<SetValuedTableau>> {
    check_flag(shape, flag)?;
    let cells: Vec<Cell> = shape.cells().into_iter().collect();
    let mut rows: Vec<Vec<BTreeSet<usize>>> = shape.parts().iter().map(|&p| vec![BTreeSet::new(); p]).collect();
    let mut out = Vec::new();
    svt_rec(shape, flag, &cells, 0, &mut rows, &mut out);
    Ok(out)
}

fn svt_rec(
    shape: &Partition,
    flag: &[usize],
    cells: &[Cell],
    k: usize,
    rows: &mut Vec<Vec<BTreeSet<usize>>>,
    out: &mut Vec<SetValuedTableau>,
) {
    if k == cells.len() {
        out.push(SetValuedTableau { shape: shape.clone(), rows: rows.clone(), flag: flag.to_vec() });
        return;
    }
    let (i, j) = cells[k];
    let mut lo = 1;
    if j > 1 {
        lo = lo.max(*rows[i - 1][j - 2].last().unwrap());
    }
    if i > 1 {
        lo = lo.max(*rows[i - 2][j - 1].last().unwrap() + 1);
    }
    let hi = flag[i - 1];
    if lo > hi {
        return;
    }
    let span = hi - lo + 1;
    for mask in 1u64..(1 << span) {
        rows[i - 1][j - 1] = (0..span).filter(|b| mask >> b & 1 == 1).map(|b| lo + b).collect();
        svt_rec(shape, flag, cells, k + 1, rows, out);
    }
    rows[i - 1][j - 1].clear();
}

/// `FSYT(v)`.
pub fn fsyt_of(v: &Permutation) -> Result<Vec<FlaggedTableau>> {
    enumerate_fsyt(&mu_of(v)?, &flag_of(v)?)
}

/// Set-valued `FSYT(v)`.
pub fn svt_of(v: &Permutation) -> Result<Vec<SetValuedTableau>> {
    enumerate_svt(&mu_of(v)?, &flag_of(v)?)
}

fn check_for(v: &Permutation, shape: &Partition, flag: &[usize]) -> Result<()> {
    if *shape != mu_of(v)? {
        return Err(Error::InvalidTableau(format!("shape {shape} is not μ for {v}")));
    }
    let f = flag_of(v)?;
    if flag[..shape.len()] != f[..] {
        return Err(Error::InvalidTableau(format!("flag {flag:?} is not the flag of {v}")));
    }
    Ok(())
}

/// `γ(T)`: the element of `Pipes(v)` with blanks `(T(i,j), T(i,j)+j−i)`.
pub fn gamma(t: &FlaggedTableau, v: &Permutation) -> Result<Bpd> {
    check_for(v, &t.shape, &t.flag)?;
    let blanks: BTreeSet<Cell> =
        t.shape.cells().into_iter().map(|(i, j)| (t.at(i, j), t.at(i, j) + j - i)).collect();
    let crosses = rothe_bpd(v).crosses();
    let p = Bpd::from_blanks_and_crosses(v.n(), &blanks, &crosses)?;
    if p.demazure() != *v {
        return Err(Error::InvalidTableau(format!("no pipe dream for {v} has these blanks")));
    }
    Ok(p)
}

/// `γ̄(T) = (γ(flatten T), S_T)`.
pub fn gamma_bar(t: &SetValuedTableau, v: &Permutation) -> Result<MarkedBpd> {
    let p = gamma(&t.flatten(), v)?;
    MarkedBpd::new(p, t.excess_cells())
}

fn is_in(t: Tile, allowed: &[Tile]) -> bool {
    allowed.contains(&t)
}

/// 2×2 moves that carry a blank one step north-west.
pub fn local_moves(p: &Bpd) -> Vec<(Move, Bpd)> {
    let n = p.n();
    let mut out = Vec::new();
    for r in 1..n {
        for c in 1..n {
            let ok = p.at(r, c) == Tile::ElbowSE
                && p.at(r + 1, c + 1) == Tile::Blank
                && is_in(p.at(r + 1, c), &[Tile::Vertical, Tile::ElbowNW])
                && is_in(p.at(r, c + 1), &[Tile::Horizontal, Tile::ElbowNW]);
            if ok {
                let q = p.toggle_rectangle((r, c), (r + 1, c + 1)).expect("local moves give pipe dreams");
                out.push((Move { kind: MoveKind::Local, nw: (r, c), se: (r + 1, c + 1) }, q));
            }
        }
    }
    out
}

/// The reversed local moves.
pub fn inverse_local_moves(p: &Bpd) -> Vec<(Move, Bpd)> {
    let n = p.n();
    let mut out = Vec::new();
    for r in 1..n {
        for c in 1..n {
            let ok = p.at(r, c) == Tile::Blank
                && p.at(r + 1, c + 1) == Tile::ElbowNW
                && is_in(p.at(r + 1, c), &[Tile::ElbowSE, Tile::Horizontal])
                && is_in(p.at(r, c + 1), &[Tile::ElbowSE, Tile::Vertical]);
            if ok {
                let q = p.toggle_rectangle((r, c), (r + 1, c + 1)).expect("local moves give pipe dreams");
                out.push((Move { kind: MoveKind::InverseLocal, nw: (r, c), se: (r + 1, c + 1) }, q));
            }
        }
    }
    out
}

/// `T^{(v)}`: the element of `Pipes(v)` whose blanks are `Yd(μ^{(v)})`.
pub fn top_bpd(v: &Permutation) -> Result<Bpd> {
    let mu = mu_of(v)?;
    Bpd::from_blanks_and_crosses(v.n(), &mu.cells(), &rothe_bpd(v).crosses())
}

/// `Σ wt(T)` over set-valued tableaux in `FSYT(v)`.
pub fn kmy_sum(v: &Permutation) -> Result<Polynomial> {
    if v.n() > DEFAULT_POLY_LIMIT {
        return Err(Error::SizeLimit { n: v.n(), limit: DEFAULT_POLY_LIMIT });
    }
    Ok(svt_of(v)?.iter().map(SetValuedTableau::weight).sum())
}

/// `Pipes(v)` for vexillary `v`, checked against the typed precondition.
pub fn vexillary_pipes(v: &Permutation) -> Result<BTreeSet<Bpd>> {
    require_vexillary(v)?;
    pipes(v)
}
