//! Hecke pipe dreams and decreasing tableaux.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::bpd::{enumerate_bpd_with_limit, Bpd};
use crate::perm::{demazure_product, Permutation, Word};
use crate::vex::{flag_of, gamma, FlaggedTableau, Partition};
use crate::{Error, Result, DEFAULT_ENUM_LIMIT};

/// A filling of a Young diagram whose rows and columns strictly decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct DecreasingTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for DecreasingTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        DecreasingTableau::new(rows)
    }
}

impl From<DecreasingTableau> for Vec<Vec<usize>> {
    fn from(t: DecreasingTableau) -> Self {
        t.rows
    }
}

impl DecreasingTableau {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("rows must weakly shorten".into()))?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let ok_row = j == 0 || row[j - 1] > v;
                let ok_col = i == 0 || rows[i - 1][j] > v;
                if v == 0 || !ok_row || !ok_col {
                    return Err(Error::InvalidTableau(format!("entry at ({},{})", i + 1, j + 1)));
                }
            }
        }
        Ok(DecreasingTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn at(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Largest entry, 0 when empty.
    pub fn max_entry(&self) -> usize {
        self.rows.iter().filter_map(|r| r.first()).copied().max().unwrap_or(0)
    }

    /// Columns left to right, each read bottom to top.
    pub fn column_reading_word(&self) -> Word {
        let mut w = Vec::new();
        for j in 1..=self.shape.part(1) {
            for i in (1..=self.shape.len()).rev() {
                if j <= self.shape.part(i) {
                    w.push(self.at(i, j));
                }
            }
        }
        Word(w)
    }

    /// Demazure product of the reading word in `S_n`.
    pub fn demazure(&self, n: usize) -> Result<Permutation> {
        demazure_product(&self.column_reading_word(), n)
    }

    /// Reduced word tableau: the reading word is reduced.
    pub fn is_rwt(&self) -> bool {
        self.column_reading_word().is_reduced(self.max_entry() + 1).expect("letters fit")
    }
}

/// The diagram of `P` is a north-west justified partition.
pub fn is_hecke(p: &Bpd) -> bool {
    Partition::from_cells(&p.blanks()).is_some()
}

pub fn shape_of(p: &Bpd) -> Result<Partition> {
    Partition::from_cells(&p.blanks()).ok_or(Error::NotHecke)
}

/// Reflection across the antidiagonal.
pub fn antidiagonal_involution(p: &Bpd) -> Bpd {
    p.antidiagonal_involution()
}

/// `v(λ,n)`: the vexillary permutation whose Rothe pipe dream is the
/// reflection of the dominant one with diagram `Yd(λ)`.
pub fn v_of(lambda: &Partition, n: usize) -> Result<Permutation> {
    if !lambda.fits_in(&Partition::staircase(n)) {
        return Err(Error::NotInStaircase(lambda.parts().to_vec(), n));
    }
    let mut code = lambda.parts().to_vec();
    code.resize(n, 0);
    let u = Permutation::from_code(&code)?;
    Ok(Asm::from_permutation(&u).antidiagonal_reflection().to_permutation().expect("reflection of a permutation matrix"))
}

/// `Ω(P)`: in each diagonal pair the k-th blank from the north-west with the
/// k-th crossing from the south-east and record the row difference.
pub fn omega(p: &Bpd) -> Result<DecreasingTableau> {
    let shape = shape_of(p)?;
    let mut blanks: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
    let mut crosses: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
    for (i, j) in p.blanks() {
        blanks.entry(j as isize - i as isize).or_default().push(i);
    }
    for (i, j) in p.crosses() {
        crosses.entry(j as isize - i as isize).or_default().push(i);
    }
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    for (d, bs) in &blanks {
        let cs = crosses.get(d).map(Vec::as_slice).unwrap_or(&[]);
        if cs.len() != bs.len() {
            return Err(Error::InvalidBpd(format!("diagonal {d} is unbalanced")));
        }
        for (&i, &i2) in bs.iter().zip(cs.iter().rev()) {
            let j = (i as isize + d) as usize;
            rows[i - 1][j - 1] = i2.checked_sub(i).ok_or_else(|| Error::InvalidBpd("crossing above its blank".into()))?;
        }
    }
    DecreasingTableau::new(rows)
}

/// `Ω⁻¹`: `T(i,j) = n − j − D(i,j) + 1`, then `γ` for `v(λ,n)`, then the involution.
pub fn omega_inv(d: &DecreasingTableau, n: usize) -> Result<Bpd> {
    let lambda = d.shape().clone();
    let v = v_of(&lambda, n)?;
    if d.max_entry() >= n {
        return Err(Error::InvalidTableau(format!("entries must lie in [1, {}]", n - 1)));
    }
    let rows: Vec<Vec<usize>> = d
        .rows()
        .iter()
        .map(|r| r.iter().enumerate().map(|(k, &x)| n - (k + 1) - x + 1).collect())
        .collect();
    let t = FlaggedTableau::new(rows, flag_of(&v)?)?;
    Ok(gamma(&t, &v)?.antidiagonal_involution())
}

/// All decreasing tableaux with entries in `[m]`, sorted.
pub fn enumerate_dt(m: usize) -> Vec<DecreasingTableau> {
    let mut out = Vec::new();
    // a tableau with entries in [m] fits in the staircase of size m+1
    for shape in Partition::staircase(m + 1).subpartitions() {
        let cells: Vec<_> = shape.cells().into_iter().collect();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        dt_rec(&cells, 0, m, &mut rows, &mut out);
    }
    out.sort();
    out
}

fn dt_rec(cells: &[(usize, usize)], k: usize, m: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<DecreasingTableau>) {
    if k == cells.len() {
        out.push(DecreasingTableau::new(rows.clone()).expect("built decreasing"));
        return;
    }
    let (i, j) = cells[k];
    let mut hi = m;
    if j > 1 {
        hi = hi.min(rows[i - 1][j - 2] - 1);
    }
    if i > 1 {
        hi = hi.min(rows[i - 2][j - 1] - 1);
    }
    for x in 1..=hi {
        rows[i - 1][j - 1] = x;
        dt_rec(cells, k + 1, m, rows, out);
    }
}

/// `HBPD(n)`, sorted.
pub fn enumerate_hbpd(n: usize) -> Result<Vec<Bpd>> {
    Ok(enumerate_bpd_with_limit(n, DEFAULT_ENUM_LIMIT)?.into_iter().filter(is_hecke).collect())
}

/// `HBPD(λ,n)`, built as the image of `Pipes(v(λ,n))` under the involution.
pub fn hbpd(lambda: &Partition, n: usize) -> Result<BTreeSet<Bpd>> {
    let v = v_of(lambda, n)?;
    Ok(crate::bpd::pipes(&v)?.iter().map(Bpd::antidiagonal_involution).collect())
}
