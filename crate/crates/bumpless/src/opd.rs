//! Ordinary pipe dreams on the staircase.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::asm::{asm_leq, Asm};
use crate::perm::{demazure_product, Permutation, Word};
use crate::poly::Polynomial;
use crate::{Cell, Error, Result};

/// Largest `n` accepted by [`enumerate_opd`].
pub const OPD_LIMIT: usize = 5;

/// A set of crossing tiles inside `Yd(δ^{(n)})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OpdJson", into = "OpdJson")]
pub struct OrdinaryPipeDream {
    n: usize,
    crossings: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
pub struct OpdJson {
    pub n: usize,
    pub crossings: Vec<[usize; 2]>,
}

impl TryFrom<OpdJson> for OrdinaryPipeDream {
    type Error = Error;
    fn try_from(j: OpdJson) -> Result<Self> {
        OrdinaryPipeDream::new(j.n, j.crossings.into_iter().map(|[i, k]| (i, k)).collect())
    }
}

impl From<OrdinaryPipeDream> for OpdJson {
    fn from(s: OrdinaryPipeDream) -> Self {
        OpdJson { n: s.n, crossings: s.crossings.into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

fn in_staircase(n: usize, (i, j): Cell) -> bool {
    i >= 1 && j >= 1 && i + j <= n
}

impl OrdinaryPipeDream {
    pub fn new(n: usize, crossings: BTreeSet<Cell>) -> Result<Self> {
        if let Some(&c) = crossings.iter().find(|&&c| !in_staircase(n, c)) {
            return Err(Error::InvalidPipeDream(format!("{c:?} is outside the staircase of size {n}")));
        }
        Ok(OrdinaryPipeDream { n, crossings })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crossings(&self) -> &BTreeSet<Cell> {
        &self.crossings
    }

    /// Rows top to bottom, each right to left; the crossing `(i,j)` is `s_{i+j-1}`.
    pub fn reading_word(&self) -> Word {
        let mut w = Vec::new();
        for i in 1..self.n {
            for j in (1..=self.n - i).rev() {
                if self.crossings.contains(&(i, j)) {
                    w.push(i + j - 1);
                }
            }
        }
        Word(w)
    }

    pub fn demazure(&self) -> Permutation {
        demazure_product(&self.reading_word(), self.n).expect("letters lie in [n-1]")
    }

    /// Follow pipes from the left edge to the top edge; entry `i` of the
    /// result is the column where the pipe entering row `i` exits.
    pub fn traced(&self) -> Permutation {
        let n = self.n;
        let mut out = vec![0; n];
        for start in 1..=n {
            // heading east into (i, j) or north into (i, j)
            let (mut i, mut j, mut east) = (start, 1usize, true);
            loop {
                if i + j == n + 1 {
                    // antidiagonal elbow turns an eastbound pipe north
                    if east {
                        east = false;
                    } else {
                        // northbound entry into an antidiagonal elbow cannot happen
                        unreachable!("pipe entered the antidiagonal from below");
                    }
                } else if !self.crossings.contains(&(i, j)) {
                    east = !east;
                }
                if east {
                    j += 1;
                } else if i == 1 {
                    out[start - 1] = j;
                    break;
                } else {
                    i -= 1;
                }
            }
        }
        Permutation::new(out).expect("pipes exit at distinct columns")
    }

    pub fn is_reduced(&self) -> bool {
        self.reading_word().is_reduced(self.n).expect("letters lie in [n-1]")
    }

    /// `∏ β(x_i ⊕ y_j)` over the crossings.
    pub fn weight(&self) -> Polynomial {
        self.crossings.iter().map(|&(i, j)| &Polynomial::beta() * &Polynomial::oplus(i, j)).product()
    }
}

/// All `S` with `δ(S) = w`, sorted.
pub fn enumerate_opd(w: &Permutation) -> Result<Vec<OrdinaryPipeDream>> {
    enumerate_opd_with_limit(w, OPD_LIMIT)
}

pub fn enumerate_opd_with_limit(w: &Permutation, limit: usize) -> Result<Vec<OrdinaryPipeDream>> {
    let n = w.n();
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    let mut cells = Vec::new();
    for i in 1..n {
        for j in (1..=n - i).rev() {
            cells.push((i, j));
        }
    }
    let target = Asm::from_permutation(w);
    let mut out = Vec::new();
    let mut chosen = BTreeSet::new();
    search(&cells, 0, Permutation::identity(n), w, &target, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn search(
    cells: &[Cell],
    k: usize,
    u: Permutation,
    w: &Permutation,
    target: &Asm,
    chosen: &mut BTreeSet<Cell>,
    out: &mut Vec<OrdinaryPipeDream>,
) {
    // prefixes only grow in Bruhat order, and each cell adds at most one to the length
    if w.length() > u.length() + cells.len() - k {
        return;
    }
    if !asm_leq(&Asm::from_permutation(&u), target).expect("same size") {
        return;
    }
    if k == cells.len() {
        if u == *w {
            out.push(OrdinaryPipeDream { n: w.n(), crossings: chosen.clone() });
        }
        return;
    }
    search(cells, k + 1, u.clone(), w, target, chosen, out);
    let (i, j) = cells[k];
    let a = i + j - 1;
    let next = if u.at(a) < u.at(a + 1) { u.times_simple(a) } else { u };
    chosen.insert((i, j));
    search(cells, k + 1, next, w, target, chosen, out);
    chosen.remove(&(i, j));
}

/// `β^{−ℓ(w)} Σ_{δ(S)=w} wt(S)`.
pub fn grothendieck_opd(w: &Permutation) -> Result<Polynomial> {
    let sum: Polynomial = enumerate_opd(w)?.iter().map(OrdinaryPipeDream::weight).sum();
    Ok(sum.div_beta_pow(w.length() as u32).expect("every term carries β^ℓ"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn s(n: usize, cells: &[Cell]) -> OrdinaryPipeDream {
        OrdinaryPipeDream::new(n, cells.iter().copied().collect()).unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(s(3, &[]).demazure(), Permutation::identity(3));
        assert_eq!(s(3, &[(1, 1)]).demazure(), p("213"));
        assert_eq!(s(4, &[(1, 1), (1, 2), (2, 1)]).reading_word(), Word(vec![2, 1, 2]));
        assert!(OrdinaryPipeDream::new(3, [(2, 2)].into()).is_err());
    }

    #[test]
    fn example_132() {
        let got = enumerate_opd(&p("132")).unwrap();
        assert_eq!(got, vec![s(3, &[(1, 2)]), s(3, &[(1, 2), (2, 1)]), s(3, &[(2, 1)])]);
    }

    #[test]
    fn serde_shape() {
        let x = s(3, &[(1, 1), (2, 1)]);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"n":3,"crossings":[[1,1],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<OrdinaryPipeDream>(&j).unwrap(), x);
        assert!(serde_json::from_str::<OrdinaryPipeDream>(r#"{"n":2,"crossings":[[2,1]]}"#).is_err());
    }

    #[test]
    fn limit() {
        assert!(matches!(enumerate_opd(&Permutation::identity(6)), Err(Error::SizeLimit { .. })));
    }
}
