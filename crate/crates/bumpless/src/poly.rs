//! Exact sparse polynomials in `ℤ[β][x; y]`, the operators `π_i`, and
//! Grothendieck polynomials by divided differences.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::{Error, Result, DEFAULT_POLY_LIMIT};

/// Exponents of `β`, `x_1, x_2, …` and `y_1, y_2, …`, trimmed of trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub beta: u32,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn exp_at(v: &[u32], i: usize) -> u32 {
    v.get(i - 1).copied().unwrap_or(0)
}

fn set_exp(v: &mut Vec<u32>, i: usize, e: u32) {
    if v.len() < i {
        v.resize(i, 0);
    }
    v[i - 1] = e;
    trim(v);
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn degree(&self) -> u32 {
        self.beta + self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }

    pub fn x_exp(&self, i: usize) -> u32 {
        exp_at(&self.x, i)
    }

    pub fn y_exp(&self, j: usize) -> u32 {
        exp_at(&self.y, j)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let add = |a: &[u32], b: &[u32]| {
            let mut v = vec![0; a.len().max(b.len())];
            for (k, e) in a.iter().enumerate() {
                v[k] += e;
            }
            for (k, e) in b.iter().enumerate() {
                v[k] += e;
            }
            v
        };
        Monomial { beta: self.beta + other.beta, x: add(&self.x, &other.x), y: add(&self.y, &other.y) }
    }

    fn swap_x(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        let (a, b) = (m.x_exp(i), m.x_exp(i + 1));
        set_exp(&mut m.x, i, b);
        set_exp(&mut m.x, i + 1, a);
        m
    }
}

impl Ord for Monomial {
    /// Graded, then lexicographic on `(β, x, y)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.beta.cmp(&other.beta))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients in `β`, `x_i`, `y_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_term(Monomial::one(), BigInt::from(c))
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn beta() -> Self {
        Self::from_term(Monomial { beta: 1, ..Monomial::default() }, BigInt::one())
    }

    pub fn x(i: usize) -> Self {
        let mut m = Monomial::one();
        set_exp(&mut m.x, i, 1);
        Self::from_term(m, BigInt::one())
    }

    pub fn y(j: usize) -> Self {
        let mut m = Monomial::one();
        set_exp(&mut m.y, j, 1);
        Self::from_term(m, BigInt::one())
    }

    /// `x_i ⊕ y_j = x_i + y_j + β x_i y_j`.
    pub fn oplus(i: usize, j: usize) -> Self {
        let (x, y) = (Self::x(i), Self::y(j));
        &(&x + &y) + &(&Self::beta() * &(&x * &y))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn nvars_x(&self) -> usize {
        self.terms.keys().map(|m| m.x.len()).max().unwrap_or(0)
    }

    pub fn nvars_y(&self) -> usize {
        self.terms.keys().map(|m| m.y.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `x_i`.
    pub fn mul_x(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                let e = m.x_exp(i);
                set_exp(&mut m.x, i, e + 1);
                (m, c.clone())
            })
            .collect();
        Polynomial { terms }
    }

    /// `s_i · f`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.swap_x(i), c.clone())).collect() }
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_x(i) == *self
    }

    /// Divide by `β^k` if every term allows it.
    pub fn div_beta_pow(&self, k: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.beta < k {
                return None;
            }
            let mut m = m.clone();
            m.beta -= k;
            terms.insert(m, c.clone());
        }
        Some(Polynomial { terms })
    }

    /// Exact quotient by `x_i − x_{i+1}`, by synthetic division in `x_i`.
    ///
    /// Returns `None` when the remainder is nonzero.
    pub fn div_x_diff(&self, i: usize) -> Option<Self> {
        // coefficients a_k of x_i^k, each free of x_i
        let mut coeffs: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.x_exp(i);
            let mut rest = m.clone();
            set_exp(&mut rest.x, i, 0);
            coeffs.entry(k).or_default().add_term(rest, c.clone());
        }
        let Some(&deg) = coeffs.keys().next_back() else {
            return Some(Polynomial::zero());
        };
        let mut quotient = Polynomial::zero();
        let mut q = Polynomial::zero();
        for k in (1..=deg).rev() {
            // q_{k-1} = a_k + x_{i+1} q_k
            let a_k = coeffs.remove(&k).unwrap_or_default();
            q = &a_k + &q.mul_x(i + 1);
            for (m, c) in &q.terms {
                let mut m = m.clone();
                set_exp(&mut m.x, i, k - 1);
                quotient.add_term(m, c.clone());
            }
        }
        let a_0 = coeffs.remove(&0).unwrap_or_default();
        let remainder = &a_0 + &q.mul_x(i + 1);
        remainder.is_zero().then_some(quotient)
    }

    /// Substitute for `β`, `x_i`, `y_j` as given; unassigned variables stay.
    pub fn specialize(&self, a: &Assignment) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial { beta: 0, x: vec![], y: vec![] };
            let mut factor = Polynomial::constant(1).scale(c);
            match &a.beta {
                Some(b) if m.beta > 0 => factor = &factor * &b.pow(m.beta),
                _ => rest.beta = m.beta,
            }
            for (k, &e) in m.x.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match a.x.get(&(k + 1)) {
                    Some(p) => factor = &factor * &p.pow(e),
                    None => set_exp(&mut rest.x, k + 1, e),
                }
            }
            for (k, &e) in m.y.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match a.y.get(&(k + 1)) {
                    Some(p) => factor = &factor * &p.pow(e),
                    None => set_exp(&mut rest.y, k + 1, e),
                }
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&rest), fc);
            }
        }
        out
    }

    /// `β ↦ 0`, `y_j ↦ −y_j`.
    pub fn schubert_specialize(&self) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.beta > 0 {
                continue;
            }
            let odd = m.y.iter().sum::<u32>() % 2 == 1;
            out.add_term(m.clone(), if odd { -c.clone() } else { c.clone() });
        }
        out
    }

    /// The constant term, or `None` if any variable remains.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn to_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
                beta: m.beta,
                x: m.x.clone(),
                y: m.y.clone(),
            })
            .collect()
    }

    pub fn from_terms(terms: &[TermJson]) -> Result<Self> {
        let mut p = Polynomial::zero();
        for t in terms {
            let c: BigInt = match &t.coeff {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("bad coefficient {n}")))?,
                serde_json::Value::String(s) => {
                    s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s}")))?
                }
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            let (mut x, mut y) = (t.x.clone(), t.y.clone());
            trim(&mut x);
            trim(&mut y);
            p.add_term(Monomial { beta: t.beta, x, y }, c);
        }
        Ok(p)
    }
}

/// One term of the structured serialization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: serde_json::Value,
    pub beta: u32,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

/// Partial substitution map for [`Polynomial::specialize`].
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    pub beta: Option<Polynomial>,
    pub x: BTreeMap<usize, Polynomial>,
    pub y: BTreeMap<usize, Polynomial>,
}

impl Assignment {
    pub fn beta(mut self, b: i64) -> Self {
        self.beta = Some(Polynomial::constant(b));
        self
    }

    pub fn x(mut self, i: usize, p: Polynomial) -> Self {
        self.x.insert(i, p);
        self
    }

    pub fn y(mut self, j: usize, p: Polynomial) -> Self {
        self.y.insert(j, p);
        self
    }

    /// Assign every `x_1..x_m` and `y_1..y_m` a constant.
    pub fn all(mut self, m: usize, xv: i64, yv: i64) -> Self {
        for k in 1..=m {
            self.x.insert(k, Polynomial::constant(xv));
            self.y.insert(k, Polynomial::constant(yv));
        }
        self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: String, e: u32| {
            if e == 1 {
                parts.push(name);
            } else if e > 1 {
                parts.push(format!("{name}^{e}"));
            }
        };
        for (k, &e) in self.x.iter().enumerate() {
            push(format!("x{}", k + 1), e);
        }
        for (k, &e) in self.y.iter().enumerate() {
            push(format!("y{}", k + 1), e);
        }
        push("β".to_string(), self.beta);
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for Polynomial {
    /// Canonical order, largest term first, e.g. `x1*y1*β + x1 + y1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_default() += c1 * c2;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// `π_i(f) = ((1+βx_{i+1})f − (1+βx_i)s_i f) / (x_i − x_{i+1})`.
pub fn pi(i: usize, f: &Polynomial) -> Polynomial {
    let b = Polynomial::beta();
    let left = f + &(&b * &f.mul_x(i + 1));
    let sf = f.swap_x(i);
    let right = &sf + &(&b * &sf.mul_x(i));
    (&left - &right)
        .div_x_diff(i)
        .expect("internal error: nonzero remainder in divided difference")
}

/// `G_{w₀} = ∏_{i+j ≤ n} (x_i ⊕ y_j)`.
pub fn grothendieck_top(n: usize) -> Polynomial {
    let mut g = Polynomial::one();
    for i in 1..n {
        for j in 1..=n - i {
            g = &g * &Polynomial::oplus(i, j);
        }
    }
    g
}

type Cache = RwLock<HashMap<Permutation, Polynomial>>;

fn dd_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimit { n, limit })
    } else {
        Ok(())
    }
}

/// The β-double Grothendieck polynomial by divided differences from `w₀`.
pub fn grothendieck_dd(w: &Permutation) -> Result<Polynomial> {
    grothendieck_dd_with_limit(w, DEFAULT_POLY_LIMIT)
}

pub fn grothendieck_dd_with_limit(w: &Permutation, limit: usize) -> Result<Polynomial> {
    check_limit(w.n(), limit)?;
    Ok(dd_memo(w))
}

fn dd_memo(w: &Permutation) -> Polynomial {
    if let Some(g) = dd_cache().read().unwrap().get(w) {
        return g.clone();
    }
    let g = match (1..w.n()).find(|&i| w.at(i) < w.at(i + 1)) {
        None => grothendieck_top(w.n()),
        Some(i) => pi(i, &dd_memo(&w.times_simple(i))),
    };
    dd_cache().write().unwrap().insert(w.clone(), g.clone());
    g
}

/// Uncached divided-difference descent; `last_ascent` picks the rightmost
/// ascent at every step instead of the leftmost.
pub fn grothendieck_dd_path(w: &Permutation, last_ascent: bool) -> Polynomial {
    let mut ascents = (1..w.n()).filter(|&i| w.at(i) < w.at(i + 1));
    let step = if last_ascent { ascents.next_back() } else { ascents.next() };
    match step {
        None => grothendieck_top(w.n()),
        Some(i) => pi(i, &grothendieck_dd_path(&w.times_simple(i), last_ascent)),
    }
}

/// `𝔖_w(x; y) = G^{(0)}_w(x; −y)`.
pub fn schubert_dd(w: &Permutation) -> Result<Polynomial> {
    Ok(grothendieck_dd(w)?.schubert_specialize())
}
