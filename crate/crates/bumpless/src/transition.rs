//! Maximal corners, the transition recursion and the map `t` on pipe dreams.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::asm::Asm;
use crate::bpd::Bpd;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::{Cell, Error, Result, DEFAULT_POLY_LIMIT};

/// `mc(w)`: the rightmost cell in the last row of `D(w)`.
pub fn max_corner(w: &Permutation) -> Result<Cell> {
    let d = w.rothe_diagram();
    d.iter().next_back().copied().ok_or(Error::IdentityInput)
}

/// Everything the transition formula needs about `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionData {
    pub w: Permutation,
    pub a: usize,
    pub b: usize,
    pub b_prime: usize,
    /// `φ(w)`: rows of the pivots of `mc(w)`, increasing.
    pub phi: Vec<usize>,
}

pub fn transition_data(w: &Permutation) -> Result<TransitionData> {
    let (a, b) = max_corner(w)?;
    let phi = Asm::from_permutation(w).pivots((a, b)).into_iter().map(|p| p.0).collect();
    Ok(TransitionData { w: w.clone(), a, b, b_prime: w.inverse().at(b), phi })
}

impl TransitionData {
    /// `w_I = w·t_{a,b'}·c^{(a)}_I`.
    pub fn w_i(&self, set: &[usize]) -> Result<Permutation> {
        if set.iter().any(|i| !self.phi.contains(i)) {
            return Err(Error::NotPivotSubset(set.to_vec(), self.phi.clone()));
        }
        let n = self.w.n();
        let t = Permutation::transposition(n, self.a, self.b_prime);
        let c = Permutation::cycle(n, self.a, set);
        self.w.compose(&t)?.compose(&c)
    }

    /// Subsets of `φ(w)` in bitmask order.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        (0u32..1 << self.phi.len())
            .map(|m| self.phi.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &r)| r).collect())
            .collect()
    }
}

/// One term `coefficient · G[w]` of a transition expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionTerm {
    pub set: Vec<usize>,
    pub coefficient: Polynomial,
    pub permutation: Permutation,
}

/// `G_w = (x_a⊕y_b)G_{w_∅} + (1+β(x_a⊕y_b)) Σ_{I≠∅} β^{|I|−1} G_{w_I}`.
pub fn transition_expand(w: &Permutation) -> Result<Vec<TransitionTerm>> {
    let data = transition_data(w)?;
    let o = Polynomial::oplus(data.a, data.b);
    let one_plus = &Polynomial::one() + &(&Polynomial::beta() * &o);
    data.subsets()
        .into_iter()
        .map(|set| {
            let coefficient = if set.is_empty() {
                o.clone()
            } else {
                &Polynomial::beta().pow(set.len() as u32 - 1) * &one_plus
            };
            Ok(TransitionTerm { permutation: data.w_i(&set)?, set, coefficient })
        })
        .collect()
}

/// Printable formal sum `G[w] = (…)*G[u] + …`.
pub struct Expansion<'a>(pub &'a Permutation, pub &'a [TransitionTerm]);

impl fmt::Display for Expansion<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G[{}] = ", self.0)?;
        for (k, t) in self.1.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*G[{}]", t.coefficient, t.permutation)?;
        }
        Ok(())
    }
}

type Cache = RwLock<HashMap<Permutation, Polynomial>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Grothendieck polynomial by the transition recursion.
pub fn grothendieck_transition(w: &Permutation) -> Result<Polynomial> {
    grothendieck_transition_with_limit(w, DEFAULT_POLY_LIMIT)
}

pub fn grothendieck_transition_with_limit(w: &Permutation, limit: usize) -> Result<Polynomial> {
    if w.n() > limit {
        return Err(Error::SizeLimit { n: w.n(), limit });
    }
    Ok(recurse(w))
}

fn recurse(w: &Permutation) -> Polynomial {
    if let Some(g) = cache().read().unwrap().get(w) {
        return g.clone();
    }
    let g = if w.is_identity() {
        Polynomial::one()
    } else if w.is_dominant() {
        w.rothe_diagram().into_iter().map(|(i, j)| Polynomial::oplus(i, j)).product()
    } else {
        let mc = max_corner(w).expect("not the identity");
        let mut sum = Polynomial::zero();
        for term in transition_expand(w).expect("not the identity") {
            if let Ok(next) = max_corner(&term.permutation) {
                assert!(next < mc, "maximal corner of {} does not decrease from {}", term.permutation, w);
            }
            sum = &sum + &(&term.coefficient * &recurse(&term.permutation));
        }
        sum
    };
    cache().write().unwrap().insert(w.clone(), g.clone());
    g
}

/// The map `t`: reroute the rectangle `[a, w⁻¹(b)] × [b, w(a)]` at `mc(δ(P))`.
pub fn t_map(p: &Bpd) -> Result<Bpd> {
    let w = p.demazure();
    let (a, b) = max_corner(&w)?;
    let tile = p.at(a, b);
    if !matches!(tile, crate::bpd::Tile::Blank | crate::bpd::Tile::ElbowNW) {
        return Err(Error::TransitionTile((a, b)));
    }
    let se = (w.inverse().at(b), w.at(a));
    p.toggle_rectangle((a, b), se)
        .ok_or_else(|| Error::InvalidBpd(format!("rectangle {:?}..{:?} cannot be rerouted", (a, b), se)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpd::rothe_bpd;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn corners() {
        assert_eq!(max_corner(&p("2143")).unwrap(), (3, 3));
        assert_eq!(max_corner(&p("1432")).unwrap(), (3, 2));
        assert_eq!(max_corner(&Permutation::longest(5)).unwrap(), (4, 1));
        assert_eq!(max_corner(&Permutation::identity(3)), Err(Error::IdentityInput));
    }

    #[test]
    fn w_sets_of_2143() {
        let d = transition_data(&p("2143")).unwrap();
        assert_eq!(d.phi, vec![1, 2]);
        assert_eq!(d.b_prime, 4);
        let got: Vec<Permutation> = d.subsets().iter().map(|s| d.w_i(s).unwrap()).collect();
        assert_eq!(got, vec![p("2134"), p("3124"), p("2314"), p("3214")]);
        assert!(d.w_i(&[3]).is_err());
    }

    #[test]
    fn expansion_text() {
        let w = p("2143");
        let terms = transition_expand(&w).unwrap();
        let s = Expansion(&w, &terms).to_string();
        assert!(s.starts_with("G[2143] = (x3*y3*β + x3 + y3)*G[2134] + "), "{s}");
        assert_eq!(terms[3].coefficient, &Polynomial::beta() * &terms[1].coefficient);
    }

    #[test]
    fn t_on_rothe() {
        for w in Permutation::all(4).into_iter().filter(|w| !w.is_identity()) {
            let d = transition_data(&w).unwrap();
            assert_eq!(t_map(&rothe_bpd(&w)).unwrap(), rothe_bpd(&d.w_i(&[]).unwrap()));
        }
    }

    #[test]
    fn dominant_single_term() {
        let terms = transition_expand(&p("3214")).unwrap();
        assert_eq!(terms.len(), 1);
    }
}
