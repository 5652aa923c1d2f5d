//! The property suite behind `bumpless verify`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use bumpless::asm::{enumerate_asm, Asm};
use bumpless::bpd::{enumerate_bpd, grothendieck_bpd, mpipes, phi, phi_inv, pipes, pipes_by_filter, schubert_bpd};
use bumpless::hecke::{enumerate_dt, enumerate_hbpd, omega, omega_inv};
use bumpless::opd::{enumerate_opd, grothendieck_opd};
use bumpless::perm::Permutation;
use bumpless::poly::{grothendieck_dd, schubert_dd};
use bumpless::transition::{grothendieck_transition, t_map, transition_data};
use bumpless::vex::{fsyt_of, gamma, kmy_sum, svt_of};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ASM_COUNTS: [usize; 6] = [1, 2, 7, 42, 429, 7436];

type Check = Box<dyn Fn() -> bool>;

fn sizes(level: usize, cap: usize) -> std::ops::RangeInclusive<usize> {
    1..=level.min(cap)
}

/// Run every check up to size `level`; each entry is `(name, passed)`.
pub fn run(level: usize, seed: u64) -> Vec<(String, bool)> {
    let checks: Vec<(String, Check)> = vec![
        (
            format!("asm counts up to {}", level.min(6)),
            Box::new(move || sizes(level, 6).all(|n| enumerate_asm(n).map(|v| v.len()) == Ok(ASM_COUNTS[n - 1]))),
        ),
        (
            "phi round trip and demazure = key".into(),
            Box::new(move || {
                sizes(level, 5).all(|n| {
                    enumerate_asm(n).unwrap().iter().all(|a| {
                        let b = phi(a);
                        phi_inv(&b) == *a && b.demazure() == a.key()
                    })
                })
            }),
        ),
        (
            "droop closure = filter".into(),
            Box::new(move || sizes(level, 4).all(|n| Permutation::all(n).iter().all(|w| pipes(w).ok() == pipes_by_filter(w).ok()))),
        ),
        (
            "dd = bpd = transition".into(),
            Box::new(move || {
                sizes(level, 5).all(|n| {
                    Permutation::all(n).iter().all(|w| {
                        let dd = grothendieck_dd(w).unwrap();
                        grothendieck_bpd(w).unwrap() == dd && grothendieck_transition(w).unwrap() == dd
                    })
                })
            }),
        ),
        (
            "schubert bpd = dd".into(),
            Box::new(move || sizes(level, 5).all(|n| Permutation::all(n).iter().all(|w| schubert_bpd(w).unwrap() == schubert_dd(w).unwrap()))),
        ),
        (
            "ordinary pipe dreams".into(),
            Box::new(move || {
                sizes(level, 4).all(|n| {
                    Permutation::all(n).iter().all(|w| {
                        grothendieck_opd(w).unwrap() == grothendieck_dd(w).unwrap()
                            && enumerate_opd(w).unwrap().len() == mpipes(w).unwrap().len()
                    })
                })
            }),
        ),
        (
            "vexillary tableaux".into(),
            Box::new(move || {
                sizes(level, 5).all(|n| {
                    Permutation::all(n).iter().filter(|v| v.is_vexillary()).all(|v| {
                        let all = pipes(v).unwrap();
                        let image: BTreeSet<_> = fsyt_of(v).unwrap().iter().map(|t| gamma(t, v).unwrap()).collect();
                        image == all
                            && kmy_sum(v).unwrap() == grothendieck_dd(v).unwrap()
                            && svt_of(v).unwrap().len() == mpipes(v).unwrap().len()
                    })
                })
            }),
        ),
        (
            "hecke bijection".into(),
            Box::new(move || {
                sizes(level, 5).all(|n| {
                    let hs = enumerate_hbpd(n).unwrap();
                    let image: BTreeSet<_> = hs.iter().map(|p| omega(p).unwrap()).collect();
                    let dts: BTreeSet<_> = enumerate_dt(n - 1).into_iter().collect();
                    image.len() == hs.len()
                        && image == dts
                        && hs.iter().all(|p| {
                            let t = omega(p).unwrap();
                            omega_inv(&t, n).ok().as_ref() == Some(p) && t.demazure(n).unwrap() == p.demazure()
                        })
                })
            }),
        ),
        (
            "transition bijection".into(),
            Box::new(move || {
                sizes(level, 4).all(|n| {
                    Permutation::all(n).iter().filter(|w| !w.is_identity()).all(|w| {
                        let d = transition_data(w).unwrap();
                        let mut target = BTreeSet::new();
                        for set in d.subsets() {
                            target.extend(pipes(&d.w_i(&set).unwrap()).unwrap());
                        }
                        let source = pipes(w).unwrap();
                        let image: BTreeSet<_> = source.iter().map(|p| t_map(p).unwrap()).collect();
                        image.len() == source.len() && image == target
                    })
                })
            }),
        ),
        (
            format!("key is independent of inflation order (seed {seed})"),
            Box::new(move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n = level.min(5);
                let all = enumerate_asm(n).unwrap();
                (0..50).all(|_| {
                    let a = all.choose(&mut rng).unwrap();
                    let mut b: Asm = a.clone();
                    while let Some(&c) = b.removable_negatives().choose(&mut rng) {
                        b = b.inflate(c).unwrap();
                    }
                    b.to_permutation() == Some(a.key())
                })
            }),
        ),
        (
            "pipe dreams of every size are counted by asm".into(),
            Box::new(move || sizes(level, 5).all(|n| enumerate_bpd(n).map(|v| v.len()) == Ok(ASM_COUNTS[n - 1]))),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let ok = catch_unwind(AssertUnwindSafe(|| f())).unwrap_or(false);
            (name, ok)
        })
        .collect()
}
