use std::collections::{BTreeMap, BTreeSet};

use bumpless::asm::{asm_leq, enumerate_asm, Asm};
use bumpless::bpd::{
    enumerate_bpd, enumerate_partition_bpds, grothendieck_bpd, lambda_of, mpipes, phi, phi_inv, pipes,
    pipes_by_deflation, pipes_by_filter, restrict, rothe_bpd, rpipes, schubert_bpd, Bpd, Tile,
};
use bumpless::perm::Permutation;
use bumpless::poly::{grothendieck_dd, schubert_dd, Assignment, Polynomial};
use bumpless::transition::{grothendieck_transition, t_map, transition_data};
use bumpless::vex::Partition;

fn s(n: usize) -> Vec<Permutation> {
    Permutation::all(n)
}

#[test]
fn phi_roundtrip_and_diagram_sets() {
    for a in enumerate_asm(4).unwrap() {
        let b = phi(&a);
        assert_eq!(phi_inv(&b), a);
        assert_eq!(b.blanks(), a.rothe_diagram());
        assert_eq!(b.upward_elbows(), a.negatives());
    }
    for w in s(4) {
        assert_eq!(phi(&Asm::from_permutation(&w)), rothe_bpd(&w));
        assert_eq!(rothe_bpd(&w).blanks(), w.rothe_diagram());
    }
}

#[test]
fn demazure_is_key() {
    for n in 1..=5 {
        for b in enumerate_bpd(n).unwrap() {
            let a = phi_inv(&b);
            assert_eq!(b.demazure(), a.key());
            assert_eq!(b.demazure_graphical(), b.demazure());
            let k = Asm::from_permutation(&a.key());
            assert!(asm_leq(&k, &a).unwrap());
        }
    }
}

#[test]
fn tile_balance_on_diagonals() {
    for n in 1..=5 {
        for b in enumerate_bpd(n).unwrap() {
            let mut diag: BTreeMap<isize, isize> = BTreeMap::new();
            let mut anti: BTreeMap<usize, isize> = BTreeMap::new();
            for i in 1..=n {
                for j in 1..=n {
                    let d = j as isize - i as isize;
                    match b.at(i, j) {
                        Tile::Blank => *diag.entry(d).or_default() += 1,
                        Tile::Cross => *diag.entry(d).or_default() -= 1,
                        Tile::Horizontal => *anti.entry(i + j).or_default() += 1,
                        Tile::Vertical => *anti.entry(i + j).or_default() -= 1,
                        _ => {}
                    }
                }
            }
            assert!(diag.values().all(|&v| v == 0) && anti.values().all(|&v| v == 0), "{b}");
        }
    }
}

#[test]
fn labels_agree_with_picture() {
    for n in 1..=4 {
        for b in enumerate_bpd(n).unwrap() {
            for (cell, a) in b.labelled_crossings() {
                assert_eq!(b.geometric_label(cell), a);
            }
        }
    }
}

#[test]
fn reducedness_equivalences() {
    for b in enumerate_bpd(5).unwrap() {
        let by_length = b.is_reduced();
        let by_pairs = b.crossing_counts().values().all(|&c| c <= 1);
        assert_eq!(by_length, by_pairs, "{b}");
        if by_length {
            assert_eq!(b.pipe_permutation(), b.demazure_graphical());
        }
    }
}

#[test]
fn closure_equals_filter() {
    for n in 1..=4 {
        for w in s(n) {
            let bfs = pipes(&w).unwrap();
            assert_eq!(bfs, pipes_by_filter(&w).unwrap(), "{w}");
            assert_eq!(bfs, pipes_by_deflation(&w).unwrap(), "{w}");
        }
    }
}

#[test]
fn closure_equals_filter_s5() {
    let all = enumerate_bpd(5).unwrap();
    let mut by_w: BTreeMap<Permutation, BTreeSet<Bpd>> = BTreeMap::new();
    for b in all {
        by_w.entry(b.demazure()).or_default().insert(b);
    }
    for w in s(5) {
        assert_eq!(pipes(&w).unwrap(), by_w.remove(&w).unwrap_or_default(), "{w}");
    }
}

#[test]
fn moves_preserve_demazure_and_counts() {
    for w in s(4) {
        for b in pipes(&w).unwrap() {
            let (c, u) = (b.crosses().len(), b.upward_elbows().len());
            for (_, q) in b.droop_moves() {
                assert_eq!(q.demazure(), w);
                assert_eq!(q.crosses().len(), c);
            }
            for (_, q) in b.kdroop_moves() {
                assert_eq!(q.demazure(), w);
                assert_eq!(q.crosses().len(), c + 1);
                assert_eq!(q.upward_elbows().len(), u);
            }
        }
    }
}

#[test]
fn three_way_oracle_s4() {
    for w in s(4) {
        let dd = grothendieck_dd(&w).unwrap();
        assert_eq!(grothendieck_bpd(&w).unwrap(), dd, "{w}");
        assert_eq!(grothendieck_transition(&w).unwrap(), dd, "{w}");
        assert_eq!(schubert_bpd(&w).unwrap(), schubert_dd(&w).unwrap(), "{w}");
    }
}

#[test]
fn marked_expansion_matches_weight() {
    for w in s(4) {
        let lhs = grothendieck_bpd(&w).unwrap();
        let rhs: Polynomial = mpipes(&w).unwrap().iter().map(|m| m.weight()).sum();
        assert_eq!(lhs, rhs, "{w}");
    }
}

#[test]
fn weight_at_one_counts_upward_elbows() {
    for w in s(4) {
        for b in pipes(&w).unwrap() {
            let v = b.weight().specialize(&Assignment::default().beta(1).all(4, 1, 0));
            assert_eq!(v, Polynomial::constant(1 << b.upward_elbows().len()));
        }
    }
}

#[test]
fn beta_zero_keeps_only_reduced() {
    for w in s(4) {
        let ell = w.length() as u32;
        for b in pipes(&w).unwrap() {
            let scaled = b.weight().div_beta_pow(ell).unwrap();
            let at_zero = scaled.specialize(&Assignment::default().beta(0));
            assert_eq!(at_zero.is_zero(), !b.is_reduced(), "{b}");
        }
    }
}

#[test]
fn outside_mutable_region_is_rothe() {
    for w in s(4) {
        let lam = lambda_of(&w);
        let r = rothe_bpd(&w);
        for b in pipes(&w).unwrap() {
            for i in 1..=4 {
                for j in 1..=4 {
                    if !lam.contains((i, j)) {
                        assert_eq!(b.at(i, j), r.at(i, j));
                    }
                }
            }
        }
    }
}

#[test]
fn completion_of_partition_tilings() {
    let lam = Partition::new(vec![3, 3, 2]).unwrap();
    let all = enumerate_partition_bpds(&lam);
    let comps: BTreeSet<Bpd> = all.iter().map(|q| q.complete()).collect();
    for q in &all {
        let c = q.complete();
        assert_eq!(&restrict(&c, &lam).unwrap(), q);
        for cell in c.blanks().iter().chain(&c.upward_elbows()) {
            assert!(lam.contains(*cell));
        }
    }
    let ws: BTreeSet<Permutation> = comps.iter().map(Bpd::demazure).collect();
    for w in ws {
        for b in pipes(&w).unwrap() {
            assert!(comps.contains(&b), "{w}");
        }
    }
}

#[test]
fn t_map_is_a_bijection_onto_union() {
    for w in s(4).into_iter().filter(|w| !w.is_identity()) {
        let d = transition_data(&w).unwrap();
        let (a, b) = (d.a, d.b);
        let o = Polynomial::oplus(a, b);
        let beta = Polynomial::beta();
        let mut image = BTreeSet::new();
        let mut target = BTreeSet::new();
        for set in d.subsets() {
            target.extend(pipes(&d.w_i(&set).unwrap()).unwrap());
        }
        let w0 = pipes(&d.w_i(&[]).unwrap()).unwrap();
        let source = pipes(&w).unwrap();
        for p in &source {
            let q = t_map(p).unwrap();
            assert!(image.insert(q.clone()), "not injective on {w}");
            let factor = if p.at(a, b) == Tile::Blank {
                &beta * &o
            } else {
                &Polynomial::one() + &(&beta * &o)
            };
            assert_eq!(p.weight(), &factor * &q.weight());
            assert_eq!(w0.contains(&q), p.at(a, b) == Tile::Blank);
        }
        assert_eq!(image, target, "{w}");
    }
}

#[test]
fn deflating_pivots_then_t_gives_rothe() {
    for w in s(4).into_iter().filter(|w| !w.is_identity()) {
        let d = transition_data(&w).unwrap();
        let a = Asm::from_permutation(&w);
        for set in d.subsets().into_iter().filter(|s| !s.is_empty()) {
            let p = phi(&a.deflate((d.a, d.b), &set).unwrap());
            assert_eq!(t_map(&p).unwrap(), rothe_bpd(&d.w_i(&set).unwrap()), "{w} {set:?}");
        }
    }
}

#[test]
fn example_counts() {
    let p = |s: &str| s.parse::<Permutation>().unwrap();
    assert_eq!(pipes(&p("2143")).unwrap().len(), 4);
    assert_eq!(rpipes(&p("2143")).unwrap().len(), 3);
    assert_eq!(mpipes(&p("132")).unwrap().len(), 3);
}

#[test]
fn involution_properties() {
    let id = rothe_bpd(&Permutation::identity(4));
    assert_eq!(id.antidiagonal_involution(), id);
    for b in enumerate_bpd(4).unwrap() {
        let r = b.antidiagonal_involution();
        assert_eq!(r.antidiagonal_involution(), b);
        let refl = |c: &(usize, usize)| (5 - c.1, 5 - c.0);
        assert_eq!(r.crosses(), b.blanks().iter().map(refl).collect());
        assert_eq!(r.blanks(), b.crosses().iter().map(refl).collect());
    }
}
