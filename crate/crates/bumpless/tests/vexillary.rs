use std::collections::{BTreeMap, BTreeSet, VecDeque};

use bumpless::bpd::{enumerate_partition_bpds, mpipes, pipes, rothe_bpd, rpipes, Bpd, PartitionBpd};
use bumpless::perm::Permutation;
use bumpless::poly::{grothendieck_dd, Polynomial};
use bumpless::vex::{
    flag_of, fsyt_of, gamma, gamma_bar, inverse_local_moves, kmy_sum, lambda_of, local_moves, mu_of, saturate,
    svt_of, top_bpd, Partition,
};

fn vexillary(n: usize) -> Vec<Permutation> {
    Permutation::all(n).into_iter().filter(Permutation::is_vexillary).collect()
}

fn reach(start: Bpd, step: fn(&Bpd) -> Vec<(bumpless::bpd::Move, Bpd)>) -> BTreeSet<Bpd> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut q = VecDeque::from([start]);
    while let Some(p) = q.pop_front() {
        for (_, r) in step(&p) {
            if seen.insert(r.clone()) {
                q.push_back(r);
            }
        }
    }
    seen
}

#[test]
fn gamma_is_a_weight_preserving_bijection() {
    for v in vexillary(5) {
        let all = pipes(&v).unwrap();
        assert_eq!(all, rpipes(&v).unwrap(), "{v}");
        let tabs = fsyt_of(&v).unwrap();
        assert_eq!(tabs.len(), all.len(), "{v}");
        let mut image = BTreeSet::new();
        for t in &tabs {
            let p = gamma(t, &v).unwrap();
            let lhs: Polynomial = t
                .shape()
                .cells()
                .into_iter()
                .map(|(i, j)| Polynomial::oplus(t.at(i, j), t.at(i, j) + j - i))
                .product();
            let rhs: Polynomial = p.blanks().into_iter().map(|(i, j)| Polynomial::oplus(i, j)).product();
            assert_eq!(lhs, rhs);
            image.insert(p);
        }
        assert_eq!(image, all, "{v}");
    }
}

#[test]
fn kmy_formula() {
    for v in vexillary(5) {
        assert_eq!(kmy_sum(&v).unwrap(), grothendieck_dd(&v).unwrap(), "{v}");
    }
    let dom = "4312".parse::<Permutation>().unwrap();
    let prod: Polynomial = dom.rothe_diagram().into_iter().map(|(i, j)| Polynomial::oplus(i, j)).product();
    assert_eq!(kmy_sum(&dom).unwrap(), prod);
}

#[test]
fn gamma_bar_matches_marked_pipes() {
    for v in vexillary(5) {
        let svt = svt_of(&v).unwrap();
        let marked = mpipes(&v).unwrap();
        assert_eq!(svt.len(), marked.len(), "{v}");
        let mut image = BTreeSet::new();
        for t in &svt {
            let m = gamma_bar(t, &v).unwrap();
            assert_eq!(t.weight(), m.weight());
            image.insert(m);
        }
        assert_eq!(image, marked, "{v}");
    }
}

#[test]
fn saturation_and_upward_elbows() {
    for v in vexillary(5) {
        for t in fsyt_of(&v).unwrap() {
            let s = saturate(&t);
            assert_eq!(s.flatten(), t);
            assert!(s.is_saturated());
            assert_eq!(s.excess_cells(), gamma(&t, &v).unwrap().upward_elbows());
        }
    }
}

#[test]
fn local_moves_connect_pipes() {
    for v in vexillary(5) {
        let all = pipes(&v).unwrap();
        let top = top_bpd(&v).unwrap();
        assert_eq!(top.blanks(), mu_of(&v).unwrap().cells());
        assert!(all.contains(&top));
        assert_eq!(reach(rothe_bpd(&v), local_moves), all, "{v}");
        assert_eq!(reach(top, inverse_local_moves), all, "{v}");
    }
}

#[test]
fn local_moves_of_1432() {
    let v: Permutation = "1432".parse().unwrap();
    let top = top_bpd(&v).unwrap();
    // longest chain of local moves from the Rothe pipe dream to the top
    let mut depth = BTreeMap::from([(rothe_bpd(&v), 0usize)]);
    let mut q = VecDeque::from([rothe_bpd(&v)]);
    while let Some(p) = q.pop_front() {
        let d = depth[&p];
        for (_, r) in local_moves(&p) {
            let e = depth.entry(r.clone()).or_insert(0);
            if *e < d + 1 {
                *e = d + 1;
                q.push_back(r);
            }
        }
    }
    assert_eq!(depth[&top], 3);
    assert_eq!(depth.len(), 5);
}

#[test]
fn diagonal_counts_agree() {
    for v in vexillary(5) {
        let lam = lambda_of(&v).unwrap();
        let mu = mu_of(&v).unwrap();
        let count = |cells: &BTreeSet<(usize, usize)>| {
            let mut m: BTreeMap<isize, usize> = BTreeMap::new();
            for &(i, j) in cells {
                *m.entry(j as isize - i as isize).or_default() += 1;
            }
            m
        };
        assert_eq!(count(&v.rothe_diagram()), count(&mu.cells()), "{v}");
        assert!(mu.fits_in(&lam));
        assert!(flag_of(&v).unwrap().iter().enumerate().all(|(k, &f)| f > k));
    }
}

#[test]
fn kreiman_uniqueness() {
    let lam = Partition::new(vec![3, 3, 2]).unwrap();
    let free: Vec<PartitionBpd> =
        enumerate_partition_bpds(&lam).into_iter().filter(|q| q.crosses().is_empty()).collect();
    for mu in lam.subpartitions() {
        let hits = free.iter().filter(|q| q.blanks() == mu.cells()).count();
        assert_eq!(hits, 1, "{mu}");
    }
}

#[test]
fn crossings_in_mutable_region_iff_2143() {
    let pattern: Permutation = "2143".parse().unwrap();
    for w in Permutation::all(5) {
        let lam = bumpless::bpd::lambda_of(&w);
        let inside = pipes(&w).unwrap().iter().any(|p| p.crosses().iter().any(|&c| lam.contains(c)));
        assert_eq!(inside, !w.avoids(&pattern), "{w}");
        assert_eq!(pipes(&w).unwrap() == rpipes(&w).unwrap(), w.is_vexillary(), "{w}");
    }
}

#[test]
fn non_vexillary_is_rejected() {
    let w: Permutation = "2143".parse().unwrap();
    assert!(kmy_sum(&w).is_err());
    assert!(top_bpd(&w).is_err());
    assert!(fsyt_of(&w).is_err());
}
