//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bumpless::asm::{enumerate_asm, Asm};
use bumpless::bpd::{grothendieck_bpd, mpipes, phi, pipes, pipes_by_filter, rpipes, schubert_bpd, Tile};
use bumpless::hecke::{enumerate_dt, enumerate_hbpd, omega, omega_inv, shape_of};
use bumpless::opd::grothendieck_opd;
use bumpless::perm::{Permutation, Word};
use bumpless::poly::{grothendieck_dd, schubert_dd, Assignment, Polynomial};
use bumpless::transition::{grothendieck_transition, t_map, transition_data};
use bumpless::vex::{fsyt_of, gamma, kmy_sum, svt_of};

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn o(i: usize, j: usize) -> Polynomial {
    Polynomial::oplus(i, j)
}

fn three_way() -> Outcome {
    for n in [4, 5] {
        let start = Instant::now();
        for w in Permutation::all(n) {
            let dd = grothendieck_dd(&w).unwrap();
            check(grothendieck_bpd(&w).unwrap() == dd, || format!("bpd differs at {w}"))?;
            check(grothendieck_transition(&w).unwrap() == dd, || format!("transition differs at {w}"))?;
        }
        println!("  S{n}: {:.2?}", start.elapsed());
    }
    Ok(())
}

fn ordinary() -> Outcome {
    for w in Permutation::all(4) {
        check(grothendieck_opd(&w).unwrap() == grothendieck_dd(&w).unwrap(), || format!("differs at {w}"))?;
    }
    Ok(())
}

fn worked_example() -> Outcome {
    let w = p("2143");
    let beta = Polynomial::beta();
    let tail = &Polynomial::one() + &(&beta * &o(3, 3));
    let g = &(&o(1, 1) * &o(3, 3))
        + &(&(&(&o(1, 1) * &o(2, 1)) * &tail)
            + &(&(&(&o(1, 1) * &o(1, 2)) * &tail) + &(&(&(&(&beta * &o(1, 1)) * &o(1, 2)) * &o(2, 1)) * &tail)));
    check(grothendieck_dd(&w).unwrap() == g, || "G_2143 (dd)".into())?;
    check(grothendieck_bpd(&w).unwrap() == g, || "G_2143 (bpd)".into())?;
    let d = |i: usize, j: usize| &Polynomial::x(i) - &Polynomial::y(j);
    let s = &(&d(1, 1) * &d(3, 3)) + &(&(&d(1, 1) * &d(2, 1)) + &(&d(1, 1) * &d(1, 2)));
    check(schubert_dd(&w).unwrap() == s, || "S_2143 (dd)".into())?;
    check(schubert_bpd(&w).unwrap() == s, || "S_2143 (bpd)".into())?;
    let counts = [
        pipes(&w).unwrap().len(),
        rpipes(&w).unwrap().len(),
        mpipes(&p("132")).unwrap().len(),
        pipes(&p("1432")).unwrap().len(),
    ];
    check(counts == [4, 3, 3, 5], || format!("counts {counts:?}"))
}

fn key_theorem() -> Outcome {
    for n in [4, 5] {
        let all = enumerate_asm(n).unwrap();
        check(all.len() == [42, 429][n - 4], || format!("|ASM({n})| = {}", all.len()))?;
        for a in &all {
            check(phi(a).demazure() == a.key(), || format!("{a:?}"))?;
        }
    }
    let fig = Asm::new(vec![
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 1, 0, 0, 0, -1, 1],
        vec![1, 0, -1, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0, 0, 0],
    ])
    .unwrap();
    check(fig.key() == p("5241763") && phi(&fig).demazure() == p("5241763"), || "figure key".into())
}

/// All `{−1,0,1}` matrices whose rows and columns alternate and sum to 1.
fn naive_asm_count(n: usize) -> usize {
    let alternating = |v: &[i8]| {
        let mut s = 0i8;
        for &x in v {
            s += x;
            if !(0..=1).contains(&s) {
                return false;
            }
        }
        s == 1
    };
    let rows: Vec<Vec<i8>> = (0..3usize.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % 3) as i8 - 1;
                    k /= 3;
                    d
                })
                .collect()
        })
        .collect();
    let mut count = 0;
    let total = rows.len().pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let m: Vec<&Vec<i8>> = (0..n)
            .map(|_| {
                let r = &rows[c % rows.len()];
                c /= rows.len();
                r
            })
            .collect();
        if m.iter().all(|r| alternating(r)) && (0..n).all(|j| alternating(&m.iter().map(|r| r[j]).collect::<Vec<_>>())) {
            count += 1;
        }
    }
    count
}

fn enumeration() -> Outcome {
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_asm(n).unwrap().len()).collect();
    check(counts == [1, 2, 7, 42, 429], || format!("{counts:?}"))?;
    for n in 1..=4 {
        let naive = naive_asm_count(n);
        check(naive == counts[n - 1], || format!("brute force n={n} gives {naive}"))?;
    }
    Ok(())
}

fn closure_filter() -> Outcome {
    for w in Permutation::all(4) {
        check(pipes(&w).unwrap() == pipes_by_filter(&w).unwrap(), || format!("differs at {w}"))?;
    }
    Ok(())
}

fn vexillary() -> Outcome {
    for v in Permutation::all(5).into_iter().filter(Permutation::is_vexillary) {
        let all = pipes(&v).unwrap();
        check(all == rpipes(&v).unwrap(), || format!("{v} has a non-reduced pipe dream"))?;
        let tabs = fsyt_of(&v).unwrap();
        check(tabs.len() == all.len(), || format!("|FSYT({v})| = {}", tabs.len()))?;
        let mut image = BTreeSet::new();
        for t in &tabs {
            let q = gamma(t, &v).unwrap();
            let lhs: Polynomial =
                t.shape().cells().into_iter().map(|(i, j)| o(t.at(i, j), t.at(i, j) + j - i)).product();
            let rhs: Polynomial = q.blanks().into_iter().map(|(i, j)| o(i, j)).product();
            check(lhs == rhs, || format!("gamma weight at {v}"))?;
            image.insert(q);
        }
        check(image == all, || format!("gamma image at {v}"))?;
        check(kmy_sum(&v).unwrap() == grothendieck_dd(&v).unwrap(), || format!("kmy at {v}"))?;
        check(svt_of(&v).unwrap().len() == mpipes(&v).unwrap().len(), || format!("set-valued count at {v}"))?;
    }
    Ok(())
}

fn hecke() -> Outcome {
    for n in 1..=4 {
        let hs = enumerate_hbpd(n).unwrap();
        let mut image = BTreeSet::new();
        for q in &hs {
            let t = omega(q).unwrap();
            check(t.shape() == &shape_of(q).unwrap(), || format!("shape changed for {q}"))?;
            check(omega_inv(&t, n).unwrap() == *q, || format!("inverse fails for {q}"))?;
            image.insert(t);
        }
        let dts: BTreeSet<_> = enumerate_dt(n - 1).into_iter().collect();
        check(image.len() == hs.len() && image == dts, || format!("not a bijection at n={n}"))?;
    }
    for n in 1..=5 {
        for q in enumerate_hbpd(n).unwrap() {
            check(omega(&q).unwrap().demazure(n).unwrap() == q.demazure(), || format!("{q}"))?;
        }
    }
    let mut m = vec![vec![0i8; 7]; 7];
    for (i, j, v) in [(1, 6, 1), (2, 4, 1), (3, 5, 1), (4, 2, 1), (4, 6, -1), (4, 7, 1), (5, 1, 1), (6, 3, 1), (7, 6, 1)] {
        m[i - 1][j - 1] = v;
    }
    let fig = phi(&Asm::new(m).unwrap());
    let t = omega(&fig).unwrap();
    check(t.column_reading_word() == Word(vec![1, 3, 4, 6, 2, 3, 5, 1, 2, 4, 2, 1]), || "figure word".into())?;
    check(t.demazure(7).unwrap() == p("5427136") && fig.demazure() == p("5427136"), || "figure product".into())
}

fn transition_bijection() -> Outcome {
    for w in Permutation::all(4).into_iter().filter(|w| !w.is_identity()) {
        let d = transition_data(&w).unwrap();
        let (a, b) = (d.a, d.b);
        let ob = &Polynomial::beta() * &o(a, b);
        let mut target = BTreeSet::new();
        for set in d.subsets() {
            target.extend(pipes(&d.w_i(&set).unwrap()).unwrap());
        }
        let mut image = BTreeSet::new();
        for q in pipes(&w).unwrap() {
            let r = t_map(&q).unwrap();
            let factor = if q.at(a, b) == Tile::Blank { ob.clone() } else { &Polynomial::one() + &ob };
            check(q.weight() == &factor * &r.weight(), || format!("weight factorization at {q}"))?;
            check(image.insert(r), || format!("t is not injective on {w}"))?;
        }
        check(image == target, || format!("image of t at {w}"))?;
    }
    Ok(())
}

fn schubert() -> Outcome {
    for w in Permutation::all(5) {
        check(schubert_bpd(&w).unwrap() == schubert_dd(&w).unwrap(), || format!("differs at {w}"))?;
        let ell = w.length() as u32;
        for q in pipes(&w).unwrap() {
            let at_zero = q.weight().div_beta_pow(ell).unwrap().specialize(&Assignment::default().beta(0));
            check(at_zero.is_zero() != q.is_reduced(), || format!("β=0 at {q}"))?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("three-way oracle agreement on S4 and S5", three_way),
        ("ordinary pipe dream oracle on S4", ordinary),
        ("worked example for 2143 and example counts", worked_example),
        ("demazure product equals key on ASM(4), ASM(5)", key_theorem),
        ("ASM enumeration with brute-force confirmation", enumeration),
        ("droop closure equals filter on S4", closure_filter),
        ("vexillary suite on S5", vexillary),
        ("Hecke suite", hecke),
        ("transition bijection on S4", transition_bijection),
        ("Schubert specialization on S5", schubert),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS {}: {name}", k + 1),
            Err(e) => {
                println!("FAIL {}: {name}: {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
