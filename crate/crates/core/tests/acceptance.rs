//! Acceptance criteria, checked exactly. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chainsub::classical::{barycentric, cms, colored_barycentric, edgewise, verify_prop_5_1, verify_prop_5_2};
use chainsub::colored::{eulerian_count_bruteforce, EulerianTable};
use chainsub::complex::is_simplicial_iso;
use chainsub::eulerian::{
    block_sequence_interlaces, eulerian_gamma, eulerian_polynomial, gamma_via_slides, GammaSelector, Method, Selector,
};
use chainsub::multichain::{admissible_iotas, multichain_subdivision, type_one};
use chainsub::poly::IntPolynomial;
use chainsub::sturm::is_real_rooted;
use chainsub::transforms::{
    bar_partition_violation, chain_count, conjugated_f_matrix, f_entry_recurrence_violation, h_matrix, transform_f,
    transform_h, ChainMethod,
};
use chainsub::verify::{edge, glued_triangles, hollow_triangle, test_complexes, triangle};
use chainsub::{HVector, SimplicialComplex};
use itertools::Itertools;
use num_bigint::BigInt;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn within(start: Instant, budget: Duration) -> Outcome {
    ensure(start.elapsed() < budget, || format!("took {:?}, budget {budget:?}", start.elapsed()))
}

/// The test set with the r values each complex is checked at.
fn cases() -> Vec<(String, SimplicialComplex, Vec<usize>)> {
    test_complexes()
        .into_iter()
        .map(|(name, c)| {
            let rs = if name == "edge" { vec![2, 3, 4] } else { vec![2, 3] };
            (name, c, rs)
        })
        .collect()
}

fn invariance() -> Outcome {
    let start = Instant::now();
    ensure(cases().len() == 4, || "expected four test complexes".into())?;
    for (name, c, rs) in cases() {
        for r in rs {
            let iotas = admissible_iotas(r);
            ensure(iotas.len() == 1 << (r - 1), || format!("r={r}: {} admissible maps", iotas.len()))?;
            let mut seen: Option<String> = None;
            for iota in &iotas {
                let sub = multichain_subdivision(&c, r, iota).map_err(|e| e.to_string())?;
                let bytes = format!("{:?}", sub.complex.f_vector().entries());
                if let Some(first) = &seen {
                    ensure(*first == bytes, || format!("{name} r={r} {iota:?}: {bytes} vs {first}"))?;
                }
                seen = Some(bytes);
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn f_formula() -> Outcome {
    for (name, c, rs) in cases() {
        for r in rs {
            let brute = type_one(&c, r).map_err(|e| e.to_string())?.complex.f_vector();
            let formula = transform_f(&c.f_vector(), r);
            ensure(brute == formula, || format!("{name} r={r}: {formula:?} vs brute force {brute:?}"))?;
        }
    }
    let simplex = triangle();
    ensure(simplex.f_vector().0 == ints(&[1, 3, 3, 1]), || "triangle f-vector".into())?;
    for (r, expected) in [(3, [1, 37, 90, 54]), (2, [1, 19, 42, 24])] {
        let f = transform_f(&simplex.f_vector(), r);
        ensure(f.0 == ints(&expected), || format!("r={r}: {f:?}"))?;
        ensure(f.euler_characteristic() == BigInt::from(1), || format!("r={r}: alternating sum"))?;
    }
    Ok(())
}

fn h_formula() -> Outcome {
    for (name, c, rs) in cases() {
        for r in rs {
            let brute = type_one(&c, r).map_err(|e| e.to_string())?.complex.h_vector();
            let formula = transform_h(&c.h_vector(), r);
            ensure(brute == formula, || format!("{name} r={r}: {formula:?} vs brute force {brute:?}"))?;
        }
    }
    for d in 1..=4 {
        for r in 1..=3 {
            ensure(h_matrix(d, r) == conjugated_f_matrix(d, r), || format!("d={d} r={r}: R != H F H^-1"))?;
        }
    }
    ensure(h_matrix(2, 2).column(0) == ints(&[1, 3, 0]), || "column 0 of R_2 at r=2".into())?;
    ensure(h_matrix(3, 3).column(0) == ints(&[1, 34, 19, 0]), || "column 0 of R_3 at r=3".into())
}

fn eulerian_recurrences() -> Outcome {
    let start = Instant::now();
    for d in 1..=5 {
        for r in 1..=3 {
            let brute = EulerianTable::bruteforce(d, r);
            ensure(EulerianTable::recurrence(d, r) == brute, || format!("d={d} r={r}: recurrence table"))?;
            if d <= 3 {
                for (s, j, m) in itertools::iproduct!(0..r, 1..=d, 0..=d) {
                    let direct = eulerian_count_bruteforce(d, j, m, s, r);
                    ensure(brute.count(s, j, m) == direct, || format!("d={d} r={r}: entry ({s},{j},{m})"))?;
                }
            }
            if d <= 4 {
                ensure(brute.symmetry_violation().is_none(), || format!("d={d} r={r}: {:?}", brute.symmetry_violation()))?;
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn chain_counts() -> Outcome {
    for r in 1..=3 {
        for alphas in (0..r).map(|_| 0..=5usize).multi_cartesian_product() {
            let total: usize = alphas.iter().sum();
            if alphas[0] == 0 || total > 5 {
                continue;
            }
            for k in 0..=4 {
                let closed = chain_count(k, &alphas, ChainMethod::Closed).map_err(|e| e.to_string())?;
                let rec = chain_count(k, &alphas, ChainMethod::Recurrence).map_err(|e| e.to_string())?;
                ensure(closed == rec, || format!("{alphas:?} k={k}: {closed} vs {rec}"))?;
            }
            let p0 = chain_count(0, &alphas, ChainMethod::Closed).map_err(|e| e.to_string())?;
            ensure(p0 == BigInt::from(1), || format!("{alphas:?}: P_0 = {p0}"))?;
            let rest: u32 = alphas[1..].iter().sum::<usize>() as u32;
            let expected = (BigInt::from(2).pow(alphas[0] as u32) - 1) * BigInt::from(2).pow(rest) - 1;
            let p1 = chain_count(1, &alphas, ChainMethod::Closed).map_err(|e| e.to_string())?;
            ensure(p1 == expected, || format!("{alphas:?}: P_1 = {p1}, expected {expected}"))?;
        }
    }
    Ok(())
}

fn f_entries_and_bar_partitions() -> Outcome {
    for r in 1..=3 {
        for d in 1..=5 {
            let v = f_entry_recurrence_violation(d, r);
            ensure(v.is_none(), || format!("d={d} r={r}: f-matrix recurrence fails at {v:?}"))?;
        }
        for d in 1..=4 {
            let v = bar_partition_violation(d, r);
            ensure(v.is_none(), || format!("d={d} r={r}: bar partitions differ at {v:?}"))?;
        }
    }
    Ok(())
}

fn gamma_vectors() -> Outcome {
    for d in 1..=5 {
        for r in 1..=3 {
            for which in [GammaSelector::Color0, GammaSelector::Nonzero] {
                let decomposed = eulerian_gamma(d, r, which).map_err(|e| format!("d={d} r={r} {which:?}: {e}"))?;
                let slides = gamma_via_slides(d, r, which);
                ensure(decomposed.n == which.center(d), || format!("d={d} r={r} {which:?}: center"))?;
                ensure(decomposed == slides, || format!("d={d} r={r} {which:?}: {decomposed:?} vs {slides:?}"))?;
                ensure(slides.is_nonnegative(), || format!("d={d} r={r} {which:?}: negative entry"))?;
            }
        }
    }
    Ok(())
}

fn real_roots() -> Outcome {
    for d in 1..=6 {
        for r in 1..=3 {
            for sel in [Selector::Total, Selector::Color(0), Selector::Nonzero] {
                let p = eulerian_polynomial(d, r, sel, Method::Recurrence);
                ensure(is_real_rooted(&p), || format!("d={d} r={r} {sel:?}: {p}"))?;
            }
        }
    }
    for d in 1..=4 {
        for r in 1..=3 {
            ensure(block_sequence_interlaces(d, r) == Ok(true), || format!("d={d} r={r}: block sequence"))?;
        }
    }
    for d in 1..=3 {
        for r in 1..=3 {
            for h in (0..=d).map(|_| 0..=6i64).multi_cartesian_product() {
                if h.iter().sum::<i64>() > 6 {
                    continue;
                }
                let out = transform_h(&HVector(ints(&h)), r);
                ensure(is_real_rooted(&IntPolynomial::new(out.0.clone())), || format!("d={d} r={r} h={h:?}"))?;
            }
        }
    }
    Ok(())
}

fn colored_barycentric_iso() -> Outcome {
    for (name, c) in [("edge", edge()), ("triangle", triangle()), ("hollow triangle", hollow_triangle())] {
        for r in 1..=3 {
            let cert = verify_prop_5_1(&c, r).map_err(|e| e.to_string())?;
            ensure(cert.passed(), || format!("{name} r={r}: {:?}", cert.counterexample))?;
        }
    }
    for (r, vertices) in [(3, 37), (2, 19), (1, 7)] {
        let cert = verify_prop_5_1(&triangle(), r).map_err(|e| e.to_string())?;
        ensure(cert.bijection.len() == vertices, || format!("r={r}: {} vertices", cert.bijection.len()))?;
        ensure(cert.source_f.0[1] == BigInt::from(vertices), || format!("r={r}: f_0"))?;
    }
    Ok(())
}

fn cms_iso() -> Outcome {
    for (name, c, n) in [("edge", edge(), 1), ("triangle", triangle(), 1), ("edge", edge(), 2)] {
        let cert = verify_prop_5_2(&c, n).map_err(|e| e.to_string())?;
        ensure(cert.passed(), || format!("{name} N={n}: {:?}", cert.counterexample))?;
    }
    for (n, vertices) in [(1, 19), (2, 61)] {
        let sub = cms(&triangle(), n).map_err(|e| e.to_string())?;
        let got = sub.complex.num_vertices();
        ensure(got == vertices, || format!("triangle N={n}: {got} vertices"))?;
    }
    Ok(())
}

fn degenerations() -> Outcome {
    for (name, c) in test_complexes() {
        let sd = barycentric(&c);
        let t1 = type_one(&c, 1).map_err(|e| e.to_string())?.complex;
        let colored = colored_barycentric(&c, 1).map_err(|e| e.to_string())?.complex;
        ensure(t1.is_identical_to(&sd), || format!("{name}: type I at r=1 differs from barycentric"))?;
        ensure(colored.is_identical_to(&sd), || format!("{name}: colored at r=1 differs from barycentric"))?;

        let order: Vec<usize> = (0..c.num_vertices()).collect();
        let e = edgewise(&c, 1, &order).map_err(|e| e.to_string())?;
        let map: HashMap<String, String> = e
            .vectors
            .iter()
            .enumerate()
            .map(|(v, u)| {
                let p = u.iter().position(|&x| x == 1).expect("r = 1 vertices are unit vectors");
                (e.complex.label(v).to_string(), c.label(e.order[p]).to_string())
            })
            .collect();
        let iso = is_simplicial_iso(&map, &e.complex, &c).map_err(|e| e.to_string())?;
        ensure(iso, || format!("{name}: edgewise at r=1 is not the complex itself"))?;
    }
    ensure(glued_triangles().num_vertices() == 4, || "glued triangles".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 f-vector independent of the admissible map", invariance),
        ("2 f-vector transformation matches brute force", f_formula),
        ("3 h-vector transformation and conjugation", h_formula),
        ("4 colored Eulerian recurrences and symmetries", eulerian_recurrences),
        ("5 chain count closed form equals recurrence", chain_counts),
        ("6 f-matrix recurrence and bar partitions", f_entries_and_bar_partitions),
        ("7 gamma vectors by decomposition and slides", gamma_vectors),
        ("8 real-rootedness and interlacing", real_roots),
        ("9 colored barycentric isomorphism", colored_barycentric_iso),
        ("10 CMS isomorphism", cms_iso),
        ("11 degenerations at r = 1", degenerations),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", t.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    let total = start.elapsed();
    if total >= Duration::from_secs(300) {
        failed += 1;
        println!("FAIL total runtime {total:.2?} exceeds 5 minutes");
    }
    println!("{} of 11 criteria passed in {total:.2?}", 11 - failed.min(11));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
