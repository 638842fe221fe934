//! Named verification suites. Each suite runs a list of exact checks and
//! reports every outcome with a witness.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{verify_prop_5_1, verify_prop_5_2, IsoCertificate};
use crate::colored::EulerianTable;
use crate::complex::{f_to_h, HVector, SimplicialComplex};
use crate::eulerian::{
    block_polynomials, block_sequence_interlaces, eulerian_gamma, eulerian_polynomial, gamma_via_slides,
    slide_lemma_violation, GammaSelector, Method, Selector,
};
use crate::json;
use crate::multichain::{admissible_iotas, multichain_subdivision, type_one};
use crate::poly::IntPolynomial;
use crate::sturm::is_real_rooted;
use crate::transforms::{
    bar_partition_violation, chain_count, conjugated_f_matrix, f_entry_recurrence_violation, f_via_multichain_sum,
    h_matrix, transform_f, transform_h, ChainMethod,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    MainTheorem,
    FFormula,
    HFormula,
    EulerianRecurrences,
    Gamma,
    RealRooted,
    Interlacing,
    Prop51,
    Prop52,
    BarPartitions,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::MainTheorem,
        Suite::FFormula,
        Suite::HFormula,
        Suite::EulerianRecurrences,
        Suite::Gamma,
        Suite::RealRooted,
        Suite::Interlacing,
        Suite::Prop51,
        Suite::Prop52,
        Suite::BarPartitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::FFormula => "f-formula",
            Suite::HFormula => "h-formula",
            Suite::EulerianRecurrences => "eulerian-recurrences",
            Suite::Gamma => "gamma",
            Suite::RealRooted => "real-rooted",
            Suite::Interlacing => "interlacing",
            Suite::Prop51 => "prop51",
            Suite::Prop52 => "prop52",
            Suite::BarPartitions => "bar-partitions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::ALL.iter().join(", ")))
    }
}

/// Suite inputs; anything left unset falls back to the suite's defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    /// Named complexes; empty means the built-in test set.
    pub complexes: Vec<(String, SimplicialComplex)>,
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub max_d: Option<usize>,
    pub max_r: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: Value,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, witness: Value) {
        self.0.push(Check { name: name.into(), passed, witness });
    }
}

pub fn edge() -> SimplicialComplex {
    SimplicialComplex::simplex(2)
}

pub fn triangle() -> SimplicialComplex {
    SimplicialComplex::simplex(3)
}

pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(3)
}

pub fn glued_triangles() -> SimplicialComplex {
    SimplicialComplex::from_facets([[1, 2, 3], [2, 3, 4]]).expect("two triangles")
}

pub fn test_complexes() -> Vec<(String, SimplicialComplex)> {
    vec![
        ("edge".into(), edge()),
        ("triangle".into(), triangle()),
        ("hollow-triangle".into(), hollow_triangle()),
        ("glued-triangles".into(), glued_triangles()),
    ]
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> SuiteReport {
    let complexes = if params.complexes.is_empty() { test_complexes() } else { params.complexes.clone() };
    let mut checks = Checks(Vec::new());
    let parameters = match suite {
        Suite::MainTheorem => main_theorem(&complexes, params, &mut checks),
        Suite::FFormula => f_formula(&complexes, params, &mut checks),
        Suite::HFormula => h_formula(&complexes, params, &mut checks),
        Suite::EulerianRecurrences => eulerian_recurrences(params, &mut checks),
        Suite::Gamma => gamma(params, &mut checks),
        Suite::RealRooted => real_rooted(params, &mut checks),
        Suite::Interlacing => interlacing(params, &mut checks),
        Suite::Prop51 => prop51(params, &mut checks),
        Suite::Prop52 => prop52(params, &mut checks),
        Suite::BarPartitions => bar_partitions(params, &mut checks),
    };
    let passed = checks.0.iter().all(|c| c.passed);
    SuiteReport { suite: suite.name().into(), parameters, passed, checks: checks.0 }
}

fn names(complexes: &[(String, SimplicialComplex)]) -> Vec<&str> {
    complexes.iter().map(|(n, _)| n.as_str()).collect()
}

/// The given `r`, or the default list.
fn r_values(params: &SuiteParams, default: &[usize]) -> Vec<usize> {
    params.r.map_or_else(|| default.to_vec(), |r| vec![r])
}

fn main_theorem(complexes: &[(String, SimplicialComplex)], params: &SuiteParams, checks: &mut Checks) -> Value {
    for (name, complex) in complexes {
        let mut rs = r_values(params, &[2, 3]);
        if params.r.is_none() && complex.d() <= 2 {
            rs.push(4);
        }
        for r in rs {
            let mut rows = Vec::new();
            let mut vectors = Vec::new();
            let mut error = None;
            for iota in admissible_iotas(r) {
                match multichain_subdivision(complex, r, &iota) {
                    Ok(sub) => {
                        let f = sub.complex.f_vector();
                        rows.push(json!({"iota": iota.to_string(), "f_vector": json::bigints(f.entries())}));
                        vectors.push(f);
                    }
                    Err(e) => error = Some(e.to_string()),
                }
            }
            let identical = error.is_none() && vectors.windows(2).all(|w| w[0] == w[1]);
            let mut witness = json!({"admissible_maps": rows.len(), "results": rows});
            if let Some(e) = error {
                witness["error"] = json!(e);
            }
            checks.push(format!("{name} r={r}: f-vector independent of the map"), identical, witness);
        }
    }
    json!({"complexes": names(complexes), "r": params.r})
}

fn f_formula(complexes: &[(String, SimplicialComplex)], params: &SuiteParams, checks: &mut Checks) -> Value {
    for (name, complex) in complexes {
        let f = complex.f_vector();
        for r in r_values(params, &[1, 2, 3]) {
            let predicted = transform_f(&f, r);
            let actual = type_one(complex, r).map(|s| s.complex.f_vector());
            let matches = actual.as_ref().is_ok_and(|a| *a == predicted);
            let sums: Vec<BigInt> = (0..f.d()).map(|k| f_via_multichain_sum(&f, r, k)).collect();
            let sums_match = sums.as_slice() == &predicted.0[1..];
            checks.push(
                format!("{name} r={r}: closed formula, multichain sum and construction agree"),
                matches && sums_match,
                json!({
                    "formula": json::bigints(predicted.entries()),
                    "multichain_sum": json::bigints(&sums),
                    "construction": actual.map(|a| json::bigints(a.entries())).unwrap_or_else(|e| json!(e.to_string())),
                    "euler_characteristic": json::bigint(&predicted.euler_characteristic()),
                }),
            );
        }
    }
    let max_r = params.max_r.unwrap_or(3);
    let mut mismatch = None;
    let mut tested = 0usize;
    'outer: for r in 1..=max_r {
        for alphas in (0..r).map(|_| 0..=5usize).multi_cartesian_product() {
            if alphas[0] == 0 || alphas.iter().sum::<usize>() > 5 {
                continue;
            }
            for k in 0..=4 {
                tested += 1;
                let closed = chain_count(k, &alphas, ChainMethod::Closed);
                let rec = chain_count(k, &alphas, ChainMethod::Recurrence);
                if closed != rec {
                    mismatch = Some(json!({"k": k, "alphas": alphas}));
                    break 'outer;
                }
            }
        }
    }
    checks.push(
        format!("chain counts: closed form equals recurrence (sum of alphas <= 5, k <= 4, r <= {max_r})"),
        mismatch.is_none(),
        mismatch.unwrap_or_else(|| json!({"cases": tested})),
    );
    json!({"complexes": names(complexes), "r": params.r, "max_r": max_r})
}

fn h_formula(complexes: &[(String, SimplicialComplex)], params: &SuiteParams, checks: &mut Checks) -> Value {
    for (name, complex) in complexes {
        for r in r_values(params, &[1, 2, 3]) {
            let predicted = transform_h(&complex.h_vector(), r);
            let actual = type_one(complex, r).map(|s| f_to_h(&s.complex.f_vector()));
            checks.push(
                format!("{name} r={r}: R_d h equals the h-vector of the construction"),
                actual.as_ref().is_ok_and(|a| *a == predicted),
                json!({
                    "formula": json::bigints(predicted.entries()),
                    "construction": actual.map(|a| json::bigints(a.entries())).unwrap_or_else(|e| json!(e.to_string())),
                }),
            );
        }
    }
    let (max_d, max_r) = (params.max_d.unwrap_or(4), params.max_r.unwrap_or(3));
    for d in 1..=max_d {
        for r in 1..=max_r {
            let (lhs, rhs) = (h_matrix(d, r), conjugated_f_matrix(d, r));
            let witness = if lhs == rhs {
                json!({"column_0": json::bigints(&lhs.column(0))})
            } else {
                json!({"R_d": json::matrix(&lhs), "H_d F_d H_d^-1": json::matrix(&rhs)})
            };
            checks.push(format!("d={d} r={r}: R_d = H_d F_d H_d^-1"), lhs == rhs, witness);
        }
    }
    json!({"complexes": names(complexes), "r": params.r, "max_d": max_d, "max_r": max_r})
}

fn eulerian_recurrences(params: &SuiteParams, checks: &mut Checks) -> Value {
    let (max_d, max_r) = (params.max_d.unwrap_or(4), params.max_r.unwrap_or(3));
    for n in 1..=max_d + 1 {
        for r in 1..=max_r {
            let brute = EulerianTable::bruteforce(n, r);
            let rec = EulerianTable::recurrence(n, r);
            checks.push(
                format!("length {n} r={r}: table recurrences match enumeration"),
                brute == rec,
                json!({"total": json::bigint(&brute.total())}),
            );
            let violation = brute.symmetry_violation();
            checks.push(
                format!("length {n} r={r}: reversal symmetries"),
                violation.is_none(),
                violation.map_or_else(|| json!("none"), |(s, k, m)| json!({"s": s, "k": k, "m": m})),
            );
            let same = block_polynomials(n, r, Method::Recurrence) == block_polynomials(n, r, Method::Bruteforce);
            checks.push(format!("length {n} r={r}: block polynomial recurrences"), same, json!({}));
        }
    }
    json!({"max_d": max_d, "max_r": max_r})
}

fn gamma(params: &SuiteParams, checks: &mut Checks) -> Value {
    let (max_d, max_r) = (params.max_d.unwrap_or(5), params.max_r.unwrap_or(3));
    for d in 1..=max_d {
        for r in 1..=max_r {
            for which in [GammaSelector::Color0, GammaSelector::Nonzero] {
                let slides = gamma_via_slides(d, r, which);
                let decomposed = eulerian_gamma(d, r, which);
                let lemma = slide_lemma_violation(d, r, which);
                let ok = decomposed.as_ref().is_ok_and(|g| *g == slides) && slides.is_nonnegative() && lemma.is_none();
                checks.push(
                    format!("d={d} r={r} {which:?}: gamma by slides equals decomposition, nonnegative"),
                    ok,
                    json!({
                        "center": which.center(d),
                        "slides": json::bigints(&slides.gammas),
                        "decomposition": decomposed.map(|g| json::bigints(&g.gammas)).unwrap_or_else(|e| json!(e.to_string())),
                        "slide_lemma_violation": lemma,
                    }),
                );
            }
        }
    }
    json!({"max_d": max_d, "max_r": max_r})
}

/// Nonnegative integer vectors of the given length with sum at most `total`.
fn bounded_vectors(len: usize, total: usize) -> Vec<Vec<usize>> {
    (0..len).map(|_| 0..=total).multi_cartesian_product().filter(|v| v.iter().sum::<usize>() <= total).collect()
}

fn real_rooted(params: &SuiteParams, checks: &mut Checks) -> Value {
    let (max_d, max_r) = (params.max_d.unwrap_or(6), params.max_r.unwrap_or(3));
    for d in 1..=max_d {
        for r in 1..=max_r {
            for (label, sel) in [("A_d", Selector::Total), ("A_d^(0)", Selector::Color(0)), ("A_d^(!=0)", Selector::Nonzero)] {
                let p = eulerian_polynomial(d, r, sel, Method::Recurrence);
                checks.push(format!("d={d} r={r}: {label} is real-rooted"), is_real_rooted(&p), json!(p.to_string()));
            }
        }
    }
    let h_max_d = max_d.min(3);
    for d in 1..=h_max_d {
        for r in 1..=max_r {
            let failure = bounded_vectors(d + 1, 6).into_iter().find_map(|h| {
                let h = HVector(h.into_iter().map(BigInt::from).collect());
                let out = transform_h(&h, r);
                (!is_real_rooted(&IntPolynomial::new(out.0.clone()))).then(|| json::bigints(h.entries()))
            });
            checks.push(
                format!("d={d} r={r}: transformed nonnegative h-vectors with sum <= 6 are real-rooted"),
                failure.is_none(),
                failure.unwrap_or_else(|| json!("none")),
            );
        }
    }
    json!({"max_d": max_d, "max_r": max_r})
}

fn interlacing(params: &SuiteParams, checks: &mut Checks) -> Value {
    let (max_d, max_r) = (params.max_d.unwrap_or(4), params.max_r.unwrap_or(3));
    for d in 1..=max_d {
        for r in 1..=max_r {
            let outcome = block_sequence_interlaces(d, r);
            let witness = match &outcome {
                Ok(b) => json!({"interlacing": b}),
                Err(e) => json!({"error": e.to_string()}),
            };
            checks.push(format!("d={d} r={r}: block sequence interlaces"), outcome == Ok(true), witness);
        }
    }
    json!({"max_d": max_d, "max_r": max_r})
}

fn certificate(cert: &IsoCertificate) -> Value {
    json!({
        "source_f": json::bigints(cert.source_f.entries()),
        "target_f": json::bigints(cert.target_f.entries()),
        "vertices_matched": cert.bijection.len(),
        "bijection": cert.bijection,
        "edges_forward": cert.edges_forward,
        "edges_backward": cert.edges_backward,
        "source_flag": cert.source_flag,
        "target_flag": cert.target_flag,
        "isomorphic": cert.isomorphic,
        "counterexample": cert.counterexample,
    })
}

fn prop51(params: &SuiteParams, checks: &mut Checks) -> Value {
    let complexes = if params.complexes.is_empty() {
        test_complexes().into_iter().take(3).collect()
    } else {
        params.complexes.clone()
    };
    for (name, complex) in &complexes {
        for r in r_values(params, &[1, 2, 3]) {
            match verify_prop_5_1(complex, r) {
                Ok(cert) => checks.push(format!("{name} r={r}: theta is an isomorphism"), cert.passed(), certificate(&cert)),
                Err(e) => checks.push(format!("{name} r={r}: theta is an isomorphism"), false, json!(e.to_string())),
            }
        }
    }
    json!({"complexes": names(&complexes), "r": params.r})
}

fn prop52(params: &SuiteParams, checks: &mut Checks) -> Value {
    let cases: Vec<(String, SimplicialComplex, usize)> = if params.complexes.is_empty() && params.n.is_none() {
        vec![("edge".into(), edge(), 1), ("triangle".into(), triangle(), 1), ("edge".into(), edge(), 2)]
    } else {
        let complexes = if params.complexes.is_empty() { test_complexes() } else { params.complexes.clone() };
        complexes.into_iter().map(|(name, c)| (name, c, params.n.unwrap_or(1))).collect()
    };
    for (name, complex, n) in &cases {
        match verify_prop_5_2(complex, *n) {
            Ok(cert) => checks.push(format!("{name} N={n}: phi is an isomorphism"), cert.passed(), certificate(&cert)),
            Err(e) => checks.push(format!("{name} N={n}: phi is an isomorphism"), false, json!(e.to_string())),
        }
    }
    json!({"cases": cases.iter().map(|(name, _, n)| json!({"complex": name, "N": n})).collect::<Vec<_>>()})
}

fn bar_partitions(params: &SuiteParams, checks: &mut Checks) -> Value {
    let (max_d, max_r) = (params.max_d.unwrap_or(4), params.max_r.unwrap_or(3));
    for d in 1..=max_d {
        for r in 1..=max_r {
            let v = bar_partition_violation(d, r);
            checks.push(
                format!("d={d} r={r}: bar partition counts match the f-matrix"),
                v.is_none(),
                v.map_or_else(|| json!("none"), |(t, j)| json!({"t": t, "j": j})),
            );
        }
    }
    for d in 1..=max_d + 1 {
        for r in 1..=max_r {
            let v = f_entry_recurrence_violation(d, r);
            checks.push(
                format!("d={d} r={r}: f-matrix row recurrence"),
                v.is_none(),
                v.map_or_else(|| json!("none"), |(l, m)| json!({"l": l, "m": m})),
            );
        }
    }
    json!({"max_d": max_d, "max_r": max_r})
}
