//! One PASS/FAIL line per acceptance criterion. Tolerances are given per line;
//! everything is exact unless a line says otherwise.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use lieindex::chevalley::{build, CartanType, SimpleType};
use lieindex::classical::{build_partition_nilpotent, exact_rank_compressed, two_part_suite, Family};
use lieindex::exactla::Rational;
use lieindex::index::{kirillov_in, random_form, verify_theorems, RankConfig};
use lieindex::liecore::{jacobi_violation, BasisCoords, Subspace};
use lieindex::propp::{check_property_p, Status};
use lieindex::report::{verify_orbit, VerifyRecord, DEFAULT_CATALOG};
use lieindex::slice::{load_catalog, CatalogOrbit, OrbitData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// (dim g^ξ, dim z, weights of z) for the catalog, in file order.
const REFERENCE: [(usize, usize, &[i64]); 21] = [
    (8, 5, &[2, 8, 10, 14, 16]),
    (12, 4, &[2, 8, 10, 10]),
    (9, 6, &[2, 10, 14, 18, 22, 26]),
    (11, 5, &[2, 10, 14, 18, 22]),
    (13, 5, &[2, 10, 14, 16, 18]),
    (17, 3, &[2, 10, 14]),
    (21, 4, &[2, 10, 10, 10]),
    (10, 7, &[2, 14, 22, 26, 34, 38, 46]),
    (12, 6, &[2, 14, 22, 26, 34, 38]),
    (14, 6, &[2, 14, 22, 26, 28, 34]),
    (16, 5, &[2, 14, 22, 26, 28]),
    (18, 4, &[2, 14, 22, 26]),
    (20, 4, &[2, 14, 22, 22]),
    (22, 5, &[2, 14, 18, 18, 22]),
    (24, 4, &[2, 14, 18, 18]),
    (28, 3, &[2, 14, 16]),
    (40, 5, &[2, 10, 10, 10, 10]),
    (6, 3, &[2, 10, 14]),
    (8, 3, &[2, 10, 10]),
    (12, 3, &[2, 6, 6]),
    (4, 2, &[2, 4]),
];

struct Line {
    ok: bool,
    text: String,
}

fn line(n: usize, ok: bool, what: &str, detail: String, start: Instant) -> Line {
    let verdict = if ok { "PASS" } else { "FAIL" };
    Line { ok, text: format!("criterion {n}: {verdict} {what} [{detail}; {:.1} s]", start.elapsed().as_secs_f64()) }
}

fn crit1() -> Line {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (ty, rank, dim) in [
        (SimpleType::E, 6, 78),
        (SimpleType::E, 7, 133),
        (SimpleType::E, 8, 248),
        (SimpleType::F, 4, 52),
        (SimpleType::G, 2, 14),
    ] {
        let t = Instant::now();
        let g = build(CartanType::new(ty, rank).unwrap()).unwrap();
        let built = t.elapsed().as_secs_f64();
        let jacobi = jacobi_violation(&g.algebra).is_none();
        let good = g.dim() == dim && jacobi && built < 30.0;
        ok &= good;
        parts.push(format!(
            "{ty:?}{rank} dim {} build {built:.2} s exhaustive Jacobi {}",
            g.dim(),
            if jacobi { "ok" } else { "FAIL" }
        ));
    }
    line(1, ok, "algebra construction", format!("{}; build < 30 s", parts.join(", ")), start)
}

fn crit2_3(orbits: &[CatalogOrbit], data: &[OrbitData]) -> (Line, Line) {
    let start = Instant::now();
    let mut dims_ok = orbits.len() == REFERENCE.len();
    let mut weights_ok = dims_ok;
    let mut bad = Vec::new();
    for ((o, d), (gxi, z, w)) in orbits.iter().zip(data).zip(REFERENCE) {
        if (d.gxi.dim(), d.z.dim()) != (gxi, z) {
            dims_ok = false;
            bad.push(format!("{} dims ({}, {})", o.id(), d.gxi.dim(), d.z.dim()));
        }
        if d.weight_list() != w {
            weights_ok = false;
            bad.push(format!("{} weights {:?}", o.id(), d.weight_list()));
        }
    }
    let suffix = if bad.is_empty() { String::new() } else { format!("; mismatches: {}", bad.join(", ")) };
    (
        line(2, dims_ok, "catalog dimensions", format!("{} orbits, zero tolerance{suffix}", orbits.len()), start),
        line(
            3,
            weights_ok,
            "catalog weight multisets",
            format!("{} orbits, zero tolerance{suffix}", orbits.len()),
            start,
        ),
    )
}

fn crit4(orbits: &[CatalogOrbit], data: &[OrbitData]) -> Line {
    let start = Instant::now();
    let cfg = RankConfig::default();
    let reps: Vec<_> = orbits
        .par_iter()
        .zip(data)
        .map(|(o, d)| (o.id(), verify_theorems(&o.algebra.algebra, d, &cfg).unwrap()))
        .collect();
    let failed: Vec<&str> = reps
        .iter()
        .filter(|(_, r)| {
            !(r.ind_n_ok
                && r.ind_n_gxi_ok
                && r.ind_gxi_is_rank
                && r.ind_n as i64 == r.target
                && r.ind_n_gxi as i64 == r.target)
        })
        .map(|(id, _)| id.as_str())
        .collect();
    let ok = failed.is_empty() && start.elapsed().as_secs() < 600;
    line(
        4,
        ok,
        "index equalities on the catalog",
        format!(
            "{} orbits, trials 5, bound 1000, ind g^e = rg g everywhere; failed {failed:?}; suite < 600 s",
            reps.len()
        ),
        start,
    )
}

fn crit5(orbits: &[CatalogOrbit], data: &[OrbitData]) -> Line {
    let start = Instant::now();
    let verdicts: Vec<_> = orbits
        .par_iter()
        .zip(data)
        .map(|(o, d)| (o.id(), check_property_p(&o.algebra.algebra, d, 0).unwrap()))
        .collect();
    let mut ok = true;
    let mut probabilistic = Vec::new();
    for (id, v) in &verdicts {
        ok &= v.status.passed();
        for b in &v.blocks {
            match &b.status {
                Status::ExactPass => {}
                // only the four-parameter block of E8 orbit 10 may fall back
                Status::ProbabilisticPass { .. } if id == "E8:10" && b.delta == 4 => probabilistic.push(id.clone()),
                _ => ok = false,
            }
        }
    }
    let blocks: usize = verdicts.iter().map(|(_, v)| v.blocks.len()).sum();
    line(
        5,
        ok,
        "Property (P) on the catalog",
        format!("{} orbits, {blocks} blocks, probabilistic {probabilistic:?}, all others exact", verdicts.len()),
        start,
    )
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(Rational::from_int).product()
}

fn double_factorial_odd(n: usize) -> Rational {
    (0..n as i64).map(|k| Rational::from_int(2 * k + 1)).product()
}

fn crit6() -> Line {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;
    let mut cases = Vec::new();
    let two = Rational::from_int(2);
    let mut run = |fam: Family, n: usize, predicted: &dyn Fn(&Rational) -> Rational| {
        let p = build_partition_nilpotent(fam, &[n]).unwrap();
        let d = p.dmatrix().unwrap();
        let r = d.rows();
        let mut good = d == p.dmatrix_closed_form();
        for _ in 0..10 {
            let phi = random_form(&mut rng, r, 1000);
            good &= d.evaluate(&phi).det().abs() == predicted(&phi[r - 1]).abs();
        }
        ok &= good;
        cases.push(format!("{fam}{n}"));
    };
    for n in 2..=6usize {
        // ±2^{d−1}((d−1)!)² t^{d−1}
        let f = |t: &Rational| two.pow(n as u32 - 1) * factorial(n - 1).pow(2) * t.pow(n as u32 - 1);
        run(Family::Sl, n, &f);
    }
    for r in 1..=3usize {
        // ±2^r((2r−1)!!)² t^r
        let f = |t: &Rational| two.pow(r as u32) * double_factorial_odd(r).pow(2) * t.pow(r as u32);
        run(Family::So, 2 * r + 1, &f);
        run(Family::Sp, 2 * r, &f);
    }
    line(6, ok, "classical D-matrix closed forms", format!("{}, 10 random forms each, exact", cases.join(" ")), start)
}

fn crit7() -> Line {
    let start = Instant::now();
    let cfg = RankConfig::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (s, t) in [(2usize, 1usize), (3, 1), (3, 2)] {
        let p = build_partition_nilpotent(Family::So, &[2 * s + 1, 2 * t + 1]).unwrap();
        let data = p.orbit_data().unwrap();
        let rep = two_part_suite(&p, &data, &cfg).unwrap();
        let w = p.special_center_element().unwrap().w;
        let rw = p.algebra().bracket(&data.triple.h, &w).unwrap();
        let eigen = Subspace::span(p.algebra().dim(), [w]).contains(&rw);
        let th = verify_theorems(p.algebra(), &data, &cfg).unwrap().pass();
        let good = rep.pass() && eigen && th;
        ok &= good;
        parts.push(format!("(s,t)=({s},{t}) {}", if good { "ok" } else { "FAIL" }));
    }
    let p = build_partition_nilpotent(Family::So, &[5, 3]).unwrap();
    let data = p.orbit_data().unwrap();
    let g = p.algebra();
    let zc = BasisCoords::with_ambient(g.dim(), data.z.basis()).unwrap();
    let k = kirillov_in(g, &data.n, &zc).unwrap();
    let ind = exact_rank_compressed(&k, 1_000_000).map(|rk| data.z.dim() - rk);
    ok &= ind.is_some_and(|i| i > 0);
    parts.push(format!("so8 [5,3] ind(n, z) = {ind:?} certified"));
    line(7, ok, "so two-part suite", parts.join(", "), start)
}

fn crit8() -> Line {
    let start = Instant::now();
    let cfg = RankConfig::default();
    let results: Vec<(String, usize)> = (0..common::SUITE.len())
        .into_par_iter()
        .map(|i| {
            let g = common::algebra(i);
            let mut rng = ChaCha8Rng::seed_from_u64(800 + i as u64);
            let np = g.roots.num_positive();
            let mut failures = 0;
            for _ in 0..100 {
                let coeffs: Vec<i64> =
                    (0..np).map(|_| if rng.random_bool(0.6) { 0 } else { rng.random_range(-2..=2) }).collect();
                let (k, j) = (rng.random_range(1..=3), rng.random_range(1..=3));
                if !common::check(&g, &common::nilpotent(&g, &coeffs), k, j, &cfg).all() {
                    failures += 1;
                }
            }
            (common::SUITE[i].0.to_string(), failures)
        })
        .collect();
    let ok = results.iter().all(|(_, f)| *f == 0);
    let detail: Vec<String> = results.iter().map(|(n, f)| format!("{n} 100/{}", 100 - f)).collect();
    line(8, ok, "structure identities on random nilpotents", format!("{}, zero tolerance", detail.join(" ")), start)
}

fn jsonl(recs: &[VerifyRecord]) -> String {
    recs.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect()
}

fn crit9(orbits: &[CatalogOrbit]) -> Line {
    let start = Instant::now();
    let cfg = RankConfig { seed: 42, ..RankConfig::default() };
    let run = || jsonl(&orbits.par_iter().map(|o| verify_orbit(o, &cfg, false).unwrap()).collect::<Vec<_>>());
    let lib_ok = run() == run();
    let cli = || {
        let out = Command::new(env!("CARGO_BIN_EXE_lieindex"))
            .args(["--seed", "42", "--format", "jsonl", "verify", "--all"])
            .output()
            .expect("run the CLI");
        (out.status.code(), out.stdout)
    };
    let (a, b) = (cli(), cli());
    let cli_ok = a == b && a.0 == Some(0) && a.1.iter().filter(|&&c| c == b'\n').count() == orbits.len();
    line(
        9,
        lib_ok && cli_ok,
        "deterministic json-lines",
        format!("library byte-identical {lib_ok}, CLI verify --all byte-identical {cli_ok}, seed 42"),
        start,
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let orbits = load_catalog(DEFAULT_CATALOG).unwrap();
    let data: Vec<OrbitData> =
        orbits.par_iter().map(|o| OrbitData::new(&o.algebra.algebra, o.triple.clone()).unwrap()).collect();
    let mut lines = vec![crit1()];
    let (l2, l3) = crit2_3(&orbits, &data);
    lines.extend([l2, l3, crit4(&orbits, &data), crit5(&orbits, &data), crit6(), crit7(), crit8(), crit9(&orbits)]);
    for l in &lines {
        println!("{}", l.text);
    }
    let passed = lines.iter().filter(|l| l.ok).count();
    println!("acceptance: {passed}/{} criteria pass in {:.1} s", lines.len(), start.elapsed().as_secs_f64());
    if passed == lines.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
