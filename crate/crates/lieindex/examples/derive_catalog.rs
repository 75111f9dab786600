//! Search for nilpotent representatives of the distinguished non-regular
//! orbits of the exceptional algebras and print them in catalog form.
//!
//! For a characteristic (an even weighted Dynkin diagram) let h be the
//! Cartan element with α_i(h) = char_i. A sum e of root vectors of
//! h-weight 2 lies in the orbit iff [g(0), e] = g(2). The search draws
//! random sets of linearly independent weight-2 roots until that holds.
//!
//! cargo run --release --example derive_catalog > data/exceptional.cat

use lieindex::chevalley::{build, CartanType, SimpleLie};
use lieindex::exactla::{QMatrix, Rational};
use lieindex::slice::{validate_orbit, OrbitData, OrbitSpec};
use rand::seq::SliceRandom;
use rand::SeedableRng;

const ORBITS: &[(&str, &str, &[i64])] = &[
    ("E6", "E6(a1)", &[2, 2, 2, 0, 2, 2]),
    ("E6", "E6(a3)", &[2, 0, 0, 2, 0, 2]),
    ("E7", "E7(a1)", &[2, 2, 2, 0, 2, 2, 2]),
    ("E7", "E7(a2)", &[2, 2, 2, 0, 2, 0, 2]),
    ("E7", "E7(a3)", &[2, 0, 0, 2, 0, 2, 2]),
    ("E7", "E7(a4)", &[2, 0, 0, 2, 0, 0, 2]),
    ("E7", "E7(a5)", &[0, 0, 0, 2, 0, 0, 2]),
    ("E8", "E8(a1)", &[2, 2, 2, 0, 2, 2, 2, 2]),
    ("E8", "E8(a2)", &[2, 2, 2, 0, 2, 0, 2, 2]),
    ("E8", "E8(a3)", &[2, 0, 0, 2, 0, 2, 2, 2]),
    ("E8", "E8(a4)", &[2, 0, 0, 2, 0, 2, 0, 2]),
    ("E8", "E8(b4)", &[2, 0, 0, 2, 0, 0, 2, 2]),
    ("E8", "E8(a5)", &[2, 0, 0, 2, 0, 0, 2, 0]),
    ("E8", "E8(b5)", &[0, 0, 0, 2, 0, 0, 2, 2]),
    ("E8", "E8(a6)", &[0, 0, 0, 2, 0, 0, 2, 0]),
    ("E8", "E8(b6)", &[0, 0, 0, 2, 0, 0, 0, 2]),
    ("E8", "E8(a7)", &[0, 0, 0, 0, 2, 0, 0, 0]),
    ("F4", "F4(a1)", &[2, 2, 0, 2]),
    ("F4", "F4(a2)", &[0, 2, 0, 2]),
    ("F4", "F4(a3)", &[0, 2, 0, 0]),
    ("G2", "G2(a1)", &[0, 2]),
];

fn weight(root: &[i64], ch: &[i64]) -> i64 {
    root.iter().zip(ch).map(|(a, c)| a * c).sum()
}

/// rank of ad e : g(0) → g(2) equals dim g(2)
fn generic(g: &SimpleLie, e: &lieindex::liecore::Element, g0: &[usize], g2_dim: usize) -> bool {
    let cols: Vec<Vec<Rational>> = g0.iter().map(|&i| g.algebra.bracket_basis(i, e).into_coeffs()).collect();
    QMatrix::from_rows(g.dim(), cols).rank() == g2_dim
}

fn independent(roots: &[&Vec<i64>]) -> bool {
    let l = roots[0].len();
    let m = QMatrix::from_rows(l, roots.iter().map(|r| r.iter().map(|&c| Rational::from_int(c)).collect()).collect());
    m.rank() == roots.len()
}

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    println!("# Distinguished non-regular nilpotent orbits of E6, E7, E8, F4, G2.");
    println!("# Each e is a sum of root vectors x_β, β in simple-root coordinates.");
    let mut last = String::new();
    let mut alg = None;
    for &(ty, label, ch) in ORBITS {
        if ty != last {
            let ct: CartanType = ty.parse().unwrap();
            alg = Some(build(ct).unwrap());
            last = ty.to_string();
            println!();
        }
        let g = alg.as_ref().unwrap();
        let l = g.rank();
        let roots = &g.roots.positive_roots;
        let g2: Vec<&Vec<i64>> = roots.iter().filter(|r| weight(r, ch) == 2).collect();
        let mut g0: Vec<usize> = g.basis.h.clone();
        for (i, r) in roots.iter().enumerate() {
            if weight(r, ch) == 0 {
                g0.push(g.basis.x[i]);
                g0.push(g.basis.y[i]);
            }
        }
        let mut found = None;
        for attempt in 0..200_000 {
            let k = l + attempt % 3;
            if k > g2.len() {
                continue;
            }
            let mut pick = g2.clone();
            pick.shuffle(&mut rng);
            pick.truncate(k);
            if k == l && !independent(&pick) {
                continue;
            }
            let mut e = g.algebra.zero();
            for r in &pick {
                e = e.add(&g.root_vector(r).unwrap());
            }
            if generic(g, &e, &g0, g2.len()) {
                let mut p: Vec<Vec<i64>> = pick.iter().map(|r| (*r).clone()).collect();
                p.sort_by_key(|r| g.roots.root_index(r).unwrap());
                found = Some(p);
                break;
            }
        }
        let terms = found.unwrap_or_else(|| panic!("no representative found for {label}"));
        let spec = OrbitSpec {
            cartan_type: g.cartan_type(),
            label: label.to_string(),
            characteristic: ch.to_vec(),
            e_terms: terms.into_iter().map(|r| (r, Rational::one())).collect(),
            line: 0,
        };
        let t = validate_orbit(&spec, g).expect("validation");
        let data = OrbitData::new(&g.algebra, t).unwrap();
        println!("# dim g^e = {}, dim z = {}, weights {:?}", data.gxi.dim(), data.z.dim(), data.weight_list());
        print!("{}", spec.to_catalog());
        eprintln!("{label}: ({}, {}) {:?}", data.gxi.dim(), data.z.dim(), data.weight_list());
    }
}
