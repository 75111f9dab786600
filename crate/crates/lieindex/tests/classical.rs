use lieindex::classical::{
    build_partition_nilpotent, exact_rank_compressed, two_part_suite, ClassicalRealization, Family,
};
use lieindex::exactla::{QMatrix, Rational};
use lieindex::index::{kirillov_in, random_form, verify_theorems, RankConfig};
use lieindex::liecore::{jacobi_violation, BasisCoords, Element};
use lieindex::Error;
use rand::SeedableRng;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

#[test]
fn realizations_are_lie_algebras_of_the_right_dimension() {
    for (fam, part, dim) in [
        (Family::Sl, vec![4], 15),
        (Family::So, vec![7], 21),
        (Family::So, vec![5, 3], 28),
        (Family::So, vec![2, 2, 1], 10),
        (Family::Sp, vec![6], 21),
        (Family::Sp, vec![3, 3], 21),
        (Family::Sp, vec![2, 1, 1], 10),
    ] {
        let p = build_partition_nilpotent(fam, &part).unwrap();
        let r = &p.realization;
        assert_eq!(r.dim(), dim, "{p:?}");
        assert!(jacobi_violation(&r.algebra).is_none(), "{p:?}");
        for k in 0..r.dim() {
            let m = r.basis_matrix(k);
            assert!(r.contains_matrix(&m), "{p:?} basis {k}");
            assert_eq!(r.from_matrix(&m).unwrap(), Element::basis(r.dim(), k));
        }
        assert!(r.contains_matrix(&p.xi));
        assert!(r.algebra.is_killing_nondegenerate());
        p.triple.validate(&r.algebra).unwrap();
        // the bracket is the matrix commutator
        let a = r.basis_matrix(0);
        let b = r.basis_matrix(r.dim() - 1);
        let ab = r.algebra.bracket(&Element::basis(r.dim(), 0), &Element::basis(r.dim(), r.dim() - 1)).unwrap();
        assert_eq!(r.to_matrix(&ab), a.mul(&b).sub(&b.mul(&a)));
    }
}

#[test]
fn invalid_partitions_and_matrices_are_rejected() {
    assert!(matches!(build_partition_nilpotent(Family::Sp, &[3, 1]), Err(Error::Input(_))));
    assert!(matches!(build_partition_nilpotent(Family::So, &[2, 1]), Err(Error::Input(_))));
    let sl3 = ClassicalRealization::sl(3).unwrap();
    assert!(sl3.from_matrix(&QMatrix::identity(3)).is_err());
    let so = build_partition_nilpotent(Family::So, &[3]).unwrap();
    assert!(so.realization.from_matrix(&QMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])).is_err());
}

#[test]
fn sl2_triple_matrix_relations() {
    // [ξ^k, η] = Σ_{a+b=k−1} ξ^a ρ ξ^b, [ρ, ξ^i] = 2i ξ^i, [[ξ^k, η], ξ^i] = 2ki ξ^{k+i−1}
    let br = |a: &QMatrix, b: &QMatrix| a.mul(b).sub(&b.mul(a));
    for (fam, part) in
        [(Family::Sl, vec![5]), (Family::So, vec![7]), (Family::Sp, vec![4, 2]), (Family::So, vec![5, 3])]
    {
        let p = build_partition_nilpotent(fam, &part).unwrap();
        let r = &p.realization;
        let (rho, eta) = (r.to_matrix(&p.triple.h), r.to_matrix(&p.triple.f));
        let d = p.degree() as u32;
        for k in 1..d {
            let xk = p.xi_power(k);
            let mut sum = QMatrix::zeros(r.n, r.n);
            for a in 0..k {
                sum = sum.add(&p.xi_power(a).mul(&rho).mul(&p.xi_power(k - 1 - a)));
            }
            assert_eq!(br(&xk, &eta), sum);
            assert_eq!(br(&rho, &xk), xk.scale(&q(2 * k as i64)));
            for i in 1..d {
                let lhs = br(&br(&xk, &eta), &p.xi_power(i));
                assert_eq!(lhs, p.xi_power(k + i - 1).scale(&q(2 * (k * i) as i64)), "{p:?} k={k} i={i}");
            }
        }
    }
}

#[test]
fn dmatrix_matches_closed_form_and_determinant() {
    let cases: Vec<(Family, Vec<usize>)> = (2..=6)
        .map(|n| (Family::Sl, vec![n]))
        .chain([3, 5, 7].map(|n| (Family::So, vec![n])))
        .chain([2, 4, 6].map(|n| (Family::Sp, vec![n])))
        .chain([(Family::Sl, vec![3, 1]), (Family::So, vec![5, 1, 1]), (Family::Sp, vec![4, 1, 1])])
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for (fam, part) in cases {
        let p = build_partition_nilpotent(fam, &part).unwrap();
        let d = p.dmatrix().unwrap();
        assert_eq!(d, p.dmatrix_closed_form(), "{p:?}");
        let r = d.rows();
        for _ in 0..10 {
            let phi = random_form(&mut rng, r, 1000);
            let det = d.evaluate(&phi).det();
            assert_eq!(det.abs(), p.dmatrix_det_closed_form(&phi[r - 1]).abs(), "{p:?}");
        }
        let data = p.orbit_data().unwrap();
        let zp = p.zprime().unwrap();
        assert!(data.z.contains_space(&zp));
        if part.len() == 1 {
            // regular: z′ = z = g^ξ
            assert!(data.regular);
            assert_eq!(zp, data.z);
            assert_eq!(zp, data.gxi);
        }
    }
}

#[test]
fn theorems_hold_for_classical_orbits() {
    let cfg = RankConfig::default();
    for (fam, part) in [
        (Family::Sl, vec![4]),
        (Family::Sl, vec![2, 2]),
        (Family::So, vec![5, 3]),
        (Family::So, vec![7]),
        (Family::So, vec![3, 3, 1]),
        (Family::Sp, vec![4, 2]),
        (Family::Sp, vec![2, 2]),
    ] {
        let p = build_partition_nilpotent(fam, &part).unwrap();
        let data = p.orbit_data().unwrap();
        let rep = verify_theorems(p.algebra(), &data, &cfg).unwrap();
        assert!(rep.pass(), "{p:?}: {rep:?}");
    }
}

#[test]
fn distinguished_flags_for_classical_partitions() {
    // distinguished iff parts are distinct (so and sp) / single part (sl)
    for (fam, part, dist) in [
        (Family::Sl, vec![3, 1], false),
        (Family::So, vec![5, 3], true),
        (Family::So, vec![5, 3, 1], true),
        (Family::So, vec![3, 3, 1], false),
        (Family::Sp, vec![4, 2], true),
        (Family::Sp, vec![2, 2], false),
    ] {
        let p = build_partition_nilpotent(fam, &part).unwrap();
        assert_eq!(p.orbit_data().unwrap().distinguished, dist, "{p:?}");
    }
}

#[test]
fn so_two_part_special_element() {
    let cfg = RankConfig::default();
    for (s, t) in [(2usize, 1usize), (3, 1), (3, 2)] {
        let p = build_partition_nilpotent(Family::So, &[2 * s + 1, 2 * t + 1]).unwrap();
        let data = p.orbit_data().unwrap();
        let rep = two_part_suite(&p, &data, &cfg).unwrap();
        assert!(rep.pass(), "s={s} t={t}: {rep:?}");
        assert_eq!(rep.lambda, 2 * (s + t) as i64);
        let sp = p.special_center_element().unwrap();
        assert_eq!(sp.a_rank, 1);
        // ξ in place of w breaks the first identity
        assert!(matches!(p.verify_crochet(&p.triple.e, sp.lambda), Err(Error::PropertyViolation(_))));
        assert!(verify_theorems(p.algebra(), &data, &cfg).unwrap().pass());
    }
    let p = build_partition_nilpotent(Family::So, &[7]).unwrap();
    assert!(matches!(p.special_center_element(), Err(Error::Input(_))));
}

#[test]
fn so8_index_of_normalizer_on_center_is_positive() {
    let p = build_partition_nilpotent(Family::So, &[5, 3]).unwrap();
    let data = p.orbit_data().unwrap();
    let g = p.algebra();
    let zc = BasisCoords::with_ambient(g.dim(), data.z.basis()).unwrap();
    let k = kirillov_in(g, &data.n, &zc).unwrap();
    let rank = exact_rank_compressed(&k, 1_000_000).expect("grid is small");
    // ind(n, z) = dim z − generic rank, and it is positive here
    assert!(rank < data.z.dim(), "rank {rank}, dim z {}", data.z.dim());
    assert_eq!((data.z.dim(), p.zprime().unwrap().dim()), (3, 2));
}
