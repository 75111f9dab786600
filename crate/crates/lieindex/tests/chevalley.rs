use lieindex::chevalley::{build_simple, Gen, SimpleLie, SimpleType};
use lieindex::exactla::Rational;
use lieindex::liecore::jacobi_violation;

use SimpleType::*;

const SMALL: &[(SimpleType, usize)] =
    &[(A, 1), (A, 2), (A, 3), (A, 4), (B, 2), (B, 3), (B, 4), (C, 3), (C, 4), (D, 4), (D, 5), (G, 2), (F, 4), (E, 6)];

fn positive_count(ty: SimpleType, l: usize) -> usize {
    match ty {
        A => l * (l + 1) / 2,
        B | C => l * l,
        D => l * (l - 1),
        E => [36, 63, 120][l - 6],
        F => 24,
        G => 6,
    }
}

/// Bourbaki Cartan matrix a_ij = 2(α_i, α_j)/(α_i, α_i), from squared
/// lengths and the inner products of adjacent nodes.
fn bourbaki_cartan(ty: SimpleType, l: usize) -> Vec<Vec<i64>> {
    let mut norm = vec![2i64; l];
    let mut inner: Vec<(usize, usize, i64)> = Vec::new();
    match ty {
        A => inner.extend((0..l - 1).map(|i| (i, i + 1, -1))),
        B => {
            // α_l short
            norm = (0..l).map(|i| if i == l - 1 { 2 } else { 4 }).collect();
            inner.extend((0..l - 1).map(|i| (i, i + 1, -2)));
        }
        C => {
            norm = (0..l).map(|i| if i == l - 1 { 4 } else { 2 }).collect();
            inner.extend((0..l - 2).map(|i| (i, i + 1, -1)));
            inner.push((l - 2, l - 1, -2));
        }
        D => {
            inner.extend((0..l - 2).map(|i| (i, i + 1, -1)));
            inner.push((l - 3, l - 1, -1));
        }
        E => {
            inner.push((0, 2, -1));
            inner.push((1, 3, -1));
            inner.extend((2..l - 1).map(|i| (i, i + 1, -1)));
        }
        F => {
            norm = vec![4, 4, 2, 2];
            inner = vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)];
        }
        G => {
            norm = vec![2, 6];
            inner = vec![(0, 1, -3)];
        }
    }
    let mut m = vec![vec![0i64; l]; l];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j, v) in inner {
        m[i][j] = 2 * v / norm[i];
        m[j][i] = 2 * v / norm[j];
    }
    m
}

fn coeff(g: &SimpleLie, a: usize, b: usize, target: usize) -> Rational {
    g.algebra.structure(a, b).iter().find(|t| t.0 == target).map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
}

#[test]
fn dimensions_and_root_counts() {
    for &(ty, l) in SMALL.iter().chain(&[(E, 7), (E, 8)]) {
        let g = build_simple(ty, l).unwrap();
        let n = positive_count(ty, l);
        assert_eq!(g.roots.num_positive(), n, "{ty:?}{l}");
        assert_eq!(g.dim(), 2 * n + l, "{ty:?}{l}");
        for (i, r) in g.roots.positive_roots.iter().take(l).enumerate() {
            let mut e = vec![0; l];
            e[i] = 1;
            assert_eq!(r, &e, "simple roots come first in node order");
        }
    }
    let dims: Vec<usize> =
        [(E, 6), (E, 7), (E, 8), (F, 4), (G, 2)].iter().map(|&(t, l)| build_simple(t, l).unwrap().dim()).collect();
    assert_eq!(dims, vec![78, 133, 248, 52, 14]);
}

#[test]
fn cartan_matrix_is_bourbaki() {
    for &(ty, l) in SMALL.iter().chain(&[(E, 7), (E, 8)]) {
        let g = build_simple(ty, l).unwrap();
        assert_eq!(g.roots.cartan, bourbaki_cartan(ty, l), "{ty:?}{l}");
    }
}

#[test]
fn jacobi_exhaustive() {
    for &(ty, l) in SMALL.iter().chain(&[(E, 7), (E, 8)]) {
        let g = build_simple(ty, l).unwrap();
        assert_eq!(jacobi_violation(&g.algebra), None, "{ty:?}{l}");
    }
}

#[test]
fn chevalley_relations() {
    for &(ty, l) in SMALL.iter().chain(&[(E, 8)]) {
        let g = build_simple(ty, l).unwrap();
        let n = g.roots.num_positive();
        let cartan: std::collections::HashSet<usize> = g.basis.h.iter().copied().collect();
        // integrality everywhere
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                for (_, c) in g.algebra.structure(i, j) {
                    assert!(c.is_integer(), "{ty:?}{l}: non-integral constant");
                    assert!(c.abs() <= Rational::from_int(6));
                }
            }
        }
        for a in 0..n {
            let (x, y) = (g.basis.x[a], g.basis.y[a]);
            let h = g.algebra.structure(x, y);
            assert!(h.iter().all(|t| cartan.contains(&t.0)), "[x_a, y_a] lies in the Cartan subalgebra");
            // [h_a, x_a] = 2 x_a, [h_a, y_a] = -2 y_a
            let he = g.algebra.bracket(&elem(&g, h), &g.algebra.basis_element(x)).unwrap();
            assert_eq!(he, g.algebra.basis_element(x).scale(&Rational::from_int(2)));
            let hf = g.algebra.bracket(&elem(&g, h), &g.algebra.basis_element(y)).unwrap();
            assert_eq!(hf, g.algebra.basis_element(y).scale(&Rational::from_int(-2)));
        }
        for i in 0..l {
            // [x_i, y_i] = h_i and [h_i, x_j] = a_ij x_j
            assert_eq!(g.algebra.structure(g.basis.x[i], g.basis.y[i]), &[(g.basis.h[i], Rational::one())]);
            for j in 0..l {
                let c = coeff(&g, g.basis.h[i], g.basis.x[j], g.basis.x[j]);
                assert_eq!(c, Rational::from_int(g.roots.cartan[i][j]));
            }
        }
    }
}

fn elem(g: &SimpleLie, terms: &[(usize, Rational)]) -> lieindex::liecore::Element {
    let mut e = g.algebra.zero();
    for (i, c) in terms {
        e.axpy(c, &g.algebra.basis_element(*i));
    }
    e
}

#[test]
fn structure_constants_are_p_plus_one_and_extraspecial_positive() {
    for &(ty, l) in SMALL.iter().chain(&[(E, 8)]) {
        let g = build_simple(ty, l).unwrap();
        let n = g.roots.num_positive();
        for a in 1..=n {
            for b in 1..=n {
                let ra = g.roots.root(a).unwrap().to_vec();
                let rb = g.roots.root(b).unwrap().to_vec();
                let sum: Vec<i64> = ra.iter().zip(&rb).map(|(x, y)| x + y).collect();
                let nab = g.structure_constant(a, b).unwrap();
                if g.roots.root_index(&sum).is_none() {
                    assert_eq!(nab, 0);
                    continue;
                }
                // p = largest k with β − kα a root
                let mut p = 0;
                loop {
                    let v: Vec<i64> = rb.iter().zip(&ra).map(|(y, x)| y - (p + 1) * x).collect();
                    if v.iter().all(|&c| c == 0) || !g.roots.is_root(&v) {
                        break;
                    }
                    p += 1;
                }
                assert_eq!(nab.abs(), p + 1, "{ty:?}{l}: N({a},{b})");
            }
        }
        for k in l + 1..=n {
            let xi = g.roots.root(k).unwrap().to_vec();
            let i = (0..l)
                .find(|&i| {
                    let mut b = xi.clone();
                    b[i] -= 1;
                    g.roots.root_index(&b).is_some()
                })
                .unwrap();
            let mut b = xi.clone();
            b[i] -= 1;
            let bi = g.roots.root_index(&b).unwrap();
            assert!(g.structure_constant(i + 1, bi).unwrap() > 0, "{ty:?}{l}: extraspecial pair for root {k}");
        }
    }
}

#[test]
fn combinations_and_characteristic() {
    let g = build_simple(A, 2).unwrap();
    assert!(g.element_from_combination(&[]).unwrap().is_zero());
    // principal h of sl3: 2h_1 + 2h_2 has characteristic (2, 2)
    let h =
        g.element_from_combination(&[(Gen::H, 1, Rational::from_int(2)), (Gen::H, 2, Rational::from_int(2))]).unwrap();
    assert_eq!(g.weighted_dynkin(&h).unwrap(), vec![2, 2]);
    assert!(g.element_from_combination(&[(Gen::Y, 9, Rational::one())]).is_err());
}
