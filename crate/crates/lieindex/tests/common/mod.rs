//! Structure identities checked on random nilpotent elements.

#![allow(dead_code)]

use lieindex::chevalley::{build_simple, Gen, SimpleLie, SimpleType};
use lieindex::exactla::{QMatrix, Rational};
use lieindex::index::{index_of, index_rep, RankConfig};
use lieindex::liecore::{left_kernel, Element, LieAlgebra, Subspace};
use lieindex::slice::{jacobson_morozov, OrbitData};

pub const SUITE: [(&str, SimpleType, usize); 6] = [
    ("sl4", SimpleType::A, 3),
    ("so7", SimpleType::B, 3),
    ("sp6", SimpleType::C, 3),
    ("so8", SimpleType::D, 4),
    ("G2", SimpleType::G, 2),
    ("F4", SimpleType::F, 4),
];

pub fn algebra(i: usize) -> SimpleLie {
    let (_, ty, rank) = SUITE[i];
    build_simple(ty, rank).unwrap()
}

/// Σ c_α x_α over positive roots; nilpotent since it lies in n+.
pub fn nilpotent(g: &SimpleLie, coeffs: &[i64]) -> Element {
    let mut e = g.algebra.zero();
    for (k, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            e.axpy(&Rational::from_int(c), &g.generator(Gen::X, k + 1).unwrap());
        }
    }
    e
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub decomposition: bool,
    pub orthogonality: bool,
    pub orthogonal_identities: bool,
    pub ideal_inequality: bool,
    pub power_relation: bool,
}

impl Outcome {
    pub fn all(&self) -> bool {
        self.decomposition
            && self.orthogonality
            && self.orthogonal_identities
            && self.ideal_inequality
            && self.power_relation
    }
}

fn whole(g: &LieAlgebra) -> Subspace {
    Subspace::whole(g.dim())
}

/// {y : [y, ξ] ∈ s}
fn preimage(g: &LieAlgebra, xi: &Element, s: &Subspace) -> Subspace {
    let images: Vec<Vec<Rational>> =
        (0..g.dim()).map(|j| s.reduce(&g.bracket_basis(j, xi).scale(&-Rational::one())).into_coeffs()).collect();
    Subspace::span(g.dim(), left_kernel(&images, g.dim()).into_iter().map(Element::from_coeffs))
}

fn direct_sum(a: &Subspace, b: &Subspace) -> Option<Subspace> {
    let s = a.sum(b);
    (s.dim() == a.dim() + b.dim()).then_some(s)
}

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.mul(b).sub(&b.mul(a))
}

fn power(a: &QMatrix, k: u32) -> QMatrix {
    (0..k).fold(QMatrix::identity(a.rows()), |p, _| p.mul(a))
}

pub fn check(g: &SimpleLie, e: &Element, k: u32, i: u32, cfg: &RankConfig) -> Outcome {
    let g = &g.algebra;
    if e.is_zero() {
        return Outcome {
            decomposition: true,
            orthogonality: true,
            orthogonal_identities: true,
            ideal_inequality: true,
            power_relation: true,
        };
    }
    let t = jacobson_morozov(g, e).unwrap();
    let d = OrbitData::new(g, t.clone()).unwrap();
    let (xi, eta) = (&t.e, &t.f);
    let all = whole(g);

    let eta_z = g.bracket_with_space(eta, &d.z).unwrap();
    let decomposition = direct_sum(&d.gxi, &eta_z).is_some_and(|s| s == d.n)
        && d.n.dim() == d.gxi.dim() + d.z.dim()
        && preimage(g, xi, &d.z) == d.n
        && g.bracket_with_space(xi, &d.n).unwrap() == d.z;

    let xi_g = g.bracket_with_space(xi, &all).unwrap();
    let eta_g = g.bracket_with_space(eta, &all).unwrap();
    let orthogonality =
        g.orthogonal(&d.gxi).unwrap() == xi_g && d.gxi.intersect(&eta_g).dim() == 0 && d.gxi.sum(&eta_g) == all;

    let gxi_g = g.bracket_spaces(&d.gxi, &all);
    let eta_gxi = g.bracket_with_space(eta, &d.gxi).unwrap();
    let orthogonal_identities = g.orthogonal(&d.n).unwrap() == g.bracket_with_space(xi, &gxi_g).unwrap()
        && direct_sum(&d.gxi, &eta_gxi)
            .is_some_and(|s| g.orthogonal(&s).unwrap() == g.bracket_with_space(xi, &xi_g).unwrap())
        && g.orthogonal(&d.z).unwrap() == gxi_g;

    let ind_gxi = index_of(g, &d.gxi, cfg).unwrap();
    let ind_n = index_of(g, &d.n, cfg).unwrap();
    let ind_n_gxi = index_rep(g, &d.n, &d.gxi, cfg).unwrap();
    let ideal_inequality = ind_gxi + ind_n <= (d.n.dim() - d.gxi.dim()) + 2 * ind_n_gxi;

    // [[X^k, Y], X^i] = 2ki X^{k+i−1} in the adjoint representation
    let x = g.ad_matrix(xi).unwrap();
    let y = g.ad_matrix(eta).unwrap();
    let lhs = commutator(&commutator(&power(&x, k), &y), &power(&x, i));
    let power_relation = lhs == power(&x, k + i - 1).scale(&Rational::from_int(2 * (k * i) as i64));

    Outcome { decomposition, orthogonality, orthogonal_identities, ideal_inequality, power_relation }
}
