//! Structure-constant Lie algebras over ℚ and the subspace calculus on them:
//! brackets of subspaces, centralizers, centers, normalizers, Killing
//! orthogonals and ad-eigenspace decompositions.

use std::sync::OnceLock;

use crate::exactla::{modular, Echelon, QMatrix, Rational};
use crate::{Error, Result};

/// Coefficient vector in the ambient basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn zero(n: usize) -> Self {
        Element(vec![Rational::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        Element(v)
    }

    pub fn from_coeffs(c: Vec<Rational>) -> Self {
        Element(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Element(c.iter().map(|&v| Rational::from_int(v)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Element) -> Element {
        Element(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element(self.0.iter().map(|a| a * c).collect())
    }

    /// self += c · o
    pub fn axpy(&mut self, c: &Rational, o: &Element) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }
}

/// Sums of elements with rational weights.
pub fn combination(n: usize, terms: &[(Rational, &Element)]) -> Element {
    let mut out = Element::zero(n);
    for (c, e) in terms {
        out.axpy(c, e);
    }
    out
}

/// Subspace of ℚ^n stored by its reduced echelon basis, so two subspaces
/// are equal exactly when their bases are.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.ech.pivots() == o.ech.pivots() && self.ech.basis() == o.ech.basis()
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, ech: Echelon::new(n) }
    }

    pub fn whole(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| Element::basis(n, i)))
    }

    pub fn span<I: IntoIterator<Item = Element>>(n: usize, vs: I) -> Self {
        let mut ech = Echelon::new(n);
        for v in vs {
            assert_eq!(v.len(), n, "element length does not match the ambient dimension");
            if !v.is_zero() {
                ech.insert(v.0);
            }
        }
        Subspace { ambient: n, ech }
    }

    /// Rows of a matrix spanning the subspace.
    pub fn from_rows(m: &QMatrix) -> Self {
        Self::span(m.cols(), m.to_rows().into_iter().map(Element))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    pub fn basis(&self) -> Vec<Element> {
        self.ech.basis().iter().map(|r| Element(r.clone())).collect()
    }

    pub fn basis_rows(&self) -> &[Vec<Rational>] {
        self.ech.basis()
    }

    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_rows(self.ambient, self.ech.basis().to_vec())
    }

    /// Remainder of `v` after reduction by the echelon basis; zero iff v ∈ S.
    pub fn reduce(&self, v: &Element) -> Element {
        let mut c = v.0.clone();
        self.ech.reduce(&mut c);
        Element(c)
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.ech.basis().iter().all(|r| self.contains(&Element(r.clone())))
    }

    /// Coordinates of `v` in the echelon basis, `None` when v ∉ S.
    pub fn coords(&self, v: &Element) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.coords_unchecked(v))
    }

    /// Coordinates read off the pivot columns; only meaningful for v ∈ S.
    pub fn coords_unchecked(&self, v: &Element) -> Vec<Rational> {
        self.ech.pivots().iter().map(|&p| v.0[p].clone()).collect()
    }

    pub fn element(&self, coords: &[Rational]) -> Element {
        assert_eq!(coords.len(), self.dim());
        let mut out = Element::zero(self.ambient);
        for (c, r) in coords.iter().zip(self.ech.basis()) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in out.0.iter_mut().zip(r) {
                if !b.is_zero() {
                    *a += &(c * b);
                }
            }
        }
        out
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in o.ech.basis() {
            s.ech.insert(r.clone());
        }
        s
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        let images: Vec<Vec<Rational>> = self.ech.basis().iter().map(|r| o.reduce(&Element(r.clone())).0).collect();
        let combos = left_kernel(&images, self.ambient);
        Subspace::span(self.ambient, combos.into_iter().map(|c| self.element(&c)))
    }

    /// Extend the basis of `self` by vectors of `o` to a basis of self + o,
    /// returning only the added vectors.
    pub fn complement_in(&self, o: &Subspace) -> Vec<Element> {
        let mut ech = self.ech.clone();
        let mut added = Vec::new();
        for r in o.ech.basis() {
            if ech.insert(r.clone()) {
                added.push(Element(r.clone()));
            }
        }
        added
    }
}

/// Coordinates with respect to an arbitrary (not echelonized) basis.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    basis: Vec<Element>,
    space: Subspace,
    // echelon coordinates → basis coordinates
    change: QMatrix,
}

impl BasisCoords {
    pub fn new(basis: Vec<Element>) -> Result<Self> {
        let n = basis.first().map_or(0, Element::len);
        let space = Subspace::span(n, basis.iter().cloned());
        if space.dim() != basis.len() {
            return Err(Error::Input("basis vectors are linearly dependent".into()));
        }
        let k = basis.len();
        // t[j][i] = coordinate of basis[j] on echelon row i
        let mut tt = QMatrix::zeros(k, k);
        for (j, b) in basis.iter().enumerate() {
            for (i, c) in space.coords_unchecked(b).into_iter().enumerate() {
                tt.set(i, j, c);
            }
        }
        let change = tt.inverse().expect("basis of its own span");
        Ok(BasisCoords { basis, space, change })
    }

    pub fn with_ambient(n: usize, basis: Vec<Element>) -> Result<Self> {
        if basis.is_empty() {
            return Ok(BasisCoords { basis, space: Subspace::zero(n), change: QMatrix::zeros(0, 0) });
        }
        Self::new(basis)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn coords(&self, v: &Element) -> Option<Vec<Rational>> {
        let c = self.space.coords(v)?;
        Some(self.change.mul_vec(&c))
    }

    pub fn element(&self, coords: &[Rational]) -> Element {
        let n = self.space.ambient();
        let terms: Vec<(Rational, &Element)> = coords.iter().cloned().zip(self.basis.iter()).collect();
        combination(n, &terms)
    }
}

/// Combinations λ (as rows) with Σ λ_r images[r] = 0, i.e. the left kernel.
pub fn left_kernel(images: &[Vec<Rational>], width: usize) -> Vec<Vec<Rational>> {
    let k = images.len();
    if k == 0 {
        return Vec::new();
    }
    // columns of the transpose are the images
    let mut t = QMatrix::zeros(width, k);
    for (r, img) in images.iter().enumerate() {
        for (j, v) in img.iter().enumerate() {
            if !v.is_zero() {
                t.set(j, r, v.clone());
            }
        }
    }
    t.kernel_basis().to_rows()
}

/// Lie algebra over ℚ given by sparse structure constants.
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<(usize, Rational)>>,
    cartan: Option<Vec<usize>>,
    rank: Option<usize>,
    killing: OnceLock<QMatrix>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieAlgebra").field("dim", &self.dim).field("rank", &self.rank).finish()
    }
}

impl LieAlgebra {
    /// `brackets(i, j)` returns [b_i, b_j] for i < j as sparse terms; the
    /// table is completed by antisymmetry.
    pub fn from_brackets<F>(labels: Vec<String>, mut brackets: F) -> Self
    where
        F: FnMut(usize, usize) -> Vec<(usize, Rational)>,
    {
        let n = labels.len();
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let mut terms: Vec<(usize, Rational)> =
                    brackets(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect();
                terms.sort_by_key(|t| t.0);
                let neg: Vec<(usize, Rational)> = terms.iter().map(|(k, c)| (*k, -c)).collect();
                table[i * n + j] = terms;
                table[j * n + i] = neg;
            }
        }
        LieAlgebra { dim: n, labels, table, cartan: None, rank: None, killing: OnceLock::new() }
    }

    pub fn with_cartan(mut self, cartan: Vec<usize>) -> Self {
        self.rank = Some(cartan.len());
        self.cartan = Some(cartan);
        self
    }

    /// Toral basis elements used first when completing sl2-triples; unlike
    /// `with_cartan` this does not claim they span a Cartan subalgebra.
    pub fn with_toral_hint(mut self, toral: Vec<usize>, rank: usize) -> Self {
        self.cartan = Some(toral);
        self.rank = Some(rank);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan_indices(&self) -> Option<&[usize]> {
        self.cartan.as_deref()
    }

    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::Input(format!(
                "element of length {} used in an algebra of dimension {}",
                x.len(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        let ys: Vec<(usize, &Rational)> = y.support().collect();
        for (i, a) in x.support() {
            for &(j, b) in &ys {
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in terms {
                    out[*k] += &(&ab * c);
                }
            }
        }
        Element(out)
    }

    /// [b_i, y]
    pub fn bracket_basis(&self, i: usize, y: &Element) -> Element {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (j, b) in y.support() {
            for (k, c) in &self.table[i * n + j] {
                out[*k] += &(b * c);
            }
        }
        Element(out)
    }

    /// Column j holds the coefficients of [x, b_j].
    pub fn ad_matrix(&self, x: &Element) -> Result<QMatrix> {
        self.check(x)?;
        let n = self.dim;
        let mut m = QMatrix::zeros(n, n);
        for (i, a) in x.support() {
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    let v = m.get(*k, j) + &(a * c);
                    m.set(*k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// Gram matrix of the Killing form on the basis (computed once).
    pub fn killing_matrix(&self) -> &QMatrix {
        self.killing.get_or_init(|| {
            let n = self.dim;
            let mut g = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    // trace(ad b_i ad b_j) = Σ_k Σ_l c_{jk}^l c_{il}^k
                    let mut acc = Rational::zero();
                    for k in 0..n {
                        for (l, c) in &self.table[j * n + k] {
                            if let Ok(pos) = self.table[i * n + l].binary_search_by_key(&k, |t| t.0) {
                                acc += &(c * &self.table[i * n + l][pos].1);
                            }
                        }
                    }
                    g.set(i, j, acc.clone());
                    g.set(j, i, acc);
                }
            }
            g
        })
    }

    pub fn killing(&self, x: &Element, y: &Element) -> Result<Rational> {
        self.check(x)?;
        self.check(y)?;
        let g = self.killing_matrix();
        let gy = g.mul_vec(y.coeffs());
        Ok(x.coeffs().iter().zip(&gy).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
    }

    pub fn centralizer(&self, x: &Element) -> Result<Subspace> {
        let ad = self.ad_matrix(x)?;
        Ok(Subspace::from_rows(&ad.kernel_basis()))
    }

    /// Centralizer of a subspace inside the whole algebra.
    pub fn centralizer_of(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let mut space = Subspace::whole(n);
        for v in s.basis() {
            if space.dim() == 0 {
                break;
            }
            let basis = space.basis();
            let images: Vec<Vec<Rational>> = basis.iter().map(|b| self.bracket_unchecked(b, &v).0).collect();
            let combos = left_kernel(&images, n);
            space = Subspace::span(n, combos.iter().map(|c| space.element(c)));
        }
        space
    }

    /// [x, S]
    pub fn bracket_with_space(&self, x: &Element, s: &Subspace) -> Result<Subspace> {
        self.check(x)?;
        Ok(Subspace::span(self.dim, s.basis().iter().map(|b| self.bracket_unchecked(x, b))))
    }

    /// [S, T]
    pub fn bracket_spaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let tb = t.basis();
        let mut ech = Echelon::new(self.dim);
        for a in s.basis() {
            for b in &tb {
                let v = self.bracket_unchecked(&a, b);
                if !v.is_zero() {
                    ech.insert(v.0);
                }
            }
        }
        Subspace { ambient: self.dim, ech }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !s.contains(&self.bracket_unchecked(&b[i], &b[j])) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center_of(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim {
            return Err(Error::Input("subspace of a different ambient dimension".into()));
        }
        if !self.is_subalgebra(s) {
            return Err(Error::Input("center_of needs a subalgebra".into()));
        }
        let basis = s.basis();
        // coordinates over the basis of s: z = Σ c_a s_a with [z, s_b] = 0 ∀ b
        let p = basis.len();
        let mut combos: Vec<Vec<Rational>> = QMatrix::identity(p).to_rows();
        for sb in &basis {
            if combos.is_empty() {
                break;
            }
            let imgs: Vec<Element> = basis.iter().map(|sa| self.bracket_unchecked(sa, sb)).collect();
            let combined: Vec<Vec<Rational>> = combos
                .iter()
                .map(|c| {
                    let terms: Vec<(Rational, &Element)> = c.iter().cloned().zip(imgs.iter()).collect();
                    combination(self.dim, &terms).0
                })
                .collect();
            let lam = left_kernel(&combined, self.dim);
            combos = compose(&lam, &combos);
        }
        Ok(Subspace::span(self.dim, combos.iter().map(|c| s.element(c))))
    }

    /// {y ∈ g : [y, S] ⊆ S}
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let mut space = Subspace::whole(n);
        for v in s.basis() {
            let basis = space.basis();
            let images: Vec<Vec<Rational>> = basis.iter().map(|b| s.reduce(&self.bracket_unchecked(b, &v)).0).collect();
            let combos = left_kernel(&images, n);
            if combos.len() == basis.len() {
                continue;
            }
            space = Subspace::span(n, combos.iter().map(|c| space.element(c)));
        }
        space
    }

    pub fn is_killing_nondegenerate(&self) -> bool {
        self.killing_matrix().rank() == self.dim
    }

    /// Orthogonal of S for the Killing form.
    pub fn orthogonal(&self, s: &Subspace) -> Result<Subspace> {
        if !self.is_killing_nondegenerate() {
            return Err(Error::Unsupported("Killing form is degenerate".into()));
        }
        let g = self.killing_matrix();
        let rows: Vec<Vec<Rational>> = s.basis().iter().map(|b| g.mul_vec(b.coeffs())).collect();
        let m = QMatrix::from_rows(self.dim, rows);
        Ok(Subspace::from_rows(&m.kernel_basis()))
    }

    /// Matrix of ad x restricted to an invariant subspace, in the echelon
    /// coordinates of S (column i = coordinates of [x, s_i]).
    pub fn restricted_ad(&self, x: &Element, s: &Subspace) -> Result<QMatrix> {
        self.check(x)?;
        let d = s.dim();
        let mut r = QMatrix::zeros(d, d);
        for (i, b) in s.basis().iter().enumerate() {
            let img = self.bracket_unchecked(x, b);
            let c = s.coords(&img).ok_or_else(|| Error::Input("subspace is not ad-invariant".into()))?;
            for (k, v) in c.into_iter().enumerate() {
                r.set(k, i, v);
            }
        }
        Ok(r)
    }

    /// Eigenspace of ad x on S for a given eigenvalue.
    pub fn eigenspace(&self, x: &Element, s: &Subspace, lambda: &Rational) -> Result<Subspace> {
        let r = self.restricted_ad(x, s)?;
        Ok(eigen_from_restriction(&r, s, lambda))
    }

    /// Decomposition of S into eigenspaces of ad x, eigenvalues ascending.
    pub fn eigenspaces(&self, x: &Element, s: &Subspace) -> Result<Vec<(Rational, Subspace)>> {
        let r = self.restricted_ad(x, s)?;
        let d = s.dim();
        if d == 0 {
            return Ok(Vec::new());
        }
        let bound = 2 * self.dim as i64;
        let reduced: Option<Vec<Vec<u64>>> =
            (0..d).map(|i| r.row(i).iter().map(modular::to_mod).collect::<Option<Vec<u64>>>()).collect();
        let mut out = Vec::new();
        let mut total = 0;
        for lam in -bound..=bound {
            if total == d {
                break;
            }
            if let Some(m) = &reduced {
                let mut a = m.clone();
                let lm = modular::int_mod(lam);
                for (i, row) in a.iter_mut().enumerate() {
                    row[i] = modular::add_mod(row[i], modular::neg_mod(lm));
                }
                if modular::det_mod(a) != 0 {
                    continue;
                }
            }
            let l = Rational::from_int(lam);
            let e = eigen_from_restriction(&r, s, &l);
            if e.dim() > 0 {
                total += e.dim();
                out.push((l, e));
            }
        }
        if total != d {
            return Err(Error::Unsupported(
                "ad restriction is not diagonalizable with integer eigenvalues in range".into(),
            ));
        }
        Ok(out)
    }
}

/// First basis triple (i, j, k) violating the Jacobi identity.
pub fn jacobi_violation(g: &LieAlgebra) -> Option<(usize, usize, usize)> {
    use rayon::prelude::*;
    let n = g.dim();
    (0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            for k in j + 1..n {
                if !jacobi_triple(g, i, j, k) {
                    return Some((i, j, k));
                }
            }
        }
        None
    })
}

/// Jacobi identity on `samples` seeded random basis triples.
pub fn jacobi_violation_sampled(g: &LieAlgebra, samples: usize, seed: u64) -> Option<(usize, usize, usize)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = g.dim();
    (0..samples)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)))
        .find(|&(i, j, k)| !jacobi_triple(g, i, j, k))
}

fn jacobi_triple(g: &LieAlgebra, i: usize, j: usize, k: usize) -> bool {
    let mut acc: Vec<(usize, Rational)> = Vec::new();
    // [[b_a, b_b], b_c] over the cyclic permutations
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for (m, c1) in g.structure(a, b) {
            for (r, c2) in g.structure(*m, c) {
                acc.push((*r, c1 * c2));
            }
        }
    }
    acc.sort_by_key(|t| t.0);
    let mut idx = 0;
    while idx < acc.len() {
        let mut s = Rational::zero();
        let key = acc[idx].0;
        while idx < acc.len() && acc[idx].0 == key {
            s += &acc[idx].1;
            idx += 1;
        }
        if !s.is_zero() {
            return false;
        }
    }
    true
}

fn eigen_from_restriction(r: &QMatrix, s: &Subspace, lambda: &Rational) -> Subspace {
    let d = r.rows();
    let mut a = r.clone();
    for i in 0..d {
        let v = a.get(i, i) - lambda;
        a.set(i, i, v);
    }
    let k = a.kernel_basis();
    Subspace::span(s.ambient(), k.to_rows().iter().map(|c| s.element(c)))
}

/// Row combinations `lam · combos`.
fn compose(lam: &[Vec<Rational>], combos: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let p = combos.first().map_or(0, |c| c.len());
    lam.iter()
        .map(|l| {
            let mut out = vec![Rational::zero(); p];
            for (c, row) in l.iter().zip(combos) {
                if c.is_zero() {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(row) {
                    if !v.is_zero() {
                        *o += &(c * v);
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    // basis (e, h, f)
    pub(crate) fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(vec!["e".into(), "h".into(), "f".into()], |i, j| match (i, j) {
            (0, 1) => vec![(0, q(-2))],
            (0, 2) => vec![(1, q(1))],
            (1, 2) => vec![(2, q(-2))],
            _ => vec![],
        })
        .with_cartan(vec![1])
    }

    fn e3(v: [i64; 3]) -> Element {
        Element::from_ints(&v)
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        let (e, h, f) = (e3([1, 0, 0]), e3([0, 1, 0]), e3([0, 0, 1]));
        assert_eq!(g.bracket(&h, &e).unwrap(), e.scale(&q(2)));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert!(g.bracket(&e, &e).unwrap().is_zero());
        assert!(g.bracket(&e, &Element::zero(2)).is_err());
    }

    #[test]
    fn sl2_ad_and_killing() {
        let g = sl2();
        let h = e3([0, 1, 0]);
        let ad = g.ad_matrix(&h).unwrap();
        assert_eq!(ad, QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert!(g.ad_matrix(&g.zero()).unwrap().is_zero());
        assert_eq!(g.killing(&h, &h).unwrap(), q(8));
        assert_eq!(g.killing(&e3([1, 0, 0]), &e3([0, 0, 1])).unwrap(), q(4));
        assert_eq!(g.killing(&h, &g.zero()).unwrap(), q(0));
    }

    #[test]
    fn sl2_subspaces() {
        let g = sl2();
        let e = e3([1, 0, 0]);
        let c = g.centralizer(&e).unwrap();
        assert_eq!(c, Subspace::span(3, [e.clone()]));
        assert_eq!(g.centralizer(&g.zero()).unwrap(), Subspace::whole(3));
        let n = g.normalizer(&Subspace::span(3, [e.clone()]));
        assert_eq!(n, Subspace::span(3, [e.clone(), e3([0, 1, 0])]));
        assert_eq!(g.normalizer(&Subspace::whole(3)), Subspace::whole(3));
        // orthogonal of span{e} is [e, g] = span{e, h}
        let o = g.orthogonal(&Subspace::span(3, [e.clone()])).unwrap();
        let ad_e = g.bracket_with_space(&e, &Subspace::whole(3)).unwrap();
        assert_eq!(o, ad_e);
        assert_eq!(g.orthogonal(&Subspace::zero(3)).unwrap(), Subspace::whole(3));
    }

    #[test]
    fn center_checks_closure() {
        let g = sl2();
        let s = Subspace::span(3, [e3([1, 0, 0]), e3([0, 0, 1])]);
        assert!(g.center_of(&s).is_err());
        let ab = Subspace::span(3, [e3([1, 0, 0])]);
        assert_eq!(g.center_of(&ab).unwrap(), ab);
        assert_eq!(g.center_of(&Subspace::whole(3)).unwrap().dim(), 0);
    }

    #[test]
    fn eigen_decomposition() {
        let g = sl2();
        let h = e3([0, 1, 0]);
        let es = g.eigenspaces(&h, &Subspace::whole(3)).unwrap();
        let vals: Vec<Rational> = es.iter().map(|(l, _)| l.clone()).collect();
        assert_eq!(vals, vec![q(-2), q(0), q(2)]);
        let z = g.eigenspaces(&g.zero(), &Subspace::whole(3)).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].0, q(0));
        assert_eq!(z[0].1.dim(), 3);
        // ad e is nilpotent, not diagonalizable
        assert!(g.eigenspaces(&e3([1, 0, 0]), &Subspace::whole(3)).is_err());
    }

    #[test]
    fn jacobi_on_sl2_and_a_broken_table() {
        assert_eq!(jacobi_violation(&sl2()), None);
        assert_eq!(jacobi_violation_sampled(&sl2(), 50, 1), None);
        // [a,b] = c, [b,c] = a, [a,c] = a is not a Lie algebra
        let bad = LieAlgebra::from_brackets(vec!["a".into(), "b".into(), "c".into()], |i, j| match (i, j) {
            (0, 1) => vec![(2, q(1))],
            (1, 2) => vec![(0, q(1))],
            (0, 2) => vec![(0, q(1))],
            _ => vec![],
        });
        assert_eq!(jacobi_violation(&bad), Some((0, 1, 2)));
    }

    #[test]
    fn basis_coordinates() {
        let b = BasisCoords::new(vec![e3([1, 1, 0]), e3([0, 1, 1])]).unwrap();
        let v = e3([2, 5, 3]);
        let c = b.coords(&v).unwrap();
        assert_eq!(c, vec![q(2), q(3)]);
        assert_eq!(b.element(&c), v);
        assert_eq!(b.coords(&e3([1, 0, 0])), None);
        assert!(BasisCoords::new(vec![e3([1, 1, 0]), e3([2, 2, 0])]).is_err());
    }

    #[test]
    fn subspace_arith() {
        let a = Subspace::span(3, [e3([1, 1, 0]), e3([0, 1, 1])]);
        let b = Subspace::span(3, [e3([1, 0, 0]), e3([0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::span(3, [e3([1, 0, -1])]));
        assert_eq!(a.sum(&b), Subspace::whole(3));
        let v = e3([2, 5, 3]);
        assert_eq!(a.element(&a.coords(&v).unwrap()), v);
        assert_eq!(a.coords(&e3([1, 0, 0])), None);
    }
}
