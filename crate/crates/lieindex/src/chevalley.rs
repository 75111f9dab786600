//! Simple Lie algebras over ℚ in a Chevalley basis.
//!
//! Simply laced types are built from the root lattice with a bimultiplicative
//! sign cocycle; B, C, F4 and G2 are the fixed points of a diagram
//! automorphism of D_{l+1}, A_{2l-1}, E6 and D4. Root vectors are finally
//! rescaled by signs so that every extraspecial pair has a positive
//! structure constant.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::exactla::Rational;
use crate::liecore::{Element, LieAlgebra};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => SimpleType::A,
            'B' => SimpleType::B,
            'C' => SimpleType::C,
            'D' => SimpleType::D,
            'E' => SimpleType::E,
            'F' => SimpleType::F,
            'G' => SimpleType::G,
            _ => return Err(Error::Input(format!("unknown simple type '{c}'"))),
        })
    }

    pub fn validate_rank(self, l: usize) -> Result<()> {
        let ok = match self {
            SimpleType::A => l >= 1,
            SimpleType::B => l >= 2,
            SimpleType::C => l >= 3,
            SimpleType::D => l >= 4,
            SimpleType::E => (6..=8).contains(&l),
            SimpleType::F => l == 4,
            SimpleType::G => l == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!("{}{l} is not a simple type", self.letter())))
        }
    }
}

/// A simple type together with its rank, written like `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub ty: SimpleType,
    pub rank: usize,
}

impl CartanType {
    pub fn new(ty: SimpleType, rank: usize) -> Result<Self> {
        ty.validate_rank(rank)?;
        Ok(CartanType { ty, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ty.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let c = chars.next().ok_or_else(|| Error::Input("empty type".into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Input(format!("bad rank in type '{s}'")))?;
        CartanType::new(SimpleType::from_letter(c)?, rank)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = α_j(h_i)`
    pub cartan: Vec<Vec<i64>>,
    /// Sorted by height, then descending lexicographic order, so that the
    /// simple roots come first in node order.
    pub positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// 1-based position of a positive root.
    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).map(|i| i + 1)
    }

    pub fn root(&self, one_based: usize) -> Option<&[i64]> {
        one_based.checked_sub(1).and_then(|i| self.positive_roots.get(i)).map(Vec::as_slice)
    }

    pub fn height(root: &[i64]) -> i64 {
        root.iter().sum()
    }

    /// ⟨β, α_i^∨⟩ for a root β given in simple-root coordinates.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(j, b)| b * self.cartan[i][j]).sum()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }
}

/// Positions of the Chevalley generators in the algebra basis.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub h: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    X,
    Y,
    H,
}

pub struct SimpleLie {
    pub algebra: LieAlgebra,
    pub roots: RootSystem,
    pub basis: ChevalleyBasis,
}

impl fmt::Debug for SimpleLie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleLie({}, dim {})", self.roots.cartan_type, self.algebra.dim())
    }
}

impl SimpleLie {
    pub fn cartan_type(&self) -> CartanType {
        self.roots.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// x[i], y[i] are 1-based as positive roots are; h[i] is 1-based in
    /// node order.
    pub fn generator(&self, kind: Gen, one_based: usize) -> Result<Element> {
        let list = match kind {
            Gen::X => &self.basis.x,
            Gen::Y => &self.basis.y,
            Gen::H => &self.basis.h,
        };
        let pos = one_based
            .checked_sub(1)
            .and_then(|i| list.get(i))
            .ok_or_else(|| Error::Input(format!("{kind:?}[{one_based}] is out of range (1..={})", list.len())))?;
        Ok(self.algebra.basis_element(*pos))
    }

    pub fn element_from_combination(&self, terms: &[(Gen, usize, Rational)]) -> Result<Element> {
        let mut out = self.algebra.zero();
        for (kind, i, c) in terms {
            out.axpy(c, &self.generator(*kind, *i)?);
        }
        Ok(out)
    }

    /// Positive root vector x_β for β in simple-root coordinates.
    pub fn root_vector(&self, coeffs: &[i64]) -> Result<Element> {
        let i = self
            .roots
            .root_index(coeffs)
            .ok_or_else(|| Error::Input(format!("{coeffs:?} is not a positive root of {}", self.cartan_type())))?;
        self.generator(Gen::X, i)
    }

    /// Values α_i(h) on the simple roots, in node order.
    pub fn weighted_dynkin(&self, h: &Element) -> Result<Vec<i64>> {
        if h.len() != self.dim() {
            return Err(Error::Input("element from a different algebra".into()));
        }
        let l = self.rank();
        let mut hs = vec![Rational::zero(); l];
        for (pos, c) in h.support() {
            match self.basis.h.iter().position(|&p| p == pos) {
                Some(k) => hs[k] = c.clone(),
                None => return Err(Error::Input("element is not in the Cartan subalgebra".into())),
            }
        }
        (0..l)
            .map(|i| {
                let v: Rational = (0..l).map(|k| &hs[k] * &Rational::from_int(self.roots.cartan[k][i])).sum();
                v.to_i64()
                    .filter(|_| v.is_integer())
                    .ok_or_else(|| Error::Input(format!("α_{}(h) = {v} is not an integer", i + 1)))
            })
            .collect()
    }

    /// N_{α,β} for positive roots α, β (1-based), zero when α+β is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Result<i64> {
        let (ra, rb) = match (self.roots.root(a), self.roots.root(b)) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::Input("root index out of range".into())),
        };
        let sum: Vec<i64> = ra.iter().zip(rb).map(|(p, q)| p + q).collect();
        let Some(k) = self.roots.root_index(&sum) else {
            return Ok(0);
        };
        let xa = self.basis.x[a - 1];
        let xb = self.basis.x[b - 1];
        let xk = self.basis.x[k - 1];
        let c = self
            .algebra
            .structure(xa, xb)
            .iter()
            .find(|t| t.0 == xk)
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero);
        Ok(c.to_i64().expect("Chevalley structure constants are small integers"))
    }
}

/// Bourbaki Dynkin diagram edges of a simply laced type.
fn simply_laced_edges(ty: SimpleType, l: usize) -> Vec<(usize, usize)> {
    match ty {
        SimpleType::A => (0..l.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        SimpleType::D => {
            let mut e: Vec<(usize, usize)> = (0..l - 2).map(|i| (i, i + 1)).collect();
            e.push((l - 3, l - 1));
            e
        }
        SimpleType::E => {
            // 1-3-4-5-...-l with 2 attached to 4
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..l - 1).map(|i| (i, i + 1)));
            e
        }
        _ => unreachable!("not simply laced"),
    }
}

struct Folding {
    cover: SimpleType,
    cover_rank: usize,
    orbits: Vec<Vec<usize>>,
    fixed: usize,
}

fn folding(ct: CartanType) -> Folding {
    let l = ct.rank;
    match ct.ty {
        SimpleType::A | SimpleType::D | SimpleType::E => {
            Folding { cover: ct.ty, cover_rank: l, orbits: (0..l).map(|i| vec![i]).collect(), fixed: 0 }
        }
        SimpleType::B => {
            let mut orbits: Vec<Vec<usize>> = (0..l - 1).map(|i| vec![i]).collect();
            orbits.push(vec![l - 1, l]);
            Folding { cover: SimpleType::D, cover_rank: l + 1, orbits, fixed: 0 }
        }
        SimpleType::C => {
            let n = 2 * l - 1;
            let mut orbits: Vec<Vec<usize>> = (0..l - 1).map(|i| vec![i, n - 1 - i]).collect();
            orbits.push(vec![l - 1]);
            Folding { cover: SimpleType::A, cover_rank: n, orbits, fixed: l - 1 }
        }
        SimpleType::F => Folding {
            cover: SimpleType::E,
            cover_rank: 6,
            orbits: vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
            fixed: 3,
        },
        SimpleType::G => {
            Folding { cover: SimpleType::D, cover_rank: 4, orbits: vec![vec![0, 2, 3], vec![1]], fixed: 1 }
        }
    }
}

fn edges_for_cover(ty: SimpleType, l: usize) -> Vec<(usize, usize)> {
    // D3 (covering B2) is the chain 2-1-3 under the D_l rule
    if ty == SimpleType::D && l == 3 {
        return vec![(0, 1), (0, 2)];
    }
    simply_laced_edges(ty, l)
}

/// Positive roots of a simply laced system with the given Cartan matrix.
fn simply_laced_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for i in 0..l {
                let pair: i64 = (0..l).map(|j| b[j] * cartan[j][i]).sum();
                if pair == -1 {
                    let mut c = b.clone();
                    c[i] += 1;
                    if seen.insert(c.clone()) {
                        next.push(c);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots
}

fn sort_roots(roots: &mut [Vec<i64>]) {
    roots.sort_by(|a, b| RootSystem::height(a).cmp(&RootSystem::height(b)).then_with(|| b.cmp(a)));
}

/// Simply laced algebra in the basis (E_α for α > 0, E_α for α < 0, h_i).
struct Cover {
    algebra: LieAlgebra,
    pos: Vec<Vec<i64>>,
    rank: usize,
}

impl Cover {
    fn build(ty: SimpleType, l: usize, fixed: usize) -> Cover {
        let edges = edges_for_cover(ty, l);
        let mut cartan = vec![vec![0i64; l]; l];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        // orient every edge away from the fixed node
        let mut dist = vec![usize::MAX; l];
        dist[fixed] = 0;
        let mut queue = std::collections::VecDeque::from([fixed]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &edges {
                for (p, q) in [(a, b), (b, a)] {
                    if p == v && dist[q] == usize::MAX {
                        dist[q] = dist[v] + 1;
                        queue.push_back(q);
                    }
                }
            }
        }
        let mut flip = vec![vec![false; l]; l];
        for (i, row) in flip.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &edges {
            let (from, to) = if dist[a] < dist[b] { (a, b) } else { (b, a) };
            flip[from][to] = true;
        }
        let mut pos = simply_laced_roots(&cartan);
        sort_roots(&mut pos);
        let n = pos.len();
        let mut all: Vec<Vec<i64>> = pos.clone();
        all.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<i64>>()));
        let index: HashMap<Vec<i64>, usize> = all.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let eps = |a: &[i64], b: &[i64]| -> i64 {
            let mut parity = 0i64;
            for i in 0..l {
                for j in 0..l {
                    if flip[i][j] {
                        parity += a[i] * b[j];
                    }
                }
            }
            if parity.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };
        let dim = 2 * n + l;
        let labels: Vec<String> = (0..dim).map(|i| format!("b{i}")).collect();
        let algebra = LieAlgebra::from_brackets(labels, |i, j| {
            let q = |v: i64| Rational::from_int(v);
            match (i < 2 * n, j < 2 * n) {
                (true, true) => {
                    let (a, b) = (&all[i], &all[j]);
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if s.iter().all(|&x| x == 0) {
                        // [E_α, E_{-α}] = -α
                        a.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (2 * n + k, q(-c))).collect()
                    } else if let Some(&k) = index.get(&s) {
                        vec![(k, q(eps(a, b)))]
                    } else {
                        vec![]
                    }
                }
                (true, false) => {
                    // [E_α, h_k] = -(α, α_k) E_α
                    let k = j - 2 * n;
                    let v: i64 = (0..l).map(|m| all[i][m] * cartan[m][k]).sum();
                    vec![(i, q(-v))]
                }
                _ => vec![],
            }
        });
        Cover { algebra, pos, rank: l }
    }

    fn n(&self) -> usize {
        self.pos.len()
    }
}

pub fn build_simple(ty: SimpleType, rank: usize) -> Result<SimpleLie> {
    let ct = CartanType::new(ty, rank)?;
    Ok(build_type(ct))
}

pub fn build(ct: CartanType) -> Result<SimpleLie> {
    build_simple(ct.ty, ct.rank)
}

fn build_type(ct: CartanType) -> SimpleLie {
    let fold = folding(ct);
    let cover = Cover::build(fold.cover, fold.cover_rank, fold.fixed);
    let cn = cover.n();
    let l = ct.rank;
    let node_orbit: Vec<usize> = {
        let mut v = vec![0; cover.rank];
        for (k, o) in fold.orbits.iter().enumerate() {
            for &j in o {
                v[j] = k;
            }
        }
        v
    };
    // restricted positive roots and the cover roots above each
    let mut groups: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for (i, r) in cover.pos.iter().enumerate() {
        let mut c = vec![0i64; l];
        for (j, &a) in r.iter().enumerate() {
            c[node_orbit[j]] += a;
        }
        groups.entry(c).or_default().push(i);
    }
    let mut roots: Vec<Vec<i64>> = groups.keys().cloned().collect();
    sort_roots(&mut roots);
    let n = roots.len();
    let dim = 2 * n + l;
    let cdim = cover.algebra.dim();

    let make = |signs: &[i64]| -> Vec<Element> {
        let mut els = Vec::with_capacity(dim);
        for (r, s) in roots.iter().zip(signs) {
            let mut e = Element::zero(cdim);
            for &i in &groups[r] {
                e.axpy(&Rational::from_int(*s), &cover.algebra.basis_element(i));
            }
            els.push(e);
        }
        for (r, s) in roots.iter().zip(signs) {
            let mut e = Element::zero(cdim);
            for &i in &groups[r] {
                e.axpy(&Rational::from_int(-*s), &cover.algebra.basis_element(cn + i));
            }
            els.push(e);
        }
        for o in &fold.orbits {
            let mut e = Element::zero(cdim);
            for &j in o {
                e.axpy(&Rational::one(), &cover.algebra.basis_element(2 * cn + j));
            }
            els.push(e);
        }
        els
    };
    // each folded element is read off at its first cover coordinate
    let leads: Vec<usize> = {
        let els = make(&vec![1; n]);
        els.iter().map(|e| e.support().next().expect("nonzero basis element").0).collect()
    };
    let lead_of: HashMap<usize, usize> = leads.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let to_folded = |el: &Element, basis: &[Element]| -> Vec<(usize, Rational)> {
        let mut terms = Vec::new();
        let mut check = Element::zero(cdim);
        for (p, c) in el.support() {
            if let Some(&k) = lead_of.get(&p) {
                let lc = &basis[k].coeffs()[p];
                let v = c / lc;
                check.axpy(&v, &basis[k]);
                terms.push((k, v));
            }
        }
        assert_eq!(&check, el, "bracket left the folded subalgebra");
        terms
    };

    let root_index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let raw = make(&vec![1; n]);
    let mut signs = vec![1i64; n];
    for (k, xi) in roots.iter().enumerate() {
        if RootSystem::height(xi) == 1 {
            continue;
        }
        let (a, b) = (0..l)
            .find_map(|i| {
                let mut beta = xi.clone();
                beta[i] -= 1;
                root_index.get(&beta).map(|&b| (i, b))
            })
            .expect("non-simple positive root has a simple predecessor");
        let br = cover.algebra.bracket_unchecked(&raw[a], &raw[b]);
        let t = to_folded(&br, &raw);
        let c = t.iter().find(|x| x.0 == k).map(|x| x.1.signum()).unwrap_or(0);
        assert!(c != 0, "extraspecial bracket vanished");
        signs[k] = c as i64 * signs[a] * signs[b];
    }
    let basis = make(&signs);
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("y{i}")));
    labels.extend((1..=l).map(|i| format!("h{i}")));
    let algebra = LieAlgebra::from_brackets(labels, |i, j| {
        let br = cover.algebra.bracket_unchecked(&basis[i], &basis[j]);
        to_folded(&br, &basis)
    })
    .with_cartan((2 * n..dim).collect());

    // α_j(h_i) read from [h_i, x_j]
    let cartan: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    algebra.structure(2 * n + i, j).iter().find(|t| t.0 == j).and_then(|t| t.1.to_i64()).unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let rs = RootSystem { cartan_type: ct, cartan, positive_roots: roots, index: root_index };
    SimpleLie {
        algebra,
        roots: rs,
        basis: ChevalleyBasis { x: (0..n).collect(), y: (n..2 * n).collect(), h: (2 * n..dim).collect() },
    }
}
