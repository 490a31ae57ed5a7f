//! Based quasi-hereditary graded superalgebras: structure constants, heredity data,
//! anti-involutions, built-in constructors and verification.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::heredity::{self, BasisAlgebra, HeredityBasis, HeredityInput, Report, Tables, Vector};
use crate::tableau::Alphabet;

/// Sparse integer combination of basis elements.
pub type Combo = Vec<(usize, i64)>;

/// A graded superalgebra given by a basis and structure constants κ^b_{a,c}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superalgebra {
    pub labels: Vec<String>,
    pub degree: Vec<i64>,
    pub parity: Vec<u8>,
    kappa: Vec<Vec<Combo>>,
}

impl Superalgebra {
    /// Build from products `(a, c, a·c)`; unspecified products are zero.
    /// Validates indices and that products respect degree and parity.
    pub fn new(
        labels: Vec<String>,
        degree: Vec<i64>,
        parity: Vec<u8>,
        products: Vec<(usize, usize, Combo)>,
    ) -> Result<Self> {
        let n = labels.len();
        if degree.len() != n || parity.len() != n {
            return Err(Error::SizeMismatch(
                "basis, degree and parity lengths differ".into(),
            ));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::Invalid("parity must be 0 or 1".into()));
        }
        let mut kappa = vec![vec![Vec::new(); n]; n];
        for (a, c, out) in products {
            if a >= n || c >= n {
                return Err(Error::Invalid(format!(
                    "product index out of range: ({a}, {c})"
                )));
            }
            let mut m: BTreeMap<usize, i64> = BTreeMap::new();
            for (b, v) in out {
                if b >= n {
                    return Err(Error::Invalid(format!("output index {b} out of range")));
                }
                *m.entry(b).or_insert(0) += v;
            }
            let combo: Combo = m.into_iter().filter(|(_, v)| *v != 0).collect();
            for (b, _) in &combo {
                if degree[*b] != degree[a] + degree[c] || parity[*b] != parity[a] ^ parity[c] {
                    return Err(Error::Invalid(format!(
                        "product {}·{} has a term {} of the wrong degree or parity",
                        labels[a], labels[c], labels[*b]
                    )));
                }
            }
            kappa[a][c] = combo;
        }
        Ok(Superalgebra {
            labels,
            degree,
            parity,
            kappa,
        })
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn mul_basis(&self, a: usize, c: usize) -> &[(usize, i64)] {
        &self.kappa[a][c]
    }
    /// Bilinear extension of κ.
    pub fn mul(&self, u: &[(usize, i64)], v: &[(usize, i64)]) -> Combo {
        let mut m: BTreeMap<usize, i64> = BTreeMap::new();
        for (a, x) in u {
            for (c, y) in v {
                for (b, k) in &self.kappa[*a][*c] {
                    *m.entry(*b).or_insert(0) += x * y * k;
                }
            }
        }
        m.into_iter().filter(|(_, v)| *v != 0).collect()
    }
    /// All nonzero products, for serialization.
    pub fn products(&self) -> Vec<(usize, usize, Combo)> {
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for c in 0..self.dim() {
                if !self.kappa[a][c].is_empty() {
                    out.push((a, c, self.kappa[a][c].clone()));
                }
            }
        }
        out
    }
    /// First basis triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let ab = self.mul(&[(a, 1)], &[(b, 1)]);
                for c in 0..self.dim() {
                    let left = self.mul(&ab, &[(c, 1)]);
                    let bc = self.mul(&[(b, 1)], &[(c, 1)]);
                    let right = self.mul(&[(a, 1)], &bc);
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A superalgebra with heredity data and the subalgebra 𝔞; the anti-involution is optional.
#[derive(Clone, Debug)]
pub struct BasedAlgebra {
    pub name: String,
    pub alg: Superalgebra,
    /// Number of heredity labels; I = {0, ..., colors - 1}.
    pub colors: usize,
    /// less[i][j] iff i < j in the poset (transitively closed).
    pub less: Vec<Vec<bool>>,
    /// X(i) in the fixed alphabet order.
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
    pub e: Vec<usize>,
    /// Membership in B_a.
    pub in_a: Vec<bool>,
    /// Basis permutation of an anti-involution τ.
    pub tau: Option<Vec<usize>>,
    /// j with e_j b = b.
    pub left: Vec<usize>,
    /// j with b e_j = b.
    pub right: Vec<usize>,
    /// b = x y with x = X(i)[xr], y = Y(i)[yr], when such a decomposition exists.
    pub cell: Vec<Option<(usize, usize, usize)>>,
}

/// Declarative description of heredity data, in basis indices.
#[derive(Clone, Debug)]
pub struct HeredityDecl {
    pub colors: usize,
    /// Pairs (i, j) meaning i < j.
    pub order: Vec<(usize, usize)>,
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
    pub e: Vec<usize>,
    pub a_basis: Vec<usize>,
    pub tau: Option<Vec<usize>>,
}

fn vertex_of(alg: &Superalgebra, e: &[usize], b: usize, left: bool) -> Result<usize> {
    let mut found = None;
    for (j, &ej) in e.iter().enumerate() {
        let p = if left {
            alg.mul_basis(ej, b)
        } else {
            alg.mul_basis(b, ej)
        };
        if p == [(b, 1)] {
            if found.is_some() {
                return Err(Error::Invalid(format!(
                    "{} is absorbed by two idempotents",
                    alg.labels[b]
                )));
            }
            found = Some(j);
        } else if !p.is_empty() {
            return Err(Error::Invalid(format!(
                "e_{j} {} is neither the element nor zero",
                alg.labels[b]
            )));
        }
    }
    found.ok_or_else(|| {
        Error::Invalid(format!(
            "{} is not absorbed by any initial idempotent on the {}",
            alg.labels[b],
            if left { "left" } else { "right" }
        ))
    })
}

impl BasedAlgebra {
    /// Validate and assemble. The natural order 0 < 1 < ... must refine the poset, every basis
    /// element must be absorbed by exactly one e_j on each side (so 1 = Σ e_j), and X(i), Y(i)
    /// are reordered into the fixed alphabet order.
    pub fn new(name: &str, alg: Superalgebra, decl: HeredityDecl) -> Result<Self> {
        let dim = alg.dim();
        let colors = decl.colors;
        if decl.x.len() != colors || decl.y.len() != colors || decl.e.len() != colors {
            return Err(Error::SizeMismatch(
                "heredity data length differs from |I|".into(),
            ));
        }
        let check = |b: usize| -> Result<()> {
            if b >= dim {
                Err(Error::Invalid(format!("basis index {b} out of range")))
            } else {
                Ok(())
            }
        };
        for &b in decl
            .e
            .iter()
            .chain(decl.x.iter().flatten())
            .chain(decl.y.iter().flatten())
            .chain(&decl.a_basis)
        {
            check(b)?;
        }
        for (i, &ei) in decl.e.iter().enumerate() {
            for (j, &ej) in decl.e.iter().enumerate() {
                let want: Combo = if i == j { vec![(ei, 1)] } else { vec![] };
                if alg.mul_basis(ei, ej) != want.as_slice() {
                    return Err(Error::Invalid(
                        "initial idempotents are not orthogonal idempotents".into(),
                    ));
                }
            }
            if alg.degree[ei] != 0 || alg.parity[ei] != 0 {
                return Err(Error::Invalid(
                    "initial idempotents must be even of degree 0".into(),
                ));
            }
        }
        let mut less = vec![vec![false; colors]; colors];
        for &(i, j) in &decl.order {
            if i >= colors || j >= colors || i >= j {
                return Err(Error::Invalid(format!(
                    "order pair ({i}, {j}) must satisfy i < j so that the natural order refines the poset"
                )));
            }
            less[i][j] = true;
        }
        for k in 0..colors {
            for i in 0..colors {
                for j in 0..colors {
                    if less[i][k] && less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
        let mut left = Vec::with_capacity(dim);
        let mut right = Vec::with_capacity(dim);
        for b in 0..dim {
            left.push(vertex_of(&alg, &decl.e, b, true)?);
            right.push(vertex_of(&alg, &decl.e, b, false)?);
        }
        let mut in_a = vec![false; dim];
        for &b in &decl.a_basis {
            if alg.parity[b] != 0 {
                return Err(Error::Invalid(format!(
                    "{} in B_a must be even",
                    alg.labels[b]
                )));
            }
            in_a[b] = true;
        }
        let sort_list = |list: &[usize], i: usize, vert: &[usize]| -> Result<Vec<usize>> {
            let ei = decl.e[i];
            if !list.contains(&ei) {
                return Err(Error::Invalid(format!(
                    "e_{i} must belong to X({i}) and Y({i})"
                )));
            }
            let mut v = list.to_vec();
            v.sort_by_key(|&b| (b != ei, vert[b], alg.parity[b], b));
            v.dedup();
            Ok(v)
        };
        let x: Vec<Vec<usize>> = (0..colors)
            .map(|i| sort_list(&decl.x[i], i, &left))
            .collect::<Result<_>>()?;
        let y: Vec<Vec<usize>> = (0..colors)
            .map(|i| sort_list(&decl.y[i], i, &right))
            .collect::<Result<_>>()?;
        let mut cell = vec![None; dim];
        for i in 0..colors {
            for (xr, &xb) in x[i].iter().enumerate() {
                for (yr, &yb) in y[i].iter().enumerate() {
                    if let [(b, 1)] = alg.mul_basis(xb, yb) {
                        if cell[*b].is_none() {
                            cell[*b] = Some((i, xr, yr));
                        }
                    }
                }
            }
        }
        if let Some(t) = &decl.tau {
            if t.len() != dim || t.iter().any(|&b| b >= dim) {
                return Err(Error::Invalid(
                    "anti-involution must be a permutation of the basis".into(),
                ));
            }
        }
        Ok(BasedAlgebra {
            name: name.to_string(),
            alg,
            colors,
            less,
            x,
            y,
            e: decl.e,
            in_a,
            tau: decl.tau,
            left,
            right,
            cell,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
    pub fn is_odd(&self, b: usize) -> bool {
        self.alg.parity[b] == 1
    }
    /// Membership in B_c: even and not in B_a.
    pub fn in_c(&self, b: usize) -> bool {
        !self.is_odd(b) && !self.in_a[b]
    }
    /// The heredity cell of b, which exists once axiom (a) holds with xy basis elements.
    pub fn cell_of(&self, b: usize) -> Result<(usize, usize, usize)> {
        self.cell[b]
            .ok_or_else(|| Error::Invalid(format!("{} is not of the form xy", self.alg.labels[b])))
    }
    /// B(i) = {xy : x ∈ X(i), y ∈ Y(i)}.
    pub fn b_of(&self, i: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| matches!(self.cell[b], Some((j, _, _)) if j == i))
            .collect()
    }
    /// The basis element x y for x = X(i)[xr], y = Y(i)[yr].
    pub fn xy(&self, i: usize, xr: usize, yr: usize) -> Option<usize> {
        (0..self.dim()).find(|&b| self.cell[b] == Some((i, xr, yr)))
    }
    /// Colored alphabet for X: lists X(i), vertex of x is j with e_j x = x.
    pub fn x_alphabet(&self) -> Alphabet {
        self.alphabet(&self.x, &self.left)
    }
    /// Colored alphabet for Y: vertex of y is j with y e_j = y.
    pub fn y_alphabet(&self) -> Alphabet {
        self.alphabet(&self.y, &self.right)
    }
    fn alphabet(&self, lists: &[Vec<usize>], vertex: &[usize]) -> Alphabet {
        let dim = self.dim();
        let mut rank = vec![None; dim];
        let mut color_of = vec![None; dim];
        for (i, l) in lists.iter().enumerate() {
            for (k, &b) in l.iter().enumerate() {
                rank[b] = Some(k as u16);
                color_of[b] = Some(i);
            }
        }
        Alphabet {
            lists: lists.to_vec(),
            rank,
            color_of,
            parity: self.alg.parity.clone(),
            degree: self.alg.degree.clone(),
            vertex: vertex.iter().map(|&v| Some(v)).collect(),
            initial: self.e.clone(),
        }
    }
    /// j > i in the poset.
    pub fn greater(&self, j: usize, i: usize) -> bool {
        self.less[i][j]
    }

    /// Input for the generic verifier with X, Y given as basis vectors.
    pub fn heredity_input(&self) -> HeredityInput {
        let unit = |b: usize| -> Vector { vec![(b, BigInt::one())] };
        HeredityInput {
            labels: self.colors,
            greater: (0..self.colors)
                .map(|j| (0..self.colors).map(|i| self.greater(j, i)).collect())
                .collect(),
            x: self
                .x
                .iter()
                .map(|l| l.iter().map(|&b| unit(b)).collect())
                .collect(),
            y: self
                .y
                .iter()
                .map(|l| l.iter().map(|&b| unit(b)).collect())
                .collect(),
            e: self.e.clone(),
            names: (0..self.colors).map(|i| i.to_string()).collect(),
        }
    }

    /// Full verification: associativity, heredity axioms, xy basis elements, conformity and τ.
    pub fn verify(&self) -> (Report, Option<(HeredityBasis, Tables)>) {
        let mut rep = Report::default();
        rep.push(
            "associativity of κ",
            self.alg.associativity_witness().map(|(a, b, c)| {
                format!(
                    "({}, {}, {})",
                    self.alg.labels[a], self.alg.labels[b], self.alg.labels[c]
                )
            }),
        );
        let (hr, extra) = heredity::verify(self, &self.heredity_input());
        rep.extend("", hr);
        let missing = (0..self.dim()).find(|&b| self.cell[b].is_none());
        rep.push(
            "each basis element is a product xy",
            missing.map(|b| format!("{} has no decomposition xy", self.alg.labels[b])),
        );
        rep.push("conformity with the subalgebra", self.conformity_witness());
        if self.tau.is_some() {
            rep.push("anti-involution", self.tau_witness());
            rep.push("anti-involution is standard", self.tau_standard_witness());
        }
        (rep, extra)
    }

    fn conformity_witness(&self) -> Option<String> {
        let a: Vec<usize> = (0..self.dim()).filter(|&b| self.in_a[b]).collect();
        for &p in &a {
            for &q in &a {
                if let Some((b, _)) = self
                    .alg
                    .mul_basis(p, q)
                    .iter()
                    .find(|(b, _)| !self.in_a[*b])
                {
                    return Some(format!(
                        "span B_a is not closed: {} appears in a product",
                        self.alg.labels[*b]
                    ));
                }
            }
        }
        let pos: BTreeMap<usize, usize> = a.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let products = a
            .iter()
            .flat_map(|&p| a.iter().map(move |&q| (p, q)))
            .map(|(p, q)| {
                let out: Combo = self
                    .alg
                    .mul_basis(p, q)
                    .iter()
                    .map(|(b, v)| (pos[b], *v))
                    .collect();
                (pos[&p], pos[&q], out)
            })
            .collect();
        let sub = Superalgebra::new(
            a.iter().map(|&b| self.alg.labels[b].clone()).collect(),
            a.iter().map(|&b| self.alg.degree[b]).collect(),
            a.iter().map(|&b| self.alg.parity[b]).collect(),
            products,
        );
        let Ok(sub) = sub else {
            return Some("subalgebra is not graded".into());
        };
        let mut even_x = Vec::new();
        let mut even_y = Vec::new();
        for i in 0..self.colors {
            let mut xs = Vec::new();
            for &b in self.x[i].iter().filter(|&&b| !self.is_odd(b)) {
                match pos.get(&b) {
                    Some(&k) => xs.push(vec![(k, BigInt::one())]),
                    None => {
                        return Some(format!(
                            "even element {} of X({i}) is not in B_a",
                            self.alg.labels[b]
                        ))
                    }
                }
            }
            let mut ys = Vec::new();
            for &b in self.y[i].iter().filter(|&&b| !self.is_odd(b)) {
                match pos.get(&b) {
                    Some(&k) => ys.push(vec![(k, BigInt::one())]),
                    None => {
                        return Some(format!(
                            "even element {} of Y({i}) is not in B_a",
                            self.alg.labels[b]
                        ))
                    }
                }
            }
            even_x.push(xs);
            even_y.push(ys);
        }
        let input = HeredityInput {
            labels: self.colors,
            greater: (0..self.colors)
                .map(|j| (0..self.colors).map(|i| self.greater(j, i)).collect())
                .collect(),
            x: even_x,
            y: even_y,
            e: self.e.iter().map(|b| pos[b]).collect(),
            names: (0..self.colors).map(|i| i.to_string()).collect(),
        };
        let (r, _) = heredity::verify(&SubAlg(&sub), &input);
        r.first_failure()
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
    }

    fn tau_witness(&self) -> Option<String> {
        let t = self.tau.as_ref()?;
        for b in 0..self.dim() {
            if t[t[b]] != b {
                return Some(format!("τ² != id at {}", self.alg.labels[b]));
            }
            if self.alg.degree[t[b]] != self.alg.degree[b]
                || self.alg.parity[t[b]] != self.alg.parity[b]
            {
                return Some(format!("τ is not homogeneous at {}", self.alg.labels[b]));
            }
        }
        for a in 0..self.dim() {
            for c in 0..self.dim() {
                let lhs: Combo = self
                    .alg
                    .mul_basis(a, c)
                    .iter()
                    .map(|(b, v)| (t[*b], *v))
                    .collect();
                let mut lhs = lhs;
                lhs.sort();
                let rhs = self.alg.mul_basis(t[c], t[a]).to_vec();
                if lhs != rhs {
                    return Some(format!(
                        "τ(ac) != τ(c)τ(a) for ({}, {})",
                        self.alg.labels[a], self.alg.labels[c]
                    ));
                }
            }
        }
        None
    }

    fn tau_standard_witness(&self) -> Option<String> {
        let t = self.tau.as_ref()?;
        for i in 0..self.colors {
            if t[self.e[i]] != self.e[i] {
                return Some(format!("τ(e_{i}) != e_{i}"));
            }
            if self.x[i].len() != self.y[i].len() {
                return Some(format!("|X({i})| != |Y({i})|"));
            }
            for (k, &xb) in self.x[i].iter().enumerate() {
                if t[xb] != self.y[i][k] {
                    return Some(format!(
                        "τ({}) is not the matching element of Y({i})",
                        self.alg.labels[xb]
                    ));
                }
            }
        }
        None
    }

    /// A^{>i}-membership test helper: labels strictly above i.
    pub fn above(&self, i: usize) -> Vec<usize> {
        (0..self.colors).filter(|&j| self.greater(j, i)).collect()
    }
}

struct SubAlg<'a>(&'a Superalgebra);

impl BasisAlgebra for SubAlg<'_> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn basis_mul(&self, a: usize, c: usize) -> Vector {
        self.0
            .mul_basis(a, c)
            .iter()
            .map(|(b, v)| (*b, BigInt::from(*v)))
            .collect()
    }
    fn grading(&self, b: usize) -> (i64, u8) {
        (self.0.degree[b], self.0.parity[b])
    }
    fn basis_name(&self, b: usize) -> String {
        self.0.labels[b].clone()
    }
}

impl BasisAlgebra for BasedAlgebra {
    fn dim(&self) -> usize {
        self.alg.dim()
    }
    fn basis_mul(&self, a: usize, c: usize) -> Vector {
        self.alg
            .mul_basis(a, c)
            .iter()
            .map(|(b, v)| (*b, BigInt::from(*v)))
            .collect()
    }
    fn grading(&self, b: usize) -> (i64, u8) {
        (self.alg.degree[b], self.alg.parity[b])
    }
    fn left_key(&self, b: usize) -> usize {
        self.left[b]
    }
    fn right_key(&self, b: usize) -> usize {
        self.right[b]
    }
    fn basis_name(&self, b: usize) -> String {
        self.alg.labels[b].clone()
    }
}

/// Label of the arrow a_{i,j}.
pub fn arrow_label(i: usize, j: usize) -> String {
    format!("a{i}_{j}")
}

/// The extended zigzag algebra Z with ℓ ≥ 1 and its heredity data; the subalgebra is 𝔷 = span{e_i}.
///
/// Basis order: e_0..e_ℓ, then a_{j,j+1}, a_{j+1,j} for j ascending, then c_0..c_{ℓ-1}.
pub fn zigzag(l: usize) -> Result<BasedAlgebra> {
    Ok(zigzag_with(l, false)?.0)
}

/// Zigzag presentation; `drop_last_relation` keeps a_{ℓ,ℓ-1} a_{ℓ-1,ℓ} as a new basis
/// element c'_ℓ (used to exercise verification failures).
pub fn zigzag_with(l: usize, drop_last_relation: bool) -> Result<(BasedAlgebra, Vec<usize>)> {
    if l == 0 {
        return Err(Error::Invalid(
            "the extended zigzag algebra needs ℓ ≥ 1".into(),
        ));
    }
    let colors = l + 1;
    let mut labels = Vec::new();
    let mut degree = Vec::new();
    let mut parity = Vec::new();
    for i in 0..colors {
        labels.push(format!("e{i}"));
        degree.push(0);
        parity.push(0);
    }
    let up = |j: usize| colors + 2 * j;
    let down = |j: usize| colors + 2 * j + 1;
    for j in 0..l {
        labels.push(arrow_label(j, j + 1));
        labels.push(arrow_label(j + 1, j));
        degree.extend([1, 1]);
        parity.extend([1, 1]);
    }
    let c = |j: usize| colors + 2 * l + j;
    for j in 0..l {
        labels.push(format!("c{j}"));
        degree.push(2);
        parity.push(0);
    }
    let extra = if drop_last_relation {
        labels.push(format!("c{l}'"));
        degree.push(2);
        parity.push(0);
        Some(labels.len() - 1)
    } else {
        None
    };
    // Each basis element as a path: (source, target, kind).
    let dim = labels.len();
    let mut src = vec![0; dim];
    let mut tgt = vec![0; dim];
    for i in 0..colors {
        src[i] = i;
        tgt[i] = i;
    }
    for j in 0..l {
        src[up(j)] = j;
        tgt[up(j)] = j + 1;
        src[down(j)] = j + 1;
        tgt[down(j)] = j;
        src[c(j)] = j;
        tgt[c(j)] = j;
    }
    if let Some(x) = extra {
        src[x] = l;
        tgt[x] = l;
    }
    // Cycle at vertex v: c_v for v < ℓ, the extra element (or zero) at v = ℓ.
    let cycle_at = |v: usize| -> Option<usize> {
        if v < l {
            Some(c(v))
        } else {
            extra
        }
    };
    let mut products = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            if tgt[a] != src[b] {
                continue;
            }
            let out: Combo = if a < colors {
                vec![(b, 1)]
            } else if b < colors {
                vec![(a, 1)]
            } else if degree[a] == 1 && degree[b] == 1 {
                // Two arrows composing to a cycle at src[a].
                if src[a] == tgt[b] {
                    let v = src[a];
                    let is_up_first = tgt[a] == v + 1;
                    if is_up_first {
                        vec![(c(v), 1)]
                    } else {
                        match cycle_at(v) {
                            Some(x) => vec![(x, 1)],
                            None => vec![],
                        }
                    }
                } else {
                    vec![]
                }
            } else {
                vec![]
            };
            if !out.is_empty() {
                products.push((a, b, out));
            }
        }
    }
    let alg = Superalgebra::new(labels, degree, parity, products)?;
    let mut x = vec![vec![0]];
    let mut y = vec![vec![0]];
    for i in 1..colors {
        x.push(vec![i, up(i - 1)]);
        y.push(vec![i, down(i - 1)]);
    }
    let mut tau: Vec<usize> = (0..dim).collect();
    for j in 0..l {
        tau[up(j)] = down(j);
        tau[down(j)] = up(j);
    }
    let decl = HeredityDecl {
        colors,
        order: (1..colors).map(|i| (i - 1, i)).collect(),
        x,
        y,
        e: (0..colors).collect(),
        a_basis: (0..colors).collect(),
        tau: Some(tau),
    };
    let name = if drop_last_relation {
        format!("zigzag-unreduced:{l}")
    } else {
        format!("zigzag:{l}")
    };
    let b = BasedAlgebra::new(&name, alg, decl)?;
    Ok((b, extra.into_iter().collect()))
}

/// The ground ring as a based algebra: I = {0}, X = Y = {1}.
pub fn trivial() -> BasedAlgebra {
    semisimple(1).expect("the trivial algebra is valid")
}

/// k^m = k ⊕ ... ⊕ k with discrete poset, X(i) = Y(i) = {e_i} and 𝔞 = A.
pub fn semisimple(m: usize) -> Result<BasedAlgebra> {
    if m == 0 {
        return Err(Error::Invalid("k^m needs m ≥ 1".into()));
    }
    let labels = if m == 1 {
        vec!["1".to_string()]
    } else {
        (0..m).map(|i| format!("e{i}")).collect()
    };
    let products = (0..m).map(|i| (i, i, vec![(i, 1)])).collect();
    let alg = Superalgebra::new(labels, vec![0; m], vec![0; m], products)?;
    let decl = HeredityDecl {
        colors: m,
        order: vec![],
        x: (0..m).map(|i| vec![i]).collect(),
        y: (0..m).map(|i| vec![i]).collect(),
        e: (0..m).collect(),
        a_basis: (0..m).collect(),
        tau: Some((0..m).collect()),
    };
    let name = if m == 1 {
        "trivial".to_string()
    } else {
        format!("semisimple:{m}")
    };
    BasedAlgebra::new(&name, alg, decl)
}

/// Standard module Δ(i) of the base algebra with its opposite and pairing.
#[derive(Clone, Debug)]
pub struct StandardModuleBase {
    pub color: usize,
    /// Basis v_x for x ∈ X(i) (basis indices of A).
    pub basis: Vec<usize>,
    /// action[a][x'][x] = l^x_{x'}(a): column x is a·v_x.
    pub action: Vec<Vec<Vec<BigInt>>>,
    /// Right action on Δ^op(i): ract[a][y][y'] = r^y_{y'}(a).
    pub ract: Vec<Vec<Vec<BigInt>>>,
    pub opposite_basis: Vec<usize>,
    /// pairing[y][x] = (v_x, w_y) = f_i(y, x).
    pub pairing: Vec<Vec<BigInt>>,
}

impl BasedAlgebra {
    /// Δ(i) from the verified heredity tables.
    pub fn standard_module(&self, i: usize) -> Result<StandardModuleBase> {
        let (rep, extra) = heredity::verify(self, &self.heredity_input());
        let Some((_, tables)) = extra.filter(|_| rep.passed()) else {
            return Err(Error::Invalid("heredity data does not verify".into()));
        };
        let nx = self.x[i].len();
        let ny = self.y[i].len();
        let mut action = vec![vec![vec![BigInt::zero(); nx]; nx]; self.dim()];
        let mut ract = vec![vec![vec![BigInt::zero(); ny]; ny]; self.dim()];
        for a in 0..self.dim() {
            for x in 0..nx {
                if let Some(cs) = tables.l.get(&(a, i, x)) {
                    for (x2, v) in cs {
                        action[a][*x2][x] = v.clone();
                    }
                }
            }
            for y in 0..ny {
                if let Some(cs) = tables.r.get(&(a, i, y)) {
                    for (y2, v) in cs {
                        ract[a][y][*y2] = v.clone();
                    }
                }
            }
        }
        Ok(StandardModuleBase {
            color: i,
            basis: self.x[i].clone(),
            action,
            ract,
            opposite_basis: self.y[i].clone(),
            pairing: tables.f[i].clone(),
        })
    }
}

/// Result of truncating heredity data by an idempotent e = Σ_{j ∈ E} e_j.
#[derive(Clone, Debug)]
pub struct Truncation {
    /// E ⊆ I.
    pub idempotents: Vec<usize>,
    /// Basis of eAe: basis elements b with e b e = b.
    pub basis: Vec<usize>,
    pub xbar: Vec<Vec<usize>>,
    pub ybar: Vec<Vec<usize>>,
    pub adapted: bool,
    pub strongly_adapted: bool,
    /// Ī: labels with X̄(i) and Ȳ(i) nonempty.
    pub ibar: Vec<usize>,
    /// Ī′: labels i with eL(i) != 0.
    pub ibar_prime: Vec<usize>,
}

impl BasedAlgebra {
    /// Truncate by e = Σ_{j ∈ E} e_j. Ī′ is computed over the field of characteristic `p`
    /// (0 for Q) by testing whether some y x with x ∈ X̄(i), y ∈ Ȳ(i) survives modulo A^{>i}.
    pub fn truncate(&self, idempotents: &[usize], p: u64) -> Result<Truncation> {
        let mut es = idempotents.to_vec();
        es.sort_unstable();
        es.dedup();
        if es.iter().any(|&j| j >= self.colors) {
            return Err(Error::Invalid(
                "truncation idempotent index out of range".into(),
            ));
        }
        let inside = |v: usize| es.contains(&v);
        let basis: Vec<usize> = (0..self.dim())
            .filter(|&b| inside(self.left[b]) && inside(self.right[b]))
            .collect();
        // e x ∈ {x, 0} always holds for sums of e_j; X̄(i) = {x : e x = x}.
        let xbar: Vec<Vec<usize>> = self
            .x
            .iter()
            .map(|l| {
                l.iter()
                    .copied()
                    .filter(|&b| inside(self.left[b]))
                    .collect()
            })
            .collect();
        let ybar: Vec<Vec<usize>> = self
            .y
            .iter()
            .map(|l| {
                l.iter()
                    .copied()
                    .filter(|&b| inside(self.right[b]))
                    .collect()
            })
            .collect();
        let ibar: Vec<usize> = (0..self.colors)
            .filter(|&i| !xbar[i].is_empty() && !ybar[i].is_empty())
            .collect();
        let strongly = ibar.iter().all(|&i| inside(i));
        let (rep, extra) = heredity::verify(self, &self.heredity_input());
        let Some((hb, _)) = extra.filter(|_| rep.passed()) else {
            return Err(Error::Invalid("heredity data does not verify".into()));
        };
        let mut ibar_prime = Vec::new();
        for &i in &ibar {
            let mut survives = false;
            for &xb in &xbar[i] {
                for &yb in &ybar[i] {
                    let prod: Vector = self
                        .alg
                        .mul_basis(yb, xb)
                        .iter()
                        .map(|(b, v)| (*b, BigInt::from(*v)))
                        .collect();
                    for (k, v) in hb.coords(&prod) {
                        let j = hb.cells[k].0;
                        if !self.greater(j, i) {
                            let nonzero = if p == 0 {
                                !v.is_zero()
                            } else {
                                crate::linalg::reduce_mod(&v, p) != 0
                            };
                            survives |= nonzero;
                        }
                    }
                }
            }
            if survives {
                ibar_prime.push(i);
            }
        }
        Ok(Truncation {
            idempotents: es,
            basis,
            xbar,
            ybar,
            adapted: true,
            strongly_adapted: strongly,
            ibar,
            ibar_prime,
        })
    }
}
