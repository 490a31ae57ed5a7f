//! Generic verification of heredity data for an algebra given by a basis and a product.
//!
//! Works for a base algebra (where X and Y consist of basis elements) and equally for a
//! Schur algebra (where X and Y are codeterminant halves expressed in the η basis).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{unimodular_inverse, InverseError, SparseRow};

/// Sparse vector in basis coordinates.
pub type Vector = Vec<(usize, BigInt)>;

/// An algebra with a distinguished Z-basis.
pub trait BasisAlgebra {
    fn dim(&self) -> usize;
    /// Product of two basis elements in basis coordinates.
    fn basis_mul(&self, a: usize, c: usize) -> Vector;
    /// (degree, parity) of a basis element.
    fn grading(&self, b: usize) -> (i64, u8);
    /// Keys with basis_mul(a, c) = 0 unless right_key(a) == left_key(c).
    fn left_key(&self, _b: usize) -> usize {
        0
    }
    fn right_key(&self, _b: usize) -> usize {
        0
    }
    /// Human-readable name of a basis element for witnesses.
    fn basis_name(&self, b: usize) -> String {
        format!("b{b}")
    }
}

/// Accumulate `c * v` into a map.
pub fn axpy(acc: &mut BTreeMap<usize, BigInt>, c: &BigInt, v: &Vector) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(BigInt::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn to_vec(m: BTreeMap<usize, BigInt>) -> Vector {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Product of two vectors.
pub fn mul_vectors<A: BasisAlgebra + ?Sized>(alg: &A, u: &Vector, v: &Vector) -> Vector {
    let mut acc = BTreeMap::new();
    for (a, x) in u {
        for (c, y) in v {
            if alg.right_key(*a) != alg.left_key(*c) {
                continue;
            }
            let p = alg.basis_mul(*a, *c);
            axpy(&mut acc, &(x * y), &p);
        }
    }
    to_vec(acc)
}

/// Candidate heredity data: X/Y elements and initial idempotents over a poset of labels.
#[derive(Clone, Debug)]
pub struct HeredityInput {
    pub labels: usize,
    /// `greater[j][i]` iff j > i in the poset.
    pub greater: Vec<Vec<bool>>,
    pub x: Vec<Vec<Vector>>,
    pub y: Vec<Vec<Vector>>,
    /// Basis index of e_i; it must also be X(i)[0] and Y(i)[0].
    pub e: Vec<usize>,
    pub names: Vec<String>,
}

/// Position of a heredity basis element xy: (label, x index, y index).
pub type Cell = (usize, usize, usize);

/// The basis {xy} together with blockwise inverse change-of-basis matrices.
#[derive(Clone, Debug)]
pub struct HeredityBasis {
    pub cells: Vec<Cell>,
    /// Realization of each cell in the original basis.
    pub realization: Vec<Vector>,
    /// Inverse rows indexed by original basis element: b = Σ inv[b][k] · cell_k.
    inverse: Vec<Vector>,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Outcome of a heredity verification.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
    pub fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: witness.is_none(),
            witness,
        });
    }
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }
}

/// Structure tables extracted during verification.
#[derive(Clone, Debug, Default)]
pub struct Tables {
    /// l[(a, i, x)] = coefficients l^x_{x'}(a) as (x' index, value).
    pub l: BTreeMap<(usize, usize, usize), Vec<(usize, BigInt)>>,
    /// r[(a, i, y)] = coefficients r^y_{y'}(a).
    pub r: BTreeMap<(usize, usize, usize), Vec<(usize, BigInt)>>,
    /// f[i][y][x] = f_i(y, x).
    pub f: Vec<Vec<Vec<BigInt>>>,
}

fn keys_of<A: BasisAlgebra + ?Sized>(alg: &A, v: &Vector) -> Option<(usize, usize)> {
    let (b0, _) = v.first()?;
    let k = (alg.left_key(*b0), alg.right_key(*b0));
    v.iter()
        .all(|(b, _)| (alg.left_key(*b), alg.right_key(*b)) == k)
        .then_some(k)
}

fn grading_of<A: BasisAlgebra + ?Sized>(alg: &A, v: &Vector) -> Option<(i64, u8)> {
    let (b0, _) = v.first()?;
    let g = alg.grading(*b0);
    v.iter().all(|(b, _)| alg.grading(*b) == g).then_some(g)
}

impl HeredityBasis {
    /// Build the {xy} basis; Err carries an axiom (a) witness.
    pub fn new<A: BasisAlgebra + ?Sized>(alg: &A, data: &HeredityInput) -> Result<Self, String> {
        let mut cells = Vec::new();
        let mut realization = Vec::new();
        for i in 0..data.labels {
            for (xi, x) in data.x[i].iter().enumerate() {
                for (yi, y) in data.y[i].iter().enumerate() {
                    cells.push((i, xi, yi));
                    realization.push(mul_vectors(alg, x, y));
                }
            }
        }
        if cells.len() != alg.dim() {
            return Err(format!(
                "{} products xy for an algebra of dimension {}",
                cells.len(),
                alg.dim()
            ));
        }
        let mut blocks: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (k, v) in realization.iter().enumerate() {
            let key = keys_of(alg, v).ok_or_else(|| {
                let (i, xi, yi) = cells[k];
                format!(
                    "product xy for label {} (x#{xi}, y#{yi}) is zero or not block-homogeneous",
                    data.names[i]
                )
            })?;
            blocks.entry(key).or_default().0.push(k);
        }
        for b in 0..alg.dim() {
            blocks
                .entry((alg.left_key(b), alg.right_key(b)))
                .or_default()
                .1
                .push(b);
        }
        let mut inverse = vec![Vec::new(); alg.dim()];
        for (key, (ks, bs)) in blocks {
            if ks.len() != bs.len() {
                return Err(format!(
                    "block {key:?}: {} products xy against {} basis elements",
                    ks.len(),
                    bs.len()
                ));
            }
            let pos: BTreeMap<usize, usize> = bs.iter().enumerate().map(|(p, &b)| (b, p)).collect();
            let rows: Vec<SparseRow> = ks
                .iter()
                .map(|&k| {
                    realization[k]
                        .iter()
                        .map(|(b, v)| (pos[b], v.clone()))
                        .collect()
                })
                .collect();
            let inv = unimodular_inverse(&rows).map_err(|e| match e {
                InverseError::Singular => {
                    format!("block {key:?}: products xy are linearly dependent")
                }
                InverseError::NotUnimodular => {
                    format!("block {key:?}: change of basis is not invertible over Z")
                }
            })?;
            for (p, row) in inv.into_iter().enumerate() {
                inverse[bs[p]] = row.into_iter().map(|(j, v)| (ks[j], v)).collect();
            }
        }
        Ok(HeredityBasis {
            cells,
            realization,
            inverse,
        })
    }

    /// Coordinates of a vector in the {xy} basis, as (cell index, coefficient).
    pub fn coords(&self, v: &Vector) -> Vector {
        let mut acc = BTreeMap::new();
        for (b, c) in v {
            axpy(&mut acc, c, &self.inverse[*b]);
        }
        to_vec(acc)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Reduce coordinates modulo A^{>i}: keep cells whose label is not strictly above i.
/// Returns Err with the offending cell if a label incomparable/below appears outside `allowed`.
fn modulo_above(
    basis: &HeredityBasis,
    data: &HeredityInput,
    coords: &Vector,
    i: usize,
) -> Vec<(Cell, BigInt)> {
    coords
        .iter()
        .filter(|(k, _)| {
            let j = basis.cells[*k].0;
            !data.greater[j][i]
        })
        .map(|(k, v)| (basis.cells[*k], v.clone()))
        .collect()
}

/// Verify heredity data: axioms (a) to (c), the f table and homogeneity.
pub fn verify<A: BasisAlgebra + ?Sized>(
    alg: &A,
    data: &HeredityInput,
) -> (Report, Option<(HeredityBasis, Tables)>) {
    let mut rep = Report::default();
    // Shapes and homogeneity.
    let mut hom = None;
    for i in 0..data.labels {
        if data.x[i].is_empty() || data.y[i].is_empty() {
            hom = Some(format!("X or Y empty for label {}", data.names[i]));
            break;
        }
        if data.x[i][0] != vec![(data.e[i], BigInt::one())]
            || data.y[i][0] != vec![(data.e[i], BigInt::one())]
        {
            hom = Some(format!(
                "e_i is not the first element of X(i) and Y(i) for {}",
                data.names[i]
            ));
            break;
        }
        for v in data.x[i].iter().chain(&data.y[i]) {
            if grading_of(alg, v).is_none() || keys_of(alg, v).is_none() {
                hom = Some(format!(
                    "an X/Y element of label {} is zero or inhomogeneous",
                    data.names[i]
                ));
                break;
            }
        }
    }
    rep.push("homogeneity", hom);
    if !rep.passed() {
        return (rep, None);
    }

    let basis = match HeredityBasis::new(alg, data) {
        Ok(b) => {
            rep.push("axiom (a): {xy} is a basis", None);
            b
        }
        Err(w) => {
            rep.push("axiom (a): {xy} is a basis", Some(w));
            return (rep, None);
        }
    };

    // Axiom (c): idempotent absorption.
    let mut wc = None;
    'c: for i in 0..data.labels {
        let ei = vec![(data.e[i], BigInt::one())];
        for (xi, x) in data.x[i].iter().enumerate() {
            if mul_vectors(alg, x, &ei) != *x {
                wc = Some(format!("x e_i != x for label {} x#{xi}", data.names[i]));
                break 'c;
            }
            let ex = mul_vectors(alg, &ei, x);
            let want = if xi == 0 { x.clone() } else { Vec::new() };
            if ex != want {
                wc = Some(format!("e_i x != δ x for label {} x#{xi}", data.names[i]));
                break 'c;
            }
            for j in 0..data.labels {
                let ej = vec![(data.e[j], BigInt::one())];
                let p = mul_vectors(alg, &ej, x);
                if !p.is_empty() && p != *x {
                    wc = Some(format!(
                        "e_j x not in {{x, 0}} for j = {}, label {} x#{xi}",
                        data.names[j], data.names[i]
                    ));
                    break 'c;
                }
            }
        }
        for (yi, y) in data.y[i].iter().enumerate() {
            if mul_vectors(alg, &ei, y) != *y {
                wc = Some(format!("e_i y != y for label {} y#{yi}", data.names[i]));
                break 'c;
            }
            let ye = mul_vectors(alg, y, &ei);
            let want = if yi == 0 { y.clone() } else { Vec::new() };
            if ye != want {
                wc = Some(format!("y e_i != δ y for label {} y#{yi}", data.names[i]));
                break 'c;
            }
            for j in 0..data.labels {
                let ej = vec![(data.e[j], BigInt::one())];
                let p = mul_vectors(alg, y, &ej);
                if !p.is_empty() && p != *y {
                    wc = Some(format!(
                        "y e_j not in {{y, 0}} for j = {}, label {} y#{yi}",
                        data.names[j], data.names[i]
                    ));
                    break 'c;
                }
            }
        }
    }
    rep.push("axiom (c): idempotent absorption", wc);

    // Axiom (b): left action on X and right action on Y modulo A^{>i}.
    let mut tables = Tables::default();
    let mut wb = None;
    'b: for i in 0..data.labels {
        for (xi, x) in data.x[i].iter().enumerate() {
            let (lk, _) = keys_of(alg, x).unwrap();
            for a in 0..alg.dim() {
                if alg.right_key(a) != lk {
                    continue;
                }
                let prod = mul_vectors(alg, &vec![(a, BigInt::one())], x);
                let red = modulo_above(&basis, data, &basis.coords(&prod), i);
                let mut coeffs = Vec::new();
                for ((j, x2, y2), v) in red {
                    if j != i || y2 != 0 {
                        wb = Some(format!(
                            "{} · x#{xi} of label {} has a component outside span X({}) mod A^>i",
                            alg.basis_name(a),
                            data.names[i],
                            data.names[i]
                        ));
                        break 'b;
                    }
                    coeffs.push((x2, v));
                }
                if !coeffs.is_empty() {
                    tables.l.insert((a, i, xi), coeffs);
                }
            }
        }
        for (yi, y) in data.y[i].iter().enumerate() {
            let (_, rk) = keys_of(alg, y).unwrap();
            for a in 0..alg.dim() {
                if alg.left_key(a) != rk {
                    continue;
                }
                let prod = mul_vectors(alg, y, &vec![(a, BigInt::one())]);
                let red = modulo_above(&basis, data, &basis.coords(&prod), i);
                let mut coeffs = Vec::new();
                for ((j, x2, y2), v) in red {
                    if j != i || x2 != 0 {
                        wb = Some(format!(
                            "y#{yi} of label {} · {} has a component outside span Y mod A^>i",
                            data.names[i],
                            alg.basis_name(a)
                        ));
                        break 'b;
                    }
                    coeffs.push((y2, v));
                }
                if !coeffs.is_empty() {
                    tables.r.insert((a, i, yi), coeffs);
                }
            }
        }
    }
    rep.push("axiom (b): action modulo higher ideals", wb);

    // Pairing table f_i(y, x).
    let mut wf = None;
    tables.f = (0..data.labels)
        .map(|i| vec![vec![BigInt::zero(); data.x[i].len()]; data.y[i].len()])
        .collect();
    'f: for i in 0..data.labels {
        for (yi, y) in data.y[i].iter().enumerate() {
            for (xi, x) in data.x[i].iter().enumerate() {
                let prod = mul_vectors(alg, y, x);
                let red = modulo_above(&basis, data, &basis.coords(&prod), i);
                for ((j, x2, y2), v) in red {
                    if (j, x2, y2) != (i, 0, 0) {
                        wf = Some(format!(
                            "y#{yi} x#{xi} of label {} is not a multiple of e_i mod A^>i",
                            data.names[i]
                        ));
                        break 'f;
                    }
                    tables.f[i][yi][xi] = v;
                }
                let f = &tables.f[i][yi][xi];
                if !f.is_zero() {
                    let (dx, px) = grading_of(alg, x).unwrap();
                    let (dy, py) = grading_of(alg, y).unwrap();
                    if dx + dy != 0 || px != py {
                        wf = Some(format!(
                            "f_i(y#{yi}, x#{xi}) != 0 although deg(x)deg(y) != 1 for {}",
                            data.names[i]
                        ));
                        break 'f;
                    }
                }
            }
        }
        if !tables.f[i][0][0].is_one() {
            wf = Some(format!("f_i(e_i, e_i) != 1 for {}", data.names[i]));
            break 'f;
        }
    }
    rep.push("pairing table f_i", wf);
    (rep, Some((basis, tables)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper triangular 2x2 matrices with I = {0 < 1}: e0 = E11, e1 = E22, u = E12.
    struct Tri2;
    impl BasisAlgebra for Tri2 {
        fn dim(&self) -> usize {
            3
        }
        fn basis_mul(&self, a: usize, c: usize) -> Vector {
            let one = BigInt::one();
            match (a, c) {
                (0, 0) => vec![(0, one)],
                (1, 1) => vec![(1, one)],
                (0, 2) => vec![(2, one)],
                (2, 1) => vec![(2, one)],
                _ => vec![],
            }
        }
        fn grading(&self, b: usize) -> (i64, u8) {
            if b == 2 {
                (1, 0)
            } else {
                (0, 0)
            }
        }
    }

    fn unit(b: usize) -> Vector {
        vec![(b, BigInt::one())]
    }

    #[test]
    fn upper_triangular_is_quasi_hereditary() {
        // Label 0 < 1; X(1) = {e1, u}, Y(1) = {e1}, X(0) = Y(0) = {e0}.
        let data = HeredityInput {
            labels: 2,
            greater: vec![vec![false, false], vec![true, false]],
            x: vec![vec![unit(0)], vec![unit(1), unit(2)]],
            y: vec![vec![unit(0)], vec![unit(1)]],
            e: vec![0, 1],
            names: vec!["0".into(), "1".into()],
        };
        let (rep, _) = verify(&Tri2, &data);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn wrong_order_fails() {
        // Reversing the order makes e0 * u = u land outside X(0) modulo nothing.
        let data = HeredityInput {
            labels: 2,
            greater: vec![vec![false, true], vec![false, false]],
            x: vec![vec![unit(0)], vec![unit(1), unit(2)]],
            y: vec![vec![unit(0)], vec![unit(1)]],
            e: vec![0, 1],
            names: vec!["0".into(), "1".into()],
        };
        let (rep, _) = verify(&Tri2, &data);
        assert!(!rep.passed());
    }
}
