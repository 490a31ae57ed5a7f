//! Straightening: expansion of elements of T in the standard codeterminant basis.
//!
//! Two backends are provided. [`Straightener`] follows the constructive recursion: locate the
//! smallest column violation, pass through a shape that is strictly larger in the lexicographic
//! order, multiply and recurse. [`LinearStraightener`] solves against the unitriangular
//! expansion of the standard codeterminants.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::heredity::HeredityBasis;
use crate::partition::{dominates, Multi};
use crate::schur::{add_to, canonicalize, single, Elem, Family, SchurAlgebra, Triple};
use crate::tableau::{cmp_words, Alphabet, Letter, Tableau};
use crate::tstructure::TStructure;

/// A codeterminant B^λ_{S,T}; the shape is `S.shape`.
pub type Key = (Tableau, Tableau);
/// A linear combination of codeterminants.
pub type Expansion = BTreeMap<Key, BigInt>;

fn add_scaled(acc: &mut Expansion, c: &BigInt, e: &Expansion) {
    for (k, v) in e {
        add_to(acc, k.clone(), &(c * v));
    }
}

/// L → L′: L > L′, or L = L′ with an even color.
fn arrow(alpha: &Alphabet, a: Letter, b: Letter) -> bool {
    match alpha.cmp(a, b) {
        Ordering::Greater => true,
        Ordering::Equal => !alpha.is_odd(a),
        Ordering::Less => false,
    }
}

/// Lexicographically smallest (row a, column b), 0-indexed, with S(a,b) → S(a+1,b).
fn violation(rows: &[Vec<Letter>], alpha: &Alphabet) -> Option<(usize, usize)> {
    for a in 0..rows.len().saturating_sub(1) {
        for b in 0..rows[a + 1].len().min(rows[a].len()) {
            if arrow(alpha, rows[a][b], rows[a + 1][b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The composition λ with λ_+ strictly lexicographically above μ attached to a violation.
fn raised_shape(rows: &[Vec<Letter>], alpha: &Alphabet, a: usize, b: usize) -> Vec<usize> {
    let n = rows.len();
    let mu: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let mut e = vec![0usize; n];
    let mut f = vec![0usize; n];
    for t in 0..n {
        if t < a {
            e[t] = mu[t];
        } else if t == a {
            e[t] = b;
            f[t] = mu[t] - b;
        } else {
            let fprev = &rows[t - 1][e[t - 1]..];
            e[t] = rows[t]
                .iter()
                .take_while(|m| fprev.iter().all(|nn| arrow(alpha, *nn, **m)))
                .count();
            f[t] = mu[t] - e[t];
        }
    }
    let mut lam = mu.clone();
    for t in a..n {
        lam[t] = if b == 0 {
            if t == a {
                mu[a] + e.get(a + 1).copied().unwrap_or(0)
            } else {
                e.get(t + 1).copied().unwrap_or(0) + f[t]
            }
        } else {
            e[t] + if t > 0 { f[t - 1] } else { 0 }
        };
    }
    lam
}

/// Cut the reading word of component `i` into rows of lengths `lam`.
fn rechunk(t: &Tableau, i: usize, lam: &[usize]) -> Result<Tableau> {
    let word = t.component_word(i);
    let mut rows = t.rows.clone();
    let mut comp = Vec::with_capacity(lam.len());
    let mut k = 0;
    for &len in lam {
        comp.push(word[k..k + len].to_vec());
        k += len;
    }
    rows[i] = comp;
    let mut shape = t.shape.clone();
    shape.0[i] = lam.to_vec();
    Tableau::from_rows(shape, rows)
}

/// Whether the triple (λ, S′, T′) is ≥ (μ, S, T) componentwise in the straightening order.
pub fn is_above(fam: &Family, out: &Key, inp: &Key) -> bool {
    (0..fam.colors()).all(|i| {
        let (lo, li) = (out.0.shape.comp(i), inp.0.shape.comp(i));
        if lo != li {
            return dominates(lo, li);
        }
        cmp_words(&out.0.component_word(i), &inp.0.component_word(i), &fam.xa) != Ordering::Greater
            && cmp_words(&out.1.component_word(i), &inp.1.component_word(i), &fam.ya)
                != Ordering::Greater
    })
}

/// Recursive straightening with memoization.
pub struct Straightener<'a> {
    pub t: &'a SchurAlgebra,
    memo: BTreeMap<Key, Expansion>,
    active: BTreeSet<Key>,
}

impl<'a> Straightener<'a> {
    pub fn new(t: &'a SchurAlgebra) -> Result<Self> {
        if t.fam.n < t.d {
            return Err(Error::NeedNAtLeastD { n: t.fam.n, d: t.d });
        }
        Ok(Straightener {
            t,
            memo: BTreeMap::new(),
            active: BTreeSet::new(),
        })
    }

    fn fam(&self) -> &'a Family {
        &self.t.fam
    }

    /// The realization 𝒳_S 𝒴_T, zero if a row repeats an odd letter.
    pub fn realize(&self, s: &Tableau, t: &Tableau) -> Result<Elem> {
        let f = self.fam();
        if !s.is_valid(&f.xa) || !t.is_valid(&f.ya) {
            return Ok(Elem::new());
        }
        f.codeterminant(s, t)
    }

    /// Expand an element of T in standard codeterminants.
    pub fn straighten(&mut self, x: &Elem) -> Result<Expansion> {
        let mut out = Expansion::new();
        for (o, c) in x {
            let (s, t, sign) = self.fam().orbit_to_codet(o)?;
            let e = self.straighten_codet(&s, &t)?;
            add_scaled(&mut out, &(c * BigInt::from(sign)), &e);
        }
        Ok(out)
    }

    /// Expand B^λ_{S,T} for any shape λ and any S, T of that shape.
    pub fn straighten_codet(&mut self, s: &Tableau, t: &Tableau) -> Result<Expansion> {
        if s.shape != t.shape {
            return Err(Error::SizeMismatch(
                "codeterminant tableaux of different shapes".into(),
            ));
        }
        let f = self.fam();
        if !s.is_valid(&f.xa) || !t.is_valid(&f.ya) {
            return Ok(Expansion::new());
        }
        let (s2, t2) = normalize(f, s, t)?;
        if (&s2, &t2) != (s, t) {
            let b = self.realize(s, t)?;
            if b.is_empty() {
                return Ok(Expansion::new());
            }
            let b2 = self.realize(&s2, &t2)?;
            let sign = relative_sign(&b, &b2)?;
            let e = self.straighten_codet(&s2, &t2)?;
            let mut out = Expansion::new();
            add_scaled(&mut out, &BigInt::from(sign), &e);
            return Ok(out);
        }
        let key = (s.clone(), t.clone());
        if let Some(e) = self.memo.get(&key) {
            return Ok(e.clone());
        }
        if !self.active.insert(key.clone()) {
            return Err(Error::Internal(
                "straightening recursion is not well founded".into(),
            ));
        }
        let res = if s.is_standard(&f.xa) && t.is_standard(&f.ya) {
            Ok(single_key(key.clone()))
        } else if let Some(i) = (0..f.colors()).find(|&i| violation(&s.rows[i], &f.xa).is_some()) {
            self.x_step(s, t, i)
        } else {
            let i = (0..f.colors())
                .find(|&i| violation(&t.rows[i], &f.ya).is_some())
                .ok_or_else(|| {
                    Error::Internal("row-standard pair with no column violation".into())
                })?;
            self.y_step(s, t, i)
        };
        self.active.remove(&key);
        let e = res?;
        self.memo.insert(key, e.clone());
        Ok(e)
    }

    /// e-word ξ^{e}_{l^λ, l^μ}: component `i` maps the rows of `from` to those of `to`
    /// positionally, other components act as the identity on `base`.
    fn e_word(&self, base: &Multi, i: usize, from: &[usize], to: &[usize]) -> Result<Elem> {
        let f = self.fam();
        let mut w: Vec<Triple> = Vec::new();
        for (j, comp) in base.0.iter().enumerate() {
            let e = f.base.e[j];
            if j == i {
                let rows = |lens: &[usize]| {
                    lens.iter()
                        .enumerate()
                        .flat_map(|(r, &l)| core::iter::repeat_n(r + 1, l))
                        .collect::<Vec<_>>()
                };
                for (r, s) in rows(from).into_iter().zip(rows(to)) {
                    w.push(f.triple(e, r, s));
                }
            } else {
                for (r, &l) in comp.iter().enumerate() {
                    for _ in 0..l {
                        w.push(f.triple(e, r + 1, r + 1));
                    }
                }
            }
        }
        let (o, sign) = canonicalize(&w)?;
        Ok(single(o, sign))
    }

    fn x_step(&mut self, s: &Tableau, t: &Tableau, i: usize) -> Result<Expansion> {
        let f = self.fam();
        let (a, b) = violation(&s.rows[i], &f.xa).expect("violation");
        let mu = s.shape.comp(i).to_vec();
        let lam = raised_shape(&s.rows[i], &f.xa, a, b);
        let s_lam = rechunk(s, i, &lam)?;
        let p1 = f.x_elem(&s_lam)?;
        let p2 = self.e_word(&s.shape, i, &lam, &mu)?;
        let w = f.mul(&p1, &p2);
        let (lead, rest) = split_leading(w, |o| f.orbit_to_x_tableau(o, &s.shape), s)?;
        for (s2, _) in &rest {
            if cmp_words(&s2.component_word(i), &s.component_word(i), &f.xa) != Ordering::Less {
                return Err(Error::Internal(
                    "lower terms are not lexicographically smaller".into(),
                ));
            }
        }
        let v = f.mul(&p2, &f.y_elem(t)?);
        let mut out = Expansion::new();
        for (o, c) in v {
            let (t2, sg) = f.orbit_to_y_tableau(&o, &s_lam.shape)?;
            let e = self.straighten_codet(&s_lam, &t2)?;
            add_scaled(&mut out, &(&lead * c * BigInt::from(sg)), &e);
        }
        for (s2, c) in rest {
            let e = self.straighten_codet(&s2, t)?;
            add_scaled(&mut out, &(-&lead * c), &e);
        }
        Ok(out)
    }

    fn y_step(&mut self, s: &Tableau, t: &Tableau, i: usize) -> Result<Expansion> {
        let f = self.fam();
        let (a, b) = violation(&t.rows[i], &f.ya).expect("violation");
        let mu = t.shape.comp(i).to_vec();
        let nu = raised_shape(&t.rows[i], &f.ya, a, b);
        let t_nu = rechunk(t, i, &nu)?;
        let p1 = f.y_elem(&t_nu)?;
        let p2 = self.e_word(&t.shape, i, &mu, &nu)?;
        let w = f.mul(&p2, &p1);
        let (lead, rest) = split_leading(w, |o| f.orbit_to_y_tableau(o, &t.shape), t)?;
        for (t2, _) in &rest {
            if cmp_words(&t2.component_word(i), &t.component_word(i), &f.ya) != Ordering::Less {
                return Err(Error::Internal(
                    "lower terms are not lexicographically smaller".into(),
                ));
            }
        }
        let v = f.mul(&f.x_elem(s)?, &p2);
        let mut out = Expansion::new();
        for (o, c) in v {
            let (s2, sg) = f.orbit_to_x_tableau(&o, &t_nu.shape)?;
            let e = self.straighten_codet(&s2, &t_nu)?;
            add_scaled(&mut out, &(&lead * c * BigInt::from(sg)), &e);
        }
        for (t2, c) in rest {
            let e = self.straighten_codet(s, &t2)?;
            add_scaled(&mut out, &(-&lead * c), &e);
        }
        Ok(out)
    }
}

fn single_key(k: Key) -> Expansion {
    let mut e = Expansion::new();
    e.insert(k, BigInt::one());
    e
}

/// Identify every orbit of `w` as ±(tableau element); return the ±1 coefficient of `target`
/// and the remaining terms.
fn split_leading(
    w: Elem,
    ident: impl Fn(&Vec<Triple>) -> Result<(Tableau, i8)>,
    target: &Tableau,
) -> Result<(BigInt, Vec<(Tableau, BigInt)>)> {
    let mut lead = BigInt::zero();
    let mut rest = Vec::new();
    for (o, c) in w {
        let (u, sg) = ident(&o)?;
        let c = c * BigInt::from(sg);
        if &u == target {
            lead += c;
        } else {
            rest.push((u, c));
        }
    }
    if lead.abs() != BigInt::one() {
        return Err(Error::Internal(
            "leading coefficient of the straightening step is not a unit".into(),
        ));
    }
    Ok((lead, rest))
}

/// Sort rows of each component by decreasing length (stably) and row-standardize.
fn normalize(f: &Family, s: &Tableau, t: &Tableau) -> Result<Key> {
    let mut srows = s.rows.clone();
    let mut trows = t.rows.clone();
    let mut shape = s.shape.clone();
    for i in 0..f.colors() {
        let mut idx: Vec<usize> = (0..srows[i].len()).collect();
        idx.sort_by(|&x, &y| srows[i][y].len().cmp(&srows[i][x].len()));
        srows[i] = idx.iter().map(|&k| s.rows[i][k].clone()).collect();
        trows[i] = idx.iter().map(|&k| t.rows[i][k].clone()).collect();
        shape.0[i] = idx.iter().map(|&k| s.shape.0[i][k]).collect();
    }
    let s2 = Tableau::from_rows(shape.clone(), srows)?.row_standardize(&f.xa);
    let t2 = Tableau::from_rows(shape, trows)?.row_standardize(&f.ya);
    Ok((s2, t2))
}

/// ε with a = ε b for nonzero elements a, b.
fn relative_sign(a: &Elem, b: &Elem) -> Result<i8> {
    if a == b {
        return Ok(1);
    }
    let neg: Elem = b.iter().map(|(k, v)| (k.clone(), -v)).collect();
    if *a == neg {
        Ok(-1)
    } else {
        Err(Error::Internal(
            "row-equivalent codeterminants differ by more than a sign".into(),
        ))
    }
}

/// Straightening by coordinates in the codeterminant heredity basis.
pub struct LinearStraightener<'a> {
    pub t: &'a SchurAlgebra,
    pub structure: TStructure,
    pub basis: HeredityBasis,
}

impl<'a> LinearStraightener<'a> {
    pub fn new(t: &'a SchurAlgebra) -> Result<Self> {
        let structure = t.structure()?;
        let basis = HeredityBasis::new(t, &structure.input).map_err(Error::Internal)?;
        Ok(LinearStraightener {
            t,
            structure,
            basis,
        })
    }

    /// The standard codeterminant of cell `k`.
    pub fn key(&self, k: usize) -> Key {
        let (i, x, y) = self.basis.cells[k];
        (
            self.structure.xs[i][x].clone(),
            self.structure.ys[i][y].clone(),
        )
    }

    pub fn straighten(&self, x: &Elem) -> Expansion {
        self.basis
            .coords(&self.t.to_vector(x))
            .into_iter()
            .map(|(k, c)| (self.key(k), c))
            .collect()
    }

    /// Realize an expansion back as an element of T.
    pub fn expand(&self, e: &Expansion) -> Result<Elem> {
        let mut out = Elem::new();
        for ((s, t), c) in e {
            let b = self.t.fam.codeterminant(s, t)?;
            for (o, v) in b {
                add_to(&mut out, o, &(c * v));
            }
        }
        Ok(out)
    }
}
