//! Decomposition numbers from the LR formulas or from the Gram-rank oracle, and the blocks they determine.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{trivial, BasedAlgebra};
use crate::charac::{ungraded, CharacterVector, Lr, Partition};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{compositions, pad, partitions, trim, Multi};
use crate::ring::{is_prime, GradedSuperScalar};
use crate::schur::SchurAlgebra;

/// One component ν^{(i,j,m,ε,t)} of the index set Λ^D_+(n): it feeds c^{λ^(row)} (conjugated
/// when ε is odd) and c^{γ^(col)}, and contributes (q^m π^ε)^{|ν|} to deg(ν).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slot {
    pub row: usize,
    pub col: usize,
    pub m: i64,
    pub eps: u8,
}

/// Base decomposition data d^{m,ε}_{i,j}, unrolled into slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompInput {
    pub colors: usize,
    /// Sorted by (row, col, m, ε); a slot repeated t times stands for t ∈ [1, d^{m,ε}_{i,j}].
    pub slots: Vec<Slot>,
}

impl DecompInput {
    /// For a basic algebra: one slot per x ∈ X(i), with col the vertex j of e_j x = x.
    pub fn from_heredity(base: &BasedAlgebra) -> Self {
        let mut slots = Vec::new();
        for i in 0..base.colors {
            for &x in &base.x[i] {
                slots.push(Slot {
                    row: i,
                    col: base.left[x],
                    m: base.alg.degree[x],
                    eps: base.alg.parity[x],
                });
            }
        }
        slots.sort();
        DecompInput {
            colors: base.colors,
            slots,
        }
    }

    /// From a graded matrix d_{i,j}(q,π) with d_{i,i} = 1, d_{i,j} = 0 for j > i and
    /// nonnegative coefficients.
    pub fn from_matrix(d: &[Vec<GradedSuperScalar>]) -> Result<Self> {
        let colors = d.len();
        let mut slots = Vec::new();
        for (i, row) in d.iter().enumerate() {
            if row.len() != colors {
                return Err(Error::SizeMismatch(
                    "decomposition matrix is not square".into(),
                ));
            }
            if !row[i].is_one() {
                return Err(Error::Invalid(format!("d_{{{i},{i}}} must be 1")));
            }
            for (j, c) in row.iter().enumerate() {
                if j > i && !c.is_zero() {
                    return Err(Error::Invalid(format!(
                        "d_{{{i},{j}}} must vanish for j > i"
                    )));
                }
                for (m, e, k) in c.terms() {
                    if k.is_negative() {
                        return Err(Error::Invalid(format!(
                            "d_{{{i},{j}}} has a negative coefficient"
                        )));
                    }
                    let t = usize::try_from(k)
                        .map_err(|_| Error::Invalid("coefficient too large".into()))?;
                    slots.extend(
                        core::iter::repeat_n(Slot {
                            row: i,
                            col: j,
                            m,
                            eps: e,
                        }, t),
                    );
                }
            }
        }
        slots.sort();
        Ok(DecompInput { colors, slots })
    }

    /// The matrix d_{i,j}(q,π) encoded by the slots.
    pub fn matrix(&self) -> Vec<Vec<GradedSuperScalar>> {
        let mut d = vec![vec![GradedSuperScalar::zero(); self.colors]; self.colors];
        for s in &self.slots {
            d[s.row][s.col].add_term(s.m, s.eps, BigInt::one());
        }
        d
    }
}

fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Tuples of partitions (at most n rows each) with the given sizes.
fn partition_tuples(sizes: &[usize], n: usize) -> Vec<Vec<Partition>> {
    let lists: Vec<Vec<Partition>> = sizes
        .iter()
        .map(|&k| partitions(k, n).iter().map(|p| trim(p)).collect())
        .collect();
    cartesian(&lists)
}

/// (q^m π^ε)^k.
fn qpi_pow(m: i64, eps: u8, k: usize) -> GradedSuperScalar {
    GradedSuperScalar::qpi(m * k as i64, ((eps as usize * k) % 2) as u8)
}

/// Coefficients b_{λ,γ} with ch Δ(λ) = Σ_γ b_{λ,γ} s_γ, namely
/// Σ_ν deg(ν) Π_i c^{λ^(i)}_{row-i slots, conjugated if odd} c^{γ^(i)}_{col-i slots}.
pub fn schur_expansion(
    input: &DecompInput,
    lam: &Multi,
    n: usize,
    lr: &Lr,
) -> Result<BTreeMap<Multi, GradedSuperScalar>> {
    if lam.colors() != input.colors {
        return Err(Error::SizeMismatch(
            "multipartition has the wrong number of colors".into(),
        ));
    }
    let lt = lam.trimmed();
    // Per color i: the nonzero choices of (ν_s) for the slots in row i.
    let mut per_row: Vec<Vec<(Vec<Partition>, u64, GradedSuperScalar)>> =
        Vec::with_capacity(input.colors);
    let mut row_slots: Vec<Vec<usize>> = Vec::with_capacity(input.colors);
    for (i, li) in lt.iter().enumerate() {
        let idx: Vec<usize> = (0..input.slots.len())
            .filter(|&k| input.slots[k].row == i)
            .collect();
        let twists: Vec<bool> = idx.iter().map(|&k| input.slots[k].eps == 1).collect();
        let mut choices = Vec::new();
        for sizes in compositions(idx.len(), li.iter().sum()) {
            for parts in partition_tuples(&sizes, n) {
                let c = lr.lr_coeff(li, &parts, &twists)?;
                if c == 0 {
                    continue;
                }
                let mut deg = GradedSuperScalar::one();
                for (&k, p) in idx.iter().zip(&parts) {
                    let s = input.slots[k];
                    deg = deg.mul(&qpi_pow(s.m, s.eps, p.iter().sum()));
                }
                choices.push((parts, c, deg));
            }
        }
        per_row.push(choices);
        row_slots.push(idx);
    }
    let mut out: BTreeMap<Multi, GradedSuperScalar> = BTreeMap::new();
    for combo in cartesian(&per_row) {
        let mut nu: Vec<Partition> = vec![Vec::new(); input.slots.len()];
        let mut coeff = GradedSuperScalar::one();
        for (i, (parts, c, deg)) in combo.iter().enumerate() {
            for (&k, p) in row_slots[i].iter().zip(parts) {
                nu[k] = p.clone();
            }
            coeff = coeff.mul(deg).scale(&BigInt::from(*c));
        }
        let per_col: Vec<Vec<(Partition, u64)>> = (0..input.colors)
            .map(|j| {
                let fs: Vec<Partition> = (0..input.slots.len())
                    .filter(|&k| input.slots[k].col == j)
                    .map(|k| nu[k].clone())
                    .collect();
                lr.product(&fs, n).into_iter().collect()
            })
            .collect();
        for gamma in cartesian(&per_col) {
            let c: u64 = gamma.iter().map(|(_, c)| c).product();
            let g = Multi(
                gamma
                    .iter()
                    .map(|(p, _)| pad(p, n))
                    .collect::<Result<Vec<_>>>()?,
            );
            let e = out.entry(g).or_default();
            *e = e.add(&coeff.scale(&BigInt::from(c)));
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Which computation produced a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Formula,
    Oracle,
}

/// d_{λ,μ}(q,π) = [Δ(λ) : L(μ)]_{q,π} for λ, μ ∈ Λ^I_+(n,d), labels in linear-extension order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompMatrix {
    pub labels: Vec<Multi>,
    /// entries[λ][μ].
    pub entries: Vec<Vec<GradedSuperScalar>>,
    pub source: Source,
}

impl DecompMatrix {
    pub fn index(&self, lam: &Multi) -> Option<usize> {
        self.labels.iter().position(|l| l == lam)
    }
    pub fn get(&self, lam: &Multi, mu: &Multi) -> Option<&GradedSuperScalar> {
        Some(&self.entries[self.index(lam)?][self.index(mu)?])
    }
    /// d_{λ,λ} = 1, d_{λ,μ} ≠ 0 only for μ ≤ λ, and all coefficients nonnegative.
    pub fn check(&self) -> Result<()> {
        for (a, lam) in self.labels.iter().enumerate() {
            for (b, mu) in self.labels.iter().enumerate() {
                let c = &self.entries[a][b];
                if a == b && !c.is_one() {
                    return Err(Error::Internal(format!("d_{{{lam},{lam}}} = {c}")));
                }
                if a != b && !c.is_zero() && !lam.gt(mu) {
                    return Err(Error::Internal(format!(
                        "d_{{{lam},{mu}}} ≠ 0 but {mu} is not below {lam}"
                    )));
                }
                if !c.is_nonnegative() {
                    return Err(Error::Internal(format!(
                        "d_{{{lam},{mu}}} = {c} has a negative coefficient"
                    )));
                }
            }
        }
        Ok(())
    }
    /// First (λ, μ) where the entries of two matrices over the same labels differ.
    pub fn first_difference(&self, other: &DecompMatrix) -> Option<(Multi, Multi)> {
        if self.labels != other.labels {
            return self.labels.first().map(|l| (l.clone(), l.clone()));
        }
        for a in 0..self.labels.len() {
            for b in 0..self.labels.len() {
                if self.entries[a][b] != other.entries[a][b] {
                    return Some((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        None
    }
}

/// Classical decomposition numbers d^cl_{γ,μ} for the Schur algebras S(n,k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classical {
    /// d^cl = δ (characteristic 0, or p > d).
    Identity,
    Table(BTreeMap<(Partition, Partition), BigInt>),
}

impl Classical {
    pub fn entry(&self, g: &[usize], m: &[usize]) -> BigInt {
        let (g, m) = (trim(g), trim(m));
        if g.iter().sum::<usize>() != m.iter().sum::<usize>() {
            return BigInt::zero();
        }
        match self {
            Classical::Identity => BigInt::from(u8::from(g == m)),
            Classical::Table(t) if g.is_empty() => {
                t.get(&(g, m)).cloned().unwrap_or_else(BigInt::one)
            }
            Classical::Table(t) => t.get(&(g, m)).cloned().unwrap_or_default(),
        }
    }
    /// d^cl_{γ,μ} = Π_i d^cl_{γ^(i),μ^(i)}.
    pub fn multi(&self, g: &Multi, m: &Multi) -> BigInt {
        g.0.iter()
            .zip(&m.0)
            .map(|(a, b)| self.entry(a, b))
            .product()
    }
    /// Collect the entries of an oracle matrix for S(n,k) (labels with one color).
    pub fn absorb(&mut self, m: &DecompMatrix) -> Result<()> {
        let Classical::Table(t) = self else {
            return Err(Error::Invalid("cannot add entries to the identity".into()));
        };
        for (a, g) in m.labels.iter().enumerate() {
            for (b, mu) in m.labels.iter().enumerate() {
                if g.colors() != 1 {
                    return Err(Error::Invalid("classical labels have one color".into()));
                }
                let v = ungraded(&m.entries[a][b])?;
                if !v.is_zero() {
                    t.insert((trim(g.comp(0)), trim(mu.comp(0))), v);
                }
            }
        }
        Ok(())
    }
    /// d^cl for S(n,k), k ≤ dmax, from the oracle on the trivial base over 𝔽_p (p = 0 for ℚ).
    pub fn from_oracle(n: usize, dmax: usize, p: u64) -> Result<Self> {
        let mut out = Classical::Table(BTreeMap::new());
        for k in 1..=dmax {
            let t = SchurAlgebra::new(trivial(), n, k)?;
            out.absorb(&decomp_oracle(&t, p)?.matrix)?;
        }
        Ok(out)
    }
}

/// d_{λ,μ} = Σ_γ Σ_ν d^cl_{γ,μ} deg(ν) Π_i c^{λ^(i)}_{_iν̄} c^{γ^(i)}_{ν_i}.
pub fn decomp_formula(
    input: &DecompInput,
    lam: &Multi,
    mu: &Multi,
    n: usize,
    cl: &Classical,
    lr: &Lr,
) -> Result<GradedSuperScalar> {
    let b = schur_expansion(input, lam, n, lr)?;
    let mut out = GradedSuperScalar::zero();
    for (g, c) in &b {
        let k = cl.multi(g, mu);
        if !k.is_zero() {
            out = out.add(&c.scale(&k));
        }
    }
    Ok(out)
}

/// The formula evaluated on all pairs of `labels`.
pub fn decomp_formula_matrix(
    input: &DecompInput,
    labels: &[Multi],
    n: usize,
    cl: &Classical,
    lr: &Lr,
) -> Result<DecompMatrix> {
    let mut entries = Vec::with_capacity(labels.len());
    for lam in labels {
        let b = schur_expansion(input, lam, n, lr)?;
        let row = labels
            .iter()
            .map(|mu| {
                let mut out = GradedSuperScalar::zero();
                for (g, c) in &b {
                    let k = cl.multi(g, mu);
                    if !k.is_zero() {
                        out = out.add(&c.scale(&k));
                    }
                }
                out
            })
            .collect();
        entries.push(row);
    }
    Ok(DecompMatrix {
        labels: labels.to_vec(),
        entries,
        source: Source::Formula,
    })
}

/// δ(λ,μ) = Σ_{j ∈ I} j (|λ^(j)| − |μ^(j)|).
pub fn zig_delta(lam: &Multi, mu: &Multi) -> i64 {
    lam.norm()
        .iter()
        .zip(mu.norm())
        .enumerate()
        .map(|(j, (&a, b))| j as i64 * (a as i64 - b as i64))
        .sum()
}

fn check_zig(l: usize, lam: &Multi, mu: &Multi) -> Result<()> {
    if lam.colors() != l + 1 || mu.colors() != l + 1 {
        return Err(Error::SizeMismatch(format!(
            "zigzag labels need {} colors",
            l + 1
        )));
    }
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch("|λ| ≠ |μ|".into()));
    }
    Ok(())
}

/// Σ over β, α of Π_i c^{λ^(i)}_{β^(i),(α^(i-1))'} c^{γ^(i)}_{β^(i),α^(i)} with α^(-1) = α^(ℓ) = ∅,
/// for the given sizes of α^(0..ℓ-1) and β^(0..ℓ).
fn zig_sum(
    lam: &[Partition],
    gamma: &[Partition],
    a: &[usize],
    b: &[usize],
    n: usize,
    lr: &Lr,
) -> Result<u64> {
    let l = lam.len() - 1;
    let mut total = 0;
    for alpha in partition_tuples(a, n) {
        for beta in partition_tuples(b, n) {
            let mut prod = 1u64;
            for i in 0..=l {
                let prev = if i == 0 {
                    Vec::new()
                } else {
                    alpha[i - 1].clone()
                };
                let next = if i == l { Vec::new() } else { alpha[i].clone() };
                if beta[i].iter().sum::<usize>() + prev.iter().sum::<usize>()
                    != lam[i].iter().sum::<usize>()
                    || beta[i].iter().sum::<usize>() + next.iter().sum::<usize>()
                        != gamma[i].iter().sum::<usize>()
                {
                    prod = 0;
                    break;
                }
                prod *= lr.lr_coeff(&lam[i], &[beta[i].clone(), prev], &[false, true])?;
                if prod == 0 {
                    break;
                }
                prod *= lr.lr_coeff(&gamma[i], &[beta[i].clone(), next], &[false, false])?;
                if prod == 0 {
                    break;
                }
            }
            total += prod;
        }
    }
    Ok(total)
}

/// The dedicated zigzag formula
/// (qπ)^{δ(λ,μ)} Σ_{γ,β,α} d^cl_{γ,μ} Π_i c^{λ^(i)}_{β^(i),(α^(i-1))'} c^{γ^(i)}_{β^(i),α^(i)}.
pub fn zig_decomp(
    l: usize,
    n: usize,
    lam: &Multi,
    mu: &Multi,
    cl: &Classical,
    lr: &Lr,
) -> Result<GradedSuperScalar> {
    check_zig(l, lam, mu)?;
    let (ln, mn) = (lam.norm(), mu.norm());
    // |γ^(i)| = |μ^(i)|, so |α^(i)| = Σ_{k ≤ i} (|μ^(k)| − |λ^(k)|) and |β^(i)| = |λ^(i)| − |α^(i-1)|.
    let mut a = Vec::with_capacity(l);
    let mut acc: i64 = 0;
    for i in 0..l {
        acc += mn[i] as i64 - ln[i] as i64;
        if acc < 0 {
            return Ok(GradedSuperScalar::zero());
        }
        a.push(acc as usize);
    }
    let mut b = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let prev = if i == 0 { 0 } else { a[i - 1] };
        if ln[i] < prev {
            return Ok(GradedSuperScalar::zero());
        }
        b.push(ln[i] - prev);
    }
    let lt = lam.trimmed();
    let gammas: Vec<Vec<Partition>> = mn
        .iter()
        .map(|&k| partitions(k, n).iter().map(|p| trim(p)).collect())
        .collect();
    let mut total = BigInt::zero();
    for gamma in cartesian(&gammas) {
        let g = Multi(
            gamma
                .iter()
                .map(|p| pad(p, n))
                .collect::<Result<Vec<_>>>()?,
        );
        let k = cl.multi(&g, mu);
        if k.is_zero() {
            continue;
        }
        total += k * BigInt::from(zig_sum(&lt, &gamma, &a, &b, n, lr)?);
    }
    let dl = zig_delta(lam, mu);
    Ok(GradedSuperScalar::monomial(
        total,
        dl,
        dl.rem_euclid(2) as u8,
    ))
}

/// The characteristic-zero form: γ = μ and the sizes
/// |α^(i)| = Σ_{j>i} (|λ^(j)| − |μ^(j)|), |β^(i)| = |μ^(i)| + Σ_{j>i} (|μ^(j)| − |λ^(j)|).
pub fn zig_decomp_char0(
    l: usize,
    n: usize,
    lam: &Multi,
    mu: &Multi,
    lr: &Lr,
) -> Result<GradedSuperScalar> {
    check_zig(l, lam, mu)?;
    let (ln, mn) = (lam.norm(), mu.norm());
    let tail = |i: usize| -> i64 { (i + 1..=l).map(|j| ln[j] as i64 - mn[j] as i64).sum() };
    let mut a = Vec::with_capacity(l);
    for i in 0..l {
        let t = tail(i);
        if t < 0 {
            return Ok(GradedSuperScalar::zero());
        }
        a.push(t as usize);
    }
    let mut b = Vec::with_capacity(l + 1);
    for i in 0..=l {
        let v = mn[i] as i64 - tail(i);
        if v < 0 {
            return Ok(GradedSuperScalar::zero());
        }
        b.push(v as usize);
    }
    let total = zig_sum(&lam.trimmed(), &mu.trimmed(), &a, &b, n, lr)?;
    let dl = zig_delta(lam, mu);
    Ok(GradedSuperScalar::monomial(
        BigInt::from(total),
        dl,
        dl.rem_euclid(2) as u8,
    ))
}

/// The dedicated zigzag formula on all pairs of Λ^I_+(n,d).
pub fn zig_decomp_matrix(
    t: &SchurAlgebra,
    l: usize,
    cl: &Classical,
    lr: &Lr,
) -> Result<DecompMatrix> {
    let labels = t.labels();
    let n = t.n();
    let entries = labels
        .iter()
        .map(|lam| {
            labels
                .iter()
                .map(|mu| zig_decomp(l, n, lam, mu, cl, lr))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompMatrix {
        labels,
        entries,
        source: Source::Formula,
    })
}

/// Oracle output: standard and simple characters and the decomposition matrix.
#[derive(Clone, Debug)]
pub struct OracleOutput {
    pub labels: Vec<Multi>,
    pub standard: Vec<CharacterVector>,
    pub simple: Vec<CharacterVector>,
    pub matrix: DecompMatrix,
}

type Stratum = (Multi, i64, u8);

/// Decomposition matrix over ℚ (p = 0) or 𝔽_p from Gram matrices of the standard modules:
/// dim_{q,π} e_μ L(λ) is the rank of the Gram block of weight μ in each degree, and D solves
/// ch Δ = D · ch L.
pub fn decomp_oracle(t: &SchurAlgebra, p: u64) -> Result<OracleOutput> {
    if p != 0 && !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = &t.fam;
    let n = f.n;
    let (st, rep, extra) = t.verify_heredity()?;
    let (_, tables) = extra.ok_or_else(|| {
        Error::Internal(format!("heredity check failed: {:?}", rep.first_failure()))
    })?;
    if !rep.passed() {
        return Err(Error::Internal(format!(
            "heredity check failed: {:?}",
            rep.first_failure()
        )));
    }
    let mut standard = Vec::with_capacity(st.labels.len());
    let mut simple = Vec::with_capacity(st.labels.len());
    for (i, lam) in st.labels.iter().enumerate() {
        let xkeys: Vec<Stratum> = st.xs[i]
            .iter()
            .map(|s| {
                let (m, e) = s.degree(&f.xa);
                (s.weight(&f.xa, n), m, e)
            })
            .collect();
        let ykeys: Vec<Stratum> = st.ys[i]
            .iter()
            .map(|y| {
                let (m, e) = y.degree(&f.ya);
                (y.weight(&f.ya, n), -m, e)
            })
            .collect();
        let gram = &tables.f[i];
        let mut ch = CharacterVector::new();
        for (k, key) in xkeys.iter().enumerate() {
            ch.add_term(key.0.clone(), &GradedSuperScalar::qpi(key.1, key.2));
            for (y, yk) in ykeys.iter().enumerate() {
                if yk != key && !gram[y][k].is_zero() {
                    return Err(Error::Internal(format!(
                        "Gram matrix of {lam} pairs different strata"
                    )));
                }
            }
        }
        let mut strata: BTreeMap<&Stratum, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (k, key) in xkeys.iter().enumerate() {
            strata.entry(key).or_default().0.push(k);
        }
        for (y, key) in ykeys.iter().enumerate() {
            if let Some(e) = strata.get_mut(key) {
                e.1.push(y);
            }
        }
        let mut l = CharacterVector::new();
        for (key, (xs, ys)) in &strata {
            if ys.is_empty() {
                continue;
            }
            let m: Vec<Vec<BigInt>> = ys
                .iter()
                .map(|&y| xs.iter().map(|&x| gram[y][x].clone()).collect())
                .collect();
            let r = linalg::rank(&m, p);
            if r > 0 {
                l.add_term(
                    key.0.clone(),
                    &GradedSuperScalar::monomial(BigInt::from(r), key.1, key.2),
                );
            }
        }
        if !l.get(lam).is_one() {
            return Err(Error::Internal(format!(
                "highest weight space of L({lam}) is not one-dimensional"
            )));
        }
        standard.push(ch);
        simple.push(l);
    }
    let k = st.labels.len();
    let mut entries = vec![vec![GradedSuperScalar::zero(); k]; k];
    for a in 0..k {
        let mut rem = standard[a].clone();
        for b in (0..k).rev() {
            let c = rem.get(&st.labels[b]);
            if c.is_zero() {
                continue;
            }
            rem = rem.sub_scaled(&c, &simple[b]);
            entries[a][b] = c;
        }
        if !rem.is_empty() {
            return Err(Error::Internal(format!(
                "ch Δ({}) is not a combination of simple characters",
                st.labels[a]
            )));
        }
    }
    let matrix = DecompMatrix {
        labels: st.labels.clone(),
        entries,
        source: Source::Oracle,
    };
    matrix.check()?;
    Ok(OracleOutput {
        labels: st.labels,
        standard,
        simple,
        matrix,
    })
}

/// Decomposition numbers d_{i,j}(q,π) of the base algebra, read off from T at n = d = 1.
pub fn base_decomposition(base: &BasedAlgebra, p: u64) -> Result<Vec<Vec<GradedSuperScalar>>> {
    let colors = base.colors;
    let t = SchurAlgebra::new(base.clone(), 1, 1)?;
    let out = decomp_oracle(&t, p)?;
    let vertex = |m: &Multi| (0..colors).find(|&i| m.comp(i) == [1]).expect("one box");
    let mut d = vec![vec![GradedSuperScalar::zero(); colors]; colors];
    for (a, lam) in out.labels.iter().enumerate() {
        for (b, mu) in out.labels.iter().enumerate() {
            d[vertex(lam)][vertex(mu)] = out.matrix.entries[a][b].clone();
        }
    }
    Ok(d)
}

/// Blocks: the classes of the equivalence generated by "P(i) and P(j) share a composition
/// factor", where [P(i) : L(l)] ≠ 0 iff d^op_{k,i} d_{k,l} ≠ 0 for some k.
pub fn blocks(d: &DecompMatrix, d_op: &DecompMatrix) -> Result<Vec<Vec<Multi>>> {
    if d.labels != d_op.labels {
        return Err(Error::SizeMismatch(
            "D and D^op have different labels".into(),
        ));
    }
    let k = d.labels.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for row in 0..k {
        // Everything in {i : d^op_{row,i} ≠ 0} ∪ {l : d_{row,l} ≠ 0} is linked through Δ(row).
        let members: Vec<usize> = (0..k)
            .filter(|&i| !d_op.entries[row][i].is_zero() || !d.entries[row][i].is_zero())
            .collect();
        for w in members.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<Multi>> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(d.labels[i].clone());
    }
    Ok(classes.into_values().collect())
}
