//! Characters: Kostka numbers, Littlewood-Richardson coefficients, skew characters and the
//! two descriptions of ch Δ(λ) for basic base algebras.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{compositions, is_partition, pad, transpose, trim, Multi};
use crate::ring::GradedSuperScalar;
use crate::schur::Family;
use crate::tableau::{enumerate_tableaux, Flavor};

/// A partition stored without trailing zeros.
pub type Partition = Vec<usize>;

/// Finitely supported R-linear combination of weights; products add weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterVector {
    terms: BTreeMap<Multi, GradedSuperScalar>,
}

impl CharacterVector {
    pub fn new() -> Self {
        Self::default()
    }
    /// The single weight `w` with coefficient 1.
    pub fn weight(w: Multi) -> Self {
        let mut c = Self::new();
        c.add_term(w, &GradedSuperScalar::one());
        c
    }
    pub fn add_term(&mut self, w: Multi, c: &GradedSuperScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
    pub fn get(&self, w: &Multi) -> GradedSuperScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }
    pub fn iter(&self) -> impl Iterator<Item = (&Multi, &GradedSuperScalar)> {
        self.terms.iter()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
    pub fn scale(&self, c: &GradedSuperScalar) -> Self {
        let mut out = Self::new();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &v.mul(c));
        }
        out
    }
    /// `self - c * other`.
    pub fn sub_scaled(&self, c: &GradedSuperScalar, other: &Self) -> Self {
        self.add(&other.scale(&c.neg()))
    }
    /// Product in the monoid algebra: weights add componentwise.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.colors() != b.colors() || a.rows() != b.rows() {
                    return Err(Error::SizeMismatch("weights of different shapes".into()));
                }
                let w = Multi(
                    a.0.iter()
                        .zip(&b.0)
                        .map(|(u, v)| u.iter().zip(v).map(|(p, q)| p + q).collect())
                        .collect(),
                );
                out.add_term(w, &x.mul(y));
            }
        }
        Ok(out)
    }
    /// Outer tensor product: concatenate the color components.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.0.clone();
                w.extend(b.0.iter().cloned());
                out.add_term(Multi(w), &x.mul(y));
            }
        }
        out
    }
}

/// Kostka number k_{λ,μ}: semistandard λ-tableaux of content μ, by removing horizontal strips.
pub fn kostka(lam: &[usize], mu: &[usize]) -> Result<u64> {
    let lam = trim(lam);
    if !is_partition(&lam) {
        return Err(Error::Invalid(alloc::format!("{lam:?} is not a partition")));
    }
    if lam.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return Err(Error::SizeMismatch("kostka: |λ| ≠ |μ|".into()));
    }
    fn rec(lam: &[usize], mu: &[usize], memo: &mut BTreeMap<(Partition, usize), u64>) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(lam.is_empty());
        };
        if lam.len() > mu.len() {
            return 0;
        }
        let key = (lam.to_vec(), mu.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for_each_horizontal_strip(lam, last, &mut |inner| {
            total += rec(&trim(inner), rest, memo)
        });
        memo.insert(key, total);
        total
    }
    Ok(rec(&lam, mu, &mut BTreeMap::new()))
}

/// Call `f` on every κ ⊆ λ with λ/κ a horizontal strip of size `k`.
fn for_each_horizontal_strip(lam: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        r: usize,
        lam: &[usize],
        left: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if r == lam.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let lo = lam.get(r + 1).copied().unwrap_or(0);
        for v in lo..=lam[r] {
            let take = lam[r] - v;
            if take > left {
                continue;
            }
            cur.push(v);
            rec(r + 1, lam, left - take, cur, f);
            cur.pop();
        }
    }
    rec(0, lam, k, &mut Vec::new(), f);
}

/// s_λ in n variables as a one-colored character: Σ_μ k_{λ,μ} μ.
pub fn schur_character(lam: &[usize], n: usize) -> CharacterVector {
    let lam = trim(lam);
    let mut out = CharacterVector::new();
    if lam.len() > n {
        return out;
    }
    for mu in compositions(n, lam.iter().sum()) {
        let k = kostka(&lam, &mu).expect("sizes agree");
        if k > 0 {
            out.add_term(Multi(vec![mu]), &GradedSuperScalar::from_int(k));
        }
    }
    out
}

/// s_λ = s_{λ^(0)} ⊗ ... ⊗ s_{λ^(ℓ)}.
pub fn multi_schur_character(lam: &Multi, n: usize) -> CharacterVector {
    let mut out = CharacterVector::weight(Multi(Vec::new()));
    for c in &lam.0 {
        out = out.tensor(&schur_character(c, n));
    }
    out
}

/// Littlewood-Richardson engine with a memo table keyed by (λ, sorted factors).
#[derive(Debug, Default)]
pub struct Lr {
    two: RefCell<BTreeMap<(Partition, Partition, Partition), u64>>,
    multi: RefCell<BTreeMap<(Partition, Vec<Partition>), u64>>,
}

impl Lr {
    pub fn new() -> Self {
        Self::default()
    }

    /// c^λ_{μ,ν}: LR fillings of λ/μ with content ν whose reverse reading word is a lattice word.
    pub fn lr2(&self, lam: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
        let (lam, mu, nu) = (trim(lam), trim(mu), trim(nu));
        if lam.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>()
            || !contains(&lam, &mu)
            || !contains(&lam, &nu)
        {
            return 0;
        }
        let key = (lam, mu, nu);
        if let Some(&v) = self.two.borrow().get(&key) {
            return v;
        }
        let v = lr_fillings(&key.0, &key.1, &key.2);
        self.two.borrow_mut().insert(key, v);
        v
    }

    /// c^λ_{μ_1,...,μ_m} with the factors with a set twist transposed first.
    pub fn lr_coeff(&self, lam: &[usize], factors: &[Partition], twists: &[bool]) -> Result<u64> {
        if twists.len() != factors.len() {
            return Err(Error::SizeMismatch("one twist per factor".into()));
        }
        let fs: Vec<Partition> = factors
            .iter()
            .zip(twists)
            .map(|(f, &t)| if t { transpose(f) } else { trim(f) })
            .collect();
        if fs.iter().flatten().sum::<usize>() != lam.iter().sum::<usize>() {
            return Err(Error::SizeMismatch("lr_coeff: Σ|factors| ≠ |λ|".into()));
        }
        Ok(self.multi_coeff(&trim(lam), fs))
    }

    fn multi_coeff(&self, lam: &[usize], mut fs: Vec<Partition>) -> u64 {
        fs.retain(|f| !f.is_empty());
        fs.sort();
        match fs.len() {
            0 => return u64::from(lam.is_empty()),
            1 => return u64::from(lam == fs[0].as_slice()),
            2 => return self.lr2(lam, &fs[0], &fs[1]),
            _ => {}
        }
        let key = (lam.to_vec(), fs);
        if let Some(&v) = self.multi.borrow().get(&key) {
            return v;
        }
        let (lam, fs) = &key;
        let last = fs.last().expect("at least three factors");
        let rest = fs[..fs.len() - 1].to_vec();
        let inner = lam.iter().sum::<usize>() - last.iter().sum::<usize>();
        let mut total = 0;
        for nu in subpartitions(lam, inner) {
            let c = self.lr2(lam, &nu, last);
            if c > 0 {
                total += c * self.multi_coeff(&nu, rest.clone());
            }
        }
        self.multi.borrow_mut().insert(key, total);
        total
    }

    /// s_{f_1} ... s_{f_m} = Σ_λ c^λ_{f} s_λ, keeping λ with at most `max_rows` rows.
    pub fn product(&self, factors: &[Partition], max_rows: usize) -> BTreeMap<Partition, u64> {
        let mut cur: BTreeMap<Partition, u64> = BTreeMap::new();
        cur.insert(Vec::new(), 1);
        for f in factors {
            let f = trim(f);
            if f.is_empty() {
                continue;
            }
            let mut next = BTreeMap::new();
            for (kappa, c) in &cur {
                for lam in lr_candidates(kappa, &f, max_rows) {
                    let v = self.lr2(&lam, kappa, &f);
                    if v > 0 {
                        *next.entry(lam).or_insert(0) += c * v;
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// All memoized multi-factor coefficients, for persistence.
    pub fn entries(&self) -> Vec<(Partition, Vec<Partition>, u64)> {
        let mut v: Vec<_> = self
            .two
            .borrow()
            .iter()
            .map(|((l, a, b), &c)| (l.clone(), sorted_pair(a, b), c))
            .collect();
        v.extend(
            self.multi
                .borrow()
                .iter()
                .map(|((l, f), &c)| (l.clone(), f.clone(), c)),
        );
        v.sort();
        v.dedup();
        v
    }

    /// Seed the memo table with previously computed coefficients.
    pub fn preload(&self, entries: impl IntoIterator<Item = (Partition, Vec<Partition>, u64)>) {
        for (lam, mut fs, c) in entries {
            fs.retain(|f| !f.is_empty());
            fs.sort();
            if fs.len() == 2 {
                self.two
                    .borrow_mut()
                    .insert((lam.clone(), fs[0].clone(), fs[1].clone()), c);
                self.two
                    .borrow_mut()
                    .insert((lam, fs[1].clone(), fs[0].clone()), c);
            } else if fs.len() > 2 {
                self.multi.borrow_mut().insert((lam, fs), c);
            }
        }
    }

    pub fn cache_len(&self) -> usize {
        self.two.borrow().len() + self.multi.borrow().len()
    }
}

fn sorted_pair(a: &Partition, b: &Partition) -> Vec<Partition> {
    let mut v = vec![a.clone(), b.clone()];
    v.sort();
    v
}

/// [μ] ⊆ [λ].
pub fn contains(lam: &[usize], mu: &[usize]) -> bool {
    mu.len() <= lam.len() && mu.iter().zip(lam).all(|(a, b)| a <= b)
}

/// Partitions ν ⊆ λ with |ν| = k.
fn subpartitions(lam: &[usize], k: usize) -> Vec<Partition> {
    fn rec(
        r: usize,
        lam: &[usize],
        left: usize,
        prev: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if r == lam.len() {
            return;
        }
        for v in (1..=lam[r].min(prev).min(left)).rev() {
            cur.push(v);
            rec(r + 1, lam, left - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, lam, k, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Partitions λ ⊇ κ, λ ⊇ f with |λ| = |κ| + |f| that can carry an LR filling of content f.
fn lr_candidates(kappa: &[usize], f: &[usize], max_rows: usize) -> Vec<Partition> {
    let rows = (kappa.len() + f.len()).min(max_rows);
    let total = f.iter().sum::<usize>();
    let mut out = Vec::new();
    fn rec(
        r: usize,
        rows: usize,
        kappa: &[usize],
        f: &[usize],
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == rows {
            let lam = trim(cur);
            if left == 0 && r >= kappa.len() && contains(&lam, f) {
                out.push(lam);
            }
            return;
        }
        let k = kappa.get(r).copied().unwrap_or(0);
        let prev = if r == 0 { k + f[0] } else { cur[r - 1] };
        for v in k..=prev.min(k + left) {
            cur.push(v);
            rec(r + 1, rows, kappa, f, left - (v - k), cur, out);
            cur.pop();
        }
    }
    rec(0, rows, kappa, f, total, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Count LR fillings of λ/μ with content ν, cell by cell in reverse reading order.
fn lr_fillings(lam: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| {
            (mu.get(r).copied().unwrap_or(0)..lam[r])
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.iter().map(|&l| vec![0; l]).collect();
    let mut counts = vec![0usize; nu.len() + 1];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        lam: &[usize],
        mu: &[usize],
        nu: &[usize],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let hi = if c + 1 < lam[r] {
            grid[r][c + 1]
        } else {
            nu.len()
        };
        let lo = if r > 0 && c >= mu.get(r - 1).copied().unwrap_or(0) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi.min(r + 1) {
            if counts[v] + 1 > nu[v - 1] || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            grid[r][c] = v;
            total += rec(k + 1, cells, lam, mu, nu, grid, counts);
            counts[v] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, lam, mu, nu, &mut grid, &mut counts)
}

/// s^ε_{λ/μ} by enumeration: even fillings have weakly increasing rows and strict columns,
/// odd fillings strict rows and weak columns. Entries lie in [1,n].
pub fn skew_char(lam: &[usize], mu: &[usize], odd: bool, n: usize) -> Result<CharacterVector> {
    let (lam, mu) = (trim(lam), trim(mu));
    if !contains(&lam, &mu) {
        return Err(Error::Invalid(alloc::format!(
            "{mu:?} is not contained in {lam:?}"
        )));
    }
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| (mu.get(r).copied().unwrap_or(0)..lam[r]).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.iter().map(|&l| vec![0; l]).collect();
    let mut out = CharacterVector::new();
    let mut weight = vec![0usize; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        mu: &[usize],
        odd: bool,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        weight: &mut Vec<usize>,
        out: &mut CharacterVector,
    ) {
        if k == cells.len() {
            out.add_term(Multi(vec![weight.clone()]), &GradedSuperScalar::one());
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > mu.get(r).copied().unwrap_or(0) {
            lo = lo.max(grid[r][c - 1] + usize::from(odd));
        }
        if r > 0 && c >= mu.get(r - 1).copied().unwrap_or(0) {
            lo = lo.max(grid[r - 1][c] + usize::from(!odd));
        }
        for v in lo..=n {
            grid[r][c] = v;
            weight[v - 1] += 1;
            rec(k + 1, cells, mu, odd, n, grid, weight, out);
            weight[v - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mu, odd, n, &mut grid, &mut weight, &mut out);
    Ok(out)
}

/// Σ_ν c^λ_{μ,ν^ε} s_ν in n variables.
pub fn skew_char_lr(
    lr: &Lr,
    lam: &[usize],
    mu: &[usize],
    odd: bool,
    n: usize,
) -> Result<CharacterVector> {
    let (lam, mu) = (trim(lam), trim(mu));
    if !contains(&lam, &mu) {
        return Err(Error::Invalid(alloc::format!(
            "{mu:?} is not contained in {lam:?}"
        )));
    }
    let k = lam.iter().sum::<usize>() - mu.iter().sum::<usize>();
    let mut out = CharacterVector::new();
    for nu in crate::partition::partitions(k, k) {
        let nu = trim(&nu);
        let c = lr.lr_coeff(&lam, &[mu.clone(), nu.clone()], &[false, odd])?;
        if c > 0 {
            out = out.add(&schur_character(&nu, n).scale(&GradedSuperScalar::from_int(c)));
        }
    }
    Ok(out)
}

/// Whether the heredity data is basic: e_i is the only element of X(i) absorbed by e_i,
/// and X(i) meets e_j only for j ≤ i.
pub fn is_basic(fam: &Family) -> bool {
    let b = &fam.base;
    (0..b.colors).all(|i| {
        b.x[i].iter().all(|&x| {
            let j = b.left[x];
            (j == i) == (x == b.e[i]) && (j == i || b.less[j][i])
        })
    })
}

/// ch Δ(λ) = Σ_{S ∈ Std^X(λ)} deg(S) α^S.
pub fn char_standard_tableaux(fam: &Family, lam: &Multi) -> Result<CharacterVector> {
    if fam.n < lam.size() {
        return Err(Error::NeedNAtLeastD {
            n: fam.n,
            d: lam.size(),
        });
    }
    if !is_basic(fam) {
        return Err(Error::Invalid(
            "standard characters need a basic base algebra".into(),
        ));
    }
    let lam = Multi::padded(&lam.0, fam.n)?;
    let mut out = CharacterVector::new();
    for s in enumerate_tableaux(&lam, fam.n, &fam.xa, Flavor::Std) {
        out.add_term(s.weight(&fam.xa, fam.n), &s.degree_scalar(&fam.xa));
    }
    Ok(out)
}

/// ch Δ(λ) through LR coefficients: Σ_γ b_{λ,γ} s_γ with b from [`crate::decomp::schur_expansion`].
pub fn char_standard_lr(fam: &Family, lam: &Multi, lr: &Lr) -> Result<CharacterVector> {
    if fam.n < lam.size() {
        return Err(Error::NeedNAtLeastD {
            n: fam.n,
            d: lam.size(),
        });
    }
    if !is_basic(fam) {
        return Err(Error::Invalid(
            "standard characters need a basic base algebra".into(),
        ));
    }
    let input = crate::decomp::DecompInput::from_heredity(&fam.base);
    let mut out = CharacterVector::new();
    for (gamma, b) in crate::decomp::schur_expansion(&input, lam, fam.n, lr)? {
        out = out.add(&multi_schur_character(&gamma, fam.n).scale(&b));
    }
    Ok(out)
}

/// Pad a trimmed partition list into a multipartition with n rows.
pub fn multi_from(parts: &[Partition], n: usize) -> Result<Multi> {
    Ok(Multi(
        parts
            .iter()
            .map(|p| pad(p, n))
            .collect::<Result<Vec<_>>>()?,
    ))
}

/// Integer coefficient of a degree-zero scalar; errors if other degrees occur.
pub fn ungraded(c: &GradedSuperScalar) -> Result<BigInt> {
    let mut v = BigInt::from(0);
    for (m, e, x) in c.terms() {
        if m != 0 || e != 0 {
            return Err(Error::Invalid("expected an ungraded coefficient".into()));
        }
        v = x.clone();
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{trivial, zigzag};
    use crate::partition::{multipartitions, partitions};
    use crate::tableau::semistandard;

    fn p(v: &[usize]) -> Partition {
        v.to_vec()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&[2, 1], &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&[1, 1], &[2]).unwrap(), 0);
        assert_eq!(kostka(&[3, 2], &[3, 2]).unwrap(), 1);
        assert!(kostka(&[2], &[1]).is_err());
    }

    #[test]
    fn kostka_matches_enumeration() {
        for d in 0..=5 {
            for lam in partitions(d, d) {
                let tabs = semistandard(&trim(&lam), 4);
                for mu in compositions(4, d) {
                    let count = tabs
                        .iter()
                        .filter(|t| {
                            (1..=4).all(|v| {
                                t.iter().flatten().filter(|&&x| x == v).count() == mu[v - 1]
                            })
                        })
                        .count() as u64;
                    assert_eq!(kostka(&lam, &mu).unwrap(), count, "{lam:?} {mu:?}");
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        let lr = Lr::new();
        assert_eq!(
            lr.lr_coeff(&[2, 1], &[p(&[1]), p(&[1]), p(&[1])], &[false; 3])
                .unwrap(),
            2
        );
        assert_eq!(
            lr.lr_coeff(&[2, 2], &[p(&[2, 1]), p(&[1])], &[false; 2])
                .unwrap(),
            1
        );
        assert_eq!(
            lr.lr_coeff(&[3, 2, 1], &[p(&[2, 1]), p(&[2, 1])], &[false; 2])
                .unwrap(),
            2
        );
        assert_eq!(
            lr.lr_coeff(&[2, 1], &[p(&[2, 1]), p(&[])], &[false; 2])
                .unwrap(),
            1
        );
        assert_eq!(lr.lr_coeff(&[1, 1], &[p(&[2])], &[true]).unwrap(), 1);
        assert!(lr.lr_coeff(&[2], &[p(&[1])], &[false]).is_err());
    }

    #[test]
    fn product_expands_pieri() {
        let lr = Lr::new();
        let prod = lr.product(&[p(&[2]), p(&[1])], 5);
        assert_eq!(
            prod.into_iter().collect::<Vec<_>>(),
            vec![(p(&[2, 1]), 1), (p(&[3]), 1)]
        );
        let rows2 = Lr::new().product(&[p(&[1]), p(&[1]), p(&[1])], 2);
        assert_eq!(
            rows2.into_iter().collect::<Vec<_>>(),
            vec![(p(&[2, 1]), 2), (p(&[3]), 1)]
        );
    }

    #[test]
    fn skew_examples() {
        let lr = Lr::new();
        let one = skew_char(&[2, 1], &[2, 1], false, 3).unwrap();
        assert_eq!(one, CharacterVector::weight(Multi(vec![vec![0, 0, 0]])));
        assert_eq!(
            skew_char(&[2], &[], false, 2).unwrap(),
            schur_character(&[2], 2)
        );
        assert_eq!(
            skew_char(&[1, 1], &[], true, 2).unwrap(),
            schur_character(&[2], 2)
        );
        assert_eq!(
            skew_char_lr(&lr, &[1, 1], &[], true, 2).unwrap(),
            schur_character(&[2], 2)
        );
    }

    #[test]
    fn trivial_base_gives_schur_functions() {
        let fam = Family::new(trivial(), 3).unwrap();
        for lam in multipartitions(1, 3, 3) {
            let a = char_standard_tableaux(&fam, &lam).unwrap();
            assert_eq!(a, multi_schur_character(&lam, 3));
        }
    }

    #[test]
    fn zigzag_one_box_character() {
        let fam = Family::new(zigzag(1).unwrap(), 1).unwrap();
        let lam = Multi(vec![vec![0], vec![1]]);
        let mut want = CharacterVector::weight(lam.clone());
        want.add_term(Multi(vec![vec![1], vec![0]]), &GradedSuperScalar::qpi(1, 1));
        assert_eq!(char_standard_tableaux(&fam, &lam).unwrap(), want);
        assert_eq!(char_standard_lr(&fam, &lam, &Lr::new()).unwrap(), want);
    }

    #[test]
    fn methods_agree_at_degree_two() {
        let fam = Family::new(zigzag(1).unwrap(), 2).unwrap();
        let lr = Lr::new();
        for lam in multipartitions(2, 2, 2) {
            assert_eq!(
                char_standard_tableaux(&fam, &lam).unwrap(),
                char_standard_lr(&fam, &lam, &lr).unwrap(),
                "{lam}"
            );
        }
    }
}
