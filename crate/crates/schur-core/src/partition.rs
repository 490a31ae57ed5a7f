//! Partitions and multipartitions with the dominance orders used throughout.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// All compositions of `d` into exactly `parts` nonnegative parts (lexicographically decreasing).
pub fn compositions(parts: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; parts];
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k + 1 == cur.len() {
            cur[k] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[k] = v;
            rec(k + 1, left - v, cur, out);
        }
    }
    if parts == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All partitions of `d` with at most `max_parts` nonzero parts, padded to length `max_parts`,
/// in lexicographically decreasing order.
pub fn partitions(d: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        left: usize,
        maxv: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        len: usize,
    ) {
        if left == 0 {
            let mut p = cur.clone();
            p.resize(len, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=maxv.min(left)).rev() {
            cur.push(v);
            rec(left - v, v, slots - 1, cur, out, len);
            cur.pop();
        }
    }
    rec(d, d, max_parts, &mut cur, &mut out, max_parts);
    out
}

pub fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

/// Remove trailing zeros.
pub fn trim(p: &[usize]) -> Vec<usize> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Pad or truncate (only zeros may be dropped) to `n` parts.
pub fn pad(p: &[usize], n: usize) -> Result<Vec<usize>> {
    let t = trim(p);
    if t.len() > n {
        return Err(Error::Invalid(alloc::format!(
            "{t:?} has more than {n} nonzero parts"
        )));
    }
    let mut v = t;
    v.resize(n, 0);
    Ok(v)
}

/// Conjugate partition (trimmed).
pub fn transpose(p: &[usize]) -> Vec<usize> {
    let t = trim(p);
    let m = t.first().copied().unwrap_or(0);
    (1..=m)
        .map(|c| t.iter().filter(|&&x| x >= c).count())
        .collect()
}

/// `a ⊵ b` in the dominance order on compositions of equal size.
pub fn dominates(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 0..len {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    sa == sb
}

/// Dominance as a partial order: `Some(Less)` means `a ◁ b`.
pub fn dominance_cmp(a: &[usize], b: &[usize]) -> Option<Ordering> {
    let ab = dominates(a, b);
    let ba = dominates(b, a);
    match (ab, ba) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        _ => None,
    }
}

/// `a ⊴_I b` for I-indexed compositions: tail sums from the top color down are bounded.
pub fn color_dominated(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in (0..len).rev() {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// An I-indexed tuple of compositions, each padded to the same number of rows.
/// Used for Λ^I(n,d) (weights) and Λ^I_+(n,d) (multipartitions).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multi(pub Vec<Vec<usize>>);

impl Multi {
    pub fn new(comps: Vec<Vec<usize>>) -> Self {
        Multi(comps)
    }
    /// Pad every component to `n` rows; fails if a component has too many nonzero parts.
    pub fn padded(comps: &[Vec<usize>], n: usize) -> Result<Self> {
        Ok(Multi(
            comps
                .iter()
                .map(|c| pad(c, n))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
    pub fn zero(colors: usize, n: usize) -> Self {
        Multi(vec![vec![0; n]; colors])
    }
    pub fn colors(&self) -> usize {
        self.0.len()
    }
    pub fn rows(&self) -> usize {
        self.0.first().map_or(0, |c| c.len())
    }
    pub fn comp(&self, i: usize) -> &[usize] {
        &self.0[i]
    }
    pub fn size(&self) -> usize {
        self.0.iter().map(|c| size(c)).sum()
    }
    /// ∥λ∥ = (|λ^(0)|, ..., |λ^(ℓ)|).
    pub fn norm(&self) -> Vec<usize> {
        self.0.iter().map(|c| size(c)).collect()
    }
    pub fn is_multipartition(&self) -> bool {
        self.0.iter().all(|c| is_partition(c))
    }
    /// Trimmed components, e.g. for serialization.
    pub fn trimmed(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|c| trim(c)).collect()
    }
    /// Nodes (i, r, s) in the row-major order over components, 0-based.
    pub fn nodes(&self) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            for (r, &len) in c.iter().enumerate() {
                for s in 0..len {
                    v.push((i, r, s));
                }
            }
        }
        v
    }
    /// The partial order ≤ on multipartitions of equal size: ∥·∥ strictly below in ⊴_I,
    /// or equal ∥·∥ and componentwise dominance.
    pub fn compare(&self, other: &Multi) -> Result<Option<Ordering>> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(alloc::format!("{self} vs {other}")));
        }
        if self == other {
            return Ok(Some(Ordering::Equal));
        }
        let (na, nb) = (self.norm(), other.norm());
        if na != nb {
            if color_dominated(&na, &nb) {
                return Ok(Some(Ordering::Less));
            }
            if color_dominated(&nb, &na) {
                return Ok(Some(Ordering::Greater));
            }
            return Ok(None);
        }
        let mut le = true;
        let mut ge = true;
        for (a, b) in self.0.iter().zip(&other.0) {
            le &= dominates(b, a);
            ge &= dominates(a, b);
        }
        Ok(match (le, ge) {
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (true, true) => Some(Ordering::Equal),
            _ => None,
        })
    }
    /// Strictly greater in the order ≤.
    pub fn gt(&self, other: &Multi) -> bool {
        matches!(self.compare(other), Ok(Some(Ordering::Greater)))
    }
    /// Key of a linear extension of ≤.
    pub fn linear_key(&self) -> (usize, usize, Vec<Vec<usize>>) {
        let f: usize = self
            .norm()
            .iter()
            .enumerate()
            .map(|(j, &v)| (j + 1) * v)
            .sum();
        let g: usize = self
            .0
            .iter()
            .map(|c| {
                let mut acc = 0;
                let mut pre = 0;
                for &x in c {
                    pre += x;
                    acc += pre;
                }
                acc
            })
            .sum();
        (f, g, self.0.clone())
    }
}

impl fmt::Display for Multi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.trimmed().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c.is_empty() {
                f.write_str("∅")?;
            } else {
                f.write_str("(")?;
                for (k, x) in c.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Multi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Λ^I(n,d): all I-indexed compositions with `colors` components of `n` parts each.
pub fn multi_compositions(colors: usize, n: usize, d: usize) -> Vec<Multi> {
    compositions(colors * n, d)
        .into_iter()
        .map(|flat| {
            Multi(
                flat.chunks(n.max(1))
                    .map(|c| c.to_vec())
                    .take(colors)
                    .collect(),
            )
        })
        .map(|m: Multi| {
            if n == 0 {
                Multi(vec![Vec::new(); colors])
            } else {
                m
            }
        })
        .collect()
}

/// Λ^I_+(n,d) sorted increasingly along a linear extension of ≤.
pub fn multipartitions(colors: usize, n: usize, d: usize) -> Vec<Multi> {
    fn rec(i: usize, per: &[Vec<Vec<usize>>], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Multi>) {
        if i == per.len() {
            out.push(Multi(cur.clone()));
            return;
        }
        for p in &per[i] {
            cur.push(p.clone());
            rec(i + 1, per, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for norm in compositions(colors, d) {
        let per: Vec<Vec<Vec<usize>>> = norm.iter().map(|&k| partitions(k, n)).collect();
        rec(0, &per, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|m| m.linear_key());
    out
}

/// Multinomial-style factorial as u128 (callers use small arguments only).
pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}
