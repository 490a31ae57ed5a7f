//! S_d-orbits of triples and the generalized Schur algebra T^A_a(n,d) in its η basis:
//! multiplication, star-product, coproduct and idempotents.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::BasedAlgebra;
use crate::error::{Error, Result};
use crate::heredity::{BasisAlgebra, Vector};
use crate::partition::{multi_compositions, Multi};
use crate::tableau::Alphabet;

/// An entry (b, r, s) of a triple word. The derived order is the fixed total order on
/// B × [1,n] × [1,n]: reversed heredity label, then s, then the Y rank, then r, then the X rank.
/// The fields after `b` are determined by `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    rc: u8,
    pub s: u8,
    yr: u8,
    pub r: u8,
    xr: u8,
    pub b: u16,
    pub odd: bool,
    /// j with e_j b = b.
    pub lv: u8,
    /// j with b e_j = b.
    pub rv: u8,
}

/// Canonical (sorted) representative of an S_d-orbit of triples.
pub type Orbit = Vec<Triple>;

/// Sparse element in the η basis.
pub type Elem = BTreeMap<Orbit, BigInt>;

/// Number of pairs k < l of odd entries with w_k > w_l.
pub fn odd_inversions(word: &[Triple]) -> usize {
    let mut c = 0;
    for (k, a) in word.iter().enumerate() {
        if a.odd {
            c += word[k + 1..].iter().filter(|b| b.odd && *b < a).count();
        }
    }
    c
}

/// Sign relating ξ of a word to ξ of its canonical representative, or an error when an odd
/// triple repeats.
pub fn canonicalize(word: &[Triple]) -> Result<(Orbit, i8)> {
    let sign = if odd_inversions(word).is_multiple_of(2) { 1 } else { -1 };
    let mut o = word.to_vec();
    o.sort_unstable();
    if o.windows(2).any(|w| w[0] == w[1] && w[0].odd) {
        return Err(Error::OddRepetition);
    }
    Ok((o, sign))
}

/// Whether a sorted word satisfies the repetition constraint.
pub fn is_valid_orbit(o: &[Triple]) -> bool {
    o.windows(2)
        .all(|w| w[0] < w[1] || (w[0] == w[1] && !w[0].odd))
}

fn runs(o: &[Triple]) -> Vec<(Triple, usize)> {
    let mut out: Vec<(Triple, usize)> = Vec::new();
    for t in o {
        match out.last_mut() {
            Some((u, c)) if u == t => *c += 1,
            _ => out.push((*t, 1)),
        }
    }
    out
}

fn factorial_big(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Parity of an orbit: number of odd entries mod 2.
pub fn orbit_parity(o: &[Triple]) -> u8 {
    (o.iter().filter(|t| t.odd).count() % 2) as u8
}

/// Parity of the sign of interleaving two sorted words into sorted order.
fn concat_sign(a: &[Triple], b: &[Triple]) -> i8 {
    let mut c = 0usize;
    for x in a.iter().filter(|t| t.odd) {
        c += b.iter().filter(|y| y.odd && *y < x).count();
    }
    if c.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Per basis element data used to build triples.
#[derive(Clone, Debug)]
struct BInfo {
    rc: u8,
    xr: u8,
    yr: u8,
    odd: bool,
    lv: u8,
    rv: u8,
}

/// The family T^A_a(n, ·) for a fixed base algebra and n; degree-free operations live here.
#[derive(Clone, Debug)]
pub struct Family {
    pub base: BasedAlgebra,
    pub n: usize,
    info: Vec<BInfo>,
    /// Colored alphabets built from X and Y.
    pub xa: Alphabet,
    pub ya: Alphabet,
    /// Sparse structure constants as (b, κ).
    kappa: Vec<Vec<Vec<(u16, i64)>>>,
}

impl Family {
    /// Requires every basis element to be a product xy of heredity data elements.
    pub fn new(base: BasedAlgebra, n: usize) -> Result<Self> {
        if n == 0 || n > 255 {
            return Err(Error::Invalid("n must lie in [1, 255]".into()));
        }
        let colors = base.colors;
        let mut info = Vec::with_capacity(base.dim());
        for b in 0..base.dim() {
            let (i, xr, yr) = base.cell_of(b)?;
            info.push(BInfo {
                rc: (colors - 1 - i) as u8,
                xr: xr as u8,
                yr: yr as u8,
                odd: base.is_odd(b),
                lv: base.left[b] as u8,
                rv: base.right[b] as u8,
            });
        }
        let kappa = (0..base.dim())
            .map(|a| {
                (0..base.dim())
                    .map(|c| {
                        base.alg
                            .mul_basis(a, c)
                            .iter()
                            .map(|&(b, v)| (b as u16, v))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let xa = base.x_alphabet();
        let ya = base.y_alphabet();
        Ok(Family {
            base,
            n,
            info,
            xa,
            ya,
            kappa,
        })
    }

    pub fn colors(&self) -> usize {
        self.base.colors
    }

    /// The triple (b, r, s) with 1-based letters.
    pub fn triple(&self, b: usize, r: usize, s: usize) -> Triple {
        let f = &self.info[b];
        Triple {
            rc: f.rc,
            s: s as u8,
            yr: f.yr,
            r: r as u8,
            xr: f.xr,
            b: b as u16,
            odd: f.odd,
            lv: f.lv,
            rv: f.rv,
        }
    }

    /// (i, x, y) with b = xy, x ∈ X(i), y ∈ Y(i), as basis indices.
    pub fn cell(&self, t: &Triple) -> (usize, usize, usize) {
        let i = self.label(t);
        (
            i,
            self.base.x[i][t.xr as usize],
            self.base.y[i][t.yr as usize],
        )
    }

    /// Heredity label i with b ∈ B(i).
    pub fn label(&self, t: &Triple) -> usize {
        self.colors() - 1 - t.rc as usize
    }

    /// All triples in increasing order.
    pub fn all_triples(&self) -> Vec<Triple> {
        let mut v = Vec::new();
        for b in 0..self.base.dim() {
            for r in 1..=self.n {
                for s in 1..=self.n {
                    v.push(self.triple(b, r, s));
                }
            }
        }
        v.sort_unstable();
        v
    }

    /// Canonical orbit representatives of Tri^B(n,d), in increasing order.
    pub fn orbits(&self, d: usize) -> Vec<Orbit> {
        let all = self.all_triples();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(
            start: usize,
            d: usize,
            all: &[Triple],
            cur: &mut Vec<Triple>,
            out: &mut Vec<Orbit>,
        ) {
            if cur.len() == d {
                out.push(cur.clone());
                return;
            }
            for k in start..all.len() {
                let t = all[k];
                cur.push(t);
                rec(if t.odd { k + 1 } else { k }, d, all, cur, out);
                cur.pop();
            }
        }
        rec(0, d, &all, &mut cur, &mut out);
        out
    }

    /// [T]!_c: factorials of multiplicities of entries with b ∈ B_c.
    pub fn factorial_c(&self, o: &[Triple]) -> BigInt {
        runs(o)
            .into_iter()
            .filter(|(t, _)| self.base.in_c(t.b as usize))
            .fold(BigInt::one(), |acc, (_, m)| acc * factorial_big(m))
    }
    /// [T]!_a.
    pub fn factorial_a(&self, o: &[Triple]) -> BigInt {
        runs(o)
            .into_iter()
            .filter(|(t, _)| self.base.in_a[t.b as usize])
            .fold(BigInt::one(), |acc, (_, m)| acc * factorial_big(m))
    }
    /// [T]!: factorials of all multiplicities.
    pub fn factorial_all(&self, o: &[Triple]) -> BigInt {
        runs(o)
            .into_iter()
            .fold(BigInt::one(), |acc, (_, m)| acc * factorial_big(m))
    }

    /// α(b, r): counts of letters r_k with e_i b_k = b_k.
    pub fn alpha(&self, o: &[Triple]) -> Multi {
        let mut w = Multi::zero(self.colors(), self.n);
        for t in o {
            w.0[t.lv as usize][t.r as usize - 1] += 1;
        }
        w
    }
    /// β(b, s): counts of letters s_k with b_k e_i = b_k.
    pub fn beta(&self, o: &[Triple]) -> Multi {
        let mut w = Multi::zero(self.colors(), self.n);
        for t in o {
            w.0[t.rv as usize][t.s as usize - 1] += 1;
        }
        w
    }
    /// ‖b‖: number of entries in each B(i).
    pub fn norm(&self, o: &[Triple]) -> Vec<usize> {
        let mut v = vec![0; self.colors()];
        for t in o {
            v[self.label(t)] += 1;
        }
        v
    }
    /// (degree, parity) of η_T.
    pub fn grading(&self, o: &[Triple]) -> (i64, u8) {
        let deg = o.iter().map(|t| self.base.alg.degree[t.b as usize]).sum();
        (deg, orbit_parity(o))
    }

    /// The idempotent e_λ = ξ^{e_0^{d_0}⋯e_ℓ^{d_ℓ}}_{l^λ, l^λ} for λ ∈ Λ^I(n,d).
    pub fn idempotent(&self, lam: &Multi) -> Orbit {
        let mut w = Vec::new();
        for i in 0..self.colors() {
            for (r, &m) in lam.comp(i).iter().enumerate() {
                for _ in 0..m {
                    w.push(self.triple(self.base.e[i], r + 1, r + 1));
                }
            }
        }
        w.sort_unstable();
        w
    }

    /// Structure constants f^V of ξ_T ξ_U = Σ_V f^V ξ_V over canonical V.
    pub fn mul_xi(&self, t: &[Triple], u: &[Triple]) -> BTreeMap<Orbit, i64> {
        let mut out = BTreeMap::new();
        if t.len() != u.len() {
            return out;
        }
        let rt = runs(t);
        let ru = runs(u);
        let mut st = State {
            ct: rt.iter().map(|x| x.1).collect(),
            cu: ru.iter().map(|x| x.1).collect(),
            placed_t_odd: Vec::new(),
            placed_u_odd: Vec::new(),
            word: Vec::with_capacity(t.len()),
        };
        self.mul_rec(&rt, &ru, &mut st, 0, 1, &mut out);
        out.retain(|_, v| *v != 0);
        out
    }

    fn mul_rec(
        &self,
        rt: &[(Triple, usize)],
        ru: &[(Triple, usize)],
        st: &mut State,
        parity: usize,
        coef: i64,
        out: &mut BTreeMap<Orbit, i64>,
    ) {
        if st.ct.iter().all(|&c| c == 0) {
            let v = if parity.is_multiple_of(2) { coef } else { -coef };
            *out.entry(st.word.clone()).or_insert(0) += v;
            return;
        }
        let prev = st.word.last().copied();
        for i in 0..rt.len() {
            if st.ct[i] == 0 {
                continue;
            }
            let a = rt[i].0;
            for j in 0..ru.len() {
                if st.cu[j] == 0 {
                    continue;
                }
                let c = ru[j].0;
                if c.r != a.s {
                    continue;
                }
                let ks = &self.kappa[a.b as usize][c.b as usize];
                if ks.is_empty() {
                    continue;
                }
                // Sign contributions of placing a and c at the next position.
                let mut p = 0;
                if a.odd {
                    p += st.placed_t_odd.iter().filter(|x| **x > a).count();
                    p += st.placed_u_odd.len();
                }
                if c.odd {
                    p += st.placed_u_odd.iter().filter(|x| **x > c).count();
                }
                for &(b, k) in ks {
                    let o = self.triple(b as usize, a.r as usize, c.s as usize);
                    if let Some(pv) = prev {
                        if o < pv || (o == pv && o.odd) {
                            continue;
                        }
                    }
                    st.ct[i] -= 1;
                    st.cu[j] -= 1;
                    if a.odd {
                        st.placed_t_odd.push(a);
                    }
                    if c.odd {
                        st.placed_u_odd.push(c);
                    }
                    st.word.push(o);
                    self.mul_rec(rt, ru, st, parity + p, coef * k, out);
                    st.word.pop();
                    if c.odd {
                        st.placed_u_odd.pop();
                    }
                    if a.odd {
                        st.placed_t_odd.pop();
                    }
                    st.ct[i] += 1;
                    st.cu[j] += 1;
                }
            }
        }
    }

    /// η_T η_U in the η basis. Panics if a structure constant is not integral, which would
    /// indicate an internal error.
    pub fn mul_eta(&self, t: &[Triple], u: &[Triple]) -> Vec<(Orbit, BigInt)> {
        let f = self.mul_xi(t, u);
        let ctu = self.factorial_c(t) * self.factorial_c(u);
        f.into_iter()
            .map(|(v, x)| {
                let num = &ctu * BigInt::from(x);
                let den = self.factorial_c(&v);
                let (q, r) = num.div_rem(&den);
                assert!(r.is_zero(), "non-integral η structure constant");
                (v, q)
            })
            .filter(|(_, q)| !q.is_zero())
            .collect()
    }

    /// Product of η-basis elements.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::new();
        for (t, a) in x {
            for (u, b) in y {
                for (v, c) in self.mul_eta(t, u) {
                    add_to(&mut out, v, &(a * b * c));
                }
            }
        }
        out
    }

    /// η_T ⋆ η_U: the concatenation with the multiplicity ratio for B_a and the reordering sign;
    /// zero if an odd entry repeats.
    pub fn star_eta(&self, t: &[Triple], u: &[Triple]) -> Option<(Orbit, BigInt)> {
        let mut v: Orbit = t.iter().chain(u).copied().collect();
        v.sort_unstable();
        if !is_valid_orbit(&v) {
            return None;
        }
        let num = self.factorial_a(&v);
        let den = self.factorial_a(t) * self.factorial_a(u);
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "non-integral star-product coefficient");
        Some((v, q * BigInt::from(concat_sign(t, u))))
    }

    pub fn star(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::new();
        for (t, a) in x {
            for (u, b) in y {
                if let Some((v, c)) = self.star_eta(t, u) {
                    add_to(&mut out, v, &(a * b * c));
                }
            }
        }
        out
    }

    /// ∇(η_T) = Σ ± ([T]!_c / [T¹]!_c [T²]!_c) η_{T¹} ⊗ η_{T²} over splits of the multiset T.
    pub fn coproduct_eta(&self, t: &[Triple]) -> Vec<(Orbit, Orbit, BigInt)> {
        let r = runs(t);
        let mut out = Vec::new();
        let mut take = vec![0usize; r.len()];
        let ct = self.factorial_c(t);
        loop {
            let mut t1 = Vec::new();
            let mut t2 = Vec::new();
            for (k, (x, m)) in r.iter().enumerate() {
                t1.extend(core::iter::repeat_n(*x, take[k]));
                t2.extend(core::iter::repeat_n(*x, m - take[k]));
            }
            let den = self.factorial_c(&t1) * self.factorial_c(&t2);
            let (q, rem) = ct.div_rem(&den);
            assert!(rem.is_zero(), "non-integral coproduct coefficient");
            let sign = concat_sign(&t1, &t2);
            out.push((t1, t2, q * BigInt::from(sign)));
            // Next split.
            let mut k = 0;
            loop {
                if k == r.len() {
                    return out;
                }
                if take[k] < r[k].1 {
                    take[k] += 1;
                    break;
                }
                take[k] = 0;
                k += 1;
            }
        }
    }

    pub fn coproduct(&self, x: &Elem) -> Tensor2 {
        let mut out = Tensor2::new();
        for (t, a) in x {
            for (t1, t2, c) in self.coproduct_eta(t) {
                add_to(&mut out, (t1, t2), &(a * c));
            }
        }
        out
    }

    /// ξ of an arbitrary word as ± a canonical orbit (in the ξ basis).
    pub fn xi_word(&self, b: &[usize], r: &[usize], s: &[usize]) -> Result<(Orbit, i8)> {
        if b.len() != r.len() || b.len() != s.len() {
            return Err(Error::SizeMismatch(
                "triple words of different lengths".into(),
            ));
        }
        if r.iter().chain(s).any(|&x| x == 0 || x > self.n)
            || b.iter().any(|&x| x >= self.base.dim())
        {
            return Err(Error::Invalid("letter or basis index out of range".into()));
        }
        let w: Vec<Triple> = (0..b.len())
            .map(|k| self.triple(b[k], r[k], s[k]))
            .collect();
        canonicalize(&w)
    }

    /// Display name of an orbit such as `[e0 1 1 | a0_1 1 2]`.
    pub fn orbit_name(&self, o: &[Triple]) -> String {
        let parts: Vec<String> = o
            .iter()
            .map(|t| format!("{} {} {}", self.base.alg.labels[t.b as usize], t.r, t.s))
            .collect();
        format!("[{}]", parts.join(" | "))
    }

    /// The anti-involution τ_{n,d}: η^b_{r,s} ↦ ± η^{τ b}_{s,r}, with sign (−1)^{C(m,2)} for m odd
    /// entries when `super_sign` is set.
    pub fn tau_eta(&self, o: &[Triple], super_sign: bool) -> Result<(Orbit, i8)> {
        let tau = self
            .base
            .tau
            .as_ref()
            .ok_or_else(|| Error::Invalid("no anti-involution".into()))?;
        let w: Vec<Triple> = o
            .iter()
            .map(|t| self.triple(tau[t.b as usize], t.s as usize, t.r as usize))
            .collect();
        let (v, sign) = canonicalize(&w)?;
        let m = o.iter().filter(|t| t.odd).count();
        let extra = if super_sign && (m * (m.saturating_sub(1)) / 2) % 2 == 1 {
            -1
        } else {
            1
        };
        Ok((v, sign * extra))
    }

    pub fn tau(&self, x: &Elem, super_sign: bool) -> Result<Elem> {
        let mut out = Elem::new();
        for (o, c) in x {
            let (v, s) = self.tau_eta(o, super_sign)?;
            add_to(&mut out, v, &(c * BigInt::from(s)));
        }
        Ok(out)
    }
}

struct State {
    ct: Vec<usize>,
    cu: Vec<usize>,
    placed_t_odd: Vec<Triple>,
    placed_u_odd: Vec<Triple>,
    word: Vec<Triple>,
}

/// Element of T(n,d1) ⊗ T(n,d2).
pub type Tensor2 = BTreeMap<(Orbit, Orbit), BigInt>;

/// Add `c` to the entry at `k`, removing zeros.
pub fn add_to<K: Ord>(m: &mut BTreeMap<K, BigInt>, k: K, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(k);
    match e {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// a + s·b.
pub fn axpy_elem(a: &mut Elem, s: &BigInt, b: &Elem) {
    for (k, v) in b {
        add_to(a, k.clone(), &(s * v));
    }
}

pub fn single(o: Orbit, c: impl Into<BigInt>) -> Elem {
    let mut e = Elem::new();
    add_to(&mut e, o, &c.into());
    e
}

/// (a ⊗ b) ⋆ (c ⊗ d) = (−1)^{|b||c|} (a ⋆ c) ⊗ (b ⋆ d).
pub fn star_tensor(fam: &Family, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a, b), u) in x {
        for ((c, d), v) in y {
            let Some((ac, k1)) = fam.star_eta(a, c) else {
                continue;
            };
            let Some((bd, k2)) = fam.star_eta(b, d) else {
                continue;
            };
            let sign = if orbit_parity(b) * orbit_parity(c) == 1 {
                -1
            } else {
                1
            };
            add_to(&mut out, (ac, bd), &(u * v * k1 * k2 * BigInt::from(sign)));
        }
    }
    out
}

/// The algebra T^A_a(n,d) with an index of its η basis.
#[derive(Clone, Debug)]
pub struct SchurAlgebra {
    pub fam: Family,
    pub d: usize,
    pub basis: Vec<Orbit>,
    index: BTreeMap<Orbit, usize>,
    /// Weights Λ^I(n,d) in a fixed order.
    pub weights: Vec<Multi>,
    weight_index: BTreeMap<Multi, usize>,
    lkey: Vec<usize>,
    rkey: Vec<usize>,
}

impl SchurAlgebra {
    pub fn new(base: BasedAlgebra, n: usize, d: usize) -> Result<Self> {
        let fam = Family::new(base, n)?;
        Ok(Self::from_family(fam, d))
    }
    pub fn from_family(fam: Family, d: usize) -> Self {
        let basis = fam.orbits(d);
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, o)| (o.clone(), k))
            .collect();
        let weights = multi_compositions(fam.colors(), fam.n, d);
        let weight_index: BTreeMap<Multi, usize> = weights
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let lkey = basis.iter().map(|o| weight_index[&fam.alpha(o)]).collect();
        let rkey = basis.iter().map(|o| weight_index[&fam.beta(o)]).collect();
        SchurAlgebra {
            fam,
            d,
            basis,
            index,
            weights,
            weight_index,
            lkey,
            rkey,
        }
    }
    pub fn n(&self) -> usize {
        self.fam.n
    }
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
    pub fn index_of(&self, o: &[Triple]) -> Option<usize> {
        self.index.get(o).copied()
    }
    pub fn weight_index(&self, w: &Multi) -> Option<usize> {
        self.weight_index.get(w).copied()
    }
    /// Convert an element to a basis-index vector.
    pub fn to_vector(&self, x: &Elem) -> Vector {
        x.iter()
            .map(|(o, c)| (self.index[o], c.clone()))
            .collect::<BTreeMap<_, _>>()
            .into_iter()
            .collect()
    }
    pub fn to_elem(&self, v: &Vector) -> Elem {
        let mut e = Elem::new();
        for (k, c) in v {
            add_to(&mut e, self.basis[*k].clone(), c);
        }
        e
    }
    /// The identity Σ_λ e_λ over Λ^I(n,d).
    pub fn one(&self) -> Elem {
        let mut e = Elem::new();
        for w in &self.weights {
            add_to(&mut e, self.fam.idempotent(w), &BigInt::one());
        }
        e
    }
}

impl BasisAlgebra for SchurAlgebra {
    fn dim(&self) -> usize {
        self.rank()
    }
    fn basis_mul(&self, a: usize, c: usize) -> Vector {
        let mut v: Vector = self
            .fam
            .mul_eta(&self.basis[a], &self.basis[c])
            .into_iter()
            .map(|(o, x)| (self.index[&o], x))
            .collect();
        v.sort_by_key(|p| p.0);
        v
    }
    fn grading(&self, b: usize) -> (i64, u8) {
        self.fam.grading(&self.basis[b])
    }
    fn left_key(&self, b: usize) -> usize {
        self.lkey[b]
    }
    fn right_key(&self, b: usize) -> usize {
        self.rkey[b]
    }
    fn basis_name(&self, b: usize) -> String {
        self.fam.orbit_name(&self.basis[b])
    }
}

/// Whether all coefficients are ±1 multiples of a single orbit; returns it with the sign.
pub fn as_signed_single(x: &Elem) -> Option<(Orbit, i8)> {
    if x.len() != 1 {
        return None;
    }
    let (o, c) = x.iter().next()?;
    if c.abs().is_one() {
        Some((o.clone(), if c.is_positive() { 1 } else { -1 }))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{semisimple, trivial, zigzag};

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn ranks() {
        assert_eq!(SchurAlgebra::new(trivial(), 2, 1).unwrap().rank(), 4);
        assert_eq!(
            SchurAlgebra::new(zigzag(1).unwrap(), 2, 1).unwrap().rank(),
            20
        );
        // Multisets of size 2 from 20 triples with the 8 odd ones not repeated.
        assert_eq!(
            SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap().rank(),
            202
        );
        for (n, d) in [(2u64, 2u64), (2, 3), (3, 2)] {
            let rank = SchurAlgebra::new(trivial(), n as usize, d as usize)
                .unwrap()
                .rank() as u64;
            assert_eq!(rank, binom(n * n + d - 1, d));
        }
    }

    #[test]
    fn canonical_signs() {
        let f = Family::new(zigzag(1).unwrap(), 2).unwrap();
        let a = f.base.alg.index_of("a0_1").unwrap();
        let (o, s) = f.xi_word(&[a, a], &[1, 1], &[1, 2]).unwrap();
        let (o2, s2) = f.xi_word(&[a, a], &[1, 1], &[2, 1]).unwrap();
        assert_eq!(o, o2);
        assert_eq!(s * s2, -1);
        let (_, s3) = f.xi_word(&[0, 0], &[2, 1], &[1, 1]).unwrap();
        assert_eq!(s3, 1);
        assert!(f.xi_word(&[a, a], &[1, 1], &[1, 1]).is_err());
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        let one = t.one();
        for w in &t.weights {
            let e = single(f.idempotent(w), 1);
            assert_eq!(f.mul(&e, &e), e);
            for w2 in &t.weights {
                if w2 != w {
                    assert!(f.mul(&e, &single(f.idempotent(w2), 1)).is_empty());
                }
            }
        }
        for o in &t.basis {
            let x = single(o.clone(), 1);
            assert_eq!(f.mul(&one, &x), x);
            assert_eq!(f.mul(&x, &one), x);
            for w in &t.weights {
                let e = single(f.idempotent(w), 1);
                let want = if f.alpha(o) == *w {
                    x.clone()
                } else {
                    Elem::new()
                };
                assert_eq!(f.mul(&e, &x), want);
            }
        }
    }

    #[test]
    fn star_examples() {
        let f = Family::new(zigzag(1).unwrap(), 2).unwrap();
        let e0 = single(vec![f.triple(0, 1, 2)], 1);
        let sq = f.star(&e0, &e0);
        assert_eq!(sq, single(vec![f.triple(0, 1, 2); 2], 2));
        let a = f.base.alg.index_of("a0_1").unwrap();
        let x = single(vec![f.triple(a, 1, 2)], 1);
        assert!(f.star(&x, &x).is_empty());
    }

    #[test]
    fn coproduct_degree_one() {
        let f = Family::new(semisimple(2).unwrap(), 2).unwrap();
        let t = vec![f.triple(1, 2, 1)];
        let c = f.coproduct_eta(&t);
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|(_, _, k)| k.is_one()));
    }
}
