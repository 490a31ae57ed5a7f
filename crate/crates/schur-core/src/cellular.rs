//! Idempotent truncations ξ^e T ξ^e and their cellular basis.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::Multi;
use crate::schur::{add_to, Elem, Family, SchurAlgebra};
use crate::tableau::{Alphabet, Tableau};

impl Family {
    /// S ↦ S^τ: apply τ entrywise, turning an X-tableau into a Y-tableau.
    pub fn tau_tableau(&self, s: &Tableau) -> Result<Tableau> {
        let tau = self
            .base
            .tau
            .as_ref()
            .ok_or_else(|| Error::Invalid("no anti-involution".into()))?;
        Ok(s.map_colors(|x| tau[x]))
    }
}

/// Whether every letter of `s` has its vertex in `keep`.
fn within(s: &Tableau, alpha: &Alphabet, keep: &[usize]) -> bool {
    s.reading_word()
        .iter()
        .all(|a| alpha.vertex[a.c as usize].is_some_and(|v| keep.contains(&v)))
}

/// A cellular basis element C^λ_{S,T} = B^λ_{S,T^τ}.
#[derive(Clone, Debug)]
pub struct CellularElement {
    pub s: Tableau,
    pub t: Tableau,
    pub elem: Elem,
}

/// ξ^e T ξ^e for e = Σ_{j ∈ keep} e_j.
#[derive(Clone, Debug)]
pub struct TruncatedSchur<'a> {
    pub t: &'a SchurAlgebra,
    pub keep: Vec<usize>,
    /// Indices of the η-basis elements lying in ξ^e T ξ^e.
    pub basis: Vec<usize>,
    pub xi_e: Elem,
}

impl SchurAlgebra {
    /// ξ^e = Σ e_λ over weights supported on `keep`.
    pub fn truncation_idempotent(&self, keep: &[usize]) -> Elem {
        let mut e = Elem::new();
        for w in &self.weights {
            if (0..self.fam.colors())
                .all(|j| keep.contains(&j) || w.comp(j).iter().all(|&x| x == 0))
            {
                add_to(&mut e, self.fam.idempotent(w), &BigInt::one());
            }
        }
        e
    }

    pub fn truncate(&self, keep: &[usize]) -> Result<TruncatedSchur<'_>> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.iter().any(|&j| j >= self.fam.colors()) {
            return Err(Error::Invalid(
                "truncation idempotent index out of range".into(),
            ));
        }
        let inside = |v: u8| keep.contains(&(v as usize));
        let basis = (0..self.rank())
            .filter(|&k| self.basis[k].iter().all(|t| inside(t.lv) && inside(t.rv)))
            .collect();
        let xi_e = self.truncation_idempotent(&keep);
        Ok(TruncatedSchur {
            t: self,
            keep,
            basis,
            xi_e,
        })
    }
}

impl TruncatedSchur<'_> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Multipartitions λ with some standard X-tableau whose letters all lie in ē.
    pub fn labels(&self) -> Result<Vec<Multi>> {
        let st = self.t.structure()?;
        Ok(st
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                st.xs[*i]
                    .iter()
                    .any(|s| within(s, &self.t.fam.xa, &self.keep))
            })
            .map(|(_, l)| l.clone())
            .collect())
    }

    /// The cellular basis {B^λ_{S,T^τ}} for S, T standard X-tableaux with letters in ē.
    pub fn cellular_basis(&self) -> Result<Vec<CellularElement>> {
        let f = &self.t.fam;
        let st = self.t.structure()?;
        let mut out = Vec::new();
        for (i, _) in st.labels.iter().enumerate() {
            let xs: Vec<&Tableau> = st.xs[i]
                .iter()
                .filter(|s| within(s, &f.xa, &self.keep))
                .collect();
            for s in &xs {
                for t in &xs {
                    let elem = f.codeterminant(s, &f.tau_tableau(t)?)?;
                    out.push(CellularElement {
                        s: (*s).clone(),
                        t: (*t).clone(),
                        elem,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Labels λ with ξ^e L(λ) ≠ 0 over the prime field of characteristic `p` (0 for Q):
    /// the Gram matrix of Δ(λ) restricted to tableaux with letters in ē has nonzero rank.
    pub fn surviving_labels(&self, p: u64) -> Result<Vec<Multi>> {
        let f = &self.t.fam;
        let (st, rep, extra) = self.t.verify_heredity()?;
        let (_, tables) =
            extra.ok_or_else(|| Error::Internal(alloc::format!("{:?}", rep.first_failure())))?;
        let mut out = Vec::new();
        for (i, lam) in st.labels.iter().enumerate() {
            let xs: Vec<usize> = (0..st.xs[i].len())
                .filter(|&k| within(&st.xs[i][k], &f.xa, &self.keep))
                .collect();
            let ys: Vec<usize> = (0..st.ys[i].len())
                .filter(|&k| within(&st.ys[i][k], &f.ya, &self.keep))
                .collect();
            let m: Vec<Vec<BigInt>> = ys
                .iter()
                .map(|&y| xs.iter().map(|&x| tables.f[i][y][x].clone()).collect())
                .collect();
            if !m.is_empty() && linalg::rank(&m, p) > 0 {
                out.push(lam.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::schur::single;
    use crate::tableau::{enumerate_tableaux, Flavor};

    #[test]
    fn full_truncation_is_identity() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let tr = t.truncate(&[0, 1]).unwrap();
        assert_eq!(tr.rank(), t.rank());
        assert_eq!(tr.xi_e, t.one());
    }

    #[test]
    fn tau_maps_x_to_y() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        for lam in t.labels() {
            for s in enumerate_tableaux(&lam, 2, &f.xa, Flavor::Std) {
                let st = f.tau_tableau(&s).unwrap();
                assert!(st.is_standard(&f.ya));
                assert_eq!(
                    f.tau(&f.x_elem(&s).unwrap(), false).unwrap(),
                    f.y_elem(&st).unwrap()
                );
            }
        }
    }

    #[test]
    fn super_tau_is_an_antiautomorphism() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        for a in &t.basis {
            for b in &t.basis {
                let (x, y) = (single(a.clone(), 1), single(b.clone(), 1));
                let lhs = f.tau(&f.mul(&x, &y), true).unwrap();
                assert_eq!(
                    lhs,
                    f.mul(&f.tau(&y, true).unwrap(), &f.tau(&x, true).unwrap())
                );
            }
        }
    }

    #[test]
    fn super_tau_on_x_elements() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        for lam in t.labels() {
            for s in enumerate_tableaux(&lam, 2, &f.xa, Flavor::Std) {
                let m = s.reading_word().iter().filter(|a| f.xa.is_odd(**a)).count();
                let y = f.y_elem(&f.tau_tableau(&s).unwrap()).unwrap();
                let want: Elem = if (m * m.saturating_sub(1) / 2) % 2 == 1 {
                    y.iter().map(|(k, v)| (k.clone(), -v)).collect()
                } else {
                    y
                };
                assert_eq!(f.tau(&f.x_elem(&s).unwrap(), true).unwrap(), want);
            }
        }
    }

    #[test]
    fn tau_is_an_involution() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        for o in &t.basis {
            for sup in [false, true] {
                let x = single(o.clone(), 1);
                assert_eq!(t.fam.tau(&t.fam.tau(&x, sup).unwrap(), sup).unwrap(), x);
            }
        }
    }

    #[test]
    fn zigzag_bar_cellular_basis() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let tr = t.truncate(&[0]).unwrap();
        let cb = tr.cellular_basis().unwrap();
        assert_eq!(cb.len(), tr.rank());
        let x = t.fam.tau(&tr.xi_e, false).unwrap();
        assert_eq!(x, tr.xi_e);
        for sup in [false, true] {
            for c in &cb {
                let other = cb.iter().find(|d| d.s == c.t && d.t == c.s).unwrap();
                assert_eq!(t.fam.tau(&c.elem, sup).unwrap(), other.elem);
            }
        }
        assert_eq!(
            tr.surviving_labels(0).unwrap(),
            tr.labels()
                .unwrap()
                .into_iter()
                .filter(|l| l.comp(1).iter().all(|&v| v == 0))
                .collect::<Vec<_>>()
        );
    }
}
