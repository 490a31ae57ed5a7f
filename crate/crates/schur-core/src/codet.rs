//! Codeterminants B^λ_{S,T} = 𝒳_S 𝒴_T and the passage from η-basis elements to codeterminants.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Multi;
use crate::schur::{canonicalize, single, Elem, Family, Orbit, Triple};
use crate::tableau::{Letter, Tableau};

impl Family {
    /// Word (x^S, l^S, l^λ) in reading order: node (i, r, s) with entry l^x gives (x, l, r+1).
    pub fn x_word(&self, s: &Tableau) -> Vec<Triple> {
        let mut w = Vec::new();
        for comp in &s.rows {
            for (r, row) in comp.iter().enumerate() {
                for a in row {
                    w.push(self.triple(a.c as usize, a.l as usize, r + 1));
                }
            }
        }
        w
    }
    /// Word (y^T, l^λ, l^T): node (i, r, s) with entry l^y gives (y, r+1, l).
    pub fn y_word(&self, t: &Tableau) -> Vec<Triple> {
        let mut w = Vec::new();
        for comp in &t.rows {
            for (r, row) in comp.iter().enumerate() {
                for a in row {
                    w.push(self.triple(a.c as usize, r + 1, a.l as usize));
                }
            }
        }
        w
    }
    fn word_elem(&self, w: &[Triple]) -> Result<Elem> {
        let (o, sign) = canonicalize(w)?;
        // X and Y consist of elements of B_a and odd elements, so ξ = η here.
        debug_assert!(self.factorial_c(&o) == num_bigint::BigInt::from(1));
        Ok(single(o, sign))
    }
    /// 𝒳_S as an η-basis element.
    pub fn x_elem(&self, s: &Tableau) -> Result<Elem> {
        self.check_tableau(s, true)?;
        self.word_elem(&self.x_word(s))
    }
    /// 𝒴_T as an η-basis element.
    pub fn y_elem(&self, t: &Tableau) -> Result<Elem> {
        self.check_tableau(t, false)?;
        self.word_elem(&self.y_word(t))
    }
    fn check_tableau(&self, t: &Tableau, x_side: bool) -> Result<()> {
        let alpha = if x_side { &self.xa } else { &self.ya };
        if t.shape.colors() != self.colors() || t.shape.rows() > self.n {
            return Err(Error::SizeMismatch(
                "tableau shape does not match the algebra".into(),
            ));
        }
        if !t.is_valid(alpha)
            || t.reading_word()
                .iter()
                .any(|a| a.l == 0 || a.l as usize > self.n)
        {
            return Err(Error::Invalid(
                "tableau entries are not in the colored alphabet".into(),
            ));
        }
        Ok(())
    }
    /// B^λ_{S,T} = 𝒳_S 𝒴_T.
    pub fn codeterminant(&self, s: &Tableau, t: &Tableau) -> Result<Elem> {
        if s.shape != t.shape {
            return Err(Error::SizeMismatch(
                "codeterminant tableaux of different shapes".into(),
            ));
        }
        Ok(self.mul(&self.x_elem(s)?, &self.y_elem(t)?))
    }

    /// Write η_o = sign · B^μ_{S,T} with μ a multipartition and S, T row-standard.
    pub fn orbit_to_codet(&self, o: &Orbit) -> Result<(Tableau, Tableau, i8)> {
        let d = o.len();
        if self.n < d {
            return Err(Error::NeedNAtLeastD { n: self.n, d });
        }
        let colors = self.colors();
        // Rows per component: (length, x letter, y letter).
        let mut rows: Vec<Vec<(usize, Letter, Letter)>> = vec![Vec::new(); colors];
        let mut k = 0;
        while k < o.len() {
            let mut m = 1;
            while k + m < o.len() && o[k + m] == o[k] {
                m += 1;
            }
            let t = o[k];
            let (i, x, y) = self.cell(&t);
            let xl = Letter::new(t.r as usize, x);
            let yl = Letter::new(t.s as usize, y);
            if !self.base.is_odd(x) && !self.base.is_odd(y) {
                rows[i].push((m, xl, yl));
            } else {
                for _ in 0..m {
                    rows[i].push((1, xl, yl));
                }
            }
            k += m;
        }
        let mut shape = Vec::with_capacity(colors);
        let mut srows = Vec::with_capacity(colors);
        let mut trows = Vec::with_capacity(colors);
        for comp in rows.iter_mut() {
            comp.sort_by(|a, b| b.0.cmp(&a.0));
            shape.push(comp.iter().map(|r| r.0).collect::<Vec<_>>());
            srows.push(comp.iter().map(|r| vec![r.1; r.0]).collect::<Vec<_>>());
            trows.push(comp.iter().map(|r| vec![r.2; r.0]).collect::<Vec<_>>());
        }
        let mu = Multi::padded(&shape, self.n)?;
        let s = Tableau::from_rows(mu.clone(), srows)?;
        let t = Tableau::from_rows(mu, trows)?;
        let b = self.codeterminant(&s, &t)?;
        let want = single(o.clone(), 1);
        let neg: Elem = want.iter().map(|(k, v)| (k.clone(), -v)).collect();
        let sign = if b == want {
            1
        } else if b == neg {
            -1
        } else {
            return Err(Error::Internal(
                "η element is not a signed codeterminant".into(),
            ));
        };
        Ok((s, t, sign))
    }

    /// The tableau S'' of shape μ with 𝒳_{S''} = ± η_o for an orbit whose s-word has the
    /// content of l^μ (X side), returned with the sign.
    pub fn orbit_to_x_tableau(&self, o: &Orbit, mu: &Multi) -> Result<(Tableau, i8)> {
        let mut rows: Vec<Vec<Vec<Letter>>> = (0..self.colors())
            .map(|i| vec![Vec::new(); mu.comp(i).len()])
            .collect();
        for t in o {
            let (i, x, _) = self.cell(t);
            let r = t.s as usize - 1;
            rows[i]
                .get_mut(r)
                .ok_or_else(|| Error::Internal("row out of range".into()))?
                .push(Letter::new(t.r as usize, x));
        }
        let s = Tableau::from_rows(mu.clone(), rows)?.row_standardize(&self.xa);
        let (o2, sign) = canonicalize(&self.x_word(&s))?;
        if &o2 != o {
            return Err(Error::Internal(
                "orbit is not an 𝒳 element of the given shape".into(),
            ));
        }
        Ok((s, sign))
    }

    /// Y-side analogue of [`Family::orbit_to_x_tableau`]: rows are read from the r-word.
    pub fn orbit_to_y_tableau(&self, o: &Orbit, mu: &Multi) -> Result<(Tableau, i8)> {
        let mut rows: Vec<Vec<Vec<Letter>>> = (0..self.colors())
            .map(|i| vec![Vec::new(); mu.comp(i).len()])
            .collect();
        for t in o {
            let (i, _, y) = self.cell(t);
            let r = t.r as usize - 1;
            rows[i]
                .get_mut(r)
                .ok_or_else(|| Error::Internal("row out of range".into()))?
                .push(Letter::new(t.s as usize, y));
        }
        let t = Tableau::from_rows(mu.clone(), rows)?.row_standardize(&self.ya);
        let (o2, sign) = canonicalize(&self.y_word(&t))?;
        if &o2 != o {
            return Err(Error::Internal(
                "orbit is not a 𝒴 element of the given shape".into(),
            ));
        }
        Ok((t, sign))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::zigzag;
    use crate::schur::SchurAlgebra;
    use crate::tableau::{enumerate_tableaux, Flavor};

    #[test]
    fn initial_codeterminant_is_idempotent() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        for lam in crate::partition::multipartitions(2, 2, 2) {
            let tl = Tableau::initial(&lam, &f.xa);
            let b = f
                .codeterminant(&tl, &Tableau::initial(&lam, &f.ya))
                .unwrap();
            assert_eq!(b, single(f.idempotent(&lam), 1));
        }
    }

    #[test]
    fn every_orbit_is_a_signed_codeterminant() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        for o in &t.basis {
            let (s, tt, _) = t.fam.orbit_to_codet(o).unwrap();
            assert!(s.shape.is_multipartition());
            assert!(s.is_row_standard(&t.fam.xa) && tt.is_row_standard(&t.fam.ya));
        }
    }

    #[test]
    fn idempotent_action_on_x_elements() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let f = &t.fam;
        for lam in crate::partition::multipartitions(2, 2, 2) {
            for s in enumerate_tableaux(&lam, 2, &f.xa, Flavor::Std) {
                let x = f.x_elem(&s).unwrap();
                let alpha = s.weight(&f.xa, 2);
                for mu in &t.weights {
                    let e = single(f.idempotent(mu), 1);
                    let want = if *mu == alpha { x.clone() } else { Elem::new() };
                    assert_eq!(f.mul(&e, &x), want);
                }
                // e_λ 𝒳_S = δ_{S, T^λ} 𝒳_S.
                let e = single(f.idempotent(&lam), 1);
                let p = f.mul(&e, &x);
                if s == Tableau::initial(&lam, &f.xa) {
                    assert_eq!(p, x);
                } else if alpha != lam {
                    assert!(p.is_empty());
                }
            }
        }
    }
}
