//! Super RSK: a bijection between S_d-orbits of triples and pairs of standard tableaux of the
//! same multipartition shape, computed color by color.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::partition::Multi;
use crate::schur::{Family, Orbit};
use crate::tableau::{Alphabet, Letter, Tableau};

/// Insert `b` into the rows of `p`; returns the (row, column) of the new cell.
fn insert(p: &mut Vec<Vec<Letter>>, mut b: Letter, alpha: &Alphabet) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == p.len() {
            p.push(vec![b]);
            return (r, 0);
        }
        let row = &mut p[r];
        let pos = row.iter().position(|y| match alpha.cmp(*y, b) {
            Ordering::Greater => true,
            Ordering::Equal => alpha.is_odd(b),
            Ordering::Less => false,
        });
        match pos {
            None => {
                row.push(b);
                return (r, row.len() - 1);
            }
            Some(k) => {
                core::mem::swap(&mut row[k], &mut b);
                r += 1;
            }
        }
    }
}

/// Remove the cell at the end of row `r` and reverse-bump; returns the ejected letter.
fn uninsert(p: &mut Vec<Vec<Letter>>, r: usize, alpha: &Alphabet) -> Letter {
    let mut y = p[r].pop().expect("corner cell");
    for row in p[..r].iter_mut().rev() {
        let k = row
            .iter()
            .rposition(|b| match alpha.cmp(*b, y) {
                Ordering::Less => true,
                Ordering::Equal => alpha.is_odd(y),
                Ordering::Greater => false,
            })
            .expect("reverse bump target");
        core::mem::swap(&mut row[k], &mut y);
    }
    while p.last().is_some_and(|row| row.is_empty()) {
        p.pop();
    }
    y
}

impl Family {
    /// Orbit ↦ (λ, S ∈ Std^X(λ), T ∈ Std^Y(λ)).
    pub fn rsk(&self, o: &Orbit) -> Result<(Multi, Tableau, Tableau)> {
        if self.n < o.len() {
            return Err(Error::NeedNAtLeastD {
                n: self.n,
                d: o.len(),
            });
        }
        let colors = self.colors();
        let mut srows = Vec::with_capacity(colors);
        let mut trows = Vec::with_capacity(colors);
        let mut shape = Vec::with_capacity(colors);
        for i in 0..colors {
            let mut cols: Vec<(Letter, Letter)> = o
                .iter()
                .filter(|t| self.label(t) == i)
                .map(|t| {
                    let (_, x, y) = self.cell(t);
                    (Letter::new(t.r as usize, x), Letter::new(t.s as usize, y))
                })
                .collect();
            cols.sort_by(|a, b| {
                self.xa.cmp(a.0, b.0).then_with(|| {
                    let c = self.ya.cmp(a.1, b.1);
                    if self.xa.is_odd(a.0) {
                        c.reverse()
                    } else {
                        c
                    }
                })
            });
            let mut p: Vec<Vec<Letter>> = Vec::new();
            let mut q: Vec<Vec<Letter>> = Vec::new();
            for (xl, yl) in cols {
                let (r, c) = insert(&mut p, yl, &self.ya);
                if r == q.len() {
                    q.push(Vec::new());
                }
                debug_assert_eq!(q[r].len(), c);
                q[r].push(xl);
            }
            if p.len() > self.n {
                return Err(Error::Internal(
                    "insertion produced more than n rows".into(),
                ));
            }
            shape.push(p.iter().map(|r| r.len()).collect::<Vec<_>>());
            srows.push(q);
            trows.push(p);
        }
        let lam = Multi::padded(&shape, self.n)?;
        let s = Tableau::from_rows(lam.clone(), srows)?;
        let t = Tableau::from_rows(lam.clone(), trows)?;
        Ok((lam, s, t))
    }

    /// Inverse of [`Family::rsk`].
    pub fn rsk_inv(&self, s: &Tableau, t: &Tableau) -> Result<Orbit> {
        if s.shape != t.shape {
            return Err(Error::SizeMismatch("tableaux of different shapes".into()));
        }
        let mut out = Vec::new();
        for i in 0..self.colors() {
            let mut q: Vec<Vec<Letter>> = s.rows[i]
                .iter()
                .filter(|r| !r.is_empty())
                .cloned()
                .collect();
            let mut p: Vec<Vec<Letter>> = t.rows[i]
                .iter()
                .filter(|r| !r.is_empty())
                .cloned()
                .collect();
            while !q.is_empty() {
                // Largest letter of q; the most recently recorded copy is the rightmost one for
                // an even letter and the lowest one for an odd letter.
                let mut best: Option<(usize, Letter)> = None;
                for (r, row) in q.iter().enumerate() {
                    let Some(&last) = row.last() else { continue };
                    let take = match best {
                        None => true,
                        Some((_, b)) => match self.xa.cmp(last, b) {
                            Ordering::Greater => true,
                            Ordering::Equal => self.xa.is_odd(last),
                            Ordering::Less => false,
                        },
                    };
                    if take {
                        best = Some((r, last));
                    }
                }
                let (r, xl) = best.expect("nonempty tableau");
                q[r].pop();
                while q.last().is_some_and(|row| row.is_empty()) {
                    q.pop();
                }
                let yl = uninsert(&mut p, r, &self.ya);
                let b = self
                    .base
                    .xy(
                        i,
                        self.xa.rank[xl.c as usize].unwrap_or(0) as usize,
                        self.ya.rank[yl.c as usize].unwrap_or(0) as usize,
                    )
                    .ok_or_else(|| {
                        Error::Invalid("letters do not form a heredity basis element".into())
                    })?;
                out.push(self.triple(b, xl.l as usize, yl.l as usize));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
