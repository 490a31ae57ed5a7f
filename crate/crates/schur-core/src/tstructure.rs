//! The heredity data of T^A_a(n,d): labels Λ^I_+(n,d), X(λ) = {𝒳_S}, Y(λ) = {𝒴_T}.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::heredity::{self, HeredityBasis, HeredityInput, Report, Tables};
use crate::partition::{multipartitions, Multi};
use crate::schur::SchurAlgebra;
use crate::tableau::{enumerate_tableaux, Flavor, Tableau};

/// Labels and tableau lists of the codeterminant heredity data.
#[derive(Clone, Debug)]
pub struct TStructure {
    /// Multipartitions sorted by a linear extension of ≤.
    pub labels: Vec<Multi>,
    /// Std^X(λ) with the initial tableau first.
    pub xs: Vec<Vec<Tableau>>,
    /// Std^Y(λ) with the initial tableau first.
    pub ys: Vec<Vec<Tableau>>,
    pub input: HeredityInput,
}

impl TStructure {
    pub fn label_index(&self, lam: &Multi) -> Option<usize> {
        self.labels.iter().position(|l| l == lam)
    }
    pub fn x_index(&self, i: usize, s: &Tableau) -> Option<usize> {
        self.xs[i].iter().position(|t| t == s)
    }
    pub fn y_index(&self, i: usize, t: &Tableau) -> Option<usize> {
        self.ys[i].iter().position(|u| u == t)
    }
}

fn initial_first(mut v: Vec<Tableau>, init: Tableau) -> Result<Vec<Tableau>> {
    let k = v
        .iter()
        .position(|t| *t == init)
        .ok_or_else(|| Error::Internal("initial tableau is not standard".into()))?;
    let t = v.remove(k);
    v.insert(0, t);
    Ok(v)
}

impl SchurAlgebra {
    /// Multipartitions Λ^I_+(n,d) in increasing linear-extension order.
    pub fn labels(&self) -> Vec<Multi> {
        let mut labels = multipartitions(self.fam.colors(), self.fam.n, self.d);
        labels.sort_by_key(|l| l.linear_key());
        labels
    }

    /// Heredity data given by codeterminants; requires n ≥ d.
    pub fn structure(&self) -> Result<TStructure> {
        let (n, d) = (self.fam.n, self.d);
        if n < d {
            return Err(Error::NeedNAtLeastD { n, d });
        }
        let f = &self.fam;
        let labels = self.labels();
        let mut xs = Vec::with_capacity(labels.len());
        let mut ys = Vec::with_capacity(labels.len());
        let mut xv = Vec::with_capacity(labels.len());
        let mut yv = Vec::with_capacity(labels.len());
        let mut e = Vec::with_capacity(labels.len());
        for lam in &labels {
            let sx = initial_first(
                enumerate_tableaux(lam, n, &f.xa, Flavor::Std),
                Tableau::initial(lam, &f.xa),
            )?;
            let sy = initial_first(
                enumerate_tableaux(lam, n, &f.ya, Flavor::Std),
                Tableau::initial(lam, &f.ya),
            )?;
            xv.push(
                sx.iter()
                    .map(|s| f.x_elem(s).map(|x| self.to_vector(&x)))
                    .collect::<Result<Vec<_>>>()?,
            );
            yv.push(
                sy.iter()
                    .map(|t| f.y_elem(t).map(|y| self.to_vector(&y)))
                    .collect::<Result<Vec<_>>>()?,
            );
            e.push(
                self.index_of(&f.idempotent(lam))
                    .ok_or_else(|| Error::Internal("idempotent missing from basis".into()))?,
            );
            xs.push(sx);
            ys.push(sy);
        }
        let greater = (0..labels.len())
            .map(|j| {
                (0..labels.len())
                    .map(|i| labels[j].gt(&labels[i]))
                    .collect()
            })
            .collect();
        let names = labels.iter().map(|l| l.to_string()).collect();
        let input = HeredityInput {
            labels: labels.len(),
            greater,
            x: xv,
            y: yv,
            e,
            names,
        };
        Ok(TStructure {
            labels,
            xs,
            ys,
            input,
        })
    }

    /// Verify the codeterminant heredity data on T.
    pub fn verify_heredity(&self) -> Result<(TStructure, Report, Option<(HeredityBasis, Tables)>)> {
        let st = self.structure()?;
        let (rep, extra) = heredity::verify(self, &st.input);
        Ok((st, rep, extra))
    }
}

/// Gram matrix of the standard module Δ(λ): rows indexed by Std^Y(λ), columns by Std^X(λ).
pub fn gram(tables: &Tables, label: usize) -> &[Vec<BigInt>] {
    &tables.f[label]
}
