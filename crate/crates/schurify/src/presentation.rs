//! JSON presentation files for based algebras.
//!
//! ```json
//! {"name": "…", "basis": ["e0", "e1", "u"],
//!  "kappa": [{"a": "e0", "c": "e0", "out": {"e0": 1}}],
//!  "degree": {"u": 1}, "parity": {"u": 1},
//!  "heredity": {"order": [[0, 1]], "X": {"0": ["e0"]}, "Y": {"0": ["e0"]},
//!               "e": {"0": "e0"}, "a": ["e0"], "tau": {"e0": "e0"}}}
//! ```
//! Unlisted products are zero and unlisted degrees or parities are 0; `tau` is optional.

use std::collections::BTreeMap;
use std::path::Path;

use schur_core::algebra::{BasedAlgebra, HeredityDecl, Superalgebra};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Product {
    pub a: String,
    pub c: String,
    pub out: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeredityData {
    /// Pairs [i, j] meaning i < j.
    pub order: Vec<[usize; 2]>,
    #[serde(rename = "X")]
    pub x: BTreeMap<String, Vec<String>>,
    #[serde(rename = "Y")]
    pub y: BTreeMap<String, Vec<String>>,
    pub e: BTreeMap<String, String>,
    /// Basis of the subalgebra 𝔞.
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    #[serde(default)]
    pub name: String,
    pub basis: Vec<String>,
    pub kappa: Vec<Product>,
    #[serde(default)]
    pub degree: BTreeMap<String, i64>,
    #[serde(default)]
    pub parity: BTreeMap<String, u8>,
    pub heredity: HeredityData,
}

impl Presentation {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
    }

    /// Validate and build the based algebra.
    pub fn build(&self) -> Result<BasedAlgebra, CliError> {
        let index: BTreeMap<&str, usize> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.as_str(), i))
            .collect();
        if index.len() != self.basis.len() {
            return Err(CliError::Format("repeated basis label".into()));
        }
        let idx = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| CliError::Format(format!("unknown basis label '{s}'")))
        };
        for k in self.degree.keys().chain(self.parity.keys()) {
            idx(k)?;
        }
        let degree = self
            .basis
            .iter()
            .map(|b| self.degree.get(b).copied().unwrap_or(0))
            .collect();
        let parity = self
            .basis
            .iter()
            .map(|b| self.parity.get(b).copied().unwrap_or(0))
            .collect();
        let products = self
            .kappa
            .iter()
            .map(|p| {
                Ok((
                    idx(&p.a)?,
                    idx(&p.c)?,
                    p.out
                        .iter()
                        .map(|(b, v)| Ok((idx(b)?, *v)))
                        .collect::<Result<Vec<_>, CliError>>()?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let alg = Superalgebra::new(self.basis.clone(), degree, parity, products)?;
        if let Some((a, b, c)) = alg.associativity_witness() {
            return Err(CliError::Format(format!(
                "not associative: ({}·{})·{}",
                self.basis[a], self.basis[b], self.basis[c]
            )));
        }
        let h = &self.heredity;
        let colors = h.e.len();
        let per_label =
            |m: &BTreeMap<String, Vec<String>>, what: &str| -> Result<Vec<Vec<usize>>, CliError> {
                (0..colors)
                    .map(|i| {
                        let list = m.get(&i.to_string()).ok_or_else(|| {
                            CliError::Format(format!("{what} has no entry for label {i}"))
                        })?;
                        list.iter().map(|s| idx(s)).collect()
                    })
                    .collect()
            };
        if h.x.len() != colors || h.y.len() != colors {
            return Err(CliError::Format(
                "X, Y and e must have one entry per label".into(),
            ));
        }
        let e = (0..colors)
            .map(|i| {
                idx(h
                    .e
                    .get(&i.to_string())
                    .ok_or_else(|| CliError::Format(format!("e has no entry for label {i}")))?)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let tau = match &h.tau {
            None => None,
            Some(t) => {
                let mut v = vec![usize::MAX; self.basis.len()];
                for (a, b) in t {
                    v[idx(a)?] = idx(b)?;
                }
                if v.contains(&usize::MAX) {
                    return Err(CliError::Format(
                        "tau must be defined on every basis element".into(),
                    ));
                }
                Some(v)
            }
        };
        let decl = HeredityDecl {
            colors,
            order: h.order.iter().map(|p| (p[0], p[1])).collect(),
            x: per_label(&h.x, "X")?,
            y: per_label(&h.y, "Y")?,
            e,
            a_basis: h.a.iter().map(|s| idx(s)).collect::<Result<_, _>>()?,
            tau,
        };
        Ok(BasedAlgebra::new(&self.name, alg, decl)?)
    }

    /// The presentation of an already built algebra.
    pub fn of(b: &BasedAlgebra) -> Self {
        let labels = &b.alg.labels;
        let name = |k: usize| labels[k].clone();
        let kappa = b
            .alg
            .products()
            .into_iter()
            .map(|(a, c, out)| Product {
                a: name(a),
                c: name(c),
                out: out.into_iter().map(|(k, v)| (name(k), v)).collect(),
            })
            .collect();
        let nonzero = |v: &[i64]| {
            v.iter()
                .enumerate()
                .filter(|(_, d)| **d != 0)
                .map(|(k, d)| (name(k), *d))
                .collect()
        };
        let parity: Vec<i64> = b.alg.parity.iter().map(|&p| i64::from(p)).collect();
        let lists = |l: &[Vec<usize>]| {
            l.iter()
                .enumerate()
                .map(|(i, v)| (i.to_string(), v.iter().map(|&k| name(k)).collect()))
                .collect()
        };
        let mut order = Vec::new();
        for i in 0..b.colors {
            for j in 0..b.colors {
                if b.less[i][j] {
                    order.push([i, j]);
                }
            }
        }
        Presentation {
            name: b.name.clone(),
            basis: labels.clone(),
            kappa,
            degree: nonzero(&b.alg.degree),
            parity: nonzero(&parity)
                .into_iter()
                .map(|(k, v): (String, i64)| (k, v as u8))
                .collect(),
            heredity: HeredityData {
                order,
                x: lists(&b.x),
                y: lists(&b.y),
                e: b.e
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (i.to_string(), name(k)))
                    .collect(),
                a: (0..b.dim()).filter(|&k| b.in_a[k]).map(name).collect(),
                tau: b.tau.as_ref().map(|t| {
                    t.iter()
                        .enumerate()
                        .map(|(k, &v)| (name(k), name(v)))
                        .collect()
                }),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schur_core::algebra::{semisimple, zigzag};

    #[test]
    fn built_ins_round_trip() {
        for b in [
            zigzag(1).unwrap(),
            zigzag(3).unwrap(),
            semisimple(2).unwrap(),
        ] {
            let p = Presentation::of(&b);
            let text = serde_json::to_string(&p).unwrap();
            let q: Presentation = serde_json::from_str(&text).unwrap();
            assert_eq!(p, q);
            let c = q.build().unwrap();
            assert_eq!(c.alg, b.alg);
            assert_eq!(
                (c.x.clone(), c.y.clone(), c.e.clone(), c.tau.clone()),
                (b.x.clone(), b.y.clone(), b.e.clone(), b.tau.clone())
            );
            assert_eq!(c.less, b.less);
        }
    }

    #[test]
    fn rejects_bad_presentations() {
        let mut p = Presentation::of(&zigzag(1).unwrap());
        p.kappa[0].out.insert("nope".into(), 1);
        assert!(p.build().is_err());
        let mut p = Presentation::of(&zigzag(1).unwrap());
        p.heredity.order = vec![[1, 0]];
        assert!(p.build().is_err());
        let mut p = Presentation::of(&zigzag(1).unwrap());
        p.kappa.retain(|k| !(k.a == "e0" && k.c == "e0"));
        assert!(p.build().is_err());
    }
}
