//! JSON and CSV encodings. Integers are written as strings so that no reader loses precision.

use std::str::FromStr;

use num_bigint::BigInt;
use schur_core::charac::CharacterVector;
use schur_core::decomp::DecompMatrix;
use schur_core::partition::{pad, Multi};
use schur_core::ring::GradedSuperScalar;
use schur_core::schur::{add_to, Elem, Family, Orbit};
use schur_core::straighten::Expansion;
use schur_core::tableau::Tableau;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

/// A multipartition as its trimmed components, e.g. `[[], [1]]`.
pub fn multi_json(m: &Multi) -> Value {
    json!(m.trimmed())
}

/// Parse `[[2], [1, 1]]`, padding each component to `n` rows.
pub fn parse_multi(v: &Value, colors: usize, n: usize) -> Result<Multi, CliError> {
    let comps: Vec<Vec<usize>> = serde_json::from_value(v.clone())
        .map_err(|e| CliError::Usage(format!("multipartition {v}: {e}")))?;
    if comps.len() != colors {
        return Err(CliError::Usage(format!(
            "multipartition {v} needs {colors} components"
        )));
    }
    let m = Multi(
        comps
            .iter()
            .map(|c| pad(c, n))
            .collect::<Result<Vec<_>, _>>()?,
    );
    if !m.is_multipartition() {
        return Err(CliError::Usage(format!("{v} is not a multipartition")));
    }
    Ok(m)
}

/// One entry (b, r, s) of a triple word; r and s are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleJson {
    pub b: String,
    pub r: usize,
    pub s: usize,
}

/// A term of an element in the η basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub orbit: Vec<TripleJson>,
    pub coeff: String,
}

pub fn orbit_json(f: &Family, o: &Orbit) -> Vec<TripleJson> {
    o.iter()
        .map(|t| TripleJson {
            b: f.base.alg.labels[t.b as usize].clone(),
            r: t.r as usize,
            s: t.s as usize,
        })
        .collect()
}

/// Parse a triple word into its canonical orbit and the reordering sign.
pub fn parse_orbit(f: &Family, word: &[TripleJson]) -> Result<(Orbit, i8), CliError> {
    let mut b = Vec::with_capacity(word.len());
    for t in word {
        b.push(
            f.base
                .alg
                .index_of(&t.b)
                .ok_or_else(|| CliError::Usage(format!("unknown basis element '{}'", t.b)))?,
        );
    }
    let r: Vec<usize> = word.iter().map(|t| t.r).collect();
    let s: Vec<usize> = word.iter().map(|t| t.s).collect();
    f.xi_word(&b, &r, &s)
        .map_err(|e| CliError::Usage(format!("triple word: {e}")))
}

pub fn elem_json(f: &Family, x: &Elem) -> Vec<TermJson> {
    x.iter()
        .map(|(o, c)| TermJson {
            orbit: orbit_json(f, o),
            coeff: c.to_string(),
        })
        .collect()
}

/// Parse a list of terms; orbits of degree other than `d` are rejected.
pub fn parse_elem(f: &Family, d: usize, terms: &[TermJson]) -> Result<Elem, CliError> {
    let mut x = Elem::new();
    for t in terms {
        if t.orbit.len() != d {
            return Err(CliError::Usage(format!(
                "orbit of length {} in degree {d}",
                t.orbit.len()
            )));
        }
        let (o, sign) = parse_orbit(f, &t.orbit)?;
        let c = BigInt::from_str(&t.coeff)
            .map_err(|_| CliError::Usage(format!("coefficient '{}' is not an integer", t.coeff)))?;
        add_to(&mut x, o, &(c * BigInt::from(sign)));
    }
    Ok(x)
}

/// Parse an element from JSON text.
pub fn parse_elem_str(f: &Family, d: usize, text: &str) -> Result<Elem, CliError> {
    let terms: Vec<TermJson> =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("element: {e}")))?;
    parse_elem(f, d, &terms)
}

/// A tableau as its shape and rows of `[r, "color"]` letters per component.
pub fn tableau_json(t: &Tableau, alpha_labels: &[String]) -> Value {
    let rows: Vec<Vec<Vec<Value>>> = t
        .rows
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|row| {
                    row.iter()
                        .map(|a| json!([a.l, alpha_labels[a.c as usize]]))
                        .collect()
                })
                .collect()
        })
        .collect();
    json!({ "shape": multi_json(&t.shape), "rows": rows })
}

/// A scalar in R as its display string and its terms.
pub fn scalar_json(c: &GradedSuperScalar) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .map(|(m, e, v)| json!({ "q": m, "pi": e, "coeff": v.to_string() }))
        .collect();
    json!({ "value": c.to_string(), "terms": terms })
}

pub fn parse_scalar(s: &str) -> Result<GradedSuperScalar, CliError> {
    GradedSuperScalar::from_str(s).map_err(|e| CliError::Format(e.to_string()))
}

pub fn char_json(ch: &CharacterVector) -> Value {
    Value::Array(
        ch.iter()
            .map(|(w, c)| json!({ "weight": multi_json(w), "coeff": c.to_string() }))
            .collect(),
    )
}

pub fn expansion_json(f: &Family, e: &Expansion) -> Value {
    let l = &f.base.alg.labels;
    Value::Array(
        e.iter()
            .map(|((s, t), c)| json!({ "shape": multi_json(&s.shape), "S": tableau_json(s, l), "T": tableau_json(t, l), "coeff": c.to_string() }))
            .collect(),
    )
}

pub fn decomp_json(m: &DecompMatrix) -> Value {
    let entries: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    json!({ "labels": m.labels.iter().map(multi_json).collect::<Vec<_>>(), "entries": entries })
}

/// CSV rows (λ, μ, d_{λ,μ}) with λ and μ as JSON, zero entries included.
pub fn decomp_csv(m: &DecompMatrix) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lambda", "mu", "entry"])?;
    for (a, lam) in m.labels.iter().enumerate() {
        for (b, mu) in m.labels.iter().enumerate() {
            w.write_record([
                multi_json(lam).to_string(),
                multi_json(mu).to_string(),
                m.entries[a][b].to_string(),
            ])?;
        }
    }
    String::from_utf8(
        w.into_inner()
            .map_err(|e| CliError::Format(e.to_string()))?,
    )
    .map_err(|e| CliError::Format(e.to_string()))
}

/// Read back CSV written by [`decomp_csv`].
pub fn parse_decomp_csv(
    text: &str,
    colors: usize,
    n: usize,
) -> Result<Vec<(Multi, Multi, GradedSuperScalar)>, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        if rec.len() != 3 {
            return Err(CliError::Format(
                "decomposition rows have three fields".into(),
            ));
        }
        let lam = parse_multi(&serde_json::from_str(&rec[0])?, colors, n)?;
        let mu = parse_multi(&serde_json::from_str(&rec[1])?, colors, n)?;
        out.push((lam, mu, parse_scalar(&rec[2])?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use schur_core::algebra::zigzag;
    use schur_core::decomp::Source;
    use schur_core::schur::SchurAlgebra;

    #[test]
    fn elements_round_trip() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let mut x = Elem::new();
        for (k, o) in t.basis.iter().enumerate().step_by(17) {
            add_to(&mut x, o.clone(), &BigInt::from(k as i64 - 50));
        }
        let text = serde_json::to_string(&elem_json(&t.fam, &x)).unwrap();
        assert_eq!(parse_elem_str(&t.fam, 2, &text).unwrap(), x);
    }

    #[test]
    fn odd_reordering_changes_sign() {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let w = |r: usize| TripleJson {
            b: "a0_1".into(),
            r,
            s: 1,
        };
        let a = parse_elem(
            &t.fam,
            2,
            &[TermJson {
                orbit: vec![w(1), w(2)],
                coeff: "1".into(),
            }],
        )
        .unwrap();
        let b = parse_elem(
            &t.fam,
            2,
            &[TermJson {
                orbit: vec![w(2), w(1)],
                coeff: "1".into(),
            }],
        )
        .unwrap();
        let sum: Elem = a
            .iter()
            .map(|(k, v)| (k.clone(), v + &b[k]))
            .filter(|(_, v)| *v != BigInt::from(0))
            .collect();
        assert!(sum.is_empty());
        let bad = parse_elem(
            &t.fam,
            2,
            &[TermJson {
                orbit: vec![w(1), w(1)],
                coeff: "1".into(),
            }],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn decomp_csv_round_trips() {
        let labels = vec![Multi(vec![vec![1], vec![0]]), Multi(vec![vec![0], vec![1]])];
        let entries = vec![
            vec![GradedSuperScalar::one(), GradedSuperScalar::zero()],
            vec![GradedSuperScalar::qpi(1, 1), GradedSuperScalar::one()],
        ];
        let m = DecompMatrix {
            labels: labels.clone(),
            entries,
            source: Source::Oracle,
        };
        let text = decomp_csv(&m).unwrap();
        assert!(text.contains("\"[[],[1]]\",\"[[1],[]]\",qπ"), "{text}");
        let rows = parse_decomp_csv(&text, 2, 1).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(
            rows[2],
            (
                labels[1].clone(),
                labels[0].clone(),
                GradedSuperScalar::qpi(1, 1)
            )
        );
    }

    #[test]
    fn scalars_are_strings() {
        let c = GradedSuperScalar::monomial(BigInt::from(3), 2, 1);
        assert_eq!(scalar_json(&c)["terms"][0]["coeff"], json!("3"));
        assert_eq!(parse_scalar(&c.to_string()).unwrap(), c);
    }
}
