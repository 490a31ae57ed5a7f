//! Round trips of the configuration and element formats.

use num_bigint::BigInt;
use proptest::prelude::*;
use schur_core::algebra::zigzag;
use schur_core::schur::{add_to, Elem, SchurAlgebra};
use schurify::config::{AlgebraSpec, FieldSpec, Method, OutFormat, RunConfig};
use schurify::io::{elem_json, parse_elem_str};

fn algebra() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![
        (1usize..5).prop_map(AlgebraSpec::Zigzag),
        (1usize..5).prop_map(AlgebraSpec::ZigzagBar),
        Just(AlgebraSpec::Trivial),
        (1usize..4).prop_map(AlgebraSpec::Semisimple),
        "[a-z]{1,8}\\.json".prop_map(|p| AlgebraSpec::File(p.into())),
    ]
}

fn config() -> impl Strategy<Value = RunConfig> {
    (
        algebra(),
        1usize..6,
        0usize..6,
        prop_oneof![
            Just(FieldSpec::Q),
            Just(FieldSpec::Z),
            prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(FieldSpec::Fp)
        ],
        prop::sample::select(vec![Method::Formula, Method::Oracle, Method::Both]),
        prop::option::of(prop::sample::select(vec![
            OutFormat::Json,
            OutFormat::Csv,
            OutFormat::Text,
        ])),
        (1usize..9, any::<u64>(), 1usize..500),
    )
        .prop_map(
            |(algebra, n, d, field, method, out, (threads, seed, samples))| RunConfig {
                algebra,
                n,
                d,
                field,
                method,
                out,
                output: None,
                cache_dir: None,
                threads,
                seed,
                samples,
            },
        )
}

proptest! {
    #[test]
    fn configs_round_trip(cfg in config()) {
        prop_assert_eq!(RunConfig::from_toml(&cfg.to_toml()).unwrap(), cfg);
    }

    #[test]
    fn elements_round_trip(picks in prop::collection::vec((0usize..202, -5i64..=5), 0..12)) {
        let t = SchurAlgebra::new(zigzag(1).unwrap(), 2, 2).unwrap();
        let mut x = Elem::new();
        for (k, c) in picks {
            add_to(&mut x, t.basis[k].clone(), &BigInt::from(c));
        }
        let text = serde_json::to_string(&elem_json(&t.fam, &x)).unwrap();
        prop_assert_eq!(parse_elem_str(&t.fam, 2, &text).unwrap(), x);
    }
}
