//! Acceptance suite: one pass/fail line per criterion. Each criterion compares the library against
//! an oracle written here from the definitions, independently of the code it checks.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schur_core::algebra::{semisimple, trivial, zigzag, BasedAlgebra};
use schur_core::charac::{
    char_standard_lr, char_standard_tableaux, kostka, schur_character, skew_char, skew_char_lr,
    CharacterVector, Lr,
};
use schur_core::decomp::{
    base_decomposition, blocks, decomp_formula_matrix, decomp_oracle, zig_decomp_matrix, Classical,
    DecompInput,
};
use schur_core::linalg::{determinant, rank};
use schur_core::partition::{compositions, multipartitions, partitions, trim, Multi};
use schur_core::ring::GradedSuperScalar;
use schur_core::schur::{add_to, single, Elem, Family, Orbit, SchurAlgebra};
use schur_core::straighten::{is_above, LinearStraightener, Straightener};
use schur_core::tableau::{enumerate_tableaux, Flavor};
use schurify::suite::{coassociativity_sides, multiplicativity_sides, random_elem};

type Criterion = (&'static str, fn() -> Result<String>);

fn main() {
    let criteria: [Criterion; 12] = [
        ("basis theorem", c01_basis),
        ("quasi-heredity", c02_heredity),
        ("multiplication", c03_multiplication),
        ("straightening", c04_straightening),
        ("bialgebra", c05_bialgebra),
        ("characters", c06_characters),
        ("decomposition over Q", c07_decomp_char0),
        ("decomposition over F_2", c08_decomp_char2),
        ("zigzag base case", c09_base_case),
        ("cellularity", c10_cellularity),
        ("blocks", c11_blocks),
        ("LR and skew characters", c12_lr),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(anyhow::anyhow!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name}: {detail} ({secs:.1}s)",
                k + 1
            ),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {e:#} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Rank of (M_n(A)^{⊗d})^{S_d} from the parities of the base: the coefficient of t^d in
/// (1 + t)^O / (1 - t)^E, where E and O count even and odd matrix units.
fn invariant_rank(base: &BasedAlgebra, n: usize, d: usize) -> BigInt {
    let odd = (0..base.dim()).filter(|&b| base.alg.parity[b] == 1).count() * n * n;
    let even = base.dim() * n * n - odd;
    (0..=d)
        .map(|k| {
            binom(odd, k)
                * if even == 0 {
                    BigInt::from(u8::from(k == d))
                } else {
                    binom(even + d - k - 1, d - k)
                }
        })
        .sum()
}

fn c01_basis() -> Result<String> {
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    let f = &t.fam;
    let by_formula = invariant_rank(&f.base, 2, 2);
    ensure!(
        by_formula == BigInt::from(202),
        "parity count gives {by_formula}"
    );
    ensure!(t.rank() == 202, "orbit enumeration gives {}", t.rank());
    let mut by_tableaux = 0;
    for lam in multipartitions(f.colors(), 2, 2) {
        by_tableaux += enumerate_tableaux(&lam, 2, &f.xa, Flavor::Std).len()
            * enumerate_tableaux(&lam, 2, &f.ya, Flavor::Std).len();
    }
    ensure!(by_tableaux == 202, "standard tableaux give {by_tableaux}");
    let mut seen = BTreeSet::new();
    for o in &t.basis {
        let (lam, s, u) = f.rsk(o)?;
        ensure!(
            s.shape == lam && s.is_standard(&f.xa) && u.is_standard(&f.ya),
            "RSK image of {} is not standard",
            f.orbit_name(o)
        );
        ensure!(
            &f.rsk_inv(&s, &u)? == o,
            "RSK does not invert at {}",
            f.orbit_name(o)
        );
        ensure!(seen.insert((s, u)), "RSK is not injective");
    }
    let st = t.structure()?;
    let mut m = Vec::new();
    for i in 0..st.labels.len() {
        for s in &st.xs[i] {
            for u in &st.ys[i] {
                let mut row = vec![BigInt::zero(); t.rank()];
                for (k, c) in t.to_vector(&f.codeterminant(s, u)?) {
                    row[k] = c;
                }
                m.push(row);
            }
        }
    }
    ensure!(m.len() == t.rank(), "{} codeterminants", m.len());
    let det = determinant(&m);
    ensure!(
        det == BigInt::one() || det == -BigInt::one(),
        "change of basis has determinant {det}"
    );
    Ok(format!(
        "rank 202 by orbits, by (1+t)^8/(1-t)^12 and by RSK; codeterminant matrix has det {det}"
    ))
}

fn c02_heredity() -> Result<String> {
    let mut out = Vec::new();
    for (l, n, d) in [(1, 2, 2), (1, 3, 3), (2, 2, 2)] {
        let t = SchurAlgebra::new(zigzag(l)?, n, d)?;
        let (st, rep, extra) = t.verify_heredity()?;
        ensure!(
            rep.passed() && extra.is_some(),
            "(ℓ,n,d) = ({l},{n},{d}): {:?}",
            rep.first_failure()
        );
        out.push(format!(
            "({l},{n},{d}) {} labels {} checks",
            st.labels.len(),
            rep.checks.len()
        ));
    }
    Ok(out.join("; "))
}

/// A pure tensor of matrix units b E_{r,s}, as (b, r, s) per factor.
type Word = Vec<(usize, usize, usize)>;
type Tensor = BTreeMap<Word, BigInt>;

/// M_n(A)^{⊗d} with the Koszul sign rule, built from the base structure constants only.
struct TensorOracle<'a> {
    base: &'a BasedAlgebra,
}

impl TensorOracle<'_> {
    fn odd(&self, b: usize) -> bool {
        self.base.alg.parity[b] == 1
    }

    /// ξ of a word: its distinct rearrangements, each signed by the odd entries it swaps.
    fn xi(&self, w: &Word) -> Tensor {
        let d = w.len();
        let mut out = Tensor::new();
        let mut perm: Vec<usize> = (0..d).collect();
        loop {
            let v: Word = perm.iter().map(|&k| w[k]).collect();
            let mut swaps = 0;
            for a in 0..d {
                for b in a + 1..d {
                    if perm[a] > perm[b] && self.odd(w[perm[a]].0) && self.odd(w[perm[b]].0) {
                        swaps += 1;
                    }
                }
            }
            let c = BigInt::from(if swaps % 2 == 0 { 1 } else { -1 });
            if let Some(old) = out.get(&v) {
                assert_eq!(old, &c, "inconsistent sign on a repeated rearrangement");
            } else {
                out.insert(v, c);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    /// Product of multiplicities! over even entries outside the subalgebra.
    fn factorial_c(&self, w: &Word) -> BigInt {
        let mut counts: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for &e in w {
            if !self.odd(e.0) && !self.base.in_a[e.0] {
                *counts.entry(e).or_default() += 1;
            }
        }
        counts
            .values()
            .map(|&m| (1..=m).map(BigInt::from).product::<BigInt>())
            .product()
    }

    fn eta(&self, w: &Word) -> Tensor {
        let c = self.factorial_c(w);
        self.xi(w).into_iter().map(|(k, v)| (k, v * &c)).collect()
    }

    /// (x_1 ⊗ ... ⊗ x_d)(y_1 ⊗ ... ⊗ y_d) = (-1)^{Σ_{i<j} |x_j||y_i|} x_1 y_1 ⊗ ... ⊗ x_d y_d.
    fn mul_words(&self, u: &Word, v: &Word) -> Tensor {
        let d = u.len();
        let mut sign = 1i64;
        for i in 0..d {
            for j in i + 1..d {
                if self.odd(u[j].0) && self.odd(v[i].0) {
                    sign = -sign;
                }
            }
        }
        let mut acc: Vec<(Word, i64)> = vec![(Vec::new(), sign)];
        for k in 0..d {
            let ((a, r, s), (c, r2, s2)) = (u[k], v[k]);
            if s != r2 {
                return Tensor::new();
            }
            let mut next = Vec::new();
            for (w, x) in &acc {
                for &(beta, kappa) in self.base.alg.mul_basis(a, c) {
                    let mut w2 = w.clone();
                    w2.push((beta, r, s2));
                    next.push((w2, x * kappa));
                }
            }
            acc = next;
        }
        let mut out = Tensor::new();
        for (w, x) in acc {
            add_to(&mut out, w, &BigInt::from(x));
        }
        out
    }

    fn mul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (u, a) in x {
            for (v, b) in y {
                for (w, c) in self.mul_words(u, v) {
                    add_to(&mut out, w, &(a * b * c));
                }
            }
        }
        out
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn word_of(o: &Orbit) -> Word {
    o.iter()
        .map(|t| (t.b as usize, t.r as usize, t.s as usize))
        .collect()
}

fn materialize(oracle: &TensorOracle, x: &Elem) -> Tensor {
    let mut out = Tensor::new();
    for (o, c) in x {
        for (w, v) in oracle.eta(&word_of(o)) {
            add_to(&mut out, w, &(c * v));
        }
    }
    out
}

/// Read an invariant tensor back in the η basis; fails if it is not an integral combination.
fn dematerialize(oracle: &TensorOracle, f: &Family, x: &Tensor) -> Result<Elem> {
    let mut orbits: BTreeSet<Orbit> = BTreeSet::new();
    for w in x.keys() {
        let b: Vec<usize> = w.iter().map(|e| e.0).collect();
        let r: Vec<usize> = w.iter().map(|e| e.1).collect();
        let s: Vec<usize> = w.iter().map(|e| e.2).collect();
        orbits.insert(f.xi_word(&b, &r, &s)?.0);
    }
    let mut out = Elem::new();
    let mut rebuilt = Tensor::new();
    for o in orbits {
        let w = word_of(&o);
        let c = x.get(&w).cloned().unwrap_or_default();
        for (k, v) in oracle.xi(&w) {
            add_to(&mut rebuilt, k, &(&c * v));
        }
        let (q, r) = c.div_rem(&oracle.factorial_c(&w));
        ensure!(
            r.is_zero(),
            "coefficient {c} of ξ is not divisible by [T]!_c"
        );
        add_to(&mut out, o, &q);
    }
    ensure!(&rebuilt == x, "product is not a combination of orbit sums");
    Ok(out)
}

fn c03_multiplication() -> Result<String> {
    let tr = SchurAlgebra::new(trivial(), 2, 2)?;
    let mut triples = 0;
    for a in &tr.basis {
        for b in &tr.basis {
            for c in &tr.basis {
                let (x, y, z) = (
                    single(a.clone(), 1),
                    single(b.clone(), 1),
                    single(c.clone(), 1),
                );
                ensure!(
                    tr.fam.mul(&tr.fam.mul(&x, &y), &z) == tr.fam.mul(&x, &tr.fam.mul(&y, &z)),
                    "trivial base not associative"
                );
                triples += 1;
            }
        }
    }
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    let f = &t.fam;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let mut pick = || single(t.basis.choose(&mut rng).expect("nonempty basis").clone(), 1);
        let (x, y, z) = (pick(), pick(), pick());
        ensure!(
            f.mul(&f.mul(&x, &y), &z) == f.mul(&x, &f.mul(&y, &z)),
            "zigzag triple not associative"
        );
    }
    let mut pairs = 0;
    for (l, n, d, count) in [(1, 2, 2, 120), (1, 2, 3, 40), (2, 2, 2, 40)] {
        let t = SchurAlgebra::new(zigzag(l)?, n, d)?;
        let f = &t.fam;
        let oracle = TensorOracle { base: &f.base };
        let mut rng = ChaCha8Rng::seed_from_u64(7 + l as u64 + d as u64);
        for _ in 0..count {
            let x = random_elem(&mut rng, &t.basis, 2);
            let y = random_elem(&mut rng, &t.basis, 2);
            let want = dematerialize(
                &oracle,
                f,
                &oracle.mul(&materialize(&oracle, &x), &materialize(&oracle, &y)),
            )
            .with_context(|| format!("ℓ={l} n={n} d={d}"))?;
            ensure!(
                f.mul(&x, &y) == want,
                "ℓ={l} n={n} d={d}: product differs from the tensor oracle"
            );
            pairs += 1;
        }
    }
    Ok(format!(
        "{triples} trivial triples, 1000 zigzag triples, {pairs} pairs against the tensor oracle"
    ))
}

/// Componentwise dominance of partitions of equal size.
fn shape_dominates(a: &[usize], b: &[usize]) -> bool {
    if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    let (mut sa, mut sb) = (0, 0);
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

fn c04_straightening() -> Result<String> {
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    let f = &t.fam;
    let lin = LinearStraightener::new(&t)?;
    let mut rec = Straightener::new(&t)?;
    let mut terms = 0;
    for o in &t.basis {
        let x = single(o.clone(), 1);
        let a = rec.straighten(&x)?;
        ensure!(
            a == lin.straighten(&x),
            "backends differ at {}",
            f.orbit_name(o)
        );
        ensure!(
            lin.expand(&a)? == x,
            "round trip fails at {}",
            f.orbit_name(o)
        );
        let (s, u, _) = f.orbit_to_codet(o)?;
        for k in a.keys() {
            ensure!(
                is_above(f, k, &(s.clone(), u.clone())),
                "term below the input at {}",
                f.orbit_name(o)
            );
            for i in 0..f.colors() {
                ensure!(
                    shape_dominates(k.0.shape.comp(i), s.shape.comp(i)),
                    "component {i} of a term is not dominant at {}",
                    f.orbit_name(o)
                );
            }
            ensure!(
                k.0.is_standard(&f.xa) && k.1.is_standard(&f.ya),
                "nonstandard output at {}",
                f.orbit_name(o)
            );
        }
        terms += a.len();
    }
    Ok(format!(
        "{} basis elements, {terms} terms, triangular, round trip exact",
        t.rank()
    ))
}

fn c05_bialgebra() -> Result<String> {
    let base = zigzag(1)?;
    let f = Family::new(base, 2)?;
    let per_degree: Vec<Vec<Orbit>> = (0..=3).map(|k| f.orbits(k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs = 120;
    for _ in 0..pairs {
        let d1 = rng.gen_range(0..=3);
        let d2 = rng.gen_range(0..=3 - d1);
        let x = random_elem(&mut rng, &per_degree[d1], 2);
        let y = random_elem(&mut rng, &per_degree[d2], 2);
        let (l, r) = coassociativity_sides(&f, &x);
        ensure!(l == r, "coassociativity fails in degree {d1}");
        let (l, r) = multiplicativity_sides(&f, &x, &y);
        ensure!(l == r, "∇(x⋆y) ≠ ∇x⋆∇y in degrees {d1}, {d2}");
    }
    Ok(format!(
        "coassociativity and multiplicativity on {pairs} seeded pairs, degrees ≤ 3"
    ))
}

/// All semistandard fillings of a partition shape with entries in [1, n], by brute force.
fn ssyt(shape: &[usize], n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == cells.len() {
            out.push(grid.clone());
            return;
        }
        let (r, c) = cells[k];
        for v in 1..=n {
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            go(k + 1, cells, n, grid, out);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, n, &mut grid, &mut out);
    out
}

fn content(t: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for &v in t.iter().flatten() {
        w[v - 1] += 1;
    }
    w
}

fn brute_schur(lam: &[usize], n: usize) -> CharacterVector {
    let mut out = CharacterVector::new();
    for t in ssyt(&trim(lam), n) {
        out.add_term(Multi(vec![content(&t, n)]), &GradedSuperScalar::one());
    }
    out
}

fn c06_characters() -> Result<String> {
    let f = Family::new(zigzag(1)?, 3)?;
    let lr = Lr::new();
    let labels = multipartitions(f.colors(), 3, 3);
    for lam in &labels {
        ensure!(
            char_standard_tableaux(&f, lam)? == char_standard_lr(&f, lam, &lr)?,
            "methods differ at {lam}"
        );
    }
    let ft = Family::new(trivial(), 3)?;
    for lam in partitions(3, 3) {
        let ch = char_standard_tableaux(&ft, &Multi(vec![lam.clone()]))?;
        ensure!(
            ch == brute_schur(&lam, 3) && ch == schur_character(&lam, 3),
            "trivial base does not give s_{lam:?}"
        );
    }
    let mut entries = 0;
    for k in 0..=5 {
        for lam in partitions(k, k) {
            let lam = trim(&lam);
            let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
            for t in ssyt(&lam, k.max(1)) {
                *counts.entry(content(&t, k.max(1))).or_default() += 1;
            }
            for mu in compositions(k.max(1), k) {
                ensure!(
                    kostka(&lam, &mu)? == counts.get(&mu).copied().unwrap_or(0),
                    "K_{{{lam:?},{mu:?}}} differs from enumeration"
                );
                entries += 1;
            }
        }
    }
    Ok(format!(
        "A = B on {} labels; trivial base gives s_λ; {entries} Kostka numbers match enumeration",
        labels.len()
    ))
}

fn check_decomp_char0(l: usize) -> Result<usize> {
    let t = SchurAlgebra::new(zigzag(l)?, 2, 2)?;
    let lr = Lr::new();
    let oracle = decomp_oracle(&t, 0)?;
    let formula = decomp_formula_matrix(
        &DecompInput::from_heredity(&t.fam.base),
        &oracle.labels,
        2,
        &Classical::Identity,
        &lr,
    )?;
    if let Some((a, b)) = oracle.matrix.first_difference(&formula) {
        anyhow::bail!(
            "ℓ={l}: d_{{{a},{b}}} oracle {} formula {}",
            oracle.matrix.get(&a, &b).unwrap(),
            formula.get(&a, &b).unwrap()
        );
    }
    let zig = zig_decomp_matrix(&t, l, &Classical::Identity, &lr)?;
    ensure!(
        zig.first_difference(&oracle.matrix).is_none(),
        "ℓ={l}: zigzag formula differs from the oracle"
    );
    Ok(oracle.labels.len())
}

fn c07_decomp_char0() -> Result<String> {
    let a = check_decomp_char0(1)?;
    let b = check_decomp_char0(2)?;
    Ok(format!(
        "formula = oracle on {a}×{a} (ℓ=1) and {b}×{b} (ℓ=2) matrices"
    ))
}

fn c08_decomp_char2() -> Result<String> {
    let cl = Classical::from_oracle(2, 2, 2)?;
    ensure!(
        cl.entry(&[2], &[1, 1]) == BigInt::one(),
        "S(2,2) over F_2 should have d_{{(2),(1,1)}} = 1"
    );
    ensure!(
        cl.entry(&[1, 1], &[2]).is_zero(),
        "S(2,2) over F_2 is lower unitriangular"
    );
    let s22 = SchurAlgebra::new(trivial(), 2, 2)?;
    let classical = decomp_oracle(&s22, 2)?;
    for (a, _) in classical.labels.iter().enumerate() {
        let mut sum = CharacterVector::new();
        for (b, _) in classical.labels.iter().enumerate() {
            sum = sum.add(&classical.simple[b].scale(&classical.matrix.entries[a][b]));
        }
        ensure!(
            sum == classical.standard[a],
            "s_λ ≠ Σ d s̄_μ at {}",
            classical.labels[a]
        );
    }
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    let lr = Lr::new();
    let oracle = decomp_oracle(&t, 2)?;
    let input = DecompInput::from_heredity(&t.fam.base);
    let formula = decomp_formula_matrix(&input, &oracle.labels, 2, &cl, &lr)?;
    if let Some((a, b)) = oracle.matrix.first_difference(&formula) {
        anyhow::bail!(
            "d_{{{a},{b}}} oracle {} formula {}",
            oracle.matrix.get(&a, &b).unwrap(),
            formula.get(&a, &b).unwrap()
        );
    }
    let zig = zig_decomp_matrix(&t, 1, &cl, &lr)?;
    ensure!(
        zig.first_difference(&oracle.matrix).is_none(),
        "zigzag formula differs from the oracle"
    );
    let naive = decomp_formula_matrix(&input, &oracle.labels, 2, &Classical::Identity, &lr)?;
    ensure!(
        naive.first_difference(&oracle.matrix).is_some(),
        "the classical matrix should matter at p = 2"
    );
    Ok(format!(
        "formula with the F_2 matrix of S(2,2) = oracle on {} labels; s_λ = Σ d s̄_μ",
        oracle.labels.len()
    ))
}

fn c09_base_case() -> Result<String> {
    for l in 1..=3 {
        for p in [0, 2, 3] {
            let d = base_decomposition(&zigzag(l)?, p)?;
            ensure!(d.len() == l + 1, "ℓ={l}: {} labels", d.len());
            for (i, row) in d.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let want = if i == j {
                        GradedSuperScalar::one()
                    } else if j + 1 == i {
                        GradedSuperScalar::qpi(1, 1)
                    } else {
                        GradedSuperScalar::zero()
                    };
                    ensure!(v == &want, "ℓ={l}, p={p}: d_{{{i},{j}}} = {v}");
                }
            }
        }
    }
    Ok("d_{i,j} = δ_{i,j} + δ_{i-1,j} qπ for ℓ = 1, 2, 3 over Q, F_2 and F_3".into())
}

fn c10_cellularity() -> Result<String> {
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    let f = &t.fam;
    let tr = t.truncate(&[0])?;
    let cb = tr.cellular_basis()?;
    for sup in [false, true] {
        ensure!(f.tau(&tr.xi_e, sup)? == tr.xi_e, "τ does not fix ξ^e");
        for c in &cb {
            let other = cb
                .iter()
                .find(|e| e.s == c.t && e.t == c.s)
                .context("missing C_{T,S}")?;
            ensure!(
                f.tau(&c.elem, sup)? == other.elem,
                "τ(C_{{S,T}}) ≠ C_{{T,S}}"
            );
        }
    }
    let inside: BTreeSet<usize> = tr.basis.iter().copied().collect();
    let mut m = Vec::new();
    for c in &cb {
        ensure!(
            f.mul(&f.mul(&tr.xi_e, &c.elem), &tr.xi_e) == c.elem,
            "cellular element outside ξ^e T ξ^e"
        );
        let v = t.to_vector(&c.elem);
        ensure!(
            v.iter().all(|(k, _)| inside.contains(k)),
            "support outside the truncation"
        );
        let mut row = vec![BigInt::zero(); t.rank()];
        for (k, x) in v {
            row[k] = x;
        }
        m.push(
            row.into_iter()
                .enumerate()
                .filter(|(k, _)| inside.contains(k))
                .map(|(_, x)| x)
                .collect::<Vec<_>>(),
        );
    }
    ensure!(
        cb.len() == tr.rank() && rank(&m, 0) == tr.rank(),
        "{} cellular elements of rank {} for a truncation of rank {}",
        cb.len(),
        rank(&m, 0),
        tr.rank()
    );
    Ok(format!(
        "τ and super τ fix ξ^e and swap S, T on all {} elements, which span ξ^e T ξ^e",
        cb.len()
    ))
}

fn c11_blocks() -> Result<String> {
    let t = SchurAlgebra::new(zigzag(1)?, 2, 2)?;
    for p in [0, 2] {
        let d = decomp_oracle(&t, p)?.matrix;
        let b = blocks(&d, &d)?;
        ensure!(
            b.len() == 1,
            "zigzag over characteristic {p}: {} blocks",
            b.len()
        );
    }
    let s = SchurAlgebra::new(semisimple(2)?, 2, 2)?;
    let weights = compositions(2, 2).len();
    let d2 = decomp_oracle(&s, 2)?.matrix;
    let b2 = blocks(&d2, &d2)?;
    ensure!(
        b2.len() == weights,
        "k ⊕ k over F_2: {} blocks, |Λ(2,2)| = {weights}",
        b2.len()
    );
    let d0 = decomp_oracle(&s, 0)?.matrix;
    let b0 = blocks(&d0, &d0)?;
    ensure!(
        b0.len() == d0.labels.len(),
        "k ⊕ k over Q should be semisimple, got {} blocks",
        b0.len()
    );
    Ok(format!(
        "zigzag: 1 block; k ⊕ k over F_2: {} = |Λ(2,2)| blocks (over Q: {})",
        b2.len(),
        b0.len()
    ))
}

fn transpose(p: &[usize]) -> Vec<usize> {
    let p = trim(p);
    (0..p.first().copied().unwrap_or(0))
        .map(|c| p.iter().filter(|&&r| r > c).count())
        .collect()
}

/// LR fillings of λ/μ with content ν whose reverse reading word is a lattice word.
fn brute_lr2(lam: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (lam, mu, nu) = (trim(lam), trim(mu), trim(nu));
    if lam.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>()
        || mu.len() > lam.len()
        || mu.iter().zip(&lam).any(|(a, b)| a > b)
    {
        return 0;
    }
    let inner = |r: usize| mu.get(r).copied().unwrap_or(0);
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| (inner(r)..lam[r]).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lam.iter().map(|&l| vec![0; l]).collect();
    let mut count = 0;
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lam: &[usize],
        mu: &[usize],
        nu: &[usize],
        grid: &mut Vec<Vec<usize>>,
        count: &mut u64,
    ) {
        if k == cells.len() {
            let mut seen = vec![0usize; nu.len() + 1];
            for r in 0..lam.len() {
                for c in (mu.get(r).copied().unwrap_or(0)..lam[r]).rev() {
                    let v = grid[r][c];
                    seen[v - 1] += 1;
                    if v > 1 && seen[v - 1] > seen[v - 2] {
                        return;
                    }
                }
            }
            if seen[..nu.len()] == *nu {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[k];
        for v in 1..=nu.len() {
            if c > mu.get(r).copied().unwrap_or(0) && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && c >= mu.get(r - 1).copied().unwrap_or(0) && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            go(k + 1, cells, lam, mu, nu, grid, count);
        }
        grid[r][c] = 0;
    }
    go(0, &cells, &lam, &mu, &nu, &mut grid, &mut count);
    count
}

/// c^λ_{f_1,...,f_m} by peeling off the last factor.
fn brute_lr(lam: &[usize], factors: &[Vec<usize>]) -> u64 {
    match factors {
        [] => u64::from(trim(lam).is_empty()),
        [a] => u64::from(trim(lam) == trim(a)),
        [rest @ .., last] => {
            let size = lam.iter().sum::<usize>() - last.iter().sum::<usize>();
            partitions(size, size.max(1))
                .iter()
                .map(|k| brute_lr2(lam, k, last) * brute_lr(k, rest))
                .sum()
        }
    }
}

fn c12_lr() -> Result<String> {
    let lr = Lr::new();
    let mut checked = 0;
    for size in 0..=6usize {
        let lams = partitions(size, size.max(1));
        for m in 1..=3usize {
            for sizes in compositions(m, size) {
                let choices: Vec<Vec<Vec<usize>>> = sizes
                    .iter()
                    .map(|&s| {
                        partitions(s, s.max(1))
                            .into_iter()
                            .map(|p| trim(&p))
                            .collect()
                    })
                    .collect();
                let mut tuples: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
                for c in &choices {
                    tuples = tuples
                        .iter()
                        .flat_map(|t| c.iter().map(move |p| [t.clone(), vec![p.clone()]].concat()))
                        .collect();
                }
                for tw in 0..1u32 << m {
                    let twists: Vec<bool> = (0..m).map(|k| tw >> k & 1 == 1).collect();
                    for fs in &tuples {
                        let eff: Vec<Vec<usize>> = fs
                            .iter()
                            .zip(&twists)
                            .map(|(f, &t)| if t { transpose(f) } else { f.clone() })
                            .collect();
                        for lam in &lams {
                            let want = brute_lr(lam, &eff);
                            let got = lr.lr_coeff(lam, fs, &twists)?;
                            ensure!(
                                got == want,
                                "c^{lam:?}_{fs:?} twists {twists:?}: {got} vs {want}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    let mut skews = 0;
    for size in 0..=5usize {
        let n = size.max(1);
        for lam in partitions(size, size.max(1)) {
            let lam = trim(&lam);
            for k in 0..=size {
                for mu in partitions(k, k.max(1)) {
                    let mu = trim(&mu);
                    if mu.len() > lam.len() || mu.iter().zip(&lam).any(|(a, b)| a > b) {
                        continue;
                    }
                    for odd in [false, true] {
                        let mut want = CharacterVector::new();
                        for nu in partitions(size - k, (size - k).max(1)) {
                            let nu_eps = if odd { transpose(&nu) } else { trim(&nu) };
                            let c = brute_lr2(&lam, &mu, &nu_eps);
                            if c > 0 {
                                want = want.add(
                                    &brute_schur(&nu, n).scale(&GradedSuperScalar::from_int(c)),
                                );
                            }
                        }
                        let got = skew_char(&lam, &mu, odd, n)?;
                        ensure!(
                            got == want,
                            "s^ε_{{{lam:?}/{mu:?}}} (odd = {odd}) differs from Σ c s_ν"
                        );
                        ensure!(
                            skew_char_lr(&lr, &lam, &mu, odd, n)? == want,
                            "LR expansion of {lam:?}/{mu:?} differs"
                        );
                        skews += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} coefficients with ≤ 3 factors and |λ| ≤ 6 match lattice-word enumeration; {skews} skew characters with |λ| ≤ 5"))
}
