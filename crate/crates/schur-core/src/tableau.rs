//! Colored alphabets and the (multi)tableaux filled from them.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::partition::Multi;
use crate::ring::GradedSuperScalar;

/// A colored letter r^x: `l` in [1,n], color `c` a basis label index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub l: u8,
    pub c: u16,
}

impl Letter {
    pub fn new(l: usize, c: usize) -> Self {
        Letter {
            l: l as u8,
            c: c as u16,
        }
    }
}

/// One side (X or Y) of the colored alphabets: the ordered color lists X(i) and the
/// per-basis-element data needed by tableau combinatorics.
#[derive(Clone, Debug)]
pub struct Alphabet {
    /// `lists[i]` is X(i) (or Y(i)) in the fixed total order.
    pub lists: Vec<Vec<usize>>,
    /// Position of a basis element within its list.
    pub rank: Vec<Option<u16>>,
    /// Component i with the basis element in the list for i.
    pub color_of: Vec<Option<usize>>,
    pub parity: Vec<u8>,
    pub degree: Vec<i64>,
    /// j with e_j x = x (for X) or y e_j = y (for Y).
    pub vertex: Vec<Option<usize>>,
    /// The initial elements e_i.
    pub initial: Vec<usize>,
}

impl Alphabet {
    pub fn colors(&self) -> usize {
        self.lists.len()
    }
    /// Total order on the colored alphabet: color rank first, then letter.
    pub fn cmp(&self, a: Letter, b: Letter) -> Ordering {
        let ka = (self.rank[a.c as usize], a.l);
        let kb = (self.rank[b.c as usize], b.l);
        ka.cmp(&kb)
    }
    pub fn is_odd(&self, a: Letter) -> bool {
        self.parity[a.c as usize] == 1
    }
    /// Letters of the alphabet for component `i`, increasing.
    pub fn letters(&self, i: usize, n: usize) -> Vec<Letter> {
        let mut v = Vec::new();
        for &x in &self.lists[i] {
            for r in 1..=n {
                v.push(Letter::new(r, x));
            }
        }
        v
    }
    fn le_row(&self, a: Letter, b: Letter) -> bool {
        match self.cmp(a, b) {
            Ordering::Less => true,
            Ordering::Equal => !self.is_odd(a),
            Ordering::Greater => false,
        }
    }
    fn le_col(&self, a: Letter, b: Letter) -> bool {
        match self.cmp(a, b) {
            Ordering::Less => true,
            Ordering::Equal => self.is_odd(a),
            Ordering::Greater => false,
        }
    }
}

/// Which tableaux to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Std,
    Rst,
    Cst,
    All,
}

/// A colored multitableau: `rows[i][r]` is row r of component i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub shape: Multi,
    pub rows: Vec<Vec<Vec<Letter>>>,
}

impl Tableau {
    pub fn from_rows(shape: Multi, rows: Vec<Vec<Vec<Letter>>>) -> Result<Self> {
        if rows.len() != shape.colors() {
            return Err(Error::SizeMismatch("tableau components".into()));
        }
        for (i, comp) in rows.iter().enumerate() {
            let lens: Vec<usize> = comp.iter().map(|r| r.len()).collect();
            let mut want = shape.comp(i).to_vec();
            let mut have = lens.clone();
            have.resize(want.len().max(have.len()), 0);
            want.resize(have.len(), 0);
            if have != want {
                return Err(Error::SizeMismatch("tableau shape".into()));
            }
        }
        let mut rows = rows;
        for (i, comp) in rows.iter_mut().enumerate() {
            comp.resize(shape.comp(i).len(), Vec::new());
        }
        Ok(Tableau { shape, rows })
    }
    /// The initial tableau T^λ: (i, r, s) ↦ r^{e_i}.
    pub fn initial(shape: &Multi, alpha: &Alphabet) -> Self {
        let rows = shape
            .0
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.iter()
                    .enumerate()
                    .map(|(r, &len)| vec![Letter::new(r + 1, alpha.initial[i]); len])
                    .collect()
            })
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }
    pub fn size(&self) -> usize {
        self.shape.size()
    }
    /// Row reading word L^T over components 0..ℓ.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flatten().flatten().copied().collect()
    }
    /// Reading word of a single component.
    pub fn component_word(&self, i: usize) -> Vec<Letter> {
        self.rows[i].iter().flatten().copied().collect()
    }
    pub fn get(&self, i: usize, r: usize, s: usize) -> Option<Letter> {
        self.rows.get(i)?.get(r)?.get(s).copied()
    }
    /// Repetition rule: equal entries in a row only for even colors; colors from the right lists.
    pub fn is_valid(&self, alpha: &Alphabet) -> bool {
        for (i, comp) in self.rows.iter().enumerate() {
            for row in comp {
                for (k, a) in row.iter().enumerate() {
                    if alpha.color_of.get(a.c as usize).copied().flatten() != Some(i) {
                        return false;
                    }
                    if alpha.is_odd(*a) && row[k + 1..].contains(a) {
                        return false;
                    }
                }
            }
        }
        true
    }
    pub fn is_row_standard(&self, alpha: &Alphabet) -> bool {
        self.is_valid(alpha)
            && self
                .rows
                .iter()
                .flatten()
                .all(|row| row.windows(2).all(|w| alpha.le_row(w[0], w[1])))
    }
    pub fn is_column_standard(&self, alpha: &Alphabet) -> bool {
        self.is_valid(alpha)
            && self.rows.iter().all(|comp| {
                comp.windows(2).all(|w| {
                    w[1].iter()
                        .zip(&w[0])
                        .all(|(below, above)| alpha.le_col(*above, *below))
                })
            })
    }
    pub fn is_standard(&self, alpha: &Alphabet) -> bool {
        self.is_row_standard(alpha) && self.is_column_standard(alpha)
    }
    /// The unique row-equivalent row-standard tableau.
    pub fn row_standardize(&self, alpha: &Alphabet) -> Tableau {
        let mut t = self.clone();
        for row in t.rows.iter_mut().flatten() {
            row.sort_by(|a, b| alpha.cmp(*a, *b));
        }
        t
    }
    /// Lexicographic comparison of reading words in the alphabet order.
    pub fn cmp_words(&self, other: &Tableau, alpha: &Alphabet) -> Ordering {
        cmp_words(&self.reading_word(), &other.reading_word(), alpha)
    }
    /// Weight α^S (X side) or β^T (Y side): counts of letters r with vertex j.
    pub fn weight(&self, alpha: &Alphabet, n: usize) -> Multi {
        let mut w = Multi::zero(alpha.colors(), n);
        for a in self.reading_word() {
            if let Some(j) = alpha.vertex[a.c as usize] {
                w.0[j][a.l as usize - 1] += 1;
            }
        }
        w
    }
    /// deg(S) = product of the degrees of the colors, as q^m π^ε.
    pub fn degree(&self, alpha: &Alphabet) -> (i64, u8) {
        let mut m = 0;
        let mut e = 0;
        for a in self.reading_word() {
            m += alpha.degree[a.c as usize];
            e ^= alpha.parity[a.c as usize];
        }
        (m, e)
    }
    pub fn degree_scalar(&self, alpha: &Alphabet) -> GradedSuperScalar {
        let (m, e) = self.degree(alpha);
        GradedSuperScalar::qpi(m, e)
    }
    /// Apply a color map (e.g. x ↦ τ(x)) entrywise.
    pub fn map_colors(&self, f: impl Fn(usize) -> usize) -> Tableau {
        let mut t = self.clone();
        for a in t.rows.iter_mut().flatten().flatten() {
            a.c = f(a.c as usize) as u16;
        }
        t
    }
}

pub fn cmp_words(a: &[Letter], b: &[Letter], alpha: &Alphabet) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match alpha.cmp(*x, *y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Enumerate all fillings of one component of shape `shape_i` of the given flavor.
pub fn enumerate_component(
    shape_i: &[usize],
    i: usize,
    n: usize,
    alpha: &Alphabet,
    flavor: Flavor,
) -> Vec<Vec<Vec<Letter>>> {
    let letters = alpha.letters(i, n);
    let cells: Vec<(usize, usize)> = shape_i
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |s| (r, s)))
        .collect();
    let mut grid: Vec<Vec<Letter>> = shape_i.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    let check_row = matches!(flavor, Flavor::Std | Flavor::Rst);
    let check_col = matches!(flavor, Flavor::Std | Flavor::Cst);
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        letters: &[Letter],
        grid: &mut Vec<Vec<Letter>>,
        alpha: &Alphabet,
        check_row: bool,
        check_col: bool,
        out: &mut Vec<Vec<Vec<Letter>>>,
    ) {
        if k == cells.len() {
            out.push(grid.clone());
            return;
        }
        let (r, s) = cells[k];
        for &a in letters {
            if alpha.is_odd(a) && grid[r].contains(&a) {
                continue;
            }
            if check_row && s > 0 && !alpha.le_row(grid[r][s - 1], a) {
                continue;
            }
            if check_col && r > 0 && !alpha.le_col(grid[r - 1][s], a) {
                continue;
            }
            grid[r].push(a);
            rec(
                k + 1,
                cells,
                letters,
                grid,
                alpha,
                check_row,
                check_col,
                out,
            );
            grid[r].pop();
        }
    }
    rec(
        0, &cells, &letters, &mut grid, alpha, check_row, check_col, &mut out,
    );
    out
}

/// Enumerate multitableaux of shape λ; exhaustive and duplicate-free.
pub fn enumerate_tableaux(
    shape: &Multi,
    n: usize,
    alpha: &Alphabet,
    flavor: Flavor,
) -> Vec<Tableau> {
    let per: Vec<Vec<Vec<Vec<Letter>>>> = (0..shape.colors())
        .map(|i| enumerate_component(shape.comp(i), i, n, alpha, flavor))
        .collect();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        per: &[Vec<Vec<Vec<Letter>>>],
        cur: &mut Vec<Vec<Vec<Letter>>>,
        shape: &Multi,
        out: &mut Vec<Tableau>,
    ) {
        if i == per.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: cur.clone(),
            });
            return;
        }
        for c in &per[i] {
            cur.push(c.clone());
            rec(i + 1, per, cur, shape, out);
            cur.pop();
        }
    }
    rec(0, &per, &mut Vec::new(), shape, &mut out);
    out
}

/// Classical semistandard tableaux of partition shape with entries in [1,n] (Kostka enumeration).
pub fn semistandard(shape: &[usize], n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |s| (r, s)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(
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
        let (r, s) = cells[k];
        let lo_row = if s > 0 { grid[r][s - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][s] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r].push(v);
            rec(k + 1, cells, n, grid, out);
            grid[r].pop();
        }
    }
    rec(0, &cells, n, &mut grid, &mut out);
    out
}
