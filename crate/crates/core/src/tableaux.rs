//! Core DPT objects: parameters, alcove weights as periodic lattice paths,
//! fundamental domains, standard fillings, evaluation at arbitrary cells,
//! the symmetries `D`, `L`, `pi`, and enumeration for a fixed path.
//!
//! A DPT is stored by its finite encoding: the alcove weight `lambda` of its
//! lattice path together with the standard filling of the `m` cells of
//! `Delta(lambda)` by `1..=m`. Everything else (values at arbitrary cells,
//! the group actions) is recovered from this encoding.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{extended_gcd, gcd_i64};

/// Parameter tuple `(K, N, a, b)` with `m = a*N - b*K > 0`.
///
/// `(a, b)` is canonicalized modulo `(K, N)` to the representative with
/// `0 <= b < N`; this does not change the set of tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(rename = "K")]
    pub big_k: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    pub a: i64,
    pub b: i64,
    #[serde(skip)]
    pub m: i64,
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "K")]
            big_k: i64,
            #[serde(rename = "N")]
            big_n: i64,
            a: i64,
            b: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Params::new(raw.big_k, raw.big_n, raw.a, raw.b).map_err(D::Error::custom)
    }
}

impl Params {
    pub fn new(big_k: i64, big_n: i64, a: i64, b: i64) -> Result<Self> {
        if big_k < 1 || big_n < 1 {
            return Err(Error::InvalidParams(format!(
                "K and N must be positive, got ({big_k},{big_n})"
            )));
        }
        let m = a * big_n - b * big_k;
        if m <= 0 {
            return Err(Error::InvalidParams(format!(
                "m = a*N - b*K = {m} must be positive for ({big_k},{big_n},{a},{b})"
            )));
        }
        let shift = -b.div_euclid(big_n);
        Ok(Params {
            big_k,
            big_n,
            a: a + shift * big_k,
            b: b + shift * big_n,
            m,
        })
    }

    /// Order of the root of unity `q`, the content modulus `N + K`.
    pub fn modulus(&self) -> i64 {
        self.big_n + self.big_k
    }

    /// Content drift `a + b mod (N + K)`.
    pub fn drift(&self) -> i64 {
        (self.a + self.b).rem_euclid(self.modulus())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.big_k, self.big_n, self.a, self.b)
    }
}

/// A lattice cell in reading coordinates: `x` grows to the right, `y` downward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    pub fn shift(self, dx: i64, dy: i64) -> Self {
        Cell {
            x: self.x + dx,
            y: self.y + dy,
        }
    }
}

/// Weakly decreasing integer `N`-tuple; with `lambda_1 - lambda_N <= K` it
/// indexes a `(K, N)`-periodic lattice path and a fusion-ring basis class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AlcoveWeight {
    parts: Vec<i64>,
}

impl AlcoveWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidWeight(
                "weight must have at least one part".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(AlcoveWeight { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Alcove membership: `lambda_1 - lambda_N <= K`.
    pub fn fits_alcove(&self, big_k: i64) -> bool {
        self.parts[0] - self.parts[self.parts.len() - 1] <= big_k
    }

    /// `L_lambda(y)`: the value of the associated `(K, N)`-periodic lattice
    /// path at row `y`, i.e. `lambda_{i+1} - r*K` for `y = i + r*N`.
    pub fn path_value(&self, y: i64, params: &Params) -> i64 {
        let n = params.big_n;
        let r = y.div_euclid(n);
        let i = y.rem_euclid(n) as usize;
        self.parts[i] - r * params.big_k
    }

    /// The shifted weight `lambda[a, b] = D^a L^{-b} lambda`, whose lattice
    /// path is the `(a, b)`-shift of the path of `lambda`.
    pub fn shifted(&self, a: i64, b: i64, params: &Params) -> AlcoveWeight {
        let parts = (0..params.big_n)
            .map(|i| self.path_value(i + b, params) + a)
            .collect();
        AlcoveWeight { parts }
    }

    /// Pointwise comparison of lattice paths over one period.
    pub fn dominated_by(&self, other: &AlcoveWeight) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells of the fundamental domain `Delta(lambda)` in reading order
    /// (row 0 left to right, then row 1, ...). Errors when the path is not
    /// dominated by its `(a, b)`-shift.
    pub fn delta_cells(&self, params: &Params) -> Result<Vec<Cell>> {
        let shifted = self.shifted(params.a, params.b, params);
        if !self.dominated_by(&shifted) {
            return Err(Error::ShiftOrder {
                lambda: self.parts.clone(),
            });
        }
        let mut cells = Vec::with_capacity(params.m as usize);
        for y in 0..params.big_n {
            let lo = self.parts[y as usize];
            let hi = shifted.parts[y as usize];
            for x in lo..hi {
                cells.push(Cell::new(x, y));
            }
        }
        debug_assert_eq!(cells.len() as i64, params.m);
        Ok(cells)
    }
}

impl fmt::Display for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Unique decomposition `cell = cell' + s*(K, -N) + r*(a, -b)` with
/// `cell'` in `Delta(lambda)`.
pub fn canonical_decomposition(
    params: &Params,
    weight: &AlcoveWeight,
    cell: Cell,
) -> (Cell, i64, i64) {
    let (x, y) = (cell.x, cell.y);
    // g(r) = L(y + r*b) + r*a is weakly increasing and unbounded; find the
    // largest r with g(r) <= x.
    let g = |r: i64| weight.path_value(y + r * params.b, params) + r * params.a;
    let mut lo: i64;
    let mut hi: i64;
    if g(0) <= x {
        lo = 0;
        let mut step = 1;
        hi = 1;
        while g(hi) <= x {
            lo = hi;
            hi += step;
            step *= 2;
        }
    } else {
        hi = 0;
        let mut step = 1;
        lo = -1;
        while g(lo) > x {
            hi = lo;
            lo -= step;
            step *= 2;
        }
    }
    // invariant: g(lo) <= x < g(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if g(mid) <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = lo;
    let yy = y + r * params.b;
    let s = -yy.div_euclid(params.big_n);
    let cell_in_delta = Cell::new(x - r * params.a - s * params.big_k, yy + s * params.big_n);
    (cell_in_delta, s, r)
}

/// A doubly periodic tableau, encoded by its alcove weight and the standard
/// filling of `Delta(lambda)` by `1..=m` (in reading order of the cells).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dpt {
    params: Params,
    weight: AlcoveWeight,
    values: Vec<u32>,
}

impl Dpt {
    /// Build and validate the encoding: the filling must be a bijection onto
    /// `1..=m`, standard on the domain, and standard after periodic extension.
    pub fn new(params: Params, weight: AlcoveWeight, values: Vec<u32>) -> Result<Self> {
        if weight.len() as i64 != params.big_n {
            return Err(Error::InvalidWeight(format!(
                "weight has {} parts, expected N = {}",
                weight.len(),
                params.big_n
            )));
        }
        if !weight.fits_alcove(params.big_k) {
            return Err(Error::InvalidWeight(format!(
                "{weight} leaves the alcove for K = {}",
                params.big_k
            )));
        }
        let cells = weight.delta_cells(&params)?;
        if values.len() != cells.len() {
            return Err(Error::InvalidFilling(format!(
                "{} values for {} cells",
                values.len(),
                cells.len()
            )));
        }
        let m = params.m as u32;
        let mut seen = vec![false; m as usize];
        for &v in &values {
            if v < 1 || v > m || seen[(v - 1) as usize] {
                return Err(Error::InvalidFilling(format!(
                    "filling is not a bijection onto 1..={m}"
                )));
            }
            seen[(v - 1) as usize] = true;
        }
        if !is_standard_extension(&weight, &values, &params) {
            return Err(Error::InvalidFilling(
                "periodic extension of the filling is not standard".into(),
            ));
        }
        Ok(Dpt {
            params,
            weight,
            values,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn weight(&self) -> &AlcoveWeight {
        &self.weight
    }

    /// Filling values in reading order of `delta_cells`.
    pub fn reading_word(&self) -> &[u32] {
        &self.values
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.weight
            .delta_cells(&self.params)
            .expect("validated at construction")
    }

    /// Degree `-sum(lambda)`; `pi` raises it by one, `T`-moves preserve it.
    pub fn degree(&self) -> i64 {
        -self.weight.sum()
    }

    /// Value of the infinite tableau at an arbitrary cell.
    pub fn value(&self, cell: Cell) -> i64 {
        let p = &self.params;
        let (inner, _s, r) = canonical_decomposition(p, &self.weight, cell);
        // reading-order index of the inner cell, from the row widths
        let mut idx = inner.x - self.weight.parts()[inner.y as usize];
        for y in 0..inner.y {
            let lo = self.weight.parts()[y as usize];
            let hi = self.weight.path_value(y + p.b, p) + p.a;
            idx += hi - lo;
        }
        self.values[idx as usize] as i64 + r * p.m
    }

    /// The cell carrying value `v` (for the canonical occurrence: the copy
    /// whose residue `1..=m` lies in the fundamental domain).
    pub fn cell_of_value(&self, v: i64) -> Cell {
        let m = self.params.m;
        let v0 = (v - 1).rem_euclid(m) + 1;
        let r = (v - v0) / m;
        let cells = self.cells();
        let idx = self
            .values
            .iter()
            .position(|&w| w as i64 == v0)
            .expect("values 1..=m all present");
        cells[idx].shift(r * self.params.a, -r * self.params.b)
    }

    // Reading words list the rows bottom to top, left to right within each
    // row: the linear tableau at (1,-1) reads 13524.
    fn bottom_up_order(&self) -> Vec<usize> {
        let cells = self.cells();
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by_key(|&i| (-cells[i].y, cells[i].x));
        order
    }

    /// Reading-word string form, e.g. `13524@(1,-1)`.
    pub fn word_string(&self) -> String {
        let digits: Vec<String> = self
            .bottom_up_order()
            .into_iter()
            .map(|i| self.values[i].to_string())
            .collect();
        let word = if self.params.m <= 9 {
            digits.concat()
        } else {
            digits.join(",")
        };
        format!("{word}@{}", self.weight)
    }

    /// Parse the reading-word string form.
    pub fn from_word_string(params: Params, s: &str) -> Result<Self> {
        let (word, weight) = s
            .split_once('@')
            .ok_or_else(|| Error::InvalidFilling(format!("missing '@' in {s:?}")))?;
        let weight = weight
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidWeight(format!("bad weight in {s:?}: {e}")))?;
        let word_values: Vec<u32> = if word.contains(',') {
            word.split(',')
                .map(|v| v.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidFilling(format!("bad word: {e}")))?
        } else {
            word.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidFilling(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        let weight = AlcoveWeight::new(weight)?;
        let cells = weight.delta_cells(&params)?;
        if word_values.len() != cells.len() {
            return Err(Error::InvalidFilling(format!(
                "word has {} labels for {} cells",
                word_values.len(),
                cells.len()
            )));
        }
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by_key(|&i| (-cells[i].y, cells[i].x));
        let mut values = vec![0u32; cells.len()];
        for (w, i) in word_values.into_iter().zip(order) {
            values[i] = w;
        }
        Dpt::new(params, weight, values)
    }
}

impl fmt::Debug for Dpt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dpt[{} {}]", self.params, self.word_string())
    }
}

// JSON schema: {"params":{"K","N","a","b"},"lambda":[...],"filling":[[x,y,label],...]}
#[derive(Serialize, Deserialize)]
struct DptRepr {
    params: Params,
    lambda: Vec<i64>,
    filling: Vec<(i64, i64, u32)>,
}

impl Serialize for Dpt {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let cells = self.cells();
        let repr = DptRepr {
            params: self.params,
            lambda: self.weight.parts().to_vec(),
            filling: cells
                .iter()
                .zip(&self.values)
                .map(|(c, &v)| (c.x, c.y, v))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dpt {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = DptRepr::deserialize(deserializer)?;
        let params = Params::new(
            repr.params.big_k,
            repr.params.big_n,
            repr.params.a,
            repr.params.b,
        )
        .map_err(D::Error::custom)?;
        let weight = AlcoveWeight::new(repr.lambda).map_err(D::Error::custom)?;
        let cells = weight.delta_cells(&params).map_err(D::Error::custom)?;
        let by_cell: HashMap<Cell, u32> = repr
            .filling
            .iter()
            .map(|&(x, y, v)| (Cell::new(x, y), v))
            .collect();
        let values = cells
            .iter()
            .map(|c| {
                by_cell
                    .get(c)
                    .copied()
                    .ok_or_else(|| D::Error::custom(format!("missing filling for cell {c:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Dpt::new(params, weight, values).map_err(D::Error::custom)
    }
}

/// True iff the filling is standard on `Delta(lambda)` and its
/// `(K, -N)`-periodic extension to `Delta'(lambda)` stays standard.
///
/// The only adjacencies of the extension not visible inside the domain are
/// the wrap-arounds from the bottom row to the shifted top row, so the finite
/// criterion is: in-domain rows and columns increase, and
/// `sigma(x, N-1) < sigma(x + K, 0)` whenever both cells are in the domain.
pub fn is_standard_extension(weight: &AlcoveWeight, values: &[u32], params: &Params) -> bool {
    let cells = match weight.delta_cells(params) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let by_cell: HashMap<Cell, u32> = cells.iter().copied().zip(values.iter().copied()).collect();
    for (cell, &v) in cells.iter().zip(values) {
        if let Some(&right) = by_cell.get(&cell.shift(1, 0)) {
            if right <= v {
                return false;
            }
        }
        if let Some(&below) = by_cell.get(&cell.shift(0, 1)) {
            if below <= v {
                return false;
            }
        }
        if cell.y == params.big_n - 1 {
            if let Some(&wrapped) = by_cell.get(&Cell::new(cell.x + params.big_k, 0)) {
                if wrapped <= v {
                    return false;
                }
            }
        }
    }
    true
}

/// All standard fillings of `Delta(lambda)` whose periodic extension is
/// standard, in lexicographic reading-word order.
pub fn enumerate_fillings(weight: &AlcoveWeight, params: &Params) -> Result<Vec<Dpt>> {
    let cells = weight.delta_cells(params)?;
    let m = cells.len();
    let index: HashMap<Cell, usize> = cells
        .iter()
        .copied()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    // prerequisites: a cell may receive the next value once its in-domain
    // left and top neighbors are filled
    let mut prereq: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, c) in cells.iter().enumerate() {
        for nb in [c.shift(-1, 0), c.shift(0, -1)] {
            if let Some(&j) = index.get(&nb) {
                prereq[i].push(j);
            }
        }
    }
    struct Search<'a> {
        prereq: &'a [Vec<usize>],
        values: Vec<u32>,
        filled: Vec<bool>,
        weight: &'a AlcoveWeight,
        params: &'a Params,
        out: Vec<Dpt>,
    }
    impl Search<'_> {
        fn place(&mut self, next: u32) {
            let m = self.values.len();
            if next as usize > m {
                if is_standard_extension(self.weight, &self.values, self.params) {
                    self.out.push(
                        Dpt::new(*self.params, self.weight.clone(), self.values.clone())
                            .expect("enumerated filling is valid"),
                    );
                }
                return;
            }
            for i in 0..m {
                if !self.filled[i] && self.prereq[i].iter().all(|&j| self.filled[j]) {
                    self.filled[i] = true;
                    self.values[i] = next;
                    self.place(next + 1);
                    self.filled[i] = false;
                    self.values[i] = 0;
                }
            }
        }
    }
    let mut search = Search {
        prereq: &prereq,
        values: vec![0u32; m],
        filled: vec![false; m],
        weight,
        params,
        out: Vec::new(),
    };
    search.place(1);
    let mut out = search.out;
    out.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(out)
}

/// Rebuild the finite encoding from an evaluation function of a genuine DPT.
/// This realizes the bijection between tableaux and (path, filling) pairs.
pub fn from_evaluation(params: &Params, eval: impl Fn(i64, i64) -> i64) -> Result<Dpt> {
    let n = params.big_n;
    // L(y) = min { x : eval(x, y) >= 1 }, found by monotone search.
    let first_positive = |y: i64| -> i64 {
        let (mut lo, mut hi);
        if eval(0, y) >= 1 {
            hi = 0;
            lo = -1;
            let mut step = 1;
            while eval(lo, y) >= 1 {
                hi = lo;
                lo -= step;
                step *= 2;
            }
        } else {
            lo = 0;
            hi = 1;
            let mut step = 1;
            while eval(hi, y) < 1 {
                lo = hi;
                hi += step;
                step *= 2;
            }
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if eval(mid, y) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    let parts: Vec<i64> = (0..n).map(first_positive).collect();
    let weight = AlcoveWeight::new(parts)
        .map_err(|_| Error::InvalidFilling("evaluation does not define a lattice path".into()))?;
    let cells = weight.delta_cells(params)?;
    let values = cells
        .iter()
        .map(|c| {
            let v = eval(c.x, c.y);
            if v < 1 || v > params.m {
                return Err(Error::InvalidFilling(format!(
                    "value {v} at {c:?} outside 1..={}",
                    params.m
                )));
            }
            Ok(v as u32)
        })
        .collect::<Result<Vec<_>>>()?;
    Dpt::new(*params, weight, values)
}

/// Generators of the symmetry group acting on tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `D sigma(x, y) = sigma(x-1, y)`
    D,
    DInv,
    /// `L sigma(x, y) = sigma(x, y-1)`
    L,
    LInv,
    /// `pi sigma(x, y) = sigma(x, y) + 1`
    Pi,
    PiInv,
}

/// Apply a symmetry generator; the result is again a valid tableau.
pub fn act_symmetry(g: Symmetry, dpt: &Dpt) -> Dpt {
    let params = *dpt.params();
    let f = |x: i64, y: i64| -> i64 {
        match g {
            Symmetry::D => dpt.value(Cell::new(x - 1, y)),
            Symmetry::DInv => dpt.value(Cell::new(x + 1, y)),
            Symmetry::L => dpt.value(Cell::new(x, y - 1)),
            Symmetry::LInv => dpt.value(Cell::new(x, y + 1)),
            Symmetry::Pi => dpt.value(Cell::new(x, y)) + 1,
            Symmetry::PiInv => dpt.value(Cell::new(x, y)) - 1,
        }
    };
    from_evaluation(&params, f).expect("symmetry action preserves validity")
}

/// Apply a word of symmetries left to right.
pub fn act_symmetries(word: &[Symmetry], dpt: &Dpt) -> Dpt {
    word.iter()
        .fold(dpt.clone(), |acc, &g| act_symmetry(g, &acc))
}

/// `sigma(x, y) -> sigma(y, x)`: a bijection onto the tableaux for
/// `(N, K, -b, -a)`.
pub fn transpose_dpt(dpt: &Dpt) -> Result<Dpt> {
    let p = dpt.params();
    let params = Params::new(p.big_n, p.big_k, -p.b, -p.a)?;
    from_evaluation(&params, |x, y| dpt.value(Cell::new(y, x)))
}

/// The involution `sigma(x, y) -> -sigma(-x, -y)` on the same parameters.
pub fn negate_dpt(dpt: &Dpt) -> Dpt {
    let params = *dpt.params();
    from_evaluation(&params, |x, y| -dpt.value(Cell::new(-x, -y)))
        .expect("negation is an involution on valid tableaux")
}

/// The (perturbed) linear tableau
/// `sigma(x, y) = N x + K y + c + floor(((b x + a y) mod m) / (m / g))`
/// with `g = gcd(K, N)`; a valid DPT for every parameter tuple.
pub fn linear_dpt(params: &Params, c: i64) -> Dpt {
    let p = *params;
    let g = gcd_i64(p.big_k, p.big_n);
    let step = p.m / g;
    let f = move |x: i64, y: i64| -> i64 {
        let corr = (p.b * x + p.a * y).rem_euclid(p.m) / step;
        p.big_n * x + p.big_k * y + c + corr
    };
    from_evaluation(&p, f).expect("linear tableau is a valid DPT")
}

/// The tableau determined by `sigma(x, 0) = x` for `0 <= x < m` and
/// `sigma(-beta, 1) = alpha * m`, together with its parameters
/// `K = N*beta + alpha*m`, `a = v*beta + u*m`, `b = v` where `uN - v*alpha = 1`.
pub fn line_dpt(m: i64, big_n: i64, alpha: i64, beta: i64) -> Result<(Params, Dpt)> {
    if m < 1 || big_n < 1 {
        return Err(Error::InvalidParams("m and N must be positive".into()));
    }
    if alpha < 0 || beta < 0 || beta >= m || (alpha, beta) == (0, 0) {
        return Err(Error::InvalidParams(
            "need alpha >= 0, 0 <= beta < m, (alpha, beta) != (0, 0)".into(),
        ));
    }
    let (g, p, q) = extended_gcd(big_n, alpha);
    if g != 1 {
        return Err(Error::GcdViolation(format!(
            "gcd(alpha, N) = {g} must be 1 for alpha = {alpha}, N = {big_n}"
        )));
    }
    // p*N + q*alpha = 1, so u = p, v = -q satisfies u*N - v*alpha = 1.
    let (u, v) = (p, -q);
    let big_k = big_n * beta + alpha * m;
    let params = Params::new(big_k, big_n, v * beta + u * m, v)?;
    let f = move |x: i64, y: i64| -> i64 {
        let i = x + y * beta;
        y * alpha * m + i.rem_euclid(m) + i.div_euclid(m) * m * big_n
    };
    let dpt = from_evaluation(&params, f)?;
    Ok((params, dpt))
}
