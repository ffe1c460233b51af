//! Quotient enumerations and the counting theorems: tableaux modulo `<D, L>`
//! and modulo `<pi>`, the bijection between the two quotients, the Dyck-path
//! form when `gcd(K, N) = 1`, the `K^{N-1}` count for `(K, N, 1, 0)`, the
//! `K^{m-1}` upper bound, and the excited-diagram hook-length cross-check.

use std::collections::{BTreeSet, VecDeque};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::gcd_i64;
use crate::tableaux::{
    act_symmetries, enumerate_fillings, AlcoveWeight, Cell, Dpt, Params, Symmetry,
};

/// Shapes `lambda` with `lambda_N = 0`, `lambda_1 <= K`, dominated by their
/// `(a, b)`-shift, in descending lexicographic order.
fn normalized_shapes(params: &Params) -> Vec<AlcoveWeight> {
    let n = params.big_n as usize;
    let mut shapes = Vec::new();
    let mut parts = vec![0i64; n];
    fn rec(parts: &mut Vec<i64>, idx: usize, max: i64, out: &mut Vec<Vec<i64>>) {
        if idx + 1 == parts.len() {
            out.push(parts.clone());
            return;
        }
        // descending lex: larger parts first
        let mut v = max;
        while v >= 0 {
            parts[idx] = v;
            rec(parts, idx + 1, v, out);
            v -= 1;
        }
    }
    let mut raw = Vec::new();
    if n == 1 {
        raw.push(vec![0i64]);
    } else {
        rec(&mut parts, 0, params.big_k, &mut raw);
    }
    for parts in raw {
        let lam = AlcoveWeight::new(parts).expect("generated weakly decreasing");
        let shifted = lam.shifted(params.a, params.b, params);
        if lam.dominated_by(&shifted) {
            shapes.push(lam);
        }
    }
    shapes
}

/// Orbit representatives of the tableaux modulo `<D, L>`: pairs
/// `(lambda, sigma)` with `lambda_N = 0`, `lambda_1 <= K`, the label 1 in the
/// first row, and the wrap condition along the bottom row.
pub fn enumerate_mod_dl(params: &Params) -> Vec<(AlcoveWeight, Dpt)> {
    let mut out = Vec::new();
    for lam in normalized_shapes(params) {
        for dpt in enumerate_fillings(&lam, params).expect("shape admits a domain") {
            if dpt.cell_of_value(1).y == 0 {
                out.push((lam.clone(), dpt));
            }
        }
    }
    out
}

/// Orbit representatives of the tableaux modulo `<pi>`: same shapes, with
/// the label 1 in the `N`-th row instead.
pub fn enumerate_mod_pi(params: &Params) -> Vec<(AlcoveWeight, Dpt)> {
    let mut out = Vec::new();
    for lam in normalized_shapes(params) {
        for dpt in enumerate_fillings(&lam, params).expect("shape admits a domain") {
            if dpt.cell_of_value(1).y == params.big_n - 1 {
                out.push((lam.clone(), dpt));
            }
        }
    }
    out
}

/// The explicit bijection from mod-`<D, L>` representatives to mod-`<pi>`
/// representatives: apply `L^{-1} D^{K - lambda_1}`.
pub fn bijection_dl_to_pi(pair: &(AlcoveWeight, Dpt)) -> Result<(AlcoveWeight, Dpt)> {
    let (lam, dpt) = pair;
    let params = *dpt.params();
    let n = params.big_n;
    if lam.parts()[n as usize - 1] != 0 || dpt.cell_of_value(1).y != 0 {
        return Err(Error::InvalidFilling(
            "input is not a mod-<D,L> representative (need lambda_N = 0 and 1 in the first row)"
                .into(),
        ));
    }
    let c = params.big_k - lam.parts()[0];
    let mut word = vec![Symmetry::D; c.unsigned_abs() as usize];
    if c < 0 {
        word = vec![Symmetry::DInv; c.unsigned_abs() as usize];
    }
    word.push(Symmetry::LInv);
    let image = act_symmetries(&word, dpt);
    let ilam = image.weight().clone();
    debug_assert_eq!(ilam.parts()[n as usize - 1], 0);
    debug_assert_eq!(image.cell_of_value(1).y, n - 1);
    Ok((ilam, image))
}

/// Inverse of [`bijection_dl_to_pi`]: apply `D^{-mu_{N-1}} L`.
pub fn bijection_pi_to_dl(pair: &(AlcoveWeight, Dpt)) -> Result<(AlcoveWeight, Dpt)> {
    let (mu, dpt) = pair;
    let params = *dpt.params();
    let n = params.big_n as usize;
    if mu.parts()[n - 1] != 0 || dpt.cell_of_value(1).y != params.big_n - 1 {
        return Err(Error::InvalidFilling(
            "input is not a mod-<pi> representative (need mu_N = 0 and 1 in the last row)".into(),
        ));
    }
    let c = if n >= 2 {
        mu.parts()[n - 2]
    } else {
        mu.parts()[0] + params.big_k
    };
    let mut word = vec![Symmetry::L];
    let d_step = if c >= 0 { Symmetry::DInv } else { Symmetry::D };
    word.extend(std::iter::repeat_n(d_step, c.unsigned_abs() as usize));
    let image = act_symmetries(&word, dpt);
    Ok((image.weight().clone(), image))
}

/// One step of a rational Dyck path, read along the walk that pairs the
/// `K` horizontal and `N` vertical moves of one lattice-path period.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DyckStep {
    Right,
    Down,
}

/// A `(K, N)`-Dyck path: one period of a periodic lattice path, normalized
/// so the supporting line of slope `-K/N` touches at the row-0 corner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyckPath {
    pub big_k: i64,
    pub big_n: i64,
    /// The partition of vertical-step positions, with `lambda_N = 0`.
    pub lambda: Vec<i64>,
    /// Step word of length `K + N`.
    pub steps: Vec<DyckStep>,
}

impl DyckPath {
    fn from_weight(lam: &AlcoveWeight, params: &Params) -> Self {
        let path_value = |y: i64| lam.path_value(y, params);
        let mut steps = Vec::with_capacity((params.big_k + params.big_n) as usize);
        for y in (0..params.big_n).rev() {
            for _ in 0..(path_value(y) - path_value(y + 1)) {
                steps.push(DyckStep::Right);
            }
            steps.push(DyckStep::Down);
        }
        DyckPath {
            big_k: params.big_k,
            big_n: params.big_n,
            lambda: lam.parts().to_vec(),
            steps,
        }
    }

    pub fn word_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                DyckStep::Right => 'R',
                DyckStep::Down => 'D',
            })
            .collect()
    }
}

/// Enumerate the quotient via Dyck paths (`gcd(K, N) = 1` required): each
/// path contributes all fillings of its skew shape passing the wrap
/// condition, with no constraint on the position of 1.
pub fn dyck_enumeration(params: &Params) -> Result<Vec<(DyckPath, Dpt)>> {
    if gcd_i64(params.big_k, params.big_n) != 1 {
        return Err(Error::GcdViolation(format!(
            "Dyck enumeration needs gcd(K, N) = 1, got gcd({}, {}) = {}",
            params.big_k,
            params.big_n,
            gcd_i64(params.big_k, params.big_n)
        )));
    }
    let mut out = Vec::new();
    for lam in normalized_shapes(params) {
        // canonical representative: the supporting line N*x + K*y touches the
        // path at the row-0 corner (unique since gcd(K, N) = 1)
        let corner_height = |y: i64| params.big_n * lam.parts()[y as usize] + params.big_k * y;
        let argmin = (0..params.big_n)
            .min_by_key(|&y| corner_height(y))
            .expect("N >= 1");
        if argmin != 0 {
            continue;
        }
        let path = DyckPath::from_weight(&lam, params);
        for dpt in enumerate_fillings(&lam, params)? {
            out.push((path.clone(), dpt));
        }
    }
    Ok(out)
}

/// Report of the `K^{m-1}` bound check for `gcd(K, a) = 1`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UpperBoundReport {
    pub count: u64,
    pub bound: String,
    pub ok: bool,
}

pub fn verify_upper_bound(params: &Params) -> Result<UpperBoundReport> {
    if gcd_i64(params.big_k, params.a) != 1 {
        return Err(Error::GcdViolation(format!(
            "upper bound needs gcd(K, a) = 1, got gcd({}, {})",
            params.big_k, params.a
        )));
    }
    let count = enumerate_mod_dl(params).len() as u64;
    let bound = BigInt::from(params.big_k).pow((params.m - 1) as u32);
    let ok = BigInt::from(count) <= bound;
    Ok(UpperBoundReport {
        count,
        bound: bound.to_string(),
        ok,
    })
}

/// An excited diagram: a subset of `Delta_0(lambda) = lambda[a,b] \ omega(lambda)`
/// reachable from `lambda \ omega(lambda)` by excited moves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExcitedDiagram {
    pub cells: Vec<Cell>,
}

/// All excited diagrams of `lambda \ omega(lambda)` inside
/// `Delta_0(lambda) = lambda[a,b] \ omega(lambda)`, with the rectangle
/// `omega(lambda)` normalized to the origin.
pub fn excited_diagrams_for(weight: &AlcoveWeight, params: &Params) -> Result<Vec<ExcitedDiagram>> {
    let shifted = weight.shifted(params.a, params.b, params);
    if !weight.dominated_by(&shifted) {
        return Err(Error::ShiftOrder {
            lambda: weight.parts().to_vec(),
        });
    }
    let floor = weight.parts()[weight.len() - 1];
    let mu: Vec<i64> = shifted.parts().iter().map(|p| p - floor).collect();
    let nu: Vec<i64> = weight.parts().iter().map(|p| p - floor).collect();
    Ok(excited_diagrams(&mu, &nu))
}

/// All excited diagrams of `nu` inside the straight shape `mu`
/// (partitions with nonnegative parts, `nu` contained in `mu`).
fn excited_diagrams(mu: &[i64], nu: &[i64]) -> Vec<ExcitedDiagram> {
    let in_mu = |c: Cell| -> bool {
        c.y >= 0 && (c.y as usize) < mu.len() && c.x >= 0 && c.x < mu[c.y as usize]
    };
    let start: BTreeSet<Cell> = nu
        .iter()
        .enumerate()
        .flat_map(|(y, &len)| (0..len).map(move |x| Cell::new(x, y as i64)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        for &u in &d {
            let targets = [u.shift(1, 0), u.shift(0, 1), u.shift(1, 1)];
            if targets.iter().all(|c| in_mu(*c) && !d.contains(c)) {
                let mut next = d.clone();
                next.remove(&u);
                next.insert(u.shift(1, 1));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.into_iter()
        .map(|d| ExcitedDiagram {
            cells: d.into_iter().collect(),
        })
        .collect()
}

/// Hook length of `u` inside the straight shape `mu`: arm to the right edge
/// of the row plus leg down the column plus one.
fn hook_length(mu: &[i64], u: Cell) -> i64 {
    let arm = mu[u.y as usize] - u.x - 1;
    let leg = mu[(u.y + 1) as usize..]
        .iter()
        .take_while(|&&len| len > u.x)
        .count() as i64;
    arm + leg + 1
}

/// Excited-diagram hook-length count of the fillings of `Delta(lambda)`, in
/// the regime `a <= K`, `b >= N - 1` where every standard filling extends:
/// `m! * sum over excited diagrams D of prod_{u not in D} 1 / h(u)`,
/// with hooks taken in `Delta_0(lambda) = lambda[a,b] \ omega(lambda)`.
pub fn naruse_count(weight: &AlcoveWeight, params: &Params) -> Result<BigRational> {
    if params.a > params.big_k || params.b < params.big_n - 1 {
        return Err(Error::RegimeViolation(format!(
            "(a, b) = ({}, {}) with (K, N) = ({}, {})",
            params.a, params.b, params.big_k, params.big_n
        )));
    }
    let shifted = weight.shifted(params.a, params.b, params);
    if !weight.dominated_by(&shifted) {
        return Err(Error::ShiftOrder {
            lambda: weight.parts().to_vec(),
        });
    }
    let floor = weight.parts()[weight.len() - 1];
    // normalize the rectangle omega(lambda) to the origin
    let mu: Vec<i64> = shifted.parts().iter().map(|p| p - floor).collect();
    let nu: Vec<i64> = weight.parts().iter().map(|p| p - floor).collect();
    let mut total = BigRational::zero();
    for diagram in excited_diagrams(&mu, &nu) {
        let excluded: BTreeSet<Cell> = diagram.cells.iter().copied().collect();
        let mut term = BigRational::one();
        for (y, &len) in mu.iter().enumerate() {
            for x in 0..len {
                let u = Cell::new(x, y as i64);
                if !excluded.contains(&u) {
                    term /= BigRational::from_integer(hook_length(&mu, u).into());
                }
            }
        }
        total += term;
    }
    let mut factorial = BigRational::one();
    for k in 1..=params.m {
        factorial *= BigRational::from_integer(k.into());
    }
    let result = factorial * total;
    debug_assert!(result.denom().is_one() && !result.numer().is_negative());
    Ok(result)
}

/// Compare the hook-length count with direct enumeration for one shape.
/// Returns the formula value (as a decimal string), the enumerated count,
/// and whether they agree.
pub fn naruse_check(weight: &AlcoveWeight, params: &Params) -> Result<(String, usize, bool)> {
    let formula = naruse_count(weight, params)?;
    let direct = enumerate_fillings(weight, params)?.len();
    let ok = formula == BigRational::from_integer(direct.into());
    Ok((formula.to_string(), direct, ok))
}

/// Report of the group identities `pi^m = D^{-a} L^b` and `D^K L^{-N} = id`
/// checked on a sample of tableaux.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupIdentityReport {
    pub checked: usize,
    pub pi_m_identity_ok: bool,
    pub dk_ln_identity_ok: bool,
}

pub fn verify_group_identities(params: &Params, sample: &[Dpt]) -> GroupIdentityReport {
    let mut pi_ok = true;
    let mut dl_ok = true;
    for dpt in sample {
        let mut lhs = dpt.clone();
        for _ in 0..params.m {
            lhs = act_symmetries(&[Symmetry::Pi], &lhs);
        }
        let mut rhs = dpt.clone();
        let d_step = if params.a >= 0 {
            Symmetry::DInv
        } else {
            Symmetry::D
        };
        for _ in 0..params.a.unsigned_abs() {
            rhs = act_symmetries(&[d_step], &rhs);
        }
        let l_step = if params.b >= 0 {
            Symmetry::L
        } else {
            Symmetry::LInv
        };
        for _ in 0..params.b.unsigned_abs() {
            rhs = act_symmetries(&[l_step], &rhs);
        }
        pi_ok &= lhs == rhs;

        let mut cur = dpt.clone();
        for _ in 0..params.big_k {
            cur = act_symmetries(&[Symmetry::D], &cur);
        }
        for _ in 0..params.big_n {
            cur = act_symmetries(&[Symmetry::LInv], &cur);
        }
        dl_ok &= cur == *dpt;
    }
    GroupIdentityReport {
        checked: sample.len(),
        pi_m_identity_ok: pi_ok,
        dk_ln_identity_ok: dl_ok,
    }
}

/// Counts emitted by the CLI `count` subcommand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CountSummary {
    pub params: Params,
    pub mod_dl: usize,
    pub mod_pi: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dyck: Option<usize>,
}

pub fn count_summary(params: &Params) -> CountSummary {
    let dyck = if gcd_i64(params.big_k, params.big_n) == 1 {
        Some(dyck_enumeration(params).expect("gcd checked").len())
    } else {
        None
    };
    CountSummary {
        params: *params,
        mod_dl: enumerate_mod_dl(params).len(),
        mod_pi: enumerate_mod_pi(params).len(),
        dyck,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params3241() -> Params {
        Params::new(3, 2, 4, 1).unwrap()
    }

    fn w(parts: &[i64]) -> AlcoveWeight {
        AlcoveWeight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn eleven_classes_mod_dl() {
        let p = params3241();
        let reps = enumerate_mod_dl(&p);
        // the full worked-example list: shape (3,0) contributes nothing,
        // then three fillings of (2,0), five of (1,0), three of (0,0)
        let words: Vec<String> = reps.iter().map(|(_, d)| d.word_string()).collect();
        assert_eq!(
            words,
            vec![
                "24513@(2,0)",
                "23514@(2,0)",
                "23415@(2,0)",
                "35124@(1,0)",
                "34125@(1,0)",
                "25134@(1,0)",
                "24135@(1,0)",
                "23145@(1,0)",
                "41235@(0,0)",
                "31245@(0,0)",
                "21345@(0,0)",
            ]
        );
    }

    #[test]
    fn eleven_classes_mod_pi_and_first_element() {
        let p = params3241();
        let reps = enumerate_mod_pi(&p);
        let words: Vec<String> = reps.iter().map(|(_, d)| d.word_string()).collect();
        // first listed element: shape (3,0), rows (.,.,.,2 / 1,3,4,5),
        // reading word 13452; shape (0,0) contributes nothing
        // (1 cannot sit below the top row there)
        assert_eq!(
            words,
            vec![
                "13452@(3,0)",
                "12453@(3,0)",
                "12354@(3,0)",
                "14523@(2,0)",
                "13524@(2,0)",
                "13425@(2,0)",
                "12534@(2,0)",
                "12435@(2,0)",
                "15234@(1,0)",
                "14235@(1,0)",
                "13245@(1,0)",
            ]
        );
    }

    #[test]
    fn bijection_is_a_bijection_on_3241() {
        let p = params3241();
        let dl = enumerate_mod_dl(&p);
        let pi = enumerate_mod_pi(&p);
        let mut images: Vec<(AlcoveWeight, Dpt)> = Vec::new();
        for pair in &dl {
            let img = bijection_dl_to_pi(pair).unwrap();
            // image satisfies the mod-pi conditions
            assert_eq!(img.1.cell_of_value(1).y, p.big_n - 1);
            // inverse recovers the input
            let back = bijection_pi_to_dl(&img).unwrap();
            assert_eq!(&back, pair);
            images.push(img);
        }
        let mut imgset: Vec<String> = images.iter().map(|(_, d)| d.word_string()).collect();
        let mut piset: Vec<String> = pi.iter().map(|(_, d)| d.word_string()).collect();
        imgset.sort();
        piset.sort();
        assert_eq!(imgset, piset);
    }

    #[test]
    fn counts_for_4310() {
        let p = Params::new(4, 3, 1, 0).unwrap();
        assert_eq!(enumerate_mod_dl(&p).len(), 16);
        assert_eq!(enumerate_mod_pi(&p).len(), 16);
    }

    #[test]
    fn k_to_the_n_minus_one_small_grid() {
        for k in 2..=4 {
            for n in 2..=3 {
                let p = Params::new(k, n, 1, 0).unwrap();
                let expected = (k as u64).pow(n as u32 - 1);
                assert_eq!(enumerate_mod_dl(&p).len() as u64, expected, "({k},{n},1,0)");
            }
        }
    }

    #[test]
    fn single_row_case() {
        // N = 1: one admissible shape (0), one filling per shape
        let p = Params::new(4, 1, 3, 0).unwrap();
        let reps = enumerate_mod_dl(&p);
        assert_eq!(reps.len(), 1);
        assert_eq!(enumerate_mod_pi(&p).len(), 1);
        // degenerate bijection: L followed by D-normalization is the identity
        // map on the single representative
        let img = bijection_dl_to_pi(&reps[0]).unwrap();
        assert_eq!(img, reps[0]);
        assert_eq!(bijection_pi_to_dl(&img).unwrap(), reps[0]);
    }

    #[test]
    fn dyck_enumeration_3241() {
        let p = params3241();
        let pairs = dyck_enumeration(&p).unwrap();
        assert_eq!(pairs.len(), 11);
        let mut paths: Vec<String> = pairs.iter().map(|(d, _)| d.word_string()).collect();
        paths.dedup();
        assert_eq!(paths.len(), 2);
        // shapes are the orbit representatives (1,0) and (0,0), with the
        // worked example's 8 + 3 fillings (no constraint on the label 1)
        let words = |parts: &[i64]| -> Vec<String> {
            pairs
                .iter()
                .filter(|(d, _)| d.lambda == parts)
                .map(|(_, f)| f.word_string())
                .collect()
        };
        assert_eq!(
            words(&[1, 0]),
            vec![
                "35124@(1,0)",
                "34125@(1,0)",
                "25134@(1,0)",
                "24135@(1,0)",
                "23145@(1,0)",
                "15234@(1,0)",
                "14235@(1,0)",
                "13245@(1,0)",
            ]
        );
        assert_eq!(
            words(&[0, 0]),
            vec!["41235@(0,0)", "31245@(0,0)", "21345@(0,0)"]
        );
        // gcd violation rejected
        let p22 = Params::new(2, 2, 2, 1).unwrap();
        assert!(dyck_enumeration(&p22).is_err());
    }

    #[test]
    fn dyck_equals_mod_dl_when_coprime() {
        for (k, n, a, b) in [
            (3, 2, 4, 1),
            (4, 3, 1, 0),
            (5, 2, 3, 1),
            (3, 4, 1, 0),
            (2, 1, 1, 0),
        ] {
            let p = Params::new(k, n, a, b).unwrap();
            assert_eq!(
                dyck_enumeration(&p).unwrap().len(),
                enumerate_mod_dl(&p).len(),
                "({k},{n},{a},{b})"
            );
        }
    }

    #[test]
    fn dyck_single_path_when_n_is_one() {
        let p = Params::new(2, 1, 1, 0).unwrap();
        let pairs = dyck_enumeration(&p).unwrap();
        let mut paths: Vec<String> = pairs.iter().map(|(d, _)| d.word_string()).collect();
        paths.dedup();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0], "RRD");
    }

    #[test]
    fn upper_bound_3241() {
        let p = params3241();
        let report = verify_upper_bound(&p).unwrap();
        assert_eq!(report.count, 11);
        assert_eq!(report.bound, "81");
        assert!(report.ok);
        // m = 1: bound 1, count 1
        let p1 = Params::new(3, 1, 1, 0).unwrap();
        let report = verify_upper_bound(&p1).unwrap();
        assert_eq!(
            (report.count, report.bound.as_str(), report.ok),
            (1, "1", true)
        );
        // equality pattern: (K, N, 1, 0) with m = N hits K^(N-1) on the nose
        let p2 = Params::new(3, 3, 1, 0).unwrap();
        let report = verify_upper_bound(&p2).unwrap();
        assert_eq!(
            (report.count, report.bound.as_str(), report.ok),
            (9, "9", true)
        );
        // gcd violation
        let bad = Params::new(4, 3, 2, 0).unwrap();
        assert!(verify_upper_bound(&bad).is_err());
    }

    #[test]
    fn naruse_matches_enumeration() {
        // (3,2,3,1): regime a <= K, b >= N-1
        let p = Params::new(3, 2, 3, 1).unwrap();
        assert_eq!(p.m, 3);
        for lam in [w(&[0, 0]), w(&[1, 0]), w(&[2, 0]), w(&[3, 0])] {
            let shifted = lam.shifted(p.a, p.b, &p);
            if !lam.dominated_by(&shifted) {
                continue;
            }
            let count = naruse_count(&lam, &p).unwrap();
            let expected = enumerate_fillings(&lam, &p).unwrap().len();
            assert_eq!(count, BigRational::from_integer(expected.into()), "{lam}");
        }
        // regime violation
        let bad = params3241();
        assert!(naruse_count(&w(&[0, 0]), &bad).is_err());
    }

    #[test]
    fn naruse_straight_shape_is_hook_length_formula() {
        // lambda = 0: Delta_0 = lambda[a,b], no excited cells, plain hooks
        let p = Params::new(3, 2, 3, 1).unwrap();
        let lam = w(&[0, 0]);
        let count = naruse_count(&lam, &p).unwrap();
        // lambda[3,1] = (3 + 0 - 3 + ... ) compute: L^{-1}(0,0) = (0,-3), D^3 -> (3,0)
        // shape (3,0): hooks 3,2,1 -> 3!/6 = 1
        assert_eq!(count, BigRational::from_integer(1.into()));
    }

    #[test]
    fn single_cell_excited_region() {
        let p = Params::new(1, 1, 1, 0).unwrap();
        let lam = w(&[0]);
        assert_eq!(
            naruse_count(&lam, &p).unwrap(),
            BigRational::from_integer(1.into())
        );
    }

    #[test]
    fn group_identities_on_quotient_and_linear() {
        let p = params3241();
        let sample: Vec<Dpt> = enumerate_mod_dl(&p).into_iter().map(|(_, d)| d).collect();
        let report = verify_group_identities(&p, &sample);
        assert_eq!(report.checked, 11);
        assert!(report.pi_m_identity_ok);
        assert!(report.dk_ln_identity_ok);
        let lin = vec![crate::tableaux::linear_dpt(&p, 0)];
        let report = verify_group_identities(&p, &lin);
        assert!(report.pi_m_identity_ok && report.dk_ln_identity_ok);
    }

    #[test]
    fn count_summary_shape() {
        let p = params3241();
        let s = count_summary(&p);
        assert_eq!((s.mod_dl, s.mod_pi, s.dyck), (11, 11, Some(11)));
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"mod_dl\":11"));
    }
}
