//! Ranks of multiplication by powers of a linear form, Lefschetz verdicts,
//! Jordan types and higher Hessians.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::{pairing_against, quotient_basis, ArtinAlgebra, DualGenerator, Presentation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::DenseMatrix;
use crate::poly::{monomial_basis, LinearForm, Monomial, Polynomial};
use crate::sequences::Partition;

/// Jordan block sizes of multiplication by a linear form.
pub type JordanType = Partition;

/// Upper bound on `p^r` for scanning every linear form over `F_p`.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000;

fn check_form(a: &ArtinAlgebra, ell: &LinearForm) -> Result<()> {
    if ell.field() != a.field() || ell.varcount() != a.varcount() {
        return Err(Error::DomainMismatch);
    }
    Ok(())
}

/// `l^k o F` in dual mode, `l^k` itself in monomial mode.
enum PowerData {
    Contracted(Polynomial),
    Power(Polynomial),
}

fn power_data(a: &ArtinAlgebra, ell: &LinearForm, k: usize) -> Result<PowerData> {
    let lk = ell.to_polynomial().power(k as u32);
    Ok(match a.presentation() {
        Presentation::Dual(f) => PowerData::Contracted(lk.contract(f.form())?),
        Presentation::MonomialIdeal(_) => PowerData::Power(lk),
    })
}

fn matrix_from(a: &ArtinAlgebra, data: &PowerData, i: usize, k: usize) -> Result<DenseMatrix> {
    match data {
        PowerData::Contracted(g) => Ok(pairing_against(g, a.socle_degree() - k, i)),
        PowerData::Power(lk) => a.multiplication_matrix(lk, i, k),
    }
}

fn rank_from(a: &ArtinAlgebra, data: &PowerData, i: usize, k: usize) -> Result<usize> {
    let j = a.socle_degree();
    if i > j || i + k > j {
        return Ok(0);
    }
    Ok(matrix_from(a, data, i, k)?.rank())
}

/// In dual mode, the matrix with entries `(m_u m_v l^k) o F` for `m_u` of
/// degree `i` and `m_v` of degree `j - i - k`; in monomial mode, the matrix
/// of multiplication by `l^k` from `A_i` to `A_{i+k}` on standard monomials.
/// Either way its rank is the rank of `l^k: A_i -> A_{i+k}`.
pub fn pairing_matrix(a: &ArtinAlgebra, ell: &LinearForm, i: usize, k: usize) -> Result<DenseMatrix> {
    check_form(a, ell)?;
    if let Presentation::Dual(_) = a.presentation() {
        let j = a.socle_degree();
        if i + k > j {
            return Err(Error::OutOfRange {
                what: "i + k",
                value: (i + k) as i64,
                min: 0,
                max: j as i64,
            });
        }
    }
    matrix_from(a, &power_data(a, ell, k)?, i, k)
}

/// Rank of `l^k: A_i -> A_{i+k}`; zero when either side is past the socle.
pub fn mult_rank(a: &ArtinAlgebra, ell: &LinearForm, i: usize, k: usize) -> Result<usize> {
    check_form(a, ell)?;
    rank_from(a, &power_data(a, ell, k)?, i, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankEntry {
    pub i: usize,
    pub k: usize,
    pub rank: usize,
    /// `min(T_i, T_{i+k})`.
    pub target: usize,
    pub full: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictMode {
    AtForm,
    Generic,
}

/// Bookkeeping for a sampled search over linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericSearch {
    pub trials_used: usize,
    /// 1-based index of the reported witness in trial order.
    pub witness_trial: usize,
    /// Monomial mode: the all-ones form settles every question.
    pub decisive: bool,
    /// Every nonzero form over the prime field was tried.
    pub exhaustive: bool,
    /// Largest rank seen for each weak map, in table order.
    pub max_weak_ranks: Vec<usize>,
    /// Largest rank seen for each strong map, in table order.
    pub max_strong_ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub witness: LinearForm,
    /// `l: A_i -> A_{i+1}` for `i = 0..j-1`.
    pub weak_maps: Vec<RankEntry>,
    /// `l^{j-2i}: A_i -> A_{j-i}` for `i = 0..=j/2`.
    pub strong_maps: Vec<RankEntry>,
    pub wl: bool,
    /// `None` when the Hilbert function is not symmetric.
    pub sl: Option<bool>,
    pub almost_sl: Option<bool>,
    pub mode: VerdictMode,
    pub search: Option<GenericSearch>,
    pub notes: Vec<String>,
}

impl LefschetzVerdict {
    pub fn trials_used(&self) -> usize {
        self.search.as_ref().map_or(1, |s| s.trials_used)
    }

    pub fn is_decisive(&self) -> bool {
        self.search.as_ref().is_some_and(|s| s.decisive)
    }

    pub fn total_rank(&self) -> usize {
        self.weak_maps.iter().chain(&self.strong_maps).map(|e| e.rank).sum()
    }

    fn score(&self) -> (bool, bool, bool, usize) {
        (
            self.sl == Some(true),
            self.almost_sl == Some(true),
            self.wl,
            self.total_rank(),
        )
    }
}

pub fn verdict_at(a: &ArtinAlgebra, ell: &LinearForm) -> Result<LefschetzVerdict> {
    check_form(a, ell)?;
    if ell.is_zero() {
        return Err(Error::ZeroForm);
    }
    let t = a.hilbert_function();
    let j = a.socle_degree();

    let one = power_data(a, ell, 1)?;
    let mut weak_maps = Vec::with_capacity(j);
    for i in 0..j {
        let rank = rank_from(a, &one, i, 1)?;
        let target = t.get(i).min(t.get(i + 1));
        weak_maps.push(RankEntry { i, k: 1, rank, target, full: rank == target });
    }

    let mut strong_maps = Vec::with_capacity(j / 2 + 1);
    for i in 0..=j / 2 {
        let k = j - 2 * i;
        let rank = rank_from(a, &power_data(a, ell, k)?, i, k)?;
        let target = t.get(i).min(t.get(j - i));
        strong_maps.push(RankEntry { i, k, rank, target, full: rank == target });
    }

    let wl = weak_maps.iter().all(|e| e.full);
    let (sl, almost_sl) = if t.is_symmetric() {
        (
            Some(strong_maps.iter().all(|e| e.full)),
            Some(strong_maps.iter().all(|e| e.full || e.i == 1)),
        )
    } else {
        (None, None)
    };
    Ok(LefschetzVerdict {
        witness: ell.clone(),
        weak_maps,
        strong_maps,
        wl,
        sl,
        almost_sl,
        mode: VerdictMode::AtForm,
        search: None,
        notes: Vec::new(),
    })
}

/// Linear forms tried by [`generic_verdict`] after the all-ones form.
enum Candidates {
    None,
    Sampled { rng: Box<ChaCha8Rng>, left: usize, field: FieldSpec, r: usize },
    Exhaustive { next: u64, total: u64, field: FieldSpec, r: usize },
}

impl Iterator for Candidates {
    type Item = LinearForm;

    fn next(&mut self) -> Option<LinearForm> {
        match self {
            Candidates::None => None,
            Candidates::Sampled { rng, left, field, r } => {
                if *left == 0 {
                    return None;
                }
                *left -= 1;
                loop {
                    let coefficients: Vec<Scalar> = (0..*r)
                        .map(|_| match field.characteristic() {
                            0 => field.from_i64(rng.gen_range(1..=101)),
                            p => field.from_u64(rng.gen_range(0..p)),
                        })
                        .collect();
                    let ell = LinearForm::new(coefficients).expect("coefficients share a field");
                    if !ell.is_zero() {
                        return Some(ell);
                    }
                }
            }
            Candidates::Exhaustive { next, total, field, r } => {
                let p = field.characteristic();
                let ones: u64 = (0..*r).fold(0, |acc, _| acc * p + 1);
                while *next < *total {
                    let n = *next;
                    *next += 1;
                    if n == 0 || n == ones {
                        continue;
                    }
                    let mut digits = vec![0u64; *r];
                    let mut rest = n;
                    for d in digits.iter_mut().rev() {
                        *d = rest % p;
                        rest /= p;
                    }
                    let ell = LinearForm::new(digits.into_iter().map(|d| field.from_u64(d)).collect())
                        .expect("coefficients share a field");
                    return Some(ell);
                }
                None
            }
        }
    }
}

/// Searches for a linear form with the best Lefschetz behaviour.
///
/// The all-ones form goes first. Monomial ideals stop there since every
/// form with nonzero coefficients is a torus translate of it. Otherwise
/// `trials - 1` seeded forms are drawn (coefficients in `1..=101` over `Q`),
/// or every nonzero form when the prime field is small enough to scan.
pub fn generic_verdict(a: &ArtinAlgebra, trials: usize, seed: u64) -> Result<LefschetzVerdict> {
    if trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let (field, r) = (a.field(), a.varcount());
    let symmetric = a.hilbert_function().is_symmetric();
    let monomial = matches!(a.presentation(), Presentation::MonomialIdeal(_));
    let p = field.characteristic();
    let space = (p > 0).then(|| p.checked_pow(r as u32)).flatten();
    let exhaustive = !monomial && space.is_some_and(|n| n <= EXHAUSTIVE_LIMIT);

    let rest = if monomial {
        Candidates::None
    } else if exhaustive {
        Candidates::Exhaustive { next: 0, total: space.unwrap(), field, r }
    } else {
        Candidates::Sampled {
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            left: trials - 1,
            field,
            r,
        }
    };

    let mut best: Option<(LefschetzVerdict, usize)> = None;
    let mut max_weak: Vec<usize> = Vec::new();
    let mut max_strong: Vec<usize> = Vec::new();
    let mut used = 0;
    for ell in std::iter::once(LinearForm::all_ones(field, r)).chain(rest) {
        let v = verdict_at(a, &ell)?;
        used += 1;
        if max_weak.is_empty() {
            max_weak = v.weak_maps.iter().map(|e| e.rank).collect();
            max_strong = v.strong_maps.iter().map(|e| e.rank).collect();
        } else {
            for (m, e) in max_weak.iter_mut().zip(&v.weak_maps) {
                *m = (*m).max(e.rank);
            }
            for (m, e) in max_strong.iter_mut().zip(&v.strong_maps) {
                *m = (*m).max(e.rank);
            }
        }
        let better = best.as_ref().is_none_or(|(b, _)| v.score() > b.score());
        if better {
            best = Some((v, used));
        }
        let done = best.as_ref().is_some_and(|(b, _)| {
            if symmetric {
                b.sl == Some(true)
            } else {
                b.wl
            }
        });
        if done {
            break;
        }
    }

    let (mut verdict, witness_trial) = best.expect("at least the all-ones form was tried");
    verdict.mode = VerdictMode::Generic;
    let mut notes = Vec::new();
    let failed: Vec<&str> = [
        ("wl", Some(verdict.wl)),
        ("almost_sl", verdict.almost_sl),
        ("sl", verdict.sl),
    ]
    .into_iter()
    .filter(|(_, v)| *v == Some(false))
    .map(|(name, _)| name)
    .collect();
    for name in &failed {
        if monomial {
            notes.push(format!(
                "{name} fails for x1+...+xr, hence for every form with nonzero coefficients (decisive)"
            ));
        } else if exhaustive {
            notes.push(format!(
                "{name}: no witness among all {used} nonzero forms over {field}; extension fields were not searched"
            ));
        } else {
            notes.push(format!("{name}: no witness found in {used} trials"));
        }
    }
    if p > 0 && !monomial && failed.is_empty() {
        notes.push(format!("witness found over {field}; genericity over an infinite field is not implied"));
    }
    verdict.notes = notes;
    verdict.search = Some(GenericSearch {
        trials_used: used,
        witness_trial,
        decisive: monomial,
        exhaustive,
        max_weak_ranks: max_weak,
        max_strong_ranks: max_strong,
    });
    Ok(verdict)
}

/// Block sizes from `r_k = rank l^k` on all of `A`: there are
/// `r_{k-1} - 2 r_k + r_{k+1}` blocks of size `k`.
pub fn jordan_type(a: &ArtinAlgebra, ell: &LinearForm) -> Result<JordanType> {
    check_form(a, ell)?;
    if ell.is_zero() {
        return Err(Error::ZeroForm);
    }
    let j = a.socle_degree();
    let mut ranks = vec![a.dimension()];
    for k in 1..=j + 1 {
        let data = power_data(a, ell, k)?;
        let mut total = 0;
        for i in 0..=j {
            total += rank_from(a, &data, i, k)?;
        }
        ranks.push(total);
    }
    ranks.push(0);
    jordan_from_ranks(&ranks)
}

/// Partition from `r_0, r_1, ...` (trailing entries must reach zero).
pub fn jordan_from_ranks(ranks: &[usize]) -> Result<JordanType> {
    let mut parts = Vec::new();
    for k in 1..ranks.len() {
        let next = ranks.get(k + 1).copied().unwrap_or(0) as i64;
        let count = ranks[k - 1] as i64 - 2 * ranks[k] as i64 + next;
        if count < 0 {
            return Err(Error::Internal(format!(
                "negative count {count} of Jordan blocks of size {k} from ranks {ranks:?}"
            )));
        }
        parts.extend(std::iter::repeat_n(k, count as usize));
    }
    let partition = Partition::new(parts);
    if partition.sum() != ranks[0] {
        return Err(Error::Internal(format!(
            "Jordan blocks {partition} do not add up to {}",
            ranks[0]
        )));
    }
    Ok(partition)
}

fn dp_eval(g: &Polynomial, point: &[Scalar]) -> Result<Scalar> {
    let field = g.field();
    let mut acc = field.zero();
    for (m, c) in g.terms() {
        let mut value = c.clone();
        let mut denom = field.one();
        for (a, &e) in point.iter().zip(m.exponents()) {
            value = value * a.pow(e);
            denom = denom * field.factorial(e as u64);
        }
        acc = acc + value.div(&denom)?;
    }
    Ok(acc)
}

/// Higher Hessian of `F` in degree `i`, on the basis of `A_i` chosen by
/// [`quotient_basis`], evaluated at `point` with divided powers
/// `X^e -> a^e / e!`.
pub fn hessian_matrix_at(f: &DualGenerator, i: usize, point: &[Scalar]) -> Result<DenseMatrix> {
    let (field, j) = (f.field(), f.socle_degree());
    let p = field.characteristic();
    if p != 0 && p <= j as u64 {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: p,
            socle_degree: j,
        });
    }
    if 2 * i > j {
        return Err(Error::OutOfRange {
            what: "Hessian degree",
            value: i as i64,
            min: 0,
            max: (j / 2) as i64,
        });
    }
    if point.len() != f.varcount() || point.iter().any(|a| a.field() != field) {
        return Err(Error::DomainMismatch);
    }
    let basis = quotient_basis(f, i)?;
    let mut entries = Vec::with_capacity(basis.len() * basis.len());
    for u in &basis {
        for v in &basis {
            let g = Polynomial::from_monomial(field, u.multiply(v)).contract(f.form())?;
            entries.push(dp_eval(&g, point)?);
        }
    }
    DenseMatrix::new(field, basis.len(), basis.len(), entries)
}

pub fn hessian_det_at(f: &DualGenerator, i: usize, point: &[Scalar]) -> Result<Scalar> {
    hessian_matrix_at(f, i, point)?.det()
}

/// Whether some nonzero linear form annihilates `F`.
pub fn is_cone(f: &DualGenerator) -> bool {
    if f.socle_degree() == 0 {
        return true;
    }
    pairing_against(f.form(), f.socle_degree(), 1).rank() < f.varcount()
}

/// A homogeneous form built from `terms` random monomials of degree `j`
/// with random nonzero coefficients.
pub fn random_form<R: Rng>(field: FieldSpec, varcount: usize, j: usize, terms: usize, rng: &mut R) -> Result<Polynomial> {
    let basis = monomial_basis(j as u32, varcount);
    let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms);
    for _ in 0..terms {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let c = match field.characteristic() {
            0 => field.from_i64(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 }),
            p => field.from_u64(rng.gen_range(1..p)),
        };
        out.push((m, c));
    }
    Polynomial::from_terms(field, varcount, out)
}

/// One sampled form in a search over `l^{j-2}: A_1 -> A_{j-1}`.
#[derive(Clone, Debug, Serialize)]
pub struct AlmostMapSample {
    pub form: Polynomial,
    pub hilbert: Vec<usize>,
    pub rank: usize,
    pub target: usize,
    pub full: bool,
    pub trials_used: usize,
}

/// Samples forms of degree `j` and records whether some tried linear form
/// makes `l^{j-2}: A_1 -> A_{j-1}` bijective. Forms that are cones are skipped.
pub fn search_almost_map(
    field: FieldSpec,
    varcount: usize,
    j: usize,
    forms: usize,
    terms: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<AlmostMapSample>> {
    if j < 2 {
        return Err(Error::OutOfRange {
            what: "socle degree",
            value: j as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(forms);
    let mut attempts = 0;
    while out.len() < forms && attempts < 100 * forms.max(1) {
        attempts += 1;
        let form = random_form(field, varcount, j, terms, &mut rng)?;
        if form.is_zero() {
            continue;
        }
        let f = DualGenerator::new(form.clone())?;
        if is_cone(&f) {
            continue;
        }
        let a = ArtinAlgebra::from_dual(f)?;
        let v = generic_verdict(&a, trials, rng.gen())?;
        let entry = &v.strong_maps[1];
        let best = v.search.as_ref().map_or(entry.rank, |s| s.max_strong_ranks[1]);
        out.push(AlmostMapSample {
            form,
            hilbert: a.hilbert_function().values().to_vec(),
            rank: best,
            target: entry.target,
            full: best == entry.target,
            trials_used: v.trials_used(),
        });
    }
    Ok(out)
}
