//! Hilbert-function combinatorics: invariants, Macaulay growth, O- and
//! SI-sequences, codimension-three Gorenstein sequences and partitions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::monomial_count;

/// A Hilbert function `(1, T_1, ..., T_j)` with no interior zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    /// Validates a sequence after trimming trailing zeros.
    pub fn new(mut values: Vec<usize>) -> Result<Self> {
        while values.last() == Some(&0) {
            values.pop();
        }
        if values.first() != Some(&1) {
            return Err(Error::Precondition(
                "a Hilbert function starts with 1".into(),
            ));
        }
        if values.contains(&0) {
            return Err(Error::Precondition(
                "a Hilbert function has no interior zeros".into(),
            ));
        }
        Ok(HilbertFunction(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `T_i`, zero past the socle degree.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn dimension(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sperner(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn is_unimodal(&self) -> bool {
        let peak = self
            .0
            .iter()
            .position(|&v| v == self.sperner())
            .unwrap_or(0);
        self.0[..=peak].windows(2).all(|w| w[0] <= w[1])
            && self.0[peak..].windows(2).all(|w| w[0] >= w[1])
    }

    /// `(1, d_1, ..., d_{j/2})` with `d_i = T_i - T_{i-1}`.
    pub fn first_difference(&self) -> Vec<i64> {
        let half = self.socle_degree() / 2;
        let mut out = vec![1i64];
        out.extend((1..=half).map(|i| self.0[i] as i64 - self.0[i - 1] as i64));
        out
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for HilbertFunction {
    type Err = Error;

    /// Reads `1,3,5,5,3,1`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut values = Vec::new();
        let mut offset = s.len() - s.trim_start().len();
        if s.trim_start().starts_with('(') {
            offset += 1;
        }
        for part in inner.split(',') {
            let v = part.trim().parse::<usize>().map_err(|_| Error::Syntax {
                position: offset,
                message: format!("`{}` is not a non-negative integer", part.trim()),
            })?;
            values.push(v);
            offset += part.len() + 1;
        }
        HilbertFunction::new(values)
    }
}

/// Numerical invariants read off a Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub socle_degree: usize,
    pub sperner: usize,
    pub order: usize,
    /// First degree where the Sperner number is attained.
    pub tau: usize,
    /// Number of degrees where the Sperner number is attained.
    pub multiplicity: usize,
    pub symmetric: bool,
    pub unimodal: bool,
}

/// Invariants with the order computed against three variables.
pub fn invariants(t: &HilbertFunction) -> Invariants {
    invariants_in(t, 3)
}

pub fn invariants_in(t: &HilbertFunction, varcount: usize) -> Invariants {
    let s = t.sperner();
    Invariants {
        socle_degree: t.socle_degree(),
        sperner: s,
        order: order(t, varcount),
        tau: t.values().iter().position(|&v| v == s).unwrap_or(0),
        multiplicity: t.values().iter().filter(|&&v| v == s).count(),
        symmetric: t.is_symmetric(),
        unimodal: t.is_unimodal(),
    }
}

/// Least degree where `T` falls short of the polynomial ring.
pub fn order(t: &HilbertFunction, varcount: usize) -> usize {
    (0..)
        .find(|&i| t.get(i) != monomial_count(i as u32, varcount))
        .expect("T vanishes eventually")
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Macaulay's bound `h^<d>`: expand `h = C(a_d,d) + C(a_{d-1},d-1) + ...`
/// greedily and raise every binomial by one in both entries.
pub fn macaulay_bound(h: u64, d: u64) -> u64 {
    let mut rest = h;
    let mut out = 0;
    let mut k = d;
    while rest > 0 && k > 0 {
        let mut a = k;
        while binomial(a + 1, k) <= rest {
            a += 1;
        }
        rest -= binomial(a, k);
        out += binomial(a + 1, k + 1);
        k -= 1;
    }
    out
}

/// Whether `h` satisfies Macaulay's growth condition, i.e. is the Hilbert
/// function of some standard graded algebra.
pub fn is_o_sequence(h: &[i64]) -> bool {
    if h.first() != Some(&1) || h.iter().any(|&v| v < 0) {
        return false;
    }
    (1..h.len().saturating_sub(1)).all(|d| h[d + 1] as u64 <= macaulay_bound(h[d] as u64, d as u64))
}

/// Symmetric, with first difference up to the middle an O-sequence.
pub fn is_si_sequence(t: &HilbertFunction) -> bool {
    t.is_symmetric() && is_o_sequence(&t.first_difference())
}

/// Direct codimension-two test on the first difference: full growth below
/// the order, then non-increasing and non-negative up to the middle.
fn difference_test(t: &HilbertFunction) -> bool {
    let delta = t.first_difference();
    let nu = order(t, 3);
    let half = delta.len() - 1;
    (1..=half).all(|i| {
        let d = delta[i];
        let next = if i < half { delta[i + 1] } else { 0 };
        if i < nu {
            d == i as i64 + 1
        } else {
            d <= i as i64 + 1 && d >= next
        }
    })
}

/// Whether `T` is the Hilbert function of a graded Artinian Gorenstein
/// quotient of `k[x,y,z]`. Two characterisations are evaluated and must
/// agree.
pub fn is_codim3_gorenstein_sequence(t: &HilbertFunction) -> Result<bool> {
    if t.get(1) != 3 || !t.is_symmetric() {
        return Ok(false);
    }
    let si = is_si_sequence(t);
    let direct = difference_test(t);
    if si != direct {
        return Err(Error::Internal(format!(
            "SI test ({si}) and difference test ({direct}) disagree on {t}"
        )));
    }
    Ok(si)
}

/// All codimension-three Gorenstein sequences with Sperner number at most
/// `max_sperner` and socle degree at most `max_socle`, shortest first and
/// lexicographically within a length.
pub fn enumerate_gorenstein_sequences(
    max_sperner: usize,
    max_socle: usize,
) -> Result<Vec<HilbertFunction>> {
    let mut out = Vec::new();
    if max_sperner < 3 {
        return Ok(out);
    }
    for j in 2..=max_socle {
        let half = j / 2;
        let mut front = vec![1usize, 3];
        collect_halves(&mut front, half, max_sperner, &mut |front| {
            let mut values = front.to_vec();
            for i in (half + 1)..=j {
                values.push(front[j - i]);
            }
            let t = HilbertFunction(values);
            if is_codim3_gorenstein_sequence(&t)? {
                out.push(t);
            }
            Ok(())
        })?;
    }
    Ok(out)
}

fn collect_halves(
    front: &mut Vec<usize>,
    half: usize,
    max: usize,
    emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if front.len() > half {
        return emit(front);
    }
    let last = *front.last().expect("front holds 1 and 3");
    for v in last..=max {
        front.push(v);
        collect_halves(front, half, max, emit)?;
        front.pop();
    }
    Ok(())
}

/// Which row of the strong-Lefschetz coverage tables a Gorenstein sequence
/// falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremTag {
    /// `(1,3,s^k,3,1)` with `3 <= s <= 6`.
    #[serde(rename = "SL-char0-Thm3.3")]
    ConstantPlateau,
    /// `(1,3,4,5,...)` with first difference `(1,2,1,...,1)`.
    #[serde(rename = "SL-char0-Thm3.6")]
    OrderTwoSingleTwo,
    /// `(1,3,5,6^k,5,3,1)`.
    #[serde(rename = "SL-char0-Thm3.8")]
    OneThreeFiveSix,
    /// `(1,3,5,6,...,s^k,...)` with `s >= 7`.
    #[serde(rename = "open-*")]
    OpenTwoTwos,
    /// First difference `(1,2^t,1,...)` with `t >= 3`, `s >= 7`.
    #[serde(rename = "open-**")]
    OpenManyTwos,
    #[serde(rename = "outside-tables")]
    OutsideTables,
}

impl TheoremTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremTag::ConstantPlateau => "SL-char0-Thm3.3",
            TheoremTag::OrderTwoSingleTwo => "SL-char0-Thm3.6",
            TheoremTag::OneThreeFiveSix => "SL-char0-Thm3.8",
            TheoremTag::OpenTwoTwos => "open-*",
            TheoremTag::OpenManyTwos => "open-**",
            TheoremTag::OutsideTables => "outside-tables",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a Gorenstein sequence by the shape of its first difference.
pub fn theorem_coverage(t: &HilbertFunction) -> Result<TheoremTag> {
    if !is_codim3_gorenstein_sequence(t)? {
        return Err(Error::Precondition(format!(
            "{t} is not a codimension-three Gorenstein sequence"
        )));
    }
    let mut core: Vec<i64> = t.first_difference()[1..].to_vec();
    while core.last() == Some(&0) {
        core.pop();
    }
    if t.sperner() <= 6 {
        return match core.as_slice() {
            [2] | [2, 1] | [2, 2] | [2, 3] => Ok(TheoremTag::ConstantPlateau),
            [2, 1, 1] | [2, 1, 1, 1] => Ok(TheoremTag::OrderTwoSingleTwo),
            [2, 2, 1] => Ok(TheoremTag::OneThreeFiveSix),
            other => Err(Error::Internal(format!(
                "unexpected first difference {other:?} for Sperner number <= 6"
            ))),
        };
    }
    if core.get(1).is_some_and(|&d| d > 2) {
        return Ok(TheoremTag::OutsideTables);
    }
    let twos = core.iter().take_while(|&&d| d == 2).count();
    Ok(match twos {
        1 => TheoremTag::OrderTwoSingleTwo,
        2 => TheoremTag::OpenTwoTwos,
        _ => TheoremTag::OpenManyTwos,
    })
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=largest)
                .map(|m| self.0.iter().filter(|&&p| p >= m).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `T` reordered as a partition and conjugated.
pub fn conjugate_partition(t: &HilbertFunction) -> Partition {
    Partition::new(t.values().to_vec()).conjugate()
}
