//! Brute-force reference implementations used to cross-check the library.
//!
//! Nothing here calls the library's linear algebra or contraction code:
//! scalars are plain `BigRational`s reduced mod p by hand, matrices are
//! `Vec<Vec<_>>`, and forms are maps from exponent vectors to coefficients.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use artinian::{ArtinAlgebra, LinearForm, Polynomial, Presentation, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug)]
pub struct Fld {
    pub p: u64,
}

impl Fld {
    pub fn norm(&self, x: BigRational) -> BigRational {
        if self.p == 0 {
            return x;
        }
        let p = BigInt::from(self.p);
        let n = x.numer().mod_floor(&p);
        if x.denom().is_one() {
            return BigRational::from_integer(n);
        }
        let d = x.denom().mod_floor(&p);
        assert!(!d.is_zero(), "denominator divisible by p");
        let inv = d.modpow(&(&p - 2u32), &p);
        BigRational::from_integer((n * inv).mod_floor(&p))
    }

    pub fn int(&self, n: i64) -> BigRational {
        self.norm(BigRational::from_integer(n.into()))
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(a * b)
    }

    pub fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero());
        if self.p == 0 {
            a.recip()
        } else {
            let p = BigInt::from(self.p);
            let r = a.numer().mod_floor(&p).modpow(&(&p - 2u32), &p);
            BigRational::from_integer(r)
        }
    }
}

pub fn scalar_value(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(q) => q.clone(),
        Scalar::Modular { residue, .. } => BigRational::from_integer((*residue).into()),
    }
}

pub type Mat = Vec<Vec<BigRational>>;

/// Row reduction with the last nonzero entry of each column as pivot, a
/// different rule from the library's.
pub fn rref(f: Fld, mut m: Mat) -> (Mat, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).rev().find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: Fld, m: &Mat) -> usize {
    rref(f, m.clone()).1.len()
}

pub fn matmul(f: Fld, a: &Mat, b: &Mat) -> Mat {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, brow)| !x.is_zero() && !brow[j].is_zero())
                        .fold(BigRational::zero(), |acc, (x, brow)| f.add(&acc, &f.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

/// Leibniz-free determinant by elimination with a running sign.
pub fn det(f: Fld, m: &Mat) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if pr != c {
            a.swap(pr, c);
            d = f.norm(-d);
        }
        d = f.mul(&d, &a[c][c]);
        let inv = f.inv(&a[c][c]);
        for i in c + 1..n {
            let factor = f.mul(&a[i][c], &inv);
            let pivot_row = a[c].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
    }
    d
}

pub type Form = BTreeMap<Vec<u32>, BigRational>;

pub fn to_form(p: &Polynomial) -> Form {
    p.terms()
        .map(|(m, c)| (m.exponents().to_vec(), scalar_value(c)))
        .collect()
}

/// `x^b o G` with the coefficient-free rule.
pub fn contract_monomial(b: &[u32], g: &Form) -> Form {
    g.iter()
        .filter(|(a, _)| a.iter().zip(b).all(|(x, y)| x >= y))
        .map(|(a, c)| (a.iter().zip(b).map(|(x, y)| x - y).collect(), c.clone()))
        .collect()
}

pub fn contract_linear(f: Fld, ell: &[BigRational], g: &Form) -> Form {
    let r = ell.len();
    let mut out = Form::new();
    for (i, c) in ell.iter().enumerate() {
        let mut b = vec![0; r];
        b[i] = 1;
        for (m, v) in contract_monomial(&b, g) {
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e = f.add(e, &f.mul(c, &v));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// All exponent vectors of total degree `d` in `r` variables.
pub fn exponents(d: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|a| {
            exponents(d - a, r - 1).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

/// Multiplication by a linear form on all of `A`, together with the degree
/// of each basis vector.
pub struct FullOperator {
    pub field: Fld,
    pub matrix: Mat,
    pub degrees: Vec<usize>,
}

impl FullOperator {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn power(&self, k: usize) -> Mat {
        let n = self.dim();
        let mut acc: Mat = (0..n)
            .map(|i| (0..n).map(|j| self.field.int((i == j) as i64)).collect())
            .collect();
        for _ in 0..k {
            acc = matmul(self.field, &self.matrix, &acc);
        }
        acc
    }

    /// `r_k = rank L^k` for `k = 0, 1, ...` until it reaches zero.
    pub fn rank_sequence(&self) -> Vec<usize> {
        let mut out = vec![self.dim()];
        let mut acc = self.power(0);
        while *out.last().unwrap() > 0 {
            acc = matmul(self.field, &self.matrix, &acc);
            out.push(rank(self.field, &acc));
        }
        out
    }

    pub fn jordan_blocks(&self) -> Vec<usize> {
        let mut r = self.rank_sequence();
        r.push(0);
        let mut parts = Vec::new();
        for k in 1..r.len() - 1 {
            let count = r[k - 1] as i64 - 2 * r[k] as i64 + r[k + 1] as i64;
            assert!(count >= 0, "negative block count from {r:?}");
            parts.extend(std::iter::repeat_n(k, count as usize));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Rank of `l^k` from degree `i` to degree `i + k`.
    pub fn graded_rank(&self, i: usize, k: usize) -> usize {
        let lk = self.power(k);
        let src: Vec<usize> = (0..self.dim()).filter(|&c| self.degrees[c] == i).collect();
        let dst: Vec<usize> = (0..self.dim()).filter(|&c| self.degrees[c] == i + k).collect();
        let sub: Mat = dst
            .iter()
            .map(|&row| src.iter().map(|&c| lk[row][c].clone()).collect())
            .collect();
        rank(self.field, &sub)
    }
}

/// Column `s` holds the image of basis vector `s`.
pub fn full_operator(a: &ArtinAlgebra, ell: &LinearForm) -> FullOperator {
    let f = Fld {
        p: a.field().characteristic(),
    };
    let coeffs: Vec<BigRational> = ell.coefficients().iter().map(scalar_value).collect();
    let r = a.varcount();
    match a.presentation() {
        Presentation::Dual(g) => dual_operator(f, &coeffs, &to_form(g.form()), r),
        Presentation::MonomialIdeal(gens) => {
            let gens: Vec<Vec<u32>> = gens.iter().map(|g| g.exponents().to_vec()).collect();
            monomial_operator(f, &coeffs, &gens, r)
        }
    }
}

/// Works in the inverse system `W = R o F`, where multiplication by `l`
/// becomes contraction by `l`.
pub fn dual_operator(f: Fld, ell: &[BigRational], g: &Form, r: usize) -> FullOperator {
    let j = g.keys().map(|e| e.iter().sum::<u32>()).max().unwrap();
    let mut degrees = Vec::new();
    let mut basis: Vec<Form> = Vec::new();
    for d in 0..=j {
        let pieces: Vec<Form> = exponents(d, r)
            .iter()
            .map(|b| contract_monomial(b, g))
            .collect();
        let mons = exponents(j - d, r);
        let idx: HashMap<&Vec<u32>, usize> = mons.iter().enumerate().map(|(n, m)| (m, n)).collect();
        let mat: Mat = pieces
            .iter()
            .map(|p| {
                let mut row = vec![BigRational::zero(); mons.len()];
                for (m, c) in p {
                    row[idx[m]] = c.clone();
                }
                row
            })
            .collect();
        let (red, _) = rref(f, mat);
        for row in red {
            let form: Form = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (mons[n].clone(), c))
                .collect();
            basis.push(form);
            // Ring degree d acts on F, landing in dual degree j - d.
            degrees.push(d as usize);
        }
    }
    // Coordinates of a form in `basis` by solving a linear system.
    let all: Vec<Vec<u32>> = (0..=j).flat_map(|d| exponents(d, r)).collect();
    let idx: HashMap<&Vec<u32>, usize> = all.iter().enumerate().map(|(n, m)| (m, n)).collect();
    let as_vec = |p: &Form| {
        let mut v = vec![BigRational::zero(); all.len()];
        for (m, c) in p {
            v[idx[m]] = c.clone();
        }
        v
    };
    let n = basis.len();
    let images: Vec<Form> = basis.iter().map(|b| contract_linear(f, ell, b)).collect();
    // Augmented system [B^T | images^T], one row per dual monomial.
    let mut system: Mat = vec![Vec::with_capacity(2 * n); all.len()];
    let bvecs: Vec<Vec<BigRational>> = basis.iter().map(as_vec).collect();
    let ivecs: Vec<Vec<BigRational>> = images.iter().map(as_vec).collect();
    for (row, out) in system.iter_mut().enumerate() {
        out.extend(bvecs.iter().map(|b| b[row].clone()));
        out.extend(ivecs.iter().map(|v| v[row].clone()));
    }
    let (red, pivots) = rref(f, system);
    assert_eq!(&pivots[..], &(0..n).collect::<Vec<_>>()[..], "basis is independent and images lie in W");
    let matrix: Mat = (0..n).map(|t| (0..n).map(|s| red[t][n + s].clone()).collect()).collect();
    FullOperator {
        field: f,
        matrix,
        degrees,
    }
}

pub fn monomial_operator(f: Fld, ell: &[BigRational], gens: &[Vec<u32>], r: usize) -> FullOperator {
    let divides = |g: &Vec<u32>, m: &Vec<u32>| g.iter().zip(m).all(|(a, b)| a <= b);
    let top: u32 = (0..r)
        .map(|v| {
            gens.iter()
                .filter(|g| g.iter().enumerate().all(|(w, &e)| (w == v) == (e > 0)))
                .map(|g| g[v] - 1)
                .min()
                .expect("Artinian")
        })
        .sum();
    let standard: Vec<Vec<u32>> = (0..=top)
        .flat_map(|d| exponents(d, r))
        .filter(|m| !gens.iter().any(|g| divides(g, m)))
        .collect();
    let idx: HashMap<&Vec<u32>, usize> = standard.iter().enumerate().map(|(n, m)| (m, n)).collect();
    let n = standard.len();
    let mut matrix = vec![vec![BigRational::zero(); n]; n];
    for (s, m) in standard.iter().enumerate() {
        for (v, c) in ell.iter().enumerate() {
            let mut t = m.clone();
            t[v] += 1;
            if let Some(&row) = idx.get(&t) {
                matrix[row][s] = f.add(&matrix[row][s], c);
            }
        }
    }
    FullOperator {
        field: f,
        matrix,
        degrees: standard.iter().map(|m| m.iter().sum::<u32>() as usize).collect(),
    }
}

/// `n! / (k1! k2! ...)` over the integers.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let fact = |n: u32| (1..=n).fold(BigInt::one(), |acc, k| acc * k);
    let total: u32 = parts.iter().sum();
    parts.iter().fold(fact(total), |acc, &k| acc / fact(k))
}

pub fn to_u64(x: &BigInt) -> u64 {
    x.to_u64().unwrap()
}

/// Conjugate of a sequence viewed as a partition: part m counts entries >= m.
pub fn conjugate(values: &[usize]) -> Vec<usize> {
    let max = values.iter().copied().max().unwrap_or(0);
    (1..=max).map(|m| values.iter().filter(|&&v| v >= m).count()).collect()
}
