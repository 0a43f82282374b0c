//! Artinian algebras from Macaulay dual generators or monomial ideals.
//!
//! In dual mode `A = R / Ann(F)` and every graded piece is handled through
//! catalecticant pairings against `F`, so no coset representatives are ever
//! chosen. In monomial mode `A = R / I` for an Artinian monomial ideal and
//! the standard monomials form the degree bases.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lefschetz;
use crate::matrix::DenseMatrix;
use crate::poly::{check_varcount, monomial_basis, monomial_count, LinearForm, Monomial, Polynomial};
use crate::sequences::{invariants, HilbertFunction};

/// A nonzero homogeneous form `F` of degree `j` in the divided-power ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGenerator {
    form: Polynomial,
    socle_degree: usize,
}

impl DualGenerator {
    pub fn new(form: Polynomial) -> Result<Self> {
        check_varcount(form.varcount())?;
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        if !form.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let socle_degree = form.degree().expect("nonzero form") as usize;
        Ok(DualGenerator { form, socle_degree })
    }

    pub fn parse(text: &str, varcount: usize, field: FieldSpec) -> Result<Self> {
        Self::new(Polynomial::parse(text, varcount, field)?)
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    pub fn field(&self) -> FieldSpec {
        self.form.field()
    }

    pub fn varcount(&self) -> usize {
        self.form.varcount()
    }
}

/// Matrix with rows `monomial_basis(i)`, columns `monomial_basis(deg G - i)`
/// and entries `(m_u m_v) o G`, i.e. the coefficient of `m_u m_v` in `G`.
pub(crate) fn pairing_against(g: &Polynomial, degree: usize, i: usize) -> DenseMatrix {
    let r = g.varcount();
    let rows = monomial_basis(i as u32, r);
    let cols = monomial_basis((degree - i) as u32, r);
    let entries = rows
        .iter()
        .flat_map(|u| cols.iter().map(move |v| g.coefficient(&u.multiply(v))))
        .collect();
    DenseMatrix::new(g.field(), rows.len(), cols.len(), entries).expect("shape and field agree")
}

/// The matrix of `r -> r o F` from degree-`i` monomials of `R` to degree
/// `j - i` monomials of `S`.
pub fn catalecticant(f: &DualGenerator, i: usize) -> Result<DenseMatrix> {
    if i > f.socle_degree {
        return Err(Error::OutOfRange {
            what: "catalecticant degree",
            value: i as i64,
            min: 0,
            max: f.socle_degree as i64,
        });
    }
    Ok(pairing_against(&f.form, f.socle_degree, i))
}

/// Basis of `Ann(F)_d`, read off the left kernel of the catalecticant.
pub fn ann_slice(f: &DualGenerator, d: usize) -> Result<Vec<Polynomial>> {
    let j = f.socle_degree;
    if d > j + 1 {
        return Err(Error::OutOfRange {
            what: "annihilator degree",
            value: d as i64,
            min: 0,
            max: j as i64 + 1,
        });
    }
    let (field, r) = (f.field(), f.varcount());
    let basis = monomial_basis(d as u32, r);
    if d == j + 1 {
        return Ok(basis
            .into_iter()
            .map(|m| Polynomial::from_monomial(field, m))
            .collect());
    }
    let cat = catalecticant(f, d)?;
    Ok(cat
        .transpose()
        .kernel_basis()
        .iter()
        .map(|v| Polynomial::from_coordinates(field, r, &basis, v))
        .collect())
}

/// Positions in `monomial_basis(i)` of monomials whose classes form a basis
/// of `A_i`, chosen greedily in grlex order.
pub fn quotient_basis_indices(f: &DualGenerator, i: usize) -> Result<Vec<usize>> {
    Ok(catalecticant(f, i)?.independent_rows())
}

pub fn quotient_basis(f: &DualGenerator, i: usize) -> Result<Vec<Monomial>> {
    let basis = monomial_basis(i as u32, f.varcount());
    Ok(quotient_basis_indices(f, i)?
        .into_iter()
        .map(|k| basis[k].clone())
        .collect())
}

/// Dual generator `G = omega o F` of `R / (Ann(F) : omega)`.
pub fn colon_dual(omega: &Polynomial, f: &DualGenerator) -> Result<DualGenerator> {
    if !omega.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let g = omega.contract(&f.form)?;
    if g.is_zero() {
        return Err(Error::ZeroColon);
    }
    DualGenerator::new(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Dual(DualGenerator),
    MonomialIdeal(Vec<Monomial>),
}

/// A graded Artinian quotient of `k[x1..xr]` with its Hilbert function and
/// degree bases computed at construction.
#[derive(Clone, Debug)]
pub struct ArtinAlgebra {
    presentation: Presentation,
    field: FieldSpec,
    varcount: usize,
    hilbert: HilbertFunction,
    degree_bases: Vec<Vec<Monomial>>,
}

impl ArtinAlgebra {
    pub fn from_dual(f: DualGenerator) -> Result<Self> {
        let j = f.socle_degree;
        let (field, varcount) = (f.field(), f.varcount());
        let dims = (0..=j)
            .map(|i| catalecticant(&f, i).map(|m| m.rank()))
            .collect::<Result<Vec<_>>>()?;
        let hilbert = HilbertFunction::new(dims)?;
        if hilbert.socle_degree() != j || !hilbert.is_symmetric() {
            return Err(Error::Internal(format!(
                "Hilbert function {hilbert} of a Gorenstein algebra of socle degree {j} is not symmetric"
            )));
        }
        let degree_bases = (0..=j).map(|d| monomial_basis(d as u32, varcount)).collect();
        Ok(ArtinAlgebra {
            presentation: Presentation::Dual(f),
            field,
            varcount,
            hilbert,
            degree_bases,
        })
    }

    pub fn from_monomial_ideal(
        field: FieldSpec,
        varcount: usize,
        generators: Vec<Monomial>,
    ) -> Result<Self> {
        check_varcount(varcount)?;
        if generators.iter().any(|g| g.varcount() != varcount) {
            return Err(Error::DomainMismatch);
        }
        if generators.iter().any(|g| g.degree() == 0) {
            return Err(Error::Precondition("the ideal is the unit ideal".into()));
        }
        let mut top = 0usize;
        for v in 0..varcount {
            let power = generators
                .iter()
                .filter(|g| g.pure_power_index() == Some(v))
                .map(|g| g.exponents()[v])
                .min()
                .ok_or(Error::NotArtinian(v))?;
            top += power as usize - 1;
        }
        let mut degree_bases: Vec<Vec<Monomial>> = (0..=top)
            .map(|d| {
                monomial_basis(d as u32, varcount)
                    .into_iter()
                    .filter(|m| !generators.iter().any(|g| g.divides(m)))
                    .collect()
            })
            .collect();
        while degree_bases.last().is_some_and(Vec::is_empty) {
            degree_bases.pop();
        }
        let hilbert = HilbertFunction::new(degree_bases.iter().map(Vec::len).collect())?;
        Ok(ArtinAlgebra {
            presentation: Presentation::MonomialIdeal(generators),
            field,
            varcount,
            hilbert,
            degree_bases,
        })
    }

    /// Reads a comma-separated list of monomials such as `x^3,y^3,z^2`.
    pub fn parse_monomial_ideal(text: &str, varcount: usize, field: FieldSpec) -> Result<Self> {
        let mut generators = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let p = Polynomial::parse(part, varcount, field).map_err(|e| shift(e, offset))?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((m, _)), None) => generators.push(m.clone()),
                _ => {
                    return Err(Error::Syntax {
                        position: offset,
                        message: format!("`{}` is not a monomial", part.trim()),
                    })
                }
            }
            offset += part.len() + 1;
        }
        Self::from_monomial_ideal(field, varcount, generators)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn dual_generator(&self) -> Option<&DualGenerator> {
        match &self.presentation {
            Presentation::Dual(f) => Some(f),
            Presentation::MonomialIdeal(_) => None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn hilbert_function(&self) -> &HilbertFunction {
        &self.hilbert
    }

    pub fn socle_degree(&self) -> usize {
        self.hilbert.socle_degree()
    }

    pub fn dimension(&self) -> usize {
        self.hilbert.dimension()
    }

    /// Full monomial basis of `R_i` in dual mode; standard monomials of
    /// degree `i` in monomial mode. Empty past the socle degree.
    pub fn degree_basis(&self, i: usize) -> &[Monomial] {
        self.degree_bases.get(i).map_or(&[], Vec::as_slice)
    }

    /// Dual mode is always Gorenstein; a monomial quotient is Gorenstein
    /// here only when it is a complete intersection of pure powers.
    pub fn is_gorenstein(&self) -> bool {
        match &self.presentation {
            Presentation::Dual(_) => true,
            Presentation::MonomialIdeal(gens) => {
                gens.len() == self.varcount && {
                    let mut seen = vec![false; self.varcount];
                    gens.iter().all(|g| match g.pure_power_index() {
                        Some(v) if !seen[v] => {
                            seen[v] = true;
                            true
                        }
                        _ => false,
                    })
                }
            }
        }
    }

    fn check_element(&self, p: &Polynomial) -> Result<()> {
        if p.field() != self.field || p.varcount() != self.varcount {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// Whether `p` lies in the defining ideal.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.check_element(p)?;
        Ok(match &self.presentation {
            Presentation::Dual(f) => p.contract(&f.form)?.is_zero(),
            Presentation::MonomialIdeal(gens) => {
                p.terms().all(|(m, _)| gens.iter().any(|g| g.divides(m)))
            }
        })
    }

    /// Monomial mode only: drops every term lying in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_element(p)?;
        let Presentation::MonomialIdeal(gens) = &self.presentation else {
            return Err(Error::ModeMismatch {
                expected: "monomial-ideal",
            });
        };
        Polynomial::from_terms(
            self.field,
            self.varcount,
            p.terms()
                .filter(|(m, _)| !gens.iter().any(|g| g.divides(m)))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Monomial mode only: matrix of multiplication by the degree-`k` form
    /// `g` from `A_i` to `A_{i+k}` in standard-monomial bases (rows index
    /// the source).
    pub fn multiplication_matrix(&self, g: &Polynomial, i: usize, k: usize) -> Result<DenseMatrix> {
        self.check_element(g)?;
        if !matches!(self.presentation, Presentation::MonomialIdeal(_)) {
            return Err(Error::ModeMismatch {
                expected: "monomial-ideal",
            });
        }
        let src = self.degree_basis(i);
        let dst = self.degree_basis(i + k);
        let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(n, m)| (m, n)).collect();
        let mut out = DenseMatrix::zeros(self.field, src.len(), dst.len());
        for (u, m) in src.iter().enumerate() {
            for (n, c) in g.terms() {
                if let Some(&v) = index.get(&m.multiply(n)) {
                    let cur = out.get(u, v) + c;
                    out.set(u, v, cur);
                }
            }
        }
        Ok(out)
    }
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { position, message } => Error::Syntax {
            position: position + offset,
            message,
        },
        Error::UnknownVariable { position, name } => Error::UnknownVariable {
            position: position + offset,
            name,
        },
        Error::ExponentOverflow { position } => Error::ExponentOverflow {
            position: position + offset,
        },
        other => other,
    }
}

pub fn hilbert_function(a: &ArtinAlgebra) -> &HilbertFunction {
    a.hilbert_function()
}

/// Hilbert function of `A / (v)`: `dim C_i = T_i - rank(v: A_{i-1} -> A_i)`.
pub fn quotient_by_linear_hf(a: &ArtinAlgebra, v: &LinearForm) -> Result<HilbertFunction> {
    if v.is_zero() {
        return Err(Error::ZeroForm);
    }
    let t = a.hilbert_function();
    let mut dims = vec![t.get(0)];
    for i in 1..=t.socle_degree() {
        dims.push(t.get(i) - lefschetz::mult_rank(a, v, i - 1, 1)?);
    }
    HilbertFunction::new(dims)
}

/// Homogeneous pieces `J_d` of a graded ideal for `d = 0..=max_degree`,
/// each stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdealSlice {
    field: FieldSpec,
    varcount: usize,
    slices: Vec<Vec<Polynomial>>,
}

/// Echelon basis of the span of homogeneous degree-`d` polynomials.
fn span_basis(field: FieldSpec, varcount: usize, d: usize, polys: &[Polynomial]) -> Vec<Polynomial> {
    let basis = monomial_basis(d as u32, varcount);
    let rows = polys.iter().map(|p| p.coordinates(&basis)).collect();
    let m = DenseMatrix::from_rows(field, basis.len(), rows).expect("coordinates have basis length");
    let ech = m.echelon();
    (0..ech.pivots.len())
        .map(|r| Polynomial::from_coordinates(field, varcount, &basis, ech.reduced.row(r)))
        .collect()
}

impl GradedIdealSlice {
    /// Groups homogeneous polynomials by degree; `max_degree` fixes how many
    /// slices are stored.
    pub fn new(
        field: FieldSpec,
        varcount: usize,
        max_degree: usize,
        polys: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Self> {
        check_varcount(varcount)?;
        let mut grouped = vec![Vec::new(); max_degree + 1];
        for p in polys {
            if p.field() != field || p.varcount() != varcount {
                return Err(Error::DomainMismatch);
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let Some(d) = p.degree() else { continue };
            if let Some(slot) = grouped.get_mut(d as usize) {
                slot.push(p);
            }
        }
        let slices = grouped
            .iter()
            .enumerate()
            .map(|(d, ps)| span_basis(field, varcount, d, ps))
            .collect();
        Ok(GradedIdealSlice {
            field,
            varcount,
            slices,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, d: usize) -> Option<&[Polynomial]> {
        self.slices.get(d).map(Vec::as_slice)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.slices.get(d).map_or(0, Vec::len)
    }

    /// `dim (R/J)_d` for every stored degree.
    pub fn quotient_hilbert(&self) -> Vec<usize> {
        (0..self.slices.len())
            .map(|d| monomial_count(d as u32, self.varcount) - self.dim(d))
            .collect()
    }
}

/// `J_d = span(seed_d) + sum_i x_i J_{d-1}` for `d <= up_to`.
pub fn grow_ideal_slices(seed: &GradedIdealSlice, up_to: usize) -> Result<GradedIdealSlice> {
    let (field, r) = (seed.field, seed.varcount);
    let vars: Vec<Polynomial> = (0..r).map(|i| Polynomial::variable(field, r, i)).collect();
    let mut slices: Vec<Vec<Polynomial>> = Vec::with_capacity(up_to + 1);
    for d in 0..=up_to {
        let mut gens: Vec<Polynomial> = seed.slice(d).map(<[_]>::to_vec).unwrap_or_default();
        if d > 0 {
            for b in &slices[d - 1] {
                for x in &vars {
                    gens.push(x.multiply(b)?);
                }
            }
        }
        slices.push(span_basis(field, r, d, &gens));
    }
    Ok(GradedIdealSlice {
        field,
        varcount: r,
        slices,
    })
}

/// Basis of `(J : m)_d = { f in R_d : x_i f in J_{d+1} for all i }`.
pub fn colon_by_maximal_slice(j: &GradedIdealSlice, d: usize) -> Result<Vec<Polynomial>> {
    if d + 1 > j.max_degree() {
        return Err(Error::Precondition(format!(
            "ideal slices stop at degree {}, need degree {}",
            j.max_degree(),
            d + 1
        )));
    }
    let (field, r) = (j.field, j.varcount);
    let src = monomial_basis(d as u32, r);
    let dst = monomial_basis(d as u32 + 1, r);
    let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(n, m)| (m, n)).collect();
    let rows = j.slices[d + 1].iter().map(|p| p.coordinates(&dst)).collect();
    // Linear functionals vanishing exactly on J_{d+1}.
    let perp = DenseMatrix::from_rows(field, dst.len(), rows)?.kernel_basis();
    let mut cond = Vec::with_capacity(perp.len() * r);
    for i in 0..r {
        let xi = Monomial::variable(r, i);
        for w in &perp {
            cond.push(
                src.iter()
                    .map(|m| w[index[&m.multiply(&xi)]].clone())
                    .collect::<Vec<Scalar>>(),
            );
        }
    }
    let m = DenseMatrix::from_rows(field, src.len(), cond)?;
    Ok(m.kernel_basis()
        .iter()
        .map(|v| Polynomial::from_coordinates(field, r, &src, v))
        .collect())
}

/// Outcome of probing the ideal generated by the low-degree part of
/// `Ann(F)` when `T` contains `(s, s, s)`.
#[derive(Clone, Debug, Serialize)]
pub struct SchemeProbe {
    pub sperner: usize,
    pub tau: usize,
    /// Degrees `0..=tau+1` of `Ann(F)` used as generators.
    pub generators: Vec<Polynomial>,
    /// `dim (R/J)_d` for `d = 0..=checked_up_to`.
    pub quotient_hilbert: Vec<usize>,
    /// `(T_0..T_tau, s, s, ...)` over the same range.
    pub expected_hilbert: Vec<usize>,
    pub checked_up_to: usize,
    pub hilbert_stable: bool,
    /// `J_d = (J : m)_d` for `tau+1 <= d <= checked_up_to`.
    pub degreewise_saturated: bool,
    /// Degrees `t` with `tau+1 <= t <= j-tau-1`.
    pub middle_zone: Option<(usize, usize)>,
    pub matches_annihilator_in_middle: bool,
    #[serde(skip)]
    pub ideal: GradedIdealSlice,
}

impl SchemeProbe {
    pub fn all_flags(&self) -> bool {
        self.hilbert_stable && self.degreewise_saturated && self.matches_annihilator_in_middle
    }
}

pub fn annihilating_scheme_probe(f: &DualGenerator) -> Result<SchemeProbe> {
    if f.varcount() != 3 {
        return Err(Error::Precondition(
            "the scheme probe needs three variables".into(),
        ));
    }
    let a = ArtinAlgebra::from_dual(f.clone())?;
    let t = a.hilbert_function();
    let inv = invariants(t);
    let s = inv.sperner;
    let plateau = t.values().windows(3).any(|w| w.iter().all(|&v| v == s));
    if !plateau {
        return Err(Error::Precondition(format!(
            "T = {t} does not contain (s,s,s) for Sperner number s = {s}"
        )));
    }
    let (j, tau) = (t.socle_degree(), inv.tau);
    let (field, r) = (f.field(), f.varcount());

    let mut generators = Vec::new();
    for d in 0..=tau + 1 {
        generators.extend(ann_slice(f, d)?);
    }
    let checked_up_to = j + 2;
    let seed = GradedIdealSlice::new(field, r, tau + 1, generators.clone())?;
    let ideal = grow_ideal_slices(&seed, checked_up_to + 1)?;

    let quotient_hilbert = ideal.quotient_hilbert()[..=checked_up_to].to_vec();
    let expected_hilbert: Vec<usize> = (0..=checked_up_to)
        .map(|d| if d <= tau { t.get(d) } else { s })
        .collect();

    let mut degreewise_saturated = true;
    for d in tau + 1..=checked_up_to {
        if colon_by_maximal_slice(&ideal, d)?.len() != ideal.dim(d) {
            degreewise_saturated = false;
        }
    }

    let middle_zone = (j >= 2 * tau + 2).then(|| (tau + 1, j - tau - 1));
    let mut matches = true;
    if let Some((lo, hi)) = middle_zone {
        for d in lo..=hi {
            let ann_dim = ann_slice(f, d)?.len();
            let inside = ideal.slices[d]
                .iter()
                .map(|p| a.contains(p))
                .collect::<Result<Vec<_>>>()?;
            if ann_dim != ideal.dim(d) || inside.contains(&false) {
                matches = false;
            }
        }
    }

    Ok(SchemeProbe {
        sperner: s,
        tau,
        generators,
        hilbert_stable: quotient_hilbert == expected_hilbert,
        quotient_hilbert,
        expected_hilbert,
        checked_up_to,
        degreewise_saturated,
        middle_zone,
        matches_annihilator_in_middle: matches,
        ideal,
    })
}
