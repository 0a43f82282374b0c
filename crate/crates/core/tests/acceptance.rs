//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always show.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::Instant;

use artinian::apolarity::{annihilating_scheme_probe, colon_dual, quotient_basis_indices, quotient_by_linear_hf};
use artinian::lefschetz::{generic_verdict, hessian_det_at, is_cone, jordan_type, mult_rank, pairing_matrix, verdict_at};
use artinian::poly::{monomial_basis, Monomial};
use artinian::sequences::{conjugate_partition, enumerate_gorenstein_sequences, invariants};
use artinian::{ArtinAlgebra, DualGenerator, FieldSpec, LinearForm, Polynomial, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{full_operator, multinomial, scalar_value, Fld};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every `(A, l)` pair touched by criteria 1 to 10, re-examined by 11.
static INSTANCES: Mutex<Vec<(String, ArtinAlgebra, LinearForm)>> = Mutex::new(Vec::new());

fn record(label: impl Into<String>, a: &ArtinAlgebra, ell: &LinearForm) {
    INSTANCES.lock().unwrap().push((label.into(), a.clone(), ell.clone()));
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn q() -> FieldSpec {
    FieldSpec::RATIONALS
}

fn ideal(text: &str, r: usize, field: FieldSpec) -> ArtinAlgebra {
    ArtinAlgebra::parse_monomial_ideal(text, r, field).unwrap()
}

fn random_form(rng: &mut ChaCha8Rng, field: FieldSpec, r: usize, j: u32, terms: usize) -> Polynomial {
    let basis = monomial_basis(j, r);
    let picked = (0..terms).map(|_| {
        let m = basis[rng.gen_range(0..basis.len())].clone();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        (m, field.from_i64(c))
    });
    Polynomial::from_terms(field, r, picked).unwrap()
}

fn random_nonzero_form(rng: &mut ChaCha8Rng, field: FieldSpec, r: usize, j: u32, terms: usize) -> DualGenerator {
    loop {
        let f = random_form(rng, field, r, j, terms);
        if !f.is_zero() {
            return DualGenerator::new(f).unwrap();
        }
    }
}

fn criterion_1() -> Outcome {
    let a = ideal("x^3,y^3,z^2", 3, fp(3));
    let ell = LinearForm::all_ones(fp(3), 3);
    let t = a.hilbert_function();
    ensure!(t.values() == [1, 3, 5, 5, 3, 1], "T = {t}");
    let rank = mult_rank(&a, &ell, 1, 3).unwrap();
    let oracle = full_operator(&a, &ell).graded_rank(1, 3);
    ensure!(rank == 0 && oracle == 0, "rank {rank}, oracle {oracle}");
    let g = generic_verdict(&a, 10, 0).unwrap();
    ensure!(!g.wl && g.is_decisive(), "wl = {}, decisive = {}", g.wl, g.is_decisive());
    record("criterion 1", &a, &ell);
    Ok(format!("T = {t}, rank(l^3: A_1 -> A_4) = 0, wl = false decisive"))
}

fn criterion_2() -> Outcome {
    let a = ideal("x^4,y^4", 2, fp(2));
    let ell = LinearForm::all_ones(fp(2), 2);
    let t = a.hilbert_function();
    ensure!(t.values() == [1, 2, 3, 4, 3, 2, 1], "T = {t}");
    let rank = mult_rank(&a, &ell, 2, 2).unwrap();
    let oracle = full_operator(&a, &ell).graded_rank(2, 2);
    ensure!(rank == 2 && oracle == 2, "rank {rank}, oracle {oracle}");
    let v = verdict_at(&a, &ell).unwrap();
    ensure!(v.almost_sl == Some(false), "almost_sl = {:?}", v.almost_sl);
    record("criterion 2", &a, &ell);
    Ok(format!("T = {t}, rank(l^2: A_2 -> A_4) = 2 < 3, almost_sl = false"))
}

fn criterion_3() -> Outcome {
    let a = ideal("x^3,y^3,z^4", 3, fp(3));
    let ell = LinearForm::all_ones(fp(3), 3);
    let t = a.hilbert_function();
    ensure!(t.values() == [1, 3, 6, 8, 8, 6, 3, 1], "T = {t}");
    let rank = mult_rank(&a, &ell, 2, 3).unwrap();
    let oracle = full_operator(&a, &ell).graded_rank(2, 3);
    ensure!(rank == 3 && oracle == 3, "rank {rank}, oracle {oracle}");
    let v = verdict_at(&a, &ell).unwrap();
    ensure!(v.almost_sl == Some(false), "almost_sl = {:?}", v.almost_sl);
    record("criterion 3", &a, &ell);
    Ok(format!("T = {t}, rank(l^3: A_2 -> A_5) = 3 < 6, almost_sl = false"))
}

fn criterion_4() -> Outcome {
    let field = fp(13);
    let a = ideal("x^3,y^3,z^14", 3, field);
    let ell = LinearForm::all_ones(field, 3);
    let l = ell.to_polynomial();

    let z2 = Polynomial::parse("z^2", 3, field).unwrap();
    ensure!(a.contains(&z2.multiply(&l.power(13)).unwrap()).unwrap(), "z^2 l^13 is not in I");

    let top = a.normal_form(&l.power(17)).unwrap();
    let expected = multinomial(&[2, 2, 13]);
    ensure!(expected == BigInt::from(14280), "multinomial = {expected}");
    let residue = common::to_u64(&(expected % 13u32));
    let m = Monomial::new(vec![2, 2, 13]);
    ensure!(top.len() == 1, "l^17 = {top}");
    ensure!(
        top.coefficient(&m) == field.from_u64(residue) && residue == 6,
        "l^17 = {top}, expected {residue} x^2 y^2 z^13"
    );

    let t = a.hilbert_function().clone();
    let failing = |alg: &ArtinAlgebra| -> Vec<usize> {
        (0..=8)
            .filter(|&i| {
                let rank = mult_rank(alg, &ell, 8 - i, 2 * i + 1).unwrap();
                rank < t.get(8 - i).min(t.get(9 + i))
            })
            .collect()
    };
    let fails = failing(&a);
    ensure!(fails == [5, 6, 7], "failures at i = {fails:?}");
    // The same complete intersection is Ann(X^2 Y^2 Z^13); pairing ranks agree.
    let dual = ArtinAlgebra::from_dual(DualGenerator::parse("X^2*Y^2*Z^13", 3, field).unwrap()).unwrap();
    ensure!(dual.hilbert_function() == &t, "dual T = {}", dual.hilbert_function());
    let dual_fails = failing(&dual);
    ensure!(dual_fails == fails, "dual presentation fails at {dual_fails:?}");

    let v = verdict_at(&a, &ell).unwrap();
    ensure!(v.almost_sl == Some(false), "almost_sl = {:?}", v.almost_sl);
    record("criterion 4", &a, &ell);
    record("criterion 4 (dual)", &dual, &ell);
    Ok(format!(
        "z^2 in ker l^13, l^17 = {top}, failures for i in {fails:?}, almost_sl = false"
    ))
}

/// Corollary-style families with Sperner number at most 6.
fn family_sequences(max_socle: usize) -> BTreeSet<Vec<usize>> {
    let patterns: [(&[usize], usize); 7] = [
        (&[1], 3),
        (&[1, 3], 4),
        (&[1, 3, 4], 5),
        (&[1, 3, 4, 5], 6),
        (&[1, 3], 5),
        (&[1, 3, 5], 6),
        (&[1, 3], 6),
    ];
    let mut out = BTreeSet::new();
    for (front, plateau) in patterns {
        for k in 1.. {
            let mut t = front.to_vec();
            t.extend(std::iter::repeat_n(plateau, k));
            t.extend(front.iter().rev());
            if t.len() - 1 > max_socle {
                break;
            }
            out.insert(t);
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let enumerated: BTreeSet<Vec<usize>> = enumerate_gorenstein_sequences(6, 12)
        .unwrap()
        .into_iter()
        .map(|t| t.values().to_vec())
        .collect();
    let families = family_sequences(12);
    let missing: Vec<_> = families.difference(&enumerated).collect();
    let extra: Vec<_> = enumerated.difference(&families).collect();
    ensure!(missing.is_empty() && extra.is_empty(), "missing {missing:?}, extra {extra:?}");
    let small = enumerate_gorenstein_sequences(6, 5).unwrap();
    ensure!(small.len() == 10, "(6,5) gives {} sequences", small.len());
    ensure!(family_sequences(5).len() == 10, "families up to j=5 give {}", family_sequences(5).len());
    Ok(format!("{} sequences for (6,12) match the families; (6,5) gives 10", enumerated.len()))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for a in 2..=11u32 {
        for b in a..=11 {
            for c in b..=11 {
                if a + b + c - 3 > 8 {
                    continue;
                }
                let alg = ideal(&format!("x^{a},y^{b},z^{c}"), 3, q());
                let ell = LinearForm::all_ones(q(), 3);
                let v = verdict_at(&alg, &ell).unwrap();
                ensure!(v.sl == Some(true), "({a},{b},{c}): sl = {:?}", v.sl);
                let jt = jordan_type(&alg, &ell).unwrap();
                let conj = conjugate_partition(alg.hilbert_function());
                ensure!(jt == conj, "({a},{b},{c}): jordan {jt} vs {conj}");
                ensure!(
                    jt.parts() == common::conjugate(alg.hilbert_function().values()),
                    "({a},{b},{c}): oracle conjugate disagrees"
                );
                record(format!("criterion 6 ({a},{b},{c})"), &alg, &ell);
                count += 1;
            }
        }
    }
    Ok(format!("{count} complete intersections are SL at x+y+z with Jordan type T^v"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut nonsingular, mut singular) = (0, 0);
    for n in 0..50 {
        let j = rng.gen_range(2..=6u32);
        let terms = rng.gen_range(1..=8);
        let f = random_nonzero_form(&mut rng, q(), 3, j, terms);
        let a = ArtinAlgebra::from_dual(f.clone()).unwrap();
        let point: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
        let i = rng.gen_range(0..=(j / 2) as usize);
        let k = j as usize - 2 * i;
        let ell = LinearForm::from_i64(q(), &point).unwrap();
        let coords: Vec<Scalar> = point.iter().map(|&c| q().from_i64(c)).collect();

        let full = pairing_matrix(&a, &ell, i, k).unwrap();
        let basis = quotient_basis_indices(&f, i).unwrap();
        let restricted: common::Mat = basis
            .iter()
            .map(|&u| basis.iter().map(|&v| scalar_value(full.get(u, v))).collect())
            .collect();
        let lhs = common::det(Fld { p: 0 }, &restricted);

        let t_i = a.hilbert_function().get(i);
        ensure!(basis.len() == t_i, "sample {n}: basis size {} vs T_i {t_i}", basis.len());
        let hess = scalar_value(&hessian_det_at(&f, i, &coords).unwrap());
        let scale = (1..=k as u32).fold(BigInt::from(1), |acc, m| acc * m).pow(t_i as u32);
        let rhs = hess.clone() * BigRational::from_integer(scale);
        ensure!(lhs == rhs, "sample {n}: F = {}, i = {i}, a = {point:?}: {lhs} vs {rhs}", f.form());

        let full_rank = !ell.is_zero() && mult_rank(&a, &ell, i, k).unwrap() == t_i;
        let nonzero = !hess.is_zero();
        ensure!(full_rank == nonzero, "sample {n}: full rank {full_rank} but det {hess}");
        if nonzero {
            nonsingular += 1;
        } else {
            singular += 1;
        }
        if !ell.is_zero() {
            record(format!("criterion 7 sample {n}"), &a, &ell);
        }
    }
    ensure!(singular > 0 && nonsingular > 0, "only {singular} singular and {nonsingular} nonsingular samples");
    Ok(format!("50 samples ({nonsingular} nonsingular, {singular} singular) satisfy the scaling identity"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    let mut most_trials = 0;
    while checked < 100 {
        let j = rng.gen_range(3..=6u32);
        let terms = rng.gen_range(3..=10);
        let f = random_nonzero_form(&mut rng, q(), 3, j, terms);
        if is_cone(&f) {
            continue;
        }
        let a = ArtinAlgebra::from_dual(f.clone()).unwrap();
        let target = a.hilbert_function().get(1);
        ensure!(target == 3, "non-cone form {} has T_1 = {target}", f.form());
        let mut witness = None;
        for trial in 0..20 {
            let ell = if trial == 0 {
                LinearForm::all_ones(q(), 3)
            } else {
                let c: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=101)).collect();
                LinearForm::from_i64(q(), &c).unwrap()
            };
            if mult_rank(&a, &ell, 1, j as usize - 2).unwrap() == target {
                witness = Some((trial + 1, ell));
                break;
            }
        }
        let Some((trials, ell)) = witness else {
            return Err(format!("no witness for F = {}", f.form()));
        };
        most_trials = most_trials.max(trials);
        record(format!("criterion 8 form {checked}"), &a, &ell);
        checked += 1;
    }
    Ok(format!("100 non-cone forms each have a witness (at most {most_trials} trials)"))
}

fn criterion_9() -> Outcome {
    let f = DualGenerator::parse("X^4 + Y^2*Z^2", 3, q()).unwrap();
    let a = ArtinAlgebra::from_dual(f.clone()).unwrap();
    let x = Polynomial::parse("x", 3, q()).unwrap();
    let b = ArtinAlgebra::from_dual(colon_dual(&x, &f).unwrap()).unwrap();
    let c = quotient_by_linear_hf(&a, &LinearForm::parse("x", 3, q()).unwrap()).unwrap();
    let (ta, tb) = (a.hilbert_function(), b.hilbert_function());
    ensure!(ta.values() == [1, 3, 4, 3, 1], "T(A) = {ta}");
    ensure!(tb.values() == [1, 1, 1, 1], "T(B) = {tb}");
    ensure!(c.values() == [1, 2, 3, 2], "T(C) = {c}");
    for i in 0..=ta.socle_degree() + 1 {
        let shifted = if i == 0 { 0 } else { tb.get(i - 1) };
        ensure!(ta.get(i) == shifted + c.get(i), "identity fails at i = {i}");
    }
    let ell = LinearForm::all_ones(q(), 3);
    let v = verdict_at(&a, &ell).unwrap();
    ensure!(v.sl == Some(true), "sl = {:?}", v.sl);
    record("criterion 9", &a, &ell);
    Ok(format!("T(A) = {ta}, T(B) = {tb}, T(C) = {c}, sl = true"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut done = 0;
    let mut kinds = [0usize; 3];
    while done < 20 {
        let kind = done % 3;
        let a = match kind {
            0 => {
                let j = rng.gen_range(2..=6u32);
                let terms = rng.gen_range(1..=7);
                ArtinAlgebra::from_dual(random_nonzero_form(&mut rng, q(), 3, j, terms)).unwrap()
            }
            1 => {
                let p = [5u64, 7, 11][rng.gen_range(0..3)];
                let j = rng.gen_range(2..=5u32);
                let terms = rng.gen_range(1..=6);
                ArtinAlgebra::from_dual(random_nonzero_form(&mut rng, fp(p), 3, j, terms)).unwrap()
            }
            _ => {
                let field = if rng.gen_bool(0.5) { q() } else { fp(3) };
                let mut gens: Vec<Monomial> = (0..3)
                    .map(|v| Monomial::pure_power(3, v, rng.gen_range(2..=4)))
                    .collect();
                for _ in 0..rng.gen_range(0..=2) {
                    gens.push(Monomial::new((0..3).map(|_| rng.gen_range(0..=2)).collect()));
                }
                gens.retain(|g| g.degree() > 0);
                ArtinAlgebra::from_monomial_ideal(field, 3, gens).unwrap()
            }
        };
        if a.dimension() > 30 {
            continue;
        }
        let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
        let ell = LinearForm::from_i64(a.field(), &coeffs).unwrap();
        if ell.is_zero() {
            continue;
        }
        let jt = jordan_type(&a, &ell).unwrap();
        let oracle = full_operator(&a, &ell);
        ensure!(oracle.dim() == a.dimension(), "oracle dimension {} vs {}", oracle.dim(), a.dimension());
        let blocks = oracle.jordan_blocks();
        ensure!(
            jt.parts() == blocks,
            "T = {}, l = {ell}: graded {jt} vs dense {blocks:?}",
            a.hilbert_function()
        );
        record(format!("criterion 10 instance {done}"), &a, &ell);
        kinds[kind] += 1;
        done += 1;
    }
    Ok(format!(
        "20 instances agree ({} dual over Q, {} dual over F_p, {} monomial)",
        kinds[0], kinds[1], kinds[2]
    ))
}

fn criterion_11() -> Outcome {
    let instances = INSTANCES.lock().unwrap().clone();
    ensure!(instances.len() > 100, "only {} instances recorded", instances.len());
    let mut sl_checked = 0;
    for (label, a, ell) in &instances {
        let v = verdict_at(a, ell).unwrap();
        let jt = jordan_type(a, ell).unwrap();
        let t = a.hilbert_function();
        if let Some(sl) = v.sl {
            let matches = jt == conjugate_partition(t);
            ensure!(sl == matches, "{label}: sl = {sl} but Jordan type {jt} vs T^v {}", conjugate_partition(t));
            sl_checked += 1;
        }
        let parts = jt.len() == invariants(t).sperner;
        ensure!(v.wl == parts, "{label}: wl = {} but Jordan type {jt} with s = {}", v.wl, t.sperner());
    }
    Ok(format!("{} instances checked ({sl_checked} with symmetric T)", instances.len()))
}

fn criterion_12() -> Outcome {
    let f = DualGenerator::parse("X^5 + Y^5 + Z^5", 3, q()).unwrap();
    let probe = annihilating_scheme_probe(&f).unwrap();
    let expected: Vec<usize> = (0..=probe.checked_up_to).map(|d| if d == 0 { 1 } else { 3 }).collect();
    ensure!(probe.quotient_hilbert == expected, "HF(R/J) = {:?}", probe.quotient_hilbert);
    ensure!(probe.hilbert_stable, "Hilbert function not stable");
    ensure!(probe.degreewise_saturated, "not degreewise saturated");
    ensure!(probe.middle_zone.is_some() && probe.matches_annihilator_in_middle, "middle zone {:?}", probe.middle_zone);
    Ok(format!(
        "HF(R/J) = {:?} through degree {}, saturated, J_t = Ann(F)_t for t in {:?}",
        probe.quotient_hilbert,
        probe.checked_up_to,
        probe.middle_zone.unwrap()
    ))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {n}: {detail} [{:.1}s]", start.elapsed().as_secs_f64()),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {n}: {detail} [{:.1}s]", start.elapsed().as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
