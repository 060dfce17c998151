//! Character computations checked against brute force over explicit
//! permutations. Nothing here goes through the Murnaghan–Nakayama table or
//! the Newton recursions.

use std::collections::BTreeMap;

use lgcheck_core::{binomial, int, to_i64};
use lgcheck_sdrep::{
    conjugacy_classes, dim_a, ext_power_character, irreducible_character, standard_character,
    sym_power_character, trivial_multiplicity_sym_gamma, ClassFunction, Partition,
};

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

fn cycle_type(sigma: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; sigma.len()];
    let mut lens = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let (mut i, mut len) = (start, 0);
        while !seen[i] {
            seen[i] = true;
            i = sigma[i];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// One representative permutation per cycle type.
fn representatives(d: usize) -> BTreeMap<Vec<u32>, Vec<usize>> {
    let mut reps = BTreeMap::new();
    for p in permutations(d) {
        reps.entry(cycle_type(&p)).or_insert(p);
    }
    reps
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Trace of σ on ∧^p ℂ^d in the basis e_S: only σ-stable S contribute, with
/// the sign of σ restricted to S.
fn trace_wedge_perm(sigma: &[usize], p: usize) -> i64 {
    subsets(sigma.len(), p)
        .into_iter()
        .filter_map(|s| {
            let image: Vec<usize> = s.iter().map(|&i| sigma[i]).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            if sorted != s {
                return None;
            }
            let mut inversions = 0;
            for a in 0..image.len() {
                for b in a + 1..image.len() {
                    if image[a] > image[b] {
                        inversions += 1;
                    }
                }
            }
            Some(if inversions % 2 == 0 { 1 } else { -1 })
        })
        .sum()
}

/// Trace of σ on Sym^k ℂ^d: the number of degree-k monomials fixed by σ.
fn trace_sym_perm(sigma: &[usize], k: usize) -> i64 {
    fn rec(i: usize, left: usize, exps: &mut Vec<usize>, sigma: &[usize], count: &mut i64) {
        if i == sigma.len() {
            if left == 0 && (0..sigma.len()).all(|j| exps[sigma[j]] == exps[j]) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            exps.push(e);
            rec(i + 1, left - e, exps, sigma, count);
            exps.pop();
        }
    }
    let mut count = 0;
    rec(0, k, &mut Vec::new(), sigma, &mut count);
    count
}

fn values(f: &ClassFunction) -> Vec<i64> {
    f.values().iter().map(|v| to_i64(v).unwrap()).collect()
}

fn permutation_character(d: u32) -> ClassFunction {
    let vals: Vec<i64> = Partition::all(d)
        .iter()
        .map(|c| i64::from(c.fixed_points()))
        .collect();
    ClassFunction::from_integers(d, &vals).unwrap()
}

#[test]
fn class_sizes_match_enumeration() {
    for d in 1..=7usize {
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for p in permutations(d) {
            *counts.entry(cycle_type(&p)).or_default() += 1;
        }
        let classes = conjugacy_classes(d as u32).unwrap();
        assert_eq!(classes.len(), counts.len());
        for (label, size) in classes {
            assert_eq!(counts[label.parts()], size, "d={d} class {label}");
        }
    }
    let sizes: Vec<u64> = conjugacy_classes(4)
        .unwrap()
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    assert_eq!(sizes, [1, 6, 3, 8, 6]);
}

#[test]
fn standard_equals_fixed_points_minus_one_and_irreducible_hook() {
    for d in 2..=7u32 {
        let reps = representatives(d as usize);
        let std = standard_character(d).unwrap();
        for (ct, sigma) in &reps {
            let fixed = sigma.iter().enumerate().filter(|(i, &s)| *i == s).count() as i64;
            let class = Partition::new(ct.clone()).unwrap();
            assert_eq!(std.value(&class), Some(&int(fixed - 1)));
        }
        let hook = Partition::new(vec![d - 1, 1]).unwrap();
        assert_eq!(std, irreducible_character(d, &hook).unwrap());
    }
}

#[test]
fn exterior_powers_match_explicit_traces() {
    for d in 2..=6u32 {
        let perm = permutation_character(d);
        let reps = representatives(d as usize);
        for p in 0..=d {
            let computed = ext_power_character(&perm, p);
            let expected: Vec<i64> = reps
                .values()
                .map(|s| trace_wedge_perm(s, p as usize))
                .collect();
            assert_eq!(values(&computed), expected, "∧^{p} ℂ^{d}");
        }
    }
}

#[test]
fn symmetric_powers_match_explicit_traces() {
    for d in 2..=5u32 {
        let perm = permutation_character(d);
        let reps = representatives(d as usize);
        for k in 0..=5 {
            let computed = sym_power_character(&perm, k);
            let expected: Vec<i64> = reps
                .values()
                .map(|s| trace_sym_perm(s, k as usize))
                .collect();
            assert_eq!(values(&computed), expected, "Sym^{k} ℂ^{d}");
        }
    }
}

#[test]
fn wedge_square_of_s3_standard_is_sign_by_eigenvalues() {
    // Γ for S₃: a transposition has eigenvalues {1, −1}, a 3-cycle {ω, ω²}.
    // ∧² is the determinant: 1, −1, ω·ω² = 1.
    let g = standard_character(3).unwrap();
    assert_eq!(values(&ext_power_character(&g, 2)), [1, -1, 1]);
    // Sym²: h₂ of the eigenvalues: identity 3; (1,−1) → 1 − 1 + 1 = 1; (ω,ω²) → ω² + 1 + ω = 0.
    assert_eq!(values(&sym_power_character(&g, 2)), [3, 1, 0]);
}

#[test]
fn hook_length_dimensions_match_characters_up_to_ten() {
    for d in 1..=10u32 {
        for label in Partition::all(d) {
            let chi = irreducible_character(d, &label).unwrap();
            assert_eq!(
                chi.dimension(),
                &int(label.hook_dimension() as i64),
                "{label}"
            );
        }
    }
    let p31 = Partition::new(vec![3, 1]).unwrap();
    assert_eq!(irreducible_character(4, &p31).unwrap().dimension(), &int(3));
}

/// Counts monomials ξ₂^{a₂}⋯ξ_d^{a_d} of weighted degree k by listing
/// exponent vectors.
fn monomials(d: u32, k: u32) -> u64 {
    fn rec(h: u32, d: u32, left: u32) -> u64 {
        if h > d {
            return u64::from(left == 0);
        }
        (0..=left / h).map(|a| rec(h + 1, d, left - a * h)).sum()
    }
    rec(2, d, k)
}

#[test]
fn dim_a_matches_monomial_enumeration() {
    for d in 2..=10 {
        for k in 0..=14 {
            assert_eq!(dim_a(d, k), monomials(d, k), "d={d} k={k}");
        }
    }
    assert_eq!(monomials(3, 6), 2);
}

#[test]
fn invariant_ring_matches_sym_gamma_invariants() {
    let mut equalities = 0;
    for d in 2..=7 {
        for k in 0..=10 {
            assert_eq!(trivial_multiplicity_sym_gamma(d, k), Ok(monomials(d, k)));
            equalities += 1;
        }
    }
    assert_eq!(equalities, 66);
}

#[test]
fn exterior_dimension_is_binomial() {
    for d in 2..=6u32 {
        let n = u64::from(2 * (d - 1));
        let chi = standard_character(d).unwrap().scale(&int(2));
        for p in 0..=n as u32 + 1 {
            let dim = ext_power_character(&chi, p);
            assert_eq!(dim.dimension(), &int(binomial(n, u64::from(p)) as i64));
        }
    }
}
