//! Equivariant suites: each compares a homology character computed by
//! Lefschetz traces on fixed subposets against an independently built
//! symmetric function (Eulerian quasisymmetric sums, word and
//! multiset-derangement enumerations, or recursion identities).

use std::collections::HashMap;

use super::{rees_boolean, SuiteConfig};
use crate::catalog::boolean_lattice;
use crate::characters::ClassFunction;
use crate::equivariant::{homology_character, lefschetz_character, CmPolicy, SymmetricAction};
use crate::error::Result;
use crate::perm::{multiset_derangements, words_with_descents};
use crate::poly::{q_int, MultiPoly};
use crate::rees::{ideal_ij, rees_product};
use crate::report::{CaseResult, SuiteReport};
use crate::symfunc::{
    eulerian_qsym, eulerian_qsym_fix, frobenius, schur_multiplicities, to_monomial_basis, SymFunc,
};

const CHAR_NOTE: &str = "characters read on the top homology of each order complex \
(degree = poset length); traces computed as Möbius invariants of fixed subposets";

fn ideal_character(n: usize, j: usize, guard: u64) -> Result<ClassFunction> {
    let ideal = ideal_ij(&boolean_lattice(n), j)?;
    let action = SymmetricAction::new(&ideal, n);
    homology_character(&action, CmPolicy::Check(guard))
}

fn boolean_rees_character(n: usize, guard: u64) -> Result<ClassFunction> {
    let rees = rees_boolean(n);
    let action = SymmetricAction::new(&rees, n);
    homology_character(&action, CmPolicy::Check(guard))
}

fn omega_eulerian(n: usize, j: usize) -> Result<SymFunc> {
    Ok(to_monomial_basis(&eulerian_qsym(n as u32, j as u32, n)?)?.omega())
}

fn x_poly_zero(n: usize) -> MultiPoly {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    MultiPoly::zero(&refs)
}

fn symfunc_case(case: String, lhs: &SymFunc, rhs: &SymFunc) -> CaseResult {
    let pass = lhs == rhs;
    let mut c = CaseResult {
        case,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        pass,
        witness: None,
    };
    if !pass {
        let diff = lhs.sub(rhs);
        c.witness = Some(format!("difference {diff}"));
    }
    c
}

/// ch of the top homology of I_j(B_n) equals omega Q_{n,j}, with
/// nonnegative integral Schur multiplicities.
pub(super) fn eulerian_character(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("eulerian-character", CHAR_NOTE);
    let n_max = config.n_max_or(5);
    for n in 1..=n_max {
        for j in 0..n {
            let chi = ideal_character(n, j, config.max_simplices)?;
            let lhs = frobenius(&chi);
            let rhs = omega_eulerian(n, j)?;
            report
                .cases
                .push(symfunc_case(format!("n={n} j={j}"), &lhs, &rhs));
            let nonneg = schur_multiplicities(&lhs)?.values().all(|&v| v >= 0);
            report.cases.push(CaseResult::from_bool(
                format!("n={n} j={j} schur-nonnegative"),
                nonneg,
            ));
        }
    }
    Ok(report)
}

/// ch of the top homology of B_n- * C_n equals sum_j omega Q_{n,j,0},
/// and the generating series satisfies the elementary-symmetric
/// geometric form.
pub(super) fn derangement_character(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("derangement-character", CHAR_NOTE);
    let n_max = config.n_max_or(5);
    let mut characteristics: Vec<SymFunc> = vec![SymFunc::one()];
    for n in 1..=n_max {
        let chi = boolean_rees_character(n, config.max_simplices)?;
        let lhs = frobenius(&chi);
        let mut rhs = SymFunc::zero(n as u32);
        for j in 0..n {
            let q = eulerian_qsym_fix(n as u32, j as u32, 0, n)?;
            rhs = rhs.add(&to_monomial_basis(&q)?.omega());
        }
        report.cases.push(symfunc_case(format!("n={n}"), &lhs, &rhs));
        characteristics.push(lhs);
    }
    // geometric form: (sum_n ch_n z^n) (1 - sum_{i>=2} (i-1) e_i z^i) = 1
    for total in 0..=n_max {
        let mut acc = SymFunc::zero(total as u32);
        for b in 0..=total {
            let a = total - b;
            let denom = match b {
                0 => SymFunc::one(),
                1 => SymFunc::zero(1),
                i => SymFunc::e(i as u32).scale_int(-((i as i64) - 1)),
            };
            acc = acc.add(&characteristics[a].mul(&denom));
        }
        let expected = if total == 0 {
            SymFunc::one()
        } else {
            SymFunc::zero(total as u32)
        };
        report
            .cases
            .push(symfunc_case(format!("series z^{total}"), &acc, &expected));
    }
    Ok(report)
}

/// The word expansion: ch of the top homology of I_j(B_n) equals the sum
/// of x^w over length-n words with no equal adjacent letters and j
/// descents, coefficientwise in n variables.
pub(super) fn words(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("words", CHAR_NOTE);
    let n_max = config.n_max_or(4);
    for n in 1..=n_max {
        for j in 0..n {
            let chi = ideal_character(n, j, config.max_simplices)?;
            let lhs = frobenius(&chi).to_polynomial(n)?;
            let mut rhs = x_poly_zero(n);
            for w in words_with_descents(n, j, n) {
                let mut exps = vec![0u16; n];
                for &letter in &w {
                    exps[letter as usize - 1] += 1;
                }
                rhs.add_monomial(exps, 1);
            }
            let pass = lhs == rhs;
            report.cases.push(
                CaseResult::from_bool(format!("n={n} j={j}"), pass)
                    .with_witness(format!("lhs={lhs} rhs={rhs}")),
            );
        }
    }
    Ok(report)
}

/// Weakly increasing vectors of length n over [max]: multiset contents.
fn multiset_contents(n: usize, max: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, max: u8, lo: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(n, max, v, cur, out);
            cur.pop();
        }
    }
    go(n, max, 1, &mut cur, &mut out);
    out
}

/// The multiset-derangement expansion of the top homology of B_n- * C_n,
/// coefficientwise in n variables.
pub(super) fn multiset_derangement(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("multiset-derangement", CHAR_NOTE);
    let n_max = config.n_max_or(4);
    for n in 1..=n_max {
        let chi = boolean_rees_character(n, config.max_simplices)?;
        let lhs = frobenius(&chi).to_polynomial(n)?;
        let mut rhs = x_poly_zero(n);
        for content in multiset_contents(n, n as u8) {
            let count = multiset_derangements(&content).len();
            if count > 0 {
                let mut exps = vec![0u16; n];
                for &letter in &content {
                    exps[letter as usize - 1] += 1;
                }
                rhs.add_monomial(exps, count as i128);
            }
        }
        let pass = lhs == rhs;
        report.cases.push(
            CaseResult::from_bool(format!("n={n}"), pass)
                .with_witness(format!("lhs={lhs} rhs={rhs}")),
        );
    }
    Ok(report)
}

/// The alternating induced sum: ch H(B_n- * C_n) =
/// sum_{m=0}^n (-1)^{n-m} sum_j ch H(I_j(B_m)) h_{n-m}.
pub(super) fn character_sieve(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("character-sieve", CHAR_NOTE);
    let n_max = config.n_max_or(4);
    for n in 1..=n_max {
        let chi = boolean_rees_character(n, config.max_simplices)?;
        let lhs = frobenius(&chi);
        // the m = 0 slot is the minimum-element convention term: the
        // trivial representation h_n with sign (-1)^n
        let mut rhs = if n % 2 == 0 {
            SymFunc::h(n as u32)
        } else {
            SymFunc::h(n as u32).neg()
        };
        for m in 1..=n {
            let mut ideal_sum = SymFunc::zero(m as u32);
            for j in 0..m {
                let chi_m = ideal_character(m, j, config.max_simplices)?;
                ideal_sum = ideal_sum.add(&frobenius(&chi_m));
            }
            let term = ideal_sum.mul(&SymFunc::h((n - m) as u32));
            rhs = if (n - m) % 2 == 0 {
                rhs.add(&term)
            } else {
                rhs.sub(&term)
            };
        }
        report.cases.push(symfunc_case(format!("n={n}"), &lhs, &rhs));
    }
    Ok(report)
}

/// ch of the Lefschetz character of (B_j * T_{t,j})-, memoized per (j, t).
fn tree_lefschetz_ch(
    j: usize,
    t: usize,
    memo: &mut HashMap<(usize, usize), SymFunc>,
) -> Result<SymFunc> {
    if let Some(f) = memo.get(&(j, t)) {
        return Ok(f.clone());
    }
    let poset = if j == 0 {
        // (B_0 * T_{t,0})- is empty
        crate::poset::Poset::build(vec![], &[])?
    } else {
        rees_product(&boolean_lattice(j), &crate::catalog::tary_tree(t, j))?.remove_bottom()?
    };
    let action = SymmetricAction::new(&poset, j);
    let cf = lefschetz_character(&action)?;
    let f = frobenius(&cf);
    memo.insert((j, t), f.clone());
    Ok(f)
}

/// The equivariant uniform recursion:
/// sum_{k=0}^n [k+1]_t h_k ch L((B_{n-k} * T_{t,n-k})-) = -h_n.
pub(super) fn uniform_recursion_character(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(
        "uniform-recursion-character",
        "Lefschetz characters (alternating over all degrees); traces via fixed subposets",
    );
    let n_max = config.n_max_or(5);
    let mut memo = HashMap::new();
    for &t in config.ts.iter().filter(|&&t| t >= 1) {
        for n in 0..=n_max {
            let mut acc = SymFunc::zero(n as u32);
            for k in 0..=n {
                let bracket = q_int(k + 1).eval1(t as i128) as i64;
                let l = tree_lefschetz_ch(n - k, t as usize, &mut memo)?;
                acc = acc.add(&SymFunc::h(k as u32).mul(&l).scale_int(bracket));
            }
            let expected = SymFunc::h(n as u32).neg();
            report
                .cases
                .push(symfunc_case(format!("n={n} t={t}"), &acc, &expected));
        }
    }
    Ok(report)
}

/// The equivariant tree lemma for Cohen-Macaulay P = B_n:
/// sum_j t^j (character of I_{j-1}(P)) = character of ((P)* * T_{t,n})-.
pub(super) fn tree_lemma_character(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("tree-lemma-character", CHAR_NOTE);
    let n_max = config.n_max_or(4);
    for n in 1..=n_max {
        let ideal_chars: Vec<ClassFunction> = (0..n)
            .map(|j| ideal_character(n, j, config.max_simplices))
            .collect::<Result<_>>()?;
        for &t in config.ts.iter().filter(|&&t| (1..=2).contains(&t)) {
            let mut lhs: Option<ClassFunction> = None;
            for (j, chi) in ideal_chars.iter().enumerate() {
                let scaled = chi.scale(t.pow(j as u32 + 1));
                lhs = Some(match lhs {
                    None => scaled,
                    Some(acc) => acc.add(&scaled),
                });
            }
            let lhs = lhs.expect("n >= 1");
            let dual_rees = rees_product(
                &boolean_lattice(n).dual(),
                &crate::catalog::tary_tree(t as usize, n),
            )?
            .remove_bottom()?;
            let action = SymmetricAction::new(&dual_rees, n);
            let rhs = homology_character(&action, CmPolicy::Check(config.max_simplices))?;
            let pass = lhs == rhs;
            report.cases.push(
                CaseResult::from_bool(format!("n={n} t={t}"), pass).with_witness(format!(
                    "lhs={:?} rhs={:?}",
                    lhs.values, rhs.values
                )),
            );
        }
    }
    Ok(report)
}

/// The tree character formula: ch of the top homology of
/// (B_n * T_{t,n})- equals t sum_j omega Q_{n,j} t^j at integer t.
pub(super) fn tree_character(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("tree-character", CHAR_NOTE);
    let n_max = config.n_max_or(4);
    for n in 1..=n_max {
        let omega_qs: Vec<SymFunc> = (0..n)
            .map(|j| omega_eulerian(n, j))
            .collect::<Result<_>>()?;
        for &t in config.ts.iter().filter(|&&t| t >= 1) {
            let rees =
                rees_product(&boolean_lattice(n), &crate::catalog::tary_tree(t as usize, n))?
                    .remove_bottom()?;
            let action = SymmetricAction::new(&rees, n);
            let chi = homology_character(&action, CmPolicy::Check(config.max_simplices))?;
            let lhs = frobenius(&chi);
            let mut rhs = SymFunc::zero(n as u32);
            for (j, f) in omega_qs.iter().enumerate() {
                rhs = rhs.add(&f.scale_int(t.pow(j as u32 + 1)));
            }
            report
                .cases
                .push(symfunc_case(format!("n={n} t={t}"), &lhs, &rhs));
        }
    }
    Ok(report)
}

