//! Sparse multivariate polynomials with exact integer coefficients in
//! named formal variables, plus the q-polynomial helpers (q-integers,
//! q-factorials, Gaussian binomials) used throughout the suites.

use std::collections::BTreeMap;
use std::fmt;

/// A sparse polynomial over named variables. Exponent vectors always have
/// the same length as `vars`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, i128>,
}

fn add_term(terms: &mut BTreeMap<Vec<u16>, i128>, exps: Vec<u16>, coeff: i128) {
    if coeff == 0 {
        return;
    }
    match terms.entry(exps) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().checked_add(coeff).expect("coefficient overflow");
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: i128) -> Self {
        let mut p = MultiPoly::zero(vars);
        add_term(&mut p.terms, vec![0; p.vars.len()], c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        MultiPoly::constant(vars, 1)
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        MultiPoly::monomial_in(vars, &[(name, 1)], 1)
    }

    /// c * prod v^e over the listed (variable, exponent) pairs.
    pub fn monomial_in(vars: &[&str], exps: &[(&str, u16)], c: i128) -> Self {
        let mut p = MultiPoly::zero(vars);
        let mut e = vec![0u16; p.vars.len()];
        for &(name, exp) in exps {
            let i = p
                .vars
                .iter()
                .position(|v| v == name)
                .unwrap_or_else(|| panic!("unknown variable {name}"));
            e[i] += exp;
        }
        add_term(&mut p.terms, e, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], i128)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, exps: Vec<u16>, coeff: i128) {
        assert_eq!(exps.len(), self.vars.len());
        add_term(&mut self.terms, exps, coeff);
    }

    pub fn coeff(&self, exps: &[u16]) -> i128 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    fn same_vars(&self, other: &MultiPoly) -> bool {
        self.vars == other.vars
    }

    /// Remap both operands onto the union of their variable sets.
    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.same_vars(other) {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let remap = |p: &MultiPoly| -> MultiPoly {
            let positions: Vec<usize> = p
                .vars
                .iter()
                .map(|v| vars.iter().position(|w| w == v).unwrap())
                .collect();
            let mut terms = BTreeMap::new();
            for (e, &c) in &p.terms {
                let mut ne = vec![0u16; vars.len()];
                for (i, &exp) in e.iter().enumerate() {
                    ne[positions[i]] = exp;
                }
                add_term(&mut terms, ne, c);
            }
            MultiPoly {
                vars: vars.clone(),
                terms,
            }
        };
        (remap(self), remap(other))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(other);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: i128) -> MultiPoly {
        if c == 0 {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, &v)| (e.clone(), v.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(other);
        let mut terms = BTreeMap::new();
        for (ea, &ca) in &a.terms {
            for (eb, &cb) in &b.terms {
                let e: Vec<u16> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                add_term(
                    &mut terms,
                    e,
                    ca.checked_mul(cb).expect("coefficient overflow"),
                );
            }
        }
        MultiPoly {
            vars: a.vars,
            terms,
        }
    }

    /// Drop all monomials whose exponent in `var` exceeds `max_deg`
    /// (truncation order per variable).
    pub fn truncate(&self, var: &str, max_deg: u16) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] <= max_deg)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    /// Total degree of the highest monomial, or None for the zero poly.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    pub fn degree_in(&self, var: &str) -> Option<u16> {
        let i = self.vars.iter().position(|v| v == var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Exact evaluation; values are matched to `vars` by position.
    pub fn eval(&self, values: &[i128]) -> i128 {
        assert_eq!(values.len(), self.vars.len());
        let mut acc: i128 = 0;
        for (e, &c) in &self.terms {
            let mut term = c;
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.checked_mul(values[i]).expect("evaluation overflow");
                }
            }
            acc = acc.checked_add(term).expect("evaluation overflow");
        }
        acc
    }

    /// Evaluate a univariate polynomial at an integer point.
    pub fn eval1(&self, value: i128) -> i128 {
        assert_eq!(self.vars.len(), 1, "eval1 needs a univariate polynomial");
        self.eval(&[value])
    }

    /// Substitute an integer for one variable, keeping the others formal.
    pub fn substitute(&self, var: &str, value: i128) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let mut terms = BTreeMap::new();
        for (e, &c) in &self.terms {
            let mut coeff = c;
            for _ in 0..e[i] {
                coeff = coeff.checked_mul(value).expect("coefficient overflow");
            }
            let mut ne = e.clone();
            ne[i] = 0;
            add_term(&mut terms, ne, coeff);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in &self.terms {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let mag = c.unsigned_abs();
            let vars_part: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], exp)
                    }
                })
                .collect();
            if vars_part.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars_part.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ----- q-polynomial helpers (univariate in "q") -----

pub const QVAR: &[&str] = &["q"];

/// [n]_q = 1 + q + ... + q^{n-1}.
pub fn q_int(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(QVAR);
    for i in 0..n {
        p.add_monomial(vec![i as u16], 1);
    }
    p
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
pub fn q_factorial(n: usize) -> MultiPoly {
    let mut p = MultiPoly::one(QVAR);
    for i in 1..=n {
        p = p.mul(&q_int(i));
    }
    p
}

/// Gaussian binomial [n k]_q by the Pascal recursion
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
pub fn gaussian_binomial(n: usize, k: usize) -> MultiPoly {
    if k > n {
        return MultiPoly::zero(QVAR);
    }
    let mut row: Vec<MultiPoly> = vec![MultiPoly::one(QVAR)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let mut entry = MultiPoly::zero(QVAR);
            if j > 0 {
                entry = entry.add(&row[j - 1]);
            }
            if j < m {
                if let Some(prev) = row.get(j) {
                    let shift = MultiPoly::monomial_in(QVAR, &[("q", j as u16)], 1);
                    entry = entry.add(&prev.mul(&shift));
                }
            }
            next.push(entry);
        }
        row = next;
    }
    row[k].clone()
}

/// prod_{i=from..=to} (1 + q^i); the empty product is 1.
pub fn product_one_plus_q_pows(from: usize, to: usize) -> MultiPoly {
    let mut p = MultiPoly::one(QVAR);
    if from > to {
        return p;
    }
    for i in from..=to {
        let mut factor = MultiPoly::one(QVAR);
        factor.add_monomial(vec![i as u16], 1);
        p = p.mul(&factor);
    }
    p
}

/// q^{binom(k, 2)} as a monomial.
pub fn q_binom2_monomial(k: usize) -> MultiPoly {
    let e = k * (k.saturating_sub(1)) / 2;
    MultiPoly::monomial_in(QVAR, &[("q", e as u16)], 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let vars = &["q", "t"];
        let q = MultiPoly::var(vars, "q");
        let t = MultiPoly::var(vars, "t");
        let p = q.add(&t).mul(&q.sub(&t));
        let expected = q.mul(&q).sub(&t.mul(&t));
        assert_eq!(p, expected);
        assert_eq!(p.eval(&[3, 2]), 5);
    }

    #[test]
    fn alignment_of_distinct_variable_sets() {
        let q = MultiPoly::var(&["q"], "q");
        let t = MultiPoly::var(&["t"], "t");
        let p = q.mul(&t);
        assert_eq!(p.vars(), &["q".to_string(), "t".to_string()]);
        assert_eq!(p.eval(&[2, 5]), 10);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2).eval1(1), 6);
        // [4 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let g = gaussian_binomial(4, 2);
        assert_eq!(g.coeff(&[0]), 1);
        assert_eq!(g.coeff(&[1]), 1);
        assert_eq!(g.coeff(&[2]), 2);
        assert_eq!(g.coeff(&[3]), 1);
        assert_eq!(g.coeff(&[4]), 1);
        assert_eq!(gaussian_binomial(4, 2).eval1(2), 35);
        assert_eq!(gaussian_binomial(3, 1).eval1(3), 13);
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(3).eval1(1), 6);
        assert_eq!(q_factorial(4).eval1(2), 3 * 7 * 15);
    }

    #[test]
    fn truncation_drops_high_powers() {
        let p = q_factorial(4);
        let t = p.truncate("q", 2);
        assert!(t.degree_in("q").unwrap() <= 2);
    }

    #[test]
    fn display_is_readable() {
        let vars = &["q", "t"];
        let p = MultiPoly::monomial_in(vars, &[("q", 2), ("t", 1)], 3)
            .add(&MultiPoly::one(vars))
            .sub(&MultiPoly::var(vars, "t"));
        let s = p.to_string();
        assert!(s.contains("3*q^2*t"), "{s}");
    }
}
