//! Exact symmetric and quasisymmetric function arithmetic: homogeneous
//! symmetric functions over the monomial basis with rational
//! coefficients, the h/e/p transition matrices, the omega involution,
//! fundamental quasisymmetric expansions, the (fixed-point) Eulerian
//! quasisymmetric functions, and the Frobenius characteristic.
//!
//! Degree-n functions are expanded internally in n variables, which is
//! faithful for degree <= n; user-facing expansions take any m >= n.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::characters::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{exd_set, stats, Permutation};
use crate::poly::MultiPoly;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A homogeneous symmetric function of fixed degree, stored as exact
/// rational coefficients over the monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: u32,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(degree: u32) -> Self {
        SymFunc {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1 as the degree-0 symmetric function.
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::empty(), BigRational::one());
        SymFunc { degree: 0, coeffs }
    }

    pub fn from_m_coeffs(degree: u32, coeffs: BTreeMap<Partition, BigRational>) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|(p, c)| {
                debug_assert_eq!(p.n(), degree);
                !c.is_zero()
            })
            .collect();
        SymFunc { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.degree, other.degree, "degrees must match");
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let entry = coeffs.entry(k.clone()).or_insert_with(BigRational::zero);
            *entry += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        SymFunc {
            degree: self.degree,
            coeffs,
        }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree);
        }
        SymFunc {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&rat(c))
    }

    /// Complete homogeneous h_k = sum of all m_lambda.
    pub fn h(k: u32) -> SymFunc {
        let coeffs = partitions_of(k)
            .into_iter()
            .map(|p| (p, BigRational::one()))
            .collect();
        SymFunc { degree: k, coeffs }
    }

    /// Elementary e_k = m_{1^k}.
    pub fn e(k: u32) -> SymFunc {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::new(vec![1; k as usize]), BigRational::one());
        SymFunc { degree: k, coeffs }
    }

    /// Power sum p_k = m_k (k >= 1); p_0 = 1.
    pub fn p(k: u32) -> SymFunc {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(
            if k == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![k])
            },
            BigRational::one(),
        );
        SymFunc { degree: k, coeffs }
    }

    pub fn h_lambda(lambda: &Partition) -> SymFunc {
        lambda
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| acc.mul(&SymFunc::h(k)))
    }

    pub fn e_lambda(lambda: &Partition) -> SymFunc {
        lambda
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| acc.mul(&SymFunc::e(k)))
    }

    pub fn p_lambda(lambda: &Partition) -> SymFunc {
        lambda
            .parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| acc.mul(&SymFunc::p(k)))
    }

    /// Product across degrees, by expanding both factors as polynomials
    /// in degree(self) + degree(other) variables.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let degree = self.degree + other.degree;
        if self.is_zero() || other.is_zero() {
            return SymFunc::zero(degree);
        }
        let m = (degree as usize).max(1);
        let a = expand_rational(self, m);
        let b = expand_rational(other, m);
        let mut prod: HashMap<Vec<u16>, BigRational> = HashMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                let entry = prod.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        let mut coeffs: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (e, c) in prod {
            if c.is_zero() {
                continue;
            }
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            if sorted == e {
                coeffs.insert(
                    Partition::new(e.into_iter().map(|x| x as u32).collect()),
                    c,
                );
            }
        }
        SymFunc { degree, coeffs }
    }

    /// Expansion as an integer-coefficient polynomial in m >= degree
    /// variables x1..xm.
    pub fn to_polynomial(&self, m: usize) -> Result<MultiPoly> {
        if m < self.degree as usize {
            return Err(Error::TooFewVariables {
                needed: self.degree as usize,
                degree: self.degree as usize,
                got: m,
            });
        }
        let names: Vec<String> = (1..=m.max(1)).map(|i| format!("x{i}")).collect();
        let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut poly = MultiPoly::zero(&name_refs);
        for (e, c) in expand_rational(self, m.max(1)) {
            if !c.is_integer() {
                return Err(Error::Invalid(format!(
                    "non-integer coefficient {c} in polynomial expansion"
                )));
            }
            let v = c
                .to_integer()
                .to_i128()
                .ok_or(Error::ArithmeticOverflow)?;
            poly.add_monomial(e, v);
        }
        Ok(poly)
    }

    /// The involution omega, computed on the power-sum basis where
    /// omega(p_lambda) = (-1)^{n - len(lambda)} p_lambda.
    pub fn omega(&self) -> SymFunc {
        let n = self.degree;
        let in_p = to_basis(self, Basis::P);
        let mut signed = BTreeMap::new();
        for (lambda, c) in in_p {
            let sign = if (n as usize - lambda.len()).is_multiple_of(2) {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            signed.insert(lambda, c * sign);
        }
        from_basis(n, Basis::P, &signed)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*m{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All distinct rearrangements of the parts of lambda padded to m slots.
fn distinct_arrangements(lambda: &Partition, m: usize) -> Vec<Vec<u16>> {
    let mut start: Vec<u16> = lambda.parts().iter().map(|&p| p as u16).collect();
    if start.len() > m {
        return Vec::new();
    }
    start.resize(m, 0);
    start.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(start.clone());
        // next permutation in lexicographic order
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| start[i] < start[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| start[j] > start[i]).unwrap();
        start.swap(i, j);
        start[i + 1..].reverse();
    }
    out
}

fn expand_rational(f: &SymFunc, m: usize) -> HashMap<Vec<u16>, BigRational> {
    let mut out = HashMap::new();
    for (lambda, c) in &f.coeffs {
        for e in distinct_arrangements(lambda, m) {
            out.insert(e, c.clone());
        }
    }
    out
}

// ----- basis transitions -----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    H,
    E,
    P,
}

struct Transition {
    parts: Vec<Partition>,
    /// to_m[i][j] = coefficient of m_{parts[j]} in basis_{parts[i]}
    to_m: Vec<Vec<BigRational>>,
    /// inverse of to_m
    from_m: Vec<Vec<BigRational>>,
}

type TransitionCache = Mutex<HashMap<(u32, Basis), Arc<Transition>>>;

fn transition(n: u32, basis: Basis) -> Arc<Transition> {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(n, basis)) {
        return Arc::clone(t);
    }
    let parts = partitions_of(n);
    let mut to_m = Vec::with_capacity(parts.len());
    for lambda in &parts {
        let b = match basis {
            Basis::H => SymFunc::h_lambda(lambda),
            Basis::E => SymFunc::e_lambda(lambda),
            Basis::P => SymFunc::p_lambda(lambda),
        };
        to_m.push(parts.iter().map(|mu| b.coeff(mu)).collect::<Vec<_>>());
    }
    let from_m = invert(&to_m).expect("basis transition matrices are invertible");
    let t = Arc::new(Transition {
        parts,
        to_m,
        from_m,
    });
    cache.lock().unwrap().insert((n, basis), Arc::clone(&t));
    t
}

/// Gauss-Jordan inverse over the rationals.
fn invert(matrix: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &d;
            inv[col][j] /= &d;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let av = &a[col][j] * &factor;
                    a[r][j] -= av;
                    let iv = &inv[col][j] * &factor;
                    inv[r][j] -= iv;
                }
            }
        }
    }
    Some(inv)
}

/// Coefficients of f on the chosen multiplicative basis.
pub fn to_basis(f: &SymFunc, basis: Basis) -> BTreeMap<Partition, BigRational> {
    let t = transition(f.degree, basis);
    let f_m: Vec<BigRational> = t.parts.iter().map(|p| f.coeff(p)).collect();
    let mut out = BTreeMap::new();
    for (i, lambda) in t.parts.iter().enumerate() {
        let mut acc = BigRational::zero();
        for (j, v) in f_m.iter().enumerate() {
            if !v.is_zero() {
                acc += &t.from_m[j][i] * v;
            }
        }
        if !acc.is_zero() {
            out.insert(lambda.clone(), acc);
        }
    }
    out
}

/// Rebuild a SymFunc from coefficients on a multiplicative basis.
pub fn from_basis(
    n: u32,
    basis: Basis,
    coeffs: &BTreeMap<Partition, BigRational>,
) -> SymFunc {
    let t = transition(n, basis);
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (i, lambda) in t.parts.iter().enumerate() {
        let Some(c) = coeffs.get(lambda) else {
            continue;
        };
        if c.is_zero() {
            continue;
        }
        for (j, mu) in t.parts.iter().enumerate() {
            if !t.to_m[i][j].is_zero() {
                let entry = out.entry(mu.clone()).or_insert_with(BigRational::zero);
                *entry += &t.to_m[i][j] * c;
            }
        }
    }
    SymFunc::from_m_coeffs(n, out)
}

// ----- Frobenius characteristic and Schur decomposition -----

/// ch(chi) = sum over lambda of chi(lambda) / z_lambda * p_lambda.
pub fn frobenius(chi: &ClassFunction) -> SymFunc {
    let coeffs: BTreeMap<Partition, BigRational> = chi
        .values
        .iter()
        .filter(|(_, &v)| v != 0)
        .map(|(lambda, &v)| {
            (
                lambda.clone(),
                rat(v) / rat(lambda.z() as i64),
            )
        })
        .collect();
    from_basis(chi.n, Basis::P, &coeffs)
}

/// Inverse Frobenius: the class function with chi(mu) = z_mu * (p-basis
/// coefficient of f at mu). Rational in general; integral for genuine
/// virtual characters.
pub fn to_class_function(f: &SymFunc) -> Result<ClassFunction> {
    let in_p = to_basis(f, Basis::P);
    let mut values = BTreeMap::new();
    for mu in partitions_of(f.degree) {
        let c = in_p.get(&mu).cloned().unwrap_or_else(BigRational::zero);
        let v = c * rat(mu.z() as i64);
        if !v.is_integer() {
            return Err(Error::NonIntegralMultiplicity {
                key: mu.to_string(),
                value: v.to_string(),
            });
        }
        values.insert(mu.clone(), v.to_integer().to_i64().ok_or(Error::ArithmeticOverflow)?);
    }
    Ok(ClassFunction::new(f.degree, values))
}

/// Multiplicities of the Schur basis in f, via irreducible characters:
/// <f, s_lambda> = sum_mu c_mu chi^lambda(mu) where f = sum c_mu p_mu.
pub fn schur_decompose(f: &SymFunc) -> BTreeMap<Partition, BigRational> {
    let in_p = to_basis(f, Basis::P);
    let mut ct = CharacterTable::new();
    let mut out = BTreeMap::new();
    for lambda in partitions_of(f.degree) {
        let mut acc = BigRational::zero();
        for (mu, c) in &in_p {
            acc += c * rat(ct.chi(&lambda, mu));
        }
        if !acc.is_zero() {
            out.insert(lambda, acc);
        }
    }
    out
}

/// Integer Schur multiplicities; errors on the first non-integral one.
pub fn schur_multiplicities(f: &SymFunc) -> Result<BTreeMap<Partition, i64>> {
    let mut out = BTreeMap::new();
    for (lambda, c) in schur_decompose(f) {
        if !c.is_integer() {
            return Err(Error::NonIntegralMultiplicity {
                key: lambda.to_string(),
                value: c.to_string(),
            });
        }
        out.insert(
            lambda,
            c.to_integer().to_i64().ok_or(Error::ArithmeticOverflow)?,
        );
    }
    Ok(out)
}

/// All Schur multiplicities are nonnegative integers (f is the
/// characteristic of a true representation).
pub fn schur_nonnegative(f: &SymFunc) -> Result<bool> {
    Ok(schur_multiplicities(f)?.values().all(|&v| v >= 0))
}

// ----- quasisymmetric expansions -----

/// A homogeneous degree-n polynomial expansion in x1..xm with integer
/// coefficients (a quasisymmetric function presented in m variables).
#[derive(Clone, PartialEq, Eq)]
pub struct QSymExpansion {
    pub degree: u32,
    pub nvars: usize,
    pub poly: MultiPoly,
}

fn x_vars(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).collect()
}

impl QSymExpansion {
    pub fn zero(degree: u32, m: usize) -> Self {
        let names = x_vars(m);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        QSymExpansion {
            degree,
            nvars: m,
            poly: MultiPoly::zero(&refs),
        }
    }

    pub fn add(&self, other: &QSymExpansion) -> QSymExpansion {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.nvars, other.nvars);
        QSymExpansion {
            degree: self.degree,
            nvars: self.nvars,
            poly: self.poly.add(&other.poly),
        }
    }
}

/// The fundamental quasisymmetric function F_{S,n} in m >= n variables:
/// the sum of x_{i_1} ... x_{i_n} over weakly decreasing index words with
/// strict descents exactly at the positions in S.
pub fn f_qsym(s: &[usize], n: u32, m: usize) -> Result<QSymExpansion> {
    if m < n as usize {
        return Err(Error::TooFewVariables {
            needed: n as usize,
            degree: n as usize,
            got: m,
        });
    }
    debug_assert!(s.iter().all(|&i| i >= 1 && i < n as usize));
    let mut out = QSymExpansion::zero(n, m);
    if n == 0 {
        out.poly.add_monomial(vec![0; m], 1);
        return Ok(out);
    }
    // indices i_1 >= i_2 >= ... >= i_n >= 1, strict when position in S
    let n = n as usize;
    let mut word = vec![0usize; n];
    fn go(
        pos: usize,
        n: usize,
        m: usize,
        s: &[usize],
        word: &mut Vec<usize>,
        out: &mut QSymExpansion,
    ) {
        if pos == n {
            let mut exps = vec![0u16; m];
            for &i in word.iter() {
                exps[i - 1] += 1;
            }
            out.poly.add_monomial(exps, 1);
            return;
        }
        let upper = if pos == 0 {
            m
        } else if s.contains(&pos) {
            word[pos - 1] - 1
        } else {
            word[pos - 1]
        };
        for i in 1..=upper {
            word[pos] = i;
            go(pos + 1, n, m, s, word, out);
        }
    }
    go(0, n, m, s, &mut word, &mut out);
    Ok(out)
}

/// The fixed-point Eulerian quasisymmetric function Q_{n,j,k} in m
/// variables: the sum of F_{Exd(sigma),n} over sigma with j excedances
/// and k fixed points.
pub fn eulerian_qsym_fix(n: u32, j: u32, k: u32, m: usize) -> Result<QSymExpansion> {
    if n == 0 {
        let mut out = QSymExpansion::zero(0, m);
        if j == 0 && k == 0 {
            out.poly.add_monomial(vec![0; m], 1);
        }
        return Ok(out);
    }
    if j > (n - 1) || k > n {
        return Err(Error::IndexOutOfRange(j.max(k) as usize, n as usize));
    }
    let mut out = QSymExpansion::zero(n, m);
    for sigma in Permutation::all(n as usize) {
        let st = stats(&sigma);
        if st.exc == j && st.fix == k {
            let exd = exd_set(&sigma);
            out = out.add(&f_qsym(&exd, n, m)?);
        }
    }
    Ok(out)
}

/// Q_{n,j} = sum over k of Q_{n,j,k}.
pub fn eulerian_qsym(n: u32, j: u32, m: usize) -> Result<QSymExpansion> {
    let mut out = QSymExpansion::zero(n, m);
    for sigma in Permutation::all(n as usize) {
        let st = stats(&sigma);
        if st.exc == j {
            let exd = exd_set(&sigma);
            out = out.add(&f_qsym(&exd, n, m)?);
        }
    }
    Ok(out)
}

/// Read a symmetric polynomial expansion off as a SymFunc over the
/// monomial basis, verifying symmetry (reporting a violating monomial
/// pair if not).
pub fn to_monomial_basis(q: &QSymExpansion) -> Result<SymFunc> {
    if q.nvars < q.degree as usize {
        return Err(Error::TooFewVariables {
            needed: q.degree as usize,
            degree: q.degree as usize,
            got: q.nvars,
        });
    }
    let mut by_partition: HashMap<Vec<u16>, Vec<(Vec<u16>, i128)>> = HashMap::new();
    for (e, c) in q.poly.terms() {
        let mut sorted = e.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        by_partition.entry(sorted).or_default().push((e.to_vec(), c));
    }
    let mut coeffs = BTreeMap::new();
    for (sorted, group) in by_partition {
        let lambda = Partition::new(sorted.iter().map(|&x| x as u32).collect());
        let expected_orbit = distinct_arrangements(&lambda, q.nvars).len();
        let c0 = group[0].1;
        for (e, c) in &group {
            if *c != c0 {
                return Err(Error::NotSymmetric(
                    format!("{:?}", group[0].0),
                    format!("{e:?}"),
                    c0.to_string(),
                    c.to_string(),
                ));
            }
        }
        if group.len() != expected_orbit {
            return Err(Error::NotSymmetric(
                format!("{:?}", group[0].0),
                format!("orbit of {lambda}"),
                format!("{} monomials", group.len()),
                format!("{expected_orbit} expected"),
            ));
        }
        coeffs.insert(lambda, BigRational::from_integer(BigInt::from(c0)));
    }
    Ok(SymFunc::from_m_coeffs(q.degree, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_and_e3_in_monomial_basis() {
        let h2 = SymFunc::h(2);
        assert_eq!(h2.coeff(&Partition::new(vec![2])), rat(1));
        assert_eq!(h2.coeff(&Partition::new(vec![1, 1])), rat(1));
        let e3 = SymFunc::e(3);
        assert_eq!(e3.coeff(&Partition::new(vec![1, 1, 1])), rat(1));
        assert_eq!(e3.coeffs().len(), 1);
    }

    #[test]
    fn p_squared_expansion() {
        // p_1^2 = m_2 + 2 m_{11}; p_2 = m_2
        let p1sq = SymFunc::p(1).mul(&SymFunc::p(1));
        assert_eq!(p1sq.coeff(&Partition::new(vec![2])), rat(1));
        assert_eq!(p1sq.coeff(&Partition::new(vec![1, 1])), rat(2));
        let p2 = SymFunc::p(2);
        assert_eq!(p2.coeff(&Partition::new(vec![2])), rat(1));
        assert_eq!(p2.coeff(&Partition::new(vec![1, 1])), rat(0));
    }

    #[test]
    fn omega_swaps_h_and_e() {
        for n in 0..=6u32 {
            assert_eq!(SymFunc::h(n).omega(), SymFunc::e(n), "omega(h_{n})");
            assert_eq!(SymFunc::e(n).omega(), SymFunc::h(n), "omega(e_{n})");
        }
    }

    #[test]
    fn omega_is_involution() {
        let f = SymFunc::h(3)
            .mul(&SymFunc::p(2))
            .add(&SymFunc::e(5).scale_int(-7));
        assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn basis_round_trips() {
        for basis in [Basis::H, Basis::E, Basis::P] {
            let f = SymFunc::h(2).mul(&SymFunc::e(2)).add(&SymFunc::p(4).scale_int(3));
            let c = to_basis(&f, basis);
            assert_eq!(from_basis(4, basis, &c), f);
        }
    }

    #[test]
    fn h_times_e_alternating_sum_vanishes() {
        // coefficient of z^n in H(z) E(-z) is zero for n >= 1, through
        // degree 8
        for n in 1..=8u32 {
            let mut acc = SymFunc::zero(n);
            for b in 0..=n {
                let term = SymFunc::h(n - b).mul(&SymFunc::e(b));
                acc = if b % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            assert!(acc.is_zero(), "degree {n}: {acc}");
        }
    }

    #[test]
    fn frobenius_of_standard_characters() {
        use crate::characters::{regular_character, sign_character, tensor, trivial_character};
        for n in 1..=6u32 {
            assert_eq!(frobenius(&trivial_character(n)), SymFunc::h(n));
            assert_eq!(frobenius(&sign_character(n)), SymFunc::e(n));
        }
        // omega(ch V) = ch(V tensor sign) on the regular representation of S_4
        let reg = regular_character(4);
        let twisted = tensor(&reg, &sign_character(4));
        assert_eq!(frobenius(&reg).omega(), frobenius(&twisted));
    }

    #[test]
    fn schur_decomposition_of_h_and_regular() {
        // h_n = s_n; the regular representation contains each irreducible
        // with multiplicity equal to its dimension
        let mults = schur_multiplicities(&SymFunc::h(4)).unwrap();
        assert_eq!(mults.len(), 1);
        assert_eq!(mults[&Partition::new(vec![4])], 1);

        let reg = frobenius(&crate::characters::regular_character(4));
        let mults = schur_multiplicities(&reg).unwrap();
        let mut ct = CharacterTable::new();
        let id = Partition::new(vec![1, 1, 1, 1]);
        for (lambda, mult) in mults {
            assert_eq!(mult, ct.chi(&lambda, &id), "{lambda}");
        }
    }

    #[test]
    fn schur_rejects_non_integral() {
        let f = SymFunc::h(3).scale(&(rat(1) / rat(2)));
        assert!(schur_multiplicities(&f).is_err());
    }

    #[test]
    fn f_qsym_extremes() {
        // F_{empty,n} = h_n, F_{[n-1],n} = e_n
        for n in 1..=5u32 {
            let h = to_monomial_basis(&f_qsym(&[], n, n as usize).unwrap()).unwrap();
            assert_eq!(h, SymFunc::h(n));
            let all: Vec<usize> = (1..n as usize).collect();
            let e = to_monomial_basis(&f_qsym(&all, n, n as usize).unwrap()).unwrap();
            assert_eq!(e, SymFunc::e(n));
        }
    }

    #[test]
    fn f_qsym_needs_enough_variables() {
        assert!(f_qsym(&[], 4, 3).is_err());
    }

    #[test]
    fn eulerian_qsym_forced_cases() {
        // Q_{n,0,n} = h_n: the identity is the only permutation with all
        // fixed points
        for n in 1..=5u32 {
            let q = eulerian_qsym_fix(n, 0, n, n as usize).unwrap();
            assert_eq!(to_monomial_basis(&q).unwrap(), SymFunc::h(n));
        }
    }

    #[test]
    fn eulerian_qsym_is_symmetric() {
        for n in 1..=6u32 {
            for j in 0..n {
                for k in 0..=n {
                    let q = eulerian_qsym_fix(n, j, k, n as usize).unwrap();
                    assert!(
                        to_monomial_basis(&q).is_ok(),
                        "Q_({n},{j},{k}) not symmetric"
                    );
                }
            }
        }
    }

    #[test]
    fn eulerian_qsym_squarefree_coefficient_counts_permutations() {
        // the coefficient of x_1 x_2 ... x_n in sum_{j,k} Q_{n,j,k} is n!
        for n in 1..=5u32 {
            let mut total = 0i128;
            for j in 0..n {
                for k in 0..=n {
                    let q = eulerian_qsym_fix(n, j, k, n as usize).unwrap();
                    total += q.poly.coeff(&vec![1u16; n as usize]);
                }
            }
            assert_eq!(total, crate::poly::factorial(n as u64) as i128);
        }
    }

    #[test]
    fn q31_squarefree_total() {
        // the four permutations of S_3 with one excedance each contribute
        // exactly 1 to the squarefree monomial
        let q = eulerian_qsym(3, 1, 3).unwrap();
        assert_eq!(q.poly.coeff(&[1, 1, 1]), 4);
    }

    #[test]
    fn omega_of_eulerian_qsym_matches_complement_route() {
        // omega(Q_{n,j}) computed through the p-basis equals the sum of
        // F over complemented descent sets
        for n in 1..=5u32 {
            for j in 0..n {
                let q = to_monomial_basis(&eulerian_qsym(n, j, n as usize).unwrap()).unwrap();
                let lhs = q.omega();
                let mut rhs = QSymExpansion::zero(n, n as usize);
                for sigma in Permutation::all(n as usize) {
                    if stats(&sigma).exc == j {
                        let exd = exd_set(&sigma);
                        let complement: Vec<usize> =
                            (1..n as usize).filter(|i| !exd.contains(i)).collect();
                        rhs = rhs.add(&f_qsym(&complement, n, n as usize).unwrap());
                    }
                }
                assert_eq!(lhs, to_monomial_basis(&rhs).unwrap(), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn to_monomial_basis_rejects_asymmetric_input() {
        let mut q = QSymExpansion::zero(2, 2);
        q.poly.add_monomial(vec![2, 0], 1);
        assert!(matches!(
            to_monomial_basis(&q),
            Err(Error::NotSymmetric(..))
        ));
    }
}
