//! Truncated formal power series in z whose coefficients are exact
//! integer-coefficient polynomials (in the x-variables, t, and r), and
//! the cross-multiplied generating-function identity checks built on
//! them. Division never happens: every identity is verified in the form
//! LHS * denominator - numerator = 0, coefficient by coefficient.

use crate::error::Result;
use crate::perm::{exd_set, stats, Permutation};
use crate::poly::{gaussian_binomial, MultiPoly};
use crate::symfunc::{eulerian_qsym_fix, f_qsym, to_monomial_basis};

/// A power series in z through a fixed truncation order: coeffs[n] is
/// the coefficient of z^n.
#[derive(Clone)]
pub struct ZSeries {
    pub coeffs: Vec<MultiPoly>,
}

impl ZSeries {
    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        let cap = self.cap().min(other.cap());
        // addition aligns variable sets, so the bare zero works
        let mut coeffs = vec![MultiPoly::zero(&[]); cap + 1];
        for a in 0..=cap {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..=cap - a {
                if other.coeffs[b].is_zero() {
                    continue;
                }
                coeffs[a + b] = coeffs[a + b].add(&self.coeffs[a].mul(&other.coeffs[b]));
            }
        }
        ZSeries { coeffs }
    }

    pub fn sub(&self, other: &ZSeries) -> ZSeries {
        let cap = self.cap().min(other.cap());
        ZSeries {
            coeffs: (0..=cap)
                .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<(usize, &MultiPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
    }
}

fn x_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("x{i}")).collect()
}

/// h_n(x_1..x_m) as a polynomial: all monomials of degree n. Needs
/// m >= n (the callers keep the variable count at least the z-cap).
pub fn h_poly(n: u32, m: usize) -> MultiPoly {
    f_qsym(&[], n, m)
        .expect("series checks keep m at least the truncation order")
        .poly
}

/// e_n(x_1..x_m): squarefree monomials of degree n.
pub fn e_poly(n: u32, m: usize) -> MultiPoly {
    let names = x_names(m);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut p = MultiPoly::zero(&refs);
    if n as usize > m {
        return p;
    }
    let mut combo: Vec<usize> = (0..n as usize).collect();
    loop {
        let mut exps = vec![0u16; m];
        for &i in &combo {
            exps[i] = 1;
        }
        p.add_monomial(exps, 1);
        // next combination
        let k = n as usize;
        if k == 0 {
            break;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return p;
            }
            i -= 1;
            if combo[i] < m - (k - i) {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
    p
}

/// H(cz) = sum h_n(x) c^n z^n where c is a monomial in the series
/// variables ("t", "r", or 1 for plain H(z)).
pub fn h_series(cap: usize, m: usize, scale_var: Option<&str>) -> ZSeries {
    let coeffs = (0..=cap)
        .map(|n| {
            let h = h_poly(n as u32, m);
            match scale_var {
                None => h,
                Some(v) => h.mul(&MultiPoly::monomial_in(&[v], &[(v, n as u16)], 1)),
            }
        })
        .collect();
    ZSeries { coeffs }
}

/// The series sum_n (sum_{j,k} Q_{n,j,k} t^j r^k) z^n through z^cap,
/// built permutation by permutation.
pub fn eulerian_qsym_series(cap: usize, m: usize) -> Result<ZSeries> {
    let mut coeffs = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut total = MultiPoly::zero(&["t", "r"]);
        if n == 0 {
            total = total.add(&MultiPoly::one(&["t", "r"]));
        } else {
            for sigma in Permutation::all(n) {
                let st = stats(&sigma);
                let f = f_qsym(&exd_set(&sigma), n as u32, m)?;
                let marker = MultiPoly::monomial_in(
                    &["t", "r"],
                    &[("t", st.exc as u16), ("r", st.fix as u16)],
                    1,
                );
                total = total.add(&f.poly.mul(&marker));
            }
        }
        coeffs.push(total);
    }
    Ok(ZSeries { coeffs })
}

/// Outcome of one identity check, with the first failing coefficient as
/// a witness when it fails.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

/// Named series identities, all checked cross-multiplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesIdentity {
    /// sum Q_{n,j,k} t^j r^k z^n  *  (H(zt) - t H(z))  =  (1-t) H(rz)
    QfixQuotient,
    /// sum Q_{n,j,k} t^j r^k z^n  *  (1 - sum_{n>=2} t [n-1]_t h_n z^n)  =  H(rz)
    QfixGeometric,
    /// sum_n (sum_j omega Q_{n,j,0}) z^n  *  (1 - sum_{i>=2} (i-1) e_i z^i)  =  1
    DerangementSeries,
}

impl SeriesIdentity {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "qfix-quotient" => Some(SeriesIdentity::QfixQuotient),
            "qfix-geometric" => Some(SeriesIdentity::QfixGeometric),
            "derangement-series" => Some(SeriesIdentity::DerangementSeries),
            _ => None,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            SeriesIdentity::QfixQuotient => "qfix-quotient",
            SeriesIdentity::QfixGeometric => "qfix-geometric",
            SeriesIdentity::DerangementSeries => "derangement-series",
        }
    }
}

/// Verify a series identity as truncated formal series in z with
/// polynomial coefficients, through z^degree_cap in m variables.
pub fn series_identity_check(
    identity: SeriesIdentity,
    degree_cap: usize,
    m: usize,
) -> Result<IdentityReport> {
    if m < degree_cap {
        return Err(crate::error::Error::TooFewVariables {
            needed: degree_cap,
            degree: degree_cap,
            got: m,
        });
    }
    let cap = degree_cap;
    let diff = match identity {
        SeriesIdentity::QfixQuotient => {
            let lhs = eulerian_qsym_series(cap, m)?;
            // H(zt) - t H(z)
            let hzt = h_series(cap, m, Some("t"));
            let thz = {
                let h = h_series(cap, m, None);
                let t = MultiPoly::var(&["t"], "t");
                ZSeries {
                    coeffs: h.coeffs.iter().map(|c| c.mul(&t)).collect(),
                }
            };
            let denom = hzt.sub(&thz);
            // (1 - t) H(rz)
            let hrz = h_series(cap, m, Some("r"));
            let one_minus_t = MultiPoly::one(&["t"]).sub(&MultiPoly::var(&["t"], "t"));
            let num = ZSeries {
                coeffs: hrz.coeffs.iter().map(|c| c.mul(&one_minus_t)).collect(),
            };
            lhs.mul(&denom).sub(&num)
        }
        SeriesIdentity::QfixGeometric => {
            let lhs = eulerian_qsym_series(cap, m)?;
            // 1 - sum_{n >= 2} t [n-1]_t h_n z^n
            let mut denom_coeffs = vec![MultiPoly::zero(&["t"]); cap + 1];
            denom_coeffs[0] = MultiPoly::one(&["t"]);
            for n in 2..=cap {
                let mut t_part = MultiPoly::zero(&["t"]);
                for e in 1..n {
                    t_part.add_monomial(vec![e as u16], 1); // t [n-1]_t = t + ... + t^{n-1}
                }
                denom_coeffs[n] = h_poly(n as u32, m).mul(&t_part).neg();
            }
            let denom = ZSeries {
                coeffs: denom_coeffs,
            };
            let num = h_series(cap, m, Some("r"));
            lhs.mul(&denom).sub(&num)
        }
        SeriesIdentity::DerangementSeries => {
            // LHS coefficients: sum_j omega Q_{n,j,0} expanded in m vars
            let mut lhs_coeffs = Vec::with_capacity(cap + 1);
            for n in 0..=cap {
                if n == 0 {
                    lhs_coeffs.push(MultiPoly::one(&["t"]).substitute("t", 1));
                    continue;
                }
                let mut acc = crate::symfunc::SymFunc::zero(n as u32);
                for j in 0..n as u32 {
                    let q = eulerian_qsym_fix(n as u32, j, 0, m)?;
                    acc = acc.add(&to_monomial_basis(&q)?);
                }
                lhs_coeffs.push(acc.omega().to_polynomial(m)?);
            }
            let lhs = ZSeries { coeffs: lhs_coeffs };
            // 1 - sum_{i>=2} (i-1) e_i z^i
            let mut denom_coeffs = vec![MultiPoly::zero(&["t"]).substitute("t", 1); cap + 1];
            denom_coeffs[0] = MultiPoly::one(&["t"]).substitute("t", 1);
            for i in 2..=cap {
                denom_coeffs[i] = e_poly(i as u32, m).scale(i as i128 - 1).neg();
            }
            let denom = ZSeries {
                coeffs: denom_coeffs,
            };
            let mut num_coeffs = vec![MultiPoly::zero(&["t"]).substitute("t", 1); cap + 1];
            num_coeffs[0] = MultiPoly::one(&["t"]).substitute("t", 1);
            let num = ZSeries { coeffs: num_coeffs };
            lhs.mul(&denom).sub(&num)
        }
    };
    match diff.first_nonzero() {
        None => Ok(IdentityReport {
            id: identity.id().to_string(),
            pass: true,
            detail: format!("holds through z^{cap} in {m} variables"),
        }),
        Some((n, poly)) => Ok(IdentityReport {
            id: identity.id().to_string(),
            pass: false,
            detail: format!("first failing coefficient at z^{n}: {poly}"),
        }),
    }
}

// ----- q-divided-power series (coefficients of z^n / [n]_q!) -----

/// A series sum_n f_n z^n / [n]_q! with polynomial coefficients; the
/// product rule uses Gaussian binomials, keeping everything polynomial.
#[derive(Clone)]
pub struct QDividedSeries {
    pub coeffs: Vec<MultiPoly>,
}

impl QDividedSeries {
    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &QDividedSeries) -> QDividedSeries {
        let cap = self.cap().min(other.cap());
        let mut coeffs = vec![MultiPoly::zero(&["q"]); cap + 1];
        for n in 0..=cap {
            let mut acc = MultiPoly::zero(&["q"]);
            for a in 0..=n {
                if self.coeffs[a].is_zero() || other.coeffs[n - a].is_zero() {
                    continue;
                }
                let gb = gaussian_binomial(n, a);
                acc = acc.add(&gb.mul(&self.coeffs[a]).mul(&other.coeffs[n - a]));
            }
            coeffs[n] = acc;
        }
        QDividedSeries { coeffs }
    }

    pub fn sub(&self, other: &QDividedSeries) -> QDividedSeries {
        let cap = self.cap().min(other.cap());
        QDividedSeries {
            coeffs: (0..=cap)
                .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
                .collect(),
        }
    }

    pub fn first_nonzero(&self) -> Option<(usize, &MultiPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
    }
}

/// The fixed-point exponential identity, verified cross-multiplied in
/// the substituted variable u = t/q (so everything is polynomial):
///
///   sum_n A_n^{comaj,exc,fix}(q, qu, r) z^n/[n]_q!
///     * (Exp_q(uz) - u Exp_q(z))  =  (1-u) Exp_q(rz),
///
/// where Exp_q(cz) has divided coefficients q^binom(n,2) c^n.
pub fn fixed_point_exp_identity(degree_cap: usize) -> IdentityReport {
    let vars: &[&str] = &["q", "u", "r"];
    let cap = degree_cap;
    let mut lhs_coeffs = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut acc = MultiPoly::zero(vars);
        for sigma in Permutation::all(n) {
            let st = stats(&sigma);
            acc.add_monomial(
                vec![(st.comaj + st.exc) as u16, st.exc as u16, st.fix as u16],
                1,
            );
        }
        lhs_coeffs.push(acc);
    }
    let lhs = QDividedSeries { coeffs: lhs_coeffs };

    let binom2 = |n: usize| (n * n.saturating_sub(1) / 2) as u16;
    let exp_u_minus_u_exp: QDividedSeries = QDividedSeries {
        coeffs: (0..=cap)
            .map(|n| {
                // q^binom(n,2) (u^n - u)
                let mut c = MultiPoly::zero(vars);
                c.add_monomial(vec![binom2(n), n as u16, 0], 1);
                c.add_monomial(vec![binom2(n), 1, 0], -1);
                c
            })
            .collect(),
    };
    let rhs = QDividedSeries {
        coeffs: (0..=cap)
            .map(|n| {
                // (1 - u) q^binom(n,2) r^n
                let mut c = MultiPoly::zero(vars);
                c.add_monomial(vec![binom2(n), 0, n as u16], 1);
                c.add_monomial(vec![binom2(n), 1, n as u16], -1);
                c
            })
            .collect(),
    };
    let diff = lhs.mul(&exp_u_minus_u_exp).sub(&rhs);
    match diff.first_nonzero() {
        None => IdentityReport {
            id: "fixed-point-exp".to_string(),
            pass: true,
            detail: format!("holds through z^{cap} (t substituted as q*u)"),
        },
        Some((n, poly)) => IdentityReport {
            id: "fixed-point-exp".to_string(),
            pass: false,
            detail: format!("first failing divided coefficient at z^{n}: {poly}"),
        },
    }
}

/// Stable principal specialization of F_{Exd(sigma),n}: substituting
/// x_i = q^{i-1} into the m-variable expansion agrees with
/// q^{maj - exc} / (q;q)_n through degree m-1, verified in the
/// cross-multiplied form F^(m)(q) * (q;q)_n = q^{maj-exc} (mod q^m).
pub fn principal_specialization_check(n: u32, m: usize) -> Result<IdentityReport> {
    for sigma in Permutation::all(n as usize) {
        let st = stats(&sigma);
        let f = f_qsym(&exd_set(&sigma), n, m)?;
        // substitute x_i = q^{i-1}
        let mut specialized = MultiPoly::zero(&["q"]);
        for (e, c) in f.poly.terms() {
            let deg: u16 = e
                .iter()
                .enumerate()
                .map(|(i, &exp)| exp * i as u16)
                .sum();
            specialized.add_monomial(vec![deg], c);
        }
        // (q;q)_n = prod_{i=1..n} (1 - q^i)
        let mut pochhammer = MultiPoly::one(&["q"]);
        for i in 1..=n as u16 {
            let mut factor = MultiPoly::one(&["q"]);
            factor.add_monomial(vec![i], -1);
            pochhammer = pochhammer.mul(&factor);
        }
        let lhs = specialized.mul(&pochhammer).truncate("q", m as u16 - 1);
        let expected = MultiPoly::monomial_in(&["q"], &[("q", (st.maj - st.exc) as u16)], 1)
            .truncate("q", m as u16 - 1);
        if lhs != expected {
            return Ok(IdentityReport {
                id: "principal-specialization".to_string(),
                pass: false,
                detail: format!("fails for sigma = {sigma}: got {lhs}, expected {expected}"),
            });
        }
    }
    Ok(IdentityReport {
        id: "principal-specialization".to_string(),
        pass: true,
        detail: format!("holds for all of S_{n} through q^{}", m - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_and_e_polys() {
        assert_eq!(h_poly(2, 2).num_terms(), 3);
        assert_eq!(e_poly(2, 3).num_terms(), 3);
        assert_eq!(e_poly(4, 3).num_terms(), 0);
        assert_eq!(e_poly(0, 3).num_terms(), 1);
    }

    #[test]
    fn quotient_identity_small() {
        let r = series_identity_check(SeriesIdentity::QfixQuotient, 3, 3).unwrap();
        assert!(r.pass, "{}", r.detail);
    }

    #[test]
    fn geometric_identity_small() {
        let r = series_identity_check(SeriesIdentity::QfixGeometric, 3, 3).unwrap();
        assert!(r.pass, "{}", r.detail);
    }

    #[test]
    fn derangement_series_small() {
        let r = series_identity_check(SeriesIdentity::DerangementSeries, 3, 3).unwrap();
        assert!(r.pass, "{}", r.detail);
    }

    #[test]
    fn fixed_point_exp_small() {
        let r = fixed_point_exp_identity(4);
        assert!(r.pass, "{}", r.detail);
    }

    #[test]
    fn principal_specialization_small() {
        for n in 1..=4u32 {
            let r = principal_specialization_check(n, 2 * n as usize).unwrap();
            assert!(r.pass, "{}", r.detail);
        }
    }

    #[test]
    fn forced_coefficient_of_quotient_identity() {
        // the z^n t^0 r^n coefficient of the Eulerian series is h_n
        let s = eulerian_qsym_series(3, 3).unwrap();
        let c3 = &s.coeffs[3];
        let pos = |name: &str| c3.vars().iter().position(|v| v == name).unwrap();
        let h3 = h_poly(3, 3);
        for (e, c) in h3.terms() {
            let mut full = vec![0u16; c3.vars().len()];
            for (i, &exp) in e.iter().enumerate() {
                full[pos(&format!("x{}", i + 1))] = exp;
            }
            full[pos("r")] = 3;
            assert_eq!(c3.coeff(&full), c);
        }
    }
}
