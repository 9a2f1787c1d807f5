//! Irreducible characters of symmetric groups via the Murnaghan-Nakayama
//! rule, computed on demand through beta-numbers (first-column hook
//! lengths): removing a border strip of length k from lambda corresponds
//! to replacing a beta-number b by b - k, with sign given by the number
//! of beta-numbers jumped over.

use std::collections::{BTreeMap, HashMap};

use crate::partition::{partitions_of, Partition};

/// A class function on S_n: one integer per cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: u32,
    pub values: BTreeMap<Partition, i64>,
}

impl ClassFunction {
    pub fn new(n: u32, values: BTreeMap<Partition, i64>) -> Self {
        debug_assert!(values.keys().all(|p| p.n() == n));
        ClassFunction { n, values }
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        *self.values.get(lambda).unwrap_or(&0)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            *values.entry(k.clone()).or_insert(0) += v;
        }
        ClassFunction { n: self.n, values }
    }

    pub fn scale(&self, c: i64) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn dimension(&self) -> i64 {
        self.get(&Partition::new(vec![1; self.n as usize]))
    }
}

pub struct CharacterTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable {
            memo: HashMap::new(),
        }
    }

    /// chi^lambda(mu), both partitions of the same n.
    pub fn chi(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        debug_assert_eq!(lambda.n(), mu.n());
        self.chi_parts(lambda.parts().to_vec(), mu.parts().to_vec())
    }

    fn chi_parts(&mut self, lambda: Vec<u32>, mu: Vec<u32>) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(lambda.clone(), mu.clone())) {
            return v;
        }
        let k = mu[0];
        let rest: Vec<u32> = mu[1..].to_vec();
        // beta numbers: lambda_i + (len - i) for i = 1..=len, distinct
        let len = lambda.len() as u32;
        let betas: Vec<u32> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (len - 1 - i as u32))
            .collect();
        let mut total = 0i64;
        for (pos, &b) in betas.iter().enumerate() {
            if b < k {
                continue;
            }
            let nb = b - k;
            if betas.contains(&nb) {
                continue;
            }
            // strip height = number of betas strictly between nb and b
            let jumped = betas.iter().filter(|&&x| x > nb && x < b).count();
            let sign = if jumped % 2 == 0 { 1 } else { -1 };
            let mut new_betas: Vec<u32> = betas.clone();
            new_betas[pos] = nb;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            // convert back to a partition
            let m = new_betas.len() as u32;
            let new_lambda: Vec<u32> = new_betas
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (m - 1 - i as u32))
                .filter(|&p| p > 0)
                .collect();
            total += sign * self.chi_parts(new_lambda, rest.clone());
        }
        self.memo.insert((lambda, mu), total);
        total
    }

    /// The full character table of S_n as a map lambda -> class function.
    pub fn table(&mut self, n: u32) -> BTreeMap<Partition, ClassFunction> {
        let parts = partitions_of(n);
        let mut out = BTreeMap::new();
        for lambda in &parts {
            let mut values = BTreeMap::new();
            for mu in &parts {
                values.insert(mu.clone(), self.chi(lambda, mu));
            }
            out.insert(lambda.clone(), ClassFunction::new(n, values));
        }
        out
    }
}

impl Default for CharacterTable {
    fn default() -> Self {
        Self::new()
    }
}

/// The trivial character of S_n.
pub fn trivial_character(n: u32) -> ClassFunction {
    let values = partitions_of(n).into_iter().map(|p| (p, 1)).collect();
    ClassFunction::new(n, values)
}

/// The sign character of S_n: (-1)^{n - number of cycles}.
pub fn sign_character(n: u32) -> ClassFunction {
    let values = partitions_of(n)
        .into_iter()
        .map(|p| {
            let sign = if (p.n() as usize - p.len()).is_multiple_of(2) {
                1
            } else {
                -1
            };
            (p, sign)
        })
        .collect();
    ClassFunction::new(n, values)
}

/// The regular character: n! at the identity class, 0 elsewhere.
pub fn regular_character(n: u32) -> ClassFunction {
    let mut values: BTreeMap<Partition, i64> =
        partitions_of(n).into_iter().map(|p| (p, 0)).collect();
    values.insert(
        Partition::new(vec![1; n as usize]),
        crate::poly::factorial(n as u64) as i64,
    );
    ClassFunction::new(n, values)
}

/// Pointwise product of class functions (character of the tensor
/// product).
pub fn tensor(a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
    assert_eq!(a.n, b.n);
    let values = a
        .values
        .iter()
        .map(|(k, v)| (k.clone(), v * b.get(k)))
        .collect();
    ClassFunction::new(a.n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_character_table() {
        let mut ct = CharacterTable::new();
        let l3 = Partition::new(vec![3]);
        let l21 = Partition::new(vec![2, 1]);
        let l111 = Partition::new(vec![1, 1, 1]);
        // trivial
        assert_eq!(ct.chi(&l3, &l111), 1);
        assert_eq!(ct.chi(&l3, &l21), 1);
        assert_eq!(ct.chi(&l3, &l3), 1);
        // standard
        assert_eq!(ct.chi(&l21, &l111), 2);
        assert_eq!(ct.chi(&l21, &l21), 0);
        assert_eq!(ct.chi(&l21, &l3), -1);
        // sign
        assert_eq!(ct.chi(&l111, &l111), 1);
        assert_eq!(ct.chi(&l111, &l21), -1);
        assert_eq!(ct.chi(&l111, &l3), 1);
    }

    #[test]
    fn dimensions_sum_of_squares() {
        let mut ct = CharacterTable::new();
        for n in 1..=8u32 {
            let id = Partition::new(vec![1; n as usize]);
            let total: i64 = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = ct.chi(l, &id);
                    d * d
                })
                .sum();
            assert_eq!(total, crate::poly::factorial(n as u64) as i64, "n={n}");
        }
    }

    #[test]
    fn orthogonality_of_rows() {
        let mut ct = CharacterTable::new();
        let n = 5u32;
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let inner: i64 = parts
                    .iter()
                    .map(|mu| ct.chi(a, mu) * ct.chi(b, mu) * mu.class_size() as i64)
                    .sum();
                let expected = if a == b {
                    crate::poly::factorial(n as u64) as i64
                } else {
                    0
                };
                assert_eq!(inner, expected, "{a} {b}");
            }
        }
    }
}
