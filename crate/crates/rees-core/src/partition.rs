//! Integer partitions: the index set for monomial symmetric functions,
//! power sums, and symmetric-group cycle types.

use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The weight |lambda| = sum of parts.
    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a
    /// permutation of cycle type lambda.
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut mult = 0u64;
            while i < self.0.len() && self.0[i] == part {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= part as u64;
            }
            z *= crate::poly::factorial(mult);
        }
        z
    }

    pub fn class_size(&self) -> u64 {
        crate::poly::factorial(self.n() as u64) / self.z()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of n in reverse-lexicographic order, starting at [n].
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn go(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    go(n, n.max(1), &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts = [1usize, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), c, "p({n})");
        }
    }

    #[test]
    fn z_and_class_sizes() {
        // S_3: classes [1,1,1] (1 elt), [2,1] (3), [3] (2)
        assert_eq!(Partition::new(vec![1, 1, 1]).class_size(), 1);
        assert_eq!(Partition::new(vec![2, 1]).class_size(), 3);
        assert_eq!(Partition::new(vec![3]).class_size(), 2);
        let total: u64 = partitions_of(5).iter().map(|p| p.class_size()).sum();
        assert_eq!(total, 120);
    }

    #[test]
    fn display_form() {
        assert_eq!(Partition::new(vec![1, 3]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }
}
