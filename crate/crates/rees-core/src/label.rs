//! Element labels for the poset families in the catalog and everything
//! built from them. Labels carry a canonical total order so that poset
//! construction is deterministic: rebuilding from the same inputs yields
//! the identical element indexing.

use std::fmt;

use crate::gf::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Adjoined minimum.
    Bottom,
    /// An integer atom (chain elements, generic points).
    Int(i64),
    /// A subset of [n] as a bitmask (bit i-1 = element i).
    Set(u32),
    /// A face of a cross-polytope: disjoint masks of unbarred and barred
    /// vertices (bit i-1 = vertex i resp. vertex i-bar).
    SignedSet { plus: u32, minus: u32 },
    /// A subspace of GF(q)^n in canonical RREF form.
    Subspace(Subspace),
    /// A node of a rooted tree, identified by its path from the root.
    Node(Vec<u8>),
    /// An arbitrary opaque label (used when loading posets from files).
    Text(String),
    /// A pair, used for Rees-product elements; ordering of the underlying
    /// posets is not implied.
    Pair(Box<Label>, Box<Label>),
    /// Adjoined maximum.
    Top,
}

impl Label {
    pub fn set_from_iter<I: IntoIterator<Item = u32>>(items: I) -> Label {
        let mut mask = 0u32;
        for i in items {
            assert!((1..=32).contains(&i), "set elements must be in 1..=32");
            mask |= 1 << (i - 1);
        }
        Label::Set(mask)
    }

    pub fn pair(a: Label, b: Label) -> Label {
        Label::Pair(Box::new(a), Box::new(b))
    }
}

fn write_mask(f: &mut fmt::Formatter<'_>, mask: u32, bar: bool, mut first: bool) -> fmt::Result {
    for i in 1..=32 {
        if mask & (1 << (i - 1)) != 0 {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if bar {
                write!(f, "-{i}")?;
            } else {
                write!(f, "{i}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bottom => write!(f, "bot"),
            Label::Top => write!(f, "top"),
            Label::Int(k) => write!(f, "{k}"),
            Label::Set(mask) => {
                write!(f, "{{")?;
                write_mask(f, *mask, false, true)?;
                write!(f, "}}")
            }
            Label::SignedSet { plus, minus } => {
                write!(f, "{{")?;
                write_mask(f, *plus, false, true)?;
                write_mask(f, *minus, true, *plus == 0)?;
                write!(f, "}}")
            }
            Label::Subspace(s) => {
                write!(f, "<")?;
                for (i, row) in s.rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    for c in row {
                        write!(f, "{c}")?;
                    }
                }
                write!(f, ">")
            }
            Label::Node(path) => {
                write!(f, "r")?;
                for d in path {
                    write!(f, ".{d}")?;
                }
                Ok(())
            }
            Label::Text(s) => write!(f, "{s}"),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Label::set_from_iter([1, 3]).to_string(), "{1,3}");
        assert_eq!(
            Label::SignedSet { plus: 0b1, minus: 0b10 }.to_string(),
            "{1,-2}"
        );
        assert_eq!(
            Label::pair(Label::set_from_iter([2]), Label::Int(0)).to_string(),
            "({2},0)"
        );
        assert_eq!(Label::Node(vec![0, 2]).to_string(), "r.0.2");
    }

    #[test]
    fn ordering_is_total_and_stable() {
        let mut labels = vec![
            Label::Top,
            Label::Int(3),
            Label::Int(-1),
            Label::Bottom,
            Label::set_from_iter([2]),
        ];
        labels.sort();
        let again = {
            let mut l = labels.clone();
            l.sort();
            l
        };
        assert_eq!(labels, again);
        assert_eq!(labels[0], Label::Bottom);
        assert_eq!(*labels.last().unwrap(), Label::Top);
    }
}
