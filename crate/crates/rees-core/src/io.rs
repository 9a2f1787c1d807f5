//! File formats: JSON poset serialization, DOT export of Hasse diagrams,
//! and the JSON shapes for polynomials and symmetric functions.

use num::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::poly::MultiPoly;
use crate::poset::Poset;
use crate::symfunc::SymFunc;

#[derive(Serialize, Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    covers: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ranks: Option<Vec<u32>>,
}

pub fn poset_to_json(p: &Poset) -> String {
    let file = PosetFile {
        elements: p.labels().iter().map(|l| l.to_string()).collect(),
        covers: p.covers().to_vec(),
        ranks: p.ranks().map(|r| r.to_vec()),
    };
    serde_json::to_string_pretty(&file).expect("poset serializes")
}

/// Load a poset from its JSON form. Labels are treated as opaque text;
/// covers are validated exactly as in direct construction.
pub fn poset_from_json(data: &str) -> Result<Poset> {
    let file: PosetFile =
        serde_json::from_str(data).map_err(|e| Error::InvalidPosetFile(e.to_string()))?;
    let labels: Vec<Label> = file.elements.into_iter().map(Label::Text).collect();
    Poset::from_cover_indices(labels, file.covers)
}

/// DOT rendering of the Hasse diagram, one layer per rank (or height
/// when unranked).
pub fn poset_to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let level = |i: usize| p.rank(i).unwrap_or_else(|| p.height(i));
    let max_level = (0..p.size()).map(level).max().unwrap_or(0);
    for l in 0..=max_level {
        let members: Vec<String> = (0..p.size())
            .filter(|&i| level(i) == l)
            .map(|i| format!("\"{}\"", p.label(i)))
            .collect();
        if !members.is_empty() {
            out.push_str(&format!("  {{ rank=same; {} }}\n", members.join("; ")));
        }
    }
    for &(a, b) in p.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            p.label(a as usize),
            p.label(b as usize)
        ));
    }
    out.push_str("}\n");
    out
}

/// Polynomial as a list of {"exponents": {var: e}, "coeff": "decimal"}.
pub fn poly_to_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let exps: serde_json::Map<String, Value> = p
                .vars()
                .iter()
                .zip(e)
                .filter(|&(_, &exp)| exp > 0)
                .map(|(v, &exp)| (v.clone(), json!(exp)))
                .collect();
            json!({"exponents": exps, "coeff": c.to_string()})
        })
        .collect();
    json!(terms)
}

/// SymFunc as {"degree": n, "basis": "m", "coeffs": {"[3,1]": "2"}}.
pub fn symfunc_to_json(f: &SymFunc) -> Value {
    symfunc_coeffs_json(f.degree(), "m", f.coeffs())
}

/// SymFunc re-expanded on a multiplicative basis ("m", "h", "e", "p").
pub fn symfunc_to_json_in_basis(f: &SymFunc, basis: &str) -> Result<Value> {
    let converted = match basis {
        "m" => return Ok(symfunc_to_json(f)),
        "h" => crate::symfunc::to_basis(f, crate::symfunc::Basis::H),
        "e" => crate::symfunc::to_basis(f, crate::symfunc::Basis::E),
        "p" => crate::symfunc::to_basis(f, crate::symfunc::Basis::P),
        other => return Err(Error::Invalid(format!("unknown basis {other}"))),
    };
    Ok(symfunc_coeffs_json(f.degree(), basis, &converted))
}

fn symfunc_coeffs_json(
    degree: u32,
    basis: &str,
    coeffs: &std::collections::BTreeMap<crate::partition::Partition, num::BigRational>,
) -> Value {
    let coeffs: serde_json::Map<String, Value> = coeffs
        .iter()
        .map(|(p, c)| {
            let rendered = if c.is_integer() {
                c.to_integer().to_i128().map_or_else(|| c.to_string(), |v| v.to_string())
            } else {
                c.to_string()
            };
            (p.to_string(), json!(rendered))
        })
        .collect();
    json!({"degree": degree, "basis": basis, "coeffs": coeffs})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::boolean_lattice;
    use crate::homology::mobius_invariant;

    #[test]
    fn poset_json_round_trip_preserves_structure() {
        let b3 = boolean_lattice(3);
        let text = poset_to_json(&b3);
        let loaded = poset_from_json(&text).unwrap();
        assert_eq!(loaded.size(), b3.size());
        assert_eq!(loaded.covers().len(), b3.covers().len());
        assert!(loaded.is_ranked());
        assert_eq!(
            mobius_invariant(&loaded).unwrap(),
            mobius_invariant(&b3).unwrap()
        );
    }

    #[test]
    fn dot_output_contains_layers_and_edges() {
        let dot = poset_to_dot(&boolean_lattice(2));
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("\"{}\" -> \"{1}\""));
    }

    #[test]
    fn poly_json_shape() {
        let p = crate::poly::gaussian_binomial(4, 2);
        let v = poly_to_json(&p);
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 5);
        assert!(arr.iter().any(|t| t["coeff"] == "2"));
    }

    #[test]
    fn symfunc_json_shape() {
        let v = symfunc_to_json(&SymFunc::h(2));
        assert_eq!(v["degree"], 2);
        assert_eq!(v["coeffs"]["[2]"], "1");
        assert_eq!(v["coeffs"]["[1,1]"], "1");
    }
}

#[cfg(test)]
mod golden_tests {
    use super::*;
    use crate::catalog::chain;

    /// Canonical element ordering makes serialized output byte-stable.
    #[test]
    fn golden_poset_json() {
        let expected = r#"{
  "elements": [
    "0",
    "1",
    "2"
  ],
  "covers": [
    [
      0,
      1
    ],
    [
      1,
      2
    ]
  ],
  "ranks": [
    0,
    1,
    2
  ]
}"#;
        assert_eq!(poset_to_json(&chain(3)), expected);
    }

    #[test]
    fn golden_dot() {
        let expected = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  \
{ rank=same; \"0\" }\n  { rank=same; \"1\" }\n  \"0\" -> \"1\";\n}\n";
        assert_eq!(poset_to_dot(&chain(2)), expected);
    }
}

#[cfg(test)]
mod loader_error_tests {
    use super::*;

    #[test]
    fn malformed_json_is_rejected() {
        assert!(matches!(
            poset_from_json("not json"),
            Err(Error::InvalidPosetFile(_))
        ));
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let data = r#"{"elements": ["a", "a"], "covers": []}"#;
        assert!(matches!(
            poset_from_json(data),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn out_of_range_covers_are_rejected() {
        let data = r#"{"elements": ["a"], "covers": [[0, 5]]}"#;
        assert!(poset_from_json(data).is_err());
    }

    #[test]
    fn transitively_implied_covers_are_rejected() {
        let data = r#"{"elements": ["a", "b", "c"], "covers": [[0,1],[1,2],[0,2]]}"#;
        assert!(matches!(
            poset_from_json(data),
            Err(Error::RedundantCover(_, _))
        ));
    }
}
