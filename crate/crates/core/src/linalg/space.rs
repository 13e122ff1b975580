//! Spaces with named ordered bases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Space {
    pub label: String,
    pub basis: Vec<String>,
}

impl Space {
    pub fn new(label: impl Into<String>, basis: Vec<String>) -> Result<Space> {
        let label = label.into();
        let mut seen = std::collections::BTreeSet::new();
        for b in &basis {
            if !seen.insert(b) {
                return Err(Error::Parse(format!("space {label}: duplicate basis name {b:?}")));
            }
        }
        Ok(Space { label, basis })
    }

    /// A space with basis names `prefix0, prefix1, ...`.
    pub fn numbered(label: impl Into<String>, prefix: &str, dim: usize) -> Space {
        Space {
            label: label.into(),
            basis: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Tensor product with basis names `(u,v)` in row-major order. Nested tuple
/// names are flattened, so the operation is strictly associative on names.
pub fn tensor_space(u: &Space, v: &Space) -> Space {
    let strip = |s: &str| -> String {
        if s.starts_with('(') && s.ends_with(')') {
            s[1..s.len() - 1].to_string()
        } else {
            s.to_string()
        }
    };
    let basis = u
        .basis
        .iter()
        .flat_map(|a| v.basis.iter().map(move |b| format!("({},{})", strip(a), strip(b))))
        .collect();
    Space {
        label: format!("{}⊗{}", u.label, v.label),
        basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(names: &[&str]) -> Space {
        Space::new("S", names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn row_major_names() {
        let t = tensor_space(&sp(&["a", "b"]), &sp(&["c", "d"]));
        assert_eq!(t.basis, vec!["(a,c)", "(a,d)", "(b,c)", "(b,d)"]);
        assert_eq!(tensor_space(&sp(&["x"]), &sp(&["p", "q", "r"])).dim(), 3);
    }

    #[test]
    fn associative_after_flattening() {
        let (a, b, c) = (sp(&["a", "b"]), sp(&["c"]), sp(&["d", "e"]));
        let left = tensor_space(&tensor_space(&a, &b), &c);
        let right = tensor_space(&a, &tensor_space(&b, &c));
        assert_eq!(left.basis, right.basis);
        assert_eq!(left.basis[1], "(a,c,e)");
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Space::new("S", vec!["a".into(), "a".into()]).is_err());
    }
}
