//! The JSON structure-constant format shared with the command line tool.
//!
//! ```json
//! {"dim": 2,
//!  "ternary": [[0,1,0, 0, 2,1], [0,1,1, 1, -2,1]],
//!  "binary":  [[0,1, 0, 1,2]],
//!  "names": ["e", "f"]}
//! ```
//!
//! Each ternary entry `[i,j,k, l, num, den]` contributes `num/den` to the
//! coefficient of `e_l` in `[e_i, e_j, e_k]`; binary entries are
//! `[i,j, l, num, den]`. Indices are 0-based and omitted entries are zero.

use exact_linalg::ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::system::TernarySystem;
use crate::LtsError;

#[derive(Debug, Serialize, Deserialize)]
pub struct SystemJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ternary: Vec<(usize, usize, usize, usize, i64, i64)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub binary: Vec<(usize, usize, usize, i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl TernarySystem {
    pub fn from_json_value(raw: SystemJson) -> Result<TernarySystem, LtsError> {
        let dim = raw.dim;
        let mut t = TernarySystem::new(dim);
        if let Some(names) = &raw.names {
            if names.len() != dim {
                return Err(LtsError::InvalidJson(format!(
                    "{} names for dimension {dim}",
                    names.len()
                )));
            }
            t = t.with_names(names.iter().map(String::as_str).collect());
        }
        for &(i, j, k, l, num, den) in &raw.ternary {
            if den == 0 {
                return Err(LtsError::InvalidJson("zero denominator".to_string()));
            }
            for index in [i, j, k, l] {
                if index >= dim {
                    return Err(LtsError::IndexOutOfRange { index, dim });
                }
            }
            let mut v = t.ternary_basis(i, j, k);
            v[l] += ratio(num, den);
            t.set_ternary(i, j, k, &v)?;
        }
        for &(i, j, l, num, den) in &raw.binary {
            if den == 0 {
                return Err(LtsError::InvalidJson("zero denominator".to_string()));
            }
            for index in [i, j, l] {
                if index >= dim {
                    return Err(LtsError::IndexOutOfRange { index, dim });
                }
            }
            let mut v = t.binary_basis(i, j);
            v[l] += ratio(num, den);
            t.set_binary(i, j, &v)?;
        }
        Ok(t)
    }

    pub fn from_json_str(s: &str) -> Result<TernarySystem, LtsError> {
        let raw: SystemJson =
            serde_json::from_str(s).map_err(|e| LtsError::InvalidJson(e.to_string()))?;
        TernarySystem::from_json_value(raw)
    }

    pub fn to_json_value(&self) -> SystemJson {
        let dim = self.dim();
        let mut ternary = Vec::new();
        let mut binary = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for (l, c) in self.ternary_basis(i, j, k).iter().enumerate() {
                        if !c.is_zero() {
                            ternary.push((i, j, k, l, to_i64(c.numer()), to_i64(c.denom())));
                        }
                    }
                }
                for (l, c) in self.binary_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        binary.push((i, j, l, to_i64(c.numer()), to_i64(c.denom())));
                    }
                }
            }
        }
        SystemJson {
            dim,
            ternary,
            binary,
            names: self.names().map(|ns| ns.to_vec()),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serialization cannot fail")
    }
}

fn to_i64(n: &num_bigint::BigInt) -> i64 {
    use num_traits::ToPrimitive;
    n.to_i64()
        .expect("structure constant too large for the JSON table format")
}
