//! Input loading: catalog names, structure-constant files, table files,
//! element and subspace literals.

use std::path::Path;
use std::sync::Arc;

use exact_linalg::{ratio, Scalar};
use lts_core::{catalog, SubspaceBasis, TernarySystem};
use nucleus_lab::FinAlgebra;
use star_uea::{EnvelopeSession, UVElement};

use crate::SystemSource;

pub fn load_system(source: &SystemSource) -> Result<(String, TernarySystem), String> {
    match (&source.system, &source.file) {
        (Some(name), None) => {
            let system = catalog::by_name(name).map_err(|e| e.to_string())?;
            Ok((name.clone(), system))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let system = TernarySystem::from_json_str(&text).map_err(|e| e.to_string())?;
            Ok((path.display().to_string(), system))
        }
        _ => Err("provide exactly one of --system or --file".to_string()),
    }
}

pub fn load_table(path: &Path) -> Result<FinAlgebra, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    FinAlgebra::from_json_str(&text).map_err(|e| e.to_string())
}

/// Element literal: `[[multi_index, num, den], ...]`, for instance
/// `[[[0,1], 1, 2]]` for half the `e0 e1` monomial.
pub fn parse_element(session: &Arc<EnvelopeSession>, text: &str) -> Result<UVElement, String> {
    let raw: Vec<(Vec<usize>, i64, i64)> =
        serde_json::from_str(text).map_err(|e| format!("bad element literal: {e}"))?;
    let mut out = session.uv_zero();
    for (mut key, num, den) in raw {
        if den == 0 {
            return Err("bad element literal: zero denominator".to_string());
        }
        if key.iter().any(|&i| i >= session.dim_v()) {
            return Err("bad element literal: basis index out of range".to_string());
        }
        key.sort_unstable();
        out = out.add(&session.uv_monomial(&key).scale(&ratio(num, den)));
    }
    Ok(out)
}

/// Subspace literal: an array of coordinate vectors whose entries are
/// integers or `[num, den]` pairs.
pub fn parse_subspace(text: &str, ambient: usize) -> Result<SubspaceBasis, String> {
    let raw: Vec<Vec<serde_json::Value>> =
        serde_json::from_str(text).map_err(|e| format!("bad subspace literal: {e}"))?;
    let mut vectors = Vec::new();
    for entry in raw {
        if entry.len() != ambient {
            return Err(format!(
                "subspace vector has {} entries, expected {ambient}",
                entry.len()
            ));
        }
        let mut vector: Vec<Scalar> = Vec::with_capacity(ambient);
        for value in entry {
            let scalar = match &value {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(exact_linalg::int)
                    .ok_or("bad subspace entry")?,
                serde_json::Value::Array(pair) if pair.len() == 2 => {
                    match (pair[0].as_i64(), pair[1].as_i64()) {
                        (Some(num), Some(den)) if den != 0 => ratio(num, den),
                        _ => return Err("bad subspace fraction".to_string()),
                    }
                }
                _ => return Err("bad subspace entry".to_string()),
            };
            vector.push(scalar);
        }
        vectors.push(vector);
    }
    Ok(SubspaceBasis::from_spanning(ambient, vectors))
}
