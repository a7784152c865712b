//! JSON encodings of the core types. Exact numbers are written as strings.

use serde_json::{json, Map, Value};
use vertexcalc_core::blocks::{BlockId, ParabolicType};
use vertexcalc_core::fock::{DecompositionMatrix, LaurentPoly};
use vertexcalc_core::hecke::vertex::VertexScan;
use vertexcalc_core::hecke::Cyclotomic;
use vertexcalc_core::Partition;

pub fn partition(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

pub fn parabolic(t: &ParabolicType) -> Value {
    Value::from(t.parts().to_vec())
}

pub fn block(b: &BlockId) -> Value {
    json!({ "core": partition(&b.core), "weight": b.weight })
}

/// Coefficients in the power basis of `ℚ(ζ_e)`, as `"p"` or `"p/q"`.
pub fn cyclotomic(c: &Cyclotomic) -> Value {
    Value::from(c.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// `{"exp": "coeff"}` with exponents of `v` as keys.
pub fn laurent(p: &LaurentPoly) -> Value {
    let mut m = Map::new();
    for (k, c) in p.terms() {
        m.insert(k.to_string(), Value::from(c.to_string()));
    }
    Value::Object(m)
}

pub fn decomposition_matrix(d: &DecompositionMatrix) -> Value {
    json!({
        "n": d.n,
        "e": d.e,
        "rows": d.rows.iter().map(partition).collect::<Vec<_>>(),
        "cols": d.cols.iter().map(partition).collect::<Vec<_>>(),
        "entries": d.entries.iter().map(|row| row.iter().map(laurent).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn integer_matrix(d: &DecompositionMatrix, at_one: &[Vec<i64>]) -> Value {
    json!({
        "n": d.n,
        "e": d.e,
        "rows": d.rows.iter().map(partition).collect::<Vec<_>>(),
        "cols": d.cols.iter().map(partition).collect::<Vec<_>>(),
        "entries": at_one,
    })
}

/// The per-module vertex scan record.
pub fn vertex_scan(n: usize, e: usize, label: &str, dim: usize, b: Option<&BlockId>, scan: &VertexScan) -> Value {
    json!({
        "n": n,
        "e": e,
        "module": { "label": label, "dim": dim, "block": b.map(block) },
        "vertex": parabolic(&scan.vertex),
        "tested_parabolics": scan
            .tested
            .iter()
            .map(|(t, ok)| json!({ "type": parabolic(t), "summand": ok }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_keys_are_exponents() {
        let p = LaurentPoly::monomial(1, 1).add(&LaurentPoly::one());
        assert_eq!(laurent(&p), json!({"0": "1", "1": "1"}));
    }

    #[test]
    fn cyclotomic_coefficients_are_strings() {
        assert_eq!(cyclotomic(&Cyclotomic::zeta(3)), json!(["0", "1"]));
        assert_eq!(cyclotomic(&Cyclotomic::from_int(2, -1)), json!(["-1"]));
    }
}
