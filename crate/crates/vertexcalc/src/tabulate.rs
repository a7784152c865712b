//! Block, cuspidal-support and predicted-vertex tables.

use serde_json::{json, Value};
use vertexcalc_core::blocks::{blocks, cuspidal_support, enumerate_block, predicted_vertex_of_block, predicted_vertex_set};
use vertexcalc_core::partition::{enumerate_partitions, wilcox_decompose};
use vertexcalc_core::Result;

use crate::json::{block, parabolic, partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    Blocks,
    Cuspidal,
    Vertices,
}

/// Rows of a table: a header and string cells, plus the JSON form.
pub struct Tabulation {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn label(p: &vertexcalc_core::Partition) -> String {
    join(p.parts())
}

pub fn tabulate(n: usize, e: usize, what: Table) -> Result<Tabulation> {
    match what {
        Table::Blocks => {
            let mut rows = Vec::new();
            let mut out = Vec::new();
            for b in blocks(n, e)? {
                let labels = enumerate_block(&b)?;
                let vertex = predicted_vertex_of_block(&b);
                for l in &labels {
                    rows.push(vec![label(&b.core), b.weight.to_string(), label(l), label_parabolic(&vertex)]);
                }
                out.push(json!({
                    "block": block(&b),
                    "labels": labels.iter().map(partition).collect::<Vec<_>>(),
                    "predicted_vertex": parabolic(&vertex),
                }));
            }
            Ok(Tabulation {
                header: vec!["core", "weight", "label", "predicted_vertex"],
                rows,
                json: json!({ "n": n, "e": e, "blocks": out }),
            })
        }
        Table::Cuspidal => {
            let mut rows = Vec::new();
            let mut out = Vec::new();
            for l in enumerate_partitions(n) {
                let w = wilcox_decompose(&l, e)?;
                let c = cuspidal_support(&l, e)?;
                rows.push(vec![label(&l), c.k.to_string(), c.depth.to_string(), label(&w.sigma), label(&w.nu)]);
                out.push(json!({
                    "label": partition(&l),
                    "k": c.k,
                    "depth": c.depth,
                    "sigma": partition(&w.sigma),
                    "nu": partition(&w.nu),
                    "support": parabolic(&c.parabolic(e)),
                }));
            }
            Ok(Tabulation {
                header: vec!["label", "k", "depth", "sigma", "nu"],
                rows,
                json: json!({ "n": n, "e": e, "labels": out }),
            })
        }
        Table::Vertices => {
            let set = predicted_vertex_set(n, e)?;
            let rows = set.iter().enumerate().map(|(k, t)| vec![k.to_string(), label_parabolic(t)]).collect();
            Ok(Tabulation {
                header: vec!["k", "vertex"],
                rows,
                json: json!({ "n": n, "e": e, "vertices": set.iter().map(parabolic).collect::<Vec<_>>() }),
            })
        }
    }
}

fn label_parabolic(t: &vertexcalc_core::blocks::ParabolicType) -> String {
    join(t.parts())
}

pub fn to_csv(t: &Tabulation) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header).expect("in-memory csv");
    for row in &t.rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_e2_is_a_single_block() {
        let t = tabulate(4, 2, Table::Blocks).unwrap();
        let bs = t.json["blocks"].as_array().unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0]["labels"].as_array().unwrap().len(), 5);
        assert_eq!(bs[0]["block"], json!({"core": [], "weight": 2}));
    }

    #[test]
    fn n3_e3_cuspidal() {
        let t = tabulate(3, 3, Table::Cuspidal).unwrap();
        let ks: Vec<(Value, Value)> =
            t.json["labels"].as_array().unwrap().iter().map(|x| (x["label"].clone(), x["k"].clone())).collect();
        assert_eq!(ks, vec![(json!([3]), json!(1)), (json!([2, 1]), json!(0)), (json!([1, 1, 1]), json!(0))]);
    }

    #[test]
    fn n5_e2_vertices_and_csv() {
        let t = tabulate(5, 2, Table::Vertices).unwrap();
        assert_eq!(t.json["vertices"], json!([[], [2], [2, 2]]));
        assert_eq!(to_csv(&t), "k,vertex\n0,\n1,2\n2,\"2,2\"\n");
    }
}
