//! Deterministic JSON, DOT and TSV renderings.

use serde::Serialize;
use serde_json::json;

use crate::silting::{SttiltPoset, VanishingTable, WeakOrderIsomorphism};
use crate::weak_order::{Permutation, WeakOrderLattice};
use crate::xi::XiIndex;

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// `{"order", "nodes": [[...length 0], [...length 1], ...], "edges"}`.
/// Edges refer to positions in the flattened node list.
pub fn lattice_json(lat: &WeakOrderLattice) -> String {
    let nodes = lat.nodes();
    let top = nodes.iter().map(|w| w.length()).max().unwrap_or(0);
    let mut by_len: Vec<Vec<Vec<u8>>> = vec![Vec::new(); top + 1];
    for w in nodes {
        by_len[w.length()].push(w.images().to_vec());
    }
    let mut edges = lat.edges();
    edges.sort_unstable();
    pretty(&json!({
        "order": lat.rank() + 1,
        "nodes": by_len,
        "edges": edges,
    }))
}

fn perm_label(images: &[u8]) -> String {
    images
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("")
}

pub fn lattice_dot(lat: &WeakOrderLattice) -> String {
    let nodes = lat.nodes();
    let mut out = String::from("digraph weak_order {\n  rankdir=BT;\n");
    let top = nodes.iter().map(|w| w.length()).max().unwrap_or(0);
    for l in 0..=top {
        let ids: Vec<String> = (0..nodes.len())
            .filter(|&k| nodes[k].length() == l)
            .map(|k| format!("n{k}"))
            .collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
    }
    for (k, w) in nodes.iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{}\"];\n", perm_label(w.images())));
    }
    let mut edges = lat.edges();
    edges.sort_unstable();
    for (a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

fn labels<'a>(
    poset: &SttiltPoset,
    lat: Option<&'a WeakOrderLattice>,
    rho: Option<&WeakOrderIsomorphism>,
) -> Vec<Option<&'a Permutation>> {
    let mut out = vec![None; poset.len()];
    if let (Some(lat), Some(rho)) = (lat, rho) {
        for (k, &img) in rho.image.iter().enumerate() {
            out[img] = Some(&lat.nodes()[k]);
        }
    }
    out
}

fn entries(x: &XiIndex) -> Vec<i64> {
    x.entries().iter().map(|&e| e as i64).collect()
}

/// `{"rank", "nodes": [[index, ...], ...], "edges", "labels"}`; edges are
/// `(smaller, larger)` covers and labels are one-line permutations or null.
pub fn poset_json(
    poset: &SttiltPoset,
    lat: Option<&WeakOrderLattice>,
    rho: Option<&WeakOrderIsomorphism>,
) -> String {
    let nodes: Vec<Vec<Vec<i64>>> = poset
        .nodes
        .iter()
        .map(|t| t.members().iter().map(entries).collect())
        .collect();
    let labels: Vec<Option<Vec<u8>>> = labels(poset, lat, rho)
        .into_iter()
        .map(|w| w.map(|w| w.images().to_vec()))
        .collect();
    let mut edges = poset.order.hasse_edges();
    edges.sort_unstable();
    pretty(&json!({
        "rank": poset.rank,
        "nodes": nodes,
        "edges": edges,
        "labels": labels,
    }))
}

/// Ranked by the length of the label when labels are given.
pub fn poset_dot(
    poset: &SttiltPoset,
    lat: Option<&WeakOrderLattice>,
    rho: Option<&WeakOrderIsomorphism>,
) -> String {
    let labels = labels(poset, lat, rho);
    let mut out = String::from("digraph sttilt {\n  rankdir=BT;\n");
    if labels.iter().all(Option::is_some) {
        let top = labels
            .iter()
            .flatten()
            .map(|w| w.length())
            .max()
            .unwrap_or(0);
        for l in 0..=top {
            let ids: Vec<String> = (0..labels.len())
                .filter(|&k| labels[k].is_some_and(|w| w.length() == l))
                .map(|k| format!("n{k}"))
                .collect();
            out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
        }
    }
    for (k, t) in poset.nodes.iter().enumerate() {
        let text = match labels[k] {
            Some(w) => format!("{}\\n{t}", perm_label(w.images())),
            None => t.to_string(),
        };
        out.push_str(&format!("  n{k} [label=\"{text}\"];\n"));
    }
    let mut edges = poset.order.hasse_edges();
    edges.sort_unstable();
    for (a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

/// One row per index: the subset, then the g-vector coordinates.
pub fn xi_tsv(xs: &[XiIndex]) -> String {
    let n = xs.first().map(|x| x.rank()).unwrap_or(0);
    let mut out = String::from("index");
    for k in 1..=n {
        out.push_str(&format!("\tg{k}"));
    }
    out.push('\n');
    for x in xs {
        out.push_str(&x.to_string());
        for g in x.g_vector().coords {
            out.push_str(&format!("\t{g}"));
        }
        out.push('\n');
    }
    out
}

/// `{"indices", "g_vectors", "compatible"}` with a boolean matrix in index order.
pub fn compatibility_json(table: &VanishingTable) -> String {
    let xs = &table.xi;
    let matrix: Vec<Vec<bool>> = xs
        .iter()
        .map(|a| xs.iter().map(|b| table.compatible(a, b)).collect())
        .collect();
    pretty(&json!({
        "indices": xs.iter().map(entries).collect::<Vec<_>>(),
        "g_vectors": xs.iter().map(|x| x.g_vector().coords).collect::<Vec<_>>(),
        "compatible": matrix,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::xi::CriterionOptions;

    #[test]
    fn lattice_outputs() {
        let lat = WeakOrderLattice::new(2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&lattice_json(&lat)).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        let dot = lattice_dot(&lat);
        assert_eq!(dot.matches("->").count(), 6);
        assert_eq!(
            lattice_json(&lat),
            lattice_json(&WeakOrderLattice::new(2).unwrap())
        );
    }

    #[test]
    fn compatibility_diagonal() {
        let table = VanishingTable::new(2, CriterionOptions::default(), Exec::Sequential).unwrap();
        let v: serde_json::Value = serde_json::from_str(&compatibility_json(&table)).unwrap();
        let m = v["compatible"].as_array().unwrap();
        assert_eq!(m.len(), 6);
        for (k, row) in m.iter().enumerate() {
            assert_eq!(row[k], true);
        }
    }
}
