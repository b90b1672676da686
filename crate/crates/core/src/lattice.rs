//! The inclusion graph between orbit labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, OrbitLabel};
use crate::constructions::rep;
use crate::enumerate::closed_subspaces_of;
use crate::error::Result;
use crate::field::PrimeField;
use crate::record::SubalgebraRecord;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeFlags {
    pub totally_singular: bool,
    pub associative: bool,
    pub commutative: bool,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNode {
    pub label: OrbitLabel,
    pub dim: usize,
    pub flags: NodeFlags,
}

/// Nodes are the proper nonzero orbit types over the field; edges are the
/// covering inclusions `X -> Y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeGraph {
    pub nodes: Vec<LatticeNode>,
    pub edges: BTreeSet<(OrbitLabel, OrbitLabel)>,
}

/// Labels of the proper nonzero subalgebras of `rep(y)`.
pub fn contained_labels(y: OrbitLabel, f: PrimeField) -> Result<BTreeSet<OrbitLabel>> {
    let space = rep(y, f)?;
    let mut out = BTreeSet::new();
    for k in 1..space.dim() {
        for s in closed_subspaces_of(&space, k) {
            out.insert(classify(&s)?);
        }
    }
    Ok(out)
}

pub fn build_lattice(f: PrimeField) -> Result<LatticeGraph> {
    let labels: Vec<OrbitLabel> = OrbitLabel::reachable_labels(f)
        .into_iter()
        .filter(|l| !matches!(l, OrbitLabel::Zero | OrbitLabel::Full))
        .collect();
    let below: Vec<(OrbitLabel, BTreeSet<OrbitLabel>)> = labels
        .par_iter()
        .map(|&y| contained_labels(y, f).map(|s| (y, s)))
        .collect::<Result<_>>()?;
    let below: BTreeMap<OrbitLabel, BTreeSet<OrbitLabel>> = below.into_iter().collect();
    let contains = |x: OrbitLabel, y: OrbitLabel| below[&y].contains(&x);
    let mut edges = BTreeSet::new();
    for &y in &labels {
        for &x in &below[&y] {
            let interposed = labels.iter().any(|&z| z != x && z != y && contains(x, z) && contains(z, y));
            if !interposed {
                edges.insert((x, y));
            }
        }
    }
    let mut nodes = Vec::new();
    for &l in &labels {
        let r = SubalgebraRecord::analyze(rep(l, f)?);
        nodes.push(LatticeNode {
            label: l,
            dim: l.dim(),
            flags: NodeFlags {
                totally_singular: r.totally_singular,
                associative: r.associative,
                commutative: r.commutative,
                maximal: !edges.iter().any(|&(x, _)| x == l),
            },
        });
    }
    Ok(LatticeGraph { nodes, edges })
}

pub fn emit_dot(g: &LatticeGraph) -> String {
    let mut s = String::from("digraph orbits {\n");
    if !g.nodes.is_empty() {
        s.push_str("  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n");
    }
    for n in &g.nodes {
        let shape = if n.flags.associative { "box" } else { "ellipse" };
        let mut styles = vec!["filled"];
        if n.flags.commutative {
            styles.push("rounded");
        }
        let (fill, font) = match (n.flags.maximal, n.flags.totally_singular) {
            (true, _) => ("black", "white"),
            (false, true) => ("lightgray", "black"),
            (false, false) => ("white", "black"),
        };
        let _ = writeln!(
            s,
            "  \"{}\" [dim={}, shape={}, style=\"{}\", fillcolor={}, fontcolor={}];",
            n.label,
            n.dim,
            shape,
            styles.join(","),
            fill,
            font
        );
    }
    for (x, y) in &g.edges {
        let _ = writeln!(s, "  \"{x}\" -> \"{y}\";");
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<[OrbitLabel; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeJson {
    pub label: OrbitLabel,
    pub dim: usize,
    pub flags: NodeFlags,
}

pub fn to_json(g: &LatticeGraph) -> LatticeJson {
    LatticeJson {
        nodes: g.nodes.iter().map(|n| NodeJson { label: n.label, dim: n.dim, flags: n.flags }).collect(),
        edges: g.edges.iter().map(|&(x, y)| [x, y]).collect(),
    }
}

pub fn emit_json(g: &LatticeGraph) -> String {
    serde_json::to_string_pretty(&to_json(g)).expect("lattice serialises") + "\n"
}

impl From<LatticeJson> for LatticeGraph {
    fn from(j: LatticeJson) -> Self {
        LatticeGraph {
            nodes: j.nodes.into_iter().map(|n| LatticeNode { label: n.label, dim: n.dim, flags: n.flags }).collect(),
            edges: j.edges.into_iter().map(|[x, y]| (x, y)).collect(),
        }
    }
}
