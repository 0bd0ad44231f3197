//! Crystal graphs over an enumerated region, exported as DOT or JSON.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use serde::Serialize;

use crate::crystal::{Bicrystal, Crystal};
use crate::document::Document;
use crate::error::CrystalError;
use crate::multisegment::Multisegment;
use crate::pbw::LusztigDatum;
use crate::tableau::{enumerate_ssyt, Tableau};

use super::enumerate::{enumerate_lusztig_data, enumerate_multisegments};
use super::{AsDocument, Budget, SuiteParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphModel {
    Ms,
    Tab,
    Pbw,
}

impl std::str::FromStr for GraphModel {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ms" => Ok(GraphModel::Ms),
            "tab" => Ok(GraphModel::Tab),
            "pbw" => Ok(GraphModel::Pbw),
            other => Err(CrystalError::Usage(format!("unknown model `{other}` (expected ms, tab or pbw)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Normal,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub id: usize,
    pub label: String,
    /// Number of `f` steps from the highest weight element.
    pub size: u64,
    pub element: Document,
    /// Weight in simple-root coordinates; absent for tableaux.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<i64>>,
    /// `<wt, α_i^∨>` for `i = 1..=n`.
    pub pairings: Vec<i64>,
    pub eps: Vec<u32>,
    pub phi: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_star: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_star: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub index: usize,
    pub kind: EdgeKind,
}

impl GraphEdge {
    pub fn operator(&self) -> String {
        match self.kind {
            EdgeKind::Normal => format!("f{}", self.index),
            EdgeKind::Star => format!("f{}*", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub model: GraphModel,
    pub params: SuiteParams,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl CrystalGraph {
    /// DOT digraph with nodes labeled by canonical text and edges by operator.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for node in &self.nodes {
            writeln!(out, "  n{} [label=\"{}\"];", node.id, dot_escape(&node.label)).expect("writing to a string");
        }
        for edge in &self.edges {
            let style = if edge.kind == EdgeKind::Star { ", style=dashed" } else { "" };
            writeln!(out, "  n{} -> n{} [label=\"{}\"{}];", edge.source, edge.target, edge.operator(), style)
                .expect("writing to a string");
        }
        out.push_str("}\n");
        out
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graphs serialize");
        s.push('\n');
        s
    }
}

struct Ops<C> {
    size: fn(&C) -> u64,
    label: fn(&C) -> String,
    weight: fn(&C) -> Option<Vec<i64>>,
    star: Option<StarOps<C>>,
}

struct StarOps<C> {
    f: fn(&C, usize) -> Option<C>,
    eps: fn(&C, usize) -> u32,
    phi: fn(&C, usize) -> i64,
}

fn star_ops<C: Bicrystal>() -> StarOps<C> {
    StarOps { f: C::f_star, eps: C::eps_star, phi: C::phi_star }
}

fn assemble<C>(model: GraphModel, params: &SuiteParams, mut elements: Vec<C>, ops: Ops<C>) -> CrystalGraph
where
    C: Crystal + Eq + Hash + AsDocument,
{
    elements.sort_by_cached_key(|c| ((ops.size)(c), (ops.label)(c)));
    let ids: HashMap<&C, usize> = elements.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let mut nodes = Vec::with_capacity(elements.len());
    let mut edges = Vec::new();
    for (id, c) in elements.iter().enumerate() {
        let indices = c.rank().indices();
        nodes.push(GraphNode {
            id,
            label: (ops.label)(c),
            size: (ops.size)(c),
            element: c.to_document(),
            weight: (ops.weight)(c),
            pairings: indices.clone().map(|i| c.pairing(i)).collect(),
            eps: indices.clone().map(|i| c.eps(i)).collect(),
            phi: indices.clone().map(|i| c.phi(i)).collect(),
            eps_star: ops.star.as_ref().map(|s| indices.clone().map(|i| (s.eps)(c, i)).collect()),
            phi_star: ops.star.as_ref().map(|s| indices.clone().map(|i| (s.phi)(c, i)).collect()),
        });
        for i in indices.clone() {
            if let Some(&target) = c.f(i).as_ref().and_then(|t| ids.get(t)) {
                edges.push(GraphEdge { source: id, target, index: i, kind: EdgeKind::Normal });
            }
        }
        if let Some(s) = &ops.star {
            for i in indices {
                if let Some(&target) = (s.f)(c, i).as_ref().and_then(|t| ids.get(t)) {
                    edges.push(GraphEdge { source: id, target, index: i, kind: EdgeKind::Star });
                }
            }
        }
    }
    CrystalGraph { model, params: params.clone(), nodes, edges }
}

/// Builds the graph of the region described by `params`: multisegments or
/// Lusztig data of size at most `max_size`, or all tableaux of `shape`.
/// Star edges are only defined for `ms` and `pbw`.
pub fn build_graph(
    model: GraphModel,
    params: &SuiteParams,
    include_star: bool,
    budget: &Budget,
) -> Result<CrystalGraph, CrystalError> {
    let rank = params.rank()?;
    let missing = |what: &str| CrystalError::MissingParameter { suite: "graph".into(), what: what.into() };
    Ok(match model {
        GraphModel::Ms => {
            let max = params.max_size.ok_or_else(|| missing("max_size"))?;
            budget.check_multisegments(rank, max)?;
            let ops = Ops {
                size: Multisegment::size,
                label: Multisegment::label,
                weight: |m: &Multisegment| Some(m.weight().coords().to_vec()),
                star: include_star.then(star_ops),
            };
            assemble(model, params, enumerate_multisegments(rank, max), ops)
        }
        GraphModel::Pbw => {
            let max = params.max_size.ok_or_else(|| missing("max_size"))?;
            budget.check_multisegments(rank, max)?;
            let ops = Ops {
                size: LusztigDatum::size,
                label: LusztigDatum::label,
                weight: |a: &LusztigDatum| Some(a.weight().coords().to_vec()),
                star: include_star.then(star_ops),
            };
            assemble(model, params, enumerate_lusztig_data(rank, max), ops)
        }
        GraphModel::Tab => {
            if include_star {
                return Err(CrystalError::Usage("tableaux carry no star structure".into()));
            }
            let shape = params.shape.as_ref().ok_or_else(|| missing("shape"))?;
            budget.check_tableaux(shape, rank)?;
            let ops = Ops { size: Tableau::depth, label: Tableau::label, weight: |_: &Tableau| None, star: None };
            assemble(model, params, enumerate_ssyt(shape, rank)?, ops)
        }
    })
}
