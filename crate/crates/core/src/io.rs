//! Interchange formats: datum and graph JSON, DOT and CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CrystalGraph, Edge, Node};
use crate::lusztig::{element_key, Base, LusztigDatum};
use crate::root::{Coweight, Family, RootDatum};
use crate::words::ReducedWord;

/// `lambda` as a coordinate list or the string `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseJson {
    Inf(String),
    Lambda(Vec<i64>),
}

impl BaseJson {
    pub fn from_base(b: &Base) -> Self {
        match b {
            Base::Infinity => BaseJson::Inf("inf".into()),
            Base::Highest(l) => BaseJson::Lambda(l.0.clone()),
        }
    }

    pub fn to_base(&self) -> Result<Base> {
        match self {
            BaseJson::Inf(s) if s == "inf" => Ok(Base::Infinity),
            BaseJson::Inf(s) => Err(Error::Parse(format!("base must be a coweight or \"inf\", got {s:?}"))),
            BaseJson::Lambda(v) => Ok(Base::Highest(Coweight(v.clone()))),
        }
    }
}

/// A Lusztig datum with its root datum, word and base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: BaseJson,
    /// One-based, comma separated.
    pub word: String,
    pub n: Vec<i64>,
    /// Optional export of `mu_w`, keyed by the lexmin word of `w`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<BTreeMap<String, Vec<i64>>>,
}

impl DatumJson {
    pub fn from_datum(p: &LusztigDatum, with_vertices: bool) -> Result<Self> {
        let d = p.datum();
        let vertices = if with_vertices {
            Some(p.vertices()?.by_word(d).into_iter().map(|(k, v)| (k, v.0)).collect())
        } else {
            None
        };
        Ok(DatumJson {
            cartan_type: d.name(),
            lambda: BaseJson::from_base(p.base()),
            word: p.word().to_string(),
            n: p.n().to_vec(),
            vertices,
        })
    }

    pub fn to_datum(&self) -> Result<LusztigDatum> {
        let d = RootDatum::parse(&self.cartan_type)?;
        self.to_datum_on(&d)
    }

    pub fn to_datum_on(&self, d: &RootDatum) -> Result<LusztigDatum> {
        let word = ReducedWord::parse(d, &self.word)?;
        LusztigDatum::new(d, word, self.n.clone(), self.lambda.to_base()?)
    }
}

pub fn datum_to_json(p: &LusztigDatum, with_vertices: bool) -> Result<String> {
    let j = DatumJson::from_datum(p, with_vertices)?;
    Ok(serde_json::to_string_pretty(&j).expect("datum serializes"))
}

pub fn datum_from_json(s: &str) -> Result<LusztigDatum> {
    let j: DatumJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_datum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumHeader {
    pub family: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub word: String,
    pub n: Vec<i64>,
    pub weight: Vec<i64>,
    pub iota: Option<String>,
    pub kappa: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: usize,
    pub dst: usize,
    /// One-based colour.
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub datum: DatumHeader,
    pub lambda: Vec<i64>,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
}

fn family_letter(f: Family) -> &'static str {
    match f {
        Family::A => "A",
        Family::D => "D",
        Family::E => "E",
    }
}

impl GraphJson {
    pub fn from_graph(g: &CrystalGraph) -> Self {
        let d = &g.datum;
        GraphJson {
            datum: DatumHeader {
                family: family_letter(d.family()).into(),
                rank: d.rank(),
            },
            lambda: g.lambda.0.clone(),
            nodes: g
                .nodes
                .iter()
                .map(|n| NodeJson {
                    id: n.id,
                    word: n.element.word().to_string(),
                    n: n.element.n().to_vec(),
                    weight: n.weight.0.clone(),
                    iota: n.iota.as_ref().map(|w| element_key(d, w)),
                    kappa: n.kappa.as_ref().map(|w| element_key(d, w)),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeJson {
                    src: e.src,
                    dst: e.dst,
                    color: e.colour + 1,
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<CrystalGraph> {
        let d = RootDatum::parse(&format!("{}{}", self.datum.family, self.datum.rank))?;
        let lambda = Coweight(self.lambda.clone());
        d.check_dominant(&lambda)?;
        let base = Base::Highest(lambda.clone());
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (k, n) in self.nodes.iter().enumerate() {
            if n.id != k {
                return Err(Error::Parse(format!("node {k} has id {}", n.id)));
            }
            let word = ReducedWord::parse(&d, &n.word)?;
            let element = LusztigDatum::new(&d, word, n.n.clone(), base.clone())?;
            let weight = Coweight(n.weight.clone());
            if element.weight() != weight {
                return Err(Error::Parse(format!("node {k} weight does not match its datum")));
            }
            let parse_opt = |s: &Option<String>| s.as_deref().map(|s| d.parse_element(s)).transpose();
            nodes.push(Node {
                id: k,
                element,
                weight,
                iota: parse_opt(&n.iota)?,
                kappa: parse_opt(&n.kappa)?,
            });
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if e.src >= nodes.len() || e.dst >= nodes.len() || e.color == 0 || e.color > d.rank() {
                return Err(Error::Parse(format!("edge {e:?} is out of range")));
            }
            edges.push(Edge {
                src: e.src,
                dst: e.dst,
                colour: e.color - 1,
            });
        }
        Ok(CrystalGraph::from_parts(d, lambda, nodes, edges))
    }
}

pub fn graph_to_json(g: &CrystalGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn graph_from_json(s: &str) -> Result<CrystalGraph> {
    let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_graph()
}

/// DOT digraph; edges carry `label=j` (one-based), nodes show their weight.
pub fn graph_to_dot(g: &CrystalGraph) -> String {
    const COLOURS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];
    let mut s = String::new();
    let _ = writeln!(s, "digraph crystal {{");
    let _ = writeln!(s, "  rankdir=TB;");
    for n in &g.nodes {
        let _ = writeln!(s, "  n{} [label=\"({})\"];", n.id, n.weight);
    }
    for e in &g.edges {
        let _ = writeln!(
            s,
            "  n{} -> n{} [label={}, color={}];",
            e.src,
            e.dst,
            e.colour + 1,
            COLOURS[e.colour % COLOURS.len()]
        );
    }
    s.push_str("}\n");
    s
}

/// CSV rows `id, weight, iota, kappa`; strata are written as one-based
/// reduced words and left empty when not annotated.
pub fn graph_to_csv(g: &CrystalGraph) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["id", "weight", "iota", "kappa"]).map_err(err)?;
    for n in &g.nodes {
        let key = |o: &Option<_>| o.as_ref().map(|x| element_key(&g.datum, x)).unwrap_or_default();
        w.write_record([n.id.to_string(), n.weight.to_string(), key(&n.iota), key(&n.kappa)])
            .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
