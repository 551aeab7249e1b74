//! Crystal graphs of `B(lambda)`, truncations of `B(inf)`, and the scanner
//! for containment of Demazure elements in extremal polytopes.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::bz;
use crate::demazure::extremal;
use crate::error::{Error, Result};
use crate::lusztig::{element_key, LusztigDatum};
use crate::oracle::oracle_demazure_set;
use crate::root::{Coweight, RootDatum};
use crate::strata;
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: usize,
    /// Expressed on the reference word.
    pub element: LusztigDatum,
    pub weight: Coweight,
    pub iota: Option<WeylElement>,
    pub kappa: Option<WeylElement>,
}

/// `f_colour(src) = dst`; colours are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub colour: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub datum: RootDatum,
    pub lambda: Coweight,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    index: HashMap<Vec<i64>, usize>,
}

impl CrystalGraph {
    pub(crate) fn from_parts(datum: RootDatum, lambda: Coweight, nodes: Vec<Node>, edges: Vec<Edge>) -> Self {
        let index = nodes.iter().map(|n| (n.element.n().to_vec(), n.id)).collect();
        CrystalGraph {
            datum,
            lambda,
            nodes,
            edges,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The node representing a polytope, located through its reference-word vector.
    pub fn find(&self, p: &LusztigDatum) -> Option<&Node> {
        self.index.get(&p.canonical_n()).map(|&i| &self.nodes[i])
    }

    pub fn elements(&self) -> impl Iterator<Item = &LusztigDatum> {
        self.nodes.iter().map(|n| &n.element)
    }

    /// Nodes with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_in[e.dst] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_in[i]).collect()
    }

    /// Nodes with no outgoing edge.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_out[e.src] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_out[i]).collect()
    }

    /// Multiplicity of each weight.
    pub fn weight_multiplicities(&self) -> HashMap<Coweight, usize> {
        let mut m = HashMap::new();
        for n in &self.nodes {
            *m.entry(n.weight.clone()).or_insert(0) += 1;
        }
        m
    }

    /// Lengths of the `colour`-string through each node, measured on the graph:
    /// `(steps back to the string head, steps forward to its tail)`.
    pub fn string_lengths(&self, colour: usize) -> Vec<(i64, i64)> {
        let mut next = vec![None; self.nodes.len()];
        let mut prev = vec![None; self.nodes.len()];
        for e in self.edges.iter().filter(|e| e.colour == colour) {
            next[e.src] = Some(e.dst);
            prev[e.dst] = Some(e.src);
        }
        let walk = |start: usize, links: &[Option<usize>]| {
            let mut k = 0;
            let mut cur = start;
            while let Some(n) = links[cur] {
                k += 1;
                cur = n;
            }
            k
        };
        (0..self.nodes.len()).map(|i| (walk(i, &prev), walk(i, &next))).collect()
    }

    /// Fills `iota` (0-Hecke shortcut) and `kappa` on every node.
    pub fn annotate_strata(&mut self) -> Result<()> {
        for n in &mut self.nodes {
            n.iota = Some(strata::iota_shortcut(&n.element));
            n.kappa = Some(strata::kappa(&n.element)?);
        }
        Ok(())
    }
}

/// `B(lambda)` as the closure of `{P_lambda}` under the lowering operators.
pub fn generate_crystal(d: &RootDatum, lambda: &Coweight) -> Result<CrystalGraph> {
    let dim = d.weyl_dimension(lambda)?;
    let limit = d.limits().max_nodes as u128;
    if dim > limit {
        return Err(Error::SizeGate {
            what: "crystal size",
            size: dim,
            limit,
        });
    }
    let top = LusztigDatum::highest(d, lambda)?;
    let mut nodes = vec![Node {
        id: 0,
        weight: top.weight(),
        element: top.clone(),
        iota: None,
        kappa: None,
    }];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(top.n().to_vec(), 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let cur = nodes[u].element.clone();
        for j in 0..d.rank() {
            let Some(next) = cur.f(j) else { continue };
            let key = next.n().to_vec();
            let v = match index.get(&key) {
                Some(&v) => v,
                None => {
                    let v = nodes.len();
                    index.insert(key, v);
                    nodes.push(Node {
                        id: v,
                        weight: next.weight(),
                        element: next,
                        iota: None,
                        kappa: None,
                    });
                    queue.push_back(v);
                    v
                }
            };
            edges.push(Edge { src: u, dst: v, colour: j });
        }
    }
    Ok(CrystalGraph {
        datum: d.clone(),
        lambda: lambda.clone(),
        nodes,
        edges,
        index,
    })
}

/// Height `sum c_j` of `-wt` for an element of `B(inf)`.
pub fn depth(p: &LusztigDatum) -> i64 {
    -p.weight().0.iter().sum::<i64>()
}

/// Elements of `B(inf)` with depth at most `max_depth`, generated from `P_0`.
pub fn generate_binf_truncated(d: &RootDatum, max_depth: i64) -> Result<Vec<LusztigDatum>> {
    let limit = d.limits().max_nodes;
    let zero = LusztigDatum::zero(d);
    let mut seen = HashSet::from([zero.n().to_vec()]);
    let mut out = vec![zero];
    let mut k = 0;
    while k < out.len() {
        let cur = out[k].clone();
        k += 1;
        if depth(&cur) >= max_depth {
            continue;
        }
        for j in 0..d.rank() {
            let next = cur.f(j).expect("lowering never vanishes on B(inf)");
            let key = next.n().to_vec();
            if seen.insert(key) {
                out.push(next);
                if out.len() > limit {
                    return Err(Error::SizeGate {
                        what: "truncated B(inf)",
                        size: out.len() as u128,
                        limit: limit as u128,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Kostant partition function: ways to write `gamma` (coroot coordinates) as
/// a sum of positive coroots with multiplicities.
pub fn kostant_count(d: &RootDatum, gamma: &Coweight) -> u128 {
    fn go(roots: &[Coweight], k: usize, rest: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), u128>) -> u128 {
        if rest.iter().all(|&c| c == 0) {
            return 1;
        }
        if k == roots.len() || rest.iter().any(|&c| c < 0) {
            return 0;
        }
        if let Some(&v) = memo.get(&(k, rest.clone())) {
            return v;
        }
        let mut total = go(roots, k + 1, rest, memo);
        let mut used = 0;
        loop {
            for (r, b) in rest.iter_mut().zip(&roots[k].0) {
                *r -= b;
            }
            used += 1;
            if rest.iter().any(|&c| c < 0) {
                break;
            }
            total += go(roots, k + 1, rest, memo);
        }
        for (r, b) in rest.iter_mut().zip(&roots[k].0) {
            *r += used * b;
        }
        memo.insert((k, rest.clone()), total);
        total
    }
    go(d.positive_coroots(), 0, &mut gamma.0.clone(), &mut HashMap::new())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// One-based reduced word of `x` (`"e"` for the identity).
    pub x: String,
    /// Vector on the reference word.
    pub n: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub datum: String,
    pub lambda: Vec<i64>,
    pub pairs_tested: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanReport {
    pub fn summary(&self) -> String {
        if self.counterexamples.is_empty() {
            format!(
                "{} lambda=({}): {} pairs tested, none found",
                self.datum,
                self.lambda.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
                self.pairs_tested
            )
        } else {
            format!(
                "{} lambda=({}): {} pairs tested, {} counterexamples",
                self.datum,
                self.lambda.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
                self.pairs_tested,
                self.counterexamples.len()
            )
        }
    }
}

/// For every `x` and every `P` in the Demazure crystal of `x`, tests whether
/// `P` is contained in the extremal polytope `P_{x lambda}`; reports failures.
pub fn scan_question(d: &RootDatum, lambda: &Coweight) -> Result<ScanReport> {
    let group = d.weyl_group()?;
    let mut pairs_tested = 0;
    let mut counterexamples = Vec::new();
    for x in group.elements() {
        let ext = extremal(d, x, lambda)?;
        for p in oracle_demazure_set(d, x, lambda)?.elements() {
            pairs_tested += 1;
            if !bz::contains(&ext, &p)? {
                counterexamples.push(Counterexample {
                    x: element_key(d, x),
                    n: p.n().to_vec(),
                });
            }
        }
    }
    Ok(ScanReport {
        datum: d.name(),
        lambda: lambda.0.clone(),
        pairs_tested,
        counterexamples,
    })
}
