//! BZ data `M_gamma = <w Lambda_i, mu_w>` over the chamber weights and
//! polytope containment.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lusztig::{Base, GgmsDatum, LusztigDatum};
use crate::root::{dot, Coweight, RootDatum, Weight};
use crate::weyl::WeylElement;

/// All chamber weights `w Lambda_i`, with every expression `(w, i)` mapped to
/// the index of its weight.
pub struct GammaTable {
    pub gammas: Vec<Weight>,
    pub expressions: Vec<(WeylElement, usize, usize)>,
}

impl GammaTable {
    fn build(d: &RootDatum) -> Result<Self> {
        let group = d.weyl_group()?;
        let mut index: HashMap<Weight, usize> = HashMap::new();
        let mut gammas = Vec::new();
        let mut expressions = Vec::with_capacity(group.len() * d.rank());
        for w in group.elements() {
            for i in 0..d.rank() {
                let g = d.act_weight(w, &d.fundamental_weight(i));
                let k = *index.entry(g.clone()).or_insert_with(|| {
                    gammas.push(g);
                    gammas.len() - 1
                });
                expressions.push((w.clone(), i, k));
            }
        }
        Ok(GammaTable { gammas, expressions })
    }
}

pub fn gamma_table(d: &RootDatum) -> Result<Arc<GammaTable>> {
    if let Some(t) = d.inner().gamma.get() {
        return Ok(t.clone());
    }
    let t = Arc::new(GammaTable::build(d)?);
    Ok(d.inner().gamma.get_or_init(|| t).clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BzDatum {
    values: BTreeMap<Weight, i64>,
}

impl BzDatum {
    pub fn get(&self, gamma: &Weight) -> Option<i64> {
        self.values.get(gamma).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `mu_w` recovered from the equalities `<w Lambda_i, mu_w> = M_{w Lambda_i}`:
    /// these say `w^{-1} mu_w` has coroot coordinates `(M_{w Lambda_i})_i`.
    pub fn reconstruct_vertex(&self, d: &RootDatum, w: &WeylElement) -> Coweight {
        let coords: Vec<i64> = (0..d.rank())
            .map(|i| self.values[&d.act_weight(w, &d.fundamental_weight(i))])
            .collect();
        d.act_coweight(w, &Coweight(coords))
    }

    /// Whether a point satisfies `<gamma, mu> >= M_gamma` for every gamma.
    pub fn satisfied_by(&self, mu: &Coweight) -> bool {
        self.values.iter().all(|(g, &m)| dot(&g.0, &mu.0) >= m)
    }
}

/// BZ datum from GGMS vertices, checking independence of the expression.
pub fn bz_from_vertices(d: &RootDatum, ggms: &GgmsDatum) -> Result<BzDatum> {
    let table = gamma_table(d)?;
    let mut slots: Vec<Option<i64>> = vec![None; table.gammas.len()];
    for (w, _, k) in &table.expressions {
        let m = dot(&table.gammas[*k].0, &ggms.get(w).0);
        match slots[*k] {
            None => slots[*k] = Some(m),
            Some(prev) if prev != m => {
                return Err(Error::Invariant(format!(
                    "BZ value for {} depends on the expression: {prev} vs {m}",
                    table.gammas[*k]
                )))
            }
            _ => {}
        }
    }
    Ok(BzDatum {
        values: table
            .gammas
            .iter()
            .cloned()
            .zip(slots.into_iter().map(|s| s.expect("every gamma has an expression")))
            .collect(),
    })
}

impl LusztigDatum {
    pub fn bz(&self) -> Result<BzDatum> {
        bz_from_vertices(self.datum(), &self.vertices()?)
    }
}

fn check_bases(p: &LusztigDatum, q: &LusztigDatum) -> Result<()> {
    if p.datum() != q.datum() {
        return Err(Error::MismatchedBase(format!("{} vs {}", p.datum(), q.datum())));
    }
    match (p.base(), q.base()) {
        (Base::Infinity, Base::Infinity) | (Base::Highest(_), Base::Highest(_)) => Ok(()),
        (a, b) => Err(Error::MismatchedBase(format!("{a} vs {b}"))),
    }
}

/// `q ⊆ p` as sets, via `M^q_gamma >= M^p_gamma` for every chamber weight.
pub fn contains(p: &LusztigDatum, q: &LusztigDatum) -> Result<bool> {
    check_bases(p, q)?;
    let (mp, mq) = (p.bz()?, q.bz()?);
    let inside = mp.iter().all(|(g, &v)| mq.get(g).expect("same gamma set") >= v);
    Ok(inside)
}

/// `q ⊆ p` via the vertices of `q` against the inequalities of `p`.
pub fn contains_by_vertices(p: &LusztigDatum, q: &LusztigDatum) -> Result<bool> {
    check_bases(p, q)?;
    let mp = p.bz()?;
    Ok(q.vertices()?.iter().all(|(_, mu)| mp.satisfied_by(mu)))
}
