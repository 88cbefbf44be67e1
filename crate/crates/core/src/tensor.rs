//! Tensor products of highest weight crystals.
//!
//! The lowering rule is `f_i(x ⊗ y) = f_i(x) ⊗ y` when `ε_i(x) >= φ_i(y)`
//! and `x ⊗ f_i(y)` otherwise. Raising edges are the reverses of the built
//! lowering edges, so `ε` and `φ` on pairs come from walking the graph.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::crystal::{Crystal, CrystalGraph, CrystalSubset, HighestWeightCrystal, VertexId};
use crate::demazure::Demazure;
use crate::error::{Error, Result};
use crate::extremal::is_extremal;
use crate::tableau::Partition;
use crate::weyl::{min_coset_reps, WeylElement};

/// A vertex of a tensor product: a pair of factor vertices.
pub type Pair = (VertexId, VertexId);

/// `f_i(x ⊗ y)` with string lengths read off the factor crystals.
pub fn tensor_lower<C: Crystal, D: Crystal>(
    left: &C,
    right: &D,
    i: usize,
    (x, y): Pair,
) -> Option<Pair> {
    if left.epsilon(i, x) >= right.phi(i, y) {
        left.lower(i, x).map(|fx| (fx, y))
    } else {
        right.lower(i, y).map(|fy| (x, fy))
    }
}

#[derive(Clone, Debug)]
pub struct TensorCrystal {
    left: CrystalGraph,
    right: CrystalGraph,
    lower_edges: Vec<Vec<Option<VertexId>>>,
    raise_edges: Vec<Vec<Option<VertexId>>>,
}

impl TensorCrystal {
    pub fn new(left: CrystalGraph, right: CrystalGraph) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::RankMismatch {
                left: left.rank(),
                right: right.rank(),
            });
        }
        let count = left.num_vertices() * right.num_vertices();
        let n = left.rank();
        let mut lower_edges = vec![vec![None; count]; n.saturating_sub(1)];
        let mut raise_edges = vec![vec![None; count]; n.saturating_sub(1)];
        let width = right.num_vertices();
        for x in 0..left.num_vertices() {
            for y in 0..width {
                for i in 1..n {
                    if let Some((a, b)) = tensor_lower(&left, &right, i, (x, y)) {
                        let (from, to) = (x * width + y, a * width + b);
                        lower_edges[i - 1][from] = Some(to);
                        raise_edges[i - 1][to] = Some(from);
                    }
                }
            }
        }
        Ok(TensorCrystal {
            left,
            right,
            lower_edges,
            raise_edges,
        })
    }

    pub fn left(&self) -> &CrystalGraph {
        &self.left
    }

    pub fn right(&self) -> &CrystalGraph {
        &self.right
    }

    pub fn vertex(&self, (x, y): Pair) -> VertexId {
        x * self.right.num_vertices() + y
    }

    pub fn pair(&self, v: VertexId) -> Pair {
        (v / self.right.num_vertices(), v % self.right.num_vertices())
    }

    /// `X ⊗ Y` as a subset of the product.
    pub fn product_subset(
        &self,
        xs: &CrystalSubset<'_, CrystalGraph>,
        ys: &CrystalSubset<'_, CrystalGraph>,
    ) -> CrystalSubset<'_, TensorCrystal> {
        let members = xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| (x, y)))
            .map(|p| self.vertex(p))
            .collect();
        CrystalSubset::new(self, members)
    }

    /// Connected components of the whole product, ordered by smallest id.
    pub fn components(&self) -> Vec<CrystalSubset<'_, TensorCrystal>> {
        let labels: Vec<usize> = self.indices().collect();
        CrystalSubset::full(self).components(&labels)
    }
}

impl Crystal for TensorCrystal {
    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn num_vertices(&self) -> usize {
        self.left.num_vertices() * self.right.num_vertices()
    }

    fn weight(&self, v: VertexId) -> Vec<u32> {
        let (x, y) = self.pair(v);
        self.left
            .weight(x)
            .iter()
            .zip(self.right.weight(y))
            .map(|(a, b)| a + b)
            .collect()
    }

    fn lower(&self, i: usize, v: VertexId) -> Option<VertexId> {
        self.lower_edges[i - 1][v]
    }

    fn raise(&self, i: usize, v: VertexId) -> Option<VertexId> {
        self.raise_edges[i - 1][v]
    }

    fn label(&self, v: VertexId) -> String {
        let (x, y) = self.pair(v);
        format!("{} ⊗ {}", self.left.tableau(x), self.right.tableau(y))
    }
}

pub fn build_tensor(g: &CrystalGraph, h: &CrystalGraph) -> Result<TensorCrystal> {
    TensorCrystal::new(g.clone(), h.clone())
}

fn unique_source<C: Crystal>(c: &CrystalSubset<'_, C>) -> Result<VertexId> {
    let g = c.ambient();
    let sources: Vec<VertexId> = c
        .iter()
        .filter(|&v| g.indices().all(|i| g.raise(i, v).is_none()))
        .collect();
    match sources.as_slice() {
        [s] => Ok(*s),
        _ => Err(Error::NoUniqueSource(sources.len())),
    }
}

fn source_shape<C: Crystal>(c: &CrystalSubset<'_, C>) -> Result<(VertexId, Partition)> {
    let s = unique_source(c)?;
    let shape = Partition::new(c.ambient().weight(s)).map_err(|_| Error::NoUniqueSource(0))?;
    Ok((s, shape))
}

/// Highest weights of the components with multiplicity.
pub fn decompose(t: &TensorCrystal) -> Result<BTreeMap<Partition, usize>> {
    let mut out = BTreeMap::new();
    for c in t.components() {
        let (_, nu) = source_shape(&c)?;
        *out.entry(nu).or_insert(0) += 1;
    }
    Ok(out)
}

/// The isomorphism from the component of `g` containing `source` onto `h`
/// sending `source` to `target`, if one exists. Edges and weights must match
/// exactly.
pub fn component_isomorphism<C: Crystal, D: Crystal>(
    g: &C,
    source: VertexId,
    h: &D,
    target: VertexId,
) -> Option<HashMap<VertexId, VertexId>> {
    if g.rank() != h.rank() {
        return None;
    }
    let mut map = HashMap::from([(source, target)]);
    let mut used = BTreeSet::from([target]);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let image = map[&v];
        if g.weight(v) != h.weight(image) {
            return None;
        }
        for i in g.indices() {
            for (next_g, next_h) in [
                (g.lower(i, v), h.lower(i, image)),
                (g.raise(i, v), h.raise(i, image)),
            ] {
                match (next_g, next_h) {
                    (None, None) => {}
                    (Some(a), Some(b)) => match map.get(&a) {
                        Some(&existing) if existing == b => {}
                        Some(_) => return None,
                        None => {
                            if !used.insert(b) {
                                return None;
                            }
                            map.insert(a, b);
                            queue.push_back(a);
                        }
                    },
                    _ => return None,
                }
            }
        }
    }
    (used.len() == h.num_vertices()).then_some(map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    /// Weight of the source of the ambient component.
    pub highest_weight: Partition,
    pub size: usize,
    /// The `w' ∈ W^ν` with this component equal to `B_{w'}(ν)`, if any.
    pub demazure: Option<WeylElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdgVerdict {
    pub extremal: bool,
    pub direct_sum_of_demazure: bool,
    pub components: Vec<ComponentReport>,
}

/// Builds `B_v(λ) ⊗ B_w(μ)` inside `B(λ) ⊗ B(μ)`, tests extremality, and
/// independently tests whether every connected component is a Demazure
/// crystal of its ambient component.
pub fn demazure_tensor_test(
    v: &WeylElement,
    lambda: &Partition,
    w: &WeylElement,
    mu: &Partition,
) -> Result<AdgVerdict> {
    let t = TensorCrystal::new(CrystalGraph::generate(lambda), CrystalGraph::generate(mu))?;
    let dv = Demazure::new(t.left()).demazure_crystal(v)?;
    let dw = Demazure::new(t.right()).demazure_crystal(w)?;
    let x = t.product_subset(&dv, &dw);
    let extremal = is_extremal(&x);

    let ambient = t.components();
    let labels: Vec<usize> = t.indices().collect();
    let pieces = x.components(&labels);

    let mut targets: BTreeMap<Partition, CrystalGraph> = BTreeMap::new();
    let mut located = Vec::with_capacity(pieces.len());
    for piece in &pieces {
        let first = piece.iter().next().expect("components are nonempty");
        let home = ambient
            .iter()
            .find(|c| c.contains(first))
            .expect("ambient components cover the product");
        let (source, nu) = source_shape(home)?;
        targets
            .entry(nu.clone())
            .or_insert_with(|| CrystalGraph::generate(&nu));
        located.push((source, nu));
    }

    let mut components = Vec::with_capacity(pieces.len());
    for (piece, (source, nu)) in pieces.iter().zip(located) {
        let target = &targets[&nu];
        let iso = component_isomorphism(&t, source, target, target.highest())
            .ok_or(Error::NoUniqueSource(0))?;
        let image: BTreeSet<VertexId> = piece.iter().map(|p| iso[&p]).collect();
        let dem = Demazure::new(target);
        let demazure = min_coset_reps(&nu).into_iter().find(|u| {
            dem.demazure_crystal(u)
                .map(|d| d.members() == &image)
                .unwrap_or(false)
        });
        components.push(ComponentReport {
            highest_weight: nu,
            size: piece.len(),
            demazure,
        });
    }
    let direct_sum_of_demazure = components.iter().all(|c| c.demazure.is_some());
    Ok(AdgVerdict {
        extremal,
        direct_sum_of_demazure,
        components,
    })
}
