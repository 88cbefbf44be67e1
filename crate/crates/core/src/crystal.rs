//! Crystal graphs as explicit, immutable objects.
//!
//! [`Crystal`] is the abstract interface the set-operator layer is written
//! against; [`CrystalGraph`] realizes `B(λ)` on tableaux and
//! [`TensorCrystal`](crate::tensor::TensorCrystal) realizes tensor products.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::tableau::{Partition, Tableau};

pub type VertexId = usize;

pub trait Crystal {
    /// `n`; crystal indices run over `1..n`.
    fn rank(&self) -> usize;

    fn num_vertices(&self) -> usize;

    fn weight(&self, v: VertexId) -> Vec<u32>;

    /// `f_i`.
    fn lower(&self, i: usize, v: VertexId) -> Option<VertexId>;

    /// `e_i`.
    fn raise(&self, i: usize, v: VertexId) -> Option<VertexId>;

    fn label(&self, v: VertexId) -> String;

    fn indices(&self) -> std::ops::Range<usize> {
        1..self.rank()
    }

    /// `ε_i`, by walking raise edges.
    fn epsilon(&self, i: usize, v: VertexId) -> usize {
        let mut k = 0;
        let mut x = v;
        while let Some(y) = self.raise(i, x) {
            k += 1;
            x = y;
        }
        k
    }

    /// `φ_i`, by walking lower edges.
    fn phi(&self, i: usize, v: VertexId) -> usize {
        let mut k = 0;
        let mut x = v;
        while let Some(y) = self.lower(i, x) {
            k += 1;
            x = y;
        }
        k
    }

    /// `f_i^*`: the bottom of the `i`-string through `v`.
    fn lower_fully(&self, i: usize, v: VertexId) -> VertexId {
        let mut x = v;
        while let Some(y) = self.lower(i, x) {
            x = y;
        }
        x
    }

    /// `e_i^*`: the head `u_S` of the `i`-string through `v`.
    fn raise_fully(&self, i: usize, v: VertexId) -> VertexId {
        let mut x = v;
        while let Some(y) = self.raise(i, x) {
            x = y;
        }
        x
    }

    /// Vertices killed by every raising operator.
    fn highest_weight_vertices(&self) -> Vec<VertexId> {
        (0..self.num_vertices())
            .filter(|&v| self.indices().all(|i| self.raise(i, v).is_none()))
            .collect()
    }
}

/// A crystal with a distinguished highest weight vertex `b_λ`.
pub trait HighestWeightCrystal: Crystal {
    fn shape(&self) -> &Partition;

    /// `b_λ`.
    fn highest(&self) -> VertexId;
}

/// The highest weight crystal `B(λ)` on `SSYT_n(λ)`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    shape: Partition,
    vertices: Vec<Tableau>,
    weights: Vec<Vec<u32>>,
    index: HashMap<Tableau, VertexId>,
    // [i - 1][v]
    lower_edges: Vec<Vec<Option<VertexId>>>,
    raise_edges: Vec<Vec<Option<VertexId>>>,
}

impl CrystalGraph {
    /// Breadth-first closure of `{b_λ}` under every `f_i`; vertices are then
    /// ordered by weight (descending) and rows so that `b_λ` has id 0.
    pub fn generate(shape: &Partition) -> Self {
        let n = shape.len();
        let top = Tableau::highest_weight(shape);
        let mut seen: HashSet<Tableau> = HashSet::from([top.clone()]);
        let mut queue = VecDeque::from([top]);
        while let Some(t) = queue.pop_front() {
            for i in 1..n {
                if let Some(next) = t.lower(i) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut vertices: Vec<Tableau> = seen.into_iter().collect();
        vertices.sort_by(|a, b| b.weight().cmp(&a.weight()).then_with(|| a.cmp(b)));
        let index: HashMap<Tableau, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let weights = vertices.iter().map(Tableau::weight).collect();

        let count = vertices.len();
        let mut lower_edges = vec![vec![None; count]; n.saturating_sub(1)];
        let mut raise_edges = vec![vec![None; count]; n.saturating_sub(1)];
        for (v, t) in vertices.iter().enumerate() {
            for i in 1..n {
                if let Some(next) = t.lower(i) {
                    let u = index[&next];
                    lower_edges[i - 1][v] = Some(u);
                    raise_edges[i - 1][u] = Some(v);
                }
            }
        }
        CrystalGraph {
            shape: shape.clone(),
            vertices,
            weights,
            index,
            lower_edges,
            raise_edges,
        }
    }

    pub fn tableau(&self, v: VertexId) -> &Tableau {
        &self.vertices[v]
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn vertex_of(&self, t: &Tableau) -> Option<VertexId> {
        self.index.get(t).copied()
    }

    /// Validates every tableau against the vertex set.
    pub fn subset_from_tableaux<'a>(&'a self, ts: &[Tableau]) -> Result<CrystalSubset<'a, Self>> {
        let members = ts
            .iter()
            .map(|t| {
                self.vertex_of(t)
                    .ok_or_else(|| Error::UnknownVertex(t.to_string()))
            })
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(CrystalSubset::new(self, members))
    }

    /// The vertex of the given weight, if it is unique.
    pub fn unique_vertex_of_weight(&self, weight: &[u32]) -> Option<VertexId> {
        let mut hits = (0..self.vertices.len()).filter(|&v| self.weights[v] == weight);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    pub fn to_dot(&self) -> String {
        const COLORS: [&str; 8] = [
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "magenta",
            "gray",
        ];
        let mut out = String::new();
        writeln!(out, "digraph crystal {{").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (v, t) in self.vertices.iter().enumerate() {
            writeln!(out, "  v{v} [label=\"{t}\"];").unwrap();
        }
        for v in 0..self.vertices.len() {
            for i in self.indices() {
                if let Some(u) = self.lower(i, v) {
                    let color = COLORS[(i - 1) % COLORS.len()];
                    writeln!(out, "  v{v} -> v{u} [label=\"{i}\", color={color}];").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Vertex<'a> {
            id: VertexId,
            tableau: &'a Tableau,
            weight: &'a [u32],
        }
        #[derive(Serialize)]
        struct Edge {
            from: VertexId,
            to: VertexId,
            i: usize,
        }
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(id, t)| Vertex {
                id,
                tableau: t,
                weight: &self.weights[id],
            })
            .collect();
        let mut edges = Vec::new();
        for v in 0..self.vertices.len() {
            for i in self.indices() {
                if let Some(u) = self.lower(i, v) {
                    edges.push(Edge { from: v, to: u, i });
                }
            }
        }
        serde_json::json!({
            "shape": self.shape,
            "rank": self.rank(),
            "highest": self.highest(),
            "vertices": vertices,
            "edges": edges,
        })
    }
}

impl HighestWeightCrystal for CrystalGraph {
    fn shape(&self) -> &Partition {
        &self.shape
    }

    fn highest(&self) -> VertexId {
        0
    }
}

impl Crystal for CrystalGraph {
    fn rank(&self) -> usize {
        self.shape.len()
    }

    fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn weight(&self, v: VertexId) -> Vec<u32> {
        self.weights[v].clone()
    }

    fn lower(&self, i: usize, v: VertexId) -> Option<VertexId> {
        self.lower_edges[i - 1][v]
    }

    fn raise(&self, i: usize, v: VertexId) -> Option<VertexId> {
        self.raise_edges[i - 1][v]
    }

    fn label(&self, v: VertexId) -> String {
        self.vertices[v].to_string()
    }
}

/// A vertex subset of an ambient crystal.
pub struct CrystalSubset<'a, C> {
    ambient: &'a C,
    members: BTreeSet<VertexId>,
}

impl<C> Clone for CrystalSubset<'_, C> {
    fn clone(&self) -> Self {
        CrystalSubset {
            ambient: self.ambient,
            members: self.members.clone(),
        }
    }
}

impl<C> PartialEq for CrystalSubset<'_, C> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ambient, other.ambient) && self.members == other.members
    }
}

impl<C> Eq for CrystalSubset<'_, C> {}

impl<C: Crystal> fmt::Debug for CrystalSubset<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.members.iter().map(|&v| self.ambient.label(v)))
            .finish()
    }
}

impl<'a, C: Crystal> CrystalSubset<'a, C> {
    /// # Panics
    /// If a member id is not a vertex of `ambient`.
    pub fn new(ambient: &'a C, members: BTreeSet<VertexId>) -> Self {
        if let Some(&last) = members.last() {
            assert!(
                last < ambient.num_vertices(),
                "vertex {last} not in ambient crystal"
            );
        }
        CrystalSubset { ambient, members }
    }

    pub fn empty(ambient: &'a C) -> Self {
        CrystalSubset {
            ambient,
            members: BTreeSet::new(),
        }
    }

    pub fn singleton(ambient: &'a C, v: VertexId) -> Self {
        Self::new(ambient, BTreeSet::from([v]))
    }

    pub fn full(ambient: &'a C) -> Self {
        CrystalSubset {
            ambient,
            members: (0..ambient.num_vertices()).collect(),
        }
    }

    pub fn ambient(&self) -> &'a C {
        self.ambient
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.members
    }

    pub fn into_members(self) -> BTreeSet<VertexId> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.ambient, other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self::new(self.ambient, &self.members | &other.members))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self::new(self.ambient, &self.members & &other.members))
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self::new(self.ambient, &self.members - &other.members))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        std::ptr::eq(self.ambient, other.ambient) && self.members.is_subset(&other.members)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.members.is_disjoint(&other.members)
    }

    /// `Σ_{x ∈ X} t^{wt(x)}`.
    pub fn character(&self) -> Polynomial {
        self.members
            .iter()
            .map(|&v| (self.ambient.weight(v), 1))
            .collect()
    }

    /// Connected components of the subgraph induced on the members, using
    /// only edges whose label lies in `labels`.
    pub fn components(&self, labels: &[usize]) -> Vec<Self> {
        connected_components(self.ambient, &self.members, labels)
            .into_iter()
            .map(|m| Self::new(self.ambient, m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let labels: Vec<usize> = self.ambient.indices().collect();
        self.components(&labels).len() <= 1
    }
}

impl<'a> CrystalSubset<'a, CrystalGraph> {
    pub fn tableaux(&self) -> Vec<&'a Tableau> {
        self.members
            .iter()
            .map(|&v| self.ambient.tableau(v))
            .collect()
    }
}

/// `B(λ)`.
pub fn generate(shape: &Partition) -> CrystalGraph {
    CrystalGraph::generate(shape)
}

/// An `i`-string: a maximal `f_i`-chain starting at its head `u_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IString {
    pub index: usize,
    /// Head first.
    pub members: Vec<VertexId>,
}

impl IString {
    pub fn head(&self) -> VertexId {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Partition of the vertex set into `i`-strings, ordered by head id.
pub fn i_strings<C: Crystal>(g: &C, i: usize) -> Vec<IString> {
    (0..g.num_vertices())
        .filter(|&v| g.raise(i, v).is_none())
        .map(|head| {
            let mut members = vec![head];
            let mut x = head;
            while let Some(y) = g.lower(i, x) {
                members.push(y);
                x = y;
            }
            IString { index: i, members }
        })
        .collect()
}

/// Components of `vertices` under edges labeled in `labels` (both directions),
/// each keyed by its smallest id and returned in that order.
pub fn connected_components<C: Crystal>(
    g: &C,
    vertices: &BTreeSet<VertexId>,
    labels: &[usize],
) -> Vec<BTreeSet<VertexId>> {
    let mut seen: HashSet<VertexId> = HashSet::new();
    let mut out = Vec::new();
    for &start in vertices {
        if !seen.insert(start) {
            continue;
        }
        let mut component = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &i in labels {
                for next in [g.lower(i, v), g.raise(i, v)].into_iter().flatten() {
                    if vertices.contains(&next) && seen.insert(next) {
                        component.insert(next);
                        stack.push(next);
                    }
                }
            }
        }
        out.push(component);
    }
    out
}

/// Components of `G` restricted to the labels in `labels`.
pub fn levi_branch<'a, C: Crystal>(g: &'a C, labels: &[usize]) -> Vec<CrystalSubset<'a, C>> {
    CrystalSubset::full(g).components(labels)
}

/// Checks axioms A1 and A3 (with ε, φ computed as string lengths, A2) at
/// every vertex. Returns a description of the first violation.
pub fn verify_axioms<C: Crystal>(g: &C) -> std::result::Result<(), String> {
    for v in 0..g.num_vertices() {
        let wt = g.weight(v);
        for i in g.indices() {
            if let Some(u) = g.lower(i, v) {
                if g.raise(i, u) != Some(v) {
                    return Err(format!("A1: e_{i} f_{i} {} != itself", g.label(v)));
                }
                let wu = g.weight(u);
                let mut expected: Vec<i64> = wt.iter().map(|&x| x as i64).collect();
                expected[i - 1] -= 1;
                expected[i] += 1;
                if wu.iter().map(|&x| x as i64).collect::<Vec<_>>() != expected {
                    return Err(format!("A1: wt(f_{i} {}) != wt - α_{i}", g.label(v)));
                }
            }
            if let Some(u) = g.raise(i, v) {
                if g.lower(i, u) != Some(v) {
                    return Err(format!("A1: f_{i} e_{i} {} != itself", g.label(v)));
                }
            }
            let pairing = wt[i - 1] as i64 - wt[i] as i64;
            if g.phi(i, v) as i64 != pairing + g.epsilon(i, v) as i64 {
                return Err(format!("A3 fails at {} for i = {i}", g.label(v)));
            }
        }
    }
    Ok(())
}
