//! Demazure crystals, crystal Demazure atoms and the atomic operators
//! `𝓐_i(X) = 𝓕_i(X) \ X`.
//!
//! Words are in application order throughout: `[2, 1]` applies index 2 first
//! and denotes `s_1 s_2`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::crystal::{Crystal, CrystalSubset, HighestWeightCrystal, VertexId};
use crate::error::{Error, Result};
use crate::tableau::Partition;
use crate::weyl::{
    bruhat_leq, bruhat_lt, is_min_rep, min_coset_reps, min_rep, LowerOrderIdeal, WeylElement,
};

/// `𝓕_i(X)`: closure of `X` under `f_i`.
pub fn lower_closure<'a, C: Crystal>(i: usize, x: &CrystalSubset<'a, C>) -> CrystalSubset<'a, C> {
    let g = x.ambient();
    let mut out = x.members().clone();
    for v in x.iter() {
        let mut y = v;
        while let Some(z) = g.lower(i, y) {
            out.insert(z);
            y = z;
        }
    }
    CrystalSubset::new(g, out)
}

/// `𝓔_i(X)`: closure of `X` under `e_i`.
pub fn raise_closure<'a, C: Crystal>(i: usize, x: &CrystalSubset<'a, C>) -> CrystalSubset<'a, C> {
    let g = x.ambient();
    let mut out = x.members().clone();
    for v in x.iter() {
        let mut y = v;
        while let Some(z) = g.raise(i, y) {
            out.insert(z);
            y = z;
        }
    }
    CrystalSubset::new(g, out)
}

/// `𝓐_i(X) = 𝓕_i(X) \ X`.
pub fn atomic_operator<'a, C: Crystal>(i: usize, x: &CrystalSubset<'a, C>) -> CrystalSubset<'a, C> {
    let closed = lower_closure(i, x);
    CrystalSubset::new(x.ambient(), closed.members() - x.members())
}

/// `𝓕_{i_k} ⋯ 𝓕_{i_1}({b_λ})` for an arbitrary word.
pub fn demazure_along<'a, G: HighestWeightCrystal>(
    g: &'a G,
    word: &[usize],
) -> CrystalSubset<'a, G> {
    word.iter()
        .fold(CrystalSubset::singleton(g, g.highest()), |acc, &i| {
            lower_closure(i, &acc)
        })
}

/// `𝓐_{i_k} ⋯ 𝓐_{i_1}({b_λ})` for an arbitrary word.
pub fn atom_along<'a, G: HighestWeightCrystal>(g: &'a G, word: &[usize]) -> CrystalSubset<'a, G> {
    word.iter()
        .fold(CrystalSubset::singleton(g, g.highest()), |acc, &i| {
            atomic_operator(i, &acc)
        })
}

/// `f_{i_k}^* ⋯ f_{i_1}^*(b_λ)`.
pub fn extremal_weight_element<G: HighestWeightCrystal>(g: &G, word: &[usize]) -> VertexId {
    word.iter().fold(g.highest(), |v, &i| g.lower_fully(i, v))
}

/// For `x` in the atom reached by `word`, recovers exponents `d_j > 0` with
/// `x = f_{i_k}^{d_k} ⋯ f_{i_1}^{d_1}(b_λ)` by peeling `e_{i_j}^*` from the
/// last letter backwards, then replays them forwards checking that every
/// intermediate element is killed by the next `e_{i_j}`.
pub fn lowering_witness<G: HighestWeightCrystal>(
    g: &G,
    x: VertexId,
    word: &[usize],
) -> Option<Vec<usize>> {
    let mut exps = vec![0; word.len()];
    let mut y = x;
    for (j, &i) in word.iter().enumerate().rev() {
        let d = g.epsilon(i, y);
        if d == 0 {
            return None;
        }
        exps[j] = d;
        y = g.raise_fully(i, y);
    }
    if y != g.highest() {
        return None;
    }
    let mut z = g.highest();
    for (&i, &d) in word.iter().zip(&exps) {
        if g.raise(i, z).is_some() {
            return None;
        }
        for _ in 0..d {
            z = g.lower(i, z)?;
        }
    }
    (z == x).then_some(exps)
}

/// Demazure data of one highest weight crystal `B(λ)`, memoized per coset.
pub struct Demazure<'a, G> {
    graph: &'a G,
    reps: Vec<WeylElement>,
    crystals: Mutex<HashMap<WeylElement, BTreeSet<VertexId>>>,
    atoms: OnceLock<BTreeMap<WeylElement, BTreeSet<VertexId>>>,
}

impl<'a, G: HighestWeightCrystal> Demazure<'a, G> {
    pub fn new(graph: &'a G) -> Self {
        Demazure {
            graph,
            reps: min_coset_reps(graph.shape()),
            crystals: Mutex::new(HashMap::new()),
            atoms: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &'a G {
        self.graph
    }

    pub fn shape(&self) -> &Partition {
        self.graph.shape()
    }

    /// `W^λ`, by length.
    pub fn coset_reps(&self) -> &[WeylElement] {
        &self.reps
    }

    fn check_rank(&self, w: &WeylElement) -> Result<()> {
        if w.rank() != self.graph.rank() {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.graph.rank(),
            });
        }
        Ok(())
    }

    /// `B_w(λ)`; depends only on `w W_λ`.
    pub fn demazure_crystal(&self, w: &WeylElement) -> Result<CrystalSubset<'a, G>> {
        self.check_rank(w)?;
        let key = min_rep(w, self.shape())?;
        if let Some(m) = self.crystals.lock().unwrap().get(&key) {
            return Ok(CrystalSubset::new(self.graph, m.clone()));
        }
        let x = demazure_along(self.graph, key.canonical_word().letters());
        self.crystals
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| x.members().clone());
        Ok(x)
    }

    fn require_min_rep(&self, w: &WeylElement) -> Result<()> {
        self.check_rank(w)?;
        if !is_min_rep(w, self.shape()) {
            return Err(Error::NotMinimalRepresentative {
                element: w.to_string(),
                shape: self.shape().parts().to_vec(),
            });
        }
        Ok(())
    }

    /// `𝒜_w(λ) = B_w(λ) \ ⋃_{v < w} B_v(λ)`, over every `v` strictly below `w`.
    pub fn atom_via_difference(&self, w: &WeylElement) -> Result<CrystalSubset<'a, G>> {
        self.require_min_rep(w)?;
        let below = LowerOrderIdeal::new(vec![w.clone()], w.rank())?.members();
        let mut members = self.demazure_crystal(w)?.into_members();
        for v in below.iter().filter(|v| *v != w) {
            for x in self.demazure_crystal(v)?.iter() {
                members.remove(&x);
            }
        }
        Ok(CrystalSubset::new(self.graph, members))
    }

    /// Atomic operators along the canonical word of `w`; empty when
    /// `w ∉ W^λ`.
    pub fn atom_via_operators(&self, w: &WeylElement) -> Result<CrystalSubset<'a, G>> {
        self.check_rank(w)?;
        Ok(atom_along(self.graph, w.canonical_word().letters()))
    }

    /// Every atom over `W^λ`, built with atomic operators. Panics if they fail
    /// to partition the crystal.
    pub fn atom_decomposition(&self) -> BTreeMap<WeylElement, CrystalSubset<'a, G>> {
        let atoms = self.atoms.get_or_init(|| {
            let mut atoms = BTreeMap::new();
            let mut covered = 0;
            let mut seen = BTreeSet::new();
            for w in &self.reps {
                let atom = atom_along(self.graph, w.canonical_word().letters()).into_members();
                covered += atom.len();
                seen.extend(atom.iter().copied());
                atoms.insert(w.clone(), atom);
            }
            assert_eq!(covered, seen.len(), "atoms are not pairwise disjoint");
            assert_eq!(
                covered,
                self.graph.num_vertices(),
                "atoms do not cover the crystal"
            );
            atoms
        });
        atoms
            .iter()
            .map(|(w, m)| (w.clone(), CrystalSubset::new(self.graph, m.clone())))
            .collect()
    }

    /// `K_+(x)`: the `w ∈ W^λ` whose atom contains `x`.
    pub fn right_key(&self, x: VertexId) -> WeylElement {
        self.atom_decomposition()
            .into_iter()
            .find(|(_, atom)| atom.contains(x))
            .map(|(w, _)| w)
            .expect("atoms partition the crystal")
    }

    /// `B_𝓘(λ) = ⋃ B_{w^i}(λ)` over the generators of `𝓘`.
    pub fn schubert_crystal(&self, ideal: &LowerOrderIdeal) -> Result<CrystalSubset<'a, G>> {
        let mut out = CrystalSubset::empty(self.graph);
        for g in ideal.generators() {
            self.require_min_rep(g)?;
            out = out.union(&self.demazure_crystal(g)?)?;
        }
        Ok(out)
    }

    /// `⨆ 𝒜_v(λ)` over `v ∈ W^λ ∩ 𝓘`.
    pub fn atoms_below(&self, ideal: &LowerOrderIdeal) -> CrystalSubset<'a, G> {
        let mut members = BTreeSet::new();
        for (w, atom) in self.atom_decomposition() {
            if ideal.contains(&w) {
                members.extend(atom.iter());
            }
        }
        CrystalSubset::new(self.graph, members)
    }

    /// `b_{w·λ}`.
    pub fn extremal_weight_element(&self, w: &WeylElement) -> VertexId {
        extremal_weight_element(self.graph, w.canonical_word().letters())
    }

    /// `v ≤ w` for `v, w ∈ W^λ` as containment of Demazure crystals.
    pub fn contained(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        Ok(self
            .demazure_crystal(v)?
            .is_subset(&self.demazure_crystal(w)?))
    }

    /// `s_i w` compared with `w` for `w ∈ W^λ`, as used by the `𝓕_i` action on
    /// atoms: `Some(s_i w)` when `w < s_i w ∈ W^λ`.
    pub fn atom_successor(&self, i: usize, w: &WeylElement) -> Option<WeylElement> {
        let up = w.left_mul_simple(i);
        (bruhat_lt(w, &up).unwrap_or(false) && is_min_rep(&up, self.shape())).then_some(up)
    }

    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        bruhat_leq(v, w).unwrap_or(false)
    }
}
