mod common;

use std::collections::BTreeMap;

use common::p;
use crystals::crystal::verify_axioms;
use crystals::poly::expand_in_schur;
use crystals::tableau::Partition;
use crystals::tensor::{build_tensor, component_isomorphism, decompose, tensor_lower};
use crystals::{Crystal, CrystalGraph, CrystalSubset, HighestWeightCrystal};

fn small_shapes() -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for size in 0..=3 {
            out.extend(Partition::all_of_size(size, n));
        }
    }
    out
}

#[test]
fn products_behave() {
    let shapes = small_shapes();
    for lambda in &shapes {
        for mu in shapes.iter().filter(|m| m.len() == lambda.len()) {
            let g = CrystalGraph::generate(lambda);
            let h = CrystalGraph::generate(mu);
            let t = build_tensor(&g, &h).unwrap();
            assert_eq!(t.num_vertices(), g.num_vertices() * h.num_vertices());
            verify_axioms(&t).unwrap_or_else(|e| panic!("{lambda} ⊗ {mu}: {e}"));

            let chi = CrystalSubset::full(&t).character();
            let product =
                &CrystalSubset::full(&g).character() * &CrystalSubset::full(&h).character();
            assert_eq!(chi, product);

            let d = decompose(&t).unwrap();
            let schur: BTreeMap<Partition, usize> = expand_in_schur(&product)
                .unwrap()
                .into_iter()
                .map(|(nu, c)| (nu, usize::try_from(c).unwrap()))
                .collect();
            assert_eq!(d, schur, "{lambda} ⊗ {mu}");

            let swapped = decompose(&build_tensor(&h, &g).unwrap()).unwrap();
            assert_eq!(d, swapped);

            for c in t.components() {
                let source = c
                    .iter()
                    .find(|&v| t.indices().all(|i| t.raise(i, v).is_none()))
                    .unwrap();
                let nu = Partition::new(t.weight(source)).unwrap();
                let target = CrystalGraph::generate(&nu);
                let iso = component_isomorphism(&t, source, &target, target.highest())
                    .expect("isomorphic");
                assert_eq!(iso.len(), c.len());
            }
        }
    }
}

#[test]
fn lowest_pair_is_killed() {
    for lambda in small_shapes() {
        let g = CrystalGraph::generate(&lambda);
        let low = (0..g.num_vertices())
            .find(|&v| g.indices().all(|i| g.lower(i, v).is_none()))
            .unwrap();
        for i in g.indices() {
            assert_eq!(tensor_lower(&g, &g, i, (low, low)), None);
        }
    }
}

#[test]
fn isomorphism_rejects_wrong_target() {
    let b = CrystalGraph::generate(&p(&[1, 0, 0]));
    let t = build_tensor(&b, &b).unwrap();
    let wrong = CrystalGraph::generate(&p(&[1, 1, 0]));
    assert!(component_isomorphism(&t, 0, &wrong, wrong.highest()).is_none());
}
