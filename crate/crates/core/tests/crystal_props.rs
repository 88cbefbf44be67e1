mod common;

use std::collections::BTreeMap;

use common::{corpus, p};
use crystals::crystal::{levi_branch, verify_axioms};
use crystals::poly::schur_polynomial;
use crystals::tableau::{enumerate_ssyt, Tableau};
use crystals::{Crystal, CrystalGraph, CrystalSubset, HighestWeightCrystal};

/// Column reading word (columns left to right, each read top to bottom)
/// with the cell each letter came from.
fn reading_word(t: &Tableau) -> Vec<(u8, (usize, usize))> {
    let rows = t.rows();
    let width = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for c in 0..width {
        for r in (0..rows.len()).rev() {
            if let Some(&x) = rows[r].get(c) {
                out.push((x, (r, c)));
            }
        }
    }
    out
}

/// Unpaired letters by repeatedly cancelling an adjacent `i+1` followed by
/// `i` until no such pair remains.
fn unpaired(t: &Tableau, i: u8) -> Vec<(u8, (usize, usize))> {
    let mut word: Vec<_> = reading_word(t)
        .into_iter()
        .filter(|&(x, _)| x == i || x == i + 1)
        .collect();
    loop {
        let hit = word.windows(2).position(|w| w[0].0 == i + 1 && w[1].0 == i);
        match hit {
            Some(k) => {
                word.drain(k..k + 2);
            }
            None => return word,
        }
    }
}

fn replace(t: &Tableau, (r, c): (usize, usize), value: u8) -> Tableau {
    let mut rows = t.rows().to_vec();
    rows[r][c] = value;
    Tableau::new(t.shape().clone(), rows).expect("operator keeps the filling semistandard")
}

#[test]
fn generation_matches_enumeration() {
    let mut shapes = corpus();
    shapes.push(p(&[3, 1, 1, 0, 0, 0]));
    for lambda in shapes {
        let g = CrystalGraph::generate(&lambda);
        let mut generated = g.tableaux().to_vec();
        generated.sort();
        assert_eq!(generated, enumerate_ssyt(&lambda), "{lambda}");
    }
    assert_eq!(CrystalGraph::generate(&p(&[3, 2, 0])).num_vertices(), 15);
    assert_eq!(
        CrystalGraph::generate(&p(&[3, 1, 1, 0, 0, 0])).num_vertices(),
        336
    );
}

#[test]
fn axioms_hold() {
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        verify_axioms(&g).unwrap_or_else(|e| panic!("{lambda}: {e}"));
        assert_eq!(g.highest_weight_vertices(), vec![g.highest()]);
    }
}

#[test]
fn pairing_matches_bracket_cancellation() {
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        for t in g.tableaux() {
            for i in 1..lambda.len() {
                let left = unpaired(t, i as u8);
                let eps = left.iter().filter(|&&(x, _)| x == i as u8 + 1).count();
                let phi = left.iter().filter(|&&(x, _)| x == i as u8).count();
                assert_eq!(t.string_stats(i), (eps, phi), "{t} at {i}");

                let lowered = left
                    .iter()
                    .rev()
                    .find(|&&(x, _)| x == i as u8)
                    .map(|&(_, cell)| replace(t, cell, i as u8 + 1));
                assert_eq!(t.lower(i), lowered, "f_{i} {t}");
                let raised = left
                    .iter()
                    .find(|&&(x, _)| x == i as u8 + 1)
                    .map(|&(_, cell)| replace(t, cell, i as u8));
                assert_eq!(t.raise(i), raised, "e_{i} {t}");
            }
        }
    }
}

#[test]
fn full_character_is_schur() {
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        let chi = CrystalSubset::full(&g).character();
        assert!(chi.is_symmetric(), "{lambda}");
        assert_eq!(chi, schur_polynomial(&lambda));
    }
}

/// Branching to all labels but the last groups tableaux by where the
/// largest entry sits.
#[test]
fn maximal_levi_branching() {
    for lambda in corpus().into_iter().filter(|l| l.len() >= 3) {
        let n = lambda.len();
        let g = CrystalGraph::generate(&lambda);
        let labels: Vec<usize> = (1..n - 1).collect();
        let comps = levi_branch(&g, &labels);
        let mut by_cells: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
        for v in 0..g.num_vertices() {
            let t = g.tableau(v);
            let cells: Vec<(usize, usize)> = t
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(_, &x)| x as usize == n)
                        .map(move |(c, _)| (r, c))
                })
                .collect();
            by_cells.entry(cells).or_default().push(v);
        }
        let mut expected: Vec<Vec<usize>> = by_cells.into_values().collect();
        expected.sort();
        let mut got: Vec<Vec<usize>> = comps.iter().map(|c| c.iter().collect()).collect();
        got.sort();
        assert_eq!(got, expected, "{lambda}");
    }
}

#[test]
fn example_branch_component() {
    let g = CrystalGraph::generate(&p(&[3, 1, 1, 0, 0, 0]));
    let comps = levi_branch(&g, &[1, 2, 3, 4]);
    let top = comps.iter().find(|c| c.contains(g.highest())).unwrap();
    assert_eq!(top.len(), 126);
}
