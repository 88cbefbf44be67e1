//! Hand-entered reference data for the worked examples reproduced by the
//! `reproduce` targets. Rows are listed bottom row first.

use crate::tableau::{Partition, Tableau};
use crate::weyl::WeylElement;

fn tab(rows: &[&[u8]], n: usize) -> Tableau {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect(), n)
        .expect("golden tableau is valid")
}

fn tabs(list: &[&[&[u8]]], n: usize) -> Vec<Tableau> {
    list.iter().map(|rows| tab(rows, n)).collect()
}

fn word(letters: &[usize], n: usize) -> WeylElement {
    WeylElement::from_word(letters, n).expect("golden word is valid")
}

/// A labeled lowering edge `f_i(from) = to`.
#[derive(Clone, Debug)]
pub struct Edge {
    pub from: Tableau,
    pub index: usize,
    pub to: Tableau,
}

type EdgeSpec<'a> = (&'a [&'a [u8]], usize, &'a [&'a [u8]]);

fn edges(list: &[EdgeSpec], n: usize) -> Vec<Edge> {
    list.iter()
        .map(|&(from, index, to)| Edge {
            from: tab(from, n),
            index,
            to: tab(to, n),
        })
        .collect()
}

pub mod figure1 {
    use super::*;

    pub fn shape() -> Partition {
        Partition::new(vec![3, 2, 0]).unwrap()
    }

    /// `s1 s2`: `s2` applied first.
    pub fn element() -> WeylElement {
        word(&[2, 1], 3)
    }

    pub fn vertices() -> Vec<Tableau> {
        tabs(
            &[
                &[&[1, 1, 1], &[2, 2]],
                &[&[1, 1, 1], &[2, 3]],
                &[&[1, 1, 1], &[3, 3]],
                &[&[1, 1, 2], &[2, 2]],
                &[&[1, 1, 2], &[2, 3]],
                &[&[1, 2, 2], &[2, 3]],
                &[&[1, 1, 2], &[3, 3]],
                &[&[1, 2, 2], &[3, 3]],
                &[&[2, 2, 2], &[3, 3]],
            ],
            3,
        )
    }

    /// Atom blocks in the order drawn: `id`, `s2`, `s1`, `s1 s2`.
    pub fn atoms() -> Vec<(WeylElement, Vec<Tableau>)> {
        vec![
            (WeylElement::identity(3), tabs(&[&[&[1, 1, 1], &[2, 2]]], 3)),
            (
                word(&[2], 3),
                tabs(&[&[&[1, 1, 1], &[2, 3]], &[&[1, 1, 1], &[3, 3]]], 3),
            ),
            (word(&[1], 3), tabs(&[&[&[1, 1, 2], &[2, 2]]], 3)),
            (
                word(&[2, 1], 3),
                tabs(
                    &[
                        &[&[1, 1, 2], &[2, 3]],
                        &[&[1, 2, 2], &[2, 3]],
                        &[&[1, 1, 2], &[3, 3]],
                        &[&[1, 2, 2], &[3, 3]],
                        &[&[2, 2, 2], &[3, 3]],
                    ],
                    3,
                ),
            ),
        ]
    }

    pub fn edges() -> Vec<Edge> {
        super::edges(
            &[
                (&[&[1, 1, 1], &[2, 2]], 2, &[&[1, 1, 1], &[2, 3]]),
                (&[&[1, 1, 1], &[2, 3]], 2, &[&[1, 1, 1], &[3, 3]]),
                (&[&[1, 1, 1], &[2, 2]], 1, &[&[1, 1, 2], &[2, 2]]),
                (&[&[1, 1, 1], &[2, 3]], 1, &[&[1, 1, 2], &[2, 3]]),
                (&[&[1, 1, 2], &[2, 3]], 1, &[&[1, 2, 2], &[2, 3]]),
                (&[&[1, 1, 2], &[2, 3]], 2, &[&[1, 1, 2], &[3, 3]]),
                (&[&[1, 1, 1], &[3, 3]], 1, &[&[1, 1, 2], &[3, 3]]),
                (&[&[1, 1, 2], &[3, 3]], 1, &[&[1, 2, 2], &[3, 3]]),
                (&[&[1, 2, 2], &[3, 3]], 1, &[&[2, 2, 2], &[3, 3]]),
            ],
            3,
        )
    }
}

pub mod weak_atom {
    use super::*;

    pub fn shape() -> Partition {
        Partition::new(vec![3, 2, 0]).unwrap()
    }

    pub fn subset() -> Vec<Tableau> {
        tabs(
            &[
                &[&[1, 1, 1], &[2, 2]],
                &[&[1, 1, 1], &[2, 3]],
                &[&[1, 1, 2], &[2, 3]],
                &[&[1, 2, 2], &[2, 3]],
                &[&[1, 1, 1], &[3, 3]],
            ],
            3,
        )
    }

    /// Atom expansion of the character, keyed by composition.
    pub fn expansion() -> Vec<(Vec<u32>, i64)> {
        vec![(vec![3, 2, 0], 1), (vec![3, 0, 2], 1), (vec![1, 3, 1], 1)]
    }

    pub fn edges() -> Vec<Edge> {
        super::edges(
            &[
                (&[&[1, 1, 1], &[2, 2]], 2, &[&[1, 1, 1], &[2, 3]]),
                (&[&[1, 1, 1], &[2, 3]], 2, &[&[1, 1, 1], &[3, 3]]),
                (&[&[1, 1, 1], &[2, 3]], 1, &[&[1, 1, 2], &[2, 3]]),
                (&[&[1, 1, 2], &[2, 3]], 1, &[&[1, 2, 2], &[2, 3]]),
            ],
            3,
        )
    }
}

pub mod figure2 {
    use super::*;

    pub fn shape() -> Partition {
        Partition::new(vec![3, 2, 0, 0]).unwrap()
    }

    /// `s1 s3 s2`: `s2` first, then `s3`, then `s1`.
    pub fn element() -> WeylElement {
        word(&[2, 3, 1], 4)
    }

    pub fn demazure_crystal() -> Vec<Tableau> {
        let mut all = subset();
        all.extend(excluded());
        all
    }

    /// Vertices of the Demazure crystal left out of the highlighted subset.
    pub fn excluded() -> Vec<Tableau> {
        tabs(
            &[
                &[&[1, 1, 2], &[2, 2]],
                &[&[1, 1, 2], &[2, 4]],
                &[&[1, 2, 2], &[2, 4]],
            ],
            4,
        )
    }

    pub fn subset() -> Vec<Tableau> {
        tabs(
            &[
                &[&[1, 1, 1], &[2, 2]],
                &[&[1, 1, 1], &[2, 3]],
                &[&[1, 1, 2], &[2, 3]],
                &[&[1, 2, 2], &[2, 3]],
                &[&[1, 1, 1], &[3, 3]],
                &[&[1, 1, 2], &[3, 3]],
                &[&[1, 2, 2], &[3, 3]],
                &[&[2, 2, 2], &[3, 3]],
                &[&[1, 1, 1], &[2, 4]],
                &[&[1, 1, 1], &[3, 4]],
                &[&[1, 1, 1], &[4, 4]],
                &[&[1, 1, 2], &[3, 4]],
                &[&[1, 2, 2], &[3, 4]],
                &[&[2, 2, 2], &[3, 4]],
                &[&[1, 1, 2], &[4, 4]],
                &[&[1, 2, 2], &[4, 4]],
                &[&[2, 2, 2], &[4, 4]],
            ],
            4,
        )
    }

    /// `f_1^2 f_2 b_λ`, a lowest weight element of the subset whose weight
    /// is not extremal.
    pub fn non_extremal_lowest() -> Tableau {
        tab(&[&[1, 2, 2], &[2, 3]], 4)
    }

    /// The composition whose atom appears with coefficient -1.
    pub fn negative_term() -> Vec<u32> {
        vec![1, 3, 0, 1]
    }

    pub fn edges() -> Vec<Edge> {
        super::edges(
            &[
                (&[&[1, 1, 1], &[2, 2]], 2, &[&[1, 1, 1], &[2, 3]]),
                (&[&[1, 1, 1], &[2, 3]], 2, &[&[1, 1, 1], &[3, 3]]),
                (&[&[1, 1, 2], &[2, 3]], 2, &[&[1, 1, 2], &[3, 3]]),
                (&[&[1, 1, 1], &[2, 2]], 1, &[&[1, 1, 2], &[2, 2]]),
                (&[&[1, 1, 1], &[2, 3]], 1, &[&[1, 1, 2], &[2, 3]]),
                (&[&[1, 1, 2], &[2, 3]], 1, &[&[1, 2, 2], &[2, 3]]),
                (&[&[1, 1, 1], &[3, 3]], 1, &[&[1, 1, 2], &[3, 3]]),
                (&[&[1, 1, 2], &[3, 3]], 1, &[&[1, 2, 2], &[3, 3]]),
                (&[&[1, 2, 2], &[3, 3]], 1, &[&[2, 2, 2], &[3, 3]]),
                (&[&[1, 1, 1], &[2, 4]], 1, &[&[1, 1, 2], &[2, 4]]),
                (&[&[1, 1, 2], &[2, 4]], 1, &[&[1, 2, 2], &[2, 4]]),
                (&[&[1, 1, 1], &[3, 3]], 3, &[&[1, 1, 1], &[3, 4]]),
                (&[&[1, 1, 1], &[2, 3]], 3, &[&[1, 1, 1], &[2, 4]]),
                (&[&[1, 1, 1], &[3, 4]], 3, &[&[1, 1, 1], &[4, 4]]),
                (&[&[1, 1, 2], &[2, 3]], 3, &[&[1, 1, 2], &[2, 4]]),
                (&[&[1, 2, 2], &[2, 3]], 3, &[&[1, 2, 2], &[2, 4]]),
                (&[&[1, 1, 1], &[3, 4]], 1, &[&[1, 1, 2], &[3, 4]]),
                (&[&[1, 1, 2], &[3, 4]], 1, &[&[1, 2, 2], &[3, 4]]),
                (&[&[1, 2, 2], &[3, 4]], 1, &[&[2, 2, 2], &[3, 4]]),
                (&[&[1, 1, 1], &[4, 4]], 1, &[&[1, 1, 2], &[4, 4]]),
                (&[&[1, 1, 2], &[4, 4]], 1, &[&[1, 2, 2], &[4, 4]]),
                (&[&[1, 2, 2], &[4, 4]], 1, &[&[2, 2, 2], &[4, 4]]),
                (&[&[1, 1, 1], &[2, 4]], 2, &[&[1, 1, 1], &[3, 4]]),
                (&[&[1, 1, 2], &[3, 3]], 3, &[&[1, 1, 2], &[3, 4]]),
                (&[&[1, 1, 2], &[3, 4]], 3, &[&[1, 1, 2], &[4, 4]]),
                (&[&[1, 2, 2], &[3, 3]], 3, &[&[1, 2, 2], &[3, 4]]),
                (&[&[1, 2, 2], &[3, 4]], 3, &[&[1, 2, 2], &[4, 4]]),
                (&[&[2, 2, 2], &[3, 3]], 3, &[&[2, 2, 2], &[3, 4]]),
                (&[&[2, 2, 2], &[3, 4]], 3, &[&[2, 2, 2], &[4, 4]]),
            ],
            4,
        )
    }
}

pub mod atom_not_extremal {
    use super::*;

    pub fn shape() -> Partition {
        Partition::new(vec![3, 2, 1, 0]).unwrap()
    }

    /// The three commuting-pattern labels `(i, j, k)`.
    pub fn labels() -> (usize, usize, usize) {
        (1, 2, 3)
    }
}

pub mod lowest_obstruction {
    use super::*;

    const N: usize = 6;

    pub fn shape() -> Partition {
        Partition::new(vec![4, 4, 3, 2, 0, 0]).unwrap()
    }

    pub fn x() -> Tableau {
        tab(&[&[1, 2, 3, 3], &[2, 3, 4, 4], &[3, 4, 5], &[5, 6]], N)
    }

    /// `e_2 x`, `f_3 e_2 x`, `f_2 f_3 e_2 x` as displayed.
    pub fn chain() -> [Tableau; 3] {
        [
            tab(&[&[1, 2, 2, 3], &[2, 3, 4, 4], &[3, 4, 5], &[5, 6]], N),
            tab(&[&[1, 2, 2, 3], &[2, 3, 4, 4], &[4, 4, 5], &[5, 6]], N),
            tab(&[&[1, 2, 3, 3], &[2, 3, 4, 4], &[4, 4, 5], &[5, 6]], N),
        ]
    }
}

pub mod non_unique {
    use super::*;

    const N: usize = 6;

    pub fn shape() -> Partition {
        Partition::new(vec![3, 1, 1, 0, 0, 0]).unwrap()
    }

    /// Labels kept when branching to the component `X`.
    pub fn levi_labels() -> Vec<usize> {
        vec![1, 2, 3, 4]
    }

    fn common() -> Vec<Tableau> {
        tabs(
            &[
                &[&[1, 1, 1], &[2], &[6]],
                &[&[1, 1, 2], &[2], &[6]],
                &[&[1, 2, 2], &[2], &[6]],
                &[&[1, 1, 3], &[2], &[6]],
                &[&[1, 1, 3], &[3], &[6]],
                &[&[1, 2, 3], &[2], &[6]],
                &[&[1, 3, 3], &[2], &[6]],
                &[&[1, 3, 3], &[3], &[6]],
                &[&[1, 1, 6], &[2], &[3]],
                &[&[1, 2, 6], &[2], &[3]],
            ],
            N,
        )
    }

    pub fn y1() -> Vec<Tableau> {
        let mut y = common();
        y.extend(tabs(
            &[&[&[1, 1, 6], &[2], &[4]], &[&[1, 2, 6], &[2], &[4]]],
            N,
        ));
        y
    }

    pub fn y2() -> Vec<Tableau> {
        let mut y = common();
        y.extend(tabs(
            &[&[&[1, 1, 4], &[2], &[6]], &[&[1, 2, 4], &[2], &[6]]],
            N,
        ));
        y
    }
}
