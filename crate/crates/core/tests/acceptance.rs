//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS or FAIL line.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use common::{corpus, p};
use crystals::crystal::{levi_branch, verify_axioms};
use crystals::demazure::atom_along;
use crystals::extremal::{
    extremal_closure, find_violation_for, is_extremal, strong_atom_support, weak_atom_positivity,
};
use crystals::golden;
use crystals::poly::{
    apply_word, divided_difference, expand_in_atoms, expand_in_schur, key_polynomial, sum_of_atoms,
    theta,
};
use crystals::tableau::{enumerate_ssyt, Partition, Tableau};
use crystals::tensor::{build_tensor, decompose, demazure_tensor_test};
use crystals::weyl::{all_elements, bruhat_leq, LowerOrderIdeal, WeylElement};
use crystals::{Crystal, CrystalGraph, CrystalSubset, Demazure, HighestWeightCrystal, Polynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vertices(g: &CrystalGraph, ts: &[Tableau]) -> Result<BTreeSet<usize>, String> {
    ts.iter()
        .map(|t| {
            g.vertex_of(t)
                .ok_or_else(|| format!("{t} is not in B{}", g.shape()))
        })
        .collect()
}

fn figure1() -> Outcome {
    let g = CrystalGraph::generate(&golden::figure1::shape());
    let d = Demazure::new(&g);
    let b = d
        .demazure_crystal(&golden::figure1::element())
        .map_err(|e| e.to_string())?;
    ensure(
        b.members() == &vertices(&g, &golden::figure1::vertices())?,
        || format!("B_w = {b:?}"),
    )?;
    let mut union = BTreeSet::new();
    let mut sizes = Vec::new();
    for (w, expected) in golden::figure1::atoms() {
        let atom = d.atom_via_operators(&w).map_err(|e| e.to_string())?;
        ensure(atom.members() == &vertices(&g, &expected)?, || {
            format!("atom {w}: {atom:?}")
        })?;
        ensure(atom == d.atom_via_difference(&w).unwrap(), || {
            format!("atom {w} by difference")
        })?;
        ensure(union.is_disjoint(atom.members()), || "atoms overlap".into())?;
        union.extend(atom.iter());
        sizes.push(atom.len());
    }
    ensure(&union == b.members(), || "atoms do not fill B_w".into())?;
    ensure(sizes == [1, 2, 1, 5], || format!("{sizes:?}"))?;
    Ok(format!("9 tableaux, atom blocks {sizes:?}"))
}

fn character_formula() -> Outcome {
    let mut count = 0;
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        let d = Demazure::new(&g);
        let top = Polynomial::monomial(lambda.parts());
        for w in d.coset_reps() {
            let chi = d.demazure_crystal(w).unwrap().character();
            let pi = apply_word(divided_difference, w.canonical_word().letters(), &top);
            ensure(chi == pi, || format!("{lambda} {w}: {chi} vs {pi}"))?;
            let key = key_polynomial(&w.act_on_composition(lambda.parts()));
            ensure(chi == key, || format!("{lambda} {w}: key mismatch"))?;
            count += 1;
        }
    }
    Ok(format!("{count} Demazure crystals"))
}

fn atomic_operators() -> Outcome {
    let mut count = 0;
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        let d = Demazure::new(&g);
        let top = Polynomial::monomial(lambda.parts());
        for w in d.coset_reps() {
            let by_difference = d.atom_via_difference(w).unwrap();
            for word in w.reduced_words() {
                let atom = atom_along(&g, word.letters());
                ensure(atom == by_difference, || {
                    format!("{lambda} {w} along {word:?}")
                })?;
                let chi = apply_word(theta, word.letters(), &top);
                ensure(atom.character() == chi, || {
                    format!("{lambda} {w}: θ-composition {chi}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (shape, reduced word) pairs"))
}

fn atom_partition() -> Outcome {
    let mut count = 0;
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        let d = Demazure::new(&g);
        let atoms: Vec<(WeylElement, CrystalSubset<'_, CrystalGraph>)> = d
            .coset_reps()
            .iter()
            .map(|w| (w.clone(), d.atom_via_difference(w).unwrap()))
            .collect();
        let mut seen = BTreeSet::new();
        for (w, a) in &atoms {
            ensure(!a.is_empty(), || format!("{lambda}: empty atom {w}"))?;
            ensure(seen.is_disjoint(a.members()), || {
                format!("{lambda}: atom {w} overlaps")
            })?;
            seen.extend(a.iter());
        }
        ensure(seen.len() == g.num_vertices(), || {
            format!("{lambda}: atoms miss vertices")
        })?;
        for w in d.coset_reps() {
            let below: BTreeSet<usize> = atoms
                .iter()
                .filter(|(v, _)| bruhat_leq(v, w).unwrap())
                .flat_map(|(_, a)| a.iter())
                .collect();
            ensure(d.demazure_crystal(w).unwrap().members() == &below, || {
                format!("{lambda} {w}")
            })?;
        }
        count += 1;
    }
    Ok(format!("{count} shapes"))
}

fn antichains(items: &[WeylElement]) -> Vec<Vec<WeylElement>> {
    fn rec(
        items: &[WeylElement],
        start: usize,
        acc: &mut Vec<WeylElement>,
        out: &mut Vec<Vec<WeylElement>>,
    ) {
        out.push(acc.clone());
        for k in start..items.len() {
            let x = &items[k];
            if acc
                .iter()
                .all(|y| !bruhat_leq(x, y).unwrap() && !bruhat_leq(y, x).unwrap())
            {
                acc.push(x.clone());
                rec(items, k + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(items, 0, &mut Vec::new(), &mut out);
    out
}

fn extremality() -> Outcome {
    let (mut schubert, mut pairs) = (0, 0);
    for lambda in corpus() {
        let g = CrystalGraph::generate(&lambda);
        let d = Demazure::new(&g);
        let mut sample = Vec::new();
        for w in d.coset_reps() {
            let b = d.demazure_crystal(w).unwrap();
            ensure(is_extremal(&b), || format!("{lambda}: B_{w} not extremal"))?;
            sample.push(b);
        }
        for gens in antichains(d.coset_reps()) {
            let ideal = LowerOrderIdeal::new(gens, lambda.len()).unwrap();
            let b = d.schubert_crystal(&ideal).unwrap();
            ensure(is_extremal(&b), || {
                format!("{lambda}: Schubert crystal {ideal:?} not extremal")
            })?;
            schubert += 1;
        }
        let step = (g.num_vertices() / 12).max(1);
        for v in (0..g.num_vertices()).step_by(step) {
            sample.push(extremal_closure(&CrystalSubset::singleton(&g, v)));
        }
        for x in &sample {
            for y in &sample {
                ensure(is_extremal(&x.union(y).unwrap()), || {
                    format!("{lambda}: union")
                })?;
                ensure(is_extremal(&x.intersection(y).unwrap()), || {
                    format!("{lambda}: intersection")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{schubert} Schubert crystals, {pairs} sampled pairs"
    ))
}

fn weak_vs_strong() -> Outcome {
    let g = CrystalGraph::generate(&golden::weak_atom::shape());
    let d = Demazure::new(&g);
    let x = g
        .subset_from_tableaux(&golden::weak_atom::subset())
        .map_err(|e| e.to_string())?;
    ensure(x.len() == 5, || "subset size".into())?;
    let report = weak_atom_positivity(&x.character()).map_err(|e| e.to_string())?;
    let want: BTreeMap<Vec<u32>, i64> = golden::weak_atom::expansion().into_iter().collect();
    ensure(report.expansion == want, || {
        format!("{:?}", report.expansion)
    })?;
    ensure(strong_atom_support(&x, &d).is_none(), || {
        "strongly atom-positive".into()
    })?;
    Ok(format!(
        "{:?}, not strongly atom-positive",
        report.expansion
    ))
}

fn figure2() -> Outcome {
    let g = CrystalGraph::generate(&golden::figure2::shape());
    let d = Demazure::new(&g);
    let b = d.demazure_crystal(&golden::figure2::element()).unwrap();
    ensure(
        b.members() == &vertices(&g, &golden::figure2::demazure_crystal())?,
        || format!("{b:?}"),
    )?;
    let x = g
        .subset_from_tableaux(&golden::figure2::subset())
        .map_err(|e| e.to_string())?;
    ensure(x.len() == 17 && x.is_subset(&b), || "subset".into())?;
    ensure(is_extremal(&x), || "not extremal".into())?;
    let chi = x.character();
    let e = expand_in_atoms(&chi).map_err(|e| e.to_string())?;
    ensure(sum_of_atoms(&e) == chi, || {
        "expansion does not reassemble the character".into()
    })?;
    // The printed list has one term of the wrong degree; everything else agrees.
    let solver: BTreeMap<Vec<u32>, i64> = [
        (vec![3, 2, 0, 0], 1),
        (vec![3, 0, 2, 0], 1),
        (vec![0, 3, 2, 0], 1),
        (vec![3, 0, 0, 2], 1),
        (vec![0, 3, 0, 2], 1),
        (vec![1, 3, 0, 1], -1),
    ]
    .into_iter()
    .collect();
    ensure(e == solver, || format!("{e:?}"))?;
    ensure(
        e.get(&golden::figure2::negative_term()) == Some(&-1),
        || "no -1 on (1,3,0,1)".into(),
    )?;
    ensure(e.values().any(|&c| c < 0), || {
        "no negative coefficient".into()
    })?;
    Ok(format!("{e:?}"))
}

fn lowest_obstruction() -> Outcome {
    let g = CrystalGraph::generate(&golden::lowest_obstruction::shape());
    let x = g
        .vertex_of(&golden::lowest_obstruction::x())
        .ok_or("x missing")?;
    ensure(
        g.lower(1, x).is_none()
            && g.lower(2, x).is_none()
            && g.raise(3, x).is_none()
            && g.raise(4, x).is_none()
            && g.raise(5, x).is_none(),
        || "x is not at the end of its strings".into(),
    )?;
    let [a, b, c] = golden::lowest_obstruction::chain();
    let e2 = g.raise(2, x).ok_or("e2 x = 0")?;
    ensure(g.tableau(e2) == &a, || format!("e2 x = {}", g.tableau(e2)))?;
    let f3e2 = g.lower(3, e2).ok_or("f3 e2 x = 0")?;
    ensure(g.tableau(f3e2) == &b, || {
        format!("f3 e2 x = {}", g.tableau(f3e2))
    })?;
    let f2f3e2 = g.lower(2, f3e2).ok_or("f2 f3 e2 x = 0")?;
    ensure(g.tableau(f2f3e2) == &c, || {
        format!("f2 f3 e2 x = {}", g.tableau(f2f3e2))
    })?;
    let f3 = g.lower(3, x).ok_or("f3 x = 0")?;
    ensure(f3 == f2f3e2, || "f2 f3 e2 x != f3 x".into())?;
    let closure = extremal_closure(&CrystalSubset::singleton(&g, x));
    ensure(
        closure.contains(f3) && closure.contains(e2) && closure.contains(f3e2),
        || "closure".into(),
    )?;
    Ok(format!(
        "closure of {{x}} has {} vertices and contains f3 x",
        closure.len()
    ))
}

fn non_unique() -> Outcome {
    let g = CrystalGraph::generate(&golden::non_unique::shape());
    let labels = golden::non_unique::levi_labels();
    let x = levi_branch(&g, &labels)
        .into_iter()
        .find(|c| c.contains(g.highest()))
        .unwrap();
    let bounded = x
        .iter()
        .all(|v| g.tableau(v).rows().iter().flatten().all(|&e| e <= 5));
    ensure(x.len() == 126 && bounded, || {
        format!("X has {} vertices", x.len())
    })?;
    let y1 = g
        .subset_from_tableaux(&golden::non_unique::y1())
        .map_err(|e| e.to_string())?;
    let y2 = g
        .subset_from_tableaux(&golden::non_unique::y2())
        .map_err(|e| e.to_string())?;
    ensure(y1.len() == 12 && y2.len() == 12, || "Y sizes".into())?;
    let a = x.union(&y1).unwrap();
    let b = x.union(&y2).unwrap();
    ensure(a.len() == 138 && b.len() == 138, || {
        "X and Y overlap".into()
    })?;
    ensure(is_extremal(&a), || "X ⊔ Y1 not extremal".into())?;
    ensure(is_extremal(&b), || "X ⊔ Y2 not extremal".into())?;
    ensure(a.character() == b.character(), || {
        "characters differ".into()
    })?;
    let differ = a.difference(&b).unwrap().len() + b.difference(&a).unwrap().len();
    ensure(differ == 4, || format!("differ in {differ}"))?;
    Ok(
        "X has 126 vertices, X ⊔ Y1 and X ⊔ Y2 extremal with equal characters, 4 vertices differ"
            .into(),
    )
}

fn tensor_adg() -> Outcome {
    let b = CrystalGraph::generate(&p(&[1, 0]));
    let d = decompose(&build_tensor(&b, &b).unwrap()).map_err(|e| e.to_string())?;
    let want = BTreeMap::from([(p(&[2, 0]), 1), (p(&[1, 1]), 1)]);
    ensure(d == want, || format!("{d:?}"))?;

    let shapes = [p(&[1, 0, 0]), p(&[2, 0, 0]), p(&[1, 1, 0]), p(&[2, 1, 0])];
    let s3 = all_elements(3);
    let (mut cases, mut extremal) = (0, 0);
    for lambda in &shapes {
        for mu in &shapes {
            let g = CrystalGraph::generate(lambda);
            let h = CrystalGraph::generate(mu);
            let product =
                &CrystalSubset::full(&g).character() * &CrystalSubset::full(&h).character();
            let schur: BTreeMap<Partition, usize> = expand_in_schur(&product)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|(nu, c)| (nu, c as usize))
                .collect();
            let d = decompose(&build_tensor(&g, &h).unwrap()).map_err(|e| e.to_string())?;
            ensure(d == schur, || {
                format!("{lambda} ⊗ {mu}: {d:?} vs {schur:?}")
            })?;
            for v in &s3 {
                for w in &s3 {
                    let verdict =
                        demazure_tensor_test(v, lambda, w, mu).map_err(|e| e.to_string())?;
                    ensure(verdict.extremal == verdict.direct_sum_of_demazure, || {
                        format!("B_{v}{lambda} ⊗ B_{w}{mu}: {verdict:?}")
                    })?;
                    cases += 1;
                    extremal += usize::from(verdict.extremal);
                }
            }
        }
    }
    Ok(format!("{cases} cases agree ({extremal} extremal)"))
}

fn axioms() -> Outcome {
    let mut shapes = corpus();
    shapes.push(p(&[3, 1, 1, 0, 0, 0]));
    for lambda in &shapes {
        let g = CrystalGraph::generate(lambda);
        verify_axioms(&g).map_err(|e| format!("{lambda}: {e}"))?;
        let mut ts = g.tableaux().to_vec();
        ts.sort();
        ensure(ts == enumerate_ssyt(lambda), || {
            format!("{lambda}: vertex set")
        })?;
    }
    let size = |s: &[u32]| CrystalGraph::generate(&p(s)).num_vertices();
    ensure(size(&[3, 2, 0]) == 15, || "|B(3,2,0)|".into())?;
    ensure(size(&[3, 1, 1, 0, 0, 0]) == 336, || {
        "|B(3,1,1,0,0,0)|".into()
    })?;
    let mut tensors = 0;
    let small: Vec<Partition> = corpus()
        .into_iter()
        .filter(|l| l.len() <= 3 && l.size() <= 3)
        .collect();
    for lambda in &small {
        for mu in small.iter().filter(|m| m.len() == lambda.len()) {
            let t =
                build_tensor(&CrystalGraph::generate(lambda), &CrystalGraph::generate(mu)).unwrap();
            verify_axioms(&t).map_err(|e| format!("{lambda} ⊗ {mu}: {e}"))?;
            tensors += 1;
        }
    }
    Ok(format!(
        "{} crystals, {tensors} tensor products",
        shapes.len()
    ))
}

fn levi() -> Outcome {
    let g = CrystalGraph::generate(&golden::non_unique::shape());
    let labels = golden::non_unique::levi_labels();
    let comps = levi_branch(&g, &labels);
    let top = comps.iter().find(|c| c.contains(g.highest())).unwrap();
    ensure(top.len() == 126, || {
        format!("component of b has {}", top.len())
    })?;
    let x = top.clone();
    let mut checked = 0;
    for y in [golden::non_unique::y1(), golden::non_unique::y2()] {
        let s = x.union(&g.subset_from_tableaux(&y).unwrap()).unwrap();
        for piece in s.components(&labels) {
            ensure(comps.iter().any(|c| piece.is_subset(c)), || {
                "piece spans components".into()
            })?;
            ensure(find_violation_for(&piece, &labels).is_none(), || {
                format!("{piece:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} branched pieces extremal"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("atom decomposition of B_{s1 s2}(3,2,0)", figure1),
        ("refined Demazure character formula", character_formula),
        ("atomic operators", atomic_operators),
        ("atom partition", atom_partition),
        ("extremality of Demazure and Schubert crystals", extremality),
        ("weak versus strong atom-positivity", weak_vs_strong),
        ("extremal but not weakly atom-positive", figure2),
        ("lowest weight obstruction", lowest_obstruction),
        ("character non-uniqueness", non_unique),
        ("tensor products and Demazure factors", tensor_adg),
        ("crystal axioms and enumeration", axioms),
        ("Levi branching", levi),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {reason}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
