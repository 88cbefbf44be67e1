//! Recomputes the worked examples and compares them with [`crate::golden`].

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::crystal::{
    levi_branch, Crystal, CrystalGraph, CrystalSubset, HighestWeightCrystal, VertexId,
};
use crate::demazure::Demazure;
use crate::error::{Error, Result};
use crate::extremal::{
    extremal_closure, find_violation, find_violation_for, is_extremal, lowest_weight_elements,
    strong_atom_support, weak_atom_positivity,
};
use crate::golden::{self, Edge};
use crate::tableau::Tableau;
use crate::weyl::{is_min_rep, WeylElement};

pub const TARGETS: [&str; 6] = [
    "figure1",
    "figure2",
    "ex-weak-atom",
    "ex-4.5",
    "ex-4.8",
    "ex-4.9",
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub target: String,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(target: &str) -> Self {
        Report {
            target: target.to_string(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.target)
    }
}

pub fn reproduce(target: &str) -> Result<Report> {
    match target {
        "figure1" => Ok(figure1()),
        "figure2" => Ok(figure2()),
        "ex-weak-atom" => Ok(weak_atom()),
        "ex-4.5" => Ok(atom_not_extremal()),
        "ex-4.8" => Ok(lowest_obstruction()),
        "ex-4.9" => Ok(non_unique()),
        other => Err(Error::Parse(format!(
            "unknown target '{other}', expected one of {}",
            TARGETS.join(", ")
        ))),
    }
}

fn vertex_set(g: &CrystalGraph, ts: &[Tableau]) -> Option<BTreeSet<VertexId>> {
    ts.iter().map(|t| g.vertex_of(t)).collect()
}

fn describe(g: &CrystalGraph, set: &BTreeSet<VertexId>) -> String {
    let labels: Vec<String> = set.iter().map(|&v| g.tableau(v).to_string()).collect();
    format!("{{{}}}", labels.join(", "))
}

fn check_edges(report: &mut Report, g: &CrystalGraph, edges: &[Edge]) {
    let bad: Vec<String> = edges
        .iter()
        .filter(|e| {
            let from = g.vertex_of(&e.from);
            from.and_then(|v| g.lower(e.index, v)) != g.vertex_of(&e.to)
        })
        .map(|e| format!("f_{}({}) != {}", e.index, e.from, e.to))
        .collect();
    let detail = if bad.is_empty() {
        format!("{} drawn edges", edges.len())
    } else {
        bad.join("; ")
    };
    report.check("edges", bad.is_empty(), detail);
}

fn compare_sets(
    report: &mut Report,
    name: &str,
    g: &CrystalGraph,
    got: &BTreeSet<VertexId>,
    expected: &[Tableau],
) {
    match vertex_set(g, expected) {
        Some(want) if &want == got => report.check(name, true, format!("{} vertices", got.len())),
        Some(want) => report.check(
            name,
            false,
            format!(
                "computed {} but expected {}",
                describe(g, got),
                describe(g, &want)
            ),
        ),
        None => report.check(name, false, "golden tableau missing from the crystal"),
    }
}

fn figure1() -> Report {
    let mut r = Report::new("figure1");
    let g = CrystalGraph::generate(&golden::figure1::shape());
    let d = Demazure::new(&g);
    let w = golden::figure1::element();
    let dem = d.demazure_crystal(&w).expect("minimal representative");
    compare_sets(
        &mut r,
        "demazure crystal",
        &g,
        dem.members(),
        &golden::figure1::vertices(),
    );
    check_edges(&mut r, &g, &golden::figure1::edges());

    let mut sizes = Vec::new();
    for (v, expected) in golden::figure1::atoms() {
        let atom = d.atom_via_operators(&v).expect("valid element");
        let by_difference = d.atom_via_difference(&v).expect("minimal representative");
        sizes.push(atom.len().to_string());
        compare_sets(
            &mut r,
            &format!("atom {}", v.to_word_string()),
            &g,
            atom.members(),
            &expected,
        );
        r.check(
            &format!("atom {} by difference", v.to_word_string()),
            atom == by_difference,
            "operators and difference agree",
        );
    }
    r.check(
        "atom block sizes",
        sizes == ["1", "2", "1", "5"],
        sizes.join(","),
    );
    r
}

fn weak_atom() -> Report {
    let mut r = Report::new("ex-weak-atom");
    let g = CrystalGraph::generate(&golden::weak_atom::shape());
    let d = Demazure::new(&g);
    check_edges(&mut r, &g, &golden::weak_atom::edges());
    let x = match g.subset_from_tableaux(&golden::weak_atom::subset()) {
        Ok(x) => x,
        Err(e) => {
            r.check("subset", false, e.to_string());
            return r;
        }
    };
    r.check("extremal", is_extremal(&x), format!("{} vertices", x.len()));
    match weak_atom_positivity(&x.character()) {
        Ok(report) => {
            let want = golden::weak_atom::expansion().into_iter().collect();
            r.check(
                "atom expansion",
                report.expansion == want,
                format!("{:?}", report.expansion),
            );
            r.check("weakly atom-positive", report.positive, "");
        }
        Err(e) => r.check("atom expansion", false, e.to_string()),
    }
    r.check(
        "not strongly atom-positive",
        strong_atom_support(&x, &d).is_none(),
        "meets some atom partially",
    );
    r
}

fn figure2() -> Report {
    let mut r = Report::new("figure2");
    let g = CrystalGraph::generate(&golden::figure2::shape());
    let d = Demazure::new(&g);
    let dem = d
        .demazure_crystal(&golden::figure2::element())
        .expect("minimal representative");
    compare_sets(
        &mut r,
        "demazure crystal",
        &g,
        dem.members(),
        &golden::figure2::demazure_crystal(),
    );
    check_edges(&mut r, &g, &golden::figure2::edges());

    let atom = d
        .atom_via_operators(&golden::figure2::element())
        .expect("valid element");
    r.check(
        "top atom disconnected",
        !atom.is_connected(),
        format!("{} vertices", atom.len()),
    );

    let x = g
        .subset_from_tableaux(&golden::figure2::subset())
        .expect("golden tableaux");
    r.check("subset size", x.len() == 17, x.len().to_string());
    let violation = find_violation(&x);
    let detail = match &violation {
        None => "no violating string".to_string(),
        Some(v) => format!("{}-string headed by {}", v.index, g.tableau(v.string[0])),
    };
    r.check("extremal", violation.is_none(), detail);
    if let Ok(low) = lowest_weight_elements(&x) {
        let target = g.vertex_of(&golden::figure2::non_extremal_lowest());
        let hit = target.is_some_and(|v| low.contains(v));
        let not_extremal_weight = target.is_some_and(|v| {
            let wt = g.weight(v);
            d.coset_reps()
                .iter()
                .all(|u| u.act_on_composition(d.shape().parts()) != wt)
        });
        r.check(
            "non-extremal lowest weight element",
            hit && not_extremal_weight,
            golden::figure2::non_extremal_lowest().to_string(),
        );
    }
    match weak_atom_positivity(&x.character()) {
        Ok(report) => {
            let coeff = report
                .expansion
                .get(&golden::figure2::negative_term())
                .copied()
                .unwrap_or(0);
            r.check(
                "coefficient -1 on (1,3,0,1)",
                coeff == -1,
                coeff.to_string(),
            );
            r.check(
                "not weakly atom-positive",
                !report.positive,
                format!("{:?}", report.expansion),
            );
        }
        Err(e) => r.check("atom expansion", false, e.to_string()),
    }
    r
}

fn atom_not_extremal() -> Report {
    let mut r = Report::new("ex-4.5");
    let shape = golden::atom_not_extremal::shape();
    let n = shape.len();
    let (i, j, k) = golden::atom_not_extremal::labels();
    let g = CrystalGraph::generate(&shape);
    let d = Demazure::new(&g);

    let sj = WeylElement::from_word(&[j], n).expect("valid");
    let si_sj = WeylElement::from_word(&[j, i], n).expect("valid");
    let w = WeylElement::from_word(&[j, i, k], n).expect("valid");
    let commute =
        WeylElement::from_word(&[i, k], n).ok() == WeylElement::from_word(&[k, i], n).ok();
    let hypotheses = [&sj, &si_sj, &w].iter().all(|u| is_min_rep(u, &shape));
    r.check(
        "hypotheses",
        commute && hypotheses,
        format!("labels ({i},{j},{k}) on {shape}"),
    );

    let parts = [WeylElement::identity(n), sj, si_sj, w];
    let mut x = CrystalSubset::empty(&g);
    let mut nonempty = true;
    for u in &parts {
        let atom = d.atom_via_operators(u).expect("valid element");
        nonempty &= !atom.is_empty();
        x = x.union(&atom).expect("same ambient");
    }
    r.check("atoms nonempty", nonempty, format!("{} vertices", x.len()));
    r.check("connected", x.is_connected(), "");
    r.check(
        "strongly atom-positive",
        strong_atom_support(&x, &d).is_some_and(|s| s.len() == 4),
        "",
    );
    let violation = find_violation(&x);
    let detail = violation
        .as_ref()
        .map(|v| format!("{}-string headed by {}", v.index, g.tableau(v.string[0])))
        .unwrap_or_default();
    r.check("not extremal", violation.is_some(), detail);
    r
}

fn lowest_obstruction() -> Report {
    let mut r = Report::new("ex-4.8");
    let g = CrystalGraph::generate(&golden::lowest_obstruction::shape());
    let Some(x) = g.vertex_of(&golden::lowest_obstruction::x()) else {
        r.check("x", false, "not a vertex");
        return r;
    };
    let zero = g.lower(1, x).is_none()
        && g.lower(2, x).is_none()
        && g.raise(3, x).is_none()
        && g.raise(4, x).is_none()
        && g.raise(5, x).is_none();
    r.check("f1 = f2 = e3 = e4 = e5 = 0", zero, g.tableau(x).to_string());

    let [a, b, c] = golden::lowest_obstruction::chain();
    let e2 = g.raise(2, x);
    let f3e2 = e2.and_then(|v| g.lower(3, v));
    let f2f3e2 = f3e2.and_then(|v| g.lower(2, v));
    let steps = [
        ("e2 x", e2, &a),
        ("f3 e2 x", f3e2, &b),
        ("f2 f3 e2 x", f2f3e2, &c),
    ];
    for (name, got, want) in steps {
        let shown = got
            .map(|v| g.tableau(v).to_string())
            .unwrap_or_else(|| "0".into());
        r.check(name, got.is_some() && got == g.vertex_of(want), shown);
    }
    r.check(
        "strings leave the head",
        e2.and_then(|v| g.raise(3, v)).is_some() && f3e2.and_then(|v| g.raise(2, v)).is_some(),
        "e3 e2 x and e2 f3 e2 x are nonzero",
    );
    let f3 = g.lower(3, x);
    r.check("f2 f3 e2 x = f3 x", f3.is_some() && f3 == f2f3e2, "");
    let closure = extremal_closure(&CrystalSubset::singleton(&g, x));
    r.check(
        "extremal closure contains f3 x",
        f3.is_some_and(|v| closure.contains(v)),
        format!("{} vertices", closure.len()),
    );
    r
}

fn non_unique() -> Report {
    let mut r = Report::new("ex-4.9");
    let g = CrystalGraph::generate(&golden::non_unique::shape());
    let labels = golden::non_unique::levi_labels();
    let x = levi_branch(&g, &labels)
        .into_iter()
        .find(|c| c.contains(g.highest()))
        .expect("b_λ lies in some component");
    let small = x
        .iter()
        .all(|v| g.tableau(v).rows().iter().flatten().all(|&e| e <= 5));
    r.check(
        "X",
        x.len() == 126 && small,
        format!("{} vertices, entries at most 5", x.len()),
    );

    let (Ok(y1), Ok(y2)) = (
        g.subset_from_tableaux(&golden::non_unique::y1()),
        g.subset_from_tableaux(&golden::non_unique::y2()),
    ) else {
        r.check("Y1, Y2", false, "golden tableau missing");
        return r;
    };
    r.check(
        "Y sizes",
        y1.len() == 12 && y2.len() == 12,
        format!("{} and {}", y1.len(), y2.len()),
    );
    r.check(
        "disjoint from X",
        x.is_disjoint(&y1) && x.is_disjoint(&y2),
        "",
    );
    let boundary = y1.iter().chain(y2.iter()).all(|y| {
        g.raise(4, y).is_none()
            && g.lower(5, y).is_none()
            && g.raise(5, y).is_some_and(|u| x.contains(u))
    });
    r.check("e4 y = 0, f5 y = 0, e5 y in X", boundary, "");

    let xy1 = x.union(&y1).expect("same ambient");
    let xy2 = x.union(&y2).expect("same ambient");
    r.check(
        "X ⊔ Y1 extremal",
        is_extremal(&xy1),
        format!("{} vertices", xy1.len()),
    );
    r.check(
        "X ⊔ Y2 extremal",
        is_extremal(&xy2),
        format!("{} vertices", xy2.len()),
    );
    r.check("connected", xy1.is_connected() && xy2.is_connected(), "");
    r.check("equal characters", xy1.character() == xy2.character(), "");
    let only1 = xy1.difference(&xy2).expect("same ambient");
    let only2 = xy2.difference(&xy1).expect("same ambient");
    r.check(
        "differ in 4 vertices",
        only1.len() + only2.len() == 4,
        format!(
            "{} and {}",
            describe(&g, only1.members()),
            describe(&g, only2.members())
        ),
    );

    let branched_ok = [&xy1, &xy2].iter().all(|s| {
        s.components(&labels)
            .iter()
            .all(|c| find_violation_for(c, &labels).is_none())
    });
    r.check(
        "branched components extremal",
        branched_ok,
        format!("labels {labels:?}"),
    );
    r
}
