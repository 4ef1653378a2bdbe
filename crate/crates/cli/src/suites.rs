use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde_json::json;

use k3w_core::abelian::{
    endo_identities, family_d, family_e, four_torsion_table, full_4tors_incidence, genus4_report, group_law_checks,
    translate_check, torsion, triple_check, IdentityCheck, LEFT_FIXTURE, RIGHT_FIXTURE,
};
use k3w_core::fermat::{all_lines, configuration, fibration, line_graph, surface_lines, surface_points, Line3};
use k3w_core::golay::{build_golay, expected_weight_enumerator, format_mask, mask_of, SteinerSystem, REFERENCE_OCTADS};
use k3w_core::kummer::{build_structure, curve_graph, intersection_ledger, point_profile};
use k3w_core::leech::{
    chain_roots, fiber_classes, generation_check, minimal_shell, octad_rule, orthogonal_roots, root_incidence,
    sixteen_ten_roots, weyl_projection, ChainKind, LorentzVector, OrthRoot, RootIncidence, RootType, Shell,
};
use k3w_core::quadric::{
    base_points, curve_c, curve_c_prime, expected_base_points, form_incidence, four_point_forms, local_mult, pair_tally,
    printed_thirty_forms, ruling_c, ruling_d, thirty_forms, BiForm,
};
use k3w_core::quaternion::{
    basis_matrices, decompositions, ns_to_herm, pairing, solve_genus4, structure_check, QuatO, CLASS_ORDER, NS_TABLE,
};

use crate::graphs;
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Golay,
    Leech,
    Fermat,
    Quadric,
    Abelian,
    Kummer,
    Iso,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Golay, Suite::Leech, Suite::Fermat, Suite::Quadric, Suite::Abelian, Suite::Kummer, Suite::Iso];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golay => "golay",
            Suite::Leech => "leech",
            Suite::Fermat => "fermat",
            Suite::Quadric => "quadric",
            Suite::Abelian => "abelian",
            Suite::Kummer => "kummer",
            Suite::Iso => "iso",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    Octad,
    Line,
    TableCell,
}

#[derive(Clone, Debug)]
pub struct Inputs {
    pub fault: Option<Fault>,
    pub left_table: String,
    pub right_table: String,
}

impl Default for Inputs {
    fn default() -> Inputs {
        Inputs { fault: None, left_table: LEFT_FIXTURE.into(), right_table: RIGHT_FIXTURE.into() }
    }
}

pub fn run_suite(suite: Suite, inputs: &Inputs) -> Vec<Check> {
    match suite {
        Suite::Golay => golay(inputs),
        Suite::Leech => leech(),
        Suite::Fermat => fermat(inputs),
        Suite::Quadric => quadric(),
        Suite::Abelian => abelian(inputs),
        Suite::Kummer => kummer(),
        Suite::Iso => iso(),
    }
}

pub struct LeechData {
    pub code: SteinerSystem,
    pub shell: Shell,
    pub roots: Vec<OrthRoot>,
    pub inc: RootIncidence,
}

pub fn leech_data() -> Result<&'static LeechData, String> {
    static DATA: OnceLock<Result<LeechData, String>> = OnceLock::new();
    DATA.get_or_init(|| {
        let code = build_golay().map_err(|e| e.to_string())?;
        let shell = minimal_shell(&code).map_err(|e| e.to_string())?;
        let roots = orthogonal_roots(&shell).map_err(|e| e.to_string())?;
        let inc = root_incidence(&roots).map_err(|e| e.to_string())?;
        Ok(LeechData { code, shell, roots, inc })
    })
    .as_ref()
    .map_err(Clone::clone)
}

pub fn fermat_lines() -> Result<&'static (usize, Vec<Line3>), String> {
    static DATA: OnceLock<Result<(usize, Vec<Line3>), String>> = OnceLock::new();
    DATA.get_or_init(|| surface_lines().map(|s| (s.scanned, s.lines)).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(Clone::clone)
}

/// Swaps one point of the first octad for one outside it.
pub fn corrupt_octad(code: &SteinerSystem) -> SteinerSystem {
    let o = code.octads()[0];
    let inside = o & o.wrapping_neg();
    let outside = 1 << (!o).trailing_zeros();
    code.with_octad_replaced(0, o ^ inside ^ outside)
}

pub fn corrupt_table(text: &str) -> String {
    text.replacen("Q1,(9),(9)'", "Q1,(9),(8)'", 1)
}

fn identity(prefix: &str, anchor: &str, c: &IdentityCheck) -> Check {
    let refuted = c.refuted();
    Check::compare(&format!("{prefix}{}", c.name), anchor, json!({"failures": 0}), json!({"failures": c.failures}))
        .with_witness(json!({"points_checked": c.checked, "holds_in_order": c.holds_in_order}))
        .refuted_if(refuted)
}

fn golay(inputs: &Inputs) -> Vec<Check> {
    const A: &str = "extended binary Golay code, octads of S(5,8,24)";
    let code = match build_golay() {
        Ok(c) => c,
        Err(e) => return vec![Check::error("golay construction", A, e)],
    };
    let code = if inputs.fault == Some(Fault::Octad) { corrupt_octad(&code) } else { code };
    let a = code.audit();
    let distinct: BTreeSet<u32> = REFERENCE_OCTADS[1..].iter().map(|(_, o)| mask_of(o)).collect();
    vec![
        Check::compare("octads=759", A, 759, a.octad_count),
        Check::compare("octads are codewords of weight 8", A, Vec::<String>::new(), a.non_codeword_octads.iter().map(|&o| format_mask(o)).collect::<Vec<_>>()),
        Check::compare(
            "every 5-subset in exactly one octad",
            A,
            json!({"covered": 42504, "collisions": 0}),
            json!({"covered": a.five_subsets_covered, "collisions": a.five_subset_collisions}),
        ),
        Check::compare("weight enumerator (1,759,2576,759,1)", A, expected_weight_enumerator(), &a.weight_enumerator),
        Check::compare("octad intersections in {0,2,4}", A, 0, a.bad_intersections),
        Check::compare("reference octads are octads", "printed octads K and its neighbours", Vec::<&str>::new(), &a.missing_reference)
            .with_witness(json!({"distinct_neighbours": distinct.len(), "duplicates": a.reference_duplicates})),
    ]
}

fn leech() -> Vec<Check> {
    const SHELL: &str = "minimal vectors of the Leech lattice";
    const ROOTS: &str = "Leech roots orthogonal to A2+A2";
    let d = match leech_data() {
        Ok(d) => d,
        Err(e) => return vec![Check::error("leech construction", SHELL, e)],
    };
    let mut out = vec![
        Check::compare("shell=196560", SHELL, 196560, d.shell.vectors().len()),
        Check::compare("shell shape census", SHELL, [1104, 97152, 98304], d.shell.census().values().collect::<Vec<_>>())
            .with_witness(d.shell.census().keys().map(|k| format!("{k:?}")).collect::<Vec<_>>()),
        Check::compare("orthogonal roots=112", ROOTS, 112, d.roots.len()),
        Check::compare(
            "root types 56+56",
            ROOTS,
            [56, 56],
            [RootType::I, RootType::II].map(|t| d.roots.iter().filter(|r| r.kind == t).count()),
        ),
    ];
    for (kind, id, total, norm) in [(ChainKind::A5, "A5 roots=5184", 5184, "-2/3"), (ChainKind::A3A2, "A3+A2 roots=648", 648, "-4/3")] {
        out.push(match chain_roots(&d.shell, kind) {
            Ok(c) => Check::compare(id, "roots extending A2+A2", json!({"total": total, "projection_norms": [norm]}), json!({"total": c.total, "projection_norms": c.projection_norms}))
                .with_witness(&c.attachments),
            Err(e) => Check::error(id, "roots extending A2+A2", e),
        });
    }
    let w = weyl_projection();
    let sum = d.roots.iter().fold(LorentzVector::zero(), |acc, r| acc.add(&r.root));
    out.push(Check::compare("<w,w>=4", "projected Weyl vector", 4, w.norm()).with_witness(&w));
    out.push(Check::compare("<w,r>=1 for all roots", "projected Weyl vector", vec![1], d.roots.iter().map(|r| w.pairing(&r.root)).collect::<BTreeSet<_>>()));
    out.push(Check::truth("28w = sum of roots", "projected Weyl vector", w.scale(28).sub(&sum).is_zero()));
    let g = generation_check(&d.roots, &d.inc);
    out.push(
        Check::compare("Gram rank 22, invariant factors (3,3)", "discriminant of the root lattice", json!({"rank": 22, "factors": ["3", "3"]}), json!({"rank": g.rank, "factors": g.nonunit_factors}))
            .with_witness(json!({"discriminant": g.discriminant})),
    );
    out.push(Check::compare("neighbour sublattice index 81", "discriminant of the root lattice", Some(81), g.sublattice_index));
    let degrees: BTreeSet<usize> = d.inc.adjacency.iter().map(Vec::len).collect();
    out.push(Check::compare("incidence 30-regular", ROOTS, vec![30], degrees));
    let mut off = BTreeSet::new();
    let mut rule_failures = Vec::new();
    for i in 0..d.roots.len() {
        for j in 0..d.roots.len() {
            if i != j {
                off.insert(d.inc.gram[i][j]);
                if d.inc.gram[i][j] != octad_rule(&d.roots[i], &d.roots[j]) {
                    rule_failures.push((i, j));
                }
            }
        }
    }
    out.push(Check::compare("off-diagonal pairings in {0,1}", ROOTS, vec![0, 1], off));
    out.push(Check::compare("octad rule for all pairs", "pairing from octad intersections", Vec::<(usize, usize)>::new(), rule_failures));
    let mut fiber_failures = Vec::new();
    for r in 0..d.roots.len() {
        if let Err(e) = fiber_classes(&d.roots, &d.inc, r) {
            fiber_failures.push(e.to_string());
        }
    }
    out.push(Check::compare("fiber classes 10+81 at every root", "elliptic fibration from a root", Vec::<String>::new(), fiber_failures));
    out.push(match sixteen_ten_roots(&d.roots, &d.inc) {
        Ok(s) => Check::truth("(16)_10 sides", "two orthogonal 16-sets", true).with_witness(json!({"a": s.a_side, "b": s.b_side})),
        Err(e) => Check::error("(16)_10 sides", "two orthogonal 16-sets", e),
    });
    let k = mask_of(&REFERENCE_OCTADS[0].1);
    let printed: BTreeSet<u32> = REFERENCE_OCTADS[1..].iter().map(|(_, o)| mask_of(o)).collect();
    let computed: BTreeSet<u32> = d
        .roots
        .iter()
        .position(|r| r.octad == k && r.kind == RootType::I)
        .map(|ik| d.inc.adjacency[ik].iter().map(|&j| d.roots[j].octad).collect())
        .unwrap_or_default();
    let unprinted: Vec<String> = computed.difference(&printed).map(|&o| format_mask(o)).collect();
    out.push(
        Check::compare(
            "neighbours of the root of K",
            "printed neighbour list of K",
            json!({"printed_distinct": 29, "printed_found": 29, "unprinted": 1}),
            json!({"printed_distinct": printed.len(), "printed_found": printed.intersection(&computed).count(), "unprinted": unprinted.len()}),
        )
        .with_witness(json!({"unprinted": unprinted, "code_variant": format!("{:?}", d.code.variant())})),
    );
    out
}

fn fermat(inputs: &Inputs) -> Vec<Check> {
    const A: &str = "Fermat quartic over GF(9)";
    let points = match surface_points() {
        Ok(p) => p,
        Err(e) => return vec![Check::error("points=280", A, e)],
    };
    let (scanned, lines) = match fermat_lines() {
        Ok(l) => l,
        Err(e) => return vec![Check::error("lines=112", A, e)],
    };
    let mut lines = lines.clone();
    if inputs.fault == Some(Fault::Line) {
        if let Some(bad) = all_lines().into_iter().find(|l| !l.on_surface()) {
            lines[0] = bad;
        }
    }
    let mut out = vec![
        Check::compare("points=280", A, 280, points.len()),
        Check::compare("lines=112", A, 112, lines.len()).with_witness(json!({"lines_scanned": scanned})),
        Check::compare("line scan size 7462", A, 7462, *scanned),
        Check::compare("lines lie on the surface", A, Vec::<usize>::new(), (0..lines.len()).filter(|&i| !lines[i].on_surface()).collect::<Vec<_>>()),
    ];
    out.push(match configuration(&points, &lines) {
        Ok(c) => Check::compare("(280_4,112_10)", A, 1120, c.incidences()),
        Err(e) => Check::error("(280_4,112_10)", A, e),
    });
    let adj = line_graph(&lines);
    out.push(Check::compare(
        "line graph 30-regular, 1680 edges",
        A,
        json!({"degrees": [30], "edges": 1680}),
        json!({"degrees": adj.iter().map(Vec::len).collect::<BTreeSet<_>>(), "edges": adj.iter().map(Vec::len).sum::<usize>() / 2}),
    ));
    let failures: Vec<String> = (0..lines.len()).filter_map(|l| fibration(&lines, &adj, l).err().map(|e| e.to_string())).collect();
    out.push(Check::compare("fibration 10+81", A, Vec::<String>::new(), failures));
    out
}

pub fn form_string(f: &BiForm) -> String {
    let mono = ["u0v0", "u0v1", "u1v0", "u1v1"];
    let terms: Vec<String> = (0..4)
        .filter(|&k| !f.coeffs[k / 2][k % 2].is_zero())
        .map(|k| format!("({})*{}", f.coeffs[k / 2][k % 2], mono[k]))
        .collect();
    terms.join(" + ")
}

fn quadric() -> Vec<Check> {
    const A: &str = "quadric model and its ten base points";
    let bps = expected_base_points();
    let mut out = Vec::new();
    out.push(match base_points() {
        Ok(bp) => {
            let mut got: Vec<String> = bp.points.iter().map(ToString::to_string).collect();
            let mut want: Vec<String> = bps.iter().map(ToString::to_string).collect();
            got.sort();
            want.sort();
            Check::compare("base points as listed, transverse", A, json!({"points": want, "multiplicities": vec![1; 10]}), json!({"points": got, "multiplicities": bp.multiplicities}))
        }
        Err(e) => Check::error("base points as listed, transverse", A, e),
    });
    let tangency = (|| -> k3w_core::Result<serde_json::Value> {
        let (c, cp) = (curve_c(), curve_c_prime());
        let mut mults = [Vec::new(), Vec::new()];
        let mut hits = [BTreeSet::new(), BTreeSet::new()];
        for i in 1..=10 {
            for (k, (r, curve)) in [(ruling_c(i), &c), (ruling_d(i), &cp)].into_iter().enumerate() {
                let on: Vec<_> = bps.iter().filter(|p| r.contains(p)).collect();
                if on.len() != 1 {
                    mults[k].push(0);
                    continue;
                }
                mults[k].push(local_mult(&r, curve, on[0])?);
                hits[k].insert(on[0].to_string());
            }
        }
        Ok(json!({"C": mults[0], "D": mults[1], "distinct_points": [hits[0].len(), hits[1].len()]}))
    })();
    out.push(match tangency {
        Ok(v) => Check::compare("ruling tangency multiplicity 3", A, json!({"C": vec![3; 10], "D": vec![3; 10], "distinct_points": [10, 10]}), v),
        Err(e) => Check::error("ruling tangency multiplicity 3", A, e),
    });
    let counts = |forms: &[BiForm]| -> Vec<usize> {
        form_incidence(forms, &bps).iter().map(|row| row.iter().filter(|b| **b).count()).collect()
    };
    let search = four_point_forms();
    let corrected = thirty_forms();
    let printed = printed_thirty_forms();
    let printed_counts = counts(&printed);
    let off: Vec<serde_json::Value> = printed_counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 4)
        .map(|(i, &c)| json!({"form": i + 1, "equation": form_string(&printed[i]), "base_points": c}))
        .collect();
    let independent = search.len() == 30 && printed.iter().zip(&printed_counts).all(|(f, &c)| (c == 4) == search.contains(f));
    out.push(
        Check::compare("printed forms meet 4 base points", A, vec![4; 30], &printed_counts)
            .with_witness(json!({"off": off, "exhaustive_search_found": search.len()}))
            .refuted_if(independent),
    );
    out.push(Check::compare("corrected forms meet 4 base points", A, vec![4; 30], counts(&corrected)));
    let per_point: Vec<usize> = (0..10).map(|j| form_incidence(&corrected, &bps).iter().filter(|row| row[j]).count()).collect();
    out.push(Check::compare("12 forms per base point", A, vec![12; 10], per_point));
    out.push(Check::compare(
        "exhaustive search finds the 30 forms",
        A,
        json!({"found": 30, "all_listed": true}),
        json!({"found": search.len(), "all_listed": search.iter().all(|f| corrected.contains(f))}),
    ));
    out.push(match pair_tally(&corrected) {
        Ok(t) => Check::compare(
            "pair multiplicities at shared base points",
            A,
            json!([[[], 45], [[1, 1], 270], [[2], 120]]),
            t.into_iter().collect::<Vec<_>>(),
        ),
        Err(e) => Check::error("pair multiplicities at shared base points", A, e),
    });
    out
}

fn abelian(inputs: &Inputs) -> Vec<Check> {
    const Q: &str = "maximal order of the quaternion algebra ramified at 3";
    const NS: &str = "Neron-Severi lattice as Hermitian matrices";
    const E: &str = "supersingular elliptic curve y^2 = x^3 - x";
    const G: &str = "genus-4 curve on the abelian surface";
    const T: &str = "4-torsion tables";
    let mut out = Vec::new();
    out.push(match structure_check() {
        Ok(()) => Check::truth("order relations", Q, true),
        Err(e) => Check::error("order relations", Q, e),
    });
    out.push(Check::compare("N(F)=3, N(pi)=2", Q, [3, 2], [QuatO::frobenius().norm(), QuatO::pi().norm()]));
    let m = basis_matrices();
    let table: Vec<Vec<i64>> = m.iter().map(|a| m.iter().map(|b| pairing(a, b)).collect()).collect();
    out.push(Check::compare("intersection table of the basis", NS, NS_TABLE, table));
    out.push(match solve_genus4() {
        Ok(c) => {
            let j = ns_to_herm(&c);
            Check::compare(
                "genus-4 class",
                NS,
                json!({"coords": [1, 1, -1, -1, 2, 2], "diagonal": [3, 3], "det": 3}),
                json!({"coords": c.0, "diagonal": [j.a, j.d], "det": j.det()}),
            )
            .with_witness(j.to_string())
        }
        Err(e) => Check::error("genus-4 class", NS, e),
    });
    match decompositions() {
        Ok(dec) => {
            let holds = dec.pairs.iter().filter(|p| p.holds()).count();
            let summary: Vec<String> = dec.pairs.iter().map(|p| format!("{}: {} + {}", p.class, p.first.name, p.second.name)).collect();
            out.push(Check::compare("ten decompositions M1 + M2 = j(C)", NS, 10, holds).with_witness(summary));
            out.push(Check::compare("cross pairings in {1,2}", NS, vec![1, 2], dec.cross_pairings.iter().collect::<BTreeSet<_>>()));
            let mut classes: Vec<&str> = dec.pairs.iter().map(|p| p.class.as_str()).collect();
            let mut want = CLASS_ORDER.to_vec();
            classes.sort_unstable();
            want.sort_unstable();
            out.push(Check::compare("tangent classes are P1(GF(9))", NS, want, classes));
            let failures: Vec<serde_json::Value> = dec
                .label_failures
                .iter()
                .map(|f| json!({"label": f.label.name, "printed": format!("Delta_{{{}, {}}}", f.label.a, f.label.b), "partner": f.partner, "reason": f.reason}))
                .collect();
            out.push(
                Check::compare("printed curve labels", NS, Vec::<String>::new(), dec.label_failures.iter().map(|f| f.label.name.clone()).collect::<Vec<_>>())
                    .with_witness(failures)
                    .refuted_if(dec.all_hold()),
            );
        }
        Err(e) => out.push(Check::error("ten decompositions M1 + M2 = j(C)", NS, e)),
    }
    let t = torsion();
    out.push(Check::compare("|E(F3)|,|E(F9)|,|E(F81)|", E, [4, 16, 64], t.counts));
    out.push(Check::truth("Ker[4] = E(F9)", E, t.f9_is_four_torsion && t.f3_is_two_torsion));
    out.push(Check::truth("named points on E", E, t.named_points_match));
    for c in group_law_checks() {
        out.push(identity("group law: ", E, &c));
    }
    for c in endo_identities() {
        out.push(identity("endomorphism: ", E, &c));
    }
    match genus4_report() {
        Ok(g) => {
            out.push(Check::compare("C(F9) has 10 points", G, 10, g.rational_points));
            out.push(Check::truth("psi(C(F9)) = listed 2-torsion", G, g.images_match_listed));
            out.push(Check::truth("psi injective on C(F81)", G, g.injective_on_f81).with_witness(json!({"points": g.f81_points})));
            for c in &g.identities {
                out.push(identity("rational identity: ", G, c));
            }
        }
        Err(e) => out.push(Check::error("genus-4 data", G, e)),
    }
    match family_d() {
        Ok(d) => {
            out.push(Check::compare("D: 16 translates, overlap 6", G, 16, d.len()));
            let l = translate_check(&d);
            out.push(Check::truth("translates meet Ker[4] only in Ker[2]", G, l.holds()).with_witness(&l));
        }
        Err(e) => out.push(Check::error("D: 16 translates, overlap 6", G, e)),
    }
    match family_e() {
        Ok(e) => {
            out.push(Check::compare("E: 80 curves, 4 two-torsion points each, 20 per point", E, 80, e.len()));
            let inc = full_4tors_incidence(&e);
            out.push(Check::compare(
                "Ker[4] minus Ker[2] on four E curves, closed under -1",
                E,
                json!({"points": 240, "degree_failures": 0, "antipodal_failures": 0}),
                json!({"points": inc.curves_through.len(), "degree_failures": inc.degree_failures, "antipodal_failures": inc.antipodal_failures}),
            ));
        }
        Err(e) => out.push(Check::error("E: 80 curves, 4 two-torsion points each, 20 per point", E, e)),
    }
    let (left, right) = if inputs.fault == Some(Fault::TableCell) {
        (corrupt_table(&inputs.left_table), inputs.right_table.clone())
    } else {
        (inputs.left_table.clone(), inputs.right_table.clone())
    };
    match four_torsion_table(&[&left, &right]) {
        Ok(t) => {
            let coords = |cells: &[k3w_core::abelian::TableCell]| -> Vec<serde_json::Value> {
                cells.iter().map(|c| json!({"row": c.row, "col": c.col, "computed": c.computed, "fixture": c.fixture})).collect()
            };
            out.push(Check::compare("every 4-torsion point on one curve through 0", T, 0, t.uniqueness_failures.len()).with_witness(coords(&t.uniqueness_failures)));
            out.push(
                Check::compare("tables match fixture", T, json!({"cells": 240, "mismatches": 0}), json!({"cells": t.fixture_cells, "mismatches": t.fixture_mismatches.len()}))
                    .with_witness(coords(&t.fixture_mismatches)),
            );
        }
        Err(e) => out.push(Check::error("tables match fixture", T, e)),
    }
    match triple_check() {
        Ok(ts) => {
            let bad: Vec<&str> = ts.iter().filter(|t| !t.holds()).map(|t| t.class.as_str()).collect();
            out.push(Check::compare("C_a = Delta_a + Delta'_a for every class", NS, Vec::<&str>::new(), bad).with_witness(&ts));
        }
        Err(e) => out.push(Check::error("C_a = Delta_a + Delta'_a for every class", NS, e)),
    }
    out
}

fn kummer() -> Vec<Check> {
    const A: &str = "Kummer surface of E x E";
    let s = match build_structure() {
        Ok(s) => s,
        Err(e) => return vec![Check::error("incidence structure", A, e)],
    };
    let mut out = vec![
        Check::compare("curves=112, points=280", A, [112, 280], [s.curves.len(), s.points.len()]),
        Check::compare("10 points per curve", A, vec![10], s.curve_points.iter().map(Vec::len).collect::<BTreeSet<_>>()),
        Check::compare("4 curves per point", A, vec![4], s.point_curves.iter().map(Vec::len).collect::<BTreeSet<_>>()),
    ];
    match curve_graph(&s) {
        Ok(g) => {
            out.push(Check::compare(
                "curve graph 30-regular, 1680 edges, adjacent curves share one point",
                A,
                json!({"degrees": [30], "edges": 1680, "max_shared": 1}),
                json!({"degrees": g.adjacency.iter().map(Vec::len).collect::<BTreeSet<_>>(), "edges": g.edges, "max_shared": g.max_shared}),
            ));
            out.push(Check::compare(
                "(16)_10 exceptional and genus-4 images",
                A,
                json!({"internal_edges": [0, 0], "cross_degrees": [10]}),
                json!({"internal_edges": [g.exceptional_internal_edges, g.genus_internal_edges], "cross_degrees": g.cross_degrees.iter().collect::<BTreeSet<_>>()}),
            ));
        }
        Err(e) => out.push(Check::error("curve graph 30-regular, 1680 edges, adjacent curves share one point", A, e)),
    }
    let ledger = intersection_ledger(&s);
    let selfs: BTreeMap<i64, usize> = ledger.entries.iter().fold(BTreeMap::new(), |mut m, e| {
        *m.entry(e.on_kummer).or_insert(0) += 1;
        m
    });
    out.push(Check::compare("self-intersection -2 for every curve", A, json!({"-2": 112}), selfs.iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>()));
    out.push(
        Check::compare("pairwise intersections match shared points", A, 0, ledger.pair_mismatches.len())
            .with_witness(json!({"pairs_checked": ledger.pairs_checked, "mismatches": ledger.pair_mismatches})),
    );
    let p = point_profile(&s);
    out.push(Check::truth("point types", A, p.directional_ok && p.paired_ok));
    out
}

fn iso() -> Vec<Check> {
    const A: &str = "Leech roots, Fermat lines and Kummer curves";
    let named = match graphs::all_graphs() {
        Ok(g) => g,
        Err(e) => return vec![Check::error("graphs", A, e)],
    };
    let mut out = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let id = format!("{} ~ {}", named[i].name, named[j].name);
        out.push(match graphs::find_isomorphism(&named[i], &named[j]) {
            Ok(Some(map)) => Check::truth(&id, A, true).with_witness(json!({"edges_verified": named[i].graph.edges().len(), "map_prefix": &map[..8]})),
            Ok(None) => Check::truth(&id, A, false),
            Err(e) => Check::error(&id, A, e),
        });
    }
    out.push(match graphs::sixteen_ten_correspondence(&named[0], &named[2]) {
        Ok(r) => Check::truth("(16)_10 of the Kummer maps onto the root (16)_10", A, r.is_some()).with_witness(r),
        Err(e) => Check::error("(16)_10 of the Kummer maps onto the root (16)_10", A, e),
    });
    out
}
