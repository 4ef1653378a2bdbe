//! Acceptance suite: one PASS/FAIL line per criterion with its time bound.
//! Runs without the libtest harness so the lines always reach the output.
//! Exits nonzero unless the red set is exactly the known one.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use k3w_core::abelian::{
    base_ten, e_points, endo_identities, family_d, family_e, four_torsion_table, full_4tors_incidence, genus4_points,
    genus4_report, group_law_checks, ker2, ker4, translate_check, phi_checks, pi_formula, psi, torsion, LEFT_FIXTURE,
    RIGHT_FIXTURE,
};
use k3w_core::fermat::{configuration, fibration, line_graph, surface_lines, surface_points};
use k3w_core::field::{Field, FieldElem, Level};
use k3w_core::golay::{build_golay, mask_of, INF, REFERENCE_OCTADS};
use k3w_core::graph::{canonical_label, isomorphism, IsoResult, SimpleGraph};
use k3w_core::kummer::{build_structure, curve_graph, intersection_ledger};
use k3w_core::leech::{
    base_roots, chain_roots, fiber_classes, minimal_shell, octad_rule, orthogonal_roots, root_incidence,
    sixteen_ten_roots, weyl_projection, ChainKind, LorentzVector, RootType,
};
use k3w_core::quadric::{
    base_points, curve_c, curve_c_prime, expected_base_points, form_incidence, four_point_forms, local_mult,
    printed_thirty_forms, ruling_c, ruling_d, thirty_forms,
};
use k3w_core::quaternion::{
    basis_matrices, class_name, decompositions, ns_to_herm, pairing, solve_genus4, structure_check, tangent_class,
    QuatO, CLASS_ORDER, NS_TABLE,
};
use k3w_core::snf::{smith_invariants, IntMatrix};
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Criteria known to be false as printed; each is analysed in its detail line.
const EXPECTED_RED: [usize; 2] = [7, 9];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn c1_golay() -> Outcome {
    let code = build_golay().map_err(e)?;
    let octads = code.octads();
    ensure(octads.len() == 759, format!("{} octads", octads.len()))?;
    // every 5-subset in exactly one octad, counted from scratch
    let mut bad = 0usize;
    let mut fives = 0usize;
    for a in 0..24u32 {
        for b in a + 1..24 {
            for c in b + 1..24 {
                for d in c + 1..24 {
                    for f in d + 1..24 {
                        let m = 1 << a | 1 << b | 1 << c | 1 << d | 1 << f;
                        fives += 1;
                        if octads.iter().filter(|&&o| o & m == m).count() != 1 {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    ensure(fives == 42504 && bad == 0, format!("{bad} of {fives} 5-subsets not in exactly one octad"))?;
    let mut weights = BTreeMap::new();
    for w in code.codewords() {
        *weights.entry(w.count_ones()).or_insert(0usize) += 1;
    }
    let weights: Vec<usize> = weights.values().copied().collect();
    ensure(weights == [1, 759, 2576, 759, 1], format!("weight enumerator {weights:?}"))?;
    let distinct: BTreeSet<u32> = REFERENCE_OCTADS[1..].iter().map(|(_, o)| mask_of(o)).collect();
    let valid = distinct.iter().filter(|&&o| code.is_octad(o)).count();
    ensure(valid >= 29 && valid == distinct.len(), format!("{valid} printed neighbours valid"))?;
    ensure(code.is_octad(mask_of(&REFERENCE_OCTADS[0].1)), "K is not an octad")?;
    let has = |o: u32, l: i32| o & mask_of(&[l]) != 0;
    let fam_a = octads.iter().filter(|&&o| has(o, INF) && has(o, 0) && has(o, 2) && !has(o, 1)).count();
    let fam_b = octads.iter().filter(|&&o| has(o, INF) && has(o, 1) && has(o, 2) && !has(o, 0)).count();
    ensure(fam_a == 16 && fam_b == 16, format!("16-set families {fam_a}, {fam_b}"))?;
    Ok(format!("759 octads, 42504 5-subsets, enumerator (1,759,2576,759,1), {valid} distinct printed neighbours + K valid, families 16+16"))
}

fn c2_shell() -> Outcome {
    let code = build_golay().map_err(e)?;
    let shell = minimal_shell(&code).map_err(e)?;
    let v = shell.vectors();
    let mut by_max: BTreeMap<i32, usize> = BTreeMap::new();
    for x in v {
        let sq: i64 = x.iter().map(|&c| (c as i64) * (c as i64)).sum();
        ensure(sq == 32, "vector of wrong norm")?;
        *by_max.entry(x.iter().map(|c| c.abs()).max().unwrap()).or_insert(0) += 1;
    }
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    ensure(sorted.len() == 196560, format!("{} distinct vectors", sorted.len()))?;
    // max |x_i| = 2, 3, 4 for shapes (2^8), (3,1^23), (4^2)
    let census = [by_max.get(&4), by_max.get(&2), by_max.get(&3)].map(|c| c.copied().unwrap_or(0));
    ensure(census == [1104, 97152, 98304], format!("census {census:?}"))?;
    Ok("196560 distinct norm-4 vectors, census 1104/97152/98304".into())
}

fn c3_roots() -> Outcome {
    let code = build_golay().map_err(e)?;
    let shell = minimal_shell(&code).map_err(e)?;
    let roots = orthogonal_roots(&shell).map_err(e)?;
    let q = base_roots();
    ensure(roots.iter().all(|r| r.root.norm() == -2 && q.pairings(&r.root) == [0; 4]), "root not orthogonal")?;
    let ones = roots.iter().filter(|r| r.kind == RootType::I).count();
    ensure(roots.len() == 112 && ones == 56, format!("{} roots, {ones} of type I", roots.len()))?;
    let a5 = chain_roots(&shell, ChainKind::A5).map_err(e)?;
    let a3 = chain_roots(&shell, ChainKind::A3A2).map_err(e)?;
    let n5: Vec<&String> = a5.projection_norms.iter().collect();
    let n3: Vec<&String> = a3.projection_norms.iter().collect();
    ensure(a5.total == 5184 && n5 == ["-2/3"], format!("A5 {} {n5:?}", a5.total))?;
    ensure(a3.total == 648 && n3 == ["-4/3"], format!("A3+A2 {} {n3:?}", a3.total))?;
    Ok("112 = 56+56 orthogonal roots, 5184 A5-roots at -2/3, 648 A3+A2-roots at -4/3".into())
}

fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let (n, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..n).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = (0..p).find(|&x| m[rank][c] * x % p == 1).unwrap();
        for r in 0..n {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn c4_weyl() -> Outcome {
    let code = build_golay().map_err(e)?;
    let roots = orthogonal_roots(&minimal_shell(&code).map_err(e)?).map_err(e)?;
    let w = weyl_projection();
    ensure(w.norm() == 4, format!("<w,w> = {}", w.norm()))?;
    ensure(roots.iter().all(|r| w.pairing(&r.root) == 1), "<w,r> != 1")?;
    let sum = roots.iter().fold(LorentzVector::zero(), |a, r| a.add(&r.root));
    ensure(w.scale(28) == sum, "28w != sum of roots")?;
    let gram: Vec<Vec<i64>> = roots.iter().map(|a| roots.iter().map(|b| a.root.pairing(&b.root)).collect()).collect();
    let inv = smith_invariants(&IntMatrix::from_rows(&gram));
    let nonunit: Vec<String> = inv.iter().map(ToString::to_string).filter(|s| s != "0" && s != "1").collect();
    let rank = inv.iter().filter(|d| d.to_string() != "0").count();
    ensure(rank == 22 && nonunit == ["3", "3"], format!("rank {rank}, factors {nonunit:?}"))?;
    // independent: rank 22 modulo a large prime, 20 modulo 3
    let (rp, r3) = (rank_mod(&gram, 1_000_003), rank_mod(&gram, 3));
    ensure(rp == 22 && r3 == 20, format!("ranks mod p, 3: {rp}, {r3}"))?;
    Ok("<w,w>=4, <w,r>=1 for all 112, 28w = sum, Gram rank 22 with factors (3,3) (rank 20 mod 3)".into())
}

fn c5_incidence() -> Outcome {
    let code = build_golay().map_err(e)?;
    let roots = orthogonal_roots(&minimal_shell(&code).map_err(e)?).map_err(e)?;
    let inc = root_incidence(&roots).map_err(e)?;
    ensure(inc.adjacency.iter().all(|n| n.len() == 30), "not 30-regular")?;
    for i in 0..112 {
        for j in 0..112 {
            if i != j {
                let g = roots[i].root.pairing(&roots[j].root);
                ensure(g == 0 || g == 1, format!("pairing {g} at ({i},{j})"))?;
                ensure(g == octad_rule(&roots[i], &roots[j]), format!("octad rule fails at ({i},{j})"))?;
            }
        }
    }
    for r in 0..112 {
        let fc = fiber_classes(&roots, &inc, r).map_err(e)?;
        ensure(fc.triples.len() == 10 && fc.sections.len() == 81 && fc.fiber.norm() == 0, format!("fiber at {r}"))?;
    }
    let st = sixteen_ten_roots(&roots, &inc).map_err(e)?;
    let meets = |a: usize, b: usize| roots[a].root.pairing(&roots[b].root) == 1;
    for (side, other) in [(&st.a_side, &st.b_side), (&st.b_side, &st.a_side)] {
        for &a in side.iter() {
            ensure(side.iter().all(|&b| !meets(a, b)), "16-set not internally orthogonal")?;
            ensure(other.iter().filter(|&&b| meets(a, b)).count() == 10, "cross degree != 10")?;
        }
    }
    Ok("30-regular, pairings in {0,1}, octad rule on all pairs, 112 fibrations 10+81, (16)_10".into())
}

fn c6_fermat() -> Outcome {
    let f9: Vec<FieldElem> = Field::new(Level::F9).elements().collect();
    let mut affine = 0usize;
    for &a in &f9 {
        for &b in &f9 {
            for &c in &f9 {
                for &d in &f9 {
                    if (a.pow(4) + b.pow(4) + c.pow(4) + d.pow(4)).is_zero() {
                        affine += 1;
                    }
                }
            }
        }
    }
    let points = surface_points().map_err(e)?;
    ensure((affine - 1) / 8 == 280 && points.len() == 280, format!("{} points", points.len()))?;
    let scan = surface_lines().map_err(e)?;
    let q: u64 = 9;
    let total = (q.pow(4) - 1) * (q.pow(4) - q) / ((q * q - 1) * (q * q - q));
    ensure(scan.scanned as u64 == total && total == 7462, format!("scanned {}", scan.scanned))?;
    ensure(scan.lines.len() == 112 && scan.lines.iter().all(|l| l.on_surface()), "lines")?;
    let conf = configuration(&points, &scan.lines).map_err(e)?;
    ensure(conf.incidences() == 1120, "incidences")?;
    let adj = line_graph(&scan.lines);
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    ensure(adj.iter().all(|n| n.len() == 30) && edges == 1680, format!("{edges} edges"))?;
    for l in 0..112 {
        let f = fibration(&scan.lines, &adj, l).map_err(e)?;
        ensure(f.triples.len() == 10 && f.sections.len() == 81, format!("fibration at {l}"))?;
    }
    Ok("280 points (by brute force), 112 lines of 7462, (280_4,112_10), 30-regular with 1680 edges, 112 fibrations".into())
}

fn c7_quadric() -> Outcome {
    let bps = expected_base_points();
    let bp = base_points().map_err(e)?;
    let mut got = bp.points.clone();
    let mut want = bps.clone();
    got.sort();
    want.sort();
    ensure(got == want && bp.multiplicities == vec![1; 10], "base points")?;
    let (c, cp) = (curve_c(), curve_c_prime());
    for i in 1..=10 {
        for (r, curve) in [(ruling_c(i), &c), (ruling_d(i), &cp)] {
            let on: Vec<_> = bps.iter().filter(|p| r.contains(p)).collect();
            ensure(on.len() == 1 && local_mult(&r, curve, on[0]).map_err(e)? == 3, format!("ruling {i}"))?;
        }
    }
    let count = |forms: &[_]| -> Vec<usize> { form_incidence(forms, &bps).iter().map(|r| r.iter().filter(|b| **b).count()).collect() };
    let printed = count(&printed_thirty_forms());
    let corrected = count(&thirty_forms());
    let per_point: Vec<usize> = (0..10).map(|j| form_incidence(&thirty_forms(), &bps).iter().filter(|r| r[j]).count()).collect();
    let off: Vec<String> = printed.iter().enumerate().filter(|(_, &n)| n != 4).map(|(i, n)| format!("form {} meets {n}", i + 1)).collect();
    let corrected_ok = corrected == vec![4; 30] && per_point == vec![12; 10] && four_point_forms().len() == 30;
    if off.is_empty() {
        Ok("10 transverse base points, tangency 3, 30 printed forms through 4 points, 12 per point".into())
    } else {
        Err(format!(
            "as printed: {}; base points, transversality and tangency 3 hold; the corrected family (+z^(4k) u1v1) {} 4 points per form, 12 per point, and is the complete set of 30 by exhaustive search",
            off.join(", "),
            if corrected_ok { "passes with" } else { "FAILS" }
        ))
    }
}

fn c8_quaternion() -> Outcome {
    structure_check().map_err(e)?;
    let small: Vec<QuatO> = (0..81)
        .map(|k| {
            let d = |i: u32| (k / 3i64.pow(i) % 3) - 1;
            QuatO([d(0), d(1), d(2), d(3)])
        })
        .collect();
    for &a in &small {
        ensure(a * QuatO::ONE == a && QuatO::ONE * a == a, "unit")?;
        for &b in &small {
            ensure((a * b).conj() == b.conj() * a.conj() && (a * b).norm() == a.norm() * b.norm(), "conjugation or norm")?;
            for &c in &small {
                ensure((a * b) * c == a * (b * c), format!("associativity at {a}, {b}, {c}"))?;
                ensure(a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c, "distributivity")?;
            }
        }
    }
    ensure(QuatO::frobenius().norm() == 3 && QuatO::pi().norm() == 2, "norms of F, pi")?;
    let m = basis_matrices();
    for i in 0..6 {
        for j in 0..6 {
            ensure(pairing(&m[i], &m[j]) == NS_TABLE[i][j], format!("table entry ({i},{j})"))?;
        }
    }
    let g = solve_genus4().map_err(e)?;
    ensure(g.0 == [1, 1, -1, -1, 2, 2], format!("genus-4 class {:?}", g.0))?;
    let j = ns_to_herm(&g);
    ensure(j.a == 3 && j.d == 3 && j.det() == 3, format!("j(C) = {j}"))?;
    let dec = decompositions().map_err(e)?;
    for p in &dec.pairs {
        let (m1, m2) = (k3w_core::quaternion::rank1(p.first.a, p.first.b).map_err(e)?, k3w_core::quaternion::rank1(p.second.a, p.second.b).map_err(e)?);
        ensure(m1 + m2 == j && pairing(&m1, &m2) == 3, format!("decomposition {}", p.class))?;
        for l in [&p.first, &p.second] {
            ensure(class_name(tangent_class(l.a, l.b).map_err(e)?) == p.class, format!("tangent class of {}", l.name))?;
        }
    }
    ensure(dec.cross_pairings.iter().all(|&x| x == 1 || x == 2), "cross pairing outside {1,2}")?;
    let classes: BTreeSet<&str> = dec.pairs.iter().map(|p| p.class.as_str()).collect();
    ensure(classes == CLASS_ORDER.into_iter().collect(), "classes are not P1(GF(9))")?;
    Ok("ring axioms on 81^3 triples, N(F)=3, N(pi)=2, 6x6 table, class (1,1,-1,-1,2,2), j(C) diag (3,3) det 3, 10 decompositions, cross pairings in {1,2}, 10 tangent classes".into())
}

fn c9_elliptic() -> Outcome {
    let t = torsion();
    ensure(t.counts == [4, 16, 64] && t.f9_is_four_torsion, format!("counts {:?}", t.counts))?;
    for g in group_law_checks() {
        ensure(g.holds(), format!("{} fails at {} of {}", g.name, g.failures, g.checked))?;
    }
    let pts = e_points(Level::F81);
    ensure(pts.iter().all(|p| pi_formula(p) == p.sub(&p.tau())), "pi formula != id - tau")?;
    let ids = endo_identities();
    let red: Vec<String> = ids
        .iter()
        .filter(|c| !c.holds())
        .map(|c| format!("'{}' fails at {} of {} points and is {} in O", c.name, c.failures, c.checked, if c.holds_in_order == Some(false) { "false" } else { "true" }))
        .collect();
    if red.is_empty() {
        Ok("associativity on E(F9), 4/16/64, Ker[4] = E(F9), all endomorphism relations at 64 points, pi = id - tau".into())
    } else {
        Err(format!(
            "{}; since pi = 1 - tau and tau sigma = sigma^2 tau, sigma pi = pi sigma would force sigma tau = tau sigma; the other {} relations, associativity, counts 4/16/64, Ker[4] = E(F9) and pi = id - tau all hold",
            red.join("; "),
            ids.len() - red.len()
        ))
    }
}

fn c10_genus4() -> Outcome {
    let checks = phi_checks().map_err(e)?;
    ensure(checks.iter().all(|c| c.holds()), "rational identity fails")?;
    let c9 = genus4_points(Level::F9);
    let images: BTreeSet<_> = c9.iter().map(psi).collect();
    let listed: BTreeSet<_> = base_ten().into_iter().collect();
    ensure(c9.len() == 10 && images == listed, "psi(C(F9)) != listed ten")?;
    let c81 = genus4_points(Level::F81);
    let im81: BTreeSet<_> = c81.iter().map(psi).collect();
    ensure(im81.len() == c81.len(), "psi not injective on C(F81)")?;
    let g = genus4_report().map_err(e)?;
    ensure(g.holds(), "genus-4 report")?;
    let l = translate_check(&family_d().map_err(e)?);
    ensure(l.holds(), format!("{l:?}"))?;
    Ok(format!("{} rational identities, psi bijective C(F9) -> 10 listed points, injective on {} points of C(F81), 16 translates avoid Ker[4] off Ker[2]", checks.len(), c81.len()))
}

fn c11_families() -> Outcome {
    let d = family_d().map_err(e)?;
    ensure(d.len() == 16, "|D|")?;
    for (i, a) in d.iter().enumerate() {
        for b in &d[i + 1..] {
            ensure(a.points.iter().filter(|(p, _)| b.contains(p)).count() == 6, "D overlap")?;
        }
    }
    let fam = family_e().map_err(e)?;
    ensure(fam.len() == 80, "|E|")?;
    let k2 = ker2();
    ensure(fam.iter().all(|g| k2.iter().filter(|p| g.contains(p)).count() == 4), "2-torsion per curve")?;
    ensure(k2.iter().all(|p| fam.iter().filter(|g| g.contains(p)).count() == 20), "curves per 2-torsion point")?;
    let inc = full_4tors_incidence(&fam);
    ensure(inc.holds(), format!("{} degree, {} antipodal failures", inc.degree_failures, inc.antipodal_failures))?;
    ensure(ker4().len() == 256, "Ker[4]")?;
    let t = four_torsion_table(&[LEFT_FIXTURE, RIGHT_FIXTURE]).map_err(e)?;
    ensure(t.uniqueness_failures.is_empty(), format!("{} points not on exactly one curve through 0", t.uniqueness_failures.len()))?;
    let mism: Vec<String> = t.fixture_mismatches.iter().map(|c| format!("({},{})", c.row, c.col)).collect();
    ensure(t.fixture_cells == 240 && mism.is_empty(), format!("fixture mismatches at {}", mism.join(" ")))?;
    Ok("|D|=16 overlap 6, |E|=80 with 4 two-torsion points each and 20 per point, 240 points on one E0 and four E curves with the -1 pairing, 240 table entries match".into())
}

fn c12_kummer() -> Outcome {
    let s = build_structure().map_err(e)?;
    ensure(s.curves.len() == 112 && s.points.len() == 280, "counts")?;
    ensure(s.curve_points.iter().all(|p| p.len() == 10) && s.point_curves.iter().all(|c| c.len() == 4), "degrees")?;
    for i in 0..112 {
        for j in i + 1..112 {
            ensure(s.shared_points(i, j) <= 1, "curves share two points")?;
        }
    }
    let g = curve_graph(&s).map_err(e)?;
    ensure(g.holds() && g.edges == 1680, "curve graph")?;
    let l = intersection_ledger(&s);
    ensure(l.entries.iter().all(|x| x.on_kummer == -2) && l.holds(), "self-intersections")?;
    Ok("112 curves, 280 points, (280_4,112_10), share at most one point, 30-regular, (16)_10, every curve -2".into())
}

fn graphs() -> Result<Vec<SimpleGraph>, String> {
    let code = build_golay().map_err(e)?;
    let roots = orthogonal_roots(&minimal_shell(&code).map_err(e)?).map_err(e)?;
    let leech = SimpleGraph::new(112, root_incidence(&roots).map_err(e)?.edges()).map_err(e)?;
    let fermat = SimpleGraph::from_adjacency(&line_graph(&surface_lines().map_err(e)?.lines)).map_err(e)?;
    let kummer = SimpleGraph::from_adjacency(&curve_graph(&build_structure().map_err(e)?).map_err(e)?.adjacency).map_err(e)?;
    Ok(vec![leech, fermat, kummer])
}

fn c13_iso() -> Outcome {
    let gs = graphs()?;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let IsoResult::Isomorphic { map } = isomorphism(&gs[i], &gs[j]).map_err(e)? else {
            return Err(format!("graphs {i} and {j} not isomorphic"));
        };
        let image: BTreeSet<(usize, usize)> = gs[i].edges().iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))).collect();
        let target: BTreeSet<(usize, usize)> = gs[j].edges().iter().copied().collect();
        ensure(image == target && map.iter().collect::<BTreeSet<_>>().len() == 112, "bijection fails verification")?;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for g in &gs {
        let base = canonical_label(g).edges;
        for _ in 0..100 {
            let mut p: Vec<usize> = (0..112).collect();
            p.shuffle(&mut rng);
            ensure(canonical_label(&g.permuted(&p).map_err(e)?).edges == base, "canonical form moved under relabeling")?;
        }
    }
    Ok("leech, fermat, kummer pairwise isomorphic with verified bijections; canonical form stable under 3 x 100 relabelings".into())
}

fn c14_negative() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_k3w");
    let mut seen = Vec::new();
    for (fault, suite, check) in [
        ("octad", "golay", "octads are codewords of weight 8"),
        ("line", "fermat", "lines lie on the surface"),
        ("table-cell", "abelian", "tables match fixture"),
    ] {
        let out = Command::new(bin).args(["verify", suite, "--fault", fault, "--stable", "--jobs", "2"]).output().map_err(e)?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.code() == Some(1), format!("{fault}: exit {:?}", out.status.code()))?;
        ensure(stdout.lines().any(|l| l.starts_with("FAIL") && l.ends_with(check)), format!("{fault}: '{check}' not named"))?;
        let clean = Command::new(bin).args(["verify", suite, "--stable"]).output().map_err(e)?;
        ensure(clean.status.code() == Some(0), format!("{suite} fails without a fault"))?;
        seen.push(format!("{fault} -> exit 1 naming '{check}'"));
    }
    Ok(seen.join("; "))
}

fn main() {
    let criteria: [(usize, &str, u64, fn() -> Outcome); 14] = [
        (1, "golay", 5, c1_golay),
        (2, "leech shell", 10, c2_shell),
        (3, "root counts", 30, c3_roots),
        (4, "weyl identities", 5, c4_weyl),
        (5, "root incidence", 10, c5_incidence),
        (6, "fermat", 30, c6_fermat),
        (7, "quadric", 5, c7_quadric),
        (8, "quaternion / NS", 5, c8_quaternion),
        (9, "elliptic curve", 20, c9_elliptic),
        (10, "genus-4 data", 10, c10_genus4),
        (11, "families and tables", 30, c11_families),
        (12, "kummer", 10, c12_kummer),
        (13, "isomorphism", 60, c13_iso),
        (14, "negative path", 5, c14_negative),
    ];
    let total = Instant::now();
    let mut red = Vec::new();
    for (id, name, bound, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(bound);
        let pass = outcome.is_ok() && in_time;
        let detail = match &outcome {
            Ok(d) | Err(d) => d.clone(),
        };
        let timing = format!("{:.2}s / {bound}s{}", elapsed.as_secs_f64(), if in_time { "" } else { " OVER BOUND" });
        println!("criterion {id:>2} {:<4} {name:<20} [{timing}] {detail}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            red.push(id);
        }
    }
    println!(
        "acceptance: {}/14 pass in {:.1}s; red {red:?}; known red {EXPECTED_RED:?}",
        14 - red.len(),
        total.elapsed().as_secs_f64()
    );
    if red != EXPECTED_RED {
        eprintln!("red set differs from the known red set");
        std::process::exit(1);
    }
}
