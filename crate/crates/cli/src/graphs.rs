use serde::Serialize;

use k3w_core::golay::format_mask;
use k3w_core::graph::{isomorphism, isomorphism_colored, verify_isomorphism, IsoResult, SimpleGraph};
use k3w_core::kummer::{build_structure, curve_graph};
use k3w_core::leech::{sixteen_ten_roots, RootType};

use crate::suites::{fermat_lines, leech_data};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphKind {
    Leech,
    Fermat,
    Kummer,
}

pub struct NamedGraph {
    pub name: &'static str,
    pub graph: SimpleGraph,
    pub vertex_names: Vec<String>,
    /// The two sides of a distinguished (16)_10 configuration.
    pub sixteen_ten: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn load(kind: GraphKind) -> Result<NamedGraph, String> {
    match kind {
        GraphKind::Leech => {
            let d = leech_data()?;
            let graph = SimpleGraph::new(d.roots.len(), d.inc.edges()).map_err(|e| e.to_string())?;
            let vertex_names = d
                .roots
                .iter()
                .map(|r| format!("{}{}", if r.kind == RootType::I { "I" } else { "II" }, format_mask(r.octad)))
                .collect();
            let st = sixteen_ten_roots(&d.roots, &d.inc).map_err(|e| e.to_string())?;
            Ok(NamedGraph { name: "leech", graph, vertex_names, sixteen_ten: Some((st.a_side, st.b_side)) })
        }
        GraphKind::Fermat => {
            let (_, lines) = fermat_lines()?;
            let adj = k3w_core::fermat::line_graph(lines);
            let graph = SimpleGraph::from_adjacency(&adj).map_err(|e| e.to_string())?;
            let vertex_names = lines
                .iter()
                .map(|l| {
                    let rows: Vec<String> = l
                        .rows()
                        .iter()
                        .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
                        .collect();
                    rows.join(" ")
                })
                .collect();
            Ok(NamedGraph { name: "fermat", graph, vertex_names, sixteen_ten: None })
        }
        GraphKind::Kummer => {
            let s = build_structure().map_err(|e| e.to_string())?;
            let g = curve_graph(&s).map_err(|e| e.to_string())?;
            let graph = SimpleGraph::from_adjacency(&g.adjacency).map_err(|e| e.to_string())?;
            Ok(NamedGraph {
                name: "kummer",
                graph,
                vertex_names: s.curve_names.clone(),
                sixteen_ten: Some((s.exceptional(), s.genus_images())),
            })
        }
    }
}

pub fn all_graphs() -> Result<Vec<NamedGraph>, String> {
    [GraphKind::Leech, GraphKind::Fermat, GraphKind::Kummer].into_iter().map(load).collect()
}

/// A verified isomorphism, as images of the left vertices.
pub fn find_isomorphism(left: &NamedGraph, right: &NamedGraph) -> Result<Option<Vec<usize>>, String> {
    match isomorphism(&left.graph, &right.graph).map_err(|e| e.to_string())? {
        IsoResult::Isomorphic { map } if verify_isomorphism(&left.graph, &right.graph, &map) => Ok(Some(map)),
        IsoResult::Isomorphic { .. } => Err("isomorphism failed verification".into()),
        IsoResult::NotIsomorphic { .. } => Ok(None),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SixteenTenMatch {
    /// Whether the sides had to be exchanged.
    pub swapped: bool,
    pub map: Vec<usize>,
}

fn side_colors(n: usize, a: &[usize], b: &[usize]) -> Vec<u32> {
    let mut c = vec![0; n];
    for &i in a {
        c[i] = 1;
    }
    for &i in b {
        c[i] = 2;
    }
    c
}

/// An isomorphism carrying the (16)_10 of `right` onto that of `left`, side
/// by side up to exchanging the two sides.
pub fn sixteen_ten_correspondence(left: &NamedGraph, right: &NamedGraph) -> Result<Option<SixteenTenMatch>, String> {
    let (Some((la, lb)), Some((ra, rb))) = (&left.sixteen_ten, &right.sixteen_ten) else {
        return Err("graph has no distinguished (16)_10".into());
    };
    let n = left.graph.vertex_count();
    let lc = side_colors(n, la, lb);
    for swapped in [false, true] {
        let rc = if swapped { side_colors(n, rb, ra) } else { side_colors(n, ra, rb) };
        if let IsoResult::Isomorphic { map } = isomorphism_colored(&left.graph, &lc, &right.graph, &rc).map_err(|e| e.to_string())? {
            if verify_isomorphism(&left.graph, &right.graph, &map) && (0..n).all(|v| lc[v] == rc[map[v]]) {
                return Ok(Some(SixteenTenMatch { swapped, map }));
            }
        }
    }
    Ok(None)
}
