use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use serde_json::json;

use k3w_core::abelian::four_torsion_table;
use k3w_core::golay::{build_golay, format_mask, labels_of, INF};
use k3w_core::kummer::build_structure;
use k3w_core::quadric::{expected_base_points, form_incidence, thirty_forms};
use k3w_core::quaternion::decompositions;

use crate::graphs::{load, GraphKind, NamedGraph};
use crate::suites::{form_string, leech_data, Inputs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    Octads,
    Roots,
    Lines,
    Incidence,
    Tables,
    Quadric,
    Decompositions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

fn label_str(l: i32) -> String {
    if l == INF {
        "inf".into()
    } else {
        l.to_string()
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn dot(g: &NamedGraph) -> String {
    let mut s = format!("graph {} {{\n", g.name);
    for (i, n) in g.vertex_names.iter().enumerate() {
        let _ = writeln!(s, "  {i} [label=\"{}\"];", n.replace('"', "'"));
    }
    for &(u, v) in g.graph.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(what: What, format: Format, inputs: &Inputs) -> Result<String> {
    match (what, format) {
        (What::Octads, Format::Dot) | (What::Tables, Format::Dot) | (What::Quadric, Format::Dot) | (What::Decompositions, Format::Dot) => {
            bail!("dot output is only available for roots, lines and incidence")
        }
        (What::Octads, _) => {
            let code = build_golay()?;
            let mut octads: Vec<Vec<String>> = code.octads().iter().map(|&o| labels_of(o).into_iter().map(label_str).collect()).collect();
            octads.sort_by_key(|o| {
                o.iter().map(|l| if l == "inf" { -1 } else { l.parse::<i32>().unwrap_or(i32::MAX) }).collect::<Vec<_>>()
            });
            Ok(match format {
                Format::Csv => octads.iter().map(|o| o.join(",") + "\n").collect(),
                _ => pretty(&json!(octads)),
            })
        }
        (What::Roots, Format::Dot) => Ok(dot(&load(GraphKind::Leech).map_err(|e| anyhow!(e))?)),
        (What::Roots, _) => {
            let d = leech_data().map_err(|e| anyhow!(e))?;
            Ok(match format {
                Format::Csv => {
                    let mut s = String::from("index,type,octad,m,n");
                    for c in 0..24 {
                        let _ = write!(s, ",l_{}", label_str(k3w_core::golay::label(c)));
                    }
                    s.push('\n');
                    for (i, r) in d.roots.iter().enumerate() {
                        let _ = write!(s, "{i},{:?},{},{},{}", r.kind, csv_field(&format_mask(r.octad)), r.root.m, r.root.n);
                        for x in r.root.lambda {
                            let _ = write!(s, ",{x}");
                        }
                        s.push('\n');
                    }
                    s
                }
                _ => pretty(&json!(d
                    .roots
                    .iter()
                    .enumerate()
                    .map(|(i, r)| json!({"index": i, "type": r.kind, "octad": format_mask(r.octad), "m": r.root.m, "n": r.root.n, "lambda": r.root.lambda.to_vec()}))
                    .collect::<Vec<_>>())),
            })
        }
        (What::Lines, Format::Dot) => Ok(dot(&load(GraphKind::Fermat).map_err(|e| anyhow!(e))?)),
        (What::Lines, _) => {
            let (_, lines) = crate::suites::fermat_lines().map_err(|e| anyhow!(e))?;
            let rows: Vec<(usize, Vec<String>, Vec<String>)> = lines
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let r = l.rows().iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
                    let p = l.points().iter().map(|p| p.to_strings().join(" ")).collect();
                    (i, r, p)
                })
                .collect();
            Ok(match format {
                Format::Csv => {
                    let mut s = String::from("index,row0,row1\n");
                    for (i, r, _) in &rows {
                        let _ = writeln!(s, "{i},{},{}", r[0], r[1]);
                    }
                    s
                }
                _ => pretty(&json!(rows.iter().map(|(i, r, p)| json!({"index": i, "rows": r, "points": p})).collect::<Vec<_>>())),
            })
        }
        (What::Incidence, Format::Dot) => Ok(dot(&load(GraphKind::Kummer).map_err(|e| anyhow!(e))?)),
        (What::Incidence, _) => {
            let s = build_structure()?;
            Ok(match format {
                Format::Csv => {
                    let mut out = String::from("curve,point\n");
                    for (c, pts) in s.curve_points.iter().enumerate() {
                        for &p in pts {
                            let _ = writeln!(out, "{},{}", csv_field(&s.curve_names[c]), csv_field(&s.point_names[p]));
                        }
                    }
                    out
                }
                _ => pretty(&json!({"curves": s.curve_names, "points": s.point_names, "curve_points": s.curve_points})),
            })
        }
        (What::Tables, _) => {
            let t = four_torsion_table(&[&inputs.left_table, &inputs.right_table])?;
            Ok(match format {
                Format::Csv => {
                    let mut s = String::from("row,col,computed,fixture\n");
                    for c in &t.cells {
                        let _ = writeln!(s, "{},{},{},{}", c.row, c.col, csv_field(&c.computed.join(" ")), csv_field(c.fixture.as_deref().unwrap_or("")));
                    }
                    s
                }
                _ => pretty(&json!(t.cells)),
            })
        }
        (What::Quadric, _) => {
            let forms = thirty_forms();
            let bps = expected_base_points();
            let inc = form_incidence(&forms, &bps);
            let through = |i: usize| -> Vec<String> { (0..bps.len()).filter(|&j| inc[i][j]).map(|j| bps[j].to_string()).collect() };
            Ok(match format {
                Format::Csv => {
                    let mut s = String::from("index,form,base_points\n");
                    for (i, f) in forms.iter().enumerate() {
                        let _ = writeln!(s, "{},{},{}", i + 1, csv_field(&form_string(f)), csv_field(&through(i).join(" ")));
                    }
                    s
                }
                _ => pretty(&json!({
                    "base_points": bps.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "forms": forms.iter().enumerate().map(|(i, f)| json!({"index": i + 1, "form": form_string(f), "base_points": through(i)})).collect::<Vec<_>>(),
                })),
            })
        }
        (What::Decompositions, _) => {
            let d = decompositions()?;
            Ok(match format {
                Format::Csv => {
                    let mut s = String::from("class,first,second,sum_is_genus4,mutual_pairing\n");
                    for p in &d.pairs {
                        let _ = writeln!(s, "{},{},{},{},{}", p.class, csv_field(&p.first.name), csv_field(&p.second.name), p.sum_is_genus4, p.mutual_pairing);
                    }
                    s
                }
                _ => pretty(&json!({
                    "genus4": d.genus4.to_string(),
                    "pairs": d.pairs.iter().map(|p| json!({
                        "class": p.class,
                        "first": {"name": p.first.name, "a": p.first.a.to_string(), "b": p.first.b.to_string()},
                        "second": {"name": p.second.name, "a": p.second.a.to_string(), "b": p.second.b.to_string()},
                        "sum_is_genus4": p.sum_is_genus4,
                        "mutual_pairing": p.mutual_pairing,
                    })).collect::<Vec<_>>(),
                })),
            })
        }
    }
}
