//! Serialisable report documents and their table/csv/json renderings.
//!
//! Struct field order is the JSON key order; the schemas under `schema/`
//! describe these documents.

use std::fmt::Write as _;

use serde::Serialize;

use crate::balance::{BalanceVerdict, Mode, WPartition};
use crate::graph::{Dimension, EdgeKind, Vertex};
use crate::iwe::PathTrace;
use crate::oracle::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembersDoc {
    pub closer_to_u: Vec<String>,
    pub closer_to_v: Vec<String>,
    pub equidistant: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionDoc {
    pub u: String,
    pub v: String,
    pub kind: EdgeKind,
    pub wuv: u64,
    pub wvu: u64,
    pub equal: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<MembersDoc>,
}

impl PartitionDoc {
    pub fn new(p: &WPartition, n: Dimension) -> Self {
        let names = |vs: &[Vertex]| vs.iter().map(|v| v.display(n).to_string()).collect();
        PartitionDoc {
            u: p.edge.u.display(n).to_string(),
            v: p.edge.v.display(n).to_string(),
            kind: p.edge.kind,
            wuv: p.size_wuv,
            wvu: p.size_wvu,
            equal: p.size_equal,
            members: p.members.as_ref().map(|m| MembersDoc {
                closer_to_u: names(&m.closer_to_u),
                closer_to_v: names(&m.closer_to_v),
                equidistant: names(&m.equidistant),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeDoc {
    pub n: u32,
    pub vertices: u64,
    pub edges: u64,
    pub mode: Mode,
    pub distance_balanced: bool,
    pub nicely_distance_balanced: bool,
    pub ndb_constant: Option<u64>,
    pub cube_edge: PartitionDoc,
    pub cycle_edge: PartitionDoc,
    pub edges_checked: u64,
    pub checks: Vec<VerdictCheck>,
}

impl AnalyzeDoc {
    pub fn new(v: &BalanceVerdict) -> Self {
        let n = v.n;
        let mut checks = vec![
            VerdictCheck {
                name: "cube_edge_balanced",
                passed: v.cube_edge.is_balanced(),
            },
            VerdictCheck {
                name: "cycle_edge_balanced",
                passed: v.cycle_edge.is_balanced(),
            },
            VerdictCheck {
                name: "cycle_edge_equal_set_empty",
                passed: v.cycle_edge.size_equal == 0,
            },
        ];
        if let Some(ok) = v.orbit_consistent {
            checks.push(VerdictCheck {
                name: "edge_orbit_consistency",
                passed: ok,
            });
        }
        AnalyzeDoc {
            n: n.get(),
            vertices: n.vertex_count() as u64,
            edges: n.edge_count() as u64,
            mode: v.mode,
            distance_balanced: v.distance_balanced,
            nicely_distance_balanced: v.nicely_distance_balanced(),
            ndb_constant: v.ndb_constant,
            cube_edge: PartitionDoc::new(&v.cube_edge, n),
            cycle_edge: PartitionDoc::new(&v.cycle_edge, n),
            edges_checked: v.edges_checked,
            checks,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => {
                let mut s =
                    String::from("n,kind,u,v,wuv,wvu,equal,distance_balanced,ndb_constant\n");
                for p in [&self.cube_edge, &self.cycle_edge] {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{},{},{},{}",
                        self.n,
                        p.kind,
                        p.u,
                        p.v,
                        p.wuv,
                        p.wvu,
                        p.equal,
                        self.distance_balanced,
                        self.ndb_constant.map(|c| c.to_string()).unwrap_or_default()
                    );
                }
                s
            }
            OutputFormat::Table => {
                let mut s = String::new();
                let _ = writeln!(s, "n                         {}", self.n);
                let _ = writeln!(s, "vertices                  {}", self.vertices);
                let _ = writeln!(s, "edges                     {}", self.edges);
                let _ = writeln!(
                    s,
                    "mode                      {}",
                    match self.mode {
                        Mode::Representative => "representative",
                        Mode::Exhaustive => "exhaustive",
                    }
                );
                let _ = writeln!(s, "edges checked             {}", self.edges_checked);
                let _ = writeln!(s, "distance_balanced:        {}", self.distance_balanced);
                let _ = writeln!(
                    s,
                    "nicely_distance_balanced: {}",
                    self.nicely_distance_balanced
                );
                let _ = writeln!(
                    s,
                    "ndb_constant:             {}",
                    self.ndb_constant
                        .map(|c| c.to_string())
                        .unwrap_or_else(|| "-".into())
                );
                let _ = writeln!(
                    s,
                    "\n{:<6} {:<22} {:>10} {:>10} {:>10}",
                    "kind", "edge", "|W_uv|", "|W_vu|", "|W^v_u|"
                );
                for p in [&self.cube_edge, &self.cycle_edge] {
                    let _ = writeln!(
                        s,
                        "{:<6} {:<22} {:>10} {:>10} {:>10}",
                        p.kind.to_string(),
                        format!("{}-{}", p.u, p.v),
                        p.wuv,
                        p.wvu,
                        p.equal
                    );
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WSetsDoc {
    pub n: u32,
    #[serde(flatten)]
    pub partition: PartitionDoc,
}

impl WSetsDoc {
    pub fn new(p: &WPartition, n: Dimension) -> Self {
        WSetsDoc {
            n: n.get(),
            partition: PartitionDoc::new(p, n),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let p = &self.partition;
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => match &p.members {
                // one row per vertex
                Some(m) => {
                    let mut s = String::from("set,vertex\n");
                    for (set, vs) in [
                        ("wuv", &m.closer_to_u),
                        ("wvu", &m.closer_to_v),
                        ("equal", &m.equidistant),
                    ] {
                        for v in vs {
                            let _ = writeln!(s, "{set},{v}");
                        }
                    }
                    s
                }
                None => format!("wuv,wvu,equal\n{},{},{}\n", p.wuv, p.wvu, p.equal),
            },
            OutputFormat::Table => {
                let mut s = format!(
                    "{} edge {}-{} (n={})\n|W_uv|,|W_vu|,|W^v_u|: {},{},{}\n",
                    p.kind, p.u, p.v, self.n, p.wuv, p.wvu, p.equal
                );
                if let Some(m) = &p.members {
                    for (label, vs) in [
                        ("W_uv", &m.closer_to_u),
                        ("W_vu", &m.closer_to_v),
                        ("W^v_u", &m.equidistant),
                    ] {
                        let _ = writeln!(s, "{label}: {}", vs.join(" "));
                    }
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteDoc {
    pub n: u32,
    pub from: String,
    pub to: String,
    pub length: u64,
    pub path: Vec<String>,
}

impl RouteDoc {
    pub fn new(trace: &PathTrace, n: Dimension) -> Self {
        let path: Vec<String> = trace
            .vertices
            .iter()
            .map(|v| v.display(n).to_string())
            .collect();
        RouteDoc {
            n: n.get(),
            from: path.first().cloned().unwrap_or_default(),
            to: path.last().cloned().unwrap_or_default(),
            length: trace.len() as u64,
            path,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => to_json(self),
            OutputFormat::Csv => {
                let mut s = String::from("step,vertex\n");
                for (i, v) in self.path.iter().enumerate() {
                    let _ = writeln!(s, "{i},{v}");
                }
                s
            }
            OutputFormat::Table => {
                let mut s = String::new();
                for v in &self.path {
                    let _ = writeln!(s, "{v}");
                }
                let _ = writeln!(s, "length {}", self.length);
                s
            }
        }
    }
}

pub fn render_verification(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => {
            let mut s = String::from("name,n,passed,checked,counterexample\n");
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    c.name,
                    c.n,
                    c.passed,
                    c.checked,
                    csv_field(c.counterexample.as_deref().unwrap_or(""))
                );
            }
            s
        }
        OutputFormat::Table => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{} n={:<2} {:<32} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.n,
                    c.name,
                    c.counterexample.as_deref().unwrap_or(&c.detail)
                );
            }
            let _ = writeln!(
                s,
                "\n{} checks, {} vertices, {} edges: {}",
                report.checks_run,
                report.vertices,
                report.edges,
                if report.all_passed {
                    "all passed"
                } else {
                    "FAILURES"
                }
            );
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report documents serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::analyze;

    #[test]
    fn analyze_json_key_order() {
        let n = Dimension::new(4).unwrap();
        let doc = AnalyzeDoc::new(&analyze(n, Mode::Representative, false).unwrap());
        let json = doc.render(OutputFormat::Json);
        let keys = [
            "\"n\"",
            "\"vertices\"",
            "\"edges\"",
            "\"distance_balanced\"",
            "\"ndb_constant\"",
            "\"cube_edge\"",
            "\"cycle_edge\"",
            "\"checks\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"ndb_constant\": 32"));
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
