//! DOT, TSV and JSON rendering. Every emitter walks `LambdaPoint` order.

use std::collections::BTreeMap;
use std::fmt::Write;

use lieq_core::{LambdaPoint, QuiverData, QuiverShape};
use serde_json::{json, Value};

pub fn node_id(p: &LambdaPoint) -> String {
    format!("{};{}", p.weight, p.grade)
}

pub fn dot(q: &QuiverData) -> String {
    let mut out = String::from("digraph Q {\n");
    for v in q.vertices() {
        writeln!(out, "  \"{}\" [label=\"{v}\"];", node_id(v)).unwrap();
    }
    for ((s, d), &m) in q.arrows() {
        write!(out, "  \"{}\" -> \"{}\"", node_id(s), node_id(d)).unwrap();
        if m > 1 {
            write!(out, " [label=\"{m}\"]").unwrap();
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}

pub fn point(p: &LambdaPoint) -> Value {
    json!([p.weight.to_string(), p.grade])
}

pub fn shape_name(s: &QuiverShape) -> String {
    match s {
        QuiverShape::Discrete(n) => format!("discrete({n})"),
        QuiverShape::Kronecker(m) => format!("kronecker({m})"),
        QuiverShape::Linear(n) => format!("A{n}"),
        QuiverShape::DTilde(n) => format!("D~{n}"),
        QuiverShape::Star(arms) => {
            let a: Vec<String> = arms.iter().map(|x| x.to_string()).collect();
            format!("star({})", a.join(","))
        }
        QuiverShape::Other => "other".into(),
    }
}

pub fn quiver_summary(q: &QuiverData) -> Value {
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|((s, d), m)| json!({"src": point(s), "dst": point(d), "multiplicity": m}))
        .collect();
    json!({
        "lie": q.lie_type().to_string(),
        "vertices": q.vertices().iter().map(point).collect::<Vec<_>>(),
        "arrows": arrows,
        "arrow_total": q.arrow_total(),
        "interval_closed": q.is_interval_closed(),
        "shape": shape_name(&lieq_core::quiver::classify(q)),
    })
}

/// Tab-separated table with a header row.
pub struct Tsv {
    out: String,
}

impl Tsv {
    pub fn new(header: &[&str]) -> Tsv {
        Tsv {
            out: header.join("\t") + "\n",
        }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.out.push_str(&cells.join("\t"));
        self.out.push('\n');
    }

    pub fn comment(&mut self, line: &str) {
        writeln!(self.out, "# {line}").unwrap();
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn cells(p: &LambdaPoint) -> [String; 2] {
    [p.weight.to_string(), p.grade.to_string()]
}

pub fn pair_cells(a: &LambdaPoint, b: &LambdaPoint, rest: &[u64]) -> Vec<String> {
    let mut v: Vec<String> = cells(a).into_iter().chain(cells(b)).collect();
    v.extend(rest.iter().map(|x| x.to_string()));
    v
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

pub type PairTable = BTreeMap<(LambdaPoint, LambdaPoint), Vec<u64>>;
