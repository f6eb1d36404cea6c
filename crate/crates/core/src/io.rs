//! Text emitters and readers for partitions, trajectories, sweeps and edit
//! reports. Numbers are written with 12 significant digits, independent of
//! locale; nodes are always referred to by label.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::dynamics::{order_parameters, SweepMatrix, Trajectory};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::{FibreStats, Partition};
use crate::topoedit::EditReport;

/// `%.12g`: 12 significant digits, trailing zeros dropped, scientific
/// notation below 1e-4 or from 1e12 on.
pub fn fmt_num(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to what [`fmt_num`] prints, for JSON output.
pub fn round_num(x: f64) -> f64 {
    fmt_num(x).parse().unwrap_or(x)
}

fn label_lists(h: &Hypergraph, lists: &[Vec<usize>]) -> Value {
    Value::Array(
        lists
            .iter()
            .map(|l| Value::Array(l.iter().map(|&v| Value::String(h.label(v))).collect()))
            .collect(),
    )
}

/// `{"classes": [[labels…], …]}` in canonical class order.
pub fn partition_json(h: &Hypergraph, p: &Partition) -> String {
    let mut s = serde_json::to_string_pretty(&json!({ "classes": label_lists(h, p.classes()) }))
        .expect("serializable");
    s.push('\n');
    s
}

/// Reads a partition of `h`'s nodes from `{"classes": [[labels…], …]}`.
/// Labels may be strings or numbers; every node must appear exactly once.
pub fn parse_partition_json(text: &str, h: &Hypergraph) -> Result<Partition> {
    let v: Value = serde_json::from_str(text)?;
    let classes = v
        .get("classes")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidPartition("missing \"classes\" array".into()))?;
    let index = h.label_index();
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let members = class
            .as_array()
            .ok_or_else(|| Error::InvalidPartition("class is not an array".into()))?;
        let mut ids = Vec::with_capacity(members.len());
        for m in members {
            let label = match m {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => {
                    return Err(Error::InvalidPartition(format!("bad label {other}")));
                }
            };
            ids.push(*index.get(&label).ok_or(Error::UnknownLabel(label))?);
        }
        out.push(ids);
    }
    Partition::from_classes(h.node_count(), &out)
}

fn write_row(out: &mut String, t: f64, values: impl Iterator<Item = f64>) {
    out.push_str(&fmt_num(t));
    for v in values {
        out.push(',');
        out.push_str(&fmt_num(v));
    }
    out.push('\n');
}

/// Header `t,<label>…`, then one row per recorded step.
pub fn trajectory_csv(h: &Hypergraph, t: &Trajectory) -> String {
    let mut out = String::from("t");
    for i in 0..h.node_count() {
        out.push(',');
        out.push_str(&h.label(i));
    }
    out.push('\n');
    for (k, row) in t.rows().enumerate() {
        write_row(&mut out, t.times()[k], row.iter().copied());
    }
    out
}

/// Reads a trajectory written by [`trajectory_csv`]. Columns are matched to
/// `h`'s nodes by label and may come in any order.
pub fn parse_trajectory_csv(text: &str, h: &Hypergraph) -> Result<Trajectory> {
    let csv_error = |e: csv::Error| Error::MalformedLine {
        line: e.position().map_or(0, |p| p.line() as usize),
        reason: e.to_string(),
    };
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader.headers().map_err(csv_error)?.clone();
    if header.is_empty() {
        return Err(Error::EmptyInput);
    }
    if &header[0] != "t" {
        return Err(Error::MalformedLine {
            line: 1,
            reason: "header must start with \"t\"".into(),
        });
    }
    let index = h.label_index();
    let mut node_of_col = Vec::with_capacity(header.len() - 1);
    let mut seen = HashSet::new();
    for c in header.iter().skip(1) {
        let node = *index
            .get(c)
            .ok_or_else(|| Error::UnknownLabel(c.to_string()))?;
        if !seen.insert(node) {
            return Err(Error::DuplicateLabel(c.to_string()));
        }
        node_of_col.push(node);
    }
    if node_of_col.len() != h.node_count() {
        return Err(Error::InvalidParameter(format!(
            "trajectory has {} node columns, hypergraph has {} nodes",
            node_of_col.len(),
            h.node_count()
        )));
    }
    let mut times = Vec::new();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| Error::MalformedLine {
                line,
                reason: format!("not a number: {s:?}"),
            })
        };
        times.push(parse(&record[0])?);
        let mut row = vec![0.0; h.node_count()];
        for (c, &node) in node_of_col.iter().enumerate() {
            row[node] = parse(&record[c + 1])?;
        }
        rows.push(row);
    }
    Trajectory::from_rows(times, rows)
}

/// Header `t,global,fibre_0,…`: the global order parameter and one column
/// per class of `classes` (canonical order), per recorded step.
pub fn order_parameter_csv(t: &Trajectory, classes: Option<&Partition>) -> String {
    let mut out = String::from("t,global");
    for c in 0..classes.map_or(0, Partition::class_count) {
        let _ = write!(out, ",fibre_{c}");
    }
    out.push('\n');
    for (k, row) in t.rows().enumerate() {
        let r = order_parameters(row, classes);
        write_row(
            &mut out,
            t.times()[k],
            std::iter::once(r.global).chain(r.per_class),
        );
    }
    out
}

/// First row: a corner cell then the α₃ values; each following row: α₂ then
/// the averaged order parameters.
pub fn sweep_csv(m: &SweepMatrix) -> String {
    let mut out = String::from("alpha2\\alpha3");
    for &a in &m.alpha3 {
        out.push(',');
        out.push_str(&fmt_num(a));
    }
    out.push('\n');
    for (i, &a2) in m.alpha2.iter().enumerate() {
        write_row(&mut out, a2, m.values[i].iter().copied());
    }
    out
}

/// `{"added": [[labels…]], "removed": [[labels…]], "converged": b, "iterations": n}`
pub fn edit_report_json(r: &EditReport) -> String {
    let h = &r.hypergraph;
    let mut s = serde_json::to_string_pretty(&json!({
        "added": label_lists(h, &r.added),
        "removed": label_lists(h, &r.removed),
        "converged": r.converged,
        "iterations": r.iterations,
    }))
    .expect("serializable");
    s.push('\n');
    s
}

/// One-line summary table: node count, hyperedge count, nodes per fibre,
/// nontrivial fibre count.
pub fn stats_csv(h: &Hypergraph, s: &FibreStats) -> String {
    format!(
        "nodes,hyperedges,nodes_per_fibre,nontrivial_fibres\n{},{},{},{}\n",
        h.node_count(),
        h.edge_count(),
        fmt_num(s.avg_class_size),
        s.nontrivial_count
    )
}

/// `label,omega` rows.
pub fn frequencies_csv(h: &Hypergraph, omega: &[f64]) -> String {
    let mut out = String::from("label,omega\n");
    for (i, &w) in omega.iter().enumerate() {
        let _ = writeln!(out, "{},{}", h.label(i), fmt_num(w));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{parse_hypergraph, Format};

    #[test]
    fn twelve_digit_formatting() {
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(fmt_num(2.0 / 3.0), "0.666666666667");
        assert_eq!(fmt_num(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_num(-12.5), "-12.5");
        assert_eq!(fmt_num(1e-5), "1e-05");
        assert_eq!(fmt_num(0.0001), "0.0001");
        assert_eq!(fmt_num(123456789012.0), "123456789012");
        assert_eq!(fmt_num(1234567890123.0), "1.23456789012e+12");
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(99.99999999999999), "100");
        assert_eq!(fmt_num(f64::NAN), "nan");
    }

    #[test]
    fn partition_round_trip() {
        let h = parse_hypergraph("x y z\nw x\nw y\n", Format::HyperedgeList).unwrap();
        let p = Partition::from_classes(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let text = partition_json(&h, &p);
        assert!(text.contains("\"x\""));
        assert_eq!(parse_partition_json(&text, &h).unwrap(), p);
        assert!(matches!(
            parse_partition_json(r#"{"classes": [["x","q"]]}"#, &h),
            Err(Error::UnknownLabel(_))
        ));
        assert!(parse_partition_json(r#"{"classes": [["x","y"],["z"]]}"#, &h).is_err());
    }

    #[test]
    fn trajectory_round_trip() {
        let h = parse_hypergraph("b a\n", Format::HyperedgeList).unwrap();
        let t = Trajectory::from_rows(vec![0.0, 0.1], vec![vec![0.5, 1.0], vec![0.25, 2.0 / 3.0]])
            .unwrap();
        let text = trajectory_csv(&h, &t);
        assert_eq!(text, "t,b,a\n0,0.5,1\n0.1,0.25,0.666666666667\n");
        let back = parse_trajectory_csv(&text, &h).unwrap();
        assert_eq!(back.row(0), t.row(0));
        assert!((back.phase(1, 1) - 2.0 / 3.0).abs() < 1e-12);
        // columns in another order map back by label
        let swapped = parse_trajectory_csv("t,a,b\n0,1,0.5\n", &h).unwrap();
        assert_eq!(swapped.row(0), &[0.5, 1.0]);
    }

    #[test]
    fn order_parameter_columns() {
        let t = Trajectory::from_rows(vec![0.0], vec![vec![1.0, 1.0, 1.0]]).unwrap();
        let p = Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(
            order_parameter_csv(&t, Some(&p)),
            "t,global,fibre_0,fibre_1\n0,1,1,1\n"
        );
    }

    #[test]
    fn sweep_layout() {
        let m = SweepMatrix {
            alpha2: vec![0.0, 0.5],
            alpha3: vec![0.0, 0.25, 0.75],
            values: vec![vec![1.0, 0.9, 0.8], vec![0.7, 0.6, 0.5]],
        };
        assert_eq!(
            sweep_csv(&m),
            "alpha2\\alpha3,0,0.25,0.75\n0,1,0.9,0.8\n0.5,0.7,0.6,0.5\n"
        );
    }
}
