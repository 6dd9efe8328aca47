//! JSON and text renderings of analysis reports and moment tables.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::arith::{embed, CycloNumber, QClass};
use crate::error::Error;
use crate::haar::{HaarMomentTable, InvarianceReport};
use crate::hopf::{AnalysisReport, AntipodeOrder, AxiomReport, BEPresentation, CqgVerdict};

/// Everything printed for one input.
#[derive(Clone, Debug)]
pub struct Report<'a> {
    /// Machine-readable description of where the form came from.
    pub input: Value,
    /// The same, for text output.
    pub input_label: String,
    pub presentation: &'a BEPresentation,
    pub analysis: AnalysisReport,
    pub axioms: Option<AxiomReport>,
    pub invariance: Option<InvarianceReport>,
    /// Adds floating-point approximations computed at this precision.
    pub approx_bits: Option<u64>,
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Distinct values with multiplicities, in order of first appearance.
fn multiset(values: &[CycloNumber]) -> Vec<(CycloNumber, usize)> {
    let mut out: Vec<(CycloNumber, usize)> = Vec::new();
    for v in values {
        match out.iter_mut().find(|(w, _)| w == v) {
            Some((_, count)) => *count += 1,
            None => out.push((v.clone(), 1)),
        }
    }
    out
}

fn approx_pair(x: &CycloNumber, bits: u64) -> Value {
    let (re, im) = embed(x, bits).approx();
    json!({ "re": re, "im": im })
}

fn is_integer(x: &CycloNumber) -> bool {
    x.to_rational().is_some_and(|r| r.is_integer())
}

impl Report<'_> {
    pub fn to_json(&self) -> Value {
        let p = self.presentation;
        let a = &self.analysis;
        let mut obj = Map::new();
        obj.insert("input".into(), self.input.clone());
        obj.insert("conductor".into(), json!(p.conductor()));
        obj.insert("size".into(), json!(p.size()));
        obj.insert("trace_f".into(), to_value(p.trace_f()));
        obj.insert("q_class".into(), to_value(&a.q_class));
        obj.insert("cosemisimple".into(), json!(a.cosemisimple));
        obj.insert("cotriangular_hint".into(), json!(a.cotriangular_hint));
        obj.insert("antipode_order".into(), to_value(&a.antipode_order));
        obj.insert(
            "nu2".into(),
            a.nu2
                .as_ref()
                .map_or(Value::Null, |v| Value::String(v.to_z_string())),
        );
        obj.insert(
            "nu2_is_integer".into(),
            a.nu2.as_ref().map_or(Value::Null, |v| json!(is_integer(v))),
        );
        obj.insert("cqg".into(), to_value(&a.cqg));
        obj.insert(
            "s_squared_spectrum".into(),
            a.s_squared_spectrum.as_ref().map_or(Value::Null, |s| {
                Value::Array(
                    multiset(s)
                        .into_iter()
                        .map(|(v, k)| json!({ "value": v.to_z_string(), "multiplicity": k }))
                        .collect(),
                )
            }),
        );
        let mut checks = Map::new();
        if let Some(ax) = &self.axioms {
            checks.insert("axioms".into(), to_value(ax));
        }
        if let Some(inv) = &self.invariance {
            checks.insert("invariance".into(), to_value(inv));
        }
        obj.insert("checks".into(), Value::Object(checks));
        if let Some(bits) = self.approx_bits {
            obj.insert(
                "approx".into(),
                json!({
                    "precision_bits": bits,
                    "trace_f": approx_pair(p.trace_f(), bits),
                    "nu2": a.nu2.as_ref().map_or(Value::Null, |v| approx_pair(v, bits)),
                }),
            );
        }
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        let p = self.presentation;
        let a = &self.analysis;
        let mut out = String::new();
        let mut line = |key: &str, value: String| {
            let _ = writeln!(out, "{key:<18} {value}");
        };
        line("input:", self.input_label.clone());
        line("size:", p.size().to_string());
        line("conductor:", p.conductor().to_string());
        line("trace_f:", p.trace_f().to_z_string());
        line("q_class:", q_class_text(a.q_class));
        line("cosemisimple:", a.cosemisimple.to_string());
        line("cotriangular_hint:", a.cotriangular_hint.to_string());
        line("antipode_order:", antipode_text(&a.antipode_order));
        line(
            "nu2:",
            match &a.nu2 {
                Some(v) if is_integer(v) => v.to_z_string(),
                Some(v) => format!("{} (not an integer)", v.to_z_string()),
                None => "none (no Haar state)".into(),
            },
        );
        line(
            "cqg:",
            match a.cqg {
                CqgVerdict::Obstructed => "obstructed",
                CqgVerdict::NoObstructionFound => "no_obstruction_found",
                CqgVerdict::Unknown => "unknown",
            }
            .to_string()
                + " (positivity of F ratios, a necessary condition)",
        );
        if let Some(s) = &a.s_squared_spectrum {
            let parts: Vec<String> = multiset(s)
                .into_iter()
                .map(|(v, k)| {
                    if k == 1 {
                        v.to_z_string()
                    } else {
                        format!("{} (x{k})", v.to_z_string())
                    }
                })
                .collect();
            line("s_squared_spectrum:", parts.join(", "));
        }
        if let Some(ax) = &self.axioms {
            let status = |c| to_value(&c).as_str().unwrap_or_default().to_string();
            line("counit:", status(ax.counit));
            line("antipode_axiom:", status(ax.antipode_axiom));
            line("s_preserves_ideal:", status(ax.s_preserves_ideal));
            line("comult_compatible:", status(ax.comult_compatible));
            line("closure_degree:", ax.closure_degree.to_string());
        }
        if let Some(inv) = &self.invariance {
            let status = |c| to_value(&c).as_str().unwrap_or_default().to_string();
            line("right_invariance:", status(inv.right));
            line("left_invariance:", status(inv.left));
            line("tuples_checked:", inv.tuples_checked.to_string());
            line("closure_degree:", inv.closure_degree.to_string());
        }
        if let Some(bits) = self.approx_bits {
            let fmt = |x: &CycloNumber| {
                let (re, im) = embed(x, bits).approx();
                if im == 0.0 {
                    format!("{re}")
                } else {
                    format!("{re} + {im}i")
                }
            };
            line("approx_bits:", bits.to_string());
            line("trace_f ~", fmt(p.trace_f()));
            if let Some(v) = &a.nu2 {
                line("nu2 ~", fmt(v));
            }
        }
        out
    }
}

pub fn q_class_text(c: QClass) -> String {
    match c {
        QClass::One => "one".into(),
        QClass::MinusOne => "minus_one".into(),
        QClass::RootOfUnityOrder(n) => format!("root_of_unity_order({n})"),
        QClass::NotRootOfUnity => "not_root_of_unity".into(),
    }
}

pub fn antipode_text(o: &AntipodeOrder) -> String {
    match o {
        AntipodeOrder::Finite(k) => k.to_string(),
        AntipodeOrder::Infinite(w) => format!("infinite ({w})"),
        AntipodeOrder::Unknown(b) => format!("unknown (no scalar power of F up to {b})"),
    }
}

/// `{"denominator": .., "moments": [{"k", "l", "i", "j", "value"}]}`, with
/// 1-based indices.
pub fn moment_table_json(t: &HaarMomentTable) -> Value {
    let moments: Vec<Value> = t
        .entries()
        .map(|(&(k, l, i, j), v)| {
            json!({ "k": k + 1, "l": l + 1, "i": i + 1, "j": j + 1, "value": to_value(v) })
        })
        .collect();
    json!({ "denominator": to_value(t.denominator()), "moments": moments })
}

pub fn moment_table_text(t: &HaarMomentTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "denominator: {}", t.denominator().to_z_string());
    let _ = writeln!(out, "h(1) = 1, h(a[i,j]) = 0");
    for (&(k, l, i, j), v) in t.entries() {
        let _ = writeln!(
            out,
            "h(a[{},{}]a[{},{}]) = {}",
            k + 1,
            l + 1,
            i + 1,
            j + 1,
            v.to_z_string()
        );
    }
    out
}

/// `{"error": {"code", "message"[, "field"]}}`.
pub fn error_json(e: &Error) -> Value {
    let mut inner = Map::new();
    inner.insert("code".into(), json!(e.code()));
    inner.insert("message".into(), json!(e.to_string()));
    if let Error::Parse { field, .. } = e {
        inner.insert("field".into(), json!(field));
    }
    json!({ "error": inner })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::haar::HaarMomentTable;
    use crate::hopf::{golden_cotriangular, six_dim_cyclic, DEFAULT_MAX_K};
    use crate::matrix::ExactMatrix;

    fn report(p: &BEPresentation) -> Report<'_> {
        Report {
            input: json!("test"),
            input_label: "test".into(),
            presentation: p,
            analysis: p.analyze(DEFAULT_MAX_K).unwrap(),
            axioms: None,
            invariance: None,
            approx_bits: Some(64),
        }
    }

    #[test]
    fn skew_form_report() {
        let p = BEPresentation::new(
            ExactMatrix::antidiag(&[CycloNumber::int(1), CycloNumber::int(-1)]).unwrap(),
        )
        .unwrap();
        let v = report(&p).to_json();
        assert_eq!(v["cosemisimple"], json!(true));
        assert_eq!(v["antipode_order"], json!({ "finite": 2 }));
        assert_eq!(v["nu2"], json!("-1"));
        assert_eq!(v["q_class"], json!("one"));
        assert_eq!(v["cqg"], json!("no_obstruction_found"));
        assert_eq!(
            v["trace_f"],
            json!({ "conductor": 1, "coeffs": { "0": "-2" } })
        );
        assert_eq!(v["approx"]["nu2"]["re"], json!(-1.0));
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            &keys[..12],
            [
                "input",
                "conductor",
                "size",
                "trace_f",
                "q_class",
                "cosemisimple",
                "cotriangular_hint",
                "antipode_order",
                "nu2",
                "nu2_is_integer",
                "cqg",
                "s_squared_spectrum"
            ]
        );
    }

    #[test]
    fn infinite_order_and_classes() {
        let p = golden_cotriangular();
        let v = report(&p).to_json();
        assert!(v["antipode_order"]["infinite"].is_string());
        let p = six_dim_cyclic(5).unwrap();
        let r = report(&p);
        let v = r.to_json();
        assert_eq!(v["antipode_order"], json!({ "finite": 10 }));
        assert_eq!(v["q_class"], json!("not_root_of_unity"));
        assert_eq!(v["nu2_is_integer"], json!(false));
        let text = r.to_text();
        assert!(text.contains("antipode_order:    10\n"), "{text}");
        assert!(text.contains("cosemisimple:      true\n"));
        assert_eq!(
            to_value(&QClass::RootOfUnityOrder(5)),
            json!({ "root_of_unity_order": 5 })
        );
    }

    #[test]
    fn moment_table_layout() {
        let p = golden_cotriangular();
        let t = HaarMomentTable::new(&p).unwrap();
        let v = moment_table_json(&t);
        assert_eq!(v["moments"].as_array().unwrap().len(), 81);
        assert_eq!(v["moments"][0]["k"], json!(1));
        assert_eq!(v["denominator"], to_value(&CycloNumber::from_int(5, -2)));
        assert!(moment_table_text(&t).contains("h(a[1,3]a[3,1]) = "));
    }

    #[test]
    fn error_objects() {
        let v = error_json(&Error::parse("matrix[0]", "bad"));
        assert_eq!(v["error"]["code"], json!("parse_error"));
        assert_eq!(v["error"]["field"], json!("matrix[0]"));
        let v = error_json(&Error::SingularMatrix);
        assert_eq!(
            v,
            json!({ "error": { "code": "singular_matrix", "message": "matrix is singular" } })
        );
    }
}
