//! JSON encodings. Infinity is the string `"inf"`.

use orthox_core::checks::Check;
use orthox_core::{
    BandDiagram, Bound, Element, FamilySpec, Letter, RelationClass, Value as Elem, VerifyReport,
    YImage,
};
use serde_json::{json, Value};

pub fn bound(b: Bound) -> Value {
    match b.get() {
        Some(n) => json!(n),
        None => json!("inf"),
    }
}

pub fn family(f: FamilySpec) -> Value {
    match f {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } => json!({
            "kind": "combinatorial",
            "right_bound": bound(right_bound),
            "left_bound": bound(left_bound),
        }),
        FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            order,
        } => json!({
            "kind": "group_case",
            "case": f.case_number(),
            "absorb_left": absorb_left,
            "absorb_right": absorb_right,
            "order": bound(order),
        }),
    }
}

fn letter(l: Option<Letter>) -> Value {
    match l {
        Some(Letter::A) => json!("A"),
        Some(Letter::B) => json!("B"),
        None => Value::Null,
    }
}

pub fn element(x: &Element) -> Value {
    match *x.value() {
        Elem::Reduced(rw) => {
            let (i, k, l, j) = rw.parts();
            json!({ "word": x.to_string(), "i": i, "k": k, "l": l, "j": j })
        }
        Elem::Group(ge) => {
            let FamilySpec::GroupCase { order, .. } = x.family() else {
                unreachable!("group value in a group family")
            };
            json!({
                "word": x.to_string(),
                "g": ge.g(),
                "row": letter(ge.row()),
                "col": letter(ge.col()),
                "order": bound(order),
            })
        }
    }
}

pub fn elements(xs: &[Element]) -> Value {
    Value::Array(xs.iter().map(element).collect())
}

pub fn y_image(img: &YImage) -> Value {
    match img {
        YImage::Bicyclic(x) => {
            let (m, n) = img.bicyclic_exponents().expect("bicyclic image");
            json!({ "kind": "bicyclic", "m": m, "n": n, "word": x.to_string() })
        }
        YImage::Cyclic { g, order } => json!({ "kind": "cyclic", "g": g, "order": bound(*order) }),
    }
}

pub fn relation_class(c: RelationClass) -> Value {
    match c {
        RelationClass::Redundant => json!({ "class": "Redundant" }),
        RelationClass::RightBound(n) => json!({ "class": "RightBound", "n": n }),
        RelationClass::LeftBound(m) => json!({ "class": "LeftBound", "m": m }),
        RelationClass::Both(n, m) => json!({ "class": "Both", "n": n, "m": m }),
        RelationClass::Impossible => json!({ "class": "Impossible" }),
    }
}

pub fn band(d: &BandDiagram) -> Value {
    let pairs = |xs: &[(Element, Element)]| -> Value {
        xs.iter()
            .map(|(x, y)| json!([x.to_string(), y.to_string()]))
            .collect()
    };
    json!({
        "nodes": d.nodes.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "order_edges": d
            .order_edges
            .iter()
            .map(|e| json!({ "upper": e.upper.to_string(), "lower": e.lower.to_string() }))
            .collect::<Vec<_>>(),
        "r_edges": pairs(&d.r_edges),
        "l_edges": pairs(&d.l_edges),
    })
}

pub fn verify(
    f: FamilySpec,
    max_len: usize,
    cap: usize,
    report: &VerifyReport,
    checks: &[Check],
) -> Value {
    let mut mismatches = Vec::new();
    for (u, v) in &report.reducer_splits_closure {
        mismatches.push(
            json!({ "kind": "reducer_splits_closure", "u": u.to_string(), "v": v.to_string() }),
        );
    }
    for (u, v) in &report.closure_splits_reducer {
        mismatches.push(
            json!({ "kind": "closure_splits_reducer", "u": u.to_string(), "v": v.to_string() }),
        );
    }
    json!({
        "family": family(f),
        "max_len": max_len,
        "cap": cap,
        "words": report.words,
        "agreements": report.agreements,
        "mismatches": mismatches,
        "cap_warning": report.cap_warning,
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    })
}
