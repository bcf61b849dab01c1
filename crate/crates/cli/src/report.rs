//! Text and JSON renderings of verdicts and chain reports.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wreathvar_core::criterion::format_layer;
use wreathvar_core::{
    classify, AbelianDescriptor, Certificate, ChainReport, ExtNat, Separation, Verdict,
};

pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

pub fn ext(n: &ExtNat) -> Value {
    match n {
        ExtNat::Finite(x) => match x.to_u64() {
            Some(v) => json!(v),
            None => json!(x.to_string()),
        },
        ExtNat::Inf => json!("inf"),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let witnesses: Vec<Value> = v
        .witnesses
        .iter()
        .map(|w| json!({"p": w.p, "k": w.k, "layer_rank": w.layer_rank}))
        .collect();
    json!({
        "generates": v.generates,
        "case": v.case.as_str(),
        "witnesses": witnesses,
        "exponents": {"A": ext(&v.exponent_a), "B": ext(&v.exponent_b)},
        "active": "B",
    })
}

pub fn verdict_text(a: &AbelianDescriptor, b: &AbelianDescriptor, v: &Verdict) -> String {
    let class = classify(a, b);
    let mut out = String::new();
    out += &format!("A = {a}  (passive)\n");
    out += &format!("B = {b}  (active)\n");
    out += &format!("exp A = {}, exp B = {}\n", v.exponent_a, v.exponent_b);
    out += &format!("case: {} ({})\n", v.case, class.branch.as_str());
    out += &format!(
        "A Wr B generates var(A)·var(B): {}\n",
        if v.generates { "yes" } else { "no" }
    );
    if v.generates {
        out += &format!("Theorem: {}\n", class.explanation);
    } else {
        for w in &v.witnesses {
            out += &format!("Theorem: main criterion, {}\n", format_layer(w));
        }
    }
    out
}

pub fn chain_json(r: &ChainReport) -> Value {
    let per_prime: Vec<Value> = r
        .per_prime
        .iter()
        .map(|(p, sep)| match sep {
            Separation::FiniteComponent => json!({"p": p, "finite_component": true}),
            Separation::Shape(s) => json!({
                "p": p, "finite_component": false, "k": s.k, "d": s.d, "l": s.l,
            }),
        })
        .collect();
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|st| {
            let cert = match &st.certificate {
                Certificate::Gap { p, nu, lambda, gap } => json!({
                    "kind": "gap", "p": p, "nu": big(nu), "lambda": big(lambda), "gap": big(gap),
                }),
                Certificate::ClassDifference { p, class_s, class_next } => json!({
                    "kind": "class_difference", "p": p,
                    "class_s": big(class_s), "class_next": big(class_next),
                }),
            };
            json!({"s": st.s, "witness_t": st.witness_t, "certificate": cert})
        })
        .collect();
    json!({"alternative": r.alternative.as_str(), "per_prime": per_prime, "steps": steps})
}

pub fn chain_text(a: &AbelianDescriptor, b: &AbelianDescriptor, r: &ChainReport) -> String {
    let mut out = format!("A = {a}  (passive)\nB = {b}  (active)\n{}\n", r.alternative.as_str());
    for (p, sep) in &r.per_prime {
        match sep {
            Separation::FiniteComponent => out += &format!("  p = {p}: B_p finite\n"),
            Separation::Shape(s) => {
                out += &format!("  p = {p}: k = {}, d = {}, l = {:?}\n", s.k, s.d, s.l)
            }
        }
    }
    for st in &r.steps {
        match &st.certificate {
            Certificate::Gap { p, nu, lambda, gap } => {
                out += &format!(
                    "  s = {}: t = {}, class {nu} in var(A Wr B^{}) > bound {lambda} for var(A Wr B^{}) at p = {p}, gap {gap}\n",
                    st.s,
                    st.witness_t,
                    st.s + 1,
                    st.s
                )
            }
            Certificate::ClassDifference { p, class_s, class_next } => {
                out += &format!(
                    "  s = {}: t = {}, class of A_{p} wr B_{p}^{} is {class_s} < {class_next} for B_{p}^{}\n",
                    st.s,
                    st.witness_t,
                    st.s,
                    st.s + 1
                )
            }
        }
    }
    out
}
