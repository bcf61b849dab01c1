//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;
use wreathvar_cli::verify::{self, Suite};
use wreathvar_core::oracle::{
    discriminate, generated_subgroup, holds_identity, max_class_t_generated, nilpotency_class,
    Budget, FiniteAbelianGroup, FiniteGroup, IdentityMode, Word, WreathProduct,
};
use wreathvar_core::{
    chain_analysis, generates, lambda_bound, lambda_general_bound, min_t0, nu, nu_general,
    parse_descriptor, separation_gap, AbelianDescriptor, Alternative, Cardinal, ChainShape,
    Witness,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn wr(a: &[u32], b: &[u32]) -> WreathProduct {
    WreathProduct::new(
        FiniteAbelianGroup::new(a.to_vec()).unwrap(),
        FiniteAbelianGroup::new(b.to_vec()).unwrap(),
        &Budget::default(),
    )
    .unwrap()
}

fn d(s: &str) -> AbelianDescriptor {
    parse_descriptor(s).unwrap()
}

fn houghton() -> Outcome {
    let mut checked = 0;
    for m in 1..=30u64 {
        for n in 1..=30u64 {
            let out = wreathvar_cli::run(["wreathvar", "decide", &format!("C{m}"), &format!("C{n}"), "--json"]);
            ensure(out.code == 0, || format!("decide C{m} C{n} exited {}", out.code))?;
            let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
            let coprime = num_integer::gcd(m, n) == 1;
            ensure(v["generates"] == Value::Bool(coprime), || format!("C{m} wr C{n}: {v}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs agree with gcd(m,n) = 1"))
}

fn nice_example() -> Outcome {
    for p in [2u64, 3, 5] {
        let v = generates(&AbelianDescriptor::cyclic(p), &d(&format!("C{} + C{p}^inf", p * p)));
        ensure(!v.generates, || format!("p = {p} generates"))?;
        ensure(v.witnesses == vec![Witness { p, k: 2, layer_rank: 1 }], || {
            format!("p = {p}: witnesses {:?}", v.witnesses)
        })?;
    }
    Ok("C_p Wr (C_p^2 + inf·C_p) blocked at (p, 2, 1) for p = 2, 3, 5".into())
}

fn extended_nice_example() -> Outcome {
    let a = d("C2");
    let blocked = generates(&a, &d("C4 + C2^inf + C3^inf"));
    ensure(!blocked.generates, || "C4 + C2^inf + C3^inf generates".into())?;
    let fine = generates(&a, &d("C4^inf + C3^inf"));
    ensure(fine.generates, || format!("C4^inf + C3^inf: {fine:?}"))?;
    Ok("(p, q) = (2, 3): blocked with one C4, generating with infinitely many".into())
}

fn liebeck() -> Outcome {
    let report = verify::run(Suite::Liebeck, 4096).map_err(|e| e.to_string())?;
    for (instance, class) in [
        ("C2 wr (C2)", "2"),
        ("C2 wr (C2 + C2)", "3"),
        ("C3 wr (C3)", "3"),
        ("C4 wr (C2)", "3"),
        ("C2 wr (C4)", "4"),
    ] {
        let row = report
            .rows
            .iter()
            .find(|r| r.instance == instance)
            .ok_or_else(|| format!("{instance} missing"))?;
        ensure(row.oracle == class && row.ok, || format!("{row:?}"))?;
    }
    let bad: Vec<_> = report.rows.iter().filter(|r| !r.ok).collect();
    ensure(bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    Ok(format!("{} wreath products of order <= 4096 match", report.rows.len()))
}

fn lambda_soundness() -> Outcome {
    let g = wr(&[2], &[2]);
    let c2 = AbelianDescriptor::cyclic(2);
    let mut seen = Vec::new();
    for t in 1..=3u32 {
        let oracle = BigInt::from(max_class_t_generated(&g, t as usize, &Budget::default()).map_err(|e| e.to_string())?);
        let bound = lambda_bound(&c2, &c2, t).map_err(|e| e.to_string())?;
        ensure(oracle <= bound, || format!("t = {t}: {oracle} > {bound}"))?;
        if t >= 2 {
            ensure(oracle == BigInt::from(2) && bound == BigInt::from(2), || {
                format!("t = {t}: expected 2 = 2, got {oracle} and {bound}")
            })?;
        }
        seen.push(format!("t={t}: {oracle} <= {bound}"));
    }
    Ok(seen.join(", "))
}

fn separation_witness() -> Outcome {
    let t0 = min_t0(2, 1, Cardinal::Finite(1)).map_err(|e| e.to_string())?;
    ensure(t0 == 3, || format!("min_t0 = {t0}"))?;
    let g = wr(&[2], &[2, 2]);
    let gens = g.generators();
    ensure(gens.len() == 3, || format!("{} generators", gens.len()))?;
    let whole = generated_subgroup(&g, &gens, 1 << 10).map_err(|e| e.to_string())?;
    ensure(whole.order() == 64, || format!("generated {}", whole.order()))?;
    let class = nilpotency_class(&g, &gens, &Budget::default()).map_err(|e| e.to_string())?.class;
    let nu3 = nu(2, 1, 1, 3).map_err(|e| e.to_string())?;
    let c2 = AbelianDescriptor::cyclic(2);
    let bound = lambda_bound(&c2, &c2, 3).map_err(|e| e.to_string())?;
    ensure(BigInt::from(class) == nu3 && nu3 == BigInt::from(3), || format!("class {class}, nu {nu3}"))?;
    ensure(nu3 > bound && bound == BigInt::from(2), || format!("nu {nu3} vs bound {bound}"))?;
    Ok("t0 = 3; C2 wr C2^2 is 3-generated of class 3 > 2".into())
}

fn gap_grid() -> Outcome {
    let mut instances = 0u64;
    for p in [2u64, 3, 5] {
        for k in 1..=4u32 {
            for dd in 1..=k {
                let len = dd as usize;
                let total = 5 * 6u64.pow(dd - 1);
                for code in 0..total {
                    let mut l = Vec::with_capacity(len);
                    l.push(code % 5 + 1);
                    let mut rest = code / 5;
                    for _ in 1..len {
                        l.push(rest % 6);
                        rest /= 6;
                    }
                    let shape = ChainShape::new(k, dd, l.clone()).map_err(|e| e.to_string())?;
                    let gap = separation_gap(p, &shape).map_err(|e| e.to_string())?;
                    ensure(gap > BigInt::from(0), || format!("gap {gap} for {p} {shape:?}"))?;
                    let sum: u64 = l.iter().sum();
                    for s in 1..=3u64 {
                        for t in [(s + 1) * sum + 2, (s + 1) * sum + 5] {
                            for u in [1u32, 2] {
                                let diff = nu_general(p, u, &shape, s + 1, t).map_err(|e| e.to_string())?
                                    - lambda_general_bound(p, u, &shape, s, t).map_err(|e| e.to_string())?;
                                ensure(diff == gap, || format!("{p} {shape:?} s={s} t={t}: {diff} != {gap}"))?;
                                instances += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    ensure(instances >= 1000, || format!("only {instances} instances"))?;
    Ok(format!("{instances} instances, zero violations"))
}

fn strict_chain() -> Outcome {
    let mut classes = Vec::new();
    for s in 1..=3usize {
        let g = wr(&[2], &vec![2; s]);
        classes.push(nilpotency_class(&g, &g.generators(), &Budget::default()).map_err(|e| e.to_string())?.class);
    }
    ensure(classes == vec![2, 3, 4], || format!("classes {classes:?}"))?;
    let report = chain_analysis(&d("C2"), &d("C2"), 3);
    ensure(report.alternative == Alternative::StrictChain, || "chain collapses".into())?;
    Ok(format!("classes of C2 wr C2^s, s = 1..3: {classes:?}"))
}

fn variety_laws() -> Outcome {
    let report = verify::run(Suite::Identities, 256).map_err(|e| e.to_string())?;
    let bad: Vec<_> = report.rows.iter().filter(|r| !r.ok).collect();
    ensure(bad.is_empty(), || format!("counterexamples: {bad:?}"))?;
    ensure(report.rows.len() == 42, || format!("{} rows", report.rows.len()))?;
    Ok(format!("{} groups x 2 laws, zero counterexamples", report.rows.len() / 2))
}

const CASES: u32 = 128;

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

fn property<T: std::fmt::Debug>(
    name: &str,
    ran: &std::cell::Cell<u32>,
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))?;
    ensure(ran.get() >= CASES, || format!("{name}: only {} cases ran", ran.get()))?;
    ran.set(0);
    Ok(())
}

fn descriptor_strategy() -> impl Strategy<Value = AbelianDescriptor> {
    (
        prop::collection::vec(
            (
                prop::sample::select(vec![1u64, 2, 3, 4, 5, 8, 9, 12, 27]),
                prop_oneof![3 => (1u64..4).prop_map(Cardinal::Finite), 1 => Just(Cardinal::Inf)],
            ),
            0..5,
        ),
        prop::bool::weighted(0.1),
    )
        .prop_map(|(raw, free)| {
            let rank = if free { Cardinal::ONE } else { Cardinal::ZERO };
            AbelianDescriptor::canonicalize(&raw, rank, &[]).unwrap()
        })
}

fn invariant_suites() -> Outcome {
    let mut names = Vec::new();
    let ran = std::cell::Cell::new(0u32);

    let r = runner().run(&descriptor_strategy(), |dsc| {
        ran.set(ran.get() + 1);
        prop_assume!(dsc.has_finite_exponent());
        for p in [2u64, 3, 5] {
            let top = dsc.k_of(p).unwrap();
            for k in 1..=top + 1 {
                prop_assert!(dsc.layer_rank(p, k + 1).unwrap() <= dsc.layer_rank(p, k).unwrap());
            }
            if top > 0 {
                prop_assert_eq!(dsc.layer_rank(p, top).unwrap(), dsc.top_layer_multiplicity(p).unwrap());
            }
        }
        for s in [2u64, 6, 9] {
            let once = dsc.bounded_subgroup(s).unwrap();
            prop_assert_eq!(once.bounded_subgroup(s).unwrap(), once);
        }
        Ok(())
    });
    property("abelian layers", &ran, r)?;
    names.push("abelian layers");

    let r = runner().run(&(descriptor_strategy(), descriptor_strategy()), |(a, b)| {
        ran.set(ran.get() + 1);
        let v = generates(&a, &b);
        prop_assert_eq!(v.generates, v.witnesses.is_empty());
        let chain = chain_analysis(&a, &b, 2);
        prop_assert_eq!(chain.alternative == Alternative::Collapses, v.generates);
        if b.has_finite_exponent() && !b.is_trivial() {
            prop_assert!(generates(&a, &b.direct_power(Cardinal::Inf).unwrap()).generates);
        }
        Ok(())
    });
    property("criterion", &ran, r)?;
    names.push("criterion");

    let shapes = (prop::sample::select(vec![2u64, 3, 5]), 1u32..=4, 1u32..=4, prop::collection::vec(0u64..=5, 4), 1u64..=3, 0u64..5)
        .prop_filter("d <= k", |(_, k, dd, ..)| dd <= k);
    let r = runner().run(&shapes, |(p, k, dd, mut l, s, extra)| {
        ran.set(ran.get() + 1);
        l.truncate(dd as usize);
        l[0] = l[0].max(1);
        let shape = ChainShape::new(k, dd, l.clone()).unwrap();
        let t = (s + 1) * l.iter().sum::<u64>() + 2 + extra;
        let gap = separation_gap(p, &shape).unwrap();
        prop_assert!(gap > BigInt::from(0));
        prop_assert_eq!(
            nu_general(p, 1, &shape, s + 1, t).unwrap() - lambda_general_bound(p, 1, &shape, s, t).unwrap(),
            gap
        );
        Ok(())
    });
    property("nilpotency gap", &ran, r)?;
    names.push("nilpotency gap");

    let g = wr(&[3], &[4]);
    let elem = (0u32..4, prop::collection::vec(0u32..3, 4));
    let r = runner().run(&(elem.clone(), elem.clone(), elem), |((t1, b1), (t2, b2), (t3, b3))| {
        ran.set(ran.get() + 1);
        let (x, y, z) = (g.element(t1, b1).unwrap(), g.element(t2, b2).unwrap(), g.element(t3, b3).unwrap());
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert_eq!(g.mul(&x, &g.inv(&x)), g.identity());
        Ok(())
    });
    property("oracle group axioms", &ran, r)?;
    names.push("oracle group axioms");

    let c12 = FiniteAbelianGroup::new(vec![4, 3]).unwrap();
    let r = runner().run(&(1usize..=2, -8i64..=8), |(var, e)| {
        ran.set(ran.get() + 1);
        let w = Word::product(vec![Word::var(var).pow(e), Word::var(1).pow(3)]);
        let disc = discriminate(&c12, std::slice::from_ref(&w), &Budget::default()).unwrap();
        let law = holds_identity(&c12, &w, IdentityMode::Exhaustive, &Budget::default()).unwrap();
        prop_assert_eq!(disc.is_none(), law.holds());
        Ok(())
    });
    property("oracle discrimination", &ran, r)?;
    names.push("oracle discrimination");

    let r = runner().run(&descriptor_strategy(), |dsc| {
        ran.set(ran.get() + 1);
        prop_assert_eq!(parse_descriptor(&dsc.to_string()).unwrap(), dsc);
        Ok(())
    });
    property("cli round trip", &ran, r)?;
    names.push("cli round trip");

    Ok(format!("{} properties x {CASES} cases: {}", names.len(), names.join(", ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 Houghton consistency", Duration::from_secs(1), houghton),
        ("2 nice example", Duration::from_secs(1), nice_example),
        ("3 extended nice example", Duration::from_secs(1), extended_nice_example),
        ("4 Liebeck oracle equivalence", Duration::from_secs(300), liebeck),
        ("5 lambda-bound soundness", Duration::from_secs(60), lambda_soundness),
        ("6 separation witness", Duration::from_secs(60), separation_witness),
        ("7 chain gap identity", Duration::from_secs(10), gap_grid),
        ("8 strict chain realization", Duration::from_secs(120), strict_chain),
        ("9 variety-law sanity", Duration::from_secs(300), variety_laws),
        ("10 invariant suites", Duration::from_secs(300), invariant_suites),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(detail) if elapsed <= limit => (true, detail),
            Ok(detail) => (false, format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!("[{}] AC{name} ({elapsed:.2?}): {detail}", if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
