//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hexatile_core::asymptotics::{
    asym_ratio, barnes_asymptotic_ratio, barnes_product_identity_check, classify_limit, glaisher,
    real::{to_decimal_string, to_f64},
    BarnesIdentity, LimitOutcome,
};
use hexatile_core::exactnum::rat_int;
use hexatile_core::formulas::{
    ciucu_r, ciucu_rbar, factorization_identity_check, fk_count, induction_identity_checks, intrusion_count,
    macmahon, KuoVariant,
};
use hexatile_core::oracle::{count_pp_restricted, count_tilings, count_tilings_lgv, kuo_report};
use hexatile_core::region::{build_hexagon, build_intruded, build_r, build_rbar};
use hexatile_core::{ExactRational, Parity};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle(region: hexatile_core::Result<hexatile_core::Region>) -> Result<ExactRational, String> {
    let region = region.map_err(|e| e.to_string())?;
    count_tilings(&region).map(|c| c.value).map_err(|e| e.to_string())
}

fn formula_vs_oracle() -> Outcome {
    let mut n = 0;
    for m in 0..=7 {
        for c in 0..=5 {
            for b in 0..=c {
                for d in 0..=b {
                    let f = intrusion_count(m, b, c, d).map_err(|e| e.to_string())?.value;
                    let o = oracle(build_intruded(m, b, c, d))?;
                    ensure(f == o, || format!("H[{m},{b},{c};{d}]: formula {f}, oracle {o}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} regions"))
}

fn macmahon_triple() -> Outcome {
    let mut n = 0;
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let f = macmahon(a, b, c).map_err(|e| e.to_string())?.value;
                let l = count_tilings_lgv(a, b, c).map_err(|e| e.to_string())?.value;
                let o = oracle(build_hexagon(a, b, c))?;
                ensure(f == l && l == o, || format!("({a},{b},{c}): formula {f}, paths {l}, oracle {o}"))?;
                n += 1;
            }
        }
    }
    let twenty = macmahon(2, 2, 2).map_err(|e| e.to_string())?.value;
    ensure(twenty == rat_int(20.into()), || format!("macmahon(2,2,2) = {twenty}"))?;
    Ok(format!("{n} hexagons"))
}

fn weighted_regions() -> Outcome {
    let mut n = 0;
    for m in 0..=4 {
        for k in 0..=4 {
            for x in -1..=3 {
                if x == -1 && m != 0 {
                    continue;
                }
                let f = ciucu_r(m, k, x).map_err(|e| e.to_string())?.value;
                let o = oracle(build_r(m, k, x))?;
                ensure(f == o, || format!("R[{m},{k},{x}]: formula {f}, oracle {o}"))?;
                n += 1;
                if x >= 0 {
                    let f = ciucu_rbar(m, k, x).map_err(|e| e.to_string())?.value;
                    let o = oracle(build_rbar(m, k, x))?;
                    ensure(f == o, || format!("Rbar[{m},{k},{x}]: formula {f}, oracle {o}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} regions"))
}

fn factorization() -> Outcome {
    let mut n = 0;
    for a in 0..=2 {
        for m in [2 * a, 2 * a + 1] {
            for c in 0..=4 {
                for d in 0..=c {
                    let ok = factorization_identity_check(m, c, d).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("m={m}, c={c}, d={d}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn condensation() -> Outcome {
    let mut n = 0;
    for v in KuoVariant::ALL {
        for a in 0..=2 {
            for c in 1..=4 {
                for b in 1..=c {
                    for k in 0..=v.max_k(b, c) {
                        let r = kuo_report(v, a, b, c, k).map_err(|e| e.to_string())?;
                        ensure(r.holds(), || format!("{v:?} a={a} b={b} c={c} k={k}: {:?}", r.counts))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} identities"))
}

fn left_aligned_conjecture() -> Outcome {
    let mut n = 0;
    let mut r1 = 0;
    for m in 0..=3 {
        for big_n in 1..=5 {
            for r in 1..=big_n {
                let f = fk_count(m, big_n, r).map_err(|e| e.to_string())?.value;
                let c = intrusion_count(2 * m, big_n, big_n, r).map_err(|e| e.to_string())?.value;
                ensure(f == c, || format!("m={m}, N={big_n}, r={r}: conjecture {f}, count {c}"))?;
                n += 1;
                r1 += usize::from(r == 1);
            }
        }
    }
    Ok(format!("{n} cases, no discrepancy at r=1 ({r1} cases)"))
}

fn plane_partitions() -> Outcome {
    let mut n = 0;
    for c in 0..=3 {
        for b in 0..=c {
            for a in 0..=2 {
                for d in 0..=b {
                    let p = rat_int(count_pp_restricted(b, c, 2 * a, d).map_err(|e| e.to_string())?);
                    let f = intrusion_count(2 * a, b, c, d).map_err(|e| e.to_string())?.value;
                    ensure(p == f, || format!("b={b}, c={c}, a={a}, d={d}: partitions {p}, formula {f}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn induction() -> Outcome {
    let mut n = 0;
    for a in 0..=3 {
        for c in 2..=6 {
            for b in 1..c {
                for t in 1..=b {
                    let report = induction_identity_checks(a, b, c, t).map_err(|e| e.to_string())?;
                    if let Some(bad) = report.failures().next() {
                        return Err(format!("a={a} b={b} c={c} t={t}: {} ({} vs {})", bad.name, bad.lhs, bad.rhs));
                    }
                    n += report.checks.len();
                }
            }
        }
    }
    Ok(format!("{n} identities"))
}

fn barnes() -> Outcome {
    let mut n = 0;
    for which in BarnesIdentity::ALL {
        for a in 1..=2 {
            for d in 1..=2 {
                for b in 1..=3 {
                    for c in 1..=3 {
                        for big_n in 1..=3 {
                            let needs_b = which == BarnesIdentity::ShiftedB && b < d;
                            let needs_c = which == BarnesIdentity::ShiftedC && c < d;
                            let needs_even = which == BarnesIdentity::CentralFactorials && ((b + c) % 2 != 0 || b + c < 2 * d);
                            if needs_b || needs_c || needs_even {
                                continue;
                            }
                            let ok = barnes_product_identity_check(which, a, b, c, d, big_n).map_err(|e| e.to_string())?;
                            ensure(ok, || format!("{} a={a} b={b} c={c} d={d} N={big_n}", which.name()))?;
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn convergence() -> Outcome {
    let mut parts = Vec::new();
    for (p, a, b, c, d) in [(Parity::Even, 1, 2, 2, 1), (Parity::Odd, 3, 3, 3, 1), (Parity::Even, 1, 2, 4, 1)] {
        let q = |n| -> Result<f64, String> {
            let e = asym_ratio(p, a, b, c, d, n).and_then(|e| e.with_exact()).map_err(|e| e.to_string())?;
            Ok(to_f64(&e.quotient().expect("exact ratio present")))
        };
        let (q8, q32) = (q(8)?, q(32)?);
        let tag = format!("{p:?}({a},{b},{c},{d})");
        ensure((q32 - 1.0).abs() < 0.10 && (q32 - 1.0).abs() < (q8 - 1.0).abs(), || {
            format!("{tag}: quotient {q8} at N=8, {q32} at N=32")
        })?;
        parts.push(format!("{tag} {q32:.6}"));
    }
    Ok(format!("quotients at N=32: {}", parts.join(", ")))
}

fn classification() -> Outcome {
    let odd = classify_limit(Parity::Odd, 3, 3, 3, 1).map_err(|e| e.to_string())?;
    let crit = odd.criterion.clone().unwrap_or_default();
    ensure(odd.outcome == LimitOutcome::Infinity && crit > rat_int(1.into()), || format!("(3,3,3,1): {odd:?}"))?;
    let mut n = 0;
    'sweep: for a in 1..=4 {
        for c in 2..=5 {
            for b in (2..=c).rev().step_by(2) {
                for d in 1..b {
                    let class = classify_limit(Parity::Even, a, b, c, d).map_err(|e| e.to_string())?;
                    ensure(class.outcome == LimitOutcome::Zero, || format!("Even({a},{b},{c},{d}): {class:?}"))?;
                    n += 1;
                    if n == 20 {
                        break 'sweep;
                    }
                }
            }
        }
    }
    ensure(n == 20, || format!("only {n} tuples swept"))?;
    Ok(format!("Odd(3,3,3,1) criterion {crit}, {n} even tuples -> zero"))
}

fn glaisher_constant() -> Outcome {
    let a = glaisher(10).map_err(|e| e.to_string())?;
    let digits = to_decimal_string(&a, 10);
    ensure(digits == "1.282427129", || format!("A = {digits}"))?;
    let ratio = to_f64(&barnes_asymptotic_ratio(200));
    ensure((ratio - 1.0).abs() < 1e-3, || format!("ratio at n=200 is {ratio}"))?;
    Ok(format!("A = {digits}, ratio at n=200 = {ratio:.8}"))
}

fn untileable() -> Outcome {
    let o = oracle(build_intruded(4, 5, 8, 6))?;
    ensure(o == ExactRational::default(), || format!("count {o}"))?;
    Ok("H[4,5,8;6] has 0 tilings".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("intruded hexagon formula equals oracle", formula_vs_oracle),
        ("box formula, path determinant and oracle agree", macmahon_triple),
        ("weighted R and Rbar formulas equal oracle", weighted_regions),
        ("symmetric hexagon factorization", factorization),
        ("condensation identities on H' and H''", condensation),
        ("left-aligned axis lozenge conjecture", left_aligned_conjecture),
        ("restricted plane partitions equal formula", plane_partitions),
        ("induction step identities", induction),
        ("Barnes G product identities", barnes),
        ("asymptotic quotient convergence", convergence),
        ("limit classification", classification),
        ("Glaisher constant and G asymptotics", glaisher_constant),
        ("untileable intrusion", untileable),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
