//! Property sweeps behind `hexatile verify`.

use hexatile_core::asymptotics::{barnes_product_identity_check, BarnesIdentity};
use hexatile_core::exactnum::rat_int;
use hexatile_core::formulas::{
    ciucu_r, ciucu_rbar, factorization_identity_check_with, intrusion_count, macmahon, KuoVariant,
};
use hexatile_core::oracle::{count_pp_restricted, count_tilings_lgv, count_tilings_with, kuo_report_with, OracleConfig};
use hexatile_core::region::{build_hexagon, build_intruded, build_r, build_rbar};
use hexatile_core::{ExactRational, Region, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Formulas,
    Kuo,
    Factorization,
    Ciucu,
    Pp,
    Barnes,
    All,
}

/// Upper bounds of the sweeps; `None` keeps each suite's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bounds {
    pub max_m: Option<i64>,
    pub max_a: Option<i64>,
    pub max_c: Option<i64>,
    pub max_n: Option<i64>,
    pub max_x: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub params: String,
    pub passed: bool,
    pub detail: Option<String>,
}

pub struct Verifier {
    pub bounds: Bounds,
    pub config: OracleConfig,
    pub checks: Vec<Check>,
}

fn oracle(region: Result<Region>, config: &OracleConfig) -> Result<ExactRational> {
    Ok(count_tilings_with(&region?, config)?.value)
}

impl Verifier {
    pub fn new(bounds: Bounds, config: OracleConfig) -> Self {
        Verifier { bounds, config, checks: Vec::new() }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, suite: &'static str, params: String, outcome: Result<Option<String>>) {
        let (passed, detail) = match outcome {
            Ok(None) => (true, None),
            Ok(Some(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check { suite, params, passed, detail });
    }

    fn compare(lhs: ExactRational, rhs: ExactRational, what: &str) -> Option<String> {
        (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
    }

    pub fn run(&mut self, suite: Suite) {
        match suite {
            Suite::Formulas => self.formulas(),
            Suite::Kuo => self.kuo(),
            Suite::Factorization => self.factorization(),
            Suite::Ciucu => self.ciucu(),
            Suite::Pp => self.pp(),
            Suite::Barnes => self.barnes(),
            Suite::All => {
                for s in [Suite::Formulas, Suite::Kuo, Suite::Factorization, Suite::Ciucu, Suite::Pp, Suite::Barnes] {
                    self.run(s);
                }
            }
        }
    }

    fn formulas(&mut self) {
        let b = self.bounds;
        let (max_m, max_c) = (b.max_m.unwrap_or(7), b.max_c.unwrap_or(5));
        for a in 0..=max_c.min(4) {
            for bb in 0..=max_c.min(4) {
                for c in 0..=max_c.min(4) {
                    let cfg = self.config;
                    let outcome = (|| {
                        let f = macmahon(a, bb, c)?.value;
                        let l = count_tilings_lgv(a, bb, c)?.value;
                        let o = oracle(build_hexagon(a, bb, c), &cfg)?;
                        Ok(Self::compare(f.clone(), l, "formula vs paths").or_else(|| Self::compare(f, o, "formula vs oracle")))
                    })();
                    self.record("formulas", format!("hexagon a={a} b={bb} c={c}"), outcome);
                }
            }
        }
        for m in 0..=max_m {
            for c in 0..=max_c {
                for bb in 0..=c {
                    for d in 0..=bb {
                        let cfg = self.config;
                        let outcome = (|| {
                            let f = intrusion_count(m, bb, c, d)?.value;
                            Ok(Self::compare(f, oracle(build_intruded(m, bb, c, d), &cfg)?, "formula vs oracle"))
                        })();
                        self.record("formulas", format!("m={m} b={bb} c={c} d={d}"), outcome);
                    }
                }
            }
        }
    }

    fn kuo(&mut self) {
        let (max_a, max_c) = (self.bounds.max_a.unwrap_or(2), self.bounds.max_c.unwrap_or(4));
        for v in KuoVariant::ALL {
            for a in 0..=max_a {
                for c in 1..=max_c {
                    for b in 1..=c {
                        for k in 0..=v.max_k(b, c) {
                            let outcome = kuo_report_with(v, a, b, c, k, &self.config).map(|r| {
                                if !r.condensation_holds() {
                                    Some("condensation identity fails".to_string())
                                } else if !r.matches_named() {
                                    Some("marked regions differ from the named hexagons".to_string())
                                } else {
                                    None
                                }
                            });
                            self.record("kuo", format!("{v:?} a={a} b={b} c={c} k={k}"), outcome);
                        }
                    }
                }
            }
        }
    }

    fn factorization(&mut self) {
        let (max_a, max_c) = (self.bounds.max_a.unwrap_or(2), self.bounds.max_c.unwrap_or(4));
        for a in 0..=max_a {
            for m in [2 * a, 2 * a + 1] {
                for c in 0..=max_c {
                    for d in 0..=c {
                        let outcome = factorization_identity_check_with(m, c, d, &self.config)
                            .map(|ok| (!ok).then(|| "whole != 2^(c-d) * plus * minus".to_string()));
                        self.record("factorization", format!("m={m} c={c} d={d}"), outcome);
                    }
                }
            }
        }
    }

    fn ciucu(&mut self) {
        let b = self.bounds;
        let (max_m, max_n, max_x) = (b.max_m.unwrap_or(4), b.max_n.unwrap_or(4), b.max_x.unwrap_or(3));
        for m in 0..=max_m {
            for n in 0..=max_n {
                for x in -1..=max_x {
                    let cfg = self.config;
                    if x >= 0 || m == 0 {
                        let outcome = (|| Ok(Self::compare(ciucu_r(m, n, x)?.value, oracle(build_r(m, n, x), &cfg)?, "R")))();
                        self.record("ciucu", format!("R m={m} n={n} x={x}"), outcome);
                    }
                    if x >= 0 {
                        let outcome =
                            (|| Ok(Self::compare(ciucu_rbar(m, n, x)?.value, oracle(build_rbar(m, n, x), &cfg)?, "Rbar")))();
                        self.record("ciucu", format!("Rbar m={m} n={n} x={x}"), outcome);
                    }
                }
            }
        }
    }

    fn pp(&mut self) {
        let (max_a, max_c) = (self.bounds.max_a.unwrap_or(2), self.bounds.max_c.unwrap_or(3));
        for c in 0..=max_c {
            for b in 0..=c {
                for a in 0..=max_a {
                    for d in 0..=b {
                        let outcome = (|| {
                            let p = rat_int(count_pp_restricted(b, c, 2 * a, d)?);
                            Ok(Self::compare(p, intrusion_count(2 * a, b, c, d)?.value, "partitions vs formula"))
                        })();
                        self.record("pp", format!("b={b} c={c} height={} d={d}", 2 * a), outcome);
                    }
                }
            }
        }
    }

    fn barnes(&mut self) {
        let b = self.bounds;
        let (max_a, max_c, max_n) = (b.max_a.unwrap_or(2), b.max_c.unwrap_or(3), b.max_n.unwrap_or(3));
        for which in BarnesIdentity::ALL {
            for a in 1..=max_a {
                for d in 1..=max_a {
                    for bb in 1..=max_c {
                        for c in 1..=max_c {
                            let skip = match which {
                                BarnesIdentity::ShiftedB => bb < d,
                                BarnesIdentity::ShiftedC => c < d,
                                BarnesIdentity::CentralFactorials => (bb + c) % 2 != 0 || bb + c < 2 * d,
                                _ => false,
                            };
                            if skip {
                                continue;
                            }
                            for n in 1..=max_n {
                                let outcome = barnes_product_identity_check(which, a, bb, c, d, n)
                                    .map(|ok| (!ok).then(|| "sides differ".to_string()));
                                self.record("barnes", format!("{} a={a} b={bb} c={c} d={d} N={n}", which.name()), outcome);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let bounds = Bounds { max_m: Some(2), max_a: Some(1), max_c: Some(2), max_n: Some(2), max_x: Some(1) };
        let mut v = Verifier::new(bounds, OracleConfig::default());
        v.run(Suite::All);
        assert!(v.all_passed(), "{:?}", v.checks.iter().find(|c| !c.passed));
        assert!(v.checks.len() > 50);
    }

    #[test]
    fn capacity_failure_is_reported() {
        let bounds = Bounds { max_m: Some(3), max_c: Some(3), ..Bounds::default() };
        let mut v = Verifier::new(bounds, OracleConfig { max_interface_width: 2 });
        v.run(Suite::Formulas);
        assert!(!v.all_passed());
        assert!(v.checks.iter().any(|c| c.detail.as_deref().is_some_and(|d| d.contains("capacity"))));
    }
}
