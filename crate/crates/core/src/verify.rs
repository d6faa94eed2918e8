//! Batch verification of the two-generation and pair-automorphism theorems
//! and of the Alexander-quandle lemmas over ranges of `(p, t)`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander::{AlexanderParams, AlternatingPattern, BaseLetter};
use crate::error::Result;
use crate::group::{is_connected, operator_group, DEFAULT_GROUP_CAP};
use crate::modular::{gcd, primes_up_to, units};
use crate::morphism::{
    enumerate_automorphisms, enumerate_automorphisms_brute, is_homomorphism, pair_automorphism,
    verify_two_generation, PairMode, BRUTE_FORCE_LIMIT,
};
use crate::word::{evaluate, Word};

/// Primes above this bound are checked on sampled pairs only.
pub const EXHAUSTIVE_PRIME_BOUND: u64 = 31;
pub const SAMPLED_PAIRS: usize = 50;
pub const RELS_CASES_PER_PRIME: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Gens,
    PairAut,
    Lemmas,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Gens => "gens",
            Theorem::PairAut => "pair-aut",
            Theorem::Lemmas => "lemmas",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub theorem: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub checks: u64,
    pub witnesses: Vec<Value>,
}

struct Tally {
    cases: usize,
    checks: u64,
    witnesses: Vec<Value>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            checks: 0,
            witnesses: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.witnesses.push(witness());
        }
    }

    fn finish(self, theorem: Theorem) -> VerifyReport {
        VerifyReport {
            theorem: theorem.name(),
            pass: self.witnesses.is_empty(),
            cases: self.cases,
            checks: self.checks,
            witnesses: self.witnesses,
        }
    }
}

/// Every `(p, t)` with `p` prime in `[lo, pmax]` and `t` a unit other than 1.
pub fn prime_cases(lo: u64, pmax: u64) -> Vec<AlexanderParams> {
    primes_up_to(pmax)
        .into_iter()
        .filter(|&p| p >= lo)
        .flat_map(|p| {
            units(p)
                .into_iter()
                .filter(|&t| t != 1)
                .map(move |t| AlexanderParams::new(p, t as i64).expect("unit"))
        })
        .collect()
}

pub fn verify(theorem: Theorem, pmax: u64, seed: u64) -> Result<VerifyReport> {
    match theorem {
        Theorem::Gens => verify_gens(pmax, seed),
        Theorem::PairAut => verify_pair_aut(pmax),
        Theorem::Lemmas => verify_lemmas(pmax, seed),
    }
}

/// Two-generation on all pairs for `p <= 31`, on 50 seeded pairs above.
pub fn verify_gens(pmax: u64, seed: u64) -> Result<VerifyReport> {
    let mut tally = Tally::new();
    for params in prime_cases(3, pmax) {
        let mode = if params.n() <= EXHAUSTIVE_PRIME_BOUND {
            PairMode::AllPairs
        } else {
            PairMode::Sampled {
                count: SAMPLED_PAIRS,
                seed: seed ^ params.n() ^ (params.t() << 32),
            }
        };
        let report = verify_two_generation(&params, mode)?;
        tally.cases += 1;
        tally.checks += report.pairs_checked as u64;
        for w in report.witnesses {
            tally
                .witnesses
                .push(json!({"n": params.n(), "t": params.t(), "witness": w}));
        }
    }
    Ok(tally.finish(Theorem::Gens))
}

/// Existence, correctness and uniqueness of pair automorphisms, and
/// `|Aut| = p (p - 1)`.
pub fn verify_pair_aut(pmax: u64) -> Result<VerifyReport> {
    let mut tally = Tally::new();
    for params in prime_cases(3, pmax) {
        tally.cases += 1;
        let (p, t) = (params.n(), params.t());
        let n = p as usize;
        let q = params.quandle();
        let auts = enumerate_automorphisms(&q)?;
        tally.check(
            auts.len() == n * (n - 1),
            || json!({"n": p, "t": t, "check": "aut-count", "found": auts.len()}),
        );
        if n <= BRUTE_FORCE_LIMIT {
            let brute = enumerate_automorphisms_brute(&q)?;
            tally.check(
                brute == auts,
                || json!({"n": p, "t": t, "check": "brute-force-agreement"}),
            );
        }
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a) {
                let mut by_image: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
                for (i, f) in auts.iter().enumerate() {
                    by_image
                        .entry((f.apply(a), f.apply(b)))
                        .or_default()
                        .push(i);
                }
                for c in 0..n {
                    for d in (0..n).filter(|&d| d != c) {
                        let f = pair_automorphism(&params, a as u64, b as u64, c as u64, d as u64)?;
                        let ok = f.apply(a) == c
                            && f.apply(b) == d
                            && f.is_bijective()
                            && is_homomorphism(&q, &q, &f)?;
                        let matches = by_image.get(&(c, d)).map(Vec::as_slice).unwrap_or(&[]);
                        let unique = matches.len() == 1 && auts[matches[0]] == f;
                        tally.check(ok && unique, || {
                            json!({"n": p, "t": t, "a": a, "b": b, "c": c, "d": d, "matches": matches.len()})
                        });
                    }
                }
            }
        }
    }
    Ok(tally.finish(Theorem::PairAut))
}

/// Power formula, periodicity, orbit size, cycle sums, alternating words,
/// operator-group order and connectivity.
pub fn verify_lemmas(pmax: u64, seed: u64) -> Result<VerifyReport> {
    let mut tally = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for params in prime_cases(2, pmax) {
        tally.cases += 1;
        let (p, t) = (params.n(), params.t());
        let n = p as usize;
        let q = params.quandle();
        let m = params.order_of_t() as i64;
        for a in 0..n {
            for b in 0..n {
                let rho = q.rho_raw(b);
                let rho_inv = rho.inverse();
                let mut fwd = a;
                let mut back = a;
                for k in 0..=2 * m {
                    let (au, bu) = (a as u64, b as u64);
                    tally.check(
                        params.power_formula(au, bu, k) as usize == fwd,
                        || json!({"n": p, "t": t, "check": "power", "a": a, "b": b, "k": k}),
                    );
                    tally.check(
                        params.power_formula(au, bu, -k) as usize == back,
                        || json!({"n": p, "t": t, "check": "power", "a": a, "b": b, "k": -k}),
                    );
                    tally.check(
                        params.power_formula(au, bu, k) == params.power_formula(au, bu, k + m),
                        || json!({"n": p, "t": t, "check": "periodicity", "a": a, "b": b, "k": k}),
                    );
                    fwd = rho.apply(fwd);
                    back = rho_inv.apply(back);
                }
                if a != b {
                    let size = params.cycle_orbit(a as u64, b as u64).len() as u64;
                    tally.check(size == params.order_of_t(), || {
                        json!({"n": p, "t": t, "check": "orbit-size", "a": a, "b": b, "size": size})
                    });
                }
            }
        }
        let group = operator_group(&q, DEFAULT_GROUP_CAP)?;
        tally.check(
            group.order() as u64 == p * params.order_of_t(),
            || json!({"n": p, "t": t, "check": "operator-group-order", "order": group.order()}),
        );
        for _ in 0..RELS_CASES_PER_PRIME / (p as usize - 2).max(1) + 1 {
            check_rels_case(&params, &q, &mut rng, &mut tally)?;
        }
    }

    for n in 1..=pmax {
        for t in units(n) {
            let params = AlexanderParams::new(n, t as i64)?;
            tally.cases += 1;
            let invertible = gcd(params.one_minus_t(), n) == 1;
            let connected = is_connected(&params.quandle());
            tally.check(
                connected == (invertible || n == 1),
                || json!({"n": n, "t": t, "check": "connectivity", "connected": connected}),
            );
            if invertible {
                let m = params.order_of_t();
                let geometric = (0..m as i64).fold(0, |acc, j| (acc + params.t_pow(j)) % n);
                tally.check(
                    geometric == 0,
                    || json!({"n": n, "t": t, "check": "geometric-sum"}),
                );
                for a in 0..n {
                    for b in 0..n {
                        tally.check(
                            params.cycle_sum(a, b, m - 1) == params.full_cycle_sum_closed_form(b),
                            || json!({"n": n, "t": t, "check": "cycle-sum", "a": a, "b": b}),
                        );
                    }
                }
            }
        }
    }
    Ok(tally.finish(Theorem::Lemmas))
}

fn check_rels_case(
    params: &AlexanderParams,
    q: &crate::quandle::FiniteQuandle,
    rng: &mut ChaCha8Rng,
    tally: &mut Tally,
) -> Result<()> {
    let n = params.n() as usize;
    let a = rng.gen_range(0..n);
    let b = rng.gen_range(0..n);
    let len = rng.gen_range(1..=8);
    let base = if rng.gen_bool(0.5) {
        BaseLetter::A
    } else {
        BaseLetter::B
    };
    let exponents: Vec<i64> = (0..len).map(|_| rng.gen_range(-5..=5)).collect();
    let pattern = AlternatingPattern::new(base, exponents)?;
    let closed = params.alternating_word_value(a as u64, b as u64, &pattern)? as usize;
    let word: Word = pattern.word(a, b);
    let literal = evaluate(q, pattern.base_element(a, b), &word)?;
    tally.check(closed == literal, || {
        json!({"n": params.n(), "t": params.t(), "check": "rels", "a": a, "b": b, "pattern": pattern})
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        assert!(verify_gens(13, 1).unwrap().pass);
        assert!(verify_pair_aut(7).unwrap().pass);
        let r = verify_lemmas(11, 1).unwrap();
        assert!(r.pass, "{:?}", r.witnesses.first());
    }

    #[test]
    fn cases_enumerated() {
        // p = 3: t = 2; p = 5: t = 2, 3, 4
        assert_eq!(prime_cases(3, 5).len(), 4);
        assert!(prime_cases(3, 2).is_empty());
    }
}
